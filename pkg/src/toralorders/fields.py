"""Small finite fields F_q with table arithmetic.

Elements are encoded as integers ``0 <= c < q``.  For ``q = p**e`` the code
``c = d_0 + d_1 p + ... + d_{e-1} p^{e-1}`` stands for the residue class of
``d_0 + d_1 θ + ... + d_{e-1} θ^{e-1}`` modulo a fixed monic irreducible
polynomial of degree ``e`` over F_p (the lexicographically smallest one).
All tables are plain nested lists, which is the fastest scalar lookup in
CPython for the field sizes used here (q up to a few hundred).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from math import gcd


class FieldError(ValueError):
    """Raised for unsupported field sizes or missing roots of unity."""


def _prime_power(q: int) -> tuple[int, int]:
    if q < 2:
        raise FieldError(f"q={q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    e, r = 0, q
    while r % p == 0:
        r //= p
        e += 1
    if r != 1:
        raise FieldError(f"q={q} is not a prime power")
    return p, e


def _poly_mulmod(a, b, modulus, p):
    # a, b: coefficient lists of length e; modulus monic of degree e (list of e+1)
    e = len(modulus) - 1
    prod = [0] * (2 * e - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    for deg in range(len(prod) - 1, e - 1, -1):
        c = prod[deg]
        if c:
            for s in range(e + 1):
                prod[deg - e + s] = (prod[deg - e + s] - c * modulus[s]) % p
    return prod[:e]


def _is_irreducible(poly, p):
    # brute force: no monic factor of degree 1..deg/2
    e = len(poly) - 1
    for d in range(1, e // 2 + 1):
        for tail in product(range(p), repeat=d):
            f = list(tail) + [1]
            # polynomial remainder of poly by f
            r = list(poly)
            for deg in range(e, d - 1, -1):
                c = r[deg]
                if c:
                    for s in range(d + 1):
                        r[deg - d + s] = (r[deg - d + s] - c * f[s]) % p
            if not any(r[:d]):
                return False
    return True


def _smallest_irreducible(p, e):
    for tail in product(range(p), repeat=e):
        poly = list(reversed(tail)) + [1]
        if poly[0] and _is_irreducible(poly, p):
            return poly
    raise FieldError(f"no irreducible polynomial of degree {e} over F_{p}")


class GF:
    """The finite field with ``q`` elements.

    Use :func:`field` to get a cached instance; instances are immutable and
    safe to share.
    """

    def __init__(self, q: int):
        p, e = _prime_power(q)
        self.q, self.p, self.degree = q, p, e
        if e == 1:
            self.modulus = [0, 1]
            self.add = [[(a + b) % p for b in range(q)] for a in range(q)]
            self.mul = [[(a * b) % p for b in range(q)] for a in range(q)]
        else:
            self.modulus = _smallest_irreducible(p, e)
            digits = [self._to_digits(c) for c in range(q)]
            self.add = [
                [self._from_digits([(x + y) % p for x, y in zip(digits[a], digits[b])]) for b in range(q)]
                for a in range(q)
            ]
            self.mul = [
                [self._from_digits(_poly_mulmod(digits[a], digits[b], self.modulus, p)) for b in range(q)]
                for a in range(q)
            ]
        self.neg = [next(b for b in range(q) if self.add[a][b] == 0) for a in range(q)]
        self.sub = [[self.add[a][self.neg[b]] for b in range(q)] for a in range(q)]
        self.inv = [0] + [next(b for b in range(1, q) if self.mul[a][b] == 1) for a in range(1, q)]
        self.generator = self._find_generator()

    def __repr__(self) -> str:
        return f"GF({self.q})"

    def __eq__(self, other) -> bool:
        return isinstance(other, GF) and other.q == self.q

    def __hash__(self) -> int:
        return hash(("GF", self.q))

    def _to_digits(self, c: int) -> list[int]:
        out = []
        for _ in range(self.degree):
            c, d = divmod(c, self.p)
            out.append(d)
        return out

    def _from_digits(self, ds) -> int:
        c = 0
        for d in reversed(ds):
            c = c * self.p + d
        return c

    def digits(self, c: int) -> list[int]:
        """Coordinates of ``c`` over F_p in the power basis 1, θ, ..., θ^(e-1)."""
        return self._to_digits(c)

    def from_digits(self, ds) -> int:
        return self._from_digits([d % self.p for d in ds])

    def theta_power(self, s: int) -> int:
        """The element θ^s, i.e. the code p**s for s < degree."""
        return self.pow(self.p, s) if self.degree > 1 else 1

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv[a], -k
            if a == 0:
                raise ZeroDivisionError("0 has no inverse")
        result = 1
        while k:
            if k & 1:
                result = self.mul[result][a]
            a = self.mul[a][a]
            k >>= 1
        return result

    def element(self, value: int) -> int:
        """Embed an integer: reduced mod p for prime fields, a code otherwise.

        Negative integers are interpreted as additive inverses of the
        embedded absolute value, so ``-1`` is always minus one.
        """
        if value < 0:
            return self.neg[self.element(-value)]
        if self.degree == 1:
            return value % self.p
        if value >= self.q:
            raise FieldError(f"{value} is not an element code of GF({self.q})")
        return value

    def mult_order(self, a: int) -> int:
        if a == 0:
            raise FieldError("0 has no multiplicative order")
        n = self.q - 1
        order = n
        for d in _divisors(n):
            if self.pow(a, d) == 1:
                order = d
                break
        return order

    def _find_generator(self) -> int:
        if self.q == 2:
            return 1
        for a in range(2, self.q):
            if self.mult_order(a) == self.q - 1:
                return a
        raise FieldError("no generator found")  # pragma: no cover

    def has_root_of_unity(self, n: int) -> bool:
        return (self.q - 1) % n == 0 and self.p != 0 and n % self.p != 0

    def root_of_unity(self, n: int, exponent: int = 1) -> int:
        """``ω**exponent`` where ω = generator**((q-1)/n) is the chosen primitive n-th root."""
        if (self.q - 1) % n:
            raise FieldError(f"no primitive {n}-th root of unity in GF({self.q})")
        omega = self.pow(self.generator, (self.q - 1) // n)
        return self.pow(omega, exponent)

    def is_nth_power(self, a: int, n: int) -> bool:
        if a == 0:
            return True
        g = gcd(n, self.q - 1)
        return self.pow(a, (self.q - 1) // g) == 1

    def kummer_order(self, a: int, n: int) -> int:
        """Order of the class of ``a`` in F_q^x / (F_q^x)^n."""
        if a == 0:
            raise FieldError("0 is not a unit")
        for d in _divisors(n):
            if self.is_nth_power(self.pow(a, d), n):
                return d
        return n  # pragma: no cover

    def kummer_representative(self, a: int, n: int) -> int:
        """Smallest code in the coset a·(F_q^x)^n; a canonical class label."""
        powers = {self.pow(x, n) for x in range(1, self.q)}
        return min(self.mul[a][s] for s in powers)

    def smallest_non_power(self, n: int) -> int:
        for a in range(1, self.q):
            if not self.is_nth_power(a, n):
                return a
        raise FieldError(f"every element of GF({self.q}) is an {n}-th power")

    def elements(self) -> range:
        return range(self.q)


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def field(q: int) -> GF:
    """Cached :class:`GF` instance for ``q``."""
    return GF(q)
