"""Symbol algebras (a, b)_ζ over truncated rings and graded Hirzebruch-Jung symbols.

Everything is flattened to the base field F_q: an R-symbol over
R_N = F_q[u, v]/(u, v)^N has basis u^α v^β x^i y^j, and the HJ symbol over
the cover S_N = F_q[f1, f2]/(f1, f2)^N has basis f1^a f2^b w^c.  Both have
monomial bases, so products are single scaled basis elements.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from itertools import combinations, product
from math import gcd, lcm
from typing import Sequence

from .algebra import AlgebraError, StructureConstantAlgebra, TruncatedLocalRing, left_span
from .fields import GF, FieldError
from .hj import IntersectionData, LatticePoint, cover_generators, singularity_type
from .linalg import Vector, combine

# ------------------------------------------------------------- expressions

_TOKEN = re.compile(r"\s*(?:(?P<num>-?\d+)|(?P<name>[A-Za-z]\w*)(?:\s*\^\s*(?P<exp>\d+))?)\s*")


@dataclass(frozen=True)
class Monomial:
    """``scalar * prod(name^exp)``; the scalar is a field element code."""

    scalar: int
    exps: tuple[tuple[str, int], ...] = ()

    def exponent(self, name: str) -> int:
        return dict(self.exps).get(name, 0)

    def names(self) -> set[str]:
        return {n for n, e in self.exps if e}

    def __str__(self) -> str:
        parts = [] if self.scalar == 1 and self.exps else [str(self.scalar)]
        parts += [n if e == 1 else f"{n}^{e}" for n, e in self.exps if e]
        return "*".join(parts) or "1"


def parse_monomial(F: GF, text: str, allowed: Sequence[str] | None = None) -> Monomial:
    """Parse ``c*name^e*...``; integers are field codes, ``-k`` is minus k."""
    text = str(text).strip()
    if not text:
        raise ValueError("empty monomial expression")
    scalar = 1
    exps: dict[str, int] = {}
    for factor in text.split("*"):
        m = _TOKEN.fullmatch(factor)
        if m is None:
            raise ValueError(f"cannot parse factor {factor!r} in {text!r}")
        if m["num"] is not None:
            scalar = F.mul[scalar][F.element(int(m["num"]))]
            continue
        name = m["name"]
        if allowed is not None and name not in allowed:
            raise ValueError(f"unknown symbol {name!r}; expected one of {sorted(allowed)}")
        exps[name] = exps.get(name, 0) + int(m["exp"] or 1)
    return Monomial(scalar, tuple(sorted((n, e) for n, e in exps.items() if e)))


def parse_element(F: GF, text: str, allowed: Sequence[str] | None = None) -> list[Monomial]:
    """A sum of monomials separated by ``+``."""
    return [parse_monomial(F, t, allowed) for t in str(text).split("+")]


# --------------------------------------------------------------- R-symbols

RING_VARS = ("u", "v")


@dataclass(frozen=True)
class SymbolPresentation:
    F: GF
    n: int
    zeta_exp: int
    a: Monomial
    b: Monomial
    N: int = 6

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("symbol degree must be positive")
        if self.a.scalar == 0 or self.b.scalar == 0:
            raise ValueError("symbol entries must be nonzero")
        if not self.F.has_root_of_unity(self.n):
            raise FieldError(f"no primitive {self.n}-th root of unity in GF({self.F.q})")
        if gcd(self.zeta_exp, self.n) != 1:
            raise ValueError(f"ζ = ω^{self.zeta_exp} does not have exact order {self.n}")
        for mon in (self.a, self.b):
            extra = mon.names() - set(RING_VARS)
            if extra:
                raise ValueError(f"entries may only involve {RING_VARS}, got {sorted(extra)}")

    @property
    def zeta(self) -> int:
        return self.F.root_of_unity(self.n, self.zeta_exp)

    @property
    def ring_vars(self) -> tuple[str, ...]:
        used = self.a.names() | self.b.names()
        return RING_VARS if used else ()

    @classmethod
    def from_json(cls, F: GF, obj: dict, N: int = 6) -> "SymbolPresentation":
        return cls(F, int(obj["n"]), int(obj.get("zeta_exp", 1)),
                   parse_monomial(F, obj["a"], RING_VARS), parse_monomial(F, obj["b"], RING_VARS), N)

    def label(self) -> str:
        return f"({self.a},{self.b})_ζ, n={self.n}, ζ=ω^{self.zeta_exp}"


class SymbolAlgebra(StructureConstantAlgebra):
    """(a, b)_ζ with basis ring-monomial · x^i y^j, relations x^n=a, y^n=b, yx=ζxy."""

    def __init__(self, pres: SymbolPresentation):
        F, n = pres.F, pres.n
        self.presentation = pres
        self.ring = TruncatedLocalRing(F, pres.ring_vars, pres.N if pres.ring_vars else 1)
        mons = self.ring.monomials
        zeta_pow = [F.pow(pres.zeta, e) for e in range(n)]
        a_exp = tuple(pres.a.exponent(v) for v in self.ring.names)
        b_exp = tuple(pres.b.exponent(v) for v in self.ring.names)

        def rule(p, q):
            r1, i, j = divmod(p // n, n) + (p % n,)
            r2, k, l = divmod(q // n, n) + (q % n,)
            c = zeta_pow[(j * k) % n]
            mono = self.ring.monomial_product(mons[r1], mons[r2])
            if mono is None:
                return {}
            xi, yj = i + k, j + l
            if xi >= n:
                xi -= n
                c = F.mul[c][pres.a.scalar]
                mono = self.ring.monomial_product(mono, a_exp)
            if mono is not None and yj >= n:
                yj -= n
                c = F.mul[c][pres.b.scalar]
                mono = self.ring.monomial_product(mono, b_exp)
            if mono is None:
                return {}
            return {(self.ring.index[mono] * n + xi) * n + yj: c}

        labels = [(mon, i, j) for mon in mons for i in range(n) for j in range(n)]
        super().__init__(
            F, labels, rule, {0: 1}, monomial=True,
            degrees=[sum(mon) for mon in mons for _ in range(n * n)], name=f"symbol {pres.label()}",
        )

    def basis_index(self, mono: tuple[int, ...], i: int = 0, j: int = 0) -> int:
        n = self.presentation.n
        return (self.ring.index[mono] * n + i) * n + j

    def element(self, text: str) -> Vector:
        """Parse a sum of monomials in u, v, x, y (written in that order)."""
        n = self.presentation.n
        terms = []
        for mon in parse_element(self.F, text, ("u", "v", "x", "y")):
            ring_exp = tuple(mon.exponent(v) for v in self.ring.names)
            if sum(ring_exp) and not self.ring.names:
                raise ValueError("coefficient ring is a field; u, v are not available")
            vec = self._ring_vector(Monomial(1, tuple(zip(self.ring.names, ring_exp))))
            vec = self.mul(vec, self.pow(self._gen_x, mon.exponent("x")))
            vec = self.mul(vec, self.pow(self._gen_y, mon.exponent("y")))
            terms.append((mon.scalar, vec))
        return combine(self.F, terms)

    def _ring_vector(self, mon: Monomial) -> Vector:
        e = tuple(mon.exponent(v) for v in self.ring.names)
        if sum(e) >= self.ring.N:
            return {}
        return {self.ring.index[e] * self.presentation.n ** 2: mon.scalar}

    @property
    def _gen_x(self) -> Vector:
        # for n = 1 the relation x^1 = a makes x a ring element
        n = self.presentation.n
        return {n: 1} if n > 1 else self._ring_vector(self.presentation.a)

    @property
    def _gen_y(self) -> Vector:
        return {1: 1} if self.presentation.n > 1 else self._ring_vector(self.presentation.b)

    @property
    def x(self) -> Vector:
        return self.element("x")

    @property
    def y(self) -> Vector:
        return self.element("y")


def build_symbol(pres: SymbolPresentation) -> SymbolAlgebra:
    return SymbolAlgebra(pres)


def symbol_over_field(F: GF, n: int, a: int, b: int, zeta_exp: int = 1) -> SymbolAlgebra:
    return SymbolAlgebra(SymbolPresentation(F, n, zeta_exp, Monomial(F.element(a)), Monomial(F.element(b)), 1))


# ------------------------------------------------------- tame ramification


@dataclass(frozen=True)
class RamificationDatum:
    """Class of the tame symbol in κ(p)^×/n-th powers, κ(p) = F_q((w)).

    The class of ``s·w^e`` is recorded as (canonical scalar coset label,
    e mod n); ``degree`` is the order of that class.
    """

    prime: str
    scalar_class: int
    exponent: int
    degree: int
    n: int

    @property
    def is_trivial(self) -> bool:
        return self.degree == 1


def residue_class(F: GF, n: int, prime: str, scalar: int, exponent: int) -> RamificationDatum:
    e = exponent % n
    deg = lcm(F.kummer_order(scalar, n), n // gcd(e, n))
    return RamificationDatum(prime, F.kummer_representative(scalar, n), e, deg, n)


def tame_ramification(pres: SymbolPresentation, prime: str) -> RamificationDatum:
    """Tame symbol of (a, b) at the divisor ``prime`` ∈ {"u", "v"}.

    Oriented as ε·b^{v(a)}·a^{-v(b)} with ε = (-1)^{v(a)v(b)}, so that (u, a)
    at (u) is the class of a.  The other variable survives as the uniformiser
    of the residue field F_q((other)).
    """
    if prime not in RING_VARS:
        raise ValueError(f"prime must be one of {RING_VARS}")
    other = "v" if prime == "u" else "u"
    F, n = pres.F, pres.n
    a, b = pres.a, pres.b
    va, vb = a.exponent(prime), b.exponent(prime)
    sign = F.neg[1] if (va * vb) % 2 else 1
    s = F.mul[sign][F.mul[F.pow(b.scalar, va)][F.pow(a.scalar, -vb)]]
    e = va * b.exponent(other) - vb * a.exponent(other)
    return residue_class(F, n, prime, s, e)


def is_zero_divisor(A: StructureConstantAlgebra, a: Vector) -> bool:
    return bool(a) and left_span(A, [a]).dim < A.dim


@dataclass
class SplitSearch:
    witness: Vector | None
    tried: int
    budget: int
    seed: int


def split_witness(A: StructureConstantAlgebra, seed: int = 0, budget: int = 5000) -> SplitSearch:
    """Find a nonzero non-invertible element of an algebra over a finite field.

    Small supports are tried exhaustively first (all-ones coefficients, then
    all coefficient choices), then seeded random elements until the budget
    runs out.
    """
    F, n = A.F, A.dim
    if isinstance(A, SymbolAlgebra) and A.ring.names:
        raise AlgebraError("split_witness needs a symbol over a finite field")
    tried = 0

    def candidates():
        for size in range(1, n + 1):
            for supp in combinations(range(n), size):
                yield {i: 1 for i in supp}
        for size in range(1, n + 1):
            for supp in combinations(range(n), size):
                for coeffs in product(range(1, F.q), repeat=size):
                    if any(c != 1 for c in coeffs):
                        yield dict(zip(supp, coeffs))
        rng = random.Random(seed)
        while True:
            v = {i: c for i in range(n) if (c := rng.randrange(F.q))}
            if v:
                yield v

    for v in candidates():
        if tried >= budget:
            break
        tried += 1
        if is_zero_divisor(A, v):
            return SplitSearch(v, tried, budget, seed)
    return SplitSearch(None, tried, budget, seed)


def format_element(A: StructureConstantAlgebra, v: Vector) -> str:
    def lab(k):
        l = A.labels[k]
        if isinstance(A, SymbolAlgebra):
            mono, i, j = l
            names = list(zip(A.ring.names, mono)) + [("x", i), ("y", j)]
        elif isinstance(A, HJSymbolAlgebra):
            (a, b), c = l
            names = [("f1", a), ("f2", b), ("w", c)]
        else:
            return str(l)
        s = "*".join(nm if e == 1 else f"{nm}^{e}" for nm, e in names if e)
        return s or "1"

    terms = []
    for k in sorted(v):
        c, l = v[k], lab(k)
        terms.append(l if c == 1 else (f"{c}" if l == "1" else f"{c}*{l}"))
    return " + ".join(terms) or "0"


# ----------------------------------------------------------- graded cover


@dataclass
class GradedCover:
    """Desk model S_N = F[f1, f2]/(f1, f2)^N of the cover, Z/m-graded."""

    data: IntersectionData
    F: GF
    N: int
    m: int
    k: int
    l: int
    ring: TruncatedLocalRing

    @property
    def f1_grade(self) -> int:
        return (self.m - 1) % self.m

    def grade(self, mono: tuple[int, int]) -> int:
        a, b = mono
        return ((self.m - 1) * a + self.l * b) % self.m

    def lattice_point(self, mono: tuple[int, int]) -> LatticePoint:
        """Position of f1^a f2^b in the cone: a·(k/m, 1) + b·(1/m, 0)."""
        a, b = mono
        return LatticePoint(a * self.k + b, a, self.m)

    def invariant_basis(self) -> list[tuple[int, int]]:
        return [mono for mono in self.ring.monomials if self.grade(mono) == 0]

    def r_cone_basis(self) -> list[tuple[int, int]]:
        """Integral R-cone points (i, j) turned into monomials, total degree < N."""
        m, k = self.m, self.k
        out = []
        for j in range(self.N):
            for i in range(0, (self.N * (k + 1)) // m + self.N + 2):
                b = m * i - k * j
                if b < 0:
                    continue
                if j + b < self.N:
                    out.append((j, b))
        return sorted(out, key=self.ring.index.__getitem__)


def build_cover(data: IntersectionData, F: GF, N: int = 6) -> GradedCover:
    t = singularity_type(data)
    gens = cover_generators(data)
    return GradedCover(data, F, N, t.m, t.k, gens.l, TruncatedLocalRing(F, ("f1", "f2"), N))


# ------------------------------------------------------ cyclic extension


@dataclass(frozen=True)
class CyclicExtension:
    """F_q(g^{1/m}) with eigenbasis g^{c/m}; g of exact order m mod m-th powers."""

    F: GF
    m: int
    g: int

    def __post_init__(self):
        if (self.F.q - 1) % self.m:
            raise FieldError(f"no primitive {self.m}-th root of unity in GF({self.F.q})")
        if self.g == 0 or self.F.kummer_order(self.g, self.m) != self.m:
            raise ValueError(f"{self.g} does not generate a degree-{self.m} Kummer extension of GF({self.F.q})")

    @classmethod
    def default(cls, F: GF, m: int) -> "CyclicExtension":
        """Smallest code of exact Kummer order m."""
        if (F.q - 1) % m:
            raise FieldError(f"no primitive {m}-th root of unity in GF({F.q})")
        for a in range(1, F.q):
            if F.kummer_order(a, m) == m:
                return cls(F, m, a)
        raise FieldError(f"GF({F.q}) has no element of Kummer order {m}")  # pragma: no cover

    @property
    def omega(self) -> int:
        return self.F.root_of_unity(self.m)


class HJSymbolAlgebra(StructureConstantAlgebra):
    """(S, α): basis f1^a f2^b w^c with w^m = g and w·s = ω^{deg s}·s·w."""

    def __init__(self, S: GradedCover, E: CyclicExtension):
        if S.F != E.F:
            raise ValueError("cover and extension must share the base field")
        if S.m != E.m:
            raise ValueError(f"extension degree {E.m} differs from the singularity order {S.m}")
        F, m = S.F, S.m
        self.cover, self.extension = S, E
        ring = S.ring
        mons = ring.monomials
        omega_pow = [F.pow(E.omega, e) for e in range(m)]
        grades = [S.grade(mono) for mono in mons]

        def rule(p, q):
            r1, c1 = divmod(p, m)
            r2, c2 = divmod(q, m)
            mono = ring.monomial_product(mons[r1], mons[r2])
            if mono is None:
                return {}
            coef = omega_pow[(c1 * grades[r2]) % m]
            c = c1 + c2
            if c >= m:
                c -= m
                coef = F.mul[coef][E.g]
            return {ring.index[mono] * m + c: coef}

        super().__init__(
            F, [(mono, c) for mono in mons for c in range(m)], rule, {0: 1}, monomial=True,
            degrees=[sum(mono) for mono in mons for _ in range(m)],
            name=f"HJ symbol type ({S.m},{S.k}) g={E.g}",
        )

    def basis_index(self, mono: tuple[int, int], c: int = 0) -> int:
        return self.cover.ring.index[mono] * self.cover.m + c

    def element(self, text: str) -> Vector:
        terms = []
        for mon in parse_element(self.F, text, ("f1", "f2", "w")):
            a, b, c = mon.exponent("f1"), mon.exponent("f2"), mon.exponent("w")
            vec = {self.basis_index((a, b), 0): 1} if a + b < self.cover.N else {}
            w = {1: 1} if self.cover.m > 1 else self.scalar(self.extension.g)
            vec = self.mul(vec, self.pow(w, c))
            terms.append((mon.scalar, vec))
        return combine(self.F, terms)

    @property
    def f1(self) -> Vector:
        return self.element("f1")

    @property
    def f2(self) -> Vector:
        return self.element("f2")

    @property
    def w(self) -> Vector:
        return self.element("w")


def build_hj_symbol(S: GradedCover, E: CyclicExtension) -> HJSymbolAlgebra:
    return HJSymbolAlgebra(S, E)
