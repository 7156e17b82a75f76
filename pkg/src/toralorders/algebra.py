"""Finite-dimensional associative algebras given by structure constants.

An algebra is a basis plus a rule ``(i, j) -> e_i e_j`` returning a sparse
vector; products are cached on first use, so large monomial algebras (tens
of thousands of basis pairs) are only expanded where a computation touches
them.  Coefficients live in a :class:`~toralorders.fields.GF`.  Truncated
local rings are flattened to their base field from the start.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from itertools import product
from math import isqrt
from typing import Callable, Iterable, Sequence

import numpy as np

from .fields import GF, field as get_field
from .linalg import Subspace, Vector, axpy, combine, kernel, kernel_of_map, scale

Rule = Callable[[int, int], Vector]


class AlgebraError(ValueError):
    """Precondition failures: unsupported rings, non-normal elements, etc."""


class StructureConstantAlgebra:
    def __init__(
        self,
        F: GF,
        labels: Sequence,
        rule: Rule,
        one: Vector,
        *,
        monomial: bool = False,
        degrees: Sequence[int] | None = None,
        name: str = "",
    ):
        self.F = F
        self.labels = list(labels)
        self.dim = len(self.labels)
        self._rule = rule
        self._cache: dict[tuple[int, int], Vector] = {}
        self.one = dict(one)
        self.monomial = monomial
        self.degrees = list(degrees) if degrees is not None else [0] * self.dim
        self.name = name

    def __repr__(self) -> str:
        return f"<{self.name or 'algebra'} dim={self.dim} over GF({self.F.q})>"

    def basis_product(self, i: int, j: int) -> Vector:
        key = (i, j)
        v = self._cache.get(key)
        if v is None:
            v = self._rule(i, j)
            self._cache[key] = v
        return v

    def mul(self, a: Vector, b: Vector) -> Vector:
        F = self.F
        out: Vector = {}
        mul, add = F.mul, F.add
        for i, ai in a.items():
            for j, bj in b.items():
                c = mul[ai][bj]
                mul_c = mul[c]
                for k, v in self.basis_product(i, j).items():
                    s = add[out.get(k, 0)][mul_c[v]]
                    if s:
                        out[k] = s
                    else:
                        out.pop(k, None)
        return out

    def mul_many(self, *elems: Vector) -> Vector:
        out = self.one
        for e in elems:
            out = self.mul(out, e)
        return out

    def pow(self, a: Vector, k: int) -> Vector:
        result, base = dict(self.one), dict(a)
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def add(self, a: Vector, b: Vector) -> Vector:
        return axpy(self.F, a, 1, b)

    def sub(self, a: Vector, b: Vector) -> Vector:
        return axpy(self.F, a, self.F.neg[1], b)

    def scalar(self, c: int) -> Vector:
        return scale(self.F, c, self.one)

    def basis(self) -> list[Vector]:
        return [{i: 1} for i in range(self.dim)]

    def index(self, label) -> int:
        return self.labels.index(label)

    def table(self) -> list[list[Vector]]:
        return [[self.basis_product(i, j) for j in range(self.dim)] for i in range(self.dim)]

    def monomial_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """(target index or -1, coefficient) arrays for a monomial basis."""
        if not self.monomial:
            raise AlgebraError("algebra is not flagged monomial")
        idx = np.full((self.dim, self.dim), -1, dtype=np.int64)
        coef = np.zeros((self.dim, self.dim), dtype=np.int64)
        for i in range(self.dim):
            for j in range(self.dim):
                v = self.basis_product(i, j)
                if len(v) > 1:
                    raise AlgebraError("product of basis elements is not a monomial")
                for k, c in v.items():
                    idx[i, j], coef[i, j] = k, c
        return idx, coef


def from_table(F: GF, table, one: Vector | None = None, labels=None, name: str = "") -> StructureConstantAlgebra:
    """Build from a dense ``table[i][j] = [coeff_0, ..., coeff_{n-1}]``."""
    n = len(table)
    sparse = [[{k: F.element(int(c)) for k, c in enumerate(table[i][j]) if F.element(int(c))} for j in range(n)] for i in range(n)]
    if one is None:
        one = _find_one(F, sparse)
    monomial = all(len(v) <= 1 for row in sparse for v in row)
    return StructureConstantAlgebra(
        F, labels or list(range(n)), lambda i, j: sparse[i][j], one, monomial=monomial, name=name
    )


def _find_one(F: GF, sparse) -> Vector:
    n = len(sparse)
    # solve sum_a x_a e_a e_b = e_b and e_b e_a x_a = e_b for all b
    rows, rhs = [], []
    for b in range(n):
        for k in range(n):
            rows.append({a: sparse[a][b].get(k, 0) for a in range(n) if sparse[a][b].get(k, 0)})
            rhs.append(1 if k == b else 0)
            rows.append({a: sparse[b][a].get(k, 0) for a in range(n) if sparse[b][a].get(k, 0)})
            rhs.append(1 if k == b else 0)
    aug = [r | {n: F.neg[c]} if c else r for r, c in zip(rows, rhs)]
    sols = [v for v in kernel(F, aug, n + 1) if v.get(n)]
    if not sols:
        raise AlgebraError("multiplication table has no unit element")
    v = sols[0]
    inv = F.inv[v[n]]
    return {k: F.mul[inv][c] for k, c in v.items() if k != n}


def to_json(A: StructureConstantAlgebra) -> dict:
    F = A.F
    table = []
    for i in range(A.dim):
        row = []
        for j in range(A.dim):
            v = A.basis_product(i, j)
            row.append([v.get(k, 0) for k in range(A.dim)])
        table.append(row)
    return {
        "dim": A.dim,
        "ring": {"kind": "field", "q": F.q, "p": F.p, "modulus": F.modulus},
        "labels": [str(l) for l in A.labels],
        "one": [A.one.get(k, 0) for k in range(A.dim)],
        "table": table,
    }


def from_json(obj: dict) -> StructureConstantAlgebra:
    ring = obj.get("ring", {})
    if ring.get("kind", "field") != "field":
        raise AlgebraError("only finite-field coefficient rings serialize; flatten truncated rings first")
    F = get_field(int(ring["q"]))
    if int(obj["dim"]) != len(obj["table"]):
        raise AlgebraError("dim does not match the table size")
    one = None
    if "one" in obj:
        one = {k: F.element(int(c)) for k, c in enumerate(obj["one"]) if int(c)}
    return from_table(F, obj["table"], one, obj.get("labels"))


class TruncatedLocalRing:
    """F_q[v_1, ..., v_s] / (v_1, ..., v_s)^N with the monomial basis."""

    def __init__(self, F: GF, names: Sequence[str], N: int):
        if N < 1:
            raise AlgebraError("truncation order must be positive")
        self.F, self.names, self.N = F, tuple(names), N
        s = len(self.names)
        self.monomials = sorted(
            (e for e in product(range(N), repeat=s) if sum(e) < N), key=lambda e: (sum(e), tuple(-x for x in e))
        )
        self.index = {e: i for i, e in enumerate(self.monomials)}

    @property
    def dim(self) -> int:
        return len(self.monomials)

    def monomial_product(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...] | None:
        c = tuple(x + y for x, y in zip(a, b))
        return c if sum(c) < self.N else None

    def algebra(self) -> StructureConstantAlgebra:
        mons = self.monomials

        def rule(i, j):
            c = self.monomial_product(mons[i], mons[j])
            return {} if c is None else {self.index[c]: 1}

        zero = tuple([0] * len(self.names))
        return StructureConstantAlgebra(
            self.F, mons, rule, {self.index[zero]: 1}, monomial=True,
            degrees=[sum(e) for e in mons], name=f"GF({self.F.q})[{','.join(self.names)}]/(..)^{self.N}",
        )


def verify_associativity(A: StructureConstantAlgebra, sample: int | None = None, seed: int = 0) -> bool:
    """(e_a e_b) e_c == e_a (e_b e_c) on all basis triples, or a seeded sample."""
    if A.monomial and sample is None:
        return _monomial_associative(A)
    triples: Iterable = product(range(A.dim), repeat=3)
    if sample is not None:
        rng = random.Random(seed)
        triples = [(rng.randrange(A.dim), rng.randrange(A.dim), rng.randrange(A.dim)) for _ in range(sample)]
    for a, b, c in triples:
        ea, eb, ec = {a: 1}, {b: 1}, {c: 1}
        if A.mul(A.basis_product(a, b), ec) != A.mul(ea, A.basis_product(b, c)):
            return False
    return True


def _monomial_associative(A: StructureConstantAlgebra) -> bool:
    idx, coef = A.monomial_arrays()
    mul = np.array(A.F.mul, dtype=np.int64)
    n = A.dim
    for a in range(n):
        # left: (e_a e_b) e_c
        k1 = idx[a]  # over b
        c1 = coef[a]
        safe1 = np.where(k1 >= 0, k1, 0)
        k_left = np.where(k1[:, None] >= 0, idx[safe1], -1)
        c_left = np.where(k_left >= 0, mul[c1[:, None], coef[safe1]], 0)
        # right: e_a (e_b e_c)
        safe2 = np.where(idx >= 0, idx, 0)
        k_right = np.where(idx >= 0, idx[a][safe2], -1)
        c_right = np.where(k_right >= 0, mul[coef, coef[a][safe2]], 0)
        k_left = np.where(c_left == 0, -1, k_left)
        k_right = np.where(c_right == 0, -1, k_right)
        if not (np.array_equal(k_left, k_right) and np.array_equal(np.where(k_left >= 0, c_left, 0), np.where(k_right >= 0, c_right, 0))):
            return False
    return True


# ---------------------------------------------------------------- subspaces


def left_span(A: StructureConstantAlgebra, elems: Iterable[Vector], space: Iterable[Vector] | None = None) -> Subspace:
    """span{x·s : x in elems, s in space} (space defaults to the basis)."""
    space = A.basis() if space is None else list(space)
    elems = list(elems)
    return Subspace(A.F, A.dim, (A.mul(x, s) for x in elems for s in space))


def right_span(A: StructureConstantAlgebra, elems: Iterable[Vector], space: Iterable[Vector] | None = None) -> Subspace:
    """span{s·x : s in space, x in elems}."""
    space = A.basis() if space is None else list(space)
    elems = list(elems)
    return Subspace(A.F, A.dim, (A.mul(s, x) for x in elems for s in space))


def ideal_product(A: StructureConstantAlgebra, I: Subspace, J: Subspace) -> Subspace:
    return Subspace(A.F, A.dim, (A.mul(a, b) for a in I.basis() for b in J.basis()))


def two_sided_ideal(A: StructureConstantAlgebra, gens: Iterable[Vector]) -> Subspace:
    S = Subspace(A.F, A.dim, gens)
    frontier = S.basis()
    while frontier:
        new = []
        for v in frontier:
            for b in range(A.dim):
                for w in (A.mul({b: 1}, v), A.mul(v, {b: 1})):
                    if S.add(w):
                        new.append(w)
        frontier = new
    return S


def is_left_ideal(A: StructureConstantAlgebra, S: Subspace) -> bool:
    return all(A.mul({b: 1}, v) in S for v in S.basis() for b in range(A.dim))


def is_right_ideal(A: StructureConstantAlgebra, S: Subspace) -> bool:
    return all(A.mul(v, {b: 1}) in S for v in S.basis() for b in range(A.dim))


@dataclass
class SubspaceIdeal:
    space: Subspace
    is_left_ideal: bool
    is_right_ideal: bool

    @property
    def is_two_sided(self) -> bool:
        return self.is_left_ideal and self.is_right_ideal

    @property
    def dim(self) -> int:
        return self.space.dim


def classify_subspace(A: StructureConstantAlgebra, S: Subspace) -> SubspaceIdeal:
    return SubspaceIdeal(S, is_left_ideal(A, S), is_right_ideal(A, S))


@dataclass
class Quotient:
    algebra: StructureConstantAlgebra
    ideal: Subspace
    parent: StructureConstantAlgebra
    kept: list[int]

    def project(self, v: Vector) -> Vector:
        r = self.ideal.reduce(v)
        pos = self._pos
        return {pos[k]: c for k, c in r.items()}

    def lift(self, v: Vector) -> Vector:
        return {self.kept[k]: c for k, c in v.items()}

    @property
    def _pos(self) -> dict[int, int]:
        return {k: i for i, k in enumerate(self.kept)}


def quotient(A: StructureConstantAlgebra, I: Subspace, name: str = "") -> Quotient:
    """A/I for a two-sided ideal I, on the non-pivot basis elements of I."""
    kept = I.complement_indices()
    pos = {k: i for i, k in enumerate(kept)}

    def rule(i, j):
        r = I.reduce(A.basis_product(kept[i], kept[j]))
        return {pos[k]: c for k, c in r.items()}

    one = {pos[k]: c for k, c in I.reduce(A.one).items()}
    Q = StructureConstantAlgebra(
        A.F, [A.labels[k] for k in kept], rule, one,
        monomial=A.monomial and I.is_coordinate(),
        degrees=[A.degrees[k] for k in kept], name=name or f"{A.name}/I",
    )
    return Quotient(Q, I, A, kept)


def centralizer(A: StructureConstantAlgebra, elems: Iterable[Vector]) -> Subspace:
    """{a : a x = x a for all x in elems}."""
    F = A.F
    elems = list(elems)
    images = []
    # map a -> ([a, x])_x stacked into one long vector
    for b in range(A.dim):
        img: Vector = {}
        for t, x in enumerate(elems):
            comm = A.sub(A.mul({b: 1}, x), A.mul(x, {b: 1}))
            for k, c in comm.items():
                img[t * A.dim + k] = c
        images.append(img)
    return Subspace(F, A.dim, kernel_of_map(F, images))


def center(A: StructureConstantAlgebra) -> Subspace:
    return centralizer(A, A.basis())


def is_normal_element(A: StructureConstantAlgebra, t: Vector) -> bool:
    return left_span(A, [t]) == right_span(A, [t])


def nilpotency_index(A: StructureConstantAlgebra, t: Vector) -> int | None:
    """Least k with t^k = 0, or None if t is not nilpotent."""
    x, k = dict(t), 1
    while x:
        if k > A.dim:
            return None
        x = A.mul(x, t)
        k += 1
    return k


def is_unit(A: StructureConstantAlgebra, a: Vector) -> bool:
    return left_span(A, [a]).dim == A.dim


# ------------------------------------------------------------- the radical


def restriction_of_scalars(A: StructureConstantAlgebra):
    """A as an algebra over the prime field; returns (A_p, to_p, from_p)."""
    F = A.F
    e = F.degree
    if e == 1:
        return A, (lambda v: dict(v)), (lambda v: dict(v))
    Fp = get_field(F.p)
    theta = [F.theta_power(s) for s in range(e)]

    def expand(c: int, k: int, out: Vector):
        for s, d in enumerate(F.digits(c)):
            if d:
                out[k * e + s] = d

    def rule(a, b):
        i, s = divmod(a, e)
        j, t = divmod(b, e)
        ts = F.mul[theta[s]][theta[t]]
        out: Vector = {}
        for k, c in A.basis_product(i, j).items():
            expand(F.mul[ts][c], k, out)
        return out

    def to_p(v):
        out: Vector = {}
        for k, c in v.items():
            expand(c, k, out)
        return out

    def from_p(v):
        grouped: dict[int, list[int]] = {}
        for idx, d in v.items():
            k, s = divmod(idx, e)
            grouped.setdefault(k, [0] * e)[s] = d
        out = {k: F.from_digits(ds) for k, ds in grouped.items()}
        return {k: c for k, c in out.items() if c}

    Ap = StructureConstantAlgebra(
        Fp, [(l, s) for l in A.labels for s in range(e)], rule, to_p(A.one),
        degrees=[d for d in A.degrees for _ in range(e)], name=f"{A.name}|F_{F.p}",
    )
    return Ap, to_p, from_p


def _regular_stack(A: StructureConstantAlgebra) -> np.ndarray:
    n = A.dim
    L = np.zeros((n, n, n), dtype=np.int64)
    for k in range(n):
        for j in range(n):
            for i, c in A.basis_product(k, j).items():
                L[k, i, j] = c
    return L


def _matpow_mod(M: np.ndarray, e: int, mod: int) -> np.ndarray:
    result = np.eye(M.shape[0], dtype=np.int64)
    base = M % mod
    while e:
        if e & 1:
            result = (result @ base) % mod
        base = (base @ base) % mod
        e >>= 1
    return result


def _radical_prime(A: StructureConstantAlgebra) -> Subspace:
    """Radical over F_p: trace-form kernel refined by the p-power trace layers.

    Layer i uses g_i(a) = Tr(â^(p^i)) / p^i mod p for an integral lift â of
    the regular representation; on the previous layer g_i is linear and the
    next layer is {a : g_i(a b) = 0 for all b}.  After floor(log_p n) layers
    what remains is the radical.
    """
    F, n, p = A.F, A.dim, A.F.p
    if n == 0:
        return Subspace(F, 0)
    L = _regular_stack(A)
    tau = [int(np.trace(L[k])) % p for k in range(n)]
    rows = []
    for b in range(n):
        rows.append({a: s for a in range(n) if (s := sum(c * tau[k] for k, c in A.basis_product(a, b).items()) % p)})
    # rows[b][a] = Tr(e_a e_b); kernel in a
    I = Subspace(F, n, kernel(F, rows, n))
    if p > n or I.dim == 0:
        return I
    layer, pi = 1, p
    while pi <= n and I.dim:
        mod = pi * p
        basis = I.basis()
        G = []
        for t in range(n):
            col = {}
            for s, a in enumerate(basis):
                c = A.mul(a, {t: 1})
                M = np.zeros((n, n), dtype=np.int64)
                for k, ck in c.items():
                    M += ck * L[k]
                M %= p
                g = (int(np.trace(_matpow_mod(M, pi, mod))) % mod) // pi
                if g % p:
                    col[s] = g % p
            G.append(col)
        coeffs = kernel(F, G, len(basis))
        I = Subspace(F, n, (combine(F, ((c, basis[s]) for s, c in x.items())) for x in coeffs))
        layer += 1
        pi *= p
    return I


# above this size the radical first divides out central nilpotents
CENTRAL_SHRINK_DIM = 24


def radical(A: StructureConstantAlgebra, normal_element: Vector | None = None) -> Subspace:
    """The Jacobson radical (largest nilpotent two-sided ideal).

    With ``normal_element`` t, which must be normal and nilpotent, tA is a
    nilpotent ideal inside the radical; the radical is then computed on the
    (usually much smaller) quotient A/tA and pulled back.
    """
    if normal_element is not None:
        tA = left_span(A, [normal_element])
        if tA != right_span(A, [normal_element]):
            raise AlgebraError("hint element is not normal")
        if nilpotency_index(A, normal_element) is None:
            raise AlgebraError("hint element is not nilpotent")
        Q = quotient(A, tA)
        RQ = radical(Q.algebra)
        J = tA.copy()
        J.extend(Q.lift(v) for v in RQ.basis())
        return J
    if A.dim > CENTRAL_SHRINK_DIM:
        # central nilpotents generate a nilpotent ideal; shrink before the trace layers
        N = central_nilpotent_ideal(A)
        if N.dim:
            Q = quotient(A, N)
            J = N.copy()
            J.extend(Q.lift(v) for v in radical(Q.algebra).basis())
            return J
    Ap, to_p, from_p = restriction_of_scalars(A)
    Rp = _radical_prime(Ap)
    return Subspace(A.F, A.dim, (from_p(v) for v in Rp.basis()))


def is_semisimple(A: StructureConstantAlgebra) -> bool:
    return radical(A).dim == 0


def is_nilpotent_ideal(A: StructureConstantAlgebra, I: Subspace) -> bool:
    P = I
    for _ in range(A.dim + 1):
        if P.dim == 0:
            return True
        nxt = ideal_product(A, P, I)
        if nxt.dim == P.dim:
            return False
        P = nxt
    return P.dim == 0


# --------------------------------------------------------- Wedderburn data


@dataclass
class WedderburnBlock:
    dim: int
    center_degree: int
    matrix_size: int
    idempotent: Vector = dc_field(repr=False)


def _split_idempotents(A: StructureConstantAlgebra, B: list[Vector], rng: random.Random) -> list[Vector]:
    """Primitive idempotents of the split commutative algebra spanned by B."""
    F = A.F
    target = len(B)
    done: list[Vector] = []
    pending = [dict(A.one)]
    while pending:
        e = pending.pop()
        eB = Subspace(F, A.dim, (A.mul(e, b) for b in B))
        if eB.dim == 1:
            done.append(e)
            continue
        for _ in range(200):
            x = A.mul(e, combine(F, ((rng.randrange(F.q), b) for b in B)))
            parts = []
            for c in range(F.q):
                y = A.sub(x, scale(F, c, e))
                ec = A.sub(e, A.pow(y, F.q - 1)) if y else dict(e)
                if ec:
                    parts.append(ec)
            if len(parts) > 1:
                pending.extend(parts)
                break
        else:  # pragma: no cover
            raise AlgebraError("idempotent splitting did not converge")
    if len(done) != target:  # pragma: no cover
        raise AlgebraError("idempotent count mismatch")
    return done


def central_idempotents(A: StructureConstantAlgebra, seed: int = 0) -> list[Vector]:
    """Primitive central idempotents of a semisimple algebra."""
    F = A.F
    Z = center(A).basis()
    # fixed points of x -> x^q on the center span the idempotents
    images = [A.sub(A.pow(z, F.q), z) for z in Z]
    coeffs = kernel_of_map(F, images)
    B = [combine(F, ((c, Z[s]) for s, c in x.items())) for x in coeffs]
    return _split_idempotents(A, B, random.Random(seed))


def wedderburn_decompose(A: StructureConstantAlgebra, seed: int = 0, check: bool = True) -> list[WedderburnBlock]:
    """Blocks M_r(F_{q^c}) of a semisimple algebra: (dim, c, r, central idempotent)."""
    if check and not is_semisimple(A):
        raise AlgebraError("algebra is not semisimple")
    Zs = center(A)
    blocks = []
    for e in central_idempotents(A, seed):
        dim = left_span(A, [e]).dim
        c = Subspace(A.F, A.dim, (A.mul(e, z) for z in Zs.basis())).dim
        r = isqrt(dim // c)
        if r * r * c != dim:  # pragma: no cover
            raise AlgebraError(f"block of dim {dim} over centre of degree {c} is not a matrix algebra")
        blocks.append(WedderburnBlock(dim, c, r, e))
    blocks.sort(key=lambda b: sorted(b.idempotent.items()))
    return blocks


def lift_idempotent(A: StructureConstantAlgebra, x: Vector, max_iter: int = 64) -> Vector:
    for _ in range(max_iter):
        x2 = A.mul(x, x)
        if x2 == x:
            return x
        x3 = A.mul(x2, x)
        F = A.F
        x = combine(F, ((F.element(3), x2), (F.element(-2), x3)))
    raise AlgebraError("idempotent lifting did not converge")


@dataclass
class Simple:
    block: int
    dim: int
    center_degree: int
    matrix_size: int


def simples_with_action(A: StructureConstantAlgebra, t: Vector, seed: int = 0) -> tuple[list[Simple], list[int]]:
    """Simple modules of A/rad A and the permutation induced by t.

    ``perm[i] = j`` when t e_i ≡ e_j t, i.e. conjugation by t carries block i
    to block j; for a uniformiser of a normal order this is one cycle.
    """
    if not is_normal_element(A, t):
        raise AlgebraError("t is not normal: tA != At")
    hint = t if nilpotency_index(A, t) is not None else None
    J = radical(A, normal_element=hint)
    Q = quotient(A, J)
    blocks = wedderburn_decompose(Q.algebra, seed)
    lifts = [Q.lift(b.idempotent) for b in blocks]
    Jb = J.basis()
    W = Subspace(A.F, A.dim, [A.mul(t, j) for j in Jb] + [A.mul(j, t) for j in Jb])
    right = [W.reduce(A.mul(e, t)) for e in lifts]
    perm = []
    for e in lifts:
        v = W.reduce(A.mul(t, e))
        matches = [j for j, w in enumerate(right) if w == v]
        if len(matches) != 1:
            raise AlgebraError("t-action on Wedderburn blocks is not a permutation")
        perm.append(matches[0])
    simples = [Simple(i, b.matrix_size * b.center_degree, b.center_degree, b.matrix_size) for i, b in enumerate(blocks)]
    return simples, perm


def cycle_type(perm: Sequence[int]) -> list[int]:
    seen, out = set(), []
    for i in range(len(perm)):
        if i in seen:
            continue
        n, j = 0, i
        while j not in seen:
            seen.add(j)
            j = perm[j]
            n += 1
        out.append(n)
    return sorted(out, reverse=True)


def is_hereditary_finite(A: StructureConstantAlgebra, seed: int = 0, normal_element: Vector | None = None) -> bool:
    """rad A is projective: its dimension equals that of its projective cover."""
    J = radical(A, normal_element=normal_element)
    if J.dim == 0:
        return True
    J2 = ideal_product(A, J, J)
    Q = quotient(A, J)
    blocks = wedderburn_decompose(Q.algebra, seed, check=False)
    cover = 0
    for b in blocks:
        e = lift_idempotent(A, Q.lift(b.idempotent))
        top_part = Subspace(A.F, A.dim, J2.basis())
        top_part.extend(A.mul(j, e) for j in J.basis())
        simple_dim = b.matrix_size * b.center_degree
        mult, rem = divmod(top_part.dim - J2.dim, simple_dim)
        if rem:  # pragma: no cover
            raise AlgebraError("top of the radical is not a sum of simples")
        proj_dim = left_span(A, [e]).dim // b.matrix_size
        cover += mult * proj_dim
    return cover == J.dim


def is_normal_with_uniformiser(A: StructureConstantAlgebra, t: Vector) -> bool:
    """tA = At = rad A."""
    tA = left_span(A, [t])
    if tA != right_span(A, [t]):
        return False
    hint = t if nilpotency_index(A, t) is not None else None
    return radical(A, normal_element=hint) == tA


def central_nilradical(A: StructureConstantAlgebra) -> Subspace:
    """Nilpotent elements of the center.

    On a commutative algebra z -> z^(p^e) is additive, and F_q-linear once e is
    a multiple of the field degree, so the nilradical is its kernel for p^e >= dim.
    """
    F = A.F
    Z = center(A).basis()
    if not Z:
        return Subspace(F, A.dim)
    e = F.degree
    while F.p ** e < len(Z) + 1:
        e += F.degree
    images = [A.pow(z, F.p ** e) for z in Z]
    coeffs = kernel_of_map(F, images)
    return Subspace(F, A.dim, (combine(F, ((c, Z[i]) for i, c in x.items())) for x in coeffs))


def central_nilpotent_ideal(A: StructureConstantAlgebra) -> Subspace:
    """Ideal generated by the nilpotent central elements."""
    I = Subspace(A.F, A.dim)
    for z in central_nilradical(A).basis():
        I.extend(A.mul(z, {b: 1}) for b in range(A.dim))
    return I


def group_algebra_cyclic(F: GF, n: int) -> StructureConstantAlgebra:
    return StructureConstantAlgebra(F, [f"g^{i}" for i in range(n)], lambda i, j: {(i + j) % n: 1}, {0: 1}, monomial=True, name=f"GF({F.q})[Z/{n}]")


def matrix_algebra(F: GF, r: int) -> StructureConstantAlgebra:
    labels = [(i, j) for i in range(r) for j in range(r)]

    def rule(a, b):
        (i, j), (k, l) = labels[a], labels[b]
        return {i * r + l: 1} if j == k else {}

    return StructureConstantAlgebra(F, labels, rule, {i * r + i: 1 for i in range(r)}, monomial=True, name=f"M_{r}(GF({F.q}))")


def product_algebra(F: GF, k: int) -> StructureConstantAlgebra:
    return StructureConstantAlgebra(F, list(range(k)), lambda i, j: {i: 1} if i == j else {}, {i: 1 for i in range(k)}, monomial=True, name=f"GF({F.q})^{k}")


def polynomial_quotient(F: GF, coeffs: Sequence[int], name: str = "") -> StructureConstantAlgebra:
    """F[x]/(f) for monic f given as its lower coefficients c_0..c_{n-1} (f = x^n + ...)."""
    n = len(coeffs)

    def reduce_power(k):
        v = {k: 1} if k < n else None
        if v is not None:
            return v
        prev = reduce_power(k - 1)
        out: Vector = {}
        for i, c in prev.items():
            if i + 1 < n:
                out = axpy(F, out, c, {i + 1: 1})
            else:
                out = axpy(F, out, F.neg[c], {s: F.element(x) for s, x in enumerate(coeffs) if F.element(x)})
        return out

    return StructureConstantAlgebra(F, [f"x^{i}" for i in range(n)], lambda i, j: reduce_power(i + j), {0: 1}, name=name or f"GF({F.q})[x]/(f)")
