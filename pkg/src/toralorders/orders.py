"""Triangular-modulo-z matrix orders, their uniformiser, and module bookkeeping.

``Δ_d(z)`` is realised as a structure-constant algebra on slot-adapted basis
elements ``(i, j, k)``: slot (i, j) of a d×d matrix, with ``k`` running over
the basis of Δ on and above the diagonal and over a reduced basis of zΔ
below it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from math import comb
from typing import Callable

from .algebra import (
    AlgebraError,
    StructureConstantAlgebra,
    is_normal_element,
    left_span,
    nilpotency_index,
    polynomial_quotient,
    quotient,
    radical,
    right_span,
    wedderburn_decompose,
)
from .fields import GF
from .linalg import Subspace, Vector, axpy, combine, kernel, kernel_of_map
from .symbols import HJSymbolAlgebra, SymbolAlgebra, symbol_over_field


class OrderError(ValueError):
    """Bad (Δ, z) pair or a failed structural check."""


class BudgetExceeded(OrderError):
    pass


class TriangularOrder(StructureConstantAlgebra):
    def __init__(self, base: StructureConstantAlgebra, z: Vector, d: int):
        if d < 1:
            raise OrderError("d must be positive")
        if not z:
            raise OrderError("z must be nonzero")
        zD = left_span(base, [z])
        if zD != right_span(base, [z]):
            raise OrderError("z is not normal in Δ")
        self.base, self.z, self.d, self.zspace = base, dict(z), d, zD
        n = base.dim
        zbasis = zD.basis()
        zpivots = zD.pivots()
        slots: list[tuple[int, int, int]] = []
        self.slot_start: dict[tuple[int, int], int] = {}
        for i in range(d):
            for j in range(d):
                self.slot_start[(i, j)] = len(slots)
                size = n if i <= j else len(zbasis)
                slots.extend((i, j, k) for k in range(size))
        self.slots = slots

        def slot_value(i, j, k) -> Vector:
            return {k: 1} if i <= j else zbasis[k]

        def rule(p, q):
            i, j, k = slots[p]
            i2, j2, k2 = slots[q]
            if j != i2:
                return {}
            prod = base.mul(slot_value(i, j, k), slot_value(i2, j2, k2))
            return self._embed_checked(i, j2, prod)

        super().__init__(
            base.F, slots, rule, {self.slot_start[(i, i)] + k: c for i in range(d) for k, c in base.one.items()},
            monomial=base.monomial and zD.is_coordinate(),
            degrees=[base.degrees[k] if i <= j else 0 for i, j, k in slots],
            name=f"Δ_{d}(z) over {base.name}",
        )
        self._zpivots = zpivots

    def _embed_checked(self, i: int, j: int, v: Vector) -> Vector:
        start = self.slot_start[(i, j)]
        if i <= j:
            return {start + k: c for k, c in v.items()}
        if self.zspace.reduce(v):
            raise OrderError(f"product leaves zΔ in slot ({i},{j})")
        # reduced rows have 1 at their pivot and 0 at the other pivots
        return {start + s: v[p] for s, p in enumerate(self._zpivots) if v.get(p)}

    def embed(self, i: int, j: int, v: Vector) -> Vector:
        """The matrix with ``v`` in slot (i, j) and zero elsewhere."""
        return self._embed_checked(i, j, v)

    def entry(self, M: Vector, i: int, j: int) -> Vector:
        """Slot (i, j) of M as an element of Δ."""
        start = self.slot_start[(i, j)]
        out: Vector = {}
        zbasis = None if i <= j else self.zspace.basis()
        for p, c in M.items():
            si, sj, k = self.slots[p]
            if (si, sj) != (i, j):
                continue
            out = axpy(self.F, out, c, {k: 1} if zbasis is None else zbasis[k])
        return out

    def diagonal(self, v: Vector) -> Vector:
        return combine(self.F, ((1, self.embed(i, i, v)) for i in range(self.d)))

    def uniformiser(self) -> Vector:
        d, one = self.d, self.base.one
        if d == 1:
            return self.embed(0, 0, self.z)
        terms = [(1, self.embed(i, i + 1, one)) for i in range(d - 1)]
        terms.append((1, self.embed(d - 1, 0, self.z)))
        return combine(self.F, terms)


def build_delta_d(base: StructureConstantAlgebra, z: Vector, d: int) -> TriangularOrder:
    return TriangularOrder(base, z, d)


def expected_dimension(base_dim: int, z_dim: int, d: int) -> int:
    below = d * (d - 1) // 2
    return d * d * base_dim - below * (base_dim - z_dim)


@dataclass
class UniformiserReport:
    t: Vector = dc_field(repr=False)
    t_power_is_z: bool
    normal: bool
    quotient_dim: int
    expected_quotient_dim: int
    kernel_matches: bool
    diagonal_multiplicative: bool

    @property
    def passed(self) -> bool:
        return (self.t_power_is_z and self.normal and self.kernel_matches and self.diagonal_multiplicative
                and self.quotient_dim == self.expected_quotient_dim)


def uniformiser_and_checks(T: TriangularOrder, seed: int = 0, samples: int = 200) -> UniformiserReport:
    """t with t^d = z·1, tT = Tt, and T/tT ≅ ∏ Δ/zΔ via the diagonal."""
    t = T.uniformiser()
    t_pow = T.pow(t, T.d) == T.diagonal(T.z)
    tT = left_span(T, [t])
    normal = tT == right_span(T, [t])
    base_quot = T.base.dim - T.zspace.dim
    # kernel of the diagonal projection T -> ∏ Δ/zΔ
    K = Subspace(T.F, T.dim)
    for p, (i, j, k) in enumerate(T.slots):
        if i != j:
            K.add({p: 1})
    for i in range(T.d):
        K.extend(T.embed(i, i, v) for v in T.zspace.basis())
    rng = random.Random(seed)
    mult_ok = True
    for _ in range(samples):
        p, q = rng.randrange(T.dim), rng.randrange(T.dim)
        prod = T.basis_product(p, q)
        for i in range(T.d):
            lhs = T.zspace.reduce(T.entry(prod, i, i))
            rhs = T.zspace.reduce(T.base.mul(T.entry({p: 1}, i, i), T.entry({q: 1}, i, i)))
            if lhs != rhs:
                mult_ok = False
    return UniformiserReport(t, t_pow, normal, T.dim - tT.dim, T.d * base_quot, K == tT, mult_ok)


# -------------------------------------------------------------- assumption


@dataclass
class AssumptionSetup:
    """A (Δ, z) pair with the data needed to test the three assumption items.

    ``support`` generates the expected height-one prime (must lie in zΔ),
    ``transversal`` is the complementary variable (must not), ``chain`` is
    the normal element whose quotient of Δ/zΔ should be semisimple, and
    ``specialize(c)`` is Δ/zΔ with the transversal variable set to c.
    """

    algebra: StructureConstantAlgebra
    z: Vector
    support: Vector
    transversal: Vector
    chain: Vector
    specialize: Callable[[int], StructureConstantAlgebra]
    label: str = ""


@dataclass
class CheckResult:
    passed: bool
    detail: str


@dataclass
class AssumptionReport:
    support: CheckResult
    radical: CheckResult
    hereditary: CheckResult
    samples: list[int]
    seed: int

    @property
    def passed(self) -> bool:
        return self.support.passed and self.radical.passed and self.hereditary.passed


def sample_points(F: GF, seed: int = 0, limit: int = 16) -> list[int]:
    units = list(range(1, F.q))
    if F.q <= 16:
        return units
    return sorted(random.Random(seed).sample(units, limit))


def _check(fn) -> CheckResult:
    try:
        return fn()
    except (AlgebraError, OrderError, ValueError) as exc:
        return CheckResult(False, f"error: {exc}")


def verify_assumption(setup: AssumptionSetup, seed: int = 0) -> AssumptionReport:
    A, z = setup.algebra, setup.z
    zA = left_span(A, [z])
    samples = sample_points(A.F, seed)

    def support():
        if zA != right_span(A, [z]):
            return CheckResult(False, "z is not normal")
        if zA.dim == A.dim:
            return CheckResult(False, "Δ/zΔ is zero")
        if setup.support not in zA:
            return CheckResult(False, "the expected prime does not annihilate Δ/zΔ")
        if setup.transversal in zA:
            return CheckResult(False, "Δ/zΔ is also killed by the transversal variable")
        return CheckResult(True, f"dim Δ/zΔ = {A.dim - zA.dim}; prime generator lies in zΔ, transversal does not")

    def rad():
        bad = [c for c in samples if radical(setup.specialize(c)).dim]
        if bad:
            return CheckResult(False, f"specialisation not semisimple at c = {bad}")
        return CheckResult(True, f"semisimple at all {len(samples)} sampled c")

    def hereditary():
        y = setup.chain
        top = zA.copy().extend(left_span(A, [y]).basis())
        if top != zA.copy().extend(right_span(A, [y]).basis()):
            return CheckResult(False, "chain element is not normal modulo z")
        Q = quotient(A, zA)
        Qa = Q.algebra
        ybar = Q.project(y)
        # kernel of left multiplication by ybar on Δ/zΔ
        images = [Qa.mul(ybar, {b: 1}) for b in range(Qa.dim)]
        ker = kernel_of_map(Qa.F, images)
        top_deg = max(Qa.degrees) if Qa.dim else 0
        if any(Qa.degrees[k] != top_deg for v in ker for k in v):
            return CheckResult(False, "chain element has annihilator below the truncation top")
        R = quotient(A, top)
        rdim = radical(R.algebra).dim
        if rdim:
            return CheckResult(False, f"(Δ/zΔ)/chain has radical of dim {rdim}")
        return CheckResult(True, f"chain quotient of dim {R.algebra.dim} is semisimple; chain element regular below degree {top_deg}")

    return AssumptionReport(_check(support), _check(rad), _check(hereditary), samples, seed)


def no_secondary_setup(A: SymbolAlgebra) -> AssumptionSetup:
    """(u, a)_ζ with a a unit: z = v, chain x."""
    pres = A.presentation
    if pres.a.names() != {"u"} or pres.a.exponent("u") != 1 or pres.b.names():
        raise OrderError("expected a symbol of the form (c·u, unit)")
    F = A.F

    def spec(c):
        return symbol_over_field(F, pres.n, F.mul[pres.a.scalar][c], pres.b.scalar, pres.zeta_exp)

    return AssumptionSetup(A, A.element("v"), A.element("v"), A.element("u"), A.x, spec, "no secondary ramification")


def with_secondary_setup(A: SymbolAlgebra) -> AssumptionSetup:
    """(a·u, b·v)_ζ: z = y = n-th root of v, chain x."""
    pres = A.presentation
    if pres.a.exps != (("u", 1),) or pres.b.exps != (("v", 1),):
        raise OrderError("expected a symbol of the form (a·u, b·v)")
    F, n = A.F, pres.n

    def spec(c):
        # Δ/yΔ at u = c is F_q[x]/(x^n - a c)
        coeffs = [F.neg[F.mul[pres.a.scalar][c]]] + [0] * (n - 1)
        return polynomial_quotient(F, coeffs)

    return AssumptionSetup(A, A.y, A.element("v"), A.element("u"), A.x, spec, "secondary ramification")


def hj_setup(A: HJSymbolAlgebra) -> AssumptionSetup:
    """(S, α): z = f1, chain f2; f2^m = c specialises Δ/f1Δ to (c, g) with ζ = ω^l.

    The prime is tested through its cover generator f1 rather than f1^m,
    which leaves the truncation as soon as m ≥ N.
    """
    S, E = A.cover, A.extension
    m = S.m

    def spec(c):
        return symbol_over_field(A.F, m, c, E.g, S.l % m if m > 1 else 1)

    return AssumptionSetup(A, A.f1, A.f1, A.f2, A.f2, spec, "Hirzebruch-Jung")


# ------------------------------------------------------- valuation lattices


@dataclass(frozen=True)
class ValuationLattice:
    """⊕_j π^{a_j} Δ as a row module over Δ_d (DVR-type Δ with uniformiser π)."""

    vals: tuple[int, ...]

    @classmethod
    def projective(cls, d: int) -> "ValuationLattice":
        return cls((0,) * d)

    def times_t(self) -> "ValuationLattice":
        # (r_1, ..., r_d)·t = (r_d π, r_1, ..., r_{d-1})
        return ValuationLattice((self.vals[-1] + 1,) + self.vals[:-1])

    def times_t_power(self, i: int) -> "ValuationLattice":
        out = self
        for _ in range(i):
            out = out.times_t()
        return out

    def hom_valuation(self, other: "ValuationLattice") -> int:
        """Least s with π^s·self ⊆ other; Hom(self, other) = π^s Δ."""
        return max(b - a for a, b in zip(self.vals, other.vals))


def _tag(s: int) -> str:
    return {0: "Δ", 1: "rad Δ"}.get(s, f"π^{s}Δ")


def hom_table(d: int, i: int, j: int) -> tuple[int, str]:
    """Hom(P t^i, P t^j) as (valuation, tag)."""
    P = ValuationLattice.projective(d)
    s = P.times_t_power(i).hom_valuation(P.times_t_power(j))
    return s, _tag(s)


def hom_closed_form(d: int, i: int, j: int) -> str | None:
    if 0 <= i - j < d:
        return "Δ"
    if 0 < j - i <= d:
        return "rad Δ"
    return None


# --------------------------------------------------------- flags over Δ̄


def _key(S: Subspace):
    return tuple((p, tuple(sorted(r.items()))) for p, r in sorted(S.rows.items()))


def right_ideals(A: StructureConstantAlgebra, budget: int = 1 << 16) -> list[Subspace]:
    """All right ideals aA of a semisimple algebra (each is principal)."""
    F = A.F
    if F.q ** A.dim > budget:
        raise BudgetExceeded(f"{F.q}^{A.dim} elements exceed the budget {budget}")
    seen: dict = {}
    for code in range(F.q ** A.dim):
        v, c = {}, code
        for k in range(A.dim):
            c, r = divmod(c, F.q)
            if r:
                v[k] = r
        S = left_span(A, [v])
        seen.setdefault(_key(S), S)
    return sorted(seen.values(), key=lambda S: (S.dim, _key(S)))


def _coords(F: GF, n: int, reps: list[Vector], lower: Subspace):
    """Coordinate map for span(reps) + lower modulo lower."""
    k = len(reps)
    S = Subspace(F, n + k)
    S.extend(lower.basis())
    for s, r in enumerate(reps):
        v = dict(r)
        v[n + s] = 1
        S.add(v)

    def coords(w: Vector) -> list[int]:
        r = S.reduce(w)
        if any(p < n for p in r):
            raise OrderError("vector outside the module")
        return [F.neg[r.get(n + s, 0)] for s in range(k)]

    return coords


def _mat_mul(F: GF, X, Y):
    k = len(X)
    out = [[0] * k for _ in range(k)]
    for i in range(k):
        for l in range(k):
            if X[i][l]:
                xi = F.mul[X[i][l]]
                row = out[i]
                for j in range(k):
                    if Y[l][j]:
                        row[j] = F.add[row[j]][xi[Y[l][j]]]
    return out


def endomorphism_algebra(A: StructureConstantAlgebra, upper: Subspace, lower: Subspace) -> StructureConstantAlgebra:
    """End_A(upper/lower) for right ideals lower ⊆ upper, as a structure-constant algebra."""
    F = A.F
    reps = []
    tmp = lower.copy()
    for v in upper.basis():
        if tmp.add(v):
            reps.append(v)
    k = len(reps)
    if k == 0:
        return StructureConstantAlgebra(F, [], lambda i, j: {}, {})
    coords = _coords(F, A.dim, reps, lower)
    # rho[b][s] = coordinates of reps[s]·e_b
    rho = [[coords(A.mul(r, {b: 1})) for r in reps] for b in range(A.dim)]
    # X ρ_b = ρ_b X with column convention: (ρ_b)_{ts} = rho[b][s][t]
    rows = []
    for b in range(A.dim):
        R = rho[b]
        for i in range(k):
            for j in range(k):
                row: Vector = {}
                # (X ρ_b)_{ij} = Σ_l X_il ρ_lj ; (ρ_b X)_{ij} = Σ_l ρ_il X_lj
                for l in range(k):
                    c1 = R[j][l]
                    if c1:
                        row = axpy(F, row, c1, {i * k + l: 1})
                    c2 = R[l][i]
                    if c2:
                        row = axpy(F, row, F.neg[c2], {l * k + j: 1})
                if row:
                    rows.append(row)
    sols = kernel(F, rows, k * k)
    mats = [[[v.get(i * k + j, 0) for j in range(k)] for i in range(k)] for v in sols]
    e = len(sols)
    big = Subspace(F, k * k + e)
    for s, v in enumerate(sols):
        w = dict(v)
        w[k * k + s] = 1
        big.add(w)

    def to_vec(M) -> Vector:
        r = big.reduce({i * k + j: M[i][j] for i in range(k) for j in range(k) if M[i][j]})
        if any(p < k * k for p in r):
            raise OrderError("endomorphisms not closed under composition")
        return {p - k * k: F.neg[c] for p, c in r.items()}

    ident = [[1 if i == j else 0 for j in range(k)] for i in range(k)]
    return StructureConstantAlgebra(
        F, list(range(e)), lambda a, b: to_vec(_mat_mul(F, mats[a], mats[b])), to_vec(ident), name="End",
    )


def is_local(E: StructureConstantAlgebra) -> bool:
    if E.dim == 0:
        return False
    J = radical(E)
    Q = quotient(E, J)
    blocks = wedderburn_decompose(Q.algebra, check=False)
    return len(blocks) == 1 and blocks[0].matrix_size == 1


@dataclass
class FlagProjective:
    flag_dims: tuple[int, ...]
    top: tuple[tuple[int, ...], ...]
    top_simples: int
    end_local: bool

    @property
    def key(self):
        return self.top


@dataclass
class FlagReport:
    flags: list[FlagProjective]
    r: int
    blocks: int
    classes: int
    all_local: bool
    tops_have_r_simples: bool
    note: str = ""


def flags_and_projectives(Dbar: StructureConstantAlgebra, d: int, seed: int = 0, budget: int = 1 << 16) -> FlagReport:
    """Flags 0 ≤ Ī_1 ≤ … ≤ Ī_d = Δ̄ and the row projectives (I_1, …, I_d) over Δ_d.

    The top of Q = (I_1, …, I_d) is ⊕_l Ī_l/Ī_{l-1} placed in slot l, so
    Q's iso-class is read off from the simple multiplicities per slot, and
    End(Q) is local exactly when End of that top is a division ring.
    """
    if Dbar.dim > 64:
        raise BudgetExceeded("Δ̄ has dimension above 64")
    blocks = wedderburn_decompose(Dbar, seed)
    r_total = sum(b.matrix_size for b in blocks)
    ideals = right_ideals(Dbar, budget)
    full = Subspace(Dbar.F, Dbar.dim, Dbar.basis())
    zero = Subspace(Dbar.F, Dbar.dim)

    def chains(prefix, remaining):
        if remaining == 0:
            yield prefix
            return
        last = prefix[-1] if prefix else zero
        for I in ideals:
            if last <= I:
                yield from chains(prefix + [I], remaining - 1)

    results = []
    for chain in chains([], d - 1):
        flag = chain + [full]
        top, count = [], 0
        end_dims = []
        prev = zero
        for I in flag:
            mults = []
            for b in blocks:
                upper = right_span(Dbar, [b.idempotent], I.basis()) if I.dim else zero
                lower = right_span(Dbar, [b.idempotent], prev.basis()) if prev.dim else zero
                diff = upper.dim - lower.dim
                mults.append(diff // (b.matrix_size * b.center_degree))
            top.append(tuple(mults))
            count += sum(mults)
            if I.dim > prev.dim:
                end_dims.append((I, prev))
            prev = I
        if len(end_dims) == 1:
            local = is_local(endomorphism_algebra(Dbar, *end_dims[0]))
        else:
            local = False  # End(top) is a product of at least two nonzero factors
        results.append(FlagProjective(tuple(I.dim for I in flag), tuple(top), count, local))
    classes = len({f.key for f in results})
    note = ""
    if r_total > 1:
        note = "split residue algebra: tops with several simples have non-local endomorphism rings"
    return FlagReport(results, r_total, len(blocks), classes, all(f.end_local for f in results),
                      all(f.top_simples == r_total for f in results), note)


def expected_projective_classes(d: int, r: int) -> int:
    return comb(d + r - 1, r)
