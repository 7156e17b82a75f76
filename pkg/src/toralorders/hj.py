"""Lattice combinatorics of κ-rational Hirzebruch-Jung strings.

A string of exceptional curves E_1, ..., E_r with self-intersections
``-m_i`` is completed by two boundary curves E_0 and E_{r+1}.  Toral
divisors are integer vectors indexed by 0..r+1, toral functions are
lattice points (i, j) standing for x^i y^j, and the two are related through
the sequence ν_0 = (0, 1), ν_1 = (1, 0), ν_{i+1} = m_i ν_i - ν_{i-1}.

Everything here is exact integer arithmetic; rational first coordinates of
lattice points are stored scaled by their denominator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence


class InvariantError(AssertionError):
    """A mathematically impossible state was reached (an implementation bug)."""


@dataclass(frozen=True)
class IntersectionData:
    m_list: tuple[int, ...]

    def __init__(self, m_list: Sequence[int]):
        m_list = tuple(int(m) for m in m_list)
        if len(m_list) < 1:
            raise ValueError("an HJ string needs at least one exceptional curve")
        if any(m < 2 for m in m_list):
            raise ValueError(f"self-intersections must satisfy m_i >= 2, got {list(m_list)}")
        object.__setattr__(self, "m_list", m_list)

    @property
    def r(self) -> int:
        return len(self.m_list)

    def m(self, i: int) -> int:
        """m_i for 1 <= i <= r."""
        return self.m_list[i - 1]

    def reversed(self) -> "IntersectionData":
        return IntersectionData(self.m_list[::-1])


@dataclass(frozen=True)
class SingularityType:
    m: int
    k: int


@dataclass(frozen=True)
class LatticePoint:
    """The toral function x^i y^j with i = i_num / den."""

    i_num: int
    j: int
    den: int = 1

    def __post_init__(self):
        if self.den < 1:
            raise ValueError("denominator must be positive")

    @classmethod
    def of(cls, i, j: int, den: int = 1) -> "LatticePoint":
        """Build from a rational ``i``; the stored denominator is ``den``."""
        i = Fraction(i)
        num = i * den
        if num.denominator != 1:
            raise ValueError(f"{i} does not have denominator dividing {den}")
        return cls(int(num), int(j), den)

    @property
    def i(self) -> Fraction:
        return Fraction(self.i_num, self.den)

    @property
    def is_integral(self) -> bool:
        return self.i_num % self.den == 0

    def as_pair(self) -> tuple[Fraction, int]:
        return self.i, self.j

    def __add__(self, other: "LatticePoint") -> "LatticePoint":
        den = self.den * other.den // gcd(self.den, other.den)
        return LatticePoint.of(self.i + other.i, self.j + other.j, den)

    def scaled(self, c: int) -> "LatticePoint":
        return LatticePoint(self.i_num * c, self.j * c, self.den)

    def in_r_cone(self, t: SingularityType) -> bool:
        """Membership in R≥0(1,0) + R≥0(k,m)."""
        return self.j >= 0 and t.m * self.i - t.k * self.j >= 0

    def in_s_cone(self, t: SingularityType) -> bool:
        """0 <= j <= (m/k)·i, the cone of toral elements of the cover."""
        return self.j >= 0 and t.k * self.j <= t.m * self.i

    def __str__(self) -> str:
        return f"x^{self.i} y^{self.j}"


@dataclass(frozen=True)
class ToralDivisor:
    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Sequence[int]):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in coeffs))

    def __getitem__(self, l: int) -> int:
        return self.coeffs[l]

    def __len__(self) -> int:
        return len(self.coeffs)

    @property
    def is_effective(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def __add__(self, other: "ToralDivisor") -> "ToralDivisor":
        return ToralDivisor([a + b for a, b in zip(self.coeffs, other.coeffs, strict=True)])


@dataclass(frozen=True)
class BasicToralDatum:
    """A basic toral section through its restriction to E_i.

    ``e`` is the zero order at E_{i-1} ∩ E_i, so the order at E_i ∩ E_{i+1}
    is ``degrees[i-1] - e``.
    """

    i: int
    e: int
    degrees: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.e <= self.degrees[self.i - 1]:
            raise ValueError(f"zero order e={self.e} outside 0..d_{self.i}")


def _check_divisor(D: ToralDivisor, data: IntersectionData) -> None:
    if len(D) != data.r + 2:
        raise ValueError(f"toral divisors on this string have {data.r + 2} coefficients, got {len(D)}")


def nu_sequence(data: IntersectionData) -> list[tuple[int, int]]:
    nu = [(0, 1), (1, 0)]
    for i in range(1, data.r + 1):
        (a, b), (c, d) = nu[i], nu[i - 1]
        nu.append((data.m(i) * a - c, data.m(i) * b - d))
    return nu


def singularity_type(data: IntersectionData) -> SingularityType:
    m, minus_k = nu_sequence(data)[-1]
    k = -minus_k
    if not (0 < k < m and gcd(k, m) == 1):
        raise InvariantError(f"nu_(r+1) = ({m}, {minus_k}) violates 0<k<m, gcd(k,m)=1")
    return SingularityType(m, k)


def determinant_of_R(data: IntersectionData) -> int:
    """det of the tridiagonal matrix with diagonal m_i and off-diagonal -1.

    Uses the continuant recurrence det_i = m_i det_{i-1} - det_{i-2}; kept
    separate from :func:`nu_sequence` so the two can check each other.
    """
    prev, cur = 1, data.m_list[0]
    for m in data.m_list[1:]:
        prev, cur = cur, m * cur - prev
    return cur


def continued_fraction(data: IntersectionData) -> Fraction:
    """m_1 - 1/(m_2 - 1/(... - 1/m_r)) evaluated exactly."""
    value = Fraction(data.m_list[-1])
    for m in reversed(data.m_list[:-1]):
        value = m - 1 / value
    return value


def intersection_number(D: ToralDivisor, i: int, data: IntersectionData) -> int:
    """D·E_i = λ_{i-1} - m_i λ_i + λ_{i+1} for an interior curve 1 <= i <= r."""
    _check_divisor(D, data)
    if not 1 <= i <= data.r:
        raise IndexError(f"curve index {i} outside 1..{data.r}")
    return D[i - 1] - data.m(i) * D[i] + D[i + 1]


def intersection_vector(D: ToralDivisor, data: IntersectionData) -> list[int]:
    return [intersection_number(D, i, data) for i in range(1, data.r + 1)]


def divisor_of_lattice_point(p: LatticePoint, data: IntersectionData) -> ToralDivisor:
    if not p.is_integral:
        raise ValueError(f"{p} is not an integral lattice point")
    t = singularity_type(data)
    if not p.in_r_cone(t):
        raise ValueError(f"{p} lies outside the cone R≥0(1,0)+R≥0({t.k},{t.m}); its divisor is not effective")
    i = int(p.i)
    return ToralDivisor([i * a + p.j * b for a, b in nu_sequence(data)])


def lattice_point_of_divisor(D: ToralDivisor, data: IntersectionData) -> LatticePoint | None:
    """Inverse of :func:`divisor_of_lattice_point`; None when D is not principal."""
    _check_divisor(D, data)
    i, j = D[1], D[0]
    if all(i * a + j * b == c for (a, b), c in zip(nu_sequence(data), D.coeffs)):
        return LatticePoint(i, j)
    return None


def fundamental_cycle(data: IntersectionData) -> ToralDivisor:
    return ToralDivisor([0] + [1] * data.r + [0])


def pullback_divisor(data: IntersectionData) -> ToralDivisor:
    """Least C = E_0 + sum c_i E_i with c_i >= 0 and C·E_i <= 0 for i = 1..r.

    Monotone fixpoint iteration from c = 0; each sweep raises c_i to the
    least value satisfying its own inequality.
    """
    lam = [1] + [0] * data.r + [0]
    changed = True
    while changed:
        changed = False
        for i in range(1, data.r + 1):
            need = -(-(lam[i - 1] + lam[i + 1]) // data.m(i))
            if need > lam[i]:
                lam[i] = need
                changed = True
    return ToralDivisor(lam)


def basic_toral_data(degrees: Sequence[int]) -> list[BasicToralDatum]:
    """One canonical datum per basic toral section (up to scalars).

    A section that is nonzero at the node E_{i-1} ∩ E_i (``e = 0``) continues
    onto E_{i-1} with full zero order d_{i-1} at its left node, so
    (i, 0) and (i-1, d_{i-1}) describe the same section.  The representative
    kept is the datum on the leftmost curve of each glued class.
    """
    degrees = tuple(int(d) for d in degrees)
    if any(d < 0 for d in degrees):
        raise ValueError(f"degrees must be non-negative, got {list(degrees)}")
    r = len(degrees)
    nodes = [(i, e) for i in range(1, r + 1) for e in range(degrees[i - 1] + 1)]
    parent = {v: v for v in nodes}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for i in range(2, r + 1):
        a, b = find((i, 0)), find((i - 1, degrees[i - 2]))
        if a != b:
            parent[max(a, b)] = min(a, b)
    reps = sorted({find(v) for v in nodes})
    return [BasicToralDatum(i, e, degrees) for i, e in reps]


def delta_for_datum(D: ToralDivisor, datum: BasicToralDatum, data: IntersectionData) -> ToralDivisor:
    """Solve for Δ with (D+Δ)·E_j = 0, δ_{i-1} = e, δ_i = 0, δ_{i+1} = d_i - e."""
    r, i = data.r, datum.i
    d = datum.degrees
    delta: list[int | None] = [None] * (r + 2)
    delta[i - 1], delta[i], delta[i + 1] = datum.e, 0, d[i - 1] - datum.e
    for j in range(i + 1, r + 1):
        delta[j + 1] = d[j - 1] - delta[j - 1] + data.m(j) * delta[j]
    for j in range(i - 1, 0, -1):
        delta[j - 1] = d[j - 1] + data.m(j) * delta[j] - delta[j + 1]
    return ToralDivisor(delta)


def toral_generators(D: ToralDivisor, data: IntersectionData) -> list[LatticePoint]:
    """Toral functions generating the ideal f_* O(-D)."""
    _check_divisor(D, data)
    if not D.is_effective:
        raise ValueError("D must be effective")
    degrees = [-c for c in intersection_vector(D, data)]
    if any(c < 0 for c in degrees):
        raise ValueError(f"need D·E_i <= 0 for all i, got D·E = {[-c for c in degrees]}")
    out = []
    for datum in basic_toral_data(degrees):
        total = D + delta_for_datum(D, datum, data)
        p = lattice_point_of_divisor(total, data)
        if p is None:
            raise InvariantError(f"D + Δ = {total.coeffs} is not principal")
        out.append(p)
    return out


@dataclass(frozen=True)
class CoverGenerators:
    f1: LatticePoint
    f2: LatticePoint
    f1_grade: int
    l: int


def cover_generators(data: IntersectionData) -> CoverGenerators:
    t = singularity_type(data)
    m, k = t.m, t.k
    l = next(l for l in range(1, m) if (k * l + 1) % m == 0) if m > 1 else 0
    if (k * l + 1) % m:
        raise InvariantError("no solution of k l = -1 mod m")
    f1 = LatticePoint(k, 1, m)
    f2 = LatticePoint(1, 0, m)
    for f in (f1, f2):
        if not f.in_s_cone(t):
            raise InvariantError(f"{f} outside the S-cone")
    return CoverGenerators(f1, f2, m - 1, l)


def f1_power_check(data: IntersectionData) -> ToralDivisor:
    """Divisor of f1^m = x^k y^m; its E_0 coefficient is m."""
    t = singularity_type(data)
    p = cover_generators(data).f1.scaled(t.m)
    p = LatticePoint(int(p.i), p.j)
    D = divisor_of_lattice_point(p, data)
    if D[0] != t.m or D[data.r + 1] != 0:
        raise InvariantError(f"divisor of f1^m is {D.coeffs}")
    return D


def reversed_type(t: SingularityType) -> SingularityType:
    """Type of the reversed string: k' with k k' = 1 mod m."""
    return SingularityType(t.m, pow(t.k, -1, t.m) if t.m > 1 else 0)
