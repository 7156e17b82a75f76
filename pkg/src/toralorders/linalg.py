"""Sparse exact linear algebra over a :class:`~toralorders.fields.GF`.

Vectors are ``dict[int, int]`` mapping a coordinate index to a nonzero
field element code.  Most algebras in this package have monomial bases, so
spans of products are very sparse and row reduction on dicts is far cheaper
than dense elimination.
"""

from __future__ import annotations

from typing import Iterable

from .fields import GF

Vector = dict[int, int]


def axpy(F: GF, y: Vector, a: int, x: Vector) -> Vector:
    """Return ``y + a*x`` as a new vector."""
    if a == 0:
        return dict(y)
    out = dict(y)
    mul_a, add = F.mul[a], F.add
    for k, v in x.items():
        s = add[out.get(k, 0)][mul_a[v]]
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def scale(F: GF, a: int, x: Vector) -> Vector:
    if a == 0:
        return {}
    mul_a = F.mul[a]
    return {k: mul_a[v] for k, v in x.items()}


def add(F: GF, x: Vector, y: Vector) -> Vector:
    return axpy(F, x, 1, y)


def sub(F: GF, x: Vector, y: Vector) -> Vector:
    return axpy(F, x, F.neg[1], y)


def combine(F: GF, terms: Iterable[tuple[int, Vector]]) -> Vector:
    out: Vector = {}
    mul, addt = F.mul, F.add
    for a, x in terms:
        if a == 0:
            continue
        mul_a = mul[a]
        for k, v in x.items():
            s = addt[out.get(k, 0)][mul_a[v]]
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return out


def unit(i: int) -> Vector:
    return {i: 1}


class Subspace:
    """A subspace of F^n kept in fully reduced row echelon form.

    Each stored row has coefficient 1 at its pivot and no other row has a
    nonzero entry in that pivot column, so reducing a vector needs one
    subtraction per pivot it touches.
    """

    def __init__(self, F: GF, n: int, vectors: Iterable[Vector] = ()):
        self.F, self.n = F, n
        self.rows: dict[int, Vector] = {}
        self.extend(vectors)

    def copy(self) -> "Subspace":
        s = Subspace(self.F, self.n)
        s.rows = {p: dict(r) for p, r in self.rows.items()}
        return s

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, v: Vector) -> Vector:
        F = self.F
        out = dict(v)
        for p in [k for k in v if k in self.rows]:
            c = out.get(p, 0)
            if c:
                out = axpy(F, out, F.neg[c], self.rows[p])
        return out

    def add(self, v: Vector) -> bool:
        """Insert ``v``; return True if the dimension grew."""
        r = self.reduce(v)
        if not r:
            return False
        F = self.F
        p = min(r)
        r = scale(F, F.inv[r[p]], r)
        for q, row in self.rows.items():
            c = row.get(p, 0)
            if c:
                self.rows[q] = axpy(F, row, F.neg[c], r)
        self.rows[p] = r
        return True

    def extend(self, vectors: Iterable[Vector]) -> "Subspace":
        for v in vectors:
            self.add(v)
        return self

    def __contains__(self, v: Vector) -> bool:
        return not self.reduce(v)

    def contains_space(self, other: "Subspace") -> bool:
        return all(r in self for r in other.rows.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.dim == other.dim and self.contains_space(other)

    def __le__(self, other: "Subspace") -> bool:
        return other.contains_space(self)

    def basis(self) -> list[Vector]:
        return [self.rows[p] for p in sorted(self.rows)]

    def pivots(self) -> list[int]:
        return sorted(self.rows)

    def complement_indices(self) -> list[int]:
        """Coordinates not used as pivots; their unit vectors span a complement."""
        return [i for i in range(self.n) if i not in self.rows]

    def coordinates_mod(self, v: Vector) -> Vector:
        """Coordinates of ``v`` modulo this subspace on the complement indices."""
        return self.reduce(v)

    def is_coordinate(self) -> bool:
        """True when the subspace is spanned by unit vectors."""
        return all(len(r) == 1 for r in self.rows.values())

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, n={self.n})"


def span(F: GF, n: int, vectors: Iterable[Vector]) -> Subspace:
    return Subspace(F, n, vectors)


def kernel(F: GF, rows: Iterable[Vector], n: int) -> list[Vector]:
    """Basis of ``{x in F^n : <row, x> = 0 for every row}``."""
    S = Subspace(F, n, rows)
    out = []
    for f in S.complement_indices():
        x = {f: 1}
        for p, row in S.rows.items():
            c = row.get(f, 0)
            if c:
                x[p] = F.neg[c]
        out.append(x)
    return out


def kernel_of_map(F: GF, images: list[Vector]) -> list[Vector]:
    """Basis of ``{c : sum_b c_b images[b] = 0}`` in F^len(images).

    Row reduction on the images while recording the combination that
    produced each reduced row.
    """
    pivot_rows: dict[int, tuple[Vector, Vector]] = {}
    out = []
    for b, img in enumerate(images):
        v, comb = dict(img), {b: 1}
        while v:
            p = min(v)
            if p not in pivot_rows:
                inv = F.inv[v[p]]
                pivot_rows[p] = (scale(F, inv, v), scale(F, inv, comb))
                break
            rv, rc = pivot_rows[p]
            c = F.neg[v[p]]
            v = axpy(F, v, c, rv)
            comb = axpy(F, comb, c, rc)
        else:
            out.append(comb)
    return out


def restrict(v: Vector, indices: Iterable[int]) -> Vector:
    idx = set(indices)
    return {k: c for k, c in v.items() if k in idx}
