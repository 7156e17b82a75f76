import json
from itertools import product

import pytest
from hypothesis import given, strategies as st

from toralorders.algebra import (
    AlgebraError,
    StructureConstantAlgebra,
    TruncatedLocalRing,
    center,
    cycle_type,
    from_json,
    group_algebra_cyclic,
    ideal_product,
    is_hereditary_finite,
    is_nilpotent_ideal,
    is_normal_with_uniformiser,
    matrix_algebra,
    nilpotency_index,
    polynomial_quotient,
    product_algebra,
    quotient,
    radical,
    restriction_of_scalars,
    simples_with_action,
    to_json,
    verify_associativity,
    wedderburn_decompose,
)
from toralorders.fields import field
from toralorders.linalg import Subspace


def upper_triangular(F, r=2):
    labels = [(i, j) for i in range(r) for j in range(r) if i <= j]

    def rule(a, b):
        (i, j), (k, l) = labels[a], labels[b]
        return {labels.index((i, l)): 1} if j == k else {}

    return StructureConstantAlgebra(F, labels, rule, {labels.index((i, i)): 1 for i in range(r)}, monomial=True)


def elements(A):
    for coeffs in product(range(A.F.q), repeat=A.dim):
        yield {k: c for k, c in enumerate(coeffs) if c}


def brute_radical(A):
    """{a : a·b nilpotent for every b}, by enumeration."""
    els = list(elements(A))
    return [a for a in els if all(nilpotency_index(A, A.mul(a, b)) is not None or not A.mul(a, b) for b in els)]


TINY = [
    lambda: polynomial_quotient(field(2), [0, 0]),
    lambda: polynomial_quotient(field(2), [1, 1]),
    lambda: polynomial_quotient(field(3), [0, 0, 0]),
    lambda: polynomial_quotient(field(3), [1, 0, 0]),
    lambda: polynomial_quotient(field(2), [1, 0, 0]),
    lambda: group_algebra_cyclic(field(2), 4),
    lambda: group_algebra_cyclic(field(3), 3),
    lambda: group_algebra_cyclic(field(2), 3),
    lambda: upper_triangular(field(2)),
    lambda: upper_triangular(field(3)),
    lambda: matrix_algebra(field(2), 2),
    lambda: TruncatedLocalRing(field(2), "xy", 2).algebra(),
    lambda: TruncatedLocalRing(field(4), "x", 2).algebra(),
    lambda: product_algebra(field(3), 2),
]


@pytest.mark.parametrize("make", TINY)
def test_radical_matches_brute_force(make):
    A = make()
    J = radical(A)
    brute = brute_radical(A)
    assert len(brute) == A.F.q ** J.dim
    assert all(a in J for a in brute)


@given(st.sampled_from([2, 3]), st.lists(st.integers(0, 2), min_size=1, max_size=3))
def test_polynomial_quotients_against_brute_force(p, coeffs):
    A = polynomial_quotient(field(p), coeffs)
    J = radical(A)
    assert len(brute_radical(A)) == p ** J.dim


@pytest.mark.parametrize("make", TINY)
def test_radical_invariants(make):
    A = make()
    J = radical(A)
    assert is_nilpotent_ideal(A, J)
    Q = quotient(A, J).algebra
    assert radical(Q).dim == 0
    blocks = wedderburn_decompose(Q)
    assert sum(b.dim for b in blocks) == A.dim - J.dim


def test_spec_radical_examples():
    A = polynomial_quotient(field(5), [0, 0])
    assert radical(A).basis() == [{1: 1}]
    assert radical(matrix_algebra(field(2), 2)).dim == 0


def test_radical_in_small_characteristic():
    # p ≤ dim forces the higher trace layers: F_2[Z/4] has radical of dim 3
    assert radical(group_algebra_cyclic(field(2), 4)).dim == 3
    assert radical(group_algebra_cyclic(field(3), 6)).dim == 4
    assert radical(group_algebra_cyclic(field(4), 8)).dim == 7


def test_radical_over_extension_field():
    A = TruncatedLocalRing(field(8), "xy", 3).algebra()
    assert radical(A).dim == A.dim - 1
    Ap, to_p, from_p = restriction_of_scalars(A)
    assert Ap.dim == 3 * A.dim
    v = {0: 5, 2: 3}
    assert from_p(to_p(v)) == v


def test_radical_with_normal_hint():
    A = TruncatedLocalRing(field(3), "s", 7).algebra()
    s = {1: 1}
    assert radical(A, normal_element=s) == radical(A)
    with pytest.raises(AlgebraError):
        radical(A, normal_element=A.one)


def test_associativity():
    assert verify_associativity(group_algebra_cyclic(field(3), 2))
    obj = to_json(group_algebra_cyclic(field(3), 3))
    obj["table"][1][1] = [1, 0, 0]
    assert not verify_associativity(from_json(obj))


def test_json_round_trip():
    A = upper_triangular(field(5), 3)
    B = from_json(json.loads(json.dumps(to_json(A))))
    assert B.dim == A.dim and B.one == A.one
    assert all(B.basis_product(i, j) == A.basis_product(i, j) for i in range(A.dim) for j in range(A.dim))


def test_json_unit_recovered():
    obj = to_json(matrix_algebra(field(3), 2))
    del obj["one"]
    assert from_json(obj).one == {0: 1, 3: 1}


@pytest.mark.parametrize("A,expected", [
    (polynomial_quotient(field(2), [1, 1]), [(2, 2, 1)]),
    (matrix_algebra(field(2), 2), [(4, 1, 2)]),
    (product_algebra(field(5), 2), [(1, 1, 1), (1, 1, 1)]),
    (group_algebra_cyclic(field(2), 7), [(1, 1, 1), (3, 3, 1), (3, 3, 1)]),
])
def test_wedderburn(A, expected):
    got = sorted((b.dim, b.center_degree, b.matrix_size) for b in wedderburn_decompose(A))
    assert got == sorted(expected)


def test_wedderburn_rejects_non_semisimple():
    with pytest.raises(AlgebraError):
        wedderburn_decompose(polynomial_quotient(field(3), [0, 0]))


def test_wedderburn_deterministic():
    A = group_algebra_cyclic(field(7), 6)
    assert wedderburn_decompose(A, seed=3) == wedderburn_decompose(A, seed=3)


def test_center_of_matrix_algebra():
    assert center(matrix_algebra(field(3), 3)).dim == 1


def test_hereditary():
    F = field(3)
    # rad(F[x]/(x^2)) = xA is not projective (it is the simple module)
    assert not is_hereditary_finite(polynomial_quotient(F, [0, 0]))
    assert not is_hereditary_finite(TruncatedLocalRing(F, "xy", 2).algebra())
    assert is_hereditary_finite(matrix_algebra(F, 2))
    assert is_hereditary_finite(upper_triangular(F, 3))


def test_normal_with_uniformiser():
    F = field(5)
    A = polynomial_quotient(F, [0, 0, 0])
    assert is_normal_with_uniformiser(A, {1: 1})
    assert not is_normal_with_uniformiser(A, {2: 1})
    assert not is_normal_with_uniformiser(matrix_algebra(F, 2), matrix_algebra(F, 2).one)


def test_simples_trivial_action():
    A = product_algebra(field(7), 3)
    simples, perm = simples_with_action(A, A.one)
    assert len(simples) == 3 and perm == [0, 1, 2]


def test_simples_rejects_non_normal():
    A = upper_triangular(field(3))
    with pytest.raises(AlgebraError):
        simples_with_action(A, {0: 1})


def test_cycle_type():
    assert cycle_type([1, 2, 0, 4, 3]) == [3, 2]


@given(st.sampled_from([2, 3, 4, 5]), st.integers(1, 2), st.integers(2, 4))
def test_truncated_ring_dimension(q, nvars, N):
    R = TruncatedLocalRing(field(q), "uv"[:nvars], N)
    expected = N if nvars == 1 else N * (N + 1) // 2
    assert R.dim == expected
    A = R.algebra()
    assert verify_associativity(A)
    assert radical(A).dim == A.dim - 1


def test_monomial_associativity_fast_path_agrees():
    A = TruncatedLocalRing(field(3), "uv", 3).algebra()
    assert verify_associativity(A) == verify_associativity(A, sample=300)


def test_ideal_products():
    A = TruncatedLocalRing(field(2), "x", 4).algebra()
    J = radical(A)
    assert ideal_product(A, J, J).dim == 2


def test_central_nilradical_not_a_basis_vector():
    from toralorders.algebra import central_nilradical
    F = field(5)
    # x^2 - 2x + 1 = (x - 1)^2: the nilradical is spanned by x - 1
    A = polynomial_quotient(F, [1, F.neg[2]])
    N = central_nilradical(A)
    assert N.dim == 1 and {0: F.neg[1], 1: 1} in N


def _direct_product(A, B):
    from toralorders.algebra import StructureConstantAlgebra
    n = A.dim

    def rule(i, j):
        if i < n and j < n:
            return A.basis_product(i, j)
        if i >= n and j >= n:
            return {k + n: c for k, c in B.basis_product(i - n, j - n).items()}
        return {}

    one = dict(A.one) | {k + n: c for k, c in B.one.items()}
    return StructureConstantAlgebra(A.F, list(range(n + B.dim)), rule, one)


@pytest.mark.parametrize("q", [2, 3, 4])
def test_radical_shrink_path_agrees(q):
    from toralorders.algebra import CENTRAL_SHRINK_DIM, TruncatedLocalRing, _radical_prime
    F = field(q)
    B = _direct_product(TruncatedLocalRing(F, ["s", "t"], 3).algebra(), group_algebra_cyclic(F, 5))
    A = _direct_product(B, matrix_algebra(F, 2))
    A = _direct_product(A, polynomial_quotient(F, [0, 0, 0, 0, 0, 0, 0, 0, 0, 1]))
    assert A.dim > CENTRAL_SHRINK_DIM
    Ap, to_p, from_p = restriction_of_scalars(A)
    direct = Subspace(F, A.dim, (from_p(v) for v in _radical_prime(Ap).basis()))
    assert radical(A) == direct
