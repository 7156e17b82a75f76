from itertools import product

from hypothesis import given, strategies as st

from toralorders.fields import field
from toralorders.linalg import Subspace, kernel, kernel_of_map

F = field(3)
N = 4

vec = st.dictionaries(st.integers(0, N - 1), st.integers(1, 2), max_size=N)


def brute_span(vs):
    out = set()
    for coeffs in product(range(3), repeat=len(vs)):
        w = [0] * N
        for c, v in zip(coeffs, vs):
            for k, x in v.items():
                w[k] = (w[k] + c * x) % 3
        out.add(tuple(w))
    return out


def as_tuple(v):
    return tuple(v.get(k, 0) for k in range(N))


@given(st.lists(vec, max_size=4), vec)
def test_membership_matches_brute_force(vs, w):
    S = Subspace(F, N, vs)
    span = brute_span(vs)
    assert len(span) == 3 ** S.dim
    assert (w in S) == (as_tuple(w) in span)


@given(st.lists(vec, max_size=5))
def test_kernel_is_annihilator(rows):
    K = kernel(F, rows, N)
    for x in K:
        for r in rows:
            assert sum(r.get(k, 0) * x.get(k, 0) for k in range(N)) % 3 == 0
    assert len(K) == N - Subspace(F, N, rows).dim


@given(st.lists(vec, max_size=5))
def test_kernel_of_map_relations(images):
    rels = kernel_of_map(F, images)
    assert len(rels) == len(images) - Subspace(F, N, images).dim
    for c in rels:
        total = [0] * N
        for b, cb in c.items():
            for k, x in images[b].items():
                total[k] = (total[k] + cb * x) % 3
        assert not any(total)
