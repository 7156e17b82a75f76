"""Walk through the lattice side: a string of rational curves, its cone, and toral functions."""
# %%
from toralorders.hj import (
    IntersectionData, LatticePoint, cover_generators, determinant_of_R, divisor_of_lattice_point,
    f1_power_check, nu_sequence, pullback_divisor, singularity_type, toral_generators,
)

def pt(p):
    return f"({p.i}, {p.j})"


data = IntersectionData([3, 2])
t = singularity_type(data)
print("string      ", data.m_list)
print("nu          ", nu_sequence(data))
print("type (m,k)  ", (t.m, t.k), " det =", determinant_of_R(data))

# %% a lattice point gives a divisor on E_0..E_{r+1}
p = LatticePoint(2, 3)
print("divisor of", pt(p), "->", divisor_of_lattice_point(p, data).coeffs)

# %% generators of the ideal attached to the pullback of the maximal ideal
C = pullback_divisor(data)
print("pullback    ", C.coeffs)
print("generators  ", ", ".join(pt(g) for g in toral_generators(C, data)))

# %% the degree m cover
g = cover_generators(data)
print("f1 =", pt(g.f1), " f2 =", pt(g.f2), " l =", g.l)
print("div f1^m    ", f1_power_check(data).coeffs)
