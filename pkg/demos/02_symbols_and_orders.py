"""Symbols over a truncated ring, and the triangular order built from one."""
# %%
from toralorders.algebra import cycle_type, simples_with_action, verify_associativity
from toralorders.fields import field
from toralorders.orders import build_delta_d, hom_table, no_secondary_setup, uniformiser_and_checks, verify_assumption
from toralorders.symbols import (
    SymbolPresentation, build_symbol, format_element, parse_monomial, split_witness, symbol_over_field,
    tame_ramification,
)

F = field(7)

# %% over a field every symbol splits; find a zero divisor
Q = symbol_over_field(F, 3, 2, 3)
w = split_witness(Q)
print("(2,3) over F_7: witness", format_element(Q, w.witness), "after", w.tried, "tries")

# %% (u, 3) with zeta of order 3, truncated at N = 4
D = build_symbol(SymbolPresentation(F, 3, 1, parse_monomial(F, "u"), parse_monomial(F, "3"), 4))
print("dim", D.dim, "associative", verify_associativity(D))
for prime in ("u", "v"):
    print("ramification at", prime, tame_ramification(D.presentation, prime))

rep = verify_assumption(no_secondary_setup(D))
for item in ("support", "radical", "hereditary"):
    print(f"  {item:10s}", getattr(rep, item))

# %% Δ_3(v)
T = build_delta_d(D, D.element("v"), 3)
u = uniformiser_and_checks(T)
print("Δ_3: dim", T.dim, "passed", u.passed, "dim Δ_3/tΔ_3 =", u.quotient_dim)
simples, perm = simples_with_action(T, u.t)
print("simples", len(simples), "t acts as", cycle_type(perm))

# %% homs between shifted projectives
for i in range(4):
    print("  ", [hom_table(2, i, j)[1] for j in range(4)])
