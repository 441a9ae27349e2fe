# %% [markdown]
# # Three ways to the same number
#
# The path sum is checked against a rank-inequality enumeration (numpy) and
# against Kohnert diagrams of the skyline of t times the indicator of S.

# %%
from __future__ import annotations

from schubert_ehrhart import count_dilation, kohnert_monomial_count, lattice_points_direct, set_to_rsequence
from schubert_ehrhart.oracles import lattice_points
from schubert_ehrhart.schubert import indicator

S = (2, 4, 5)
for t in range(4):
    alpha = [t * x for x in indicator(S)]
    print(
        t,
        count_dilation(set_to_rsequence(S), t),
        lattice_points_direct(S, t),
        kohnert_monomial_count(alpha) if sum(alpha) <= 12 else "-",
    )

# %% [markdown]
# The lattice points of the first dilate are the indicator vectors of the bases.

# %%
print(lattice_points(S, 1))

# %% [markdown]
# Kohnert diagrams also generate key polynomials; compare with divided differences.

# %%
from schubert_ehrhart import key_polynomial, kohnert_polynomial

print(kohnert_polynomial((0, 2, 1)))
print(key_polynomial((0, 2, 1)))
