# %% [markdown]
# # Counting lattice points with offset paths
#
# A Schubert matroid is fixed by a set S; its polytope's dilates are counted
# by summing products of F(a, b, c, t) over bounded offset paths.

# %%
from __future__ import annotations

from schubert_ehrhart import (
    count_dilation,
    ehrhart_polynomial,
    iter_paths,
    set_to_rsequence,
    uv_bounds,
)
from schubert_ehrhart.ehrhart import path_weight

S = {3, 6, 8}
r = set_to_rsequence(S)
print("r(S) =", r)
print("u, v =", tuple(uv_bounds(r)))

# %% [markdown]
# At t = 1 there are five admissible paths; each contributes the product of
# its block weights.

# %%
for path in iter_paths(r, 1):
    print(path, path_weight(r, 1, path))
print("i(r, 1) =", count_dilation(r, 1))

# %% [markdown]
# Counts at t = 0..n determine the Ehrhart polynomial exactly.

# %%
poly = ehrhart_polynomial(r)
print(poly)
print([count_dilation(r, t) for t in range(6)])
print([poly(t) for t in range(6)])
