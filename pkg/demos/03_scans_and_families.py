# %% [markdown]
# # Families, bounds and positivity scans
#
# Uniform, minimal and sparse paving matroids share a ground set and rank;
# their Ehrhart polynomials nest coefficientwise.

# %%
from __future__ import annotations

from schubert_ehrhart.lab import (
    check_sparse_paving_bounds,
    scan_catalan_conjectures,
    scan_f_positivity,
    sparse_paving_polynomials,
)

for name, poly in zip(("minimal", "sparse paving", "uniform"), sparse_paving_polynomials(3, 7)):
    print(f"{name:>13}: {poly}")

print("bounds hold for n <= 8:", check_sparse_paving_bounds(8).ok)

# %% [markdown]
# F(a, b, c, t) is a polynomial in t once t >= |c|.  Its coefficients stay
# positive for |c| <= 1 and break for larger |c|.

# %%
report = scan_f_positivity(3, 3, 3)
for p in report.points:
    if p["a"] == p["b"] == 2:
        print(p["c"], p["verdict"], p.get("witness"))
print("matches the expected pattern:", report.ok)

# %% [markdown]
# The Catalan scan checks two more positivity patterns built from the
# cyclic-composition recursion.

# %%
print("catalan scan clean:", scan_catalan_conjectures(4, 2, 2).ok)
