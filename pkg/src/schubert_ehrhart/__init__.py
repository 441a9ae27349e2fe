"""Exact Ehrhart polynomials of Schubert matroid polytopes.

The counting engine sums products of ``F(a, b, c, t)`` over bounded offset
paths; :mod:`.oracles` supplies independent brute-force counts and
:mod:`.lab` runs the identity suite and the positivity scans.
"""
from __future__ import annotations

from .combinatorics import (
    Composition,
    binomial,
    enumerate_gamma,
    eulerian,
    stirling_first_unsigned,
    weighted_lah,
)
from .ehrhart import (
    catalan_bar_polynomial,
    catalan_difference_polynomial,
    catalan_polynomial,
    count_dilation,
    ehrhart_polynomial,
    f_closed,
    f_generating_function,
    f_polynomial,
    f_stable_interpolant,
    four_block_count,
    iter_paths,
    minimal_count,
    rank2_count,
    rank3_count,
    sparse_paving_count,
    uniform_coefficient,
    uniform_count,
)
from .lab import (
    ScanReport,
    check_sparse_paving_bounds,
    run_identity_suite,
    scan_catalan_conjectures,
    scan_f_positivity,
)
from .oracles import (
    Budget,
    BudgetExceeded,
    f_bruteforce,
    key_polynomial,
    kohnert_closure,
    kohnert_monomial_count,
    kohnert_polynomial,
    lattice_points_direct,
)
from .polynomial import RationalPolynomial, interpolate
from .schubert import (
    bases,
    circuit_hyperplanes,
    dual_rsequence,
    is_sparse_paving,
    parse_rsequence,
    parse_set,
    rank,
    rsequence_to_set,
    set_to_rsequence,
    sparse_paving_pattern,
    uv_bounds,
)

__version__ = "0.1.0"
