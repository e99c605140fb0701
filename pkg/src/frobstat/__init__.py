"""Frobenius trace statistics for genus 1 and 2 hyperelliptic curves.

Counting side: reduce y^2 = f(x) at many primes, record L-polynomial
coefficients, normalize.  Exact side: Haar-measure moments and point masses
of the candidate limiting groups, computed by Weyl integration over torus
Laurent polynomials with rational coefficients.  The stats module bridges
the two and ranks candidates; birch and chebotarev hold the fixed-prime
and factorization-shape side experiments.
"""

from .counting import HyperellipticCurve, count_points, good_primes, make_curve
from .haar import catalog, exact_moment, sample_classes, st_axiom_check
from .lpoly import LPoly, lpoly_from_counts, normalize, predicted_count, weil_check
from .scan import ScanConfig, run_scan, scan_curve
from .stats import ScanRecord, classify, empirical_density, empirical_moments

__all__ = [
    "HyperellipticCurve",
    "make_curve",
    "count_points",
    "good_primes",
    "LPoly",
    "lpoly_from_counts",
    "predicted_count",
    "normalize",
    "weil_check",
    "catalog",
    "exact_moment",
    "sample_classes",
    "st_axiom_check",
    "ScanRecord",
    "empirical_moments",
    "empirical_density",
    "classify",
    "ScanConfig",
    "run_scan",
    "scan_curve",
]

__version__ = "0.1.0"
