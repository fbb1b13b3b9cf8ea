"""Exact spectra of Johnson-scheme matrices and Hoffman bounds for forbidden-intersection families."""

from .bose_mesner import (
    ProfileMatrixSpec,
    Spectrum,
    decompose,
    eigenspace_profile,
    spectrum,
    verify_spectrum_dense,
)
from .bounds import hoffman_bound, transitivity_bound, verify_theorem
from .combinatorics import JohnsonParams, KSubset, binomial, rank, unrank
from .extremal import canonical_family, max_independent_set, sporadic_family_k3
from .plane import build_plane, bruck_ryser_excludes, make_field, plane_clique

__version__ = "0.1.0"
