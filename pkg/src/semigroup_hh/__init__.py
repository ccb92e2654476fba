"""Exact Hochschild cohomology of the numerical-semigroup hypersurfaces
k[s^a, s^b] = k[x1, x2]/(x1^a - x2^b) for coprime a, b >= 2, over any field
characteristic: graded dimensions and bases, cup products, a presentation by
generators and relations, and bigraded Hilbert series, everything in exact
arithmetic and cross-checked along independent routes.
"""

from .classify import StandardClassLabel, count_by_bidegree, reduce_to_standard, standard_basis
from .coefficients import CaseTag, Context, FieldSpec, make_context
from .cochain import Cochain, hh_dimension
from .cup import cup_closed_form, cup_coords, cup_labels
from .hilbert import compare_with_counts, series_case_i, series_case_ii
from .oracle import bar_hh_dimension
from .presentation import PresentedRing, iso_check
from .reports import JobConfig, run_verify
from .semigroup import NotInSemigroup, SemigroupPair

__version__ = "1.0.0"

__all__ = [
    "CaseTag", "Cochain", "Context", "FieldSpec", "JobConfig",
    "NotInSemigroup", "PresentedRing", "SemigroupPair", "StandardClassLabel",
    "bar_hh_dimension", "compare_with_counts", "count_by_bidegree",
    "cup_closed_form", "cup_coords", "cup_labels", "hh_dimension",
    "iso_check", "make_context", "reduce_to_standard", "run_verify",
    "series_case_i", "series_case_ii", "standard_basis",
]
