"""Exact construction, verification and search for higher-power rational
Diophantine triples: tuples of distinct nonzero rationals whose pairwise
products plus one are perfect k-th powers."""

from .rationals import (
    GaussianRational,
    Rational,
    gaussian_kth_root,
    int_kth_root,
    rational_kth_root,
)
from .polynomials import Poly, RatFunc, poly_square_root, reversal, substitute, symmetric_in_u
from .curves import Curve, Point, add, curve_catalog, on_curve, scalar_mul, torsion_order
from .triples import (
    PowerTuple,
    RegularTriple,
    TupleFailure,
    bst_family,
    construct_regular,
    dehomogenize,
    from_taxicab,
    regularity_defect,
    verify_tuple,
)
from .families import FAMILY_IDS, family_rst, family_triple, positivity_classify, symbolic_verify
from .search import (
    pell_parametrize,
    pell_sequence,
    search_integer_pairs,
    sextic_form_check,
    taxicab_search,
)

__version__ = "0.1.0"

__all__ = [
    "Curve",
    "FAMILY_IDS",
    "GaussianRational",
    "Point",
    "Poly",
    "PowerTuple",
    "RatFunc",
    "Rational",
    "RegularTriple",
    "TupleFailure",
    "add",
    "bst_family",
    "construct_regular",
    "curve_catalog",
    "dehomogenize",
    "family_rst",
    "family_triple",
    "from_taxicab",
    "gaussian_kth_root",
    "int_kth_root",
    "on_curve",
    "pell_parametrize",
    "pell_sequence",
    "poly_square_root",
    "positivity_classify",
    "rational_kth_root",
    "regularity_defect",
    "reversal",
    "scalar_mul",
    "search_integer_pairs",
    "sextic_form_check",
    "substitute",
    "symbolic_verify",
    "symmetric_in_u",
    "taxicab_search",
    "torsion_order",
    "verify_tuple",
]
