"""Enumeration and classification of partial Latin rectangles and of
self-orthogonal partial Latin squares, by two independent routes: direct
combinatorial backtracking and a boolean Groebner-basis / Hilbert-function
engine over F2."""

from .plr import (GridError, Isotopism, Paratopism, PartialLatinRectangle)
from .hamming import (CapacityError, HammingGraph, SizeDistribution, build,
                      closed_form_count, independence_polynomial)
from .groebner import (BoolIdeal, BoolRing, GroebnerBasis, HilbertData,
                       buchberger, hilbert_function, normal_form,
                       standard_monomials, variety)
from .ideals import (SubstitutionConflict, decode_extension_point,
                     decode_isotopism_point, decode_plr_point,
                     encode_plr_point, ideal_corner_b, ideal_corner_c,
                     ideal_extension, ideal_isotopism, ideal_plr, ideal_sor)
from .enumeration import (StratifiedCounts, complete_sor, count_plr_by_size,
                          count_sor_by_size, count_sor_exact_symbols,
                          enumerate_sor, enumerate_sor_extensions,
                          sigma_closed_form, sigma_closed_form_displayed,
                          sor_total_formula, stratified_counts)
from .classify import (IsotopismSet, MainClassCatalog, burnside_orbit_size,
                       count_isotopisms, isotopism_set, main_class_table,
                       main_classes, same_main_class)
from .strategies import (default_split, extend_by_new_symbol,
                         sor_distribution_direct_sum,
                         sor_distribution_stratified)

__version__ = "0.1.0"
