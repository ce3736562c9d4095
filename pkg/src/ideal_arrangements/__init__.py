"""Ideal-type hyperplane arrangements of root systems: root posets, ideals,
intersection lattices, freeness certificates and region generating functions."""
from .rootsys import RootSystem, build_root_system, WeylBudgetError
from .ideals import (Ideal, parse_ideal, enumerate_ideals, count_ideals,
                     ideal_exponents, height_ideal)
from .arrangement import Arrangement, from_roots, localization, restriction, char_poly
from .idealtype import (arrangement_of_ideal_type, check_condition, classify_ideal,
                        reduce_via_condition)
from .freecert import (inductively_free, supersolvable, inductively_factored,
                       nice_partition, verify_certificate)
from .poincare import poincare_poly, factorization_check, modular_fiber_factorization

__all__ = [
    "RootSystem", "build_root_system", "WeylBudgetError",
    "Ideal", "parse_ideal", "enumerate_ideals", "count_ideals", "ideal_exponents", "height_ideal",
    "Arrangement", "from_roots", "localization", "restriction", "char_poly",
    "arrangement_of_ideal_type", "check_condition", "classify_ideal", "reduce_via_condition",
    "inductively_free", "supersolvable", "inductively_factored", "nice_partition",
    "verify_certificate",
    "poincare_poly", "factorization_check", "modular_fiber_factorization",
]
