"""Companion models: Riemann sphere, complex 1-sphere, finite magmas."""

from .complex_sphere import (ComplexPair, complex1_inverse, complex1_left_inner,
                             complex1_left_matrix, complex1_odot)
from .finite import (FiniteMagma, bloop_to_quasigroup, check_bloop_axioms,
                     check_point_reflection_axioms, check_reflection_axioms, format_table,
                     parse_table, quasigroup_to_bloop, zn_addition, zn_reflection)
from .riemann import INF, riemann_odot, stereo_to_plane, stereo_to_sphere

__all__ = [
    "ComplexPair", "complex1_inverse", "complex1_left_inner", "complex1_left_matrix",
    "complex1_odot", "FiniteMagma", "bloop_to_quasigroup", "check_bloop_axioms",
    "check_point_reflection_axioms", "check_reflection_axioms", "format_table", "parse_table",
    "quasigroup_to_bloop", "zn_addition", "zn_reflection", "INF", "riemann_odot",
    "stereo_to_plane", "stereo_to_sphere",
]
