"""Limit sets of semi-arithmetic Fuchsian groups.

Exact arithmetic in totally real number fields (``numfield``), Moebius
transformations and their Galois-conjugate tuples (``moebius``), group
specifications and word enumeration (``groups``), limit-set analyses
(``limits``) and a command-line front end (``cli``).
"""
__version__ = "0.1.0"

from .errors import LimitConeError
from .numfield import FieldElement, NumberField, chebyshev_trace, embed, field_create
from .moebius import (
    MoebiusElement,
    axis_reflections,
    classify,
    fixed_points,
    product_type_predict,
    schottky_powers,
    translation_direction,
    translation_length,
    tuple_embed,
)
from .groups import (
    GroupSpec,
    detect_unbounded,
    enumerate_group,
    hecke_group,
    invariant_traces,
    load_spec,
    pslz_diagonal,
    triangle_q_inf_inf,
)
from .limits import (
    cone_hull,
    direction_cloud,
    find_mixed_witness,
    furstenberg_cloud,
    parabolic_family,
    torus_orbit,
    zariski_check,
)
