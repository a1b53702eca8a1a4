"""Exact enumeration and ring arithmetic for shifted edge labeled tableaux."""

from .errors import (
    BadTableau,
    CapacityError,
    ContainmentError,
    DivisibilityError,
    FormError,
    HomogeneityError,
    NotACorner,
    NotASubset,
    NotSlidable,
    SeltError,
    SolveError,
)
from .eyd import ExcitedDiagram, enumerate_eyd, frakd_localization, initial_diagram, local_moves
from .jdt import RectificationTrace, count_d, jdt_slide, rect, rectify
from .ring import RingElement, c_pq, expand_in_sigma_basis, frak_D, frak_d, sigma
from .shapes import (
    Box,
    SkewShape,
    StrictPartition,
    contains,
    inner_corners,
    rho,
    rho_nm,
    skew,
)
from .slide_calc import (
    Shading,
    count_d_staircase,
    i_slide,
    is_bad,
    is_r_compatible,
    is_slidable,
    shading_boxes,
    shading_to_tableau,
    shift_op,
    slide_decomposition,
    tableau_to_shading,
    u_tableau,
)
from .tableaux import (
    EdgeTableau,
    Violation,
    col_set,
    enumerate_selt,
    row_set,
    superstandard,
    validate,
)

__all__ = [name for name in dir() if not name.startswith("_")]
