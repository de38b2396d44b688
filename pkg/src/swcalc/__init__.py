"""Symbolic calculator for simply connected smooth 4-manifolds.

Builds manifolds from standard pieces by surgery operations, tracks the
classical invariants, and computes Seiberg-Witten invariants as exact
Laurent polynomials, with an Alexander polynomial engine feeding the knot
surgery formula.
"""

from .errors import *  # noqa: F401,F403
from .laurent import (  # noqa: F401
    LaurentPoly,
    VarBasis,
    exact_div,
    is_symmetric,
    parse_poly,
)
from .knots import (  # noqa: F401
    LinkDiagram,
    alexander_fox,
    alexander_skein,
    braid_closure,
    connect_sum,
    figure_eight,
    hopf_link,
    load_knot_table,
    mirror,
    parse_pd,
    pretzel,
    torus_knot,
    trefoil,
    twist_knot,
    unknot,
)
from .manifolds import (  # noqa: F401
    CharInvariants,
    ManifoldDesc,
    SurfaceLabel,
    blowup,
    branched_cover_pair,
    connected_sum,
    cp2,
    cp2_bar,
    elliptic,
    fiber_sum,
    homeo_equal,
    horikawa,
    knot_surgery,
    rational_blowdown,
    reverse_orientation,
    s2xs2,
    torus_surgery,
)
from .sw import (  # noqa: F401
    ConfigIntersections,
    SWInvariant,
    blowup_formula,
    chamber_series_e1,
    count_basic_classes,
    descend,
    double_log_transform,
    e1_relative,
    from_manifold,
    glue,
    knot_surgery_formula,
    log_transform,
    relative_from_closed,
    standard_blowdown_rows,
    sw_dimension,
    sw_e1_twist_knot,
    sw_elliptic,
    t2d2_piece,
    wall_crossing_delta,
)
from .geography import (  # noqa: F401
    basic_class_bound,
    chart_rows,
    classify,
    spin_congruence,
)

__version__ = "0.1.0"
