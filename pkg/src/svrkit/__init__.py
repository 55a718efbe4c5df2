"""Simultaneous visibility representations: exact geometry, decisions, reductions."""
from ._accel import BACKEND
from .dimacs import Cnf3Instance, NaeInstance, as_nae, parse_dimacs
from .geometry import (
    Coord, Drawing, Family, GraphPair, Interval, PathPair, Shape, lshape, normalize_path_pair, rect,
    shapes_disjoint, unit_square, x_projection, y_projection,
)
from .oracle import SearchBudget, brute_force_nae, brute_force_sat, brute_force_svr, exhaustive_lsvr_check
from .paths import (
    algorithm_a, check_condition, decide_lsvr, decide_square_rect_svr, lsvr_decision, lsvr_paths,
    monotone_profile, orientation_variants,
)
from .reductions import (
    GadgetIndex, build_rsvr_drawing, build_rsvr_instance, build_ussvr_drawing, build_ussvr_instance,
    decode_rsvr_assignment, decode_ussvr_assignment,
)
from .visibility import (
    check_nestedness, check_no_twist, check_thin_overlap, cycle_premise_witness,
    horizontal_visibility_graph, validate_svr, vertical_visibility_graph,
)

__version__ = "0.1.0"
