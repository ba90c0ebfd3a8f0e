"""Exact-arithmetic toolkit for point visibility graphs."""

from .blockers import (PhiResult, add_universal, add_universal_point,
                       moment_curve_embedding, phi, phi_embedding)
from .core import (Embedding, diameter, hamiltonian_cycle, is_path_graph,
                   realizes, visibility_graph)
from .domination import StarLine, StarLines, min_degree_dominating, star_lines
from .errors import (BoundViolationError, CoverageViolationError,
                     DegenerateSegmentError, DuplicatePointsError,
                     NotNonPathError, SchemaError, SizeMismatchError)
from .geometry import (Point, Rational, convex_hull, convex_layers,
                       line_direction, orientation, point_on_open_segment,
                       primitive_direction, segment_line_params)
from .graphs import (Graph, complete_graph, cycle_graph, disjoint_union,
                     empty_graph, path_graph, star_graph)
from .grid import (BoundRow, GridSpec, abbott_bounds, abbott_lower,
                   abbott_upper, bounds_csv, bounds_table, fpt_dominating,
                   grid_embedding, grid_index, grid_min_dominating, grid_points,
                   grid_pvg, grid_visible)
from .reductions import (Family, Instance, Provenance, ReducedInstance,
                         ramsey_threshold, reduce_bisection, reduce_ffvd,
                         reduce_fvs, reduce_lip, strip_universal,
                         validate_family)
from .solvers import (DominatingWitness, Witness, cut_size, greedy_dominating,
                      is_acyclic, is_dominating, is_f_free, max_cut,
                      min_bisection, solve_bisection, solve_dominating,
                      solve_ffvd, solve_fvs, solve_lip, solve_max_cut,
                      solve_min_dominating)
from .verify import random_embedding, random_graph, verify_reduction

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
