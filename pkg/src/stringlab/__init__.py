"""Recognition of subcubic string graphs, obstacle certification and
explicit string representations."""

from __future__ import annotations

__version__ = "0.1.0"

from .graph import (EdgeSet, Graph, GraphError, Matching, contract_matching, density, girth,
                    has_k23_subgraph, has_triangle, is_isomorphic, one_step_minors, parse_edge_list,
                    format_edge_list, subdivide)
from .planarity import (InterlacementGraph, NonPlanarError, PlanarEmbedding, cycle_exterior_planar,
                        euler_girth_reject, interlacement_graph, is_planar, planar_embedding)
from .recognition import (BudgetExceeded, Status, Verdict, enumerate_cubic_matchings,
                          find_planarizing_matching, recognize, recognize_sufficient)
from .families import (LcfSpec, lcf, lcf_face_cycles, lcf_nonpath_matching, named, necklace,
                       necklace_hat)
from .obstacles import (HiInstance, MinimalityReport, certify_minimal_obstacle, girth_bound_audit,
                        hi_witness_search)
from .representation import (StringRepresentation, build_representation, export_svg,
                             validate_representation)
