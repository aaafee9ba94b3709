"""Gallai, anti-Gallai and line graph operators on strongly regular graphs,
with exact regularity classification, adjacency spectra and mechanical
verification of the structural theorems."""
from .errors import (ConvergenceError, FeasibilityError, Graph6ParseError, GraphError,
                     InputError)
from .generators import SRG_CORPUS, corpus_graph, generate
from .graph import (INFINITY, Graph, common_neighbors, components, degree, distance,
                    induced_subgraph, is_connected, relabel)
from .io import Report, iter_graph6, parse_edgelist, parse_graph6, write_edgelist, write_graph6
from .kernels import BACKEND
from .operators import (DerivedGraph, anti_gallai, complement, gallai, join, line_graph,
                        semi_total_point)
from .regularity import RegularityReport, classify
from .spectral import (Spectrum, eigenvalues, interlaces, rcn_spectrum, spectrum_in_band,
                       srg_spectrum)
from .structure import (edges_on_common_cycle, edges_span_triangle, has_forbidden_induced,
                        is_two_connected, neighborhood_is_fan, triangle_count_through_edge,
                        wheels_at_vertex)
from .theorems import THEOREMS, TheoremVerdict, verify

__version__ = "0.1.0"
