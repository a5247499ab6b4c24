"""Graph energy as a series in even adjacency powers, with subgraph bounds."""

from .bounds import (
    BoundReport,
    bound1,
    bound2,
    bound3,
    bound_chain_report,
    fragment_first_term,
    fullerene_bound,
    mcclelland,
)
from .census import SubgraphCensus, census_bruteforce, census_formulas, moments_from_census
from .errors import (
    CensusInconsistencyError,
    ConvergenceError,
    DisconnectedGraphError,
    GraphEnergyError,
    GraphFormatError,
    PreconditionError,
    TraceOverflowError,
)
from .graph import Graph, ValidationReport, generate, parse_edge_list, parse_graph6, read_graph, validate
from .series import (
    SeriesExpansion,
    binomial_half,
    converge,
    expand,
    partial_sum,
    series_coefficient_alt,
    trace_b_power,
)
from .spectral import Spectrum, eigenvalues, energy_exact, spectral_radius, trace_power

__version__ = "0.1.0"
