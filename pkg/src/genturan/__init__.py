"""Exact generalized Turan numbers for forbidden long cycles and bounded
matching number: closed-form values, extremal witness constructions,
verification primitives, and an exhaustive small-order oracle."""

from .blocks import BlockDecomposition, block_decomposition, star_transform
from .constructors import (
    BlockStarSpec,
    HGraphParams,
    build_H,
    build_St1,
    build_St2,
    build_block_star,
    build_extremal_odd,
    build_multipartite_G,
    build_woodall_G0,
    format_block_star_spec,
    parse_block_star_spec,
    st1_spec,
    st2_spec,
)
from .cycles import (
    circumference,
    circumference_by_enumeration,
    find_cycle_geq,
    has_cycle_geq,
)
from .errors import (
    BudgetExceededError,
    DisconnectedGraphError,
    GraphFormatError,
    OracleSizeError,
    ParameterError,
    SizeLimitError,
)
from .family import FamilyCheckReport, ForbiddenFamily, is_family_free
from .formulas import (
    EvenCaseParams,
    ExtremalValue,
    OddCaseParams,
    even_case_params,
    ex_even,
    ex_even_edges,
    ex_matching_only,
    ex_odd,
    f_value,
    g_value,
    h_value,
    odd_case_params,
    tau,
    woodall_bound,
)
from .graph_io import (
    from_edgelist,
    from_graph6,
    read_graph,
    to_edgelist,
    to_graph6,
    write_graph,
)
from .graphs import Graph, count_cliques, count_cliques_by_enumeration, switch_vertex
from .matching import (
    BergeTutteCertificate,
    berge_tutte_certificate,
    max_matching,
    max_matching_by_enumeration,
    maximum_matching_edges,
)
from .optimizer import FeasibleTriple, enumerate_feasible, extremal_even_witness, maximize_g
from .oracle import (
    OracleResult,
    RegionReport,
    RegionRow,
    brute_force_ex,
    canonical_graph,
    canonical_graph6,
    enumerate_family_free,
    verify_formula_region,
)

__version__ = "0.1.0"

__all__ = [
    "BergeTutteCertificate",
    "BlockDecomposition",
    "BlockStarSpec",
    "BudgetExceededError",
    "DisconnectedGraphError",
    "EvenCaseParams",
    "ExtremalValue",
    "FamilyCheckReport",
    "FeasibleTriple",
    "ForbiddenFamily",
    "Graph",
    "GraphFormatError",
    "HGraphParams",
    "OddCaseParams",
    "OracleResult",
    "OracleSizeError",
    "ParameterError",
    "RegionReport",
    "RegionRow",
    "SizeLimitError",
    "berge_tutte_certificate",
    "block_decomposition",
    "brute_force_ex",
    "build_H",
    "build_St1",
    "build_St2",
    "build_block_star",
    "build_extremal_odd",
    "build_multipartite_G",
    "build_woodall_G0",
    "canonical_graph",
    "canonical_graph6",
    "circumference",
    "circumference_by_enumeration",
    "count_cliques",
    "count_cliques_by_enumeration",
    "enumerate_family_free",
    "enumerate_feasible",
    "even_case_params",
    "ex_even",
    "ex_even_edges",
    "ex_matching_only",
    "ex_odd",
    "extremal_even_witness",
    "f_value",
    "find_cycle_geq",
    "format_block_star_spec",
    "from_edgelist",
    "from_graph6",
    "g_value",
    "h_value",
    "has_cycle_geq",
    "is_family_free",
    "max_matching",
    "max_matching_by_enumeration",
    "maximize_g",
    "maximum_matching_edges",
    "odd_case_params",
    "parse_block_star_spec",
    "read_graph",
    "st1_spec",
    "st2_spec",
    "star_transform",
    "switch_vertex",
    "tau",
    "to_edgelist",
    "to_graph6",
    "verify_formula_region",
    "woodall_bound",
    "write_graph",
]
