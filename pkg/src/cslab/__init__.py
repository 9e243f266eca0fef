"""Exact-arithmetic toolkit for chromatic symmetric functions of graphs.

Expand the chromatic symmetric function of a graph in the monomial,
power-sum, elementary, or Schur basis; extract single coefficients by
direct rules without a full expansion; screen parameterized tree families
for e- and Schur-positivity with exact integer certificates; and sweep
whole families to machine-check positivity classifications.
"""

from __future__ import annotations

from .csf import (
    CsfResult,
    ROUTES,
    broom_csf,
    compute_csf,
    csf_via_edge_subsets,
    csf_via_stable_partitions,
    extract_coefficient,
    path_csf_e,
    spider_csf,
    triple_deletion,
    wolfe_path_coefficient,
)
from .errors import (
    BadParity,
    BadSpec,
    BasisMismatch,
    DegreeMismatch,
    EmptyFunction,
    NotBipartite,
    NotConnected,
    NotStableTriple,
    SingularSystem,
    TooLarge,
    TooManyBlocks,
    UnknownSuite,
)
from .graphs import (
    Graph,
    balanced_stable_bipartition,
    build_family,
    chromatic_polynomial,
    count_stable_partitions,
    enumerate_stable_partitions,
    has_connected_partition,
    independence_number,
    parse_graph_spec,
    random_graph,
    random_tree,
    spider_legs,
)
from .partitions import (
    MultiplicityForm,
    Partition,
    enumerate_partitions,
    factorials,
    numerical_semigroup_gap,
    parse_partition,
    sort_to_partition,
)
from .positivity import (
    CONJECTURES,
    ConjectureCheck,
    PositivityReport,
    SCREENER_NAMES,
    SweepResult,
    SweepRow,
    Witness,
    check_conjecture,
    e_positivity,
    lemma_2odds_coefficient,
    run_sweep,
    schur_positivity,
    screen_spider,
)
from .rimhook import (
    SchurCoefficientTrace,
    SpecialRimHookTabloid,
    enumerate_srht,
    inverse_kostka_matrix,
    schur_coefficient,
    schur_expansion_solve,
)
from .suites import SUITES, SuiteReport, verify_suite
from .symfunc import (
    SymFunc,
    change_basis,
    e_to_m,
    kostka_number,
    m_multiply,
    p_to_m,
    s_to_m,
    specialize_ones,
)

__all__ = [
    "BadParity",
    "BadSpec",
    "BasisMismatch",
    "CONJECTURES",
    "ConjectureCheck",
    "CsfResult",
    "DegreeMismatch",
    "EmptyFunction",
    "Graph",
    "MultiplicityForm",
    "NotBipartite",
    "NotConnected",
    "NotStableTriple",
    "Partition",
    "PositivityReport",
    "ROUTES",
    "SCREENER_NAMES",
    "SUITES",
    "SchurCoefficientTrace",
    "SingularSystem",
    "SpecialRimHookTabloid",
    "SuiteReport",
    "SweepResult",
    "SweepRow",
    "SymFunc",
    "TooLarge",
    "TooManyBlocks",
    "UnknownSuite",
    "Witness",
    "balanced_stable_bipartition",
    "broom_csf",
    "build_family",
    "change_basis",
    "check_conjecture",
    "chromatic_polynomial",
    "compute_csf",
    "count_stable_partitions",
    "csf_via_edge_subsets",
    "csf_via_stable_partitions",
    "e_positivity",
    "e_to_m",
    "enumerate_partitions",
    "enumerate_srht",
    "enumerate_stable_partitions",
    "extract_coefficient",
    "factorials",
    "has_connected_partition",
    "independence_number",
    "inverse_kostka_matrix",
    "kostka_number",
    "lemma_2odds_coefficient",
    "m_multiply",
    "numerical_semigroup_gap",
    "p_to_m",
    "parse_graph_spec",
    "parse_partition",
    "path_csf_e",
    "random_graph",
    "random_tree",
    "run_sweep",
    "s_to_m",
    "schur_coefficient",
    "schur_expansion_solve",
    "schur_positivity",
    "screen_spider",
    "sort_to_partition",
    "specialize_ones",
    "spider_csf",
    "spider_legs",
    "triple_deletion",
    "verify_suite",
    "wolfe_path_coefficient",
]
