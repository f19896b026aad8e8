"""bisectlab: a laboratory for large bisections of {C4,C6}-free graphs.

The pipeline: build or load a graph, construct a quasi-perfect matching
(maximum matching plus witnessed and random pairs), run the two-stage
randomized bisection, and audit the outcome against exact combinatorial
facts, closed-form cut probabilities, and brute-force oracles.
"""
from .analyzer import (
    AnalyzerReport,
    CaseConfig,
    EdgePartition,
    SpecialPath,
    analyze_graph,
    case_for_k,
    check_propositions,
    cut_probability_closed_form,
    degeneracy_chain_check,
    edge_partition,
    hou_yan_bound,
    pij_by_enumeration,
    pij_closed_form,
    shearer_bisection_bound,
    sigma_trimmed,
    special_path,
    st_values,
    power_law_bound,
)
from .bisection import (
    BisectionResult,
    BisectionRun,
    audit_run,
    cut_size,
    run_bisection,
    run_once,
    sigma,
    stage1,
    stage2,
)
from .graphs import (
    AugmentationError,
    DegeneracyOrder,
    Graph,
    GraphFormatError,
    GraphInputError,
    build_graph,
    connected_components,
    degeneracy_ordering,
    degree_sequence,
    find_cycle,
    is_free,
    load_graph,
    min_degree,
    parity_augment,
    parse_graph,
    save_graph,
    write_graph,
)
from .matching import (
    AuxiliaryGraph,
    InvalidMatchingError,
    Matching,
    ParityError,
    QuasiPerfectMatching,
    build_auxiliary_graph,
    make_qpm,
    maximum_matching,
    qpm_from_json,
    qpm_to_json,
    quasi_perfect_matching,
    verify_qpm,
)
from .oracle import (
    OracleCapError,
    cut_probability_exact,
    estimate_cut_probability,
    max_bisection_exact,
    max_matching_exact,
)
from .tails import (
    GridReport,
    btail,
    eight_term,
    phi,
    verify_eight_term_grid,
    verify_tail_difference_identity,
    verify_diagonal_four_term,
    verify_shifted_four_term,
    verify_vandermonde,
)

__version__ = "0.1.0"
