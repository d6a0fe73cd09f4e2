"""Search and certification toolkit for bipartite Ramsey numbers of even cycles."""

from bramsey._core import (  # noqa: F401
    BipartiteGraph,
    ComputeBrOutcome,
    ConstructionReport,
    CycleWitness,
    Lemma2Result,
    ParseError,
    Prop1Side,
    Prop1SweepReport,
    Prop1Verdict,
    SearchOutcome,
    SearchStats,
    TwoColoring,
    Verdict,
    __version__,
    are_isomorphic,
    check_construction,
    complement,
    compute_br,
    contains_complete,
    decide,
    extend_lemma1,
    extend_lemma2,
    figure1_graph,
    find_cycle,
    find_cycle_through_edge,
    graph_from_json,
    graph_to_json,
    induced,
    lower_bound_certificate,
    normalized,
    oracle_count_cycles,
    oracle_find_cycle,
    proposition1_check,
    proposition1_sweep,
    relabel,
    report_from_json,
    report_to_json,
    seeded_counterexample,
    theorem4_construction,
    transpose,
    validate_witness,
    witness_from_json,
    witness_to_json,
)
