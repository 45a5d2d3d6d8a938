//! Exact references: girth, brute-force optimum, and the girth-graph check.

pub mod brute;
pub mod girth;
pub mod lemma;

pub use brute::{
    binomial, brute_force_optimum, brute_force_with_limit, OptimalSolution, OptimalSummary,
    COMBINATION_LIMIT,
};
pub use girth::{
    check_girth_lemma, girth, lemma_edge_count, shortest_cycle, GirthLemmaReport, UGraph,
};
pub use lemma::{
    build_girth_graph, verify_main_lemma, CaseCheck, CycleCheck, GirthEdge, GirthGraph,
    LemmaOutcome, LemmaReport, RoutedEdge,
};
