//! Exact domination analysis for small graphs: invariants of the domination
//! chain γ ≤ i ≤ α ≤ Γ with deterministic witnesses, graph products
//! (Cartesian, direct, strong) and the corona with K1, structural recognizers
//! for well-dominated products, and a check harness that sweeps theorem-shaped
//! claims over a bundled corpus of small connected graphs.

pub mod engine;
pub mod graph;
pub mod harness;
pub mod io;
pub mod iso;
pub mod products;
pub mod recognize;

pub use engine::{
    c_set, greedy_minimalize, is_dominating, is_minimal_dominating, EngineError, ExactEngine,
    InvariantReport, DEFAULT_EXACT_CAP, SEARCH_ORDER_LIMIT,
};
pub use graph::{complete, cycle, path, star, Family, Graph, GraphError, Induced, VertexSet};
pub use harness::{
    check_cartesian_constructions, check_chain, check_corona_direct_identity,
    check_direct_lemmas, check_hereditary, check_self_test_violation, check_strong_bounds,
    cross_validate_cartesian, cross_validate_direct, cross_validate_strong, hunt_conjecture,
    parse_suites, run_suites, CheckRecord, HarnessConfig, HarnessError, SuiteId, SuiteReport,
};
pub use io::{
    emit_graph6, load_shipped_corpus, parse_edge_list, parse_graph6, Corpus, CorpusEntry,
    IoError, ReportHeader, SHIPPED_CONNECTED_COUNTS, SHIPPED_MAX_ORDER,
};
pub use iso::{are_isomorphic, DEFAULT_ISO_CAP};
pub use products::{
    cartesian_product, corona_k1, direct_product, pair_index, product, strong_product,
    ProductError, ProductKind, PRODUCT_ORDER_CAP,
};
pub use recognize::{
    cartesian_necessary_conditions, cartesian_with_complete_well_dominated, classify_structure,
    direct_product_well_dominated, recognize_corona, strong_with_complete_well_dominated,
    ConditionAudit, ConditionOutcome, ConditionStatus, RecognitionVerdict, RecognizeError,
    StructureClass, Verdict,
};
