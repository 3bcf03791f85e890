//! Extremal trees for the Wiener index under a fixed degree sequence.
//!
//! The Wiener index of a tree is the sum of distances over all unordered
//! vertex pairs. Among all trees whose internal (non-leaf) degrees form
//! a given multiset, a layered "greedy" construction minimizes it and a
//! "greedy caterpillar" maximizes it. This crate provides:
//!
//! - exact tree, distance, and Wiener index computation ([`tree`],
//!   [`wiener`]), with two independent algorithms for cross-checking;
//! - both extremal constructors and structural checkers ([`construct`]);
//! - path decompositions, degree-preserving exchange moves with exact
//!   closed-form index deltas, and interleaving condition checkers
//!   ([`decompose`], [`exchange`]);
//! - a seeded local-search driver over the exchange neighborhood
//!   ([`search`]);
//! - an exhaustive enumeration oracle over all labeled trees with a
//!   given degree sequence, used to verify both extremality claims at
//!   small scale ([`oracle`]);
//! - JSON and DOT serialization ([`io`]).
//!
//! All arithmetic is exact; distance sums use checked 64-bit integers
//! and vertex counts are capped at [`MAX_VERTICES`].

pub mod canon;
pub mod construct;
pub mod decompose;
pub mod degree;
pub mod error;
pub mod exchange;
pub mod io;
pub mod oracle;
pub mod search;
pub mod tree;
pub mod wiener;

pub use construct::{
    build_greedy_caterpillar, build_greedy_tree, greedy_caterpillar_spine, greedy_violation,
    is_greedy_caterpillar, is_greedy_tree, GreedyViolation, LevelProfile,
};
pub use decompose::PathDecomposition;
pub use degree::DegreeSequence;
pub use error::{Error, Result};
pub use exchange::{
    apply_move, check_degree_interleaving, check_size_interleaving, enumerate_moves,
    predict_branch_move_delta, predict_component_swap_delta, predict_tail_swap_delta, Direction,
    ExchangeMove, MoveKind,
};
pub use oracle::{
    all_degree_sequences, count_labeled, decode_prufer, enumerate_labeled, extremal_scan,
    random_tree, verify_theorems, CoExtremalCounts, ExtremalReport, LabeledTrees, DEFAULT_CAP,
};
pub use search::{local_search, SearchOutcome};
pub use tree::{RootedTree, Tree, Vertex, MAX_VERTICES};
pub use wiener::{closed_form_path, closed_form_star, wiener_edges, wiener_pairwise, WienerValue};
