//! Exact and approximate solvers for vertex-ordering problems.
//!
//! Four objectives are supported over directed (optionally arc-weighted)
//! graphs: feedback arc set, directed cutwidth, optimal linear arrangement
//! (directed and undirected) and directed pathwidth. The crate provides
//!
//! * objective evaluators for an arbitrary vertex ordering ([`eval`]),
//! * Held-Karp style subset dynamic programs computing exact optima
//!   ([`subset_dp`]),
//! * an exact directed minimum `(k, n-k)`-cut solver via a tripartite
//!   minimum-weight triangle reduction, and a rounding-based approximation
//!   for large weights ([`kcut`]),
//! * the balanced-cut approximation algorithms and the self-improving
//!   feedback arc set scheme built on top of them ([`approx`]),
//! * brute-force permutation oracles used to certify all of the above
//!   ([`oracle`]).
//!
//! ```
//! use vorder::{io, subset_dp, approx};
//!
//! let g = io::parse_graph("p dg 3 3\na 1 2\na 2 3\na 3 1\n").unwrap();
//! let exact = subset_dp::fas_exact(&g).unwrap();
//! assert_eq!(exact.value, 1);
//! let approx = approx::fas_balanced_approx(&g, approx::CutMode::Exact).unwrap();
//! assert!(approx.report.value <= 2 * exact.value);
//! ```

pub mod approx;
pub mod error;
pub mod eval;
pub mod gen;
pub mod graph;
pub mod io;
pub mod kcut;
pub mod oracle;
pub mod report;
pub mod subset_dp;

pub use error::{Error, ParseError, Result};
pub use graph::{Arc, Digraph, Ordering, VertexMap, VertexSet, Weight};
pub use report::{Factor, Objective, SolveReport, Stats};
