//! Exact 2-admissibility for sparse graphs.
//!
//! [`engine::decide`] answers whether `adm₂(G) <= p` in `O(p⁴ n)` time using
//! the incremental candidate oracle in [`oracle`]; [`engine::compute`] finds
//! the exact value by searching over `p`. [`engine::verify_ordering`] checks a
//! witness ordering independently of the oracle.
//!
//! ```
//! use adm2::{compute, decide, verify_ordering, Graph};
//!
//! let c6 = Graph::from_edge_list(6, (0..6).map(|i| (i, (i + 1) % 6)));
//! assert!(!decide(&c6, 1).answer());
//! let result = compute(&c6);
//! assert_eq!(result.value, 2);
//! assert_eq!(verify_ordering(&c6, &result.witness).unwrap(), 2);
//! ```

pub mod cli;
pub mod engine;
pub mod error;
pub mod graph;
pub mod oracle;

pub use engine::{compute, decide, verify_ordering, AdmValue, DecideResult};
pub use error::{Error, Result};
pub use graph::{Graph, Ordering, Vertex};
