//! Exact hardness of clutters.
//!
//! A clutter is a family of vertex subsets (edges) none of which contains
//! another. For an edge `e`, a recognizing subset is a part of `e` that no
//! other edge contains; the hardness of `e` is the size of its smallest
//! recognizing subset divided by `|e|`, and the hardness of the clutter is
//! the maximum over its edges.
//!
//! The crate computes these values exactly, builds clutters from graphs
//! (maximal independent sets, maximal matchings), generates the named
//! extremal families and random instances, and checks hardness values
//! against the known lower bounds with integer-only arithmetic.
//!
//! ```
//! use clutterkit::{constructions, hardness, bounds, Rational};
//!
//! let c = constructions::extremal_clutter(3).unwrap();
//! assert_eq!(hardness::clutter_hardness(&c).overall, Rational::new(1, 5));
//! let cmp = bounds::compare_main_bound(Rational::new(1, 5), 9).unwrap();
//! assert_eq!(cmp.relation, bounds::Relation::Equal);
//! ```

pub mod bitset;
pub mod bounds;
pub mod clutter;
pub mod constructions;
pub mod graph;
pub mod hardness;
pub mod hitting_set;
pub mod io;
pub mod json_int;
pub mod rational;
pub mod rng;
pub mod surd;

pub use bitset::{EdgeSet, VertexId};
pub use clutter::{normalize_antichain, Clutter, ClutterError};
pub use graph::{Graph, GraphError};
pub use rational::Rational;
