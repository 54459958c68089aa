//! Computing with finitely generated subgroups of free groups via labeled
//! graphs, and with graphs of free groups via a graph-of-graphs model.
//!
//! The toolkit has three layers:
//!
//! * [`graph`], [`morphism`], [`pullback`]: Stallings graphs — folding,
//!   membership, joins, lifts, and fiber-product intersections.
//! * [`gog`], [`reduction`]: the graph-of-graphs model for a graph of free
//!   groups mapping to a free group, and the moves (M1)–(M7) that reduce it
//!   to all-valence-three form under a lexicographic complexity measure.
//! * [`shnc`]: triple-intersection statistics on reduced valence-three
//!   instances, the Euler-characteristic identity, the intersection
//!   inequality sweep, bigon resolution, and the rank experiment.
//!
//! [`oracle`] is an independent brute-force baseline used by the test
//! suites; it is intentionally naive.

pub mod dot;
pub mod error;
pub mod gog;
pub mod graph;
pub mod instance;
pub mod morphism;
pub mod oracle;
pub mod pullback;
pub mod reduction;
pub mod shnc;
pub mod word;

pub use error::GogError;
pub use graph::LabeledGraph;
pub use morphism::GraphMorphism;
pub use word::{Letter, Word};
