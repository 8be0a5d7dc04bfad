//! Independence parameters and α-excellence for simple graphs.
//!
//! A graph is α-excellent when every vertex lies in some maximum independent
//! set. The [`oracle`] decides this by exact search; the [`recognize`]
//! module decides it with structural characterizations for trees, bipartite,
//! unicyclic, simplicial, chordal and block graphs, coronas and generalized
//! Petersen graphs, each verdict carrying a checkable certificate.

mod bitset;
pub mod families;
pub mod graph;
pub mod harness;
pub mod iso;
pub mod matching;
pub mod oracle;
pub mod recognize;

pub use graph::{BlockDecomposition, Graph, GraphError, SimplexSet, Structure, VertexSet};
pub use matching::Matching;
pub use oracle::{AnalysisReport, Oracle, OracleError};
