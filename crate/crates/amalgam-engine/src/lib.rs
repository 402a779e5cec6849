//! Trees of finite groups and their tree products: canonical normal forms,
//! bounded subgroup closures and intersections, contraction and folding
//! moves, and finite certificates for embedding a compatible family of
//! vertex subgroups.

mod certify;
mod elem;
mod ops;
mod tree;

pub use certify::{certify_embedding, check_embedded_intersections, EmbeddingCertificate, SubtreeSpec};
pub use elem::{AmalgamElement, Elem};
pub use ops::{closure_bounded, contract, flatten, fold, intersect_subgroups, ContractMap};
pub use tree::{shared_root_edge, EdgeData, EdgeSpec, TreeOfGroups, Vertex, VertexGroupKind};
