//! Total outer-independent domination (TOIDS) on trees and their subdivision
//! graphs: exact solvers, the two extremal tree families with constructive
//! recognizers, and an exhaustive small-tree verification harness.

pub mod enumerate;
pub mod families;
pub mod graph;
pub mod solver;

pub use families::{Family, OpKind, OperationScript, OperationStep};
pub use graph::{Graph, Neighborhood, Tree, VertexId};
