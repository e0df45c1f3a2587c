//! Brin's higher-dimensional Thompson groups nV as prefix-replacement maps on
//! n-dimensional Cantor space.

pub mod cantor;
pub mod element;
pub mod error;
pub mod expr;
pub mod presentations;
pub mod render;

pub use cantor::{Address, Dyadic, Weight, Word};
pub use element::{bullet_action, Cell, Element};
pub use error::{Error, PartitionFault, Result};
pub use expr::{evaluate_str, parse, Evaluator, GenExpr};
