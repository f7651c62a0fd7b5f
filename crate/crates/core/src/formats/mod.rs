//! Text formats: graph6, JSON families and graphs, DOT.

pub mod dot;
pub mod graph6;
pub mod json;

pub use dot::to_dot;
pub use graph6::{decode_graph6, encode_graph6};
pub use json::{FamilyJson, GraphJson};
