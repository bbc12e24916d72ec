//! Exact computation of the complexity of subgroup-pair actions on
//! classical groups, with a catalog of embeddings and a harness that
//! re-derives the known classification tables.

pub mod catalog;
pub mod claims;
pub mod engine;
pub mod exec;
pub mod linalg;
pub mod lie;
pub mod roots;
pub mod sampler;
