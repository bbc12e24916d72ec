//! Subalgebras of the classical realizations: blocks, Levis, horospherical
//! subalgebras, `g2`, `spin(7)`, and the tabulated families.

mod build;
mod embedding;
mod frame;
mod resolve;
mod special;
mod table3;
mod table4;

pub use embedding::{
    horospherical_from_parabolic, levi_of_parabolic, node_list, parabolic_omitting, Embedding, EmbeddingMeta,
    LeviPart, ParabolicSpec, TableRef,
};
pub use build::*;
pub use frame::Frame;
pub use resolve::{borel_parabolic, resolve, resolve_parabolic, MAX_ID_SIZE};
pub use special::{g2_basis, spin7_basis};
pub use table3::{
    table1_instances, table1_rows, table3_instances, table3_rows, Factor, Params, Table1Instance, Table1Row,
    Table3Instance, Table3Row,
};
pub use table4::{table4_instance, table4_instances, table4_rows, Column, Table4Instance, Table4Row};

use thiserror::Error;

use crate::lie::BuildError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown id {0:?}")]
    UnknownId(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("simple root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("{0} is listed for reference only and has no matrix model here")]
    NotBuildable(String),
    #[error("{0} requires --enable-spin")]
    SpinDisabled(String),
    #[error(transparent)]
    Build(#[from] BuildError),
}
