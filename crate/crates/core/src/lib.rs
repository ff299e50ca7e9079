//! Kronecker and reduced Kronecker coefficients of symmetric groups computed
//! through the partition algebra, checked against a character-theoretic
//! oracle, together with the set-partition diagram calculus behind them.

pub mod cli;
pub mod diagram_algebra;
pub mod error;
pub mod kronecker;
pub mod lr;
pub mod matrix;
pub mod partitions;
pub mod sweep;
pub mod sym_characters;

pub use error::{Error, Result};
pub use partitions::{BlockChain, PaddedPartition, Partition};
