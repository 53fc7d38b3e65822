//! Geometric algebra kernel: arbitrary-signature algebras, bit-set blades and
//! sparse multivectors.

mod algebra;
mod blade;
mod multivector;

pub use algebra::{Algebra, MAX_DIMENSION};
pub use blade::{blade_from_canonical_index, canonical_index, format_blade, Blade};
pub use multivector::Multivector;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GaError {
    #[error("an algebra needs at least one generator")]
    EmptySignature,
    #[error("{squares} squares given for {names} generator names")]
    LengthMismatch { squares: usize, names: usize },
    #[error("at most {MAX_DIMENSION} generators are supported, got {0}")]
    TooManyGenerators(usize),
    #[error("generator `{generator}` must square to 1 or -1, not {value}")]
    InvalidSquare { generator: String, value: i32 },
    #[error("generator names must be non-empty")]
    EmptyName,
    #[error("duplicate generator name `{0}`")]
    DuplicateName(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("blade {mask:#b} does not belong to an algebra with {dimension} generators")]
    BladeOutOfRange { mask: u64, dimension: usize },
    #[error("grade {grade} is out of range for an algebra with {dimension} generators")]
    GradeOutOfRange { grade: usize, dimension: usize },
    #[error("operands belong to different algebras")]
    AlgebraMismatch,
}
