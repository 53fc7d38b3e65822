//! Quantum register algebra: qubit states and gates as multivectors of the
//! algebra generated by `e1..e2n, er1, er2`.

mod context;
mod gate;
pub mod identities;
mod state;

pub use context::{qra_generator_names, QraContext, MAX_QUBITS};
pub use gate::Gate;
pub use identities::{check_identities, IdentityCheck};
pub use state::RegisterState;

pub use num_complex::Complex64 as ComplexAmp;

use thiserror::Error;

use crate::ga::GaError;
use crate::oracle::OracleError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QraError {
    #[error("qubit count must be between 1 and {MAX_QUBITS}, got {0}")]
    QubitCount(usize),
    #[error("expected {expected} bits, got {got}")]
    BitCount { expected: usize, got: usize },
    #[error("{0} is not a bit")]
    NotABit(u8),
    #[error("basis index {index} out of range for dimension {dimension}")]
    BasisIndex { index: usize, dimension: usize },
    #[error("expected {expected} amplitudes, got {got}")]
    AmplitudeCount { expected: usize, got: usize },
    #[error("{rows}x{cols} matrix does not act on a {dimension}-dimensional register")]
    MatrixShape {
        rows: usize,
        cols: usize,
        dimension: usize,
    },
    #[error("the closed-form SWAP is only defined for 2 qubits, not {0}")]
    SwapNeedsTwoQubits(usize),
    #[error("operands belong to registers of {left} and {right} qubits")]
    ContextMismatch { left: usize, right: usize },
    #[error(transparent)]
    Algebra(#[from] GaError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}
