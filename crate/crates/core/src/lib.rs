//! Quantum register algebra on a sparse geometric algebra kernel.
//!
//! * [`ga`]: algebras of arbitrary signature, bit-set blades, multivectors.
//! * [`qra`]: qubit registers, the Witt basis, bra/ket embedding and gates.
//! * [`script`]: the GAALOP-style script language and `Definition.csv`.
//! * [`oracle`]: a plain complex-matrix simulator used for cross-checks.

pub mod ga;
pub mod oracle;
pub mod qra;
pub mod script;

pub use ga::{Algebra, Blade, GaError, Multivector};
pub use qra::{Gate, QraContext, QraError, RegisterState};
