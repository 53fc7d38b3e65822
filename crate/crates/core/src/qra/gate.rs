use super::{QraContext, QraError, RegisterState};
use crate::ga::Multivector;
use crate::oracle::{gate_matrix, ComplexMatrix, GateKind};

/// An operator on the register, stored as a multivector and applied by the
/// geometric product.
#[derive(Debug, Clone)]
pub struct Gate {
    context: QraContext,
    mv: Multivector,
}

impl Gate {
    /// Wraps an arbitrary multivector of the context algebra as an operator.
    pub fn from_multivector(context: &QraContext, mv: Multivector) -> Result<Self, QraError> {
        if mv.algebra() != context.algebra() {
            return Err(QraError::Algebra(crate::ga::GaError::AlgebraMismatch));
        }
        Ok(Self {
            context: context.clone(),
            mv,
        })
    }

    pub fn context(&self) -> &QraContext {
        &self.context
    }

    pub fn multivector(&self) -> &Multivector {
        &self.mv
    }

    pub fn apply(&self, state: &RegisterState) -> Result<RegisterState, QraError> {
        self.context.check_same(state.context())?;
        let out = &self.mv * &state.to_multivector();
        RegisterState::from_multivector(&self.context, &out)
    }

    /// The operator that applies `self` first and then `next`.
    pub fn then(&self, next: &Gate) -> Result<Gate, QraError> {
        self.context.check_same(&next.context)?;
        Ok(Gate {
            context: self.context.clone(),
            mv: &next.mv * &self.mv,
        })
    }
}

impl QraContext {
    /// `Σ_ij (re m_ij + im m_ij ι) |i><j|` for a `2^n x 2^n` matrix.
    pub fn gate_from_matrix(&self, m: &ComplexMatrix) -> Result<Gate, QraError> {
        let dim = self.dimension();
        if m.rows() != dim || m.cols() != dim {
            return Err(QraError::MatrixShape {
                rows: m.rows(),
                cols: m.cols(),
                dimension: dim,
            });
        }
        let kets: Vec<Multivector> = (0..dim)
            .map(|k| self.ket_index(k))
            .collect::<Result<_, _>>()?;
        let bras: Vec<Multivector> = (0..dim)
            .map(|k| self.bra_index(k))
            .collect::<Result<_, _>>()?;
        let mut terms = Vec::new();
        for (i, ket) in kets.iter().enumerate() {
            for (j, bra) in bras.iter().enumerate() {
                let entry = m.get(i, j);
                if entry.re == 0.0 && entry.im == 0.0 {
                    continue;
                }
                terms.extend((&self.complex(entry) * &(ket * bra)).terms());
            }
        }
        let mv = Multivector::from_terms(self.algebra(), terms)?;
        Gate::from_multivector(self, mv)
    }

    /// `f1 f1† f2 f2† + f1† f2 - f1 f2† + f1† f1 f2† f2`, the two-qubit SWAP
    /// written directly in the Witt basis.
    pub fn swap_gate(&self) -> Result<Gate, QraError> {
        if self.qubits() != 2 {
            return Err(QraError::SwapNeedsTwoQubits(self.qubits()));
        }
        let (f, fd) = (self.witt_f(), self.witt_f_dagger());
        let (f1, f2, f1d, f2d) = (&f[0], &f[1], &fd[0], &fd[1]);
        let keep = &(&(f1 * f1d) * f2) * f2d;
        let up = f1d * f2;
        let down = f1 * f2d;
        let both = &(&(f1d * f1) * f2d) * f2;
        let mv = &(&(&keep + &up) - &down) + &both;
        Gate::from_multivector(self, mv)
    }

    /// NOT on `qubit` (1-based, qubit 1 most significant), built from the
    /// Kronecker-extended matrix.
    pub fn not_gate(&self, qubit: usize) -> Result<Gate, QraError> {
        self.named_gate(GateKind::Not, &[qubit])
    }

    /// Any of the oracle's named gates, realized through
    /// [`QraContext::gate_from_matrix`].
    pub fn named_gate(&self, kind: GateKind, targets: &[usize]) -> Result<Gate, QraError> {
        let m = gate_matrix(kind, self.qubits(), targets)?;
        self.gate_from_matrix(&m)
    }

    pub fn identity_gate(&self) -> Result<Gate, QraError> {
        self.gate_from_matrix(&ComplexMatrix::identity(self.dimension()))
    }
}
