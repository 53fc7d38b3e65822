//! Conventional dense state-vector simulator.
//!
//! Nothing in here touches the geometric algebra types: it exists so the QRA
//! path can be checked against ordinary complex linear algebra, and to build
//! multi-qubit gate matrices by Kronecker placement.
//!
//! Qubits are numbered from 1, and qubit 1 is the most significant bit of a
//! basis-state index.

use std::fmt;

use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("matrix data has {len} entries, expected {rows}x{cols}")]
    ShapeMismatch {
        rows: usize,
        cols: usize,
        len: usize,
    },
    #[error("cannot apply a {rows}x{cols} matrix to a vector of length {len}")]
    DimensionMismatch {
        rows: usize,
        cols: usize,
        len: usize,
    },
    #[error("state vector length {0} is not a power of two")]
    NotPowerOfTwo(usize),
    #[error("invalid target qubits {targets:?} for {gate} on {n} qubits")]
    BadTargets {
        gate: GateKind,
        n: usize,
        targets: Vec<usize>,
    },
}

/// Dense row-major complex matrix.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Complex64>) -> Result<Self, OracleError> {
        if entries.len() != rows * cols {
            return Err(OracleError::ShapeMismatch {
                rows,
                cols,
                len: entries.len(),
            });
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix from real entries given row by row.
    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self, OracleError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let entries: Vec<Complex64> = rows
            .iter()
            .flat_map(|row| row.iter().map(|&x| Complex64::new(x, 0.0)))
            .collect();
        Self::new(r, c, entries)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim, dim);
        for i in 0..dim {
            m.entries[i * dim + i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Complex64) {
        self.entries[row * self.cols + col] = value;
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    /// Ordinary matrix product `self * rhs`.
    pub fn matmul(&self, rhs: &Self) -> Result<Self, OracleError> {
        if self.cols != rhs.rows {
            return Err(OracleError::DimensionMismatch {
                rows: rhs.rows,
                cols: rhs.cols,
                len: self.cols,
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                for j in 0..rhs.cols {
                    out.entries[i * rhs.cols + j] += a * rhs.get(k, j);
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Amplitudes of an `n`-qubit register, `2^n` entries.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self, OracleError> {
        if !amplitudes.len().is_power_of_two() {
            return Err(OracleError::NotPowerOfTwo(amplitudes.len()));
        }
        Ok(Self { amplitudes })
    }

    /// The computational basis state `|index>` in a register of `n` qubits.
    pub fn basis(n: usize, index: usize) -> Self {
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); 1 << n];
        amplitudes[index] = Complex64::new(1.0, 0.0);
        Self { amplitudes }
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn qubits(&self) -> usize {
        self.amplitudes.len().trailing_zeros() as usize
    }
}

/// Standard Kronecker product; the result has `a.rows*b.rows` rows.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let rows = a.rows * b.rows;
    let cols = a.cols * b.cols;
    let mut out = ComplexMatrix::zeros(rows, cols);
    for ar in 0..a.rows {
        for ac in 0..a.cols {
            let x = a.get(ar, ac);
            for br in 0..b.rows {
                for bc in 0..b.cols {
                    out.set(ar * b.rows + br, ac * b.cols + bc, x * b.get(br, bc));
                }
            }
        }
    }
    out
}

/// Matrix-vector product.
pub fn mat_apply(m: &ComplexMatrix, v: &StateVector) -> Result<StateVector, OracleError> {
    if !m.is_square() || m.cols != v.amplitudes.len() {
        return Err(OracleError::DimensionMismatch {
            rows: m.rows,
            cols: m.cols,
            len: v.amplitudes.len(),
        });
    }
    let amplitudes = (0..m.rows)
        .map(|r| {
            v.amplitudes
                .iter()
                .enumerate()
                .map(|(c, &a)| m.get(r, c) * a)
                .sum()
        })
        .collect();
    Ok(StateVector { amplitudes })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GateKind {
    Not,
    Hadamard,
    Swap,
    Cnot,
}

impl GateKind {
    pub const ALL: [GateKind; 4] = [
        GateKind::Not,
        GateKind::Hadamard,
        GateKind::Swap,
        GateKind::Cnot,
    ];

    /// Number of target qubits the gate acts on.
    pub fn arity(self) -> usize {
        match self {
            GateKind::Not | GateKind::Hadamard => 1,
            GateKind::Swap | GateKind::Cnot => 2,
        }
    }
}

impl fmt::Display for GateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GateKind::Not => "NOT",
            GateKind::Hadamard => "H",
            GateKind::Swap => "SWAP",
            GateKind::Cnot => "CNOT",
        })
    }
}

fn single_qubit(kind: GateKind) -> ComplexMatrix {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    match kind {
        GateKind::Not => ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]),
        GateKind::Hadamard => ComplexMatrix::from_real_rows(&[&[h, h], &[h, -h]]),
        _ => unreachable!("not a single-qubit gate"),
    }
    .expect("2x2 literal")
}

/// `I ⊗ … ⊗ U ⊗ … ⊗ I` with `U` on `qubit`.
fn place_single(u: &ComplexMatrix, n: usize, qubit: usize) -> ComplexMatrix {
    let id2 = ComplexMatrix::identity(2);
    (1..=n).fold(ComplexMatrix::identity(1), |acc, q| {
        kron(&acc, if q == qubit { u } else { &id2 })
    })
}

fn bit(index: usize, n: usize, qubit: usize) -> usize {
    (index >> (n - qubit)) & 1
}

/// Permutation matrix sending basis state `j` to `perm(j)`.
fn permutation(n: usize, perm: impl Fn(usize) -> usize) -> ComplexMatrix {
    let dim = 1 << n;
    let mut m = ComplexMatrix::zeros(dim, dim);
    for j in 0..dim {
        m.set(perm(j), j, Complex64::new(1.0, 0.0));
    }
    m
}

/// Full `2^n x 2^n` matrix for a named gate. `targets` are 1-based qubit
/// numbers; for CNOT the first target is the control.
pub fn gate_matrix(
    kind: GateKind,
    n: usize,
    targets: &[usize],
) -> Result<ComplexMatrix, OracleError> {
    let bad = || OracleError::BadTargets {
        gate: kind,
        n,
        targets: targets.to_vec(),
    };
    if n == 0
        || targets.len() != kind.arity()
        || targets.iter().any(|&t| t == 0 || t > n)
        || (kind.arity() == 2 && targets[0] == targets[1])
    {
        return Err(bad());
    }
    Ok(match kind {
        GateKind::Not | GateKind::Hadamard => place_single(&single_qubit(kind), n, targets[0]),
        GateKind::Swap => {
            let (a, b) = (targets[0], targets[1]);
            permutation(n, |j| {
                if bit(j, n, a) == bit(j, n, b) {
                    j
                } else {
                    j ^ (1 << (n - a)) ^ (1 << (n - b))
                }
            })
        }
        GateKind::Cnot => {
            let (control, target) = (targets[0], targets[1]);
            permutation(n, |j| {
                if bit(j, n, control) == 1 {
                    j ^ (1 << (n - target))
                } else {
                    j
                }
            })
        }
    })
}
