use std::sync::Arc;

use num_complex::Complex64;

use super::QraError;
use crate::ga::{Algebra, Blade, Multivector};

/// Largest register size a [`QraContext`] can be built for.
pub const MAX_QUBITS: usize = 8;

/// The algebra of an `n`-qubit register: generators `e1..e2n`, `er1`, `er2`,
/// all squaring to `+1`, together with the derived elements every state and
/// gate is built from.
///
/// Cloning is cheap; the cached elements are shared.
#[derive(Clone)]
pub struct QraContext {
    inner: Arc<Inner>,
}

struct Inner {
    n: usize,
    algebra: Algebra,
    iota: Multivector,
    witt_f: Vec<Multivector>,
    witt_f_dagger: Vec<Multivector>,
    proj_i: Multivector,
}

/// Generator names for an `n`-qubit register, in algebra order.
pub fn qra_generator_names(n: usize) -> Vec<String> {
    (1..=2 * n)
        .map(|i| format!("e{i}"))
        .chain(["er1".to_owned(), "er2".to_owned()])
        .collect()
}

impl QraContext {
    pub fn new(n: usize) -> Result<Self, QraError> {
        if !(1..=MAX_QUBITS).contains(&n) {
            return Err(QraError::QubitCount(n));
        }
        let names = qra_generator_names(n);
        let algebra = Algebra::new(&vec![1; names.len()], &names)?;

        let r1 = Blade::generator(2 * n);
        let r2 = Blade::generator(2 * n + 1);
        let iota = Multivector::from_blade(&algebra, Blade::from_mask(r1.mask() | r2.mask()), 1.0)?;

        let mut witt_f = Vec::with_capacity(n);
        let mut witt_f_dagger = Vec::with_capacity(n);
        for i in 0..n {
            let e = Multivector::generator(&algebra, i)?;
            let rotated = &iota * &Multivector::generator(&algebra, i + n)?;
            witt_f.push(Multivector::linear_combine(0.5, &e, 0.5, &rotated)?);
            witt_f_dagger.push(Multivector::linear_combine(0.5, &e, -0.5, &rotated)?);
        }

        // I = f1 f1† f2 f2† … fn fn†, multiplied left to right.
        let mut proj_i = Multivector::scalar(&algebra, 1.0);
        for (f, fd) in witt_f.iter().zip(&witt_f_dagger) {
            proj_i = &(&proj_i * f) * fd;
        }

        Ok(Self {
            inner: Arc::new(Inner {
                n,
                algebra,
                iota,
                witt_f,
                witt_f_dagger,
                proj_i,
            }),
        })
    }

    pub fn qubits(&self) -> usize {
        self.inner.n
    }

    /// Number of basis states, `2^n`.
    pub fn dimension(&self) -> usize {
        1 << self.inner.n
    }

    pub fn algebra(&self) -> &Algebra {
        &self.inner.algebra
    }

    /// The bivector `er1 er2`, the algebra's stand-in for the imaginary unit.
    pub fn iota(&self) -> &Multivector {
        &self.inner.iota
    }

    /// `f_1 .. f_n`, zero-indexed.
    pub fn witt_f(&self) -> &[Multivector] {
        &self.inner.witt_f
    }

    /// `f_1† .. f_n†`, zero-indexed.
    pub fn witt_f_dagger(&self) -> &[Multivector] {
        &self.inner.witt_f_dagger
    }

    /// The idempotent `I = f1 f1† ⋯ fn fn†` representing the ground ket.
    pub fn proj_i(&self) -> &Multivector {
        &self.inner.proj_i
    }

    pub(crate) fn same_as(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.n == other.inner.n
    }

    pub(crate) fn check_same(&self, other: &Self) -> Result<(), QraError> {
        if self.same_as(other) {
            Ok(())
        } else {
            Err(QraError::ContextMismatch {
                left: self.qubits(),
                right: other.qubits(),
            })
        }
    }

    /// `re + im·ι` as a multivector.
    pub fn complex(&self, c: Complex64) -> Multivector {
        let re = Multivector::scalar(self.algebra(), c.re);
        Multivector::linear_combine(1.0, &re, c.im, self.iota()).expect("same algebra")
    }

    /// Bits `a1..an` of basis index `k`, most significant first.
    pub fn bits_of(&self, k: usize) -> Result<Vec<u8>, QraError> {
        if k >= self.dimension() {
            return Err(QraError::BasisIndex {
                index: k,
                dimension: self.dimension(),
            });
        }
        let n = self.qubits();
        Ok((0..n).map(|q| ((k >> (n - 1 - q)) & 1) as u8).collect())
    }

    fn check_bits(&self, bits: &[u8]) -> Result<(), QraError> {
        if bits.len() != self.qubits() {
            return Err(QraError::BitCount {
                expected: self.qubits(),
                got: bits.len(),
            });
        }
        if let Some(&b) = bits.iter().find(|&&b| b > 1) {
            return Err(QraError::NotABit(b));
        }
        Ok(())
    }

    /// `|a1…an> ↦ (f1†)^a1 ⋯ (fn†)^an I`.
    pub fn ket(&self, bits: &[u8]) -> Result<Multivector, QraError> {
        self.check_bits(bits)?;
        let mut out = Multivector::scalar(self.algebra(), 1.0);
        for (fd, &b) in self.witt_f_dagger().iter().zip(bits) {
            if b == 1 {
                out = &out * fd;
            }
        }
        Ok(&out * self.proj_i())
    }

    /// `<a1…an| ↦ I (fn)^an ⋯ (f1)^a1`.
    pub fn bra(&self, bits: &[u8]) -> Result<Multivector, QraError> {
        self.check_bits(bits)?;
        let mut out = self.proj_i().clone();
        for (f, &b) in self.witt_f().iter().zip(bits).rev() {
            if b == 1 {
                out = &out * f;
            }
        }
        Ok(out)
    }

    pub fn ket_index(&self, k: usize) -> Result<Multivector, QraError> {
        self.ket(&self.bits_of(k)?)
    }

    pub fn bra_index(&self, k: usize) -> Result<Multivector, QraError> {
        self.bra(&self.bits_of(k)?)
    }

    /// The rank-one operator `|i><j|`.
    pub fn dyad(&self, i: usize, j: usize) -> Result<Multivector, QraError> {
        Ok(&self.ket_index(i)? * &self.bra_index(j)?)
    }
}

impl std::fmt::Debug for QraContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("QraContext")
            .field("qubits", &self.inner.n)
            .finish()
    }
}
