use num_complex::Complex64;

use super::{QraContext, QraError};
use crate::ga::Multivector;

/// Amplitudes of an `n`-qubit register bound to its algebra. Entry `k` is
/// the amplitude of the basis state whose bits `a1…an` spell `k` in binary,
/// `a1` most significant.
#[derive(Debug, Clone)]
pub struct RegisterState {
    context: QraContext,
    amplitudes: Vec<Complex64>,
}

impl RegisterState {
    pub fn new(context: &QraContext, amplitudes: Vec<Complex64>) -> Result<Self, QraError> {
        if amplitudes.len() != context.dimension() {
            return Err(QraError::AmplitudeCount {
                expected: context.dimension(),
                got: amplitudes.len(),
            });
        }
        Ok(Self {
            context: context.clone(),
            amplitudes,
        })
    }

    pub fn from_real(context: &QraContext, amplitudes: &[f64]) -> Result<Self, QraError> {
        Self::new(
            context,
            amplitudes.iter().map(|&a| Complex64::new(a, 0.0)).collect(),
        )
    }

    pub fn basis(context: &QraContext, k: usize) -> Result<Self, QraError> {
        context.bits_of(k)?;
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); context.dimension()];
        amplitudes[k] = Complex64::new(1.0, 0.0);
        Self::new(context, amplitudes)
    }

    pub fn context(&self) -> &QraContext {
        &self.context
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amplitudes
    }

    /// `Σ_k (re_k + im_k ι) |k>`, each ket carrying the trailing `I`.
    pub fn to_multivector(&self) -> Multivector {
        let ctx = &self.context;
        let mut out = Multivector::zero(ctx.algebra());
        for (k, &amp) in self.amplitudes.iter().enumerate() {
            if amp == Complex64::new(0.0, 0.0) {
                continue;
            }
            let ket = ctx.ket_index(k).expect("index below 2^n");
            out = &out + &(&ctx.complex(amp) * &ket);
        }
        out
    }

    /// Reads amplitudes back out of a multivector; see
    /// [`QraContext::amplitudes_from_state`].
    pub fn from_multivector(context: &QraContext, mv: &Multivector) -> Result<Self, QraError> {
        let amplitudes = context.amplitudes_from_state(mv)?;
        Self::new(context, amplitudes)
    }
}

impl QraContext {
    /// Inverse of [`RegisterState::to_multivector`].
    ///
    /// With `c = <k| mv`, the amplitude of `|k>` is
    /// `2^n (scalar(c) - scalar(c ι) ι)`. This relies on `<k|j> = δ_kj I`,
    /// `scalar(I) = 2^-n` and `scalar(I ι) = 0`. Elements outside the span of
    /// the embedded kets are projected onto it.
    pub fn amplitudes_from_state(&self, mv: &Multivector) -> Result<Vec<Complex64>, QraError> {
        if mv.algebra() != self.algebra() {
            return Err(QraError::Algebra(crate::ga::GaError::AlgebraMismatch));
        }
        let scale = self.dimension() as f64;
        (0..self.dimension())
            .map(|k| {
                let c = &self.bra_index(k)? * mv;
                let re = scale * c.scalar_part();
                let im = -scale * (&c * self.iota()).scalar_part();
                Ok(Complex64::new(re, im))
            })
            .collect()
    }
}

impl PartialEq for RegisterState {
    fn eq(&self, other: &Self) -> bool {
        self.context.same_as(&other.context) && self.amplitudes == other.amplitudes
    }
}
