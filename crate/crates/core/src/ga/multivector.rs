use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, BitXor, Mul, Neg, Sub};

use super::{canonical_index, Algebra, Blade, GaError};

/// A sparse real linear combination of basis blades.
///
/// Values are immutable: every operation returns a fresh multivector. Terms
/// with an exactly zero coefficient are never stored.
#[derive(Clone, PartialEq)]
pub struct Multivector {
    algebra: Algebra,
    terms: BTreeMap<Blade, f64>,
}

impl Multivector {
    pub fn zero(algebra: &Algebra) -> Self {
        Self {
            algebra: algebra.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(algebra: &Algebra, value: f64) -> Self {
        Self::from_blade(algebra, Blade::SCALAR, value)
            .expect("scalar blade is valid in every algebra")
    }

    /// The grade-1 multivector for generator `i` (zero based).
    pub fn generator(algebra: &Algebra, i: usize) -> Result<Self, GaError> {
        if i >= algebra.dimension() {
            return Err(GaError::BladeOutOfRange {
                mask: 1u64.checked_shl(i as u32).unwrap_or(0),
                dimension: algebra.dimension(),
            });
        }
        Self::from_blade(algebra, Blade::generator(i), 1.0)
    }

    /// The grade-1 multivector for the generator called `name`.
    pub fn named(algebra: &Algebra, name: &str) -> Result<Self, GaError> {
        let i = algebra
            .generator_index(name)
            .ok_or_else(|| GaError::UnknownGenerator(name.to_owned()))?;
        Self::generator(algebra, i)
    }

    pub fn from_blade(algebra: &Algebra, blade: Blade, coefficient: f64) -> Result<Self, GaError> {
        Self::from_terms(algebra, [(blade, coefficient)])
    }

    /// Sums the given terms; repeated blades accumulate.
    pub fn from_terms(
        algebra: &Algebra,
        terms: impl IntoIterator<Item = (Blade, f64)>,
    ) -> Result<Self, GaError> {
        let full = algebra.full_mask();
        let mut acc = Accumulator::new(algebra);
        for (blade, c) in terms {
            if blade.mask() & !full != 0 {
                return Err(GaError::BladeOutOfRange {
                    mask: blade.mask(),
                    dimension: algebra.dimension(),
                });
            }
            acc.add(blade, c);
        }
        Ok(acc.finish(algebra))
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    /// Nonzero terms in ascending bit-set order.
    pub fn terms(&self) -> impl Iterator<Item = (Blade, f64)> + '_ {
        self.terms.iter().map(|(&b, &c)| (b, c))
    }

    /// Nonzero terms sorted by canonical display index.
    pub fn indexed_terms(&self) -> Vec<(u64, Blade, f64)> {
        let n = self.algebra.dimension();
        let mut out: Vec<_> = self
            .terms()
            .map(|(b, c)| (canonical_index(b, n), b, c))
            .collect();
        out.sort_unstable_by_key(|&(i, _, _)| i);
        out
    }

    pub fn coefficient(&self, blade: Blade) -> f64 {
        self.terms.get(&blade).copied().unwrap_or(0.0)
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the scalar blade.
    pub fn scalar_part(&self) -> f64 {
        self.coefficient(Blade::SCALAR)
    }

    fn check_same(&self, other: &Self) -> Result<(), GaError> {
        if self.algebra == other.algebra {
            Ok(())
        } else {
            Err(GaError::AlgebraMismatch)
        }
    }

    fn product_with(
        &self,
        other: &Self,
        keep: impl Fn(Blade, Blade) -> bool,
    ) -> Result<Self, GaError> {
        self.check_same(other)?;
        let mut acc = Accumulator::new(&self.algebra);
        for (&a, &ca) in &self.terms {
            for (&b, &cb) in &other.terms {
                if !keep(a, b) {
                    continue;
                }
                let (sign, blade) = a.product(b, &self.algebra);
                if sign != 0 {
                    acc.add(blade, f64::from(sign) * ca * cb);
                }
            }
        }
        Ok(acc.finish(&self.algebra))
    }

    pub fn geometric_product(&self, other: &Self) -> Result<Self, GaError> {
        self.product_with(other, |_, _| true)
    }

    /// Wedge product: blade pairs sharing a generator contribute nothing.
    pub fn outer_product(&self, other: &Self) -> Result<Self, GaError> {
        self.product_with(other, |a, b| !a.intersects(b))
    }

    /// `a·x + b·y`.
    pub fn linear_combine(a: f64, x: &Self, b: f64, y: &Self) -> Result<Self, GaError> {
        x.check_same(y)?;
        let mut acc = Accumulator::new(&x.algebra);
        for (&blade, &c) in &x.terms {
            acc.add(blade, a * c);
        }
        for (&blade, &c) in &y.terms {
            acc.add(blade, b * c);
        }
        Ok(acc.finish(&x.algebra))
    }

    pub fn scale(&self, factor: f64) -> Self {
        let mut acc = Accumulator::new(&self.algebra);
        for (&blade, &c) in &self.terms {
            acc.add(blade, factor * c);
        }
        acc.finish(&self.algebra)
    }

    pub fn grade_projection(&self, k: usize) -> Result<Self, GaError> {
        if k > self.algebra.dimension() {
            return Err(GaError::GradeOutOfRange {
                grade: k,
                dimension: self.algebra.dimension(),
            });
        }
        Ok(Self {
            algebra: self.algebra.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| b.grade() as usize == k)
                .map(|(&b, &c)| (b, c))
                .collect(),
        })
    }

    /// Drops every term with `|coefficient| <= tol`.
    pub fn prune(&self, tol: f64) -> Self {
        Self {
            algebra: self.algebra.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(_, c)| c.abs() > tol)
                .map(|(&b, &c)| (b, c))
                .collect(),
        }
    }

    /// True when every coefficient of `self - other` has magnitude at most
    /// `tol`.
    pub fn approx_equal(&self, other: &Self, tol: f64) -> Result<bool, GaError> {
        let diff = Self::linear_combine(1.0, self, -1.0, other)?;
        Ok(diff.terms.values().all(|c| c.abs() <= tol))
    }
}

/// Sums terms by blade. Small algebras use a dense table indexed by bit-set,
/// larger ones a map.
enum Accumulator {
    Dense { coeffs: Vec<f64>, touched: Vec<u64> },
    Sparse(BTreeMap<Blade, f64>),
}

const DENSE_LIMIT: usize = 16;

impl Accumulator {
    fn new(algebra: &Algebra) -> Self {
        if algebra.dimension() <= DENSE_LIMIT {
            Accumulator::Dense {
                coeffs: vec![0.0; 1 << algebra.dimension()],
                touched: Vec::new(),
            }
        } else {
            Accumulator::Sparse(BTreeMap::new())
        }
    }

    fn add(&mut self, blade: Blade, c: f64) {
        if c == 0.0 {
            return;
        }
        match self {
            Accumulator::Dense { coeffs, touched } => {
                let slot = &mut coeffs[blade.mask() as usize];
                if *slot == 0.0 {
                    touched.push(blade.mask());
                }
                *slot += c;
            }
            Accumulator::Sparse(map) => *map.entry(blade).or_insert(0.0) += c,
        }
    }

    fn finish(self, algebra: &Algebra) -> Multivector {
        let terms = match self {
            Accumulator::Dense { coeffs, touched } => touched
                .into_iter()
                .filter_map(|m| {
                    let c = coeffs[m as usize];
                    (c != 0.0).then_some((Blade::from_mask(m), c))
                })
                .collect(),
            Accumulator::Sparse(mut map) => {
                map.retain(|_, c| *c != 0.0);
                map
            }
        };
        Multivector {
            algebra: algebra.clone(),
            terms,
        }
    }
}

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (_, blade, c)) in self.indexed_terms().into_iter().enumerate() {
            if i > 0 {
                f.write_str(if c < 0.0 { " - " } else { " + " })?;
            } else if c < 0.0 {
                f.write_str("-")?;
            }
            let mag = c.abs();
            if blade.is_scalar() {
                write!(f, "{mag}")?;
            } else {
                let names: Vec<&str> = blade.generators().map(|g| self.algebra.name(g)).collect();
                if mag != 1.0 {
                    write!(f, "{mag}*")?;
                }
                f.write_str(&names.join("^"))?;
            }
        }
        Ok(())
    }
}

// Operator forms panic on mismatched algebras; use the named methods to get a
// `Result` instead.

impl Add for &Multivector {
    type Output = Multivector;
    fn add(self, rhs: Self) -> Multivector {
        Multivector::linear_combine(1.0, self, 1.0, rhs).expect("mismatched algebras")
    }
}

impl Sub for &Multivector {
    type Output = Multivector;
    fn sub(self, rhs: Self) -> Multivector {
        Multivector::linear_combine(1.0, self, -1.0, rhs).expect("mismatched algebras")
    }
}

impl Mul for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: Self) -> Multivector {
        self.geometric_product(rhs).expect("mismatched algebras")
    }
}

impl BitXor for &Multivector {
    type Output = Multivector;
    fn bitxor(self, rhs: Self) -> Multivector {
        self.outer_product(rhs).expect("mismatched algebras")
    }
}

impl Mul<f64> for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: f64) -> Multivector {
        self.scale(rhs)
    }
}

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self.scale(-1.0)
    }
}
