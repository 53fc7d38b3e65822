use std::fmt;
use std::sync::Arc;

use super::GaError;

/// Largest number of generators an [`Algebra`] may have. Blades are stored as
/// `u64` bit-sets and canonical indices must fit in a `u64`.
pub const MAX_DIMENSION: usize = 32;

/// A real geometric algebra over `N` orthogonal generators, each squaring to
/// `+1` or `-1`.
///
/// Cloning is cheap: the generator table is shared behind an `Arc`.
#[derive(Clone)]
pub struct Algebra {
    inner: Arc<Inner>,
}

#[derive(PartialEq, Eq)]
struct Inner {
    squares: Vec<i8>,
    names: Vec<String>,
}

impl Algebra {
    /// Builds an algebra from the square of each generator and its name.
    pub fn new<S: AsRef<str>>(squares: &[i32], names: &[S]) -> Result<Self, GaError> {
        if squares.is_empty() {
            return Err(GaError::EmptySignature);
        }
        if squares.len() != names.len() {
            return Err(GaError::LengthMismatch {
                squares: squares.len(),
                names: names.len(),
            });
        }
        if squares.len() > MAX_DIMENSION {
            return Err(GaError::TooManyGenerators(squares.len()));
        }
        let mut sq = Vec::with_capacity(squares.len());
        for (i, &s) in squares.iter().enumerate() {
            match s {
                1 | -1 => sq.push(s as i8),
                other => {
                    return Err(GaError::InvalidSquare {
                        generator: names[i].as_ref().to_owned(),
                        value: other,
                    })
                }
            }
        }
        let mut owned: Vec<String> = Vec::with_capacity(names.len());
        for name in names {
            let name = name.as_ref();
            if name.is_empty() {
                return Err(GaError::EmptyName);
            }
            if owned.iter().any(|n| n == name) {
                return Err(GaError::DuplicateName(name.to_owned()));
            }
            owned.push(name.to_owned());
        }
        Ok(Self {
            inner: Arc::new(Inner {
                squares: sq,
                names: owned,
            }),
        })
    }

    /// Euclidean algebra with generators `e1..eN`, all squaring to `+1`.
    pub fn euclidean(n: usize) -> Result<Self, GaError> {
        let names: Vec<String> = (1..=n).map(|i| format!("e{i}")).collect();
        Self::new(&vec![1; n], &names)
    }

    pub fn dimension(&self) -> usize {
        self.inner.squares.len()
    }

    /// Number of basis blades, `2^N`.
    pub fn blade_count(&self) -> u64 {
        1u64 << self.dimension()
    }

    pub fn squares(&self) -> &[i8] {
        &self.inner.squares
    }

    pub fn square(&self, generator: usize) -> i8 {
        self.inner.squares[generator]
    }

    pub fn names(&self) -> &[String] {
        &self.inner.names
    }

    pub fn name(&self, generator: usize) -> &str {
        &self.inner.names[generator]
    }

    /// Position of the generator called `name`, if any.
    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.inner.names.iter().position(|n| n == name)
    }

    /// Bit-set with one bit per generator.
    pub(crate) fn full_mask(&self) -> u64 {
        if self.dimension() == 64 {
            u64::MAX
        } else {
            (1u64 << self.dimension()) - 1
        }
    }
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner == other.inner
    }
}

impl Eq for Algebra {}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut list = f.debug_list();
        for (name, sq) in self.inner.names.iter().zip(&self.inner.squares) {
            list.entry(&format_args!("{name}={sq}"));
        }
        list.finish()
    }
}
