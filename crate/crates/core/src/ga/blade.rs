use std::fmt;

use super::Algebra;

/// A basis blade: the ordered product of distinct generators, stored as a
/// bit-set. Bit `i` is set when generator `i` (zero based) is present; the
/// canonical form lists generators in ascending order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Blade(u64);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    pub const fn from_mask(mask: u64) -> Self {
        Blade(mask)
    }

    /// The grade-1 blade for generator `i` (zero based).
    pub const fn generator(i: usize) -> Self {
        Blade(1 << i)
    }

    /// Blade containing the listed generators. Repeats cancel pairwise, so
    /// callers wanting a signed product should use [`Blade::product`].
    pub fn from_generators(generators: impl IntoIterator<Item = usize>) -> Self {
        Blade(generators.into_iter().fold(0, |m, g| m ^ (1 << g)))
    }

    pub const fn mask(self) -> u64 {
        self.0
    }

    pub const fn grade(self) -> u32 {
        self.0.count_ones()
    }

    pub const fn is_scalar(self) -> bool {
        self.0 == 0
    }

    /// Generators present, ascending.
    pub fn generators(self) -> impl Iterator<Item = usize> {
        let mut m = self.0;
        std::iter::from_fn(move || {
            if m == 0 {
                None
            } else {
                let g = m.trailing_zeros() as usize;
                m &= m - 1;
                Some(g)
            }
        })
    }

    pub const fn intersects(self, other: Blade) -> bool {
        self.0 & other.0 != 0
    }

    /// Geometric product of two basis blades: the resulting blade and its
    /// sign (`+1`, `-1`, or `0` when an annihilated generator squares to zero,
    /// which cannot happen for `±1` signatures).
    pub fn product(self, other: Blade, algebra: &Algebra) -> (i8, Blade) {
        let mut sign = reorder_sign(self.0, other.0);
        let mut common = self.0 & other.0;
        while common != 0 {
            let g = common.trailing_zeros() as usize;
            sign *= algebra.square(g);
            common &= common - 1;
        }
        (sign, Blade(self.0 ^ other.0))
    }
}

/// Sign picked up when sorting the concatenated generator word `a b` into
/// ascending order: every generator of `b` has to hop over each generator of
/// `a` with a larger index.
fn reorder_sign(a: u64, b: u64) -> i8 {
    let mut a = a >> 1;
    let mut swaps = 0;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps & 1 == 0 {
        1
    } else {
        -1
    }
}

impl fmt::Debug for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Blade({:#b})", self.0)
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// Rank of a blade in grade-major, lexicographic-minor order over `n`
/// generators: all blades of lower grade come first, and blades of equal grade
/// are ordered by their ascending generator tuples.
///
/// For six generators this puts `e1^e2` at 7, `e3^e4` at 16 and `e1^e2^e3^e4`
/// at 42.
pub fn canonical_index(blade: Blade, n: usize) -> u64 {
    debug_assert!(n == 64 || blade.mask() >> n == 0, "blade outside algebra");
    let n = n as u64;
    let k = blade.grade() as u64;
    let mut index: u64 = (0..k).map(|g| binomial(n, g)).sum();
    // Lexicographic rank among k-subsets: for each chosen element, count the
    // subsets that agree on the prefix but pick a smaller element here.
    let mut next = 0u64;
    for (pos, g) in blade.generators().enumerate() {
        let g = g as u64;
        let remaining = k - pos as u64 - 1;
        for skipped in next..g {
            index += binomial(n - skipped - 1, remaining);
        }
        next = g + 1;
    }
    index
}

/// Inverse of [`canonical_index`]. Returns `None` if `index >= 2^n`.
pub fn blade_from_canonical_index(index: u64, n: usize) -> Option<Blade> {
    if n < 64 && index >= 1u64 << n {
        return None;
    }
    let n = n as u64;
    let mut rest = index;
    let mut k = 0;
    while rest >= binomial(n, k) {
        rest -= binomial(n, k);
        k += 1;
    }
    let mut mask = 0u64;
    let mut candidate = 0u64;
    for pos in 0..k {
        let remaining = k - pos - 1;
        loop {
            let block = binomial(n - candidate - 1, remaining);
            if rest < block {
                break;
            }
            rest -= block;
            candidate += 1;
        }
        mask |= 1 << candidate;
        candidate += 1;
    }
    Some(Blade(mask))
}

/// Renders a blade the way GAALOP comments its output coordinates: `1.0` for
/// the scalar, the bare name for vectors and a right-nested wedge otherwise,
/// e.g. `e1 ^ (e3 ^ e4)`.
pub fn format_blade(blade: Blade, algebra: &Algebra) -> String {
    let names: Vec<&str> = blade.generators().map(|g| algebra.name(g)).collect();
    match names.len() {
        0 => "1.0".to_owned(),
        1 => names[0].to_owned(),
        len => {
            let mut out = String::new();
            for (i, name) in names.iter().enumerate() {
                out.push_str(name);
                if i + 1 < len {
                    out.push_str(" ^ ");
                    if i + 2 < len {
                        out.push('(');
                    }
                }
            }
            for _ in 0..len - 2 {
                out.push(')');
            }
            out
        }
    }
}
