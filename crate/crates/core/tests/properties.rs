use proptest::prelude::*;
use qra_core::ga::{Algebra, Blade, Multivector};
use qra_core::qra::{QraContext, RegisterState};
use qra_core::script::{format_outputs, run_script, AlgebraDefinition};

use num_complex::Complex64;

/// Multiplies two blades by rewriting the concatenated generator word:
/// adjacent out-of-order generators are swapped (flipping the sign) and
/// adjacent equal generators are replaced by their square.
fn rewrite_word(a: Blade, b: Blade, squares: &[i8]) -> (i8, u64) {
    let mut word: Vec<usize> = a.generators().chain(b.generators()).collect();
    let mut sign = 1i8;
    loop {
        let mut changed = false;
        let mut i = 0;
        while i + 1 < word.len() {
            if word[i] > word[i + 1] {
                word.swap(i, i + 1);
                sign = -sign;
                changed = true;
            } else if word[i] == word[i + 1] {
                sign *= squares[word[i]];
                word.drain(i..i + 2);
                changed = true;
                continue;
            }
            i += 1;
        }
        if !changed {
            break;
        }
    }
    (sign, word.iter().fold(0, |m, &g| m | 1 << g))
}

fn signature(n: usize, seed: u64) -> Algebra {
    let squares: Vec<i32> = (0..n)
        .map(|i| if seed >> i & 1 == 1 { -1 } else { 1 })
        .collect();
    let names: Vec<String> = (1..=n).map(|i| format!("e{i}")).collect();
    Algebra::new(&squares, &names).unwrap()
}

#[test]
fn blade_signs_match_word_rewriting() {
    for n in 1..=6 {
        for seed in [0u64, 0b101010, 0b111111, 0b010011] {
            let alg = signature(n, seed);
            for a in 0..1u64 << n {
                for b in 0..1u64 << n {
                    let (sa, ba) = (Blade::from_mask(a), Blade::from_mask(b));
                    let (sign, blade) = sa.product(ba, &alg);
                    let expected = rewrite_word(sa, ba, alg.squares());
                    assert_eq!((sign, blade.mask()), expected, "n={n} a={a:b} b={b:b}");
                }
            }
        }
    }
}

#[test]
fn outer_product_on_blades() {
    for n in 1..=6 {
        let alg = signature(n, 0b110);
        for a in 0..1u64 << n {
            let x = Multivector::from_blade(&alg, Blade::from_mask(a), 1.0).unwrap();
            for b in 0..1u64 << n {
                let y = Multivector::from_blade(&alg, Blade::from_mask(b), 1.0).unwrap();
                let wedge = x.outer_product(&y).unwrap();
                if a & b == 0 {
                    assert_eq!(wedge, x.geometric_product(&y).unwrap());
                } else {
                    assert!(wedge.is_zero());
                }
            }
        }
    }
}

#[test]
fn generator_identities() {
    let alg = signature(6, 0b100101);
    for i in 0..6 {
        let ei = Multivector::generator(&alg, i).unwrap();
        assert_eq!(
            &ei * &ei,
            Multivector::scalar(&alg, f64::from(alg.square(i)))
        );
        for j in 0..6 {
            if i != j {
                let ej = Multivector::generator(&alg, j).unwrap();
                assert_eq!(&ei * &ej, -&(&ej * &ei));
            }
        }
    }
}

/// Multivectors with dyadic coefficients k/4, |k| <= 32, so sums and
/// products stay exact.
fn dyadic_mv(n: usize) -> impl Strategy<Value = Vec<(u64, f64)>> {
    prop::collection::vec((0..1u64 << n, -32i32..=32), 0..8).prop_map(|terms| {
        terms
            .into_iter()
            .map(|(m, k)| (m, f64::from(k) / 4.0))
            .collect()
    })
}

fn build(alg: &Algebra, terms: &[(u64, f64)]) -> Multivector {
    Multivector::from_terms(alg, terms.iter().map(|&(m, c)| (Blade::from_mask(m), c))).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn associativity(seed in 0u64..64, x in dyadic_mv(6), y in dyadic_mv(6), z in dyadic_mv(6)) {
        let alg = signature(6, seed);
        let (x, y, z) = (build(&alg, &x), build(&alg, &y), build(&alg, &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
    }

    #[test]
    fn distributivity(seed in 0u64..64, x in dyadic_mv(6), y in dyadic_mv(6), z in dyadic_mv(6)) {
        let alg = signature(6, seed);
        let (x, y, z) = (build(&alg, &x), build(&alg, &y), build(&alg, &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&(&y + &z) * &x, &(&y * &x) + &(&z * &x));
    }

    #[test]
    fn state_round_trip(n in 1usize..=3, ks in prop::collection::vec((-64i32..=64, -64i32..=64), 8)) {
        let ctx = QraContext::new(n).unwrap();
        let amps: Vec<Complex64> = ks[..ctx.dimension()]
            .iter()
            .map(|&(re, im)| Complex64::new(f64::from(re) / 8.0, f64::from(im) / 8.0))
            .collect();
        let state = RegisterState::new(&ctx, amps.clone()).unwrap();
        let back = ctx.amplitudes_from_state(&state.to_multivector()).unwrap();
        prop_assert_eq!(back, amps);
    }
}

#[test]
fn orthonormal_kets() {
    for n in 1..=3 {
        let ctx = QraContext::new(n).unwrap();
        for k in 0..ctx.dimension() {
            let bra = ctx.bra(&ctx.bits_of(k).unwrap()).unwrap();
            for j in 0..ctx.dimension() {
                let p = &bra * &ctx.ket(&ctx.bits_of(j).unwrap()).unwrap();
                if j == k {
                    assert_eq!(p, *ctx.proj_i());
                } else {
                    assert!(p.is_zero());
                }
            }
        }
    }
}

// Random expression trees: the interpreter must agree with direct kernel
// evaluation of the same tree.

#[derive(Debug, Clone)]
enum Tree {
    Num(i32),
    Gen(usize),
    Neg(Box<Tree>),
    Add(Box<Tree>, Box<Tree>),
    Sub(Box<Tree>, Box<Tree>),
    Mul(Box<Tree>, Box<Tree>),
    Wedge(Box<Tree>, Box<Tree>),
}

fn tree() -> impl Strategy<Value = Tree> {
    let leaf = prop_oneof![
        (-8i32..=8).prop_map(Tree::Num),
        (0usize..4).prop_map(Tree::Gen)
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|t| Tree::Neg(Box::new(t))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Tree::Add(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Tree::Sub(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Tree::Mul(Box::new(a), Box::new(b))),
            (inner.clone(), inner).prop_map(|(a, b)| Tree::Wedge(Box::new(a), Box::new(b))),
        ]
    })
}

const NAMES: [&str; 4] = ["e1", "e2", "er1", "er2"];

fn source(t: &Tree) -> String {
    match t {
        Tree::Num(k) if *k < 0 => format!("(-{})", -k),
        Tree::Num(k) => k.to_string(),
        Tree::Gen(i) => NAMES[*i].to_owned(),
        Tree::Neg(a) => format!("-({})", source(a)),
        Tree::Add(a, b) => format!("({} + {})", source(a), source(b)),
        Tree::Sub(a, b) => format!("({} - {})", source(a), source(b)),
        Tree::Mul(a, b) => format!("({} * {})", source(a), source(b)),
        Tree::Wedge(a, b) => format!("({} ^ {})", source(a), source(b)),
    }
}

fn direct(t: &Tree, alg: &Algebra) -> Multivector {
    match t {
        Tree::Num(k) => Multivector::scalar(alg, f64::from(*k)),
        Tree::Gen(i) => Multivector::generator(alg, *i).unwrap(),
        Tree::Neg(a) => direct(a, alg).scale(-1.0),
        Tree::Add(a, b) => {
            Multivector::linear_combine(1.0, &direct(a, alg), 1.0, &direct(b, alg)).unwrap()
        }
        Tree::Sub(a, b) => {
            Multivector::linear_combine(1.0, &direct(a, alg), -1.0, &direct(b, alg)).unwrap()
        }
        Tree::Mul(a, b) => direct(a, alg).geometric_product(&direct(b, alg)).unwrap(),
        Tree::Wedge(a, b) => direct(a, alg).outer_product(&direct(b, alg)).unwrap(),
    }
}

proptest! {
    #[test]
    fn interpreter_agrees_with_kernel(t in tree()) {
        let def = AlgebraDefinition::new(
            NAMES.iter().map(|s| s.to_string()).collect(),
            vec![1, -1, 1, 1],
        ).unwrap();
        let ev = run_script(&format!("?x = {};", source(&t)), &def).unwrap();
        prop_assert_eq!(&ev.outputs()[0].1, &direct(&t, ev.algebra()));
    }

    #[test]
    fn whitespace_and_comments_do_not_matter(pad in prop::collection::vec(prop_oneof![Just(" "), Just("\n"), Just("\t"), Just(" // note\n")], 64)) {
        let src = include_str!("data/listing3_kets.qra");
        let reference = format_outputs(&run_script(src, &AlgebraDefinition::qra(2)).unwrap());
        // Re-space the script: a pad goes after every token boundary we can
        // find cheaply (around operators and semicolons).
        let mut padded = String::new();
        let mut k = 0;
        for line in src.lines().filter(|l| !l.starts_with("//")) {
            for ch in line.chars() {
                if "=;*+-()".contains(ch) {
                    padded.push_str(pad[k % pad.len()]);
                    padded.push(ch);
                    padded.push_str(pad[(k + 1) % pad.len()]);
                    k += 2;
                } else {
                    padded.push(ch);
                }
            }
            padded.push('\n');
        }
        let again = format_outputs(&run_script(&padded, &AlgebraDefinition::qra(2)).unwrap());
        prop_assert_eq!(reference, again);
    }
}

#[test]
fn error_positions_stay_in_bounds() {
    let cases = [
        "x = ;",
        "x = e1",
        "x = e1 +\n",
        "?",
        "x = $",
        "y = zz;",
        "e1 = 1;",
        "x = (e1 * e2;\n\n",
    ];
    let def = AlgebraDefinition::qra(1);
    for src in cases {
        let err = run_script(src, &def).unwrap_err();
        let pos = err.position().expect("script errors carry a position");
        let lines: Vec<&str> = src.split('\n').collect();
        assert!(pos.line >= 1 && pos.line <= lines.len(), "{src:?} -> {pos}");
        assert!(
            pos.column >= 1 && pos.column <= lines[pos.line - 1].chars().count() + 1,
            "{src:?} -> {pos}"
        );
    }
}

#[test]
fn output_is_deterministic() {
    let src = concat!(
        include_str!("data/listing3_kets.qra"),
        include_str!("data/listing5_swap.qra")
    );
    let a = format_outputs(&run_script(src, &AlgebraDefinition::qra(2)).unwrap());
    let b = format_outputs(&run_script(src, &AlgebraDefinition::qra(2)).unwrap());
    assert_eq!(a, b);
}
