//! The algebraic identities a QRA context has to satisfy, evaluated exactly
//! with the geometric product. Used by the test-suite and by `qra selftest`.

use super::QraContext;
use crate::ga::{Blade, Multivector};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub qubits: usize,
    pub name: String,
    pub passed: bool,
}

struct Checks<'a> {
    ctx: &'a QraContext,
    out: Vec<IdentityCheck>,
}

impl Checks<'_> {
    fn push(&mut self, name: String, passed: bool) {
        self.out.push(IdentityCheck {
            qubits: self.ctx.qubits(),
            name,
            passed,
        });
    }

    fn equal(&mut self, name: String, lhs: Multivector, rhs: &Multivector) {
        let passed = lhs == *rhs;
        self.push(name, passed);
    }

    fn zero(&mut self, name: String, value: Multivector) {
        let passed = value.is_zero();
        self.push(name, passed);
    }
}

/// Runs every identity for one context, in a fixed order.
pub fn check_identities(ctx: &QraContext) -> Vec<IdentityCheck> {
    let mut checks = Checks {
        ctx,
        out: Vec::new(),
    };
    let alg = ctx.algebra();
    let iota = ctx.iota();
    let proj = ctx.proj_i();
    let (f, fd) = (ctx.witt_f(), ctx.witt_f_dagger());
    let n = ctx.qubits();

    checks.equal(
        "iota^2 = -1".into(),
        iota * iota,
        &Multivector::scalar(alg, -1.0),
    );

    // ι commutes with e1..e2n and hence with every blade built from them, and
    // with er1 er2 itself. Blades holding just one of er1, er2 anticommute.
    let r_mask = (1u64 << (2 * n)) | (1u64 << (2 * n + 1));
    let central = (0..alg.blade_count())
        .map(Blade::from_mask)
        .filter(|b| (b.mask() & r_mask).count_ones() != 1)
        .all(|b| {
            let x = Multivector::from_blade(alg, b, 1.0).expect("blade in range");
            iota * &x == &x * iota
        });
    checks.push("iota commutes with e-blades".into(), central);

    checks.equal("I^2 = I".into(), proj * proj, proj);

    for i in 0..n {
        let k = i + 1;
        checks.zero(format!("f_{k} I = 0"), &f[i] * proj);
        checks.equal(
            format!("f_{k} f_{k}^+ I = I"),
            &(&f[i] * &fd[i]) * proj,
            proj,
        );
        checks.zero(format!("f_{k}^2 = 0"), &f[i] * &f[i]);
        checks.zero(format!("(f_{k}^+)^2 = 0"), &fd[i] * &fd[i]);
        checks.equal(
            format!("f_{k} f_{k}^+ f_{k} = f_{k}"),
            &(&f[i] * &fd[i]) * &f[i],
            &f[i],
        );
        checks.equal(
            format!("f_{k}^+ f_{k} f_{k}^+ = f_{k}^+"),
            &(&fd[i] * &f[i]) * &fd[i],
            &fd[i],
        );
        for j in 0..n {
            if i == j {
                continue;
            }
            let l = j + 1;
            checks.equal(
                format!("f_{k} f_{l} = -f_{l} f_{k}"),
                &f[i] * &f[j],
                &-&(&f[j] * &f[i]),
            );
            checks.equal(
                format!("f_{k}^+ f_{l}^+ = -f_{l}^+ f_{k}^+"),
                &fd[i] * &fd[j],
                &-&(&fd[j] * &fd[i]),
            );
        }
    }
    checks.out
}
