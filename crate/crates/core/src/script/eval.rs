use std::collections::HashMap;

use super::parser::{Ast, BinaryOp, Expr};
use super::{AlgebraDefinition, ScriptError};
use crate::ga::{Algebra, Multivector};

/// Result of running a script: every binding, plus the `?`-marked values in
/// statement order.
#[derive(Debug, Clone)]
pub struct Evaluation {
    algebra: Algebra,
    environment: HashMap<String, Multivector>,
    outputs: Vec<(String, Multivector)>,
}

impl Evaluation {
    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn get(&self, name: &str) -> Option<&Multivector> {
        self.environment.get(name)
    }

    pub fn environment(&self) -> &HashMap<String, Multivector> {
        &self.environment
    }

    pub fn outputs(&self) -> &[(String, Multivector)] {
        &self.outputs
    }

    /// Copy with every output coefficient of magnitude `<= tol` removed.
    pub fn pruned(&self, tol: f64) -> Self {
        Self {
            algebra: self.algebra.clone(),
            environment: self.environment.clone(),
            outputs: self
                .outputs
                .iter()
                .map(|(n, mv)| (n.clone(), mv.prune(tol)))
                .collect(),
        }
    }
}

fn eval_expr(
    expr: &Expr,
    algebra: &Algebra,
    env: &HashMap<String, Multivector>,
) -> Result<Multivector, ScriptError> {
    Ok(match expr {
        Expr::Number(v) => Multivector::scalar(algebra, *v),
        Expr::Ident { name, pos } => {
            env.get(name).cloned().ok_or_else(|| ScriptError::Unbound {
                name: name.clone(),
                pos: *pos,
            })?
        }
        Expr::Neg(inner) => eval_expr(inner, algebra, env)?.scale(-1.0),
        Expr::Binary { op, lhs, rhs } => {
            let l = eval_expr(lhs, algebra, env)?;
            let r = eval_expr(rhs, algebra, env)?;
            match op {
                BinaryOp::Add => Multivector::linear_combine(1.0, &l, 1.0, &r)?,
                BinaryOp::Sub => Multivector::linear_combine(1.0, &l, -1.0, &r)?,
                BinaryOp::Mul => l.geometric_product(&r)?,
                BinaryOp::Wedge => l.outer_product(&r)?,
            }
        }
    })
}

/// Runs the statements in order. The definition's basis vectors are bound
/// up front and may not be reassigned.
pub fn evaluate(ast: &Ast, def: &AlgebraDefinition) -> Result<Evaluation, ScriptError> {
    let algebra = def.to_algebra()?;
    let mut env = HashMap::new();
    for (i, name) in algebra.names().iter().enumerate() {
        env.insert(name.clone(), Multivector::generator(&algebra, i)?);
    }
    let mut outputs = Vec::new();
    for stmt in &ast.statements {
        if algebra.generator_index(&stmt.target).is_some() {
            return Err(ScriptError::GeneratorRedefined {
                name: stmt.target.clone(),
                pos: stmt.pos,
            });
        }
        let value = eval_expr(&stmt.expr, &algebra, &env)?;
        if stmt.output {
            outputs.push((stmt.target.clone(), value.clone()));
        }
        env.insert(stmt.target.clone(), value);
    }
    Ok(Evaluation {
        algebra,
        environment: env,
        outputs,
    })
}
