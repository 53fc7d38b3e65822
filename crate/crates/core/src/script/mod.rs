//! The GAALOP-style script language: `Definition.csv` ingestion, lexing,
//! parsing, evaluation over the geometric algebra kernel, and listing-format
//! output.

mod definition;
mod eval;
mod lexer;
mod output;
mod parser;

pub use definition::{parse_definition, AlgebraDefinition};
pub use eval::{evaluate, Evaluation};
pub use lexer::{tokenize, Position, Token, TokenKind};
pub use output::{
    format_outputs, format_outputs_json, format_value, output_records, Coordinate, OutputRecord,
};
pub use parser::{parse_script, Ast, BinaryOp, Expr, Statement};

use thiserror::Error;

use crate::ga::GaError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScriptError {
    #[error("Definition.csv line {line}: {message}")]
    Definition { line: usize, message: String },
    #[error("{pos}: {message}")]
    Lex { pos: Position, message: String },
    #[error("{pos}: syntax error: {message}")]
    Syntax { pos: Position, message: String },
    #[error("{pos}: `{name}` is not defined")]
    Unbound { name: String, pos: Position },
    #[error("{pos}: `{name}` is a basis vector and cannot be assigned")]
    GeneratorRedefined { name: String, pos: Position },
    #[error(transparent)]
    Algebra(#[from] GaError),
}

impl ScriptError {
    /// Source position for errors raised while reading a script.
    pub fn position(&self) -> Option<Position> {
        match self {
            ScriptError::Lex { pos, .. }
            | ScriptError::Syntax { pos, .. }
            | ScriptError::Unbound { pos, .. }
            | ScriptError::GeneratorRedefined { pos, .. } => Some(*pos),
            ScriptError::Definition { .. } | ScriptError::Algebra(_) => None,
        }
    }
}

/// Parses and evaluates `source` under `def`.
pub fn run_script(source: &str, def: &AlgebraDefinition) -> Result<Evaluation, ScriptError> {
    evaluate(&parse_script(source)?, def)
}
