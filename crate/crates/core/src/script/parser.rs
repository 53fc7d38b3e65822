//! Recursive-descent parser for the script language.
//!
//! ```text
//! program   := statement*
//! statement := '?'? IDENT '=' sum ';'
//! sum       := product (('+' | '-') product)*
//! product   := unary (('*' | '^') unary)*
//! unary     := '-' unary | primary
//! primary   := NUMBER | IDENT | '(' sum ')'
//! ```

use std::fmt;

use super::lexer::{tokenize, Position, Token, TokenKind};
use super::ScriptError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinaryOp {
    Add,
    Sub,
    /// Geometric product.
    Mul,
    /// Outer product.
    Wedge,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Number(f64),
    Ident {
        name: String,
        pos: Position,
    },
    Neg(Box<Expr>),
    Binary {
        op: BinaryOp,
        lhs: Box<Expr>,
        rhs: Box<Expr>,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Statement {
    pub target: String,
    pub pos: Position,
    /// Set for statements written with a leading `?`.
    pub output: bool,
    pub expr: Expr,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Ast {
    pub statements: Vec<Statement>,
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Number(v) => write!(f, "{v}"),
            Expr::Ident { name, .. } => f.write_str(name),
            Expr::Neg(e) => write!(f, "(-{e})"),
            Expr::Binary { op, lhs, rhs } => {
                let sym = match op {
                    BinaryOp::Add => "+",
                    BinaryOp::Sub => "-",
                    BinaryOp::Mul => "*",
                    BinaryOp::Wedge => "^",
                };
                write!(f, "({lhs} {sym} {rhs})")
            }
        }
    }
}

impl fmt::Display for Ast {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.statements {
            let q = if s.output { "?" } else { "" };
            writeln!(f, "{q}{} = {};", s.target, s.expr)?;
        }
        Ok(())
    }
}

struct Parser {
    tokens: Vec<Token>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.at]
    }

    fn bump(&mut self) -> Token {
        let tok = self.tokens[self.at].clone();
        if tok.kind != TokenKind::Eof {
            self.at += 1;
        }
        tok
    }

    fn eat(&mut self, kind: TokenKind) -> bool {
        if self.peek().kind == kind {
            self.bump();
            true
        } else {
            false
        }
    }

    fn unexpected(&self, expected: &str) -> ScriptError {
        let tok = self.peek();
        let found = match tok.kind {
            TokenKind::Eof => "end of input".to_owned(),
            _ => format!("`{}`", tok.text),
        };
        ScriptError::Syntax {
            pos: tok.pos,
            message: format!("expected {expected}, found {found}"),
        }
    }

    fn expect(&mut self, kind: TokenKind) -> Result<Token, ScriptError> {
        if self.peek().kind == kind {
            Ok(self.bump())
        } else {
            Err(self.unexpected(&kind.to_string()))
        }
    }

    fn statement(&mut self) -> Result<Statement, ScriptError> {
        let output = self.eat(TokenKind::Output);
        let target = self.expect(TokenKind::Identifier)?;
        self.expect(TokenKind::Assign)?;
        let expr = self.sum()?;
        self.expect(TokenKind::Semicolon)?;
        Ok(Statement {
            target: target.text,
            pos: target.pos,
            output,
            expr,
        })
    }

    fn sum(&mut self) -> Result<Expr, ScriptError> {
        let mut lhs = self.product()?;
        loop {
            let op = match self.peek().kind {
                TokenKind::Plus => BinaryOp::Add,
                TokenKind::Minus => BinaryOp::Sub,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.product()?;
            lhs = Expr::Binary {
                op,
                lhs: Box::new(lhs),
                rhs: Box::new(rhs),
            };
        }
    }

    fn product(&mut self) -> Result<Expr, ScriptError> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek().kind {
                TokenKind::Star => BinaryOp::Mul,
                TokenKind::Wedge => BinaryOp::Wedge,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.unary()?;
            lhs = Expr::Binary {
                op,
                lhs: Box::new(lhs),
                rhs: Box::new(rhs),
            };
        }
    }

    fn unary(&mut self) -> Result<Expr, ScriptError> {
        if self.eat(TokenKind::Minus) {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Expr, ScriptError> {
        match self.peek().kind {
            TokenKind::Number => {
                let tok = self.bump();
                let value = tok.text.parse().map_err(|_| ScriptError::Lex {
                    pos: tok.pos,
                    message: format!("invalid number `{}`", tok.text),
                })?;
                Ok(Expr::Number(value))
            }
            TokenKind::Identifier => {
                let tok = self.bump();
                Ok(Expr::Ident {
                    name: tok.text,
                    pos: tok.pos,
                })
            }
            TokenKind::LParen => {
                self.bump();
                let inner = self.sum()?;
                self.expect(TokenKind::RParen)?;
                Ok(inner)
            }
            _ => Err(self.unexpected("an expression")),
        }
    }
}

pub fn parse_script(source: &str) -> Result<Ast, ScriptError> {
    let mut parser = Parser {
        tokens: tokenize(source)?,
        at: 0,
    };
    let mut statements = Vec::new();
    while parser.peek().kind != TokenKind::Eof {
        statements.push(parser.statement()?);
    }
    Ok(Ast { statements })
}
