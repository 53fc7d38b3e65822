use std::fmt;

use super::ScriptError;

/// 1-based line and column of a character in the source.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct Position {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    Identifier,
    Number,
    Assign,
    Output,
    Plus,
    Minus,
    Star,
    Wedge,
    LParen,
    RParen,
    Semicolon,
    Eof,
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TokenKind::Identifier => "identifier",
            TokenKind::Number => "number",
            TokenKind::Assign => "`=`",
            TokenKind::Output => "`?`",
            TokenKind::Plus => "`+`",
            TokenKind::Minus => "`-`",
            TokenKind::Star => "`*`",
            TokenKind::Wedge => "`^`",
            TokenKind::LParen => "`(`",
            TokenKind::RParen => "`)`",
            TokenKind::Semicolon => "`;`",
            TokenKind::Eof => "end of input",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub text: String,
    pub pos: Position,
}

struct Cursor<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    pos: Position,
}

impl Cursor<'_> {
    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.pos.line += 1;
            self.pos.column = 1;
        } else {
            self.pos.column += 1;
        }
        Some(c)
    }

    fn take_while(&mut self, text: &mut String, pred: impl Fn(char) -> bool) {
        while let Some(c) = self.peek().filter(|&c| pred(c)) {
            text.push(c);
            self.bump();
        }
    }
}

/// Splits a script into tokens. `//` starts a comment running to the end of
/// the line. The stream always ends with an [`TokenKind::Eof`] token.
pub fn tokenize(source: &str) -> Result<Vec<Token>, ScriptError> {
    let mut cur = Cursor {
        chars: source.chars().peekable(),
        pos: Position { line: 1, column: 1 },
    };
    let mut tokens = Vec::new();
    loop {
        let pos = cur.pos;
        let Some(c) = cur.peek() else {
            tokens.push(Token {
                kind: TokenKind::Eof,
                text: String::new(),
                pos,
            });
            return Ok(tokens);
        };
        if c.is_whitespace() {
            cur.bump();
            continue;
        }
        let mut text = String::new();
        let kind = match c {
            'A'..='Z' | 'a'..='z' => {
                cur.take_while(&mut text, |c| c.is_ascii_alphanumeric() || c == '_');
                TokenKind::Identifier
            }
            '0'..='9' => {
                cur.take_while(&mut text, |c| c.is_ascii_digit());
                if cur.peek() == Some('.') {
                    text.push('.');
                    cur.bump();
                    let before = text.len();
                    cur.take_while(&mut text, |c| c.is_ascii_digit());
                    if text.len() == before {
                        return Err(ScriptError::Lex {
                            pos: cur.pos,
                            message: format!("expected a digit after `{text}`"),
                        });
                    }
                }
                TokenKind::Number
            }
            '/' => {
                cur.bump();
                if cur.peek() == Some('/') {
                    while cur.peek().is_some_and(|c| c != '\n') {
                        cur.bump();
                    }
                    continue;
                }
                return Err(ScriptError::Lex {
                    pos,
                    message: "unexpected `/` (division is not supported)".into(),
                });
            }
            _ => {
                let kind = match c {
                    '=' => TokenKind::Assign,
                    '?' => TokenKind::Output,
                    '+' => TokenKind::Plus,
                    '-' => TokenKind::Minus,
                    '*' => TokenKind::Star,
                    '^' => TokenKind::Wedge,
                    '(' => TokenKind::LParen,
                    ')' => TokenKind::RParen,
                    ';' => TokenKind::Semicolon,
                    other => {
                        return Err(ScriptError::Lex {
                            pos,
                            message: format!("unexpected character `{other}`"),
                        })
                    }
                };
                text.push(c);
                cur.bump();
                kind
            }
        };
        tokens.push(Token { kind, text, pos });
    }
}
