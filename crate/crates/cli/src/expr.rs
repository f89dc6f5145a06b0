//! Event expressions over a frame's element labels.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! expr   := term (("|" | ",") term)*      union
//! term   := factor ("&" factor)*          intersection
//! factor := "~" factor                    complement
//!         | "(" expr ")"
//!         | "*"                           the full frame
//!         | label
//! ```
//!
//! Labels are runs of `[A-Za-z0-9_-]`; whitespace separates tokens.

use std::sync::Arc;

use beliefkit::frame::{Frame, FrameExt, Subset};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("empty event expression")]
    Empty,
    #[error("unexpected character `{0}` in event expression")]
    BadChar(char),
    #[error("unexpected end of event expression")]
    UnexpectedEnd,
    #[error("unexpected `{0}` in event expression")]
    Unexpected(String),
    #[error("unknown element label `{label}` (frame elements: {available})")]
    UnknownLabel { label: String, available: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Label(String),
    Union,
    Intersect,
    Complement,
    Open,
    Close,
    Full,
}

fn tokenize(text: &str) -> Result<Vec<Token>, ExprError> {
    let mut tokens = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' | '\n' => {
                chars.next();
            }
            '|' | ',' => {
                chars.next();
                tokens.push(Token::Union);
            }
            '&' => {
                chars.next();
                tokens.push(Token::Intersect);
            }
            '~' | '!' => {
                chars.next();
                tokens.push(Token::Complement);
            }
            '(' => {
                chars.next();
                tokens.push(Token::Open);
            }
            ')' => {
                chars.next();
                tokens.push(Token::Close);
            }
            '*' => {
                chars.next();
                tokens.push(Token::Full);
            }
            c if c.is_ascii_alphanumeric() || c == '_' || c == '-' => {
                let mut label = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' || c == '-' {
                        label.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                tokens.push(Token::Label(label));
            }
            other => return Err(ExprError::BadChar(other)),
        }
    }
    if tokens.is_empty() {
        return Err(ExprError::Empty);
    }
    Ok(tokens)
}

struct Parser<'a> {
    frame: &'a Arc<Frame>,
    tokens: Vec<Token>,
    position: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.position)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.position).cloned();
        if t.is_some() {
            self.position += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Subset, ExprError> {
        let mut acc = self.term()?;
        while matches!(self.peek(), Some(Token::Union)) {
            self.next();
            acc = acc.union(&self.term()?);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Subset, ExprError> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some(Token::Intersect)) {
            self.next();
            acc = acc.intersection(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Subset, ExprError> {
        match self.next() {
            Some(Token::Complement) => Ok(self.factor()?.complement()),
            Some(Token::Open) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Token::Close) => Ok(inner),
                    Some(t) => Err(ExprError::Unexpected(describe(&t))),
                    None => Err(ExprError::UnexpectedEnd),
                }
            }
            Some(Token::Full) => Ok(self.frame.full_set()),
            Some(Token::Label(label)) => match self.frame.index_of(&label) {
                Some(i) => Ok(self.frame.singleton(i)),
                None => Err(ExprError::UnknownLabel {
                    label,
                    available: self.frame.labels().join(", "),
                }),
            },
            Some(t) => Err(ExprError::Unexpected(describe(&t))),
            None => Err(ExprError::UnexpectedEnd),
        }
    }
}

fn describe(t: &Token) -> String {
    match t {
        Token::Label(l) => l.clone(),
        Token::Union => "|".into(),
        Token::Intersect => "&".into(),
        Token::Complement => "~".into(),
        Token::Open => "(".into(),
        Token::Close => ")".into(),
        Token::Full => "*".into(),
    }
}

/// Resolves an event expression against a frame.
pub fn parse_event(frame: &Arc<Frame>, text: &str) -> Result<Subset, ExprError> {
    let tokens = tokenize(text)?;
    let mut parser = Parser {
        frame,
        tokens,
        position: 0,
    };
    let subset = parser.expr()?;
    if parser.position != parser.tokens.len() {
        let t = parser.tokens[parser.position].clone();
        return Err(ExprError::Unexpected(describe(&t)));
    }
    Ok(subset)
}
