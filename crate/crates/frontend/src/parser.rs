//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := unary (("*" | "/") unary)*
//! unary  := "-"? factor
//! factor := base ("^" uint)?
//! base   := identifier | integer | "(" expr ")"
//! ```
//!
//! Identifiers are the declared variables, plus `t` over `GF(p)(t)`.
//! Division is only by nonzero constants, which is enough to read back
//! every rendered coefficient such as `3/4*x` or `t/(t + 1)*y`.

use std::fmt;

use dml_core::field::{Field, FieldDescriptor};
use dml_core::{MonomialOrder, MultiPoly};
use num_bigint::BigInt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the source.
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at offset {}: {}", self.offset, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Int(s) => format!("integer `{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Int(src[start..i].to_string())));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(src[start..i].to_string())));
                continue;
            }
            _ => {
                let ch = src[start..].chars().next().expect("in bounds");
                return Err(ParseError {
                    offset: start,
                    message: format!("unexpected character `{ch}`"),
                });
            }
        };
        out.push((start, tok));
        i += 1;
    }
    out.push((src.len(), Tok::End));
    Ok(out)
}

struct Parser<'a, F: Field> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    vars: &'a [String],
    d: FieldDescriptor,
    order: MonomialOrder,
    _field: std::marker::PhantomData<F>,
}

impl<F: Field> Parser<'_, F> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> (usize, Tok) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            offset: self.offset(),
            message: message.into(),
        })
    }

    fn constant(&self, c: F) -> MultiPoly<F> {
        MultiPoly::constant(c, self.vars.len(), self.order.clone())
    }

    fn expr(&mut self) -> Result<MultiPoly<F>, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly<F>, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Tok::Slash => {
                    self.bump();
                    let at = self.offset();
                    let divisor = self.unary()?;
                    if !divisor.is_constant() || divisor.is_zero() {
                        return Err(ParseError {
                            offset: at,
                            message: "division is only by nonzero constants".into(),
                        });
                    }
                    let c = divisor.leading_coeff().expect("nonzero").inv().expect("nonzero");
                    acc = acc.scale(&c);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<MultiPoly<F>, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(self.factor()?.neg());
        }
        self.factor()
    }

    fn factor(&mut self) -> Result<MultiPoly<F>, ParseError> {
        let base = self.base()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let at = self.offset();
        match self.bump().1 {
            Tok::Int(digits) => {
                let e: u32 = digits.parse().map_err(|_| ParseError {
                    offset: at,
                    message: format!("exponent `{digits}` overflows"),
                })?;
                Ok(base.pow(e))
            }
            other => Err(ParseError {
                offset: at,
                message: format!("expected an exponent, found {}", other.describe()),
            }),
        }
    }

    fn base(&mut self) -> Result<MultiPoly<F>, ParseError> {
        let at = self.offset();
        match self.bump().1 {
            Tok::Int(digits) => {
                let n: BigInt = digits.parse().expect("digits");
                Ok(self.constant(F::from_bigint(&n, &self.d)))
            }
            Tok::Ident(name) => {
                if let Some(i) = self.vars.iter().position(|v| *v == name) {
                    return Ok(MultiPoly::variable(i, self.d, self.vars.len(), self.order.clone()));
                }
                if name == "t" {
                    return match F::generator(&self.d) {
                        Some(t) => Ok(self.constant(t)),
                        None => Err(ParseError {
                            offset: at,
                            message: format!("`t` is only available over GF(p)(t), not {}", self.d),
                        }),
                    };
                }
                Err(ParseError {
                    offset: at,
                    message: format!("unknown identifier `{name}`"),
                })
            }
            Tok::LParen => {
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return self.error(format!("expected `)`, found {}", self.peek().describe()));
                }
                self.bump();
                Ok(inner)
            }
            other => Err(ParseError {
                offset: at,
                message: format!("expected a variable, integer or `(`, found {}", other.describe()),
            }),
        }
    }
}

/// Parses `src` into a polynomial in `vars` under graded reverse
/// lexicographic order.
pub fn parse_polynomial_expr<F: Field>(
    src: &str,
    vars: &[String],
    descriptor: FieldDescriptor,
) -> Result<MultiPoly<F>, ParseError> {
    if F::KIND != descriptor.kind() {
        return Err(ParseError {
            offset: 0,
            message: format!("coefficient type does not match field {descriptor}"),
        });
    }
    let mut parser = Parser::<F> {
        toks: tokenize(src)?,
        pos: 0,
        vars,
        d: descriptor,
        order: MonomialOrder::grevlex(vars.len()),
        _field: std::marker::PhantomData,
    };
    let poly = parser.expr()?;
    if *parser.peek() != Tok::End {
        return parser.error(format!("expected an operator, found {}", parser.peek().describe()));
    }
    Ok(poly)
}
