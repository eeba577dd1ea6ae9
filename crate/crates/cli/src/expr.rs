//! Polynomial expression parser.
//!
//! Grammar (recursive descent):
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' integer)*
//! atom   := integer | variable | '(' expr ')'
//!         | ('prod' | 'sum') '(' ident 'in' 'k' ',' expr ')'
//! ```
//!
//! Variables are `x` and `y`, plus `g` for the residue class of the modulus
//! root when the field is a proper extension, plus any comprehension binder
//! in scope. A comprehension ranges over every element of the coefficient
//! field, so `prod(alpha in k, x + alpha*y)` is the product of x + alpha*y
//! over all alpha. Integers embed through the prime subfield.
//!
//! Printing a polynomial with [`std::fmt::Display`] and reparsing it yields
//! the same polynomial.

use std::collections::HashMap;
use std::fmt;

use loewy_core::gf::FieldCtx;
use loewy_core::poly::BiPoly;

const MAX_EXPONENT: u64 = 4096;

/// Parse failure with the byte position in the source text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprError {
    Syntax { pos: usize, msg: String },
    UnknownVariable { pos: usize, name: String },
    ExponentTooLarge { pos: usize, got: u64 },
}

impl fmt::Display for ExprError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExprError::Syntax { pos, msg } => write!(f, "syntax error at byte {}: {}", pos, msg),
            ExprError::UnknownVariable { pos, name } => {
                write!(f, "unknown variable `{}` at byte {}", name, pos)
            }
            ExprError::ExponentTooLarge { pos, got } => {
                write!(f, "exponent {} at byte {} exceeds the limit {}", got, pos, MAX_EXPONENT)
            }
        }
    }
}

impl std::error::Error for ExprError {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Int(u64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Comma,
}

fn lex(text: &str) -> Result<Vec<(usize, Token)>, ExprError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0usize;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push((i, Token::Plus));
                i += 1;
            }
            '-' => {
                out.push((i, Token::Minus));
                i += 1;
            }
            '*' => {
                out.push((i, Token::Star));
                i += 1;
            }
            '^' => {
                out.push((i, Token::Caret));
                i += 1;
            }
            '(' => {
                out.push((i, Token::LParen));
                i += 1;
            }
            ')' => {
                out.push((i, Token::RParen));
                i += 1;
            }
            ',' => {
                out.push((i, Token::Comma));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                let mut v: u64 = 0;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    v = v
                        .checked_mul(10)
                        .and_then(|v| v.checked_add((bytes[i] - b'0') as u64))
                        .ok_or(ExprError::Syntax {
                            pos: start,
                            msg: "integer literal overflows".into(),
                        })?;
                    i += 1;
                }
                out.push((start, Token::Int(v)));
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                out.push((start, Token::Ident(text[start..i].to_string())));
            }
            _ => {
                return Err(ExprError::Syntax { pos: i, msg: format!("unexpected character `{}`", c) })
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone)]
enum Ast {
    Int(u64),
    Var(usize, String),
    Neg(Box<Ast>),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Pow(Box<Ast>, u64),
    Comprehension { product: bool, binder: String, body: Box<Ast> },
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&(usize, Token)> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<(usize, Token)> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: &Token, what: &str) -> Result<(), ExprError> {
        match self.next() {
            Some((_, ref t)) if t == want => Ok(()),
            Some((p, t)) => {
                Err(ExprError::Syntax { pos: p, msg: format!("expected {}, found {:?}", what, t) })
            }
            None => Err(ExprError::Syntax {
                pos: self.end,
                msg: format!("expected {}, found end of input", what),
            }),
        }
    }

    fn expr(&mut self) -> Result<Ast, ExprError> {
        let mut node = if matches!(self.peek(), Some((_, Token::Minus))) {
            self.next();
            Ast::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some((_, Token::Plus)) => {
                    self.next();
                    node = Ast::Add(Box::new(node), Box::new(self.term()?));
                }
                Some((_, Token::Minus)) => {
                    self.next();
                    node = Ast::Sub(Box::new(node), Box::new(self.term()?));
                }
                _ => return Ok(node),
            }
        }
    }

    fn term(&mut self) -> Result<Ast, ExprError> {
        let mut node = self.factor()?;
        while matches!(self.peek(), Some((_, Token::Star))) {
            self.next();
            node = Ast::Mul(Box::new(node), Box::new(self.factor()?));
        }
        Ok(node)
    }

    fn factor(&mut self) -> Result<Ast, ExprError> {
        let mut node = self.atom()?;
        while matches!(self.peek(), Some((_, Token::Caret))) {
            self.next();
            match self.next() {
                Some((p, Token::Int(e))) => {
                    if e > MAX_EXPONENT {
                        return Err(ExprError::ExponentTooLarge { pos: p, got: e });
                    }
                    node = Ast::Pow(Box::new(node), e);
                }
                Some((p, t)) => {
                    return Err(ExprError::Syntax {
                        pos: p,
                        msg: format!("expected a nonnegative integer exponent, found {:?}", t),
                    })
                }
                None => {
                    return Err(ExprError::Syntax {
                        pos: self.end,
                        msg: "expected an exponent, found end of input".into(),
                    })
                }
            }
        }
        Ok(node)
    }

    fn atom(&mut self) -> Result<Ast, ExprError> {
        match self.next() {
            Some((_, Token::Int(v))) => Ok(Ast::Int(v)),
            Some((p, Token::Ident(name))) => match name.as_str() {
                "prod" | "sum" => {
                    let product = name == "prod";
                    self.expect(&Token::LParen, "`(`")?;
                    let (bp, binder) = match self.next() {
                        Some((bp, Token::Ident(b))) => (bp, b),
                        Some((bp, t)) => {
                            return Err(ExprError::Syntax {
                                pos: bp,
                                msg: format!("expected a binder name, found {:?}", t),
                            })
                        }
                        None => {
                            return Err(ExprError::Syntax {
                                pos: self.end,
                                msg: "expected a binder name".into(),
                            })
                        }
                    };
                    if ["x", "y", "g", "k", "prod", "sum", "in"].contains(&binder.as_str()) {
                        return Err(ExprError::Syntax {
                            pos: bp,
                            msg: format!("`{}` cannot be used as a binder", binder),
                        });
                    }
                    match self.next() {
                        Some((_, Token::Ident(ref kw))) if kw == "in" => {}
                        other => {
                            let pos = other.as_ref().map_or(self.end, |(p, _)| *p);
                            return Err(ExprError::Syntax { pos, msg: "expected `in`".into() });
                        }
                    }
                    match self.next() {
                        Some((_, Token::Ident(ref kw))) if kw == "k" => {}
                        other => {
                            let pos = other.as_ref().map_or(self.end, |(p, _)| *p);
                            return Err(ExprError::Syntax {
                                pos,
                                msg: "expected the field name `k`".into(),
                            });
                        }
                    }
                    self.expect(&Token::Comma, "`,`")?;
                    let body = self.expr()?;
                    self.expect(&Token::RParen, "`)`")?;
                    Ok(Ast::Comprehension { product, binder, body: Box::new(body) })
                }
                "in" | "k" => Err(ExprError::Syntax {
                    pos: p,
                    msg: format!("`{}` is a keyword and not a variable", name),
                }),
                _ => Ok(Ast::Var(p, name)),
            },
            Some((_, Token::LParen)) => {
                let node = self.expr()?;
                self.expect(&Token::RParen, "`)`")?;
                Ok(node)
            }
            Some((p, t)) => {
                Err(ExprError::Syntax { pos: p, msg: format!("expected an operand, found {:?}", t) })
            }
            None => Err(ExprError::Syntax {
                pos: self.end,
                msg: "expected an operand, found end of input".into(),
            }),
        }
    }
}

fn eval(ast: &Ast, ctx: &FieldCtx, env: &mut HashMap<String, BiPoly>) -> Result<BiPoly, ExprError> {
    match ast {
        Ast::Int(v) => Ok(BiPoly::constant(ctx, ctx.from_int(*v as i64))),
        Ast::Var(pos, name) => env
            .get(name)
            .cloned()
            .ok_or_else(|| ExprError::UnknownVariable { pos: *pos, name: name.clone() }),
        Ast::Neg(a) => Ok(eval(a, ctx, env)?.neg()),
        Ast::Add(a, b) => Ok(eval(a, ctx, env)?.add(&eval(b, ctx, env)?)),
        Ast::Sub(a, b) => Ok(eval(a, ctx, env)?.sub(&eval(b, ctx, env)?)),
        Ast::Mul(a, b) => Ok(eval(a, ctx, env)?.mul(&eval(b, ctx, env)?)),
        Ast::Pow(a, e) => Ok(eval(a, ctx, env)?.pow(*e as usize)),
        Ast::Comprehension { product, binder, body } => {
            let mut acc = if *product {
                BiPoly::one(ctx)
            } else {
                BiPoly::zero(ctx)
            };
            let saved = env.get(binder).cloned();
            for alpha in ctx.elements() {
                env.insert(binder.clone(), BiPoly::constant(ctx, alpha));
                let v = eval(body, ctx, env)?;
                acc = if *product { acc.mul(&v) } else { acc.add(&v) };
            }
            match saved {
                Some(v) => env.insert(binder.clone(), v),
                None => env.remove(binder),
            };
            Ok(acc)
        }
    }
}

/// Parse an expression into an exact polynomial over the given field.
pub fn parse_poly(text: &str, ctx: &FieldCtx) -> Result<BiPoly, ExprError> {
    let tokens = lex(text)?;
    let mut parser = Parser { tokens, pos: 0, end: text.len() };
    let ast = parser.expr()?;
    if let Some((p, t)) = parser.peek() {
        return Err(ExprError::Syntax { pos: *p, msg: format!("trailing input {:?}", t) });
    }
    let mut env = HashMap::new();
    env.insert("x".to_string(), BiPoly::var_x(ctx));
    env.insert("y".to_string(), BiPoly::var_y(ctx));
    if let Some(g) = ctx.generator() {
        env.insert("g".to_string(), BiPoly::constant(ctx, g));
    }
    eval(&ast, ctx, &mut env)
}
