//! Parser for term literals in the paper's surface syntax:
//! `E`, `L(x)`, `N(t1,t2)`, `[a,b]`, `{a,b}`, `(m,x)`, `Just x`, `Nothing`,
//! `exc e1`, integers, and bare symbols.
//!
//! With a signature in scope, `L`/`N`/`E` (and any other declared operation
//! symbols) parse as free-monad terms; without one they parse as binary
//! trees.

use anyhow::{anyhow, bail, Result};
use mlb_core::signature::{self, SignatureSpec};
use mlb_core::value::Val;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(i64),
    Ident(String),
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Comma,
}

fn lex(src: &str) -> Result<Vec<Tok>> {
    let mut toks = Vec::new();
    let mut chars = src.chars().peekable();
    while let Some(&ch) = chars.peek() {
        match ch {
            c if c.is_whitespace() => {
                chars.next();
            }
            '(' => {
                chars.next();
                toks.push(Tok::LParen);
            }
            ')' => {
                chars.next();
                toks.push(Tok::RParen);
            }
            '[' => {
                chars.next();
                toks.push(Tok::LBracket);
            }
            ']' => {
                chars.next();
                toks.push(Tok::RBracket);
            }
            '{' => {
                chars.next();
                toks.push(Tok::LBrace);
            }
            '}' => {
                chars.next();
                toks.push(Tok::RBrace);
            }
            ',' => {
                chars.next();
                toks.push(Tok::Comma);
            }
            '-' => {
                chars.next();
                let mut digits = String::from("-");
                while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    digits.push(*d);
                    chars.next();
                }
                if digits == "-" {
                    bail!("stray '-' in term");
                }
                toks.push(Tok::Int(digits.parse()?));
            }
            c if c.is_ascii_digit() => {
                let mut digits = String::new();
                while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    digits.push(*d);
                    chars.next();
                }
                toks.push(Tok::Int(digits.parse()?));
            }
            c if c.is_alphanumeric() || c == '_' => {
                let mut ident = String::new();
                while let Some(d) =
                    chars.peek().filter(|d| d.is_alphanumeric() || **d == '_' || **d == '\'')
                {
                    ident.push(*d);
                    chars.next();
                }
                toks.push(Tok::Ident(ident));
            }
            other => bail!("unexpected character {other:?} in term"),
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    sig: Option<&'a SignatureSpec>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Result<Tok> {
        let t = self.toks.get(self.pos).cloned().ok_or_else(|| anyhow!("unexpected end of term"))?;
        self.pos += 1;
        Ok(t)
    }

    fn expect(&mut self, tok: Tok) -> Result<()> {
        let got = self.next()?;
        if got != tok {
            bail!("expected {tok:?}, got {got:?}");
        }
        Ok(())
    }

    fn comma_separated(&mut self, close: Tok) -> Result<Vec<Val>> {
        let mut items = Vec::new();
        if self.peek() == Some(&close) {
            self.next()?;
            return Ok(items);
        }
        loop {
            items.push(self.value()?);
            match self.next()? {
                Tok::Comma => continue,
                t if t == close => break,
                t => bail!("expected ',' or closing delimiter, got {t:?}"),
            }
        }
        Ok(items)
    }

    fn value(&mut self) -> Result<Val> {
        match self.next()? {
            Tok::Int(i) => Ok(Val::int(i)),
            Tok::LBracket => Ok(Val::List(self.comma_separated(Tok::RBracket)?)),
            Tok::LBrace => Ok(Val::set(self.comma_separated(Tok::RBrace)?)),
            Tok::LParen => {
                let items = self.comma_separated(Tok::RParen)?;
                match items.len() {
                    0 => Ok(Val::Unit),
                    1 => Ok(items.into_iter().next().unwrap()),
                    2 => {
                        let mut it = items.into_iter();
                        Ok(Val::pair(it.next().unwrap(), it.next().unwrap()))
                    }
                    _ => Ok(Val::Tuple(items)),
                }
            }
            Tok::Ident(id) => self.ident(id),
            t => bail!("unexpected token {t:?}"),
        }
    }

    fn ident(&mut self, id: String) -> Result<Val> {
        match id.as_str() {
            "Just" => Ok(Val::ok(self.value()?)),
            "Nothing" => Ok(Val::exc(Val::sym("nothing"))),
            "exc" => Ok(Val::exc(self.value()?)),
            "L" => {
                // leaf / variable; accepts both L(x) and L x
                let payload = self.value()?;
                match self.sig {
                    Some(_) => Ok(signature::var(payload)),
                    None => Ok(Val::leaf(payload)),
                }
            }
            _ => {
                if let Some(sig) = self.sig {
                    if let Some(arity) = sig.arity(&id) {
                        let children = if arity == 0 {
                            // optional empty argument list
                            if self.peek() == Some(&Tok::LParen) {
                                self.next()?;
                                self.expect(Tok::RParen)?;
                            }
                            vec![]
                        } else {
                            self.expect(Tok::LParen)?;
                            let children = self.comma_separated(Tok::RParen)?;
                            if children.len() != arity {
                                bail!("operation {id} expects {arity} arguments");
                            }
                            children
                        };
                        return Ok(signature::op(&id, children));
                    }
                } else if id == "E" {
                    return Ok(Val::empty_tree());
                } else if id == "N" {
                    self.expect(Tok::LParen)?;
                    let children = self.comma_separated(Tok::RParen)?;
                    if children.len() != 2 {
                        bail!("N expects two subtrees");
                    }
                    let mut it = children.into_iter();
                    return Ok(Val::node(it.next().unwrap(), it.next().unwrap()));
                }
                Ok(Val::sym(id))
            }
        }
    }
}

/// Parse one term; `sig` switches tree syntax into free-monad terms.
pub fn parse_term(src: &str, sig: Option<&SignatureSpec>) -> Result<Val> {
    let toks = lex(src)?;
    let mut p = Parser { toks, pos: 0, sig };
    let v = p.value()?;
    if p.pos != p.toks.len() {
        bail!("trailing input after term in {src:?}");
    }
    Ok(mlb_core::value::canon(v))
}
