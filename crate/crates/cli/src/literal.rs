//! Textual fuzzy literals: `tri(a;b;d)`, `trap(a;b;c;d)`, `r + q*A`, `r`.

use std::fmt;

use rfa_core::{Basis, Lc};

use crate::error::{CliError, Result};

#[derive(Clone, Debug, PartialEq)]
pub enum Literal {
    Basis(Basis),
    Element(Lc),
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Basis(b) => f.write_str(&format_basis(b)),
            Self::Element(z) => f.write_str(&format_element(*z)),
        }
    }
}

/// Byte cursor shared by the literal and expression parsers.
pub(crate) struct Cursor<'a> {
    pub src: &'a str,
    pub pos: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(src: &'a str) -> Self {
        Self { src, pos: 0 }
    }

    pub fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    pub fn skip_ws(&mut self) {
        let rest = self.rest();
        self.pos += rest.len() - rest.trim_start().len();
    }

    pub fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    pub fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.src.len()
    }

    /// Consumes `c` after optional whitespace.
    pub fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    /// Consumes an ASCII or Unicode minus sign.
    pub fn eat_minus(&mut self) -> bool {
        self.eat('-') || self.eat('\u{2212}')
    }

    pub fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    pub fn error(&self, message: impl Into<String>) -> CliError {
        CliError::parse(self.pos, message)
    }

    /// Unsigned decimal number with optional fraction and exponent.
    pub fn unsigned_number(&mut self) -> Result<f64> {
        self.skip_ws();
        let start = self.pos;
        let bytes = self.src.as_bytes();
        let mut end = start;
        let digits = |from: usize| {
            bytes[from..]
                .iter()
                .take_while(|b| b.is_ascii_digit())
                .count()
        };
        end += digits(end);
        let int_digits = end - start;
        let mut frac_digits = 0;
        if bytes.get(end) == Some(&b'.') {
            frac_digits = digits(end + 1);
            end += 1 + frac_digits;
        }
        if int_digits + frac_digits == 0 {
            return Err(self.error("expected a number"));
        }
        if matches!(bytes.get(end), Some(b'e' | b'E')) {
            let mut k = end + 1;
            if matches!(bytes.get(k), Some(b'+' | b'-')) {
                k += 1;
            }
            let n = digits(k);
            if n == 0 {
                return Err(CliError::parse(k, "malformed exponent"));
            }
            end = k + n;
        }
        let v = self.src[start..end]
            .parse::<f64>()
            .map_err(|e| CliError::parse(start, e.to_string()))?;
        self.pos = end;
        Ok(v)
    }

    /// Number with an optional leading sign.
    pub fn signed_number(&mut self) -> Result<f64> {
        if self.eat_minus() {
            Ok(-self.unsigned_number()?)
        } else {
            self.eat('+');
            self.unsigned_number()
        }
    }

    pub fn ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let rest = self.rest();
        let n = rest
            .char_indices()
            .take_while(|&(i, c)| {
                c == '_' || c.is_ascii_alphabetic() || (i > 0 && c.is_ascii_digit())
            })
            .count();
        if n == 0 {
            return None;
        }
        self.pos += n;
        Some(&rest[..n])
    }
}

pub fn parse_fuzzy_literal(text: &str) -> Result<Literal> {
    let mut c = Cursor::new(text);
    let save = c.pos;
    match c.ident() {
        Some(kind @ ("tri" | "trap")) => {
            let args = number_list(&mut c)?;
            if !c.at_end() {
                return Err(c.error("unexpected trailing input"));
            }
            let basis = match (kind, args.as_slice()) {
                ("tri", &[a, b, d]) => Basis::triangular(a, b, d),
                ("trap", &[a, b, cc, d]) => Basis::trapezoidal(a, b, cc, d),
                _ => {
                    let want = if kind == "tri" { 3 } else { 4 };
                    return Err(CliError::parse(
                        save,
                        format!("{kind} takes {want} values, got {}", args.len()),
                    ));
                }
            };
            Ok(Literal::Basis(basis?))
        }
        _ => {
            c.pos = save;
            let z = element(&mut c)?;
            if !c.at_end() {
                return Err(c.error("unexpected trailing input"));
            }
            Ok(Literal::Element(z))
        }
    }
}

pub fn parse_element(text: &str) -> Result<Lc> {
    match parse_fuzzy_literal(text)? {
        Literal::Element(z) => Ok(z),
        Literal::Basis(_) => Err(CliError::parse(
            0,
            "expected an element `r + q*A`, found a basis",
        )),
    }
}

pub fn parse_basis(text: &str) -> Result<Basis> {
    match parse_fuzzy_literal(text)? {
        Literal::Basis(b) => Ok(b),
        Literal::Element(_) => Err(CliError::parse(
            0,
            "expected `tri(a;b;d)` or `trap(a;b;c;d)`",
        )),
    }
}

fn number_list(c: &mut Cursor) -> Result<Vec<f64>> {
    c.expect('(')?;
    let mut out = vec![c.signed_number()?];
    while c.eat(';') {
        out.push(c.signed_number()?);
    }
    c.expect(')')?;
    Ok(out)
}

fn fuzzy_unit(c: &mut Cursor) -> Result<()> {
    c.expect('*')?;
    c.skip_ws();
    let at = c.pos;
    match c.ident() {
        Some("A") => Ok(()),
        _ => Err(CliError::parse(at, "expected `A`")),
    }
}

fn element(c: &mut Cursor) -> Result<Lc> {
    let first = c.signed_number()?;
    c.skip_ws();
    if c.peek() == Some('*') {
        fuzzy_unit(c)?;
        return Ok(Lc::new(0.0, first));
    }
    if c.at_end() {
        return Ok(Lc::real(first));
    }
    let negative = if c.eat_minus() {
        true
    } else if c.eat('+') {
        false
    } else {
        return Err(c.error("expected `+` or `-`"));
    };
    let q = c.signed_number()?;
    fuzzy_unit(c)?;
    Ok(Lc::new(first, if negative { -q } else { q }))
}

/// Shortest decimal that parses back to the same `f64`.
fn number(v: f64) -> String {
    format!("{v:?}")
}

/// Canonical `r + q*A` / `r - q*A` form; `parse_element` inverts it exactly.
pub fn format_element(z: Lc) -> String {
    if z.fu.is_sign_negative() {
        format!("{} - {}*A", number(z.re), number(-z.fu))
    } else {
        format!("{} + {}*A", number(z.re), number(z.fu))
    }
}

pub fn format_basis(b: &Basis) -> String {
    let join = |v: &[f64]| v.iter().map(|&x| number(x)).collect::<Vec<_>>().join(";");
    match b {
        Basis::Triangular { a, b, d } => format!("tri({})", join(&[*a, *b, *d])),
        Basis::Trapezoidal { a, b, c, d } => format!("trap({})", join(&[*a, *b, *c, *d])),
        Basis::Tabulated(levels) => {
            let rows: Vec<String> = levels
                .iter()
                .map(|l| {
                    format!(
                        "{}:[{}, {}]",
                        number(l.alpha),
                        number(l.lower),
                        number(l.upper)
                    )
                })
                .collect();
            format!("table({})", rows.join("; "))
        }
    }
}
