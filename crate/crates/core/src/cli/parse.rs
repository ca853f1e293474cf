//! Ideal description format and polynomial expression parser.
//!
//! ```text
//! # twisted cubic
//! ring: Q[x,y,z]
//! order: grevlex
//! gens:
//! x^2 - y
//! x^3 - z
//! ```

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::ParseError;
use crate::poly::{Monomial, MonomialOrder, Poly, Rational, Ring};

/// A parsed ideal description.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemSpec {
    pub ring: Ring,
    pub generators: Vec<Poly>,
    pub source_text: String,
}

/// Parses a full ideal description: `ring:`, `order:` and `gens:` headers
/// followed by one generator per line. `#` starts a comment.
pub fn parse_input(text: &str) -> Result<ProblemSpec, ParseError> {
    let mut variables: Option<(Vec<String>, usize)> = None;
    let mut order: Option<MonomialOrder> = None;
    let mut gens_line: Option<usize> = None;
    let mut ring: Option<Ring> = None;
    let mut generators = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("");
        let indent = line.len() - line.trim_start().len();
        let content = line.trim();
        if content.is_empty() {
            continue;
        }
        if gens_line.is_some() {
            let ring = ring.as_ref().expect("ring is built at `gens:`");
            let poly = parse_poly_expr(content, ring).map_err(|e| e.at_line(lineno, indent))?;
            generators.push(poly);
            continue;
        }
        let Some((key, value)) = content.split_once(':') else {
            return Err(ParseError::new(lineno, indent + 1, "expected `key: value` header"));
        };
        let value_col = indent + key.len() + 2 + (value.len() - value.trim_start().len());
        let value = value.trim();
        match key.trim() {
            "ring" => {
                if variables.is_some() {
                    return Err(ParseError::new(lineno, indent + 1, "duplicate `ring:` header"));
                }
                let vars = parse_ring_decl(value).map_err(|e| e.at_line(lineno, value_col - 1))?;
                variables = Some((vars, lineno));
            }
            "order" => {
                if order.is_some() {
                    return Err(ParseError::new(lineno, indent + 1, "duplicate `order:` header"));
                }
                order = Some(value.parse().map_err(|_| {
                    ParseError::new(
                        lineno,
                        value_col,
                        format!("unknown monomial order `{value}` (expected lex or grevlex)"),
                    )
                })?);
            }
            "gens" => {
                if !value.is_empty() {
                    return Err(ParseError::new(
                        lineno,
                        value_col,
                        "generators go on the lines after `gens:`",
                    ));
                }
                let (vars, ring_line) = variables
                    .clone()
                    .ok_or_else(|| ParseError::new(lineno, 1, "missing `ring:` header"))?;
                let order =
                    order.ok_or_else(|| ParseError::new(lineno, 1, "missing `order:` header"))?;
                ring = Some(
                    Ring::new(vars, order)
                        .map_err(|e| ParseError::new(ring_line, 1, e.to_string()))?,
                );
                gens_line = Some(lineno);
            }
            other => {
                return Err(ParseError::new(
                    lineno,
                    indent + 1,
                    format!("unknown header `{other}`"),
                ))
            }
        }
    }

    let Some(gens_line) = gens_line else {
        let line = text.lines().count().max(1);
        return Err(ParseError::new(line, 1, "missing `gens:` section"));
    };
    if generators.is_empty() {
        return Err(ParseError::new(gens_line, 1, "empty generator list"));
    }
    Ok(ProblemSpec {
        ring: ring.expect("ring is built at `gens:`"),
        generators,
        source_text: text.to_owned(),
    })
}

/// Parses `Q[v1,v2,...]` (or `QQ[...]`) into variable names. Duplicates are
/// rejected.
fn parse_ring_decl(decl: &str) -> Result<Vec<String>, ParseError> {
    let err = |col: usize, msg: String| ParseError::new(1, col, msg);
    let body = decl
        .strip_prefix("QQ[")
        .or_else(|| decl.strip_prefix("Q["))
        .ok_or_else(|| err(1, "ring must be declared as Q[v1,v2,...]".into()))?;
    let offset = decl.len() - body.len();
    let body = body
        .strip_suffix(']')
        .ok_or_else(|| err(decl.len(), "expected `]` closing the variable list".into()))?;
    let mut vars: Vec<String> = Vec::new();
    let mut col = offset + 1;
    for part in body.split(',') {
        let name = part.trim();
        let name_col = col + (part.len() - part.trim_start().len());
        if !is_identifier(name) {
            return Err(err(name_col, format!("invalid variable name `{name}`")));
        }
        if vars.iter().any(|v| v == name) {
            return Err(err(name_col, format!("duplicate variable `{name}`")));
        }
        vars.push(name.to_owned());
        col += part.len() + 1;
    }
    Ok(vars)
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    chars
        .next()
        .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Parses a polynomial expression over `ring`.
///
/// ```text
/// expr   := term (('+' | '-') term)*
/// term   := factor ('*' factor)*
/// factor := ('-' | '+') factor | rational | variable ('^' natural)? | '(' expr ')'
/// ```
///
/// Errors report line 1 and a 1-based column.
pub fn parse_poly_expr(text: &str, ring: &Ring) -> Result<Poly, ParseError> {
    let mut parser = ExprParser {
        src: text.as_bytes(),
        pos: 0,
        ring,
        depth: 0,
    };
    let poly = parser.expr()?;
    parser.skip_ws();
    if parser.pos < parser.src.len() {
        return Err(parser.error("unexpected input"));
    }
    Ok(poly)
}

const MAX_NESTING: usize = 128;

struct ExprParser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Ring,
    depth: usize,
}

impl ExprParser<'_> {
    fn error(&self, msg: impl Into<String>) -> ParseError {
        ParseError::new(1, self.pos + 1, msg)
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.term()?;
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            let sign = if op == b'+' { Rational::one() } else { -Rational::one() };
            acc = acc.add_scaled(&sign, None, &rhs, self.ring);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let start = self.pos;
            let rhs = self.factor()?;
            if !product_fits(&acc, &rhs) {
                self.pos = start;
                return Err(self.error("exponent overflow in product"));
            }
            acc = acc.mul(&rhs, self.ring).expect("operands share the ring");
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly, ParseError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                self.nested(|p| p.factor()).map(|f| f.neg())
            }
            Some(b'+') => {
                self.pos += 1;
                self.nested(|p| p.factor())
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.nested(|p| p.expr())?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => self.rational(),
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => self.power(),
            Some(_) => Err(self.error("expected a number, variable or `(`")),
            None => Err(self.error("unexpected end of expression")),
        }
    }

    fn nested(
        &mut self,
        f: impl FnOnce(&mut Self) -> Result<Poly, ParseError>,
    ) -> Result<Poly, ParseError> {
        if self.depth >= MAX_NESTING {
            return Err(self.error("expression nested too deeply"));
        }
        self.depth += 1;
        let out = f(self);
        self.depth -= 1;
        out
    }

    fn digits(&mut self) -> &[u8] {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        let digits = self.digits();
        if digits.is_empty() {
            return Err(self.error("expected an integer"));
        }
        BigInt::parse_bytes(digits, 10).ok_or_else(|| ParseError::new(1, start + 1, "bad integer"))
    }

    fn rational(&mut self) -> Result<Poly, ParseError> {
        let numer = self.integer()?;
        let mut value = Rational::from_integer(numer);
        if self.peek() == Some(b'/') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let denom = self.integer()?;
            if denom.is_zero() {
                self.pos = start;
                return Err(self.error("division by zero"));
            }
            value /= Rational::from_integer(denom);
        }
        Ok(Poly::constant(self.ring, value))
    }

    fn power(&mut self) -> Result<Poly, ParseError> {
        let start = self.pos;
        while self
            .src
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_alphanumeric() || *c == b'_')
        {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier");
        let Some(index) = self.ring.variable_index(name) else {
            self.pos = start;
            return Err(self.error(format!("undeclared variable `{name}`")));
        };
        let mut exp = 1u32;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let at = self.pos;
            let digits = self.digits();
            exp = std::str::from_utf8(digits)
                .ok()
                .and_then(|d| d.parse().ok())
                .ok_or_else(|| ParseError::new(1, at + 1, "malformed exponent"))?;
        }
        let mut exps = vec![0; self.ring.num_vars()];
        exps[index] = exp;
        Ok(Poly::from_terms(self.ring, [(Rational::one(), Monomial::new(exps))])
            .expect("monomial built for this ring"))
    }
}

fn max_exponents(p: &Poly) -> Vec<u64> {
    let n = p.terms().first().map_or(0, |t| t.mono.len());
    let mut out = vec![0u64; n];
    for t in p.terms() {
        for (o, &e) in out.iter_mut().zip(t.mono.exponents()) {
            *o = (*o).max(u64::from(e));
        }
    }
    out
}

fn product_fits(a: &Poly, b: &Poly) -> bool {
    max_exponents(a)
        .iter()
        .zip(max_exponents(b))
        .all(|(x, y)| x + y <= u64::from(u32::MAX))
}
