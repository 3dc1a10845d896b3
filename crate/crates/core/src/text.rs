//! Text format for polynomials and polynomial vectors.
//!
//! Grammar:
//!   term       := [sign] coeff ('*' var-power)* | [sign] var-power ('*' var-power)*
//!   var-power  := name ['^' positive-int]
//!   polynomial := term (('+'|'-') term)*
//!   vector     := '(' polynomial (',' polynomial)* ')'
//!
//! Canonical printing lists the terms of each component in strictly
//! decreasing admissible order, suppresses coefficient 1 except on constant
//! terms, and separates factors with '*'.

use std::sync::Arc;

use crate::error::Error;
use crate::euclid::EuclideanScalar;
use crate::polyvec::{AdmissibleOrder, Context, Monomial, MonomialVector, PolyVector};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src: src.as_bytes(), pos: 0, line: 1, col: 1 }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse { line: self.line, col: self.col, msg: msg.into() }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        if c == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t' | b'\r' | b'\n')) {
            self.bump();
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), Error> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.bump();
            Ok(())
        } else {
            Err(self.err(format!("expected `{}`", c as char)))
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.peek().is_none()
    }

    /// An optional leading sign; returns -1, +1 or (if absent) +1.
    fn sign(&mut self) -> i32 {
        self.skip_ws();
        match self.peek() {
            Some(b'-') => {
                self.bump();
                -1
            }
            Some(b'+') => {
                self.bump();
                1
            }
            _ => 1,
        }
    }

    fn number_token(&mut self) -> Result<String, Error> {
        let mut s = String::new();
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            s.push(self.bump().unwrap() as char);
        }
        if s.is_empty() {
            return Err(self.err("expected a digit"));
        }
        // rational literal p/q; only consumed when a digit follows the slash
        if self.peek() == Some(b'/') && matches!(self.src.get(self.pos + 1), Some(b'0'..=b'9')) {
            s.push(self.bump().unwrap() as char);
            while matches!(self.peek(), Some(b'0'..=b'9')) {
                s.push(self.bump().unwrap() as char);
            }
        }
        Ok(s)
    }

    fn ident(&mut self) -> Result<String, Error> {
        let mut s = String::new();
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {}
            _ => return Err(self.err("expected a variable name")),
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_') {
            s.push(self.bump().unwrap() as char);
        }
        Ok(s)
    }

    /// name ['^' positive-int]; adds the exponent into `exps`.
    fn var_power(&mut self, vars: &[String], exps: &mut [u32]) -> Result<(), Error> {
        let (line, col) = (self.line, self.col);
        let name = self.ident()?;
        let idx = vars.iter().position(|v| *v == name).ok_or(Error::Parse {
            line,
            col,
            msg: format!("unknown variable `{name}`"),
        })?;
        let mut e: u32 = 1;
        if self.peek() == Some(b'^') {
            self.bump();
            self.skip_ws();
            let tok = self.number_token()?;
            e = tok
                .parse::<u32>()
                .map_err(|_| self.err(format!("invalid exponent `{tok}`")))?;
            if e == 0 {
                return Err(self.err("exponent must be positive"));
            }
        }
        exps[idx] = exps[idx]
            .checked_add(e)
            .ok_or_else(|| self.err("exponent overflow"))?;
        Ok(())
    }

    /// One term: optional sign, then '*'-separated factors, at most one
    /// coefficient literal which must come first.
    fn term<R: EuclideanScalar>(&mut self, vars: &[String]) -> Result<(R, Monomial), Error> {
        let sign = self.sign();
        self.skip_ws();
        let mut coeff = R::one();
        let mut exps = vec![0u32; vars.len()];
        match self.peek() {
            Some(b'0'..=b'9') => {
                let (line, col) = (self.line, self.col);
                let tok = self.number_token()?;
                coeff = R::parse_literal(&tok)
                    .map_err(|msg| Error::Parse { line, col, msg })?;
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                self.var_power(vars, &mut exps)?;
            }
            _ => return Err(self.err("expected a term")),
        }
        loop {
            self.skip_ws();
            if self.peek() != Some(b'*') {
                break;
            }
            self.bump();
            self.skip_ws();
            self.var_power(vars, &mut exps)?;
        }
        if sign < 0 {
            coeff = coeff.ring_neg();
        }
        Ok((coeff, Monomial { exps }))
    }

    /// A polynomial into component `comp` of the output.
    fn poly<R: EuclideanScalar>(
        &mut self,
        ctx: &Arc<Context>,
        comp: usize,
        out: &mut Vec<(MonomialVector, R)>,
    ) -> Result<(), Error> {
        let (c, m) = self.term::<R>(ctx.vars())?;
        out.push((MonomialVector::new(m.exps, comp), c));
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') | Some(b'-') => {
                    let negate = self.bump() == Some(b'-');
                    let (c, m) = self.term::<R>(ctx.vars())?;
                    let c = if negate { c.ring_neg() } else { c };
                    out.push((MonomialVector::new(m.exps, comp), c));
                }
                _ => return Ok(()),
            }
        }
    }
}

/// Parses a polynomial vector. A bare polynomial (no parentheses) is
/// accepted when the context has a single component.
pub fn parse_vector<R: EuclideanScalar>(
    ctx: &Arc<Context>,
    s: &str,
) -> Result<PolyVector<R>, Error> {
    let mut p = Parser::new(s);
    let mut terms: Vec<(MonomialVector, R)> = Vec::new();
    p.skip_ws();
    if p.peek() == Some(b'(') {
        p.bump();
        for comp in 1..=ctx.ncomps() {
            p.poly::<R>(ctx, comp, &mut terms)?;
            if comp < ctx.ncomps() {
                p.expect(b',')?;
            }
        }
        p.expect(b')')?;
    } else {
        if ctx.ncomps() != 1 {
            return Err(p.err(format!(
                "expected `(` starting a vector with {} components",
                ctx.ncomps()
            )));
        }
        p.poly::<R>(ctx, 1, &mut terms)?;
    }
    if !p.at_end() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(PolyVector::from_terms(ctx.clone(), terms))
}

/// Parses a scalar polynomial; the context must have one component.
pub fn parse_poly<R: EuclideanScalar>(
    ctx: &Arc<Context>,
    s: &str,
) -> Result<PolyVector<R>, Error> {
    assert_eq!(ctx.ncomps(), 1, "parse_poly needs a one-component context");
    parse_vector(ctx, s)
}

fn push_term<R: EuclideanScalar>(
    out: &mut String,
    first: bool,
    coeff: &R,
    mono: &Monomial,
    vars: &[String],
) {
    let (negative, mag) = coeff.sign_split();
    if first {
        if negative {
            out.push('-');
        }
    } else if negative {
        out.push_str(" - ");
    } else {
        out.push_str(" + ");
    }
    let mut factors: Vec<String> = Vec::new();
    if !mag.is_one() || mono.is_one() {
        factors.push(mag.literal());
    }
    for (v, &e) in vars.iter().zip(&mono.exps) {
        match e {
            0 => {}
            1 => factors.push(v.clone()),
            _ => factors.push(format!("{v}^{e}")),
        }
    }
    out.push_str(&factors.join("*"));
}

/// Prints one component of a vector in decreasing admissible order.
fn format_component<R: EuclideanScalar>(
    f: &PolyVector<R>,
    comp: usize,
    ord: &AdmissibleOrder,
) -> String {
    let vars = f.ctx().vars();
    let mut terms: Vec<(MonomialVector, R)> = f
        .terms()
        .filter(|(m, _)| m.comp == comp)
        .map(|(m, c)| (m.clone(), c.clone()))
        .collect();
    terms.sort_by(|(m1, _), (m2, _)| ord.compare(m2, m1));
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in terms.iter().enumerate() {
        push_term(&mut out, i == 0, c, &Monomial { exps: m.exps.clone() }, vars);
    }
    out
}

/// Canonical text form of a polynomial vector. One-component vectors are
/// printed as bare polynomials, others as parenthesized tuples.
pub fn format_vector<R: EuclideanScalar>(f: &PolyVector<R>, ord: &AdmissibleOrder) -> String {
    let k = f.ctx().ncomps();
    if k == 1 {
        format_component(f, 1, ord)
    } else {
        let comps: Vec<String> = (1..=k).map(|i| format_component(f, i, ord)).collect();
        format!("({})", comps.join(", "))
    }
}
