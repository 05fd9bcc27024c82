//! Plain-text and LaTeX rendering of polynomials in canonical term order.
//!
//! Plain text: `(1/48)*L1^2 + (1/12)*pi^2`. Rationals print as `p/q`,
//! parenthesized when multiplied into a monomial.

use std::fmt::{self, Write};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::coeff::ExactCoeff;
use super::monomial::Monomial;
use super::poly::Poly;

fn monomial_text(m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (k, &e) in m.l_exps.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(format!("L{}", k + 1)),
            _ => parts.push(format!("L{}^{}", k + 1, e)),
        }
    }
    match m.pi_exp {
        0 => {}
        1 => parts.push("pi".into()),
        e => parts.push(format!("pi^{e}")),
    }
    parts.join("*")
}

fn monomial_latex(m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (k, &e) in m.l_exps.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(format!("L_{{{}}}", k + 1)),
            _ => parts.push(format!("L_{{{}}}^{{{}}}", k + 1, e)),
        }
    }
    match m.pi_exp {
        0 => {}
        1 => parts.push("\\pi".into()),
        e => parts.push(format!("\\pi^{{{e}}}")),
    }
    parts.join(" ")
}

/// Splits a coefficient into a sign and a magnitude rendering. Complex
/// coefficients keep their own signs inside parentheses.
fn coeff_parts(c: &ExactCoeff) -> (bool, Option<BigRational>) {
    if c.is_real() {
        (c.re.is_negative(), Some(c.re.abs()))
    } else {
        (false, None)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let (negative, magnitude) = coeff_parts(c);
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mono = monomial_text(m);
            let coeff = match magnitude {
                Some(r) if r.is_one() && !mono.is_empty() => String::new(),
                Some(r) if r.is_integer() => r.to_string(),
                Some(r) if mono.is_empty() => r.to_string(),
                Some(r) => format!("({r})"),
                None => format!("({c})"),
            };
            match (coeff.is_empty(), mono.is_empty()) {
                (true, _) => f.write_str(&mono)?,
                (false, true) => f.write_str(&coeff)?,
                (false, false) => write!(f, "{coeff}*{mono}")?,
            }
        }
        Ok(())
    }
}

fn rational_latex(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

/// LaTeX rendering, e.g. `\frac{1}{48} L_{1}^{2} + \frac{1}{12} \pi^{2}`.
pub fn to_latex(p: &Poly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms().enumerate() {
        let (negative, magnitude) = coeff_parts(c);
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mono = monomial_latex(m);
        let coeff = match magnitude {
            Some(r) if r.is_one() && !mono.is_empty() => String::new(),
            Some(r) => rational_latex(&r),
            None => {
                let sign = if c.im.is_negative() { "-" } else { "+" };
                let re = if c.re.is_zero() { String::new() } else { format!("{} {sign} ", rational_latex(&c.re)) };
                let lead = if c.re.is_zero() && c.im.is_negative() { "-" } else { "" };
                format!("\\left({re}{lead}{} i\\right)", rational_latex(&c.im.abs()))
            }
        };
        let _ = match (coeff.is_empty(), mono.is_empty()) {
            (true, _) => write!(out, "{mono}"),
            (false, true) => write!(out, "{coeff}"),
            (false, false) => write!(out, "{coeff} {mono}"),
        };
    }
    out
}
