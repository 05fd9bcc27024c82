use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::coeff::{ExactCoeff, Rational};
use super::monomial::Monomial;
use crate::error::{Error, Result};

/// Sparse exact polynomial in `L_1..L_n` and a formal `pi`.
///
/// Variable indices in this API are zero-based: index `k` is `L_{k+1}`.
/// Zero coefficients are never stored, so structural equality is polynomial
/// equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    n_vars: usize,
    terms: BTreeMap<Monomial, ExactCoeff>,
}

impl Poly {
    pub fn zero(n_vars: usize) -> Self {
        Poly { n_vars, terms: BTreeMap::new() }
    }

    pub fn constant(n_vars: usize, c: ExactCoeff) -> Self {
        Self::term(Monomial::one(n_vars), c)
    }

    pub fn one(n_vars: usize) -> Self {
        Self::constant(n_vars, ExactCoeff::one())
    }

    pub fn term(m: Monomial, c: ExactCoeff) -> Self {
        let mut p = Poly::zero(m.n_vars());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// `L_{k+1}^e`.
    pub fn var_pow(n_vars: usize, k: usize, e: u32) -> Self {
        let mut m = Monomial::one(n_vars);
        m.l_exps[k] = e;
        Self::term(m, ExactCoeff::one())
    }

    pub fn pi_pow(n_vars: usize, e: u32) -> Self {
        Self::term(Monomial::new(vec![0; n_vars], e), ExactCoeff::one())
    }

    /// Builds a canonical polynomial, summing repeated monomials.
    pub fn from_terms<I>(n_vars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, ExactCoeff)>,
    {
        let mut p = Poly::zero(n_vars);
        for (m, c) in terms {
            if m.n_vars() != n_vars {
                return Err(Error::VarCountMismatch { left: n_vars, right: m.n_vars() });
            }
            p.add_term(m, &c);
        }
        Ok(p)
    }

    pub(crate) fn from_map_unchecked(n_vars: usize, terms: BTreeMap<Monomial, ExactCoeff>) -> Self {
        debug_assert!(terms.iter().all(|(m, c)| m.n_vars() == n_vars && !c.is_zero()));
        Poly { n_vars, terms }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl ExactSizeIterator<Item = (&Monomial, &ExactCoeff)> {
        self.terms.iter()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: &ExactCoeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_vars(&self, other: &Poly) -> Result<()> {
        if self.n_vars != other.n_vars {
            return Err(Error::VarCountMismatch { left: self.n_vars, right: other.n_vars });
        }
        Ok(())
    }

    fn check_index(&self, k: usize) -> Result<()> {
        if k >= self.n_vars {
            return Err(Error::VarIndexOutOfRange { index: k, n_vars: self.n_vars });
        }
        Ok(())
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check_vars(other)?;
        let mut out = self.clone();
        out.add_assign(other)?;
        Ok(out)
    }

    pub fn add_assign(&mut self, other: &Poly) -> Result<()> {
        self.check_vars(other)?;
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c);
        }
        Ok(())
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.check_vars(other)?;
        let mut out = self.clone();
        out.sub_assign(other)?;
        Ok(out)
    }

    pub fn sub_assign(&mut self, other: &Poly) -> Result<()> {
        self.check_vars(other)?;
        for (m, c) in &other.terms {
            self.add_term(m.clone(), &-c);
        }
        Ok(())
    }

    pub fn neg(&self) -> Poly {
        Poly { n_vars: self.n_vars, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check_vars(other)?;
        let mut out = Poly::zero(self.n_vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &ExactCoeff) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.n_vars);
        }
        Poly { n_vars: self.n_vars, terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn scale_rational(&self, r: &Rational) -> Poly {
        self.scale(&ExactCoeff::real(r.clone()))
    }

    /// Multiplies by `pi^e`.
    pub fn mul_pi(&self, e: u32) -> Poly {
        self.map_monomials(|m| {
            let mut m = m.clone();
            m.pi_exp += e;
            m
        })
    }

    // Only valid for injective monomial maps.
    fn map_monomials(&self, f: impl Fn(&Monomial) -> Monomial) -> Poly {
        Poly { n_vars: self.n_vars, terms: self.terms.iter().map(|(m, c)| (f(m), c.clone())).collect() }
    }

    /// Partial derivative in `L_{k+1}`.
    pub fn ddx(&self, k: usize) -> Result<Poly> {
        self.check_index(k)?;
        let mut out = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.l_exps[k];
            if e == 0 {
                continue;
            }
            let mut dm = m.clone();
            dm.l_exps[k] = e - 1;
            out.insert(dm, c.scale(&Rational::from_integer(e.into())));
        }
        Ok(Poly::from_map_unchecked(self.n_vars, out))
    }

    /// `int_0^{L_{k+1}} p dL_{k+1}`; each `L^j` becomes `L^{j+1}/(j+1)`.
    pub fn integrate_from_zero(&self, k: usize) -> Result<Poly> {
        self.check_index(k)?;
        let out = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut im = m.clone();
                im.l_exps[k] += 1;
                let factor = Rational::new(1.into(), im.l_exps[k].into());
                (im, c.scale(&factor))
            })
            .collect();
        Ok(Poly::from_map_unchecked(self.n_vars, out))
    }

    /// Exact division by `L_{k+1}`; every term must contain it.
    pub fn div_var(&self, k: usize) -> Result<Poly> {
        self.check_index(k)?;
        let mut out = BTreeMap::new();
        let mut remainder = Poly::zero(self.n_vars);
        for (m, c) in &self.terms {
            if m.l_exps[k] == 0 {
                remainder.add_term(m.clone(), c);
                continue;
            }
            let mut dm = m.clone();
            dm.l_exps[k] -= 1;
            out.insert(dm, c.clone());
        }
        if !remainder.is_zero() {
            return Err(Error::NonzeroRemainder { remainder });
        }
        Ok(Poly::from_map_unchecked(self.n_vars, out))
    }

    /// Substitutes `L_{k+1} = 2*pi*i`: `L^j` becomes `2^j i^j pi^j`.
    pub fn eval_two_pi_i(&self, k: usize) -> Result<Poly> {
        self.check_index(k)?;
        let mut out = Poly::zero(self.n_vars);
        for (m, c) in &self.terms {
            let j = m.l_exps[k];
            let mut em = m.clone();
            em.l_exps[k] = 0;
            em.pi_exp += j;
            let factor = ExactCoeff::i_pow(j).scale(&Rational::from_integer(num_bigint::BigInt::one() << j));
            out.add_term(em, &(c * &factor));
        }
        Ok(out)
    }

    /// Substitutes `L_{k+1} = 0`.
    pub fn eval_zero(&self, k: usize) -> Result<Poly> {
        self.check_index(k)?;
        let out = self.terms.iter().filter(|(m, _)| m.l_exps[k] == 0).map(|(m, c)| (m.clone(), c.clone())).collect();
        Ok(Poly::from_map_unchecked(self.n_vars, out))
    }

    /// The pi-free coefficient of `pi^e`.
    pub fn coeff_pi(&self, e: u32) -> Poly {
        let out = self
            .terms
            .iter()
            .filter(|(m, _)| m.pi_exp == e)
            .map(|(m, c)| (Monomial::new(m.l_exps.clone(), 0), c.clone()))
            .collect();
        Poly::from_map_unchecked(self.n_vars, out)
    }

    pub fn coeff_monomial(&self, m: &Monomial) -> ExactCoeff {
        self.terms.get(m).cloned().unwrap_or_else(ExactCoeff::zero)
    }

    /// Invariance under every adjacent transposition of variables.
    pub fn is_symmetric(&self) -> bool {
        for (m, c) in &self.terms {
            for i in 0..self.n_vars.saturating_sub(1) {
                if m.l_exps[i] == m.l_exps[i + 1] {
                    continue;
                }
                let mut swapped = m.clone();
                swapped.l_exps.swap(i, i + 1);
                if self.terms.get(&swapped) != Some(c) {
                    return false;
                }
            }
        }
        true
    }

    /// Extends the variable count; new variables appear in no term.
    pub fn embed(&self, new_n_vars: usize) -> Result<Poly> {
        if new_n_vars < self.n_vars {
            return Err(Error::VarCountMismatch { left: self.n_vars, right: new_n_vars });
        }
        let out = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut l = m.l_exps.clone();
                l.resize(new_n_vars, 0);
                (Monomial::new(l, m.pi_exp), c.clone())
            })
            .collect();
        Ok(Poly::from_map_unchecked(new_n_vars, out))
    }

    /// Removes variable `k`, which must not occur in any term.
    pub fn drop_var(&self, k: usize) -> Result<Poly> {
        self.check_index(k)?;
        if self.terms.keys().any(|m| m.l_exps[k] != 0) {
            return Err(Error::Precondition(format!("variable L{} still occurs", k + 1)));
        }
        let out = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut l = m.l_exps.clone();
                l.remove(k);
                (Monomial::new(l, m.pi_exp), c.clone())
            })
            .collect();
        Ok(Poly::from_map_unchecked(self.n_vars - 1, out))
    }

    /// Relabels variables: old variable `i` becomes new variable `mapping[i]`.
    /// Distinct old variables may map to the same new one (their exponents add).
    pub fn remap(&self, new_n_vars: usize, mapping: &[usize]) -> Result<Poly> {
        if mapping.len() != self.n_vars {
            return Err(Error::VarCountMismatch { left: self.n_vars, right: mapping.len() });
        }
        if let Some(&bad) = mapping.iter().find(|&&t| t >= new_n_vars) {
            return Err(Error::VarIndexOutOfRange { index: bad, n_vars: new_n_vars });
        }
        let mut out = Poly::zero(new_n_vars);
        for (m, c) in &self.terms {
            let mut l = vec![0; new_n_vars];
            for (i, &e) in m.l_exps.iter().enumerate() {
                l[mapping[i]] += e;
            }
            out.add_term(Monomial::new(l, m.pi_exp), c);
        }
        Ok(out)
    }

    pub fn is_real(&self) -> bool {
        self.terms.values().all(ExactCoeff::is_real)
    }

    pub fn max_pi_exp(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.pi_exp).max()
    }

    /// Divides by `2*pi*i`. Every term must carry at least one power of pi.
    pub fn div_two_pi_i(&self) -> Result<Poly> {
        // 1/(2i) = -i/2
        let factor = ExactCoeff::imag(Rational::new((-1).into(), 2.into()));
        let mut out = BTreeMap::new();
        for (m, c) in &self.terms {
            if m.pi_exp == 0 {
                return Err(Error::Precondition("term without a factor of pi".into()));
            }
            let mut dm = m.clone();
            dm.pi_exp -= 1;
            out.insert(dm, c * &factor);
        }
        Ok(Poly::from_map_unchecked(self.n_vars, out))
    }

    /// Floating-point value at the given lengths with `pi` as a float,
    /// returned as `(re, im)`.
    pub fn eval_f64(&self, lengths: &[f64]) -> (f64, f64) {
        use num_traits::ToPrimitive;
        assert_eq!(lengths.len(), self.n_vars, "one length per variable");
        let mut re = 0.0;
        let mut im = 0.0;
        for (m, c) in &self.terms {
            let mut x = std::f64::consts::PI.powi(m.pi_exp as i32);
            for (l, &e) in lengths.iter().zip(&m.l_exps) {
                x *= l.powi(e as i32);
            }
            re += x * c.re.to_f64().unwrap_or(f64::NAN);
            im += x * c.im.to_f64().unwrap_or(f64::NAN);
        }
        (re, im)
    }

    /// The only coefficient of a constant polynomial, if it is one.
    pub fn as_constant(&self) -> Option<ExactCoeff> {
        match self.terms.len() {
            0 => Some(ExactCoeff::zero()),
            1 => {
                let (m, c) = self.terms.iter().next()?;
                (m.total_degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &ExactCoeff)> {
        self.terms.iter().next()
    }
}
