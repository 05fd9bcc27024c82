//! Cone-point recursions: `V_{g,n+1}` at `L_{n+1} = 2*pi*i` and its first two
//! derivatives there are determined by `V_{g,n}`.
//!
//! * string: `V_{g,n+1}(L, 2*pi*i) = sum_k int_0^{L_k} L_k V_{g,n}(L) dL_k`
//! * dilaton: `dV_{g,n+1}/dL_{n+1}(L, 2*pi*i) = 2*pi*i (2g - 2 + n) V_{g,n}(L)`
//! * second derivative: `d^2V_{g,n+1}/dL_{n+1}^2(L, 2*pi*i) = E V_{g,n} - (4g - 4 + n) V_{g,n}`
//!   with `E` the Euler vector field.
//!
//! In genus 0 the string relation alone fixes `V_{0,n+1}`; in genus 1 it fixes
//! `V_{1,n+1}` up to `c * prod_j (L_j^2 + 4 pi^2)` and the dilaton relation
//! pins `c`.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::{half_dimension, int, rat, ExactCoeff, Monomial, Poly, Rational, VolumePoly};
use crate::symlift::stratified_lift;

/// `V_{0,3} = 1`.
pub fn seed_v03() -> VolumePoly {
    VolumePoly::new(0, 3, Poly::one(3)).expect("constant is a valid (0,3) volume")
}

/// `V_{1,1} = (L_1^2 + 4 pi^2) / 48`, half the orbifold volume.
pub fn seed_v11() -> VolumePoly {
    let p = root_factor(1, 0).scale_rational(&rat(1, 48));
    VolumePoly::new(1, 1, p).expect("seed is a valid (1,1) volume")
}

/// The seed for `(g, n)`, if it is one.
pub fn base_case(g: u32, n: usize) -> Option<VolumePoly> {
    match (g, n) {
        (0, 3) => Some(seed_v03()),
        (1, 1) => Some(seed_v11()),
        _ => None,
    }
}

/// `L_{k+1}^2 + 4 pi^2`.
fn root_factor(n_vars: usize, k: usize) -> Poly {
    let mut p = Poly::var_pow(n_vars, k, 2);
    p.add_term(Monomial::new(vec![0; n_vars], 2), &ExactCoeff::from_int(4));
    p
}

/// `sum_k int_0^{L_k} L_k V dL_k`.
pub fn string_rhs(v: &VolumePoly) -> Poly {
    let p = v.poly();
    let n = p.n_vars();
    let mut out = Poly::zero(n);
    for k in 0..n {
        let lk = Poly::var_pow(n, k, 1);
        let integrand = p.mul(&lk).expect("same variable count");
        out.add_assign(&integrand.integrate_from_zero(k).expect("index in range")).expect("same variable count");
    }
    out
}

/// The genus-1 ambiguity fixed by the dilaton relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenusOneConstant {
    pub c: Rational,
}

/// `V_{0,n+1}` from `V_{0,n}`.
pub fn genus0_lift(v: &VolumePoly) -> Result<VolumePoly> {
    let (g, n) = v.key();
    if g != 0 || n < 3 {
        return Err(Error::Precondition(format!("genus0_lift needs (0, n>=3), got ({g},{n})")));
    }
    let lift = stratified_lift(&string_rhs(v), half_dimension(0, n + 1))?;
    VolumePoly::new(0, n + 1, lift.candidate)
}

/// `V_{1,n+1}` from `V_{1,n}`, together with the constant that the string
/// relation leaves undetermined.
pub fn genus1_lift(v: &VolumePoly) -> Result<(VolumePoly, GenusOneConstant)> {
    let (g, n) = v.key();
    if g != 1 || n < 1 {
        return Err(Error::Precondition(format!("genus1_lift needs (1, n>=1), got ({g},{n})")));
    }
    let evaluation = string_rhs(v);
    let candidate = stratified_lift(&evaluation, half_dimension(1, n + 1))?.candidate;

    // Symmetric in all n+1 lengths, so the product runs over every variable.
    let product = (0..=n).try_fold(Poly::one(n + 1), |acc, k| acc.mul(&root_factor(n + 1, k)))?;

    let target = v.poly().embed(n + 1)?.mul_pi(1).scale(&ExactCoeff::imag(int(2 * n as i64)));
    let diff = target.sub(&candidate.ddx(n)?.eval_two_pi_i(n)?)?;
    let divisor = product.ddx(n)?.eval_two_pi_i(n)?;
    let (lead, lead_coeff) = divisor.leading_term().expect("product derivative is nonzero");
    let c = &diff.coeff_monomial(lead) * &lead_coeff.inv().expect("nonzero");
    if !c.is_real() || diff != divisor.scale(&c) {
        return Err(Error::NoDilatonConstant { diff });
    }
    let volume = candidate.add(&product.scale(&c))?;
    let volume = VolumePoly::new(1, n + 1, volume)?;
    Ok((volume, GenusOneConstant { c: c.re }))
}

/// Outcome of comparing both sides of a relation exactly.
#[derive(Clone, Debug)]
pub struct RelationCheck {
    pub relation: &'static str,
    /// `lhs - rhs`; zero iff the relation holds.
    pub difference: Poly,
}

impl RelationCheck {
    pub fn holds(&self) -> bool {
        self.difference.is_zero()
    }
}

fn check_pair(w: &VolumePoly, v: &VolumePoly) -> Result<()> {
    if w.genus() != v.genus() || w.boundaries() != v.boundaries() + 1 {
        return Err(Error::Precondition(format!("expected consecutive volumes, got {:?} and {:?}", w.key(), v.key())));
    }
    Ok(())
}

/// Value at `L_{n+1} = 2*pi*i` of `d^order W / dL_{n+1}^order`, in `n` variables.
fn derivative_at_root(w: &VolumePoly, order: usize) -> Result<Poly> {
    let last = w.boundaries() - 1;
    let mut p = w.poly().clone();
    for _ in 0..order {
        p = p.ddx(last)?;
    }
    p.eval_two_pi_i(last)?.drop_var(last)
}

/// `W(L, 2*pi*i) == string_rhs(V)`.
pub fn check_string(w: &VolumePoly, v: &VolumePoly) -> Result<RelationCheck> {
    check_pair(w, v)?;
    let difference = derivative_at_root(w, 0)?.sub(&string_rhs(v))?;
    Ok(RelationCheck { relation: "string", difference })
}

/// `dW/dL_{n+1}(L, 2*pi*i) == 2*pi*i (2g - 2 + n) V`, compared after dividing
/// the left side by `2*pi*i` so both sides are real.
pub fn check_dilaton(w: &VolumePoly, v: &VolumePoly) -> Result<RelationCheck> {
    check_pair(w, v)?;
    let lhs = derivative_at_root(w, 1)?.div_two_pi_i()?;
    let chi = 2 * v.genus() as i64 - 2 + v.boundaries() as i64;
    let difference = lhs.sub(&v.poly().scale_rational(&int(chi)))?;
    Ok(RelationCheck { relation: "dilaton", difference })
}

/// `sum_j L_j dV/dL_j`.
pub fn euler_field(p: &Poly) -> Poly {
    let n = p.n_vars();
    let mut out = Poly::zero(n);
    for k in 0..n {
        let term = p.ddx(k).and_then(|d| d.mul(&Poly::var_pow(n, k, 1))).expect("index in range");
        out.add_assign(&term).expect("same variable count");
    }
    out
}

/// `d^2W/dL_{n+1}^2(L, 2*pi*i) == E V - (4g - 4 + n) V`.
pub fn check_second_derivative(w: &VolumePoly, v: &VolumePoly) -> Result<RelationCheck> {
    check_pair(w, v)?;
    let lhs = derivative_at_root(w, 2)?;
    let weight = 4 * v.genus() as i64 - 4 + v.boundaries() as i64;
    let rhs = euler_field(v.poly()).sub(&v.poly().scale_rational(&int(weight)))?;
    Ok(RelationCheck { relation: "second", difference: lhs.sub(&rhs)? })
}

/// Exact quotient of `p` by `L_{k+1}^2 + 4 pi^2`.
fn divide_by_root_factor(p: &Poly, k: usize) -> Result<Poly> {
    let mut rem = p.clone();
    let mut quotient = Poly::zero(p.n_vars());
    let max_e = p.terms().map(|(m, _)| m.l_exps[k]).max().unwrap_or(0);
    let four = ExactCoeff::from_int(4);
    for e in (2..=max_e).rev() {
        let layer: Vec<(Monomial, ExactCoeff)> =
            rem.terms().filter(|(m, _)| m.l_exps[k] == e).map(|(m, c)| (m.clone(), c.clone())).collect();
        for (m, c) in layer {
            let mut q = m.clone();
            q.l_exps[k] -= 2;
            quotient.add_term(q.clone(), &c);
            rem.add_term(m, &-&c);
            q.pi_exp += 2;
            rem.add_term(q, &-(&c * &four));
        }
    }
    if !rem.is_zero() {
        return Err(Error::NonzeroRemainder { remainder: rem });
    }
    Ok(quotient)
}

/// `P_g` with `V_{g,1}(L) = (L^2 + 4 pi^2) P_g(L)`.
pub fn factor_p(v: &VolumePoly) -> Result<Poly> {
    if v.boundaries() != 1 || v.genus() < 1 {
        return Err(Error::Precondition(format!("factor_p needs (g>=1, 1), got {:?}", v.key())));
    }
    divide_by_root_factor(v.poly(), 0)
}

/// `V_{g,0} = P_g(2*pi*i) / (g - 1)` from `V_{g,1}`, for `g >= 2`.
pub fn closed_volume(v: &VolumePoly) -> Result<VolumePoly> {
    let g = v.genus();
    if g < 2 || v.boundaries() != 1 {
        return Err(Error::Precondition(format!("closed volume needs V_{{g,1}} with g >= 2, got {:?}", v.key())));
    }
    let p = factor_p(v)?;
    let value = p.eval_two_pi_i(0)?.drop_var(0)?.scale_rational(&rat(1, g as i64 - 1));
    let closed = VolumePoly::new(g, 0, value)?;
    let r = closed.constant_term();
    if closed.poly().len() != 1 || r.is_zero() || r.is_negative() {
        return Err(Error::InvalidVolume {
            g,
            n: 0,
            reason: format!("expected a positive multiple of pi^{}, got {}", 6 * g - 6, closed),
        });
    }
    Ok(closed)
}
