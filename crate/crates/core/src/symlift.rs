//! Symmetric lifting from `n` to `n + 1` variables, and reconstruction of a
//! symmetric polynomial from its value at `L_{n+1} = 2*pi*i`.
//!
//! [`sym_lift_zero`] extends a symmetric `f(L_1..L_n)` to a symmetric
//! `S(L_1..L_{n+1})` with `S(.., 0) = f` and no monomial containing every
//! variable. It is the inclusion-exclusion
//!
//! ```text
//! S = f + sum_{eps in {0,1}^n} (-1)^{|eps|} sum_{i : eps_j = 0 for j > i} f|_{eps zeroed}(L_i -> L_{n+1})
//! ```
//!
//! evaluated term by term. For a term `t` with support `A`, the alternating
//! sum over `eps` restricted to `{1..i} \ A` vanishes unless `{1..i}` lies in
//! `A`, so `t` contributes `t(L_i -> L_{n+1})` exactly for those `i`. The
//! literal `2^n` enumeration is kept in [`sym_lift_zero_enumerated`].

use crate::error::{Error, Result};
use crate::exactpoly::{Monomial, Poly};

fn check_lift_input(f: &Poly) -> Result<()> {
    if f.terms().any(|(m, _)| m.l_exps.iter().any(|e| e % 2 != 0)) {
        return Err(Error::OddExponent);
    }
    if !f.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    Ok(())
}

/// Symmetric extension of `f` to one more variable, vanishing on every
/// monomial that involves all `n + 1` variables.
pub fn sym_lift_zero(f: &Poly) -> Result<Poly> {
    check_lift_input(f)?;
    let n = f.n_vars();
    let mut out = f.embed(n + 1)?;
    for (m, c) in f.terms() {
        for i in 0..n {
            if m.l_exps[i] == 0 {
                break;
            }
            let mut l = m.l_exps.clone();
            l.push(l[i]);
            l[i] = 0;
            out.add_term(Monomial::new(l, m.pi_exp), c);
        }
    }
    Ok(out)
}

/// The inclusion-exclusion lift enumerated over all `eps in {0,1}^n`.
/// Exponential in `n`; agrees with [`sym_lift_zero`].
pub fn sym_lift_zero_enumerated(f: &Poly) -> Result<Poly> {
    check_lift_input(f)?;
    let n = f.n_vars();
    if n >= 24 {
        return Err(Error::Precondition("enumerated lift is limited to fewer than 24 variables".into()));
    }
    let lifted = f.embed(n + 1)?;
    let mut out = lifted.clone();
    for eps in 0u32..(1 << n) {
        let zeroed = (0..n).filter(|j| eps >> j & 1 == 1).try_fold(lifted.clone(), |p, j| p.eval_zero(j))?;
        let mut moved = Poly::zero(n + 1);
        for i in 0..n {
            // prod_{j > i} (1 - eps_j)
            if eps >> (i + 1) != 0 {
                continue;
            }
            let mut mapping: Vec<usize> = (0..=n).collect();
            mapping[i] = n;
            moved.add_assign(&zeroed.remap(n + 1, &mapping)?)?;
        }
        if eps.count_ones() % 2 == 0 {
            out.add_assign(&moved)?;
        } else {
            out.sub_assign(&moved)?;
        }
    }
    Ok(out)
}

/// One pi-stratum `pi^{2k} * w` of a reconstructed polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stratum {
    pub k: u32,
    /// Pi-free, homogeneous of L-degree `2(D - k)`.
    pub w: Poly,
}

/// Result of [`stratified_lift`].
#[derive(Clone, Debug)]
pub struct Lift {
    pub strata: Vec<Stratum>,
    /// `sum_k pi^{2k} w_k`, in `n + 1` variables.
    pub candidate: Poly,
}

/// Reconstructs a symmetric, even polynomial `V` in `n + 1` variables of
/// total degree `2 * half_degree` from `evaluation = V(L_1..L_n, 2*pi*i)`.
///
/// Strata are peeled off in increasing powers of pi: the pi-free part of what
/// remains is the next stratum restricted to `L_{n+1} = 0`, which is lifted
/// and its evaluation subtracted. Fails if anything is left over.
pub fn stratified_lift(evaluation: &Poly, half_degree: u32) -> Result<Lift> {
    let n = evaluation.n_vars();
    let mut residual = evaluation.embed(n + 1)?;
    let mut candidate = Poly::zero(n + 1);
    let mut strata = Vec::with_capacity(half_degree as usize + 1);
    for k in 0..=half_degree {
        let expected = 2 * (half_degree - k);
        let restricted = residual.coeff_pi(2 * k);
        if restricted.terms().any(|(m, _)| m.l_degree() != expected) {
            return Err(Error::StratumNotHomogeneous { k, expected });
        }
        let w = sym_lift_zero(&restricted.drop_var(n)?)?;
        let term = w.mul_pi(2 * k);
        residual.sub_assign(&term.eval_two_pi_i(n)?)?;
        candidate.add_assign(&term)?;
        strata.push(Stratum { k, w });
    }
    if !residual.is_zero() {
        return Err(Error::NonzeroResidual { residual: residual.drop_var(n)? });
    }
    Ok(Lift { strata, candidate })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{int, rat, ExactCoeff};

    fn sum_squares(n: usize) -> Poly {
        (0..n).fold(Poly::zero(n), |acc, k| acc.add(&Poly::var_pow(n, k, 2)).unwrap())
    }

    #[test]
    fn constants_lift_to_constants() {
        assert_eq!(sym_lift_zero(&Poly::one(3)).unwrap(), Poly::one(4));
    }

    #[test]
    fn half_sum_of_squares() {
        let f = sum_squares(3).scale_rational(&rat(1, 2));
        let s = sym_lift_zero(&f).unwrap();
        assert_eq!(s, sum_squares(4).scale_rational(&rat(1, 2)));
        assert_eq!(sym_lift_zero_enumerated(&f).unwrap(), s);
    }

    #[test]
    fn full_product_lift() {
        for n in 1..=4 {
            let f = (0..n).fold(Poly::one(n), |acc, k| acc.mul(&Poly::var_pow(n, k, 2)).unwrap());
            let s = sym_lift_zero(&f).unwrap();
            assert!(s.is_symmetric());
            assert_eq!(s.eval_zero(n).unwrap(), f.embed(n + 1).unwrap());
            let all = Monomial::new(vec![2; n + 1], 0);
            assert!(s.terms().all(|(m, _)| m.l_exps.contains(&0)));
            assert_eq!(s.coeff_monomial(&all), ExactCoeff::default());
            assert_eq!(sym_lift_zero_enumerated(&f).unwrap(), s);
        }
    }

    #[test]
    fn rejects_bad_input() {
        let odd = Poly::var_pow(2, 0, 1).add(&Poly::var_pow(2, 1, 1)).unwrap();
        assert!(matches!(sym_lift_zero(&odd), Err(Error::OddExponent)));
        let asym = Poly::var_pow(2, 0, 2);
        assert!(matches!(sym_lift_zero(&asym), Err(Error::NotSymmetric)));
    }

    #[test]
    fn stratified_lift_of_string_rhs() {
        let e = sum_squares(3).scale_rational(&rat(1, 2));
        let lift = stratified_lift(&e, 1).unwrap();
        let expected =
            sum_squares(4).scale_rational(&rat(1, 2)).add(&Poly::pi_pow(4, 2).scale_rational(&int(2))).unwrap();
        assert_eq!(lift.candidate, expected);
        assert_eq!(lift.strata.len(), 2);
        assert_eq!(lift.strata[1].w, Poly::constant(4, ExactCoeff::from_int(2)));
        assert_eq!(lift.candidate.eval_two_pi_i(3).unwrap().drop_var(3).unwrap(), e);
    }

    #[test]
    fn zero_lifts_to_zero() {
        for d in 0..4 {
            assert!(stratified_lift(&Poly::zero(3), d).unwrap().candidate.is_zero());
        }
    }

    #[test]
    fn inconsistent_evaluations_are_rejected() {
        let odd_pi = Poly::pi_pow(2, 1);
        assert!(matches!(stratified_lift(&odd_pi, 1), Err(Error::NonzeroResidual { .. })));
        let wrong_degree = sum_squares(2);
        assert!(matches!(stratified_lift(&wrong_degree, 2), Err(Error::StratumNotHomogeneous { .. })));
    }
}
