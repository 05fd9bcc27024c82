//! psi/kappa_1 intersection numbers read off volume coefficients.
//!
//! The coefficient `C` of `L^{2 alpha} pi^{2m}` in `V_{g,n}` satisfies
//!
//! ```text
//! int psi^alpha kappa_1^m = C * 2^{|alpha|} alpha! m! / 2^m
//! ```
//!
//! using `omega = 2 pi^2 kappa_1`, with `m = 3g - 3 + n - |alpha|`. The string
//! and dilaton identities below are then checked on those numbers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::engine::VolumeSource;
use crate::error::{Error, Result};
use crate::exactpoly::{half_dimension, is_stable, Monomial, Rational, VolumePoly};

/// `int_{M_{g,n}} psi_1^{alpha_1} .. psi_n^{alpha_n} kappa_1^m`.
///
/// Negative exponents are allowed and make the number zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntersectionIndex {
    pub g: u32,
    pub alpha: Vec<i64>,
    pub m: i64,
}

impl IntersectionIndex {
    pub fn new(g: u32, alpha: Vec<i64>, m: i64) -> Self {
        IntersectionIndex { g, alpha, m }
    }

    pub fn n(&self) -> usize {
        self.alpha.len()
    }

    /// Whether the number can be nonzero: nonnegative exponents summing to
    /// the dimension.
    pub fn is_balanced(&self) -> bool {
        let dim = 3 * self.g as i64 - 3 + self.n() as i64;
        self.m >= 0 && self.alpha.iter().all(|&a| a >= 0) && self.alpha.iter().sum::<i64>() + self.m == dim
    }
}

fn factorial(n: i64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Reads the intersection number from an already computed `V_{g,n}`.
pub fn psi_kappa_from(v: &VolumePoly, idx: &IntersectionIndex) -> Result<Rational> {
    if v.key() != (idx.g, idx.n()) {
        return Err(Error::Precondition(format!("index for ({},{}) applied to V{:?}", idx.g, idx.n(), v.key())));
    }
    if !idx.is_balanced() {
        return Ok(Rational::zero());
    }
    let l_exps = idx.alpha.iter().map(|&a| 2 * a as u32).collect();
    let c = v.poly().coeff_monomial(&Monomial::new(l_exps, 2 * idx.m as u32)).re;
    let alpha_sum: i64 = idx.alpha.iter().sum();
    let alpha_fact = idx.alpha.iter().fold(BigInt::one(), |acc, &a| acc * factorial(a));
    let scale = Rational::new(
        (BigInt::one() << alpha_sum as usize) * alpha_fact * factorial(idx.m),
        BigInt::one() << idx.m as usize,
    );
    Ok(c * scale)
}

/// Intersection number, computing `V_{g,n}` on demand.
pub fn psi_kappa(src: &dyn VolumeSource, idx: &IntersectionIndex) -> Result<Rational> {
    let n = idx.n();
    if !is_stable(idx.g, n) {
        return Err(Error::Unstable { g: idx.g, n });
    }
    if !idx.is_balanced() {
        return Ok(Rational::zero());
    }
    psi_kappa_from(&*src.volume(idx.g, n)?, idx)
}

/// Genus-0 psi numbers in closed form: the multinomial `(n-3)! / alpha!`.
pub fn genus0_psi(alpha: &[i64]) -> Result<Rational> {
    let n = alpha.len() as i64;
    let sum: i64 = alpha.iter().sum();
    if n < 3 || sum != n - 3 || alpha.iter().any(|&a| a < 0) {
        return Err(Error::Precondition(format!("genus-0 psi exponents {alpha:?} do not sum to n-3")));
    }
    let denom = alpha.iter().fold(BigInt::one(), |acc, &a| acc * factorial(a));
    Ok(Rational::new(factorial(n - 3), denom))
}

/// Both sides of an identity between intersection numbers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub lhs: Rational,
    pub rhs: Rational,
    /// Exponents off the dimension: both sides are zero by degree alone.
    pub vacuous: bool,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn binomial(m: i64, j: i64) -> Rational {
    Rational::new(factorial(m), factorial(j) * factorial(m - j))
}

fn signed(j: i64) -> Rational {
    if j % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `sum_j (-1)^j C(m,j) int_{M_{g,n+1}} psi^alpha psi_{n+1}^j kappa_1^{m-j}
///  = sum_k int_{M_{g,n}} psi^{alpha - e_k} kappa_1^m`.
pub fn check_string2(src: &dyn VolumeSource, g: u32, alpha: &[i64], m: i64) -> Result<IdentityCheck> {
    let n = alpha.len();
    let dim = half_dimension(g, n + 1) as i64;
    if m < 0 || alpha.iter().any(|&a| a < 0) || alpha.iter().sum::<i64>() + m != dim {
        return Ok(IdentityCheck { lhs: Rational::zero(), rhs: Rational::zero(), vacuous: true });
    }
    let mut lhs = Rational::zero();
    for j in 0..=m {
        let mut ext = alpha.to_vec();
        ext.push(j);
        let value = psi_kappa(src, &IntersectionIndex::new(g, ext, m - j))?;
        lhs += signed(j) * binomial(m, j) * value;
    }
    let mut rhs = Rational::zero();
    for k in 0..n {
        let mut lowered = alpha.to_vec();
        lowered[k] -= 1;
        rhs += psi_kappa(src, &IntersectionIndex::new(g, lowered, m))?;
    }
    Ok(IdentityCheck { lhs, rhs, vacuous: false })
}

/// `sum_j (-1)^j C(m,j) int_{M_{g,n+1}} psi^alpha psi_{n+1}^{j+1} kappa_1^{m-j}
///  = (2g - 2 + n) int_{M_{g,n}} psi^alpha kappa_1^m`.
pub fn check_dilaton2(src: &dyn VolumeSource, g: u32, alpha: &[i64], m: i64) -> Result<IdentityCheck> {
    let n = alpha.len();
    let dim = half_dimension(g, n) as i64;
    if !is_stable(g, n) || m < 0 || alpha.iter().any(|&a| a < 0) || alpha.iter().sum::<i64>() + m != dim {
        return Ok(IdentityCheck { lhs: Rational::zero(), rhs: Rational::zero(), vacuous: true });
    }
    let mut lhs = Rational::zero();
    for j in 0..=m {
        let mut ext = alpha.to_vec();
        ext.push(j + 1);
        let value = psi_kappa(src, &IntersectionIndex::new(g, ext, m - j))?;
        lhs += signed(j) * binomial(m, j) * value;
    }
    let chi = Rational::from_integer(BigInt::from(2 * g as i64 - 2 + n as i64));
    let rhs = chi * psi_kappa(src, &IntersectionIndex::new(g, alpha.to_vec(), m))?;
    Ok(IdentityCheck { lhs, rhs, vacuous: false })
}

/// Every `(alpha, m)` with `alpha` of length `n`, all entries nonnegative and
/// `|alpha| + m = total`.
pub fn admissible_exponents(n: usize, total: u32) -> Vec<(Vec<i64>, i64)> {
    fn compositions(n: usize, max: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        let used: i64 = prefix.iter().sum();
        for a in 0..=(max - used) {
            prefix.push(a);
            compositions(n, max, prefix, out);
            prefix.pop();
        }
    }
    let mut alphas = Vec::new();
    compositions(n, total as i64, &mut Vec::new(), &mut alphas);
    alphas
        .into_iter()
        .map(|a| {
            let m = total as i64 - a.iter().sum::<i64>();
            (a, m)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{int, rat};
    use crate::Engine;

    #[test]
    fn seed_numbers() {
        let engine = Engine::in_memory();
        assert_eq!(psi_kappa(&engine, &IntersectionIndex::new(1, vec![1], 0)).unwrap(), rat(1, 24));
        assert_eq!(psi_kappa(&engine, &IntersectionIndex::new(1, vec![0], 1)).unwrap(), rat(1, 24));
        assert_eq!(psi_kappa(&engine, &IntersectionIndex::new(0, vec![0, 0, 0], 0)).unwrap(), int(1));
        assert_eq!(psi_kappa(&engine, &IntersectionIndex::new(0, vec![1, 1, 0, 0, 0], 0)).unwrap(), int(2));
    }

    #[test]
    fn off_dimension_and_negative_are_zero() {
        let engine = Engine::in_memory();
        assert!(psi_kappa(&engine, &IntersectionIndex::new(1, vec![2], 0)).unwrap().is_zero());
        assert!(psi_kappa(&engine, &IntersectionIndex::new(0, vec![-1, 1, 1, 0], 0)).unwrap().is_zero());
        assert!(matches!(psi_kappa(&engine, &IntersectionIndex::new(0, vec![0, 0], 0)), Err(Error::Unstable { .. })));
    }

    #[test]
    fn genus0_closed_form() {
        assert_eq!(genus0_psi(&[2, 0, 0, 0, 0]).unwrap(), int(1));
        assert_eq!(genus0_psi(&[0, 0, 0]).unwrap(), int(1));
        assert_eq!(genus0_psi(&[1, 1, 1, 0, 0, 0]).unwrap(), int(6));
        assert!(genus0_psi(&[1, 0, 0]).is_err());
    }

    #[test]
    fn classical_string_and_dilaton() {
        let engine = Engine::in_memory();
        let s = check_string2(&engine, 0, &[1, 0, 0], 0).unwrap();
        assert!(s.holds() && !s.vacuous);
        assert_eq!(s.lhs, int(1));
        assert!(check_string2(&engine, 1, &[0], 1).unwrap().holds());
        let d = check_dilaton2(&engine, 1, &[1], 0).unwrap();
        assert!(d.holds() && !d.vacuous);
        assert_eq!(d.rhs, rat(1, 24));
        assert!(check_dilaton2(&engine, 1, &[0], 0).unwrap().vacuous);
        assert!(check_dilaton2(&engine, 1, &[0], 1).unwrap().holds());
        let d = check_dilaton2(&engine, 0, &[1, 0, 0, 0], 0).unwrap();
        assert_eq!((d.lhs.clone(), d.rhs.clone()), (int(2), int(2)));
        assert!(check_string2(&engine, 1, &[5], 0).unwrap().vacuous);
        assert!(check_dilaton2(&engine, 0, &[3, 0, 0, 0], 0).unwrap().vacuous);
    }

    #[test]
    fn exponent_enumeration() {
        let all = admissible_exponents(2, 2);
        assert_eq!(all.len(), 6);
        assert!(all.iter().all(|(a, m)| a.iter().sum::<i64>() + m == 2));
    }
}
