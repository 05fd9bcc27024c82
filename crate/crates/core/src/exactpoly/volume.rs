use std::fmt;

use super::coeff::Rational;
use super::poly::Poly;
use crate::error::{Error, Result};

/// `(g, n)` with `2g - 2 + n > 0`.
pub fn is_stable(g: u32, n: usize) -> bool {
    2 * g as i64 - 2 + n as i64 > 0
}

/// Half of the real dimension of the moduli space, `3g - 3 + n`.
pub fn half_dimension(g: u32, n: usize) -> u32 {
    (3 * g as i64 - 3 + n as i64).max(0) as u32
}

/// A volume polynomial `V_{g,n}(L)` that has passed every structural check:
/// even L-exponents, symmetry in all boundary lengths, homogeneity of total
/// degree `6g - 6 + 2n` in `(L, pi)`, and real coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VolumePoly {
    g: u32,
    n: usize,
    poly: Poly,
}

impl VolumePoly {
    pub fn new(g: u32, n: usize, poly: Poly) -> Result<Self> {
        if !is_stable(g, n) {
            return Err(Error::Unstable { g, n });
        }
        let invalid = |reason: String| Error::InvalidVolume { g, n, reason };
        if poly.n_vars() != n {
            return Err(invalid(format!("expected {n} variables, found {}", poly.n_vars())));
        }
        let degree = 2 * half_dimension(g, n);
        for (m, c) in poly.terms() {
            if m.l_exps.iter().any(|e| e % 2 != 0) {
                return Err(invalid("odd L-exponent".into()));
            }
            if m.total_degree() != degree {
                return Err(invalid(format!("term of degree {} (expected {degree})", m.total_degree())));
            }
            if !c.is_real() {
                return Err(invalid("non-real coefficient".into()));
            }
        }
        if !poly.is_symmetric() {
            return Err(invalid("not symmetric".into()));
        }
        Ok(VolumePoly { g, n, poly })
    }

    pub fn genus(&self) -> u32 {
        self.g
    }

    pub fn boundaries(&self) -> usize {
        self.n
    }

    pub fn key(&self) -> (u32, usize) {
        (self.g, self.n)
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn into_poly(self) -> Poly {
        self.poly
    }

    /// Total degree in `(L, pi)`.
    pub fn degree(&self) -> u32 {
        2 * half_dimension(self.g, self.n)
    }

    /// Value with every `L_k = 0`, as the rational multiple of `pi^{degree}`.
    pub fn constant_term(&self) -> Rational {
        let m = super::Monomial::new(vec![0; self.n], self.degree());
        self.poly.coeff_monomial(&m).re
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        use num_traits::Signed;
        self.poly.terms().all(|(_, c)| !c.re.is_negative())
    }
}

impl fmt::Display for VolumePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}
