#![allow(dead_code)]

use num_traits::Zero;
use proptest::prelude::*;
use wpvol_core::exactpoly::{rat, ExactCoeff, Monomial, Poly};
use wpvol_oracle::lift::{orbit, partitions, Terms};

/// Real polynomial in oracle form.
pub fn to_terms(p: &Poly) -> Terms {
    p.terms()
        .map(|(m, c)| {
            assert!(c.im.is_zero(), "complex coefficient {c}");
            ((m.l_exps.clone(), m.pi_exp), c.re.clone())
        })
        .collect()
}

pub fn from_terms(n: usize, t: &Terms) -> Poly {
    Poly::from_terms(n, t.iter().map(|((l, pi), c)| (Monomial::new(l.clone(), *pi), ExactCoeff::real(c.clone()))))
        .unwrap()
}

/// Symmetric, even, homogeneous of half-degree `d` in `(L, pi)` with `n`
/// lengths, from one coefficient per basis element `m_lambda pi^{2k}`.
pub fn symmetric_from_coeffs(n: usize, d: u32, coeffs: &[(i64, i64)]) -> Poly {
    let mut terms = Vec::new();
    let mut next = coeffs.iter().cycle();
    for k in 0..=d {
        for lambda in partitions(d - k, n) {
            let (p, q) = *next.next().unwrap();
            for e in orbit(&lambda, n) {
                let l = e.iter().map(|x| 2 * x).collect();
                terms.push((Monomial::new(l, 2 * k), ExactCoeff::real(rat(p, q))));
            }
        }
    }
    Poly::from_terms(n, terms).unwrap()
}

/// Small arbitrary polynomials in `n` lengths, not necessarily symmetric.
pub fn arb_poly(n: usize) -> impl Strategy<Value = Poly> {
    let term = (proptest::collection::vec(0u32..4, n), 0u32..4, -6i64..7, 1i64..5, -3i64..4);
    proptest::collection::vec(term, 0..6).prop_map(move |ts| {
        Poly::from_terms(
            n,
            ts.into_iter().map(|(l, pi, a, b, im)| (Monomial::new(l, pi), ExactCoeff::new(rat(a, b), rat(im, 2)))),
        )
        .unwrap()
    })
}
