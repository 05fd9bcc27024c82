//! Exact moments of the recursion kernel.
//!
//! With `zeta(2i) = z_i pi^{2i}`, `z_i` rational (and `zeta(0) = -1/2`),
//!
//! ```text
//! F_{2k+1}(t) = int_0^inf x^{2k+1} H(x, t) dx
//!             = (2k+1)!/2 * sum_{i=0}^{k+1} zeta(2i) (2^{2i+1} - 4) t^{2k+2-2i} / (2k+2-2i)!
//! ```
//!
//! which follows from expanding `1/(1+e^u)` against `x^{2k+1}` on both sides
//! of `x = t`. The numerical check lives in the test suite.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactpoly::{ExactCoeff, Monomial, Poly, Rational};

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

fn binomial(n: u32, k: u32) -> BigInt {
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// Bernoulli numbers `B_0..B_m` (with `B_1 = -1/2`).
pub fn bernoulli(m: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(m + 1);
    b.push(Rational::one());
    for j in 1..=m {
        // sum_{k=0}^{j} C(j+1, k) B_k = 0
        let mut acc = Rational::zero();
        for (k, bk) in b.iter().enumerate() {
            acc += Rational::from_integer(binomial(j as u32 + 1, k as u32)) * bk;
        }
        b.push(-acc / Rational::from_integer(BigInt::from(j + 1)));
    }
    b
}

/// `zeta(2i) / pi^{2i}` for `i = 0..=count-1`.
pub fn zeta_even_over_pi(count: usize) -> Vec<Rational> {
    let b = bernoulli(2 * count);
    (0..count)
        .map(|i| {
            // zeta(2i) = (-1)^{i+1} B_{2i} (2 pi)^{2i} / (2 (2i)!)
            let sign = if i % 2 == 0 { -Rational::one() } else { Rational::one() };
            let two_pow = Rational::from_integer(BigInt::one() << (2 * i));
            let denom = Rational::from_integer(2 * factorial(2 * i as u32));
            sign * &b[2 * i] * two_pow / denom
        })
        .collect()
}

/// `F_{2k+1}(t)` as a polynomial in one variable `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelMoment {
    pub k: u32,
    /// Even in `t`, homogeneous of degree `2k + 2` in `(t, pi)`.
    pub f: Poly,
}

impl KernelMoment {
    pub fn eval_f64(&self, t: f64) -> f64 {
        self.f.eval_f64(&[t]).0
    }
}

pub fn moment_f(k: u32) -> KernelMoment {
    let zetas = zeta_even_over_pi(k as usize + 2);
    let lead = Rational::from_integer(factorial(2 * k + 1)) / Rational::from_integer(BigInt::from(2));
    let mut f = Poly::zero(1);
    for i in 0..=k + 1 {
        let weight = (BigInt::one() << (2 * i + 1)) - BigInt::from(4);
        let power = 2 * k + 2 - 2 * i;
        let c = &lead * &zetas[i as usize] * Rational::from_integer(weight) / Rational::from_integer(factorial(power));
        f.add_term(Monomial::new(vec![power], 2 * i), &ExactCoeff::real(c));
    }
    KernelMoment { k, f }
}

/// `int int_{x,y>0} x^{2a+1} y^{2b+1} H(x+y, t) dx dy`
/// `= (2a+1)!(2b+1)!/(2a+2b+3)! * F_{2(a+b+1)+1}(t)`.
pub fn double_moment(a: u32, b: u32) -> Poly {
    let beta = Rational::new(factorial(2 * a + 1) * factorial(2 * b + 1), factorial(2 * a + 2 * b + 3));
    moment_f(a + b + 1).f.scale_rational(&beta)
}

/// Moment table shared across one recursion run.
#[derive(Debug, Default)]
pub struct MomentCache {
    single: Vec<Poly>,
}

impl MomentCache {
    pub fn single(&mut self, k: u32) -> &Poly {
        while self.single.len() <= k as usize {
            let next = self.single.len() as u32;
            self.single.push(moment_f(next).f);
        }
        &self.single[k as usize]
    }

    pub fn double(&mut self, a: u32, b: u32) -> Poly {
        let beta = Rational::new(factorial(2 * a + 1) * factorial(2 * b + 1), factorial(2 * a + 2 * b + 3));
        self.single(a + b + 1).scale_rational(&beta)
    }
}
