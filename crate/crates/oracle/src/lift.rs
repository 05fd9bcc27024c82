//! Brute-force cone-point lift.
//!
//! The unknown `W` in `n + 1` lengths is written in the basis
//! `m_lambda(L_1^2, .., L_{n+1}^2) pi^{2k}` with `|lambda| + k = D`. Its value
//! at `L_{n+1} = 2 pi i`, and optionally its first derivative there divided
//! by `2 pi i`, are linear in the basis coefficients; matching them against
//! the targets is one exact linear system.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::linsolve::{solve, Solution};

/// Real polynomial: `(L exponents, pi exponent) -> coefficient`.
pub type Terms = BTreeMap<(Vec<u32>, u32), BigRational>;

/// Partitions of `total` into at most `parts` positive parts, descending.
pub fn partitions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    fn go(rest: u32, max: u32, parts: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        if prefix.len() == parts {
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            prefix.push(p);
            go(rest - p, p, parts, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(total, total, parts, &mut Vec::new(), &mut out);
    out
}

/// Distinct exponent vectors of length `n` that are permutations of
/// `lambda` padded with zeros.
pub fn orbit(lambda: &[u32], n: usize) -> BTreeSet<Vec<u32>> {
    fn go(pool: &mut Vec<u32>, prefix: &mut Vec<u32>, out: &mut BTreeSet<Vec<u32>>) {
        if pool.is_empty() {
            out.insert(prefix.clone());
            return;
        }
        let mut seen = BTreeSet::new();
        for i in 0..pool.len() {
            if !seen.insert(pool[i]) {
                continue;
            }
            let v = pool.remove(i);
            prefix.push(v);
            go(pool, prefix, out);
            prefix.pop();
            pool.insert(i, v);
        }
    }
    let mut pool = lambda.to_vec();
    pool.resize(n, 0);
    let mut out = BTreeSet::new();
    go(&mut pool, &mut Vec::new(), &mut out);
    out
}

fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn neg_four_pow(e: u32) -> BigRational {
    let p = BigRational::from_integer(BigInt::from(4).pow(e));
    if e.is_multiple_of(2) {
        p
    } else {
        -p
    }
}

/// One basis element, as columns of the value system and derivative system.
struct Basis {
    half_exps: Vec<u32>,
    k: u32,
}

pub struct LiftOutcome {
    /// The lift if the system has exactly one solution.
    pub unique: Option<Terms>,
    pub nullity: usize,
    pub consistent: bool,
}

/// Solves for symmetric even `W` of half-degree `half_degree` in `n + 1`
/// lengths with `W(L, 2 pi i) = value` and, if given,
/// `dW/dL_{n+1}(L, 2 pi i) / (2 pi i) = slope`.
pub fn lift(value: &Terms, slope: Option<&Terms>, n: usize, half_degree: u32) -> LiftOutcome {
    let width = n + 1;
    let mut basis = Vec::new();
    for k in 0..=half_degree {
        for lambda in partitions(half_degree - k, width) {
            basis.push(Basis { half_exps: lambda, k });
        }
    }
    // Columns of both systems, keyed by target monomial.
    let mut value_cols: Vec<Terms> = Vec::new();
    let mut slope_cols: Vec<Terms> = Vec::new();
    for b in &basis {
        let mut vc = Terms::new();
        let mut sc = Terms::new();
        for e in orbit(&b.half_exps, width) {
            let last = e[width - 1];
            let l: Vec<u32> = e[..n].iter().map(|x| 2 * x).collect();
            // (2 pi i)^{2 last} = (-4)^last pi^{2 last}
            *vc.entry((l.clone(), 2 * b.k + 2 * last)).or_insert_with(BigRational::zero) += neg_four_pow(last);
            if last > 0 {
                // 2 last (2 pi i)^{2 last - 1} / (2 pi i) = 2 last (-4)^{last-1} pi^{2 last - 2}
                let c = q(2 * last as i64) * neg_four_pow(last - 1);
                *sc.entry((l, 2 * b.k + 2 * last - 2)).or_insert_with(BigRational::zero) += c;
            }
        }
        value_cols.push(vc);
        slope_cols.push(sc);
    }
    let mut a = Vec::new();
    let mut rhs = Vec::new();
    let mut push_block = |cols: &[Terms], target: &Terms| {
        let mut rows: BTreeSet<(Vec<u32>, u32)> = target.keys().cloned().collect();
        for c in cols {
            rows.extend(c.keys().cloned());
        }
        for row in rows {
            a.push(cols.iter().map(|c| c.get(&row).cloned().unwrap_or_else(BigRational::zero)).collect());
            rhs.push(target.get(&row).cloned().unwrap_or_else(BigRational::zero));
        }
    };
    push_block(&value_cols, value);
    if let Some(s) = slope {
        push_block(&slope_cols, s);
    }
    match solve(a, rhs) {
        Solution::Inconsistent => LiftOutcome { unique: None, nullity: 0, consistent: false },
        Solution::Solved { x, nullity } => {
            let unique = (nullity == 0).then(|| {
                let mut w = Terms::new();
                for (b, c) in basis.iter().zip(&x) {
                    if c.is_zero() {
                        continue;
                    }
                    for e in orbit(&b.half_exps, width) {
                        let l = e.iter().map(|x| 2 * x).collect();
                        *w.entry((l, 2 * b.k)).or_insert_with(BigRational::zero) += c;
                    }
                }
                w.retain(|_, c| !c.is_zero());
                w
            });
            LiftOutcome { unique, nullity, consistent: true }
        }
    }
}

/// `sum_k int_0^{L_k} L_k V dL_k`, computed termwise.
pub fn string_side(v: &Terms, n: usize) -> Terms {
    let mut out = Terms::new();
    for ((l, pi), c) in v {
        for k in 0..n {
            let mut e = l.clone();
            e[k] += 2;
            let c = c / q(e[k] as i64);
            *out.entry((e, *pi)).or_insert_with(BigRational::zero) += c;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `chi * V` for the dilaton target.
pub fn scaled(v: &Terms, chi: i64) -> Terms {
    v.iter().map(|(k, c)| (k.clone(), c * q(chi))).filter(|(_, c)| !c.is_zero()).collect()
}

/// `V_{0,3} = 1` and `V_{1,1} = (L^2 + 4 pi^2)/48`, as oracle terms.
pub fn seed(g: u32) -> (Terms, usize) {
    let mut t = Terms::new();
    if g == 0 {
        t.insert((vec![0, 0, 0], 0), BigRational::one());
        (t, 3)
    } else {
        t.insert((vec![2], 0), BigRational::new(1.into(), 48.into()));
        t.insert((vec![0], 2), BigRational::new(1.into(), 12.into()));
        (t, 1)
    }
}

/// `V_{g,n}` for `g <= 1` by repeated brute-force lifts with both the string
/// and dilaton constraints.
pub fn volume(g: u32, n: usize) -> Terms {
    let (mut v, mut m) = seed(g);
    while m < n {
        let chi = 2 * g as i64 - 2 + m as i64;
        let d = 3 * g + m as u32 - 2;
        let out = lift(&string_side(&v, m), Some(&scaled(&v, chi)), m, d);
        v = out.unique.expect("string and dilaton determine the lift");
        m += 1;
    }
    v
}
