//! Mirzakhani's recursion, polynomialized through exact kernel moments.
//!
//! ```text
//! d/dL_1 (L_1 V_{g,n}(L)) = A_{g,n}(L) + B_{g,n}(L)
//! A = int int x y H(x+y, L_1) V'_{g-1,n+1}(x, y, L_2..L_n) dx dy
//! B = sum_{j>=2} int x (H(x, L_1+L_j) + H(x, L_1-L_j)) V_{g,n-1}(x, L_2..^L_j..L_n) dx
//! ```
//!
//! `V'` is the connected volume plus every ordered stable split
//! `V_{g1}(x, L_I1) V_{g2}(y, L_I2)`. The torus `(1,1)` has no stable
//! `V'`; its `A` term is the self-gluing `int x H(2x, L_1) dx`.
//!
//! Every monomial `x^{2a} y^{2b}` is replaced by the exact double moment of
//! the kernel, so no numerical integration happens at runtime.
//!
//! Normalization: with `H` carrying the factor 1/2 and `V_{1,1}` the half
//! orbifold volume, both terms enter with weight 1. [`calibrate`] recomputes
//! the weights from `V_{1,1}` and `V_{0,4}` and [`frozen_normalization`]
//! records them.

mod kernel;
mod moments;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock};

use num_traits::One;

pub use kernel::kernel_h;
pub use moments::{bernoulli, double_moment, moment_f, zeta_even_over_pi, KernelMoment, MomentCache};

use crate::conerec::{base_case, seed_v11};
use crate::error::{Error, Result};
use crate::exactpoly::{is_stable, rat, Monomial, Poly, Rational, VolumePoly};

/// Weights of the two kernel terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalization {
    pub a_term: Rational,
    pub b_term: Rational,
}

impl Normalization {
    pub fn unit() -> Self {
        Normalization { a_term: Rational::one(), b_term: Rational::one() }
    }
}

/// The calibrated weights; [`calibrate`] must reproduce them.
pub fn frozen_normalization() -> Normalization {
    Normalization::unit()
}

/// Which factor of a split is attached to `x`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SplitOrder {
    /// Enumerate `(g1, I1)` ascending, `V_{g1}` on `x`.
    #[default]
    Forward,
    /// Enumerate descending, `V_{g1}` on `y`.
    Reverse,
}

#[derive(Clone, Debug)]
pub struct RecursionOptions {
    pub normalization: Normalization,
    pub split_order: SplitOrder,
}

impl Default for RecursionOptions {
    fn default() -> Self {
        RecursionOptions { normalization: frozen_normalization(), split_order: SplitOrder::Forward }
    }
}

/// A disconnected pair in `V'`: `V_{g1}(x, L_I1) * V_{g2}(y, L_I2)`.
///
/// Labels are positions among the remaining lengths `L_2..L_n`, zero-based.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct StableSplit {
    pub g1: u32,
    pub labels1: Vec<usize>,
    pub g2: u32,
    pub labels2: Vec<usize>,
}

/// Ordered stable splits for `V'_{g-1,n+1}`, where `labels` remaining lengths
/// are distributed.
pub fn stable_splits(g: u32, labels: usize, order: SplitOrder) -> Vec<StableSplit> {
    let mut out = Vec::new();
    for g1 in 0..=g {
        for mask in 0u64..(1 << labels) {
            let labels1: Vec<usize> = (0..labels).filter(|i| mask >> i & 1 == 1).collect();
            let labels2: Vec<usize> = (0..labels).filter(|i| mask >> i & 1 == 0).collect();
            let g2 = g - g1;
            if is_stable(g1, labels1.len() + 1) && is_stable(g2, labels2.len() + 1) {
                out.push(StableSplit { g1, labels1, g2, labels2 });
            }
        }
    }
    if order == SplitOrder::Reverse {
        out.reverse();
    }
    out
}

/// Source of lower volumes during one recursion step.
pub type Lookup<'a> = dyn FnMut(u32, usize) -> Result<Arc<VolumePoly>> + 'a;

/// `V'_{g-1,n+1}(x, y, L_2..L_n)` in `n + 1` variables ordered
/// `(x, y, L_2, .., L_n)`. Unstable pieces never appear.
pub fn v_disconnected(g: u32, n: usize, order: SplitOrder, lookup: &mut Lookup<'_>) -> Result<Poly> {
    let width = n + 1;
    let mut out = Poly::zero(width);
    if g >= 1 && is_stable(g - 1, n + 1) {
        out.add_assign(lookup(g - 1, n + 1)?.poly())?;
    }
    for split in stable_splits(g, n - 1, order) {
        let (slot1, slot2) = match order {
            SplitOrder::Forward => (0, 1),
            SplitOrder::Reverse => (1, 0),
        };
        let place = |slot: usize, labels: &[usize]| -> Vec<usize> {
            std::iter::once(slot).chain(labels.iter().map(|l| l + 2)).collect()
        };
        let v1 = lookup(split.g1, split.labels1.len() + 1)?;
        let v2 = lookup(split.g2, split.labels2.len() + 1)?;
        let p1 = v1.poly().remap(width, &place(slot1, &split.labels1))?;
        let p2 = v2.poly().remap(width, &place(slot2, &split.labels2))?;
        out.add_assign(&p1.mul(&p2)?)?;
    }
    Ok(out)
}

/// Moment polynomial in `t` placed on `L_1` of an `n`-variable polynomial.
fn on_first(moment: &Poly, n: usize) -> Result<Poly> {
    moment.remap(n, &[0])
}

/// `A_{g,n}` with unit weight.
fn a_term(
    g: u32,
    n: usize,
    opts: &RecursionOptions,
    moments: &mut MomentCache,
    lookup: &mut Lookup<'_>,
) -> Result<Poly> {
    if (g, n) == (1, 1) {
        // V_{0,2}(x, y) acts as delta(x - y)/x: int x H(2x, L) dx = F_1(L)/4.
        return Ok(on_first(moments.single(0), 1)?.scale_rational(&rat(1, 4)));
    }
    let vprime = v_disconnected(g, n, opts.split_order, lookup)?;
    // Group by (a, b): x^{2a} y^{2b} * rest, with rest moved to L_2..L_n.
    let mut groups: BTreeMap<(u32, u32), Poly> = BTreeMap::new();
    for (m, c) in vprime.terms() {
        let key = (m.l_exps[0] / 2, m.l_exps[1] / 2);
        let mut l = vec![0u32; n];
        l[1..].copy_from_slice(&m.l_exps[2..]);
        groups.entry(key).or_insert_with(|| Poly::zero(n)).add_term(Monomial::new(l, m.pi_exp), c);
    }
    let mut out = Poly::zero(n);
    for ((a, b), rest) in groups {
        let moment = on_first(&moments.double(a, b), n)?;
        out.add_assign(&moment.mul(&rest)?)?;
    }
    Ok(out)
}

/// `F_{2a+1}(L_1 + L_j) + F_{2a+1}(L_1 - L_j)` on output variables `0` and `j`.
fn b_kernel(moment: &Poly, n: usize, j: usize) -> Poly {
    let mut out = Poly::zero(n);
    for (m, c) in moment.terms() {
        let e = m.l_exps[0];
        // (s + d)^e + (s - d)^e keeps only even powers of d, doubled.
        let mut binom = Rational::one();
        for d in 0..=e {
            if d > 0 {
                binom = binom * Rational::from_integer((e - d + 1).into()) / Rational::from_integer(d.into());
            }
            if d % 2 == 1 {
                continue;
            }
            let mut l = vec![0u32; n];
            l[0] = e - d;
            l[j] += d;
            let coeff = c.scale(&(&binom * Rational::from_integer(2.into())));
            out.add_term(Monomial::new(l, m.pi_exp), &coeff);
        }
    }
    out
}

/// `B_{g,n}` with unit weight.
fn b_term(g: u32, n: usize, moments: &mut MomentCache, lookup: &mut Lookup<'_>) -> Result<Poly> {
    let mut out = Poly::zero(n);
    if n < 2 || !is_stable(g, n - 1) {
        return Ok(out);
    }
    let lower = lookup(g, n - 1)?;
    for j in 1..n {
        // V_{g,n-1}(x, L_2..^L_j..L_n): x on output 0 slot for grouping, the
        // rest on the output indices other than 0 and j.
        let others: Vec<usize> = (1..n).filter(|&i| i != j).collect();
        let mut groups: BTreeMap<u32, Poly> = BTreeMap::new();
        for (m, c) in lower.poly().terms() {
            let mut l = vec![0u32; n];
            for (pos, &target) in others.iter().enumerate() {
                l[target] = m.l_exps[pos + 1];
            }
            groups.entry(m.l_exps[0] / 2).or_insert_with(|| Poly::zero(n)).add_term(Monomial::new(l, m.pi_exp), c);
        }
        for (a, rest) in groups {
            let kernel = b_kernel(moments.single(a), n, j);
            out.add_assign(&kernel.mul(&rest)?)?;
        }
    }
    Ok(out)
}

/// One recursion step: `V_{g,n}` from lower volumes supplied by `lookup`.
pub fn recursion_step(
    g: u32,
    n: usize,
    opts: &RecursionOptions,
    moments: &mut MomentCache,
    lookup: &mut Lookup<'_>,
) -> Result<VolumePoly> {
    if !is_stable(g, n) {
        return Err(Error::Unstable { g, n });
    }
    if n == 0 {
        return Err(Error::Precondition("closed surfaces have no boundary to recurse on".into()));
    }
    if (g, n) == (0, 3) {
        return Ok(base_case(0, 3).expect("seed"));
    }
    let a = a_term(g, n, opts, moments, lookup)?.scale_rational(&opts.normalization.a_term);
    let b = b_term(g, n, moments, lookup)?.scale_rational(&opts.normalization.b_term);
    let derivative = a.add(&b)?;
    let volume = derivative.integrate_from_zero(0)?.div_var(0)?;
    VolumePoly::new(g, n, volume)
}

/// The constant `r` with `target = r * raw`, if there is one.
fn constant_ratio(target: &Poly, raw: &Poly) -> Option<Rational> {
    let (m, c) = raw.leading_term()?;
    let r = &target.coeff_monomial(m) * &c.inv()?;
    (r.is_real() && raw.scale(&r) == *target).then_some(r.re)
}

/// Recomputes the kernel weights from the torus seed and the four-holed sphere.
///
/// `V_{1,1}` uses only the `A` term and `V_{0,4}` only the `B` term. The
/// `V_{0,4}` target `2 pi^2 + (L_1^2 + .. + L_4^2)/2` is the string-relation
/// lift of `V_{0,3}`.
pub fn calibrate() -> Result<Normalization> {
    let opts = RecursionOptions { normalization: Normalization::unit(), split_order: SplitOrder::Forward };
    let mut moments = MomentCache::default();
    let mut seeds = |g: u32, n: usize| -> Result<Arc<VolumePoly>> {
        base_case(g, n).map(Arc::new).ok_or(Error::Calibration(format!("({g},{n}) is not a seed")))
    };
    let torus = a_term(1, 1, &opts, &mut moments, &mut seeds)?.integrate_from_zero(0)?.div_var(0)?;
    let a = constant_ratio(seed_v11().poly(), &torus)
        .ok_or_else(|| Error::Calibration("torus term is not a multiple of the seed".into()))?;

    let sphere = b_term(0, 4, &mut moments, &mut seeds)?.integrate_from_zero(0)?.div_var(0)?;
    let target = crate::conerec::genus0_lift(&crate::conerec::seed_v03())?;
    let b = constant_ratio(target.poly(), &sphere)
        .ok_or_else(|| Error::Calibration("four-holed sphere is not a multiple of the lift".into()))?;
    Ok(Normalization { a_term: a, b_term: b })
}

fn ensure_calibrated() -> Result<()> {
    static CHECK: OnceLock<std::result::Result<(), String>> = OnceLock::new();
    CHECK
        .get_or_init(|| match calibrate() {
            Ok(n) if n == frozen_normalization() => Ok(()),
            Ok(n) => Err(format!("calibrated {n:?}, frozen {:?}", frozen_normalization())),
            Err(e) => Err(e.to_string()),
        })
        .clone()
        .map_err(Error::Calibration)
}

/// Memoized recursion over every `(g, n)` it needs.
#[derive(Debug, Default)]
pub struct MirzakhaniTable {
    opts: RecursionOptions,
    moments: MomentCache,
    volumes: HashMap<(u32, usize), Arc<VolumePoly>>,
}

impl MirzakhaniTable {
    pub fn new(opts: RecursionOptions) -> Self {
        MirzakhaniTable { opts, moments: MomentCache::default(), volumes: HashMap::new() }
    }

    pub fn volume(&mut self, g: u32, n: usize) -> Result<Arc<VolumePoly>> {
        ensure_calibrated()?;
        self.volume_inner(g, n)
    }

    /// Every volume computed so far, in key order.
    pub fn computed(&self) -> Vec<Arc<VolumePoly>> {
        let mut all: Vec<_> = self.volumes.values().cloned().collect();
        all.sort_by_key(|v| v.key());
        all
    }

    fn volume_inner(&mut self, g: u32, n: usize) -> Result<Arc<VolumePoly>> {
        if let Some(v) = self.volumes.get(&(g, n)) {
            return Ok(v.clone());
        }
        let opts = self.opts.clone();
        let mut moments = std::mem::take(&mut self.moments);
        let result = {
            let mut lookup = |g: u32, n: usize| self.volume_inner(g, n);
            recursion_step(g, n, &opts, &mut moments, &mut lookup)
        };
        self.moments = moments;
        let v = Arc::new(result?);
        self.volumes.insert((g, n), v.clone());
        Ok(v)
    }
}

/// `V_{g,n}` by Mirzakhani's recursion alone, seeded only by `V_{0,3} = 1`.
pub fn mirzakhani_volume(g: u32, n: usize) -> Result<VolumePoly> {
    let mut table = MirzakhaniTable::default();
    Ok(table.volume(g, n)?.as_ref().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conerec::{genus0_lift, genus1_lift, seed_v03};

    #[test]
    fn calibration_matches_frozen_weights() {
        assert_eq!(calibrate().unwrap(), frozen_normalization());
        assert_eq!(frozen_normalization(), Normalization::unit());
    }

    #[test]
    fn seeds_and_first_lifts() {
        assert_eq!(mirzakhani_volume(1, 1).unwrap(), seed_v11());
        assert_eq!(mirzakhani_volume(0, 4).unwrap(), genus0_lift(&seed_v03()).unwrap());
        assert_eq!(mirzakhani_volume(1, 2).unwrap(), genus1_lift(&seed_v11()).unwrap().0);
    }

    #[test]
    fn unstable_requests_fail() {
        assert!(matches!(mirzakhani_volume(0, 2), Err(Error::Unstable { .. })));
        assert!(mirzakhani_volume(2, 0).is_err());
    }

    #[test]
    fn split_enumeration() {
        let torus_pair = stable_splits(2, 0, SplitOrder::Forward);
        assert_eq!(torus_pair, vec![StableSplit { g1: 1, labels1: vec![], g2: 1, labels2: vec![] }]);
        assert!(stable_splits(0, 3, SplitOrder::Forward).is_empty());
        assert!(stable_splits(1, 0, SplitOrder::Forward).is_empty());
        let mut fwd = stable_splits(1, 3, SplitOrder::Forward);
        let rev = stable_splits(1, 3, SplitOrder::Reverse);
        fwd.reverse();
        assert_eq!(fwd, rev);
    }

    #[test]
    fn four_holed_sphere_has_no_a_term() {
        let mut none = |_: u32, _: usize| -> Result<Arc<VolumePoly>> { Err(Error::Store("unused".into())) };
        assert!(v_disconnected(0, 4, SplitOrder::Forward, &mut none).unwrap().is_zero());
    }

    #[test]
    fn b_kernel_expansion() {
        // F(t) = t^2: (s+d)^2 + (s-d)^2 = 2 s^2 + 2 d^2
        let t2 = Poly::var_pow(1, 0, 2);
        let k = b_kernel(&t2, 3, 2);
        let expected = Poly::var_pow(3, 0, 2)
            .add(&Poly::var_pow(3, 2, 2))
            .unwrap()
            .scale_rational(&Rational::from_integer(2.into()));
        assert_eq!(k, expected);
    }
}
