//! Fixtures shared by the benchmarks.

use wpvol_core::conerec::{genus0_lift, seed_v03};
use wpvol_core::{Poly, VolumePoly};

/// `V_{0,n}` by the lift chain.
pub fn genus0_volume(n: usize) -> VolumePoly {
    let mut v = seed_v03();
    while v.boundaries() < n {
        v = genus0_lift(&v).expect("genus-0 lift");
    }
    v
}

/// `V_{0,n+1}` evaluated at `L_{n+1} = 2 pi i`: the input of a lift step.
pub fn lift_input(n: usize) -> Poly {
    let w = genus0_volume(n + 1);
    w.poly().eval_two_pi_i(n).and_then(|p| p.drop_var(n)).expect("last variable")
}
