//! Test-only oracles, written without reference to `wpvol-core` so that they
//! fail independently of it.
//!
//! * [`quad`]: adaptive Gauss-Kronrod quadrature in `f64`.
//! * [`linsolve`]: exact Gaussian elimination.
//! * [`lift`]: the cone-point lift as a brute-force linear solve over the
//!   monomial symmetric basis.
//! * [`splits`]: stable splits by exhaustive assignment.

pub mod lift;
pub mod linsolve;
pub mod quad;
pub mod splits;

/// `H(x, t) = (1/(1 + e^{(x+t)/2}) + 1/(1 + e^{(x-t)/2})) / 2`.
pub fn kernel(x: f64, t: f64) -> f64 {
    let f = |u: f64| {
        if u > 0.0 {
            let e = (-u).exp();
            e / (1.0 + e)
        } else {
            1.0 / (1.0 + u.exp())
        }
    };
    0.5 * (f((x + t) / 2.0) + f((x - t) / 2.0))
}

/// `int_0^inf x^{2k+1} H(x, t) dx` by quadrature.
pub fn kernel_moment(k: u32, t: f64) -> f64 {
    quad::integrate_to_infinity(|x| x.powi(2 * k as i32 + 1) * kernel(x, t), 0.0, 1e-13)
}
