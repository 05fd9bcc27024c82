/// `1 / (1 + e^z)` without overflow for large `|z|`.
fn logistic_tail(z: f64) -> f64 {
    if z > 0.0 {
        let e = (-z).exp();
        e / (1.0 + e)
    } else {
        1.0 / (1.0 + z.exp())
    }
}

/// `H(x, y) = (1/(1 + e^{(x+y)/2}) + 1/(1 + e^{(x-y)/2})) / 2`.
///
/// Floating point; used only to check the exact kernel moments numerically.
pub fn kernel_h(x: f64, y: f64) -> f64 {
    0.5 * (logistic_tail((x + y) / 2.0) + logistic_tail((x - y) / 2.0))
}
