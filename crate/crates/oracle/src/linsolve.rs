use num_rational::BigRational;
use num_traits::{One, Zero};

/// Result of solving `A x = b` exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Inconsistent,
    /// A particular solution (free variables set to zero) and the dimension
    /// of the kernel.
    Solved {
        x: Vec<BigRational>,
        nullity: usize,
    },
}

/// Gauss-Jordan elimination on the augmented matrix.
pub fn solve(mut a: Vec<Vec<BigRational>>, mut b: Vec<BigRational>) -> Solution {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        b.swap(r, p);
        let inv = BigRational::one() / &a[r][c];
        for v in a[r].iter_mut() {
            *v *= &inv;
        }
        b[r] *= &inv;
        let pivot_row = a[r].clone();
        let pivot_rhs = b[r].clone();
        for (i, (row, rhs)) in a.iter_mut().zip(b.iter_mut()).enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                *x -= &factor * p;
            }
            *rhs -= &factor * &pivot_rhs;
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if b[r..].iter().any(|v| !v.is_zero()) {
        return Solution::Inconsistent;
    }
    let mut x = vec![BigRational::zero(); cols];
    for (row, &c) in pivots.iter().enumerate() {
        x[c] = b[row].clone();
    }
    Solution::Solved { x, nullity: cols - pivots.len() }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn small_systems() {
        let a = vec![vec![q(2), q(1)], vec![q(1), q(3)]];
        assert_eq!(solve(a, vec![q(3), q(4)]), Solution::Solved { x: vec![q(1), q(1)], nullity: 0 });
        let a = vec![vec![q(1), q(1)], vec![q(2), q(2)]];
        assert_eq!(solve(a.clone(), vec![q(1), q(3)]), Solution::Inconsistent);
        assert!(matches!(solve(a, vec![q(1), q(2)]), Solution::Solved { nullity: 1, .. }));
    }
}
