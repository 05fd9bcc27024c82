use std::cmp::Ordering;

/// `L_1^{e_1} ... L_n^{e_n} * pi^p`.
///
/// Ordering is the canonical term order used for printing and serialization:
/// ascending pi exponent, then descending total L-degree, then descending
/// lexicographic on the exponent vector (so `L1^2` precedes `L2^2`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub l_exps: Vec<u32>,
    pub pi_exp: u32,
}

impl Monomial {
    pub fn new(l_exps: Vec<u32>, pi_exp: u32) -> Self {
        Monomial { l_exps, pi_exp }
    }

    pub fn one(n_vars: usize) -> Self {
        Monomial { l_exps: vec![0; n_vars], pi_exp: 0 }
    }

    pub fn n_vars(&self) -> usize {
        self.l_exps.len()
    }

    pub fn l_degree(&self) -> u32 {
        self.l_exps.iter().sum()
    }

    pub fn total_degree(&self) -> u32 {
        self.l_degree() + self.pi_exp
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.n_vars(), other.n_vars());
        Monomial {
            l_exps: self.l_exps.iter().zip(&other.l_exps).map(|(a, b)| a + b).collect(),
            pi_exp: self.pi_exp + other.pi_exp,
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.pi_exp
            .cmp(&other.pi_exp)
            .then_with(|| other.l_degree().cmp(&self.l_degree()))
            .then_with(|| other.l_exps.cmp(&self.l_exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
