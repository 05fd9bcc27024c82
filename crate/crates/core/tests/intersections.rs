use num_traits::Signed;
use wpvol_core::exactpoly::half_dimension;
use wpvol_core::intersect::{
    admissible_exponents, check_dilaton2, check_string2, genus0_psi, psi_kappa, IntersectionIndex,
};
use wpvol_core::Engine;

#[test]
fn genus0_volume_coefficients_are_multinomials() {
    let engine = Engine::in_memory();
    for n in 3..=7 {
        for (alpha, m) in admissible_exponents(n, n as u32 - 3) {
            if m != 0 {
                continue;
            }
            let idx = IntersectionIndex::new(0, alpha.clone(), 0);
            assert_eq!(psi_kappa(&engine, &idx).unwrap(), genus0_psi(&alpha).unwrap(), "{alpha:?}");
        }
    }
}

#[test]
fn identities_hold_exhaustively() {
    let engine = Engine::in_memory();
    for (g, n) in [(0, 3), (0, 4), (1, 1), (1, 2), (2, 1)] {
        for (alpha, m) in admissible_exponents(n, half_dimension(g, n + 1)) {
            let c = check_string2(&engine, g, &alpha, m).unwrap();
            assert!(c.holds() && !c.vacuous, "string2 g={g} {alpha:?} m={m}");
        }
        for (alpha, m) in admissible_exponents(n, half_dimension(g, n)) {
            let c = check_dilaton2(&engine, g, &alpha, m).unwrap();
            assert!(c.holds() && !c.vacuous, "dilaton2 g={g} {alpha:?} m={m}");
        }
    }
}

#[test]
fn symmetric_and_nonnegative() {
    let engine = Engine::in_memory();
    for (alpha, m) in admissible_exponents(3, half_dimension(1, 3)) {
        let v = psi_kappa(&engine, &IntersectionIndex::new(1, alpha.clone(), m)).unwrap();
        assert!(!v.is_negative());
        let mut rotated = alpha.clone();
        rotated.rotate_left(1);
        assert_eq!(psi_kappa(&engine, &IntersectionIndex::new(1, rotated, m)).unwrap(), v);
    }
}
