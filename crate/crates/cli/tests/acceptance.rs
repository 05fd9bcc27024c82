//! Acceptance criteria, one line each. Runs without the libtest harness so
//! the lines always print; exits nonzero if any criterion fails.

use std::path::Path;
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use num_traits::{One, Signed};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use wpvol_core::conerec::{check_dilaton, closed_volume, factor_p, genus0_lift, seed_v03};
use wpvol_core::exactpoly::{half_dimension, rat, ExactCoeff, Monomial, Poly, Rational};
use wpvol_core::intersect::{
    admissible_exponents, check_dilaton2, check_string2, genus0_psi, psi_kappa, IntersectionIndex,
};
use wpvol_core::mirzakhani::{moment_f, MirzakhaniTable, RecursionOptions, SplitOrder};
use wpvol_core::symlift::{stratified_lift, sym_lift_zero};
use wpvol_core::{Engine, Method, Provenance, StoreEntry, VolumePoly};
use wpvol_oracle::lift::{orbit, partitions};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn wpvol(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wpvol")).arg("--cache-dir").arg(cache).args(args).output().expect("run wpvol")
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn seed_reproduction() -> Outcome {
    let cache = tempfile::tempdir().map_err(|e| e.to_string())?;
    let start = Instant::now();
    let out = wpvol(cache.path(), &["compute", "--genus", "1", "--boundaries", "1"]);
    let elapsed = start.elapsed();
    let stdout = String::from_utf8_lossy(&out.stdout);
    ensure(out.status.success(), || format!("exit {:?}", out.status.code()))?;
    ensure(stdout == "(1/48)*L1^2 + (1/12)*pi^2\n", || format!("printed {stdout:?}"))?;
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok(format!("{} in {elapsed:.2?}", stdout.trim()))
}

fn genus0_chain() -> Outcome {
    let start = Instant::now();
    let mut v = seed_v03();
    let mut sizes = Vec::new();
    while v.boundaries() < 12 {
        v = genus0_lift(&v).map_err(|e| e.to_string())?;
        // Re-run every invariant on the bare polynomial.
        VolumePoly::new(0, v.boundaries(), v.poly().clone()).map_err(|e| e.to_string())?;
        sizes.push(v.poly().len());
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(600), || format!("took {elapsed:?}"))?;
    Ok(format!("V_(0,4..12) valid, V_(0,12) has {} terms, {elapsed:.2?}", sizes.last().unwrap()))
}

fn cross_path() -> Outcome {
    let lifts = Engine::in_memory();
    let mut table = MirzakhaniTable::new(RecursionOptions::default());
    let keys: Vec<(u32, usize)> = (4..=8).map(|n| (0, n)).chain((2..=5).map(|n| (1, n))).collect();
    for &(g, n) in &keys {
        let a = lifts.lift_volume(g, n).map_err(|e| e.to_string())?;
        let b = table.volume(g, n).map_err(|e| e.to_string())?;
        ensure(a == *b, || format!("({g},{n}) differs by {}", a.poly().sub(b.poly()).unwrap()))?;
    }
    Ok(format!("{} volumes equal monomial-for-monomial", keys.len()))
}

fn cone_relations(relation: &str, max_n: &str) -> Outcome {
    let cache = tempfile::tempdir().map_err(|e| e.to_string())?;
    let out = wpvol(cache.path(), &["verify", "--relation", relation, "--max-genus", "2", "--max-boundaries", max_n]);
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    ensure(out.status.success(), || String::from_utf8_lossy(&out.stderr).into_owned())?;
    let cases = report["cases"].as_array().cloned().unwrap_or_default();
    ensure(cases.iter().any(|c| c["g"] == 2), || "no genus-2 cases".into())?;
    Ok(format!("{relation}: {} pairs", cases.len()))
}

fn theorem_two() -> Outcome {
    let s = cone_relations("string", "6")?;
    let d = cone_relations("dilaton", "6")?;
    Ok(format!("{s}, {d}, g <= 2, n <= 6"))
}

fn identities() -> Outcome {
    let engine = Engine::in_memory();
    let mut count = 0;
    for (g, n) in [(0, 3), (0, 4), (0, 5), (1, 1), (1, 2), (1, 3), (2, 1)] {
        for (alpha, m) in admissible_exponents(n, half_dimension(g, n + 1)) {
            let c = check_string2(&engine, g, &alpha, m).map_err(|e| e.to_string())?;
            ensure(c.holds() && !c.vacuous, || format!("string2 ({g},{n}) {alpha:?} m={m}: {} != {}", c.lhs, c.rhs))?;
            count += 1;
        }
        for (alpha, m) in admissible_exponents(n, half_dimension(g, n)) {
            let c = check_dilaton2(&engine, g, &alpha, m).map_err(|e| e.to_string())?;
            ensure(c.holds() && !c.vacuous, || format!("dilaton2 ({g},{n}) {alpha:?} m={m}: {} != {}", c.lhs, c.rhs))?;
            count += 1;
        }
    }
    Ok(format!("{count} admissible (alpha, m) checked"))
}

fn closed_volume_case() -> Outcome {
    let golden = rat(43, 2160);
    let mut values = Vec::new();
    for order in [SplitOrder::Forward, SplitOrder::Reverse] {
        let engine = Engine::with_split_order(order);
        let v11 = engine.compute(1, 1, Method::Mirzakhani).map_err(|e| e.to_string())?;
        factor_p(&v11).map_err(|e| format!("V_(1,1): {e}"))?;
        let v21 = engine.mirzakhani_volume(2, 1).map_err(|e| e.to_string())?;
        factor_p(&v21).map_err(|e| format!("V_(2,1): {e}"))?;
        let closed = closed_volume(&v21).map_err(|e| e.to_string())?;
        let dilaton = check_dilaton(&v21, &closed).map_err(|e| e.to_string())?;
        ensure(dilaton.holds(), || format!("dilaton from (2,0) fails: {}", dilaton.difference))?;
        values.push(closed);
    }
    ensure(values[0] == values[1], || format!("{} vs {}", values[0], values[1]))?;
    let v = &values[0];
    let only = v.poly().terms().next().map(|(m, _)| m.clone());
    ensure(v.poly().len() == 1 && only == Some(Monomial::new(vec![], 6)), || format!("not r*pi^6: {v}"))?;
    ensure(v.constant_term().is_positive(), || format!("not positive: {v}"))?;
    ensure(v.constant_term() == golden, || format!("{} != pinned 43/2160", v.constant_term()))?;
    Ok(format!("V_(2,0) = {v} in both split orders"))
}

fn kernel_moments() -> Outcome {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for k in 0..=6 {
        let f = moment_f(k);
        for t in [0.0, 1.0, 2.0, 5.0] {
            let exact = f.eval_f64(t);
            let numeric = wpvol_oracle::kernel_moment(k, t);
            let rel = (exact - numeric).abs() / numeric.abs();
            ensure(rel < 1e-6, || format!("k={k} t={t}: exact {exact}, quadrature {numeric}"))?;
            worst = worst.max(rel);
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(30), || format!("took {elapsed:?}"))?;
    Ok(format!("max relative error {worst:.1e}, {elapsed:.2?}"))
}

fn multinomial(alpha: &[i64]) -> Rational {
    let fact = |n: i64| (1..=n).fold(Rational::one(), |acc, k| acc * Rational::from_integer(k.into()));
    let n = alpha.len() as i64;
    alpha.iter().fold(fact(n - 3), |acc, &a| acc / fact(a))
}

fn genus0_intersections() -> Outcome {
    let engine = Engine::in_memory();
    let mut count = 0;
    for n in 3..=8 {
        for (alpha, m) in admissible_exponents(n, n as u32 - 3) {
            if m != 0 {
                continue;
            }
            let from_volume =
                psi_kappa(&engine, &IntersectionIndex::new(0, alpha.clone(), 0)).map_err(|e| e.to_string())?;
            let closed = genus0_psi(&alpha).map_err(|e| e.to_string())?;
            let expected = multinomial(&alpha);
            ensure(from_volume == expected && closed == expected, || {
                format!("{alpha:?}: volume {from_volume}, closed form {closed}, multinomial {expected}")
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} exponent vectors, n <= 8"))
}

fn second_derivative() -> Outcome {
    let s = cone_relations("second", "4")?;
    Ok(format!("{s}, g <= 2, n <= 4"))
}

fn symmetric_poly(m: usize, d: u32, coeffs: &[(i64, i64)]) -> Poly {
    let mut terms = Vec::new();
    let mut next = coeffs.iter().cycle();
    for k in 0..=d {
        for lambda in partitions(d - k, m) {
            let (p, q) = *next.next().unwrap();
            for e in orbit(&lambda, m) {
                let l = e.iter().map(|x| 2 * x).collect();
                terms.push((Monomial::new(l, 2 * k), ExactCoeff::real(rat(p, q))));
            }
        }
    }
    Poly::from_terms(m, terms).unwrap()
}

fn property_suite() -> Outcome {
    let strategy = (2usize..=5).prop_flat_map(|m| {
        (Just(m), 0..=(m as u32 - 1).min(4), proptest::collection::vec((-9i64..10, 1i64..7), 1..12))
    });
    let mut runner = TestRunner::new(Config { cases: 200, failure_persistence: None, ..Config::default() });
    runner
        .run(&strategy, |(m, d, coeffs)| {
            let w = symmetric_poly(m, d, &coeffs);
            let at_root = w.eval_two_pi_i(m - 1).unwrap().drop_var(m - 1).unwrap();
            prop_assert_eq!(&stratified_lift(&at_root, d).unwrap().candidate, &w);
            let s = sym_lift_zero(&w).unwrap();
            prop_assert_eq!(s.eval_zero(m).unwrap().drop_var(m).unwrap(), w);
            Ok(())
        })
        .map_err(|e| e.to_string())?;

    let engine = Engine::in_memory();
    let mut entries = 0;
    for (g, n) in [(0, 6), (1, 4), (2, 2)] {
        let v = engine.compute(g, n, Method::default_for(g)).map_err(|e| e.to_string())?;
        let text = StoreEntry::new(v, Provenance::Mirzakhani).to_json().map_err(|e| e.to_string())?;
        let again = StoreEntry::from_json(&text).and_then(|e| e.to_json()).map_err(|e| e.to_string())?;
        ensure(again == text, || format!("({g},{n}) serialization not byte-identical"))?;
        entries += 1;
    }
    Ok(format!("200 symlift round trips, {entries} byte-identical store round trips"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("seed reproduction", seed_reproduction),
        ("genus-0 lift chain to n = 12", genus0_chain),
        ("lift and recursion agree", cross_path),
        ("string and dilaton relations", theorem_two),
        ("string2 and dilaton2 identities", identities),
        ("factorization and closed volume", closed_volume_case),
        ("kernel moments against quadrature", kernel_moments),
        ("genus-0 intersection numbers", genus0_intersections),
        ("second-derivative relation", second_derivative),
        ("property suite", property_suite),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
