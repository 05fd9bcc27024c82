use std::collections::BTreeMap;

use serde::Serialize;
use wpvol_core::conerec::{check_dilaton, check_second_derivative, check_string, factor_p, RelationCheck};
use wpvol_core::exactpoly::{half_dimension, is_stable};
use wpvol_core::intersect::{admissible_exponents, check_dilaton2, check_string2, IdentityCheck};
use wpvol_core::{Engine, Method, Result, VolumePoly};

use crate::args::Relation;

#[derive(Debug, Serialize)]
pub struct Case {
    pub relation: &'static str,
    pub g: u32,
    pub n: usize,
    pub passed: bool,
    /// Exponent tuples checked, for the intersection identities.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checked: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub relation: String,
    pub max_genus: u32,
    pub max_boundaries: usize,
    pub passed: usize,
    pub failed: usize,
    pub cases: Vec<Case>,
    /// Observed, not required: volumes whose coefficients are all
    /// nonnegative, keyed `"g,n"`.
    pub nonnegative_coefficients: BTreeMap<String, bool>,
}

impl Report {
    pub fn new(relation: &str, max_genus: u32, max_boundaries: usize) -> Self {
        Report {
            relation: relation.into(),
            max_genus,
            max_boundaries,
            passed: 0,
            failed: 0,
            cases: Vec::new(),
            nonnegative_coefficients: BTreeMap::new(),
        }
    }

    pub fn push(&mut self, case: Case) {
        if case.passed {
            self.passed += 1;
        } else {
            self.failed += 1;
        }
        self.cases.push(case);
    }

    pub fn first_failure(&self) -> Option<&Case> {
        self.cases.iter().find(|c| !c.passed)
    }
}

/// Smallest stable boundary count in genus `g`, with `(g, 0)` reached
/// through the closed volume.
fn first_n(g: u32) -> usize {
    match g {
        0 => 3,
        1 => 1,
        _ => 0,
    }
}

fn volume(engine: &Engine, g: u32, n: usize) -> Result<VolumePoly> {
    if n == 0 {
        engine.closed_volume(g)
    } else {
        engine.compute(g, n, Method::default_for(g))
    }
}

fn pair_case(relation: &'static str, g: u32, n: usize, check: Result<RelationCheck>) -> Case {
    match check {
        Ok(c) => Case {
            relation,
            g,
            n,
            passed: c.holds(),
            checked: None,
            detail: (!c.holds()).then(|| c.difference.to_string()),
        },
        Err(e) => Case { relation, g, n, passed: false, checked: None, detail: Some(e.to_string()) },
    }
}

fn cone_relations(
    engine: &Engine,
    which: &[&'static str],
    max_g: u32,
    max_n: usize,
    report: &mut Report,
) -> Result<()> {
    for g in 0..=max_g {
        for n in first_n(g)..max_n {
            let v = volume(engine, g, n)?;
            let w = volume(engine, g, n + 1)?;
            for x in [&v, &w] {
                let (g, n) = x.key();
                report.nonnegative_coefficients.insert(format!("{g},{n}"), x.has_nonnegative_coefficients());
            }
            for &relation in which {
                let check = match relation {
                    "string" => check_string(&w, &v),
                    "dilaton" => check_dilaton(&w, &v),
                    _ => check_second_derivative(&w, &v),
                };
                report.push(pair_case(relation, g, n, check));
            }
        }
    }
    Ok(())
}

fn factor(engine: &Engine, max_g: u32, report: &mut Report) -> Result<()> {
    for g in 1..=max_g {
        let v = volume(engine, g, 1)?;
        let case = match factor_p(&v) {
            Ok(_) => Case { relation: "factor", g, n: 1, passed: true, checked: None, detail: None },
            Err(e) => Case { relation: "factor", g, n: 1, passed: false, checked: None, detail: Some(e.to_string()) },
        };
        report.push(case);
        if g >= 2 {
            let case = match engine.closed_volume(g) {
                Ok(c) => Case {
                    relation: "closed_volume",
                    g,
                    n: 0,
                    passed: true,
                    checked: None,
                    detail: Some(c.to_string()),
                },
                Err(e) => Case {
                    relation: "closed_volume",
                    g,
                    n: 0,
                    passed: false,
                    checked: None,
                    detail: Some(e.to_string()),
                },
            };
            report.push(case);
        }
    }
    Ok(())
}

fn identity(engine: &Engine, relation: &'static str, max_g: u32, max_n: usize, report: &mut Report) -> Result<()> {
    for g in 0..=max_g {
        for n in 1..max_n {
            if !is_stable(g, n) {
                continue;
            }
            let total = if relation == "string2" { half_dimension(g, n + 1) } else { half_dimension(g, n) };
            let mut checked = 0;
            let mut failure: Option<String> = None;
            for (alpha, m) in admissible_exponents(n, total) {
                let c: IdentityCheck = if relation == "string2" {
                    check_string2(engine, g, &alpha, m)?
                } else {
                    check_dilaton2(engine, g, &alpha, m)?
                };
                checked += 1;
                if !c.holds() && failure.is_none() {
                    failure = Some(format!("alpha={alpha:?} m={m}: {} != {}", c.lhs, c.rhs));
                }
            }
            report.push(Case { relation, g, n, passed: failure.is_none(), checked: Some(checked), detail: failure });
        }
    }
    Ok(())
}

pub fn run(engine: &Engine, relation: Relation, max_g: u32, max_n: usize, report: &mut Report) -> Result<()> {
    let cone: &[&'static str] = match relation {
        Relation::String => &["string"],
        Relation::Dilaton => &["dilaton"],
        Relation::Second => &["second"],
        Relation::All => &["string", "dilaton", "second"],
        _ => &[],
    };
    if !cone.is_empty() {
        cone_relations(engine, cone, max_g, max_n, report)?;
    }
    if matches!(relation, Relation::Factor | Relation::All) {
        factor(engine, max_g, report)?;
    }
    if matches!(relation, Relation::String2 | Relation::All) {
        identity(engine, "string2", max_g, max_n, report)?;
    }
    if matches!(relation, Relation::Dilaton2 | Relation::All) {
        identity(engine, "dilaton2", max_g, max_n, report)?;
    }
    Ok(())
}
