//! One pass/fail line per acceptance criterion. Every comparison is exact.

mod common;

use std::io::Write;
use std::time::{Duration, Instant};

use twinllt::checks::Check;
use twinllt::gkm::gkm_report;
use twinllt::hessgraph::{e_expansion_shifted, hessenberg_all, llt, verify_identities, HessenbergFunction};
use twinllt::permco::{
    coinvariant_check, complete_graph_agreement, f_h_polynomials, f_vector, face_module_check, gaussian_sum_check,
    shifted_path_llt_check,
};
use twinllt::qrat::Substitution;
use twinllt::symfunc::Basis;
use twinllt::{QPoly, QRat};

type Outcome = Result<String, String>;

fn hf(values: &[usize]) -> HessenbergFunction {
    HessenbergFunction::new(values.to_vec()).expect("valid Hessenberg function")
}

fn first_failure(label: &str, checks: &[Check]) -> Result<(), String> {
    match checks.iter().find(|c| !c.passed) {
        None => Ok(()),
        Some(c) => Err(format!("{label}: {} ({})", c.name, c.detail.clone().unwrap_or_default())),
    }
}

fn within(limit: Duration, elapsed: Duration, what: &str) -> Result<(), String> {
    if elapsed <= limit {
        Ok(())
    } else {
        Err(format!("{what} took {elapsed:.1?}, over the {limit:?} budget"))
    }
}

fn coloring_identities() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for n in 1..=6 {
        for h in hessenberg_all(n).map_err(|e| e.to_string())? {
            let r = verify_identities(&h).map_err(|e| format!("{h}: {e}"))?;
            first_failure(&h.to_string(), &r.checks)?;
            count += 1;
        }
    }
    let t = start.elapsed();
    within(Duration::from_secs(120), t, "identity checks")?;
    Ok(format!("{count} Hessenberg functions with n <= 6, six identities each, {t:.1?}"))
}

fn orientation_expansion() -> Outcome {
    let mut hs = Vec::new();
    for n in 1..=5 {
        hs.extend(hessenberg_all(n).map_err(|e| e.to_string())?);
    }
    hs.push(hf(&[2, 3, 4, 5, 6, 6]));
    hs.push(hf(&[6, 6, 6, 6, 6, 6]));
    for h in &hs {
        let y = llt(h).map_err(|e| format!("{h}: {e}"))?;
        let shifted = y.substitute(&Substitution::q_plus_one()).change_basis(Basis::E);
        let orient = e_expansion_shifted(h).map_err(|e| format!("{h}: {e}"))?;
        if let Some((lambda, a, b)) = orient.first_difference(&shifted) {
            return Err(format!("{h}: coefficient of e{lambda}: {} vs {}", a.to_plain(), b.to_plain()));
        }
        let pos = y.e_positive_shifted().map_err(|e| format!("{h}: {e}"))?;
        if !pos.positive {
            return Err(format!("{h}: LLT_h(q+1) is not e-positive"));
        }
    }
    Ok(format!("{} Hessenberg functions, all e-positive", hs.len()))
}

const GKM_LAWS: [&str; 6] = [
    "free-module dimension law (X)",
    "free-module dimension law (Y)",
    "ch of X dot t-quotient = omega X_h",
    "ch of X dot x-quotient = LLT_h",
    "Y dagger t-quotient = X dot x-quotient",
    "localization is polynomial and dot-equivariant",
];

fn gkm_laws() -> Outcome {
    let mut hs = Vec::new();
    for n in 1..=3 {
        hs.extend(hessenberg_all(n).map_err(|e| e.to_string())?);
    }
    let small = hs.len();
    let start = Instant::now();
    let check = |h: &HessenbergFunction| -> Result<(), String> {
        let r = gkm_report(h).map_err(|e| format!("{h}: {e}"))?;
        for law in GKM_LAWS {
            if !r.checks.iter().any(|c| c.name == law) {
                return Err(format!("{h}: law {law:?} missing from the report"));
            }
        }
        first_failure(&h.to_string(), &r.checks)
    };
    for h in &hs {
        check(h)?;
    }
    let t_small = start.elapsed();
    let start = Instant::now();
    for h in [hf(&[2, 3, 4, 4]), hf(&[4, 4, 4, 4])] {
        check(&h)?;
    }
    let t_big = start.elapsed();
    within(Duration::from_secs(300), t_big, "GKM at n = 4")?;
    Ok(format!(
        "{small} functions with n <= 3 ({t_small:.1?}), (2,3,4,4) and (4,4,4,4) ({t_big:.1?})"
    ))
}

fn poly(c: &[i64]) -> QRat {
    QRat::from_poly(QPoly::from_ints(c))
}

fn permutohedron() -> Outcome {
    let err = |e: twinllt::Error| e.to_string();
    for (n, expected) in [(3, vec![6, 6, 1]), (4, vec![24, 36, 14, 1])] {
        let fv = f_vector(n).map_err(err)?;
        if fv != expected {
            return Err(format!("f-vector at n = {n}: {fv:?}"));
        }
    }
    for (n, eulerian) in [(3, poly(&[1, 4, 1])), (4, poly(&[1, 11, 11, 1]))] {
        let dims = f_h_polynomials(n).map_err(err)?.1.degree();
        if dims != eulerian {
            return Err(format!("H dimension series at n = {n}: {}", dims.to_plain()));
        }
    }
    for n in 1..=6 {
        first_failure(&format!("face modules n = {n}"), &face_module_check(n).map_err(err)?.checks)?;
        first_failure(&format!("shifted path LLT n = {n}"), &shifted_path_llt_check(n).map_err(err)?.checks)?;
    }
    Ok("f-vectors, Eulerian h-series, face modules classwise (GKM route at n <= 4), closed form at n <= 6".into())
}

fn coinvariants() -> Outcome {
    let err = |e: twinllt::Error| e.to_string();
    for n in 1..=5 {
        first_failure(&format!("coinvariants n = {n}"), &coinvariant_check(n).map_err(err)?.checks)?;
        first_failure(&format!("complete graph n = {n}"), &complete_graph_agreement(n).map_err(err)?.checks)?;
    }
    let mut pairs = 0;
    for n in 2..=10 {
        for i in 1..n {
            if !gaussian_sum_check(n, i).map_err(err)? {
                return Err(format!("Gaussian sum n = {n}, i = {i}"));
            }
            pairs += 1;
        }
    }
    Ok(format!(
        "coinvariant closed forms and dualities at n <= 5, full-flag GKM at n <= 3, {pairs} Gaussian sums, complete-graph agreement at n <= 5"
    ))
}

fn cli_contracts() -> Outcome {
    let cases = common::cases();
    let failures: Vec<String> = cases.iter().filter_map(common::check_case).collect();
    if let Some(f) = failures.first() {
        return Err(f.clone());
    }
    Ok(format!("{} golden cases, exit codes 0/2/3 and repeat-run byte equality", cases.len()))
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 6] = [
        ("coloring identities", coloring_identities),
        ("orientation e-expansion", orientation_expansion),
        ("GKM laws", gkm_laws),
        ("permutohedron face modules", permutohedron),
        ("coinvariants and complete graph", coinvariants),
        ("CLI exit codes and determinism", cli_contracts),
    ];
    let mut all = true;
    let mut err = std::io::stderr();
    for (k, (name, f)) in criteria.iter().enumerate() {
        let line = match f() {
            Ok(detail) => format!("criterion {}: PASS {name}: {detail}\n", k + 1),
            Err(why) => {
                all = false;
                format!("criterion {}: FAIL {name}: {why}\n", k + 1)
            }
        };
        err.write_all(line.as_bytes()).expect("stderr is writable");
    }
    assert!(all, "some acceptance criteria failed");
}
