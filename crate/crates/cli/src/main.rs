use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use twinllt::checks::Check;
use twinllt::gkm::{gkm_report, MAX_GKM_N};
use twinllt::hessgraph::{
    coloring_functions, e_expansion_shifted, hessenberg_all, verify_identities, HessenbergFunction, MAX_IDENTITY_N,
};
use twinllt::permco::{complete_graph_report, permutohedron_report, MAX_FACE_MODULE_N, MAX_GAUSSIAN_N};
use twinllt::symfunc::{Basis, SymFunc};
use twinllt::Error;

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "twinllt", version, about = "Exact chromatic quasisymmetric functions, unicellular LLT polynomials and their verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// The unicellular LLT polynomial of a Hessenberg function.
    Llt {
        #[arg(long)]
        h: HessenbergFunction,
        #[arg(long, default_value = "m")]
        basis: Basis,
        /// Also compute LLT_h(z; q+1) and compare it with the orientation e-expansion.
        #[arg(long)]
        shifted: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// The chromatic quasisymmetric function of a Hessenberg function.
    Csf {
        #[arg(long)]
        h: HessenbergFunction,
        #[arg(long, default_value = "m")]
        basis: Basis,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Runs a family of identity checks.
    Verify {
        #[arg(long, value_enum)]
        scope: Scope,
        #[arg(long, conflicts_with = "n")]
        h: Option<HessenbergFunction>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Latex,
    Plain,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Scope {
    Identities,
    Gkm,
    Permutohedron,
    CompleteGraph,
    All,
}

enum Failure {
    Usage(String),
    Budget(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            e if e.is_resource() => Failure::Budget(e.to_string()),
            Error::Internal(_) => Failure::Check(e.to_string()),
            e => Failure::Usage(e.to_string()),
        }
    }
}

/// One finished computation: the JSON document, a plain rendering, a
/// LaTeX fragment and whether every check passed.
struct Output {
    json: Value,
    plain: String,
    latex: String,
    passed: bool,
}

fn rendered(f: &SymFunc) -> Value {
    json!({ "value": f, "plain": f.to_plain(), "latex": f.to_latex() })
}

fn report(command: &str, inputs: Value, results: Value, checks: &[Check]) -> Value {
    let failed = checks.iter().filter(|c| !c.passed).count();
    json!({
        "command": command,
        "inputs": inputs,
        "results": results,
        "summary": { "passed": failed == 0, "checks": checks.len(), "failed": failed },
    })
}

fn check_lines(checks: &[Check]) -> String {
    checks
        .iter()
        .map(|c| match &c.detail {
            None if c.passed => format!("PASS {}\n", c.name),
            None => format!("FAIL {}\n", c.name),
            Some(d) => format!("FAIL {}: {d}\n", c.name),
        })
        .collect()
}

fn check_latex(checks: &[Check]) -> String {
    let mut out = String::from("\\begin{tabular}{ll}\n");
    for c in checks {
        let name = c.name.replace('_', "\\_").replace('^', "\\^{}");
        out.push_str(&format!("\\texttt{{{name}}} & {} \\\\\n", if c.passed { "pass" } else { "fail" }));
    }
    out.push_str("\\end{tabular}\n");
    out
}

fn cmd_coloring(h: &HessenbergFunction, basis: Basis, shifted: bool, lltflag: bool) -> Result<Output, Failure> {
    let (x, y) = coloring_functions(h)?;
    let (name, f) = if lltflag { ("llt", y) } else { ("csf", x) };
    let f = f.change_basis(basis);
    let mut results = json!({ name: rendered(&f) });
    let mut checks = Vec::new();
    let mut plain = format!("{}\n", f.to_plain());
    let mut latex = format!("{}\n", f.to_latex());
    if shifted {
        let sh = f.substitute(&twinllt::qrat::Substitution::q_plus_one());
        let orient = e_expansion_shifted(h)?;
        let pos = f.e_positive_shifted()?.positive;
        checks.push(Check::sym_eq("LLT_h(q+1) = orientation e-expansion", &sh, &orient));
        checks.push(Check::from_bool("LLT_h(q+1) is e-positive", pos, || {
            "a coefficient of the e-expansion has a negative q-coefficient".into()
        }));
        results["shifted"] = rendered(&sh);
        results["orientation_e_expansion"] = rendered(&orient.change_basis(basis));
        results["checks"] = serde_json::to_value(&checks).expect("serializable");
        plain = format!("{}\n{}", sh.to_plain(), check_lines(&checks));
        latex = format!("{}\n", sh.to_latex());
    }
    let inputs = if lltflag {
        json!({ "h": h, "basis": basis, "shifted": shifted })
    } else {
        json!({ "h": h, "basis": basis })
    };
    Ok(Output {
        json: report(name, inputs, results, &checks),
        plain,
        latex,
        passed: checks.iter().all(|c| c.passed),
    })
}

/// Hessenberg functions named by `--h` or every one of rank `--n`.
fn targets(h: &Option<HessenbergFunction>, n: Option<usize>) -> Result<Vec<HessenbergFunction>, Failure> {
    match (h, n) {
        (Some(h), _) => Ok(vec![h.clone()]),
        (None, Some(0)) => Err(Failure::Usage("--n must be positive".into())),
        (None, Some(n)) => Ok(hessenberg_all(n)?),
        (None, None) => Err(Failure::Usage("this scope needs --h or --n".into())),
    }
}

fn rank_only(scope: &str, h: &Option<HessenbergFunction>, n: Option<usize>) -> Result<usize, Failure> {
    match (h, n) {
        (Some(_), _) => Err(Failure::Usage(format!("scope {scope} takes --n, not --h"))),
        (None, Some(0)) => Err(Failure::Usage("--n must be positive".into())),
        (None, Some(n)) => Ok(n),
        (None, None) => Err(Failure::Usage(format!("scope {scope} needs --n"))),
    }
}

struct Section {
    scope: &'static str,
    results: Value,
    checks: Vec<Check>,
}

fn identities_section(hs: &[HessenbergFunction]) -> Result<Section, Failure> {
    let mut results = Vec::new();
    let mut checks = Vec::new();
    for h in hs {
        let r = verify_identities(h)?;
        results.push(serde_json::to_value(&r).expect("serializable"));
        checks.extend(prefixed(h, &r.checks));
    }
    Ok(Section { scope: "identities", results: Value::Array(results), checks })
}

fn gkm_section(hs: &[HessenbergFunction]) -> Result<Section, Failure> {
    let mut results = Vec::new();
    let mut checks = Vec::new();
    for h in hs {
        let r = gkm_report(h)?;
        results.push(serde_json::to_value(&r).expect("serializable"));
        checks.extend(prefixed(h, &r.checks));
    }
    Ok(Section { scope: "gkm", results: Value::Array(results), checks })
}

fn prefixed(h: &HessenbergFunction, checks: &[Check]) -> Vec<Check> {
    checks
        .iter()
        .map(|c| Check {
            name: format!("h = {h}: {}", c.name),
            ..c.clone()
        })
        .collect()
}

fn permco_section(scope: &'static str, n: usize) -> Result<Section, Failure> {
    let r = if scope == "permutohedron" {
        permutohedron_report(n)?
    } else {
        complete_graph_report(n)?
    };
    Ok(Section {
        scope,
        results: serde_json::to_value(&r).expect("serializable"),
        checks: r.details.clone(),
    })
}

fn cmd_verify(scope: Scope, h: &Option<HessenbergFunction>, n: Option<usize>) -> Result<Output, Failure> {
    let mut sections = Vec::new();
    let mut skipped = Vec::new();
    match scope {
        Scope::Identities => sections.push(identities_section(&targets(h, n)?)?),
        Scope::Gkm => sections.push(gkm_section(&targets(h, n)?)?),
        Scope::Permutohedron => sections.push(permco_section("permutohedron", rank_only("permutohedron", h, n)?)?),
        Scope::CompleteGraph => sections.push(permco_section("complete-graph", rank_only("complete-graph", h, n)?)?),
        Scope::All => {
            let hs = targets(h, n)?;
            let rank = hs[0].n();
            let mut run = |name: &'static str, max: usize, f: &dyn Fn() -> Result<Section, Failure>| {
                if rank <= max {
                    sections.push(f()?);
                } else {
                    skipped.push(json!({ "scope": name, "reason": format!("needs n <= {max}") }));
                }
                Ok::<(), Failure>(())
            };
            run("identities", MAX_IDENTITY_N, &|| identities_section(&hs))?;
            run("gkm", MAX_GKM_N, &|| gkm_section(&hs))?;
            if h.is_none() {
                run("permutohedron", MAX_FACE_MODULE_N, &|| permco_section("permutohedron", rank))?;
                run("complete-graph", MAX_GAUSSIAN_N, &|| permco_section("complete-graph", rank))?;
            }
        }
    }
    let checks: Vec<Check> = sections.iter().flat_map(|s| s.checks.iter().cloned()).collect();
    let mut results = serde_json::Map::new();
    for s in &sections {
        results.insert(s.scope.to_string(), s.results.clone());
    }
    if !skipped.is_empty() {
        results.insert("skipped".into(), Value::Array(skipped));
    }
    results.insert("checks".into(), serde_json::to_value(&checks).expect("serializable"));
    let inputs = json!({ "scope": scope, "h": h, "n": n });
    Ok(Output {
        json: report("verify", inputs, Value::Object(results), &checks),
        plain: check_lines(&checks),
        latex: check_latex(&checks),
        passed: checks.iter().all(|c| c.passed),
    })
}

fn exit_code(outcome: &Result<Output, Failure>) -> u8 {
    match outcome {
        Ok(out) if out.passed => 0,
        Ok(_) | Err(Failure::Check(_)) => EXIT_FAILED,
        Err(Failure::Usage(_)) => EXIT_USAGE,
        Err(Failure::Budget(_)) => EXIT_BUDGET,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let (format, outcome) = match &cli.command {
        Command::Llt { h, basis, shifted, format } => (*format, cmd_coloring(h, *basis, *shifted, true)),
        Command::Csf { h, basis, format } => (*format, cmd_coloring(h, *basis, false, false)),
        Command::Verify { scope, h, n, format } => (*format, cmd_verify(*scope, h, *n)),
    };
    let code = exit_code(&outcome);
    match outcome {
        Ok(out) => print!(
            "{}",
            match format {
                Format::Json => serde_json::to_string_pretty(&out.json).expect("serializable") + "\n",
                Format::Plain => out.plain,
                Format::Latex => out.latex,
            }
        ),
        Err(Failure::Usage(m) | Failure::Budget(m) | Failure::Check(m)) => eprintln!("error: {m}"),
    }
    eprintln!("{}", json!({ "timing_ms": start.elapsed().as_millis() }));
    ExitCode::from(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn output(passed: bool) -> Output {
        Output {
            json: Value::Null,
            plain: String::new(),
            latex: String::new(),
            passed,
        }
    }

    #[test]
    fn exit_code_contract() {
        assert_eq!(exit_code(&Ok(output(true))), 0);
        assert_eq!(exit_code(&Ok(output(false))), 1);
        assert_eq!(exit_code(&Err(Failure::Check("x".into()))), 1);
        assert_eq!(exit_code(&Err(Failure::Usage("x".into()))), 2);
        assert_eq!(exit_code(&Err(Failure::Budget("x".into()))), 3);
        assert_eq!(exit_code(&Err(Error::Budget("x".into()).into())), 3);
        assert_eq!(exit_code(&Err(Error::InvalidHessenberg("x".into()).into())), 2);
        assert_eq!(exit_code(&Err(Error::Internal("x".into()).into())), 1);
    }

    #[test]
    fn failing_check_reaches_plain_output() {
        let checks = [Check::pass("a"), Check::fail("b", "coefficient of e(2): q vs 1")];
        assert_eq!(check_lines(&checks), "PASS a\nFAIL b: coefficient of e(2): q vs 1\n");
        let v = report("verify", Value::Null, Value::Null, &checks);
        assert_eq!(v["summary"]["failed"], 1);
        assert_eq!(v["summary"]["passed"], false);
    }
}
