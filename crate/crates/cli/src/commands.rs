use std::fs;
use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use leech_cusp::field::json::JsonInt;
use leech_cusp::field::RealQuad;
use leech_cusp::leech::{self, LeechLattice, LeechPoint};
use leech_cusp::lorentz::{is_leech_root, AmbientVector, Root};
use leech_cusp::reduction::{self, ReductionError, ReductionTrace};

pub const EXIT_PARSE: u8 = 2;
pub const EXIT_CHECK: u8 = 3;
pub const EXIT_RECIPE: u8 = 4;

pub struct CliError {
    pub code: u8,
    pub message: String,
}

fn parse_error(msg: impl Into<String>) -> CliError {
    CliError { code: EXIT_PARSE, message: msg.into() }
}

fn check_error(msg: impl Into<String>) -> CliError {
    CliError { code: EXIT_CHECK, message: msg.into() }
}

#[derive(Serialize)]
struct Check {
    name: String,
    pass: bool,
}

/// The single JSON document each command prints.
#[derive(Serialize)]
struct CommandReport {
    command: &'static str,
    results: Value,
    checks: Vec<Check>,
    pass: bool,
    duration_ms: u64,
}

struct Reporter {
    command: &'static str,
    start: Instant,
    checks: Vec<Check>,
}

impl Reporter {
    fn new(command: &'static str) -> Self {
        Reporter { command, start: Instant::now(), checks: Vec::new() }
    }

    fn check(&mut self, name: impl Into<String>, pass: bool) {
        self.checks.push(Check { name: name.into(), pass });
    }

    /// Prints the report; exit 0 when every check passed, 3 otherwise.
    fn finish(self, results: Value) -> Result<ExitCode, CliError> {
        let pass = self.checks.iter().all(|c| c.pass);
        let report = CommandReport {
            command: self.command,
            results,
            checks: self.checks,
            pass,
            duration_ms: u64::try_from(self.start.elapsed().as_millis()).unwrap_or(u64::MAX),
        };
        println!("{}", serde_json::to_string_pretty(&report).expect("reports serialize"));
        Ok(if pass { ExitCode::SUCCESS } else { ExitCode::from(EXIT_CHECK) })
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("exact encodings serialize")
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path).map_err(|e| parse_error(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| parse_error(format!("{}: {e}", path.display())))
}

fn read_root(path: &Path) -> Result<Root, CliError> {
    let v: AmbientVector = read_json(path)?;
    Root::new(v).map_err(|e| parse_error(e.to_string()))
}

fn write_json<T: Serialize>(path: &Path, x: &T) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(x).expect("exact encodings serialize");
    fs::write(path, text + "\n").map_err(|e| parse_error(format!("{}: {e}", path.display())))
}

#[derive(Deserialize)]
#[serde(untagged)]
enum BasisFile {
    Object { basis: Vec<LeechPoint> },
    List(Vec<LeechPoint>),
}

pub fn verify_lattice(full_enumeration: bool, basis: Option<&Path>) -> Result<ExitCode, CliError> {
    let mut r = Reporter::new("verify-lattice");
    let owned;
    let lattice: &LeechLattice = match basis {
        None => leech::standard(),
        Some(path) => {
            let rows = match read_json::<BasisFile>(path)? {
                BasisFile::Object { basis } | BasisFile::List(basis) => basis,
            };
            owned = LeechLattice::from_basis(rows).map_err(|e| check_error(e.to_string()))?;
            &owned
        }
    };
    let c = lattice.verify();
    r.check("minimal norm 6", c.min_norm_is_6());
    r.check("theta times its dual", c.theta_dual());
    r.check("determinant 729", c.det_is_729());
    let mut results = json!({ "lattice": to_value(&c) });
    if full_enumeration {
        let n = lattice.min_vectors(6);
        r.check("196560 vectors of norm 6", n == 196_560);
        results["norm6_count"] = json!(n);
    }
    r.finish(results)
}

pub fn classify(input: &Path) -> Result<ExitCode, CliError> {
    let r = Reporter::new("classify");
    let s = read_root(input)?;
    let m = s.m();
    let mut results = json!({
        "root": to_value(&s),
        "m": to_value(&m),
        "m_sq": to_value(&JsonInt(m.norm())),
        "height": to_value(&JsonInt(s.rho_height())),
        "is_leech_root": is_leech_root(&s),
    });
    if m.norm() == 3.into() {
        let n = reduction::normalize_m_theta(&s).map_err(|e| check_error(e.to_string()))?;
        results["coset_tag"] = to_value(&n.tag);
        results["normalized"] = to_value(&n.normalized);
    }
    r.finish(results)
}

pub fn reduce(input: &Path, output: &Path) -> Result<ExitCode, CliError> {
    let mut r = Reporter::new("reduce");
    let s = read_root(input)?;
    let trace = match reduction::reduce_to_leech(&s) {
        Ok(t) => t,
        Err(e @ ReductionError::RecipeFailed { .. }) => return Err(CliError { code: EXIT_RECIPE, message: e.to_string() }),
        Err(e) => return Err(check_error(e.to_string())),
    };
    write_json(output, &trace)?;
    let heights: Vec<RealQuad> = trace.heights();
    r.check("heights strictly decrease", heights.windows(2).all(|w| w[1] < w[0]));
    r.check("final root is a Leech root", is_leech_root(&trace.final_root));
    let cases: Vec<Value> = trace.steps.iter().map(|st| to_value(&st.case)).collect();
    r.finish(json!({
        "certificate": output.display().to_string(),
        "steps": trace.steps.len(),
        "heights": to_value(&heights),
        "cases": cases,
        "final": to_value(&trace.final_root),
    }))
}

pub fn verify_cert(path: &Path) -> Result<ExitCode, CliError> {
    let mut r = Reporter::new("verify-cert");
    let trace: ReductionTrace = read_json(path)?;
    let outcome = reduction::verify_trace(&trace);
    r.check("certificate re-verifies", outcome.is_ok());
    let failure = outcome.err().map(|e| json!({ "step": e.step, "reason": e.reason }));
    r.finish(json!({ "steps": trace.steps.len(), "failure": failure }))
}

pub fn overlap_constants() -> Result<ExitCode, CliError> {
    let mut r = Reporter::new("lemma54");
    let constants = reduction::overlap_constants().map_err(|e| check_error(e.to_string()))?;
    for c in &constants {
        r.check(c.name.clone(), c.matches);
    }
    r.finish(json!({ "constants": to_value(&constants) }))
}

pub fn corners(m_sq: i64) -> Result<ExitCode, CliError> {
    let mut r = Reporter::new("corners");
    if m_sq < 3 {
        return Err(parse_error("--m-sq must be at least 3"));
    }
    let report = reduction::verify_region_corners(m_sq);
    if let Some(cert) = &report.excluded_disks {
        r.check("excluded disks cover the gap", cert.holds);
    }
    r.finish(to_value(&report))
}

pub fn sample_roots(count: usize, max_word: usize, seed: u64, output: Option<&Path>) -> Result<ExitCode, CliError> {
    if count == 0 {
        return Err(parse_error("count must be positive"));
    }
    let roots = reduction::sample_roots(count, max_word, seed);
    let doc = json!({
        "generator": "ChaCha8Rng::seed_from_u64",
        "seed": seed,
        "count": count,
        "max_word": max_word,
        "roots": to_value(&roots),
    });
    match output {
        Some(path) => {
            write_json(path, &doc)?;
            let r = Reporter::new("sample-roots");
            r.finish(json!({ "written": path.display().to_string(), "count": count, "seed": seed }))
        }
        None => {
            println!("{}", serde_json::to_string_pretty(&doc).expect("roots serialize"));
            Ok(ExitCode::SUCCESS)
        }
    }
}
