//! The `corona` command line: argument parsing, dispatch and exit codes.
//!
//! Exit codes: 0 success, 1 usage error, 2 verification failure, 3 budget
//! refusal. Failures print a JSON object `{"ok":false,"kind":…,"message":…}`
//! on stdout.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Error;
use crate::exactla::{rational_string, PrimeField, Subspace};
use crate::matchgraph::{count_matchings, dual_matching, enumerate_matchings, minus_matching, GraphSpec, Matching, Variant};
use crate::orbitoracle::{
    build_orbit_table, census_of, fixed_point_census_of, orbit_csv, orbit_rows, FixedPointSummary, FormKind, FormSpec,
    OrbitSummary, TagCheck, DEFAULT_BUDGET,
};
use crate::quiverrep::{binary_matrix, binary_representative, symplectic_representative, symplectic_template, Classifier, VarietyPoint};
use crate::rootcalc::{admissible_roots, matching_to_rootset, rootset_json};
use crate::seqlab::{check_inequalities, interpolate_b, Family, SeqTable};
use crate::verify::{run_all, run_suite, SuiteResult};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Directory used for relative `--out` paths when set.
pub const OUT_DIR_ENV: &str = "CORONA_OUT_DIR";

#[derive(Parser, Debug)]
#[command(name = "corona", version, about = "Corona-graph matchings and Borel orbits on pairs of complementary subspaces")]
pub struct Cli {
    /// Cap on worker threads.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Write the main artifact here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Number of k-matchings.
    Count(GraphArgs),
    /// All k-matchings.
    Enumerate {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Admissible roots for (m, n), or the roots of a matching.
    Roots {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        matching: Option<String>,
    },
    /// Orbit representatives of a matching.
    Rep {
        #[arg(value_enum)]
        kind: RepKind,
        #[arg(long)]
        matching: String,
        #[arg(long, default_value_t = 3)]
        q: u32,
    },
    /// Matching of a point `{"a":[[…]],"b":[[…]]}` given by spanning rows.
    Classify {
        #[arg(long)]
        point: String,
        #[arg(long)]
        q: u32,
    },
    /// Duality on a plain matching.
    Dual {
        #[arg(long)]
        matching: String,
    },
    /// Negation on a signed matching.
    Minus {
        #[arg(long)]
        matching: String,
    },
    /// Brute-force orbit census.
    Oracle(OracleArgs),
    /// Interpolating polynomial of b_{m,n} in m.
    Bpoly {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        extra: usize,
    },
    /// Sequence table by all available routes.
    Seq {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        /// Largest p (for a, c) or m + n (for b).
        #[arg(long)]
        max: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Symmetry, unimodality, ULC and (for c) the binomial bound.
    Inequalities {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        pmax: usize,
    },
    /// Acceptance suite by name or number, or `all`.
    Verify { suite: String },
}

#[derive(Args, Debug)]
pub struct GraphArgs {
    #[arg(long, value_parser = parse_variant)]
    pub variant: Variant,
    #[arg(long)]
    pub p: usize,
    #[arg(long)]
    pub k: usize,
}

#[derive(Args, Debug)]
pub struct OracleArgs {
    #[arg(value_enum)]
    pub kind: OracleKind,
    /// `dim A` for gl; the parameter m of (2m, 2n) or (2m, 2n+1) for sp and so.
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub q: u32,
    /// Point budget.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u128,
    /// Lift the point budget entirely.
    #[arg(long)]
    pub allow_large: bool,
    /// Seed for within-orbit tag sampling.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum RepKind {
    Binary,
    Symplectic,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum OracleKind {
    Gl,
    Sp,
    So,
}

fn parse_variant(s: &str) -> Result<Variant, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Outcome of a command: the artifact and whether its checks passed.
struct Output {
    body: String,
    /// Printed on stdout when the artifact goes to a file.
    summary: Option<String>,
    passed: bool,
}

impl Output {
    fn ok(body: String) -> Self {
        Output { body, summary: None, passed: true }
    }
}

fn json_line<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable") + "\n"
}

fn field(q: u32) -> Result<PrimeField, Error> {
    PrimeField::new(q)
}

fn rows_json(rows: &[Vec<i64>]) -> Value {
    json!(rows)
}

/// Parses `argv` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                return EXIT_USAGE;
            }
            let _ = write!(stdout, "{e}");
            return EXIT_OK;
        }
    };
    if let Some(t) = cli.threads {
        if t == 0 {
            let _ = writeln!(stderr, "--threads must be positive");
            return EXIT_USAGE;
        }
        // A global pool can only be installed once per process.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    let outcome = dispatch(&cli.command, stderr);
    match outcome {
        Ok(out) => {
            if let Err(e) = emit(&out, cli.out.as_deref(), stdout) {
                let _ = writeln!(stderr, "cannot write output: {e}");
                return EXIT_USAGE;
            }
            if out.passed {
                EXIT_OK
            } else {
                EXIT_VERIFY
            }
        }
        Err(e) => {
            let code = exit_code(&e);
            let kind = match code {
                EXIT_BUDGET => "budget",
                EXIT_USAGE => "usage",
                _ => "verification",
            };
            let _ = stdout.write_all(json_line(&json!({"ok": false, "kind": kind, "message": e.to_string()})).as_bytes());
            let _ = writeln!(stderr, "error: {e}");
            code
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        Error::HomFieldDependence(..)
        | Error::HomCycle
        | Error::BadMultiplicities(_)
        | Error::JumpMismatch(_)
        | Error::RepresentativeCheck(_)
        | Error::TagDisagreement { .. }
        | Error::BCountMismatch { .. }
        | Error::DegreeDefect { .. }
        | Error::PredictionMismatch { .. } => EXIT_VERIFY,
        _ => EXIT_USAGE,
    }
}

fn resolve(path: &Path) -> PathBuf {
    match std::env::var_os(OUT_DIR_ENV) {
        Some(dir) if path.is_relative() => Path::new(&dir).join(path),
        _ => path.to_path_buf(),
    }
}

fn emit(out: &Output, path: Option<&Path>, stdout: &mut dyn Write) -> std::io::Result<()> {
    match path {
        Some(p) => {
            let p = resolve(p);
            if let Some(dir) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
                std::fs::create_dir_all(dir)?;
            }
            std::fs::write(&p, &out.body)?;
            if let Some(s) = &out.summary {
                stdout.write_all(s.as_bytes())?;
            }
            Ok(())
        }
        None => {
            if let Some(s) = out.summary.as_ref().filter(|_| out.body.is_empty()) {
                stdout.write_all(s.as_bytes())
            } else {
                stdout.write_all(out.body.as_bytes())?;
                match &out.summary {
                    Some(s) => stdout.write_all(s.as_bytes()),
                    None => Ok(()),
                }
            }
        }
    }
}

fn dispatch(cmd: &Command, stderr: &mut dyn Write) -> Result<Output, Error> {
    match cmd {
        Command::Count(g) => {
            let spec = GraphSpec::new(g.variant, g.p)?;
            Ok(Output::ok(json_line(&json!({"count": count_matchings(spec, g.k).to_string()}))))
        }
        Command::Enumerate { graph, format } => {
            let spec = GraphSpec::new(graph.variant, graph.p)?;
            let all = enumerate_matchings(spec, graph.k);
            let body = match format {
                Format::Json => json_line(&all.collect::<Vec<Matching>>()),
                Format::Csv => {
                    let mut s = String::from("index,matching\n");
                    for (i, m) in all.enumerate() {
                        s.push_str(&format!("{i},{m}\n"));
                    }
                    s
                }
            };
            Ok(Output::ok(body))
        }
        Command::Roots { m, n, matching } => {
            let body = match matching {
                Some(js) => {
                    let s = Matching::from_json(js)?;
                    rootset_json(&matching_to_rootset(&s, *m, *n)?, *m, *n) + "\n"
                }
                None => rootset_json(&admissible_roots(*m, *n), *m, *n) + "\n",
            };
            Ok(Output::ok(body))
        }
        Command::Rep { kind, matching, q } => {
            let s = Matching::from_json(matching)?;
            let f = field(*q)?;
            let body = match kind {
                RepKind::Binary => {
                    let d = s.spec().p();
                    let (_, slots) = binary_matrix(&s, f)?;
                    let g = if s.spec().variant() == Variant::Plain {
                        binary_representative(&s, s.len(), d - s.len(), f)?
                    } else {
                        let (g, _) = binary_matrix(&s, f)?;
                        let pt = VarietyPoint::from_group_element(&g, &slots)?;
                        let got = Classifier::shared(s.len(), d - s.len(), f)?.classify_point(&pt)?;
                        if got != s.to_positions() {
                            return Err(Error::RepresentativeCheck(format!("{s} classifies as {got}")));
                        }
                        g
                    };
                    json!({"matching": s, "q": q, "a_slots": slots, "matrix": rows_json(&g.to_i64_rows())})
                }
                RepKind::Symplectic => {
                    let t = symplectic_template(&s)?;
                    let g = symplectic_representative(&s, f)?;
                    let template: Vec<Vec<String>> = (0..t.nrows())
                        .map(|r| (0..t.ncols()).map(|c| rational_string(t.get(r, c))).collect())
                        .collect();
                    json!({"matching": s, "q": q, "template": template, "matrix": rows_json(&g.to_i64_rows())})
                }
            };
            Ok(Output::ok(json_line(&body)))
        }
        Command::Classify { point, q } => {
            let f = field(*q)?;
            let pt = parse_point(point, f)?;
            let s = Classifier::shared(pt.m(), pt.n(), f)?.classify_point(&pt)?;
            Ok(Output::ok(json_line(&json!({"matching": s, "m": pt.m(), "n": pt.n(), "q": q}))))
        }
        Command::Dual { matching } => Ok(Output::ok(json_line(&dual_matching(&Matching::from_json(matching)?)?))),
        Command::Minus { matching } => Ok(Output::ok(json_line(&minus_matching(&Matching::from_json(matching)?)?))),
        Command::Oracle(args) => oracle(args),
        Command::Bpoly { n, extra } => Ok(Output::ok(interpolate_b(*n, *extra)?.to_json() + "\n")),
        Command::Seq { family, max, format } => {
            let t = match family {
                Family::B => SeqTable::b_values(*max),
                f => SeqTable::rows(*f, *max)?,
            };
            let bad = t.disagreements();
            let body = match format {
                Format::Csv => t.to_csv()?,
                Format::Json => json_line(&t.entries()),
            };
            let summary = json_line(&json!({"family": family, "entries": t.entries().len(), "disagreements": bad}));
            Ok(Output { passed: bad.is_empty(), summary: (!bad.is_empty()).then_some(summary), body })
        }
        Command::Inequalities { family, pmax } => {
            let r = check_inequalities(*family, *pmax);
            Ok(Output { body: json_line(&r), summary: None, passed: r.holds() })
        }
        Command::Verify { suite } => {
            let results: Vec<SuiteResult> = if suite == "all" {
                run_all(|r| {
                    let _ = writeln!(stderr, "{r}");
                })
            } else {
                let r = run_suite(suite)?;
                let _ = writeln!(stderr, "{r}");
                vec![r]
            };
            let passed = results.iter().all(|r| r.passed);
            // Timings stay on stderr so that stdout is stable across runs.
            let suites: Vec<Value> = results
                .iter()
                .map(|r| json!({"id": r.id, "name": r.name, "passed": r.passed, "detail": r.detail}))
                .collect();
            let body = json_line(&json!({"ok": passed, "suites": suites}));
            Ok(Output { body, summary: None, passed })
        }
    }
}

fn parse_point(js: &str, f: PrimeField) -> Result<VarietyPoint, Error> {
    #[derive(serde::Deserialize)]
    struct Raw {
        a: Vec<Vec<i64>>,
        b: Vec<Vec<i64>>,
    }
    let raw: Raw = serde_json::from_str(js).map_err(|e| Error::Invalid(e.to_string()))?;
    let d = raw.a.iter().chain(&raw.b).map(Vec::len).next().unwrap_or(0);
    VarietyPoint::new(Subspace::from_rows(f, d, &raw.a)?, Subspace::from_rows(f, d, &raw.b)?)
}

fn oracle(args: &OracleArgs) -> Result<Output, Error> {
    let f = field(args.q)?;
    let budget = if args.allow_large { u128::MAX } else { args.budget };
    let check = TagCheck { seed: args.seed, ..TagCheck::default() };
    let (form_kind, (a, b)) = match args.kind {
        OracleKind::Gl => (None, (args.m, args.n)),
        OracleKind::Sp => (Some(FormKind::Symplectic), FormSpec::dims(FormKind::Symplectic, args.m, args.n)),
        OracleKind::So => (Some(FormKind::Symmetric), FormSpec::dims(FormKind::Symmetric, args.m, args.n)),
    };
    if form_kind.is_some() && f.is_binary() {
        return Err(Error::CharacteristicTwo);
    }
    let table = build_orbit_table(a, b, f, budget, check)?;
    let census = census_of(&table);
    let Some(kind) = form_kind else {
        let summary = OrbitSummary::from(&census);
        let csv = orbit_csv(&orbit_rows(&table, None, None))?;
        return Ok(Output { body: csv, summary: Some(json_line(&summary)), passed: summary.matches });
    };
    let form = FormSpec::new(kind, f, a + b)?;
    let report = fixed_point_census_of(&table, &form, args.m, args.n)?;
    let rows = match kind {
        FormKind::Symplectic => orbit_rows(&table, Some(&report), None),
        FormKind::Symmetric => orbit_rows(&table, None, Some(&report)),
    };
    let summary = FixedPointSummary::from(&report);
    let passed = summary.matches && census.matches();
    Ok(Output { body: orbit_csv(&rows)?, summary: Some(json_line(&summary)), passed })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("corona").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn count_example() {
        let (code, out, _) = call(&["count", "--variant", "plain", "--p", "6", "--k", "3"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, "{\"count\":\"215\"}\n");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["count", "--variant", "plain"]).0, EXIT_USAGE);
        assert_eq!(call(&["count", "--variant", "signed", "--p", "3", "--k", "1"]).0, EXIT_USAGE);
        assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn oracle_summary_and_budget() {
        let (code, out, _) = call(&["oracle", "gl", "--m", "2", "--n", "2", "--q", "2"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("orbit_id,size,matching_json,has_sp_point,has_so_point\n"));
        assert!(out.ends_with("{\"m\":2,\"n\":2,\"q\":2,\"total_points\":560,\"orbit_count\":21,\"expected_count\":\"21\",\"match\":true}\n"));
        let (code, out, _) = call(&["oracle", "gl", "--m", "2", "--n", "2", "--q", "2", "--budget", "100"]);
        assert_eq!(code, EXIT_BUDGET);
        assert!(out.contains("\"kind\":\"budget\""));
        let (code, out, _) = call(&["oracle", "sp", "--m", "1", "--n", "1", "--q", "3"]);
        assert_eq!(code, EXIT_OK, "{out}");
        assert!(out.contains("\"orbit_count\":4"));
    }

    #[test]
    fn bpoly_example() {
        let (code, out, _) = call(&["bpoly", "--n", "1", "--extra", "2"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("\"leading\":\"7/6\"") && out.contains("\"integral\":false"));
        assert!(out.contains("\"coefficients\":[\"1/1\",\"7/3\",\"5/2\",\"7/6\"]"));
    }

    #[test]
    fn matching_commands() {
        let s = r#"{"graph":{"variant":"plain","p":3},"edges":[{"kind":"pendant","i":1}]}"#;
        let (code, out, _) = call(&["dual", "--matching", s]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(Matching::from_json(out.trim()).unwrap().len(), 2);
        let (code, out, _) = call(&["rep", "binary", "--matching", s, "--q", "2"]);
        assert_eq!(code, EXIT_OK, "{out}");
        assert!(out.contains("\"matrix\":[[1,0,0],[0,1,0],[0,0,1]]"));
        let (code, out, _) = call(&["classify", "--point", r#"{"a":[[1,1]],"b":[[0,1]]}"#, "--q", "3"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("\"kind\":\"internal\""));
        assert_eq!(call(&["minus", "--matching", s]).0, EXIT_USAGE);
    }

    #[test]
    fn output_files() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("nested/a.csv");
        let (code, out, _) = call(&["seq", "--family", "a", "--max", "4", "--out", path.to_str().unwrap()]);
        assert_eq!(code, EXIT_OK);
        assert!(out.is_empty());
        let written = std::fs::read_to_string(&path).unwrap();
        assert!(written.contains("a,4;2,21,recurrence"));
    }
}
