//! Command-line front end. [`run`] takes the full argument vector (program
//! name first) and returns the process exit code: 0 on success, 1 when an
//! algebra or report fails validation, 2 on bad input.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::fixtures;
use crate::freelie::{free_truncated_capped, generic_extension_dim, maximal_extension_capped, witt_dim};
use crate::gnla::{derivations_from_json, subspace_from_json, Derivation, Gnla};
use crate::parabolic::{decompose_layers, layer_decomposition, negative_nilradical, parabolic_grading};
use crate::prolong::{
    check_g0, default_max_degree, der0, lie_closure, prolong, prolong_report, rank_one_analysis, G0,
};
use crate::rootsys::{IrrepSum, RootSystem, Series};

pub const DEFAULT_MAX_DIM: usize = 5000;

#[derive(Parser, Debug)]
#[command(name = "tanaka", version, about = "Graded nilpotent Lie algebras and their Tanaka prolongations")]
struct Cli {
    /// Emit JSON instead of tables.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dimensions of the free Lie algebra layers.
    Witt {
        #[arg(long)]
        gens: u64,
        #[arg(long)]
        upto: u32,
    },
    /// Write the free truncated algebra f_s(n).
    Free {
        #[arg(long)]
        gens: usize,
        #[arg(long)]
        depth: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Validate an algebra and report fundamental and sub-free status.
    Check { file: PathBuf },
    /// Quotient by a graded ideal.
    Quotient {
        file: PathBuf,
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Maximal extension of a quotient of a free algebra.
    Extend {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tanaka prolongation.
    Prolong {
        file: PathBuf,
        /// `full`, `levi` (the attached action) or a g0 file.
        #[arg(long, default_value = "full")]
        g0: String,
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Rank-one (finite type) analysis.
    Ranktest {
        file: PathBuf,
        #[arg(long, default_value = "full")]
        g0: String,
    },
    /// Decompose every layer under a Cartan action.
    Decompose {
        file: PathBuf,
        /// `TYPE,RANK` such as `A,7`, or a product such as `A1xA1`.
        #[arg(long = "as")]
        as_type: String,
    },
    /// Parabolic grading of a simple Lie algebra.
    Parabolic {
        #[arg(long = "type")]
        series: String,
        #[arg(long)]
        rank: usize,
        #[arg(long, value_delimiter = ',')]
        cross: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a named fixture end to end and diff against its golden report.
    Replay {
        #[arg(long)]
        fixture: String,
        /// Directory holding `<fixture>.json` golden reports.
        #[arg(long)]
        golden: Option<PathBuf>,
    },
}

#[derive(Debug)]
enum Failure {
    /// Exit code 2.
    Input(String),
    /// Exit code 1, with the report that failed.
    Invalid(String, Output),
}

fn bad(msg: impl std::fmt::Display) -> Failure {
    Failure::Input(msg.to_string())
}

#[derive(Debug)]
struct Output {
    json: Value,
    text: String,
}

impl Output {
    fn new<T: Serialize>(report: &T, text: String) -> Self {
        Output { json: serde_json::to_value(report).expect("report serializes"), text }
    }
}

/// Resource cap on total dimension, from `TANAKA_MAX_DIM`.
pub fn max_dim() -> usize {
    std::env::var("TANAKA_MAX_DIM").ok().and_then(|v| v.parse().ok()).unwrap_or(DEFAULT_MAX_DIM)
}

/// Default location of the golden replay reports.
pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join("golden")
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let want_json = args.iter().any(|a| a == "--json");
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return 0;
            }
            if want_json {
                println!("{}", json!({"error": {"kind": "usage", "message": e.render().to_string().trim()}}));
            } else {
                eprint!("{e}");
            }
            return 2;
        }
    };
    let emit = |o: &Output| {
        if cli.json {
            println!("{}", serde_json::to_string_pretty(&o.json).expect("json"));
        } else {
            print!("{}", o.text);
        }
    };
    match execute(&cli.command) {
        Ok(o) => {
            emit(&o);
            0
        }
        Err(Failure::Invalid(msg, o)) => {
            emit(&o);
            if !cli.json {
                eprintln!("error: {msg}");
            }
            1
        }
        Err(Failure::Input(msg)) => {
            if cli.json {
                println!("{}", json!({"error": {"kind": "input", "message": msg}}));
            } else {
                eprintln!("error: {msg}");
            }
            2
        }
    }
}

fn execute(cmd: &Command) -> Result<Output, Failure> {
    match cmd {
        Command::Witt { gens, upto } => witt(*gens, *upto),
        Command::Free { gens, depth, out } => free(*gens, *depth, out.as_deref()),
        Command::Check { file } => check(&load(file)?),
        Command::Quotient { file, ideal, out } => quotient(&load(file)?, ideal, out.as_deref()),
        Command::Extend { file, out } => extend(&load(file)?, out.as_deref()),
        Command::Prolong { file, g0, max_degree } => {
            let m = load_valid(file)?;
            prolong_cmd(&m, g0, *max_degree)
        }
        Command::Ranktest { file, g0 } => {
            let m = load_valid(file)?;
            ranktest(&m, g0)
        }
        Command::Decompose { file, as_type } => decompose(&load_valid(file)?, as_type),
        Command::Parabolic { series, rank, cross, out } => parabolic(series, *rank, cross, out.as_deref()),
        Command::Replay { fixture, golden } => {
            replay(fixture, golden.clone().unwrap_or_else(golden_dir).as_path())
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| bad(format!("{}: {e}", path.display())))
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    if let Some(p) = path {
        std::fs::write(p, format!("{text}\n")).map_err(|e| bad(format!("{}: {e}", p.display())))?;
    }
    Ok(())
}

fn load(path: &Path) -> Result<Gnla, Failure> {
    let m = Gnla::from_json(&read(path)?).map_err(|e| bad(format!("{}: {e}", path.display())))?;
    let cap = max_dim();
    if m.total_dim() > cap {
        return Err(bad(format!("total dimension {} exceeds TANAKA_MAX_DIM={cap}", m.total_dim())));
    }
    Ok(m)
}

fn load_valid(path: &Path) -> Result<Gnla, Failure> {
    let m = load(path)?;
    let v = m.validate();
    if !v.is_valid() {
        let msg = v.violation.map(|x| x.to_string()).unwrap_or_default();
        let text = format!("{}: invalid ({msg})\n", m.name());
        return Err(Failure::Invalid(msg, Output::new(&json!({"algebra": m.name(), "validation": m.validate()}), text)));
    }
    Ok(m)
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn witt(gens: u64, upto: u32) -> Result<Output, Failure> {
    if gens < 1 || upto < 1 {
        return Err(bad("--gens and --upto must be positive"));
    }
    let dims: Vec<u128> = (1..=upto).map(|k| witt_dim(gens, k)).collect();
    let mut text = format!("free Lie algebra on {gens} generators\n   k  dim g-k\n");
    for (k, d) in dims.iter().enumerate() {
        let _ = writeln!(text, "{:>4}  {d}", k + 1);
    }
    let _ = writeln!(text, "dims: {}", join(&dims));
    Ok(Output::new(&json!({"gens": gens, "upto": upto, "dims": dims}), text))
}

fn free(gens: usize, depth: usize, out: Option<&Path>) -> Result<Output, Failure> {
    if gens < 2 || depth < 1 {
        return Err(bad("need --gens ≥ 2 and --depth ≥ 1"));
    }
    let m = free_truncated_capped(gens, depth, max_dim()).map_err(bad)?;
    written(&m, out)
}

/// Report for commands that produce an algebra: the spec itself goes to
/// `--out`, or to standard output when no file is given.
fn written(m: &Gnla, out: Option<&Path>) -> Result<Output, Failure> {
    let spec = m.to_json();
    write_out(out, &spec)?;
    let report = json!({
        "algebra": m.name(),
        "hash": m.hash(),
        "growth": m.growth_vector(),
        "total_dim": m.total_dim(),
        "out": out.map(|p| p.display().to_string()),
    });
    let text = match out {
        Some(p) => format!("{}: growth ({}), written to {}\n", m.name(), join(&m.growth_vector()), p.display()),
        None => format!("{spec}\n"),
    };
    Ok(Output::new(&report, text))
}

#[derive(Serialize)]
struct CheckReport {
    algebra: String,
    hash: String,
    growth: Vec<usize>,
    total_dim: usize,
    validation: crate::gnla::ValidationReport,
    fundamental: Option<crate::gnla::FundamentalReport>,
    branching: Option<crate::gnla::BranchingReport>,
    der0_dim: Option<usize>,
    subfree: Option<bool>,
}

fn check_report(m: &Gnla) -> CheckReport {
    let validation = m.validate();
    let ok = validation.is_valid();
    let d0 = ok.then(|| der0(m).dim());
    let n = m.dim(1);
    CheckReport {
        algebra: m.name().to_string(),
        hash: m.hash(),
        growth: m.growth_vector(),
        total_dim: m.total_dim(),
        fundamental: ok.then(|| m.is_fundamental()),
        branching: ok.then(|| m.check_branching()),
        der0_dim: d0,
        subfree: d0.map(|d| d == n * n),
        validation,
    }
}

fn check_text(r: &CheckReport) -> String {
    let mut t = String::new();
    let _ = writeln!(t, "algebra     {}", r.algebra);
    let _ = writeln!(t, "growth      ({})", join(&r.growth));
    let _ = writeln!(t, "dimension   {}", r.total_dim);
    let _ = writeln!(
        t,
        "grading     {}",
        if r.validation.grading_ok { "ok" } else { "FAILED" }
    );
    let _ = writeln!(
        t,
        "jacobi      {} ({} triples)",
        if r.validation.jacobi_ok { "ok" } else { "FAILED" },
        r.validation.triples_checked
    );
    if let Some(v) = &r.validation.violation {
        let _ = writeln!(t, "violation   {v}");
    }
    if let Some(f) = &r.fundamental {
        let _ = writeln!(t, "fundamental {} ({})", f.fundamental, f.reason);
    }
    if let (Some(d), Some(s)) = (r.der0_dim, r.subfree) {
        let _ = writeln!(t, "der0        {d}");
        let _ = writeln!(t, "sub-free    {s}");
    }
    t
}

fn check(m: &Gnla) -> Result<Output, Failure> {
    let r = check_report(m);
    let out = Output::new(&r, check_text(&r));
    match &r.validation.violation {
        Some(v) if !r.validation.is_valid() => Err(Failure::Invalid(v.to_string(), out)),
        _ => Ok(out),
    }
}

fn quotient(m: &Gnla, ideal: &Path, out: Option<&Path>) -> Result<Output, Failure> {
    let h = subspace_from_json(m, &read(ideal)?).map_err(bad)?;
    let q = m.quotient(&h).map_err(bad)?;
    written(&q, out)
}

fn extend(m: &Gnla, out: Option<&Path>) -> Result<Output, Failure> {
    let e = maximal_extension_capped(m, max_dim()).map_err(bad)?;
    written(&e, out)
}

/// The Lie algebra spanned by the attached Levi generators.
fn levi_g0(m: &Gnla) -> Option<Vec<Derivation>> {
    let a = m.levi_action()?;
    let gens: Vec<Derivation> = a.generators.iter().map(|g| g.derivation.clone()).collect();
    Some(lie_closure(m, &gens).basis)
}

/// Parses `--g0`; `None` stands for the full `der₀(m)`.
fn parse_g0(m: &Gnla, spec: &str) -> Result<Option<Vec<Derivation>>, Failure> {
    match spec {
        "full" => Ok(None),
        "levi" => {
            Ok(Some(levi_g0(m).ok_or_else(|| bad("algebra has no attached levi_action"))?))
        }
        path => {
            let ds = derivations_from_json(m, &read(Path::new(path))?).map_err(bad)?;
            Ok(Some(ds.into_iter().map(|d| d.derivation).collect()))
        }
    }
}

fn g0_failure(m: &Gnla, e: crate::prolong::ProlongError) -> Failure {
    let msg = e.to_string();
    let text = format!("{}: {msg}\n", m.name());
    Failure::Invalid(msg.clone(), Output::new(&json!({"algebra": m.name(), "g0_error": msg}), text))
}

fn prolong_cmd(m: &Gnla, g0: &str, max_degree: Option<usize>) -> Result<Output, Failure> {
    let given = parse_g0(m, g0)?;
    let user = given.is_some();
    let k = max_degree.unwrap_or_else(|| default_max_degree(m));
    if k == 0 {
        return Err(bad("--max-degree must be at least 1"));
    }
    let p = prolong(m, given.map_or(G0::Full, G0::Given), k).map_err(|e| g0_failure(m, e))?;
    let r = prolong_report(m, &p, user);
    let mut t = String::new();
    let _ = writeln!(t, "algebra        {}", r.algebra);
    let _ = writeln!(t, "growth         ({})", join(&r.growth));
    let gl = if r.g0_is_gl { format!(" = gl({})", m.dim(1)) } else { String::new() };
    let _ = writeln!(t, "g0             dim {}{gl}{}", r.g0_dim, if user { " (given)" } else { "" });
    for (i, d) in r.layers.iter().enumerate() {
        let _ = writeln!(t, "g{:<13} dim {d}", i + 1);
    }
    let status = match r.status {
        crate::prolong::Status::StabilizedAtZero(k) => format!("stabilized: g{k} = 0"),
        crate::prolong::Status::ReachedCap => format!("reached the cap at degree {k}"),
    };
    let _ = writeln!(t, "status         {status}");
    let _ = writeln!(t, "rank one       {:?} ({})", r.rank_one.verdict, r.rank_one.method);
    if let Some(b) = r.symmetry_bound {
        let _ = writeln!(t, "dim pr         {b}");
    }
    Ok(Output::new(&r, t))
}

fn ranktest(m: &Gnla, g0: &str) -> Result<Output, Failure> {
    let layer = match parse_g0(m, g0)? {
        None => None,
        Some(ds) => Some(check_g0(m, &ds).map_err(|e| g0_failure(m, e))?),
    };
    let r = rank_one_analysis(m, layer.as_ref(), None);
    let mut t = format!("{}: {:?} ({})\n", m.name(), r.verdict, r.method);
    if let (Some(space), Some(w)) = (&r.witness_space, &r.witness) {
        let _ = writeln!(t, "witness in {space}: ({})", w.join(", "));
    }
    if let Some(f) = &r.witness_form {
        let _ = writeln!(t, "witness form: {f}");
    }
    Ok(Output::new(&r, t))
}

/// `A,7`, `A7` or a product `A1xA1`.
fn parse_type(s: &str) -> Result<RootSystem, Failure> {
    let one = |t: &str| -> Result<(Series, usize), Failure> {
        let mut chars = t.trim().chars();
        let series = chars
            .next()
            .and_then(Series::from_letter)
            .ok_or_else(|| bad(format!("unknown type {t:?}")))?;
        let rest: String = chars.filter(|c| *c != ',').collect();
        let rank = rest.trim().parse().map_err(|_| bad(format!("bad rank in {t:?}")))?;
        Ok((series, rank))
    };
    let factors = s.split('x').map(one).collect::<Result<Vec<_>, _>>()?;
    RootSystem::product(&factors).map_err(bad)
}

fn irrep_json(rs: &RootSystem, s: &IrrepSum) -> Value {
    let terms: Vec<Value> = s.iter().map(|(w, m)| json!({"weight": w.coords(), "mult": m})).collect();
    json!({"display": rs.format_irrep_sum(s), "terms": terms})
}

fn decompose(m: &Gnla, as_type: &str) -> Result<Output, Failure> {
    let rs = parse_type(as_type)?;
    let parts = decompose_layers(m, &rs).map_err(bad)?;
    let mut t = format!("{} as a {} module\n", m.name(), rs.name());
    for (k, p) in parts.iter().enumerate() {
        let _ = writeln!(t, "g-{:<3} {}", k + 1, rs.format_irrep_sum(p));
    }
    let layers: Vec<Value> = parts.iter().map(|p| irrep_json(&rs, p)).collect();
    Ok(Output::new(&json!({"algebra": m.name(), "type": rs.name(), "layers": layers}), t))
}

fn parabolic(series: &str, rank: usize, cross: &[usize], out: Option<&Path>) -> Result<Output, Failure> {
    let mut chars = series.chars();
    let s = chars.next().and_then(Series::from_letter).ok_or_else(|| bad(format!("unknown type {series:?}")))?;
    let suffix: String = chars.collect();
    if !suffix.is_empty() && suffix.parse::<usize>().ok() != Some(rank) {
        return Err(bad(format!("--type {series} disagrees with --rank {rank}")));
    }
    if cross.is_empty() {
        return Err(bad("--cross needs at least one node"));
    }
    if s.is_valid(rank) && s.algebra_dim(rank) > max_dim() {
        return Err(bad(format!("dimension exceeds TANAKA_MAX_DIM={}", max_dim())));
    }
    let pg = parabolic_grading(s, rank, cross).map_err(bad)?;
    let lrs = pg.levi_root_system();
    let parts = (1..=pg.depth())
        .map(|k| layer_decomposition(&pg, k))
        .collect::<Result<Vec<_>, _>>()
        .map_err(bad)?;
    let summary = pg.summary();
    let mut t = String::new();
    let _ = writeln!(t, "algebra      {} crossed at {{{}}}", summary.algebra, join(&summary.crossed));
    let _ = writeln!(t, "growth       ({})", join(&summary.growth));
    let g0 = match summary.gl_rank {
        Some(n) => format!("gl({n})"),
        None => format!("{} + {}-dim center", summary.levi_type, summary.center_dim),
    };
    let _ = writeln!(t, "g0           dim {} = {g0}", summary.g0_dim);
    for (k, p) in parts.iter().enumerate() {
        let _ = writeln!(t, "g-{:<10} {}", k + 1, lrs.format_irrep_sum(p));
    }
    if let Some(p) = out {
        let m = negative_nilradical(&pg);
        write_out(Some(p), &m.to_json())?;
        let _ = writeln!(t, "m_I written to {}", p.display());
    }
    let layers: Vec<Value> = parts.iter().map(|p| irrep_json(&lrs, p)).collect();
    let mut report = serde_json::to_value(&summary).expect("summary serializes");
    report["layers"] = Value::Array(layers);
    report["out"] = json!(out.map(|p| p.display().to_string()));
    Ok(Output { json: report, text: t })
}

/// The deterministic end-to-end report of a named fixture.
pub fn replay_report(name: &str) -> Option<Value> {
    let m = fixtures::fixture(name)?;
    let mut report = json!({
        "fixture": name,
        "check": serde_json::to_value(check_report_light(&m)).expect("json"),
    });
    if let Some((s, r, node)) = fixtures::parabolic_of(name) {
        let pg = parabolic_grading(s, r, &[node]).expect("fixture grading");
        let lrs = pg.levi_root_system();
        let parts = decompose_layers(&m, &lrs).expect("levi action");
        report["levi_type"] = json!(pg.levi_type());
        report["decomposition"] = json!(parts.iter().map(|p| lrs.format_irrep_sum(p)).collect::<Vec<_>>());
        report["extension_dim"] = json!(generic_extension_dim(&m));
        if s == Series::E {
            return Some(report);
        }
        let levi = levi_g0(&m).expect("levi action");
        let p = prolong(&m, G0::Given(levi), default_max_degree(&m)).expect("levi g0");
        report["prolong_levi"] = serde_json::to_value(prolong_report(&m, &p, true)).expect("json");
    }
    let p = prolong(&m, G0::Full, default_max_degree(&m)).expect("full g0");
    report["prolong"] = serde_json::to_value(prolong_report(&m, &p, false)).expect("json");
    Some(report)
}

/// Like `check`, without `der₀`, which replay gets from the prolongation.
#[derive(Serialize)]
struct LightCheck {
    algebra: String,
    hash: String,
    growth: Vec<usize>,
    validation: crate::gnla::ValidationReport,
    fundamental: crate::gnla::FundamentalReport,
}

fn check_report_light(m: &Gnla) -> LightCheck {
    LightCheck {
        algebra: m.name().to_string(),
        hash: m.hash(),
        growth: m.growth_vector(),
        validation: m.validate(),
        fundamental: m.is_fundamental(),
    }
}

fn replay(name: &str, dir: &Path) -> Result<Output, Failure> {
    let report = replay_report(name)
        .ok_or_else(|| bad(format!("unknown fixture {name:?}; known: {}", fixtures::NAMES.join(", "))))?;
    let got = serde_json::to_string_pretty(&report).expect("json") + "\n";
    let path = dir.join(format!("{name}.json"));
    if std::env::var("TANAKA_BLESS").is_ok_and(|v| v == "1") {
        std::fs::write(&path, &got).map_err(|e| bad(format!("{}: {e}", path.display())))?;
        return Ok(Output { json: report, text: format!("{name}: blessed {}\n", path.display()) });
    }
    let want = read(&path)?;
    if want == got {
        return Ok(Output { json: report, text: format!("{name}: matches {}\n", path.display()) });
    }
    let line = want.lines().zip(got.lines()).position(|(a, b)| a != b).unwrap_or(want.lines().count().min(got.lines().count()));
    let msg = format!("{name}: report differs from {} at line {}", path.display(), line + 1);
    let out = Output { json: json!({"fixture": name, "matches": false, "first_diff_line": line + 1, "report": report}), text: format!("{msg}\n") };
    Err(Failure::Invalid(msg, out))
}
