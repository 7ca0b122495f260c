//! Command-line frontend. All logic lives in the library; the binary in
//! `main.rs` only forwards `std::env::args` here.
//!
//! Exit codes: 0 success, 1 computation error, 2 usage error. `--json`
//! switches from human-readable tables to a run record with a stable schema:
//! `{command, parameters, results, wall_ms, version, seed?}`.

use std::fmt::Write as _;
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::{json, Value};

use crate::bounds;
use crate::constructions::{Family, FamilySpec};
use crate::hardcore;
use crate::hypergraph::{validate, Hypergraph};
use crate::lp;
use crate::strong;
use crate::weak;

#[derive(Parser)]
#[command(name = "hyperocc", version, about = "Independent-set counts and occupancy bounds for uniform regular linear hypergraphs")]
struct Cli {
    /// Emit a machine-readable JSON run record instead of tables
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for sweeps (default: HYPEROCC_THREADS, else 1)
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named hypergraph family and write its document
    Construct(ConstructArgs),
    /// Structural report: uniformity, regularity, linearity, cross edges
    Validate { file: String },
    /// Exact number of k-independent sets
    Count {
        file: String,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = hardcore::DEFAULT_ENUM_BUDGET)]
        budget: u64,
    },
    /// Independence polynomial coefficients (decimal strings)
    Poly {
        file: String,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = hardcore::DEFAULT_ENUM_BUDGET)]
        budget: u64,
    },
    /// Exact occupancy fraction at a fugacity ("1/2" for exact rationals)
    Occupancy(OccupancyArgs),
    /// Glauber-dynamics estimate of the occupancy fraction
    Sample(SampleArgs),
    /// Weak-IS occupancy bound, LP cross-check, and dual certificate
    WeakBound(WeakBoundArgs),
    /// Strong-IS occupancy bound, LP cross-check, and dual certificate
    StrongBound(StrongBoundArgs),
    /// Integrated log2(count)/n bounds over a ladder of degrees
    Bound(BoundArgs),
    /// Asymptotic second-order constants
    Constants(ConstantsArgs),
    /// Construction count vs conjectured bound
    Gap(GapArgs),
    /// Dual-certificate feasibility sweeps; nonzero exit on violation
    Certify(CertifyArgs),
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long)]
    family: String,
    /// Uniformity (families with fixed uniformity ignore it)
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    d: usize,
    /// Output path (stdout when omitted)
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct OccupancyArgs {
    file: String,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    lambda: String,
    /// Compare against the weak or strong occupancy bound
    #[arg(long, value_enum)]
    check_bound: Option<BoundMode>,
    /// Recompute by direct enumeration and require exact agreement
    #[arg(long)]
    verify_direct: bool,
    #[arg(long, default_value_t = hardcore::DEFAULT_ENUM_BUDGET)]
    budget: u64,
}

#[derive(Args)]
struct SampleArgs {
    file: String,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    lambda: f64,
    #[arg(long)]
    steps: u64,
    #[arg(long, default_value_t = 10_000)]
    burnin: u64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Args)]
struct WeakBoundArgs {
    #[arg(long)]
    r: usize,
    #[arg(long)]
    d: usize,
    #[arg(long)]
    lambda: Option<f64>,
    /// Integrate the bound over (0,1] instead of evaluating at one fugacity
    #[arg(long)]
    integrate: bool,
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// Exit nonzero unless the dual certificate is feasible
    #[arg(long)]
    certify: bool,
    /// Write the LP matrix as CSV
    #[arg(long)]
    dump_lp: Option<String>,
}

#[derive(Args)]
struct StrongBoundArgs {
    #[arg(long, default_value_t = 3)]
    r: usize,
    #[arg(long)]
    d: usize,
    #[arg(long)]
    lambda: Option<f64>,
    #[arg(long)]
    integrate: bool,
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    #[arg(long)]
    certify: bool,
    /// Allow r != 3 (the bound is unproven there; evidence only)
    #[arg(long)]
    explore_r: bool,
    #[arg(long)]
    dump_lp: Option<String>,
}

#[derive(Args)]
struct BoundArgs {
    #[arg(long, value_enum)]
    mode: BoundMode,
    #[arg(long, default_value_t = 3)]
    r: usize,
    /// Comma-separated degrees, e.g. 100,1000,10000
    #[arg(long)]
    d: String,
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// Write CSV rows (d, bound, second_order, scaled_second_order); "-" for stdout
    #[arg(long)]
    csv: Option<String>,
}

#[derive(Args)]
struct ConstantsArgs {
    /// Weak-count constant c_{w,r} for this uniformity
    #[arg(long)]
    cw: Option<usize>,
    /// Strong-count constant c_{s,3}
    #[arg(long)]
    cs3: bool,
    #[arg(long, default_value_t = 1e-7)]
    tol: f64,
}

#[derive(Args)]
struct GapArgs {
    #[arg(long)]
    family: String,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    d: usize,
    #[arg(long)]
    k: usize,
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
}

#[derive(Args)]
struct CertifyArgs {
    #[arg(long, default_value_t = 3)]
    r: usize,
    #[arg(long)]
    d: usize,
    #[arg(long, value_enum, default_value_t = CertifyMode::Both)]
    mode: CertifyMode,
    /// Comma-separated fugacities; default 0.1,0.2,...,1.0
    #[arg(long)]
    grid: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BoundMode {
    Weak,
    Strong,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CertifyMode {
    Weak,
    Strong,
    Both,
}

#[derive(Serialize)]
struct RunRecord {
    command: String,
    parameters: Value,
    results: Value,
    wall_ms: f64,
    version: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
}

struct Output {
    parameters: Value,
    results: Value,
    human: String,
    seed: Option<u64>,
    /// Violations found by a --certify run force a nonzero exit
    failed: bool,
}

type CommandResult = Result<Output, String>;

/// Entry point used by the binary; returns the process exit code.
pub fn run<I>(args: I) -> i32
where
    I: IntoIterator<Item = String>,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            // clap uses exit code 2 for usage errors, 0 for --help/--version
            let _ = err.print();
            return if err.use_stderr() { 2 } else { 0 };
        }
    };
    let threads = cli
        .threads
        .or_else(|| std::env::var("HYPEROCC_THREADS").ok().and_then(|v| v.parse().ok()))
        .unwrap_or(1)
        .max(1);
    let started = Instant::now();
    let name = command_name(&cli.command);
    match execute(&cli.command, threads) {
        Ok(out) => {
            if cli.json {
                let record = RunRecord {
                    command: name.to_string(),
                    parameters: out.parameters,
                    results: out.results,
                    wall_ms: started.elapsed().as_secs_f64() * 1e3,
                    version: env!("CARGO_PKG_VERSION").to_string(),
                    seed: out.seed,
                };
                println!("{}", serde_json::to_string_pretty(&record).expect("serializable"));
            } else {
                print!("{}", out.human);
            }
            if out.failed {
                1
            } else {
                0
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            1
        }
    }
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Construct(_) => "construct",
        Command::Validate { .. } => "validate",
        Command::Count { .. } => "count",
        Command::Poly { .. } => "poly",
        Command::Occupancy(_) => "occupancy",
        Command::Sample(_) => "sample",
        Command::WeakBound(_) => "weak-bound",
        Command::StrongBound(_) => "strong-bound",
        Command::Bound(_) => "bound",
        Command::Constants(_) => "constants",
        Command::Gap(_) => "gap",
        Command::Certify(_) => "certify",
    }
}

fn execute(cmd: &Command, threads: usize) -> CommandResult {
    match cmd {
        Command::Construct(args) => construct(args),
        Command::Validate { file } => validate_cmd(file),
        Command::Count { file, k, budget } => count_cmd(file, *k, *budget),
        Command::Poly { file, k, budget } => poly_cmd(file, *k, *budget),
        Command::Occupancy(args) => occupancy_cmd(args),
        Command::Sample(args) => sample_cmd(args),
        Command::WeakBound(args) => weak_bound_cmd(args),
        Command::StrongBound(args) => strong_bound_cmd(args),
        Command::Bound(args) => bound_cmd(args),
        Command::Constants(args) => constants_cmd(args),
        Command::Gap(args) => gap_cmd(args),
        Command::Certify(args) => certify_cmd(args, threads),
    }
}

/// 12 significant digits, the documented float format.
fn sig12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    format!("{x:.11e}")
}

fn parse_family(name: &str, r: Option<usize>, d: usize) -> Result<FamilySpec, String> {
    let family = Family::from_name(name)
        .ok_or_else(|| format!("unknown family '{name}' (kdd, krrt, tripartite-k, mod3, h4, hrd)"))?;
    let spec = match family {
        Family::Kdd => FamilySpec::kdd(d),
        Family::Krrt => FamilySpec::krrt(r.ok_or("krrt requires --r")?),
        Family::TripartiteK => FamilySpec::tripartite_k(d),
        Family::Mod3 => FamilySpec::mod3(d),
        Family::H4 => FamilySpec::h4(d),
        Family::Hrd => FamilySpec::hrd(r.ok_or("hrd requires --r")?, d),
    };
    Ok(spec)
}

fn load_hypergraph(path: &str) -> Result<Hypergraph, String> {
    let bytes = std::fs::read(path).map_err(|e| format!("{path}: {e}"))?;
    Hypergraph::load(&bytes).map_err(|e| format!("{path}: {e}"))
}

fn construct(args: &ConstructArgs) -> CommandResult {
    let spec = parse_family(&args.family, args.r, args.d)?;
    let h = spec.build().map_err(|e| e.to_string())?;
    let meta = json!({
        "family": spec.family.name(),
        "r": spec.uniformity(),
        "d": spec.regularity(),
    });
    let doc = h.save_with_meta(Some(meta));
    let mut human = String::new();
    match &args.out {
        Some(path) => {
            std::fs::write(path, &doc).map_err(|e| format!("{path}: {e}"))?;
            let _ = writeln!(
                human,
                "{}: n={} edges={} -> {}",
                spec.family.name(),
                h.vertex_count(),
                h.edge_count(),
                path
            );
        }
        None => human = String::from_utf8(doc).expect("utf8 json"),
    }
    Ok(Output {
        parameters: json!({"family": spec.family.name(), "r": spec.uniformity(), "d": spec.regularity(), "out": args.out}),
        results: json!({"n": h.vertex_count(), "edges": h.edge_count()}),
        human,
        seed: None,
        failed: false,
    })
}

fn validate_cmd(file: &str) -> CommandResult {
    let h = load_hypergraph(file)?;
    let report = validate(&h);
    let mut human = String::new();
    let fmt_opt = |x: Option<usize>| x.map_or("-".to_string(), |v| v.to_string());
    let _ = writeln!(human, "n                {}", h.vertex_count());
    let _ = writeln!(human, "edges            {}", h.edge_count());
    let _ = writeln!(human, "uniform r        {}", fmt_opt(report.uniform_r));
    let _ = writeln!(human, "regular d        {}", fmt_opt(report.regular_d));
    let _ = writeln!(human, "linear           {}", report.is_linear);
    let _ = writeln!(human, "cross-edge free  {}", report.is_cross_edge_free);
    if let Some((u, v, e1, e2)) = report.witnesses.nonlinear {
        let _ = writeln!(human, "  pair {{{u},{v}}} lies in edges {e1} and {e2}");
    }
    if let Some((v, e)) = report.witnesses.cross_edge {
        let _ = writeln!(human, "  edge {e} is a cross edge in the neighborhood of {v}");
    }
    Ok(Output {
        parameters: json!({"file": file}),
        results: serde_json::to_value(&report).expect("serializable"),
        human,
        seed: None,
        failed: false,
    })
}

fn count_cmd(file: &str, k: usize, budget: u64) -> CommandResult {
    let h = load_hypergraph(file)?;
    let count = hardcore::count_with_budget(&h, k, budget).map_err(|e| e.to_string())?;
    Ok(Output {
        parameters: json!({"file": file, "k": k, "budget": budget}),
        results: json!({"count": count.to_string()}),
        human: format!("{count}\n"),
        seed: None,
        failed: false,
    })
}

fn poly_cmd(file: &str, k: usize, budget: u64) -> CommandResult {
    let h = load_hypergraph(file)?;
    let poly =
        hardcore::independence_polynomial_with_budget(&h, k, budget).map_err(|e| e.to_string())?;
    let coeffs: Vec<String> = poly.coeffs.iter().map(|c| c.to_string()).collect();
    let mut human = String::new();
    for (m, c) in poly.coeffs.iter().enumerate() {
        let _ = writeln!(human, "{m:>4}  {c}");
    }
    Ok(Output {
        parameters: json!({"file": file, "k": k, "budget": budget}),
        results: json!({"coeffs": coeffs, "total": poly.total().to_string()}),
        human,
        seed: None,
        failed: false,
    })
}

fn parse_lambda_rational(text: &str) -> Result<BigRational, String> {
    if let Some((num, den)) = text.split_once('/') {
        let p = num_bigint::BigInt::from_str(num.trim()).map_err(|e| e.to_string())?;
        let q = num_bigint::BigInt::from_str(den.trim()).map_err(|e| e.to_string())?;
        if q == 0.into() {
            return Err("fugacity denominator is zero".into());
        }
        Ok(BigRational::new(p, q))
    } else {
        let x: f64 = text.parse().map_err(|e| format!("bad fugacity '{text}': {e}"))?;
        BigRational::from_float(x).ok_or_else(|| format!("bad fugacity '{text}'"))
    }
}

fn occupancy_cmd(args: &OccupancyArgs) -> CommandResult {
    let h = load_hypergraph(&args.file)?;
    let lambda = parse_lambda_rational(&args.lambda)?;
    let lambda_f = lambda.to_f64().ok_or("fugacity out of f64 range")?;
    let poly = hardcore::independence_polynomial_with_budget(&h, args.k, args.budget)
        .map_err(|e| e.to_string())?;
    let occ = hardcore::occupancy_exact(&poly, &lambda).map_err(|e| e.to_string())?;
    let occ_f = occ.to_f64().expect("fraction fits f64");

    let mut results = json!({
        "k": args.k,
        "lambda": lambda_f,
        "occupancy": occ_f,
        "occupancy_exact": occ.to_string(),
    });
    let mut human = String::new();
    let _ = writeln!(human, "occupancy        {}  (= {})", sig12(occ_f), occ);

    if args.verify_direct {
        let direct = hardcore::occupancy_direct(&h, args.k, &lambda, args.budget)
            .map_err(|e| e.to_string())?;
        let matches = direct == occ;
        results["direct_matches"] = json!(matches);
        results["occupancy_direct"] = json!(direct.to_string());
        let _ = writeln!(human, "direct route     {}  match={}", direct, matches);
        if !matches {
            return Err(format!(
                "occupancy routes disagree: derivative {occ} vs direct {direct}"
            ));
        }
    }

    if let Some(mode) = args.check_bound {
        let report = validate(&h);
        let (r, d) = match (report.uniform_r, report.regular_d) {
            (Some(r), Some(d)) => (r, d),
            _ => return Err("bound comparison needs a uniform regular hypergraph".into()),
        };
        let (bound, name) = match mode {
            BoundMode::Strong => {
                if args.k != 2 {
                    return Err("--check-bound strong applies to k = 2".into());
                }
                (
                    strong::alpha_strong(r, d, lambda_f).map_err(|e| e.to_string())?.value,
                    "alpha_s",
                )
            }
            BoundMode::Weak => {
                if args.k != r {
                    return Err(format!("--check-bound weak applies to k = r = {r}"));
                }
                (weak::alpha_weak(r, d, lambda_f).map_err(|e| e.to_string())?, "alpha_w")
            }
        };
        let satisfied = occ_f <= bound + 1e-10;
        results["bound"] = json!(bound);
        results["bound_satisfied"] = json!(satisfied);
        let _ = writeln!(human, "{name:<16} {}  occupancy <= bound: {}", sig12(bound), satisfied);
        if !satisfied {
            return Err(format!("occupancy {occ_f} exceeds the bound {bound}"));
        }
    }

    Ok(Output {
        parameters: json!({"file": args.file, "k": args.k, "lambda": args.lambda}),
        results,
        human,
        seed: None,
        failed: false,
    })
}

fn sample_cmd(args: &SampleArgs) -> CommandResult {
    let h = load_hypergraph(&args.file)?;
    let est = hardcore::glauber_estimate(&h, args.k, args.lambda, args.steps, args.burnin, args.seed)
        .map_err(|e| e.to_string())?;
    let human = format!(
        "mean             {}\nstderr           {}\nsteps            {}\nseed             {}\n",
        sig12(est.mean),
        sig12(est.stderr),
        est.steps,
        est.seed
    );
    Ok(Output {
        parameters: json!({
            "file": args.file, "k": args.k, "lambda": args.lambda,
            "steps": args.steps, "burnin": args.burnin,
        }),
        results: serde_json::to_value(&est).expect("serializable"),
        human,
        seed: Some(args.seed),
        failed: false,
    })
}

fn weak_bound_cmd(args: &WeakBoundArgs) -> CommandResult {
    let parameters = json!({"r": args.r, "d": args.d, "lambda": args.lambda, "integrate": args.integrate, "tol": args.tol});
    if args.integrate || args.lambda.is_none() {
        let report = bounds::weak_bound(args.r, args.d, args.tol).map_err(|e| e.to_string())?;
        let human = format!(
            "bound            {}\nleading          {}\nsecond order     {}\nconjecture       {}\n",
            sig12(report.bound),
            sig12(report.leading),
            sig12(report.second_order),
            sig12(report.conjecture_value),
        );
        return Ok(Output {
            parameters,
            results: serde_json::to_value(&report).expect("serializable"),
            human,
            seed: None,
            failed: false,
        });
    }
    let lambda = args.lambda.expect("checked above");
    let alpha = weak::alpha_weak(args.r, args.d, lambda).map_err(|e| e.to_string())?;
    let lp_problem = weak::build_weak_lp(args.r, args.d, lambda).map_err(|e| e.to_string())?;
    if let Some(path) = &args.dump_lp {
        std::fs::write(path, lp_problem.to_csv()).map_err(|e| format!("{path}: {e}"))?;
    }
    let sol = lp::solve(&lp_problem).map_err(|e| e.to_string())?;
    let cert = weak::weak_dual_certificate(args.r, args.d, lambda).map_err(|e| e.to_string())?;
    let failed = args.certify && !cert.feasible;
    let results = json!({
        "alpha": alpha,
        "lp_value": sol.value,
        "dual": {"Lambda_p": cert.certificate.lambda_p, "Lambda_c": cert.certificate.lambda_c},
        "worst_slack": cert.worst_slack,
        "feasible": cert.feasible,
    });
    let human = format!(
        "alpha_w          {}\nlp value         {}  (lambda x value = {})\nLambda_p         {}\nLambda_c         {}\nworst slack      {}  feasible={}\n",
        sig12(alpha),
        sig12(sol.value),
        sig12(lambda * sol.value),
        sig12(cert.certificate.lambda_p),
        sig12(cert.certificate.lambda_c),
        sig12(cert.worst_slack),
        cert.feasible,
    );
    Ok(Output { parameters, results, human, seed: None, failed })
}

fn strong_bound_cmd(args: &StrongBoundArgs) -> CommandResult {
    if args.r != 3 && !args.explore_r {
        return Err("the strong bound is proved for r = 3; pass --explore-r to evaluate anyway".into());
    }
    let parameters = json!({"r": args.r, "d": args.d, "lambda": args.lambda, "integrate": args.integrate, "tol": args.tol});
    if args.integrate || args.lambda.is_none() {
        if args.r != 3 {
            return Err("--integrate supports r = 3 only".into());
        }
        let report = bounds::strong_bound(args.d, args.tol).map_err(|e| e.to_string())?;
        let human = format!(
            "bound            {}\nleading          {}\nsecond order     {}\nconjecture       {}\n",
            sig12(report.bound),
            sig12(report.leading),
            sig12(report.second_order),
            sig12(report.conjecture_value),
        );
        return Ok(Output {
            parameters,
            results: serde_json::to_value(&report).expect("serializable"),
            human,
            seed: None,
            failed: false,
        });
    }
    let lambda = args.lambda.expect("checked above");
    let alpha = strong::alpha_strong(args.r, args.d, lambda).map_err(|e| e.to_string())?;
    let lp_problem = strong::build_strong_lp(args.r, args.d, lambda).map_err(|e| e.to_string())?;
    if let Some(path) = &args.dump_lp {
        std::fs::write(path, lp_problem.to_csv()).map_err(|e| format!("{path}: {e}"))?;
    }
    let sol = lp::solve(&lp_problem).map_err(|e| e.to_string())?;
    let cert = strong::strong_dual(args.r, args.d, lambda).map_err(|e| e.to_string())?;
    let slack = strong::slack_check(args.r, args.d, lambda, &cert).map_err(|e| e.to_string())?;
    let failed = args.certify && !slack.feasible;
    let results = json!({
        "alpha": alpha.value,
        "proven": alpha.proven,
        "lp_value": sol.value,
        "Lambda": cert.lambda,
        "Lambdas": cert.lambdas,
        "c": cert.c,
        "min_slack": slack.min_slack,
        "feasible": slack.feasible,
        "sampled": slack.sampled,
    });
    let human = format!(
        "alpha_s          {}  proven={}\nlp value         {}  (lambda x value = {})\nLambda           {}\nc                {}\nmin slack        {}  feasible={}\n",
        sig12(alpha.value),
        alpha.proven,
        sig12(sol.value),
        sig12(lambda * sol.value),
        sig12(cert.lambda),
        cert.c.iter().map(|&x| sig12(x)).collect::<Vec<_>>().join(" "),
        sig12(slack.min_slack),
        slack.feasible,
    );
    Ok(Output { parameters, results, human, seed: None, failed })
}

fn bound_cmd(args: &BoundArgs) -> CommandResult {
    let ds: Result<Vec<usize>, _> = args.d.split(',').map(|s| s.trim().parse::<usize>()).collect();
    let ds = ds.map_err(|e| format!("bad --d list: {e}"))?;
    if ds.is_empty() {
        return Err("--d needs at least one degree".into());
    }
    let mut reports = Vec::new();
    let mut csv = String::from("d,bound,second_order,scaled_second_order\n");
    for &d in &ds {
        let report = match args.mode {
            BoundMode::Weak => bounds::weak_bound(args.r, d, args.tol),
            BoundMode::Strong => bounds::strong_bound(d, args.tol),
        }
        .map_err(|e| e.to_string())?;
        let scale = match args.mode {
            BoundMode::Weak => (d as f64).powf(1.0 / (args.r as f64 - 1.0)),
            BoundMode::Strong => d as f64,
        };
        let _ = writeln!(
            csv,
            "{d},{},{},{}",
            sig12(report.bound),
            sig12(report.second_order),
            sig12(report.second_order * scale)
        );
        reports.push(report);
    }
    let mut human = String::new();
    if let Some(path) = &args.csv {
        if path == "-" {
            human = csv.clone();
        } else {
            std::fs::write(path, &csv).map_err(|e| format!("{path}: {e}"))?;
            let _ = writeln!(human, "wrote {path}");
        }
    }
    if human.is_empty() {
        for report in &reports {
            let _ = writeln!(
                human,
                "d={:<7} bound={}  second_order={}",
                report.d,
                sig12(report.bound),
                sig12(report.second_order)
            );
        }
    }
    Ok(Output {
        parameters: json!({"mode": if args.mode == BoundMode::Weak {"weak"} else {"strong"}, "r": args.r, "d": ds, "tol": args.tol}),
        results: serde_json::to_value(&reports).expect("serializable"),
        human,
        seed: None,
        failed: false,
    })
}

fn constants_cmd(args: &ConstantsArgs) -> CommandResult {
    let (name, value) = match (args.cw, args.cs3) {
        (Some(r), false) => (format!("c_w({r})"), weak::cw_constant(r, args.tol).map_err(|e| e.to_string())?),
        (None, true) => ("c_s(3)".to_string(), strong::cs3_constant(args.tol)),
        _ => return Err("pass exactly one of --cw <r> or --cs3".into()),
    };
    Ok(Output {
        parameters: json!({"cw": args.cw, "cs3": args.cs3, "tol": args.tol}),
        results: json!({"name": name, "value": value}),
        human: format!("{name} = {}\n", sig12(value)),
        seed: None,
        failed: false,
    })
}

fn gap_cmd(args: &GapArgs) -> CommandResult {
    let spec = parse_family(&args.family, args.r, args.d)?;
    let report = bounds::conjecture_gap(&spec, args.k, args.tol).map_err(|e| e.to_string())?;
    let mut human = String::new();
    let _ = writeln!(human, "construction     {}", sig12(report.construction_value.unwrap_or(f64::NAN)));
    let _ = writeln!(human, "conjecture       {}", sig12(report.conjecture_value));
    if report.bound.is_finite() {
        let _ = writeln!(human, "proved bound     {}", sig12(report.bound));
    }
    let _ = writeln!(human, "attains          {}", report.attains_conjecture.unwrap_or(false));
    Ok(Output {
        parameters: json!({"family": spec.family.name(), "r": spec.uniformity(), "d": spec.regularity(), "k": args.k}),
        results: serde_json::to_value(&report).expect("serializable"),
        human,
        seed: None,
        failed: false,
    })
}

/// Order-preserving map over `items` with up to `threads` workers.
fn parallel_map<T, R, F>(items: &[T], threads: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    if threads <= 1 || items.len() <= 1 {
        return items.iter().map(&f).collect();
    }
    let chunk = items.len().div_ceil(threads);
    let mut out: Vec<Option<R>> = (0..items.len()).map(|_| None).collect();
    std::thread::scope(|scope| {
        for (ins, outs) in items.chunks(chunk).zip(out.chunks_mut(chunk)) {
            scope.spawn(|| {
                for (i, o) in ins.iter().zip(outs.iter_mut()) {
                    *o = Some(f(i));
                }
            });
        }
    });
    out.into_iter().map(|r| r.expect("filled by worker")).collect()
}

fn certify_cmd(args: &CertifyArgs, threads: usize) -> CommandResult {
    let grid: Vec<f64> = match &args.grid {
        Some(text) => {
            let parsed: Result<Vec<f64>, _> = text.split(',').map(|s| s.trim().parse()).collect();
            parsed.map_err(|e| format!("bad --grid: {e}"))?
        }
        None => (1..=10).map(|i| i as f64 / 10.0).collect(),
    };
    let run_weak = args.mode != CertifyMode::Strong;
    let run_strong = args.mode != CertifyMode::Weak;

    let mut rows = Vec::new();
    let mut human = String::new();
    let mut failed = false;

    if run_weak {
        let sweep = parallel_map(&grid, threads, |&lambda| {
            weak::weak_dual_certificate(args.r, args.d, lambda).map_err(|e| e.to_string())
        });
        for (lambda, outcome) in grid.iter().zip(sweep) {
            let report = outcome?;
            failed |= !report.feasible;
            let _ = writeln!(
                human,
                "weak   lambda={lambda:<5} worst_slack={}  feasible={}",
                sig12(report.worst_slack),
                report.feasible
            );
            rows.push(json!({
                "mode": "weak", "lambda": lambda,
                "worst_slack": report.worst_slack, "feasible": report.feasible,
            }));
        }
    }
    if run_strong {
        let sweep = parallel_map(&grid, threads, |&lambda| {
            strong::strong_dual(args.r, args.d, lambda)
                .and_then(|cert| strong::slack_check(args.r, args.d, lambda, &cert))
                .map_err(|e| e.to_string())
        });
        for (lambda, outcome) in grid.iter().zip(sweep) {
            let report = outcome?;
            failed |= !report.feasible;
            let _ = writeln!(
                human,
                "strong lambda={lambda:<5} min_slack={}  feasible={}  vertex_abs={}",
                sig12(report.min_slack),
                report.feasible,
                sig12(report.max_vertex_abs)
            );
            rows.push(json!({
                "mode": "strong", "lambda": lambda,
                "min_slack": report.min_slack, "feasible": report.feasible,
                "max_vertex_abs": report.max_vertex_abs, "sampled": report.sampled,
            }));
        }
    }
    let _ = writeln!(human, "{}", if failed { "VIOLATION" } else { "all certificates feasible" });
    Ok(Output {
        parameters: json!({"r": args.r, "d": args.d, "grid": grid}),
        results: json!({"checks": rows, "failed": failed}),
        human,
        seed: None,
        failed,
    })
}
