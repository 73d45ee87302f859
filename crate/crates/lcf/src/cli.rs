//! Argument parsing and command dispatch.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lcf_core::bounds::{
    appendix_bound_with, corollary_interval, dm2_lower_bound, epsilon_solve, f_functions, lemma_interval, scan,
    tau_upper_bound, threshold_condition, wqy_bound, BoundMode, CompositionVector, ScanConfig,
};
use lcf_core::casework::{certify_equality, Method};
use lcf_core::constructions::witness_search;
use lcf_core::exact::{compare_with, evaluate_pair_product, Search, SearchBudget};
use lcf_core::model::{chromatic_poly_k2n, CanonicalAssignment, Evidence, Relation, Verdict};
use lcf_core::Error;

use crate::cache::{self, Cache};
use crate::records::{AssignmentRecord, ScanRecord, VerdictRecord, WitnessRecord};
use crate::reproduce::{self, Target};
use crate::runtime::{Deadline, ThreadExecutor};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CLAIM_FAILED: i32 = 1;
pub const EXIT_BAD_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "lcf", version, about = "List color function laboratory for K_{2,n}")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    pub format: Format,
    /// Cache directory; results of expensive commands are reused.
    #[arg(long, global = true, env = cache::CACHE_ENV)]
    pub cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct BudgetArgs {
    /// Cap on the raw number of multiplicity vectors searched.
    #[arg(long, default_value_t = SearchBudget::default().max_states)]
    pub max_states: u64,
    /// Wall-clock cap in seconds.
    #[arg(long, default_value_t = SearchBudget::default().max_seconds)]
    pub max_seconds: u64,
    /// Worker threads for top-level branches.
    #[arg(long, default_value_t = 1)]
    pub parallel_width: usize,
}

impl BudgetArgs {
    fn budget(&self) -> SearchBudget {
        SearchBudget { max_states: self.max_states, max_seconds: self.max_seconds, parallel_width: self.parallel_width }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print P(G, L) for an assignment file, or P(K_{2,n}, m) with --uniform.
    Eval {
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        uniform: bool,
        /// JSON file with {m, n, d, z}.
        #[arg(long, conflicts_with = "uniform")]
        assignment: Option<PathBuf>,
    },
    /// Exact P_l(K_{2,n}, m) by exhaustive search.
    Min {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Relation between P_l and P: constructions, the linear bound, then search.
    Compare {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// An assignment with P(G, L) < P(K_{2,n}, m), if one is found.
    Witness {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Per-d equality certificates.
    Casework {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Run the AM-GM bound scan for m in {3, 4, 5}.
    Scan {
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = lcf_core::bounds::DEFAULT_N_MIN)]
        n_min: u32,
        #[arg(long)]
        n_max: u32,
        /// Print the plain "n = K is good" lines.
        #[arg(long)]
        text: bool,
        #[arg(long, value_enum, default_value_t = Mode::Published)]
        mode: Mode,
    },
    /// Individual bounds and analytic quantities.
    #[command(subcommand)]
    Bounds(BoundsCommand),
    /// Run an evidence chain and print one line per sub-claim.
    Reproduce {
        #[arg(value_enum)]
        target: TargetArg,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Published,
    Corrected,
}

impl From<Mode> for BoundMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Published => BoundMode::AsPublished,
            Mode::Corrected => BoundMode::Corrected,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TargetArg {
    ThmCasework,
    ThmUpper,
    PropTwo,
    TauSmall,
}

#[derive(Subcommand, Debug)]
pub enum BoundsCommand {
    /// ceil((n + 2.05)/1.24).
    TauUpper {
        #[arg(long)]
        n: u32,
    },
    /// (|E| - 1)/ln(1 + sqrt 2) + 1.
    Wqy {
        #[arg(long)]
        edges: u64,
    },
    /// CSV table comparing the two threshold bounds for K_{2,n}.
    WqyTable {
        #[arg(long, default_value_t = 2)]
        n_min: u32,
        #[arg(long)]
        n_max: u32,
    },
    /// floor(n/4) >= (m-1)^2 ln(16/7).
    Threshold {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
    },
    /// f_1(m), f_2(m).
    F {
        #[arg(long)]
        m: u32,
    },
    /// Solve g(eps) = n.
    Epsilon {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
    },
    /// Lemma and corollary intervals for n.
    Interval {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        eps: f64,
    },
    /// The d = m - 2 bound at a composition.
    Dm2 {
        #[arg(long)]
        m: u32,
        #[arg(long, value_delimiter = ',')]
        parts: Vec<u32>,
    },
    /// A per-d appendix bound at a composition.
    Appendix {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        d: u32,
        #[arg(long, value_delimiter = ',')]
        parts: Vec<u32>,
        #[arg(long, value_enum, default_value_t = Mode::Published)]
        mode: Mode,
    },
}

/// What a command printed and how it should exit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: EXIT_OK }
    }
}

/// Errors that end a command, with their exit codes.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidParameter(_) | Error::UnsupportedCase { .. } | Error::NotInUnion { .. } => EXIT_BAD_INPUT,
            Error::BudgetExceeded { .. } => EXIT_BUDGET,
            Error::NonConvergence(_) | Error::Postcondition(_) => EXIT_CLAIM_FAILED,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure { code: EXIT_BAD_INPUT, message: format!("{e:#}") }
    }
}

fn bad_input(msg: impl Into<String>) -> Failure {
    Failure { code: EXIT_BAD_INPUT, message: msg.into() }
}

fn json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("records serialize");
    s.push('\n');
    s
}

/// Parses `args` and runs the command, printing to stdout and stderr.
/// Returns the process exit code.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_BAD_INPUT } else { EXIT_OK };
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            out.code
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

/// Runs a parsed command. Expensive commands go through the cache when a
/// cache directory is configured; only successful results are stored.
pub fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let cache = match &cli.cache_dir {
        Some(d) if !d.as_os_str().is_empty() => Some(Cache::open(d)?),
        _ => None,
    };
    let key = cache_key(cli);
    if let (Some(c), Some(k)) = (&cache, &key) {
        if let Some(hit) = c.get(k)? {
            return Ok(Outcome { stdout: hit.output, code: hit.exit_code });
        }
    }
    let out = dispatch(cli)?;
    if let (Some(c), Some(k)) = (&cache, &key) {
        if out.code == EXIT_OK {
            c.put(k, out.code, &out.stdout)?;
        }
    }
    Ok(out)
}

fn cache_key(cli: &Cli) -> Option<String> {
    let f = format!("{:?}", cli.format);
    let (name, args) = match &cli.command {
        Command::Min { n, m, budget } => ("min", serde_json::json!([n, m, f, format!("{budget:?}")])),
        Command::Compare { n, m, budget } => ("compare", serde_json::json!([n, m, f, format!("{budget:?}")])),
        Command::Witness { n, m, budget } => ("witness", serde_json::json!([n, m, f, format!("{budget:?}")])),
        Command::Casework { n, m, budget } => ("casework", serde_json::json!([n, m, f, format!("{budget:?}")])),
        Command::Scan { m, n_min, n_max, text, mode } => {
            ("scan", serde_json::json!([m, n_min, n_max, text, format!("{mode:?}"), f]))
        }
        _ => return None,
    };
    Some(cache::key(name, &args))
}

fn dispatch(cli: &Cli) -> Result<Outcome, Failure> {
    let format = cli.format;
    match &cli.command {
        Command::Eval { n, m, uniform, assignment } => eval(*n, *m, *uniform, assignment.as_ref()),
        Command::Min { n, m, budget } => with_search(budget, |s| verdict_out(s.min_list_count(*n, *m)?, format)),
        Command::Compare { n, m, budget } => with_search(budget, |s| verdict_out(compare_with(s, *n, *m)?, format)),
        Command::Witness { n, m, budget } => {
            let w = witness_search(*n, *m, &budget.budget())?;
            let rec = WitnessRecord::new(*n, *m, &chromatic_poly_k2n(*n, *m), w.as_ref());
            Ok(Outcome::ok(match format {
                Format::Json => json(&rec),
                _ => match &rec.value {
                    Some(v) => format!("n = {n}, m = {m}: witness with P(G,L) = {v} < {}\n", rec.chromatic),
                    None => format!("n = {n}, m = {m}: no witness found\n"),
                },
            }))
        }
        Command::Casework { n, m, budget } => casework(*n, *m, &budget.budget(), format),
        Command::Scan { m, n_min, n_max, text, mode } => {
            let cfg = ScanConfig { m: *m, n_min: *n_min, n_max: *n_max, mode: (*mode).into() };
            let lines = scan(&cfg)?;
            let mut s = String::new();
            for l in &lines {
                if *text || format == Format::Text {
                    writeln!(s, "{}", l.text()).unwrap();
                } else {
                    s.push_str(&json(&ScanRecord::from(l)));
                }
            }
            Ok(Outcome::ok(s))
        }
        Command::Bounds(b) => bounds(b, format),
        Command::Reproduce { target, budget } => {
            let target = match target {
                TargetArg::ThmCasework => Target::ThmCasework,
                TargetArg::ThmUpper => Target::ThmUpper,
                TargetArg::PropTwo => Target::PropTwo,
                TargetArg::TauSmall => Target::TauSmall,
            };
            with_search(budget, |s| {
                let report = reproduce::run(target, s);
                let code = if report.passed() { EXIT_OK } else { EXIT_CLAIM_FAILED };
                Ok(Outcome { stdout: report.to_string(), code })
            })
        }
    }
}

fn with_search<F>(budget: &BudgetArgs, f: F) -> Result<Outcome, Failure>
where
    F: FnOnce(&Search<'_>) -> Result<Outcome, Failure>,
{
    let b = budget.budget();
    b.validate()?;
    let exec = ThreadExecutor { width: b.parallel_width };
    let deadline = Deadline::after(b.max_seconds);
    let search = Search::new(b).with_executor(&exec).with_interrupt(&deadline);
    f(&search)
}

fn verdict_out(v: Verdict, format: Format) -> Result<Outcome, Failure> {
    let code = if v.relation == Relation::Unknown || v.evidence == Evidence::Incomplete { EXIT_BUDGET } else { EXIT_OK };
    let stdout = match format {
        Format::Json => json(&VerdictRecord::from(&v)),
        _ => {
            let mut s = format!("n = {}, m = {}: {} (P = {})\n", v.n, v.m, v.relation, v.chromatic);
            if let Some(x) = &v.min_value {
                writeln!(s, "  P_l = {x}").unwrap();
            }
            if let Some(x) = &v.witness_value {
                writeln!(s, "  witness value = {x}").unwrap();
            }
            writeln!(s, "  evidence: {}", v.evidence.as_str()).unwrap();
            for l in &v.layers {
                let min = l.min_value.as_ref().map_or("above P".to_string(), |x| x.to_string());
                let done = if l.completed { "" } else { ", incomplete" };
                writeln!(s, "  d = {}: {} states, min {min}{done}", l.d, l.states).unwrap();
            }
            for note in &v.notes {
                writeln!(s, "  note: {note}").unwrap();
            }
            s
        }
    };
    Ok(Outcome { stdout, code })
}

fn eval(n: Option<u32>, m: Option<u32>, uniform: bool, path: Option<&PathBuf>) -> Result<Outcome, Failure> {
    let a = if uniform {
        let (Some(n), Some(m)) = (n, m) else { return Err(bad_input("--uniform needs --n and --m")) };
        CanonicalAssignment::uniform(n, m)?
    } else if let Some(p) = path {
        let text = std::fs::read_to_string(p).map_err(|e| bad_input(format!("reading {}: {e}", p.display())))?;
        let rec: AssignmentRecord =
            serde_json::from_str(&text).map_err(|e| bad_input(format!("parsing {}: {e}", p.display())))?;
        if n.is_some_and(|n| n != rec.n) || m.is_some_and(|m| m != rec.m) {
            return Err(bad_input("--n/--m disagree with the assignment file"));
        }
        rec.to_canonical()?
    } else {
        return Err(bad_input("give --uniform or --assignment"));
    };
    Ok(Outcome::ok(format!("{}\n", evaluate_pair_product(&a))))
}

fn casework(n: u32, m: u32, budget: &SearchBudget, format: Format) -> Result<Outcome, Failure> {
    let rep = certify_equality(n, m, budget)?;
    let code = if rep.certified() { EXIT_OK } else { EXIT_CLAIM_FAILED };
    let describe = |method: &Option<Method>| match method {
        None => "not certified".to_string(),
        Some(Method::Uniform) => "uniform lists".to_string(),
        Some(Method::Dm1Exhaustive { states }) => format!("d = m - 1 exhaustive ({states} states)"),
        Some(Method::Bound { compositions, near_ties }) => {
            format!("lower bound over {compositions} compositions ({near_ties} near ties)")
        }
        Some(Method::Exhaustive { states }) => format!("exhaustive ({states} states)"),
    };
    let stdout = match format {
        Format::Json => {
            let layers: Vec<_> = rep
                .layers
                .iter()
                .map(|l| serde_json::json!({ "d": l.d, "certified": l.method.is_some(), "method": describe(&l.method), "note": l.note }))
                .collect();
            json(&serde_json::json!({ "n": n, "m": m, "certified": rep.certified(), "layers": layers }))
        }
        _ => {
            let mut s = format!("n = {n}, m = {m}: {}\n", if rep.certified() { "certified" } else { "not certified" });
            for l in &rep.layers {
                writeln!(s, "  d = {}: {}", l.d, describe(&l.method)).unwrap();
            }
            s
        }
    };
    Ok(Outcome { stdout, code })
}

fn bounds(b: &BoundsCommand, format: Format) -> Result<Outcome, Failure> {
    let text = format != Format::Json;
    let out = match b {
        BoundsCommand::TauUpper { n } => {
            if *n < 2 {
                return Err(bad_input("tau-upper needs n >= 2"));
            }
            format!("{}\n", tau_upper_bound(*n))
        }
        BoundsCommand::Wqy { edges } => {
            if *edges == 0 {
                return Err(bad_input("wqy needs at least one edge"));
            }
            format!("{}\n", wqy_bound(*edges))
        }
        BoundsCommand::WqyTable { n_min, n_max } => {
            if *n_min < 2 || n_min > n_max {
                return Err(bad_input("need 2 <= n-min <= n-max"));
            }
            let mut s = String::from("n,edges,tau_upper,wqy,ratio\n");
            for n in *n_min..=*n_max {
                let t = tau_upper_bound(n);
                let w = wqy_bound(2 * u64::from(n));
                writeln!(s, "{n},{},{t},{w:.6},{:.6}", 2 * n, w / f64::from(t)).unwrap();
            }
            s
        }
        BoundsCommand::Threshold { n, m } => format!("{}\n", threshold_condition(*n, *m)),
        BoundsCommand::F { m } => {
            let (f1, f2) = f_functions(*m)?;
            if text {
                format!("f1 = {f1:.15e}\nf2 = {f2:.15e}\n")
            } else {
                json(&serde_json::json!({ "m": m, "f1": f1, "f2": f2 }))
            }
        }
        BoundsCommand::Epsilon { m, n } => {
            let e = epsilon_solve(*m, *n)?;
            if text {
                format!("{e:.15}\n")
            } else {
                json(&serde_json::json!({ "m": m, "n": n, "eps": e }))
            }
        }
        BoundsCommand::Interval { m, eps } => {
            let l = lemma_interval(*m, *eps)?;
            let c = corollary_interval(*m, *eps)?;
            if text {
                format!("lemma [{:.9}, {:.9}]\ncorollary [{:.9}, {:.9}]\n", l.0, l.1, c.0, c.1)
            } else {
                json(&serde_json::json!({ "m": m, "eps": eps, "lemma": [l.0, l.1], "corollary": [c.0, c.1] }))
            }
        }
        BoundsCommand::Dm2 { m, parts } => {
            let cv = CompositionVector::new(parts.clone())?;
            bound_line(*m, cv.n(), dm2_lower_bound(*m, &cv)?, text)
        }
        BoundsCommand::Appendix { m, d, parts, mode } => {
            let cv = CompositionVector::new(parts.clone())?;
            bound_line(*m, cv.n(), appendix_bound_with((*mode).into(), *m, *d, &cv)?, text)
        }
    };
    Ok(Outcome::ok(out))
}

fn bound_line(m: u32, n: u32, mut b: lcf_core::bounds::BoundValue, text: bool) -> String {
    let p = chromatic_poly_k2n(n, m);
    let holds = b.holds_against(&p);
    if text {
        format!("bound {:.6e} vs P = {p}: {}\n", b.value, if holds { "holds" } else { "below P" })
    } else {
        json(&serde_json::json!({ "bound": b.value, "chromatic": p.to_decimal(), "at_least_chromatic": holds }))
    }
}

