//! `fibspace` — exact two-sided k-order Fibonacci sequences, generalized
//! binomial/multinomial coefficients, closed-form evaluation, identity
//! verification, tiling counts, and a strategy benchmark.

mod render;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fibspace::formulas::{basis_binomial, basis_multinomial};
use fibspace::sequence::{basis, EvalMethod, FibSequence};
use fibspace::suite::{run_verify, VerifyConfig};
use fibspace::tiling::{c_sequence, count_tilings_bruteforce, TilingInstance};
use fibspace::{
    binom_table, enumerate_support, gen_binomial, gen_multinomial, identities, BigInt, MultiIndex,
};
use render::OutputFormat;
use std::str::FromStr;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "fibspace", version, about, propagate_version = true)]
struct Cli {
    /// Output format; defaults to $FIBSPACE_FORMAT, then plain.
    #[arg(long, global = true, value_enum)]
    format: Option<OutputFormat>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate terms of a sequence with a given initial window over an
    /// index range.
    Eval(EvalArgs),
    /// Evaluate terms of a standard basis sequence B^(j), selecting the
    /// evaluation route.
    Basis(BasisArgs),
    /// Generalized binomial ⟨n choose i⟩ for any integers n, i.
    Binom(BinomArgs),
    /// Table of generalized binomials over rectangular index ranges.
    BinomTable(BinomTableArgs),
    /// Generalized multinomial ⟨(i_1, ..., i_t)⟩ of an integer tuple.
    Multinom(MultinomArgs),
    /// Enumerate the nonzero support chains of a constrained multinomial
    /// sum (printed as JSON).
    Support(SupportArgs),
    /// Run the operator/basis-sum identity catalog; exit nonzero on any
    /// mismatch.
    Identities(IdentitiesArgs),
    /// Run the full verification suite (identities, formula grid, Pascal
    /// recursions, tiling bridge); exit nonzero on any failure.
    Verify(VerifyArgs),
    /// Count tilings of a 1 x n board with tiles of length 1..k by brute
    /// force, optionally checking against the sequence C.
    Tiling(TilingArgs),
    /// Time the term-evaluation strategies at one index; values must
    /// agree before timings are reported.
    Bench(BenchArgs),
}

/// Inclusive integer interval with `A..B` syntax; both ends may be
/// negative; reversed ranges are rejected.
#[derive(Debug, Clone, Copy)]
struct IntRange {
    lo: i64,
    hi: i64,
}

impl FromStr for IntRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (lo, hi) = s
            .split_once("..")
            .ok_or_else(|| format!("expected A..B, got '{s}'"))?;
        let lo: i64 = lo.trim().parse().map_err(|_| format!("bad range start '{lo}'"))?;
        let hi: i64 = hi.trim().parse().map_err(|_| format!("bad range end '{hi}'"))?;
        if lo > hi {
            return Err(format!("reversed range {lo}..{hi}"));
        }
        Ok(IntRange { lo, hi })
    }
}

fn parse_int_list(s: &str) -> Result<Vec<BigInt>, String> {
    s.split(',')
        .map(|part| {
            BigInt::from_str(part.trim()).map_err(|_| format!("bad integer '{}'", part.trim()))
        })
        .collect()
}

fn parse_i64_list(s: &str) -> Result<Vec<i64>, String> {
    s.split(',')
        .map(|part| {
            i64::from_str(part.trim()).map_err(|_| format!("bad integer '{}'", part.trim()))
        })
        .collect()
}

#[derive(Args)]
struct EvalArgs {
    /// Order of the recurrence (k >= 2).
    #[arg(long)]
    k: usize,
    /// Initial window F_0,...,F_{k-1} as comma-separated integers.
    #[arg(long, allow_hyphen_values = true)]
    init: String,
    /// Inclusive index range A..B.
    #[arg(long, allow_hyphen_values = true)]
    range: IntRange,
    /// Evaluation strategy.
    #[arg(long, value_enum, default_value_t = MethodArg::Window)]
    method: MethodArg,
}

#[derive(Args)]
struct BasisArgs {
    /// Order of the recurrence (k >= 2).
    #[arg(long)]
    k: usize,
    /// Basis index j in 0..k-1.
    #[arg(long)]
    j: usize,
    /// Inclusive index range A..B.
    #[arg(long, allow_hyphen_values = true)]
    range: IntRange,
    /// Evaluation route.
    #[arg(long, value_enum, default_value_t = RouteArg::Recurrence)]
    method: RouteArg,
}

#[derive(Args)]
struct BinomArgs {
    #[arg(allow_hyphen_values = true)]
    n: i64,
    #[arg(allow_hyphen_values = true)]
    i: i64,
}

#[derive(Args)]
struct BinomTableArgs {
    /// Row range of n values, A..B.
    #[arg(long, allow_hyphen_values = true)]
    n_range: IntRange,
    /// Column range of i values, A..B.
    #[arg(long, allow_hyphen_values = true)]
    i_range: IntRange,
}

#[derive(Args)]
struct MultinomArgs {
    /// Comma-separated integer tuple, e.g. 2,0,-4 (at least two entries).
    #[arg(allow_hyphen_values = true)]
    index: String,
}

#[derive(Args)]
struct SupportArgs {
    /// Chain length (k >= 2).
    #[arg(long)]
    k: usize,
    /// Required total of the partial sums.
    #[arg(long, allow_hyphen_values = true)]
    sum: i64,
}

#[derive(Args)]
struct IdentitiesArgs {
    /// Orders to check, A..B.
    #[arg(long, default_value = "2..6", allow_hyphen_values = true)]
    k_range: IntRange,
    /// Pointwise comparison window, A..B.
    #[arg(long, default_value = "-20..20", allow_hyphen_values = true)]
    window: IntRange,
}

#[derive(Args)]
struct VerifyArgs {
    /// Orders to check, A..B.
    #[arg(long, default_value = "2..6", allow_hyphen_values = true)]
    k_range: IntRange,
    /// Index grid for the formula-vs-oracle checks, A..B.
    #[arg(long, default_value = "-40..60", allow_hyphen_values = true)]
    n_range: IntRange,
    /// Internal test hook: flip one identity coefficient to demonstrate
    /// failure detection.
    #[arg(long, hide = true)]
    inject_fault: bool,
}

#[derive(Args)]
struct TilingArgs {
    /// Largest tile length (k >= 2).
    #[arg(long)]
    k: usize,
    /// Board length (n >= 0).
    #[arg(long, allow_hyphen_values = true)]
    n: i64,
    /// Also compare the brute-force count against term(C, n+1).
    #[arg(long)]
    check: bool,
}

#[derive(Args)]
struct BenchArgs {
    /// Order of the recurrence (k >= 2).
    #[arg(long)]
    k: usize,
    /// Index to evaluate (may be negative).
    #[arg(long, allow_hyphen_values = true)]
    n: i64,
    /// Strategies to time.
    #[arg(long, value_enum, value_delimiter = ',',
          default_values_t = [MethodArg::Window, MethodArg::Shortcut, MethodArg::Matpow])]
    methods: Vec<MethodArg>,
    /// Repetitions per strategy; the median is reported.
    #[arg(long, default_value_t = 5)]
    reps: usize,
    /// Initial window (defaults to the basis delta at position k-1).
    #[arg(long, allow_hyphen_values = true)]
    init: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Window,
    Shortcut,
    Matpow,
}

impl From<MethodArg> for EvalMethod {
    fn from(value: MethodArg) -> Self {
        match value {
            MethodArg::Window => EvalMethod::Window,
            MethodArg::Shortcut => EvalMethod::Shortcut,
            MethodArg::Matpow => EvalMethod::MatrixPower,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RouteArg {
    Recurrence,
    Binomial,
    Multinomial,
}

fn main() {
    let cli = Cli::parse();
    let format = match resolve_format(cli.format) {
        Ok(f) => f,
        Err(message) => {
            eprintln!("error: {message}");
            std::process::exit(2);
        }
    };
    match dispatch(cli.command, format) {
        Ok(code) => std::process::exit(code),
        Err(message) => {
            eprintln!("error: {message}");
            std::process::exit(2);
        }
    }
}

fn resolve_format(flag: Option<OutputFormat>) -> Result<OutputFormat, String> {
    if let Some(f) = flag {
        return Ok(f);
    }
    match std::env::var("FIBSPACE_FORMAT") {
        Ok(value) => OutputFormat::from_str(&value, true)
            .map_err(|_| format!("FIBSPACE_FORMAT has invalid value '{value}'")),
        Err(_) => Ok(OutputFormat::Plain),
    }
}

fn require_order(k: usize) -> Result<(), String> {
    if k < 2 {
        return Err(format!("k must be at least 2, got {k}"));
    }
    Ok(())
}

fn dispatch(command: Command, format: OutputFormat) -> Result<i32, String> {
    match command {
        Command::Eval(args) => cmd_eval(args, format),
        Command::Basis(args) => cmd_basis(args, format),
        Command::Binom(args) => cmd_binom(args, format),
        Command::BinomTable(args) => cmd_binom_table(args, format),
        Command::Multinom(args) => cmd_multinom(args, format),
        Command::Support(args) => cmd_support(args, format),
        Command::Identities(args) => cmd_identities(args, format),
        Command::Verify(args) => cmd_verify(args, format),
        Command::Tiling(args) => cmd_tiling(args, format),
        Command::Bench(args) => cmd_bench(args, format),
    }
}

fn cmd_eval(args: EvalArgs, format: OutputFormat) -> Result<i32, String> {
    require_order(args.k)?;
    let window = parse_int_list(&args.init)?;
    if window.len() != args.k {
        return Err(format!(
            "--init must list exactly k = {} values, got {}",
            args.k,
            window.len()
        ));
    }
    let seq = FibSequence::new(args.k, window);
    let method: EvalMethod = args.method.into();
    let values: Vec<BigInt> = (args.range.lo..=args.range.hi)
        .map(|n| seq.term_with(method, n))
        .collect();
    render::print_terms(format, args.k, seq.window(), args.range.lo, &values)?;
    Ok(0)
}

fn cmd_basis(args: BasisArgs, format: OutputFormat) -> Result<i32, String> {
    require_order(args.k)?;
    if args.j >= args.k {
        return Err(format!("--j must be in 0..{}, got {}", args.k - 1, args.j));
    }
    let values: Vec<BigInt> = match args.method {
        RouteArg::Recurrence => basis(args.k, args.j).terms_range(args.range.lo..=args.range.hi),
        RouteArg::Binomial => (args.range.lo..=args.range.hi)
            .map(|n| basis_binomial(args.k, args.j, n))
            .collect(),
        RouteArg::Multinomial => (args.range.lo..=args.range.hi)
            .map(|n| basis_multinomial(args.k, args.j, n))
            .collect(),
    };
    let window = basis(args.k, args.j);
    render::print_terms(format, args.k, window.window(), args.range.lo, &values)?;
    Ok(0)
}

fn cmd_binom(args: BinomArgs, format: OutputFormat) -> Result<i32, String> {
    let value = gen_binomial(args.n, args.i);
    render::print_binomial(format, args.n, args.i, &value);
    Ok(0)
}

fn cmd_binom_table(args: BinomTableArgs, format: OutputFormat) -> Result<i32, String> {
    let table = binom_table(
        args.n_range.lo..=args.n_range.hi,
        args.i_range.lo..=args.i_range.hi,
    );
    render::print_table(
        format,
        args.n_range.lo..=args.n_range.hi,
        args.i_range.lo..=args.i_range.hi,
        &table,
    );
    Ok(0)
}

fn cmd_multinom(args: MultinomArgs, format: OutputFormat) -> Result<i32, String> {
    let entries = parse_i64_list(&args.index)?;
    if entries.len() < 2 {
        return Err("the multinomial tuple needs at least two entries".into());
    }
    let index = MultiIndex::new(entries);
    let value = gen_multinomial(&index);
    render::print_multinomial(format, index.entries(), &value);
    Ok(0)
}

fn cmd_support(args: SupportArgs, _format: OutputFormat) -> Result<i32, String> {
    require_order(args.k)?;
    let chains = enumerate_support(args.k, args.sum);
    render::print_support(&chains);
    Ok(0)
}

fn cmd_identities(args: IdentitiesArgs, format: OutputFormat) -> Result<i32, String> {
    if args.k_range.lo < 2 {
        return Err(format!("--k-range must start at 2 or above, got {}", args.k_range.lo));
    }
    let mut checks = Vec::new();
    for k in args.k_range.lo..=args.k_range.hi {
        let k = k as usize;
        for identity in identities::catalog(k) {
            let outcome = identity.verify(k, args.window.lo..=args.window.hi);
            checks.push((
                format!("k={k} {}: {}", identity.id, identity.statement),
                outcome,
            ));
        }
    }
    render::print_identity_checks(format, &checks)?;
    Ok(if checks.iter().all(|(_, o)| o.passed()) { 0 } else { 1 })
}

fn cmd_verify(args: VerifyArgs, format: OutputFormat) -> Result<i32, String> {
    if args.k_range.lo < 2 {
        return Err(format!("--k-range must start at 2 or above, got {}", args.k_range.lo));
    }
    let cfg = VerifyConfig {
        k_range: args.k_range.lo as usize..=args.k_range.hi as usize,
        n_range: args.n_range.lo..=args.n_range.hi,
        inject_fault: args.inject_fault,
        ..VerifyConfig::default()
    };
    let report = run_verify(&cfg);
    render::print_verify_report(format, &report)?;
    Ok(if report.passed() { 0 } else { 1 })
}

fn cmd_tiling(args: TilingArgs, format: OutputFormat) -> Result<i32, String> {
    require_order(args.k)?;
    if args.n < 0 {
        return Err(format!("--n must be nonnegative, got {}", args.n));
    }
    let count = count_tilings_bruteforce(&TilingInstance::new(args.n, args.k));
    let check = if args.check {
        let predicted = c_sequence(args.k).term(args.n + 1);
        Some((predicted.clone(), predicted == count))
    } else {
        None
    };
    let ok = check.as_ref().is_none_or(|(_, ok)| *ok);
    render::print_tiling(format, args.k, args.n, &count, check.as_ref())?;
    Ok(if ok { 0 } else { 1 })
}

fn cmd_bench(args: BenchArgs, format: OutputFormat) -> Result<i32, String> {
    require_order(args.k)?;
    if args.reps == 0 {
        return Err("--reps must be positive".into());
    }
    if args.methods.is_empty() {
        return Err("--methods must name at least one strategy".into());
    }
    let seq = match &args.init {
        Some(init) => {
            let window = parse_int_list(init)?;
            if window.len() != args.k {
                return Err(format!(
                    "--init must list exactly k = {} values, got {}",
                    args.k,
                    window.len()
                ));
            }
            FibSequence::new(args.k, window)
        }
        None => basis(args.k, args.k - 1),
    };

    // Agreement gate: one evaluation per strategy before any timing.
    let mut methods: Vec<EvalMethod> = args.methods.iter().map(|&m| m.into()).collect();
    methods.dedup();
    let reference = seq.term_with(methods[0], args.n);
    for &method in &methods[1..] {
        let value = seq.term_with(method, args.n);
        if value != reference {
            eprintln!(
                "error: strategies disagree at n = {}: {} gave {}, {} gave {}",
                args.n,
                methods[0].name(),
                reference,
                method.name(),
                value
            );
            return Ok(1);
        }
    }

    let mut timings = Vec::new();
    for &method in &methods {
        let mut samples: Vec<f64> = (0..args.reps)
            .map(|_| {
                let start = Instant::now();
                let _ = seq.term_with(method, args.n);
                start.elapsed().as_secs_f64()
            })
            .collect();
        samples.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let median = if samples.len() % 2 == 1 {
            samples[samples.len() / 2]
        } else {
            (samples[samples.len() / 2 - 1] + samples[samples.len() / 2]) / 2.0
        };
        timings.push((method.name(), median));
    }
    render::print_bench(format, args.k, args.n, &reference, args.reps, &timings)?;
    Ok(0)
}
