use std::io::{self, BufRead, Write};
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use dualbraid::harness::{
    antisymmetry_suite, bench, ladder_suite, loglog_slope, nf_suite, random_triples, sigma_corpus, transitivity_suite,
    SuiteReport,
};
use dualbraid::rotating::{read_splitting, rnf_general};
use dualbraid::sigmadef::{compare, nf, CaseTag};
use dualbraid::{Error, Word};

const USAGE: u8 = 1;
const VERIFY_FAILED: u8 = 2;
const INVARIANT: u8 = 3;

/// Rotating and sigma-definite normal forms of braid words on the dual generators.
#[derive(Parser)]
#[command(name = "dualbraid", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rotating normal form `d1.n^-t | w`.
    Rnf(WordArgs),
    /// Sigma-definite representative with its classification.
    Nf {
        #[command(flatten)]
        args: WordArgs,
        /// Print the Artin translation instead.
        #[arg(long)]
        sigma: bool,
        /// Also print the rotating normal form and the case taken at each level.
        #[arg(long)]
        trace: bool,
    },
    /// Splitting of a positive braid, last entry first.
    Split(WordArgs),
    /// `+i`, `-i` or `0`.
    Sign(WordArgs),
    /// `<`, `=` or `>` between two braids; batch lines hold `w1 , w2`.
    Compare {
        #[arg(short)]
        n: usize,
        first: Option<String>,
        second: Option<String>,
    },
    /// Runs the property suites on random words.
    Verify {
        #[arg(short)]
        n: usize,
        #[arg(long, default_value_t = 500)]
        count: usize,
        #[arg(long, default_value_t = 30)]
        maxlen: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Times `nf` on random words of doubling lengths.
    Bench {
        #[arg(short)]
        n: usize,
        /// Shortest length; each further step doubles it.
        #[arg(long, default_value_t = 250)]
        from: usize,
        #[arg(long, default_value_t = 5)]
        steps: u32,
        /// Words per length; the median time is reported.
        #[arg(long, default_value_t = 5)]
        reps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args)]
struct WordArgs {
    /// Strand count.
    #[arg(short)]
    n: usize,
    /// The word; read one word per line from standard input when absent.
    word: Option<String>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(e) if e.is_invariant_breach() => INVARIANT,
        _ if e.is::<Panicked>() => INVARIANT,
        _ => USAGE,
    }
}

#[derive(Debug)]
struct Panicked(String);

impl std::fmt::Display for Panicked {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "internal error: {}", self.0)
    }
}

impl std::error::Error for Panicked {}

fn run(command: Command) -> anyhow::Result<u8> {
    match command {
        Command::Rnf(args) => per_word(args, |w| Ok(rnf_general(&w).to_string())),
        Command::Nf { args, sigma, trace } => per_word(args, move |w| cmd_nf(&w, sigma, trace)),
        Command::Split(args) => per_word(args, |w| cmd_split(&w)),
        Command::Sign(args) => per_word(args, |w| {
            let s = nf(&w)?.sign();
            Ok(if s > 0 { format!("+{s}") } else { s.to_string() })
        }),
        Command::Compare { n, first, second } => cmd_compare(n, first, second),
        Command::Verify { n, count, maxlen, seed } => cmd_verify(n, count, maxlen, seed),
        Command::Bench { n, from, steps, reps, seed } => cmd_bench(n, from, steps, reps, seed),
    }
}

fn parse(text: &str, n: usize) -> anyhow::Result<Word> {
    Word::parse(text, n).with_context(|| format!("cannot read `{}`", text.trim()))
}

/// Runs `f` on the argument word, or on each line of standard input in parallel.
fn per_word<F>(args: WordArgs, f: F) -> anyhow::Result<u8>
where
    F: Fn(Word) -> anyhow::Result<String> + Sync,
{
    let n = args.n;
    let line = |text: &str| guarded(|| f(parse(text, n)?));
    match args.word {
        Some(text) => {
            println!("{}", line(&text)?);
            Ok(0)
        }
        None => batch(line),
    }
}

/// Processes standard input line by line, keeping output lines aligned with input lines.
fn batch<F>(f: F) -> anyhow::Result<u8>
where
    F: Fn(&str) -> anyhow::Result<String> + Sync,
{
    let lines: Vec<String> = io::stdin().lock().lines().collect::<io::Result<_>>()?;
    let results: Vec<anyhow::Result<String>> = lines.par_iter().map(|l| f(l)).collect();
    let mut out = io::stdout().lock();
    let mut code = 0;
    for (i, r) in results.into_iter().enumerate() {
        match r {
            Ok(s) => writeln!(out, "{s}")?,
            Err(e) => {
                writeln!(out, "error")?;
                eprintln!("line {}: error: {e:#}", i + 1);
                code = code.max(exit_code(&e));
            }
        }
    }
    Ok(code)
}

/// Turns a panic inside `f` into an error.
fn guarded<T>(f: impl FnOnce() -> anyhow::Result<T>) -> anyhow::Result<T> {
    panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
        let msg = p
            .downcast_ref::<&str>()
            .map(|s| s.to_string())
            .or_else(|| p.downcast_ref::<String>().cloned())
            .unwrap_or_default();
        Err(Panicked(msg).into())
    })
}

fn cmd_nf(w: &Word, sigma: bool, trace: bool) -> anyhow::Result<String> {
    let r = nf(w)?;
    let mut out = if sigma {
        r.sigma().to_string()
    } else if w.strands() == 2 {
        format!("{}  # {}", r.word, r.class)
    } else {
        format!("{}  # {}, case {}", r.word, r.class, r.case_trace())
    };
    if trace {
        out.push_str(&format!("\n# rnf {}", r.rnf));
        if w.strands() >= 3 && !r.rnf.word.is_empty() {
            out.push_str(&format!("\n# split {}", read_splitting(&r.rnf.word)?));
        }
        for (n, case) in &r.cases {
            out.push_str(&format!("\n# n={n} case {case}"));
        }
    }
    Ok(out)
}

fn cmd_split(w: &Word) -> anyhow::Result<String> {
    if w.strands() < 3 {
        bail!("splittings need at least three strands");
    }
    let r = rnf_general(w);
    if r.depth > 0 {
        bail!("`{w}` is not a positive braid");
    }
    Ok(read_splitting(&r.word)?.to_string())
}

fn cmd_compare(n: usize, first: Option<String>, second: Option<String>) -> anyhow::Result<u8> {
    let cmp = |a: &str, b: &str| {
        guarded(|| {
            let o = compare(&parse(a, n)?, &parse(b, n)?)?;
            Ok(match o {
                std::cmp::Ordering::Less => "<",
                std::cmp::Ordering::Equal => "=",
                std::cmp::Ordering::Greater => ">",
            }
            .to_string())
        })
    };
    match (first, second) {
        (Some(a), Some(b)) => {
            println!("{}", cmp(&a, &b)?);
            Ok(0)
        }
        (None, None) => batch(|line| match line.split_once(',') {
            Some((a, b)) => cmp(a, b),
            None => bail!("expected `w1 , w2`"),
        }),
        _ => bail!("compare needs two words, or none to read pairs from standard input"),
    }
}

fn cmd_verify(n: usize, count: usize, maxlen: usize, seed: u64) -> anyhow::Result<u8> {
    if !(2..=dualbraid::words::MAX_STRANDS).contains(&n) {
        bail!("strand count {n} out of range");
    }
    let corpus = sigma_corpus(n, count, maxlen, seed);
    let stats = guarded(|| Ok(nf_suite(&corpus)))?;
    let mut reports: Vec<SuiteReport> = stats.reports().into_iter().cloned().collect();
    if n >= 3 {
        reports.extend(guarded(|| Ok(ladder_suite(n, count, maxlen, seed)))?);
    }
    reports.push(guarded(|| Ok(antisymmetry_suite(&corpus)))?);
    let triples = random_triples(n, count.min(300), maxlen.min(12), seed);
    reports.push(guarded(|| Ok(transitivity_suite(&triples)))?);
    for r in &reports {
        println!("{r}");
    }
    let seen: Vec<String> =
        CaseTag::ALL.iter().map(|c| format!("{c}={}", stats.cases.get(c).copied().unwrap_or(0))).collect();
    println!("cases {}", seen.join(" "));
    let failed: Vec<&str> = reports.iter().filter(|r| !r.passed()).map(|r| r.name.as_str()).collect();
    if failed.is_empty() {
        println!("PASS (all suites)");
        Ok(0)
    } else {
        println!("FAIL ({})", failed.join(", "));
        Ok(VERIFY_FAILED)
    }
}

fn cmd_bench(n: usize, from: usize, steps: u32, reps: usize, seed: u64) -> anyhow::Result<u8> {
    if !(2..=dualbraid::words::MAX_STRANDS).contains(&n) {
        bail!("strand count {n} out of range");
    }
    if from == 0 || steps == 0 {
        bail!("need a positive starting length and at least one step");
    }
    let lengths: Vec<usize> = (0..steps).map(|k| from << k).collect();
    let points = guarded(|| Ok(bench(n, &lengths, reps, seed)))?;
    println!("{:>8}  {:>12}", "length", "median_ms");
    for (len, t) in &points {
        println!("{len:>8}  {:>12.3}", t.as_secs_f64() * 1e3);
    }
    if points.len() >= 2 {
        println!("slope {:.2}", loglog_slope(&points));
    }
    Ok(0)
}
