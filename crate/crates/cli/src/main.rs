use std::fs;
use std::io::Write as _;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use lmod_core::homology::{block_form, check_image_lmod};
use lmod_core::liftable::{decompose_lmod, generating_set, reduced_generating_set};
use lmod_core::quotient::{coset_index, is_maximal};
use lmod_core::rewrite::{parse_script, replay};
use lmod_core::suites::{run_suite, SuiteOptions};
use lmod_core::{eval_psi, eval_psi_mod, lift_test, Cover, ExactMat3, TwistWord};

/// Environment variable holding the worker thread count.
const THREADS_ENV: &str = "LMOD_THREADS";

#[derive(Parser)]
#[command(
    name = "lmod",
    version,
    about = "Homology images and liftability of mapping classes of the twice-punctured torus"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the image of a word, exactly or modulo K.
    Eval {
        word: String,
        #[arg(long = "mod", value_name = "K")]
        modulus: Option<u32>,
    },
    /// Decide whether a word lifts to the K-fold cyclic cover.
    Lift {
        word: String,
        #[arg(long)]
        k: u32,
    },
    /// Run a verification suite.
    Verify {
        /// relations, eq1, eq2, prop42, kernel, matrices, schreier or all.
        #[arg(long)]
        suite: String,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        window: Option<u32>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Also write the report to this file.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// List a generating set of the liftable subgroup with lift verdicts.
    Gens {
        #[arg(long)]
        k: u32,
        /// The four-element set, for K = 2 or 3.
        #[arg(long)]
        reduced: bool,
    },
    /// Index of the liftable image in the mod-K image.
    Index {
        #[arg(long)]
        k: u32,
    },
    /// Maximality table for an inclusive range such as 2..12.
    Maximal {
        #[arg(long = "k-range", value_parser = parse_range)]
        k_range: RangeInclusive<u32>,
    },
    /// Write a liftable-image matrix as a word in the generators.
    Decompose {
        #[arg(long)]
        k: u32,
        /// Nine integers, row-major.
        matrix: String,
    },
    /// Replay a rewrite script and check where it ends.
    Replay {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long)]
        script: PathBuf,
    },
}

fn parse_range(text: &str) -> Result<RangeInclusive<u32>, String> {
    let (lo, hi) = text
        .split_once("..")
        .ok_or_else(|| format!("expected A..B, got {text:?}"))?;
    let lo: u32 = lo.trim().parse().map_err(|_| format!("bad bound {lo:?}"))?;
    let hi: u32 = hi
        .trim()
        .trim_start_matches('=')
        .parse()
        .map_err(|_| format!("bad bound {hi:?}"))?;
    if lo < 2 || hi < lo {
        return Err(format!("range {lo}..{hi} must satisfy 2 <= A <= B"));
    }
    Ok(lo..=hi)
}

fn word(text: &str) -> Result<TwistWord> {
    text.parse()
        .with_context(|| format!("cannot parse word {text:?}"))
}

fn configure_threads() -> Result<()> {
    if let Ok(raw) = std::env::var(THREADS_ENV) {
        let n: usize = raw
            .parse()
            .with_context(|| format!("{THREADS_ENV} must be a positive integer, got {raw:?}"))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .context("configuring thread pool")?;
    }
    Ok(())
}

fn cmd_eval(text: &str, modulus: Option<u32>) -> Result<u8> {
    let w = word(text)?;
    if let Some(k) = modulus {
        let m = eval_psi_mod(&w, k)?;
        println!("{m}");
        if m.is_identity() {
            println!("in ker Psi_{k}");
        }
        return Ok(0);
    }
    let m = eval_psi(&w);
    println!("{m}");
    match block_form(&m) {
        Ok(f) => {
            let a = f.a.rows();
            println!(
                "A = [[{}, {}], [{}, {}]]  v = ({}, {})  eps = {}",
                a[0][0], a[0][1], a[1][0], a[1][1], f.v[0], f.v[1], f.sign
            );
        }
        Err(e) => println!("not in block form: {e}"),
    }
    if m.is_identity() {
        println!("in ker Psi");
    }
    Ok(0)
}

fn cmd_lift(text: &str, k: u32) -> Result<u8> {
    let cover = Cover::new(k)?;
    let m = eval_psi(&word(text)?);
    match check_image_lmod(&m, cover) {
        Ok(f) => {
            println!("liftable for k = {k}");
            println!(
                "v = ({}, {}): {} | {} and {} | {}",
                f.v[0], f.v[1], k, f.v[0], k, f.v[1]
            );
        }
        Err(e) => {
            println!("not liftable for k = {k}");
            if let Ok(f) = block_form(&m) {
                println!("v = ({}, {})", f.v[0], f.v[1]);
            }
            println!("reason: {e}");
        }
    }
    Ok(0)
}

fn cmd_verify(
    suite: &str,
    options: SuiteOptions,
    format: Format,
    output: Option<PathBuf>,
) -> Result<u8> {
    let report = run_suite(suite, options)?;
    let text = match format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json_lines(),
    };
    print!("{text}");
    if let Some(path) = output {
        fs::write(&path, &text).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(report.exit_code() as u8)
}

fn cmd_gens(k: u32, reduced: bool) -> Result<u8> {
    let set = if reduced {
        reduced_generating_set(k)?
    } else {
        generating_set(k)?
    };
    println!(
        "{} generating set for k = {k} ({} elements)",
        set.provenance,
        set.len()
    );
    for (label, w) in &set.members {
        let verdict = if lift_test(w, set.cover) {
            "liftable"
        } else {
            "NOT liftable"
        };
        println!("{label:<10} {verdict:<13} {w}");
    }
    Ok(if set.non_liftable().is_empty() { 0 } else { 1 })
}

fn cmd_index(k: u32) -> Result<u8> {
    let idx = coset_index(k)?;
    println!("{}", idx.index);
    println!(
        "|Psi_{k}(Mod)| = {}, |Psi_{k}(LMod)| = {}, labels seen = {}",
        idx.mod_order, idx.lmod_order, idx.labels_seen
    );
    Ok(if idx.lagrange_holds() { 0 } else { 1 })
}

fn cmd_maximal(range: RangeInclusive<u32>) -> Result<u8> {
    let mut out = std::io::stdout().lock();
    writeln!(
        out,
        "{:>3}  {:<7}  {:>9}  {:>11}  witness",
        "k", "maximal", "|H|", "|G|"
    )?;
    let mut status = 0;
    for k in range {
        let r = is_maximal(k)?;
        let witness = match &r.witness {
            Some(w) => format!("<a, b, c^{}, i> of order {}", w.ell, w.order),
            None => "-".into(),
        };
        if r.witness.is_some() && !r.witness_is_strict() {
            status = 1;
        }
        writeln!(
            out,
            "{:>3}  {:<7}  {:>9}  {:>11}  {}",
            k, r.maximal, r.lmod_order, r.mod_order, witness
        )?;
    }
    Ok(status)
}

fn cmd_decompose(k: u32, matrix: &str) -> Result<u8> {
    let cover = Cover::new(k)?;
    let m: ExactMat3 = matrix.parse()?;
    let w = decompose_lmod(&m, cover)?;
    if eval_psi(&w) != m {
        bail!("internal error: decomposition {w} does not evaluate back");
    }
    println!("{w}");
    Ok(0)
}

fn cmd_replay(from: &str, to: &str, script: &PathBuf) -> Result<u8> {
    let text =
        fs::read_to_string(script).with_context(|| format!("reading {}", script.display()))?;
    let steps = parse_script(&text)?;
    let start = word(from)?;
    let target = word(to)?;
    match replay(&start, &steps) {
        Err(f) => {
            println!("step {} failed on {}: {}", f.step, f.word, f.error);
            Ok(1)
        }
        Ok(trace) => {
            for (i, w) in trace.iter().enumerate() {
                match i.checked_sub(1) {
                    None => println!("   {w}"),
                    Some(s) => println!("{:>2} {w}    [{}]", i, steps[s]),
                }
            }
            let end = trace.last().expect("non-empty trace");
            if *end == target {
                println!("reached {target}");
                Ok(0)
            } else {
                println!("ended at {end}, expected {target}");
                Ok(1)
            }
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    configure_threads()?;
    match cli.command {
        Command::Eval { word, modulus } => cmd_eval(&word, modulus),
        Command::Lift { word, k } => cmd_lift(&word, k),
        Command::Verify {
            suite,
            k,
            window,
            format,
            output,
        } => cmd_verify(&suite, SuiteOptions { k, window }, format, output),
        Command::Gens { k, reduced } => cmd_gens(k, reduced),
        Command::Index { k } => cmd_index(k),
        Command::Maximal { k_range } => cmd_maximal(k_range),
        Command::Decompose { k, matrix } => cmd_decompose(k, &matrix),
        Command::Replay { from, to, script } => cmd_replay(&from, &to, &script),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
