//! Command-line verifier for quadratic-residue permutation sign identities.
//!
//! `report <p>` checks every claim applicable to one prime; `sweep` runs a
//! claim set over a prime range with parallel workers and deterministic
//! output. Exit codes: 0 all checks pass, 1 at least one failure (witnesses
//! are printed), 2 usage or configuration error.

mod claims;
mod evaluate;
mod record;
mod sweep;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use claims::Claim;
use evaluate::{evaluate_prime, GMode};
use record::{render, OutputFormat, VerificationRecord};
use sweep::{run_sweep, SweepConfig};

#[derive(Parser)]
#[command(
    name = "qrperm",
    version,
    about = "Verifies sign identities for quadratic-residue permutations modulo odd primes",
    after_help = "Exit codes: 0 = all checks pass, 1 = at least one failure, 2 = usage error."
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run every applicable claim for a single odd prime and print a table.
    Report {
        /// An odd prime.
        p: u64,
    },
    /// Verify a claim set over all primes in a range.
    Sweep(SweepArgs),
}

#[derive(clap::Args)]
struct SweepArgs {
    /// Comma-separated claims, or "all". Known claims: thm1.1, thm1.2,
    /// thm1.2-5mod8, sun-3mod4, cor1.1, lemma2.1, lemma2.2, lemma2.3,
    /// lemma2.4, mordell, proof-identities, zolotarev, phi-split,
    /// cross-oracle.
    #[arg(long, required = true, value_delimiter = ',')]
    claims: Vec<String>,

    /// Smallest prime to include.
    #[arg(long)]
    min: u64,

    /// Largest prime to include.
    #[arg(long)]
    max: u64,

    /// Primitive-root mode for the claims that use one. "all" multiplies
    /// per-prime work by phi(p-1) sign computations, each costing an
    /// O(n log n) inversion count.
    #[arg(long, value_enum, default_value = "smallest")]
    g_mode: GMode,

    /// Worker threads; defaults to the available parallelism. The output
    /// bytes are independent of this value.
    #[arg(long, env = "QRPERM_JOBS")]
    jobs: Option<usize>,

    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,

    /// Write the output to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,

    /// Fill the elapsed_ms column with measured wall time. Timed output is
    /// not byte-reproducible across runs.
    #[arg(long)]
    timings: bool,

    /// Test hook: flip the formula-side sign for one CLAIM:P pair so the
    /// failure path can be exercised end to end.
    #[arg(long, hide = true, value_name = "CLAIM:P")]
    inject_fault: Option<String>,
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn parse_claims(raw: &[String]) -> Result<Vec<Claim>, String> {
    let mut out = Vec::new();
    for item in raw {
        if item == "all" {
            out.extend(Claim::ALL);
            continue;
        }
        match Claim::parse(item) {
            Some(c) => out.push(c),
            None => return Err(format!("unknown claim '{item}'")),
        }
    }
    out.sort();
    out.dedup();
    if out.is_empty() {
        return Err("claim set is empty".to_string());
    }
    Ok(out)
}

fn parse_fault(spec: &str) -> Result<(Claim, u64), String> {
    let (claim_id, p) = spec
        .split_once(':')
        .ok_or_else(|| format!("expected CLAIM:P, got '{spec}'"))?;
    let claim = Claim::parse(claim_id)
        .ok_or_else(|| format!("unknown claim '{claim_id}' in fault spec"))?;
    if !claim.supports_fault() {
        return Err(format!("claim '{claim_id}' has no single sign to flip"));
    }
    let p = p
        .parse::<u64>()
        .map_err(|_| format!("bad prime '{p}' in fault spec"))?;
    Ok((claim, p))
}

fn emit(body: String, out: Option<&PathBuf>) -> Result<(), String> {
    match out {
        Some(path) => {
            std::fs::write(path, body).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn cmd_sweep(args: SweepArgs) -> ExitCode {
    let claims = match parse_claims(&args.claims) {
        Ok(c) => c,
        Err(e) => return usage_error(&e),
    };
    if args.min > args.max {
        return usage_error(&format!("--min {} exceeds --max {}", args.min, args.max));
    }
    let fault = match args.inject_fault.as_deref().map(parse_fault).transpose() {
        Ok(f) => f,
        Err(e) => return usage_error(&e),
    };
    let jobs = match args.jobs {
        Some(0) => return usage_error("--jobs must be positive"),
        Some(j) => j,
        None => std::thread::available_parallelism().map_or(1, |n| n.get()),
    };
    let cfg = SweepConfig {
        claims,
        min: args.min,
        max: args.max,
        g_mode: args.g_mode,
        jobs,
        timings: args.timings,
        fault,
    };
    let records = run_sweep(&cfg);
    let all_pass = records.iter().all(|r| r.pass);
    if let Err(e) = emit(render(&records, args.format), args.out.as_ref()) {
        return usage_error(&e);
    }
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_report(p: u64) -> ExitCode {
    let ctx = match qrperm::PrimeCtx::new(p) {
        Ok(ctx) => ctx,
        Err(e) => return usage_error(&format!("{e}; report needs an odd prime")),
    };
    let records = evaluate_prime(p, &Claim::ALL, GMode::Smallest, None, false);

    println!(
        "p = {p} = {} mod 8, n = {}, smallest primitive root g = {}",
        ctx.cls8(),
        ctx.n(),
        ctx.smallest_primitive_root()
    );
    let inv_line = |r: &VerificationRecord| {
        let opt = |v: Option<u64>| v.map_or_else(|| "-".to_string(), |x| x.to_string());
        if ctx.is_1_mod_4() {
            format!(
                "h(p) = {}   h(-4p) = {}   u = {}, v = {} (mod p)   s_p = {}   r* = {}",
                opt(r.h_real),
                opt(r.h_imag),
                opt(r.u_mod_p),
                opt(r.v_mod_p),
                opt(r.s_p),
                opt(r.r_star)
            )
        } else {
            format!(
                "h(-p) = {}   s_p = {}   r* = {}",
                opt(r.h_imag),
                opt(r.s_p),
                opt(r.r_star)
            )
        }
    };
    if let Some(first) = records.first() {
        println!("{}", inv_line(first));
    }
    println!();
    let lhs_w = records
        .iter()
        .map(|r| r.lhs.len())
        .max()
        .unwrap_or(3)
        .max(3)
        + 2;
    let rhs_w = records
        .iter()
        .map(|r| r.rhs.len())
        .max()
        .unwrap_or(3)
        .max(3)
        + 2;
    println!(
        "{:<18}{:<6}{:<lhs_w$}{:<rhs_w$}result",
        "claim", "g", "lhs", "rhs"
    );
    let mut failures = 0u64;
    for r in &records {
        let g = r.g.map_or_else(|| "-".to_string(), |g| g.to_string());
        let verdict = if r.pass { "pass" } else { "FAIL" };
        println!(
            "{:<18}{:<6}{:<lhs_w$}{:<rhs_w$}{}",
            r.claim, g, r.lhs, r.rhs, verdict
        );
        if !r.pass {
            failures += 1;
        }
    }
    println!();
    if failures == 0 {
        println!("result: PASS ({} checks)", records.len());
        ExitCode::SUCCESS
    } else {
        println!(
            "result: FAIL ({failures} of {} checks failed)",
            records.len()
        );
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    match Cli::parse().cmd {
        Cmd::Report { p } => cmd_report(p),
        Cmd::Sweep(args) => cmd_sweep(args),
    }
}
