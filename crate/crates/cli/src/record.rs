//! The per-(prime, claim, root) verification record and its serializations.
//!
//! Field order is part of the output contract: JSON objects and the CSV
//! header both follow the struct declaration. Serialized output is
//! byte-identical across runs and job counts; `elapsed_ms` is therefore
//! empty unless timings are explicitly requested.

use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct VerificationRecord {
    pub p: u64,
    pub claim: &'static str,
    pub g: Option<u64>,
    pub pass: bool,
    pub lhs: String,
    pub rhs: String,
    pub h_real: Option<u64>,
    pub h_imag: Option<u64>,
    pub u_mod_p: Option<u64>,
    pub v_mod_p: Option<u64>,
    pub s_p: Option<u64>,
    pub r_star: Option<u64>,
    pub elapsed_ms: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

pub fn render(records: &[VerificationRecord], format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => render_json(records),
        OutputFormat::Csv => render_csv(records),
        OutputFormat::Text => render_text(records),
    }
}

fn render_json(records: &[VerificationRecord]) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&serde_json::to_string(r).expect("record serializes"));
        out.push('\n');
    }
    out
}

fn render_csv(records: &[VerificationRecord]) -> String {
    let mut wtr = csv::Writer::from_writer(Vec::new());
    if records.is_empty() {
        // serde-derived headers are only emitted with a first record
        wtr.write_record([
            "p",
            "claim",
            "g",
            "pass",
            "lhs",
            "rhs",
            "h_real",
            "h_imag",
            "u_mod_p",
            "v_mod_p",
            "s_p",
            "r_star",
            "elapsed_ms",
        ])
        .expect("header writes");
    }
    for r in records {
        wtr.serialize(r).expect("record serializes");
    }
    String::from_utf8(wtr.into_inner().expect("in-memory writer")).expect("csv is utf-8")
}

fn opt(v: Option<u64>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

/// Human-readable sweep output: failing witnesses first, then a per-claim
/// summary table, then the overall verdict.
fn render_text(records: &[VerificationRecord]) -> String {
    let mut out = String::new();
    for r in records.iter().filter(|r| !r.pass) {
        out.push_str(&format!(
            "FAIL p={} claim={} g={} lhs={} rhs={} h_real={} h_imag={} u={} v={} s_p={} r*={}\n",
            r.p,
            r.claim,
            opt(r.g),
            r.lhs,
            r.rhs,
            opt(r.h_real),
            opt(r.h_imag),
            opt(r.u_mod_p),
            opt(r.v_mod_p),
            opt(r.s_p),
            opt(r.r_star),
        ));
    }
    if records.iter().any(|r| !r.pass) {
        out.push('\n');
    }

    let mut counts: std::collections::BTreeMap<&'static str, (u64, u64)> = Default::default();
    for r in records {
        let entry = counts.entry(r.claim).or_insert((0, 0));
        entry.0 += 1;
        if r.pass {
            entry.1 += 1;
        }
    }
    out.push_str(&format!(
        "{:<18}{:>8}{:>8}{:>8}\n",
        "claim", "checks", "pass", "fail"
    ));
    let mut total = (0u64, 0u64);
    for (claim, (checks, pass)) in counts {
        out.push_str(&format!(
            "{claim:<18}{checks:>8}{pass:>8}{:>8}\n",
            checks - pass
        ));
        total.0 += checks;
        total.1 += pass;
    }
    out.push_str(&format!(
        "{:<18}{:>8}{:>8}{:>8}\n",
        "total",
        total.0,
        total.1,
        total.0 - total.1
    ));
    if total.0 == total.1 {
        out.push_str(&format!("result: PASS ({} checks)\n", total.0));
    } else {
        out.push_str(&format!(
            "result: FAIL ({} of {} checks failed)\n",
            total.0 - total.1,
            total.0
        ));
    }
    out
}
