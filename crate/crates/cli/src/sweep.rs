//! Range sweeps: iterate primes, evaluate claims in parallel, and merge
//! deterministically. Output is sorted by (p, claim, g) so the serialized
//! bytes do not depend on the job count.

use rayon::prelude::*;

use qrperm::primes_up_to;

use crate::claims::Claim;
use crate::evaluate::{evaluate_prime, GMode};
use crate::record::VerificationRecord;

pub struct SweepConfig {
    pub claims: Vec<Claim>,
    pub min: u64,
    pub max: u64,
    pub g_mode: GMode,
    pub jobs: usize,
    pub timings: bool,
    pub fault: Option<(Claim, u64)>,
}

pub fn run_sweep(cfg: &SweepConfig) -> Vec<VerificationRecord> {
    let lo = cfg.min.max(3);
    let primes: Vec<u64> = primes_up_to(cfg.max)
        .into_iter()
        .filter(|&p| p >= lo)
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .expect("thread pool builds");
    let mut records: Vec<VerificationRecord> = pool.install(|| {
        primes
            .par_iter()
            .map(|&p| evaluate_prime(p, &cfg.claims, cfg.g_mode, cfg.fault, cfg.timings))
            .flatten()
            .collect()
    });
    records.sort_by(|a, b| (a.p, a.claim, a.g).cmp(&(b.p, b.claim, b.g)));
    records
}
