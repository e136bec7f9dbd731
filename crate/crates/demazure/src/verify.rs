//! Parallel identity sweeps: one engine per rank, merged in rank order.

use demazure_core::{run_suite_rank, Engine, IdentityReport, SuiteId};
use rayon::prelude::*;

/// Worker count from `WK_THREADS`, if set to a positive integer.
pub fn thread_cap() -> Option<usize> {
    std::env::var("WK_THREADS").ok()?.trim().parse().ok().filter(|&n| n > 0)
}

fn pool() -> rayon::ThreadPool {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(n) = thread_cap() {
        b = b.num_threads(n);
    }
    b.build().expect("thread pool")
}

/// One merged report per suite, in the order given.
pub fn run(suites: &[SuiteId], n_max: usize, ht_max: i64) -> Vec<IdentityReport> {
    let per_rank: Vec<Vec<IdentityReport>> = pool().install(|| {
        (1..=n_max)
            .into_par_iter()
            .map(|n| {
                let mut e = Engine::new(n).expect("rank ≥ 1");
                suites.iter().map(|&s| run_suite_rank(&mut e, s, ht_max)).collect()
            })
            .collect()
    });
    let mut merged: Vec<IdentityReport> = suites.iter().map(|&s| IdentityReport::new(s)).collect();
    for reports in per_rank {
        for (acc, r) in merged.iter_mut().zip(reports) {
            acc.merge(r);
        }
    }
    merged
}
