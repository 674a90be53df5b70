//! Seeded random simplicial polytopes pushed through the full pipeline.

use std::time::Instant;

use ehrhart_core::LatticePolytope;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::analyze::{analyze_polytope, Options};
use crate::report::{Check, FuzzFailure, FuzzSummary, InputDescriptor, Status, Timing, SCHEMA};

/// Draws per polytope before giving up on the rejection sampler.
const MAX_ATTEMPTS: usize = 10_000;

fn reach(dim: usize) -> i64 {
    if dim <= 2 {
        3
    } else {
        2
    }
}

/// A random simplicial lattice polytope with the origin in its interior.
///
/// Points are drawn from a small box around the origin; hulls that are
/// degenerate, miss the origin or have non-simplex facets are rejected.
pub fn random_polytope(rng: &mut impl Rng, dim: usize) -> LatticePolytope {
    let r = reach(dim);
    for _ in 0..MAX_ATTEMPTS {
        let count = rng.gen_range(dim + 1..=dim + 4);
        let points: Vec<Vec<i64>> = (0..count)
            .map(|_| (0..dim).map(|_| rng.gen_range(-r..=r)).collect())
            .collect();
        if let Ok(p) = LatticePolytope::convex_hull(dim, &points) {
            if p.is_simplicial() {
                return p;
            }
        }
    }
    // the cross-polytope is always a valid fallback
    LatticePolytope::cross_polytope(dim)
}

pub fn generate(seed: u64, count: usize, dim_max: usize) -> Vec<LatticePolytope> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let dim = rng.gen_range(1..=dim_max.max(1));
            random_polytope(&mut rng, dim)
        })
        .collect()
}

pub fn run(seed: u64, count: usize, dim_max: usize, opts: &Options) -> FuzzSummary {
    let start = Instant::now();
    let mut failures = Vec::new();
    for (index, p) in generate(seed, count, dim_max).into_iter().enumerate() {
        let desc = InputDescriptor {
            path: None,
            kind: String::from("polytope"),
        };
        let failed_checks: Vec<Check> = match analyze_polytope(&p, desc, opts) {
            Ok(report) => report
                .checks
                .into_iter()
                .filter(|c| c.status == Status::Fail)
                .collect(),
            Err(e) => vec![Check {
                name: String::from("pipeline"),
                status: Status::Fail,
                reasons: vec![e.to_string()],
            }],
        };
        if !failed_checks.is_empty() {
            failures.push(FuzzFailure {
                index,
                vertices: p.vertices().to_vec(),
                failed_checks,
            });
        }
    }
    FuzzSummary {
        schema: SCHEMA,
        seed,
        count,
        dim_max,
        passed: count - failures.len(),
        failed: failures.len(),
        failures,
        timing: Timing {
            elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
        },
    }
}
