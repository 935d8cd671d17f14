//! Batch run of the invariant suite over every involution up to a size.

use anyhow::Result;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use sporbits_core::fpf::{
    basic_kind, basics_decomposition, enumerate_fpf, glb, odd_rank_constraint_holds,
    opposite_leq, FpfInvolution,
};
use sporbits_core::ideals::{classify_orbit, verify_degeneration, QMatrix};
use sporbits_core::pairperm::{pair_permutations, DEFAULT_PAIR_SEARCH_BOUND};
use sporbits_core::poly::GbBudget;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyAllReport {
    pub n: usize,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
    pub ok: bool,
}

fn inversions(w: &[usize]) -> usize {
    (0..w.len())
        .flat_map(|i| (i + 1..w.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| w[i] > w[j])
        .count()
}

/// Runs `f` on every element in parallel; failures come back sorted.
fn per_element<F>(name: &str, xs: &[FpfInvolution], f: F) -> CheckResult
where
    F: Fn(&FpfInvolution) -> Option<String> + Sync,
{
    let mut failures: Vec<String> = xs.par_iter().filter_map(&f).collect();
    failures.sort();
    CheckResult {
        name: name.to_string(),
        checked: xs.len(),
        failures,
    }
}

pub fn run(n: usize, max_half_size: usize, seed: u64, budget: &GbBudget) -> Result<VerifyAllReport> {
    let mut checks = Vec::new();
    let mut by_size = Vec::new();
    for k in 1..=n {
        by_size.push(enumerate_fpf(k, max_half_size)?);
    }
    let all: Vec<FpfInvolution> = by_size.iter().flatten().cloned().collect();

    checks.push(per_element("length formula", &all, |x| {
        let s = x.pair_statistics();
        let inv = inversions(&x.word());
        (x.n() + 2 * s.c + 4 * s.r != inv || x.fpf_length() != inv)
            .then(|| format!("{x}: inversions {inv}, formula {}", x.n() + 2 * s.c + 4 * s.r))
    }));

    // covers against brute force; quadratic in the poset size
    let mut cover_failures = Vec::new();
    let mut cover_checked = 0;
    for xs in by_size.iter().filter(|xs| xs.len() <= 105) {
        cover_checked += xs.len();
        let mut fails: Vec<String> = xs
            .par_iter()
            .filter_map(|hi| {
                let below: Vec<&FpfInvolution> = xs
                    .iter()
                    .filter(|lo| *lo != hi && opposite_leq(lo, hi).unwrap_or(false))
                    .collect();
                let oracle: std::collections::BTreeSet<FpfInvolution> = below
                    .iter()
                    .filter(|lo| {
                        !below
                            .iter()
                            .any(|c| c != *lo && opposite_leq(lo, c).unwrap_or(false))
                    })
                    .map(|lo| (*lo).clone())
                    .collect();
                (hi.lower_covers() != oracle).then(|| format!("{hi}: covers differ"))
            })
            .collect();
        cover_failures.append(&mut fails);
    }
    cover_failures.sort();
    checks.push(CheckResult {
        name: "covers".into(),
        checked: cover_checked,
        failures: cover_failures,
    });

    checks.push(per_element("basic decomposition", &all, |x| {
        let parts: Vec<_> = match basics_decomposition(x) {
            Ok(p) => p.into_iter().collect(),
            Err(e) => return Some(format!("{x}: {e}")),
        };
        if let Some(p) = parts.iter().find(|p| basic_kind(p).is_none()) {
            return Some(format!("{x}: part {p} is not basic"));
        }
        match glb(&parts, x.n()) {
            Ok(m) if &m == x => None,
            Ok(m) => Some(format!("{x}: meet is {m}")),
            Err(e) => Some(format!("{x}: {e}")),
        }
    }));

    checks.push(per_element("odd-rank constraint", &all, |x| {
        (!odd_rank_constraint_holds(x)).then(|| format!("{x}: violated"))
    }));

    let small: Vec<FpfInvolution> = all
        .iter()
        .filter(|x| x.size() <= DEFAULT_PAIR_SEARCH_BOUND)
        .cloned()
        .collect();
    checks.push(per_element("pair permutation length", &small, |x| {
        let s = x.pair_statistics();
        match pair_permutations(x, DEFAULT_PAIR_SEARCH_BOUND) {
            Ok(set) => set
                .perms
                .iter()
                .find(|w| w.length() != s.c + 2 * s.r)
                .map(|w| format!("{x}: {w} has length {}", w.length())),
            Err(e) => Some(format!("{x}: {e}")),
        }
    }));

    if n >= 2 {
        let catalog: Vec<FpfInvolution> = ["2143", "3412", "4321"]
            .iter()
            .map(|w| w.parse().expect("valid"))
            .collect();
        let results: Vec<Result<Option<String>>> = catalog
            .par_iter()
            .map(|x| {
                let r = verify_degeneration(x, budget)?;
                Ok((!r.equal).then(|| format!("{x}: {} witnesses", r.witnesses.len())))
            })
            .collect();
        let mut failures = Vec::new();
        for r in results {
            if let Some(f) = r? {
                failures.push(f);
            }
        }
        checks.push(CheckResult {
            name: "degeneration at size 4".into(),
            checked: catalog.len(),
            failures,
        });

        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut failures = Vec::new();
        let mut checked = 0;
        for x in &by_size[1] {
            let w = &pair_permutations(x, DEFAULT_PAIR_SEARCH_BOUND)?.perms[0];
            let m = QMatrix::permutation(w);
            for _ in 0..25 {
                let b = QMatrix::random_lower_triangular(4, &mut rng);
                let s = QMatrix::random_symplectic(4, 4, &mut rng)?;
                let got = classify_orbit(&b.mul(&m)?.mul(&s)?)?;
                if &got != x {
                    failures.push(format!("{x}: moved point classified as {got}"));
                }
                checked += 1;
            }
        }
        checks.push(CheckResult {
            name: "classification invariance".into(),
            checked,
            failures,
        });
    }

    let ok = checks.iter().all(CheckResult::passed);
    Ok(VerifyAllReport { n, seed, checks, ok })
}
