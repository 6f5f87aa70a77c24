//! Seeded verification suites for the coloring, size-bound and flower results.
//!
//! Trial `i` of a suite run with seed `S` draws from `ChaCha8Rng` seeded
//! with `S + i`, so results do not depend on how trials are scheduled.

use std::collections::BTreeSet;
use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::constructive::{color_cross_family, proposition_four_coloring, theorem_three_coloring, Verdict};
use crate::exact::Solver;
use crate::family::restrict_edges;
use crate::generators::{disjoint_copies, fano, simple_based};
use crate::predicates::{exceptional_structure, is_critical, q_set};
use crate::random::{self, CrossSpernerParams};

#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    pub seed: u64,
    pub trials: usize,
    /// Largest edge size drawn.
    pub n: usize,
    /// Petal count for the flower suite.
    pub k: usize,
    pub solver: Solver,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { seed: 0, trials: 100, n: 3, k: 3, solver: Solver::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrialFailure {
    pub trial: usize,
    pub seed: u64,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub trials: usize,
    pub failures: Vec<TrialFailure>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {}: {}/{} trials ok",
            self.suite,
            self.trials - self.failures.len(),
            self.trials
        )?;
        for fail in &self.failures {
            write!(f, "\n  trial {} (seed {}): {}", fail.trial, fail.seed, fail.message)?;
        }
        Ok(())
    }
}

fn run_trials<F>(suite: &'static str, cfg: &SuiteConfig, trial: F) -> SuiteReport
where
    F: Fn(&mut ChaCha8Rng) -> Result<(), String> + Sync,
{
    let outcomes: Vec<_> = (0..cfg.trials)
        .into_par_iter()
        .map(|i| {
            let seed = cfg.seed.wrapping_add(i as u64);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            trial(&mut rng).err().map(|message| TrialFailure { trial: i, seed, message })
        })
        .collect();
    SuiteReport { suite, trials: cfg.trials, failures: outcomes.into_iter().flatten().collect() }
}

/// Sperner cross-intersecting families with all edges of size ≥ 3: the
/// explicit construction yields a proper coloring with at most 3 colors and
/// the exact chromatic number is at most 3.
pub fn three_coloring(cfg: &SuiteConfig) -> SuiteReport {
    let params = CrossSpernerParams::new(5..=9, 3..=cfg.n.max(3));
    run_trials("thm1-constructive", cfg, |rng| {
        let family = random::cross_sperner(rng, &params);
        let coloring = theorem_three_coloring(&family).map_err(|e| e.to_string())?;
        if !coloring.is_proper(&family) || coloring.distinct_colors() > 3 {
            return Err(format!("bad coloring {:?}", coloring.colors()));
        }
        let chi = cfg.solver.chi(&family).map_err(|e| e.to_string())?;
        if chi.value > 3 {
            return Err(format!("exact chi = {} > 3", chi.value));
        }
        Ok(())
    })
}

/// Sperner cross-intersecting families with edges of size ≥ 2: the
/// dispatcher succeeds, and reports the exceptional verdict exactly when the
/// chromatic number is 4.
pub fn dispatcher(cfg: &SuiteConfig) -> SuiteReport {
    let params = CrossSpernerParams::new(4..=7, 2..=cfg.n.max(2));
    run_trials("thm1-dispatcher", cfg, |rng| {
        let family = random::cross_sperner(rng, &params);
        let (coloring, verdict) =
            color_cross_family(&family, &cfg.solver).map_err(|e| e.to_string())?;
        if !coloring.is_proper(&family) {
            return Err("dispatcher coloring is improper".into());
        }
        let chi = cfg.solver.chi(&family).map_err(|e| e.to_string())?.value;
        let exceptional = verdict == Verdict::ExceptionalChi4;
        if exceptional != (chi == 4) || exceptional != exceptional_structure(&family).is_some() {
            return Err(format!("verdict {verdict:?} but exact chi = {chi}"));
        }
        Ok(())
    })
}

/// Random critical cross-intersecting families with edges of size ≤ `n`
/// satisfy `max(|A|, |B|) ≤ nⁿ` for their own largest edge size.
pub fn edge_bound(cfg: &SuiteConfig) -> SuiteReport {
    let n = cfg.n.max(1);
    run_trials("thm2", cfg, |rng| {
        let family = random::critical(rng, n, n..=n + 3);
        if !is_critical(&family).map_err(|e| e.to_string())? {
            return Err("generator produced a non-critical family".into());
        }
        let report = cfg.solver.check_theorem2(&family).map_err(|e| e.to_string())?;
        if !report.bound_holds {
            return Err(format!(
                "|A| = {}, |B| = {} exceed n^n = {}",
                report.size_a, report.size_b, report.bound
            ));
        }
        Ok(())
    })
}

/// `Q(H)` and `χ` of the simple-based construction on one and two Fano planes.
pub fn intersection_sizes(cfg: &SuiteConfig) -> SuiteReport {
    let check = || -> Result<(), String> {
        let err = |e: crate::Error| e.to_string();
        let double = simple_based(&disjoint_copies(&fano(), 2).map_err(err)?, 4, &cfg.solver)
            .map_err(err)?;
        let q = q_set(&double).map_err(err)?;
        if q != BTreeSet::from([0, 1, 2, 3]) {
            return Err(format!("two Fano copies: Q = {q:?}"));
        }
        let chi = cfg.solver.chi(&double).map_err(err)?.value;
        if chi != 3 {
            return Err(format!("two Fano copies: chi = {chi}"));
        }
        let single = simple_based(&fano(), 4, &cfg.solver).map_err(err)?;
        let q = q_set(&single).map_err(err)?;
        if q != BTreeSet::from([1, 2, 3]) {
            return Err(format!("one Fano plane: Q = {q:?}"));
        }
        Ok(())
    };
    let failures = check()
        .err()
        .map(|message| TrialFailure { trial: 0, seed: cfg.seed, message })
        .into_iter()
        .collect();
    SuiteReport { suite: "thm3", trials: 1, failures }
}

/// Sperner cross-intersecting families with disjoint sides: the
/// minimal-pair construction is a proper coloring with at most 4 colors.
pub fn four_coloring(cfg: &SuiteConfig) -> SuiteReport {
    let params = CrossSpernerParams::new(4..=9, 2..=cfg.n.max(2));
    run_trials("prop1", cfg, |rng| {
        let family = random::cross_sperner(rng, &params);
        let coloring = proposition_four_coloring(&family).map_err(|e| e.to_string())?;
        if !coloring.is_proper(&family) || coloring.distinct_colors() > 4 {
            return Err(format!("bad coloring {:?}", coloring.colors()));
        }
        Ok(())
    })
}

/// Random edge sets with largest edge size `n` and `(k − 1)ⁿ + 1` edges
/// always contain a flower with `k` petals.
pub fn flowers(cfg: &SuiteConfig) -> SuiteReport {
    let (n, k) = (cfg.n.max(1), cfg.k.max(1));
    let count = (k - 1).pow(n as u32) + 1;
    // Smallest universe with enough distinct edges, but at least n + 2.
    let distinct = |v: usize| (1..=n).map(|s| binomial(v, s)).sum::<usize>();
    let vertices = (n + 2..).find(|&v| distinct(v) >= count).expect("finite");
    run_trials("lemma-flower", cfg, |rng| {
        let edges = random::edge_set(rng, n, count, vertices);
        let cert = cfg
            .solver
            .find_flower(&edges, k)
            .map_err(|e| e.to_string())?
            .ok_or_else(|| format!("no flower with {k} petals among {count} edges"))?;
        let tau = cfg
            .solver
            .tau(&restrict_edges(&edges, &cert.core))
            .map_err(|e| e.to_string())?;
        if !tau.value.at_least(k) {
            return Err(format!("core {} leaves tau {}", cert.core, tau.value));
        }
        Ok(())
    })
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
