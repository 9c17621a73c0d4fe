//! Invariant suites run by `ppm selftest`, plus the lower-bound family that
//! only these checks use.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;

use crate::domain::{
    format_permutation, is_solution, is_solution_by_pattern, parse_permutation, respects,
    validate_decomposition, Embedding, Permutation, PpmInstance, SegmentDecomposition,
};
use crate::dp::{LinearDp, RespectCounter};
use crate::error::{PpmError, Result};
use crate::oracle::{bkm_decompositions, bkm_report, brute_force, DEFAULT_MAX_N};
use crate::rng::{planted_instance, random_instance, SplitMix64};
use crate::solver::{
    canonical_decomposition, checked_binomial, count_ppm_with, decomposition_family,
    detect_ppm_report, enumerate_guesses, Combinations,
};

/// Largest `n` for which [`lowerbound_family`] materializes its set.
pub const LOWERBOUND_MAX_N: usize = 24;

/// For every increasing `f: [⌊k/2⌋] → [⌊(n−1)/2⌋]`, the embedding
/// `g_f(2i) = 2f(i)`, `g_f(2i−1) = 2f(i)−1` (and `g_f(k) = n` for odd `k`),
/// mapped to its canonical decomposition. The result should have
/// `binom(⌊(n−1)/2⌋, ⌊k/2⌋)` distinct members.
pub fn lowerbound_family(n: usize, k: usize) -> Result<BTreeSet<SegmentDecomposition>> {
    if k == 0 || k > n || k / 2 > (n - 1) / 2 {
        return Err(PpmError::InstanceTooSmall(format!(
            "n = {n}, k = {k}: need 1 <= k <= n and k/2 <= (n-1)/2"
        )));
    }
    if n > LOWERBOUND_MAX_N {
        return Err(PpmError::InstanceTooLarge {
            n,
            cap: LOWERBOUND_MAX_N,
        });
    }
    let mut out = BTreeSet::new();
    for f in Combinations::new((n - 1) / 2, k / 2, 1) {
        let mut g = Vec::with_capacity(k);
        for &v in &f {
            g.push(2 * v - 1);
            g.push(2 * v);
        }
        if k % 2 == 1 {
            g.push(n);
        }
        let g = Embedding::new(g)?;
        out.insert(canonical_decomposition(&g, n)?);
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug)]
pub struct SelftestConfig {
    /// Exhaustive suites cover every instance with `n <= max_n`.
    pub max_n: usize,
    /// Seeded random instances for the equivalence suite.
    pub random_instances: usize,
    pub seed: u64,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        SelftestConfig {
            max_n: 6,
            random_instances: 2_000,
            seed: 0x5eed,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub checked: u64,
    /// First failure, if any.
    pub failure: Option<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "{}: pass ({} checks)", self.name, self.checked),
            Some(why) => write!(
                f,
                "{}: FAIL after {} checks: {why}",
                self.name, self.checked
            ),
        }
    }
}

/// Every permutation of `[n]` in lexicographic order.
pub fn permutations_of(n: usize) -> impl Iterator<Item = Permutation> {
    (1..=n)
        .permutations(n)
        .map(|v| Permutation::new(v).expect("itertools yields permutations"))
}

/// Every instance with text length `1..=max_n` and every pattern length.
pub fn all_instances(max_n: usize) -> impl Iterator<Item = PpmInstance> {
    (1..=max_n).flat_map(|n| {
        permutations_of(n).flat_map(move |sigma| {
            (1..=n).flat_map(move |k| {
                let sigma = sigma.clone();
                permutations_of(k)
                    .map(move |pi| PpmInstance::new(sigma.clone(), pi).expect("k <= n"))
            })
        })
    })
}

struct Suite {
    name: &'static str,
    checked: u64,
    failure: Option<String>,
}

impl Suite {
    fn new(name: &'static str) -> Self {
        Suite {
            name,
            checked: 0,
            failure: None,
        }
    }

    /// Records one check; returns false once the suite has failed.
    fn check(&mut self, ok: bool, why: impl FnOnce() -> String) -> bool {
        self.checked += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(why());
        }
        self.failure.is_none()
    }

    fn finish(self) -> SuiteResult {
        SuiteResult {
            name: self.name,
            checked: self.checked,
            failure: self.failure,
        }
    }
}

fn oracle_solutions(instance: &PpmInstance) -> Vec<Embedding> {
    brute_force(instance, true, DEFAULT_MAX_N)
        .expect("selftest sizes are below the oracle cap")
        .solutions
        .unwrap_or_default()
}

fn describe(instance: &PpmInstance) -> String {
    format!("σ = ({}), π = ({})", instance.sigma(), instance.pattern())
}

/// Runs every suite with the standard DP.
pub fn run(config: &SelftestConfig) -> Vec<SuiteResult> {
    run_with(config, LinearDp::new)
}

/// Runs every suite, building per-decomposition counters with
/// `make_counter`.
pub fn run_with<C, F>(config: &SelftestConfig, make_counter: F) -> Vec<SuiteResult>
where
    C: RespectCounter,
    F: Fn() -> C,
{
    let max_n = config.max_n.max(1);
    let family_n = (3 * max_n).min(20);
    vec![
        parse_roundtrip(max_n),
        solution_predicates(max_n.min(5)),
        dp_oracle(max_n, &mut make_counter()),
        exactly_once_membership(max_n),
        family_cardinality(family_n),
        lowerbound_cardinality(family_n),
        oracle_equivalence(config, &mut make_counter()),
        detect_consistency(max_n, &mut make_counter()),
        bkm_exactly_once(max_n),
    ]
}

fn parse_roundtrip(max_n: usize) -> SuiteResult {
    let mut s = Suite::new("parse-roundtrip");
    for n in 1..=max_n.min(7) {
        for p in permutations_of(n) {
            let text = format_permutation(&p);
            if !s.check(parse_permutation(&text).as_ref() == Ok(&p), || {
                format!("{text:?}")
            }) {
                return s.finish();
            }
        }
    }
    s.finish()
}

fn solution_predicates(max_n: usize) -> SuiteResult {
    let mut s = Suite::new("solution-predicates");
    for inst in all_instances(max_n) {
        for f in Combinations::new(inst.n(), inst.k(), 1) {
            let f = Embedding::new(f).expect("combinations increase");
            let a = is_solution(&inst, &f).expect("shapes match");
            let b = is_solution_by_pattern(&inst, &f).expect("shapes match");
            if !s.check(a == b, || {
                format!("{} f = {:?}", describe(&inst), f.as_slice())
            }) {
                return s.finish();
            }
        }
    }
    s.finish()
}

fn dp_oracle<C: RespectCounter>(max_n: usize, counter: &mut C) -> SuiteResult {
    let mut s = Suite::new("dp-oracle");
    for inst in all_instances(max_n) {
        let sols = oracle_solutions(&inst);
        for d in decomposition_family(inst.n(), inst.k()).expect("valid sizes") {
            let expect = sols.iter().filter(|f| respects(f, &d).unwrap()).count() as u64;
            let got = counter.count_respecting(&inst, &d);
            if !s.check(got == expect, || {
                format!("{} D = {d}: dp {got}, oracle {expect}", describe(&inst))
            }) {
                return s.finish();
            }
        }
    }
    s.finish()
}

fn exactly_once_membership(max_n: usize) -> SuiteResult {
    let mut s = Suite::new("lemma6-uniqueness");
    for inst in all_instances(max_n) {
        let sols = oracle_solutions(&inst);
        if sols.is_empty() {
            continue;
        }
        let family: Vec<_> = decomposition_family(inst.n(), inst.k())
            .expect("valid sizes")
            .collect();
        for f in &sols {
            let hits: Vec<_> = family.iter().filter(|d| respects(f, d).unwrap()).collect();
            let canonical = canonical_decomposition(f, inst.n()).expect("f within [n]");
            let ok = hits.len() == 1 && *hits[0] == canonical;
            if !s.check(ok, || {
                format!(
                    "{} f = {:?}: {} respected members",
                    describe(&inst),
                    f.as_slice(),
                    hits.len()
                )
            }) {
                return s.finish();
            }
        }
    }
    s.finish()
}

fn family_cardinality(max_n: usize) -> SuiteResult {
    let mut s = Suite::new("family-cardinality");
    for n in 1..=max_n {
        for k in 1..=n {
            let mut size = 0u128;
            let mut valid = true;
            for d in decomposition_family(n, k).expect("valid sizes") {
                size += 1;
                valid &= validate_decomposition(n, d.segments()).is_ok();
            }
            let streamed = enumerate_guesses(n, k).expect("valid sizes").count() as u128;
            let expect = checked_binomial(n / 2, k / 2).expect("small");
            if !s.check(valid && size == expect && streamed == expect, || {
                format!("n = {n}, k = {k}: {size} members, expected {expect}, valid = {valid}")
            }) {
                return s.finish();
            }
        }
    }
    s.finish()
}

fn lowerbound_cardinality(max_n: usize) -> SuiteResult {
    let mut s = Suite::new("lowerbound-family");
    for n in 1..=max_n {
        for k in (1..=n).filter(|k| k / 2 <= (n - 1) / 2) {
            let got = lowerbound_family(n, k).map(|f| f.len() as u128);
            let expect = checked_binomial((n - 1) / 2, k / 2).expect("small");
            if !s.check(got == Ok(expect), || {
                format!("n = {n}, k = {k}: {got:?} vs {expect}")
            }) {
                return s.finish();
            }
        }
    }
    s.finish()
}

fn oracle_equivalence<C: RespectCounter>(config: &SelftestConfig, counter: &mut C) -> SuiteResult {
    let mut s = Suite::new("oracle-equivalence");
    let mut compare = |s: &mut Suite, inst: &PpmInstance| {
        let brute = brute_force(inst, false, DEFAULT_MAX_N)
            .expect("below cap")
            .count;
        let fast = count_ppm_with(inst, counter);
        let bkm = bkm_report(inst, counter).count;
        s.check(fast == brute && bkm == brute, || {
            format!("{}: fast {fast}, bkm {bkm}, brute {brute}", describe(inst))
        })
    };
    for inst in all_instances(config.max_n) {
        if !compare(&mut s, &inst) {
            return s.finish();
        }
    }
    let hi = (config.max_n + 6).min(12);
    let lo = (config.max_n + 1).min(hi);
    let mut rng = SplitMix64::new(config.seed);
    for _ in 0..config.random_instances {
        let n = lo + rng.below((hi - lo + 1) as u64) as usize;
        let k = 1 + rng.below(n as u64) as usize;
        let seed = rng.next_u64();
        let inst = if seed.is_multiple_of(2) {
            planted_instance(n, k, seed)
        } else {
            random_instance(n, k, seed)
        };
        if !compare(&mut s, &inst) {
            return s.finish();
        }
    }
    s.finish()
}

fn detect_consistency<C: RespectCounter>(max_n: usize, counter: &mut C) -> SuiteResult {
    let mut s = Suite::new("detect-consistency");
    for inst in all_instances(max_n) {
        let brute = brute_force(&inst, false, DEFAULT_MAX_N)
            .expect("below cap")
            .count;
        let found = detect_ppm_report(&inst, counter).found;
        if !s.check(found == !brute.is_zero(), || {
            format!("{}: detect {found}, brute {brute}", describe(&inst))
        }) {
            return s.finish();
        }
    }
    s.finish()
}

fn bkm_exactly_once(max_n: usize) -> SuiteResult {
    let mut s = Suite::new("bkm-exactly-once");
    for inst in all_instances(max_n) {
        let sols = oracle_solutions(&inst);
        if sols.is_empty() {
            continue;
        }
        let family = bkm_decompositions(inst.n(), inst.k()).expect("valid sizes");
        for f in &sols {
            let hits = family.iter().filter(|d| respects(f, d).unwrap()).count();
            if !s.check(hits == 1, || {
                format!("{} f = {:?}: {hits} hits", describe(&inst), f.as_slice())
            }) {
                return s.finish();
            }
        }
    }
    s.finish()
}
