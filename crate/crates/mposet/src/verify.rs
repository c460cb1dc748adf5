//! Exhaustive verification of the structural claims as executable predicates
//! over S_n, with deterministic sharded parallelism, plus pattern-class
//! counting.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::join_irr::{build_m, gt_closed_form, leq_product};
use crate::patterns::{
    find_b2, find_c4_parallelogram, find_parallelogram, is_disjoint_union_of_chains,
};
use crate::perm::{
    avoids_all, contains_pattern, factorial, lehmer_code, permutation_at_rank, PatternSet,
    Permutation,
};
use crate::weak_order::{
    birkhoff_isomorphic, code_lattice, is_distributive, lattice_join_irreducibles,
};
use crate::{Error, Result};

/// The verifiable claims. Lattice-side claims rebuild the full interval per
/// permutation and therefore carry lower size caps than the M-poset claims.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Claim {
    MainTheorem,
    Theorem2_1,
    Theorem2_3,
    Birkhoff,
    Lemma2_4,
    Corollary2_5,
    Lemma3_4,
    Lemma3_5,
    Lemma3_6,
    Lemma3_7,
    Lemma3_8,
    Lemma3_9,
}

pub const ALL_CLAIMS: [Claim; 12] = [
    Claim::MainTheorem,
    Claim::Theorem2_1,
    Claim::Theorem2_3,
    Claim::Birkhoff,
    Claim::Lemma2_4,
    Claim::Corollary2_5,
    Claim::Lemma3_4,
    Claim::Lemma3_5,
    Claim::Lemma3_6,
    Claim::Lemma3_7,
    Claim::Lemma3_8,
    Claim::Lemma3_9,
];

impl Claim {
    pub fn id(&self) -> &'static str {
        match self {
            Claim::MainTheorem => "MAIN_THEOREM",
            Claim::Theorem2_1 => "THEOREM_2_1",
            Claim::Theorem2_3 => "THEOREM_2_3",
            Claim::Birkhoff => "BIRKHOFF",
            Claim::Lemma2_4 => "LEMMA_2_4",
            Claim::Corollary2_5 => "COROLLARY_2_5",
            Claim::Lemma3_4 => "LEMMA_3_4",
            Claim::Lemma3_5 => "LEMMA_3_5",
            Claim::Lemma3_6 => "LEMMA_3_6",
            Claim::Lemma3_7 => "LEMMA_3_7",
            Claim::Lemma3_8 => "LEMMA_3_8",
            Claim::Lemma3_9 => "LEMMA_3_9",
        }
    }

    /// Default size cap for the sweep.
    pub fn cap(&self) -> usize {
        match self {
            Claim::MainTheorem => 8,
            Claim::Theorem2_1 | Claim::Theorem2_3 | Claim::Birkhoff => 5,
            _ => 7,
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ALL_CLAIMS
            .iter()
            .find(|c| c.id() == s)
            .copied()
            .ok_or_else(|| Error::InvalidArgument(format!("unknown claim id {s:?}")))
    }
}

/// One failing permutation together with the offending data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub omega: String,
    pub detail: String,
}

/// Outcome of sweeping one claim over all of S_n.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim: String,
    pub n: usize,
    pub checked: u64,
    pub counterexamples: Vec<Counterexample>,
    pub total_counterexamples: u64,
    pub elapsed_secs: f64,
}

impl VerificationReport {
    pub fn pass(&self) -> bool {
        self.total_counterexamples == 0
    }
}

/// Knobs for a sweep.
#[derive(Clone, Copy, Debug)]
pub struct SweepOptions {
    pub workers: usize,
    pub max_witnesses: usize,
    pub override_cap: bool,
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self {
            workers: 1,
            max_witnesses: 100,
            override_cap: false,
        }
    }
}

/// Sweep `claim` over all of S_n. The rank space `0..n!` is split into
/// contiguous lexicographic ranges, one per worker; partial results are merged
/// in range order so the report does not depend on the worker count.
pub fn verify_claim(claim: Claim, n: usize, opts: &SweepOptions) -> Result<VerificationReport> {
    if n == 0 {
        return Err(Error::InvalidArgument("size must be at least 1".into()));
    }
    if n > claim.cap() && !opts.override_cap {
        return Err(Error::ResourceLimit(format!(
            "n = {n} exceeds the default cap {} for {claim}; pass --override-cap to force",
            claim.cap()
        )));
    }
    let start = Instant::now();
    let total = factorial(n);
    let workers = opts.workers.max(1).min(total as usize);
    let chunk = total.div_ceil(workers as u64);
    let shards: Vec<(u64, u64)> = (0..workers as u64)
        .map(|k| (k * chunk, ((k + 1) * chunk).min(total)))
        .filter(|(lo, hi)| lo < hi)
        .collect();

    let results: Vec<(Vec<Counterexample>, u64)> = std::thread::scope(|scope| {
        let handles: Vec<_> = shards
            .iter()
            .map(|&(lo, hi)| {
                scope.spawn(move || sweep_range(claim, n, lo, hi, opts.max_witnesses))
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });

    let mut counterexamples = Vec::new();
    let mut total_counterexamples = 0u64;
    for (witnesses, count) in results {
        total_counterexamples += count;
        for cx in witnesses {
            if counterexamples.len() < opts.max_witnesses {
                counterexamples.push(cx);
            }
        }
    }
    Ok(VerificationReport {
        claim: claim.id().to_string(),
        n,
        checked: total,
        counterexamples,
        total_counterexamples,
        elapsed_secs: start.elapsed().as_secs_f64(),
    })
}

fn sweep_range(
    claim: Claim,
    n: usize,
    lo: u64,
    hi: u64,
    max_witnesses: usize,
) -> (Vec<Counterexample>, u64) {
    let mut witnesses = Vec::new();
    let mut count = 0u64;
    let mut stream = permutation_stream(n, lo);
    for _ in lo..hi {
        let w = stream.next().expect("rank within n!");
        if let Some(detail) = check_claim(claim, &w) {
            count += 1;
            if witnesses.len() < max_witnesses {
                witnesses.push(Counterexample {
                    omega: w.to_string(),
                    detail,
                });
            }
        }
    }
    (witnesses, count)
}

fn permutation_stream(n: usize, start_rank: u64) -> impl Iterator<Item = Permutation> {
    let first = permutation_at_rank(n, start_rank).expect("rank in range");
    crate::perm::permutations_from(first)
}

/// Evaluate one claim on one permutation; `Some(detail)` is a counterexample.
pub fn check_claim(claim: Claim, w: &Permutation) -> Option<String> {
    match claim {
        Claim::MainTheorem => check_main_theorem(w),
        Claim::Theorem2_1 => {
            let l = code_lattice(w);
            (!is_distributive(&l)).then(|| "code lattice not join/meet-closed or not distributive".into())
        }
        Claim::Theorem2_3 => {
            let ji: BTreeSet<Vec<usize>> = lattice_join_irreducibles(&code_lattice(w))
                .into_iter()
                .map(|c| c.entries().to_vec())
                .collect();
            let mv: BTreeSet<Vec<usize>> =
                build_m(w).elements.iter().map(|e| e.vec.clone()).collect();
            (ji != mv).then(|| format!("lattice join-irreducibles {ji:?} != M vectors {mv:?}"))
        }
        Claim::Birkhoff => match birkhoff_isomorphic(&build_m(w), &code_lattice(w)) {
            Ok(true) => None,
            Ok(false) => Some("canonical ideal map is not an order isomorphism".into()),
            Err(e) => Some(format!("ideal enumeration failed: {e}")),
        },
        Claim::Lemma2_4 => check_lemma_2_4(w),
        Claim::Corollary2_5 => {
            let avoids_231 =
                avoids_all(w, &PatternSet::new(vec![Permutation::parse("231").unwrap()]).unwrap());
            (avoids_231 && !is_disjoint_union_of_chains(build_m(w).poset()))
                .then(|| "231-avoiding but M is not a disjoint union of chains".into())
        }
        Claim::Lemma3_4 => check_lemma_3_4(w),
        Claim::Lemma3_5 => check_lemma_3_5(w),
        Claim::Lemma3_6 => check_lemma_3_6(w),
        Claim::Lemma3_7 => {
            let m = build_m(w);
            (find_c4_parallelogram(&m).is_some() && find_parallelogram(&m).is_none())
                .then(|| "C4-parallelogram present but no parallelogram".into())
        }
        Claim::Lemma3_8 => {
            let m = build_m(w);
            let b2 = find_b2(m.poset()).is_some();
            let par = find_parallelogram(&m).is_some();
            (b2 != par).then(|| format!("B2 present: {b2}, parallelogram present: {par}"))
        }
        Claim::Lemma3_9 => {
            let par = find_parallelogram(&build_m(w)).is_some();
            let pat = contains_pattern(w, &Permutation::parse("3412").unwrap())
                || contains_pattern(w, &Permutation::parse("3421").unwrap());
            (par != pat).then(|| format!("parallelogram present: {par}, 3412/3421 pattern: {pat}"))
        }
    }
}

fn check_main_theorem(w: &Permutation) -> Option<String> {
    let m = build_m(w);
    let b2 = find_b2(m.poset());
    let avoids = avoids_all(
        w,
        &PatternSet::new(vec![
            Permutation::parse("3412").unwrap(),
            Permutation::parse("3421").unwrap(),
        ])
        .unwrap(),
    );
    if b2.is_none() != avoids {
        Some(format!(
            "B2-free: {}, 3412/3421-avoiding: {avoids}, witness: {b2:?}",
            b2.is_none()
        ))
    } else {
        None
    }
}

// Closed-form comparability equals strict product-order comparability on every
// ordered label pair.
fn check_lemma_2_4(w: &Permutation) -> Option<String> {
    let code = lehmer_code(w);
    let m = build_m(w);
    let n = w.n();
    for i in 1..=n {
        for x in 1..=code.entry(i) {
            for j in 1..=n {
                for y in 1..=code.entry(j) {
                    let u = &m.elements[m.index_of(i, x)];
                    let v = &m.elements[m.index_of(j, y)];
                    let strict = leq_product(v, u) && u.vec != v.vec;
                    let closed = gt_closed_form(w, (i, x), (j, y)).unwrap();
                    if strict != closed {
                        return Some(format!(
                            "labels ({i},{x}) vs ({j},{y}): product order says {strict}, closed form says {closed}"
                        ));
                    }
                }
            }
        }
    }
    None
}

// Shift a strict relation m_{i,a} > m_{j,b} one level down (a,b >= 2) and one
// level up (a < c_i, b < c_j) along the two chains.
fn check_lemma_3_4(w: &Permutation) -> Option<String> {
    let code = lehmer_code(w);
    let m = build_m(w);
    let n = w.n();
    let gt = |i: usize, x: usize, j: usize, y: usize| {
        let u = &m.elements[m.index_of(i, x)];
        let v = &m.elements[m.index_of(j, y)];
        leq_product(v, u) && u.vec != v.vec
    };
    for i in 1..=n {
        for j in (i + 1)..=n {
            for a in 1..=code.entry(i) {
                for b in 1..=code.entry(j) {
                    if !gt(i, a, j, b) {
                        continue;
                    }
                    if a >= 2 && b >= 2 && !gt(i, a - 1, j, b - 1) {
                        return Some(format!(
                            "m({i},{a}) > m({j},{b}) but not m({i},{}) > m({j},{})",
                            a - 1,
                            b - 1
                        ));
                    }
                    if a < code.entry(i) && b < code.entry(j) && !gt(i, a + 1, j, b + 1) {
                        return Some(format!(
                            "m({i},{a}) > m({j},{b}) but not m({i},{}) > m({j},{})",
                            a + 1,
                            b + 1
                        ));
                    }
                }
            }
        }
    }
    None
}

// m_{i,p} > m_{j,q} with i < j forces the tail inversions of i past j to be a
// subset of those of j.
fn check_lemma_3_5(w: &Permutation) -> Option<String> {
    lemma_gt_pairs(w, |w, i, j| {
        let n = w.n();
        let tail_i: BTreeSet<usize> =
            ((j + 1)..=n).filter(|&k| w.value(i) > w.value(k)).collect();
        let tail_j: BTreeSet<usize> =
            ((j + 1)..=n).filter(|&l| w.value(j) > w.value(l)).collect();
        if tail_i.is_subset(&tail_j) {
            None
        } else {
            Some(format!("tail sets {tail_i:?} not within {tail_j:?}"))
        }
    })
}

// m_{i,p} > m_{j,q} forces c_j >= c_i + q - p.
fn check_lemma_3_6(w: &Permutation) -> Option<String> {
    let code = lehmer_code(w);
    let m = build_m(w);
    let n = w.n();
    for i in 1..=n {
        for j in (i + 1)..=n {
            for p in 1..=code.entry(i) {
                for q in 1..=code.entry(j) {
                    let u = &m.elements[m.index_of(i, p)];
                    let v = &m.elements[m.index_of(j, q)];
                    if leq_product(v, u) && u.vec != v.vec
                        && code.entry(j) + p < code.entry(i) + q
                    {
                        return Some(format!(
                            "m({i},{p}) > m({j},{q}) but c_{j} = {} < c_{i} + {q} - {p}",
                            code.entry(j)
                        ));
                    }
                }
            }
        }
    }
    None
}

// Shared scan: run `predicate(w, i, j)` on every i < j admitting some strictly
// comparable pair across the two chains.
fn lemma_gt_pairs(
    w: &Permutation,
    predicate: impl Fn(&Permutation, usize, usize) -> Option<String>,
) -> Option<String> {
    let code = lehmer_code(w);
    let m = build_m(w);
    let n = w.n();
    for i in 1..=n {
        for j in (i + 1)..=n {
            let related = (1..=code.entry(i)).any(|p| {
                (1..=code.entry(j)).any(|q| {
                    let u = &m.elements[m.index_of(i, p)];
                    let v = &m.elements[m.index_of(j, q)];
                    leq_product(v, u) && u.vec != v.vec
                })
            });
            if related {
                if let Some(detail) = predicate(w, i, j) {
                    return Some(format!("i={i}, j={j}: {detail}"));
                }
            }
        }
    }
    None
}

/// `|{ω ∈ S_n : ω avoids every pattern in ps}|`.
pub fn count_avoiders(n: usize, ps: &PatternSet) -> Result<u64> {
    if n == 0 || n > 11 {
        return Err(Error::InvalidArgument(format!(
            "n = {n} outside supported range 1..=11"
        )));
    }
    Ok(crate::perm::all_permutations(n)?
        .filter(|w| avoids_all(w, ps))
        .count() as u64)
}

/// `|{ω ∈ S_n : M_ω is B₂-free}|`. Shares no detection code with
/// [`count_avoiders`]: this side goes through `build_m` and `find_b2`.
pub fn count_b2_free(n: usize) -> Result<u64> {
    if n == 0 || n > 8 {
        return Err(Error::InvalidArgument(format!(
            "n = {n} outside supported range 1..=8"
        )));
    }
    Ok(crate::perm::all_permutations(n)?
        .filter(|w| find_b2(build_m(w).poset()).is_none())
        .count() as u64)
}

/// The n-th Catalan number `C(2n, n) / (n + 1)`.
pub fn catalan(n: usize) -> u64 {
    let mut binom: u128 = 1;
    for k in 1..=n as u128 {
        binom = binom * (n as u128 + k) / k;
    }
    (binom / (n as u128 + 1)) as u64
}
