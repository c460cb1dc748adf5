//! Permutations in one-line notation, inversion statistics, Lehmer codes,
//! and classical permutation-pattern containment.
//!
//! Positions and values are 1-based throughout the public API.

use std::collections::BTreeSet;
use std::fmt;

use crate::{Error, Result};

/// A permutation of `{1, …, n}` in one-line notation `w(1) w(2) … w(n)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    /// Build from a one-line word. The word must be a rearrangement of `1..=n`.
    pub fn new(word: Vec<usize>) -> Result<Self> {
        if word.is_empty() {
            return Err(Error::InvalidInput("permutation word is empty".into()));
        }
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n {
                return Err(Error::InvalidInput(format!(
                    "value {v} out of range 1..={n}"
                )));
            }
            if seen[v] {
                return Err(Error::InvalidInput(format!("duplicate value {v}")));
            }
            seen[v] = true;
        }
        Ok(Self { word })
    }

    /// The identity permutation of size `n`.
    pub fn identity(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("size must be at least 1".into()));
        }
        Ok(Self {
            word: (1..=n).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    /// Value at 1-based position `pos`.
    pub fn value(&self, pos: usize) -> usize {
        self.word[pos - 1]
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Parse the CLI text form: contiguous digits for `n ≤ 9` ("35142"),
    /// comma-separated values otherwise ("10,3,1,...").
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::Parse("empty permutation text".into()));
        }
        let word: Vec<usize> = if text.contains(',') {
            text.split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad token {tok:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            text.chars()
                .map(|ch| {
                    ch.to_digit(10)
                        .filter(|&d| d > 0)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("bad token {ch:?}")))
                })
                .collect::<Result<_>>()?
        };
        Self::new(word).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for &v in &self.word {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

/// The set of inversion position pairs `(i, j)` with `i < j` and `w(i) > w(j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InversionSet {
    pairs: BTreeSet<(usize, usize)>,
}

impl InversionSet {
    pub fn pairs(&self) -> &BTreeSet<(usize, usize)> {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.pairs.contains(&(i, j))
    }

    pub fn is_subset(&self, other: &InversionSet) -> bool {
        self.pairs.is_subset(&other.pairs)
    }
}

/// `Inv(w) = {(i, j) | 1 ≤ i < j ≤ n, w(i) > w(j)}`.
pub fn inversion_set(w: &Permutation) -> InversionSet {
    let n = w.n();
    let mut pairs = BTreeSet::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            if w.value(i) > w.value(j) {
                pairs.insert((i, j));
            }
        }
    }
    InversionSet { pairs }
}

/// Lehmer code `(c_1, …, c_n)` where `c_i` counts inversions with first
/// coordinate `i`. Also the element type of the code lattice.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LehmerCode {
    entries: Vec<usize>,
}

impl LehmerCode {
    /// Build from entries, enforcing `0 ≤ c_i ≤ n − i`.
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidCode("code is empty".into()));
        }
        let n = entries.len();
        for (idx, &c) in entries.iter().enumerate() {
            if c > n - (idx + 1) {
                return Err(Error::InvalidCode(format!(
                    "entry c_{} = {} exceeds {}",
                    idx + 1,
                    c,
                    n - (idx + 1)
                )));
            }
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// 1-based entry access: `c_i`.
    pub fn entry(&self, i: usize) -> usize {
        self.entries[i - 1]
    }

    pub fn sum(&self) -> usize {
        self.entries.iter().sum()
    }
}

impl fmt::Display for LehmerCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for LehmerCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LehmerCode({self})")
    }
}

/// `c_i(w) = #{j > i : w(i) > w(j)}` for every position `i`.
pub fn lehmer_code(w: &Permutation) -> LehmerCode {
    let n = w.n();
    let entries = (1..=n)
        .map(|i| ((i + 1)..=n).filter(|&j| w.value(i) > w.value(j)).count())
        .collect();
    LehmerCode { entries }
}

/// Inverse of [`lehmer_code`]: `w(i)` is the `(c_i + 1)`-th smallest value not
/// used by earlier positions.
pub fn decode_lehmer(c: &LehmerCode) -> Permutation {
    let n = c.len();
    let mut remaining: Vec<usize> = (1..=n).collect();
    let mut word = Vec::with_capacity(n);
    for i in 1..=n {
        word.push(remaining.remove(c.entry(i)));
    }
    Permutation { word }
}

/// `c_{ij}(w) = #{k | i < k < j, w(i) > w(k)}`: inversions with first
/// coordinate `i` whose second coordinate lies strictly between `i` and `j`.
pub fn c_between(w: &Permutation, i: usize, j: usize) -> Result<usize> {
    if i == 0 || j > w.n() || i >= j {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= i < j <= n, got i={i}, j={j}, n={}",
            w.n()
        )));
    }
    Ok(((i + 1)..j).filter(|&k| w.value(i) > w.value(k)).count())
}

/// Standardization `st`: the unique permutation order-isomorphic to `seq`.
pub fn standardize(seq: &[i64]) -> Result<Permutation> {
    if seq.is_empty() {
        return Err(Error::InvalidInput("sequence is empty".into()));
    }
    let mut sorted: Vec<i64> = seq.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|pair| pair[0] == pair[1]) {
        return Err(Error::InvalidInput("entries are not distinct".into()));
    }
    let word = seq
        .iter()
        .map(|v| sorted.binary_search(v).unwrap() + 1)
        .collect();
    Ok(Permutation { word })
}

/// Whether `w` contains `p` as a classical pattern; on success the witness is
/// the 1-based index tuple of a matching subsequence.
///
/// Backtracking over positions with earliest-feasible-extension pruning; the
/// patterns of interest have length at most 4, so nothing cleverer is needed.
pub fn find_pattern(w: &Permutation, p: &Permutation) -> Option<Vec<usize>> {
    let k = p.n();
    if k > w.n() {
        return None;
    }
    let mut chosen: Vec<usize> = Vec::with_capacity(k);
    if extend_pattern(w, p, &mut chosen) {
        Some(chosen)
    } else {
        None
    }
}

fn extend_pattern(w: &Permutation, p: &Permutation, chosen: &mut Vec<usize>) -> bool {
    let k = p.n();
    let depth = chosen.len();
    if depth == k {
        return true;
    }
    let start = chosen.last().map_or(1, |&last| last + 1);
    // Not enough positions left to finish the pattern.
    for pos in start..=(w.n() - (k - depth - 1)) {
        if pattern_consistent(w, p, chosen, pos) {
            chosen.push(pos);
            if extend_pattern(w, p, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

// The candidate value must relate to every already-chosen value the way the
// pattern entry at this depth relates to the earlier pattern entries.
fn pattern_consistent(w: &Permutation, p: &Permutation, chosen: &[usize], pos: usize) -> bool {
    let depth = chosen.len();
    let v = w.value(pos);
    chosen.iter().enumerate().all(|(t, &earlier)| {
        (w.value(earlier) < v) == (p.value(t + 1) < p.value(depth + 1))
    })
}

pub fn contains_pattern(w: &Permutation, p: &Permutation) -> bool {
    find_pattern(w, p).is_some()
}

/// A non-empty set of forbidden patterns.
#[derive(Clone, Debug)]
pub struct PatternSet {
    patterns: Vec<Permutation>,
}

impl PatternSet {
    pub fn new(patterns: Vec<Permutation>) -> Result<Self> {
        if patterns.is_empty() {
            return Err(Error::InvalidInput("pattern set is empty".into()));
        }
        Ok(Self { patterns })
    }

    pub fn patterns(&self) -> &[Permutation] {
        &self.patterns
    }
}

/// True iff `w` contains none of the patterns in `ps`.
pub fn avoids_all(w: &Permutation, ps: &PatternSet) -> bool {
    ps.patterns.iter().all(|p| !contains_pattern(w, p))
}

/// Lexicographic stream over all of `S_n`; permutations are produced one at a
/// time by in-place successor computation.
pub fn all_permutations(n: usize) -> Result<Permutations> {
    if n == 0 {
        return Err(Error::InvalidArgument("size must be at least 1".into()));
    }
    Ok(Permutations {
        next: Some(Permutation::identity(n).unwrap()),
    })
}

/// Lexicographic stream starting at `first` (inclusive).
pub fn permutations_from(first: Permutation) -> Permutations {
    Permutations { next: Some(first) }
}

pub struct Permutations {
    next: Option<Permutation>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut word = current.word.clone();
        if next_lex(&mut word) {
            self.next = Some(Permutation { word });
        }
        Some(current)
    }
}

// Standard next-permutation step; returns false from the last word.
fn next_lex(word: &mut [usize]) -> bool {
    let n = word.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| word[i] < word[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| word[j] > word[i]).unwrap();
    word.swap(i, j);
    word[i + 1..].reverse();
    true
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// The permutation at lexicographic rank `r` (0-based) in `S_n`. The factorial
/// digits of `r` are exactly the Lehmer code of that permutation.
pub fn permutation_at_rank(n: usize, mut r: u64) -> Result<Permutation> {
    if n == 0 {
        return Err(Error::InvalidArgument("size must be at least 1".into()));
    }
    if r >= factorial(n) {
        return Err(Error::InvalidArgument(format!(
            "rank {r} out of range for S_{n}"
        )));
    }
    let mut entries = vec![0usize; n];
    for (i, entry) in entries.iter_mut().enumerate() {
        let base = factorial(n - 1 - i);
        *entry = (r / base) as usize;
        r %= base;
    }
    Ok(decode_lehmer(&LehmerCode { entries }))
}
