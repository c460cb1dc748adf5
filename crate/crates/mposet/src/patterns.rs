//! Generic finite-poset machinery and detectors for the order patterns of
//! interest: B₂ subposets, parallelogram and C₄-parallelogram quadruples,
//! disjoint-union-of-chains recognition, and Hasse-diagram extraction.

use serde::{Deserialize, Serialize};

use crate::join_irr::MPoset;
use crate::{Error, Result};

/// A finite poset as an element count plus a dense order-relation matrix.
/// Reflexivity, antisymmetry, and transitivity are validated on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePoset {
    size: usize,
    leq: Vec<bool>,
}

impl FinitePoset {
    pub fn new(size: usize, leq: Vec<bool>) -> Result<Self> {
        if leq.len() != size * size {
            return Err(Error::InvalidArgument(format!(
                "relation matrix has {} entries, expected {}",
                leq.len(),
                size * size
            )));
        }
        let p = Self { size, leq };
        for a in 0..size {
            if !p.leq(a, a) {
                return Err(Error::InvalidArgument(format!("not reflexive at {a}")));
            }
            for b in 0..size {
                if a != b && p.leq(a, b) && p.leq(b, a) {
                    return Err(Error::InvalidArgument(format!(
                        "not antisymmetric at ({a}, {b})"
                    )));
                }
                for c in 0..size {
                    if p.leq(a, b) && p.leq(b, c) && !p.leq(a, c) {
                        return Err(Error::InvalidArgument(format!(
                            "not transitive at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(p)
    }

    /// Build from a comparison predicate over element indices.
    pub fn from_fn(size: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let mut matrix = vec![false; size * size];
        for a in 0..size {
            for b in 0..size {
                matrix[a * size + b] = leq(a, b);
            }
        }
        Self::new(size, matrix)
    }

    /// A chain `0 < 1 < … < size-1`.
    pub fn chain(size: usize) -> Self {
        Self::from_fn(size, |a, b| a <= b).unwrap()
    }

    /// An antichain on `size` elements.
    pub fn antichain(size: usize) -> Self {
        Self::from_fn(size, |a, b| a == b).unwrap()
    }

    /// The Boolean lattice of rank 2: bottom 0, incomparable middles 1 and 2, top 3.
    pub fn b2() -> Self {
        Self::from_fn(4, |a, b| a == b || (a == 0 && b > 0) || (b == 3 && a < 3)).unwrap()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.size + b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }
}

/// Pattern kinds reported by the detectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PatternKind {
    B2,
    Parallelogram,
    C4Parallelogram,
}

/// A witness quadruple for a detected pattern. `elements` are indices into the
/// host poset; `labels` carries the `(i, x)` chain labels when the host is an
/// `MPoset`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternWitness {
    pub kind: PatternKind,
    pub elements: [usize; 4],
    pub labels: Option<[(usize, usize); 4]>,
}

/// Search for an induced B₂: bottom `s`, top `t`, and two incomparable middles
/// strictly between them. Returns the first witness in (s, t, u, v) scan order.
pub fn find_b2(p: &FinitePoset) -> Option<PatternWitness> {
    let n = p.size();
    for s in 0..n {
        for t in 0..n {
            if !p.lt(s, t) {
                continue;
            }
            let middles: Vec<usize> = (0..n)
                .filter(|&u| p.lt(s, u) && p.lt(u, t))
                .collect();
            for (a, &u) in middles.iter().enumerate() {
                for &v in &middles[a + 1..] {
                    if !p.comparable(u, v) {
                        return Some(PatternWitness {
                            kind: PatternKind::B2,
                            elements: [s, u, v, t],
                            labels: None,
                        });
                    }
                }
            }
        }
    }
    None
}

/// Search `M_ω` for a parallelogram: chains `C_i`, `C_j` with `i < j`,
/// levels `b < a`, `c < d`, `a + c = b + d`, with `m_{i,a} > m_{j,d}`,
/// `m_{i,b} > m_{j,c}` and `m_{i,b}` incomparable to `m_{j,d}`.
/// Returns the lexicographically smallest witness by `(i, j, a, d)`.
pub fn find_parallelogram(m: &MPoset) -> Option<PatternWitness> {
    find_quad(m, false)
}

/// Same levels and index constraints as [`find_parallelogram`] but with
/// `m_{i,b} > m_{j,d}`, so the four elements form a chain.
pub fn find_c4_parallelogram(m: &MPoset) -> Option<PatternWitness> {
    find_quad(m, true)
}

fn find_quad(m: &MPoset, chain_variant: bool) -> Option<PatternWitness> {
    let n = m.omega().n();
    for i in 1..=n {
        let ci = m.chain_len(i);
        if ci < 2 {
            continue;
        }
        for j in (i + 1)..=n {
            let cj = m.chain_len(j);
            if cj < 2 {
                continue;
            }
            for a in 2..=ci {
                for d in 2..=cj {
                    // a + c = b + d with b < a, c < d forces b = a - d + c >= 1.
                    for c in 1..d {
                        let Some(b) = (a + c).checked_sub(d).filter(|&b| b >= 1 && b < a) else {
                            continue;
                        };
                        let top = m.index_of(i, a);
                        let left = m.index_of(i, b);
                        let right = m.index_of(j, d);
                        let bottom = m.index_of(j, c);
                        let poset = m.poset();
                        if !poset.lt(right, top) || !poset.lt(bottom, left) {
                            continue;
                        }
                        let mid_comparable = poset.comparable(left, right);
                        if mid_comparable == chain_variant {
                            return Some(PatternWitness {
                                kind: if chain_variant {
                                    PatternKind::C4Parallelogram
                                } else {
                                    PatternKind::Parallelogram
                                },
                                elements: [bottom, left, right, top],
                                labels: Some([(j, c), (i, b), (j, d), (i, a)]),
                            });
                        }
                    }
                }
            }
        }
    }
    None
}

/// True iff every connected component of the comparability graph is totally
/// ordered, i.e. the poset is a disjoint union of chains.
pub fn is_disjoint_union_of_chains(p: &FinitePoset) -> bool {
    let n = p.size();
    let mut component = vec![usize::MAX; n];
    for start in 0..n {
        if component[start] != usize::MAX {
            continue;
        }
        let mut stack = vec![start];
        component[start] = start;
        let mut members = Vec::new();
        while let Some(a) = stack.pop() {
            members.push(a);
            for (b, slot) in component.iter_mut().enumerate() {
                if a != b && p.comparable(a, b) && *slot == usize::MAX {
                    *slot = start;
                    stack.push(b);
                }
            }
        }
        for (idx, &a) in members.iter().enumerate() {
            for &b in &members[idx + 1..] {
                if !p.comparable(a, b) {
                    return false;
                }
            }
        }
    }
    true
}

/// The cover relation: pairs `u < v` with no element strictly between.
pub fn hasse_edges(p: &FinitePoset) -> Vec<(usize, usize)> {
    let n = p.size();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if p.lt(u, v)
                && !(0..n).any(|w| p.lt(u, w) && p.lt(w, v))
            {
                edges.push((u, v));
            }
        }
    }
    edges
}

const PATTERN_SIZE_CAP: usize = 5;

/// Induced-subposet containment: does some subset of `p` induce a poset
/// order-isomorphic to `q`? Backtracking assignment of `q`'s elements.
pub fn contains_poset_pattern(p: &FinitePoset, q: &FinitePoset) -> Result<bool> {
    if q.size() > PATTERN_SIZE_CAP {
        return Err(Error::ResourceLimit(format!(
            "pattern size {} exceeds cap {PATTERN_SIZE_CAP}",
            q.size()
        )));
    }
    let mut assigned: Vec<usize> = Vec::with_capacity(q.size());
    Ok(assign(p, q, &mut assigned))
}

fn assign(p: &FinitePoset, q: &FinitePoset, assigned: &mut Vec<usize>) -> bool {
    let depth = assigned.len();
    if depth == q.size() {
        return true;
    }
    'candidates: for cand in 0..p.size() {
        if assigned.contains(&cand) {
            continue;
        }
        for (prev, &img) in assigned.iter().enumerate() {
            if q.leq(prev, depth) != p.leq(img, cand) || q.leq(depth, prev) != p.leq(cand, img) {
                continue 'candidates;
            }
        }
        assigned.push(cand);
        if assign(p, q, assigned) {
            return true;
        }
        assigned.pop();
    }
    false
}
