//! The weak-order interval `Λ_ω`, its Lehmer-code lattice under the product
//! order, distributivity and join-irreducible extraction, and the order-ideal
//! (Birkhoff) reconstruction.

use std::collections::{BTreeSet, HashMap, HashSet};

use crate::join_irr::MPoset;
use crate::patterns::FinitePoset;
use crate::perm::{inversion_set, lehmer_code, LehmerCode, Permutation};
use crate::{Error, Result};

/// `Λ_ω = {σ | Inv(σ) ⊆ Inv(ω)}`, enumerated by breadth-first closure from the
/// identity: swap the values `t, t+1` whenever that adds a single inversion
/// already present in `Inv(ω)`. Returned in lexicographic order.
pub fn lambda_interval(w: &Permutation) -> Vec<Permutation> {
    let n = w.n();
    let target = inversion_set(w);
    let mut seen: BTreeSet<Permutation> = BTreeSet::new();
    let mut frontier = vec![Permutation::identity(n).unwrap()];
    seen.insert(frontier[0].clone());
    while let Some(sigma) = frontier.pop() {
        // Position of each value, 1-based.
        let mut pos = vec![0usize; n + 1];
        for (idx, &v) in sigma.word().iter().enumerate() {
            pos[v] = idx + 1;
        }
        for t in 1..n {
            let (i, j) = (pos[t], pos[t + 1]);
            if i < j && target.contains(i, j) {
                let mut word = sigma.word().to_vec();
                word.swap(i - 1, j - 1);
                let next = Permutation::new(word).unwrap();
                if seen.insert(next.clone()) {
                    frontier.push(next);
                }
            }
        }
    }
    seen.into_iter().collect()
}

/// The set `c(Λ_ω)` of Lehmer codes with the product order. Codes are kept in
/// lexicographic order; closure under join/meet is verified, not assumed.
#[derive(Clone, Debug)]
pub struct CodeLattice {
    codes: Vec<LehmerCode>,
    index: HashMap<LehmerCode, usize>,
}

impl CodeLattice {
    pub fn from_codes(mut codes: Vec<LehmerCode>) -> Self {
        codes.sort();
        codes.dedup();
        let index = codes
            .iter()
            .cloned()
            .enumerate()
            .map(|(k, c)| (c, k))
            .collect();
        Self { codes, index }
    }

    pub fn codes(&self) -> &[LehmerCode] {
        &self.codes
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    pub fn contains(&self, c: &LehmerCode) -> bool {
        self.index.contains_key(c)
    }
}

pub fn code_lattice(w: &Permutation) -> CodeLattice {
    CodeLattice::from_codes(lambda_interval(w).iter().map(lehmer_code).collect())
}

/// Componentwise max.
pub fn join(a: &LehmerCode, b: &LehmerCode) -> Result<LehmerCode> {
    zip_codes(a, b, |x, y| x.max(y))
}

/// Componentwise min.
pub fn meet(a: &LehmerCode, b: &LehmerCode) -> Result<LehmerCode> {
    zip_codes(a, b, |x, y| x.min(y))
}

fn zip_codes(
    a: &LehmerCode,
    b: &LehmerCode,
    f: impl Fn(usize, usize) -> usize,
) -> Result<LehmerCode> {
    if a.len() != b.len() {
        return Err(Error::InvalidArgument(format!(
            "code lengths differ: {} vs {}",
            a.len(),
            b.len()
        )));
    }
    let entries = a
        .entries()
        .iter()
        .zip(b.entries())
        .map(|(&x, &y)| f(x, y))
        .collect();
    LehmerCode::new(entries)
}

fn leq_codes(a: &LehmerCode, b: &LehmerCode) -> bool {
    a.entries().iter().zip(b.entries()).all(|(x, y)| x <= y)
}

/// Closure under join/meet plus the distributive law `a∧(b∨c) = (a∧b)∨(a∧c)`
/// checked on every triple.
pub fn is_distributive(l: &CodeLattice) -> bool {
    for a in l.codes() {
        for b in l.codes() {
            let (Ok(j), Ok(m)) = (join(a, b), meet(a, b)) else {
                return false;
            };
            if !l.contains(&j) || !l.contains(&m) {
                return false;
            }
        }
    }
    for a in l.codes() {
        for b in l.codes() {
            for c in l.codes() {
                let lhs = meet(a, &join(b, c).unwrap()).unwrap();
                let rhs = join(&meet(a, b).unwrap(), &meet(a, c).unwrap()).unwrap();
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

/// Elements of the lattice that cover exactly one element.
pub fn lattice_join_irreducibles(l: &CodeLattice) -> Vec<LehmerCode> {
    let n = l.len();
    let lt = |a: usize, b: usize| a != b && leq_codes(&l.codes()[a], &l.codes()[b]);
    let mut irreducibles = Vec::new();
    for v in 0..n {
        let covered = (0..n)
            .filter(|&u| lt(u, v) && !(0..n).any(|w| lt(u, w) && lt(w, v)))
            .count();
        if covered == 1 {
            irreducibles.push(l.codes()[v].clone());
        }
    }
    irreducibles
}

/// Order ideals (down-closed subsets) of a finite poset, ordered by inclusion.
/// Each ideal is a bitset over element indices.
#[derive(Clone, Debug)]
pub struct IdealLattice {
    pub ideals: Vec<u64>,
    pub poset_size: usize,
}

pub const DEFAULT_IDEAL_CAP: usize = 1_000_000;
const IDEAL_POSET_SIZE_CAP: usize = 28;

/// Enumerate all order ideals of `p`, erroring out past `cap` ideals.
pub fn ideal_lattice(p: &FinitePoset, cap: usize) -> Result<IdealLattice> {
    let n = p.size();
    if n > IDEAL_POSET_SIZE_CAP {
        return Err(Error::ResourceLimit(format!(
            "poset size {n} exceeds ideal-enumeration cap {IDEAL_POSET_SIZE_CAP}"
        )));
    }
    // Linear extension: sort indices by number of elements below.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (0..n).filter(|&u| p.lt(u, v)).count());
    // Strict lower sets as bitmasks.
    let below: Vec<u64> = (0..n)
        .map(|v| (0..n).filter(|&u| p.lt(u, v)).fold(0u64, |acc, u| acc | 1 << u))
        .collect();
    let mut ideals = Vec::new();
    let mut stack = vec![(0usize, 0u64)];
    while let Some((depth, mask)) = stack.pop() {
        if depth == n {
            ideals.push(mask);
            if ideals.len() > cap {
                return Err(Error::ResourceLimit(format!(
                    "ideal count exceeds cap {cap}"
                )));
            }
            continue;
        }
        let v = order[depth];
        stack.push((depth + 1, mask));
        // v may join the ideal only if everything below it already has.
        if below[v] & mask == below[v] {
            stack.push((depth + 1, mask | 1 << v));
        }
    }
    ideals.sort_unstable();
    Ok(IdealLattice {
        ideals,
        poset_size: n,
    })
}

/// Birkhoff check via the canonical map: ideal `I ↦` componentwise max of the
/// member vectors (`∅ ↦ 0`). True iff this is an order isomorphism
/// `J(M_ω) → c(Λ_ω)`.
pub fn birkhoff_isomorphic(m: &MPoset, l: &CodeLattice) -> Result<bool> {
    let ideals = ideal_lattice(m.poset(), DEFAULT_IDEAL_CAP)?;
    if ideals.ideals.len() != l.len() {
        return Ok(false);
    }
    let n = m.omega().n();
    let images: Vec<LehmerCode> = ideals
        .ideals
        .iter()
        .map(|&mask| {
            let mut vec = vec![0usize; n];
            for (idx, e) in m.elements.iter().enumerate() {
                if mask & (1 << idx) != 0 {
                    for (slot, &coord) in vec.iter_mut().zip(&e.vec) {
                        *slot = (*slot).max(coord);
                    }
                }
            }
            LehmerCode::new(vec)
        })
        .collect::<Result<_>>()?;
    // Injective onto the lattice.
    let distinct: HashSet<&LehmerCode> = images.iter().collect();
    if distinct.len() != images.len() || !images.iter().all(|c| l.contains(c)) {
        return Ok(false);
    }
    // Order preserved in both directions.
    for (a, &ma) in ideals.ideals.iter().enumerate() {
        for (b, &mb) in ideals.ideals.iter().enumerate() {
            let subset = ma & mb == ma;
            if subset != leq_codes(&images[a], &images[b]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
