//! Join-irreducible elements `m_{i,x}(ω)` of the Lehmer-code lattice, built by
//! the explicit coordinate formula, and the poset `M_ω` they span under the
//! product order. Also the closed-form comparability oracle.

use crate::patterns::FinitePoset;
use crate::perm::{c_between, inversion_set, lehmer_code, InversionSet, Permutation};
use crate::{Error, Result};

/// The element `m_{i,x}(ω)` with its `(i, x)` chain label and coordinate vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MElement {
    pub i: usize,
    pub x: usize,
    /// Coordinates `π_1 … π_n`; index `j-1` holds `π_j`.
    pub vec: Vec<usize>,
}

/// Coordinate formula:
/// `π_j = 0` for `j < i` or `(i, j)` an inversion of `ω`,
/// `π_i = x`, and `π_j = max(0, x − c_{ij}(ω))` otherwise.
pub fn m_vector(w: &Permutation, i: usize, x: usize) -> Result<MElement> {
    let code = lehmer_code(w);
    if i == 0 || i > w.n() {
        return Err(Error::InvalidArgument(format!("position {i} out of range")));
    }
    let ci = code.entry(i);
    if ci == 0 {
        return Err(Error::InvalidArgument(format!(
            "c_{i} = 0: chain C_{i} is empty"
        )));
    }
    if x == 0 || x > ci {
        return Err(Error::InvalidArgument(format!(
            "level {x} out of range 1..={ci}"
        )));
    }
    let inv = inversion_set(w);
    Ok(m_vector_unchecked(w, &inv, i, x))
}

fn m_vector_unchecked(w: &Permutation, inv: &InversionSet, i: usize, x: usize) -> MElement {
    let n = w.n();
    let mut vec = vec![0usize; n];
    vec[i - 1] = x;
    for j in (i + 1)..=n {
        if !inv.contains(i, j) {
            let cij = c_between(w, i, j).unwrap();
            vec[j - 1] = x.saturating_sub(cij);
        }
    }
    MElement { i, x, vec }
}

/// The poset `M_ω` of all `m_{i,x}(ω)` under the product order, with a dense
/// relation matrix for O(1) comparability queries.
#[derive(Clone, Debug)]
pub struct MPoset {
    omega: Permutation,
    pub elements: Vec<MElement>,
    poset: FinitePoset,
    chain_lens: Vec<usize>,
    chain_starts: Vec<usize>,
}

impl MPoset {
    pub fn omega(&self) -> &Permutation {
        &self.omega
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    /// Length of the chain `C_i`, i.e. `c_i(ω)`.
    pub fn chain_len(&self, i: usize) -> usize {
        self.chain_lens[i - 1]
    }

    /// Index of `m_{i,x}` in `elements`. Elements are stored grouped by
    /// chain in increasing `(i, x)` order, so this is an offset lookup.
    pub fn index_of(&self, i: usize, x: usize) -> usize {
        debug_assert!(x >= 1 && x <= self.chain_len(i));
        self.chain_starts[i - 1] + (x - 1)
    }
}

/// Construct `M_ω`: one element per `(i, x)` with `1 ≤ x ≤ c_i(ω)`, so
/// `|M_ω| = |Inv(ω)|`.
pub fn build_m(w: &Permutation) -> MPoset {
    let n = w.n();
    let code = lehmer_code(w);
    let inv = inversion_set(w);
    let mut elements = Vec::with_capacity(inv.len());
    let mut chain_lens = vec![0usize; n];
    let mut chain_starts = vec![0usize; n];
    for i in 1..=n {
        chain_starts[i - 1] = elements.len();
        chain_lens[i - 1] = code.entry(i);
        for x in 1..=code.entry(i) {
            elements.push(m_vector_unchecked(w, &inv, i, x));
        }
    }
    let poset = FinitePoset::from_fn(elements.len(), |a, b| {
        leq_product(&elements[a], &elements[b])
    })
    .expect("product order is a partial order");
    MPoset {
        omega: w.clone(),
        elements,
        poset,
        chain_lens,
        chain_starts,
    }
}

/// Componentwise comparison in the product order on ℕⁿ.
pub fn leq_product(u: &MElement, v: &MElement) -> bool {
    debug_assert_eq!(u.vec.len(), v.vec.len());
    u.vec.iter().zip(&v.vec).all(|(a, b)| a <= b)
}

/// Closed-form strict comparability: decides `m_{i,x}(ω) > m_{j,y}(ω)` without
/// touching the coordinate vectors.
///
/// For `i < j`: false when `(i, j)` is an inversion of `ω` (the chains `C_i`
/// and `C_j` are then elementwise incomparable), otherwise true iff
/// `y ≤ x − c_{ij}(ω)`. Same chain (`i = j`) reduces to `x > y`; for `i > j`
/// strict `>` is impossible since coordinate `j` of `m_{i,x}` is zero.
pub fn gt_closed_form(w: &Permutation, a: (usize, usize), b: (usize, usize)) -> Result<bool> {
    let code = lehmer_code(w);
    for (i, x) in [a, b] {
        if i == 0 || i > w.n() || x == 0 || x > code.entry(i) {
            return Err(Error::InvalidArgument(format!(
                "label ({i}, {x}) is not valid for {w}"
            )));
        }
    }
    let ((i, x), (j, y)) = (a, b);
    if i == j {
        return Ok(x > y);
    }
    if i > j {
        return Ok(false);
    }
    if inversion_set(w).contains(i, j) {
        return Ok(false);
    }
    Ok(y + c_between(w, i, j)? <= x)
}

/// The chain `C_i(ω) = [m_{i,1}, …, m_{i,c_i}]` in increasing order.
pub fn chain(w: &Permutation, i: usize) -> Result<Vec<MElement>> {
    let code = lehmer_code(w);
    if i == 0 || i > w.n() {
        return Err(Error::InvalidArgument(format!("position {i} out of range")));
    }
    let ci = code.entry(i);
    if ci == 0 {
        return Err(Error::InvalidArgument(format!(
            "c_{i} = 0: chain C_{i} is empty"
        )));
    }
    let inv = inversion_set(w);
    Ok((1..=ci).map(|x| m_vector_unchecked(w, &inv, i, x)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_permutations;

    fn p(text: &str) -> Permutation {
        Permutation::parse(text).unwrap()
    }

    #[test]
    fn m_vector_examples() {
        assert_eq!(m_vector(&p("3412"), 1, 1).unwrap().vec, vec![1, 1, 0, 0]);
        assert_eq!(m_vector(&p("3412"), 2, 2).unwrap().vec, vec![0, 2, 0, 0]);
        assert_eq!(m_vector(&p("321"), 1, 2).unwrap().vec, vec![2, 0, 0]);
        assert!(m_vector(&p("3412"), 3, 1).is_err()); // c_3 = 0
        assert!(m_vector(&p("3412"), 1, 3).is_err()); // x > c_1
        assert!(m_vector(&p("3412"), 1, 0).is_err());
    }

    #[test]
    fn m_vector_invariants_exhaustive() {
        for n in 1..=5 {
            for w in all_permutations(n).unwrap() {
                let code = lehmer_code(&w);
                let inv = inversion_set(&w);
                for i in 1..=n {
                    for x in 1..=code.entry(i) {
                        let m = m_vector(&w, i, x).unwrap();
                        assert_eq!(m.vec[i - 1], x);
                        for j in 1..=n {
                            assert!(m.vec[j - 1] <= x);
                            if j < i || inv.contains(i, j) {
                                assert_eq!(m.vec[j - 1], 0);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn build_m_examples() {
        let id = build_m(&Permutation::identity(4).unwrap());
        assert!(id.elements.is_empty());

        let m321 = build_m(&p("321"));
        let vecs: Vec<_> = m321.elements.iter().map(|e| e.vec.clone()).collect();
        assert_eq!(vecs, vec![vec![1, 0, 0], vec![2, 0, 0], vec![0, 1, 0]]);
        let poset = m321.poset();
        assert!(poset.lt(0, 1));
        assert!(!poset.comparable(0, 2));
        assert!(!poset.comparable(1, 2));

        let m3412 = build_m(&p("3412"));
        assert_eq!(m3412.elements.len(), 4);
        // (2,2,0,0) = m_{1,2} is the maximum, (0,1,0,0) = m_{2,1} the minimum,
        // and m_{1,1} = (1,1,0,0) is incomparable to m_{2,2} = (0,2,0,0).
        let top = m3412.index_of(1, 2);
        let bottom = m3412.index_of(2, 1);
        let left = m3412.index_of(1, 1);
        let right = m3412.index_of(2, 2);
        assert_eq!(m3412.elements[top].vec, vec![2, 2, 0, 0]);
        let poset = m3412.poset();
        assert!(poset.lt(bottom, top) && poset.lt(left, top) && poset.lt(right, top));
        assert!(poset.lt(bottom, left) && poset.lt(bottom, right));
        assert!(!poset.comparable(left, right));
    }

    #[test]
    fn size_matches_inversion_count() {
        for n in 1..=6 {
            for w in all_permutations(n).unwrap() {
                assert_eq!(build_m(&w).elements.len(), inversion_set(&w).len());
            }
        }
    }

    #[test]
    fn closed_form_examples() {
        // Chains C_1, C_2 of 321 are elementwise incomparable.
        assert!(!gt_closed_form(&p("321"), (1, 2), (2, 1)).unwrap());
        assert!(gt_closed_form(&p("3412"), (1, 2), (2, 2)).unwrap());
        assert!(!gt_closed_form(&p("3412"), (1, 1), (2, 2)).unwrap());
        assert!(gt_closed_form(&p("321"), (1, 2), (1, 1)).unwrap());
        assert!(!gt_closed_form(&p("321"), (2, 1), (1, 1)).unwrap());
        assert!(gt_closed_form(&p("321"), (1, 3), (1, 1)).is_err());
    }

    #[test]
    fn closed_form_matches_product_order() {
        for n in 1..=6 {
            for w in all_permutations(n).unwrap() {
                let code = lehmer_code(&w);
                let m = build_m(&w);
                for i in 1..=n {
                    for x in 1..=code.entry(i) {
                        for j in 1..=n {
                            for y in 1..=code.entry(j) {
                                let u = &m.elements[m.index_of(i, x)];
                                let v = &m.elements[m.index_of(j, y)];
                                let strict = leq_product(v, u) && u.vec != v.vec;
                                assert_eq!(
                                    gt_closed_form(&w, (i, x), (j, y)).unwrap(),
                                    strict,
                                    "w={w} a=({i},{x}) b=({j},{y})"
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn chain_examples() {
        let c1 = chain(&p("3412"), 1).unwrap();
        assert_eq!(
            c1.iter().map(|e| e.vec.clone()).collect::<Vec<_>>(),
            vec![vec![1, 1, 0, 0], vec![2, 2, 0, 0]]
        );
        let c2 = chain(&p("321"), 2).unwrap();
        assert_eq!(c2.len(), 1);
        assert_eq!(c2[0].vec, vec![0, 1, 0]);
        assert!(chain(&p("321"), 3).is_err());
        // Chains are strictly increasing in the product order.
        for w in all_permutations(5).unwrap() {
            let code = lehmer_code(&w);
            for i in 1..=5 {
                if code.entry(i) == 0 {
                    continue;
                }
                let c = chain(&w, i).unwrap();
                assert_eq!(c.len(), code.entry(i));
                for pair in c.windows(2) {
                    assert!(leq_product(&pair[0], &pair[1]) && pair[0].vec != pair[1].vec);
                }
            }
        }
    }

    #[test]
    fn inverted_chains_incomparable() {
        for n in 1..=6 {
            for w in all_permutations(n).unwrap() {
                let code = lehmer_code(&w);
                let inv = inversion_set(&w);
                let m = build_m(&w);
                for &(i, j) in inv.pairs() {
                    for x in 1..=code.entry(i) {
                        for y in 1..=code.entry(j) {
                            assert!(
                                !m.poset().comparable(m.index_of(i, x), m.index_of(j, y)),
                                "w={w} ({i},{x}) vs ({j},{y})"
                            );
                        }
                    }
                }
            }
        }
    }
}
