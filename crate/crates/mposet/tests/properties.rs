//! Property tests over randomly drawn permutations.

use proptest::prelude::*;

use mposet::join_irr::{build_m, gt_closed_form, leq_product};
use mposet::perm::{c_between, decode_lehmer, inversion_set, lehmer_code, Permutation};

fn arb_permutation(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n).prop_flat_map(|n| {
        Just((1..=n).collect::<Vec<usize>>())
            .prop_shuffle()
            .prop_map(|word| Permutation::new(word).unwrap())
    })
}

proptest! {
    #[test]
    fn lehmer_round_trip(w in arb_permutation(10)) {
        let code = lehmer_code(&w);
        prop_assert_eq!(code.sum(), inversion_set(&w).len());
        prop_assert_eq!(decode_lehmer(&code), w);
    }

    #[test]
    fn c_between_partial_sums(w in arb_permutation(10)) {
        let code = lehmer_code(&w);
        let n = w.n();
        for i in 1..n {
            for j in (i + 1)..=n {
                let tail = (j..=n).filter(|&k| w.value(i) > w.value(k)).count();
                prop_assert_eq!(c_between(&w, i, j).unwrap() + tail, code.entry(i));
            }
        }
    }

    #[test]
    fn closed_form_agrees_with_vectors(w in arb_permutation(9)) {
        let code = lehmer_code(&w);
        let m = build_m(&w);
        let n = w.n();
        for i in 1..=n {
            for x in 1..=code.entry(i) {
                for j in 1..=n {
                    for y in 1..=code.entry(j) {
                        let u = &m.elements[m.index_of(i, x)];
                        let v = &m.elements[m.index_of(j, y)];
                        let strict = leq_product(v, u) && u.vec != v.vec;
                        prop_assert_eq!(gt_closed_form(&w, (i, x), (j, y)).unwrap(), strict);
                    }
                }
            }
        }
    }
}
