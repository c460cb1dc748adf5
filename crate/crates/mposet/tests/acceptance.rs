//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use mposet::join_irr::build_m;
use mposet::patterns::is_disjoint_union_of_chains;
use mposet::perm::{
    all_permutations, avoids_all, decode_lehmer, inversion_set, lehmer_code, PatternSet,
    Permutation,
};
use mposet::verify::{
    catalan, count_avoiders, count_b2_free, verify_claim, Claim, SweepOptions,
};
use mposet::weak_order::{
    birkhoff_isomorphic, code_lattice, is_distributive, lattice_join_irreducibles,
};

use std::collections::BTreeSet;

fn report(criterion: &str, pass: bool) {
    println!(
        "{} criterion: {criterion}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion failed: {criterion}");
}

fn opts(workers: usize) -> SweepOptions {
    SweepOptions {
        workers,
        ..SweepOptions::default()
    }
}

#[test]
fn criterion_1_main_theorem_sweep() {
    let mut pass = true;
    for n in 1..=8 {
        let r = verify_claim(Claim::MainTheorem, n, &opts(4)).unwrap();
        assert_eq!(r.checked, (1..=n as u64).product::<u64>());
        if !r.pass() {
            eprintln!("MAIN_THEOREM failed at n={n}: {:?}", r.counterexamples);
            pass = false;
        }
    }
    report("1 main theorem sweep, n <= 8, 0 counterexamples", pass);
}

#[test]
fn criterion_2_comparability_oracle() {
    let r = verify_claim(Claim::Lemma2_4, 6, &opts(4)).unwrap();
    report(
        "2 closed-form comparability equals product order over S_6",
        r.pass() && r.checked == 720,
    );
}

#[test]
fn criterion_3_lattice_suite() {
    let mut failures = 0;
    for w in all_permutations(5).unwrap() {
        let l = code_lattice(&w);
        let m = build_m(&w);
        let ji: BTreeSet<Vec<usize>> = lattice_join_irreducibles(&l)
            .into_iter()
            .map(|c| c.entries().to_vec())
            .collect();
        let mv: BTreeSet<Vec<usize>> = m.elements.iter().map(|e| e.vec.clone()).collect();
        if !is_distributive(&l) || ji != mv || !birkhoff_isomorphic(&m, &l).unwrap() {
            eprintln!("lattice suite failed for {w}");
            failures += 1;
        }
    }
    report(
        "3 lattice suite over S_5: closure, distributivity, join-irreducibles, Birkhoff",
        failures == 0,
    );
}

#[test]
fn criterion_4_lemma_chain() {
    let claims = [
        Claim::Lemma3_4,
        Claim::Lemma3_5,
        Claim::Lemma3_6,
        Claim::Lemma3_7,
        Claim::Lemma3_8,
        Claim::Lemma3_9,
    ];
    let mut pass = true;
    for claim in claims {
        let r = verify_claim(claim, 6, &opts(4)).unwrap();
        if !(r.pass() && r.checked == 720) {
            eprintln!("{claim} failed: {:?}", r.counterexamples);
            pass = false;
        }
    }
    report("4 lemma chain 3.4-3.9 exhaustive at n = 6", pass);
}

#[test]
fn criterion_5_corollary_2_5_and_catalan() {
    let ps231 = PatternSet::new(vec![Permutation::parse("231").unwrap()]).unwrap();
    let mut pass = true;
    let expected = [1u64, 2, 5, 14, 42, 132, 429];
    for n in 1..=7usize {
        let mut avoider_count = 0u64;
        for w in all_permutations(n).unwrap() {
            if avoids_all(&w, &ps231) {
                avoider_count += 1;
                if !is_disjoint_union_of_chains(build_m(&w).poset()) {
                    eprintln!("231-avoiding {w} has a non-chain M poset");
                    pass = false;
                }
            }
        }
        if avoider_count != expected[n - 1] || avoider_count != catalan(n) {
            eprintln!("231-avoider count at n={n}: {avoider_count}");
            pass = false;
        }
    }
    report(
        "5 corollary: 231-avoiders give chain unions, counts are Catalan, n <= 7",
        pass,
    );
}

#[test]
fn criterion_6_count_cross_check() {
    let ps = PatternSet::new(vec![
        Permutation::parse("3412").unwrap(),
        Permutation::parse("3421").unwrap(),
    ])
    .unwrap();
    let mut pass = true;
    for n in 1..=7 {
        let by_poset = count_b2_free(n).unwrap();
        let by_pattern = count_avoiders(n, &ps).unwrap();
        if by_poset != by_pattern {
            eprintln!("n={n}: b2-free {by_poset} != avoiders {by_pattern}");
            pass = false;
        }
    }
    report("6 count cross-check b2-free vs {3412,3421}-avoiders, n <= 7", pass);
}

#[test]
fn criterion_7_structural_invariants() {
    let mut pass = true;
    for w in all_permutations(7).unwrap() {
        if build_m(&w).elements.len() != inversion_set(&w).len() {
            eprintln!("|M| != |Inv| for {w}");
            pass = false;
        }
        if decode_lehmer(&lehmer_code(&w)) != w {
            eprintln!("Lehmer round trip failed for {w}");
            pass = false;
        }
    }
    report("7 structural invariants |M|=|Inv| and code round trip over S_7", pass);
}

#[test]
fn criterion_8_golden_exports() {
    let json = mposet::export::to_json(&mposet::export::export_document(
        &Permutation::parse("3412").unwrap(),
    ));
    let dot = mposet::export::to_dot(&build_m(&Permutation::parse("321").unwrap()));
    let expected_json = include_str!("fixtures/mposet_3412.json");
    let expected_dot = include_str!("fixtures/mposet_321.dot");
    report(
        "8 golden exports byte-match committed fixtures",
        json == expected_json && dot == expected_dot,
    );
}
