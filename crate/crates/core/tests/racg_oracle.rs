mod support;

use proptest::prelude::*;
use smallcover::coloring::Z2Vec;
use smallcover::polytope::builtin;
use smallcover::racg::{equal, length, phi, reduce, GroupWord, RacgPresentation, Reducer};
use support::cayley::{all_words, CayleyOracle, DEFAULT_CAP};
use support::words::{check_all_pairs, check_normal_forms, check_random_pairs};

fn presentations() -> Vec<RacgPresentation> {
    vec![
        RacgPresentation::square(),
        RacgPresentation::from_polytope(&builtin("simplex", None).unwrap()),
        RacgPresentation::from_polytope(&builtin("prism", Some(3)).unwrap()),
        RacgPresentation::from_polytope(&builtin("cube", None).unwrap()),
        RacgPresentation::new("path", 5, &[[0, 1], [1, 2], [2, 3], [3, 4]]).unwrap(),
        RacgPresentation::new("free", 3, &[]).unwrap(),
    ]
}

#[test]
fn normal_forms_are_shortlex_geodesics() {
    for w in presentations() {
        let oracle = CayleyOracle::build(&w, 6, DEFAULT_CAP).unwrap();
        check_normal_forms(&w, &oracle, 6).unwrap();
    }
}

#[test]
fn equal_on_short_pairs() {
    for w in presentations() {
        let oracle = CayleyOracle::build(&w, 8, DEFAULT_CAP).unwrap();
        check_all_pairs(&w, &oracle, 4).unwrap();
        check_random_pairs(&w, &oracle, 1000, 8, 7).unwrap();
    }
}

#[test]
fn simplex_group_has_sixteen_elements() {
    let w = RacgPresentation::from_polytope(&builtin("simplex", None).unwrap());
    let oracle = CayleyOracle::build(&w, 10, DEFAULT_CAP).unwrap();
    assert!(oracle.exhausted);
    assert_eq!(oracle.len(), 16);
    let forms: std::collections::BTreeSet<GroupWord> = all_words(4, 6)
        .into_iter()
        .map(|x| reduce(&w, &GroupWord::new(x)).unwrap())
        .collect();
    assert_eq!(forms.len(), 16);
}

#[test]
fn oracle_cap_is_a_hard_error() {
    let w = RacgPresentation::new("free", 3, &[]).unwrap();
    assert!(CayleyOracle::build(&w, 20, 1000).is_err());
}

#[test]
fn square_examples_against_oracle() {
    let w = RacgPresentation::square();
    let oracle = CayleyOracle::build(&w, 8, DEFAULT_CAP).unwrap();
    // s1s3s1s3 has no shorter representative.
    assert_eq!(oracle.depth[oracle.element_of(&[0, 2, 0, 2])], 4);
    assert_ne!(oracle.element_of(&[0, 2]), oracle.element_of(&[2, 0]));
    assert_eq!(oracle.element_of(&[0, 2, 1, 3]), oracle.element_of(&[1, 3, 0, 2]));
}

fn word_strategy(n: usize, max_len: usize) -> impl Strategy<Value = GroupWord> {
    prop::collection::vec(0..n, 0..=max_len).prop_map(GroupWord::new)
}

proptest! {
    #[test]
    fn reduce_is_idempotent_and_shortening(w in word_strategy(6, 14)) {
        let cube = RacgPresentation::from_polytope(&builtin("cube", None).unwrap());
        let once = reduce(&cube, &w).unwrap();
        prop_assert_eq!(reduce(&cube, &once).unwrap(), once.clone());
        prop_assert!(once.len() <= w.len());
        prop_assert_eq!(once.len(), length(&cube, &w).unwrap());
        prop_assert!(equal(&cube, &once, &w).unwrap());
    }

    #[test]
    fn phi_is_constant_on_classes(a in word_strategy(6, 10), b in word_strategy(6, 10)) {
        let cube = RacgPresentation::from_polytope(&builtin("cube", None).unwrap());
        let colors = [1, 1, 2, 2, 4, 4].map(|x| Z2Vec::new(x).unwrap());
        if equal(&cube, &a, &b).unwrap() {
            prop_assert_eq!(phi(&colors, &a).unwrap(), phi(&colors, &b).unwrap());
        }
        let nf = reduce(&cube, &a).unwrap();
        prop_assert_eq!(phi(&colors, &a).unwrap(), phi(&colors, &nf).unwrap());
    }

    #[test]
    fn equal_is_an_equivalence(a in word_strategy(4, 6), b in word_strategy(4, 6), c in word_strategy(4, 6)) {
        let w = RacgPresentation::square();
        prop_assert!(equal(&w, &a, &a).unwrap());
        prop_assert_eq!(equal(&w, &a, &b).unwrap(), equal(&w, &b, &a).unwrap());
        if equal(&w, &a, &b).unwrap() && equal(&w, &b, &c).unwrap() {
            prop_assert!(equal(&w, &a, &c).unwrap());
        }
    }

    #[test]
    fn reducer_tracks_length(w in word_strategy(5, 12)) {
        let prism = RacgPresentation::from_polytope(&builtin("prism", Some(3)).unwrap());
        let mut r = Reducer::new(&prism);
        for (i, &x) in w.letters().iter().enumerate() {
            r.push(x);
            let prefix = GroupWord::new(w.letters()[..=i].iter().copied());
            prop_assert_eq!(r.reduced_len(), length(&prism, &prefix).unwrap());
        }
    }
}
