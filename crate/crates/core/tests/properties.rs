use num_bigint::BigInt;
use proptest::prelude::*;

use ncskein::projection::{admissible_conjugators, project, project_via};
use ncskein::qpoly::{q_binomial, q_catalan};
use ncskein::skein::{act_perm, act_word, star_act};
use ncskein::tl::tl_sn_act;
use ncskein::{enumerate, BasisAction, NCVector, Permutation, SetPartition, Space};

fn partition(max_n: usize) -> impl Strategy<Value = SetPartition> {
    (1..=max_n).prop_flat_map(|n| prop::collection::vec(0..n, n).prop_map(|labels| SetPartition::from_labels(&labels)))
}

fn noncrossing(n: usize) -> impl Strategy<Value = SetPartition> {
    let basis = enumerate::noncrossing(n);
    (0..basis.len()).prop_map(move |j| basis[j].clone())
}

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::from_one_line(images).unwrap())
}

fn sized_pair(max_n: usize) -> impl Strategy<Value = (SetPartition, Permutation, Permutation)> {
    (2..=max_n).prop_flat_map(|n| {
        (
            prop::collection::vec(0..n, n).prop_map(|l| SetPartition::from_labels(&l)),
            perm(n),
            perm(n),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn text_round_trip(pi in partition(9)) {
        let back: SetPartition = pi.to_string().parse().unwrap();
        prop_assert_eq!(back, pi);
    }

    #[test]
    fn permutation_action_is_a_group_action((pi, u, v) in sized_pair(8)) {
        let uv = u.compose(&v).unwrap();
        prop_assert_eq!(pi.apply_perm(&uv).unwrap(), pi.apply_perm(&v).unwrap().apply_perm(&u).unwrap());
    }

    #[test]
    fn star_action_is_a_group_action((pi, u, v) in sized_pair(7)) {
        let uv = u.compose(&v).unwrap();
        let inner = star_act(&v, &pi).unwrap();
        let outer = star_act(&u, &inner.partition).unwrap();
        let direct = star_act(&uv, &pi).unwrap();
        prop_assert_eq!(direct.partition, outer.partition);
        prop_assert_eq!(direct.sign, inner.sign * outer.sign);
    }

    #[test]
    fn reduced_words_are_reduced((_, u, _) in sized_pair(8)) {
        let word = u.reduced_word();
        prop_assert_eq!(word.len(), u.inversions());
        prop_assert_eq!(word.product(u.n()).unwrap(), u);
    }

    #[test]
    fn skein_action_is_a_homomorphism(pi in noncrossing(7), u in perm(7), v in perm(7)) {
        let x = NCVector::basis(&pi).unwrap();
        let uv = u.compose(&v).unwrap();
        prop_assert_eq!(act_perm(&uv, &x).unwrap(), act_perm(&u, &act_perm(&v, &x).unwrap()).unwrap());
    }

    #[test]
    fn any_word_for_a_permutation_gives_the_same_action(pi in noncrossing(6), u in perm(6), extra in 1usize..6) {
        let x = NCVector::basis(&pi).unwrap();
        let mut letters = vec![extra, extra];
        letters.extend(u.reduced_word().letters());
        prop_assert_eq!(act_word(&ncskein::Word::new(letters), &x).unwrap(), act_perm(&u, &x).unwrap());
    }

    #[test]
    fn characters_are_class_functions(u in perm(6), g in perm(6)) {
        let action = BasisAction::skein(Space::new(6, None, Some(1))).unwrap();
        let conj = g.compose(&u).unwrap().compose(&g.inverse()).unwrap();
        prop_assert_eq!(action.trace(&u).unwrap(), action.trace(&conj).unwrap());
    }

    #[test]
    fn matrices_multiply((_, u, v) in sized_pair(6)) {
        let n = u.n();
        let action = BasisAction::skein(Space::new(n, None, None)).unwrap();
        let uv = u.compose(&v).unwrap();
        let product = &action.matrix(&u).unwrap() * &action.matrix(&v).unwrap();
        prop_assert_eq!(action.matrix(&uv).unwrap(), product);
    }

    #[test]
    fn projection_ignores_the_conjugator(pi in partition(6), pick in any::<prop::sample::Index>()) {
        let ws = admissible_conjugators(&pi);
        let w = &ws[pick.index(ws.len())];
        prop_assert_eq!(project_via(&pi, w).unwrap(), project(&pi).unwrap());
    }

    #[test]
    fn projection_is_equivariant(pi in partition(6), u in perm(6)) {
        prop_assume!(pi.n() == 6);
        let star = star_act(&u, &pi).unwrap();
        let lhs = project(&star.partition).unwrap().scaled(&BigInt::from(star.sign));
        prop_assert_eq!(lhs, act_perm(&u, &project(&pi).unwrap()).unwrap());
    }

    #[test]
    fn vector_formats_round_trip(pi in partition(6), u in perm(6)) {
        prop_assume!(pi.n() == 6);
        let v = act_perm(&u, &project(&pi).unwrap()).unwrap();
        prop_assert_eq!(NCVector::parse(&v.to_string(), Some(6)).unwrap(), v.clone());
        prop_assert_eq!(NCVector::from_json(6, &v.to_json()).unwrap(), v);
    }

    #[test]
    fn tl_generators_are_involutions(pi in noncrossing(8), i in 1usize..8) {
        prop_assume!(pi.singleton_count() == 0);
        let v = NCVector::basis(&pi).unwrap();
        prop_assert_eq!(tl_sn_act(i, &tl_sn_act(i, &v).unwrap()).unwrap(), v);
    }

    #[test]
    fn q_binomials_are_palindromic_and_specialize(n in 0usize..14, k in 0usize..14) {
        prop_assume!(k <= n);
        let b = q_binomial(n, k).unwrap();
        prop_assert!(b.is_palindromic());
        let expected = (0..k).fold(BigInt::from(1), |acc, j| acc * (n - j) / (j + 1));
        prop_assert_eq!(b.at_one(), expected);
        prop_assert_eq!(q_catalan(n).unwrap().at_one(), BigInt::from(enumerate::noncrossing(n).len()));
    }
}
