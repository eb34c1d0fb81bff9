use proptest::prelude::*;

use pary_md::exact::factorial;
use pary_md::{binomial, falling, sample_tree, Forest, PAryTree};

fn arb_tree() -> impl Strategy<Value = PAryTree> {
    (2u32..=5, 1u32..=40, any::<u64>()).prop_map(|(p, n, seed)| sample_tree(p, n, seed).unwrap())
}

proptest! {
    #[test]
    fn text_round_trip(t in arb_tree()) {
        let text = t.encode();
        prop_assert_eq!(PAryTree::decode(&text).unwrap(), t.clone());
        prop_assert_eq!(PAryTree::decode_with_arity(&text, t.arity()).unwrap(), t);
    }

    #[test]
    fn sampled_trees_are_valid(p in 2u32..=5, n in 1u32..=60, seed in any::<u64>()) {
        let t = sample_tree(p, n, seed).unwrap();
        prop_assert!(t.is_valid());
        prop_assert!(t.has_standard_labels());
        prop_assert_eq!(t.len(), n as usize);
        prop_assert_eq!(sample_tree(p, n, seed).unwrap(), t);
    }

    #[test]
    fn decomposition_invariants(t in arb_tree()) {
        let d = t.decompose().unwrap();
        prop_assert_eq!(d.recompose().unwrap(), t.clone());

        let md = t.md_subtree().unwrap();
        prop_assert_eq!(md.md_subtree().unwrap(), md.clone());
        prop_assert_eq!(d.md_size(), md.len());
        prop_assert_eq!(d.y_part.md_subtree().unwrap(), md.clone());
        prop_assert!(d.y_part.is_md_with_increasing_leaves().unwrap());

        let md_labels = md.labels();
        let z_labels = d.z_part.labels();
        prop_assert!(md_labels.is_disjoint(&z_labels));
        prop_assert_eq!(md_labels.len() + z_labels.len(), t.len());
        for root in d.z_part.roots() {
            let v = d.y_part.find(root).unwrap();
            prop_assert!(d.y_part.is_leaf(v));
            prop_assert!(!md_labels.contains(&root));
        }
    }

    #[test]
    fn forest_equality_ignores_order(t in arb_tree(), rot in 0usize..8) {
        let d = t.decompose().unwrap();
        let mut comps = d.z_part.components().to_vec();
        if !comps.is_empty() {
            let r = rot % comps.len();
            comps.rotate_left(r);
        }
        prop_assert_eq!(Forest::new(t.arity(), comps).unwrap(), d.z_part);
    }

    #[test]
    fn binomial_identities(n in 0i64..=60, k in 0i64..=60) {
        prop_assume!(k <= n);
        prop_assert_eq!(binomial(n, k), binomial(n, n - k));
        prop_assert_eq!(falling(n, k).unwrap(), binomial(n, k) * factorial(k as u64));
        if k >= 1 {
            prop_assert_eq!(binomial(n + 1, k), binomial(n, k) + binomial(n, k - 1));
        }
    }
}
