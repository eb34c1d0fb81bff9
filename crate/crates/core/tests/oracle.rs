//! Formula-versus-enumeration cross-checks on exhaustively checkable sizes.

use std::collections::HashSet;

use num_traits::ToPrimitive;
use pary_md::count::Counter;
use pary_md::{
    decreasing_count, enumerate_forests, enumerate_trees, falling, forest_oracle, fuss_catalan,
    md_histogram, y_histogram, EnumerationBudget, Nat, PAryTree,
};

fn labels(n: u32) -> Vec<u32> {
    (1..=n).collect()
}

fn all_trees(p: u32, n: u32) -> Vec<PAryTree> {
    let budget = EnumerationBudget::unlimited();
    enumerate_trees(p, &labels(n), &budget)
        .unwrap()
        .map(Result::unwrap)
        .collect()
}

/// Independent shape count: a shape is a list of p optional subshapes.
fn count_shapes(p: usize, n: usize, memo: &mut Vec<Option<u64>>) -> u64 {
    if let Some(v) = memo[n] {
        return v;
    }
    // Distribute n - 1 vertices over p ordered slots.
    fn spread(p: usize, left: usize, slots: usize, memo: &mut Vec<Option<u64>>) -> u64 {
        if slots == 0 {
            return u64::from(left == 0);
        }
        (0..=left)
            .map(|here| count_shapes(p, here, memo) * spread(p, left - here, slots - 1, memo))
            .sum()
    }
    let v = if n == 0 { 1 } else { spread(p, n - 1, p, memo) };
    memo[n] = Some(v);
    v
}

#[test]
fn fuss_catalan_matches_shape_enumeration() {
    for p in 2..=4u32 {
        let mut memo = vec![None; 13];
        for n in 0..=12 {
            assert_eq!(
                fuss_catalan(p, n as u64).unwrap().to_u64().unwrap(),
                count_shapes(p as usize, n, &mut memo),
                "p={p} n={n}"
            );
        }
    }
    let mut memo = vec![None; 9];
    assert_eq!(count_shapes(2, 8, &mut memo), 1430);
}

#[test]
fn enumerated_shapes_match_fuss_catalan() {
    for (p, n) in [(2, 4), (3, 3), (2, 5)] {
        let shapes: HashSet<String> = all_trees(p, n)
            .iter()
            .map(|t| {
                t.encode()
                    .chars()
                    .map(|c| if c.is_ascii_digit() { 'x' } else { c })
                    .collect()
            })
            .collect();
        assert_eq!(Nat::from(shapes.len()), fuss_catalan(p, n as u64).unwrap());
    }
}

#[test]
fn tree_counts_match_labeled_formula() {
    for (p, max_n) in [(2u32, 6u32), (3, 5), (4, 4)] {
        for n in 0..=max_n {
            let count = all_trees(p, n).len();
            let expected = if n == 0 {
                Nat::from(1u32)
            } else {
                falling((p * n) as i64, n as i64 - 1).unwrap()
            };
            assert_eq!(Nat::from(count), expected, "p={p} n={n}");
        }
    }
    assert_eq!(all_trees(3, 3).len(), 72);
}

#[test]
fn decreasing_trees_counted_by_enumeration() {
    let count = all_trees(3, 4)
        .iter()
        .filter(|t| t.md_subtree().unwrap() == **t)
        .count();
    assert_eq!(count, 105);
    assert_eq!(Nat::from(count), decreasing_count(3, 4).unwrap());
}

#[test]
fn no_duplicates_up_to_five() {
    for (p, n) in [(2, 5), (3, 4)] {
        let mut seen = HashSet::new();
        for t in all_trees(p, n) {
            assert!(seen.insert(t.encode()), "duplicate {t}");
        }
    }
}

/// FNV-1a over the concatenated canonical encodings.
fn stream_digest(p: u32, n: u32) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for t in all_trees(p, n) {
        for b in t.encode().bytes().chain(*b"\n") {
            h ^= b as u64;
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
    }
    h
}

#[test]
fn enumeration_order_is_stable() {
    assert_eq!(stream_digest(2, 4), stream_digest(2, 4));
    assert_eq!(stream_digest(2, 4), 0x1546_456e_8cd4_e8dd);
    let first: Vec<String> = all_trees(2, 3)
        .iter()
        .take(3)
        .map(PAryTree::encode)
        .collect();
    assert_eq!(
        first,
        vec![
            "(1,(2,(3,_,_),_),_)",
            "(1,(2,_,(3,_,_)),_)",
            "(1,(3,(2,_,_),_),_)"
        ]
    );
}

#[test]
fn histogram_matches_count_t() {
    let budget = EnumerationBudget::unlimited();
    for (p, max_n) in [(2u32, 6u32), (3, 5)] {
        let mut counter = Counter::new(p).unwrap();
        for n in 1..=max_n {
            let hist = md_histogram(p, n, &budget).unwrap();
            for k in 1..=n {
                assert_eq!(
                    hist.get(k as usize),
                    counter.t(n as i64, k as i64).unwrap(),
                    "p={p} n={n} k={k}"
                );
            }
            assert_eq!(hist.total(), falling((p * n) as i64, n as i64 - 1).unwrap());
        }
    }
}

#[test]
fn histogram_three_four() {
    let budget = EnumerationBudget::unlimited();
    let hist = md_histogram(3, 4, &budget).unwrap();
    assert_eq!(hist.total(), Nat::from(1320u32));
    let mut counter = Counter::new(3).unwrap();
    assert_eq!(hist.get(2), counter.t(4, 2).unwrap());
}

#[test]
fn y_and_f_match_oracles() {
    let budget = EnumerationBudget::unlimited();
    for p in [2u32, 3] {
        let mut counter = Counter::new(p).unwrap();
        for n in 0..=5u32 {
            let yh = (n > 0).then(|| y_histogram(p, n, &budget).unwrap());
            for k in 0..=n {
                let y_brute = match &yh {
                    Some(h) => h.get(k as usize),
                    None => Nat::from(u32::from(k == 0)),
                };
                assert_eq!(
                    y_brute,
                    counter.y(n as i64, k as i64).unwrap(),
                    "y p={p} n={n} k={k}"
                );
                assert_eq!(
                    forest_oracle(p, n, k, &budget).unwrap(),
                    counter.f(n as i64, k as i64).unwrap(),
                    "f p={p} n={n} k={k}"
                );
            }
        }
    }
}

#[test]
fn forest_stream_has_no_duplicates() {
    let budget = EnumerationBudget::unlimited();
    for k in 0..=4 {
        let mut seen = HashSet::new();
        for f in enumerate_forests(2, &labels(4), k, &budget).unwrap() {
            let f = f.unwrap();
            assert!(f
                .components()
                .windows(2)
                .all(|w| w[0].root_label() < w[1].root_label()));
            assert!(seen.insert(f));
        }
    }
}

#[test]
fn md_structure_over_all_small_trees() {
    for (p, n) in [(2u32, 5u32), (3, 4)] {
        for t in all_trees(p, n) {
            let mask = t.md_mask().unwrap();
            let md = t.md_subtree().unwrap();
            assert_eq!(md.md_subtree().unwrap(), md);
            for v in t.preorder() {
                for &c in t.slots(v).iter().flatten() {
                    if mask[v] {
                        // Maximality: MD edges decrease, edges leaving the MD increase.
                        assert_eq!(mask[c], t.label(c) < t.label(v));
                    } else {
                        assert!(!mask[c]);
                    }
                }
            }
            // Vertex 1 is always in the MD part of a y-family tree.
            if t.is_md_with_increasing_leaves().unwrap() {
                assert!(md.labels().contains(&1));
            }
        }
    }
}

#[test]
fn decompose_round_trips_exhaustively() {
    for (p, max_n) in [(2u32, 6u32), (3, 5)] {
        for n in 1..=max_n {
            for t in all_trees(p, n) {
                let d = t.decompose().unwrap();
                assert_eq!(d.recompose().unwrap(), t);
                let md = t.md_subtree().unwrap().labels();
                let z = d.z_part.labels();
                assert!(md.is_disjoint(&z));
                assert_eq!(md.union(&z).copied().collect::<Vec<_>>(), labels(n));
                assert_eq!(d.z_part.len(), d.y_part.len() - t.md_size().unwrap());
                for a in &d.attachments {
                    assert!(a.root > a.parent);
                }
            }
        }
    }
}

#[test]
fn canonical_text_round_trips_exhaustively() {
    let trees = all_trees(2, 4);
    assert_eq!(trees.len(), 336);
    for t in trees {
        assert_eq!(PAryTree::decode(&t.encode()).unwrap(), t);
    }
}
