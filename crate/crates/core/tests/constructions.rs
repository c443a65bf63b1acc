mod common;

use common::{count_walks_dfs, min_codegree_by_scan, Cube};
use proptest::prelude::*;
use tightcycle::{
    count_closed_tight_walks, cover_homomorphism, mod3_construction, mod3_walk_obstruction,
    tight_cycle, verify_homomorphism, wrap_homomorphism, CycleHom, PartitionConstruction,
};

/// Edges of the construction straight from the colour rule, part sizes n/3.
fn edges_by_colour(n: usize) -> Vec<[usize; 3]> {
    let colour = |v: usize| 1 + v / (n / 3);
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if (colour(a) + colour(b) + colour(c)) % 3 == 1 {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

#[test]
fn construction_matches_colour_rule() {
    for n in (3..=30).step_by(3) {
        let h = mod3_construction(n).unwrap();
        let expected = edges_by_colour(n);
        assert_eq!(h.edges().collect::<Vec<_>>(), expected, "n = {n}");
        assert_eq!(min_codegree_by_scan(n, &expected), n / 3 - 1, "n = {n}");
        assert_eq!(h.min_codegree().unwrap(), n / 3 - 1, "n = {n}");
    }
}

#[test]
fn construction_examples() {
    assert_eq!(mod3_construction(3).unwrap().edge_count(), 0);
    let h = mod3_construction(9).unwrap();
    assert_eq!(h.edge_count(), 27);
    assert_eq!(h.neighborhood(0, 1).unwrap(), vec![3, 4, 5]);
    assert_eq!(h.codegree(0, 3).unwrap(), 2);
    assert_eq!(h.codegree(0, 1).unwrap(), 3);
    // edges at 0: colour multisets {1,1,2} give C(2,1)*3 = 6, {1,3,3} give C(3,2) = 3
    assert_eq!(h.link_graph(0).unwrap().edge_count(), 9);
    assert_eq!(mod3_construction(12).unwrap().min_codegree().unwrap(), 3);
    assert!(mod3_construction(10).is_err());
    assert!(mod3_construction(0).is_err());
}

#[test]
fn construction_is_walk_free_off_multiples_of_three() {
    for n in (3..=15).step_by(3) {
        let h = mod3_construction(n).unwrap();
        for len in 4..=12 {
            let count = count_closed_tight_walks(&h, len).unwrap().count;
            if len % 3 != 0 {
                assert_eq!(count, 0, "n = {n}, len = {len}");
                assert!(mod3_walk_obstruction(len).unwrap());
            } else if n >= 6 {
                assert!(count > 0, "n = {n}, len = {len}");
            }
        }
    }
}

#[test]
fn unbalanced_parts_keep_the_obstruction() {
    for sizes in [[1, 2, 4], [3, 3, 4], [5, 2, 2], [4, 4, 5]] {
        let h = PartitionConstruction::with_sizes(sizes).hypergraph();
        for len in [4, 5, 7, 8, 10] {
            assert_eq!(
                count_closed_tight_walks(&h, len).unwrap().count,
                0,
                "{sizes:?} len {len}"
            );
        }
    }
    let b = PartitionConstruction::balanced(11);
    assert_eq!(b.parts().map(|r| r.len()), [4, 4, 3]);
}

#[test]
fn small_construction_counts_match_dfs() {
    let h = mod3_construction(6).unwrap();
    let cube = Cube::of(&h);
    for len in 3..=9 {
        assert_eq!(
            count_closed_tight_walks(&h, len).unwrap().count,
            count_walks_dfs(&cube, len)
        );
    }
}

#[test]
fn homomorphism_examples() {
    for len in 6..=16 {
        let f = wrap_homomorphism(len).unwrap();
        assert_eq!((f.source_len, f.target_len), (len + 3, len));
        assert!(f.verify().unwrap().is_valid());
    }
    let c13 = tight_cycle(13).unwrap();
    let c10 = tight_cycle(10).unwrap();
    let w = wrap_homomorphism(10).unwrap();
    assert!(verify_homomorphism(&c13, &c10, &w.map).unwrap().is_valid());
    for (len, t) in [(5, 2), (10, 2), (4, 3), (7, 3)] {
        let f = cover_homomorphism(len, t).unwrap();
        assert_eq!(f.source_len, len * t);
        assert!(f.verify().unwrap().is_valid());
    }
    let id = cover_homomorphism(10, 1).unwrap();
    assert_eq!(id, CycleHom::identity(10));
    assert!(id.verify().unwrap().is_valid());
    assert!(cover_homomorphism(3, 2).is_err());
    assert!(wrap_homomorphism(5).is_err());
}

#[test]
fn constant_and_partial_maps() {
    let c5 = tight_cycle(5).unwrap();
    assert!(!verify_homomorphism(&c5, &c5, &[0; 5]).unwrap().is_valid());
    assert!(verify_homomorphism(&c5, &c5, &[0, 1, 2]).is_err());
    assert!(verify_homomorphism(&c5, &c5, &[0, 1, 2, 3, 9]).is_err());
}

#[test]
fn walks_pull_back_along_homomorphisms() {
    // a hom C_a -> C_b composes with any closed b-walk to a closed a-walk
    let h = mod3_construction(9).unwrap();
    for len in [6, 9] {
        assert!(count_closed_tight_walks(&h, len).unwrap().count > 0);
        let longer = cover_homomorphism(len, 2).unwrap();
        assert!(
            count_closed_tight_walks(&h, longer.source_len)
                .unwrap()
                .count
                > 0
        );
    }
}

fn arb_hom_chain() -> impl Strategy<Value = Vec<CycleHom>> {
    let step = prop_oneof![(2usize..=3).prop_map(|t| (true, t)), Just((false, 0)),];
    (4usize..=8, proptest::collection::vec(step, 1..4)).prop_map(|(base, steps)| {
        // build from the target outwards so every step composes
        let mut len = base;
        let mut maps = Vec::new();
        for (cover, t) in steps {
            let f = if cover && len != 3 {
                cover_homomorphism(len, t).unwrap()
            } else if len >= 6 {
                wrap_homomorphism(len).unwrap()
            } else {
                cover_homomorphism(len, 2).unwrap()
            };
            len = f.source_len;
            maps.push(f);
        }
        maps.reverse();
        maps
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn composition_of_valid_homs_is_valid(chain in arb_hom_chain()) {
        let mut acc = chain[0].clone();
        for f in &chain[1..] {
            acc = acc.then(f).unwrap();
        }
        prop_assert!(acc.verify().unwrap().is_valid());
        prop_assert_eq!(acc.source_len, chain[0].source_len);
        prop_assert_eq!(acc.target_len, chain.last().unwrap().target_len);
    }
}
