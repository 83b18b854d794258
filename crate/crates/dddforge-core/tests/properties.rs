//! Property tests for the serialization and verification invariants.

use dddforge_core::canon::canonical_label;
use dddforge_core::d6::{decode_digraph6, encode_digraph6};
use dddforge_core::ddd::{ddd_check, DddCheck};
use dddforge_core::digraph::{cayley_digraph, Digraph};
use dddforge_core::group::Group;
use proptest::prelude::*;

fn arb_digraph(max_v: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_v).prop_flat_map(|v| {
        proptest::collection::vec(any::<bool>(), v * v).prop_map(move |bits| {
            let mut d = Digraph::new(v);
            for x in 0..v {
                for y in 0..v {
                    if x != y && bits[x * v + y] {
                        d.set_arc(x, y);
                    }
                }
            }
            d
        })
    })
}

proptest! {
    #[test]
    fn digraph6_round_trip(d in arb_digraph(40)) {
        let encoded = encode_digraph6(&d).unwrap();
        prop_assert_eq!(decode_digraph6(&encoded).unwrap(), d);
    }

    #[test]
    fn converse_has_identical_parameters(d in arb_digraph(12)) {
        let a = ddd_check(&d);
        let b = ddd_check(&d.transpose());
        match (a, b) {
            (DddCheck::Ddd(x), DddCheck::Ddd(y)) => {
                let tx: Vec<_> = x.iter().map(|p| p.tuple()).collect();
                let ty: Vec<_> = y.iter().map(|p| p.tuple()).collect();
                prop_assert_eq!(tx, ty);
            }
            (DddCheck::NotDdd(_), DddCheck::NotDdd(_)) => {}
            (x, y) => prop_assert!(false, "asymmetric outcome: {:?} vs {:?}", x, y),
        }
    }

    #[test]
    fn label_is_relabeling_invariant(d in arb_digraph(10), seed in any::<u64>()) {
        let v = d.v();
        let mut perm: Vec<usize> = (0..v).collect();
        let mut state = seed | 1;
        for i in (1..v).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (state >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(canonical_label(&d.relabel(&perm)), canonical_label(&d));
    }

    #[test]
    fn cayley_skew_iff_inverse_free(seed in any::<u64>(), order in 5usize..=16) {
        let g = Group::cyclic(order);
        // pick a random nonempty subset of non-identity elements
        let mut s = Vec::new();
        let mut state = seed;
        for e in 1..order {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            if state >> 40 & 1 == 1 {
                s.push(e);
            }
        }
        let d = cayley_digraph(&g, &s).unwrap();
        let inverse_free = s.iter().all(|&x| !s.contains(&g.inv(x)));
        prop_assert_eq!(d.is_skew(), inverse_free);
    }
}
