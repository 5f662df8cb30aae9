//! Exhaustive checks over every topology on up to 4 points: closure-operator
//! laws, the closure/derived-set identity, interior/closure duality, the
//! collapse of T1 to discreteness on finite spaces, and agreement between
//! the fast classifiers and the definitional ones.

use ordtop_core::finspace::{
    PointSet, StandardKind, Topology, closure, derived_set, interior, is_dense, standard_topology,
};
use ordtop_core::lattice::enumerate_topologies;
use ordtop_core::separation::{
    classify, classify_definitional, specialization_preorder, t0_by_definition, t1_by_definition,
};

fn all_small_topologies(max_n: u8) -> Vec<Topology> {
    (1..=max_n).flat_map(|n| enumerate_topologies(n).unwrap()).collect()
}

fn subsets(n: u8) -> impl Iterator<Item = PointSet> {
    (0..1u32 << n).map(|m| PointSet::from_mask(m as u16))
}

#[test]
fn kuratowski_closure_laws() {
    for t in all_small_topologies(4) {
        let full = PointSet::full(t.n());
        assert_eq!(closure(&t, PointSet::EMPTY).unwrap(), PointSet::EMPTY);
        for s in subsets(t.n()) {
            let cl = closure(&t, s).unwrap();
            assert!(s.is_subset(cl));
            assert_eq!(closure(&t, cl).unwrap(), cl);
            assert!(cl.is_subset(full));
            for r in subsets(t.n()) {
                let lhs = closure(&t, s.union(r)).unwrap();
                let rhs = cl.union(closure(&t, r).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn closure_is_set_plus_derived_set() {
    for t in all_small_topologies(4) {
        for s in subsets(t.n()) {
            let cl = closure(&t, s).unwrap();
            let d = derived_set(&t, s).unwrap();
            assert_eq!(cl, s.union(d));
        }
    }
}

#[test]
fn interior_closure_duality() {
    for t in all_small_topologies(4) {
        for s in subsets(t.n()) {
            let by_duality = closure(&t, s.complement(t.n())).unwrap().complement(t.n());
            assert_eq!(interior(&t, s).unwrap(), by_duality);
        }
    }
}

#[test]
fn derived_sets_in_standard_topologies() {
    for n in 2..=4u8 {
        let discrete = standard_topology(n, StandardKind::Discrete).unwrap();
        let trivial = standard_topology(n, StandardKind::Trivial).unwrap();
        let full = PointSet::full(n);
        for s in subsets(n) {
            assert_eq!(derived_set(&discrete, s).unwrap(), PointSet::EMPTY);
            let expected = match s.len() {
                0 => PointSet::EMPTY,
                1 => full.minus(s),
                _ => full,
            };
            assert_eq!(derived_set(&trivial, s).unwrap(), expected);
        }
    }
}

#[test]
fn dense_iff_every_nonempty_open_meets() {
    for t in all_small_topologies(4) {
        for s in subsets(t.n()) {
            let by_opens = t
                .opens()
                .iter()
                .all(|&u| u.is_empty() || !u.intersect(s).is_empty());
            assert_eq!(is_dense(&t, s).unwrap(), by_opens);
        }
    }
}

#[test]
fn t1_collapses_to_discrete_and_t2() {
    for t in all_small_topologies(4) {
        let p = classify(&t);
        assert_eq!(p.t1, t.is_discrete());
        assert_eq!(p.t1, p.t2);
    }
}

#[test]
fn preorder_t0_matches_definitional() {
    for t in all_small_topologies(4) {
        let pre = specialization_preorder(&t);
        assert_eq!(pre.is_antisymmetric(), t0_by_definition(&t));
        assert_eq!(pre.is_identity(), t1_by_definition(&t));
    }
}

#[test]
fn fast_classifier_matches_definitional() {
    for t in all_small_topologies(4) {
        assert_eq!(classify(&t), classify_definitional(&t), "mismatch on {t:?}");
    }
}

#[test]
fn preorder_is_reflexive_and_transitive() {
    for t in all_small_topologies(4) {
        let pre = specialization_preorder(&t);
        let n = t.n();
        for x in 0..n {
            assert!(pre.relates(x, x));
            for y in 0..n {
                for z in 0..n {
                    if pre.relates(x, y) && pre.relates(y, z) {
                        assert!(pre.relates(x, z));
                    }
                }
            }
        }
    }
}
