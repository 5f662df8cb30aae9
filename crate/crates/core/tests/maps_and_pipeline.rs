//! Invariants of continuous-map enumeration, eventually-constant
//! extension, and the four-step pipeline.

use ordtop_core::compactify::{
    EventuallyConstantMap, all_continuous_maps, extend_eventually_constant, run_pipeline,
};
use ordtop_core::finspace::{StandardKind, standard_topology};
use ordtop_core::lattice::{Strategy, enumerate_topologies};
use ordtop_core::ordinal::Ordinal;
use ordtop_core::rng::SplitMix64;
use ordtop_core::separation::classify;

#[test]
fn maps_out_of_trivial_into_t1_codomains_are_constant() {
    let t1_codomains: Vec<_> = (1..=3u8)
        .flat_map(|n| enumerate_topologies(n).unwrap())
        .filter(|t| classify(t).t1)
        .collect();
    assert!(!t1_codomains.is_empty());
    for n in 1..=4u8 {
        let dom = standard_topology(n, StandardKind::Trivial).unwrap();
        for cod in &t1_codomains {
            let maps = all_continuous_maps(&dom, cod).unwrap();
            assert_eq!(maps.len(), cod.n() as usize);
            for f in &maps {
                assert!(f.iter().all(|&y| y == f[0]), "non-constant map {f:?}");
            }
        }
    }
}

#[test]
fn continuous_maps_compose() {
    let all3: Vec<_> = enumerate_topologies(3).unwrap();
    for a in &all3 {
        for b in &all3 {
            let fs = all_continuous_maps(a, b).unwrap();
            for c in &all3 {
                let gs = all_continuous_maps(b, c).unwrap();
                let hs = all_continuous_maps(a, c).unwrap();
                for f in &fs {
                    for g in &gs {
                        let composed: Vec<u8> = f.iter().map(|&x| g[x as usize]).collect();
                        assert!(hs.contains(&composed));
                    }
                }
            }
        }
    }
}

#[test]
fn extension_round_trips_and_tail_start_is_least() {
    let mut rng = SplitMix64::new(5);
    for _ in 0..100 {
        let count = rng.below(6);
        let mut ords: Vec<u64> = Vec::new();
        while ords.len() < count as usize {
            let o = rng.below(12);
            if !ords.contains(&o) {
                ords.push(o);
            }
        }
        let tail_value = rng.below(5) as f64 - 2.0;
        let exceptions: Vec<(Ordinal, f64)> = ords
            .iter()
            .map(|&o| (Ordinal::natural(o), rng.below(5) as f64 - 2.0))
            .collect();
        let f = EventuallyConstantMap::new(exceptions, tail_value).unwrap();

        let ext = extend_eventually_constant(&f);
        assert_eq!(ext.value_at_top, tail_value);
        let expected_start = f
            .exceptions()
            .last()
            .map(|(at, _)| at.successor().unwrap())
            .unwrap_or(Ordinal::ZERO);
        assert_eq!(ext.tail_start, expected_start);

        // Restricting the extension back to [0, w) recovers the map: the
        // points below the tail start rebuild the exception list and the
        // extension value continues the tail.
        let rebuilt = EventuallyConstantMap::new(
            (0..ext.tail_start.finite_part())
                .map(|b| (Ordinal::natural(b), f.eval(Ordinal::natural(b))))
                .collect(),
            ext.value_at_top,
        )
        .unwrap();
        assert_eq!(rebuilt, f);
        for probe in 0..20 {
            let x = Ordinal::natural(probe);
            assert_eq!(rebuilt.eval(x), f.eval(x));
            if x >= ext.tail_start {
                assert_eq!(f.eval(x), ext.value_at_top);
            }
        }
    }
}

#[test]
fn pipeline_verdicts_hold_across_a_sample_grid() {
    for strategy in [Strategy::SingletonAscending, Strategy::RandomMaximal] {
        for alpha in [Ordinal::OMEGA, Ordinal::new(2, 0)] {
            for n in [1u8, 4] {
                let report = run_pipeline(n, strategy, 1, alpha).unwrap();
                assert!(report.density_ok);
                assert!(report.infinity_is_limit_point);
                assert!(report.sample_cover_compact);
                assert_eq!(report.chain_length, report.trace.steps.len());
                assert!(!report.notes.is_empty());
            }
        }
    }
}
