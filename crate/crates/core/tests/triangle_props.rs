mod common;

use cevian_core::construct::{self, Orientation};
use cevian_core::locus;
use cevian_core::projective::{join, midpoint};
use cevian_core::triangle::{self, build_config, classify_m, eta_checks, halfturn_report};
use cevian_core::{DilatationClass, Error, PPoint, Scalar};
use rand::Rng;

#[test]
fn eta_intertwines_on_random_points() {
    for cfg in common::admissible_configs(11, 40) {
        let r = eta_checks(&cfg).unwrap();
        assert!(r.all(), "{:?}: {r:?}", cfg.p);
    }
}

#[test]
fn non_half_turns_fail_the_tangent_and_midpoint_conditions() {
    // the two conditions are sufficient as well as necessary
    let l = triangle::linf();
    for cfg in common::admissible_configs(13, 60) {
        let r = halfturn_report(&cfg).unwrap();
        assert!(!r.is_half_turn());
        let cevian = cfg.cevian_conic.as_ref().unwrap();
        let tangent = cevian.tangent_at(&cfg.p).unwrap() == join(&cfg.o_prime, &cfg.p).unwrap();
        let v_mid = cfg.v.as_ref() == midpoint(&cfg.o, &cfg.o_prime, &l).ok().as_ref();
        assert!(!tangent, "{:?}", cfg.p);
        assert!(!v_mid, "{:?}", cfg.p);
        assert!(!r.anticomplement_s_is_z);
    }
}

#[test]
fn sampled_curve_points_satisfy_every_condition() {
    let scene = construct::make_scene().unwrap();
    for s in construct::sample_locus(&scene, 50, Orientation::Primary).unwrap() {
        let cfg = build_config(s.p.point()).unwrap();
        let r = halfturn_report(&cfg).unwrap();
        assert_eq!(r.conditions, [true; 7], "t = {}", s.t);
        assert!(r.anticomplement_s_is_z && r.parallelogram);
        assert!(r.consequences.unwrap().all(), "t = {}", s.t);
    }
}

#[test]
fn non_members_are_not_half_turns() {
    let mut rng = common::rng(17);
    let mut seen = 0;
    while seen < 50 {
        let p = common::random_rational_point(&mut rng, 20);
        if locus::member(&p).0 {
            continue;
        }
        if let Ok(cfg) = build_config(&p) {
            assert!(!classify_m(&cfg).unwrap().is_half_turn(), "{p:?}");
            seen += 1;
        }
    }
}

#[test]
fn steiner_points_give_ratio_four() {
    let mut rng = common::rng(19);
    let mut seen = 0;
    while seen < 25 {
        let (x, y) = (rng.gen_range(-15i64..=15), rng.gen_range(-15i64..=15));
        if x + y == 0 {
            continue;
        }
        // z = -xy/(x+y), scaled by x+y
        let p = PPoint::from_ints(x * (x + y), y * (x + y), -x * y);
        let Ok(cfg) = build_config(&p) else { continue };
        assert!(cfg.flags.on_steiner);
        match classify_m(&cfg).unwrap() {
            DilatationClass::Homothety { ratio, .. } => assert_eq!(ratio, Scalar::from_int(4)),
            other => panic!("{p:?}: {other:?}"),
        }
        seen += 1;
    }
}

#[test]
fn median_points_are_not_half_turns() {
    for k in [2, 3, 5, -3, 7] {
        let p = PPoint::from_ints(k, 1, 1);
        let cfg = build_config(&p).unwrap();
        assert!(cfg.flags.on_median);
        assert!(!classify_m(&cfg).unwrap().is_half_turn());
        assert!(matches!(halfturn_report(&cfg), Err(Error::HypothesisViolated(_))));
    }
}

#[test]
fn swap_gives_the_same_map() {
    for cfg in common::admissible_configs(23, 20) {
        let swapped = build_config(&cfg.p_prime).unwrap();
        assert_eq!(swapped.m, cfg.m);
        assert_eq!(swapped.m_class, cfg.m_class);
    }
}

#[test]
fn m_ratio_by_two_routes() {
    for cfg in common::admissible_configs(29, 30) {
        let class = classify_m(&cfg).unwrap();
        let [a, b, _] = triangle::vertices();
        if let Some(k) = class.ratio() {
            assert_eq!(triangle::segment_ratio(&cfg.m, &a, &b).unwrap(), k);
        }
    }
}
