mod common;

use cevian_core::construct::{self, Orientation};
use cevian_core::locus::{self, named, CurvePoint};
use cevian_core::projective::join;
use cevian_core::triangle;
use rand::seq::SliceRandom;

fn sqrt19_pool() -> Vec<CurvePoint> {
    let p = CurvePoint::new(common::sqrt19_point()).unwrap();
    let mut pool: Vec<CurvePoint> = named::all().into_iter().map(|(_, t)| t).collect();
    let torsion = pool.clone();
    for base in [p.clone(), locus::neg(&p).unwrap(), locus::scalar_mul(2, &p).unwrap()] {
        for t in &torsion {
            pool.push(locus::add(&base, t).unwrap());
        }
    }
    pool
}

#[test]
fn associativity_on_random_triples() {
    let pool = sqrt19_pool();
    let mut rng = common::rng(31);
    for _ in 0..500 {
        let abc: Vec<&CurvePoint> = (0..3).map(|_| pool.choose(&mut rng).unwrap()).collect();
        let (a, b, c) = (abc[0], abc[1], abc[2]);
        let left = locus::add(&locus::add(a, b).unwrap(), c).unwrap();
        let right = locus::add(a, &locus::add(b, c).unwrap()).unwrap();
        assert_eq!(left, right, "{a:?} {b:?} {c:?}");
    }
}

#[test]
fn identity_inverse_and_commutativity() {
    let pool = sqrt19_pool();
    let o = locus::identity();
    for a in &pool {
        assert_eq!(&locus::add(a, &o).unwrap(), a);
        assert_eq!(locus::add(a, &locus::neg(a).unwrap()).unwrap(), o);
        for b in pool.iter().take(8) {
            assert_eq!(locus::add(a, b).unwrap(), locus::add(b, a).unwrap());
        }
    }
}

#[test]
fn collinear_triples_sum_to_identity() {
    let pool = sqrt19_pool();
    let o = locus::identity();
    for a in pool.iter().skip(6) {
        for b in pool.iter().skip(6) {
            let c = locus::star(a, b).unwrap();
            let sum = locus::add(&locus::add(a, b).unwrap(), &c).unwrap();
            assert_eq!(sum, o);
        }
    }
}

#[test]
fn inflection_base_point() {
    let o = locus::identity();
    let tangent = locus::tangent_line(&o).unwrap();
    assert_eq!(locus::third_intersection(&tangent, &[&o, &o]).unwrap(), o);
    // with a flex as identity, negation is the residual on the line to it
    let p = CurvePoint::new(common::sqrt19_point()).unwrap();
    let line = join(p.point(), o.point()).unwrap();
    assert_eq!(locus::third_intersection(&line, &[&p, &o]).unwrap(), locus::neg(&p).unwrap());
}

#[test]
fn sampled_points_exterior_and_closed_under_conjugation() {
    let scene = construct::make_scene().unwrap();
    for s in construct::sample_locus(&scene, 40, Orientation::Primary).unwrap() {
        for p in [&s.p, &s.p_prime] {
            assert!(locus::exterior_to_anticomplementary(p.point()).unwrap(), "t = {}", s.t);
            let conj = triangle::isotomic(p.point()).unwrap();
            assert!(locus::member(&conj).0);
        }
    }
}

#[test]
fn second_quadratic_point_is_on_the_curve() {
    let p = cevian_core::PPoint::new([
        common::scalar("9/2+1/2*sqrt(89)"),
        cevian_core::Scalar::from_int(-2),
        cevian_core::Scalar::from_int(1),
    ])
    .unwrap();
    let (on, residual) = locus::member(&p);
    assert!(on, "residual {residual}");
}

#[test]
fn uv_roundtrip_on_torsion() {
    let minus_one = cevian_core::Scalar::from_int(-1);
    assert_eq!(locus::uv_to_curve(&minus_one, &cevian_core::Scalar::zero()), Err(cevian_core::Error::SingularFiber));
    for (u, v) in [(0, 2), (0, -2)] {
        let (u, v) = (cevian_core::Scalar::from_int(u), cevian_core::Scalar::from_int(v));
        let p = locus::uv_to_curve(&u, &v).unwrap();
        assert_eq!(locus::curve_to_uv(&p).unwrap(), (u, v));
    }
}
