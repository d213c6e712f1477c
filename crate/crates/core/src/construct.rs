//! The square-on-circle construction in the Cartesian chart.
//!
//! A unit circle `C` about `Z1 = (0, 0)` carries the square
//! `Q1 Z1 P1' O1`. For each point `A1` on the arc between `P1` and `P1'`
//! through `Q1, Q1'` there is exactly one pair `B1, C1` on `C` making
//! `A1 B1 C1` a triangle with centroid `G1`. The affine map sending that
//! triangle to the reference triangle carries `P1` to a point of `E`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{common_disc, Scalar};
use crate::linalg::{self, Mat3};
use crate::locus::{self, CurvePoint};
use crate::projective::{
    conic_conic_intersect_shared_infinity, conic_with_center_through, interior, join, meet, midpoint, normalized,
    signed_ratio, AffMap, Conic, PLine, PPoint,
};
use crate::triangle::Check;

pub fn linf() -> PLine {
    PLine::cartesian_infinity()
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn cart(x: BigRational, y: BigRational) -> PPoint {
    PPoint::cartesian(Scalar::from_rational(x), Scalar::from_rational(y))
}

/// Homothety about `g` with ratio -1/2: `(3g - x)/2`.
pub fn complement_about(g: &PPoint, x: &PPoint) -> Result<PPoint> {
    let l = linf();
    let (ng, nx) = (normalized(g, &l)?, normalized(x, &l)?);
    let three_g = linalg::scale(&ng, &Scalar::from_int(3));
    PPoint::new(linalg::sub(&three_g, &nx))
}

/// The frozen canonical scene.
#[derive(Clone, Debug)]
pub struct Scene {
    pub circle: Conic,
    pub z1: PPoint,
    pub q1: PPoint,
    pub p1_prime: PPoint,
    pub o1: PPoint,
    pub s1: PPoint,
    pub g1: PPoint,
    pub p1: PPoint,
    pub q1_prime: PPoint,
    pub v1: PPoint,
}

/// Euclidean reflection of a chart point across the line through the
/// origin with direction `(2, 1)`.
fn reflect_across_gz(p: &PPoint) -> Result<PPoint> {
    let [x, y, _] = normalized(p, &linf())?;
    let (a, b) = (Scalar::from_ratio(3, 5), Scalar::from_ratio(4, 5));
    Ok(PPoint::cartesian(&(&a * &x) + &(&b * &y), &(&b * &x) - &(&a * &y)))
}

pub fn make_scene() -> Result<Scene> {
    let l = linf();
    let circle = Conic::circle(Scalar::zero(), Scalar::zero(), Scalar::one())?;
    let z1 = cart(q(0, 1), q(0, 1));
    let q1 = cart(q(1, 1), q(0, 1));
    let p1_prime = cart(q(0, 1), q(1, 1));
    let o1 = cart(q(1, 1), q(1, 1));
    let s1 = midpoint(&o1, &q1, &l)?;
    let g1 = meet(&join(&s1, &z1)?, &join(&q1, &p1_prime)?)?;
    let p1 = reflect_across_gz(&p1_prime)?;
    let q1_prime = reflect_across_gz(&q1)?;
    let v1 = meet(&join(&p1, &q1)?, &join(&p1_prime, &q1_prime)?)?;
    Ok(Scene { circle, z1, q1, p1_prime, o1, s1, g1, p1, q1_prime, v1 })
}

fn euclid_dot(u: &[Scalar; 3], v: &[Scalar; 3]) -> Scalar {
    &(&u[0] * &v[0]) + &(&u[1] * &v[1])
}

impl Scene {
    /// Exact checks of the scene's defining relations.
    pub fn self_checks(&self) -> Result<Vec<Check>> {
        let l = linf();
        let k = |x: &PPoint| complement_about(&self.g1, x);
        let n = |p: &PPoint| normalized(p, &l);
        let (z, qq, pp, o) = (n(&self.z1)?, n(&self.q1)?, n(&self.p1_prime)?, n(&self.o1)?);
        let zq = linalg::sub(&qq, &z);
        let zp = linalg::sub(&pp, &z);
        let square = linalg::add(&zq, &zp) == linalg::sub(&o, &z)
            && euclid_dot(&zq, &zp).is_zero()
            && euclid_dot(&zq, &zq) == euclid_dot(&zp, &zp);
        let on_circle = [&self.p1, &self.q1, &self.p1_prime, &self.q1_prime].iter().all(|p| self.circle.contains(p));
        let centered_conic = conic_with_center_through(&self.z1, [&self.p1, &self.q1, &self.p1_prime], &l)?;
        Ok(vec![
            Check::new("scene.Q1Z1P1'O1-square", square),
            Check::new("scene.points-on-circle", on_circle),
            Check::new("scene.S1=midpoint(O1,Q1)", midpoint(&self.o1, &self.q1, &l)? == self.s1),
            Check::new("scene.ZG/GS=2", signed_ratio(&self.z1, &self.g1, &self.s1, &l)? == Scalar::from_int(2)),
            Check::new("scene.ZG/GV=5/4", signed_ratio(&self.z1, &self.g1, &self.v1, &l)? == Scalar::from_ratio(5, 4)),
            Check::new("scene.K(Z1)=S1", k(&self.z1)? == self.s1),
            Check::new("scene.K(P1')=Q1", k(&self.p1_prime)? == self.q1),
            Check::new("scene.K(P1)=Q1'", k(&self.p1)? == self.q1_prime),
            Check::new("scene.K(V1)=midpoint(P1,P1')", k(&self.v1)? == midpoint(&self.p1, &self.p1_prime, &l)?),
            Check::new("scene.Q1=midpoint(V1,P1)", midpoint(&self.v1, &self.p1, &l)? == self.q1),
            Check::new("scene.V1-on-GZ", join(&self.g1, &self.z1)?.contains(&self.v1)),
            Check::new("scene.center-Z1-conic-through-Q1'", centered_conic.contains(&self.q1_prime)),
            Check::new("scene.center-Z1-conic-is-circle", centered_conic == self.circle),
        ])
    }
}

/// `((1-t^2)/(1+t^2), 2t/(1+t^2))` on the unit circle.
pub fn arc_param(t: &BigRational) -> PPoint {
    let one = BigRational::one();
    let t2 = t * t;
    let d = &one + &t2;
    cart((&one - &t2) / &d, (t * BigRational::from_integer(BigInt::from(2))) / &d)
}

/// The parameter of a chart point of the circle other than `(-1, 0)`.
pub fn arc_parameter_of(p: &PPoint) -> Result<BigRational> {
    let [x, y, _] = normalized(p, &linf())?;
    if !x.is_rational() || !y.is_rational() {
        return Err(Error::OutsideArc);
    }
    let d = x.rational_part() + BigRational::one();
    if d.is_zero() {
        return Err(Error::OutsideArc);
    }
    Ok(y.rational_part() / d)
}

/// The parameters of `P1, Q1, Q1', P1'`.
pub fn marked_parameters() -> [BigRational; 4] {
    [q(-1, 3), q(0, 1), q(1, 2), q(1, 1)]
}

/// Open arc `(-1/3, 1)` minus the marked points.
pub fn arc_contains(t: &BigRational) -> bool {
    open_arc(t) && !marked_parameters().contains(t)
}

/// `(1 - t)(1 + 3t) > 0`, i.e. `K_G(A1)` strictly inside the circle.
fn open_arc(t: &BigRational) -> bool {
    let one = BigRational::one();
    let three = BigRational::from_integer(BigInt::from(3));
    ((&one - t) * (&one + three * t)).is_positive()
}

/// Arc membership decided by the interiority of `K_G(A1)`; agrees with
/// [`arc_contains`] away from the marked points.
pub fn arc_contains_by_interior(scene: &Scene, a1: &PPoint) -> Result<bool> {
    let d0 = complement_about(&scene.g1, a1)?;
    interior(&d0, &scene.circle, &linf())
}

/// A triangle inscribed in the circle with centroid `G1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inscribed {
    pub a1: PPoint,
    pub b1: PPoint,
    pub c1: PPoint,
    /// Squarefree `d` with all coordinates in `Q(sqrt d)`.
    pub d: u64,
}

fn chart_cmp(p: &PPoint, q: &PPoint) -> Ordering {
    let l = linf();
    let (a, b) = (normalized(p, &l).expect("ordinary"), normalized(q, &l).expect("ordinary"));
    let x = a[0].cmp_value(&b[0]).expect("same field");
    x.then_with(|| a[1].cmp_value(&b[1]).expect("same field"))
}

pub fn inscribe_with_centroid(scene: &Scene, a1: &PPoint) -> Result<Inscribed> {
    let l = linf();
    if !scene.circle.contains(a1) {
        return Err(Error::PointNotOnConic);
    }
    if let Ok(t) = arc_parameter_of(a1) {
        if marked_parameters().contains(&t) {
            return Err(Error::MarkedPoint);
        }
    }
    if !arc_contains_by_interior(scene, a1)? {
        return Err(Error::OutsideArc);
    }
    let d0 = complement_about(&scene.g1, a1)?;
    let reflected = scene.circle.transformed(&AffMap::point_reflection(&d0, &l)?)?;
    let mut pts = conic_conic_intersect_shared_infinity(&scene.circle, &reflected, &l)?;
    if pts.len() != 2 {
        return Err(Error::OutsideArc);
    }
    pts.sort_by(chart_cmp);
    let (b1, c1) = (pts[0].clone(), pts[1].clone());
    if midpoint(&b1, &c1, &l)? != d0 {
        return Err(Error::Internal("B1C1 is not bisected by K(A1)".into()));
    }
    if centroid(a1, &b1, &c1)? != scene.g1 {
        return Err(Error::Internal("inscribed triangle has the wrong centroid".into()));
    }
    if !arc_contains_by_interior(scene, &b1)? || !arc_contains_by_interior(scene, &c1)? {
        return Err(Error::Internal("inscribed vertex off the arc".into()));
    }
    let coords = a1.coords().iter().chain(b1.coords()).chain(c1.coords());
    let d = common_disc(coords)?;
    Ok(Inscribed { a1: a1.clone(), b1, c1, d })
}

pub fn centroid(a: &PPoint, b: &PPoint, c: &PPoint) -> Result<PPoint> {
    let l = linf();
    let sum = linalg::add(&linalg::add(&normalized(a, &l)?, &normalized(b, &l)?), &normalized(c, &l)?);
    PPoint::new(sum)
}

/// Barycentric coordinates of `x` with respect to the triangle.
pub fn transport(tri: [&PPoint; 3], x: &PPoint) -> Result<PPoint> {
    let l = linf();
    let cols = [normalized(tri[0], &l)?, normalized(tri[1], &l)?, normalized(tri[2], &l)?];
    let m = Mat3::from_cols(cols);
    let inv = m.inverse().map_err(|_| Error::CollinearTriple)?;
    PPoint::new(inv.apply(&normalized(x, &l)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    Primary,
    Both,
}

#[derive(Clone, Debug)]
pub struct LocusSample {
    pub t: BigRational,
    pub triangle: Inscribed,
    /// Image of `P1` under the map `A1 B1 C1 -> ABC`.
    pub p: CurvePoint,
    /// Image of `P1'`.
    pub p_prime: CurvePoint,
    /// Images of `P1, P1'` for the triangle `A1 C1 B1`.
    pub swapped: Option<(CurvePoint, CurvePoint)>,
}

pub fn sample_at(scene: &Scene, t: &BigRational, orientation: Orientation) -> Result<LocusSample> {
    if !open_arc(t) {
        return Err(Error::OutsideArc);
    }
    if marked_parameters().contains(t) {
        return Err(Error::MarkedPoint);
    }
    let a1 = arc_param(t);
    let tri = inscribe_with_centroid(scene, &a1)?;
    let carry = |order: [&PPoint; 3]| -> Result<(CurvePoint, CurvePoint)> {
        Ok((CurvePoint::new(transport(order, &scene.p1)?)?, CurvePoint::new(transport(order, &scene.p1_prime)?)?))
    };
    let (p, p_prime) = carry([&tri.a1, &tri.b1, &tri.c1])?;
    let swapped = match orientation {
        Orientation::Primary => None,
        Orientation::Both => {
            let (sp, sp_prime) = carry([&tri.a1, &tri.c1, &tri.b1])?;
            if sp != locus::neg(&p)? {
                return Err(Error::Internal("swapped orientation is not the negative".into()));
            }
            Some((sp, sp_prime))
        }
    };
    Ok(LocusSample { t: t.clone(), triangle: tri, p, p_prime, swapped })
}

/// The `i`-th of `n` parameters `-1/3 + (4/3)(i + 99/194)/n`; the offset
/// keeps every parameter off the marked points.
pub fn sample_parameter(i: usize, n: usize) -> BigRational {
    let i = BigRational::from_integer(BigInt::from(i));
    let n = BigRational::from_integer(BigInt::from(n));
    q(-1, 3) + q(4, 3) * (i + q(99, 194)) / n
}

pub fn sample_locus(scene: &Scene, n: usize, orientation: Orientation) -> Result<Vec<LocusSample>> {
    if n == 0 {
        return Err(Error::EmptySample);
    }
    (0..n).into_par_iter().map(|i| sample_at(scene, &sample_parameter(i, n), orientation)).collect()
}

/// Outcome of the conic-with-center construction on one data set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConicTangencyCheck {
    /// The conic with center `Z` through `P, Q, P'` also passes through `Q'`.
    pub fourth_point_on_conic: bool,
    /// The conic is an ellipse.
    pub ellipse: bool,
    /// The tangent at `Q` is parallel to `P'Z`.
    pub tangent_parallel_to_p_prime_z: bool,
    /// The tangent at `Q` passes through `K(Z)`.
    pub tangent_through_complement_of_z: bool,
}

/// Data `G, V, Z` collinear and distinct, `P` off `GZ`:
/// `Q' = K(P)`, `P'` the reflection of `V` in `Q'`, `Q` the midpoint of `PV`.
/// The tangent checks are meaningful when `ZG/GV = 5/4`.
pub fn conic_tangency_check(g: &PPoint, v: &PPoint, z: &PPoint, p: &PPoint) -> Result<ConicTangencyCheck> {
    let l = linf();
    let gz = join(g, z)?;
    if !gz.contains(v) {
        return Err(Error::NotCollinear);
    }
    if g == v || v == z {
        return Err(Error::CoincidentArguments);
    }
    if gz.contains(p) {
        return Err(Error::CollinearTriple);
    }
    let q_prime = complement_about(g, p)?;
    let p_prime = crate::projective::reflect_in_point(v, &q_prime, &l)?;
    let qq = midpoint(p, v, &l)?;
    let conic = conic_with_center_through(z, [p, &qq, &p_prime], &l)?;
    let tangent = conic.tangent_at(&qq)?;
    let direction = meet(&join(&p_prime, z)?, &l)?;
    Ok(ConicTangencyCheck {
        fourth_point_on_conic: conic.contains(&q_prime),
        ellipse: conic.affine_discriminant(&l)?.sign() > 0,
        tangent_parallel_to_p_prime_z: tangent.contains(&direction),
        tangent_through_complement_of_z: tangent.contains(&complement_about(g, z)?),
    })
}
