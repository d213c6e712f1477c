//! The cubic `E: x^2(y+z) + y^2(x+z) + z^2(x+y) - 2xyz = 0` in barycentric
//! coordinates, its chord-tangent group with identity `A_inf = (0:1:-1)`,
//! and the birational chain to `v^2 = (u+1)(u^2+4)`.
//!
//! ```
//! use cevian_core::locus::{add, named, scalar_mul};
//!
//! let b = named::b();
//! assert_eq!(add(&b, &b).unwrap(), named::c_inf());
//! assert_eq!(scalar_mul(3, &b).unwrap(), named::a());
//! ```

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{self, Vec3};
use crate::poly::{self, Poly};
use crate::projective::{join, PLine, PPoint};
use crate::triangle;

/// Default search bound for [`order_of`].
pub const DEFAULT_ORDER_BOUND: u32 = 20;

/// A ternary cubic form over the rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cubic {
    form: Poly,
}

impl Cubic {
    pub fn new(form: Poly) -> Result<Self> {
        if form.terms().any(|(e, _)| e.iter().sum::<u32>() != 3) {
            return Err(Error::Internal("form is not homogeneous of degree 3".into()));
        }
        Ok(Cubic { form })
    }

    /// The curve `E`.
    pub fn curve() -> Self {
        let (x, y, z) = (Poly::var(0), Poly::var(1), Poly::var(2));
        let form = x.pow(2) * (&y + &z) + y.pow(2) * (&x + &z) + z.pow(2) * (&x + &y) - Poly::int(2) * x * y * z;
        Cubic { form }
    }

    pub fn form(&self) -> &Poly {
        &self.form
    }

    /// The ten coefficients, by exponent in lexicographic order.
    pub fn coefficients(&self) -> Vec<([u32; 3], BigRational)> {
        let mut out = Vec::with_capacity(10);
        for i in (0..=3u32).rev() {
            for j in (0..=3 - i).rev() {
                let e = [i, j, 3 - i - j];
                out.push((e, self.form.coeff(e)));
            }
        }
        out
    }

    pub fn eval(&self, v: &Vec3) -> Scalar {
        self.form.eval(v)
    }

    pub fn gradient(&self, v: &Vec3) -> Vec3 {
        std::array::from_fn(|i| self.form.derivative(i).eval(v))
    }

    /// Coefficients `[c0, c1, c2, c3]` of `F(s p + t q) = sum c_i s^(3-i) t^i`.
    pub fn restrict(&self, p: &Vec3, q: &Vec3) -> [Scalar; 4] {
        let c0 = self.eval(p);
        let c3 = self.eval(q);
        let plus = self.eval(&linalg::add(p, q));
        let minus = self.eval(&linalg::sub(p, q));
        let half = Scalar::from_ratio(1, 2);
        let c1 = &(&(&plus - &minus) * &half) - &c3;
        let c2 = &(&(&plus + &minus) * &half) - &c0;
        [c0, c1, c2, c3]
    }

    /// Multiplicity of `p` as a root of the restriction of the form to `l`;
    /// `None` when `l` is a component.
    pub fn intersection_multiplicity(&self, l: &PLine, p: &PPoint) -> Result<Option<u32>> {
        if !l.contains(p) {
            return Err(Error::NotCollinear);
        }
        let q = other_point_on(l, p);
        let c = self.restrict(p.coords(), &q);
        Ok(c.iter().position(|x| !x.is_zero()).map(|i| i as u32))
    }
}

/// A point of some line `l` distinct from `p`, which must lie on `l`.
fn other_point_on(l: &PLine, p: &PPoint) -> Vec3 {
    let basis = [linalg::vec3(1, 0, 0), linalg::vec3(0, 1, 0), linalg::vec3(0, 0, 1)];
    basis
        .iter()
        .map(|e| linalg::cross(l.coords(), e))
        .find(|q| !linalg::is_zero(q) && !linalg::proportional(q, p.coords()))
        .expect("a line has at least two points")
}

/// `F(p)` and whether it vanishes.
pub fn member(p: &PPoint) -> (bool, Scalar) {
    let r = Cubic::curve().eval(p.coords());
    (r.is_zero(), r)
}

/// A point of `E`, checked on construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CurvePoint(PPoint);

impl CurvePoint {
    pub fn new(p: PPoint) -> Result<Self> {
        if member(&p).0 {
            Ok(CurvePoint(p))
        } else {
            Err(Error::NotOnCurve)
        }
    }

    pub fn point(&self) -> &PPoint {
        &self.0
    }

    pub fn into_point(self) -> PPoint {
        self.0
    }

    pub fn disc(&self) -> u64 {
        self.0.disc()
    }
}

impl fmt::Debug for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// The six rational points of `E`.
pub mod named {
    use super::CurvePoint;
    use crate::projective::PPoint;

    fn pt(x: i64, y: i64, z: i64) -> CurvePoint {
        CurvePoint::new(PPoint::from_ints(x, y, z)).expect("point of E")
    }

    pub fn a() -> CurvePoint {
        pt(1, 0, 0)
    }
    pub fn b() -> CurvePoint {
        pt(0, 1, 0)
    }
    pub fn c() -> CurvePoint {
        pt(0, 0, 1)
    }
    pub fn a_inf() -> CurvePoint {
        pt(0, 1, -1)
    }
    pub fn b_inf() -> CurvePoint {
        pt(1, 0, -1)
    }
    pub fn c_inf() -> CurvePoint {
        pt(1, -1, 0)
    }

    /// All six, with their labels.
    pub fn all() -> [(&'static str, CurvePoint); 6] {
        [("A_inf", a_inf()), ("A", a()), ("B", b()), ("C", c()), ("B_inf", b_inf()), ("C_inf", c_inf())]
    }
}

/// The identity of the group law.
pub fn identity() -> CurvePoint {
    named::a_inf()
}

/// The tangent line to `E` at `p`.
pub fn tangent_line(p: &CurvePoint) -> Result<PLine> {
    let g = Cubic::curve().gradient(p.point().coords());
    PLine::new(g).map_err(|_| Error::Internal("singular point on E".into()))
}

/// The residual intersection of `l` with `E` after removing the known
/// points, counted with multiplicity (a repeated point means tangency).
pub fn third_intersection(l: &PLine, known: &[&CurvePoint]) -> Result<CurvePoint> {
    let curve = Cubic::curve();
    if known.iter().any(|k| !l.contains(k.point())) {
        return Err(Error::NotCollinear);
    }
    let improper = Error::LineNotMeetingCurveProperly;
    let point = match known {
        [p, q] if p != q => {
            let (v1, v2) = (p.point().coords(), q.point().coords());
            let [_, c1, c2, _] = curve.restrict(v1, v2);
            if c1.is_zero() && c2.is_zero() {
                return Err(improper);
            }
            linalg::sub(&linalg::scale(v1, &c2), &linalg::scale(v2, &c1))
        }
        [p, _] => {
            let v1 = p.point().coords();
            let v2 = other_point_on(l, p.point());
            let [_, c1, c2, c3] = curve.restrict(v1, &v2);
            if !c1.is_zero() || (c2.is_zero() && c3.is_zero()) {
                return Err(improper);
            }
            linalg::sub(&linalg::scale(v1, &c3), &linalg::scale(&v2, &c2))
        }
        [p] => {
            let v1 = p.point().coords();
            let v2 = other_point_on(l, p.point());
            let [_, c1, c2, c3] = curve.restrict(v1, &v2);
            let disc = &c2.square() - &(&Scalar::from_int(4) * &c1 * &c3);
            if !disc.is_zero() || (c1.is_zero() && c2.is_zero() && c3.is_zero()) {
                return Err(improper);
            }
            if c1.is_zero() {
                v1.clone()
            } else {
                let s = -&c2;
                let t = &Scalar::from_int(2) * &c1;
                linalg::add(&linalg::scale(v1, &s), &linalg::scale(&v2, &t))
            }
        }
        _ => return Err(improper),
    };
    CurvePoint::new(PPoint::new(point)?)
}

/// `p * q`: the third point of `E` on the chord (or tangent) through `p, q`.
pub fn star(p: &CurvePoint, q: &CurvePoint) -> Result<CurvePoint> {
    let line = if p == q { tangent_line(p)? } else { join(p.point(), q.point())? };
    third_intersection(&line, &[p, q])
}

pub fn add(p: &CurvePoint, q: &CurvePoint) -> Result<CurvePoint> {
    star(&identity(), &star(p, q)?)
}

pub fn neg(p: &CurvePoint) -> Result<CurvePoint> {
    let o = identity();
    star(p, &star(&o, &o)?)
}

pub fn scalar_mul(n: i64, p: &CurvePoint) -> Result<CurvePoint> {
    let mut base = if n < 0 { neg(p)? } else { p.clone() };
    let mut k = n.unsigned_abs();
    let mut acc = identity();
    while k > 0 {
        if k & 1 == 1 {
            acc = add(&acc, &base)?;
        }
        k >>= 1;
        if k > 0 {
            base = add(&base, &base)?;
        }
    }
    Ok(acc)
}

/// Result of a bounded torsion search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Order {
    Finite(u32),
    /// No multiple `nP` with `1 <= n <= bound` is the identity.
    NotTorsionUpTo(u32),
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(n) => write!(f, "{n}"),
            Order::NotTorsionUpTo(b) => write!(f, "not torsion up to {b}"),
        }
    }
}

pub fn order_of(p: &CurvePoint, bound: u32) -> Result<Order> {
    let o = identity();
    let mut acc = p.clone();
    for n in 1..=bound {
        if acc == o {
            return Ok(Order::Finite(n));
        }
        acc = add(&acc, p)?;
    }
    Ok(Order::NotTorsionUpTo(bound))
}

/// Absolute barycentrics `(x, y)` with `z = 1 - x - y`.
pub fn to_affine_xy(p: &PPoint) -> Result<(Scalar, Scalar)> {
    let [x, y, _] = crate::projective::normalized(p, &triangle::linf())?;
    Ok((x, y))
}

pub fn from_affine_xy(x: &Scalar, y: &Scalar) -> Result<PPoint> {
    PPoint::new([x.clone(), y.clone(), &(&Scalar::one() - x) - y])
}

/// `(5x-1)y^2 + (5x-1)(x-1)y - x^2 + x`, which is `F(x, y, 1-x-y)`.
pub fn curve_affine_residual(x: &Scalar, y: &Scalar) -> Scalar {
    let k = &Scalar::from_int(5) * x - Scalar::one();
    let xm1 = x - &Scalar::one();
    &(&(&k * &y.square()) + &(&(&k * &xm1) * y)) - &(&x.square() - x)
}

/// `(X-1)(5X-1)(5X^2-2X+1)`.
pub fn quartic_rhs(x: &Scalar) -> Scalar {
    let one = Scalar::one();
    let five = Scalar::from_int(5);
    let q = &(&(&five * &x.square()) - &(&Scalar::from_int(2) * x)) + &one;
    &(&(x - &one) * &(&(&five * x) - &one)) * &q
}

pub fn quartic_residual(x: &Scalar, y: &Scalar) -> Scalar {
    &y.square() - &quartic_rhs(x)
}

/// `(x, y) -> (x, (5x-1)(2y + x - 1))`.
pub fn to_quartic(x: &Scalar, y: &Scalar) -> Result<(Scalar, Scalar)> {
    if !curve_affine_residual(x, y).is_zero() {
        return Err(Error::NotOnCurve);
    }
    let k = &Scalar::from_int(5) * x - Scalar::one();
    if k.is_zero() {
        return Err(Error::SingularFiber);
    }
    let inner = &(&(&Scalar::from_int(2) * y) + x) - &Scalar::one();
    Ok((x.clone(), &k * &inner))
}

pub fn from_quartic(big_x: &Scalar, big_y: &Scalar) -> Result<(Scalar, Scalar)> {
    let k = &Scalar::from_int(5) * big_x - Scalar::one();
    if k.is_zero() {
        return Err(Error::SingularFiber);
    }
    let num = big_y - &(&k * &(big_x - &Scalar::one()));
    let y = num.checked_div(&(&Scalar::from_int(2) * &k))?;
    Ok((big_x.clone(), y))
}

/// `u = 4X/(X-1)`, `v = 2Y/(X-1)^2`.
pub fn quartic_to_uv(big_x: &Scalar, big_y: &Scalar) -> Result<(Scalar, Scalar)> {
    let d = big_x - &Scalar::one();
    if d.is_zero() {
        return Err(Error::ExceptionalFiber);
    }
    let inv = d.inv()?;
    let u = &(&Scalar::from_int(4) * big_x) * &inv;
    let v = &(&Scalar::from_int(2) * big_y) * &inv.square();
    Ok((u, v))
}

/// `X = u/(u-4)`, `Y = 8v/(u-4)^2`.
pub fn uv_to_quartic(u: &Scalar, v: &Scalar) -> Result<(Scalar, Scalar)> {
    let d = u - &Scalar::from_int(4);
    if d.is_zero() {
        return Err(Error::ExceptionalFiber);
    }
    let inv = d.inv()?;
    Ok((u * &inv, &(&Scalar::from_int(8) * v) * &inv.square()))
}

/// `v^2 - (u+1)(u^2+4)`.
pub fn uv_residual(u: &Scalar, v: &Scalar) -> Scalar {
    let rhs = &(u + &Scalar::one()) * &(&u.square() + &Scalar::from_int(4));
    &v.square() - &rhs
}

/// The image of a curve point on `v^2 = (u+1)(u^2+4)`.
pub fn curve_to_uv(p: &CurvePoint) -> Result<(Scalar, Scalar)> {
    let (x, y) = to_affine_xy(p.point())?;
    let (qx, qy) = to_quartic(&x, &y)?;
    quartic_to_uv(&qx, &qy)
}

pub fn uv_to_curve(u: &Scalar, v: &Scalar) -> Result<CurvePoint> {
    if !uv_residual(u, v).is_zero() {
        return Err(Error::NotOnCurve);
    }
    let (qx, qy) = uv_to_quartic(u, v)?;
    let (x, y) = from_quartic(&qx, &qy)?;
    CurvePoint::new(from_affine_xy(&x, &y)?)
}

/// `Y^2 - (X-1)(5X-1)(5X^2-2X+1) - 4(5x-1) L(x, y)` as a polynomial in
/// `x, y`, where `L` is the affine equation and `Y = (5x-1)(2y+x-1)`.
/// It is identically zero.
pub fn quartic_identity_defect() -> Poly {
    let (x, y) = (Poly::var(0), Poly::var(1));
    let one = Poly::int(1);
    let k = Poly::int(5) * x.clone() - one.clone();
    let big_y = &k * &(Poly::int(2) * y.clone() + x.clone() - one.clone());
    let rhs =
        (x.clone() - one.clone()) * k.clone() * (Poly::int(5) * x.pow(2) - Poly::int(2) * x.clone() + one.clone());
    let affine = &k * &y.pow(2) + &k * &(x.clone() - one) * y.clone() - x.pow(2) + x;
    big_y.pow(2) - rhs - Poly::int(4) * k * affine
}

/// `F(x, y, 1-x-y)` minus the affine equation; identically zero.
pub fn affine_identity_defect() -> Poly {
    let (x, y) = (Poly::var(0), Poly::var(1));
    let z = Poly::int(1) - x.clone() - y.clone();
    let f = Cubic::curve().form().clone();
    let mut sub = Poly::zero();
    for (e, c) in f.terms() {
        sub = sub + Poly::constant(c.clone()) * x.pow(e[0]) * y.pow(e[1]) * z.pow(e[2]);
    }
    let k = Poly::int(5) * x.clone() - Poly::int(1);
    let affine = &k * &y.pow(2) + &k * &(x.clone() - Poly::int(1)) * y.clone() - x.pow(2) + x;
    sub - affine
}

/// A point of `v^2 = u^3 + u^2 + 4u + 4`.
#[derive(Clone, PartialEq, Eq, Debug)]
#[allow(clippy::large_enum_variant)]
pub enum WeierstrassLikePoint {
    Infinity,
    Affine { u: Scalar, v: Scalar },
}

const A2: i64 = 1;
const A4: i64 = 4;

impl WeierstrassLikePoint {
    pub fn new(u: Scalar, v: Scalar) -> Result<Self> {
        if uv_residual(&u, &v).is_zero() {
            Ok(WeierstrassLikePoint::Affine { u, v })
        } else {
            Err(Error::NotOnCurve)
        }
    }

    pub fn from_ints(u: i64, v: i64) -> Result<Self> {
        Self::new(Scalar::from_int(u), Scalar::from_int(v))
    }

    pub fn neg(&self) -> Self {
        match self {
            Self::Infinity => Self::Infinity,
            Self::Affine { u, v } => Self::Affine { u: u.clone(), v: -v },
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let (u1, v1, u2, v2) = match (self, other) {
            (Self::Infinity, q) => return q.clone(),
            (p, Self::Infinity) => return p.clone(),
            (Self::Affine { u: u1, v: v1 }, Self::Affine { u: u2, v: v2 }) => (u1, v1, u2, v2),
        };
        let lambda = if u1 != u2 {
            &(v2 - v1) / &(u2 - u1)
        } else if v1 == v2 && !v1.is_zero() {
            let num =
                &(&(&Scalar::from_int(3) * &u1.square()) + &(&Scalar::from_int(2 * A2) * u1)) + &Scalar::from_int(A4);
            &num / &(&Scalar::from_int(2) * v1)
        } else {
            return Self::Infinity;
        };
        let u3 = &(&(&lambda.square() - &Scalar::from_int(A2)) - u1) - u2;
        let v3 = &(&lambda * &(u1 - &u3)) - v1;
        Self::Affine { u: u3, v: v3 }
    }

    pub fn scalar_mul(&self, n: i64) -> Self {
        let mut base = if n < 0 { self.neg() } else { self.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = Self::Infinity;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.add(&base);
            }
            k >>= 1;
            base = base.add(&base);
        }
        acc
    }

    pub fn order(&self, bound: u32) -> Order {
        let mut acc = self.clone();
        for n in 1..=bound {
            if acc == Self::Infinity {
                return Order::Finite(n);
            }
            acc = acc.add(self);
        }
        Order::NotTorsionUpTo(bound)
    }
}

/// Standard invariants of `v^2 = u^3 + a2 u^2 + a4 u + a6`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveInvariants {
    pub b2: BigRational,
    pub b4: BigRational,
    pub b6: BigRational,
    pub b8: BigRational,
    pub c4: BigRational,
    pub discriminant: BigRational,
    pub j: BigRational,
}

pub fn invariants() -> CurveInvariants {
    let q = |n: i64| BigRational::from_integer(BigInt::from(n));
    let (a1, a2, a3, a4, a6) = (q(0), q(A2), q(0), q(A4), q(4));
    let b2 = &a1 * &a1 + q(4) * &a2;
    let b4 = q(2) * &a4 + &a1 * &a3;
    let b6 = &a3 * &a3 + q(4) * &a6;
    let b8 = &a1 * &a1 * &a6 + q(4) * &a2 * &a6 - &a1 * &a3 * &a4 + &a2 * &a3 * &a3 - &a4 * &a4;
    let c4 = &b2 * &b2 - q(24) * &b4;
    let discriminant = -(&b2 * &b2 * &b8) - q(8) * &b4 * &b4 * &b4 - q(27) * &b6 * &b6 + q(9) * &b2 * &b4 * &b6;
    let j = &c4 * &c4 * &c4 / &discriminant;
    CurveInvariants { b2, b4, b6, b8, c4, discriminant, j }
}

pub fn j_invariant() -> BigRational {
    invariants().j
}

/// Evidence that `E` is smooth, touches the sides of `K^-1(ABC)` at the
/// vertices, and has its points at infinity as flexes.
#[derive(Clone, Debug)]
pub struct SmoothnessReport {
    /// Monic gcd of the pairwise resultants of the partials on `z = 1`.
    pub resultant_gcd_affine: Vec<BigRational>,
    /// Monic gcd of the partials on `z = 0, y = 1`.
    pub gcd_at_infinity: Vec<BigRational>,
    /// Gradient at `A = (1:0:0)`, the one point not covered by the charts.
    pub gradient_at_a: Vec3,
    pub gradients_at_named_points_nonzero: bool,
    /// Contact order of the side `y+z=0` (resp. `z+x`, `x+y`) of
    /// `K^-1(ABC)` with `E` at `A` (resp. `B`, `C`).
    pub side_contact: [Option<u32>; 3],
    /// Contact order of the tangent at `A_inf, B_inf, C_inf`.
    pub flex_contact: [Option<u32>; 3],
    pub tangents_at_infinity: [PLine; 3],
}

impl SmoothnessReport {
    pub fn smooth(&self) -> bool {
        let one = vec![BigRational::one()];
        self.resultant_gcd_affine == one
            && self.gcd_at_infinity == one
            && !linalg::is_zero(&self.gradient_at_a)
            && self.gradients_at_named_points_nonzero
    }

    pub fn sides_tangent_at_vertices(&self) -> bool {
        self.side_contact == [Some(2); 3]
    }

    pub fn points_at_infinity_are_flexes(&self) -> bool {
        self.flex_contact == [Some(3); 3]
    }

    pub fn all(&self) -> bool {
        self.smooth() && self.sides_tangent_at_vertices() && self.points_at_infinity_are_flexes()
    }
}

pub fn smoothness_and_tangency_report() -> Result<SmoothnessReport> {
    let curve = Cubic::curve();
    let partials: Vec<Poly> = (0..3).map(|i| curve.form().derivative(i)).collect();
    let one = BigRational::one();

    let affine: Vec<Poly> = partials.iter().map(|p| p.specialize(2, &one)).collect();
    let mut g: Option<Vec<BigRational>> = None;
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let r = poly::resultant(&affine[i], &affine[j], 1)
            .univariate(0)
            .ok_or_else(|| Error::Internal("resultant is not univariate".into()))?;
        g = Some(match g {
            None => poly::gcd_univariate(&r, &[]),
            Some(prev) => poly::gcd_univariate(&prev, &r),
        });
    }
    let resultant_gcd_affine = g.unwrap_or_default();

    let mut gcd_at_infinity: Vec<BigRational> = Vec::new();
    for p in &partials {
        let u = p
            .specialize(2, &BigRational::zero())
            .specialize(1, &one)
            .univariate(0)
            .ok_or_else(|| Error::Internal("partial is not univariate".into()))?;
        gcd_at_infinity = poly::gcd_univariate(&gcd_at_infinity, &u);
    }

    let gradient_at_a = curve.gradient(named::a().point().coords());
    let gradients_at_named_points_nonzero =
        named::all().iter().all(|(_, p)| !linalg::is_zero(&curve.gradient(p.point().coords())));

    let sides = [PLine::from_ints(0, 1, 1), PLine::from_ints(1, 0, 1), PLine::from_ints(1, 1, 0)];
    let vertices = [named::a(), named::b(), named::c()];
    let mut side_contact = [None; 3];
    for i in 0..3 {
        side_contact[i] = curve.intersection_multiplicity(&sides[i], vertices[i].point())?;
    }

    let at_infinity = [named::a_inf(), named::b_inf(), named::c_inf()];
    let tangents_at_infinity =
        [tangent_line(&at_infinity[0])?, tangent_line(&at_infinity[1])?, tangent_line(&at_infinity[2])?];
    let mut flex_contact = [None; 3];
    for i in 0..3 {
        flex_contact[i] = curve.intersection_multiplicity(&tangents_at_infinity[i], at_infinity[i].point())?;
    }

    Ok(SmoothnessReport {
        resultant_gcd_affine,
        gcd_at_infinity,
        gradient_at_a,
        gradients_at_named_points_nonzero,
        side_contact,
        flex_contact,
        tangents_at_infinity,
    })
}

/// Strictly outside the closed triangle `K^-1(ABC)`.
pub fn exterior_to_anticomplementary(p: &PPoint) -> Result<bool> {
    let [x, y, z] = p.coords();
    let w = x + y + z;
    if w.is_zero() {
        return Err(Error::PointAtInfinity);
    }
    Ok([y + z, z + x, x + y].iter().any(|c| (c * &w).sign() < 0))
}
