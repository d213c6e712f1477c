//! Projective incidence kernel over [`Scalar`].
//!
//! Points, lines and conics live in the projective plane. Every affine
//! notion (midpoints, centers, interiors, dilatations) takes the designated
//! line at infinity explicitly, so one kernel serves both the barycentric
//! chart (`x + y + z = 0`) and the Cartesian chart (`z = 0`).

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{common_disc, Scalar};
use crate::linalg::{self, canonicalize, cross, dot, null_space, Mat3, Vec3};

/// A point of the projective plane in canonical scaling.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PPoint(Vec3);

/// A line `l x + m y + n z = 0` in canonical scaling.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PLine(Vec3);

fn canonical_triple(mut v: Vec3) -> Result<Vec3> {
    common_disc(v.iter())?;
    canonicalize(&mut v)?;
    Ok(v)
}

impl PPoint {
    pub fn new(v: Vec3) -> Result<Self> {
        Ok(PPoint(canonical_triple(v)?))
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Self {
        PPoint::new(linalg::vec3(x, y, z)).expect("nonzero triple")
    }

    /// The ordinary point `(x, y)` of the Cartesian chart.
    pub fn cartesian(x: Scalar, y: Scalar) -> Self {
        PPoint::new([x, y, Scalar::one()]).expect("nonzero triple")
    }

    pub fn coords(&self) -> &Vec3 {
        &self.0
    }

    pub fn disc(&self) -> u64 {
        common_disc(self.0.iter()).expect("checked at construction")
    }

    pub fn is_rational(&self) -> bool {
        self.disc() == 0
    }

    pub fn is_at_infinity(&self, linf: &PLine) -> bool {
        dot(&linf.0, &self.0).is_zero()
    }

    /// Lexicographic order of the canonical coordinates by real value.
    pub fn lex_cmp(&self, other: &PPoint) -> Ordering {
        lex_cmp(&self.0, &other.0)
    }
}

fn lex_cmp(u: &[Scalar], v: &[Scalar]) -> Ordering {
    for (a, b) in u.iter().zip(v) {
        match a.partial_cmp(b) {
            Some(Ordering::Equal) => continue,
            Some(o) => return o,
            None => panic!("comparing values from different fields"),
        }
    }
    Ordering::Equal
}

impl PLine {
    pub fn new(v: Vec3) -> Result<Self> {
        Ok(PLine(canonical_triple(v)?))
    }

    pub fn from_ints(l: i64, m: i64, n: i64) -> Self {
        PLine::new(linalg::vec3(l, m, n)).expect("nonzero triple")
    }

    pub fn coords(&self) -> &Vec3 {
        &self.0
    }

    pub fn contains(&self, p: &PPoint) -> bool {
        dot(&self.0, &p.0).is_zero()
    }

    /// `x + y + z = 0`.
    pub fn barycentric_infinity() -> Self {
        PLine::from_ints(1, 1, 1)
    }

    /// `z = 0`.
    pub fn cartesian_infinity() -> Self {
        PLine::from_ints(0, 0, 1)
    }

    /// Two distinct points spanning the line.
    fn spanning_points(&self) -> (Vec3, Vec3) {
        let basis = [linalg::vec3(1, 0, 0), linalg::vec3(0, 1, 0), linalg::vec3(0, 0, 1)];
        let candidates: Vec<Vec3> = basis.iter().map(|e| cross(&self.0, e)).filter(|v| !linalg::is_zero(v)).collect();
        let p0 = candidates[0].clone();
        let p1 = candidates
            .iter()
            .skip(1)
            .find(|v| !linalg::proportional(&p0, v))
            .expect("a line has two independent points")
            .clone();
        (p0, p1)
    }
}

macro_rules! triple_display {
    ($t:ty, $open:expr, $close:expr) => {
        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}{}, {}, {}{}", $open, self.0[0], self.0[1], self.0[2], $close)
            }
        }
        impl fmt::Debug for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{self}")
            }
        }
    };
}

triple_display!(PPoint, "(", ")");
triple_display!(PLine, "[", "]");

impl std::str::FromStr for PPoint {
    type Err = Error;

    /// Three comma-separated scalar literals, e.g. `-4+sqrt(19),-1,3`.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let body = trimmed.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(trimmed);
        let parts: Vec<&str> = body.split(',').collect();
        let [x, y, z] = parts.as_slice() else {
            return Err(Error::ParsePoint(s.to_string()));
        };
        let parse = |t: &str| t.parse::<Scalar>().map_err(|_| Error::ParsePoint(s.to_string()));
        match PPoint::new([parse(x)?, parse(y)?, parse(z)?]) {
            Err(Error::ZeroTriple) => Err(Error::ParsePoint(s.to_string())),
            other => other,
        }
    }
}

pub fn join(p: &PPoint, q: &PPoint) -> Result<PLine> {
    let v = cross(&p.0, &q.0);
    if linalg::is_zero(&v) {
        return Err(Error::CoincidentArguments);
    }
    PLine::new(v)
}

pub fn meet(l: &PLine, m: &PLine) -> Result<PPoint> {
    let v = cross(&l.0, &m.0);
    if linalg::is_zero(&v) {
        return Err(Error::CoincidentArguments);
    }
    PPoint::new(v)
}

pub fn collinear(p: &PPoint, q: &PPoint, r: &PPoint) -> bool {
    dot(&p.0, &cross(&q.0, &r.0)).is_zero()
}

/// Representative of `p` with `linf . p = 1`.
pub fn normalized(p: &PPoint, linf: &PLine) -> Result<Vec3> {
    let w = dot(&linf.0, &p.0);
    if w.is_zero() {
        return Err(Error::PointAtInfinity);
    }
    let inv = w.inv()?;
    Ok(linalg::scale(&p.0, &inv))
}

pub fn midpoint(p: &PPoint, q: &PPoint, linf: &PLine) -> Result<PPoint> {
    let sum = linalg::add(&normalized(p, linf)?, &normalized(q, linf)?);
    PPoint::new(sum)
}

/// Point reflection of `p` through `c`.
pub fn reflect_in_point(p: &PPoint, c: &PPoint, linf: &PLine) -> Result<PPoint> {
    let c2 = linalg::scale(&normalized(c, linf)?, &Scalar::from_int(2));
    PPoint::new(linalg::sub(&c2, &normalized(p, linf)?))
}

/// `(a - b) / (b - c)` measured along the common line, i.e. the signed
/// ratio `AB / BC` of directed segments.
pub fn signed_ratio(a: &PPoint, b: &PPoint, c: &PPoint, linf: &PLine) -> Result<Scalar> {
    let (na, nb, nc) = (normalized(a, linf)?, normalized(b, linf)?, normalized(c, linf)?);
    if !collinear(a, b, c) {
        return Err(Error::NotCollinear);
    }
    let ab = linalg::sub(&nb, &na);
    let bc = linalg::sub(&nc, &nb);
    let k = (0..3).find(|&i| !bc[i].is_zero()).ok_or(Error::CoincidentArguments)?;
    Ok(&ab[k] / &bc[k])
}

/// The line through `p` parallel to `l`.
pub fn parallel_through(p: &PPoint, l: &PLine, linf: &PLine) -> Result<PLine> {
    let direction = meet(l, linf)?;
    join(p, &direction)
}

/// A conic `x^T M x = 0` with `M` symmetric, in canonical scaling.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Conic {
    m: Mat3,
}

const SYM_INDEX: [(usize, usize); 6] = [(0, 0), (1, 1), (2, 2), (0, 1), (1, 2), (0, 2)];

impl Conic {
    pub fn from_matrix(m: Mat3) -> Result<Self> {
        if !m.is_symmetric() {
            return Err(Error::Internal("conic matrix is not symmetric".into()));
        }
        let mut v: Vec<Scalar> = SYM_INDEX.iter().map(|&(i, j)| m.rows[i][j].clone()).collect();
        common_disc(v.iter())?;
        canonicalize(&mut v)?;
        let mut rows: [[Scalar; 3]; 3] = std::array::from_fn(|_| std::array::from_fn(|_| Scalar::zero()));
        for (k, &(i, j)) in SYM_INDEX.iter().enumerate() {
            rows[i][j] = v[k].clone();
            rows[j][i] = v[k].clone();
        }
        Ok(Conic { m: Mat3::from_rows(rows) })
    }

    /// `xx x^2 + yy y^2 + zz z^2 + xy xy + yz yz + zx zx`.
    pub fn from_form(xx: Scalar, yy: Scalar, zz: Scalar, xy: Scalar, yz: Scalar, zx: Scalar) -> Result<Self> {
        let half = Scalar::from_ratio(1, 2);
        let (xy, yz, zx) = (&xy * &half, &yz * &half, &zx * &half);
        Conic::from_matrix(Mat3::from_rows([[xx, xy.clone(), zx.clone()], [xy, yy, yz.clone()], [zx, yz, zz]]))
    }

    fn from_coefficient_vector(v: &[Scalar]) -> Result<Self> {
        Conic::from_form(v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone(), v[4].clone(), v[5].clone())
    }

    /// `x^2 + y^2 = r2 z^2` in the Cartesian chart.
    pub fn circle(cx: Scalar, cy: Scalar, r2: Scalar) -> Result<Self> {
        let two = Scalar::from_int(2);
        Conic::from_form(
            Scalar::one(),
            Scalar::one(),
            &cx * &cx + &cy * &cy - r2,
            Scalar::zero(),
            -(&two * &cy),
            -(&two * &cx),
        )
    }

    pub fn matrix(&self) -> &Mat3 {
        &self.m
    }

    pub fn value(&self, p: &PPoint) -> Scalar {
        dot(&p.0, &self.m.apply(&p.0))
    }

    pub fn contains(&self, p: &PPoint) -> bool {
        self.value(p).is_zero()
    }

    pub fn is_degenerate(&self) -> bool {
        self.m.det().is_zero()
    }

    fn require_nondegenerate(&self) -> Result<()> {
        if self.is_degenerate() {
            Err(Error::DegenerateConic)
        } else {
            Ok(())
        }
    }

    pub fn polar(&self, p: &PPoint) -> Result<PLine> {
        self.require_nondegenerate()?;
        PLine::new(self.m.apply(&p.0))
    }

    pub fn pole(&self, l: &PLine) -> Result<PPoint> {
        self.require_nondegenerate()?;
        PPoint::new(self.m.adjugate().apply(&l.0))
    }

    pub fn tangent_at(&self, p: &PPoint) -> Result<PLine> {
        if !self.contains(p) {
            return Err(Error::PointNotOnConic);
        }
        self.polar(p)
    }

    /// Pole of the line at infinity.
    pub fn center(&self, linf: &PLine) -> Result<PPoint> {
        let c = self.pole(linf)?;
        if c.is_at_infinity(linf) {
            return Err(Error::CenterAtInfinity);
        }
        Ok(c)
    }

    /// Image under an invertible map: `T^-T M T^-1`.
    pub fn transformed(&self, map: &AffMap) -> Result<Conic> {
        let inv = map.t.inverse()?;
        Conic::from_matrix(inv.transpose().mul(&self.m).mul(&inv))
    }

    pub fn disc(&self) -> u64 {
        common_disc(self.m.entries()).expect("checked at construction")
    }

    /// Determinant of the restriction to the affine part, `m00 m11 - m01^2`
    /// in the Cartesian chart; positive for ellipses.
    pub fn affine_discriminant(&self, linf: &PLine) -> Result<Scalar> {
        // restrict the quadratic form to the plane linf . x = 0
        let (e1, e2) = linf.spanning_points();
        let a = dot(&e1, &self.m.apply(&e1));
        let b = dot(&e1, &self.m.apply(&e2));
        let c = dot(&e2, &self.m.apply(&e2));
        Ok(&a * &c - &b * &b)
    }
}

fn conic_row(p: &PPoint) -> Vec<Scalar> {
    let [x, y, z] = &p.0;
    vec![x * x, y * y, z * z, x * y, y * z, z * x]
}

/// The conic through five points, solved as the null space of the 5x6
/// incidence system. Degenerate results are returned as-is; check
/// [`Conic::is_degenerate`].
pub fn conic_through_five(points: [&PPoint; 5]) -> Result<Conic> {
    common_disc(points.iter().flat_map(|p| p.0.iter()))?;
    let rows: Vec<Vec<Scalar>> = points.iter().map(|p| conic_row(p)).collect();
    let ns = null_space(&rows, 6);
    if ns.len() != 1 {
        return Err(Error::UnderdeterminedConic(ns.len()));
    }
    Conic::from_coefficient_vector(&ns[0])
}

/// The unique conic through all the given points (at least five); `Ok` only
/// when the incidence system has a one-dimensional solution space.
pub fn conic_through_points(points: &[PPoint]) -> Result<Conic> {
    common_disc(points.iter().flat_map(|p| p.0.iter()))?;
    let rows: Vec<Vec<Scalar>> = points.iter().map(conic_row).collect();
    let ns = null_space(&rows, 6);
    match ns.len() {
        1 => Conic::from_coefficient_vector(&ns[0]),
        0 => Err(Error::Internal("points do not lie on a common conic".into())),
        n => Err(Error::UnderdeterminedConic(n)),
    }
}

/// The conic with the given center passing through three given points.
pub fn conic_with_center_through(center: &PPoint, points: [&PPoint; 3], linf: &PLine) -> Result<Conic> {
    let mut rows: Vec<Vec<Scalar>> = points.iter().map(|p| conic_row(p)).collect();
    rows.extend(center_rows(center, linf));
    let ns = null_space(&rows, 6);
    if ns.len() != 1 {
        return Err(Error::UnderdeterminedConic(ns.len()));
    }
    Conic::from_coefficient_vector(&ns[0])
}

/// Linear conditions on the form coefficients saying that `M c` is
/// proportional to `linf`, i.e. `c` is the center.
fn center_rows(c: &PPoint, linf: &PLine) -> Vec<Vec<Scalar>> {
    let [x, y, z] = &c.0;
    let half = Scalar::from_ratio(1, 2);
    let zero = Scalar::zero();
    // (M c)_i as linear forms in [xx, yy, zz, xy, yz, zx]
    let mc = [
        vec![x.clone(), zero.clone(), zero.clone(), y * &half, zero.clone(), z * &half],
        vec![zero.clone(), y.clone(), zero.clone(), x * &half, z * &half, zero.clone()],
        vec![zero.clone(), zero.clone(), z.clone(), zero.clone(), y * &half, x * &half],
    ];
    // (M c) x linf = 0 gives the proportionality conditions
    let l = &linf.0;
    let combine =
        |i: usize, j: usize| -> Vec<Scalar> { (0..6).map(|k| &mc[i][k] * &l[j] - &mc[j][k] * &l[i]).collect() };
    vec![combine(0, 1), combine(1, 2), combine(0, 2)]
}

/// Intersection of a line with a non-degenerate conic.
///
/// Returns zero, one (tangency) or two points. Two points are ordered by
/// [`PPoint::lex_cmp`]. When the discriminant is not a square, the points
/// live in `Q(sqrt d)` for the squarefree part `d`.
pub fn line_conic_intersect(l: &PLine, c: &Conic) -> Result<Vec<PPoint>> {
    c.require_nondegenerate()?;
    let field = common_disc(l.0.iter().chain(c.m.entries()))?;
    let (p0, p1) = l.spanning_points();
    let a = dot(&p0, &c.m.apply(&p0));
    let b = dot(&p0, &c.m.apply(&p1));
    let cc = dot(&p1, &c.m.apply(&p1));
    if a.is_zero() && b.is_zero() && cc.is_zero() {
        return Err(Error::DegenerateConic);
    }
    // a s^2 + 2 b s t + cc t^2 = 0 at the point s p0 + t p1
    let delta = &b * &b - &a * &cc;
    let point = |s: &Scalar, t: &Scalar| PPoint::new(linalg::add(&linalg::scale(&p0, s), &linalg::scale(&p1, t)));
    if delta.sign() < 0 {
        return Ok(vec![]);
    }
    let root = delta.sqrt()?.expect("non-negative discriminant");
    let joint = root.disc();
    if field != 0 && joint != 0 && field != joint {
        return Err(Error::MixedDiscriminants(field, joint));
    }
    let one = Scalar::one();
    let mut pts = if cc.is_zero() && b.is_zero() {
        // a s^2 = 0: double root at p1
        vec![point(&Scalar::zero(), &one)?]
    } else if cc.is_zero() {
        // root at s = 0 and at s = 1, t = -a / 2b
        let t = -(&a / &(&b * &Scalar::from_int(2)));
        vec![point(&Scalar::zero(), &one)?, point(&one, &t)?]
    } else {
        let t1 = (-&b + &root) / &cc;
        let t2 = (-&b - &root) / &cc;
        vec![point(&one, &t1)?, point(&one, &t2)?]
    };
    pts.sort_by(|p, q| p.lex_cmp(q));
    pts.dedup();
    Ok(pts)
}

fn restrict_to_line(m: &Mat3, e1: &Vec3, e2: &Vec3) -> [Scalar; 3] {
    [dot(e1, &m.apply(e1)), dot(e1, &m.apply(e2)), dot(e2, &m.apply(e2))]
}

/// Common points of two conics that induce the same involution on `linf`.
///
/// A member `c1 - t c2` of the pencil splits into `linf` and the radical
/// line; the ordinary intersections are those of the radical line with `c1`.
pub fn conic_conic_intersect_shared_infinity(c1: &Conic, c2: &Conic, linf: &PLine) -> Result<Vec<PPoint>> {
    c1.require_nondegenerate()?;
    c2.require_nondegenerate()?;
    let (e1, e2) = linf.spanning_points();
    let f1 = restrict_to_line(&c1.m, &e1, &e2);
    let f2 = restrict_to_line(&c2.m, &e1, &e2);
    if !linalg::proportional(&f1, &f2) {
        return Err(Error::NoSharedInvolution);
    }
    let k = (0..3).find(|&i| !f2[i].is_zero()).ok_or(Error::NoSharedInvolution)?;
    let t = &f1[k] / &f2[k];
    let pencil = c1.m.sub(&c2.m.scaled(&t));
    if pencil.entries().all(Scalar::is_zero) {
        return Err(Error::CoincidentArguments);
    }
    // pencil = (l m^T + m l^T) / 2; recover m from any x0 with l . x0 = 1
    let l = &linf.0;
    let j = (0..3).find(|&i| !l[i].is_zero()).expect("nonzero line");
    let mut x0 = linalg::vec3(0, 0, 0);
    x0[j] = l[j].inv()?;
    let nx0 = pencil.apply(&x0);
    let mu = dot(&x0, &nx0);
    let m: Vec3 = std::array::from_fn(|i| &Scalar::from_int(2) * &nx0[i] - &mu * &l[i]);
    let half = Scalar::from_ratio(1, 2);
    for r in 0..3 {
        for s in 0..3 {
            let expect = &(&l[r] * &m[s] + &m[r] * &l[s]) * &half;
            if pencil.rows[r][s] != expect {
                return Err(Error::Internal("pencil member does not split off the line at infinity".into()));
            }
        }
    }
    if linalg::proportional(&m, l) {
        return Ok(vec![]);
    }
    line_conic_intersect(&PLine::new(m)?, c1)
}

/// Whether the ordinary point `p` is strictly inside the ellipse `c`.
pub fn interior(p: &PPoint, c: &Conic, linf: &PLine) -> Result<bool> {
    normalized(p, linf)?;
    let z = c.center(linf)?;
    let inside = c.value(&z).sign();
    Ok(inside != 0 && c.value(p).sign() == inside)
}

/// An invertible map of the plane preserving a chosen line at infinity.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AffMap {
    t: Mat3,
    linf: PLine,
}

impl AffMap {
    pub fn new(t: Mat3, linf: &PLine) -> Result<Self> {
        if t.det().is_zero() {
            return Err(Error::SingularMatrix);
        }
        let row = t.transpose().apply(&linf.0);
        if !linalg::proportional(&row, &linf.0) {
            return Err(Error::Internal("map does not preserve the line at infinity".into()));
        }
        let mut entries: Vec<Scalar> = t.entries().cloned().collect();
        common_disc(entries.iter())?;
        canonicalize(&mut entries)?;
        let rows = std::array::from_fn(|i| std::array::from_fn(|j| entries[3 * i + j].clone()));
        Ok(AffMap { t: Mat3::from_rows(rows), linf: linf.clone() })
    }

    pub fn identity(linf: &PLine) -> Self {
        AffMap::new(Mat3::identity(), linf).expect("identity")
    }

    pub fn matrix(&self) -> &Mat3 {
        &self.t
    }

    pub fn line_at_infinity(&self) -> &PLine {
        &self.linf
    }

    pub fn apply(&self, p: &PPoint) -> PPoint {
        PPoint::new(self.t.apply(&p.0)).expect("invertible map")
    }

    pub fn apply_line(&self, l: &PLine) -> PLine {
        let inv = self.t.adjugate().transpose();
        PLine::new(inv.apply(&l.0)).expect("invertible map")
    }

    /// `self . other` (apply `other` first).
    pub fn compose(&self, other: &AffMap) -> AffMap {
        AffMap::new(self.t.mul(&other.t), &self.linf).expect("composition of affine maps")
    }

    pub fn inverse(&self) -> AffMap {
        AffMap::new(self.t.adjugate(), &self.linf).expect("invertible map")
    }

    pub fn is_identity(&self) -> bool {
        *self == AffMap::identity(&self.linf)
    }

    /// Half-turn about `c`.
    pub fn point_reflection(c: &PPoint, linf: &PLine) -> Result<AffMap> {
        let nc = normalized(c, linf)?;
        // x -> 2 (linf . x) c - x
        let two = Scalar::from_int(2);
        let rows = std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                let delta = if i == j { Scalar::one() } else { Scalar::zero() };
                &(&two * &nc[i]) * &linf.0[j] - delta
            })
        });
        AffMap::new(Mat3::from_rows(rows), linf)
    }

    /// The dilatation class of this map relative to its line at infinity.
    pub fn classify(&self) -> DilatationClass {
        classify_dilatation(self)
    }
}

/// Sends `src[i]` to `dst[i]`.
pub fn affine_map_from_triangles(src: [&PPoint; 3], dst: [&PPoint; 3], linf: &PLine) -> Result<AffMap> {
    if collinear(src[0], src[1], src[2]) || collinear(dst[0], dst[1], dst[2]) {
        return Err(Error::CollinearTriple);
    }
    let cols = |pts: [&PPoint; 3]| -> Result<Mat3> {
        Ok(Mat3::from_cols([normalized(pts[0], linf)?, normalized(pts[1], linf)?, normalized(pts[2], linf)?]))
    };
    let s = cols(src)?;
    let d = cols(dst)?;
    AffMap::new(d.mul(&s.inverse()?), linf)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DilatationClass {
    Identity,
    /// Direction given as a point on the line at infinity.
    Translation(PPoint),
    Homothety {
        ratio: Scalar,
        center: PPoint,
    },
    HalfTurn(PPoint),
    NotDilatation,
}

impl DilatationClass {
    /// Normalizes ratio -1 to a half-turn.
    pub fn homothety(ratio: Scalar, center: PPoint) -> Self {
        if ratio == Scalar::from_int(-1) {
            DilatationClass::HalfTurn(center)
        } else {
            DilatationClass::Homothety { ratio, center }
        }
    }

    pub fn is_half_turn(&self) -> bool {
        matches!(self, DilatationClass::HalfTurn(_))
    }

    pub fn ratio(&self) -> Option<Scalar> {
        match self {
            DilatationClass::Identity | DilatationClass::Translation(_) => Some(Scalar::one()),
            DilatationClass::Homothety { ratio, .. } => Some(ratio.clone()),
            DilatationClass::HalfTurn(_) => Some(Scalar::from_int(-1)),
            DilatationClass::NotDilatation => None,
        }
    }

    pub fn center(&self) -> Option<&PPoint> {
        match self {
            DilatationClass::Homothety { center, .. } | DilatationClass::HalfTurn(center) => Some(center),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            DilatationClass::Identity => "identity",
            DilatationClass::Translation(_) => "translation",
            DilatationClass::Homothety { .. } => "homothety",
            DilatationClass::HalfTurn(_) => "half-turn",
            DilatationClass::NotDilatation => "not-a-dilatation",
        }
    }
}

/// Classifies an affine map as a dilatation: the linear part must be a
/// scalar multiple of the identity.
pub fn classify_dilatation(map: &AffMap) -> DilatationClass {
    let t = &map.t;
    let l = &map.linf.0;
    // linf^T T = c linf^T
    let row = t.transpose().apply(l);
    let k = (0..3).find(|&i| !l[i].is_zero()).expect("nonzero line");
    let c = &row[k] / &l[k];

    let (e1, e2) = map.linf.spanning_points();
    let eigen = |e: &Vec3| -> Option<Scalar> {
        let te = t.apply(e);
        if !linalg::proportional(&te, e) {
            return None;
        }
        let i = (0..3).find(|&i| !e[i].is_zero())?;
        Some(&te[i] / &e[i])
    };
    let (Some(k1), Some(k2)) = (eigen(&e1), eigen(&e2)) else {
        return DilatationClass::NotDilatation;
    };
    if k1 != k2 {
        return DilatationClass::NotDilatation;
    }
    let ratio = &k1 / &c;
    let shifted = t.sub(&Mat3::scalar(&c));
    if ratio.is_one() {
        if shifted.entries().all(Scalar::is_zero) {
            return DilatationClass::Identity;
        }
        // T x0 - c x0 for any ordinary x0 is the translation direction
        let mut x0 = linalg::vec3(0, 0, 0);
        x0[k] = l[k].inv().expect("nonzero");
        let dir = shifted.apply(&x0);
        return DilatationClass::Translation(PPoint::new(dir).expect("nonzero translation"));
    }
    let rows: Vec<Vec<Scalar>> = shifted.rows.iter().map(|r| r.to_vec()).collect();
    let ns = null_space(&rows, 3);
    let center = PPoint::new([ns[0][0].clone(), ns[0][1].clone(), ns[0][2].clone()]).expect("fixed point");
    DilatationClass::homothety(ratio, center)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(lit: &str) -> Scalar {
        lit.parse().unwrap()
    }

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::from_ratio(n, d)
    }

    fn cart(x: Scalar, y: Scalar) -> PPoint {
        PPoint::cartesian(x, y)
    }

    #[test]
    fn point_literals() {
        let p: PPoint = "-4+sqrt(19),-1,3".parse().unwrap();
        assert_eq!(p.coords()[0], s("-4+1*sqrt(19)"));
        assert_eq!("(2, 4, 6)".parse::<PPoint>().unwrap(), PPoint::from_ints(1, 2, 3));
        let trailing = PPoint::new([s("1"), s("-1"), s("sqrt(19)")]).unwrap();
        assert_eq!("1,-1,sqrt(19)".parse::<PPoint>().unwrap(), trailing);
        let wrapped = PPoint::new([s("0"), s("1"), s("2*sqrt(6)")]).unwrap();
        assert_eq!("(0,1,2*sqrt(6))".parse::<PPoint>().unwrap(), wrapped);
        assert!(matches!("1,2".parse::<PPoint>(), Err(Error::ParsePoint(_))));
        assert!(matches!("0,0,0".parse::<PPoint>(), Err(Error::ParsePoint(_))));
        assert!(matches!("sqrt(2),sqrt(3),1".parse::<PPoint>(), Err(Error::MixedDiscriminants(..))));
    }

    fn unit_circle() -> Conic {
        Conic::circle(Scalar::zero(), Scalar::zero(), Scalar::one()).unwrap()
    }

    #[test]
    fn join_and_meet_examples() {
        let a = PPoint::from_ints(1, 0, 0);
        let b = PPoint::from_ints(0, 1, 0);
        assert_eq!(join(&a, &b).unwrap(), PLine::from_ints(0, 0, 1));
        let c_inf = meet(&PLine::from_ints(1, 1, 1), &PLine::from_ints(0, 0, 1)).unwrap();
        assert_eq!(c_inf, PPoint::from_ints(1, -1, 0));
        let l = join(&PPoint::from_ints(1, 0, -1), &PPoint::from_ints(0, 1, -1)).unwrap();
        assert_eq!(l, PLine::barycentric_infinity());
        assert_eq!(join(&a, &a), Err(Error::CoincidentArguments));
        assert_eq!(meet(&l, &l), Err(Error::CoincidentArguments));
    }

    #[test]
    fn conic_through_five_reproduces_circle() {
        let pts = [
            cart(q(1, 1), q(0, 1)),
            cart(q(0, 1), q(1, 1)),
            cart(q(-1, 1), q(0, 1)),
            cart(q(3, 5), q(4, 5)),
            cart(q(5, 13), q(-12, 13)),
        ];
        let c = conic_through_five([&pts[0], &pts[1], &pts[2], &pts[3], &pts[4]]).unwrap();
        assert_eq!(c, unit_circle());
        assert!(!c.is_degenerate());
    }

    #[test]
    fn cevian_conic_center() {
        let pts = [
            PPoint::from_ints(1, 0, 0),
            PPoint::from_ints(0, 1, 0),
            PPoint::from_ints(0, 0, 1),
            PPoint::from_ints(1, 2, 3),
            PPoint::from_ints(5, 8, 9),
        ];
        let c = conic_through_five([&pts[0], &pts[1], &pts[2], &pts[3], &pts[4]]).unwrap();
        let linf = PLine::barycentric_infinity();
        assert_eq!(c.center(&linf).unwrap(), PPoint::from_ints(1, 8, 3));
        assert_eq!(c.pole(&linf).unwrap(), c.center(&linf).unwrap());
    }

    #[test]
    fn circumconic_through_two_infinite_points_is_degenerate() {
        let pts = [
            PPoint::from_ints(1, 0, 0),
            PPoint::from_ints(0, 1, 0),
            PPoint::from_ints(0, 0, 1),
            PPoint::from_ints(0, 1, -1),
            PPoint::from_ints(1, -1, 0),
        ];
        let c = conic_through_five([&pts[0], &pts[1], &pts[2], &pts[3], &pts[4]]).unwrap();
        assert!(c.is_degenerate());
        assert_eq!(c.center(&PLine::barycentric_infinity()), Err(Error::DegenerateConic));
    }

    #[test]
    fn underdetermined_conic() {
        let a = PPoint::from_ints(1, 0, 0);
        let b = PPoint::from_ints(0, 1, 0);
        let c = PPoint::from_ints(0, 0, 1);
        let r = conic_through_five([&a, &b, &c, &a, &b]);
        assert_eq!(r, Err(Error::UnderdeterminedConic(3)));
    }

    #[test]
    fn centers() {
        assert_eq!(unit_circle().center(&PLine::cartesian_infinity()).unwrap(), PPoint::from_ints(0, 0, 1));
        let steiner = Conic::from_form(
            Scalar::zero(),
            Scalar::zero(),
            Scalar::zero(),
            Scalar::one(),
            Scalar::one(),
            Scalar::one(),
        )
        .unwrap();
        assert_eq!(steiner.center(&PLine::barycentric_infinity()).unwrap(), PPoint::from_ints(1, 1, 1));
        // y = x^2 is a parabola
        let parabola = Conic::from_form(
            Scalar::one(),
            Scalar::zero(),
            Scalar::zero(),
            Scalar::zero(),
            Scalar::from_int(-1),
            Scalar::zero(),
        )
        .unwrap();
        assert_eq!(parabola.center(&PLine::cartesian_infinity()), Err(Error::CenterAtInfinity));
    }

    #[test]
    fn polar_and_tangent() {
        let c = unit_circle();
        let p = PPoint::from_ints(1, 0, 1);
        assert_eq!(c.tangent_at(&p).unwrap(), PLine::from_ints(1, 0, -1));
        assert_eq!(c.tangent_at(&PPoint::from_ints(0, 0, 1)), Err(Error::PointNotOnConic));
        assert_eq!(c.pole(&PLine::cartesian_infinity()).unwrap(), c.center(&PLine::cartesian_infinity()).unwrap());
    }

    #[test]
    fn line_circle_intersections() {
        let c = unit_circle();
        let x_axis = PLine::from_ints(0, 1, 0);
        assert_eq!(
            line_conic_intersect(&x_axis, &c).unwrap(),
            vec![PPoint::from_ints(-1, 0, 1), PPoint::from_ints(1, 0, 1)]
        );

        // x = 1/2
        let l = PLine::from_ints(2, 0, -1);
        let pts = line_conic_intersect(&l, &c).unwrap();
        assert_eq!(pts.len(), 2);
        for p in &pts {
            assert_eq!(p.disc(), 3);
            assert!(c.contains(p));
            assert!(l.contains(p));
        }
        let h = s("1/2*sqrt(3)");
        assert_eq!(pts[0], cart(q(1, 2), -&h));
        assert_eq!(pts[1], cart(q(1, 2), h));

        let tangent = PLine::from_ints(1, 0, -1);
        assert_eq!(line_conic_intersect(&tangent, &c).unwrap(), vec![PPoint::from_ints(1, 0, 1)]);

        assert!(line_conic_intersect(&PLine::from_ints(1, 0, -2), &c).unwrap().is_empty());
    }

    #[test]
    fn line_through_infinite_point_of_hyperbola() {
        // xy = z^2 meets y = 0 only at (1, 0, 0) on the line at infinity plus nothing else
        let h = Conic::from_form(
            Scalar::zero(),
            Scalar::zero(),
            Scalar::from_int(-1),
            Scalar::one(),
            Scalar::zero(),
            Scalar::zero(),
        )
        .unwrap();
        let pts = line_conic_intersect(&PLine::from_ints(0, 1, 0), &h).unwrap();
        assert_eq!(pts, vec![PPoint::from_ints(1, 0, 0)]);
        // x - y = 0 meets it at (1, 1) and (-1, -1)
        let pts = line_conic_intersect(&PLine::from_ints(1, -1, 0), &h).unwrap();
        assert_eq!(pts.len(), 2);
        assert!(pts.iter().all(|p| h.contains(p)));
    }

    #[test]
    fn mixed_extension_is_rejected() {
        let c = unit_circle();
        // x = sqrt(2)/2 needs sqrt(2); y^2 = 1/2 then lives in Q(sqrt 2) as well
        let l = PLine::new([Scalar::one(), Scalar::zero(), -s("1/2*sqrt(2)")]).unwrap();
        let pts = line_conic_intersect(&l, &c).unwrap();
        assert_eq!(pts.len(), 2);
        // x = sqrt(2)/3 gives y^2 = 7/9, outside Q(sqrt 2)
        let l = PLine::new([Scalar::one(), Scalar::zero(), -s("1/3*sqrt(2)")]).unwrap();
        let r = line_conic_intersect(&l, &c);
        assert!(matches!(r, Err(Error::MixedDiscriminants(2, _))), "{r:?}");
    }

    #[test]
    fn circle_pairs_with_shared_involution() {
        let linf = PLine::cartesian_infinity();
        let c = unit_circle();
        let shifted = Conic::circle(Scalar::from_int(3), Scalar::zero(), Scalar::one()).unwrap();
        assert!(conic_conic_intersect_shared_infinity(&c, &shifted, &linf).unwrap().is_empty());

        let reflected = Conic::circle(Scalar::zero(), Scalar::one(), Scalar::one()).unwrap();
        let pts = conic_conic_intersect_shared_infinity(&c, &reflected, &linf).unwrap();
        let h = s("1/2*sqrt(3)");
        assert_eq!(pts, vec![cart(-h.clone(), q(1, 2)), cart(h, q(1, 2))]);

        let far = Conic::circle(Scalar::zero(), Scalar::from_int(4), Scalar::one()).unwrap();
        assert!(conic_conic_intersect_shared_infinity(&c, &far, &linf).unwrap().is_empty());

        let ellipse = Conic::from_form(
            Scalar::one(),
            Scalar::from_int(2),
            Scalar::from_int(-1),
            Scalar::zero(),
            Scalar::zero(),
            Scalar::zero(),
        )
        .unwrap();
        assert_eq!(conic_conic_intersect_shared_infinity(&c, &ellipse, &linf), Err(Error::NoSharedInvolution));
        let concentric = Conic::circle(Scalar::zero(), Scalar::zero(), Scalar::from_int(4)).unwrap();
        assert!(conic_conic_intersect_shared_infinity(&c, &concentric, &linf).unwrap().is_empty());
        assert_eq!(conic_conic_intersect_shared_infinity(&c, &c, &linf), Err(Error::CoincidentArguments));
    }

    #[test]
    fn interiority() {
        let linf = PLine::cartesian_infinity();
        let c = unit_circle();
        assert!(interior(&PPoint::from_ints(0, 0, 1), &c, &linf).unwrap());
        assert!(!interior(&PPoint::from_ints(2, 0, 1), &c, &linf).unwrap());
        assert!(!interior(&PPoint::from_ints(1, 0, 1), &c, &linf).unwrap());
        assert_eq!(interior(&PPoint::from_ints(1, 0, 0), &c, &linf), Err(Error::PointAtInfinity));
    }

    #[test]
    fn affine_maps_from_triangles() {
        let linf = PLine::barycentric_infinity();
        let abc = [PPoint::from_ints(1, 0, 0), PPoint::from_ints(0, 1, 0), PPoint::from_ints(0, 0, 1)];
        let id = affine_map_from_triangles([&abc[0], &abc[1], &abc[2]], [&abc[0], &abc[1], &abc[2]], &linf).unwrap();
        assert!(id.is_identity());

        let medial = [PPoint::from_ints(0, 1, 1), PPoint::from_ints(1, 0, 1), PPoint::from_ints(1, 1, 0)];
        let k = affine_map_from_triangles([&abc[0], &abc[1], &abc[2]], [&medial[0], &medial[1], &medial[2]], &linf)
            .unwrap();
        assert_eq!(k.apply(&PPoint::from_ints(1, 2, 3)), PPoint::from_ints(5, 4, 3));

        let traces = [PPoint::from_ints(0, 2, 3), PPoint::from_ints(1, 0, 3), PPoint::from_ints(1, 2, 0)];
        let tp = affine_map_from_triangles([&abc[0], &abc[1], &abc[2]], [&traces[0], &traces[1], &traces[2]], &linf)
            .unwrap();
        let expected =
            Mat3::from_rows([[q(0, 1), q(1, 4), q(1, 3)], [q(2, 5), q(0, 1), q(2, 3)], [q(3, 5), q(3, 4), q(0, 1)]]);
        assert_eq!(tp, AffMap::new(expected, &linf).unwrap());

        let collinear = [PPoint::from_ints(1, 0, 0), PPoint::from_ints(0, 1, 0), PPoint::from_ints(1, 1, 0)];
        assert_eq!(
            affine_map_from_triangles(
                [&abc[0], &abc[1], &abc[2]],
                [&collinear[0], &collinear[1], &collinear[2]],
                &linf
            ),
            Err(Error::CollinearTriple)
        );
        let at_infinity = [PPoint::from_ints(1, 0, 0), PPoint::from_ints(0, 1, 0), PPoint::from_ints(0, 1, -1)];
        assert_eq!(
            affine_map_from_triangles(
                [&abc[0], &abc[1], &abc[2]],
                [&at_infinity[0], &at_infinity[1], &at_infinity[2]],
                &linf
            ),
            Err(Error::PointAtInfinity)
        );
    }

    #[test]
    fn dilatation_classes() {
        let linf = PLine::barycentric_infinity();
        assert_eq!(AffMap::identity(&linf).classify(), DilatationClass::Identity);

        let k_inv = AffMap::new(Mat3::from_ints([[-1, 1, 1], [1, -1, 1], [1, 1, -1]]), &linf).unwrap();
        assert_eq!(
            k_inv.compose(&k_inv).classify(),
            DilatationClass::Homothety { ratio: Scalar::from_int(4), center: PPoint::from_ints(1, 1, 1) }
        );
        let k = k_inv.inverse();
        assert_eq!(k.classify(), DilatationClass::Homothety { ratio: q(-1, 2), center: PPoint::from_ints(1, 1, 1) });

        let cart_inf = PLine::cartesian_infinity();
        let reflection = AffMap::new(Mat3::from_ints([[1, 0, 0], [0, -1, 0], [0, 0, 1]]), &cart_inf).unwrap();
        assert_eq!(reflection.classify(), DilatationClass::NotDilatation);

        let shear = AffMap::new(Mat3::from_ints([[1, 1, 0], [0, 1, 0], [0, 0, 1]]), &cart_inf).unwrap();
        assert_eq!(shear.classify(), DilatationClass::NotDilatation);

        let translate = AffMap::new(Mat3::from_ints([[1, 0, 3], [0, 1, -1], [0, 0, 1]]), &cart_inf).unwrap();
        assert_eq!(translate.classify(), DilatationClass::Translation(PPoint::from_ints(3, -1, 0)));

        let c = PPoint::cartesian(Scalar::one(), q(1, 2));
        let half_turn = AffMap::point_reflection(&c, &cart_inf).unwrap();
        assert_eq!(half_turn.classify(), DilatationClass::HalfTurn(c.clone()));
        assert!(half_turn.compose(&half_turn).is_identity());
    }

    #[test]
    fn affine_helpers() {
        let bary = PLine::barycentric_infinity();
        let a = PPoint::from_ints(1, 0, 0);
        let b = PPoint::from_ints(0, 1, 0);
        assert_eq!(midpoint(&a, &b, &bary).unwrap(), PPoint::from_ints(1, 1, 0));

        let cart_inf = PLine::cartesian_infinity();
        let p = PPoint::cartesian(Scalar::zero(), Scalar::one());
        let c = PPoint::cartesian(Scalar::one(), q(1, 2));
        assert_eq!(reflect_in_point(&p, &c, &cart_inf).unwrap(), PPoint::from_ints(2, 0, 1));

        let z = PPoint::cartesian(Scalar::zero(), Scalar::zero());
        let g = PPoint::cartesian(q(2, 3), q(1, 3));
        let v = PPoint::cartesian(q(6, 5), q(3, 5));
        assert_eq!(signed_ratio(&z, &g, &v, &cart_inf).unwrap(), q(5, 4));
        assert_eq!(signed_ratio(&z, &g, &p, &cart_inf), Err(Error::NotCollinear));
        assert_eq!(midpoint(&a, &PPoint::from_ints(0, 1, -1), &bary), Err(Error::PointAtInfinity));
    }
}
