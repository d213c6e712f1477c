//! Barycentric constructions relative to the reference triangle `ABC`.
//!
//! The reference triangle is the standard basis, the line at infinity is
//! `x + y + z = 0` and `G = (1, 1, 1)`. [`build_config`] derives the full
//! bundle of points, maps and conics attached to a point `P`;
//! [`halfturn_report`] evaluates the equivalent half-turn conditions on it.

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{self, Mat3};
use crate::projective::{
    self, affine_map_from_triangles, conic_through_five, conic_through_points, conic_with_center_through, join, meet,
    midpoint, parallel_through, reflect_in_point, signed_ratio, AffMap, Conic, DilatationClass, PLine, PPoint,
};

pub fn linf() -> PLine {
    PLine::barycentric_infinity()
}

pub fn vertex_a() -> PPoint {
    PPoint::from_ints(1, 0, 0)
}

pub fn vertex_b() -> PPoint {
    PPoint::from_ints(0, 1, 0)
}

pub fn vertex_c() -> PPoint {
    PPoint::from_ints(0, 0, 1)
}

pub fn vertices() -> [PPoint; 3] {
    [vertex_a(), vertex_b(), vertex_c()]
}

pub fn centroid() -> PPoint {
    PPoint::from_ints(1, 1, 1)
}

/// The complement map `K`: homothety about `G` with ratio -1/2.
pub fn complement_map() -> AffMap {
    AffMap::new(Mat3::from_ints([[0, 1, 1], [1, 0, 1], [1, 1, 0]]), &linf()).expect("invertible")
}

/// `K^-1`: homothety about `G` with ratio -2.
pub fn anticomplement_map() -> AffMap {
    AffMap::new(Mat3::from_ints([[-1, 1, 1], [1, -1, 1], [1, 1, -1]]), &linf()).expect("invertible")
}

/// `K(x:y:z) = (y+z : z+x : x+y)`.
pub fn complement(p: &PPoint) -> PPoint {
    let [x, y, z] = p.coords();
    PPoint::new([y + z, z + x, x + y]).expect("K is invertible")
}

/// `K^-1(x:y:z) = (y+z-x : z+x-y : x+y-z)`.
pub fn anticomplement(p: &PPoint) -> PPoint {
    let [x, y, z] = p.coords();
    PPoint::new([y + z - x, z + x - y, x + y - z]).expect("K^-1 is invertible")
}

/// The isotomic conjugate `(yz : zx : xy)`.
pub fn isotomic(p: &PPoint) -> Result<PPoint> {
    let [x, y, z] = p.coords();
    if x.is_zero() || y.is_zero() || z.is_zero() {
        return Err(Error::PointOnSideline);
    }
    PPoint::new([y * z, z * x, x * y])
}

/// The traces `D = (0:y:z)`, `E = (x:0:z)`, `F = (x:y:0)`.
pub fn cevian_traces(p: &PPoint) -> Result<[PPoint; 3]> {
    let [x, y, z] = p.coords();
    if x.is_zero() || y.is_zero() || z.is_zero() {
        return Err(Error::PointOnSideline);
    }
    let zero = Scalar::zero();
    Ok([
        PPoint::new([zero.clone(), y.clone(), z.clone()])?,
        PPoint::new([x.clone(), zero.clone(), z.clone()])?,
        PPoint::new([x.clone(), y.clone(), zero])?,
    ])
}

/// The affine map taking `ABC` to the cevian triangle of `p`.
pub fn cevian_map(p: &PPoint) -> Result<AffMap> {
    let [d, e, f] = cevian_traces(p)?;
    let [a, b, c] = vertices();
    affine_map_from_triangles([&a, &b, &c], [&d, &e, &f], &linf())
}

/// `S = (x(y+z)^2, y(x+z)^2, z(x+y)^2)`.
pub fn s_formula(p: &PPoint) -> Result<PPoint> {
    let [x, y, z] = p.coords();
    PPoint::new([x * (y + z).square(), y * (x + z).square(), z * (x + y).square()])
}

/// `Z = (x(y-z)^2, y(z-x)^2, z(x-y)^2)`.
pub fn z_formula(p: &PPoint) -> Result<PPoint> {
    let [x, y, z] = p.coords();
    PPoint::new([x * (y - z).square(), y * (z - x).square(), z * (x - y).square()])
}

/// Whether `p` is strictly inside triangle `K^-1(ABC)`, i.e. `K(p)` is
/// strictly inside `ABC`.
pub fn inside_anticomplementary(p: &PPoint) -> bool {
    let [x, y, z] = p.coords();
    let w = x + y + z;
    [y + z, z + x, x + y].iter().all(|c| (c * &w).sign() > 0)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Flags {
    pub on_median: bool,
    pub on_steiner: bool,
    pub h_at_vertex: bool,
}

impl Flags {
    pub fn violations(&self) -> Vec<&'static str> {
        let mut v = Vec::new();
        if self.on_median {
            v.push("on-median");
        }
        if self.on_steiner {
            v.push("on-steiner-circumellipse");
        }
        if self.h_at_vertex {
            v.push("h-at-vertex");
        }
        v
    }
}

/// Everything derived from `(ABC, P)`.
#[derive(Clone, Debug)]
pub struct TriangleConfig {
    pub p: PPoint,
    /// `P' = iota(P)`
    pub p_prime: PPoint,
    /// `Q = K(P')`
    pub q: PPoint,
    /// `Q' = K(P)`
    pub q_prime: PPoint,
    pub g: PPoint,
    pub traces: [PPoint; 3],
    pub medial: [PPoint; 3],
    pub traces_q: [PPoint; 3],
    pub traces_p_prime: [PPoint; 3],
    pub t_p: AffMap,
    pub t_p_prime: AffMap,
    /// `M = T_P . K^-1 . T_P'`
    pub m: AffMap,
    /// `lambda = T_P' . T_P^-1`
    pub lambda: AffMap,
    pub eta: Option<AffMap>,
    pub o: PPoint,
    pub o_prime: PPoint,
    pub h: PPoint,
    pub h_prime: PPoint,
    pub n: PPoint,
    pub n_prime: PPoint,
    pub v: Option<PPoint>,
    pub s: Option<PPoint>,
    pub z: Option<PPoint>,
    pub z_tilde: Option<PPoint>,
    pub inconic: Conic,
    pub circumconic_o: Conic,
    pub circumconic_o_prime: Conic,
    pub nine_point_p: Conic,
    pub nine_point_p_prime: Conic,
    pub cevian_conic: Option<Conic>,
    pub m_class: DilatationClass,
    pub flags: Flags,
}

/// The conic tangent to `BC, CA, AB` at the traces of `p`: the polar of each
/// trace must be its side, two linear conditions per trace.
pub fn inconic(p: &PPoint) -> Result<Conic> {
    let traces = cevian_traces(p)?;
    let half = Scalar::from_ratio(1, 2);
    let zero = Scalar::zero();
    let mut rows = Vec::new();
    for (side, t) in traces.iter().enumerate() {
        let [x, y, z] = t.coords();
        // (M t)_i as linear forms in [xx, yy, zz, xy, yz, zx]
        let mt = [
            vec![x.clone(), zero.clone(), zero.clone(), y * &half, zero.clone(), z * &half],
            vec![zero.clone(), y.clone(), zero.clone(), x * &half, z * &half, zero.clone()],
            vec![zero.clone(), zero.clone(), z.clone(), zero.clone(), y * &half, x * &half],
        ];
        // polar proportional to the side line e_side: the other two entries vanish
        for (i, row) in mt.into_iter().enumerate() {
            if i != side {
                rows.push(row);
            }
        }
    }
    let ns = linalg::null_space(&rows, 6);
    if ns.len() != 1 {
        return Err(Error::Internal(format!("inconic system has nullity {}", ns.len())));
    }
    let v = &ns[0];
    Conic::from_form(v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone(), v[4].clone(), v[5].clone())
}

/// Nine-point conic of the quadrangle `ABCp`: through the side midpoints,
/// the midpoints of `Ap, Bp, Cp` and the traces of `p`.
pub fn nine_point_conic(p: &PPoint) -> Result<Conic> {
    let l = linf();
    let medial = vertices().map(|v| complement(&v));
    let mut pts: Vec<PPoint> = medial.to_vec();
    pts.extend(cevian_traces(p)?);
    for v in vertices() {
        if let Ok(m) = midpoint(&v, p, &l) {
            pts.push(m);
        }
    }
    pts.dedup();
    conic_through_points(&pts)
}

/// The circumconic of `ABC` with center `o`, when it is unique.
pub fn circumconic_with_center(o: &PPoint) -> Result<Conic> {
    let [a, b, c] = vertices();
    conic_with_center_through(o, [&a, &b, &c], &linf())
}

/// Harmonic homology with the given axis and center:
/// `x -> x - 2 (axis . x) / (axis . center) center`.
pub fn harmonic_homology(axis: &PLine, center: &PPoint) -> Result<AffMap> {
    let a = axis.coords();
    let c = center.coords();
    let ac = linalg::dot(a, c);
    if ac.is_zero() {
        return Err(Error::DegenerateAxis);
    }
    let k = Scalar::from_int(2) / &ac;
    let rows = std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let delta = if i == j { Scalar::one() } else { Scalar::zero() };
            delta - &k * &c[i] * &a[j]
        })
    });
    AffMap::new(Mat3::from_rows(rows), &linf())
}

pub fn build_config(p: &PPoint) -> Result<TriangleConfig> {
    let l = linf();
    let [x, y, z] = p.coords();
    if (x + y + z).is_zero() {
        return Err(Error::PointAtInfinity);
    }
    if x.is_zero() || y.is_zero() || z.is_zero() {
        return Err(Error::PointOnSideline);
    }
    if ((y + z) * (z + x) * (x + y)).is_zero() {
        return Err(Error::PointOnAnticomplementarySide);
    }
    let flags_median = ((y - z) * (z - x) * (x - y)).is_zero();
    let flags_steiner = (x * y + y * z + z * x).is_zero();

    let g = centroid();
    let k = complement_map();
    let k_inv = anticomplement_map();
    let p_prime = isotomic(p)?;
    let q = complement(&p_prime);
    let q_prime = complement(p);
    let traces = cevian_traces(p)?;
    let traces_p_prime = cevian_traces(&p_prime)?;
    let traces_q = cevian_traces(&q)?;
    let medial = vertices().map(|v| complement(&v));

    let t_p = cevian_map(p)?;
    let t_p_prime = cevian_map(&p_prime)?;
    let m = t_p.compose(&k_inv).compose(&t_p_prime);
    let lambda = t_p_prime.compose(&t_p.inverse());

    let o = t_p_prime.inverse().apply(&k.apply(&q));
    let o_prime = t_p.inverse().apply(&k.apply(&q_prime));
    let h = anticomplement(&o);
    let h_prime = anticomplement(&o_prime);
    let n = complement(&o);
    let n_prime = complement(&o_prime);

    let v = join(p, &q).and_then(|pq| join(&p_prime, &q_prime).and_then(|pq2| meet(&pq, &pq2))).ok();
    let s = v.as_ref().and_then(|v| join(&o, &q).and_then(|oq| join(&g, v).and_then(|gv| meet(&oq, &gv))).ok());

    let inconic = inconic(p)?;
    let nine_point_p = nine_point_conic(p)?;
    let nine_point_p_prime = nine_point_conic(&p_prime)?;
    let circumconic_o = nine_point_p_prime.transformed(&t_p_prime.inverse())?;
    let circumconic_o_prime = nine_point_p.transformed(&t_p.inverse())?;
    for (conic, center) in [(&circumconic_o, &o), (&circumconic_o_prime, &o_prime)] {
        if let Ok(direct) = circumconic_with_center(center) {
            if &direct != conic {
                return Err(Error::Internal(
                    "circumconic from the nine-point conic differs from the circumconic with its center".into(),
                ));
            }
        }
    }

    let cevian_conic = conic_through_five([&vertex_a(), &vertex_b(), &vertex_c(), p, &q]).ok();
    let z = cevian_conic.as_ref().and_then(|c| c.center(&l).ok());
    let z_tilde = z.as_ref().and_then(|z| reflect_in_point(&anticomplement(z), &o, &l).ok());

    let eta = if flags_median {
        None
    } else {
        z.as_ref().and_then(|z| {
            let axis = join(&g, z).ok()?;
            let center = meet(&join(p, &p_prime).ok()?, &l).ok()?;
            harmonic_homology(&axis, &center).ok()
        })
    };

    let m_class = m.classify();
    // the hypothesis is symmetric in P and P'
    let h_at_vertex = vertices().iter().any(|v| *v == h || *v == h_prime);

    Ok(TriangleConfig {
        p: p.clone(),
        p_prime,
        q,
        q_prime,
        g,
        traces,
        medial,
        traces_q,
        traces_p_prime,
        t_p,
        t_p_prime,
        m,
        lambda,
        eta,
        o,
        o_prime,
        h,
        h_prime,
        n,
        n_prime,
        v,
        s,
        z,
        z_tilde,
        inconic,
        circumconic_o,
        circumconic_o_prime,
        nine_point_p,
        nine_point_p_prime,
        cevian_conic,
        m_class,
        flags: Flags { on_median: flags_median, on_steiner: flags_steiner, h_at_vertex },
    })
}

/// Classification of `M`, after checking that `M = T_P' . K^-1 . T_P` too.
pub fn classify_m(cfg: &TriangleConfig) -> Result<DilatationClass> {
    let swapped = cfg.t_p_prime.compose(&anticomplement_map()).compose(&cfg.t_p);
    if swapped != cfg.m {
        return Err(Error::Internal("M is not symmetric in P and P'".into()));
    }
    Ok(cfg.m_class.clone())
}

/// Results of the seven equivalent half-turn conditions and their corollaries.
#[derive(Clone, Debug)]
pub struct HalfTurnReport {
    pub classification: DilatationClass,
    /// In order: `M` is a half-turn; `P` on the circumconic about `O'`;
    /// `P'` on the circumconic about `O`; `T_P(P) = O'`; `T_P'(P') = O`;
    /// `O'` on the nine-point conic of `P`; `O` on the nine-point conic of `P'`.
    pub conditions: [bool; 7],
    /// `K^-1(S) = Z`
    pub anticomplement_s_is_z: bool,
    /// `QZP'O` is a parallelogram
    pub parallelogram: bool,
    /// Only evaluated when `M` is a half-turn.
    pub consequences: Option<HalfTurnConsequences>,
    /// `GS/SV` and `ZG/GV` on the line `GV`, when defined.
    pub ratio_gs_sv: Option<Scalar>,
    pub ratio_zg_gv: Option<Scalar>,
}

#[derive(Clone, Debug)]
pub struct HalfTurnConsequences {
    /// `O'P` tangent to the cevian conic at `P`
    pub tangent_at_p: bool,
    /// `OP'` tangent to the cevian conic at `P'`
    pub tangent_at_p_prime: bool,
    /// the polar of `O` is `P'Q`
    pub polar_of_o: bool,
    /// `V` is the midpoint of `OO'`
    pub v_is_midpoint: bool,
    /// `OO' = K^-1(PP')`
    pub oo_prime_is_anticomplement_of_pp_prime: bool,
    /// `GS/SV = 5/3`
    pub ratio_gs_sv: bool,
    /// `ZG/GV = 5/4`
    pub ratio_zg_gv: bool,
}

impl HalfTurnConsequences {
    pub fn all(&self) -> bool {
        self.tangent_at_p
            && self.tangent_at_p_prime
            && self.polar_of_o
            && self.v_is_midpoint
            && self.oo_prime_is_anticomplement_of_pp_prime
            && self.ratio_gs_sv
            && self.ratio_zg_gv
    }
}

impl HalfTurnReport {
    pub fn all_conditions_equal(&self) -> bool {
        self.conditions.iter().all(|&c| c == self.conditions[0])
    }

    pub fn is_half_turn(&self) -> bool {
        self.conditions[0]
    }

    /// Keyed boolean results in a fixed order.
    pub fn checks(&self) -> Vec<Check> {
        const KEYS: [&str; 7] = [
            "halfturn.1:M-is-half-turn",
            "halfturn.2:P-on-circumconic-O'",
            "halfturn.3:P'-on-circumconic-O",
            "halfturn.4:T_P(P)=O'",
            "halfturn.5:T_P'(P')=O",
            "halfturn.6:O'-on-nine-point-conic-P",
            "halfturn.7:O-on-nine-point-conic-P'",
        ];
        let mut out: Vec<Check> = KEYS.iter().zip(self.conditions).map(|(k, h)| Check::new(k, h)).collect();
        out.push(Check::new("center.K^-1(S)=Z", self.anticomplement_s_is_z));
        out.push(Check::new("center.QZP'O-parallelogram", self.parallelogram));
        if let Some(c) = &self.consequences {
            out.push(Check::new("tangents.O'P-tangent-at-P", c.tangent_at_p));
            out.push(Check::new("tangents.OP'-tangent-at-P'", c.tangent_at_p_prime));
            out.push(Check::new("tangents.polar-of-O-is-P'Q", c.polar_of_o));
            out.push(Check::new("tangents.V-midpoint-of-OO'", c.v_is_midpoint));
            out.push(Check::new("tangents.OO'=K^-1(PP')", c.oo_prime_is_anticomplement_of_pp_prime));
            out.push(Check::new("tangents.GS/SV=5/3", c.ratio_gs_sv));
            out.push(Check::new("tangents.ZG/GV=5/4", c.ratio_zg_gv));
        }
        out
    }
}

/// A named boolean result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub key: String,
    pub holds: bool,
}

impl Check {
    pub fn new(key: &str, holds: bool) -> Self {
        Check { key: key.to_string(), holds }
    }
}

fn require_hypotheses(cfg: &TriangleConfig) -> Result<()> {
    let violations = cfg.flags.violations();
    if violations.is_empty() {
        Ok(())
    } else {
        Err(Error::HypothesisViolated(violations.join(",")))
    }
}

fn missing(what: &str) -> Error {
    Error::Internal(format!("{what} is undefined although the hypotheses hold"))
}

pub fn halfturn_report(cfg: &TriangleConfig) -> Result<HalfTurnReport> {
    require_hypotheses(cfg)?;
    let l = linf();
    let classification = classify_m(cfg)?;
    let z = cfg.z.as_ref().ok_or_else(|| missing("Z"))?;
    let s = cfg.s.as_ref().ok_or_else(|| missing("S"))?;
    let v = cfg.v.as_ref().ok_or_else(|| missing("V"))?;
    let conditions = [
        classification.is_half_turn(),
        cfg.circumconic_o_prime.contains(&cfg.p),
        cfg.circumconic_o.contains(&cfg.p_prime),
        cfg.t_p.apply(&cfg.p) == cfg.o_prime,
        cfg.t_p_prime.apply(&cfg.p_prime) == cfg.o,
        cfg.nine_point_p.contains(&cfg.o_prime),
        cfg.nine_point_p_prime.contains(&cfg.o),
    ];
    let anticomplement_s_is_z = &anticomplement(s) == z;
    let parallelogram = midpoint(&cfg.q, &cfg.p_prime, &l)? == midpoint(z, &cfg.o, &l)?;
    let ratio_gs_sv = signed_ratio(&cfg.g, s, v, &l).ok();
    let ratio_zg_gv = signed_ratio(z, &cfg.g, v, &l).ok();

    let consequences = if conditions[0] {
        let cevian = cfg.cevian_conic.as_ref().ok_or_else(|| missing("cevian conic"))?;
        let k_inv = anticomplement_map();
        let pp = join(&cfg.p, &cfg.p_prime)?;
        Some(HalfTurnConsequences {
            tangent_at_p: cevian.tangent_at(&cfg.p)? == join(&cfg.o_prime, &cfg.p)?,
            tangent_at_p_prime: cevian.tangent_at(&cfg.p_prime)? == join(&cfg.o, &cfg.p_prime)?,
            polar_of_o: cevian.polar(&cfg.o)? == join(&cfg.p_prime, &cfg.q)?,
            v_is_midpoint: &midpoint(&cfg.o, &cfg.o_prime, &l)? == v,
            oo_prime_is_anticomplement_of_pp_prime: join(&cfg.o, &cfg.o_prime)? == k_inv.apply_line(&pp),
            ratio_gs_sv: ratio_gs_sv == Some(Scalar::from_ratio(5, 3)),
            ratio_zg_gv: ratio_zg_gv == Some(Scalar::from_ratio(5, 4)),
        })
    } else {
        None
    };

    Ok(HalfTurnReport {
        classification,
        conditions,
        anticomplement_s_is_z,
        parallelogram,
        consequences,
        ratio_gs_sv,
        ratio_zg_gv,
    })
}

#[derive(Clone, Debug)]
pub struct EtaReport {
    pub involution: bool,
    pub swaps_p: bool,
    pub swaps_o: bool,
    pub intertwines_cevian_maps: bool,
    pub commutes_with_complement: bool,
    pub commutes_with_m: bool,
}

impl EtaReport {
    pub fn all(&self) -> bool {
        self.involution
            && self.swaps_p
            && self.swaps_o
            && self.intertwines_cevian_maps
            && self.commutes_with_complement
            && self.commutes_with_m
    }
}

/// The affine reflection with axis `GZ` and center `PP' . l_inf`.
pub fn eta(cfg: &TriangleConfig) -> Result<AffMap> {
    cfg.eta.clone().ok_or(Error::DegenerateAxis)
}

pub fn eta_checks(cfg: &TriangleConfig) -> Result<EtaReport> {
    let e = eta(cfg)?;
    let k = complement_map();
    Ok(EtaReport {
        involution: e.compose(&e).is_identity(),
        swaps_p: e.apply(&cfg.p) == cfg.p_prime,
        swaps_o: e.apply(&cfg.o) == cfg.o_prime,
        intertwines_cevian_maps: e.compose(&cfg.t_p) == cfg.t_p_prime.compose(&e),
        commutes_with_complement: e.compose(&k) == k.compose(&e),
        commutes_with_m: e.compose(&cfg.m) == cfg.m.compose(&e),
    })
}

/// Structural identities that hold for every admissible `P`, keyed by name.
/// Checks whose ingredients are undefined for this `P` are omitted.
pub fn invariant_suite(cfg: &TriangleConfig) -> Result<Vec<Check>> {
    let l = linf();
    let mut out = Vec::new();
    let mut push = |key: &str, holds: bool| out.push(Check::new(key, holds));

    push("center.inconic=Q", cfg.inconic.center(&l).ok().as_ref() == Some(&cfg.q));
    push("center.circumconic=O", cfg.circumconic_o.center(&l).ok().as_ref() == Some(&cfg.o));
    push("center.nine-point-conic-P'=K(Q)", cfg.nine_point_p_prime.center(&l).ok() == Some(complement(&cfg.q)));
    push("center.nine-point-conic-P=K(Q')", cfg.nine_point_p.center(&l).ok() == Some(complement(&cfg.q_prime)));
    if let Some(z) = &cfg.z {
        push("formula.Z", *z == z_formula(&cfg.p)?);
    }
    if let Some(s) = &cfg.s {
        push("formula.S", *s == s_formula(&cfg.p)?);
        if let Some(c) = cfg.m_class.center() {
            push("map.center-of-M=S", c == s);
        }
    }
    push("map.M-is-dilatation", cfg.m_class != DilatationClass::NotDilatation);
    push("map.M-symmetric", classify_m(cfg).is_ok());
    push("map.M(circumconic)=inconic", cfg.circumconic_o.transformed(&cfg.m)? == cfg.inconic);
    push("map.M(O)=Q", cfg.m.apply(&cfg.o) == cfg.q);
    push("map.M(O')=Q'", cfg.m.apply(&cfg.o_prime) == cfg.q_prime);

    if !cfg.h.is_at_infinity(&l) {
        let mut parallel = true;
        for (vertex, trace) in vertices().iter().zip(&cfg.traces) {
            match join(&cfg.q, trace).and_then(|qd| parallel_through(vertex, &qd, &l)) {
                Ok(line) => parallel &= line.contains(&cfg.h),
                Err(_) => parallel = false,
            }
        }
        push("orthocenter.H-on-parallels-through-vertices", parallel);
    }

    if let Some(cevian) = &cfg.cevian_conic {
        for (name, pt) in
            [("Q", &cfg.q), ("Q'", &cfg.q_prime), ("H", &cfg.h), ("H'", &cfg.h_prime), ("P'", &cfg.p_prime)]
        {
            push(&format!("cevian-conic.contains-{name}"), cevian.contains(pt));
        }
        if let Some(zt) = &cfg.z_tilde {
            push("cevian-conic.contains-Z~", cevian.contains(zt));
            push("circumconic.contains-Z~", cfg.circumconic_o.contains(zt));
        }
    }

    let swapped = build_config(&cfg.p_prime)?;
    push(
        "swap.same-M-and-exchanged-points",
        swapped.m == cfg.m
            && swapped.o == cfg.o_prime
            && swapped.o_prime == cfg.o
            && swapped.q == cfg.q_prime
            && swapped.q_prime == cfg.q
            && swapped.h == cfg.h_prime
            && swapped.h_prime == cfg.h,
    );

    if let Ok(report) = eta_checks(cfg) {
        push("eta.involution", report.involution);
        push("eta.P<->P'", report.swaps_p);
        push("eta.O<->O'", report.swaps_o);
        push("eta.T_P-to-T_P'", report.intertwines_cevian_maps);
        push("eta.commutes-with-K", report.commutes_with_complement);
        push("eta.commutes-with-M", report.commutes_with_m);
    }
    Ok(out)
}

/// The ratio of `M` measured on the image of a segment, independent of
/// the eigenvalue computation in [`projective::classify_dilatation`].
pub fn segment_ratio(map: &AffMap, a: &PPoint, b: &PPoint) -> Result<Scalar> {
    let l = linf();
    let (na, nb) = (projective::normalized(a, &l)?, projective::normalized(b, &l)?);
    let (ma, mb) = (projective::normalized(&map.apply(a), &l)?, projective::normalized(&map.apply(b), &l)?);
    let before = linalg::sub(&nb, &na);
    let after = linalg::sub(&mb, &ma);
    if !linalg::proportional(&before, &after) {
        return Err(Error::Internal("segment image is not parallel".into()));
    }
    let i = (0..3).find(|&i| !before[i].is_zero()).ok_or(Error::CoincidentArguments)?;
    Ok(&after[i] / &before[i])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: i64, y: i64, z: i64) -> PPoint {
        PPoint::from_ints(x, y, z)
    }

    fn sqrt19_point() -> PPoint {
        PPoint::new(["-4+1*sqrt(19)".parse().unwrap(), Scalar::from_int(-1), Scalar::from_int(3)]).unwrap()
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complement(&pt(1, 0, 0)), pt(0, 1, 1));
        assert_eq!(complement(&pt(1, 1, 1)), pt(1, 1, 1));
        assert_eq!(complement(&pt(1, 2, 3)), pt(5, 4, 3));
        assert_eq!(anticomplement(&complement(&pt(1, 2, 3))), pt(1, 2, 3));
        assert_eq!(complement_map().apply(&pt(1, 2, 3)), pt(5, 4, 3));
        assert!(complement_map().compose(&anticomplement_map()).is_identity());
    }

    #[test]
    fn complement_is_homothety_about_centroid() {
        // oracle: absolute coordinates, G + (-1/2)(P - G)
        let p = [Scalar::from_ratio(1, 6), Scalar::from_ratio(2, 6), Scalar::from_ratio(3, 6)];
        let g = Scalar::from_ratio(1, 3);
        let image: [Scalar; 3] = std::array::from_fn(|i| &g - &(&(&p[i] - &g) * &Scalar::from_ratio(1, 2)));
        assert_eq!(PPoint::new(image).unwrap(), complement(&pt(1, 2, 3)));
    }

    #[test]
    fn isotomic_examples() {
        assert_eq!(isotomic(&pt(1, 1, 1)).unwrap(), pt(1, 1, 1));
        assert_eq!(isotomic(&pt(1, 2, 3)).unwrap(), pt(6, 3, 2));
        assert_eq!(isotomic(&isotomic(&pt(1, 2, 3)).unwrap()).unwrap(), pt(1, 2, 3));
        assert_eq!(isotomic(&pt(0, 2, 3)), Err(Error::PointOnSideline));
    }

    #[test]
    fn isotomic_reflects_traces_in_midpoints() {
        // oracle: reflect each trace of P in its side midpoint and intersect two cevians
        let l = linf();
        let p = pt(1, 2, 3);
        let traces = cevian_traces(&p).unwrap();
        let reflected: Vec<PPoint> = traces
            .iter()
            .zip(vertices().map(|v| complement(&v)))
            .map(|(t, m)| reflect_in_point(t, &m, &l).unwrap())
            .collect();
        let [a, b, _] = vertices();
        let conj = meet(&join(&a, &reflected[0]).unwrap(), &join(&b, &reflected[1]).unwrap()).unwrap();
        assert_eq!(conj, isotomic(&p).unwrap());
    }

    #[test]
    fn traces_examples() {
        assert_eq!(cevian_traces(&pt(1, 2, 3)).unwrap(), [pt(0, 2, 3), pt(1, 0, 3), pt(1, 2, 0)]);
        assert_eq!(cevian_traces(&centroid()).unwrap(), vertices().map(|v| complement(&v)));
        let q = complement(&isotomic(&pt(1, 2, 3)).unwrap());
        assert_eq!(q, pt(5, 8, 9));
        assert_eq!(cevian_traces(&q).unwrap(), [pt(0, 8, 9), pt(5, 0, 9), pt(5, 8, 0)]);
    }

    #[test]
    fn config_for_rational_point() {
        let cfg = build_config(&pt(1, 2, 3)).unwrap();
        assert_eq!(cfg.q, pt(5, 8, 9));
        assert_eq!(cfg.s, Some(pt(25, 32, 27)));
        assert_eq!(cfg.z, Some(pt(1, 8, 3)));
        assert_eq!(cfg.s, Some(s_formula(&cfg.p).unwrap()));
        assert_eq!(cfg.z, Some(z_formula(&cfg.p).unwrap()));
        assert!(!cfg.flags.on_median && !cfg.flags.on_steiner);
    }

    #[test]
    fn build_rejects_bad_points() {
        assert_eq!(build_config(&pt(1, 1, -2)).err(), Some(Error::PointAtInfinity));
        assert_eq!(build_config(&pt(0, 1, 2)).err(), Some(Error::PointOnSideline));
        assert_eq!(build_config(&pt(1, -1, 3)).err(), Some(Error::PointOnAnticomplementarySide));
    }

    #[test]
    fn centroid_builds_with_median_flag() {
        let cfg = build_config(&centroid()).unwrap();
        assert!(cfg.flags.on_median);
        assert!(matches!(halfturn_report(&cfg), Err(Error::HypothesisViolated(_))));
    }

    #[test]
    fn steiner_point_gives_ratio_four() {
        let cfg = build_config(&pt(2, 2, -1)).unwrap();
        assert!(cfg.flags.on_steiner);
        let class = classify_m(&cfg).unwrap();
        assert_eq!(class.ratio(), Some(Scalar::from_int(4)));
        assert!(matches!(class, DilatationClass::Homothety { .. }));
        match halfturn_report(&cfg) {
            Err(Error::HypothesisViolated(why)) => assert!(why.contains("on-steiner")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn sqrt19_point_is_half_turn_about_s() {
        let cfg = build_config(&sqrt19_point()).unwrap();
        let class = classify_m(&cfg).unwrap();
        assert_eq!(class, DilatationClass::HalfTurn(cfg.s.clone().unwrap()));
        assert_eq!(anticomplement(cfg.s.as_ref().unwrap()), cfg.z.clone().unwrap());
    }

    #[test]
    fn rational_point_is_generic_homothety() {
        let cfg = build_config(&pt(1, 2, 3)).unwrap();
        let class = classify_m(&cfg).unwrap();
        let k = class.ratio().unwrap();
        assert!(matches!(class, DilatationClass::Homothety { .. }));
        assert_ne!(k, Scalar::one());
        assert_ne!(k, Scalar::from_int(-1));
        let [a, b, _] = vertices();
        assert_eq!(segment_ratio(&cfg.m, &a, &b).unwrap(), k);
    }

    #[test]
    fn conjugate_orthocenter_at_vertex_is_rejected() {
        // O' = (0:1:1) is the midpoint of BC, so H' = A
        let cfg = build_config(&pt(1, 2, 3)).unwrap();
        assert_eq!(cfg.o_prime, pt(0, 1, 1));
        assert_eq!(cfg.h_prime, vertex_a());
        assert!(cfg.flags.h_at_vertex);
        assert!(cfg.nine_point_p.contains(&cfg.o_prime));
        assert_eq!(halfturn_report(&cfg).err(), Some(Error::HypothesisViolated("h-at-vertex".into())));
    }

    #[test]
    fn report_for_rational_point_is_all_false() {
        let cfg = build_config(&pt(1, 2, 4)).unwrap();
        assert_eq!(cfg.flags, Flags::default());
        let r = halfturn_report(&cfg).unwrap();
        assert_eq!(r.conditions, [false; 7]);
        assert!(!r.anticomplement_s_is_z);
        assert!(!r.parallelogram);
        assert!(r.consequences.is_none());
    }

    #[test]
    fn report_for_sqrt19_point_is_all_true() {
        let cfg = build_config(&sqrt19_point()).unwrap();
        let r = halfturn_report(&cfg).unwrap();
        assert_eq!(r.conditions, [true; 7]);
        assert!(r.anticomplement_s_is_z && r.parallelogram);
        assert!(r.consequences.as_ref().unwrap().all());
        assert_eq!(r.ratio_gs_sv, Some(Scalar::from_ratio(5, 3)));
        assert_eq!(r.ratio_zg_gv, Some(Scalar::from_ratio(5, 4)));
    }

    #[test]
    fn eta_examples() {
        let cfg = build_config(&pt(1, 2, 3)).unwrap();
        let e = eta(&cfg).unwrap();
        assert!(e.compose(&e).is_identity());
        assert_eq!(e.apply(&pt(1, 2, 3)), pt(6, 3, 2));
        assert_eq!(e.apply(&cfg.o), cfg.o_prime);
        assert!(eta_checks(&cfg).unwrap().all());
        let on_median = build_config(&pt(1, 1, 3)).unwrap();
        assert_eq!(eta(&on_median).err(), Some(Error::DegenerateAxis));
    }

    #[test]
    fn invariants_for_rational_point() {
        let cfg = build_config(&pt(1, 2, 3)).unwrap();
        for c in invariant_suite(&cfg).unwrap() {
            assert!(c.holds, "{}", c.key);
        }
    }
}
