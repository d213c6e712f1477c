use std::fs;
use std::io::Write;
use std::path::Path;

use cevian_core::construct::{self, Orientation};
use cevian_core::locus::{self, named, CurvePoint, Order};
use cevian_core::projective::signed_ratio;
use cevian_core::triangle::{build_config, eta_checks, halfturn_report, invariant_suite};
use cevian_core::{Check, Error, LocusSample, PPoint, Scalar};
use serde_json::{json, Map, Value};

use crate::figures;
use crate::report::{self, approx_point, checks, classification, lit, point, rational, Failure, Outcome};

fn parse_point(literal: &str) -> Result<PPoint, Failure> {
    Ok(literal.parse::<PPoint>()?)
}

fn curve_point(literal: &str) -> Result<CurvePoint, Failure> {
    Ok(CurvePoint::new(parse_point(literal)?)?)
}

fn object(entries: Vec<(&str, Value)>) -> Map<String, Value> {
    entries.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

pub fn verify(literal: &str, sqrt: Option<u64>, approx: bool) -> Result<Outcome, Failure> {
    let p = parse_point(literal)?;
    if let Some(d) = sqrt {
        if !p.is_rational() && p.disc() != d {
            return Err(Error::MixedDiscriminants(p.disc(), d).into());
        }
    }
    let cfg = build_config(&p)?;
    let half_turn = match halfturn_report(&cfg) {
        Ok(r) => r,
        Err(e @ Error::HypothesisViolated(_)) => {
            let detail = json!({
                "violations": cfg.flags.violations(),
                "classification": classification(&cfg.m_class),
            });
            return Err(Failure::from(e).with_detail(detail));
        }
        Err(e) => return Err(e.into()),
    };
    let invariants = invariant_suite(&cfg)?;
    let e = eta_checks(&cfg)?;
    let eta = [
        Check::new("eta.involution", e.involution),
        Check::new("eta.swaps-P-P'", e.swaps_p),
        Check::new("eta.swaps-O-O'", e.swaps_o),
        Check::new("eta.intertwines-T_P-T_P'", e.intertwines_cevian_maps),
        Check::new("eta.commutes-with-K", e.commutes_with_complement),
        Check::new("eta.commutes-with-M", e.commutes_with_m),
    ];

    let named: Vec<(&str, Option<&PPoint>)> = vec![
        ("P", Some(&cfg.p)),
        ("P'", Some(&cfg.p_prime)),
        ("Q", Some(&cfg.q)),
        ("Q'", Some(&cfg.q_prime)),
        ("G", Some(&cfg.g)),
        ("O", Some(&cfg.o)),
        ("O'", Some(&cfg.o_prime)),
        ("H", Some(&cfg.h)),
        ("H'", Some(&cfg.h_prime)),
        ("N", Some(&cfg.n)),
        ("N'", Some(&cfg.n_prime)),
        ("S", cfg.s.as_ref()),
        ("Z", cfg.z.as_ref()),
        ("V", cfg.v.as_ref()),
        ("Z~", cfg.z_tilde.as_ref()),
    ];
    let points: Map<String, Value> = named.iter().map(|(k, p)| (k.to_string(), report::opt_point(*p))).collect();
    let ratio = |r: &Option<Scalar>| r.as_ref().map_or(Value::Null, lit);

    let consistent = half_turn.all_conditions_equal()
        && invariants.iter().all(|c| c.holds)
        && e.all()
        && half_turn.consequences.as_ref().is_none_or(|c| c.all());

    let mut out = object(vec![
        ("input", json!({ "point": literal, "sqrt": sqrt })),
        ("field", json!(cfg.p.disc())),
        ("half_turn", json!(half_turn.is_half_turn())),
        ("classification", classification(&half_turn.classification)),
        ("points", Value::Object(points)),
        ("ratios", json!({ "GS/SV": ratio(&half_turn.ratio_gs_sv), "ZG/GV": ratio(&half_turn.ratio_zg_gv) })),
        ("conditions", checks(&half_turn.checks())),
        ("invariants", checks(&invariants)),
        ("eta", checks(&eta)),
        ("consistent", json!(consistent)),
    ]);
    if approx {
        let approx: Map<String, Value> =
            named.iter().filter_map(|(k, p)| p.map(|p| (k.to_string(), approx_point(p)))).collect();
        out.insert("approx".into(), Value::Object(approx));
    }
    Ok(Outcome { report: out, consistent })
}

pub fn member(literal: &str) -> Result<Outcome, Failure> {
    let p = parse_point(literal)?;
    let (on, residual) = locus::member(&p);
    let report = object(vec![("point", point(&p)), ("on_curve", json!(on)), ("residual", lit(&residual))]);
    Ok(Outcome { report, consistent: true })
}

pub fn add(p: &str, q: &str) -> Result<Outcome, Failure> {
    let (p, q) = (curve_point(p)?, curve_point(q)?);
    let sum = locus::add(&p, &q)?;
    let consistent = locus::member(sum.point()).0;
    let report = object(vec![("p", point(p.point())), ("q", point(q.point())), ("sum", point(sum.point()))]);
    Ok(Outcome { report, consistent })
}

fn order_value(order: &Order) -> Value {
    match order {
        Order::Finite(n) => json!(n),
        Order::NotTorsionUpTo(_) => Value::Null,
    }
}

pub fn order(literal: &str, bound: u32) -> Result<Outcome, Failure> {
    let p = curve_point(literal)?;
    let order = locus::order_of(&p, bound)?;
    let report = object(vec![
        ("point", point(p.point())),
        ("bound", json!(bound)),
        ("order", order_value(&order)),
        ("summary", json!(order.to_string())),
    ]);
    Ok(Outcome { report, consistent: true })
}

pub fn torsion() -> Result<Outcome, Failure> {
    let table = [
        ("A_inf", named::a_inf(), 1),
        ("A", named::a(), 2),
        ("B_inf", named::b_inf(), 3),
        ("C_inf", named::c_inf(), 3),
        ("B", named::b(), 6),
        ("C", named::c(), 6),
    ];
    let mut rows = Vec::new();
    let mut consistent = true;
    for (name, p, expected) in &table {
        let order = locus::order_of(p, locus::DEFAULT_ORDER_BOUND)?;
        consistent &= order == Order::Finite(*expected);
        rows.push(json!({ "name": name, "point": point(p.point()), "order": order_value(&order) }));
    }
    let report = object(vec![
        ("base_point", json!("A_inf")),
        ("table", Value::Array(rows)),
        ("group_order", json!(table.len())),
    ]);
    Ok(Outcome { report, consistent })
}

pub fn j() -> Result<Outcome, Failure> {
    let inv = locus::invariants();
    let report = object(vec![
        ("model", json!("v^2 = u^3 + u^2 + 4*u + 4")),
        ("b2", rational(&inv.b2)),
        ("b4", rational(&inv.b4)),
        ("b6", rational(&inv.b6)),
        ("b8", rational(&inv.b8)),
        ("c4", rational(&inv.c4)),
        ("discriminant", rational(&inv.discriminant)),
        ("j", rational(&inv.j)),
    ]);
    Ok(Outcome { report, consistent: true })
}

fn parse_pair(literal: &str) -> Result<(Scalar, Scalar), Failure> {
    let bad = || Failure::from(Error::ParsePoint(literal.to_string()));
    let trimmed = literal.trim();
    let body = trimmed.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(trimmed);
    let (u, v) = body.split_once(',').ok_or_else(bad)?;
    Ok((u.parse().map_err(|_| bad())?, v.parse().map_err(|_| bad())?))
}

pub fn map(uv: Option<&str>, literal: Option<&str>) -> Result<Outcome, Failure> {
    let (p, (u, v), roundtrip) = match (uv, literal) {
        (Some(pair), _) => {
            let (u, v) = parse_pair(pair)?;
            if !locus::uv_residual(&u, &v).is_zero() {
                return Err(Error::NotOnCurve.into());
            }
            let p = locus::uv_to_curve(&u, &v)?;
            let back = locus::curve_to_uv(&p)?;
            let roundtrip = back == (u.clone(), v.clone());
            (p, (u, v), roundtrip)
        }
        (None, Some(literal)) => {
            let p = curve_point(literal)?;
            let (u, v) = locus::curve_to_uv(&p)?;
            let roundtrip = locus::uv_to_curve(&u, &v)? == p;
            (p, (u, v), roundtrip)
        }
        (None, None) => return Err(Failure::input("usage", "one of --uv or --point is required")),
    };
    let (x, y) = locus::to_affine_xy(p.point())?;
    let (qx, qy) = locus::to_quartic(&x, &y)?;
    let on_curve = locus::member(p.point()).0
        && locus::curve_affine_residual(&x, &y).is_zero()
        && locus::quartic_residual(&qx, &qy).is_zero()
        && locus::uv_residual(&u, &v).is_zero();
    let report = object(vec![
        ("point", point(p.point())),
        ("affine", json!({ "x": lit(&x), "y": lit(&y) })),
        ("quartic", json!({ "X": lit(&qx), "Y": lit(&qy) })),
        ("uv", json!({ "u": lit(&u), "v": lit(&v) })),
        ("on_curve", json!(on_curve)),
        ("roundtrip", json!(roundtrip)),
    ]);
    Ok(Outcome { report, consistent: on_curve && roundtrip })
}

fn sample_record(s: &LocusSample) -> (Value, bool) {
    let tri = &s.triangle;
    let mut members = vec![s.p.point(), s.p_prime.point()];
    let mut record = object(vec![
        ("t", rational(&s.t)),
        ("d", json!(tri.d)),
        ("triangle", json!({ "A1": point(&tri.a1), "B1": point(&tri.b1), "C1": point(&tri.c1) })),
        ("P", point(s.p.point())),
        ("P'", point(s.p_prime.point())),
    ]);
    if let Some((sp, sp_prime)) = &s.swapped {
        record.insert("swapped".into(), json!({ "P": point(sp.point()), "P'": point(sp_prime.point()) }));
        members.extend([sp.point(), sp_prime.point()]);
    }
    let all = members.iter().all(|p| locus::member(p).0);
    record.insert("member".into(), json!(all));
    (Value::Object(record), all)
}

pub fn trace(n: usize, output: Option<&Path>, svg: Option<&Path>, primary: bool) -> Result<Outcome, Failure> {
    let orientation = if primary { Orientation::Primary } else { Orientation::Both };
    let scene = construct::make_scene()?;
    let samples = construct::sample_locus(&scene, n, orientation)?;
    let mut lines = String::new();
    let mut consistent = true;
    for s in &samples {
        let (record, member) = sample_record(s);
        consistent &= member;
        lines.push_str(&serde_json::to_string(&record).expect("json values serialize"));
        lines.push('\n');
    }
    if let Some(path) = svg {
        fs::write(path, figures::locus(&samples))?;
    }
    let Some(path) = output else {
        let _ = std::io::stdout().lock().write_all(lines.as_bytes());
        return Ok(Outcome { report: Map::new(), consistent });
    };
    fs::write(path, lines)?;
    let report = object(vec![
        ("samples", json!(samples.len())),
        ("orientation", json!(if primary { "primary" } else { "both" })),
        ("all_members", json!(consistent)),
        ("points_file", json!(path.display().to_string())),
        ("svg_file", json!(svg.map(|p| p.display().to_string()))),
    ]);
    Ok(Outcome { report, consistent })
}

pub fn scene(svg: Option<&Path>) -> Result<Outcome, Failure> {
    let s = construct::make_scene()?;
    let l = construct::linf();
    let list = s.self_checks()?;
    let consistent = list.iter().all(|c| c.holds);
    let points = object(vec![
        ("Z1", point(&s.z1)),
        ("Q1", point(&s.q1)),
        ("P1'", point(&s.p1_prime)),
        ("O1", point(&s.o1)),
        ("S1", point(&s.s1)),
        ("G1", point(&s.g1)),
        ("P1", point(&s.p1)),
        ("Q1'", point(&s.q1_prime)),
        ("V1", point(&s.v1)),
    ]);
    let report = object(vec![
        ("points", Value::Object(points)),
        ("circle", json!({ "center": point(&s.z1), "radius_squared": "1" })),
        (
            "ratios",
            json!({
                "ZG/GS": lit(&signed_ratio(&s.z1, &s.g1, &s.s1, &l)?),
                "ZG/GV": lit(&signed_ratio(&s.z1, &s.g1, &s.v1, &l)?),
            }),
        ),
        ("checks", checks(&list)),
        ("consistent", json!(consistent)),
        ("svg_file", json!(svg.map(|p| p.display().to_string()))),
    ]);
    if let Some(path) = svg {
        fs::write(path, figures::scene(&s)?)?;
    }
    Ok(Outcome { report, consistent })
}
