//! SVG figures. Floats appear only here, after every exact computation.

use cevian_core::construct::{self, Scene};
use cevian_core::{LocusSample, PPoint};
use svg::node::element::{Circle, Line, Polygon, Polyline, Rectangle, Style, Text, Title};
use svg::Document;

use crate::report::{approx, Failure};

const SIZE: f64 = 800.0;
const GRID: i64 = 200;
const REACH: i64 = 4;

const LOCUS_STYLE: &str = "
.triangle { fill: none; stroke: #333; stroke-width: 1.5 }
.anticomplementary { fill: none; stroke: #888; stroke-width: 1; stroke-dasharray: 6 4 }
.curve { fill: none; stroke: #1f5fa8; stroke-width: 1.5 }
.sample { fill: #c0392b }
";

const SCENE_STYLE: &str = "
.circle, .square, .arc, .axis, .chord { fill: none }
.circle { stroke: #333; stroke-width: 1.5 }
.square { stroke: #888; stroke-width: 1 }
.arc { stroke: #c0392b; stroke-width: 4 }
.axis, .chord { stroke: #1f5fa8; stroke-width: 1; stroke-dasharray: 5 3 }
.marked { fill: #111 }
.label { font: 16px sans-serif }
";

/// Maps world coordinates into the 800 x 800 canvas, y up.
#[derive(Clone, Copy, Debug)]
struct Frame {
    cx: f64,
    cy: f64,
    scale: f64,
}

impl Frame {
    fn around(xs: &[f64], ys: &[f64], zoom: f64) -> Frame {
        let (lo_x, hi_x) = bounds(xs);
        let (lo_y, hi_y) = bounds(ys);
        let side = zoom * (hi_x - lo_x).max(hi_y - lo_y);
        Frame { cx: (lo_x + hi_x) / 2.0, cy: (lo_y + hi_y) / 2.0, scale: SIZE / side }
    }

    fn px(&self, (x, y): (f64, f64)) -> (f64, f64) {
        (round2(SIZE / 2.0 + (x - self.cx) * self.scale), round2(SIZE / 2.0 - (y - self.cy) * self.scale))
    }
}

fn bounds(v: &[f64]) -> (f64, f64) {
    v.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &x| (lo.min(x), hi.max(x)))
}

fn round2(x: f64) -> f64 {
    (x * 100.0).round() / 100.0
}

fn inside(p: (f64, f64)) -> bool {
    let margin = 40.0;
    (-margin..=SIZE + margin).contains(&p.0) && (-margin..=SIZE + margin).contains(&p.1)
}

fn points_attr(pts: &[(f64, f64)]) -> String {
    pts.iter().map(|(x, y)| format!("{x},{y}")).collect::<Vec<_>>().join(" ")
}

fn document(style: &str) -> Document {
    Document::new()
        .set("width", SIZE)
        .set("height", SIZE)
        .set("viewBox", (0, 0, SIZE, SIZE))
        .add(Style::new(style))
        .add(Rectangle::new().set("width", SIZE).set("height", SIZE).set("fill", "white"))
}

/// Equilateral embedding of absolute barycentrics, centroid at the origin.
fn embed([x, y, z]: [f64; 3]) -> (f64, f64) {
    let h = 3f64.sqrt() / 2.0;
    let s = x + y + z;
    let (x, y, z) = (x / s, y / s, z / s);
    ((z - y) * h, x - (y + z) / 2.0)
}

fn embed_point(p: &PPoint) -> (f64, f64) {
    let c = p.coords();
    embed([approx(&c[0]), approx(&c[1]), approx(&c[2])])
}

/// Real points of the curve with first barycentric coordinate `k / GRID`:
/// roots in `y` of `(5x-1) y^2 + (5x-1)(x-1) y + x - x^2` where the
/// discriminant `(5x-1)(x-1)(5x^2-2x+1)` is nonnegative.
fn fiber(k: i64) -> Option<[[f64; 3]; 2]> {
    let (k, n) = (k as i128, GRID as i128);
    let a_scaled = 5 * k - n;
    let disc_scaled = a_scaled * (k - n) * (5 * k * k - 2 * k * n + n * n);
    if a_scaled == 0 || disc_scaled < 0 {
        return None;
    }
    let x = k as f64 / n as f64;
    let a = 5.0 * x - 1.0;
    let b = a * (x - 1.0);
    let root = (disc_scaled as f64).sqrt() / (n * n) as f64;
    let y = |sign: f64| (-b + sign * root) / (2.0 * a);
    let (y1, y2) = (y(1.0), y(-1.0));
    Some([[x, y1, 1.0 - x - y1], [x, y2, 1.0 - x - y2]])
}

/// Polylines tracing the curve, marching each coordinate in turn.
fn curve_branches(frame: &Frame) -> Vec<Vec<(f64, f64)>> {
    let mut done = Vec::new();
    for role in 0..3 {
        let mut open: [Vec<(f64, f64)>; 2] = [Vec::new(), Vec::new()];
        for k in -REACH * GRID..=REACH * GRID {
            let roots = fiber(k);
            for (branch, current) in open.iter_mut().enumerate() {
                let next = roots.map(|r| {
                    let mut p = r[branch];
                    p.rotate_right(role);
                    frame.px(embed(p))
                });
                let jump = match (next, current.last()) {
                    (Some(p), Some(q)) => (p.0 - q.0).hypot(p.1 - q.1) > 60.0,
                    _ => false,
                };
                if next.is_none_or(|p| !inside(p)) || jump {
                    if current.len() > 1 {
                        done.push(std::mem::take(current));
                    }
                    current.clear();
                }
                if let Some(p) = next.filter(|p| inside(*p)) {
                    current.push(p);
                }
            }
        }
        done.extend(open.into_iter().filter(|c| c.len() > 1));
    }
    done
}

fn locus_frame() -> Frame {
    let corners = [[-1.0, 1.0, 1.0], [1.0, -1.0, 1.0], [1.0, 1.0, -1.0]].map(embed);
    let xs: Vec<f64> = corners.iter().map(|p| p.0).collect();
    let ys: Vec<f64> = corners.iter().map(|p| p.1).collect();
    Frame::around(&xs, &ys, 1.6)
}

pub fn locus(samples: &[LocusSample]) -> String {
    let frame = locus_frame();
    let tri = |rows: [[f64; 3]; 3], class: &str| {
        Polygon::new().set("class", class).set("points", points_attr(&rows.map(|r| frame.px(embed(r)))))
    };
    let mut doc = document(LOCUS_STYLE)
        .add(tri([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]], "triangle"))
        .add(tri([[-1.0, 1.0, 1.0], [1.0, -1.0, 1.0], [1.0, 1.0, -1.0]], "anticomplementary"));
    for branch in curve_branches(&frame) {
        doc = doc.add(Polyline::new().set("class", "curve").set("points", points_attr(&branch)));
    }
    for s in samples {
        let mut pts = vec![s.p.point(), s.p_prime.point()];
        if let Some((a, b)) = &s.swapped {
            pts.extend([a.point(), b.point()]);
        }
        for p in pts {
            let (x, y) = frame.px(embed_point(p));
            if inside((x, y)) {
                doc = doc.add(Circle::new().set("class", "sample").set("cx", x).set("cy", y).set("r", 3));
            }
        }
    }
    doc.to_string()
}

pub fn scene(s: &Scene) -> Result<String, Failure> {
    let l = construct::linf();
    let chart = |p: &PPoint| -> Result<(f64, f64), Failure> {
        let [x, y, _] = cevian_core::projective::normalized(p, &l)?;
        Ok((approx(&x), approx(&y)))
    };
    let frame = Frame::around(&[-1.0, 1.2], &[-1.0, 1.0], 1.35);
    let at = |p: &PPoint| chart(p).map(|w| frame.px(w));
    let (z, r) = (at(&s.z1)?, frame.scale);
    let arc: Vec<(f64, f64)> = (0..=240)
        .map(|i| {
            let t = -1.0 / 3.0 + (4.0 / 3.0) * i as f64 / 240.0;
            frame.px(((1.0 - t * t) / (1.0 + t * t), 2.0 * t / (1.0 + t * t)))
        })
        .collect();
    let square = [&s.z1, &s.q1, &s.o1, &s.p1_prime].map(at);
    let segment = |a: (f64, f64), b: (f64, f64), class: &str| {
        Line::new().set("class", class).set("x1", a.0).set("y1", a.1).set("x2", b.0).set("y2", b.1)
    };
    let v = at(&s.v1)?;
    let mut doc = document(SCENE_STYLE)
        .add(Circle::new().set("class", "circle").set("cx", z.0).set("cy", z.1).set("r", round2(r)))
        .add(
            Polygon::new()
                .set("class", "square")
                .set("points", points_attr(&square.into_iter().collect::<Result<Vec<_>, _>>()?)),
        )
        .add(Polyline::new().set("class", "arc").set("points", points_attr(&arc)))
        .add(segment(z, v, "axis"))
        .add(segment(at(&s.p1)?, v, "chord"))
        .add(segment(at(&s.p1_prime)?, v, "chord"));
    let marked = [
        ("P1", &s.p1),
        ("Q1", &s.q1),
        ("Q1'", &s.q1_prime),
        ("P1'", &s.p1_prime),
        ("O1", &s.o1),
        ("S1", &s.s1),
        ("G1", &s.g1),
        ("V1", &s.v1),
        ("Z1", &s.z1),
    ];
    for (name, p) in marked {
        let (x, y) = at(p)?;
        doc = doc
            .add(Circle::new().set("class", "marked").set("cx", x).set("cy", y).set("r", 5).add(Title::new(name)))
            .add(Text::new(name).set("class", "label").set("x", x + 8.0).set("y", y - 8.0));
    }
    Ok(doc.to_string())
}
