//! Newton-Okounkov polygon of the Peterson surface `Pet_3` at level one:
//! semistandard tableaux of shape `λ = (a_1 + a_2, a_1, 0)`, their Plücker
//! sections restricted to the chart, the lowest-term valuation, the convex
//! hull of the valuation image, and truncated Pascal determinants.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::degree::{volume, WeightVector};
use crate::error::{HessexError, Result};
use crate::exactalg::rational::{binomial, int};
use crate::exactalg::{format_rational, Monomial, MonomialOrder, MultiPoly, Rational, Var};
use crate::hessenberg::HessenbergFunction;

/// A semistandard tableau of shape `(a_1 + a_2, a_1)` with entries in `{1,2,3}`,
/// recorded by how many times each column type occurs: two-box columns
/// `12, 13, 23` and one-box columns `1, 2, 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColumnCounts {
    pub k12: u32,
    pub k13: u32,
    pub k23: u32,
    pub k1: u32,
    pub k2: u32,
    pub k3: u32,
}

fn superscript(e: u32) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    e.to_string().bytes().map(|b| DIGITS[(b - b'0') as usize]).collect()
}

impl ColumnCounts {
    pub fn as_tuple(&self) -> [u32; 6] {
        [self.k12, self.k13, self.k23, self.k1, self.k2, self.k3]
    }

    pub fn from_tuple(t: [u32; 6]) -> ColumnCounts {
        ColumnCounts { k12: t[0], k13: t[1], k23: t[2], k1: t[3], k2: t[4], k3: t[5] }
    }

    pub fn a1(&self) -> u32 {
        self.k12 + self.k13 + self.k23
    }

    pub fn a2(&self) -> u32 {
        self.k1 + self.k2 + self.k3
    }

    /// Semistandardness: a `23` column forces the first row to continue with entries `>= 2`.
    pub fn is_valid(&self) -> bool {
        self.k23 == 0 || self.k1 == 0
    }
}

impl fmt::Display for ColumnCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = [("12", self.k12), ("13", self.k13), ("23", self.k23), ("1", self.k1), ("2", self.k2), ("3", self.k3)];
        let mut any = false;
        for (label, k) in parts {
            match k {
                0 => {}
                1 => write!(f, "({label})")?,
                _ => write!(f, "({label}){}", superscript(k))?,
            }
            any |= k > 0;
        }
        if !any {
            write!(f, "∅")?;
        }
        Ok(())
    }
}

/// All tableaux for `(a_1, a_2)`, ordered by `(k12, k13, k1, k2)` ascending.
pub fn enumerate_ssyt(a1: u32, a2: u32) -> Vec<ColumnCounts> {
    let mut out = Vec::new();
    for k12 in 0..=a1 {
        for k13 in 0..=a1 - k12 {
            let k23 = a1 - k12 - k13;
            for k1 in 0..=a2 {
                for k2 in 0..=a2 - k1 {
                    let t = ColumnCounts { k12, k13, k23, k1, k2, k3: a2 - k1 - k2 };
                    if t.is_valid() {
                        out.push(t);
                    }
                }
            }
        }
    }
    out
}

/// `(a_1 + 1)(a_2 + 1)(a_1 + a_2 + 2) / 2`.
pub fn weyl_dimension(a1: u32, a2: u32) -> u64 {
    let (a1, a2) = (a1 as u64, a2 as u64);
    (a1 + 1) * (a2 + 1) * (a1 + a2 + 2) / 2
}

/// `(y - x^2)^{k12} (-x)^{k13} (-1)^{k23} y^{k1} x^{k2}`.
pub fn section_poly(t: &ColumnCounts) -> MultiPoly {
    let x = MultiPoly::var(Var::PetX);
    let y = MultiPoly::var(Var::PetY);
    let p12 = y.sub(&x.mul(&x));
    let sign = if (t.k13 + t.k23).is_multiple_of(2) { 1 } else { -1 };
    p12.pow(t.k12)
        .mul(&x.pow(t.k13 + t.k2))
        .mul(&y.pow(t.k1))
        .scale(&int(sign))
        .with_universe([Var::PetX, Var::PetY])
}

/// Lex order with `x` above `y`.
pub fn pet_order() -> MonomialOrder {
    MonomialOrder::lex(vec![Var::PetX, Var::PetY])
}

fn exponents(m: &Monomial) -> (u32, u32) {
    (m.exponent(&Var::PetX), m.exponent(&Var::PetY))
}

/// Exponent pair `(x, y)` of the lowest term.
pub fn valuation(p: &MultiPoly) -> Result<(u32, u32)> {
    let (m, _) = p.lowest_term(&pet_order())?;
    Ok(exponents(&m))
}

/// Valuations achieved on the span of the sections, with the span's dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValuationPointSet {
    pub points: BTreeSet<(u32, u32)>,
    pub rank: usize,
}

/// Row-reduces the sections, always pivoting on a row's lowest monomial, so
/// that the pivot monomials are exactly the valuations of nonzero elements of the span.
pub fn valuation_image_of(polys: &[MultiPoly]) -> ValuationPointSet {
    let order = pet_order();
    let mut basis: BTreeMap<(u32, u32), MultiPoly> = BTreeMap::new();
    for p in polys {
        let mut r = p.clone();
        while !r.is_zero() {
            let (m, c) = r.lowest_term(&order).expect("nonzero");
            let key = exponents(&m);
            match basis.get(&key) {
                Some(b) => r = r.sub(&b.scale(&c)),
                None => {
                    basis.insert(key, r.scale(&c.recip()));
                    break;
                }
            }
        }
    }
    ValuationPointSet { rank: basis.len(), points: basis.into_keys().collect() }
}

pub fn valuation_image(a1: u32, a2: u32) -> ValuationPointSet {
    let sections: Vec<MultiPoly> = enumerate_ssyt(a1, a2).iter().map(section_poly).collect();
    valuation_image_of(&sections)
}

/// Rank of the section coefficient matrix by plain Gaussian elimination over
/// monomial columns in natural order.
pub fn section_matrix_rank(polys: &[MultiPoly]) -> usize {
    let columns: Vec<Monomial> = polys.iter().flat_map(|p| p.terms().map(|(m, _)| m.clone())).collect::<BTreeSet<_>>().into_iter().collect();
    let mut rows: Vec<Vec<Rational>> = polys.iter().map(|p| columns.iter().map(|m| p.coefficient(m)).collect()).collect();
    let mut rank = 0;
    for col in 0..columns.len() {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let lead = rows[rank][col].clone();
        for r in rank + 1..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = &rows[r][col] / &lead;
            let pivot_row = rows[rank].clone();
            for (x, y) in rows[r].iter_mut().zip(&pivot_row).skip(col) {
                *x -= &factor * y;
            }
        }
        rank += 1;
    }
    rank
}

pub type Point = (Rational, Rational);

fn cross(o: &Point, a: &Point, b: &Point) -> Rational {
    (&a.0 - &o.0) * (&b.1 - &o.1) - (&a.1 - &o.1) * (&b.0 - &o.0)
}

/// Convex polygon with exact vertices listed counterclockwise from the
/// lexicographically smallest one. Collinear boundary points are not vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePolygon {
    pub vertices: Vec<Point>,
    pub area: Rational,
}

impl LatticePolygon {
    /// Andrew's monotone chain.
    pub fn hull(points: &[Point]) -> LatticePolygon {
        let mut pts: Vec<Point> = points.to_vec();
        pts.sort();
        pts.dedup();
        if pts.len() < 3 {
            let area = Rational::zero();
            return LatticePolygon { vertices: pts, area };
        }
        let mut lower: Vec<Point> = Vec::new();
        for p in &pts {
            while lower.len() >= 2 && !cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive() {
                lower.pop();
            }
            lower.push(p.clone());
        }
        let mut upper: Vec<Point> = Vec::new();
        for p in pts.iter().rev() {
            while upper.len() >= 2 && !cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive() {
                upper.pop();
            }
            upper.push(p.clone());
        }
        lower.pop();
        upper.pop();
        lower.extend(upper);
        let area = shoelace(&lower);
        LatticePolygon { vertices: lower, area }
    }

    pub fn from_lattice(points: &BTreeSet<(u32, u32)>) -> LatticePolygon {
        let pts: Vec<Point> = points.iter().map(|&(a, b)| (int(a as i64), int(b as i64))).collect();
        LatticePolygon::hull(&pts)
    }

    pub fn vertex_set(&self) -> BTreeSet<Point> {
        self.vertices.iter().cloned().collect()
    }
}

/// Absolute shoelace area.
pub fn shoelace(vertices: &[Point]) -> Rational {
    let n = vertices.len();
    let mut twice = Rational::zero();
    for k in 0..n {
        let (a, b) = (&vertices[k], &vertices[(k + 1) % n]);
        twice += &a.0 * &b.1 - &b.0 * &a.1;
    }
    (twice / int(2)).abs()
}

/// The four vertices stated for the polygon, duplicates removed.
pub fn expected_vertices_for(a1: u32, a2: u32) -> BTreeSet<Point> {
    let (a1, a2) = (a1 as i64, a2 as i64);
    let raw = if a2 >= a1 {
        [(0, 0), (2 * a1 + a2, 0), (0, a1 + a2), (3 * a1, a2 - a1)]
    } else {
        [(0, 0), (0, a1 + a2), (2 * a2 + a1, 0), (3 * a2, a1 - a2)]
    };
    raw.iter().map(|&(u, v)| (int(u), int(v))).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NobPolygon {
    pub a1: u32,
    pub a2: u32,
    pub sections: usize,
    pub image: ValuationPointSet,
    pub polygon: LatticePolygon,
    pub expected_vertices: BTreeSet<Point>,
    /// `P_{(2,3,3)}(a_1 + a_2, a_1, 0)`.
    pub expected_area: Rational,
    pub vertices_match: bool,
    pub area_matches: bool,
}

impl NobPolygon {
    pub fn certified(&self) -> bool {
        self.vertices_match && self.area_matches
    }

    pub fn to_json(&self, with_points: bool) -> serde_json::Value {
        let pt = |p: &Point| serde_json::json!([format_rational(&p.0), format_rational(&p.1)]);
        let mut out = serde_json::json!({
            "a1": self.a1,
            "a2": self.a2,
            "sections": self.sections,
            "rank": self.image.rank,
            "vertices": self.polygon.vertices.iter().map(|p| lattice_json(p).unwrap_or_else(|| pt(p))).collect::<Vec<_>>(),
            "area": format_rational(&self.polygon.area),
            "expected_area": format_rational(&self.expected_area),
            "expected_vertices": self.expected_vertices.iter().map(|p| lattice_json(p).unwrap_or_else(|| pt(p))).collect::<Vec<_>>(),
            "certified": self.certified(),
        });
        if with_points {
            out["points"] = self.image.points.iter().map(|&(u, v)| serde_json::json!([u, v])).collect();
        }
        out
    }

    pub fn to_text(&self, with_points: bool) -> String {
        let mut out = String::new();
        let show = |p: &Point| format!("({}, {})", format_rational(&p.0), format_rational(&p.1));
        let _ = writeln!(out, "lambda = ({}, {}, 0)", self.a1 + self.a2, self.a1);
        let _ = writeln!(out, "sections: {}", self.sections);
        let _ = writeln!(out, "rank: {}", self.image.rank);
        let verts: Vec<String> = self.polygon.vertices.iter().map(show).collect();
        let _ = writeln!(out, "vertices: {}", verts.join(" "));
        let _ = writeln!(out, "area: {}", format_rational(&self.polygon.area));
        let _ = writeln!(out, "expected area: {}", format_rational(&self.expected_area));
        let _ = writeln!(out, "certified: {}", self.certified());
        if with_points {
            let pts: Vec<String> = self.image.points.iter().map(|(u, v)| format!("({u}, {v})")).collect();
            let _ = writeln!(out, "points: {}", pts.join(" "));
        }
        out
    }
}

fn lattice_json(p: &Point) -> Option<serde_json::Value> {
    if p.0.is_integer() && p.1.is_integer() {
        let u: i64 = p.0.to_integer().try_into().ok()?;
        let v: i64 = p.1.to_integer().try_into().ok()?;
        Some(serde_json::json!([u, v]))
    } else {
        None
    }
}

/// Hull of the level-one valuation image, certified against the stated
/// vertices and against the volume `P_{(2,3,3)}(λ)`.
pub fn nob_polygon(a1: u32, a2: u32) -> Result<NobPolygon> {
    if a1 == 0 || a2 == 0 {
        return Err(HessexError::InvalidArgument(format!("a1 and a2 must be positive, got ({a1}, {a2})")));
    }
    let sections = enumerate_ssyt(a1, a2);
    let polys: Vec<MultiPoly> = sections.iter().map(section_poly).collect();
    let image = valuation_image_of(&polys);
    let polygon = LatticePolygon::from_lattice(&image.points);
    let lambda = WeightVector::pet3(a1 as i64, a2 as i64)?;
    let expected_area = volume(&HessenbergFunction::peterson(3), &lambda)?;
    let expected_vertices = expected_vertices_for(a1, a2);
    let vertices_match = polygon.vertex_set() == expected_vertices;
    let area_matches = polygon.area == expected_area;
    Ok(NobPolygon { a1, a2, sections: sections.len(), image, polygon, expected_vertices, expected_area, vertices_match, area_matches })
}

/// `det T(r, s)` where `T(r, s)` has `(a, b)` entry `C(s_b, r_a)`.
pub fn truncated_pascal_det(r: &[u64], s: &[u64]) -> Result<BigInt> {
    if r.len() != s.len() {
        return Err(HessexError::DimensionMismatch(format!("|r| = {} but |s| = {}", r.len(), s.len())));
    }
    for (name, v) in [("r", r), ("s", s)] {
        if v.windows(2).any(|w| w[0] >= w[1]) {
            return Err(HessexError::InvalidArgument(format!("{name} must be strictly increasing")));
        }
    }
    let n = r.len();
    let mut m: Vec<Vec<Rational>> =
        (0..n).map(|a| (0..n).map(|b| Rational::from_integer(binomial(s[b], r[a]))).collect()).collect();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&row| !m[row][col].is_zero()) else {
            return Ok(BigInt::zero());
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let lead = m[col][col].clone();
        det *= &lead;
        for row in col + 1..n {
            if m[row][col].is_zero() {
                continue;
            }
            let factor = &m[row][col] / &lead;
            let pivot_row = m[col].clone();
            for (x, y) in m[row].iter_mut().zip(&pivot_row).skip(col) {
                *x -= &factor * y;
            }
        }
    }
    Ok(det.to_integer())
}

pub fn pascal_invertibility_predicted(r: &[u64], s: &[u64]) -> bool {
    r.iter().zip(s).all(|(a, b)| a <= b)
}

/// Static SVG of the valuation points and their convex hull.
pub fn svg(result: &NobPolygon) -> String {
    const UNIT: i64 = 40;
    const MARGIN: i64 = 30;
    let max_u = result.image.points.iter().map(|p| p.0).max().unwrap_or(0) as i64;
    let max_v = result.image.points.iter().map(|p| p.1).max().unwrap_or(0) as i64;
    let width = 2 * MARGIN + UNIT * max_u.max(1);
    let height = 2 * MARGIN + UNIT * max_v.max(1);
    let px = |u: f64| MARGIN as f64 + UNIT as f64 * u;
    let py = |v: f64| (height - MARGIN) as f64 - UNIT as f64 * v;
    let to_f = |r: &Rational| {
        let (n, d): (f64, f64) = (r.numer().to_string().parse().unwrap_or(0.0), r.denom().to_string().parse().unwrap_or(1.0));
        n / d
    };
    let mut out = String::new();
    let _ = writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#);
    let _ = writeln!(out, r#"<rect width="{width}" height="{height}" fill="white"/>"#);
    for u in 0..=max_u {
        for v in 0..=max_v {
            let _ = writeln!(out, r##"<circle cx="{}" cy="{}" r="1.5" fill="#bbbbbb"/>"##, px(u as f64), py(v as f64));
        }
    }
    let poly: Vec<String> = result.polygon.vertices.iter().map(|p| format!("{},{}", px(to_f(&p.0)), py(to_f(&p.1)))).collect();
    let _ = writeln!(
        out,
        r##"<polygon points="{}" fill="#cfe3f7" fill-opacity="0.6" stroke="#1f5f9f" stroke-width="2"/>"##,
        poly.join(" ")
    );
    for &(u, v) in &result.image.points {
        let _ = writeln!(out, r##"<circle cx="{}" cy="{}" r="4" fill="#c0392b"/>"##, px(u as f64), py(v as f64));
    }
    let _ = writeln!(
        out,
        r#"<text x="{}" y="{}" font-family="sans-serif" font-size="12">a1={}, a2={}, area={}</text>"#,
        MARGIN,
        MARGIN / 2 + 6,
        result.a1,
        result.a2,
        format_rational(&result.polygon.area)
    );
    out.push_str("</svg>\n");
    out
}
