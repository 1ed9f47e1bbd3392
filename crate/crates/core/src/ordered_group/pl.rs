//! Piecewise-linear homeomorphisms of the line with rational breakpoints
//! that commute with `x ↦ x + 1`.

use std::cmp::Ordering;

use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::Deserialize;

use super::OrderedGroup;
use crate::error::{Error, Result};
use crate::rational::{floor, format_rational, parse_rational, rat, DenseSequence, Rational};

/// Dense-sequence points examined before two elements are declared equal
/// by the order. Distinct elements with small breakpoints differ long
/// before this; equality itself is decided structurally.
const SCAN_LIMIT: usize = 1 << 16;

/// Canonical form: breakpoints `(x_i, y_i)` with `0 = x_0 < x_1 < ... < 1`,
/// the graph on `[0, 1]` being the polyline through them and `(1, y_0 + 1)`.
/// Collinear breakpoints other than `x = 0` are removed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlElement {
    pub points: Vec<(Rational, Rational)>,
}

impl PlElement {
    pub fn identity() -> Self {
        PlElement {
            points: vec![(Rational::zero(), Rational::zero())],
        }
    }

    pub fn translation(c: Rational) -> Self {
        PlElement {
            points: vec![(Rational::zero(), c)],
        }
    }

    /// Builds the element through the given points, which may lie anywhere
    /// on the line; they are reduced into `[0, 1)` using periodicity.
    pub fn from_points(points: &[(Rational, Rational)]) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::Invalid("a PL element needs at least one point".into()));
        }
        let mut reduced: Vec<(Rational, Rational)> = points
            .iter()
            .map(|(x, y)| {
                let k = Rational::from_integer(floor(x));
                (x - &k, y - &k)
            })
            .collect();
        reduced.sort();
        reduced.dedup();
        for w in reduced.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::Invalid(format!("two values at x = {}", format_rational(&w[0].0))));
            }
        }
        let (fx, fy) = reduced[0].clone();
        let (lx, ly) = reduced.last().cloned().unwrap();
        let top = &fy + Rational::one();
        if ly >= top {
            return Err(Error::Invalid("points are not increasing".into()));
        }
        for w in reduced.windows(2) {
            if w[1].1 <= w[0].1 {
                return Err(Error::Invalid("points are not increasing".into()));
            }
        }
        if !fx.is_zero() {
            // interpolate between (lx - 1, ly - 1) and (fx, fy)
            let x0 = &lx - Rational::one();
            let y0 = &ly - Rational::one();
            let y = &y0 + (&fy - &y0) * (-&x0) / (&fx - &x0);
            reduced.insert(0, (Rational::zero(), y));
        }
        Ok(Self::prune(reduced))
    }

    fn prune(points: Vec<(Rational, Rational)>) -> Self {
        let end = (Rational::one(), &points[0].1 + Rational::one());
        let mut out: Vec<(Rational, Rational)> = vec![points[0].clone()];
        for i in 1..points.len() {
            let prev = out.last().unwrap();
            let next = points.get(i + 1).unwrap_or(&end);
            let cur = &points[i];
            let s1 = (&cur.1 - &prev.1) / (&cur.0 - &prev.0);
            let s2 = (&next.1 - &cur.1) / (&next.0 - &cur.0);
            if s1 != s2 {
                out.push(cur.clone());
            }
        }
        PlElement { points: out }
    }

    fn segment_end(&self, i: usize) -> (Rational, Rational) {
        self.points
            .get(i + 1)
            .cloned()
            .unwrap_or_else(|| (Rational::one(), &self.points[0].1 + Rational::one()))
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let k = Rational::from_integer(floor(x));
        let r = x - &k;
        let i = self.points.iter().rposition(|(px, _)| *px <= r).unwrap();
        let (x0, y0) = &self.points[i];
        let (x1, y1) = self.segment_end(i);
        y0 + (&y1 - y0) * (&r - x0) / (&x1 - x0) + k
    }

    pub fn inverse(&self) -> Self {
        let swapped: Vec<_> = self.points.iter().map(|(x, y)| (y.clone(), x.clone())).collect();
        Self::from_points(&swapped).expect("inverse of a valid element")
    }

    /// `x ↦ self(other(x))`.
    pub fn then_after(&self, other: &Self) -> Self {
        let mut xs: Vec<Rational> = other.points.iter().map(|(x, _)| x.clone()).collect();
        let oinv = other.inverse();
        xs.extend(self.points.iter().map(|(x, _)| oinv.eval(x)));
        let pts: Vec<_> = xs.into_iter().map(|x| {
            let y = self.eval(&other.eval(&x));
            (x, y)
        }).collect();
        Self::from_points(&pts).expect("composite of valid elements")
    }

    pub fn slopes(&self) -> Vec<Rational> {
        (0..self.points.len())
            .map(|i| {
                let (x0, y0) = &self.points[i];
                let (x1, y1) = self.segment_end(i);
                (y1 - y0) / (x1 - x0)
            })
            .collect()
    }

    /// `x:y, x:y, ...`, the same form `parse` reads.
    pub fn show(&self) -> String {
        let body: Vec<String> = self
            .points
            .iter()
            .map(|(x, y)| format!("{}:{}", format_rational(x), format_rational(y)))
            .collect();
        body.join(", ")
    }

    /// Accepts `x:y, x:y, ...`, a JSON list of `[x, y]` string pairs, or
    /// `{"breakpoints": [...]}`.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.starts_with('[') || t.starts_with('{') {
            let pts: Vec<(String, String)> = if t.starts_with('{') {
                #[derive(Deserialize)]
                struct Wrapped {
                    #[serde(alias = "points")]
                    breakpoints: Vec<(String, String)>,
                }
                serde_json::from_str::<Wrapped>(t)
                    .map_err(|e| Error::parse(t, e.to_string()))?
                    .breakpoints
            } else {
                serde_json::from_str(t).map_err(|e| Error::parse(t, e.to_string()))?
            };
            let pts = pts
                .iter()
                .map(|(x, y)| Ok((parse_rational(x)?, parse_rational(y)?)))
                .collect::<Result<Vec<_>>>()?;
            return Self::from_points(&pts);
        }
        let mut pts = Vec::new();
        for item in t.split(',') {
            let item = item.trim();
            let (x, y) = item
                .split_once(':')
                .ok_or_else(|| Error::parse(item, "expected x:y"))?;
            pts.push((parse_rational(x.trim())?, parse_rational(y.trim())?));
        }
        Self::from_points(&pts)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "breakpoints": self
                .points
                .iter()
                .map(|(x, y)| [format_rational(x), format_rational(y)])
                .collect::<Vec<_>>()
        })
    }
}

/// The group of such homeomorphisms under composition, `φψ = φ ∘ ψ`,
/// ordered lexicographically along a fixed enumeration of the rationals
/// in `[0, 1)`. Translation by 1 is the central element.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PlGroup;

impl PlGroup {
    /// A fixed pair with `φψ ≠ ψφ`.
    pub fn noncommuting_pair() -> (PlElement, PlElement) {
        let phi = PlElement::from_points(&[(rat(0, 1), rat(0, 1)), (rat(1, 2), rat(1, 4))]).unwrap();
        let psi = PlElement::translation(rat(1, 2));
        (phi, psi)
    }
}

impl OrderedGroup for PlGroup {
    type Elem = PlElement;

    fn identity(&self) -> PlElement {
        PlElement::identity()
    }
    fn mul(&self, a: &PlElement, b: &PlElement) -> PlElement {
        a.then_after(b)
    }
    fn inv(&self, a: &PlElement) -> PlElement {
        a.inverse()
    }
    fn compare(&self, a: &PlElement, b: &PlElement) -> Ordering {
        if a == b {
            return Ordering::Equal;
        }
        for x in DenseSequence::new().take(SCAN_LIMIT) {
            match a.eval(&x).cmp(&b.eval(&x)) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        // Two distinct PL maps differ on an open set; reaching here would
        // need breakpoints with enormous denominators.
        panic!("PL comparison did not separate {} and {}", a.show(), b.show());
    }
    fn central(&self) -> PlElement {
        PlElement::translation(Rational::one())
    }
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> PlElement {
        loop {
            let k = rng.gen_range(0..=3);
            let den = 12;
            let mut xs: Vec<i64> = (0..k).map(|_| rng.gen_range(1..den)).collect();
            let mut ys: Vec<i64> = (0..k).map(|_| rng.gen_range(1..den)).collect();
            xs.sort();
            xs.dedup();
            ys.sort();
            ys.dedup();
            if xs.len() != ys.len() {
                continue;
            }
            let y0 = rat(rng.gen_range(-2 * den..2 * den), den);
            let mut pts = vec![(Rational::zero(), y0.clone())];
            pts.extend(
                xs.iter()
                    .zip(&ys)
                    .map(|(&x, &y)| (rat(x, den), &y0 + rat(y, den))),
            );
            if let Ok(e) = PlElement::from_points(&pts) {
                return e;
            }
        }
    }
    fn show(&self, a: &PlElement) -> String {
        a.show()
    }
    fn parse_elem(&self, s: &str) -> Result<PlElement> {
        PlElement::parse(s)
    }
    fn name(&self) -> String {
        "PL (z = x + 1)".into()
    }
    fn discrete(&self) -> Option<bool> {
        Some(false)
    }
}

pub fn is_positive_slope(e: &PlElement) -> bool {
    e.slopes().iter().all(|s| s.is_positive())
}
