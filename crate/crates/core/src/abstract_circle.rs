//! Archimedean sets, abstract circles, and the passage between them.
//!
//! A finite-period archimedean set is modelled as `(Z, θ = +p)`; every
//! archimedean set with a finite fundamental domain is of this form.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::audit::AuditReport;
use crate::cyclic::LambdaMap;
use crate::error::{Error, Result};
use crate::interval::{FiniteInterval, Interval};

/// `(Z, x ↦ x + period)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FiniteArch {
    pub period: usize,
}

impl FiniteArch {
    pub fn theta(&self, x: i64) -> i64 {
        x + self.period as i64
    }
}

/// `(Z × I)/((k+1, b) ~ (k, t))` with `θ(k, e) = (k+1, e)`; elements are
/// kept with `e ≠ t`.
#[derive(Debug, Clone)]
pub struct IntervalArch<I> {
    pub interval: I,
}

pub fn interval_to_arch<I: Interval>(interval: I) -> IntervalArch<I> {
    IntervalArch { interval }
}

impl<I: Interval> IntervalArch<I> {
    pub fn element(&self, k: i64, e: I::Elem) -> (i64, I::Elem) {
        if e == self.interval.top() {
            (k + 1, self.interval.bottom())
        } else {
            (k, e)
        }
    }

    pub fn theta(&self, x: &(i64, I::Elem)) -> (i64, I::Elem) {
        (x.0 + 1, x.1.clone())
    }

    pub fn compare(&self, a: &(i64, I::Elem), b: &(i64, I::Elem)) -> Ordering {
        a.0.cmp(&b.0).then_with(|| self.interval.compare(&a.1, &b.1))
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> (i64, I::Elem) {
        let k = rng.gen_range(-5..=5);
        self.element(k, self.interval.sample(rng))
    }

    /// `θ(x) > x`, and `y <= θ^n(x)` for `n` = difference of integer parts + 1.
    pub fn audit<R: Rng + ?Sized>(&self, samples: usize, rng: &mut R) -> AuditReport {
        let mut report = AuditReport::new("archimedean set");
        for _ in 0..samples {
            let x = self.sample(rng);
            let y = self.sample(rng);
            report.check(self.compare(&self.theta(&x), &x) == Ordering::Greater, || format!("θ(x) <= x at k = {}", x.0));
            let n = (y.0 - x.0).max(0) + 1;
            let tn = (x.0 + n, x.1.clone());
            report.check(self.compare(&y, &tn) != Ordering::Greater, || format!("no bound after {n} steps"));
        }
        report
    }
}

impl IntervalArch<FiniteInterval> {
    /// `(k, e) ↦ k(n+1) + e`, identifying this set with `(Z, +(n+1))`.
    pub fn to_finite(&self) -> FiniteArch {
        FiniteArch {
            period: self.interval.n + 1,
        }
    }

    pub fn encode(&self, x: &(i64, usize)) -> i64 {
        x.0 * (self.interval.n as i64 + 1) + x.1 as i64
    }
}

/// `(P, S, ∂_0, ∂_1, 0, 1, *, ∪)` on index sets with labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbstractCircle {
    pub points: Vec<String>,
    pub segments: Vec<String>,
    pub d0: Vec<usize>,
    pub d1: Vec<usize>,
    pub zero: Vec<usize>,
    pub one: Vec<usize>,
    pub star: Vec<usize>,
    pub cup: BTreeMap<(usize, usize), usize>,
}

fn seg_index(p: usize, x: usize, y: usize) -> usize {
    x * (p + 1) + (y - x)
}

/// `[x, y]` with `0 <= x < p` and `x <= y <= x + p`, shifted into range.
fn normalize(p: usize, x: i64, y: i64) -> usize {
    let k = x.div_euclid(p as i64);
    let (x, y) = (x - k * p as i64, y - k * p as i64);
    seg_index(p, x as usize, y as usize)
}

/// `X/θ` for `X = (Z, +p)`: points are residues, segments are orbits of
/// pairs `x <= y <= θ(x)`.
pub fn quotient_circle(x: &FiniteArch) -> AbstractCircle {
    let p = x.period;
    let pi = p as i64;
    let points = (0..p).map(|i| i.to_string()).collect();
    let mut segments = Vec::new();
    let (mut d0, mut d1, mut star) = (Vec::new(), Vec::new(), Vec::new());
    for a in 0..p {
        for y in a..=a + p {
            segments.push(format!("[{a},{y}]"));
            d0.push(a);
            d1.push(y % p);
            star.push(normalize(p, y as i64, a as i64 + pi));
        }
    }
    let zero = (0..p).map(|a| seg_index(p, a, a)).collect();
    let one = (0..p).map(|a| seg_index(p, a, a + p)).collect();
    let mut cup = BTreeMap::new();
    for a in 0..p {
        for y in a..=a + p {
            let first = seg_index(p, a, y);
            // second segment starts at y; its representatives start at y % p
            let u = y % p;
            let shift = (y - u) as i64;
            for w in u..=u + p {
                let z = w as i64 + shift;
                if z <= a as i64 + pi {
                    cup.insert((first, seg_index(p, u, w)), normalize(p, a as i64, z));
                }
            }
        }
    }
    AbstractCircle {
        points,
        segments,
        d0,
        d1,
        zero,
        one,
        star,
        cup,
    }
}

impl AbstractCircle {
    pub fn cup(&self, a: usize, b: usize) -> Option<usize> {
        self.cup.get(&(a, b)).copied()
    }

    pub fn segment_between(&self, x: usize, y: usize) -> Vec<usize> {
        (0..self.segments.len()).filter(|&a| self.d0[a] == x && self.d1[a] == y).collect()
    }

    /// `L_x = {a : ∂_0 a = x}`.
    pub fn fiber(&self, x: usize) -> Vec<usize> {
        (0..self.segments.len()).filter(|&a| self.d0[a] == x).collect()
    }

    /// `a <= b` iff `a ∪ c = b` for some `c`.
    pub fn le(&self, a: usize, b: usize) -> bool {
        (0..self.segments.len()).any(|c| self.cup(a, c) == Some(b))
    }

    pub fn to_json(&self) -> String {
        let p = |i: usize| self.points[i].clone();
        let s = |i: usize| self.segments[i].clone();
        let by_seg = |f: &Vec<usize>, lab: &dyn Fn(usize) -> String| -> BTreeMap<String, String> {
            (0..self.segments.len()).map(|a| (s(a), lab(f[a]))).collect()
        };
        let by_point = |f: &Vec<usize>| -> BTreeMap<String, String> {
            (0..self.points.len()).map(|x| (p(x), s(f[x]))).collect()
        };
        let j = CircleJson {
            points: self.points.clone(),
            segments: self.segments.clone(),
            d0: by_seg(&self.d0, &p),
            d1: by_seg(&self.d1, &p),
            zero: by_point(&self.zero),
            one: by_point(&self.one),
            star: by_seg(&self.star, &s),
            cup: self.cup.iter().map(|(&(a, b), &c)| [s(a), s(b), s(c)]).collect(),
        };
        serde_json::to_string(&j).expect("serialisable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let j: CircleJson = serde_json::from_str(text).map_err(|e| Error::parse("abstract circle JSON", e.to_string()))?;
        let find = |labels: &[String], l: &str| -> Result<usize> {
            labels.iter().position(|x| x == l).ok_or_else(|| Error::parse(l, "unknown label"))
        };
        let seg_map = |m: &BTreeMap<String, String>, target: &[String], what: &str| -> Result<Vec<usize>> {
            j.segments
                .iter()
                .map(|s| {
                    let v = m.get(s).ok_or_else(|| Error::parse(s.as_str(), format!("missing {what}")))?;
                    find(target, v)
                })
                .collect()
        };
        let point_map = |m: &BTreeMap<String, String>, what: &str| -> Result<Vec<usize>> {
            j.points
                .iter()
                .map(|x| {
                    let v = m.get(x).ok_or_else(|| Error::parse(x.as_str(), format!("missing {what}")))?;
                    find(&j.segments, v)
                })
                .collect()
        };
        let mut cup = BTreeMap::new();
        for [a, b, c] in &j.cup {
            let key = (find(&j.segments, a)?, find(&j.segments, b)?);
            if cup.insert(key, find(&j.segments, c)?).is_some() {
                return Err(Error::parse(format!("{a} ∪ {b}"), "defined twice"));
            }
        }
        Ok(AbstractCircle {
            d0: seg_map(&j.d0, &j.points, "d0")?,
            d1: seg_map(&j.d1, &j.points, "d1")?,
            zero: point_map(&j.zero, "zero")?,
            one: point_map(&j.one, "one")?,
            star: seg_map(&j.star, &j.segments, "star")?,
            points: j.points,
            segments: j.segments,
            cup,
        })
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct CircleJson {
    #[serde(rename = "P")]
    points: Vec<String>,
    #[serde(rename = "S")]
    segments: Vec<String>,
    d0: BTreeMap<String, String>,
    d1: BTreeMap<String, String>,
    zero: BTreeMap<String, String>,
    one: BTreeMap<String, String>,
    star: BTreeMap<String, String>,
    cup: Vec<[String; 3]>,
}

/// Exhaustive check of the non-triviality, equational and concatenation
/// axioms. Axiom 3.(4) is checked only in the direction stated: `a ∪ b = 0_x`
/// forces `a = 0_x`.
pub fn circle_axiom_audit(c: &AbstractCircle) -> AuditReport {
    let mut r = AuditReport::new("abstract circle axioms");
    let np = c.points.len();
    let ns = c.segments.len();
    let s = |a: usize| c.segments[a].as_str();
    r.check(np > 0, || "1: P is empty".into());
    for x in 0..np {
        for y in 0..np {
            r.check(!c.segment_between(x, y).is_empty(), || format!("1: no segment from {} to {}", c.points[x], c.points[y]));
        }
        r.check(c.zero[x] != c.one[x], || format!("1: 0 = 1 at {}", c.points[x]));
        r.check(c.d0[c.zero[x]] == x && c.d1[c.zero[x]] == x, || format!("2: ∂ of 0 at {}", c.points[x]));
        r.check(c.star[c.zero[x]] == c.one[x], || format!("2: 0* ≠ 1 at {}", c.points[x]));
    }
    for a in 0..ns {
        r.check(c.star[c.star[a]] == a, || format!("2: a** ≠ a for {}", s(a)));
        r.check(c.d0[c.star[a]] == c.d1[a], || format!("2: ∂_0 a* ≠ ∂_1 a for {}", s(a)));
        if c.d0[a] == c.d1[a] {
            let x = c.d0[a];
            r.check(a == c.zero[x] || a == c.one[x], || format!("2: loop {} is neither 0 nor 1", s(a)));
        }
        let x = c.d0[a];
        r.check(c.cup(c.zero[x], a) == Some(a), || format!("3.(5): 0 ∪ {} ≠ {}", s(a), s(a)));
    }
    for a in 0..ns {
        for b in 0..ns {
            let ab = c.cup(a, b);
            if let Some(ab) = ab {
                r.check(c.d1[a] == c.d0[b] && c.d1[ab] == c.d1[b] && c.d0[ab] == c.d0[a], || {
                    format!("3.(1): endpoints of {} ∪ {}", s(a), s(b))
                });
                for x in 0..np {
                    if ab == c.zero[x] {
                        r.check(a == c.zero[x], || format!("3.(4): {} ∪ {} = 0 but {} ≠ 0", s(a), s(b), s(a)));
                    }
                }
                for d in 0..ns {
                    if let Some(abd) = c.cup(ab, d) {
                        let bd = c.cup(b, d);
                        let ok = bd.and_then(|bd| c.cup(a, bd)) == Some(abd);
                        r.check(ok, || format!("3.(3): ({} ∪ {}) ∪ {}", s(a), s(b), s(d)));
                    }
                }
            }
            for cc in 0..ns {
                let lhs = ab == Some(cc);
                let rhs = c.cup(c.star[cc], a) == Some(c.star[b]);
                r.check(lhs == rhs, || format!("3.(2): {} ∪ {} = {}", s(a), s(b), s(cc)));
            }
            if c.d1[a] == c.d0[b] {
                r.check(ab.is_some() || c.cup(c.star[b], c.star[a]).is_some(), || {
                    format!("3.(6): neither {} ∪ {} nor its reverse", s(a), s(b))
                });
            }
        }
    }
    r
}

/// A structure-preserving map of abstract circles.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CircleMap {
    pub points: Vec<usize>,
    pub segments: Vec<usize>,
}

impl CircleMap {
    pub fn audit(&self, a: &AbstractCircle, b: &AbstractCircle) -> AuditReport {
        let mut r = AuditReport::new("circle map");
        for s in 0..a.segments.len() {
            let t = self.segments[s];
            r.check(b.d0[t] == self.points[a.d0[s]] && b.d1[t] == self.points[a.d1[s]], || format!("∂ at {}", a.segments[s]));
            r.check(b.star[t] == self.segments[a.star[s]], || format!("* at {}", a.segments[s]));
        }
        for x in 0..a.points.len() {
            let y = self.points[x];
            r.check(self.segments[a.zero[x]] == b.zero[y], || format!("0 at {}", a.points[x]));
            r.check(self.segments[a.one[x]] == b.one[y], || format!("1 at {}", a.points[x]));
        }
        for (&(s, t), &u) in &a.cup {
            r.check(b.cup(self.segments[s], self.segments[t]) == Some(self.segments[u]), || {
                format!("∪ at {}, {}", a.segments[s], a.segments[t])
            });
        }
        r
    }

    /// A bijective morphism whose inverse also preserves `∪`.
    pub fn is_isomorphism(&self, a: &AbstractCircle, b: &AbstractCircle) -> bool {
        let bij = |v: &[usize], n: usize| {
            let mut s = v.to_vec();
            s.sort();
            s.dedup();
            s.len() == n && v.len() == n
        };
        if !(self.audit(a, b).passed() && bij(&self.points, b.points.len()) && bij(&self.segments, b.segments.len())) {
            return false;
        }
        a.cup.len() == b.cup.len()
    }
}

/// The archimedean set `X_x` rebuilt from an abstract circle at `x`:
/// `L_x` in increasing order, `X_x ≅ (Z, +q)` with `q = |L_x| - 1` via
/// `(n, L_x[i]) ↦ nq + i`.
#[derive(Debug, Clone)]
pub struct ReconstructedArch {
    pub base: usize,
    pub order: Vec<usize>,
}

impl ReconstructedArch {
    pub fn period(&self) -> usize {
        self.order.len() - 1
    }

    pub fn arch(&self) -> FiniteArch {
        FiniteArch { period: self.period() }
    }

    pub fn encode(&self, n: i64, a: usize) -> i64 {
        let i = self.order.iter().position(|&s| s == a).expect("segment in L_x");
        n * self.period() as i64 + i as i64
    }

    pub fn decode(&self, k: i64) -> (i64, usize) {
        let q = self.period() as i64;
        (k.div_euclid(q), self.order[k.rem_euclid(q) as usize])
    }
}

pub fn reconstruct(c: &AbstractCircle, x: usize) -> Result<ReconstructedArch> {
    let audit = circle_axiom_audit(c);
    if !audit.passed() {
        return Err(Error::Invalid(format!("{audit}: {}", audit.failures.first().cloned().unwrap_or_default())));
    }
    if x >= c.points.len() {
        return Err(Error::IndexOutOfRange(format!("point {x}")));
    }
    let mut order = c.fiber(x);
    for &a in &order {
        for &b in &order {
            if a != b && c.le(a, b) == c.le(b, a) {
                return Err(Error::Invalid(format!("{} and {} are not comparable", c.segments[a], c.segments[b])));
            }
        }
    }
    order.sort_by(|&a, &b| {
        if a == b {
            Ordering::Equal
        } else if c.le(a, b) {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    });
    Ok(ReconstructedArch { base: x, order })
}

/// The pair `(p, s)` from `X_x/θ_x` (as `quotient_circle`) to `C`.
pub fn reconstruction_map(c: &AbstractCircle, r: &ReconstructedArch) -> CircleMap {
    let q = r.period();
    let points = (0..q).map(|i| c.d1[r.order[i]]).collect();
    let mut segments = Vec::new();
    for i in 0..q {
        for j in i..=i + q {
            let (n, a) = r.decode(i as i64);
            let (m, b) = r.decode(j as i64);
            let s = if m == n {
                (0..c.segments.len()).find(|&d| c.cup(a, d) == Some(b)).expect("a <= b")
            } else {
                c.cup(c.star[a], b).expect("a* ∪ b exists")
            };
            segments.push(s);
        }
    }
    CircleMap { points, segments }
}

/// A monotone map `(Z, +p) -> (Z, +p')` with `f(x + p) = f(x) + p'`,
/// stored on `0..p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArcMap {
    pub source: usize,
    pub target: usize,
    pub values: Vec<i64>,
}

impl ArcMap {
    pub fn new(source: usize, target: usize, values: Vec<i64>) -> Result<Self> {
        if values.len() != source || source == 0 || target == 0 {
            return Err(Error::InvalidMorphism("one value per source residue is required".into()));
        }
        let f = ArcMap { source, target, values };
        if !f.values.windows(2).all(|w| w[0] <= w[1]) || f.values[source - 1] > f.values[0] + target as i64 {
            return Err(Error::InvalidMorphism(format!("{:?} is not monotone", f.values)));
        }
        Ok(f)
    }

    pub fn identity(p: usize) -> Self {
        ArcMap {
            source: p,
            target: p,
            values: (0..p as i64).collect(),
        }
    }

    pub fn theta(p: usize) -> Self {
        ArcMap {
            source: p,
            target: p,
            values: (0..p as i64).map(|v| v + p as i64).collect(),
        }
    }

    pub fn eval(&self, x: i64) -> i64 {
        let p = self.source as i64;
        self.values[x.rem_euclid(p) as usize] + x.div_euclid(p) * self.target as i64
    }

    /// `self` then `g`.
    pub fn then(&self, g: &ArcMap) -> Result<ArcMap> {
        if self.target != g.source {
            return Err(Error::RankMismatch(format!("periods {} and {}", self.target, g.source)));
        }
        Ok(ArcMap {
            source: self.source,
            target: g.target,
            values: self.values.iter().map(|&v| g.eval(v)).collect(),
        })
    }

    /// Representative of the class modulo `θ'` with `f(0) ∈ [0, p')`.
    pub fn canonical(&self) -> ArcMorphism {
        let k = self.values[0].div_euclid(self.target as i64) * self.target as i64;
        ArcMorphism(ArcMap {
            source: self.source,
            target: self.target,
            values: self.values.iter().map(|v| v - k).collect(),
        })
    }

    /// The induced map of quotient circles.
    pub fn quotient(&self) -> CircleMap {
        let (p, q) = (self.source, self.target);
        let points = (0..p as i64).map(|x| self.eval(x).rem_euclid(q as i64) as usize).collect();
        let mut segments = Vec::new();
        for a in 0..p as i64 {
            for y in a..=a + p as i64 {
                segments.push(normalize(q, self.eval(a), self.eval(y)));
            }
        }
        CircleMap { points, segments }
    }
}

/// A morphism of the category of archimedean sets: a class of `ArcMap`s
/// modulo powers of the target shift, held in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArcMorphism(pub ArcMap);

impl ArcMorphism {
    pub fn compose(&self, g: &ArcMorphism) -> Result<ArcMorphism> {
        Ok(self.0.then(&g.0)?.canonical())
    }

    pub fn to_lambda(&self) -> LambdaMap {
        LambdaMap::new(self.0.source - 1, self.0.target - 1, self.0.values.clone()).expect("same normal form")
    }

    pub fn from_lambda(f: &LambdaMap) -> ArcMorphism {
        ArcMorphism(ArcMap {
            source: f.source + 1,
            target: f.target + 1,
            values: f.values.clone(),
        })
    }
}

/// All classes `(Z, +p) -> (Z, +p')`, enumerated from all candidate
/// value tuples in `[0, 2p')^p`.
pub fn enumerate_arc_morphisms(p: usize, q: usize) -> Vec<ArcMorphism> {
    let hi = 2 * q as i64;
    let mut out = Vec::new();
    let total = (hi as usize).pow(p as u32);
    for code in 0..total {
        let mut c = code;
        let values: Vec<i64> = (0..p)
            .map(|_| {
                let v = (c % hi as usize) as i64;
                c /= hi as usize;
                v
            })
            .collect();
        if values[0] >= q as i64 {
            continue;
        }
        if let Ok(f) = ArcMap::new(p, q, values) {
            out.push(ArcMorphism(f));
        }
    }
    out.sort();
    out
}

/// `ψ_{xy} : X_y -> X_x`, as a map on the integer models of both.
pub fn basepoint_iso(c: &AbstractCircle, x: usize, y: usize) -> Result<ArcMap> {
    let rx = reconstruct(c, x)?;
    let ry = reconstruct(c, y)?;
    let v = if x == y {
        c.zero[x]
    } else {
        *c.segment_between(x, y).first().ok_or_else(|| Error::Invalid("no segment from x to y".into()))?
    };
    let values = (0..ry.period() as i64)
        .map(|k| {
            let (n, b) = ry.decode(k);
            match c.cup(v, b) {
                Some(vb) => rx.encode(n, vb),
                None => {
                    let w = c.cup(c.star[b], c.star[v]).expect("one concatenation exists");
                    rx.encode(n + 1, c.star[w])
                }
            }
        })
        .collect();
    ArcMap::new(ry.period(), rx.period(), values)
}

/// Every circle morphism between the quotients of `(Z, +p)` and
/// `(Z, +q)`, by search over point maps and segment choices.
pub fn enumerate_circle_maps(p: usize, q: usize) -> Vec<CircleMap> {
    let a = quotient_circle(&FiniteArch { period: p });
    let b = quotient_circle(&FiniteArch { period: q });
    let mut out = Vec::new();
    for code in 0..q.pow(p as u32) {
        let mut cc = code;
        let points: Vec<usize> = (0..p)
            .map(|_| {
                let v = cc % q;
                cc /= q;
                v
            })
            .collect();
        let choices: Vec<Vec<usize>> = (0..a.segments.len())
            .map(|s| b.segment_between(points[a.d0[s]], points[a.d1[s]]))
            .collect();
        let mut idx = vec![0usize; choices.len()];
        loop {
            let f = CircleMap {
                points: points.clone(),
                segments: idx.iter().zip(&choices).map(|(&i, ch)| ch[i]).collect(),
            };
            if f.audit(&a, &b).passed() {
                out.push(f);
            }
            let mut k = 0;
            while k < idx.len() {
                idx[k] += 1;
                if idx[k] < choices[k].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == idx.len() {
                break;
            }
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_quotients() {
        let c = quotient_circle(&FiniteArch { period: 3 });
        assert_eq!((c.points.len(), c.segments.len()), (3, 12));
        let c1 = quotient_circle(&FiniteArch { period: 1 });
        assert_eq!((c1.points.len(), c1.segments.len()), (1, 2));
        assert!(circle_axiom_audit(&c).passed());
        assert!(circle_axiom_audit(&c1).passed());
    }

    #[test]
    fn broken_cup_is_caught() {
        let mut c = quotient_circle(&FiniteArch { period: 2 });
        let key = (c.zero[0], c.fiber(0)[1]);
        c.cup.remove(&key);
        let r = circle_axiom_audit(&c);
        assert!(r.failures.iter().any(|f| f.starts_with("3.(5)")));
    }

    #[test]
    fn reconstruction() {
        for p in 1..=4 {
            let c = quotient_circle(&FiniteArch { period: p });
            for x in 0..p {
                let r = reconstruct(&c, x).unwrap();
                assert_eq!(r.period(), p);
                let back = quotient_circle(&r.arch());
                assert!(reconstruction_map(&c, &r).is_isomorphism(&back, &c));
            }
        }
    }

    #[test]
    fn basepoints() {
        let c = quotient_circle(&FiniteArch { period: 3 });
        assert_eq!(basepoint_iso(&c, 1, 1).unwrap(), ArcMap::identity(3));
        let f = basepoint_iso(&c, 0, 2).unwrap();
        let g = basepoint_iso(&c, 2, 0).unwrap();
        assert_eq!(g.then(&f).unwrap(), ArcMap::theta(3));
    }

    #[test]
    fn json_roundtrip() {
        let c = quotient_circle(&FiniteArch { period: 2 });
        assert_eq!(AbstractCircle::from_json(&c.to_json()).unwrap(), c);
    }
}
