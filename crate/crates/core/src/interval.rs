//! Intervals, monotone sequences `n* -> I`, and cyclic structures on them.

use std::cmp::Ordering;
use std::fmt::Debug;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::audit::AuditReport;
use crate::cyclic::{FinMap, LambdaMap};
use crate::error::{Error, Result};
use crate::rational::{format_rational, parse_rational, sample_unit, Rational};
use crate::relations::{self, Generator};
use crate::simplicial::DeltaMap;

/// A totally ordered set with distinct least and greatest elements.
pub trait Interval: Clone + Debug {
    type Elem: Clone + PartialEq + Debug;

    fn bottom(&self) -> Self::Elem;
    fn top(&self) -> Self::Elem;
    fn compare(&self, a: &Self::Elem, b: &Self::Elem) -> Ordering;
    fn contains(&self, a: &Self::Elem) -> bool;
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;
    fn show(&self, a: &Self::Elem) -> String;
    fn parse_elem(&self, s: &str) -> Result<Self::Elem>;

    fn le(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.compare(a, b) != Ordering::Greater
    }

    fn lt(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.compare(a, b) == Ordering::Less
    }

    /// Whether `a` is an open point of `I/(b ~ t)` for the order topology,
    /// when the model knows.
    fn isolated(&self, _a: &Self::Elem) -> Option<bool> {
        None
    }
}

/// `n* = {0, 1, ..., n+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FiniteInterval {
    pub n: usize,
}

impl Interval for FiniteInterval {
    type Elem = usize;

    fn bottom(&self) -> usize {
        0
    }
    fn top(&self) -> usize {
        self.n + 1
    }
    fn compare(&self, a: &usize, b: &usize) -> Ordering {
        a.cmp(b)
    }
    fn contains(&self, a: &usize) -> bool {
        *a <= self.n + 1
    }
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> usize {
        rng.gen_range(0..=self.n + 1)
    }
    fn show(&self, a: &usize) -> String {
        a.to_string()
    }
    fn parse_elem(&self, s: &str) -> Result<usize> {
        let v: usize = s.trim().parse().map_err(|_| Error::parse(s, "expected a natural number"))?;
        if !self.contains(&v) {
            return Err(Error::parse(s, format!("outside [0, {}]", self.n + 1)));
        }
        Ok(v)
    }
    fn isolated(&self, _a: &usize) -> Option<bool> {
        Some(true)
    }
}

/// `[0, 1]` in the rationals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RationalUnit;

/// Largest denominator drawn by `RationalUnit::sample`.
pub const SAMPLE_DENOMINATOR: i64 = 24;

impl Interval for RationalUnit {
    type Elem = Rational;

    fn bottom(&self) -> Rational {
        Rational::zero()
    }
    fn top(&self) -> Rational {
        Rational::one()
    }
    fn compare(&self, a: &Rational, b: &Rational) -> Ordering {
        a.cmp(b)
    }
    fn contains(&self, a: &Rational) -> bool {
        *a >= Rational::zero() && *a <= Rational::one()
    }
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Rational {
        sample_unit(rng, SAMPLE_DENOMINATOR)
    }
    fn show(&self, a: &Rational) -> String {
        format_rational(a)
    }
    fn parse_elem(&self, s: &str) -> Result<Rational> {
        let r = parse_rational(s)?;
        if !self.contains(&r) {
            return Err(Error::parse(s, "outside [0, 1]"));
        }
        Ok(r)
    }
    fn isolated(&self, _a: &Rational) -> Option<bool> {
        Some(false)
    }
}

/// A point of [`AccumulationInterval`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpikePoint {
    Bottom,
    /// `u - 1/k`, for `k >= 1`.
    Below(u64),
    Limit,
    /// `u + 1/k`, for `k >= 1`.
    Above(u64),
    Top,
}

impl SpikePoint {
    fn key(&self) -> (u8, i128) {
        match *self {
            SpikePoint::Bottom => (0, 0),
            SpikePoint::Below(k) => (1, k as i128),
            SpikePoint::Limit => (2, 0),
            SpikePoint::Above(k) => (3, -(k as i128)),
            SpikePoint::Top => (4, 0),
        }
    }
}

/// `b < u - 1 < u - 1/2 < ... < u < ... < u + 1/2 < u + 1 < t`: every point
/// is isolated except `u`, so `I/(b ~ t)` is not homogeneous and carries no
/// cyclic structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct AccumulationInterval;

impl Interval for AccumulationInterval {
    type Elem = SpikePoint;

    fn bottom(&self) -> SpikePoint {
        SpikePoint::Bottom
    }
    fn top(&self) -> SpikePoint {
        SpikePoint::Top
    }
    fn compare(&self, a: &SpikePoint, b: &SpikePoint) -> Ordering {
        a.key().cmp(&b.key())
    }
    fn contains(&self, a: &SpikePoint) -> bool {
        !matches!(a, SpikePoint::Below(0) | SpikePoint::Above(0))
    }
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> SpikePoint {
        match rng.gen_range(0..8) {
            0 => SpikePoint::Bottom,
            1 => SpikePoint::Top,
            2 => SpikePoint::Limit,
            3..=5 => SpikePoint::Below(rng.gen_range(1..=40)),
            _ => SpikePoint::Above(rng.gen_range(1..=40)),
        }
    }
    fn show(&self, a: &SpikePoint) -> String {
        match a {
            SpikePoint::Bottom => "b".into(),
            SpikePoint::Below(k) => format!("u-1/{k}"),
            SpikePoint::Limit => "u".into(),
            SpikePoint::Above(k) => format!("u+1/{k}"),
            SpikePoint::Top => "t".into(),
        }
    }
    fn parse_elem(&self, s: &str) -> Result<SpikePoint> {
        let t = s.trim();
        let side = |rest: &str| -> Result<u64> {
            rest.strip_prefix("1/")
                .and_then(|k| k.parse().ok())
                .filter(|&k| k >= 1)
                .ok_or_else(|| Error::parse(s, "expected u-1/k or u+1/k with k >= 1"))
        };
        match t {
            "b" => Ok(SpikePoint::Bottom),
            "t" => Ok(SpikePoint::Top),
            "u" => Ok(SpikePoint::Limit),
            _ => {
                if let Some(r) = t.strip_prefix("u-") {
                    Ok(SpikePoint::Below(side(r)?))
                } else if let Some(r) = t.strip_prefix("u+") {
                    Ok(SpikePoint::Above(side(r)?))
                } else {
                    Err(Error::parse(s, "expected b, t, u, u-1/k or u+1/k"))
                }
            }
        }
    }
    fn isolated(&self, a: &SpikePoint) -> Option<bool> {
        Some(*a != SpikePoint::Limit)
    }
}

/// An endpoint-preserving monotone map `n* -> I`, stored as
/// `β_0 = b <= β_1 <= ... <= β_{n+1} = t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonotoneSeq<E> {
    pub values: Vec<E>,
}

impl<E: Clone + PartialEq + Debug> MonotoneSeq<E> {
    pub fn new<I: Interval<Elem = E>>(interval: &I, values: Vec<E>) -> Result<Self> {
        if values.len() < 2 {
            return Err(Error::InvalidSequence("needs at least the two endpoints".into()));
        }
        if values[0] != interval.bottom() || values[values.len() - 1] != interval.top() {
            return Err(Error::InvalidSequence("must start at the bottom and end at the top".into()));
        }
        if let Some(v) = values.iter().find(|v| !interval.contains(v)) {
            return Err(Error::InvalidSequence(format!("{} is outside the interval", interval.show(v))));
        }
        if values.windows(2).any(|w| interval.lt(&w[1], &w[0])) {
            return Err(Error::InvalidSequence("values must be non-decreasing".into()));
        }
        Ok(MonotoneSeq { values })
    }

    pub fn rank(&self) -> usize {
        self.values.len() - 2
    }

    pub fn get(&self, i: usize) -> &E {
        &self.values[i]
    }

    /// `σ_j` on `F((n+1)*) -> F(n*)`: drops `β_{j+1}`.
    pub fn sigma(&self, j: usize) -> Result<Self> {
        if self.rank() == 0 || j >= self.rank() {
            return Err(Error::IndexOutOfRange(format!("σ_{j} on a sequence of rank {}", self.rank())));
        }
        let mut values = self.values.clone();
        values.remove(j + 1);
        Ok(MonotoneSeq { values })
    }

    /// `δ_j` on `F((n-1)*) -> F(n*)`: repeats `β_j`.
    pub fn delta(&self, j: usize) -> Result<Self> {
        if j > self.rank() + 1 {
            return Err(Error::IndexOutOfRange(format!("δ_{j} on a sequence of rank {}", self.rank())));
        }
        let mut values = self.values.clone();
        let dup = values[j].clone();
        values.insert(j + 1, dup);
        Ok(MonotoneSeq { values })
    }

    /// Covariant action of a simplicial map `φ : [n] -> [m]` on a rank `n`
    /// sequence, through the generator factorisation.
    pub fn act(&self, phi: &DeltaMap) -> Result<Self> {
        if phi.source != self.rank() {
            return Err(Error::RankMismatch(format!(
                "map from [{}] acting on a sequence of rank {}",
                phi.source,
                self.rank()
            )));
        }
        let (deltas, sigmas) = phi.epi_mono_factor();
        let mut out = self.clone();
        for &j in sigmas.iter().rev() {
            out = out.sigma(j)?;
        }
        for &j in deltas.iter().rev() {
            out = out.delta(j)?;
        }
        Ok(out)
    }

    /// Same action computed as `β ∘ dual(φ)`.
    pub fn act_direct(&self, phi: &DeltaMap) -> Result<Self> {
        if phi.source != self.rank() {
            return Err(Error::RankMismatch(format!(
                "map from [{}] acting on a sequence of rank {}",
                phi.source,
                self.rank()
            )));
        }
        let d = phi.dual();
        Ok(MonotoneSeq {
            values: d.values.iter().map(|&x| self.values[x].clone()).collect(),
        })
    }

    /// Applies a word covariantly (rightmost generator first), with `τ`
    /// supplied by `tau`.
    pub fn act_word(&self, word: &[Generator], tau: &impl Fn(&Self) -> Self) -> Result<Self> {
        let mut out = self.clone();
        for g in word.iter().rev() {
            if g.source() != out.rank() {
                return Err(Error::RankMismatch(format!("{g} on rank {}", out.rank())));
            }
            out = match *g {
                Generator::Sigma { j, .. } => out.sigma(j)?,
                Generator::Delta { j, .. } => out.delta(j)?,
                Generator::Tau { .. } => tau(&out),
            };
        }
        Ok(out)
    }

    pub fn is_strict<I: Interval<Elem = E>>(&self, interval: &I) -> bool {
        self.values.windows(2).all(|w| interval.lt(&w[0], &w[1]))
    }
}

/// Draws a rank `n` sequence; roughly one value in five repeats a
/// neighbour so that degenerate sequences are exercised.
pub fn sample_seq<I: Interval, R: Rng + ?Sized>(interval: &I, n: usize, rng: &mut R) -> MonotoneSeq<I::Elem> {
    let mut inner: Vec<I::Elem> = Vec::with_capacity(n);
    for _ in 0..n {
        let v = if !inner.is_empty() && rng.gen_ratio(1, 5) {
            inner[rng.gen_range(0..inner.len())].clone()
        } else if rng.gen_ratio(1, 12) {
            if rng.gen_bool(0.5) {
                interval.bottom()
            } else {
                interval.top()
            }
        } else {
            interval.sample(rng)
        };
        inner.push(v);
    }
    inner.sort_by(|a, b| interval.compare(a, b));
    let mut values = Vec::with_capacity(n + 2);
    values.push(interval.bottom());
    values.extend(inner);
    values.push(interval.top());
    MonotoneSeq { values }
}

/// Every rank `k` sequence in `n*`.
pub fn enumerate_finite_seqs(interval: &FiniteInterval, k: usize) -> Vec<MonotoneSeq<usize>> {
    crate::simplicial::enumerate_interval_maps(k, interval.n)
        .into_iter()
        .map(|f| MonotoneSeq { values: f.values })
        .collect()
}

/// Barycentric coordinates `u_0, ..., u_n` of a point of the standard simplex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BarycentricPoint {
    pub coords: Vec<Rational>,
}

impl BarycentricPoint {
    pub fn new(coords: Vec<Rational>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::InvalidSequence("a simplex point needs a coordinate".into()));
        }
        if coords.iter().any(|c| *c < Rational::zero()) {
            return Err(Error::InvalidSequence("negative barycentric coordinate".into()));
        }
        let total: Rational = coords.iter().sum();
        if !total.is_one() {
            return Err(Error::InvalidSequence(format!("coordinates sum to {}", format_rational(&total))));
        }
        Ok(BarycentricPoint { coords })
    }

    pub fn rank(&self) -> usize {
        self.coords.len() - 1
    }
}

/// `u_j = β_{j+1} - β_j`.
pub fn simplex_encode(beta: &MonotoneSeq<Rational>) -> BarycentricPoint {
    BarycentricPoint {
        coords: beta.values.windows(2).map(|w| &w[1] - &w[0]).collect(),
    }
}

/// Partial sums `β_a = u_0 + ... + u_{a-1}`.
pub fn simplex_decode(u: &BarycentricPoint) -> MonotoneSeq<Rational> {
    let mut values = Vec::with_capacity(u.coords.len() + 1);
    let mut acc = Rational::zero();
    values.push(acc.clone());
    for c in &u.coords {
        acc += c;
        values.push(acc.clone());
    }
    MonotoneSeq { values }
}

/// Affine extension of the vertex map `v_j ↦ v_{f(j)}`.
pub fn fin_affine_act(f: &FinMap, u: &BarycentricPoint) -> Result<BarycentricPoint> {
    if f.source != u.rank() {
        return Err(Error::RankMismatch(format!(
            "map from {} points acting on a point with {} coordinates",
            f.source + 1,
            u.coords.len()
        )));
    }
    let mut coords = vec![Rational::zero(); f.target + 1];
    for (j, c) in u.coords.iter().enumerate() {
        coords[f.values[j]] += c;
    }
    Ok(BarycentricPoint { coords })
}

/// An extension of the interval functor from Δ to Λ, given by its value on
/// the rotations `τ_n`.
pub trait CyclicStructure {
    type I: Interval;

    fn interval(&self) -> &Self::I;

    fn tau(&self, beta: &SeqOf<Self>) -> SeqOf<Self>;

    fn name(&self) -> String;

    fn tau_pow(&self, beta: &SeqOf<Self>, a: usize) -> SeqOf<Self> {
        let mut out = beta.clone();
        for _ in 0..a {
            out = self.tau(&out);
        }
        out
    }

    /// Action of an arbitrary cyclic morphism, via `f = j(h) ∘ τ^a`.
    fn act(&self, f: &LambdaMap, beta: &SeqOf<Self>) -> Result<SeqOf<Self>> {
        if f.source != beta.rank() {
            return Err(Error::RankMismatch(format!(
                "map from [{}] acting on a sequence of rank {}",
                f.source,
                beta.rank()
            )));
        }
        let (h, a) = f.decompose();
        self.tau_pow(beta, a).act(&h)
    }
}

pub type ElemOf<C> = <<C as CyclicStructure>::I as Interval>::Elem;
pub type SeqOf<C> = MonotoneSeq<ElemOf<C>>;

/// Checks `τ^{n+1} = id` and the two mixed relation families on sampled
/// sequences, and that each `τ_n` returns a valid sequence.
/// A necessary condition for a cyclic structure: all points of
/// `I/(b ~ t)` look alike locally. Points whose type the model does not
/// know are skipped.
pub fn homogeneity_audit<I: Interval>(interval: &I, samples: usize, seed: u64) -> AuditReport {
    let mut report = AuditReport::new("homogeneity of I/(b ~ t)");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base = interval.bottom();
    let base_type = interval.isolated(&base);
    for _ in 0..samples {
        let x = interval.sample(&mut rng);
        if interval.compare(&x, &interval.top()) == Ordering::Equal {
            continue;
        }
        if let (Some(b), Some(t)) = (base_type, interval.isolated(&x)) {
            report.check(b == t, || {
                let kind = |open: bool| if open { "isolated" } else { "a limit point" };
                format!("the base point is {} but {} is {}", kind(b), interval.show(&x), kind(t))
            });
        }
    }
    report
}

pub fn cyclic_audit<C: CyclicStructure + ?Sized>(cs: &C, n_max: usize, samples: usize, seed: u64) -> AuditReport {
    let mut report = AuditReport::new(format!("cyclic structure {}", cs.name()));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let interval = cs.interval();
    let tau = |b: &SeqOf<C>| cs.tau(b);
    for rel in relations::lambda_relations(n_max) {
        let src = rel.source();
        for _ in 0..samples {
            let beta = sample_seq(interval, src, &mut rng);
            let l = beta.act_word(&rel.lhs, &tau);
            let r = beta.act_word(&rel.rhs, &tau);
            let ok = matches!((&l, &r), (Ok(a), Ok(b)) if a == b);
            report.check(ok, || format!("{rel} on {:?}: {l:?} vs {r:?}", beta.values));
        }
    }
    for n in 0..=n_max {
        for _ in 0..samples {
            let beta = sample_seq(interval, n, &mut rng);
            let t = cs.tau(&beta);
            let ok = MonotoneSeq::new(interval, t.values.clone()).is_ok() && t.rank() == n;
            report.check(ok, || format!("τ_{n} of {:?} is not a sequence: {:?}", beta.values, t.values));
        }
    }
    report
}

/// The unique cyclic structure on `n*`: rotate the gaps.
#[derive(Debug, Clone, Copy)]
pub struct FiniteCyclicStructure {
    pub interval: FiniteInterval,
}

impl FiniteCyclicStructure {
    pub fn new(n: usize) -> Self {
        FiniteCyclicStructure {
            interval: FiniteInterval { n },
        }
    }
}

impl CyclicStructure for FiniteCyclicStructure {
    type I = FiniteInterval;

    fn interval(&self) -> &FiniteInterval {
        &self.interval
    }

    fn tau(&self, beta: &MonotoneSeq<usize>) -> MonotoneSeq<usize> {
        let mut gaps: Vec<usize> = beta.values.windows(2).map(|w| w[1] - w[0]).collect();
        gaps.rotate_left(1);
        let mut values = vec![0];
        for g in gaps {
            values.push(values.last().unwrap() + g);
        }
        MonotoneSeq { values }
    }

    fn name(&self) -> String {
        format!("finite:{}", self.interval.n)
    }
}

/// The standard simplex with the affine vertex action `v_j ↦ v_{μ(f)(j)}`.
#[derive(Debug, Clone, Copy, Default)]
pub struct SimplexCyclicStructure {
    pub interval: RationalUnit,
}

impl CyclicStructure for SimplexCyclicStructure {
    type I = RationalUnit;

    fn interval(&self) -> &RationalUnit {
        &self.interval
    }

    fn tau(&self, beta: &MonotoneSeq<Rational>) -> MonotoneSeq<Rational> {
        self.act(&LambdaMap::tau(beta.rank()), beta).expect("ranks agree")
    }

    fn name(&self) -> String {
        "simplex".into()
    }

    fn act(&self, f: &LambdaMap, beta: &MonotoneSeq<Rational>) -> Result<MonotoneSeq<Rational>> {
        let u = fin_affine_act(&f.mu(), &simplex_encode(beta))?;
        Ok(simplex_decode(&u))
    }
}

/// Wraps a structure and breaks `τ_1` (it becomes the identity); used as
/// a negative control for the auditors.
#[derive(Debug, Clone)]
pub struct CorruptedStructure<C> {
    pub inner: C,
}

impl<C: CyclicStructure> CyclicStructure for CorruptedStructure<C> {
    type I = C::I;

    fn interval(&self) -> &C::I {
        self.inner.interval()
    }

    fn tau(&self, beta: &SeqOf<Self>) -> SeqOf<Self> {
        if beta.rank() == 1 {
            beta.clone()
        } else {
            self.inner.tau(beta)
        }
    }

    fn name(&self) -> String {
        format!("corrupted {}", self.inner.name())
    }
}
