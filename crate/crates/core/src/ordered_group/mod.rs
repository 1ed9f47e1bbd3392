//! Left-ordered groups with a positive central element `z`, and the cyclic
//! structure they induce on the interval `[1, z]`.

pub mod pl;

use std::cmp::Ordering;
use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::audit::AuditReport;
use crate::error::{Error, Result};
use crate::interval::{CyclicStructure, Interval, MonotoneSeq};
use crate::rational::{floor, format_rational, parse_rational, sample_unit, Rational};

pub use pl::{PlElement, PlGroup};

/// Steps tried by the generic `z^k v` search before giving up.
pub const GPRIME_STEP_LIMIT: i64 = 4096;

pub trait OrderedGroup: Clone + Debug {
    type Elem: Clone + PartialEq + Debug;

    fn identity(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn compare(&self, a: &Self::Elem, b: &Self::Elem) -> Ordering;
    /// The central element `z`.
    fn central(&self) -> Self::Elem;
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;
    fn show(&self, a: &Self::Elem) -> String;
    fn parse_elem(&self, s: &str) -> Result<Self::Elem>;
    fn name(&self) -> String;

    /// `Some(true)` when `[1, z]` is a finite chain, `Some(false)` when it
    /// has no isolated points.
    fn discrete(&self) -> Option<bool> {
        None
    }

    fn pow(&self, a: &Self::Elem, k: i64) -> Self::Elem {
        let base = if k < 0 { self.inv(a) } else { a.clone() };
        let mut out = self.identity();
        for _ in 0..k.unsigned_abs() {
            out = self.mul(&out, &base);
        }
        out
    }

    fn is_positive(&self, a: &Self::Elem) -> bool {
        self.compare(&self.identity(), a) != Ordering::Greater
    }

    /// `g = z^k v` with `v` in `[1, z)` and `k` maximal with `z^k <= g`.
    fn gprime_canonical(&self, g: &Self::Elem) -> Result<(i64, Self::Elem)> {
        let z = self.central();
        let zi = self.inv(&z);
        let mut k = 0i64;
        let mut v = g.clone(); // invariant: v = z^{-k} g
        while self.compare(&v, &self.identity()) == Ordering::Less {
            if k <= -GPRIME_STEP_LIMIT {
                return Err(Error::NotInGPrime(self.show(g)));
            }
            k -= 1;
            v = self.mul(&z, &v);
        }
        while self.compare(&v, &z) != Ordering::Less {
            if k >= GPRIME_STEP_LIMIT {
                return Err(Error::NotInGPrime(self.show(g)));
            }
            k += 1;
            v = self.mul(&zi, &v);
        }
        Ok((k, v))
    }
}

/// `(Z, +)` with a chosen positive `z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntegerGroup {
    pub z: i64,
}

impl OrderedGroup for IntegerGroup {
    type Elem = i64;

    fn identity(&self) -> i64 {
        0
    }
    fn mul(&self, a: &i64, b: &i64) -> i64 {
        a + b
    }
    fn inv(&self, a: &i64) -> i64 {
        -a
    }
    fn compare(&self, a: &i64, b: &i64) -> Ordering {
        a.cmp(b)
    }
    fn central(&self) -> i64 {
        self.z
    }
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> i64 {
        rng.gen_range(-3 * self.z..=3 * self.z)
    }
    fn show(&self, a: &i64) -> String {
        a.to_string()
    }
    fn parse_elem(&self, s: &str) -> Result<i64> {
        s.trim().parse().map_err(|_| Error::parse(s, "expected an integer"))
    }
    fn name(&self) -> String {
        format!("Z (z = {})", self.z)
    }
    fn discrete(&self) -> Option<bool> {
        Some(true)
    }
    fn gprime_canonical(&self, g: &i64) -> Result<(i64, i64)> {
        Ok((g.div_euclid(self.z), g.rem_euclid(self.z)))
    }
}

/// `(Q, +)` with `z = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RationalGroup;

impl OrderedGroup for RationalGroup {
    type Elem = Rational;

    fn identity(&self) -> Rational {
        Rational::zero()
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn inv(&self, a: &Rational) -> Rational {
        -a
    }
    fn compare(&self, a: &Rational, b: &Rational) -> Ordering {
        a.cmp(b)
    }
    fn central(&self) -> Rational {
        Rational::one()
    }
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Rational {
        Rational::from_integer(BigInt::from(rng.gen_range(-3..=3))) + sample_unit(rng, 24)
    }
    fn show(&self, a: &Rational) -> String {
        format_rational(a)
    }
    fn parse_elem(&self, s: &str) -> Result<Rational> {
        parse_rational(s)
    }
    fn name(&self) -> String {
        "Q (z = 1)".into()
    }
    fn discrete(&self) -> Option<bool> {
        Some(false)
    }
    fn gprime_canonical(&self, g: &Rational) -> Result<(i64, Rational)> {
        let k = floor(g);
        let v = g - Rational::from_integer(k.clone());
        Ok((i64::try_from(k).map_err(|_| Error::NotInGPrime(format_rational(g)))?, v))
    }
}

/// The interval `[1, z]` of an ordered group.
#[derive(Debug, Clone)]
pub struct GroupInterval<G> {
    pub group: G,
}

impl<G: OrderedGroup> Interval for GroupInterval<G> {
    type Elem = G::Elem;

    fn bottom(&self) -> G::Elem {
        self.group.identity()
    }
    fn top(&self) -> G::Elem {
        self.group.central()
    }
    fn compare(&self, a: &G::Elem, b: &G::Elem) -> Ordering {
        self.group.compare(a, b)
    }
    fn contains(&self, a: &G::Elem) -> bool {
        self.group.is_positive(a) && self.group.compare(a, &self.group.central()) != Ordering::Greater
    }
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> G::Elem {
        let g = self.group.sample(rng);
        self.group.gprime_canonical(&g).map(|(_, v)| v).unwrap_or_else(|_| self.group.identity())
    }
    fn show(&self, a: &G::Elem) -> String {
        self.group.show(a)
    }
    fn parse_elem(&self, s: &str) -> Result<G::Elem> {
        let g = self.group.parse_elem(s)?;
        if !self.contains(&g) {
            return Err(Error::parse(s, "outside [1, z]"));
        }
        Ok(g)
    }
    fn isolated(&self, _a: &G::Elem) -> Option<bool> {
        self.group.discrete()
    }
}

/// `(g_0, ..., g_n)` with every `g_i >= 1` and `g_0 ⋯ g_n = z`.
#[derive(Debug, Clone, PartialEq)]
pub struct FTuple<E> {
    pub entries: Vec<E>,
}

impl<E: Clone + PartialEq + Debug> FTuple<E> {
    pub fn new<G: OrderedGroup<Elem = E>>(group: &G, entries: Vec<E>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidSequence("empty tuple".into()));
        }
        if entries.iter().any(|g| !group.is_positive(g)) {
            return Err(Error::InvalidSequence("entries must be >= 1".into()));
        }
        let t = FTuple { entries };
        if t.product(group) != group.central() {
            return Err(Error::InvalidSequence("entries must multiply to z".into()));
        }
        Ok(t)
    }

    pub fn rank(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn product<G: OrderedGroup<Elem = E>>(&self, group: &G) -> E {
        self.entries.iter().fold(group.identity(), |acc, g| group.mul(&acc, g))
    }

    /// Merges `g_j g_{j+1}`.
    pub fn sigma<G: OrderedGroup<Elem = E>>(&self, group: &G, j: usize) -> Result<Self> {
        if j >= self.rank() {
            return Err(Error::IndexOutOfRange(format!("σ_{j} on a tuple of rank {}", self.rank())));
        }
        let mut entries = self.entries.clone();
        let right = entries.remove(j + 1);
        entries[j] = group.mul(&entries[j], &right);
        Ok(FTuple { entries })
    }

    /// Inserts `1` at position `j`.
    pub fn delta<G: OrderedGroup<Elem = E>>(&self, group: &G, j: usize) -> Result<Self> {
        if j > self.rank() + 1 {
            return Err(Error::IndexOutOfRange(format!("δ_{j} on a tuple of rank {}", self.rank())));
        }
        let mut entries = self.entries.clone();
        entries.insert(j, group.identity());
        Ok(FTuple { entries })
    }

    /// Left rotation `(g_1, ..., g_n, g_0)`.
    pub fn tau(&self) -> Self {
        let mut entries = self.entries.clone();
        entries.rotate_left(1);
        FTuple { entries }
    }
}

/// `π(β)_j = β_j^{-1} β_{j+1}`.
pub fn pi_map<G: OrderedGroup>(group: &G, beta: &MonotoneSeq<G::Elem>) -> FTuple<G::Elem> {
    FTuple {
        entries: beta
            .values
            .windows(2)
            .map(|w| group.mul(&group.inv(&w[0]), &w[1]))
            .collect(),
    }
}

/// Partial products `β_j = g_0 ⋯ g_{j-1}`.
pub fn pi_inverse<G: OrderedGroup>(group: &G, g: &FTuple<G::Elem>) -> MonotoneSeq<G::Elem> {
    let mut values = vec![group.identity()];
    for e in &g.entries {
        let next = group.mul(values.last().unwrap(), e);
        values.push(next);
    }
    MonotoneSeq { values }
}

/// The cyclic structure `τ(β)_j = β_1^{-1} β_{j+1}`, `τ(β)_{n+1} = z`.
#[derive(Debug, Clone)]
pub struct GroupCyclicStructure<G> {
    pub interval: GroupInterval<G>,
}

pub fn make_cyclic_structure<G: OrderedGroup>(group: G) -> GroupCyclicStructure<G> {
    GroupCyclicStructure {
        interval: GroupInterval { group },
    }
}

impl<G: OrderedGroup> GroupCyclicStructure<G> {
    pub fn group(&self) -> &G {
        &self.interval.group
    }

    /// The same rotation computed through `π`.
    pub fn tau_via_tuples(&self, beta: &MonotoneSeq<G::Elem>) -> MonotoneSeq<G::Elem> {
        let g = self.group();
        pi_inverse(g, &pi_map(g, beta).tau())
    }
}

impl<G: OrderedGroup> CyclicStructure for GroupCyclicStructure<G> {
    type I = GroupInterval<G>;

    fn interval(&self) -> &GroupInterval<G> {
        &self.interval
    }

    fn tau(&self, beta: &MonotoneSeq<G::Elem>) -> MonotoneSeq<G::Elem> {
        let g = self.group();
        let n = beta.rank();
        let b1inv = g.inv(&beta.values[1]);
        let mut values: Vec<G::Elem> = (0..=n).map(|j| g.mul(&b1inv, &beta.values[j + 1])).collect();
        values.push(g.central());
        MonotoneSeq { values }
    }

    fn name(&self) -> String {
        self.group().name()
    }
}

/// Sampled audit of a left order with central `z`: totality, antisymmetry,
/// transitivity, left invariance, agreement with the positive cone,
/// centrality of `z` and `z > 1`.
pub fn audit_order<G: OrderedGroup>(group: &G, samples: usize, seed: u64) -> AuditReport {
    let mut report = AuditReport::new(format!("left order on {}", group.name()));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let one = group.identity();
    let z = group.central();
    report.check(group.compare(&one, &z) == Ordering::Less, || "z is not > 1".into());
    for _ in 0..samples {
        let a = group.sample(&mut rng);
        let b = if rng.gen_ratio(1, 10) { a.clone() } else { group.sample(&mut rng) };
        let c = group.sample(&mut rng);
        let g = group.sample(&mut rng);
        let ab = group.compare(&a, &b);
        report.check(ab == group.compare(&b, &a).reverse(), || {
            format!("asymmetric comparison of {} and {}", group.show(&a), group.show(&b))
        });
        report.check((ab == Ordering::Equal) == (a == b), || {
            format!("Equal disagrees with equality on {}, {}", group.show(&a), group.show(&b))
        });
        let bc = group.compare(&b, &c);
        if ab != Ordering::Greater && bc != Ordering::Greater {
            report.check(group.compare(&a, &c) != Ordering::Greater, || {
                format!(
                    "transitivity fails on {}, {}, {}",
                    group.show(&a),
                    group.show(&b),
                    group.show(&c)
                )
            });
        }
        let ga = group.mul(&g, &a);
        let gb = group.mul(&g, &b);
        report.check(group.compare(&ga, &gb) == ab, || {
            format!("left translation by {} changes the order", group.show(&g))
        });
        let cone = group.is_positive(&group.mul(&group.inv(&a), &b));
        report.check(cone == (ab != Ordering::Greater), || {
            format!("cone disagrees with order on {}, {}", group.show(&a), group.show(&b))
        });
        report.check(group.mul(&z, &a) == group.mul(&a, &z), || {
            format!("z does not commute with {}", group.show(&a))
        });
    }
    report
}
