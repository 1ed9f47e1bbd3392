//! Realization of a finite simplicial set at an interval, the circle
//! `|C|` it produces, its group law and cocycle, and the extension group.

use std::cmp::Ordering;
use std::fmt::Debug;

use num_traits::One;
use rand::Rng;

use crate::audit::AuditReport;
use crate::cyclic_set::{FiniteCyclicSet, FiniteSimplicialSet};
use crate::error::{Error, Result};
use crate::interval::{cyclic_audit, homogeneity_audit, CyclicStructure, ElemOf, Interval, MonotoneSeq};
use crate::ordered_group::{audit_order, make_cyclic_structure, OrderedGroup};
use crate::rational::Rational;

/// A point of `S ⊗ p_I` in canonical form: a nondegenerate cell at level
/// `n` paired with a strictly increasing rank `n` sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RealizationPoint<E> {
    pub level: usize,
    pub cell: usize,
    pub seq: MonotoneSeq<E>,
}

/// Reduces `(x, β)` to canonical form by pushing repeated values of `β`
/// into faces of `x` and degeneracies of `x` into `β`.
pub fn reduce<I: Interval>(
    set: &FiniteSimplicialSet,
    interval: &I,
    cell: usize,
    seq: &MonotoneSeq<I::Elem>,
) -> Result<RealizationPoint<I::Elem>> {
    let n = seq.rank();
    if n > set.truncation {
        return Err(Error::TruncationMismatch(n, set.truncation));
    }
    if cell >= set.level_size(n) {
        return Err(Error::IndexOutOfRange(format!("cell {cell} at level {n}")));
    }
    let mut x = cell;
    let mut beta = seq.clone();
    loop {
        let n = beta.rank();
        if let Some(j) = beta
            .values
            .windows(2)
            .position(|w| interval.compare(&w[0], &w[1]) == Ordering::Equal)
        {
            // β is δ_j applied to β without entry j+1
            x = set.delta[n][j][x];
            beta.values.remove(j + 1);
            continue;
        }
        if n > 0 {
            let found = set.sigma[n - 1]
                .iter()
                .enumerate()
                .find_map(|(j, t)| t.iter().position(|&y| y == x).map(|y| (j, y)));
            if let Some((j, y)) = found {
                x = y;
                beta = beta.sigma(j)?;
                continue;
            }
        }
        return Ok(RealizationPoint {
            level: n,
            cell: x,
            seq: beta,
        });
    }
}

/// Identifies the top of the interval with the bottom.
pub fn glue<I: Interval>(interval: &I, u: &I::Elem) -> I::Elem {
    if *u == interval.top() {
        interval.bottom()
    } else {
        u.clone()
    }
}

pub fn is_base<I: Interval>(interval: &I, u: &I::Elem) -> bool {
    *u == interval.bottom() || *u == interval.top()
}

/// `ι(τ^a, w) = w(a)` on the realization of `C`; cell `a` of level `n`
/// is `τ^a` in the `circle` indexing.
pub fn iota<I: Interval>(interval: &I, p: &RealizationPoint<I::Elem>) -> I::Elem {
    glue(interval, &p.seq.values[p.cell])
}

/// The canonical representative of a circle point.
pub fn iota_inverse<I: Interval>(interval: &I, u: &I::Elem) -> RealizationPoint<I::Elem> {
    if is_base(interval, u) {
        RealizationPoint {
            level: 0,
            cell: 0,
            seq: MonotoneSeq {
                values: vec![interval.bottom(), interval.top()],
            },
        }
    } else {
        RealizationPoint {
            level: 1,
            cell: 1,
            seq: MonotoneSeq {
                values: vec![interval.bottom(), u.clone(), interval.top()],
            },
        }
    }
}

fn rank1<I: Interval>(interval: &I, x: &I::Elem) -> MonotoneSeq<I::Elem> {
    MonotoneSeq {
        values: vec![interval.bottom(), x.clone(), interval.top()],
    }
}

fn rank2<I: Interval>(interval: &I, x: &I::Elem, y: &I::Elem) -> MonotoneSeq<I::Elem> {
    MonotoneSeq {
        values: vec![interval.bottom(), x.clone(), y.clone(), interval.top()],
    }
}

/// `τ_1(x)`, the middle value of `τ_1(b, x, t)`.
pub fn tau1<C: CyclicStructure>(cs: &C, x: &ElemOf<C>) -> ElemOf<C> {
    cs.tau(&rank1(cs.interval(), x)).values[1].clone()
}

/// The group law on `I/(b ~ t)` read off the two triangles of `C × C`.
pub fn circle_mul<C: CyclicStructure>(cs: &C, x: &ElemOf<C>, y: &ElemOf<C>) -> ElemOf<C> {
    let i = cs.interval();
    if is_base(i, x) {
        return glue(i, y);
    }
    if is_base(i, y) {
        return glue(i, x);
    }
    let tx = tau1(cs, x);
    let v = if i.le(&tx, y) {
        cs.tau(&rank2(i, &tx, y)).values[1].clone()
    } else {
        cs.tau_pow(&rank2(i, y, &tx), 2).values[2].clone()
    };
    glue(i, &v)
}

pub fn circle_inv<C: CyclicStructure>(cs: &C, x: &ElemOf<C>) -> ElemOf<C> {
    let i = cs.interval();
    if is_base(i, x) {
        i.bottom()
    } else {
        glue(i, &tau1(cs, x))
    }
}

/// The normalized cocycle: `1` when `τ_1(x) <= y`, else `0`.
pub fn cocycle<C: CyclicStructure>(cs: &C, x: &ElemOf<C>, y: &ElemOf<C>) -> i64 {
    let i = cs.interval();
    if is_base(i, x) || is_base(i, y) {
        return 0;
    }
    i64::from(i.le(&tau1(cs, x), y))
}

/// `ρ(x, y) = [x <= y]` away from the base point.
pub fn rho<I: Interval>(interval: &I, x: &I::Elem, y: &I::Elem) -> i64 {
    if is_base(interval, x) || is_base(interval, y) {
        return 0;
    }
    i64::from(interval.le(x, y))
}

/// The left-invariant three-variable form `c(w_0⁻¹w_1, w_1⁻¹w_2)`.
pub fn cocycle_tilde<C: CyclicStructure>(cs: &C, w: [&ElemOf<C>; 3]) -> i64 {
    let a = circle_mul(cs, &circle_inv(cs, w[0]), w[1]);
    let b = circle_mul(cs, &circle_inv(cs, w[1]), w[2]);
    cocycle(cs, &a, &b)
}

/// `Σ_j (-1)^j c̃(w_0, …, ŵ_j, …, w_3)`.
pub fn coc3_defect<C: CyclicStructure>(cs: &C, w: [&ElemOf<C>; 4]) -> i64 {
    (0..4)
        .map(|j| {
            let rest: Vec<&ElemOf<C>> = (0..4).filter(|&k| k != j).map(|k| w[k]).collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * cocycle_tilde(cs, [rest[0], rest[1], rest[2]])
        })
        .sum()
}

/// The order-theoretic 2-cochain: 0 when `x = y`, `y = z`, or `y` lies
/// weakly between `x < z` (resp. strictly outside `[z, x]` when `z < x`).
pub fn omega<I: Interval>(interval: &I, x: &I::Elem, y: &I::Elem, z: &I::Elem) -> i64 {
    if x == y || y == z {
        return 0;
    }
    let within = |lo: &I::Elem, hi: &I::Elem| interval.le(lo, y) && interval.le(y, hi);
    if interval.lt(x, z) && within(x, z) {
        return 0;
    }
    if interval.lt(z, x) && !within(z, x) {
        return 0;
    }
    1
}

/// Circle distance from `x` forward to `y` on `[0, 1)`.
pub fn ell(x: &Rational, y: &Rational) -> Rational {
    if x <= y {
        y - x
    } else {
        Rational::one() - (x - y)
    }
}

/// `(k, x)` in `(Z × I)/~`, with `x` never the top.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtensionElement<E> {
    pub k: i64,
    pub x: E,
}

/// The central extension of `|C|` by `Z` defined by the cocycle, with the
/// lexicographic order.
#[derive(Debug, Clone)]
pub struct ExtensionGroup<C> {
    pub cs: C,
}

impl<C> ExtensionGroup<C>
where
    C: CyclicStructure + Clone + Debug,
{
    pub fn element(&self, k: i64, x: ElemOf<C>) -> ExtensionElement<ElemOf<C>> {
        let i = self.cs.interval();
        if x == i.top() {
            ExtensionElement { k: k + 1, x: i.bottom() }
        } else {
            ExtensionElement { k, x }
        }
    }

    /// `c(n) = (n, 1)`.
    pub fn central_power(&self, n: i64) -> ExtensionElement<ElemOf<C>> {
        ExtensionElement {
            k: n,
            x: self.cs.interval().bottom(),
        }
    }

    /// Order through the positive cone `{(n, x) : n >= 0}`.
    pub fn compare_by_cone(&self, a: &ExtensionElement<ElemOf<C>>, b: &ExtensionElement<ElemOf<C>>) -> Ordering {
        if a == b {
            return Ordering::Equal;
        }
        if self.mul(&self.inv(a), b).k >= 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl<C> OrderedGroup for ExtensionGroup<C>
where
    C: CyclicStructure + Clone + Debug,
{
    type Elem = ExtensionElement<ElemOf<C>>;

    fn identity(&self) -> Self::Elem {
        self.central_power(0)
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        ExtensionElement {
            k: a.k + b.k + cocycle(&self.cs, &a.x, &b.x),
            x: circle_mul(&self.cs, &a.x, &b.x),
        }
    }

    fn inv(&self, a: &Self::Elem) -> Self::Elem {
        let i = self.cs.interval();
        if is_base(i, &a.x) {
            self.central_power(-a.k)
        } else {
            ExtensionElement {
                k: -a.k - 1,
                x: circle_inv(&self.cs, &a.x),
            }
        }
    }

    fn compare(&self, a: &Self::Elem, b: &Self::Elem) -> Ordering {
        a.k.cmp(&b.k).then_with(|| self.cs.interval().compare(&a.x, &b.x))
    }

    fn central(&self) -> Self::Elem {
        self.central_power(1)
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem {
        let i = self.cs.interval();
        let k = rng.gen_range(-3..=3);
        let x = if rng.gen_ratio(1, 10) { i.bottom() } else { i.sample(rng) };
        self.element(k, x)
    }

    fn show(&self, a: &Self::Elem) -> String {
        format!("({}, {})", a.k, self.cs.interval().show(&a.x))
    }

    /// `k:x`.
    fn parse_elem(&self, s: &str) -> Result<Self::Elem> {
        let (k, x) = s
            .split_once(':')
            .ok_or_else(|| Error::parse(s, "expected k:x"))?;
        let k: i64 = k.trim().parse().map_err(|_| Error::parse(k, "expected an integer"))?;
        let x = self.cs.interval().parse_elem(x.trim())?;
        Ok(self.element(k, x))
    }

    fn name(&self) -> String {
        format!("extension of {}", self.cs.name())
    }

    fn gprime_canonical(&self, g: &Self::Elem) -> Result<(i64, Self::Elem)> {
        Ok((g.k, ExtensionElement { k: 0, x: g.x.clone() }))
    }
}

/// Builds the extension group after checking homogeneity and the
/// relations of `cs` on samples.
pub fn classify<C>(cs: C, samples: usize, seed: u64) -> Result<ExtensionGroup<C>>
where
    C: CyclicStructure + Clone + Debug,
{
    let report = homogeneity_audit(cs.interval(), samples.max(50), seed);
    if !report.passed() {
        return Err(Error::NotCyclicStructure(format!("{report}: {}", report.failures[0])));
    }
    let report = cyclic_audit(&cs, 3, samples, seed);
    if !report.passed() {
        return Err(Error::NotCyclicStructure(format!("{report}: {}", report.failures.join("; "))));
    }
    Ok(ExtensionGroup { cs })
}

/// Classifies the structure a group induces on `[1, z]` and compares the
/// result with the group through `g = z^k v ↦ (k, v)`: a bijection on
/// samples that respects products, order and `z`.
pub fn roundtrip_audit<G>(group: &G, samples: usize, seed: u64) -> AuditReport
where
    G: OrderedGroup,
{
    use rand::SeedableRng;
    let mut report = AuditReport::new(format!("classification round trip for {}", group.name()));
    let ext = match classify(make_cyclic_structure(group.clone()), samples.min(100), seed) {
        Ok(e) => e,
        Err(e) => {
            report.check(false, || e.to_string());
            return report;
        }
    };
    report.merge(audit_order(&ext, samples, seed));
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let to_ext = |g: &G::Elem| -> Option<ExtensionElement<G::Elem>> {
        group.gprime_canonical(g).ok().map(|(k, v)| ExtensionElement { k, x: v })
    };
    report.check(to_ext(&group.central()) == Some(ext.central()), || "z does not map to c(1)".into());
    for _ in 0..samples {
        let g = group.sample(&mut rng);
        let h = group.sample(&mut rng);
        let (Some(eg), Some(eh)) = (to_ext(&g), to_ext(&h)) else {
            report.check(false, || format!("{} is not of the form z^k v", group.show(&g)));
            continue;
        };
        let back = group.mul(&group.pow(&group.central(), eg.k), &eg.x);
        report.check(back == g, || format!("z^k v does not rebuild {}", group.show(&g)));
        report.check(to_ext(&group.mul(&g, &h)) == Some(ext.mul(&eg, &eh)), || {
            format!("product of {} and {} not preserved", group.show(&g), group.show(&h))
        });
        report.check(group.compare(&g, &h) == ext.compare(&eg, &eh), || {
            format!("order of {} and {} not preserved", group.show(&g), group.show(&h))
        });
    }
    report
}

/// Right action of a circle point on a realization point of a cyclic set:
/// lift both to a common sequence `u` with `u(a) = g`, then act by
/// `(x τ^{-a}, τ^a u)` and reduce.
pub fn right_action<C: CyclicStructure>(
    set: &FiniteCyclicSet,
    cs: &C,
    p: &RealizationPoint<ElemOf<C>>,
    g: &ElemOf<C>,
) -> Result<RealizationPoint<ElemOf<C>>> {
    let i = cs.interval();
    if is_base(i, g) {
        return Ok(p.clone());
    }
    let beta = &p.seq;
    let n = beta.rank();
    let inner = &beta.values[1..=n];
    let (x, u, a) = match inner.iter().position(|v| v == g) {
        Some(k) => (p.cell, beta.clone(), k + 1),
        None => {
            let pos = 1 + inner.iter().filter(|v| i.lt(v, g)).count();
            if n + 1 > set.truncation() {
                return Err(Error::TruncationMismatch(n + 1, set.truncation()));
            }
            let mut values = beta.values.clone();
            values.insert(pos, g.clone());
            (set.simplicial.sigma[n][pos - 1][p.cell], MonotoneSeq { values }, pos)
        }
    };
    let level = u.rank();
    let x = set.tau_pow(level, x, (level + 1 - a) % (level + 1));
    let v = cs.tau_pow(&u, a);
    reduce(&set.simplicial, i, x, &v)
}

/// `ℓ(y, z) - ℓ(x, z) + ℓ(x, y)`.
pub fn ell_coboundary(x: &Rational, y: &Rational, z: &Rational) -> Rational {
    ell(y, z) - ell(x, z) + ell(x, y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclic_set::circle;
    use crate::interval::{FiniteCyclicStructure, RationalUnit, SimplexCyclicStructure};
    use crate::ordered_group::{IntegerGroup, RationalGroup};
    use crate::rational::rat;

    #[test]
    fn rational_examples() {
        let cs = SimplexCyclicStructure::default();
        assert_eq!(circle_mul(&cs, &rat(1, 4), &rat(1, 2)), rat(3, 4));
        assert_eq!(circle_mul(&cs, &rat(3, 4), &rat(1, 2)), rat(1, 4));
        assert_eq!(cocycle(&cs, &rat(1, 2), &rat(1, 2)), 1);
        assert_eq!(cocycle(&cs, &rat(0, 1), &rat(1, 2)), 0);
        let ext = ExtensionGroup { cs };
        let a = ExtensionElement { k: 0, x: rat(1, 2) };
        let b = ExtensionElement { k: 0, x: rat(3, 4) };
        assert_eq!(ext.mul(&a, &b), ExtensionElement { k: 1, x: rat(1, 4) });
        assert_eq!(ext.mul(&a, &ext.inv(&a)), ext.identity());
    }

    #[test]
    fn reduce_examples() {
        let c = circle(3);
        let i = RationalUnit;
        // (α_{j+1}, w) ~ (α, w(j+1)) at level 2
        let w = MonotoneSeq {
            values: vec![rat(0, 1), rat(1, 3), rat(1, 2), rat(1, 1)],
        };
        for a in 1..=2 {
            let p = reduce(&c.simplicial, &i, a, &w).unwrap();
            assert_eq!(p.level, 1);
            assert_eq!(iota(&i, &p), w.values[a]);
        }
        let p = reduce(&c.simplicial, &i, 0, &w).unwrap();
        assert_eq!(p.level, 0);
        let q = iota_inverse(&i, &rat(2, 5));
        assert_eq!(reduce(&c.simplicial, &i, q.cell, &q.seq).unwrap(), q);
    }

    #[test]
    fn omega_and_ell() {
        let (a, b, c) = (rat(1, 4), rat(1, 2), rat(3, 4));
        let i = RationalUnit;
        assert_eq!(omega(&i, &a, &a, &c), 0);
        assert_eq!(omega(&i, &a, &b, &c), 0);
        assert_eq!(omega(&i, &a, &c, &b), 1);
        assert_eq!(crate::rational::int(omega(&i, &c, &a, &b)), ell_coboundary(&c, &a, &b));
    }

    #[test]
    fn finite_classification() {
        let ext = classify(FiniteCyclicStructure::new(2), 50, 0).unwrap();
        for k in -3..3 {
            for x in 0..3usize {
                for l in -3..3 {
                    for y in 0..3usize {
                        let p = ext.mul(&ExtensionElement { k, x }, &ExtensionElement { k: l, x: y });
                        assert_eq!(p.k * 3 + p.x as i64, (k * 3 + x as i64) + (l * 3 + y as i64));
                    }
                }
            }
        }
        assert!(roundtrip_audit(&IntegerGroup { z: 3 }, 100, 0).passed());
        assert!(roundtrip_audit(&RationalGroup, 100, 0).passed());
    }

    #[test]
    fn corrupted_structure_is_rejected() {
        let bad = crate::interval::CorruptedStructure {
            inner: SimplexCyclicStructure::default(),
        };
        assert!(matches!(classify(bad, 50, 0), Err(Error::NotCyclicStructure(_))));
    }
}
