//! Morphisms of the cyclic category as canonical periodic monotone maps.
//!
//! A morphism `[n] -> [m]` is a class of non-decreasing `f : Z -> Z` with
//! `f(x + n + 1) = f(x) + m + 1`, modulo adding multiples of `m + 1`. We keep
//! the representative with `f(0)` in `[0, m]` and store one period.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::simplicial::{self, DeltaMap};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LambdaMap {
    pub source: usize,
    pub target: usize,
    pub values: Vec<i64>,
}

/// An arbitrary map of finite sets `{0..source} -> {0..target}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FinMap {
    pub source: usize,
    pub target: usize,
    pub values: Vec<usize>,
}

impl FinMap {
    pub fn identity(n: usize) -> Self {
        FinMap {
            source: n,
            target: n,
            values: (0..=n).collect(),
        }
    }

    /// `f` then `g`.
    pub fn compose(&self, g: &FinMap) -> Result<FinMap> {
        if self.target != g.source {
            return Err(Error::RankMismatch(format!(
                "cannot follow {{0..{}}} -> {{0..{}}} by a map from {{0..{}}}",
                self.source, self.target, g.source
            )));
        }
        Ok(FinMap {
            source: self.source,
            target: g.target,
            values: self.values.iter().map(|&v| g.values[v]).collect(),
        })
    }
}

fn period(n: usize) -> i64 {
    n as i64 + 1
}

impl LambdaMap {
    /// Canonicalises one period of a raw periodic map.
    pub fn canonical(raw: &[i64], n: usize, m: usize) -> Result<Self> {
        if raw.len() != n + 1 {
            return Err(Error::InvalidMorphism(format!(
                "one period of a map from [{n}] has {} values, got {}",
                n + 1,
                raw.len()
            )));
        }
        if raw.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidMorphism(format!("{raw:?} is not non-decreasing")));
        }
        if raw[n] > raw[0] + period(m) {
            return Err(Error::InvalidMorphism(format!(
                "{raw:?} rises by more than {} within one period",
                period(m)
            )));
        }
        let k = raw[0].div_euclid(period(m));
        Ok(LambdaMap {
            source: n,
            target: m,
            values: raw.iter().map(|v| v - k * period(m)).collect(),
        })
    }

    /// Validates an already canonical representative.
    pub fn new(source: usize, target: usize, values: Vec<i64>) -> Result<Self> {
        let f = LambdaMap::canonical(&values, source, target)?;
        if f.values != values {
            return Err(Error::InvalidMorphism(format!(
                "{values:?} is not canonical: f(0) must lie in [0, {target}]"
            )));
        }
        Ok(f)
    }

    pub fn identity(n: usize) -> Self {
        LambdaMap {
            source: n,
            target: n,
            values: (0..=n as i64).collect(),
        }
    }

    /// The rotation `x ↦ x - 1` of `[n]`.
    pub fn tau(n: usize) -> Self {
        let raw: Vec<i64> = (0..=n as i64).map(|x| x - 1).collect();
        LambdaMap::canonical(&raw, n, n).expect("rotation is periodic")
    }

    /// `τ_n^a` for any integer `a`, i.e. `x ↦ x - a`.
    pub fn tau_pow(n: usize, a: i64) -> Self {
        let raw: Vec<i64> = (0..=n as i64).map(|x| x - a).collect();
        LambdaMap::canonical(&raw, n, n).expect("rotation is periodic")
    }

    pub fn eval(&self, x: i64) -> i64 {
        let p = period(self.source);
        let (q, r) = (x.div_euclid(p), x.rem_euclid(p));
        self.values[r as usize] + q * period(self.target)
    }

    pub fn is_identity(&self) -> bool {
        *self == LambdaMap::identity(self.source)
    }

    /// The image of a simplicial map under the inclusion.
    pub fn embed(f: &DeltaMap) -> Self {
        LambdaMap {
            source: f.source,
            target: f.target,
            values: f.values.iter().map(|&v| v as i64).collect(),
        }
    }

    /// `Some(h)` when this map lies in the image of the inclusion.
    pub fn as_delta(&self) -> Option<DeltaMap> {
        if self.values[self.source] <= self.target as i64 {
            Some(DeltaMap {
                source: self.source,
                target: self.target,
                values: self.values.iter().map(|&v| v as usize).collect(),
            })
        } else {
            None
        }
    }

    pub fn mu(&self) -> FinMap {
        FinMap {
            source: self.source,
            target: self.target,
            values: self
                .values
                .iter()
                .map(|v| v.rem_euclid(period(self.target)) as usize)
                .collect(),
        }
    }

    /// The unique `(h, a)` with `a` in `[0, n]` and `f = j(h) ∘ τ^a`, i.e.
    /// `f` is "rotate by `τ^a`, then `h`".
    pub fn decompose(&self) -> (DeltaMap, usize) {
        let n = self.source;
        for a in 0..=n {
            let raw: Vec<i64> = (0..=n as i64).map(|y| self.eval(y + a as i64)).collect();
            let g = LambdaMap::canonical(&raw, n, self.target).expect("shift stays periodic");
            if let Some(h) = g.as_delta() {
                return (h, a);
            }
        }
        unreachable!("every cyclic morphism factors through a rotation")
    }

    pub fn is_automorphism(&self) -> bool {
        self.source == self.target && self.decompose().0.is_identity()
    }

    /// Exponent `a` with `self = τ^a`, if this is an automorphism.
    pub fn rotation_exponent(&self) -> Option<usize> {
        let (h, a) = self.decompose();
        (self.source == self.target && h.is_identity()).then_some(a)
    }

    /// The transpose `f^t : [m] -> [n]`, `f^t(y) = min{x : f(x) >= y}`.
    pub fn transpose(&self) -> LambdaMap {
        let (n, m) = (self.source as i64, self.target as i64);
        let raw: Vec<i64> = (0..=m)
            .map(|y| {
                (-n..=n + 1)
                    .find(|&x| self.eval(x) >= y)
                    .expect("f(n+1) > m bounds the search")
            })
            .collect();
        LambdaMap::canonical(&raw, self.target, self.source).expect("transpose is periodic")
    }

    /// The map `x ↦ f(x - 1) + 1`.
    pub fn conjugate_by_translation(&self) -> LambdaMap {
        let raw: Vec<i64> = (0..=self.source as i64).map(|x| self.eval(x - 1) + 1).collect();
        LambdaMap::canonical(&raw, self.source, self.target).expect("conjugate is periodic")
    }
}

/// `f` then `g`, i.e. `g ∘ f`.
pub fn compose(f: &LambdaMap, g: &LambdaMap) -> Result<LambdaMap> {
    if f.target != g.source {
        return Err(Error::RankMismatch(format!(
            "cannot follow [{}]->[{}] by [{}]->[{}]",
            f.source, f.target, g.source, g.target
        )));
    }
    let raw: Vec<i64> = f.values.iter().map(|&v| g.eval(v)).collect();
    LambdaMap::canonical(&raw, f.source, g.target)
}

pub fn compose_all(maps: &[LambdaMap]) -> Result<LambdaMap> {
    let (first, rest) = maps
        .split_first()
        .ok_or_else(|| Error::InvalidMorphism("empty composite".into()))?;
    rest.iter().try_fold(first.clone(), |acc, g| compose(&acc, g))
}

/// Splits `γ ∘ φ` as `γ_*(φ) ∘ φ^*(γ)` with `γ_*(φ)` simplicial and
/// `φ^*(γ)` an automorphism of the source of `φ`.
pub fn crossed_decompose(gamma: &LambdaMap, phi: &DeltaMap) -> Result<(DeltaMap, LambdaMap)> {
    if !gamma.is_automorphism() {
        return Err(Error::NotAutomorphism(format!("{:?}", gamma.values)));
    }
    let composite = compose(&LambdaMap::embed(phi), gamma)?;
    let (h, a) = composite.decompose();
    Ok((h, LambdaMap::tau_pow(phi.source, a as i64)))
}

/// All morphisms `[n] -> [m]`, without repetition.
pub fn enumerate_hom(n: usize, m: usize) -> Vec<LambdaMap> {
    let mut out = Vec::new();
    let top_rise = period(m);
    for f0 in 0..=m as i64 {
        let mut cur = vec![f0];
        fn rec(n: usize, m: usize, hi: i64, cur: &mut Vec<i64>, out: &mut Vec<LambdaMap>) {
            if cur.len() == n + 1 {
                out.push(LambdaMap {
                    source: n,
                    target: m,
                    values: cur.clone(),
                });
                return;
            }
            let lo = *cur.last().unwrap();
            for v in lo..=hi {
                cur.push(v);
                rec(n, m, hi, cur, out);
                cur.pop();
            }
        }
        rec(n, m, f0 + top_rise, &mut cur, &mut out);
    }
    out
}

/// The inclusion of `Δ^op` into the cyclic category: an interval map
/// `φ : n* -> m*` becomes the periodic map agreeing with `φ` on `0..=n+1`.
pub fn underline(phi: &simplicial::IntervalMap) -> LambdaMap {
    LambdaMap {
        source: phi.source,
        target: phi.target,
        values: phi.values[..=phi.source].iter().map(|&v| v as i64).collect(),
    }
}
