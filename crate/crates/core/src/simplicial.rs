//! Morphisms of the simplicial category and of its dual category of
//! finite intervals `n* = {0, ..., n+1}`.
//!
//! Composition is written in application order throughout:
//! `compose(f, g)` is "first `f`, then `g`".

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A non-decreasing map `[n] -> [m]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DeltaMap {
    pub source: usize,
    pub target: usize,
    pub values: Vec<usize>,
}

impl DeltaMap {
    pub fn new(source: usize, target: usize, values: Vec<usize>) -> Result<Self> {
        if values.len() != source + 1 {
            return Err(Error::InvalidMorphism(format!(
                "[{source}] has {} points, got {} values",
                source + 1,
                values.len()
            )));
        }
        if let Some(v) = values.iter().find(|&&v| v > target) {
            return Err(Error::InvalidMorphism(format!("value {v} outside [0, {target}]")));
        }
        if values.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidMorphism(format!("{values:?} is not non-decreasing")));
        }
        Ok(DeltaMap {
            source,
            target,
            values,
        })
    }

    pub fn identity(n: usize) -> Self {
        DeltaMap {
            source: n,
            target: n,
            values: (0..=n).collect(),
        }
    }

    /// The degeneracy `σ_j : [n+1] -> [n]`, hitting `j` twice.
    pub fn sigma(j: usize, n: usize) -> Result<Self> {
        if j > n {
            return Err(Error::IndexOutOfRange(format!("σ_{j} needs j <= {n}")));
        }
        let values = (0..=n + 1).map(|i| if i <= j { i } else { i - 1 }).collect();
        Ok(DeltaMap {
            source: n + 1,
            target: n,
            values,
        })
    }

    /// The face `δ_j : [n-1] -> [n]`, missing `j`.
    pub fn delta(j: usize, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::IndexOutOfRange("δ_j needs target rank >= 1".into()));
        }
        if j > n {
            return Err(Error::IndexOutOfRange(format!("δ_{j} needs j <= {n}")));
        }
        let values = (0..n).map(|i| if i < j { i } else { i + 1 }).collect();
        Ok(DeltaMap {
            source: n - 1,
            target: n,
            values,
        })
    }

    pub fn apply(&self, i: usize) -> usize {
        self.values[i]
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.values.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn is_injective(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_surjective(&self) -> bool {
        self.values[0] == 0
            && self.values[self.source] == self.target
            && self.values.windows(2).all(|w| w[1] - w[0] <= 1)
    }

    /// Indices `(deltas, sigmas)` such that
    /// `f = δ_{d[0]} ∘ … ∘ δ_{d[s-1]} ∘ σ_{s[0]} ∘ … ∘ σ_{s[t-1]}`
    /// in the usual right-to-left composition notation. The σ indices are
    /// strictly increasing and the δ indices strictly decreasing as written;
    /// in application order both lists are consumed from the back.
    pub fn epi_mono_factor(&self) -> (Vec<usize>, Vec<usize>) {
        let sigmas = (0..self.source)
            .filter(|&i| self.values[i] == self.values[i + 1])
            .collect();
        let mut deltas: Vec<usize> = (0..=self.target)
            .filter(|y| !self.values.contains(y))
            .collect();
        deltas.reverse();
        (deltas, sigmas)
    }

    /// Rebuilds a map from `epi_mono_factor` output.
    pub fn from_factors(source: usize, deltas: &[usize], sigmas: &[usize]) -> Result<Self> {
        let mut f = DeltaMap::identity(source);
        for &j in sigmas.iter().rev() {
            let rank = f.target;
            if rank == 0 {
                return Err(Error::IndexOutOfRange("σ applied to [0]".into()));
            }
            f = compose(&f, &DeltaMap::sigma(j, rank - 1)?)?;
        }
        for &j in deltas.iter().rev() {
            let rank = f.target;
            f = compose(&f, &DeltaMap::delta(j, rank + 1)?)?;
        }
        Ok(f)
    }

    /// The dual interval map `m* -> n*`, `y ↦ min{x : f(x) >= y}`.
    pub fn dual(&self) -> IntervalMap {
        let (n, m) = (self.source, self.target);
        let mut values = Vec::with_capacity(m + 2);
        values.push(0);
        for y in 1..=m {
            let x = (0..=n).find(|&x| self.values[x] >= y).unwrap_or(n + 1);
            values.push(x);
        }
        values.push(n + 1);
        IntervalMap {
            source: m,
            target: n,
            values,
        }
    }
}

/// `f` then `g`: `(compose(f, g))(i) = g(f(i))`.
pub fn compose(f: &DeltaMap, g: &DeltaMap) -> Result<DeltaMap> {
    if f.target != g.source {
        return Err(Error::RankMismatch(format!(
            "cannot follow [{}]->[{}] by [{}]->[{}]",
            f.source, f.target, g.source, g.target
        )));
    }
    Ok(DeltaMap {
        source: f.source,
        target: g.target,
        values: f.values.iter().map(|&v| g.values[v]).collect(),
    })
}

/// All non-decreasing maps `[n] -> [m]`, in lexicographic order of values.
pub fn enumerate_hom(n: usize, m: usize) -> Vec<DeltaMap> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n + 1);
    fn rec(n: usize, m: usize, lo: usize, cur: &mut Vec<usize>, out: &mut Vec<DeltaMap>) {
        if cur.len() == n + 1 {
            out.push(DeltaMap {
                source: n,
                target: m,
                values: cur.clone(),
            });
            return;
        }
        for v in lo..=m {
            cur.push(v);
            rec(n, m, v, cur, out);
            cur.pop();
        }
    }
    rec(n, m, 0, &mut cur, &mut out);
    out
}

/// An endpoint-preserving non-decreasing map `n* -> m*`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IntervalMap {
    pub source: usize,
    pub target: usize,
    pub values: Vec<usize>,
}

impl IntervalMap {
    pub fn new(source: usize, target: usize, values: Vec<usize>) -> Result<Self> {
        let ok = values.len() == source + 2
            && values[0] == 0
            && values[source + 1] == target + 1
            && values.windows(2).all(|w| w[0] <= w[1]);
        if !ok {
            return Err(Error::InvalidMorphism(format!(
                "{values:?} is not an interval map {source}* -> {target}*"
            )));
        }
        Ok(IntervalMap {
            source,
            target,
            values,
        })
    }

    pub fn identity(n: usize) -> Self {
        IntervalMap {
            source: n,
            target: n,
            values: (0..=n + 1).collect(),
        }
    }

    /// `s_j : n* -> (n+1)*`, dual to `σ_j`.
    pub fn s(j: usize, n: usize) -> Result<Self> {
        if j > n {
            return Err(Error::IndexOutOfRange(format!("s_{j} needs j <= {n}")));
        }
        let values = (0..=n + 1).map(|i| if i <= j { i } else { i + 1 }).collect();
        Ok(IntervalMap {
            source: n,
            target: n + 1,
            values,
        })
    }

    /// `d_j : n* -> (n-1)*`, dual to `δ_j`.
    pub fn d(j: usize, n: usize) -> Result<Self> {
        if n == 0 || j > n {
            return Err(Error::IndexOutOfRange(format!("d_{j} on {n}*")));
        }
        let values = (0..=n + 1).map(|i| if i <= j { i } else { i - 1 }).collect();
        Ok(IntervalMap {
            source: n,
            target: n - 1,
            values,
        })
    }

    pub fn compose(&self, g: &IntervalMap) -> Result<IntervalMap> {
        if self.target != g.source {
            return Err(Error::RankMismatch(format!(
                "cannot follow {}*->{}* by {}*->{}*",
                self.source, self.target, g.source, g.target
            )));
        }
        Ok(IntervalMap {
            source: self.source,
            target: g.target,
            values: self.values.iter().map(|&v| g.values[v]).collect(),
        })
    }
}

/// All interval maps `n* -> m*`.
pub fn enumerate_interval_maps(n: usize, m: usize) -> Vec<IntervalMap> {
    enumerate_hom(n + 1, m + 1)
        .into_iter()
        .filter(|f| f.values[0] == 0 && f.values[n + 1] == m + 1)
        .map(|f| IntervalMap {
            source: n,
            target: m,
            values: f.values,
        })
        .collect()
}
