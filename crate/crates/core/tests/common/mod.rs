//! Independent reference computations shared by the integration tests.
//! Nothing here goes through the library's own evaluators.
#![allow(dead_code)]

use std::collections::HashMap;

use cyclic_core::relations::Generator;
use cyclic_core::LambdaMap;

/// A periodic map `Z -> Z` from `[n]` to `[m]`, given on `0..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Periodic {
    pub n: usize,
    pub m: usize,
    pub f: Vec<i64>,
}

impl Periodic {
    pub fn eval(&self, x: i64) -> i64 {
        let p = self.n as i64 + 1;
        self.f[x.rem_euclid(p) as usize] + x.div_euclid(p) * (self.m as i64 + 1)
    }

    pub fn identity(n: usize) -> Self {
        Periodic { n, m: n, f: (0..=n as i64).collect() }
    }

    /// `self` then `g`.
    pub fn then(&self, g: &Periodic) -> Periodic {
        assert_eq!(self.m, g.n);
        Periodic {
            n: self.n,
            m: g.m,
            f: (0..=self.n as i64).map(|x| g.eval(self.eval(x))).collect(),
        }
    }

    pub fn same_class(&self, g: &Periodic) -> bool {
        if self.n != g.n || self.m != g.m {
            return false;
        }
        let d = self.f[0] - g.f[0];
        d.rem_euclid(self.m as i64 + 1) == 0 && self.f.iter().zip(&g.f).all(|(a, b)| a - b == d)
    }

    pub fn of(l: &LambdaMap) -> Periodic {
        Periodic { n: l.source, m: l.target, f: l.values.clone() }
    }
}

/// The generator as a map of integers, following its defining formula.
pub fn generator(g: &Generator) -> Periodic {
    match *g {
        Generator::Sigma { j, n } => {
            // [n+1] -> [n]
            let f = (0..=n as i64 + 1).map(|i| if i <= j as i64 { i } else { i - 1 }).collect();
            Periodic { n: n + 1, m: n, f }
        }
        Generator::Delta { j, n } => {
            let f = (0..n as i64).map(|i| if i < j as i64 { i } else { i + 1 }).collect();
            Periodic { n: n - 1, m: n, f }
        }
        Generator::Tau { n } => Periodic { n, m: n, f: (0..=n as i64).map(|x| x - 1).collect() },
    }
}

/// `g1 ∘ … ∘ gk` for the word `[g1, …, gk]`.
pub fn eval_word(word: &[Generator], source: usize) -> Periodic {
    word.iter().rev().fold(Periodic::identity(source), |acc, g| acc.then(&generator(g)))
}

fn tuples(len: usize, base: i64) -> impl Iterator<Item = Vec<i64>> {
    let total = (base as u64).pow(len as u32);
    (0..total).map(move |mut c| {
        (0..len)
            .map(|_| {
                let v = (c % base as u64) as i64;
                c /= base as u64;
                v
            })
            .collect()
    })
}

/// Every non-decreasing `[n] -> [m]`, from all `(m+1)^(n+1)` tuples.
pub fn brute_delta_hom(n: usize, m: usize) -> Vec<Vec<i64>> {
    tuples(n + 1, m as i64 + 1).filter(|t| t.windows(2).all(|w| w[0] <= w[1])).collect()
}

/// One representative per class of periodic maps `[n] -> [m]`, with
/// `f(0) ∈ [0, m]`, from all tuples in `[0, 2m+2)^(n+1)`.
pub fn brute_lambda_hom(n: usize, m: usize) -> Vec<Vec<i64>> {
    let p = m as i64 + 1;
    tuples(n + 1, 2 * p)
        .filter(|t| t[0] < p && t.windows(2).all(|w| w[0] <= w[1]) && t[n] <= t[0] + p)
        .collect()
}

/// `x ↦ f(x) mod (m+1)` on `0..=n`.
pub fn mu(f: &Periodic) -> Vec<usize> {
    f.f.iter().map(|v| v.rem_euclid(f.m as i64 + 1) as usize).collect()
}

/// `f^t(y) = min{x : f(x) >= y}`, by scanning a window of integers.
pub fn transpose(f: &Periodic) -> Periodic {
    let lo = -4 * (f.n as i64 + 1);
    let hi = 4 * (f.n as i64 + 1);
    let g = (0..=f.m as i64)
        .map(|y| (lo..=hi).find(|&x| f.eval(x) >= y).expect("window is wide enough"))
        .collect();
    Periodic { n: f.m, m: f.n, f: g }
}

/// Union-find over hashable keys.
pub struct Closure<K> {
    index: HashMap<K, usize>,
    parent: Vec<usize>,
}

impl<K: std::hash::Hash + Eq + Clone> Closure<K> {
    pub fn new() -> Self {
        Closure { index: HashMap::new(), parent: Vec::new() }
    }

    pub fn id(&mut self, k: &K) -> usize {
        if let Some(&i) = self.index.get(k) {
            return i;
        }
        let i = self.parent.len();
        self.parent.push(i);
        self.index.insert(k.clone(), i);
        i
    }

    pub fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    pub fn union(&mut self, a: &K, b: &K) {
        let (x, y) = (self.id(a), self.id(b));
        let (rx, ry) = (self.find(x), self.find(y));
        if rx != ry {
            self.parent[rx] = ry;
        }
    }

    pub fn root(&mut self, k: &K) -> usize {
        let i = self.id(k);
        self.find(i)
    }
}
