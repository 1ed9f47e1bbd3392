//! Rank-truncated simplicial and cyclic sets given by explicit action
//! tables, with the standard constructions on them.
//!
//! Actions are right actions: `x·(f ∘ g) = (x·f)·g`.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::audit::AuditReport;
use crate::cyclic::{self, crossed_decompose, LambdaMap};
use crate::error::{Error, Result};
use crate::relations::{self, Generator, Relation};
use crate::simplicial::DeltaMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSimplicialSet {
    /// Highest level stored.
    pub truncation: usize,
    pub labels: Vec<Vec<String>>,
    /// `sigma[n][j][x] = x·σ_j` for `x` at level `n < N`, landing at `n + 1`.
    pub sigma: Vec<Vec<Vec<usize>>>,
    /// `delta[n][j][x] = x·δ_j` for `x` at level `n >= 1`, landing at `n - 1`.
    /// `delta[0]` is empty.
    pub delta: Vec<Vec<Vec<usize>>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteCyclicSet {
    pub simplicial: FiniteSimplicialSet,
    /// `tau[n][x] = x·τ_n`.
    pub tau: Vec<Vec<usize>>,
}

impl FiniteSimplicialSet {
    /// Checks table shapes and index ranges.
    pub fn new(
        labels: Vec<Vec<String>>,
        sigma: Vec<Vec<Vec<usize>>>,
        delta: Vec<Vec<Vec<usize>>>,
    ) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::Invalid("a simplicial set needs level 0".into()));
        }
        let truncation = labels.len() - 1;
        if sigma.len() != truncation || delta.len() != truncation + 1 {
            return Err(Error::Invalid(format!(
                "truncation {truncation} needs {truncation} σ levels and {} δ levels",
                truncation + 1
            )));
        }
        let size = |n: usize| labels[n].len();
        for (n, tables) in sigma.iter().enumerate() {
            check_tables(tables, n + 1, size(n), size(n + 1), &format!("σ at level {n}"))?;
        }
        if !delta[0].is_empty() {
            return Err(Error::Invalid("level 0 has no faces".into()));
        }
        for (n, tables) in delta.iter().enumerate().skip(1) {
            check_tables(tables, n + 1, size(n), size(n - 1), &format!("δ at level {n}"))?;
        }
        Ok(FiniteSimplicialSet {
            truncation,
            labels,
            sigma,
            delta,
        })
    }

    pub fn level_size(&self, n: usize) -> usize {
        self.labels[n].len()
    }

    fn generator(&self, g: &Generator, x: usize) -> Result<usize> {
        match *g {
            Generator::Sigma { j, n } => self
                .sigma
                .get(n)
                .map(|t| t[j][x])
                .ok_or_else(|| Error::TruncationMismatch(n + 1, self.truncation)),
            Generator::Delta { j, n } => self
                .delta
                .get(n)
                .map(|t| t[j][x])
                .ok_or(Error::TruncationMismatch(n, self.truncation)),
            Generator::Tau { .. } => Err(Error::InvalidMorphism("τ acting on a simplicial set".into())),
        }
    }

    /// `x·φ` for a cell `x` at level `φ.target`.
    pub fn act(&self, x: usize, phi: &DeltaMap) -> Result<usize> {
        if phi.target > self.truncation || phi.source > self.truncation {
            return Err(Error::TruncationMismatch(phi.source.max(phi.target), self.truncation));
        }
        if x >= self.level_size(phi.target) {
            return Err(Error::IndexOutOfRange(format!("cell {x} at level {}", phi.target)));
        }
        let (deltas, sigmas) = phi.epi_mono_factor();
        let mut cur = x;
        let mut rank = phi.target;
        for j in deltas {
            cur = self.delta[rank][j][cur];
            rank -= 1;
        }
        for j in sigmas {
            cur = self.sigma[rank][j][cur];
            rank += 1;
        }
        Ok(cur)
    }

    pub fn is_degenerate(&self, n: usize, x: usize) -> bool {
        n > 0 && self.sigma[n - 1].iter().any(|t| t.contains(&x))
    }

    pub fn nondegenerate_cells(&self, n: usize) -> Vec<usize> {
        (0..self.level_size(n)).filter(|&x| !self.is_degenerate(n, x)).collect()
    }

    /// Nondegenerate cell counts in dimensions `0..=N`.
    pub fn census(&self) -> Vec<usize> {
        (0..=self.truncation).map(|n| self.nondegenerate_cells(n).len()).collect()
    }

    /// `(x, j, x·δ_j)` for the nondegenerate cells `x` at level `n >= 1`.
    pub fn face_table(&self, n: usize) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for x in self.nondegenerate_cells(n) {
            for j in 0..=n {
                out.push((x, j, self.delta[n][j][x]));
            }
        }
        out
    }

    /// `(x, j, x·σ_j)` for every cell at level `n < N`.
    pub fn degeneracy_table(&self, n: usize) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for j in 0..=n {
            for x in 0..self.level_size(n) {
                out.push((x, j, self.sigma[n][j][x]));
            }
        }
        out
    }

    pub fn find_label(&self, n: usize, label: &str) -> Option<usize> {
        self.labels.get(n)?.iter().position(|l| l == label)
    }

    fn eval_word(&self, word: &[Generator], x: usize) -> Result<usize> {
        word.iter().try_fold(x, |cur, g| self.generator(g, cur))
    }

    /// Verifies every simplicial relation on every cell.
    pub fn audit(&self) -> AuditReport {
        let mut report = AuditReport::new("simplicial identities on cells");
        for rel in relations_within(relations::delta_relations(self.truncation), self.truncation) {
            for x in 0..self.level_size(rel.target()) {
                let l = self.eval_word(&rel.lhs, x);
                let r = self.eval_word(&rel.rhs, x);
                report.check(matches!((&l, &r), (Ok(a), Ok(b)) if a == b), || {
                    format!("{rel} on {}: {l:?} vs {r:?}", self.labels[rel.target()][x])
                });
            }
        }
        report
    }
}

fn check_tables(tables: &[Vec<usize>], count: usize, from: usize, to: usize, what: &str) -> Result<()> {
    if tables.len() != count {
        return Err(Error::Invalid(format!("{what}: expected {count} maps, got {}", tables.len())));
    }
    for t in tables {
        if t.len() != from || t.iter().any(|&y| y >= to) {
            return Err(Error::Invalid(format!("{what}: map must send {from} cells into {to}")));
        }
    }
    Ok(())
}

fn relations_within(rels: Vec<Relation>, n: usize) -> Vec<Relation> {
    rels.into_iter().filter(|r| r.objects().all(|k| k <= n)).collect()
}

impl FiniteCyclicSet {
    pub fn new(simplicial: FiniteSimplicialSet, tau: Vec<Vec<usize>>) -> Result<Self> {
        if tau.len() != simplicial.truncation + 1 {
            return Err(Error::Invalid("one τ map per level is required".into()));
        }
        for (n, t) in tau.iter().enumerate() {
            check_tables(std::slice::from_ref(t), 1, simplicial.level_size(n), simplicial.level_size(n), &format!("τ at level {n}"))?;
        }
        Ok(FiniteCyclicSet { simplicial, tau })
    }

    pub fn truncation(&self) -> usize {
        self.simplicial.truncation
    }

    pub fn level_size(&self, n: usize) -> usize {
        self.simplicial.level_size(n)
    }

    pub fn labels(&self, n: usize) -> &[String] {
        &self.simplicial.labels[n]
    }

    pub fn tau_pow(&self, n: usize, x: usize, a: usize) -> usize {
        (0..a % (n + 1)).fold(x, |cur, _| self.tau[n][cur])
    }

    /// `x·f` for `f : [m] -> [n]` and `x` at level `n`, through
    /// `f = j(h) ∘ τ^a`: first `h`, then `τ^a`.
    pub fn act(&self, x: usize, f: &LambdaMap) -> Result<usize> {
        let (h, a) = f.decompose();
        let y = self.simplicial.act(x, &h)?;
        Ok(self.tau_pow(f.source, y, a))
    }

    fn generator(&self, g: &Generator, x: usize) -> Result<usize> {
        match *g {
            Generator::Tau { n } => self
                .tau
                .get(n)
                .map(|t| t[x])
                .ok_or_else(|| Error::TruncationMismatch(n, self.truncation())),
            _ => self.simplicial.generator(g, x),
        }
    }

    fn eval_word(&self, word: &[Generator], x: usize) -> Result<usize> {
        word.iter().try_fold(x, |cur, g| self.generator(g, cur))
    }

    /// Simplicial identities plus the cyclic relations, on every cell.
    pub fn audit(&self) -> AuditReport {
        let mut report = self.simplicial.audit();
        report.name = "cyclic identities on cells".into();
        let n = self.truncation();
        for rel in relations_within(relations::lambda_relations(n), n) {
            for x in 0..self.level_size(rel.target()) {
                let l = self.eval_word(&rel.lhs, x);
                let r = self.eval_word(&rel.rhs, x);
                report.check(matches!((&l, &r), (Ok(a), Ok(b)) if a == b), || {
                    format!("{rel} on {}: {l:?} vs {r:?}", self.labels(rel.target())[x])
                });
            }
        }
        report
    }

    /// Checks `x·(f ∘ g) = (x·f)·g` for every composable pair of cyclic
    /// morphisms between objects of rank at most `n_max`.
    pub fn functoriality_audit(&self, n_max: usize) -> AuditReport {
        let mut report = AuditReport::new("functoriality on cells");
        let top = n_max.min(self.truncation());
        let mut table: HashMap<LambdaMap, Vec<usize>> = HashMap::new();
        for a in 0..=top {
            for b in 0..=top {
                for f in cyclic::enumerate_hom(a, b) {
                    let cells = (0..self.level_size(b)).map(|x| self.act(x, &f).unwrap()).collect();
                    table.insert(f, cells);
                }
            }
        }
        for a in 0..=top {
            for b in 0..=top {
                let fs = cyclic::enumerate_hom(a, b);
                for c in 0..=top {
                    let gs = cyclic::enumerate_hom(b, c);
                    for f in &fs {
                        for g in &gs {
                            // g ∘ f acts on level c as "g then f"
                            let gf = &table[&cyclic::compose(f, g).expect("composable")];
                            let (tf, tg) = (&table[f], &table[g]);
                            for x in 0..self.level_size(c) {
                                report.check(gf[x] == tf[tg[x]], || {
                                    format!("{:?} ∘ {:?} on cell {x}", g.values, f.values)
                                });
                            }
                        }
                    }
                }
            }
        }
        report
    }
}

/// The one-point simplicial set.
pub fn point(truncation: usize) -> FiniteSimplicialSet {
    let n = truncation;
    FiniteSimplicialSet {
        truncation: n,
        labels: vec![vec!["*".into()]; n + 1],
        sigma: (0..n).map(|k| vec![vec![0]; k + 1]).collect(),
        delta: (0..=n).map(|k| if k == 0 { vec![] } else { vec![vec![0]; k + 1] }).collect(),
    }
}

pub fn point_cyclic(truncation: usize) -> FiniteCyclicSet {
    FiniteCyclicSet {
        simplicial: point(truncation),
        tau: vec![vec![0]; truncation + 1],
    }
}

fn rotation_label(a: usize) -> String {
    match a {
        0 => "1".into(),
        1 => "τ".into(),
        _ => format!("τ^{a}"),
    }
}

/// Induction from simplicial to cyclic sets: level `n` is
/// `S_n × Aut([n])`, cell `(x, τ^a)` stored at index `x·(n+1) + a`.
pub fn induce_j(s: &FiniteSimplicialSet) -> FiniteCyclicSet {
    let big_n = s.truncation;
    let idx = |n: usize, x: usize, a: usize| x * (n + 1) + a;
    let labels: Vec<Vec<String>> = (0..=big_n)
        .map(|n| {
            let mut v = Vec::new();
            for x in 0..s.level_size(n) {
                for a in 0..=n {
                    if s.level_size(n) == 1 {
                        v.push(rotation_label(a));
                    } else {
                        v.push(format!("({}, {})", s.labels[n][x], rotation_label(a)));
                    }
                }
            }
            v
        })
        .collect();
    let act = |n: usize, phi: &DeltaMap, x: usize, a: usize| -> usize {
        let gamma = LambdaMap::tau_pow(n, a as i64);
        let (h, b) = crossed_decompose(&gamma, phi).expect("rotations are automorphisms");
        let b = b.rotation_exponent().expect("rotation");
        idx(phi.source, s.act(x, &h).expect("within truncation"), b)
    };
    let mut sigma = Vec::new();
    for n in 0..big_n {
        let maps = (0..=n)
            .map(|j| {
                let phi = DeltaMap::sigma(j, n).unwrap();
                (0..s.level_size(n))
                    .flat_map(|x| (0..=n).map(move |a| (x, a)))
                    .map(|(x, a)| act(n, &phi, x, a))
                    .collect()
            })
            .collect();
        sigma.push(maps);
    }
    let mut delta = vec![vec![]];
    for n in 1..=big_n {
        let maps = (0..=n)
            .map(|j| {
                let phi = DeltaMap::delta(j, n).unwrap();
                (0..s.level_size(n))
                    .flat_map(|x| (0..=n).map(move |a| (x, a)))
                    .map(|(x, a)| act(n, &phi, x, a))
                    .collect()
            })
            .collect();
        delta.push(maps);
    }
    let tau = (0..=big_n)
        .map(|n| {
            (0..s.level_size(n))
                .flat_map(|x| (0..=n).map(move |a| idx(n, x, (a + 1) % (n + 1))))
                .collect()
        })
        .collect();
    FiniteCyclicSet {
        simplicial: FiniteSimplicialSet {
            truncation: big_n,
            labels,
            sigma,
            delta,
        },
        tau,
    }
}

/// The cyclic set `C`, induced from the point.
pub fn circle(truncation: usize) -> FiniteCyclicSet {
    induce_j(&point(truncation))
}

/// The representable cyclic set of `[k]`: level `n` is `Hom([n], [k])`
/// (sorted), acted on by precomposition.
pub fn yoneda_cyclic(k: usize, truncation: usize) -> FiniteCyclicSet {
    let levels: Vec<Vec<LambdaMap>> = (0..=truncation)
        .map(|n| {
            let mut v = cyclic::enumerate_hom(n, k);
            v.sort();
            v
        })
        .collect();
    let index: Vec<HashMap<LambdaMap, usize>> = levels
        .iter()
        .map(|l| l.iter().cloned().enumerate().map(|(i, f)| (f, i)).collect())
        .collect();
    let pre = |n: usize, alpha: &LambdaMap| -> Vec<usize> {
        let m = alpha.source;
        levels[n]
            .iter()
            .map(|f| index[m][&cyclic::compose(alpha, f).expect("composable")])
            .collect()
    };
    let labels = levels
        .iter()
        .map(|l| l.iter().map(|f| format!("{:?}", f.values)).collect())
        .collect();
    let sigma = (0..truncation)
        .map(|n| (0..=n).map(|j| pre(n, &LambdaMap::embed(&DeltaMap::sigma(j, n).unwrap()))).collect())
        .collect();
    let mut delta = vec![vec![]];
    for n in 1..=truncation {
        delta.push((0..=n).map(|j| pre(n, &LambdaMap::embed(&DeltaMap::delta(j, n).unwrap()))).collect());
    }
    let tau = (0..=truncation).map(|n| pre(n, &LambdaMap::tau(n))).collect();
    FiniteCyclicSet {
        simplicial: FiniteSimplicialSet {
            truncation,
            labels,
            sigma,
            delta,
        },
        tau,
    }
}

/// The morphism of `yoneda_cyclic(k)` at level `n` stored at `index`.
pub fn yoneda_element(k: usize, n: usize, index: usize) -> LambdaMap {
    let mut v = cyclic::enumerate_hom(n, k);
    v.sort();
    v[index].clone()
}

/// Levelwise product with the diagonal action; cell `(s, t)` is stored at
/// `s·|T_n| + t`.
pub fn cyclic_product(s: &FiniteCyclicSet, t: &FiniteCyclicSet) -> Result<FiniteCyclicSet> {
    if s.truncation() != t.truncation() {
        return Err(Error::TruncationMismatch(s.truncation(), t.truncation()));
    }
    let big_n = s.truncation();
    let pair = |a: &[usize], b: &[usize], tn: usize| -> Vec<usize> {
        let mut out = Vec::with_capacity(a.len() * b.len());
        for &x in a {
            for &y in b {
                out.push(x * tn + y);
            }
        }
        out
    };
    let labels = (0..=big_n)
        .map(|n| {
            let mut v = Vec::new();
            for a in s.labels(n) {
                for b in t.labels(n) {
                    v.push(format!("({a}, {b})"));
                }
            }
            v
        })
        .collect();
    let (ss, ts) = (&s.simplicial, &t.simplicial);
    let sigma = (0..big_n)
        .map(|n| {
            (0..=n)
                .map(|j| pair(&ss.sigma[n][j], &ts.sigma[n][j], t.level_size(n + 1)))
                .collect()
        })
        .collect();
    let mut delta = vec![vec![]];
    for n in 1..=big_n {
        delta.push(
            (0..=n)
                .map(|j| pair(&ss.delta[n][j], &ts.delta[n][j], t.level_size(n - 1)))
                .collect(),
        );
    }
    let tau = (0..=big_n).map(|n| pair(&s.tau[n], &t.tau[n], t.level_size(n))).collect();
    Ok(FiniteCyclicSet {
        simplicial: FiniteSimplicialSet {
            truncation: big_n,
            labels,
            sigma,
            delta,
        },
        tau,
    })
}

pub fn circle_power(k: usize, truncation: usize) -> FiniteCyclicSet {
    let c = circle(truncation);
    let mut out = c.clone();
    for _ in 1..k {
        out = cyclic_product(&out, &c).expect("same truncation");
    }
    out
}

/// Levelwise cell maps `f[n][x]`.
pub type CellMap = Vec<Vec<usize>>;

/// `ϑ(x, γ) = (γ, xγ)` from the induction of the underlying simplicial set
/// of `S` to `C × S`, in the index conventions of `induce_j` and
/// `cyclic_product`.
pub fn theta_map(s: &FiniteCyclicSet) -> CellMap {
    (0..=s.truncation())
        .map(|n| {
            let mut v = Vec::new();
            for x in 0..s.level_size(n) {
                for a in 0..=n {
                    let xg = s.tau_pow(n, x, a);
                    v.push(a * s.level_size(n) + xg);
                }
            }
            v
        })
        .collect()
}

/// `i(γ) = f_n ∘ γ` from `C` to `yoneda_cyclic(0)`.
pub fn circle_to_yoneda(truncation: usize) -> CellMap {
    (0..=truncation)
        .map(|n| {
            let mut targets = cyclic::enumerate_hom(n, 0);
            targets.sort();
            let f_n = LambdaMap::embed(&DeltaMap::new(n, 0, vec![0; n + 1]).unwrap());
            (0..=n)
                .map(|a| {
                    let g = cyclic::compose(&LambdaMap::tau_pow(n, a as i64), &f_n).unwrap();
                    targets.iter().position(|t| *t == g).unwrap()
                })
                .collect()
        })
        .collect()
}

/// Checks that `f` is a levelwise bijection commuting with the faces and
/// degeneracies (and with `τ` when `with_tau`).
pub fn morphism_audit(f: &CellMap, a: &FiniteCyclicSet, b: &FiniteCyclicSet, with_tau: bool, bijective: bool) -> AuditReport {
    let mut report = AuditReport::new("cell map");
    let big_n = a.truncation();
    report.check(b.truncation() == big_n && f.len() == big_n + 1, || "truncations differ".into());
    if !report.passed() {
        return report;
    }
    for n in 0..=big_n {
        if bijective {
            let mut seen = f[n].clone();
            seen.sort();
            seen.dedup();
            report.check(seen.len() == b.level_size(n) && f[n].len() == a.level_size(n), || {
                format!("level {n} is not a bijection")
            });
        }
        for x in 0..a.level_size(n) {
            if n < big_n {
                for j in 0..=n {
                    report.check(f[n + 1][a.simplicial.sigma[n][j][x]] == b.simplicial.sigma[n][j][f[n][x]], || {
                        format!("σ_{j} at level {n}, cell {x}")
                    });
                }
            }
            if n > 0 {
                for j in 0..=n {
                    report.check(f[n - 1][a.simplicial.delta[n][j][x]] == b.simplicial.delta[n][j][f[n][x]], || {
                        format!("δ_{j} at level {n}, cell {x}")
                    });
                }
            }
            if with_tau {
                report.check(f[n][a.tau[n][x]] == b.tau[n][f[n][x]], || format!("τ at level {n}, cell {x}"));
            }
        }
    }
    report
}

#[derive(Debug, Serialize, Deserialize)]
struct SetJson {
    #[serde(rename = "N")]
    truncation: usize,
    levels: Vec<Vec<String>>,
    sigma: BTreeMap<String, Vec<Vec<usize>>>,
    delta: BTreeMap<String, Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    tau: Option<BTreeMap<String, Vec<usize>>>,
}

fn level_key(s: &str) -> Result<usize> {
    s.parse().map_err(|_| Error::parse(s, "level keys must be integers"))
}

fn from_keyed<T: Default + Clone>(m: &BTreeMap<String, T>, len: usize, skip: usize) -> Result<Vec<T>> {
    let mut out = vec![T::default(); len];
    for (k, v) in m {
        let n = level_key(k)?;
        if n < skip || n >= len {
            return Err(Error::parse(k, "level outside the truncation"));
        }
        out[n] = v.clone();
    }
    Ok(out)
}

impl FiniteCyclicSet {
    pub fn to_json(&self) -> String {
        let s = &self.simplicial;
        let j = SetJson {
            truncation: s.truncation,
            levels: s.labels.clone(),
            sigma: s.sigma.iter().enumerate().map(|(n, t)| (n.to_string(), t.clone())).collect(),
            delta: s.delta.iter().enumerate().skip(1).map(|(n, t)| (n.to_string(), t.clone())).collect(),
            tau: Some(self.tau.iter().enumerate().map(|(n, t)| (n.to_string(), t.clone())).collect()),
        };
        serde_json::to_string(&j).expect("serialisable")
    }

    /// Parses the JSON exchange format. A missing `tau` is an error here;
    /// use [`FiniteSimplicialSet::from_json`] for simplicial data.
    pub fn from_json(text: &str) -> Result<Self> {
        let j: SetJson = serde_json::from_str(text).map_err(|e| Error::parse("cyclic set JSON", e.to_string()))?;
        let tau = j.tau.clone().ok_or_else(|| Error::parse("tau", "missing τ tables"))?;
        let tau = from_keyed(&tau, j.truncation + 1, 0)?;
        FiniteCyclicSet::new(simplicial_from(j)?, tau)
    }
}

fn simplicial_from(j: SetJson) -> Result<FiniteSimplicialSet> {
    if j.levels.len() != j.truncation + 1 {
        return Err(Error::parse("levels", format!("expected {} levels", j.truncation + 1)));
    }
    let sigma = from_keyed(&j.sigma, j.truncation, 0)?;
    let delta = from_keyed(&j.delta, j.truncation + 1, 1)?;
    FiniteSimplicialSet::new(j.levels, sigma, delta)
}

impl FiniteSimplicialSet {
    pub fn from_json(text: &str) -> Result<Self> {
        let j: SetJson =
            serde_json::from_str(text).map_err(|e| Error::parse("simplicial set JSON", e.to_string()))?;
        simplicial_from(j)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_and_circle_sizes() {
        let c = circle(4);
        for n in 0..=4 {
            assert_eq!(c.level_size(n), n + 1);
        }
        assert!(c.audit().passed());
        assert_eq!(c.simplicial.census(), vec![1, 1, 0, 0, 0]);
    }

    #[test]
    fn circle_matches_yoneda() {
        let c = circle(3);
        let y = yoneda_cyclic(0, 3);
        assert!(y.audit().passed());
        assert!(morphism_audit(&circle_to_yoneda(3), &c, &y, true, true).passed());
    }

    #[test]
    fn product_census() {
        let cc = circle_power(2, 3);
        assert!(cc.audit().passed());
        assert_eq!(cc.simplicial.census(), vec![1, 3, 2, 0]);
        let want = ["(1, τ)", "(τ, 1)", "(τ, τ)"];
        let got: Vec<&str> = cc.simplicial.nondegenerate_cells(1).iter().map(|&x| cc.labels(1)[x].as_str()).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn json_roundtrip() {
        let cc = circle_power(2, 2);
        let back = FiniteCyclicSet::from_json(&cc.to_json()).unwrap();
        assert_eq!(back, cc);
        assert!(FiniteCyclicSet::from_json(r#"{"N":0,"levels":[["a"]],"sigma":{},"delta":{},"tau":{"0":[1]}}"#).is_err());
    }

    #[test]
    fn broken_set_fails_audit() {
        let mut c = circle(2);
        c.tau[1] = vec![0, 1];
        assert!(!c.audit().passed());
    }
}
