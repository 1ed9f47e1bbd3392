//! The defining relations of the simplicial and cyclic categories as
//! explicit word pairs, and their audits on morphisms.
//!
//! A word `[g1, g2, ..., gk]` denotes the composite `g1 ∘ g2 ∘ … ∘ gk`,
//! so `gk` is applied first.

use std::fmt;

use crate::audit::AuditReport;
use crate::cyclic::{self, LambdaMap};
use crate::error::Result;
use crate::simplicial::{self, DeltaMap};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    /// `σ_j : [n+1] -> [n]`
    Sigma { j: usize, n: usize },
    /// `δ_j : [n-1] -> [n]`
    Delta { j: usize, n: usize },
    /// `τ_n : [n] -> [n]`
    Tau { n: usize },
}

impl Generator {
    pub fn source(&self) -> usize {
        match *self {
            Generator::Sigma { n, .. } => n + 1,
            Generator::Delta { n, .. } => n - 1,
            Generator::Tau { n } => n,
        }
    }

    pub fn target(&self) -> usize {
        match *self {
            Generator::Sigma { n, .. } | Generator::Delta { n, .. } | Generator::Tau { n } => n,
        }
    }

    pub fn to_delta(&self) -> Option<DeltaMap> {
        match *self {
            Generator::Sigma { j, n } => DeltaMap::sigma(j, n).ok(),
            Generator::Delta { j, n } => DeltaMap::delta(j, n).ok(),
            Generator::Tau { .. } => None,
        }
    }

    pub fn to_lambda(&self) -> LambdaMap {
        match *self {
            Generator::Tau { n } => LambdaMap::tau(n),
            _ => LambdaMap::embed(&self.to_delta().expect("valid generator")),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Generator::Sigma { j, n } => write!(f, "σ{j}:[{}]→[{n}]", n + 1),
            Generator::Delta { j, n } => write!(f, "δ{j}:[{}]→[{n}]", n - 1),
            Generator::Tau { n } => write!(f, "τ[{n}]"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub family: &'static str,
    pub lhs: Vec<Generator>,
    pub rhs: Vec<Generator>,
}

fn show(word: &[Generator]) -> String {
    if word.is_empty() {
        return "id".into();
    }
    word.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(" ∘ ")
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {} = {}", self.family, show(&self.lhs), show(&self.rhs))
    }
}

impl Relation {
    /// Rank of the object the composite starts from.
    pub fn source(&self) -> usize {
        self.lhs.last().or(self.rhs.last()).map(|g| g.source()).unwrap()
    }

    pub fn target(&self) -> usize {
        self.lhs.first().or(self.rhs.first()).map(|g| g.target()).unwrap()
    }

    /// Every object the two words pass through.
    pub fn objects(&self) -> impl Iterator<Item = usize> + '_ {
        self.lhs
            .iter()
            .chain(self.rhs.iter())
            .flat_map(|g| [g.source(), g.target()])
    }
}

fn sig(j: usize, n: usize) -> Generator {
    Generator::Sigma { j, n }
}

fn del(j: usize, n: usize) -> Generator {
    Generator::Delta { j, n }
}

fn tau(n: usize) -> Generator {
    Generator::Tau { n }
}

/// All instances of the simplicial relations whose outer generator has
/// target rank at most `n_max`.
pub fn delta_relations(n_max: usize) -> Vec<Relation> {
    let mut out = Vec::new();
    for n in 0..=n_max {
        for j in 0..=n {
            for i in 0..=j {
                out.push(Relation {
                    family: "σσ",
                    lhs: vec![sig(j, n), sig(i, n + 1)],
                    rhs: vec![sig(i, n), sig(j + 1, n + 1)],
                });
            }
        }
    }
    for n in 2..=n_max {
        for j in 1..=n {
            for i in 0..j {
                out.push(Relation {
                    family: "δδ",
                    lhs: vec![del(j, n), del(i, n - 1)],
                    rhs: vec![del(i, n), del(j - 1, n - 1)],
                });
            }
        }
    }
    for n in 0..=n_max {
        for j in 0..=n {
            for i in 0..=n + 1 {
                let lhs = vec![sig(j, n), del(i, n + 1)];
                let rhs = if i < j {
                    vec![del(i, n), sig(j - 1, n - 1)]
                } else if i == j || i == j + 1 {
                    vec![]
                } else {
                    vec![del(i - 1, n), sig(j, n - 1)]
                };
                out.push(Relation {
                    family: "σδ",
                    lhs,
                    rhs,
                });
            }
        }
    }
    out
}

/// The extra relations presenting the cyclic category, for `n <= n_max`.
pub fn lambda_relations(n_max: usize) -> Vec<Relation> {
    let mut out = Vec::new();
    for n in 0..=n_max {
        out.push(Relation {
            family: "τ order",
            lhs: vec![tau(n); n + 1],
            rhs: vec![],
        });
    }
    for n in 0..=n_max {
        out.push(Relation {
            family: "τσ",
            lhs: vec![tau(n), sig(0, n)],
            rhs: vec![sig(n, n), tau(n + 1), tau(n + 1)],
        });
        for j in 1..=n {
            out.push(Relation {
                family: "τσ",
                lhs: vec![tau(n), sig(j, n)],
                rhs: vec![sig(j - 1, n), tau(n + 1)],
            });
        }
    }
    for n in 1..=n_max {
        out.push(Relation {
            family: "τδ",
            lhs: vec![tau(n), del(0, n)],
            rhs: vec![del(n, n)],
        });
        for j in 1..=n {
            out.push(Relation {
                family: "τδ",
                lhs: vec![tau(n), del(j, n)],
                rhs: vec![del(j - 1, n), tau(n - 1)],
            });
        }
    }
    out
}

/// Evaluates a word as a simplicial map starting at `source`.
pub fn eval_delta_word(word: &[Generator], source: usize) -> Result<DeltaMap> {
    let mut f = DeltaMap::identity(source);
    for g in word.iter().rev() {
        let d = g
            .to_delta()
            .ok_or_else(|| crate::error::Error::InvalidMorphism(format!("{g} is not simplicial")))?;
        f = simplicial::compose(&f, &d)?;
    }
    Ok(f)
}

pub fn eval_lambda_word(word: &[Generator], source: usize) -> Result<LambdaMap> {
    let mut f = LambdaMap::identity(source);
    for g in word.iter().rev() {
        f = cyclic::compose(&f, &g.to_lambda())?;
    }
    Ok(f)
}

pub fn delta_relation_audit(n_max: usize) -> AuditReport {
    let mut report = AuditReport::new("simplicial relations");
    for rel in delta_relations(n_max) {
        let src = rel.source();
        let l = eval_delta_word(&rel.lhs, src);
        let r = eval_delta_word(&rel.rhs, src);
        let ok = matches!((&l, &r), (Ok(a), Ok(b)) if a == b);
        report.check(ok, || format!("{rel}: {l:?} vs {r:?}"));
    }
    report
}

pub fn lambda_presentation_audit(n_max: usize) -> AuditReport {
    let mut report = AuditReport::new("cyclic presentation");
    for rel in lambda_relations(n_max) {
        let src = rel.source();
        let l = eval_lambda_word(&rel.lhs, src);
        let r = eval_lambda_word(&rel.rhs, src);
        let ok = matches!((&l, &r), (Ok(a), Ok(b)) if a == b);
        report.check(ok, || format!("{rel}: {l:?} vs {r:?}"));
    }
    report
}
