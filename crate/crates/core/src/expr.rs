//! Textual morphism expressions and their JSON form.
//!
//! An expression is a list of whitespace-separated tokens applied left to
//! right, anchored by `@<n>` (or `@ <n>`) naming the source object:
//! `d0 s1 @ 2` is `δ_0 : [2] -> [3]` followed by `σ_1 : [3] -> [2]`.
//! Tokens: `s<j>`, `d<j>`, `t`, `t^<k>` (negative `k` allowed).

use serde::{Deserialize, Serialize};

use crate::cyclic::{self, LambdaMap};
use crate::error::{Error, Result};
use crate::simplicial::{self, DeltaMap};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "cat", rename_all = "lowercase")]
pub enum Morphism {
    Delta(DeltaMap),
    Lambda(LambdaMap),
}

impl Morphism {
    pub fn source(&self) -> usize {
        match self {
            Morphism::Delta(f) => f.source,
            Morphism::Lambda(f) => f.source,
        }
    }

    pub fn target(&self) -> usize {
        match self {
            Morphism::Delta(f) => f.target,
            Morphism::Lambda(f) => f.target,
        }
    }

    pub fn to_lambda(&self) -> LambdaMap {
        match self {
            Morphism::Delta(f) => LambdaMap::embed(f),
            Morphism::Lambda(f) => f.clone(),
        }
    }

    /// Narrows to a simplicial map; cyclic maps qualify when they lie in
    /// the image of the inclusion.
    pub fn to_delta(&self) -> Result<DeltaMap> {
        match self {
            Morphism::Delta(f) => Ok(f.clone()),
            Morphism::Lambda(f) => f.as_delta().ok_or_else(|| {
                Error::InvalidMorphism(format!(
                    "cyclic map {:?} is not in the simplicial subcategory",
                    f.values
                ))
            }),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("morphisms serialise")
    }
}

#[derive(Debug, Clone, Copy)]
enum Step {
    Sigma(usize),
    Delta(usize),
    Tau(i64),
}

fn parse_index(tok: &str, digits: &str) -> Result<usize> {
    digits
        .parse()
        .map_err(|_| Error::parse(tok, "expected a non-negative index"))
}

/// Parses a morphism given either as JSON (leading `{`) or as an expression.
pub fn parse_morphism(input: &str) -> Result<Morphism> {
    let s = input.trim();
    if s.starts_with('{') {
        return parse_json(s);
    }
    parse_expression(s)
}

pub fn parse_json(s: &str) -> Result<Morphism> {
    let m: Morphism = serde_json::from_str(s).map_err(|e| {
        let head: String = s.chars().take(40).collect();
        Error::parse(head, e.to_string())
    })?;
    // Re-validate through the checked constructors.
    match m {
        Morphism::Delta(f) => Ok(Morphism::Delta(DeltaMap::new(f.source, f.target, f.values)?)),
        Morphism::Lambda(f) => Ok(Morphism::Lambda(LambdaMap::canonical(&f.values, f.source, f.target)?)),
    }
}

pub fn parse_expression(s: &str) -> Result<Morphism> {
    let mut steps: Vec<(Step, String)> = Vec::new();
    let mut anchor: Option<usize> = None;
    let mut tokens = s.split_whitespace().peekable();
    while let Some(tok) = tokens.next() {
        if let Some(rest) = tok.strip_prefix('@') {
            if anchor.is_some() {
                return Err(Error::parse(tok, "duplicate anchor"));
            }
            let digits = if rest.is_empty() {
                tokens
                    .next()
                    .ok_or_else(|| Error::parse(tok, "anchor needs an object rank"))?
            } else {
                rest
            };
            anchor = Some(parse_index(digits, digits)?);
            continue;
        }
        let step = if let Some(d) = tok.strip_prefix('s') {
            Step::Sigma(parse_index(tok, d)?)
        } else if let Some(d) = tok.strip_prefix('d') {
            Step::Delta(parse_index(tok, d)?)
        } else if tok == "t" {
            Step::Tau(1)
        } else if let Some(k) = tok.strip_prefix("t^") {
            Step::Tau(k.parse().map_err(|_| Error::parse(tok, "expected an integer exponent"))?)
        } else {
            return Err(Error::parse(tok, "unknown token (expected s<j>, d<j>, t, t^<k> or @<n>)"));
        };
        steps.push((step, tok.to_string()));
    }
    let source = anchor.ok_or_else(|| Error::parse(s, "missing anchor `@<n>`"))?;
    let cyclic_needed = steps.iter().any(|(st, _)| matches!(st, Step::Tau(_)));
    let mut current = source;
    let mut maps: Vec<LambdaMap> = Vec::new();
    let mut dmaps: Vec<DeltaMap> = Vec::new();
    for (step, tok) in &steps {
        let (d, l) = match *step {
            Step::Sigma(j) => {
                if current == 0 {
                    return Err(Error::parse(tok.as_str(), "no degeneracy out of [0]"));
                }
                let f = DeltaMap::sigma(j, current - 1).map_err(|e| Error::parse(tok.as_str(), e.to_string()))?;
                (Some(f), None)
            }
            Step::Delta(j) => {
                let f = DeltaMap::delta(j, current + 1).map_err(|e| Error::parse(tok.as_str(), e.to_string()))?;
                (Some(f), None)
            }
            Step::Tau(k) => (None, Some(LambdaMap::tau_pow(current, k))),
        };
        if let Some(f) = d {
            current = f.target;
            maps.push(LambdaMap::embed(&f));
            dmaps.push(f);
        } else if let Some(f) = l {
            maps.push(f);
        }
    }
    if cyclic_needed {
        let mut acc = LambdaMap::identity(source);
        for f in &maps {
            acc = cyclic::compose(&acc, f)?;
        }
        Ok(Morphism::Lambda(acc))
    } else {
        let mut acc = DeltaMap::identity(source);
        for f in &dmaps {
            acc = simplicial::compose(&acc, f)?;
        }
        Ok(Morphism::Delta(acc))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expressions() {
        let m = parse_expression("d0 @ 0").unwrap();
        assert_eq!(m, Morphism::Delta(DeltaMap::delta(0, 1).unwrap()));
        let m = parse_expression("d0 s0 @1").unwrap();
        assert_eq!(m.source(), 1);
        let t = parse_expression("t t @ 1").unwrap();
        assert_eq!(t, Morphism::Lambda(LambdaMap::identity(1)));
        let t = parse_expression("t^-1 @ 2").unwrap();
        assert_eq!(t, Morphism::Lambda(LambdaMap::tau_pow(2, 2)));
        assert_eq!(parse_expression("t @ 2").unwrap(), Morphism::Lambda(LambdaMap::tau(2)));
    }

    #[test]
    fn errors_name_the_token() {
        let e = parse_expression("d0 x7 @ 1").unwrap_err();
        assert!(e.to_string().contains("x7"));
        let e = parse_expression("s0 @ 0").unwrap_err();
        assert!(e.to_string().contains("s0"));
        assert!(parse_expression("d0").is_err());
    }

    #[test]
    fn json_roundtrip() {
        let m = Morphism::Lambda(LambdaMap::tau(2));
        assert_eq!(m.to_json(), r#"{"cat":"lambda","source":2,"target":2,"values":[2,3,4]}"#);
        assert_eq!(parse_morphism(&m.to_json()).unwrap(), m);
        assert!(parse_morphism(r#"{"cat":"delta","source":1,"target":1,"values":[1,0]}"#).is_err());
    }
}
