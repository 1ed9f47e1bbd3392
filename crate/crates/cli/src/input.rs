//! Reading command arguments: stdin placeholders, set and circle names,
//! model names, cells and sequences.

use std::io::Read;

use cyclic_core::abstract_circle::{quotient_circle, AbstractCircle, FiniteArch};
use cyclic_core::cyclic_set::{circle, circle_power, point_cyclic, yoneda_cyclic, FiniteCyclicSet};
use cyclic_core::expr::{parse_morphism, Morphism};
use cyclic_core::interval::{Interval, MonotoneSeq};

use crate::Failure;

/// `-` reads standard input; anything else is taken literally.
pub fn text_arg(arg: &str) -> Result<String, Failure> {
    if arg != "-" {
        return Ok(arg.to_string());
    }
    let mut s = String::new();
    std::io::stdin()
        .read_to_string(&mut s)
        .map_err(|e| Failure::usage(format!("reading stdin: {e}")))?;
    Ok(s)
}

/// `-` for stdin, otherwise a file path.
fn file_or_stdin(arg: &str) -> Result<String, Failure> {
    if arg == "-" {
        return text_arg(arg);
    }
    std::fs::read_to_string(arg).map_err(|e| Failure::usage(format!("cannot read `{arg}`: {e}")))
}

pub fn morphism(arg: &str) -> Result<Morphism, Failure> {
    Ok(parse_morphism(&text_arg(arg)?)?)
}

/// `point`, `C`, `CxC`, `CxCxC`, `y:k`, a JSON file, or `-`.
pub fn cyclic_set(arg: &str, truncation: usize) -> Result<FiniteCyclicSet, Failure> {
    let n = truncation;
    Ok(match arg {
        "point" | "pt" => point_cyclic(n),
        "C" => circle(n),
        "CxC" => circle_power(2, n),
        "CxCxC" => circle_power(3, n),
        _ => {
            if let Some(k) = arg.strip_prefix("y:") {
                let k: usize = k
                    .parse()
                    .map_err(|_| Failure::usage(format!("bad Yoneda rank in `{arg}`")))?;
                yoneda_cyclic(k, n)
            } else {
                FiniteCyclicSet::from_json(&file_or_stdin(arg)?)?
            }
        }
    })
}

/// `period:k`, a JSON file, or `-`.
pub fn abstract_circle(arg: &str) -> Result<AbstractCircle, Failure> {
    if let Some(k) = arg.strip_prefix("period:") {
        let period: usize = k
            .parse()
            .ok()
            .filter(|&p| p > 0)
            .ok_or_else(|| Failure::usage(format!("bad period in `{arg}`")))?;
        return Ok(quotient_circle(&FiniteArch { period }));
    }
    Ok(AbstractCircle::from_json(&file_or_stdin(arg)?)?)
}

pub enum Model {
    Finite(usize),
    Rational,
    Pl,
}

pub fn model(arg: &str) -> Result<Model, Failure> {
    match arg {
        "rational" => Ok(Model::Rational),
        "pl" => Ok(Model::Pl),
        _ => arg
            .strip_prefix("finite:")
            .and_then(|n| n.parse().ok())
            .map(Model::Finite)
            .ok_or_else(|| Failure::usage(format!("unknown model `{arg}` (finite:n, rational or pl)"))),
    }
}

/// A cell by index or by label; `t` may stand for `τ`.
pub fn cell(set: &FiniteCyclicSet, level: usize, arg: &str) -> Result<usize, Failure> {
    if level > set.truncation() {
        return Err(Failure::usage(format!("level {level} is above the truncation {}", set.truncation())));
    }
    if let Ok(i) = arg.parse::<usize>() {
        if i < set.level_size(level) {
            return Ok(i);
        }
        return Err(Failure::usage(format!("cell {i} does not exist at level {level}")));
    }
    let s = &set.simplicial;
    s.find_label(level, arg)
        .or_else(|| s.find_label(level, &arg.replace('t', "τ")))
        .ok_or_else(|| Failure::usage(format!("no cell labelled `{arg}` at level {level}")))
}

pub fn elem<I: Interval>(interval: &I, arg: &str) -> Result<I::Elem, Failure> {
    Ok(interval.parse_elem(&text_arg(arg)?)?)
}

/// Full sequence `b, β_1, …, t`; separated by `;` when present (needed
/// for PL elements), else by `,`.
pub fn sequence<I: Interval>(interval: &I, arg: &str) -> Result<MonotoneSeq<I::Elem>, Failure> {
    let text = text_arg(arg)?;
    let sep = if text.contains(';') { ';' } else { ',' };
    let values = text
        .split(sep)
        .map(|v| interval.parse_elem(v.trim()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(MonotoneSeq::new(interval, values)?)
}
