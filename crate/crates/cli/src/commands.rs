use std::cmp::Ordering;
use std::fmt::Write as _;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use cyclic_core::abstract_circle::{
    circle_axiom_audit, quotient_circle, reconstruct, reconstruction_map, AbstractCircle, FiniteArch,
};
use cyclic_core::cyclic::{self, crossed_decompose};
use cyclic_core::cyclic_set::FiniteCyclicSet;
use cyclic_core::expr::Morphism;
use cyclic_core::interval::{CyclicStructure, FiniteCyclicStructure, Interval};
use cyclic_core::ordered_group::{audit_order, make_cyclic_structure, OrderedGroup, PlElement, PlGroup, RationalGroup};
use cyclic_core::realization::{
    self, coc3_defect, cocycle, glue, iota, reduce, right_action, rho, roundtrip_audit,
    ExtensionElement, RealizationPoint,
};
use cyclic_core::tables::{cocycle_tables as build_tables, render_text};
use cyclic_core::{simplicial, AuditReport, DeltaMap, LambdaMap};

use crate::input::{self, Model};
use crate::{Failure, Opts, Output};

fn done(text: String, json: Value) -> Result<Output, Failure> {
    Ok(Output { text, json, ok: true })
}

fn delta_json(f: &DeltaMap) -> Value {
    serde_json::to_value(Morphism::Delta(f.clone())).expect("serialisable")
}

fn lambda_json(f: &LambdaMap) -> Value {
    serde_json::to_value(Morphism::Lambda(f.clone())).expect("serialisable")
}

fn morphism_output(v: Value) -> Result<Output, Failure> {
    done(format!("{v}\n"), v)
}

/// Runs `cs`-generic code for the structure named by `--model`.
macro_rules! with_model {
    ($opts:expr, $cs:ident => $body:expr) => {
        match input::model(&$opts.model)? {
            Model::Finite(n) => {
                let $cs = FiniteCyclicStructure::new(n);
                $body
            }
            Model::Rational => {
                let $cs = make_cyclic_structure(RationalGroup);
                $body
            }
            Model::Pl => {
                let $cs = make_cyclic_structure(PlGroup);
                $body
            }
        }
    };
}

pub fn audit_output(reports: Vec<AuditReport>) -> Output {
    let mut text = String::new();
    for r in &reports {
        let _ = writeln!(text, "{r}");
        for f in r.failures.iter().take(20) {
            let _ = writeln!(text, "  {f}");
        }
        if r.failures.len() > 20 {
            let _ = writeln!(text, "  ... {} more", r.failures.len() - 20);
        }
    }
    let ok = reports.iter().all(|r| r.passed());
    Output {
        text,
        json: json!({ "passed": ok, "audits": reports }),
        ok,
    }
}

pub fn delta_compose(maps: &[String]) -> Result<Output, Failure> {
    let mut acc: Option<DeltaMap> = None;
    for m in maps {
        let f = input::morphism(m)?.to_delta()?;
        acc = Some(match acc {
            None => f,
            Some(a) => simplicial::compose(&a, &f)?,
        });
    }
    morphism_output(delta_json(&acc.expect("at least one map")))
}

pub fn delta_factor(map: &str) -> Result<Output, Failure> {
    let f = input::morphism(map)?.to_delta()?;
    let (deltas, sigmas) = f.epi_mono_factor();
    // applied order: the degeneracies (last written first), then the faces
    let mut tokens: Vec<String> = sigmas.iter().rev().map(|j| format!("s{j}")).collect();
    tokens.extend(deltas.iter().rev().map(|j| format!("d{j}")));
    tokens.push(format!("@{}", f.source));
    let expression = tokens.join(" ");
    let written: Vec<String> = deltas
        .iter()
        .map(|j| format!("δ{j}"))
        .chain(sigmas.iter().map(|j| format!("σ{j}")))
        .collect();
    let text = format!(
        "{} = {}\nexpression: {expression}\n",
        delta_json(&f),
        if written.is_empty() { "id".into() } else { written.join(" ∘ ") }
    );
    done(
        text,
        json!({ "map": delta_json(&f), "deltas": deltas, "sigmas": sigmas, "expression": expression }),
    )
}

pub fn lambda_compose(maps: &[String]) -> Result<Output, Failure> {
    let fs = maps
        .iter()
        .map(|m| input::morphism(m).map(|f| f.to_lambda()))
        .collect::<Result<Vec<_>, _>>()?;
    morphism_output(lambda_json(&cyclic::compose_all(&fs)?))
}

pub fn lambda_decompose(map: &str) -> Result<Output, Failure> {
    let f = input::morphism(map)?.to_lambda();
    let (h, a) = f.decompose();
    let text = format!("h = {}\na = {a}\n", delta_json(&h));
    done(text, json!({ "map": lambda_json(&f), "h": delta_json(&h), "a": a }))
}

pub fn lambda_crossed(gamma: &str, phi: &str) -> Result<Output, Failure> {
    let g = input::morphism(gamma)?.to_lambda();
    let p = input::morphism(phi)?.to_delta()?;
    let (h, g2) = crossed_decompose(&g, &p)?;
    let text = format!("h = {}\ngamma' = {}\n", delta_json(&h), lambda_json(&g2));
    done(text, json!({ "h": delta_json(&h), "gamma_prime": lambda_json(&g2) }))
}

pub fn lambda_transpose(map: &str) -> Result<Output, Failure> {
    let f = input::morphism(map)?.to_lambda();
    morphism_output(lambda_json(&f.transpose()))
}

pub fn lambda_enumerate(source: usize, target: usize) -> Output {
    let all: Vec<Value> = cyclic::enumerate_hom(source, target).iter().map(lambda_json).collect();
    let text = all.iter().map(|v| format!("{v}\n")).collect();
    Output {
        text,
        json: Value::Array(all),
        ok: true,
    }
}

pub fn set_census(set: &FiniteCyclicSet) -> Result<Output, Failure> {
    let census = set.simplicial.census();
    let mut text = format!(
        "census: {}\n",
        census.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
    );
    let mut cells = Vec::new();
    for n in 0..=set.truncation() {
        let labels: Vec<String> = set
            .simplicial
            .nondegenerate_cells(n)
            .iter()
            .map(|&x| set.labels(n)[x].clone())
            .collect();
        if !labels.is_empty() {
            let _ = writeln!(text, "level {n}: {}", labels.join(", "));
        }
        cells.push(labels);
    }
    done(text, json!({ "census": census, "nondegenerate": cells }))
}

pub fn set_faces(set: &FiniteCyclicSet, level: Option<usize>) -> Result<Output, Failure> {
    let levels: Vec<usize> = match level {
        Some(n) if n == 0 || n > set.truncation() => {
            return Err(Failure::usage(format!("faces exist at levels 1..={}", set.truncation())))
        }
        Some(n) => vec![n],
        None => (1..=set.truncation()).collect(),
    };
    let mut text = String::new();
    let mut rows = Vec::new();
    for n in levels {
        for (x, j, y) in set.simplicial.face_table(n) {
            let (lx, ly) = (&set.labels(n)[x], &set.labels(n - 1)[y]);
            let _ = writeln!(text, "{lx} δ{j} = {ly}");
            rows.push(json!({ "level": n, "cell": lx, "j": j, "face": ly }));
        }
    }
    done(text, Value::Array(rows))
}

pub fn set_audit(set: &FiniteCyclicSet, nmax: usize) -> Output {
    audit_output(vec![set.audit(), set.functoriality_audit(nmax.min(3))])
}

fn point_output<I: Interval>(set: &FiniteCyclicSet, interval: &I, p: &RealizationPoint<I::Elem>, is_circle: bool) -> Output {
    let seq: Vec<String> = p.seq.values.iter().map(|v| interval.show(v)).collect();
    let label = &set.labels(p.level)[p.cell];
    let mut text = format!("level {}, cell {label}, sequence ({})\n", p.level, seq.join(", "));
    let mut j = json!({ "level": p.level, "cell": p.cell, "label": label, "seq": seq });
    if is_circle {
        let u = interval.show(&iota(interval, p));
        let _ = writeln!(text, "circle point {u}");
        j["iota"] = json!(u);
    }
    Output { text, json: j, ok: true }
}

fn is_circle_arg(arg: &str) -> bool {
    arg == "C"
}

pub fn realize_reduce(o: &Opts, set_arg: &str, cell: &str, seq: &str) -> Result<Output, Failure> {
    let set = input::cyclic_set(set_arg, o.nmax)?;
    with_model!(o, cs => {
        let i = cs.interval();
        let beta = input::sequence(i, seq)?;
        let x = input::cell(&set, beta.rank(), cell)?;
        let p = reduce(&set.simplicial, i, x, &beta)?;
        Ok(point_output(&set, i, &p, is_circle_arg(set_arg)))
    })
}

pub fn realize_act(o: &Opts, set_arg: &str, cell: &str, seq: &str, g: &str) -> Result<Output, Failure> {
    let set = input::cyclic_set(set_arg, o.nmax)?;
    with_model!(o, cs => {
        let i = cs.interval();
        let beta = input::sequence(i, seq)?;
        let x = input::cell(&set, beta.rank(), cell)?;
        let p = reduce(&set.simplicial, i, x, &beta)?;
        let g = glue(i, &input::elem(i, g)?);
        let q = right_action(&set, &cs, &p, &g)?;
        Ok(point_output(&set, i, &q, is_circle_arg(set_arg)))
    })
}

pub fn circle_mul(o: &Opts, x: &str, y: &str) -> Result<Output, Failure> {
    with_model!(o, cs => {
        let i = cs.interval();
        let (x, y) = (input::elem(i, x)?, input::elem(i, y)?);
        let v = i.show(&realization::circle_mul(&cs, &x, &y));
        done(format!("{v}\n"), json!({ "product": v }))
    })
}

pub fn cocycle_eval(o: &Opts, x: &str, y: &str) -> Result<Output, Failure> {
    with_model!(o, cs => {
        let i = cs.interval();
        let (x, y) = (input::elem(i, x)?, input::elem(i, y)?);
        let c = cocycle(&cs, &x, &y);
        let t = i.show(&realization::tau1(&cs, &x));
        let p = i.show(&realization::circle_mul(&cs, &x, &y));
        done(
            format!("c = {c}\ntau1(x) = {t}\nx.y = {p}\n"),
            json!({ "cocycle": c, "tau1_x": t, "product": p }),
        )
    })
}

pub fn cocycle_tables() -> Output {
    let t = build_tables();
    Output {
        text: render_text(&t),
        json: serde_json::to_value(&t).expect("serialisable"),
        ok: true,
    }
}

fn check_structure<C: CyclicStructure>(cs: &C, samples: usize, seed: u64) -> AuditReport {
    let mut r = AuditReport::new(format!("cocycle identities for {}", cs.name()));
    let i = cs.interval();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let one = i.bottom();
    let show = |v: &cyclic_core::interval::ElemOf<C>| i.show(v);
    for _ in 0..samples {
        let w: Vec<_> = (0..4).map(|_| glue(i, &i.sample(&mut rng))).collect();
        let (x, y, z) = (&w[0], &w[1], &w[2]);
        r.check(coc3_defect(cs, [&w[0], &w[1], &w[2], &w[3]]) == 0, || {
            format!("coc3 at {}", w.iter().map(show).collect::<Vec<_>>().join(", "))
        });
        r.check(cocycle(cs, &one, x) == 0 && cocycle(cs, x, &one) == 0, || format!("normalisation at {}", show(x)));
        let xinv = realization::circle_inv(cs, x);
        r.check(cocycle(cs, x, y) == rho(i, &xinv, y), || format!("c(x, y) = ρ(x⁻¹, y) at {}, {}", show(x), show(y)));
        let m = |a: &_, b: &_| realization::circle_mul(cs, a, b);
        r.check(m(&m(x, y), z) == m(x, &m(y, z)), || format!("associativity at {}, {}, {}", show(x), show(y), show(z)));
        r.check(m(x, &one) == *x && m(&one, x) == *x, || format!("identity at {}", show(x)));
        r.check(m(x, &xinv) == one, || format!("inverse at {}", show(x)));
    }
    r
}

pub fn cocycle_check(o: &Opts) -> Result<Output, Failure> {
    let structures = with_model!(o, cs => check_structure(&cs, o.samples, o.seed));
    let mut tables = AuditReport::new("table agreement ω = ρ = c̃");
    for row in build_tables().iter().flat_map(|t| t.rows.clone()) {
        tables.check(row.omega == row.rho && row.rho == row.cocycle_tilde, || format!("row {:?}", row.a));
    }
    Ok(audit_output(vec![structures, tables]))
}

pub fn classify(o: &Opts) -> Result<Output, Failure> {
    match input::model(&o.model)? {
        Model::Finite(n) => {
            let ext = realization::classify(FiniteCyclicStructure::new(n), o.samples.min(100), o.seed)?;
            let p = n as i64 + 1;
            let to_int = |e: &ExtensionElement<usize>| e.k * p + e.x as i64;
            let mut iso = AuditReport::new(format!("(k, x) ↦ k·{p} + x onto Z"));
            let elems: Vec<ExtensionElement<usize>> =
                (-3..=3).flat_map(|k| (0..=n).map(move |x| ExtensionElement { k, x })).collect();
            iso.check(to_int(&ext.central()) == p, || "c(1) is not n+1".into());
            for a in &elems {
                for b in &elems {
                    iso.check(to_int(&ext.mul(a, b)) == to_int(a) + to_int(b), || format!("product of {a:?}, {b:?}"));
                    iso.check(ext.compare(a, b) == to_int(a).cmp(&to_int(b)), || format!("order of {a:?}, {b:?}"));
                }
            }
            let mut out = audit_output(vec![audit_order(&ext, o.samples, o.seed), iso]);
            out.text = format!("finite:{n}: extension group ≅ Z, c = multiplication by {p}\n{}", out.text);
            Ok(out)
        }
        Model::Rational => Ok(audit_output(vec![roundtrip_audit(&RationalGroup, o.samples, o.seed)])),
        Model::Pl => Ok(audit_output(vec![roundtrip_audit(&PlGroup, o.samples, o.seed)])),
    }
}

fn pl_arg(a: &str) -> Result<PlElement, Failure> {
    Ok(PlElement::parse(&input::text_arg(a)?)?)
}

fn pl_output(e: &PlElement) -> Result<Output, Failure> {
    done(format!("{}\n", e.show()), e.to_json())
}

pub fn pl_compose(a: &str, b: &str) -> Result<Output, Failure> {
    let (a, b) = (pl_arg(a)?, pl_arg(b)?);
    pl_output(&PlGroup.mul(&a, &b))
}

pub fn pl_compare(a: &str, b: &str) -> Result<Output, Failure> {
    let (a, b) = (pl_arg(a)?, pl_arg(b)?);
    let sym = match PlGroup.compare(&a, &b) {
        Ordering::Less => "<",
        Ordering::Equal => "=",
        Ordering::Greater => ">",
    };
    done(format!("{sym}\n"), json!({ "order": sym }))
}

pub fn pl_eval(a: &str, x: &str) -> Result<Output, Failure> {
    let a = pl_arg(a)?;
    let x = cyclic_core::rational::parse_rational(&input::text_arg(x)?)?;
    let v = cyclic_core::rational::format_rational(&a.eval(&x));
    done(format!("{v}\n"), json!({ "value": v }))
}

pub fn arc_quotient(period: usize) -> Result<Output, Failure> {
    if period == 0 {
        return Err(Failure::usage("the period must be positive"));
    }
    let c = quotient_circle(&FiniteArch { period });
    let s = c.to_json();
    done(format!("{s}\n"), serde_json::from_str(&s).expect("valid json"))
}

pub fn arc_reconstruct(c: &AbstractCircle, base: Option<&str>) -> Result<Output, Failure> {
    let x = match base {
        None => 0,
        Some(l) => c
            .points
            .iter()
            .position(|p| p == l)
            .ok_or_else(|| Failure::usage(format!("no point labelled `{l}`")))?,
    };
    let r = reconstruct(c, x)?;
    let back = quotient_circle(&r.arch());
    let iso = reconstruction_map(c, &r).is_isomorphism(&back, c);
    let fiber: Vec<&str> = r.order.iter().map(|&a| c.segments[a].as_str()).collect();
    let text = format!(
        "base {}: period {}\nfiber in order: {}\nquotient of the reconstruction is isomorphic: {iso}\n",
        c.points[x],
        r.period(),
        fiber.join(" < ")
    );
    Ok(Output {
        text,
        json: json!({ "base": c.points[x], "period": r.period(), "fiber": fiber, "isomorphism": iso }),
        ok: iso,
    })
}

pub fn arc_audit(c: &AbstractCircle) -> Output {
    audit_output(vec![circle_axiom_audit(c)])
}
