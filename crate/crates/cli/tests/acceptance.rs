//! One PASS/FAIL line per acceptance criterion. Exits nonzero if any fail.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{brute_delta_hom, brute_lambda_hom, eval_word, Closure, Periodic};
use cyclic_core::abstract_circle::{
    basepoint_iso, circle_axiom_audit, quotient_circle, reconstruct, reconstruction_map, ArcMap, FiniteArch,
};
use cyclic_core::cyclic;
use cyclic_core::cyclic_set::{circle, circle_power};
use cyclic_core::interval::{
    enumerate_finite_seqs, fin_affine_act, sample_seq, simplex_decode, simplex_encode, FiniteCyclicStructure,
    FiniteInterval, Interval, MonotoneSeq, RationalUnit, SimplexCyclicStructure,
};
use cyclic_core::ordered_group::{
    audit_order, make_cyclic_structure, IntegerGroup, OrderedGroup, PlElement, PlGroup, RationalGroup,
};
use cyclic_core::rational::{int, rat, sample_unit};
use cyclic_core::realization::{
    circle_mul, classify, coc3_defect, glue, reduce, right_action, roundtrip_audit, ExtensionElement,
};
use cyclic_core::relations::{delta_relation_audit, delta_relations, lambda_presentation_audit, lambda_relations};
use cyclic_core::{simplicial, FinMap, LambdaMap, Rational};

fn grid(d: i64) -> Vec<Rational> {
    let set: BTreeSet<Rational> = (1..=d).flat_map(|q| (0..q).map(move |p| rat(p, q))).collect();
    set.into_iter().collect()
}

fn add_mod_one(x: &Rational, y: &Rational) -> Rational {
    let s = x + y;
    if s >= int(1) {
        s - int(1)
    } else {
        s
    }
}

/// Relations in the integer model, n <= 6, within 5 s.
fn relations() {
    let start = Instant::now();
    for rel in delta_relations(6) {
        assert_eq!(eval_word(&rel.lhs, rel.source()), eval_word(&rel.rhs, rel.source()), "{rel}");
    }
    for rel in lambda_relations(6) {
        let (l, r) = (eval_word(&rel.lhs, rel.source()), eval_word(&rel.rhs, rel.source()));
        assert!(l.same_class(&r), "{rel}");
    }
    assert!(delta_relation_audit(6).passed());
    assert!(lambda_presentation_audit(6).passed());
    let t = start.elapsed().as_secs_f64();
    assert!(t < 5.0, "took {t:.2} s");
}

fn decomposition() {
    for n in 0..=4 {
        for m in 0..=4 {
            let deltas = brute_delta_hom(n, m);
            let lambdas = brute_lambda_hom(n, m);
            assert_eq!(lambdas.len(), (n + 1) * deltas.len());
            let lib: BTreeSet<Vec<i64>> = cyclic::enumerate_hom(n, m).into_iter().map(|f| f.values).collect();
            assert_eq!(lib, lambdas.iter().cloned().collect::<BTreeSet<_>>());
            assert_eq!(simplicial::enumerate_hom(n, m).len(), deltas.len());
            for f in lambdas {
                let target = Periodic { n, m, f: f.clone() };
                let hits: Vec<(Vec<i64>, usize)> = deltas
                    .iter()
                    .flat_map(|h| (0..=n).map(move |a| (h.clone(), a)))
                    .filter(|(h, a)| {
                        let rot = Periodic { n, m: n, f: (0..=n as i64).map(|x| x - *a as i64).collect() };
                        rot.then(&Periodic { n, m, f: h.clone() }).same_class(&target)
                    })
                    .collect();
                assert_eq!(hits.len(), 1, "{f:?}");
                let (h, a) = LambdaMap::new(n, m, f).unwrap().decompose();
                assert_eq!((h.values.iter().map(|&v| v as i64).collect::<Vec<_>>(), a), hits[0]);
            }
        }
    }
}

fn mu_functor() {
    for n in 0..=3 {
        for k in 0..=3 {
            for m in 0..=3 {
                let gs = cyclic::enumerate_hom(k, m);
                for f in cyclic::enumerate_hom(n, k) {
                    let mf = common::mu(&Periodic::of(&f));
                    assert_eq!(f.mu().values, mf);
                    for g in &gs {
                        let mg = common::mu(&Periodic::of(g));
                        let want: Vec<usize> = mf.iter().map(|&x| mg[x]).collect();
                        assert_eq!(cyclic::compose(&f, g).unwrap().mu().values, want);
                    }
                }
            }
        }
    }
}

fn square() {
    let cc = circle_power(2, 3);
    assert!(cc.audit().passed());
    assert_eq!(cc.simplicial.census(), vec![1, 3, 2, 0]);
    let c = |n: usize, l: &str| cc.simplicial.find_label(n, l).unwrap_or_else(|| panic!("no {l}"));
    let (l1, l2, l3) = (c(1, "(1, τ)"), c(1, "(τ, 1)"), c(1, "(τ, τ)"));
    let d = &cc.simplicial.delta[2];
    let (t1, t2) = (c(2, "(τ, τ^2)"), c(2, "(τ^2, τ)"));
    assert_eq!([d[0][t1], d[1][t1], d[2][t1]], [l1, l3, l2]);
    assert_eq!([d[0][t2], d[1][t2], d[2][t2]], [l2, l3, l1]);
    let degeneracies = [
        ("(1, 1)", 0, "(1, 1)"),
        ("(1, τ)", 0, "(1, τ^2)"),
        ("(τ, 1)", 0, "(τ^2, 1)"),
        ("(τ, τ)", 0, "(τ^2, τ^2)"),
        ("(1, 1)", 1, "(1, 1)"),
        ("(1, τ)", 1, "(1, τ)"),
        ("(τ, 1)", 1, "(τ, 1)"),
        ("(τ, τ)", 1, "(τ, τ)"),
    ];
    for (x, j, y) in degeneracies {
        assert_eq!(cc.simplicial.sigma[1][j][c(1, x)], c(2, y), "{x} σ{j}");
    }
}

fn tables() {
    let out = Command::new(env!("CARGO_BIN_EXE_cyclic")).args(["cocycle", "tables"]).output().unwrap();
    assert!(out.status.success());
    let want = include_str!("fixtures/cocycle_tables.txt");
    assert_eq!(String::from_utf8(out.stdout).unwrap(), want);
    let rows = want.lines().filter(|l| l.contains("->")).count();
    assert_eq!(rows, 7 + 12 + 6);
}

fn group_law() {
    let cs = make_cyclic_structure(RationalGroup);
    let g = grid(24);
    for x in &g {
        for y in &g {
            assert_eq!(circle_mul(&cs, x, y), add_mod_one(x, y));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..1000 {
        let (x, y) = (sample_unit(&mut rng, 1000) % int(1), sample_unit(&mut rng, 1000) % int(1));
        assert_eq!(circle_mul(&cs, &x, &y), add_mod_one(&x, &y));
    }
}

fn coc3() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let simplex = SimplexCyclicStructure::default();
    for _ in 0..1000 {
        let w: Vec<Rational> = (0..4).map(|_| sample_unit(&mut rng, 24) % int(1)).collect();
        assert_eq!(coc3_defect(&simplex, [&w[0], &w[1], &w[2], &w[3]]), 0);
    }
    let pl = make_cyclic_structure(PlGroup);
    for _ in 0..1000 {
        let w: Vec<PlElement> = (0..4).map(|_| pl.interval.sample(&mut rng)).collect();
        assert_eq!(coc3_defect(&pl, [&w[0], &w[1], &w[2], &w[3]]), 0);
    }
}

fn classification() {
    let r = roundtrip_audit(&IntegerGroup { z: 3 }, 200, 0);
    assert!(r.passed(), "{r}");
    let ext = classify(make_cyclic_structure(IntegerGroup { z: 3 }), 100, 0).unwrap();
    let to_int = |e: &ExtensionElement<i64>| e.k * 3 + e.x;
    let elems: Vec<_> = (-3..=3).flat_map(|k| (0..3).map(move |x| ExtensionElement { k, x })).collect();
    assert_eq!(to_int(&ext.central()), 3);
    for a in &elems {
        for b in &elems {
            assert_eq!(to_int(&ext.mul(a, b)), to_int(a) + to_int(b));
            assert_eq!(ext.compare(a, b), to_int(a).cmp(&to_int(b)));
        }
    }
    // the finite structures n* give Z with c = multiplication by n + 1
    for n in 0..=4 {
        let ext = classify(FiniteCyclicStructure::new(n), 50, 0).unwrap();
        assert_eq!(ext.central().k * (n as i64 + 1) + ext.central().x as i64, n as i64 + 1);
    }
    let r = roundtrip_audit(&RationalGroup, 200, 0);
    assert!(r.passed(), "{r}");
    let r = roundtrip_audit(&PlGroup, 200, 0);
    assert!(r.passed(), "{r}");
}

fn pl_pair() {
    let pl = PlGroup;
    let (phi, psi) = PlGroup::noncommuting_pair();
    let zero = int(0);
    assert_ne!(pl.mul(&phi, &psi), pl.mul(&psi, &phi));
    assert_ne!(phi.eval(&psi.eval(&zero)), psi.eval(&phi.eval(&zero)));
    let r = audit_order(&pl, 200, 3);
    assert!(r.passed(), "{r}");
}

fn reduction() {
    let start = Instant::now();
    let c = circle(3);
    let s = &c.simplicial;
    let interval = FiniteInterval { n: 2 };
    let push = |beta: &[usize], phi: &[usize], m: usize| -> Vec<usize> {
        let n = phi.len() - 1;
        let ext = |x: usize| if x == n + 1 { m + 1 } else { phi[x] };
        (0..=m + 1).map(|y| beta[(0..=n + 1).find(|&x| ext(x) >= y).unwrap()]).collect()
    };
    let mut classes: Closure<(usize, Vec<usize>)> = Closure::new();
    let mut pairs = Vec::new();
    for n in 0..=3 {
        for beta in enumerate_finite_seqs(&interval, n) {
            for x in 0..s.level_size(n) {
                classes.id(&(x, beta.values.clone()));
                pairs.push((x, beta.values.clone()));
            }
        }
    }
    for m in 0..=3 {
        for x in 0..s.level_size(m) {
            for j in 0..=m {
                if m > 0 {
                    let phi: Vec<usize> = (0..m).map(|i| if i < j { i } else { i + 1 }).collect();
                    for beta in enumerate_finite_seqs(&interval, m - 1) {
                        classes.union(&(s.delta[m][j][x], beta.values.clone()), &(x, push(&beta.values, &phi, m)));
                    }
                }
                if m < 3 {
                    let phi: Vec<usize> = (0..=m + 1).map(|i| if i <= j { i } else { i - 1 }).collect();
                    for beta in enumerate_finite_seqs(&interval, m + 1) {
                        classes.union(&(s.sigma[m][j][x], beta.values.clone()), &(x, push(&beta.values, &phi, m)));
                    }
                }
            }
        }
    }
    let mut seen: std::collections::HashMap<usize, _> = std::collections::HashMap::new();
    let mut back: std::collections::HashMap<_, usize> = std::collections::HashMap::new();
    for (x, values) in pairs {
        let p = reduce(s, &interval, x, &MonotoneSeq { values: values.clone() }).unwrap();
        let root = classes.root(&(x, values));
        assert_eq!(seen.entry(root).or_insert_with(|| p.clone()), &p, "class split");
        assert_eq!(*back.entry(p).or_insert(root), root, "classes merged");
    }
    let t = start.elapsed().as_secs_f64();
    assert!(t < 10.0, "took {t:.2} s");
}

fn action() {
    let set = circle(3);
    let cs = SimplexCyclicStructure::default();
    let i = RationalUnit;
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..200 {
        let n = rng.gen_range(0..=2);
        let beta = sample_seq(&i, n, &mut rng);
        let x = reduce(&set.simplicial, &i, rng.gen_range(0..=n), &beta).unwrap();
        let (g, h) = (glue(&i, &i.sample(&mut rng)), glue(&i, &i.sample(&mut rng)));
        assert_eq!(right_action(&set, &cs, &x, &int(0)).unwrap(), x);
        let lhs = right_action(&set, &cs, &right_action(&set, &cs, &x, &g).unwrap(), &h).unwrap();
        assert_eq!(lhs, right_action(&set, &cs, &x, &circle_mul(&cs, &g, &h)).unwrap());
    }
}

fn circles() {
    for p in 1..=4 {
        let c = quotient_circle(&FiniteArch { period: p });
        assert!((0..p).all(|x| c.fiber(x).len() == p + 1));
        let r = circle_axiom_audit(&c);
        assert!(r.passed(), "{r}");
        for x in 0..p {
            let rec = reconstruct(&c, x).unwrap();
            let back = quotient_circle(&rec.arch());
            assert!(reconstruction_map(&c, &rec).is_isomorphism(&back, &c));
        }
    }
    let c = quotient_circle(&FiniteArch { period: 3 });
    let psi = |x, y| basepoint_iso(&c, x, y).unwrap();
    for x in 0..3 {
        for y in 0..3 {
            if x != y {
                assert_eq!(psi(y, x).then(&psi(x, y)).unwrap(), ArcMap::theta(3));
            }
        }
    }
    let witness = (0..3)
        .flat_map(|x| (0..3).flat_map(move |y| (0..3).map(move |z| (x, y, z))))
        .find(|&(x, y, z)| psi(y, x).then(&psi(z, y)).unwrap() != psi(z, x));
    assert!(witness.is_some());
}

fn transposition() {
    for n in 0..=3 {
        for m in 0..=3 {
            for f in cyclic::enumerate_hom(n, m) {
                let p = Periodic::of(&f);
                let conj = Periodic { n, m, f: (0..=n as i64).map(|x| p.eval(x - 1) + 1).collect() };
                let tt = f.transpose().transpose();
                assert!(Periodic::of(&tt).same_class(&conj), "{f:?}");
                let in_delta = f.values[n] <= m as i64;
                let t_in_op = common::transpose(&p).f[0].rem_euclid(n as i64 + 1) == 0;
                assert_eq!(in_delta, t_in_op, "{f:?}");
                assert_eq!(f.as_delta().is_some(), f.transpose().values[0] == 0);
            }
        }
    }
}

fn affine() {
    let mut pts = grid(6);
    pts.push(int(1));
    let group = make_cyclic_structure(RationalGroup);
    let simplex = SimplexCyclicStructure::default();
    for n in 0..=3 {
        // all sequences 0 <= β_1 <= ... <= β_n <= 1 through the grid
        let mut seqs: Vec<Vec<Rational>> = vec![vec![int(0)]];
        for _ in 0..n {
            seqs = seqs
                .into_iter()
                .flat_map(|s| {
                    let last = s.last().unwrap().clone();
                    pts.iter().filter(move |p| **p >= last).map(move |p| {
                        let mut t = s.clone();
                        t.push(p.clone());
                        t
                    })
                })
                .collect();
        }
        for s in seqs.iter_mut() {
            s.push(int(1));
        }
        for values in seqs {
            let beta = MonotoneSeq { values };
            assert_eq!(
                cyclic_core::interval::CyclicStructure::tau(&simplex, &beta),
                cyclic_core::interval::CyclicStructure::tau(&group, &beta)
            );
            for m in 0..=3 {
                for phi in simplicial::enumerate_hom(n, m) {
                    let f = FinMap { source: n, target: m, values: phi.values.clone() };
                    let u = fin_affine_act(&f, &simplex_encode(&beta)).unwrap();
                    assert_eq!(simplex_decode(&u), beta.act(&phi).unwrap());
                }
            }
        }
    }
}

fn message(e: Box<dyn std::any::Any + Send>) -> String {
    e.downcast_ref::<String>()
        .cloned()
        .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
        .unwrap_or_else(|| "panicked".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn()); 14] = [
        ("simplicial relations and cyclic presentation, n <= 6, under 5 s", relations),
        ("unique decomposition and |Hom_Λ| = (n+1)|Hom_Δ|, n, m <= 4", decomposition),
        ("μ is a functor, ranks <= 3", mu_functor),
        ("C×C census (1,3,2,0), faces and degeneracies", square),
        ("cocycle tables match the reference transcript", tables),
        ("circle group law is addition mod 1", group_law),
        ("three-cocycle identity on 1000 quadruples, Q and PL", coc3),
        ("classification round trips for Z (z = 3), Q and PL", classification),
        ("PL pair does not commute; PL order audit", pl_pair),
        ("reduce equals the generated equivalence on C over 2*, under 10 s", reduction),
        ("right action laws on |C| over Q", action),
        ("abstract circles: axioms, reconstruction, basepoint change", circles),
        ("double transpose is conjugation by translation; Δ and Δ^op images", transposition),
        ("affine action matches the sequence action; rotations agree", affine),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (k, (desc, check)) in criteria.iter().enumerate() {
        match panic::catch_unwind(AssertUnwindSafe(check)) {
            Ok(()) => println!("PASS {}. {desc}", k + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL {}. {desc}: {}", k + 1, message(e));
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
