use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cyclic_core::interval::{
    cyclic_audit, fin_affine_act, homogeneity_audit, simplex_decode, simplex_encode, AccumulationInterval,
    CyclicStructure, FiniteCyclicStructure, FiniteInterval, Interval, MonotoneSeq, RationalUnit,
    SimplexCyclicStructure, SpikePoint,
};
use cyclic_core::ordered_group::{
    audit_order, make_cyclic_structure, IntegerGroup, OrderedGroup, PlElement, PlGroup, RationalGroup,
};
use cyclic_core::rational::{rat, sample_unit};
use cyclic_core::realization::{
    circle_inv, circle_mul, classify, coc3_defect, cocycle, glue, roundtrip_audit, ExtensionElement,
};
use cyclic_core::{simplicial, FinMap, Rational};

fn add_mod_one(x: &Rational, y: &Rational) -> Rational {
    let s = x + y;
    if s >= Rational::one() {
        s - Rational::one()
    } else {
        s
    }
}

/// Every fraction in `[0, 1)` with denominator at most `d`.
fn grid(d: i64) -> Vec<Rational> {
    let set: BTreeSet<Rational> = (1..=d).flat_map(|q| (0..q).map(move |p| rat(p, q))).collect();
    set.into_iter().collect()
}

/// Every non-decreasing sequence of rank `n` through the points of `pts`.
fn seqs_through(pts: &[Rational], n: usize) -> Vec<MonotoneSeq<Rational>> {
    fn rec(pts: &[Rational], n: usize, from: usize, cur: &mut Vec<Rational>, out: &mut Vec<MonotoneSeq<Rational>>) {
        if cur.len() == n + 1 {
            let mut values = cur.clone();
            values.push(Rational::one());
            out.push(MonotoneSeq { values });
            return;
        }
        for i in from..pts.len() {
            cur.push(pts[i].clone());
            rec(pts, n, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(pts, n, 0, &mut vec![Rational::zero()], &mut out);
    out
}

#[test]
fn group_law_on_the_rational_circle_is_addition() {
    let cs = make_cyclic_structure(RationalGroup);
    let simplex = SimplexCyclicStructure::default();
    let g = grid(24);
    for x in &g {
        for y in &g {
            let want = add_mod_one(x, y);
            assert_eq!(circle_mul(&cs, x, y), want, "{x} + {y}");
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..1000 {
        let (x, y) = (sample_unit(&mut rng, 1000), sample_unit(&mut rng, 1000));
        let (x, y) = (x % Rational::one(), y % Rational::one());
        let want = add_mod_one(&x, &y);
        assert_eq!(circle_mul(&cs, &x, &y), want);
        assert_eq!(circle_mul(&simplex, &x, &y), want);
        assert_eq!(add_mod_one(&x, &circle_inv(&cs, &x)), Rational::zero());
        // the carry of x + y
        assert_eq!(cocycle(&cs, &x, &y), i64::from(&x + &y >= Rational::one()));
    }
}

#[test]
fn three_cocycle_identity_holds() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let cs = make_cyclic_structure(RationalGroup);
    let simplex = SimplexCyclicStructure::default();
    for _ in 0..1000 {
        let w: Vec<Rational> = (0..4).map(|_| sample_unit(&mut rng, 24) % Rational::one()).collect();
        assert_eq!(coc3_defect(&cs, [&w[0], &w[1], &w[2], &w[3]]), 0);
        assert_eq!(coc3_defect(&simplex, [&w[0], &w[1], &w[2], &w[3]]), 0);
    }
    let pl = make_cyclic_structure(PlGroup);
    let i = pl.interval.clone();
    for _ in 0..1000 {
        let w: Vec<PlElement> = (0..4).map(|_| i.sample(&mut rng)).collect();
        assert_eq!(coc3_defect(&pl, [&w[0], &w[1], &w[2], &w[3]]), 0);
    }
}

#[test]
fn carry_law_for_the_rational_cocycle() {
    // c(x, y) + c(x + y, z) = c(y, z) + c(x, y + z) with + read mod 1
    let cs = make_cyclic_structure(RationalGroup);
    let g = grid(6);
    for x in &g {
        for y in &g {
            for z in &g {
                let l = cocycle(&cs, x, y) + cocycle(&cs, &add_mod_one(x, y), z);
                let r = cocycle(&cs, y, z) + cocycle(&cs, x, &add_mod_one(y, z));
                assert_eq!(l, r);
            }
        }
    }
}

#[test]
fn finite_intervals_classify_to_the_integers() {
    for n in 0..=4 {
        let ext = classify(FiniteCyclicStructure::new(n), 50, 3).unwrap();
        let p = n as i64 + 1;
        let to_int = |e: &ExtensionElement<usize>| e.k * p + e.x as i64;
        let all: Vec<ExtensionElement<usize>> =
            (-2..=2).flat_map(|k| (0..=n).map(move |x| ExtensionElement { k, x })).collect();
        assert_eq!(to_int(&ext.central()), p);
        for a in &all {
            for b in &all {
                assert_eq!(to_int(&ext.mul(a, b)), to_int(a) + to_int(b));
                assert_eq!(ext.compare(a, b), to_int(a).cmp(&to_int(b)));
            }
            assert_eq!(to_int(&ext.inv(a)), -to_int(a));
        }
    }
}

#[test]
fn round_trips() {
    for seed in 0..3 {
        let r = roundtrip_audit(&IntegerGroup { z: 3 }, 200, seed);
        assert!(r.passed(), "{:?}", r.failures);
        let r = roundtrip_audit(&RationalGroup, 200, seed);
        assert!(r.passed(), "{:?}", r.failures);
    }
    let r = roundtrip_audit(&PlGroup, 200, 0);
    assert!(r.passed(), "{:?}", r.failures);
}

#[test]
fn integer_structure_is_the_finite_one() {
    // [0, z] in Z is (z - 1)*, and both rotate gaps
    for z in 1..=4usize {
        let g = make_cyclic_structure(IntegerGroup { z: z as i64 });
        let f = FiniteCyclicStructure::new(z - 1);
        for n in 0..=3 {
            for phi in simplicial::enumerate_interval_maps(n, z - 1) {
                let b = MonotoneSeq { values: phi.values.clone() };
                let bi = MonotoneSeq { values: phi.values.iter().map(|&v| v as i64).collect() };
                let t = g.tau(&bi).values;
                assert_eq!(t, f.tau(&b).values.iter().map(|&v| v as i64).collect::<Vec<_>>());
            }
        }
    }
}

#[test]
fn gprime_decomposition() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let q = RationalGroup;
    for _ in 0..200 {
        let g = rat(rng.gen_range(-500..500), rng.gen_range(1..30));
        let (k, v) = q.gprime_canonical(&g).unwrap();
        assert!(v >= Rational::zero() && v < Rational::one());
        assert_eq!(rat(k, 1) + &v, g);
    }
    let pl = PlGroup;
    for _ in 0..200 {
        let g = pl.sample(&mut rng);
        let (k, v) = pl.gprime_canonical(&g).unwrap();
        let z = pl.central();
        assert_ne!(pl.compare(&v, &pl.identity()), Ordering::Less);
        assert_eq!(pl.compare(&v, &z), Ordering::Less);
        assert_eq!(pl.mul(&pl.pow(&z, k), &v), g);
    }
}

#[test]
fn pl_pair_does_not_commute() {
    let (phi, psi) = PlGroup::noncommuting_pair();
    let pl = PlGroup;
    assert_ne!(pl.mul(&phi, &psi), pl.mul(&psi, &phi));
    // ψ is x + 1/2 and φ has slope 1/2 on [0, 1/2], so φ(ψ(0)) = 1/4
    // and ψ(φ(0)) = 1/2
    let zero = Rational::zero();
    assert_eq!(phi.eval(&psi.eval(&zero)), rat(1, 4));
    assert_eq!(psi.eval(&phi.eval(&zero)), rat(1, 2));
    for x in grid(8) {
        assert_eq!(phi.eval(&(&x + Rational::one())), phi.eval(&x) + Rational::one());
    }
    let r = audit_order(&pl, 200, 42);
    assert!(r.passed(), "{:?}", r.failures);
}

#[test]
fn pl_composition_is_pointwise() {
    let pl = PlGroup;
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..100 {
        let (a, b) = (pl.sample(&mut rng), pl.sample(&mut rng));
        let ab = pl.mul(&a, &b);
        let inv = pl.inv(&a);
        for x in grid(10) {
            assert_eq!(ab.eval(&x), a.eval(&b.eval(&x)));
            assert_eq!(inv.eval(&a.eval(&x)), x);
        }
    }
}

#[test]
fn order_audits_pass() {
    for seed in 0..3 {
        assert!(audit_order(&IntegerGroup { z: 3 }, 200, seed).passed());
        assert!(audit_order(&RationalGroup, 200, seed).passed());
    }
}

#[test]
fn affine_action_matches_sequence_action() {
    let pts: Vec<Rational> = {
        let mut g = grid(6);
        g.push(Rational::one());
        g
    };
    for n in 0..=3 {
        let seqs = seqs_through(&pts, n);
        for m in 0..=3 {
            for phi in simplicial::enumerate_hom(n, m) {
                let f = FinMap { source: n, target: m, values: phi.values.clone() };
                for beta in &seqs {
                    // push the gaps forward by φ
                    let gaps: Vec<Rational> = beta.values.windows(2).map(|w| &w[1] - &w[0]).collect();
                    let mut pushed = vec![Rational::zero(); m + 1];
                    for (j, g) in gaps.iter().enumerate() {
                        pushed[phi.values[j]] += g;
                    }
                    let u = fin_affine_act(&f, &simplex_encode(beta)).unwrap();
                    assert_eq!(u.coords, pushed);
                    assert_eq!(simplex_decode(&u), beta.act(&phi).unwrap());
                }
            }
        }
        for beta in &seqs {
            assert_eq!(&simplex_decode(&simplex_encode(beta)), beta);
        }
    }
}

#[test]
fn simplex_rotation_matches_the_group_one() {
    let simplex = SimplexCyclicStructure::default();
    let group = make_cyclic_structure(RationalGroup);
    let mut pts = grid(6);
    pts.push(Rational::one());
    for n in 0..=3 {
        for beta in seqs_through(&pts, n) {
            let t = simplex.tau(&beta);
            assert_eq!(t, group.tau(&beta));
            // rotating the gaps left by one
            let mut gaps: Vec<Rational> = beta.values.windows(2).map(|w| &w[1] - &w[0]).collect();
            gaps.rotate_left(1);
            let mut acc = Rational::zero();
            let mut values = vec![acc.clone()];
            for g in gaps {
                acc += g;
                values.push(acc.clone());
            }
            assert_eq!(t.values, values);
        }
    }
    assert!(cyclic_audit(&simplex, 3, 50, 1).passed());
}

/// A candidate that leaves sequences alone; it is never a cyclic
/// structure, but the homogeneity check must reject it first.
#[derive(Debug, Clone)]
struct Frozen(AccumulationInterval);

impl CyclicStructure for Frozen {
    type I = AccumulationInterval;
    fn interval(&self) -> &AccumulationInterval {
        &self.0
    }
    fn tau(&self, beta: &MonotoneSeq<SpikePoint>) -> MonotoneSeq<SpikePoint> {
        beta.clone()
    }
    fn name(&self) -> String {
        "frozen".into()
    }
}

#[test]
fn one_limit_point_rules_out_a_structure() {
    let spike = AccumulationInterval;
    let r = homogeneity_audit(&spike, 100, 0);
    assert!(!r.passed());
    assert!(r.failures.iter().all(|f| f.ends_with("u is a limit point")), "{:?}", r.failures);
    let err = classify(Frozen(spike), 50, 0).unwrap_err();
    assert!(err.to_string().contains("homogeneity"), "{err}");
    for x in ["b", "u-1/3", "u", "u+1/7", "t"] {
        assert_eq!(spike.show(&spike.parse_elem(x).unwrap()), x);
    }
    assert!(spike.lt(&SpikePoint::Below(9), &SpikePoint::Limit));
    assert!(spike.lt(&SpikePoint::Above(2), &SpikePoint::Above(1)));

    assert!(homogeneity_audit(&FiniteInterval { n: 3 }, 100, 0).passed());
    assert!(homogeneity_audit(&RationalUnit, 100, 0).passed());
    assert!(homogeneity_audit(&make_cyclic_structure(PlGroup).interval, 100, 0).passed());
    assert!(homogeneity_audit(&make_cyclic_structure(IntegerGroup { z: 4 }).interval, 100, 0).passed());
}

#[test]
fn left_translations_are_transitive() {
    let q = make_cyclic_structure(RationalGroup);
    let pl = make_cyclic_structure(PlGroup);
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..200 {
        let (u, v) = (sample_unit(&mut rng, 24) % Rational::one(), sample_unit(&mut rng, 24) % Rational::one());
        let g = circle_mul(&q, &v, &circle_inv(&q, &u));
        assert_eq!(circle_mul(&q, &g, &u), v);
    }
    for _ in 0..50 {
        let u = glue(&pl.interval, &pl.interval.sample(&mut rng));
        let v = glue(&pl.interval, &pl.interval.sample(&mut rng));
        let g = circle_mul(&pl, &v, &circle_inv(&pl, &u));
        assert_eq!(circle_mul(&pl, &g, &u), v);
    }
}
