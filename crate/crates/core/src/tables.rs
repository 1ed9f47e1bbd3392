//! The comparison of `ω` with the invariant cocycle on the nondegenerate
//! simplices of `C × C × C` in dimensions 1 to 3, computed on `n*`.

use serde::Serialize;

use crate::cyclic_set::circle_power;
use crate::interval::{CyclicStructure, FiniteCyclicStructure, FiniteInterval, MonotoneSeq};
use crate::realization::{cocycle_tilde, omega, rho};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    /// `γ_j = τ^{a_j}`.
    pub a: [usize; 3],
    pub omega: i64,
    /// `γ_0 γ_1⁻¹ = τ^{b_0}`, `γ_2 γ_1⁻¹ = τ^{b_1}`.
    pub b: [usize; 2],
    pub rho: i64,
    /// `c̃(w_0, w_1, w_2)` computed through the group law, as a cross-check.
    pub cocycle_tilde: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table {
    pub dimension: usize,
    pub rows: Vec<TableRow>,
}

fn row(n: usize, a: [usize; 3]) -> TableRow {
    let cs = FiniteCyclicStructure::new(n);
    let interval = FiniteInterval { n };
    let u = MonotoneSeq {
        values: (0..=n + 1).collect(),
    };
    let p = n + 1;
    let w = a.map(|k| u.values[k]);
    let b = [(a[0] + p - a[1]) % p, (a[2] + p - a[1]) % p];
    let v = cs.tau_pow(&u, a[1]);
    TableRow {
        a,
        omega: omega(&interval, &w[0], &w[1], &w[2]),
        b,
        rho: rho(&interval, &v.values[b[0]], &v.values[b[1]]),
        cocycle_tilde: cocycle_tilde(&cs, [&w[0], &w[1], &w[2]]),
    }
}

/// Dimension 1 lists rows by the number of nonzero indices, each group in
/// decreasing lexicographic order; higher dimensions are in increasing
/// lexicographic order.
pub fn cocycle_tables() -> Vec<Table> {
    let c3 = circle_power(3, 3);
    (1..=3)
        .map(|n| {
            let p = n + 1;
            let mut cells: Vec<[usize; 3]> = c3
                .simplicial
                .nondegenerate_cells(n)
                .into_iter()
                .map(|x| [x / (p * p), (x / p) % p, x % p])
                .collect();
            if n == 1 {
                cells.sort_by(|x, y| {
                    let nz = |c: &[usize; 3]| c.iter().filter(|&&v| v != 0).count();
                    nz(x).cmp(&nz(y)).then(y.cmp(x))
                });
            } else {
                cells.sort();
            }
            Table {
                dimension: n,
                rows: cells.into_iter().map(|a| row(n, a)).collect(),
            }
        })
        .collect()
}

pub fn render_text(tables: &[Table]) -> String {
    let mut out = String::new();
    for t in tables {
        out.push_str(&format!("dimension {}\n", t.dimension));
        for r in &t.rows {
            out.push_str(&format!(
                "({}, {}, {}) -> {} | ({}, {}) -> {}\n",
                r.a[0], r.a[1], r.a[2], r.omega, r.b[0], r.b[1], r.rho
            ));
        }
    }
    out
}
