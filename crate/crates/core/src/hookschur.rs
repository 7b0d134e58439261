//! Hook Schur functions `HS_λ(x; y)` in `m` even and `n` odd variables.
//!
//! [`hook_schur_skew`] is the production definition, built from ordinary and
//! skew Schur polynomials. [`hook_schur_tableau`] enumerates
//! `(m|n)`-semistandard tableaux directly and shares no code with it.

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::partitions::{Partition, SkewShape};
use crate::series::{GradedSeries, VariableSet};
use crate::symfunc::{schur, skew_schur};

/// Whether `HS_λ` in `(m|n)` variables is non-zero: `λ_{m+1} ≤ n`.
pub fn hook_condition(lambda: &Partition, m: usize, n: usize) -> bool {
    lambda.part(m + 1).unwrap_or(0) <= n as i64
}

/// `HS_λ(x; y) = Σ_{μ ⊆ λ} s_μ(x) s_{λ'/μ'}(y)` over the layout `[x, y]`.
pub fn hook_schur_skew(lambda: &Partition, x: &VariableSet, y: &VariableSet) -> GradedSeries {
    let layout = vec![x.clone(), y.clone()];
    let mut out = GradedSeries::zero(layout.clone(), None);
    if !hook_condition(lambda, x.count, y.count) {
        return out;
    }
    let lambda = lambda.trim();
    let lt = lambda.transpose();
    for mu in lambda.subpartitions() {
        if mu.depth() > x.count {
            continue;
        }
        let mt = mu.trim().transpose();
        let shape = SkewShape::new(lt.clone(), mt).expect("μ ⊆ λ implies μ' ⊆ λ'");
        if shape.size() > 0 && y.count == 0 {
            continue;
        }
        let sx = schur(&mu, x).embed(&layout).expect("x in layout");
        let sy = skew_schur(&shape, y).embed(&layout).expect("y in layout");
        out = &out + &(&sx * &sy);
    }
    out
}

/// `HS_λ(x; y)` as a sum over `(m|n)`-semistandard tableaux of shape `λ`.
///
/// Letters `1..=m` are `x`'s, `m+1..=m+n` are `y`'s. Entries weakly increase
/// along rows and columns, `x`-letters strictly down columns and `y`-letters
/// strictly along rows.
pub fn hook_schur_tableau(lambda: &Partition, x: &VariableSet, y: &VariableSet) -> GradedSeries {
    let (m, n) = (x.count, y.count);
    let rows: Vec<usize> = lambda.parts().iter().map(|&p| p as usize).collect();
    let mut grid: Vec<Vec<usize>> = rows.iter().map(|&r| vec![0; r]).collect();
    let mut content = vec![0i32; m + n];
    let mut out = Vec::new();

    #[allow(clippy::too_many_arguments)]
    fn go(
        rows: &[usize],
        r: usize,
        c: usize,
        m: usize,
        n: usize,
        grid: &mut Vec<Vec<usize>>,
        content: &mut Vec<i32>,
        out: &mut Vec<Vec<i32>>,
    ) {
        if r == rows.len() {
            out.push(content.clone());
            return;
        }
        if c == rows[r] {
            go(rows, r + 1, 0, m, n, grid, content, out);
            return;
        }
        let left = if c > 0 { Some(grid[r][c - 1]) } else { None };
        let above = if r > 0 { Some(grid[r - 1][c]) } else { None };
        for v in 1..=m + n {
            let is_x = v <= m;
            let ok_left = match left {
                None => true,
                Some(a) => {
                    if is_x {
                        a <= v
                    } else {
                        a < v
                    }
                }
            };
            let ok_above = match above {
                None => true,
                Some(a) => {
                    if is_x {
                        a < v
                    } else {
                        a <= v
                    }
                }
            };
            if ok_left && ok_above {
                grid[r][c] = v;
                content[v - 1] += 1;
                go(rows, r, c + 1, m, n, grid, content, out);
                content[v - 1] -= 1;
            }
        }
    }

    go(&rows, 0, 0, m, n, &mut grid, &mut content, &mut out);
    let sx = i32::from(x.exponent_sign);
    let sy = i32::from(y.exponent_sign);
    GradedSeries::from_terms(
        vec![x.clone(), y.clone()],
        out.into_iter().map(|c| {
            let e = c
                .iter()
                .enumerate()
                .map(|(i, &k)| if i < m { sx * k } else { sy * k })
                .collect();
            (e, BigInt::from(1))
        }),
        None,
    )
}

/// Layout `[x(m), eta(n), z(d)]` with only `z` graded.
pub fn cauchy_layout(m: usize, n: usize, d: usize) -> Vec<VariableSet> {
    vec![
        VariableSet::new("x", m).ungraded(),
        VariableSet::new("eta", n).ungraded(),
        VariableSet::new("z", d),
    ]
}

/// Layout `[y(p), zeta(q), z(d)]` of inverse variables with only `z` graded.
pub fn cauchy_dual_layout(p: usize, q: usize, d: usize) -> Vec<VariableSet> {
    vec![
        VariableSet::inverse("y", p).ungraded(),
        VariableSet::inverse("zeta", q).ungraded(),
        VariableSet::inverse("z", d),
    ]
}

fn unit(len: usize, i: usize, v: i32) -> Vec<i32> {
    let mut e = vec![0; len];
    e[i] = v;
    e
}

/// `Π_{i,k} (1 − a_i z_k)^{-1} · Π_{j,k} (1 + b_j z_k)` truncated at z-degree
/// `trunc`, where `a`, `b`, `z` are the three sets of `layout` and every
/// exponent carries the set's sign.
fn product_side(layout: Vec<VariableSet>, trunc: u32) -> GradedSeries {
    let (a, b, d) = (layout[0].count, layout[1].count, layout[2].count);
    let len = a + b + d;
    let sa = i32::from(layout[0].exponent_sign);
    let sb = i32::from(layout[1].exponent_sign);
    let sz = i32::from(layout[2].exponent_sign);
    let one = BigInt::from(1);
    let mut acc = GradedSeries::one(layout.clone(), Some(trunc));
    for k in 0..d {
        let zk = a + b + k;
        for i in 0..a {
            let geometric = GradedSeries::from_terms(
                layout.clone(),
                (0..=trunc as i32).map(|e| {
                    let mut v = unit(len, i, sa * e);
                    v[zk] = sz * e;
                    (v, one.clone())
                }),
                Some(trunc),
            );
            acc = &acc * &geometric;
        }
        for j in 0..b {
            let mut v = unit(len, a + j, sb);
            v[zk] = sz;
            let linear = GradedSeries::from_terms(
                layout.clone(),
                [(vec![0; len], one.clone()), (v, one.clone())],
                Some(trunc),
            );
            acc = &acc * &linear;
        }
    }
    acc
}

/// `Σ_λ HS_λ(a; b) s_λ(z)` over `|λ| ≤ trunc`, `ℓ(λ) ≤ d`, `λ_{m+1} ≤ n`.
fn sum_side(layout: Vec<VariableSet>, trunc: u32) -> GradedSeries {
    let (a, b, d) = (&layout[0], &layout[1], &layout[2]);
    let terms: Vec<GradedSeries> = Partition::all_up_to(i64::from(trunc), d.count)
        .into_par_iter()
        .filter(|lam| hook_condition(lam, a.count, b.count))
        .map(|lam| {
            let hs = hook_schur_skew(&lam, a, b).embed(&layout).expect("layout");
            let s = schur(&lam, d).embed(&layout).expect("layout");
            (&hs * &s).truncate(trunc)
        })
        .collect();
    terms
        .iter()
        .fold(GradedSeries::zero(layout.clone(), Some(trunc)), |acc, t| &acc + t)
}

/// `Π_{i,k}(1 − x_i z_k)^{-1} Π_{j,k}(1 + η_j z_k)` to z-degree `trunc`.
pub fn cauchy_lhs(m: usize, n: usize, d: usize, trunc: u32) -> GradedSeries {
    product_side(cauchy_layout(m, n, d), trunc)
}

/// `Σ_λ HS_λ(x; η) s_λ(z)` to z-degree `trunc`.
pub fn cauchy_rhs(m: usize, n: usize, d: usize, trunc: u32) -> GradedSeries {
    sum_side(cauchy_layout(m, n, d), trunc)
}

/// `Π_{r,k}(1 − y_r^{-1} z_k^{-1})^{-1} Π_{s,k}(1 + ζ_s^{-1} z_k^{-1})`.
pub fn cauchy_dual_lhs(p: usize, q: usize, d: usize, trunc: u32) -> GradedSeries {
    product_side(cauchy_dual_layout(p, q, d), trunc)
}

/// `Σ_λ HS_λ(y^{-1}; ζ^{-1}) s_λ(z^{-1})`.
pub fn cauchy_dual_rhs(p: usize, q: usize, d: usize, trunc: u32) -> GradedSeries {
    sum_side(cauchy_dual_layout(p, q, d), trunc)
}
