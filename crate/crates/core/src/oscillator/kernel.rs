use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use super::algebra::raising;
use super::phi::phi;
use super::poly::{boson_count, fermion_count, generators, slot, Generator, Monomial, Slot, SuperPolynomial};
use crate::context::Context;
use crate::error::Result;

/// All monomials of total degree `degree`, in monomial order.
pub fn monomials_of_degree(ctx: &Context, degree: u32) -> Vec<Monomial> {
    let nb = boson_count(ctx);
    let nf = fermion_count(ctx);
    assert!(nf <= 64, "at most 64 fermionic generators supported");
    let mut out = Vec::new();
    let mut bos = vec![0u16; nb];
    fn compositions(rest: u32, i: usize, bos: &mut Vec<u16>, fer: u64, out: &mut Vec<Monomial>) {
        if i + 1 >= bos.len() {
            if bos.is_empty() {
                if rest == 0 {
                    out.push(Monomial { bos: Vec::new(), fer });
                }
                return;
            }
            bos[i] = rest as u16;
            out.push(Monomial { bos: bos.clone(), fer });
            bos[i] = 0;
            return;
        }
        for e in 0..=rest {
            bos[i] = e as u16;
            compositions(rest - e, i + 1, bos, fer, out);
        }
        bos[i] = 0;
    }
    let limit: u64 = if nf == 64 { u64::MAX } else { (1u64 << nf) - 1 };
    let mut fer: u64 = 0;
    loop {
        let k = fer.count_ones();
        if k <= degree {
            compositions(degree - k, 0, &mut bos, fer, &mut out);
        }
        if fer == limit {
            break;
        }
        fer += 1;
    }
    out.sort();
    out
}

/// All monomials of degree at most `degree`.
pub fn monomials_up_to(ctx: &Context, degree: u32) -> Vec<Monomial> {
    (0..=degree).flat_map(|k| monomials_of_degree(ctx, k)).collect()
}

/// Joint `(gl_d, gl(m+p|n+q))` weight of a monomial, read off its
/// exponents.
pub fn monomial_weight(ctx: &Context, m: &Monomial) -> (Vec<i64>, Vec<i64>) {
    let d = ctx.d as i64;
    let mut gl = vec![0i64; ctx.d];
    let mut sup: Vec<i64> = std::iter::repeat_n(-d, ctx.p)
        .chain(std::iter::repeat_n(d, ctx.q))
        .chain(std::iter::repeat_n(0, ctx.m + ctx.n))
        .collect();
    for g in generators(ctx) {
        let e = match slot(ctx, g) {
            Slot::Boson(b) => i64::from(m.bos[b]),
            Slot::Fermion(f) => (m.fer >> f & 1) as i64,
        };
        if e == 0 {
            continue;
        }
        let (p, q, mm) = (ctx.p, ctx.q, ctx.m);
        match g {
            Generator::X { l, i } => {
                gl[l - 1] += e;
                sup[p + q + i - 1] += e;
            }
            Generator::Eta { l, j } => {
                gl[l - 1] += e;
                sup[p + q + mm + j - 1] += e;
            }
            Generator::Y { l, r } => {
                gl[l - 1] -= e;
                sup[r - 1] -= e;
            }
            Generator::Zeta { l, s } => {
                gl[l - 1] -= e;
                sup[p + s - 1] -= e;
            }
        }
    }
    (gl, sup)
}

/// A basis of the integer nullspace of `rows` (each of length `cols`),
/// by fraction-free elimination. Every basis vector is primitive with a
/// positive last non-zero entry.
pub fn nullspace(rows: Vec<Vec<BigInt>>, cols: usize) -> Vec<Vec<BigInt>> {
    let mut a: Vec<Vec<BigInt>> = rows.into_iter().filter(|r| r.iter().any(|x| !x.is_zero())).collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, pr);
        let piv_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            let p = &piv_row[c];
            for k in 0..cols {
                row[k] = &row[k] * p - &f * &piv_row[k];
            }
            normalize(row);
        }
        normalize(&mut a[r]);
        pivots.push((r, c));
        r += 1;
        if r == a.len() {
            break;
        }
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut out = Vec::new();
    for f in (0..cols).filter(|c| !pivot_cols.contains(c)) {
        let l = pivots
            .iter()
            .filter(|&&(row, _)| !a[row][f].is_zero())
            .fold(BigInt::one(), |acc, &(row, c)| acc.lcm(&a[row][c]));
        let mut v = vec![BigInt::zero(); cols];
        v[f] = l.clone();
        for &(row, c) in &pivots {
            if !a[row][f].is_zero() {
                v[c] = -(&a[row][f] * &l) / &a[row][c];
            }
        }
        normalize(&mut v);
        if v.iter().rev().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
            v.iter_mut().for_each(|x| *x = -&*x);
        }
        out.push(v);
    }
    out
}

fn normalize(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        row.iter_mut().for_each(|x| *x = &*x / &g);
    }
}

/// A kernel basis vector with its joint weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelVector {
    pub gl_d_weight: Vec<i64>,
    pub super_weight: Vec<i64>,
    pub vector: SuperPolynomial,
}

/// Joint highest-weight vectors of `b_d × B` among polynomials of the given
/// total degree, one weight space at a time.
pub fn joint_hwv_kernel_by_weight(ctx: &Context, degree: u32) -> Result<Vec<KernelVector>> {
    let ops = raising(ctx).iter().map(|x| phi(x, ctx)).collect::<Result<Vec<_>>>()?;
    let mut groups: BTreeMap<(Vec<i64>, Vec<i64>), Vec<Monomial>> = BTreeMap::new();
    for m in monomials_of_degree(ctx, degree) {
        groups.entry(monomial_weight(ctx, &m)).or_default().push(m);
    }
    let groups: Vec<_> = groups.into_iter().collect();
    let per_group: Vec<Vec<KernelVector>> = groups
        .into_par_iter()
        .map(|((gl, sup), monos)| {
            let mut row_index: BTreeMap<(usize, Monomial), usize> = BTreeMap::new();
            let mut rows: Vec<Vec<BigInt>> = Vec::new();
            for (col, m) in monos.iter().enumerate() {
                let v = SuperPolynomial::from_monomial(ctx, m.clone(), BigRational::one());
                for (k, op) in ops.iter().enumerate() {
                    for (target, c) in op.apply(&v).terms() {
                        let idx = *row_index.entry((k, target.clone())).or_insert_with(|| {
                            rows.push(vec![BigInt::zero(); monos.len()]);
                            rows.len() - 1
                        });
                        rows[idx][col] += c.to_integer();
                    }
                }
            }
            nullspace(rows, monos.len())
                .into_iter()
                .map(|coeffs| {
                    let mut p = SuperPolynomial::zero(ctx);
                    for (m, c) in monos.iter().zip(coeffs) {
                        p.add_term(m.clone(), BigRational::from_integer(c));
                    }
                    KernelVector {
                        gl_d_weight: gl.clone(),
                        super_weight: sup.clone(),
                        vector: p,
                    }
                })
                .collect()
        })
        .collect();
    Ok(per_group.into_iter().flatten().collect())
}

/// A basis of the joint kernel of all raising operators on the degree
/// component, each a joint weight vector.
pub fn joint_hwv_kernel(ctx: &Context, degree: u32) -> Result<Vec<SuperPolynomial>> {
    Ok(joint_hwv_kernel_by_weight(ctx, degree)?
        .into_iter()
        .map(|k| k.vector)
        .collect())
}
