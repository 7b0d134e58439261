use itertools::Itertools;
use num_rational::BigRational;
use serde_json::{json, Value};

use super::algebra::{cartan, raising, AlgebraElement};
use super::phi::phi;
use super::poly::{Generator, SuperPolynomial};
use crate::context::Context;
use crate::error::{Error, Result};
use crate::partitions::{GeneralizedPartition, Partition};
use crate::weights::lambda_of;

fn out_of_range(what: String) -> Error {
    Error::IndexOutOfRange(what)
}

/// Sign of a permutation given as a list of images.
fn perm_sign(perm: &[usize]) -> i64 {
    let mut inv = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `Σ_σ (−1)^{l(σ)} a_1^{σ(1)} ⋯ a_r^{σ(r)}`, the product taken in row order.
/// Valid for Grassmann entries.
pub fn signed_determinant(ctx: &Context, r: usize, entry: impl Fn(usize, usize) -> Generator) -> SuperPolynomial {
    let mut out = SuperPolynomial::zero(ctx);
    for perm in (1..=r).permutations(r) {
        let word: Vec<Generator> = (1..=r).map(|row| entry(row, perm[row - 1])).collect();
        let term = SuperPolynomial::word(ctx, &word).expect("entries are in range");
        out = out.add(&term.scale(&BigRational::from_integer(perm_sign(&perm).into())));
    }
    out
}

/// `Δ_r = det(x^i_j)_{1 ≤ i, j ≤ r}`, for `1 ≤ r ≤ min(d, m)`.
pub fn delta(r: usize, ctx: &Context) -> Result<SuperPolynomial> {
    if r == 0 || r > ctx.d.min(ctx.m) {
        return Err(out_of_range(format!("Δ_{r} needs 1 ≤ r ≤ min(d, m) in {ctx}")));
    }
    Ok(signed_determinant(ctx, r, |i, j| Generator::X { l: i, i: j }))
}

/// `Δ_{k,r}`: rows `x_1, …, x_m` then `r − m` copies of `η_k`, columns
/// indexed by the superscript. Needs `m < r ≤ d`, `1 ≤ k ≤ n`.
pub fn delta_kr(k: usize, r: usize, ctx: &Context) -> Result<SuperPolynomial> {
    if r <= ctx.m || r > ctx.d || k == 0 || k > ctx.n {
        return Err(out_of_range(format!(
            "Δ_{{{k},{r}}} needs m < r ≤ d and 1 ≤ k ≤ n in {ctx}"
        )));
    }
    let m = ctx.m;
    Ok(signed_determinant(ctx, r, |row, col| {
        if row <= m {
            Generator::X { l: col, i: row }
        } else {
            Generator::Eta { l: col, j: k }
        }
    }))
}

/// `Δ*_r = det(y^{d−i+1}_{p−j+1})_{1 ≤ i, j ≤ r}`, for `1 ≤ r ≤ min(d, p)`.
pub fn delta_star(r: usize, ctx: &Context) -> Result<SuperPolynomial> {
    if r == 0 || r > ctx.d.min(ctx.p) {
        return Err(out_of_range(format!("Δ*_{r} needs 1 ≤ r ≤ min(d, p) in {ctx}")));
    }
    let (d, p) = (ctx.d, ctx.p);
    Ok(signed_determinant(ctx, r, |i, j| Generator::Y {
        l: d - i + 1,
        r: p - j + 1,
    }))
}

/// `Δ*_{k,r} = ζ^d_k ζ^{d−1}_k ⋯ ζ^{d−r+1}_k`, for `1 ≤ r ≤ d`, `1 ≤ k ≤ q`.
pub fn delta_star_kr(k: usize, r: usize, ctx: &Context) -> Result<SuperPolynomial> {
    if r == 0 || r > ctx.d || k == 0 || k > ctx.q {
        return Err(out_of_range(format!(
            "Δ*_{{{k},{r}}} needs 1 ≤ r ≤ d and 1 ≤ k ≤ q in {ctx}"
        )));
    }
    let word: Vec<Generator> = (0..r).map(|t| Generator::Zeta { l: ctx.d - t, s: k }).collect();
    SuperPolynomial::word(ctx, &word)
}

/// `Δ_λ` for a partition with `λ_{m+1} ≤ n` and at most `d` parts.
pub fn delta_lambda(lambda: &Partition, ctx: &Context) -> Result<SuperPolynomial> {
    let m = ctx.m;
    if lambda.depth() > ctx.d {
        return Err(Error::LengthMismatch {
            expected: ctx.d,
            found: lambda.depth(),
        });
    }
    let hook = lambda.part(m + 1).unwrap_or(0);
    if hook > ctx.n as i64 {
        return Err(Error::HookViolation {
            lambda: lambda.parts().to_vec(),
            index: m + 1,
            bound: ctx.n,
        });
    }
    let cols = lambda.first() as usize;
    let mut out = SuperPolynomial::one(ctx);
    let split = if lambda.conjugate_part(1) as usize <= m {
        0
    } else {
        hook as usize
    };
    for k in 1..=split {
        out = out.mul(&delta_kr(k, lambda.conjugate_part(k) as usize, ctx)?);
    }
    for j in split + 1..=cols {
        out = out.mul(&delta(lambda.conjugate_part(j) as usize, ctx)?);
    }
    Ok(out)
}

/// `Δ*_λ` for a non-positive `λ` of length `d` with `λ_{d−p} ≥ −q`.
pub fn delta_star_lambda(lambda: &GeneralizedPartition, ctx: &Context) -> Result<SuperPolynomial> {
    if lambda.len() != ctx.d {
        return Err(Error::LengthMismatch {
            expected: ctx.d,
            found: lambda.len(),
        });
    }
    if !lambda.is_non_positive() {
        return Err(Error::Inadmissible(lambda.parts().to_vec(), "Δ*_λ needs λ ≤ 0".into()));
    }
    if let Some(why) = lambda.admissibility_violation(usize::MAX, 0, ctx.p, ctx.q) {
        return Err(Error::Inadmissible(lambda.parts().to_vec(), why));
    }
    let mu = lambda.star().to_partition()?;
    let q = ctx.q;
    let mu1 = mu.first() as usize;
    let mut out = SuperPolynomial::one(ctx);
    for k in 1..=mu1.min(q) {
        out = out.mul(&delta_star_kr(q + 1 - k, mu.conjugate_part(k) as usize, ctx)?);
    }
    for l in q + 1..=mu1 {
        out = out.mul(&delta_star(mu.conjugate_part(l) as usize, ctx)?);
    }
    Ok(out)
}

/// `□_λ = Δ*_{λ⁻} Δ_{λ⁺}` for an admissible `λ` of length `d`.
pub fn box_lambda(lambda: &GeneralizedPartition, ctx: &Context) -> Result<SuperPolynomial> {
    if lambda.len() != ctx.d {
        return Err(Error::LengthMismatch {
            expected: ctx.d,
            found: lambda.len(),
        });
    }
    if let Some(why) = lambda.admissibility_violation(ctx.m, ctx.n, ctx.p, ctx.q) {
        return Err(Error::Inadmissible(lambda.parts().to_vec(), why));
    }
    let (plus, minus) = lambda.split_plus_minus();
    Ok(delta_star_lambda(&minus, ctx)?.mul(&delta_lambda(&plus, ctx)?))
}

/// The eigenvalue of `Φ(h)` on `v`, or `None` if `v` is zero or not an
/// eigenvector.
pub fn eigenvalue(h: &AlgebraElement, v: &SuperPolynomial, ctx: &Context) -> Result<Option<BigRational>> {
    Ok(v.ratio_to(&phi(h, ctx)?.apply(v)))
}

/// `(gl_d weight, gl(m+p|n+q) weight)` of a joint weight vector.
pub fn joint_weight(v: &SuperPolynomial, ctx: &Context) -> Result<Option<(Vec<i64>, Vec<i64>)>> {
    let mut gl = Vec::new();
    let mut sup = Vec::new();
    for h in cartan(ctx) {
        let Some(c) = eigenvalue(&h, v, ctx)? else {
            return Ok(None);
        };
        if !c.is_integer() {
            return Ok(None);
        }
        let c = i64::try_from(c.to_integer()).expect("small eigenvalue");
        match h {
            AlgebraElement::Gl { .. } => gl.push(c),
            AlgebraElement::Super { .. } => sup.push(c),
        }
    }
    Ok(Some((gl, sup)))
}

/// Whether every raising operator of `b_d × B` kills `v`.
pub fn annihilated_by_raising(v: &SuperPolynomial, ctx: &Context) -> Result<bool> {
    for x in raising(ctx) {
        if !phi(&x, ctx)?.apply(v).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Highest-weight certification of `□_λ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub lambda: GeneralizedPartition,
    pub nonzero: bool,
    pub annihilated_by_all_raising: bool,
    pub gl_d_weight: Option<Vec<i64>>,
    pub super_weight: Option<Vec<i64>>,
    pub expected_super_weight: Vec<i64>,
    pub matches_lambda: bool,
}

impl Certificate {
    pub fn passed(&self) -> bool {
        self.nonzero && self.annihilated_by_all_raising && self.matches_lambda
    }

    pub fn to_json(&self) -> Value {
        json!({
            "lambda": self.lambda.parts(),
            "nonzero": self.nonzero,
            "annihilated_by_all_raising": self.annihilated_by_all_raising,
            "gl_d_weight": self.gl_d_weight,
            "super_weight": self.super_weight,
            "expected_super_weight": self.expected_super_weight,
            "matches_Lambda": self.matches_lambda,
        })
    }
}

/// Builds `□_λ` and checks it is a non-zero joint highest-weight vector of
/// weight `(λ, Λ(λ))`.
pub fn certify(lambda: &GeneralizedPartition, ctx: &Context) -> Result<Certificate> {
    let expected = lambda_of(lambda, ctx)?;
    let v = box_lambda(lambda, ctx)?;
    let nonzero = !v.is_zero();
    let annihilated = nonzero && annihilated_by_raising(&v, ctx)?;
    let weights = if nonzero { joint_weight(&v, ctx)? } else { None };
    let (gl, sup) = match weights {
        Some((g, s)) => (Some(g), Some(s)),
        None => (None, None),
    };
    let matches = gl.as_deref() == Some(lambda.parts()) && sup.as_deref() == Some(expected.coords());
    Ok(Certificate {
        lambda: lambda.clone(),
        nonzero,
        annihilated_by_all_raising: annihilated,
        gl_d_weight: gl,
        super_weight: sup,
        expected_super_weight: expected.coords().to_vec(),
        matches_lambda: matches,
    })
}

/// `Δ*_{1,r} · Σ_l ζ^l_1 ∂/∂y^l_p (Δ*_s)`, which vanishes for `r ≥ s`.
pub fn ladder_identity(r: usize, s: usize, ctx: &Context) -> Result<SuperPolynomial> {
    let ds = delta_star(s, ctx)?;
    let mut inner = SuperPolynomial::zero(ctx);
    for l in 1..=ctx.d {
        let t = ds
            .derive(Generator::Y { l, r: ctx.p })
            .mul_generator(Generator::Zeta { l, s: 1 });
        inner = inner.add(&t);
    }
    Ok(delta_star_kr(1, r, ctx)?.mul(&inner))
}
