//! Characters as truncated Laurent series in the formal exponentials
//! `ȳ, ζ̄, x̄, η̄`.
//!
//! The variable order `[y(p), zeta(q), x(m), eta(n)]` is the `ε̂`-basis
//! order, so the absolute exponent vector of a monomial is its weight. The
//! grading gives degree 1 to each of `x̄_i, η̄_j, ȳ_r^{-1}, ζ̄_s^{-1}`; the
//! twist prefactor `(ȳ_1⋯ȳ_p)^{-d}(ζ̄_1⋯ζ̄_q)^d` is kept outside it.

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::context::Context;
use crate::error::{Error, Result};
use crate::hookschur::{hook_condition, hook_schur_skew};
use crate::partitions::{GeneralizedPartition, Partition};
use crate::series::{GradedSeries, VariableSet};
use crate::symfunc::{lr_coefficient_generalized, schur_laurent};

/// A context together with the truncation degree of every series built in
/// it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CharacterContext {
    pub ctx: Context,
    pub trunc: u32,
}

impl CharacterContext {
    pub fn new(ctx: Context, trunc: u32) -> Result<Self> {
        if ctx.m + ctx.n == 0 && ctx.p + ctx.q == 0 {
            return Err(Error::InvalidContext("need m+n ≥ 1 or p+q ≥ 1".into()));
        }
        Ok(CharacterContext { ctx, trunc })
    }

    pub fn layout(&self) -> Vec<VariableSet> {
        character_layout(&self.ctx)
    }
}

fn y_set(p: usize) -> VariableSet {
    VariableSet::inverse("y", p)
}

fn zeta_set(q: usize) -> VariableSet {
    VariableSet::inverse("zeta", q)
}

fn x_set(m: usize) -> VariableSet {
    VariableSet::new("x", m)
}

fn eta_set(n: usize) -> VariableSet {
    VariableSet::new("eta", n)
}

/// `[y(p), zeta(q), x(m), eta(n)]`, all graded.
pub fn character_layout(ctx: &Context) -> Vec<VariableSet> {
    vec![y_set(ctx.p), zeta_set(ctx.q), x_set(ctx.m), eta_set(ctx.n)]
}

/// The character layout followed by an ungraded `z(d)`.
pub fn fock_layout(ctx: &Context) -> Vec<VariableSet> {
    let mut v = character_layout(ctx);
    v.push(VariableSet::new("z", ctx.d).ungraded());
    v
}

/// Exponent of `(ȳ_1⋯ȳ_p)^{-d}(ζ̄_1⋯ζ̄_q)^d`, padded with `extra` zeros.
fn twist(p: usize, q: usize, d: usize, extra: usize) -> Vec<i32> {
    let d = d as i32;
    std::iter::repeat_n(-d, p)
        .chain(std::iter::repeat_n(d, q))
        .chain(std::iter::repeat_n(0, extra))
        .collect()
}

/// `ch V^{λ̃}_{m|n} = HS_λ(x̄; η̄)` over `[x(m), eta(n)]`.
pub fn char_finite(lambda: &Partition, m: usize, n: usize) -> Result<GradedSeries> {
    if !hook_condition(lambda, m, n) {
        return Err(Error::HookViolation {
            lambda: lambda.parts().to_vec(),
            index: m + 1,
            bound: n,
        });
    }
    Ok(hook_schur_skew(lambda, &x_set(m), &eta_set(n)))
}

/// `(ȳ_1⋯ȳ_p)^{-d}(ζ̄_1⋯ζ̄_q)^d · HS_λ(ȳ^{-1}; ζ̄^{-1})` over `[y(p), zeta(q)]`.
pub fn char_finite_dual(lambda: &Partition, p: usize, q: usize, d: usize) -> Result<GradedSeries> {
    if !hook_condition(lambda, p, q) {
        return Err(Error::HookViolation {
            lambda: lambda.parts().to_vec(),
            index: p + 1,
            bound: q,
        });
    }
    Ok(hook_schur_skew(lambda, &y_set(p), &zeta_set(q)).with_offset(twist(p, q, d, 0)))
}

/// The `(μ, ν)` pairs of length `d` contributing to `ch W^{Λ(λ)}` below
/// degree `trunc`, with their coefficients `C^λ_{μ,ν*}`.
pub fn char_w_band(lambda: &GeneralizedPartition, ctx: &Context, trunc: u32) -> Vec<(Partition, Partition, BigInt)> {
    let d = ctx.d;
    let sum = lambda.sum();
    let n_max = i64::from(trunc);
    let mut out = Vec::new();
    // |μ| − |ν| = Σλ and |μ| + |ν| ≤ trunc
    for nu_size in 0..=n_max {
        let mu_size = sum + nu_size;
        if mu_size < 0 || mu_size + nu_size > n_max {
            continue;
        }
        for mu in Partition::all_of_size(mu_size, d) {
            if !hook_condition(&mu, ctx.m, ctx.n) {
                continue;
            }
            for nu in Partition::all_of_size(nu_size, d) {
                if !hook_condition(&nu, ctx.p, ctx.q) {
                    continue;
                }
                let c = lr_coefficient_generalized(lambda, &mu.to_generalized(), &nu.to_generalized().star())
                    .expect("equal lengths");
                if !c.is_zero() {
                    out.push((mu.clone(), nu, BigInt::from(c.0)));
                }
            }
        }
    }
    out
}

/// `ch W^{Λ(λ)} = twist · Σ_{μ,ν} C^λ_{μ,ν*} HS_μ(x̄; η̄) HS_ν(ȳ^{-1}; ζ̄^{-1})`,
/// truncated at `cc.trunc`.
pub fn char_w(lambda: &GeneralizedPartition, cc: &CharacterContext) -> Result<GradedSeries> {
    let ctx = &cc.ctx;
    if lambda.len() != ctx.d {
        return Err(Error::LengthMismatch {
            expected: ctx.d,
            found: lambda.len(),
        });
    }
    if let Some(why) = lambda.admissibility_violation(ctx.m, ctx.n, ctx.p, ctx.q) {
        return Err(Error::Inadmissible(lambda.parts().to_vec(), why));
    }
    let layout = cc.layout();
    let band = char_w_band(lambda, ctx, cc.trunc);
    let terms: Vec<GradedSeries> = band
        .into_par_iter()
        .map(|(mu, nu, c)| {
            let a = hook_schur_skew(&mu, &x_set(ctx.m), &eta_set(ctx.n))
                .embed(&layout)
                .expect("layout");
            let b = hook_schur_skew(&nu, &y_set(ctx.p), &zeta_set(ctx.q))
                .embed(&layout)
                .expect("layout");
            (&a * &b).truncate(cc.trunc).scale(&c)
        })
        .collect();
    let sum = terms
        .iter()
        .fold(GradedSeries::zero(layout.clone(), Some(cc.trunc)), |acc, t| &acc + t);
    let offset = twist(ctx.p, ctx.q, ctx.d, ctx.m + ctx.n);
    Ok(sum.with_offset(offset))
}

/// Admissible `λ` of length `d` that can contribute to the Fock identity
/// below degree `trunc`.
fn fock_labels(ctx: &Context, trunc: u32) -> Vec<GeneralizedPartition> {
    GeneralizedPartition::all_with_abs_size(ctx.d, i64::from(trunc))
        .into_iter()
        .filter(|l| l.check_admissible(ctx.m, ctx.n, ctx.p, ctx.q))
        .collect()
}

/// `Σ_λ s_λ(z̄) · ch W^{Λ(λ)}` over the Fock layout.
pub fn fock_lhs(cc: &CharacterContext) -> Result<GradedSeries> {
    let ctx = &cc.ctx;
    let layout = fock_layout(ctx);
    let z = VariableSet::new("z", ctx.d).ungraded();
    let terms: Vec<Result<GradedSeries>> = fock_labels(ctx, cc.trunc)
        .into_par_iter()
        .map(|lam| {
            let s = schur_laurent(&lam, &z)?.embed(&layout)?;
            let w = char_w(&lam, cc)?.embed(&layout)?;
            s.try_mul(&w)
        })
        .collect();
    let mut acc = GradedSeries::zero(layout, Some(cc.trunc));
    for t in terms {
        acc = acc.try_add(&t?)?;
    }
    Ok(acc)
}

/// The character of the whole Fock space under `gl_d × gl(m+p|n+q)`:
/// `twist · Π(1 − x̄_i z̄_k)^{-1} Π(1 + η̄_j z̄_k) Π(1 − ȳ_r^{-1} z̄_k^{-1})^{-1} Π(1 + ζ̄_s^{-1} z̄_k^{-1})`.
pub fn fock_rhs(cc: &CharacterContext) -> Result<GradedSeries> {
    let Context { m, n, p, q, d } = cc.ctx;
    let layout = fock_layout(&cc.ctx);
    let len = p + q + m + n + d;
    let trunc = cc.trunc;
    let one = BigInt::from(1);
    let z0 = p + q + m + n;
    let mut acc = GradedSeries::one(layout.clone(), Some(trunc));
    let factor = |var: usize, k: usize, sign: i32, bosonic: bool| {
        let top = if bosonic { trunc as i32 } else { 1 };
        GradedSeries::from_terms(
            layout.clone(),
            (0..=top).map(|e| {
                let mut v = vec![0; len];
                v[var] = sign * e;
                v[z0 + k] = sign * e;
                (v, one.clone())
            }),
            Some(trunc),
        )
    };
    for k in 0..d {
        for r in 0..p {
            acc = &acc * &factor(r, k, -1, true);
        }
        for s in 0..q {
            acc = &acc * &factor(p + s, k, -1, false);
        }
        for i in 0..m {
            acc = &acc * &factor(p + q + i, k, 1, true);
        }
        for j in 0..n {
            acc = &acc * &factor(p + q + m + j, k, 1, false);
        }
    }
    Ok(acc.with_offset(twist(p, q, d, m + n + d)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::{borel_dominates, lambda_of};

    fn p(v: &[i64]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn g(v: &[i64]) -> GeneralizedPartition {
        GeneralizedPartition::new(v.to_vec()).unwrap()
    }

    fn abs_terms(s: &GradedSeries) -> Vec<(Vec<i32>, i64)> {
        s.absolute_terms()
            .map(|(e, c)| (e, i64::try_from(c).unwrap()))
            .collect()
    }

    #[test]
    fn finite_examples() {
        assert_eq!(
            abs_terms(&char_finite(&p(&[1]), 1, 1).unwrap()),
            vec![(vec![0, 1], 1), (vec![1, 0], 1)]
        );
        assert_eq!(
            abs_terms(&char_finite(&p(&[2]), 1, 1).unwrap()),
            vec![(vec![1, 1], 1), (vec![2, 0], 1)]
        );
        assert_eq!(
            abs_terms(&char_finite(&p(&[]), 2, 1).unwrap()),
            vec![(vec![0, 0, 0], 1)]
        );
        assert!(char_finite(&p(&[2, 2]), 1, 1).is_err());
    }

    #[test]
    fn finite_dual_examples() {
        assert_eq!(
            abs_terms(&char_finite_dual(&p(&[]), 1, 1, 2).unwrap()),
            vec![(vec![-2, 2], 1)]
        );
        // ȳ^{-1}ζ̄ (ȳ^{-1} + ζ̄^{-1})
        assert_eq!(
            abs_terms(&char_finite_dual(&p(&[1]), 1, 1, 1).unwrap()),
            vec![(vec![-2, 1], 1), (vec![-1, 0], 1)]
        );
        assert!(char_finite_dual(&p(&[1, 1]), 1, 0, 2).is_err());
    }

    #[test]
    fn trivial_label_starts_with_twist() {
        let cc = CharacterContext::new(Context::new(1, 1, 1, 1, 2), 0).unwrap();
        let w = char_w(&g(&[0, 0]), &cc).unwrap();
        assert_eq!(abs_terms(&w), vec![(vec![-2, 2, 0, 0], 1)]);
    }

    #[test]
    fn rejects_bad_labels() {
        let cc = CharacterContext::new(Context::new(1, 0, 1, 0, 2), 2).unwrap();
        assert!(matches!(char_w(&g(&[1, 1]), &cc), Err(Error::Inadmissible(..))));
        assert!(matches!(char_w(&g(&[1]), &cc), Err(Error::LengthMismatch { .. })));
        assert!(CharacterContext::new(Context::new(0, 0, 0, 0, 2), 2).is_err());
    }

    #[test]
    fn degenerates_to_finite_characters() {
        for m in 0..=2 {
            for n in 0..=2 {
                if m + n == 0 {
                    continue;
                }
                for d in 1..=3 {
                    let cc = CharacterContext::new(Context::new(m, n, 0, 0, d), 6).unwrap();
                    for lam in Partition::all_up_to(6, d) {
                        if !hook_condition(&lam, m, n) {
                            continue;
                        }
                        let w = char_w(&lam.to_generalized(), &cc).unwrap();
                        let f = char_finite(&lam, m, n)
                            .unwrap()
                            .embed(&cc.layout())
                            .unwrap()
                            .truncate(6);
                        assert_eq!(w, f, "λ={lam} m={m} n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn degenerates_to_dual_characters() {
        for p_ in 0..=2 {
            for q in 0..=2 {
                if p_ + q == 0 {
                    continue;
                }
                for d in 1..=3 {
                    let cc = CharacterContext::new(Context::new(0, 0, p_, q, d), 6).unwrap();
                    for mu in Partition::all_up_to(6, d) {
                        if !hook_condition(&mu, p_, q) {
                            continue;
                        }
                        let lam = mu.to_generalized().star();
                        let w = char_w(&lam, &cc).unwrap();
                        let f = char_finite_dual(&mu, p_, q, d)
                            .unwrap()
                            .embed(&cc.layout())
                            .unwrap()
                            .truncate(6);
                        assert_eq!(w.same_as(&f), Ok(true), "λ={lam} p={p_} q={q}");
                    }
                }
            }
        }
    }

    #[test]
    fn leading_term_is_lambda() {
        let ctx = Context::new(1, 1, 1, 1, 2);
        let cc = CharacterContext::new(ctx, 6).unwrap();
        for lam in fock_labels(&ctx, 4) {
            let top = lambda_of(&lam, &ctx).unwrap();
            let top: Vec<i64> = top.coords().to_vec();
            let w = char_w(&lam, &cc).unwrap();
            let mut found = false;
            for (e, c) in w.absolute_terms() {
                let e: Vec<i64> = e.iter().map(|&x| i64::from(x)).collect();
                if e == top {
                    assert_eq!(c, &BigInt::from(1));
                    found = true;
                }
                assert!(borel_dominates(&top, &e), "λ={lam}: {e:?} not below {top:?}");
            }
            assert!(found, "λ={lam}: Λ(λ) missing");
        }
    }

    #[test]
    fn fock_identity_small() {
        for ctx in [
            Context::new(1, 1, 1, 1, 1),
            Context::new(1, 0, 1, 0, 2),
            Context::new(0, 1, 0, 1, 2),
        ] {
            let cc = CharacterContext::new(ctx, 3).unwrap();
            let lhs = fock_lhs(&cc).unwrap();
            let rhs = fock_rhs(&cc).unwrap();
            assert_eq!(lhs.same_as(&rhs), Ok(true), "{ctx}: {:?}", lhs.first_difference(&rhs));
        }
    }
}
