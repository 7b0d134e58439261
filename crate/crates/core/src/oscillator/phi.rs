use super::algebra::AlgebraElement;
use super::operator::{Factor, SuperOperator};
use super::poly::Generator;
use crate::context::Context;
use crate::error::Result;

use Factor::{Der, Mul};

/// One of the four generator families, by `gl(m+p|n+q)` index block.
#[derive(Debug, Clone, Copy)]
enum Block {
    Y(usize),
    Zeta(usize),
    X(usize),
    Eta(usize),
}

fn block(ctx: &Context, a: usize) -> Block {
    let (p, q, m) = (ctx.p, ctx.q, ctx.m);
    if a <= p {
        Block::Y(a)
    } else if a <= p + q {
        Block::Zeta(a - p)
    } else if a <= p + q + m {
        Block::X(a - p - q)
    } else {
        Block::Eta(a - p - q - m)
    }
}

fn gen(b: Block, l: usize) -> Generator {
    match b {
        Block::Y(r) => Generator::Y { l, r },
        Block::Zeta(s) => Generator::Zeta { l, s },
        Block::X(i) => Generator::X { l, i },
        Block::Eta(j) => Generator::Eta { l, j },
    }
}

fn sum_over_l(ctx: &Context, coef: i64, word: impl Fn(usize) -> Vec<Factor>) -> SuperOperator {
    let mut out = SuperOperator::zero();
    for l in 1..=ctx.d {
        out = out.add(&SuperOperator::term(coef, word(l)));
    }
    out
}

/// The differential operator `Φ(X)` realizing a basis element of
/// `gl_d × gl(m+p|n+q)` on `ℂ[x, y, η, ζ]`.
pub fn phi(x: &AlgebraElement, ctx: &Context) -> Result<SuperOperator> {
    x.check(ctx)?;
    Ok(match *x {
        AlgebraElement::Gl { i, j } => {
            let mut out = SuperOperator::zero();
            for k in 1..=ctx.m {
                out = out.add(&SuperOperator::term(
                    1,
                    vec![Mul(Generator::X { l: i, i: k }), Der(Generator::X { l: j, i: k })],
                ));
            }
            for k in 1..=ctx.n {
                out = out.add(&SuperOperator::term(
                    1,
                    vec![Mul(Generator::Eta { l: i, j: k }), Der(Generator::Eta { l: j, j: k })],
                ));
            }
            for k in 1..=ctx.p {
                out = out.add(&SuperOperator::term(
                    -1,
                    vec![Mul(Generator::Y { l: j, r: k }), Der(Generator::Y { l: i, r: k })],
                ));
            }
            for k in 1..=ctx.q {
                out = out.add(&SuperOperator::term(
                    -1,
                    vec![Mul(Generator::Zeta { l: j, s: k }), Der(Generator::Zeta { l: i, s: k })],
                ));
            }
            out
        }
        AlgebraElement::Super { a, b } => {
            let (ba, bb) = (block(ctx, a), block(ctx, b));
            match (ba, bb) {
                // gl_{p|q}: annihilator of the row index, creator of the column
                (Block::Y(_) | Block::Zeta(_), Block::Y(_) | Block::Zeta(_)) => {
                    let coef = match (ba, bb) {
                        (Block::Y(_), Block::Y(_)) | (Block::Zeta(_), Block::Y(_)) => -1,
                        _ => 1,
                    };
                    sum_over_l(ctx, coef, |l| vec![Der(gen(ba, l)), Mul(gen(bb, l))])
                }
                // gl_{m|n}
                (Block::X(_) | Block::Eta(_), Block::X(_) | Block::Eta(_)) => {
                    sum_over_l(ctx, 1, |l| vec![Mul(gen(ba, l)), Der(gen(bb, l))])
                }
                // double annihilation
                (Block::Y(_) | Block::Zeta(_), _) => sum_over_l(ctx, 1, |l| vec![Der(gen(ba, l)), Der(gen(bb, l))]),
                // double creation
                (_, Block::Y(_) | Block::Zeta(_)) => {
                    let coef = if matches!(bb, Block::Y(_)) { -1 } else { 1 };
                    sum_over_l(ctx, coef, |l| vec![Mul(gen(ba, l)), Mul(gen(bb, l))])
                }
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oscillator::algebra::{basis, bracket, sigma};
    use crate::oscillator::kernel::monomials_up_to;
    use crate::oscillator::poly::{hermitian_form, SuperPolynomial};
    use num_rational::BigRational;

    fn combo(terms: &[(i64, AlgebraElement)], ctx: &Context, v: &SuperPolynomial) -> SuperPolynomial {
        let mut out = SuperPolynomial::zero(ctx);
        for (c, e) in terms {
            let w = phi(e, ctx).unwrap().apply(v);
            out = out.add(&w.scale(&BigRational::from_integer((*c).into())));
        }
        out
    }

    #[test]
    fn euler_operator() {
        let ctx = Context::new(1, 0, 0, 0, 1);
        let x = SuperPolynomial::generator(&ctx, Generator::X { l: 1, i: 1 }).unwrap();
        let op = phi(&AlgebraElement::Gl { i: 1, j: 1 }, &ctx).unwrap();
        assert_eq!(op.apply(&x), x);
    }

    #[test]
    fn creation_sign() {
        let ctx = Context::new(1, 0, 1, 0, 1);
        let op = phi(&AlgebraElement::Super { a: 2, b: 1 }, &ctx).unwrap();
        let got = op.apply(&SuperPolynomial::one(&ctx));
        let want = SuperPolynomial::word(&ctx, &[Generator::X { l: 1, i: 1 }, Generator::Y { l: 1, r: 1 }])
            .unwrap()
            .scale(&BigRational::from_integer((-1).into()));
        assert_eq!(got, want);
    }

    #[test]
    fn twist_on_vacuum() {
        let ctx = Context::new(1, 1, 2, 1, 3);
        let one = SuperPolynomial::one(&ctx);
        for a in 1..=ctx.super_rank() {
            let got = phi(&AlgebraElement::Super { a, b: a }, &ctx).unwrap().apply(&one);
            let want = if a <= 2 {
                -3
            } else if a == 3 {
                3
            } else {
                0
            };
            assert_eq!(got, one.scale(&BigRational::from_integer(want.into())), "a={a}");
        }
    }

    #[test]
    fn rejects_bad_indices() {
        let ctx = Context::new(1, 1, 1, 1, 2);
        assert!(phi(&AlgebraElement::Super { a: 5, b: 1 }, &ctx).is_err());
        assert!(phi(&AlgebraElement::Gl { i: 0, j: 1 }, &ctx).is_err());
    }

    #[test]
    fn representation_property() {
        let ctx = Context::new(1, 1, 1, 1, 2);
        let elems = basis(&ctx);
        let ops: Vec<_> = elems.iter().map(|e| phi(e, &ctx).unwrap()).collect();
        let vs: Vec<SuperPolynomial> = monomials_up_to(&ctx, 2)
            .into_iter()
            .map(|m| SuperPolynomial::from_monomial(&ctx, m, BigRational::from_integer(1.into())))
            .collect();
        for (i, x) in elems.iter().enumerate() {
            for (j, y) in elems.iter().enumerate() {
                let br = bracket(x, y, &ctx);
                for v in &vs {
                    let lhs = SuperOperator::bracket_on(&ops[i], &ops[j], v);
                    assert_eq!(lhs, combo(&br, &ctx, v), "[{x}, {y}] on {v}");
                }
            }
        }
    }

    #[test]
    fn contravariance() {
        let ctx = Context::new(1, 1, 1, 1, 1);
        let vs: Vec<SuperPolynomial> = monomials_up_to(&ctx, 3)
            .into_iter()
            .map(|m| SuperPolynomial::from_monomial(&ctx, m, BigRational::from_integer(1.into())))
            .collect();
        for x in basis(&ctx) {
            let (s, y) = sigma(&x, &ctx);
            let px = phi(&x, &ctx).unwrap();
            let py = phi(&y, &ctx).unwrap().scale(&BigRational::from_integer(s.into()));
            for v in &vs {
                let pv = px.apply(v);
                for w in &vs {
                    assert_eq!(
                        hermitian_form(&pv, w),
                        hermitian_form(v, &py.apply(w)),
                        "{x}: v={v} w={w}"
                    );
                }
            }
        }
    }
}
