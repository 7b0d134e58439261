use std::collections::BTreeMap;
use std::fmt;

use crate::context::Context;
use crate::error::{Error, Result};

/// A basis element of `gl_d × gl(m+p|n+q)`.
///
/// `Super { a, b }` is `E^a_b` with indices in `1..=p+q+m+n`, ordered as
/// the basis `v_A`: first `p` even, `q` odd, then `m` even, `n` odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraElement {
    /// `e_{ij}` in `gl_d`.
    Gl { i: usize, j: usize },
    /// `E^a_b` in `gl(m+p|n+q)`.
    Super { a: usize, b: usize },
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraElement::Gl { i, j } => write!(f, "e_{{{i},{j}}}"),
            AlgebraElement::Super { a, b } => write!(f, "E^{{{a}}}_{{{b}}}"),
        }
    }
}

/// `Z_2`-degree of the basis vector `v_A`.
pub fn index_parity(ctx: &Context, a: usize) -> u8 {
    let (p, q, m) = (ctx.p, ctx.q, ctx.m);
    if a <= p {
        0
    } else if a <= p + q {
        1
    } else if a <= p + q + m {
        0
    } else {
        1
    }
}

impl AlgebraElement {
    pub fn check(&self, ctx: &Context) -> Result<()> {
        let ok = match *self {
            AlgebraElement::Gl { i, j } => (1..=ctx.d).contains(&i) && (1..=ctx.d).contains(&j),
            AlgebraElement::Super { a, b } => {
                let r = ctx.super_rank();
                (1..=r).contains(&a) && (1..=r).contains(&b)
            }
        };
        if ok {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange(format!("{self} in {ctx}")))
        }
    }

    pub fn parity(&self, ctx: &Context) -> u8 {
        match *self {
            AlgebraElement::Gl { .. } => 0,
            AlgebraElement::Super { a, b } => (index_parity(ctx, a) + index_parity(ctx, b)) % 2,
        }
    }

    /// Whether the element lies in the Cartan subalgebra.
    pub fn is_diagonal(&self) -> bool {
        match *self {
            AlgebraElement::Gl { i, j } => i == j,
            AlgebraElement::Super { a, b } => a == b,
        }
    }

    /// `e_{ij}` with `i < j`, or `E^a_b` with `a < b`.
    pub fn is_raising(&self) -> bool {
        match *self {
            AlgebraElement::Gl { i, j } => i < j,
            AlgebraElement::Super { a, b } => a < b,
        }
    }
}

/// Every basis element of `gl_d × gl(m+p|n+q)`.
pub fn basis(ctx: &Context) -> Vec<AlgebraElement> {
    let mut out = Vec::new();
    for i in 1..=ctx.d {
        for j in 1..=ctx.d {
            out.push(AlgebraElement::Gl { i, j });
        }
    }
    let r = ctx.super_rank();
    for a in 1..=r {
        for b in 1..=r {
            out.push(AlgebraElement::Super { a, b });
        }
    }
    out
}

/// Raising operators of the Borel subalgebra `b_d × B`.
pub fn raising(ctx: &Context) -> Vec<AlgebraElement> {
    basis(ctx).into_iter().filter(AlgebraElement::is_raising).collect()
}

/// Cartan elements `e_{ii}` followed by `E^a_a`.
pub fn cartan(ctx: &Context) -> Vec<AlgebraElement> {
    basis(ctx).into_iter().filter(AlgebraElement::is_diagonal).collect()
}

/// The super bracket of two basis elements as an integer combination.
pub fn bracket(x: &AlgebraElement, y: &AlgebraElement, ctx: &Context) -> Vec<(i64, AlgebraElement)> {
    let mut acc: BTreeMap<AlgebraElement, i64> = BTreeMap::new();
    match (*x, *y) {
        (AlgebraElement::Gl { i, j }, AlgebraElement::Gl { i: k, j: l }) => {
            if j == k {
                *acc.entry(AlgebraElement::Gl { i, j: l }).or_default() += 1;
            }
            if l == i {
                *acc.entry(AlgebraElement::Gl { i: k, j }).or_default() -= 1;
            }
        }
        (AlgebraElement::Super { a, b }, AlgebraElement::Super { a: c, b: dd }) => {
            let sign = if x.parity(ctx) * y.parity(ctx) == 1 { -1 } else { 1 };
            if b == c {
                *acc.entry(AlgebraElement::Super { a, b: dd }).or_default() += 1;
            }
            if a == dd {
                *acc.entry(AlgebraElement::Super { a: c, b }).or_default() -= sign;
            }
        }
        _ => {}
    }
    acc.into_iter().filter(|&(_, c)| c != 0).map(|(e, c)| (c, e)).collect()
}

/// The anti-involution `σ`: returns `(sign, element)` with
/// `σ(X) = sign · element`.
pub fn sigma(x: &AlgebraElement, ctx: &Context) -> (i64, AlgebraElement) {
    match *x {
        AlgebraElement::Gl { i, j } => (1, AlgebraElement::Gl { i: j, j: i }),
        AlgebraElement::Super { a, b } => {
            let pq = ctx.p + ctx.q;
            let par = |k: usize| if index_parity(ctx, k) == 0 { 1 } else { -1 };
            let sign = match (a <= pq, b <= pq) {
                (true, true) => par(a) * par(b),
                (false, false) => 1,
                (true, false) => -par(a),
                (false, true) => -par(b),
            };
            (sign, AlgebraElement::Super { a: b, b: a })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_examples() {
        let ctx = Context::new(1, 1, 1, 1, 2);
        assert_eq!(
            sigma(&AlgebraElement::Gl { i: 1, j: 2 }, &ctx),
            (1, AlgebraElement::Gl { i: 2, j: 1 })
        );
        for x in basis(&ctx) {
            let (s1, y) = sigma(&x, &ctx);
            let (s2, z) = sigma(&y, &ctx);
            assert_eq!((s1 * s2, z), (1, x), "{x}");
        }
    }

    #[test]
    fn bracket_examples() {
        let ctx = Context::new(1, 1, 1, 1, 2);
        let e = |i, j| AlgebraElement::Gl { i, j };
        assert_eq!(bracket(&e(1, 2), &e(2, 1), &ctx), vec![(1, e(1, 1)), (-1, e(2, 2))]);
        let big = |a, b| AlgebraElement::Super { a, b };
        // two odd elements anticommute into a sum
        assert_eq!(
            bracket(&big(1, 2), &big(2, 1), &ctx),
            vec![(1, big(1, 1)), (1, big(2, 2))]
        );
        assert!(bracket(&e(1, 2), &big(1, 2), &ctx).is_empty());
    }

    #[test]
    fn parities() {
        let ctx = Context::new(2, 1, 1, 2, 1);
        let got: Vec<u8> = (1..=6).map(|a| index_parity(&ctx, a)).collect();
        assert_eq!(got, vec![0, 1, 1, 0, 0, 1]);
    }
}
