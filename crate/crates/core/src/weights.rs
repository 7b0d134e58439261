//! Highest weights: `λ̃` for `gl_{m|n}`, `λ̂` for `gl_{p|q}`, the twist by
//! `−d·1`, and the combined map `λ ↦ Λ(λ)` into the `ε̂`-basis of
//! `gl(m+p|n+q)`.
//!
//! In the `ε̂`-basis the `gl_{p|q}` coordinates come first, then the
//! `gl_{m|n}` ones. Positive roots are `ε̂_A − ε̂_B` for `A < B`.

use std::fmt;

use serde_json::{json, Value};

use crate::context::Context;
use crate::error::{Error, Result};
use crate::partitions::{angle, GeneralizedPartition, Partition};

/// Which Cartan subalgebra a weight lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    /// `gl_d` in the basis `ε̃_1, …, ε̃_d`.
    GlD { d: usize },
    /// `gl_{m|n}` in the basis `ε_1, …, ε_m, δ_1, …, δ_n`.
    GlMN { m: usize, n: usize },
    /// `gl_{p|q}`, first `p` even then `q` odd coordinates.
    GlPQ { p: usize, q: usize },
    /// `gl(m+p|n+q)` in the basis `ε̂_1, …, ε̂_{p+q+m+n}`.
    Super { m: usize, n: usize, p: usize, q: usize },
}

impl Basis {
    pub fn arity(&self) -> usize {
        match *self {
            Basis::GlD { d } => d,
            Basis::GlMN { m, n } => m + n,
            Basis::GlPQ { p, q } => p + q,
            Basis::Super { m, n, p, q } => m + n + p + q,
        }
    }

    fn tag(&self) -> &'static str {
        match self {
            Basis::GlD { .. } => "gl_d",
            Basis::GlMN { .. } => "gl_m|n",
            Basis::GlPQ { .. } => "gl_p|q",
            Basis::Super { .. } => "gl_m+p|n+q",
        }
    }

    fn dims(&self) -> Vec<usize> {
        match *self {
            Basis::GlD { d } => vec![d],
            Basis::GlMN { m, n } => vec![m, n],
            Basis::GlPQ { p, q } => vec![p, q],
            Basis::Super { m, n, p, q } => vec![m, n, p, q],
        }
    }
}

/// An integer weight with its basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weight {
    coords: Vec<i64>,
    basis: Basis,
}

impl Weight {
    pub fn new(coords: Vec<i64>, basis: Basis) -> Result<Self> {
        if coords.len() != basis.arity() {
            return Err(Error::LengthMismatch {
                expected: basis.arity(),
                found: coords.len(),
            });
        }
        Ok(Weight { coords, basis })
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn to_json(&self) -> Value {
        json!({
            "basis": self.basis.tag(),
            "dims": self.basis.dims(),
            "coords": self.coords,
        })
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let split = match self.basis {
            Basis::GlMN { m, .. } => Some(m),
            Basis::GlPQ { p, .. } => Some(p),
            Basis::Super { p, q, .. } => Some(p + q),
            Basis::GlD { .. } => None,
        };
        f.write_str("(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(if Some(i) == split { "; " } else { ", " })?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// `1 = (1^p, (−1)^q)`.
pub fn one_vector(p: usize, q: usize) -> Vec<i64> {
    std::iter::repeat_n(1, p).chain(std::iter::repeat_n(-1, q)).collect()
}

/// `λ̃ = (λ_1, …, λ_m; ⟨λ'_1 − m⟩, …, ⟨λ'_n − m⟩)`.
pub fn tilde_weight(lambda: &Partition, m: usize, n: usize) -> Result<Weight> {
    let next = lambda.part(m + 1).unwrap_or(0);
    if next > n as i64 {
        return Err(Error::HookViolation {
            lambda: lambda.parts().to_vec(),
            index: m + 1,
            bound: n,
        });
    }
    let mut coords: Vec<i64> = (1..=m).map(|i| lambda.part(i).unwrap_or(0)).collect();
    coords.extend((1..=n).map(|j| angle(lambda.conjugate_part(j) - m as i64)));
    Weight::new(coords, Basis::GlMN { m, n })
}

/// `λ̂ = −(⟨μ_p − q⟩, …, ⟨μ_1 − q⟩, μ'_q, …, μ'_1)` with `μ = λ*`, for a
/// non-positive `λ`. Parts `μ_i` with `i` past the length of `λ` are 0.
pub fn hat_weight(lambda: &GeneralizedPartition, p: usize, q: usize) -> Result<Weight> {
    if !lambda.is_non_positive() {
        return Err(Error::Inadmissible(
            lambda.parts().to_vec(),
            "λ̂ needs a non-positive generalized partition".into(),
        ));
    }
    if let Some(why) = lambda.admissibility_violation(usize::MAX, 0, p, q) {
        return Err(Error::Inadmissible(lambda.parts().to_vec(), why));
    }
    let mu = lambda.star().to_partition()?;
    let mut coords: Vec<i64> = (1..=p)
        .rev()
        .map(|i| -angle(mu.part(i).unwrap_or(0) - q as i64))
        .collect();
    coords.extend((1..=q).rev().map(|j| -mu.conjugate_part(j)));
    Weight::new(coords, Basis::GlPQ { p, q })
}

/// `Λ(λ) = (−d·1 + λ̂⁻; λ̃⁺)` in the `ε̂`-basis.
pub fn lambda_of(lambda: &GeneralizedPartition, ctx: &Context) -> Result<Weight> {
    let Context { m, n, p, q, d } = *ctx;
    if lambda.len() != d {
        return Err(Error::LengthMismatch {
            expected: d,
            found: lambda.len(),
        });
    }
    if let Some(why) = lambda.admissibility_violation(m, n, p, q) {
        return Err(Error::Inadmissible(lambda.parts().to_vec(), why));
    }
    let (plus, minus) = lambda.split_plus_minus();
    let hat = hat_weight(&minus, p, q)?;
    let tilde = tilde_weight(&plus, m, n)?;
    let mut coords: Vec<i64> = one_vector(p, q)
        .into_iter()
        .zip(hat.coords())
        .map(|(o, h)| -(d as i64) * o + h)
        .collect();
    coords.extend_from_slice(tilde.coords());
    Weight::new(coords, Basis::Super { m, n, p, q })
}

/// Whether `a − b` is a non-negative integer combination of the positive
/// roots `ε̂_A − ε̂_B` (`A < B`), i.e. `b` lies below `a` in the order fixed
/// by the standard Borel subalgebra of the given coordinate order.
pub fn borel_dominates(a: &[i64], b: &[i64]) -> bool {
    assert_eq!(a.len(), b.len(), "weight arity");
    let mut partial = 0i64;
    for (x, y) in a.iter().zip(b) {
        partial += x - y;
        if partial < 0 {
            return false;
        }
    }
    partial == 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn p(v: &[i64]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn g(v: &[i64]) -> GeneralizedPartition {
        GeneralizedPartition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn tilde_examples() {
        assert_eq!(tilde_weight(&p(&[2, 2, 1]), 1, 2).unwrap().coords(), &[2, 2, 1]);
        assert_eq!(tilde_weight(&p(&[1, 0]), 2, 0).unwrap().coords(), &[1, 0]);
        assert_eq!(tilde_weight(&p(&[0, 0, 0]), 2, 1).unwrap().coords(), &[0, 0, 0]);
        assert!(matches!(
            tilde_weight(&p(&[2, 2]), 1, 1),
            Err(Error::HookViolation { .. })
        ));
    }

    #[test]
    fn hat_examples() {
        assert_eq!(hat_weight(&g(&[0, -1]), 1, 1).unwrap().coords(), &[0, -1]);
        assert_eq!(hat_weight(&g(&[0, 0, 0]), 2, 1).unwrap().coords(), &[0, 0, 0]);
        assert_eq!(hat_weight(&g(&[-1, -1]), 2, 0).unwrap().coords(), &[-1, -1]);
        assert!(hat_weight(&g(&[1, -1]), 1, 1).is_err());
        assert!(hat_weight(&g(&[-1, -2]), 0, 1).is_err());
    }

    #[test]
    fn lambda_examples() {
        let ctx = Context::new(1, 1, 1, 1, 2);
        let w = lambda_of(&g(&[1, -1]), &ctx).unwrap();
        assert_eq!(w.coords(), &[-2, 1, 1, 0]);
        assert_eq!(w.to_string(), "(-2, 1; 1, 0)");
        let ctx = Context::new(1, 1, 2, 1, 3);
        assert_eq!(lambda_of(&g(&[0, 0, 0]), &ctx).unwrap().coords(), &[-3, -3, 3, 0, 0]);
        let ctx = Context::new(2, 1, 0, 0, 3);
        let lam = g(&[3, 2, 1]);
        assert_eq!(
            lambda_of(&lam, &ctx).unwrap().coords(),
            tilde_weight(&p(&[3, 2, 1]), 2, 1).unwrap().coords()
        );
        assert!(lambda_of(&g(&[1, 1]), &Context::new(1, 0, 1, 1, 2)).is_err());
        assert!(lambda_of(&g(&[1]), &Context::new(1, 0, 1, 1, 2)).is_err());
    }

    #[test]
    fn lambda_is_injective() {
        for d in 1..=4 {
            for &(m, n, p, q) in &[(1, 1, 1, 1), (2, 1, 1, 0), (0, 1, 1, 1), (1, 0, 0, 1), (2, 2, 1, 2)] {
                let ctx = Context::new(m, n, p, q, d);
                let mut seen = HashSet::new();
                for lam in GeneralizedPartition::all_with_abs_size(d, 4) {
                    if lam.parts().iter().any(|x| x.abs() > 4) || !lam.check_admissible(m, n, p, q) {
                        continue;
                    }
                    let w = lambda_of(&lam, &ctx).unwrap();
                    assert!(seen.insert(w.coords().to_vec()), "collision at λ={lam} {ctx}");
                }
            }
        }
    }

    #[test]
    fn borel_order() {
        assert!(borel_dominates(&[1, 0], &[0, 1]));
        assert!(!borel_dominates(&[0, 1], &[1, 0]));
        assert!(!borel_dominates(&[1, 0], &[0, 0]));
        assert!(borel_dominates(&[2, 0, -1], &[2, 0, -1]));
    }

    #[test]
    fn json_shape() {
        let w = lambda_of(&g(&[1, -1]), &Context::new(1, 1, 1, 1, 2)).unwrap();
        let v = w.to_json();
        assert_eq!(v["coords"], json!([-2, 1, 1, 0]));
        assert_eq!(v["basis"], json!("gl_m+p|n+q"));
    }
}
