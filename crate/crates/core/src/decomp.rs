//! Howe decomposition labels, the `gl_{p|q} × gl_{m|n}` branching rule and
//! tensor products of the unitarizable modules `W^{Λ(λ)}`.
//!
//! Branching and tensor sums are infinite in general. Tables record the
//! bound they were enumerated to and claim completeness only when a
//! finiteness argument applies.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::context::Context;
use crate::error::{Error, Result};
use crate::hookschur::hook_condition;
use crate::partitions::{GeneralizedPartition, Partition};
use crate::symfunc::{lr_coefficient_generalized, lr_product};

/// A table label: a single generalized partition, or a `(μ, ν)` pair
/// indexing `V^{μ̃}_{m|n} ⊗ V^{−d1+ν̂}_{p|q}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Label {
    Single(GeneralizedPartition),
    Pair(Partition, GeneralizedPartition),
}

fn abs_sum(parts: &[i64]) -> i64 {
    parts.iter().map(|p| p.abs()).sum()
}

/// Graded order: `Σ|λ_i|` ascending, then parts descending
/// lexicographically.
pub fn graded_cmp(a: &[i64], b: &[i64]) -> Ordering {
    abs_sum(a).cmp(&abs_sum(b)).then_with(|| b.cmp(a))
}

impl Label {
    pub fn to_json(&self) -> Value {
        match self {
            Label::Single(l) => json!(l.parts()),
            Label::Pair(mu, nu) => json!([mu.parts(), nu.parts()]),
        }
    }

    fn key(&self) -> (i64, Vec<i64>, Vec<i64>, u8) {
        match self {
            Label::Single(l) => (abs_sum(l.parts()), l.parts().to_vec(), Vec::new(), 0),
            Label::Pair(mu, nu) => (
                abs_sum(mu.parts()) + abs_sum(nu.parts()),
                mu.parts().to_vec(),
                nu.parts().to_vec(),
                1,
            ),
        }
    }
}

impl Ord for Label {
    fn cmp(&self, other: &Self) -> Ordering {
        let (sa, a1, a2, ta) = self.key();
        let (sb, b1, b2, tb) = other.key();
        sa.cmp(&sb)
            .then_with(|| b1.cmp(&a1))
            .then_with(|| b2.cmp(&a2))
            .then_with(|| ta.cmp(&tb))
    }
}

impl PartialOrd for Label {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Display for Label {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Label::Single(l) => write!(f, "({l})"),
            Label::Pair(mu, nu) => write!(f, "(({mu}), ({nu}))"),
        }
    }
}

/// Labels with multiplicities, the enumeration bound, and whether the
/// table is provably the whole decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionTable {
    pub entries: BTreeMap<Label, BigUint>,
    pub bound: u32,
    pub complete: bool,
}

impl DecompositionTable {
    pub fn get(&self, label: &Label) -> Option<&BigUint> {
        self.entries.get(label)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .entries
            .iter()
            .map(|(l, m)| json!({ "label": l.to_json(), "mult": m.to_string() }))
            .collect();
        json!({ "bound": self.bound, "complete": self.complete, "entries": entries })
    }
}

/// Admissible `λ` of length `d` with `Σ|λ_i| ≤ bound`, in graded order.
pub fn howe_enumerate(ctx: &Context, bound: u32) -> Vec<GeneralizedPartition> {
    let mut out: Vec<GeneralizedPartition> = GeneralizedPartition::all_with_abs_size(ctx.d, i64::from(bound))
        .into_iter()
        .filter(|l| l.check_admissible(ctx.m, ctx.n, ctx.p, ctx.q))
        .collect();
    out.sort_by(|a, b| graded_cmp(a.parts(), b.parts()));
    out
}

fn check_label(lambda: &GeneralizedPartition, ctx: &Context, d: usize) -> Result<()> {
    if lambda.len() != d {
        return Err(Error::LengthMismatch {
            expected: d,
            found: lambda.len(),
        });
    }
    if let Some(why) = lambda.admissibility_violation(ctx.m, ctx.n, ctx.p, ctx.q) {
        return Err(Error::Inadmissible(lambda.parts().to_vec(), why));
    }
    Ok(())
}

/// Restriction of `W^{Λ(λ)}` to `gl_{p|q} × gl_{m|n}`: pairs `(μ, ν)` with
/// `μ` a partition, `ν` non-positive, both of length `d`, weighted by
/// `C^λ_{μν}`, for `|μ| ≤ bound`.
pub fn branch(lambda: &GeneralizedPartition, ctx: &Context, bound: u32) -> Result<DecompositionTable> {
    check_label(lambda, ctx, ctx.d)?;
    let d = ctx.d;
    let mut entries = BTreeMap::new();
    for mu in Partition::all_up_to(i64::from(bound), d) {
        if !hook_condition(&mu, ctx.m, ctx.n) {
            continue;
        }
        let nu_size = mu.size() - lambda.sum();
        for nu_star in Partition::all_of_size(nu_size, d) {
            if !hook_condition(&nu_star, ctx.p, ctx.q) {
                continue;
            }
            let nu = nu_star.to_generalized().star();
            let c = lr_coefficient_generalized(lambda, &mu.to_generalized(), &nu)?;
            if !c.is_zero() {
                entries.insert(Label::Pair(mu.clone(), nu), c.0);
            }
        }
    }
    let complete = (ctx.p + ctx.q == 0 && i64::from(bound) >= lambda.sum()) || ctx.m + ctx.n == 0;
    Ok(DecompositionTable {
        entries,
        bound,
        complete,
    })
}

/// Largest shift `d` that condition (ii) still allows, when one can be
/// read off the context.
fn shift_ceiling(mu: &GeneralizedPartition, nu: &GeneralizedPartition, ctx: &Context) -> Option<i64> {
    let len = (mu.len() + nu.len()) as i64;
    let mut best: Option<i64> = None;
    if ctx.p == 0 {
        // the last label part is −d once d > 0
        best = Some(ctx.q as i64);
    }
    if ctx.m == 0 {
        // λ_1 ≤ n + d and λ_{l+r} = 0 bound |λ| = Σμ + Σν + (l+r)d
        let c = ((len - 1) * ctx.n as i64 - mu.sum() - nu.sum()).max(0);
        best = Some(best.map_or(c, |b| b.min(c)));
    }
    best
}

/// `W^{Λ(μ)} ⊗ W^{Λ(ν)} = Σ C^λ_{μ+d1, ν+d1} W^{Λ(λ−d1)}` over the pairs
/// `(λ, d)` with `d ≤ d_max` satisfying the four side conditions.
pub fn tensor_decompose(
    mu: &GeneralizedPartition,
    nu: &GeneralizedPartition,
    ctx: &Context,
    d_max: u32,
) -> Result<DecompositionTable> {
    let (l, r) = (mu.len(), nu.len());
    if l + r == 0 {
        return Err(Error::InvalidContext("tensor product needs l + r ≥ 1".into()));
    }
    check_label(mu, ctx, l)?;
    check_label(nu, ctx, r)?;
    let len = l + r;
    let mut entries = BTreeMap::new();
    for d in 0..=i64::from(d_max) {
        let (a, b) = (mu.shift(d), nu.shift(d));
        if !a.is_partition() || !b.is_partition() {
            continue;
        }
        let products = lr_product(&a.to_partition()?.trim(), &b.to_partition()?.trim(), len);
        for (lam, c) in products {
            if d > 0 && lam.parts()[len - 1] != 0 {
                continue;
            }
            let label = lam.to_generalized().shift(-d);
            if !label.check_admissible(ctx.m, ctx.n, ctx.p, ctx.q) {
                continue;
            }
            let prev = entries.insert(Label::Single(label.clone()), c.0);
            assert!(prev.is_none(), "two shifts produce label {label}");
        }
    }
    let complete = shift_ceiling(mu, nu, ctx).is_some_and(|c| c <= i64::from(d_max));
    Ok(DecompositionTable {
        entries,
        bound: d_max,
        complete,
    })
}
