//! Partitions and generalized partitions of a declared length.
//!
//! Indices in the public API are 1-based (`part(1)` is the first part).
//! Trailing zeros are significant: two partitions are equal only if their
//! declared lengths agree. Use [`Partition::pad`] and [`Partition::trim`] to
//! move between lengths.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// `⟨r⟩ = max(r, 0)`.
pub fn angle(r: i64) -> i64 {
    r.max(0)
}

fn check_decreasing(parts: &[i64]) -> Result<()> {
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::NotDecreasing(parts.to_vec()));
    }
    Ok(())
}

fn parse_parts(s: &str) -> Result<Vec<i64>> {
    let trimmed = s.trim().trim_matches(|c| c == '(' || c == ')' || c == '"' || c == '\'');
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    trimmed
        .split(',')
        .map(|tok| {
            tok.trim().parse::<i64>().map_err(|e| Error::Parse {
                input: s.to_string(),
                reason: format!("{tok:?}: {e}"),
            })
        })
        .collect()
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[i64]) -> fmt::Result {
    let mut first = true;
    for p in parts {
        if !first {
            f.write_str(",")?;
        }
        first = false;
        write!(f, "{p}")?;
    }
    Ok(())
}

/// A weakly decreasing sequence of non-negative integers with a declared
/// length.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<i64>,
}

impl Partition {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        check_decreasing(&parts)?;
        if parts.last().is_some_and(|&p| p < 0) {
            return Err(Error::NegativePart(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The zero partition of length `len`.
    pub fn zero(len: usize) -> Self {
        Partition { parts: vec![0; len] }
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<i64> {
        self.parts
    }

    /// Declared length.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// 1-based access; `None` past the declared length.
    pub fn part(&self, i: usize) -> Option<i64> {
        i.checked_sub(1).and_then(|i| self.parts.get(i).copied())
    }

    /// Number of boxes `|λ|`.
    pub fn size(&self) -> i64 {
        self.parts.iter().sum()
    }

    /// Number of strictly positive parts.
    pub fn depth(&self) -> usize {
        self.parts.iter().take_while(|&&p| p > 0).count()
    }

    /// The first part, or 0 for a partition of length 0.
    pub fn first(&self) -> i64 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// `λ'_j = #{i : λ_i ≥ j}` for any `j ≥ 1` (zero past `λ_1`).
    pub fn conjugate_part(&self, j: usize) -> i64 {
        self.parts.iter().filter(|&&p| p >= j as i64).count() as i64
    }

    /// The conjugate partition; its declared length is `λ_1`.
    pub fn transpose(&self) -> Partition {
        let width = self.first() as usize;
        Partition {
            parts: (1..=width).map(|j| self.conjugate_part(j)).collect(),
        }
    }

    /// Extends with zeros (or truncates trailing zeros) to length `len`.
    ///
    /// Panics if a non-zero part would be dropped.
    pub fn pad(&self, len: usize) -> Partition {
        assert!(self.depth() <= len, "cannot pad {self} to length {len}");
        let mut parts = self.parts.clone();
        parts.resize(len, 0);
        Partition { parts }
    }

    /// Drops trailing zeros.
    pub fn trim(&self) -> Partition {
        Partition {
            parts: self.parts[..self.depth()].to_vec(),
        }
    }

    /// Componentwise containment `other ⊆ self`, comparing past the declared
    /// lengths as zeros.
    pub fn contains(&self, other: &Partition) -> bool {
        let len = self.len().max(other.len());
        (0..len).all(|i| other.parts.get(i).copied().unwrap_or(0) <= self.parts.get(i).copied().unwrap_or(0))
    }

    pub fn to_generalized(&self) -> GeneralizedPartition {
        GeneralizedPartition {
            parts: self.parts.clone(),
        }
    }

    /// All partitions `μ ⊆ self` with the same declared length.
    pub fn subpartitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(self.len());
        fn rec(bound: &[i64], cur: &mut Vec<i64>, out: &mut Vec<Partition>) {
            let i = cur.len();
            if i == bound.len() {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            let cap = if i == 0 { bound[0] } else { bound[i].min(cur[i - 1]) };
            for v in 0..=cap {
                cur.push(v);
                rec(bound, cur, out);
                cur.pop();
            }
        }
        rec(&self.parts, &mut cur, &mut out);
        out
    }

    /// All partitions of `size` with at most `max_len` non-zero parts, each
    /// returned with declared length `max_len`, in reverse lexicographic order.
    pub fn all_of_size(size: i64, max_len: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        if size < 0 {
            return out;
        }
        let mut cur = Vec::new();
        fn rec(rest: i64, cap: i64, max_len: usize, cur: &mut Vec<i64>, out: &mut Vec<Partition>) {
            if rest == 0 {
                let mut parts = cur.clone();
                parts.resize(max_len, 0);
                out.push(Partition { parts });
                return;
            }
            if cur.len() == max_len {
                return;
            }
            for v in (1..=cap.min(rest)).rev() {
                cur.push(v);
                rec(rest - v, v, max_len, cur, out);
                cur.pop();
            }
        }
        rec(size, size, max_len, &mut cur, &mut out);
        out
    }

    /// All partitions with `|λ| ≤ max_size` and at most `max_len` parts,
    /// graded by size.
    pub fn all_up_to(max_size: i64, max_len: usize) -> Vec<Partition> {
        (0..=max_size)
            .flat_map(|s| Partition::all_of_size(s, max_len))
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_parts(s)?)
    }
}

impl TryFrom<Vec<i64>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<i64>) -> Result<Self> {
        Partition::new(parts)
    }
}

/// A weakly decreasing sequence of integers with a declared length.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GeneralizedPartition {
    parts: Vec<i64>,
}

impl GeneralizedPartition {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        check_decreasing(&parts)?;
        Ok(GeneralizedPartition { parts })
    }

    pub fn zero(len: usize) -> Self {
        GeneralizedPartition { parts: vec![0; len] }
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// 1-based access; `None` past the declared length.
    pub fn part(&self, i: usize) -> Option<i64> {
        i.checked_sub(1).and_then(|i| self.parts.get(i).copied())
    }

    /// `Σ λ_i` (signed).
    pub fn sum(&self) -> i64 {
        self.parts.iter().sum()
    }

    /// `Σ |λ_i|`.
    pub fn abs_size(&self) -> i64 {
        self.parts.iter().map(|p| p.abs()).sum()
    }

    pub fn depth(&self) -> usize {
        self.parts.iter().filter(|&&p| p > 0).count()
    }

    /// `λ* = (−λ_d, …, −λ_1)`.
    pub fn star(&self) -> GeneralizedPartition {
        GeneralizedPartition {
            parts: self.parts.iter().rev().map(|p| -p).collect(),
        }
    }

    /// `λ + k·1`.
    pub fn shift(&self, k: i64) -> GeneralizedPartition {
        GeneralizedPartition {
            parts: self.parts.iter().map(|p| p + k).collect(),
        }
    }

    pub fn is_partition(&self) -> bool {
        self.parts.last().is_none_or(|&p| p >= 0)
    }

    pub fn is_non_positive(&self) -> bool {
        self.parts.first().is_none_or(|&p| p <= 0)
    }

    pub fn to_partition(&self) -> Result<Partition> {
        Partition::new(self.parts.clone())
    }

    /// `(λ⁺, λ⁻)` with `λ⁺_i = max(λ_i, 0)` and `λ⁻_i = min(λ_i, 0)`.
    pub fn split_plus_minus(&self) -> (Partition, GeneralizedPartition) {
        let plus = Partition {
            parts: self.parts.iter().map(|&p| p.max(0)).collect(),
        };
        let minus = GeneralizedPartition {
            parts: self.parts.iter().map(|&p| p.min(0)).collect(),
        };
        (plus, minus)
    }

    /// `(m ≥ d or λ_{m+1} ≤ n) and (p ≥ d or λ_{d−p} ≥ −q)`, with `d` the
    /// declared length.
    pub fn check_admissible(&self, m: usize, n: usize, p: usize, q: usize) -> bool {
        self.admissibility_violation(m, n, p, q).is_none()
    }

    pub(crate) fn admissibility_violation(&self, m: usize, n: usize, p: usize, q: usize) -> Option<String> {
        let d = self.len();
        if m < d {
            let v = self.parts[m];
            if v > n as i64 {
                return Some(format!("λ_{} = {v} > n = {n}", m + 1));
            }
        }
        if p < d {
            let v = self.parts[d - p - 1];
            if v < -(q as i64) {
                return Some(format!("λ_{} = {v} < -q = -{q}", d - p));
            }
        }
        None
    }

    /// Every weakly decreasing integer sequence of length `d` with
    /// `Σ|λ_i| ≤ bound`.
    pub fn all_with_abs_size(d: usize, bound: i64) -> Vec<GeneralizedPartition> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(d);
        fn rec(d: usize, budget: i64, cur: &mut Vec<i64>, out: &mut Vec<GeneralizedPartition>) {
            if cur.len() == d {
                out.push(GeneralizedPartition { parts: cur.clone() });
                return;
            }
            let hi = cur.last().copied().unwrap_or(budget).min(budget);
            for v in (-budget..=hi).rev() {
                cur.push(v);
                rec(d, budget - v.abs(), cur, out);
                cur.pop();
            }
        }
        if d == 0 {
            out.push(GeneralizedPartition::default());
        } else {
            rec(d, bound, &mut cur, &mut out);
        }
        out
    }
}

impl fmt::Display for GeneralizedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

impl FromStr for GeneralizedPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GeneralizedPartition::new(parse_parts(s)?)
    }
}

impl TryFrom<Vec<i64>> for GeneralizedPartition {
    type Error = Error;

    fn try_from(parts: Vec<i64>) -> Result<Self> {
        GeneralizedPartition::new(parts)
    }
}

impl From<Partition> for GeneralizedPartition {
    fn from(p: Partition) -> Self {
        GeneralizedPartition { parts: p.parts }
    }
}

/// The skew diagram `outer / inner`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::MalformedSkew {
                outer: outer.parts,
                inner: inner.parts,
            });
        }
        let len = outer.len().max(inner.depth());
        let inner = inner.trim().pad(len);
        let outer = outer.pad(len.max(outer.len()));
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Number of boxes.
    pub fn size(&self) -> i64 {
        self.outer.size() - self.inner.size()
    }

    /// Row `i` (0-based) spans columns `inner_i .. outer_i`.
    pub(crate) fn row_span(&self, i: usize) -> (usize, usize) {
        let lo = self.inner.parts.get(i).copied().unwrap_or(0) as usize;
        let hi = self.outer.parts[i] as usize;
        (lo, hi)
    }
}

pub fn transpose(lambda: &Partition) -> Partition {
    lambda.transpose()
}

pub fn star(lambda: &GeneralizedPartition) -> GeneralizedPartition {
    lambda.star()
}

pub fn split_plus_minus(lambda: &GeneralizedPartition) -> (Partition, GeneralizedPartition) {
    lambda.split_plus_minus()
}

pub fn depth(lambda: &GeneralizedPartition) -> usize {
    lambda.depth()
}

pub fn check_admissible(lambda: &GeneralizedPartition, m: usize, n: usize, p: usize, q: usize) -> bool {
    lambda.check_admissible(m, n, p, q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(v: &[i64]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn g(v: &[i64]) -> GeneralizedPartition {
        GeneralizedPartition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(p(&[4, 3, 1, 0, 0]).transpose(), p(&[3, 2, 2, 1]));
        assert_eq!(Partition::empty().transpose(), Partition::empty());
        assert_eq!(p(&[2, 2]).transpose(), p(&[2, 2]));
        assert_eq!(p(&[0, 0]).transpose(), Partition::empty());
    }

    #[test]
    fn star_examples() {
        assert_eq!(g(&[2, 0, -1]).star(), g(&[1, 0, -2]));
        assert_eq!(g(&[0, 0]).star(), g(&[0, 0]));
        assert_eq!(g(&[3, 1, -2]).star().star(), g(&[3, 1, -2]));
    }

    #[test]
    fn split_examples() {
        assert_eq!(g(&[2, 1, -1]).split_plus_minus(), (p(&[2, 1, 0]), g(&[0, 0, -1])));
        assert_eq!(g(&[3, 2]).split_plus_minus(), (p(&[3, 2]), g(&[0, 0])));
        assert_eq!(g(&[-1, -2]).split_plus_minus(), (p(&[0, 0]), g(&[-1, -2])));
    }

    #[test]
    fn depth_examples() {
        assert_eq!(g(&[4, 3, 1, 0, 0]).depth(), 3);
        assert_eq!(g(&[0, 0]).depth(), 0);
        assert_eq!(g(&[2, -1]).depth(), 1);
    }

    #[test]
    fn admissibility_examples() {
        assert!(g(&[2, 1, -1]).check_admissible(1, 1, 1, 1));
        assert!(!g(&[2, 2, -1]).check_admissible(1, 1, 1, 1));
        // λ_2 = 0 ≤ 1 and λ_{3-1} = 0 ≥ -1
        assert!(g(&[0, 0, -2]).check_admissible(1, 1, 1, 1));
        // out-of-range indices short-circuit
        assert!(g(&[9, 9]).check_admissible(2, 0, 0, 0));
        assert!(g(&[-9, -9]).check_admissible(2, 0, 2, 0));
        assert!(!g(&[-9, -9]).check_admissible(2, 0, 1, 0));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(Partition::new(vec![1, 2]), Err(Error::NotDecreasing(_))));
        assert!(matches!(Partition::new(vec![1, -1]), Err(Error::NegativePart(_))));
        assert!(matches!(
            "1,x".parse::<GeneralizedPartition>(),
            Err(Error::Parse { .. })
        ));
        assert!(SkewShape::new(p(&[2]), p(&[1, 1])).is_err());
    }

    #[test]
    fn text_syntax() {
        assert_eq!("2,1,-1".parse::<GeneralizedPartition>().unwrap(), g(&[2, 1, -1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(g(&[2, 1, -1]).to_string(), "2,1,-1");
    }

    #[test]
    fn pad_and_trim() {
        let l = p(&[2, 1]);
        assert_eq!(l.pad(4), p(&[2, 1, 0, 0]));
        assert_eq!(l.pad(4).trim(), l);
        assert_ne!(l.pad(3), l);
    }

    #[test]
    fn enumeration_counts() {
        // p(0..=6) = 1,1,2,3,5,7,11
        let counts: Vec<usize> = (0..=6).map(|n| Partition::all_of_size(n, 6).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11]);
        assert_eq!(Partition::all_of_size(4, 2).len(), 3);
        assert_eq!(p(&[2, 1]).subpartitions().len(), 5);
    }

    #[test]
    fn transpose_involution_exhaustive() {
        for lam in Partition::all_up_to(12, 12) {
            assert_eq!(lam.transpose().transpose(), lam.trim());
        }
    }

    fn gen_partition() -> impl Strategy<Value = GeneralizedPartition> {
        prop::collection::vec(-6i64..=6, 0..=6).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            GeneralizedPartition::new(v).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn star_is_involution(l in gen_partition()) {
            prop_assert_eq!(l.star().star(), l.clone());
            prop_assert_eq!(l.star().len(), l.len());
            prop_assert!(GeneralizedPartition::new(l.star().parts().to_vec()).is_ok());
        }

        #[test]
        fn split_recombines(l in gen_partition()) {
            let (plus, minus) = l.split_plus_minus();
            let sum: Vec<i64> = plus.parts().iter().zip(minus.parts()).map(|(a, b)| a + b).collect();
            prop_assert_eq!(sum.as_slice(), l.parts());
            prop_assert!(plus.depth() + minus.star().depth() <= l.len());
        }

        #[test]
        fn admissibility_splits(l in gen_partition(), m in 0usize..5, n in 0usize..4, p in 0usize..5, q in 0usize..4) {
            let (plus, minus) = l.split_plus_minus();
            let dual = minus.star();
            let plus_ok = plus.part(m + 1).is_none_or(|v| v <= n as i64);
            let minus_ok = dual.part(p + 1).is_none_or(|v| v <= q as i64);
            prop_assert_eq!(l.check_admissible(m, n, p, q), plus_ok && minus_ok);
        }
    }
}
