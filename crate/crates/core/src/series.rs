//! Truncated multivariate Laurent series with arbitrary-precision integer
//! coefficients.
//!
//! A series lives over an ordered list of [`VariableSet`]s; its exponent
//! vectors concatenate the exponents of every set in order. A monomial's
//! auxiliary degree is the sum of `|exponent|` over the sets flagged as
//! graded. When a truncation `N` is recorded, no term of degree above `N` is
//! stored and all arithmetic is exact below that degree.
//!
//! A series may also carry a monomial prefactor (`offset`) that sits outside
//! the grading: the represented value is `x^offset · Σ c_e x^e`, and degrees
//! are measured on the relative exponents `e` only.
//!
//! The grading is additive under multiplication as long as every graded
//! variable carries exponents of a single sign, which is how every character
//! in this crate is built.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

/// A named alphabet of `count` variables.
///
/// `exponent_sign = -1` marks an alphabet of inverse variables: generators
/// that build series over it use negative exponents. The engine itself is
/// sign-agnostic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariableSet {
    pub name: String,
    pub count: usize,
    pub exponent_sign: i8,
    pub graded: bool,
}

impl VariableSet {
    pub fn new(name: impl Into<String>, count: usize) -> Self {
        VariableSet {
            name: name.into(),
            count,
            exponent_sign: 1,
            graded: true,
        }
    }

    pub fn inverse(name: impl Into<String>, count: usize) -> Self {
        VariableSet {
            exponent_sign: -1,
            ..VariableSet::new(name, count)
        }
    }

    pub fn ungraded(mut self) -> Self {
        self.graded = false;
        self
    }

    pub fn with_count(&self, count: usize) -> Self {
        VariableSet { count, ..self.clone() }
    }

    fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "count": self.count,
            "sign": self.exponent_sign,
            "graded": self.graded,
        })
    }

    fn from_json(v: &Value) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Json("variable set is not an object".into()))?;
        let name = obj
            .get("name")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Json("missing vars[].name".into()))?;
        let count = obj
            .get("count")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Json("missing vars[].count".into()))? as usize;
        let sign = obj.get("sign").and_then(Value::as_i64).unwrap_or(1);
        let graded = obj.get("graded").and_then(Value::as_bool).unwrap_or(true);
        if sign != 1 && sign != -1 {
            return Err(Error::Json(format!("invalid exponent sign {sign}")));
        }
        Ok(VariableSet {
            name: name.to_string(),
            count,
            exponent_sign: sign as i8,
            graded,
        })
    }
}

pub type Exponent = Vec<i32>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedSeries {
    vars: Vec<VariableSet>,
    offset: Exponent,
    terms: BTreeMap<Exponent, BigInt>,
    trunc: Option<u32>,
}

fn arity(vars: &[VariableSet]) -> usize {
    vars.iter().map(|v| v.count).sum()
}

impl GradedSeries {
    pub fn zero(vars: Vec<VariableSet>, trunc: Option<u32>) -> Self {
        let offset = vec![0; arity(&vars)];
        GradedSeries {
            vars,
            offset,
            terms: BTreeMap::new(),
            trunc,
        }
    }

    pub fn one(vars: Vec<VariableSet>, trunc: Option<u32>) -> Self {
        let mut s = GradedSeries::zero(vars, trunc);
        let e = vec![0; s.arity()];
        s.terms.insert(e, BigInt::one());
        s
    }

    /// `coef · x^exp` (relative to a zero offset).
    pub fn monomial(vars: Vec<VariableSet>, exp: Exponent, coef: BigInt, trunc: Option<u32>) -> Self {
        let mut s = GradedSeries::zero(vars, trunc);
        assert_eq!(exp.len(), s.arity(), "exponent arity");
        s.add_term(exp, coef);
        s
    }

    /// Builds a series from relative-exponent terms, dropping zeros and
    /// truncating.
    pub fn from_terms(
        vars: Vec<VariableSet>,
        terms: impl IntoIterator<Item = (Exponent, BigInt)>,
        trunc: Option<u32>,
    ) -> Self {
        let mut s = GradedSeries::zero(vars, trunc);
        for (e, c) in terms {
            assert_eq!(e.len(), s.arity(), "exponent arity");
            s.add_term(e, c);
        }
        s
    }

    pub fn vars(&self) -> &[VariableSet] {
        &self.vars
    }

    pub fn arity(&self) -> usize {
        self.offset.len()
    }

    pub fn trunc(&self) -> Option<u32> {
        self.trunc
    }

    pub fn offset(&self) -> &[i32] {
        &self.offset
    }

    /// Returns the series multiplied by the prefactor `x^offset`, where the
    /// prefactor is kept outside the grading.
    pub fn with_offset(mut self, offset: Exponent) -> Self {
        assert_eq!(offset.len(), self.arity(), "offset arity");
        for (o, a) in self.offset.iter_mut().zip(offset) {
            *o += a;
        }
        self
    }

    /// Terms keyed by exponent relative to the offset.
    pub fn terms(&self) -> &BTreeMap<Exponent, BigInt> {
        &self.terms
    }

    /// Terms keyed by absolute exponent (offset included).
    pub fn absolute_terms(&self) -> impl Iterator<Item = (Exponent, &BigInt)> + '_ {
        self.terms.iter().map(move |(e, c)| {
            let abs = e.iter().zip(&self.offset).map(|(a, b)| a + b).collect();
            (abs, c)
        })
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient at a relative exponent.
    pub fn coeff(&self, exp: &[i32]) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    /// Auxiliary degree of a relative exponent.
    pub fn degree_of(&self, exp: &[i32]) -> u32 {
        let mut deg = 0u32;
        let mut start = 0;
        for v in &self.vars {
            if v.graded {
                deg += exp[start..start + v.count]
                    .iter()
                    .map(|e| e.unsigned_abs())
                    .sum::<u32>();
            }
            start += v.count;
        }
        deg
    }

    fn within(&self, exp: &[i32]) -> bool {
        self.trunc.is_none_or(|n| self.degree_of(exp) <= n)
    }

    fn add_term(&mut self, exp: Exponent, coef: BigInt) {
        if coef.is_zero() || !self.within(&exp) {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(coef);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coef;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Drops every term of degree above `n` and records the truncation.
    pub fn truncate(&self, n: u32) -> Self {
        let trunc = Some(self.trunc.map_or(n, |t| t.min(n)));
        let mut out = GradedSeries {
            vars: self.vars.clone(),
            offset: self.offset.clone(),
            terms: BTreeMap::new(),
            trunc,
        };
        for (e, c) in &self.terms {
            if out.within(e) {
                out.terms.insert(e.clone(), c.clone());
            }
        }
        out
    }

    /// Highest auxiliary degree among stored terms.
    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| self.degree_of(e)).max()
    }

    fn check_layout(&self, other: &Self) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::LayoutMismatch(format!(
                "{:?} vs {:?}",
                self.vars.iter().map(|v| &v.name).collect::<Vec<_>>(),
                other.vars.iter().map(|v| &v.name).collect::<Vec<_>>()
            )));
        }
        Ok(())
    }

    fn min_trunc(a: Option<u32>, b: Option<u32>) -> Option<u32> {
        match (a, b) {
            (Some(x), Some(y)) => Some(x.min(y)),
            (x, None) => x,
            (None, y) => y,
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_layout(other)?;
        if self.offset != other.offset {
            if self.is_zero() {
                return Ok(other.truncate_opt(Self::min_trunc(self.trunc, other.trunc)));
            }
            if other.is_zero() {
                return Ok(self.truncate_opt(Self::min_trunc(self.trunc, other.trunc)));
            }
            return Err(Error::LayoutMismatch(format!(
                "prefactor {:?} vs {:?}",
                self.offset, other.offset
            )));
        }
        let mut out = self.truncate_opt(Self::min_trunc(self.trunc, other.trunc));
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    fn truncate_opt(&self, n: Option<u32>) -> Self {
        match n {
            Some(n) => self.truncate(n),
            None => self.clone(),
        }
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_layout(other)?;
        let trunc = Self::min_trunc(self.trunc, other.trunc);
        let offset = self.offset.iter().zip(&other.offset).map(|(a, b)| a + b).collect();
        let mut out = GradedSeries {
            vars: self.vars.clone(),
            offset,
            terms: BTreeMap::new(),
            trunc,
        };
        let rhs: Vec<(&Exponent, &BigInt, u32)> = other.terms.iter().map(|(e, c)| (e, c, other.degree_of(e))).collect();
        for (ea, ca) in &self.terms {
            let da = self.degree_of(ea);
            if trunc.is_some_and(|n| da > n) {
                continue;
            }
            for &(eb, cb, db) in &rhs {
                if trunc.is_some_and(|n| da + db > n) {
                    continue;
                }
                let e: Exponent = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = self.clone();
        if c.is_zero() {
            out.terms.clear();
            return out;
        }
        for v in out.terms.values_mut() {
            *v *= c;
        }
        out
    }

    /// Exact comparison that refuses to compare series recorded at
    /// different truncations.
    pub fn same_as(&self, other: &Self) -> Result<bool> {
        if self.trunc != other.trunc {
            return Err(Error::TruncationMismatch(self.trunc, other.trunc));
        }
        self.check_layout(other)?;
        if self.offset == other.offset {
            return Ok(self.terms == other.terms);
        }
        // Differing prefactors may still describe the same value.
        let a: BTreeMap<Exponent, &BigInt> = self.absolute_terms().collect();
        let b: BTreeMap<Exponent, &BigInt> = other.absolute_terms().collect();
        Ok(a == b)
    }

    /// The first absolute exponent (in exponent order) where the two series
    /// disagree, with both coefficients.
    pub fn first_difference(&self, other: &Self) -> Option<(Exponent, BigInt, BigInt)> {
        let a: BTreeMap<Exponent, BigInt> = self.absolute_terms().map(|(e, c)| (e, c.clone())).collect();
        let b: BTreeMap<Exponent, BigInt> = other.absolute_terms().map(|(e, c)| (e, c.clone())).collect();
        let mut keys: Vec<&Exponent> = a.keys().chain(b.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter().find_map(|k| {
            let x = a.get(k).cloned().unwrap_or_default();
            let y = b.get(k).cloned().unwrap_or_default();
            (x != y).then(|| (k.clone(), x, y))
        })
    }

    /// Re-expresses the series over `target`, matching variable sets by
    /// name. Sets of `self` must exist in `target` with at least as many
    /// variables; missing sets get zero exponents.
    pub fn embed(&self, target: &[VariableSet]) -> Result<Self> {
        let mut starts = Vec::with_capacity(target.len());
        let mut acc = 0;
        for v in target {
            starts.push(acc);
            acc += v.count;
        }
        let mut map = Vec::with_capacity(self.arity());
        for v in &self.vars {
            let pos = target
                .iter()
                .position(|t| t.name == v.name)
                .ok_or_else(|| Error::LayoutMismatch(format!("no variable set named {:?}", v.name)))?;
            if target[pos].count < v.count {
                return Err(Error::LayoutMismatch(format!(
                    "set {:?} has {} variables, target has {}",
                    v.name, v.count, target[pos].count
                )));
            }
            if target[pos].graded != v.graded {
                return Err(Error::LayoutMismatch(format!("grading of {:?} differs", v.name)));
            }
            map.extend((0..v.count).map(|k| starts[pos] + k));
        }
        let remap = |e: &[i32]| {
            let mut out = vec![0; acc];
            for (i, &x) in e.iter().enumerate() {
                out[map[i]] = x;
            }
            out
        };
        Ok(GradedSeries {
            vars: target.to_vec(),
            offset: remap(&self.offset),
            terms: self.terms.iter().map(|(e, c)| (remap(e), c.clone())).collect(),
            trunc: self.trunc,
        })
    }

    /// JSON form `{"vars", "trunc", "offset", "terms":[{"exp","coef"}]}` with
    /// absolute exponents and decimal-string coefficients.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .absolute_terms()
            .map(|(e, c)| json!({ "exp": e, "coef": c.to_string() }))
            .collect();
        json!({
            "vars": self.vars.iter().map(VariableSet::to_json).collect::<Vec<_>>(),
            "trunc": self.trunc,
            "offset": self.offset,
            "terms": terms,
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Json("series is not an object".into()))?;
        let vars = obj
            .get("vars")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Json("missing vars".into()))?
            .iter()
            .map(VariableSet::from_json)
            .collect::<Result<Vec<_>>>()?;
        let trunc = match obj.get("trunc") {
            None | Some(Value::Null) => None,
            Some(t) => Some(
                t.as_u64()
                    .ok_or_else(|| Error::Json("trunc is not an integer".into()))? as u32,
            ),
        };
        let n = arity(&vars);
        let exp_of = |v: &Value| -> Result<Exponent> {
            let arr = v
                .as_array()
                .ok_or_else(|| Error::Json("exponent is not an array".into()))?;
            if arr.len() != n {
                return Err(Error::Json(format!("exponent arity {} != {n}", arr.len())));
            }
            arr.iter()
                .map(|x| {
                    x.as_i64()
                        .map(|x| x as i32)
                        .ok_or_else(|| Error::Json("bad exponent".into()))
                })
                .collect()
        };
        let offset = match obj.get("offset") {
            None => vec![0; n],
            Some(o) => exp_of(o)?,
        };
        let mut s = GradedSeries::zero(vars, trunc);
        s.offset = offset.clone();
        for t in obj
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Json("missing terms".into()))?
        {
            let abs = exp_of(t.get("exp").ok_or_else(|| Error::Json("missing exp".into()))?)?;
            let coef: BigInt = t
                .get("coef")
                .and_then(Value::as_str)
                .ok_or_else(|| Error::Json("missing coef".into()))?
                .parse()
                .map_err(|e| Error::Json(format!("bad coefficient: {e}")))?;
            let rel = abs.iter().zip(&offset).map(|(a, o)| a - o).collect();
            s.add_term(rel, coef);
        }
        Ok(s)
    }

    fn variable_names(&self) -> Vec<String> {
        let mut names = Vec::with_capacity(self.arity());
        for v in &self.vars {
            for k in 1..=v.count {
                names.push(format!("{}{}", v.name, k));
            }
        }
        names
    }
}

impl Neg for &GradedSeries {
    type Output = GradedSeries;

    fn neg(self) -> GradedSeries {
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = -std::mem::take(v);
        }
        out
    }
}

impl Add for &GradedSeries {
    type Output = GradedSeries;

    fn add(self, rhs: &GradedSeries) -> GradedSeries {
        self.try_add(rhs).expect("series layouts must agree")
    }
}

impl Sub for &GradedSeries {
    type Output = GradedSeries;

    fn sub(self, rhs: &GradedSeries) -> GradedSeries {
        self.try_sub(rhs).expect("series layouts must agree")
    }
}

impl Mul for &GradedSeries {
    type Output = GradedSeries;

    fn mul(self, rhs: &GradedSeries) -> GradedSeries {
        self.try_mul(rhs).expect("series layouts must agree")
    }
}

fn fmt_monomial(names: &[String], exp: &[i32]) -> String {
    let factors: Vec<String> = names
        .iter()
        .zip(exp)
        .filter(|(_, &e)| e != 0)
        .map(|(n, &e)| if e == 1 { n.clone() } else { format!("{n}^{e}") })
        .collect();
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}

impl fmt::Display for GradedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.variable_names();
        let prefactor = self.offset.iter().any(|&o| o != 0);
        if prefactor {
            write!(f, "{} * (", fmt_monomial(&names, &self.offset))?;
        }
        if self.terms.is_empty() {
            f.write_str("0")?;
        }
        // highest degree first reads naturally
        let mut terms: Vec<(&Exponent, &BigInt)> = self.terms.iter().collect();
        terms.sort_by(|a, b| self.degree_of(a.0).cmp(&self.degree_of(b.0)).then(b.0.cmp(a.0)));
        for (i, (e, c)) in terms.into_iter().enumerate() {
            let mono = fmt_monomial(&names, e);
            let mag = c.abs();
            let body = if mono == "1" {
                mag.to_string()
            } else if mag.is_one() {
                mono
            } else {
                format!("{mag}*{mono}")
            };
            match (i, c.is_negative()) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        if prefactor {
            f.write_str(")")?;
        }
        if let Some(n) = self.trunc {
            write!(f, " + O(deg {})", n + 1)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> Vec<VariableSet> {
        vec![VariableSet::new("x", 1), VariableSet::inverse("y", 1)]
    }

    fn mono(e: &[i32], c: i64, trunc: Option<u32>) -> GradedSeries {
        GradedSeries::monomial(xy(), e.to_vec(), BigInt::from(c), trunc)
    }

    #[test]
    fn truncation_propagates_through_products() {
        let one_plus_x = &mono(&[0, 0], 1, Some(2)) + &mono(&[1, 0], 1, Some(2));
        let sq = &one_plus_x * &one_plus_x;
        let cube = &sq * &one_plus_x;
        assert_eq!(cube.trunc(), Some(2));
        assert_eq!(cube.coeff(&[2, 0]), BigInt::from(3));
        assert_eq!(cube.coeff(&[3, 0]), BigInt::zero());
        assert_eq!(cube.len(), 3);
    }

    #[test]
    fn grading_uses_absolute_exponents() {
        let s = mono(&[1, -2], 5, None);
        assert_eq!(s.degree_of(&[1, -2]), 3);
        assert!(s.truncate(2).is_zero());
    }

    #[test]
    fn zero_coefficients_are_not_stored() {
        let a = mono(&[1, 0], 2, None);
        let b = mono(&[1, 0], -2, None);
        assert!((&a + &b).is_zero());
    }

    #[test]
    fn comparison_refuses_mixed_truncations() {
        let a = mono(&[1, 0], 1, Some(3));
        let b = mono(&[1, 0], 1, Some(4));
        assert!(matches!(a.same_as(&b), Err(Error::TruncationMismatch(..))));
        assert!(a.same_as(&b.truncate(3)).unwrap());
    }

    #[test]
    fn offset_sits_outside_grading() {
        let s = (&mono(&[0, 0], 1, Some(1)) + &mono(&[0, -1], 1, Some(1))).with_offset(vec![0, -5]);
        assert_eq!(s.len(), 2);
        let abs: Vec<Exponent> = s.absolute_terms().map(|(e, _)| e).collect();
        assert_eq!(abs, vec![vec![0, -6], vec![0, -5]]);
    }

    #[test]
    fn embed_by_name() {
        let s = GradedSeries::monomial(vec![VariableSet::inverse("y", 1)], vec![-2], BigInt::one(), None);
        let e = s.embed(&xy()).unwrap();
        assert_eq!(e.coeff(&[0, -2]), BigInt::one());
        assert!(s.embed(&[VariableSet::new("x", 1)]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let s = (&mono(&[2, 0], 3, Some(4)) + &mono(&[0, -1], -7, Some(4))).with_offset(vec![1, -1]);
        let back = GradedSeries::from_json(&s.to_json()).unwrap();
        assert_eq!(back, s);
        let text = serde_json::to_string(&s.to_json()).unwrap();
        assert!(text.contains("\"coef\":\"-7\""));
    }

    #[test]
    fn display() {
        let s = &mono(&[2, 0], 3, None) + &mono(&[0, -1], -1, None);
        assert_eq!(s.to_string(), "-y1^-1 + 3*x1^2");
    }
}
