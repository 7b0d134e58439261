//! Schur polynomials, skew Schur polynomials, Littlewood-Richardson
//! coefficients and Schur-basis expansion.
//!
//! Every Schur polynomial is produced by enumerating semistandard tableaux,
//! so coefficients stay integral and no division ever happens.

mod tableau;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::partitions::{GeneralizedPartition, Partition, SkewShape};
use crate::series::{GradedSeries, VariableSet};

/// A Littlewood-Richardson coefficient `C^λ_{μν}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LrCoefficient(pub BigUint);

impl LrCoefficient {
    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }
}

impl From<u64> for LrCoefficient {
    fn from(v: u64) -> Self {
        LrCoefficient(BigUint::from(v))
    }
}

impl fmt::Display for LrCoefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn contents_to_series(contents: BTreeMap<Vec<i32>, u64>, vars: &VariableSet, shift: i32) -> GradedSeries {
    let sign = i32::from(vars.exponent_sign);
    GradedSeries::from_terms(
        vec![vars.clone()],
        contents.into_iter().map(|(c, n)| {
            let e = c.into_iter().map(|x| sign * (x + shift)).collect();
            (e, BigInt::from(n))
        }),
        None,
    )
}

/// `s_λ(x_1, …, x_k)` over the single alphabet `vars` (`k = vars.count`).
/// The zero series when `depth(λ) > k`.
pub fn schur(lambda: &Partition, vars: &VariableSet) -> GradedSeries {
    if lambda.depth() > vars.count {
        return GradedSeries::zero(vec![vars.clone()], None);
    }
    let shape = SkewShape::new(lambda.trim(), Partition::empty()).expect("empty inner shape");
    contents_to_series(tableau::ssyt_contents(&shape, vars.count), vars, 0)
}

/// Laurent Schur polynomial `s_λ(x) := (x_1⋯x_k)^{-c} s_{λ+c·1}(x)` for a
/// generalized partition of length `k = vars.count`, with `c = max(0, −λ_k)`.
pub fn schur_laurent(lambda: &GeneralizedPartition, vars: &VariableSet) -> Result<GradedSeries> {
    if lambda.is_partition() {
        return Ok(schur(&lambda.to_partition()?, vars));
    }
    if lambda.len() != vars.count {
        return Err(Error::LengthMismatch {
            expected: vars.count,
            found: lambda.len(),
        });
    }
    let c = -lambda.parts()[lambda.len() - 1];
    let shifted = lambda.shift(c).to_partition()?;
    let shape = SkewShape::new(shifted.trim(), Partition::empty())?;
    Ok(contents_to_series(
        tableau::ssyt_contents(&shape, vars.count),
        vars,
        -(c as i32),
    ))
}

/// `s_{λ/μ}(x_1, …, x_k)` by skew-tableau enumeration.
pub fn skew_schur(shape: &SkewShape, vars: &VariableSet) -> GradedSeries {
    contents_to_series(tableau::ssyt_contents(shape, vars.count), vars, 0)
}

/// `C^λ_{μν}`, the multiplicity of `V^λ` in `V^μ ⊗ V^ν`, counted as
/// Littlewood-Richardson tableaux of shape `λ/μ` and content `ν`.
///
/// Declared lengths are irrelevant here; trailing zeros are ignored.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> LrCoefficient {
    if lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) || !lambda.contains(nu) {
        return LrCoefficient::default();
    }
    let outer = lambda.trim();
    let inner = mu.trim();
    LrCoefficient::from(tableau::lr_tableaux(outer.parts(), inner.parts(), nu.trim().parts()))
}

/// `C^λ_{μν}` for generalized partitions of a common length `d`, reduced to
/// ordinary partitions by the shift `(λ, μ, ν) ↦ (λ+(k+k')1, μ+k1, ν+k'1)`.
pub fn lr_coefficient_generalized(
    lambda: &GeneralizedPartition,
    mu: &GeneralizedPartition,
    nu: &GeneralizedPartition,
) -> Result<LrCoefficient> {
    let d = lambda.len();
    for other in [mu, nu] {
        if other.len() != d {
            return Err(Error::LengthMismatch {
                expected: d,
                found: other.len(),
            });
        }
    }
    if d == 0 {
        return Ok(LrCoefficient::from(1));
    }
    let k = (-mu.parts()[d - 1]).max(0);
    let k2 = (-nu.parts()[d - 1]).max(0);
    let big = lambda.shift(k + k2);
    if !big.is_partition() {
        return Ok(LrCoefficient::default());
    }
    Ok(lr_coefficient(
        &big.to_partition()?,
        &mu.shift(k).to_partition()?,
        &nu.shift(k2).to_partition()?,
    ))
}

/// The expansion `s_μ · s_ν = Σ_λ C^λ_{μν} s_λ` restricted to `λ` with at
/// most `max_len` parts. Labels carry declared length `max_len`.
pub fn lr_product(mu: &Partition, nu: &Partition, max_len: usize) -> BTreeMap<Partition, LrCoefficient> {
    let mut out = BTreeMap::new();
    if mu.depth() > max_len || nu.depth() > max_len {
        return out;
    }
    for lambda in Partition::all_of_size(mu.size() + nu.size(), max_len) {
        if !lambda.contains(mu) || !lambda.contains(nu) {
            continue;
        }
        let c = lr_coefficient(&lambda, mu, nu);
        if !c.is_zero() {
            out.insert(lambda, c);
        }
    }
    out
}

fn is_weakly_decreasing(e: &[i32]) -> bool {
    e.windows(2).all(|w| w[0] >= w[1])
}

/// Coefficients of a symmetric series in the (Laurent) Schur basis, by
/// repeated subtraction of the Schur polynomial of the lexicographically
/// leading exponent.
///
/// `f` must live over exactly one alphabet of `d` variables with no
/// prefactor.
pub fn schur_expand(f: &GradedSeries, d: usize) -> Result<BTreeMap<GeneralizedPartition, BigInt>> {
    if f.vars().len() != 1 || f.arity() != d {
        return Err(Error::LayoutMismatch(format!(
            "schur_expand needs a single alphabet of {d} variables"
        )));
    }
    if f.offset().iter().any(|&o| o != 0) {
        return Err(Error::LayoutMismatch("schur_expand does not accept a prefactor".into()));
    }
    for (e, c) in f.terms() {
        for i in 0..d.saturating_sub(1) {
            let mut s = e.clone();
            s.swap(i, i + 1);
            if &f.coeff(&s) != c {
                return Err(Error::NonSymmetric);
            }
        }
    }
    let raw = VariableSet {
        exponent_sign: 1,
        ..f.vars()[0].clone()
    };
    let mut rest = f.clone();
    let mut out = BTreeMap::new();
    while let Some((lead, c)) = rest.terms().last_key_value() {
        if !is_weakly_decreasing(lead) {
            return Err(Error::TruncationResidual);
        }
        let c = c.clone();
        let lambda = GeneralizedPartition::new(lead.iter().map(|&x| i64::from(x)).collect())?;
        let mut s = schur_laurent(&lambda, &raw)?;
        // relabel onto f's alphabet; exponents are already raw
        s = GradedSeries::from_terms(f.vars().to_vec(), s.terms().clone(), f.trunc());
        rest = rest.try_sub(&s.scale(&c))?;
        out.insert(lambda, c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn p(v: &[i64]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn g(v: &[i64]) -> GeneralizedPartition {
        GeneralizedPartition::new(v.to_vec()).unwrap()
    }

    fn poly(vars: &VariableSet, terms: &[(&[i32], i64)]) -> GradedSeries {
        GradedSeries::from_terms(
            vec![vars.clone()],
            terms.iter().map(|(e, c)| (e.to_vec(), BigInt::from(*c))),
            None,
        )
    }

    #[test]
    fn schur_examples() {
        let x2 = VariableSet::new("x", 2);
        assert_eq!(schur(&p(&[1]), &x2), poly(&x2, &[(&[1, 0], 1), (&[0, 1], 1)]));
        assert!(schur(&p(&[1, 1]), &VariableSet::new("x", 1)).is_zero());
        assert_eq!(schur(&p(&[2, 1]), &x2), poly(&x2, &[(&[2, 1], 1), (&[1, 2], 1)]));
        assert_eq!(
            schur(&Partition::empty(), &x2),
            GradedSeries::one(vec![x2.clone()], None)
        );
    }

    #[test]
    fn skew_schur_examples() {
        let y1 = VariableSet::new("y", 1);
        let one_box = SkewShape::new(p(&[1, 1]), p(&[1])).unwrap();
        assert_eq!(skew_schur(&one_box, &y1), poly(&y1, &[(&[1], 1)]));
        let x3 = VariableSet::new("x", 3);
        let empty = SkewShape::new(p(&[3, 1]), p(&[3, 1])).unwrap();
        assert_eq!(skew_schur(&empty, &x3), GradedSeries::one(vec![x3], None));
        // (2,1)/(1) has two disconnected boxes: s_1^2 = x1^2 + 2 x1 x2 + x2^2
        let x2 = VariableSet::new("x", 2);
        let shape = SkewShape::new(p(&[2, 1]), p(&[1])).unwrap();
        assert_eq!(
            skew_schur(&shape, &x2),
            poly(&x2, &[(&[2, 0], 1), (&[1, 1], 2), (&[0, 2], 1)])
        );
    }

    #[test]
    fn inverse_alphabet() {
        let y = VariableSet::inverse("y", 2);
        assert_eq!(schur(&p(&[1]), &y), poly(&y, &[(&[-1, 0], 1), (&[0, -1], 1)]));
    }

    #[test]
    fn laurent_schur() {
        let z = VariableSet::new("z", 2);
        // s_{(1,-1)} = x1/x2 + 1 + x2/x1
        let s = schur_laurent(&g(&[1, -1]), &z).unwrap();
        assert_eq!(s, poly(&z, &[(&[1, -1], 1), (&[0, 0], 1), (&[-1, 1], 1)]));
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2]), &p(&[1])), LrCoefficient::from(1));
        assert_eq!(
            lr_coefficient(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])),
            LrCoefficient::from(2)
        );
        assert_eq!(
            lr_coefficient(&p(&[2]), &p(&[1, 1]), &p(&[1])),
            LrCoefficient::default()
        );
    }

    #[test]
    fn lr_generalized_examples() {
        let c = lr_coefficient_generalized(&g(&[2, -1]), &g(&[1, 0]), &g(&[1, -1])).unwrap();
        assert_eq!(c, LrCoefficient::from(1));
        let lam = g(&[3, 0, -2]);
        assert_eq!(
            lr_coefficient_generalized(&lam, &lam, &g(&[0, 0, 0])).unwrap(),
            LrCoefficient::from(1)
        );
        assert!(lr_coefficient_generalized(&g(&[2, 0]), &g(&[1, 0]), &g(&[0, 0]))
            .unwrap()
            .is_zero());
        assert!(matches!(
            lr_coefficient_generalized(&g(&[1]), &g(&[1, 0]), &g(&[0])),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn expand_examples() {
        let x2 = VariableSet::new("x", 2);
        let s1 = schur(&p(&[1]), &x2);
        let e = schur_expand(&(&s1 * &s1), 2).unwrap();
        let want: BTreeMap<_, _> = [(g(&[2, 0]), BigInt::one()), (g(&[1, 1]), BigInt::one())].into();
        assert_eq!(e, want);
        assert!(schur_expand(&GradedSeries::zero(vec![x2.clone()], None), 2)
            .unwrap()
            .is_empty());
        let e = schur_expand(&schur(&p(&[2, 1]), &x2), 2).unwrap();
        assert_eq!(e, [(g(&[2, 1]), BigInt::one())].into());
    }

    #[test]
    fn expand_rejects_non_symmetric() {
        let x2 = VariableSet::new("x", 2);
        assert_eq!(schur_expand(&poly(&x2, &[(&[1, 0], 1)]), 2), Err(Error::NonSymmetric));
    }

    #[test]
    fn expand_laurent() {
        let z = VariableSet::new("z", 2);
        let s = schur_laurent(&g(&[0, -2]), &z).unwrap();
        let e = schur_expand(&s, 2).unwrap();
        assert_eq!(e, [(g(&[0, -2]), BigInt::one())].into());
    }

    #[test]
    fn round_trip_exhaustive() {
        for k in 1..=4usize {
            let x = VariableSet::new("x", k);
            for lam in Partition::all_up_to(8, k) {
                let e = schur_expand(&schur(&lam, &x), k).unwrap();
                assert_eq!(e, [(lam.to_generalized(), BigInt::one())].into(), "λ={lam}, k={k}");
            }
        }
    }

    #[test]
    fn lr_symmetry_exhaustive() {
        for n in 0..=8 {
            for lam in Partition::all_of_size(n, 8) {
                for a in 0..=n {
                    for mu in Partition::all_of_size(a, 8) {
                        if !lam.contains(&mu) {
                            continue;
                        }
                        for nu in Partition::all_of_size(n - a, 8) {
                            assert_eq!(
                                lr_coefficient(&lam, &mu, &nu),
                                lr_coefficient(&lam, &nu, &mu),
                                "λ={lam} μ={mu} ν={nu}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn shift_invariance_random() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        let sorted = |rng: &mut rand::rngs::StdRng, d: usize| {
            let mut v: Vec<i64> = (0..d).map(|_| rng.gen_range(-3..=3)).collect();
            v.sort_unstable_by(|a, b| b.cmp(a));
            GeneralizedPartition::new(v).unwrap()
        };
        for _ in 0..300 {
            let d = rng.gen_range(1..=3);
            let mu = sorted(&mut rng, d);
            let nu = sorted(&mut rng, d);
            let lam = sorted(&mut rng, d);
            let a = rng.gen_range(0..=3);
            let b = rng.gen_range(0..=3);
            let base = lr_coefficient_generalized(&lam, &mu, &nu).unwrap();
            let moved = lr_coefficient_generalized(&lam.shift(a + b), &mu.shift(a), &nu.shift(b)).unwrap();
            assert_eq!(base, moved);
        }
    }
}
