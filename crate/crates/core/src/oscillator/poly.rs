use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::context::Context;
use crate::error::{Error, Result};

/// A generator of `ℂ[x, y, η, ζ]`. All indices are 1-based; `l` is the
/// `gl_d` index (the superscript).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    /// `x^l_i`, `1 ≤ i ≤ m`.
    X { l: usize, i: usize },
    /// `y^l_r`, `1 ≤ r ≤ p`.
    Y { l: usize, r: usize },
    /// `η^l_j`, `1 ≤ j ≤ n`.
    Eta { l: usize, j: usize },
    /// `ζ^l_s`, `1 ≤ s ≤ q`.
    Zeta { l: usize, s: usize },
}

impl Generator {
    pub fn is_odd(&self) -> bool {
        matches!(self, Generator::Eta { .. } | Generator::Zeta { .. })
    }

    fn check(&self, ctx: &Context) -> Result<()> {
        let (l, k, bound, name) = match *self {
            Generator::X { l, i } => (l, i, ctx.m, "x"),
            Generator::Y { l, r } => (l, r, ctx.p, "y"),
            Generator::Eta { l, j } => (l, j, ctx.n, "eta"),
            Generator::Zeta { l, s } => (l, s, ctx.q, "zeta"),
        };
        if l == 0 || l > ctx.d || k == 0 || k > bound {
            return Err(Error::IndexOutOfRange(format!("{name}^{l}_{k} in {ctx}")));
        }
        Ok(())
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Generator::X { l, i } => write!(f, "x^{l}_{i}"),
            Generator::Y { l, r } => write!(f, "y^{l}_{r}"),
            Generator::Eta { l, j } => write!(f, "eta^{l}_{j}"),
            Generator::Zeta { l, s } => write!(f, "zeta^{l}_{s}"),
        }
    }
}

/// Where a generator lives inside a [`Monomial`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Slot {
    Boson(usize),
    Fermion(usize),
}

/// Slot arithmetic for a fixed context.
///
/// Bosons: `x^l_i` then `y^l_r`. Fermions, in normal order: every `ζ`
/// before every `η`, each ordered by `(l, subscript)`.
pub(crate) fn slot(ctx: &Context, g: Generator) -> Slot {
    match g {
        Generator::X { l, i } => Slot::Boson((l - 1) * ctx.m + (i - 1)),
        Generator::Y { l, r } => Slot::Boson(ctx.d * ctx.m + (l - 1) * ctx.p + (r - 1)),
        Generator::Zeta { l, s } => Slot::Fermion((l - 1) * ctx.q + (s - 1)),
        Generator::Eta { l, j } => Slot::Fermion(ctx.d * ctx.q + (l - 1) * ctx.n + (j - 1)),
    }
}

pub(crate) fn boson_count(ctx: &Context) -> usize {
    ctx.d * (ctx.m + ctx.p)
}

pub(crate) fn fermion_count(ctx: &Context) -> usize {
    ctx.d * (ctx.n + ctx.q)
}

/// Every generator of the context, bosons in slot order then fermions in
/// normal order.
pub fn generators(ctx: &Context) -> Vec<Generator> {
    let mut out = Vec::new();
    for l in 1..=ctx.d {
        out.extend((1..=ctx.m).map(|i| Generator::X { l, i }));
    }
    for l in 1..=ctx.d {
        out.extend((1..=ctx.p).map(|r| Generator::Y { l, r }));
    }
    for l in 1..=ctx.d {
        out.extend((1..=ctx.q).map(|s| Generator::Zeta { l, s }));
    }
    for l in 1..=ctx.d {
        out.extend((1..=ctx.n).map(|j| Generator::Eta { l, j }));
    }
    out
}

/// A normal-ordered monomial: bosonic exponents and a fermionic
/// occupancy mask (bit `f` set means fermion slot `f` is present).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub(crate) bos: Vec<u16>,
    pub(crate) fer: u64,
}

impl Monomial {
    pub(crate) fn one(ctx: &Context) -> Self {
        Monomial {
            bos: vec![0; boson_count(ctx)],
            fer: 0,
        }
    }

    /// Total polynomial degree.
    pub fn degree(&self) -> u32 {
        self.bos.iter().map(|&e| u32::from(e)).sum::<u32>() + self.fer.count_ones()
    }

    pub fn bosonic_exponents(&self) -> &[u16] {
        &self.bos
    }

    pub fn fermionic_mask(&self) -> u64 {
        self.fer
    }

    /// `g · self` in normal order, with its sign; `None` if it vanishes.
    pub(crate) fn mul_left(&self, ctx: &Context, g: Generator) -> Option<(i32, Monomial)> {
        match slot(ctx, g) {
            Slot::Boson(b) => {
                let mut out = self.clone();
                out.bos[b] += 1;
                Some((1, out))
            }
            Slot::Fermion(f) => {
                let bit = 1u64 << f;
                if self.fer & bit != 0 {
                    return None;
                }
                let passed = (self.fer & (bit - 1)).count_ones();
                let mut out = self.clone();
                out.fer |= bit;
                Some((if passed.is_multiple_of(2) { 1 } else { -1 }, out))
            }
        }
    }

    /// `∂/∂g` acting from the left: a bosonic exponent `e` yields factor
    /// `e`; a fermion is moved to the front before it is removed.
    pub(crate) fn derive_left(&self, ctx: &Context, g: Generator) -> Option<(i32, Monomial)> {
        match slot(ctx, g) {
            Slot::Boson(b) => {
                let e = self.bos[b];
                if e == 0 {
                    return None;
                }
                let mut out = self.clone();
                out.bos[b] -= 1;
                Some((i32::from(e), out))
            }
            Slot::Fermion(f) => {
                let bit = 1u64 << f;
                if self.fer & bit == 0 {
                    return None;
                }
                let passed = (self.fer & (bit - 1)).count_ones();
                let mut out = self.clone();
                out.fer &= !bit;
                Some((if passed.is_multiple_of(2) { 1 } else { -1 }, out))
            }
        }
    }

    /// `self · other` in normal order with its sign.
    pub(crate) fn mul(&self, other: &Monomial) -> Option<(i32, Monomial)> {
        if self.fer & other.fer != 0 {
            return None;
        }
        // each fermion of `other` passes the larger fermions of `self`
        let mut swaps = 0u32;
        let mut rest = other.fer;
        while rest != 0 {
            let f = rest.trailing_zeros();
            swaps += (self.fer >> f).count_ones();
            rest &= rest - 1;
        }
        let bos = self.bos.iter().zip(&other.bos).map(|(a, b)| a + b).collect();
        Some((
            if swaps.is_multiple_of(2) { 1 } else { -1 },
            Monomial {
                bos,
                fer: self.fer | other.fer,
            },
        ))
    }

    /// `Π e!` over bosonic exponents.
    pub(crate) fn norm(&self) -> BigInt {
        let mut acc = BigInt::one();
        for &e in &self.bos {
            for k in 2..=u32::from(e) {
                acc *= k;
            }
        }
        acc
    }
}

/// An element of `ℂ[x, y, η, ζ]` with exact rational coefficients, stored
/// over normal-ordered monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperPolynomial {
    ctx: Context,
    terms: BTreeMap<Monomial, BigRational>,
}

impl SuperPolynomial {
    pub fn zero(ctx: &Context) -> Self {
        assert!(fermion_count(ctx) <= 64, "at most 64 fermionic generators supported");
        SuperPolynomial {
            ctx: *ctx,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: &Context) -> Self {
        let mut p = SuperPolynomial::zero(ctx);
        p.terms.insert(Monomial::one(ctx), BigRational::one());
        p
    }

    pub fn generator(ctx: &Context, g: Generator) -> Result<Self> {
        g.check(ctx)?;
        let mut p = SuperPolynomial::zero(ctx);
        let (s, m) = Monomial::one(ctx).mul_left(ctx, g).expect("1 is free of fermions");
        p.add_term(m, BigRational::from_integer(s.into()));
        Ok(p)
    }

    /// The product of the generators in the given order.
    pub fn word(ctx: &Context, gens: &[Generator]) -> Result<Self> {
        let mut p = SuperPolynomial::one(ctx);
        for g in gens.iter().rev() {
            g.check(ctx)?;
            p = p.mul_generator(*g);
        }
        Ok(p)
    }

    pub fn from_monomial(ctx: &Context, m: Monomial, c: BigRational) -> Self {
        let mut p = SuperPolynomial::zero(ctx);
        p.add_term(m, c);
        p
    }

    pub fn context(&self) -> &Context {
        &self.ctx
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// The degree shared by every term, if the polynomial is homogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Monomial::degree);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.ctx, other.ctx, "context mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = SuperPolynomial::zero(&self.ctx);
        if c.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect();
        out
    }

    /// Supercommutative product.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.ctx, other.ctx, "context mismatch");
        let mut out = SuperPolynomial::zero(&self.ctx);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some((s, m)) = ma.mul(mb) {
                    let c = ca * cb;
                    out.add_term(m, if s < 0 { -c } else { c });
                }
            }
        }
        out
    }

    /// `g · self`.
    pub fn mul_generator(&self, g: Generator) -> Self {
        let mut out = SuperPolynomial::zero(&self.ctx);
        for (m, c) in &self.terms {
            if let Some((s, m2)) = m.mul_left(&self.ctx, g) {
                out.add_term(m2, if s < 0 { -c.clone() } else { c.clone() });
            }
        }
        out
    }

    /// `∂/∂g (self)`, derivative acting from the left.
    pub fn derive(&self, g: Generator) -> Self {
        let mut out = SuperPolynomial::zero(&self.ctx);
        for (m, c) in &self.terms {
            if let Some((s, m2)) = m.derive_left(&self.ctx, g) {
                out.add_term(m2, c * BigRational::from_integer(s.into()));
            }
        }
        out
    }

    /// `Some(c)` when `other = c · self` for a scalar `c`.
    pub fn ratio_to(&self, other: &Self) -> Option<BigRational> {
        let (m, c) = self.terms.iter().next()?;
        let k = other.coeff(m) / c;
        (self.scale(&k) == *other).then_some(k)
    }

    /// Whether the two polynomials are non-zero scalar multiples of each
    /// other.
    pub fn is_proportional(&self, other: &Self) -> bool {
        !other.is_zero() && self.ratio_to(other).is_some_and(|k| !k.is_zero())
    }

    /// Rescales so that coefficients are coprime integers with a positive
    /// leading (largest monomial) coefficient.
    pub fn primitive(&self) -> Self {
        use num_integer::Integer;
        if self.is_zero() {
            return self.clone();
        }
        let lcm = self.terms.values().fold(BigInt::one(), |a, c| a.lcm(c.denom()));
        let ints: Vec<BigInt> = self.terms.values().map(|c| (c * &lcm).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |a, b| a.gcd(b));
        let lead_neg = self.terms.values().next_back().is_some_and(|c| c.is_negative());
        let f = BigRational::new(if lead_neg { -lcm } else { lcm }, g);
        self.scale(&f)
    }

    fn monomial_string(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for g in generators(&self.ctx) {
            match slot(&self.ctx, g) {
                Slot::Boson(b) => match m.bos[b] {
                    0 => {}
                    1 => parts.push(g.to_string()),
                    e => parts.push(format!("({g})^{e}")),
                },
                Slot::Fermion(f) => {
                    if m.fer >> f & 1 == 1 {
                        parts.push(g.to_string());
                    }
                }
            }
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Display for SuperPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let mono = self.monomial_string(m);
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if mag.is_one() {
                f.write_str(&mono)?;
            } else if mono == "1" {
                write!(f, "{mag}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

/// The contravariant Hermitian form with `⟨1|1⟩ = 1`: monomials are
/// orthogonal and `⟨M|M⟩ = Π e!` over bosonic exponents.
pub fn hermitian_form(a: &SuperPolynomial, b: &SuperPolynomial) -> BigRational {
    assert_eq!(a.ctx, b.ctx, "context mismatch");
    let mut acc = BigRational::zero();
    for (m, ca) in &a.terms {
        if let Some(cb) = b.terms.get(m) {
            acc += ca * cb * BigRational::from_integer(m.norm());
        }
    }
    acc
}
