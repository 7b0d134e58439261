use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{Generator, Monomial, SuperPolynomial};
use crate::context::Context;

/// One factor of an operator word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Factor {
    /// Left multiplication by a generator.
    Mul(Generator),
    /// Left derivative with respect to a generator.
    Der(Generator),
}

impl Factor {
    pub fn is_odd(&self) -> bool {
        match self {
            Factor::Mul(g) | Factor::Der(g) => g.is_odd(),
        }
    }
}

/// A finite sum `Σ c · F_1 F_2 ⋯ F_k` of operator words. Words act right to
/// left: `F_k` is applied first.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SuperOperator {
    terms: Vec<(BigRational, Vec<Factor>)>,
}

impl SuperOperator {
    pub fn zero() -> Self {
        SuperOperator::default()
    }

    pub fn term(c: i64, word: Vec<Factor>) -> Self {
        SuperOperator {
            terms: vec![(BigRational::from_integer(c.into()), word)],
        }
    }

    pub fn push(&mut self, c: BigRational, word: Vec<Factor>) {
        if !c.is_zero() {
            self.terms.push((c, word));
        }
    }

    pub fn terms(&self) -> &[(BigRational, Vec<Factor>)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.terms.extend(other.terms.iter().cloned());
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = SuperOperator::zero();
        for (k, w) in &self.terms {
            out.push(k * c, w.clone());
        }
        out
    }

    /// Parity of the first word (all words of an operator built from an
    /// algebra element share one parity).
    pub fn is_odd(&self) -> bool {
        self.terms
            .first()
            .is_some_and(|(_, w)| w.iter().filter(|f| f.is_odd()).count() % 2 == 1)
    }

    fn apply_word(ctx: &Context, word: &[Factor], m: &Monomial) -> Option<(i32, Monomial)> {
        let mut sign = 1;
        let mut cur = m.clone();
        for f in word.iter().rev() {
            let (s, next) = match *f {
                Factor::Mul(g) => cur.mul_left(ctx, g)?,
                Factor::Der(g) => cur.derive_left(ctx, g)?,
            };
            sign *= s;
            cur = next;
        }
        Some((sign, cur))
    }

    pub fn apply(&self, v: &SuperPolynomial) -> SuperPolynomial {
        let ctx = *v.context();
        let mut out = SuperPolynomial::zero(&ctx);
        for (m, c) in v.terms() {
            for (k, word) in &self.terms {
                if let Some((s, m2)) = Self::apply_word(&ctx, word, m) {
                    out.add_term(m2, c * k * BigRational::from_integer(s.into()));
                }
            }
        }
        out
    }

    /// Supercommutator `[A, B] v = A(Bv) − (−1)^{|A||B|} B(Av)`.
    pub fn bracket_on(a: &Self, b: &Self, v: &SuperPolynomial) -> SuperPolynomial {
        let ab = a.apply(&b.apply(v));
        let ba = b.apply(&a.apply(v));
        if a.is_odd() && b.is_odd() {
            ab.add(&ba)
        } else {
            ab.sub(&ba)
        }
    }
}

impl From<Vec<Factor>> for SuperOperator {
    fn from(word: Vec<Factor>) -> Self {
        SuperOperator {
            terms: vec![(BigRational::one(), word)],
        }
    }
}
