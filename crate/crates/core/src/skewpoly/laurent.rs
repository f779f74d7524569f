use alloc::collections::BTreeMap;

use super::context::SkewContext;
use super::poly::SkewPoly;
use crate::error::{Error, Result};
use crate::finring::Elem;

/// A Laurent skew polynomial `Σ a_i X^i`, `i` possibly negative, over `A[X, X⁻¹; σ]`.
///
/// Only meaningful for δ = 0 and σ an automorphism; the constructor enforces both.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentSkewPoly {
    ctx: SkewContext,
    terms: BTreeMap<i64, Elem>,
}

impl LaurentSkewPoly {
    pub fn zero(ctx: &SkewContext) -> Result<Self> {
        ctx.require_zero_delta()?;
        ctx.require_automorphism()?;
        Ok(LaurentSkewPoly {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        })
    }

    pub fn from_terms(ctx: &SkewContext, terms: impl IntoIterator<Item = (i64, Elem)>) -> Result<Self> {
        let mut out = Self::zero(ctx)?;
        for (i, a) in terms {
            if !ctx.ring().contains(a) {
                return Err(Error::NotInRing {
                    index: a.index(),
                    size: ctx.ring().size(),
                });
            }
            out.add_term(i, a);
        }
        Ok(out)
    }

    pub fn from_poly(p: &SkewPoly) -> Result<Self> {
        Self::from_terms(
            p.context(),
            p.coeffs().iter().enumerate().map(|(i, &c)| (i as i64, c)),
        )
    }

    /// `a X^i`.
    pub fn monomial(ctx: &SkewContext, a: Elem, i: i64) -> Result<Self> {
        Self::from_terms(ctx, [(i, a)])
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, Elem)> + '_ {
        self.terms.iter().map(|(&i, &a)| (i, a))
    }

    fn add_term(&mut self, i: i64, a: Elem) {
        let ring = self.ctx.ring();
        let sum = ring.add(self.terms.get(&i).copied().unwrap_or(Elem::ZERO), a);
        if sum.is_zero() {
            self.terms.remove(&i);
        } else {
            self.terms.insert(i, sum);
        }
    }

    fn sigma_pow(&self, a: Elem, n: i64) -> Elem {
        self.ctx.sigma_pow(a, n).expect("Laurent context has an automorphism")
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.ctx.check_same(&other.ctx)?;
        let mut out = self.clone();
        for (i, a) in other.terms() {
            out.add_term(i, a);
        }
        Ok(out)
    }

    /// Bilinear extension of `(a X^i)(b X^j) = a σ^i(b) X^(i+j)`.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.ctx.check_same(&other.ctx)?;
        let ring = self.ctx.ring();
        let mut out = Self::zero(&self.ctx)?;
        for (i, a) in self.terms() {
            for (j, b) in other.terms() {
                out.add_term(i + j, ring.mul(a, self.sigma_pow(b, i)));
            }
        }
        Ok(out)
    }

    /// The anti-automorphism `a X^i -> X^(-i) a = σ^(-i)(a) X^(-i)`.
    pub fn psi(&self) -> Self {
        let mut out = LaurentSkewPoly {
            ctx: self.ctx.clone(),
            terms: BTreeMap::new(),
        };
        for (i, a) in self.terms() {
            out.add_term(-i, self.sigma_pow(a, -i));
        }
        out
    }

    /// Back to an ordinary polynomial when no negative powers remain.
    pub fn to_poly(&self) -> Option<SkewPoly> {
        if self.terms.keys().next().is_some_and(|&i| i < 0) {
            return None;
        }
        let len = self.terms.keys().next_back().map_or(0, |&i| i as usize + 1);
        let mut coeffs = alloc::vec![Elem::ZERO; len];
        for (i, a) in self.terms() {
            coeffs[i as usize] = a;
        }
        Some(SkewPoly::from_raw(&self.ctx, coeffs))
    }
}
