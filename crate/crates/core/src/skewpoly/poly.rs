use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::context::SkewContext;
use crate::error::{Error, Result};
use crate::finring::Elem;

/// An element of `A[X; σ, δ]`, coefficients low-degree-first.
///
/// The coefficient vector never ends in zero, so the zero polynomial has no coefficients
/// and no degree.
#[derive(Clone, PartialEq, Eq)]
pub struct SkewPoly {
    ctx: SkewContext,
    coeffs: Vec<Elem>,
}

impl fmt::Debug for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format())
    }
}

impl SkewPoly {
    pub fn new(ctx: &SkewContext, coeffs: Vec<Elem>) -> Result<Self> {
        let ring = ctx.ring();
        if let Some(bad) = coeffs.iter().find(|c| !ring.contains(**c)) {
            return Err(Error::NotInRing {
                index: bad.index(),
                size: ring.size(),
            });
        }
        Ok(Self::from_raw(ctx, coeffs))
    }

    pub(crate) fn from_raw(ctx: &SkewContext, mut coeffs: Vec<Elem>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        SkewPoly {
            ctx: ctx.clone(),
            coeffs,
        }
    }

    pub fn zero(ctx: &SkewContext) -> Self {
        Self::from_raw(ctx, Vec::new())
    }

    pub fn one(ctx: &SkewContext) -> Self {
        Self::constant(ctx, ctx.ring().one())
    }

    pub fn constant(ctx: &SkewContext, a: Elem) -> Self {
        Self::from_raw(ctx, alloc::vec![a])
    }

    /// `a X^i`.
    pub fn monomial(ctx: &SkewContext, a: Elem, i: usize) -> Self {
        let mut coeffs = alloc::vec![Elem::ZERO; i + 1];
        coeffs[i] = a;
        Self::from_raw(ctx, coeffs)
    }

    /// `X^n - b`.
    pub fn x_pow_minus(ctx: &SkewContext, n: usize, b: Elem) -> Self {
        let ring = ctx.ring();
        let mut coeffs = alloc::vec![Elem::ZERO; n + 1];
        coeffs[n] = ring.one();
        coeffs[0] = ring.sub(coeffs[0], b);
        Self::from_raw(ctx, coeffs)
    }

    pub fn context(&self) -> &SkewContext {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    /// Coefficient of `X^i`; zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::ZERO)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<Elem> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(self.ctx.ring().one())
    }

    /// Coefficients padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Result<Vec<Elem>> {
        if self.coeffs.len() > n {
            return Err(Error::LengthMismatch {
                expected: n,
                found: self.coeffs.len(),
            });
        }
        let mut v = self.coeffs.clone();
        v.resize(n, Elem::ZERO);
        Ok(v)
    }

    pub fn checked_add(&self, other: &SkewPoly) -> Result<SkewPoly> {
        self.ctx.check_same(&other.ctx)?;
        let ring = self.ctx.ring();
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| ring.add(self.coeff(i), other.coeff(i))).collect();
        Ok(Self::from_raw(&self.ctx, coeffs))
    }

    pub fn checked_sub(&self, other: &SkewPoly) -> Result<SkewPoly> {
        self.checked_add(&other.neg_poly())
    }

    fn neg_poly(&self) -> SkewPoly {
        let ring = self.ctx.ring();
        Self::from_raw(&self.ctx, self.coeffs.iter().map(|&c| ring.neg(c)).collect())
    }

    /// `a · p`, which scales every coefficient on the left.
    pub fn scale_left(&self, a: Elem) -> SkewPoly {
        let ring = self.ctx.ring();
        Self::from_raw(&self.ctx, self.coeffs.iter().map(|&c| ring.mul(a, c)).collect())
    }

    /// `X · p`, using `X a = σ(a) X + δ(a)` on every coefficient.
    pub fn mul_x_left(&self) -> SkewPoly {
        let ring = self.ctx.ring();
        let mut out = alloc::vec![Elem::ZERO; self.coeffs.len() + 1];
        for (j, &c) in self.coeffs.iter().enumerate() {
            out[j + 1] = ring.add(out[j + 1], self.ctx.sigma(c));
            out[j] = ring.add(out[j], self.ctx.delta(c));
        }
        Self::from_raw(&self.ctx, out)
    }

    /// `p · X^d`, a plain shift.
    pub fn shift_right(&self, d: usize) -> SkewPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut out = alloc::vec![Elem::ZERO; d];
        out.extend_from_slice(&self.coeffs);
        Self::from_raw(&self.ctx, out)
    }

    pub fn checked_mul(&self, other: &SkewPoly) -> Result<SkewPoly> {
        self.ctx.check_same(&other.ctx)?;
        let ring = self.ctx.ring();
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ctx));
        }
        let mut acc = alloc::vec![Elem::ZERO; self.coeffs.len() + other.coeffs.len()];
        let mut xi_q = other.clone();
        for (i, &p) in self.coeffs.iter().enumerate() {
            if i > 0 {
                xi_q = xi_q.mul_x_left();
            }
            if p.is_zero() {
                continue;
            }
            for (j, &c) in xi_q.coeffs.iter().enumerate() {
                acc[j] = ring.add(acc[j], ring.mul(p, c));
            }
        }
        Ok(Self::from_raw(&self.ctx, acc))
    }

    /// `f = q · g + r` with `deg r < deg g`.
    pub fn right_divmod(&self, g: &SkewPoly) -> Result<(SkewPoly, SkewPoly)> {
        self.ctx.check_same(&g.ctx)?;
        let ring = self.ctx.ring();
        let m = g.degree().ok_or(Error::LeadingCoefficientNotUnit)?;
        let lead = g.leading().unwrap_or(Elem::ZERO);
        if !ring.is_unit(lead) {
            return Err(Error::LeadingCoefficientNotUnit);
        }
        let mut r = self.clone();
        let Some(top) = r.degree().filter(|&d| d >= m) else {
            return Ok((Self::zero(&self.ctx), r));
        };
        // X^d g for d = 0..=top-m; its leading coefficient is σ^d(lead), again a unit.
        let mut shifted = Vec::with_capacity(top - m + 1);
        shifted.push(g.clone());
        for d in 1..=top - m {
            shifted.push(shifted[d - 1].mul_x_left());
        }
        let mut q = alloc::vec![Elem::ZERO; top - m + 1];
        while let Some(dr) = r.degree().filter(|&d| d >= m) {
            let d = dr - m;
            let xd_g = &shifted[d];
            let inv = ring
                .unit_inverse(xd_g.coeff(dr))
                .ok_or(Error::InternalInconsistency("σ maps a unit to a non-unit"))?;
            let t = ring.mul(r.coeff(dr), inv);
            q[d] = ring.add(q[d], t);
            r = r.checked_sub(&xd_g.scale_left(t))?;
        }
        Ok((Self::from_raw(&self.ctx, q), r))
    }

    /// `f = g · q + r` with `deg r < deg g`. Needs σ to be an automorphism.
    pub fn left_divmod(&self, g: &SkewPoly) -> Result<(SkewPoly, SkewPoly)> {
        self.ctx.check_same(&g.ctx)?;
        let ring = self.ctx.ring();
        let m = g.degree().ok_or(Error::LeadingCoefficientNotUnit)?;
        let lead_inv = g
            .leading()
            .and_then(|l| ring.unit_inverse(l))
            .ok_or(Error::LeadingCoefficientNotUnit)?;
        self.ctx.require_automorphism()?;
        let mut r = self.clone();
        let mut q = Vec::new();
        while let Some(dr) = r.degree().filter(|&d| d >= m) {
            let d = dr - m;
            // g · t X^d has leading term lead · σ^m(t) X^(m+d).
            let t = self.ctx.sigma_pow(ring.mul(lead_inv, r.coeff(dr)), -(m as i64))?;
            if q.len() <= d {
                q.resize(d + 1, Elem::ZERO);
            }
            q[d] = ring.add(q[d], t);
            let term = g.checked_mul(&Self::constant(&self.ctx, t))?.shift_right(d);
            r = r.checked_sub(&term)?;
        }
        Ok((Self::from_raw(&self.ctx, q), r))
    }

    /// `Σ σ^n(h_i) X^i`.
    pub fn sigma_n(&self, n: i64) -> Result<SkewPoly> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|&c| self.ctx.sigma_pow(c, n))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_raw(&self.ctx, coeffs))
    }

    /// `h*(X) = Σ_{i=0}^{s} σ^i(h_{s-i}) X^i` with `s = deg h`. Needs δ = 0.
    pub fn star(&self) -> Result<SkewPoly> {
        self.ctx.require_zero_delta()?;
        let Some(s) = self.degree() else {
            return Ok(self.clone());
        };
        let coeffs = (0..=s)
            .map(|i| self.ctx.sigma_pow(self.coeffs[s - i], i as i64))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_raw(&self.ctx, coeffs))
    }

    /// `lead⁻¹ · p`.
    pub fn monic(&self) -> Result<SkewPoly> {
        let ring = self.ctx.ring();
        let inv = self
            .leading()
            .and_then(|l| ring.unit_inverse(l))
            .ok_or(Error::LeadingCoefficientNotUnit)?;
        Ok(self.scale_left(inv))
    }

    /// Coefficients low-degree-first in element text form, e.g. `[(0,1), (1,1), (1,0)]`.
    pub fn format(&self) -> String {
        let ring = self.ctx.ring();
        let parts: Vec<String> = self.coeffs.iter().map(|&c| ring.format(c)).collect();
        alloc::format!("[{}]", parts.join(", "))
    }

    /// Inverse of [`SkewPoly::format`]. Trailing zeros are allowed and dropped.
    pub fn parse(ctx: &SkewContext, text: &str) -> Result<SkewPoly> {
        let body = text
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(alloc::format!("expected '[...]' in '{text}'")))?;
        let ring = ctx.ring();
        let mut coeffs = Vec::new();
        if !body.trim().is_empty() {
            let mut depth = 0i32;
            let mut start = 0;
            for (i, ch) in body.char_indices() {
                match ch {
                    '(' => depth += 1,
                    ')' => depth -= 1,
                    ',' if depth == 0 => {
                        coeffs.push(ring.parse(&body[start..i])?);
                        start = i + 1;
                    }
                    _ => {}
                }
            }
            coeffs.push(ring.parse(&body[start..])?);
        }
        Ok(Self::from_raw(ctx, coeffs))
    }
}

impl Add for &SkewPoly {
    type Output = SkewPoly;

    fn add(self, rhs: &SkewPoly) -> SkewPoly {
        self.checked_add(rhs).expect("skew polynomials from different rings")
    }
}

impl Sub for &SkewPoly {
    type Output = SkewPoly;

    fn sub(self, rhs: &SkewPoly) -> SkewPoly {
        self.checked_sub(rhs).expect("skew polynomials from different rings")
    }
}

impl Mul for &SkewPoly {
    type Output = SkewPoly;

    fn mul(self, rhs: &SkewPoly) -> SkewPoly {
        self.checked_mul(rhs).expect("skew polynomials from different rings")
    }
}

impl Neg for &SkewPoly {
    type Output = SkewPoly;

    fn neg(self) -> SkewPoly {
        self.neg_poly()
    }
}
