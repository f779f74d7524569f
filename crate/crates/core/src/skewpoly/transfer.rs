//! Moving a divisor of `X^n - b` between its left and right factorizations.
//!
//! All routines need δ = 0 and σ an automorphism, and check their answer by division
//! before returning it.

use super::context::SkewContext;
use super::poly::SkewPoly;
use crate::error::{Error, Result};
use crate::finring::Elem;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransferDirection {
    /// `g` left-divides `X^n - b`; find `a` with `g` right-dividing `X^n - a`.
    LeftToRight,
    /// `g` right-divides `X^n - a`; find `b` with `g` left-dividing `X^n - b`.
    RightToLeft,
}

fn require_laurent(ctx: &SkewContext) -> Result<()> {
    ctx.require_zero_delta()?;
    ctx.require_automorphism()
}

/// For `g` of degree `n - k` with unit leading coefficient `l`:
///
/// * left-to-right, `X^n - b = g h` gives `X^n - a = σ^n(h) g` with
///   `a = σ^k(b) σ^(k-n)(l) σ^k(l⁻¹)`;
/// * right-to-left inverts that formula, `b = σ^(-k)(a) σ^(-n)(l⁻¹) l`.
pub fn divisor_transfer(
    g: &SkewPoly,
    constant: Elem,
    n: usize,
    direction: TransferDirection,
) -> Result<Elem> {
    let ctx = g.context();
    require_laurent(ctx)?;
    let ring = ctx.ring();
    if !ring.contains(constant) {
        return Err(Error::NotInRing {
            index: constant.index(),
            size: ring.size(),
        });
    }
    let lead = g.leading().ok_or(Error::LeadingCoefficientNotUnit)?;
    let lead_inv = ring.unit_inverse(lead).ok_or(Error::LeadingCoefficientNotUnit)?;
    if !ring.is_unit(constant) {
        return Err(Error::NonUnitInput);
    }
    let deg = g.degree().unwrap_or(0);
    if deg > n {
        return Err(Error::DivisibilityFails);
    }
    let k = (n - deg) as i64;
    let n = n as i64;
    let s = |x: Elem, e: i64| ctx.sigma_pow(x, e);
    match direction {
        TransferDirection::LeftToRight => {
            let b = constant;
            let (h, r) = SkewPoly::x_pow_minus(ctx, n as usize, b).left_divmod(g)?;
            if !r.is_zero() {
                return Err(Error::DivisibilityFails);
            }
            let a = ring.mul(ring.mul(s(b, k)?, s(lead, k - n)?), s(lead_inv, k)?);
            let product = h.sigma_n(n)?.checked_mul(g)?;
            if product != SkewPoly::x_pow_minus(ctx, n as usize, a) {
                return Err(Error::InternalInconsistency("divisor transfer (left to right)"));
            }
            Ok(a)
        }
        TransferDirection::RightToLeft => {
            let a = constant;
            let (_, r) = SkewPoly::x_pow_minus(ctx, n as usize, a).right_divmod(g)?;
            if !r.is_zero() {
                return Err(Error::DivisibilityFails);
            }
            let b = ring.mul(ring.mul(s(a, -k)?, s(lead_inv, -n)?), lead);
            let (_, r) = SkewPoly::x_pow_minus(ctx, n as usize, b).left_divmod(g)?;
            if !r.is_zero() {
                return Err(Error::InternalInconsistency("divisor transfer (right to left)"));
            }
            Ok(b)
        }
    }
}

/// For `h` of degree `k` right-dividing `X^n - b` with unit `h_0`, returns `(c_l, c_r)` with
/// `h*` a left divisor of `X^n - c_l` and a right divisor of `X^n - c_r`:
/// `c_l = σ^(k-n)(b⁻¹)` and `c_r = b⁻¹ h_0 σ^n(h_0⁻¹)`.
pub fn hstar_targets(h: &SkewPoly, b: Elem, n: usize) -> Result<(Elem, Elem)> {
    let ctx = h.context();
    require_laurent(ctx)?;
    let ring = ctx.ring();
    let h0_inv = ring.unit_inverse(h.coeff(0)).ok_or(Error::ConstantTermNotUnit)?;
    let b_inv = ring.unit_inverse(b).ok_or(Error::NonUnitInput)?;
    let k = h.degree().unwrap_or(0);
    if k > n {
        return Err(Error::DivisibilityFails);
    }
    let (_, r) = SkewPoly::x_pow_minus(ctx, n, b).right_divmod(h)?;
    if !r.is_zero() {
        return Err(Error::DivisibilityFails);
    }
    let left = ctx.sigma_pow(b_inv, k as i64 - n as i64)?;
    let right = ring.mul(ring.mul(b_inv, h.coeff(0)), ctx.sigma_pow(h0_inv, n as i64)?);

    let hs = h.star()?;
    let (_, r1) = SkewPoly::x_pow_minus(ctx, n, left).left_divmod(&hs)?;
    let (_, r2) = SkewPoly::x_pow_minus(ctx, n, right).right_divmod(&hs)?;
    if !r1.is_zero() || !r2.is_zero() {
        return Err(Error::InternalInconsistency("h* divisibility"));
    }
    Ok((left, right))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finring::{Endomorphism, Ring};
    use alloc::vec;

    fn swap_ctx() -> SkewContext {
        let a = Ring::product(Ring::galois(3, 1).unwrap()).unwrap();
        SkewContext::sigma_only(a, Endomorphism::Swap).unwrap()
    }

    #[test]
    fn example_two_and_three_constants() {
        let ctx = swap_ctx();
        let ring = ctx.ring().clone();
        for text in ["(1,1)", "(2,2)"] {
            let alpha = ring.parse(text).unwrap();
            let pw = |k: u64| ring.pow(alpha, k);
            let g = SkewPoly::new(&ctx, vec![ring.neg(alpha), ring.one()]).unwrap();
            let a = divisor_transfer(&g, pw(4), 4, TransferDirection::LeftToRight).unwrap();
            assert_eq!(a, pw(4));
            let back = divisor_transfer(&g, a, 4, TransferDirection::RightToLeft).unwrap();
            assert_eq!(back, pw(4));

            let h = SkewPoly::new(&ctx, vec![pw(3), pw(2), alpha, ring.one()]).unwrap();
            let inv4 = ring.unit_inverse(pw(4)).unwrap();
            assert_eq!(hstar_targets(&h, pw(4), 4).unwrap(), (inv4, inv4));
        }
    }

    #[test]
    fn identity_sigma_collapses() {
        let ctx = SkewContext::commutative(Ring::integers_mod(5).unwrap());
        let ring = ctx.ring().clone();
        // X^2 - 4 = (X - 2)(X + 2)
        let g = SkewPoly::parse(&ctx, "[-2, 1]").unwrap();
        let b = ring.from_int(4);
        assert_eq!(divisor_transfer(&g, b, 2, TransferDirection::LeftToRight).unwrap(), b);
        let h = SkewPoly::parse(&ctx, "[2, 1]").unwrap();
        let b_inv = ring.unit_inverse(b).unwrap();
        assert_eq!(hstar_targets(&h, b, 2).unwrap(), (b_inv, b_inv));
    }

    #[test]
    fn errors() {
        let ctx = SkewContext::commutative(Ring::integers_mod(6).unwrap());
        let ring = ctx.ring().clone();
        let g = SkewPoly::parse(&ctx, "[1, 1]").unwrap();
        assert_eq!(
            divisor_transfer(&g, ring.from_int(2), 2, TransferDirection::LeftToRight),
            Err(Error::NonUnitInput)
        );
        // X - 2 does not divide X^2 - 1 over Z_6.
        let g = SkewPoly::parse(&ctx, "[-2, 1]").unwrap();
        assert_eq!(
            divisor_transfer(&g, ring.one(), 2, TransferDirection::LeftToRight),
            Err(Error::DivisibilityFails)
        );
        let h = SkewPoly::parse(&ctx, "[2, 1]").unwrap();
        assert_eq!(hstar_targets(&h, ring.one(), 2), Err(Error::ConstantTermNotUnit));
    }
}
