//! Duals of σ-constacyclic codes (δ = 0) and the self-duality criterion.

use alloc::vec::Vec;

use super::PrincipalCode;
use crate::error::{Error, Result};
use crate::finring::Elem;
use crate::matrices::RingMatrix;
use crate::plt::Plt;
use crate::skewpoly::{divisor_transfer, hstar_targets, SkewPoly, TransferDirection};

/// The dual of a constacyclic code `(g)` of length `n` with constant `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualCode {
    /// `h` with `X^n - σ^(-k)(a) = g h`.
    pub h: SkewPoly,
    /// `h*`, the dual's generator before monic normalization.
    pub h_star: SkewPoly,
    /// Constant of the dual, `c = σ^(-k)(a⁻¹) h_0 σ^n(h_0⁻¹)`.
    pub constant: Elem,
    /// The dual as a code, `(h*)` inside `X^n - c`.
    pub code: PrincipalCode,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelfDualReport {
    /// `s_l = Σ_{i=0}^{l} σ^(k-l)(g_i) g_(i+k-l)` for `l = 0..=k`, with `k = deg g = n/2`.
    pub sums: Vec<Elem>,
    /// True iff `s_1, …, s_k` all vanish. `s_0 = σ^k(g_0)` is a unit and never vanishes;
    /// the orthogonality of the rows of `G` is exactly `s_1 = … = s_k = 0`.
    pub is_self_dual_by_sums: bool,
    /// For constacyclic codes: whether `σ^k(h_0⁻¹) h*(X) = g(X)`.
    pub generator_matches_dual: Option<bool>,
}

impl PrincipalCode {
    fn require_sigma_code(&self) -> Result<()> {
        self.ctx.require_zero_delta()?;
        self.ctx.require_automorphism()
    }

    pub fn dual_code(&self) -> Result<DualCode> {
        self.require_sigma_code()?;
        let a = self.constant.ok_or(Error::NotConstacyclic)?;
        let n = self.n();
        let b = divisor_transfer(&self.g, a, n, TransferDirection::RightToLeft)?;
        let (h, rem) = SkewPoly::x_pow_minus(&self.ctx, n, b).left_divmod(&self.g)?;
        if !rem.is_zero() {
            return Err(Error::InternalInconsistency("g does not left-divide X^n - b"));
        }
        let (_, constant) = match hstar_targets(&h, b, n) {
            Err(Error::DivisibilityFails) => {
                return Err(Error::InternalInconsistency("h does not right-divide X^n - b"))
            }
            other => other?,
        };
        let h_star = h.star()?;
        let code = PrincipalCode::new(&SkewPoly::x_pow_minus(&self.ctx, n, constant), &h_star)
            .map_err(|e| match e {
                Error::NotARightDivisor => Error::InternalInconsistency("h* does not divide"),
                other => other,
            })?;
        Ok(DualCode {
            h,
            h_star,
            constant,
            code,
        })
    }

    /// `r x n` matrix whose row `j` holds `σ^j(h_k), σ^(j+1)(h_(k-1)), …, σ^(j+k)(h_0)` in
    /// columns `j..=j+k`; a generating matrix of the dual.
    pub fn dual_generating_matrix(&self) -> Result<RingMatrix> {
        let dual = self.dual_code()?;
        let (n, r, k) = (self.n(), self.r(), self.k());
        let h = &dual.h;
        let mut rows = Vec::with_capacity(r);
        for j in 0..r {
            let mut row = alloc::vec![Elem::ZERO; n];
            for i in 0..=k {
                row[j + i] = self.ctx.sigma_pow(h.coeff(k - i), (j + i) as i64)?;
            }
            rows.push(row);
        }
        let plt = Plt::new(dual.code.modulus())?;
        for j in 1..r {
            if plt.apply(&rows[j - 1])? != rows[j] {
                return Err(Error::InternalInconsistency("dual rows disagree with T_f"));
            }
        }
        if r > 0 && rows[0] != dual.h_star.padded(n)? {
            return Err(Error::InternalInconsistency("first dual row is not h*"));
        }
        RingMatrix::from_rows(self.ctx.ring(), n, &rows)
    }

    pub fn self_dual_criterion(&self) -> Result<SelfDualReport> {
        let n = self.n();
        if n % 2 == 1 {
            return Err(Error::OddLength);
        }
        self.require_sigma_code()?;
        let k = n / 2;
        if self.r() != k {
            return Err(Error::NotHalfRank {
                degree: self.r(),
                length: n,
            });
        }
        let ring = self.ctx.ring();
        let g = &self.g;
        if !ring.is_unit(g.coeff(0)) {
            return Err(Error::ConstantTermNotUnit);
        }
        let mut sums = Vec::with_capacity(k + 1);
        for l in 0..=k {
            let mut s = Elem::ZERO;
            for i in 0..=l {
                let t = ring.mul(
                    self.ctx.sigma_pow(g.coeff(i), (k - l) as i64)?,
                    g.coeff(i + k - l),
                );
                s = ring.add(s, t);
            }
            sums.push(s);
        }
        let is_self_dual_by_sums = sums[1..].iter().all(|s| s.is_zero());
        let generator_matches_dual = match self.dual_code() {
            Ok(dual) => {
                let h0_inv = ring
                    .unit_inverse(dual.h.coeff(0))
                    .ok_or(Error::InternalInconsistency("h_0 is not a unit"))?;
                let scale = self.ctx.sigma_pow(h0_inv, k as i64)?;
                Some(dual.h_star.scale_left(scale) == *g)
            }
            Err(Error::NotConstacyclic | Error::ConstantTermNotUnit) => None,
            Err(e) => return Err(e),
        };
        Ok(SelfDualReport {
            sums,
            is_self_dual_by_sums,
            generator_matches_dual,
        })
    }
}
