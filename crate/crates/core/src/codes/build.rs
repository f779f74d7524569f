//! Generating, control and parity-check matrices.

use alloc::vec::Vec;

use super::PrincipalCode;
use crate::error::{Error, Result};
use crate::finring::Elem;
use crate::matrices::RingMatrix;
use crate::plt::Plt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeMatrices {
    /// `k x n`, rows a basis of the code.
    pub generating: RingMatrix,
    /// `n x n`, the code is its left annihilator. Needs the cofactor `h`.
    pub control: Option<RingMatrix>,
    /// `r x n`, transpose of the last `r` columns of the control matrix.
    pub parity_check: Option<RingMatrix>,
}

/// Rows `T^i(start)` for `i < count` by the componentwise recursion, each step checked
/// against the matrix form of `T`.
fn recursive_rows(plt: &Plt, start: Vec<Elem>, count: usize) -> Result<Vec<Vec<Elem>>> {
    let mut rows = Vec::with_capacity(count);
    let mut cur = start;
    for i in 0..count {
        if i > 0 {
            let next = plt.recursive_step(&cur, Plt::hints_for(&cur))?;
            if next != plt.apply(&cur)? {
                return Err(Error::InternalInconsistency("recursion disagrees with T_f"));
            }
            cur = next;
        }
        rows.push(cur.clone());
    }
    Ok(rows)
}

impl PrincipalCode {
    /// Row `i` is `T_f^i(g_0, …, g_r, 0, …, 0)` for `i < k`.
    ///
    /// With δ = 0 no row wraps around, so row `i` is `σ^i(g)` shifted right by `i`; that
    /// closed form is used and checked against `T_f`. Otherwise rows come from the
    /// componentwise recursion.
    pub fn generating_matrix(&self) -> Result<RingMatrix> {
        let (n, k) = (self.n(), self.k());
        let ring = self.ctx.ring();
        let rows = if k == 0 {
            Vec::new()
        } else if self.ctx.delta_is_zero() {
            let mut rows: Vec<Vec<Elem>> = Vec::with_capacity(k);
            for i in 0..k {
                let mut row = alloc::vec![Elem::ZERO; n];
                for (j, &c) in self.g.coeffs().iter().enumerate() {
                    row[i + j] = self.ctx.sigma_pow(c, i as i64)?;
                }
                if i > 0 && row != self.plt.apply(&rows[i - 1])? {
                    return Err(Error::InternalInconsistency("shifted rows disagree with T_f"));
                }
                rows.push(row);
            }
            rows
        } else {
            recursive_rows(&self.plt, self.g.padded(n)?, k)?
        };
        RingMatrix::from_rows(ring, n, &rows)
    }

    /// Row `i` is `T_f^i(h_0, …, h_k, 0, …, 0)` for `i < n`.
    ///
    /// For `g = 1` the cofactor is `f` itself, whose coordinate vector modulo `f` is zero.
    pub fn control_matrix(&self) -> Result<RingMatrix> {
        let h = self.h.as_ref().ok_or(Error::CofactorMissing)?;
        let n = self.n();
        let start = if self.k() == n {
            alloc::vec![Elem::ZERO; n]
        } else {
            h.padded(n)?
        };
        let rows = recursive_rows(&self.plt, start, n)?;
        let m = RingMatrix::from_rows(self.ctx.ring(), n, &rows)?;
        if !self.generating_matrix()?.mul(&m)?.is_zero() {
            return Err(Error::InternalInconsistency("G H is not zero"));
        }
        Ok(m)
    }

    /// The transpose of the last `r` columns of the control matrix, an `r x n` matrix
    /// `H_*` with the code equal to `{x : x H_*^T = 0}`.
    pub fn parity_check_matrix(&self) -> Result<RingMatrix> {
        self.ctx.require_automorphism()?;
        let h = self.control_matrix()?;
        let hs = h.columns_from(self.n() - self.r()).transpose();
        if !self.generating_matrix()?.mul(&hs.transpose())?.is_zero() {
            return Err(Error::InternalInconsistency("G H_*^T is not zero"));
        }
        Ok(hs)
    }

    /// Every matrix that the code's hypotheses allow.
    pub fn matrices(&self) -> Result<CodeMatrices> {
        let generating = self.generating_matrix()?;
        let control = match self.control_matrix() {
            Ok(m) => Some(m),
            Err(Error::CofactorMissing) => None,
            Err(e) => return Err(e),
        };
        let parity_check = match self.parity_check_matrix() {
            Ok(m) => Some(m),
            Err(Error::CofactorMissing | Error::SigmaNotInvertible) => None,
            Err(e) => return Err(e),
        };
        Ok(CodeMatrices {
            generating,
            control,
            parity_check,
        })
    }
}
