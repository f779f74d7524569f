//! The companion matrix `C_f` of a monic `f` and the pseudo-linear map
//! `T_f(v) = σ(v) C_f + δ(v)` on `A^n`.
//!
//! Component `j` of `T_f(v)` is `δ(v_j) + σ(v_{j-1}) - a_j σ(v_{n-1})` (with `v_{-1} = 0`).
//! [`Plt::apply`] goes through the matrix, [`Plt::recursive_step`] through that formula.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::finring::Elem;
use crate::matrices::RingMatrix;
use crate::skewpoly::{SkewContext, SkewPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Plt {
    ctx: SkewContext,
    f: SkewPoly,
    n: usize,
    companion: RingMatrix,
    /// `a_1 = … = a_{n-1} = 0`.
    binomial: bool,
}

/// Facts about the input vector that let [`Plt::recursive_step`] skip terms.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct StepHints {
    /// Every component from this index on is zero.
    pub zero_from: Option<usize>,
}

impl Plt {
    pub fn new(f: &SkewPoly) -> Result<Self> {
        let n = match f.degree() {
            None | Some(0) => return Err(Error::ZeroDegree),
            Some(n) => n,
        };
        if !f.is_monic() {
            return Err(Error::NotMonic);
        }
        let ctx = f.context().clone();
        let ring = ctx.ring();
        let mut companion = RingMatrix::zeros(ring, n, n);
        for i in 0..n - 1 {
            companion.set(i, i + 1, ring.one());
        }
        for j in 0..n {
            companion.set(n - 1, j, ring.neg(f.coeff(j)));
        }
        let binomial = (1..n).all(|i| f.coeff(i).is_zero());
        Ok(Plt {
            ctx,
            f: f.clone(),
            n,
            companion,
            binomial,
        })
    }

    pub fn context(&self) -> &SkewContext {
        &self.ctx
    }

    pub fn modulus(&self) -> &SkewPoly {
        &self.f
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn companion(&self) -> &RingMatrix {
        &self.companion
    }

    fn check_len(&self, v: &[Elem]) -> Result<()> {
        if v.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: v.len(),
            });
        }
        if let Some(bad) = v.iter().find(|e| !self.ctx.ring().contains(**e)) {
            return Err(Error::NotInRing {
                index: bad.index(),
                size: self.ctx.ring().size(),
            });
        }
        Ok(())
    }

    /// `σ(v) C_f + δ(v)`.
    pub fn apply(&self, v: &[Elem]) -> Result<Vec<Elem>> {
        self.check_len(v)?;
        let ring = self.ctx.ring();
        let sv: Vec<Elem> = v.iter().map(|&x| self.ctx.sigma(x)).collect();
        let mut out = self.companion.vec_mul(&sv)?;
        for (o, &x) in out.iter_mut().zip(v) {
            *o = ring.add(*o, self.ctx.delta(x));
        }
        Ok(out)
    }

    /// `T_f^k(v)` by repeated [`Plt::apply`].
    pub fn iterate(&self, v: &[Elem], k: usize) -> Result<Vec<Elem>> {
        self.check_len(v)?;
        let mut cur = v.to_vec();
        for _ in 0..k {
            cur = self.apply(&cur)?;
        }
        Ok(cur)
    }

    /// One application of `T_f`, componentwise.
    ///
    /// Terms are dropped when known to vanish: `δ` when δ = 0 or the input component is a
    /// hinted zero, the `a_j σ(v_{n-1})` column when `v_{n-1}` is a hinted zero, and all of
    /// it but `j = 0` when `f = X^n - a`.
    pub fn recursive_step(&self, prev: &[Elem], hints: StepHints) -> Result<Vec<Elem>> {
        self.check_len(prev)?;
        let n = self.n;
        let zero_from = hints.zero_from.unwrap_or(n).min(n);
        if prev[zero_from..].iter().any(|e| !e.is_zero()) {
            return Err(Error::InternalInconsistency("recursion hint contradicts the input"));
        }
        let ring = self.ctx.ring();
        let delta = !self.ctx.delta_is_zero();
        let wrap = (zero_from == n).then(|| self.ctx.sigma(prev[n - 1]));
        let mut out = Vec::with_capacity(n);
        for j in 0..n {
            let mut y = if j == 0 {
                Elem::ZERO
            } else {
                self.ctx.sigma(prev[j - 1])
            };
            if delta && j < zero_from {
                y = ring.add(y, self.ctx.delta(prev[j]));
            }
            if let Some(last) = wrap {
                if j == 0 || !self.binomial {
                    y = ring.sub(y, ring.mul(self.f.coeff(j), last));
                }
            }
            out.push(y);
        }
        Ok(out)
    }

    /// Hint for a vector: the index after its last nonzero component.
    pub fn hints_for(v: &[Elem]) -> StepHints {
        let end = v.iter().rposition(|e| !e.is_zero()).map_or(0, |i| i + 1);
        StepHints {
            zero_from: Some(end),
        }
    }
}
