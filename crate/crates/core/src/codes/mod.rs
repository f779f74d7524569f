//! Principal codes: the coordinates of the left submodule generated by a right divisor
//! `g` of a monic `f` in `A[X; σ, δ] / (f)`.
//!
//! Throughout, `n = deg f`, `r = deg g` and `k = n - r` is the rank of the code.

mod build;
mod dual;

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::finring::Elem;
use crate::plt::Plt;
use crate::skewpoly::{SkewContext, SkewPoly};

pub use build::CodeMatrices;
pub use dual::{DualCode, SelfDualReport};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrincipalCode {
    ctx: SkewContext,
    f: SkewPoly,
    g: SkewPoly,
    plt: Plt,
    /// `f = g h`, when `g` is also a left divisor.
    h: Option<SkewPoly>,
    /// `a` when `f = X^n - a` with `a` a unit.
    constant: Option<Elem>,
}

impl PrincipalCode {
    /// Builds the code generated by `g`, normalizing `g` to be monic.
    ///
    /// The cofactor `h` with `f = g h` is found by left division when σ is an
    /// automorphism and by a search over σ-preimages otherwise.
    pub fn new(f: &SkewPoly, g: &SkewPoly) -> Result<Self> {
        Self::build(f, g, None)
    }

    /// Like [`PrincipalCode::new`] but with a known cofactor, checked against `f = g h`.
    pub fn with_cofactor(f: &SkewPoly, g: &SkewPoly, h: &SkewPoly) -> Result<Self> {
        Self::build(f, g, Some(h))
    }

    fn build(f: &SkewPoly, g: &SkewPoly, h: Option<&SkewPoly>) -> Result<Self> {
        f.context().check_same(g.context())?;
        let plt = Plt::new(f)?;
        let g = g.monic()?;
        let (_, rem) = f.right_divmod(&g)?;
        if !rem.is_zero() {
            return Err(Error::NotARightDivisor);
        }
        let ctx = f.context().clone();
        let h = match h {
            Some(h) => {
                let h = h.clone();
                if g.checked_mul(&h)? != *f {
                    return Err(Error::CofactorMissing);
                }
                Some(h)
            }
            None => left_cofactor(f, &g)?,
        };
        let n = plt.n();
        let ring = ctx.ring();
        let a = ring.neg(f.coeff(0));
        let constant = ((1..n).all(|i| f.coeff(i).is_zero()) && ring.is_unit(a)).then_some(a);
        Ok(PrincipalCode {
            ctx,
            f: f.clone(),
            g,
            plt,
            h,
            constant,
        })
    }

    pub fn context(&self) -> &SkewContext {
        &self.ctx
    }

    pub fn modulus(&self) -> &SkewPoly {
        &self.f
    }

    /// The monic generator.
    pub fn generator(&self) -> &SkewPoly {
        &self.g
    }

    pub fn cofactor(&self) -> Option<&SkewPoly> {
        self.h.as_ref()
    }

    pub fn constant(&self) -> Option<Elem> {
        self.constant
    }

    pub fn plt(&self) -> &Plt {
        &self.plt
    }

    /// Code length.
    pub fn n(&self) -> usize {
        self.plt.n()
    }

    /// `deg g`.
    pub fn r(&self) -> usize {
        self.g.degree().unwrap_or(0)
    }

    /// Rank `n - r`.
    pub fn k(&self) -> usize {
        self.n() - self.r()
    }

    /// `message · G`.
    pub fn encode(&self, message: &[Elem]) -> Result<Vec<Elem>> {
        if message.len() != self.k() {
            return Err(Error::LengthMismatch {
                expected: self.k(),
                found: message.len(),
            });
        }
        self.generating_matrix()?.vec_mul(message)
    }

    /// `word · H` with `H` the control matrix; zero exactly on codewords.
    pub fn syndrome(&self, word: &[Elem]) -> Result<Vec<Elem>> {
        if word.len() != self.n() {
            return Err(Error::LengthMismatch {
                expected: self.n(),
                found: word.len(),
            });
        }
        match self.control_matrix() {
            Ok(h) => h.vec_mul(word),
            Err(Error::CofactorMissing) => Err(Error::NoMatrixAvailable),
            Err(e) => Err(e),
        }
    }

    pub fn is_codeword(&self, word: &[Elem]) -> Result<bool> {
        Ok(self.syndrome(word)?.iter().all(|e| e.is_zero()))
    }
}

/// `h` with `f = g h`, or `None` if `g` is not a left divisor.
fn left_cofactor(f: &SkewPoly, g: &SkewPoly) -> Result<Option<SkewPoly>> {
    let ctx = f.context();
    if ctx.is_automorphism() {
        let (h, r) = f.left_divmod(g)?;
        return Ok(r.is_zero().then_some(h));
    }
    // g (t X^d) has leading term σ^m(t) X^(m+d) for monic g of degree m, so every
    // quotient coefficient ranges over a σ^m-preimage. Depth-first over those choices.
    let ring = ctx.ring();
    let m = g.degree().unwrap_or(0);
    let Some(df) = f.degree().filter(|&d| d >= m) else {
        return Ok(f.is_zero().then(|| SkewPoly::zero(ctx)));
    };
    let mut preimages: Vec<Vec<Elem>> = alloc::vec![Vec::new(); ring.size() as usize];
    for t in ring.elements() {
        preimages[ctx.sigma_pow(t, m as i64)?.index() as usize].push(t);
    }
    let mut q = alloc::vec![Elem::ZERO; df - m + 1];

    fn search(
        rem: &SkewPoly,
        d: usize,
        m: usize,
        g: &SkewPoly,
        preimages: &[Vec<Elem>],
        q: &mut [Elem],
    ) -> Result<bool> {
        let ctx = rem.context();
        let top = rem.coeff(d + m);
        for &t in &preimages[top.index() as usize] {
            let term = g.checked_mul(&SkewPoly::constant(ctx, t))?.shift_right(d);
            let next = rem.checked_sub(&term)?;
            q[d] = t;
            let done = if d == 0 {
                next.is_zero()
            } else {
                search(&next, d - 1, m, g, preimages, q)?
            };
            if done {
                return Ok(true);
            }
        }
        Ok(false)
    }

    if search(f, df - m, m, g, &preimages, &mut q)? {
        Ok(Some(SkewPoly::new(ctx, q)?))
    } else {
        Ok(None)
    }
}
