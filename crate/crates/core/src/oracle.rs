//! Brute-force ground truth for small instances: code enumeration, duals by exhaustive
//! search, submodule checks, weights, and generator search.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::codes::PrincipalCode;
use crate::error::{Error, Result};
use crate::finring::{Elem, Ring};
use crate::matrices::{inner_product, left_annihilator, row_module, RingMatrix, VectorSet};
use crate::plt::Plt;
use crate::skewpoly::{SkewContext, SkewPoly};

/// A left submodule of `A^n`, as an explicit set of words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeSet {
    words: VectorSet,
    /// Rows spanning the set, when known.
    generators: Option<RingMatrix>,
}

impl CodeSet {
    /// Checks closure under addition and scalar multiplication; `O(|S|^2)`.
    pub fn from_words(words: VectorSet) -> Result<Self> {
        let ring = words.ring().clone();
        let all = words.to_vectors();
        let n = words.width();
        if !words.contains(&alloc::vec![Elem::ZERO; n]) {
            return Err(Error::NotASubmodule);
        }
        for x in &all {
            for a in ring.elements() {
                let ax: Vec<Elem> = x.iter().map(|&e| ring.mul(a, e)).collect();
                if !words.contains(&ax) {
                    return Err(Error::NotASubmodule);
                }
            }
            for y in &all {
                let s: Vec<Elem> = x.iter().zip(y).map(|(&p, &q)| ring.add(p, q)).collect();
                if !words.contains(&s) {
                    return Err(Error::NotASubmodule);
                }
            }
        }
        Ok(CodeSet {
            words,
            generators: None,
        })
    }

    /// The span of the rows of `g`.
    pub fn span(g: &RingMatrix, bound: u64) -> Result<Self> {
        Ok(CodeSet {
            words: row_module(g, bound)?,
            generators: Some(g.clone()),
        })
    }

    pub fn ring(&self) -> &Ring {
        self.words.ring()
    }

    pub fn n(&self) -> usize {
        self.words.width()
    }

    pub fn words(&self) -> &VectorSet {
        &self.words
    }

    pub fn generators(&self) -> Option<&RingMatrix> {
        self.generators.as_ref()
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

/// Every codeword `x G`, `x ∈ A^k`.
pub fn enumerate_code(code: &PrincipalCode, bound: u64) -> Result<CodeSet> {
    CodeSet::span(&code.generating_matrix()?, bound)
}

/// `{ y ∈ A^n : <x, y> = 0 for all x ∈ S }`, tested against the generators of `S` when
/// known and against every word otherwise.
pub fn brute_dual(s: &CodeSet, bound: u64) -> Result<CodeSet> {
    let ring = s.ring();
    let n = s.n();
    let checks = match &s.generators {
        Some(g) => g.clone(),
        None => RingMatrix::from_rows(ring, n, &s.words.to_vectors())?,
    };
    let words = left_annihilator(&checks.transpose(), bound)?;
    debug_assert!(words.iter().all(|y| checks
        .row_vectors()
        .all(|x| inner_product(ring, x, &y).map(|e| e.is_zero()).unwrap_or(false))));
    Ok(CodeSet {
        words,
        generators: None,
    })
}

/// Whether `T_f` maps `S` into itself.
pub fn closure_check(s: &CodeSet, t: &Plt) -> Result<bool> {
    if s.n() != t.n() {
        return Err(Error::LengthMismatch {
            expected: t.n(),
            found: s.n(),
        });
    }
    if s.ring() != t.context().ring() {
        return Err(Error::RingMismatch);
    }
    for w in s.words.iter() {
        if !s.words.contains(&t.apply(&w)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDistribution {
    /// Hamming weight to number of words; weights with no words are absent.
    pub counts: BTreeMap<usize, u64>,
}

impl WeightDistribution {
    /// Least nonzero weight, `None` for the zero code.
    pub fn min_distance(&self) -> Option<usize> {
        self.counts.keys().copied().find(|&w| w > 0)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }
}

pub fn weight_distribution(s: &CodeSet) -> WeightDistribution {
    let mut counts = BTreeMap::new();
    for w in s.words.iter() {
        *counts.entry(w.iter().filter(|e| !e.is_zero()).count()).or_insert(0) += 1;
    }
    WeightDistribution { counts }
}

/// All monic polynomials of degree `d`, in index order of their coefficients.
fn monic_of_degree(ctx: &SkewContext, d: usize, bound: u64) -> Result<Vec<SkewPoly>> {
    let ring = ctx.ring();
    let q = ring.size() as u128;
    let needed = q.saturating_pow(d as u32);
    if needed > bound as u128 {
        return Err(Error::BoundExceeded { needed, bound });
    }
    let mut out = Vec::with_capacity(needed as usize);
    let mut coeffs = alloc::vec![Elem::ZERO; d + 1];
    coeffs[d] = ring.one();
    for mut idx in 0..needed as u64 {
        for slot in coeffs[..d].iter_mut().rev() {
            *slot = ring.element((idx % q as u64) as u32)?;
            idx /= q as u64;
        }
        out.push(SkewPoly::new(ctx, coeffs.clone())?);
    }
    Ok(out)
}

/// Every monic right divisor of `f`, by trying all monic polynomials of each degree.
pub fn monic_right_divisors(f: &SkewPoly, bound: u64) -> Result<Vec<SkewPoly>> {
    let n = f.degree().ok_or(Error::ZeroDegree)?;
    let mut out = Vec::new();
    for d in 0..=n {
        for g in monic_of_degree(f.context(), d, bound)? {
            if f.right_divmod(&g)?.1.is_zero() {
                out.push(g);
            }
        }
    }
    Ok(out)
}

/// The monic right divisor `g` of `f` whose code is `S`, if there is one.
///
/// A principal code of `A`-rank `n - r` has `|A|^(n-r)` words, which fixes `r`.
pub fn principal_generator_search(
    s: &CodeSet,
    ctx: &SkewContext,
    f: &SkewPoly,
    bound: u64,
) -> Result<Option<SkewPoly>> {
    let n = f.degree().ok_or(Error::ZeroDegree)?;
    if s.n() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            found: s.n(),
        });
    }
    let q = ctx.ring().size() as u64;
    let mut rank = 0;
    let mut size = 1u64;
    while size < s.len() as u64 {
        size *= q;
        rank += 1;
    }
    if size != s.len() as u64 || rank > n {
        return Ok(None);
    }
    for g in monic_of_degree(ctx, n - rank, bound)? {
        if !f.right_divmod(&g)?.1.is_zero() {
            continue;
        }
        let code = PrincipalCode::new(f, &g)?;
        if enumerate_code(&code, bound)?.words == s.words {
            return Ok(Some(g));
        }
    }
    Ok(None)
}
