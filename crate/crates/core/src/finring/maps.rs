//! Ring endomorphisms `σ` and `σ`-derivations `δ`, with exhaustive (or sampled) checks
//! of their defining identities.

use alloc::sync::Arc;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::ring::{Elem, Kind, Ring};
use crate::error::{Error, Result};

/// A unital ring endomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Endomorphism {
    Identity,
    /// `x -> x^(p^power)` on `GF(p^k)`.
    Frobenius { power: u32 },
    /// `(x, y) -> (y, x)` on `R x R`.
    Swap,
    /// `(a, b) -> (a, factor * b)` on `D(R)`, `factor` an element of `R`.
    /// `factor = 0` gives `(a,b) -> (a,0)`, `factor = -1` gives `(a,b) -> (a,-b)`.
    DualScale { factor: Elem },
    /// Image of every element, in index order.
    Table(Arc<[Elem]>),
}

/// The closed set of derivation shapes. The twisting endomorphism lives in [`Derivation`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DerivationKind {
    Zero,
    /// `(a, b) -> (0, factor * b)` on `D(R)`; a `σ`-derivation for every `DualScale` σ.
    DualComponent { factor: Elem },
    /// `x -> t * (x - σ(x))`, the inner `σ`-derivation of `t`.
    Inner { element: Elem },
    Table(Arc<[Elem]>),
}

/// A `σ`-derivation: additive with `δ(ab) = σ(a)δ(b) + δ(a)b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation {
    pub kind: DerivationKind,
    pub sigma: Endomorphism,
}

impl Derivation {
    pub fn zero(sigma: Endomorphism) -> Self {
        Derivation {
            kind: DerivationKind::Zero,
            sigma,
        }
    }

    pub fn new(kind: DerivationKind, sigma: Endomorphism) -> Self {
        Derivation { kind, sigma }
    }
}

/// How identities over all element pairs are checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyPolicy {
    /// Check every pair when `|A|^2` is at most this.
    pub exhaustive_pair_bound: u64,
    /// Number of seeded random pairs otherwise.
    pub sample_pairs: u64,
    pub allow_sampling: bool,
    pub seed: u64,
}

impl Default for VerifyPolicy {
    fn default() -> Self {
        VerifyPolicy {
            exhaustive_pair_bound: 1 << 20,
            sample_pairs: 1 << 16,
            allow_sampling: true,
            seed: 0,
        }
    }
}

impl VerifyPolicy {
    pub fn with_seed(seed: u64) -> Self {
        VerifyPolicy {
            seed,
            ..VerifyPolicy::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verification {
    pub holds: bool,
    /// True when only a random sample of pairs was checked.
    pub sampled: bool,
    pub pairs_checked: u64,
}

fn kind_error(what: &str, ring: &Ring) -> Error {
    Error::UnsupportedKind(alloc::format!("{what} on {ring}"))
}

fn check_table(ring: &Ring, table: &[Elem]) -> Result<()> {
    if table.len() != ring.size() as usize {
        return Err(Error::LengthMismatch {
            expected: ring.size() as usize,
            found: table.len(),
        });
    }
    match table.iter().find(|e| !ring.contains(**e)) {
        Some(e) => Err(Error::NotInRing {
            index: e.index(),
            size: ring.size(),
        }),
        None => Ok(()),
    }
}

impl Endomorphism {
    /// Checks that this map's kind makes sense on `ring` (not that it is an endomorphism).
    pub fn check_kind(&self, ring: &Ring) -> Result<()> {
        match self {
            Endomorphism::Identity => Ok(()),
            Endomorphism::Frobenius { .. } => match ring.kind() {
                Kind::Galois { .. } => Ok(()),
                _ => Err(kind_error("frobenius", ring)),
            },
            Endomorphism::Swap => match ring.kind() {
                Kind::Product(_) => Ok(()),
                _ => Err(kind_error("swap", ring)),
            },
            Endomorphism::DualScale { factor } => match ring.kind() {
                Kind::Dual(inner) if inner.contains(*factor) => Ok(()),
                Kind::Dual(inner) => Err(Error::NotInRing {
                    index: factor.index(),
                    size: inner.size(),
                }),
                _ => Err(kind_error("dual-scale", ring)),
            },
            Endomorphism::Table(t) => check_table(ring, t),
        }
    }

    pub fn apply(&self, ring: &Ring, x: Elem) -> Elem {
        match self {
            Endomorphism::Identity => x,
            Endomorphism::Frobenius { power } => {
                let (p, _) = ring.galois_parameters().expect("frobenius needs a Galois field");
                let mut y = x;
                for _ in 0..*power {
                    y = ring.pow(y, p as u64);
                }
                y
            }
            Endomorphism::Swap => {
                let (a, b) = ring.components(x);
                ring.pair(b, a)
            }
            Endomorphism::DualScale { factor } => {
                let inner = ring.inner().expect("dual-scale needs D(R)");
                let (a, b) = ring.components(x);
                ring.pair(a, inner.mul(*factor, b))
            }
            Endomorphism::Table(t) => t[x.index() as usize],
        }
    }

    pub fn table(&self, ring: &Ring) -> Vec<Elem> {
        ring.elements().map(|x| self.apply(ring, x)).collect()
    }

    /// `σ^n` by repeated squaring of the map table.
    pub fn power_table(&self, ring: &Ring, n: u64) -> Vec<Elem> {
        let mut acc: Vec<Elem> = ring.elements().collect();
        let mut base = self.table(ring);
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.iter().map(|x| base[x.index() as usize]).collect();
            }
            base = base.iter().map(|x| base[x.index() as usize]).collect();
            e >>= 1;
        }
        acc
    }

    /// Same function on `ring`, regardless of how the two maps are described.
    pub fn same_map(&self, other: &Endomorphism, ring: &Ring) -> bool {
        self == other || ring.elements().all(|x| self.apply(ring, x) == other.apply(ring, x))
    }

    pub fn is_identity_on(&self, ring: &Ring) -> bool {
        self.same_map(&Endomorphism::Identity, ring)
    }

    /// Smallest `n >= 1` with `σ^n = id`, if `σ` is a permutation.
    pub fn order(&self, ring: &Ring) -> Option<u64> {
        let table = self.table(ring);
        let mut seen = alloc::vec![false; table.len()];
        for &y in &table {
            if core::mem::replace(&mut seen[y.index() as usize], true) {
                return None;
            }
        }
        let mut current = table.clone();
        let mut n = 1u64;
        while current.iter().enumerate().any(|(i, y)| y.index() as usize != i) {
            current = current.iter().map(|x| table[x.index() as usize]).collect();
            n += 1;
        }
        Some(n)
    }
}

impl DerivationKind {
    pub fn check_kind(&self, ring: &Ring) -> Result<()> {
        match self {
            DerivationKind::Zero => Ok(()),
            DerivationKind::DualComponent { factor } => match ring.kind() {
                Kind::Dual(inner) if inner.contains(*factor) => Ok(()),
                Kind::Dual(inner) => Err(Error::NotInRing {
                    index: factor.index(),
                    size: inner.size(),
                }),
                _ => Err(kind_error("dual-component", ring)),
            },
            DerivationKind::Inner { element } => {
                if ring.contains(*element) {
                    Ok(())
                } else {
                    Err(Error::NotInRing {
                        index: element.index(),
                        size: ring.size(),
                    })
                }
            }
            DerivationKind::Table(t) => check_table(ring, t),
        }
    }
}

impl Derivation {
    pub fn check_kind(&self, ring: &Ring) -> Result<()> {
        self.sigma.check_kind(ring)?;
        self.kind.check_kind(ring)
    }

    pub fn apply(&self, ring: &Ring, x: Elem) -> Elem {
        match &self.kind {
            DerivationKind::Zero => Elem::ZERO,
            DerivationKind::DualComponent { factor } => {
                let inner = ring.inner().expect("dual-component needs D(R)");
                let (_, b) = ring.components(x);
                ring.pair(Elem::ZERO, inner.mul(*factor, b))
            }
            DerivationKind::Inner { element } => {
                ring.mul(*element, ring.sub(x, self.sigma.apply(ring, x)))
            }
            DerivationKind::Table(t) => t[x.index() as usize],
        }
    }

    pub fn table(&self, ring: &Ring) -> Vec<Elem> {
        ring.elements().map(|x| self.apply(ring, x)).collect()
    }

    pub fn is_zero_on(&self, ring: &Ring) -> bool {
        matches!(self.kind, DerivationKind::Zero)
            || ring.elements().all(|x| self.apply(ring, x).is_zero())
    }
}

/// Runs `check` over all pairs, or over a seeded sample when `|A|^2` is too large.
fn check_pairs(
    ring: &Ring,
    policy: &VerifyPolicy,
    mut check: impl FnMut(Elem, Elem) -> bool,
) -> Result<Verification> {
    let size = ring.size() as u64;
    let pairs = size as u128 * size as u128;
    if pairs <= policy.exhaustive_pair_bound as u128 {
        for a in ring.elements() {
            for b in ring.elements() {
                if !check(a, b) {
                    return Ok(Verification {
                        holds: false,
                        sampled: false,
                        pairs_checked: pairs as u64,
                    });
                }
            }
        }
        return Ok(Verification {
            holds: true,
            sampled: false,
            pairs_checked: pairs as u64,
        });
    }
    if !policy.allow_sampling {
        return Err(Error::SamplingNotAllowed {
            pairs,
            bound: policy.exhaustive_pair_bound,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(policy.seed);
    let size = ring.size();
    for _ in 0..policy.sample_pairs {
        let a = ring.element(rng.random_range(0..size))?;
        let b = ring.element(rng.random_range(0..size))?;
        if !check(a, b) {
            return Ok(Verification {
                holds: false,
                sampled: true,
                pairs_checked: policy.sample_pairs,
            });
        }
    }
    Ok(Verification {
        holds: true,
        sampled: true,
        pairs_checked: policy.sample_pairs,
    })
}

/// Checks `σ(1) = 1`, additivity and multiplicativity.
pub fn verify_endomorphism(
    ring: &Ring,
    sigma: &Endomorphism,
    policy: &VerifyPolicy,
) -> Result<Verification> {
    sigma.check_kind(ring)?;
    let table = sigma.table(ring);
    let s = |x: Elem| table[x.index() as usize];
    if s(ring.one()) != ring.one() {
        return Ok(Verification {
            holds: false,
            sampled: false,
            pairs_checked: 0,
        });
    }
    check_pairs(ring, policy, |a, b| {
        s(ring.add(a, b)) == ring.add(s(a), s(b)) && s(ring.mul(a, b)) == ring.mul(s(a), s(b))
    })
}

/// Checks additivity and the twisted Leibniz rule `δ(ab) = σ(a)δ(b) + δ(a)b`.
pub fn verify_derivation(
    ring: &Ring,
    delta: &Derivation,
    policy: &VerifyPolicy,
) -> Result<Verification> {
    delta.check_kind(ring)?;
    let sig = delta.sigma.table(ring);
    let del = delta.table(ring);
    let s = |x: Elem| sig[x.index() as usize];
    let d = |x: Elem| del[x.index() as usize];
    check_pairs(ring, policy, |a, b| {
        d(ring.add(a, b)) == ring.add(d(a), d(b))
            && d(ring.mul(a, b)) == ring.add(ring.mul(s(a), d(b)), ring.mul(d(a), b))
    })
}

/// `σ^{-1}` as a table, built by inverting the graph of `σ`.
pub fn endo_inverse(ring: &Ring, sigma: &Endomorphism) -> Result<Endomorphism> {
    sigma.check_kind(ring)?;
    if *sigma == Endomorphism::Identity {
        return Ok(Endomorphism::Identity);
    }
    let mut inverse = alloc::vec![None; ring.size() as usize];
    for x in ring.elements() {
        let y = sigma.apply(ring, x);
        if inverse[y.index() as usize].replace(x).is_some() {
            return Err(Error::NotInjective);
        }
    }
    let table: Vec<Elem> = inverse.into_iter().map(|x| x.expect("injective on a finite set")).collect();
    Ok(Endomorphism::Table(table.into()))
}
