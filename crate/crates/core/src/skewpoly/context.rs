use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::finring::{
    verify_derivation, verify_endomorphism, Derivation, Elem, Endomorphism, Ring, Verification,
    VerifyPolicy,
};

struct Inner {
    ring: Ring,
    sigma: Endomorphism,
    delta: Derivation,
    sigma_table: Vec<Elem>,
    delta_table: Vec<Elem>,
    /// `σ^0, σ^1, …, σ^(order-1)` when σ is an automorphism.
    sigma_cycle: Option<Vec<Vec<Elem>>>,
    sigma_identity: bool,
    delta_zero: bool,
    checks: (Verification, Verification),
}

/// The data `(A, σ, δ)` of a skew-polynomial ring `A[X; σ, δ]`.
///
/// Construction verifies σ and δ. Cloning is cheap.
#[derive(Clone)]
pub struct SkewContext(Arc<Inner>);

impl core::fmt::Debug for SkewContext {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("SkewContext")
            .field("ring", &self.0.ring)
            .field("sigma", &self.0.sigma)
            .field("delta", &self.0.delta.kind)
            .finish()
    }
}

impl PartialEq for SkewContext {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.ring == other.0.ring
                && self.0.sigma_table == other.0.sigma_table
                && self.0.delta_table == other.0.delta_table)
    }
}

impl Eq for SkewContext {}

impl SkewContext {
    pub fn new(ring: Ring, sigma: Endomorphism, delta: Derivation) -> Result<Self> {
        Self::with_policy(ring, sigma, delta, &VerifyPolicy::default())
    }

    /// `A[X; σ]`, i.e. δ = 0.
    pub fn sigma_only(ring: Ring, sigma: Endomorphism) -> Result<Self> {
        let delta = Derivation::zero(sigma.clone());
        Self::new(ring, sigma, delta)
    }

    /// The commutative polynomial ring `A[X]`.
    pub fn commutative(ring: Ring) -> Self {
        Self::sigma_only(ring, Endomorphism::Identity).expect("identity is always valid")
    }

    pub fn with_policy(
        ring: Ring,
        sigma: Endomorphism,
        delta: Derivation,
        policy: &VerifyPolicy,
    ) -> Result<Self> {
        let s = verify_endomorphism(&ring, &sigma, policy)?;
        if !s.holds {
            return Err(Error::InvalidEndomorphism);
        }
        if !delta.sigma.same_map(&sigma, &ring) {
            return Err(Error::InvalidDerivation);
        }
        let d = verify_derivation(&ring, &delta, policy)?;
        if !d.holds {
            return Err(Error::InvalidDerivation);
        }
        let sigma_table = sigma.table(&ring);
        let delta_table = delta.table(&ring);
        let sigma_identity = sigma_table.iter().enumerate().all(|(i, e)| e.index() as usize == i);
        let delta_zero = delta_table.iter().all(|e| e.is_zero());
        let sigma_cycle = sigma.order(&ring).map(|order| {
            let mut powers = Vec::with_capacity(order as usize);
            let mut current: Vec<Elem> = ring.elements().collect();
            for _ in 0..order {
                let next = current.iter().map(|x| sigma_table[x.index() as usize]).collect();
                powers.push(core::mem::replace(&mut current, next));
            }
            powers
        });
        Ok(SkewContext(Arc::new(Inner {
            ring,
            sigma,
            delta,
            sigma_table,
            delta_table,
            sigma_cycle,
            sigma_identity,
            delta_zero,
            checks: (s, d),
        })))
    }

    pub fn ring(&self) -> &Ring {
        &self.0.ring
    }

    pub fn sigma_map(&self) -> &Endomorphism {
        &self.0.sigma
    }

    pub fn delta_map(&self) -> &Derivation {
        &self.0.delta
    }

    /// Results of the σ and δ checks done at construction.
    pub fn verification(&self) -> (Verification, Verification) {
        self.0.checks
    }

    #[inline]
    pub fn sigma(&self, x: Elem) -> Elem {
        self.0.sigma_table[x.index() as usize]
    }

    #[inline]
    pub fn delta(&self, x: Elem) -> Elem {
        self.0.delta_table[x.index() as usize]
    }

    pub fn is_automorphism(&self) -> bool {
        self.0.sigma_cycle.is_some()
    }

    pub fn sigma_is_identity(&self) -> bool {
        self.0.sigma_identity
    }

    pub fn delta_is_zero(&self) -> bool {
        self.0.delta_zero
    }

    /// Order of σ in the automorphism group, if σ is bijective.
    pub fn sigma_order(&self) -> Option<u64> {
        self.0.sigma_cycle.as_ref().map(|c| c.len() as u64)
    }

    /// `σ^n(x)` for any integer `n`; negative powers need σ to be an automorphism.
    pub fn sigma_pow(&self, x: Elem, n: i64) -> Result<Elem> {
        if self.0.sigma_identity {
            return Ok(x);
        }
        match &self.0.sigma_cycle {
            Some(cycle) => {
                let i = n.rem_euclid(cycle.len() as i64) as usize;
                Ok(cycle[i][x.index() as usize])
            }
            None if n < 0 => Err(Error::NegativePowerWithoutAutomorphism),
            None => {
                let mut y = x;
                for _ in 0..n {
                    y = self.sigma(y);
                }
                Ok(y)
            }
        }
    }

    pub(crate) fn require_zero_delta(&self) -> Result<()> {
        if self.0.delta_zero {
            Ok(())
        } else {
            Err(Error::NonzeroDerivation)
        }
    }

    pub(crate) fn require_automorphism(&self) -> Result<()> {
        if self.is_automorphism() {
            Ok(())
        } else {
            Err(Error::SigmaNotInvertible)
        }
    }

    pub(crate) fn check_same(&self, other: &SkewContext) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }
}
