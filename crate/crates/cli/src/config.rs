//! Job configuration: a JSON document naming the ring, σ, δ and the polynomials.
//!
//! ```json
//! {
//!   "ring": {"kind": "dual", "inner": {"kind": "zmod", "m": 3}},
//!   "sigma": {"kind": "identity"},
//!   "delta": {"kind": "dual_component", "factor": "1"},
//!   "f": ["0", "2", "0", "1"],
//!   "g": ["(2,2)", "1"],
//!   "bounds": {"enumeration": 16777216},
//!   "seed": 0
//! }
//! ```
//!
//! Elements are strings in the ring's text form; polynomials list coefficients from
//! degree 0 up.

use serde::Deserialize;
use skewcode_core::finring::{Derivation, DerivationKind, Elem, Endomorphism, Ring, RingSpec, VerifyPolicy};
use skewcode_core::matrices::DEFAULT_BOUND;
use skewcode_core::{Error, SkewContext, SkewPoly};

use crate::CliError;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobConfig {
    pub ring: RingConfig,
    #[serde(default)]
    pub sigma: SigmaConfig,
    #[serde(default)]
    pub delta: DeltaConfig,
    pub f: Vec<String>,
    pub g: Vec<String>,
    /// Left cofactor with `f = g h`; found automatically when absent.
    #[serde(default)]
    pub h: Option<Vec<String>>,
    #[serde(default)]
    pub bounds: Bounds,
    #[serde(default)]
    pub seed: u64,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum RingConfig {
    Zmod {
        m: u64,
    },
    Galois {
        p: u64,
        degree: u32,
        #[serde(default)]
        modulus: Option<Vec<u64>>,
    },
    Product {
        inner: Box<RingConfig>,
    },
    Dual {
        inner: Box<RingConfig>,
    },
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum SigmaConfig {
    #[default]
    Identity,
    Frobenius {
        power: u32,
    },
    Swap,
    /// `(a,b) -> (a, c b)` on `D(R)`; `factor` is an element of `R`.
    DualScale {
        factor: String,
    },
    Table {
        table: Vec<String>,
    },
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum DeltaConfig {
    #[default]
    Zero,
    /// `(a,b) -> (0, c b)` on `D(R)`; `factor` is an element of `R`.
    DualComponent {
        factor: String,
    },
    /// `x -> e (x - σ(x))`.
    Inner {
        element: String,
    },
    Table {
        table: Vec<String>,
    },
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Bounds {
    /// Largest number of vectors an exhaustive search may visit.
    #[serde(default = "default_bound")]
    pub enumeration: u64,
}

fn default_bound() -> u64 {
    DEFAULT_BOUND
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            enumeration: DEFAULT_BOUND,
        }
    }
}

impl RingConfig {
    fn spec(&self) -> RingSpec {
        match self {
            RingConfig::Zmod { m } => RingSpec::IntegersMod(*m),
            RingConfig::Galois { p, degree, modulus } => RingSpec::Galois {
                p: *p,
                degree: *degree,
                modulus: modulus.clone(),
            },
            RingConfig::Product { inner } => RingSpec::Product(Box::new(inner.spec())),
            RingConfig::Dual { inner } => RingSpec::DualNumbers(Box::new(inner.spec())),
        }
    }
}

/// A config with every reference resolved.
#[derive(Debug, Clone)]
pub struct Job {
    pub ctx: SkewContext,
    pub f: SkewPoly,
    pub g: SkewPoly,
    pub h: Option<SkewPoly>,
    pub bound: u64,
}

fn inner_ring(ring: &Ring) -> Result<&Ring, Error> {
    ring.inner()
        .ok_or_else(|| Error::UnsupportedKind(format!("componentwise map on {ring}")))
}

fn elements(ring: &Ring, texts: &[String]) -> Result<Vec<Elem>, Error> {
    texts.iter().map(|t| ring.parse(t)).collect()
}

impl JobConfig {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Config(e.to_string()))
    }

    /// Builds the ring, maps and polynomials; `bound` and `seed` override the config.
    pub fn resolve(&self, bound: Option<u64>, seed: Option<u64>) -> Result<Job, Error> {
        let ring = Ring::from_spec(&self.ring.spec())?;
        let sigma = match &self.sigma {
            SigmaConfig::Identity => Endomorphism::Identity,
            SigmaConfig::Frobenius { power } => Endomorphism::Frobenius { power: *power },
            SigmaConfig::Swap => Endomorphism::Swap,
            SigmaConfig::DualScale { factor } => Endomorphism::DualScale {
                factor: inner_ring(&ring)?.parse(factor)?,
            },
            SigmaConfig::Table { table } => Endomorphism::Table(elements(&ring, table)?.into()),
        };
        let kind = match &self.delta {
            DeltaConfig::Zero => DerivationKind::Zero,
            DeltaConfig::DualComponent { factor } => DerivationKind::DualComponent {
                factor: inner_ring(&ring)?.parse(factor)?,
            },
            DeltaConfig::Inner { element } => DerivationKind::Inner {
                element: ring.parse(element)?,
            },
            DeltaConfig::Table { table } => DerivationKind::Table(elements(&ring, table)?.into()),
        };
        let policy = VerifyPolicy::with_seed(seed.unwrap_or(self.seed));
        let delta = Derivation::new(kind, sigma.clone());
        let ctx = SkewContext::with_policy(ring.clone(), sigma, delta, &policy)?;
        let poly = |texts: &[String]| SkewPoly::new(&ctx, elements(&ring, texts)?);
        Ok(Job {
            f: poly(&self.f)?,
            g: poly(&self.g)?,
            h: self.h.as_deref().map(poly).transpose()?,
            bound: bound.unwrap_or(self.bounds.enumeration),
            ctx,
        })
    }
}
