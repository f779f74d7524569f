//! Instance pools and random sampling shared by the integration tests.

#![allow(dead_code)]

use rand::Rng;
use skewcode_core::finring::{Derivation, DerivationKind, Elem, Endomorphism, Ring};
use skewcode_core::skewpoly::{SkewContext, SkewPoly};

/// Rings for the randomized pools, with the largest length used over each.
///
/// Lengths keep `|A|^n` small enough that every monic polynomial of degree `<= n` can be
/// tried as a divisor.
pub fn pool_rings() -> Vec<(Ring, usize)> {
    let z = |m| Ring::integers_mod(m).unwrap();
    let mut out = Vec::new();
    for (m, n) in [(2, 6), (3, 5), (4, 5), (5, 4), (6, 4), (7, 4), (8, 4), (9, 4)] {
        out.push((z(m), n));
    }
    out.push((Ring::galois(2, 2).unwrap(), 5));
    out.push((Ring::galois(3, 2).unwrap(), 4));
    out.push((Ring::product(z(3)).unwrap(), 4));
    out.push((Ring::dual_numbers(z(3)).unwrap(), 4));
    out.push((Ring::dual_numbers(z(4)).unwrap(), 3));
    out
}

fn endomorphisms(ring: &Ring) -> Vec<Endomorphism> {
    let mut out = vec![Endomorphism::Identity];
    if let Some((_, degree)) = ring.galois_parameters() {
        out.extend((1..degree).map(|power| Endomorphism::Frobenius { power }));
    }
    if ring.is_product() {
        out.push(Endomorphism::Swap);
    }
    if let Some(inner) = ring.inner().filter(|_| ring.is_dual_numbers()) {
        out.extend(
            inner
                .elements()
                .filter(|&c| c != inner.one())
                .map(|factor| Endomorphism::DualScale { factor }),
        );
    }
    out
}

fn derivation_kinds(ring: &Ring) -> Vec<DerivationKind> {
    let mut out = vec![DerivationKind::Zero];
    out.extend(ring.elements().skip(1).map(|element| DerivationKind::Inner { element }));
    if let Some(inner) = ring.inner().filter(|_| ring.is_dual_numbers()) {
        out.extend(
            inner
                .elements()
                .skip(1)
                .map(|factor| DerivationKind::DualComponent { factor }),
        );
    }
    out
}

/// Every valid `(σ, δ)` from the built-in kinds, one context per distinct pair of maps.
pub fn contexts(ring: &Ring) -> Vec<SkewContext> {
    let mut seen: Vec<(Vec<Elem>, Vec<Elem>)> = Vec::new();
    let mut out = Vec::new();
    for sigma in endomorphisms(ring) {
        for kind in derivation_kinds(ring) {
            let delta = Derivation::new(kind, sigma.clone());
            let key = (sigma.table(ring), delta.table(ring));
            if seen.contains(&key) {
                continue;
            }
            if let Ok(ctx) = SkewContext::new(ring.clone(), sigma.clone(), delta) {
                seen.push(key);
                out.push(ctx);
            }
        }
    }
    out
}

pub fn random_elem(ring: &Ring, rng: &mut impl Rng) -> Elem {
    ring.element(rng.random_range(0..ring.size())).unwrap()
}

pub fn random_unit(ring: &Ring, rng: &mut impl Rng) -> Elem {
    let units: Vec<Elem> = ring.units().collect();
    units[rng.random_range(0..units.len())]
}

/// Degree exactly `deg`, leading coefficient a unit.
pub fn random_poly(ctx: &SkewContext, deg: usize, rng: &mut impl Rng) -> SkewPoly {
    let ring = ctx.ring();
    let mut coeffs: Vec<Elem> = (0..deg).map(|_| random_elem(ring, rng)).collect();
    coeffs.push(random_unit(ring, rng));
    SkewPoly::new(ctx, coeffs).unwrap()
}

/// Any polynomial of degree at most `deg`, possibly zero.
pub fn random_any(ctx: &SkewContext, deg: usize, rng: &mut impl Rng) -> SkewPoly {
    let ring = ctx.ring();
    let coeffs = (0..=deg).map(|_| random_elem(ring, rng)).collect();
    SkewPoly::new(ctx, coeffs).unwrap()
}

pub fn random_monic(ctx: &SkewContext, deg: usize, rng: &mut impl Rng) -> SkewPoly {
    let ring = ctx.ring();
    let mut coeffs: Vec<Elem> = (0..deg).map(|_| random_elem(ring, rng)).collect();
    coeffs.push(ring.one());
    SkewPoly::new(ctx, coeffs).unwrap()
}

pub fn random_vector(ring: &Ring, n: usize, rng: &mut impl Rng) -> Vec<Elem> {
    (0..n).map(|_| random_elem(ring, rng)).collect()
}

/// Every pool context, built once.
pub fn all_contexts() -> &'static [SkewContext] {
    static ALL: std::sync::LazyLock<Vec<SkewContext>> = std::sync::LazyLock::new(|| {
        pool_rings()
            .into_iter()
            .flat_map(|(ring, _)| contexts(&ring))
            .collect()
    });
    &ALL
}

/// Pool contexts satisfying `keep`, picked by `index` modulo their number.
pub fn pick(index: usize, keep: impl Fn(&SkewContext) -> bool) -> SkewContext {
    let matching: Vec<&SkewContext> = all_contexts().iter().filter(|c| keep(c)).collect();
    matching[index % matching.len()].clone()
}

pub fn rng(seed: u64) -> rand_chacha::ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}
