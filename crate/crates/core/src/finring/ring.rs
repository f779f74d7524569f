use alloc::boxed::Box;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Largest ring this crate will construct. Everything downstream enumerates elements.
pub const MAX_RING_SIZE: u64 = 1 << 20;

const CAYLEY_TABLE_LIMIT: u32 = 256;
const INVERSE_TABLE_LIMIT: u32 = 1024;
const NO_INVERSE: u32 = u32::MAX;

/// An element of a [`Ring`], stored as its index in the ring's canonical enumeration.
///
/// The index is the only representation, so equality is representation equality.
/// Index order is lexicographic on the component tuple (first component most significant),
/// and index 0 is always zero.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Elem(pub(crate) u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);

    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Description of a ring to build with [`Ring::from_spec`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingSpec {
    IntegersMod(u64),
    /// `GF(p^degree)`. Without an explicit modulus the first monic irreducible
    /// polynomial in enumeration order is used.
    Galois {
        p: u64,
        degree: u32,
        modulus: Option<Vec<u64>>,
    },
    /// `R x R`.
    Product(Box<RingSpec>),
    /// `D(R) = {(a,b)}` with `(a,b)(c,d) = (ac, ad+bc)`. This is the ring of 2x2
    /// upper-triangular matrices `[[a, b], [0, a]]` under `[[a, b], [0, a]] -> (a, b)`.
    DualNumbers(Box<RingSpec>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Kind {
    Zmod { m: u32 },
    Galois { p: u32, degree: u32, modulus: Vec<u32> },
    Product(Ring),
    Dual(Ring),
}

struct Inner {
    kind: Kind,
    size: u32,
    one: Elem,
    add_table: Option<Vec<u32>>,
    mul_table: Option<Vec<u32>>,
    inverses: Option<Vec<u32>>,
}

/// A finite commutative ring with identity.
///
/// Cloning is cheap; the arithmetic tables are shared.
#[derive(Clone)]
pub struct Ring(Arc<Inner>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.kind == other.0.kind
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring({self})")
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.kind {
            Kind::Zmod { m } => write!(f, "Z_{m}"),
            Kind::Galois { p, degree, .. } => write!(f, "GF({p}^{degree})"),
            Kind::Product(r) => write!(f, "{r} x {r}"),
            Kind::Dual(r) => write!(f, "D({r})"),
        }
    }
}

/// Operation selector for [`Ring::apply`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Remainder of `a` modulo the monic `m` over `F_p`, all low-degree-first.
fn poly_rem_mod_p(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r: Vec<u64> = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let t = r.pop().unwrap_or(0);
        if t != 0 {
            let base = r.len() - dm;
            for (j, &mj) in m[..dm].iter().enumerate() {
                r[base + j] = (r[base + j] + (p - t) * mj) % p;
            }
        }
    }
    while r.last() == Some(&0) {
        r.pop();
    }
    r
}

fn is_irreducible_mod_p(m: &[u64], p: u64) -> bool {
    let degree = m.len() - 1;
    for d in 1..=degree / 2 {
        let count = p.pow(d as u32);
        for idx in 0..count {
            let mut cand = Vec::with_capacity(d + 1);
            let mut rest = idx;
            for _ in 0..d {
                cand.push(rest % p);
                rest /= p;
            }
            cand.push(1);
            if poly_rem_mod_p(m, &cand, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn first_irreducible(p: u64, degree: u32) -> Vec<u64> {
    let count = p.pow(degree);
    for idx in 0..count {
        let mut cand = Vec::with_capacity(degree as usize + 1);
        let mut rest = idx;
        for _ in 0..degree {
            cand.push(rest % p);
            rest /= p;
        }
        cand.push(1);
        if is_irreducible_mod_p(&cand, p) {
            return cand;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

impl Ring {
    pub fn from_spec(spec: &RingSpec) -> Result<Ring> {
        match spec {
            RingSpec::IntegersMod(m) => Ring::integers_mod(*m),
            RingSpec::Galois { p, degree, modulus } => match modulus {
                Some(coeffs) => Ring::galois_with_modulus(*p, coeffs),
                None => Ring::galois(*p, *degree),
            },
            RingSpec::Product(inner) => Ring::product(Ring::from_spec(inner)?),
            RingSpec::DualNumbers(inner) => Ring::dual_numbers(Ring::from_spec(inner)?),
        }
    }

    pub fn integers_mod(m: u64) -> Result<Ring> {
        if m < 2 {
            return Err(Error::InvalidModulus(m));
        }
        check_size(m as u128)?;
        Ok(Ring::build(Kind::Zmod { m: m as u32 }, m as u32))
    }

    pub fn galois(p: u64, degree: u32) -> Result<Ring> {
        if !is_prime(p) {
            return Err(Error::InvalidModulus(p));
        }
        if degree == 0 {
            return Err(Error::ReducibleModulus);
        }
        check_size((p as u128).saturating_pow(degree))?;
        let modulus = first_irreducible(p, degree);
        Ring::galois_with_modulus(p, &modulus)
    }

    /// `GF(p^k)` as `F_p[t]/(m(t))`; `modulus` lists the coefficients of `m` low-degree-first.
    pub fn galois_with_modulus(p: u64, modulus: &[u64]) -> Result<Ring> {
        if !is_prime(p) {
            return Err(Error::InvalidModulus(p));
        }
        let m: Vec<u64> = modulus.iter().map(|c| c % p).collect();
        if m.len() < 2 || m.last() != Some(&1) {
            return Err(Error::ReducibleModulus);
        }
        let degree = (m.len() - 1) as u32;
        check_size((p as u128).saturating_pow(degree))?;
        if !is_irreducible_mod_p(&m, p) {
            return Err(Error::ReducibleModulus);
        }
        let size = (p as u32).pow(degree);
        let kind = Kind::Galois {
            p: p as u32,
            degree,
            modulus: m.iter().map(|&c| c as u32).collect(),
        };
        Ok(Ring::build(kind, size))
    }

    pub fn product(inner: Ring) -> Result<Ring> {
        let s = inner.size() as u128;
        check_size(s * s)?;
        let size = (s * s) as u32;
        Ok(Ring::build(Kind::Product(inner), size))
    }

    pub fn dual_numbers(inner: Ring) -> Result<Ring> {
        let s = inner.size() as u128;
        check_size(s * s)?;
        let size = (s * s) as u32;
        Ok(Ring::build(Kind::Dual(inner), size))
    }

    fn build(kind: Kind, size: u32) -> Ring {
        let mut inner = Inner {
            kind,
            size,
            one: Elem::ZERO,
            add_table: None,
            mul_table: None,
            inverses: None,
        };
        inner.one = raw_one(&inner.kind);
        let mut ring = Ring(Arc::new(inner));
        if size <= CAYLEY_TABLE_LIMIT || size <= INVERSE_TABLE_LIMIT {
            let mut add_table = None;
            let mut mul_table = None;
            if size <= CAYLEY_TABLE_LIMIT {
                let n = size as usize;
                let mut add = Vec::with_capacity(n * n);
                let mut mul = Vec::with_capacity(n * n);
                for a in 0..size {
                    for b in 0..size {
                        add.push(ring.raw_add(Elem(a), Elem(b)).0);
                        mul.push(ring.raw_mul(Elem(a), Elem(b)).0);
                    }
                }
                add_table = Some(add);
                mul_table = Some(mul);
            }
            {
                let inner = Arc::get_mut(&mut ring.0).expect("freshly built ring is unshared");
                inner.add_table = add_table;
                inner.mul_table = mul_table;
            }
            let mut inverses = alloc::vec![NO_INVERSE; size as usize];
            let one = ring.one();
            for a in 0..size {
                if inverses[a as usize] != NO_INVERSE {
                    continue;
                }
                for b in 0..size {
                    if ring.mul(Elem(a), Elem(b)) == one {
                        inverses[a as usize] = b;
                        inverses[b as usize] = a;
                        break;
                    }
                }
            }
            let inner = Arc::get_mut(&mut ring.0).expect("freshly built ring is unshared");
            inner.inverses = Some(inverses);
        }
        ring
    }

    pub(crate) fn kind(&self) -> &Kind {
        &self.0.kind
    }

    pub fn size(&self) -> u32 {
        self.0.size
    }

    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    pub fn one(&self) -> Elem {
        self.0.one
    }

    /// Validated element constructor.
    pub fn element(&self, index: u32) -> Result<Elem> {
        if index < self.size() {
            Ok(Elem(index))
        } else {
            Err(Error::NotInRing {
                index,
                size: self.size(),
            })
        }
    }

    pub fn contains(&self, e: Elem) -> bool {
        e.0 < self.size()
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.size()).map(Elem)
    }

    /// The inner ring of a product or dual-number ring.
    pub fn inner(&self) -> Option<&Ring> {
        match &self.0.kind {
            Kind::Product(r) | Kind::Dual(r) => Some(r),
            _ => None,
        }
    }

    pub fn is_product(&self) -> bool {
        matches!(self.0.kind, Kind::Product(_))
    }

    pub fn is_dual_numbers(&self) -> bool {
        matches!(self.0.kind, Kind::Dual(_))
    }

    /// `(p, degree)` for a Galois field.
    pub fn galois_parameters(&self) -> Option<(u32, u32)> {
        match &self.0.kind {
            Kind::Galois { p, degree, .. } => Some((*p, *degree)),
            _ => None,
        }
    }

    /// Builds `(x, y)` in a product or dual-number ring.
    pub fn pair(&self, x: Elem, y: Elem) -> Elem {
        let s = self.inner().expect("pair() needs a product or dual-number ring").size();
        Elem(x.0 * s + y.0)
    }

    pub fn components(&self, e: Elem) -> (Elem, Elem) {
        let s = self.inner().expect("components() needs a product or dual-number ring").size();
        (Elem(e.0 / s), Elem(e.0 % s))
    }

    /// Coefficients of a Galois field element, low-degree-first.
    pub fn galois_coefficients(&self, e: Elem) -> Vec<u32> {
        match &self.0.kind {
            Kind::Galois { p, degree, .. } => gf_digits(e.0, *p, *degree)[..*degree as usize].to_vec(),
            _ => panic!("galois_coefficients() needs a Galois field"),
        }
    }

    pub fn galois_from_coefficients(&self, coeffs: &[u32]) -> Elem {
        match &self.0.kind {
            Kind::Galois { p, degree, .. } => {
                let mut digits = [0u32; MAX_GF_DEGREE];
                for (i, c) in coeffs.iter().enumerate().take(*degree as usize) {
                    digits[i] = c % p;
                }
                Elem(gf_encode(&digits, *p, *degree))
            }
            _ => panic!("galois_from_coefficients() needs a Galois field"),
        }
    }

    /// The image of the integer `n` under the unital map `Z -> A`.
    pub fn from_int(&self, n: i64) -> Elem {
        match &self.0.kind {
            Kind::Zmod { m } => Elem(n.rem_euclid(*m as i64) as u32),
            Kind::Galois { p, degree, .. } => {
                let mut digits = [0u32; MAX_GF_DEGREE];
                digits[0] = n.rem_euclid(*p as i64) as u32;
                Elem(gf_encode(&digits, *p, *degree))
            }
            Kind::Product(r) => {
                let x = r.from_int(n);
                self.pair(x, x)
            }
            Kind::Dual(r) => self.pair(r.from_int(n), Elem::ZERO),
        }
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        debug_assert!(self.contains(a) && self.contains(b));
        match &self.0.add_table {
            Some(t) => Elem(t[(a.0 * self.0.size + b.0) as usize]),
            None => self.raw_add(a, b),
        }
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        debug_assert!(self.contains(a) && self.contains(b));
        match &self.0.mul_table {
            Some(t) => Elem(t[(a.0 * self.0.size + b.0) as usize]),
            None => self.raw_mul(a, b),
        }
    }

    pub fn neg(&self, a: Elem) -> Elem {
        match &self.0.kind {
            Kind::Zmod { m } => Elem(if a.0 == 0 { 0 } else { m - a.0 }),
            Kind::Galois { p, degree, .. } => {
                let mut d = gf_digits(a.0, *p, *degree);
                for c in d.iter_mut().take(*degree as usize) {
                    *c = (p - *c) % p;
                }
                Elem(gf_encode(&d, *p, *degree))
            }
            Kind::Product(r) | Kind::Dual(r) => {
                let (x, y) = self.components(a);
                self.pair(r.neg(x), r.neg(y))
            }
        }
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Checked arithmetic on possibly foreign elements.
    pub fn apply(&self, op: ArithOp, a: Elem, b: Elem) -> Result<Elem> {
        if !self.contains(a) || !self.contains(b) {
            return Err(Error::RingMismatch);
        }
        Ok(match op {
            ArithOp::Add => self.add(a, b),
            ArithOp::Sub => self.sub(a, b),
            ArithOp::Mul => self.mul(a, b),
        })
    }

    /// Multiplicative inverse by exhaustive search, or `None` for non-units.
    pub fn unit_inverse(&self, a: Elem) -> Option<Elem> {
        if let Some(table) = &self.0.inverses {
            let b = table[a.0 as usize];
            return (b != NO_INVERSE).then_some(Elem(b));
        }
        let one = self.one();
        self.elements().find(|&b| self.mul(a, b) == one)
    }

    pub fn is_unit(&self, a: Elem) -> bool {
        self.unit_inverse(a).is_some()
    }

    pub fn units(&self) -> impl Iterator<Item = Elem> + '_ {
        self.elements().filter(move |&e| self.is_unit(e))
    }

    fn raw_add(&self, a: Elem, b: Elem) -> Elem {
        match &self.0.kind {
            Kind::Zmod { m } => Elem(((a.0 as u64 + b.0 as u64) % *m as u64) as u32),
            Kind::Galois { p, degree, .. } => {
                let x = gf_digits(a.0, *p, *degree);
                let y = gf_digits(b.0, *p, *degree);
                let mut z = [0u32; MAX_GF_DEGREE];
                for i in 0..*degree as usize {
                    z[i] = (x[i] + y[i]) % p;
                }
                Elem(gf_encode(&z, *p, *degree))
            }
            Kind::Product(r) | Kind::Dual(r) => {
                let (x1, y1) = self.components(a);
                let (x2, y2) = self.components(b);
                self.pair(r.add(x1, x2), r.add(y1, y2))
            }
        }
    }

    fn raw_mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.0.kind {
            Kind::Zmod { m } => Elem(((a.0 as u64 * b.0 as u64) % *m as u64) as u32),
            Kind::Galois {
                p,
                degree,
                modulus,
            } => {
                let k = *degree as usize;
                let p64 = *p as u64;
                let x = gf_digits(a.0, *p, *degree);
                let y = gf_digits(b.0, *p, *degree);
                let mut prod = [0u64; 2 * MAX_GF_DEGREE];
                for i in 0..k {
                    if x[i] == 0 {
                        continue;
                    }
                    for j in 0..k {
                        prod[i + j] = (prod[i + j] + x[i] as u64 * y[j] as u64) % p64;
                    }
                }
                for d in (k..2 * k - 1).rev() {
                    let t = prod[d];
                    if t == 0 {
                        continue;
                    }
                    prod[d] = 0;
                    for (j, &c) in modulus.iter().enumerate().take(k) {
                        let idx = d - k + j;
                        prod[idx] = (prod[idx] + (p64 - t) * c as u64) % p64;
                    }
                }
                let mut z = [0u32; MAX_GF_DEGREE];
                for i in 0..k {
                    z[i] = prod[i] as u32;
                }
                Elem(gf_encode(&z, *p, *degree))
            }
            Kind::Product(r) => {
                let (x1, y1) = self.components(a);
                let (x2, y2) = self.components(b);
                self.pair(r.mul(x1, x2), r.mul(y1, y2))
            }
            Kind::Dual(r) => {
                let (a1, b1) = self.components(a);
                let (a2, b2) = self.components(b);
                let real = r.mul(a1, a2);
                let eps = r.add(r.mul(a1, b2), r.mul(b1, a2));
                self.pair(real, eps)
            }
        }
    }
}

pub(crate) const MAX_GF_DEGREE: usize = 20;

/// Low-degree-first coefficients. The constant coefficient is the most significant digit
/// of the index so that index order is lexicographic on the coefficient tuple.
pub(crate) fn gf_digits(mut idx: u32, p: u32, degree: u32) -> [u32; MAX_GF_DEGREE] {
    let mut d = [0u32; MAX_GF_DEGREE];
    for i in (0..degree as usize).rev() {
        d[i] = idx % p;
        idx /= p;
    }
    d
}

pub(crate) fn gf_encode(d: &[u32; MAX_GF_DEGREE], p: u32, degree: u32) -> u32 {
    d[..degree as usize].iter().fold(0, |acc, &c| acc * p + c)
}

fn raw_one(kind: &Kind) -> Elem {
    match kind {
        Kind::Zmod { .. } => Elem(1),
        Kind::Galois { p, degree, .. } => {
            let mut d = [0u32; MAX_GF_DEGREE];
            d[0] = 1;
            Elem(gf_encode(&d, *p, *degree))
        }
        Kind::Product(r) => {
            let one = r.one().0;
            Elem(one * r.size() + one)
        }
        Kind::Dual(r) => Elem(r.one().0 * r.size()),
    }
}

fn check_size(size: u128) -> Result<()> {
    if size > MAX_RING_SIZE as u128 {
        Err(Error::RingTooLarge {
            size,
            max: MAX_RING_SIZE,
        })
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(m: u64) -> Ring {
        Ring::integers_mod(m).unwrap()
    }

    #[test]
    fn construct_sizes() {
        assert_eq!(z(6).size(), 6);
        let gf3 = Ring::galois(3, 1).unwrap();
        assert_eq!(Ring::product(gf3).unwrap().size(), 9);
        assert_eq!(Ring::dual_numbers(z(3)).unwrap().size(), 9);
        assert_eq!(Ring::galois(2, 2).unwrap().size(), 4);
        assert_eq!(Ring::galois(3, 2).unwrap().size(), 9);
    }

    #[test]
    fn construct_errors() {
        assert_eq!(Ring::integers_mod(1).unwrap_err(), Error::InvalidModulus(1));
        assert_eq!(Ring::galois(4, 2).unwrap_err(), Error::InvalidModulus(4));
        // t^2 + 1 = (t + 1)^2 over F_2
        assert_eq!(
            Ring::galois_with_modulus(2, &[1, 0, 1]).unwrap_err(),
            Error::ReducibleModulus
        );
        assert!(matches!(
            Ring::integers_mod(1 << 21),
            Err(Error::RingTooLarge { .. })
        ));
    }

    #[test]
    fn zmod_arithmetic() {
        let r = z(6);
        assert_eq!(r.add(Elem(2), Elem(5)), Elem(1));
        assert_eq!(r.unit_inverse(Elem(5)), Some(Elem(5)));
        assert_eq!(r.unit_inverse(Elem(2)), None);
        assert_eq!(r.apply(ArithOp::Sub, Elem(1), Elem(4)).unwrap(), Elem(3));
        assert_eq!(r.apply(ArithOp::Add, Elem(1), Elem(9)), Err(Error::RingMismatch));
    }

    #[test]
    fn dual_number_product() {
        let d = Ring::dual_numbers(z(3)).unwrap();
        let beta = d.pair(Elem(1), Elem(1));
        assert_eq!(d.mul(beta, beta), d.pair(Elem(1), Elem(2)));
        assert_eq!(d.one(), d.pair(Elem(1), Elem(0)));
    }

    #[test]
    fn product_ring_units() {
        let a = Ring::product(Ring::galois(3, 1).unwrap()).unwrap();
        let two = a.galois_pair(2, 2);
        assert_eq!(a.mul(two, two), a.one());
        assert_eq!(a.unit_inverse(two), Some(two));
        assert_eq!(a.units().count(), 4);
    }

    #[test]
    fn gf4_is_a_field() {
        let f = Ring::galois(2, 2).unwrap();
        for x in f.elements().skip(1) {
            let inv = f.unit_inverse(x).expect("nonzero elements are units");
            assert_eq!(f.mul(x, inv), f.one());
        }
    }

    #[test]
    fn large_ring_without_tables() {
        let r = Ring::galois(2, 11).unwrap();
        let x = r.galois_from_coefficients(&[0, 1]);
        assert_eq!(r.pow(x, (1 << 11) - 1), r.one());
        let inv = r.unit_inverse(x).unwrap();
        assert_eq!(r.mul(x, inv), r.one());
    }

    impl Ring {
        fn galois_pair(&self, x: u32, y: u32) -> Elem {
            let inner = self.inner().unwrap();
            let ex = inner.galois_from_coefficients(&[x]);
            let ey = inner.galois_from_coefficients(&[y]);
            self.pair(ex, ey)
        }
    }
}
