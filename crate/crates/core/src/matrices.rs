//! Dense matrices over a [`Ring`], and exhaustive row spans and annihilators.
//!
//! No row reduction is attempted: over a general finite ring, spans and annihilators are
//! computed by enumerating every coefficient vector, within an explicit bound.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::finring::{Elem, Ring};

/// Default cap on the number of vectors an enumeration may visit.
pub const DEFAULT_BOUND: u64 = 1 << 24;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RingMatrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    entries: Vec<Elem>,
}

impl RingMatrix {
    pub fn new(ring: &Ring, rows: usize, cols: usize, entries: Vec<Elem>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::LengthMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        if let Some(bad) = entries.iter().find(|e| !ring.contains(**e)) {
            return Err(Error::NotInRing {
                index: bad.index(),
                size: ring.size(),
            });
        }
        Ok(RingMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(ring: &Ring, rows: usize, cols: usize) -> Self {
        RingMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries: alloc::vec![Elem::ZERO; rows * cols],
        }
    }

    pub fn identity(ring: &Ring, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.entries[i * n + i] = ring.one();
        }
        m
    }

    /// Builds a matrix from rows of equal length `cols`.
    pub fn from_rows(ring: &Ring, cols: usize, rows: &[Vec<Elem>]) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::LengthMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            entries.extend_from_slice(row);
        }
        Self::new(ring, rows.len(), cols, entries)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Elem) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> impl Iterator<Item = &[Elem]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j));
            }
        }
        RingMatrix {
            ring: self.ring.clone(),
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    /// The submatrix made of columns `start..`.
    pub fn columns_from(&self, start: usize) -> Self {
        let start = start.min(self.cols);
        let cols = self.cols - start;
        let mut entries = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            entries.extend_from_slice(&self.row(i)[start..]);
        }
        RingMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols,
            entries,
        }
    }

    pub fn mul(&self, other: &RingMatrix) -> Result<Self> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch {
                left: self.shape(),
                right: other.shape(),
            });
        }
        let ring = &self.ring;
        let mut out = Self::zeros(ring, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.entries[idx] = ring.add(out.entries[idx], ring.mul(a, other.get(l, j)));
                }
            }
        }
        Ok(out)
    }

    /// The row vector `x · M`.
    pub fn vec_mul(&self, x: &[Elem]) -> Result<Vec<Elem>> {
        if x.len() != self.rows {
            return Err(Error::LengthMismatch {
                expected: self.rows,
                found: x.len(),
            });
        }
        let ring = &self.ring;
        let mut out = alloc::vec![Elem::ZERO; self.cols];
        for (i, &a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (o, &m) in out.iter_mut().zip(self.row(i)) {
                *o = ring.add(*o, ring.mul(a, m));
            }
        }
        Ok(out)
    }

    /// One line per row, entries in element text form separated by single spaces.
    pub fn format(&self) -> String {
        let mut out = String::new();
        for i in 0..self.rows {
            let parts: Vec<String> = self.row(i).iter().map(|&e| self.ring.format(e)).collect();
            out.push_str(&parts.join(" "));
            out.push('\n');
        }
        out
    }

    /// Inverse of [`RingMatrix::format`]; blank lines are ignored.
    pub fn parse(ring: &Ring, text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            let row = line
                .split_whitespace()
                .map(|t| ring.parse(t))
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_rows(ring, cols, &rows)
    }
}

/// `Σ x_i y_i`.
pub fn inner_product(ring: &Ring, x: &[Elem], y: &[Elem]) -> Result<Elem> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            expected: x.len(),
            found: y.len(),
        });
    }
    Ok(x
        .iter()
        .zip(y)
        .fold(Elem::ZERO, |acc, (&a, &b)| ring.add(acc, ring.mul(a, b))))
}

/// A set of vectors in `A^n`, kept sorted and deduplicated.
///
/// Vectors are ordered lexicographically by component, each component by its index in
/// the ring's enumeration (the order of [`Ring::elements`]).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VectorSet {
    ring: Ring,
    n: usize,
    keys: Vec<u64>,
}

impl VectorSet {
    fn check_width(ring: &Ring, n: usize) -> Result<()> {
        let total = (ring.size() as u128).checked_pow(n as u32);
        match total {
            Some(t) if t <= u64::MAX as u128 => Ok(()),
            _ => Err(Error::BoundExceeded {
                needed: total.unwrap_or(u128::MAX),
                bound: u64::MAX,
            }),
        }
    }

    pub fn from_vectors<'a>(
        ring: &Ring,
        n: usize,
        vectors: impl IntoIterator<Item = &'a [Elem]>,
    ) -> Result<Self> {
        Self::check_width(ring, n)?;
        let mut keys = Vec::new();
        for v in vectors {
            if v.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    found: v.len(),
                });
            }
            keys.push(encode(ring, v));
        }
        Ok(Self::from_keys(ring, n, keys))
    }

    fn from_keys(ring: &Ring, n: usize, mut keys: Vec<u64>) -> Self {
        keys.sort_unstable();
        keys.dedup();
        VectorSet {
            ring: ring.clone(),
            n,
            keys,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Length of each vector.
    pub fn width(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        v.len() == self.n && self.keys.binary_search(&encode(&self.ring, v)).is_ok()
    }

    pub fn is_subset(&self, other: &VectorSet) -> bool {
        self.n == other.n && self.keys.iter().all(|k| other.keys.binary_search(k).is_ok())
    }

    pub fn iter(&self) -> impl Iterator<Item = Vec<Elem>> + '_ {
        self.keys.iter().map(move |&k| decode(&self.ring, self.n, k))
    }

    pub fn to_vectors(&self) -> Vec<Vec<Elem>> {
        self.iter().collect()
    }
}

fn encode(ring: &Ring, v: &[Elem]) -> u64 {
    let q = ring.size() as u64;
    v.iter().fold(0, |acc, e| acc * q + e.index() as u64)
}

fn decode(ring: &Ring, n: usize, mut key: u64) -> Vec<Elem> {
    let q = ring.size() as u64;
    let mut v = alloc::vec![Elem::ZERO; n];
    for slot in v.iter_mut().rev() {
        *slot = Elem((key % q) as u32);
        key /= q;
    }
    v
}

fn check_bound(ring: &Ring, count: usize, bound: u64) -> Result<()> {
    let needed = (ring.size() as u128).saturating_pow(count as u32);
    if needed > bound as u128 {
        Err(Error::BoundExceeded { needed, bound })
    } else {
        Ok(())
    }
}

/// Calls `visit(x, x·M)` for every `x` in `A^rows`, in index order of `x`.
///
/// Partial sums are kept per depth, so each step costs one vector addition.
pub(crate) fn for_each_combination(m: &RingMatrix, mut visit: impl FnMut(&[Elem], &[Elem])) {
    let ring = &m.ring;
    let (rows, w) = m.shape();
    let q = ring.size() as usize;
    // scaled[(i * q + a) * w ..] = a · row i
    let mut scaled = Vec::with_capacity(rows * q * w);
    for i in 0..rows {
        for a in ring.elements() {
            scaled.extend(m.row(i).iter().map(|&e| ring.mul(a, e)));
        }
    }
    let mut coeffs = alloc::vec![Elem::ZERO; rows];
    let mut partial = alloc::vec![Elem::ZERO; (rows + 1) * w];

    #[allow(clippy::too_many_arguments)]
    fn descend(
        level: usize,
        ring: &Ring,
        q: usize,
        w: usize,
        scaled: &[Elem],
        coeffs: &mut [Elem],
        partial: &mut [Elem],
        visit: &mut dyn FnMut(&[Elem], &[Elem]),
    ) {
        let rows = coeffs.len();
        if level == rows {
            visit(coeffs, &partial[rows * w..]);
            return;
        }
        for a in 0..q {
            coeffs[level] = Elem(a as u32);
            let (head, tail) = partial.split_at_mut((level + 1) * w);
            let base = &head[level * w..];
            let add = &scaled[(level * q + a) * w..(level * q + a + 1) * w];
            for j in 0..w {
                tail[j] = ring.add(base[j], add[j]);
            }
            descend(level + 1, ring, q, w, scaled, coeffs, partial, visit);
        }
    }

    descend(0, ring, q, w, &scaled, &mut coeffs, &mut partial, &mut visit);
}

/// `{ x ∈ A^n : x H = 0 }` with `n` the number of rows of `H`.
pub fn left_annihilator(h: &RingMatrix, bound: u64) -> Result<VectorSet> {
    let ring = h.ring();
    check_bound(ring, h.rows(), bound)?;
    VectorSet::check_width(ring, h.rows())?;
    let mut keys = Vec::new();
    for_each_combination(h, |x, xh| {
        if xh.iter().all(|e| e.is_zero()) {
            keys.push(encode(ring, x));
        }
    });
    Ok(VectorSet::from_keys(ring, h.rows(), keys))
}

/// `{ x G : x ∈ A^rows }`.
pub fn row_module(g: &RingMatrix, bound: u64) -> Result<VectorSet> {
    let ring = g.ring();
    check_bound(ring, g.rows(), bound)?;
    VectorSet::check_width(ring, g.cols())?;
    let mut keys = Vec::new();
    for_each_combination(g, |_, xg| keys.push(encode(ring, xg)));
    Ok(VectorSet::from_keys(ring, g.cols(), keys))
}
