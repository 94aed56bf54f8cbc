use std::fmt;
use std::sync::Arc;

use crate::error::{structural, Result};
use crate::validate::{ValidationReport, Violation};

/// A finite monoid given by its multiplication table.
///
/// Elements are the indices `0..size`. Cloning is cheap; the table is shared.
#[derive(Clone)]
pub struct FiniteMonoid {
    inner: Arc<MonoidData>,
}

#[derive(PartialEq, Eq, Hash)]
struct MonoidData {
    size: usize,
    mul: Vec<usize>,
    identity: usize,
    zero: Option<usize>,
    left_zeros: Vec<usize>,
}

impl FiniteMonoid {
    /// Build from a square table, checking only dimensions and index ranges.
    ///
    /// The result may violate the monoid laws; see [`FiniteMonoid::validate`].
    pub fn from_parts(mul: Vec<Vec<usize>>, identity: usize, zero: Option<usize>) -> Result<Self> {
        let size = mul.len();
        if size == 0 {
            return Err(structural("mul", "a monoid needs at least one element"));
        }
        let mut flat = Vec::with_capacity(size * size);
        for (i, row) in mul.iter().enumerate() {
            if row.len() != size {
                return Err(structural(
                    format!("mul[{i}]"),
                    format!("row has length {}, expected {size}", row.len()),
                ));
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= size {
                    return Err(structural(
                        format!("mul[{i}][{j}]"),
                        format!("index {v} out of range 0..{size}"),
                    ));
                }
            }
            flat.extend_from_slice(row);
        }
        if identity >= size {
            return Err(structural("identity", format!("index {identity} out of range 0..{size}")));
        }
        if let Some(z) = zero {
            if z >= size {
                return Err(structural("zero", format!("index {z} out of range 0..{size}")));
            }
        }
        let left_zeros = (0..size)
            .filter(|&z| (0..size).all(|s| flat[z * size + s] == z))
            .collect();
        Ok(FiniteMonoid {
            inner: Arc::new(MonoidData {
                size,
                mul: flat,
                identity,
                zero,
                left_zeros,
            }),
        })
    }

    /// Build a validated monoid. A two-sided zero is detected automatically.
    pub fn new(mul: Vec<Vec<usize>>, identity: usize) -> Result<Self> {
        let m = Self::from_parts(mul, identity, None)?;
        m.validate().into_result()?;
        match m.detect_zero() {
            Some(z) => Self::from_parts(m.table_rows(), identity, Some(z)),
            None => Ok(m),
        }
    }

    pub fn size(&self) -> usize {
        self.inner.size
    }

    pub fn identity(&self) -> usize {
        self.inner.identity
    }

    /// The declared two-sided zero.
    pub fn zero(&self) -> Option<usize> {
        self.inner.zero
    }

    /// Elements `z` with `z·s = z` for all `s`.
    pub fn left_zeros(&self) -> &[usize] {
        &self.inner.left_zeros
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.inner.mul[a * self.inner.size + b]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.inner.size
    }

    /// Elements other than the identity.
    pub fn non_identity(&self) -> impl Iterator<Item = usize> + '_ {
        let id = self.identity();
        self.elements().filter(move |&s| s != id)
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.inner.mul.chunks(self.inner.size).map(<[usize]>::to_vec).collect()
    }

    /// The unique two-sided zero of the table, if any.
    pub fn detect_zero(&self) -> Option<usize> {
        self.elements()
            .find(|&z| self.elements().all(|a| self.mul(z, a) == z && self.mul(a, z) == z))
    }

    pub fn idempotents(&self) -> Vec<usize> {
        self.elements().filter(|&e| self.mul(e, e) == e).collect()
    }

    /// Every violated monoid law.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let id = self.identity();
        for a in self.elements() {
            if self.mul(id, a) != a {
                report.push(Violation::Identity { left: id, right: a });
            }
            if self.mul(a, id) != a {
                report.push(Violation::Identity { left: a, right: id });
            }
        }
        for a in self.elements() {
            for b in self.elements() {
                for c in self.elements() {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        report.push(Violation::Associativity { a, b, c });
                    }
                }
            }
        }
        if let Some(z) = self.zero() {
            for a in self.elements() {
                if self.mul(z, a) != z || self.mul(a, z) != z {
                    report.push(Violation::Zero { zero: z, element: a });
                }
            }
        }
        report
    }

    /// The one-element monoid.
    pub fn trivial() -> Self {
        Self::new(vec![vec![0]], 0).expect("trivial monoid")
    }

    /// `{1, z}` with `z·z = z`; element 0 is the identity, 1 is the zero.
    pub fn two_element_zero() -> Self {
        Self::new(vec![vec![0, 1], vec![1, 1]], 0).expect("zero monoid")
    }

    /// The cyclic group of order `n`.
    pub fn cyclic_group(n: usize) -> Self {
        let mul = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::new(mul, 0).expect("cyclic group")
    }

    /// All monoids with at most `max_size` elements, up to isomorphism.
    ///
    /// Brute force over tables; intended for `max_size <= 3`.
    pub fn enumerate_up_to(max_size: usize) -> Vec<FiniteMonoid> {
        let mut out = Vec::new();
        for n in 1..=max_size {
            let mut seen = std::collections::HashSet::new();
            let free: Vec<(usize, usize)> =
                (1..n).flat_map(|a| (1..n).map(move |b| (a, b))).collect();
            let total = n.pow(free.len() as u32);
            for code in 0..total {
                let mut mul = vec![vec![0; n]; n];
                for i in 0..n {
                    mul[0][i] = i;
                    mul[i][0] = i;
                }
                let mut c = code;
                for &(a, b) in &free {
                    mul[a][b] = c % n;
                    c /= n;
                }
                let Ok(m) = Self::new(mul, 0) else { continue };
                let key = crate::canon::monoid_key(&m);
                if seen.insert(key) {
                    out.push(m);
                }
            }
        }
        out
    }
}

impl PartialEq for FiniteMonoid {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner == other.inner
    }
}

impl Eq for FiniteMonoid {}

impl std::hash::Hash for FiniteMonoid {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.inner.hash(state);
    }
}

impl fmt::Debug for FiniteMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteMonoid")
            .field("size", &self.size())
            .field("identity", &self.identity())
            .field("mul", &self.table_rows())
            .finish()
    }
}
