//! Exact linear algebra over ℚ.
//!
//! Two flavors are provided:
//!
//! * sparse vectors keyed by an arbitrary ordered type, together with an
//!   incrementally maintained reduced echelon [`RowBasis`] — this is what
//!   the representation-theoretic spans use, with monomials as keys;
//! * small dense routines ([`rref`], [`nullspace`], [`solve_affine`]) for
//!   systems whose unknowns are plain coordinates.
//!
//! Everything is exact; pivots are chosen by key order, which makes every
//! reduced form canonical and every computation deterministic.

use crate::rat::Rat;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

// ---------------------------------------------------------------------------
// Sparse vectors over an ordered key type
// ---------------------------------------------------------------------------

/// A sparse vector over ℚ with coordinates indexed by `K`.
///
/// Zero coefficients are never stored, so `terms.is_empty()` iff the
/// vector is zero and structural equality is equality of vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseVec<K: Ord + Clone> {
    pub terms: BTreeMap<K, Rat>,
}

impl<K: Ord + Clone> Default for SparseVec<K> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Ord + Clone> SparseVec<K> {
    pub fn new() -> Self {
        SparseVec {
            terms: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Add `c` to the coefficient at `k`, removing the entry if it cancels.
    pub fn add_term(&mut self, k: K, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(k);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn coeff(&self, k: &K) -> Rat {
        self.terms.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    /// Smallest key with nonzero coefficient (the pivot position).
    pub fn leading(&self) -> Option<(&K, &Rat)> {
        self.terms.iter().next()
    }

    pub fn scale(&mut self, c: &Rat) {
        if c.is_zero() {
            self.terms.clear();
            return;
        }
        for v in self.terms.values_mut() {
            *v *= c;
        }
    }

    /// `self += c · other`.
    pub fn axpy(&mut self, c: &Rat, other: &SparseVec<K>) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), c * v);
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (K, Rat)>>(it: I) -> Self {
        let mut v = Self::new();
        for (k, c) in it {
            v.add_term(k, c);
        }
        v
    }
}

/// An exact reduced row echelon basis of a subspace, maintained
/// incrementally.  Rows are keyed by their pivot (their smallest key);
/// each pivot has coefficient 1 and appears in no other row.
#[derive(Clone, Debug)]
pub struct RowBasis<K: Ord + Clone> {
    rows: BTreeMap<K, SparseVec<K>>,
}

impl<K: Ord + Clone> Default for RowBasis<K> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Ord + Clone> RowBasis<K> {
    pub fn new() -> Self {
        RowBasis {
            rows: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Fully reduce `v` against the basis: the result has no support on
    /// any pivot key.  Returns the canonical representative of
    /// `v + span(basis)` with respect to the key order.
    pub fn reduce(&self, v: &SparseVec<K>) -> SparseVec<K> {
        let mut out = v.clone();
        loop {
            // Find the smallest key of `out` that is a pivot.
            let hit = out
                .terms
                .iter()
                .find(|(k, _)| self.rows.contains_key(k))
                .map(|(k, c)| (k.clone(), c.clone()));
            match hit {
                None => return out,
                Some((k, c)) => {
                    let row = &self.rows[&k];
                    out.axpy(&-c, row);
                }
            }
        }
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v).is_zero()
    }

    /// Insert `v` (more precisely, its reduction) into the basis.
    /// Returns `true` if the dimension grew.
    pub fn insert(&mut self, v: &SparseVec<K>) -> bool {
        let mut r = self.reduce(v);
        let (pivot, lead) = match r.leading() {
            None => return false,
            Some((k, c)) => (k.clone(), c.clone()),
        };
        let inv = Rat::one() / lead;
        r.scale(&inv);
        // Maintain full reduction: clear the new pivot from existing rows.
        for row in self.rows.values_mut() {
            let c = row.coeff(&pivot);
            if !c.is_zero() {
                row.axpy(&-c, &r);
            }
        }
        self.rows.insert(pivot, r);
        true
    }

    /// The echelon rows in pivot order.
    pub fn rows(&self) -> impl Iterator<Item = &SparseVec<K>> {
        self.rows.values()
    }

    /// The pivot keys in order.
    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.rows.keys()
    }
}

// ---------------------------------------------------------------------------
// Dense routines
// ---------------------------------------------------------------------------

/// Reduced row echelon form in place; returns the pivot column of each
/// surviving nonzero row, in order.
pub fn rref(rows: &mut Vec<Vec<Rat>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = Rat::one() / rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for cc in 0..ncols {
                    let sub = &f * &rows[r][cc];
                    rows[i][cc] -= sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// A basis of the right nullspace `{x : A x = 0}` of the dense matrix with
/// the given rows, each vector of length `ncols`.  The basis is the
/// canonical one (one vector per free column, free coordinate set to 1),
/// listed in increasing free-column order.
pub fn nullspace(rows: &[Vec<Rat>], ncols: usize) -> Vec<Vec<Rat>> {
    let mut m: Vec<Vec<Rat>> = rows
        .iter()
        .filter(|r| !r.iter().all(Rat::is_zero))
        .cloned()
        .collect();
    for r in &m {
        assert_eq!(r.len(), ncols);
    }
    let pivots = rref(&mut m);
    let piv_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..ncols {
        if piv_set.contains(&free) {
            continue;
        }
        let mut v = vec![Rat::zero(); ncols];
        v[free] = Rat::one();
        for (ri, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[ri][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Solution set of an affine system `A x = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AffineSolution {
    /// No solution.
    Empty,
    /// Unique solution.
    Point(Vec<Rat>),
    /// One-parameter family `point + t · dir`.
    Line { point: Vec<Rat>, dir: Vec<Rat> },
    /// Two or more free parameters (returned verbatim; callers that cannot
    /// handle this treat it as an internal error).
    Higher {
        point: Vec<Rat>,
        dirs: Vec<Vec<Rat>>,
    },
}

/// Solve `A x = b` exactly.  `rows` are the rows of `A`; `rhs` has one
/// entry per row; unknowns number `ncols`.
pub fn solve_affine(rows: &[Vec<Rat>], rhs: &[Rat], ncols: usize) -> AffineSolution {
    assert_eq!(rows.len(), rhs.len());
    let mut aug: Vec<Vec<Rat>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            assert_eq!(r.len(), ncols);
            let mut row = r.clone();
            row.push(b.clone());
            row
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.contains(&ncols) {
        return AffineSolution::Empty;
    }
    let mut point = vec![Rat::zero(); ncols];
    for (ri, &pc) in pivots.iter().enumerate() {
        point[pc] = aug[ri][ncols].clone();
    }
    let homo: Vec<Vec<Rat>> = aug.iter().map(|r| r[..ncols].to_vec()).collect();
    let dirs = nullspace(&homo, ncols);
    match dirs.len() {
        0 => AffineSolution::Point(point),
        1 => AffineSolution::Line {
            point,
            dir: dirs.into_iter().next().unwrap(),
        },
        _ => AffineSolution::Higher { point, dirs },
    }
}
