//! The Lie algebra `sl(n, ℂ)` in exact rational arithmetic.
//!
//! The working basis consists of the traceless matrices
//! `T_{i,j} = E_{i,j} - δ_{i,j}/n · I` (indices 1-based).  For `i ≠ j`
//! these are the usual elementary matrices; the diagonal ones satisfy the
//! single relation `Σ_i T_{i,i} = 0`, so a basis of the Cartan subalgebra
//! is `T_{1,1}, …, T_{n-1,n-1}`.  The structure constants are
//!
//! ```text
//! [T_{r,s}, T_{i,j}] = δ_{i,s} T_{r,j} - δ_{r,j} T_{i,s}
//! ```
//!
//! and the invariant form is the trace form `B(X, Y) = Tr(XY)`.
//! Weights of the diagonal Cartan are written in coordinates
//! `(λ_1, …, λ_n)` with `Σ λ_i = 0`; the basis vector `T_{i,j}` (`i ≠ j`)
//! has weight `e_i - e_j`, and the half sum of positive roots is
//! `ρ = Σ_i ((n + 1 - 2i)/2) e_i`.

use crate::rat::{rat, rat_str, rint, Rat};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use std::fmt;
use std::sync::atomic::{AtomicBool, Ordering};

/// When set, [`bracket`] flips the sign of entry `(1,2)` of every result.
///
/// This simulates a single structure-constant sign error so that the
/// self-verification pipeline can demonstrate it actually detects
/// corrupted algebra rather than vacuously passing.  Never enabled in
/// normal operation.
static BRACKET_SIGN_DEFECT: AtomicBool = AtomicBool::new(false);

/// Test-harness hook: turn the injected bracket sign defect on or off.
///
/// Exposed (hidden) so that an external process can verify that the full
/// check suite goes red when the algebra is corrupted.  Not part of the
/// stable API.
#[doc(hidden)]
pub fn set_bracket_sign_defect(enabled: bool) {
    BRACKET_SIGN_DEFECT.store(enabled, Ordering::SeqCst);
}

#[doc(hidden)]
pub fn bracket_sign_defect_enabled() -> bool {
    BRACKET_SIGN_DEFECT.load(Ordering::SeqCst)
}

// ---------------------------------------------------------------------------
// Weights
// ---------------------------------------------------------------------------

/// A weight of the diagonal Cartan subalgebra of `sl(n, ℂ)`, stored as
/// `(λ_1, …, λ_n)` with `Σ λ_i = 0`.
///
/// Serializes as an array of rational strings such as `["-1/2", "0", "1/2"]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(Vec<Rat>);

impl Weight {
    /// Build a weight from coordinates, checking that they sum to zero.
    pub fn new(coords: Vec<Rat>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::Invalid("weight needs at least one coordinate".into()));
        }
        let sum: Rat = coords.iter().cloned().sum();
        if !sum.is_zero() {
            return Err(Error::Invalid(format!(
                "weight coordinates must sum to zero, got sum {}",
                rat_str(&sum)
            )));
        }
        Ok(Weight(coords))
    }

    /// The zero weight for `sl(n)`.
    pub fn zero(n: usize) -> Self {
        Weight(vec![Rat::zero(); n])
    }

    /// The root `e_i - e_j` (1-based, `i ≠ j` not required here: `i = j`
    /// gives the zero weight, which is the weight of a Cartan element).
    pub fn root(n: usize, i: usize, j: usize) -> Self {
        let mut c = vec![Rat::zero(); n];
        if i != j {
            c[i - 1] = Rat::one();
            c[j - 1] = -Rat::one();
        }
        Weight(c)
    }

    /// Number of coordinates `n`.
    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// Coordinate `λ_i` (1-based).
    pub fn coord(&self, i: usize) -> &Rat {
        &self.0[i - 1]
    }

    /// All coordinates in order.
    pub fn coords(&self) -> &[Rat] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rat::is_zero)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        assert_eq!(self.n(), other.n());
        Weight(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(x, y)| x + y)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        assert_eq!(self.n(), other.n());
        Weight(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(x, y)| x - y)
                .collect(),
        )
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|x| -x).collect())
    }

    pub fn scale(&self, c: &Rat) -> Weight {
        Weight(self.0.iter().map(|x| x * c).collect())
    }

    /// The coordinate pairing `Σ_i λ_i μ_i`.
    ///
    /// On trace-zero coordinate tuples this computes the form dual to the
    /// trace form, so `⟨λ, λ⟩ + 2⟨λ, ρ⟩` is the Harish-Chandra value of
    /// the Casimir element on a module with highest weight `λ`.
    pub fn pairing(&self, other: &Weight) -> Rat {
        assert_eq!(self.n(), other.n());
        self.0.iter().zip(&other.0).map(|(x, y)| x * y).sum()
    }

    /// Is the weight dominant integral, i.e. `λ_i - λ_{i+1} ∈ ℕ` for all `i`?
    pub fn is_dominant_integral(&self) -> bool {
        self.0
            .windows(2)
            .all(|w| crate::rat::is_natural(&(&w[0] - &w[1])))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", rat_str(c))?;
        }
        write!(f, ")")
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for c in &self.0 {
            seq.serialize_element(&rat_str(c))?;
        }
        seq.end()
    }
}

/// Half the sum of the positive roots: `ρ = Σ_i ((n + 1 - 2i)/2) e_i`.
///
/// For `n = 2` this is `(1/2, -1/2)`; for `n = 3` it is `(1, 0, -1)`.
pub fn rho(n: usize) -> Weight {
    Weight(
        (1..=n)
            .map(|i| rat(n as i64 + 1 - 2 * i as i64, 2))
            .collect(),
    )
}

/// The weight of the basis vector `T_{i,j}` under the adjoint action:
/// `e_i - e_j` for `i ≠ j`.
///
/// # Errors
/// `i = j` is rejected: diagonal basis vectors are weight vectors of
/// weight zero only collectively, and asking for "the root of a Cartan
/// element" is almost always a bug at the call site.
pub fn weight_of_basis(n: usize, i: usize, j: usize) -> Result<Weight> {
    check_index(n, i)?;
    check_index(n, j)?;
    if i == j {
        return Err(Error::Invalid(format!(
            "T_{{{i},{i}}} is a Cartan element, not a root vector"
        )));
    }
    Ok(Weight::root(n, i, j))
}

/// Dimension of the irreducible `sl(n)`-module with dominant integral
/// highest weight `hw`, by the Weyl dimension formula
/// `Π_{i<j} (λ_i - λ_j + j - i)/(j - i)`.
///
/// # Errors
/// Rejects non-dominant-integral highest weights.
pub fn weyl_dim(hw: &Weight) -> Result<BigInt> {
    if !hw.is_dominant_integral() {
        return Err(Error::Invalid(format!(
            "weight {hw} is not dominant integral"
        )));
    }
    let n = hw.n();
    let mut dim = Rat::one();
    for i in 1..=n {
        for j in (i + 1)..=n {
            let gap = rint((j - i) as i64);
            dim *= (hw.coord(i) - hw.coord(j) + &gap) / gap;
        }
    }
    debug_assert!(dim.is_integer());
    Ok(dim.to_integer())
}

// ---------------------------------------------------------------------------
// Traceless matrices
// ---------------------------------------------------------------------------

/// An element of `sl(n, ℂ)` with rational entries: an `n × n` matrix with
/// trace zero, stored densely in row-major order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TracelessMatrix {
    n: usize,
    entries: Vec<Rat>,
}

impl TracelessMatrix {
    /// The zero matrix.
    ///
    /// # Errors
    /// Requires `n ≥ 2`.
    pub fn zero(n: usize) -> Result<Self> {
        check_rank(n)?;
        Ok(TracelessMatrix {
            n,
            entries: vec![Rat::zero(); n * n],
        })
    }

    /// The basis vector `T_{i,j} = E_{i,j} - δ_{i,j}/n · I` (1-based).
    pub fn t(n: usize, i: usize, j: usize) -> Result<Self> {
        check_rank(n)?;
        check_index(n, i)?;
        check_index(n, j)?;
        let mut m = Self::zero(n)?;
        *m.entry_mut(i, j) += Rat::one();
        if i == j {
            let shift = rat(1, n as i64);
            for k in 1..=n {
                *m.entry_mut(k, k) -= &shift;
            }
        }
        Ok(m)
    }

    /// Build from rows of rationals.
    ///
    /// # Errors
    /// Rejects non-square input, `n < 2`, and nonzero trace.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let n = rows.len();
        check_rank(n)?;
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Invalid("matrix rows must all have length n".into()));
        }
        let mut trace = Rat::zero();
        for (i, row) in rows.iter().enumerate() {
            trace += &row[i];
        }
        if !trace.is_zero() {
            return Err(Error::Invalid(format!(
                "matrix must be traceless, got trace {}",
                rat_str(&trace)
            )));
        }
        Ok(TracelessMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry `(i, j)`, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> &Rat {
        &self.entries[(i - 1) * self.n + (j - 1)]
    }

    fn entry_mut(&mut self, i: usize, j: usize) -> &mut Rat {
        &mut self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rat::is_zero)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        TracelessMatrix {
            n: self.n,
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        TracelessMatrix {
            n: self.n,
            entries: self.entries.iter().map(|x| -x).collect(),
        }
    }

    /// `self += c · other` in place.
    pub fn scaled_add(&mut self, c: &Rat, other: &Self) {
        assert_eq!(self.n, other.n);
        for (x, y) in self.entries.iter_mut().zip(&other.entries) {
            *x += c * y;
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.scaled_add(&Rat::one(), other);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.scaled_add(&-Rat::one(), other);
        out
    }

    /// Plain matrix product (not an `sl(n)` operation on its own; used by
    /// [`bracket`] and [`trace_form`]).
    fn mat_mul(&self, other: &Self) -> Vec<Rat> {
        let n = self.n;
        let mut out = vec![Rat::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.entries[k * n + j];
                    if !b.is_zero() {
                        out[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Express the matrix in the reduced basis
    /// `{T_{i,j} : i ≠ j} ∪ {T_{i,i} : i < n}`: the coefficient of
    /// `T_{i,j}` (`i ≠ j`) is the entry `(i,j)`, and the coefficient of
    /// `T_{i,i}` (`i < n`) is `entry(i,i) - entry(n,n)`.
    ///
    /// Only nonzero coefficients are returned, in row-major index order.
    pub fn reduced_coords(&self) -> Vec<((usize, usize), Rat)> {
        let n = self.n;
        let mut out = Vec::new();
        for i in 1..=n {
            for j in 1..=n {
                if i == j {
                    if i < n {
                        let c = self.entry(i, i) - self.entry(n, n);
                        if !c.is_zero() {
                            out.push(((i, i), c));
                        }
                    }
                } else {
                    let c = self.entry(i, j).clone();
                    if !c.is_zero() {
                        out.push(((i, j), c));
                    }
                }
            }
        }
        out
    }

    /// Inverse of [`TracelessMatrix::reduced_coords`].
    pub fn from_reduced(n: usize, coords: &[((usize, usize), Rat)]) -> Result<Self> {
        let mut m = Self::zero(n)?;
        for ((i, j), c) in coords {
            let basis = Self::t(n, *i, *j)?;
            if *i == *j && *i >= n {
                return Err(Error::Invalid(format!(
                    "reduced basis excludes T_{{{n},{n}}}"
                )));
            }
            m.scaled_add(c, &basis);
        }
        Ok(m)
    }
}

impl fmt::Display for TracelessMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.n {
            write!(f, "[")?;
            for j in 1..=self.n {
                if j > 1 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", rat_str(self.entry(i, j)))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// The Lie bracket `[X, Y] = XY - YX`.
///
/// # Errors
/// The two matrices must have the same size.
pub fn bracket(x: &TracelessMatrix, y: &TracelessMatrix) -> Result<TracelessMatrix> {
    if x.n != y.n {
        return Err(Error::Invalid(format!(
            "bracket of mismatched sizes {} and {}",
            x.n, y.n
        )));
    }
    let xy = x.mat_mul(y);
    let yx = y.mat_mul(x);
    let mut entries: Vec<Rat> = xy.into_iter().zip(yx).map(|(a, b)| a - b).collect();
    if BRACKET_SIGN_DEFECT.load(Ordering::SeqCst) {
        // Injected structure-constant sign error (see set_bracket_sign_defect).
        let idx = 1; // row 1, column 2
        entries[idx] = -std::mem::take(&mut entries[idx]);
    }
    Ok(TracelessMatrix { n: x.n, entries })
}

/// The trace form `B(X, Y) = Tr(XY)`, the invariant bilinear form used for
/// all orthogonality computations.
///
/// On the basis: `B(T_{i,j}, T_{r,s}) = δ_{i,s} δ_{j,r} - δ_{i,j} δ_{r,s}/n`.
pub fn trace_form(x: &TracelessMatrix, y: &TracelessMatrix) -> Result<Rat> {
    if x.n != y.n {
        return Err(Error::Invalid(format!(
            "trace form of mismatched sizes {} and {}",
            x.n, y.n
        )));
    }
    let n = x.n;
    let mut tr = Rat::zero();
    for i in 0..n {
        for k in 0..n {
            let a = &x.entries[i * n + k];
            if !a.is_zero() {
                tr += a * &y.entries[k * n + i];
            }
        }
    }
    Ok(tr)
}

/// Indices `(i, j)` of the reduced basis
/// `{T_{i,j} : i ≠ j} ∪ {T_{i,i} : i < n}` of `sl(n)`, in row-major order.
/// There are `n² - 1` of them.
pub fn basis_indices(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(n * n - 1);
    for i in 1..=n {
        for j in 1..=n {
            if i != j || i < n {
                out.push((i, j));
            }
        }
    }
    out
}

/// The adjoint weight of the basis index `(i, j)`: `e_i - e_j`, which is
/// zero for diagonal indices.  Infallible companion to [`weight_of_basis`]
/// for internal bookkeeping over [`basis_indices`].
pub fn basis_weight(n: usize, i: usize, j: usize) -> Weight {
    Weight::root(n, i, j)
}

fn check_rank(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::Invalid(format!("need n >= 2, got n = {n}")));
    }
    Ok(())
}

fn check_index(n: usize, i: usize) -> Result<()> {
    if i == 0 || i > n {
        return Err(Error::Invalid(format!(
            "index {i} out of range 1..={n}"
        )));
    }
    Ok(())
}
