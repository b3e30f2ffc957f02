//! The symmetric square `S²(g)` of `g = sl(n, ℂ)` and its distinguished
//! submodules.
//!
//! Elements live in `ℂ ⊕ g ⊕ S²(g)` (degree ≤ 2 symmetric tensors): the
//! quadratic part is written on unordered products of the reduced basis
//! `{T_{i,j} : i ≠ j} ∪ {T_{i,i} : i < n}`, so representations are
//! canonical and equality is structural.
//!
//! As a module under the adjoint action,
//!
//! ```text
//! S²(g) ≅ F(2e₁ - 2eₙ) ⊕ F(e₁+e₂-e_{n-1}-eₙ) ⊕ F(e₁-eₙ) ⊕ F(0)
//! ```
//!
//! for `n ≥ 4`; the second summand is absent for `n = 3`, and only the
//! first and last survive for `n = 2`.  [`decompose_s2`] realizes each
//! summand as the closure of an explicit highest weight vector and
//! cross-checks its dimension against the Weyl dimension formula.
//!
//! The one-parameter family at the heart of everything is
//!
//! ```text
//! F(e₁-eₙ)^a = { Σ_{i,j,k} A_{i,j} T_{i,k}T_{k,j}  -  (a(n-2)/n)·A : A ∈ g }
//! F^a        = F(e₁+e₂-e_{n-1}-eₙ) + F(e₁-eₙ)^a        (n ≥ 4)
//!            = F(e₁-eₙ)^a                                (n = 3)
//!            = 0                                         (n = 2)
//! ```
//!
//! a copy of `g ⊕ F(e₁+e₂-e_{n-1}-eₙ)` embedded across degrees 1 and 2;
//! see [`f1m1_embed`], [`fa_space`], [`fa_lowest_vectors`].

use crate::liealg::{
    basis_indices, bracket, weyl_dim, TracelessMatrix, Weight,
};
use crate::linalg::{RowBasis, SparseVec};
use crate::rat::{rat, rat_str, Rat};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Unordered product of two reduced basis indices, stored with the smaller
/// index first.
pub type QuadKey = ((usize, usize), (usize, usize));

/// A monomial in `ℂ ⊕ g ⊕ S²(g)`: the unit, a basis vector, or an
/// unordered product of two basis vectors.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Mon {
    One,
    Lin(usize, usize),
    Quad(QuadKey),
}

/// Sparse-vector key: monomials grouped by their adjoint weight, so that
/// echelon bases of weight-homogeneous spans bucket by weight
/// automatically.
pub type MonKey = (Weight, Mon);

// ---------------------------------------------------------------------------
// Elements
// ---------------------------------------------------------------------------

/// An element of `ℂ ⊕ g ⊕ S²(g)` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly2Elem {
    n: usize,
    scalar: Rat,
    linear: TracelessMatrix,
    quadratic: BTreeMap<QuadKey, Rat>,
}

impl Poly2Elem {
    pub fn zero(n: usize) -> Result<Self> {
        Ok(Poly2Elem {
            n,
            scalar: Rat::zero(),
            linear: TracelessMatrix::zero(n)?,
            quadratic: BTreeMap::new(),
        })
    }

    pub fn from_scalar(n: usize, c: Rat) -> Result<Self> {
        let mut e = Self::zero(n)?;
        e.scalar = c;
        Ok(e)
    }

    pub fn from_linear(m: &TracelessMatrix) -> Result<Self> {
        let mut e = Self::zero(m.n())?;
        e.linear = m.clone();
        Ok(e)
    }

    /// The product `c · T_{i,j} T_{k,l}` for arbitrary 1-based indices.
    ///
    /// Indices equal to `(n,n)` are rewritten through
    /// `T_{n,n} = -Σ_{u<n} T_{u,u}` so the stored keys always lie in the
    /// reduced basis.
    pub fn quad_monomial(
        n: usize,
        p: (usize, usize),
        q: (usize, usize),
        c: Rat,
    ) -> Result<Self> {
        let mut e = Self::zero(n)?;
        for (i, idx) in [p, q] {
            if i == 0 || i > n || idx == 0 || idx > n {
                return Err(Error::Invalid(format!(
                    "index ({i},{idx}) out of range for n = {n}"
                )));
            }
        }
        e.add_quad(p, q, c);
        Ok(e)
    }

    fn add_quad(&mut self, p: (usize, usize), q: (usize, usize), c: Rat) {
        if c.is_zero() {
            return;
        }
        let n = self.n;
        let expand = |(i, j): (usize, usize)| -> Vec<((usize, usize), Rat)> {
            if i == j && i == n {
                (1..n).map(|u| ((u, u), -Rat::one())).collect()
            } else {
                vec![((i, j), Rat::one())]
            }
        };
        for (kp, cp) in expand(p) {
            for (kq, cq) in expand(q) {
                let key = if kp <= kq { (kp, kq) } else { (kq, kp) };
                let coeff = &c * &cp * &cq;
                let slot = self.quadratic.entry(key).or_insert_with(Rat::zero);
                *slot += coeff;
                if slot.is_zero() {
                    self.quadratic.remove(&key);
                }
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn scalar(&self) -> &Rat {
        &self.scalar
    }

    pub fn linear(&self) -> &TracelessMatrix {
        &self.linear
    }

    pub fn quadratic_terms(&self) -> impl Iterator<Item = (&QuadKey, &Rat)> {
        self.quadratic.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.scalar.is_zero() && self.linear.is_zero() && self.quadratic.is_empty()
    }

    /// `self + c · other`.
    pub fn scaled_add(&self, c: &Rat, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "mixed ranks");
        let mut out = self.clone();
        out.scalar += c * &other.scalar;
        out.linear.scaled_add(c, &other.linear);
        for (k, v) in &other.quadratic {
            let slot = out.quadratic.entry(*k).or_insert_with(Rat::zero);
            *slot += c * v;
            if slot.is_zero() {
                out.quadratic.remove(k);
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        self.scaled_add(&Rat::one(), other)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.scaled_add(&-Rat::one(), other)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::zero(self.n).unwrap().scaled_add(c, self)
    }

    /// Convert to a sparse vector on weight-tagged monomial keys.
    pub fn to_sparse(&self) -> SparseVec<MonKey> {
        let n = self.n;
        let mut v = SparseVec::new();
        if !self.scalar.is_zero() {
            v.add_term((Weight::zero(n), Mon::One), self.scalar.clone());
        }
        for ((i, j), c) in self.linear.reduced_coords() {
            v.add_term((Weight::root(n, i, j), Mon::Lin(i, j)), c);
        }
        for (&(p, q), c) in &self.quadratic {
            let w = Weight::root(n, p.0, p.1).add(&Weight::root(n, q.0, q.1));
            v.add_term((w, Mon::Quad((p, q))), c.clone());
        }
        v
    }

    /// Inverse of [`Poly2Elem::to_sparse`].
    pub fn from_sparse(n: usize, v: &SparseVec<MonKey>) -> Result<Self> {
        let mut out = Self::zero(n)?;
        for ((_, mon), c) in &v.terms {
            match mon {
                Mon::One => out.scalar += c,
                Mon::Lin(i, j) => {
                    let t = TracelessMatrix::t(n, *i, *j)?;
                    out.linear.scaled_add(c, &t);
                }
                Mon::Quad((p, q)) => out.add_quad(*p, *q, c.clone()),
            }
        }
        Ok(out)
    }

    /// Split into weight-homogeneous components `(weight, component)`,
    /// sorted by weight.  Scalars and diagonal matrix parts have weight 0.
    pub fn weight_components(&self) -> Vec<(Weight, Poly2Elem)> {
        let sparse = self.to_sparse();
        let mut buckets: BTreeMap<Weight, SparseVec<MonKey>> = BTreeMap::new();
        for ((w, mon), c) in &sparse.terms {
            buckets
                .entry(w.clone())
                .or_default()
                .add_term((w.clone(), mon.clone()), c.clone());
        }
        buckets
            .into_iter()
            .map(|(w, v)| {
                let e = Poly2Elem::from_sparse(self.n, &v).expect("valid keys");
                (w, e)
            })
            .collect()
    }
}

fn fmt_term(f: &mut fmt::Formatter<'_>, first: &mut bool, c: &Rat, body: &str) -> fmt::Result {
    use num_traits::Signed;
    let (sign, mag) = if c.is_negative() {
        ("-", -c.clone())
    } else {
        ("+", c.clone())
    };
    if *first {
        *first = false;
        if sign == "-" {
            write!(f, "-")?;
        }
    } else {
        write!(f, " {sign} ")?;
    }
    if body.is_empty() {
        write!(f, "{}", rat_str(&mag))
    } else if mag.is_one() {
        write!(f, "{body}")
    } else {
        write!(f, "{} {body}", rat_str(&mag))
    }
}

impl fmt::Display for Poly2Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&((i, j), (k, l)), c) in &self.quadratic {
            fmt_term(f, &mut first, c, &format!("T({i},{j})T({k},{l})"))?;
        }
        for ((i, j), c) in self.linear.reduced_coords() {
            fmt_term(f, &mut first, &c, &format!("T({i},{j})"))?;
        }
        if !self.scalar.is_zero() {
            fmt_term(f, &mut first, &self.scalar, "")?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Adjoint action
// ---------------------------------------------------------------------------

/// The adjoint action of `x ∈ g` on `ℂ ⊕ g ⊕ S²(g)`: zero on scalars,
/// `[x, ·]` on the linear part, and the degree-2 derivation
/// `ad_x(uv) = [x,u]v + u[x,v]` on products.
pub fn adjoint_act(x: &TracelessMatrix, v: &Poly2Elem) -> Result<Poly2Elem> {
    if x.n() != v.n() {
        return Err(Error::Invalid(format!(
            "adjoint action of sl({}) element on sl({}) tensor",
            x.n(),
            v.n()
        )));
    }
    let table = bracket_table(x)?;
    adjoint_with_table(&table, v)
}

/// Brackets of `x` against the whole reduced basis, expressed in reduced
/// coordinates.  Private workhorse shared by single calls and closures.
struct BracketTable {
    n: usize,
    map: BTreeMap<(usize, usize), Vec<((usize, usize), Rat)>>,
}

fn bracket_table(x: &TracelessMatrix) -> Result<BracketTable> {
    let n = x.n();
    let mut map = BTreeMap::new();
    for u in basis_indices(n) {
        let t = TracelessMatrix::t(n, u.0, u.1)?;
        let coords = bracket(x, &t)?.reduced_coords();
        if !coords.is_empty() {
            map.insert(u, coords);
        }
    }
    Ok(BracketTable { n, map })
}

fn adjoint_with_table(table: &BracketTable, v: &Poly2Elem) -> Result<Poly2Elem> {
    let n = table.n;
    let mut out = Poly2Elem::zero(n)?;
    // Linear part: [x, v.linear] reassembled from the table by linearity.
    for (u, c) in v.linear.reduced_coords() {
        if let Some(coords) = table.map.get(&u) {
            for ((i, j), cw) in coords {
                let t = TracelessMatrix::t(n, *i, *j)?;
                out.linear.scaled_add(&(&c * cw), &t);
            }
        }
    }
    // Quadratic part: derivation on each product.
    for (&(p, q), c) in &v.quadratic {
        if let Some(coords) = table.map.get(&p) {
            for (w, cw) in coords {
                out.add_quad(*w, q, c * cw);
            }
        }
        if let Some(coords) = table.map.get(&q) {
            for (w, cw) in coords {
                out.add_quad(p, *w, c * cw);
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Subspaces and closures
// ---------------------------------------------------------------------------

/// An exact echelon basis of a subspace of `ℂ ⊕ g ⊕ S²(g)`.
#[derive(Clone, Debug)]
pub struct SubspaceBasis {
    n: usize,
    rows: RowBasis<MonKey>,
}

impl SubspaceBasis {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Invalid(format!("need n >= 2, got n = {n}")));
        }
        Ok(SubspaceBasis {
            n,
            rows: RowBasis::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.rows.dim()
    }

    /// Insert an element; on growth, returns the new echelon row (already
    /// reduced against the previous basis) as an element.
    pub fn insert(&mut self, e: &Poly2Elem) -> Result<Option<Poly2Elem>> {
        if e.n() != self.n {
            return Err(Error::Invalid("rank mismatch in subspace insert".into()));
        }
        let v = e.to_sparse();
        let r = self.rows.reduce(&v);
        if r.is_zero() {
            return Ok(None);
        }
        self.rows.insert(&r);
        Ok(Some(Poly2Elem::from_sparse(self.n, &r)?))
    }

    pub fn contains(&self, e: &Poly2Elem) -> bool {
        e.n() == self.n && self.rows.contains(&e.to_sparse())
    }

    /// The echelon basis as elements, in pivot order.
    pub fn elements(&self) -> Vec<Poly2Elem> {
        self.rows
            .rows()
            .map(|r| Poly2Elem::from_sparse(self.n, r).expect("valid keys"))
            .collect()
    }

    /// Is every echelon row supported on a single adjoint weight?
    ///
    /// This holds automatically whenever all inserted elements were weight
    /// vectors, and guarantees that [`SubspaceBasis::zero_weight_elements`]
    /// spans the full zero-weight subspace.
    pub fn rows_weight_homogeneous(&self) -> bool {
        self.rows.rows().all(|r| {
            let mut weights = r.terms.keys().map(|(w, _)| w);
            match weights.next() {
                None => true,
                Some(w0) => weights.all(|w| w == w0),
            }
        })
    }

    /// The echelon rows of adjoint weight zero.
    pub fn zero_weight_elements(&self) -> Vec<Poly2Elem> {
        let zero = Weight::zero(self.n);
        self.rows
            .rows()
            .filter(|r| matches!(r.leading(), Some(((w, _), _)) if *w == zero))
            .map(|r| Poly2Elem::from_sparse(self.n, r).expect("valid keys"))
            .collect()
    }

    /// Check closure under the adjoint action.  It suffices to test the
    /// simple raising and lowering generators `T_{i,i+1}, T_{i+1,i}`:
    /// together they generate `g` as a Lie algebra.
    pub fn is_ad_stable(&self) -> Result<bool> {
        let elems = self.elements();
        for g in simple_generators(self.n)? {
            let table = bracket_table(&g)?;
            for e in &elems {
                let image = adjoint_with_table(&table, e)?;
                if !self.contains(&image) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

fn simple_generators(n: usize) -> Result<Vec<TracelessMatrix>> {
    let mut gens = Vec::with_capacity(2 * (n - 1));
    for i in 1..n {
        gens.push(TracelessMatrix::t(n, i, i + 1)?);
        gens.push(TracelessMatrix::t(n, i + 1, i)?);
    }
    Ok(gens)
}

/// The smallest `g`-submodule of `ℂ ⊕ g ⊕ S²(g)` containing the seeds:
/// worklist closure under the simple raising/lowering generators.
pub fn submodule_closure(seeds: &[Poly2Elem], n: usize) -> Result<SubspaceBasis> {
    let mut basis = SubspaceBasis::new(n)?;
    let mut queue: Vec<Poly2Elem> = Vec::new();
    for s in seeds {
        if let Some(row) = basis.insert(s)? {
            queue.push(row);
        }
    }
    let tables: Vec<BracketTable> = simple_generators(n)?
        .iter()
        .map(bracket_table)
        .collect::<Result<_>>()?;
    while let Some(e) = queue.pop() {
        for table in &tables {
            let image = adjoint_with_table(table, &e)?;
            if let Some(row) = basis.insert(&image)? {
                queue.push(row);
            }
        }
    }
    Ok(basis)
}

// ---------------------------------------------------------------------------
// The decomposition of S²(g)
// ---------------------------------------------------------------------------

/// The quadratic Casimir element `Ω = Σ_{i,j} T_{i,j} T_{j,i}` as an
/// element of `S²(g)`.
pub fn casimir_element(n: usize) -> Result<Poly2Elem> {
    let mut e = Poly2Elem::zero(n)?;
    for i in 1..=n {
        for j in 1..=n {
            e = e.add(&Poly2Elem::quad_monomial(n, (i, j), (j, i), Rat::one())?);
        }
    }
    Ok(e)
}

/// The row `Σ_s T_{i,s} T_{s,i}` of the Casimir element (its `i`-th
/// diagonal block), used as a reference vector for orthogonality checks.
pub fn casimir_row(n: usize, i: usize) -> Result<Poly2Elem> {
    if i == 0 || i > n {
        return Err(Error::Invalid(format!("row index {i} out of 1..={n}")));
    }
    let mut e = Poly2Elem::zero(n)?;
    for s in 1..=n {
        e = e.add(&Poly2Elem::quad_monomial(n, (i, s), (s, i), Rat::one())?);
    }
    Ok(e)
}

/// One irreducible summand of `S²(g)`.
#[derive(Clone, Debug)]
pub struct S2Component {
    /// Highest weight of the summand.
    pub highest_weight: Weight,
    /// The explicit highest weight vector whose closure realizes it.
    pub highest_vector: Poly2Elem,
    /// Dimension of the computed closure.
    pub dim: usize,
    /// Dimension predicted by the Weyl formula (always equals `dim`).
    pub weyl: BigInt,
    /// The realized submodule.
    pub space: SubspaceBasis,
}

/// The full decomposition of `S²(g)`.
#[derive(Clone, Debug)]
pub struct S2Decomposition {
    pub n: usize,
    pub components: Vec<S2Component>,
    /// `Σ dims = dim S²(g) = (n²-1)n²/2`.
    pub total_dim: usize,
}

/// Highest weight vectors of the summands of `S²(g)`, in the order
/// `2e₁-2eₙ`, `e₁+e₂-e_{n-1}-eₙ` (for `n ≥ 4`), `e₁-eₙ` (for `n ≥ 3`),
/// `0`.
pub fn s2_highest_vectors(n: usize) -> Result<Vec<(Weight, Poly2Elem)>> {
    if n < 2 {
        return Err(Error::Invalid(format!("need n >= 2, got n = {n}")));
    }
    let mut out = Vec::new();
    // F(2e1 - 2en): T_{1,n}^2.
    let w1 = Weight::root(n, 1, n).scale(&rat(2, 1));
    out.push((
        w1,
        Poly2Elem::quad_monomial(n, (1, n), (1, n), Rat::one())?,
    ));
    // F(e1 + e2 - e_{n-1} - en): a 2x2 "determinant" in the corner.
    if n >= 4 {
        let w2 = Weight::root(n, 1, n).add(&Weight::root(n, 2, n - 1));
        let v2 = Poly2Elem::quad_monomial(n, (1, n - 1), (2, n), Rat::one())?
            .sub(&Poly2Elem::quad_monomial(n, (1, n), (2, n - 1), Rat::one())?);
        out.push((w2, v2));
    }
    // F(e1 - en): the matrix-square row Σ_k T_{1,k}T_{k,n}.
    if n >= 3 {
        let mut v3 = Poly2Elem::zero(n)?;
        for k in 1..=n {
            v3 = v3.add(&Poly2Elem::quad_monomial(n, (1, k), (k, n), Rat::one())?);
        }
        out.push((Weight::root(n, 1, n), v3));
    }
    // F(0): the Casimir element.
    out.push((Weight::zero(n), casimir_element(n)?));
    Ok(out)
}

/// Decompose `S²(g)` into irreducible submodules by closing each highest
/// weight vector of [`s2_highest_vectors`] under the adjoint action.
///
/// Every component dimension is cross-checked against the Weyl dimension
/// formula, and the dimensions are verified to add up to
/// `dim S²(g) = (n²-1)n²/2`; a mismatch is reported as [`Error::Verify`].
pub fn decompose_s2(n: usize) -> Result<S2Decomposition> {
    let mut components = Vec::new();
    let mut total = 0usize;
    for (hw, hv) in s2_highest_vectors(n)? {
        let space = submodule_closure(std::slice::from_ref(&hv), n)?;
        let dim = space.dim();
        let weyl = weyl_dim(&hw)?;
        if BigInt::from(dim) != weyl {
            return Err(Error::Verify(format!(
                "component F({hw}) of S²(sl({n})) closed to dimension {dim}, Weyl formula gives {weyl}"
            )));
        }
        total += dim;
        components.push(S2Component {
            highest_weight: hw,
            highest_vector: hv,
            dim,
            weyl,
            space,
        });
    }
    let expected = (n * n - 1) * n * n / 2;
    if total != expected {
        return Err(Error::Verify(format!(
            "components of S²(sl({n})) total {total}, expected dim S²(g) = {expected}"
        )));
    }
    Ok(S2Decomposition {
        n,
        components,
        total_dim: total,
    })
}

// ---------------------------------------------------------------------------
// The F(e1+e2-e_{n-1}-en) family and its zero-weight space
// ---------------------------------------------------------------------------

/// The span of all `T_{i,j}T_{k,l} - T_{i,l}T_{k,j}` (2x2 determinants of
/// the generator matrix).  For `n ≥ 4` this is
/// `F(e₁+e₂-e_{n-1}-eₙ) ⊕ F(e₁-eₙ) ⊕ F(0)`; for `n = 3` the first summand
/// vanishes identically.
pub fn f1111_generators(n: usize) -> Result<SubspaceBasis> {
    let mut basis = SubspaceBasis::new(n)?;
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                for l in 1..=n {
                    let e = Poly2Elem::quad_monomial(n, (i, j), (k, l), Rat::one())?
                        .sub(&Poly2Elem::quad_monomial(n, (i, l), (k, j), Rat::one())?);
                    basis.insert(&e)?;
                }
            }
        }
    }
    Ok(basis)
}

/// The quadratic map `A ↦ Σ_{i<j} A_{i,j} (T_{i,i}T_{j,j} - T_{i,j}T_{j,i})`
/// on strictly upper triangular matrices.
///
/// # Errors
/// Rejects input with any nonzero entry on or below the diagonal.
pub fn t_map(a: &TracelessMatrix) -> Result<Poly2Elem> {
    let n = a.n();
    for i in 1..=n {
        for j in 1..=i {
            if !a.entry(i, j).is_zero() {
                return Err(Error::Invalid(format!(
                    "t_map input must be strictly upper triangular; entry ({i},{j}) = {}",
                    rat_str(a.entry(i, j))
                )));
            }
        }
    }
    let mut e = Poly2Elem::zero(n)?;
    for i in 1..=n {
        for j in (i + 1)..=n {
            let c = a.entry(i, j);
            if c.is_zero() {
                continue;
            }
            e = e.add(&Poly2Elem::quad_monomial(n, (i, i), (j, j), c.clone())?);
            e = e.sub(&Poly2Elem::quad_monomial(n, (i, j), (j, i), c.clone())?);
        }
    }
    Ok(e)
}

/// For `1 ≤ i < j < k < l ≤ n`, the two-dimensional space of strictly
/// upper triangular matrices supported on the three "pair partitions"
/// `{E_{i,j}+E_{k,l}, E_{i,k}+E_{j,l}, E_{i,l}+E_{j,k}}` with coefficients
/// summing to zero.  Basis returned: coefficients `(1, -1, 0)` and
/// `(0, 1, -1)`.
pub fn m_space(i: usize, j: usize, k: usize, l: usize, n: usize) -> Result<Vec<TracelessMatrix>> {
    if !(1 <= i && i < j && j < k && k < l && l <= n) {
        return Err(Error::Invalid(format!(
            "need 1 <= i < j < k < l <= n, got ({i},{j},{k},{l}) with n = {n}"
        )));
    }
    let pair = |(r, s): (usize, usize), (u, v): (usize, usize)| -> Result<TracelessMatrix> {
        let mut rows = vec![vec![Rat::zero(); n]; n];
        rows[r - 1][s - 1] = Rat::one();
        rows[u - 1][v - 1] = Rat::one();
        TracelessMatrix::from_rows(rows)
    };
    let p1 = pair((i, j), (k, l))?;
    let p2 = pair((i, k), (j, l))?;
    let p3 = pair((i, l), (j, k))?;
    Ok(vec![p1.sub(&p2), p2.sub(&p3)])
}

/// The zero-weight subspace of `F(e₁+e₂-e_{n-1}-eₙ)`, realized as the span
/// of `t_map` over all [`m_space`] matrices.  Its dimension is
/// `n(n-3)/2`.
///
/// # Errors
/// Requires `n ≥ 4` (the module is absent for smaller rank).
pub fn zero_weight_f1111(n: usize) -> Result<SubspaceBasis> {
    if n < 4 {
        return Err(Error::Invalid(format!(
            "F(e1+e2-e_(n-1)-en) requires n >= 4, got n = {n}"
        )));
    }
    let mut basis = SubspaceBasis::new(n)?;
    for i in 1..=n {
        for j in (i + 1)..=n {
            for k in (j + 1)..=n {
                for l in (k + 1)..=n {
                    for m in m_space(i, j, k, l, n)? {
                        basis.insert(&t_map(&m)?)?;
                    }
                }
            }
        }
    }
    Ok(basis)
}

// ---------------------------------------------------------------------------
// Invariant Hermitian pairing
// ---------------------------------------------------------------------------

/// The invariant pairing on `ℂ ⊕ g ⊕ S²(g)`, positive definite on the
/// real rational span of the basis monomials.
///
/// Degrees pair to zero against each other; on scalars it is the product;
/// on `g` it is `(X, Y) = B(X, ᵗY)` (the Frobenius pairing
/// `Σ_{i,j} X_{i,j} Y_{i,j}`); on products it is
/// `(x₁x₂, y₁y₂) = [(x₁,y₁)(x₂,y₂) + (x₁,y₂)(x₂,y₁)]/2`.
pub fn hermitian_product(u: &Poly2Elem, v: &Poly2Elem) -> Result<Rat> {
    if u.n() != v.n() {
        return Err(Error::Invalid("rank mismatch in pairing".into()));
    }
    let n = u.n();
    let mut total = &u.scalar * &v.scalar;
    // Linear sector: Frobenius pairing of the matrices.
    for i in 1..=n {
        for j in 1..=n {
            let a = u.linear.entry(i, j);
            if !a.is_zero() {
                total += a * v.linear.entry(i, j);
            }
        }
    }
    // Quadratic sector.
    let g = |(i, j): (usize, usize), (r, s): (usize, usize)| -> Rat {
        let mut val = Rat::zero();
        if i == r && j == s {
            val += Rat::one();
        }
        if i == j && r == s {
            val -= rat(1, n as i64);
        }
        val
    };
    let half = rat(1, 2);
    for (&(p1, p2), c) in &u.quadratic {
        for (&(q1, q2), d) in &v.quadratic {
            let sym = g(p1, q1) * g(p2, q2) + g(p1, q2) * g(p2, q1);
            if !sym.is_zero() {
                total += c * d * sym * &half;
            }
        }
    }
    Ok(total)
}

// ---------------------------------------------------------------------------
// The family F^a
// ---------------------------------------------------------------------------

/// The twisted embedding `g → g ⊕ S²(g)`,
/// `A ↦ Σ_{i,j,k} A_{i,j} T_{i,k}T_{k,j} - (a(n-2)/n) A`,
/// whose image is `F(e₁-eₙ)^a`.
///
/// The map intertwines the adjoint actions (including the linear
/// correction term), so the image of a root vector is a weight vector of
/// the same weight.
pub fn f1m1_embed(a_mat: &TracelessMatrix, a: &Rat) -> Result<Poly2Elem> {
    let n = a_mat.n();
    let mut e = Poly2Elem::zero(n)?;
    for i in 1..=n {
        for j in 1..=n {
            let c = a_mat.entry(i, j);
            if c.is_zero() {
                continue;
            }
            for k in 1..=n {
                e = e.add(&Poly2Elem::quad_monomial(n, (i, k), (k, j), c.clone())?);
            }
        }
    }
    let correction = a * rat(n as i64 - 2, n as i64);
    e.linear.scaled_add(&-correction, a_mat);
    Ok(e)
}

/// The submodule `F^a ⊂ g ⊕ S²(g)`:
/// `F(e₁+e₂-e_{n-1}-eₙ) + F(e₁-eₙ)^a` for `n ≥ 4`, just `F(e₁-eₙ)^a` for
/// `n = 3`, and zero for `n = 2`.
pub fn fa_space(n: usize, a: &Rat) -> Result<SubspaceBasis> {
    let mut basis = SubspaceBasis::new(n)?;
    if n == 2 {
        return Ok(basis); // F^a = 0 in rank one.
    }
    for (i, j) in basis_indices(n) {
        let image = f1m1_embed(&TracelessMatrix::t(n, i, j)?, a)?;
        basis.insert(&image)?;
    }
    if n >= 4 {
        let hvs = s2_highest_vectors(n)?;
        let (_, v2) = &hvs[1]; // the e1+e2-e_{n-1}-en vector
        let f1111 = submodule_closure(std::slice::from_ref(v2), n)?;
        for e in f1111.elements() {
            basis.insert(&e)?;
        }
    }
    Ok(basis)
}

/// Lowest weight vectors of the summands of `F^a`, in the order
/// `-(e₁-eₙ)`, then `-(e₁+e₂-e_{n-1}-eₙ)` for `n ≥ 4`.  Empty for
/// `n = 2`, where `F^a = 0`.
///
/// Each vector is annihilated by every lowering operator `T_{j,i}`
/// (`j > i`), and the whole of `F^a` is recovered from them by raising.
pub fn fa_lowest_vectors(n: usize, a: &Rat) -> Result<Vec<Poly2Elem>> {
    if n < 2 {
        return Err(Error::Invalid(format!("need n >= 2, got n = {n}")));
    }
    let mut out = Vec::new();
    if n == 2 {
        return Ok(out);
    }
    // Lowest vector of F(e1-en)^a: the embedded lowest root vector T_{n,1}.
    out.push(f1m1_embed(&TracelessMatrix::t(n, n, 1)?, a)?);
    if n >= 4 {
        let v = Poly2Elem::quad_monomial(n, (n, 1), (n - 1, 2), Rat::one())?
            .sub(&Poly2Elem::quad_monomial(n, (n, 2), (n - 1, 1), Rat::one())?);
        out.push(v);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rint;

    #[test]
    fn quad_monomial_expands_corner_index() {
        // T_{n,n} T_{1,n} must be rewritten away from the (n,n) index.
        let n = 3;
        let e = Poly2Elem::quad_monomial(n, (3, 3), (1, 3), Rat::one()).unwrap();
        let keys: Vec<QuadKey> = e.quadratic_terms().map(|(k, _)| *k).collect();
        assert_eq!(keys, vec![((1, 1), (1, 3)), ((1, 3), (2, 2))]);
        for (_, c) in e.quadratic_terms() {
            assert_eq!(*c, -Rat::one());
        }
    }

    #[test]
    fn casimir_is_ad_invariant() {
        for n in 2..=4 {
            let omega = casimir_element(n).unwrap();
            for (i, j) in basis_indices(n) {
                let x = TracelessMatrix::t(n, i, j).unwrap();
                let image = adjoint_act(&x, &omega).unwrap();
                assert!(image.is_zero(), "ad(T_{{{i},{j}}})Ω ≠ 0 for n = {n}");
            }
        }
    }

    #[test]
    fn weight_components_split_mixed_element() {
        let n = 3;
        let e = Poly2Elem::quad_monomial(n, (1, 2), (2, 1), rint(2))
            .unwrap()
            .add(&Poly2Elem::from_linear(&TracelessMatrix::t(n, 1, 3).unwrap()).unwrap());
        let comps = e.weight_components();
        assert_eq!(comps.len(), 2);
        let rebuilt = comps
            .iter()
            .fold(Poly2Elem::zero(n).unwrap(), |acc, (_, c)| acc.add(c));
        assert_eq!(rebuilt, e);
    }

    #[test]
    fn sparse_round_trip() {
        let n = 4;
        let e = Poly2Elem::quad_monomial(n, (4, 4), (2, 3), rat(5, 3))
            .unwrap()
            .add(&Poly2Elem::from_scalar(n, rat(-1, 7)).unwrap())
            .add(&Poly2Elem::from_linear(&TracelessMatrix::t(n, 2, 2).unwrap()).unwrap());
        let back = Poly2Elem::from_sparse(n, &e.to_sparse()).unwrap();
        assert_eq!(e, back);
    }

    #[test]
    fn m_space_first_basis_vector_matches_sign_pattern() {
        let ms = m_space(1, 2, 3, 4, 4).unwrap();
        assert_eq!(ms.len(), 2);
        let b1 = &ms[0];
        assert_eq!(*b1.entry(1, 2), Rat::one());
        assert_eq!(*b1.entry(3, 4), Rat::one());
        assert_eq!(*b1.entry(1, 3), -Rat::one());
        assert_eq!(*b1.entry(2, 4), -Rat::one());
        assert!(b1.entry(1, 4).is_zero());
        assert!(b1.entry(2, 3).is_zero());
    }

    #[test]
    fn t_map_rejects_lower_triangle() {
        let n = 3;
        let mut rows = vec![vec![Rat::zero(); n]; n];
        rows[2][0] = Rat::one();
        let m = TracelessMatrix::from_rows(rows).unwrap();
        assert!(t_map(&m).is_err());
    }
}
