//! Highest weight modules and the annihilator criteria for the family
//! `J_a ⊂ U(sl(n, ℂ))`.
//!
//! `J_a` is the two-sided ideal generated by `sym(F^a)` together with
//! `sym(Ω) - c_a`, where `Ω` is the quadratic Casimir and
//! `c_a = (n-1)(2a+n)(2a-n)/(4n)`.  This module answers, in exact
//! arithmetic:
//!
//! * which irreducible highest weight modules `L(λ)` satisfy
//!   `sym(F^a)·l_λ = 0` ([`solve_annihilator_weights`],
//!   [`annihilates_hwv`]) — the answer is the family
//!
//!   ```text
//!   λ(i,a) = (1/n)·( (-a-n/2)·1_{i-1},  (n-1)a - n(n+1-2i)/2,  (-a+n/2)·1_{n-i} )
//!   ```
//!
//!   for `i = 1..n`, plus the trivial weight `λ = 0`, which satisfies the
//!   quadratic conditions for every `a` (for `a ≠ ±n/2` it is excluded
//!   from `J_a`-annihilation by the Casimir normalization, since
//!   `c_a ≠ 0`); the solver returns the full solution set with the
//!   `λ(i,a)` labels attached;
//! * the Casimir eigenvalue on `L(λ)`, computed two independent ways
//!   ([`casimir_scalar`]);
//! * whether `sym(F^a)` annihilates the generalized Verma modules
//!   attached to the mirabolic parabolics `q(1,n-1)` and `q(n-1,1)` at
//!   the characters `λ(1,a)` and `λ(n,a)` ([`check_generalized_verma`]).

use crate::envelope::{
    reduce_mod_ideal, symmetrize, ParabolicKind, ParabolicSpec, UEElem,
};
use crate::liealg::Weight;
use crate::linalg::{solve_affine, AffineSolution};
use crate::rat::{is_natural, rat, rat_str, rint, Rat};
use crate::symdecomp::{casimir_element, fa_lowest_vectors, SubspaceBasis};
use crate::{Error, Result};
use num_traits::{One, Zero};

// ---------------------------------------------------------------------------
// The weights λ(i,a)
// ---------------------------------------------------------------------------

/// A label `(n, i, a)` for the highest weight `λ(i,a)` of `sl(n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HWLabel {
    pub n: usize,
    pub i: usize,
    pub a: Rat,
}

impl HWLabel {
    pub fn new(n: usize, i: usize, a: Rat) -> Result<Self> {
        if n < 2 {
            return Err(Error::Invalid(format!("need n >= 2, got n = {n}")));
        }
        if i == 0 || i > n {
            return Err(Error::Invalid(format!("need 1 <= i <= n, got i = {i}")));
        }
        Ok(HWLabel { n, i, a })
    }

    pub fn weight(&self) -> Weight {
        lambda_ia(self.n, self.i, &self.a).expect("validated on construction")
    }
}

/// The highest weight `λ(i,a)`: `(i-1)` copies of `(-a-n/2)/n`, then
/// `((n-1)a - n(n+1-2i)/2)/n`, then `(n-i)` copies of `(-a+n/2)/n`.
///
/// Coincidences: `λ(i,a) = λ(i+1,a)` exactly when `a = n/2 - i`, and
/// `λ(1, n/2) = λ(n, -n/2) = 0`.
pub fn lambda_ia(n: usize, i: usize, a: &Rat) -> Result<Weight> {
    if n < 2 {
        return Err(Error::Invalid(format!("need n >= 2, got n = {n}")));
    }
    if i == 0 || i > n {
        return Err(Error::Invalid(format!("need 1 <= i <= n, got i = {i}")));
    }
    let nn = rint(n as i64);
    let half_n = rat(n as i64, 2);
    let prefix = (-a - &half_n) / &nn;
    let middle = ((&nn - Rat::one()) * a
        - &nn * rat(n as i64 + 1 - 2 * i as i64, 2))
        / &nn;
    let suffix = (-a + &half_n) / &nn;
    let mut coords = Vec::with_capacity(n);
    for _ in 1..i {
        coords.push(prefix.clone());
    }
    coords.push(middle);
    for _ in i..n {
        coords.push(suffix.clone());
    }
    Weight::new(coords)
}

/// Is `L(λ(i,a))` finite dimensional?
///
/// Two independent answers are computed and compared: dominance
/// (`λ_j - λ_{j+1} ∈ ℕ` for every `j`) and the closed-form criterion
/// `(i = 1 and a ∈ n/2 + ℕ) or (i = n and a ∈ -n/2 - ℕ)`.
///
/// # Errors
/// [`Error::Verify`] if the two answers ever disagree.
pub fn is_finite_dimensional(label: &HWLabel) -> Result<bool> {
    let w = label.weight();
    let dominant = w.is_dominant_integral();
    let n = label.n;
    let half_n = rat(n as i64, 2);
    let closed = (label.i == 1 && is_natural(&(&label.a - &half_n)))
        || (label.i == n && is_natural(&(-&label.a - &half_n)));
    if dominant != closed {
        return Err(Error::Verify(format!(
            "finite-dimensionality criteria disagree at (n,i,a) = ({n},{},{}): dominance says {dominant}, closed form says {closed}",
            label.i,
            rat_str(&label.a)
        )));
    }
    Ok(dominant)
}

// ---------------------------------------------------------------------------
// Verma module states
// ---------------------------------------------------------------------------

/// The value `u · m_λ` in the Verma module `M(λ)`, written on the PBW
/// basis of `U(n⁻)` applied to the highest weight vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VermaState {
    lambda: Weight,
    value: UEElem,
}

impl VermaState {
    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    /// The underlying combination of lowering words (all words consist of
    /// `Low` generators only).
    pub fn value(&self) -> &UEElem {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    /// The coefficient of the highest weight vector itself.
    pub fn scalar_part(&self) -> Rat {
        self.value.coeff(&[])
    }

    /// Is the state a pure multiple of the highest weight vector?
    pub fn is_scalar(&self) -> bool {
        self.value.terms().all(|(w, _)| w.is_empty())
    }
}

/// Act by `u ∈ U(g)` on the highest weight vector of the Verma module
/// `M(λ)`.
pub fn act_on_hwv(u: &UEElem, lambda: &Weight) -> Result<VermaState> {
    let b = ParabolicSpec::borel(u.n())?;
    let value = reduce_mod_ideal(u, &b, lambda)?;
    Ok(VermaState {
        lambda: lambda.clone(),
        value,
    })
}

/// Does `sym(V)·l_λ = 0` hold in the irreducible module `L(λ)`?
///
/// `V` must be a submodule of `ℂ ⊕ g ⊕ S²(g)` under the adjoint action
/// (checked; non-submodules are rejected as [`Error::Invalid`], since for
/// them the criterion below is meaningless).  For an ad-stable `V` the
/// annihilation holds if and only if every zero-weight element of `V`
/// kills `l_λ`: components of nonzero weight either land outside the
/// weights of `L(λ)` or produce singular vectors, which vanish in the
/// irreducible quotient.
pub fn annihilates_hwv(space: &SubspaceBasis, lambda: &Weight) -> Result<bool> {
    let n = space.n();
    if lambda.n() != n {
        return Err(Error::Invalid(format!(
            "weight for sl({}) tested against a space for sl({n})",
            lambda.n()
        )));
    }
    if !space.rows_weight_homogeneous() || !space.is_ad_stable()? {
        return Err(Error::Invalid(
            "annihilates_hwv requires a submodule: the space is not stable under the adjoint action".into(),
        ));
    }
    for e in space.zero_weight_elements() {
        let state = act_on_hwv(&symmetrize(&e)?, lambda)?;
        if !state.is_scalar() {
            return Err(Error::Verify(format!(
                "zero-weight element acted with non-scalar result {} on the highest weight vector",
                state.value()
            )));
        }
        if !state.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// Exact solution of the annihilation conditions
// ---------------------------------------------------------------------------

/// One weight satisfying `sym(F^a)·l_λ = 0`, with the labels `i` for which
/// it equals `λ(i,a)` (empty for the trivial weight when it is not a
/// `λ(i,a)` coincidence).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolvedWeight {
    pub weight: Weight,
    pub labels: Vec<usize>,
    pub finite_dimensional: bool,
}

/// Solution set of the annihilation conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnnihilatorSolutions {
    /// `F^a = 0` (rank `n = 2`): every weight qualifies.
    AllWeights,
    /// The finite solution set, labeled.
    Finite(Vec<SolvedWeight>),
}

/// The scalar by which `sym(T_{r,r}T_{s,s} - T_{r,s}T_{s,r})` acts on a
/// highest weight vector of weight `λ` (for `r < s`):
/// `λ_r λ_s - (λ_r - λ_s)/2`.
fn pair_value(lambda: &Weight, r: usize, s: usize) -> Rat {
    lambda.coord(r) * lambda.coord(s) - (lambda.coord(r) - lambda.coord(s)) * rat(1, 2)
}

/// Do **all** zero-weight annihilation conditions for `F^a` hold at `λ`?
///
/// Family 2 (from `F(e₁-eₙ)^a`, one condition per `1 ≤ i ≤ n-1`):
/// `(λ_{i+1} - λ_i)(λ_{i+1} + λ_i + n/2 - i - a(n-2)/n) = 0`.
///
/// Family 1 (from the zero-weight space of `F(e₁+e₂-e_{n-1}-eₙ)`, empty
/// for `n = 3`, one pair of conditions per `i < j < k < l`):
/// `(λ_j - λ_k)(λ_i - λ_l + 1) = 0` and `(λ_i - λ_j)(λ_k - λ_l) = 0` —
/// equivalently, the three pair sums
/// `v(i,j)+v(k,l), v(i,k)+v(j,l), v(i,l)+v(j,k)` coincide, where `v` is
/// the scalar above.
pub fn weight_satisfies_conditions(n: usize, a: &Rat, lambda: &Weight) -> Result<bool> {
    if lambda.n() != n {
        return Err(Error::Invalid("weight has wrong rank".into()));
    }
    if n == 2 {
        return Ok(true);
    }
    // Family 2.
    let twist = a * rat(n as i64 - 2, n as i64);
    for i in 1..n {
        let diff = lambda.coord(i + 1) - lambda.coord(i);
        let sum = lambda.coord(i + 1) + lambda.coord(i) + rat(n as i64, 2)
            - rint(i as i64)
            - &twist;
        if !(diff * sum).is_zero() {
            return Ok(false);
        }
    }
    // Family 1.
    for i in 1..=n {
        for j in (i + 1)..=n {
            for k in (j + 1)..=n {
                for l in (k + 1)..=n {
                    let c1 = (lambda.coord(j) - lambda.coord(k))
                        * (lambda.coord(i) - lambda.coord(l) + Rat::one());
                    let c2 =
                        (lambda.coord(i) - lambda.coord(j)) * (lambda.coord(k) - lambda.coord(l));
                    if !c1.is_zero() || !c2.is_zero() {
                        return Ok(false);
                    }
                    // Redundant cross-check through the pair-sum form.
                    let s1 = pair_value(lambda, i, j) + pair_value(lambda, k, l);
                    let s2 = pair_value(lambda, i, k) + pair_value(lambda, j, l);
                    let s3 = pair_value(lambda, i, l) + pair_value(lambda, j, k);
                    if s1 != s2 || s2 != s3 {
                        return Err(Error::Verify(
                            "factored and pair-sum forms of the quartic conditions disagree".into(),
                        ));
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Solve exactly for all weights `λ` with `sym(F^a)·l_λ = 0`.
///
/// The `n-1` quadratic conditions of family 2 are products of two affine
/// factors, so the solution variety is enumerated by choosing one factor
/// per position (`2^{n-1}` affine systems); each system has at most one
/// free parameter, and on the residual lines the family-1 conditions (for
/// `n ≥ 4`) factor into affine pieces whose rational roots cut the lines
/// down to points.  Every candidate is then re-verified against the full
/// condition set, de-duplicated, and labeled with the `i` for which it
/// equals `λ(i,a)`.
///
/// For generic `a` the result is `{0} ∪ {λ(i,a) : 1 ≤ i ≤ n}`; the
/// trivial weight satisfies every displayed condition (each first factor
/// vanishes) for every `a`, and coincides with a `λ(i,a)` exactly at
/// `a = ±n/2`.
pub fn solve_annihilator_weights(n: usize, a: &Rat) -> Result<AnnihilatorSolutions> {
    if n < 2 {
        return Err(Error::Invalid(format!("need n >= 2, got n = {n}")));
    }
    if n == 2 {
        return Ok(AnnihilatorSolutions::AllWeights);
    }
    let twist = a * rat(n as i64 - 2, n as i64);
    // Right-hand side of the "sum" factor at position i:
    // λ_i + λ_{i+1} = a(n-2)/n + i - n/2.
    let sum_rhs = |i: usize| -> Rat { &twist + rint(i as i64) - rat(n as i64, 2) };

    let mut candidates: Vec<Weight> = Vec::new();
    let push_candidate = |coords: Vec<Rat>, candidates: &mut Vec<Weight>| -> Result<()> {
        let w = Weight::new(coords)?;
        if weight_satisfies_conditions(n, a, &w)? && !candidates.contains(&w) {
            candidates.push(w);
        }
        Ok(())
    };

    for pattern in 0..(1u32 << (n - 1)) {
        // Rows: one per position, plus the trace; unknowns λ_1..λ_n.
        let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(n);
        let mut rhs: Vec<Rat> = Vec::with_capacity(n);
        for i in 1..n {
            let mut row = vec![Rat::zero(); n];
            if pattern & (1 << (i - 1)) == 0 {
                // First factor: λ_{i+1} - λ_i = 0.
                row[i] = Rat::one();
                row[i - 1] = -Rat::one();
                rhs.push(Rat::zero());
            } else {
                // Second factor: λ_i + λ_{i+1} = rhs.
                row[i - 1] = Rat::one();
                row[i] = Rat::one();
                rhs.push(sum_rhs(i));
            }
            rows.push(row);
        }
        rows.push(vec![Rat::one(); n]);
        rhs.push(Rat::zero());

        match solve_affine(&rows, &rhs, n) {
            AffineSolution::Empty => {}
            AffineSolution::Point(p) => push_candidate(p, &mut candidates)?,
            AffineSolution::Line { point, dir } => {
                for t in line_cut_parameters(n, a, &point, &dir)? {
                    let coords: Vec<Rat> = point
                        .iter()
                        .zip(&dir)
                        .map(|(p, d)| p + d * &t)
                        .collect();
                    push_candidate(coords, &mut candidates)?;
                }
            }
            AffineSolution::Higher { .. } => {
                return Err(Error::Verify(
                    "a factor-choice system left more than one free parameter; the chain structure of the conditions forbids this".into(),
                ));
            }
        }
    }

    // Label and order: λ(i,a) labels ascending, then unlabeled by weight.
    let mut solved: Vec<SolvedWeight> = candidates
        .into_iter()
        .map(|w| {
            let labels: Vec<usize> = (1..=n)
                .filter(|&i| lambda_ia(n, i, a).expect("valid") == w)
                .collect();
            SolvedWeight {
                finite_dimensional: w.is_dominant_integral(),
                weight: w,
                labels,
            }
        })
        .collect();
    solved.sort_by(|x, y| {
        let kx = (x.labels.first().copied().unwrap_or(usize::MAX), &x.weight);
        let ky = (y.labels.first().copied().unwrap_or(usize::MAX), &y.weight);
        kx.cmp(&ky)
    });
    Ok(AnnihilatorSolutions::Finite(solved))
}

/// Parameters `t` at which a residual solution line
/// `λ(t) = point + t·dir` can still satisfy all conditions: the rational
/// roots of the affine factors of the first condition that is not
/// identically zero along the line.  If every condition vanishes
/// identically the line would be a genuine one-parameter solution family,
/// which the structure of the conditions rules out — reported as
/// [`Error::Verify`] rather than silently truncated.
fn line_cut_parameters(
    n: usize,
    a: &Rat,
    point: &[Rat],
    dir: &[Rat],
) -> Result<Vec<Rat>> {
    // An affine function of t: c0 + c1 t.
    let coord = |idx: usize, what: u8| -> Rat {
        match what {
            0 => point[idx - 1].clone(),
            _ => dir[idx - 1].clone(),
        }
    };
    // Build the factor list of every condition along the line.
    let mut conditions: Vec<[(Rat, Rat); 2]> = Vec::new();
    let twist = a * rat(n as i64 - 2, n as i64);
    for i in 1..n {
        let f1 = (
            coord(i + 1, 0) - coord(i, 0),
            coord(i + 1, 1) - coord(i, 1),
        );
        let f2 = (
            coord(i + 1, 0) + coord(i, 0) + rat(n as i64, 2) - rint(i as i64) - &twist,
            coord(i + 1, 1) + coord(i, 1),
        );
        conditions.push([f1, f2]);
    }
    for i in 1..=n {
        for j in (i + 1)..=n {
            for k in (j + 1)..=n {
                for l in (k + 1)..=n {
                    conditions.push([
                        (
                            coord(j, 0) - coord(k, 0),
                            coord(j, 1) - coord(k, 1),
                        ),
                        (
                            coord(i, 0) - coord(l, 0) + Rat::one(),
                            coord(i, 1) - coord(l, 1),
                        ),
                    ]);
                    conditions.push([
                        (
                            coord(i, 0) - coord(j, 0),
                            coord(i, 1) - coord(j, 1),
                        ),
                        (
                            coord(k, 0) - coord(l, 0),
                            coord(k, 1) - coord(l, 1),
                        ),
                    ]);
                }
            }
        }
    }
    // Find the first condition that is not identically zero along the line.
    for [f1, f2] in &conditions {
        let ident_zero =
            |(c0, c1): &(Rat, Rat)| -> bool { c0.is_zero() && c1.is_zero() };
        if ident_zero(f1) || ident_zero(f2) {
            continue;
        }
        let mut roots = Vec::new();
        for (c0, c1) in [f1, f2] {
            if !c1.is_zero() {
                let r = -c0 / c1;
                if !roots.contains(&r) {
                    roots.push(r);
                }
            }
        }
        // Both factors nonzero constants: nothing on this line satisfies.
        return Ok(roots);
    }
    Err(Error::Verify(
        "a residual line satisfies every annihilation condition identically".into(),
    ))
}

// ---------------------------------------------------------------------------
// Casimir scalars
// ---------------------------------------------------------------------------

/// `sym(Ω) ∈ U(g)` for the quadratic Casimir `Ω = Σ T_{i,j}T_{j,i}`.
pub fn casimir_ue(n: usize) -> Result<UEElem> {
    symmetrize(&casimir_element(n)?)
}

/// The Casimir eigenvalue on modules annihilated by `J_a`:
/// `c_a = (n-1)(2a+n)(2a-n)/(4n)`.  Independent of `i` across the family
/// `λ(i,a)`.
pub fn casimir_scalar_formula(n: usize, a: &Rat) -> Result<Rat> {
    if n < 2 {
        return Err(Error::Invalid(format!("need n >= 2, got n = {n}")));
    }
    let two_a = rint(2) * a;
    let nn = rint(n as i64);
    Ok((&nn - Rat::one()) * (&two_a + &nn) * (&two_a - &nn) / (rint(4) * &nn))
}

/// The scalar by which the Casimir acts on a highest weight module
/// `L(λ)`, computed two independent ways:
///
/// 1. the Harish-Chandra value `⟨λ, λ⟩ + 2⟨λ, ρ⟩` in coordinates;
/// 2. reduction of `sym(Ω)` against the highest weight vector of `M(λ)`.
///
/// # Errors
/// [`Error::Verify`] if the two values disagree (they never should) or if
/// the reduction is not a pure scalar.
pub fn casimir_scalar(lambda: &Weight) -> Result<Rat> {
    let n = lambda.n();
    let hc = lambda.pairing(lambda) + rint(2) * lambda.pairing(&crate::liealg::rho(n));
    let state = act_on_hwv(&casimir_ue(n)?, lambda)?;
    if !state.is_scalar() {
        return Err(Error::Verify(format!(
            "Casimir did not act by a scalar on the highest weight vector: {}",
            state.value()
        )));
    }
    let reduced = state.scalar_part();
    if reduced != hc {
        return Err(Error::Verify(format!(
            "Casimir scalar mismatch at λ = {lambda}: Harish-Chandra gives {}, reduction gives {}",
            rat_str(&hc),
            rat_str(&reduced)
        )));
    }
    Ok(hc)
}

// ---------------------------------------------------------------------------
// Generalized Verma modules for the mirabolic parabolics
// ---------------------------------------------------------------------------

/// The canonical character at which `J_a` is tested against the
/// generalized Verma module of `q`: `λ(1,a)` for `q(1,n-1)` and `λ(n,a)`
/// for `q(n-1,1)`.
pub fn gvm_weight(n: usize, a: &Rat, q: &ParabolicSpec) -> Result<Weight> {
    if q.n != n {
        return Err(Error::Invalid("parabolic has wrong rank".into()));
    }
    match q.kind {
        ParabolicKind::Q1 => lambda_ia(n, 1, a),
        ParabolicKind::Qn => lambda_ia(n, n, a),
        ParabolicKind::Borel => Err(Error::Invalid(
            "the generalized Verma check is defined for the parabolics q(1,n-1) and q(n-1,1)".into(),
        )),
    }
}

/// Detailed outcome of a generalized Verma annihilation check.
#[derive(Clone, Debug)]
pub struct GvmCheck {
    pub lambda: Weight,
    /// Residues `sym(v)·m_λ` for each lowest weight vector `v` of `F^a`
    /// (all zero iff the check passes on the `F^a` side).
    pub residues: Vec<UEElem>,
    /// Casimir reduction minus the closed-form scalar `c_a` (zero iff the
    /// Casimir side passes).
    pub casimir_defect: Rat,
    pub ok: bool,
}

/// Does `sym(F^a)` annihilate the highest weight vector of the
/// generalized Verma module `M(q, λ)` at the canonical character, and
/// does the Casimir act there by `c_a = (n-1)(2a+n)(2a-n)/(4n)`?
///
/// Annihilation of the lowest weight vectors of `F^a` suffices for the
/// whole space: `F^a` is generated from them by raising operators, all of
/// which lie in `q`, and `ad_x(v)·m_λ = x·v·m_λ - v·x·m_λ` keeps the
/// highest-weight-vector cyclicity on both sides.
pub fn check_generalized_verma(n: usize, a: &Rat, q: &ParabolicSpec) -> Result<GvmCheck> {
    let lambda = gvm_weight(n, a, q)?;
    check_generalized_verma_at(n, a, q, &lambda)
}

/// The generalized Verma annihilation residues at an explicit weight.
///
/// If `λ` extends to a character of `q`, this is the honest reduction in
/// `M(q, λ)`.  Otherwise `M(q, λ)` does not exist; the residue reported
/// is the component of `sym(v)·m_λ` (in the full Verma module `M(λ)`)
/// along the PBW words of the nilradical opposite to `q` — the exact
/// obstruction to the natural surjection `M(λ) → M(q, λ)` factoring the
/// annihilation.  The Casimir defect is computed in `M(λ)` either way.
pub fn check_generalized_verma_at(
    n: usize,
    a: &Rat,
    q: &ParabolicSpec,
    lambda: &Weight,
) -> Result<GvmCheck> {
    if q.kind == ParabolicKind::Borel {
        return Err(Error::Invalid(
            "the generalized Verma check is defined for the parabolics q(1,n-1) and q(n-1,1)".into(),
        ));
    }
    if q.n != n || lambda.n() != n {
        return Err(Error::Invalid("rank mismatch".into()));
    }
    let honest = q.is_character(lambda);
    let borel = ParabolicSpec::borel(n)?;
    let mut residues = Vec::new();
    for v in fa_lowest_vectors(n, a)? {
        let s = symmetrize(&v)?;
        let r = if honest {
            reduce_mod_ideal(&s, q, lambda)?
        } else {
            project_opposite_nilradical(&reduce_mod_ideal(&s, &borel, lambda)?, q)?
        };
        residues.push(r);
    }
    let cas = act_on_hwv(&casimir_ue(n)?, lambda)?;
    if !cas.is_scalar() {
        return Err(Error::Verify(
            "Casimir did not act by a scalar on the highest weight vector".into(),
        ));
    }
    let casimir_defect = cas.scalar_part() - casimir_scalar_formula(n, a)?;
    let ok = residues.iter().all(UEElem::is_zero) && casimir_defect.is_zero();
    Ok(GvmCheck {
        lambda: lambda.clone(),
        residues,
        casimir_defect,
        ok,
    })
}

/// Keep only the words supported entirely on the nilradical opposite to
/// `q` (the PBW basis directions of `M(q, λ)` inside `M(λ)`).
fn project_opposite_nilradical(u: &UEElem, q: &ParabolicSpec) -> Result<UEElem> {
    UEElem::from_normal_terms(
        u.n(),
        u.terms()
            .filter(|(w, _)| w.iter().all(|&g| q.is_opposite_nilradical(g)))
            .map(|(w, c)| (w.clone(), c.clone())),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::envelope::Gen;
    use crate::rat::rint;

    #[test]
    fn lambda_values_at_small_rank() {
        // n = 3, i = 2: (-1/2 - a/3, 2a/3, 1/2 - a/3) at a = 1.
        let w = lambda_ia(3, 2, &rint(1)).unwrap();
        assert_eq!(
            w,
            Weight::new(vec![rat(-5, 6), rat(2, 3), rat(1, 6)]).unwrap()
        );
        // n = 2, i = 1: ((a-1)/2, (1-a)/2).
        let w = lambda_ia(2, 1, &rint(3)).unwrap();
        assert_eq!(w, Weight::new(vec![rint(1), rint(-1)]).unwrap());
        // λ(1, n/2) = 0.
        let w = lambda_ia(4, 1, &rint(2)).unwrap();
        assert!(w.is_zero());
    }

    #[test]
    fn coincidence_exactly_at_a_eq_half_n_minus_i() {
        for n in 2..=5 {
            for i in 1..n {
                let critical = rat(n as i64, 2) - rint(i as i64);
                for da in [-1i64, 0, 1] {
                    let a = &critical + rint(da);
                    let equal =
                        lambda_ia(n, i, &a).unwrap() == lambda_ia(n, i + 1, &a).unwrap();
                    assert_eq!(equal, da == 0, "n={n} i={i} da={da}");
                }
            }
        }
    }

    #[test]
    fn casimir_scalar_examples() {
        // λ(2,0) at n = 3 gives -3/2; formula value for n=3 any i.
        let w = lambda_ia(3, 2, &rint(0)).unwrap();
        assert_eq!(casimir_scalar(&w).unwrap(), rat(-3, 2));
        assert_eq!(
            casimir_scalar_formula(3, &rint(0)).unwrap(),
            rat(-3, 2)
        );
        // n = 2: (a²-1)/2 = 4 at a = 3.
        assert_eq!(casimir_scalar_formula(2, &rint(3)).unwrap(), rint(4));
        let w = lambda_ia(2, 1, &rint(3)).unwrap();
        assert_eq!(casimir_scalar(&w).unwrap(), rint(4));
    }

    #[test]
    fn verma_action_basics() {
        let lam = Weight::new(vec![rat(1, 2), rat(-1, 2)]).unwrap();
        let f = UEElem::generator(2, Gen::Low(2, 1)).unwrap();
        let st = act_on_hwv(&f, &lam).unwrap();
        assert!(!st.is_zero());
        assert_eq!(st.value().coeff(&[Gen::Low(2, 1)]), rint(1));
        let e = UEElem::generator(2, Gen::Rai(1, 2)).unwrap();
        assert!(act_on_hwv(&e, &lam).unwrap().is_zero());
    }

    #[test]
    fn solver_handles_coincidences_and_residual_lines() {
        // n = 4, a = 1: λ(1,1) = λ(2,1); solution set is the trivial
        // weight plus three distinct λ(i,1).
        let AnnihilatorSolutions::Finite(sols) =
            solve_annihilator_weights(4, &rint(1)).unwrap()
        else {
            panic!("n = 4 must have a finite solution set")
        };
        assert_eq!(sols.len(), 4);
        let labels: Vec<Vec<usize>> = sols.iter().map(|s| s.labels.clone()).collect();
        assert_eq!(labels, vec![vec![1, 2], vec![3], vec![4], vec![]]);
        assert!(sols[3].weight.is_zero());

        // n = 4, a = 0: two of the factor-choice systems degenerate to
        // lines; the quartic conditions must cut them back down.
        let AnnihilatorSolutions::Finite(sols) =
            solve_annihilator_weights(4, &rint(0)).unwrap()
        else {
            panic!()
        };
        assert_eq!(sols.len(), 4);
        let labels: Vec<Vec<usize>> = sols.iter().map(|s| s.labels.clone()).collect();
        assert_eq!(labels, vec![vec![1], vec![2, 3], vec![4], vec![]]);

        // n = 5, a = 5/2: the trivial weight *is* λ(1, n/2).
        let AnnihilatorSolutions::Finite(sols) =
            solve_annihilator_weights(5, &rat(5, 2)).unwrap()
        else {
            panic!()
        };
        assert_eq!(sols.len(), 5);
        assert_eq!(sols[0].labels, vec![1]);
        assert!(sols[0].weight.is_zero());
        assert!(sols.iter().all(|s| !s.labels.is_empty()));
    }

    #[test]
    fn finite_dimensionality_cross_checks() {
        assert!(is_finite_dimensional(&HWLabel::new(3, 1, rat(3, 2)).unwrap()).unwrap());
        assert!(!is_finite_dimensional(&HWLabel::new(3, 2, rint(5)).unwrap()).unwrap());
        assert!(is_finite_dimensional(&HWLabel::new(4, 4, rint(-2)).unwrap()).unwrap());
        assert!(!is_finite_dimensional(&HWLabel::new(4, 1, rat(5, 2)).unwrap()).unwrap());
    }
}
