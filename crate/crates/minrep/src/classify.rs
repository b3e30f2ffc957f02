//! Classification of the irreducible unitary representations of
//! `SU(p,q)` and `SL(n,ℝ)` whose annihilator is `J_a`, together with
//! their K-types.
//!
//! For `su(p,q)` (`p + q = n ≥ 3`) the representations come in two kinds:
//! highest weight modules `L(λ(i,a))` and duals of lowest weight modules
//! `L(λ(i,-a))^∨`, with `i` pinned near the block boundary and explicit
//! membership conditions on `a`.  Each certificate carries a K-type
//! pencil: the K-types are multiplicity free and lie on a single ray
//! `μ₀ + ℕ·step`.
//!
//! For `sl(n,ℝ)` (`n ≥ 3`) there are two spherical-type representations
//! built from even/odd harmonics `H^k(ℝⁿ)` with the finite exceptional
//! set `Z(a) = {k ∈ ℕ : |a| - n/2 - k ∈ 2ℕ}` removed, plus — only for
//! `n = 3` and integral `a` — a genuine representation of the double
//! cover with `SO(3)`-types of dimension `2|a| + 1 + 4k`.
//!
//! Counting certificates reproduces the summary table:
//!
//! ```text
//! su(p,1), su(1,q)        2 for every a
//! su(p,q), p,q ≥ 2        2 if a ∈ (p+q)/2 + ℤ, else 0
//! sl(3,ℝ)                 3 if a ∈ ℤ, else 2
//! sl(n,ℝ), n ≥ 4          2 for every a
//! ```

use crate::liealg::Weight;
use crate::rat::{is_natural, rat, rat_str, rint, Rat};
use crate::verma::lambda_ia;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

// ---------------------------------------------------------------------------
// Parameters and real forms
// ---------------------------------------------------------------------------

/// The deformation parameter `a`, either an explicit rational or a marker
/// for non-real values (where only membership-free clauses can fire).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AParam {
    Rational(Rat),
    /// `a ∉ ℝ`: every membership in a shifted copy of ℕ is false.
    NonReal,
}

impl AParam {
    pub fn rational(&self) -> Option<&Rat> {
        match self {
            AParam::Rational(r) => Some(r),
            AParam::NonReal => None,
        }
    }

    /// Is `a ∈ offset + ℕ` (`sign = +1`) or `a ∈ offset - ℕ` (`sign = -1`)?
    fn in_shifted_naturals(&self, offset: &Rat, sign: i64) -> bool {
        match self {
            AParam::NonReal => false,
            AParam::Rational(a) => {
                let delta = if sign >= 0 { a - offset } else { offset - a };
                is_natural(&delta)
            }
        }
    }
}

impl fmt::Display for AParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AParam::Rational(r) => write!(f, "{}", rat_str(r)),
            AParam::NonReal => write!(f, "nonreal"),
        }
    }
}

/// A real form of `sl(n, ℂ)` covered by the classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RealFormSpec {
    /// `su(p, q)`, `p + q ≥ 3`.
    Su { p: usize, q: usize },
    /// `sl(n, ℝ)`, `n ≥ 3`.
    SlR { n: usize },
}

impl RealFormSpec {
    pub fn su(p: usize, q: usize) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::Invalid("su(p,q) needs p, q >= 1".into()));
        }
        if p + q < 3 {
            return Err(Error::Invalid(
                "su(1,1) is outside the classification: its quadratic family degenerates (rank one has F^a = 0)".into(),
            ));
        }
        Ok(RealFormSpec::Su { p, q })
    }

    pub fn sl_r(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Invalid(
                "sl(2,R) is outside the classification: rank one has F^a = 0".into(),
            ));
        }
        Ok(RealFormSpec::SlR { n })
    }

    /// Rank of the complexification.
    pub fn n(&self) -> usize {
        match *self {
            RealFormSpec::Su { p, q } => p + q,
            RealFormSpec::SlR { n } => n,
        }
    }
}

impl fmt::Display for RealFormSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            RealFormSpec::Su { p, q } => write!(f, "su({p},{q})"),
            RealFormSpec::SlR { n } => write!(f, "sl({n},R)"),
        }
    }
}

/// The long Weyl group element of `K = S(U(p) × U(q))` acting on weight
/// coordinates: reversal within the first `p` and the last `q` entries.
pub fn w_l(p: usize, q: usize, w: &Weight) -> Result<Weight> {
    if w.n() != p + q {
        return Err(Error::Invalid("weight has wrong rank for w_l".into()));
    }
    let mut coords: Vec<Rat> = w.coords().to_vec();
    coords[..p].reverse();
    coords[p..].reverse();
    Weight::new(coords)
}

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

/// What kind of representation a certificate describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CertKind {
    /// An irreducible highest weight module `L(λ(i,a))`.
    HighestWeight,
    /// The dual `L(λ(i,-a))^∨` of a lowest weight module.
    DualLowest,
    /// Even-harmonic principal series piece (`sl(n,ℝ)` only).
    PrincipalSeriesTrivial,
    /// Odd-harmonic principal series piece (`sl(n,ℝ)` only).
    PrincipalSeriesSign,
    /// The genuine double-cover representation (`sl(3,ℝ)`, `a ∈ ℤ`).
    Genuine,
}

impl fmt::Display for CertKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CertKind::HighestWeight => "highest-weight",
            CertKind::DualLowest => "dual-lowest",
            CertKind::PrincipalSeriesTrivial => "principal-series-trivial",
            CertKind::PrincipalSeriesSign => "principal-series-sign",
            CertKind::Genuine => "genuine",
        };
        write!(f, "{s}")
    }
}

/// A ray of K-types `μ₀ + ℕ·step`, multiplicity free.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KTypePencil {
    pub mu0: Weight,
    pub step: Weight,
}

/// One representation with annihilator `J_a`, with enough data to name it
/// and to enumerate its K-types.
#[derive(Clone, Debug)]
pub struct MinimalCert {
    pub form: RealFormSpec,
    pub a: AParam,
    pub kind: CertKind,
    /// For `su(p,q)` certificates, the indices `i` (merged when
    /// `λ(i,a) = λ(i+1,a)` makes two clauses name the same module).
    pub labels: Vec<usize>,
    /// `λ(i,a)` for highest weight certificates, `λ(i,-a)` for duals.
    pub weight: Option<Weight>,
    /// K-type ray for `su(p,q)` certificates with rational `a`.
    pub pencil: Option<KTypePencil>,
    /// The membership conditions on `a` that fired.
    pub conditions: Vec<String>,
}

impl MinimalCert {
    /// Human-readable module name, e.g. `L(λ(2,1/2))` or `L(λ(3,-2))^v`.
    pub fn name(&self) -> String {
        match self.kind {
            CertKind::HighestWeight => {
                let i = label_string(&self.labels);
                format!("L(λ({i},{}))", self.a)
            }
            CertKind::DualLowest => {
                let i = label_string(&self.labels);
                let neg = match &self.a {
                    AParam::Rational(r) => rat_str(&-r),
                    AParam::NonReal => "-a".to_string(),
                };
                format!("L(λ({i},{neg}))^v")
            }
            CertKind::PrincipalSeriesTrivial => "PS(triv)".to_string(),
            CertKind::PrincipalSeriesSign => "PS(sgn)".to_string(),
            CertKind::Genuine => format!("Genuine({})", self.a),
        }
    }
}

fn label_string(labels: &[usize]) -> String {
    labels
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join("=")
}

// ---------------------------------------------------------------------------
// su(p,q)
// ---------------------------------------------------------------------------

struct SuClause {
    kind: CertKind,
    i: usize,
    fires: bool,
    condition: String,
}

fn su_clauses(p: usize, q: usize, a: &AParam) -> Vec<SuClause> {
    let n = (p + q) as i64;
    let half = |num: i64| rat(num, 2);
    let mem = |offset: Rat, sign: i64| a.in_shifted_naturals(&offset, sign);
    let fmt_set = |offset: &Rat, sign: i64| {
        format!(
            "{} {} {}",
            rat_str(offset),
            if sign >= 0 { "+" } else { "-" },
            "N"
        )
    };
    let mut clauses = Vec::new();
    let mut push = |kind: CertKind, i: usize, inside: bool, offset: Rat, sign: i64| {
        let is_member = mem(offset.clone(), sign);
        let fires = if inside { is_member } else { !is_member };
        let condition = format!(
            "a {} {}",
            if inside { "in" } else { "not in" },
            fmt_set(&offset, sign)
        );
        clauses.push(SuClause {
            kind,
            i,
            fires,
            condition,
        });
    };
    if p == 1 {
        push(CertKind::HighestWeight, 1, false, half(n), 1);
        push(CertKind::DualLowest, 1, false, half(-n), -1);
        push(CertKind::HighestWeight, 2, true, half(n - 2), 1);
        push(CertKind::DualLowest, 2, true, half(2 - n), -1);
    } else if q == 1 {
        push(CertKind::HighestWeight, p + q, false, half(-n), -1);
        push(CertKind::DualLowest, p + q, false, half(n), 1);
        push(CertKind::HighestWeight, p + q - 1, true, half(2 - n), -1);
        push(CertKind::DualLowest, p + q - 1, true, half(n - 2), 1);
    } else {
        let d = p as i64 - q as i64;
        push(CertKind::HighestWeight, p, true, half(-d), -1);
        push(CertKind::DualLowest, p, true, half(d), 1);
        push(CertKind::HighestWeight, p + 1, true, half(-d), 1);
        push(CertKind::DualLowest, p + 1, true, half(d), -1);
    }
    clauses
}

/// Is `w` dominant integral for `K = S(U(p) × U(q))`: are the consecutive
/// differences within each block nonnegative integers?
pub fn is_k_dominant(p: usize, q: usize, w: &Weight) -> Result<bool> {
    if w.n() != p + q {
        return Err(Error::Invalid("weight has wrong rank".into()));
    }
    let ok_block = |lo: usize, hi: usize| {
        (lo..hi).all(|i| is_natural(&(w.coord(i) - w.coord(i + 1))))
    };
    Ok(ok_block(1, p) && ok_block(p + 1, p + q))
}

/// Classify the irreducible unitary representations of `SU(p,q)` with
/// annihilator `J_a`.
///
/// Certificates whose defining clauses name the same module (same kind,
/// same underlying weight — this happens exactly at the coincidence
/// parameters `λ(i,a) = λ(i+1,a)`) are merged, so the length of the
/// result is the multiplicity-free count of the summary table.  Every
/// returned K-type pencil starts at a K-dominant weight; a violation
/// would mean the clause table is wrong and is reported as
/// [`Error::Verify`].
pub fn classify_su(p: usize, q: usize, a: &AParam) -> Result<Vec<MinimalCert>> {
    let form = RealFormSpec::su(p, q)?;
    let n = p + q;
    let mut certs: Vec<MinimalCert> = Vec::new();
    for clause in su_clauses(p, q, a) {
        if !clause.fires {
            continue;
        }
        let (weight, pencil) = match a.rational() {
            None => (None, None),
            Some(ar) => {
                match clause.kind {
                    CertKind::HighestWeight => {
                        let lam = lambda_ia(n, clause.i, ar)?;
                        // K-types: λ(i,a) + N·(-e_p + e_{p+1}).
                        let step = Weight::root(n, p + 1, p);
                        (Some(lam.clone()), Some(KTypePencil { mu0: lam, step }))
                    }
                    CertKind::DualLowest => {
                        let lam = lambda_ia(n, clause.i, &-ar)?;
                        // K-types: -w_l·λ(i,-a) + N·(e_1 - e_n).
                        let mu0 = w_l(p, q, &lam)?.neg();
                        let step = Weight::root(n, 1, n);
                        (Some(lam), Some(KTypePencil { mu0, step }))
                    }
                    _ => unreachable!("su clauses are hw/dual only"),
                }
            }
        };
        if let Some(pc) = &pencil {
            if !is_k_dominant(p, q, &pc.mu0)? {
                return Err(Error::Verify(format!(
                    "certificate {} of {form} at a = {a} starts at a non-K-dominant weight {}",
                    clause.kind, pc.mu0
                )));
            }
        }
        // Merge with an existing certificate of the same kind and weight.
        if let (Some(w), Some(existing)) = (
            weight.as_ref(),
            certs.iter_mut().find(|c| {
                c.kind == clause.kind && c.weight.as_ref() == weight.as_ref()
            }),
        ) {
            let _ = w;
            if !existing.labels.contains(&clause.i) {
                existing.labels.push(clause.i);
                existing.labels.sort_unstable();
            }
            existing.conditions.push(clause.condition);
            continue;
        }
        certs.push(MinimalCert {
            form,
            a: a.clone(),
            kind: clause.kind,
            labels: vec![clause.i],
            weight,
            pencil,
            conditions: vec![clause.condition],
        });
    }
    certs.sort_by(|x, y| {
        (x.kind, x.labels.first()).cmp(&(y.kind, y.labels.first()))
    });
    Ok(certs)
}

/// The first `count` K-types of an `su(p,q)` certificate, walking its
/// pencil.  Every weight is verified to be K-dominant.
///
/// # Errors
/// Certificates without a pencil (non-real `a`, or `sl(n,ℝ)`
/// certificates) are rejected.
pub fn ktypes_su(cert: &MinimalCert, count: usize) -> Result<Vec<Weight>> {
    let RealFormSpec::Su { p, q } = cert.form else {
        return Err(Error::Invalid(
            "ktypes_su needs an su(p,q) certificate".into(),
        ));
    };
    let Some(pencil) = &cert.pencil else {
        return Err(Error::Invalid(
            "certificate carries no K-type pencil (non-real parameter)".into(),
        ));
    };
    let mut out = Vec::with_capacity(count);
    let mut mu = pencil.mu0.clone();
    for _ in 0..count {
        if !is_k_dominant(p, q, &mu)? {
            return Err(Error::Verify(format!(
                "pencil left the K-dominant cone at {mu}"
            )));
        }
        out.push(mu.clone());
        mu = mu.add(&pencil.step);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// sl(n,R)
// ---------------------------------------------------------------------------

/// The exceptional set `Z(a) = {k ∈ ℕ : |a| - n/2 - k ∈ 2ℕ}`, listed up
/// to `bound` inclusive.  Empty unless `|a| - n/2` is a nonnegative
/// integer, so in particular finite.
pub fn z_set(n: usize, a: &Rat, bound: usize) -> Result<Vec<usize>> {
    if n < 3 {
        return Err(Error::Invalid(format!("need n >= 3, got n = {n}")));
    }
    let abs_a = a.abs();
    let mut out = Vec::new();
    for k in 0..=bound {
        let d = &abs_a - rat(n as i64, 2) - rint(k as i64);
        if d.is_integer() && !d.is_negative() && (d / rint(2)).is_integer() {
            out.push(k);
        }
    }
    Ok(out)
}

/// Classify the irreducible unitary representations of `SL(n,ℝ)` (its
/// double cover for the genuine piece) with annihilator `J_a`: the two
/// harmonic principal-series pieces always, plus the genuine
/// representation exactly for `n = 3` with integral `a`.
pub fn classify_slnr(n: usize, a: &AParam) -> Result<Vec<MinimalCert>> {
    let form = RealFormSpec::sl_r(n)?;
    let z_desc = match a.rational() {
        Some(ar) => format!("{:?}", z_set(n, ar, z_bound(ar))?),
        None => "[]".to_string(),
    };
    let mut certs = vec![
        MinimalCert {
            form,
            a: a.clone(),
            kind: CertKind::PrincipalSeriesTrivial,
            labels: vec![],
            weight: None,
            pencil: None,
            conditions: vec![format!(
                "K-types: H^k for even k outside Z(a) = {z_desc}"
            )],
        },
        MinimalCert {
            form,
            a: a.clone(),
            kind: CertKind::PrincipalSeriesSign,
            labels: vec![],
            weight: None,
            pencil: None,
            conditions: vec![format!(
                "K-types: H^k for odd k outside Z(a) = {z_desc}"
            )],
        },
    ];
    if n == 3 {
        if let Some(ar) = a.rational() {
            if ar.is_integer() {
                certs.push(MinimalCert {
                    form,
                    a: a.clone(),
                    kind: CertKind::Genuine,
                    labels: vec![],
                    weight: None,
                    pencil: None,
                    conditions: vec![
                        "a in Z: genuine double-cover representation with SO(3)-types of dimension 2|a|+1+4k".into(),
                    ],
                });
            }
        }
    }
    Ok(certs)
}

/// A bound past which `Z(a)` is provably empty: `k ∈ Z(a)` forces
/// `k ≤ |a| - n/2 ≤ |a|`.
fn z_bound(a: &Rat) -> usize {
    let abs_a = a.abs();
    if abs_a.is_integer() {
        abs_a
            .to_integer()
            .try_into()
            .unwrap_or(usize::MAX)
    } else {
        abs_a.ceil().to_integer().try_into().unwrap_or(usize::MAX)
    }
}

/// The first `count` K-type degrees of an `sl(n,ℝ)` certificate:
/// harmonic degrees `k` (even or odd, skipping `Z(a)`) for the principal
/// series pieces, and the `SO(3)`-type dimensions `2|a| + 1 + 4k` for the
/// genuine piece.
pub fn ktypes_slnr(cert: &MinimalCert, count: usize) -> Result<Vec<usize>> {
    let RealFormSpec::SlR { n } = cert.form else {
        return Err(Error::Invalid(
            "ktypes_slnr needs an sl(n,R) certificate".into(),
        ));
    };
    match cert.kind {
        CertKind::PrincipalSeriesTrivial | CertKind::PrincipalSeriesSign => {
            let z: Vec<usize> = match cert.a.rational() {
                Some(ar) => z_set(n, ar, z_bound(ar))?,
                None => Vec::new(),
            };
            let parity = if cert.kind == CertKind::PrincipalSeriesTrivial {
                0
            } else {
                1
            };
            let mut out = Vec::with_capacity(count);
            let mut k = parity;
            while out.len() < count {
                if !z.contains(&k) {
                    out.push(k);
                }
                k += 2;
            }
            Ok(out)
        }
        CertKind::Genuine => {
            let Some(ar) = cert.a.rational() else {
                return Err(Error::Invalid("genuine certificate needs rational a".into()));
            };
            if !ar.is_integer() {
                return Err(Error::Invalid("genuine certificate needs integral a".into()));
            }
            let two_abs: usize = (ar.abs() * rint(2))
                .to_integer()
                .try_into()
                .map_err(|_| Error::Invalid("parameter too large".into()))?;
            Ok((0..count).map(|k| two_abs + 1 + 4 * k).collect())
        }
        _ => Err(Error::Invalid(
            "certificate kind has no sl(n,R) K-type ladder".into(),
        )),
    }
}

/// Dimension of the degree-`k` harmonic polynomials on `ℝⁿ`:
/// `C(n+k-1, n-1) - C(n+k-3, n-1)`.
pub fn harmonic_dim(n: usize, k: usize) -> BigInt {
    binomial(n + k - 1, n - 1) - binomial((n + k).saturating_sub(3), n - 1)
}

/// Binomial coefficient with the convention `C(m, r) = 0` for `m < r`.
pub fn binomial(m: usize, r: usize) -> BigInt {
    if m < r {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for t in 0..r {
        num *= BigInt::from(m - t);
        den *= BigInt::from(t + 1);
    }
    num / den
}

// ---------------------------------------------------------------------------
// Table-level queries
// ---------------------------------------------------------------------------

/// Number of irreducible unitary representations with annihilator `J_a`
/// for the given real form — one call per cell of the summary table.
pub fn table1_count(form: &RealFormSpec, a: &AParam) -> Result<usize> {
    match *form {
        RealFormSpec::Su { p, q } => Ok(classify_su(p, q, a)?.len()),
        RealFormSpec::SlR { n } => Ok(classify_slnr(n, a)?.len()),
    }
}

/// Does the `K`-weight `μ` lie in the lattice of K-types available to
/// `SL(n,ℝ)` spherical-type constructions: `μ ∈ ℕ·ψ/2` for `n ≥ 4` and
/// `μ ∈ ℕ·ψ/4` for `n = 3`, where `ψ = e₁ - eₙ`?
///
/// # Errors
/// Only `sl(n,ℝ)` forms are accepted.
pub fn lattice_check(form: &RealFormSpec, mu: &Weight) -> Result<bool> {
    let RealFormSpec::SlR { n } = *form else {
        return Err(Error::Invalid(
            "the K-type lattice check applies to sl(n,R) only".into(),
        ));
    };
    if mu.n() != n {
        return Err(Error::Invalid("weight has wrong rank".into()));
    }
    // μ must be c·(e1 - en) with c ≥ 0.
    let c = mu.coord(1).clone();
    if c.is_negative() {
        return Ok(false);
    }
    let mut expected = vec![Rat::zero(); n];
    expected[0] = c.clone();
    expected[n - 1] = -c.clone();
    if mu.coords() != expected.as_slice() {
        return Ok(false);
    }
    let denom = if n == 3 { rint(4) } else { rint(2) };
    Ok((c * denom).is_integer())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ap(p: i64, q: i64) -> AParam {
        AParam::Rational(rat(p, q))
    }

    #[test]
    fn su21_merges_dual_certificates_at_half() {
        // su(2,1), a = 1/2: λ(2,-1/2) = λ(3,-1/2) merges the two dual
        // clauses; the count stays 2.
        let certs = classify_su(2, 1, &ap(1, 2)).unwrap();
        assert_eq!(certs.len(), 2);
        let dual = certs
            .iter()
            .find(|c| c.kind == CertKind::DualLowest)
            .unwrap();
        assert_eq!(dual.labels, vec![2, 3]);
    }

    #[test]
    fn su_counts_match_the_table() {
        // su(2,2): 2 iff a ∈ 2 + Z.
        assert_eq!(table1_count(&RealFormSpec::su(2, 2).unwrap(), &ap(0, 1)).unwrap(), 2);
        assert_eq!(table1_count(&RealFormSpec::su(2, 2).unwrap(), &ap(-3, 1)).unwrap(), 2);
        assert_eq!(table1_count(&RealFormSpec::su(2, 2).unwrap(), &ap(1, 3)).unwrap(), 0);
        assert_eq!(table1_count(&RealFormSpec::su(2, 2).unwrap(), &ap(7, 2)).unwrap(), 0);
        // su(3,2): half-integers are in the lattice (p+q)/2 + Z.
        assert_eq!(table1_count(&RealFormSpec::su(3, 2).unwrap(), &ap(7, 2)).unwrap(), 2);
        assert_eq!(table1_count(&RealFormSpec::su(3, 2).unwrap(), &ap(0, 1)).unwrap(), 0);
        // su(p,1): always 2, including nonreal.
        assert_eq!(table1_count(&RealFormSpec::su(3, 1).unwrap(), &ap(-3, 1)).unwrap(), 2);
        assert_eq!(
            table1_count(&RealFormSpec::su(3, 1).unwrap(), &AParam::NonReal).unwrap(),
            2
        );
        // su(2,2) nonreal: 0.
        assert_eq!(
            table1_count(&RealFormSpec::su(2, 2).unwrap(), &AParam::NonReal).unwrap(),
            0
        );
    }

    #[test]
    fn slnr_counts_match_the_table() {
        assert_eq!(table1_count(&RealFormSpec::sl_r(3).unwrap(), &ap(2, 1)).unwrap(), 3);
        assert_eq!(table1_count(&RealFormSpec::sl_r(3).unwrap(), &ap(1, 3)).unwrap(), 2);
        assert_eq!(table1_count(&RealFormSpec::sl_r(3).unwrap(), &AParam::NonReal).unwrap(), 2);
        assert_eq!(table1_count(&RealFormSpec::sl_r(5).unwrap(), &ap(2, 1)).unwrap(), 2);
    }

    #[test]
    fn z_set_examples() {
        assert_eq!(z_set(4, &rint(6), 10).unwrap(), vec![0, 2, 4]);
        assert_eq!(z_set(3, &rint(0), 10).unwrap(), Vec::<usize>::new());
        assert_eq!(z_set(3, &rat(7, 2), 10).unwrap(), vec![0, 2]);
        assert_eq!(z_set(4, &rint(5), 10).unwrap(), vec![1, 3]);
    }

    #[test]
    fn slnr_ktype_ladders() {
        let certs = classify_slnr(3, &ap(0, 1)).unwrap();
        let triv = &certs[0];
        assert_eq!(ktypes_slnr(triv, 4).unwrap(), vec![0, 2, 4, 6]);
        let certs = classify_slnr(4, &ap(6, 1)).unwrap();
        assert_eq!(ktypes_slnr(&certs[0], 4).unwrap(), vec![6, 8, 10, 12]);
        let certs = classify_slnr(3, &ap(1, 1)).unwrap();
        let genuine = certs
            .iter()
            .find(|c| c.kind == CertKind::Genuine)
            .unwrap();
        assert_eq!(ktypes_slnr(genuine, 3).unwrap(), vec![3, 7, 11]);
    }

    #[test]
    fn harmonic_dims() {
        // On R^3: 1, 3, 5, 7, ...
        for k in 0..5 {
            assert_eq!(harmonic_dim(3, k), BigInt::from(2 * k + 1));
        }
        // On R^4: (k+1)^2.
        for k in 0..5 {
            assert_eq!(harmonic_dim(4, k), BigInt::from((k + 1) * (k + 1)));
        }
    }

    #[test]
    fn lattice_membership() {
        let f3 = RealFormSpec::sl_r(3).unwrap();
        let f4 = RealFormSpec::sl_r(4).unwrap();
        let psi_over = |n: usize, den: i64, num: i64| {
            let mut c = vec![Rat::zero(); n];
            c[0] = rat(num, den);
            c[n - 1] = rat(-num, den);
            Weight::new(c).unwrap()
        };
        assert!(lattice_check(&f3, &Weight::zero(3)).unwrap());
        assert!(lattice_check(&f3, &psi_over(3, 4, 3)).unwrap());
        assert!(!lattice_check(&f4, &psi_over(4, 4, 1)).unwrap());
        assert!(lattice_check(&f4, &psi_over(4, 2, 1)).unwrap());
        assert!(lattice_check(&f4, &psi_over(4, 1, 2)).unwrap());
        assert!(!lattice_check(&f4, &psi_over(4, 2, -1)).unwrap());
        assert!(lattice_check(&RealFormSpec::su(2, 1).unwrap(), &Weight::zero(3)).is_err());
    }
}
