//! # minrep
//!
//! Exact-arithmetic toolkit for a one-parameter family of quadratic ideals
//! `J_a` in the universal enveloping algebra of `sl(n, ℂ)` and for the
//! small unitary representations of `SU(p,q)` and `SL(n, ℝ)` that these
//! ideals annihilate.
//!
//! Everything is computed over ℚ with arbitrary-precision rationals — no
//! floating point, no tolerances.  The main capabilities, bottom to top:
//!
//! * [`liealg`] — the Lie algebra `sl(n, ℂ)` on the traceless basis
//!   `T_{i,j} = E_{i,j} - δ_{i,j}/n · I`: brackets, the trace form, roots,
//!   `ρ`, and the Weyl dimension formula.
//! * [`linalg`] — exact sparse echelon bases and affine solving over ℚ,
//!   generic over ordered key types.
//! * [`symdecomp`] — the symmetric square `S²(g)`: its decomposition into
//!   irreducibles, the Casimir element, the family of submodules `F^a`,
//!   highest/lowest weight vectors, and a positive definite invariant
//!   pairing.
//! * [`envelope`] — the enveloping algebra `U(g)` in PBW normal form:
//!   normal ordering, symmetrization `S²(g) → U(g)`, the antiautomorphism
//!   `ι`, and reduction modulo the defining ideal of a (generalized) Verma
//!   module.
//! * [`verma`] — highest weight modules: the weights `λ(i,a)`, the exact
//!   solver for which `L(λ)` are annihilated by `sym(F^a)`, the Casimir
//!   eigenvalue computed two independent ways, and annihilation checks on
//!   generalized Verma modules for the mirabolic parabolics.
//! * [`classify`] — the classification of irreducible unitary
//!   representations with minimal annihilator for `su(p,q)` and
//!   `sl(n, ℝ)`, with explicit K-type pencils and ladders.
//! * [`sl3kernel`] — the `sl(3, ℝ)` model: the order-two differential
//!   operator on `O(2)`-isotypic components, its polynomial kernels, their
//!   hypergeometric closed form, and the bridge back to the weights
//!   `λ(2, -a)`.
//! * [`report`] — structured pass/fail reports behind the `minrep` binary
//!   (one subcommand per capability, JSON or text output).
//!
//! Each capability also has a runnable demonstration under `examples/`;
//! see the crate README for the map.

pub mod classify;
pub mod envelope;
pub mod liealg;
pub mod linalg;
pub mod rat;
pub mod report;
pub mod sl3kernel;
pub mod symdecomp;
pub mod verma;

/// Errors reported by the library.
///
/// `Invalid` covers violated preconditions (bad sizes, out-of-domain
/// parameters, non-character weights, spaces that are not submodules).
/// `Verify` marks an internal cross-check that failed — two independent
/// computations of the same quantity disagreed — and always indicates a
/// defect, never bad input.  `Resource` is returned when a request exceeds
/// a configured exact-arithmetic bound instead of silently degrading.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A precondition on the input was violated.
    #[error("invalid input: {0}")]
    Invalid(String),
    /// A string could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
    /// The request exceeds a configured size bound.
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    /// An internal consistency check failed.
    #[error("verification failure: {0}")]
    Verify(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
