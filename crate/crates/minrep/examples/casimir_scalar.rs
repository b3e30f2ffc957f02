//! Compute the Casimir eigenvalue on `L(λ(i,a))` two independent ways
//! and compare with the closed form `c_a = (n-1)(2a+n)(2a-n) / (4n)`.
//!
//! Path one is symbolic: `(λ, λ + 2ρ)` in coordinates.  Path two is
//! algebraic: the Casimir element `Σ T_{i,j}T_{j,i} - (scalar)` of
//! `U(sl(n))` is put in PBW normal form and reduced modulo the ideal
//! that defines the Verma module `M(λ)`, which leaves the scalar by
//! which it acts on the highest weight vector.  Both must equal `c_a`
//! for every `i`, since `c_a` does not depend on `i` — the whole family
//! `λ(1,a), …, λ(n,a)` sits on one infinitesimal character.
//!
//! Run with: `cargo run --example casimir_scalar`

use minrep::envelope::{reduce_mod_ideal, ParabolicSpec};
use minrep::rat::{parse_rat, rat_str};
use minrep::verma::{casimir_scalar, casimir_scalar_formula, casimir_ue, lambda_ia};

fn main() -> minrep::Result<()> {
    for (n, a_str) in [(3, "0"), (3, "2"), (4, "-3/2"), (5, "1/3")] {
        let a = parse_rat(a_str)?;
        let closed = casimir_scalar_formula(n, &a)?;
        println!(
            "n = {n}, a = {}:   c_a = (n-1)(2a+n)(2a-n)/(4n) = {}",
            rat_str(&a),
            rat_str(&closed)
        );

        let omega = casimir_ue(n)?;
        let borel = ParabolicSpec::borel(n)?;
        for i in 1..=n {
            let lambda = lambda_ia(n, i, &a)?;
            let symbolic = casimir_scalar(&lambda)?;
            let reduced = reduce_mod_ideal(&omega, &borel, &lambda)?;
            assert!(
                reduced.degree() == 0,
                "Casimir must reduce to a scalar on the highest weight vector"
            );
            let algebraic = reduced.coeff(&[]);
            assert_eq!(symbolic, closed);
            assert_eq!(algebraic, closed);
            println!(
                "  λ({i},{}) = {}   (λ, λ+2ρ) = {}   Ω·v_λ = {}·v_λ",
                rat_str(&a),
                lambda,
                rat_str(&symbolic),
                rat_str(&algebraic)
            );
        }
        println!();
    }
    Ok(())
}
