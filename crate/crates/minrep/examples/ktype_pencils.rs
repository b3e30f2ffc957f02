//! Enumerate K-types of the modules with annihilator `J_a`.
//!
//! For `su(p,q)` every such module is K-multiplicity free and its
//! K-types lie on a single pencil `μ₀ + k·step`: the highest weight
//! certificates walk along the root `e_{p+1} - e_p`, the duals along
//! `e₁ - e_n`.  Every weight on the pencil must be dominant for
//! `K = S(U(p)×U(q))`.
//!
//! For `sl(n,ℝ)` the K-types are `O(n)`-harmonic spaces: the spherical
//! principal series piece sees even degrees, the sign piece odd
//! degrees, in both cases skipping the finite exceptional set
//! `Z = {k : |a| - n/2 - k ∈ 2ℕ}`; the genuine `n = 3` piece sees the
//! `SU(2)`-degrees `m = 2|a| + 1 + 4k`.
//!
//! Run with: `cargo run --example ktype_pencils`

use minrep::classify::{
    classify_slnr, classify_su, harmonic_dim, is_k_dominant, ktypes_slnr, ktypes_su, z_set,
    AParam,
};
use minrep::rat::{parse_rat, rat};

fn main() -> minrep::Result<()> {
    // su(3,1), a = 2: two modules, one pencil each.
    let a = AParam::Rational(rat(2, 1));
    for cert in classify_su(3, 1, &a)? {
        println!("su(3,1), a = 2, {}:", cert.name());
        let pencil = cert.pencil.as_ref().expect("rational a has a pencil");
        println!("  μ₀   = {}", pencil.mu0);
        println!("  step = {}", pencil.step);
        for (k, mu) in ktypes_su(&cert, 4)?.iter().enumerate() {
            assert!(is_k_dominant(3, 1, mu)?);
            println!("  μ₀ + {k}·step = {mu}");
        }
        println!();
    }

    // sl(4,ℝ), a = 6: the exceptional set Z = {0, 2, 4} carves three
    // harmonic degrees out of the spherical ladder.
    let a6 = parse_rat("6")?;
    println!("sl(4,ℝ), a = 6:  Z = {:?}", z_set(4, &a6, 12)?);
    for cert in classify_slnr(4, &AParam::Rational(a6.clone()))? {
        let degrees = ktypes_slnr(&cert, 6)?;
        println!("  {:10} harmonic degrees {:?}", cert.name(), degrees);
        for k in degrees {
            print!("    H^{k}(ℝ⁴) has dim {}", harmonic_dim(4, k));
            println!("  (= (k+1)² = {})", (k + 1) * (k + 1));
        }
    }
    println!();

    // sl(3,ℝ), a = 1: the genuine piece of the double cover.
    for cert in classify_slnr(3, &AParam::Rational(rat(1, 1)))? {
        let degrees = ktypes_slnr(&cert, 5)?;
        println!("  sl(3,ℝ), a = 1, {:10} degrees {:?}", cert.name(), degrees);
    }
    Ok(())
}
