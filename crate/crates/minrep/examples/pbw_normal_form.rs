//! Work directly in the enveloping algebra `U(sl(n))`: PBW normal
//! ordering, the symmetrization map from `S²(g)`, the principal
//! antiautomorphism `ι` (with `ι(X) = -X` on `g`, order-reversing on
//! words), and reduction modulo the left ideal defining a Verma module.
//!
//! The finale connects the layers: the element
//!
//!   `x(a) = (T₂₁ - T₁₂)(T₃₂ - T₂₃) + (a + 1/2)(T₃₁ - T₁₃)`
//!
//! of `U(sl(3))` is congruent, modulo the annihilator of the highest
//! weight vector of `M(λ(2,-a))`, to the symmetrized lowest weight
//! vector of `F^{-a}` — the two sides of the `sl(3,ℝ)` model compute
//! in the same quotient.
//!
//! Run with: `cargo run --example pbw_normal_form`

use minrep::envelope::{iota, normal_order, Gen, ParabolicSpec, UEElem};
use minrep::rat::{rat, rat_str};
use minrep::sl3kernel::x_congruence;
use minrep::symdecomp::casimir_element;
use minrep::envelope::symmetrize;
use minrep::verma::lambda_ia;
use minrep::envelope::reduce_mod_ideal;

fn main() -> minrep::Result<()> {
    let n = 3;

    // Normal ordering: T₁₂T₂₁ is not a PBW word (lowering operators
    // come first); reordering produces the commutator tail.
    let word = [Gen::Rai(1, 2), Gen::Low(2, 1)];
    let nf = normal_order(n, &word)?;
    println!("T₁₂T₂₁  =  {nf}");

    // ι is an antiautomorphism: ι(uv) = ι(v)ι(u) with ι(X) = -X on g,
    // so on a product of two generators the signs cancel and only the
    // reversal is visible.
    let u = UEElem::generator(n, Gen::Rai(1, 2))?;
    let v = UEElem::generator(n, Gen::Low(2, 1))?;
    let uv = u.mul(&v)?;
    let lhs = iota(&uv)?;
    let rhs = iota(&v)?.mul(&iota(&u)?)?;
    assert!(lhs.sub(&rhs)?.is_zero());
    println!("ι(T₁₂T₂₁) = {lhs}");

    // The symmetrized Casimir is ι-fixed and reduces on any Verma
    // module to its eigenvalue.
    let omega = symmetrize(&casimir_element(n)?)?;
    assert!(iota(&omega)?.sub(&omega)?.is_zero());
    let a = rat(1, 2);
    let lambda = lambda_ia(n, 2, &a)?;
    let borel = ParabolicSpec::borel(n)?;
    let reduced = reduce_mod_ideal(&omega, &borel, &lambda)?;
    println!(
        "Ω reduced mod the ideal of M({lambda}):  {}",
        rat_str(&reduced.coeff(&[]))
    );

    // x(a) ≡ sym(lowest vector of F^{-a}) in the quotient acting on the
    // highest weight vector of M(λ(2,-a)).
    for a_num in [-2i64, 0, 3] {
        let a = rat(a_num, 1);
        let cong = x_congruence(&a)?;
        println!(
            "a = {a_num}:  λ(2,-a) = {}   x(a) ≡ {}   congruent: {}",
            cong.lambda, cong.x_reduced, cong.congruent
        );
        assert!(cong.congruent);
    }
    Ok(())
}
