//! Classify the irreducible unitary representations of `SU(p,q)` and
//! `SL(n,ℝ)` whose annihilator is the quadratic ideal `J_a`.
//!
//! For `su(p,q)` the answer is a short list of certificates: highest
//! weight modules `L(λ(i,a))`, their duals, or nothing, depending on
//! which integrality conditions the parameter `a` satisfies.  When two
//! adjacent weights coincide (`λ(i,a) = λ(i+1,a)` at `a = n/2 - i`),
//! two clauses name the same module and the certificate carries both
//! labels.  For `sl(n,ℝ)` the list consists of spherical and sign
//! principal series pieces, plus (only for `n = 3` and integral `a`) a
//! genuine representation of the double cover.
//!
//! Run with: `cargo run --example classify_minimal`

use minrep::classify::{classify_slnr, classify_su, AParam, RealFormSpec};
use minrep::rat::parse_rat;

fn show(form: &RealFormSpec, a: &AParam, certs: &[minrep::classify::MinimalCert]) {
    println!("{form}, a = {a}:  {} module(s)", certs.len());
    for cert in certs {
        println!("  {:24} kind: {}", cert.name(), cert.kind);
        if let Some(w) = &cert.weight {
            println!("    weight    {w}");
        }
        for cond in &cert.conditions {
            println!("    condition {cond}");
        }
    }
    println!();
}

fn main() -> minrep::Result<()> {
    // su(2,1): a = 1/2 sits at the coincidence point λ(2,a) = λ(3,a),
    // so the dual certificate carries the merged label 2 = 3.
    for a_str in ["1/2", "2", "-3/2"] {
        let a = AParam::Rational(parse_rat(a_str)?);
        let certs = classify_su(2, 1, &a)?;
        show(&RealFormSpec::su(2, 1)?, &a, &certs);
    }

    // su(2,2): for p,q ≥ 2 modules exist only when a ∈ (p+q)/2 + ℤ.
    for a in [
        AParam::Rational(parse_rat("1")?),
        AParam::Rational(parse_rat("1/3")?),
        AParam::NonReal,
    ] {
        let certs = classify_su(2, 2, &a)?;
        show(&RealFormSpec::su(2, 2)?, &a, &certs);
    }

    // sl(3,ℝ) and sl(4,ℝ): the genuine piece exists only for n = 3, a ∈ ℤ.
    for (n, a_str) in [(3, "2"), (3, "1/2"), (4, "2")] {
        let a = AParam::Rational(parse_rat(a_str)?);
        let certs = classify_slnr(n, &a)?;
        show(&RealFormSpec::sl_r(n)?, &a, &certs);
    }
    Ok(())
}
