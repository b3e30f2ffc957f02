//! Solve the degree-`m` polynomial kernels of the order-two operator
//! `4X` that realizes the genuine `sl(3,ℝ)`-module inside functions on
//! the double cover of `SO(3)\SL(3,ℝ)`.
//!
//! On the `2(m+1)`-dimensional isotypic component (odd `m`), `4X` acts
//! on polynomials `p(t)` of degree ≤ m by
//!
//!   `4X·tˡ = (m-l)(-m+2l+1+2a)·t^{l+1} - l(m-2l+1+2a)·t^{l-1}`.
//!
//! Its kernel is computed exactly by a two-term recurrence, confirmed
//! against a dense nullspace, and intersected with its image under the
//! `M`-involution σ (σ² = -id here, so invariant lines come in pairs
//! inside `ker ∩ σ(ker)`).  For integral `a`, the degrees carrying an
//! invariant kernel line are exactly `m = 2|a| + 1 + 4k` — the K-types
//! of the genuine representation — and each kernel there matches the
//! hypergeometric closed form `₂F₁(-m/2, -k₀; k₀+1-m/2; t²)` with
//! `k₀ = (m-1-2a)/4`.
//!
//! Run with: `cargo run --example sl3_kernel`

use minrep::rat::{parse_rat, rat};
use minrep::sl3kernel::{admissible_degrees, kernel_report, operator_4x, q_poly, PolyT};

fn main() -> minrep::Result<()> {
    let a = rat(2, 1);
    println!("a = 2, odd degrees m ≤ 21:");
    println!("expected ladder: {:?}", admissible_degrees(&a, 21));
    for line in kernel_report(&a, 21)? {
        println!(
            "  m = {:2}  dim ker = {}  invariant dim = {}  closed form match: {}",
            line.m, line.dim, line.invariant_dim, line.matches_closed_form
        );
        for p in &line.basis {
            println!("      {p}");
        }
    }
    println!();

    // Non-integral a: the genuine representation does not exist and the
    // report is empty.
    let half = parse_rat("1/2")?;
    println!(
        "a = 1/2: report has {} lines (genuine piece absent)",
        kernel_report(&half, 41)?.len()
    );
    println!();

    // The explicit solutions q(a,k) terminate as polynomials and are
    // killed by the operator at the *negated* parameter: 4X(-a)·q(a,k) = 0.
    for (av, k) in [(1i64, 0usize), (2, 1), (-3, 2)] {
        let q = q_poly(av, k)?;
        let at_minus_a = operator_4x(&rat(-av, 1), &q);
        let at_plus_a = operator_4x(&rat(av, 1), &q);
        println!(
            "q({av},{k}) = {q}\n    4X(-a)·q = {}   4X(+a)·q zero: {}",
            if at_minus_a.is_zero() { "0" } else { "nonzero" },
            at_plus_a.is_zero()
        );
    }
    println!();

    // Spot check the smallest kernel by hand: m = 3, a = 1 has the full
    // two-dimensional kernel spanned by 1 and t³.
    let report = kernel_report(&rat(1, 1), 3)?;
    let line = report.iter().find(|l| l.m == 3).expect("degree-3 line");
    let one = PolyT::monomial(3, 0)?;
    let t3 = PolyT::monomial(3, 3)?;
    assert!(line.basis.iter().any(|p| p.proportional(&one)));
    assert!(line.basis.iter().any(|p| p.proportional(&t3)));
    println!("m = 3, a = 1: kernel = span{{1, t³}} confirmed");
    Ok(())
}
