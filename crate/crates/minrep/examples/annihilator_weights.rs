//! Solve, for given `n` and rational `a`, which highest weight modules
//! `L(λ)` are annihilated by the quadratic family `sym(F^a) ⊂ U(sl(n))`.
//!
//! The solver reduces annihilation of the zero-weight part of `F^a` on a
//! highest weight vector to a finite system of quadratic conditions on
//! `λ` and enumerates the solution set exactly.  The labeled solutions
//! are the weights
//!
//! `λ(i,a) = (1/n)·((-a - n/2)·1_{i-1}, (n-1)a - n(n+1-2i)/2, (-a + n/2)·1_{n-i})`
//!
//! for `i = 1..n`; the only other weight that can satisfy all conditions
//! is `λ = 0` (it does so for every `a`, and coincides with a labeled
//! weight exactly when some `λ(i,a) = 0`).  Each reported weight is
//! re-checked by letting every zero-weight element of `sym(F^a)` act on
//! the highest weight vector in `U(g)` and reducing modulo the Borel.
//!
//! Run with: `cargo run --example annihilator_weights`

use minrep::rat::{parse_rat, rat_str};
use minrep::symdecomp::fa_space;
use minrep::verma::{annihilates_hwv, solve_annihilator_weights, AnnihilatorSolutions};

fn main() -> minrep::Result<()> {
    for (n, a_str) in [(3, "0"), (3, "5/2"), (4, "1"), (5, "-7/3")] {
        let a = parse_rat(a_str)?;
        println!("n = {n}, a = {}:", rat_str(&a));
        match solve_annihilator_weights(n, &a)? {
            AnnihilatorSolutions::AllWeights => {
                println!("  F^a = 0, so every weight qualifies");
            }
            AnnihilatorSolutions::Finite(sols) => {
                let space = fa_space(n, &a)?;
                for sol in &sols {
                    let label = if sol.labels.is_empty() {
                        "trivial weight".to_string()
                    } else {
                        sol.labels
                            .iter()
                            .map(|i| format!("λ({i},{})", rat_str(&a)))
                            .collect::<Vec<_>>()
                            .join(" = ")
                    };
                    // Independent confirmation in the enveloping algebra.
                    let confirmed = annihilates_hwv(&space, &sol.weight)?;
                    assert!(confirmed, "solver and U(g)-side check must agree");
                    println!(
                        "  λ = {}   [{}]{}",
                        sol.weight,
                        label,
                        if sol.finite_dimensional {
                            "  (finite dimensional)"
                        } else {
                            ""
                        }
                    );
                }
            }
        }
        println!();
    }
    Ok(())
}
