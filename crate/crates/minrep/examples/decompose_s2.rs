//! Decompose the symmetric square `S²(g)` of `g = sl(n, ℂ)` into
//! irreducible summands, exactly over ℚ.
//!
//! For each `n` the decomposition is computed twice over: once by
//! finding explicit highest weight vectors and closing them up under
//! the lowering operators, and once through the Weyl dimension formula
//! applied to each highest weight.  The two dimension counts must
//! agree, and the summand dimensions must add up to
//! `dim S²(g) = (n²-1)n²/2`.
//!
//! Run with: `cargo run --example decompose_s2`

use minrep::symdecomp::decompose_s2;

fn main() -> minrep::Result<()> {
    for n in 2..=5 {
        let dec = decompose_s2(n)?;
        println!("S²(sl({n})):  total dim {}", dec.total_dim);
        for comp in &dec.components {
            println!(
                "  V({})  dim {}  (Weyl formula: {})",
                comp.highest_weight, comp.dim, comp.weyl
            );
        }
        let sum: usize = dec.components.iter().map(|c| c.dim).sum();
        assert_eq!(sum, dec.total_dim, "summand dimensions must add up");
        println!();
    }

    // The summand containing the Casimir is always the trivial one; the
    // adjoint summand g itself appears exactly once for n ≥ 3.
    let dec = decompose_s2(4)?;
    let trivial = dec
        .components
        .iter()
        .find(|c| c.highest_weight.is_zero())
        .expect("trivial summand");
    println!(
        "n = 4: the trivial summand has dim {} and highest vector {}",
        trivial.dim, trivial.highest_vector
    );
    Ok(())
}
