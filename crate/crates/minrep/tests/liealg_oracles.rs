//! Independent oracles for the Lie algebra layer.
//!
//! The bracket and trace form are recomputed here from scratch on plain
//! dense matrices (no shared code with the library), and the library
//! must agree exhaustively on the reduced basis.  Weyl dimensions are
//! pinned to frozen values computed by hand from the formula
//! `dim V(λ) = Π_{i<j} (λ_i - λ_j + j - i)/(j - i)`.

use minrep::liealg::{
    basis_indices, basis_weight, bracket, rho, trace_form, weyl_dim, Weight,
    TracelessMatrix,
};
use minrep::rat::{rat, rint, Rat};
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

// --- test-side dense matrix oracle ----------------------------------------

type Dense = Vec<Vec<Rat>>;

fn dense_t(n: usize, i: usize, j: usize) -> Dense {
    let mut m = vec![vec![Rat::zero(); n]; n];
    m[i - 1][j - 1] += rint(1);
    if i == j {
        for k in 0..n {
            m[k][k] -= rat(1, n as i64);
        }
    }
    m
}

fn dense_mul(x: &Dense, y: &Dense) -> Dense {
    let n = x.len();
    let mut out = vec![vec![Rat::zero(); n]; n];
    for r in 0..n {
        for c in 0..n {
            for k in 0..n {
                out[r][c] += &x[r][k] * &y[k][c];
            }
        }
    }
    out
}

fn dense_commutator(x: &Dense, y: &Dense) -> Dense {
    let xy = dense_mul(x, y);
    let yx = dense_mul(y, x);
    xy.into_iter()
        .zip(yx)
        .map(|(r1, r2)| r1.into_iter().zip(r2).map(|(a, b)| a - b).collect())
        .collect()
}

fn dense_trace_product(x: &Dense, y: &Dense) -> Rat {
    let xy = dense_mul(x, y);
    (0..x.len()).map(|k| xy[k][k].clone()).sum()
}

fn to_dense(m: &TracelessMatrix) -> Dense {
    let n = m.n();
    (1..=n)
        .map(|i| (1..=n).map(|j| m.entry(i, j).clone()).collect())
        .collect()
}

fn assert_same(lib: &TracelessMatrix, oracle: &Dense) {
    assert_eq!(&to_dense(lib), oracle);
}

// --- brackets --------------------------------------------------------------

#[test]
fn bracket_matches_dense_commutator_exhaustively() {
    for n in 2..=5 {
        for &(r, s) in &basis_indices(n) {
            for &(i, j) in &basis_indices(n) {
                let x = TracelessMatrix::t(n, r, s).unwrap();
                let y = TracelessMatrix::t(n, i, j).unwrap();
                let lib = bracket(&x, &y).unwrap();
                let oracle = dense_commutator(&dense_t(n, r, s), &dense_t(n, i, j));
                assert_same(&lib, &oracle);
            }
        }
    }
}

#[test]
fn bracket_matches_structure_constant_formula() {
    // [T_{r,s}, T_{i,j}] = δ_{is} T_{r,j} - δ_{rj} T_{i,s}, valid for all
    // index pairs because the 1/n shifts cancel in the commutator.
    for n in 2..=4 {
        for r in 1..=n {
            for s in 1..=n {
                for i in 1..=n {
                    for j in 1..=n {
                        let lib = bracket(
                            &TracelessMatrix::t(n, r, s).unwrap(),
                            &TracelessMatrix::t(n, i, j).unwrap(),
                        )
                        .unwrap();
                        let mut expect = TracelessMatrix::zero(n).unwrap();
                        if i == s {
                            expect = expect.add(&TracelessMatrix::t(n, r, j).unwrap());
                        }
                        if r == j {
                            expect = expect.sub(&TracelessMatrix::t(n, i, s).unwrap());
                        }
                        assert!(lib.sub(&expect).is_zero(), "n={n} [{r}{s},{i}{j}]");
                    }
                }
            }
        }
    }
}

#[test]
fn jacobi_identity_exhaustive() {
    for n in 2..=4 {
        let basis: Vec<_> = basis_indices(n)
            .iter()
            .map(|&(i, j)| TracelessMatrix::t(n, i, j).unwrap())
            .collect();
        for x in &basis {
            for y in &basis {
                for z in &basis {
                    let t1 = bracket(x, &bracket(y, z).unwrap()).unwrap();
                    let t2 = bracket(y, &bracket(z, x).unwrap()).unwrap();
                    let t3 = bracket(z, &bracket(x, y).unwrap()).unwrap();
                    assert!(t1.add(&t2).add(&t3).is_zero());
                }
            }
        }
    }
}

// --- trace form -------------------------------------------------------------

fn random_matrix(rng: &mut StdRng, n: usize) -> TracelessMatrix {
    let mut m = TracelessMatrix::zero(n).unwrap();
    for (i, j) in basis_indices(n) {
        let c = rat(rng.gen_range(-6..=6), rng.gen_range(1..=3));
        m.scaled_add(&c, &TracelessMatrix::t(n, i, j).unwrap());
    }
    m
}

#[test]
fn trace_form_matches_dense_trace() {
    let mut rng = StdRng::seed_from_u64(17);
    for n in 2..=5 {
        for _ in 0..25 {
            let x = random_matrix(&mut rng, n);
            let y = random_matrix(&mut rng, n);
            assert_eq!(
                trace_form(&x, &y).unwrap(),
                dense_trace_product(&to_dense(&x), &to_dense(&y))
            );
        }
    }
}

#[test]
fn trace_form_is_invariant() {
    // ([x,y], z) + (y, [x,z]) = 0.
    let mut rng = StdRng::seed_from_u64(4242);
    for n in 2..=5 {
        for _ in 0..25 {
            let x = random_matrix(&mut rng, n);
            let y = random_matrix(&mut rng, n);
            let z = random_matrix(&mut rng, n);
            let lhs = trace_form(&bracket(&x, &y).unwrap(), &z).unwrap();
            let rhs = trace_form(&y, &bracket(&x, &z).unwrap()).unwrap();
            assert!((lhs + rhs).is_zero());
        }
    }
}

// --- weights ----------------------------------------------------------------

#[test]
fn basis_weights_diagonalize_the_cartan_action() {
    // [h, T_{i,j}] = (ε_i - ε_j)(h) · T_{i,j} for diagonal h.
    for n in 2..=4 {
        for k in 1..n {
            let h = TracelessMatrix::t(n, k, k)
                .unwrap()
                .sub(&TracelessMatrix::t(n, k + 1, k + 1).unwrap());
            let h_weight_coords: Vec<Rat> =
                (1..=n).map(|i| h.entry(i, i).clone()).collect();
            for (i, j) in basis_indices(n) {
                if i == j {
                    continue;
                }
                let t = TracelessMatrix::t(n, i, j).unwrap();
                let eig = &h_weight_coords[i - 1] - &h_weight_coords[j - 1];
                let lhs = bracket(&h, &t).unwrap();
                assert!(lhs.sub(&t.scale(&eig)).is_zero());
                assert_eq!(
                    basis_weight(n, i, j),
                    Weight::root(n, i, j),
                    "weight of T_{{i,j}} is ε_i - ε_j"
                );
            }
        }
    }
}

#[test]
fn rho_is_half_sum_of_positive_roots() {
    for n in 2..=6 {
        let mut sum = Weight::zero(n);
        for i in 1..=n {
            for j in (i + 1)..=n {
                sum = sum.add(&Weight::root(n, i, j));
            }
        }
        assert_eq!(rho(n), sum.scale(&rat(1, 2)));
    }
}

// --- Weyl dimension formula ---------------------------------------------------

fn w(coords: &[i64]) -> Weight {
    Weight::new(coords.iter().map(|&c| rint(c)).collect()).unwrap()
}

#[test]
fn weyl_dimension_frozen_values() {
    // Adjoint representation: n² - 1.
    assert_eq!(weyl_dim(&w(&[1, -1])).unwrap(), 3u32.into());
    assert_eq!(weyl_dim(&w(&[1, 0, -1])).unwrap(), 8u32.into());
    assert_eq!(weyl_dim(&w(&[1, 0, 0, -1])).unwrap(), 15u32.into());
    assert_eq!(weyl_dim(&w(&[1, 0, 0, 0, -1])).unwrap(), 24u32.into());

    // The large summand of S²(g): highest weight 2(ε₁ - ε_n).
    assert_eq!(weyl_dim(&w(&[2, -2])).unwrap(), 5u32.into());
    assert_eq!(weyl_dim(&w(&[2, 0, -2])).unwrap(), 27u32.into());
    assert_eq!(weyl_dim(&w(&[2, 0, 0, -2])).unwrap(), 84u32.into());
    assert_eq!(weyl_dim(&w(&[2, 0, 0, 0, -2])).unwrap(), 200u32.into());
    assert_eq!(weyl_dim(&w(&[2, 0, 0, 0, 0, -2])).unwrap(), 405u32.into());

    // The middle summand ε₁ + ε₂ - ε_{n-1} - ε_n.
    assert_eq!(weyl_dim(&w(&[1, 1, -1, -1])).unwrap(), 20u32.into());
    assert_eq!(weyl_dim(&w(&[1, 1, 0, -1, -1])).unwrap(), 75u32.into());
    assert_eq!(weyl_dim(&w(&[1, 1, 0, 0, -1, -1])).unwrap(), 189u32.into());

    // Fundamental representations of sl(4), in sum-zero coordinates.
    let omega1 = Weight::new(vec![rat(3, 4), rat(-1, 4), rat(-1, 4), rat(-1, 4)]).unwrap();
    let omega2 = Weight::new(vec![rat(1, 2), rat(1, 2), rat(-1, 2), rat(-1, 2)]).unwrap();
    let omega3 = Weight::new(vec![rat(1, 4), rat(1, 4), rat(1, 4), rat(-3, 4)]).unwrap();
    assert_eq!(weyl_dim(&omega1).unwrap(), 4u32.into());
    assert_eq!(weyl_dim(&omega2).unwrap(), 6u32.into());
    assert_eq!(weyl_dim(&omega3).unwrap(), 4u32.into());

    // Trivial.
    assert_eq!(weyl_dim(&Weight::zero(5)).unwrap(), 1u32.into());
}

#[test]
fn weyl_dimension_rejects_non_dominant() {
    assert!(weyl_dim(&w(&[0, 1, -1])).is_err());
    assert!(
        weyl_dim(&Weight::new(vec![rat(1, 2), rat(-1, 2), rint(0)]).unwrap()).is_err()
    );
}
