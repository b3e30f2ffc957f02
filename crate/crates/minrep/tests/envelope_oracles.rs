//! Independent oracles for the enveloping algebra layer.
//!
//! Normal ordering is recomputed here by a recursive rewriter that
//! resolves the *last* adjacent inversion first (the library resolves
//! the first, iteratively); by the PBW theorem both must produce the
//! same normal form, so any disagreement is an implementation defect.
//! Reduction modulo Verma ideals is checked against the ideal's
//! defining properties and against a frozen closed form for the
//! symmetrized lowest vector of `F^{-a}` at `n = 3`.

use minrep::envelope::{
    gen_matrix, iota, matrix_to_gens, normal_order, reduce_mod_ideal, symmetrize, word_string,
    Gen, ParabolicSpec, UEElem,
};
use minrep::liealg::{basis_indices, bracket, TracelessMatrix, Weight};
use minrep::rat::{rat, rint, Rat};
use minrep::symdecomp::{adjoint_act, fa_lowest_vectors, Poly2Elem};
use minrep::verma::lambda_ia;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::collections::BTreeMap;

// --- test-side straightening oracle ------------------------------------------

type WordMap = BTreeMap<Vec<Gen>, Rat>;

fn add_to(map: &mut WordMap, w: Vec<Gen>, c: Rat) {
    let slot = map.entry(w).or_insert_with(Rat::zero);
    *slot += c;
    // keep zero entries; compare after pruning
}

/// Recursively rewrite `c·word` into normal form, resolving the last
/// adjacent inversion at each step.
fn oracle_order(n: usize, word: &[Gen], c: &Rat, out: &mut WordMap) {
    let inversion = word
        .windows(2)
        .enumerate()
        .filter(|(_, p)| p[0] > p[1])
        .map(|(k, _)| k)
        .next_back();
    match inversion {
        None => add_to(out, word.to_vec(), c.clone()),
        Some(k) => {
            let mut swapped = word.to_vec();
            swapped.swap(k, k + 1);
            oracle_order(n, &swapped, c, out);
            let x = gen_matrix(n, word[k]).unwrap();
            let y = gen_matrix(n, word[k + 1]).unwrap();
            for (g, cg) in matrix_to_gens(&bracket(&x, &y).unwrap()) {
                let mut shorter = word[..k].to_vec();
                shorter.push(g);
                shorter.extend_from_slice(&word[k + 2..]);
                oracle_order(n, &shorter, &(c * cg), out);
            }
        }
    }
}

fn oracle_to_elem(n: usize, map: &WordMap) -> UEElem {
    UEElem::from_normal_terms(
        n,
        map.iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(w, c)| (w.clone(), c.clone())),
    )
    .unwrap()
}

fn all_gens(n: usize) -> Vec<Gen> {
    let mut gens = Vec::new();
    for (i, j) in basis_indices(n) {
        if i > j {
            gens.push(Gen::Low(i as u8, j as u8));
        } else if i < j {
            gens.push(Gen::Rai(i as u8, j as u8));
        }
    }
    for k in 1..n {
        gens.push(Gen::Car(k as u8));
    }
    gens
}

#[test]
fn normal_order_matches_recursive_oracle_exhaustively() {
    // Every word of length ≤ 3 over sl(2), every word of length ≤ 2 over
    // sl(3).
    for (n, max_len) in [(2usize, 3usize), (3, 2)] {
        let gens = all_gens(n);
        let mut words: Vec<Vec<Gen>> = vec![vec![]];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &words {
                for &g in &gens {
                    let mut w2 = w.clone();
                    w2.push(g);
                    next.push(w2);
                }
            }
            for w in next {
                let lib = normal_order(n, &w).unwrap();
                let mut map = WordMap::new();
                oracle_order(n, &w, &Rat::one(), &mut map);
                let oracle = oracle_to_elem(n, &map);
                assert!(
                    lib.sub(&oracle).unwrap().is_zero(),
                    "word {} differs: {} vs {}",
                    word_string(&w),
                    lib,
                    oracle
                );
                words.push(w);
            }
        }
    }
}

#[test]
fn normal_order_matches_recursive_oracle_random() {
    let mut rng = StdRng::seed_from_u64(20240601);
    for n in [3usize, 4] {
        let gens = all_gens(n);
        for _ in 0..40 {
            let len = rng.gen_range(3..=4);
            let w: Vec<Gen> = (0..len).map(|_| gens[rng.gen_range(0..gens.len())]).collect();
            let lib = normal_order(n, &w).unwrap();
            let mut map = WordMap::new();
            oracle_order(n, &w, &Rat::one(), &mut map);
            assert!(
                lib.sub(&oracle_to_elem(n, &map)).unwrap().is_zero(),
                "word {}",
                word_string(&w)
            );
        }
    }
}

// --- multiplication ------------------------------------------------------------

fn random_ue(rng: &mut StdRng, n: usize, max_deg: usize) -> UEElem {
    let gens = all_gens(n);
    let mut e = UEElem::zero(n).unwrap();
    for _ in 0..3 {
        let len = rng.gen_range(0..=max_deg);
        let mut term = UEElem::scalar(n, rat(rng.gen_range(-3..=3), 1)).unwrap();
        for _ in 0..len {
            let g = gens[rng.gen_range(0..gens.len())];
            term = term.mul(&UEElem::generator(n, g).unwrap()).unwrap();
        }
        e = e.add(&term).unwrap();
    }
    e
}

#[test]
fn multiplication_agrees_with_word_concatenation() {
    let mut rng = StdRng::seed_from_u64(99);
    let n = 3;
    let gens = all_gens(n);
    for _ in 0..30 {
        let l1 = rng.gen_range(1..=2);
        let l2 = rng.gen_range(1..=2);
        let w1: Vec<Gen> = (0..l1).map(|_| gens[rng.gen_range(0..gens.len())]).collect();
        let w2: Vec<Gen> = (0..l2).map(|_| gens[rng.gen_range(0..gens.len())]).collect();
        let concat: Vec<Gen> = w1.iter().chain(&w2).copied().collect();
        let prod = normal_order(n, &w1)
            .unwrap()
            .mul(&normal_order(n, &w2).unwrap())
            .unwrap();
        assert!(prod.sub(&normal_order(n, &concat).unwrap()).unwrap().is_zero());
    }
}

#[test]
fn multiplication_is_associative_and_distributive() {
    let mut rng = StdRng::seed_from_u64(314159);
    for n in [2usize, 3] {
        for _ in 0..12 {
            let u = random_ue(&mut rng, n, 2);
            let v = random_ue(&mut rng, n, 2);
            let w = random_ue(&mut rng, n, 1);
            let assoc_l = u.mul(&v).unwrap().mul(&w).unwrap();
            let assoc_r = u.mul(&v.mul(&w).unwrap()).unwrap();
            assert!(assoc_l.sub(&assoc_r).unwrap().is_zero());
            let dist_l = u.mul(&v.add(&w).unwrap()).unwrap();
            let dist_r = u.mul(&v).unwrap().add(&u.mul(&w).unwrap()).unwrap();
            assert!(dist_l.sub(&dist_r).unwrap().is_zero());
        }
    }
}

// --- the principal antiautomorphism ---------------------------------------------

#[test]
fn iota_negates_generators_and_reverses_products() {
    let n = 4;
    for g in all_gens(n) {
        let x = UEElem::generator(n, g).unwrap();
        assert!(iota(&x).unwrap().add(&x).unwrap().is_zero());
    }
    let mut rng = StdRng::seed_from_u64(271828);
    for _ in 0..20 {
        let u = random_ue(&mut rng, 3, 2);
        let v = random_ue(&mut rng, 3, 2);
        let lhs = iota(&u.mul(&v).unwrap()).unwrap();
        let rhs = iota(&v).unwrap().mul(&iota(&u).unwrap()).unwrap();
        assert!(lhs.sub(&rhs).unwrap().is_zero());
        // Involution.
        let back = iota(&iota(&u).unwrap()).unwrap();
        assert!(back.sub(&u).unwrap().is_zero());
    }
}

#[test]
fn iota_flips_the_family_parameter_on_symmetrized_lowest_vectors() {
    // ι fixes the symmetric square sector and negates the linear sector,
    // so ι(sym(lowest of F^a)) = sym(lowest of F^{-a}).
    for n in [3usize, 4] {
        for a in [rat(0, 1), rat(1, 1), rat(-5, 2), rat(7, 3)] {
            let plus = fa_lowest_vectors(n, &a).unwrap();
            let minus = fa_lowest_vectors(n, &-&a).unwrap();
            for (vp, vm) in plus.iter().zip(&minus) {
                let lhs = iota(&symmetrize(vp).unwrap()).unwrap();
                let rhs = symmetrize(vm).unwrap();
                assert!(lhs.sub(&rhs).unwrap().is_zero());
            }
        }
    }
}

// --- symmetrization -----------------------------------------------------------------

#[test]
fn symmetrize_averages_the_two_orders() {
    let n = 3;
    for (i, j) in basis_indices(n) {
        for (k, l) in basis_indices(n) {
            let v = Poly2Elem::quad_monomial(n, (i, j), (k, l), rint(1)).unwrap();
            let g1 = word_gen(i, j);
            let g2 = word_gen(k, l);
            let expected = expand_gen_product(n, g1, g2);
            assert!(
                symmetrize(&v).unwrap().sub(&expected).unwrap().is_zero(),
                "sym(T({i},{j})T({k},{l}))"
            );
        }
    }
}

/// `T_{i,j}` as a sum of generators (splitting diagonal entries over the
/// Cartan generators).
fn word_gen(i: usize, j: usize) -> Vec<(Gen, Rat)> {
    if i != j {
        let g = if i > j {
            Gen::Low(i as u8, j as u8)
        } else {
            Gen::Rai(i as u8, j as u8)
        };
        vec![(g, Rat::one())]
    } else {
        matrix_to_gens(&TracelessMatrix::t(3, i, i).unwrap())
    }
}

/// `(xy + yx)/2` for `x`, `y` given as generator combinations.
fn expand_gen_product(n: usize, x: Vec<(Gen, Rat)>, y: Vec<(Gen, Rat)>) -> UEElem {
    let mut out = UEElem::zero(n).unwrap();
    let half = rat(1, 2);
    for (gx, cx) in &x {
        for (gy, cy) in &y {
            let c = cx * cy * &half;
            let fwd = normal_order(n, &[*gx, *gy]).unwrap();
            let bwd = normal_order(n, &[*gy, *gx]).unwrap();
            out = out.add(&fwd.add(&bwd).unwrap().scale(&c)).unwrap();
        }
    }
    out
}

#[test]
fn symmetrize_is_equivariant() {
    // sym(ad_x v) = x·sym(v) - sym(v)·x.
    let mut rng = StdRng::seed_from_u64(606);
    let n = 3;
    let idx = basis_indices(n);
    for _ in 0..10 {
        let mut v = Poly2Elem::zero(n).unwrap();
        for _ in 0..4 {
            let p = idx[rng.gen_range(0..idx.len())];
            let q = idx[rng.gen_range(0..idx.len())];
            v = v.add(&Poly2Elem::quad_monomial(n, p, q, rat(rng.gen_range(-3..=3), 1)).unwrap());
        }
        for &(i, j) in &idx {
            let xm = TracelessMatrix::t(n, i, j).unwrap();
            let lhs = symmetrize(&adjoint_act(&xm, &v).unwrap()).unwrap();
            let xe = ue_of_matrix(n, &xm);
            let sv = symmetrize(&v).unwrap();
            let rhs = xe.mul(&sv).unwrap().sub(&sv.mul(&xe).unwrap()).unwrap();
            assert!(lhs.sub(&rhs).unwrap().is_zero());
        }
    }
}

fn ue_of_matrix(n: usize, m: &TracelessMatrix) -> UEElem {
    let mut e = UEElem::zero(n).unwrap();
    for (g, c) in matrix_to_gens(m) {
        e = e.add(&UEElem::generator(n, g).unwrap().scale(&c)).unwrap();
    }
    e
}

// --- reduction modulo Verma ideals ------------------------------------------------

fn weight3(a: i64, b: i64, c: i64, den: i64) -> Weight {
    Weight::new(vec![rat(a, den), rat(b, den), rat(c, den)]).unwrap()
}

#[test]
fn borel_reduction_evaluates_the_character() {
    let n = 3;
    let borel = ParabolicSpec::borel(n).unwrap();
    let lambda = weight3(5, -1, -4, 3);
    // H_k ↦ λ_k - λ_{k+1}; raising generators ↦ 0.
    for k in 1..n {
        let h = UEElem::generator(n, Gen::Car(k as u8)).unwrap();
        let red = reduce_mod_ideal(&h, &borel, &lambda).unwrap();
        let expect = lambda.coord(k) - lambda.coord(k + 1);
        assert!(red.is_zero() && expect.is_zero() || red.coeff(&[]) == expect);
    }
    for (i, j) in [(1, 2), (1, 3), (2, 3)] {
        let e = UEElem::generator(n, Gen::Rai(i as u8, j as u8)).unwrap();
        assert!(reduce_mod_ideal(&e, &borel, &lambda).unwrap().is_zero());
    }
    // Lowering words are already reduced.
    let w = normal_order(n, &[Gen::Low(2, 1), Gen::Low(3, 2)]).unwrap();
    let red = reduce_mod_ideal(&w, &borel, &lambda).unwrap();
    assert!(red.sub(&w).unwrap().is_zero());
}

#[test]
fn reduction_kills_the_defining_ideal() {
    // u·x reduces to zero for x in the nilradical of q, and u·(h - λ(h))
    // reduces to zero for h in the Cartan.
    let mut rng = StdRng::seed_from_u64(140);
    let n = 3;
    let lambda = weight3(1, 3, -4, 2);
    for q in [
        ParabolicSpec::borel(n).unwrap(),
        ParabolicSpec::q1(n).unwrap(),
        ParabolicSpec::qn(n).unwrap(),
    ] {
        // The Borel ideal is contained in every parabolic ideal whose
        // character restricts compatibly, so test with q's own data.
        let qlam = match q.kind {
            minrep::envelope::ParabolicKind::Borel => lambda.clone(),
            minrep::envelope::ParabolicKind::Q1 => weight3(-4, 2, 2, 3),
            minrep::envelope::ParabolicKind::Qn => weight3(1, 1, -2, 4),
        };
        assert!(q.is_character(&qlam));
        for _ in 0..10 {
            let u = random_ue(&mut rng, n, 2);
            for (i, j) in [(1, 2), (1, 3), (2, 3)] {
                let x = UEElem::generator(n, Gen::Rai(i as u8, j as u8)).unwrap();
                let ux = u.mul(&x).unwrap();
                assert!(reduce_mod_ideal(&ux, &q, &qlam).unwrap().is_zero());
            }
            for k in 1..n {
                let h = UEElem::generator(n, Gen::Car(k as u8)).unwrap();
                let shift = UEElem::scalar(n, qlam.coord(k) - qlam.coord(k + 1)).unwrap();
                let ideal_elt = u.mul(&h.sub(&shift).unwrap()).unwrap();
                assert!(reduce_mod_ideal(&ideal_elt, &q, &qlam).unwrap().is_zero());
            }
        }
    }
}

#[test]
fn reduction_is_a_left_module_action() {
    // reduce(u·v) = reduce(u·reduce(v)).
    let mut rng = StdRng::seed_from_u64(808);
    let n = 3;
    let borel = ParabolicSpec::borel(n).unwrap();
    let lambda = weight3(7, -2, -5, 6);
    for _ in 0..15 {
        let u = random_ue(&mut rng, n, 2);
        let v = random_ue(&mut rng, n, 2);
        let direct = reduce_mod_ideal(&u.mul(&v).unwrap(), &borel, &lambda).unwrap();
        let staged = reduce_mod_ideal(
            &u.mul(&reduce_mod_ideal(&v, &borel, &lambda).unwrap()).unwrap(),
            &borel,
            &lambda,
        )
        .unwrap();
        assert!(direct.sub(&staged).unwrap().is_zero());
    }
}

#[test]
fn symmetrized_lowest_vector_reduces_to_frozen_form() {
    // For n = 3 and any λ: sym(lowest of F^{-a}) acting on the highest
    // weight vector of M(λ) is T₂₁T₃₂ + (1/2 - λ₂ + a/3)·T₃₁.
    let n = 3;
    let borel = ParabolicSpec::borel(n).unwrap();
    for a in [rat(0, 1), rat(2, 1), rat(-1, 2), rat(7, 3)] {
        let lowest = &fa_lowest_vectors(n, &-&a).unwrap()[0];
        let sym = symmetrize(lowest).unwrap();
        for lambda in [
            weight3(0, 0, 0, 1),
            weight3(1, 0, -1, 1),
            weight3(5, -1, -4, 6),
            lambda_ia(n, 2, &-&a).unwrap(),
        ] {
            let red = reduce_mod_ideal(&sym, &borel, &lambda).unwrap();
            let coeff = rat(1, 2) - lambda.coord(2) + a.clone() / rint(3);
            let expected = UEElem::from_normal_terms(
                n,
                [
                    (vec![Gen::Low(2, 1), Gen::Low(3, 2)], Rat::one()),
                    (vec![Gen::Low(3, 1)], coeff),
                ],
            )
            .unwrap();
            assert!(
                red.sub(&expected).unwrap().is_zero(),
                "a = {a}, λ = {lambda}: got {red}"
            );
        }
    }
}
