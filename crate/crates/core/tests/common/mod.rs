//! Shared generators for randomized tests.
#![allow(dead_code)]

use hessex_core::exactalg::rational::ratio;
use hessex_core::{Monomial, MultiPoly, Permutation, PolyMatrix, Var};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

pub const SEED: [u8; 32] = *b"hessex fixed property test seed!";

pub fn runner(cases: u32) -> TestRunner {
    let config = Config { cases, failure_persistence: None, ..Config::default() };
    TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &SEED))
}

pub fn rational() -> impl Strategy<Value = hessex_core::Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| ratio(n, d))
}

/// Polynomials with up to `terms` terms in `vars`, exponents below `max_exp`.
pub fn poly_in(vars: Vec<Var>, terms: usize, max_exp: u32) -> impl Strategy<Value = MultiPoly> {
    let k = vars.len();
    prop::collection::vec((rational(), prop::collection::vec(0..max_exp, k)), 0..=terms).prop_map(move |ts| {
        MultiPoly::from_terms(
            ts.into_iter().map(|(c, es)| (Monomial::from_pairs(vars.iter().copied().zip(es)), c)),
        )
        .with_universe(vars.iter().copied())
    })
}

pub fn nonzero_poly_in(vars: Vec<Var>, terms: usize, max_exp: u32) -> impl Strategy<Value = MultiPoly> {
    poly_in(vars, terms, max_exp).prop_filter("nonzero", |p| !p.is_zero())
}

pub fn chart_vars() -> Vec<Var> {
    vec![Var::x(1, 1), Var::x(1, 2), Var::x(2, 1)]
}

pub fn pet_vars() -> Vec<Var> {
    vec![Var::PetX, Var::PetY]
}

pub fn weight_vars(n: u32) -> Vec<Var> {
    (1..=n).map(Var::L).collect()
}

pub fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Permutation::new(v).expect("shuffle of 1..n"))
}

/// `P · E_1 · ... · E_k` with `P` a permutation matrix and `E_i` elementary
/// matrices `I + p e_{r,c}`, `r != c`, so the determinant is `±1`.
pub fn unimodular(n: usize) -> impl Strategy<Value = PolyMatrix> {
    let elem = (0..n, 0..n, poly_in(chart_vars(), 2, 2)).prop_filter("off-diagonal", |(r, c, _)| r != c);
    (permutation(n), prop::collection::vec(elem, 1..=3)).prop_map(move |(perm, elems)| {
        let mut m = perm.matrix();
        for (r, c, p) in elems {
            let mut e = PolyMatrix::identity(n);
            e.set(r, c, p);
            m = m.mul(&e).expect("square");
        }
        m
    })
}
