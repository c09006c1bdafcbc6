//! Cross-checks against independent brute-force computations.

use std::collections::BTreeMap;

use hessex_core::charts::{ideal_generators, ChartLayout};
use hessex_core::degree::{gc_flag_volume, volume, WeightVector};
use hessex_core::exactalg::rational::{binomial, int};
use hessex_core::nokounkov::{enumerate_ssyt, section_poly, truncated_pascal_det, valuation_image};
use hessex_core::schubert::{rank_matrix, rothe_cells};
use hessex_core::w0chart::{classify_variables, eliminate};
use hessex_core::{HessenbergFunction, MultiPoly, Permutation, PolyMatrix, Rational, Var};
use num_bigint::BigInt;
use num_traits::{One, Zero};

fn rank(mut m: Vec<Vec<Rational>>) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(pivot) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, pivot);
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = &m[i][c] / &m[r][c];
                let row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(row) {
                    *x -= &f * y;
                }
            }
        }
        r += 1;
    }
    r
}

fn leibniz_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut total = BigInt::zero();
    for perm in Permutation::all(n) {
        let mut term = BigInt::one();
        for (i, row) in m.iter().enumerate() {
            term *= &row[perm.at(i + 1) - 1];
        }
        let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| perm.at(i + 1) > perm.at(j + 1)).count();
        if inversions % 2 == 1 {
            total -= term;
        } else {
            total += term;
        }
    }
    total
}

#[test]
fn rank_matrix_matches_block_ranks() {
    for n in 1..=5 {
        for w in Permutation::all(n) {
            let rk = rank_matrix(&w);
            let pm = w.matrix();
            for q in 1..=n {
                for p in 1..=n {
                    let block: Vec<Vec<Rational>> =
                        (0..q).map(|r| (0..p).map(|c| pm.get(r, c).constant_value().unwrap()).collect()).collect();
                    assert_eq!(rk.get(q, p), rank(block), "w = {w}, q = {q}, p = {p}");
                }
            }
        }
    }
}

#[test]
fn diagram_size_is_length() {
    for n in 1..=6 {
        for w in Permutation::all(n) {
            assert_eq!(rothe_cells(&w).len(), w.length(), "w = {w}");
        }
    }
}

#[test]
fn pascal_matches_leibniz_expansion() {
    let sets: Vec<Vec<u64>> = (0u32..1 << 6).map(|m| (0..6).filter(|b| m >> b & 1 == 1).collect()).collect();
    for r in sets.iter().filter(|r| r.len() <= 3) {
        for s in sets.iter().filter(|s| s.len() == r.len()) {
            let m: Vec<Vec<BigInt>> = r.iter().map(|&ra| s.iter().map(|&sb| binomial(sb, ra)).collect()).collect();
            assert_eq!(truncated_pascal_det(r, s).unwrap(), leibniz_det(&m), "r = {r:?}, s = {s:?}");
        }
    }
}

/// Leading principal-column minors of the `Pet_3` chart matrix with `x_{2,1}`
/// eliminated, i.e. `[[y, x, 1], [x, 1, 0], [1, 0, 0]]`.
fn plucker(rows: &[usize]) -> MultiPoly {
    let x = MultiPoly::var(Var::PetX);
    let y = MultiPoly::var(Var::PetY);
    let m = [[y, x.clone(), MultiPoly::one()], [x, MultiPoly::one(), MultiPoly::zero()], [MultiPoly::one(), MultiPoly::zero(), MultiPoly::zero()]];
    let k = rows.len();
    PolyMatrix::from_fn(k, k, |a, b| m[rows[a] - 1][b].clone()).determinant().unwrap()
}

#[test]
fn sections_are_plucker_monomials() {
    for a1 in 0..=3 {
        for a2 in 0..=3 {
            for t in enumerate_ssyt(a1, a2) {
                let factors = [
                    (plucker(&[1, 2]), t.k12),
                    (plucker(&[1, 3]), t.k13),
                    (plucker(&[2, 3]), t.k23),
                    (plucker(&[1]), t.k1),
                    (plucker(&[2]), t.k2),
                    (plucker(&[3]), t.k3),
                ];
                let expected = factors.iter().fold(MultiPoly::one(), |acc, (f, e)| acc.mul(&f.pow(*e)));
                assert_eq!(section_poly(&t), expected, "{t}");
            }
        }
    }
}

#[test]
fn pet3_chart_relation_is_the_eliminated_coordinate() {
    let e = eliminate(&HessenbergFunction::peterson(3)).unwrap();
    assert_eq!(e.image(&Var::x(2, 1)).unwrap(), &MultiPoly::var(Var::x(1, 2)));
}

#[test]
fn valuation_image_size_is_the_section_rank() {
    for a1 in 0..=3 {
        for a2 in 0..=3 {
            let img = valuation_image(a1, a2);
            assert_eq!(img.points.len(), img.rank);
        }
    }
}

#[test]
fn full_flag_volume_is_the_product_formula() {
    for vals in [vec![1, 0], vec![3, 1, 0], vec![5, 2, 1, 0], vec![9, 7, 4, 1, 0]] {
        let lambda = WeightVector::new(vals).unwrap();
        let full = HessenbergFunction::full(lambda.n());
        assert_eq!(volume(&full, &lambda).unwrap(), gc_flag_volume(&lambda));
    }
}

#[test]
fn generators_vanish_at_the_standard_flag() {
    for n in 2..=5 {
        for h in HessenbergFunction::all(n) {
            let ideal = ideal_generators(&Permutation::identity(n), &h).unwrap();
            let origin: BTreeMap<Var, Rational> =
                ChartLayout::new(&Permutation::identity(n)).variables().into_iter().map(|v| (v, int(0))).collect();
            assert_eq!(origin.len(), n * (n - 1) / 2);
            for g in &ideal.generators {
                let at0 = g.poly.substitute_values(&origin);
                assert!(at0.is_zero(), "h = {h}, f_{{{},{}}} = {}", g.i, g.j, g.poly);
            }
        }
    }
}

#[test]
fn classification_counts_match_dimension() {
    for n in 2..=7 {
        for h in HessenbergFunction::all_indecomposable(n) {
            let c = classify_variables(&h).unwrap();
            assert_eq!(c.free.len(), h.dimension());
            assert_eq!(c.non_free.len(), h.codimension());
        }
    }
}
