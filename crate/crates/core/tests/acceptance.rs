//! Acceptance suite: one line per criterion, nonzero exit if any fails.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use hessex_core::charts::{family_generators, ideal_generators, same_generators, specialize_fiber, FamilyParameters};
use hessex_core::degree::{
    abbv_volume, apply_operators, default_t, degree, random_distinct_rationals, scaled_vandermonde, seeded_t_vectors,
    volume, volume_polynomial, WeightVector,
};
use hessex_core::exactalg::rational::{int, ratio};
use hessex_core::nokounkov::{nob_polygon, truncated_pascal_det, valuation};
use hessex_core::schubert::{flag_chain, rothe_cells, u_sequence};
use hessex_core::w0chart::{check_tech_lemma, classify_variables, eliminate, eliminate_family_fiber};
use hessex_core::{HessenbergFunction, MonomialOrder, MultiPoly, Permutation, Rational, Var};
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn p(s: &str) -> MultiPoly {
    MultiPoly::parse(s).unwrap()
}

fn h(s: &str) -> HessenbergFunction {
    s.parse().unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Outcome {
    let t = start.elapsed();
    ensure(t <= limit, || format!("took {t:.2?}, limit {limit:?}"))
}

fn golden_generators() -> Outcome {
    let start = Instant::now();
    let y = "(-x_{3,1} + x_{1,1}*x_{3,3} + x_{4,1}*(x_{3,2} - x_{1,2}*x_{3,3}))";
    let cases: Vec<(&str, &str, usize, usize, String)> = vec![
        ("2,4,1,3", "3,3,4,4", 4, 1, format!("-x_{{3,3}} + x_{{3,1}}*{y} + x_{{4,1}}")),
        ("2,4,1,3", "3,3,4,4", 4, 2, format!("{y} + 1")),
        ("4,3,2,1", "3,3,4,4", 4, 1, "x_{2,1} - x_{1,3}*x_{3,1} - x_{1,2} + x_{1,3}*x_{2,2}".into()),
        ("4,3,2,1", "3,3,4,4", 4, 2, "x_{2,2} - x_{1,3}".into()),
        (
            "5,4,3,2,1",
            "3,4,4,5,5",
            5,
            1,
            "x_{2,1} - x_{1,2} - x_{1,3}*x_{4,1} + x_{1,3}*x_{3,2} - x_{1,4}*x_{3,1} + x_{1,4}*x_{2,2} \
             + x_{1,4}*x_{2,3}*x_{4,1} - x_{1,4}*x_{2,3}*x_{3,2}"
                .into(),
        ),
        ("5,4,3,2,1", "3,4,4,5,5", 5, 2, "x_{2,2} - x_{1,3} - x_{1,4}*x_{3,2} + x_{1,4}*x_{2,3}".into()),
        ("5,4,3,2,1", "3,4,4,5,5", 5, 3, "x_{2,3} - x_{1,4}".into()),
        ("5,4,3,2,1", "3,4,4,5,5", 4, 1, "x_{3,1} - x_{2,2} - x_{2,3}*x_{4,1} + x_{2,3}*x_{3,2}".into()),
    ];
    let mut failures = Vec::new();
    for (w, hh, i, j, expected) in cases {
        let w: Permutation = w.parse().unwrap();
        let ideal = ideal_generators(&w, &h(hh)).map_err(|e| e.to_string())?;
        let expected = p(&expected);
        match ideal.generator(i, j) {
            Some(got) if *got == expected => {}
            Some(got) => failures.push(format!("w={w} f_{{{i},{j}}}: expected {expected}, got {got}")),
            None => failures.push(format!("w={w} f_{{{i},{j}}} missing")),
        }
    }
    ensure(failures.is_empty(), || failures.join("; "))?;
    within(start, Duration::from_secs(1))
}

fn elimination_structure() -> Outcome {
    let start = Instant::now();
    for n in 1..=6 {
        for hh in HessenbergFunction::all_indecomposable(n) {
            let e = eliminate(&hh).map_err(|e| format!("h={hh}: {e}"))?;
            ensure(e.is_verified(), || format!("h={hh}: residual generators"))?;
            ensure(e.free.len() == hh.dimension(), || format!("h={hh}: {} free, expected {}", e.free.len(), hh.dimension()))?;
            ensure(check_tech_lemma(&hh).holds(), || format!("h={hh}: technical lemma fails"))?;
        }
    }
    within(start, Duration::from_secs(60))
}

fn variable_figures() -> Outcome {
    for (hh, expected) in [
        ("3,3,4,4", vec![(2, 1), (2, 2)]),
        ("3,4,4,5,5", vec![(2, 1), (3, 1), (2, 2), (2, 3)]),
    ] {
        let class = classify_variables(&h(hh)).map_err(|e| e.to_string())?;
        let expected: BTreeSet<_> = expected.into_iter().collect();
        ensure(class.non_free == expected, || format!("h={hh}: non-free {:?}", class.non_free))?;
    }
    Ok(())
}

fn family_consistency() -> Outcome {
    let start = Instant::now();
    let h4 = h("3,3,4,4");
    for w in Permutation::all(4) {
        let fam = family_generators(&w, &h4, &FamilyParameters::standard(4)).map_err(|e| e.to_string())?;
        let at0 = specialize_fiber(&fam, &Rational::zero()).map_err(|e| e.to_string())?;
        let plain = ideal_generators(&w, &h4).map_err(|e| e.to_string())?;
        ensure(same_generators(&at0, &plain), || format!("w={w}: t=0 fiber differs from the ideal"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let zs = [int(1), int(-2), ratio(3, 5)];
    for n in 2..=5 {
        let gammas = [default_t(n), random_distinct_rationals(&mut rng, n)];
        for hh in HessenbergFunction::all_indecomposable(n) {
            let expected: BTreeSet<Var> = (1..n)
                .flat_map(|j| (n - hh.at(j) + 1..=n - j).map(move |i| Var::x(i, j)))
                .collect();
            for z in &zs {
                for g in &gammas {
                    let e = eliminate_family_fiber(&hh, z, g).map_err(|e| format!("h={hh}, t={z}: {e}"))?;
                    let free: BTreeSet<Var> = e.free.iter().copied().collect();
                    ensure(e.is_verified(), || format!("h={hh}, t={z}: residual generators"))?;
                    ensure(free == expected, || format!("h={hh}, t={z}: free set {free:?}"))?;
                    ensure(free.len() == hh.dimension(), || format!("h={hh}: wrong free count"))?;
                }
            }
        }
    }
    within(start, Duration::from_secs(60))
}

fn u_sequence_shapes() -> Outcome {
    let us = u_sequence(5).map_err(|e| e.to_string())?;
    let shapes: Vec<Option<Vec<usize>>> = us.iter().map(|u| rothe_cells(u).young_shape()).collect();
    let expected: Vec<Option<Vec<usize>>> = [
        vec![],
        vec![1],
        vec![2],
        vec![3],
        vec![4],
        vec![4, 1],
        vec![4, 2],
        vec![4, 3],
        vec![4, 3, 1],
        vec![4, 3, 2],
        vec![4, 3, 2, 1],
    ]
    .into_iter()
    .map(Some)
    .collect();
    ensure(shapes == expected, || format!("shapes {shapes:?}"))?;
    for n in 2..=6 {
        let us = u_sequence(n).map_err(|e| e.to_string())?;
        ensure(us.last().is_some_and(Permutation::is_longest), || format!("n={n}: last u is not w0"))?;
    }
    Ok(())
}

fn flag_chains() -> Outcome {
    for n in 1..=5 {
        for hh in HessenbergFunction::all_indecomposable(n) {
            let chain = flag_chain(&hh).map_err(|e| format!("h={hh}: {e}"))?;
            let d = hh.dimension();
            let dims: Vec<usize> = chain.steps.iter().filter(|s| s.proper).map(|s| s.dimension).collect();
            ensure(dims.len() == d, || format!("h={hh}: {} proper steps, expected {d}", dims.len()))?;
            ensure(dims == (0..d).rev().collect::<Vec<_>>(), || format!("h={hh}: dimensions {dims:?}"))?;
            ensure(chain.is_certified(), || format!("h={hh}: a step is not cut out by its equation"))?;
        }
    }
    Ok(())
}

fn volume_polynomials() -> Outcome {
    let vp = volume_polynomial(&h("2,3,3"));
    let expected = p("1/2*(L_1 - L_2)^2 + 2*(L_1 - L_2)*(L_2 - L_3) + 1/2*(L_2 - L_3)^2");
    ensure(vp.poly == expected, || format!("P_(2,3,3) = {}", vp.poly))?;
    for n in 1..=5 {
        let full = volume_polynomial(&HessenbergFunction::full(n));
        ensure(full.poly == scaled_vandermonde(n), || format!("n={n}: full flag polynomial differs"))?;
    }
    Ok(())
}

fn strict_grid(n: usize, rng: &mut ChaCha8Rng) -> Vec<WeightVector> {
    let mut seen = BTreeSet::new();
    while seen.len() < 10 {
        let gaps: Vec<i64> = (1..n).map(|_| rng.gen_range(1..=12)).collect();
        seen.insert(gaps);
    }
    seen.into_iter()
        .map(|gaps| {
            let mut vals = vec![0i64; n];
            for k in (0..n - 1).rev() {
                vals[k] = vals[k + 1] + gaps[k];
            }
            WeightVector::new(vals).unwrap()
        })
        .collect()
}

fn abbv_agreement() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 2..=5 {
        let mut ts = vec![default_t(n)];
        ts.extend(seeded_t_vectors(n, 2, 1234));
        for hh in HessenbergFunction::all_indecomposable(n) {
            for lambda in strict_grid(n, &mut rng) {
                let vol = volume(&hh, &lambda).map_err(|e| e.to_string())?;
                for t in &ts {
                    let v = abbv_volume(&hh, &lambda, t, 1).map_err(|e| e.to_string())?;
                    ensure(v == vol, || format!("h={hh}, λ={lambda}: localization {v} vs {vol}"))?;
                }
                let deg = degree(&hh, &lambda).map_err(|e| format!("h={hh}, λ={lambda}: {e}"))?;
                ensure(deg.is_positive(), || format!("h={hh}, λ={lambda}: degree {deg}"))?;
            }
        }
    }
    within(start, Duration::from_secs(120))
}

fn nob_certification() -> Outcome {
    let start = Instant::now();
    for a1 in 1..=9u32 {
        for a2 in 1..=10 - a1 {
            let r = nob_polygon(a1, a2).map_err(|e| e.to_string())?;
            ensure(r.vertices_match, || format!("({a1},{a2}): vertices {:?}", r.polygon.vertices))?;
            let formula = ratio((a1 * a1 + 4 * a1 * a2 + a2 * a2) as i64, 2);
            ensure(r.polygon.area == formula, || format!("({a1},{a2}): area {}", r.polygon.area))?;
            ensure(r.certified(), || format!("({a1},{a2}): not certified"))?;
        }
    }
    within(start, Duration::from_secs(120))
}

fn subsets(k: usize) -> Vec<Vec<u64>> {
    (0u32..1 << 7).filter(|m| m.count_ones() as usize == k).map(|m| (0..7).filter(|b| m >> b & 1 == 1).collect()).collect()
}

fn truncated_pascal() -> Outcome {
    for k in 0..=3 {
        for r in subsets(k) {
            for s in subsets(k) {
                let det = truncated_pascal_det(&r, &s).map_err(|e| e.to_string())?;
                let predicted = r.iter().zip(&s).all(|(a, b)| a <= b);
                ensure(!det.is_zero() == predicted, || format!("r={r:?}, s={s:?}: det {det}"))?;
            }
        }
    }
    Ok(())
}

fn run_property<S: Strategy>(name: &str, strategy: S, test: impl Fn(S::Value) -> bool) -> Outcome
where
    S::Value: std::fmt::Debug,
{
    common::runner(256)
        .run(&strategy, |v| {
            prop_assert!(test(v));
            Ok(())
        })
        .map_err(|e| format!("{name}: {e}"))
}

fn property_suites() -> Outcome {
    use common::*;
    let cv = chart_vars;
    let poly3 = || poly_in(cv(), 4, 3);
    run_property("ring axioms", (poly3(), poly3(), poly3()), |(a, b, c)| {
        &(&a + &b) + &c == &a + &(&b + &c)
            && &a + &b == &b + &a
            && &(&a * &b) * &c == &a * &(&b * &c)
            && &a * &b == &b * &a
            && &a * &(&b + &c) == &(&a * &b) + &(&a * &c)
            && &a + &MultiPoly::zero() == a
            && &a * &MultiPoly::one() == a
            && (&a + &(-&a)).is_zero()
    })?;
    run_property("Leibniz rule", (poly3(), poly3(), 0..3usize), |(a, b, k)| {
        let v = cv()[k];
        let lhs = (&a * &b).with_universe(cv()).partial_derivative(&v).unwrap();
        let rhs = &(&a.partial_derivative(&v).unwrap() * &b) + &(&a * &b.partial_derivative(&v).unwrap());
        lhs == rhs
    })?;
    run_property(
        "leading term multiplicativity",
        (nonzero_poly_in(cv(), 4, 3), nonzero_poly_in(cv(), 4, 3)),
        |(a, b)| {
            let order = MonomialOrder::natural();
            let (ma, ca) = a.leading_term(&order).unwrap();
            let (mb, cb) = b.leading_term(&order).unwrap();
            (&a * &b).leading_term(&order).unwrap() == (ma.mul(&mb), ca * cb)
        },
    )?;
    run_property("unimodular inverse round trip", (2..=4usize).prop_flat_map(unimodular), |m| {
        let inv = m.unimodular_inverse().unwrap();
        inv.mul(&m).unwrap().is_identity() && m.mul(&inv).unwrap().is_identity()
    })?;
    run_property(
        "valuation additivity",
        (nonzero_poly_in(pet_vars(), 4, 4), nonzero_poly_in(pet_vars(), 4, 4)),
        |(a, b)| {
            let (va, vb) = (valuation(&a).unwrap(), valuation(&b).unwrap());
            valuation(&(&a * &b)).unwrap() == (va.0 + vb.0, va.1 + vb.1)
        },
    )?;
    let pair = || (1..=4usize, 1..=4usize).prop_filter("distinct", |(i, j)| i != j);
    run_property("operator commutativity", (poly_in(weight_vars(4), 5, 4), pair(), pair()), |(f, a, b)| {
        apply_operators(f.clone(), &[a, b]).unwrap() == apply_operators(f, &[b, a]).unwrap()
    })
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("golden chart generators", golden_generators),
        ("elimination structure", elimination_structure),
        ("non-free variable sets", variable_figures),
        ("family consistency", family_consistency),
        ("u-sequence shapes", u_sequence_shapes),
        ("flag chains", flag_chains),
        ("volume polynomials", volume_polynomials),
        ("localization agrees with volume", abbv_agreement),
        ("Newton-Okounkov polygons", nob_certification),
        ("truncated Pascal determinants", truncated_pascal),
        ("property suites", property_suites),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {:>2} PASS  {name} ({secs:.2}s)", k + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({secs:.2}s): {msg}", k + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
