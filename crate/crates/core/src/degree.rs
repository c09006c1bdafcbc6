//! Volume polynomials of regular nilpotent Hessenberg varieties, their
//! evaluation at dominant weights, and the localisation-sum cross-check.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{HessexError, Result};
use crate::exactalg::rational::{factorial, int};
use crate::exactalg::{format_rational, MultiPoly, Rational, Var};
use crate::hessenberg::{HessenbergFunction, Permutation};

/// Strictly decreasing integer weight `λ_1 > ... > λ_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVector {
    values: Vec<i64>,
}

impl WeightVector {
    pub fn new(values: Vec<i64>) -> Result<WeightVector> {
        if values.is_empty() {
            return Err(HessexError::NonStrictWeight("()".into()));
        }
        if values.windows(2).any(|w| w[0] <= w[1]) {
            let shown: Vec<String> = values.iter().map(i64::to_string).collect();
            return Err(HessexError::NonStrictWeight(format!("({})", shown.join(","))));
        }
        Ok(WeightVector { values })
    }

    /// `λ = (a_1 + a_2, a_1, 0)`.
    pub fn pet3(a1: i64, a2: i64) -> Result<WeightVector> {
        WeightVector::new(vec![a1 + a2, a1, 0])
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// Shift so that `λ_n = 0`.
    pub fn normalized(&self) -> WeightVector {
        let last = *self.values.last().expect("nonempty");
        WeightVector { values: self.values.iter().map(|v| v - last).collect() }
    }

    /// Gaps `a_i = λ_i - λ_{i+1}`.
    pub fn gaps(&self) -> Vec<i64> {
        self.values.windows(2).map(|w| w[0] - w[1]).collect()
    }

    fn point(&self) -> BTreeMap<Var, Rational> {
        self.values.iter().enumerate().map(|(k, v)| (Var::L(k as u32 + 1), int(*v))).collect()
    }
}

impl FromStr for WeightVector {
    type Err = HessexError;
    fn from_str(s: &str) -> Result<Self> {
        let values = s
            .split(',')
            .map(|p| p.trim().parse::<i64>().map_err(|_| HessexError::Parse(format!("not a list of integers: {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        WeightVector::new(values)
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shown: Vec<String> = self.values.iter().map(i64::to_string).collect();
        f.write_str(&shown.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VolumePolynomial {
    pub h: HessenbergFunction,
    /// Polynomial in `L_1, ..., L_n`.
    pub poly: MultiPoly,
    pub d: usize,
}

fn check_weight(h: &HessenbergFunction, lambda: &WeightVector) -> Result<()> {
    if h.n() != lambda.n() {
        return Err(HessexError::DimensionMismatch(format!("weight has {} entries but n = {}", lambda.n(), h.n())));
    }
    Ok(())
}

/// `∏_{k<l} (L_k - L_l) / (l - k)`.
pub fn scaled_vandermonde(n: usize) -> MultiPoly {
    let vars: Vec<Var> = (1..=n as u32).map(Var::L).collect();
    let mut acc = MultiPoly::one().with_universe(vars.iter().copied());
    for k in 1..=n {
        for l in k + 1..=n {
            let diff = MultiPoly::var(Var::L(k as u32)).sub(&MultiPoly::var(Var::L(l as u32)));
            acc = acc.mul(&diff.scale(&Rational::new(BigInt::one(), BigInt::from(l - k))));
        }
    }
    acc
}

/// Applies `∂_{i,j} = ∂_{L_j} - ∂_{L_i}` for each `(i, j)` in `pairs`, in order.
pub fn apply_operators(mut p: MultiPoly, pairs: &[(usize, usize)]) -> Result<MultiPoly> {
    for &(i, j) in pairs {
        let dj = p.partial_derivative(&Var::L(j as u32))?;
        let di = p.partial_derivative(&Var::L(i as u32))?;
        p = dj.sub(&di);
    }
    Ok(p)
}

/// `P_h = (∏_{i > h(j)} ∂_{i,j}) ∏_{k<l} (L_k - L_l)/(l - k)`.
pub fn volume_polynomial(h: &HessenbergFunction) -> VolumePolynomial {
    let poly = apply_operators(scaled_vandermonde(h.n()), &h.constrained_cells()).expect("variables in universe");
    VolumePolynomial { h: h.clone(), poly, d: h.dimension() }
}

/// `P_h(λ)`.
pub fn volume(h: &HessenbergFunction, lambda: &WeightVector) -> Result<Rational> {
    check_weight(h, lambda)?;
    volume_polynomial(h).poly.evaluate(&lambda.point())
}

/// `d! P_h(λ)`, which must be an integer, and positive when `h` is indecomposable.
pub fn degree(h: &HessenbergFunction, lambda: &WeightVector) -> Result<BigInt> {
    let vol = volume(h, lambda)?;
    let deg = vol * Rational::from_integer(factorial(h.dimension()));
    if !deg.is_integer() {
        return Err(HessexError::Inconsistent(format!("d! * volume = {} is not an integer", format_rational(&deg))));
    }
    if h.is_indecomposable() && !deg.is_positive() {
        return Err(HessexError::Inconsistent(format!("degree {} is not positive", format_rational(&deg))));
    }
    Ok(deg.to_integer())
}

/// `∏_{k<l} (λ_k - λ_l) / (l - k)`.
pub fn gc_flag_volume(lambda: &WeightVector) -> Rational {
    let v = lambda.values();
    let mut acc = Rational::one();
    for k in 0..v.len() {
        for l in k + 1..v.len() {
            acc *= Rational::new(BigInt::from(v[k] - v[l]), BigInt::from(l - k));
        }
    }
    acc
}

fn check_distinct(t: &[Rational]) -> Result<()> {
    for a in 0..t.len() {
        for b in a + 1..t.len() {
            if t[a] == t[b] {
                return Err(HessexError::RepeatedValues(format!(
                    "t_{} = t_{} = {}",
                    a + 1,
                    b + 1,
                    format_rational(&t[a])
                )));
            }
        }
    }
    Ok(())
}

/// Sum over the permutations `w` with `w(1) = first`.
fn abbv_block(h: &HessenbergFunction, lambda: &[Rational], t: &[Rational], first: usize) -> Rational {
    let n = h.n();
    let d = h.dimension();
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|j| (j + 1..=h.at(j)).map(move |i| (i, j))).collect();
    let rest: Vec<usize> = (1..=n).filter(|&v| v != first).collect();
    let mut total = Rational::zero();
    let tails = if n == 1 { vec![Permutation::identity(1)] } else { Permutation::all(n - 1) };
    for tail in tails {
        let mut w = Vec::with_capacity(n);
        w.push(first);
        if n > 1 {
            w.extend(tail.one_line().iter().map(|&k| rest[k - 1]));
        }
        let numer: Rational = (0..n).map(|i| &lambda[i] * &t[w[i] - 1]).sum();
        let mut denom = Rational::one();
        for &(i, j) in &pairs {
            denom *= &t[w[j - 1] - 1] - &t[w[i - 1] - 1];
        }
        total += num_traits::pow(numer, d) / denom;
    }
    total
}

/// `(1/d!) Σ_w (Σ_i λ_i t_{w(i)})^d / ∏_{j < i <= h(j)} (t_{w(j)} - t_{w(i)})`,
/// summed in blocks by `w(1)` on up to `threads` worker threads.
pub fn abbv_volume(h: &HessenbergFunction, lambda: &WeightVector, t: &[Rational], threads: usize) -> Result<Rational> {
    check_weight(h, lambda)?;
    if t.len() != h.n() {
        return Err(HessexError::DimensionMismatch(format!("{} t values given for n = {}", t.len(), h.n())));
    }
    check_distinct(t)?;
    let n = h.n();
    let lam: Vec<Rational> = lambda.values().iter().map(|v| int(*v)).collect();
    let threads = threads.clamp(1, n);
    let mut blocks: Vec<Rational> = vec![Rational::zero(); n];
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..threads)
            .map(|worker| {
                let lam = &lam;
                scope.spawn(move || {
                    (1..=n)
                        .filter(|first| (first - 1) % threads == worker)
                        .map(|first| (first, abbv_block(h, lam, t, first)))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        for handle in handles {
            for (first, sum) in handle.join().expect("worker panicked") {
                blocks[first - 1] = sum;
            }
        }
    });
    let total: Rational = blocks.into_iter().sum();
    Ok(total / Rational::from_integer(factorial(h.dimension())))
}

/// Default evaluation point `t = (1, 2, ..., n)`.
pub fn default_t(n: usize) -> Vec<Rational> {
    (1..=n as i64).map(int).collect()
}

/// `count` vectors of pairwise distinct rationals drawn from a ChaCha stream seeded with `seed`.
pub fn seeded_t_vectors(n: usize, count: usize, seed: u64) -> Vec<Vec<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_distinct_rationals(&mut rng, n)).collect()
}

pub fn random_distinct_rationals<R: Rng>(rng: &mut R, n: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::with_capacity(n);
    while out.len() < n {
        let num: i64 = rng.gen_range(-60..=60);
        let den: i64 = rng.gen_range(1..=9);
        let r = Rational::new(BigInt::from(num), BigInt::from(den));
        if !out.contains(&r) {
            out.push(r);
        }
    }
    out
}
