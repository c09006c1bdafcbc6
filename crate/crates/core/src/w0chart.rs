//! Structure of Hessenberg ideals in the chart of the longest permutation:
//! the y-table, free and non-free coordinates, triangular elimination at
//! `t = 0` and on the fibers `t = z != 0` of the family.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use crate::charts::{family_generators, specialize_fiber, ChartIdeal, FamilyParameters, Generator};
use crate::error::{HessexError, Result};
use crate::exactalg::{Monomial, MonomialOrder, MultiPoly, PolyMatrix, Rational, Var};
use crate::hessenberg::{HessenbergFunction, Permutation};

/// Chart coordinates of the longest chart: positions `(i, j)` with `i + j <= n`.
pub fn w0_variables(n: usize) -> Vec<Var> {
    let mut vars: Vec<Var> = (1..=n).flat_map(|i| (1..=n - i).map(move |j| Var::x(i, j))).collect();
    vars.sort();
    vars
}

/// Entry `(r, c)` of the longest chart matrix, 1-based.
fn chart_entry(n: usize, r: usize, c: usize) -> MultiPoly {
    match (r + c).cmp(&(n + 1)) {
        std::cmp::Ordering::Less => MultiPoly::var(Var::x(r, c)),
        std::cmp::Ordering::Equal => MultiPoly::one(),
        std::cmp::Ordering::Greater => MultiPoly::zero(),
    }
}

/// `y_{i,j} = (M^{-1})_{n+1-i, n+1-j}` for the longest chart, built by the
/// column recursion `y_{i,j} = δ_{n+1-i,j} - Σ_{k=1}^{n-j} y_{i,n+1-k} x_{k,j}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YTable {
    n: usize,
    entries: Vec<MultiPoly>,
}

impl YTable {
    pub fn new(n: usize) -> YTable {
        let vars = w0_variables(n);
        let mut entries = vec![MultiPoly::zero(); n * n];
        for i in 1..=n {
            for j in (1..=n).rev() {
                let mut y = if n + 1 - i == j { MultiPoly::one() } else { MultiPoly::zero() };
                for k in 1..=n - j {
                    let prev = &entries[(i - 1) * n + (n - k)];
                    if !prev.is_zero() {
                        y = y.sub(&prev.mul(&MultiPoly::var(Var::x(k, j))));
                    }
                }
                entries[(i - 1) * n + (j - 1)] = y.with_universe(vars.iter().copied());
            }
        }
        YTable { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `y_{i,j}`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> &MultiPoly {
        &self.entries[(i - 1) * self.n + (j - 1)]
    }

    /// The inverse of the longest chart matrix assembled from the table.
    pub fn inverse_matrix(&self) -> PolyMatrix {
        let n = self.n;
        PolyMatrix::from_fn(n, n, |r, c| self.get(n - r, n - c).clone())
    }
}

pub fn y_table(n: usize) -> YTable {
    YTable::new(n)
}

pub fn w0_chart_matrix(n: usize) -> PolyMatrix {
    let vars = w0_variables(n);
    PolyMatrix::from_fn(n, n, |r, c| chart_entry(n, r + 1, c + 1).with_universe(vars.iter().copied()))
}

/// Generators `f_{n+1-i,j} = x_{i+1,j} + Σ_{k=i+1}^{n-j} x_{k+1,j} y_{i,n+1-k}`
/// for every `n+1-i > h(j)`, ordered by `(j, n+1-i)`.
pub fn generators_closed_form(h: &HessenbergFunction) -> ChartIdeal {
    let n = h.n();
    let table = YTable::new(n);
    let vars = w0_variables(n);
    let generators = h
        .constrained_cells()
        .into_iter()
        .map(|(row, j)| {
            let i = n + 1 - row;
            let mut f = chart_entry(n, i + 1, j).with_universe(vars.iter().copied());
            for k in i + 1..=n - j {
                let x = chart_entry(n, k + 1, j);
                if !x.is_zero() {
                    f = f.add(&x.mul(table.get(i, n + 1 - k)));
                }
            }
            Generator { i: row, j, poly: f }
        })
        .collect();
    ChartIdeal { w: Permutation::longest(n), h: h.clone(), generators, family: false, fiber: None }
}

/// Split of the longest-chart coordinates into those eliminated by the ideal and the rest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariableClassification {
    pub h: HessenbergFunction,
    /// Positions `(i, j)` with `1 <= j <= n-1` and `2 <= i <= n+1-h(j)`.
    pub non_free: BTreeSet<(usize, usize)>,
    pub free: BTreeSet<(usize, usize)>,
}

impl VariableClassification {
    pub fn free_vars(&self) -> Vec<Var> {
        self.free.iter().map(|&(i, j)| Var::x(i, j)).collect()
    }

    pub fn non_free_vars(&self) -> Vec<Var> {
        self.non_free.iter().map(|&(i, j)| Var::x(i, j)).collect()
    }
}

pub fn classify_variables(h: &HessenbergFunction) -> Result<VariableClassification> {
    h.require_indecomposable()?;
    let n = h.n();
    let non_free: BTreeSet<(usize, usize)> =
        (1..n).flat_map(|j| (2..=n + 1 - h.at(j)).map(move |i| (i, j))).collect();
    let free = (1..=n)
        .flat_map(|i| (1..=n - i).map(move |j| (i, j)))
        .filter(|c| !non_free.contains(c))
        .collect();
    Ok(VariableClassification { h: h.clone(), non_free, free })
}

/// Triangular solution of a chart ideal for some of its coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Elimination {
    pub h: HessenbergFunction,
    /// Eliminated coordinate, in the order it was solved, with its image in the free coordinates.
    pub substitution: Vec<(Var, MultiPoly)>,
    pub free: Vec<Var>,
    /// Generators that did not reduce to zero under the substitution (empty on success).
    pub residuals: Vec<Generator>,
    /// `t` value of the fiber, `None` for the ideal itself.
    pub fiber: Option<Rational>,
}

impl Elimination {
    pub fn is_verified(&self) -> bool {
        self.residuals.is_empty()
    }

    pub fn image(&self, v: &Var) -> Option<&MultiPoly> {
        self.substitution.iter().find(|(u, _)| u == v).map(|(_, p)| p)
    }

    pub fn bindings(&self) -> BTreeMap<Var, MultiPoly> {
        self.substitution.iter().cloned().collect()
    }

    pub fn to_json(&self, order: &MonomialOrder) -> serde_json::Value {
        let subs: Vec<serde_json::Value> = self
            .substitution
            .iter()
            .map(|(v, p)| serde_json::json!({ "var": v.to_string(), "poly": p.to_json(order) }))
            .collect();
        serde_json::json!({
            "free": self.free.iter().map(Var::to_string).collect::<Vec<_>>(),
            "substitution": subs,
            "verified": self.is_verified(),
        })
    }

    pub fn to_text(&self, order: &MonomialOrder) -> String {
        let mut out = String::new();
        let free: Vec<String> = self.free.iter().map(Var::to_string).collect();
        out.push_str(&format!("free: {}\n", free.join(", ")));
        for (v, p) in &self.substitution {
            out.push_str(&format!("{v} -> {}\n", p.to_text(order)));
        }
        out.push_str(&format!("verified: {}\n", self.is_verified()));
        out
    }
}

/// Solves `gens[k]` for `targets[k]` in the given order. Each target must occur
/// linearly with a nonzero constant coefficient, and after substituting earlier
/// solutions its image must involve only `free` coordinates.
fn triangular_solve(steps: Vec<(Var, &MultiPoly)>, free: &BTreeSet<Var>) -> Result<Vec<(Var, MultiPoly)>> {
    let mut solved: BTreeMap<Var, MultiPoly> = BTreeMap::new();
    let mut order = Vec::new();
    for (target, g) in steps {
        let (coef, rest) = g
            .linear_split(&target)
            .ok_or_else(|| HessexError::Inconsistent(format!("{target} occurs nonlinearly in {g}")))?;
        let c = match coef.constant_value() {
            Some(c) if !c.is_zero() => c,
            _ => return Err(HessexError::Inconsistent(format!("coefficient {coef} of {target} is not a nonzero constant"))),
        };
        let image = rest.substitute(&solved).scale(&(-c.recip()));
        if let Some(bad) = image.variables().into_iter().find(|v| !free.contains(v)) {
            return Err(HessexError::Inconsistent(format!("image of {target} still involves {bad}")));
        }
        solved.insert(target, image.clone());
        order.push((target, image));
    }
    Ok(order)
}

fn residuals(ideal: &ChartIdeal, bindings: &BTreeMap<Var, MultiPoly>) -> Vec<Generator> {
    ideal
        .generators
        .iter()
        .map(|g| Generator { i: g.i, j: g.j, poly: g.poly.substitute(bindings) })
        .filter(|g| !g.poly.is_zero())
        .collect()
}

/// Eliminates every non-free coordinate of `J_{w0,h}`: the generator in row
/// `n+1-i` and column `j` is solved for `x_{i+1,j}`, working from the last
/// column to the first and from the bottom row upwards within a column.
pub fn eliminate(h: &HessenbergFunction) -> Result<Elimination> {
    let class = classify_variables(h)?;
    let n = h.n();
    let ideal = generators_closed_form(h);
    let free: BTreeSet<Var> = class.free_vars().into_iter().collect();
    let mut cells = h.constrained_cells();
    cells.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
    let steps = cells
        .iter()
        .map(|&(row, j)| (Var::x(n + 2 - row, j), ideal.generator(row, j).expect("generator present")))
        .collect();
    let substitution = triangular_solve(steps, &free)?;
    let bindings = substitution.iter().cloned().collect();
    let residuals = residuals(&ideal, &bindings);
    Ok(Elimination { h: h.clone(), substitution, free: free.into_iter().collect(), residuals, fiber: None })
}

/// One generator's witness for the technical lemma:
/// `f_{n+1-i,j} = x_{i+1,j} - g` with `g` in the ideal `(x_{i,l} : j+1 <= l <= n-i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TechLemmaEntry {
    pub row: usize,
    pub j: usize,
    pub i: usize,
    pub g: MultiPoly,
    pub allowed: Vec<Var>,
    /// Monomials of `g` divisible by no allowed coordinate.
    pub violations: Vec<Monomial>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TechLemmaReport {
    pub entries: Vec<TechLemmaEntry>,
}

impl TechLemmaReport {
    pub fn holds(&self) -> bool {
        self.entries.iter().all(|e| e.violations.is_empty())
    }
}

pub fn check_tech_lemma(h: &HessenbergFunction) -> TechLemmaReport {
    let n = h.n();
    let ideal = generators_closed_form(h);
    let entries = ideal
        .generators
        .iter()
        .map(|gen| {
            let i = n + 1 - gen.i;
            let j = gen.j;
            let g = chart_entry(n, i + 1, j).sub(&gen.poly);
            let allowed: Vec<Var> = (j + 1..=n.saturating_sub(i)).map(|l| Var::x(i, l)).collect();
            let violations = g
                .terms()
                .map(|(m, _)| m)
                .filter(|m| !allowed.iter().any(|v| m.exponent(v) > 0))
                .cloned()
                .collect();
            TechLemmaEntry { row: gen.i, j, i, g, allowed, violations }
        })
        .collect();
    TechLemmaReport { entries }
}

/// Eliminates the fiber `t = z` of the family ideal in the longest chart. The
/// generator in row `n+1-i` and column `j` has the term `z(γ_i - γ_{n+1-j}) x_{i,j}`
/// and is solved for `x_{i,j}`.
pub fn eliminate_family_fiber(h: &HessenbergFunction, z: &Rational, gamma: &[Rational]) -> Result<Elimination> {
    h.require_indecomposable()?;
    if z.is_zero() {
        return Err(HessexError::ZeroFiber);
    }
    let n = h.n();
    let params = FamilyParameters::numeric(gamma.to_vec())?;
    let family = family_generators(&Permutation::longest(n), h, &params)?;
    let fiber = specialize_fiber(&family, z)?;
    let targets: BTreeSet<Var> = (1..n).flat_map(|j| (1..=n - h.at(j)).map(move |i| Var::x(i, j))).collect();
    let free: BTreeSet<Var> = w0_variables(n).into_iter().filter(|v| !targets.contains(v)).collect();
    let mut cells = h.constrained_cells();
    cells.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
    let mut steps = Vec::new();
    for &(row, j) in &cells {
        let i = n + 1 - row;
        let target = Var::x(i, j);
        let g = fiber.generator(row, j).expect("generator present");
        let expected = z * (&gamma[i - 1] - &gamma[n - j]);
        let (coef, _) = g
            .linear_split(&target)
            .ok_or_else(|| HessexError::Inconsistent(format!("{target} occurs nonlinearly in {g}")))?;
        if coef.constant_value().as_ref() != Some(&expected) {
            return Err(HessexError::Inconsistent(format!("coefficient of {target} in {g} is {coef}")));
        }
        steps.push((target, g));
    }
    let substitution = triangular_solve(steps, &free)?;
    let bindings = substitution.iter().cloned().collect();
    let residuals = residuals(&fiber, &bindings);
    Ok(Elimination { h: h.clone(), substitution, free: free.into_iter().collect(), residuals, fiber: Some(z.clone()) })
}
