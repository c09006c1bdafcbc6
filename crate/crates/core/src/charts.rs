//! Affine coordinate charts of the flag variety and the generators of
//! Hessenberg ideals (and their one-parameter families) in those charts.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{HessexError, Result};
use crate::exactalg::{format_rational, MonomialOrder, MultiPoly, PolyMatrix, Rational, Var};
use crate::hessenberg::{HessenbergFunction, Permutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChartEntry {
    Zero,
    One,
    Variable(Var),
}

/// Pattern of the chart matrix `wM`: a 1 in every position `(w(j), j)`, a 0 in
/// `(w(i), j)` for `j > i`, and a coordinate `x_{r,c}` everywhere else.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChartLayout {
    w: Permutation,
    cells: Vec<ChartEntry>,
}

impl ChartLayout {
    pub fn new(w: &Permutation) -> ChartLayout {
        let n = w.n();
        let mut cells = Vec::with_capacity(n * n);
        for r in 1..=n {
            let i = w.inverse().at(r);
            for c in 1..=n {
                let entry = if c == i {
                    ChartEntry::One
                } else if c > i {
                    ChartEntry::Zero
                } else {
                    ChartEntry::Variable(Var::x(r, c))
                };
                cells.push(entry);
            }
        }
        ChartLayout { w: w.clone(), cells }
    }

    pub fn w(&self) -> &Permutation {
        &self.w
    }

    pub fn n(&self) -> usize {
        self.w.n()
    }

    /// Entry at 1-based `(r, c)`.
    pub fn entry(&self, r: usize, c: usize) -> ChartEntry {
        self.cells[(r - 1) * self.n() + (c - 1)]
    }

    /// Chart coordinates in natural order.
    pub fn variables(&self) -> Vec<Var> {
        let mut vars: Vec<Var> = self
            .cells
            .iter()
            .filter_map(|e| match e {
                ChartEntry::Variable(v) => Some(*v),
                _ => None,
            })
            .collect();
        vars.sort();
        vars
    }

    pub fn matrix(&self) -> PolyMatrix {
        let vars = self.variables();
        PolyMatrix::from_fn(self.n(), self.n(), |r, c| {
            let p = match self.entry(r + 1, c + 1) {
                ChartEntry::Zero => MultiPoly::zero(),
                ChartEntry::One => MultiPoly::one(),
                ChartEntry::Variable(v) => MultiPoly::var(v),
            };
            p.with_universe(vars.iter().copied())
        })
    }
}

pub fn build_chart_matrix(w: &Permutation) -> PolyMatrix {
    ChartLayout::new(w).matrix()
}

/// Eigenvalues `γ_1, ..., γ_n` of the semisimple part of the family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyParameters {
    Numeric(Vec<Rational>),
    /// Keep each `γ_k` as the variable `g_k`.
    Symbolic(usize),
}

impl FamilyParameters {
    pub fn numeric(gamma: Vec<Rational>) -> Result<FamilyParameters> {
        for a in 0..gamma.len() {
            for b in a + 1..gamma.len() {
                if gamma[a] == gamma[b] {
                    return Err(HessexError::RepeatedValues(format!(
                        "gamma_{} = gamma_{} = {}",
                        a + 1,
                        b + 1,
                        format_rational(&gamma[a])
                    )));
                }
            }
        }
        Ok(FamilyParameters::Numeric(gamma))
    }

    /// `γ = (1, 2, ..., n)`.
    pub fn standard(n: usize) -> FamilyParameters {
        FamilyParameters::Numeric((1..=n as i64).map(crate::exactalg::rational::int).collect())
    }

    pub fn n(&self) -> usize {
        match self {
            FamilyParameters::Numeric(g) => g.len(),
            FamilyParameters::Symbolic(n) => *n,
        }
    }

    /// `γ_k` as a polynomial, 1-based.
    pub fn gamma(&self, k: usize) -> MultiPoly {
        match self {
            FamilyParameters::Numeric(g) => MultiPoly::constant(g[k - 1].clone()),
            FamilyParameters::Symbolic(_) => MultiPoly::var(Var::Gamma(k as u32)),
        }
    }

    pub fn values(&self) -> Option<&[Rational]> {
        match self {
            FamilyParameters::Numeric(g) => Some(g),
            FamilyParameters::Symbolic(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub i: usize,
    pub j: usize,
    pub poly: MultiPoly,
}

/// Generators of a Hessenberg ideal in the chart of `w`, ordered by `(j, i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChartIdeal {
    pub w: Permutation,
    pub h: HessenbergFunction,
    pub generators: Vec<Generator>,
    /// Whether the generators are those of the one-parameter family (involving `t`).
    pub family: bool,
    /// Value substituted for `t`, if this is a specialised fiber.
    pub fiber: Option<Rational>,
}

impl ChartIdeal {
    pub fn generator(&self, i: usize, j: usize) -> Option<&MultiPoly> {
        self.generators.iter().find(|g| g.i == i && g.j == j).map(|g| &g.poly)
    }

    pub fn polys(&self) -> impl Iterator<Item = &MultiPoly> {
        self.generators.iter().map(|g| &g.poly)
    }

    pub fn to_json(&self, order: &MonomialOrder) -> serde_json::Value {
        let gens: Vec<serde_json::Value> = self
            .generators
            .iter()
            .map(|g| serde_json::json!({ "i": g.i, "j": g.j, "poly": g.poly.to_json(order) }))
            .collect();
        let mut out = serde_json::json!({
            "w": self.w.one_line(),
            "h": self.h.values(),
            "family": self.family,
            "generators": gens,
        });
        if let Some(z) = &self.fiber {
            out["t"] = serde_json::Value::String(format_rational(z));
        }
        out
    }

    pub fn to_text(&self, order: &MonomialOrder) -> String {
        let name = if self.family && self.fiber.is_none() { "F" } else { "f" };
        self.generators.iter().map(|g| format!("{name}_{{{},{}}} = {}\n", g.i, g.j, g.poly.to_text(order))).collect()
    }
}

impl fmt::Display for ChartIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(&MonomialOrder::natural()))
    }
}

fn check_sizes(w: &Permutation, h: &HessenbergFunction) -> Result<()> {
    if w.n() != h.n() {
        return Err(HessexError::DimensionMismatch(format!("permutation has size {} but h has size {}", w.n(), h.n())));
    }
    Ok(())
}

/// Entries of `(wM)^{-1} N (wM)` below the Hessenberg profile, with `N` the
/// regular nilpotent matrix (ones on the superdiagonal).
pub fn ideal_generators(w: &Permutation, h: &HessenbergFunction) -> Result<ChartIdeal> {
    check_sizes(w, h)?;
    let layout = ChartLayout::new(w);
    let m = layout.matrix();
    let inv = m.unimodular_inverse()?;
    let n = w.n();
    let vars = layout.variables();
    let generators = h
        .constrained_cells()
        .into_iter()
        .map(|(i, j)| {
            let mut acc = MultiPoly::zero().with_universe(vars.iter().copied());
            for k in 1..n {
                let a = inv.get(i - 1, k - 1);
                let b = m.get(k, j - 1);
                if !a.is_zero() && !b.is_zero() {
                    acc = acc.add(&a.mul(b));
                }
            }
            Generator { i, j, poly: acc }
        })
        .collect();
    Ok(ChartIdeal { w: w.clone(), h: h.clone(), generators, family: false, fiber: None })
}

/// Entries of `(wM)^{-1} Γ_t (wM)` below the Hessenberg profile, where `Γ_t`
/// has `t γ_k` on the diagonal and ones on the superdiagonal.
pub fn family_generators(w: &Permutation, h: &HessenbergFunction, params: &FamilyParameters) -> Result<ChartIdeal> {
    check_sizes(w, h)?;
    if params.n() != w.n() {
        return Err(HessexError::DimensionMismatch(format!("{} gamma values given for n = {}", params.n(), w.n())));
    }
    let layout = ChartLayout::new(w);
    let m = layout.matrix();
    let inv = m.unimodular_inverse()?;
    let n = w.n();
    let t = MultiPoly::var(Var::T);
    let mut universe = layout.variables();
    universe.push(Var::T);
    if let FamilyParameters::Symbolic(n) = params {
        universe.extend((1..=*n).map(|k| Var::Gamma(k as u32)));
    }
    let diag: Vec<MultiPoly> = (1..=n).map(|k| t.mul(&params.gamma(k))).collect();
    let generators = h
        .constrained_cells()
        .into_iter()
        .map(|(i, j)| {
            let mut acc = MultiPoly::zero().with_universe(universe.iter().copied());
            for k in 1..=n {
                let a = inv.get(i - 1, k - 1);
                if a.is_zero() {
                    continue;
                }
                let mut col = diag[k - 1].mul(m.get(k - 1, j - 1));
                if k < n {
                    col = col.add(m.get(k, j - 1));
                }
                if !col.is_zero() {
                    acc = acc.add(&a.mul(&col));
                }
            }
            Generator { i, j, poly: acc }
        })
        .collect();
    Ok(ChartIdeal { w: w.clone(), h: h.clone(), generators, family: true, fiber: None })
}

/// Substitutes `t = z` into every generator of a family ideal.
pub fn specialize_fiber(ci: &ChartIdeal, z: &Rational) -> Result<ChartIdeal> {
    if !ci.family || ci.fiber.is_some() {
        return Err(HessexError::NotFamily);
    }
    let mut bindings = BTreeMap::new();
    bindings.insert(Var::T, MultiPoly::constant(z.clone()));
    let generators = ci
        .generators
        .iter()
        .map(|g| Generator { i: g.i, j: g.j, poly: g.poly.substitute(&bindings) })
        .collect();
    Ok(ChartIdeal { w: ci.w.clone(), h: ci.h.clone(), generators, family: true, fiber: Some(z.clone()) })
}

/// True when every generator of the fiber equals the corresponding generator of `other`.
pub fn same_generators(a: &ChartIdeal, b: &ChartIdeal) -> bool {
    a.generators.len() == b.generators.len()
        && a.generators.iter().zip(&b.generators).all(|(x, y)| x.i == y.i && x.j == y.j && x.poly == y.poly)
}
