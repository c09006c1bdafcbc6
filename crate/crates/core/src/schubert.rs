//! Rank matrices, Rothe diagrams and the chain of opposite Schubert cells
//! cut out of the longest chart by the permutations `u_ℓ`.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{HessexError, Result};
use crate::exactalg::{MultiPoly, Var};
use crate::hessenberg::{HessenbergFunction, Permutation};
use crate::w0chart::{classify_variables, eliminate};

/// `rk(w)[q,p] = #{i <= p : w(i) <= q}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankMatrix {
    n: usize,
    values: Vec<usize>,
}

impl RankMatrix {
    pub fn new(w: &Permutation) -> RankMatrix {
        let n = w.n();
        let mut values = vec![0; n * n];
        for q in 1..=n {
            for p in 1..=n {
                values[(q - 1) * n + (p - 1)] = (1..=p).filter(|&i| w.at(i) <= q).count();
            }
        }
        RankMatrix { n, values }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `rk[q][p]`, 1-based.
    pub fn get(&self, q: usize, p: usize) -> usize {
        self.values[(q - 1) * self.n + (p - 1)]
    }
}

pub fn rank_matrix(w: &Permutation) -> RankMatrix {
    RankMatrix::new(w)
}

/// Cells of the `n x n` array left after crossing out everything weakly right
/// of and weakly below each 1 of the permutation matrix of `v` (1s at `(v(j), j)`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramCells {
    pub cells: BTreeSet<(usize, usize)>,
}

impl DiagramCells {
    /// Row lengths when the cells form a top- and left-justified shape with
    /// weakly decreasing rows.
    pub fn young_shape(&self) -> Option<Vec<usize>> {
        let mut rows: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &(r, c) in &self.cells {
            rows.entry(r).or_default().push(c);
        }
        let mut shape = Vec::new();
        for (expected_row, (r, cols)) in (1..).zip(rows) {
            if r != expected_row || cols.iter().copied().ne(1..=cols.len()) {
                return None;
            }
            if shape.last().is_some_and(|&prev| prev < cols.len()) {
                return None;
            }
            shape.push(cols.len());
        }
        Some(shape)
    }

    pub fn is_young(&self) -> bool {
        self.young_shape().is_some()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }
}

pub fn rothe_cells(v: &Permutation) -> DiagramCells {
    let n = v.n();
    let inv = v.inverse();
    let cells = (1..=n)
        .flat_map(|r| (1..=n).map(move |c| (r, c)))
        .filter(|&(r, c)| v.at(c) > r && inv.at(r) > c)
        .collect();
    DiagramCells { cells }
}

/// Letters `a` of the word `(s_1)(s_2 s_1)...(s_{n-1} ... s_1)`, left to right.
fn reduced_word(n: usize) -> Vec<usize> {
    (1..n).flat_map(|k| (1..=k).rev()).collect()
}

/// `u_0 = id, ..., u_D = w0`, where `u_ℓ` is the product of the right-most `ℓ`
/// letters of the word; a product `s_{a_1} ... s_{a_k}` is the permutation
/// `s_{a_k} ∘ ... ∘ s_{a_1}`.
pub fn u_sequence(n: usize) -> Result<Vec<Permutation>> {
    if n < 2 {
        return Err(HessexError::InvalidArgument(format!("u sequence needs n >= 2, got {n}")));
    }
    let word = reduced_word(n);
    let mut out = Vec::with_capacity(word.len() + 1);
    for ell in 0..=word.len() {
        let mut u = Permutation::identity(n);
        for &a in &word[word.len() - ell..] {
            u = Permutation::simple(n, a)?.compose(&u)?;
        }
        out.push(u);
    }
    Ok(out)
}

/// Longest-chart positions `(i, j)` with `i + j <= n`, row by row.
pub fn reading_order_cells(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|i| (1..=n - i).map(move |j| (i, j))).collect()
}

/// Coordinates vanishing on the opposite Schubert cell of `w` inside the
/// longest chart: the cells of `D(w^{-1})`, which must form a Young diagram.
pub fn schubert_chart_equations(w: &Permutation) -> Result<Vec<Var>> {
    let d = rothe_cells(w);
    if !d.is_young() {
        return Err(HessexError::NotYoung(w.to_string()));
    }
    Ok(d.cells.iter().map(|&(q, p)| Var::x(q, p)).collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagStep {
    pub ell: usize,
    pub u: Permutation,
    pub shape: Vec<usize>,
    /// Cell added at this step; `None` for `ℓ = 0`.
    pub cell: Option<(usize, usize)>,
    pub proper: bool,
    pub dimension: usize,
    /// Whether, after setting the free coordinates among the first `ℓ` cells to
    /// zero, every non-free coordinate among them vanishes identically.
    pub certified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagChain {
    pub h: HessenbergFunction,
    pub steps: Vec<FlagStep>,
}

impl FlagChain {
    /// `ℓ = 0` followed by the steps that lower the dimension.
    pub fn proper_chain(&self) -> Vec<&FlagStep> {
        self.steps.iter().filter(|s| s.ell == 0 || s.proper).collect()
    }

    pub fn is_certified(&self) -> bool {
        self.steps.iter().all(|s| s.certified)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let steps: Vec<serde_json::Value> = self
            .steps
            .iter()
            .map(|s| {
                serde_json::json!({
                    "ell": s.ell,
                    "u": s.u.one_line(),
                    "shape": s.shape,
                    "cell": s.cell.map(|(i, j)| vec![i, j]),
                    "proper": s.proper,
                    "dimension": s.dimension,
                    "certified": s.certified,
                })
            })
            .collect();
        let proper: Vec<usize> = self.proper_chain().iter().map(|s| s.ell).collect();
        serde_json::json!({ "h": self.h.values(), "steps": steps, "proper_chain": proper })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for s in &self.steps {
            let cell = s.cell.map_or("-".to_string(), |(i, j)| format!("x_{{{i},{j}}}"));
            let shape: Vec<String> = s.shape.iter().map(usize::to_string).collect();
            out.push_str(&format!(
                "{:>3}  u = {:<16} shape = {:<14} cell = {:<8} {}  dim = {}\n",
                s.ell,
                s.u.to_string(),
                format!("({})", shape.join(",")),
                cell,
                if s.ell == 0 { "start" } else if s.proper { "proper" } else { "skip  " },
                s.dimension
            ));
        }
        let proper: Vec<String> = self.proper_chain().iter().map(|s| s.ell.to_string()).collect();
        out.push_str(&format!("proper chain: {}\n", proper.join(" > ")));
        out
    }
}

/// Chain of intersections of the opposite Schubert cells of `u_0, ..., u_D`
/// with the Hessenberg variety in the longest chart.
pub fn flag_chain(h: &HessenbergFunction) -> Result<FlagChain> {
    let class = classify_variables(h)?;
    let elim = eliminate(h)?;
    let n = h.n();
    let us = if n == 1 { vec![Permutation::identity(1)] } else { u_sequence(n)? };
    let order = reading_order_cells(n);
    let images = elim.bindings();
    let mut steps = Vec::with_capacity(us.len());
    let mut prev = BTreeSet::new();
    let mut dimension = h.dimension();
    for (ell, u) in us.iter().enumerate().take(order.len() + 1) {
        let diagram = rothe_cells(u);
        let shape = diagram.young_shape().ok_or_else(|| HessexError::NotYoung(u.to_string()))?;
        let added: Vec<_> = diagram.cells.difference(&prev).copied().collect();
        let cell = match (ell, added.as_slice()) {
            (0, []) => None,
            (_, [c]) if *c == order[ell - 1] => Some(*c),
            _ => return Err(HessexError::Inconsistent(format!("u_{ell} = {u} does not add reading-order cell {ell}"))),
        };
        let proper = cell.is_some_and(|c| class.free.contains(&c));
        if proper {
            dimension -= 1;
        }
        let zeros: BTreeMap<Var, MultiPoly> = order[..ell]
            .iter()
            .filter(|c| class.free.contains(c))
            .map(|&(i, j)| (Var::x(i, j), MultiPoly::zero()))
            .collect();
        let certified = order[..ell]
            .iter()
            .filter(|c| class.non_free.contains(c))
            .all(|&(i, j)| images.get(&Var::x(i, j)).is_some_and(|img| img.substitute(&zeros).is_zero()));
        steps.push(FlagStep { ell, u: u.clone(), shape, cell, proper, dimension, certified });
        prev = diagram.cells;
    }
    Ok(FlagChain { h: h.clone(), steps })
}
