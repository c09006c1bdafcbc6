//! Hessenberg functions and permutations in one-line notation.
//!
//! All indices exposed by this module are 1-based, matching the usual
//! matrix conventions. Composition is `(u∘v)(i) = u(v(i))`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{HessexError, Result};
use crate::exactalg::{MultiPoly, PolyMatrix};

/// A weakly increasing map `h: [n] -> [n]` with `h(i) >= i` and `h(n) = n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HessenbergFunction {
    values: Vec<usize>,
}

impl HessenbergFunction {
    pub fn new(values: Vec<usize>) -> Result<HessenbergFunction> {
        let invalid = |reason: String| HessexError::InvalidHessenberg { values: values.clone(), reason };
        let n = values.len();
        if n == 0 {
            return Err(invalid("empty".into()));
        }
        for (idx, &v) in values.iter().enumerate() {
            let i = idx + 1;
            if v < i {
                return Err(invalid(format!("h({i}) = {v} < {i}")));
            }
            if v > n {
                return Err(invalid(format!("h({i}) = {v} exceeds n = {n}")));
            }
            if idx > 0 && v < values[idx - 1] {
                return Err(invalid(format!("h({i}) = {v} < h({}) = {}", i - 1, values[idx - 1])));
            }
        }
        if values[n - 1] != n {
            return Err(invalid(format!("h({n}) = {} must equal n", values[n - 1])));
        }
        Ok(HessenbergFunction { values })
    }

    /// `h(i) = n` for all i: the full flag variety.
    pub fn full(n: usize) -> HessenbergFunction {
        HessenbergFunction { values: vec![n; n] }
    }

    /// `h(i) = min(i + 1, n)`: the Peterson variety.
    pub fn peterson(n: usize) -> HessenbergFunction {
        HessenbergFunction { values: (1..=n).map(|i| (i + 1).min(n)).collect() }
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// `h(j)`, 1-based.
    pub fn at(&self, j: usize) -> usize {
        self.values[j - 1]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn is_indecomposable(&self) -> bool {
        (1..self.n()).all(|j| self.at(j) > j)
    }

    /// First `j < n` with `h(j) = j`, if any.
    pub fn first_split(&self) -> Option<usize> {
        (1..self.n()).find(|&j| self.at(j) == j)
    }

    pub fn require_indecomposable(&self) -> Result<()> {
        match self.first_split() {
            None => Ok(()),
            Some(j) => Err(HessexError::Decomposable { h: self.to_string(), j }),
        }
    }

    pub fn dimension(&self) -> usize {
        self.values.iter().enumerate().map(|(idx, v)| v - (idx + 1)).sum()
    }

    /// Number of positions `(i, j)` with `i > h(j)`.
    pub fn codimension(&self) -> usize {
        self.values.iter().map(|v| self.n() - v).sum()
    }

    /// Splits at every `j < n` with `h(j) = j` into indecomposable blocks.
    pub fn decompose(&self) -> Vec<HessenbergFunction> {
        let mut blocks = Vec::new();
        let mut start = 0;
        for j in 1..=self.n() {
            if self.at(j) == j {
                let block = self.values[start..j].iter().map(|v| v - start).collect();
                blocks.push(HessenbergFunction { values: block });
                start = j;
            }
        }
        blocks
    }

    /// Positions `(i, j)` with `i > h(j)`, ascending in `(j, i)`.
    pub fn constrained_cells(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        (1..=n).flat_map(|j| (self.at(j) + 1..=n).map(move |i| (i, j))).collect()
    }

    /// Positions `(i, j)` with `i <= h(j)`.
    pub fn shaded_cells(&self) -> BTreeSet<(usize, usize)> {
        (1..=self.n()).flat_map(|j| (1..=self.at(j)).map(move |i| (i, j))).collect()
    }

    /// Text picture of the Hessenberg space, `#` for free entries, `.` for forced zeros.
    pub fn mask_picture(&self) -> String {
        let n = self.n();
        let mut out = String::new();
        for i in 1..=n {
            let row: String = (1..=n).map(|j| if i <= self.at(j) { '#' } else { '.' }).collect();
            out.push_str(&row);
            out.push('\n');
        }
        out
    }

    /// All Hessenberg functions of size `n`, in lexicographic order.
    pub fn all(n: usize) -> Vec<HessenbergFunction> {
        fn extend(n: usize, prefix: &mut Vec<usize>, out: &mut Vec<HessenbergFunction>) {
            let i = prefix.len() + 1;
            if i > n {
                out.push(HessenbergFunction { values: prefix.clone() });
                return;
            }
            let lo = i.max(prefix.last().copied().unwrap_or(1));
            let lo = if i == n { n } else { lo };
            for v in lo..=n {
                prefix.push(v);
                extend(n, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            extend(n, &mut Vec::new(), &mut out);
        }
        out
    }

    pub fn all_indecomposable(n: usize) -> Vec<HessenbergFunction> {
        HessenbergFunction::all(n).into_iter().filter(HessenbergFunction::is_indecomposable).collect()
    }
}

fn parse_list(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|s| s.trim().parse::<usize>().map_err(|_| HessexError::Parse(format!("not a list of positive integers: {text:?}"))))
        .collect()
}

fn join(values: &[usize]) -> String {
    values.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

impl FromStr for HessenbergFunction {
    type Err = HessexError;
    fn from_str(s: &str) -> Result<Self> {
        HessenbergFunction::new(parse_list(s)?)
    }
}

impl fmt::Display for HessenbergFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.values))
    }
}

/// Permutation of `[n]` in one-line notation `w(1), ..., w(n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    one_line: Vec<usize>,
}

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Permutation> {
        let n = one_line.len();
        if n == 0 {
            return Err(HessexError::InvalidPermutation { values: one_line, reason: "empty".into() });
        }
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v == 0 || v > n {
                return Err(HessexError::InvalidPermutation {
                    values: one_line.clone(),
                    reason: format!("value {v} outside 1..={n}"),
                });
            }
            if seen[v] {
                return Err(HessexError::InvalidPermutation {
                    values: one_line.clone(),
                    reason: format!("value {v} repeated"),
                });
            }
            seen[v] = true;
        }
        Ok(Permutation { one_line })
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation { one_line: (1..=n).collect() }
    }

    /// The longest element `w0(i) = n + 1 - i`.
    pub fn longest(n: usize) -> Permutation {
        Permutation { one_line: (1..=n).rev().collect() }
    }

    /// Simple transposition `s_a` exchanging `a` and `a + 1`.
    pub fn simple(n: usize, a: usize) -> Result<Permutation> {
        if a == 0 || a >= n {
            return Err(HessexError::InvalidArgument(format!("no simple transposition s_{a} in S_{n}")));
        }
        let mut one_line: Vec<usize> = (1..=n).collect();
        one_line.swap(a - 1, a);
        Ok(Permutation { one_line })
    }

    pub fn n(&self) -> usize {
        self.one_line.len()
    }

    /// `w(i)`, 1-based.
    pub fn at(&self, i: usize) -> usize {
        self.one_line[i - 1]
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (idx, &v) in self.one_line.iter().enumerate() {
            inv[v - 1] = idx + 1;
        }
        Permutation { one_line: inv }
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.one_line;
        (0..w.len()).map(|a| (a + 1..w.len()).filter(|&b| w[a] > w[b]).count()).sum()
    }

    pub fn is_longest(&self) -> bool {
        *self == Permutation::longest(self.n())
    }

    pub fn is_identity(&self) -> bool {
        *self == Permutation::identity(self.n())
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(HessexError::DimensionMismatch(format!(
                "cannot compose permutations of sizes {} and {}",
                self.n(),
                other.n()
            )));
        }
        Ok(Permutation { one_line: other.one_line.iter().map(|&i| self.at(i)).collect() })
    }

    /// Permutation matrix with a 1 in position `(w(j), j)`.
    pub fn matrix(&self) -> PolyMatrix {
        let n = self.n();
        PolyMatrix::from_fn(n, n, |r, c| if self.one_line[c] == r + 1 { MultiPoly::one() } else { MultiPoly::zero() })
    }

    /// All permutations of `[n]` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut current: Vec<usize> = (1..=n).collect();
        let mut out = vec![Permutation { one_line: current.clone() }];
        loop {
            let Some(pivot) = (1..n).rev().find(|&k| current[k - 1] < current[k]) else {
                return out;
            };
            let succ = (pivot..n).rev().find(|&k| current[k] > current[pivot - 1]).unwrap();
            current.swap(pivot - 1, succ);
            current[pivot..].reverse();
            out.push(Permutation { one_line: current.clone() });
        }
    }
}

impl FromStr for Permutation {
    type Err = HessexError;
    fn from_str(s: &str) -> Result<Self> {
        Permutation::new(parse_list(s)?)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.one_line))
    }
}
