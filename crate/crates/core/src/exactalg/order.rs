use std::cmp::Ordering;
use std::collections::BTreeSet;

use super::{Monomial, Var};

/// Monomial order. Only lexicographic orders are used anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Lexicographic order. Variables listed in `priority` rank highest, in
    /// the order given; any other variable ranks below them, in the natural
    /// [`Var`] order.
    Lex { priority: Vec<Var> },
}

impl MonomialOrder {
    /// Lex order following the natural ordering of [`Var`].
    pub fn natural() -> MonomialOrder {
        MonomialOrder::Lex { priority: Vec::new() }
    }

    pub fn lex(priority: Vec<Var>) -> MonomialOrder {
        MonomialOrder::Lex { priority }
    }

    fn rank(&self, v: &Var) -> (usize, Var) {
        match self {
            MonomialOrder::Lex { priority } => {
                let pos = priority.iter().position(|p| p == v).unwrap_or(usize::MAX);
                (pos, *v)
            }
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let mut vars: Vec<Var> = a.vars().chain(b.vars()).copied().collect::<BTreeSet<_>>().into_iter().collect();
        vars.sort_by_key(|v| self.rank(v));
        for v in vars {
            match a.exponent(&v).cmp(&b.exponent(&v)) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }
}

impl Default for MonomialOrder {
    fn default() -> Self {
        MonomialOrder::natural()
    }
}
