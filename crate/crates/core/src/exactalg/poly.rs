use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::{format_rational, int, Rational};
use super::{Monomial, MonomialOrder, Var};
use crate::error::{HessexError, Result};

/// Sparse polynomial with exact rational coefficients.
///
/// Besides its terms a polynomial carries a variable universe: the set of
/// variables it is declared over. Arithmetic takes the union of universes.
/// Equality compares terms only.
#[derive(Debug, Clone, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
    universe: BTreeSet<Var>,
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for MultiPoly {}

impl MultiPoly {
    pub fn zero() -> MultiPoly {
        MultiPoly::default()
    }

    pub fn one() -> MultiPoly {
        MultiPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> MultiPoly {
        MultiPoly::from_terms([(Monomial::one(), c)])
    }

    pub fn int(c: i64) -> MultiPoly {
        MultiPoly::constant(int(c))
    }

    pub fn var(v: Var) -> MultiPoly {
        MultiPoly::from_terms([(Monomial::var(v), Rational::one())])
    }

    pub fn monomial(m: Monomial, c: Rational) -> MultiPoly {
        MultiPoly::from_terms([(m, c)])
    }

    /// Builds a polynomial from (monomial, coefficient) pairs, merging repeats.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> MultiPoly {
        let mut map: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            *map.entry(m).or_insert_with(Rational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        let universe = map.keys().flat_map(|m| m.vars().copied()).collect();
        MultiPoly { terms: map, universe }
    }

    /// Extends the universe by the given variables.
    pub fn with_universe(mut self, vars: impl IntoIterator<Item = Var>) -> MultiPoly {
        self.universe.extend(vars);
        self
    }

    pub fn universe(&self) -> &BTreeSet<Var> {
        &self.universe
    }

    /// Variables that actually occur in some term.
    pub fn variables(&self) -> BTreeSet<Var> {
        self.terms.keys().flat_map(|m| m.vars().copied()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The value of a constant polynomial.
    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_constant() {
            Some(self.coefficient(&Monomial::one()))
        } else {
            None
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: &Var) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            Some(d) => degs.all(|e| e == d),
            None => true,
        }
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero().with_universe(self.universe.iter().copied());
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
            universe: self.universe.clone(),
        }
    }

    fn merged_universe(&self, other: &MultiPoly) -> BTreeSet<Var> {
        self.universe.union(&other.universe).copied().collect()
    }

    fn add_scaled(&self, other: &MultiPoly, sign: i64) -> MultiPoly {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let entry = terms.entry(m.clone()).or_insert_with(Rational::zero);
            if sign < 0 {
                *entry -= c;
            } else {
                *entry += c;
            }
            if entry.is_zero() {
                terms.remove(m);
            }
        }
        MultiPoly { terms, universe: self.merged_universe(other) }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        self.add_scaled(other, 1)
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add_scaled(other, -1)
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
            universe: self.universe.clone(),
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let mut acc: HashMap<Monomial, Rational> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                *acc.entry(m1.mul(m2)).or_insert_with(Rational::zero) += c1 * c2;
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        MultiPoly { terms, universe: self.merged_universe(other) }
    }

    pub fn pow(&self, mut exp: u32) -> MultiPoly {
        let mut result = MultiPoly::one().with_universe(self.universe.iter().copied());
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                result = result.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Formal partial derivative. Fails when `v` is outside the universe.
    pub fn partial_derivative(&self, v: &Var) -> Result<MultiPoly> {
        if !self.universe.contains(v) {
            return Err(HessexError::UnknownVariable(*v));
        }
        let mut terms: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in &self.terms {
            if let Some((e, lowered)) = m.lower(v) {
                *terms.entry(lowered).or_insert_with(Rational::zero) += c * int(e as i64);
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(MultiPoly { terms, universe: self.universe.clone() })
    }

    /// Simultaneous substitution of polynomials for variables.
    pub fn substitute(&self, bindings: &BTreeMap<Var, MultiPoly>) -> MultiPoly {
        let mut universe: BTreeSet<Var> = self.universe.iter().filter(|v| !bindings.contains_key(v)).copied().collect();
        let mut powers: HashMap<(Var, u32), MultiPoly> = HashMap::new();
        let mut acc = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut factor = MultiPoly::constant(c.clone());
            for (v, e) in m.iter() {
                match bindings.get(v) {
                    Some(image) => {
                        let p = powers.entry((*v, *e)).or_insert_with(|| image.pow(*e));
                        factor = factor.mul(p);
                    }
                    None => kept.push((*v, *e)),
                }
            }
            if !kept.is_empty() {
                factor = factor.mul(&MultiPoly::monomial(Monomial::from_pairs(kept), Rational::one()));
            }
            acc = acc.add(&factor);
        }
        for (v, image) in bindings {
            if self.universe.contains(v) {
                universe.extend(image.universe.iter().copied());
            }
        }
        universe.extend(acc.variables());
        acc.universe = universe;
        acc
    }

    /// Substitutes rational values for some variables, leaving the rest symbolic.
    pub fn substitute_values(&self, values: &BTreeMap<Var, Rational>) -> MultiPoly {
        let bindings = values.iter().map(|(v, c)| (*v, MultiPoly::constant(c.clone()))).collect();
        self.substitute(&bindings)
    }

    /// Exact value at a point. Every occurring variable must be bound.
    pub fn evaluate(&self, point: &BTreeMap<Var, Rational>) -> Result<Rational> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (v, e) in m.iter() {
                let value = point.get(v).ok_or(HessexError::UnboundVariable(*v))?;
                term *= num_traits::pow(value.clone(), *e as usize);
            }
            total += term;
        }
        Ok(total)
    }

    /// Terms sorted in descending order.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(&Monomial, &Rational)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| order.cmp(b.0, a.0));
        terms
    }

    /// The order-minimal term.
    pub fn lowest_term(&self, order: &MonomialOrder) -> Result<(Monomial, Rational)> {
        self.terms
            .iter()
            .min_by(|a, b| order.cmp(a.0, b.0))
            .map(|(m, c)| (m.clone(), c.clone()))
            .ok_or(HessexError::ZeroPolynomial)
    }

    /// The order-maximal term.
    pub fn leading_term(&self, order: &MonomialOrder) -> Result<(Monomial, Rational)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(a.0, b.0))
            .map(|(m, c)| (m.clone(), c.clone()))
            .ok_or(HessexError::ZeroPolynomial)
    }

    /// Writes `self = a * v + b` with neither `a` nor `b` involving `v`.
    /// Returns `None` if `v` appears with degree above one.
    pub fn linear_split(&self, v: &Var) -> Option<(MultiPoly, MultiPoly)> {
        let mut a = Vec::new();
        let mut b = Vec::new();
        for (m, c) in &self.terms {
            match m.exponent(v) {
                0 => b.push((m.clone(), c.clone())),
                1 => a.push((m.without(v), c.clone())),
                _ => return None,
            }
        }
        let a = MultiPoly::from_terms(a).with_universe(self.universe.iter().copied());
        let b = MultiPoly::from_terms(b).with_universe(self.universe.iter().copied());
        Some((a, b))
    }

    /// Canonical text, terms descending in `order`.
    pub fn to_text(&self, order: &MonomialOrder) -> String {
        let terms = self.sorted_terms(order);
        if terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in terms.into_iter().enumerate() {
            let negative = c < &Rational::zero();
            let magnitude = if negative { -c.clone() } else { c.clone() };
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&format_rational(&magnitude));
            } else if magnitude.is_one() {
                out.push_str(&m.to_string());
            } else {
                out.push_str(&format_rational(&magnitude));
                out.push('*');
                out.push_str(&m.to_string());
            }
        }
        out
    }

    /// JSON array of `{"c": "p/q", "e": {var: exp}}`, terms descending in `order`.
    pub fn to_json(&self, order: &MonomialOrder) -> serde_json::Value {
        let terms = self
            .sorted_terms(order)
            .into_iter()
            .map(|(m, c)| {
                let exps: serde_json::Map<String, serde_json::Value> =
                    m.iter().map(|(v, e)| (v.to_string(), serde_json::Value::from(*e))).collect();
                serde_json::json!({ "c": format_rational(c), "e": exps })
            })
            .collect();
        serde_json::Value::Array(terms)
    }

    pub fn parse(text: &str) -> Result<MultiPoly> {
        super::parse::parse_poly(text)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(&MonomialOrder::natural()))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                MultiPoly::$method(self, rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly::neg(self)
    }
}
