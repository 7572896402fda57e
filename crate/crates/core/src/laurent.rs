//! Sparse Laurent polynomials in one variable with arbitrary-precision
//! integer coefficients.
//!
//! Terms are kept in a `BTreeMap` keyed by exponent and are always in
//! canonical form: no stored coefficient is zero, so structural equality of
//! the maps is polynomial equality. The variable tag only affects rendering,
//! but arithmetic on polynomials with different tags is rejected.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::LaurentError;

/// Name of the indeterminate a polynomial is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variable {
    /// The Kauffman bracket variable.
    A,
    /// The Conway variable.
    Z,
}

impl Variable {
    /// Conway polynomials are conventionally written from the constant term
    /// up; bracket polynomials from the top degree down.
    fn renders_ascending(self) -> bool {
        self == Variable::Z
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Variable::A => "A",
            Variable::Z => "z",
        }
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl std::str::FromStr for Variable {
    type Err = LaurentError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "A" => Ok(Variable::A),
            "z" => Ok(Variable::Z),
            other => Err(LaurentError::UnknownVariable(other.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    var: Variable,
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero(var: Variable) -> Self {
        Self {
            var,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(var: Variable) -> Self {
        Self::monomial(var, 1, 0)
    }

    /// `coeff * var^exp`; a zero coefficient gives the zero polynomial.
    pub fn monomial(var: Variable, coeff: impl Into<BigInt>, exp: i64) -> Self {
        let coeff = coeff.into();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Self { var, terms }
    }

    /// Builds a polynomial from `(exp, coeff)` pairs. Repeated exponents are
    /// summed and zero results dropped.
    pub fn from_terms<C, I>(var: Variable, terms: I) -> Self
    where
        C: Into<BigInt>,
        I: IntoIterator<Item = (i64, C)>,
    {
        let mut poly = Self::zero(var);
        for (exp, coeff) in terms {
            poly.add_term(exp, coeff.into());
        }
        poly
    }

    pub fn variable(&self) -> Variable {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest exponent, `None` for zero.
    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Lowest exponent, `None` for zero.
    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    /// Terms in descending exponent order, the JSON order.
    pub fn terms_descending(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms().rev()
    }

    /// True if no stored coefficient is zero. Always holds for values built
    /// through this API; exposed so tests can assert it on every output.
    pub fn is_canonical(&self) -> bool {
        self.terms.values().all(|c| !c.is_zero())
    }

    fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_var(&self, other: &Self) -> Result<(), LaurentError> {
        if self.var == other.var {
            Ok(())
        } else {
            Err(LaurentError::VariableMismatch {
                left: self.var,
                right: other.var,
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check_var(other)?;
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            out.add_term(e, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check_var(other)?;
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            out.add_term(e, -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check_var(other)?;
        let mut out = Self::zero(self.var);
        for (&ea, ca) in &self.terms {
            for (&eb, cb) in &other.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        Ok(out)
    }

    /// Adds `other` into `self` in place.
    pub fn try_add_assign(&mut self, other: &Self) -> Result<(), LaurentError> {
        self.check_var(other)?;
        for (&e, c) in &other.terms {
            self.add_term(e, c.clone());
        }
        Ok(())
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one(self.var);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Multiplies every coefficient by `factor`.
    pub fn scale(&self, factor: &BigInt) -> Self {
        if factor.is_zero() {
            return Self::zero(self.var);
        }
        Self {
            var: self.var,
            terms: self.terms.iter().map(|(&e, c)| (e, c * factor)).collect(),
        }
    }

    /// Multiplies by `var^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            var: self.var,
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e + k, c.clone()))
                .collect(),
        }
    }

    /// The substitution `x -> x^-1`: every exponent is negated.
    pub fn substitute_inverse(&self) -> Self {
        Self {
            var: self.var,
            terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Renders as plain text, e.g. `A^7 - A^3 - A^-5` or `1 - z^2`. Terms in
    /// `A` run by descending exponent, terms in `z` by ascending exponent.
    pub fn to_text(&self) -> String {
        self.render(|var, exp| match exp {
            1 => var.to_string(),
            _ => format!("{var}^{exp}"),
        })
    }

    /// Renders as LaTeX, e.g. `A^{7} - A^{3} - A^{-5}`.
    pub fn to_latex(&self) -> String {
        self.render(|var, exp| match exp {
            1 => var.to_string(),
            _ => format!("{var}^{{{exp}}}"),
        })
    }

    /// Renders as the canonical JSON object
    /// `{"variable":"A","terms":[{"exp":7,"coeff":"1"},...]}`.
    pub fn to_json(&self) -> String {
        let mut out = format!("{{\"variable\":\"{}\",\"terms\":[", self.var);
        for (i, (exp, coeff)) in self.terms_descending().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(&format!("{{\"exp\":{exp},\"coeff\":\"{coeff}\"}}"));
        }
        out.push_str("]}");
        out
    }

    fn render(&self, power: impl Fn(Variable, i64) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let ordered: Vec<(i64, &BigInt)> = if self.var.renders_ascending() {
            self.terms().collect()
        } else {
            self.terms_descending().collect()
        };
        let mut out = String::new();
        for (i, (exp, coeff)) in ordered.into_iter().enumerate() {
            let negative = coeff.is_negative();
            match (i, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let magnitude = coeff.abs();
            if exp == 0 {
                out.push_str(&magnitude.to_string());
            } else {
                if !magnitude.is_one() {
                    out.push_str(&magnitude.to_string());
                }
                out.push_str(&power(self.var, exp));
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

// Operator impls panic on a variable mismatch; use the `try_*` methods
// where the tags are not known to agree.

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            var: self.var,
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    exp: i64,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct JsonPoly {
    variable: String,
    terms: Vec<JsonTerm>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        JsonPoly {
            variable: self.var.to_string(),
            terms: self
                .terms_descending()
                .map(|(exp, coeff)| JsonTerm {
                    exp,
                    coeff: coeff.to_string(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;

        let raw = JsonPoly::deserialize(deserializer)?;
        let var: Variable = raw.variable.parse().map_err(D::Error::custom)?;
        let mut terms = Vec::with_capacity(raw.terms.len());
        for t in raw.terms {
            let coeff: BigInt = t
                .coeff
                .parse()
                .map_err(|_| D::Error::custom(format!("invalid coefficient {:?}", t.coeff)))?;
            terms.push((t.exp, coeff));
        }
        Ok(LaurentPoly::from_terms(var, terms))
    }
}
