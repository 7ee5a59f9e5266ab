//! Exact sparse multivariate Laurent series with total-degree truncation.
//!
//! A [`Series`] lives in a [`VariableSpace`]: an ordered list of named formal
//! variables, some of which are *graded*. The grading degree of a monomial is
//! the sum of its exponents over the graded variables; every stored term has
//! grading degree in `0..=truncation`. Ungraded variables (the refinement
//! variable `y`, the Cartan variables `v`, `u`) carry arbitrary Laurent
//! exponents.
//!
//! Coefficients are arbitrary precision integers. Nothing in this module ever
//! divides, so a non-integral coefficient cannot arise.

mod json;
mod product;

pub use product::{FactorKind, InverseFactor, InverseProduct};

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Ordered list of formal variables with a designated graded subset.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VariableSpace {
    names: Vec<String>,
    graded: Vec<bool>,
}

impl VariableSpace {
    pub fn new<S: AsRef<str>>(names: &[S], grading: &[S]) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() {
                return Err(Error::InvalidSpace("empty variable name".into()));
            }
            if names[..i].contains(n) {
                return Err(Error::InvalidSpace(format!("duplicate variable `{n}`")));
            }
        }
        let mut graded = vec![false; names.len()];
        for g in grading {
            let g = g.as_ref();
            let idx = names
                .iter()
                .position(|n| n == g)
                .ok_or_else(|| Error::UnknownVariable(g.to_string()))?;
            graded[idx] = true;
        }
        Ok(VariableSpace { names, graded })
    }

    /// The comparison space `(y, q0, ..., q(ell-1))`, graded by the q's.
    pub fn canonical(ell: usize) -> Result<Self> {
        if ell < 2 {
            return Err(Error::InvalidModulus(ell as i64));
        }
        let mut names = vec!["y".to_string()];
        let qs: Vec<String> = (0..ell).map(|a| format!("q{a}")).collect();
        names.extend(qs.iter().cloned());
        VariableSpace::new(&names, &qs)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.names[idx]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn is_graded(&self, idx: usize) -> bool {
        self.graded[idx]
    }

    pub fn grading_names(&self) -> Vec<&str> {
        self.names
            .iter()
            .zip(&self.graded)
            .filter(|(_, g)| **g)
            .map(|(n, _)| n.as_str())
            .collect()
    }

    /// Grading degree: total exponent over the graded variables.
    pub fn degree(&self, m: &Monomial) -> i64 {
        m.exps
            .iter()
            .zip(&self.graded)
            .filter(|(_, g)| **g)
            .map(|(e, _)| *e as i64)
            .sum()
    }

    pub fn one(&self) -> Monomial {
        Monomial::one(self.len())
    }

    /// The monomial `name^exp`.
    pub fn var(&self, name: &str, exp: i32) -> Result<Monomial> {
        let idx = self
            .index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Monomial::variable(self.len(), idx, exp))
    }

    pub fn monomial(&self, pairs: &[(&str, i32)]) -> Result<Monomial> {
        let mut exps = vec![0; self.len()];
        for (name, e) in pairs {
            let idx = self
                .index_of(name)
                .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
            exps[idx] += e;
        }
        Ok(Monomial { exps })
    }

    /// Renders a monomial as `y^-2*q0*q1`; the unit monomial renders as `1`.
    pub fn format_monomial(&self, m: &Monomial) -> String {
        let parts: Vec<String> = m
            .exps
            .iter()
            .enumerate()
            .filter(|(_, e)| **e != 0)
            .map(|(i, e)| match e {
                1 => self.names[i].clone(),
                e => format!("{}^{}", self.names[i], e),
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// Exponent vector over a fixed variable space. Absent variables have
/// exponent zero; the derived `Ord` is lexicographic in variable order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<i32>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    pub fn variable(nvars: usize, idx: usize, exp: i32) -> Self {
        let mut exps = vec![0; nvars];
        exps[idx] = exp;
        Monomial { exps }
    }

    pub fn from_exponents(exps: Vec<i32>) -> Self {
        Monomial { exps }
    }

    pub fn exponents(&self) -> &[i32] {
        &self.exps
    }

    pub fn exponent(&self, idx: usize) -> i32 {
        self.exps[idx]
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|e| *e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn pow(&self, k: i32) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|e| e * k).collect(),
        }
    }

    pub fn inv(&self) -> Monomial {
        self.pow(-1)
    }

    /// Copy with the exponent of `idx` cleared.
    pub fn without(&self, idx: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps[idx] = 0;
        Monomial { exps }
    }
}

impl std::ops::Mul for &Monomial {
    type Output = Monomial;
    fn mul(self, rhs: &Monomial) -> Monomial {
        Monomial::mul(self, rhs)
    }
}

/// Truncated exact series. See the module docs for the grading rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    space: Arc<VariableSpace>,
    truncation: u32,
    terms: BTreeMap<Monomial, BigInt>,
}

impl Series {
    pub fn zero(space: Arc<VariableSpace>, truncation: u32) -> Self {
        Series {
            space,
            truncation,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(space: Arc<VariableSpace>, truncation: u32) -> Self {
        let mut s = Series::zero(space, truncation);
        s.terms.insert(s.space.one(), BigInt::one());
        s
    }

    /// `coeff * m`, or zero if `m` lies above the truncation.
    pub fn from_monomial(
        space: Arc<VariableSpace>,
        truncation: u32,
        m: Monomial,
        coeff: impl Into<BigInt>,
    ) -> Result<Self> {
        Series::from_terms(space, truncation, [(m, coeff.into())])
    }

    /// Builds a series from arbitrary terms, merging duplicates and dropping
    /// terms above the truncation. Terms of negative degree are rejected.
    pub fn from_terms(
        space: Arc<VariableSpace>,
        truncation: u32,
        terms: impl IntoIterator<Item = (Monomial, BigInt)>,
    ) -> Result<Self> {
        let mut s = Series::zero(space, truncation);
        for (m, c) in terms {
            if m.exps.len() != s.space.len() {
                return Err(Error::Incompatible(format!(
                    "monomial has {} exponents, space has {} variables",
                    m.exps.len(),
                    s.space.len()
                )));
            }
            let d = s.space.degree(&m);
            if d < 0 {
                return Err(Error::NegativeDegree {
                    term: s.space.format_monomial(&m),
                    degree: d,
                });
            }
            if d <= truncation as i64 {
                s.add_term(m, c);
            }
        }
        Ok(s)
    }

    pub fn space(&self) -> &Arc<VariableSpace> {
        &self.space
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_compatible(&self, other: &Series) -> Result<()> {
        if self.space != other.space {
            return Err(Error::Incompatible(format!(
                "variables {:?} vs {:?}",
                self.space.names(),
                other.space.names()
            )));
        }
        if self.truncation != other.truncation {
            return Err(Error::Incompatible(format!(
                "truncation {} vs {}",
                self.truncation, other.truncation
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Series) -> Result<Series> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Series) -> Result<Series> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Series {
        Series {
            space: self.space.clone(),
            truncation: self.truncation,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Series) -> Result<Series> {
        self.check_compatible(other)?;
        let trunc = self.truncation as i64;
        let rhs: Vec<(&Monomial, &BigInt, i64)> = other
            .terms
            .iter()
            .map(|(m, c)| (m, c, self.space.degree(m)))
            .collect();
        let mut out = Series::zero(self.space.clone(), self.truncation);
        for (m1, c1) in &self.terms {
            let d1 = self.space.degree(m1);
            for (m2, c2, d2) in &rhs {
                if d1 + d2 <= trunc {
                    out.add_term(m1 * m2, c1 * *c2);
                }
            }
        }
        Ok(out)
    }

    /// Multiplies every term by `m`, dropping terms pushed above the
    /// truncation. `m` must have non-negative degree.
    fn shift(&self, m: &Monomial) -> Series {
        let trunc = self.truncation as i64;
        let dm = self.space.degree(m);
        debug_assert!(dm >= 0);
        let terms = self
            .terms
            .iter()
            .filter(|(t, _)| self.space.degree(t) + dm <= trunc)
            .map(|(t, c)| (t * m, c.clone()))
            .collect();
        Series {
            space: self.space.clone(),
            truncation: self.truncation,
            terms,
        }
    }

    /// `self / (1 - m)` in the truncated ring.
    pub fn mul_geometric_inverse(&self, m: &Monomial) -> Result<Series> {
        let d = self.space.degree(m);
        if d <= 0 {
            return Err(Error::NonPositiveDegree {
                factor: self.space.format_monomial(m),
                degree: d,
            });
        }
        let mut out = self.clone();
        let mut power = self.shift(m);
        while !power.is_zero() {
            for (t, c) in &power.terms {
                out.add_term(t.clone(), c.clone());
            }
            power = power.shift(m);
        }
        Ok(out)
    }

    /// `self / (1 - m)` modulo the truncation and the ideal of terms whose
    /// `weights`-degree exceeds `cap`. `m` needs non-negative degree and
    /// weight, at least one of them positive.
    pub fn mul_geometric_inverse_filtered(
        &self,
        m: &Monomial,
        weights: &[i64],
        cap: i64,
    ) -> Result<Series> {
        let weight = |t: &Monomial| -> i64 {
            t.exps.iter().zip(weights).map(|(e, w)| *e as i64 * w).sum()
        };
        let d = self.space.degree(m);
        let w = weight(m);
        if d < 0 || w < 0 || (d == 0 && w == 0) {
            return Err(Error::NonPositiveDegree {
                factor: self.space.format_monomial(m),
                degree: d,
            });
        }
        let mut out = self.retain(|t| weight(t) <= cap);
        let mut power = out.shift(m).retain(|t| weight(t) <= cap);
        while !power.is_zero() {
            for (t, c) in &power.terms {
                out.add_term(t.clone(), c.clone());
            }
            power = power.shift(m).retain(|t| weight(t) <= cap);
        }
        Ok(out)
    }

    /// `sum_{j >= 0} m^j`, the inverse of `1 - m`.
    pub fn geometric_inverse(
        space: Arc<VariableSpace>,
        m: &Monomial,
        truncation: u32,
    ) -> Result<Series> {
        Series::one(space, truncation).mul_geometric_inverse(m)
    }

    /// `self * prod_{n >= 1} (1 - step^{n-1} m)^{-1}`.
    pub fn mul_pochhammer_inverse(&self, m: &Monomial, step: &Monomial) -> Result<Series> {
        let dm = self.space.degree(m);
        let ds = self.space.degree(step);
        for (mono, d) in [(m, dm), (step, ds)] {
            if d <= 0 {
                return Err(Error::NonPositiveDegree {
                    factor: self.space.format_monomial(mono),
                    degree: d,
                });
            }
        }
        let mut out = self.clone();
        let mut factor = m.clone();
        let mut d = dm;
        while d <= self.truncation as i64 {
            out = out.mul_geometric_inverse(&factor)?;
            factor = &factor * step;
            d += ds;
        }
        Ok(out)
    }

    /// `(m)_inf^{-1} = prod_{n >= 1} (1 - step^{n-1} m)^{-1}`.
    pub fn pochhammer_inverse(
        space: Arc<VariableSpace>,
        m: &Monomial,
        step: &Monomial,
        truncation: u32,
    ) -> Result<Series> {
        Series::one(space, truncation).mul_pochhammer_inverse(m, step)
    }

    /// Drops every term of degree above `truncation` (which may not exceed the
    /// current truncation).
    pub fn truncate(&self, truncation: u32) -> Result<Series> {
        if truncation > self.truncation {
            return Err(Error::Incompatible(format!(
                "cannot raise truncation from {} to {}",
                self.truncation, truncation
            )));
        }
        Ok(Series {
            space: self.space.clone(),
            truncation,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| self.space.degree(m) <= truncation as i64)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        })
    }

    /// Keeps only the terms whose monomial satisfies `keep`.
    pub fn retain(&self, mut keep: impl FnMut(&Monomial) -> bool) -> Series {
        Series {
            space: self.space.clone(),
            truncation: self.truncation,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Ring homomorphism sending source variable `i` to `mapping[i]` in the
    /// target space. Terms landing above `target_truncation` are dropped; a
    /// term landing at negative degree is an error.
    pub fn substitute(
        &self,
        target: Arc<VariableSpace>,
        mapping: &[Monomial],
        target_truncation: u32,
    ) -> Result<Series> {
        if mapping.len() != self.space.len() {
            return Err(Error::Incompatible(format!(
                "mapping has {} images for {} variables",
                mapping.len(),
                self.space.len()
            )));
        }
        if let Some(bad) = mapping.iter().find(|m| m.exps.len() != target.len()) {
            return Err(Error::Incompatible(format!(
                "image with {} exponents in a space of {} variables",
                bad.exps.len(),
                target.len()
            )));
        }
        let mut out = Series::zero(target.clone(), target_truncation);
        for (m, c) in &self.terms {
            let mut image = target.one();
            for (i, e) in m.exps.iter().enumerate() {
                if *e != 0 {
                    image = &image * &mapping[i].pow(*e);
                }
            }
            let d = target.degree(&image);
            if d < 0 {
                return Err(Error::NegativeDegree {
                    term: target.format_monomial(&image),
                    degree: d,
                });
            }
            if d <= target_truncation as i64 {
                out.add_term(image, c.clone());
            }
        }
        Ok(out)
    }

    /// Sets an ungraded variable to 1, merging terms that collide.
    pub fn restrict(&self, var: &str) -> Result<Series> {
        let idx = self
            .space
            .index_of(var)
            .ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
        if self.space.is_graded(idx) {
            return Err(Error::GradedRestriction(var.to_string()));
        }
        let mut out = Series::zero(self.space.clone(), self.truncation);
        for (m, c) in &self.terms {
            out.add_term(m.without(idx), c.clone());
        }
        Ok(out)
    }

    /// First monomial (in canonical order) where the two series disagree.
    pub fn first_difference(&self, other: &Series) -> Option<(Monomial, BigInt, BigInt)> {
        let mut keys: Vec<&Monomial> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter().find_map(|m| {
            let (a, b) = (self.coefficient(m), other.coefficient(m));
            (a != b).then(|| (m.clone(), a, b))
        })
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }
}

impl fmt::Display for Series {
    /// Human readable form, e.g. `2*y^2*q0*q1 + q0*q1 + 1`. Terms are listed
    /// in descending canonical order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let mono = self.space.format_monomial(m);
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests;
