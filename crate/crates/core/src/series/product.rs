use std::fmt;
use std::sync::Arc;

use super::{Monomial, Series, VariableSpace};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FactorKind {
    /// `(1 - m)^{-1}`
    Geometric,
    /// `(m)_inf^{-1} = prod_{n >= 1} (1 - step^{n-1} m)^{-1}`
    Pochhammer { step: Monomial },
}

/// One inverse factor of a product formula, raised to `multiplicity`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InverseFactor {
    pub monomial: Monomial,
    pub kind: FactorKind,
    pub multiplicity: u32,
    /// Where the factor comes from, e.g. `t=1 a=2 c=3`.
    pub label: String,
}

/// A finite list of inverse factors over a common variable space. Expanding
/// multiplies the factors into `1` one at a time; a factor whose monomial has
/// degree above the truncation contributes exactly `1` and is skipped.
#[derive(Clone, Debug)]
pub struct InverseProduct {
    space: Arc<VariableSpace>,
    factors: Vec<InverseFactor>,
}

impl InverseProduct {
    pub fn new(space: Arc<VariableSpace>) -> Self {
        InverseProduct {
            space,
            factors: Vec::new(),
        }
    }

    pub fn space(&self) -> &Arc<VariableSpace> {
        &self.space
    }

    pub fn factors(&self) -> &[InverseFactor] {
        &self.factors
    }

    pub fn geometric(&mut self, monomial: Monomial, label: impl Into<String>) -> &mut Self {
        self.factors.push(InverseFactor {
            monomial,
            kind: FactorKind::Geometric,
            multiplicity: 1,
            label: label.into(),
        });
        self
    }

    pub fn pochhammer(
        &mut self,
        monomial: Monomial,
        step: Monomial,
        multiplicity: u32,
        label: impl Into<String>,
    ) -> &mut Self {
        self.factors.push(InverseFactor {
            monomial,
            kind: FactorKind::Pochhammer { step },
            multiplicity,
            label: label.into(),
        });
        self
    }

    pub fn extend(&mut self, other: &InverseProduct) -> &mut Self {
        debug_assert_eq!(self.space, other.space);
        self.factors.extend(other.factors.iter().cloned());
        self
    }

    /// Checks that every factor (and Pochhammer step) has positive degree.
    pub fn validate(&self) -> Result<()> {
        for f in &self.factors {
            let mut monos = vec![&f.monomial];
            if let FactorKind::Pochhammer { step } = &f.kind {
                monos.push(step);
            }
            for m in monos {
                let d = self.space.degree(m);
                if d <= 0 {
                    return Err(Error::NonPositiveDegree {
                        factor: format!("{} [{}]", self.space.format_monomial(m), f.label),
                        degree: d,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn expand(&self, truncation: u32) -> Result<Series> {
        self.validate()?;
        let mut acc = Series::one(self.space.clone(), truncation);
        for f in &self.factors {
            if self.space.degree(&f.monomial) > truncation as i64 {
                continue;
            }
            for _ in 0..f.multiplicity {
                acc = match &f.kind {
                    FactorKind::Geometric => acc.mul_geometric_inverse(&f.monomial)?,
                    FactorKind::Pochhammer { step } => {
                        acc.mul_pochhammer_inverse(&f.monomial, step)?
                    }
                };
            }
        }
        Ok(acc)
    }

    /// One line per factor, e.g. `(y^-2*q0*q1)_inf^-2    [t=1]`.
    pub fn describe(&self) -> Vec<String> {
        self.factors
            .iter()
            .map(|f| {
                let m = self.space.format_monomial(&f.monomial);
                let body = match &f.kind {
                    FactorKind::Geometric => format!("(1 - {m})"),
                    FactorKind::Pochhammer { step } => {
                        format!("({m}; {})_inf", self.space.format_monomial(step))
                    }
                };
                format!("{body}^-{}    [{}]", f.multiplicity, f.label)
            })
            .collect()
    }
}

impl fmt::Display for InverseProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in self.describe() {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}
