//! Infinite-product formulas for the generating function `Z_r` and the
//! auxiliary product identities behind them, all expanded in the canonical
//! `(y, q_0, ..., q_{ell-1})` space.

use std::sync::Arc;

use serde::Serialize;
use serde_json::{Map, Value};

use crate::error::Result;
use crate::localization::{brute_force_z, RankVector};
use crate::partitions::{coloring_space, partition_sum_lhs};
use crate::series::{InverseProduct, Monomial, Series, VariableSpace};

/// The shifted variables `qt_a = y^{2 r_a} q_a`, `z = prod qt_a` and
/// `u_c = (qt_{-c} ... qt_{-ell+1})^{-1}` as canonical monomials.
#[derive(Clone, Debug)]
pub struct Canonical {
    space: Arc<VariableSpace>,
    r: RankVector,
}

impl Canonical {
    pub fn new(r: &RankVector) -> Result<Self> {
        Ok(Canonical {
            space: Arc::new(VariableSpace::canonical(r.ell())?),
            r: r.clone(),
        })
    }

    pub fn space(&self) -> &Arc<VariableSpace> {
        &self.space
    }

    pub fn ranks(&self) -> &RankVector {
        &self.r
    }

    pub fn ell(&self) -> usize {
        self.r.ell()
    }

    pub fn y(&self, e: i32) -> Monomial {
        Monomial::variable(self.space.len(), 0, e)
    }

    /// `qt_a` with `a` reduced mod `ell` for both the rank and the variable.
    pub fn qt(&self, a: i64) -> Monomial {
        let ell = self.ell() as i64;
        let idx = a.rem_euclid(ell) as usize;
        let mut exps = vec![0i32; self.space.len()];
        exps[0] = 2 * self.r.rank(a) as i32;
        exps[idx + 1] = 1;
        Monomial::from_exponents(exps)
    }

    /// `qt_hi qt_{hi-1} ... qt_lo`; the unit when `hi < lo`.
    pub fn qt_run(&self, hi: i64, lo: i64) -> Monomial {
        let mut m = Monomial::one(self.space.len());
        for a in lo..=hi {
            m = m.mul(&self.qt(a));
        }
        m
    }

    pub fn z(&self) -> Monomial {
        self.qt_run(self.ell() as i64 - 1, 0)
    }

    /// `u_c` for `1 <= c <= ell`, with `u_ell = 1`.
    pub fn u(&self, c: usize) -> Monomial {
        self.qt_run(-(c as i64), -(self.ell() as i64) + 1).inv()
    }
}

fn empty_sector_note(r: &RankVector) -> Vec<String> {
    if r.all_positive() {
        Vec::new()
    } else {
        vec![format!(
            "ranks {:?} contain a zero entry; the product formula is applied with an empty t-range there",
            r.ranks()
        )]
    }
}

/// `prod_a prod_{t <= r_a} (y^{-2t} z; z)_inf^{-1}`
fn z_block(cv: &Canonical) -> InverseProduct {
    let mut p = InverseProduct::new(cv.space().clone());
    let z = cv.z();
    for a in 0..cv.ell() {
        for t in 1..=cv.ranks().rank(a as i64) as i32 {
            p.pochhammer(cv.y(-2 * t).mul(&z), z.clone(), 1, format!("a={a} t={t}"));
        }
    }
    p
}

/// Factors of the product over `qt` variables. The `z`-only family appears
/// once per `(a, t)`.
pub fn theorem_z_factors(r: &RankVector) -> Result<InverseProduct> {
    let cv = Canonical::new(r)?;
    let ell = cv.ell() as i64;
    let z = cv.z();
    let mut p = z_block(&cv);
    for a in 0..ell {
        for t in 1..=r.rank(a) as i32 {
            for c in 1..ell {
                let m = cv.y(-2 * t).mul(&z).mul(&cv.qt_run(a - c, a - ell + 1).inv());
                p.pochhammer(m, z.clone(), 1, format!("a={a} t={t} c={c}"));
            }
        }
    }
    Ok(p)
}

pub fn theorem_z(r: &RankVector, n_max: u32) -> Result<Series> {
    theorem_z_factors(r)?.expand(n_max)
}

/// Factors of the same product written in the `u` variables.
pub fn theorem_z_u_factors(r: &RankVector) -> Result<InverseProduct> {
    let cv = Canonical::new(r)?;
    let ell = cv.ell();
    let z = cv.z();
    let mut p = z_block(&cv);
    for a in 1..ell {
        for c in a + 1..=ell {
            let ua = cv.u(a);
            let uc = cv.u(c);
            for t in 1..=r.rank((ell - c) as i64) as i32 {
                let m = cv.y(-2 * t).mul(&z).mul(&ua).mul(&uc.inv());
                p.pochhammer(m, z.clone(), 1, format!("a={a} c={c} t={t}"));
            }
            for t in 1..=r.rank((ell - a) as i64) as i32 {
                let m = cv.y(-2 * t).mul(&ua.inv()).mul(&uc);
                p.pochhammer(m, z.clone(), 1, format!("a={a} c={c} t={t} inv"));
            }
        }
    }
    Ok(p)
}

pub fn theorem_z_u(r: &RankVector, n_max: u32) -> Result<Series> {
    theorem_z_u_factors(r)?.expand(n_max)
}

/// Location and values of the first coefficient where two series differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FirstDiff {
    pub exp: Map<String, Value>,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of comparing two expansions of an identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub truncation: u32,
    pub equal: bool,
    pub first_diff: Option<FirstDiff>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl IdentityReport {
    pub fn compare(identity: impl Into<String>, lhs: &Series, rhs: &Series) -> Self {
        let first_diff = lhs.first_difference(rhs).map(|(m, l, r)| FirstDiff {
            exp: lhs.space().monomial_json(&m),
            lhs: l.to_string(),
            rhs: r.to_string(),
        });
        IdentityReport {
            identity: identity.into(),
            truncation: lhs.truncation(),
            equal: first_diff.is_none() && lhs.space() == rhs.space(),
            first_diff,
            notes: Vec::new(),
        }
    }

    pub fn with_notes(mut self, notes: Vec<String>) -> Self {
        self.notes = notes;
        self
    }
}

/// Product formula against the fixed-point sum.
pub fn verify_theorem(r: &RankVector, n_max: u32) -> Result<IdentityReport> {
    let (brute, closed) = rayon::join(|| brute_force_z(r, n_max), || theorem_z(r, n_max));
    Ok(IdentityReport::compare("fixed-point sum = product formula", &brute?, &closed?)
        .with_notes(empty_sector_note(r)))
}

/// Product formula in `qt` variables against the `u`-variable form.
pub fn verify_u_form(r: &RankVector, n_max: u32) -> Result<IdentityReport> {
    let lhs = theorem_z(r, n_max)?;
    let rhs = theorem_z_u(r, n_max)?;
    Ok(IdentityReport::compare("product formula = u-variable form", &lhs, &rhs)
        .with_notes(empty_sector_note(r)))
}

/// Factors of `prod_k 1/(1 - v z^k) prod_c 1/(1 - v z^k prod_{b=c}^{ell-1} X_{a-b}^{-1})`
/// in the `(v, X_0, ...)` space.
pub fn partition_product_factors(a: i64, ell: usize) -> Result<InverseProduct> {
    let space = Arc::new(coloring_space(ell)?);
    let n = space.len();
    let x = |b: i64| Monomial::variable(n, 1 + b.rem_euclid(ell as i64) as usize, 1);
    let v = Monomial::variable(n, 0, 1);
    let z = (0..ell as i64).fold(Monomial::one(n), |m, b| m.mul(&x(b)));
    let mut p = InverseProduct::new(space);
    p.pochhammer(v.mul(&z), z.clone(), 1, "c=0");
    for c in 1..ell as i64 {
        let mut m = v.mul(&z);
        for b in c..ell as i64 {
            m = m.mul(&x(a - b).inv());
        }
        p.pochhammer(m, z.clone(), 1, format!("c={c}"));
    }
    Ok(p)
}

/// Colored partition sum against its product form.
pub fn verify_partition_identity(a: i64, ell: usize, n_max: u32) -> Result<IdentityReport> {
    let lhs = partition_sum_lhs(a, ell, n_max)?;
    let rhs = partition_product_factors(a, ell)?.expand(n_max)?;
    Ok(IdentityReport::compare(
        format!("colored partition sum a={a} ell={ell}"),
        &lhs,
        &rhs,
    ))
}

/// The three products of the pair-reindexing identity: the `a != c` form,
/// the folded `a < c` form in `qt` variables, and the `a < c` form in `u` variables.
pub fn reindexing_factors(r: &RankVector) -> Result<[InverseProduct; 3]> {
    let cv = Canonical::new(r)?;
    let ell = cv.ell() as i64;
    let z = cv.z();
    let zy = |t: i32| cv.y(-2 * t).mul(&z);
    let mut lhs = InverseProduct::new(cv.space().clone());
    let mut folded = InverseProduct::new(cv.space().clone());
    let mut uform = InverseProduct::new(cv.space().clone());
    for a in 1..ell {
        for c in 1..ell {
            if c == a {
                continue;
            }
            let run = cv.qt_run(a - c, a - ell + 1);
            for t in 1..=r.rank(a) as i32 {
                lhs.pochhammer(zy(t).mul(&run.inv()), z.clone(), 1, format!("a={a} c={c} t={t}"));
            }
            if a < c {
                for t in 1..=r.rank(a) as i32 {
                    folded.pochhammer(
                        zy(t).mul(&run.inv()),
                        z.clone(),
                        1,
                        format!("a={a} c={c} t={t}"),
                    );
                }
                for t in 1..=r.rank(a - c + ell) as i32 {
                    folded.pochhammer(
                        cv.y(-2 * t).mul(&run),
                        z.clone(),
                        1,
                        format!("a={a} c={c} t={t} inv"),
                    );
                }
                let ua = cv.u(a as usize);
                let uc = cv.u(c as usize);
                for t in 1..=r.rank(ell - c) as i32 {
                    uform.pochhammer(
                        zy(t).mul(&ua).mul(&uc.inv()),
                        z.clone(),
                        1,
                        format!("a={a} c={c} t={t}"),
                    );
                }
                for t in 1..=r.rank(ell - a) as i32 {
                    uform.pochhammer(
                        cv.y(-2 * t).mul(&ua.inv()).mul(&uc),
                        z.clone(),
                        1,
                        format!("a={a} c={c} t={t} inv"),
                    );
                }
            }
        }
    }
    Ok([lhs, folded, uform])
}

/// Checks the pair-reindexing identity and its two intermediate steps.
pub fn verify_reindexing(r: &RankVector, n_max: u32) -> Result<Vec<IdentityReport>> {
    let [lhs, folded, uform] = reindexing_factors(r)?;
    let lhs = lhs.expand(n_max)?;
    let folded = folded.expand(n_max)?;
    let uform = uform.expand(n_max)?;
    let notes = empty_sector_note(r);
    Ok(vec![
        IdentityReport::compare("a!=c product = folded a<c product", &lhs, &folded)
            .with_notes(notes.clone()),
        IdentityReport::compare("folded a<c product = u-variable product", &folded, &uform)
            .with_notes(notes.clone()),
        IdentityReport::compare("a!=c product = u-variable product", &lhs, &uform)
            .with_notes(notes),
    ])
}
