//! Torus fixed points of affine Laumon spaces, their equivariant tangent
//! characters and Morse indices, and the generating function obtained by
//! summing over fixed points.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partitions::{colored_counts, enumerate_partitions, Partition};
use crate::series::{Monomial, Series, VariableSpace};

/// The framing ranks `(r_0, ..., r_{ell-1})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct RankVector {
    r: Vec<u32>,
}

impl RankVector {
    pub fn new(r: Vec<u32>) -> Result<Self> {
        if r.len() < 2 {
            return Err(Error::InvalidRanks(format!(
                "need at least two ranks, got {r:?}"
            )));
        }
        if r.iter().all(|x| *x == 0) {
            return Err(Error::InvalidRanks("all ranks are zero".into()));
        }
        Ok(RankVector { r })
    }

    pub fn ranks(&self) -> &[u32] {
        &self.r
    }

    pub fn ell(&self) -> usize {
        self.r.len()
    }

    /// `r = r_0 + ... + r_{ell-1}`.
    pub fn total(&self) -> u32 {
        self.r.iter().sum()
    }

    /// Rank with the index reduced mod `ell`.
    pub fn rank(&self, a: i64) -> u32 {
        self.r[a.rem_euclid(self.ell() as i64) as usize]
    }

    /// `r_0 + ... + r_a`.
    pub fn cumulative(&self, a: usize) -> u32 {
        self.r[..=a].iter().sum()
    }

    /// True when every rank is positive.
    pub fn all_positive(&self) -> bool {
        self.r.iter().all(|x| *x > 0)
    }

    /// True for `r_0 >= r_1 >= ... >= r_{ell-1} >= 1`.
    pub fn is_dominant(&self) -> bool {
        self.all_positive() && self.r.windows(2).all(|w| w[0] >= w[1])
    }
}

impl TryFrom<Vec<u32>> for RankVector {
    type Error = Error;
    fn try_from(r: Vec<u32>) -> Result<Self> {
        RankVector::new(r)
    }
}

impl From<RankVector> for Vec<u32> {
    fn from(r: RankVector) -> Self {
        r.r
    }
}

/// The instanton numbers `(n_0, ..., n_{ell-1})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OccupationVector {
    n: Vec<u32>,
}

impl OccupationVector {
    pub fn new(n: Vec<u32>) -> Self {
        OccupationVector { n }
    }

    pub fn counts(&self) -> &[u32] {
        &self.n
    }

    pub fn total(&self) -> u32 {
        self.n.iter().sum()
    }

    fn check(&self, r: &RankVector) -> Result<()> {
        if self.n.len() != r.ell() {
            return Err(Error::InvalidOccupation(format!(
                "expected {} entries, got {:?}",
                r.ell(),
                self.n
            )));
        }
        Ok(())
    }
}

/// All occupation vectors of length `ell` with entries summing to at most `n_max`.
pub fn occupation_vectors(ell: usize, n_max: u32) -> Vec<OccupationVector> {
    fn go(pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<OccupationVector>) {
        if pos == cur.len() {
            out.push(OccupationVector::new(cur.clone()));
            return;
        }
        for k in 0..=left {
            cur[pos] = k;
            go(pos + 1, left - k, cur, out);
        }
        cur[pos] = 0;
    }
    let mut out = Vec::new();
    go(0, n_max, &mut vec![0; ell], &mut out);
    out
}

/// A tuple of partitions, one per framing index `beta = 1..r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FixedPoint {
    pub mus: Vec<Partition>,
}

impl FixedPoint {
    pub fn new(mus: Vec<Partition>) -> Self {
        FixedPoint { mus }
    }

    pub fn size(&self) -> u32 {
        self.mus.iter().map(Partition::size).sum()
    }

    /// `mu_beta` for 1-based `beta`.
    pub fn mu(&self, beta: usize) -> &Partition {
        &self.mus[beta - 1]
    }

    fn check(&self, r: &RankVector) -> Result<()> {
        if self.mus.len() != r.total() as usize {
            return Err(Error::IndexOutOfRange {
                index: self.mus.len(),
                max: r.total() as usize,
            });
        }
        Ok(())
    }

    /// Occupation vector of the component containing this fixed point.
    pub fn occupation(&self, r: &RankVector) -> Result<OccupationVector> {
        self.check(r)?;
        let mut n = vec![0u32; r.ell()];
        for (idx, mu) in self.mus.iter().enumerate() {
            let a = sector_index(idx + 1, r)?;
            for (c, k) in colored_counts(mu, a as i64, r.ell())?.iter().enumerate() {
                n[c] += k;
            }
        }
        Ok(OccupationVector::new(n))
    }
}

/// The sector `a(beta)`: the unique `a` with
/// `r_0 + ... + r_{a-1} < beta <= r_0 + ... + r_a`.
pub fn sector_index(beta: usize, r: &RankVector) -> Result<usize> {
    if beta == 0 || beta > r.total() as usize {
        return Err(Error::IndexOutOfRange {
            index: beta,
            max: r.total() as usize,
        });
    }
    let mut acc = 0usize;
    for (a, ra) in r.ranks().iter().enumerate() {
        acc += *ra as usize;
        if beta <= acc {
            return Ok(a);
        }
    }
    unreachable!("beta is bounded by the total rank")
}

/// Fixed points of `M(r, n)`, ordered with earlier components as large as possible.
pub fn enumerate_fixed_points(r: &RankVector, n: &OccupationVector) -> Result<Vec<FixedPoint>> {
    n.check(r)?;
    let sectors: Vec<usize> = (1..=r.total() as usize)
        .map(|b| sector_index(b, r))
        .collect::<Result<_>>()?;
    let by_size: Vec<Vec<Partition>> = (0..=n.total()).map(enumerate_partitions).collect();

    fn go(
        beta: usize,
        left: &mut Vec<u32>,
        sectors: &[usize],
        by_size: &[Vec<Partition>],
        cur: &mut Vec<Partition>,
        out: &mut Vec<FixedPoint>,
    ) {
        let total: u32 = left.iter().sum();
        if beta == sectors.len() {
            if total == 0 {
                out.push(FixedPoint::new(cur.clone()));
            }
            return;
        }
        let ell = left.len();
        for size in (0..=total).rev() {
            for mu in &by_size[size as usize] {
                let counts = colored_counts(mu, sectors[beta] as i64, ell).expect("ell >= 2");
                if counts.iter().zip(left.iter()).any(|(c, l)| c > l) {
                    continue;
                }
                for (l, c) in left.iter_mut().zip(&counts) {
                    *l -= c;
                }
                cur.push(mu.clone());
                go(beta + 1, left, sectors, by_size, cur, out);
                cur.pop();
                for (l, c) in left.iter_mut().zip(&counts) {
                    *l += c;
                }
            }
        }
    }

    let mut out = Vec::new();
    go(
        0,
        &mut n.counts().to_vec(),
        &sectors,
        &by_size,
        &mut Vec::new(),
        &mut out,
    );
    Ok(out)
}

/// A character `T1^t1 T2^t2 Omega^omega` with `omega` taken mod `ell`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RepMonomial {
    pub t1: i64,
    pub t2: i64,
    pub omega: usize,
}

/// An integer combination of characters attached to the pair `(alpha, beta)`,
/// i.e. multiplied by `Z_beta Z_alpha^{-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepRingElement {
    pub alpha: usize,
    pub beta: usize,
    pub terms: BTreeMap<RepMonomial, i64>,
}

impl RepRingElement {
    pub fn new(alpha: usize, beta: usize) -> Self {
        RepRingElement {
            alpha,
            beta,
            terms: BTreeMap::new(),
        }
    }

    fn add(&mut self, m: RepMonomial, c: i64) {
        let e = self.terms.entry(m).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&m);
        }
    }

    /// Number of characters counted with multiplicity.
    pub fn monomial_count(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl Serialize for RepRingElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term {
            t1: i64,
            t2: i64,
            omega: usize,
            coeff: i64,
        }
        let terms: Vec<Term> = self
            .terms
            .iter()
            .map(|(m, c)| Term {
                t1: m.t1,
                t2: m.t2,
                omega: m.omega,
                coeff: *c,
            })
            .collect();
        let mut s = serializer.serialize_struct("RepRingElement", 3)?;
        s.serialize_field("alpha", &self.alpha)?;
        s.serialize_field("beta", &self.beta)?;
        s.serialize_field("terms", &terms)?;
        s.end()
    }
}

impl fmt::Display for RepRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.alpha, self.beta)?;
        if self.terms.is_empty() {
            return write!(f, " 0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let sep = if i == 0 { " " } else { " + " };
            let coeff = if *c == 1 { String::new() } else { format!("{c}*") };
            write!(f, "{sep}{coeff}T1^{}*T2^{}*W^{}", m.t1, m.t2, m.omega)?;
        }
        Ok(())
    }
}

/// Tangent space character at a fixed point, one element per ordered pair
/// `(alpha, beta)` in row-major order.
pub fn tangent_character(fp: &FixedPoint, r: &RankVector) -> Result<Vec<RepRingElement>> {
    fp.check(r)?;
    let ell = r.ell() as i64;
    let rtot = r.total() as usize;
    let sectors: Vec<i64> = (1..=rtot)
        .map(|b| sector_index(b, r).map(|a| a as i64))
        .collect::<Result<_>>()?;
    let mut out = Vec::with_capacity(rtot * rtot);
    for alpha in 1..=rtot {
        for beta in 1..=rtot {
            let shift = sectors[beta - 1] - sectors[alpha - 1];
            let mu_a = fp.mu(alpha);
            let mu_b = fp.mu(beta);
            let mut el = RepRingElement::new(alpha, beta);
            let mut push = |t1: i64, t2: i64| {
                let omega = (shift + t2).rem_euclid(ell) as usize;
                el.add(RepMonomial { t1, t2, omega }, 1);
            };
            for (i, j) in mu_a.boxes() {
                push(-mu_b.row(j) + i, mu_a.column_height(i) - j + 1);
            }
            for (i, j) in mu_b.boxes() {
                push(mu_a.row(j) - i + 1, -mu_b.column_height(i) + j);
            }
            out.push(el);
        }
    }
    Ok(out)
}

/// The cyclic-group invariant part: characters with `omega = 0`.
pub fn invariant_part(t: &[RepRingElement]) -> Vec<RepRingElement> {
    t.iter()
        .map(|el| RepRingElement {
            alpha: el.alpha,
            beta: el.beta,
            terms: el
                .terms
                .iter()
                .filter(|(m, _)| m.omega == 0)
                .map(|(m, c)| (*m, *c))
                .collect(),
        })
        .collect()
}

/// Closed-form contribution `w(mu_beta)` of one component to the Morse index.
pub fn morse_index_formula(mu: &Partition, beta: usize, r: &RankVector) -> Result<i64> {
    let a = sector_index(beta, r)?;
    let n = colored_counts(mu, a as i64, r.ell())?;
    let weighted: i64 = n
        .iter()
        .zip(r.ranks())
        .map(|(nc, rc)| *nc as i64 * *rc as i64)
        .sum();
    let shift = r.cumulative(a) as i64 - beta as i64 + 1;
    Ok(weighted - mu.num_columns() as i64 * shift)
}

/// `w(mu) = sum_beta w(mu_beta)`.
pub fn fixed_point_index(fp: &FixedPoint, r: &RankVector) -> Result<i64> {
    fp.check(r)?;
    fp.mus
        .iter()
        .enumerate()
        .map(|(idx, mu)| morse_index_formula(mu, idx + 1, r))
        .sum()
}

/// Morse index by counting invariant tangent characters with negative
/// `T2` weight (for `alpha >= beta`) or non-positive `T2` weight (for `alpha < beta`).
pub fn morse_index_oracle(fp: &FixedPoint, r: &RankVector) -> Result<i64> {
    let inv = invariant_part(&tangent_character(fp, r)?);
    Ok(inv
        .iter()
        .map(|el| {
            el.terms
                .iter()
                .filter(|(m, _)| {
                    if el.alpha >= el.beta {
                        m.t2 < 0
                    } else {
                        m.t2 <= 0
                    }
                })
                .map(|(_, c)| *c)
                .sum::<i64>()
        })
        .sum())
}

/// A polynomial in `y` with nonnegative coefficients, keyed by `y`-exponent.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct YPolynomial {
    pub coeffs: BTreeMap<i64, u64>,
}

impl YPolynomial {
    pub fn coefficient(&self, exp: i64) -> u64 {
        self.coeffs.get(&exp).copied().unwrap_or(0)
    }

    /// Value at `y = 1`.
    pub fn at_one(&self) -> u64 {
        self.coeffs.values().sum()
    }

    pub fn only_even_nonnegative_powers(&self) -> bool {
        self.coeffs.keys().all(|e| *e >= 0 && e % 2 == 0)
    }

    fn add_power(&mut self, exp: i64) {
        *self.coeffs.entry(exp).or_insert(0) += 1;
    }
}

impl fmt::Display for YPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(e, c)| match (*e, *c) {
                (0, c) => c.to_string(),
                (e, 1) => format!("y^{e}"),
                (e, c) => format!("{c}*y^{e}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `P_y(M(r, n)) = sum over fixed points of y^{2 w}`.
pub fn poincare_polynomial(r: &RankVector, n: &OccupationVector) -> Result<YPolynomial> {
    let mut p = YPolynomial::default();
    for fp in enumerate_fixed_points(r, n)? {
        p.add_power(2 * fixed_point_index(&fp, r)?);
    }
    Ok(p)
}

/// `Z_r = sum_n P_y(M(r, n)) q^n` up to total `q`-degree `n_max`, by localization.
pub fn brute_force_z(r: &RankVector, n_max: u32) -> Result<Series> {
    let ell = r.ell();
    let space = Arc::new(VariableSpace::canonical(ell)?);
    let polys: Vec<(OccupationVector, YPolynomial)> = occupation_vectors(ell, n_max)
        .into_par_iter()
        .map(|n| poincare_polynomial(r, &n).map(|p| (n, p)))
        .collect::<Result<_>>()?;
    let mut terms = Vec::new();
    for (n, p) in polys {
        for (e, c) in &p.coeffs {
            let mut exps = Vec::with_capacity(ell + 1);
            exps.push(*e as i32);
            exps.extend(n.counts().iter().map(|k| *k as i32));
            terms.push((Monomial::from_exponents(exps), BigInt::from(*c)));
        }
    }
    Series::from_terms(space, n_max, terms)
}

/// One fixed point together with its Morse index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedPointEntry {
    pub mus: Vec<Partition>,
    pub morse: i64,
}

/// All fixed points of one component, in enumeration order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedPointReport {
    pub r: Vec<u32>,
    pub n: Vec<u32>,
    pub fixed_points: Vec<FixedPointEntry>,
}

pub fn fixed_point_report(r: &RankVector, n: &OccupationVector) -> Result<FixedPointReport> {
    let fixed_points = enumerate_fixed_points(r, n)?
        .into_iter()
        .map(|fp| {
            let morse = fixed_point_index(&fp, r)?;
            Ok(FixedPointEntry {
                mus: fp.mus,
                morse,
            })
        })
        .collect::<Result<_>>()?;
    Ok(FixedPointReport {
        r: r.ranks().to_vec(),
        n: n.counts().to_vec(),
        fixed_points,
    })
}
