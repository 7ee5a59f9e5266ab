//! Refined vacuum characters of the W-algebras attached to a block partition
//! `N = m_1 s_1 + ... + m_L s_L`, the beta-gamma and B-truncation factors,
//! multiplicity bookkeeping, and the affine `gl_N` Verma denominator.

use std::ops::RangeInclusive;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::closed_form::{theorem_z, Canonical, IdentityReport};
use crate::error::{Error, Result};
use crate::localization::{brute_force_z, RankVector};
use crate::series::{InverseProduct, Monomial, Series, VariableSpace};

/// Largest truncation at which `verify_wz` also sums over fixed points.
pub const BRUTE_FORCE_LIMIT: u32 = 4;

/// Multiplicities `m_i` and strictly increasing sizes `s_i` of the blocks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "BlockRepr", into = "BlockRepr")]
pub struct BlockData {
    m: Vec<u32>,
    s: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct BlockRepr {
    m: Vec<u32>,
    s: Vec<u32>,
}

impl TryFrom<BlockRepr> for BlockData {
    type Error = Error;
    fn try_from(r: BlockRepr) -> Result<Self> {
        BlockData::new(r.m, r.s)
    }
}

impl From<BlockData> for BlockRepr {
    fn from(b: BlockData) -> Self {
        BlockRepr { m: b.m, s: b.s }
    }
}

impl BlockData {
    pub fn new(m: Vec<u32>, s: Vec<u32>) -> Result<Self> {
        if m.is_empty() || m.len() != s.len() {
            return Err(Error::InvalidBlocks(format!(
                "m={m:?} and s={s:?} must be non-empty and of equal length"
            )));
        }
        if m.iter().chain(&s).any(|x| *x == 0) {
            return Err(Error::InvalidBlocks(format!(
                "entries must be positive: m={m:?} s={s:?}"
            )));
        }
        if s.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidBlocks(format!(
                "s={s:?} must be strictly increasing"
            )));
        }
        Ok(BlockData { m, s })
    }

    pub fn m(&self) -> &[u32] {
        &self.m
    }

    pub fn s(&self) -> &[u32] {
        &self.s
    }

    /// Number of blocks `L`.
    pub fn len(&self) -> usize {
        self.m.len()
    }

    pub fn is_empty(&self) -> bool {
        self.m.is_empty()
    }

    /// `ell = m_1 + ... + m_L`.
    pub fn ell(&self) -> usize {
        self.m.iter().sum::<u32>() as usize
    }

    /// `N = m_1 s_1 + ... + m_L s_L`.
    pub fn n(&self) -> u32 {
        self.m.iter().zip(&self.s).map(|(m, s)| m * s).sum()
    }

    /// `m_i` for 1-based `i`.
    pub fn mult(&self, i: usize) -> u32 {
        self.m[i - 1]
    }

    /// `s_i` for 1-based `i`.
    pub fn size(&self, i: usize) -> u32 {
        self.s[i - 1]
    }

    /// Indices `m_1 + ... + m_{i-1} + 1 ..= m_1 + ... + m_i`.
    pub fn block_range(&self, i: usize) -> RangeInclusive<usize> {
        let start: u32 = self.m[..i - 1].iter().sum();
        start as usize + 1..=(start + self.m[i - 1]) as usize
    }

    fn check_block(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: self.len(),
            });
        }
        Ok(())
    }

    fn check_pair(&self, i: usize, j: usize) -> Result<()> {
        self.check_block(i)?;
        self.check_block(j)?;
        if i >= j {
            return Err(Error::InvalidBlocks(format!(
                "block pair ({i},{j}) needs i < j"
            )));
        }
        Ok(())
    }
}

/// `(s_L^{m_L}, ..., s_1^{m_1})`.
pub fn rank_vector_from(b: &BlockData) -> Result<RankVector> {
    let r = (1..=b.len())
        .rev()
        .flat_map(|i| std::iter::repeat_n(b.size(i), b.mult(i) as usize))
        .collect();
    RankVector::new(r)
}

fn canonical(b: &BlockData) -> Result<Canonical> {
    Canonical::new(&rank_vector_from(b)?)
}

pub fn x_i_factors(b: &BlockData, i: usize) -> Result<InverseProduct> {
    b.check_block(i)?;
    let cv = canonical(b)?;
    let z = cv.z();
    let mut p = InverseProduct::new(cv.space().clone());
    for t in 1..=b.size(i) as i32 {
        let y = cv.y(-2 * t);
        p.pochhammer(y.mul(&z), z.clone(), b.mult(i), format!("t={t}"));
        for a in b.block_range(i) {
            for c in a + 1..=*b.block_range(i).end() {
                let ua = cv.u(a);
                let uc = cv.u(c);
                p.pochhammer(
                    y.mul(&z).mul(&ua).mul(&uc.inv()),
                    z.clone(),
                    1,
                    format!("t={t} a={a} c={c}"),
                );
                p.pochhammer(
                    y.mul(&ua.inv()).mul(&uc),
                    z.clone(),
                    1,
                    format!("t={t} a={a} c={c} inv"),
                );
            }
        }
    }
    Ok(p)
}

pub fn x_i(b: &BlockData, i: usize, n_max: u32) -> Result<Series> {
    x_i_factors(b, i)?.expand(n_max)
}

pub fn x_ij_factors(b: &BlockData, i: usize, j: usize) -> Result<InverseProduct> {
    b.check_pair(i, j)?;
    let cv = canonical(b)?;
    let z = cv.z();
    let shift = 2 * (b.size(i) as i32 - b.size(j) as i32);
    let mut p = InverseProduct::new(cv.space().clone());
    for t in 1..=b.size(i) as i32 {
        for a in b.block_range(i) {
            for c in b.block_range(j) {
                let ua = cv.u(a);
                let uc = cv.u(c);
                p.pochhammer(
                    cv.y(-2 * t + shift).mul(&z).mul(&ua).mul(&uc.inv()),
                    z.clone(),
                    1,
                    format!("t={t} a={a} c={c}"),
                );
                p.pochhammer(
                    cv.y(-2 * t).mul(&ua.inv()).mul(&uc),
                    z.clone(),
                    1,
                    format!("t={t} a={a} c={c} inv"),
                );
            }
        }
    }
    Ok(p)
}

pub fn x_ij(b: &BlockData, i: usize, j: usize, n_max: u32) -> Result<Series> {
    x_ij_factors(b, i, j)?.expand(n_max)
}

/// All factors of `prod_i X_i prod_{i<j} X_ij`.
pub fn w_refined_verma_factors(b: &BlockData) -> Result<InverseProduct> {
    let cv = canonical(b)?;
    let mut p = InverseProduct::new(cv.space().clone());
    for i in 1..=b.len() {
        p.extend(&x_i_factors(b, i)?);
    }
    for i in 1..=b.len() {
        for j in i + 1..=b.len() {
            p.extend(&x_ij_factors(b, i, j)?);
        }
    }
    Ok(p)
}

pub fn w_refined_verma(b: &BlockData, n_max: u32) -> Result<Series> {
    w_refined_verma_factors(b)?.expand(n_max)
}

pub fn b_character_factors(b: &BlockData, i: usize, j: usize) -> Result<InverseProduct> {
    b.check_pair(i, j)?;
    let cv = canonical(b)?;
    let z = cv.z();
    let mut p = InverseProduct::new(cv.space().clone());
    for t in 1..=(b.size(j) - b.size(i)) as i32 {
        for a in b.block_range(i) {
            for c in b.block_range(j) {
                p.pochhammer(
                    cv.y(-2 * t).mul(&z).mul(&cv.u(a)).mul(&cv.u(c).inv()),
                    z.clone(),
                    1,
                    format!("t={t} a={a} c={c} beta"),
                );
            }
        }
    }
    Ok(p)
}

pub fn b_character(b: &BlockData, i: usize, j: usize, n_max: u32) -> Result<Series> {
    b_character_factors(b, i, j)?.expand(n_max)
}

/// The B-truncation factors followed by the `gamma` family
/// `(y^{2-2t} u_a^{-1} u_c)_inf^{-1}`.
pub fn betagamma_factors(b: &BlockData, i: usize, j: usize) -> Result<InverseProduct> {
    let mut p = b_character_factors(b, i, j)?;
    let cv = canonical(b)?;
    let z = cv.z();
    for t in 1..=(b.size(j) - b.size(i)) as i32 {
        for a in b.block_range(i) {
            for c in b.block_range(j) {
                p.pochhammer(
                    cv.y(2 - 2 * t).mul(&cv.u(a).inv()).mul(&cv.u(c)),
                    z.clone(),
                    1,
                    format!("t={t} a={a} c={c} gamma"),
                );
            }
        }
    }
    Ok(p)
}

pub fn betagamma_refined(b: &BlockData, i: usize, j: usize, n_max: u32) -> Result<Series> {
    betagamma_factors(b, i, j)?.expand(n_max)
}

/// `W * prod_{i<j} B_ij` as a single factor list.
pub fn wz_factors(b: &BlockData) -> Result<InverseProduct> {
    let mut p = w_refined_verma_factors(b)?;
    for i in 1..=b.len() {
        for j in i + 1..=b.len() {
            p.extend(&b_character_factors(b, i, j)?);
        }
    }
    Ok(p)
}

/// Compares `Z_r` for the induced ranks with the W-algebra character times
/// the B-truncations; at small truncation also with the fixed-point sum.
pub fn verify_wz(b: &BlockData, n_max: u32) -> Result<Vec<IdentityReport>> {
    let r = rank_vector_from(b)?;
    let z = theorem_z(&r, n_max)?;
    let mut rhs = w_refined_verma(b, n_max)?;
    for i in 1..=b.len() {
        for j in i + 1..=b.len() {
            rhs = rhs.mul(&b_character(b, i, j, n_max)?)?;
        }
    }
    let mut out = vec![IdentityReport::compare(
        "product formula = W character * B characters",
        &z,
        &rhs,
    )];
    if n_max <= BRUTE_FORCE_LIMIT {
        let brute = brute_force_z(&r, n_max)?;
        out.push(IdentityReport::compare(
            "fixed-point sum = W character * B characters",
            &brute,
            &rhs,
        ));
    }
    Ok(out)
}

/// One isotypic piece of `gl_N` under `sl_2`: blocks `(i, j)` (equal for the
/// adjoint part), irreducible dimension `d` and multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpinEntry {
    pub i: usize,
    pub j: usize,
    pub d: u32,
    pub mult: u32,
}

pub fn spin_decomposition(b: &BlockData) -> Vec<SpinEntry> {
    let mut out = Vec::new();
    for i in 1..=b.len() {
        let (mi, si) = (b.mult(i), b.size(i));
        for big_j in 1..=si {
            out.push(SpinEntry {
                i,
                j: i,
                d: 2 * big_j - 1,
                mult: mi * mi,
            });
        }
        for j in i + 1..=b.len() {
            let (mj, sj) = (b.mult(j), b.size(j));
            for d in (sj - si + 1..=si + sj - 1).step_by(2) {
                out.push(SpinEntry {
                    i,
                    j,
                    d,
                    mult: 2 * mi * mj,
                });
            }
        }
    }
    out
}

pub fn total_dimension(entries: &[SpinEntry]) -> u64 {
    entries.iter().map(|e| e.d as u64 * e.mult as u64).sum()
}

/// Free fermions and beta-gamma pairs of one reduction step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FreeFields {
    pub fermions: u64,
    pub betagamma: u64,
}

impl FreeFields {
    /// Fermions minus the two fermion slots each beta-gamma pair cancels.
    pub fn effective_fermions(&self) -> i64 {
        self.fermions as i64 - 2 * self.betagamma as i64
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockFields {
    pub i: usize,
    pub fermions: u64,
}

/// Pair contribution for the one-step reduction and for the iterated one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairFields {
    pub i: usize,
    pub j: usize,
    pub direct: FreeFields,
    pub iterated: FreeFields,
    /// `m_i m_j (s_j - s_i)`, the beta-gamma systems relating the two.
    pub betagamma_quotient: u64,
}

impl PairFields {
    /// Effective fermion counts of the two complexes differ by exactly the
    /// two fermion slots of each quotient beta-gamma pair.
    pub fn difference_holds(&self) -> bool {
        self.direct.effective_fermions() - self.iterated.effective_fermions()
            == 2 * self.betagamma_quotient as i64
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreeFieldCounts {
    pub blocks: Vec<BlockFields>,
    pub pairs: Vec<PairFields>,
}

pub fn free_field_counts(b: &BlockData) -> FreeFieldCounts {
    let mut blocks = Vec::new();
    let mut pairs = Vec::new();
    for i in 1..=b.len() {
        let (mi, si) = (b.mult(i) as u64, b.size(i) as u64);
        blocks.push(BlockFields {
            i,
            fermions: mi * mi * si * (si - 1),
        });
        for j in i + 1..=b.len() {
            let (mj, sj) = (b.mult(j) as u64, b.size(j) as u64);
            let mm = mi * mj;
            let direct = if si % 2 == sj % 2 {
                FreeFields {
                    fermions: 2 * mm * si * (sj - 1),
                    betagamma: 0,
                }
            } else {
                FreeFields {
                    fermions: 2 * mm * si * sj,
                    betagamma: mm * si,
                }
            };
            let iterated = if si % 2 == 1 {
                FreeFields {
                    fermions: 2 * mm * sj * (si - 1),
                    betagamma: 0,
                }
            } else {
                FreeFields {
                    fermions: 2 * mm * si * sj,
                    betagamma: mm * sj,
                }
            };
            pairs.push(PairFields {
                i,
                j,
                direct,
                iterated,
                betagamma_quotient: mm * (sj - si),
            });
        }
    }
    FreeFieldCounts { blocks, pairs }
}

/// The space `(z, v_1, ..., v_N)` graded by `z`.
pub fn verma_space(n: usize) -> Result<VariableSpace> {
    let mut names = vec!["z".to_string()];
    names.extend((1..=n).map(|i| format!("v{i}")));
    VariableSpace::new(&names, &["z".to_string()])
}

/// Weights of the secondary grading `(N-1) deg_z + sum_i (i-1) deg_{v_i}`.
/// Every denominator factor has non-negative weight, and the `z`-free ones
/// have positive weight.
pub fn verma_weights(n: usize) -> Vec<i64> {
    let mut w = vec![n as i64 - 1];
    w.extend(0..n as i64);
    w
}

pub fn verma_weight(n: usize, m: &Monomial) -> i64 {
    verma_weights(n)
        .iter()
        .zip(m.exponents())
        .map(|(w, e)| w * *e as i64)
        .sum()
}

/// Inverse of the affine `gl_N` Verma denominator, up to `z`-degree `n_max`
/// and secondary weight `v_cap`.
pub fn affine_verma_denominator(n: usize, n_max: u32, v_cap: u32) -> Result<Series> {
    if n == 0 {
        return Err(Error::InvalidSpace("N must be positive".into()));
    }
    let space = Arc::new(verma_space(n)?);
    let len = space.len();
    let z = Monomial::variable(len, 0, 1);
    let v = |i: usize| Monomial::variable(len, i, 1);
    let weights = verma_weights(n);
    let cap = v_cap as i64;
    let mut acc = Series::one(space, n_max);
    for k in 1..=n_max as i32 {
        for _ in 0..n {
            acc = acc.mul_geometric_inverse_filtered(&z.pow(k), &weights, cap)?;
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            for k in 1..=n_max as i32 + 1 {
                let lower = v(j).mul(&v(i).inv()).mul(&z.pow(k - 1));
                acc = acc.mul_geometric_inverse_filtered(&lower, &weights, cap)?;
                if k <= n_max as i32 {
                    let upper = v(i).mul(&v(j).inv()).mul(&z.pow(k));
                    acc = acc.mul_geometric_inverse_filtered(&upper, &weights, cap)?;
                }
            }
        }
    }
    Ok(acc)
}

/// `X_1` for `(m, s) = ((N), (1))` at `y = 1`, rewritten in `(z, v)` through
/// `u_i -> v_i` and restricted to the same window as the denominator.
pub fn verma_from_block(n: usize, n_max: u32, v_cap: u32) -> Result<Series> {
    let b = BlockData::new(vec![n as u32], vec![1])?;
    let q_trunc = v_cap + n_max * n as u32;
    let x1 = x_i(&b, 1, q_trunc)?.restrict("y")?;
    let target = Arc::new(verma_space(n)?);
    let len = target.len();
    let var = |i: usize, e: i32| Monomial::variable(len, i, e);
    let mut mapping = vec![target.one(), var(0, 1).mul(&var(1, 1)).mul(&var(n, -1))];
    for q in 1..n {
        mapping.push(var(n - q + 1, 1).mul(&var(n - q, -1)));
    }
    let image = x1.substitute(target, &mapping, n_max)?;
    Ok(image.retain(|m| verma_weight(n, m) <= v_cap as i64))
}

pub fn verify_verma(n: usize, n_max: u32, v_cap: u32) -> Result<IdentityReport> {
    let lhs = verma_from_block(n, n_max, v_cap)?;
    let rhs = affine_verma_denominator(n, n_max, v_cap)?;
    Ok(IdentityReport::compare(
        format!("X_1 at y=1 = affine gl_{n} Verma denominator"),
        &lhs,
        &rhs,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_form::theorem_z_u;

    fn bd(m: &[u32], s: &[u32]) -> BlockData {
        BlockData::new(m.to_vec(), s.to_vec()).unwrap()
    }

    const PROP_GRID: [(&[u32], &[u32]); 4] = [
        (&[2], &[1]),
        (&[1, 1], &[1, 2]),
        (&[2, 1], &[1, 2]),
        (&[1, 2], &[1, 2]),
    ];

    #[test]
    fn block_validation() {
        assert!(BlockData::new(vec![], vec![]).is_err());
        assert!(BlockData::new(vec![1, 1], vec![2, 1]).is_err());
        assert!(BlockData::new(vec![1, 1], vec![1, 1]).is_err());
        assert!(BlockData::new(vec![0], vec![1]).is_err());
        assert!(BlockData::new(vec![1], vec![1, 2]).is_err());
        let b = bd(&[2, 1, 3], &[1, 2, 4]);
        assert_eq!(b.ell(), 6);
        assert_eq!(b.n(), 2 + 2 + 12);
        assert_eq!(b.block_range(1), 1..=2);
        assert_eq!(b.block_range(2), 3..=3);
        assert_eq!(b.block_range(3), 4..=6);
        let json = serde_json::to_string(&b).unwrap();
        assert_eq!(json, r#"{"m":[2,1,3],"s":[1,2,4]}"#);
        assert!(serde_json::from_str::<BlockData>(r#"{"m":[1],"s":[0]}"#).is_err());
    }

    #[test]
    fn rank_vectors() {
        let r = |m: &[u32], s: &[u32]| rank_vector_from(&bd(m, s)).unwrap().ranks().to_vec();
        assert_eq!(r(&[2], &[1]), vec![1, 1]);
        assert_eq!(r(&[1, 1], &[1, 2]), vec![2, 1]);
        assert_eq!(r(&[2, 1], &[1, 2]), vec![2, 1, 1]);
        assert!(rank_vector_from(&bd(&[1], &[3])).is_err());
        // r_{ell-c} = s_i exactly for c in block i
        let b = bd(&[2, 1, 3], &[1, 2, 4]);
        let rv = rank_vector_from(&b).unwrap();
        for i in 1..=b.len() {
            for c in b.block_range(i) {
                assert_eq!(rv.rank((b.ell() - c) as i64), b.size(i));
            }
        }
    }

    #[test]
    fn x_examples() {
        let b = bd(&[2], &[1]);
        assert_eq!(x_i(&b, 1, 0).unwrap().to_string(), "1");
        let b = bd(&[1, 1], &[1, 2]);
        assert_eq!(x_i(&b, 1, 1).unwrap().to_string(), "1");
        assert_eq!(x_ij(&b, 1, 2, 0).unwrap().to_string(), "1");
        assert_eq!(x_ij(&b, 1, 2, 1).unwrap().to_string(), "q0 + q1 + 1");
        let full = x_ij(&b, 1, 2, 4).unwrap();
        assert_eq!(full.truncate(3).unwrap(), x_ij(&b, 1, 2, 3).unwrap());
        assert!(x_i(&b, 3, 1).is_err());
        assert!(x_ij(&b, 2, 1, 1).is_err());
    }

    #[test]
    fn b_and_betagamma_examples() {
        let b = bd(&[1, 1], &[1, 2]);
        assert_eq!(b_character(&b, 1, 2, 0).unwrap().to_string(), "1");
        assert_eq!(b_character(&b, 1, 2, 1).unwrap().to_string(), "y^2*q0 + 1");
        assert_eq!(betagamma_refined(&b, 1, 2, 0).unwrap().to_string(), "1");
        assert_eq!(
            betagamma_refined(&b, 1, 2, 1).unwrap().to_string(),
            "y^2*q0 + y^2*q1 + 1"
        );
    }

    #[test]
    fn b_is_the_beta_half() {
        for (m, s) in [(&[1u32, 1][..], &[1u32, 3][..]), (&[2, 1], &[1, 2]), (&[1, 2], &[2, 5])] {
            let b = bd(m, s);
            let bf = b_character_factors(&b, 1, 2).unwrap();
            let bg = betagamma_factors(&b, 1, 2).unwrap();
            assert_eq!(bg.factors()[..bf.factors().len()], *bf.factors());
            assert!(bg.factors()[bf.factors().len()..]
                .iter()
                .all(|f| f.label.ends_with("gamma")));
        }
    }

    #[test]
    fn characters_are_nonnegative() {
        for (m, s) in PROP_GRID {
            let b = bd(m, s);
            for i in 1..=b.len() {
                assert!(x_i(&b, i, 4).unwrap().has_nonnegative_coefficients());
                for j in i + 1..=b.len() {
                    assert!(x_ij(&b, i, j, 4).unwrap().has_nonnegative_coefficients());
                    assert!(b_character(&b, i, j, 4).unwrap().has_nonnegative_coefficients());
                    assert!(betagamma_refined(&b, i, j, 4)
                        .unwrap()
                        .has_nonnegative_coefficients());
                }
            }
        }
    }

    #[test]
    fn w_character_is_the_product_of_its_blocks() {
        let b = bd(&[2, 1], &[1, 2]);
        let n = 4;
        let mut prod = x_i(&b, 1, n).unwrap();
        prod = prod.mul(&x_i(&b, 2, n).unwrap()).unwrap();
        prod = prod.mul(&x_ij(&b, 1, 2, n).unwrap()).unwrap();
        assert_eq!(prod, w_refined_verma(&b, n).unwrap());
        assert_eq!(w_refined_verma(&b, 0).unwrap().to_string(), "1");
    }

    #[test]
    fn single_block_is_the_generating_function() {
        let b = bd(&[2], &[1]);
        let r = rank_vector_from(&b).unwrap();
        assert_eq!(w_refined_verma(&b, 4).unwrap(), theorem_z(&r, 4).unwrap());
        assert_eq!(w_refined_verma(&b, 4).unwrap(), theorem_z_u(&r, 4).unwrap());
    }

    #[test]
    fn wz_identity() {
        for (m, s) in PROP_GRID {
            for rep in verify_wz(&bd(m, s), 4).unwrap() {
                assert!(rep.equal, "{m:?} {s:?}: {rep:?}");
            }
        }
    }

    #[test]
    fn spin_examples() {
        assert_eq!(total_dimension(&spin_decomposition(&bd(&[1, 1], &[1, 2]))), 9);
        let single = spin_decomposition(&bd(&[2], &[1]));
        assert_eq!(single, vec![SpinEntry { i: 1, j: 1, d: 1, mult: 4 }]);
        assert_eq!(total_dimension(&spin_decomposition(&bd(&[1, 1, 1], &[1, 2, 3]))), 36);
    }

    #[test]
    fn free_field_examples() {
        let c = free_field_counts(&bd(&[2], &[1]));
        assert_eq!(c.blocks[0].fermions, 0);
        assert!(c.pairs.is_empty());
        let c = free_field_counts(&bd(&[1, 1], &[1, 2]));
        assert_eq!(c.pairs[0].direct, FreeFields { fermions: 4, betagamma: 1 });
        let c = free_field_counts(&bd(&[1, 1], &[1, 3]));
        assert_eq!(c.pairs[0].direct, FreeFields { fermions: 4, betagamma: 0 });
        for (m, s) in [(&[2u32, 3][..], &[2u32, 5][..]), (&[1, 2, 1], &[1, 2, 4])] {
            assert!(free_field_counts(&bd(m, s)).pairs.iter().all(PairFields::difference_holds));
        }
    }

    #[test]
    fn verma_examples() {
        let d1 = affine_verma_denominator(1, 5, 0).unwrap();
        let s = d1.space().clone();
        let coeffs: Vec<i64> = (0..=5)
            .map(|k| {
                let c = d1.coefficient(&s.monomial(&[("z", k)]).unwrap());
                i64::try_from(c).unwrap()
            })
            .collect();
        assert_eq!(coeffs, vec![1, 1, 2, 3, 5, 7]);
        let d2 = affine_verma_denominator(2, 0, 2).unwrap();
        assert_eq!(d2.to_string(), "1 + v1^-1*v2 + v1^-2*v2^2");
        assert!(affine_verma_denominator(0, 1, 1).is_err());
    }

    #[test]
    fn verma_matches_single_block() {
        for n in [2usize, 3] {
            let rep = verify_verma(n, 4, 4).unwrap();
            assert!(rep.equal, "{rep:?}");
        }
    }
}
