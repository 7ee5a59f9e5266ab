//! Young diagrams, colorings and the box-counting functions used by the
//! Morse index computation.
//!
//! A partition is stored by its row lengths `mu_1 >= mu_2 >= ...`. Boxes are
//! pairs `(i, j)` with `j` the row and `1 <= i <= mu_j` the column, both
//! 1-based. Column `i` has height `mu'_i = #{j : mu_j >= i}`.

use std::sync::Arc;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::{Series, VariableSpace};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    rows: Vec<u32>,
}

impl Partition {
    pub fn new(rows: Vec<u32>) -> Result<Self> {
        let ok = rows.iter().all(|r| *r > 0) && rows.windows(2).all(|w| w[0] >= w[1]);
        if !ok {
            return Err(Error::InvalidPartition(rows));
        }
        Ok(Partition { rows })
    }

    pub fn empty() -> Self {
        Partition { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.rows.iter().sum()
    }

    /// `col(mu)`, the number of columns.
    pub fn num_columns(&self) -> u32 {
        self.rows.first().copied().unwrap_or(0)
    }

    /// Row length `mu_j` (1-based); zero past the last row.
    pub fn row(&self, j: i64) -> i64 {
        if j < 1 {
            return 0;
        }
        self.rows.get(j as usize - 1).map_or(0, |r| *r as i64)
    }

    /// Column height `mu'_i` (1-based); zero past the last column.
    pub fn column_height(&self, i: i64) -> i64 {
        if i < 1 {
            return 0;
        }
        self.rows.iter().take_while(|r| **r as i64 >= i).count() as i64
    }

    pub fn column_heights(&self) -> Vec<u32> {
        (1..=self.num_columns() as i64)
            .map(|i| self.column_height(i) as u32)
            .collect()
    }

    /// All boxes `(i, j)` row by row.
    pub fn boxes(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(j, len)| (1..=*len as i64).map(move |i| (i, j as i64 + 1)))
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(rows: Vec<u32>) -> Result<Self> {
        Partition::new(rows)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.rows
    }
}

/// All partitions of `n`, lexicographically descending on row vectors.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    fn go(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                rows: prefix.clone(),
            });
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of size at most `n`, by size then canonical order.
pub fn partitions_up_to(n: u32) -> Vec<Partition> {
    (0..=n).flat_map(enumerate_partitions).collect()
}

fn check_modulus(ell: usize) -> Result<()> {
    if ell < 2 {
        return Err(Error::InvalidModulus(ell as i64));
    }
    Ok(())
}

/// Color of box row `j` in an `a`-colored diagram: `a - j + 1 mod ell`.
pub fn box_color(a: i64, j: i64, ell: usize) -> usize {
    (a - j + 1).rem_euclid(ell as i64) as usize
}

/// Number of boxes of each color when `mu` is `a`-colored.
pub fn colored_counts(mu: &Partition, a: i64, ell: usize) -> Result<Vec<u32>> {
    check_modulus(ell)?;
    let mut counts = vec![0u32; ell];
    for (j, len) in mu.rows.iter().enumerate() {
        counts[box_color(a, j as i64 + 1, ell)] += len;
    }
    Ok(counts)
}

fn check_residue(c: i64, ell: usize) -> Result<()> {
    check_modulus(ell)?;
    let bound = ell as i64 - 1;
    if c < -bound || c > bound {
        return Err(Error::ResidueOutOfRange {
            c,
            lo: -bound,
            hi: bound,
        });
    }
    Ok(())
}

fn congruent(x: i64, c: i64, ell: usize) -> bool {
    (x - c).rem_euclid(ell as i64) == 0
}

/// `|{(i,j) in mu : mu'_i - j = c mod ell}|`
pub fn count_n1_geq(mu: &Partition, c: i64, ell: usize) -> Result<u32> {
    check_residue(c, ell)?;
    Ok(mu
        .boxes()
        .filter(|(i, j)| congruent(mu.column_height(*i) - j, c, ell))
        .count() as u32)
}

/// `|{(i,j) in mu : mu'_i - j > 0, mu'_i - j = c mod ell}|`
pub fn count_n1_gt(mu: &Partition, c: i64, ell: usize) -> Result<u32> {
    check_residue(c, ell)?;
    Ok(mu
        .boxes()
        .filter(|(i, j)| {
            let d = mu.column_height(*i) - j;
            d > 0 && congruent(d, c, ell)
        })
        .count() as u32)
}

/// `|{(i,j) in mu : j - 1 = c mod ell}|`
pub fn count_n2_geq(mu: &Partition, c: i64, ell: usize) -> Result<u32> {
    check_residue(c, ell)?;
    Ok(mu
        .boxes()
        .filter(|(_, j)| congruent(j - 1, c, ell))
        .count() as u32)
}

/// A partition and residue where the box-count identities fail.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoxCountFailure {
    pub mu: Partition,
    pub ell: usize,
    pub c: i64,
    pub n1_geq: u32,
    pub n1_gt: u32,
    pub n2_geq: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoxCountReport {
    pub max_size: u32,
    pub ells: Vec<usize>,
    pub checked: u64,
    pub equal: bool,
    pub first_failure: Option<BoxCountFailure>,
}

/// Checks `N1>=0 = N2>=0` and `N1>0 = N2>=0 - [c = 0] col(mu)` for every
/// partition of size at most `max_size`, every `ell` given and every residue.
pub fn verify_box_counts(max_size: u32, ells: &[usize]) -> Result<BoxCountReport> {
    let mut checked = 0u64;
    let mut first_failure = None;
    'outer: for mu in partitions_up_to(max_size) {
        for &ell in ells {
            let bound = ell as i64 - 1;
            for c in -bound..=bound {
                let n1_geq = count_n1_geq(&mu, c, ell)?;
                let n1_gt = count_n1_gt(&mu, c, ell)?;
                let n2_geq = count_n2_geq(&mu, c, ell)?;
                checked += 1;
                let expect_gt = if c == 0 {
                    n2_geq as i64 - mu.num_columns() as i64
                } else {
                    n2_geq as i64
                };
                if n1_geq != n2_geq || n1_gt as i64 != expect_gt {
                    first_failure = Some(BoxCountFailure {
                        mu: mu.clone(),
                        ell,
                        c,
                        n1_geq,
                        n1_gt,
                        n2_geq,
                    });
                    break 'outer;
                }
            }
        }
    }
    Ok(BoxCountReport {
        max_size,
        ells: ells.to_vec(),
        checked,
        equal: first_failure.is_none(),
        first_failure,
    })
}

/// The space `(v, X0, ..., X(ell-1))` graded by total X-degree.
pub fn coloring_space(ell: usize) -> Result<VariableSpace> {
    check_modulus(ell)?;
    let xs: Vec<String> = (0..ell).map(|b| format!("X{b}")).collect();
    let mut names = vec!["v".to_string()];
    names.extend(xs.iter().cloned());
    VariableSpace::new(&names, &xs)
}

/// `sum_mu v^col(mu) prod_{(i,j) in mu} X_{a-j+1}` over `|mu| <= n_max`.
pub fn partition_sum_lhs(a: i64, ell: usize, n_max: u32) -> Result<Series> {
    let space = Arc::new(coloring_space(ell)?);
    let mut terms = Vec::new();
    for mu in partitions_up_to(n_max) {
        let counts = colored_counts(&mu, a, ell)?;
        let mut exps = Vec::with_capacity(ell + 1);
        exps.push(mu.num_columns() as i32);
        exps.extend(counts.iter().map(|c| *c as i32));
        terms.push((crate::series::Monomial::from_exponents(exps), BigInt::from(1)));
    }
    Series::from_terms(space, n_max, terms)
}
