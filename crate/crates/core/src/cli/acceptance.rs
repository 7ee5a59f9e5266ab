//! The acceptance grid: every identity and invariant checked at the sizes
//! the library is expected to reproduce exactly.

use serde::Serialize;

use crate::characters::{
    b_character_factors, free_field_counts, spin_decomposition, total_dimension, verify_verma,
    verify_wz, w_refined_verma, w_refined_verma_factors, wz_factors, BlockData, PairFields,
};
use crate::closed_form::{
    reindexing_factors, theorem_z, verify_reindexing, verify_partition_identity, verify_theorem,
    verify_u_form, IdentityReport,
};
use crate::error::Result;
use crate::localization::{
    brute_force_z, enumerate_fixed_points, fixed_point_index, invariant_part, morse_index_oracle,
    occupation_vectors, poincare_polynomial, tangent_character, RankVector, RepRingElement,
};
use crate::partitions::verify_box_counts;
use crate::series::Series;

pub const RANK_GRID: [&[u32]; 5] = [&[1, 1], &[2, 1], &[1, 1, 1], &[2, 2, 1], &[2, 1, 1]];
pub const BLOCK_GRID: [(&[u32], &[u32]); 4] = [
    (&[2], &[1]),
    (&[1, 1], &[1, 2]),
    (&[2, 1], &[1, 2]),
    (&[1, 2], &[1, 2]),
];
pub const REINDEX_GRID: [&[u32]; 3] = [&[1, 1, 1], &[2, 2, 1], &[2, 1, 1, 1]];
pub const GRID_ORDER: u32 = 4;

/// Expected `Z_r` at truncation 4, one file per entry of [`RANK_GRID`].
pub const GOLDEN: [(&[u32], &str); 5] = [
    (&[1, 1], include_str!("../../fixtures/z_1_1.json")),
    (&[2, 1], include_str!("../../fixtures/z_2_1.json")),
    (&[1, 1, 1], include_str!("../../fixtures/z_1_1_1.json")),
    (&[2, 2, 1], include_str!("../../fixtures/z_2_2_1.json")),
    (&[2, 1, 1], include_str!("../../fixtures/z_2_1_1.json")),
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionOutcome {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn ranks(r: &[u32]) -> Result<RankVector> {
    RankVector::new(r.to_vec())
}

fn blocks(m: &[u32], s: &[u32]) -> Result<BlockData> {
    BlockData::new(m.to_vec(), s.to_vec())
}

fn first_failure(reports: &[IdentityReport]) -> Option<String> {
    reports.iter().find(|r| !r.equal).map(|r| {
        let at = r
            .first_diff
            .as_ref()
            .map(|d| format!(" at {:?}: {} vs {}", d.exp, d.lhs, d.rhs))
            .unwrap_or_default();
        format!("{} differs{at}", r.identity)
    })
}

fn outcome(id: u8, title: &'static str, failure: Option<String>, ok: String) -> CriterionOutcome {
    CriterionOutcome {
        id,
        title,
        passed: failure.is_none(),
        detail: failure.unwrap_or(ok),
    }
}

pub fn golden_series(r: &[u32]) -> Option<Result<Series>> {
    GOLDEN
        .iter()
        .find(|(g, _)| *g == r)
        .map(|(_, text)| Series::from_json_str(text))
}

/// Product formula against the fixed-point sum and the shipped fixtures.
pub fn criterion_1() -> Result<CriterionOutcome> {
    let mut reports = Vec::new();
    for r in RANK_GRID {
        let rv = ranks(r)?;
        reports.push(verify_theorem(&rv, GRID_ORDER)?);
        if let Some(golden) = golden_series(r) {
            let closed = theorem_z(&rv, GRID_ORDER)?;
            reports.push(IdentityReport::compare(
                format!("golden Z_{r:?}"),
                &golden?,
                &closed,
            ));
        }
    }
    Ok(outcome(
        1,
        "product formula = fixed-point sum",
        first_failure(&reports),
        format!("{} comparisons at order {GRID_ORDER}", reports.len()),
    ))
}

/// Hard-coded coefficients of `Z_(1,1)`.
pub fn criterion_2() -> Result<CriterionOutcome> {
    let rv = ranks(&[1, 1])?;
    let mut failure = None;
    for (name, z) in [
        ("fixed-point sum", brute_force_z(&rv, 2)?),
        ("product formula", theorem_z(&rv, 2)?),
    ] {
        let s = z.space().clone();
        let checks = [
            (s.monomial(&[("q0", 1), ("q1", 1)])?, 1),
            (s.monomial(&[("y", 2), ("q0", 1), ("q1", 1)])?, 2),
            (s.monomial(&[("q0", 2)])?, 1),
        ];
        for (m, want) in checks {
            if z.coefficient(&m) != want.into() {
                failure = Some(format!(
                    "{name}: coefficient of {} is {}, expected {want}",
                    s.format_monomial(&m),
                    z.coefficient(&m)
                ));
            }
        }
        let y_powers_of_q0q1: Vec<_> = z
            .terms()
            .filter(|(m, _)| m.exponents()[1..] == [1, 1])
            .collect();
        if y_powers_of_q0q1.len() != 2 {
            failure = Some(format!("{name}: q0*q1 coefficient has extra terms"));
        }
    }
    Ok(outcome(
        2,
        "Z_(1,1) spot values",
        failure,
        "[q0 q1] = 1 + 2y^2, [q0^2] = 1".into(),
    ))
}

pub fn criterion_3() -> Result<CriterionOutcome> {
    let reports = RANK_GRID
        .iter()
        .map(|r| verify_u_form(&ranks(r)?, GRID_ORDER))
        .collect::<Result<Vec<_>>>()?;
    Ok(outcome(
        3,
        "u-variable form = product formula",
        first_failure(&reports),
        format!("{} rank vectors at order {GRID_ORDER}", reports.len()),
    ))
}

pub fn criterion_4() -> Result<CriterionOutcome> {
    let mut reports = Vec::new();
    for (m, s) in BLOCK_GRID {
        reports.extend(verify_wz(&blocks(m, s)?, GRID_ORDER)?);
    }
    let single = blocks(&[2], &[1])?;
    let mut failure = first_failure(&reports);
    if wz_factors(&single)?.factors().len() != w_refined_verma_factors(&single)?.factors().len() {
        failure = Some("single block carries B factors".into());
    }
    if w_refined_verma(&single, GRID_ORDER)? != theorem_z(&ranks(&[1, 1])?, GRID_ORDER)? {
        failure = Some("single block W character differs from Z_(1,1)".into());
    }
    if b_character_factors(&single, 1, 1).is_ok() {
        failure = Some("B character accepted i = j".into());
    }
    Ok(outcome(
        4,
        "Z_r = W character * B characters",
        failure,
        format!("{} block data at order {GRID_ORDER}", BLOCK_GRID.len()),
    ))
}

pub fn criterion_5() -> Result<CriterionOutcome> {
    let mut count = 0usize;
    let mut failure = None;
    'outer: for r in RANK_GRID {
        let rv = ranks(r)?;
        for n in occupation_vectors(rv.ell(), GRID_ORDER) {
            for fp in enumerate_fixed_points(&rv, &n)? {
                count += 1;
                let f = fixed_point_index(&fp, &rv)?;
                let o = morse_index_oracle(&fp, &rv)?;
                if f != o {
                    failure = Some(format!("r={r:?} fp={:?}: formula {f}, weights {o}", fp.mus));
                    break 'outer;
                }
            }
        }
    }
    Ok(outcome(
        5,
        "Morse index formula = tangent weight count",
        failure,
        format!("{count} fixed points"),
    ))
}

pub fn criterion_6() -> Result<CriterionOutcome> {
    let rep = verify_box_counts(12, &[2, 3, 4, 5])?;
    let failure = rep
        .first_failure
        .as_ref()
        .map(|f| format!("{f:?}"));
    Ok(outcome(
        6,
        "box-count identities",
        failure,
        format!("{} (partition, ell, c) cases", rep.checked),
    ))
}

pub fn criterion_7() -> Result<CriterionOutcome> {
    let mut reports = Vec::new();
    for r in REINDEX_GRID {
        reports.extend(verify_reindexing(&ranks(r)?, GRID_ORDER)?);
    }
    let mut failure = first_failure(&reports);
    let vacuous = reindexing_factors(&ranks(&[1, 1])?)?;
    if vacuous.iter().any(|p| !p.factors().is_empty()) {
        failure = Some("ell = 2 products are not empty".into());
    }
    Ok(outcome(
        7,
        "pair-reindexing product identities",
        failure,
        format!("{} comparisons at order {GRID_ORDER}", reports.len()),
    ))
}

pub fn criterion_8() -> Result<CriterionOutcome> {
    let mut reports = Vec::new();
    for ell in 2..=4usize {
        for a in 0..ell as i64 {
            reports.push(verify_partition_identity(a, ell, 6)?);
        }
    }
    Ok(outcome(
        8,
        "colored partition sum = product",
        first_failure(&reports),
        format!("{} (a, ell) pairs at degree 6", reports.len()),
    ))
}

pub fn criterion_9() -> Result<CriterionOutcome> {
    let mut components = 0usize;
    let mut failure = None;
    let count = |t: &[RepRingElement]| t.iter().map(RepRingElement::monomial_count).sum::<i64>();
    'outer: for r in RANK_GRID {
        let rv = ranks(r)?;
        for n in occupation_vectors(rv.ell(), GRID_ORDER) {
            components += 1;
            let fps = enumerate_fixed_points(&rv, &n)?;
            let mut inv_dim = None;
            for fp in &fps {
                let t = tangent_character(fp, &rv)?;
                let raw = count(&t);
                let inv = count(&invariant_part(&t));
                if raw != 2 * rv.total() as i64 * n.total() as i64 {
                    failure = Some(format!("r={r:?} fp={:?}: raw count {raw}", fp.mus));
                    break 'outer;
                }
                if *inv_dim.get_or_insert(inv) != inv {
                    failure = Some(format!("r={r:?} n={:?}: invariant counts differ", n.counts()));
                    break 'outer;
                }
            }
            let p = poincare_polynomial(&rv, &n)?;
            if !p.only_even_nonnegative_powers() || p.at_one() != fps.len() as u64 {
                failure = Some(format!("r={r:?} n={:?}: Poincare polynomial {p}", n.counts()));
                break 'outer;
            }
        }
    }
    Ok(outcome(
        9,
        "fixed-point geometry invariants",
        failure,
        format!("{components} components"),
    ))
}

/// All block data with at most `max_blocks` blocks, `m_i <= max_m`, `s_L <= max_s`.
pub fn all_block_data(max_blocks: usize, max_m: u32, max_s: u32) -> Vec<BlockData> {
    fn subsets(from: u32, max_s: u32, k: usize) -> Vec<Vec<u32>> {
        if k == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in from..=max_s {
            for mut rest in subsets(first + 1, max_s, k - 1) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }
    fn tuples(len: usize, max_m: u32) -> Vec<Vec<u32>> {
        (0..len).fold(vec![vec![]], |acc, _| {
            acc.into_iter()
                .flat_map(|t| {
                    (1..=max_m).map(move |m| {
                        let mut t = t.clone();
                        t.push(m);
                        t
                    })
                })
                .collect()
        })
    }
    let mut out = Vec::new();
    for l in 1..=max_blocks {
        for s in subsets(1, max_s, l) {
            for m in tuples(l, max_m) {
                out.push(BlockData::new(m, s.clone()).expect("generated data is valid"));
            }
        }
    }
    out
}

pub fn criterion_10() -> Result<CriterionOutcome> {
    let all = all_block_data(4, 3, 6);
    let mut failure = None;
    for b in &all {
        let total = total_dimension(&spin_decomposition(b));
        if total != (b.n() as u64).pow(2) {
            failure = Some(format!("{b:?}: spin total {total}"));
            break;
        }
        if !free_field_counts(b).pairs.iter().all(PairFields::difference_holds) {
            failure = Some(format!("{b:?}: fermion-count difference"));
            break;
        }
    }
    let reports = [verify_verma(2, 4, 4)?, verify_verma(3, 4, 4)?];
    let failure = failure.or_else(|| first_failure(&reports));
    Ok(outcome(
        10,
        "character bookkeeping and Verma denominator",
        failure,
        format!("{} block data, Verma N=2,3 to z^4", all.len()),
    ))
}

pub type CriterionFn = fn() -> Result<CriterionOutcome>;

pub const CRITERIA: [CriterionFn; 10] = [
    criterion_1,
    criterion_2,
    criterion_3,
    criterion_4,
    criterion_5,
    criterion_6,
    criterion_7,
    criterion_8,
    criterion_9,
    criterion_10,
];

pub fn run_all() -> Result<Vec<CriterionOutcome>> {
    CRITERIA.iter().map(|c| c()).collect()
}
