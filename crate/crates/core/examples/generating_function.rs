//! The generating function of Poincare polynomials, by fixed points and in
//! product form.
use laumon::closed_form::{theorem_z, theorem_z_factors, verify_theorem};
use laumon::localization::{brute_force_z, RankVector};

fn main() -> laumon::Result<()> {
    let r = RankVector::new(vec![1, 1])?;
    println!("{}", theorem_z_factors(&r)?);
    let closed = theorem_z(&r, 3)?;
    println!("Z = {closed}");
    assert_eq!(closed, brute_force_z(&r, 3)?);

    let r = RankVector::new(vec![2, 1, 1])?;
    let report = verify_theorem(&r, 4)?;
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(())
}
