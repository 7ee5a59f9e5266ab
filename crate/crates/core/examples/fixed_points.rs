//! Torus fixed points of one component, their tangent weights and Morse indices.
use laumon::localization::{
    enumerate_fixed_points, fixed_point_index, invariant_part, poincare_polynomial, tangent_character,
    OccupationVector, RankVector,
};

fn main() -> laumon::Result<()> {
    let r = RankVector::new(vec![2, 1])?;
    let n = OccupationVector::new(vec![1, 1]);
    for fp in enumerate_fixed_points(&r, &n)? {
        let rows: Vec<_> = fp.mus.iter().map(|m| m.rows().to_vec()).collect();
        println!("{rows:?}  index {}", fixed_point_index(&fp, &r)?);
        for e in invariant_part(&tangent_character(&fp, &r)?) {
            println!("    {e}");
        }
    }
    println!("Poincare polynomial: {}", poincare_polynomial(&r, &n)?);
    Ok(())
}
