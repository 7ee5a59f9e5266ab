//! Auxiliary product identities: the u-variable form, the pair re-indexing
//! and the colored partition sum.
use laumon::closed_form::{verify_reindexing, verify_partition_identity, verify_u_form};
use laumon::localization::RankVector;

fn main() -> laumon::Result<()> {
    let r = RankVector::new(vec![2, 2, 1])?;
    let mut reports = vec![verify_u_form(&r, 4)?];
    reports.extend(verify_reindexing(&r, 4)?);
    for a in 0..3 {
        reports.push(verify_partition_identity(a, 3, 6)?);
    }
    for rep in reports {
        println!("{:<5} {} (order {})", rep.equal, rep.identity, rep.truncation);
    }
    Ok(())
}
