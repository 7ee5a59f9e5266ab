//! Colored Young diagrams and the box-count identities behind the Morse index.
use laumon::partitions::{colored_counts, count_n1_geq, count_n1_gt, count_n2_geq, enumerate_partitions, verify_box_counts};

fn main() -> laumon::Result<()> {
    let ell = 3;
    for mu in enumerate_partitions(4) {
        let counts = colored_counts(&mu, 0, ell)?;
        let n: Vec<_> = (0..ell as i64)
            .map(|c| {
                Ok((
                    count_n1_geq(&mu, c, ell)?,
                    count_n1_gt(&mu, c, ell)?,
                    count_n2_geq(&mu, c, ell)?,
                ))
            })
            .collect::<laumon::Result<_>>()?;
        println!("{:<12} colors {:?}  (N1>=0, N1>0, N2>=0) by residue {:?}", format!("{:?}", mu.rows()), counts, n);
    }
    let report = verify_box_counts(10, &[2, 3, 4])?;
    println!("identities hold on {} cases: {}", report.checked, report.equal);
    Ok(())
}
