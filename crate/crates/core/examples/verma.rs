//! Denominator of an affine Verma module, compared with the single-block
//! character in Verma coordinates.
use laumon::characters::{affine_verma_denominator, verify_verma};

fn main() -> laumon::Result<()> {
    println!("{}", affine_verma_denominator(2, 2, 2)?);
    for n in 2..=3 {
        let rep = verify_verma(n, 3, 4)?;
        println!("N = {n}: {}", rep.equal);
    }
    Ok(())
}
