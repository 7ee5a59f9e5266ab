//! Refined vacuum characters for block data (m, s) and the factorisation
//! of the generating function through them.
use laumon::characters::{b_character, free_field_counts, spin_decomposition, verify_wz, w_refined_verma, BlockData};

fn main() -> laumon::Result<()> {
    let b = BlockData::new(vec![1, 1], vec![1, 2])?;
    println!("W = {}", w_refined_verma(&b, 2)?);
    println!("B_12 = {}", b_character(&b, 1, 2, 2)?);
    for rep in verify_wz(&b, 4)? {
        println!("{}: {}", rep.identity, rep.equal);
    }
    for e in spin_decomposition(&b) {
        println!("blocks ({}, {}): dimension {} with multiplicity {}", e.i, e.j, e.d, e.mult);
    }
    println!("{}", serde_json::to_string_pretty(&free_field_counts(&b))?);
    Ok(())
}
