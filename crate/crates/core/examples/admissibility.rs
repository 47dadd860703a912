//! Family membership for the six table rows and bounded enumeration.

use kummer_coassoc::lattices::ImVec;
use kummer_coassoc::resdata::{family_member, enumerate_admissible, table_row, Zeta};

fn main() -> kummer_coassoc::error::Result<()> {
    for row in 1..=6u8 {
        let tr = table_row(row)?;
        let members = enumerate_admissible(row, 2)?;
        println!("row {row}: Gamma = {}, {} members up to height 2", tr.gamma, members.len());
        if let Some(z) = members.first() {
            println!("  first: {}", serde_json::to_string(z).unwrap());
        }
    }

    let z = Zeta::gh_along_i(&[-1, 0, 1]);
    println!("\n[-i, 0, i] in rows 2, 3: {} {}", family_member(2, &z)?, family_member(3, &z)?);
    let off = Zeta::gh(vec![ImVec::from_ints(-1, 0, 0), ImVec::from_ints(0, 1, 0), ImVec::from_ints(1, -1, 0)]);
    println!("moving the middle point off the axis: {}", family_member(2, &off)?);
    Ok(())
}
