//! Counting, classifying and measuring the coassociative 4-folds of each
//! catalog example.

use kummer_coassoc::cli::{catalog, classify_stratum};
use kummer_coassoc::coassoc::{model_volume, report};

fn main() -> kummer_coassoc::error::Result<()> {
    for entry in catalog()?.examples {
        println!("{} ({})", entry.id, entry.title);
        for st in &entry.strata {
            let data = st.data()?;
            let out = classify_stratum(&data)?;
            println!(
                "  group {:<7} {} spheres, {} distinct submanifolds, {} embedded",
                st.group,
                data.len(),
                out.classes.len(),
                out.distinct_embedded
            );
            for (d, (status, degree)) in data.iter().zip(&out.statuses) {
                let r = report(d)?;
                println!(
                    "    {:?} degree {:?}, vol(1) = {:.4}, vol(0.01) = {:.4e}, family dim {}",
                    status,
                    degree,
                    model_volume(d, 1.0)?,
                    model_volume(d, 0.01)?,
                    r.family_dimension
                );
            }
        }
    }
    Ok(())
}
