//! Layer families of block(m): fix one layer as the sacrificed one and pick
//! one of three vertices in every other column.
//!
//! For two layers every product member is a minimal (a,b)-separator. From
//! three layers on, members that zigzag between the top and bottom rows leave
//! a path from `a` to `b`; this example prints how many survive.

use msep::families::{block, layer_family, lb_count, A, B};
use msep::separators::enumerate_minimal_ab_separators;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let max_m: usize = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(3);
    for m in 2..=max_m {
        let g = block(m)?;
        for j in 1..=m {
            let fam = layer_family(&g, j)?;
            println!(
                "block({m}) layer {j}: {} candidates, {} minimal (a,b)-separators, {} rejected",
                fam.candidates(),
                fam.separators.len(),
                fam.rejected.len()
            );
        }
        let total = enumerate_minimal_ab_separators(&g, A, B)?.count();
        println!(
            "block({m}): all minimal (a,b)-separators = {total}, m*9^(m-1) = {}",
            lb_count(m)
        );
    }
    Ok(())
}
