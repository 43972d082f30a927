//! Melon graphs: each path from `a` to `b` contributes an independent choice
//! of one inner vertex, so melon(k) has exactly 3^k minimal (a,b)-separators.

use msep::families::{melon, A, B};
use msep::separators::enumerate_minimal_ab_separators;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for k in 1..=5u32 {
        let g = melon(k as usize)?;
        let report = enumerate_minimal_ab_separators(&g, A, B)?;
        println!(
            "melon({k}): n={:2} separators={:4} expected={:4} leaves={}",
            g.n(),
            report.count(),
            3u64.pow(k),
            report.leaf_count
        );
    }
    Ok(())
}
