//! Gluing copies of block(m) at `a` and `b`: minimal (a,b)-separators of the
//! glued graph are exactly one separator per copy, so counts multiply.

use msep::families::{block, glued, A, B};
use msep::separators::enumerate_minimal_ab_separators;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let single = enumerate_minimal_ab_separators(&block(2)?, A, B)?.count();
    for ell in 1..=3u32 {
        let g = glued(ell as usize, 2)?;
        let count = enumerate_minimal_ab_separators(&g, A, B)?.count();
        println!(
            "glued({ell}, 2): n={} separators={count} single^ell={}",
            g.n(),
            single.pow(ell)
        );
    }
    Ok(())
}
