//! Exhaustive maximum of the minimal separator count over all labeled graphs.

use msep::format::write_graph;
use msep::separators::max_sep_exhaustive;
use msep::RHO;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let max_n: usize = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(6);
    for n in 2..=max_n {
        let best = max_sep_exhaustive(n)?;
        println!(
            "sep({n}) = {} (rho^n * n = {:.1})",
            best.count,
            RHO.powi(n as i32) * n as f64
        );
        if n == max_n {
            print!("{}", write_graph(&best.witness));
        }
    }
    Ok(())
}
