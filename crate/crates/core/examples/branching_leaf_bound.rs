//! Balanced branching: leaves per root stay below rho^n.

use msep::families::{block, melon};
use msep::separators::{enumerate_minimal_separators, Mode};
use msep::{Graph, RHO};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let graphs = [
        ("cycle(8)", Graph::cycle(8)),
        ("path(10)", Graph::path(10)),
        ("melon(3)", melon(3)?),
        ("block(2)", block(2)?),
    ];
    for (name, g) in &graphs {
        let r = enumerate_minimal_separators(g, Mode::Balanced);
        let all = enumerate_minimal_separators(g, Mode::All);
        println!(
            "{name:9} n={:2} separators={:3} max leaves/root={:4} rho^n={:8.1} (all-mode leaves {})",
            g.n(),
            r.count(),
            r.max_root_leaves(),
            RHO.powi(g.n() as i32),
            all.leaf_count
        );
    }
    Ok(())
}
