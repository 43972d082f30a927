//! Potential maximal cliques two ways, and the count against sep(G)/n.

use msep::families::melon;
use msep::triangulation::{check_corollary, minimal_triangulations, pmcs_characterized, pmcs_definitional};
use msep::Graph;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (name, g) in [
        ("cycle(4)", Graph::cycle(4)),
        ("cycle(6)", Graph::cycle(6)),
        ("melon(2)", melon(2)?),
    ] {
        let defs = pmcs_definitional(&g)?;
        let chars = pmcs_characterized(&g, 22)?;
        let report = check_corollary(&g, 22)?;
        println!(
            "{name}: {} minimal triangulations, pmc={} (filters agree: {}), sep={}, pmc*n >= sep: {}",
            minimal_triangulations(&g)?.len(),
            report.pmc_count,
            defs.members == chars.members,
            report.sep_count,
            report.corollary_holds
        );
    }
    Ok(())
}
