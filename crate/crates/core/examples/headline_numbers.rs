//! Exact lower-bound formula values and the best layer count.

use msep::cli::scientific;
use msep::families::{best_layer_count, growth_base, lb_count};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for m in [2, 3, 12, 24, 25, 48] {
        let lb = lb_count(m);
        println!(
            "m={m:2}: lb_count={lb} ({}) base>={}",
            scientific(&lb, 5),
            growth_base(m)?
        );
    }
    let (best, base) = best_layer_count(200)?;
    println!("best m in 2..=200: {best}, base >= {base}");
    println!("exceeds 3^(1/3): {}", base.exceeds_root(3, 3));
    Ok(())
}
