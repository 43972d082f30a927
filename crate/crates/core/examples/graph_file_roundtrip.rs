//! Writing a labeled graph in the text format and reading it back.

use msep::families::glued;
use msep::format::{parse_graph, read_graph_file, write_graph, write_graph_file};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = glued(2, 2)?;
    let text = write_graph(&g);
    print!("{text}");
    assert_eq!(parse_graph(&text)?, g);

    let path = std::env::temp_dir().join("msep-roundtrip.txt");
    write_graph_file(&path, &g)?;
    let back = read_graph_file(&path)?;
    std::fs::remove_file(&path)?;
    println!("# round trip through {}: equal = {}", path.display(), back == g);
    Ok(())
}
