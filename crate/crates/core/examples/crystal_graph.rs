//! The crystal graph on all reverse plane partitions of a shape, written
//! as Graphviz DOT.
//!
//! `cargo run --example crystal_graph -- 2,2 2 > crystal.dot && dot -Tsvg crystal.dot`

use rpp_lr::symfunc::h_coeffs;
use rpp_lr::{crystal_graph, reading_word, SkewShape};

fn main() -> rpp_lr::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let shape: SkewShape = args.first().map_or("2,2", String::as_str).parse()?;
    let m: u32 = args.get(1).and_then(|a| a.parse().ok()).unwrap_or(2);

    let g = crystal_graph(&shape, m)?;
    eprintln!("{} vertices, {} edges; {}", g.vertices.len(), g.edges.len(), g.summary());
    for c in &g.components {
        let top = &g.vertices[c.highest];
        eprintln!("  s_{} from highest word {}", c.weight, reading_word(top).compact());
    }
    eprintln!("lattice count:\n{}", h_coeffs(&shape, m));
    print!("{}", g.to_dot());
    Ok(())
}
