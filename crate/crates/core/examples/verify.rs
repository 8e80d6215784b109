//! Running the exhaustive property suites from code.
//!
//! `cargo run --release --example verify -- 5`

use rpp_lr::verify::{run_all, Config};

fn main() {
    let max_cells = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(5);
    let cfg = Config { max_cells, ..Config::default() };
    let mut ok = true;
    for report in run_all(&cfg) {
        println!("{report}");
        ok &= report.passed();
    }
    std::process::exit(if ok { 0 } else { 1 });
}
