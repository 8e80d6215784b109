//! Counting reverse plane partitions, semistandard tableaux and elegant
//! fillings.
//!
//! `cargo run --example enumerate -- 3,2/1 3`

use rpp_lr::symfunc::elegant_count;
use rpp_lr::{enumerate_elegant, enumerate_rpp, enumerate_ssyt, SkewShape};

fn main() -> rpp_lr::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let shape: SkewShape = args.first().map_or("3,2/1", String::as_str).parse()?;
    let m: u32 = args.get(1).and_then(|a| a.parse().ok()).unwrap_or(3);

    let rpps: Vec<_> = enumerate_rpp(&shape, m).collect();
    let ssyt = enumerate_ssyt(&shape, m).count();
    println!("{shape} with entries in 1..={m}: {} RPPs, {ssyt} SSYT", rpps.len());
    for t in rpps.iter().take(3) {
        println!("{t}\n");
    }

    let outer = shape.outer();
    println!("elegant fillings of {outer}/ν:");
    for nu in outer.subpartitions() {
        let n = enumerate_elegant(outer, &nu)?.count();
        assert_eq!(n as u64, elegant_count(outer, &nu));
        if n > 0 {
            println!("  ν = {nu}: {n}");
        }
    }
    Ok(())
}
