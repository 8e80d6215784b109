//! Reading word and height vector of a reverse plane partition, and the
//! reconstruction of the tableau from the pair.
//!
//! `cargo run --example reading_word`

use rpp_lr::fixtures::seven_row_rpp;
use rpp_lr::{ceq, height_vector, reading_word, reconstruct, rpp_weight};

fn main() -> rpp_lr::Result<()> {
    let t = seven_row_rpp();
    println!("shape {}\n{t}\n", t.shape());

    let word = reading_word(&t);
    let heights = height_vector(&t);
    println!("reading word  {}", word.compact());
    println!("heights       {heights:?}");
    println!("column weight {:?}", rpp_weight(&t));
    println!("ceq           {:?}", ceq(&t));

    let back = reconstruct(t.shape(), &word, &heights, t.max_entry())?;
    assert_eq!(back, t);
    println!("\nreconstructed:\n{back}");

    // Heights that no tableau produces.
    let mut bad = heights.clone();
    bad.swap(0, 10);
    match reconstruct(t.shape(), &word, &bad, t.max_entry()) {
        Ok(_) => println!("unexpected preimage"),
        Err(e) => println!("\nswapped heights: {e}"),
    }
    Ok(())
}
