//! The {i,i+1} restriction of a tableau, benign fillings and the descent
//! resolution that turns them back into reverse plane partitions.
//!
//! `cargo run --example descent_resolution`

use rpp_lr::fixtures::{benign_fixture_a, benign_fixture_b, resolution_21, resolution_2m, resolution_m1};
use rpp_lr::rpp_crystal::{find_descents, is_benign, resolve_all, resolve_step, restrict, step_bound};
use rpp_lr::ResolveOrder;

fn main() -> rpp_lr::Result<()> {
    let a = benign_fixture_a();
    println!("(a)\n{a}\nbenign: {}\n", is_benign(&restrict(&a, 1)));

    let b = benign_fixture_b();
    let r = restrict(&b, 1);
    println!("(b)\n{b}\nbenign: {}, RPP: {}", is_benign(&r), b.is_rpp());
    for (c, col) in r.columns.iter().enumerate() {
        println!("  column {}: {:?}, border {:?}", c + 1, col.class, col.border);
    }

    let res = resolve_all(&b, 1, ResolveOrder::Leftmost)?;
    for (before, d) in &res.steps {
        println!("\n{before}\nresolve {} at column {}", d.kind, d.column);
    }
    println!("\n{}\nRPP after {} steps (bound {})\n", res.result, res.steps.len(), step_bound(b.shape().num_cols()));

    for (before, after) in [resolution_m1(), resolution_2m(), resolution_21()] {
        let d = find_descents(&before, 1)?[0];
        let got = resolve_step(&before, 1, d)?;
        assert_eq!(got, after);
        println!("{} step:\n{before}\n  ->\n{got}\n", d.kind);
    }
    Ok(())
}
