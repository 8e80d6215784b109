//! The t-refinement of g by the ceq statistic.
//!
//! `cargo run --example refined -- 2,2,2 3`

use rpp_lr::symfunc::{g_refined, h_coeffs_refined, t_var_count};
use rpp_lr::SkewShape;

fn main() -> rpp_lr::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let shape: SkewShape = args.first().map_or("2,2,2", String::as_str).parse()?;
    let m: u32 = args.get(1).and_then(|a| a.parse().ok()).unwrap_or(3);

    let t_vars = t_var_count(&shape);
    let lhs = g_refined(&shape, m);
    let coeffs = h_coeffs_refined(&shape, m);
    println!("{shape}, m = {m}, t variables: {t_vars}");
    println!("{coeffs}\n");
    println!("marginal:\n{}\n", coeffs.marginal());
    println!("refined identity holds: {}", coeffs.to_poly(m, t_vars) == lhs);
    println!("t = 1 recovers g: {}", lhs.t_to_one() == rpp_lr::symfunc::g_poly(&shape, m));
    Ok(())
}
