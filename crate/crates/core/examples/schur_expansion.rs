//! Expanding g_{λ/μ} in Schur polynomials and comparing with the count of
//! reverse plane partitions whose reading word is a lattice word.
//!
//! `cargo run --example schur_expansion -- 3,2,1/1 3`

use rpp_lr::symfunc::{expand_in_schur, g_poly, h_coeffs, lr_classical, skew_schur};
use rpp_lr::SkewShape;

fn main() -> rpp_lr::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let shape: SkewShape = args.first().map_or("3,2,1/1", String::as_str).parse()?;
    let m: u32 = args.get(1).and_then(|a| a.parse().ok()).unwrap_or(3);

    let g = g_poly(&shape, m);
    println!("g_{shape}(x1..x{m}) has {} terms", g.len());

    let expanded = expand_in_schur(&g, m)?;
    let counted = h_coeffs(&shape, m);
    println!("Schur expansion:\n{expanded}\n");
    println!("lattice count agrees: {}", expanded == counted);

    // Only the top degree is seen by the classical rule.
    let top = g.homogeneous_part(shape.size() as u32);
    assert_eq!(top, skew_schur(&shape, m));
    println!("top degree, LR coefficients:\n{}", lr_classical(&shape).truncate_rows(m as usize));
    Ok(())
}
