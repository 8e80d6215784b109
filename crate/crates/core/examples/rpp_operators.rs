//! The operators e_i and f_i on reverse plane partitions, and how they
//! track E_i and F_i on reading words.
//!
//! `cargo run --example rpp_operators`

use rpp_lr::rpp_crystal::{column_pairing, lower_unresolved, restrict};
use rpp_lr::{ceq, height_vector, lower_rpp, lower_word, raise_rpp, reading_word, rpp_weight, Filling, SkewShape};

fn show(label: &str, t: &Filling) {
    println!(
        "{label}\n{t}\n  word {}  weight {:?}  heights {:?}  ceq {:?}\n",
        reading_word(t).compact(),
        rpp_weight(t),
        height_vector(t),
        ceq(t)
    );
}

fn main() -> rpp_lr::Result<()> {
    let shape: SkewShape = "3,3,2/1".parse()?;
    let t = Filling::new(shape, 3, vec![vec![1, 1], vec![1, 1, 2], vec![2, 3]])?;
    show("T", &t);

    let p = column_pairing(&restrict(&t, 1));
    println!("i = 1 column pairing: matched {:?}, unmatched 1-columns {:?}\n", p.matched, p.unmatched_closes);

    if let Some(raw) = lower_unresolved(&t, 1)? {
        show("flipped column, before resolution", &raw);
    }
    let mut cur = Some(t.clone());
    let mut k = 0;
    while let Some(u) = cur {
        if k > 0 {
            show(&format!("f_1^{k}(T)"), &u);
        }
        let next = lower_rpp(&u, 1)?;
        assert_eq!(next.as_ref().map(reading_word), lower_word(&reading_word(&u), 1));
        cur = next;
        k += 1;
    }
    println!("f_1^{k}(T) = 0");

    let up = raise_rpp(&t, 2)?;
    println!("e_2(T) = {}", up.map_or("0".into(), |u| u.to_json_string()));
    Ok(())
}
