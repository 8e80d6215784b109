//! Bracket matching and the raising/lowering operators on words.
//!
//! `cargo run --example word_crystal`

use rpp_lr::word_crystal::{is_lattice, lower_word, pairing, raise_word, word_weight};
use rpp_lr::Word;

fn main() {
    let s = Word::new(vec![1, 2, 2, 3, 1, 3, 2, 2, 2, 1, 3, 1, 2]);
    let p = pairing(s.letters(), 1);
    println!("s = {}  weight {:?}", s.compact(), word_weight(&s, 3));
    println!("i = 1: matched pairs {:?}", p.matched);
    println!("       unmatched 2s at {:?}, unmatched 1s at {:?}", p.unmatched_opens, p.unmatched_closes);

    // Raise until the word is killed.
    let mut cur = Some(s.clone());
    let mut k = 0;
    while let Some(w) = cur {
        println!("E_1^{k}(s) = {}", w.compact());
        cur = raise_word(&w, 1);
        k += 1;
    }
    println!("E_1^{k}(s) = 0");

    let f = lower_word(&s, 1).expect("s has an unmatched 1");
    println!("F_1(s)   = {}", f.compact());
    assert_eq!(raise_word(&f, 1), Some(s.clone()));

    for w in [Word::new(vec![3, 2, 1, 2, 1, 1]), s] {
        let killed = (1..3).all(|i| raise_word(&w, i).is_none());
        println!("{}: lattice {}, killed by every E_i {}", w.compact(), is_lattice(&w), killed);
    }
}
