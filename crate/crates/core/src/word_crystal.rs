//! The crystal on words: bracket matching, the raising and lowering
//! operators `E_i` / `F_i`, weights and lattice words.
//!
//! A letter `i + 1` is an opening bracket and a letter `i` a closing one.
//! Opens are matched with closes to their right; other letters are ignored.

use crate::reading::Word;

/// Bracket structure of a word for one index `i`. Positions are 0-based
/// indices into the word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pairing {
    pub index: u32,
    /// `(open, close)` with `open < close`.
    pub matched: Vec<(usize, usize)>,
    /// Unmatched `i + 1`s, left to right.
    pub unmatched_opens: Vec<usize>,
    /// Unmatched `i`s, left to right. All of them precede every unmatched open.
    pub unmatched_closes: Vec<usize>,
}

impl Pairing {
    pub fn is_matched(&self, pos: usize) -> bool {
        self.matched.iter().any(|&(o, c)| o == pos || c == pos)
    }
}

/// Cancels adjacent `i+1, i` pairs until none remain, as a single stack pass.
pub fn pairing(s: &[u32], i: u32) -> Pairing {
    let mut stack = Vec::new();
    let mut matched = Vec::new();
    let mut unmatched_closes = Vec::new();
    for (pos, &letter) in s.iter().enumerate() {
        if letter == i + 1 {
            stack.push(pos);
        } else if letter == i {
            match stack.pop() {
                Some(open) => matched.push((open, pos)),
                None => unmatched_closes.push(pos),
            }
        }
    }
    Pairing {
        index: i,
        matched,
        unmatched_opens: stack,
        unmatched_closes,
    }
}

/// `E_i`: the leftmost unmatched `i + 1` becomes `i`. `None` is the zero result.
pub fn raise_word(s: &Word, i: u32) -> Option<Word> {
    let pos = *pairing(s.letters(), i).unmatched_opens.first()?;
    let mut out = s.clone();
    out.0[pos] = i;
    Some(out)
}

/// `F_i`: the rightmost unmatched `i` becomes `i + 1`.
pub fn lower_word(s: &Word, i: u32) -> Option<Word> {
    let pos = *pairing(s.letters(), i).unmatched_closes.last()?;
    let mut out = s.clone();
    out.0[pos] = i + 1;
    Some(out)
}

/// Letter counts `(w_1, .., w_m)`. Letters above `m` are not counted.
pub fn word_weight(s: &Word, m: u32) -> Vec<u32> {
    let mut w = vec![0; m as usize];
    for &l in s.letters() {
        if (1..=m).contains(&l) {
            w[l as usize - 1] += 1;
        }
    }
    w
}

/// Every suffix has at least as many `i`s as `(i+1)`s, for every `i`.
pub fn is_lattice(s: &Word) -> bool {
    let top = s.letters().iter().copied().max().unwrap_or(0) as usize;
    let mut counts = vec![0i64; top + 2];
    for &l in s.letters().iter().rev() {
        let l = l as usize;
        counts[l] += 1;
        if l >= 2 && counts[l] > counts[l - 1] {
            return false;
        }
    }
    true
}

/// Every word of length `len` over `1..=m`, lexicographically.
pub fn all_words(len: usize, m: u32) -> impl Iterator<Item = Word> {
    let total = (m as u64).pow(len as u32);
    (0..total).map(move |mut code| {
        let mut letters = vec![0u32; len];
        for k in (0..len).rev() {
            letters[k] = (code % m as u64) as u32 + 1;
            code /= m as u64;
        }
        Word(letters)
    })
}
