//! Reading words, height vectors, and reconstruction of a reverse plane
//! partition from the pair.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::shapes::{Cell, SkewShape};
use crate::tableaux::Filling;

/// A finite word over `1..=m`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<u32>);

impl Word {
    pub fn new(letters: impl Into<Vec<u32>>) -> Self {
        Word(letters.into())
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Digits run together when every letter is a single digit, else comma form.
    pub fn compact(&self) -> String {
        if self.0.iter().all(|&l| l <= 9) {
            self.0.iter().map(u32::to_string).collect()
        } else {
            self.to_string()
        }
    }
}

/// Comma-separated letters.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::shapes::join(&self.0))
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_list(s).map(Word)
    }
}

pub(crate) fn parse_list(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<u32>()
                .map_err(|e| Error::InvalidArgument(format!("{x:?}: {e}")))
        })
        .collect()
}

/// Row indices of the letters of the reading word.
pub type HeightVector = Vec<usize>;

/// Cells that contribute to the reading word, in reading order: an entry is
/// skipped when the cell directly below holds the same value.
pub fn surviving_cells(t: &Filling) -> Vec<Cell> {
    t.shape()
        .reading_cells()
        .filter(|&c| {
            let v = t.get(c);
            t.at(c.row + 1, c.col) != v
        })
        .collect()
}

pub fn reading_word(t: &Filling) -> Word {
    Word(surviving_cells(t).into_iter().map(|c| t.get(c).unwrap()).collect())
}

pub fn height_vector(t: &Filling) -> HeightVector {
    surviving_cells(t).into_iter().map(|c| c.row).collect()
}

/// Rebuilds the unique reverse plane partition of `shape` with the given
/// reading word and height vector, if one exists.
///
/// Cells are filled in reading order. With `a` the value below (or +∞) and
/// `c` the value to the left (or 0), the next letter `r_j` is placed when
/// the cell is in row `h_j` and `c <= r_j < a`; otherwise the cell copies
/// `a`. The result is checked against the input before being returned.
pub fn reconstruct(shape: &SkewShape, word: &Word, heights: &[usize], max_entry: u32) -> Result<Filling> {
    let fail = |why: String| Err(Error::ReconstructionFailed(why));
    if word.len() != heights.len() {
        return fail(format!("word has {} letters but {} heights", word.len(), heights.len()));
    }
    if let Some(&l) = word.letters().iter().find(|&&l| l == 0 || l > max_entry) {
        return fail(format!("letter {l} outside 1..={max_entry}"));
    }

    // None stands for an unfilled cell.
    let mut grid: Vec<Vec<Option<u32>>> = (1..=shape.num_rows()).map(|r| vec![None; shape.row_len(r)]).collect();
    let value = |grid: &Vec<Vec<Option<u32>>>, cell: Cell| -> Option<u32> {
        if !shape.contains(cell) {
            return None;
        }
        grid[cell.row - 1][cell.col - shape.row_start(cell.row)]
    };

    let mut j = 0;
    for cell in shape.reading_cells() {
        // `None` below means +∞
        let below = value(&grid, Cell { row: cell.row + 1, col: cell.col });
        let left = value(&grid, Cell { row: cell.row, col: cell.col - 1 }).unwrap_or(0);
        let place = j < word.len()
            && heights[j] == cell.row
            && left <= word.0[j]
            && below.is_none_or(|a| word.0[j] < a);
        let entry = if place {
            j += 1;
            word.0[j - 1]
        } else {
            match below {
                Some(a) => a,
                None => return fail(format!("cell ({}, {}) would copy +∞", cell.row, cell.col)),
            }
        };
        grid[cell.row - 1][cell.col - shape.row_start(cell.row)] = Some(entry);
    }
    if j != word.len() {
        return fail(format!("only {j} of {} letters were placed", word.len()));
    }

    let rows = grid.into_iter().map(|row| row.into_iter().map(Option::unwrap).collect()).collect();
    let t = Filling::new(shape.clone(), max_entry, rows).map_err(|e| Error::ReconstructionFailed(e.to_string()))?;
    if !t.is_rpp() {
        return fail("result is not a reverse plane partition".into());
    }
    if reading_word(&t) != *word || height_vector(&t) != heights {
        return fail("result does not reproduce the word and heights".into());
    }
    Ok(t)
}
