//! Hand-checked tableaux and words used by the tests, the examples and
//! the verification suites.

use crate::reading::Word;
use crate::shapes::SkewShape;
use crate::tableaux::Filling;

fn filling(shape: &str, max_entry: u32, rows: &[&[u32]]) -> Filling {
    let shape: SkewShape = shape.parse().expect("fixture shape");
    Filling::new(shape, max_entry, rows.iter().map(|r| r.to_vec()).collect()).expect("fixture filling")
}

/// A reverse plane partition of shape `(4,4,4,4,3,3,2)/(2,1)` with reading
/// word `34253134112` and height vector `(7,7,6,6,5,4,4,4,3,3,1)`.
pub fn seven_row_rpp() -> Filling {
    filling(
        "4,4,4,4,3,3,2/2,1",
        5,
        &[&[1, 2], &[1, 1, 4], &[1, 1, 1, 4], &[1, 3, 3, 4], &[2, 3, 5], &[2, 4, 5], &[3, 4]],
    )
}

/// Three `{1,2}` fillings of `(3,3,3,3,1)/(2)`: column 1 spans rows 2..5,
/// column 2 rows 2..4, column 3 rows 1..4.
///
/// (a) has mixed columns 1 and 3 with the lowest 1 of column 1 above the
/// lowest 1 of column 3, so it is not benign.
pub fn benign_fixture_a() -> Filling {
    filling("3,3,3,3,1/2", 2, &[&[1], &[1, 2, 1], &[2, 2, 1], &[2, 2, 2], &[2]])
}

/// (b) is benign but has a descent in rows 2 and 3.
pub fn benign_fixture_b() -> Filling {
    filling("3,3,3,3,1/2", 2, &[&[1], &[2, 1, 1], &[2, 1, 2], &[2, 2, 2], &[2]])
}

/// (c) is a reverse plane partition.
pub fn benign_fixture_c() -> Filling {
    filling("3,3,3,3,1/2", 2, &[&[2], &[1, 1, 2], &[1, 2, 2], &[2, 2, 2], &[2]])
}

/// Before/after pairs for the three resolution steps with `i = 1`, on the
/// shape `(2,2,2,2,2,1)/(1)`: column 1 spans rows 2..6, column 2 rows 1..5.
pub fn resolution_m1() -> (Filling, Filling) {
    (
        filling("2,2,2,2,2,1/1", 2, &[&[1], &[1, 1], &[1, 1], &[2, 1], &[2, 1], &[2]]),
        filling("2,2,2,2,2,1/1", 2, &[&[1], &[1, 1], &[1, 1], &[1, 2], &[1, 2], &[1]]),
    )
}

pub fn resolution_2m() -> (Filling, Filling) {
    (
        filling("2,2,2,2,2,1/1", 2, &[&[1], &[2, 1], &[2, 1], &[2, 2], &[2, 2], &[2]]),
        filling("2,2,2,2,2,1/1", 2, &[&[2], &[1, 2], &[1, 2], &[2, 2], &[2, 2], &[2]]),
    )
}

pub fn resolution_21() -> (Filling, Filling) {
    (
        filling("2,2,2,2,2,1/1", 2, &[&[1], &[2, 1], &[2, 1], &[2, 1], &[2, 1], &[2]]),
        filling("2,2,2,2,2,1/1", 2, &[&[2], &[1, 2], &[1, 2], &[1, 2], &[1, 2], &[1]]),
    )
}

/// A word over `{1,2,3}` together with its full `E_1` orbit.
pub fn raising_orbit() -> (Word, Vec<Word>) {
    let s = Word::new(vec![1, 2, 2, 3, 1, 3, 2, 2, 2, 1, 3, 1, 2]);
    let orbit = vec![
        Word::new(vec![1, 1, 2, 3, 1, 3, 2, 2, 2, 1, 3, 1, 2]),
        Word::new(vec![1, 1, 2, 3, 1, 3, 1, 2, 2, 1, 3, 1, 2]),
        Word::new(vec![1, 1, 2, 3, 1, 3, 1, 2, 2, 1, 3, 1, 1]),
    ];
    (s, orbit)
}
