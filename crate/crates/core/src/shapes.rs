//! Partitions and skew shapes.
//!
//! Cells use matrix coordinates: `(row, col)`, both 1-based, row 1 at the
//! top. "Higher" on the page means a smaller row index.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition, stripping trailing zeros.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Part `r` (1-based), zero beyond the length.
    pub fn part(&self, r: usize) -> u32 {
        if r == 0 {
            return 0;
        }
        self.0.get(r - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|c| self.0.iter().filter(|&&p| p >= c).count() as u32)
            .collect();
        Partition(parts)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Interprets a weight vector as a partition if it is weakly decreasing.
    pub fn from_weight(weight: &[u32]) -> Option<Partition> {
        Partition::new(weight.to_vec()).ok()
    }

    /// Comma form used by the text formats, `"0"` for the empty partition.
    pub fn to_comma_string(&self) -> String {
        if self.0.is_empty() {
            return "0".to_string();
        }
        join(&self.0)
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of_size(n: u32) -> Vec<Partition> {
        fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions contained in `self` (including `self` and the empty one).
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn go(outer: &[u32], r: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            out.push(Partition(cur.clone()));
            if r >= outer.len() {
                return;
            }
            for p in 1..=outer[r].min(max) {
                cur.push(p);
                go(outer, r + 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        let max = self.0.first().copied().unwrap_or(0);
        go(&self.0, 0, max, &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.0))
    }
}

pub(crate) fn join(xs: &[u32]) -> String {
    xs.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

/// Orders partitions by size, then lexicographically, both descending.
pub fn graded_desc(a: &Partition, b: &Partition) -> std::cmp::Ordering {
    b.size().cmp(&a.size()).then_with(|| b.cmp(a))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

/// `outer / inner` with `inner ⊆ outer`. Disconnected shapes are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained {
                outer: outer.0.clone(),
                inner: inner.0.clone(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn num_rows(&self) -> usize {
        self.outer.len()
    }

    pub fn num_cols(&self) -> usize {
        self.outer.part(1) as usize
    }

    pub fn size(&self) -> usize {
        (self.outer.size() - self.inner.size()) as usize
    }

    /// Columns of row `r` are `row_start(r)..=row_end(r)`; empty when start > end.
    pub fn row_start(&self, r: usize) -> usize {
        self.inner.part(r) as usize + 1
    }

    pub fn row_end(&self, r: usize) -> usize {
        self.outer.part(r) as usize
    }

    pub fn row_len(&self, r: usize) -> usize {
        self.row_end(r) + 1 - self.row_start(r)
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1
            && cell.row <= self.num_rows()
            && cell.col >= self.row_start(cell.row)
            && cell.col <= self.row_end(cell.row)
    }

    /// Cells in row-major order (top row first, left to right).
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (1..=self.num_rows())
            .flat_map(move |row| (self.row_start(row)..=self.row_end(row)).map(move |col| Cell { row, col }))
    }

    /// Cells in reading order: bottom row first, left to right within a row.
    pub fn reading_cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (1..=self.num_rows())
            .rev()
            .flat_map(move |row| (self.row_start(row)..=self.row_end(row)).map(move |col| Cell { row, col }))
    }

    /// `(top, bottom)` rows of column `c`, or `None` if the column is empty.
    pub fn column_span(&self, c: usize) -> Option<(usize, usize)> {
        let top = self.inner.conjugate().part(c) as usize + 1;
        let bottom = self.outer.conjugate().part(c) as usize;
        (c >= 1 && top <= bottom).then_some((top, bottom))
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer.to_comma_string())
        } else {
            write!(f, "{}/{}", self.outer.to_comma_string(), self.inner.to_comma_string())
        }
    }
}

fn parse_parts(input: &str, text: &str) -> Result<Partition> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Partition::empty());
    }
    let parts = text
        .split(',')
        .map(|p| {
            p.trim().parse::<u32>().map_err(|e| Error::ShapeSyntax {
                input: input.to_string(),
                reason: format!("{p:?}: {e}"),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Partition::new(parts)
}

/// Parses `"4,4,3/2,1"`; the `/inner` part is optional.
impl FromStr for SkewShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut halves = s.split('/');
        let outer = parse_parts(s, halves.next().unwrap_or(""))?;
        let inner = match halves.next() {
            Some(text) => parse_parts(s, text)?,
            None => Partition::empty(),
        };
        if halves.next().is_some() {
            return Err(Error::ShapeSyntax {
                input: s.to_string(),
                reason: "more than one '/'".to_string(),
            });
        }
        SkewShape::new(outer, inner)
    }
}

/// Every skew shape `outer/inner` with `|outer| <= max_size`.
pub fn all_skew_shapes(max_size: u32) -> Vec<SkewShape> {
    (0..=max_size)
        .flat_map(Partition::all_of_size)
        .flat_map(|outer| {
            outer
                .subpartitions()
                .into_iter()
                .map(move |inner| SkewShape::new(outer.clone(), inner).expect("subpartition"))
        })
        .collect()
}
