//! Fillings of skew shapes and exhaustive enumerators for reverse plane
//! partitions, semistandard tableaux and elegant fillings.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{Cell, Partition, SkewShape};

/// A map from the cells of a skew shape to `1..=max_entry`.
///
/// Entries are stored row by row; `rows[r - 1]` holds the cells of row `r`
/// from left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Filling {
    shape: SkewShape,
    max_entry: u32,
    rows: Vec<Vec<u32>>,
}

impl Filling {
    pub fn new(shape: SkewShape, max_entry: u32, rows: Vec<Vec<u32>>) -> Result<Self> {
        if max_entry == 0 {
            return Err(Error::InvalidFilling("max_entry must be positive".into()));
        }
        if rows.len() != shape.num_rows() {
            return Err(Error::InvalidFilling(format!(
                "expected {} rows, got {}",
                shape.num_rows(),
                rows.len()
            )));
        }
        for (k, row) in rows.iter().enumerate() {
            let r = k + 1;
            if row.len() != shape.row_len(r) {
                return Err(Error::InvalidFilling(format!(
                    "row {r} needs {} entries, got {}",
                    shape.row_len(r),
                    row.len()
                )));
            }
            if let Some(&v) = row.iter().find(|&&v| v == 0 || v > max_entry) {
                return Err(Error::InvalidFilling(format!("entry {v} in row {r} is outside 1..={max_entry}")));
            }
        }
        Ok(Filling { shape, max_entry, rows })
    }

    /// Builds a filling from row-major entries.
    pub fn from_entries(shape: SkewShape, max_entry: u32, entries: &[u32]) -> Result<Self> {
        if entries.len() != shape.size() {
            return Err(Error::InvalidFilling(format!(
                "expected {} entries, got {}",
                shape.size(),
                entries.len()
            )));
        }
        let mut rows = Vec::with_capacity(shape.num_rows());
        let mut at = 0;
        for r in 1..=shape.num_rows() {
            let len = shape.row_len(r);
            rows.push(entries[at..at + len].to_vec());
            at += len;
        }
        Filling::new(shape, max_entry, rows)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn max_entry(&self) -> u32 {
        self.max_entry
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Row-major entry sequence.
    pub fn entries(&self) -> impl Iterator<Item = u32> + '_ {
        self.rows.iter().flatten().copied()
    }

    pub fn get(&self, cell: Cell) -> Option<u32> {
        if !self.shape.contains(cell) {
            return None;
        }
        Some(self.rows[cell.row - 1][cell.col - self.shape.row_start(cell.row)])
    }

    pub fn at(&self, row: usize, col: usize) -> Option<u32> {
        self.get(Cell { row, col })
    }

    /// Overwrites the entry of a cell of the shape. Panics outside the shape.
    pub(crate) fn set(&mut self, cell: Cell, value: u32) {
        let start = self.shape.row_start(cell.row);
        self.rows[cell.row - 1][cell.col - start] = value;
    }

    /// First cell breaking weak increase along rows or columns, described.
    pub fn rpp_violation(&self) -> Option<String> {
        self.shape.cells().find_map(|c| {
            let v = self.get(c).unwrap();
            if let Some(l) = self.at(c.row, c.col - 1).filter(|&l| l > v) {
                return Some(format!("row {} decreases at column {}: {l} > {v}", c.row, c.col));
            }
            if let Some(u) = self.at(c.row - 1, c.col).filter(|&u| u > v) {
                return Some(format!("column {} decreases at row {}: {u} > {v}", c.col, c.row));
            }
            None
        })
    }

    pub fn is_rpp(&self) -> bool {
        self.shape.cells().all(|c| {
            let v = self.get(c).unwrap();
            let left_ok = self.at(c.row, c.col - 1).is_none_or(|l| l <= v);
            let up_ok = self.at(c.row - 1, c.col).is_none_or(|u| u <= v);
            left_ok && up_ok
        })
    }

    pub fn is_ssyt(&self) -> bool {
        self.shape.cells().all(|c| {
            let v = self.get(c).unwrap();
            let left_ok = self.at(c.row, c.col - 1).is_none_or(|l| l <= v);
            let up_ok = self.at(c.row - 1, c.col).is_none_or(|u| u < v);
            left_ok && up_ok
        })
    }

    pub fn with_max_entry(mut self, max_entry: u32) -> Result<Self> {
        if max_entry == 0 || self.entries().any(|v| v > max_entry) {
            return Err(Error::InvalidFilling(format!("entries exceed {max_entry}")));
        }
        self.max_entry = max_entry;
        Ok(self)
    }

    pub fn to_json(&self) -> TableauJson {
        TableauJson {
            outer: self.shape.outer().parts().to_vec(),
            inner: self.shape.inner().parts().to_vec(),
            max_entry: self.max_entry,
            rows: self.rows.clone(),
        }
    }

    pub fn from_json(json: TableauJson) -> Result<Self> {
        let outer = Partition::new(json.outer)?;
        let inner = Partition::new(json.inner)?;
        Filling::new(SkewShape::new(outer, inner)?, json.max_entry, json.rows)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("tableau json")
    }

    pub fn parse_json(text: &str) -> Result<Self> {
        let json: TableauJson =
            serde_json::from_str(text).map_err(|e| Error::InvalidFilling(format!("bad tableau JSON: {e}")))?;
        Filling::from_json(json)
    }
}

/// Wire format: `{"outer":[..],"inner":[..],"max_entry":m,"rows":[[..],..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauJson {
    pub outer: Vec<u32>,
    #[serde(default)]
    pub inner: Vec<u32>,
    pub max_entry: u32,
    pub rows: Vec<Vec<u32>>,
}

/// Rows drawn with `.` for inner cells, one line per row.
impl fmt::Display for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.max_entry > 9;
        for (k, row) in self.rows.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            let pad = self.shape.row_start(k + 1) - 1;
            let mut tokens: Vec<String> = vec![".".to_string(); pad];
            tokens.extend(row.iter().map(u32::to_string));
            write!(f, "{}", tokens.join(if wide { " " } else { "" }))?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Class {
    Rpp,
    Ssyt,
    Elegant,
}

/// Backtracking enumerator over the cells in row-major order. Each cell
/// tries values in increasing order, so output is lexicographic on the
/// row-major entry sequence.
pub struct FillingIter {
    shape: SkewShape,
    max_entry: u32,
    class: Class,
    cells: Vec<Cell>,
    // index into `cells` of the left / upper neighbour, if any
    left: Vec<Option<usize>>,
    up: Vec<Option<usize>>,
    values: Vec<u32>,
    started: bool,
    done: bool,
}

impl FillingIter {
    fn new(shape: SkewShape, max_entry: u32, class: Class) -> Self {
        let cells: Vec<Cell> = shape.cells().collect();
        let index_of = |cell: Cell| cells.iter().position(|&c| c == cell);
        let left = cells.iter().map(|c| index_of(Cell { row: c.row, col: c.col - 1 })).collect();
        let up = cells
            .iter()
            .map(|c| if c.row > 1 { index_of(Cell { row: c.row - 1, col: c.col }) } else { None })
            .collect();
        FillingIter {
            shape,
            max_entry,
            class,
            cells,
            left,
            up,
            values: Vec::new(),
            started: false,
            done: false,
        }
    }

    fn lower(&self, k: usize) -> u32 {
        let left = self.left[k].map_or(1, |j| self.values[j]);
        let up = self.up[k].map_or(1, |j| match self.class {
            Class::Rpp => self.values[j],
            Class::Ssyt | Class::Elegant => self.values[j] + 1,
        });
        left.max(up)
    }

    fn upper(&self, k: usize) -> u32 {
        match self.class {
            Class::Elegant => (self.cells[k].row as u32 - 1).min(self.max_entry),
            _ => self.max_entry,
        }
    }

    /// Extends the partial assignment greedily; false if some cell has no value.
    fn extend(&mut self) -> bool {
        while self.values.len() < self.cells.len() {
            let k = self.values.len();
            let lo = self.lower(k);
            if lo > self.upper(k) {
                return false;
            }
            self.values.push(lo);
        }
        true
    }

    /// Bumps the deepest cell that can still grow; false once exhausted.
    fn bump(&mut self) -> bool {
        while let Some(v) = self.values.pop() {
            let k = self.values.len();
            if v < self.upper(k) {
                self.values.push(v + 1);
                return true;
            }
        }
        false
    }
}

impl Iterator for FillingIter {
    type Item = Filling;

    fn next(&mut self) -> Option<Filling> {
        if self.done {
            return None;
        }
        let mut need_bump = self.started;
        self.started = true;
        loop {
            if need_bump && !self.bump() {
                self.done = true;
                return None;
            }
            if self.extend() {
                let filling = Filling::from_entries(self.shape.clone(), self.max_entry, &self.values)
                    .expect("enumerated filling is in range");
                return Some(filling);
            }
            need_bump = true;
        }
    }
}

/// All reverse plane partitions of `shape` with entries in `1..=m`.
pub fn enumerate_rpp(shape: &SkewShape, m: u32) -> FillingIter {
    assert!(m >= 1, "max entry must be positive");
    FillingIter::new(shape.clone(), m, Class::Rpp)
}

/// All semistandard tableaux of `shape` with entries in `1..=m`.
pub fn enumerate_ssyt(shape: &SkewShape, m: u32) -> FillingIter {
    assert!(m >= 1, "max entry must be positive");
    FillingIter::new(shape.clone(), m, Class::Ssyt)
}

/// Semistandard fillings of `outer/inner` whose row-`r` entries are `< r`.
pub fn enumerate_elegant(outer: &Partition, inner: &Partition) -> Result<FillingIter> {
    let shape = SkewShape::new(outer.clone(), inner.clone())?;
    let m = (outer.len() as u32).saturating_sub(1).max(1);
    Ok(FillingIter::new(shape, m, Class::Elegant))
}

/// `T(i)`: the number of columns containing `i`, for `i` in `1..=m`.
pub fn rpp_weight(t: &Filling) -> Vec<u32> {
    let m = t.max_entry() as usize;
    let mut weight = vec![0u32; m];
    let shape = t.shape();
    for c in 1..=shape.num_cols() {
        let Some((top, bottom)) = shape.column_span(c) else { continue };
        let mut seen = vec![false; m + 1];
        for r in top..=bottom {
            seen[t.at(r, c).unwrap() as usize] = true;
        }
        for (v, hit) in seen.into_iter().enumerate().skip(1) {
            if hit {
                weight[v - 1] += 1;
            }
        }
    }
    weight
}

/// `ceq(T)`: entry `i` counts columns where rows `i` and `i+1` hold equal
/// values. Trailing zeros are trimmed.
pub fn ceq(t: &Filling) -> Vec<u32> {
    let shape = t.shape();
    let mut out: Vec<u32> = (1..shape.num_rows())
        .map(|r| {
            (1..=shape.num_cols())
                .filter(|&c| matches!((t.at(r, c), t.at(r + 1, c)), (Some(a), Some(b)) if a == b))
                .count() as u32
        })
        .collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::all_skew_shapes;

    fn shape(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    fn entries(it: FillingIter) -> Vec<Vec<u32>> {
        it.map(|f| f.entries().collect()).collect()
    }

    /// Independent oracle: test every word in [m]^n against the predicate.
    fn brute(shape: &SkewShape, m: u32, pred: impl Fn(&Filling) -> bool) -> Vec<Vec<u32>> {
        let n = shape.size();
        let mut out = Vec::new();
        let total = (m as usize).pow(n as u32);
        for code in 0..total {
            let mut x = code;
            let mut e = vec![0u32; n];
            for k in (0..n).rev() {
                e[k] = (x % m as usize) as u32 + 1;
                x /= m as usize;
            }
            let f = Filling::from_entries(shape.clone(), m, &e).unwrap();
            if pred(&f) {
                out.push(e);
            }
        }
        out
    }

    #[test]
    fn rpp_counts() {
        assert_eq!(entries(enumerate_rpp(&shape("1"), 2)), vec![vec![1], vec![2]]);
        assert_eq!(enumerate_rpp(&shape("2,2"), 2).count(), 6);
        assert_eq!(enumerate_rpp(&shape("2,1/1"), 2).count(), 4);
        assert_eq!(entries(enumerate_rpp(&shape("0"), 3)), vec![Vec::<u32>::new()]);
    }

    #[test]
    fn ssyt_counts() {
        assert_eq!(entries(enumerate_ssyt(&shape("1,1"), 2)), vec![vec![1, 2]]);
        assert_eq!(enumerate_ssyt(&shape("2,1"), 3).count(), 8);
        assert_eq!(entries(enumerate_ssyt(&shape("2,2"), 2)), vec![vec![1, 1, 2, 2]]);
    }

    #[test]
    fn enumerators_match_brute_force_in_order() {
        for s in all_skew_shapes(5) {
            for m in 1..=3 {
                assert_eq!(entries(enumerate_rpp(&s, m)), brute(&s, m, Filling::is_rpp), "{s} m={m}");
                assert_eq!(entries(enumerate_ssyt(&s, m)), brute(&s, m, Filling::is_ssyt), "{s} m={m}");
            }
        }
    }

    #[test]
    fn ssyt_subset_of_rpp() {
        for s in all_skew_shapes(5) {
            for m in 1..=3 {
                let rpps: Vec<_> = enumerate_rpp(&s, m).collect();
                for t in enumerate_ssyt(&s, m) {
                    assert!(rpps.contains(&t));
                }
            }
        }
    }

    #[test]
    fn elegant_fillings() {
        let p = |x: &[u32]| Partition::new(x.to_vec()).unwrap();
        let one: Vec<_> = enumerate_elegant(&p(&[2, 2]), &p(&[2, 1])).unwrap().collect();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].at(2, 2), Some(1));
        assert_eq!(enumerate_elegant(&p(&[2, 2]), &p(&[1, 1])).unwrap().count(), 0);
        assert_eq!(enumerate_elegant(&p(&[3, 1]), &p(&[3, 1])).unwrap().count(), 1);
        assert!(enumerate_elegant(&p(&[1]), &p(&[2])).is_err());
        // (3,2,1)/(3,1): row 2 holds a 1, row 3 holds 1 or 2
        assert_eq!(enumerate_elegant(&p(&[3, 2, 1]), &p(&[3, 1])).unwrap().count(), 2);
    }

    #[test]
    fn weights_and_ceq() {
        let row = Filling::from_entries(shape("2"), 2, &[1, 1]).unwrap();
        assert_eq!(rpp_weight(&row), vec![2, 0]);
        assert!(ceq(&row).is_empty());
        let col = Filling::from_entries(shape("1,1"), 2, &[1, 1]).unwrap();
        assert_eq!(rpp_weight(&col), vec![1, 0]);
        assert_eq!(ceq(&col), vec![1]);
    }

    #[test]
    fn weight_plus_ceq_counts_cells() {
        for s in all_skew_shapes(6) {
            for m in 1..=3 {
                for t in enumerate_rpp(&s, m) {
                    let total: u32 = rpp_weight(&t).iter().sum::<u32>() + ceq(&t).iter().sum::<u32>();
                    assert_eq!(total as usize, s.size(), "{s} {t:?}");
                }
            }
        }
    }

    #[test]
    fn json_round_trip_and_validation() {
        let t = Filling::from_entries(shape("2,1/1"), 3, &[2, 1]).unwrap();
        let text = t.to_json_string();
        assert_eq!(text, r#"{"outer":[2,1],"inner":[1],"max_entry":3,"rows":[[2],[1]]}"#);
        assert_eq!(Filling::parse_json(&text).unwrap(), t);
        assert!(Filling::parse_json(r#"{"outer":[2],"max_entry":1,"rows":[[1,2]]}"#).is_err());
        assert!(Filling::parse_json(r#"{"outer":[2],"max_entry":2,"rows":[[1]]}"#).is_err());
        assert!(Filling::parse_json("nope").is_err());
    }
}
