//! Crystal operators on reverse plane partitions.
//!
//! For an index `i` only the cells holding `i` or `i + 1` matter. Columns
//! of that restriction are classified as i-pure, (i+1)-pure or mixed;
//! `e_i`/`f_i` flip one pure column chosen by bracket matching on the pure
//! columns, then remove the resulting descents one local step at a time.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::reading::{reading_word, surviving_cells};
use crate::shapes::{Cell, Partition, SkewShape};
use crate::tableaux::{enumerate_rpp, rpp_weight, Filling};
use crate::word_crystal::{pairing, Pairing};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ColumnClass {
    /// No cell holds `i` or `i + 1`.
    Empty,
    /// Holds `i` but not `i + 1`.
    LowPure,
    /// Holds `i + 1` but not `i`.
    HighPure,
    Mixed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictedColumn {
    /// Rows whose entry is `i` or `i + 1`, top to bottom.
    pub support: Vec<usize>,
    pub class: ColumnClass,
    /// Row of the lowest `i`, for mixed columns.
    pub border: Option<usize>,
    /// Entries over the support are weakly increasing downwards.
    pub increasing: bool,
}

/// The `{i, i+1}` part of a filling, column by column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Restriction {
    pub index: u32,
    /// `columns[c - 1]` describes column `c`.
    pub columns: Vec<RestrictedColumn>,
}

impl Restriction {
    pub fn column(&self, c: usize) -> &RestrictedColumn {
        &self.columns[c - 1]
    }

    pub fn class(&self, c: usize) -> ColumnClass {
        self.columns.get(c.wrapping_sub(1)).map_or(ColumnClass::Empty, |col| col.class)
    }
}

pub fn restrict(t: &Filling, i: u32) -> Restriction {
    let shape = t.shape();
    let columns = (1..=shape.num_cols())
        .map(|c| {
            let (top, bottom) = shape.column_span(c).unwrap_or((1, 0));
            let support: Vec<usize> = (top..=bottom)
                .filter(|&r| matches!(t.at(r, c), Some(v) if v == i || v == i + 1))
                .collect();
            let values: Vec<u32> = support.iter().map(|&r| t.at(r, c).unwrap()).collect();
            let has_low = values.contains(&i);
            let has_high = values.contains(&(i + 1));
            let class = match (has_low, has_high) {
                (false, false) => ColumnClass::Empty,
                (true, false) => ColumnClass::LowPure,
                (false, true) => ColumnClass::HighPure,
                (true, true) => ColumnClass::Mixed,
            };
            let border = (class == ColumnClass::Mixed)
                .then(|| support.iter().rev().find(|&&r| t.at(r, c) == Some(i)).copied())
                .flatten();
            RestrictedColumn {
                increasing: values.windows(2).all(|w| w[0] <= w[1]),
                support,
                class,
                border,
            }
        })
        .collect();
    Restriction { index: i, columns }
}

/// Columns weakly increase, and the borders of mixed columns never go down
/// from left to right (row index of the lowest `i` weakly decreases).
pub fn is_benign(r: &Restriction) -> bool {
    if !r.columns.iter().all(|c| c.increasing) {
        return false;
    }
    let borders: Vec<usize> = r.columns.iter().filter_map(|c| c.border).collect();
    borders.windows(2).all(|w| w[0] >= w[1])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DescentKind {
    /// (i+1)-pure column left of a mixed one.
    HighMixed,
    /// Mixed column left of an i-pure one.
    MixedLow,
    /// (i+1)-pure column left of an i-pure one.
    HighLow,
}

impl fmt::Display for DescentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DescentKind::HighMixed => "2M",
            DescentKind::MixedLow => "M1",
            DescentKind::HighLow => "21",
        })
    }
}

/// An `i + 1` in column `column` with an `i` directly to its right.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Descent {
    pub column: usize,
    pub kind: DescentKind,
}

pub fn find_descents(t: &Filling, i: u32) -> Result<Vec<Descent>> {
    let r = restrict(t, i);
    let shape = t.shape();
    let mut out = Vec::new();
    for a in 1..shape.num_cols() {
        let hit = (1..=shape.num_rows()).any(|row| t.at(row, a) == Some(i + 1) && t.at(row, a + 1) == Some(i));
        if !hit {
            continue;
        }
        let kind = match (r.class(a), r.class(a + 1)) {
            (ColumnClass::HighPure, ColumnClass::Mixed) => DescentKind::HighMixed,
            (ColumnClass::Mixed, ColumnClass::LowPure) => DescentKind::MixedLow,
            (ColumnClass::HighPure, ColumnClass::LowPure) => DescentKind::HighLow,
            (left, right) => {
                return Err(Error::InternalInvariant(format!(
                    "descent between columns {a} ({left:?}) and {} ({right:?})",
                    a + 1
                )))
            }
        };
        out.push(Descent { column: a, kind });
    }
    Ok(out)
}

fn fill_column(t: &mut Filling, col: usize, support: &[usize], value_at: impl Fn(usize) -> u32) {
    for &row in support {
        t.set(Cell { row, col }, value_at(row));
    }
}

/// Moves a mixed border from one column to a pure neighbour. The border row
/// must split the receiving column's support into two nonempty parts.
fn check_border(support: &[usize], border: usize, col: usize) -> Result<()> {
    let inside = support.first().is_some_and(|&top| top <= border) && support.last().is_some_and(|&bot| bot > border);
    if inside {
        Ok(())
    } else {
        Err(Error::InternalInvariant(format!(
            "border row {border} falls outside the support {support:?} of column {col}"
        )))
    }
}

/// One local resolution step. Only the two columns of the descent change,
/// and only in cells holding `i` or `i + 1`.
pub fn resolve_step(t: &Filling, i: u32, d: Descent) -> Result<Filling> {
    let r = restrict(t, i);
    let (a, b) = (d.column, d.column + 1);
    let (left, right) = (r.column(a), r.column(b));
    let mut out = t.clone();
    match d.kind {
        DescentKind::MixedLow => {
            let border = left.border.expect("mixed column has a border");
            check_border(&right.support, border, b)?;
            fill_column(&mut out, a, &left.support, |_| i);
            fill_column(&mut out, b, &right.support, |row| if row <= border { i } else { i + 1 });
        }
        DescentKind::HighMixed => {
            let border = right.border.expect("mixed column has a border");
            check_border(&left.support, border, a)?;
            fill_column(&mut out, a, &left.support, |row| if row <= border { i } else { i + 1 });
            fill_column(&mut out, b, &right.support, |_| i + 1);
        }
        DescentKind::HighLow => {
            fill_column(&mut out, a, &left.support, |_| i);
            fill_column(&mut out, b, &right.support, |_| i + 1);
        }
    }
    Ok(out)
}

/// Which descent to resolve next when several are present.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ResolveOrder {
    #[default]
    Leftmost,
    Rightmost,
    /// Uniformly random choice from a seeded generator.
    Random(u64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Resolution {
    pub result: Filling,
    /// Steps in the order they were applied, each with the tableau it was applied to.
    pub steps: Vec<(Filling, Descent)>,
}

/// Upper bound on the number of resolution steps for a shape with `cols` columns.
pub fn step_bound(cols: usize) -> usize {
    2 * cols * cols + 2
}

/// Resolves descents until none remain. The input must be benign.
pub fn resolve_all(t: &Filling, i: u32, order: ResolveOrder) -> Result<Resolution> {
    if !is_benign(&restrict(t, i)) {
        return Err(Error::NotBenign(i));
    }
    let mut rng = match order {
        ResolveOrder::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    let bound = step_bound(t.shape().num_cols());
    let mut cur = t.clone();
    let mut steps = Vec::new();
    loop {
        let descents = find_descents(&cur, i)?;
        if descents.is_empty() {
            break;
        }
        if steps.len() >= bound {
            return Err(Error::InternalInvariant(format!("resolution exceeded {bound} steps")));
        }
        let d = match (order, rng.as_mut()) {
            (ResolveOrder::Rightmost, _) => *descents.last().unwrap(),
            (ResolveOrder::Random(_), Some(rng)) => descents[rng.gen_range(0..descents.len())],
            _ => descents[0],
        };
        let next = resolve_step(&cur, i, d)?;
        steps.push((cur, d));
        cur = next;
    }
    if !cur.is_rpp() {
        return Err(Error::InternalInvariant("resolution ended on a non-RPP".into()));
    }
    Ok(Resolution { result: cur, steps })
}

/// Bracket matching on pure columns: (i+1)-pure columns open, i-pure columns
/// close, mixed and empty columns are skipped. Positions are column numbers.
pub fn column_pairing(r: &Restriction) -> Pairing {
    let i = r.index;
    let mut cols = Vec::new();
    let mut letters = Vec::new();
    for (k, col) in r.columns.iter().enumerate() {
        match col.class {
            ColumnClass::LowPure => letters.push(i),
            ColumnClass::HighPure => letters.push(i + 1),
            _ => continue,
        }
        cols.push(k + 1);
    }
    let p = pairing(&letters, i);
    Pairing {
        index: i,
        matched: p.matched.into_iter().map(|(o, c)| (cols[o], cols[c])).collect(),
        unmatched_opens: p.unmatched_opens.into_iter().map(|k| cols[k]).collect(),
        unmatched_closes: p.unmatched_closes.into_iter().map(|k| cols[k]).collect(),
    }
}

fn check_index(t: &Filling, i: u32) -> Result<()> {
    if i == 0 || i >= t.max_entry() {
        return Err(Error::InvalidArgument(format!(
            "operator index {i} outside 1..{}",
            t.max_entry()
        )));
    }
    Ok(())
}

/// `e_i` before resolution: the (i+1)-pure column of the leftmost unmatched
/// opening bracket turned into `i`s. `None` if every opening bracket is matched.
pub fn raise_unresolved(t: &Filling, i: u32) -> Result<Option<Filling>> {
    check_index(t, i)?;
    let r = restrict(t, i);
    let Some(&col) = column_pairing(&r).unmatched_opens.first() else {
        return Ok(None);
    };
    let mut out = t.clone();
    fill_column(&mut out, col, &r.column(col).support, |_| i);
    Ok(Some(out))
}

/// `f_i` before resolution: the i-pure column of the rightmost unmatched
/// closing bracket turned into `(i+1)`s.
pub fn lower_unresolved(t: &Filling, i: u32) -> Result<Option<Filling>> {
    check_index(t, i)?;
    let r = restrict(t, i);
    let Some(&col) = column_pairing(&r).unmatched_closes.last() else {
        return Ok(None);
    };
    let mut out = t.clone();
    fill_column(&mut out, col, &r.column(col).support, |_| i + 1);
    Ok(Some(out))
}

/// `e_i`. `None` is the zero result.
pub fn raise_rpp(t: &Filling, i: u32) -> Result<Option<Filling>> {
    raise_unresolved(t, i)?
        .map(|b| resolve_all(&b, i, ResolveOrder::Leftmost).map(|res| res.result))
        .transpose()
}

/// `f_i`. `None` is the zero result.
pub fn lower_rpp(t: &Filling, i: u32) -> Result<Option<Filling>> {
    lower_unresolved(t, i)?
        .map(|b| resolve_all(&b, i, ResolveOrder::Leftmost).map(|res| res.result))
        .transpose()
}

/// Positions of a column's letters inside the `{i, i+1}` subword of the
/// reading word (0-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColumnPositions {
    Pure(usize),
    Mixed { low: usize, high: usize },
}

pub fn column_word_positions(t: &Filling, i: u32) -> BTreeMap<usize, ColumnPositions> {
    let r = restrict(t, i);
    let mut low: BTreeMap<usize, usize> = BTreeMap::new();
    let mut high: BTreeMap<usize, usize> = BTreeMap::new();
    let letters = surviving_cells(t)
        .into_iter()
        .filter(|&c| matches!(t.get(c), Some(v) if v == i || v == i + 1));
    for (pos, cell) in letters.enumerate() {
        let slot = if t.get(cell) == Some(i) { &mut low } else { &mut high };
        slot.entry(cell.col).or_insert(pos);
    }
    let mut out = BTreeMap::new();
    for (k, col) in r.columns.iter().enumerate() {
        let c = k + 1;
        let entry = match col.class {
            ColumnClass::Empty => continue,
            ColumnClass::LowPure => low.get(&c).map(|&p| ColumnPositions::Pure(p)),
            ColumnClass::HighPure => high.get(&c).map(|&p| ColumnPositions::Pure(p)),
            ColumnClass::Mixed => match (low.get(&c), high.get(&c)) {
                (Some(&l), Some(&h)) => Some(ColumnPositions::Mixed { low: l, high: h }),
                _ => None,
            },
        };
        if let Some(e) = entry {
            out.insert(c, e);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    /// Vertex ids in enumeration order.
    pub vertices: Vec<usize>,
    /// The vertex killed by every `e_i`.
    pub highest: usize,
    pub weight: Partition,
}

/// The crystal graph on all reverse plane partitions of a shape with
/// entries in `1..=max_entry`. Vertices are numbered in enumeration order;
/// components are ordered by their smallest vertex.
#[derive(Clone, Debug)]
pub struct CrystalGraph {
    pub shape: SkewShape,
    pub max_entry: u32,
    pub vertices: Vec<Filling>,
    /// `(source, i, target)` with `target = f_i(source)`.
    pub edges: Vec<(usize, u32, usize)>,
    pub components: Vec<Component>,
    pub component_of: Vec<usize>,
}

pub fn crystal_graph(shape: &SkewShape, m: u32) -> Result<CrystalGraph> {
    let vertices: Vec<Filling> = enumerate_rpp(shape, m).collect();
    let ids: HashMap<&Filling, usize> = vertices.iter().enumerate().map(|(k, v)| (v, k)).collect();

    let mut edges = Vec::new();
    for (src, v) in vertices.iter().enumerate() {
        for i in 1..m {
            if let Some(w) = lower_rpp(v, i)? {
                let dst = *ids
                    .get(&w)
                    .ok_or_else(|| Error::InternalInvariant(format!("f_{i} left the vertex set: {}", w.to_json_string())))?;
                edges.push((src, i, dst));
            }
        }
    }

    // union-find; roots are the smallest ids
    let mut parent: Vec<usize> = (0..vertices.len()).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut root = x;
        while parent[root] != root {
            root = parent[root];
        }
        let mut y = x;
        while parent[y] != root {
            let next = parent[y];
            parent[y] = root;
            y = next;
        }
        root
    }
    for &(a, _, b) in &edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }

    let mut component_of = vec![usize::MAX; vertices.len()];
    let mut members: Vec<Vec<usize>> = Vec::new();
    let mut root_to_comp: HashMap<usize, usize> = HashMap::new();
    for (v, slot) in component_of.iter_mut().enumerate() {
        let root = find(&mut parent, v);
        let next = members.len();
        let comp = *root_to_comp.entry(root).or_insert(next);
        if comp == members.len() {
            members.push(Vec::new());
        }
        members[comp].push(v);
        *slot = comp;
    }

    let mut components = Vec::with_capacity(members.len());
    for vs in members {
        let mut tops = Vec::new();
        for &v in &vs {
            let mut top = true;
            for i in 1..m {
                if raise_rpp(&vertices[v], i)?.is_some() {
                    top = false;
                    break;
                }
            }
            if top {
                tops.push(v);
            }
        }
        let [highest] = tops[..] else {
            return Err(Error::InternalInvariant(format!(
                "component of vertex {} has {} highest-weight vertices",
                vs[0],
                tops.len()
            )));
        };
        let weight = Partition::from_weight(&rpp_weight(&vertices[highest])).ok_or_else(|| {
            Error::InternalInvariant(format!("highest weight {:?} is not a partition", rpp_weight(&vertices[highest])))
        })?;
        components.push(Component {
            vertices: vs,
            highest,
            weight,
        });
    }

    Ok(CrystalGraph {
        shape: shape.clone(),
        max_entry: m,
        vertices,
        edges,
        components,
        component_of,
    })
}

const EDGE_COLORS: [&str; 8] = ["red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan"];

impl CrystalGraph {
    /// Highest weights of all components, largest first.
    pub fn highest_weights(&self) -> Vec<Partition> {
        let mut ws: Vec<Partition> = self.components.iter().map(|c| c.weight.clone()).collect();
        ws.sort_by(crate::shapes::graded_desc);
        ws
    }

    /// `components: 3; highest weights: (2,2),(2,1),(2)`
    pub fn summary(&self) -> String {
        let ws: Vec<String> = self.highest_weights().iter().map(Partition::to_string).collect();
        format!("components: {}; highest weights: {}", self.components.len(), ws.join(","))
    }

    fn node_label(&self, v: usize) -> String {
        let t = &self.vertices[v];
        let word = reading_word(t);
        let word = if self.max_entry <= 9 { word.compact() } else { word.to_string() };
        let word = if word.is_empty() { "ε".to_string() } else { word };
        format!("{}\\n({})", word, crate::shapes::join(&rpp_weight(t)))
    }

    /// Graphviz rendering: one cluster per component, edges `f<i>` colored by index.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        out.push_str("digraph crystal {\n");
        out.push_str(&format!(
            "  label=\"shape {} max entry {}: {}\";\n",
            self.shape,
            self.max_entry,
            self.summary()
        ));
        out.push_str("  node [shape=box, fontname=\"monospace\"];\n");
        for (k, comp) in self.components.iter().enumerate() {
            out.push_str(&format!("  subgraph cluster_{k} {{\n"));
            out.push_str(&format!(
                "    label=\"component {k}: highest weight {}, size {}\";\n",
                comp.weight,
                comp.vertices.len()
            ));
            for &v in &comp.vertices {
                let style = if v == comp.highest { ", style=bold" } else { "" };
                out.push_str(&format!("    n{v} [label=\"{}\"{style}];\n", self.node_label(v)));
            }
            out.push_str("  }\n");
        }
        for &(a, i, b) in &self.edges {
            let color = EDGE_COLORS[(i as usize - 1) % EDGE_COLORS.len()];
            out.push_str(&format!("  n{a} -> n{b} [label=\"f{i}\", color={color}];\n"));
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;
    use crate::reading::{height_vector, Word};
    use crate::shapes::all_skew_shapes;
    use crate::tableaux::ceq;
    use crate::word_crystal::{lower_word, raise_word};

    fn tab(shape: &str, m: u32, rows: &[&[u32]]) -> Filling {
        Filling::new(shape.parse().unwrap(), m, rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn restrictions() {
        let r = restrict(&tab("2,2", 2, &[&[1, 1], &[1, 2]]), 1);
        assert_eq!(r.class(1), ColumnClass::LowPure);
        assert_eq!(r.class(2), ColumnClass::Mixed);
        assert_eq!(r.column(2).border, Some(1));

        let r = restrict(&tab("2,2", 2, &[&[1, 2], &[2, 2]]), 1);
        assert_eq!(r.class(1), ColumnClass::Mixed);
        assert_eq!(r.column(1).border, Some(1));
        assert_eq!(r.class(2), ColumnClass::HighPure);

        let r = restrict(&tab("2,2", 3, &[&[3, 3], &[3, 3]]), 1);
        assert_eq!(r.class(1), ColumnClass::Empty);
        assert_eq!(r.class(2), ColumnClass::Empty);
    }

    #[test]
    fn benign_classification() {
        assert!(!is_benign(&restrict(&benign_fixture_a(), 1)));
        assert!(is_benign(&restrict(&benign_fixture_b(), 1)));
        assert!(!benign_fixture_b().is_rpp());
        assert!(benign_fixture_c().is_rpp());
        assert!(!is_benign(&restrict(&tab("2,2,2", 2, &[&[1, 1], &[2, 1], &[2, 2]]), 1)));
        assert!(is_benign(&restrict(&tab("2,2,2", 2, &[&[1, 1], &[1, 2], &[2, 2]]), 1)));
    }

    #[test]
    fn descents() {
        let d = find_descents(&tab("2,2", 2, &[&[2, 1], &[2, 2]]), 1).unwrap();
        assert_eq!(d, vec![Descent { column: 1, kind: DescentKind::HighMixed }]);
        let d = find_descents(&tab("2", 2, &[&[2, 1]]), 1).unwrap();
        assert_eq!(d, vec![Descent { column: 1, kind: DescentKind::HighLow }]);
        assert!(find_descents(&benign_fixture_c(), 1).unwrap().is_empty());
        // both columns mixed
        let mm = tab("2,2,2", 2, &[&[1, 1], &[2, 1], &[2, 2]]);
        assert!(matches!(find_descents(&mm, 1), Err(Error::InternalInvariant(_))));
    }

    #[test]
    fn resolution_steps_match_pictures() {
        for ((before, after), kind) in [
            (resolution_m1(), DescentKind::MixedLow),
            (resolution_2m(), DescentKind::HighMixed),
            (resolution_21(), DescentKind::HighLow),
        ] {
            let d = find_descents(&before, 1).unwrap();
            assert_eq!(d, vec![Descent { column: 1, kind }]);
            let stepped = resolve_step(&before, 1, d[0]).unwrap();
            assert_eq!(stepped, after);
            assert_eq!(height_vector(&stepped), height_vector(&before));
            assert_eq!(rpp_weight(&stepped), rpp_weight(&before));
        }
        let two_m = tab("2,2", 2, &[&[2, 1], &[2, 2]]);
        let d = Descent { column: 1, kind: DescentKind::HighMixed };
        assert_eq!(resolve_step(&two_m, 1, d).unwrap(), tab("2,2", 2, &[&[1, 2], &[2, 2]]));
        let d = Descent { column: 1, kind: DescentKind::HighLow };
        assert_eq!(resolve_step(&tab("2", 2, &[&[2, 1]]), 1, d).unwrap(), tab("2", 2, &[&[1, 2]]));
    }

    #[test]
    fn border_guard() {
        // mixed column with border at row 2, i-pure neighbour only in row 1..2
        let t = tab("2,2,1", 2, &[&[1, 1], &[1, 1], &[2]]);
        let d = Descent { column: 1, kind: DescentKind::MixedLow };
        assert!(matches!(resolve_step(&t, 1, d), Err(Error::InternalInvariant(_))));
    }

    #[test]
    fn resolve_all_examples() {
        let res = resolve_all(&tab("2,2", 2, &[&[2, 1], &[2, 2]]), 1, ResolveOrder::Leftmost).unwrap();
        assert_eq!(res.result, tab("2,2", 2, &[&[1, 2], &[2, 2]]));
        assert_eq!(res.steps.len(), 1);
        let res = resolve_all(&tab("2", 2, &[&[2, 1]]), 1, ResolveOrder::Leftmost).unwrap();
        assert_eq!(res.result, tab("2", 2, &[&[1, 2]]));
        let rpp = benign_fixture_c();
        assert_eq!(resolve_all(&rpp, 1, ResolveOrder::Rightmost).unwrap().result, rpp);
        // fixture (b) resolves to fixture (c) in two 2M steps
        let res = resolve_all(&benign_fixture_b(), 1, ResolveOrder::Leftmost).unwrap();
        assert_eq!(res.result, benign_fixture_c());
        assert_eq!(res.steps.len(), 2);
        assert_eq!(resolve_all(&benign_fixture_a(), 1, ResolveOrder::Leftmost), Err(Error::NotBenign(1)));
    }

    #[test]
    fn operator_examples() {
        let low = tab("2,2", 2, &[&[1, 1], &[1, 2]]);
        let high = tab("2,2", 2, &[&[1, 2], &[2, 2]]);
        assert_eq!(lower_rpp(&low, 1).unwrap(), Some(high.clone()));
        assert_eq!(raise_rpp(&high, 1).unwrap(), Some(low.clone()));
        assert_eq!(raise_rpp(&low, 1).unwrap(), None);
        assert_eq!(lower_rpp(&high, 1).unwrap(), None);
        assert_eq!(lower_word(&reading_word(&low), 1), Some(Word::new(vec![2, 2, 1])));
        assert_eq!(lower_rpp(&tab("2", 2, &[&[1, 1]]), 1).unwrap(), Some(tab("2", 2, &[&[1, 2]])));
        assert_eq!(raise_rpp(&tab("2,2", 3, &[&[1, 1], &[1, 1]]), 1).unwrap(), None);
        assert!(matches!(raise_rpp(&low, 2), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn word_positions() {
        let low = tab("2,2", 2, &[&[1, 1], &[1, 2]]);
        let pos = column_word_positions(&low, 1);
        assert_eq!(pos[&1], ColumnPositions::Pure(0));
        assert_eq!(pos[&2], ColumnPositions::Mixed { low: 2, high: 1 });
        let single = tab("1,1", 2, &[&[1], &[1]]);
        assert_eq!(column_word_positions(&single, 1)[&1], ColumnPositions::Pure(0));
        assert!(column_word_positions(&tab("2", 4, &[&[3, 4]]), 1).is_empty());
    }

    #[test]
    fn graph_examples() {
        let g = crystal_graph(&"1".parse().unwrap(), 2).unwrap();
        assert_eq!(g.edges, vec![(0, 1, 1)]);
        assert_eq!(g.components.len(), 1);
        assert_eq!(g.components[0].weight.parts(), &[1]);

        let g = crystal_graph(&"2,2".parse().unwrap(), 2).unwrap();
        assert_eq!(g.vertices.len(), 6);
        let mut sizes: Vec<usize> = g.components.iter().map(|c| c.vertices.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 3]);
        assert_eq!(g.summary(), "components: 3; highest weights: (2,2),(2,1),(2)");

        let g = crystal_graph(&"2,1/1".parse().unwrap(), 2).unwrap();
        assert_eq!(g.vertices.len(), 4);
        let mut sizes: Vec<usize> = g.components.iter().map(|c| c.vertices.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 3]);
        assert_eq!(g.summary(), "components: 2; highest weights: (2),(1,1)");

        let dot = g.to_dot();
        assert!(dot.starts_with("digraph crystal {"));
        assert!(dot.contains("subgraph cluster_1"));
        assert!(dot.contains("[label=\"f1\", color=red]"));
        assert_eq!(dot, crystal_graph(&"2,1/1".parse().unwrap(), 2).unwrap().to_dot());
    }

    #[test]
    fn intertwining_and_preservation_small() {
        for s in all_skew_shapes(5) {
            for m in 2..=3 {
                for t in enumerate_rpp(&s, m) {
                    let w = reading_word(&t);
                    for i in 1..m {
                        let f = lower_rpp(&t, i).unwrap();
                        assert_eq!(f.as_ref().map(reading_word), lower_word(&w, i), "{}", t.to_json_string());
                        let e = raise_rpp(&t, i).unwrap();
                        assert_eq!(e.as_ref().map(reading_word), raise_word(&w, i), "{}", t.to_json_string());
                        for u in f.iter().chain(e.iter()) {
                            assert_eq!(height_vector(u), height_vector(&t));
                            assert_eq!(ceq(u), ceq(&t));
                        }
                        if let Some(u) = f {
                            assert_eq!(raise_rpp(&u, i).unwrap(), Some(t.clone()));
                        }
                    }
                }
            }
        }
    }
}
