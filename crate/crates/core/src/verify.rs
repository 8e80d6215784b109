//! Exhaustive property suites over a corpus of small skew shapes.
//!
//! The corpus is every skew shape `λ/μ` with `|λ| <= max_cells` together
//! with every bound `m` in `1..=max_entry`. Each suite stops at the first
//! counterexample and reports it with enough data to reproduce it.

use std::fmt;

use clap::ValueEnum;

use crate::reading::{height_vector, reading_word, reconstruct, Word};
use crate::rpp_crystal::{
    column_pairing, column_word_positions, crystal_graph, lower_rpp, lower_unresolved, raise_rpp,
    raise_unresolved, resolve_all, restrict, step_bound, ColumnClass, ColumnPositions, DescentKind, ResolveOrder,
};
use crate::shapes::{all_skew_shapes, Partition, SkewShape};
use crate::symfunc::{
    elegant_count, expand_in_schur, g_poly, g_refined, h_coeffs, h_coeffs_refined, lr_classical, schur, skew_schur,
    t_var_count, SparsePoly,
};
use crate::tableaux::{ceq, enumerate_rpp, rpp_weight, Filling};
use crate::word_crystal::{all_words, is_lattice, lower_word, pairing, raise_word, word_weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, ValueEnum)]
pub enum Suite {
    /// `E_i`/`F_i` are inverse partial maps; lattice ⟺ killed by every `E_i`.
    Words,
    /// Tableaux are recovered from reading word and height vector.
    Reconstruct,
    /// Reading word intertwines `e_i`/`f_i` with `E_i`/`F_i`.
    Intertwine,
    /// `e_i`/`f_i` are inverse and preserve shape, heights and `ceq`.
    Preserve,
    /// Column matching agrees with reading-word matching.
    Matching,
    /// Descent resolution is order independent and bounded.
    Confluence,
    /// Schur expansion of `g` equals the lattice count.
    Identity,
    /// The `t`-refined expansion.
    Refined,
    /// Components of the crystal graph are Schur crystals.
    Components,
    /// Straight shapes agree with elegant fillings.
    Elegant,
    /// `g` is symmetric.
    Symmetry,
    /// Top-degree part is the skew Schur polynomial.
    Top,
    /// Coefficients agree between `m` and `m + 1` variables.
    Stability,
}

impl Suite {
    pub const ALL: [Suite; 13] = [
        Suite::Words,
        Suite::Reconstruct,
        Suite::Intertwine,
        Suite::Preserve,
        Suite::Matching,
        Suite::Confluence,
        Suite::Identity,
        Suite::Refined,
        Suite::Components,
        Suite::Elegant,
        Suite::Symmetry,
        Suite::Top,
        Suite::Stability,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Words => "words",
            Suite::Reconstruct => "reconstruct",
            Suite::Intertwine => "intertwine",
            Suite::Preserve => "preserve",
            Suite::Matching => "matching",
            Suite::Confluence => "confluence",
            Suite::Identity => "identity",
            Suite::Refined => "refined",
            Suite::Components => "components",
            Suite::Elegant => "elegant",
            Suite::Symmetry => "symmetry",
            Suite::Top => "top",
            Suite::Stability => "stability",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Config {
    /// Bound on `|λ|`.
    pub max_cells: u32,
    pub max_entry: u32,
    pub seed: u64,
    /// Random resolution orders tried per benign tableau.
    pub random_orders: u32,
    /// Longest word in the `words` suite.
    pub word_length: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_cells: 6,
            max_entry: 3,
            seed: 7,
            random_orders: 10,
            word_length: 8,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub suite: Suite,
    pub cases: usize,
    pub failure: Option<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "{}: pass ({} cases)", self.suite.name(), self.cases),
            Some(w) => write!(f, "{}: FAIL after {} cases: {}", self.suite.name(), self.cases, w),
        }
    }
}

type Check = std::result::Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn witness(shape: &SkewShape, m: u32, t: &Filling, what: impl fmt::Display) -> String {
    format!("shape {shape}, m={m}, tableau {}: {what}", t.to_json_string())
}

fn corpus(cfg: &Config) -> Vec<(SkewShape, u32)> {
    let shapes = all_skew_shapes(cfg.max_cells);
    (1..=cfg.max_entry)
        .flat_map(|m| shapes.iter().map(move |s| (s.clone(), m)))
        .collect()
}

/// Runs `check` on each corpus entry, counting cases as reported by `check`.
fn over_shapes(cfg: &Config, mut check: impl FnMut(&SkewShape, u32, &mut usize) -> Check) -> (usize, Option<String>) {
    let mut cases = 0;
    for (shape, m) in corpus(cfg) {
        if let Err(w) = check(&shape, m, &mut cases) {
            return (cases, Some(w));
        }
    }
    (cases, None)
}

/// Runs `check` on every tableau of every corpus shape.
fn over_tableaux(cfg: &Config, mut check: impl FnMut(&SkewShape, u32, &Filling) -> Check) -> (usize, Option<String>) {
    over_shapes(cfg, |shape, m, cases| {
        for t in enumerate_rpp(shape, m) {
            *cases += 1;
            check(shape, m, &t)?;
        }
        Ok(())
    })
}

pub fn run(suite: Suite, cfg: &Config) -> Report {
    let (cases, failure) = match suite {
        Suite::Words => words(cfg),
        Suite::Reconstruct => over_tableaux(cfg, check_reconstruct),
        Suite::Intertwine => over_tableaux(cfg, check_intertwine),
        Suite::Preserve => over_tableaux(cfg, check_preserve),
        Suite::Matching => over_tableaux(cfg, check_matching),
        Suite::Confluence => {
            let cfg = *cfg;
            over_tableaux(&cfg, |s, m, t| check_confluence(&cfg, s, m, t))
        }
        Suite::Identity => over_shapes(cfg, check_identity),
        Suite::Refined => over_shapes(cfg, check_refined),
        Suite::Components => over_shapes(cfg, check_components),
        Suite::Elegant => over_shapes(cfg, check_elegant),
        Suite::Symmetry => over_shapes(cfg, check_symmetry),
        Suite::Top => over_shapes(cfg, check_top),
        Suite::Stability => over_shapes(cfg, check_stability),
    };
    Report { suite, cases, failure }
}

pub fn run_all(cfg: &Config) -> Vec<Report> {
    Suite::ALL.iter().map(|&s| run(s, cfg)).collect()
}

fn words(cfg: &Config) -> (usize, Option<String>) {
    let m = cfg.max_entry.max(2);
    let mut cases = 0;
    for len in 0..=cfg.word_length {
        for s in all_words(len, m) {
            cases += 1;
            if let Err(w) = check_word(&s, m) {
                return (cases, Some(format!("word {s}: {w}")));
            }
        }
    }
    (cases, None)
}

pub fn check_word(s: &Word, m: u32) -> Check {
    let mut killed = true;
    for i in 1..m {
        if let Some(v) = raise_word(s, i) {
            killed = false;
            ensure(lower_word(&v, i).as_ref() == Some(s), || format!("F_{i}(E_{i}(s)) != s"))?;
        }
        if let Some(u) = lower_word(s, i) {
            ensure(raise_word(&u, i).as_ref() == Some(s), || format!("E_{i}(F_{i}(s)) != s"))?;
        }
    }
    ensure(is_lattice(s) == killed, || format!("is_lattice = {} but killed by all E_i = {killed}", is_lattice(s)))?;
    if killed {
        let w = word_weight(s, m);
        ensure(w.windows(2).all(|p| p[0] >= p[1]), || format!("lattice word with weight {w:?}"))?;
    }
    Ok(())
}

fn check_reconstruct(shape: &SkewShape, m: u32, t: &Filling) -> Check {
    let back = reconstruct(shape, &reading_word(t), &height_vector(t), m);
    ensure(back.as_ref() == Ok(t), || witness(shape, m, t, format!("reconstructed {back:?}")))
}

fn check_intertwine(shape: &SkewShape, m: u32, t: &Filling) -> Check {
    let w = reading_word(t);
    for i in 1..m {
        let f = lower_rpp(t, i).map_err(|e| witness(shape, m, t, e))?;
        ensure(f.as_ref().map(reading_word) == lower_word(&w, i), || {
            witness(shape, m, t, format!("r(f_{i}(T)) != F_{i}(r(T))"))
        })?;
        let e = raise_rpp(t, i).map_err(|e| witness(shape, m, t, e))?;
        ensure(e.as_ref().map(reading_word) == raise_word(&w, i), || {
            witness(shape, m, t, format!("r(e_{i}(T)) != E_{i}(r(T))"))
        })?;
    }
    Ok(())
}

fn check_preserve(shape: &SkewShape, m: u32, t: &Filling) -> Check {
    let (h, c, wt) = (height_vector(t), ceq(t), rpp_weight(t));
    for i in 1..m {
        let k = i as usize - 1;
        if let Some(u) = lower_rpp(t, i).map_err(|e| witness(shape, m, t, e))? {
            ensure(u.shape() == shape && u.is_rpp(), || witness(shape, m, t, format!("f_{i} left the shape")))?;
            ensure(height_vector(&u) == h, || witness(shape, m, t, format!("f_{i} changed heights")))?;
            ensure(ceq(&u) == c, || witness(shape, m, t, format!("f_{i} changed ceq")))?;
            let uw = rpp_weight(&u);
            ensure(uw[k] + 1 == wt[k] && uw[k + 1] == wt[k + 1] + 1, || {
                witness(shape, m, t, format!("f_{i} weight {wt:?} -> {uw:?}"))
            })?;
            let back = raise_rpp(&u, i).map_err(|e| witness(shape, m, t, e))?;
            ensure(back.as_ref() == Some(t), || witness(shape, m, t, format!("e_{i}(f_{i}(T)) != T")))?;
        }
        if let Some(u) = raise_rpp(t, i).map_err(|e| witness(shape, m, t, e))? {
            ensure(height_vector(&u) == h, || witness(shape, m, t, format!("e_{i} changed heights")))?;
            ensure(ceq(&u) == c, || witness(shape, m, t, format!("e_{i} changed ceq")))?;
            let back = lower_rpp(&u, i).map_err(|e| witness(shape, m, t, e))?;
            ensure(back.as_ref() == Some(t), || witness(shape, m, t, format!("f_{i}(e_{i}(T)) != T")))?;
        }
    }
    Ok(())
}

fn check_matching(shape: &SkewShape, m: u32, t: &Filling) -> Check {
    let word = reading_word(t);
    for i in 1..m {
        let sub: Vec<u32> = word.letters().iter().copied().filter(|&l| l == i || l == i + 1).collect();
        let words = pairing(&sub, i);
        let cols = column_pairing(&restrict(t, i));
        let positions = column_word_positions(t, i);
        let word_matched = |p: usize| words.is_matched(p);
        for (&col, &pos) in &positions {
            match (restrict(t, i).class(col), pos) {
                (ColumnClass::LowPure, ColumnPositions::Pure(j)) => {
                    let unmatched = cols.unmatched_closes.contains(&col);
                    ensure(unmatched != word_matched(j), || {
                        witness(shape, m, t, format!("i={i}: i-pure column {col} unmatched={unmatched}, letter {j}"))
                    })?;
                }
                (ColumnClass::Mixed, ColumnPositions::Mixed { low, .. }) => {
                    ensure(word_matched(low), || {
                        witness(shape, m, t, format!("i={i}: mixed column {col} has unmatched i at {low}"))
                    })?;
                }
                (ColumnClass::HighPure, ColumnPositions::Pure(_)) => {}
                (class, pos) => {
                    return Err(witness(shape, m, t, format!("i={i}: column {col} is {class:?} but maps to {pos:?}")))
                }
            }
        }
        let nonempty = restrict(t, i).columns.iter().filter(|c| c.class != ColumnClass::Empty).count();
        ensure(positions.len() == nonempty, || witness(shape, m, t, format!("i={i}: a column has no letter")))?;
    }
    Ok(())
}

fn check_confluence(cfg: &Config, shape: &SkewShape, m: u32, t: &Filling) -> Check {
    let bound = step_bound(shape.num_cols());
    for i in 1..m {
        let starts = [
            raise_unresolved(t, i).map_err(|e| witness(shape, m, t, e))?,
            lower_unresolved(t, i).map_err(|e| witness(shape, m, t, e))?,
        ];
        for benign in starts.into_iter().flatten() {
            let mut orders = vec![ResolveOrder::Leftmost, ResolveOrder::Rightmost];
            orders.extend((0..cfg.random_orders as u64).map(|k| ResolveOrder::Random(cfg.seed.wrapping_add(k))));
            let mut first: Option<Filling> = None;
            for order in orders {
                let res = resolve_all(&benign, i, order).map_err(|e| witness(shape, m, &benign, e))?;
                ensure(res.steps.len() <= bound, || witness(shape, m, &benign, "step bound exceeded"))?;
                for (before, d) in &res.steps {
                    let after = crate::rpp_crystal::resolve_step(before, i, *d).map_err(|e| witness(shape, m, before, e))?;
                    check_movement(before, &after, i, d.column, d.kind)
                        .map_err(|why| witness(shape, m, before, format!("i={i}: {why}")))?;
                    ensure(height_vector(&after) == height_vector(before), || {
                        witness(shape, m, before, "resolution step changed heights")
                    })?;
                }
                match &first {
                    None => first = Some(res.result),
                    Some(r) => ensure(*r == res.result, || {
                        witness(shape, m, &benign, format!("i={i}: {order:?} disagrees"))
                    })?,
                }
            }
        }
    }
    Ok(())
}

/// Each step moves an (i+1)-pure column one place right or an i-pure column
/// one place left, and keeps the other classes in place.
fn check_movement(before: &Filling, after: &Filling, i: u32, a: usize, kind: DescentKind) -> Check {
    use ColumnClass::*;
    let (rb, ra) = (restrict(before, i), restrict(after, i));
    let pair = |r: &crate::rpp_crystal::Restriction| (r.class(a), r.class(a + 1));
    let expected = match kind {
        DescentKind::MixedLow => ((Mixed, LowPure), (LowPure, Mixed)),
        DescentKind::HighMixed => ((HighPure, Mixed), (Mixed, HighPure)),
        DescentKind::HighLow => ((HighPure, LowPure), (LowPure, HighPure)),
    };
    ensure((pair(&rb), pair(&ra)) == expected, || {
        format!("step {kind} at column {a}: {:?} -> {:?}", pair(&rb), pair(&ra))
    })?;
    if kind != DescentKind::HighLow {
        let moved_border = match kind {
            DescentKind::MixedLow => (rb.column(a).border, ra.column(a + 1).border),
            _ => (rb.column(a + 1).border, ra.column(a).border),
        };
        ensure(moved_border.0 == moved_border.1, || format!("border moved {moved_border:?}"))?;
    }
    Ok(())
}

fn check_identity(shape: &SkewShape, m: u32, cases: &mut usize) -> Check {
    *cases += 1;
    let expanded = expand_in_schur(&g_poly(shape, m), m).map_err(|e| format!("shape {shape}, m={m}: {e}"))?;
    let counted = h_coeffs(shape, m);
    ensure(expanded == counted, || format!("shape {shape}, m={m}: expansion {expanded:?} vs lattice count {counted:?}"))
}

fn check_refined(shape: &SkewShape, m: u32, cases: &mut usize) -> Check {
    *cases += 1;
    let lhs = g_refined(shape, m);
    let rhs = h_coeffs_refined(shape, m).to_poly(m, t_var_count(shape));
    ensure(lhs == rhs, || format!("shape {shape}, m={m}: refined g = {lhs} but refined sum = {rhs}"))
}

fn check_components(shape: &SkewShape, m: u32, cases: &mut usize) -> Check {
    *cases += 1;
    let g = crystal_graph(shape, m).map_err(|e| format!("shape {shape}, m={m}: {e}"))?;
    let mut weights = crate::symfunc::SchurExpansion::default();
    for comp in &g.components {
        let tops: Vec<usize> = comp
            .vertices
            .iter()
            .copied()
            .filter(|&v| (1..m).all(|i| matches!(raise_rpp(&g.vertices[v], i), Ok(None))))
            .collect();
        let top = &g.vertices[comp.highest];
        ensure(tops == vec![comp.highest], || witness(shape, m, top, format!("highest vertices {tops:?}")))?;
        ensure(is_lattice(&reading_word(top)), || witness(shape, m, top, "highest word is not lattice"))?;
        let wt = rpp_weight(top);
        ensure(Partition::from_weight(&wt).as_ref() == Some(&comp.weight), || {
            witness(shape, m, top, format!("weight {wt:?} is not a partition"))
        })?;
        let mut sum = SparsePoly::zero(m as usize, 0);
        for &v in &comp.vertices {
            sum.add_term(rpp_weight(&g.vertices[v]), 1);
        }
        let s = schur(&comp.weight, m);
        ensure(sum == s, || witness(shape, m, top, format!("component character {sum} != s_{}", comp.weight)))?;
        weights.add(comp.weight.clone(), 1);
    }
    let h = h_coeffs(shape, m);
    ensure(weights == h, || format!("shape {shape}, m={m}: component weights {weights:?} vs h {h:?}"))
}

fn check_elegant(shape: &SkewShape, m: u32, cases: &mut usize) -> Check {
    if !shape.inner().is_empty() {
        return Ok(());
    }
    *cases += 1;
    let outer = shape.outer();
    let h = h_coeffs(shape, m);
    for nu in outer.subpartitions() {
        if nu.len() > m as usize {
            continue;
        }
        let (hv, f) = (h.get(&nu), elegant_count(outer, &nu));
        ensure(hv == f.into(), || format!("shape {shape}, m={m}, ν={nu}: h = {hv}, elegant = {f}"))?;
    }
    ensure(h.0.keys().all(|nu| outer.contains(nu)), || format!("shape {shape}, m={m}: h has ν outside λ"))
}

fn check_symmetry(shape: &SkewShape, m: u32, cases: &mut usize) -> Check {
    *cases += 1;
    let g = g_poly(shape, m);
    for j in 1..m as usize {
        ensure(g.swap_x(j) == g, || format!("shape {shape}, m={m}: g not symmetric in x{j}, x{}", j + 1))?;
    }
    Ok(())
}

fn check_top(shape: &SkewShape, m: u32, cases: &mut usize) -> Check {
    *cases += 1;
    let top = g_poly(shape, m).homogeneous_part(shape.size() as u32);
    let s = skew_schur(shape, m);
    ensure(top == s, || format!("shape {shape}, m={m}: top part {top} != skew Schur {s}"))?;
    let expanded = expand_in_schur(&s, m).map_err(|e| format!("shape {shape}, m={m}: {e}"))?;
    let lr = lr_classical(shape).truncate_rows(m as usize);
    ensure(expanded == lr, || format!("shape {shape}, m={m}: skew Schur expansion {expanded:?} vs LR {lr:?}"))
}

fn check_stability(shape: &SkewShape, m: u32, cases: &mut usize) -> Check {
    *cases += 1;
    let small = h_coeffs(shape, m);
    let big = h_coeffs(shape, m + 1).truncate_rows(m as usize);
    ensure(small == big, || format!("shape {shape}: h at m={m} is {small:?}, at m={} is {big:?}", m + 1))
}
