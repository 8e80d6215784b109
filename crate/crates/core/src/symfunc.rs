//! Exact sparse polynomials and the symmetric functions built from
//! tableaux: Schur, skew Schur, dual stable Grothendieck `g_{λ/μ}` and its
//! `t`-refinement, plus the coefficient rules for their Schur expansions.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::reading::reading_word;
use crate::shapes::{graded_desc, Partition, SkewShape};
use crate::tableaux::{ceq, enumerate_elegant, enumerate_rpp, enumerate_ssyt, rpp_weight, Filling};
use crate::word_crystal::is_lattice;

/// A polynomial in `x_1..x_m` and `t_1..t_k` with arbitrary-size integer
/// coefficients. Exponent vectors have length `m + k`, x-part first; zero
/// coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparsePoly {
    x_vars: usize,
    t_vars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

/// Total degree first, then lexicographic.
pub fn graded_lex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

impl SparsePoly {
    pub fn zero(x_vars: usize, t_vars: usize) -> Self {
        SparsePoly {
            x_vars,
            t_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(x_vars: usize, t_vars: usize) -> Self {
        let mut p = Self::zero(x_vars, t_vars);
        p.add_term(vec![0; x_vars + t_vars], BigInt::one());
        p
    }

    pub fn x_vars(&self) -> usize {
        self.x_vars
    }

    pub fn t_vars(&self) -> usize {
        self.t_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, coeff: impl Into<BigInt>) {
        assert_eq!(exps.len(), self.x_vars + self.t_vars, "exponent vector length");
        let coeff = coeff.into();
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Greatest exponent in graded-lex order with its coefficient.
    pub fn leading_term(&self) -> Option<(&Vec<u32>, &BigInt)> {
        self.terms.iter().max_by(|a, b| graded_lex(a.0, b.0))
    }

    /// Terms in descending graded-lex order.
    pub fn sorted_terms(&self) -> Vec<(&Vec<u32>, &BigInt)> {
        let mut ts: Vec<_> = self.terms.iter().collect();
        ts.sort_by(|a, b| graded_lex(b.0, a.0));
        ts
    }

    /// The part of total x-degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> SparsePoly {
        let mut out = Self::zero(self.x_vars, self.t_vars);
        for (e, c) in &self.terms {
            if e[..self.x_vars].iter().sum::<u32>() == d {
                out.terms.insert(e.clone(), c.clone());
            }
        }
        out
    }

    /// Exchanges `x_j` and `x_{j+1}` (1-based `j`).
    pub fn swap_x(&self, j: usize) -> SparsePoly {
        let mut out = Self::zero(self.x_vars, self.t_vars);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            e.swap(j - 1, j);
            out.terms.insert(e, c.clone());
        }
        out
    }

    /// Sets every `t_k` to 1.
    pub fn t_to_one(&self) -> SparsePoly {
        let mut out = Self::zero(self.x_vars, 0);
        for (e, c) in &self.terms {
            out.add_term(e[..self.x_vars].to_vec(), c.clone());
        }
        out
    }

    /// Multiplies by `t^alpha`, first appending `t_vars` t-variables.
    pub fn times_t_monomial(&self, t_vars: usize, alpha: &[u32]) -> SparsePoly {
        assert!(self.t_vars == 0 && alpha.len() <= t_vars, "t-monomial does not fit");
        let mut out = Self::zero(self.x_vars, t_vars);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            e.resize(self.x_vars + t_vars, 0);
            for (k, &a) in alpha.iter().enumerate() {
                e[self.x_vars + k] += a;
            }
            out.terms.insert(e, c.clone());
        }
        out
    }

    fn same_ring(&self, other: &SparsePoly) {
        assert!(
            self.x_vars == other.x_vars && self.t_vars == other.t_vars,
            "polynomials live in different rings"
        );
    }

    fn monomial_string(&self, e: &[u32]) -> String {
        let x = e[..self.x_vars].iter().enumerate().map(|(k, &a)| ("x", k, a));
        let t = e[self.x_vars..].iter().enumerate().map(|(k, &a)| ("t", k, a));
        x.chain(t)
            .filter(|&(_, _, a)| a > 0)
            .map(|(name, k, a)| format!("{name}{}^{a}", k + 1))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .sorted_terms()
            .into_iter()
            .map(|(e, c)| json!({"exponents": e, "coefficient": bigint_json(c)}))
            .collect();
        json!({"x_vars": self.x_vars, "t_vars": self.t_vars, "terms": terms})
    }
}

pub(crate) fn bigint_json(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(v) => json!(v),
        None => json!(c.to_string()),
    }
}

/// `c * x1^a1 x2^a2 t1^b1 + ...`, terms in descending graded-lex order.
impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let mono = self.monomial_string(e);
            let abs = c.abs();
            let body = if mono.is_empty() { abs.to_string() } else { format!("{abs} * {mono}") };
            match (k, c.is_negative()) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

impl Add for &SparsePoly {
    type Output = SparsePoly;

    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        self.same_ring(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;

    fn neg(self) -> SparsePoly {
        SparsePoly {
            x_vars: self.x_vars,
            t_vars: self.t_vars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Sub for &SparsePoly {
    type Output = SparsePoly;

    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        self + &(-rhs)
    }
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;

    // Exponents add when monomials multiply.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        self.same_ring(rhs);
        let mut out = SparsePoly::zero(self.x_vars, self.t_vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Mul<&BigInt> for &SparsePoly {
    type Output = SparsePoly;

    fn mul(self, rhs: &BigInt) -> SparsePoly {
        let mut out = SparsePoly::zero(self.x_vars, self.t_vars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c * rhs);
        }
        out
    }
}

/// Coefficients in the Schur basis, keyed by partition.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchurExpansion(pub BTreeMap<Partition, BigInt>);

impl SchurExpansion {
    pub fn get(&self, nu: &Partition) -> BigInt {
        self.0.get(nu).cloned().unwrap_or_default()
    }

    pub fn add(&mut self, nu: Partition, c: impl Into<BigInt>) {
        let slot = self.0.entry(nu.clone()).or_default();
        *slot += c.into();
        if slot.is_zero() {
            self.0.remove(&nu);
        }
    }

    /// Entries ordered by partition size, then lexicographically, largest first.
    pub fn sorted(&self) -> Vec<(&Partition, &BigInt)> {
        let mut v: Vec<_> = self.0.iter().collect();
        v.sort_by(|a, b| graded_desc(a.0, b.0));
        v
    }

    /// Drops partitions with more than `rows` parts.
    pub fn truncate_rows(&self, rows: usize) -> SchurExpansion {
        SchurExpansion(self.0.iter().filter(|(p, _)| p.len() <= rows).map(|(p, c)| (p.clone(), c.clone())).collect())
    }

    /// `Σ c_ν s_ν` in `m` variables.
    pub fn to_poly(&self, m: u32) -> SparsePoly {
        let mut out = SparsePoly::zero(m as usize, 0);
        for (nu, c) in &self.0 {
            out = &out + &(&schur(nu, m) * c);
        }
        out
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.sorted()
                .into_iter()
                .map(|(p, c)| json!({"partition": p.parts(), "coefficient": bigint_json(c)}))
                .collect(),
        )
    }
}

/// One `ν : c` line per partition, `ν` in comma form.
impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (p, c)) in self.sorted().into_iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "{} : {}", p.to_comma_string(), c)?;
        }
        Ok(())
    }
}

/// Counts keyed by `(ν, α)` with `α` a trimmed weak composition.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RefinedExpansion(pub BTreeMap<(Partition, Vec<u32>), u64>);

impl RefinedExpansion {
    /// Sums over `α`.
    pub fn marginal(&self) -> SchurExpansion {
        let mut out = SchurExpansion::default();
        for ((nu, _), &c) in &self.0 {
            out.add(nu.clone(), c);
        }
        out
    }

    /// `Σ t^α h^{ν,α} s_ν` with `t_vars` t-variables.
    pub fn to_poly(&self, m: u32, t_vars: usize) -> SparsePoly {
        let mut out = SparsePoly::zero(m as usize, t_vars);
        for ((nu, alpha), &c) in &self.0 {
            let term = &schur(nu, m).times_t_monomial(t_vars, alpha) * &BigInt::from(c);
            out = &out + &term;
        }
        out
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.0
                .iter()
                .map(|((p, a), c)| json!({"partition": p.parts(), "ceq": a, "count": c}))
                .collect(),
        )
    }
}

impl fmt::Display for RefinedExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut rows: Vec<_> = self.0.iter().collect();
        rows.sort_by(|a, b| graded_desc(&a.0 .0, &b.0 .0).then_with(|| a.0 .1.cmp(&b.0 .1)));
        for (k, ((p, alpha), c)) in rows.into_iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "{} | ceq ({}) : {}", p.to_comma_string(), crate::shapes::join(alpha), c)?;
        }
        Ok(())
    }
}

fn content(t: &Filling) -> Vec<u32> {
    let mut w = vec![0; t.max_entry() as usize];
    for v in t.entries() {
        w[v as usize - 1] += 1;
    }
    w
}

/// Schur polynomial `s_ν(x_1..x_m)` as the SSYT generating function.
pub fn schur(nu: &Partition, m: u32) -> SparsePoly {
    skew_schur(&SkewShape::straight(nu.clone()), m)
}

pub fn skew_schur(shape: &SkewShape, m: u32) -> SparsePoly {
    let mut out = SparsePoly::zero(m as usize, 0);
    for t in enumerate_ssyt(shape, m) {
        out.add_term(content(&t), 1);
    }
    out
}

/// `g_{λ/μ}(x_1..x_m) = Σ_T x^T` over reverse plane partitions.
pub fn g_poly(shape: &SkewShape, m: u32) -> SparsePoly {
    let mut out = SparsePoly::zero(m as usize, 0);
    for t in enumerate_rpp(shape, m) {
        out.add_term(rpp_weight(&t), 1);
    }
    out
}

/// Number of t-variables for the refined polynomial of a shape.
pub fn t_var_count(shape: &SkewShape) -> usize {
    shape.num_rows().saturating_sub(1)
}

/// `Σ_T x^T t^{ceq(T)}`.
pub fn g_refined(shape: &SkewShape, m: u32) -> SparsePoly {
    let k = t_var_count(shape);
    let mut out = SparsePoly::zero(m as usize, k);
    for t in enumerate_rpp(shape, m) {
        let mut e = rpp_weight(&t);
        let mut c = ceq(&t);
        c.resize(k, 0);
        e.extend(c);
        out.add_term(e, 1);
    }
    out
}

/// Expands a symmetric polynomial in Schur polynomials by repeatedly
/// subtracting `c · s_ν` for the graded-lex leading term `c · x^ν`.
pub fn expand_in_schur(p: &SparsePoly, m: u32) -> Result<SchurExpansion> {
    if p.t_vars() != 0 {
        return Err(Error::InvalidArgument("expand_in_schur takes polynomials without t-variables".into()));
    }
    if p.x_vars() != m as usize {
        return Err(Error::InvalidArgument(format!("polynomial has {} variables, expected {m}", p.x_vars())));
    }
    let mut cache: HashMap<Partition, SparsePoly> = HashMap::new();
    let mut rest = p.clone();
    let mut out = SchurExpansion::default();
    while let Some((lead, c)) = rest.leading_term() {
        let nu = Partition::from_weight(lead).ok_or_else(|| Error::NotSymmetric(lead.clone()))?;
        let c = c.clone();
        let s = cache.entry(nu.clone()).or_insert_with(|| schur(&nu, m));
        rest = &rest - &(&*s * &c);
        out.add(nu, c);
    }
    Ok(out)
}

/// Reverse plane partitions with a lattice reading word, counted by weight.
pub fn h_coeffs(shape: &SkewShape, m: u32) -> SchurExpansion {
    let mut out = SchurExpansion::default();
    for t in enumerate_rpp(shape, m) {
        if is_lattice(&reading_word(&t)) {
            let nu = Partition::from_weight(&rpp_weight(&t)).expect("lattice words have partition weight");
            out.add(nu, 1);
        }
    }
    out
}

/// As [`h_coeffs`], additionally split by `ceq`.
pub fn h_coeffs_refined(shape: &SkewShape, m: u32) -> RefinedExpansion {
    let mut out = RefinedExpansion::default();
    for t in enumerate_rpp(shape, m) {
        if is_lattice(&reading_word(&t)) {
            let nu = Partition::from_weight(&rpp_weight(&t)).expect("lattice words have partition weight");
            *out.0.entry((nu, ceq(&t))).or_default() += 1;
        }
    }
    out
}

/// Classical Littlewood-Richardson coefficients: semistandard tableaux of
/// the skew shape with a lattice reading word, counted by content.
pub fn lr_classical(shape: &SkewShape) -> SchurExpansion {
    let n = (shape.size() as u32).max(1);
    let mut out = SchurExpansion::default();
    for t in enumerate_ssyt(shape, n) {
        if is_lattice(&reading_word(&t)) {
            let nu = Partition::from_weight(&content(&t)).expect("lattice words have partition weight");
            out.add(nu, 1);
        }
    }
    out
}

/// Number of elegant fillings of `outer/nu`; zero when `nu` is not inside `outer`.
pub fn elegant_count(outer: &Partition, nu: &Partition) -> u64 {
    match enumerate_elegant(outer, nu) {
        Ok(it) => it.count() as u64,
        Err(_) => 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn shape(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    fn poly(m: usize, terms: &[(&[u32], i64)]) -> SparsePoly {
        let mut out = SparsePoly::zero(m, 0);
        for (e, c) in terms {
            out.add_term(e.to_vec(), *c);
        }
        out
    }

    fn expansion(entries: &[(&[u32], i64)]) -> SchurExpansion {
        let mut out = SchurExpansion::default();
        for (nu, c) in entries {
            out.add(p(nu), *c);
        }
        out
    }

    #[test]
    fn schur_examples() {
        assert_eq!(schur(&p(&[1]), 2), poly(2, &[(&[1, 0], 1), (&[0, 1], 1)]));
        assert_eq!(schur(&p(&[2, 1]), 2), poly(2, &[(&[2, 1], 1), (&[1, 2], 1)]));
        assert!(schur(&p(&[1, 1, 1]), 2).is_zero());
    }

    #[test]
    fn skew_schur_examples() {
        assert_eq!(skew_schur(&shape("2,1/1"), 2), poly(2, &[(&[2, 0], 1), (&[1, 1], 2), (&[0, 2], 1)]));
        assert_eq!(skew_schur(&shape("2,1/2,1"), 2), SparsePoly::one(2, 0));
        assert_eq!(skew_schur(&shape("2,2/1,1"), 2), poly(2, &[(&[1, 1], 1)]));
    }

    #[test]
    fn g_examples() {
        assert_eq!(g_poly(&shape("1"), 2), poly(2, &[(&[1, 0], 1), (&[0, 1], 1)]));
        assert_eq!(g_poly(&shape("1,1"), 2), poly(2, &[(&[1, 0], 1), (&[0, 1], 1), (&[1, 1], 1)]));
        let g22 = poly(
            2,
            &[(&[2, 0], 1), (&[1, 1], 1), (&[0, 2], 1), (&[2, 1], 1), (&[1, 2], 1), (&[2, 2], 1)],
        );
        assert_eq!(g_poly(&shape("2,2"), 2), g22);
    }

    #[test]
    fn refined_examples() {
        let row = shape("3");
        assert_eq!(g_refined(&row, 2), g_poly(&row, 2));
        let mut expected = SparsePoly::zero(2, 1);
        expected.add_term(vec![1, 0, 1], 1);
        expected.add_term(vec![1, 1, 0], 1);
        expected.add_term(vec![0, 1, 1], 1);
        assert_eq!(g_refined(&shape("1,1"), 2), expected);
        for s in ["2,2", "3,2,1/1", "2,2,1/1"] {
            assert_eq!(g_refined(&shape(s), 3).t_to_one(), g_poly(&shape(s), 3));
        }
    }

    #[test]
    fn expansion_examples() {
        let single = poly(2, &[(&[2, 2], 1)]);
        assert_eq!(expand_in_schur(&single, 2).unwrap(), expansion(&[(&[2, 2], 1)]));
        let expected = expansion(&[(&[2, 2], 1), (&[2, 1], 1), (&[2], 1)]);
        assert_eq!(expand_in_schur(&g_poly(&shape("2,2"), 2), 2).unwrap(), expected);
        let asym = poly(2, &[(&[1, 0], 1), (&[0, 1], -1)]);
        assert!(matches!(expand_in_schur(&asym, 2), Err(Error::NotSymmetric(_))));
        let neg = &schur(&p(&[1]), 2) - &schur(&p(&[2]), 2);
        assert_eq!(expand_in_schur(&neg, 2).unwrap(), expansion(&[(&[1], 1), (&[2], -1)]));
    }

    #[test]
    fn h_examples() {
        assert_eq!(h_coeffs(&shape("2,2"), 2), expansion(&[(&[2, 2], 1), (&[2, 1], 1), (&[2], 1)]));
        assert_eq!(h_coeffs(&shape("1,1"), 2), expansion(&[(&[1, 1], 1), (&[1], 1)]));
        assert_eq!(h_coeffs(&shape("2,1/1"), 2), expansion(&[(&[2], 1), (&[1, 1], 1)]));
        assert_eq!(h_coeffs(&shape("0"), 1), expansion(&[(&[], 1)]));
    }

    #[test]
    fn refined_h_examples() {
        let r = h_coeffs_refined(&shape("1,1"), 2);
        let mut expected = BTreeMap::new();
        expected.insert((p(&[1]), vec![1]), 1);
        expected.insert((p(&[1, 1]), vec![]), 1);
        assert_eq!(r.0, expected);
        assert!(h_coeffs_refined(&shape("4"), 3).0.keys().all(|(_, a)| a.is_empty()));
        for s in ["2,2", "3,2,1/1", "2,2,1/1"] {
            assert_eq!(h_coeffs_refined(&shape(s), 3).marginal(), h_coeffs(&shape(s), 3));
        }
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_classical(&shape("2,1/1")), expansion(&[(&[2], 1), (&[1, 1], 1)]));
        assert_eq!(lr_classical(&shape("3,1")), expansion(&[(&[3, 1], 1)]));
        assert_eq!(lr_classical(&shape("2,2/1,1")), expansion(&[(&[1, 1], 1)]));
        // removing one corner of (3,2,1)
        let lr = lr_classical(&shape("3,2,1/1"));
        assert_eq!(lr, expansion(&[(&[3, 2], 1), (&[3, 1, 1], 1), (&[2, 2, 1], 1)]));
    }

    #[test]
    fn elegant_examples() {
        assert_eq!(elegant_count(&p(&[2, 2]), &p(&[2, 1])), 1);
        assert_eq!(elegant_count(&p(&[2, 2]), &p(&[1, 1])), 0);
        assert_eq!(elegant_count(&p(&[3, 1]), &p(&[3, 1])), 1);
        assert_eq!(elegant_count(&p(&[2]), &p(&[3])), 0);
    }

    #[test]
    fn display_formats() {
        let g = g_poly(&shape("1,1"), 2);
        assert_eq!(g.to_string(), "1 * x1^1 x2^1 + 1 * x1^1 + 1 * x2^1");
        let d = &schur(&p(&[1]), 2) - &SparsePoly::one(2, 0);
        assert_eq!(d.to_string(), "1 * x1^1 + 1 * x2^1 - 1");
        assert_eq!(SparsePoly::zero(2, 0).to_string(), "0");
        assert_eq!(g_refined(&shape("1,1"), 2).to_string(), "1 * x1^1 x2^1 + 1 * x1^1 t1^1 + 1 * x2^1 t1^1");
        let e = expansion(&[(&[2], 1), (&[2, 2], 1), (&[2, 1], 1), (&[], 3)]);
        assert_eq!(e.to_string(), "2,2 : 1\n2,1 : 1\n2 : 1\n0 : 3");
        assert_eq!(
            e.to_json().to_string(),
            r#"[{"coefficient":1,"partition":[2,2]},{"coefficient":1,"partition":[2,1]},{"coefficient":1,"partition":[2]},{"coefficient":3,"partition":[]}]"#
        );
    }

    #[test]
    fn big_coefficients_stay_exact() {
        let x = poly(1, &[(&[1], 1), (&[0], 1)]);
        let mut acc = SparsePoly::one(1, 0);
        for _ in 0..80 {
            acc = &acc * &x;
        }
        // binomial(80, 40)
        let mid: BigInt = "107507208733336176461620".parse().unwrap();
        assert_eq!(acc.coefficient(&[40]), mid);
    }

    fn arb_poly() -> impl Strategy<Value = SparsePoly> {
        prop::collection::vec((prop::collection::vec(0u32..3, 2), -5i64..5), 0..6).prop_map(|ts| {
            let mut out = SparsePoly::zero(2, 0);
            for (e, c) in ts {
                out.add_term(e, c);
            }
            out
        })
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn schur_expansion_round_trip(coeffs in prop::collection::vec(-3i64..4, 5)) {
            let nus = [p(&[2, 1]), p(&[3]), p(&[1, 1]), p(&[2]), p(&[1])];
            let mut e = SchurExpansion::default();
            for (nu, c) in nus.iter().zip(coeffs) {
                e.add(nu.clone(), c);
            }
            prop_assert_eq!(expand_in_schur(&e.to_poly(3), 3).unwrap(), e);
        }
    }
}
