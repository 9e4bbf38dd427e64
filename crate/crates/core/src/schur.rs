//! Finite integer combinations of Schur functions, skew Schur expansions,
//! products, differences and the Schur-positivity order.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::shapes::{complement, Partition, Rectangle, SkewShape};
use crate::tableaux::{count_lr_fillings_with_content, lr_counts_by_content};

/// One term `coeff * s_partition`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub partition: Partition,
    pub coeff: i64,
}

/// A homogeneous integer combination of Schur functions. Zero coefficients
/// are never stored, so the zero function is the empty expansion.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, i64>,
}

impl SchurExpansion {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(lambda: Partition) -> Self {
        SchurExpansion {
            terms: BTreeMap::from([(lambda, 1)]),
        }
    }

    /// Collects terms, summing repeated partitions and dropping zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, i64)>) -> Result<Self> {
        let mut out = SchurExpansion::zero();
        for (lambda, c) in terms {
            out.add_term(lambda, c)?;
        }
        Ok(out)
    }

    fn add_term(&mut self, lambda: Partition, c: i64) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        if let Some(d) = self.degree() {
            if d != lambda.size() {
                return Err(Error::DegreeMismatch(d, lambda.size()));
            }
        }
        let entry = self.terms.entry(lambda);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o
                    .get()
                    .checked_add(c)
                    .ok_or(Error::Overflow("adding Schur coefficients"))?;
                if sum == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    /// Common size of the indexing partitions; `None` for the zero function.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next().map(Partition::size)
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

    pub fn coeff(&self, lambda: &Partition) -> i64 {
        self.terms.get(lambda).copied().unwrap_or(0)
    }

    /// Terms in descending lexicographic order of their partitions.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, i64)> + '_ {
        self.terms.iter().rev().map(|(p, &c)| (p, c))
    }

    pub fn to_terms(&self) -> Vec<Term> {
        self.iter()
            .map(|(p, c)| Term {
                partition: p.clone(),
                coeff: c,
            })
            .collect()
    }
}

impl Serialize for SchurExpansion {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_terms().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SchurExpansion {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<Term>::deserialize(deserializer)?;
        SchurExpansion::from_terms(terms.into_iter().map(|t| (t.partition, t.coeff)))
            .map_err(serde::de::Error::custom)
    }
}

/// `s(2) + s(1,1)`, `2*s(3) - s(2,1)`, `0` for the zero function; the empty
/// partition prints as `s(-)`.
impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (p, c)) in self.iter().enumerate() {
            let sign = match (i, c < 0) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            f.write_str(sign)?;
            if c.unsigned_abs() != 1 {
                write!(f, "{}*", c.unsigned_abs())?;
            }
            write!(f, "s({p})")?;
        }
        Ok(())
    }
}

fn to_coeff(n: u64) -> Result<i64> {
    i64::try_from(n).map_err(|_| Error::Overflow("converting a tableau count to a coefficient"))
}

/// The Schur expansion of `s_d`, read off one pass of the lattice filling
/// enumerator grouped by content.
pub fn skew_schur_expansion(d: &SkewShape) -> SchurExpansion {
    skew_schur_expansion_limited(d, None).expect("unlimited expansion cannot fail")
}

/// As [`skew_schur_expansion`], aborting once the search visits more than
/// `limit` nodes.
pub fn skew_schur_expansion_limited(d: &SkewShape, limit: Option<u64>) -> Result<SchurExpansion> {
    let counts = lr_counts_by_content(d, limit)?;
    let terms = counts
        .into_iter()
        .map(|(nu, c)| Ok((nu, to_coeff(c)?)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    Ok(SchurExpansion { terms })
}

/// Partitions of `inner.size() + extra` containing `inner`, with at most
/// `max_cols` boxes added per row and at most `max_rows` new rows.
fn partitions_above(inner: &Partition, extra: usize, max_cols: u32, max_rows: usize) -> Vec<Partition> {
    #[allow(clippy::too_many_arguments)]
    fn go(
        inner: &Partition,
        rows: usize,
        max_cols: u32,
        row: usize,
        left: u32,
        prev: u32,
        acc: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if left == 0 {
            let mut parts = acc.clone();
            parts.extend((row..inner.len()).map(|i| inner.part(i)));
            out.push(Partition::new(parts).expect("weakly decreasing by construction"));
            return;
        }
        if row == rows {
            return;
        }
        let base = inner.part(row);
        let hi = prev.min(base + max_cols).min(base + left);
        for v in (base..=hi).rev() {
            acc.push(v);
            go(inner, rows, max_cols, row + 1, left - (v - base), v, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    let rows = inner.len() + max_rows;
    go(inner, rows, max_cols, 0, extra as u32, u32::MAX, &mut Vec::new(), &mut out);
    out
}

/// The Schur expansion of `s_mu * s_nu`: the coefficient of `s_lambda` is the
/// number of lattice fillings of `lambda / big` with content `small`, where
/// `big` and `small` are the two factors ordered by size.
pub fn product_expansion(mu: &Partition, nu: &Partition) -> SchurExpansion {
    let (big, small) = if mu.size() >= nu.size() { (mu, nu) } else { (nu, mu) };
    let mut terms = BTreeMap::new();
    for lambda in partitions_above(big, small.size(), small.first(), small.len()) {
        let shape = SkewShape::new(lambda.clone(), big.clone()).expect("lambda contains big");
        let c = count_lr_fillings_with_content(&shape, small, None).expect("no limit");
        if c > 0 {
            terms.insert(lambda, to_coeff(c).expect("product coefficient fits in i64"));
        }
    }
    SchurExpansion { terms }
}

/// The product of two expansions, expanded term by term.
pub fn multiply(f: &SchurExpansion, g: &SchurExpansion) -> Result<SchurExpansion> {
    let mut out = SchurExpansion::zero();
    for (a, ca) in f.iter() {
        for (b, cb) in g.iter() {
            let scale = ca.checked_mul(cb).ok_or(Error::Overflow("multiplying expansions"))?;
            for (lambda, c) in product_expansion(a, b).iter() {
                let c = c.checked_mul(scale).ok_or(Error::Overflow("multiplying expansions"))?;
                out.add_term(lambda.clone(), c)?;
            }
        }
    }
    Ok(out)
}

/// `f - g`. Either side may be zero; otherwise the degrees must agree.
pub fn subtract(f: &SchurExpansion, g: &SchurExpansion) -> Result<SchurExpansion> {
    if let (Some(a), Some(b)) = (f.degree(), g.degree()) {
        if a != b {
            return Err(Error::DegreeMismatch(a, b));
        }
    }
    let mut out = f.clone();
    for (p, c) in g.iter() {
        let neg = c.checked_neg().ok_or(Error::Overflow("negating a coefficient"))?;
        out.add_term(p.clone(), neg)?;
    }
    Ok(out)
}

/// Whether every stored coefficient is positive. The zero function counts as
/// Schur-positive.
pub fn is_schur_positive(f: &SchurExpansion) -> bool {
    f.terms.values().all(|&c| c > 0)
}

/// Drops the terms whose partition does not fit in `rect` and re-indexes the
/// rest by their complement in `rect`.
pub fn truncated_complement(f: &SchurExpansion, rect: Rectangle) -> SchurExpansion {
    let terms = f
        .terms
        .iter()
        .filter(|(p, _)| rect.fits(p))
        .map(|(p, &c)| (complement(p, rect).expect("partition fits"), c))
        .collect();
    SchurExpansion { terms }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    FirstDominates,
    SecondDominates,
    Equal,
    Incomparable,
}

impl Verdict {
    /// `s_first - s_second` is Schur-positive (including zero).
    pub fn first_dominates(self) -> bool {
        matches!(self, Verdict::FirstDominates | Verdict::Equal)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::FirstDominates => "first-dominates",
            Verdict::SecondDominates => "second-dominates",
            Verdict::Equal => "equal",
            Verdict::Incomparable => "incomparable",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of comparing two Schur functions. `first_fails` is a negative term
/// of `first - second`, present exactly when the first does not dominate;
/// `second_fails` is the same for `second - first`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonResult {
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_fails: Option<Term>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub second_fails: Option<Term>,
}

/// Classifies `f - g` into the four verdicts.
pub fn compare_expansions(f: &SchurExpansion, g: &SchurExpansion) -> Result<ComparisonResult> {
    let diff = subtract(f, g)?;
    let first_negative = |e: &SchurExpansion| {
        e.iter().find(|&(_, c)| c < 0).map(|(p, c)| Term {
            partition: p.clone(),
            coeff: c,
        })
    };
    let first_fails = first_negative(&diff);
    let second_fails = diff.iter().find(|&(_, c)| c > 0).map(|(p, c)| Term {
        partition: p.clone(),
        coeff: -c,
    });
    let verdict = match (&first_fails, &second_fails) {
        (None, None) => Verdict::Equal,
        (None, Some(_)) => Verdict::FirstDominates,
        (Some(_), None) => Verdict::SecondDominates,
        (Some(_), Some(_)) => Verdict::Incomparable,
    };
    Ok(ComparisonResult {
        verdict,
        first_fails,
        second_fails,
    })
}

/// Compares `s_d1` with `s_d2`; the shapes must have equally many boxes.
pub fn compare(d1: &SkewShape, d2: &SkewShape) -> Result<ComparisonResult> {
    if d1.size() != d2.size() {
        return Err(Error::SizeMismatch(d1.size(), d2.size()));
    }
    compare_expansions(&skew_schur_expansion(d1), &skew_schur_expansion(d2))
}

/// Memo table of skew Schur expansions keyed by canonical shape, safe to
/// share across threads. An optional node limit applies to every expansion
/// it computes.
#[derive(Debug, Default)]
pub struct SchurCache {
    table: RwLock<HashMap<SkewShape, Arc<SchurExpansion>>>,
    limit: Option<u64>,
}

impl SchurCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_limit(limit: Option<u64>) -> Self {
        SchurCache {
            table: RwLock::default(),
            limit,
        }
    }

    pub fn expansion(&self, d: &SkewShape) -> Result<Arc<SchurExpansion>> {
        if let Some(e) = self.table.read().expect("cache lock poisoned").get(d) {
            return Ok(Arc::clone(e));
        }
        let e = Arc::new(skew_schur_expansion_limited(d, self.limit)?);
        self.table
            .write()
            .expect("cache lock poisoned")
            .insert(d.clone(), Arc::clone(&e));
        Ok(e)
    }

    /// Expands every shape, in parallel on the current rayon pool.
    pub fn expand_all(&self, shapes: &[SkewShape]) -> Result<Vec<Arc<SchurExpansion>>> {
        shapes.par_iter().map(|d| self.expansion(d)).collect()
    }

    pub fn compare(&self, d1: &SkewShape, d2: &SkewShape) -> Result<ComparisonResult> {
        if d1.size() != d2.size() {
            return Err(Error::SizeMismatch(d1.size(), d2.size()));
        }
        let (e1, e2) = (self.expansion(d1)?, self.expansion(d2)?);
        compare_expansions(&e1, &e2)
    }

    pub fn len(&self) -> usize {
        self.table.read().expect("cache lock poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
