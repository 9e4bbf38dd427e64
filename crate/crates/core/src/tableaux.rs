//! Tableaux on skew shapes and the Littlewood-Richardson enumerator.
//!
//! The enumerator walks the cells of a skew shape in reading order (rows top
//! to bottom, each row right to left) and assigns values depth-first. In that
//! order the right-hand neighbour and the cell above are always filled before
//! the current cell, so row weak increase, column strict increase and the
//! lattice condition on the reading word are all checked incrementally.

use std::collections::HashMap;
use std::fmt;

use crate::error::{precondition, Error, Result};
use crate::shapes::{
    contains, staircase_with_foundation, Composition, Partition, SkewShape,
};

/// A skew shape with one positive integer per box. Semistandardness is not
/// enforced; see [`is_semistandard`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn new(shape: SkewShape, rows: Vec<Vec<u32>>) -> Result<Self> {
        if rows.len() != shape.num_rows() {
            return Err(precondition(format!(
                "tableau has {} rows but shape {shape} has {}",
                rows.len(),
                shape.num_rows()
            )));
        }
        for (i, (row, (a, b))) in rows.iter().zip(shape.rows()).enumerate() {
            if row.len() != (b - a) as usize {
                return Err(precondition(format!(
                    "row {i} holds {} entries but the shape has {} boxes there",
                    row.len(),
                    b - a
                )));
            }
            if row.contains(&0) {
                return Err(precondition("tableau entries must be positive"));
            }
        }
        Ok(Tableau { shape, rows })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entry in row `r`, column `c` (absolute column index), if the box exists.
    pub fn get(&self, r: usize, c: u32) -> Option<u32> {
        let (a, b) = self.shape.row(r);
        (a <= c && c < b).then(|| self.rows[r][(c - a) as usize])
    }
}

/// One line per row; boxes of the inner shape are drawn as `.`.
impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (row, (a, _)) in self.rows.iter().zip(self.shape.rows()) {
            let cells = std::iter::repeat_n(".".to_string(), a as usize)
                .chain(row.iter().map(u32::to_string));
            writeln!(f, "{}", cells.collect::<Vec<_>>().join(" "))?;
        }
        Ok(())
    }
}

/// Multiplicities of the values in a tableau: `counts()[j]` is the number of
/// entries equal to `j + 1`. Trailing zeros are trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Content(Vec<u32>);

impl Content {
    pub fn from_counts(mut counts: Vec<u32>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        Content(counts)
    }

    pub fn counts(&self) -> &[u32] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().map(|&c| c as usize).sum()
    }

    /// The content as a partition, when it is weakly decreasing.
    pub fn as_partition(&self) -> Option<Partition> {
        Partition::new(self.0.clone()).ok().filter(|p| p.len() == self.0.len())
    }
}

/// Rows read right to left, top row first.
pub fn reading_word(t: &Tableau) -> Vec<u32> {
    t.rows.iter().flat_map(|row| row.iter().rev().copied()).collect()
}

/// Every prefix holds at least as many `j`s as `j + 1`s.
pub fn is_lattice(word: &[u32]) -> bool {
    let mut counts: Vec<u32> = Vec::new();
    for &v in word {
        let v = v as usize;
        if v == 0 {
            return false;
        }
        if counts.len() <= v {
            counts.resize(v + 1, 0);
        }
        counts[v] += 1;
        if v > 1 && counts[v] > counts[v - 1] {
            return false;
        }
    }
    true
}

/// Rows weakly increase and columns strictly increase.
pub fn is_semistandard(t: &Tableau) -> bool {
    let rows_ok = t.rows.iter().all(|row| row.windows(2).all(|w| w[0] <= w[1]));
    rows_ok
        && t.shape.cells().all(|(r, c)| {
            r == 0
                || match t.get(r - 1, c) {
                    Some(above) => above < t.get(r, c).unwrap(),
                    None => true,
                }
        })
}

pub fn content(t: &Tableau) -> Content {
    let mut counts = Vec::new();
    for &v in t.rows.iter().flatten() {
        let v = v as usize;
        if counts.len() < v {
            counts.resize(v, 0);
        }
        counts[v - 1] += 1;
    }
    Content::from_counts(counts)
}

/// Cell geometry in reading order.
#[derive(Clone, Debug)]
struct ReadingCell {
    row: usize,
    /// Index of the right-hand neighbour in reading order.
    right: Option<usize>,
    /// Index of the cell directly above in reading order.
    above: Option<usize>,
}

fn reading_cells(shape: &SkewShape) -> Vec<ReadingCell> {
    let mut index_of: HashMap<(usize, u32), usize> = HashMap::new();
    let mut cells = Vec::with_capacity(shape.size());
    for (r, (a, b)) in shape.rows().enumerate() {
        for c in (a..b).rev() {
            let idx = cells.len();
            index_of.insert((r, c), idx);
            cells.push(ReadingCell {
                row: r,
                right: (c + 1 < b).then(|| idx - 1),
                above: if r > 0 { index_of.get(&(r - 1, c)).copied() } else { None },
            });
        }
    }
    cells
}

/// Depth-first search over lattice semistandard fillings of a shape. Each
/// call to [`LrSearch::advance`] moves to the next complete filling.
pub(crate) struct LrSearch {
    cells: Vec<ReadingCell>,
    values: Vec<u32>,
    /// `counts[v]` is the number of placed entries equal to `v`; index 0 unused.
    counts: Vec<u32>,
    /// Number of distinct values placed; lattice words use exactly `1..=distinct`.
    distinct: u32,
    depth: usize,
    started: bool,
    done: bool,
    target: Option<Vec<u32>>,
    nodes: u64,
    limit: Option<u64>,
}

impl LrSearch {
    /// `target` restricts the search to one content.
    pub(crate) fn new(shape: &SkewShape, target: Option<&Partition>, limit: Option<u64>) -> Self {
        let cells = reading_cells(shape);
        let n = cells.len();
        let mut done = false;
        let target = target.map(|nu| {
            if nu.size() != n {
                done = true;
            }
            let mut t = vec![0];
            t.extend_from_slice(nu.parts());
            t
        });
        LrSearch {
            cells,
            values: vec![0; n],
            counts: vec![0; n + 2],
            distinct: 0,
            depth: 0,
            started: false,
            done,
            target,
            nodes: 0,
            limit,
        }
    }

    fn place(&mut self, v: u32) {
        self.values[self.depth] = v;
        let c = &mut self.counts[v as usize];
        if *c == 0 {
            self.distinct += 1;
        }
        *c += 1;
    }

    fn unplace(&mut self) {
        let v = self.values[self.depth] as usize;
        self.counts[v] -= 1;
        if self.counts[v] == 0 {
            self.distinct -= 1;
        }
    }

    /// Smallest admissible value at the current cell that is greater than
    /// `after`.
    fn next_candidate(&self, after: u32) -> Option<u32> {
        let cell = &self.cells[self.depth];
        let lo = match cell.above {
            Some(i) => self.values[i] + 1,
            None => 1,
        }
        .max(after + 1);
        let mut hi = self.distinct + 1;
        if let Some(i) = cell.right {
            hi = hi.min(self.values[i]);
        }
        if let Some(t) = &self.target {
            hi = hi.min(t.len() as u32 - 1);
        }
        (lo..=hi).find(|&v| {
            let v = v as usize;
            let lattice = v == 1 || self.counts[v - 1] > self.counts[v];
            let fits = self.target.as_ref().is_none_or(|t| self.counts[v] < t[v]);
            lattice && fits
        })
    }

    /// Advances to the next complete filling. Returns `Ok(false)` once the
    /// search space is exhausted.
    pub(crate) fn advance(&mut self) -> Result<bool> {
        if self.done {
            return Ok(false);
        }
        let n = self.cells.len();
        if n == 0 {
            self.done = true;
            return Ok(!std::mem::replace(&mut self.started, true));
        }
        let mut after = if self.started {
            self.depth = n - 1;
            self.unplace();
            self.values[self.depth]
        } else {
            self.started = true;
            0
        };
        loop {
            match self.next_candidate(after) {
                Some(v) => {
                    self.place(v);
                    self.nodes += 1;
                    if let Some(limit) = self.limit {
                        if self.nodes > limit {
                            self.done = true;
                            return Err(Error::LimitExceeded(limit));
                        }
                    }
                    if self.depth + 1 == n {
                        return Ok(true);
                    }
                    self.depth += 1;
                    after = 0;
                }
                None => {
                    if self.depth == 0 {
                        self.done = true;
                        return Ok(false);
                    }
                    self.depth -= 1;
                    self.unplace();
                    after = self.values[self.depth];
                }
            }
        }
    }

    /// Content of the current complete filling, as counts of `1, 2, ...`.
    pub(crate) fn current_content(&self) -> &[u32] {
        &self.counts[1..=self.distinct as usize]
    }

    fn current_rows(&self, shape: &SkewShape) -> Vec<Vec<u32>> {
        let mut rows: Vec<Vec<u32>> = shape.rows().map(|(a, b)| Vec::with_capacity((b - a) as usize)).collect();
        for (cell, &v) in self.cells.iter().zip(&self.values) {
            rows[cell.row].push(v);
        }
        for row in &mut rows {
            row.reverse();
        }
        rows
    }
}

/// Iterator over every semistandard filling of a shape whose reading word is
/// lattice. Fillings come out in a fixed order: cells in reading order,
/// candidate values ascending.
pub struct LrFillings {
    shape: SkewShape,
    search: LrSearch,
}

impl Iterator for LrFillings {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        match self.search.advance() {
            Ok(true) => Some(Tableau {
                shape: self.shape.clone(),
                rows: self.search.current_rows(&self.shape),
            }),
            _ => None,
        }
    }
}

pub fn enumerate_lr_fillings(shape: &SkewShape) -> LrFillings {
    LrFillings {
        shape: shape.clone(),
        search: LrSearch::new(shape, None, None),
    }
}

/// Number of lattice semistandard fillings of `shape` grouped by content,
/// optionally aborting after `limit` search nodes.
pub fn lr_counts_by_content(
    shape: &SkewShape,
    limit: Option<u64>,
) -> Result<HashMap<Partition, u64>> {
    let mut search = LrSearch::new(shape, None, limit);
    let mut raw: HashMap<Vec<u32>, u64> = HashMap::new();
    while search.advance()? {
        let key = search.current_content();
        match raw.get_mut(key) {
            Some(c) => {
                *c = c.checked_add(1).ok_or(Error::Overflow("counting fillings"))?;
            }
            None => {
                raw.insert(key.to_vec(), 1);
            }
        }
    }
    raw.into_iter()
        .map(|(k, v)| Ok((Partition::new(k)?, v)))
        .collect()
}

/// Number of lattice semistandard fillings of `shape` with content `nu`.
pub fn count_lr_fillings_with_content(
    shape: &SkewShape,
    nu: &Partition,
    limit: Option<u64>,
) -> Result<u64> {
    let mut search = LrSearch::new(shape, Some(nu), limit);
    let mut count = 0u64;
    while search.advance()? {
        count = count.checked_add(1).ok_or(Error::Overflow("counting fillings"))?;
    }
    Ok(count)
}

/// The Littlewood-Richardson coefficient `c^{outer}_{inner, nu}`.
pub fn lr_coefficient(outer: &Partition, inner: &Partition, nu: &Partition) -> Result<u64> {
    if !contains(inner, outer) {
        return Err(Error::NotContained {
            inner: inner.to_string(),
            outer: outer.to_string(),
        });
    }
    if outer.size() != inner.size() + nu.size() {
        return Ok(0);
    }
    let shape = SkewShape::new(outer.clone(), inner.clone())?;
    count_lr_fillings_with_content(&shape, nu, None)
}

/// The unique lattice semistandard filling of the rotated fat staircase:
/// each column of length `l` holds `1, 2, ..., l` from top to bottom.
pub fn unique_staircase_filling(alpha: &Composition) -> Result<Tableau> {
    let shape = staircase_with_foundation(&Partition::empty(), alpha, 0)?;
    let n = shape.width();
    // first_row[c]: topmost row containing column c
    let mut first_row = vec![usize::MAX; n as usize];
    let rows = shape
        .rows()
        .enumerate()
        .map(|(r, (a, b))| {
            (a..b)
                .map(|c| {
                    let top = &mut first_row[c as usize];
                    if *top == usize::MAX {
                        *top = r;
                    }
                    (r - *top) as u32 + 1
                })
                .collect()
        })
        .collect();
    Tableau::new(shape, rows)
}

/// The admissible first-row values for the foundation of a lattice filling:
/// the partial sums `1 + α_n + ... + α_{n+1-j}`, plus the value 1 (at most
/// `k` times) when `k > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RSet {
    pub values: Vec<u32>,
    pub one_multiplicity: u32,
}

impl RSet {
    /// The `k` ones followed by the remaining values in increasing order.
    pub fn sequence(&self) -> Vec<u32> {
        let mut seq = vec![1; self.one_multiplicity as usize];
        seq.extend(&self.values);
        seq
    }

    pub fn admits(&self, v: u32) -> bool {
        (v == 1 && self.one_multiplicity > 0) || self.values.binary_search(&v).is_ok()
    }
}

pub fn r_set(alpha: &Composition, k: u32) -> Result<RSet> {
    if alpha.is_empty() {
        return Err(precondition("r_set needs a nonempty composition"));
    }
    let values = alpha
        .parts()
        .iter()
        .rev()
        .scan(1, |acc, &a| {
            *acc += a;
            Some(*acc)
        })
        .collect();
    Ok(RSet {
        values,
        one_multiplicity: k,
    })
}

fn check_rows_match(t: &Tableau, shape: &SkewShape) -> Result<()> {
    if t.shape() != shape {
        return Err(precondition(format!(
            "tableau shape {} does not match the expected shape {shape}",
            t.shape()
        )));
    }
    Ok(())
}

/// Moves the foundation of a lattice filling of `λ ⊕ Δ_α` to the right so it
/// sits under the staircase with overlap `λ_1 - k`. Row contents are kept.
pub fn shift_join(t: &Tableau, lambda: &Partition, alpha: &Composition, k: u32) -> Result<Tableau> {
    let disjoint = staircase_with_foundation(lambda, alpha, lambda.first())?;
    check_rows_match(t, &disjoint)?;
    let target = staircase_with_foundation(lambda, alpha, k)?;
    if !is_semistandard(t) || !is_lattice(&reading_word(t)) {
        return Err(precondition("shift_join needs a lattice semistandard tableau"));
    }
    if let Some(first) = t.rows().get(alpha.size()) {
        let ones = first.iter().filter(|&&v| v == 1).count();
        if ones > k as usize {
            return Err(precondition(format!(
                "foundation's first row holds {ones} ones, more than k = {k}"
            )));
        }
    }
    Tableau::new(target, t.rows().to_vec())
}

/// Inverse of [`shift_join`]: slides the foundation left until it no longer
/// shares a column with the staircase.
pub fn unshift_join(t: &Tableau, lambda: &Partition, alpha: &Composition, k: u32) -> Result<Tableau> {
    let joined = staircase_with_foundation(lambda, alpha, k)?;
    check_rows_match(t, &joined)?;
    let disjoint = staircase_with_foundation(lambda, alpha, lambda.first())?;
    Tableau::new(disjoint, t.rows().to_vec())
}
