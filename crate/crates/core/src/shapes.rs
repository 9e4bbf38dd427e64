//! Partitions, compositions and skew diagrams, together with the diagram
//! constructions used throughout the crate: rotation, direct sums, rectangle
//! complements, and fat staircases with a foundation attached underneath.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{precondition, Error, Result};

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.0
    }
}

impl From<Composition> for Vec<u32> {
    fn from(c: Composition) -> Vec<u32> {
        c.0
    }
}

impl TryFrom<Vec<u32>> for Composition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Composition::new(parts)
    }
}

/// A weakly decreasing sequence of positive integers. Zero parts are never
/// stored; the empty sequence is the empty partition.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition, trimming trailing zeros. Rejects sequences that
    /// increase anywhere.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
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

    /// The partition `(value^count)`.
    pub fn repeated(value: u32, count: usize) -> Self {
        if value == 0 {
            return Partition::empty();
        }
        Partition(vec![value; count])
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

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// Part `i` (zero-based), reading missing parts as zero.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// The largest part, or zero for the empty partition.
    pub fn first(&self) -> u32 {
        self.part(0)
    }

    /// True when `inner` fits inside `self` row by row.
    pub fn contains(&self, inner: &Partition) -> bool {
        contains(inner, self)
    }

    /// Parts of `self` followed by the parts of `other`, re-sorted.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts: Vec<u32> = self.0.iter().chain(other.0.iter()).copied().collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

/// `inner ⊆ outer`, comparing row by row with missing rows read as zero.
pub fn contains(inner: &Partition, outer: &Partition) -> bool {
    inner.len() <= outer.len() && inner.0.iter().zip(&outer.0).all(|(i, o)| i <= o)
}

/// A finite sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::ZeroPart(parts));
        }
        Ok(Composition(parts))
    }

    /// The composition `(1^n)`.
    pub fn ones(n: usize) -> Self {
        Composition(vec![1; n])
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

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }
}

/// A hook `(arm, 1^(leg-1))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Hook {
    pub arm: u32,
    pub leg: u32,
}

impl Hook {
    pub fn new(arm: u32, leg: u32) -> Result<Self> {
        if arm == 0 || leg == 0 {
            return Err(precondition("hook arm and leg must be positive"));
        }
        Ok(Hook { arm, leg })
    }

    /// Recognises a hook-shaped partition.
    pub fn from_partition(p: &Partition) -> Option<Hook> {
        if p.is_empty() || p.parts()[1..].iter().any(|&x| x != 1) {
            return None;
        }
        Some(Hook {
            arm: p.first(),
            leg: p.len() as u32,
        })
    }

    pub fn size(&self) -> u32 {
        self.arm + self.leg - 1
    }

    pub fn to_partition(&self) -> Partition {
        let mut parts = vec![self.arm];
        parts.extend(std::iter::repeat_n(1, self.leg as usize - 1));
        Partition(parts)
    }
}

/// All hooks with `h` boxes, in increasing arm order.
pub fn hooks_of_size(h: u32) -> Vec<Hook> {
    (1..=h).map(|arm| Hook { arm, leg: h + 1 - arm }).collect()
}

/// The `height × width` rectangle `(width^height)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Rectangle {
    pub width: u32,
    pub height: u32,
}

impl Rectangle {
    pub fn new(width: u32, height: u32) -> Self {
        Rectangle { width, height }
    }

    pub fn to_partition(&self) -> Partition {
        Partition::repeated(self.width, self.height as usize)
    }

    pub fn fits(&self, p: &Partition) -> bool {
        p.len() <= self.height as usize && p.first() <= self.width
    }
}

/// Complement of `rho` inside `rect`, rotated by 180 degrees so that it is
/// again a partition.
pub fn complement(rho: &Partition, rect: Rectangle) -> Result<Partition> {
    if !rect.fits(rho) {
        return Err(Error::NotContained {
            inner: rho.to_string(),
            outer: rect.to_partition().to_string(),
        });
    }
    let h = rect.height as usize;
    let parts = (0..h).map(|i| rect.width - rho.part(h - 1 - i)).collect();
    Partition::new(parts)
}

/// A skew diagram `outer / inner`, always held in canonical form: no empty
/// rows at the top or bottom, leftmost box in column 0, and any empty rows in
/// the middle pinned to the end of the row beneath them. Two skew shapes
/// compare equal exactly when they have the same set of boxes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !contains(&inner, &outer) {
            return Err(Error::NotContained {
                inner: inner.to_string(),
                outer: outer.to_string(),
            });
        }
        let rows = (0..outer.len())
            .map(|i| (inner.part(i), outer.part(i)))
            .collect();
        Ok(Self::from_rows(rows))
    }

    /// A straight shape `λ/∅`.
    pub fn straight(lambda: Partition) -> Self {
        SkewShape {
            outer: lambda,
            inner: Partition::empty(),
        }
    }

    /// Builds the canonical shape from per-row half-open column intervals.
    /// The intervals must already describe a skew diagram.
    fn from_rows(mut rows: Vec<(u32, u32)>) -> Self {
        while rows.last().is_some_and(|&(a, b)| a == b) {
            rows.pop();
        }
        let lead = rows.iter().take_while(|&&(a, b)| a == b).count();
        rows.drain(..lead);
        let Some(&(shift, _)) = rows.last() else {
            return SkewShape::default();
        };
        let mut below_end = 0;
        for row in rows.iter_mut().rev() {
            if row.0 == row.1 {
                *row = (below_end, below_end);
            } else {
                *row = (row.0 - shift, row.1 - shift);
            }
            below_end = row.1;
        }
        let outer = Partition(rows.iter().map(|r| r.1).collect());
        let mut inner: Vec<u32> = rows.iter().map(|r| r.0).collect();
        while inner.last() == Some(&0) {
            inner.pop();
        }
        SkewShape {
            outer,
            inner: Partition(inner),
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

    /// Width of the bounding box.
    pub fn width(&self) -> u32 {
        self.outer.first()
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// Column interval `[start, end)` of row `i`.
    pub fn row(&self, i: usize) -> (u32, u32) {
        (self.inner.part(i), self.outer.part(i))
    }

    pub fn rows(&self) -> impl DoubleEndedIterator<Item = (u32, u32)> + ExactSizeIterator + '_ {
        (0..self.num_rows()).map(|i| self.row(i))
    }

    /// Whether the box in row `r`, column `c` belongs to the shape.
    pub fn has_cell(&self, r: usize, c: u32) -> bool {
        let (a, b) = self.row(r);
        a <= c && c < b
    }

    /// Boxes as `(row, column)` pairs, row by row, left to right.
    pub fn cells(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.rows()
            .enumerate()
            .flat_map(|(r, (a, b))| (a..b).map(move |c| (r, c)))
    }

    /// Whether the shape is a straight shape `λ/∅`.
    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }
}

/// The 180 degree rotation of `d` inside its bounding box.
pub fn rotate180(d: &SkewShape) -> SkewShape {
    let w = d.width();
    let rows = d.rows().rev().map(|(a, b)| (w - b, w - a)).collect();
    SkewShape::from_rows(rows)
}

/// `d1 ⊕ d2`: `d2` sits above and to the right of `d1`, with the top-right
/// box of `d1` diagonally below-left of the bottom-left box of `d2`.
pub fn direct_sum(d1: &SkewShape, d2: &SkewShape) -> SkewShape {
    if d1.is_empty() {
        return d2.clone();
    }
    if d2.is_empty() {
        return d1.clone();
    }
    let shift = d1.width();
    let rows = d2
        .rows()
        .map(|(a, b)| (a + shift, b + shift))
        .chain(d1.rows())
        .collect();
    SkewShape::from_rows(rows)
}

/// Whether the boxes of `d` form one edge-connected piece. The empty shape
/// counts as connected.
pub fn is_connected(d: &SkewShape) -> bool {
    let cells: Vec<(usize, u32)> = d.cells().collect();
    let Some(&start) = cells.first() else {
        return true;
    };
    let mut seen = std::collections::HashSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some((r, c)) = queue.pop_front() {
        let mut neighbours = vec![(r + 1, c), (r, c + 1)];
        if r > 0 {
            neighbours.push((r - 1, c));
        }
        if c > 0 {
            neighbours.push((r, c - 1));
        }
        for (nr, nc) in neighbours {
            if d.has_cell(nr, nc) && seen.insert((nr, nc)) {
                queue.push_back((nr, nc));
            }
        }
    }
    seen.len() == cells.len()
}

/// The fat staircase partition with `alpha[i-1]` rows of length `i`, longest
/// rows first.
pub fn delta_fat(alpha: &Composition) -> Partition {
    let parts = alpha
        .parts()
        .iter()
        .enumerate()
        .rev()
        .flat_map(|(i, &mult)| std::iter::repeat_n(i as u32 + 1, mult as usize))
        .collect();
    Partition(parts)
}

/// The rotated fat staircase: right-justified, with the short rows on top.
pub fn delta_fat_rotated(alpha: &Composition) -> Result<SkewShape> {
    staircase_with_foundation(&Partition::empty(), alpha, 0)
}

/// The fat staircase with bad foundation: the rotated staircase for `alpha`
/// with `lambda` attached below it, their rows overlapping in exactly
/// `lambda_1 - k` columns. The foundation is flush with column 0 and the
/// staircase's bottom row spans columns `[k, n + k)`.
pub fn staircase_with_foundation(
    lambda: &Partition,
    alpha: &Composition,
    k: u32,
) -> Result<SkewShape> {
    if alpha.is_empty() {
        return Err(precondition("staircase needs a nonempty composition"));
    }
    let n = alpha.len() as u32;
    if lambda.first() > n + k {
        return Err(precondition(format!(
            "foundation {lambda} overlaps the staircase in more than n = {n} columns (k = {k})"
        )));
    }
    let mut rows = Vec::with_capacity(alpha.size() + lambda.len());
    for (i, &mult) in alpha.parts().iter().enumerate() {
        let start = n - 1 - i as u32 + k;
        rows.extend(std::iter::repeat_n((start, n + k), mult as usize));
    }
    rows.extend(lambda.parts().iter().map(|&p| (0, p)));
    Ok(SkewShape::from_rows(rows))
}

/// The reverse composition used for complements in a rectangle of width
/// `n + k`: the full reversal when `k = 1`, the reversal of all but the last
/// part when `k = 0`.
pub fn reverse_composition(alpha: &Composition, k: u32) -> Result<Composition> {
    let keep = match k {
        1 => alpha.len(),
        0 => alpha.len().saturating_sub(1),
        _ => return Err(precondition(format!("reverse composition needs k in {{0, 1}}, got {k}"))),
    };
    Ok(Composition(alpha.parts()[..keep].iter().rev().copied().collect()))
}
