//! Brute-force oracles, independent of the library's enumerator: they try
//! every arrangement of a content over the boxes and filter afterwards.

#![allow(dead_code)]

use std::collections::BTreeMap;

use rand::Rng;
use skew_schur::{Partition, SkewShape};

/// Partitions of `n`, largest first part first.
pub fn partitions_of(n: u32) -> Vec<Vec<u32>> {
    fn go(left: u32, max: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(acc.clone());
            return;
        }
        for v in (1..=left.min(max)).rev() {
            acc.push(v);
            go(left - v, v, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Partitions fitting in `width` columns and `height` rows, including the
/// empty one.
pub fn partitions_in_box(width: u32, height: u32) -> Vec<Vec<u32>> {
    fn go(width: u32, height: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        out.push(acc.clone());
        if acc.len() == height as usize {
            return;
        }
        let max = acc.last().copied().unwrap_or(width);
        for v in 1..=max {
            acc.push(v);
            go(width, height, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(width, height, &mut Vec::new(), &mut out);
    out
}

pub fn part(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

/// Every skew shape `λ/μ` with `λ` inside the box and at most `max_boxes`
/// boxes, each canonical shape listed once.
pub fn skew_shapes_in_box(width: u32, height: u32, max_boxes: usize) -> Vec<SkewShape> {
    let all = partitions_in_box(width, height);
    let mut seen = std::collections::BTreeSet::new();
    for outer in &all {
        for inner in &all {
            let o = part(outer);
            let i = part(inner);
            if !skew_schur::contains(&i, &o) || o.size() - i.size() > max_boxes {
                continue;
            }
            seen.insert(SkewShape::new(o, i).unwrap());
        }
    }
    seen.into_iter().collect()
}

/// Rearranges `v` into the next lexicographically larger permutation.
fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Whether a filling (row-major, cell by cell) is semistandard with a
/// lattice reading word.
fn is_lr_filling(rows: &[(u32, u32)], values: &[u32]) -> bool {
    let mut grid: Vec<Vec<Option<u32>>> = Vec::new();
    let mut idx = 0;
    for &(a, b) in rows {
        let mut row = vec![None; b as usize];
        for c in a..b {
            row[c as usize] = Some(values[idx]);
            idx += 1;
        }
        grid.push(row);
    }
    for (r, row) in grid.iter().enumerate() {
        for c in 0..row.len() {
            let Some(v) = row[c] else { continue };
            if c + 1 < row.len() && row[c + 1].is_some_and(|w| w < v) {
                return false;
            }
            if r > 0 {
                if let Some(Some(above)) = grid[r - 1].get(c) {
                    if *above >= v {
                        return false;
                    }
                }
            }
        }
    }
    let mut counts = vec![0u32; values.len() + 2];
    for row in &grid {
        for v in row.iter().rev().flatten() {
            let v = *v as usize;
            counts[v] += 1;
            if v > 1 && counts[v] > counts[v - 1] {
                return false;
            }
        }
    }
    true
}

/// Number of semistandard lattice fillings of the shape for every content.
/// Contents that are not partitions never give lattice words, so only
/// partition contents are tried.
pub fn naive_lr_counts(shape: &SkewShape) -> BTreeMap<Vec<u32>, u64> {
    let rows: Vec<(u32, u32)> = shape.rows().collect();
    let n = shape.size() as u32;
    let mut out = BTreeMap::new();
    for nu in partitions_of(n) {
        let mut values: Vec<u32> = nu
            .iter()
            .enumerate()
            .flat_map(|(i, &m)| std::iter::repeat_n(i as u32 + 1, m as usize))
            .collect();
        values.sort_unstable();
        let mut count = 0u64;
        loop {
            if is_lr_filling(&rows, &values) {
                count += 1;
            }
            if !next_permutation(&mut values) {
                break;
            }
        }
        if count > 0 {
            out.insert(nu, count);
        }
    }
    out
}

/// `c^{outer}_{inner, nu}` by brute force.
pub fn naive_lr_coefficient(outer: &[u32], inner: &[u32], nu: &[u32]) -> u64 {
    let shape = SkewShape::new(part(outer), part(inner)).unwrap();
    naive_lr_counts(&shape).get(nu).copied().unwrap_or(0)
}

/// A random partition with at most `max_size` boxes inside a `width x height`
/// box (possibly empty).
pub fn random_partition(rng: &mut impl Rng, width: u32, height: u32, max_size: u32) -> Vec<u32> {
    let mut parts = Vec::new();
    let mut left = max_size;
    let mut max = width;
    for _ in 0..height {
        let hi = max.min(left);
        if hi == 0 {
            break;
        }
        let v = rng.gen_range(0..=hi);
        if v == 0 {
            break;
        }
        parts.push(v);
        left -= v;
        max = v;
    }
    parts
}

/// A random sub-partition of `outer`.
pub fn random_sub_partition(rng: &mut impl Rng, outer: &[u32]) -> Vec<u32> {
    let mut parts = Vec::new();
    let mut max = u32::MAX;
    for &o in outer {
        let v = rng.gen_range(0..=o.min(max));
        if v == 0 {
            break;
        }
        parts.push(v);
        max = v;
    }
    parts
}

/// A random skew shape with between 1 and `max_boxes` boxes whose outer
/// partition fits in a `width x height` box.
pub fn random_skew_shape(rng: &mut impl Rng, width: u32, height: u32, max_boxes: usize) -> SkewShape {
    loop {
        let outer = random_partition(rng, width, height, 3 * max_boxes as u32);
        let inner = random_sub_partition(rng, &outer);
        let d = SkewShape::new(part(&outer), part(&inner)).unwrap();
        if (1..=max_boxes).contains(&d.size()) {
            return d;
        }
    }
}
