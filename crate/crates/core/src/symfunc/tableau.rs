//! Semistandard (skew) tableau enumeration.

use std::collections::BTreeMap;

use crate::partitions::SkewShape;

/// Counts semistandard fillings of `shape` with letters `1..=letters`,
/// grouped by content. Content vectors have length `letters`.
pub(crate) fn ssyt_contents(shape: &SkewShape, letters: usize) -> BTreeMap<Vec<i32>, u64> {
    let rows = shape.outer().len();
    let spans: Vec<(usize, usize)> = (0..rows).map(|i| shape.row_span(i)).collect();
    let width = shape.outer().first().max(0) as usize;
    let mut grid = vec![vec![0u8; width]; rows];
    let mut content = vec![0i32; letters];
    let mut out = BTreeMap::new();
    if shape.size() == 0 {
        out.insert(content, 1);
        return out;
    }
    if letters == 0 {
        return out;
    }
    fill(&spans, 0, spans[0].0, letters as u8, &mut grid, &mut content, &mut out);
    out
}

fn fill(
    spans: &[(usize, usize)],
    row: usize,
    col: usize,
    letters: u8,
    grid: &mut [Vec<u8>],
    content: &mut [i32],
    out: &mut BTreeMap<Vec<i32>, u64>,
) {
    if row == spans.len() {
        *out.entry(content.to_vec()).or_insert(0) += 1;
        return;
    }
    let (lo, hi) = spans[row];
    if col >= hi {
        let next = row + 1;
        let start = spans.get(next).map_or(0, |s| s.0);
        fill(spans, next, start, letters, grid, content, out);
        return;
    }
    let mut min = 1u8;
    if col > lo {
        min = min.max(grid[row][col - 1]);
    }
    if row > 0 {
        let (alo, ahi) = spans[row - 1];
        if col >= alo && col < ahi {
            min = min.max(grid[row - 1][col] + 1);
        }
    }
    for v in min..=letters {
        grid[row][col] = v;
        content[(v - 1) as usize] += 1;
        fill(spans, row, col + 1, letters, grid, content, out);
        content[(v - 1) as usize] -= 1;
    }
    grid[row][col] = 0;
}

/// Counts Littlewood-Richardson tableaux of shape `outer / inner` with
/// content `weight`: semistandard fillings whose reverse row reading word
/// (rows top to bottom, each right to left) is a lattice word.
pub(crate) fn lr_tableaux(outer: &[i64], inner: &[i64], weight: &[i64]) -> u64 {
    let rows = outer.len();
    let spans: Vec<(usize, usize)> = (0..rows)
        .map(|i| (inner.get(i).copied().unwrap_or(0) as usize, outer[i] as usize))
        .collect();
    let width = outer.first().copied().unwrap_or(0).max(0) as usize;
    let weight: Vec<i64> = weight.iter().copied().take_while(|&w| w > 0).collect();
    let mut grid = vec![vec![0u8; width]; rows];
    let mut counts = vec![0i64; weight.len()];
    let mut total = 0u64;
    if rows == 0 {
        return u64::from(weight.is_empty());
    }
    lr_fill(&spans, 0, spans[0].1, &weight, &mut grid, &mut counts, &mut total);
    total
}

fn lr_fill(
    spans: &[(usize, usize)],
    row: usize,
    col_end: usize,
    weight: &[i64],
    grid: &mut [Vec<u8>],
    counts: &mut [i64],
    total: &mut u64,
) {
    if row == spans.len() {
        if counts.iter().zip(weight).all(|(c, w)| c == w) {
            *total += 1;
        }
        return;
    }
    let (lo, hi) = spans[row];
    // col_end is one past the box being filled; we move right to left
    if col_end <= lo {
        let next = row + 1;
        let end = spans.get(next).map_or(0, |s| s.1);
        lr_fill(spans, next, end, weight, grid, counts, total);
        return;
    }
    let col = col_end - 1;
    let mut max = weight.len() as u8;
    if col + 1 < hi {
        max = max.min(grid[row][col + 1]);
    }
    let mut min = 1u8;
    if row > 0 {
        let (alo, ahi) = spans[row - 1];
        if col >= alo && col < ahi {
            min = grid[row - 1][col] + 1;
        }
    }
    for v in min..=max {
        let k = (v - 1) as usize;
        if counts[k] + 1 > weight[k] {
            continue;
        }
        if k > 0 && counts[k] + 1 > counts[k - 1] {
            continue;
        }
        grid[row][col] = v;
        counts[k] += 1;
        lr_fill(spans, row, col, weight, grid, counts, total);
        counts[k] -= 1;
    }
    grid[row][col] = 0;
}
