//! Exhaustive enumeration of fillings, used as ground truth by the
//! verification drivers.
//!
//! All enumerators fill cells row-major with backtracking and return
//! deterministically ordered results: tableau families are sorted by norm
//! and then lexicographically by row-major entries, tabloid families by
//! weight and then lexicographically.

use crate::error::Error;
use crate::shapes::{Cell, SkewShape};
use crate::tabloids::Tabloid;

struct CellInfo {
    cell: Cell,
    /// Index of the left neighbor in the dense layout, when in the shape.
    left: Option<usize>,
    /// Index of the above neighbor in the dense layout, when in the shape.
    above: Option<usize>,
    /// Shape cells strictly above in the column (floor for semistandard).
    above_count: u64,
    /// Shape cells strictly below in the column (floor for reverse).
    below_count: u64,
}

fn cell_infos(shape: &SkewShape) -> Vec<CellInfo> {
    shape
        .cells()
        .map(|cell| CellInfo {
            cell,
            left: cell.left().and_then(|c| shape.cell_index(c)),
            above: cell.above().and_then(|c| shape.cell_index(c)),
            above_count: shape.cells_above_in_col(cell) as u64,
            below_count: shape.cells_below_in_col(cell) as u64,
        })
        .collect()
}

/// All semistandard tableaux of the shape with norm at most `max_norm`.
pub fn enumerate_ssyt(shape: &SkewShape, max_norm: u64) -> Vec<Tabloid> {
    let infos = cell_infos(shape);
    let floor_tail = suffix_sums(&infos, |i| i.above_count);
    let mut entries = vec![0u64; infos.len()];
    let mut out = Vec::new();
    fn recurse(
        shape: &SkewShape,
        infos: &[CellInfo],
        floor_tail: &[u64],
        entries: &mut Vec<u64>,
        index: usize,
        sum: u64,
        max_norm: u64,
        out: &mut Vec<Tabloid>,
    ) {
        if index == infos.len() {
            out.push(Tabloid::new(shape.clone(), entries.clone()).unwrap());
            return;
        }
        let info = &infos[index];
        let mut v = info.above_count;
        if let Some(left) = info.left {
            v = v.max(entries[left]);
        }
        if let Some(above) = info.above {
            v = v.max(entries[above] + 1);
        }
        while sum + v + floor_tail[index + 1] <= max_norm {
            entries[index] = v;
            recurse(
                shape,
                infos,
                floor_tail,
                entries,
                index + 1,
                sum + v,
                max_norm,
                out,
            );
            v += 1;
        }
    }
    recurse(
        shape,
        &infos,
        &floor_tail,
        &mut entries,
        0,
        0,
        max_norm,
        &mut out,
    );
    out.sort_by(|a, b| (a.norm(), a.entries()).cmp(&(b.norm(), b.entries())));
    out
}

/// All reverse semistandard tableaux of the shape with norm at most
/// `max_norm`.
pub fn enumerate_reverse_ssyt(shape: &SkewShape, max_norm: u64) -> Vec<Tabloid> {
    let infos = cell_infos(shape);
    let floor_tail = suffix_sums(&infos, |i| i.below_count);
    let mut entries = vec![0u64; infos.len()];
    let mut out = Vec::new();
    fn recurse(
        shape: &SkewShape,
        infos: &[CellInfo],
        floor_tail: &[u64],
        entries: &mut Vec<u64>,
        index: usize,
        sum: u64,
        max_norm: u64,
        out: &mut Vec<Tabloid>,
    ) {
        if index == infos.len() {
            out.push(Tabloid::new(shape.clone(), entries.clone()).unwrap());
            return;
        }
        let info = &infos[index];
        let floor = info.below_count;
        let mut ceiling = u64::MAX;
        if let Some(left) = info.left {
            ceiling = ceiling.min(entries[left]);
        }
        if let Some(above) = info.above {
            if entries[above] == 0 {
                return;
            }
            ceiling = ceiling.min(entries[above] - 1);
        }
        let mut v = floor;
        while v <= ceiling && sum + v + floor_tail[index + 1] <= max_norm {
            entries[index] = v;
            recurse(
                shape,
                infos,
                floor_tail,
                entries,
                index + 1,
                sum + v,
                max_norm,
                out,
            );
            v += 1;
        }
    }
    recurse(
        shape,
        &infos,
        &floor_tail,
        &mut entries,
        0,
        0,
        max_norm,
        &mut out,
    );
    out.sort_by(|a, b| (a.norm(), a.entries()).cmp(&(b.norm(), b.entries())));
    out
}

/// All reverse semistandard tableaux whose row `i` entries are bounded by
/// `a + mu_i - i`. The bounds make the family finite.
pub fn enumerate_bounded_reverse(shape: &SkewShape, a: i64) -> Result<Vec<Tabloid>, Error> {
    shape.require_valid_a(a)?;
    let infos = cell_infos(shape);
    let bounds: Vec<u64> = infos
        .iter()
        .map(|info| shape.row_bound(a, info.cell.row).map(|b| b.max(0) as u64))
        .collect::<Result<_, _>>()?;
    let mut entries = vec![0u64; infos.len()];
    let mut out = Vec::new();
    fn recurse(
        shape: &SkewShape,
        infos: &[CellInfo],
        bounds: &[u64],
        entries: &mut Vec<u64>,
        index: usize,
        out: &mut Vec<Tabloid>,
    ) {
        if index == infos.len() {
            out.push(Tabloid::new(shape.clone(), entries.clone()).unwrap());
            return;
        }
        let info = &infos[index];
        let floor = info.below_count;
        let mut ceiling = bounds[index];
        if let Some(left) = info.left {
            ceiling = ceiling.min(entries[left]);
        }
        if let Some(above) = info.above {
            if entries[above] == 0 {
                return;
            }
            ceiling = ceiling.min(entries[above] - 1);
        }
        for v in floor..=ceiling {
            entries[index] = v;
            recurse(shape, infos, bounds, entries, index + 1, out);
        }
    }
    recurse(shape, &infos, &bounds, &mut entries, 0, &mut out);
    out.sort_by(|a, b| (a.norm(), a.entries()).cmp(&(b.norm(), b.entries())));
    Ok(out)
}

/// All tabloids whose weight `sum entry * (a + content)` is at most
/// `max_weight`. Positive per-cell weights make the family finite.
pub fn enumerate_tabloids_by_weight(
    shape: &SkewShape,
    a: i64,
    max_weight: u64,
) -> Result<Vec<Tabloid>, Error> {
    shape.require_valid_a(a)?;
    let weights: Vec<u64> = shape.cells().map(|c| (a + c.content()) as u64).collect();
    let mut entries = vec![0u64; weights.len()];
    let mut out = Vec::new();
    fn recurse(
        shape: &SkewShape,
        weights: &[u64],
        entries: &mut Vec<u64>,
        index: usize,
        used: u64,
        max_weight: u64,
        out: &mut Vec<Tabloid>,
    ) {
        if index == weights.len() {
            out.push(Tabloid::new(shape.clone(), entries.clone()).unwrap());
            return;
        }
        let w = weights[index];
        let mut v = 0u64;
        while used + v * w <= max_weight {
            entries[index] = v;
            recurse(
                shape,
                weights,
                entries,
                index + 1,
                used + v * w,
                max_weight,
                out,
            );
            v += 1;
        }
    }
    recurse(shape, &weights, &mut entries, 0, 0, max_weight, &mut out);
    out.sort_by_cached_key(|t| (t.content_weight(a).unwrap(), t.entries().to_vec()));
    Ok(out)
}

fn suffix_sums(infos: &[CellInfo], floor: impl Fn(&CellInfo) -> u64) -> Vec<u64> {
    let mut sums = vec![0u64; infos.len() + 1];
    for i in (0..infos.len()).rev() {
        sums[i] = sums[i + 1] + floor(&infos[i]);
    }
    sums
}
