//! The four sliding procedures.
//!
//! Two classical jeu de taquin slides move an entry through a partially
//! filled shape: the forward slide walks an entry down-right through filled
//! territory, the backward slide walks it up-left. Two modified slides act
//! on total fillings: the modified forward slide first lowers the starting
//! entry by `a + content(start)` and then lets the lowered entry sink
//! down-right, adjusting the entries it passes; the modified backward slide
//! lifts an entry up-left and finally raises it by `a + content(stop)`.
//!
//! Comparisons against a neighbor outside the shape (or an empty cell, for
//! the classical slides) are vacuously false in the continue tests, so a
//! slide stops when no neighbor forces another exchange. All four return
//! the path of cells visited, starting cell first, stop cell last.

use crate::error::Error;
use crate::shapes::{Cell, SkewShape};
use crate::tabloids::{PartialFilling, Tabloid};

/// The cells an entry visited during one slide, in order. Consecutive cells
/// differ by one step right or down (forward slides) or one step left or up
/// (backward slides); a path of length one means the slide stopped where it
/// started.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlidePath {
    cells: Vec<Cell>,
}

impl SlidePath {
    fn new(start: Cell) -> SlidePath {
        SlidePath { cells: vec![start] }
    }

    fn push(&mut self, cell: Cell) {
        self.cells.push(cell);
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn start(&self) -> Cell {
        self.cells[0]
    }

    pub fn stop(&self) -> Cell {
        *self.cells.last().unwrap()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// The same cells walked in the opposite direction.
    pub fn reversed(&self) -> SlidePath {
        SlidePath {
            cells: self.cells.iter().rev().copied().collect(),
        }
    }
}

impl std::fmt::Display for SlidePath {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, cell) in self.cells.iter().enumerate() {
            if i > 0 {
                write!(f, "->")?;
            }
            write!(f, "{cell}")?;
        }
        Ok(())
    }
}

fn require_filled(filling: &PartialFilling, start: Cell) -> Result<u64, Error> {
    if !filling.shape().contains(start) {
        return Err(Error::CellNotInShape { cell: start });
    }
    filling.get(start).ok_or(Error::EmptyCell { cell: start })
}

/// Slides the entry at `start` down-right through the filled region.
///
/// While a filled right or below neighbor exists, the moving entry `e`
/// trades places with the smaller of the two (the right one when `x < y` or
/// nothing is below, the below one otherwise). The stop cell ends up with
/// no filled neighbor to its right or below, and the multiset of entries is
/// unchanged.
pub fn jdt_forward_slide(filling: &mut PartialFilling, start: Cell) -> Result<SlidePath, Error> {
    let e = require_filled(filling, start)?;
    let mut path = SlidePath::new(start);
    let mut cur = start;
    loop {
        let x = filling.get(cur.right());
        let y = filling.get(cur.below());
        let next = match (x, y) {
            (None, None) => break,
            (Some(_), None) => cur.right(),
            (None, Some(_)) => cur.below(),
            (Some(x), Some(y)) => {
                if x < y {
                    cur.right()
                } else {
                    cur.below()
                }
            }
        };
        let moved = filling.get(next).unwrap();
        filling.set(cur, moved)?;
        cur = next;
        path.push(cur);
    }
    filling.set(cur, e)?;
    Ok(path)
}

/// Slides the entry at `start` up-left until order is restored.
///
/// The moving entry `e` keeps trading places while the left neighbor holds
/// `x > e` or the above neighbor holds `y >= e`, moving left when `x > y`
/// or nothing is above, up otherwise. Run at the stop cell of a forward
/// slide, this retraces that slide's path in reverse.
pub fn jdt_backward_slide(filling: &mut PartialFilling, start: Cell) -> Result<SlidePath, Error> {
    let e = require_filled(filling, start)?;
    let mut path = SlidePath::new(start);
    let mut cur = start;
    loop {
        let x = cur.left().and_then(|c| filling.get(c));
        let y = cur.above().and_then(|c| filling.get(c));
        if !(x.is_some_and(|x| x > e) || y.is_some_and(|y| y >= e)) {
            break;
        }
        let next = match (x, y) {
            (Some(x), Some(y)) if x > y => cur.left().unwrap(),
            (Some(_), None) => cur.left().unwrap(),
            _ => cur.above().unwrap(),
        };
        let moved = filling.get(next).unwrap();
        filling.set(cur, moved)?;
        cur = next;
        path.push(cur);
    }
    filling.set(cur, e)?;
    Ok(path)
}

/// Lowers the entry at `start` by `a + content(start)` and slides the
/// lowered entry `e` down-right.
///
/// The slide continues while `e < x` (right neighbor) or `e <= y` (below
/// neighbor). Moving right over `x` leaves `x - 1` behind; moving down over
/// `y` leaves `y + 1` behind; the choice is right when `x - 1 > y` or
/// nothing is below. Applied to a reverse semistandard filling, the result
/// is again reverse semistandard and the norm drops by exactly
/// `a + content(stop)`.
pub fn mjdt_forward_slide(tabloid: &mut Tabloid, start: Cell, a: i64) -> Result<SlidePath, Error> {
    let shape = tabloid.shape().clone();
    let offset = a + shape.content(start)?;
    let value = tabloid.get(start)? as i64;
    if value < offset {
        return Err(Error::internal(format!(
            "modified forward slide at {start} would go negative: {value} - {offset}"
        )));
    }
    let e = (value - offset) as u64;
    let mut path = SlidePath::new(start);
    let mut cur = start;
    loop {
        let x = tabloid.get_opt(cur.right());
        let y = tabloid.get_opt(cur.below());
        if !(x.is_some_and(|x| e < x) || y.is_some_and(|y| e <= y)) {
            break;
        }
        let go_right = match (x, y) {
            (Some(x), Some(y)) => x as i64 - 1 > y as i64,
            (Some(_), None) => true,
            _ => false,
        };
        if go_right {
            let x = x.unwrap();
            tabloid.set(
                cur,
                x.checked_sub(1).ok_or_else(|| {
                    Error::internal(format!("entry underflow passing {} right of {cur}", x))
                })?,
            )?;
            cur = cur.right();
        } else {
            tabloid.set(cur, y.unwrap() + 1)?;
            cur = cur.below();
        }
        path.push(cur);
    }
    tabloid.set(cur, e)?;
    Ok(path)
}

/// Slides the entry at `start` up-left and finally raises it by
/// `a + content(stop)`.
///
/// With `e` the moving entry, the slide continues while
/// `e + a + content(cur) > x` (left neighbor) or `>= y` (above neighbor),
/// re-evaluated at the current cell each round. Moving left over `x` leaves
/// `x + 1` behind; moving up over `y` leaves `y - 1` behind; the choice is
/// left when `y > x + 1` or nothing is above. Run at the stop cell of a
/// modified forward slide, this retraces that slide's path in reverse.
pub fn mjdt_backward_slide(tabloid: &mut Tabloid, start: Cell, a: i64) -> Result<SlidePath, Error> {
    let shape = tabloid.shape().clone();
    shape.content(start)?;
    let e = tabloid.get(start)?;
    let mut path = SlidePath::new(start);
    let mut cur = start;
    loop {
        let threshold = e as i64 + a + cur.content();
        let x = cur.left().and_then(|c| tabloid.get_opt(c));
        let y = cur.above().and_then(|c| tabloid.get_opt(c));
        if !(x.is_some_and(|x| threshold > x as i64) || y.is_some_and(|y| threshold >= y as i64)) {
            break;
        }
        let go_left = match (x, y) {
            (Some(x), Some(y)) => y as i64 > x as i64 + 1,
            (Some(_), None) => true,
            _ => false,
        };
        if go_left {
            tabloid.set(cur, x.unwrap() + 1)?;
            cur = cur.left().unwrap();
        } else {
            let y = y.unwrap();
            tabloid.set(
                cur,
                y.checked_sub(1).ok_or_else(|| {
                    Error::internal(format!("entry underflow passing {} below {cur}", y))
                })?,
            )?;
            cur = cur.above().unwrap();
        }
        path.push(cur);
    }
    let offset = a + cur.content();
    if offset <= 0 {
        return Err(Error::internal(format!(
            "non-positive offset {offset} at stop cell {cur}"
        )));
    }
    tabloid.set(cur, e + offset as u64)?;
    Ok(path)
}

/// True when `cell` has no shape cell directly right of or below it.
pub fn is_bottom_right_corner(shape: &SkewShape, cell: Cell) -> bool {
    !shape.contains(cell.right()) && !shape.contains(cell.below())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::Partition;

    fn shape(outer: &[usize], inner: &[usize]) -> SkewShape {
        SkewShape::new(
            Partition::new(outer.to_vec()).unwrap(),
            Partition::new(inner.to_vec()).unwrap(),
        )
        .unwrap()
    }

    fn tab(shape: &SkewShape, rows: &[&[u64]]) -> Tabloid {
        Tabloid::from_rows(
            shape.clone(),
            &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>(),
        )
        .unwrap()
    }

    fn cells(path: &SlidePath) -> Vec<(usize, usize)> {
        path.cells().iter().map(|c| (c.row, c.col)).collect()
    }

    fn big_shape() -> SkewShape {
        shape(&[4, 4, 4, 3], &[2, 2, 1])
    }

    #[test]
    fn forward_slide_follows_smaller_neighbor() {
        let mut p = PartialFilling::from(&tab(
            &big_shape(),
            &[&[0, 1], &[1, 7], &[1, 4, 9], &[2, 9, 9]],
        ));
        let path = jdt_forward_slide(&mut p, Cell::new(1, 3)).unwrap();
        assert_eq!(cells(&path), [(1, 3), (2, 3), (3, 3), (4, 3)]);
        assert_eq!(path.stop(), Cell::new(4, 3));
        let expect = tab(&big_shape(), &[&[1, 1], &[4, 7], &[1, 9, 9], &[2, 9, 0]]);
        assert_eq!(p.clone().into_tabloid().unwrap(), expect);
        assert!(is_bottom_right_corner(p.shape(), path.stop()));
    }

    #[test]
    fn forward_slide_prefers_right_on_smaller_entry() {
        let s = shape(&[2, 2], &[]);
        let mut p = PartialFilling::from(&tab(&s, &[&[0, 1], &[2, 3]]));
        let path = jdt_forward_slide(&mut p, Cell::new(1, 1)).unwrap();
        assert_eq!(cells(&path), [(1, 1), (1, 2), (2, 2)]);
        assert_eq!(p.into_tabloid().unwrap(), tab(&s, &[&[1, 3], &[2, 0]]));
    }

    #[test]
    fn forward_slide_ties_go_down() {
        let s = shape(&[2, 2], &[]);
        let mut p = PartialFilling::from(&tab(&s, &[&[0, 2], &[2, 3]]));
        let path = jdt_forward_slide(&mut p, Cell::new(1, 1)).unwrap();
        assert_eq!(cells(&path), [(1, 1), (2, 1), (2, 2)]);
    }

    #[test]
    fn forward_slide_without_neighbors_stays_put() {
        let s = shape(&[1], &[]);
        let mut p = PartialFilling::from(&tab(&s, &[&[5]]));
        let path = jdt_forward_slide(&mut p, Cell::new(1, 1)).unwrap();
        assert_eq!(cells(&path), [(1, 1)]);
        assert_eq!(p.get(Cell::new(1, 1)), Some(5));
    }

    #[test]
    fn forward_slide_preserves_norm_and_multiset() {
        let mut p = PartialFilling::from(&tab(
            &big_shape(),
            &[&[0, 1], &[1, 7], &[1, 4, 9], &[2, 9, 9]],
        ));
        let before = p.norm();
        jdt_forward_slide(&mut p, Cell::new(1, 4)).unwrap();
        assert_eq!(p.norm(), before);
        assert_eq!(p.filled_count(), 10);
    }

    #[test]
    fn forward_slide_rejects_empty_or_foreign_start() {
        let s = shape(&[2], &[]);
        let mut p = PartialFilling::empty(s);
        assert_eq!(
            jdt_forward_slide(&mut p, Cell::new(1, 1)),
            Err(Error::EmptyCell {
                cell: Cell::new(1, 1)
            })
        );
        assert_eq!(
            jdt_forward_slide(&mut p, Cell::new(3, 1)),
            Err(Error::CellNotInShape {
                cell: Cell::new(3, 1)
            })
        );
    }

    #[test]
    fn backward_slide_retraces_forward_slide() {
        let original = tab(&big_shape(), &[&[0, 1], &[1, 7], &[1, 4, 9], &[2, 9, 9]]);
        let mut p = PartialFilling::from(&original);
        let forward = jdt_forward_slide(&mut p, Cell::new(1, 3)).unwrap();
        let backward = jdt_backward_slide(&mut p, forward.stop()).unwrap();
        assert_eq!(backward, forward.reversed());
        assert_eq!(p.into_tabloid().unwrap(), original);
    }

    #[test]
    fn backward_slide_walks_past_larger_entries() {
        let s = shape(&[3], &[]);
        let mut p = PartialFilling::from(&tab(&s, &[&[9, 9, 3]]));
        let path = jdt_backward_slide(&mut p, Cell::new(1, 3)).unwrap();
        assert_eq!(cells(&path), [(1, 3), (1, 2), (1, 1)]);
        assert_eq!(p.into_tabloid().unwrap(), tab(&s, &[&[3, 9, 9]]));
    }

    #[test]
    fn backward_slide_stops_at_equal_left_entry() {
        let s = shape(&[2], &[]);
        let mut p = PartialFilling::from(&tab(&s, &[&[5, 5]]));
        let path = jdt_backward_slide(&mut p, Cell::new(1, 2)).unwrap();
        assert_eq!(cells(&path), [(1, 2)]);
    }

    #[test]
    fn backward_slide_displaces_equal_above_entry() {
        let s = shape(&[1, 1], &[]);
        let mut p = PartialFilling::from(&tab(&s, &[&[3], &[3]]));
        let path = jdt_backward_slide(&mut p, Cell::new(2, 1)).unwrap();
        assert_eq!(cells(&path), [(2, 1), (1, 1)]);
    }

    #[test]
    fn backward_slide_without_displacement_stays_put() {
        let s = shape(&[2], &[]);
        let mut p = PartialFilling::from(&tab(&s, &[&[1, 2]]));
        let path = jdt_backward_slide(&mut p, Cell::new(1, 2)).unwrap();
        assert_eq!(cells(&path), [(1, 2)]);
    }

    #[test]
    fn modified_forward_slide_immediate_stop() {
        let mut r = tab(&big_shape(), &[&[9, 9], &[7, 4], &[9, 1, 1], &[2, 1, 0]]);
        let path = mjdt_forward_slide(&mut r, Cell::new(3, 2), 6).unwrap();
        assert_eq!(cells(&path), [(3, 2)]);
        assert_eq!(
            r,
            tab(&big_shape(), &[&[9, 9], &[7, 4], &[4, 1, 1], &[2, 1, 0]])
        );
    }

    #[test]
    fn modified_forward_slide_walks_and_adjusts() {
        let mut r = tab(&big_shape(), &[&[9, 9], &[7, 4], &[4, 1, 1], &[2, 1, 0]]);
        let before = r.norm();
        let path = mjdt_forward_slide(&mut r, Cell::new(1, 3), 6).unwrap();
        assert_eq!(cells(&path), [(1, 3), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(
            r,
            tab(&big_shape(), &[&[8, 5], &[7, 2], &[4, 1, 1], &[2, 1, 0]])
        );
        assert!(r.is_reverse_ssyt());
        let drop = 6 + path.stop().content();
        assert_eq!(
            before - r.norm(),
            drop as u64,
            "norm drops by a + content(stop)"
        );
    }

    #[test]
    fn modified_forward_slide_rejects_negative_start() {
        let s = shape(&[2], &[]);
        let mut r = tab(&s, &[&[1, 0]]);
        assert!(matches!(
            mjdt_forward_slide(&mut r, Cell::new(1, 2), 2),
            Err(Error::Internal { .. })
        ));
    }

    #[test]
    fn modified_backward_slide_reverses_forward() {
        let s = big_shape();
        let start_states = [
            (
                tab(&s, &[&[9, 9], &[7, 4], &[9, 1, 1], &[2, 1, 0]]),
                Cell::new(3, 2),
            ),
            (
                tab(&s, &[&[9, 9], &[7, 4], &[4, 1, 1], &[2, 1, 0]]),
                Cell::new(1, 3),
            ),
            (
                tab(&s, &[&[8, 5], &[7, 2], &[4, 1, 1], &[2, 1, 0]]),
                Cell::new(2, 3),
            ),
            (
                tab(&s, &[&[8, 5], &[2, 2], &[4, 1, 1], &[2, 1, 0]]),
                Cell::new(1, 3),
            ),
        ];
        for (original, start) in start_states {
            let mut work = original.clone();
            let forward = mjdt_forward_slide(&mut work, start, 6).unwrap();
            let backward = mjdt_backward_slide(&mut work, forward.stop(), 6).unwrap();
            assert_eq!(backward, forward.reversed());
            assert_eq!(work, original);
        }
    }

    #[test]
    fn modified_backward_slide_trivial_raises_in_place() {
        let s = big_shape();
        let mut q = tab(&s, &[&[4, 3], &[2, 2], &[4, 1, 0], &[2, 1, 0]]);
        let path = mjdt_backward_slide(&mut q, Cell::new(3, 2), 6).unwrap();
        assert_eq!(cells(&path), [(3, 2)]);
        assert_eq!(
            q.get(Cell::new(3, 2)).unwrap(),
            4 + 5,
            "raised by a + content = 5"
        );
    }

    #[test]
    fn slide_round_trip_over_small_reverse_tableaux() {
        let s = shape(&[3, 2], &[1]);
        let a = 2;
        for q in crate::genfunc::enumerate_reverse_ssyt(&s, 6) {
            let margins: Vec<i64> = s
                .cells()
                .map(|c| q.get(c).unwrap() as i64 - (a + c.content()))
                .collect();
            let best = margins.iter().copied().max().unwrap();
            if best < 0 {
                continue;
            }
            let start = s
                .cells()
                .zip(&margins)
                .filter(|(_, &m)| m == best)
                .map(|(c, _)| c)
                .max_by_key(|c| (c.row, c.col))
                .unwrap();
            let mut work = q.clone();
            let forward = mjdt_forward_slide(&mut work, start, a).unwrap();
            assert!(
                work.is_reverse_ssyt(),
                "forward slide must preserve reverse tableaux"
            );
            let backward = mjdt_backward_slide(&mut work, forward.stop(), a).unwrap();
            assert_eq!(backward, forward.reversed());
            assert_eq!(work, q);
        }
    }
}
