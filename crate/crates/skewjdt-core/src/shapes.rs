//! Partitions, cells, and skew diagrams.
//!
//! A skew shape is the difference of two partitions: the cells `(i, j)` with
//! `mu_i < j <= lambda_i`, using 1-based matrix coordinates (row 1 at the
//! top, column 1 at the left). Rows and columns of a skew shape are always
//! contiguous runs of cells. The content of a cell is `c(i, j) = j - i`; for
//! a fixed offset `a`, the quantity `a + c` is attached to every cell and
//! the shape-dependent row bound `a + mu_i - i` caps entries in row `i` of a
//! bounded filling. An offset is usable only when `a + c > 0` on every cell.

use crate::error::Error;

/// 1-based cell coordinates: row grows downward, column grows rightward.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Cell {
        assert!(row >= 1 && col >= 1, "cell coordinates are 1-based");
        Cell { row, col }
    }

    /// Content `c = col - row`, constant along diagonals.
    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }

    pub fn right(&self) -> Cell {
        Cell {
            row: self.row,
            col: self.col + 1,
        }
    }

    pub fn below(&self) -> Cell {
        Cell {
            row: self.row + 1,
            col: self.col,
        }
    }

    pub fn left(&self) -> Option<Cell> {
        (self.col > 1).then(|| Cell {
            row: self.row,
            col: self.col - 1,
        })
    }

    pub fn above(&self) -> Option<Cell> {
        (self.row > 1).then(|| Cell {
            row: self.row - 1,
            col: self.col,
        })
    }
}

impl std::fmt::Display for Cell {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A weakly decreasing sequence of positive integers. The empty sequence is
/// the empty partition. Parts beyond the length are treated as zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Partition, Error> {
        for (index, &part) in parts.iter().enumerate() {
            if part == 0 {
                return Err(Error::NonPositivePart { index, part: 0 });
            }
            if index > 0 && parts[index - 1] < part {
                return Err(Error::NotWeaklyDecreasing {
                    index,
                    prev: parts[index - 1],
                    part,
                });
            }
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Partition {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part at 1-based `row`, zero beyond the length.
    pub fn part(&self, row: usize) -> usize {
        assert!(row >= 1, "partition rows are 1-based");
        self.parts.get(row - 1).copied().unwrap_or(0)
    }
}

/// The diagram of `lambda / mu`. Construction checks containment
/// (`mu_i <= lambda_i` for all rows, including rows of `mu` beyond `lambda`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
    /// Start of each outer row's cells within a row-major dense layout.
    row_offsets: Vec<usize>,
    cell_count: usize,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<SkewShape, Error> {
        if inner.len() > outer.len() {
            return Err(Error::ContainmentViolation {
                row: outer.len() + 1,
            });
        }
        for row in 1..=inner.len() {
            if inner.part(row) > outer.part(row) {
                return Err(Error::ContainmentViolation { row });
            }
        }
        let mut row_offsets = Vec::with_capacity(outer.len());
        let mut cell_count = 0;
        for row in 1..=outer.len() {
            row_offsets.push(cell_count);
            cell_count += outer.part(row) - inner.part(row);
        }
        Ok(SkewShape {
            outer,
            inner,
            row_offsets,
            cell_count,
        })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Number of rows of the outer partition.
    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    pub fn cell_count(&self) -> usize {
        self.cell_count
    }

    pub fn is_empty(&self) -> bool {
        self.cell_count == 0
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1
            && cell.row <= self.outer.len()
            && cell.col > self.inner.part(cell.row)
            && cell.col <= self.outer.part(cell.row)
    }

    /// Column range of row `row`'s cells: `inner_i + 1 ..= outer_i` (empty
    /// when the row has no cells).
    pub fn row_cols(&self, row: usize) -> std::ops::RangeInclusive<usize> {
        self.inner.part(row) + 1..=self.outer.part(row)
    }

    pub fn row_len(&self, row: usize) -> usize {
        self.outer.part(row) - self.inner.part(row)
    }

    /// Cells in row-major order: rows top to bottom, columns left to right.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (1..=self.rows()).flat_map(move |row| self.row_cols(row).map(move |col| Cell { row, col }))
    }

    /// Position of `cell` in the row-major dense layout.
    pub fn cell_index(&self, cell: Cell) -> Option<usize> {
        self.contains(cell)
            .then(|| self.row_offsets[cell.row - 1] + cell.col - 1 - self.inner.part(cell.row))
    }

    /// Content of a cell of the shape.
    pub fn content(&self, cell: Cell) -> Result<i64, Error> {
        if !self.contains(cell) {
            return Err(Error::CellNotInShape { cell });
        }
        Ok(cell.content())
    }

    /// Largest value allowed in row `row` of a bounded filling: `a + mu_i - i`.
    pub fn row_bound(&self, a: i64, row: usize) -> Result<i64, Error> {
        if row < 1 || row > self.rows() {
            return Err(Error::RowOutOfRange {
                row,
                rows: self.rows(),
            });
        }
        Ok(a + self.inner.part(row) as i64 - row as i64)
    }

    /// Whether `a + content > 0` holds on every cell. This also makes every
    /// row bound non-negative on rows that have cells.
    pub fn validate_a(&self, a: i64) -> bool {
        self.cells().all(|cell| a + cell.content() > 0)
    }

    /// Like [`validate_a`](Self::validate_a) but reports the first offending
    /// cell, for diagnostics.
    pub fn require_valid_a(&self, a: i64) -> Result<(), Error> {
        for cell in self.cells() {
            let value = a + cell.content();
            if value <= 0 {
                return Err(Error::InvalidA { a, cell, value });
            }
        }
        Ok(())
    }

    /// Number of shape cells strictly below `cell` in its column.
    pub fn cells_below_in_col(&self, cell: Cell) -> usize {
        (cell.row + 1..=self.rows())
            .take_while(|&row| self.contains(Cell { row, col: cell.col }))
            .count()
    }

    /// Number of shape cells strictly above `cell` in its column.
    pub fn cells_above_in_col(&self, cell: Cell) -> usize {
        (1..cell.row)
            .rev()
            .take_while(|&row| self.contains(Cell { row, col: cell.col }))
            .count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(outer: &[usize], inner: &[usize]) -> SkewShape {
        SkewShape::new(
            Partition::new(outer.to_vec()).unwrap(),
            Partition::new(inner.to_vec()).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn partition_accepts_weakly_decreasing_parts() {
        let p = Partition::new(vec![4, 3, 3, 1]).unwrap();
        assert_eq!(p.parts(), &[4, 3, 3, 1]);
        assert_eq!(p.part(2), 3);
        assert_eq!(p.part(9), 0, "parts beyond the length are zero");
    }

    #[test]
    fn partition_accepts_empty() {
        let p = Partition::new(vec![]).unwrap();
        assert!(p.is_empty());
        assert_eq!(p.len(), 0);
    }

    #[test]
    fn partition_rejects_increase() {
        assert_eq!(
            Partition::new(vec![3, 4]),
            Err(Error::NotWeaklyDecreasing {
                index: 1,
                prev: 3,
                part: 4
            })
        );
    }

    #[test]
    fn partition_rejects_zero_part() {
        assert_eq!(
            Partition::new(vec![2, 0]),
            Err(Error::NonPositivePart { index: 1, part: 0 })
        );
    }

    #[test]
    fn skew_shape_cells_row_major() {
        let s = shape(&[4, 3, 3, 1], &[2, 2, 1]);
        let cells: Vec<(usize, usize)> = s.cells().map(|c| (c.row, c.col)).collect();
        assert_eq!(cells, [(1, 3), (1, 4), (2, 3), (3, 2), (3, 3), (4, 1)]);
        assert_eq!(s.cell_count(), 6);
    }

    #[test]
    fn skew_shape_rejects_containment_violations() {
        let outer = Partition::new(vec![3, 2]).unwrap();
        let inner = Partition::new(vec![1, 1, 1]).unwrap();
        assert_eq!(
            SkewShape::new(outer, inner),
            Err(Error::ContainmentViolation { row: 3 })
        );

        let outer = Partition::new(vec![3, 1]).unwrap();
        let inner = Partition::new(vec![2, 2]).unwrap();
        assert_eq!(
            SkewShape::new(outer, inner),
            Err(Error::ContainmentViolation { row: 2 })
        );
    }

    #[test]
    fn skew_shape_lambda_over_lambda_is_empty() {
        let s = shape(&[2, 2], &[2, 2]);
        assert!(s.is_empty());
        assert_eq!(s.cells().count(), 0);
    }

    #[test]
    fn cell_membership_and_indexing_agree_with_enumeration() {
        let s = shape(&[4, 4, 4, 3], &[2, 2, 1]);
        assert_eq!(s.cell_count(), 10);
        for (index, cell) in s.cells().enumerate() {
            assert!(s.contains(cell));
            assert_eq!(s.cell_index(cell), Some(index));
        }
        assert!(!s.contains(Cell::new(1, 2)));
        assert!(!s.contains(Cell::new(4, 4)));
        assert_eq!(s.cell_index(Cell::new(5, 1)), None);
    }

    #[test]
    fn content_is_column_minus_row() {
        let s = shape(&[4, 4, 4, 3], &[2, 2, 1]);
        assert_eq!(s.content(Cell::new(3, 2)).unwrap(), -1);
        assert_eq!(s.content(Cell::new(1, 3)).unwrap(), 2);
        assert_eq!(
            s.content(Cell::new(2, 2)),
            Err(Error::CellNotInShape {
                cell: Cell::new(2, 2)
            })
        );
        let square = shape(&[2, 2], &[]);
        assert_eq!(square.content(Cell::new(1, 1)).unwrap(), 0);
        assert_eq!(square.content(Cell::new(2, 2)).unwrap(), 0);
    }

    #[test]
    fn content_constant_on_diagonals() {
        let s = shape(&[4, 4, 4, 3], &[2, 2, 1]);
        for c1 in s.cells() {
            for c2 in s.cells() {
                if c1.col as i64 - c1.row as i64 == c2.col as i64 - c2.row as i64 {
                    assert_eq!(s.content(c1).unwrap(), s.content(c2).unwrap());
                }
            }
        }
    }

    #[test]
    fn row_bounds_follow_inner_parts() {
        let s = shape(&[4, 4, 4, 3], &[2, 2, 1]);
        let bounds: Vec<i64> = (1..=4).map(|r| s.row_bound(6, r).unwrap()).collect();
        assert_eq!(bounds, [7, 6, 4, 2]);

        let s = shape(&[3, 2], &[1]);
        assert_eq!(s.row_bound(2, 1).unwrap(), 2);
        assert_eq!(s.row_bound(2, 2).unwrap(), 0);
        assert_eq!(
            s.row_bound(2, 3),
            Err(Error::RowOutOfRange { row: 3, rows: 2 })
        );

        let single = shape(&[1], &[]);
        assert_eq!(single.row_bound(1, 1).unwrap(), 0);
    }

    #[test]
    fn validate_a_checks_every_cell() {
        let s = shape(&[4, 4, 4, 3], &[2, 2, 1]);
        assert!(s.validate_a(6));
        assert!(
            !s.validate_a(1),
            "cell (4,1) has content -3, so a=1 gives a+c=-2"
        );
        let s = shape(&[3, 2], &[1]);
        assert!(s.validate_a(2));
        assert!(!s.validate_a(1), "cell (2,1) has content -1");
        assert_eq!(
            s.require_valid_a(1),
            Err(Error::InvalidA {
                a: 1,
                cell: Cell::new(2, 1),
                value: 0
            })
        );
    }

    #[test]
    fn validate_a_is_monotone_in_a() {
        let s = shape(&[4, 3, 3, 1], &[2, 2, 1]);
        let mut seen_valid = false;
        for a in -3..8 {
            let ok = s.validate_a(a);
            if seen_valid {
                assert!(ok, "validity must persist once reached (a={a})");
            }
            seen_valid |= ok;
        }
        assert!(seen_valid);
    }

    #[test]
    fn validate_a_vacuous_on_empty_shape() {
        let s = shape(&[2, 2], &[2, 2]);
        assert!(s.validate_a(-100));
        assert!(s.validate_a(0));
    }

    #[test]
    fn cells_below_in_col_counts_shape_cells_only() {
        let s = shape(&[4, 4, 4, 3], &[2, 2, 1]);
        assert_eq!(s.cells_below_in_col(Cell::new(1, 3)), 3);
        assert_eq!(s.cells_below_in_col(Cell::new(1, 4)), 2);
        assert_eq!(s.cells_below_in_col(Cell::new(3, 2)), 1);
        assert_eq!(s.cells_below_in_col(Cell::new(4, 1)), 0);
        assert_eq!(s.cells_above_in_col(Cell::new(4, 3)), 3);
        assert_eq!(s.cells_above_in_col(Cell::new(3, 4)), 2);
        assert_eq!(s.cells_above_in_col(Cell::new(4, 2)), 1);
        assert_eq!(s.cells_above_in_col(Cell::new(1, 3)), 0);
    }
}
