//! Fillings of skew shapes.
//!
//! A [`Tabloid`] assigns a non-negative integer to every cell of its shape;
//! zero is an ordinary entry. A [`PartialFilling`] may leave cells empty and
//! is what the sliding procedures work on while entries are in motion. The
//! semistandard predicates compare only cells that are adjacent inside the
//! shape, which covers all comparable pairs because skew rows and columns
//! are contiguous.

use crate::error::Error;
use crate::shapes::{Cell, SkewShape};

/// A total filling: one entry per cell, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tabloid {
    shape: SkewShape,
    entries: Vec<u64>,
}

impl Tabloid {
    /// Builds a tabloid from row-major entries, one per shape cell.
    pub fn new(shape: SkewShape, entries: Vec<u64>) -> Result<Tabloid, Error> {
        if entries.len() != shape.cell_count() {
            return Err(Error::EntryCountMismatch {
                expected: shape.cell_count(),
                got: entries.len(),
            });
        }
        Ok(Tabloid { shape, entries })
    }

    /// Builds a tabloid from one entry row per shape row.
    pub fn from_rows(shape: SkewShape, rows: &[Vec<u64>]) -> Result<Tabloid, Error> {
        if rows.len() != shape.rows() {
            return Err(Error::RowLengthMismatch {
                row: shape.rows().min(rows.len()) + 1,
                expected: if rows.len() > shape.rows() {
                    0
                } else {
                    shape.row_len(rows.len() + 1)
                },
                got: rows.get(shape.rows()).map_or(0, Vec::len),
            });
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != shape.row_len(i + 1) {
                return Err(Error::RowLengthMismatch {
                    row: i + 1,
                    expected: shape.row_len(i + 1),
                    got: row.len(),
                });
            }
        }
        let entries = rows.iter().flatten().copied().collect();
        Ok(Tabloid { shape, entries })
    }

    /// The all-zero filling.
    pub fn zero(shape: SkewShape) -> Tabloid {
        let entries = vec![0; shape.cell_count()];
        Tabloid { shape, entries }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn get(&self, cell: Cell) -> Result<u64, Error> {
        self.shape
            .cell_index(cell)
            .map(|i| self.entries[i])
            .ok_or(Error::CellNotInShape { cell })
    }

    /// Entry at `cell`, or `None` when the cell is outside the shape.
    pub fn get_opt(&self, cell: Cell) -> Option<u64> {
        self.shape.cell_index(cell).map(|i| self.entries[i])
    }

    pub fn set(&mut self, cell: Cell, value: u64) -> Result<(), Error> {
        let i = self
            .shape
            .cell_index(cell)
            .ok_or(Error::CellNotInShape { cell })?;
        self.entries[i] = value;
        Ok(())
    }

    /// Entries of row `row` as a slice (empty when the row has no cells).
    pub fn row(&self, row: usize) -> &[u64] {
        let start = self.shape.cell_index(Cell {
            row,
            col: *self.shape.row_cols(row).start(),
        });
        match start {
            Some(s) => &self.entries[s..s + self.shape.row_len(row)],
            None => &[],
        }
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    /// Sum of all entries.
    pub fn norm(&self) -> u64 {
        self.entries.iter().sum()
    }

    /// Sum of `entry * (a + content)` over all cells. Requires `a` valid for
    /// the shape, which keeps every weight positive and the sum
    /// representable without sign.
    pub fn content_weight(&self, a: i64) -> Result<u64, Error> {
        self.shape.require_valid_a(a)?;
        let mut total = 0u64;
        for cell in self.shape.cells() {
            let weight = (a + cell.content()) as u64;
            total += self.get(cell).unwrap() * weight;
        }
        Ok(total)
    }

    /// Rows weakly increase left to right, columns strictly increase top to
    /// bottom.
    pub fn is_ssyt(&self) -> bool {
        self.shape.cells().all(|cell| {
            let v = self.get(cell).unwrap();
            self.get_opt(cell.right()).is_none_or(|x| v <= x)
                && self.get_opt(cell.below()).is_none_or(|y| v < y)
        })
    }

    /// Rows weakly decrease left to right, columns strictly decrease top to
    /// bottom.
    pub fn is_reverse_ssyt(&self) -> bool {
        self.shape.cells().all(|cell| {
            let v = self.get(cell).unwrap();
            self.get_opt(cell.right()).is_none_or(|x| v >= x)
                && self.get_opt(cell.below()).is_none_or(|y| v > y)
        })
    }

    /// Every entry in row `i` is at most `a + mu_i - i`.
    pub fn respects_row_bounds(&self, a: i64) -> Result<bool, Error> {
        self.shape.require_valid_a(a)?;
        for row in 1..=self.shape.rows() {
            let bound = self.shape.row_bound(a, row)?;
            if self.row(row).iter().any(|&v| (v as i64) > bound) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// First cell violating the row bound, scanning row-major.
    pub(crate) fn first_bound_violation(&self, a: i64) -> Option<Cell> {
        for row in 1..=self.shape.rows() {
            let bound = self.shape.row_bound(a, row).ok()?;
            for col in self.shape.row_cols(row) {
                let cell = Cell { row, col };
                if self.get(cell).unwrap() as i64 > bound {
                    return Some(cell);
                }
            }
        }
        None
    }
}

/// A filling in which cells may be empty. Slides move a hole or an entry
/// through such a filling; a completed run converts back to a [`Tabloid`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialFilling {
    shape: SkewShape,
    entries: Vec<Option<u64>>,
}

impl PartialFilling {
    pub fn empty(shape: SkewShape) -> PartialFilling {
        let entries = vec![None; shape.cell_count()];
        PartialFilling { shape, entries }
    }

    pub fn from_rows(shape: SkewShape, rows: &[Vec<Option<u64>>]) -> Result<PartialFilling, Error> {
        if rows.len() != shape.rows() {
            return Err(Error::RowLengthMismatch {
                row: shape.rows().min(rows.len()) + 1,
                expected: if rows.len() > shape.rows() {
                    0
                } else {
                    shape.row_len(rows.len() + 1)
                },
                got: rows.get(shape.rows()).map_or(0, Vec::len),
            });
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != shape.row_len(i + 1) {
                return Err(Error::RowLengthMismatch {
                    row: i + 1,
                    expected: shape.row_len(i + 1),
                    got: row.len(),
                });
            }
        }
        let entries = rows.iter().flatten().copied().collect();
        Ok(PartialFilling { shape, entries })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    /// Entry at `cell`; `None` when the cell is empty or outside the shape.
    pub fn get(&self, cell: Cell) -> Option<u64> {
        self.shape.cell_index(cell).and_then(|i| self.entries[i])
    }

    pub fn set(&mut self, cell: Cell, value: u64) -> Result<(), Error> {
        let i = self
            .shape
            .cell_index(cell)
            .ok_or(Error::CellNotInShape { cell })?;
        self.entries[i] = Some(value);
        Ok(())
    }

    /// Empties a cell and returns the entry it held.
    pub fn clear(&mut self, cell: Cell) -> Result<u64, Error> {
        let i = self
            .shape
            .cell_index(cell)
            .ok_or(Error::CellNotInShape { cell })?;
        self.entries[i].take().ok_or(Error::EmptyCell { cell })
    }

    pub fn row(&self, row: usize) -> &[Option<u64>] {
        let start = self.shape.cell_index(Cell {
            row,
            col: *self.shape.row_cols(row).start(),
        });
        match start {
            Some(s) => &self.entries[s..s + self.shape.row_len(row)],
            None => &[],
        }
    }

    pub fn filled_count(&self) -> usize {
        self.entries.iter().filter(|e| e.is_some()).count()
    }

    pub fn is_total(&self) -> bool {
        self.entries.iter().all(Option::is_some)
    }

    /// Sum of the filled entries.
    pub fn norm(&self) -> u64 {
        self.entries.iter().flatten().sum()
    }

    /// The filled cells form a semistandard tableau (empty cells are not
    /// compared).
    pub fn filled_is_ssyt(&self) -> bool {
        self.shape.cells().all(|cell| match self.get(cell) {
            None => true,
            Some(v) => {
                self.get(cell.right()).is_none_or(|x| v <= x)
                    && self.get(cell.below()).is_none_or(|y| v < y)
            }
        })
    }

    /// The filled cells form a reverse semistandard tableau.
    pub fn filled_is_reverse_ssyt(&self) -> bool {
        self.shape.cells().all(|cell| match self.get(cell) {
            None => true,
            Some(v) => {
                self.get(cell.right()).is_none_or(|x| v >= x)
                    && self.get(cell.below()).is_none_or(|y| v > y)
            }
        })
    }

    pub fn into_tabloid(self) -> Result<Tabloid, Error> {
        for (i, entry) in self.entries.iter().enumerate() {
            if entry.is_none() {
                let cell = self.shape.cells().nth(i).unwrap();
                return Err(Error::EmptyCell { cell });
            }
        }
        let entries = self.entries.into_iter().map(Option::unwrap).collect();
        Ok(Tabloid {
            shape: self.shape,
            entries,
        })
    }
}

impl From<&Tabloid> for PartialFilling {
    fn from(t: &Tabloid) -> PartialFilling {
        PartialFilling {
            shape: t.shape.clone(),
            entries: t.entries.iter().map(|&v| Some(v)).collect(),
        }
    }
}

/// The output of splitting: a bounded reverse tableau `r` and a tabloid `t`
/// recording where slides stopped, on a common shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TabloidPair {
    r: Tabloid,
    t: Tabloid,
}

impl TabloidPair {
    pub fn new(r: Tabloid, t: Tabloid) -> Result<TabloidPair, Error> {
        if r.shape() != t.shape() {
            return Err(Error::ShapeMismatch);
        }
        Ok(TabloidPair { r, t })
    }

    pub fn r(&self) -> &Tabloid {
        &self.r
    }

    pub fn t(&self) -> &Tabloid {
        &self.t
    }

    pub fn shape(&self) -> &SkewShape {
        self.r.shape()
    }

    pub fn into_parts(self) -> (Tabloid, Tabloid) {
        (self.r, self.t)
    }
}
