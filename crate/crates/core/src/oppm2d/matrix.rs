use crate::error::{OppmError, Result};

/// A dense integer matrix stored row-major.
///
/// `x` is the horizontal coordinate (column, left to right) and `y` the
/// vertical one (row, top to bottom), both 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    width: usize,
    height: usize,
    cells: Vec<i64>,
}

impl Matrix {
    pub fn new(width: usize, height: usize, cells: Vec<i64>) -> Result<Self> {
        if cells.len() != width * height {
            return Err(OppmError::BadShape {
                width,
                height,
                cells: cells.len(),
            });
        }
        Ok(Matrix {
            width,
            height,
            cells,
        })
    }

    /// Builds a matrix from rows listed top to bottom.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let width = rows.first().map_or(0, |r| r.as_ref().len());
        let mut cells = Vec::with_capacity(width * rows.len());
        for (row, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != width {
                return Err(OppmError::RaggedRows {
                    row,
                    len: r.len(),
                    width,
                });
            }
            cells.extend_from_slice(r);
        }
        Matrix::new(width, rows.len(), cells)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cells(&self) -> &[i64] {
        &self.cells
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> i64 {
        debug_assert!(x < self.width && y < self.height);
        self.cells[y * self.width + x]
    }

    pub fn row(&self, y: usize) -> &[i64] {
        &self.cells[y * self.width..(y + 1) * self.width]
    }

    /// The `w x h` block with top-left corner `(x, y)`.
    pub fn block(&self, x: usize, y: usize, w: usize, h: usize) -> Matrix {
        let mut cells = Vec::with_capacity(w * h);
        for r in y..y + h {
            cells.extend_from_slice(&self.row(r)[x..x + w]);
        }
        Matrix {
            width: w,
            height: h,
            cells,
        }
    }

    /// Rows in reverse order.
    pub fn flipped_vertically(&self) -> Matrix {
        let mut cells = Vec::with_capacity(self.cells.len());
        for y in (0..self.height).rev() {
            cells.extend_from_slice(self.row(y));
        }
        Matrix {
            width: self.width,
            height: self.height,
            cells,
        }
    }
}

/// Row-major flattening, left to right then top to bottom.
pub fn serialize(m: &Matrix) -> Vec<i64> {
    m.cells.clone()
}

/// Serialization of the full-height strip of columns `x..x + w`.
pub(crate) fn serialize_columns(m: &Matrix, x: usize, w: usize) -> Vec<i64> {
    let mut out = Vec::with_capacity(w * m.height);
    for y in 0..m.height {
        out.extend_from_slice(&m.row(y)[x..x + w]);
    }
    out
}
