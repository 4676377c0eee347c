//! Rectangular matrices over `{-1,0,1}`, the common domain of the
//! column statistics `a`, `b`, `c`. Signed permutation matrices are the
//! square case with one nonzero entry per row and column.

/// Matrix over `{-1,0,1}` with 1-based `entry(i, j)` accessors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<i8>, // row-major
}

impl ColumnMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        assert!(rows >= 1 && cols >= 1);
        ColumnMatrix {
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    /// Builds from row-major entries; values must lie in `{-1,0,1}`.
    pub fn from_rows(rows: usize, cols: usize, entries: Vec<i8>) -> Self {
        assert_eq!(entries.len(), rows * cols);
        assert!(entries.iter().all(|e| (-1..=1).contains(e)));
        ColumnMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> i8 {
        assert!((1..=self.rows).contains(&i) && (1..=self.cols).contains(&j));
        self.entries[(i - 1) * self.cols + (j - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, value: i8) {
        assert!((-1..=1).contains(&value));
        assert!((1..=self.rows).contains(&i) && (1..=self.cols).contains(&j));
        self.entries[(i - 1) * self.cols + (j - 1)] = value;
    }

    /// Columns with exactly one nonzero entry; the columns the
    /// statistics `a`, `b`, `c` range over.
    pub fn stat_columns(&self) -> Vec<usize> {
        (1..=self.cols)
            .filter(|&j| (1..=self.rows).filter(|&i| self.entry(i, j) != 0).count() == 1)
            .collect()
    }

    /// `i(j)`: the row of the unique nonzero entry in column `j`.
    pub fn row_of_col(&self, j: usize) -> Option<usize> {
        let mut found = None;
        for i in 1..=self.rows {
            if self.entry(i, j) != 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    /// `j(i)`: the column of the unique nonzero entry in row `i`.
    pub fn col_of_row(&self, i: usize) -> Option<usize> {
        let mut found = None;
        for j in 1..=self.cols {
            if self.entry(i, j) != 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(j);
            }
        }
        found
    }

    /// Matrix product; entries must stay within `{-1,0,1}`, which holds
    /// for products of signed permutation matrices.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = ColumnMatrix::zero(self.rows, other.cols);
        for i in 1..=self.rows {
            for j in 1..=other.cols {
                let mut acc: i32 = 0;
                for k in 1..=self.cols {
                    acc += self.entry(i, k) as i32 * other.entry(k, j) as i32;
                }
                assert!((-1..=1).contains(&acc), "product leaves {{-1,0,1}}");
                out.set(i, j, acc as i8);
            }
        }
        out
    }
}
