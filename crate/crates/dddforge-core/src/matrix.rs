//! Dense 0/1 matrices and the block operations used by the constructions:
//! Kronecker products, circulants, the back-diagonal identity and
//! diagonal-aware block substitution.

use std::fmt;

/// A dense 0/1 matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn ones(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![1; rows * cols],
        }
    }

    /// Back-diagonal identity: `R[i][n-1-i] = 1`, all other entries 0.
    pub fn back_diag(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m.set(i, n - 1 - i, 1);
        }
        m
    }

    /// Circulant matrix with the given first row.
    pub fn circulant(first_row: &[u8]) -> Self {
        let n = first_row.len();
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, first_row[(n + j - i) % n]);
            }
        }
        m
    }

    /// The shift circulant `circ(0,1,0,...,0)`.
    pub fn shift(n: usize) -> Self {
        let mut row = vec![0u8; n];
        if n > 1 {
            row[1] = 1;
        } else {
            row[0] = 1;
        }
        Mat::circulant(&row)
    }

    pub fn from_rows(rows: Vec<Vec<u8>>) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut data = Vec::with_capacity(r * c);
        for row in &rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend_from_slice(row);
        }
        Mat {
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        debug_assert!(v <= 1);
        self.data[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Complement within 0/1 entries: `J - self`.
    pub fn complement(&self) -> Mat {
        let mut m = self.clone();
        for x in &mut m.data {
            *x = 1 - *x;
        }
        m
    }

    /// Entrywise sum. Panics if any entry would exceed 1; the construction
    /// formulas only ever add matrices with disjoint supports.
    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut m = self.clone();
        for (a, b) in m.data.iter_mut().zip(&other.data) {
            *a += *b;
            assert!(*a <= 1, "overlapping supports in matrix sum");
        }
        m
    }

    pub fn row_sum(&self, i: usize) -> usize {
        (0..self.cols).map(|j| self.get(i, j) as usize).sum()
    }

    pub fn col_sum(&self, j: usize) -> usize {
        (0..self.rows).map(|i| self.get(i, j) as usize).sum()
    }

    /// Standard Kronecker product, block row-major: entry
    /// `(a*p + x, b*q + y)` equals `self[a][b] * other[x][y]` for `other`
    /// of shape `p x q`.
    pub fn kronecker(&self, other: &Mat) -> Mat {
        let (p, q) = (other.rows, other.cols);
        let mut m = Mat::zero(self.rows * p, self.cols * q);
        for a in 0..self.rows {
            for b in 0..self.cols {
                if self.get(a, b) == 1 {
                    for x in 0..p {
                        for y in 0..q {
                            if other.get(x, y) == 1 {
                                m.set(a * p + x, b * q + y, 1);
                            }
                        }
                    }
                }
            }
        }
        m
    }

    /// `self * other * self^t`-style product helper: plain 0/1-matrix product
    /// over the integers, returned as counts.
    pub fn count_product(&self, other: &Mat) -> Vec<usize> {
        assert_eq!(self.cols, other.rows);
        let mut out = vec![0usize; self.rows * other.cols];
        for i in 0..self.rows {
            for l in 0..self.cols {
                if self.get(i, l) == 1 {
                    for j in 0..other.cols {
                        out[i * other.cols + j] += other.get(l, j) as usize;
                    }
                }
            }
        }
        out
    }
}

/// The three block values used by the diagonal-aware substitution.
pub struct BlockMap<'a> {
    pub diag: &'a Mat,
    pub one: &'a Mat,
    pub zero: &'a Mat,
}

/// Replace every diagonal position of `template` by `blocks.diag`, every
/// off-diagonal 1 by `blocks.one` and every off-diagonal 0 by `blocks.zero`.
/// The three blocks must share dimensions.
pub fn block_substitute(template: &Mat, blocks: &BlockMap<'_>) -> Mat {
    assert_eq!(template.rows(), template.cols(), "template must be square");
    let (p, q) = (blocks.diag.rows(), blocks.diag.cols());
    assert_eq!(
        (p, q),
        (blocks.one.rows(), blocks.one.cols()),
        "block dimension mismatch"
    );
    assert_eq!(
        (p, q),
        (blocks.zero.rows(), blocks.zero.cols()),
        "block dimension mismatch"
    );
    let t = template.rows();
    let mut m = Mat::zero(t * p, t * q);
    for a in 0..t {
        for b in 0..t {
            let block = if a == b {
                blocks.diag
            } else if template.get(a, b) == 1 {
                blocks.one
            } else {
                blocks.zero
            };
            for x in 0..p {
                for y in 0..q {
                    if block.get(x, y) == 1 {
                        m.set(a * p + x, b * q + y, 1);
                    }
                }
            }
        }
    }
    m
}

/// Substitute by entry value only (no diagonal distinction): every 1 of
/// `template` becomes `one`, every 0 becomes `zero`.
pub fn value_substitute(template: &Mat, one: &Mat, zero: &Mat) -> Mat {
    assert_eq!(
        (one.rows(), one.cols()),
        (zero.rows(), zero.cols()),
        "block dimension mismatch"
    );
    let (p, q) = (one.rows(), one.cols());
    let mut m = Mat::zero(template.rows() * p, template.cols() * q);
    for a in 0..template.rows() {
        for b in 0..template.cols() {
            let block = if template.get(a, b) == 1 { one } else { zero };
            for x in 0..p {
                for y in 0..q {
                    if block.get(x, y) == 1 {
                        m.set(a * p + x, b * q + y, 1);
                    }
                }
            }
        }
    }
    m
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            for j in 0..self.cols {
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kronecker_block_diagonal() {
        let i2 = Mat::identity(2);
        let a = Mat::from_rows(vec![vec![0, 1], vec![0, 0]]);
        let k = i2.kronecker(&a);
        assert_eq!(k.rows(), 4);
        assert_eq!(k.get(0, 1), 1);
        assert_eq!(k.get(2, 3), 1);
        assert_eq!(k.get(0, 3), 0);
        assert_eq!(k.get(2, 1), 0);
    }

    #[test]
    fn kronecker_identity_case() {
        let j1 = Mat::ones(1, 1);
        let a = Mat::from_rows(vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(j1.kronecker(&a), a);
    }

    #[test]
    fn back_diag_is_involution() {
        for n in [1usize, 3, 5] {
            let r = Mat::back_diag(n);
            let r2 = r.count_product(&r);
            let id = Mat::identity(n);
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(r2[i * n + j] as u8, id.get(i, j));
                }
            }
        }
        assert_eq!(Mat::back_diag(1), Mat::ones(1, 1));
    }

    #[test]
    fn block_substitute_diagonal_distinction() {
        let t = Mat::identity(2);
        let j2 = Mat::ones(2, 2);
        let o2 = Mat::zero(2, 2);
        let m = block_substitute(
            &t,
            &BlockMap {
                diag: &j2,
                one: &j2,
                zero: &o2,
            },
        );
        // block-diagonal of two J_2
        for i in 0..4 {
            for j in 0..4 {
                let same_block = (i < 2) == (j < 2);
                assert_eq!(m.get(i, j), same_block as u8);
            }
        }
    }

    #[test]
    fn shift_circulant() {
        let c = Mat::shift(4);
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(c.get(i, j), ((j + 4 - i) % 4 == 1) as u8);
            }
        }
    }
}
