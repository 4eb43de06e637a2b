//! Exact integer matrices: fraction-free elimination, rank and nullspace.
//!
//! Rows are reduced with cross-multiplication in `i128` and divided by
//! their content after every step, which keeps entries small on the
//! 0/±1 matrices produced by string modules. All arithmetic is checked;
//! overflow surfaces as [`OracleError::Overflow`] instead of a wrong rank.

use num_integer::Integer;

use crate::error::OracleError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        Mat {
            rows,
            cols,
            data: entries.to_vec(),
        }
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<i64>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, &x) in c.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: i64) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &Mat) -> Result<Mat, OracleError> {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b == 0 {
                        continue;
                    }
                    let v = a
                        .checked_mul(b)
                        .and_then(|p| p.checked_add(out.get(i, j)))
                        .ok_or(OracleError::Overflow)?;
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[i64]) -> Result<Vec<i64>, OracleError> {
        assert_eq!(
            self.cols,
            v.len(),
            "shape mismatch in matrix-vector product"
        );
        (0..self.rows)
            .map(|i| {
                self.row(i).iter().zip(v).try_fold(0i64, |acc, (&a, &b)| {
                    a.checked_mul(b)
                        .and_then(|p| p.checked_add(acc))
                        .ok_or(OracleError::Overflow)
                })
            })
            .collect()
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Mat {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }
}

struct Echelon {
    rows: Vec<Vec<i128>>,
    pivots: Vec<usize>,
}

fn normalize(row: &mut [i128]) {
    let g = row.iter().fold(0i128, |g, &x| g.gcd(&x));
    if g > 1 {
        for x in row.iter_mut() {
            *x /= g;
        }
    }
}

/// Reduced echelon form: every pivot column is zero outside its pivot row.
fn echelon(m: &Mat) -> Result<Echelon, OracleError> {
    let mut rows: Vec<Vec<i128>> = (0..m.rows)
        .map(|i| m.row(i).iter().map(|&x| x as i128).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, p);
        normalize(&mut rows[r]);
        if rows[r][c] < 0 {
            for x in rows[r].iter_mut() {
                *x = -*x;
            }
        }
        let pivot_row = rows[r].clone();
        let pv = pivot_row[c];
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let f = row[c];
            for (x, &y) in row.iter_mut().zip(&pivot_row) {
                *x = x
                    .checked_mul(pv)
                    .and_then(|a| y.checked_mul(f).and_then(|b| a.checked_sub(b)))
                    .ok_or(OracleError::Overflow)?;
            }
            normalize(row);
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    Ok(Echelon { rows, pivots })
}

pub fn rank(m: &Mat) -> Result<usize, OracleError> {
    if m.rows == 0 || m.cols == 0 {
        return Ok(0);
    }
    Ok(echelon(m)?.pivots.len())
}

/// Rank of the matrix whose columns are `vectors`.
pub fn rank_of_vectors(dim: usize, vectors: &[Vec<i64>]) -> Result<usize, OracleError> {
    if vectors.is_empty() || dim == 0 {
        return Ok(0);
    }
    rank(&Mat::from_columns(dim, vectors))
}

/// Integer basis of `{x : m x = 0}`, each vector primitive.
pub fn nullspace(m: &Mat) -> Result<Vec<Vec<i64>>, OracleError> {
    if m.cols == 0 {
        return Ok(Vec::new());
    }
    let e = if m.rows == 0 {
        Echelon {
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    } else {
        echelon(m)?
    };
    let mut out = Vec::new();
    for f in (0..m.cols).filter(|c| !e.pivots.contains(c)) {
        let scale = e
            .rows
            .iter()
            .zip(&e.pivots)
            .filter(|(row, _)| row[f] != 0)
            .fold(1i128, |l, (row, &pc)| l.lcm(&row[pc]));
        let mut v = vec![0i128; m.cols];
        v[f] = scale;
        for (row, &pc) in e.rows.iter().zip(&e.pivots) {
            if row[f] != 0 {
                v[pc] = -row[f]
                    .checked_mul(scale / row[pc])
                    .ok_or(OracleError::Overflow)?;
            }
        }
        normalize(&mut v);
        out.push(
            v.into_iter()
                .map(|x| i64::try_from(x).map_err(|_| OracleError::Overflow))
                .collect::<Result<Vec<i64>, _>>()?,
        );
    }
    Ok(out)
}
