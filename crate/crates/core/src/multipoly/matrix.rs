use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{MPoly, PolyError, Ring};
use crate::exactnum::BigRational;

/// Dense matrix of polynomials over one ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    data: Vec<MPoly>,
}

impl PolyMatrix {
    pub fn new(ring: &Ring, entries: Vec<Vec<MPoly>>) -> Result<Self, PolyError> {
        let rows = entries.len();
        let cols = entries.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows * cols);
        for row in entries {
            if row.len() != cols {
                return Err(PolyError::Ragged);
            }
            for e in row {
                if !super::same_ring(e.ring(), ring) {
                    return Err(PolyError::RingMismatch);
                }
                data.push(e);
            }
        }
        Ok(PolyMatrix { ring: ring.clone(), rows, cols, data })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &MPoly {
        &self.data[r * self.cols + c]
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        PolyMatrix { ring: self.ring.clone(), rows: self.cols, cols: self.rows, data }
    }

    /// Submatrix keeping the listed rows and columns, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for &r in rows {
            for &c in cols {
                data.push(self.get(r, c).clone());
            }
        }
        PolyMatrix { ring: self.ring.clone(), rows: rows.len(), cols: cols.len(), data }
    }

    /// Applies `f` to every entry. The result lives in the ring of the
    /// mapped entries, which must all agree.
    pub fn try_map<E: From<PolyError>>(&self, mut f: impl FnMut(&MPoly) -> Result<MPoly, E>) -> Result<PolyMatrix, E> {
        let data = self.data.iter().map(&mut f).collect::<Result<Vec<_>, E>>()?;
        let ring = data.first().map_or_else(|| self.ring.clone(), |e| e.ring().clone());
        if data.iter().any(|e| !super::same_ring(e.ring(), &ring)) {
            return Err(PolyError::RingMismatch.into());
        }
        Ok(PolyMatrix { ring, rows: self.rows, cols: self.cols, data })
    }

    /// Determinant: cofactor expansion up to 3x3, fraction-free Bareiss
    /// elimination beyond.
    pub fn det(&self) -> Result<MPoly, PolyError> {
        if self.rows != self.cols {
            return Err(PolyError::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        let e = |r: usize, c: usize| self.get(r, c);
        Ok(match n {
            0 => MPoly::one(&self.ring),
            1 => e(0, 0).clone(),
            2 => &(e(0, 0) * e(1, 1)) - &(e(0, 1) * e(1, 0)),
            3 => {
                let m = |a: usize, b: usize, c: usize, d: usize| &(e(a, c) * e(b, d)) - &(e(a, d) * e(b, c));
                let t0 = e(0, 0) * &m(1, 2, 1, 2);
                let t1 = e(0, 1) * &m(1, 2, 0, 2);
                let t2 = e(0, 2) * &m(1, 2, 0, 1);
                &(&t0 - &t1) + &t2
            }
            _ => self.bareiss(),
        })
    }

    fn bareiss(&self) -> MPoly {
        let n = self.rows;
        let mut a: Vec<Vec<MPoly>> = (0..n).map(|r| (0..n).map(|c| self.get(r, c).clone()).collect()).collect();
        let mut negate = false;
        let mut prev = MPoly::one(&self.ring);
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                // smallest nonzero pivot keeps intermediate sizes down
                let Some(p) = (k + 1..n).filter(|&r| !a[r][k].is_zero()).min_by_key(|&r| a[r][k].len()) else {
                    return MPoly::zero(&self.ring);
                };
                a.swap(k, p);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
                }
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        if negate {
            d.neg()
        } else {
            d
        }
    }
}

/// Determinant of a rational matrix by Gaussian elimination.
pub fn scalar_det(m: &[Vec<BigRational>]) -> Result<BigRational, PolyError> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(PolyError::NotSquare(n, m.first().map_or(0, Vec::len)));
    }
    let mut a: Vec<Vec<BigRational>> = m.to_vec();
    let mut det = BigRational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return Ok(BigRational::zero());
        };
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        det *= &a[k][k];
        for i in k + 1..n {
            let f = &a[i][k] / &a[k][k];
            for j in k..n {
                let t = &f * &a[k][j];
                a[i][j] -= t;
            }
        }
    }
    Ok(det)
}
