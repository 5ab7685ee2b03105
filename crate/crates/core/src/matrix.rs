//! Small dense rational matrices: the forms `g`, constant seeds `X`, and
//! their transposes. Indices here are 0-based.

use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

use crate::error::Error;
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    n: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zero(n: usize) -> Self {
        RatMatrix { n, data: alloc::vec![Rational::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    /// The standard symplectic form `[[0, I], [-I, 0]]`; `n` must be even.
    pub fn symplectic(n: usize) -> Result<Self, Error> {
        if n == 0 || !n.is_multiple_of(2) {
            return Err(Error::BadShape(alloc::format!("symplectic form needs even n, got {n}")));
        }
        let h = n / 2;
        let mut m = Self::zero(n);
        for i in 0..h {
            m.data[i * n + i + h] = Rational::one();
            m.data[(i + h) * n + i] = -Rational::one();
        }
        Ok(m)
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, Error> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::BadShape("empty matrix".into()));
        }
        let mut data = Vec::with_capacity(n * n);
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != n {
                return Err(Error::BadShape(alloc::format!("row {} has {} entries, expected {n}", i + 1, r.len())));
            }
            data.extend(r);
        }
        Ok(RatMatrix { n, data })
    }

    /// Convenience for tests and built-ins.
    pub fn from_ints(rows: &[&[i64]]) -> Result<Self, Error> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| Rational::from_int(x)).collect()).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.n + j] = v;
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut m = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                m.data[j * n + i] = self.data[i * n + j].clone();
            }
        }
        m
    }

    pub fn neg(&self) -> Self {
        RatMatrix { n: self.n, data: self.data.iter().map(|x| -x).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    /// Gauss-Jordan inverse.
    pub fn inverse(&self) -> Result<Self, Error> {
        let n = self.n;
        let mut a = self.data.clone();
        let mut inv = Self::identity(n).data;
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r * n + col].is_zero()).ok_or(Error::Singular)?;
            if pivot != col {
                for j in 0..n {
                    a.swap(pivot * n + j, col * n + j);
                    inv.swap(pivot * n + j, col * n + j);
                }
            }
            let p = a[col * n + col].recip()?;
            for j in 0..n {
                a[col * n + j] = &a[col * n + j] * &p;
                inv[col * n + j] = &inv[col * n + j] * &p;
            }
            for r in 0..n {
                if r == col || a[r * n + col].is_zero() {
                    continue;
                }
                let f = a[r * n + col].clone();
                for j in 0..n {
                    let da = &a[col * n + j] * &f;
                    a[r * n + j] -= &da;
                    let di = &inv[col * n + j] * &f;
                    inv[r * n + j] -= &di;
                }
            }
        }
        Ok(RatMatrix { n, data: inv })
    }
}

impl Mul for &RatMatrix {
    type Output = RatMatrix;
    fn mul(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.n, rhs.n, "matrix sizes differ");
        let n = self.n;
        let mut m = RatMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let p = a * &rhs.data[k * n + j];
                    m.data[i * n + j] += &p;
                }
            }
        }
        m
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[Rational]> = self.data.chunks(self.n.max(1)).collect();
        f.debug_list().entries(rows).finish()
    }
}
