//! The transposition `t(A) = g Aᵀ g⁻¹` defined by a symmetric or
//! skew-symmetric invertible form `g`.

use core::fmt;

use crate::error::Error;
use crate::matrix::RatMatrix;
use crate::rational::Rational;

/// Whether `g` is symmetric (orthogonal flavour) or skew (symplectic).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FormKind {
    Symmetric,
    Skew,
}

impl FormKind {
    pub fn sign(self) -> i64 {
        match self {
            FormKind::Symmetric => 1,
            FormKind::Skew => -1,
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Transposition {
    g: RatMatrix,
    g_inv: RatMatrix,
    kind: FormKind,
}

impl Transposition {
    /// Plain matrix transposition, `g = Id`.
    pub fn identity(n: usize) -> Self {
        let g = RatMatrix::identity(n);
        Transposition { g_inv: g.clone(), g, kind: FormKind::Symmetric }
    }

    /// `g` the standard symplectic form of even size `n`.
    pub fn symplectic(n: usize) -> Result<Self, Error> {
        Self::new(RatMatrix::symplectic(n)?)
    }

    /// Validates `gᵀ = ±g` and invertibility.
    pub fn new(g: RatMatrix) -> Result<Self, Error> {
        let n = g.n();
        let mut sym = true;
        let mut skew = true;
        for i in 0..n {
            for j in 0..n {
                let (a, b) = (g.get(i, j), g.get(j, i));
                sym &= a == b;
                skew &= *a == -b;
                if !sym && !skew {
                    return Err(Error::NotInvolutive(i + 1, j + 1));
                }
            }
        }
        let g_inv = g.inverse()?;
        // A nonzero skew form is never symmetric, so this is unambiguous.
        let kind = if sym { FormKind::Symmetric } else { FormKind::Skew };
        Ok(Transposition { g, g_inv, kind })
    }

    pub fn n(&self) -> usize {
        self.g.n()
    }

    pub fn g(&self) -> &RatMatrix {
        &self.g
    }

    pub fn g_inv(&self) -> &RatMatrix {
        &self.g_inv
    }

    pub fn kind(&self) -> FormKind {
        self.kind
    }

    pub fn is_plain(&self) -> bool {
        self.g == RatMatrix::identity(self.n())
    }

    /// `t(A) = g Aᵀ g⁻¹`.
    pub fn apply(&self, a: &RatMatrix) -> RatMatrix {
        &(&self.g * &a.transpose()) * &self.g_inv
    }

    /// Coefficient of `E_{pq}` in `t(E_{ij})`, i.e. `g_{pj} (g⁻¹)_{iq}`
    /// (0-based).
    pub fn unit_coeff(&self, i: usize, j: usize, p: usize, q: usize) -> Rational {
        self.g.get(p, j) * self.g_inv.get(i, q)
    }

    /// Whether `t(x) = x` or `t(x) = -x`. On failure returns the first
    /// (1-based) entry where neither holds.
    pub fn parity_of(&self, x: &RatMatrix) -> Result<i64, Error> {
        let tx = self.apply(x);
        let n = x.n();
        let mut plus = true;
        let mut minus = true;
        for i in 0..n {
            for j in 0..n {
                plus &= tx.get(i, j) == x.get(i, j);
                minus &= *tx.get(i, j) == -x.get(i, j);
                if !plus && !minus {
                    return Err(Error::NotSymmetric(i + 1, j + 1));
                }
            }
        }
        Ok(if plus { 1 } else { -1 })
    }

    pub fn label(&self) -> &'static str {
        if self.is_plain() {
            "identity"
        } else {
            match self.kind {
                FormKind::Symmetric => "symmetric",
                FormKind::Skew => "symplectic",
            }
        }
    }
}

impl fmt::Debug for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Transposition").field("kind", &self.kind).field("g", &self.g).finish()
    }
}
