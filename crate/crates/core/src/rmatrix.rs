//! The Yang R-matrix `R(u,v) = (u-v) Id - P` and its relatives.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::poly::{LaurentPoly, Substitution};
use crate::tensor::{LegSpace, TensorOp};
use crate::transposition::Transposition;

/// Default truncation order for Laurent expansions.
pub const DEFAULT_ORDER: u32 = 8;

fn two_legs(n: usize, u: &str, v: &str) -> Result<Vec<LegSpace>, Error> {
    if u == v {
        return Err(Error::VariableClash(u.into()));
    }
    Ok(vec![LegSpace::aux(n, u), LegSpace::aux(n, v)])
}

fn flip_on(legs: &[LegSpace]) -> Result<TensorOp, Error> {
    TensorOp::flip(legs[0].clone(), legs[1].clone())
}

fn difference(u: &str, v: &str) -> LaurentPoly {
    &LaurentPoly::var(u) - &LaurentPoly::var(v)
}

/// `(u-v) Id - P` on legs labeled `u`, `v`.
pub fn yang_r(n: usize, u: &str, v: &str) -> Result<TensorOp, Error> {
    let legs = two_legs(n, u, v)?;
    TensorOp::scalar(legs.clone(), difference(u, v))?.sub(&flip_on(&legs)?)
}

/// The quasi-inverse `(u-v) Id + P` and `ζ = (u-v)² - 1`.
pub fn yang_r_bar(n: usize, u: &str, v: &str) -> Result<(TensorOp, LaurentPoly), Error> {
    let legs = two_legs(n, u, v)?;
    let d = difference(u, v);
    let r_bar = TensorOp::scalar(legs.clone(), d.clone())?.add(&flip_on(&legs)?)?;
    let zeta = &(&d * &d) - &LaurentPoly::one();
    Ok((r_bar, zeta))
}

/// Swaps the two tensor factors of a two-leg operator while keeping the
/// spectral variables attached to positions: `X(u,v) -> X₂₁(u,v)`.
pub fn swap21(op: &TensorOp) -> Result<TensorOp, Error> {
    if op.legs().len() != 2 {
        return Err(Error::LegMismatch("swap21 needs exactly two legs".into()));
    }
    let moved = op.leg_permute(&[1, 0])?;
    match (&op.legs()[0].label, &op.legs()[1].label) {
        (Some(a), Some(b)) => moved.relabel(&[(a.as_str(), b.as_str()), (b.as_str(), a.as_str())]),
        _ => Ok(moved),
    }
}

/// `R' = (τ⊗id)(R)` and `R'' = (R')₂₁`.
pub fn r_primes(n: usize, t: &Transposition, u: &str, v: &str) -> Result<(TensorOp, TensorOp), Error> {
    let r = yang_r(n, u, v)?;
    primes_of(&r, t)
}

/// Primed companions of an arbitrary two-leg operator.
pub fn primes_of(r: &TensorOp, t: &Transposition) -> Result<(TensorOp, TensorOp), Error> {
    let rp = r.tau_on_leg(0, t)?;
    let rpp = swap21(&rp)?;
    Ok((rp, rpp))
}

/// `Id - Σ_{k=0..K} v^k u^(-k-1) P`, the expansion of `Id - P/(u-v)` for
/// `|v| < |u|` truncated at order `K` in `v`.
pub fn breve_r_series(n: usize, u: &str, v: &str, order: u32) -> Result<TensorOp, Error> {
    let legs = two_legs(n, u, v)?;
    let mut series = LaurentPoly::zero();
    for k in 0..=order as i32 {
        series = &series + &(&LaurentPoly::var_pow(v, k) * &LaurentPoly::var_pow(u, -k - 1));
    }
    TensorOp::identity(legs.clone())?.sub(&flip_on(&legs)?.scale(&series))
}

/// Everything derived from the Yang R-matrix for one transposition.
#[derive(Clone, Debug)]
pub struct RFamily {
    pub n: usize,
    pub t: Transposition,
    pub u: String,
    pub v: String,
    pub r: TensorOp,
    pub r_bar: TensorOp,
    pub zeta: LaurentPoly,
    pub r_prime: TensorOp,
    pub r_double_prime: TensorOp,
    pub zeta_prime: LaurentPoly,
}

impl RFamily {
    pub fn new(n: usize, t: Transposition, u: &str, v: &str) -> Result<Self, Error> {
        if t.n() != n {
            return Err(Error::DimensionMismatch { leg: 0, expected: n, found: t.n() });
        }
        let r = yang_r(n, u, v)?;
        let (r_bar, zeta) = yang_r_bar(n, u, v)?;
        let (r_prime, r_double_prime) = primes_of(&r, &t)?;
        let zeta_prime = zeta.substitute(&Substitution::new().neg_var(u, u))?;
        Ok(RFamily { n, t, u: u.to_string(), v: v.to_string(), r, r_bar, zeta, r_prime, r_double_prime, zeta_prime })
    }

    /// The family on legs labeled `u`, `v`.
    pub fn yang(n: usize, t: Transposition) -> Result<Self, Error> {
        Self::new(n, t, "u", "v")
    }

    /// Whether `R'' = R'`, which holds for the Yang matrix because
    /// `(τ⊗τ)(R) = R₂₁`. Computed, not assumed.
    pub fn double_prime_matches(&self) -> bool {
        self.r_prime == self.r_double_prime
    }

    /// `R(a,b)` for other labels.
    pub fn r_at(&self, a: &str, b: &str) -> Result<TensorOp, Error> {
        self.relabeled(&self.r, a, b)
    }

    pub fn r_prime_at(&self, a: &str, b: &str) -> Result<TensorOp, Error> {
        self.relabeled(&self.r_prime, a, b)
    }

    fn relabeled(&self, op: &TensorOp, a: &str, b: &str) -> Result<TensorOp, Error> {
        if a == b {
            return Err(Error::VariableClash(a.into()));
        }
        op.relabel(&[(self.u.as_str(), a), (self.v.as_str(), b)])
    }

    /// `(τ⊗τ)(R)`, for comparison with `R₂₁`.
    pub fn tau_tau(&self) -> Result<TensorOp, Error> {
        self.r.tau_on_leg(0, &self.t)?.tau_on_leg(1, &self.t)
    }

    pub fn r21(&self) -> Result<TensorOp, Error> {
        swap21(&self.r)
    }

    /// `-(u+v) Id - (t⊗id)(P)`, assembled directly from `g`.
    pub fn r_prime_closed_form(&self) -> Result<TensorOp, Error> {
        let n = self.n;
        let legs = self.r.legs().to_vec();
        let mut items = Vec::new();
        // (t⊗id)(P) = Σ_{i,j} t(E_ij) ⊗ E_ji
        for i in 0..n {
            for j in 0..n {
                for p in 0..n {
                    for q in 0..n {
                        let c = self.t.unit_coeff(i, j, p, q);
                        if !c.is_zero() {
                            items.push((vec![p + 1, j + 1], vec![q + 1, i + 1], LaurentPoly::constant(-c)));
                        }
                    }
                }
            }
        }
        let q = TensorOp::from_entries(legs.clone(), items)?;
        let s = -(&LaurentPoly::var(&self.u) + &LaurentPoly::var(&self.v));
        TensorOp::scalar(legs, s)?.add(&q)
    }
}

/// `Id` on `n`-dimensional legs labeled as given.
pub fn identity_on(n: usize, labels: &[&str]) -> Result<TensorOp, Error> {
    TensorOp::identity(labels.iter().map(|l| LegSpace::aux(n, l)).collect())
}

/// Entrywise coefficient of one monomial, as a constant operator.
pub fn series_coefficient(op: &TensorOp, exps: &[(&str, i32)]) -> Result<TensorOp, Error> {
    let items =
        op.flat_entries().map(|(r, c, p)| ((r, c), LaurentPoly::constant(p.coeff(exps)))).filter(|(_, p)| !p.is_zero());
    TensorOp::from_flat(
        op.legs().iter().map(|l| LegSpace { label: None, ..l.clone() }).collect(),
        items.collect::<Vec<_>>(),
    )
}

/// Constant flip on unlabeled legs, used to compare series coefficients.
pub fn plain_flip(n: usize) -> Result<TensorOp, Error> {
    TensorOp::flip(LegSpace::unlabeled(n), LegSpace::unlabeled(n))
}
