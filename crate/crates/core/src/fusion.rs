//! Fusion: multi-leg R-matrices, fused S-matrices built from a seed
//! solution of the reflection equation, and characters.
//!
//! Auxiliary legs are always labeled `u1..uk` (and `v1..vm` for a second
//! block) from left to right. Coefficient legs of a seed keep their own
//! labels and follow the auxiliary block.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use once_cell::race::OnceBox;

use crate::error::Error;
use crate::matrix::RatMatrix;
use crate::poly::LaurentPoly;
use crate::rmatrix::{breve_r_series, yang_r, RFamily};
use crate::tensor::{LegRole, LegSpace, TensorOp};
use crate::transposition::Transposition;

/// `prefix1 .. prefixK`.
pub fn labels(prefix: &str, count: usize) -> Vec<String> {
    (1..=count).map(|i| format!("{prefix}{i}")).collect()
}

/// Auxiliary legs of dimension `n` labeled `prefix1 .. prefixK`.
pub fn aux_legs(n: usize, prefix: &str, count: usize) -> Vec<LegSpace> {
    labels(prefix, count).iter().map(|l| LegSpace::aux(n, l)).collect()
}

fn label_of(ambient: &[LegSpace], pos: usize) -> Result<&str, Error> {
    ambient
        .get(pos)
        .ok_or(Error::InvalidLeg(pos))?
        .label
        .as_deref()
        .ok_or_else(|| Error::LegMismatch(format!("leg {pos} carries no spectral label")))
}

/// Which two-leg factor a fused product is made of.
#[derive(Clone, Copy, Debug)]
pub enum Factor<'a> {
    /// `R(a,b)`.
    Plain,
    /// `R'(a,b) = (τ⊗id) R(a,b)`.
    Primed(&'a Transposition),
    /// Truncated Laurent expansion of `Id - P/(a-b)`.
    Breve(u32),
    /// `τ` on the first leg of the breve expansion.
    BrevePrimed(u32, &'a Transposition),
}

impl Factor<'_> {
    fn build(&self, n: usize, a: &str, b: &str) -> Result<TensorOp, Error> {
        match *self {
            Factor::Plain => yang_r(n, a, b),
            Factor::Primed(t) => yang_r(n, a, b)?.tau_on_leg(0, t),
            Factor::Breve(k) => breve_r_series(n, a, b, k),
            Factor::BrevePrimed(k, t) => breve_r_series(n, a, b, k)?.tau_on_leg(0, t),
        }
    }

    fn is_primed(&self) -> bool {
        matches!(self, Factor::Primed(_) | Factor::BrevePrimed(..))
    }
}

/// Embedded factors of `∏_{i} ∏_{j} X_{first[i], second[j]}` over an
/// ambient leg sequence, with `j` descending for unprimed factors and
/// ascending for primed ones. Empty when either block is empty.
pub fn fused_factors(
    n: usize,
    ambient: &[LegSpace],
    first: &[usize],
    second: &[usize],
    kind: Factor<'_>,
) -> Result<Vec<TensorOp>, Error> {
    let mut out = Vec::with_capacity(first.len() * second.len());
    for &i in first {
        let js: Vec<usize> = if kind.is_primed() { second.to_vec() } else { second.iter().rev().copied().collect() };
        for j in js {
            let f = kind.build(n, label_of(ambient, i)?, label_of(ambient, j)?)?;
            out.push(f.embed_legs(&[i, j], ambient)?);
        }
    }
    Ok(out)
}

/// Product of operators on `ambient`, identity when the list is empty.
pub fn product_or_identity(ambient: &[LegSpace], ops: &[TensorOp]) -> Result<TensorOp, Error> {
    if ops.is_empty() {
        return TensorOp::identity(ambient.to_vec());
    }
    TensorOp::product(ops)
}

/// `R^{(k),(m)}` on legs `u1..uk, v1..vm`; primed when `t` is given.
pub fn fused_r(k: usize, m: usize, n: usize, t: Option<&Transposition>) -> Result<TensorOp, Error> {
    let mut ambient = aux_legs(n, "u", k);
    ambient.extend(aux_legs(n, "v", m));
    let first: Vec<usize> = (0..k).collect();
    let second: Vec<usize> = (k..k + m).collect();
    let kind = match t {
        Some(t) => Factor::Primed(t),
        None => Factor::Plain,
    };
    product_or_identity(&ambient, &fused_factors(n, &ambient, &first, &second, kind)?)
}

/// Breve analogue of [`fused_r`], truncated at total order `order` in
/// `v1..vm`.
pub fn fused_breve(k: usize, m: usize, n: usize, order: u32, t: Option<&Transposition>) -> Result<TensorOp, Error> {
    let mut ambient = aux_legs(n, "u", k);
    ambient.extend(aux_legs(n, "v", m));
    let first: Vec<usize> = (0..k).collect();
    let second: Vec<usize> = (k..k + m).collect();
    let kind = match t {
        Some(t) => Factor::BrevePrimed(order, t),
        None => Factor::Breve(order),
    };
    let vs = labels("v", m);
    let names: Vec<&str> = vs.iter().map(String::as_str).collect();
    truncated_product(&ambient, &fused_factors(n, &ambient, &first, &second, kind)?, &names, order)
}

/// Left-to-right product, dropping terms of total order above `order` in
/// `names` after every step. Exact modulo that order as long as no factor
/// has negative order in `names`.
pub fn truncated_product(
    ambient: &[LegSpace],
    ops: &[TensorOp],
    names: &[&str],
    order: u32,
) -> Result<TensorOp, Error> {
    let mut acc = TensorOp::identity(ambient.to_vec())?;
    for op in ops {
        acc = acc.compose(op)?.truncate_order(names, order as i32);
    }
    Ok(acc)
}

/// `∏_{1≤i<j≤k} ((u_i+u_j)² - 1)`.
pub fn omega_factor(k: usize) -> LaurentPoly {
    let us = labels("u", k);
    let mut acc = LaurentPoly::one();
    for i in 0..k {
        for j in i + 1..k {
            let s = &LaurentPoly::var(&us[i]) + &LaurentPoly::var(&us[j]);
            acc = &acc * &(&(&s * &s) - &LaurentPoly::one());
        }
    }
    acc
}

fn reserved(name: &str) -> bool {
    let rest = match name.strip_prefix('u').or_else(|| name.strip_prefix('v')) {
        Some(r) => r,
        None => return false,
    };
    rest.is_empty() || rest.bytes().all(|b| b.is_ascii_digit())
}

/// A solution `S(u)` of the reflection equation: one auxiliary leg followed
/// by a (possibly empty) block of coefficient legs.
#[derive(Clone, Debug)]
pub struct SeedSolution {
    s: TensorOp,
    t: Transposition,
    aux: String,
}

impl SeedSolution {
    /// Accepts `s` after verifying the reflection equation with the Yang
    /// family for `t`.
    pub fn new(s: TensorOp, t: Transposition) -> Result<Self, Error> {
        let legs = s.legs();
        let first = legs.first().ok_or_else(|| Error::LegMismatch("seed has no legs".into()))?;
        if first.dim != t.n() {
            return Err(Error::DimensionMismatch { leg: 0, expected: t.n(), found: first.dim });
        }
        let aux = first.label.clone().unwrap_or_else(|| "u".into());
        for l in &legs[1..] {
            if let Some(x) = &l.label {
                if reserved(x) || *x == aux {
                    return Err(Error::VariableClash(x.clone()));
                }
            }
        }
        for (_, p) in s.flat_entries().map(|(r, c, p)| ((r, c), p)) {
            for x in p.vars().names() {
                if *x != aux && reserved(x) {
                    return Err(Error::VariableClash(x.clone()));
                }
            }
        }
        let mut relabeled_legs = legs.to_vec();
        relabeled_legs[0] = LegSpace { dim: first.dim, label: Some(aux.clone()), role: LegRole::Auxiliary };
        let s = s.with_legs(relabeled_legs)?;
        let seed = SeedSolution { s, t, aux };
        let fam = RFamily::yang(seed.t.n(), seed.t.clone())?;
        let report = crate::verify::check_re(&fam, &seed.at("u")?, &seed.at("v")?)?;
        match report.witness {
            None => Ok(seed),
            Some(w) => Err(Error::SeedRejected(w.to_string())),
        }
    }

    /// The constant solution `S(u) = X`. `X` must satisfy `t(X) = ±X`.
    pub fn constant(x: &RatMatrix, t: Transposition) -> Result<Self, Error> {
        if x.n() != t.n() {
            return Err(Error::DimensionMismatch { leg: 0, expected: t.n(), found: x.n() });
        }
        t.parity_of(x)?;
        let s = TensorOp::from_matrix(LegSpace::aux(x.n(), "u"), x)?;
        Self::new(s, t)
    }

    pub fn transposition(&self) -> &Transposition {
        &self.t
    }

    pub fn n(&self) -> usize {
        self.t.n()
    }

    pub fn coeff_legs(&self) -> &[LegSpace] {
        &self.s.legs()[1..]
    }

    /// The seed with its auxiliary variable renamed.
    pub fn at(&self, label: &str) -> Result<TensorOp, Error> {
        if label == self.aux {
            return Ok(self.s.clone());
        }
        self.s.relabel(&[(self.aux.as_str(), label)])
    }

    /// Factors of `∏_{i}(S_i ∏_{j>i} R'_{ij})` over `ambient`, with the
    /// auxiliary legs at `aux_pos` (in order) and the coefficient block at
    /// `coeff_pos`.
    pub fn fused_factors_in(
        &self,
        ambient: &[LegSpace],
        aux_pos: &[usize],
        coeff_pos: &[usize],
    ) -> Result<Vec<TensorOp>, Error> {
        if coeff_pos.len() != self.coeff_legs().len() {
            return Err(Error::LegMismatch(format!(
                "{} coefficient positions for {} coefficient legs",
                coeff_pos.len(),
                self.coeff_legs().len()
            )));
        }
        let n = self.n();
        let mut out = Vec::new();
        for (a, &i) in aux_pos.iter().enumerate() {
            let mut targets = vec![i];
            targets.extend_from_slice(coeff_pos);
            out.push(self.at(label_of(ambient, i)?)?.embed_legs(&targets, ambient)?);
            for &j in &aux_pos[a + 1..] {
                let r = Factor::Primed(&self.t).build(n, label_of(ambient, i)?, label_of(ambient, j)?)?;
                out.push(r.embed_legs(&[i, j], ambient)?);
            }
        }
        Ok(out)
    }

    /// Legs `u1..uk` followed by the coefficient block.
    pub fn component_legs(&self, k: usize) -> Vec<LegSpace> {
        let mut legs = aux_legs(self.n(), "u", k);
        legs.extend(self.coeff_legs().iter().cloned());
        legs
    }
}

/// The `k`-th fused component `S^(k) = ∏_{i=1..k}(S_i ∏_{j=i+1..k} R'_{ij})`.
pub fn fused_s(seed: &SeedSolution, k: usize) -> Result<TensorOp, Error> {
    let legs = seed.component_legs(k);
    let aux: Vec<usize> = (0..k).collect();
    let coeff: Vec<usize> = (k..legs.len()).collect();
    product_or_identity(&legs, &seed.fused_factors_in(&legs, &aux, &coeff)?)
}

/// The `k`-th component of the character defined by a constant `X`.
pub fn character_chi(x: &RatMatrix, t: &Transposition, k: usize) -> Result<TensorOp, Error> {
    fused_s(&SeedSolution::constant(x, t.clone())?, k)
}

/// Default truncation of graded families.
pub const DEFAULT_K_MAX: usize = 3;

/// Components `0..=k_max` of a fused S-matrix, built lazily and cached.
pub struct GradedFamily {
    seed: SeedSolution,
    k_max: usize,
    cache: Vec<OnceBox<TensorOp>>,
}

impl GradedFamily {
    pub fn new(seed: SeedSolution, k_max: usize) -> Self {
        GradedFamily { seed, k_max, cache: (0..=k_max).map(|_| OnceBox::new()).collect() }
    }

    pub fn seed(&self) -> &SeedSolution {
        &self.seed
    }

    pub fn k_max(&self) -> usize {
        self.k_max
    }

    pub fn coeff_legs(&self) -> &[LegSpace] {
        self.seed.coeff_legs()
    }

    pub fn component(&self, k: usize) -> Result<&TensorOp, Error> {
        let slot = self.cache.get(k).ok_or(Error::ComponentOutOfRange { k, k_max: self.k_max })?;
        // Concurrent fills compute the same value; the first one wins.
        slot.get_or_try_init(|| fused_s(&self.seed, k).map(Box::new))
    }

    pub fn check_range(&self, k: usize) -> Result<(), Error> {
        if k > self.k_max {
            return Err(Error::ComponentOutOfRange { k, k_max: self.k_max });
        }
        Ok(())
    }
}

impl Clone for GradedFamily {
    fn clone(&self) -> Self {
        GradedFamily::new(self.seed.clone(), self.k_max)
    }
}

impl core::fmt::Debug for GradedFamily {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("GradedFamily").field("seed", &self.seed).field("k_max", &self.k_max).finish()
    }
}

/// The character family of a constant `X`.
pub fn character_family(x: &RatMatrix, t: &Transposition, k_max: usize) -> Result<GradedFamily, Error> {
    Ok(GradedFamily::new(SeedSolution::constant(x, t.clone())?, k_max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rmatrix::identity_on;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn empty_blocks_give_identity() {
        assert_eq!(fused_r(0, 2, 2, None).unwrap(), identity_on(2, &["v1", "v2"]).unwrap());
        assert_eq!(fused_breve(1, 0, 2, 3, None).unwrap(), identity_on(2, &["u1"]).unwrap());
    }

    #[test]
    fn single_factor() {
        let r = yang_r(2, "u1", "v1").unwrap();
        assert_eq!(fused_r(1, 1, 2, None).unwrap(), r);
    }

    #[test]
    fn two_by_one_is_coproduct() {
        let amb = vec![LegSpace::aux(2, "u1"), LegSpace::aux(2, "u2"), LegSpace::aux(2, "v1")];
        let r13 = yang_r(2, "u1", "v1").unwrap().embed_legs(&[0, 2], &amb).unwrap();
        let r23 = yang_r(2, "u2", "v1").unwrap().embed_legs(&[1, 2], &amb).unwrap();
        assert_eq!(fused_r(2, 1, 2, None).unwrap(), r13.compose(&r23).unwrap());
    }

    #[test]
    fn omega_small() {
        assert_eq!(omega_factor(0), LaurentPoly::one());
        assert_eq!(omega_factor(1), LaurentPoly::one());
        assert_eq!(omega_factor(2), p("u1^2 + 2*u1*u2 + u2^2 - 1"));
        let f = |a: &str, b: &str| &(&(&p(a) + &p(b)) * &(&p(a) + &p(b))) - &LaurentPoly::one();
        let want = &(&f("u1", "u2") * &f("u1", "u3")) * &f("u2", "u3");
        assert_eq!(omega_factor(3), want);
    }

    #[test]
    fn character_rejections() {
        let t = Transposition::identity(2);
        let bad = RatMatrix::from_ints(&[&[0, 1], &[0, 0]]).unwrap();
        assert_eq!(character_chi(&bad, &t, 1).unwrap_err(), Error::NotSymmetric(1, 2));
    }

    #[test]
    fn character_low_components() {
        let t = Transposition::identity(2);
        let id = RatMatrix::identity(2);
        assert_eq!(character_chi(&id, &t, 0).unwrap(), TensorOp::identity(vec![]).unwrap());
        assert_eq!(character_chi(&id, &t, 1).unwrap(), identity_on(2, &["u1"]).unwrap());
        let j = RatMatrix::symplectic(2).unwrap();
        let fam = RFamily::yang(2, t.clone()).unwrap();
        let amb = aux_legs(2, "u", 2);
        let x1 = TensorOp::from_matrix(amb[0].clone(), &j).unwrap().embed_legs(&[0], &amb).unwrap();
        let x2 = TensorOp::from_matrix(amb[1].clone(), &j).unwrap().embed_legs(&[1], &amb).unwrap();
        let rp = fam.r_prime_at("u1", "u2").unwrap();
        let want = TensorOp::product([&x1, &rp, &x2]).unwrap();
        assert_eq!(character_chi(&j, &t, 2).unwrap(), want);
    }

    #[test]
    fn seed_labels_checked() {
        let t = Transposition::identity(2);
        let legs = vec![LegSpace::aux(2, "u"), LegSpace::quantum(2, Some("v3"))];
        let s = TensorOp::identity(legs).unwrap();
        assert_eq!(SeedSolution::new(s, t).unwrap_err(), Error::VariableClash("v3".into()));
    }

    #[test]
    fn graded_family_bounds() {
        let fam = character_family(&RatMatrix::identity(2), &Transposition::identity(2), 2).unwrap();
        assert!(fam.component(2).is_ok());
        assert_eq!(fam.component(3).unwrap_err(), Error::ComponentOutOfRange { k: 3, k_max: 2 });
        assert_eq!(fam.component(0).unwrap().dim(), 1);
    }
}
