//! Identity checks. Each check expands both sides completely and compares
//! every entry; a failure carries the lexicographically first disagreeing
//! entry as a witness. A failed identity is a report, not an error: errors
//! are reserved for malformed inputs.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::time::Duration;

use crate::error::Error;
use crate::fusion::{self, labels, truncated_product, Factor, GradedFamily};
use crate::poly::LaurentPoly;
use crate::rmatrix::{swap21, RFamily};
use crate::tensor::{LegRole, LegSpace, TensorOp};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Witness {
    pub row: Vec<usize>,
    pub col: Vec<usize>,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "row {:?} col {:?}: lhs = {}, rhs = {}", self.row, self.col, self.lhs, self.rhs)
    }
}

/// Verdict of one named identity at one parameter point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    /// Sorted by key.
    pub params: Vec<(String, String)>,
    pub passed: bool,
    pub witness: Option<Witness>,
    /// Filled in by callers that own a clock.
    pub elapsed: Option<Duration>,
}

impl CheckReport {
    pub fn new(name: &str, params: Params, witness: Option<Witness>) -> Self {
        CheckReport {
            name: name.to_string(),
            params: params.into_sorted(),
            passed: witness.is_none(),
            witness,
            elapsed: None,
        }
    }

    pub fn param(&self, key: &str) -> Option<&str> {
        self.params.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ps: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{} [{}]: {}", self.name, ps.join(" "), if self.passed { "pass" } else { "FAIL" })?;
        if let Some(w) = &self.witness {
            write!(f, " at {w}")?;
        }
        Ok(())
    }
}

/// Parameter record builder.
#[derive(Clone, Debug, Default)]
pub struct Params(BTreeMap<String, String>);

impl Params {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.0.insert(key.into(), value.to_string());
        self
    }

    pub fn into_sorted(self) -> Vec<(String, String)> {
        self.0.into_iter().collect()
    }
}

fn witness_of(lhs: &TensorOp, rhs: &TensorOp) -> Result<Option<Witness>, Error> {
    Ok(lhs.first_difference(rhs)?.map(|d| Witness {
        row: d.at.row,
        col: d.at.col,
        lhs: d.lhs.to_string(),
        rhs: d.rhs.to_string(),
    }))
}

/// Compares two operators and wraps the verdict.
pub fn compare(name: &str, params: Params, lhs: &TensorOp, rhs: &TensorOp) -> Result<CheckReport, Error> {
    Ok(CheckReport::new(name, params, witness_of(lhs, rhs)?))
}

fn two_labels(r: &TensorOp) -> Result<(Option<String>, Option<String>), Error> {
    if r.legs().len() != 2 {
        return Err(Error::LegMismatch(format!("expected a two-leg operator, got {} legs", r.legs().len())));
    }
    Ok((r.legs()[0].label.clone(), r.legs()[1].label.clone()))
}

fn at_labels(r: &TensorOp, a: &str, b: &str) -> Result<TensorOp, Error> {
    match two_labels(r)? {
        (Some(x), Some(y)) => r.relabel(&[(x.as_str(), a), (y.as_str(), b)]),
        (None, None) => Ok(r.clone()),
        _ => Err(Error::LegMismatch("only one leg carries a spectral label".into())),
    }
}

fn variables_of(op: &TensorOp) -> Vec<String> {
    let mut names: Vec<String> = Vec::new();
    for (_, _, p) in op.flat_entries() {
        for x in p.vars().names() {
            if !names.contains(x) {
                names.push(x.clone());
            }
        }
    }
    for l in op.legs() {
        if let Some(x) = &l.label {
            if !names.contains(x) {
                names.push(x.clone());
            }
        }
    }
    names
}

/// `R₁₂R₁₃R₂₃ = R₂₃R₁₃R₁₂` on legs labeled `u, v, w`.
pub fn check_ybe(r: &TensorOp) -> Result<CheckReport, Error> {
    let (a, b) = two_labels(r)?;
    let n = r.legs()[0].dim;
    let labeled = a.is_some() && b.is_some();
    let ambient: Vec<LegSpace> = if labeled {
        ["u", "v", "w"].iter().map(|x| LegSpace::aux(n, x)).collect()
    } else {
        vec![LegSpace::unlabeled(n); 3]
    };
    let r12 = at_labels(r, "u", "v")?.embed_legs(&[0, 1], &ambient)?;
    let r13 = at_labels(r, "u", "w")?.embed_legs(&[0, 2], &ambient)?;
    let r23 = at_labels(r, "v", "w")?.embed_legs(&[1, 2], &ambient)?;
    let lhs = TensorOp::product([&r12, &r13, &r23])?;
    let rhs = TensorOp::product([&r23, &r13, &r12])?;
    compare("ybe", Params::new().with("n", n), &lhs, &rhs)
}

/// `r r̄ = r̄ r = ζ Id`.
pub fn check_quasi_inverse(r: &TensorOp, r_bar: &TensorOp, zeta: &LaurentPoly) -> Result<CheckReport, Error> {
    let z = TensorOp::scalar(r.legs().to_vec(), zeta.clone())?;
    let params = || Params::new().with("n", r.legs().first().map_or(1, |l| l.dim));
    let first = r.compose(r_bar)?;
    if let Some(w) = witness_of(&first, &z)? {
        return Ok(CheckReport::new("quasi_inverse", params().with("side", "right"), Some(w)));
    }
    let second = r_bar.compose(r)?;
    let w = witness_of(&second, &z)?;
    let side = if w.is_some() { "left" } else { "both" };
    Ok(CheckReport::new("quasi_inverse", params().with("side", side), w))
}

/// Splits an operator into its leading auxiliary leg and the coefficient
/// block, checking the auxiliary label.
fn aux_and_block(op: &TensorOp) -> Result<(String, Vec<LegSpace>), Error> {
    let first = op.legs().first().ok_or_else(|| Error::LegMismatch("operator has no legs".into()))?;
    let label =
        first.label.clone().ok_or_else(|| Error::LegMismatch("auxiliary leg carries no spectral label".into()))?;
    Ok((label, op.legs()[1..].to_vec()))
}

fn ensure_absent(op: &TensorOp, names: &[&str], except: &str) -> Result<(), Error> {
    for x in variables_of(op) {
        if x != except && names.contains(&x.as_str()) {
            return Err(Error::VariableClash(x));
        }
    }
    Ok(())
}

/// `R T₁(u) T₂(v) = T₂(v) T₁(u) R` where `t_op` has one auxiliary leg
/// followed by coefficient legs.
pub fn check_rtt(r: &TensorOp, t_op: &TensorOp) -> Result<CheckReport, Error> {
    let (a, b) = match two_labels(r)? {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::LegMismatch("R needs labeled legs".into())),
    };
    let (x, block) = aux_and_block(t_op)?;
    ensure_absent(t_op, &[a.as_str(), b.as_str()], &x)?;
    let t1 = t_op.relabel(&[(x.as_str(), a.as_str())])?;
    let t2 = t_op.relabel(&[(x.as_str(), b.as_str())])?;
    let mut ambient = r.legs().to_vec();
    ambient.extend(block.iter().cloned());
    let rest: Vec<usize> = (2..ambient.len()).collect();
    let r12 = r.embed_legs(&[0, 1], &ambient)?;
    let t1 = t1.embed_legs(&[&[0][..], &rest].concat(), &ambient)?;
    let t2 = t2.embed_legs(&[&[1][..], &rest].concat(), &ambient)?;
    let lhs = TensorOp::product([&r12, &t1, &t2])?;
    let rhs = TensorOp::product([&t2, &t1, &r12])?;
    compare("rtt", Params::new().with("n", ambient[0].dim), &lhs, &rhs)
}

/// Embeds `s1` (aux leg at the family's `u`) and `s2` (aux at `v`) into the
/// ambient `[u, v, block]`.
fn re_layout(fam: &RFamily, s1: &TensorOp, s2: &TensorOp) -> Result<(Vec<LegSpace>, TensorOp, TensorOp), Error> {
    let (x1, block1) = aux_and_block(s1)?;
    let (x2, block2) = aux_and_block(s2)?;
    if x1 != fam.u || x2 != fam.v {
        return Err(Error::LegMismatch(format!("solutions must sit at ({}, {}), got ({x1}, {x2})", fam.u, fam.v)));
    }
    if block1 != block2 {
        return Err(Error::LegMismatch("coefficient blocks differ".into()));
    }
    ensure_absent(s1, &[fam.v.as_str()], &x1)?;
    ensure_absent(s2, &[fam.u.as_str()], &x2)?;
    let mut ambient = fam.r.legs().to_vec();
    ambient.extend(block1.iter().cloned());
    let rest: Vec<usize> = (2..ambient.len()).collect();
    let e1 = s1.embed_legs(&[&[0][..], &rest].concat(), &ambient)?;
    let e2 = s2.embed_legs(&[&[1][..], &rest].concat(), &ambient)?;
    Ok((ambient, e1, e2))
}

fn re_params(fam: &RFamily) -> Params {
    Params::new().with("n", fam.n).with("g", fam.t.label())
}

/// `R S₁ R' S₂ = S₂ R'' S₁ R`.
pub fn check_re(fam: &RFamily, s1: &TensorOp, s2: &TensorOp) -> Result<CheckReport, Error> {
    let (ambient, e1, e2) = re_layout(fam, s1, s2)?;
    let r = fam.r.embed_legs(&[0, 1], &ambient)?;
    let rp = fam.r_prime.embed_legs(&[0, 1], &ambient)?;
    let rpp = fam.r_double_prime.embed_legs(&[0, 1], &ambient)?;
    let lhs = TensorOp::product([&r, &e1, &rp, &e2])?;
    let rhs = TensorOp::product([&e2, &rpp, &e1, &r])?;
    compare("re", re_params(fam), &lhs, &rhs)
}

/// [`check_re`] for a single solution given at any auxiliary label.
pub fn check_re_solution(fam: &RFamily, s: &TensorOp) -> Result<CheckReport, Error> {
    let (x, _) = aux_and_block(s)?;
    let s1 = s.relabel(&[(x.as_str(), fam.u.as_str())])?;
    let s2 = s.relabel(&[(x.as_str(), fam.v.as_str())])?;
    check_re(fam, &s1, &s2)
}

/// `R̄ S₁ (R̄)'' S₂ = S₂ (R̄)' S₁ R̄`, with the primes built by the same
/// rules as for `R`.
pub fn check_conjugate_re(fam: &RFamily, s1: &TensorOp, s2: &TensorOp) -> Result<CheckReport, Error> {
    let (ambient, e1, e2) = re_layout(fam, s1, s2)?;
    let bar_p = fam.r_bar.tau_on_leg(0, &fam.t)?;
    let bar_pp = swap21(&bar_p)?;
    let rb = fam.r_bar.embed_legs(&[0, 1], &ambient)?;
    let rbp = bar_p.embed_legs(&[0, 1], &ambient)?;
    let rbpp = bar_pp.embed_legs(&[0, 1], &ambient)?;
    let lhs = TensorOp::product([&rb, &e1, &rbpp, &e2])?;
    let rhs = TensorOp::product([&e2, &rbp, &e1, &rb])?;
    compare("conjugate_re", re_params(fam), &lhs, &rhs)
}

/// `σ_{i,i+1}(h)`: swaps sites `i`, `i+1` (0-based) and their spectral
/// variables, so that the result at `(.., a, b, ..)` is `h` at `(.., b, a, ..)`
/// with the two factors exchanged.
pub fn sigma(h: &TensorOp, i: usize) -> Result<TensorOp, Error> {
    let k = h.legs().len();
    if i + 1 >= k {
        return Err(Error::InvalidLeg(i + 1));
    }
    let mut perm: Vec<usize> = (0..k).collect();
    perm.swap(i, i + 1);
    let moved = h.leg_permute(&perm)?;
    match (&h.legs()[i].label, &h.legs()[i + 1].label) {
        (Some(a), Some(b)) => moved.relabel(&[(a.as_str(), b.as_str()), (b.as_str(), a.as_str())]),
        (None, None) => Ok(moved),
        _ => Err(Error::LegMismatch(format!("sites {i} and {} are labeled inconsistently", i + 1))),
    }
}

/// `R_{i,i+1} h = σ_{i,i+1}(h) R_{i,i+1}` for all adjacent pairs of the
/// leading auxiliary legs of `h`.
pub fn check_membership(h: &TensorOp, fam: &RFamily) -> Result<CheckReport, Error> {
    let k = h.legs().iter().take_while(|l| l.role == LegRole::Auxiliary).count();
    if k < 2 {
        return Err(Error::LegMismatch(format!("membership needs at least two auxiliary legs, got {k}")));
    }
    let params = || Params::new().with("n", fam.n).with("k", k);
    for i in 0..k - 1 {
        let (a, b) = match (&h.legs()[i].label, &h.legs()[i + 1].label) {
            (Some(a), Some(b)) => (a.clone(), b.clone()),
            _ => return Err(Error::LegMismatch(format!("auxiliary legs {i}, {} need labels", i + 1))),
        };
        let r = fam.r_at(&a, &b)?.embed_legs(&[i, i + 1], h.legs())?;
        let lhs = r.compose(h)?;
        let rhs = sigma(h, i)?.compose(&r)?;
        if let Some(w) = witness_of(&lhs, &rhs)? {
            return Ok(CheckReport::new("membership", params().with("i", i + 1), Some(w)));
        }
    }
    Ok(CheckReport::new("membership", params(), None))
}

/// Compares `S^(k)` with `S^(i)₁ (R')^{(i),(k-i)} S^(k-i)₂`. With
/// `primed = false` the middle factor is the unprimed fused R.
pub fn check_characteristic(family: &GradedFamily, k: usize, i: usize, primed: bool) -> Result<CheckReport, Error> {
    family.check_range(k)?;
    if i > k {
        return Err(Error::ComponentOutOfRange { k: i, k_max: k });
    }
    let seed = family.seed();
    let t = seed.transposition();
    let n = seed.n();
    let ambient = seed.component_legs(k);
    let first: Vec<usize> = (0..i).collect();
    let second: Vec<usize> = (i..k).collect();
    let coeff: Vec<usize> = (k..ambient.len()).collect();
    let kind = if primed { Factor::Primed(t) } else { Factor::Plain };
    let mut factors = seed.fused_factors_in(&ambient, &first, &coeff)?;
    factors.extend(fusion::fused_factors(n, &ambient, &first, &second, kind)?);
    factors.extend(seed.fused_factors_in(&ambient, &second, &coeff)?);
    let rhs = fusion::product_or_identity(&ambient, &factors)?;
    let lhs = family.component(k)?;
    let name = if primed { "characteristic" } else { "characteristic_unprimed" };
    let params = Params::new().with("n", n).with("g", t.label()).with("k", k).with("i", i);
    compare(name, params, lhs, &rhs)
}

/// Ambient `[u1..uk, v1..vm, block]` with the position lists of each part.
fn graded_layout(family: &GradedFamily, k: usize, m: usize) -> (Vec<LegSpace>, Vec<usize>, Vec<usize>, Vec<usize>) {
    let n = family.seed().n();
    let mut ambient = fusion::aux_legs(n, "u", k);
    ambient.extend(fusion::aux_legs(n, "v", m));
    ambient.extend(family.coeff_legs().iter().cloned());
    let us = (0..k).collect();
    let vs = (k..k + m).collect();
    let coeff = (k + m..ambient.len()).collect();
    (ambient, us, vs, coeff)
}

/// Graded reflection equation between components `k` and `m`:
/// `R^{(k),(m)} χ^(k)₁ R'^{(k),(m)} χ^(m)₂ = χ^(m)₂ R''^{(k),(m)} χ^(k)₁ R^{(k),(m)}`,
/// where `R''^{(k),(m)}` is `R'^{(m),(k)}` with its blocks exchanged.
pub fn check_re_components(family: &GradedFamily, k: usize, m: usize) -> Result<CheckReport, Error> {
    family.check_range(k)?;
    family.check_range(m)?;
    let seed = family.seed();
    let (n, t) = (seed.n(), seed.transposition());
    let (ambient, us, vs, coeff) = graded_layout(family, k, m);
    let r = fusion::fused_factors(n, &ambient, &us, &vs, Factor::Plain)?;
    let rp = fusion::fused_factors(n, &ambient, &us, &vs, Factor::Primed(t))?;
    let rpp = fusion::fused_factors(n, &ambient, &vs, &us, Factor::Primed(t))?;
    let s1 = seed.fused_factors_in(&ambient, &us, &coeff)?;
    let s2 = seed.fused_factors_in(&ambient, &vs, &coeff)?;
    let lhs = fusion::product_or_identity(&ambient, &[r.clone(), s1.clone(), rp, s2.clone()].concat())?;
    let rhs = fusion::product_or_identity(&ambient, &[s2, rpp, s1, r].concat())?;
    let params = Params::new().with("n", n).with("g", t.label()).with("k", k).with("m", m);
    compare("re_components", params, &lhs, &rhs)
}

/// The breve form of the graded reflection equation,
/// `R̆ χ₁ R̆' χ₂ = χ₂ R̆' χ₁ R̆`, modulo total order above `order` in
/// `v1..vm`.
pub fn check_intertwiner(family: &GradedFamily, order: u32, k: usize, m: usize) -> Result<CheckReport, Error> {
    family.check_range(k)?;
    family.check_range(m)?;
    let seed = family.seed();
    let (n, t) = (seed.n(), seed.transposition());
    let (ambient, us, vs, coeff) = graded_layout(family, k, m);
    let br = fusion::fused_factors(n, &ambient, &us, &vs, Factor::Breve(order))?;
    let brp = fusion::fused_factors(n, &ambient, &us, &vs, Factor::BrevePrimed(order, t))?;
    let s1 = seed.fused_factors_in(&ambient, &us, &coeff)?;
    let s2 = seed.fused_factors_in(&ambient, &vs, &coeff)?;
    let names = labels("v", m);
    let names: Vec<&str> = names.iter().map(String::as_str).collect();
    let lhs = truncated_product(&ambient, &[br.clone(), s1.clone(), brp.clone(), s2.clone()].concat(), &names, order)?;
    let rhs = truncated_product(&ambient, &[s2, brp, s1, br].concat(), &names, order)?;
    let params = Params::new().with("n", n).with("g", t.label()).with("k", k).with("m", m).with("order", order);
    compare("intertwiner", params, &lhs, &rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusion::{character_family, SeedSolution};
    use crate::matrix::RatMatrix;
    use crate::rmatrix::{yang_r, yang_r_bar};
    use crate::transposition::Transposition;

    fn fam2() -> RFamily {
        RFamily::yang(2, Transposition::identity(2)).unwrap()
    }

    fn constant(x: &RatMatrix, label: &str) -> TensorOp {
        TensorOp::from_matrix(LegSpace::aux(x.n(), label), x).unwrap()
    }

    #[test]
    fn ybe_cases() {
        assert!(check_ybe(&yang_r(2, "u", "v").unwrap()).unwrap().passed);
        let legs = yang_r(2, "u", "v").unwrap().legs().to_vec();
        assert!(check_ybe(&TensorOp::identity(legs.clone()).unwrap()).unwrap().passed);
        let flip = TensorOp::flip(legs[0].clone(), legs[1].clone()).unwrap();
        let base = TensorOp::scalar(legs.clone(), "u - v".parse().unwrap()).unwrap();
        // Rescaling P only rescales the spectral parameters, so it still solves.
        assert!(check_ybe(&base.sub(&flip.scale(&LaurentPoly::int(2))).unwrap()).unwrap().passed);
        let bump = TensorOp::from_entries(legs, [(vec![1, 2], vec![1, 2], LaurentPoly::one())]).unwrap();
        let bad = yang_r(2, "u", "v").unwrap().add(&bump).unwrap();
        let rep = check_ybe(&bad).unwrap();
        assert!(!rep.passed);
        assert!(rep.witness.is_some());
    }

    #[test]
    fn quasi_inverse_cases() {
        let r = yang_r(2, "u", "v").unwrap();
        let (rb, z) = yang_r_bar(2, "u", "v").unwrap();
        assert!(check_quasi_inverse(&r, &rb, &z).unwrap().passed);
        assert!(!check_quasi_inverse(&r, &rb, &LaurentPoly::one()).unwrap().passed);
        let legs = r.legs().to_vec();
        let p = TensorOp::flip(legs[0].clone(), legs[1].clone()).unwrap();
        assert!(check_quasi_inverse(&p, &p, &LaurentPoly::one()).unwrap().passed);
    }

    #[test]
    fn re_with_constants() {
        let fam = fam2();
        let id = RatMatrix::identity(2);
        assert!(check_re(&fam, &constant(&id, "u"), &constant(&id, "v")).unwrap().passed);
        let j = RatMatrix::symplectic(2).unwrap();
        assert!(check_re(&fam, &constant(&j, "u"), &constant(&j, "v")).unwrap().passed);
        let nil = RatMatrix::from_ints(&[&[0, 1], &[0, 0]]).unwrap();
        assert!(!check_re(&fam, &constant(&nil, "u"), &constant(&nil, "v")).unwrap().passed);
        assert!(matches!(check_re(&fam, &constant(&id, "v"), &constant(&id, "u")), Err(Error::LegMismatch(_))));
    }

    #[test]
    fn conjugate_re_trivial_and_contract() {
        let fam = fam2();
        let id = RatMatrix::identity(2);
        assert!(check_conjugate_re(&fam, &constant(&id, "u"), &constant(&id, "v")).unwrap().passed);
        let other = TensorOp::identity(vec![LegSpace::aux(2, "v"), LegSpace::quantum(2, Some("z"))]).unwrap();
        assert!(matches!(check_conjugate_re(&fam, &constant(&id, "u"), &other), Err(Error::LegMismatch(_))));
    }

    #[test]
    fn membership_cases() {
        let fam = fam2();
        let chi = character_family(&RatMatrix::identity(2), &Transposition::identity(2), 2).unwrap();
        assert!(check_membership(chi.component(2).unwrap(), &fam).unwrap().passed);
        let legs = fusion::aux_legs(2, "u", 2);
        let mut d = TensorOp::zero(legs.clone()).unwrap();
        let e = TensorOp::from_entries(legs, [(vec![1, 2], vec![1, 2], LaurentPoly::one())]).unwrap();
        d = d.add(&e).unwrap();
        assert!(!check_membership(&d, &fam).unwrap().passed);
    }

    #[test]
    fn membership_of_r_itself_fails() {
        // σ(R) = (u2-u1) Id - P, and R R differs from σ(R) R.
        let fam = fam2();
        let r = yang_r(2, "u1", "u2").unwrap();
        assert!(!check_membership(&r, &fam).unwrap().passed);
    }

    #[test]
    fn characteristic_partitions() {
        let t = Transposition::identity(2);
        let chi = character_family(&RatMatrix::identity(2), &t, 3).unwrap();
        for k in 0..=3 {
            for i in 0..=k {
                assert!(check_characteristic(&chi, k, i, true).unwrap().passed, "k={k} i={i}");
            }
        }
        let x = RatMatrix::from_ints(&[&[1, 2], &[2, 3]]).unwrap();
        let generic = GradedFamily::new(SeedSolution::constant(&x, t).unwrap(), 2);
        assert!(!check_characteristic(&generic, 2, 1, false).unwrap().passed);
    }

    #[test]
    fn graded_re_small() {
        let chi = character_family(&RatMatrix::symplectic(2).unwrap(), &Transposition::identity(2), 2).unwrap();
        for (k, m) in [(0, 1), (1, 1), (1, 2), (2, 1)] {
            assert!(check_re_components(&chi, k, m).unwrap().passed, "k={k} m={m}");
        }
    }

    #[test]
    fn intertwiner_small() {
        let chi = character_family(&RatMatrix::identity(2), &Transposition::identity(2), 1).unwrap();
        let rep = check_intertwiner(&chi, 4, 1, 1).unwrap();
        assert!(rep.passed);
        assert_eq!(rep.param("order"), Some("4"));
        assert!(check_intertwiner(&chi, 0, 1, 1).unwrap().passed);
    }
}
