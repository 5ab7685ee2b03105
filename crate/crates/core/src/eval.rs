//! Evaluation representatives. Rational matrix functions such as
//! `Id - P/(u-z)` are replaced by polynomial representatives with the
//! scalar denominator cleared; every relation checked here is linear in each
//! matrix series separately, so the cleared scalars cancel.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::poly::LaurentPoly;
use crate::rmatrix::yang_r;
use crate::tensor::{LegSpace, TensorOp};
use crate::transposition::Transposition;
use crate::verify::{compare, CheckReport, Params};

fn diff(a: &str, b: &str) -> LaurentPoly {
    &LaurentPoly::var(a) - &LaurentPoly::var(b)
}

fn eval_legs(n: usize, u: &str, z: &str) -> Result<Vec<LegSpace>, Error> {
    if u == z {
        return Err(Error::VariableClash(u.into()));
    }
    Ok(vec![LegSpace::aux(n, u), LegSpace::quantum(n, Some(z))])
}

/// `(u-z) Id + c P` on `(aux u, quantum z)`.
fn linear(n: usize, u: &str, z: &str, flip_coeff: i64) -> Result<TensorOp, Error> {
    let legs = eval_legs(n, u, z)?;
    let p = TensorOp::flip(legs[0].clone(), legs[1].clone())?;
    TensorOp::scalar(legs, diff(u, z))?.add(&p.scale(&LaurentPoly::int(flip_coeff)))
}

/// `T(u) -> Id - P/(u-z)`, stored as `(u-z) Id - P` together with `u-z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalRep {
    pub n: usize,
    pub uvar: String,
    pub zvar: String,
    pub t_poly: TensorOp,
    pub denom: LaurentPoly,
}

pub fn eval_t(n: usize, u: &str, z: &str) -> Result<EvalRep, Error> {
    Ok(EvalRep { n, uvar: u.into(), zvar: z.into(), t_poly: linear(n, u, z, -1)?, denom: diff(u, z) })
}

/// `S(u) -> Tᵗ(-u) T(u)` on the representatives:
/// `((-u-z) Id - Q)((u-z) Id - P)` with `Q = (t⊗id)(P)`.
pub fn build_twisted_s(rep: &EvalRep, t: &Transposition) -> Result<TensorOp, Error> {
    rep.t_poly.tau_on_leg(0, t)?.compose(&rep.t_poly)
}

/// Representatives for the double Yangian: `L⁺(u) -> (u-z) Id - P` over
/// `u-z`, and `L⁻(u) -> (u-z) Id + P` times `(u-z)/((u-z)² - 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleEval {
    pub n: usize,
    pub uvar: String,
    pub zvar: String,
    pub l_plus: TensorOp,
    pub l_minus: TensorOp,
    pub denom_plus: LaurentPoly,
    pub denom_minus: LaurentPoly,
}

pub fn eval_double(n: usize, u: &str, z: &str) -> Result<DoubleEval, Error> {
    let d = diff(u, z);
    Ok(DoubleEval {
        n,
        uvar: u.into(),
        zvar: z.into(),
        l_plus: linear(n, u, z, -1)?,
        l_minus: linear(n, u, z, 1)?,
        denom_plus: d.clone(),
        denom_minus: &(&d * &d) - &LaurentPoly::one(),
    })
}

impl DoubleEval {
    /// Same construction with `L⁻` replaced by `(u-z) Id + c P`.
    pub fn with_minus_flip(n: usize, u: &str, z: &str, c: i64) -> Result<Self, Error> {
        let mut d = eval_double(n, u, z)?;
        d.l_minus = linear(n, u, z, c)?;
        Ok(d)
    }

    fn at(&self, op: &TensorOp, label: &str) -> Result<TensorOp, Error> {
        if label == self.zvar {
            return Err(Error::VariableClash(label.into()));
        }
        op.relabel(&[(self.uvar.as_str(), label)])
    }
}

fn second_label(taken: &[&str]) -> &'static str {
    ["v", "w", "y", "x"].into_iter().find(|c| !taken.contains(c)).unwrap()
}

/// The three defining relation families of the double Yangian on the
/// representatives:
///
/// * `L⁻₁(u) L⁻₂(v) R(u,v) = R(u,v) L⁻₂(v) L⁻₁(u)`
/// * `R(u,v) L⁺₁(u) L⁺₂(v) = L⁺₂(v) L⁺₁(u) R(u,v)`
/// * `L⁺₁(v) R(v,u) L⁻₂(u) = L⁻₂(u) R(v,u) L⁺₁(v)`
///
/// with `R(a,b) = (a-b) Id - P`.
pub fn check_double_relations(d: &DoubleEval) -> Result<Vec<CheckReport>, Error> {
    let n = d.n;
    let u = d.uvar.as_str();
    let v = second_label(&[u, d.zvar.as_str()]);
    let quantum = LegSpace::quantum(n, Some(&d.zvar));
    let params = || Params::new().with("n", n);

    let ambient = vec![LegSpace::aux(n, u), LegSpace::aux(n, v), quantum.clone()];
    let r = yang_r(n, u, v)?.embed_legs(&[0, 1], &ambient)?;
    let m1 = d.at(&d.l_minus, u)?.embed_legs(&[0, 2], &ambient)?;
    let m2 = d.at(&d.l_minus, v)?.embed_legs(&[1, 2], &ambient)?;
    let p1 = d.at(&d.l_plus, u)?.embed_legs(&[0, 2], &ambient)?;
    let p2 = d.at(&d.l_plus, v)?.embed_legs(&[1, 2], &ambient)?;
    let minus = compare(
        "double_yangian_minus",
        params(),
        &TensorOp::product([&m1, &m2, &r])?,
        &TensorOp::product([&r, &m2, &m1])?,
    )?;
    let plus = compare(
        "double_yangian_plus",
        params(),
        &TensorOp::product([&r, &p1, &p2])?,
        &TensorOp::product([&p2, &p1, &r])?,
    )?;

    let ambient = vec![LegSpace::aux(n, v), LegSpace::aux(n, u), quantum];
    let r = yang_r(n, v, u)?.embed_legs(&[0, 1], &ambient)?;
    let p1 = d.at(&d.l_plus, v)?.embed_legs(&[0, 2], &ambient)?;
    let m2 = d.at(&d.l_minus, u)?.embed_legs(&[1, 2], &ambient)?;
    let cross = compare(
        "double_yangian_cross",
        params(),
        &TensorOp::product([&p1, &r, &m2])?,
        &TensorOp::product([&m2, &r, &p1])?,
    )?;
    Ok(vec![minus, plus, cross])
}

/// `Id - Σ_{k=0..K} w^k z^(-k-1) P` on legs `(z, w)`.
pub fn pairing_series(n: usize, order: u32) -> Result<TensorOp, Error> {
    crate::rmatrix::breve_r_series(n, "z", "w", order)
}

/// `(z-w)` times the pairing series against `(z-w) Id - P`, modulo order
/// above `K` in `w`.
pub fn check_pairing(n: usize, order: u32) -> Result<CheckReport, Error> {
    let s = pairing_series(n, order)?;
    let lhs = s.scale(&diff("z", "w")).truncate_order(&["w"], order as i32);
    let rhs = yang_r(n, "z", "w")?.truncate_order(&["w"], order as i32);
    compare("pairing", Params::new().with("n", n).with("order", order), &lhs, &rhs)
}

/// `Id + Σ_{k=0..K} u^k z^(-k-1) P`: the displayed mode assignment for
/// `L⁺(u)`, truncated.
pub fn l_plus_series(n: usize, u: &str, z: &str, order: u32) -> Result<TensorOp, Error> {
    let legs = eval_legs(n, u, z)?;
    let mut s = LaurentPoly::zero();
    for k in 0..=order as i32 {
        s = &s + &(&LaurentPoly::var_pow(u, k) * &LaurentPoly::var_pow(z, -k - 1));
    }
    let p = TensorOp::flip(legs[0].clone(), legs[1].clone())?;
    TensorOp::identity(legs)?.add(&p.scale(&s))
}

/// `S(u) -> τ(T)₁₃(u) S₁₂(u) T₁₃(u)`. The result has legs
/// `[aux, block of s, quantum leg of rep]`.
pub fn coaction_image(s: &TensorOp, rep: &EvalRep, t: &Transposition) -> Result<TensorOp, Error> {
    let first = s.legs().first().ok_or_else(|| Error::LegMismatch("solution has no legs".into()))?;
    let aux = first.label.clone().ok_or_else(|| Error::LegMismatch("auxiliary leg is unlabeled".into()))?;
    if first.dim != rep.n {
        return Err(Error::DimensionMismatch { leg: 0, expected: first.dim, found: rep.n });
    }
    let z = rep.zvar.as_str();
    for l in &s.legs()[1..] {
        if l.label.as_deref() == Some(z) {
            return Err(Error::LegMismatch(format!("coefficient blocks share the variable {z}")));
        }
    }
    if s.flat_entries().any(|(_, _, p)| p.vars().contains(z)) || aux == z {
        return Err(Error::VariableClash(z.to_string()));
    }
    let tq =
        if aux == rep.uvar { rep.t_poly.clone() } else { rep.t_poly.relabel(&[(rep.uvar.as_str(), aux.as_str())])? };
    let tt = tq.tau_on_leg(0, t)?;
    let mut ambient = s.legs().to_vec();
    ambient.push(tq.legs()[1].clone());
    let last = ambient.len() - 1;
    let block: Vec<usize> = (0..last).collect();
    let s12 = s.embed_legs(&block, &ambient)?;
    let t13 = tq.embed_legs(&[0, last], &ambient)?;
    let tt13 = tt.embed_legs(&[0, last], &ambient)?;
    TensorOp::product([&tt13, &s12, &t13])
}
