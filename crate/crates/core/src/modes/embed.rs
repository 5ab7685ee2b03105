use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use super::expand::{expand_relation, expand_relation_with, Normalization, Relation};
use super::ncpoly::{Family, ModeGen, NCPoly};
use super::rewrite::{derive_rules, Reducer, Strategy};
use crate::error::Error;
use crate::matrix::RatMatrix;
use crate::rational::Rational;
use crate::transposition::Transposition;
use crate::verify::{CheckReport, Params, Witness};

/// `t(T^(a))_il = Σ g_ip T^(a)_qp g⁻¹_ql`, with `T^(0) = δ`.
fn transposed_mode(t: &Transposition, a: u32, i: usize, l: usize) -> NCPoly {
    let n = t.n();
    if a == 0 {
        return if i == l { NCPoly::one() } else { NCPoly::zero() };
    }
    let mut out = NCPoly::zero();
    for q in 1..=n {
        for p in 1..=n {
            let c = t.unit_coeff(q - 1, p - 1, i - 1, l - 1);
            out.add_term(vec![ModeGen::t(q, p, a)], c);
        }
    }
    out
}

fn mode(b: u32, l: usize, j: usize) -> NCPoly {
    match b {
        0 if l == j => NCPoly::one(),
        0 => NCPoly::zero(),
        _ => NCPoly::gen(ModeGen::t(l, j, b)),
    }
}

/// Images of `S^(k)_ij`, `1 ≤ k ≤ d`, under `S(u) ↦ Tᵗ(-u) T(u)`:
/// `Σ_{a+b=k} (-1)^a Σ_l t(T^(a))_il T^(b)_lj`.
pub fn embedding_image(n: usize, d: u32, t: &Transposition) -> BTreeMap<ModeGen, NCPoly> {
    let mut out = BTreeMap::new();
    for k in 1..=d {
        for i in 1..=n {
            for j in 1..=n {
                let mut img = NCPoly::zero();
                for a in 0..=k {
                    let sign = if a % 2 == 0 { Rational::one() } else { -Rational::one() };
                    for l in 1..=n {
                        let term = &transposed_mode(t, a, i, l) * &mode(k - a, l, j);
                        img.add_scaled(&term, &sign);
                    }
                }
                out.insert(ModeGen::s(i, j, k), img);
            }
        }
    }
    out
}

fn mode_witness(index: usize, rel: &NCPoly, residue: &NCPoly) -> Witness {
    Witness { row: vec![index + 1], col: Vec::new(), lhs: rel.to_string(), rhs: residue.to_string() }
}

/// Sends every twisted reflection relation of level at most `d` through the
/// embedding and normal-forms the image with rules derived from the RTT
/// relations; every image must vanish.
pub fn verify_twisted_embedding(n: usize, d: u32, t: &Transposition) -> Result<CheckReport, Error> {
    check_embedding_images(n, d, t, &embedding_image(n, d, t))
}

/// Same check for an arbitrary assignment of the `S` modes.
pub fn check_embedding_images(
    n: usize,
    d: u32,
    t: &Transposition,
    images: &BTreeMap<ModeGen, NCPoly>,
) -> Result<CheckReport, Error> {
    let rels = expand_relation(&Relation::TwistedRe(t.clone()), n, d)?;
    let mapped: Vec<NCPoly> = rels.iter().map(|r| r.substitute(|g| images.get(g).cloned())).collect();
    let cap = mapped.iter().map(NCPoly::max_level).max().unwrap_or(0).max(2);
    let rs = derive_rules(&expand_relation(&Relation::Rtt, n, cap)?, n, cap)?;
    let mut reducer = Reducer::new(&rs, Strategy::Leftmost);
    let mut witness = None;
    for (i, (rel, img)) in rels.iter().zip(&mapped).enumerate() {
        let nf = reducer.reduce(img)?;
        if !nf.is_zero() {
            witness = Some(mode_witness(i, rel, &nf));
            break;
        }
    }
    let params = Params::new()
        .with("n", n)
        .with("d", d)
        .with("g", t.label())
        .with("relations", rels.len())
        .with("level_cap", cap);
    Ok(CheckReport::new("twisted_embedding", params, witness))
}

/// Constant solutions at mode level: with `S⁰` kept as generators, sends
/// `S⁰ ↦ X` and higher modes to zero; every twisted reflection relation
/// must then vanish.
pub fn check_character_modes(n: usize, d: u32, t: &Transposition, x: &RatMatrix) -> Result<CheckReport, Error> {
    if x.n() != n {
        return Err(Error::DimensionMismatch { leg: 0, expected: n, found: x.n() });
    }
    let rels = expand_relation_with(&Relation::TwistedRe(t.clone()), n, d, Normalization::Generators)?;
    let mut witness = None;
    for (i, rel) in rels.iter().enumerate() {
        let v = rel.substitute(|g| match (g.family, g.level) {
            (Family::S, 0) => Some(NCPoly::scalar(x.get(g.row as usize - 1, g.col as usize - 1).clone())),
            _ => Some(NCPoly::zero()),
        });
        if !v.is_zero() {
            witness = Some(mode_witness(i, rel, &v));
            break;
        }
    }
    let params = Params::new().with("n", n).with("d", d).with("g", t.label()).with("relations", rels.len());
    Ok(CheckReport::new("character_modes", params, witness))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn image_at_level_one() {
        // S^(1) ↦ T^(1) - t(T^(1)); for g = Id the diagonal cancels.
        let img = embedding_image(2, 1, &Transposition::identity(2));
        assert!(img[&ModeGen::s(1, 1, 1)].is_zero());
        let want = &NCPoly::gen(ModeGen::t(1, 2, 1)) - &NCPoly::gen(ModeGen::t(2, 1, 1));
        assert_eq!(img[&ModeGen::s(1, 2, 1)], want);
    }

    #[test]
    fn embedding_level_one() {
        for t in [Transposition::identity(2), Transposition::symplectic(2).unwrap()] {
            let rep = verify_twisted_embedding(2, 1, &t).unwrap();
            assert!(rep.passed, "{rep}");
        }
    }

    #[test]
    fn characters_at_mode_level() {
        let t = Transposition::identity(2);
        let sym = RatMatrix::from_ints(&[&[1, 2], &[2, 3]]).unwrap();
        let skew = RatMatrix::symplectic(2).unwrap();
        assert!(check_character_modes(2, 1, &t, &sym).unwrap().passed);
        assert!(check_character_modes(2, 1, &t, &skew).unwrap().passed);
        let neither = RatMatrix::from_ints(&[&[1, 2], &[0, 1]]).unwrap();
        assert!(!check_character_modes(2, 1, &t, &neither).unwrap().passed);
    }
}
