use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::ncpoly::{Family, ModeGen, NCPoly};
use crate::error::Error;
use crate::rational::Rational;
use crate::rmatrix::{yang_r, RFamily};
use crate::tensor::TensorOp;
use crate::transposition::Transposition;

/// Truncated series in one spectral variable, keyed by exponent.
pub type Series = BTreeMap<i32, NCPoly>;

/// How the level-0 modes of the `S` family are treated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Normalization {
    /// `S⁰ = δ`.
    #[default]
    Unit,
    /// `S⁰` kept as generators, as for constant character solutions.
    Generators,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesMatrix {
    pub n: usize,
    pub family: Family,
    /// Row-major.
    pub entries: Vec<Series>,
}

impl SeriesMatrix {
    pub fn entry(&self, i: usize, j: usize) -> &Series {
        &self.entries[(i - 1) * self.n + (j - 1)]
    }
}

/// `δ_ij + Σ_{k=1..d} u^(-k) X^(k)_ij`; with generator normalization the
/// `S` family starts at `k = 0` instead of `δ`.
pub fn series_matrix(family: Family, n: usize, d: u32, norm: Normalization) -> SeriesMatrix {
    let generators_at_zero = family == Family::S && norm == Normalization::Generators;
    let mut entries = Vec::with_capacity(n * n);
    for i in 1..=n {
        for j in 1..=n {
            let mut s = Series::new();
            if generators_at_zero {
                s.insert(0, NCPoly::gen(ModeGen::new(family, i, j, 0)));
            } else if i == j {
                s.insert(0, NCPoly::one());
            }
            for k in 1..=d {
                s.insert(-(k as i32), NCPoly::gen(ModeGen::new(family, i, j, k)));
            }
            entries.push(s);
        }
    }
    SeriesMatrix { n, family, entries }
}

/// A matrix relation in two spectral variables `u`, `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Relation {
    /// `R T₁(u) T₂(v) = T₂(v) T₁(u) R` for the Yang matrix.
    Rtt,
    /// The same shape with a caller-supplied two-leg `R(u,v)`.
    RttWith(TensorOp),
    /// `R S₁(u) R' S₂(v) = S₂(v) R' S₁(u) R`.
    TwistedRe(Transposition),
}

type Coef2 = BTreeMap<(i32, i32), NCPoly>;

/// `n² × n²` matrix with entries polynomial in `u`, `v` over words.
struct Mat2 {
    n2: usize,
    e: Vec<Coef2>,
}

impl Mat2 {
    fn zero(n2: usize) -> Self {
        Mat2 { n2, e: vec![Coef2::new(); n2 * n2] }
    }

    fn from_tensor(op: &TensorOp) -> Result<Self, Error> {
        let n2 = op.dim();
        let mut m = Mat2::zero(n2);
        for (r, c, p) in op.flat_entries() {
            let vars = p.vars();
            for name in vars.names() {
                if name != "u" && name != "v" {
                    return Err(Error::UnknownVariable(name.clone()));
                }
            }
            let iu = vars.index_of("u");
            let iv = vars.index_of("v");
            for (exps, c0) in p.terms() {
                let a = iu.map_or(0, |i| exps[i]);
                let b = iv.map_or(0, |i| exps[i]);
                m.e[r * n2 + c].entry((a, b)).or_default().add_term(Vec::new(), c0.clone());
            }
        }
        Ok(m)
    }

    /// `X₁(u)` when `first`, else `X₂(v)`.
    fn leg(s: &SeriesMatrix, first: bool) -> Self {
        let n = s.n;
        let mut m = Mat2::zero(n * n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        let (src, keep) = if first { (a * n + c, b == d) } else { (b * n + d, a == c) };
                        if !keep {
                            continue;
                        }
                        let cell = &mut m.e[(a * n + b) * n * n + (c * n + d)];
                        for (k, p) in &s.entries[src] {
                            let key = if first { (*k, 0) } else { (0, *k) };
                            cell.insert(key, p.clone());
                        }
                    }
                }
            }
        }
        m
    }

    fn max_degrees(&self) -> (i32, i32) {
        let mut out = (0, 0);
        for cell in &self.e {
            for (a, b) in cell.keys() {
                out.0 = out.0.max(*a);
                out.1 = out.1.max(*b);
            }
        }
        out
    }

    fn mul(&self, other: &Mat2) -> Mat2 {
        let n2 = self.n2;
        let mut out = Mat2::zero(n2);
        for i in 0..n2 {
            for k in 0..n2 {
                let a = &self.e[i * n2 + k];
                if a.is_empty() {
                    continue;
                }
                for j in 0..n2 {
                    let b = &other.e[k * n2 + j];
                    if b.is_empty() {
                        continue;
                    }
                    let cell = &mut out.e[i * n2 + j];
                    for (ea, pa) in a {
                        for (eb, pb) in b {
                            let prod = pa * pb;
                            if !prod.is_zero() {
                                cell.entry((ea.0 + eb.0, ea.1 + eb.1)).or_default().add_scaled(&prod, &Rational::one());
                            }
                        }
                    }
                }
            }
        }
        out
    }

    fn product(ms: &[&Mat2]) -> Mat2 {
        let mut acc = ms[0].mul(ms[1]);
        for m in &ms[2..] {
            acc = acc.mul(m);
        }
        acc
    }
}

/// Expands with the default normalization.
pub fn expand_relation(rel: &Relation, n: usize, d: u32) -> Result<Vec<NCPoly>, Error> {
    expand_relation_with(rel, n, d, Normalization::Unit)
}

/// Expands a matrix relation into mode relations. Series are truncated
/// far enough that every coefficient `u^a v^b` with `a, b ≥ -d` is exact;
/// of those, the nonzero differences involving only generators of level
/// at most `d` are returned, made monic, deduplicated and sorted.
pub fn expand_relation_with(rel: &Relation, n: usize, d: u32, norm: Normalization) -> Result<Vec<NCPoly>, Error> {
    if d == 0 && norm == Normalization::Unit {
        return Err(Error::BadShape("expansion level must be at least 1".into()));
    }
    let (lhs, rhs) = match rel {
        Relation::Rtt | Relation::RttWith(_) => {
            let r = match rel {
                Relation::RttWith(op) => {
                    if op.legs().len() != 2 || op.legs()[0].dim != n || op.legs()[1].dim != n {
                        return Err(Error::BadShape(format!("expected a two-leg operator of dimension {n}")));
                    }
                    Mat2::from_tensor(op)?
                }
                _ => Mat2::from_tensor(&yang_r(n, "u", "v")?)?,
            };
            let (du, dv) = r.max_degrees();
            let big = d + du.max(dv).max(0) as u32;
            let s = series_matrix(Family::T, n, big, norm);
            let (t1, t2) = (Mat2::leg(&s, true), Mat2::leg(&s, false));
            (Mat2::product(&[&r, &t1, &t2]), Mat2::product(&[&t2, &t1, &r]))
        }
        Relation::TwistedRe(t) => {
            if t.n() != n {
                return Err(Error::DimensionMismatch { leg: 0, expected: n, found: t.n() });
            }
            let fam = RFamily::yang(n, t.clone())?;
            let r = Mat2::from_tensor(&fam.r)?;
            let rp = Mat2::from_tensor(&fam.r_prime)?;
            let (a, b) = r.max_degrees();
            let (c, e) = rp.max_degrees();
            let big = d + (a + c).max(b + e).max(0) as u32;
            let s = series_matrix(Family::S, n, big, norm);
            let (s1, s2) = (Mat2::leg(&s, true), Mat2::leg(&s, false));
            (Mat2::product(&[&r, &s1, &rp, &s2]), Mat2::product(&[&s2, &rp, &s1, &r]))
        }
    };
    let floor = -(d as i32);
    let mut out = BTreeSet::new();
    for (l, r) in lhs.e.iter().zip(&rhs.e) {
        let keys: BTreeSet<&(i32, i32)> = l.keys().chain(r.keys()).collect();
        for key in keys {
            if key.0 < floor || key.1 < floor {
                continue;
            }
            let zero = NCPoly::zero();
            let diff = l.get(key).unwrap_or(&zero) - r.get(key).unwrap_or(&zero);
            if !diff.is_zero() && diff.max_gen_level() <= d {
                out.insert(diff.monic());
            }
        }
    }
    Ok(out.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::LegSpace;
    use alloc::string::ToString;

    #[test]
    fn series_entries() {
        let s = series_matrix(Family::T, 2, 1, Normalization::Unit);
        assert_eq!(s.entry(1, 2).get(&-1), Some(&NCPoly::gen(ModeGen::t(1, 2, 1))));
        assert_eq!(s.entry(1, 2).get(&0), None);
        assert_eq!(s.entry(2, 2).get(&0), Some(&NCPoly::one()));
        let c = series_matrix(Family::S, 2, 0, Normalization::Unit);
        assert!(c.entries.iter().all(|e| e.len() <= 1));
        assert_eq!(c.entry(1, 1).get(&0), Some(&NCPoly::one()));
        let g = series_matrix(Family::S, 2, 0, Normalization::Generators);
        assert_eq!(g.entry(2, 1).get(&0), Some(&NCPoly::gen(ModeGen::s(2, 1, 0))));
    }

    #[test]
    fn rtt_level_one_relations_are_brackets() {
        let rels = expand_relation(&Relation::Rtt, 2, 1).unwrap();
        assert!(!rels.is_empty());
        for r in &rels {
            assert!(r.max_level() <= 2 && r.max_gen_level() == 1, "{r}");
        }
        // [T1[2,1], T1[1,2]] = T1[2,2] - T1[1,1]
        let a = NCPoly::gen(ModeGen::t(1, 2, 1));
        let b = NCPoly::gen(ModeGen::t(2, 1, 1));
        let want =
            &(&(&(&b * &a) - &(&a * &b)) - &NCPoly::gen(ModeGen::t(2, 2, 1))) + &NCPoly::gen(ModeGen::t(1, 1, 1));
        assert!(rels.contains(&want.monic()), "{}", rels.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("\n"));
    }

    #[test]
    fn trivial_r_matrices() {
        let legs = vec![LegSpace::aux(2, "u"), LegSpace::aux(2, "v")];
        let zero = TensorOp::zero(legs.clone()).unwrap();
        assert!(expand_relation(&Relation::RttWith(zero), 2, 2).unwrap().is_empty());
        // R = Id leaves only the commutativity of modes.
        let id = TensorOp::identity(legs).unwrap();
        let rels = expand_relation(&Relation::RttWith(id), 2, 1).unwrap();
        assert!(rels.iter().all(|r| r.num_terms() == 2 && r.max_level() == 2));
    }

    #[test]
    fn twisted_re_levels() {
        let rels = expand_relation(&Relation::TwistedRe(Transposition::identity(2)), 2, 1).unwrap();
        assert!(!rels.is_empty());
        assert!(rels.iter().all(|r| r.max_level() <= 2));
    }
}
