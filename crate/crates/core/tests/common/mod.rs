//! Independent oracles: dense matrices over `BigRational`, built from
//! index formulas and evaluated at sample points. Nothing here uses the
//! crate's own arithmetic beyond reading coefficients out of its values.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use workbench_core::modes::{ModeGen, NCPoly};
use workbench_core::{LaurentPoly, Rational, TensorOp};

pub type Q = BigRational;

pub fn q(a: i64, b: i64) -> Q {
    Q::new(BigInt::from(a), BigInt::from(b))
}

pub fn qi(a: i64) -> Q {
    q(a, 1)
}

pub fn to_q(r: &Rational) -> Q {
    r.to_string().parse().expect("rational text")
}

/// Sample points away from the degeneracy loci of the identities tested.
pub fn samples() -> Vec<(Q, Q, Q)> {
    vec![(q(7, 3), q(-2, 5), q(11, 4)), (q(-13, 2), q(5, 7), q(3, 11)), (qi(4), q(1, 9), q(-8, 3))]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dense {
    pub dim: usize,
    pub a: Vec<Q>,
}

impl Dense {
    pub fn zero(dim: usize) -> Self {
        Dense { dim, a: vec![Q::zero(); dim * dim] }
    }

    pub fn id(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.a[i * dim + i] = Q::one();
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> &Q {
        &self.a[r * self.dim + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Q) {
        self.a[r * self.dim + c] = v;
    }

    pub fn mul(&self, o: &Dense) -> Dense {
        let d = self.dim;
        assert_eq!(d, o.dim);
        let mut m = Dense::zero(d);
        for i in 0..d {
            for k in 0..d {
                let x = &self.a[i * d + k];
                if x.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let y = &o.a[k * d + j];
                    if !y.is_zero() {
                        m.a[i * d + j] += x * y;
                    }
                }
            }
        }
        m
    }

    pub fn add(&self, o: &Dense) -> Dense {
        Dense { dim: self.dim, a: self.a.iter().zip(&o.a).map(|(x, y)| x + y).collect() }
    }

    pub fn sub(&self, o: &Dense) -> Dense {
        Dense { dim: self.dim, a: self.a.iter().zip(&o.a).map(|(x, y)| x - y).collect() }
    }

    pub fn scale(&self, c: &Q) -> Dense {
        Dense { dim: self.dim, a: self.a.iter().map(|x| x * c).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(Zero::is_zero)
    }

    pub fn prod(ms: &[&Dense]) -> Dense {
        let mut acc = ms[0].clone();
        for m in &ms[1..] {
            acc = acc.mul(m);
        }
        acc
    }
}

fn digits(mut f: usize, n: usize, legs: usize) -> Vec<usize> {
    let mut out = vec![0; legs];
    for i in (0..legs).rev() {
        out[i] = f % n;
        f /= n;
    }
    out
}

fn undigits(d: &[usize], n: usize) -> usize {
    d.iter().fold(0, |acc, x| acc * n + x)
}

/// Builds an operator on `legs` copies of `C^n` from a function of the row
/// and column multi-indices.
pub fn from_fn(n: usize, legs: usize, f: impl Fn(&[usize], &[usize]) -> Q) -> Dense {
    let dim = n.pow(legs as u32);
    let mut m = Dense::zero(dim);
    for r in 0..dim {
        let ri = digits(r, n, legs);
        for c in 0..dim {
            m.a[r * dim + c] = f(&ri, &digits(c, n, legs));
        }
    }
    m
}

/// Flip of legs `i`, `j` among `legs`.
pub fn flip(n: usize, legs: usize, i: usize, j: usize) -> Dense {
    from_fn(n, legs, |r, c| {
        let mut s = r.to_vec();
        s.swap(i, j);
        if s == c {
            Q::one()
        } else {
            Q::zero()
        }
    })
}

/// `x Id - P_ij`.
pub fn yang(n: usize, legs: usize, i: usize, j: usize, x: &Q) -> Dense {
    Dense::id(n.pow(legs as u32)).scale(x).sub(&flip(n, legs, i, j))
}

/// Places an `n × n` matrix on leg `leg`.
pub fn on_leg(x: &[Vec<Q>], n: usize, legs: usize, leg: usize) -> Dense {
    from_fn(n, legs, |r, c| {
        let others = (0..legs).all(|l| l == leg || r[l] == c[l]);
        if others {
            x[r[leg]][c[leg]].clone()
        } else {
            Q::zero()
        }
    })
}

/// `g Aᵀ g⁻¹` applied on one leg: `E_ij ↦ g E_ji g⁻¹`.
pub fn transpose_leg(op: &Dense, n: usize, legs: usize, leg: usize, g: &[Vec<Q>], ginv: &[Vec<Q>]) -> Dense {
    let mut out = Dense::zero(op.dim);
    for r in 0..op.dim {
        for c in 0..op.dim {
            let v = op.get(r, c);
            if v.is_zero() {
                continue;
            }
            let ri = digits(r, n, legs);
            let ci = digits(c, n, legs);
            let (i, j) = (ri[leg], ci[leg]);
            for p in 0..n {
                for qq in 0..n {
                    let w = &g[p][j] * &ginv[i][qq];
                    if w.is_zero() {
                        continue;
                    }
                    let mut rr = ri.clone();
                    let mut cc = ci.clone();
                    rr[leg] = p;
                    cc[leg] = qq;
                    let (a, b) = (undigits(&rr, n), undigits(&cc, n));
                    let cur = out.get(a, b).clone();
                    out.set(a, b, cur + v * &w);
                }
            }
        }
    }
    out
}

pub fn ident_form(n: usize) -> Vec<Vec<Q>> {
    (0..n).map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect()).collect()
}

/// `[[0, I], [-I, 0]]`.
pub fn symplectic_form(n: usize) -> Vec<Vec<Q>> {
    let h = n / 2;
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i < h && j == i + h {
                        Q::one()
                    } else if i >= h && j + h == i {
                        -Q::one()
                    } else {
                        Q::zero()
                    }
                })
                .collect()
        })
        .collect()
}

pub fn neg_form(g: &[Vec<Q>]) -> Vec<Vec<Q>> {
    g.iter().map(|r| r.iter().map(|x| -x).collect()).collect()
}

/// Evaluates a Laurent polynomial by direct summation.
pub fn eval_poly(p: &LaurentPoly, at: &[(&str, Q)]) -> Q {
    let names = p.vars().names();
    let mut total = Q::zero();
    for (exps, c) in p.terms() {
        let mut t = to_q(c);
        for (name, e) in names.iter().zip(exps) {
            let x = &at.iter().find(|(k, _)| k == name).unwrap_or_else(|| panic!("no value for {name}")).1;
            let mut xp = Q::one();
            for _ in 0..e.unsigned_abs() {
                xp *= x;
            }
            t *= if *e < 0 { xp.recip() } else { xp };
        }
        total += t;
    }
    total
}

pub fn eval_op(op: &TensorOp, at: &[(&str, Q)]) -> Dense {
    let mut m = Dense::zero(op.dim());
    for (r, c, p) in op.flat_entries() {
        m.set(r, c, eval_poly(p, at));
    }
    m
}

/// Numeric evaluation module of the Yangian on `m` quantum legs:
/// `T(u) = ∏_j (Id - P_{0j}/(u - z_j))`, expanded in `x = 1/u`. Returns the
/// modes `T^(k)_{ij}` as operators on the quantum legs for `1 ≤ k ≤ order`.
pub struct ModeRep {
    pub n: usize,
    pub dim: usize,
    pub modes: BTreeMap<(usize, usize, u32), Dense>,
}

impl ModeRep {
    pub fn new(n: usize, zs: &[Q], order: u32) -> Self {
        let m = zs.len();
        let legs = m + 1;
        let big = n.pow(legs as u32);
        // series[k] = coefficient of x^k
        let mut series: Vec<Dense> = vec![Dense::zero(big); order as usize + 1];
        series[0] = Dense::id(big);
        for (j, z) in zs.iter().enumerate() {
            let p = flip(n, legs, 0, j + 1);
            let mut factor = vec![Dense::zero(big); order as usize + 1];
            factor[0] = Dense::id(big);
            let mut zk = Q::one();
            for k in 1..=order as usize {
                factor[k] = p.scale(&-zk.clone());
                zk *= z;
            }
            let mut next = vec![Dense::zero(big); order as usize + 1];
            for a in 0..=order as usize {
                for b in 0..=(order as usize - a) {
                    next[a + b] = next[a + b].add(&series[a].mul(&factor[b]));
                }
            }
            series = next;
        }
        let dim = n.pow(m as u32);
        let mut modes = BTreeMap::new();
        for (k, s) in series.iter().enumerate().skip(1) {
            for i in 0..n {
                for j in 0..n {
                    let mut blk = Dense::zero(dim);
                    for r in 0..dim {
                        for c in 0..dim {
                            blk.set(r, c, s.get(i * dim + r, j * dim + c).clone());
                        }
                    }
                    modes.insert((i + 1, j + 1, k as u32), blk);
                }
            }
        }
        ModeRep { n, dim, modes }
    }

    /// Image of a polynomial in the `T` modes.
    pub fn eval(&self, p: &NCPoly) -> Dense {
        let mut out = Dense::zero(self.dim);
        for (w, c) in p.terms() {
            let mut acc = Dense::id(self.dim).scale(&to_q(c));
            for g in w {
                acc = acc.mul(self.gen(g));
            }
            out = out.add(&acc);
        }
        out
    }

    fn gen(&self, g: &ModeGen) -> &Dense {
        self.modes.get(&(g.row as usize, g.col as usize, g.level)).expect("mode within order")
    }
}
