//! Sparse operators on a product of finite-dimensional legs.
//!
//! Rows and columns are stored as flat row-major indices over the leg
//! sequence (first leg most significant), so iteration order of the entry
//! map is the lexicographic order of the 1-based multi-indices. Each leg may
//! carry the name of its spectral variable; the label travels with the leg
//! under permutation and drives the `u -> -u` half of `tau_on_leg`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::matrix::RatMatrix;
use crate::poly::{push_products, LaurentPoly, Mono, Substitution, VarSet};
use crate::rational::Rational;
use crate::transposition::Transposition;

/// Largest total dimension an operator may have.
pub const MAX_DIM: usize = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LegRole {
    Auxiliary,
    Quantum,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LegSpace {
    pub dim: usize,
    pub label: Option<String>,
    pub role: LegRole,
}

impl LegSpace {
    pub fn aux(dim: usize, label: &str) -> Self {
        LegSpace { dim, label: Some(label.into()), role: LegRole::Auxiliary }
    }

    pub fn quantum(dim: usize, label: Option<&str>) -> Self {
        LegSpace { dim, label: label.map(Into::into), role: LegRole::Quantum }
    }

    pub fn unlabeled(dim: usize) -> Self {
        LegSpace { dim, label: None, role: LegRole::Auxiliary }
    }
}

/// Position of one entry, as 1-based multi-indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EntryIndex {
    pub row: Vec<usize>,
    pub col: Vec<usize>,
}

/// First disagreeing entry between two operators on the same legs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Difference {
    pub at: EntryIndex,
    pub lhs: LaurentPoly,
    pub rhs: LaurentPoly,
}

#[derive(Clone, PartialEq, Eq)]
pub struct TensorOp {
    legs: Vec<LegSpace>,
    entries: BTreeMap<(usize, usize), LaurentPoly>,
}

fn total_dim(legs: &[LegSpace]) -> Result<usize, Error> {
    let mut d: usize = 1;
    for (i, l) in legs.iter().enumerate() {
        if l.dim == 0 {
            return Err(Error::DimensionMismatch { leg: i, expected: 1, found: 0 });
        }
        d = d
            .checked_mul(l.dim)
            .filter(|&d| d <= MAX_DIM)
            .ok_or_else(|| Error::TooLarge(alloc::format!("{} legs", legs.len())))?;
    }
    Ok(d)
}

/// Strides of the row-major layout.
fn strides(legs: &[LegSpace]) -> Vec<usize> {
    let mut s = alloc::vec![1; legs.len()];
    for i in (0..legs.len().saturating_sub(1)).rev() {
        s[i] = s[i + 1] * legs[i + 1].dim;
    }
    s
}

fn split(flat: usize, legs: &[LegSpace]) -> Vec<usize> {
    let mut out = alloc::vec![0; legs.len()];
    let mut rest = flat;
    for i in (0..legs.len()).rev() {
        out[i] = rest % legs[i].dim;
        rest /= legs[i].dim;
    }
    out
}

/// One variable set covering every entry of the given operators.
fn common_vars<'a>(ops: impl IntoIterator<Item = &'a TensorOp>) -> VarSet {
    let mut seen: Vec<&VarSet> = Vec::new();
    let mut names = BTreeSet::new();
    for op in ops {
        for p in op.entries.values() {
            if !seen.iter().any(|v| *v == p.vars()) {
                seen.push(p.vars());
                names.extend(p.vars().names().iter().cloned());
            }
        }
    }
    VarSet::new(names)
}

impl TensorOp {
    pub fn zero(legs: Vec<LegSpace>) -> Result<Self, Error> {
        total_dim(&legs)?;
        Ok(TensorOp { legs, entries: BTreeMap::new() })
    }

    pub fn identity(legs: Vec<LegSpace>) -> Result<Self, Error> {
        Self::scalar(legs, LaurentPoly::one())
    }

    /// `p * Id` on the given legs.
    pub fn scalar(legs: Vec<LegSpace>, p: LaurentPoly) -> Result<Self, Error> {
        let d = total_dim(&legs)?;
        let entries = if p.is_zero() { BTreeMap::new() } else { (0..d).map(|i| ((i, i), p.clone())).collect() };
        Ok(TensorOp { legs, entries })
    }

    /// The flip `P` on two legs of equal dimension.
    pub fn flip(a: LegSpace, b: LegSpace) -> Result<Self, Error> {
        if a.dim != b.dim {
            return Err(Error::DimensionMismatch { leg: 1, expected: a.dim, found: b.dim });
        }
        let n = a.dim;
        let mut entries = BTreeMap::new();
        for i in 0..n {
            for j in 0..n {
                entries.insert((i * n + j, j * n + i), LaurentPoly::one());
            }
        }
        Ok(TensorOp { legs: alloc::vec![a, b], entries })
    }

    /// A constant matrix on a single leg.
    pub fn from_matrix(leg: LegSpace, m: &RatMatrix) -> Result<Self, Error> {
        if leg.dim != m.n() {
            return Err(Error::DimensionMismatch { leg: 0, expected: leg.dim, found: m.n() });
        }
        let n = m.n();
        let mut entries = BTreeMap::new();
        for i in 0..n {
            for j in 0..n {
                if !m.get(i, j).is_zero() {
                    entries.insert((i, j), LaurentPoly::constant(m.get(i, j).clone()));
                }
            }
        }
        Ok(TensorOp { legs: alloc::vec![leg], entries })
    }

    /// Builds an operator from 1-based multi-indexed entries; repeated
    /// positions are summed.
    pub fn from_entries<I>(legs: Vec<LegSpace>, items: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (Vec<usize>, Vec<usize>, LaurentPoly)>,
    {
        let mut op = Self::zero(legs)?;
        for (r, c, p) in items {
            let key = (op.flat(&r)?, op.flat(&c)?);
            let cur = op.entries.remove(&key).unwrap_or_default();
            let sum = &cur + &p;
            if !sum.is_zero() {
                op.entries.insert(key, sum);
            }
        }
        Ok(op)
    }

    /// Entries given directly in flat 0-based coordinates.
    pub fn from_flat<I>(legs: Vec<LegSpace>, items: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = ((usize, usize), LaurentPoly)>,
    {
        let d = total_dim(&legs)?;
        let mut entries = BTreeMap::new();
        for ((r, c), p) in items {
            if r >= d || c >= d {
                return Err(Error::TooLarge(alloc::format!("flat index ({r},{c}) beyond {d}")));
            }
            if !p.is_zero() {
                entries.insert((r, c), p);
            }
        }
        Ok(TensorOp { legs, entries })
    }

    fn flat(&self, idx: &[usize]) -> Result<usize, Error> {
        if idx.len() != self.legs.len() {
            return Err(Error::LegMismatch(alloc::format!(
                "multi-index of length {} for {} legs",
                idx.len(),
                self.legs.len()
            )));
        }
        let mut f = 0;
        for (leg, (&i, l)) in idx.iter().zip(&self.legs).enumerate() {
            if i == 0 || i > l.dim {
                return Err(Error::IndexOutOfRange { leg, index: i, dim: l.dim });
            }
            f = f * l.dim + (i - 1);
        }
        Ok(f)
    }

    /// 1-based multi-index of a flat position.
    pub fn multi_index(&self, flat: usize) -> Vec<usize> {
        split(flat, &self.legs).into_iter().map(|i| i + 1).collect()
    }

    pub fn legs(&self) -> &[LegSpace] {
        &self.legs
    }

    pub fn dim(&self) -> usize {
        self.legs.iter().map(|l| l.dim).product()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries in canonical order with flat coordinates.
    pub fn flat_entries(&self) -> impl Iterator<Item = (usize, usize, &LaurentPoly)> + '_ {
        self.entries.iter().map(|(&(r, c), p)| (r, c, p))
    }

    /// Entries in canonical order with 1-based multi-indices.
    pub fn entries(&self) -> impl Iterator<Item = (EntryIndex, &LaurentPoly)> + '_ {
        self.entries.iter().map(|(&(r, c), p)| (EntryIndex { row: self.multi_index(r), col: self.multi_index(c) }, p))
    }

    pub fn flat_entry(&self, r: usize, c: usize) -> LaurentPoly {
        self.entries.get(&(r, c)).cloned().unwrap_or_default()
    }

    /// The entry at 1-based multi-indices; zero when absent.
    pub fn extract_entry(&self, row: &[usize], col: &[usize]) -> Result<LaurentPoly, Error> {
        let key = (self.flat(row)?, self.flat(col)?);
        Ok(self.entries.get(&key).cloned().unwrap_or_default())
    }

    fn check_same_legs(&self, other: &TensorOp) -> Result<(), Error> {
        if self.legs != other.legs {
            return Err(Error::LegMismatch(alloc::format!("{:?} vs {:?}", self.legs, other.legs)));
        }
        Ok(())
    }

    /// Matrix product `self ∘ other`.
    pub fn compose(&self, other: &TensorOp) -> Result<TensorOp, Error> {
        self.check_same_legs(other)?;
        let vars = common_vars([self, other]);
        let d = self.dim();
        let pad = |p: &LaurentPoly| p.padded(&vars).expect("union covers entry");
        let mut b_rows: Vec<Vec<(usize, LaurentPoly)>> = alloc::vec![Vec::new(); d];
        for (&(r, c), p) in &other.entries {
            b_rows[r].push((c, pad(p)));
        }
        let mut acc: Vec<Vec<(Mono, Rational)>> = alloc::vec![Vec::new(); d];
        let mut touched: Vec<usize> = Vec::new();
        let mut entries = BTreeMap::new();
        let mut iter = self.entries.iter().peekable();
        while let Some(((row, _), _)) = iter.peek() {
            let row = *row;
            while let Some((&(r, k), pa)) = iter.peek() {
                if r != row {
                    break;
                }
                let pa = pad(pa);
                for (j, pb) in &b_rows[k] {
                    if acc[*j].is_empty() {
                        touched.push(*j);
                    }
                    push_products(&mut acc[*j], &pa, pb);
                }
                iter.next();
            }
            touched.sort_unstable();
            for &j in &touched {
                let p = LaurentPoly::from_terms(vars.clone(), core::mem::take(&mut acc[j]));
                if !p.is_zero() {
                    entries.insert((row, j), p);
                }
            }
            touched.clear();
        }
        Ok(TensorOp { legs: self.legs.clone(), entries })
    }

    /// Left-to-right product of a nonempty sequence.
    pub fn product<'a, I>(ops: I) -> Result<TensorOp, Error>
    where
        I: IntoIterator<Item = &'a TensorOp>,
    {
        let mut it = ops.into_iter();
        let first = it.next().ok_or_else(|| Error::LegMismatch("empty product".into()))?;
        let mut acc = first.clone();
        for op in it {
            acc = acc.compose(op)?;
        }
        Ok(acc)
    }

    fn zip_with(&self, other: &TensorOp, negate: bool) -> Result<TensorOp, Error> {
        self.check_same_legs(other)?;
        let mut entries = self.entries.clone();
        for (k, p) in &other.entries {
            let q = if negate { -p } else { p.clone() };
            match entries.remove(k) {
                Some(cur) => {
                    let s = &cur + &q;
                    if !s.is_zero() {
                        entries.insert(*k, s);
                    }
                }
                None => {
                    entries.insert(*k, q);
                }
            }
        }
        Ok(TensorOp { legs: self.legs.clone(), entries })
    }

    pub fn add(&self, other: &TensorOp) -> Result<TensorOp, Error> {
        self.zip_with(other, false)
    }

    pub fn sub(&self, other: &TensorOp) -> Result<TensorOp, Error> {
        self.zip_with(other, true)
    }

    /// Multiplies every entry by a scalar polynomial.
    pub fn scale(&self, p: &LaurentPoly) -> TensorOp {
        let entries = self.entries.iter().map(|(k, e)| (*k, e * p)).filter(|(_, e)| !e.is_zero()).collect();
        TensorOp { legs: self.legs.clone(), entries }
    }

    pub fn neg(&self) -> TensorOp {
        let entries = self.entries.iter().map(|(k, e)| (*k, -e)).collect();
        TensorOp { legs: self.legs.clone(), entries }
    }

    /// Leg concatenation `self ⊗ other`.
    pub fn tensor_product(&self, other: &TensorOp) -> Result<TensorOp, Error> {
        let mut legs = self.legs.clone();
        legs.extend(other.legs.iter().cloned());
        total_dim(&legs)?;
        let db = other.dim();
        let mut entries = BTreeMap::new();
        for (&(ra, ca), pa) in &self.entries {
            for (&(rb, cb), pb) in &other.entries {
                let p = pa * pb;
                if !p.is_zero() {
                    entries.insert((ra * db + rb, ca * db + cb), p);
                }
            }
        }
        Ok(TensorOp { legs, entries })
    }

    /// Places `self` on the ambient legs `targets` (0-based, any order,
    /// pairwise distinct), acting as the identity elsewhere. Leg `i` of
    /// `self` goes to ambient position `targets[i]`.
    ///
    /// Labels: an ambient label must agree with the operator's when both
    /// are present; an unlabeled ambient leg takes the operator's label.
    pub fn embed_legs(&self, targets: &[usize], ambient: &[LegSpace]) -> Result<TensorOp, Error> {
        if targets.len() != self.legs.len() {
            return Err(Error::LegMismatch(alloc::format!("{} targets for {} legs", targets.len(), self.legs.len())));
        }
        let mut legs: Vec<LegSpace> = ambient.to_vec();
        let mut used = alloc::vec![false; ambient.len()];
        for (i, &t) in targets.iter().enumerate() {
            if t >= ambient.len() {
                return Err(Error::InvalidLeg(t));
            }
            if used[t] {
                return Err(Error::RepeatedTarget(t));
            }
            used[t] = true;
            let mine = &self.legs[i];
            let amb = &mut legs[t];
            if amb.dim != mine.dim {
                return Err(Error::DimensionMismatch { leg: t, expected: amb.dim, found: mine.dim });
            }
            match (&amb.label, &mine.label) {
                (Some(a), Some(b)) if a != b => {
                    return Err(Error::LegMismatch(alloc::format!("leg {t} is labeled {a}, operator has {b}")));
                }
                (None, Some(b)) => amb.label = Some(b.clone()),
                _ => {}
            }
        }
        total_dim(&legs)?;
        let st = strides(&legs);
        let others: Vec<usize> = (0..legs.len()).filter(|i| !used[*i]).collect();
        let other_legs: Vec<LegSpace> = others.iter().map(|&i| legs[i].clone()).collect();
        let d_other: usize = other_legs.iter().map(|l| l.dim).product();
        let other_offsets: Vec<usize> = (0..d_other)
            .map(|f| {
                let idx = split(f, &other_legs);
                others.iter().zip(idx).map(|(&pos, i)| i * st[pos]).sum()
            })
            .collect();
        let mut entries = BTreeMap::new();
        for (&(r, c), p) in &self.entries {
            let ri = split(r, &self.legs);
            let ci = split(c, &self.legs);
            let rbase: usize = targets.iter().zip(&ri).map(|(&t, &i)| i * st[t]).sum();
            let cbase: usize = targets.iter().zip(&ci).map(|(&t, &i)| i * st[t]).sum();
            for &off in &other_offsets {
                entries.insert((rbase + off, cbase + off), p.clone());
            }
        }
        Ok(TensorOp { legs, entries })
    }

    /// Moves old leg `i` to position `sigma[i]`; labels move with the legs.
    pub fn leg_permute(&self, sigma: &[usize]) -> Result<TensorOp, Error> {
        let k = self.legs.len();
        if sigma.len() != k {
            return Err(Error::NotAPermutation(k));
        }
        let mut seen = alloc::vec![false; k];
        for &s in sigma {
            if s >= k || seen[s] {
                return Err(Error::NotAPermutation(k));
            }
            seen[s] = true;
        }
        let mut legs = self.legs.clone();
        for (i, &s) in sigma.iter().enumerate() {
            legs[s] = self.legs[i].clone();
        }
        let st = strides(&legs);
        let map = |flat: usize| -> usize {
            let idx = split(flat, &self.legs);
            idx.iter().zip(sigma).map(|(&i, &s)| i * st[s]).sum()
        };
        let entries = self.entries.iter().map(|(&(r, c), p)| ((map(r), map(c)), p.clone())).collect();
        Ok(TensorOp { legs, entries })
    }

    /// Applies `τ` on one leg: the transposition `t` on its matrix indices
    /// together with `x -> -x` for the leg's spectral label `x`.
    pub fn tau_on_leg(&self, leg: usize, t: &Transposition) -> Result<TensorOp, Error> {
        let l = self.legs.get(leg).ok_or(Error::InvalidLeg(leg))?;
        if l.dim != t.n() {
            return Err(Error::DimensionMismatch { leg, expected: l.dim, found: t.n() });
        }
        let n = l.dim;
        let st = strides(&self.legs)[leg];
        let subst = l.label.as_ref().map(|x| Substitution::new().neg_var(x, x));
        let mut acc: BTreeMap<(usize, usize), LaurentPoly> = BTreeMap::new();
        for (&(r, c), p) in &self.entries {
            let p = match &subst {
                Some(s) => p.substitute_lenient(s)?,
                None => p.clone(),
            };
            let i = (r / st) % n;
            let j = (c / st) % n;
            let r0 = r - i * st;
            let c0 = c - j * st;
            for pp in 0..n {
                for q in 0..n {
                    let w = t.unit_coeff(i, j, pp, q);
                    if w.is_zero() {
                        continue;
                    }
                    let key = (r0 + pp * st, c0 + q * st);
                    let term = p.scale(&w);
                    let e = acc.entry(key).or_default();
                    *e = &*e + &term;
                }
            }
        }
        acc.retain(|_, p| !p.is_zero());
        Ok(TensorOp { legs: self.legs.clone(), entries: acc })
    }

    /// Simultaneous renaming of spectral variables, in leg labels and in
    /// every entry.
    pub fn relabel(&self, pairs: &[(&str, &str)]) -> Result<TensorOp, Error> {
        let mut s = Substitution::new();
        for (a, b) in pairs {
            s = s.var(a, b);
        }
        let legs = self
            .legs
            .iter()
            .map(|l| {
                let mut l = l.clone();
                if let Some(x) = &l.label {
                    if let Some((_, b)) = pairs.iter().find(|(a, _)| a == x) {
                        l.label = Some((*b).into());
                    }
                }
                l
            })
            .collect();
        self.map_polys(legs, |p| p.substitute_lenient(&s))
    }

    /// Entrywise substitution; leg labels are left alone.
    pub fn substitute(&self, s: &Substitution) -> Result<TensorOp, Error> {
        self.map_polys(self.legs.clone(), |p| p.substitute_lenient(s))
    }

    fn map_polys<F>(&self, legs: Vec<LegSpace>, mut f: F) -> Result<TensorOp, Error>
    where
        F: FnMut(&LaurentPoly) -> Result<LaurentPoly, Error>,
    {
        let mut entries = BTreeMap::new();
        for (k, p) in &self.entries {
            let q = f(p)?;
            if !q.is_zero() {
                entries.insert(*k, q);
            }
        }
        Ok(TensorOp { legs, entries })
    }

    /// Same operator with different leg metadata (dimensions must agree).
    pub fn with_legs(&self, legs: Vec<LegSpace>) -> Result<TensorOp, Error> {
        if legs.len() != self.legs.len() {
            return Err(Error::LegMismatch(alloc::format!("{} legs for {}", legs.len(), self.legs.len())));
        }
        for (i, (a, b)) in legs.iter().zip(&self.legs).enumerate() {
            if a.dim != b.dim {
                return Err(Error::DimensionMismatch { leg: i, expected: b.dim, found: a.dim });
            }
        }
        Ok(TensorOp { legs, entries: self.entries.clone() })
    }

    /// Drops, entrywise, every term of total degree above `max_order` in
    /// the named variables.
    pub fn truncate_order(&self, names: &[&str], max_order: i32) -> TensorOp {
        let entries = self
            .entries
            .iter()
            .map(|(k, p)| (*k, p.truncate_order(names, max_order)))
            .filter(|(_, p)| !p.is_zero())
            .collect();
        TensorOp { legs: self.legs.clone(), entries }
    }

    /// The lexicographically first entry where the operators differ.
    pub fn first_difference(&self, other: &TensorOp) -> Result<Option<Difference>, Error> {
        self.check_same_legs(other)?;
        let keys: BTreeSet<&(usize, usize)> = self.entries.keys().chain(other.entries.keys()).collect();
        for k in keys {
            let a = self.entries.get(k);
            let b = other.entries.get(k);
            let same = match (a, b) {
                (Some(x), Some(y)) => x == y,
                _ => false,
            };
            if !same {
                return Ok(Some(Difference {
                    at: EntryIndex { row: self.multi_index(k.0), col: self.multi_index(k.1) },
                    lhs: a.cloned().unwrap_or_default(),
                    rhs: b.cloned().unwrap_or_default(),
                }));
            }
        }
        Ok(None)
    }

    /// Maximum total degree in `names` over all entries.
    pub fn max_order(&self, names: &[&str]) -> Option<i32> {
        self.entries.values().filter_map(|p| p.max_order(names)).max()
    }
}

impl fmt::Debug for TensorOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "TensorOp {:?}", self.legs)?;
        for (idx, p) in self.entries() {
            writeln!(f, "  {:?} {:?}: {}", idx.row, idx.col, p)?;
        }
        Ok(())
    }
}
