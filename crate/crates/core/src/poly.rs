//! Sparse multivariate Laurent polynomials over [`Rational`] in named
//! spectral variables.
//!
//! A polynomial carries its own ordered variable set. Two polynomials over
//! different sets are combined by padding both exponent vectors with zeros
//! up to the union of the sets; variables are never renamed implicitly.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};
use core::str::FromStr;

use smallvec::SmallVec;

use crate::error::Error;
use crate::rational::Rational;

/// Exponent vector, one slot per variable of the owning [`VarSet`].
pub type Mono = SmallVec<[i32; 8]>;

/// Ordered (lexicographic on name) set of variable names.
#[derive(Clone)]
pub struct VarSet(Arc<[String]>);

impl VarSet {
    pub fn empty() -> Self {
        VarSet(Arc::from(Vec::<String>::new()))
    }

    pub fn new<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut v: Vec<String> = names.into_iter().map(Into::into).collect();
        v.sort();
        v.dedup();
        VarSet(Arc::from(v))
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.binary_search_by(|n| n.as_str().cmp(name)).ok()
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index_of(name).is_some()
    }

    pub fn union(&self, other: &VarSet) -> VarSet {
        if self == other || other.0.iter().all(|n| self.contains(n)) {
            return self.clone();
        }
        if self.0.iter().all(|n| other.contains(n)) {
            return other.clone();
        }
        VarSet::new(self.0.iter().chain(other.0.iter()).cloned())
    }

    fn same(&self, other: &VarSet) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl PartialEq for VarSet {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

impl Eq for VarSet {}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// Sparse Laurent polynomial. Terms are kept sorted by exponent vector with
/// no zero coefficients, so structural comparison is meaningful once the
/// variable sets agree.
#[derive(Clone)]
pub struct LaurentPoly {
    vars: VarSet,
    terms: Vec<(Mono, Rational)>,
}

/// Which ring operation [`poly_arith`] performs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Mul,
    Neg,
}

/// Checked arithmetic on two polynomials over the same variable set.
/// `Neg` ignores `b`.
pub fn poly_arith(a: &LaurentPoly, b: &LaurentPoly, op: PolyOp) -> Result<LaurentPoly, Error> {
    if op != PolyOp::Neg && !a.vars.same(&b.vars) {
        return Err(Error::VarSetMismatch(a.vars.names().join(","), b.vars.names().join(",")));
    }
    Ok(match op {
        PolyOp::Add => a.add_same(b),
        PolyOp::Mul => a.mul_same(b),
        PolyOp::Neg => -a,
    })
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::zero_in(VarSet::empty())
    }

    pub fn zero_in(vars: VarSet) -> Self {
        LaurentPoly { vars, terms: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::constant_in(VarSet::empty(), c)
    }

    pub fn constant_in(vars: VarSet, c: Rational) -> Self {
        if c.is_zero() {
            return Self::zero_in(vars);
        }
        let mono = SmallVec::from_elem(0, vars.len());
        LaurentPoly { vars, terms: alloc::vec![(mono, c)] }
    }

    pub fn int(n: i64) -> Self {
        Self::constant(Rational::from_int(n))
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    /// The polynomial `name`.
    pub fn var(name: &str) -> Self {
        Self::var_pow(name, 1)
    }

    /// The monomial `name^e`.
    pub fn var_pow(name: &str, e: i32) -> Self {
        let vars = VarSet::new([name]);
        let mut mono = Mono::new();
        mono.push(e);
        LaurentPoly { vars, terms: alloc::vec![(mono, Rational::one())] }
    }

    /// Canonicalizes an arbitrary list of terms: sorts, merges equal
    /// exponents, drops zeros.
    pub fn from_terms<I>(vars: VarSet, terms: I) -> Self
    where
        I: IntoIterator<Item = (Mono, Rational)>,
    {
        let mut v: Vec<(Mono, Rational)> = terms.into_iter().collect();
        debug_assert!(v.iter().all(|(m, _)| m.len() == vars.len()));
        v.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(Mono, Rational)> = Vec::with_capacity(v.len());
        for (m, c) in v {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += &c,
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if lc.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if let Some((_, lc)) = out.last() {
            if lc.is_zero() {
                out.pop();
            }
        }
        LaurentPoly { vars, terms: out }
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn terms(&self) -> impl ExactSizeIterator<Item = (&[i32], &Rational)> + '_ {
        self.terms.iter().map(|(m, c)| (m.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some(c)` when the polynomial is the constant `c` (including zero).
    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if m.iter().all(|&e| e == 0) => Some(c.clone()),
            _ => None,
        }
    }

    /// Coefficient of the monomial given as `(name, exponent)` pairs;
    /// variables not listed have exponent zero.
    pub fn coeff(&self, exps: &[(&str, i32)]) -> Rational {
        let mut mono: Mono = SmallVec::from_elem(0, self.vars.len());
        for &(name, e) in exps {
            match self.vars.index_of(name) {
                Some(i) => mono[i] += e,
                None if e == 0 => {}
                None => return Rational::zero(),
            }
        }
        match self.terms.binary_search_by(|(m, _)| m.cmp(&mono)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    /// Re-expresses the polynomial over a superset of its variables.
    pub fn padded(&self, vars: &VarSet) -> Result<Self, Error> {
        if self.vars.same(vars) {
            return Ok(LaurentPoly { vars: vars.clone(), terms: self.terms.clone() });
        }
        let map: Vec<usize> = self
            .vars
            .names()
            .iter()
            .map(|n| vars.index_of(n).ok_or_else(|| Error::UnknownVariable(n.clone())))
            .collect::<Result<_, _>>()?;
        // Inserting zero slots keeps the lexicographic order of the terms.
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut out: Mono = SmallVec::from_elem(0, vars.len());
                for (slot, &e) in map.iter().zip(m.iter()) {
                    out[*slot] = e;
                }
                (out, c.clone())
            })
            .collect();
        Ok(LaurentPoly { vars: vars.clone(), terms })
    }

    fn align(a: &LaurentPoly, b: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
        let u = a.vars.union(&b.vars);
        // Padding to a union never fails.
        (a.padded(&u).unwrap(), b.padded(&u).unwrap())
    }

    pub(crate) fn add_same(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match a.0.cmp(&b.0) {
                Ordering::Less => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b.clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &a.1 + &b.1;
                    if !c.is_zero() {
                        out.push((a.0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        LaurentPoly { vars: self.vars.clone(), terms: out }
    }

    pub(crate) fn mul_same(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || other.is_zero() {
            return LaurentPoly::zero_in(self.vars.clone());
        }
        if other.terms.len() == 1 {
            return self.mul_term(&other.terms[0].0, &other.terms[0].1);
        }
        if self.terms.len() == 1 {
            return other.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        let mut buf = Vec::with_capacity(self.terms.len() * other.terms.len());
        push_products(&mut buf, self, other);
        LaurentPoly::from_terms(self.vars.clone(), buf)
    }

    fn mul_term(&self, mono: &[i32], c: &Rational) -> LaurentPoly {
        // Shifting every exponent by the same vector preserves the order.
        let terms = self
            .terms
            .iter()
            .map(|(m, k)| {
                let mm: Mono = m.iter().zip(mono).map(|(a, b)| a + b).collect();
                (mm, k * c)
            })
            .collect();
        LaurentPoly { vars: self.vars.clone(), terms }
    }

    pub fn scale(&self, c: &Rational) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero_in(self.vars.clone());
        }
        let terms = self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect();
        LaurentPoly { vars: self.vars.clone(), terms }
    }

    pub fn pow(&self, e: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::constant_in(self.vars.clone(), Rational::one());
        for _ in 0..e {
            acc = acc.mul_same(self);
        }
        acc
    }

    /// Total degree of a term restricted to the named variables.
    fn partial_degree(&self, mono: &[i32], slots: &[usize]) -> i32 {
        slots.iter().map(|&s| mono[s]).sum()
    }

    /// Drops every term whose total degree in `names` exceeds `max_order`.
    pub fn truncate_order(&self, names: &[&str], max_order: i32) -> LaurentPoly {
        let slots: Vec<usize> = names.iter().filter_map(|n| self.vars.index_of(n)).collect();
        if slots.is_empty() {
            return if max_order >= 0 { self.clone() } else { LaurentPoly::zero_in(self.vars.clone()) };
        }
        let terms = self.terms.iter().filter(|(m, _)| self.partial_degree(m, &slots) <= max_order).cloned().collect();
        LaurentPoly { vars: self.vars.clone(), terms }
    }

    /// Largest total degree in `names` over all terms, `None` for zero.
    pub fn max_order(&self, names: &[&str]) -> Option<i32> {
        let slots: Vec<usize> = names.iter().filter_map(|n| self.vars.index_of(n)).collect();
        self.terms.iter().map(|(m, _)| self.partial_degree(m, &slots)).max()
    }

    /// Largest exponent of `name` appearing in any term (0 if absent).
    pub fn degree_of(&self, name: &str) -> i32 {
        match self.vars.index_of(name) {
            Some(i) => self.terms.iter().map(|(m, _)| m[i]).max().unwrap_or(0),
            None => 0,
        }
    }

    /// Smallest exponent of `name` appearing in any term (0 if absent).
    pub fn low_degree_of(&self, name: &str) -> i32 {
        match self.vars.index_of(name) {
            Some(i) => self.terms.iter().map(|(m, _)| m[i]).min().unwrap_or(0),
            None => 0,
        }
    }

    /// Exact image under a substitution. Every mapped-from variable must
    /// occur in this polynomial's variable set.
    pub fn substitute(&self, subst: &Substitution) -> Result<LaurentPoly, Error> {
        for from in subst.map.keys() {
            if !self.vars.contains(from) {
                return Err(Error::UnknownVariable(from.clone()));
            }
        }
        self.substitute_lenient(subst)
    }

    /// Like [`substitute`](Self::substitute) but ignores mapped variables
    /// that do not occur.
    pub fn substitute_lenient(&self, subst: &Substitution) -> Result<LaurentPoly, Error> {
        let touched = self.vars.names().iter().any(|n| subst.map.contains_key(n));
        if !touched {
            return Ok(self.clone());
        }
        let mut names: Vec<String> =
            self.vars.names().iter().filter(|n| !subst.map.contains_key(*n)).cloned().collect();
        for n in self.vars.names() {
            if let Some(Image::Var { name, .. }) = subst.map.get(n) {
                names.push(name.clone());
            }
        }
        let vars = VarSet::new(names);
        enum Slot<'a> {
            Keep(usize),
            Var(usize, bool),
            Point(&'a Rational),
        }
        let slots: Vec<Slot<'_>> = self
            .vars
            .names()
            .iter()
            .map(|n| match subst.map.get(n) {
                None => Slot::Keep(vars.index_of(n).unwrap()),
                Some(Image::Var { name, negate }) => Slot::Var(vars.index_of(name).unwrap(), *negate),
                Some(Image::Point(p)) => Slot::Point(p),
            })
            .collect();
        let mut out = Vec::with_capacity(self.terms.len());
        'terms: for (m, c) in &self.terms {
            let mut mono: Mono = SmallVec::from_elem(0, vars.len());
            let mut coeff = c.clone();
            for (slot, &e) in slots.iter().zip(m.iter()) {
                match slot {
                    Slot::Keep(i) => mono[*i] += e,
                    Slot::Var(i, negate) => {
                        mono[*i] += e;
                        if *negate && e % 2 != 0 {
                            coeff = -coeff;
                        }
                    }
                    Slot::Point(p) => {
                        if e == 0 {
                            continue;
                        }
                        if p.is_zero() && e > 0 {
                            continue 'terms;
                        }
                        coeff = &coeff * &p.pow(e)?;
                    }
                }
            }
            out.push((mono, coeff));
        }
        Ok(LaurentPoly::from_terms(vars, out))
    }

    /// Simultaneous renaming `from_i -> to_i`.
    pub fn rename(&self, pairs: &[(&str, &str)]) -> Result<LaurentPoly, Error> {
        let mut s = Substitution::new();
        for (a, b) in pairs {
            s = s.var(a, b);
        }
        self.substitute_lenient(&s)
    }

    /// Drops variables that appear with exponent zero in every term.
    pub fn trimmed(&self) -> LaurentPoly {
        let keep: Vec<usize> = (0..self.vars.len()).filter(|&i| self.terms.iter().any(|(m, _)| m[i] != 0)).collect();
        if keep.len() == self.vars.len() {
            return self.clone();
        }
        let vars = VarSet::new(keep.iter().map(|&i| self.vars.names()[i].clone()));
        let terms = self.terms.iter().map(|(m, c)| (keep.iter().map(|&i| m[i]).collect(), c.clone())).collect();
        LaurentPoly { vars, terms }
    }
}

/// Appends the pairwise products of `a` and `b` (same variable set).
pub(crate) fn push_products(buf: &mut Vec<(Mono, Rational)>, a: &LaurentPoly, b: &LaurentPoly) {
    debug_assert!(a.vars.same(&b.vars));
    for (ma, ca) in &a.terms {
        for (mb, cb) in &b.terms {
            let m: Mono = ma.iter().zip(mb.iter()).map(|(x, y)| x + y).collect();
            buf.push((m, ca * cb));
        }
    }
}

impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        if self.vars.same(&other.vars) {
            return self.terms == other.terms;
        }
        let (a, b) = LaurentPoly::align(self, other);
        a.terms == b.terms
    }
}

impl Eq for LaurentPoly {}

impl Default for LaurentPoly {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<Rational> for LaurentPoly {
    fn from(c: Rational) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<i64> for LaurentPoly {
    fn from(n: i64) -> Self {
        LaurentPoly::int(n)
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.vars.same(&rhs.vars) {
            return self.add_same(rhs);
        }
        let (a, b) = LaurentPoly::align(self, rhs);
        a.add_same(&b)
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.vars.same(&rhs.vars) {
            return self.mul_same(rhs);
        }
        let (a, b) = LaurentPoly::align(self, rhs);
        a.mul_same(&b)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        LaurentPoly { vars: self.vars.clone(), terms }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &'a LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self + rhs;
    }
}

/// Where a substituted variable goes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Image {
    /// `x -> name` or `x -> -name`.
    Var { name: String, negate: bool },
    /// `x -> value`.
    Point(Rational),
}

/// Simultaneous substitution of variables by (signed) variables or points.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Substitution {
    map: BTreeMap<String, Image>,
}

impl Substitution {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn var(mut self, from: &str, to: &str) -> Self {
        self.map.insert(from.into(), Image::Var { name: to.into(), negate: false });
        self
    }

    pub fn neg_var(mut self, from: &str, to: &str) -> Self {
        self.map.insert(from.into(), Image::Var { name: to.into(), negate: true });
        self
    }

    pub fn point(mut self, from: &str, value: Rational) -> Self {
        self.map.insert(from.into(), Image::Point(value));
        self
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &Image)> {
        self.map.iter()
    }
}

/// Canonical text: terms by descending total degree, then descending
/// exponent vector; explicit signs; `*` between factors.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut order: Vec<&(Mono, Rational)> = self.terms.iter().collect();
        order.sort_by(|a, b| {
            let da: i32 = a.0.iter().sum();
            let db: i32 = b.0.iter().sum();
            db.cmp(&da).then_with(|| b.0.cmp(&a.0))
        });
        for (k, (m, c)) in order.into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let mut factors: Vec<String> = Vec::new();
            let is_const = m.iter().all(|&e| e == 0);
            if is_const || !mag.is_one() {
                factors.push(mag.to_string());
            }
            for (name, &e) in self.vars.names().iter().zip(m.iter()) {
                match e {
                    0 => {}
                    1 => factors.push(name.clone()),
                    _ => factors.push(alloc::format!("{name}^{e}")),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

/// Parses the canonical text form (and anything close to it): a sum of
/// terms, each a `*`-separated product of rational literals and
/// `name` / `name^exp` factors.
impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::ParsePoly(s.into());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        // Split on + / - that start a term (not after `^`, `*` or `/`).
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        let mut prev: Option<char> = None;
        for ch in compact.chars() {
            let starts_term = (ch == '+' || ch == '-') && !matches!(prev, Some('^') | Some('*') | Some('/'));
            if starts_term {
                if !cur.is_empty() {
                    pieces.push((neg, core::mem::take(&mut cur)));
                } else if prev.is_some() {
                    return Err(bad());
                }
                neg = ch == '-';
            } else {
                cur.push(ch);
            }
            prev = Some(ch);
        }
        if cur.is_empty() {
            return Err(bad());
        }
        pieces.push((neg, cur));

        let mut raw: Vec<(Vec<(String, i32)>, Rational)> = Vec::new();
        let mut names: Vec<String> = Vec::new();
        for (neg, body) in pieces {
            let mut coeff = if neg { -Rational::one() } else { Rational::one() };
            let mut powers = Vec::new();
            for factor in body.split('*') {
                let first = factor.chars().next().ok_or_else(bad)?;
                if is_ident_start(first) {
                    let (name, exp) = match factor.split_once('^') {
                        Some((n, e)) => (n, e.parse::<i32>().map_err(|_| bad())?),
                        None => (factor, 1),
                    };
                    if !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                        return Err(bad());
                    }
                    names.push(name.into());
                    powers.push((name.to_string(), exp));
                } else {
                    coeff = &coeff * &factor.parse::<Rational>().map_err(|_| bad())?;
                }
            }
            raw.push((powers, coeff));
        }
        let vars = VarSet::new(names);
        let terms: Vec<(Mono, Rational)> = raw
            .into_iter()
            .map(|(powers, c)| {
                let mut m: Mono = SmallVec::from_elem(0, vars.len());
                for (n, e) in powers {
                    m[vars.index_of(&n).unwrap()] += e;
                }
                (m, c)
            })
            .collect();
        Ok(LaurentPoly::from_terms(vars, terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn binomial_square() {
        let d = p("u - v");
        assert_eq!(&d * &d, p("u^2 - 2*u*v + v^2"));
    }

    #[test]
    fn difference_of_squares_gives_zeta() {
        let a = p("u - v - 1");
        let b = p("u - v + 1");
        let d = p("u - v");
        assert_eq!(&a * &b, &(&d * &d) - &LaurentPoly::one());
    }

    #[test]
    fn additive_inverse_is_empty() {
        let x = p("3/2*u^-2*v + w - 7");
        let z = &x + &(-&x);
        assert!(z.is_zero());
        assert_eq!(z.num_terms(), 0);
    }

    #[test]
    fn checked_arith_rejects_mismatch() {
        let a = p("u");
        let b = p("v");
        assert!(matches!(poly_arith(&a, &b, PolyOp::Add), Err(Error::VarSetMismatch(..))));
        let vars = a.vars().union(b.vars());
        let s = poly_arith(&a.padded(&vars).unwrap(), &b.padded(&vars).unwrap(), PolyOp::Add).unwrap();
        assert_eq!(s, p("u + v"));
    }

    #[test]
    fn substitution_examples() {
        let s = Substitution::new().neg_var("u", "u");
        assert_eq!(p("u - v").substitute(&s).unwrap(), p("-u - v"));
        assert_eq!(p("u - v").substitute(&Substitution::new()).unwrap(), p("u - v"));
        let at = Substitution::new().point("u", Rational::from_int(2)).point("v", Rational::from_int(1));
        assert!(p("u^2 - 2*u*v + v^2 - 1").substitute(&at).unwrap().is_zero());
        assert!(matches!(p("u").substitute(&Substitution::new().var("q", "r")), Err(Error::UnknownVariable(_))));
        let zero = Substitution::new().point("u", Rational::zero());
        assert_eq!(p("u^-1 + 1").substitute(&zero), Err(Error::DivisionByZero));
    }

    #[test]
    fn simultaneous_rename() {
        assert_eq!(p("u - 2*v").rename(&[("u", "v"), ("v", "u")]).unwrap(), p("v - 2*u"));
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(p("v^2 + u^2 - 2*v*u").to_string(), "u^2 - 2*u*v + v^2");
        assert_eq!(p("-1 + u^-1*v").to_string(), "-1 + u^-1*v");
        assert_eq!(p("1/2*u - u").to_string(), "-1/2*u");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn truncation_by_order() {
        let s = p("1 + v*u^-1 + v^2*u^-2 + v^3*u^-3");
        assert_eq!(s.truncate_order(&["v"], 1), p("1 + v*u^-1"));
        assert_eq!(s.max_order(&["v"]), Some(3));
    }

    #[test]
    fn equality_ignores_padding() {
        let a = p("u");
        let wide = a.padded(&VarSet::new(["u", "v", "w"])).unwrap();
        assert_eq!(a, wide);
        assert_eq!(wide.trimmed().vars().len(), 1);
    }
}
