use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    T,
    S,
}

/// Mode generator `X^(level)_{row,col}`, indices 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ModeGen {
    pub family: Family,
    pub row: u16,
    pub col: u16,
    pub level: u32,
}

impl ModeGen {
    pub fn new(family: Family, row: usize, col: usize, level: u32) -> Self {
        ModeGen { family, row: row as u16, col: col as u16, level }
    }

    pub fn t(row: usize, col: usize, level: u32) -> Self {
        Self::new(Family::T, row, col, level)
    }

    pub fn s(row: usize, col: usize, level: u32) -> Self {
        Self::new(Family::S, row, col, level)
    }
}

// (level, row, col); family only separates otherwise equal generators.
impl Ord for ModeGen {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.level, self.row, self.col, self.family).cmp(&(other.level, other.row, other.col, other.family))
    }
}

impl PartialOrd for ModeGen {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ModeGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fam = match self.family {
            Family::T => 'T',
            Family::S => 'S',
        };
        write!(f, "{fam}{}[{},{}]", self.level, self.row, self.col)
    }
}

pub type Word = Vec<ModeGen>;

pub fn word_level(w: &[ModeGen]) -> u32 {
    w.iter().map(|g| g.level).sum()
}

/// Finite linear combination of words. Words are never reordered.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NCPoly {
    terms: BTreeMap<Word, Rational>,
}

impl NCPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(Rational::one())
    }

    pub fn scalar(c: Rational) -> Self {
        Self::term(Vec::new(), c)
    }

    pub fn gen(g: ModeGen) -> Self {
        Self::term(alloc::vec![g], Rational::one())
    }

    pub fn term(w: Word, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, Rational)>>(items: I) -> Self {
        let mut p = Self::zero();
        for (w, c) in items {
            p.add_term(w, c);
        }
        p
    }

    pub fn add_term(&mut self, w: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(x) => {
                *x = &*x + &c;
                if x.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &NCPoly, c: &Rational) {
        for (w, x) in &other.terms {
            self.add_term(w.clone(), x * c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &[ModeGen]) -> Rational {
        self.terms.get(w).cloned().unwrap_or(Rational::ZERO)
    }

    /// Scalar part, if every word is empty.
    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::ZERO),
            1 => self.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }

    pub fn max_level(&self) -> u32 {
        self.terms.keys().map(|w| word_level(w)).max().unwrap_or(0)
    }

    pub fn max_gen_level(&self) -> u32 {
        self.terms.keys().flat_map(|w| w.iter().map(|g| g.level)).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Rational) -> NCPoly {
        if c.is_zero() {
            return Self::zero();
        }
        NCPoly { terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect() }
    }

    /// Largest word in display order: higher level, then longer, then larger.
    pub fn leading(&self) -> Option<(&Word, &Rational)> {
        self.terms.iter().max_by(|a, b| display_key(a.0).cmp(&display_key(b.0)))
    }

    /// Scaled so the leading coefficient is one.
    pub fn monic(&self) -> NCPoly {
        match self.leading() {
            Some((_, c)) => self.scale(&c.recip().expect("nonzero leading coefficient")),
            None => Self::zero(),
        }
    }

    /// Replaces every generator by a polynomial; unmapped generators stay.
    pub fn substitute<F>(&self, mut f: F) -> NCPoly
    where
        F: FnMut(&ModeGen) -> Option<NCPoly>,
    {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            let mut acc = NCPoly::scalar(c.clone());
            for g in w {
                let img = f(g).unwrap_or_else(|| NCPoly::gen(*g));
                acc = &acc * &img;
                if acc.is_zero() {
                    break;
                }
            }
            out.add_scaled(&acc, &Rational::one());
        }
        out
    }
}

fn display_key(w: &[ModeGen]) -> (u32, usize, &[ModeGen]) {
    (word_level(w), w.len(), w)
}

impl<'a> Add<&'a NCPoly> for &'a NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rational::one());
        out
    }
}

impl<'a> Sub<&'a NCPoly> for &'a NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rational::one());
        out
    }
}

impl Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        self.scale(&-Rational::one())
    }
}

impl<'a> Mul<&'a NCPoly> for &'a NCPoly {
    type Output = NCPoly;
    fn mul(self, rhs: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add_term(w, x * y);
            }
        }
        out
    }
}

fn write_word(f: &mut fmt::Formatter<'_>, w: &[ModeGen]) -> fmt::Result {
    for (i, g) in w.iter().enumerate() {
        if i > 0 {
            f.write_str("*")?;
        }
        write!(f, "{g}")?;
    }
    Ok(())
}

/// Terms by descending level, then length, then word.
impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut items: Vec<_> = self.terms.iter().collect();
        items.sort_by(|a, b| display_key(b.0).cmp(&display_key(a.0)));
        for (i, (w, c)) in items.into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if w.is_empty() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write_word(f, w)?;
            }
        }
        Ok(())
    }
}
