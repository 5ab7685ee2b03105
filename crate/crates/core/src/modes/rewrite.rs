use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use super::ncpoly::{word_level, Family, ModeGen, NCPoly, Word};
use crate::error::Error;
use crate::rational::Rational;

/// Rules `a·b ↦ b·a + correction` for generators `a > b`, valid for words
/// of total level at most `level_cap`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteSystem {
    n: usize,
    family: Family,
    level_cap: u32,
    rules: BTreeMap<(ModeGen, ModeGen), NCPoly>,
}

impl RewriteSystem {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn level_cap(&self) -> u32 {
        self.level_cap
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn rule(&self, a: ModeGen, b: ModeGen) -> Option<&NCPoly> {
        self.rules.get(&(a, b))
    }

    pub fn rules(&self) -> impl Iterator<Item = (&(ModeGen, ModeGen), &NCPoly)> + '_ {
        self.rules.iter()
    }

    /// `rhs - b·a` for the rule on `(a, b)`.
    pub fn correction(&self, a: ModeGen, b: ModeGen) -> Option<NCPoly> {
        self.rule(a, b).map(|r| r - &NCPoly::term(vec![b, a], Rational::one()))
    }

    /// One rule per line, `a*b -> rhs`, in generator order.
    pub fn export(&self) -> String {
        let mut s = String::new();
        for ((a, b), rhs) in &self.rules {
            let _ = writeln!(s, "{a}*{b} -> {rhs}");
        }
        s
    }
}

/// One relation per line, `0 = p`, lines sorted.
pub fn export_relations(rels: &[NCPoly]) -> String {
    let mut lines: Vec<String> = rels.iter().map(|r| format!("0 = {r}")).collect();
    lines.sort();
    let mut s = lines.join("\n");
    s.push('\n');
    s
}

fn is_inversion(w: &[ModeGen]) -> bool {
    w.len() == 2 && w[0] > w[1]
}

// Larger keys are eliminated first.
fn column_key(w: &Word) -> (u32, bool, usize, &Word) {
    (word_level(w), is_inversion(w), w.len(), w)
}

type Row = BTreeMap<usize, Rational>;

fn axpy(row: &mut Row, other: &Row, c: &Rational) {
    for (k, x) in other {
        let v = row.entry(*k).or_insert(Rational::ZERO);
        *v -= &(x * c);
        if v.is_zero() {
            row.remove(k);
        }
    }
}

/// Reduced row echelon form with pivots on the largest columns.
fn rref(rows: Vec<Row>) -> BTreeMap<usize, Row> {
    let mut pivots: BTreeMap<usize, Row> = BTreeMap::new();
    for mut row in rows {
        let mut from = 0;
        loop {
            let hit = row.keys().copied().find(|k| *k >= from && pivots.contains_key(k));
            let Some(k) = hit else { break };
            let c = row[&k].clone();
            axpy(&mut row, &pivots[&k], &c);
            from = k + 1;
        }
        let Some((&lead, c)) = row.iter().next() else { continue };
        let inv = c.recip().expect("nonzero pivot");
        for v in row.values_mut() {
            *v *= &inv;
        }
        for other in pivots.values_mut() {
            if let Some(c) = other.get(&lead).cloned() {
                axpy(other, &row, &c);
            }
        }
        pivots.insert(lead, row);
    }
    pivots
}

/// Orients relations into rewrite rules for words of total level at most
/// `level_cap`. Relations above the cap are ignored. A relation whose
/// leading word is not an inversion `a·b` with `a > b`, or whose leading part
/// is not exactly `a·b - b·a`, is reported as unorientable.
pub fn derive_rules(relations: &[NCPoly], n: usize, level_cap: u32) -> Result<RewriteSystem, Error> {
    let kept: Vec<&NCPoly> = relations.iter().filter(|r| r.max_level() <= level_cap).collect();
    let family =
        kept.iter().flat_map(|r| r.terms().flat_map(|(w, _)| w.iter().map(|g| g.family))).next().unwrap_or(Family::T);

    let mut words: Vec<&Word> = kept.iter().flat_map(|r| r.terms().map(|(w, _)| w)).collect();
    words.sort_by(|a, b| column_key(b).cmp(&column_key(a)));
    words.dedup();
    let index: BTreeMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (*w, i)).collect();
    let rows = kept.iter().map(|r| r.terms().map(|(w, c)| (index[w], c.clone())).collect::<Row>()).collect();

    let mut rules = BTreeMap::new();
    for (lead, row) in rref(rows) {
        let w = words[lead];
        let mut rhs = NCPoly::zero();
        for (k, c) in row.iter().skip(1) {
            rhs.add_term(words[*k].clone(), -c);
        }
        if !is_inversion(w) {
            return Err(Error::Unorientable(format!("leading word {} in 0 = {}", show(w), show_row(&row, &words))));
        }
        let level = word_level(w);
        let swapped = vec![w[1], w[0]];
        let top_ok = rhs.coeff(&swapped).is_one()
            && rhs.terms().all(|(x, _)| *x == swapped || word_level(x) < level || x.len() < 2);
        if !top_ok {
            return Err(Error::Unorientable(format!("{} -> {}", show(w), rhs)));
        }
        rules.insert((w[0], w[1]), rhs);
    }

    let rs = RewriteSystem { n, family, level_cap, rules };
    let min = match family {
        Family::T => 1,
        Family::S => 0,
    };
    for a in all_gens(family, n, min, level_cap) {
        for b in all_gens(family, n, min, level_cap - a.level.min(level_cap)) {
            if a > b && a.level + b.level <= level_cap && !rs.rules.contains_key(&(a, b)) {
                return Err(Error::Unorientable(format!("no relation orients {a}*{b}")));
            }
        }
    }
    Ok(rs)
}

fn all_gens(family: Family, n: usize, min: u32, max: u32) -> Vec<ModeGen> {
    let mut out = Vec::new();
    for level in min..=max {
        for i in 1..=n {
            for j in 1..=n {
                out.push(ModeGen::new(family, i, j, level));
            }
        }
    }
    out
}

fn show(w: &[ModeGen]) -> String {
    format!("{}", NCPoly::term(w.to_vec(), Rational::one()))
}

fn show_row(row: &Row, words: &[&Word]) -> NCPoly {
    NCPoly::from_terms(row.iter().map(|(k, c)| (words[*k].clone(), c.clone())))
}

/// Which inversion is rewritten first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Strategy {
    #[default]
    Leftmost,
    Rightmost,
}

/// Memoizing reducer over one rewrite system.
pub struct Reducer<'a> {
    rs: &'a RewriteSystem,
    strategy: Strategy,
    memo: BTreeMap<Word, NCPoly>,
}

impl<'a> Reducer<'a> {
    pub fn new(rs: &'a RewriteSystem, strategy: Strategy) -> Self {
        Reducer { rs, strategy, memo: BTreeMap::new() }
    }

    pub fn reduce(&mut self, p: &NCPoly) -> Result<NCPoly, Error> {
        let mut out = NCPoly::zero();
        for (w, c) in p.terms() {
            let nf = self.reduce_word(w)?;
            out.add_scaled(&nf, c);
        }
        Ok(out)
    }

    fn reduce_word(&mut self, w: &Word) -> Result<NCPoly, Error> {
        if let Some(hit) = self.memo.get(w) {
            return Ok(hit.clone());
        }
        let mut positions = (0..w.len().saturating_sub(1)).filter(|&i| w[i] > w[i + 1]);
        let at = match self.strategy {
            Strategy::Leftmost => positions.next(),
            Strategy::Rightmost => positions.next_back(),
        };
        let out = match at {
            None => NCPoly::term(w.clone(), Rational::one()),
            Some(i) => {
                let (a, b) = (w[i], w[i + 1]);
                let Some(rhs) = self.rs.rule(a, b) else {
                    return Err(Error::LevelCapExceeded { level: a.level + b.level, cap: self.rs.level_cap });
                };
                let mut out = NCPoly::zero();
                for (mid, c) in rhs.clone().terms() {
                    let mut x = w[..i].to_vec();
                    x.extend_from_slice(mid);
                    x.extend_from_slice(&w[i + 2..]);
                    let nf = self.reduce_word(&x)?;
                    out.add_scaled(&nf, c);
                }
                out
            }
        };
        self.memo.insert(w.clone(), out.clone());
        Ok(out)
    }
}

pub fn normal_form(p: &NCPoly, rs: &RewriteSystem) -> Result<NCPoly, Error> {
    normal_form_with(p, rs, Strategy::Leftmost)
}

pub fn normal_form_with(p: &NCPoly, rs: &RewriteSystem, strategy: Strategy) -> Result<NCPoly, Error> {
    Reducer::new(rs, strategy).reduce(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modes::expand::{expand_relation, Relation};

    fn gen(i: usize, j: usize, k: u32) -> ModeGen {
        ModeGen::t(i, j, k)
    }

    fn system(cap: u32) -> RewriteSystem {
        derive_rules(&expand_relation(&Relation::Rtt, 2, cap).unwrap(), 2, cap).unwrap()
    }

    #[test]
    fn gl2_rule_for_12_11() {
        let rs = system(2);
        let (a, b) = (gen(1, 2, 1), gen(1, 1, 1));
        assert_eq!(rs.correction(a, b).unwrap(), NCPoly::term(vec![gen(1, 2, 1)], -Rational::one()));
        assert!(rs.rule(b, a).is_none());
        let w = NCPoly::term(vec![a, b], Rational::one());
        assert_eq!(normal_form(&w, &rs).unwrap(), *rs.rule(a, b).unwrap());
    }

    #[test]
    fn ordered_words_are_fixed() {
        let rs = system(2);
        let w = NCPoly::term(vec![gen(1, 1, 1), gen(1, 2, 1), gen(2, 2, 1)], Rational::from_int(5));
        assert_eq!(normal_form(&w, &rs).unwrap(), w);
    }

    #[test]
    fn relations_reduce_to_zero() {
        for cap in 2..=3 {
            let rels = expand_relation(&Relation::Rtt, 2, cap).unwrap();
            let rs = derive_rules(&rels, 2, cap).unwrap();
            for r in rels.iter().filter(|r| r.max_level() <= cap) {
                assert!(normal_form(r, &rs).unwrap().is_zero(), "{r}");
            }
        }
    }

    #[test]
    fn cap_overflow_is_reported() {
        let rs = system(2);
        let w = NCPoly::term(vec![gen(1, 1, 2), gen(1, 1, 1)], Rational::one());
        assert_eq!(normal_form(&w, &rs), Err(Error::LevelCapExceeded { level: 3, cap: 2 }));
    }

    #[test]
    fn unorientable_is_reported() {
        let rel = NCPoly::term(vec![gen(1, 1, 1), gen(1, 2, 1)], Rational::one());
        assert!(matches!(derive_rules(&[rel], 2, 2), Err(Error::Unorientable(_))));
    }

    #[test]
    fn strategies_agree_on_length_three() {
        let rs = system(3);
        let gens = all_gens(Family::T, 2, 1, 1);
        for a in &gens {
            for b in &gens {
                for c in &gens {
                    let w = NCPoly::term(vec![*a, *b, *c], Rational::one());
                    let l = normal_form_with(&w, &rs, Strategy::Leftmost).unwrap();
                    let r = normal_form_with(&w, &rs, Strategy::Rightmost).unwrap();
                    assert_eq!(l, r, "{w}");
                }
            }
        }
    }
}
