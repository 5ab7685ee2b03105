mod common;

use std::collections::BTreeMap;

use common::{q, Dense, ModeRep};
use proptest::prelude::*;
use workbench_core::modes::{
    check_character_modes, check_embedding_images, derive_rules, embedding_image, expand_relation, export_relations,
    normal_form, normal_form_with, verify_twisted_embedding, word_level, ModeGen, NCPoly, Relation, RewriteSystem,
    Strategy as Order,
};
use workbench_core::{Error, Rational, Transposition};

fn kinds() -> [Transposition; 2] {
    [Transposition::identity(2), Transposition::symplectic(2).unwrap()]
}

fn rtt_system(cap: u32) -> RewriteSystem {
    derive_rules(&expand_relation(&Relation::Rtt, 2, cap).unwrap(), 2, cap).unwrap()
}

// [X_ij, X_kl] = δ_kj X_il - δ_il X_kj, written out by hand for n = 2.
#[test]
fn rtt_level_one_matches_gl2_fixture() {
    let rs = rtt_system(2);
    assert_eq!(rs.export(), include_str!("fixtures/gl2_bracket.txt"));
}

#[test]
fn gl2_bracket_formula_holds_under_rules() {
    let rs = rtt_system(2);
    let x = |i, j| NCPoly::gen(ModeGen::t(i, j, 1));
    let d = |a: usize, b: usize| if a == b { Rational::one() } else { Rational::zero() };
    for i in 1..=2 {
        for j in 1..=2 {
            for k in 1..=2 {
                for l in 1..=2 {
                    let lhs = &(&x(i, j) * &x(k, l)) - &(&x(k, l) * &x(i, j));
                    let mut rhs = x(i, l).scale(&d(k, j));
                    rhs.add_scaled(&x(k, j), &-d(i, l));
                    let diff = normal_form(&(&lhs - &rhs), &rs).unwrap();
                    assert!(diff.is_zero(), "i={i} j={j} k={k} l={l}: {diff}");
                }
            }
        }
    }
}

#[test]
fn twisted_relations_fixture() {
    let rels = expand_relation(&Relation::TwistedRe(Transposition::identity(2)), 2, 1).unwrap();
    assert_eq!(export_relations(&rels), include_str!("fixtures/twisted_re_n2_d1_identity.txt"));
    let counts: Vec<usize> =
        kinds().iter().map(|t| expand_relation(&Relation::TwistedRe(t.clone()), 2, 1).unwrap().len()).collect();
    assert_eq!(counts, vec![12, 6]);
    for t in kinds() {
        for r in expand_relation(&Relation::TwistedRe(t), 2, 1).unwrap() {
            assert!(r.max_level() <= 2);
        }
    }
}

#[test]
fn rtt_relations_vanish_in_evaluation_modules() {
    let rep = ModeRep::new(2, &[q(1, 3), q(-5, 2), q(7, 4)], 3);
    for r in expand_relation(&Relation::Rtt, 2, 3).unwrap() {
        assert!(rep.eval(&r).is_zero(), "{r}");
    }
}

#[test]
fn cap_three_closes_over_embedded_twisted_relations() {
    let rs = rtt_system(3);
    for t in kinds() {
        let img = embedding_image(2, 2, &t);
        for r in expand_relation(&Relation::TwistedRe(t.clone()), 2, 2).unwrap() {
            let m = r.substitute(|g| img.get(g).cloned());
            if m.max_level() <= 3 {
                assert!(normal_form(&m, &rs).unwrap().is_zero(), "{r}");
            }
        }
    }
}

// The rewrite-free side: images evaluated in a numeric evaluation module.
#[test]
fn embedding_agrees_with_module_oracle() {
    let rep = ModeRep::new(2, &[q(2, 3), q(-3, 7), q(5, 2)], 4);
    for t in kinds() {
        for d in 1..=2 {
            let report = verify_twisted_embedding(2, d, &t).unwrap();
            assert!(report.passed, "{report}");
            let img = embedding_image(2, d, &t);
            for r in expand_relation(&Relation::TwistedRe(t.clone()), 2, d).unwrap() {
                let m = r.substitute(|g| img.get(g).cloned());
                assert!(rep.eval(&m).is_zero(), "{r}");
            }
        }
    }
}

#[test]
fn wrong_sign_embedding_fails_in_both_pipelines() {
    let t = Transposition::identity(2);
    // S(u) ↦ Tᵗ(u) T(u): drops the sign change of the spectral parameter.
    let good = embedding_image(2, 2, &t);
    let mut bad = BTreeMap::new();
    for g in good.keys() {
        let mut p = NCPoly::zero();
        for a in 0..=g.level {
            for l in 1..=2 {
                let left = if a == 0 {
                    if g.row as usize == l {
                        NCPoly::one()
                    } else {
                        NCPoly::zero()
                    }
                } else {
                    NCPoly::gen(ModeGen::t(l, g.row as usize, a))
                };
                let b = g.level - a;
                let right = if b == 0 {
                    if l == g.col as usize {
                        NCPoly::one()
                    } else {
                        NCPoly::zero()
                    }
                } else {
                    NCPoly::gen(ModeGen::t(l, g.col as usize, b))
                };
                p = &p + &(&left * &right);
            }
        }
        bad.insert(*g, p);
    }
    let report = check_embedding_images(2, 2, &t, &bad).unwrap();
    assert!(!report.passed);
    assert!(report.witness.is_some());
    let rep = ModeRep::new(2, &[q(2, 3), q(-3, 7), q(5, 2)], 4);
    let any_nonzero = expand_relation(&Relation::TwistedRe(t), 2, 2)
        .unwrap()
        .iter()
        .any(|r| !rep.eval(&r.substitute(|g| bad.get(g).cloned())).is_zero());
    assert!(any_nonzero);
}

#[test]
fn level_zero_relation_is_trivial() {
    let one = NCPoly::one();
    assert!((&(&one * &one) - &(&one * &one)).is_zero());
    assert_eq!(normal_form(&one, &rtt_system(2)).unwrap(), one);
}

#[test]
fn character_consistency() {
    use workbench_core::RatMatrix;
    let id = Transposition::identity(2);
    let j = Transposition::symplectic(2).unwrap();
    let sym = RatMatrix::from_ints(&[&[2, -1], &[-1, 5]]).unwrap();
    let skew = RatMatrix::symplectic(2).unwrap();
    for d in 0..=2 {
        assert!(check_character_modes(2, d, &id, &sym).unwrap().passed);
        assert!(check_character_modes(2, d, &id, &skew).unwrap().passed);
        assert!(check_character_modes(2, d, &j, &RatMatrix::identity(2)).unwrap().passed);
    }
    let bad = RatMatrix::from_ints(&[&[0, 1], &[0, 0]]).unwrap();
    assert!(!check_character_modes(2, 1, &id, &bad).unwrap().passed);
}

#[test]
fn normal_forms_are_ordered_and_strategy_free_up_to_level_three() {
    let rs = rtt_system(3);
    let mut gens = Vec::new();
    for level in 1..=3 {
        for i in 1..=2 {
            for j in 1..=2 {
                gens.push(ModeGen::t(i, j, level));
            }
        }
    }
    let mut words: Vec<Vec<ModeGen>> = Vec::new();
    for a in &gens {
        words.push(vec![*a]);
        for b in &gens {
            words.push(vec![*a, *b]);
            for c in &gens {
                words.push(vec![*a, *b, *c]);
            }
        }
    }
    for w in words.into_iter().filter(|w| word_level(w) <= 3) {
        let p = NCPoly::term(w.clone(), Rational::one());
        let l = normal_form_with(&p, &rs, Order::Leftmost).unwrap();
        let r = normal_form_with(&p, &rs, Order::Rightmost).unwrap();
        assert_eq!(l, r, "{p}");
        assert_eq!(normal_form(&l, &rs).unwrap(), l);
        for (x, _) in l.terms() {
            assert!(x.windows(2).all(|s| s[0] <= s[1]), "{l}");
        }
    }
}

#[test]
fn overflow_is_an_error() {
    let rs = rtt_system(2);
    let p = NCPoly::term(vec![ModeGen::t(2, 2, 2), ModeGen::t(1, 1, 1)], Rational::one());
    assert!(matches!(normal_form(&p, &rs), Err(Error::LevelCapExceeded { level: 3, cap: 2 })));
}

fn arb_poly() -> impl Strategy<Value = NCPoly> {
    let gen = (1usize..=2, 1usize..=2, 1u32..=2).prop_map(|(i, j, k)| ModeGen::t(i, j, k));
    let word = prop::collection::vec(gen, 0..=3).prop_filter("level", |w| word_level(w) <= 4);
    prop::collection::vec((word, -3i64..=3), 0..6)
        .prop_map(|ts| NCPoly::from_terms(ts.into_iter().map(|(w, c)| (w, Rational::from_int(c)))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normal_form_is_idempotent(p in arb_poly()) {
        let rs = rtt_system(4);
        let once = normal_form(&p, &rs).unwrap();
        prop_assert_eq!(normal_form(&once, &rs).unwrap(), once.clone());
        let rep = ModeRep::new(2, &[q(1, 2), q(-4, 3)], 4);
        prop_assert_eq!(rep.eval(&once), rep.eval(&p));
    }
}

#[test]
fn module_oracle_sees_nonzero_elements() {
    // Guards the oracle: a single mode is not sent to zero.
    let rep = ModeRep::new(2, &[q(1, 2), q(-4, 3)], 2);
    let p = NCPoly::gen(ModeGen::t(1, 2, 1));
    assert!(!rep.eval(&p).is_zero());
    assert_ne!(rep.eval(&p), Dense::zero(rep.dim));
}
