//! Named checks. Each entry turns one parameter record into one or more
//! reports.

use std::path::Path;

use workbench_core::eval::{build_twisted_s, check_double_relations, check_pairing, eval_double, eval_t, DoubleEval};
use workbench_core::fusion::{character_chi, character_family};
use workbench_core::modes::{check_character_modes, verify_twisted_embedding};
use workbench_core::modes::{derive_rules, expand_relation, normal_form, ModeGen, NCPoly, Relation};
use workbench_core::rmatrix::{yang_r, yang_r_bar};
use workbench_core::verify::{
    check_characteristic, check_conjugate_re, check_intertwiner, check_membership, check_quasi_inverse,
    check_re_components, check_re_solution, check_rtt, check_ybe, compare, Params,
};
use workbench_core::{CheckReport, LegSpace, RFamily, RatMatrix, TensorOp, Transposition, Witness};

use crate::config::{CheckParams, Defaults, Inputs};
use crate::error::RunError;
use crate::input::MatrixSource;

/// Parameters after defaults are applied.
#[derive(Clone, Debug)]
pub struct Resolved {
    pub name: String,
    pub n: usize,
    pub g: String,
    pub x: String,
    pub order: u32,
    pub kmax: usize,
    pub level: u32,
    pub k: Option<usize>,
    pub m: Option<usize>,
    pub i: Option<usize>,
    base: Option<std::path::PathBuf>,
}

impl Resolved {
    pub fn new(name: &str, p: &CheckParams, inputs: &Inputs, d: &Defaults, base: Option<&Path>) -> Self {
        Resolved {
            name: name.into(),
            n: p.n.unwrap_or(2),
            g: p.g.clone().or_else(|| inputs.g.clone()).unwrap_or_else(|| "identity".into()),
            x: p.x.clone().or_else(|| inputs.x.clone()).unwrap_or_else(|| "identity".into()),
            order: p.order.unwrap_or(d.order),
            kmax: p.kmax.unwrap_or(d.kmax),
            level: p.level.unwrap_or(d.level),
            k: p.k,
            m: p.m,
            i: p.i,
            base: base.map(Path::to_path_buf),
        }
    }

    fn core<T>(&self, r: Result<T, workbench_core::Error>) -> Result<T, RunError> {
        r.map_err(|source| RunError::Core { check: self.name.clone(), source })
    }

    fn transposition(&self) -> Result<Transposition, RunError> {
        MatrixSource::parse(&self.g, self.base.as_deref()).transposition(self.n, &self.name)
    }

    fn x_matrix(&self) -> Result<RatMatrix, RunError> {
        MatrixSource::parse(&self.x, self.base.as_deref()).matrix(self.n, &self.name)
    }

    fn family(&self) -> Result<RFamily, RunError> {
        self.core(RFamily::yang(self.n, self.transposition()?))
    }
}

type Run = fn(&Resolved) -> Result<Vec<CheckReport>, RunError>;

pub struct Entry {
    pub name: &'static str,
    pub about: &'static str,
    pub run: Run,
}

pub const CHECKS: &[Entry] = &[
    Entry { name: "ybe", about: "Yang-Baxter equation for the Yang R-matrix", run: ybe },
    Entry { name: "quasi_inverse", about: "R R-bar = R-bar R = ((u-v)^2 - 1) Id", run: quasi_inverse },
    Entry { name: "tau_symmetry", about: "(tau x tau)(R) = R21, and R'' = R'", run: tau_symmetry },
    Entry { name: "rtt_eval", about: "RTT relation for the evaluation representative", run: rtt_eval },
    Entry { name: "re_constant", about: "reflection equation for a constant X", run: re_constant },
    Entry {
        name: "conjugate_re",
        about: "conjugate reflection equation for a constant X (verdict only)",
        run: conjugate_re,
    },
    Entry {
        name: "membership",
        about: "fused character components satisfy R h = sigma(h) R, k = 2..kmax",
        run: membership,
    },
    Entry { name: "characteristic", about: "S^(k) = S^(i) R' S^(k-i) for every split, k <= kmax", run: characteristic },
    Entry {
        name: "characteristic_unprimed",
        about: "the split with an unprimed middle factor (expected to fail for generic X)",
        run: characteristic_unprimed,
    },
    Entry {
        name: "re_components",
        about: "graded reflection equation between character components",
        run: re_components,
    },
    Entry {
        name: "intertwiner",
        about: "breve form of the graded reflection equation modulo order > K",
        run: intertwiner,
    },
    Entry {
        name: "twisted_eval",
        about: "reflection equation for t(T)(-u) T(u) on the evaluation representative",
        run: twisted_eval,
    },
    Entry { name: "double_yangian", about: "the three double Yangian relation families", run: double_yangian },
    Entry {
        name: "double_yangian_perturbed",
        about: "negative control: L- with 2P (expected to fail)",
        run: double_yangian_perturbed,
    },
    Entry { name: "pairing", about: "pairing series against (z-w) Id - P modulo order > K", run: pairing },
    Entry { name: "gl_bracket", about: "RTT mode relations reduce to zero and give the gl_n bracket", run: gl_bracket },
    Entry {
        name: "twisted_embedding",
        about: "twisted reflection relations map to zero under the embedding",
        run: twisted_embedding,
    },
    Entry { name: "character_modes", about: "constant X solves the twisted mode relations", run: character_modes },
];

pub fn lookup(name: &str) -> Option<&'static Entry> {
    CHECKS.iter().find(|e| e.name == name)
}

pub fn run_check(r: &Resolved) -> Result<Vec<CheckReport>, RunError> {
    let entry = lookup(&r.name).ok_or_else(|| RunError::UnknownCheck(r.name.clone()))?;
    (entry.run)(r)
}

fn retag(mut rep: CheckReport, name: &str, extra: &[(&str, String)]) -> CheckReport {
    rep.name = name.into();
    for (k, v) in extra {
        rep.params.retain(|(key, _)| key != k);
        rep.params.push(((*k).into(), v.clone()));
    }
    rep.params.sort();
    rep
}

fn ybe(r: &Resolved) -> Result<Vec<CheckReport>, RunError> {
    let op = r.core(yang_r(r.n, "u", "v"))?;
    Ok(vec![r.core(check_ybe(&op))?])
}

fn quasi_inverse(r: &Resolved) -> Result<Vec<CheckReport>, RunError> {
    let op = r.core(yang_r(r.n, "u", "v"))?;
    let (bar, zeta) = r.core(yang_r_bar(r.n, "u", "v"))?;
    Ok(vec![r.core(check_quasi_inverse(&op, &bar, &zeta))?])
}

fn tau_symmetry(r: &Resolved) -> Result<Vec<CheckReport>, RunError> {
    let fam = r.family()?;
    let params = || Params::new().with("n", fam.n).with("g", fam.t.label());
    let tt = r.core(fam.tau_tau())?;
    let r21 = r.core(fam.r21())?;
    let sym = r.core(compare("tau_symmetry", params(), &tt, &r21))?;
    let primes = r.core(compare("double_prime", params(), &fam.r_double_prime, &fam.r_prime))?;
    Ok(vec![sym, primes])
}

fn rtt_eval(r: &Resolved) -> Result<Vec<CheckReport>, RunError> {
    let rep = r.core(eval_t(r.n, "u", "z"))?;
    let op = r.core(yang_r(r.n, "u", "v"))?;
    Ok(vec![retag(r.core(check_rtt(&op, &rep.t_poly))?, "rtt_eval", &[])])
}

fn constant_at(r: &Resolved, x: &RatMatrix, label: &str) -> Result<TensorOp, RunError> {
    r.core(TensorOp::from_matrix(LegSpace::aux(x.n(), label), x))
}

fn re_constant(r: &Resolved) -> Result<Vec<CheckReport>, RunError> {
    let fam = r.family()?;
    let s = constant_at(r, &r.x_matrix()?, "u")?;
    let rep = r.core(check_re_solution(&fam, &s))?;
    Ok(vec![retag(rep, "re_constant", &[("x", r.x.clone())])])
}

fn conjugate_re(r: &Resolved) -> Result<Vec<CheckReport>, RunError> {
    let fam = r.family()?;
    let x = r.x_matrix()?;
    let rep = r.core(check_conjugate_re(&fam, &constant_at(r, &x, "u")?, &constant_at(r, &x, "v")?))?;
    Ok(vec![retag(rep, "conjugate_re", &[("x", r.x.clone())])])
}

fn membership(r: &Resolved) -> Result<Vec<CheckReport>, RunError> {
    let fam = r.family()?;
    let x = r.x_matrix()?;
    let ks: Vec<usize> = match r.k {
        Some(k) if k < 2 => return Err(RunError::param(&r.name, "membership needs k >= 2")),
        Some(k) => vec![k],
        None => (2..=r.kmax).collect(),
    };
    let mut out = Vec::new();
    for k in ks {
        let h = r.core(character_chi(&x, &fam.t, k))?;
        let rep = r.core(check_membership(&h, &fam))?;
        out.push(retag(rep, "membership", &[("x", r.x.clone()), ("g", fam.t.label().into())]));
    }
    Ok(out)
}

fn splits(r: &Resolved, default_k: &[usize]) -> Result<Vec<(usize, usize)>, RunError> {
    let ks: Vec<usize> = r.k.map_or_else(|| default_k.to_vec(), |k| vec![k]);
    let mut out = Vec::new();
    for k in ks {
        if k > r.kmax {
            return Err(RunError::param(&r.name, format!("k = {k} exceeds kmax = {}", r.kmax)));
        }
        match r.i {
            Some(i) if i > k => return Err(RunError::param(&r.name, format!("i = {i} exceeds k = {k}"))),
            Some(i) => out.push((k, i)),
            None => out.extend((0..=k).map(|i| (k, i))),
        }
    }
    Ok(out)
}

fn characteristic_with(r: &Resolved, primed: bool, default_k: &[usize]) -> Result<Vec<CheckReport>, RunError> {
    let t = r.transposition()?;
    let family = r.core(character_family(&r.x_matrix()?, &t, r.kmax))?;
    let mut out = Vec::new();
    for (k, i) in splits(r, default_k)? {
        let rep = r.core(check_characteristic(&family, k, i, primed))?;
        out.push(retag(rep.clone(), &rep.name, &[("x", r.x.clone())]));
    }
    Ok(out)
}

fn characteristic(r: &Resolved) -> Result<Vec<CheckReport>, RunError> {
    let ks: Vec<usize> = (1..=r.kmax).collect();
    characteristic_with(r, true, &ks)
}

fn characteristic_unprimed(r: &Resolved) -> Result<Vec<CheckReport>, RunError> {
    let r = Resolved { i: r.i.or(Some(1)), kmax: r.kmax.max(2), ..r.clone() };
    characteristic_with(&r, false, &[2])
}

fn re_components(r: &Resolved) -> Result<Vec<CheckReport>, RunError> {
    let t = r.transposition()?;
    let family = r.core(character_family(&r.x_matrix()?, &t, r.kmax))?;
    let top = r.kmax.min(2);
    let ks: Vec<usize> = r.k.map_or_else(|| (0..=top).collect(), |k| vec![k]);
    let ms: Vec<usize> = r.m.map_or_else(|| (0..=top).collect(), |m| vec![m]);
    let mut out = Vec::new();
    for &k in &ks {
        for &m in &ms {
            let rep = r.core(check_re_components(&family, k, m))?;
            out.push(retag(rep, "re_components", &[("x", r.x.clone())]));
        }
    }
    Ok(out)
}

fn intertwiner(r: &Resolved) -> Result<Vec<CheckReport>, RunError> {
    let t = r.transposition()?;
    let (k, m) = (r.k.unwrap_or(1), r.m.unwrap_or(1));
    let family = r.core(character_family(&r.x_matrix()?, &t, k.max(m).max(1)))?;
    let rep = r.core(check_intertwiner(&family, r.order, k, m))?;
    Ok(vec![retag(rep, "intertwiner", &[("x", r.x.clone())])])
}

fn twisted_eval(r: &Resolved) -> Result<Vec<CheckReport>, RunError> {
    let fam = r.family()?;
    let rep = r.core(eval_t(r.n, "u", "z"))?;
    let s = r.core(build_twisted_s(&rep, &fam.t))?;
    Ok(vec![retag(r.core(check_re_solution(&fam, &s))?, "twisted_eval", &[])])
}

fn double_yangian(r: &Resolved) -> Result<Vec<CheckReport>, RunError> {
    let d = r.core(eval_double(r.n, "u", "z"))?;
    r.core(check_double_relations(&d))
}

fn double_yangian_perturbed(r: &Resolved) -> Result<Vec<CheckReport>, RunError> {
    let d = r.core(DoubleEval::with_minus_flip(r.n, "u", "z", 2))?;
    let reps = r.core(check_double_relations(&d))?;
    Ok(reps
        .into_iter()
        .map(|rep| {
            let name = rep.name.replace("double_yangian", "double_yangian_perturbed");
            retag(rep, &name, &[])
        })
        .collect())
}

fn pairing(r: &Resolved) -> Result<Vec<CheckReport>, RunError> {
    Ok(vec![r.core(check_pairing(r.n, r.order))?])
}

/// `[X_ij, X_kl] = δ_kj X_il - δ_il X_kj` for the level-one modes.
pub fn gl_commutator(i: usize, j: usize, k: usize, l: usize) -> NCPoly {
    let mut out = NCPoly::zero();
    if k == j {
        out = &out + &NCPoly::gen(ModeGen::t(i, l, 1));
    }
    if i == l {
        out = &out - &NCPoly::gen(ModeGen::t(k, j, 1));
    }
    out
}

fn gl_bracket(r: &Resolved) -> Result<Vec<CheckReport>, RunError> {
    let n = r.n;
    let cap = r.level.max(2);
    let rels = r.core(expand_relation(&Relation::Rtt, n, cap))?;
    let rs = r.core(derive_rules(&rels, n, cap))?;
    let params = Params::new().with("n", n).with("level_cap", cap).with("rules", rs.len());
    let witness = |row: usize, lhs: String, rhs: String| Some(Witness { row: vec![row], col: Vec::new(), lhs, rhs });
    for (idx, rel) in rels.iter().enumerate().filter(|(_, p)| p.max_level() <= cap) {
        let nf = r.core(normal_form(rel, &rs))?;
        if !nf.is_zero() {
            return Ok(vec![CheckReport::new(
                "gl_bracket",
                params,
                witness(idx + 1, format!("0 = {rel}"), nf.to_string()),
            )]);
        }
    }
    let mut pair = 0;
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                for l in 1..=n {
                    let (a, b) = (ModeGen::t(i, j, 1), ModeGen::t(k, l, 1));
                    if a <= b {
                        continue;
                    }
                    pair += 1;
                    let (ga, gb) = (NCPoly::gen(a), NCPoly::gen(b));
                    let w = &(&ga * &gb) - &(&gb * &ga);
                    let got = r.core(normal_form(&w, &rs))?;
                    let want = gl_commutator(i, j, k, l);
                    if got != want {
                        return Ok(vec![CheckReport::new(
                            "gl_bracket",
                            params,
                            witness(pair, got.to_string(), want.to_string()),
                        )]);
                    }
                }
            }
        }
    }
    Ok(vec![CheckReport::new("gl_bracket", params, None)])
}

fn twisted_embedding(r: &Resolved) -> Result<Vec<CheckReport>, RunError> {
    let t = r.transposition()?;
    Ok(vec![r.core(verify_twisted_embedding(r.n, r.level, &t))?])
}

fn character_modes(r: &Resolved) -> Result<Vec<CheckReport>, RunError> {
    let t = r.transposition()?;
    let rep = r.core(check_character_modes(r.n, r.level, &t, &r.x_matrix()?))?;
    Ok(vec![retag(rep, "character_modes", &[("x", r.x.clone())])])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn resolved(name: &str, p: CheckParams) -> Resolved {
        Resolved::new(name, &p, &Inputs::default(), &Defaults::default(), None)
    }

    #[test]
    fn names_are_unique() {
        let mut names: Vec<&str> = CHECKS.iter().map(|e| e.name).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), CHECKS.len());
    }

    #[test]
    fn small_checks_pass() {
        for name in ["ybe", "quasi_inverse", "tau_symmetry", "rtt_eval", "re_constant", "pairing", "twisted_eval"] {
            let reps =
                run_check(&resolved(name, CheckParams { n: Some(2), order: Some(3), ..Default::default() })).unwrap();
            assert!(!reps.is_empty());
            assert!(reps.iter().all(|r| r.passed), "{name}: {:?}", reps);
        }
    }

    #[test]
    fn negative_controls_fail() {
        let reps = run_check(&resolved("double_yangian_perturbed", CheckParams::default())).unwrap();
        assert!(reps.iter().any(|r| !r.passed && r.witness.is_some()));
        let p = CheckParams { x: Some("symplectic".into()), ..Default::default() };
        let reps = run_check(&resolved("characteristic_unprimed", p)).unwrap();
        assert!(reps.iter().any(|r| !r.passed));
    }

    #[test]
    fn bracket_formula_matches_rules() {
        let reps = run_check(&resolved("gl_bracket", CheckParams { level: Some(2), ..Default::default() })).unwrap();
        assert!(reps[0].passed, "{}", reps[0]);
    }

    #[test]
    fn bad_parameters_are_rejected() {
        let p = CheckParams { k: Some(1), ..Default::default() };
        assert!(matches!(run_check(&resolved("membership", p)), Err(RunError::BadParam { .. })));
        let p = CheckParams { n: Some(3), g: Some("symplectic".into()), ..Default::default() };
        assert!(matches!(run_check(&resolved("tau_symmetry", p)), Err(RunError::Core { .. })));
    }
}
