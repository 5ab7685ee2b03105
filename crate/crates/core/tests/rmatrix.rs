mod common;

use common::{eval_op, flip, ident_form, on_leg, q, qi, samples, symplectic_form, transpose_leg, yang, Dense, Q};
use workbench_core::rmatrix::{breve_r_series, plain_flip, series_coefficient, yang_r, yang_r_bar};
use workbench_core::verify::{check_conjugate_re, check_quasi_inverse, check_re, check_ybe};
use workbench_core::{LaurentPoly, LegSpace, RFamily, RatMatrix, TensorOp, Transposition};

fn forms(n: usize) -> Vec<(Transposition, Vec<Vec<Q>>)> {
    let mut out = vec![(Transposition::identity(n), ident_form(n))];
    if n.is_multiple_of(2) {
        out.push((Transposition::symplectic(n).unwrap(), symplectic_form(n)));
    }
    out
}

fn inverse_form(t: &Transposition, g: &[Vec<Q>]) -> Vec<Vec<Q>> {
    if t.is_plain() {
        g.to_vec()
    } else {
        common::neg_form(g)
    }
}

#[test]
fn ybe_against_dense_points() {
    for n in 2..=4 {
        let r = yang_r(n, "u", "v").unwrap();
        assert!(check_ybe(&r).unwrap().passed);
        for (u, v, w) in samples() {
            let r12 = yang(n, 3, 0, 1, &(&u - &v));
            let r13 = yang(n, 3, 0, 2, &(&u - &w));
            let r23 = yang(n, 3, 1, 2, &(&v - &w));
            assert_eq!(Dense::prod(&[&r12, &r13, &r23]), Dense::prod(&[&r23, &r13, &r12]));
            assert_eq!(eval_op(&r, &[("u", u.clone()), ("v", v.clone())]), yang(n, 2, 0, 1, &(&u - &v)));
        }
    }
}

#[test]
fn quasi_inverse_against_dense_points() {
    for n in 2..=4 {
        let r = yang_r(n, "u", "v").unwrap();
        let (rb, zeta) = yang_r_bar(n, "u", "v").unwrap();
        assert!(check_quasi_inverse(&r, &rb, &zeta).unwrap().passed);
        for (u, v, _) in samples() {
            let x = &u - &v;
            let bar = Dense::id(n * n).scale(&x).add(&flip(n, 2, 0, 1));
            let z = &x * &x - qi(1);
            assert_eq!(yang(n, 2, 0, 1, &x).mul(&bar), Dense::id(n * n).scale(&z));
            assert_eq!(eval_op(&rb, &[("u", u.clone()), ("v", v.clone())]), bar);
        }
    }
}

#[test]
fn primes_against_dense_conjugation() {
    for n in 2..=4 {
        for (t, g) in forms(n) {
            let ginv = inverse_form(&t, &g);
            let fam = RFamily::yang(n, t.clone()).unwrap();
            assert_eq!(fam.tau_tau().unwrap(), fam.r21().unwrap());
            assert!(fam.double_prime_matches());
            assert_eq!(fam.r_prime, fam.r_prime_closed_form().unwrap());
            for (u, v, _) in samples() {
                let pt = [("u", u.clone()), ("v", v.clone())];
                let qf = transpose_leg(&flip(n, 2, 0, 1), n, 2, 0, &g, &ginv);
                let want = Dense::id(n * n).scale(&(-&u - &v)).sub(&qf);
                assert_eq!(eval_op(&fam.r_prime, &pt), want);
                // R''(u,v) = P R'(v,u) P
                let swapped = Dense::id(n * n).scale(&(-&v - &u)).sub(&qf);
                let p = flip(n, 2, 0, 1);
                assert_eq!(eval_op(&fam.r_double_prime, &pt), Dense::prod(&[&p, &swapped, &p]));
            }
        }
    }
}

#[test]
fn breve_series_cross_multiplied() {
    for k in [0u32, 1, 4, 8] {
        let b = breve_r_series(3, "u", "v", k).unwrap();
        let lhs = b.scale(&"u - v".parse::<LaurentPoly>().unwrap()).truncate_order(&["v"], k as i32);
        assert_eq!(lhs, yang_r(3, "u", "v").unwrap().truncate_order(&["v"], k as i32));
        for j in 0..=k as i32 {
            assert_eq!(series_coefficient(&b, &[("v", j), ("u", -j - 1)]).unwrap(), plain_flip(3).unwrap().neg());
        }
    }
}

fn constant(x: &RatMatrix, label: &str) -> TensorOp {
    TensorOp::from_matrix(LegSpace::aux(x.n(), label), x).unwrap()
}

fn dense_matrix(x: &RatMatrix) -> Vec<Vec<Q>> {
    (0..x.n()).map(|i| (0..x.n()).map(|j| common::to_q(x.get(i, j))).collect()).collect()
}

// Both sides of R S₁ R' S₂ = S₂ R'' S₁ R, or of its barred form, at a point.
fn dense_re(n: usize, g: &[Vec<Q>], ginv: &[Vec<Q>], x: &[Vec<Q>], u: &Q, v: &Q, bar: bool) -> bool {
    let sign = if bar { qi(1) } else { qi(-1) };
    let p = flip(n, 2, 0, 1);
    let qf = transpose_leg(&p, n, 2, 0, g, ginv);
    let r = Dense::id(n * n).scale(&(u - v)).add(&p.scale(&sign));
    let rp = Dense::id(n * n).scale(&(-u - v)).add(&qf.scale(&sign));
    let rp_swapped = Dense::id(n * n).scale(&(-v - u)).add(&qf.scale(&sign));
    let rpp = Dense::prod(&[&p, &rp_swapped, &p]);
    let s1 = on_leg(x, n, 2, 0);
    let s2 = on_leg(x, n, 2, 1);
    if bar {
        Dense::prod(&[&r, &s1, &rpp, &s2]) == Dense::prod(&[&s2, &rp, &s1, &r])
    } else {
        Dense::prod(&[&r, &s1, &rp, &s2]) == Dense::prod(&[&s2, &rpp, &s1, &r])
    }
}

#[test]
fn constant_solutions_against_dense() {
    let id2 = Transposition::identity(2);
    let cases = [
        RatMatrix::identity(2),
        RatMatrix::symplectic(2).unwrap(),
        RatMatrix::from_ints(&[&[1, 2], &[2, 3]]).unwrap(),
        RatMatrix::from_ints(&[&[0, 1], &[0, 0]]).unwrap(),
    ];
    let g = ident_form(2);
    let fam = RFamily::yang(2, id2).unwrap();
    for x in &cases {
        let got = check_re(&fam, &constant(x, "u"), &constant(x, "v")).unwrap().passed;
        let got_bar = check_conjugate_re(&fam, &constant(x, "u"), &constant(x, "v")).unwrap().passed;
        let xs = dense_matrix(x);
        let want = samples().iter().all(|(u, v, _)| dense_re(2, &g, &g, &xs, u, v, false));
        let want_bar = samples().iter().all(|(u, v, _)| dense_re(2, &g, &g, &xs, u, v, true));
        assert_eq!(got, want, "{x:?}");
        assert_eq!(got_bar, want_bar, "{x:?}");
    }
    // Verdicts fixed by the oracle: the symmetric matrix solves both forms.
    let sym = dense_matrix(&cases[2]);
    assert!(dense_re(2, &g, &g, &sym, &q(3, 2), &q(-1, 5), false));
    assert!(dense_re(2, &g, &g, &sym, &q(3, 2), &q(-1, 5), true));
}
