//! Sweedler's algebra and the Taft algebras checked against the word model in
//! `common::oracle`.

mod common;

use common::oracle::{self, Tables};
use common::{build, idx};
use hopfkit::constructions::{sweedler, taft};
use hopfkit::hopf::HopfAlgebra;
use hopfkit::integrals::{self, analyze, nakayama_chi, nakayama_omega};
use hopfkit::linalg::Matrix;
use hopfkit::radford::{self, order_of_character, order_of_grouplike, order_of_map};
use hopfkit::scalar::{FieldSpec, Scalar};

fn sweedler_model() -> Tables {
    let f = FieldSpec::rationals();
    oracle::taft(2, &f, &f.from_int(-1), "g")
}

fn taft_model(n: usize) -> (HopfAlgebra, Tables) {
    let h = taft(n as u64).unwrap();
    let q = h.field.generator().unwrap();
    let m = oracle::taft(n, &h.field, &q, "c");
    (h, m)
}

fn qpow(q: &Scalar, e: i64) -> Scalar {
    q.pow(e).unwrap()
}

#[test]
fn structure_tables_agree_with_word_model() {
    sweedler_model().assert_matches(&sweedler());
    for n in 2..=5 {
        let (h, m) = taft_model(n);
        m.assert_matches(&h);
    }
}

#[test]
fn taft_two_is_sweedler_up_to_the_name_of_the_grouplike() {
    let t2 = taft(2).unwrap();
    let s = sweedler();
    assert_eq!(t2.dim(), s.dim());
    // Same tables once c is read as g and ζ₂ as −1.
    let m = sweedler_model();
    for i in 0..4 {
        for j in 0..4 {
            let lhs = t2.mul_vec(&t2.basis_vec(i), &t2.basis_vec(j));
            let rhs = m.mul(&m.basis(i), &m.basis(j));
            let as_rational: Vec<Scalar> = lhs.iter().map(|c| s.field.from_rational(&c.as_rational().unwrap()).unwrap()).collect();
            assert_eq!(as_rational, rhs);
        }
    }
}

#[test]
fn sweedler_relations() {
    let h = sweedler();
    let m = sweedler_model();
    let x = h.basis_named("x").unwrap();
    let g = h.basis_named("g").unwrap();
    let gx = h.basis_named("gx").unwrap();
    // xg = −gx
    assert_eq!(x.mul(&g).unwrap(), gx.scale(&h.field.from_int(-1)));
    assert_eq!(m.mul(&m.named("x"), &m.named("g")), oracle::scale(&m.named("gx"), &h.field.from_int(-1)));
    // S²(x) = −x
    assert_eq!(x.antipode_pow(2), x.scale(&h.field.from_int(-1)));
    assert_eq!(m.antipode_pow(&m.named("x"), 2), oracle::scale(&m.named("x"), &h.field.from_int(-1)));
    // S(1) = 1 for every power
    for k in -3..=3 {
        assert_eq!(h.one().antipode_pow(k), h.one());
    }
}

#[test]
fn integrals_match_the_nullspace_oracle() {
    let mut cases = vec![(sweedler(), sweedler_model())];
    cases.extend((2..=5).map(taft_model));
    for (h, m) in cases {
        let (ints, _) = analyze(&h).unwrap();
        assert_eq!(ints.left_h.coeffs(), m.integral(true).as_slice(), "left t");
        assert_eq!(ints.right_h.coeffs(), m.integral(false).as_slice(), "right T");
        assert_eq!(ints.left_hstar.values(), m.integral_functional(true).as_slice(), "λ");
        assert_eq!(ints.right_hstar.values(), m.integral_functional(false).as_slice(), "Λ");
    }
}

#[test]
fn sweedler_integrals_in_coordinates() {
    let h = sweedler();
    let m = sweedler_model();
    let (ints, gl) = analyze(&h).unwrap();
    let t = oracle::add(&m.named("x"), &m.named("gx"));
    assert_eq!(ints.left_h.coeffs(), t.as_slice());
    // g·t = t and x·t = 0
    assert_eq!(m.mul(&m.named("g"), &t), t);
    assert_eq!(m.mul(&m.named("x"), &t), m.zero());
    // λ = p_gx
    assert_eq!(ints.left_hstar.values(), m.named("gx").as_slice());
    // α(g) = −1, α(x) = 0 from (x + gx)·g = −(x + gx)
    assert_eq!(m.mul(&t, &m.named("g")), oracle::scale(&t, &h.field.from_int(-1)));
    assert_eq!(gl.alpha.values()[idx(&h, "g")], h.field.from_int(-1));
    assert_eq!(gl.alpha.values()[idx(&h, "x")], h.field.zero());
    // g is the grouplike generator
    assert_eq!(gl.g, h.basis_named("g").unwrap());
}

#[test]
fn sweedler_harpoons_and_convolution() {
    let h = sweedler();
    let m = sweedler_model();
    let (_, gl) = analyze(&h).unwrap();
    let alpha = |i: usize| gl.alpha.values()[i].clone();
    let x = h.basis_named("x").unwrap();
    // α⇀x = x, x↼α = −x
    assert_eq!(gl.alpha.hit_left(&x).unwrap(), x);
    assert_eq!(x.hit_right(&gl.alpha).unwrap(), x.scale(&h.field.from_int(-1)));
    assert_eq!(m.hit_left(&alpha, &m.named("x")), m.named("x"));
    assert_eq!(m.hit_right(&m.named("x"), &alpha), oracle::scale(&m.named("x"), &h.field.from_int(-1)));
    // ε⇀h = h
    let eps = h.counit_functional();
    for i in 0..h.dim() {
        assert_eq!(eps.hit_left(&h.basis(i)).unwrap(), h.basis(i));
    }
    // α·α = ε
    assert_eq!(gl.alpha.convolve(&gl.alpha).unwrap(), eps);
}

#[test]
fn taft_alpha_and_g() {
    for n in 2..=5 {
        let (h, m) = taft_model(n);
        let q = h.field.generator().unwrap();
        let (ints, gl) = analyze(&h).unwrap();
        let t = ints.left_h.coeffs().to_vec();
        // t·c = q⁻¹t
        assert_eq!(m.mul(&t, &m.named("c")), oracle::scale(&t, &qpow(&q, -1)));
        assert_eq!(gl.alpha.values()[idx(&h, "c")], qpow(&q, -1), "α(c), n = {n}");
        assert_eq!(gl.alpha.values()[idx(&h, "x")], h.field.zero());
        // h₁Λ(h₂) at h = x^(n−1) is Λ(h)·g with Λ = p_(x^(n−1))
        let top = common::taft_name("c", 0, n - 1);
        let lam = m.named(&top);
        let lam_f = |i: usize| lam[i].clone();
        let g = m.hit_left(&lam_f, &m.named(&top));
        assert_eq!(g, m.named(&common::taft_name("c", n - 1, 0)));
        assert_eq!(gl.g.coeffs(), g.as_slice(), "g, n = {n}");
        assert_eq!(order_of_character(&gl.alpha, 100).value, Some(n as u64));
        assert_eq!(order_of_grouplike(&gl.g, 100).value, Some(n as u64));
    }
}

/// Order of S computed by iterating the word model's antipode on every basis element.
fn model_antipode_order(m: &Tables) -> usize {
    (1..100)
        .find(|&k| (0..m.dim()).all(|i| m.antipode_pow(&m.basis(i), k) == m.basis(i)))
        .unwrap()
}

#[test]
fn antipode_orders() {
    let h = sweedler();
    let m = sweedler_model();
    let s2 = h.antipode_power(2);
    assert_eq!(order_of_map(&h.antipode_power(1), 100).value, Some(4));
    assert_eq!(order_of_map(&s2, 100).value, Some(2));
    assert_eq!(model_antipode_order(&m), 4);
    // S² = diag(1, 1, −1, −1)
    for (i, sign) in [1, 1, -1, -1].into_iter().enumerate() {
        assert_eq!(s2.column(i), oracle::scale(&m.basis(i), &h.field.from_int(sign)));
    }
    for n in 2..=5 {
        let (h, m) = taft_model(n);
        assert_eq!(order_of_map(&h.antipode_power(1), 1000).value, Some(2 * n as u64));
        assert_eq!(model_antipode_order(&m), 2 * n);
    }
}

#[test]
fn s4_formula_against_the_word_model() {
    // S⁴(h) = g(α⇀h↼α⁻¹)g⁻¹ with α(cⁱxʲ) = q⁻ⁱδⱼ₀ and g = c^(n−1)
    for n in 2..=5 {
        let (h, m) = taft_model(n);
        let q = h.field.generator().unwrap();
        let alpha = |i: usize| {
            let (a, b) = (i % n, i / n);
            if b == 0 { qpow(&q, -(a as i64)) } else { h.field.zero() }
        };
        let alpha_inv = |i: usize| {
            let (a, b) = (i % n, i / n);
            if b == 0 { qpow(&q, a as i64) } else { h.field.zero() }
        };
        let g = m.named(&common::taft_name("c", n - 1, 0));
        let g_inv = m.named("c");
        for i in 0..m.dim() {
            let x = m.basis(i);
            let lhs = m.antipode_pow(&x, 4);
            let mid = m.hit_right(&m.hit_left(&alpha, &x), &alpha_inv);
            let rhs = m.mul(&m.mul(&g, &mid), &g_inv);
            assert_eq!(lhs, rhs, "n = {n}, h = {}", m.names[i]);
        }
        let (_, gl) = analyze(&h).unwrap();
        assert!(radford::verify_s4(&h, &gl, 4).all_passed());
    }
}

#[test]
fn sweedler_s4_at_x() {
    let h = sweedler();
    let (_, gl) = analyze(&h).unwrap();
    let x = h.basis_named("x").unwrap();
    assert_eq!(x.antipode_pow(4), x);
    let inner = gl.alpha.hit_left(&x).unwrap().hit_right(&gl.alpha_inv).unwrap();
    assert_eq!(inner, x.scale(&h.field.from_int(-1)));
    let rhs = gl.g.mul(&inner).unwrap().mul(&gl.g_inv).unwrap();
    assert_eq!(rhs, x);
}

#[test]
fn nakayama_against_its_definition() {
    // λ(xy) = λ(χ(y)x) and χ(h) = α(h₂)S⁻²(h₁), checked with the word model.
    let mut cases = vec![(sweedler(), sweedler_model(), 2)];
    cases.extend((2..=5).map(|n| {
        let (h, m) = taft_model(n);
        (h, m, n)
    }));
    for (h, m, n) in cases {
        let (ints, gl) = analyze(&h).unwrap();
        let chi = nakayama_chi(&h, &ints).unwrap();
        let lam = ints.left_hstar.values();
        let alpha = |i: usize| gl.alpha.values()[i].clone();
        for y in 0..m.dim() {
            let chi_y = chi.column(y);
            for x in 0..m.dim() {
                let lhs = oracle::pair(lam, &m.mul(&m.basis(x), &m.basis(y)));
                let rhs = oracle::pair(lam, &m.mul(&chi_y, &m.basis(x)));
                assert_eq!(lhs, rhs, "λ(xy) vs λ(χ(y)x) at ({}, {})", m.names[x], m.names[y]);
            }
            // S⁻² = S^(2n−2) since S has order 2n
            let twisted: Vec<Scalar> = m.antipode_pow(&m.hit_left(&alpha, &m.basis(y)), 2 * n - 2);
            assert_eq!(chi_y, twisted, "χ({})", m.names[y]);
        }
    }
    let h = sweedler();
    let (ints, _) = analyze(&h).unwrap();
    let chi = nakayama_chi(&h, &ints).unwrap();
    let minus = |name: &str| h.basis_named(name).unwrap().scale(&h.field.from_int(-1));
    assert_eq!(chi.column(idx(&h, "g")), minus("g").coeffs());
    assert_eq!(chi.column(idx(&h, "x")), minus("x").coeffs());
}

#[test]
fn omega_is_conjugate_of_chi() {
    let h = sweedler();
    let (ints, gl) = analyze(&h).unwrap();
    let chi = nakayama_chi(&h, &ints).unwrap();
    let omega = nakayama_omega(&h, &ints).unwrap();
    assert_eq!(omega, h.antipode_power(-1).mul(&chi).mul(&h.antipode_power(1)));
    // (ε∘Ω)(g) = −1 = α⁻¹(g)
    let eps_omega = h.counit_functional().values().to_vec();
    let eps_omega = omega.transpose().apply(&eps_omega);
    assert_eq!(eps_omega[idx(&h, "g")], h.field.from_int(-1));
    assert_eq!(eps_omega, gl.alpha_inv.values());
}

#[test]
fn lemma_and_sstarlambda_batteries() {
    for name in ["sweedler", "group:C3", "taft:3"] {
        let h = build(name);
        let (ints, gl) = analyze(&h).unwrap();
        let r = integrals::verify_lemma21(&h, &ints, &gl).unwrap();
        assert!(r.all_passed(), "{name}\n{r}");
    }
    for name in ["group:C2", "sweedler", "dual:taft:3"] {
        let h = build(name);
        let (ints, gl) = analyze(&h).unwrap();
        let r = integrals::verify_sstarlambda(&h, &ints, &gl);
        assert!(r.all_passed(), "{name}\n{r}");
    }
}

/// Rank of `f ↦ f⇀l` built from the word model's coproduct.
fn hit_rank(m: &Tables, l: &[Scalar]) -> usize {
    let cols: Vec<Vec<Scalar>> = (0..m.dim())
        .map(|i| {
            let f = |k: usize| if k == i { m.field.one() } else { m.field.zero() };
            m.hit_left(&f, l)
        })
        .collect();
    Matrix::from_columns(&m.field, m.dim(), &cols).rank()
}

#[test]
fn bijections_from_integrals() {
    let h = sweedler();
    let m = sweedler_model();
    let (ints, _) = analyze(&h).unwrap();
    assert_eq!(hit_rank(&m, ints.left_h.coeffs()), 4);
    assert!(integrals::verify_bijections(&h, &ints.left_h).all_passed());
    assert_eq!(hit_rank(&m, &m.zero()), 0);
    assert!(!integrals::verify_bijections(&h, &h.zero()).all_passed());
}

#[test]
fn dual_taft_g_has_order_n() {
    for n in 2..=4 {
        let h = build(&format!("dual:taft:{n}"));
        let (_, gl) = analyze(&h).unwrap();
        assert_eq!(order_of_grouplike(&gl.g, 100).value, Some(n));
    }
}

#[test]
fn sweedler_equivalence_batteries() {
    let h = sweedler();
    let m = sweedler_model();
    let r = radford::run_battery(&h, radford::Battery::Mainss, None).unwrap();
    assert!(r.all_passed(), "{r}");
    for name in [
        "lambda-cocommutative",
        "involutory",
        "alpha-is-counit",
        "t-cocommutative",
        "g-is-one",
        "larson-i-cosemisimple-and-involutory",
        "larson-ii-lambda-S-h2-h1",
        "larson-iii-lambda-h2-S-h1",
        "larson-iv-cosemisimple-cocommutative",
        "mainss-i-semisimple-cosemisimple",
        "mainss-ii-involutory",
        "mainss-iii-cocommutative-integral-in-H",
        "mainss-iv-antipode-contraction",
        "mainss-v-cocommutative-integral-in-Hstar",
        "mainss-vi-larson",
    ] {
        assert_eq!(r.truth_of(&format!("mainss/{name}")), Some(false), "{name}");
    }
    assert_eq!(r.get("mainss/mainss-unanimity").unwrap().detail.as_deref(), Some("(F,F,F,F,F,F)"));
    assert_eq!(r.get("mainss/cor37").unwrap().status, hopfkit::report::Status::NotApplicable);

    // S(t₂)t₁ = 4x and t₂S(t₁) = 0 for t = x + gx.
    let t = oracle::add(&m.named("x"), &m.named("gx"));
    let mut s_t2_t1 = m.zero();
    let mut t2_s_t1 = m.zero();
    for ((l, r), c) in m.comul(&t) {
        let a = m.mul(&m.antipode(&m.basis(r)), &m.basis(l));
        let b = m.mul(&m.basis(r), &m.antipode(&m.basis(l)));
        s_t2_t1 = oracle::add(&s_t2_t1, &oracle::scale(&a, &c));
        t2_s_t1 = oracle::add(&t2_s_t1, &oracle::scale(&b, &c));
    }
    assert_eq!(s_t2_t1, oracle::scale(&m.named("x"), &h.field.from_int(4)));
    assert_eq!(t2_s_t1, m.zero());
    let detail = r.get("mainss/mainss-S-t2-t1").unwrap().detail.clone().unwrap();
    assert_eq!(detail, format!("S(t₂)t₁ = {}", h.format_vec(&s_t2_t1)));
}

#[test]
fn sweedler_trace_integrals_vanish() {
    let h = sweedler();
    let m = sweedler_model();
    let trace_s2: Scalar = (0..4).fold(h.field.zero(), |acc, i| acc + m.antipode_pow(&m.basis(i), 2)[i].clone());
    assert!(trace_s2.is_zero());
    let sums = integrals::trace_integrals(&h);
    assert!(sums.r.is_zero());
    assert!(sums.t.is_zero());
    assert!(sums.lambda.is_zero());
    assert!(sums.big_lambda.is_zero());
}
