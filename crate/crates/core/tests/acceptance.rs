//! The ten acceptance criteria, one PASS/FAIL line each.

mod common;

use std::collections::BTreeMap;
use std::process::{Command, Stdio};
use std::time::Instant;

use common::{build, build_over, finite_presets};
use hopfkit::bicross::{
    distinguished_alpha_bicross, distinguished_g_bicross, order_of_antipode_bicross,
    order_of_character_bicross, order_of_grouplike_bicross, verify_right_integral,
    verify_s4_bicross, verify_window_axioms, Bicross,
};
use hopfkit::constructions::dual;
use hopfkit::hopf::{verify_axioms, HopfAlgebra};
use hopfkit::integrals::{
    analyze, chi_closed_form, chi_second_form, dual_basis_sums, nakayama_chi, trace_integrals,
    GrouplikeData, IntegralData,
};
use hopfkit::linalg::Matrix;
use hopfkit::qsl2::{self, Generator, PbwMonomial, Qsl2};
use hopfkit::radford::{
    cocommutative_integral_checks, larson_checks, mainss_battery, order_of_map, verify_s4,
};
use hopfkit::report::{Status, VerificationReport};
use hopfkit::scalar::Scalar;

type Outcome = Result<String, String>;

const WINDOW: i64 = 4;

struct Analyzed {
    name: String,
    h: HopfAlgebra,
    ints: IntegralData,
    gl: GrouplikeData,
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn clean(name: &str, r: &VerificationReport) -> Result<(), String> {
    match r.failures().next() {
        None => Ok(()),
        Some(c) => Err(format!("{name}: {c:?}")),
    }
}

fn element_cocommutative(h: &HopfAlgebra, v: &[Scalar]) -> bool {
    let d = h.comul_vec(v);
    let ab: BTreeMap<_, _> = d.terms().map(|(a, b, c)| ((a, b), c.clone())).collect();
    let ba: BTreeMap<_, _> = d.terms().map(|(a, b, c)| ((b, a), c.clone())).collect();
    ab == ba
}

fn functional_cocommutative(h: &HopfAlgebra, f: &[Scalar]) -> bool {
    let n = h.dim();
    (0..n).all(|i| {
        (0..n).all(|j| {
            let x = h.mul_vec(&h.basis_vec(i), &h.basis_vec(j));
            let y = h.mul_vec(&h.basis_vec(j), &h.basis_vec(i));
            h.pair(f, &x) == h.pair(f, &y)
        })
    })
}

fn truths(r: &VerificationReport) -> Vec<bool> {
    [
        "i-semisimple-cosemisimple",
        "ii-involutory",
        "iii-cocommutative-integral-in-H",
        "iv-antipode-contraction",
        "v-cocommutative-integral-in-Hstar",
        "vi-larson",
    ]
    .iter()
    .map(|s| r.truth_of(&format!("mainss-{s}")).unwrap_or_else(|| panic!("no truth value for {s}")))
    .collect()
}

fn criterion_1(all: &[Analyzed]) -> Outcome {
    for a in all {
        clean(&a.name, &verify_axioms(&a.h))?;
    }
    for n in 2..=3 {
        clean(&format!("bicross:{n}"), &verify_window_axioms(&Bicross::new(n).unwrap(), WINDOW))?;
    }
    let q = Qsl2::new();
    clean("qsl2", &qsl2::verify_relations(&q, 3))?;
    clean("qsl2", &qsl2::verify_axioms_qsl(&q, 3))?;
    Ok(format!("{} finite presets, bicross:2..3 |k| ≤ {WINDOW}, qsl2 degree ≤ 3", all.len()))
}

fn criterion_2(all: &[Analyzed]) -> Outcome {
    for a in all {
        let r = verify_s4(&a.h, &a.gl, 1);
        ensure(r.get("s4-formula").is_some_and(|c| c.status == Status::Pass), || {
            format!("{}: s4-formula missing or failing", a.name)
        })?;
        clean(&a.name, &r)?;
    }
    for n in 2..=3 {
        let b = Bicross::new(n).unwrap();
        let g = distinguished_g_bicross(&b, WINDOW).map_err(|e| e.to_string())?;
        let alpha = distinguished_alpha_bicross(&b, WINDOW).map_err(|e| e.to_string())?;
        clean(&format!("bicross:{n}"), &verify_s4_bicross(&b, WINDOW, &alpha, &g))?;
    }
    let q = Qsl2::new();
    let r = qsl2::verify_s4_qsl(&q, 6);
    clean("qsl2", &r)?;
    Ok(format!("{} finite presets, bicross:2..3 |k| ≤ {WINDOW}, qsl2 degree ≤ 6", all.len()))
}

fn criterion_3() -> Outcome {
    use Generator::*;
    let h = Qsl2::new();
    let f = h.field();
    let q = h.q();
    let qp = |e: i64| q.pow(e).unwrap();
    let da = h.normal_form(&[D, A]);
    let expected = (&qp(2) + &f.one()).inv().unwrap();
    ensure(h.lambda(&da) == expected, || format!("λ(da) = {}", h.lambda(&da)))?;
    let alpha = h.alpha();
    ensure(
        alpha.a == qp(-2) && alpha.d == qp(2) && alpha.b.is_zero() && alpha.c.is_zero(),
        || format!("α = {alpha:?}"),
    )?;
    for (g, s) in [(A, qp(-2)), (B, f.one()), (C, f.one()), (D, qp(2))] {
        let u = h.generator(g);
        let chi_u = u.scale(&s);
        // ⟨u⇀λ, y⟩ = λ(yu) and ⟨λ↼χ(u), y⟩ = λ(χ(u)y)
        for m in PbwMonomial::up_to_degree(6) {
            let y = h.basis(m);
            let lhs = h.lambda(&h.mul(&y, &u));
            let rhs = h.lambda(&h.mul(&chi_u, &y));
            ensure(lhs == rhs, || format!("χ({g}) at {m}: {lhs} vs {rhs}"))?;
        }
        ensure(h.chi_generator(g) == chi_u, || format!("χ({g}) = {}", h.chi_generator(g)))?;
    }
    Ok("λ(da) = 1/(q²+1), α and χ on generators, degree ≤ 6".into())
}

fn criterion_4() -> Outcome {
    for n in 2..=3u64 {
        let b = Bicross::new(n).unwrap();
        let tag = format!("bicross:{n}");
        clean(&tag, &verify_right_integral(&b, WINDOW))?;
        let nn = n as usize;
        let g = distinguished_g_bicross(&b, WINDOW).map_err(|e| e.to_string())?;
        ensure(g == b.basis(nn - 1, 0, n as i64 - 1), || format!("{tag}: g = {g}"))?;
        let alpha = distinguished_alpha_bicross(&b, WINDOW).map_err(|e| e.to_string())?;
        let oa = order_of_character_bicross(&b, &alpha.alpha, 100);
        ensure(oa.value == Some(n), || format!("{tag}: order(α) = {oa:?}"))?;
        let og = order_of_grouplike_bicross(&b, &g, 100);
        ensure(og.value.is_none() && og.bound == 100, || format!("{tag}: order(g) = {og:?}"))?;
        let os = order_of_antipode_bicross(&b, WINDOW, 100);
        ensure(os.value == Some(2 * n), || format!("{tag}: order(S) = {os:?}"))?;
    }
    Ok("n ∈ {2, 3}: Λ, g, ord α = n, ord g > 100, ord S = 2n".into())
}

fn criterion_5(all: &[Analyzed]) -> Outcome {
    for n in 2..=5u64 {
        let name = format!("taft:{n}");
        let a = all.iter().find(|a| a.name == name).expect("taft preset");
        let os = order_of_map(&a.h.antipode_power(1), 100);
        ensure(os.value == Some(2 * n), || format!("{name}: order(S) = {os:?}"))?;
        ensure(a.ints.left_h.counit().is_zero(), || format!("{name}: ε(t) ≠ 0"))?;
        let l1 = a.ints.left_hstar.eval(&a.h.one()).unwrap();
        ensure(l1.is_zero(), || format!("{name}: λ(1) = {l1}"))?;
        let r = mainss_battery(&a.h, &a.ints, &a.gl);
        ensure(truths(&r) == [false; 6], || format!("{name}: {:?}", truths(&r)))?;
        let u = r.get("mainss-unanimity").map(|c| c.status);
        ensure(u == Some(Status::Pass), || format!("{name}: unanimity {u:?}"))?;
    }
    Ok("taft:2..5 ord S = 2n, ε(t) = λ(1) = 0, all-false vector".into())
}

fn criterion_6() -> Outcome {
    let h = build_over("group:C5", "Fp:5");
    let (ints, gl) = analyze(&h).map_err(|e| e.to_string())?;
    let r = mainss_battery(&h, &ints, &gl);
    let v = truths(&r);
    ensure(v == [false, true, true, false, true, true], || format!("vector {v:?}"))?;
    let t = &ints.left_h;
    let mut s_t2_t1 = h.zero();
    for (t1, t2, c) in t.comul_terms() {
        s_t2_t1 = s_t2_t1.add(&t2.antipode_pow(1).mul(&t1).unwrap().scale(&c)).unwrap();
    }
    ensure(s_t2_t1.is_zero(), || format!("S(t₂)t₁ = {}", h.format_vec(s_t2_t1.coeffs())))?;
    let u = r.get("mainss-unanimity").map(|c| c.status);
    ensure(u == Some(Status::NotApplicable), || format!("unanimity {u:?}"))?;
    clean("kC5/F5", &r)?;
    Ok("kC₅/𝔽₅ (F,T,T,F,T,T), S(t₂)t₁ = 0, unanimity gated".into())
}

fn criterion_7() -> Outcome {
    for n in 2..=7i64 {
        let h = build(&format!("group:C{n}"));
        let tag = format!("group:C{n}");
        let id = Matrix::identity(&h.field, h.dim());
        let s = dual_basis_sums(&h, &id);
        ensure(s.r == s.t, || format!("{tag}: r ≠ t"))?;
        ensure(s.lambda == s.big_lambda, || format!("{tag}: λ ≠ Λ"))?;
        ensure(!s.t.is_zero() && !s.lambda.is_zero(), || format!("{tag}: zero sum"))?;
        ensure(element_cocommutative(&h, s.t.coeffs()), || format!("{tag}: t not cocommutative"))?;
        ensure(functional_cocommutative(&h, s.lambda.values()), || {
            format!("{tag}: λ not cocommutative")
        })?;
        let nn = h.field.from_int(n);
        let tr = h.antipode_power(2).trace();
        let l1 = s.lambda.eval(&h.one()).unwrap();
        ensure(s.t.counit() == nn && tr == nn && l1 == nn, || {
            format!("{tag}: ε(t) = {}, Tr S² = {tr}, λ(1) = {l1}", s.t.counit())
        })?;
        ensure(trace_integrals(&h).t == s.t, || format!("{tag}: trace t differs"))?;
    }
    let h = build("sweedler");
    let s = trace_integrals(&h);
    ensure(
        s.r.is_zero() && s.t.is_zero() && s.lambda.is_zero() && s.big_lambda.is_zero(),
        || "sweedler: a trace integral is nonzero".into(),
    )?;
    Ok("kCₙ n ≤ 7: r = t, λ = Λ, cocommutative, ε(t) = Tr S² = n = λ(1); sweedler 0".into())
}

fn criterion_8(all: &[Analyzed]) -> Outcome {
    let mut checks = 0;
    for a in all {
        let mut r = larson_checks(&a.h, &a.ints, &a.gl);
        r.extend(cocommutative_integral_checks(&a.h, &a.ints, &a.gl));
        checks += r.checks.len();
        if !r.all_passed() {
            return Err(format!("{}:\n{r}", a.name));
        }
    }
    Ok(format!("{checks} checks on {} presets", all.len()))
}

fn criterion_9(all: &[Analyzed]) -> Outcome {
    for a in all {
        let d = dual(&a.h).map_err(|e| e.to_string())?;
        let (di, _) = analyze(&d).map_err(|e| e.to_string())?;
        let name = &a.name;
        ensure(di.left_h.coeffs() == a.ints.left_hstar.values(), || {
            format!("{name}: left integral of H* vs λ")
        })?;
        ensure(di.right_h.coeffs() == a.ints.right_hstar.values(), || {
            format!("{name}: right integral of H* vs Λ")
        })?;
        let solved = nakayama_chi(&a.h, &a.ints).map_err(|e| e.to_string())?;
        ensure(solved == chi_closed_form(&a.h, &a.gl), || format!("{name}: χ vs first form"))?;
        ensure(solved == chi_second_form(&a.h, &a.gl), || format!("{name}: χ vs second form"))?;
    }
    Ok(format!("{} presets", all.len()))
}

fn criterion_10() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let presets = ["sweedler", "taft:3", "group:S3", "dual:taft:2", "bicross:2", "qsl2"];
    for p in presets {
        let mut docs = Vec::new();
        for run in 0..2 {
            let path = dir.path().join(format!("{}-{run}.json", p.replace(':', "_")));
            let status = Command::new(env!("CARGO_BIN_EXE_hopfkit"))
                .args(["verify", p, "all", "--json"])
                .arg(&path)
                .stdout(Stdio::null())
                .status()
                .map_err(|e| e.to_string())?;
            ensure(status.code() == Some(0), || format!("{p}: exit {status}"))?;
            docs.push(std::fs::read(&path).map_err(|e| e.to_string())?);
        }
        ensure(docs[0] == docs[1], || format!("{p}: reports differ"))?;
    }
    Ok(format!("{} presets byte-identical", presets.len()))
}

fn main() {
    let start = Instant::now();
    let all: Vec<Analyzed> = finite_presets()
        .into_iter()
        .map(|name| {
            let h = build(&name);
            let (ints, gl) = analyze(&h).unwrap_or_else(|e| panic!("{name}: {e}"));
            Analyzed { name, h, ints, gl }
        })
        .collect();
    let criteria: [(&str, &dyn Fn() -> Outcome); 10] = [
        ("axiom suite", &|| criterion_1(&all)),
        ("Radford S⁴ formula", &|| criterion_2(&all)),
        ("SL_q(2) values", &criterion_3),
        ("bicrossproduct values", &criterion_4),
        ("Taft orders and mainss vector", &|| criterion_5(&all)),
        ("kC₅ over 𝔽₅", &criterion_6),
        ("dual-basis sums", &criterion_7),
        ("equivalence batteries", &|| criterion_8(&all)),
        ("dual integrals and χ forms", &|| criterion_9(&all)),
        ("deterministic reports", &criterion_10),
    ];
    let mut failed = 0;
    for (i, (label, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = run();
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {label}: {detail} ({secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {label}: {why} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed in {:.1}s", 10 - failed, start.elapsed().as_secs_f64());
    if failed > 0 {
        std::process::exit(1);
    }
}
