//! End-to-end checks against the reference computations for the Fano
//! variety of lines on a cubic fourfold, `X ⊂ Gr(2,6)` cut out by a section
//! of `Sym³U∨`, plus the Debarre–Voisin setup. Prints one line per
//! criterion; exits nonzero on any unexpected failure.

mod common;

use std::fmt::Write as _;
use std::process::ExitCode;

use bundlecalc_core::bbw::BbwResult;
use bundlecalc_core::chow::{
    chern_character, discriminant, sym2_discriminant_coefficient, total_chern, wedge_discriminant_coefficient,
    ChowClass, SchubertRing, ZeroLocusChow,
};
use bundlecalc_core::sym::plethysm_apply;
use bundlecalc_core::{
    bbw, normalize, rank, BundleExpr, Character, Functor, Grassmannian, IrrSummand, Partition, Rational, Restriction,
    Weight, ZeroLocus,
};
use common::{binomial, ch12, discriminant_from_roots, sym2_roots, wedge_roots};
use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn gr26() -> Grassmannian {
    Grassmannian::new(2, 6).unwrap()
}

fn flagship() -> ZeroLocus {
    ZeroLocus::new(gr26(), BundleExpr::sym(3, BundleExpr::U)).unwrap()
}

fn f() -> BundleExpr {
    BundleExpr::wedge(2, BundleExpr::Q)
}

fn k() -> BundleExpr {
    BundleExpr::wedge(2, f())
}

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn dims(r: &Restriction) -> Vec<u64> {
    r.table().dims().iter().map(|d| d.to_u64().unwrap()).collect()
}

fn twisted_schur(lam: &[u32], t: i64) -> BundleExpr {
    BundleExpr::schur(p(lam), BundleExpr::Q).twisted(t)
}

fn criterion_1() -> Check {
    let r = flagship().restrict_cohomology(&BundleExpr::end0(f())).map_err(|e| e.to_string())?;
    ensure!(dims(&r) == [0, 20, 1, 20, 0], "dims {:?}", dims(&r));
    match r {
        Restriction::Exact { support, .. } => {
            ensure!(support == [(1, 2), (2, 4), (3, 6)], "support {support:?}");
            Ok(())
        }
        other => Err(format!("not exact: {other:?}")),
    }
}

fn criterion_2() -> Check {
    let x = flagship();
    let end = BundleExpr::end(f());
    let r = x.restrict_cohomology(&end).map_err(|e| e.to_string())?;
    ensure!(r.is_exact(), "not exact");
    ensure!(dims(&r) == [1, 20, 2, 20, 1], "dims {:?}", dims(&r));
    let chi = x.euler_characteristic(&end).map_err(|e| e.to_string())?;
    ensure!(chi == BigInt::from(-36), "koszul euler {chi}");
    ensure!(r.table().euler() == BigInt::from(-36), "table euler {}", r.table().euler());
    let hrr = ZeroLocusChow::new(x).and_then(|z| z.hrr_euler(&end)).map_err(|e| e.to_string())?;
    ensure!(hrr == BigInt::from(-36), "hrr {hrr}");
    Ok(())
}

fn criterion_3() -> Check {
    let r = flagship().restrict_cohomology(&BundleExpr::end0(k())).map_err(|e| e.to_string())?;
    ensure!(r.is_exact(), "not exact");
    ensure!(dims(&r) == [0, 20, 190, 20, 0], "dims {:?}", dims(&r));
    let h1 = r.table().terms(1);
    let h2 = r.table().terms(2);
    ensure!(h1.len() == 1 && h1[0].multiplicity == 1, "H^1 {h1:?}");
    let mut got: Vec<(Vec<i64>, BigUint)> = h2
        .iter()
        .map(|t| {
            let shift = *t.weight.entries().last().unwrap();
            (t.weight.shifted(-shift).entries().to_vec(), t.dimension.clone())
        })
        .collect();
    got.sort();
    let expected = vec![(vec![0; 6], BigUint::from(1u32)), (vec![2, 2, 1, 1, 0, 0], BigUint::from(189u32))];
    ensure!(got == expected, "H^2 {got:?}");
    // Compare with ∧² of the Ext¹ representation. X is only SL(6)-stable,
    // so weights are compared up to a power of the determinant.
    let sl = |w: &Weight| w.shifted(-*w.entries().last().unwrap());
    let ext1 = Character::irreducible(vec![6], &h1[0].weight).map_err(|e| e.to_string())?;
    let wedge = plethysm_apply(&Functor::Wedge(2), &ext1).map_err(|e| e.to_string())?;
    let mut from_wedge: Vec<Weight> = wedge.iter().map(|(w, _)| sl(w)).collect();
    let mut from_table: Vec<Weight> = h2.iter().map(|t| sl(&t.weight)).collect();
    from_wedge.sort();
    from_table.sort();
    ensure!(from_wedge == from_table, "∧²Ext¹ {from_wedge:?} vs H² {from_table:?}");
    ensure!(BigInt::from(wedge.dimension()) == binomial(20, 2), "∧² dimension");
    Ok(())
}

fn criterion_4() -> Check {
    let x = flagship();
    for (lam, t) in [(&[2, 1, 1][..], -1), (&[3, 1][..], -1), (&[3, 3, 2][..], -2)] {
        let r = x.restrict_cohomology(&twisted_schur(lam, t)).map_err(|e| e.to_string())?;
        match r {
            Restriction::Exact { table, support } => {
                ensure!(table.is_zero() && support.is_empty(), "Σ{lam:?}Q({t}) not acyclic: {table:?}")
            }
            other => return Err(format!("Σ{lam:?}Q({t}) not exact: {other:?}")),
        }
    }
    Ok(())
}

fn criterion_5() -> Check {
    let factors = flagship().koszul_factors().map_err(|e| e.to_string())?;
    let betas = |q: usize| -> Vec<Vec<i64>> {
        let mut v: Vec<Vec<i64>> = factors[q]
            .iter()
            .inspect(|s| assert!(s.alpha.is_zero() && s.multiplicity == 1))
            .map(|s| s.beta.entries().to_vec())
            .collect();
        v.sort();
        v
    };
    ensure!(factors.len() == 5, "length {}", factors.len());
    ensure!(betas(0) == [vec![0, 0]], "q=0 {:?}", betas(0));
    ensure!(betas(1) == [vec![3, 0]], "q=1 {:?}", betas(1));
    ensure!(betas(2) == [vec![3, 3], vec![5, 1]], "q=2 {:?}", betas(2));
    ensure!(betas(3) == [vec![6, 3]], "q=3 {:?}", betas(3));
    ensure!(betas(4) == [vec![6, 6]], "q=4 {:?}", betas(4));
    Ok(())
}

fn criterion_6() -> Check {
    let g = gr26();
    let sweeps: [(&[i64; 4], [i64; 4], [i64; 4]); 2] =
        [(&[2, 2, 0, 0], [6, 5, 2, 1], [7, 6, 3, 2]), (&[2, 1, 1, 0], [6, 4, 3, 1], [7, 5, 4, 2])];
    for (alpha, first, second) in sweeps {
        for b1 in 0..=8i64 {
            for b2 in 0..=b1 {
                let s = IrrSummand::new(Weight::from(*alpha), Weight::from([b1, b2]), 1);
                let acyclic = bbw(&s, &g).map_err(|e| e.to_string())? == BbwResult::Acyclic;
                let predicted = first.contains(&b1) || second.contains(&b2);
                ensure!(acyclic == predicted, "α={alpha:?} β=({b1},{b2}): acyclic={acyclic}");
            }
        }
    }
    Ok(())
}

fn lambda_closed_form(r: u64, p: u64) -> Rational {
    Rational::new(binomial(r - 1, p) * binomial(r - 2, p - 2), BigInt::from(p - 1))
}

fn criterion_7() -> Check {
    for r in 3..=8u64 {
        for p in 2..r {
            let lam = wedge_discriminant_coefficient(r, p).map_err(|e| e.to_string())?;
            ensure!(lam == lambda_closed_form(r, p), "λ_{p}(r={r}) = {lam}");
        }
        let s = sym2_discriminant_coefficient(r).map_err(|e| e.to_string())?;
        ensure!(s == Rational::from_integer(binomial(r + 2, 2)), "sym² coefficient r={r}: {s}");
    }
    // Random integer Chern roots stand in for formal ones: the identities are
    // polynomial, so agreement on many points is strong evidence, and the
    // engine coefficients above are checked against these values.
    let mut runner = TestRunner::new(Config { cases: 200, failure_persistence: None, ..Config::default() });
    let strategy = (3usize..=8).prop_flat_map(|r| prop::collection::vec(-6i64..=6, r));
    runner
        .run(&strategy, |roots| {
            let r = roots.len() as u64;
            let delta = discriminant_from_roots(&roots);
            let (c1, two_c2, _) = ch12(&roots);
            for p in 2..r {
                let w = wedge_roots(&roots, p as usize);
                let (w1, w2, _) = ch12(&w);
                prop_assert_eq!(&w1, &(binomial(r - 1, p - 1) * &c1));
                // 2·ch₂(∧^p) = C(r−2,p−2)·ch₁² + 2·C(r−2,p−1)·ch₂
                prop_assert_eq!(&w2, &(binomial(r - 2, p - 2) * &c1 * &c1 + binomial(r - 2, p - 1) * &two_c2));
                let lhs = Rational::from_integer(discriminant_from_roots(&w));
                prop_assert_eq!(lhs, lambda_closed_form(r, p) * Rational::from_integer(delta.clone()));
            }
            prop_assert_eq!(discriminant_from_roots(&sym2_roots(&roots)), binomial(r + 2, 2) * &delta);
            for n in 1..=5usize {
                let repeated: Vec<i64> = roots.iter().copied().cycle().take(n * roots.len()).collect();
                prop_assert_eq!(discriminant_from_roots(&repeated), BigInt::from(n * n) * &delta);
            }
            Ok(())
        })
        .map_err(|e| e.to_string())?;
    // The same laws inside the Chow ring, with Q of rank r on Gr(2, r + 2).
    for r in 3..=6usize {
        let ring = SchubertRing::new(Grassmannian::new(2, r + 2).unwrap());
        let dq = discriminant(&ring, &BundleExpr::Q).map_err(|e| e.to_string())?;
        ensure!(!dq.is_zero(), "Δ(Q) vanishes on Gr(2,{})", r + 2);
        for p in 2..r {
            let dw = discriminant(&ring, &BundleExpr::wedge(p as u32, BundleExpr::Q)).map_err(|e| e.to_string())?;
            ensure!(dw == dq.scaled(&lambda_closed_form(r as u64, p as u64)), "ring Δ(∧^{p}Q), r={r}");
        }
        let ds = discriminant(&ring, &BundleExpr::sym(2, BundleExpr::Q)).map_err(|e| e.to_string())?;
        ensure!(ds == dq.scaled(&Rational::from_integer(binomial(r as u64 + 2, 2))), "ring Δ(Sym²Q), r={r}");
        for n in 1..=5usize {
            let dn = discriminant(&ring, &BundleExpr::copies(BundleExpr::Q, n)).map_err(|e| e.to_string())?;
            ensure!(dn == dq.scaled(&Rational::from_integer(BigInt::from(n * n))), "ring Δ(Q^{n}), r={r}");
        }
    }
    Ok(())
}

struct Expected {
    what: &'static str,
    basis: Basis,
    terms: Vec<(&'static str, Rational)>,
}

#[derive(Clone, Copy)]
enum Basis {
    H,
    Intrinsic,
}

/// Reference coefficients, including one that disagrees with the
/// reference h-basis form of the same class (see the report line).
fn reference() -> Vec<Expected> {
    use Basis::*;
    let e = |what, basis, terms: Vec<(&'static str, Rational)>| Expected { what, basis, terms };
    vec![
        e("ch(F)", H, vec![("1", q(6, 1)), ("h", q(3, 1)), ("h^2", q(3, 2)), ("h2", q(-2, 1)), ("h3", q(-1, 2)), ("h*h3", q(-1, 6))]),
        e("c(F)", H, vec![("1", q(1, 1)), ("h", q(3, 1)), ("h^2", q(3, 1)), ("h2", q(2, 1)), ("h3", q(20, 1)), ("h*h3", q(21, 2))]),
        e("ch(K)", H, vec![("1", q(15, 1)), ("h", q(15, 1)), ("h^2", q(21, 2)), ("h2", q(-8, 1)), ("h3", q(5, 1)), ("h*h3", q(1, 12))]),
        e("c(K)", H, vec![("1", q(1, 1)), ("h", q(15, 1)), ("h^2", q(102, 1)), ("h2", q(8, 1)), ("h3", q(2860, 1)), ("h*h3", q(8985, 1))]),
        e("ch(F)", Intrinsic, vec![("1", q(6, 1)), ("h", q(3, 1)), ("h^2", q(3, 4)), ("c2(X)", q(-1, 4)), ("h*c2(X)", q(-1, 20)), ("c4(X)", q(-1, 108))]),
        e("c(F)", Intrinsic, vec![("1", q(1, 1)), ("h", q(3, 1)), ("h^2", q(15, 4)), ("c2(X)", q(1, 4)), ("h*c2(X)", q(2, 1)), ("c4(X)", q(7, 12))]),
        e("ch(K)", Intrinsic, vec![("1", q(15, 1)), ("h", q(15, 1)), ("h^2", q(15, 2)), ("c2(X)", q(-1, 1)), ("h*c2(X)", q(1, 2)), ("c4(X)", q(1, 216))]),
        e("c(K)", Intrinsic, vec![("1", q(1, 1)), ("h", q(15, 1)), ("h^2", q(105, 1)), ("c2(X)", q(1, 1)), ("h*c2(X)", q(286, 1)), ("c4(X)", q(2995, 1))]),
    ]
}

fn criterion_8() -> (Check, Vec<String>) {
    let mut mismatches = Vec::new();
    let result = (|| -> Check {
        let z = ZeroLocusChow::new(flagship()).map_err(|e| e.to_string())?;
        let ring = z.ring();
        let h = z.h();
        ensure!(z.integrate(&ring.pow(&h, 4)) == q(108, 1), "∫h⁴");
        let c2 = z.to_h_basis(&z.c2x()).map_err(|e| e.to_string())?;
        ensure!(c2.coefficient("h^2") == q(-3, 1) && c2.coefficient("h2") == q(8, 1) && c2.terms.len() == 2, "c2(X) = {c2}");
        let c2h = z.to_h_basis(&ring.mul(&z.c2x(), &h)).map_err(|e| e.to_string())?;
        ensure!(c2h.coefficient("h3") == q(10, 1) && c2h.terms.len() == 1, "c2(X)h = {c2h}");
        let c4 = z.to_h_basis(&z.c4x()).map_err(|e| e.to_string())?;
        ensure!(c4.coefficient("h*h3") == q(18, 1) && c4.terms.len() == 1, "c4(X) = {c4}");
        for exp in reference() {
            let expr = if exp.what.ends_with("(F)") { f() } else { k() };
            let class = if exp.what.starts_with("ch") {
                chern_character(ring, &expr, 8)
            } else {
                total_chern(ring, &expr, 8)
            }
            .map_err(|e| e.to_string())?;
            let expansion = match exp.basis {
                Basis::H => z.to_h_basis(&class),
                Basis::Intrinsic => z.to_intrinsic_basis(&class),
            }
            .map_err(|e| e.to_string())?;
            let basis = match exp.basis {
                Basis::H => "h-basis",
                Basis::Intrinsic => "intrinsic",
            };
            for (label, value) in &exp.terms {
                let got = expansion.coefficient(label);
                if &got != value {
                    mismatches.push(format!("{} {basis} [{label}]: expected {value}, computed {got}", exp.what));
                }
            }
            let labels: Vec<&str> = exp.terms.iter().map(|(l, _)| *l).collect();
            for t in &expansion.terms {
                ensure!(labels.contains(&t.label.as_str()), "{} {basis}: unexpected term {}", exp.what, t.label);
            }
        }
        Ok(())
    })();
    (result, mismatches)
}

fn criterion_9() -> Check {
    let z = ZeroLocusChow::new(flagship()).map_err(|e| e.to_string())?;
    let mut lambdas = Vec::new();
    for e in [BundleExpr::Q, f(), k()] {
        let cert = z.modularity_check(&e).map_err(|err| err.to_string())?;
        ensure!(cert.certified, "{e} not certified");
        lambdas.push(cert.lambda);
    }
    ensure!(&lambdas[1] / &lambdas[0] == q(3, 1), "λ(∧²Q)/λ(Q) = {}", &lambdas[1] / &lambdas[0]);
    ensure!(&lambdas[2] / &lambdas[0] == q(30, 1), "λ(K)/λ(Q) = {}", &lambdas[2] / &lambdas[0]);
    Ok(())
}

fn criterion_10() -> Check {
    let ring = SchubertRing::new(gr26());
    ensure!(ring.integrate(&ring.pow(&ring.h(), 8)) == q(14, 1), "∫σ₁⁸");
    let point = ring.point();
    for d in 0..=8u64 {
        for a in ring.basis(d) {
            for b in ring.basis(8 - d) {
                let pairing = ring.integrate(&ring.mul(&ChowClass::sigma(a.clone()), &ChowClass::sigma(b.clone())));
                let dual = a.complement(2, 4).as_ref() == Some(&b);
                let expected = if dual { q(1, 1) } else { q(0, 1) };
                ensure!(pairing == expected, "σ{a}·σ{b} = {pairing}");
            }
        }
    }
    ensure!(point == p(&[4, 4]), "point class {point}");
    let x = flagship();
    let z = ZeroLocusChow::new(x.clone()).map_err(|e| e.to_string())?;
    ensure!(z.integrate(&z.c4x()) == q(324, 1), "∫c₄(X)");
    ensure!(z.hrr_euler(&BundleExpr::Line(0)).map_err(|e| e.to_string())? == BigInt::from(3), "χ(O_X) by HRR");
    let r = x.restrict_cohomology(&BundleExpr::Line(0)).map_err(|e| e.to_string())?;
    ensure!(r.is_exact() && dims(&r) == [1, 0, 1, 0, 1], "h^(0,•) {:?}", dims(&r));
    Ok(())
}

fn criterion_11() -> Check {
    let g = gr26();
    let w2k = normalize(&BundleExpr::wedge(2, k()), &g).map_err(|e| e.to_string())?;
    let mut with_det: Vec<Vec<i64>> = w2k
        .iter()
        .map(|s| {
            assert_eq!(s.multiplicity, 1);
            s.alpha.shifted(-s.beta.entries()[0]).entries().to_vec()
        })
        .collect();
    with_det.sort();
    ensure!(with_det == [vec![3, 2, 2, 1], vec![3, 3, 2, 0], vec![4, 2, 1, 1]], "∧²K = {with_det:?}");
    ensure!(rank(&BundleExpr::wedge(2, k()), &g) == BigUint::from(105u32), "rank ∧²K");
    let s22 = BundleExpr::schur(p(&[2, 2]), BundleExpr::Q);
    let r = flagship().restrict_cohomology(&BundleExpr::end(s22)).map_err(|e| e.to_string())?;
    ensure!(r.is_exact(), "not exact");
    ensure!(dims(&r) == [1, 20, 590, 20, 1], "ext {:?}", dims(&r));
    Ok(())
}

fn criterion_12() -> Check {
    let g = Grassmannian::new(6, 10).map_err(|e| e.to_string())?;
    let conormal = BundleExpr::wedge(3, BundleExpr::U);
    ensure!(rank(&conormal, &g) == BigUint::from(20u32), "rank");
    let x = ZeroLocus::new(g, conormal).map_err(|e| e.to_string())?;
    ensure!(x.codim() == 20 && x.dimension() == 4 && x.koszul_length() == 21, "codim/dim/length");
    let factors = x.koszul_factors().map_err(|e| e.to_string())?;
    ensure!(factors.len() == 21, "factor count");
    for (q, f) in factors.iter().enumerate() {
        let total: BigUint = f.iter().map(|s| s.rank() * s.multiplicity).sum();
        ensure!(BigInt::from(total) == binomial(20, q as u64), "rank of ∧^{q}N∨");
    }
    // Not required, but cheap: the structure sheaf and the degree.
    let r = x.restrict_cohomology(&BundleExpr::Line(0)).map_err(|e| e.to_string())?;
    ensure!(r.is_exact() && dims(&r) == [1, 0, 1, 0, 1], "h^(0,•) {:?}", dims(&r));
    let z = ZeroLocusChow::new(x).map_err(|e| e.to_string())?;
    ensure!(z.degree() == q(1452, 1), "degree {}", z.degree());
    Ok(())
}

fn main() -> ExitCode {
    let mut report = String::new();
    let mut unexpected = 0;
    let plain: [(u32, fn() -> Check); 11] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (9, criterion_9),
        (10, criterion_10),
        (11, criterion_11),
        (12, criterion_12),
    ];
    let mut lines: Vec<(u32, String)> = Vec::new();
    for (n, check) in plain {
        match check() {
            Ok(()) => lines.push((n, format!("criterion {n}: PASS"))),
            Err(e) => {
                unexpected += 1;
                lines.push((n, format!("criterion {n}: FAIL ({e})")));
            }
        }
    }
    let (result, mismatches) = criterion_8();
    let line = match (&result, mismatches.as_slice()) {
        (Ok(()), []) => "criterion 8: PASS".to_string(),
        (Ok(()), [only]) if only.starts_with("c(K) intrinsic [c4(X)]: expected 2995, computed 2995/6") => {
            // The reference h-basis form 8985·h·h₃ with ∫h·h₃ = 18 and
            // ∫c₄(X) = 324 forces 8985/18 = 2995/6.
            format!("criterion 8: FAIL ({only}; the reference h-basis coefficient 8985 implies 2995/6)")
        }
        (Ok(()), many) => {
            unexpected += 1;
            format!("criterion 8: FAIL ({})", many.join("; "))
        }
        (Err(e), _) => {
            unexpected += 1;
            format!("criterion 8: FAIL ({e})")
        }
    };
    lines.push((8, line));
    lines.sort_by_key(|(n, _)| *n);
    for (_, l) in &lines {
        let _ = writeln!(report, "{l}");
    }
    print!("{report}");
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
