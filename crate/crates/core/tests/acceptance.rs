//! One line per acceptance criterion; exits nonzero if any fails.

use std::collections::HashSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use movcone::compare::{self, CompareReport};
use movcone::cones::{brute_force_rays, dual_rays, halfspaces_from_rays, minimal_generators, rays_from_halfspaces};
use movcone::kapranov::{self, basis_product, BasisLabel};
use movcone::toric::kapranov_fan;
use movcone::{Cones, KapranovSpace, RatVector, ToricDivisorClass, ToricVariety, Variety, Verdict};
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

mod common;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn ints(v: &RatVector) -> Vec<i64> {
    v.entries().iter().map(|x| x.to_integer().try_into().unwrap()).collect()
}

struct X5 {
    variety: Variety,
    cones: Cones,
    report: CompareReport,
}

fn x5() -> X5 {
    let variety = Variety::builtin("m06").unwrap();
    let (cones, report) = variety.run().unwrap();
    X5 { variety, cones, report }
}

fn criterion_1(x5: &X5) -> Outcome {
    for r in 1..=4 {
        let (_, report) = Variety::builtin(&format!("x{r}"))
            .unwrap()
            .run()
            .map_err(|e| e.to_string())?;
        ensure(report.verdict == Verdict::Equal, format!("x{r} is not equal"))?;
        ensure(report.not_eq.is_empty(), format!("x{r} has NotEq rays"))?;
    }
    let rep = &x5.report;
    ensure(rep.verdict == Verdict::Strict, "x5 is not strict")?;
    ensure(!rep.not_eq.is_empty(), "x5 NotEq is empty")?;

    // NotEq again, from products computed with the test-side table.
    let sp = common::sparse(&common::table(5));
    let nef: Vec<Vec<i64>> = x5.cones.nef_rays.iter().map(|r| r.to_i64s().unwrap()).collect();
    let mut products = HashSet::new();
    for i in 0..nef.len() {
        for j in i..nef.len() {
            if let Some(p) = common::primitive_product(&sp, &nef[i], &nef[j]) {
                products.insert(p);
            }
        }
    }
    let not_eq: Vec<_> = x5
        .cones
        .mov_rays
        .iter()
        .filter(|g| !products.contains(&g.to_i64s().unwrap()))
        .cloned()
        .collect();
    ensure(not_eq == rep.not_eq, "NotEq differs from the independent rescan")?;
    ensure(products.len() == rep.generators.len(), "generator counts differ")?;

    let step = (rep.certificates.len() / 16).max(1);
    let sample: Vec<_> = rep.certificates.iter().step_by(step).collect();
    ensure(
        sample.iter().all(|c| c.holds(&rep.generators)),
        "a separating certificate fails",
    )?;
    ensure(rep.certificates.len() == rep.not_eq.len(), "missing certificates")?;

    Ok(format!(
        "x1..x4 equal; x5 strict: nef {} mov {} products {} NotEq {} ({} certificates checked)",
        rep.nef_rays.len(),
        rep.mov_rays.len(),
        rep.generators.len(),
        rep.not_eq.len(),
        sample.len()
    ))
}

fn criterion_2() -> Outcome {
    let v = ToricVariety::new(common::y2_fan(), None).map_err(|e| e.to_string())?;
    ensure(v.basis() == [3, 4, 5], "basis is not D3, D4, D5")?;
    let walls: &[((usize, usize), [i64; 3])] = &[
        ((0, 1), [0, 1, 0]),
        ((1, 2), [0, 1, 0]),
        ((1, 4), [0, 1, 0]),
        ((2, 5), [0, 1, 0]),
        ((0, 2), [0, 0, 1]),
        ((2, 4), [0, -1, 1]),
        ((0, 3), [-1, 1, 1]),
        ((3, 4), [-1, 1, 1]),
        ((3, 5), [-1, 1, 1]),
        ((0, 5), [1, 0, -1]),
        ((4, 5), [1, 0, -1]),
        ((0, 4), [1, -1, 0]),
    ];
    ensure(v.walls().len() == walls.len(), "wall count")?;
    for &((a, b), c) in walls {
        let w = v.wall(a, b).ok_or(format!("no wall ({a},{b})"))?;
        ensure(ints(v.wall_curve_class(w).coords()) == c, format!("wall ({a},{b})"))?;
    }
    let primes = [
        ((3, 3), [1, -1, -1]),
        ((4, 4), [1, -2, 0]),
        ((5, 5), [1, -1, -1]),
        ((3, 4), [-1, 1, 1]),
        ((3, 5), [-1, 1, 1]),
        ((4, 5), [1, 0, -1]),
    ];
    for ((i, j), c) in primes {
        ensure(ints(v.prime_product(i, j).coords()) == c, format!("D{i} D{j}"))?;
    }
    let d = |c: [i64; 3]| ToricDivisorClass::new(RatVector::from_ints(&c));
    let eta = [d([1, 0, 1]), d([2, 1, 1]), d([1, 1, 1])];
    let etas = [
        ((0, 0), [0, 0, 0]),
        ((1, 1), [0, 1, 1]),
        ((2, 2), [1, 0, 0]),
        ((0, 1), [0, 1, 0]),
        ((0, 2), [0, 1, 0]),
        ((1, 2), [0, 1, 1]),
    ];
    for ((i, j), c) in etas {
        ensure(
            ints(v.class_product(&eta[i], &eta[j]).coords()) == c,
            format!("eta{} eta{}", i + 1, j + 1),
        )?;
    }

    let variety = Variety::toric("y2", v);
    let (cones, report) = variety.run().map_err(|e| e.to_string())?;
    let orthant = common::rays(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]);
    ensure(cones.eff_rays == orthant, "Eff")?;
    ensure(cones.mov_rays == orthant, "Mov")?;
    ensure(
        cones.nef_rays == common::rays(&[&[1, 0, 1], &[1, 1, 1], &[2, 1, 1]]),
        "Nef",
    )?;
    ensure(report.not_eq == common::rays(&[&[0, 0, 1]]), "NotEq")?;
    ensure(report.verdict == Verdict::Strict, "verdict")?;
    Ok("12 walls, 6 prime products, 6 nef products, NotEq {(0,0,1)}".into())
}

fn criterion_3() -> Outcome {
    use BasisLabel::*;
    let s = KapranovSpace::new(5).unwrap();
    let mut checked = 0;
    let mut check = |a: BasisLabel, b: BasisLabel, want: &[(BasisLabel, i64)]| -> Result<(), String> {
        let want = s.curve(want);
        for (x, y) in [(a, b), (b, a)] {
            ensure(basis_product(s, x, y) == want, format!("{x:?} . {y:?}"))?;
        }
        checked += 1;
        Ok(())
    };
    check(H, H, &[(H, 1)])?;
    for i in 1..=5u8 {
        check(H, E(i), &[])?;
        check(E(i), E(i), &[(E(i), 1)])?;
        for j in 1..=5u8 {
            if i != j {
                check(E(i), E(j), &[])?;
            }
            for k in j + 1..=5 {
                let jk = BasisLabel::pair(j, k);
                if i == 1 {
                    check(H, jk, &[(jk, -1)])?;
                    check(jk, jk, &[(jk, 2), (H, -1), (E(j), -1), (E(k), -1)])?;
                }
                if i == j || i == k {
                    check(E(i), jk, &[(jk, -1)])?;
                } else {
                    check(E(i), jk, &[])?;
                }
            }
        }
    }
    let pairs: Vec<(u8, u8)> = (1..=5u8).flat_map(|a| (a + 1..=5).map(move |b| (a, b))).collect();
    for &(a, b) in &pairs {
        for &(c, d) in &pairs {
            let shared = [a, b].iter().filter(|x| [c, d].contains(x)).count();
            if shared < 2 {
                check(BasisLabel::pair(a, b), BasisLabel::pair(c, d), &[])?;
            }
        }
    }
    for r in 1..=5u8 {
        let space = KapranovSpace::new(r as usize).unwrap();
        let t = common::table(r);
        let labels = space.labels();
        for (i, &a) in labels.iter().enumerate() {
            for (j, &b) in labels.iter().enumerate() {
                ensure(
                    ints(basis_product(space, a, b).coords()) == t[i][j],
                    format!("r={r} {a:?} . {b:?}"),
                )?;
            }
        }
    }
    Ok(format!("{checked} identities on X5, full tables for r = 1..5"))
}

fn criterion_4(x5: &X5) -> Outcome {
    let k = kapranov::canonical_class_m06();
    let worst = x5
        .report
        .not_eq
        .iter()
        .map(|r| k.coords().dot_ints(r.coords()))
        .max()
        .ok_or("NotEq is empty")?;
    ensure(
        compare::k_negative(&x5.report.not_eq),
        "a NotEq ray pairs non-negatively with K",
    )?;
    Ok(format!("{} NotEq rays, max K pairing {worst}", x5.report.not_eq.len()))
}

fn criterion_5(mov4: &[movcone::Ray], x5: &X5) -> Outcome {
    let results = compare::pullbacks_extremal(mov4, &x5.cones.mov_hrep).map_err(|e| e.to_string())?;
    let bad: Vec<_> = results.iter().filter(|(_, ok)| !ok).collect();
    ensure(bad.is_empty(), format!("{} pullbacks not extremal", bad.len()))?;
    ensure(
        results.iter().all(|(p, _)| x5.cones.mov_rays.contains(p)),
        "a pullback is missing from the Mov(X5) ray list",
    )?;
    Ok(format!("{} Mov(X4) rays", results.len()))
}

fn criterion_6(mov4: &[movcone::Ray], x5: &X5) -> Outcome {
    let gamma = compare::shared_ray();
    let c = compare::both_extremal_not_pullback_check(&gamma, &x5.report, &x5.cones.mov_hrep, mov4)
        .map_err(|e| e.to_string())?;
    ensure(c.extremal_in_mov, "not extremal in Mov(X5)")?;
    ensure(c.in_ci, "not among the CI(X5) extremal rays")?;
    ensure(c.not_pullback, "is a pullback")?;
    ensure(x5.report.generators.contains(&gamma), "not a product generator")?;
    Ok(format!("gamma = {gamma}"))
}

fn criterion_7(x5: &X5) -> Outcome {
    let checks = x5.variety.cross_check(&x5.cones).map_err(|e| e.to_string())?;
    let names: Vec<&str> = checks.iter().map(|(n, _)| n.as_str()).collect();
    ensure(
        names == ["nef_dual_of_fcurves", "mov_dual_of_eff"],
        format!("checks {names:?}"),
    )?;
    for (n, ok) in &checks {
        ensure(*ok, format!("{n} failed"))?;
    }
    // Independently of the pipeline: the same sets from the raw data.
    let f: Vec<_> = kapranov::fcurve_classes().iter().map(|c| c.coords().clone()).collect();
    let f = minimal_generators(16, &f).map_err(|e| e.to_string())?;
    let nef = rays_from_halfspaces(16, &kapranov::nef_hrep(5).unwrap()).map_err(|e| e.to_string())?;
    ensure(dual_rays(16, &f).map_err(|e| e.to_string())? == nef, "F-curve dual")?;
    Ok(format!(
        "{} nef rays, {} movable rays",
        x5.cones.nef_rays.len(),
        x5.cones.mov_rays.len()
    ))
}

fn criterion_8() -> Outcome {
    let mut parts = Vec::new();
    for r in 1..=4 {
        let fan = kapranov_fan(r).map_err(|e| e.to_string())?;
        let t = Variety::toric(
            format!("k{r}"),
            ToricVariety::new(fan, None).map_err(|e| e.to_string())?,
        );
        let k = Variety::builtin(&format!("x{r}")).unwrap();
        let (tc, tr) = t.run().map_err(|e| e.to_string())?;
        let (kc, kr) = k.run().map_err(|e| e.to_string())?;
        ensure(tc.dim == kc.dim, format!("r={r} rank"))?;
        ensure(tc.nef_rays.len() == kc.nef_rays.len(), format!("r={r} nef count"))?;
        ensure(tc.mov_rays.len() == kc.mov_rays.len(), format!("r={r} mov count"))?;
        ensure(tr.verdict == kr.verdict, format!("r={r} verdict"))?;
        parts.push(format!(
            "r={r} {}/{} {}",
            kc.nef_rays.len(),
            kc.mov_rays.len(),
            kr.verdict.as_str()
        ));
    }
    Ok(parts.join(", "))
}

fn fail<T: std::fmt::Debug>(e: proptest::test_runner::TestError<T>) -> String {
    e.to_string()
}

fn criterion_9() -> Outcome {
    let runner = |cases| {
        TestRunner::new_with_rng(
            Config::with_cases(cases),
            TestRng::deterministic_rng(RngAlgorithm::ChaCha),
        )
    };
    let systems = AtomicUsize::new(0);
    runner(256)
        .run(&common::pointed_system(), |(dim, hs)| {
            systems.fetch_add(1, Ordering::Relaxed);
            let dd = rays_from_halfspaces(dim, &hs).unwrap();
            proptest::prop_assert_eq!(dd, brute_force_rays(dim, &hs).unwrap());
            Ok(())
        })
        .map_err(fail)?;
    let generator_sets = AtomicUsize::new(0);
    runner(256)
        .run(&common::pointed_generators(), |(dim, gens)| {
            generator_sets.fetch_add(1, Ordering::Relaxed);
            let rat: Vec<RatVector> = gens.iter().map(|r| r.to_rat()).collect();
            let min = minimal_generators(dim, &rat).unwrap();
            let back = rays_from_halfspaces(dim, &halfspaces_from_rays(dim, &gens).unwrap()).unwrap();
            proptest::prop_assert_eq!(&back, &min);
            let dual = dual_rays(dim, &gens).unwrap();
            proptest::prop_assert_eq!(&dual_rays(dim, &dual).unwrap(), &min);
            Ok(())
        })
        .map_err(fail)?;
    let rays_checked = AtomicUsize::new(0);
    let picks = proptest::collection::vec(0usize..1000, 0..6);
    runner(64)
        .run(&picks, |picks| {
            let v = ToricVariety::new(common::random_blowup(&picks), None).unwrap();
            for i in 0..v.fan().rays.len() {
                let (m, m2) = v.aux_vectors(i);
                proptest::prop_assert_ne!(m, m2);
                proptest::prop_assert_eq!(v.prime_product_with(i, i, m), v.prime_product_with(i, i, m2));
                rays_checked.fetch_add(1, Ordering::Relaxed);
            }
            Ok(())
        })
        .map_err(fail)?;
    let n = systems.load(Ordering::Relaxed);
    ensure(n >= 200, format!("only {n} systems"))?;
    Ok(format!(
        "{n} systems, {} generator sets, {} rays with two m",
        generator_sets.load(Ordering::Relaxed),
        rays_checked.load(Ordering::Relaxed)
    ))
}

fn report(n: usize, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
        let msg = p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        Err(format!("panicked: {msg}"))
    });
    let secs = start.elapsed().as_secs_f64();
    match &outcome {
        Ok(detail) => println!("criterion {n}: PASS ({detail}) [{secs:.1}s]"),
        Err(why) => println!("criterion {n}: FAIL ({why}) [{secs:.1}s]"),
    }
    outcome.is_ok()
}

fn main() -> ExitCode {
    let start = Instant::now();
    let data = catch_unwind(x5).ok();
    println!("x5 pipeline [{:.1}s]", start.elapsed().as_secs_f64());
    let mov4 = Variety::builtin("x4").unwrap().cones().unwrap().mov_rays;
    let with_x5 = |f: &dyn Fn(&X5) -> Outcome| match &data {
        Some(x5) => f(x5),
        None => Err("x5 pipeline panicked".into()),
    };
    let results = [
        report(1, || with_x5(&criterion_1)),
        report(2, criterion_2),
        report(3, criterion_3),
        report(4, || with_x5(&criterion_4)),
        report(5, || with_x5(&|x| criterion_5(&mov4, x))),
        report(6, || with_x5(&|x| criterion_6(&mov4, x))),
        report(7, || with_x5(&criterion_7)),
        report(8, criterion_8),
        report(9, criterion_9),
    ];
    if results.iter().all(|&ok| ok) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
