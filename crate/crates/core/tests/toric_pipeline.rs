use movcone::compare::Verdict;
use movcone::toric::{default_basis, kapranov_fan, FanIssue, ToricError};
use movcone::{Fan, RatVector, ToricDivisorClass, ToricVariety, Variety};
use proptest::prelude::*;

mod common;
use common::{random_blowup, rays, y2_fan};

fn ints(v: &RatVector) -> Vec<i64> {
    v.entries().iter().map(|x| x.to_integer().try_into().unwrap()).collect()
}

fn y2() -> ToricVariety {
    ToricVariety::new(y2_fan(), None).unwrap()
}

#[test]
fn y2_file_is_a_valid_fan_with_greedy_basis() {
    let fan = y2_fan();
    assert!(fan.validate().is_valid());
    assert_eq!(default_basis(&fan), vec![3, 4, 5]);
    assert_eq!(fan.walls().len(), 12);
}

#[test]
fn y2_wall_classes() {
    let v = y2();
    let want: &[((usize, usize), [i64; 3])] = &[
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
    for &((a, b), c) in want {
        let w = v.wall(a, b).unwrap_or_else(|| panic!("wall ({a},{b})"));
        assert_eq!(ints(v.wall_curve_class(w).coords()), c, "wall ({a},{b})");
    }
    assert_eq!(v.walls().len(), want.len());
}

#[test]
fn y2_products() {
    let v = y2();
    let p = |i, j| ints(v.prime_product(i, j).coords());
    assert_eq!(p(3, 3), [1, -1, -1]);
    assert_eq!(p(4, 4), [1, -2, 0]);
    assert_eq!(p(5, 5), [1, -1, -1]);
    assert_eq!(p(3, 4), [-1, 1, 1]);
    assert_eq!(p(3, 5), [-1, 1, 1]);
    assert_eq!(p(4, 5), [1, 0, -1]);

    let d = |c: [i64; 3]| ToricDivisorClass::new(RatVector::from_ints(&c));
    let eta = [d([1, 0, 1]), d([2, 1, 1]), d([1, 1, 1])];
    let prod = |i: usize, j: usize| ints(v.class_product(&eta[i], &eta[j]).coords());
    assert_eq!(prod(0, 0), [0, 0, 0]);
    assert_eq!(prod(1, 1), [0, 1, 1]);
    assert_eq!(prod(2, 2), [1, 0, 0]);
    assert_eq!(prod(0, 1), [0, 1, 0]);
    assert_eq!(prod(0, 2), [0, 1, 0]);
    assert_eq!(prod(1, 2), [0, 1, 1]);
}

#[test]
fn y2_end_to_end() {
    let v = Variety::toric("y2", y2());
    let (cones, report) = v.run().unwrap();
    let orthant = rays(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]);
    assert_eq!(cones.eff_rays, orthant);
    assert_eq!(cones.mov_rays, orthant);
    assert_eq!(cones.nef_rays, rays(&[&[1, 0, 1], &[1, 1, 1], &[2, 1, 1]]));
    assert_eq!(report.zero_products, 1);
    assert_eq!(report.generators.to_vec(), rays(&[&[0, 1, 0], &[0, 1, 1], &[1, 0, 0]]));
    assert_eq!(report.not_eq, rays(&[&[0, 0, 1]]));
    assert_eq!(report.verdict, Verdict::Strict);
    assert!(report.certificates.iter().all(|c| c.holds(&report.generators)));
    assert!(v.cross_check(&cones).unwrap().iter().all(|(_, ok)| *ok));
}

#[test]
fn y2_is_two_blowups_of_p3() {
    let f = Fan::projective_space().star_subdivide(&[1, 3]).unwrap();
    let f = f.star_subdivide(&[2, 3]).unwrap();
    assert_eq!(f.canonical(), y2_fan().canonical());
}

#[test]
fn y2_relations() {
    let [r1, _, r3] = y2_fan().relations();
    assert_eq!(r1, [-1, 1, 0, 0, 1, 0]);
    assert_eq!(r3, [-1, 0, 0, 1, 1, 1]);
}

#[test]
fn p3_collapses_to_a_single_ray() {
    let v = Variety::toric("p3", ToricVariety::new(Fan::projective_space(), None).unwrap());
    let (cones, report) = v.run().unwrap();
    for rs in [&cones.nef_rays, &cones.mov_rays, &cones.eff_rays, &cones.ne_rays] {
        assert_eq!(rs, &rays(&[&[1]]));
    }
    assert_eq!(report.verdict, Verdict::Equal);
}

#[test]
fn invalid_fans_are_rejected() {
    let mut f = y2_fan();
    f.rays[4] = [2, 0, 2];
    assert!(f.validate().issues.contains(&FanIssue::NonPrimitiveRay(4)));

    let mut f = y2_fan();
    f.max_cones.pop();
    let d = f.validate();
    assert!(d.issues.iter().any(|i| matches!(i, FanIssue::WallIncidence { .. })));
    assert!(matches!(ToricVariety::new(f, None), Err(ToricError::Invalid(_))));

    let mut f = Fan::projective_space();
    f.rays[1] = [1, 1, 0];
    assert!(f
        .validate()
        .issues
        .iter()
        .any(|i| matches!(i, FanIssue::Singular { .. })));

    let mut f = Fan::projective_space();
    f.max_cones[0] = [0, 1, 7];
    assert!(f.validate().issues.contains(&FanIssue::RayIndex { cone: 0, index: 7 }));
}

#[test]
fn subdividing_a_non_face_fails() {
    let f = y2_fan();
    assert!(matches!(f.star_subdivide(&[1, 3]), Err(ToricError::NotAFace(_))));
}

#[test]
fn bad_basis_choices() {
    assert!(matches!(
        ToricVariety::new(y2_fan(), Some(vec![3, 4])),
        Err(ToricError::BasisSize { expected: 3, found: 2 })
    ));
    // D1 = D3 + D5.
    assert!(matches!(
        ToricVariety::new(y2_fan(), Some(vec![1, 3, 5])),
        Err(ToricError::SingularBasis(_))
    ));
    let v = ToricVariety::new(y2_fan(), Some(vec![1, 4, 5])).unwrap();
    assert_eq!(ints(v.divisor_in_basis(1).unwrap().coords()), [1, 0, 0]);
}

#[test]
fn fan_json_errors_carry_line_numbers() {
    let text = "{\n  \"rays\": [[1, 0, 0],,\n  \"max_cones\": []\n}";
    match Fan::from_json(text) {
        Err(ToricError::Parse { line, .. }) => assert_eq!(line, 2),
        other => panic!("unexpected {other:?}"),
    }
}

/// Verdict and Nef/Mov ray counts do not depend on the chosen basis.
#[test]
fn y2_invariants_under_basis_change() {
    let base = Variety::toric("y2", y2()).run().unwrap();
    for basis in [vec![1, 4, 5], vec![2, 3, 4], vec![0, 1, 2]] {
        let Ok(v) = ToricVariety::new(y2_fan(), Some(basis.clone())) else {
            continue;
        };
        let (cones, report) = Variety::toric("y2", v).run().unwrap();
        assert_eq!(cones.nef_rays.len(), base.0.nef_rays.len(), "{basis:?}");
        assert_eq!(cones.mov_rays.len(), base.0.mov_rays.len(), "{basis:?}");
        assert_eq!(report.verdict, base.1.verdict, "{basis:?}");
        assert_eq!(report.not_eq.len(), base.1.not_eq.len(), "{basis:?}");
    }
}

#[test]
fn kapranov_fans_agree_with_kapranov_pipeline() {
    for r in 1..=3 {
        let t = Variety::toric(
            format!("k{r}"),
            ToricVariety::new(kapranov_fan(r).unwrap(), None).unwrap(),
        );
        let k = Variety::builtin(&format!("x{r}")).unwrap();
        let (tc, tr) = t.run().unwrap();
        let (kc, kr) = k.run().unwrap();
        assert_eq!(tc.nef_rays.len(), kc.nef_rays.len(), "r={r}");
        assert_eq!(tc.mov_rays.len(), kc.mov_rays.len(), "r={r}");
        assert_eq!(tr.verdict, kr.verdict, "r={r}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn blowups_are_consistent(picks in prop::collection::vec(any::<usize>(), 0..5)) {
        let f = random_blowup(&picks);
        prop_assert!(f.validate().is_valid());
        let v = ToricVariety::new(f.clone(), None).unwrap();
        prop_assert_eq!(v.rank(), f.rays.len() - 3);
        for i in 0..f.rays.len() {
            let (m, m2) = v.aux_vectors(i);
            prop_assert_ne!(m, m2);
            prop_assert_eq!(v.prime_product_with(i, i, m), v.prime_product_with(i, i, m2));
        }
        let var = Variety::toric("t", v);
        let cones = var.cones().unwrap();
        prop_assert!(var.cross_check(&cones).unwrap().iter().all(|(_, ok)| *ok));
    }

    #[test]
    fn class_product_is_symmetric_and_bilinear(
        picks in prop::collection::vec(any::<usize>(), 0..4),
        x in prop::collection::vec(-4i64..=4, 8),
        y in prop::collection::vec(-4i64..=4, 8),
        z in prop::collection::vec(-4i64..=4, 8),
        a in -3i64..=3,
    ) {
        let v = ToricVariety::new(random_blowup(&picks), None).unwrap();
        let k = v.rank();
        let d = |c: &[i64]| ToricDivisorClass::new(RatVector::from_ints(&c[..k]));
        let (dx, dy, dz) = (d(&x), d(&y), d(&z));
        prop_assert_eq!(v.class_product(&dx, &dy), v.class_product(&dy, &dx));
        let comb: Vec<i64> = x[..k].iter().zip(&y[..k]).map(|(p, q)| a * p + q).collect();
        let lhs = ints(v.class_product(&d(&comb), &dz).coords());
        let px = ints(v.class_product(&dx, &dz).coords());
        let py = ints(v.class_product(&dy, &dz).coords());
        let rhs: Vec<i64> = px.iter().zip(&py).map(|(p, q)| a * p + q).collect();
        prop_assert_eq!(lhs, rhs);
    }
}
