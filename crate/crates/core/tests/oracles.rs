use ellgcd_core::*;
use proptest::prelude::*;

fn running() -> (SurfaceModel, FFPoint) {
    let e = SurfaceModel::from_ints(&[0, 1], &[1]).unwrap();
    let p = FFPoint::from_polys(&e, Poly::zero(), Poly::one()).unwrap();
    (e, p)
}

/// y^2 = x^3 - t^2 x + t^2 through (t, t).
fn second() -> (SurfaceModel, FFPoint) {
    let e = SurfaceModel::new(Poly::from_ints(&[0, 0, -1]), Poly::from_ints(&[0, 0, 1])).unwrap();
    let p = FFPoint::from_polys(&e, Poly::t(), Poly::t()).unwrap();
    (e, p)
}

/// Multiplicities of `d` on `basis` and at infinity.
fn profile(d: &DivisorP1, fam: &RefinedFamily, i: usize) -> Vec<i64> {
    let mut v = fam.rows[i].clone();
    v.push(d.inf_mult());
    v
}

#[test]
fn difference_section_matches_coordinate_differences() {
    for (e, p) in [running(), second()] {
        let disc_kernel = squarefree_part(e.disc()).unwrap();
        for k in [-1i64, 2, 3] {
            let q = e.scalar_mul(k, &p).unwrap();
            for n in 1..=6i64 {
                if n == k {
                    continue;
                }
                let by_difference = meet_divisor(&e, &p, &q, n).unwrap();
                let r = e.scalar_mul(n, &p).unwrap();
                let by_coords = meet_divisor_by_coordinates(&r, &q).unwrap();
                // the coordinate route cannot see meetings at the fiber's zero point
                let poles = r.x().unwrap().denom().mul(q.x().unwrap().denom());
                let fam = common_basis(&[
                    by_difference.clone(),
                    by_coords.clone(),
                    DivisorP1::zeros_of(&disc_kernel).unwrap(),
                    DivisorP1::zeros_of(&poles).unwrap(),
                ]);
                let (a, b) = (profile(&by_difference, &fam, 0), profile(&by_coords, &fam, 1));
                for (j, place) in fam.basis.iter().enumerate() {
                    if fam.rows[2][j] == 0 && fam.rows[3][j] == 0 {
                        assert_eq!(a[j], b[j], "n={n} k={k} at ({place})");
                    }
                }
            }
        }
    }
}

#[test]
fn meeting_identity_by_coordinates() {
    let (e, p) = running();
    for n in 1..=8i64 {
        let r = e.scalar_mul(n, &p).unwrap();
        if r.is_identity() {
            continue;
        }
        let direct = zero_section_pullback(&e, &r).unwrap();
        let coords = meet_divisor_by_coordinates(&r, &FFPoint::Identity).unwrap();
        assert_eq!(direct.without(&[], true), coords, "n={n}");
    }
}

#[test]
fn division_polynomials_agree_with_group_law() {
    for (e, p) in [running(), second()] {
        let mut psi = DivisionPolys::new(&e);
        for n in 2..=8u64 {
            let law = e.scalar_mul(n as i64, &p).unwrap();
            assert_eq!(law.x(), psi.x_multiple(n, &p).as_ref(), "n={n}");
        }
    }
}

#[test]
fn naive_height_grows_quadratically() {
    for (e, p) in [running(), second()] {
        let ratio = |n: i64| naive_height_ff(&e.scalar_mul(n, &p).unwrap()) as f64 / (n * n) as f64;
        let (r8, r16) = (ratio(8), ratio(16));
        assert!((r8 - r16).abs() <= 0.2 * r16, "{r8} {r16}");
    }
}

#[test]
fn q_height_quadratic_in_three() {
    let l = Limits::default();
    for ((a, b), (x, y)) in [((0, -2), (3, 5)), ((1, 1), (0, 1)), ((-1, 1), (1, 1))] {
        let c = QCurve::from_ints(a, b).unwrap();
        let p = QPoint::from_ints(x, y);
        let h1 = canonical_height_q(&c, &p, 5, &l).unwrap();
        let h3 = canonical_height_q(&c, &c.scalar_mul(3, &p).unwrap(), 5, &l).unwrap();
        let err = h3.error + 9.0 * h1.error;
        assert!((h3.value - 9.0 * h1.value).abs() <= 9.0 * err, "{} {}", h3.value, h1.value);
    }
}

#[test]
fn relation_search_respects_height_identity() {
    let l = Limits::default();
    let c = QCurve::from_ints(0, -2).unwrap();
    let p = QPoint::from_ints(3, 5);
    let hp = canonical_height_q(&c, &p, 5, &l).unwrap();
    for k in [-4i64, -2, 1, 3, 4] {
        let q = c.scalar_mul(k, &p).unwrap();
        let m = relation_search(&c, &p, &q, MCap::Auto, &l).unwrap().m.unwrap();
        assert_eq!(m, k);
        assert_eq!(c.scalar_mul(m, &p).unwrap(), q);
        let hq = canonical_height_q(&c, &q, 5, &l).unwrap();
        let err = (m * m) as f64 * hp.error + hq.error;
        assert!(((m * m) as f64 * hp.value - hq.value).abs() <= err + 1e-9);
    }
}

#[test]
fn torsion_order_is_minimal() {
    // 2-torsion (-1, 0) and 3-torsion (0, 1) curves, and order 4 on y^2 = x^3 + 4x
    for ((a, b), (x, y), k) in [((0, 1), (-1, 0), 2u32), ((0, 1), (0, 1), 3), ((0, 1), (2, 3), 6), ((4, 0), (2, 4), 4)] {
        let c = QCurve::from_ints(a, b).unwrap();
        let p = QPoint::from_ints(x, y);
        assert_eq!(torsion_order(&c, &p).unwrap(), Some(k));
        assert!(c.scalar_mul(k as i64, &p).unwrap().is_identity());
        for j in 1..k {
            assert!(!c.scalar_mul(j as i64, &p).unwrap().is_identity());
        }
    }
}

#[test]
fn constant_sections_have_empty_gcds() {
    let e1 = SurfaceModel::from_ints(&[], &[-2]).unwrap();
    let p1 = FFPoint::from_polys(&e1, Poly::from_ints(&[3]), Poly::from_ints(&[5])).unwrap();
    let e2 = SurfaceModel::from_ints(&[-2], &[]).unwrap();
    let p2 = FFPoint::from_polys(&e2, Poly::from_ints(&[2]), Poly::from_ints(&[2])).unwrap();
    let pair = SectionPair::untranslated(e1, p1, e2, p2).unwrap();
    let rep = gcd_degree_table(&pair, 12, false, &Limits::default()).unwrap();
    assert_eq!(rep.rows.len(), 144);
    assert!(rep.rows.iter().all(|r| r.degree == Some(0)));
}

#[test]
fn degree_cap_yields_flagged_partial_table() {
    let (e1, p1) = running();
    let e2 = SurfaceModel::from_ints(&[0, 1], &[4]).unwrap();
    let p2 = FFPoint::from_polys(&e2, Poly::zero(), Poly::from_ints(&[2])).unwrap();
    let pair = SectionPair::untranslated(e1, p1, e2, p2).unwrap();
    let limits = Limits {
        degree_cap: 60,
        ..Limits::default()
    };
    let partial = gcd_degree_table(&pair, 20, true, &limits).unwrap_err();
    assert!(matches!(partial.error, Error::ResourceCap { .. }));
    assert!(!partial.partial.rows.is_empty() && partial.partial.rows.len() < 20);
}

fn section_strategy() -> impl Strategy<Value = (i64, i64)> {
    (-6i64..=6, -6i64..=6)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn specialization_is_a_homomorphism((a, b) in section_strategy(), t in -20i64..=20, d in 1i64..=5) {
        let (e, p) = running();
        let r = rat(t, d);
        let Ok(c) = specialize_curve(&e, &r) else { return Ok(()) };
        let pa = e.scalar_mul(a, &p).unwrap();
        let pb = e.scalar_mul(b, &p).unwrap();
        let sum = e.add(&pa, &pb).unwrap();
        let lhs = specialize_point_or_identity(&sum, &r);
        let rhs = c.add(&specialize_point_or_identity(&pa, &r), &specialize_point_or_identity(&pb, &r)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn ar_gcd_divides_both(a in prop::collection::vec(-3i64..=3, 2..4), b in prop::collection::vec(-3i64..=3, 2..4), n1 in 1u32..6, n2 in 1u32..6) {
        let (pa, pb) = (Poly::from_ints(&a), Poly::from_ints(&b));
        prop_assume!(!pa.is_constant() && !pb.is_constant());
        let cfg = ArConfig::new(pa.clone(), pb.clone()).unwrap();
        let g = ar_gcd(&cfg, n1, n2).unwrap();
        prop_assert!(pa.pow(n1).sub(&Poly::one()).rem(&g).is_zero());
        prop_assert!(pb.pow(n2).sub(&Poly::one()).rem(&g).is_zero());
    }

    #[test]
    fn height_estimates_stay_within_reported_error(x in 2i64..12) {
        // y^2 = x^3 + B through (x, 1) when B = 1 - x^3
        let c = QCurve::from_ints(0, 1 - x * x * x).unwrap();
        let p = QPoint::from_ints(x, 1);
        let h = canonical_height_q(&c, &p, 5, &Limits::default()).unwrap();
        prop_assume!(h.torsion_order.is_none());
        let h6 = canonical_height_q(&c, &p, 6, &Limits::default()).unwrap();
        prop_assert!((h6.value - h.value).abs() <= 2.0 * h.error + 1e-12);
    }
}
