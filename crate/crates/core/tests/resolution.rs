use proptest::prelude::*;

use wsg_core::polyalg::{
    parse_polynomial, semigroup_ring, toric_ideal, GradedRing, Ideal, Polynomial, Ring,
};
use wsg_core::resolution::*;
use wsg_core::NumericalSemigroup;

fn resolve(s: &NumericalSemigroup) -> FreeResolution {
    let ring = semigroup_ring(s, None).unwrap();
    let ideal = toric_ideal(&ring).unwrap();
    minimal_free_resolution(&ideal).unwrap()
}

fn ideal(ring: &Ring, gens: &[&str]) -> Ideal {
    Ideal::new(
        ring,
        gens.iter()
            .map(|g| parse_polynomial(ring, g).unwrap())
            .collect(),
    )
    .unwrap()
}

/// Coefficients of `sum_k (-1)^k sum_j t^shift` up to degree `top`.
fn alternating_shift_series(res: &FreeResolution, top: usize) -> Vec<i64> {
    let mut out = vec![0i64; top + 1];
    for k in 0..=res.length() {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        for s in res.shifts(k) {
            if (s as usize) <= top {
                out[s as usize] += sign;
            }
        }
    }
    out
}

/// Hilbert series numerator of the semigroup ring, which has one monomial
/// in each degree of the semigroup: `sum_{s in S} t^s * prod (1 - t^g)`.
fn semigroup_series_numerator(s: &NumericalSemigroup, top: usize) -> Vec<i64> {
    let mut member = vec![false; top + 1];
    member[0] = true;
    for d in 1..=top {
        member[d] = s
            .generators()
            .iter()
            .any(|&g| (g as usize) <= d && member[d - g as usize]);
    }
    let mut series: Vec<i64> = member.iter().map(|&b| b as i64).collect();
    for &g in s.generators() {
        let g = g as usize;
        for d in (0..=top).rev() {
            if d >= g {
                series[d] -= series[d - g];
            }
        }
    }
    series
}

#[test]
fn genus_13_example_has_format_1_6_8_3() {
    let s: NumericalSemigroup = "6,9,13,16".parse().unwrap();
    let res = resolve(&s);
    assert_eq!(betti_format(&res).unwrap(), BettiFormat(vec![1, 6, 8, 3]));
    assert!(res.is_complex());
    assert!(res.is_minimal());
    assert_eq!(res.shifts(0), vec![0]);
    assert_eq!(res.shifts(1), vec![18, 22, 25, 32, 39, 42]);
}

#[test]
fn genus_30_example_has_format_1_4_6_3() {
    let s: NumericalSemigroup = "7,15,23,39".parse().unwrap();
    let res = resolve(&s);
    assert_eq!(betti_format(&res).unwrap(), BettiFormat(vec![1, 4, 6, 3]));
    assert!(res.is_complex());
}

#[test]
fn resolution_matches_hilbert_series_of_semigroup_ring() {
    for gens in [
        "6,9,13,16",
        "7,15,23,39",
        "3,5,7",
        "4,5,6,7",
        "5,7,9,11",
        "8,9,12,13",
    ] {
        let s: NumericalSemigroup = gens.parse().unwrap();
        let res = resolve(&s);
        let top = 200;
        assert_eq!(
            alternating_shift_series(&res, top),
            semigroup_series_numerator(&s, top),
            "{gens}"
        );
    }
}

#[test]
fn hypersurfaces_and_principal_ideals() {
    let s: NumericalSemigroup = "2,3".parse().unwrap();
    let res = resolve(&s);
    assert_eq!(betti_format(&res).unwrap(), BettiFormat(vec![1, 1]));
    assert_eq!(res.shifts(1), vec![6]);

    let r = GradedRing::standard(3);
    let res = minimal_free_resolution(&ideal(&r, &["x0"])).unwrap();
    assert_eq!(betti_format(&res).unwrap(), BettiFormat(vec![1, 1]));
    let zero = minimal_free_resolution(&Ideal::new(&r, vec![]).unwrap()).unwrap();
    assert_eq!(betti_format(&zero).unwrap(), BettiFormat(vec![1]));
    assert!(matches!(
        minimal_free_resolution(&ideal(&r, &["1"])),
        Err(ResolutionError::UnitIdeal)
    ));
}

#[test]
fn koszul_complex_of_variables() {
    let r = GradedRing::standard(3);
    let res = minimal_free_resolution(&ideal(&r, &["x0", "x1", "x2"])).unwrap();
    assert_eq!(betti_format(&res).unwrap(), BettiFormat(vec![1, 3, 3, 1]));
    assert_eq!(res.shifts(3), vec![3]);
    let report = be_exactness(&res).unwrap();
    assert!(report.exact);
    let id = be_minor_identity(&res).unwrap();
    assert!(id.holds);
    assert_eq!(id.pairs_checked, 9);
}

#[test]
fn redundant_generators_do_not_change_the_minimal_resolution() {
    let r = GradedRing::standard(4);
    let a =
        minimal_free_resolution(&ideal(&r, &["x0*x2-x1^2", "x1*x3-x2^2", "x0*x3-x1*x2"])).unwrap();
    let b = minimal_free_resolution(&ideal(
        &r,
        &[
            "x1*x3-x2^2",
            "x0*x3-x1*x2",
            "x0*x2-x1^2",
            "x0*x2-x1^2+x1*x3-x2^2",
            "x0*x2*x3-x1^2*x3",
        ],
    ))
    .unwrap();
    assert_eq!(betti_format(&a).unwrap(), BettiFormat(vec![1, 3, 2]));
    for k in 0..=a.length() {
        assert_eq!(a.shifts(k), b.shifts(k));
    }
    assert!(be_exactness(&a).unwrap().exact);
}

#[test]
fn non_complexes_and_inexact_complexes_are_detected() {
    let r = GradedRing::standard(2);
    let p1 = GradedMatrix::parse(&r, vec![0], &[&["x0", "x1"]]).unwrap();
    let bad = GradedMatrix::parse(&r, vec![1, 1], &[&["x0"], &["x1"]]).unwrap();
    let res = FreeResolution::from_maps(&r, vec![p1.clone(), bad]).unwrap();
    assert!(matches!(
        be_exactness(&res),
        Err(ResolutionError::NotAComplex)
    ));

    // the syzygy of (x0*x1, x0^2) is (x0, -x1); a multiple of it leaves homology
    let p1 = GradedMatrix::parse(&r, vec![0], &[&["x0*x1", "x0^2"]]).unwrap();
    let good = GradedMatrix::parse(&r, vec![2, 2], &[&["x0"], &["-x1"]]).unwrap();
    let res = FreeResolution::from_maps(&r, vec![p1.clone(), good]).unwrap();
    assert!(be_exactness(&res).unwrap().exact);
    let scaled = GradedMatrix::parse(&r, vec![2, 2], &[&["x0^2"], &["-x0*x1"]]).unwrap();
    let res = FreeResolution::from_maps(&r, vec![p1, scaled]).unwrap();
    let report = be_exactness(&res).unwrap();
    assert!(!report.exact);
    assert_eq!(report.steps[0].minors_codim, Some(1));
    assert_eq!(report.steps[1].minors_codim, Some(1));
}

#[test]
fn cancellation_keeps_a_complex() {
    let s: NumericalSemigroup = "6,9,13,16".parse().unwrap();
    let ring = semigroup_ring(&s, None).unwrap();
    let frame = schreyer_resolution(&toric_ideal(&ring).unwrap()).unwrap();
    assert!(frame.is_complex());
    let min = minimalize(&frame);
    assert!(min.is_minimal() && min.is_complex());
    assert!(frame.ranks().iter().zip(min.ranks()).all(|(a, b)| *a >= b));
}

#[test]
fn json_round_trip_and_rendering() {
    let s: NumericalSemigroup = "6,9,13,16".parse().unwrap();
    let res = resolve(&s);
    let back = FreeResolution::from_json(&res.to_json()).unwrap();
    assert_eq!(back.to_json(), res.to_json());
    let text = res.render();
    assert_eq!(text.lines().count(), 9);
    assert!(text.contains('|'));
}

#[test]
fn ranks_of_maps() {
    let s: NumericalSemigroup = "6,9,13,16".parse().unwrap();
    let res = resolve(&s);
    assert_eq!(rank_of_matrix(res.map(1).unwrap()), 1);
    assert_eq!(rank_of_matrix(res.map(2).unwrap()), 5);
    assert_eq!(rank_of_matrix(res.map(3).unwrap()), 3);
    let _: Polynomial = determinant(res.ring(), &[]);
}

fn small_semigroup() -> impl Strategy<Value = NumericalSemigroup> {
    (3u32..9, prop::collection::vec(1u32..14, 2..4)).prop_map(|(m, offs)| {
        let mut gens = vec![m];
        gens.extend(offs.iter().map(|o| m + o));
        NumericalSemigroup::from_generators(&gens)
            .unwrap_or_else(|_| NumericalSemigroup::from_generators(&[m, m + 1]).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_toric_resolutions_are_minimal_complexes(s in small_semigroup()) {
        let res = resolve(&s);
        prop_assert!(res.is_complex());
        prop_assert!(res.is_minimal());
        prop_assert!(res.length() < s.embedding_dimension() as usize);
        prop_assert_eq!(alternating_shift_series(&res, 150), semigroup_series_numerator(&s, 150));
    }
}
