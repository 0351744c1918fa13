use proptest::prelude::*;

use wsg_core::polyalg::{
    buchberger, is_groebner_basis, normal_form, semigroup_ring, toric_ideal, Coeff, GradedRing,
    Polynomial, Ring,
};
use wsg_core::NumericalSemigroup;

fn small_semigroup() -> impl Strategy<Value = NumericalSemigroup> {
    prop::collection::vec(3u32..=14, 2..=4).prop_filter_map("gcd must be 1", |gens| {
        NumericalSemigroup::from_generators(&gens)
            .ok()
            .filter(|s| s.embedding_dimension() >= 2)
    })
}

/// Image of `f` under `x_i -> t^{g_i}`; the toric ideal is exactly its kernel.
fn parametrize(f: &Polynomial, s: &NumericalSemigroup) -> Polynomial {
    let line = GradedRing::standard(1);
    let t = Polynomial::var(&line, 0);
    let images: Vec<Polynomial> = s.generators().iter().map(|&g| t.pow(g)).collect();
    f.substitute(&images).unwrap()
}

fn monomial(ring: &Ring, exps: &[u32]) -> Polynomial {
    Polynomial::term(ring, Coeff::from(1), ring.monomial(exps).unwrap())
}

/// A random `R`-linear combination of `gens` plus, optionally, an arbitrary polynomial.
fn random_element(
    ring: &Ring,
    gens: &[Polynomial],
    picks: &[(usize, i64, [u32; 4])],
    noise: &[(i64, [u32; 4])],
) -> (Polynomial, Polynomial) {
    let n = ring.nvars();
    let mut combo = Polynomial::zero(ring);
    for (idx, c, exps) in picks {
        let g = &gens[idx % gens.len()];
        let m = monomial(ring, &exps[..n]).scale(&Coeff::from(*c));
        combo = &combo + &(&m * g);
    }
    let mut extra = Polynomial::zero(ring);
    for (c, exps) in noise {
        extra = &extra + &monomial(ring, &exps[..n]).scale(&Coeff::from(*c));
    }
    (combo, extra)
}

#[test]
fn toric_ideal_of_three_generators() {
    let s = NumericalSemigroup::from_generators(&[3, 4, 5]).unwrap();
    let ring = semigroup_ring(&s, None).unwrap();
    let ideal = toric_ideal(&ring).unwrap();
    assert_eq!(ideal.generators().len(), 3);
    assert_eq!(ideal.codimension(), 2);
    for g in ideal.generators() {
        assert!(parametrize(g, &s).is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn toric_generators_are_pure_binomials(s in small_semigroup()) {
        let ring = semigroup_ring(&s, None).unwrap();
        let ideal = toric_ideal(&ring).unwrap();
        prop_assert!(!ideal.generators().is_empty());
        for g in ideal.generators() {
            prop_assert_eq!(g.len(), 2);
            let coeffs: Vec<&Coeff> = g.terms().map(|t| &t.coeff).collect();
            prop_assert!(coeffs[0].is_one());
            prop_assert_eq!(coeffs[1], &-Coeff::from(1));
            prop_assert!(g.is_homogeneous());
            prop_assert!(parametrize(g, &s).is_zero());
        }
    }

    #[test]
    fn toric_codimension_is_embedding_dimension_minus_one(s in small_semigroup()) {
        let ring = semigroup_ring(&s, None).unwrap();
        let ideal = toric_ideal(&ring).unwrap();
        prop_assert_eq!(ideal.codimension(), s.embedding_dimension() - 1);
    }

    #[test]
    fn groebner_basis_is_stable(s in small_semigroup()) {
        let ring = semigroup_ring(&s, None).unwrap();
        let ideal = toric_ideal(&ring).unwrap();
        let gb = ideal.groebner_basis().to_vec();
        prop_assert!(is_groebner_basis(&gb));
        let again = buchberger(&gb).unwrap();
        prop_assert!(is_groebner_basis(&again));
        for g in &gb {
            prop_assert!(normal_form(g, &again).unwrap().is_zero());
        }
        for g in &again {
            prop_assert!(normal_form(g, &gb).unwrap().is_zero());
        }
    }

    #[test]
    fn normal_form_decides_membership(
        s in small_semigroup(),
        picks in prop::collection::vec((0usize..16, -3i64..=3, prop::array::uniform4(0u32..3)), 0..5),
        noise in prop::collection::vec((-3i64..=3, prop::array::uniform4(0u32..3)), 0..3),
    ) {
        let ring = semigroup_ring(&s, None).unwrap();
        let ideal = toric_ideal(&ring).unwrap();
        let gb = ideal.groebner_basis();
        let (combo, extra) = random_element(&ring, ideal.generators(), &picks, &noise);
        prop_assert!(normal_form(&combo, gb).unwrap().is_zero());
        let f = &combo + &extra;
        let in_ideal = parametrize(&f, &s).is_zero();
        prop_assert_eq!(normal_form(&f, gb).unwrap().is_zero(), in_ideal);
        prop_assert_eq!(ideal.contains(&f).unwrap(), in_ideal);
        prop_assert_eq!(normal_form(&f, gb).unwrap(), normal_form(&extra, gb).unwrap());
    }
}
