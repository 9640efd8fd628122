mod common;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{integral_orbit, integral_spectrum, QS};
use weilmot::algebraic::{
    composed_product, factor_rational, is_algebraic_integer, newton_recover, power_sums,
    q_divisibility_order, NumberOrbit, RatPoly,
};
use weilmot::field::ExtField;
use weilmot::motive::VirtualMotive;
use weilmot::zeta_fit::{series_from_sums, spectrum_from_zeta};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn pick_q(r: &mut ChaCha8Rng) -> u64 {
    QS[r.gen_range(0..QS.len())]
}

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(config(1000))]

    #[test]
    fn frobenius_is_a_field_automorphism(
        (p, e) in prop::sample::select(vec![(2u64, 3usize), (2, 4), (3, 2), (3, 3), (5, 2), (7, 2)]),
        a in any::<u64>(),
        b in any::<u64>(),
    ) {
        let f = ExtField::new(p, e).unwrap();
        let (a, b) = (f.from_index(a % f.size()), f.from_index(b % f.size()));
        let fa = f.frobenius(&a).unwrap();
        let fb = f.frobenius(&b).unwrap();
        prop_assert_eq!(f.frobenius(&f.mul(&a, &b).unwrap()).unwrap(), f.mul(&fa, &fb).unwrap());
        prop_assert_eq!(f.frobenius(&f.add(&a, &b).unwrap()).unwrap(), f.add(&fa, &fb).unwrap());
    }
}

proptest! {
    #![proptest_config(config(200))]

    #[test]
    fn newton_recover_inverts_power_sums(
        mut c in prop::collection::vec(-20i64..=20, 1..=6),
    ) {
        c.push(1);
        let f = RatPoly::from_ints(&c);
        prop_assert_eq!(newton_recover(&power_sums(&f, f.degree())), f);
    }

    #[test]
    fn factors_multiply_back(
        parts in prop::collection::vec(prop::collection::vec(-6i64..=6, 1..=3), 1..=4),
    ) {
        let mut f = RatPoly::one();
        for mut p in parts {
            p.push(1);
            f = f.mul(&RatPoly::from_ints(&p));
        }
        let back = factor_rational(&f)
            .unwrap()
            .into_iter()
            .fold(RatPoly::one(), |acc, (g, m)| acc.mul(&g.pow(m)));
        prop_assert_eq!(back, f);
    }

    #[test]
    fn integral_spectra_have_integer_counts(seed in any::<u64>()) {
        let mut r = rng(seed);
        let q = pick_q(&mut r);
        let m = integral_spectrum(&mut r, q, 3, 3);
        for n in 1..=20 {
            prop_assert!(m.sharp_n(n).is_integer());
        }
    }
}

proptest! {
    #![proptest_config(config(100))]

    #[test]
    fn composed_product_multiplies_traces(seed in any::<u64>()) {
        let mut r = rng(seed);
        let f = integral_orbit(&mut r, 3, 5);
        let g = integral_orbit(&mut r, 3, 5);
        let cp = composed_product(f.poly(), g.poly()).unwrap();
        let total: usize = cp.iter().map(|(h, m)| h.degree() * *m as usize).sum();
        prop_assert_eq!(total, f.degree() * g.degree());
        let pf = power_sums(f.poly(), 5);
        let pg = power_sums(g.poly(), 5);
        for n in 0..5 {
            let sum = cp.iter().fold(BigRational::zero(), |acc, (h, m)| {
                acc + &power_sums(h.poly(), n + 1)[n] * BigRational::from_integer(BigInt::from(*m))
            });
            prop_assert_eq!(&sum, &(&pf[n] * &pg[n]));
        }
    }

    #[test]
    fn twisting_raises_divisibility_order(seed in any::<u64>()) {
        let mut r = rng(seed);
        let q = pick_q(&mut r);
        let f = integral_orbit(&mut r, 3, 6);
        let l = NumberOrbit::lefschetz(q, 1);
        let cp = composed_product(f.poly(), l.poly()).unwrap();
        prop_assert_eq!(cp.len(), 1);
        prop_assert_eq!(
            q_divisibility_order(&cp[0].0, q).unwrap(),
            q_divisibility_order(&f, q).unwrap() + 1
        );
    }

    #[test]
    fn sharp_is_a_ring_homomorphism(seed in any::<u64>()) {
        let mut r = rng(seed);
        let q = pick_q(&mut r);
        let m = integral_spectrum(&mut r, q, 3, 3);
        let n = integral_spectrum(&mut r, q, 3, 3);
        let sum = m.add(&n).unwrap();
        let prod = m.tensor(&n).unwrap();
        for k in 1..=5 {
            prop_assert_eq!(sum.sharp_n(k), m.sharp_n(k) + n.sharp_n(k));
            prop_assert_eq!(prod.sharp_n(k), m.sharp_n(k) * n.sharp_n(k));
            let a = m.sharp_bar_n(k, 1).unwrap();
            let b = n.sharp_bar_n(k, 1).unwrap();
            prop_assert_eq!(prod.sharp_bar_n(k, 1).unwrap(), a.mul(&b).unwrap());
        }
    }

    #[test]
    fn lefschetz_split_identities(seed in any::<u64>(), kappa in 1u32..=2) {
        let mut r = rng(seed);
        let q = pick_q(&mut r);
        let m = integral_spectrum(&mut r, q, 3, 4);
        let n = integral_spectrum(&mut r, q, 3, 4);
        let s = m.lefschetz_split(kappa).unwrap();
        prop_assert_eq!(s.reassemble().unwrap(), m.clone());
        let again = s.birational_part.lefschetz_split(kappa).unwrap();
        prop_assert!(again.lefschetz_cofactor.is_zero());
        prop_assert_eq!(&again.birational_part, &s.birational_part);
        let sum = m.add(&n).unwrap().lefschetz_split(kappa).unwrap();
        let parts = s.birational_part.add(&n.lefschetz_split(kappa).unwrap().birational_part).unwrap();
        prop_assert_eq!(sum.birational_part, parts);
        // the reduced count only sees the birational part
        for k in 1..=4 {
            let full = m.sharp_n(k).to_integer();
            let modulus = BigInt::from(q).pow(kappa * k);
            let bar = m.sharp_bar_n(k, kappa).unwrap();
            prop_assert_eq!(bar.value, ((full % &modulus) + &modulus) % &modulus);
        }
    }

    #[test]
    fn zeta_expansion_matches_exponential_of_counts(seed in any::<u64>()) {
        let mut r = rng(seed);
        let q = pick_q(&mut r);
        let m = integral_spectrum(&mut r, q, 3, 3);
        let n_max = 8;
        prop_assert_eq!(m.zeta().series(n_max as usize), series_from_sums(&m.sharp_upto(n_max)));
    }

    #[test]
    fn spectrum_roundtrips_through_zeta(seed in any::<u64>()) {
        let mut r = rng(seed);
        let q = pick_q(&mut r);
        let m = integral_spectrum(&mut r, q, 4, 3);
        prop_assert_eq!(spectrum_from_zeta(&m.zeta(), q).unwrap(), m);
    }

    #[test]
    fn sharp_values_separate_small_motives(seed in any::<u64>(), d in 1usize..=6) {
        // a small orbit pool makes coincident pairs common
        let mut r = rng(seed);
        let q = 2;
        let pool: Vec<NumberOrbit> = (0..4).map(|_| integral_orbit(&mut r, 2, 2)).collect();
        let draw = |r: &mut ChaCha8Rng| {
            let mut terms = Vec::new();
            let mut budget = d;
            while budget > 0 {
                let o = pool[r.gen_range(0..pool.len())].clone();
                if o.degree() > budget || r.gen_bool(0.2) {
                    break;
                }
                budget -= o.degree();
                terms.push((o, if r.gen_bool(0.7) { 1 } else { -1 }));
            }
            VirtualMotive::new(q, terms).unwrap()
        };
        let a = draw(&mut r);
        let b = draw(&mut r);
        let agree = (1..=2 * d as u32).all(|n| a.sharp_n(n) == b.sharp_n(n));
        prop_assert_eq!(agree, a == b, "{} vs {}", a, b);
    }

    #[test]
    fn integral_spectra_pass_the_probe(seed in any::<u64>()) {
        let mut r = rng(seed);
        let q = pick_q(&mut r);
        let m = integral_spectrum(&mut r, q, 3, 3);
        prop_assert!(m.terms().all(|(o, _)| is_algebraic_integer(o)));
        let report = m.effectivity_probe(20);
        prop_assert!(report.agrees && report.integral_orbits);
    }
}

#[test]
fn fitted_zeta_is_confirmed_beyond_the_fit_window() {
    use weilmot::zeta_fit::fit_rational;
    let mut r = rng(7);
    for _ in 0..30 {
        let q = pick_q(&mut r);
        let m = integral_spectrum(&mut r, q, 2, 2);
        let deg = m.zeta().numerator().degree().max(m.zeta().denominator().degree());
        let n_max = 2 * deg as u32 + 4;
        let series = series_from_sums(&m.sharp_upto(n_max));
        let z = fit_rational(&series, deg).unwrap();
        assert_eq!(z, m.zeta());
        assert_eq!(z.series(series.len() - 1), series);
        assert!(BigRational::one() == series[0]);
    }
}
