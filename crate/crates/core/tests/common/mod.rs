//! Shared generators for the integration tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use weilmot::algebraic::{is_irreducible, twist_up, NumberOrbit, RatPoly};
use weilmot::motive::VirtualMotive;
use weilmot::variety::{parse_variety_file, CountCombinator};

pub const QS: [u64; 5] = [2, 3, 4, 5, 7];

pub fn data(name: &str) -> String {
    let path = format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

pub fn variety(name: &str) -> CountCombinator {
    parse_variety_file(&data(name)).unwrap().combinator
}

/// A random monic irreducible integer polynomial with `1 <= deg <= max_deg`,
/// coefficients in `[-bound, bound]` and nonzero constant term.
pub fn integral_orbit(rng: &mut ChaCha8Rng, max_deg: usize, bound: i64) -> NumberOrbit {
    loop {
        let d = rng.gen_range(1..=max_deg);
        let mut c: Vec<i64> = (0..d).map(|_| rng.gen_range(-bound..=bound)).collect();
        if c[0] == 0 {
            continue;
        }
        c.push(1);
        let f = RatPoly::from_ints(&c);
        if is_irreducible(&f).unwrap() {
            return NumberOrbit::new(f).unwrap();
        }
    }
}

/// Integral orbits, some of them multiplied by `q^k` so that Lefschetz
/// splitting has something to move.
pub fn integral_spectrum(rng: &mut ChaCha8Rng, q: u64, max_deg: usize, max_terms: usize) -> VirtualMotive {
    let terms = rng.gen_range(1..=max_terms);
    let orbits = (0..terms).map(|_| {
        let o = integral_orbit(rng, max_deg, 4);
        let k = rng.gen_range(0..=2u32);
        let twisted = NumberOrbit::new(twist_up(o.poly(), q, k)).unwrap();
        let mut m = rng.gen_range(-2..=2i64);
        if m == 0 {
            m = 1;
        }
        (twisted, m)
    });
    VirtualMotive::new(q, orbits.collect::<Vec<_>>()).unwrap()
}

/// A monic irreducible polynomial of degree `deg` with at least one
/// non-integral coefficient, all denominators at most `max_den`.
pub fn non_integral_orbit(rng: &mut ChaCha8Rng, deg: usize, max_den: i64) -> NumberOrbit {
    loop {
        let mut c: Vec<BigRational> = (0..deg)
            .map(|_| {
                let den = rng.gen_range(1..=max_den);
                BigRational::new(BigInt::from(rng.gen_range(-9..=9i64)), BigInt::from(den))
            })
            .collect();
        c.push(BigRational::from_integer(1.into()));
        let f = RatPoly::new(c);
        if f.coeff(0) == BigRational::from_integer(0.into()) || f.is_integral() {
            continue;
        }
        if is_irreducible(&f).unwrap() {
            return NumberOrbit::new(f).unwrap();
        }
    }
}

/// At least one non-integral orbit, total degree at most 4.
pub fn non_integral_spectrum(rng: &mut ChaCha8Rng, q: u64) -> VirtualMotive {
    loop {
        let d = rng.gen_range(1..=2);
        let mut terms = vec![(non_integral_orbit(rng, d, 5), if rng.gen_bool(0.5) { 1 } else { -1 })];
        let mut budget = 4 - d;
        while budget > 0 && rng.gen_bool(0.6) {
            let d = rng.gen_range(1..=budget.min(2));
            let o = if rng.gen_bool(0.5) {
                integral_orbit(rng, d, 4)
            } else {
                non_integral_orbit(rng, d, 5)
            };
            if o.degree() > budget {
                continue;
            }
            budget -= o.degree();
            terms.push((o, if rng.gen_bool(0.5) { 1 } else { -1 }));
        }
        let m = VirtualMotive::new(q, terms).unwrap();
        if m.total_degree() <= 4 && m.terms().any(|(o, _)| !o.poly().is_integral()) {
            return m;
        }
    }
}
