//! From point counts to a rational zeta function and on to a spectrum.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebraic::{factor_rational, NumberOrbit, RatPoly};
use crate::error::{Error, Result};
use crate::motive::{RationalZeta, VirtualMotive};
use crate::variety::CountSequence;

/// Extra verified coefficients required by [`fit_rational_auto`].
pub const AUTO_EXTRA_TERMS: usize = 3;

/// Coefficients `c_0..c_N` of `exp(sum_{n<=N} s_n t^n / n)`.
pub fn series_from_sums(sums: &[BigRational]) -> Vec<BigRational> {
    let mut c = vec![BigRational::one()];
    for k in 1..=sums.len() {
        let mut acc = BigRational::zero();
        for j in 1..=k {
            acc += &sums[j - 1] * &c[k - j];
        }
        c.push(acc / BigRational::from_integer(k.into()));
    }
    c
}

/// The zeta series of a count sequence, `N + 1` coefficients for `N` counts.
pub fn series_from_counts(counts: &CountSequence) -> Vec<BigRational> {
    let sums: Vec<BigRational> = counts
        .counts
        .iter()
        .map(|n| BigRational::from_integer(n.clone()))
        .collect();
    series_from_sums(&sums)
}

/// The rational function of smallest total degree, with numerator and
/// denominator degrees at most `max_deg`, whose expansion agrees with every
/// coefficient of `series`. Needs at least `2 max_deg + 2` coefficients.
pub fn fit_rational(series: &[BigRational], max_deg: usize) -> Result<RationalZeta> {
    let needed = 2 * max_deg + 2;
    if series.len() < needed {
        return Err(Error::InsufficientData {
            needed,
            have: series.len(),
        });
    }
    if !series[0].is_one() {
        return Err(Error::Invalid("series must start with 1".into()));
    }
    for total in 0..=2 * max_deg {
        for dd in total.saturating_sub(max_deg)..=total.min(max_deg) {
            let dn = total - dd;
            if let Some((num, den)) = try_fit(series, dn, dd) {
                return RationalZeta::new(num, den);
            }
        }
    }
    Err(Error::NoRationalFit(max_deg))
}

/// Tries degree pairs in order of total degree and accepts the first fit
/// that [`AUTO_EXTRA_TERMS`] further coefficients confirm.
pub fn fit_rational_auto(series: &[BigRational]) -> Result<RationalZeta> {
    if series.first().is_none_or(|c| !c.is_one()) {
        return Err(Error::Invalid("series must start with 1".into()));
    }
    let mut total = 0;
    while total + 1 + AUTO_EXTRA_TERMS <= series.len() {
        for dd in 0..=total {
            if let Some((num, den)) = try_fit(series, total - dd, dd) {
                return RationalZeta::new(num, den);
            }
        }
        total += 1;
    }
    Err(Error::InsufficientData {
        needed: total + 1 + AUTO_EXTRA_TERMS,
        have: series.len(),
    })
}


fn coeff(series: &[BigRational], k: isize) -> BigRational {
    if k < 0 {
        BigRational::zero()
    } else {
        series[k as usize].clone()
    }
}

/// Solves for a denominator of degree `dd` (constant term 1) from the
/// coefficients `dn + 1 ..= dn + dd`, then checks the whole series.
fn try_fit(series: &[BigRational], dn: usize, dd: usize) -> Option<(RatPoly, RatPoly)> {
    // rows k = dn+1..=dn+dd: sum_{j=1..dd} b_j c_{k-j} = -c_k
    let mut rows: Vec<Vec<BigRational>> = (1..=dd)
        .map(|r| {
            let k = (dn + r) as isize;
            let mut row: Vec<BigRational> = (1..=dd).map(|j| coeff(series, k - j as isize)).collect();
            row.push(-coeff(series, k));
            row
        })
        .collect();
    let b = solve(&mut rows, dd)?;
    let mut den = vec![BigRational::one()];
    den.extend(b);
    let apply = |k: usize| -> BigRational {
        (0..=dd.min(k))
            .map(|j| &den[j] * &series[k - j])
            .fold(BigRational::zero(), |a, x| a + x)
    };
    let num: Vec<BigRational> = (0..=dn).map(apply).collect();
    if (dn + 1..series.len()).any(|k| !apply(k).is_zero()) {
        return None;
    }
    let (num, den) = (RatPoly::new(num), RatPoly::new(den));
    // a degenerate solution would not have the requested shape
    if num.degree() != dn || den.degree() != dd {
        return None;
    }
    Some((num, den))
}

/// Gaussian elimination on an `n x (n+1)` augmented system; `None` if the
/// matrix is singular.
fn solve(rows: &mut [Vec<BigRational>], n: usize) -> Option<Vec<BigRational>> {
    for col in 0..n {
        let pivot = (col..n).find(|&r| !rows[r][col].is_zero())?;
        rows.swap(col, pivot);
        let inv = rows[col][col].recip();
        for x in rows[col].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[col].clone();
        for (r, row) in rows.iter_mut().enumerate().take(n) {
            if r != col && !row[col].is_zero() {
                let factor = row[col].clone();
                for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x -= &factor * p;
                }
            }
        }
    }
    Some(rows.iter().map(|r| r[n].clone()).collect())
}

/// Each irreducible factor `g` of the denominator contributes the orbit of
/// the reversed polynomial `t^{deg g} g(1/t)` with positive multiplicity;
/// numerator factors contribute negatively.
pub fn spectrum_from_zeta(z: &RationalZeta, q: u64) -> Result<VirtualMotive> {
    let mut terms = Vec::new();
    for (poly, sign) in [(z.denominator(), 1i64), (z.numerator(), -1i64)] {
        if poly.degree() == 0 {
            continue;
        }
        for (g, mult) in factor_rational(poly)? {
            let orbit = NumberOrbit::new(g.reversed().monic())?;
            terms.push((orbit, sign * mult as i64));
        }
    }
    VirtualMotive::new(q, terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebraic::rat;
    use num_bigint::BigInt;

    fn counts(q: u64, xs: &[i64]) -> CountSequence {
        CountSequence::new(q, xs.iter().map(|&x| BigInt::from(x)).collect()).unwrap()
    }

    fn rats(xs: &[i64]) -> Vec<BigRational> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    fn orbit(c: &[i64]) -> NumberOrbit {
        NumberOrbit::new(RatPoly::from_ints(c)).unwrap()
    }

    #[test]
    fn series_examples() {
        assert_eq!(series_from_counts(&counts(2, &[3, 5, 9])), rats(&[1, 3, 7, 15]));
        assert_eq!(series_from_counts(&counts(2, &[0, 0])), rats(&[1, 0, 0]));
        assert_eq!(
            series_from_counts(&counts(2, &[3, 9, 9, 9, 33, 81])),
            rats(&[1, 3, 9, 21, 45, 93, 189])
        );
    }

    #[test]
    fn fit_examples() {
        let p1 = fit_rational(&series_from_counts(&counts(2, &[3, 5, 9, 17, 33])), 2).unwrap();
        assert_eq!(p1.numerator(), &RatPoly::one());
        assert_eq!(p1.denominator(), &RatPoly::from_ints(&[1, -3, 2]));

        let e = fit_rational(&series_from_counts(&counts(2, &[3, 9, 9, 9, 33, 81])), 2).unwrap();
        assert_eq!(e.numerator(), &RatPoly::from_ints(&[1, 0, 2]));
        assert_eq!(e.denominator(), &RatPoly::from_ints(&[1, -3, 2]));

        let c: Vec<i64> = (1..=7u32).map(|n| 1 + 3i64.pow(n) + 9i64.pow(n)).collect();
        let p2 = fit_rational(&series_from_counts(&counts(3, &c)), 3).unwrap();
        assert_eq!(p2.denominator(), &RatPoly::from_ints(&[1, -13, 39, -27]));
        assert_eq!(fit_rational_auto(&series_from_counts(&counts(3, &c))).unwrap(), p2);
    }

    #[test]
    fn fit_errors() {
        let s = series_from_counts(&counts(2, &[3, 9, 9]));
        assert_eq!(
            fit_rational(&s, 2),
            Err(Error::InsufficientData { needed: 6, have: 4 })
        );
        // 1 + t + 2t^2 + 3t^3 + 5t^4 + 8t^5 + 14t^6 is not rational of degree <= 2
        let s = rats(&[1, 1, 2, 3, 5, 8, 14]);
        assert_eq!(fit_rational(&s, 2), Err(Error::NoRationalFit(2)));
        // the degree-2 fit needs 3 more terms to be trusted
        let e = series_from_counts(&counts(2, &[3, 9, 9, 9, 33]));
        assert!(matches!(fit_rational_auto(&e), Err(Error::InsufficientData { .. })));
    }

    #[test]
    fn spectrum_examples() {
        let z = RationalZeta::new(RatPoly::one(), RatPoly::from_ints(&[1, -3, 2])).unwrap();
        let m = spectrum_from_zeta(&z, 2).unwrap();
        assert_eq!(m, VirtualMotive::projective_space(2, 1));

        let z = RationalZeta::new(RatPoly::from_ints(&[1, 0, 2]), RatPoly::from_ints(&[1, -3, 2]))
            .unwrap();
        let expected =
            VirtualMotive::new(2, [(orbit(&[-1, 1]), 1), (orbit(&[-2, 1]), 1), (orbit(&[2, 0, 1]), -1)])
                .unwrap();
        assert_eq!(spectrum_from_zeta(&z, 2).unwrap(), expected);

        let z = RationalZeta::new(RatPoly::one(), RatPoly::from_ints(&[1, -9])).unwrap();
        assert_eq!(spectrum_from_zeta(&z, 3).unwrap(), VirtualMotive::lefschetz_power(3, 2));
    }
}
