use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::factor::{factor_rational, is_irreducible};
use super::ratpoly::{pow_rat, rat, RatPoly};
use crate::error::{Error, Result};

/// The Galois orbit of an algebraic number, represented by its minimal
/// polynomial over Q: monic, irreducible, with nonzero constant term.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NumberOrbit(RatPoly);

impl NumberOrbit {
    /// Validates a minimal polynomial. Irreducibility is certified by
    /// factoring.
    pub fn new(f: RatPoly) -> Result<Self> {
        if f.degree() == 0 || !f.is_monic() {
            return Err(Error::Invalid(format!("orbit polynomial {f} must be monic of degree >= 1")));
        }
        if f.coeff(0).is_zero() {
            return Err(Error::Invalid(format!("orbit polynomial {f} has the root 0")));
        }
        if !is_irreducible(&f)? {
            return Err(Error::Invalid(format!("orbit polynomial {f} is reducible")));
        }
        Ok(NumberOrbit(f))
    }

    /// For factors produced by [`factor_rational`], which are already
    /// certified.
    pub(crate) fn from_certified(f: RatPoly) -> Self {
        debug_assert!(f.is_monic() && !f.coeff(0).is_zero());
        NumberOrbit(f)
    }

    /// The single root `c`.
    pub fn rational(c: BigRational) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::Invalid("orbit polynomial x has the root 0".into()));
        }
        Ok(NumberOrbit(RatPoly::linear_root(c)))
    }

    /// `x - q^k`, the eigenvalue of the k-th power of the Lefschetz motive.
    pub fn lefschetz(q: u64, k: u32) -> Self {
        NumberOrbit(RatPoly::linear_root(BigRational::from_integer(BigInt::from(q).pow(k))))
    }

    pub fn poly(&self) -> &RatPoly {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.degree()
    }

    pub fn into_poly(self) -> RatPoly {
        self.0
    }
}

impl std::fmt::Display for NumberOrbit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// Power sums `p_1..p_{n_max}` of the roots of a monic `f`, by Newton's
/// identities.
pub fn power_sums(f: &RatPoly, n_max: usize) -> Vec<BigRational> {
    assert!(f.is_monic() && f.degree() >= 1, "power_sums needs a monic polynomial");
    let d = f.degree();
    // f = x^d + a_{d-1} x^{d-1} + ... + a_0
    let a = |i: usize| f.coeff(i);
    let mut p: Vec<BigRational> = Vec::with_capacity(n_max);
    for k in 1..=n_max {
        let mut s = if k <= d {
            a(d - k) * rat(k as i64)
        } else {
            BigRational::zero()
        };
        for i in 1..=(k - 1).min(d) {
            s += a(d - i) * &p[k - i - 1];
        }
        p.push(-s);
    }
    p
}

/// Monic degree-`d` polynomial whose root power sums start with `sums`
/// (`d = sums.len()`).
pub fn newton_recover(sums: &[BigRational]) -> RatPoly {
    let d = sums.len();
    // coefficients a_{d-1}, a_{d-2}, ... stored as e[k] = a_{d-k}
    let mut e: Vec<BigRational> = vec![BigRational::one()];
    for k in 1..=d {
        let mut s = sums[k - 1].clone();
        for i in 1..k {
            s += &e[i] * &sums[k - i - 1];
        }
        e.push(-s / rat(k as i64));
    }
    e.reverse();
    RatPoly::new(e)
}

/// The monic polynomial whose roots are the products `w v` over roots `w`
/// of `f` and `v` of `g`, as `Res_y(f(y), y^{deg g} g(x/y))`.
///
/// The resultant is computed at `deg f * deg g + 1` integer points and
/// interpolated.
pub fn composed_product_poly(f: &RatPoly, g: &RatPoly) -> Result<RatPoly> {
    if !f.is_monic() || !g.is_monic() || f.degree() == 0 || g.degree() == 0 {
        return Err(Error::Invalid("composed product needs monic polynomials of degree >= 1".into()));
    }
    if f.coeff(0).is_zero() || g.coeff(0).is_zero() {
        return Err(Error::Invalid("composed product needs nonzero roots".into()));
    }
    let m = g.degree();
    let total = f.degree() * m;
    let xs: Vec<BigRational> = (0..=total as i64).map(rat).collect();
    let ys: Vec<BigRational> = xs
        .iter()
        .map(|x| {
            // y^m g(x/y) = sum_k g_k x^k y^{m-k}
            let mut pw = BigRational::one();
            let mut coeffs = vec![BigRational::zero(); m + 1];
            for k in 0..=m {
                coeffs[m - k] = g.coeff(k) * &pw;
                pw *= x;
            }
            f.resultant(&RatPoly::new(coeffs))
        })
        .collect();
    Ok(interpolate(&xs, &ys))
}

/// Newton divided-difference interpolation.
fn interpolate(xs: &[BigRational], ys: &[BigRational]) -> RatPoly {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    let mut out = RatPoly::constant(dd[n - 1].clone());
    for i in (0..n - 1).rev() {
        out = out
            .mul(&RatPoly::new(vec![-xs[i].clone(), BigRational::one()]))
            .add(&RatPoly::constant(dd[i].clone()));
    }
    out
}

/// Composed product factored into orbits with multiplicities.
pub fn composed_product(f: &RatPoly, g: &RatPoly) -> Result<Vec<(NumberOrbit, u32)>> {
    let h = composed_product_poly(f, g)?;
    Ok(factor_rational(&h)?
        .into_iter()
        .map(|(p, m)| (NumberOrbit::from_certified(p), m))
        .collect())
}

/// All coefficients integral, i.e. the roots are algebraic integers.
pub fn is_algebraic_integer(f: &NumberOrbit) -> bool {
    f.poly().is_integral()
}

/// `q^{-deg f} f(q x)`: the roots divided by `q`.
pub fn twist_down(f: &RatPoly, q: u64) -> RatPoly {
    let qr = BigRational::from_integer(BigInt::from(q));
    f.compose_scale(&qr).scale(&pow_rat(&qr.recip(), f.degree()))
}

/// `q^{deg f} f(x / q)`: the roots multiplied by `q^k`.
pub fn twist_up(f: &RatPoly, q: u64, k: u32) -> RatPoly {
    let qk = BigRational::from_integer(BigInt::from(q).pow(k));
    f.compose_scale(&qk.recip()).scale(&pow_rat(&qk, f.degree()))
}

/// Largest `k` such that every root divided by `q^k` is still an
/// algebraic integer.
pub fn q_divisibility_order(f: &NumberOrbit, q: u64) -> Result<u32> {
    if !is_algebraic_integer(f) {
        return Err(Error::NotIntegral(f.to_string()));
    }
    if q < 2 {
        return Err(Error::Invalid(format!("q = {q} must be at least 2")));
    }
    let mut cur = f.poly().clone();
    let mut k = 0;
    loop {
        let next = twist_down(&cur, q);
        if !next.is_integral() {
            return Ok(k);
        }
        cur = next;
        k += 1;
    }
}
