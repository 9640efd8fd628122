//! Prime fields and their extensions with dense coefficient representation.
//!
//! `F_{p^e}` is `F_p[x]/(m)` where `m` is the first monic irreducible of
//! degree `e` when monic polynomials are ordered by `sum c_i p^i` (constant
//! term least significant). The choice is deterministic, so count tables
//! are reproducible without a Conway polynomial database.

pub(crate) mod fpoly;
mod projective;
pub(crate) mod zech;

pub use projective::{enumerate_projective, projective_size, ProjectivePoints};
pub use zech::LogField;

use crate::error::{Error, Result};

/// Default cap on the extension degree accepted by [`ExtField::new`].
pub const DEFAULT_DEGREE_CAP: usize = 16;

/// Largest accepted field size `p^e`.
pub const MAX_FIELD_SIZE: u64 = 1 << 31;

/// A prime `2 <= p < 2^31`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeModulus(u32);

impl PrimeModulus {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeModulus(p as u32))
    }

    pub fn get(self) -> u64 {
        self.0 as u64
    }
}

/// Deterministic trial-division primality test; inputs are below 2^31 or
/// otherwise small enough for `sqrt(n)` steps.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Splits `q = p^f` into `(p, f)`.
pub fn prime_power(q: u64) -> Result<(PrimeModulus, u32)> {
    if q < 2 {
        return Err(Error::NotPrimePower(q));
    }
    let p = fpoly::prime_factors(q);
    if p.len() != 1 {
        return Err(Error::NotPrimePower(q));
    }
    let prime = PrimeModulus::new(p[0]).map_err(|_| Error::NotPrimePower(q))?;
    let mut f = 0;
    let mut r = q;
    while r > 1 {
        r /= p[0];
        f += 1;
    }
    Ok((prime, f))
}

/// `F_{p^e}` with its canonical modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtField {
    p: PrimeModulus,
    degree: usize,
    /// Monic modulus, little-endian, length `degree + 1`.
    modulus: Vec<u64>,
}

/// An element of some [`ExtField`]: `degree` residues in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FFElem {
    p: u32,
    coeffs: Vec<u32>,
}

impl FFElem {
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

impl ExtField {
    pub fn new(p: u64, degree: usize) -> Result<Self> {
        Self::with_cap(p, degree, DEFAULT_DEGREE_CAP)
    }

    pub fn with_cap(p: u64, degree: usize, cap: usize) -> Result<Self> {
        let p = PrimeModulus::new(p)?;
        if degree == 0 || degree > cap {
            return Err(Error::DegreeCapExceeded { degree, cap });
        }
        let size = (p.get() as u128).checked_pow(degree as u32);
        match size {
            Some(s) if s <= MAX_FIELD_SIZE as u128 => {}
            _ => {
                return Err(Error::FieldCapExceeded {
                    size: size.unwrap_or(u128::MAX),
                    cap: MAX_FIELD_SIZE,
                })
            }
        }
        let modulus = canonical_modulus(p.get(), degree);
        Ok(ExtField { p, degree, modulus })
    }

    pub fn characteristic(&self) -> u64 {
        self.p.get()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Number of elements `p^e`.
    pub fn size(&self) -> u64 {
        self.p.get().pow(self.degree as u32)
    }

    /// Canonical modulus, constant term first, monic.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&self) -> FFElem {
        FFElem {
            p: self.p.0,
            coeffs: vec![0; self.degree],
        }
    }

    pub fn one(&self) -> FFElem {
        self.from_int(1)
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, c: i64) -> FFElem {
        let mut e = self.zero();
        e.coeffs[0] = c.rem_euclid(self.p.get() as i64) as u32;
        e
    }

    /// The class of `x`, a generator of the extension (equal to 0 when e = 1).
    pub fn generator(&self) -> FFElem {
        if self.degree == 1 {
            return self.zero();
        }
        let mut e = self.zero();
        e.coeffs[1] = 1;
        e
    }

    pub fn element(&self, coeffs: &[u64]) -> Result<FFElem> {
        if coeffs.len() != self.degree {
            return Err(Error::FieldMismatch);
        }
        let p = self.p.get();
        Ok(FFElem {
            p: self.p.0,
            coeffs: coeffs.iter().map(|&c| (c % p) as u32).collect(),
        })
    }

    /// Element whose coefficients are the base-`p` digits of `index`.
    pub fn from_index(&self, mut index: u64) -> FFElem {
        let p = self.p.get();
        let coeffs = (0..self.degree)
            .map(|_| {
                let c = index % p;
                index /= p;
                c as u32
            })
            .collect();
        FFElem { p: self.p.0, coeffs }
    }

    pub fn to_index(&self, a: &FFElem) -> u64 {
        let p = self.p.get();
        a.coeffs.iter().rev().fold(0u64, |acc, &c| acc * p + c as u64)
    }

    fn check(&self, a: &FFElem) -> Result<()> {
        if a.p != self.p.0 || a.coeffs.len() != self.degree {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    pub fn add(&self, a: &FFElem, b: &FFElem) -> Result<FFElem> {
        self.check(a)?;
        self.check(b)?;
        let p = self.p.0 as u64;
        Ok(FFElem {
            p: self.p.0,
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(&x, &y)| ((x as u64 + y as u64) % p) as u32)
                .collect(),
        })
    }

    pub fn neg(&self, a: &FFElem) -> Result<FFElem> {
        self.check(a)?;
        let p = self.p.0 as u64;
        Ok(FFElem {
            p: self.p.0,
            coeffs: a
                .coeffs
                .iter()
                .map(|&x| ((p - x as u64) % p) as u32)
                .collect(),
        })
    }

    pub fn sub(&self, a: &FFElem, b: &FFElem) -> Result<FFElem> {
        self.add(a, &self.neg(b)?)
    }

    pub fn mul(&self, a: &FFElem, b: &FFElem) -> Result<FFElem> {
        self.check(a)?;
        self.check(b)?;
        let p = self.p.get();
        let fa: Vec<u64> = a.coeffs.iter().map(|&c| c as u64).collect();
        let fb: Vec<u64> = b.coeffs.iter().map(|&c| c as u64).collect();
        let r = fpoly::mulrem(&fa, &fb, &self.modulus, p);
        Ok(self.elem_of_poly(&r))
    }

    pub fn pow(&self, a: &FFElem, mut exp: u128) -> Result<FFElem> {
        self.check(a)?;
        let mut acc = self.one();
        let mut base = a.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base)?;
            }
            base = self.mul(&base, &base)?;
            exp >>= 1;
        }
        Ok(acc)
    }

    pub fn inv(&self, a: &FFElem) -> Result<FFElem> {
        self.check(a)?;
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let fa: Vec<u64> = a.coeffs.iter().map(|&c| c as u64).collect();
        let (g, s, _) = fpoly::ext_gcd(&fa, &self.modulus, self.p.get());
        debug_assert_eq!(g, vec![1]);
        Ok(self.elem_of_poly(&fpoly::rem(&s, &self.modulus, self.p.get())))
    }

    pub fn div(&self, a: &FFElem, b: &FFElem) -> Result<FFElem> {
        self.mul(a, &self.inv(b)?)
    }

    /// The absolute Frobenius `a -> a^p`.
    pub fn frobenius(&self, a: &FFElem) -> Result<FFElem> {
        self.pow(a, self.p.get() as u128)
    }

    fn elem_of_poly(&self, r: &[u64]) -> FFElem {
        let mut coeffs = vec![0u32; self.degree];
        for (i, &c) in r.iter().enumerate() {
            coeffs[i] = c as u32;
        }
        FFElem {
            p: self.p.0,
            coeffs,
        }
    }

    /// Iterates over all elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = FFElem> + '_ {
        (0..self.size()).map(move |i| self.from_index(i))
    }
}

/// First monic irreducible of degree `e` over `F_p` in the canonical scan
/// order. For `e = 1` this is `x`.
fn canonical_modulus(p: u64, e: usize) -> Vec<u64> {
    // Lower coefficients c_0..c_{e-1} read as base-p digits of a counter.
    let mut lower = vec![0u64; e];
    loop {
        let mut f = lower.clone();
        f.push(1);
        if fpoly::is_irreducible(&f, p) {
            return f;
        }
        // increment base-p counter, constant term least significant
        let mut i = 0;
        loop {
            lower[i] += 1;
            if lower[i] < p {
                break;
            }
            lower[i] = 0;
            i += 1;
            assert!(i < e, "no irreducible polynomial found");
        }
    }
}
