//! Factorization of rational polynomials into monic irreducibles.
//!
//! Squarefree decomposition over Q, then for each squarefree part:
//! factorization modulo a small odd prime, Hensel lifting to a power of
//! that prime exceeding twice the Mignotte coefficient bound, and exhaustive
//! recombination of the lifted factors. The recombination search is what
//! certifies irreducibility of each returned factor.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::RatPoly;
use crate::error::{Error, Result};
use crate::field::fpoly::{self, FPoly};

/// Default degree cap for [`factor_rational`]; `WEILMOT_DEGREE_CAP`
/// overrides it.
pub const DEFAULT_FACTOR_CAP: usize = 16;

pub fn degree_cap() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("WEILMOT_DEGREE_CAP")
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .filter(|&c: &usize| c >= 1)
            .unwrap_or(DEFAULT_FACTOR_CAP)
    })
}

/// Inputs above this degree are refused outright.
const MAX_INPUT_DEGREE: usize = 4096;

/// Factors `f` into `(monic irreducible, multiplicity)` pairs, sorted by
/// degree and then coefficients. The product of the factors equals `f`
/// divided by its leading coefficient. Constants factor as the empty list.
pub fn factor_rational(f: &RatPoly) -> Result<Vec<(RatPoly, u32)>> {
    factor_rational_with_cap(f, degree_cap())
}

/// `cap` bounds the degree of each squarefree part, which is where
/// recombination cost grows.
pub fn factor_rational_with_cap(f: &RatPoly, cap: usize) -> Result<Vec<(RatPoly, u32)>> {
    if f.is_zero() {
        return Err(Error::Invalid("cannot factor the zero polynomial".into()));
    }
    if f.degree() > MAX_INPUT_DEGREE {
        return Err(Error::FactorizationCapExceeded {
            degree: f.degree(),
            cap: MAX_INPUT_DEGREE,
        });
    }
    let parts = squarefree_decomposition(&f.monic());
    if let Some((part, _)) = parts.iter().find(|(p, _)| p.degree() > cap) {
        return Err(Error::FactorizationCapExceeded {
            degree: part.degree(),
            cap,
        });
    }
    let mut out = Vec::new();
    for (part, mult) in parts {
        for g in factor_squarefree_integer(&part.primitive_part()) {
            out.push((RatPoly::from_bigints(&g).monic(), mult));
        }
    }
    out.sort();
    Ok(out)
}

/// Yun's algorithm on a monic polynomial: returns `(a_i, i)` with `a_i`
/// squarefree, pairwise coprime and `f = prod a_i^i`.
fn squarefree_decomposition(f: &RatPoly) -> Vec<(RatPoly, u32)> {
    let mut out = Vec::new();
    if f.degree() == 0 {
        return out;
    }
    let fp = f.derivative();
    let a0 = f.gcd(&fp);
    let mut b = f.divrem(&a0).unwrap().0;
    let mut c = fp.divrem(&a0).unwrap().0;
    let mut d = c.sub(&b.derivative());
    let mut i = 1;
    while b.degree() > 0 {
        let a = b.gcd(&d);
        b = b.divrem(&a).unwrap().0;
        c = d.divrem(&a).unwrap().0;
        d = c.sub(&b.derivative());
        if a.degree() > 0 {
            out.push((a, i));
        }
        i += 1;
    }
    out
}

type ZPoly = Vec<BigInt>;

fn ztrim(f: &mut ZPoly) {
    while f.last().is_some_and(|c| c.is_zero()) {
        f.pop();
    }
}

fn zmul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    ztrim(&mut out);
    out
}

fn zmod(a: &[BigInt], m: &BigInt) -> ZPoly {
    let mut out: ZPoly = a.iter().map(|c| c.mod_floor(m)).collect();
    ztrim(&mut out);
    out
}

fn zsymmetric(a: &[BigInt], m: &BigInt) -> ZPoly {
    let half = m / 2;
    let mut out: ZPoly = a
        .iter()
        .map(|c| {
            let r = c.mod_floor(m);
            if r > half {
                r - m
            } else {
                r
            }
        })
        .collect();
    ztrim(&mut out);
    out
}

fn to_fp(a: &[BigInt], p: u64) -> FPoly {
    let pb = BigInt::from(p);
    let mut out: FPoly = a
        .iter()
        .map(|c| c.mod_floor(&pb).to_u64().unwrap())
        .collect();
    fpoly::trim(&mut out);
    out
}

fn from_fp(a: &[u64]) -> ZPoly {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

/// Exact quotient `a / b` over Z, if it exists.
fn zdiv_exact(a: &[BigInt], b: &[BigInt]) -> Option<ZPoly> {
    if b.is_empty() || a.len() < b.len() {
        return None;
    }
    let lb = b.last().unwrap();
    let mut r: ZPoly = a.to_vec();
    let db = b.len() - 1;
    let mut q = vec![BigInt::zero(); a.len() - db];
    for k in (0..q.len()).rev() {
        let (c, rem) = r[k + db].div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                r[k + j] -= &c * bj;
            }
        }
        q[k] = c;
    }
    r.iter().all(|c| c.is_zero()).then_some(q)
}

fn primitive(mut f: ZPoly) -> ZPoly {
    ztrim(&mut f);
    let content = f.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() {
        return f;
    }
    let sign = if f.last().unwrap().is_negative() { -BigInt::one() } else { BigInt::one() };
    f.into_iter().map(|c| c / &content * &sign).collect()
}

/// Odd primes not dividing the leading coefficient for which `f` stays
/// squarefree.
fn good_primes(f: &[BigInt]) -> impl Iterator<Item = u64> + '_ {
    let lc = f.last().unwrap().clone();
    (3u64..)
        .filter(|&p| crate::field::is_prime(p))
        .filter(move |&p| !(&lc % BigInt::from(p)).is_zero())
        .filter(move |&p| {
            let fp = to_fp(f, p);
            let g = fpoly::gcd(&fp, &fpoly::derivative(&fp, p), p);
            g == vec![1]
        })
}

/// Two-factor Hensel lifting: `f = g h (mod p)` with `g` monic and
/// `lc(h) = lc(f)`; returns `(G, H)` with `f = G H (mod p^k)`.
fn hensel_lift(f: &[BigInt], g: &[u64], h: &[u64], p: u64, k: u32) -> (ZPoly, ZPoly) {
    let (one, _s, t) = fpoly::ext_gcd(g, h, p);
    debug_assert_eq!(one, vec![1]);
    let pb = BigInt::from(p);
    let mut gz = from_fp(g);
    let mut hz = from_fp(h);
    // integer leading coefficient of H is lc(f) exactly
    let lc = f.last().unwrap().clone();
    *hz.last_mut().unwrap() = lc;
    let mut m = pb.clone();
    for _ in 1..k {
        let mut diff: ZPoly = f.to_vec();
        let gh = zmul(&gz, &hz);
        diff.resize(diff.len().max(gh.len()), BigInt::zero());
        for (i, c) in gh.into_iter().enumerate() {
            diff[i] -= c;
        }
        let e: ZPoly = diff.iter().map(|c| c / &m).collect();
        let e = to_fp(&e, p);
        let te = fpoly::mul(&t, &e, p);
        let (_, dg) = fpoly::divrem(&te, g, p);
        let rest = fpoly::sub(&e, &fpoly::mul(&dg, h, p), p);
        let (dh, r) = fpoly::divrem(&rest, g, p);
        debug_assert!(r.is_empty());
        for (i, c) in dg.iter().enumerate() {
            gz[i] += &m * BigInt::from(*c);
        }
        for (i, c) in dh.iter().enumerate() {
            hz[i] += &m * BigInt::from(*c);
        }
        m *= &pb;
        gz = zmod(&gz, &m);
        let top = hz.last().unwrap().clone();
        hz = zmod(&hz, &m);
        hz.resize(h.len(), BigInt::zero());
        *hz.last_mut().unwrap() = top;
    }
    (gz, hz)
}

/// Factors a squarefree primitive integer polynomial with positive leading
/// coefficient into primitive irreducibles.
fn factor_squarefree_integer(f: &[BigInt]) -> Vec<ZPoly> {
    let mut f: ZPoly = f.to_vec();
    ztrim(&mut f);
    let mut out = Vec::new();
    if f.len() <= 1 {
        return out;
    }
    if f[0].is_zero() {
        // squarefree, so x divides f exactly once
        out.push(vec![BigInt::zero(), BigInt::one()]);
        f.remove(0);
    }
    if f.len() <= 2 {
        if f.len() == 2 {
            out.push(primitive(f));
        }
        return out;
    }
    let d = f.len() - 1;

    // pick the prime giving the fewest modular factors among a few candidates
    let (p, factors) = good_primes(&f)
        .take(5)
        .map(|p| {
            let fp = fpoly::monic(&to_fp(&f, p), p);
            (p, fpoly::factor_squarefree(&fp, p))
        })
        .min_by_key(|(_, fs)| fs.len())
        .expect("infinitely many good primes");
    if factors.len() == 1 {
        out.push(f);
        return out;
    }

    // Mignotte: coefficients of any factor are at most 2^d * ||f||_2
    let norm2: BigInt = f.iter().map(|c| c * c).sum();
    let bound = (BigInt::one() << d) * (norm2.sqrt() + 1u32) * f.last().unwrap().abs();
    let target = bound * 2u32;
    let mut k = 1u32;
    let mut pk = BigInt::from(p);
    while pk <= target {
        pk *= p;
        k += 1;
    }

    // multifactor lifting by successive splits
    let lc_p = to_fp(&[f.last().unwrap().clone()], p)[0];
    let mut lifted: Vec<ZPoly> = Vec::with_capacity(factors.len());
    let mut current: ZPoly = f.clone();
    for i in 0..factors.len() - 1 {
        let g = &factors[i];
        let h = factors[i + 1..]
            .iter()
            .fold(vec![lc_p], |acc, u| fpoly::mul(&acc, u, p));
        let (gz, hz) = hensel_lift(&current, g, &h, p, k);
        lifted.push(gz);
        current = hz;
    }
    // last factor: make monic mod p^k
    let lc = f.last().unwrap().clone();
    let lc_inv = lc.modinv(&pk).expect("p does not divide lc");
    lifted.push(zmod(&current.iter().map(|c| c * &lc_inv).collect::<ZPoly>(), &pk));

    // recombination
    let mut remaining: Vec<usize> = (0..lifted.len()).collect();
    let mut rest = f;
    let mut s = 1;
    'outer: while 2 * s <= remaining.len() {
        for subset in combinations(remaining.len(), s) {
            let lc_rest = rest.last().unwrap().clone();
            let prod = subset.iter().fold(vec![lc_rest], |acc, &i| {
                zmod(&zmul(&acc, &lifted[remaining[i]]), &pk)
            });
            let cand = primitive(zsymmetric(&prod, &pk));
            if cand.len() < 2 {
                continue;
            }
            if !(&rest[0] % &cand[0]).is_zero() {
                continue;
            }
            if let Some(q) = zdiv_exact(&rest, &cand) {
                out.push(cand);
                rest = primitive(q);
                let chosen: Vec<usize> = subset.iter().map(|&i| remaining[i]).collect();
                remaining.retain(|i| !chosen.contains(i));
                continue 'outer;
            }
        }
        s += 1;
    }
    if rest.len() > 1 {
        out.push(rest);
    }
    out
}

/// Index subsets of `{0..n}` of size `k` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < n - k + i {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// True if `f` is irreducible over Q (degree at least 1).
pub fn is_irreducible(f: &RatPoly) -> Result<bool> {
    if f.degree() == 0 {
        return Ok(false);
    }
    let fs = factor_rational(f)?;
    Ok(fs.len() == 1 && fs[0].1 == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fac(c: &[i64]) -> Vec<(Vec<i64>, u32)> {
        factor_rational(&RatPoly::from_ints(c))
            .unwrap()
            .into_iter()
            .map(|(g, m)| {
                (
                    g.coeffs()
                        .iter()
                        .map(|c| c.to_integer().to_i64().unwrap())
                        .collect(),
                    m,
                )
            })
            .collect()
    }

    #[test]
    fn small_examples() {
        assert_eq!(fac(&[-1, 0, 1]), vec![(vec![-1, 1], 1), (vec![1, 1], 1)]);
        assert_eq!(fac(&[-4, 0, 0, 0, 1]), vec![(vec![-2, 0, 1], 1), (vec![2, 0, 1], 1)]);
        assert_eq!(fac(&[2, 0, 1]), vec![(vec![2, 0, 1], 1)]);
        // (x-1)^2 (x+1)^2
        assert_eq!(fac(&[1, 0, -2, 0, 1]), vec![(vec![-1, 1], 2), (vec![1, 1], 2)]);
    }

    #[test]
    fn swinnerton_dyer_like_many_modular_factors() {
        // x^4 - 10x^2 + 1 is irreducible but splits modulo every prime
        assert_eq!(fac(&[1, 0, -10, 0, 1]), vec![(vec![1, 0, -10, 0, 1], 1)]);
        // x^4 + 1 likewise
        assert_eq!(fac(&[1, 0, 0, 0, 1]), vec![(vec![1, 0, 0, 0, 1], 1)]);
    }

    #[test]
    fn non_monic_and_rational_input() {
        // 6x^2 - 5x + 1 = (2x - 1)(3x - 1)
        let f = RatPoly::from_ints(&[1, -5, 6]);
        let fs = factor_rational(&f).unwrap();
        assert_eq!(fs.len(), 2);
        assert_eq!(fs[0].0.to_string(), "x - (1/3)");
        assert_eq!(fs[1].0.to_string(), "x - (1/2)");
    }

    #[test]
    fn cyclotomic_product() {
        // x^12 - 1 has six cyclotomic factors
        let mut c = vec![0i64; 13];
        c[0] = -1;
        c[12] = 1;
        let fs = fac(&c);
        assert_eq!(fs.len(), 6);
        assert!(fs.iter().all(|(_, m)| *m == 1));
    }

    #[test]
    fn cap_enforced() {
        let f = RatPoly::from_ints(&[1, 0, 0, 0, 0, 0, 0, 0, 0, 1]);
        assert_eq!(
            factor_rational_with_cap(&f, 8),
            Err(Error::FactorizationCapExceeded { degree: 9, cap: 8 })
        );
        // (x^2 + 1)^5 has squarefree part of degree 2
        let g = RatPoly::from_ints(&[1, 0, 1]).pow(5);
        assert_eq!(factor_rational_with_cap(&g, 8).unwrap(), vec![(RatPoly::from_ints(&[1, 0, 1]), 5)]);
    }

    #[test]
    fn combinations_enumerate() {
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
    }
}
