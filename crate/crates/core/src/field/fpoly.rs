//! Dense univariate polynomials over a prime field `F_p`, stored as
//! little-endian coefficient vectors with no trailing zeros.
//!
//! These are the building blocks for irreducibility testing of field moduli
//! and for the modular factorization stage used when factoring over Q.

pub(crate) type FPoly = Vec<u64>;

#[inline]
pub(crate) fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn powmod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

pub(crate) fn invmod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    powmod(a, p - 2, p)
}

pub(crate) fn trim(f: &mut FPoly) {
    while f.last() == Some(&0) {
        f.pop();
    }
}

pub(crate) fn degree(f: &[u64]) -> Option<usize> {
    if f.is_empty() {
        None
    } else {
        Some(f.len() - 1)
    }
}

#[cfg(test)]
pub(crate) fn add(a: &[u64], b: &[u64], p: u64) -> FPoly {
    let n = a.len().max(b.len());
    let mut out: FPoly = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + y) % p
        })
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn sub(a: &[u64], b: &[u64], p: u64) -> FPoly {
    let n = a.len().max(b.len());
    let mut out: FPoly = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn scale(a: &[u64], c: u64, p: u64) -> FPoly {
    let mut out: FPoly = a.iter().map(|&x| mulmod(x, c, p)).collect();
    trim(&mut out);
    out
}

pub(crate) fn mul(a: &[u64], b: &[u64], p: u64) -> FPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulmod(x, y, p)) % p;
        }
    }
    trim(&mut out);
    out
}

/// Quotient and remainder of `a` by a nonzero `b`.
pub(crate) fn divrem(a: &[u64], b: &[u64], p: u64) -> (FPoly, FPoly) {
    assert!(!b.is_empty(), "division by the zero polynomial");
    let mut r: FPoly = a.to_vec();
    trim(&mut r);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead_inv = invmod(*b.last().unwrap(), p);
    let db = b.len() - 1;
    let mut q = vec![0u64; r.len() - db];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = mulmod(*r.last().unwrap(), lead_inv, p);
        q[shift] = c;
        for (j, &bj) in b.iter().enumerate() {
            let t = mulmod(c, bj, p);
            r[shift + j] = (r[shift + j] + p - t) % p;
        }
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

pub(crate) fn rem(a: &[u64], b: &[u64], p: u64) -> FPoly {
    divrem(a, b, p).1
}

pub(crate) fn monic(a: &[u64], p: u64) -> FPoly {
    match a.last() {
        None => Vec::new(),
        Some(&lc) => scale(a, invmod(lc, p), p),
    }
}

pub(crate) fn gcd(a: &[u64], b: &[u64], p: u64) -> FPoly {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    monic(&x, p)
}

/// Extended Euclid: returns `(g, s, t)` with `s*a + t*b = g`, `g` monic.
pub(crate) fn ext_gcd(a: &[u64], b: &[u64], p: u64) -> (FPoly, FPoly, FPoly) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    trim(&mut r0);
    trim(&mut r1);
    let (mut s0, mut s1): (FPoly, FPoly) = (vec![1], Vec::new());
    let (mut t0, mut t1): (FPoly, FPoly) = (Vec::new(), vec![1]);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1, p);
        let s2 = sub(&s0, &mul(&q, &s1, p), p);
        let t2 = sub(&t0, &mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    match r0.last() {
        None => (r0, s0, t0),
        Some(&lc) => {
            let inv = invmod(lc, p);
            (scale(&r0, inv, p), scale(&s0, inv, p), scale(&t0, inv, p))
        }
    }
}

pub(crate) fn mulrem(a: &[u64], b: &[u64], m: &[u64], p: u64) -> FPoly {
    rem(&mul(a, b, p), m, p)
}

/// `base^exp mod m`, with an arbitrary-size exponent given as big-endian bits.
pub(crate) fn powrem_u128(base: &[u64], mut exp: u128, m: &[u64], p: u64) -> FPoly {
    let mut acc: FPoly = rem(&[1], m, p);
    let mut b = rem(base, m, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulrem(&acc, &b, m, p);
        }
        b = mulrem(&b, &b, m, p);
        exp >>= 1;
    }
    acc
}

/// `x^(p^k) mod m` by repeated p-th powering.
pub(crate) fn x_pow_p_pow(k: usize, m: &[u64], p: u64) -> FPoly {
    let mut cur = rem(&[0, 1], m, p);
    for _ in 0..k {
        cur = powrem_u128(&cur, p as u128, m, p);
    }
    cur
}

pub(crate) fn derivative(a: &[u64], p: u64) -> FPoly {
    let mut out: FPoly = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| mulmod(c, i as u64 % p, p))
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin's irreducibility test for a monic polynomial over `F_p`.
pub(crate) fn is_irreducible(f: &[u64], p: u64) -> bool {
    let Some(n) = degree(f) else { return false };
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let x: FPoly = vec![0, 1];
    if sub(&x_pow_p_pow(n, f, p), &rem(&x, f, p), p) != Vec::<u64>::new() {
        return false;
    }
    prime_factors(n as u64).into_iter().all(|r| {
        let h = sub(&x_pow_p_pow(n / r as usize, f, p), &rem(&x, f, p), p);
        gcd(&h, f, p) == vec![1]
    })
}

/// Distinct-degree factorization of a squarefree monic polynomial.
/// Returns pairs `(product of all irreducible factors of degree d, d)`.
pub(crate) fn distinct_degree(f: &[u64], p: u64) -> Vec<(FPoly, usize)> {
    let mut out = Vec::new();
    let mut rest = monic(f, p);
    let mut h = rem(&[0, 1], &rest, p);
    let mut d = 0;
    while degree(&rest).unwrap_or(0) >= 2 * (d + 1) {
        d += 1;
        h = powrem_u128(&h, p as u128, &rest, p);
        let g = gcd(&sub(&h, &[0, 1], p), &rest, p);
        if g.len() > 1 {
            out.push((g.clone(), d));
            rest = divrem(&rest, &g, p).0;
            h = rem(&h, &rest, p);
        }
    }
    if degree(&rest).unwrap_or(0) >= 1 {
        let dr = degree(&rest).unwrap();
        out.push((rest, dr));
    }
    out
}

/// Cantor–Zassenhaus equal-degree splitting for odd `p`; deterministic.
pub(crate) fn equal_degree(f: &[u64], d: usize, p: u64) -> Vec<FPoly> {
    let n = degree(f).unwrap_or(0);
    if n <= d {
        return vec![monic(f, p)];
    }
    debug_assert!(p % 2 == 1);
    let exp: u128 = (p as u128).pow(d as u32).saturating_sub(1) / 2;
    let mut state: u64 = 0x9E37_79B9_7F4A_7C15;
    loop {
        // xorshift-driven pseudo-random polynomial of degree < n
        let a: FPoly = {
            let mut v: FPoly = (0..n)
                .map(|_| {
                    state ^= state << 13;
                    state ^= state >> 7;
                    state ^= state << 17;
                    state % p
                })
                .collect();
            trim(&mut v);
            v
        };
        if a.len() < 2 {
            continue;
        }
        let b = sub(&powrem_u128(&a, exp, f, p), &[1], p);
        let g = gcd(&b, f, p);
        let dg = degree(&g).unwrap_or(0);
        if dg > 0 && dg < n {
            let other = divrem(f, &g, p).0;
            let mut out = equal_degree(&g, d, p);
            out.extend(equal_degree(&monic(&other, p), d, p));
            return out;
        }
    }
}

/// Full factorization of a squarefree monic polynomial over odd `F_p`
/// into monic irreducibles, sorted for determinism.
pub(crate) fn factor_squarefree(f: &[u64], p: u64) -> Vec<FPoly> {
    let mut out = Vec::new();
    for (g, d) in distinct_degree(f, p) {
        out.extend(equal_degree(&g, d, p));
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}
