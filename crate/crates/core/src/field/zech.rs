//! Discrete-log ("Zech logarithm") tables for fast arithmetic in the
//! counting loop.
//!
//! Elements are encoded as `u32` codes: `0` is zero and `k + 1` is `g^k` for
//! a fixed primitive element `g`. Multiplication is addition of logs and
//! addition goes through the table `Z(k) = log(1 + g^k)`.

use super::{fpoly, ExtField};
use crate::error::{Error, Result};

/// Default upper bound on the size of a field for which tables are built.
pub const DEFAULT_TABLE_CAP: u64 = 1 << 22;

#[derive(Debug, Clone)]
pub struct LogField {
    size: u64,
    order: u32,
    characteristic: u64,
    /// `zech[k]` is the code of `1 + g^k`.
    zech: Vec<u32>,
    /// Code of the prime-field element `c` for `c < p`.
    prime_codes: Vec<u32>,
    /// Field index (base-p digits) of `g^k`.
    exp_index: Vec<u32>,
}

impl LogField {
    pub fn new(field: &ExtField, cap: u64) -> Result<Self> {
        let size = field.size();
        if size > cap {
            return Err(Error::FieldCapExceeded {
                size: size as u128,
                cap,
            });
        }
        let p = field.characteristic();
        let order = (size - 1) as u32;
        let g = primitive_element(field);

        let mut exp_index = Vec::with_capacity(order as usize);
        let mut log_of = vec![u32::MAX; size as usize];
        let mut cur: Vec<u64> = vec![1];
        for k in 0..order {
            let idx = poly_index(&cur, p);
            exp_index.push(idx as u32);
            log_of[idx as usize] = k;
            cur = fpoly::mulrem(&cur, &g, field.modulus(), p);
        }

        let code_of = |idx: u64| -> u32 {
            if idx == 0 {
                0
            } else {
                log_of[idx as usize] + 1
            }
        };
        let zech = exp_index
            .iter()
            .map(|&idx| {
                let idx = idx as u64;
                let c0 = idx % p;
                code_of(idx - c0 + (c0 + 1) % p)
            })
            .collect();
        let prime_codes = (0..p).map(code_of).collect();
        Ok(LogField {
            size,
            order,
            characteristic: p,
            zech,
            prime_codes,
            exp_index,
        })
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    /// Code of the integer `c` reduced into the prime subfield.
    #[inline]
    pub fn from_int(&self, c: i64) -> u32 {
        self.prime_codes[c.rem_euclid(self.characteristic as i64) as usize]
    }

    /// Field index (see [`ExtField::from_index`]) of a code.
    pub fn index_of(&self, code: u32) -> u64 {
        if code == 0 {
            0
        } else {
            self.exp_index[(code - 1) as usize] as u64
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let s = (a - 1) as u64 + (b - 1) as u64;
        (s % self.order as u64) as u32 + 1
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if a == 0 {
            return b;
        }
        if b == 0 {
            return a;
        }
        let (la, lb) = (a - 1, b - 1);
        let d = if lb >= la { lb - la } else { lb + self.order - la };
        let z = self.zech[d as usize];
        if z == 0 {
            return 0;
        }
        let s = la as u64 + (z - 1) as u64;
        (s % self.order as u64) as u32 + 1
    }

    /// Log of a nonzero code.
    #[inline]
    pub fn log(&self, code: u32) -> u32 {
        debug_assert!(code != 0);
        code - 1
    }

    #[inline]
    pub fn order(&self) -> u32 {
        self.order
    }
}

fn poly_index(f: &[u64], p: u64) -> u64 {
    f.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Smallest-index element of multiplicative order `|F| - 1`.
fn primitive_element(field: &ExtField) -> Vec<u64> {
    let p = field.characteristic();
    let order = field.size() - 1;
    let factors = fpoly::prime_factors(order);
    let m = field.modulus();
    for idx in 1..field.size() {
        let mut g: Vec<u64> = field.from_index(idx).coeffs().iter().map(|&c| c as u64).collect();
        fpoly::trim(&mut g);
        let primitive = factors
            .iter()
            .all(|&r| fpoly::powrem_u128(&g, (order / r) as u128, m, p) != vec![1]);
        if primitive {
            return g;
        }
    }
    // F_2: the only nonzero element is 1
    vec![1]
}
