use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::Serialize;

use super::CountSequence;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CongruenceRow {
    pub n: u32,
    #[serde(with = "crate::report::json_bigint")]
    pub a: BigInt,
    #[serde(with = "crate::report::json_bigint")]
    pub b: BigInt,
    #[serde(with = "crate::report::json_bigint")]
    pub diff: BigInt,
    /// `q^{kappa * n}`.
    #[serde(with = "crate::report::json_bigint")]
    pub modulus: BigInt,
    /// `diff mod modulus`, in `[0, modulus)`.
    #[serde(with = "crate::report::json_bigint")]
    pub residue: BigInt,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CongruenceReport {
    pub q: u64,
    pub kappa: u32,
    pub rows: Vec<CongruenceRow>,
    pub first_failure: Option<u32>,
}

impl CongruenceReport {
    pub fn all_pass(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// Checks `N_n(A) = N_n(B) mod q^{kappa n}` for every `n`.
pub fn congruence_check(
    a: &CountSequence,
    b: &CountSequence,
    kappa: u32,
) -> Result<CongruenceReport> {
    if a.q != b.q {
        return Err(Error::BaseMismatch(format!("q = {} vs q = {}", a.q, b.q)));
    }
    if a.len() != b.len() {
        return Err(Error::BaseMismatch(format!(
            "{} counts vs {} counts",
            a.len(),
            b.len()
        )));
    }
    if kappa == 0 {
        return Err(Error::Invalid("kappa must be positive".into()));
    }
    let rows: Vec<CongruenceRow> = a
        .counts
        .iter()
        .zip(&b.counts)
        .enumerate()
        .map(|(i, (x, y))| {
            let n = i as u32 + 1;
            let modulus = BigInt::from(a.q).pow(kappa * n);
            let diff = x - y;
            let residue = diff.mod_floor(&modulus);
            CongruenceRow {
                n,
                a: x.clone(),
                b: y.clone(),
                pass: residue == BigInt::from(0),
                diff,
                modulus,
                residue,
            }
        })
        .collect();
    let first_failure = rows.iter().find(|r| !r.pass).map(|r| r.n);
    Ok(CongruenceReport {
        q: a.q,
        kappa,
        rows,
        first_failure,
    })
}

/// `N_1 = 1 (mod q)` for a variety asserted to have trivial `CH_0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EsnaultVerdict {
    #[serde(with = "crate::report::json_bigint")]
    pub n1: BigInt,
    pub q: u64,
    #[serde(with = "crate::report::json_bigint")]
    pub residue: BigInt,
    pub pass: bool,
}

pub fn esnault_check(counts: &CountSequence) -> EsnaultVerdict {
    let q = BigInt::from(counts.q);
    let n1 = counts.get(1).clone();
    let residue = n1.mod_floor(&q);
    EsnaultVerdict {
        pass: residue == BigInt::one() % &q,
        n1,
        q: counts.q,
        residue,
    }
}
