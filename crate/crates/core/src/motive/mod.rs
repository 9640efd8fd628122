//! Virtual motives over `F_q` modelled by their Frobenius spectra: finite
//! integer combinations of eigenvalue orbits.
//!
//! Simple motives are identified with their orbit polynomials, so two
//! simples are taken to be isomorphic exactly when their minimal
//! polynomials coincide. That identification is an assumption about the
//! underlying category, not something checked here.

mod io;
mod split;
mod zeta;

pub use io::{parse_spectrum_file, SpectrumFile, SpectrumTerm};
pub use split::{EffectivityReport, OrbitIntegrality, ProbeVerdict, Residue, SplitResult};
pub use zeta::RationalZeta;

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use crate::algebraic::{composed_product, power_sums, twist_up, NumberOrbit};
use crate::error::{Error, Result};
use crate::field::prime_power;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VirtualMotive {
    q: u64,
    terms: BTreeMap<NumberOrbit, i64>,
}

impl VirtualMotive {
    pub fn zero(q: u64) -> Self {
        VirtualMotive {
            q,
            terms: BTreeMap::new(),
        }
    }

    /// Builds a motive, merging repeated orbits and dropping zero
    /// multiplicities. `q` must be a prime power.
    pub fn new(q: u64, terms: impl IntoIterator<Item = (NumberOrbit, i64)>) -> Result<Self> {
        prime_power(q)?;
        let mut m = Self::zero(q);
        for (o, k) in terms {
            m.add_term(o, k);
        }
        Ok(m)
    }

    /// The unit motive `1 = [x - 1]`.
    pub fn unit(q: u64) -> Self {
        Self::lefschetz_power(q, 0)
    }

    /// `L^k = [x - q^k]`.
    pub fn lefschetz_power(q: u64, k: u32) -> Self {
        let mut m = Self::zero(q);
        m.add_term(NumberOrbit::lefschetz(q, k), 1);
        m
    }

    /// `h(P^n) = 1 + L + ... + L^n`.
    pub fn projective_space(q: u64, n: u32) -> Self {
        let mut m = Self::zero(q);
        for k in 0..=n {
            m.add_term(NumberOrbit::lefschetz(q, k), 1);
        }
        m
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order (degree, then coefficients).
    pub fn terms(&self) -> impl Iterator<Item = (&NumberOrbit, i64)> {
        self.terms.iter().map(|(o, &m)| (o, m))
    }

    pub fn multiplicity(&self, orbit: &NumberOrbit) -> i64 {
        self.terms.get(orbit).copied().unwrap_or(0)
    }

    /// Sum of `|m_i| deg f_i`.
    pub fn total_degree(&self) -> usize {
        self.terms
            .iter()
            .map(|(o, m)| o.degree() * m.unsigned_abs() as usize)
            .sum()
    }

    pub(crate) fn add_term(&mut self, orbit: NumberOrbit, mult: i64) {
        if mult == 0 {
            return;
        }
        let entry = self.terms.entry(orbit).or_insert(0);
        *entry += mult;
        if *entry == 0 {
            self.terms.retain(|_, m| *m != 0);
        }
    }

    fn same_base(&self, other: &Self) -> Result<()> {
        if self.q != other.q {
            return Err(Error::BaseMismatch(format!("q = {} vs q = {}", self.q, other.q)));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_base(other)?;
        let mut out = self.clone();
        for (o, m) in other.terms() {
            out.add_term(o.clone(), m);
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        VirtualMotive {
            q: self.q,
            terms: self.terms.iter().map(|(o, &m)| (o.clone(), -m)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// Ring product: orbits multiply through composed products.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        self.same_base(other)?;
        let mut out = Self::zero(self.q);
        for (f, m) in self.terms() {
            for (g, n) in other.terms() {
                for (h, k) in composed_product(f.poly(), g.poly())? {
                    out.add_term(h, m * n * k as i64);
                }
            }
        }
        Ok(out)
    }

    /// `L^k ⊗ self`, computed by scaling every eigenvalue by `q^k`.
    pub fn twist(&self, k: u32) -> Self {
        VirtualMotive {
            q: self.q,
            terms: self
                .terms
                .iter()
                .map(|(o, &m)| {
                    (NumberOrbit::from_certified(twist_up(o.poly(), self.q, k)), m)
                })
                .collect(),
        }
    }

    /// `#_n(M) = sum m_i Tr(w_i^n)`.
    pub fn sharp_n(&self, n: u32) -> BigRational {
        assert!(n >= 1, "#_n is defined for n >= 1");
        self.terms
            .iter()
            .map(|(o, &m)| {
                let p = power_sums(o.poly(), n as usize).pop().expect("n >= 1");
                p * BigRational::from_integer(m.into())
            })
            .fold(BigRational::zero(), |acc, x| acc + x)
    }

    /// `#_1..#_{n_max}`, sharing one Newton recursion per orbit.
    pub fn sharp_upto(&self, n_max: u32) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); n_max as usize];
        for (o, &m) in &self.terms {
            let mr = BigRational::from_integer(m.into());
            for (slot, p) in out.iter_mut().zip(power_sums(o.poly(), n_max as usize)) {
                *slot += p * &mr;
            }
        }
        out
    }
}

impl std::fmt::Display for VirtualMotive {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (o, &m)) in self.terms.iter().enumerate() {
            let sign = if m < 0 { "-" } else { "+" };
            if i > 0 {
                write!(f, " {sign} ")?;
            } else if m < 0 {
                write!(f, "-")?;
            }
            if m.abs() != 1 {
                write!(f, "{}", m.abs())?;
            }
            write!(f, "[{o}]")?;
        }
        Ok(())
    }
}
