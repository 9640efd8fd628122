//! Splitting off powers of the Lefschetz motive, reduction of point counts
//! modulo `q^{kappa n}` and the effectivity probe.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use serde::Serialize;

use super::VirtualMotive;
use crate::algebraic::{format_rational, is_algebraic_integer, q_divisibility_order, NumberOrbit, twist_down};
use crate::error::{Error, Result};

/// `M = birational_part + L^kappa ⊗ lefschetz_cofactor`, where no orbit of
/// the birational part is divisible by `q^kappa`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitResult {
    pub kappa: u32,
    pub birational_part: VirtualMotive,
    pub lefschetz_cofactor: VirtualMotive,
}

impl SplitResult {
    /// `birational_part + L^kappa ⊗ lefschetz_cofactor`.
    pub fn reassemble(&self) -> Result<VirtualMotive> {
        self.birational_part
            .add(&self.lefschetz_cofactor.twist(self.kappa))
    }
}

/// A residue class `value mod modulus` with `0 <= value < modulus`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Residue {
    #[serde(with = "crate::report::json_bigint")]
    pub value: BigInt,
    #[serde(with = "crate::report::json_bigint")]
    pub modulus: BigInt,
}

impl Residue {
    pub fn new(value: &BigInt, modulus: BigInt) -> Self {
        Residue {
            value: value.mod_floor(&modulus),
            modulus,
        }
    }

    pub fn mul(&self, other: &Residue) -> Result<Residue> {
        if self.modulus != other.modulus {
            return Err(Error::BaseMismatch(format!(
                "residues mod {} and mod {}",
                self.modulus, other.modulus
            )));
        }
        Ok(Residue::new(&(&self.value * &other.value), self.modulus.clone()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum ProbeVerdict {
    /// `#_n(M)` is an integer for every `n <= window`.
    Integral { window: u32 },
    /// First `n` with `#_n(M)` not an integer.
    Witness { n: u32, value: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitIntegrality {
    pub orbit: String,
    pub multiplicity: i64,
    pub algebraic_integer: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EffectivityReport {
    pub probe: ProbeVerdict,
    pub orbits: Vec<OrbitIntegrality>,
    /// Every orbit is an algebraic integer.
    pub integral_orbits: bool,
    /// The probe found a witness exactly when some orbit is non-integral.
    pub agrees: bool,
}

impl VirtualMotive {
    /// Moves every orbit divisible by `q^kappa` into the cofactor, twisted
    /// down `kappa` times.
    pub fn lefschetz_split(&self, kappa: u32) -> Result<SplitResult> {
        if let Some((o, _)) = self.terms().find(|(o, _)| !is_algebraic_integer(o)) {
            return Err(Error::NotIntegral(o.to_string()));
        }
        self.partition(kappa)
    }

    /// Same as [`lefschetz_split`](Self::lefschetz_split) but non-integral
    /// orbits are kept in the birational part.
    fn partition(&self, kappa: u32) -> Result<SplitResult> {
        if kappa == 0 {
            return Err(Error::Invalid("kappa must be positive".into()));
        }
        let q = self.q();
        let mut birational = VirtualMotive::zero(q);
        let mut cofactor = VirtualMotive::zero(q);
        for (o, m) in self.terms() {
            let divisible = is_algebraic_integer(o) && q_divisibility_order(o, q)? >= kappa;
            if divisible {
                let mut f = o.poly().clone();
                for _ in 0..kappa {
                    f = twist_down(&f, q);
                }
                cofactor.add_term(NumberOrbit::from_certified(f), m);
            } else {
                birational.add_term(o.clone(), m);
            }
        }
        Ok(SplitResult {
            kappa,
            birational_part: birational,
            lefschetz_cofactor: cofactor,
        })
    }

    /// `#_n` of the birational part, reduced modulo `q^{kappa n}`.
    pub fn sharp_bar_n(&self, n: u32, kappa: u32) -> Result<Residue> {
        let value = self.birational_sharp(n, kappa)?;
        Ok(Residue::new(&value, BigInt::from(self.q()).pow(kappa * n)))
    }

    fn birational_sharp(&self, n: u32, kappa: u32) -> Result<BigInt> {
        let bir = self.partition(kappa)?.birational_part;
        let v = bir.sharp_n(n);
        if !v.is_integer() {
            return Err(Error::NonIntegralSharp {
                n,
                value: format_rational(&v),
            });
        }
        Ok(v.to_integer())
    }

    /// `a_n = #_n(birational part)` for `n = 1..n_max`; `a_n mod q^n` is
    /// the reduced count of `M` and may be negative as an integer.
    pub fn a_n_series(&self, n_max: u32) -> Result<Vec<BigInt>> {
        let bir = self.partition(1)?.birational_part;
        bir.sharp_upto(n_max)
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                if v.is_integer() {
                    Ok(v.to_integer())
                } else {
                    Err(Error::NonIntegralSharp {
                        n: i as u32 + 1,
                        value: format_rational(&v),
                    })
                }
            })
            .collect()
    }

    /// Searches `n <= window` for a non-integral `#_n(M)` and compares the
    /// outcome with integrality of the orbits themselves.
    pub fn effectivity_probe(&self, window: u32) -> EffectivityReport {
        let probe = self
            .sharp_upto(window)
            .into_iter()
            .enumerate()
            .find(|(_, v): &(usize, BigRational)| !v.is_integer())
            .map(|(i, v)| ProbeVerdict::Witness {
                n: i as u32 + 1,
                value: format_rational(&v),
            })
            .unwrap_or(ProbeVerdict::Integral { window });
        let orbits: Vec<OrbitIntegrality> = self
            .terms()
            .map(|(o, m)| OrbitIntegrality {
                orbit: o.to_string(),
                multiplicity: m,
                algebraic_integer: is_algebraic_integer(o),
            })
            .collect();
        let integral_orbits = orbits.iter().all(|o| o.algebraic_integer);
        let witnessed = matches!(probe, ProbeVerdict::Witness { .. });
        EffectivityReport {
            agrees: witnessed != integral_orbits,
            probe,
            orbits,
            integral_orbits,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebraic::{rat, RatPoly};

    fn orbit(c: &[i64]) -> NumberOrbit {
        NumberOrbit::new(RatPoly::from_ints(c)).unwrap()
    }

    fn half_orbit(num: i64, den: i64) -> NumberOrbit {
        NumberOrbit::rational(BigRational::new(num.into(), den.into())).unwrap()
    }

    fn elliptic() -> VirtualMotive {
        VirtualMotive::new(2, [(orbit(&[-1, 1]), 1), (orbit(&[-2, 1]), 1), (orbit(&[2, 0, 1]), -1)])
            .unwrap()
    }

    #[test]
    fn split_projective_plane() {
        let p2 = VirtualMotive::projective_space(3, 2);
        let s = p2.lefschetz_split(1).unwrap();
        assert_eq!(s.birational_part, VirtualMotive::unit(3));
        assert_eq!(s.lefschetz_cofactor, VirtualMotive::projective_space(3, 1));
        assert_eq!(s.reassemble().unwrap(), p2);
        let s2 = p2.lefschetz_split(2).unwrap();
        assert_eq!(s2.birational_part, VirtualMotive::projective_space(3, 1));
        assert_eq!(s2.lefschetz_cofactor, VirtualMotive::unit(3));
    }

    #[test]
    fn split_elliptic() {
        let s = elliptic().lefschetz_split(1).unwrap();
        let expected =
            VirtualMotive::new(2, [(orbit(&[-1, 1]), 1), (orbit(&[2, 0, 1]), -1)]).unwrap();
        assert_eq!(s.birational_part, expected);
        assert_eq!(s.lefschetz_cofactor, VirtualMotive::unit(2));
    }

    #[test]
    fn split_rejects_non_integral() {
        let m = VirtualMotive::new(2, [(half_orbit(1, 2), 1)]).unwrap();
        assert!(matches!(m.lefschetz_split(1), Err(Error::NotIntegral(_))));
    }

    #[test]
    fn reduced_counts() {
        let p2 = VirtualMotive::projective_space(2, 2);
        for n in 1..=3u32 {
            let r = p2.sharp_bar_n(n, 1).unwrap();
            assert_eq!(r.value, BigInt::from(1));
            assert_eq!(r.modulus, BigInt::from(2u32.pow(n)));
        }
        let r = elliptic().sharp_bar_n(1, 1).unwrap();
        assert_eq!((r.value, r.modulus), (BigInt::from(1), BigInt::from(2)));
        let bad = VirtualMotive::new(2, [(half_orbit(1, 2), 1)]).unwrap();
        assert_eq!(
            bad.sharp_bar_n(1, 1),
            Err(Error::NonIntegralSharp { n: 1, value: "1/2".into() })
        );
    }

    #[test]
    fn a_n_examples() {
        let ints = |v: Vec<BigInt>| v.into_iter().map(|x| i64::try_from(x).unwrap()).collect::<Vec<_>>();
        assert_eq!(ints(VirtualMotive::projective_space(3, 2).a_n_series(4).unwrap()), vec![1; 4]);
        assert_eq!(ints(elliptic().a_n_series(4).unwrap()), vec![1, 5, 1, -7]);
        assert_eq!(ints(VirtualMotive::lefschetz_power(5, 1).a_n_series(3).unwrap()), vec![0; 3]);
    }

    #[test]
    fn probe_examples() {
        let p2 = VirtualMotive::projective_space(2, 2).effectivity_probe(50);
        assert_eq!(p2.probe, ProbeVerdict::Integral { window: 50 });
        assert!(p2.integral_orbits && p2.agrees);

        let half = VirtualMotive::new(2, [(half_orbit(1, 2), 1)]).unwrap().effectivity_probe(50);
        assert_eq!(half.probe, ProbeVerdict::Witness { n: 1, value: "1/2".into() });
        assert!(half.agrees);

        let pair = VirtualMotive::new(2, [(half_orbit(1, 2), 1), (half_orbit(3, 2), 1)])
            .unwrap();
        assert_eq!(pair.sharp_n(1), rat(2));
        let r = pair.effectivity_probe(50);
        assert_eq!(r.probe, ProbeVerdict::Witness { n: 2, value: "5/2".into() });
        assert!(r.agrees && !r.integral_orbits);
    }
}
