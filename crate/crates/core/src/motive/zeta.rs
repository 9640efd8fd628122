//! Rational zeta functions `num(t) / den(t)` with constant terms 1.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::VirtualMotive;
use crate::algebraic::{format_rational, RatPoly};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalZeta {
    num: RatPoly,
    den: RatPoly,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawZeta {
    #[serde(with = "crate::report::json_rationals")]
    num: Vec<BigRational>,
    #[serde(with = "crate::report::json_rationals")]
    den: Vec<BigRational>,
}

impl RationalZeta {
    /// Reduces `num / den` to lowest terms with both constant terms 1.
    pub fn new(num: RatPoly, den: RatPoly) -> Result<Self> {
        let (n0, d0) = (num.coeff(0), den.coeff(0));
        if n0.is_zero() || d0.is_zero() {
            return Err(Error::Invalid(
                "numerator and denominator need nonzero constant terms".into(),
            ));
        }
        let g = num.gcd(&den);
        let (num, _) = num.divrem(&g)?;
        let (den, _) = den.divrem(&g)?;
        let num = num.scale(&num.coeff(0).recip());
        let den = den.scale(&den.coeff(0).recip());
        Ok(RationalZeta { num, den })
    }

    pub fn one() -> Self {
        RationalZeta {
            num: RatPoly::one(),
            den: RatPoly::one(),
        }
    }

    pub fn numerator(&self) -> &RatPoly {
        &self.num
    }

    pub fn denominator(&self) -> &RatPoly {
        &self.den
    }

    /// Coefficients `c_0..c_{n_max}` of the power series expansion.
    pub fn series(&self, n_max: usize) -> Vec<BigRational> {
        let mut c: Vec<BigRational> = Vec::with_capacity(n_max + 1);
        for k in 0..=n_max {
            let mut v = self.num.coeff(k);
            for j in 1..=k.min(self.den.degree()) {
                v -= self.den.coeff(j) * &c[k - j];
            }
            c.push(v);
        }
        c
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("zeta serializes")
    }

    /// Parses `{ "num": [...], "den": [...] }`.
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text)
            .map_err(|e| Error::parse(e.line().max(1), e.column().max(1), e.to_string()))
    }
}

impl Serialize for RationalZeta {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawZeta {
            num: self.num.coeffs().to_vec(),
            den: self.den.coeffs().to_vec(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalZeta {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawZeta::deserialize(d)?;
        if raw.num.len() > 4096 || raw.den.len() > 4096 {
            return Err(serde::de::Error::custom("polynomial degree too large"));
        }
        RationalZeta::new(RatPoly::new(raw.num), RatPoly::new(raw.den))
            .map_err(serde::de::Error::custom)
    }
}

impl std::fmt::Display for RationalZeta {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den.degree() == 0 {
            write!(f, "{}", Ascending(&self.num))
        } else {
            write!(f, "({}) / ({})", Ascending(&self.num), Ascending(&self.den))
        }
    }
}

/// A polynomial in `t`, lowest degree first.
struct Ascending<'a>(&'a RatPoly);

impl std::fmt::Display for Ascending<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (i, c) in self.0.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            if i == 0 || !mag.is_one() {
                write!(f, "{}", format_rational(&mag))?;
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl VirtualMotive {
    /// `prod rev(f_i)^{-m_i}` with `rev(f)(t) = t^{deg f} f(1/t)`.
    pub fn zeta(&self) -> RationalZeta {
        let mut num = RatPoly::one();
        let mut den = RatPoly::one();
        for (o, m) in self.terms() {
            let r = o.poly().reversed();
            let r = r.scale(&r.coeff(0).recip());
            let power = r.pow(m.unsigned_abs() as u32);
            if m > 0 {
                den = den.mul(&power);
            } else {
                num = num.mul(&power);
            }
        }
        RationalZeta::new(num, den).expect("reversed orbits have constant term 1")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebraic::{rat, NumberOrbit};

    fn orbit(c: &[i64]) -> NumberOrbit {
        NumberOrbit::new(RatPoly::from_ints(c)).unwrap()
    }

    #[test]
    fn zeta_examples() {
        let p1 = VirtualMotive::projective_space(5, 1).zeta();
        assert_eq!(p1.numerator(), &RatPoly::one());
        assert_eq!(p1.denominator(), &RatPoly::from_ints(&[1, -6, 5]));

        let e = VirtualMotive::new(2, [(orbit(&[-1, 1]), 1), (orbit(&[-2, 1]), 1), (orbit(&[2, 0, 1]), -1)])
            .unwrap()
            .zeta();
        assert_eq!(e.numerator(), &RatPoly::from_ints(&[1, 0, 2]));
        assert_eq!(e.denominator(), &RatPoly::from_ints(&[1, -3, 2]));
        assert_eq!(
            e.series(4),
            vec![rat(1), rat(3), rat(9), rat(21), rat(45)]
        );
        assert_eq!(VirtualMotive::zero(7).zeta(), RationalZeta::one());
    }

    #[test]
    fn lowest_terms() {
        let z = RationalZeta::new(
            RatPoly::from_ints(&[2, -2]),
            RatPoly::from_ints(&[1, -2, 1]),
        )
        .unwrap();
        assert_eq!(z.numerator(), &RatPoly::one());
        assert_eq!(z.denominator(), &RatPoly::from_ints(&[1, -1]));
        assert!(RationalZeta::new(RatPoly::from_ints(&[0, 1]), RatPoly::one()).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let z = RationalZeta::new(
            RatPoly::new(vec![rat(1), BigRational::new(1.into(), 2.into())]),
            RatPoly::from_ints(&[1, -3, 2]),
        )
        .unwrap();
        let text = z.to_json().to_string();
        assert_eq!(text, r#"{"den":[1,-3,2],"num":[1,"1/2"]}"#);
        assert_eq!(RationalZeta::from_json(&text).unwrap(), z);
        assert!(matches!(
            RationalZeta::from_json("{\"num\": [1],\n \"den\": [0]}"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(RationalZeta::from_json("{\"num\": [1,"), Err(Error::Parse { .. })));
    }

    #[test]
    fn display() {
        let z = RationalZeta::new(RatPoly::from_ints(&[1, 0, 2]), RatPoly::from_ints(&[1, -3, 2]))
            .unwrap();
        assert_eq!(z.to_string(), "(1 + 2t^2) / (1 - 3t + 2t^2)");
    }
}
