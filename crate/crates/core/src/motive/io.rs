//! JSON spectrum documents.
//!
//! ```json
//! { "q": 2, "terms": [ { "poly": ["-1", "1"], "mult": 1 },
//!                      { "poly": ["2", "0", "1"], "mult": -1 } ] }
//! ```
//!
//! Each `poly` lists the coefficients of a monic irreducible polynomial
//! over the rationals, constant term first.

use serde::{Deserialize, Serialize};

use super::VirtualMotive;
use crate::algebraic::{format_rational, parse_rational, NumberOrbit, RatPoly};
use crate::error::{Error, Result};

/// Bound on `sum |m_i| deg f_i`, which is the degree of the zeta function.
pub const MAX_SPECTRUM_DEGREE: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpectrumFile {
    pub q: u64,
    pub terms: Vec<SpectrumTerm>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpectrumTerm {
    pub poly: Vec<String>,
    pub mult: i64,
}

impl SpectrumFile {
    pub fn from_motive(m: &VirtualMotive) -> Self {
        SpectrumFile {
            q: m.q(),
            terms: m
                .terms()
                .map(|(o, mult)| SpectrumTerm {
                    poly: o.poly().coeffs().iter().map(format_rational).collect(),
                    mult,
                })
                .collect(),
        }
    }

    pub fn to_motive(&self) -> Result<VirtualMotive> {
        let mut degree = 0usize;
        let terms = self
            .terms
            .iter()
            .enumerate()
            .map(|(i, t)| {
                let at = |e: Error| Error::Invalid(format!("terms[{i}]: {e}"));
                if t.poly.len() > MAX_SPECTRUM_DEGREE + 1 {
                    return Err(at(Error::Invalid("polynomial degree too large".into())));
                }
                let coeffs = t
                    .poly
                    .iter()
                    .map(|c| parse_rational(c))
                    .collect::<Result<Vec<_>>>()
                    .map_err(at)?;
                let orbit = NumberOrbit::new(RatPoly::new(coeffs)).map_err(at)?;
                degree = (orbit.degree() as u128 * t.mult.unsigned_abs() as u128)
                    .saturating_add(degree as u128)
                    .min(usize::MAX as u128) as usize;
                if degree > MAX_SPECTRUM_DEGREE {
                    return Err(Error::Invalid(format!(
                        "total spectrum degree exceeds {MAX_SPECTRUM_DEGREE}"
                    )));
                }
                Ok((orbit, t.mult))
            })
            .collect::<Result<Vec<_>>>()?;
        VirtualMotive::new(self.q, terms)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("spectrum serializes");
        s.push('\n');
        s
    }
}

/// Parses and validates a spectrum document: every polynomial must be
/// monic, irreducible and have a nonzero constant term. Repeated orbits
/// are merged.
pub fn parse_spectrum_file(text: &str) -> Result<VirtualMotive> {
    let file: SpectrumFile = serde_json::from_str(text)
        .map_err(|e| Error::parse(e.line().max(1), e.column().max(1), e.to_string()))?;
    file.to_motive()
}
