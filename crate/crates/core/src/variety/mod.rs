//! Projective varieties given by homogeneous equations, count combinators
//! for products, blow-ups and projective bundles, and exact point counts.

mod congruence;
mod count;
pub mod expr;
mod file;

pub use congruence::{congruence_check, esnault_check, CongruenceReport, CongruenceRow, EsnaultVerdict};
pub use count::{combinator_counts, count_points, count_sequence, CountOptions, CountSequence};
pub use expr::{parse_polynomial, Polynomial};
pub use file::{parse_variety_file, CombinatorNode, LeafFile, LoadedVariety, VarietyFile};

use crate::error::{Error, Result};

/// A closed subvariety of `P^ambient` cut out by homogeneous polynomials.
/// Smoothness and dimension are recorded as asserted by the user; neither is
/// verified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarietySpec {
    pub name: String,
    pub ambient: usize,
    pub dim: usize,
    pub smooth: bool,
    pub polys: Vec<Polynomial>,
}

impl VarietySpec {
    pub fn new(
        name: impl Into<String>,
        ambient: usize,
        dim: usize,
        smooth: bool,
        polys: Vec<Polynomial>,
    ) -> Result<Self> {
        if dim > ambient {
            return Err(Error::Invalid(format!(
                "dimension {dim} exceeds ambient dimension {ambient}"
            )));
        }
        for f in &polys {
            if f.nvars() != ambient + 1 {
                return Err(Error::Invalid(format!(
                    "polynomial {f} is not in the variables x0..x{ambient}"
                )));
            }
            if f.homogeneous_degree().is_none() {
                return Err(Error::Invalid(format!("polynomial {f} is not homogeneous")));
            }
        }
        Ok(VarietySpec {
            name: name.into(),
            ambient,
            dim,
            smooth,
            polys,
        })
    }

    /// Parses each equation from source text.
    pub fn from_sources(
        name: impl Into<String>,
        ambient: usize,
        dim: usize,
        smooth: bool,
        polys: &[&str],
    ) -> Result<Self> {
        let parsed = polys
            .iter()
            .map(|s| parse_polynomial(s, ambient + 1))
            .collect::<Result<Vec<_>>>()?;
        Self::new(name, ambient, dim, smooth, parsed)
    }

    /// All of `P^n`.
    pub fn projective_space(n: usize) -> Self {
        VarietySpec {
            name: format!("P{n}"),
            ambient: n,
            dim: n,
            smooth: true,
            polys: Vec::new(),
        }
    }
}

/// A tree of count-level constructions over leaf varieties.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CountCombinator {
    Leaf(VarietySpec),
    Product(Box<CountCombinator>, Box<CountCombinator>),
    /// Blow-up of a smooth `base_dim`-dimensional variety at a rational point
    /// (asserted, not checked).
    BlowupAtRationalPoint {
        base: Box<CountCombinator>,
        base_dim: usize,
    },
    /// Projective bundle with fibre `P^m`.
    ProjBundle { base: Box<CountCombinator>, m: usize },
}

impl CountCombinator {
    pub fn leaf(spec: VarietySpec) -> Self {
        CountCombinator::Leaf(spec)
    }

    pub fn product(a: CountCombinator, b: CountCombinator) -> Self {
        CountCombinator::Product(Box::new(a), Box::new(b))
    }

    pub fn blowup(base: CountCombinator, base_dim: usize) -> Result<Self> {
        if base_dim == 0 {
            return Err(Error::Invalid(
                "blow-up requires a base of dimension at least 1".into(),
            ));
        }
        Ok(CountCombinator::BlowupAtRationalPoint {
            base: Box::new(base),
            base_dim,
        })
    }

    pub fn proj_bundle(base: CountCombinator, m: usize) -> Self {
        CountCombinator::ProjBundle {
            base: Box::new(base),
            m,
        }
    }

    /// Dimension of the constructed variety from the asserted leaf dimensions.
    pub fn dim(&self) -> usize {
        match self {
            CountCombinator::Leaf(v) => v.dim,
            CountCombinator::Product(a, b) => a.dim() + b.dim(),
            CountCombinator::BlowupAtRationalPoint { base, .. } => base.dim(),
            CountCombinator::ProjBundle { base, m } => base.dim() + m,
        }
    }

    /// True when every leaf is asserted smooth.
    pub fn smooth(&self) -> bool {
        match self {
            CountCombinator::Leaf(v) => v.smooth,
            CountCombinator::Product(a, b) => a.smooth() && b.smooth(),
            CountCombinator::BlowupAtRationalPoint { base, .. }
            | CountCombinator::ProjBundle { base, .. } => base.smooth(),
        }
    }
}

impl From<VarietySpec> for CountCombinator {
    fn from(v: VarietySpec) -> Self {
        CountCombinator::Leaf(v)
    }
}
