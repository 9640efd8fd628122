//! Numeric weight check for Weil numbers. Advisory only: nothing exact
//! depends on it.

use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::RatPoly;
use crate::error::{Error, Result};

pub const DEFAULT_WEIGHT_TOL: f64 = 1e-6;
const RESIDUAL_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Weight {
    /// Every root satisfies `|w|^2 = q^j`.
    Pure(i32),
    Mixed,
}

/// All complex roots of `f` (Aberth–Ehrlich iteration followed by Newton
/// polishing). Fails unless every root has relative residual below 1e-12.
pub fn complex_roots(f: &RatPoly) -> Result<Vec<Complex64>> {
    if !f.is_monic() || f.degree() == 0 {
        return Err(Error::Invalid(format!("{f} must be monic of degree >= 1")));
    }
    let coeffs: Vec<f64> = f
        .coeffs()
        .iter()
        .map(|c| c.to_f64().unwrap_or(f64::NAN))
        .collect();
    if coeffs.iter().any(|c| !c.is_finite()) {
        return Err(Error::RootFindingDiverged(f.to_string()));
    }
    let d = coeffs.len() - 1;
    let eval = |z: Complex64| -> (Complex64, Complex64) {
        let mut p = Complex64::zero();
        let mut dp = Complex64::zero();
        for &c in coeffs.iter().rev() {
            dp = dp * z + p;
            p = p * z + c;
        }
        (p, dp)
    };
    // Cauchy bound on root moduli
    let radius = 1.0 + coeffs[..d].iter().map(|c| c.abs()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..d)
        .map(|k| Complex64::from_polar(radius * 0.5, 0.4 + std::f64::consts::TAU * k as f64 / d as f64))
        .collect();

    for _ in 0..500 {
        let mut max_step = 0.0f64;
        for i in 0..d {
            let (p, dp) = eval(z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..d)
                .filter(|&j| j != i)
                .map(|j| (z[i] - z[j]).inv())
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[i] -= step;
                max_step = max_step.max(step.norm() / z[i].norm().max(1.0));
            }
        }
        if max_step < 1e-15 {
            break;
        }
    }
    for zi in z.iter_mut() {
        for _ in 0..3 {
            let (p, dp) = eval(*zi);
            if dp.norm() > 0.0 {
                let next = *zi - p / dp;
                if next.is_finite() {
                    *zi = next;
                }
            }
        }
    }
    for zi in &z {
        let (p, _) = eval(*zi);
        let scale: f64 = coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c.abs() * zi.norm().powi(i as i32))
            .sum::<f64>()
            .max(1.0);
        let residual = p.norm() / scale;
        if residual.is_nan() || residual >= RESIDUAL_TOL {
            return Err(Error::RootFindingDiverged(f.to_string()));
        }
    }
    Ok(z)
}

/// Weight `j` if `| |w|^2 - q^j | < tol q^j` for every root `w` and one
/// integer `j`, else `Mixed`. `f` is monic with nonzero constant term; it
/// need not be irreducible.
pub fn weight_check(f: &RatPoly, q: u64, tol: f64) -> Result<Weight> {
    if f.coeff(0).is_zero() {
        return Err(Error::Invalid(format!("{f} has the root 0")));
    }
    if q < 2 {
        return Err(Error::Invalid(format!("q = {q} must be at least 2")));
    }
    let roots = complex_roots(f)?;
    let lq = (q as f64).ln();
    let mut weight = None;
    for w in roots {
        let m2 = w.norm_sqr();
        let j = (m2.ln() / lq).round();
        let target = (q as f64).powf(j);
        if (m2 - target).abs() >= tol * target {
            return Ok(Weight::Mixed);
        }
        let j = j as i32;
        match weight {
            None => weight = Some(j),
            Some(k) if k != j => return Ok(Weight::Mixed),
            _ => {}
        }
    }
    Ok(Weight::Pure(weight.expect("degree >= 1")))
}
