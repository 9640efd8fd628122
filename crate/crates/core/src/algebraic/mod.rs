//! Exact arithmetic on Galois orbits of algebraic numbers, each given by a
//! monic irreducible polynomial over Q.

pub mod factor;
mod orbit;
mod ratpoly;
pub mod weight;

pub use factor::{factor_rational, factor_rational_with_cap, is_irreducible};
pub use orbit::{
    composed_product, composed_product_poly, is_algebraic_integer, newton_recover, power_sums,
    q_divisibility_order, twist_down, twist_up, NumberOrbit,
};
pub use ratpoly::{format_rational, parse_rational, RatPoly};
pub use weight::{weight_check, Weight};

#[cfg(test)]
pub(crate) use ratpoly::rat;
