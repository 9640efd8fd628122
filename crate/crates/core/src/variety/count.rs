use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{CountCombinator, VarietySpec};
use crate::error::{Error, Result};
use crate::field::{prime_power, projective_size, zech::DEFAULT_TABLE_CAP, ExtField, LogField};

/// Knobs for the enumeration loop.
#[derive(Debug, Clone, Copy)]
pub struct CountOptions {
    /// Worker threads; `<= 1` counts on the calling thread.
    pub threads: usize,
    /// Largest `|F_{q^n}|` for which a field is built.
    pub field_cap: u64,
    /// Largest number of projective points that will be enumerated.
    pub point_cap: u128,
}

impl Default for CountOptions {
    fn default() -> Self {
        CountOptions {
            threads: 1,
            field_cap: DEFAULT_TABLE_CAP,
            point_cap: 1 << 32,
        }
    }
}

/// Exact counts `N_1..N_max` over `F_{q^n}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountSequence {
    pub q: u64,
    #[serde(with = "crate::report::json_bigints")]
    pub counts: Vec<BigInt>,
}

impl CountSequence {
    pub fn new(q: u64, counts: Vec<BigInt>) -> Result<Self> {
        if counts.is_empty() {
            return Err(Error::Invalid("a count sequence needs at least one entry".into()));
        }
        if counts.iter().any(|c| c < &BigInt::zero()) {
            return Err(Error::Invalid("point counts are non-negative".into()));
        }
        Ok(CountSequence { q, counts })
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// `N_n`, 1-based.
    pub fn get(&self, n: usize) -> &BigInt {
        &self.counts[n - 1]
    }
}

/// Equation in compiled form: nonzero coefficient codes and sparse
/// exponent lists.
struct Compiled {
    terms: Vec<(u32, Vec<(usize, u64)>)>,
}

fn compile(spec: &VarietySpec, field: &LogField) -> Vec<Compiled> {
    spec.polys
        .iter()
        .map(|f| Compiled {
            terms: f
                .terms()
                .filter_map(|(exps, c)| {
                    let code = field.from_int(c);
                    (code != 0).then(|| {
                        let vars = exps
                            .iter()
                            .enumerate()
                            .filter(|(_, &k)| k > 0)
                            .map(|(v, &k)| (v, k as u64))
                            .collect();
                        (code, vars)
                    })
                })
                .collect(),
        })
        .filter(|c| !c.terms.is_empty())
        .collect()
}

#[inline]
fn eval(f: &Compiled, point: &[u32], field: &LogField) -> u32 {
    let order = field.order() as u64;
    let mut acc = 0u32;
    'terms: for (c, vars) in &f.terms {
        let mut log = field.log(*c) as u64;
        for &(v, k) in vars {
            let x = point[v];
            if x == 0 {
                continue 'terms;
            }
            log += k * field.log(x) as u64;
        }
        acc = field.add(acc, (log % order) as u32 + 1);
    }
    acc
}

#[inline]
fn on_variety(eqs: &[Compiled], point: &[u32], field: &LogField) -> bool {
    eqs.iter().all(|f| eval(f, point, field) == 0)
}

/// Counts points with the leading 1 in position `lead` and, when there is a
/// following coordinate, with that coordinate fixed to `next`.
fn count_block(
    eqs: &[Compiled],
    field: &LogField,
    ambient: usize,
    lead: usize,
    next: Option<u32>,
) -> u64 {
    let mut point = vec![0u32; ambient + 1];
    point[lead] = 1; // code of g^0 = 1
    let free_start = match next {
        Some(c) => {
            point[lead + 1] = c;
            lead + 2
        }
        None => lead + 1,
    };
    let q = field.size() as u32;
    let mut total = 0u64;
    loop {
        if on_variety(eqs, &point, field) {
            total += 1;
        }
        let mut i = ambient + 1;
        loop {
            if i == free_start {
                return total;
            }
            i -= 1;
            point[i] += 1;
            if point[i] < q {
                break;
            }
            point[i] = 0;
        }
    }
}

/// Field size and number of projective points to enumerate, or the cap
/// that forbids it.
fn enumeration_size(
    spec: &VarietySpec,
    p: u64,
    degree: usize,
    opts: &CountOptions,
) -> Result<(u64, u128)> {
    let size = u32::try_from(degree)
        .ok()
        .and_then(|d| (p as u128).checked_pow(d));
    let size = match size {
        Some(s) if s <= opts.field_cap as u128 => s as u64,
        other => {
            return Err(Error::FieldCapExceeded {
                size: other.unwrap_or(u128::MAX),
                cap: opts.field_cap,
            })
        }
    };
    let points = projective_size(spec.ambient, size);
    if points > opts.point_cap {
        return Err(Error::EnumerationCapExceeded {
            points,
            cap: opts.point_cap,
        });
    }
    Ok((size, points))
}

fn leaves<'a>(node: &'a CountCombinator, out: &mut Vec<&'a VarietySpec>) {
    match node {
        CountCombinator::Leaf(spec) => out.push(spec),
        CountCombinator::Product(a, b) => {
            leaves(a, out);
            leaves(b, out);
        }
        CountCombinator::ProjBundle { base, .. }
        | CountCombinator::BlowupAtRationalPoint { base, .. } => leaves(base, out),
    }
}

/// `|X(F_{q^n})|` by enumerating `P^N(F_{q^n})`.
pub fn count_points(spec: &VarietySpec, q: u64, n: u32, opts: &CountOptions) -> Result<BigInt> {
    let (p, f) = prime_power(q)?;
    if n == 0 {
        return Err(Error::Invalid("extension index n must be at least 1".into()));
    }
    let degree = f as usize * n as usize;
    if spec.polys.iter().all(|f| f.is_zero()) {
        let qn = BigInt::from(q).pow(n);
        return Ok((0..=spec.ambient as u32).map(|i| qn.pow(i)).sum());
    }
    let (size, points) = enumeration_size(spec, p.get(), degree, opts)?;
    let field = ExtField::with_cap(p.get(), degree, usize::MAX)?;
    let table = LogField::new(&field, opts.field_cap)?;
    let eqs = compile(spec, &table);
    if eqs.is_empty() {
        return Ok(BigInt::from(points));
    }

    let ambient = spec.ambient;
    let blocks: Vec<(usize, Option<u32>)> = (0..=ambient)
        .flat_map(|lead| {
            if lead < ambient {
                (0..size as u32).map(|c| (lead, Some(c))).collect::<Vec<_>>()
            } else {
                vec![(lead, None)]
            }
        })
        .collect();
    let run = |&(lead, next): &(usize, Option<u32>)| count_block(&eqs, &table, ambient, lead, next);
    let total: u64 = if opts.threads <= 1 {
        blocks.iter().map(run).sum()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .map_err(|e| Error::Invalid(format!("thread pool: {e}")))?;
        pool.install(|| blocks.par_iter().map(run).sum())
    };
    Ok(BigInt::from(total))
}

/// `(Q^k - 1)/(Q - 1) = |P^{k-1}(F_Q)|`.
fn projective_count(qn: &BigInt, k: usize) -> BigInt {
    (0..k as u32).map(|i| qn.pow(i)).sum()
}

/// Count of a combinator tree over `F_{q^n}`.
pub fn combinator_counts(
    node: &CountCombinator,
    q: u64,
    n: u32,
    opts: &CountOptions,
) -> Result<BigInt> {
    let qn = BigInt::from(q).pow(n);
    Ok(match node {
        CountCombinator::Leaf(spec) => count_points(spec, q, n, opts)?,
        CountCombinator::Product(a, b) => {
            combinator_counts(a, q, n, opts)? * combinator_counts(b, q, n, opts)?
        }
        CountCombinator::ProjBundle { base, m } => {
            combinator_counts(base, q, n, opts)? * projective_count(&qn, m + 1)
        }
        CountCombinator::BlowupAtRationalPoint { base, base_dim } => {
            combinator_counts(base, q, n, opts)? - BigInt::one()
                + projective_count(&qn, *base_dim)
        }
    })
}

/// `N_1..N_{n_max}` for a leaf variety or a combinator tree.
pub fn count_sequence(
    node: &CountCombinator,
    q: u64,
    n_max: u32,
    opts: &CountOptions,
) -> Result<CountSequence> {
    if n_max == 0 {
        return Err(Error::Invalid("n_max must be at least 1".into()));
    }
    let (p, f) = prime_power(q)?;
    // fail before any work if the largest field is out of reach
    let mut specs = Vec::new();
    leaves(node, &mut specs);
    for spec in specs.iter().filter(|s| s.polys.iter().any(|f| !f.is_zero())) {
        enumeration_size(spec, p.get(), f as usize * n_max as usize, opts)?;
    }
    let counts = (1..=n_max)
        .map(|n| combinator_counts(node, q, n, opts))
        .collect::<Result<Vec<_>>>()?;
    CountSequence::new(q, counts)
}
