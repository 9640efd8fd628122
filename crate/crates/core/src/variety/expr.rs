//! Parser for polynomial expressions in the variables `x0, x1, ...` with
//! integer coefficients.
//!
//! Accepted syntax: `+`, `-` (binary and unary), `*` (optional, juxtaposition
//! multiplies), `^` with a non-negative integer exponent, and parentheses.
//! Products of parenthesized sums are expanded exactly.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest accepted coefficient magnitude after expansion.
pub const COEFF_BOUND: i64 = 1 << 31;
const MAX_EXPONENT: u32 = 256;
const MAX_TERMS: usize = 1 << 16;
const MAX_DEPTH: usize = 64;
const MAX_DEGREE: u32 = 1024;

/// A polynomial with integer coefficients in `nvars` variables, stored
/// sparsely by exponent vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, i64>,
}

impl Polynomial {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Nonzero terms as `(exponents, coefficient)` in lexicographic order
    /// of exponent vectors.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], i64)> {
        self.terms.iter().map(|(e, &c)| (e.as_slice(), c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some(d)` if every term has total degree `d` (the zero polynomial is
    /// homogeneous of every degree and reports `Some(0)`).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => Some(0),
            Some(d) => degs.all(|x| x == d).then_some(d),
        }
    }

    /// Evaluates at an integer point (used for tests and diagnostics).
    pub fn eval_i128(&self, point: &[i128]) -> i128 {
        self.terms
            .iter()
            .map(|(e, &c)| {
                e.iter()
                    .zip(point)
                    .fold(c as i128, |acc, (&k, &x)| acc * x.pow(k))
            })
            .sum()
    }
}

impl std::fmt::Display for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (exps, &c)) in self.terms.iter().rev().enumerate() {
            let neg = c < 0;
            let mag = c.unsigned_abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let monomial: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(v, &k)| {
                    if k == 1 {
                        format!("x{v}")
                    } else {
                        format!("x{v}^{k}")
                    }
                })
                .collect();
            if monomial.is_empty() {
                write!(f, "{mag}")?;
            } else {
                if mag != 1 {
                    write!(f, "{mag}*")?;
                }
                write!(f, "{}", monomial.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Exact intermediate form used during expansion.
#[derive(Clone)]
struct Expanded(BTreeMap<Vec<u32>, BigInt>);

impl Expanded {
    fn constant(nvars: usize, c: BigInt) -> Self {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert(vec![0; nvars], c);
        }
        Expanded(m)
    }

    fn var(nvars: usize, v: usize) -> Self {
        let mut e = vec![0; nvars];
        e[v] = 1;
        Expanded(BTreeMap::from([(e, BigInt::one())]))
    }

    fn add_assign(&mut self, other: Expanded, sign: i32) {
        for (e, c) in other.0 {
            let c = if sign < 0 { -c } else { c };
            let entry = self.0.entry(e).or_insert_with(BigInt::zero);
            *entry += c;
        }
        self.0.retain(|_, c| !c.is_zero());
    }

    fn mul(&self, other: &Expanded) -> std::result::Result<Expanded, &'static str> {
        const TOO_MANY: &str = "expansion has too many terms";
        if self.0.len().saturating_mul(other.0.len()) > MAX_TERMS * 4 {
            return Err(TOO_MANY);
        }
        let mut out: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (ea, ca) in &self.0 {
            for (eb, cb) in &other.0 {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                if e.iter().sum::<u32>() > MAX_DEGREE {
                    return Err("total degree too large");
                }
                *out.entry(e).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        out.retain(|_, c| !c.is_zero());
        if out.len() > MAX_TERMS {
            return Err(TOO_MANY);
        }
        Ok(Expanded(out))
    }

    fn neg(mut self) -> Self {
        for c in self.0.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Var(usize),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

struct Lexed {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(src: &str, nvars: usize) -> Result<Vec<Lexed>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0usize, 1usize, 1usize);
    while i < chars.len() {
        let c = chars[i];
        let (tl, tc) = (line, col);
        let simple = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = simple {
            out.push(Lexed { tok, line: tl, col: tc });
            i += 1;
            col += 1;
            continue;
        }
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            if digits.len() > 40 {
                return Err(Error::parse(tl, tc, "integer literal too long"));
            }
            col += i - start;
            let v: BigInt = digits.parse().expect("ascii digits");
            out.push(Lexed { tok: Tok::Int(v), line: tl, col: tc });
            continue;
        }
        if c == 'x' {
            let start = i + 1;
            let mut j = start;
            while j < chars.len() && chars[j].is_ascii_digit() {
                j += 1;
            }
            if j == start {
                return Err(Error::parse(tl, tc, "expected variable index after 'x'"));
            }
            let digits: String = chars[start..j].iter().collect();
            let v = digits
                .parse::<usize>()
                .ok()
                .filter(|&v| v < nvars)
                .ok_or_else(|| {
                    Error::parse(
                        tl,
                        tc,
                        format!("variable x{digits} outside x0..x{}", nvars.saturating_sub(1)),
                    )
                })?;
            col += j - i;
            i = j;
            out.push(Lexed { tok: Tok::Var(v), line: tl, col: tc });
            continue;
        }
        return Err(Error::parse(tl, tc, format!("unexpected character '{c}'")));
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Lexed>,
    pos: usize,
    nvars: usize,
    end: (usize, usize),
    depth: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .map(|t| (t.line, t.col))
            .unwrap_or(self.end)
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        let (l, c) = self.here();
        Error::parse(l, c, msg)
    }

    fn expr(&mut self) -> Result<Expanded> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(self.err("expression nested too deeply"));
        }
        let mut acc = Expanded::constant(self.nvars, BigInt::zero());
        let mut sign = 1;
        match self.peek() {
            Some(Tok::Plus) => self.pos += 1,
            Some(Tok::Minus) => {
                self.pos += 1;
                sign = -1;
            }
            _ => {}
        }
        loop {
            let t = self.term()?;
            acc.add_assign(t, sign);
            if acc.0.len() > MAX_TERMS {
                return Err(self.err("expansion has too many terms"));
            }
            match self.peek() {
                Some(Tok::Plus) => sign = 1,
                Some(Tok::Minus) => sign = -1,
                _ => break,
            }
            self.pos += 1;
        }
        self.depth -= 1;
        Ok(acc)
    }

    fn term(&mut self) -> Result<Expanded> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                }
                Some(Tok::Int(_)) | Some(Tok::Var(_)) | Some(Tok::LParen) => {}
                _ => break,
            }
            let rhs = self.factor()?;
            acc = acc.mul(&rhs).map_err(|m| self.err(m))?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Expanded> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            return Ok(self.factor()?.neg());
        }
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let exp = match self.peek() {
            Some(Tok::Int(k)) => k.to_u32().filter(|&k| k <= MAX_EXPONENT),
            _ => return Err(self.err("expected a non-negative integer exponent")),
        }
        .ok_or_else(|| self.err(format!("exponent larger than {MAX_EXPONENT}")))?;
        self.pos += 1;
        let mut acc = Expanded::constant(self.nvars, BigInt::one());
        for _ in 0..exp {
            acc = acc.mul(&base).map_err(|m| self.err(m))?;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Expanded> {
        match self.peek().cloned() {
            Some(Tok::Int(v)) => {
                self.pos += 1;
                Ok(Expanded::constant(self.nvars, v))
            }
            Some(Tok::Var(v)) => {
                self.pos += 1;
                Ok(Expanded::var(self.nvars, v))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(_) => Err(self.err("expected a number, variable or '('")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// Parses a polynomial in `nvars` variables. Errors carry the line and
/// column (1-based, relative to `src`) of the offending token.
pub fn parse_polynomial(src: &str, nvars: usize) -> Result<Polynomial> {
    let toks = lex(src, nvars)?;
    let end = src
        .split('\n')
        .enumerate()
        .last()
        .map(|(l, s)| (l + 1, s.chars().count() + 1))
        .unwrap_or((1, 1));
    if toks.is_empty() {
        return Err(Error::parse(1, 1, "empty polynomial"));
    }
    let mut parser = Parser {
        toks,
        pos: 0,
        nvars,
        end,
        depth: 0,
    };
    let e = parser.expr()?;
    if parser.pos < parser.toks.len() {
        return Err(parser.err("unexpected token"));
    }
    let bound = BigInt::from(COEFF_BOUND);
    let mut terms = BTreeMap::new();
    for (exps, c) in e.0 {
        if c.abs() > bound {
            return Err(Error::parse(
                1,
                1,
                format!("coefficient {c} exceeds 2^31 in magnitude"),
            ));
        }
        terms.insert(exps, c.to_i64().expect("bounded"));
    }
    Ok(Polynomial { nvars, terms })
}
