//! JSON variety documents.
//!
//! ```json
//! { "name": "E", "ambient": 2, "dim": 1, "smooth": true,
//!   "polys": ["x1^2*x2 + x1*x2^2 - x0^3"],
//!   "combinator": { "node": "projbundle", "base": { "node": "leaf" }, "m": 1 } }
//! ```
//!
//! A `leaf` node without a `variety` refers to the top-level equations.

use serde::{Deserialize, Serialize};

use super::{parse_polynomial, CountCombinator, VarietySpec};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VarietyFile {
    pub name: String,
    pub ambient: usize,
    pub dim: usize,
    pub smooth: bool,
    #[serde(default)]
    pub polys: Vec<String>,
    /// User assertion that `CH_0` of the generic fibre is trivial.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub ch0_trivial: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub combinator: Option<CombinatorNode>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LeafFile {
    pub name: String,
    pub ambient: usize,
    pub dim: usize,
    pub smooth: bool,
    #[serde(default)]
    pub polys: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "node", rename_all = "lowercase", deny_unknown_fields)]
pub enum CombinatorNode {
    Leaf {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        variety: Option<LeafFile>,
    },
    Product {
        left: Box<CombinatorNode>,
        right: Box<CombinatorNode>,
    },
    Blowup {
        base: Box<CombinatorNode>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        base_dim: Option<usize>,
    },
    Projbundle {
        base: Box<CombinatorNode>,
        m: usize,
    },
}

/// A parsed variety document.
#[derive(Debug, Clone)]
pub struct LoadedVariety {
    pub file: VarietyFile,
    pub spec: VarietySpec,
    pub combinator: CountCombinator,
}

impl LoadedVariety {
    pub fn ch0_trivial(&self) -> bool {
        self.file.ch0_trivial
    }
}

/// Parses a variety document. Syntax errors, both in the JSON and in the
/// polynomial strings, are reported with a line and column in `text`.
pub fn parse_variety_file(text: &str) -> Result<LoadedVariety> {
    let file: VarietyFile = serde_json::from_str(text)
        .map_err(|e| Error::parse(e.line().max(1), e.column().max(1), e.to_string()))?;
    let spec = build_leaf(
        text,
        &file.name,
        file.ambient,
        file.dim,
        file.smooth,
        &file.polys,
    )?;
    let combinator = match &file.combinator {
        None => CountCombinator::Leaf(spec.clone()),
        Some(node) => build_node(text, node, &spec)?,
    };
    Ok(LoadedVariety {
        file,
        spec,
        combinator,
    })
}

fn build_leaf(
    text: &str,
    name: &str,
    ambient: usize,
    dim: usize,
    smooth: bool,
    polys: &[String],
) -> Result<VarietySpec> {
    if ambient > 64 {
        return Err(Error::Invalid(format!("ambient dimension {ambient} is too large")));
    }
    let parsed = polys
        .iter()
        .enumerate()
        .map(|(i, src)| {
            parse_polynomial(src, ambient + 1).map_err(|e| locate(text, src, i, e))
        })
        .collect::<Result<Vec<_>>>()?;
    VarietySpec::new(name, ambient, dim, smooth, parsed)
}

fn build_node(text: &str, node: &CombinatorNode, top: &VarietySpec) -> Result<CountCombinator> {
    Ok(match node {
        CombinatorNode::Leaf { variety: None } => CountCombinator::Leaf(top.clone()),
        CombinatorNode::Leaf { variety: Some(v) } => CountCombinator::Leaf(build_leaf(
            text, &v.name, v.ambient, v.dim, v.smooth, &v.polys,
        )?),
        CombinatorNode::Product { left, right } => CountCombinator::product(
            build_node(text, left, top)?,
            build_node(text, right, top)?,
        ),
        CombinatorNode::Blowup { base, base_dim } => {
            let base = build_node(text, base, top)?;
            let d = base_dim.unwrap_or_else(|| base.dim());
            CountCombinator::blowup(base, d)?
        }
        CombinatorNode::Projbundle { base, m } => {
            CountCombinator::proj_bundle(build_node(text, base, top)?, *m)
        }
    })
}

/// Maps a position inside a polynomial string to a position in the
/// enclosing document, when the literal can be found verbatim.
fn locate(text: &str, src: &str, index: usize, err: Error) -> Error {
    let Error::Parse { span, message } = err else {
        return err;
    };
    let message = format!("polys[{index}]: {message}");
    let literal = serde_json::to_string(src).unwrap_or_default();
    let Some(offset) = text.find(&literal) else {
        return Error::Parse { span, message };
    };
    let before = &text[..offset];
    let lit_line = before.matches('\n').count() + 1;
    let lit_col = before.rsplit('\n').next().map_or(0, |s| s.chars().count()) + 1;
    // the polynomial text starts one column after the opening quote
    let (line, column) = if span.line == 1 {
        (lit_line, lit_col + span.column)
    } else {
        (lit_line + span.line - 1, span.column)
    };
    Error::parse(line, column, message)
}
