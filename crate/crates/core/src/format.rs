//! Text format for Tits indices.
//!
//! One index per document:
//!
//! ```toml
//! name = "2E6"
//! series = "E"
//! rank = 6
//! delta0 = []
//! automorphisms = ["(1 6)(3 5)"]
//! ```
//!
//! Products list their factors and use global 1-based labels, numbering the
//! nodes factor by factor. An automorphism of a product is either global
//! cycle notation or a factor permutation together with one node permutation
//! per factor (node `k` of factor `i` goes to node `nodes[i](k)` of factor
//! `factors(i)`):
//!
//! ```toml
//! name = "2A3 x 2A3"
//! factors = [{ series = "A", rank = 3 }, { series = "A", rank = 3 }]
//! automorphisms = [{ factors = "(1 2)", nodes = ["()", "()"] }, "(1 3)(4 6)"]
//! ```
//!
//! A catalog is a sequence of such tables under `[[index]]`.

use serde::Deserialize;
use toml::Spanned;

use crate::diagram::{parse_cycle_notation, DiagramAutomorphism};
use crate::error::{Error, Result};
use crate::index::TitsIndex;
use crate::rootsys::{RootSystem, Series};

/// A parsed index with its display name.
#[derive(Debug, Clone)]
pub struct NamedIndex {
    pub name: String,
    pub index: TitsIndex,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawIndex {
    name: Option<Spanned<String>>,
    series: Option<Spanned<String>>,
    rank: Option<Spanned<i64>>,
    factors: Option<Spanned<Vec<RawFactor>>>,
    #[serde(default)]
    delta0: Option<Spanned<Vec<Spanned<i64>>>>,
    #[serde(default)]
    automorphisms: Vec<Spanned<RawAutomorphism>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFactor {
    series: Spanned<String>,
    rank: Spanned<i64>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum RawAutomorphism {
    Cycles(String),
    Factorwise { factors: String, nodes: Vec<String> },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCatalog {
    #[serde(default)]
    index: Vec<Spanned<RawIndex>>,
}

/// Parses a single index document.
pub fn parse_index(text: &str) -> Result<NamedIndex> {
    let raw: RawIndex = toml::from_str(text).map_err(|e| Error::Format(e.to_string().trim_end().to_string()))?;
    build(text, raw, None)
}

/// Parses a catalog of `[[index]]` tables.
pub fn parse_catalog(text: &str) -> Result<Vec<NamedIndex>> {
    let raw: RawCatalog = toml::from_str(text).map_err(|e| Error::Format(e.to_string().trim_end().to_string()))?;
    raw.index
        .into_iter()
        .map(|entry| {
            let span = entry.span();
            build(text, entry.into_inner(), Some(span))
        })
        .collect()
}

/// The catalog of admissible indices shipped with the crate.
pub fn builtin_catalog() -> Vec<NamedIndex> {
    parse_catalog(BUILTIN_CATALOG).expect("built-in catalog parses")
}

pub const BUILTIN_CATALOG: &str = include_str!("../catalog/indices.toml");

fn position(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.len() - before.rfind('\n').map_or(0, |i| i + 1) + 1;
    (line, column)
}

fn located(text: &str, span: std::ops::Range<usize>, field: &str, err: impl std::fmt::Display) -> Error {
    let (line, column) = position(text, span.start);
    Error::Format(format!("line {line}, column {column}: `{field}`: {err}"))
}

fn build(text: &str, raw: RawIndex, entry: Option<std::ops::Range<usize>>) -> Result<NamedIndex> {
    let whole = entry.clone().unwrap_or(0..0);
    let name = raw.name.as_ref().map(|n| n.get_ref().clone());

    let rs = match (&raw.series, &raw.rank, &raw.factors) {
        (Some(series), Some(rank), None) => simple_system(text, series, rank)?,
        (None, None, Some(factors)) => {
            if factors.get_ref().is_empty() {
                return Err(located(text, factors.span(), "factors", "at least one factor is required"));
            }
            let parts = factors
                .get_ref()
                .iter()
                .map(|f| simple_system(text, &f.series, &f.rank))
                .collect::<Result<Vec<_>>>()?;
            RootSystem::product(&parts).map_err(|e| located(text, factors.span(), "factors", e))?
        }
        (_, _, Some(factors)) => {
            return Err(located(text, factors.span(), "factors", "give either `factors` or `series` and `rank`, not both"))
        }
        _ => {
            return Err(located(text, whole, "series", "missing `series` and `rank` (or `factors`)"));
        }
    };
    let n = rs.rank();

    let mut delta0 = Vec::new();
    if let Some(d) = &raw.delta0 {
        for label in d.get_ref() {
            let v = *label.get_ref();
            if v < 1 || v as usize > n {
                return Err(located(text, label.span(), "delta0", Error::NodeOutOfRange { index: v.max(0) as usize, rank: n }));
            }
            delta0.push(v as usize - 1);
        }
    }

    let factor_ranks: Vec<usize> = rs.factors().iter().map(|f| f.kind.rank).collect();
    let mut autos = Vec::new();
    for a in &raw.automorphisms {
        let perm = match a.get_ref() {
            RawAutomorphism::Cycles(c) => parse_cycle_notation(c, n),
            RawAutomorphism::Factorwise { factors, nodes } => factorwise(&factor_ranks, factors, nodes),
        }
        .map_err(|e| located(text, a.span(), "automorphisms", e))?;
        autos.push((a.span(), perm));
    }

    let mut generators = Vec::new();
    for (span, perm) in autos {
        generators.push(DiagramAutomorphism::new(&rs, perm).map_err(|e| located(text, span, "automorphisms", e))?);
    }
    let kernel_span = raw.delta0.as_ref().map_or(whole, |d| d.span());
    let index = TitsIndex::from_automorphisms(rs, &delta0, generators)
        .map_err(|e| located(text, kernel_span, "delta0", e))?;
    let name = name.unwrap_or_else(|| default_name(&index));
    Ok(NamedIndex { name, index })
}

fn simple_system(text: &str, series: &Spanned<String>, rank: &Spanned<i64>) -> Result<RootSystem> {
    let s = Series::parse(series.get_ref()).ok_or_else(|| {
        located(text, series.span(), "series", format!("unknown series `{}`", series.get_ref()))
    })?;
    let r = *rank.get_ref();
    if r < 1 {
        return Err(located(text, rank.span(), "rank", "rank must be positive"));
    }
    RootSystem::new(s, r as usize).map_err(|e| located(text, rank.span(), "rank", e))
}

fn factorwise(factor_ranks: &[usize], factors: &str, nodes: &[String]) -> Result<Vec<usize>> {
    let d = factor_ranks.len();
    let pi = parse_cycle_notation(factors, d)?;
    if nodes.len() != d {
        return Err(Error::Format(format!("expected {d} node permutations, one per factor, found {}", nodes.len())));
    }
    let offsets: Vec<usize> = factor_ranks
        .iter()
        .scan(0, |acc, &r| {
            let o = *acc;
            *acc += r;
            Some(o)
        })
        .collect();
    let mut perm = Vec::new();
    for i in 0..d {
        if factor_ranks[pi[i]] != factor_ranks[i] {
            return Err(Error::Format(format!(
                "factor {} (rank {}) cannot be sent to factor {} (rank {})",
                i + 1,
                factor_ranks[i],
                pi[i] + 1,
                factor_ranks[pi[i]]
            )));
        }
        let local = parse_cycle_notation(&nodes[i], factor_ranks[i])?;
        perm.extend(local.iter().map(|&k| offsets[pi[i]] + k));
    }
    Ok(perm)
}

fn default_name(ix: &TitsIndex) -> String {
    let types: Vec<String> = ix.root_system().factor_types().iter().map(ToString::to_string).collect();
    types.join("x")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_quasi_split_e6() {
        let ix = parse_index("name = \"2E6\"\nseries = \"E\"\nrank = 6\nautomorphisms = [\"(1 6)(3 5)\"]\n").unwrap();
        assert_eq!(ix.name, "2E6");
        assert_eq!(ix.index.gamma().len(), 2);
        assert_eq!(ix.index.stable_levi_subsets().len(), 16);
    }

    #[test]
    fn out_of_range_cycle_is_located() {
        let text = "series = \"E\"\nrank = 6\nautomorphisms = [\"(1 9)\"]\n";
        let err = parse_index(text).unwrap_err().to_string();
        assert!(err.contains("line 3"), "{err}");
        assert!(err.contains("node 9 out of range"), "{err}");
    }

    #[test]
    fn cartan_violation_is_located() {
        let text = "series = \"B\"\nrank = 3\n\nautomorphisms = [\"(1 3)\"]\n";
        let err = parse_index(text).unwrap_err().to_string();
        assert!(err.contains("line 4") && err.contains("automorphisms"), "{err}");
    }

    #[test]
    fn unstable_kernel_is_located() {
        let text = "series = \"A\"\nrank = 3\ndelta0 = [1]\nautomorphisms = [\"(1 3)\"]\n";
        let err = parse_index(text).unwrap_err().to_string();
        assert!(err.contains("line 3") && err.contains("delta0"), "{err}");
    }

    #[test]
    fn syntax_errors_report_position() {
        let err = parse_index("series = \"A\"\nrank = \n").unwrap_err().to_string();
        assert!(err.contains("line 2"), "{err}");
        let err = parse_index("series = \"A\"\nrank = 2\ncolour = 1\n").unwrap_err().to_string();
        assert!(err.contains("colour"), "{err}");
    }

    #[test]
    fn product_with_factorwise_automorphism() {
        let text = "factors = [{ series = \"A\", rank = 3 }, { series = \"A\", rank = 3 }]\n\
                    automorphisms = [{ factors = \"(1 2)\", nodes = [\"()\", \"()\"] }, \"(1 3)(4 6)\"]\n";
        let ix = parse_index(text).unwrap();
        assert_eq!(ix.name, "A3xA3");
        assert_eq!(ix.index.gamma().len(), 4);
        assert_eq!(ix.index.generators()[0].node_perm(), &[3, 4, 5, 0, 1, 2]);
    }

    #[test]
    fn builtin_catalog_parses() {
        let cat = builtin_catalog();
        assert!(cat.iter().any(|e| e.name == "2E6"));
        let mut names: Vec<&str> = cat.iter().map(|e| e.name.as_str()).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), cat.len(), "catalog names are unique");
    }
}
