//! Root systems with exact rational coordinates.
//!
//! Every irreducible type is realized in the usual coordinates (A_n inside
//! `Q^{n+1}`, B/C/D/BC inside `Q^n`, E_6 and E_7 inside the E_8 lattice in
//! `Q^8`, F_4 in `Q^4`, G_2 in the sum-zero plane of `Q^3`). Simple roots
//! follow Bourbaki numbering; for E_6 that means α2 is the branch node
//! attached to α4 in the chain α1-α3-α4-α5-α6.
//!
//! Roots are stored sorted lexicographically by coordinate vector, which fixes
//! every index used elsewhere in the crate.

use std::collections::HashMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, half, int_vector, q, Vector, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    BC,
}

impl Series {
    pub const ALL: [Series; 8] = [
        Series::A,
        Series::B,
        Series::C,
        Series::D,
        Series::E,
        Series::F,
        Series::G,
        Series::BC,
    ];

    pub fn parse(s: &str) -> Option<Series> {
        Some(match s.trim() {
            "A" => Series::A,
            "B" => Series::B,
            "C" => Series::C,
            "D" => Series::D,
            "E" => Series::E,
            "F" => Series::F,
            "G" => Series::G,
            "BC" => Series::BC,
            _ => return None,
        })
    }

    /// Checks the rank constraint for this series.
    pub fn check_rank(self, rank: usize) -> Result<()> {
        let constraint = match self {
            Series::A | Series::BC if rank < 1 => "rank must be at least 1",
            Series::B | Series::C if rank < 2 => "rank must be at least 2",
            Series::D if rank < 2 => "rank must be at least 2",
            Series::E if !(6..=8).contains(&rank) => "rank must be 6, 7 or 8",
            Series::F if rank != 4 => "rank must be 4",
            Series::G if rank != 2 => "rank must be 2",
            _ => return Ok(()),
        };
        Err(Error::InvalidSeries {
            series: self.to_string(),
            rank,
            constraint,
        })
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Series::A => "A",
            Series::B => "B",
            Series::C => "C",
            Series::D => "D",
            Series::E => "E",
            Series::F => "F",
            Series::G => "G",
            Series::BC => "BC",
        };
        f.write_str(s)
    }
}

/// An irreducible Cartan type such as `E6` or `BC3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CartanType {
    pub series: Series,
    pub rank: usize,
}

impl CartanType {
    pub fn new(series: Series, rank: usize) -> Self {
        CartanType { series, rank }
    }

    /// Order of the Weyl group, from the closed formulas.
    pub fn weyl_order(self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.series {
            Series::A => fact(n + 1),
            Series::B | Series::C | Series::BC => (1u128 << n) * fact(n),
            Series::D => (1u128 << (n - 1)) * fact(n),
            Series::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Series::F => 1152,
            Series::G => 12,
        }
    }

    /// Number of roots, from the closed formulas.
    pub fn root_count(self) -> usize {
        let n = self.rank;
        match self.series {
            Series::A => n * (n + 1),
            Series::B | Series::C => 2 * n * n,
            Series::D => 2 * n * (n - 1),
            Series::BC => 2 * n * n + 2 * n,
            Series::E => match n {
                6 => 72,
                7 => 126,
                _ => 240,
            },
            Series::F => 48,
            Series::G => 12,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series, self.rank)
    }
}

/// Formats a list of irreducible types as `A2xA1xA1`, or `-` when empty.
pub fn format_types(types: &[CartanType]) -> String {
    if types.is_empty() {
        return "-".to_string();
    }
    types.iter().map(ToString::to_string).collect::<Vec<_>>().join("x")
}

/// One irreducible factor of a (possibly product) root system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub kind: CartanType,
    /// Position of the factor's first simple root in `RootSystem::simple`.
    pub simple_offset: usize,
    pub ambient_offset: usize,
    pub ambient_dim: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesLabel {
    Irreducible(Series),
    Product,
}

/// A sorted set of positions into a root system's root list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RootSet(Vec<usize>);

impl RootSet {
    pub fn from_indices(mut indices: Vec<usize>) -> Self {
        indices.sort_unstable();
        indices.dedup();
        RootSet(indices)
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    label: SeriesLabel,
    factors: Vec<Factor>,
    rank: usize,
    ambient_dim: usize,
    roots: Vec<Vector>,
    simple: Vec<usize>,
    coeffs: Vec<Vec<i64>>,
    negation: Vec<usize>,
    lookup: HashMap<Vector, usize>,
    root_factor: Vec<usize>,
}

impl RootSystem {
    /// Builds the irreducible root system of the given series and rank.
    pub fn new(series: Series, rank: usize) -> Result<RootSystem> {
        series.check_rank(rank)?;
        let (dim, roots, simple) = match series {
            Series::A => type_a(rank),
            Series::B => type_bcd(rank, true, false, false),
            Series::C => type_bcd(rank, false, true, false),
            Series::D => type_bcd(rank, false, false, true),
            Series::BC => type_bcd(rank, true, true, false),
            Series::E => type_e(rank),
            Series::F => type_f4(),
            Series::G => type_g2(),
        };
        let factor = Factor {
            kind: CartanType::new(series, rank),
            simple_offset: 0,
            ambient_offset: 0,
            ambient_dim: dim,
        };
        RootSystem::assemble(
            SeriesLabel::Irreducible(series),
            vec![factor],
            dim,
            roots,
            simple,
        )
    }

    /// Block-diagonal product. A product of one factor is that factor.
    pub fn product(factors: &[RootSystem]) -> Result<RootSystem> {
        if factors.len() == 1 {
            return Ok(factors[0].clone());
        }
        let dim: usize = factors.iter().map(|f| f.ambient_dim).sum();
        let mut roots = Vec::new();
        let mut simple = Vec::new();
        let mut parts = Vec::new();
        let (mut amb_off, mut simple_off) = (0, 0);
        for f in factors {
            let embed = |v: &Vector| {
                let mut out = vec![Q::zero(); dim];
                out[amb_off..amb_off + f.ambient_dim].clone_from_slice(v);
                out
            };
            roots.extend(f.roots.iter().map(embed));
            simple.extend(f.simple_roots().map(embed));
            for part in &f.factors {
                parts.push(Factor {
                    kind: part.kind,
                    simple_offset: simple_off + part.simple_offset,
                    ambient_offset: amb_off + part.ambient_offset,
                    ambient_dim: part.ambient_dim,
                });
            }
            amb_off += f.ambient_dim;
            simple_off += f.rank;
        }
        RootSystem::assemble(SeriesLabel::Product, parts, dim, roots, simple)
    }

    /// `count` copies of the same system.
    pub fn power(factor: &RootSystem, count: usize) -> Result<RootSystem> {
        RootSystem::product(&vec![factor.clone(); count])
    }

    fn assemble(
        label: SeriesLabel,
        factors: Vec<Factor>,
        ambient_dim: usize,
        mut roots: Vec<Vector>,
        simple_vectors: Vec<Vector>,
    ) -> Result<RootSystem> {
        roots.sort();
        roots.dedup();
        let lookup: HashMap<Vector, usize> =
            roots.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        let simple = simple_vectors
            .iter()
            .map(|v| {
                lookup
                    .get(v)
                    .copied()
                    .ok_or_else(|| Error::Internal(format!("simple root {v:?} is not a root")))
            })
            .collect::<Result<Vec<_>>>()?;
        let negation = roots
            .iter()
            .map(|v| {
                lookup
                    .get(&linalg::neg(v))
                    .copied()
                    .ok_or_else(|| Error::Internal("root set not closed under negation".into()))
            })
            .collect::<Result<Vec<_>>>()?;

        let gram_inv = linalg::inverse(&linalg::gram(&simple_vectors))
            .ok_or_else(|| Error::Internal("simple roots are linearly dependent".into()))?;
        let mut coeffs = Vec::with_capacity(roots.len());
        for v in &roots {
            let rhs: Vec<Q> = simple_vectors.iter().map(|a| linalg::dot(v, a)).collect();
            let c = linalg::mat_vec(&gram_inv, &rhs);
            if !linalg::is_integral(&c) {
                return Err(Error::Internal(format!("root {v:?} is not an integer combination")));
            }
            let c: Vec<i64> = c.iter().map(|x| x.to_integer()).collect();
            if c.iter().any(|&x| x > 0) && c.iter().any(|&x| x < 0) {
                return Err(Error::Internal(format!("root {v:?} has mixed-sign coefficients")));
            }
            coeffs.push(c);
        }

        let root_factor = coeffs
            .iter()
            .map(|c| {
                let first = c.iter().position(|&x| x != 0).unwrap_or(0);
                factors
                    .iter()
                    .rposition(|f| f.simple_offset <= first)
                    .unwrap_or(0)
            })
            .collect();

        Ok(RootSystem {
            label,
            rank: simple.len(),
            factors,
            ambient_dim,
            roots,
            simple,
            coeffs,
            negation,
            lookup,
            root_factor,
        })
    }

    pub fn label(&self) -> SeriesLabel {
        self.label
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn roots(&self) -> &[Vector] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &Vector {
        &self.roots[i]
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    /// Root-list positions of the simple roots, in Bourbaki order.
    pub fn simple_indices(&self) -> &[usize] {
        &self.simple
    }

    pub fn simple_root(&self, i: usize) -> &Vector {
        &self.roots[self.simple[i]]
    }

    pub fn simple_roots(&self) -> impl Iterator<Item = &Vector> + '_ {
        self.simple.iter().map(move |&i| &self.roots[i])
    }

    /// Coefficients of root `i` in the simple roots.
    pub fn coefficients(&self, i: usize) -> &[i64] {
        &self.coeffs[i]
    }

    pub fn is_positive(&self, i: usize) -> bool {
        self.coeffs[i].iter().any(|&c| c > 0)
    }

    pub fn negation(&self, i: usize) -> usize {
        self.negation[i]
    }

    pub fn index_of(&self, v: &[Q]) -> Option<usize> {
        self.lookup.get(v).copied()
    }

    /// Factor containing root `i`.
    pub fn factor_of_root(&self, i: usize) -> usize {
        self.root_factor[i]
    }

    /// Factor containing simple root `node`.
    pub fn factor_of_node(&self, node: usize) -> usize {
        self.factors
            .iter()
            .rposition(|f| f.simple_offset <= node)
            .unwrap_or(0)
    }

    /// Irreducible types of the factors, in factor order.
    pub fn factor_types(&self) -> Vec<CartanType> {
        self.factors.iter().map(|f| f.kind).collect()
    }

    pub fn is_reduced(&self) -> bool {
        self.roots.iter().all(|v| self.index_of(&linalg::scale(q(2), v)).is_none())
    }

    /// Weyl group order from the closed formulas.
    pub fn weyl_order(&self) -> u128 {
        self.factors.iter().map(|f| f.kind.weyl_order()).product()
    }

    /// Reflection of `v` through root `alpha`.
    pub fn reflect(v: &[Q], alpha: &[Q]) -> Vector {
        let c = q(2) * linalg::dot(v, alpha) / linalg::dot(alpha, alpha);
        linalg::sub(v, &linalg::scale(c, alpha))
    }

    /// Cartan matrix over the simple roots: entry `(i, j)` is
    /// `2<αi,αj>/<αj,αj>`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let simple: Vec<&Vector> = self.simple_roots().collect();
        simple
            .iter()
            .map(|a| simple.iter().map(|b| cartan_integer(a, b)).collect())
            .collect()
    }

    /// Roots lying in the integer span of the simple roots `subset`
    /// (positions into the simple-root list).
    pub fn parabolic_closure(&self, subset: &[usize]) -> RootSet {
        let mut inside = vec![false; self.rank];
        for &i in subset {
            inside[i] = true;
        }
        RootSet(
            (0..self.roots.len())
                .filter(|&r| {
                    self.coeffs[r]
                        .iter()
                        .enumerate()
                        .all(|(j, &c)| c == 0 || inside[j])
                })
                .collect(),
        )
    }

    /// Positive roots of the closure of `subset`.
    pub fn positive_closure(&self, subset: &[usize]) -> RootSet {
        let all = self.parabolic_closure(subset);
        RootSet(all.0.into_iter().filter(|&r| self.is_positive(r)).collect())
    }

    /// The system of non-multipliable roots (α with 2α not a root), with its
    /// simple roots in the same positions: a multipliable simple root α is
    /// replaced by 2α.
    pub fn non_multipliable(&self) -> Result<NonMultipliable> {
        let keep: Vec<bool> = self
            .roots
            .iter()
            .map(|v| self.index_of(&linalg::scale(q(2), v)).is_none())
            .collect();
        let roots: Vec<Vector> = self
            .roots
            .iter()
            .zip(&keep)
            .filter(|(_, &k)| k)
            .map(|(v, _)| v.clone())
            .collect();
        let simple: Vec<Vector> = self
            .simple
            .iter()
            .map(|&i| {
                if keep[i] {
                    self.roots[i].clone()
                } else {
                    linalg::scale(q(2), &self.roots[i])
                }
            })
            .collect();
        let factors = self
            .factors
            .iter()
            .map(|f| Factor {
                kind: match f.kind.series {
                    Series::BC => CartanType::new(Series::C, f.kind.rank),
                    _ => f.kind,
                },
                ..f.clone()
            })
            .collect();
        let label = match self.label {
            SeriesLabel::Irreducible(Series::BC) => SeriesLabel::Irreducible(Series::C),
            other => other,
        };
        let system = RootSystem::assemble(label, factors, self.ambient_dim, roots, simple)?;
        let root_map = self
            .roots
            .iter()
            .zip(&keep)
            .map(|(v, &k)| if k { system.index_of(v) } else { None })
            .collect();
        Ok(NonMultipliable { system, root_map })
    }
}

/// `2<a,b>/<b,b>`, which is an integer for any two roots.
pub fn cartan_integer(a: &[Q], b: &[Q]) -> i64 {
    let x = q(2) * linalg::dot(a, b) / linalg::dot(b, b);
    debug_assert!(x.is_integer());
    x.to_integer()
}

/// The reduction of a (possibly non-reduced) root system to its
/// non-multipliable roots.
#[derive(Debug, Clone)]
pub struct NonMultipliable {
    pub system: RootSystem,
    /// Position of each input root in `system`, when it survives.
    pub root_map: Vec<Option<usize>>,
}

impl NonMultipliable {
    /// `R ↦ R ∩ (non-multipliable roots)`, re-indexed into the image system.
    pub fn map_set(&self, set: &RootSet) -> RootSet {
        RootSet::from_indices(set.indices().iter().filter_map(|&i| self.root_map[i]).collect())
    }
}

// Realizations.

fn unit(dim: usize, i: usize, c: i64) -> Vector {
    let mut v = vec![Q::zero(); dim];
    v[i] = q(c);
    v
}

fn pm(dim: usize, i: usize, a: i64, j: usize, b: i64) -> Vector {
    let mut v = vec![Q::zero(); dim];
    v[i] = q(a);
    v[j] = q(b);
    v
}

fn type_a(n: usize) -> (usize, Vec<Vector>, Vec<Vector>) {
    let dim = n + 1;
    let mut roots = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            if i != j {
                roots.push(pm(dim, i, 1, j, -1));
            }
        }
    }
    let simple = (0..n).map(|i| pm(dim, i, 1, i + 1, -1)).collect();
    (dim, roots, simple)
}

/// Classical families in `Q^n`: ±ei±ej always, plus ±ei (short) and/or ±2ei
/// (long). D_n takes neither.
fn type_bcd(n: usize, short: bool, long: bool, d: bool) -> (usize, Vec<Vector>, Vec<Vector>) {
    let dim = n;
    let mut roots = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            for (a, b) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                roots.push(pm(dim, i, a, j, b));
            }
        }
        if short {
            roots.push(unit(dim, i, 1));
            roots.push(unit(dim, i, -1));
        }
        if long {
            roots.push(unit(dim, i, 2));
            roots.push(unit(dim, i, -2));
        }
    }
    let mut simple: Vec<Vector> = (0..n.saturating_sub(1))
        .map(|i| pm(dim, i, 1, i + 1, -1))
        .collect();
    if d {
        simple.push(pm(dim, n - 2, 1, n - 1, 1));
    } else if short {
        // B_n and BC_n: the short (multipliable, for BC) root e_n.
        simple.push(unit(dim, n - 1, 1));
    } else {
        simple.push(unit(dim, n - 1, 2));
    }
    (dim, roots, simple)
}

fn e8_roots() -> Vec<Vector> {
    let dim = 8;
    let mut roots = Vec::with_capacity(240);
    for i in 0..dim {
        for j in (i + 1)..dim {
            for (a, b) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                roots.push(pm(dim, i, a, j, b));
            }
        }
    }
    for mask in 0u32..256 {
        if mask.count_ones() % 2 == 0 {
            roots.push(
                (0..dim)
                    .map(|k| if mask & (1 << k) != 0 { half(-1) } else { half(1) })
                    .collect(),
            );
        }
    }
    roots
}

fn e8_simple() -> Vec<Vector> {
    let mut simple = vec![vec![half(1), half(-1), half(-1), half(-1), half(-1), half(-1), half(-1), half(1)]];
    simple.push(int_vector(&[1, 1, 0, 0, 0, 0, 0, 0]));
    for k in 0..6 {
        simple.push(pm(8, k + 1, 1, k, -1));
    }
    simple
}

fn type_e(n: usize) -> (usize, Vec<Vector>, Vec<Vector>) {
    let simple: Vec<Vector> = e8_simple().into_iter().take(n).collect();
    let all = e8_roots();
    if n == 8 {
        return (8, all, simple);
    }
    // E_n roots are the E_8 roots orthogonal to the complement of span(α1..αn).
    let normals = linalg::kernel(&simple, 8);
    let roots = all
        .into_iter()
        .filter(|r| normals.iter().all(|v| linalg::dot(r, v).is_zero()))
        .collect();
    (8, roots, simple)
}

fn type_f4() -> (usize, Vec<Vector>, Vec<Vector>) {
    let dim = 4;
    let (_, mut roots, _) = type_bcd(4, true, false, false);
    for mask in 0u32..16 {
        roots.push(
            (0..dim)
                .map(|k| if mask & (1 << k) != 0 { half(-1) } else { half(1) })
                .collect(),
        );
    }
    let simple = vec![
        pm(dim, 1, 1, 2, -1),
        pm(dim, 2, 1, 3, -1),
        unit(dim, 3, 1),
        vec![half(1), half(-1), half(-1), half(-1)],
    ];
    (dim, roots, simple)
}

fn type_g2() -> (usize, Vec<Vector>, Vec<Vector>) {
    let dim = 3;
    let mut roots = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                roots.push(pm(dim, i, 1, j, -1));
                let mut long = vec![q(-1); 3];
                long[i] = q(2);
                long[j] = q(-1);
                roots.push(long.clone());
                roots.push(linalg::neg(&long));
            }
        }
    }
    let simple = vec![int_vector(&[1, -1, 0]), int_vector(&[-2, 1, 1])];
    (dim, roots, simple)
}

/// Determines the isomorphism type of a finite root system given only as a
/// set of vectors.
///
/// A positive system is chosen by the sign of the first nonzero coordinate;
/// simple roots are the positive roots that are not a sum of two positive
/// roots. Components are then recognized from rank, bond multiplicities, root
/// count and (for the doubly-laced families) which end carries the short
/// roots. `B2` and `C2` coincide and are reported as `B2`. The result is
/// sorted by decreasing rank.
pub fn identify_type(vectors: &[Vector]) -> Vec<CartanType> {
    let set: std::collections::HashSet<&Vector> = vectors.iter().collect();
    let positive: Vec<&Vector> = vectors.iter().filter(|v| linalg::lex_sign(v) > 0).collect();
    let mut decomposable = std::collections::HashSet::new();
    for a in &positive {
        for b in &positive {
            let s = linalg::add(a, b);
            if set.contains(&s) {
                decomposable.insert(s);
            }
        }
    }
    let simple: Vec<&Vector> = positive
        .iter()
        .copied()
        .filter(|v| !decomposable.contains(*v))
        .collect();
    let r = simple.len();
    let cartan: Vec<Vec<i64>> = simple
        .iter()
        .map(|a| simple.iter().map(|b| cartan_integer(a, b)).collect())
        .collect();

    // Connected components of the Dynkin diagram.
    let mut comp = vec![usize::MAX; r];
    let mut ncomp = 0;
    for s in 0..r {
        if comp[s] != usize::MAX {
            continue;
        }
        let mut stack = vec![s];
        comp[s] = ncomp;
        while let Some(x) = stack.pop() {
            for y in 0..r {
                if comp[y] == usize::MAX && cartan[x][y] != 0 {
                    comp[y] = ncomp;
                    stack.push(y);
                }
            }
        }
        ncomp += 1;
    }

    let mut types = Vec::new();
    for c in 0..ncomp {
        let nodes: Vec<usize> = (0..r).filter(|&i| comp[i] == c).collect();
        let others: Vec<&Vector> = (0..r).filter(|&i| comp[i] != c).map(|i| simple[i]).collect();
        let count = vectors
            .iter()
            .filter(|v| others.iter().all(|o| linalg::dot(v, o).is_zero()))
            .count();
        let rank = nodes.len();
        let non_reduced = nodes
            .iter()
            .any(|&i| set.contains(&linalg::scale(q(2), simple[i])));
        let bond = nodes
            .iter()
            .flat_map(|&i| nodes.iter().map(move |&j| (i, j)))
            .filter(|(i, j)| i != j)
            .map(|(i, j)| cartan[i][j] * cartan[j][i])
            .max()
            .unwrap_or(0);
        let series = if non_reduced {
            Series::BC
        } else if bond == 3 {
            Series::G
        } else if bond == 2 {
            if rank == 4 && count == 48 {
                Series::F
            } else if rank == 2 {
                Series::B
            } else {
                let norms: Vec<Q> = nodes.iter().map(|&i| linalg::dot(simple[i], simple[i])).collect();
                let max = norms.iter().max().copied().unwrap_or_default();
                let long = norms.iter().filter(|&&x| x == max).count();
                if long == 1 {
                    Series::C
                } else {
                    Series::B
                }
            }
        } else if count == rank * (rank + 1) {
            Series::A
        } else if rank >= 4 && count == 2 * rank * (rank - 1) {
            Series::D
        } else {
            Series::E
        };
        types.push(CartanType::new(series, rank));
    }
    types.sort_by(|a, b| b.rank.cmp(&a.rank).then(a.series.cmp(&b.series)));
    types
}

/// Type of the sub-root-system spanned by simple roots `subset`.
pub fn subsystem_type(rs: &RootSystem, subset: &[usize]) -> Vec<CartanType> {
    let closure = rs.parabolic_closure(subset);
    let vectors: Vec<Vector> = closure.indices().iter().map(|&i| rs.root(i).clone()).collect();
    identify_type(&vectors)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: Series, n: usize) -> RootSystem {
        RootSystem::new(s, n).unwrap()
    }

    #[test]
    fn smallest_system() {
        let a1 = rs(Series::A, 1);
        assert_eq!(a1.roots(), &[int_vector(&[-1, 1]), int_vector(&[1, -1])]);
        assert_eq!(a1.cartan_matrix(), vec![vec![2]]);
    }

    #[test]
    fn small_counts() {
        assert_eq!(rs(Series::A, 2).num_roots(), 6);
        assert_eq!(rs(Series::A, 2).rank(), 2);
        assert_eq!(rs(Series::D, 4).num_roots(), 24);
        assert_eq!(rs(Series::BC, 2).num_roots(), 12);
    }

    #[test]
    fn cartan_matrices() {
        assert_eq!(rs(Series::A, 2).cartan_matrix(), vec![vec![2, -1], vec![-1, 2]]);
        let g2 = rs(Series::G, 2).cartan_matrix();
        let mut off = vec![g2[0][1], g2[1][0]];
        off.sort();
        assert_eq!(off, vec![-3, -1]);
        // B2: α1 long, α2 short.
        assert_eq!(rs(Series::B, 2).cartan_matrix(), vec![vec![2, -2], vec![-1, 2]]);
    }

    #[test]
    fn e6_labeling_has_alpha2_on_alpha4() {
        let a = rs(Series::E, 6).cartan_matrix();
        let edges: Vec<(usize, usize)> = (0..6)
            .flat_map(|i| (i + 1..6).map(move |j| (i, j)))
            .filter(|&(i, j)| a[i][j] != 0)
            .collect();
        assert_eq!(edges, vec![(0, 2), (1, 3), (2, 3), (3, 4), (4, 5)]);
    }

    #[test]
    fn invalid_ranks_are_rejected() {
        for (s, n) in [(Series::E, 5), (Series::F, 3), (Series::G, 3), (Series::D, 1), (Series::A, 0), (Series::BC, 0)] {
            let err = RootSystem::new(s, n).unwrap_err();
            assert!(matches!(err, Error::InvalidSeries { .. }), "{s}{n}");
            assert!(err.to_string().contains("rank must"));
        }
    }

    #[test]
    fn closure_examples() {
        let a2 = rs(Series::A, 2);
        assert!(a2.parabolic_closure(&[]).is_empty());
        assert_eq!(a2.parabolic_closure(&[0, 1]).len(), 6);
        let b2 = rs(Series::B, 2);
        let c = b2.parabolic_closure(&[0]);
        let vs: Vec<&Vector> = c.indices().iter().map(|&i| b2.root(i)).collect();
        assert_eq!(vs, vec![&int_vector(&[-1, 1]), &int_vector(&[1, -1])]);
    }

    #[test]
    fn non_multipliable_examples() {
        let bc2 = rs(Series::BC, 2).non_multipliable().unwrap();
        assert_eq!(bc2.system.roots(), rs(Series::C, 2).roots());
        assert_eq!(bc2.system.label(), SeriesLabel::Irreducible(Series::C));
        let b3 = rs(Series::B, 3);
        let same = b3.non_multipliable().unwrap();
        assert_eq!(same.system.roots(), b3.roots());
        assert!(same.root_map.iter().enumerate().all(|(i, m)| *m == Some(i)));
        let bc1 = rs(Series::BC, 1).non_multipliable().unwrap();
        assert_eq!(bc1.system.roots(), &[int_vector(&[-2]), int_vector(&[2])]);
        assert_eq!(identify_type(bc1.system.roots()), vec![CartanType::new(Series::A, 1)]);
    }

    #[test]
    fn identify_all_types() {
        let cases = [
            (Series::A, 4),
            (Series::B, 3),
            (Series::C, 3),
            (Series::D, 5),
            (Series::E, 6),
            (Series::E, 7),
            (Series::F, 4),
            (Series::G, 2),
            (Series::BC, 3),
        ];
        for (s, n) in cases {
            assert_eq!(identify_type(rs(s, n).roots()), vec![CartanType::new(s, n)], "{s}{n}");
        }
        assert_eq!(identify_type(rs(Series::D, 3).roots()), vec![CartanType::new(Series::A, 3)]);
    }

    #[test]
    fn product_keeps_factor_map() {
        let a2 = rs(Series::A, 2);
        let b2 = rs(Series::B, 2);
        let p = RootSystem::product(&[a2.clone(), b2.clone()]).unwrap();
        assert_eq!(p.label(), SeriesLabel::Product);
        assert_eq!(p.rank(), 4);
        assert_eq!(p.ambient_dim(), 5);
        assert_eq!(p.num_roots(), 14);
        assert_eq!(p.factor_of_node(1), 0);
        assert_eq!(p.factor_of_node(2), 1);
        for i in 0..p.num_roots() {
            let f = p.factor_of_root(i);
            let fac = &p.factors()[f];
            let support: Vec<usize> = (0..5).filter(|&k| !p.root(i)[k].is_zero()).collect();
            assert!(support.iter().all(|&k| k >= fac.ambient_offset && k < fac.ambient_offset + fac.ambient_dim));
        }
        assert_eq!(p.weyl_order(), 6 * 8);
    }
}
