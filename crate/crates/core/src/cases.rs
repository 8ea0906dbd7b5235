//! Executable versions of the case-by-case arguments: each case builds an
//! index family, classifies it, and compares the result with an expectation
//! computed independently of the engine (a canonical form, an explicit
//! table, or a reduction to a smaller index).

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::diagram::parse_cycle_notation;
use crate::error::{Error, Result};
use crate::index::{ClassificationReport, SubsetEntry, TitsIndex};
use crate::rootsys::{self, RootSet, RootSystem, Series};
use crate::weyl::{self, WeylElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseId {
    /// Quasi-split outer forms of type A.
    TwoA,
    /// Quasi-split outer forms of type D.
    TwoD,
    /// Quasi-split triality form of D4.
    ThreeD4,
    /// Quasi-split outer form of E6.
    TwoE6,
    /// Inner forms of type A with isotropic nodes on the multiples of d.
    BnInner,
    /// d copies of an index permuted cyclically.
    ProductReduction,
    /// Split BCn against its non-multipliable Cn.
    BcReduction,
}

impl CaseId {
    pub const ALL: [CaseId; 7] = [
        CaseId::TwoA,
        CaseId::TwoD,
        CaseId::ThreeD4,
        CaseId::TwoE6,
        CaseId::BnInner,
        CaseId::ProductReduction,
        CaseId::BcReduction,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CaseId::TwoA => "2A",
            CaseId::TwoD => "2D",
            CaseId::ThreeD4 => "3D4",
            CaseId::TwoE6 => "2E6",
            CaseId::BnInner => "Bn_inner",
            CaseId::ProductReduction => "product_reduction",
            CaseId::BcReduction => "BC_reduction",
        }
    }

    pub fn parse(s: &str) -> Result<CaseId> {
        CaseId::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownCase(s.to_string(), known_cases()))
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn known_cases() -> String {
    CaseId::ALL.iter().map(|c| c.name()).collect::<Vec<_>>().join(", ")
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CaseParams {
    pub n: Option<usize>,
    pub d: Option<usize>,
    pub m: Option<usize>,
    pub factor: Option<String>,
    pub copies: Option<usize>,
}

impl CaseParams {
    pub fn rank(n: usize) -> Self {
        CaseParams { n: Some(n), ..Default::default() }
    }

    pub fn inner(n: usize, d: usize, m: usize) -> Self {
        CaseParams {
            n: Some(n),
            d: Some(d),
            m: Some(m),
            ..Default::default()
        }
    }

    pub fn product(factor: &str, copies: usize) -> Self {
        CaseParams {
            factor: Some(factor.to_string()),
            copies: Some(copies),
            ..Default::default()
        }
    }

    fn to_map(&self) -> BTreeMap<String, String> {
        let mut out = BTreeMap::new();
        for (k, v) in [("n", self.n), ("d", self.d), ("m", self.m), ("copies", self.copies)] {
            if let Some(v) = v {
                out.insert(k.to_string(), v.to_string());
            }
        }
        if let Some(f) = &self.factor {
            out.insert("factor".to_string(), f.clone());
        }
        out
    }
}

/// Supported parameter ranges.
#[derive(Debug, Clone)]
pub struct Limits {
    pub two_a: (usize, usize),
    pub two_d: (usize, usize),
    pub inner_max_n: usize,
    pub max_copies: usize,
    pub bc_max_n: usize,
    /// Relative Weyl groups are cross-checked against the exhaustive filter
    /// when the absolute Weyl group is at most this large.
    pub filter_cross_check: u128,
    pub order_bound: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            two_a: (2, 9),
            two_d: (4, 7),
            inner_max_n: 9,
            max_copies: 3,
            bc_max_n: 4,
            filter_cross_check: 100_000,
            order_bound: weyl::DEFAULT_ORDER_BOUND,
        }
    }
}

pub const PRODUCT_FACTORS: [&str; 4] = ["A2", "2A3", "D4", "3D4"];

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub subsets: usize,
    pub classes_per_rank: Vec<usize>,
    /// Classes of subsets, each subset as 1-based labels.
    pub classes: Vec<Vec<Vec<usize>>>,
    pub relative_weyl_order: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseReport {
    pub case_id: String,
    pub parameters: BTreeMap<String, String>,
    pub expected: Summary,
    pub computed: Summary,
    pub checks: Vec<Check>,
    pub pass: bool,
    pub elapsed: Duration,
}

impl CaseReport {
    pub fn failed_checks(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

struct Builder {
    checks: Vec<Check>,
}

impl Builder {
    fn new() -> Self {
        Builder { checks: Vec::new() }
    }

    fn check(&mut self, name: &str, pass: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            pass,
            detail: detail.into(),
        });
    }
}

pub fn run_paper_case(case: &str, params: &CaseParams) -> Result<CaseReport> {
    run_case(CaseId::parse(case)?, params, &Limits::default())
}

pub fn run_case(case: CaseId, params: &CaseParams, limits: &Limits) -> Result<CaseReport> {
    let start = Instant::now();
    let mut b = Builder::new();
    let (expected, computed) = match case {
        CaseId::TwoA => two_a(&mut b, need(case, "n", params.n)?, limits)?,
        CaseId::TwoD => two_d(&mut b, need(case, "n", params.n)?, limits)?,
        CaseId::ThreeD4 => three_d4(&mut b, limits)?,
        CaseId::TwoE6 => two_e6(&mut b, limits)?,
        CaseId::BnInner => bn_inner(
            &mut b,
            need(case, "n", params.n)?,
            need(case, "d", params.d)?,
            params.m.unwrap_or(0),
            limits,
        )?,
        CaseId::ProductReduction => product_reduction(
            &mut b,
            params
                .factor
                .as_deref()
                .ok_or_else(|| missing(case, "factor"))?,
            need(case, "copies", params.copies)?,
            limits,
        )?,
        CaseId::BcReduction => bc_reduction(&mut b, need(case, "n", params.n)?, limits)?,
    };
    let pass = expected == computed && b.checks.iter().all(|c| c.pass);
    Ok(CaseReport {
        case_id: case.name().to_string(),
        parameters: params.to_map(),
        expected,
        computed,
        checks: b.checks,
        pass,
        elapsed: start.elapsed(),
    })
}

/// Parameter sets run by `verify` for a case when none are given.
pub fn default_parameters(case: CaseId, limits: &Limits) -> Vec<CaseParams> {
    match case {
        CaseId::TwoA => (limits.two_a.0..=limits.two_a.1).map(CaseParams::rank).collect(),
        CaseId::TwoD => (limits.two_d.0..=limits.two_d.1).map(CaseParams::rank).collect(),
        CaseId::ThreeD4 | CaseId::TwoE6 => vec![CaseParams::default()],
        CaseId::BnInner => [(6, 3, 0), (6, 2, 0), (8, 2, 0), (9, 3, 0), (7, 2, 1), (5, 1, 0)]
            .into_iter()
            .map(|(n, d, m)| CaseParams::inner(n, d, m))
            .collect(),
        CaseId::ProductReduction => ["2A3", "D4"]
            .into_iter()
            .flat_map(|f| (2..=limits.max_copies).map(move |d| CaseParams::product(f, d)))
            .collect(),
        CaseId::BcReduction => (1..=limits.bc_max_n).map(CaseParams::rank).collect(),
    }
}

/// Every case with its default parameter sets.
pub fn default_suite(limits: &Limits) -> Vec<(CaseId, CaseParams)> {
    CaseId::ALL
        .into_iter()
        .flat_map(|c| default_parameters(c, limits).into_iter().map(move |p| (c, p)))
        .collect()
}

fn missing(case: CaseId, what: &str) -> Error {
    Error::CaseParameters {
        case: case.name().to_string(),
        message: format!("parameter `{what}` is required"),
    }
}

fn need(case: CaseId, what: &str, v: Option<usize>) -> Result<usize> {
    v.ok_or_else(|| missing(case, what))
}

fn out_of_range(case: CaseId, message: String) -> Error {
    Error::CaseParameters {
        case: case.name().to_string(),
        message,
    }
}

// Index constructors.

fn reversal(n: usize) -> Vec<usize> {
    (0..n).map(|i| n - 1 - i).collect()
}

pub fn quasi_split_a(n: usize) -> Result<TitsIndex> {
    TitsIndex::new(RootSystem::new(Series::A, n)?, &[], &[reversal(n)])
}

pub fn quasi_split_d(n: usize) -> Result<TitsIndex> {
    let mut swap: Vec<usize> = (0..n).collect();
    swap.swap(n - 2, n - 1);
    TitsIndex::new(RootSystem::new(Series::D, n)?, &[], &[swap])
}

pub fn triality() -> Result<TitsIndex> {
    TitsIndex::new(RootSystem::new(Series::D, 4)?, &[], &[parse_cycle_notation("(1 3 4)", 4)?])
}

pub fn quasi_split_e6() -> Result<TitsIndex> {
    TitsIndex::new(RootSystem::new(Series::E, 6)?, &[], &[parse_cycle_notation("(1 6)(3 5)", 6)?])
}

/// Type A of rank `rank` with Δ₀ the nodes whose 1-based label is not a
/// multiple of `d`.
pub fn inner_a(rank: usize, d: usize) -> Result<TitsIndex> {
    let delta0: Vec<usize> = (0..rank).filter(|i| (i + 1) % d != 0).collect();
    TitsIndex::new(RootSystem::new(Series::A, rank)?, &delta0, &[])
}

fn product_factor(name: &str) -> Option<Result<TitsIndex>> {
    Some(match name {
        "A2" => Ok(TitsIndex::split(RootSystem::new(Series::A, 2).ok()?)),
        "2A3" => quasi_split_a(3),
        "D4" => Ok(TitsIndex::split(RootSystem::new(Series::D, 4).ok()?)),
        "3D4" => triality(),
        _ => return None,
    })
}

/// `copies` copies of `factor` with Γ generated by the cyclic shift of the
/// copies and by the factor's automorphisms acting on every copy at once.
pub fn cyclic_power(factor: &TitsIndex, copies: usize) -> Result<TitsIndex> {
    let r = factor.root_system().rank();
    let rs = RootSystem::power(factor.root_system(), copies)?;
    let mut gens = Vec::new();
    if copies > 1 {
        gens.push((0..r * copies).map(|k| (k + r) % (r * copies)).collect::<Vec<_>>());
    }
    for g in factor.generators() {
        gens.push((0..r * copies).map(|k| (k / r) * r + g.apply(k % r)).collect());
    }
    let delta0: Vec<usize> = (0..copies)
        .flat_map(|c| factor.delta0().iter().map(move |&i| c * r + i))
        .collect();
    TitsIndex::new(rs, &delta0, &gens)
}

// Shared helpers.

/// Connected components of `members` in the Dynkin diagram, each sorted.
pub fn components(rs: &RootSystem, members: &[usize]) -> Vec<Vec<usize>> {
    let a = rs.cartan_matrix();
    let mut seen = vec![false; rs.rank()];
    let mut out = Vec::new();
    for &s in members {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut k = 0;
        while k < comp.len() {
            let x = comp[k];
            for &y in members {
                if !seen[y] && a[x][y] != 0 {
                    seen[y] = true;
                    comp.push(y);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Groups subset positions by key, classes ordered by first member.
fn partition_by_key<K: Eq + std::hash::Hash>(keys: &[K]) -> Vec<Vec<usize>> {
    let mut slot: HashMap<&K, usize> = HashMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, k) in keys.iter().enumerate() {
        match slot.get(k) {
            Some(&c) => classes[c].push(i),
            None => {
                slot.insert(k, classes.len());
                classes.push(vec![i]);
            }
        }
    }
    classes
}

fn summarize(subsets: &[SubsetEntry], classes: &[Vec<usize>], relative_weyl_order: Option<u64>) -> Summary {
    Summary {
        subsets: subsets.len(),
        classes_per_rank: ClassificationReport::classes_per_rank(classes, subsets),
        classes: classes
            .iter()
            .map(|c| c.iter().map(|&i| subsets[i].members.clone()).collect())
            .collect(),
        relative_weyl_order,
    }
}

fn standard_checks(b: &mut Builder, ix: &TitsIndex, report: &ClassificationReport) {
    b.check(
        "geometric equals rational",
        report.agreement,
        format!(
            "{} geometric, {} rational classes",
            report.geometric_classes.len(),
            report.rational_classes.len()
        ),
    );
    let replay = ix.check_witnesses(report);
    b.check(
        "witnesses replay",
        replay.is_ok(),
        replay.err().map_or_else(|| format!("{} witnesses", report.witnesses.len()), |e| e.to_string()),
    );
    if ix.is_quasi_split() {
        match ix.partition_by_fixed_subgroup() {
            Ok(p) => b.check(
                "relative roots agree with fixed-subgroup association",
                p == report.rational_classes,
                format!("{} classes under W^Γ", p.len()),
            ),
            Err(e) => b.check("relative roots agree with fixed-subgroup association", false, e.to_string()),
        }
    }
}

fn relative_order(b: &mut Builder, ix: &TitsIndex, limits: &Limits) -> Result<Option<u64>> {
    let Some(group) = ix.relative_weyl_from_generators(limits.order_bound)? else {
        b.check("relative generators stabilize the split space", false, "fell back to enumeration");
        return Ok(Some(ix.relative_weyl(limits.order_bound)?.order() as u64));
    };
    let order = group.len() as u64;
    if ix.root_system().weyl_order() <= limits.filter_cross_check {
        let filtered = ix.relative_weyl(limits.order_bound)?.order() as u64;
        b.check(
            "relative Weyl group: generators match exhaustive filter",
            filtered == order,
            format!("generated {order}, filtered {filtered}"),
        );
    }
    Ok(Some(order))
}

// Cases.

/// The canonical form of a reversal-stable subset of A_n: the rank of the
/// reversal-stable middle component (`-1` when there is none and n is odd,
/// `0` when there is none and n is even) and the sorted ranks of the other
/// components.
pub fn two_a_canonical_form(n: usize, members: &[usize]) -> (i64, Vec<usize>) {
    let mut runs: Vec<Vec<usize>> = Vec::new();
    for &i in members {
        match runs.last_mut() {
            Some(r) if *r.last().unwrap() + 1 == i => r.push(i),
            _ => runs.push(vec![i]),
        }
    }
    let mut n0 = if n.is_multiple_of(2) { 0 } else { -1 };
    let mut sides = Vec::new();
    for r in runs {
        let mirrored = n - 1 - r[0] == *r.last().unwrap();
        if mirrored {
            n0 = r.len() as i64;
        } else {
            sides.push(r.len());
        }
    }
    sides.sort_unstable();
    (n0, sides)
}

fn two_a(b: &mut Builder, n: usize, limits: &Limits) -> Result<(Summary, Summary)> {
    let (lo, hi) = limits.two_a;
    if !(lo..=hi).contains(&n) {
        return Err(out_of_range(CaseId::TwoA, format!("n must lie in {lo}..={hi}, got {n}")));
    }
    let ix = quasi_split_a(n)?;
    let report = ix.classify(limits.order_bound)?;
    let keys: Vec<(i64, Vec<usize>)> = ix
        .stable_levi_subsets()
        .iter()
        .map(|s| two_a_canonical_form(n, &s.members))
        .collect();
    let parity_ok = keys.iter().all(|(n0, _)| (n0 - n as i64).rem_euclid(2) == 0);
    b.check("middle component has the parity of n", parity_ok, "");
    let expected = partition_by_key(&keys);
    b.check(
        "geometric partition equals canonical-form partition",
        report.geometric_classes == expected,
        format!("{} canonical forms", expected.len()),
    );
    standard_checks(b, &ix, &report);
    Ok((
        summarize(&report.subsets, &expected, None),
        summarize(&report.subsets, &report.rational_classes, None),
    ))
}

/// Size of the D-tail of `members` (the components meeting the two fork nodes
/// of D_n; 0 when they are absent) and the sorted ranks of the other
/// components.
pub fn two_d_canonical_form(rs: &RootSystem, members: &[usize]) -> (usize, Vec<usize>) {
    let n = rs.rank();
    let mut n0 = 0;
    let mut others = Vec::new();
    for c in components(rs, members) {
        if c.contains(&(n - 1)) || c.contains(&(n - 2)) {
            n0 += c.len();
        } else {
            others.push(c.len());
        }
    }
    others.sort_unstable();
    (n0, others)
}

fn d_tail(rs: &RootSystem, members: &[usize]) -> Vec<usize> {
    let n = rs.rank();
    let mut tail: Vec<usize> = components(rs, members)
        .into_iter()
        .filter(|c| c.contains(&(n - 1)) || c.contains(&(n - 2)))
        .flatten()
        .collect();
    tail.sort_unstable();
    tail
}

/// Number of ambient coordinates on which some root of `set` is nonzero.
pub fn coordinate_support(rs: &RootSystem, set: &RootSet) -> usize {
    (0..rs.ambient_dim())
        .filter(|&k| set.indices().iter().any(|&r| rs.root(r)[k] != 0.into()))
        .count()
}

fn two_d(b: &mut Builder, n: usize, limits: &Limits) -> Result<(Summary, Summary)> {
    let (lo, hi) = limits.two_d;
    if !(lo..=hi).contains(&n) {
        return Err(out_of_range(CaseId::TwoD, format!("n must lie in {lo}..={hi}, got {n}")));
    }
    let ix = quasi_split_d(n)?;
    let rs = ix.root_system();
    let report = ix.classify(limits.order_bound)?;
    let subsets = ix.stable_levi_subsets();
    let keys: Vec<(usize, Vec<usize>)> = subsets.iter().map(|s| two_d_canonical_form(rs, &s.members)).collect();
    let expected = partition_by_key(&keys);
    b.check(
        "geometric partition equals canonical-form partition",
        report.geometric_classes == expected,
        format!("{} canonical forms", expected.len()),
    );

    let mut bad = Vec::new();
    for wit in &report.witnesses {
        let word: Vec<usize> = wit.word.iter().map(|&l| l - 1).collect();
        let w = WeylElement::from_word(rs, &word);
        let (from, to) = (&subsets[wit.from].members, &subsets[wit.to].members);
        let tail_ok = w.apply_set(&rs.parabolic_closure(&d_tail(rs, from))) == rs.parabolic_closure(&d_tail(rs, to))
            && keys[wit.from].0 == keys[wit.to].0;
        let source = rs.parabolic_closure(from);
        let support = coordinate_support(rs, &source);
        let support_ok = coordinate_support(rs, &w.apply_set(&source)) == support
            && coordinate_support(rs, &rs.parabolic_closure(to)) == support;
        if !(tail_ok && support_ok) {
            bad.push(format!("{:?} {} -> {}", wit.relation, wit.from, wit.to));
        }
    }
    b.check(
        "witnesses preserve the D-tail and the coordinate support",
        bad.is_empty(),
        if bad.is_empty() {
            format!("{} witnesses", report.witnesses.len())
        } else {
            bad.join("; ")
        },
    );
    standard_checks(b, &ix, &report);
    Ok((
        summarize(&report.subsets, &expected, None),
        summarize(&report.subsets, &report.rational_classes, None),
    ))
}

fn three_d4(b: &mut Builder, limits: &Limits) -> Result<(Summary, Summary)> {
    let ix = triality()?;
    let report = ix.classify(limits.order_bound)?;
    let sizes: Vec<usize> = report.subsets.iter().map(|s| s.rank).collect();
    b.check("stable subsets have sizes 0, 1, 3, 4", sizes == [0, 1, 3, 4], format!("{sizes:?}"));
    standard_checks(b, &ix, &report);
    let expected = Summary {
        subsets: 4,
        classes_per_rank: vec![1, 1, 0, 1, 1],
        classes: vec![vec![vec![]], vec![vec![2]], vec![vec![1, 3, 4]], vec![vec![1, 2, 3, 4]]],
        relative_weyl_order: Some(12),
    };
    let order = relative_order(b, &ix, limits)?;
    Ok((expected, summarize(&report.subsets, &report.rational_classes, order)))
}

/// The rank-by-rank table for the quasi-split form of E6.
pub fn two_e6_table() -> Vec<Vec<Vec<usize>>> {
    vec![
        vec![vec![]],
        vec![vec![2], vec![4]],
        vec![vec![1, 6], vec![3, 5]],
        vec![vec![2, 4]],
        vec![vec![1, 2, 6], vec![1, 4, 6], vec![2, 3, 5]],
        vec![vec![3, 4, 5]],
        vec![vec![1, 2, 4, 6]],
        vec![vec![1, 3, 5, 6]],
        vec![vec![2, 3, 4, 5]],
        vec![vec![1, 2, 3, 5, 6]],
        vec![vec![1, 3, 4, 5, 6]],
        vec![vec![1, 2, 3, 4, 5, 6]],
    ]
}

fn two_e6(b: &mut Builder, limits: &Limits) -> Result<(Summary, Summary)> {
    let ix = quasi_split_e6()?;
    let report = ix.classify(limits.order_bound)?;
    standard_checks(b, &ix, &report);

    let kind = |labels: &[usize]| {
        report
            .subsets
            .iter()
            .find(|s| s.members == labels)
            .map(|s| s.kind.clone())
            .unwrap_or_default()
    };
    for (set, want) in [
        (&[1, 3, 5, 6][..], "A2xA2"),
        (&[1, 2, 4, 6], "A2xA1xA1"),
        (&[2, 3, 4, 5], "D4"),
        (&[1, 3, 4, 5, 6], "A5"),
        (&[1, 2, 3, 5, 6], "A2xA2xA1"),
    ] {
        let got = kind(set);
        b.check(&format!("type of {set:?}"), got == want, got);
    }

    let group = weyl::generate_group(ix.root_system(), limits.order_bound)?;
    let fixed = weyl::fixed_subgroup(ix.root_system(), &group, ix.generators());
    b.check(
        "fixed subgroup of W(E6) has order |W(F4)|",
        fixed.order() == 1152,
        format!("{} of {}", fixed.order(), group.order()),
    );
    let filtered = ix.relative_weyl(limits.order_bound)?.order() as u64;
    let order = relative_order(b, &ix, limits)?;
    b.check("relative Weyl group by filter", filtered == 1152, filtered.to_string());

    let mut table = two_e6_table();
    order_like(&report.subsets, &mut table);
    let expected = Summary {
        subsets: 16,
        classes_per_rank: vec![1, 1, 2, 2, 3, 2, 1],
        classes: table,
        relative_weyl_order: Some(1152),
    };
    Ok((expected, summarize(&report.subsets, &report.rational_classes, order)))
}

/// Sorts a labelled partition into the canonical subset order.
fn order_like(subsets: &[SubsetEntry], classes: &mut [Vec<Vec<usize>>]) {
    let pos = |s: &Vec<usize>| subsets.iter().position(|e| &e.members == s).unwrap_or(usize::MAX);
    for c in classes.iter_mut() {
        c.sort_by_key(pos);
    }
    classes.sort_by_key(|c| pos(&c[0]));
}

/// Block sizes `n_j` of a Levi subset of the inner form with grid `d`: the
/// components of the subset, together with the removed grid nodes, cut
/// `1..=rank+1` into blocks of `d·n_j` coordinates.
pub fn gl_blocks(rank: usize, d: usize, members: &[usize]) -> Vec<usize> {
    let mut cuts: Vec<usize> = (0..rank).filter(|i| !members.contains(i)).map(|i| i + 1).collect();
    cuts.insert(0, 0);
    cuts.push(rank + 1);
    let mut blocks: Vec<usize> = cuts.windows(2).map(|w| (w[1] - w[0]) / d).collect();
    blocks.sort_unstable();
    blocks
}

fn factorial(k: usize) -> u64 {
    (1..=k as u64).product()
}

fn partitions_of(k: usize) -> usize {
    let mut p = vec![0usize; k + 1];
    p[0] = 1;
    for part in 1..=k {
        for total in part..=k {
            p[total] += p[total - part];
        }
    }
    p[k]
}

fn bn_inner(b: &mut Builder, n: usize, d: usize, m: usize, limits: &Limits) -> Result<(Summary, Summary)> {
    let case = CaseId::BnInner;
    if n > limits.inner_max_n || n < 2 {
        return Err(out_of_range(case, format!("n must lie in 2..={}, got {n}", limits.inner_max_n)));
    }
    if m + 2 > n {
        return Err(out_of_range(case, format!("need m <= n - 2, got n = {n}, m = {m}")));
    }
    if d == 0 || !(n - m).is_multiple_of(d) {
        return Err(out_of_range(case, format!("d must divide n - m = {}, got d = {d}", n - m)));
    }
    let rank = n - 1 - m;
    let k = (n - m) / d;
    let ix = inner_a(rank, d)?;
    let report = ix.classify(limits.order_bound)?;
    let subsets = ix.stable_levi_subsets();
    let keys: Vec<Vec<usize>> = subsets.iter().map(|s| gl_blocks(rank, d, &s.members)).collect();
    let expected = partition_by_key(&keys);
    b.check(
        "one class per partition of (n - m)/d",
        report.rational_classes.len() == partitions_of(k),
        format!("{} classes, p({k}) = {}", report.rational_classes.len(), partitions_of(k)),
    );
    for s in &subsets {
        let comps = components(ix.root_system(), &s.members);
        let ok = comps.iter().all(|c| (c.len() + 1) % d == 0);
        if !ok {
            b.check("components have sizes d·n_j - 1", false, s.to_string());
        }
    }
    standard_checks(b, &ix, &report);
    let order = relative_order(b, &ix, limits)?;
    let expected = Summary {
        relative_weyl_order: Some(factorial(k)),
        ..summarize(&report.subsets, &expected, None)
    };
    Ok((expected, summarize(&report.subsets, &report.rational_classes, order)))
}

fn product_reduction(b: &mut Builder, factor: &str, copies: usize, limits: &Limits) -> Result<(Summary, Summary)> {
    let case = CaseId::ProductReduction;
    let Some(fx) = product_factor(factor) else {
        return Err(out_of_range(
            case,
            format!("factor must be one of {}, got `{factor}`", PRODUCT_FACTORS.join(", ")),
        ));
    };
    if copies == 0 || copies > limits.max_copies {
        return Err(out_of_range(case, format!("copies must lie in 1..={}, got {copies}", limits.max_copies)));
    }
    let fx = fx?;
    let r = fx.root_system().rank();
    let px = cyclic_power(&fx, copies)?;
    let f_report = fx.classify(limits.order_bound)?;
    let p_report = px.classify(limits.order_bound)?;

    let diagonal = |labels: &[usize]| -> Vec<usize> {
        let mut out: Vec<usize> = (0..copies).flat_map(|c| labels.iter().map(move |&l| c * r + l)).collect();
        out.sort_unstable();
        out
    };
    let transported: Vec<Vec<usize>> = f_report.subsets.iter().map(|s| diagonal(&s.members)).collect();
    let mut p_subsets: Vec<Vec<usize>> = p_report.subsets.iter().map(|s| s.members.clone()).collect();
    let mut t_sorted = transported.clone();
    p_subsets.sort();
    t_sorted.sort();
    b.check(
        "stable subsets are the diagonal copies",
        p_subsets == t_sorted,
        format!("{} product subsets, {} factor subsets", p_subsets.len(), transported.len()),
    );

    let transport = |classes: &[Vec<usize>]| -> Vec<Vec<Vec<usize>>> {
        let mut out: Vec<Vec<Vec<usize>>> = classes
            .iter()
            .map(|c| c.iter().map(|&i| transported[i].clone()).collect())
            .collect();
        order_like(&p_report.subsets, &mut out);
        out
    };
    let geometric = transport(&f_report.geometric_classes);
    b.check(
        "geometric partition equals the transported factor partition",
        p_report.labelled(&p_report.geometric_classes) == geometric,
        format!("{} classes", geometric.len()),
    );
    standard_checks(b, &px, &p_report);

    let expected = Summary {
        subsets: f_report.subsets.len(),
        classes_per_rank: spread(&ClassificationReport::classes_per_rank(&f_report.rational_classes, &f_report.subsets), copies),
        classes: transport(&f_report.rational_classes),
        relative_weyl_order: None,
    };
    Ok((expected, summarize(&p_report.subsets, &p_report.rational_classes, None)))
}

/// Class counts per rank of a factor, moved to rank `copies·r`.
fn spread(counts: &[usize], copies: usize) -> Vec<usize> {
    let mut out = vec![0; (counts.len() - 1) * copies + 1];
    for (r, &c) in counts.iter().enumerate() {
        out[r * copies] = c;
    }
    out
}

fn bc_reduction(b: &mut Builder, n: usize, limits: &Limits) -> Result<(Summary, Summary)> {
    if n == 0 || n > limits.bc_max_n {
        return Err(out_of_range(
            CaseId::BcReduction,
            format!("n must lie in 1..={}, got {n}", limits.bc_max_n),
        ));
    }
    let bc = RootSystem::new(Series::BC, n)?;
    let reduced = bc.non_multipliable()?;
    let c = &reduced.system;

    let subsets: Vec<Vec<usize>> = (0u32..(1 << n))
        .map(|mask| (0..n).filter(|i| mask & (1 << i) != 0).collect())
        .collect();
    let mut images = Vec::new();
    let mut closures_ok = true;
    for s in &subsets {
        let image = reduced.map_set(&bc.parabolic_closure(s));
        closures_ok &= image == c.parabolic_closure(s);
        images.push(image);
    }
    let mut distinct = images.clone();
    distinct.sort_by(|x, y| x.indices().cmp(y.indices()));
    distinct.dedup();
    b.check(
        "closures map onto closures bijectively",
        closures_ok && distinct.len() == subsets.len(),
        format!("{} parabolic subsets", subsets.len()),
    );

    let group = weyl::generate_group(&bc, limits.order_bound)?;
    let mut equivariant = true;
    for w in &group.elements {
        let wc = WeylElement::from_word(c, w.word().unwrap_or_default());
        for r in 0..bc.num_roots() {
            let lhs = reduced.root_map[w.apply_root(r)];
            let rhs = reduced.root_map[r].map(|s| wc.apply_root(s));
            equivariant &= lhs == rhs;
        }
    }
    b.check(
        "reduction is equivariant for every Weyl element",
        equivariant,
        format!("{} elements", group.order()),
    );

    let split_bc = TitsIndex::split(bc.clone());
    let split_c = TitsIndex::split(c.clone());
    let r_bc = split_bc.classify(limits.order_bound)?;
    let r_c = split_c.classify(limits.order_bound)?;
    b.check(
        "geometric partitions agree",
        r_bc.geometric_classes == r_c.geometric_classes,
        "",
    );
    standard_checks(b, &split_bc, &r_bc);
    let types_ok = r_c
            .subsets
            .iter()
            .zip(&r_bc.subsets)
            .all(|(x, y)| x.members == y.members && rootsys::format_types(&rootsys::subsystem_type(c, &labels_to_nodes(&y.members))) == x.kind);
    b.check("Levi types correspond", types_ok, "");
    Ok((
        summarize(&r_c.subsets, &r_c.rational_classes, None),
        summarize(&r_bc.subsets, &r_bc.rational_classes, None),
    ))
}

fn labels_to_nodes(labels: &[usize]) -> Vec<usize> {
    labels.iter().map(|&l| l - 1).collect()
}
