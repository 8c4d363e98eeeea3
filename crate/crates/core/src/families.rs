//! Graph families and closed-form k-defect results.
//!
//! Wheel convention: `W_n` has n vertices in total, a hub (vertex 0) joined
//! to every vertex of a rim cycle on vertices 1..n−1, so `m = 2n − 2`.
//! Much of the literature writes `W_n` for the wheel with an n-cycle rim;
//! this crate does not.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::engine::{bad_edge_spectrum, min_bad_edges};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::{binomial, Poly};

/// Largest n for the all-labeled-graphs corpus.
pub const MAX_ALL_GRAPHS_VERTICES: usize = 6;
/// Largest n for the all-labeled-trees corpus.
pub const MAX_ALL_TREES_VERTICES: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum FamilySpec {
    Path(usize),
    Star(usize),
    Cycle(usize),
    Wheel(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    RandomTree { n: usize, seed: u64 },
    AllLabeledGraphs(usize),
    AllLabeledTrees(usize),
}

impl FamilySpec {
    pub fn kind(&self) -> &'static str {
        match self {
            FamilySpec::Path(_) => "path",
            FamilySpec::Star(_) => "star",
            FamilySpec::Cycle(_) => "cycle",
            FamilySpec::Wheel(_) => "wheel",
            FamilySpec::Complete(_) => "complete",
            FamilySpec::CompleteBipartite(..) => "kbipartite",
            FamilySpec::RandomTree { .. } => "randomtree",
            FamilySpec::AllLabeledGraphs(_) => "allgraphs",
            FamilySpec::AllLabeledTrees(_) => "alltrees",
        }
    }

    /// True for the kinds that only ever produce trees.
    pub fn yields_trees(&self) -> bool {
        matches!(
            self,
            FamilySpec::Path(_)
                | FamilySpec::Star(_)
                | FamilySpec::RandomTree { .. }
                | FamilySpec::AllLabeledTrees(_)
        )
    }

    fn with_n(self, n: usize) -> Self {
        match self {
            FamilySpec::Path(_) => FamilySpec::Path(n),
            FamilySpec::Star(_) => FamilySpec::Star(n),
            FamilySpec::Cycle(_) => FamilySpec::Cycle(n),
            FamilySpec::Wheel(_) => FamilySpec::Wheel(n),
            FamilySpec::Complete(_) => FamilySpec::Complete(n),
            FamilySpec::CompleteBipartite(_, b) => FamilySpec::CompleteBipartite(n, b),
            FamilySpec::RandomTree { seed, .. } => FamilySpec::RandomTree { n, seed },
            FamilySpec::AllLabeledGraphs(_) => FamilySpec::AllLabeledGraphs(n),
            FamilySpec::AllLabeledTrees(_) => FamilySpec::AllLabeledTrees(n),
        }
    }

    pub fn generate(&self) -> Result<Vec<Graph>> {
        generate(self)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::CompleteBipartite(a, b) => write!(f, "kbipartite:{a},{b}"),
            FamilySpec::RandomTree { n, seed } => write!(f, "randomtree:{n},{seed}"),
            FamilySpec::Path(n)
            | FamilySpec::Star(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Wheel(n)
            | FamilySpec::Complete(n)
            | FamilySpec::AllLabeledGraphs(n)
            | FamilySpec::AllLabeledTrees(n) => write!(f, "{}:{n}", self.kind()),
        }
    }
}

impl From<FamilySpec> for String {
    fn from(spec: FamilySpec) -> String {
        spec.to_string()
    }
}

impl TryFrom<String> for FamilySpec {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

fn family_err(spec: &str, reason: impl Into<String>) -> Error {
    Error::Family {
        spec: spec.to_string(),
        reason: reason.into(),
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// `wheel:6`, `cycle:9`, `kbipartite:3,4`, `allgraphs:5`, `alltrees:6`,
    /// `path:4`, `star:5`, `complete:4`, `randomtree:8,42`.
    fn from_str(s: &str) -> Result<Self> {
        let (kind, args) = s
            .trim()
            .split_once(':')
            .ok_or_else(|| family_err(s, "expected `kind:parameters`"))?;
        let nums = args
            .split(',')
            .map(|a| a.trim().parse::<u64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| family_err(s, "parameters must be non-negative integers"))?;
        let one = || match nums.as_slice() {
            [n] => Ok(*n as usize),
            _ => Err(family_err(s, "expected exactly one parameter")),
        };
        let spec = match kind {
            "path" => FamilySpec::Path(one()?),
            "star" => FamilySpec::Star(one()?),
            "cycle" => FamilySpec::Cycle(one()?),
            "wheel" => FamilySpec::Wheel(one()?),
            "complete" => FamilySpec::Complete(one()?),
            "allgraphs" => FamilySpec::AllLabeledGraphs(one()?),
            "alltrees" => FamilySpec::AllLabeledTrees(one()?),
            "kbipartite" => match nums.as_slice() {
                [a, b] => FamilySpec::CompleteBipartite(*a as usize, *b as usize),
                _ => return Err(family_err(s, "expected `kbipartite:a,b`")),
            },
            "randomtree" => match nums.as_slice() {
                [n, seed] => FamilySpec::RandomTree {
                    n: *n as usize,
                    seed: *seed,
                },
                _ => return Err(family_err(s, "expected `randomtree:n,seed`")),
            },
            other => return Err(family_err(s, format!("unknown family `{other}`"))),
        };
        Ok(spec)
    }
}

/// Parses a single spec or a range over the first parameter, e.g.
/// `wheel:4..8` (inclusive) or `kbipartite:2..4,3`.
pub fn parse_corpus(s: &str) -> Result<Vec<FamilySpec>> {
    let Some((kind, args)) = s.trim().split_once(':') else {
        return Err(family_err(s, "expected `kind:parameters`"));
    };
    let Some((lo, rest)) = args.split_once("..") else {
        return Ok(vec![s.parse()?]);
    };
    let (hi, tail) = match rest.split_once(',') {
        Some((hi, tail)) => (hi, format!(",{tail}")),
        None => (rest, String::new()),
    };
    let parse = |x: &str| {
        x.trim()
            .parse::<usize>()
            .map_err(|_| family_err(s, "range bounds must be integers"))
    };
    let (lo, hi) = (parse(lo)?, parse(hi)?);
    if lo > hi {
        return Err(family_err(s, "empty range"));
    }
    let template: FamilySpec = format!("{kind}:{lo}{tail}").parse()?;
    Ok((lo..=hi).map(|n| template.with_n(n)).collect())
}

fn need(spec: &FamilySpec, ok: bool, reason: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(family_err(&spec.to_string(), reason))
    }
}

/// Deterministic graphs for a spec.
pub fn generate(spec: &FamilySpec) -> Result<Vec<Graph>> {
    Ok(match *spec {
        FamilySpec::Path(n) => {
            need(spec, n >= 1, "path needs n >= 1")?;
            vec![path(n)]
        }
        FamilySpec::Star(n) => {
            need(spec, n >= 1, "star needs n >= 1")?;
            vec![star(n)]
        }
        FamilySpec::Cycle(n) => {
            need(spec, n >= 3, "cycle needs n >= 3")?;
            vec![cycle(n)]
        }
        FamilySpec::Wheel(n) => {
            need(spec, n >= 4, "wheel needs n >= 4 (hub plus a rim of n - 1)")?;
            vec![wheel(n)]
        }
        FamilySpec::Complete(n) => {
            need(spec, n >= 1, "complete graph needs n >= 1")?;
            vec![complete(n)]
        }
        FamilySpec::CompleteBipartite(a, b) => {
            need(spec, a >= 1 && b >= 1, "both sides need at least one vertex")?;
            vec![complete_bipartite(a, b)]
        }
        FamilySpec::RandomTree { n, seed } => {
            need(spec, n >= 1, "tree needs n >= 1")?;
            vec![random_tree(n, seed)]
        }
        FamilySpec::AllLabeledGraphs(n) => {
            need(spec, n <= MAX_ALL_GRAPHS_VERTICES, "all labeled graphs limited to n <= 6")?;
            all_labeled_graphs(n)
        }
        FamilySpec::AllLabeledTrees(n) => {
            need(
                spec,
                (1..=MAX_ALL_TREES_VERTICES).contains(&n),
                "all labeled trees limited to 1 <= n <= 8",
            )?;
            all_labeled_trees(n)
        }
    })
}

pub fn path(n: usize) -> Graph {
    Graph::from_parts(n, (1..n).map(|i| (i - 1, i)).collect())
}

/// Hub 0 joined to leaves 1..n−1.
pub fn star(n: usize) -> Graph {
    Graph::from_parts(n, (1..n).map(|i| (0, i)).collect())
}

pub fn cycle(n: usize) -> Graph {
    Graph::from_parts(n, (0..n).map(|i| (i, (i + 1) % n)).collect())
}

/// Hub 0, rim 1..n−1; spokes first, then rim edges.
pub fn wheel(n: usize) -> Graph {
    let rim = n - 1;
    let mut ends: Vec<(usize, usize)> = (1..=rim).map(|i| (0, i)).collect();
    ends.extend((0..rim).map(|i| (1 + i, 1 + (i + 1) % rim)));
    Graph::from_parts(n, ends)
}

pub fn complete(n: usize) -> Graph {
    Graph::from_parts(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect())
}

/// Sides 0..a and a..a+b.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::from_parts(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))).collect())
}

/// Uniform labeled tree from a seeded Prüfer sequence.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    if n <= 2 {
        return path(n);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    prufer_decode(n, &seq)
}

/// Every simple graph on vertices 0..n, edges taken from the lexicographic
/// pair order by the bits of a counter.
pub fn all_labeled_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let ends = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            Graph::from_parts(n, ends)
        })
        .collect()
}

/// All n^(n−2) labeled trees, one per Prüfer sequence in lexicographic
/// order.
pub fn all_labeled_trees(n: usize) -> Vec<Graph> {
    if n <= 2 {
        return vec![path(n)];
    }
    let len = n - 2;
    let total = n.pow(len as u32);
    let mut seq = vec![0usize; len];
    let mut out = Vec::with_capacity(total);
    for _ in 0..total {
        out.push(prufer_decode(n, &seq));
        for slot in seq.iter_mut().rev() {
            *slot += 1;
            if *slot < n {
                break;
            }
            *slot = 0;
        }
    }
    out
}

/// Standard Prüfer decoding; edges are emitted as (leaf, attachment).
pub fn prufer_decode(n: usize, seq: &[usize]) -> Graph {
    assert_eq!(seq.len() + 2, n, "Prüfer sequence length must be n - 2");
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut ends = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
        ends.push((leaf.min(x), leaf.max(x)));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    ends.push((rest[0], rest[1]));
    Graph::from_parts(n, ends)
}

/// C(n−1, k) λ (λ−1)^(n−1−k).
pub fn tree_defect_poly(n: usize, k: usize) -> Result<Poly> {
    if n == 0 || k > n - 1 {
        return Err(Error::OutOfRange(format!(
            "tree formula needs n >= 1 and 0 <= k <= n - 1 (n = {n}, k = {k})"
        )));
    }
    Ok((&Poly::lambda() * &Poly::linear(1).pow(n - 1 - k)).scale(binomial(n - 1, k)))
}

/// C(n, k) [(λ−1)^(n−k) + (−1)^(n−k) (λ−1)].
pub fn cycle_defect_poly(n: usize, k: usize) -> Result<Poly> {
    if n == 0 || k > n {
        return Err(Error::OutOfRange(format!(
            "cycle formula needs n >= 1 and 0 <= k <= n (n = {n}, k = {k})"
        )));
    }
    let sign = if (n - k).is_multiple_of(2) { 1 } else { -1 };
    let bracket = &Poly::linear(1).pow(n - k) + &Poly::linear(1).scale(sign);
    Ok(bracket.scale(binomial(n, k)))
}

/// 2 for 0 ≤ k ≤ n−2, 1 at k = n−1, 0 beyond.
pub fn tree_defect_number(n: usize, k: usize) -> usize {
    match n {
        0 => 0,
        1 => usize::from(k == 0),
        _ if k + 2 <= n => 2,
        _ if k + 1 == n => 1,
        _ => 0,
    }
}

/// Parity rule for 1 ≤ k ≤ n−2; χ(C_n) at k = 0; 0 at k = n−1; 1 at k = n.
pub fn cycle_defect_number(n: usize, k: usize) -> usize {
    if n < 3 || k > n {
        return 0;
    }
    if k == 0 {
        return if n.is_multiple_of(2) { 2 } else { 3 };
    }
    if k == n {
        return 1;
    }
    if k == n - 1 {
        return 0;
    }
    if (n - k).is_multiple_of(2) {
        2
    } else {
        3
    }
}

/// Wheel defect numbers with the zero set {2n−4, 2n−3}, the window
/// m − 3 < k < m with m = 2n − 2 and edge connectivity 3.
pub fn wheel_defect_number(n: usize, k: usize) -> Result<usize> {
    if n <= 3 {
        return Err(Error::OutOfRange(format!("wheel needs n >= 4, got {n}")));
    }
    let half = n / 2;
    Ok(match k {
        0 if n.is_multiple_of(2) => 4,
        0 => 3,
        k if k < half => 3,
        k if k <= 2 * n - 5 => 2,
        k if k <= 2 * n - 3 => 0,
        k if k == 2 * n - 2 => 1,
        _ => 0,
    })
}

/// The wheel statement with its zero case read literally as
/// `2n−3 ≤ k ≤ 2n−4`, which contains no integer. `None` marks the k that
/// the literal reading leaves without a value.
pub fn wheel_defect_number_as_printed(n: usize, k: usize) -> Result<Option<usize>> {
    if n <= 3 {
        return Err(Error::OutOfRange(format!("wheel needs n >= 4, got {n}")));
    }
    let half = n / 2;
    let printed_zero = (2 * n - 3..=2 * n - 4).contains(&k);
    Ok(match k {
        0 => Some(if n.is_multiple_of(2) { 4 } else { 3 }),
        _ if printed_zero => Some(0),
        k if k == 2 * n - 2 => Some(1),
        k if half <= k && k <= 2 * n - 5 => Some(2),
        k if 1 <= k && k < half => Some(3),
        k if k > 2 * n - 2 => Some(0),
        _ => None,
    })
}

/// ⌊n/2⌋: fewest bad edges of a 2-coloring of W_n.
pub fn wheel_min_bad_2col(n: usize) -> Result<usize> {
    if n <= 3 {
        return Err(Error::OutOfRange(format!("wheel needs n >= 4, got {n}")));
    }
    Ok(n / 2)
}

/// Union over 1 ≤ p ≤ ⌊(−1 + √(8n − 15)) / 2⌋ of the integers strictly
/// between C(n−p, 2) + C(p, 2) and C(n−p+1, 2).
pub fn kn_infeasible_set(n: usize) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    if n < 2 {
        return out;
    }
    let disc = 8 * n - 15;
    // largest p with (2p + 1)^2 <= 8n − 15
    let p_max = (0..).take_while(|p: &usize| (2 * p + 1).pow(2) <= disc).last().unwrap_or(0);
    let c2 = |x: usize| x * x.saturating_sub(1) / 2;
    for p in 1..=p_max {
        let lo = c2(n - p) + c2(p);
        let hi = c2(n - p + 1);
        out.extend(lo + 1..hi);
    }
    out
}

/// All values of Σ_{v∈I} deg(v) over independent sets I (∅ gives 0).
/// Vertices carrying a loop are never independent.
pub fn independent_degree_sums(g: &Graph) -> Result<BTreeSet<usize>> {
    if g.n() > 20 {
        return Err(Error::guard("independent-sets", format!("n = {} > 20", g.n())));
    }
    let adj = g.adjacency_masks();
    let deg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut allowed = 0u64;
    for v in 0..g.n() {
        if !g.endpoints().iter().any(|&(a, b)| a == v && b == v) {
            allowed |= 1 << v;
        }
    }
    let mut sums = BTreeSet::new();
    fn rec(adj: &[u64], deg: &[usize], allowed: u64, sum: usize, sums: &mut BTreeSet<usize>) {
        sums.insert(sum);
        let mut rest = allowed;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            // only vertices above v remain candidates, so each set is built once
            rec(adj, deg, rest & !adj[v], sum + deg[v], sums);
        }
    }
    rec(&adj, &deg, allowed, 0, &mut sums);
    Ok(sums)
}

/// Bad-edge counts achieved by some coloring with at most two colors.
pub fn two_color_bad_spectrum(g: &Graph) -> Result<BTreeSet<usize>> {
    bad_edge_spectrum(g, 2)
}

/// Fewest bad edges of any 2-coloring, by enumeration.
pub fn min_bad_two_coloring(g: &Graph) -> Result<usize> {
    min_bad_edges(g, 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators() {
        let w = wheel(5);
        assert_eq!((w.n(), w.m(), w.degree(0)), (5, 8, 4));
        assert_eq!(all_labeled_trees(4).len(), 16);
        assert_eq!(all_labeled_graphs(3).len(), 8);
        assert_eq!(all_labeled_trees(6).len(), 1296);
        assert!(all_labeled_trees(5).iter().all(|t| t.m() == 4 && t.is_connected()));
        let t = random_tree(12, 7);
        assert_eq!(t, random_tree(12, 7));
        assert!(t.m() == 11 && t.is_connected());
        assert_eq!(complete_bipartite(3, 4).m(), 12);
        assert_eq!(star(5).degree(0), 4);
    }

    #[test]
    fn labeled_trees_are_distinct() {
        let trees = all_labeled_trees(5);
        let mut sets: Vec<Vec<(usize, usize)>> = trees
            .iter()
            .map(|t| {
                let mut e = t.endpoints().to_vec();
                e.sort();
                e
            })
            .collect();
        sets.sort();
        sets.dedup();
        assert_eq!(sets.len(), 125);
    }

    #[test]
    fn spec_strings() {
        assert_eq!("wheel:6".parse::<FamilySpec>().unwrap(), FamilySpec::Wheel(6));
        assert_eq!(
            "kbipartite:3,4".parse::<FamilySpec>().unwrap(),
            FamilySpec::CompleteBipartite(3, 4)
        );
        assert_eq!(FamilySpec::AllLabeledGraphs(5).to_string(), "allgraphs:5");
        assert!("wheel".parse::<FamilySpec>().is_err());
        assert!("hypercube:3".parse::<FamilySpec>().is_err());
        assert!("cycle:x".parse::<FamilySpec>().is_err());
        assert_eq!(
            parse_corpus("wheel:4..6").unwrap(),
            vec![FamilySpec::Wheel(4), FamilySpec::Wheel(5), FamilySpec::Wheel(6)]
        );
        assert_eq!(
            parse_corpus("kbipartite:1..2,3").unwrap(),
            vec![FamilySpec::CompleteBipartite(1, 3), FamilySpec::CompleteBipartite(2, 3)]
        );
        assert!(parse_corpus("cycle:5..3").is_err());
    }

    #[test]
    fn generator_ranges() {
        assert!(generate(&FamilySpec::Wheel(3)).is_err());
        assert!(generate(&FamilySpec::Cycle(2)).is_err());
        assert!(generate(&FamilySpec::AllLabeledGraphs(7)).is_err());
        assert_eq!(generate(&FamilySpec::AllLabeledGraphs(0)).unwrap().len(), 1);
    }

    #[test]
    fn closed_form_polys() {
        assert_eq!(
            tree_defect_poly(4, 2).unwrap(),
            Poly::from_coeffs(vec![0, -3, 3])
        );
        assert_eq!(
            cycle_defect_poly(4, 1).unwrap(),
            Poly::from_coeffs(vec![0, 8, -12, 4])
        );
        assert!(cycle_defect_poly(3, 2).unwrap().is_zero());
        assert_eq!(cycle_defect_poly(5, 5).unwrap(), Poly::lambda());
        assert!(tree_defect_poly(4, 4).is_err());
        assert!(cycle_defect_poly(4, 5).is_err());
    }

    #[test]
    fn closed_form_numbers() {
        assert_eq!(tree_defect_number(6, 3), 2);
        assert_eq!(tree_defect_number(6, 5), 1);
        assert_eq!(tree_defect_number(6, 6), 0);
        assert_eq!(cycle_defect_number(6, 3), 3);
        assert_eq!(cycle_defect_number(6, 5), 0);
        assert_eq!(cycle_defect_number(6, 0), 2);
        assert_eq!(cycle_defect_number(5, 0), 3);
        assert_eq!(wheel_defect_number(5, 1).unwrap(), 3);
        assert_eq!(wheel_defect_number(6, 0).unwrap(), 4);
        assert_eq!(wheel_defect_number(5, 6).unwrap(), 0);
        assert_eq!(wheel_defect_number(5, 8).unwrap(), 1);
        assert_eq!(wheel_defect_number(5, 9).unwrap(), 0);
        assert!(wheel_defect_number(3, 0).is_err());
        assert_eq!(wheel_min_bad_2col(7).unwrap(), 3);
    }

    #[test]
    fn printed_wheel_reading_leaves_a_gap() {
        for n in 4..=9 {
            let gaps: Vec<usize> = (0..=2 * n)
                .filter(|&k| wheel_defect_number_as_printed(n, k).unwrap().is_none())
                .collect();
            assert_eq!(gaps, vec![2 * n - 4, 2 * n - 3]);
        }
    }

    #[test]
    fn complete_graph_gaps() {
        assert_eq!(kn_infeasible_set(4), BTreeSet::from([4, 5]));
        assert_eq!(kn_infeasible_set(5), BTreeSet::from([5, 7, 8, 9]));
        assert_eq!(kn_infeasible_set(3), BTreeSet::from([2]));
    }

    #[test]
    fn degree_sums_and_spectra() {
        let k34 = complete_bipartite(3, 4);
        assert_eq!(
            independent_degree_sums(&k34).unwrap(),
            BTreeSet::from([0, 3, 4, 6, 8, 9, 12])
        );
        let k2 = complete(2);
        assert_eq!(independent_degree_sums(&k2).unwrap(), BTreeSet::from([0, 1]));
        assert_eq!(independent_degree_sums(&path(3)).unwrap(), BTreeSet::from([0, 1, 2]));
        assert_eq!(two_color_bad_spectrum(&cycle(4)).unwrap(), BTreeSet::from([0, 2, 4]));
        assert_eq!(two_color_bad_spectrum(&k2).unwrap(), BTreeSet::from([0, 1]));
        let spectrum = two_color_bad_spectrum(&k34).unwrap();
        let missing: BTreeSet<usize> = (0..=12).filter(|k| !spectrum.contains(k)).collect();
        // x of the 3 and y of the 4 in one color give xy + (3−x)(4−y) bad
        // edges: (x, y) = (2, 1) gives 5 and (1, 1) gives 7
        assert_eq!(missing, BTreeSet::from([1, 2, 10, 11]));
    }
}
