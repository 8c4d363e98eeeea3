//! Flats (closed sets) of the cycle matroid and the closed-set summation
//! `φ_k(G; λ) = Σ_{X flat, |X| = k} χ(G / X; λ)`.
//!
//! An edge set X is closed when every edge of G whose endpoints lie in one
//! component of (V, X) already belongs to X. Loops therefore lie in every
//! flat, and parallel edges enter or leave a flat together.

use std::collections::BTreeSet;

use crate::engine::{chromatic_poly, MAX_FLAT_SCAN};
use crate::error::{Error, Result};
use crate::graph::{ComponentPartition, Graph, UnionFind};
use crate::poly::{binomial, Poly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flat {
    /// Edge ids in ascending order.
    pub edges: Vec<usize>,
    /// Components of (V, X).
    pub parts: ComponentPartition,
}

impl Flat {
    pub fn size(&self) -> usize {
        self.edges.len()
    }
}

/// Closure test for an arbitrary edge set.
pub fn is_closed(g: &Graph, edge_ids: &[usize]) -> Result<bool> {
    let mut member = vec![false; g.m()];
    for &id in edge_ids {
        g.edge(id)?;
        member[id] = true;
    }
    Ok(closed_with(g, &member).is_some())
}

/// Returns the partition of (V, X) when X is closed.
fn closed_with(g: &Graph, member: &[bool]) -> Option<ComponentPartition> {
    let mut uf = UnionFind::new(g.n());
    for (id, &(u, v)) in g.endpoints().iter().enumerate() {
        if member[id] {
            uf.union(u, v);
        }
    }
    let inside_missing = g
        .endpoints()
        .iter()
        .enumerate()
        .any(|(id, &(u, v))| !member[id] && uf.find(u) == uf.find(v));
    (!inside_missing).then(|| uf.labels())
}

fn check_scan(g: &Graph, k: usize) -> Result<()> {
    if k > g.m() {
        return Err(Error::OutOfRange(format!(
            "k = {k} exceeds the edge count {}",
            g.m()
        )));
    }
    let scan = binomial(g.m(), k) as u128;
    if scan > MAX_FLAT_SCAN {
        return Err(Error::guard(
            "flat-scan",
            format!("C({}, {k}) = {scan} > {MAX_FLAT_SCAN}", g.m()),
        ));
    }
    Ok(())
}

/// Visits every k-subset of 0..m in lexicographic order until `f` returns
/// false.
fn for_each_subset(m: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) {
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if !f(&idx) {
            return;
        }
        let Some(i) = (0..k).rev().find(|&i| idx[i] < m - k + i) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// All flats with exactly k edges, in lexicographic order of edge ids.
pub fn flats_of_size(g: &Graph, k: usize) -> Result<Vec<Flat>> {
    check_scan(g, k)?;
    let mut out = Vec::new();
    let mut member = vec![false; g.m()];
    for_each_subset(g.m(), k, |subset| {
        subset.iter().for_each(|&id| member[id] = true);
        if let Some(parts) = closed_with(g, &member) {
            out.push(Flat {
                edges: subset.to_vec(),
                parts,
            });
        }
        subset.iter().for_each(|&id| member[id] = false);
        true
    });
    Ok(out)
}

fn has_flat_of_size(g: &Graph, k: usize) -> Result<bool> {
    check_scan(g, k)?;
    let mut found = false;
    let mut member = vec![false; g.m()];
    for_each_subset(g.m(), k, |subset| {
        subset.iter().for_each(|&id| member[id] = true);
        found = closed_with(g, &member).is_some();
        subset.iter().for_each(|&id| member[id] = false);
        !found
    });
    Ok(found)
}

/// Sizes k for which at least one flat of size k exists.
pub fn feasible_k(g: &Graph) -> Result<BTreeSet<usize>> {
    let mut out = BTreeSet::new();
    for k in 0..=g.m() {
        if has_flat_of_size(g, k)? {
            out.insert(k);
        }
    }
    Ok(out)
}

/// φ_k(G; λ) as the sum of χ(G / X; λ) over flats of size k.
pub fn defect_poly_flats(g: &Graph, k: usize) -> Result<Poly> {
    let mut sum = Poly::zero();
    for flat in flats_of_size(g, k)? {
        sum = &sum + &chromatic_poly(&g.quotient(&flat.parts))?;
    }
    Ok(sum)
}

/// Minimum over flats X of size k of χ(G / X), or 0 when there is no flat
/// of that size. Chromatic numbers are read off with bound n.
pub fn min_flat_chromatic_number(g: &Graph, k: usize) -> Result<usize> {
    let bound = g.n().max(1);
    let mut best: Option<usize> = None;
    for flat in flats_of_size(g, k)? {
        let chi = chromatic_poly(&g.quotient(&flat.parts))?.smallest_positive_support(bound);
        best = Some(best.map_or(chi, |b| b.min(chi)));
    }
    Ok(best.unwrap_or(0))
}
