//! Chromatic polynomials of the underlying simple graph.
//!
//! Works on adjacency bitmasks. Deletion–contraction on sparse graphs,
//! addition–contraction on dense ones, with shortcuts for edgeless,
//! complete and disconnected graphs and for simplicial vertices.

use crate::engine::MAX_CHROMATIC_VERTICES;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::{Coeff, Poly};

/// χ(G; λ). Zero when G has a loop; parallel edges collapse.
pub fn chromatic_poly(g: &Graph) -> Result<Poly> {
    if g.n() > MAX_CHROMATIC_VERTICES {
        return Err(Error::guard(
            "chromatic-vertices",
            format!("n = {} > {MAX_CHROMATIC_VERTICES}", g.n()),
        ));
    }
    if g.has_loops() {
        return Ok(Poly::zero());
    }
    let adj: Vec<u32> = g.adjacency_masks().into_iter().map(|m| m as u32).collect();
    let alive = ((1u64 << g.n()) - 1) as u32;
    Ok(chrom(&adj, alive))
}

fn bits(mut mask: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (mask != 0).then(|| {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            v
        })
    })
}

fn chrom(adj: &[u32], alive: u32) -> Poly {
    let k = alive.count_ones() as usize;
    let degree = |v: usize| (adj[v] & alive).count_ones() as usize;
    let edges: usize = bits(alive).map(degree).sum::<usize>() / 2;
    if edges == 0 {
        return Poly::monomial(k);
    }
    if edges == k * (k - 1) / 2 {
        return Poly::falling_factorial(k);
    }

    // simplicial vertex: its neighbourhood is a clique
    for v in bits(alive) {
        let nbrs = adj[v] & alive;
        let d = nbrs.count_ones() as usize;
        if bits(nbrs).all(|w| (adj[w] & nbrs).count_ones() as usize == d - 1) {
            let rest = chrom(adj, alive & !(1 << v));
            return &rest * &Poly::linear(d as Coeff);
        }
    }

    let first = alive.trailing_zeros() as usize;
    let reach = reachable(adj, alive, first);
    if reach != alive {
        return &chrom(adj, reach) * &chrom(adj, alive & !reach);
    }

    if 4 * edges > k * (k - 1) {
        // dense: P(G) = P(G + uv) + P(G / uv) for a non-adjacent pair
        let (u, v) = bits(alive)
            .find_map(|u| {
                let non = alive & !adj[u] & !(1 << u);
                (non != 0).then(|| (u, non.trailing_zeros() as usize))
            })
            .expect("non-complete graph has a non-adjacent pair");
        let mut added = adj.to_vec();
        added[u] |= 1 << v;
        added[v] |= 1 << u;
        &chrom(&added, alive) + &chrom(&merge(adj, u, v), alive & !(1 << v))
    } else {
        let (u, v) = bits(alive)
            .find_map(|u| {
                let nb = adj[u] & alive;
                (nb != 0).then(|| (u, nb.trailing_zeros() as usize))
            })
            .expect("graph has an edge");
        let mut deleted = adj.to_vec();
        deleted[u] &= !(1 << v);
        deleted[v] &= !(1 << u);
        &chrom(&deleted, alive) - &chrom(&merge(adj, u, v), alive & !(1 << v))
    }
}

fn reachable(adj: &[u32], alive: u32, start: usize) -> u32 {
    let mut seen = 1u32 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for v in bits(frontier) {
            next |= adj[v] & alive;
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen
}

/// Merges v into u.
fn merge(adj: &[u32], u: usize, v: usize) -> Vec<u32> {
    let mut out = adj.to_vec();
    out[u] |= adj[v];
    out[u] &= !((1 << u) | (1 << v));
    for w in bits(adj[v]) {
        if w != u {
            out[w] |= 1 << u;
        }
    }
    out
}
