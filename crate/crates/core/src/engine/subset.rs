//! Subset expansion: `Σ_k φ_k t^k = Σ_{A ⊆ E} (t − 1)^|A| λ^c(A)`, where
//! c(A) counts the components of the spanning subgraph (V, A).
//!
//! The 2^m subsets are walked depth-first with a rollback union–find, so
//! each subset costs O(1) amortized. Only the table N[|A|][c(A)] is kept;
//! the polynomials are assembled from it at the end.

use crate::engine::{normalize_vector, MAX_SUBSET_EDGES};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::{binomial, Coeff, Poly};

struct Rollback {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl Rollback {
    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    /// Returns the absorbed root, if a merge happened.
    fn union(&mut self, a: usize, b: usize) -> Option<(usize, usize)> {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return None;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        Some((ra, rb))
    }

    fn undo(&mut self, (ra, rb): (usize, usize)) {
        self.parent[rb] = rb;
        self.size[ra] -= self.size[rb];
    }
}

/// φ_0, …, φ_m by subset expansion. Requires m ≤ [`MAX_SUBSET_EDGES`].
pub fn defect_vector_subset(g: &Graph) -> Result<Vec<Poly>> {
    let m = g.m();
    if m > MAX_SUBSET_EDGES {
        return Err(Error::guard(
            "subset-edges",
            format!("m = {m} > {MAX_SUBSET_EDGES}"),
        ));
    }
    let n = g.n();
    // counts[a][c] = number of subsets A with |A| = a and c(A) = c
    let mut counts = vec![vec![0u64; n + 1]; m + 1];
    let mut uf = Rollback {
        parent: (0..n).collect(),
        size: vec![1; n],
    };
    walk(g.endpoints(), 0, 0, n, &mut uf, &mut counts);

    let mut out = vec![Poly::zero(); m + 1];
    for (k, slot) in out.iter_mut().enumerate() {
        let mut coeffs = vec![0 as Coeff; n + 1];
        for (a, row) in counts.iter().enumerate().skip(k) {
            let weight = binomial(a, k) * if (a - k) % 2 == 0 { 1 } else { -1 };
            for (c, &count) in row.iter().enumerate() {
                coeffs[c] += weight * count as Coeff;
            }
        }
        *slot = Poly::from_coeffs(coeffs);
    }
    Ok(normalize_vector(out, m))
}

fn walk(
    ends: &[(usize, usize)],
    i: usize,
    size: usize,
    comps: usize,
    uf: &mut Rollback,
    counts: &mut [Vec<u64>],
) {
    if i == ends.len() {
        counts[size][comps] += 1;
        return;
    }
    walk(ends, i + 1, size, comps, uf, counts);
    let (u, v) = ends[i];
    match uf.union(u, v) {
        Some(merge) => {
            walk(ends, i + 1, size + 1, comps - 1, uf, counts);
            uf.undo(merge);
        }
        None => walk(ends, i + 1, size + 1, comps, uf, counts),
    }
}
