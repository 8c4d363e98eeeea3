//! Bivariate deletion–contraction.
//!
//! With `B(G; λ, t) = Σ_k φ_k(G; λ) t^k`:
//!
//! * a loop e is always bad: `B(G) = t · B(G \ e)`;
//! * any other edge: `B(G) = B(G \ e) + (t − 1) · B(G / e)`;
//! * an edgeless graph on n vertices: `B = λ^n`;
//! * B is multiplicative over connected components.
//!
//! Connected subproblems are memoized on [`canonical_key`]; graphs without
//! a key are simply recomputed.

use std::collections::HashMap;

use crate::canon::canonical_key;
use crate::engine::{bi_add, bi_mul, bi_shift, bi_times_t_minus_one, normalize_vector, MAX_DC_EDGES};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::Poly;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CacheStats {
    pub hits: u64,
    pub misses: u64,
}

/// One recursion engine with its own memo table. Not shared across
/// threads; run one per worker.
#[derive(Debug)]
pub struct DcEngine {
    cache: Option<HashMap<Vec<u8>, Vec<Poly>>>,
    stats: CacheStats,
}

impl Default for DcEngine {
    fn default() -> Self {
        Self::new()
    }
}

impl DcEngine {
    pub fn new() -> Self {
        Self {
            cache: Some(HashMap::new()),
            stats: CacheStats::default(),
        }
    }

    pub fn without_cache() -> Self {
        Self {
            cache: None,
            stats: CacheStats::default(),
        }
    }

    pub fn with_cache(enabled: bool) -> Self {
        if enabled {
            Self::new()
        } else {
            Self::without_cache()
        }
    }

    pub fn stats(&self) -> CacheStats {
        self.stats
    }

    pub fn cache_len(&self) -> usize {
        self.cache.as_ref().map_or(0, HashMap::len)
    }

    /// φ_0, …, φ_m as one vector of length m + 1.
    pub fn defect_vector(&mut self, g: &Graph) -> Result<Vec<Poly>> {
        if g.m() > MAX_DC_EDGES {
            return Err(Error::guard(
                "dc-edges",
                format!("m = {} > {MAX_DC_EDGES}", g.m()),
            ));
        }
        Ok(normalize_vector(self.solve(g), g.m()))
    }

    fn solve(&mut self, g: &Graph) -> Vec<Poly> {
        let loops = g.loop_count();
        if loops > 0 {
            let stripped = Graph::from_parts(
                g.n(),
                g.endpoints().iter().copied().filter(|(u, v)| u != v).collect(),
            );
            return bi_shift(&self.solve(&stripped), loops);
        }
        if g.m() == 0 {
            return vec![Poly::monomial(g.n())];
        }
        let (parts, isolated) = g.split_components();
        if parts.len() > 1 || isolated > 0 {
            return parts
                .iter()
                .fold(vec![Poly::monomial(isolated)], |acc, part| {
                    bi_mul(&acc, &self.solve(part))
                });
        }

        let key = self.cache.is_some().then(|| canonical_key(g)).flatten();
        if let (Some(cache), Some(key)) = (&self.cache, &key) {
            if let Some(hit) = cache.get(key) {
                self.stats.hits += 1;
                return hit.clone();
            }
        }

        let e = pick_edge(g);
        let (deleted, _) = g.delete_edge(e).expect("edge id in range");
        let (contracted, _) = g.contract_edge(e).expect("edge id in range");
        let result = bi_add(
            &self.solve(&deleted),
            &bi_times_t_minus_one(&self.solve(&contracted)),
        );

        if let (Some(cache), Some(key)) = (&mut self.cache, key) {
            self.stats.misses += 1;
            cache.insert(key, result.clone());
        }
        result
    }
}

/// Prefers an edge with a parallel twin (its contraction yields a loop),
/// then an edge at a vertex of smallest degree.
fn pick_edge(g: &Graph) -> usize {
    let ends = g.endpoints();
    let key = |&(u, v): &(usize, usize)| (u.min(v), u.max(v));
    let mut seen = HashMap::new();
    for (id, pair) in ends.iter().enumerate() {
        if seen.insert(key(pair), id).is_some() {
            return id;
        }
    }
    let deg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    (0..ends.len())
        .min_by_key(|&id| {
            let (u, v) = ends[id];
            (deg[u].min(deg[v]), deg[u] + deg[v])
        })
        .expect("graph has edges")
}

/// φ_0, …, φ_m by deletion–contraction with a fresh memo table.
pub fn defect_vector_dc(g: &Graph) -> Result<Vec<Poly>> {
    DcEngine::new().defect_vector(g)
}
