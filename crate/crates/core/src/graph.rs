//! Finite undirected multigraphs with stable, dense edge identities.
//!
//! Loops and parallel edges are first-class: contracting an edge inside a
//! triangle yields a digon, contracting one edge of a digon yields a loop.
//! Every structural operation returns a new value.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// One edge record. `id` is its position in [`Graph::edges`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub id: usize,
    pub u: usize,
    pub v: usize,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    /// The endpoint opposite `w`.
    pub fn other(&self, w: usize) -> usize {
        if self.u == w {
            self.v
        } else {
            self.u
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    ends: Vec<(usize, usize)>,
}

/// Old edge id → new edge id after a deletion or contraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeMap(Vec<Option<usize>>);

impl EdgeMap {
    pub fn get(&self, old: usize) -> Option<usize> {
        self.0.get(old).copied().flatten()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Connected-component labelling of the vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentPartition {
    /// Component index of each vertex, numbered in order of smallest member.
    pub index: Vec<usize>,
    pub count: usize,
}

impl ComponentPartition {
    /// The vertices of each component, in ascending order.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.count];
        for (v, &c) in self.index.iter().enumerate() {
            blocks[c].push(v);
        }
        blocks
    }
}

/// A two-sided vertex partition with no edge inside either side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true when the two classes were distinct.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if ra < rb {
            self.parent[rb] = ra;
        } else {
            self.parent[ra] = rb;
        }
        true
    }

    /// Dense labels numbered by smallest member.
    pub(crate) fn labels(&mut self) -> ComponentPartition {
        let n = self.parent.len();
        let mut label = vec![usize::MAX; n];
        let mut index = vec![0; n];
        let mut count = 0;
        for v in 0..n {
            let r = self.find(v);
            if label[r] == usize::MAX {
                label[r] = count;
                count += 1;
            }
            index[v] = label[r];
        }
        ComponentPartition { index, count }
    }
}

impl Graph {
    /// Builds a graph on `n` vertices; edge ids follow input order.
    pub fn new(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let ends: Vec<(usize, usize)> = pairs.into_iter().collect();
        if let Some(&(u, v)) = ends.iter().find(|&&(u, v)| u >= n || v >= n) {
            return Err(Error::EndpointOutOfRange { u, v, n });
        }
        Ok(Self { n, ends })
    }

    pub fn empty(n: usize) -> Self {
        Self {
            n,
            ends: Vec::new(),
        }
    }

    /// Internal constructor for callers that already guarantee endpoints.
    pub(crate) fn from_parts(n: usize, ends: Vec<(usize, usize)>) -> Self {
        debug_assert!(ends.iter().all(|&(u, v)| u < n && v < n));
        Self { n, ends }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.ends.len()
    }

    pub fn edge(&self, id: usize) -> Result<Edge> {
        self.ends
            .get(id)
            .map(|&(u, v)| Edge { id, u, v })
            .ok_or(Error::UnknownEdge { id, m: self.m() })
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.ends
            .iter()
            .enumerate()
            .map(|(id, &(u, v))| Edge { id, u, v })
    }

    pub fn endpoints(&self) -> &[(usize, usize)] {
        &self.ends
    }

    pub fn loop_count(&self) -> usize {
        self.ends.iter().filter(|(u, v)| u == v).count()
    }

    pub fn has_loops(&self) -> bool {
        self.ends.iter().any(|(u, v)| u == v)
    }

    /// True when no loops and no parallel edges are present.
    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.ends
            .iter()
            .all(|&(u, v)| u != v && seen.insert((u.min(v), u.max(v))))
    }

    /// Degree counting multiplicity; a loop contributes 2.
    pub fn degree(&self, v: usize) -> usize {
        self.ends
            .iter()
            .map(|&(a, b)| (a == v) as usize + (b == v) as usize)
            .sum()
    }

    /// Neighbor bitmasks of the underlying simple graph (loops dropped).
    /// Only meaningful for `n <= 64`.
    pub fn adjacency_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "adjacency masks need n <= 64");
        let mut adj = vec![0u64; self.n];
        for &(u, v) in &self.ends {
            if u != v {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
        adj
    }

    /// Edge multiplicity matrix; loops on the diagonal.
    pub fn multiplicity_matrix(&self) -> Vec<Vec<u32>> {
        let mut mat = vec![vec![0u32; self.n]; self.n];
        for &(u, v) in &self.ends {
            mat[u][v] += 1;
            if u != v {
                mat[v][u] += 1;
            }
        }
        mat
    }

    pub fn is_loop(&self, e: usize) -> Result<bool> {
        Ok(self.edge(e)?.is_loop())
    }

    /// An edge is a bridge iff deleting it increases the component count.
    pub fn is_bridge(&self, e: usize) -> Result<bool> {
        let edge = self.edge(e)?;
        if edge.is_loop() {
            return Ok(false);
        }
        Ok(!self.reachable_without(edge.u, edge.v, e))
    }

    fn reachable_without(&self, from: usize, to: usize, skip: usize) -> bool {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([from]);
        seen[from] = true;
        let adj = self.incidence();
        while let Some(x) = queue.pop_front() {
            if x == to {
                return true;
            }
            for &id in &adj[x] {
                if id == skip {
                    continue;
                }
                let y = Edge {
                    id,
                    u: self.ends[id].0,
                    v: self.ends[id].1,
                }
                .other(x);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        false
    }

    /// Edge ids incident to each vertex (a loop is listed once).
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (id, &(u, v)) in self.ends.iter().enumerate() {
            inc[u].push(id);
            if u != v {
                inc[v].push(id);
            }
        }
        inc
    }

    pub fn components(&self) -> ComponentPartition {
        let mut uf = UnionFind::new(self.n);
        for &(u, v) in &self.ends {
            uf.union(u, v);
        }
        uf.labels()
    }

    /// Components of the spanning subgraph (V, X).
    pub fn components_of(&self, edge_ids: &[usize]) -> ComponentPartition {
        let mut uf = UnionFind::new(self.n);
        for &id in edge_ids {
            let (u, v) = self.ends[id];
            uf.union(u, v);
        }
        uf.labels()
    }

    pub fn component_count(&self) -> usize {
        self.components().count
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// r(G) = n − c(G).
    pub fn rank(&self) -> usize {
        self.n - self.component_count()
    }

    /// `G \ e`. Edges above `e` shift down by one.
    pub fn delete_edge(&self, e: usize) -> Result<(Graph, EdgeMap)> {
        self.edge(e)?;
        let mut ends = Vec::with_capacity(self.m() - 1);
        let mut map = Vec::with_capacity(self.m());
        for (id, &pair) in self.ends.iter().enumerate() {
            if id == e {
                map.push(None);
            } else {
                map.push(Some(ends.len()));
                ends.push(pair);
            }
        }
        Ok((Graph { n: self.n, ends }, EdgeMap(map)))
    }

    /// `G / e`: endpoints merged into the smaller id, the larger vertex id
    /// removed and higher ids shifted down. Contracting a loop deletes it.
    pub fn contract_edge(&self, e: usize) -> Result<(Graph, EdgeMap)> {
        let edge = self.edge(e)?;
        if edge.is_loop() {
            return self.delete_edge(e);
        }
        let (lo, hi) = (edge.u.min(edge.v), edge.u.max(edge.v));
        let relabel = |w: usize| match w.cmp(&hi) {
            std::cmp::Ordering::Equal => lo,
            std::cmp::Ordering::Greater => w - 1,
            std::cmp::Ordering::Less => w,
        };
        let mut ends = Vec::with_capacity(self.m() - 1);
        let mut map = Vec::with_capacity(self.m());
        for (id, &(u, v)) in self.ends.iter().enumerate() {
            if id == e {
                map.push(None);
            } else {
                map.push(Some(ends.len()));
                ends.push((relabel(u), relabel(v)));
            }
        }
        Ok((
            Graph {
                n: self.n - 1,
                ends,
            },
            EdgeMap(map),
        ))
    }

    /// `G / X` for an edge set X: each component of (V, X) becomes one
    /// vertex and every edge inside a part is discarded.
    pub fn contract_set(&self, edge_ids: &[usize]) -> Result<Graph> {
        if let Some(&id) = edge_ids.iter().find(|&&id| id >= self.m()) {
            return Err(Error::UnknownEdge { id, m: self.m() });
        }
        let parts = self.components_of(edge_ids);
        Ok(self.quotient(&parts))
    }

    /// Merges each block of `parts` to a vertex, dropping edges inside blocks.
    pub fn quotient(&self, parts: &ComponentPartition) -> Graph {
        let ends = self
            .ends
            .iter()
            .map(|&(u, v)| (parts.index[u], parts.index[v]))
            .filter(|(a, b)| a != b)
            .collect();
        Graph {
            n: parts.count,
            ends,
        }
    }

    /// Spanning subgraph keeping only the listed edges (ids re-densified in
    /// the given order).
    pub fn edge_subgraph(&self, edge_ids: &[usize]) -> Result<Graph> {
        let ends = edge_ids
            .iter()
            .map(|&id| self.edge(id).map(|e| (e.u, e.v)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Graph { n: self.n, ends })
    }

    /// Subgraph induced by `vertices` (relabelled 0.. in the given order).
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= self.n {
                return Err(Error::OutOfRange(format!(
                    "vertex {v} not in a graph with {} vertices",
                    self.n
                )));
            }
            pos[v] = i;
        }
        let ends = self
            .ends
            .iter()
            .filter(|&&(u, v)| pos[u] != usize::MAX && pos[v] != usize::MAX)
            .map(|&(u, v)| (pos[u], pos[v]))
            .collect();
        Ok(Graph {
            n: vertices.len(),
            ends,
        })
    }

    /// The connected components as standalone graphs, plus the number of
    /// isolated vertices (which are not returned).
    pub(crate) fn split_components(&self) -> (Vec<Graph>, usize) {
        let parts = self.components();
        let blocks = parts.blocks();
        let mut local = vec![0usize; self.n];
        for block in &blocks {
            for (i, &v) in block.iter().enumerate() {
                local[v] = i;
            }
        }
        let mut ends: Vec<Vec<(usize, usize)>> = vec![Vec::new(); parts.count];
        for &(u, v) in &self.ends {
            ends[parts.index[u]].push((local[u], local[v]));
        }
        let mut isolated = 0;
        let mut graphs = Vec::new();
        for (block, ends) in blocks.iter().zip(ends) {
            if ends.is_empty() && block.len() == 1 {
                isolated += 1;
            } else {
                graphs.push(Graph {
                    n: block.len(),
                    ends,
                });
            }
        }
        (graphs, isolated)
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n
            || perm.iter().any(|&p| p >= self.n || std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::OutOfRange(
                "relabelling is not a permutation of the vertex set".into(),
            ));
        }
        Ok(Graph {
            n: self.n,
            ends: self.ends.iter().map(|&(u, v)| (perm[u], perm[v])).collect(),
        })
    }

    /// Minimum number of edges whose removal disconnects the graph.
    /// Zero for disconnected or single-vertex graphs; loops never count.
    pub fn edge_connectivity(&self) -> usize {
        if self.n < 2 || !self.is_connected() {
            return 0;
        }
        assert!(self.n <= 24, "edge connectivity scan limited to n <= 24");
        // Every minimal edge cut is the set of edges crossing some vertex
        // bipartition; fix vertex 0 on one side.
        let full = (1u32 << self.n) - 1;
        let mut best = usize::MAX;
        let mut side = 1u32;
        while side < full {
            let crossing = self
                .ends
                .iter()
                .filter(|&&(u, v)| ((side >> u) & 1) != ((side >> v) & 1))
                .count();
            best = best.min(crossing);
            side += 2;
        }
        best
    }

    /// A 2-coloring of the vertices, or `None` if an odd cycle or loop exists.
    pub fn bipartition(&self) -> Option<Bipartition> {
        if self.has_loops() {
            return None;
        }
        let inc = self.incidence();
        let mut side = vec![u8::MAX; self.n];
        for start in 0..self.n {
            if side[start] != u8::MAX {
                continue;
            }
            side[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for &id in &inc[x] {
                    let (a, b) = self.ends[id];
                    let y = if a == x { b } else { a };
                    if side[y] == u8::MAX {
                        side[y] = 1 - side[x];
                        queue.push_back(y);
                    } else if side[y] == side[x] {
                        return None;
                    }
                }
            }
        }
        let (left, right) = (0..self.n).partition(|&v| side[v] == 0);
        Some(Bipartition { left, right })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Size of a largest clique of the underlying simple graph.
    pub fn clique_number(&self) -> usize {
        if self.n == 0 {
            return 0;
        }
        let adj = self.adjacency_masks();
        let mut best = 0;
        let all = if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        };
        max_clique(&adj, 0, all, &mut best);
        best
    }

    /// One `e u v` line per edge after an `n N` header.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for &(u, v) in &self.ends {
            out.push_str(&format!("e {u} {v}\n"));
        }
        out
    }

    /// Compact single-line form `n=N: u-v u-v ...` used in reports.
    pub fn compact(&self) -> String {
        let edges: Vec<String> = self.ends.iter().map(|(u, v)| format!("{u}-{v}")).collect();
        format!("n={}: {}", self.n, edges.join(" "))
    }

    /// Sort key used for deterministic corpus ordering.
    pub fn order_key(&self) -> (usize, usize, Vec<(usize, usize)>) {
        (self.n, self.m(), self.ends.clone())
    }
}

fn max_clique(adj: &[u64], size: usize, candidates: u64, best: &mut usize) {
    if candidates == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + candidates.count_ones() as usize <= *best {
        return;
    }
    let mut rest = candidates;
    while rest != 0 {
        if size + rest.count_ones() as usize <= *best {
            return;
        }
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        max_clique(adj, size + 1, rest & adj[v], best);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Graph {
        Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn wheel(n: usize) -> Graph {
        let rim = n - 1;
        let mut pairs: Vec<(usize, usize)> = (1..=rim).map(|i| (0, i)).collect();
        pairs.extend((0..rim).map(|i| (1 + i, 1 + (i + 1) % rim)));
        Graph::new(n, pairs).unwrap()
    }

    #[test]
    fn construction() {
        assert_eq!(triangle().m(), 3);
        let lp = Graph::new(1, [(0, 0)]).unwrap();
        assert_eq!(lp.m(), 1);
        assert!(lp.is_loop(0).unwrap());
        let digon = Graph::new(2, [(0, 1), (0, 1)]).unwrap();
        assert_eq!(digon.m(), 2);
        assert!(!digon.is_simple());
    }

    #[test]
    fn construction_rejects_bad_endpoint() {
        let err = Graph::new(2, [(0, 1), (1, 2)]).unwrap_err();
        assert!(matches!(err, Error::EndpointOutOfRange { u: 1, v: 2, n: 2 }));
        assert!(err.to_string().contains("(1, 2)"));
    }

    #[test]
    fn deletion() {
        let (p, map) = triangle().delete_edge(1).unwrap();
        assert_eq!(p.endpoints(), &[(0, 1), (0, 2)]);
        assert_eq!(map.get(0), Some(0));
        assert_eq!(map.get(1), None);
        assert_eq!(map.get(2), Some(1));

        let digon = Graph::new(2, [(0, 1), (0, 1)]).unwrap();
        assert_eq!(digon.delete_edge(0).unwrap().0.endpoints(), &[(0, 1)]);

        let lp = Graph::new(1, [(0, 0)]).unwrap();
        assert_eq!(lp.delete_edge(0).unwrap().0, Graph::empty(1));
        assert!(matches!(
            lp.delete_edge(1),
            Err(Error::UnknownEdge { id: 1, m: 1 })
        ));
    }

    #[test]
    fn contraction() {
        for e in 0..3 {
            let (g, _) = triangle().contract_edge(e).unwrap();
            assert_eq!(g.n(), 2);
            assert_eq!(g.m(), 2);
            assert!(g.endpoints().iter().all(|&(u, v)| u != v));
        }
        let digon = Graph::new(2, [(0, 1), (0, 1)]).unwrap();
        let (g, map) = digon.contract_edge(0).unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.endpoints(), &[(0, 0)]);
        assert_eq!(map.get(1), Some(0));

        let path = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            path.contract_edge(0).unwrap().0,
            Graph::new(2, [(0, 1)]).unwrap()
        );

        let lp = Graph::new(2, [(1, 1), (0, 1)]).unwrap();
        assert_eq!(lp.contract_edge(0).unwrap().0, Graph::new(2, [(0, 1)]).unwrap());
        assert!(lp.contract_edge(5).is_err());
    }

    #[test]
    fn components_and_rank() {
        assert_eq!(triangle().components().count, 1);
        assert_eq!(triangle().rank(), 2);
        let e4 = Graph::empty(4);
        assert_eq!(e4.components().count, 4);
        assert_eq!(e4.rank(), 0);
        let two = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let parts = two.components();
        assert_eq!(parts.count, 2);
        assert_eq!(parts.index, vec![0, 0, 1, 1]);
        assert_eq!(two.rank(), 2);
        let lp = Graph::new(2, [(0, 0)]).unwrap();
        assert_eq!(lp.rank(), 0);
    }

    #[test]
    fn loops_and_bridges() {
        let path = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert!(path.is_bridge(0).unwrap() && path.is_bridge(1).unwrap());
        let digon = Graph::new(2, [(0, 1), (0, 1)]).unwrap();
        assert!(!digon.is_bridge(0).unwrap() && !digon.is_bridge(1).unwrap());
        let lp = Graph::new(1, [(0, 0)]).unwrap();
        assert!(lp.is_loop(0).unwrap());
        assert!(!lp.is_bridge(0).unwrap());
        assert!(!triangle().is_bridge(0).unwrap());
        assert!(path.is_bridge(2).is_err());
    }

    #[test]
    fn edge_connectivity_values() {
        assert_eq!(wheel(5).edge_connectivity(), 3);
        assert_eq!(cycle(6).edge_connectivity(), 2);
        let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.edge_connectivity(), 3);
        assert_eq!(Graph::new(4, [(0, 1), (2, 3)]).unwrap().edge_connectivity(), 0);
        assert_eq!(Graph::empty(1).edge_connectivity(), 0);
        let digon_loop = Graph::new(2, [(0, 1), (0, 1), (0, 0)]).unwrap();
        assert_eq!(digon_loop.edge_connectivity(), 2);
    }

    #[test]
    fn bipartite_checks() {
        let c4 = cycle(4).bipartition().unwrap();
        assert_eq!(c4.left, vec![0, 2]);
        assert_eq!(c4.right, vec![1, 3]);
        assert!(cycle(5).bipartition().is_none());
        let k34 = Graph::new(7, (0..3).flat_map(|i| (3..7).map(move |j| (i, j)))).unwrap();
        let sides = k34.bipartition().unwrap();
        assert_eq!((sides.left.len(), sides.right.len()), (3, 4));
        assert!(Graph::new(2, [(0, 1), (1, 1)]).unwrap().bipartition().is_none());
    }

    #[test]
    fn clique_numbers() {
        let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.clique_number(), 4);
        assert_eq!(cycle(5).clique_number(), 2);
        assert_eq!(wheel(5).clique_number(), 3);
        assert_eq!(Graph::empty(3).clique_number(), 1);
        assert_eq!(Graph::empty(0).clique_number(), 0);
    }

    #[test]
    fn contract_set_merges_parts() {
        let c4 = cycle(4);
        let g = c4.contract_set(&[0]).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 3);
        // non-flat input: the third triangle edge is discarded, not looped
        let g = triangle().contract_set(&[0, 1]).unwrap();
        assert_eq!(g, Graph::empty(1));
    }

    #[test]
    fn rank_drops_under_contraction() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 3), (0, 1)]).unwrap();
        for e in g.edges() {
            let (h, _) = g.contract_edge(e.id).unwrap();
            let expected = if e.is_loop() { g.rank() } else { g.rank() - 1 };
            assert_eq!(h.rank(), expected);
            let (d, _) = g.delete_edge(e.id).unwrap();
            assert_eq!(g.is_bridge(e.id).unwrap(), d.rank() + 1 == g.rank());
        }
    }
}
