//! Isomorphism-invariant keys for small multigraphs.
//!
//! Colour refinement followed by individualization search; the key is the
//! lexicographically smallest multiplicity matrix over all leaves. Cells
//! whose candidates differ by an automorphic transposition are explored
//! once, which keeps complete and complete-bipartite graphs cheap.

use crate::graph::Graph;

/// Largest vertex count that receives a key.
pub const MAX_KEY_VERTICES: usize = 10;

const LEAF_BUDGET: usize = 20_000;

/// Byte string equal for two multigraphs iff they are isomorphic (loop and
/// parallel multiplicities preserved). `None` above [`MAX_KEY_VERTICES`]
/// vertices or when the search budget runs out.
pub fn canonical_key(g: &Graph) -> Option<Vec<u8>> {
    if g.n() > MAX_KEY_VERTICES {
        return None;
    }
    let mat = g.multiplicity_matrix();
    if mat.iter().flatten().any(|&x| x > u16::MAX as u32) {
        return None;
    }
    let mut search = Search {
        mat: &mat,
        best: None,
        leaves: 0,
    };
    let colors = refine(&mat, vec![0; g.n()]);
    if search.descend(colors) {
        search.best
    } else {
        None
    }
}

struct Search<'a> {
    mat: &'a [Vec<u32>],
    best: Option<Vec<u8>>,
    leaves: usize,
}

impl Search<'_> {
    /// Returns false when the leaf budget is exhausted.
    fn descend(&mut self, colors: Vec<usize>) -> bool {
        let n = colors.len();
        let cells = count_cells(&colors);
        if cells == n {
            self.leaves += 1;
            if self.leaves > LEAF_BUDGET {
                return false;
            }
            let cert = certificate(self.mat, &colors);
            if self.best.as_ref().is_none_or(|b| cert < *b) {
                self.best = Some(cert);
            }
            return true;
        }
        // target cell: smallest colour with more than one member
        let mut size = vec![0usize; n];
        for &c in &colors {
            size[c] += 1;
        }
        let target = (0..n).find(|&c| size[c] > 1).expect("non-discrete partition");
        let members: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &members {
            if explored.iter().any(|&u| transposition_is_automorphism(self.mat, u, v)) {
                continue;
            }
            explored.push(v);
            let split: Vec<usize> = colors
                .iter()
                .enumerate()
                .map(|(x, &c)| 2 * c + usize::from(c == target && x != v))
                .collect();
            if !self.descend(refine(self.mat, split)) {
                return false;
            }
        }
        true
    }
}

fn count_cells(colors: &[usize]) -> usize {
    let mut seen = vec![false; colors.len() * 2 + 1];
    colors
        .iter()
        .filter(|&&c| !std::mem::replace(&mut seen[c], true))
        .count()
}

fn transposition_is_automorphism(mat: &[Vec<u32>], u: usize, v: usize) -> bool {
    mat[u][u] == mat[v][v]
        && (0..mat.len())
            .filter(|&w| w != u && w != v)
            .all(|w| mat[u][w] == mat[v][w])
}

/// Equitable refinement; colours are renumbered 0.. by sorted signature so
/// the result depends only on the isomorphism class of (graph, colouring).
fn refine(mat: &[Vec<u32>], mut colors: Vec<usize>) -> Vec<usize> {
    let n = colors.len();
    colors = renumber(colors);
    loop {
        let before = count_cells(&colors);
        let sigs: Vec<(usize, u32, Vec<(usize, u32)>)> = (0..n)
            .map(|v| {
                let mut nbrs: Vec<(usize, u32)> = (0..n)
                    .filter(|&w| w != v && mat[v][w] > 0)
                    .map(|w| (colors[w], mat[v][w]))
                    .collect();
                nbrs.sort_unstable();
                (colors[v], mat[v][v], nbrs)
            })
            .collect();
        colors = renumber(sigs);
        if count_cells(&colors) == before {
            return colors;
        }
    }
}

fn renumber<T: Ord + Clone>(sigs: Vec<T>) -> Vec<usize> {
    let mut distinct = sigs.clone();
    distinct.sort();
    distinct.dedup();
    sigs.iter()
        .map(|s| distinct.binary_search(s).expect("signature present"))
        .collect()
}

fn certificate(mat: &[Vec<u32>], colors: &[usize]) -> Vec<u8> {
    let n = colors.len();
    let mut at = vec![0usize; n];
    for (v, &c) in colors.iter().enumerate() {
        at[c] = v;
    }
    let mut out = Vec::with_capacity(1 + n * (n + 1));
    out.push(n as u8);
    for i in 0..n {
        for j in i..n {
            out.extend_from_slice(&(mat[at[i]][at[j]] as u16).to_be_bytes());
        }
    }
    out
}
