//! Exhaustive coloring enumeration. Slow, obviously correct, and used to
//! check the polynomial engines at fixed λ.

use serde::{Deserialize, Serialize};

use crate::engine::{defect_number, EngineKind, MAX_COLORINGS};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A vertex coloring with colors `1..=colors`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub colors: usize,
    pub assignment: Vec<usize>,
}

impl Coloring {
    pub fn bad_edges(&self, g: &Graph) -> Vec<usize> {
        bad_edges(g, &self.assignment)
    }
}

/// Ids of edges whose endpoints share a color; loops are always bad.
pub fn bad_edges(g: &Graph, assignment: &[usize]) -> Vec<usize> {
    g.edges()
        .filter(|e| assignment[e.u] == assignment[e.v])
        .map(|e| e.id)
        .collect()
}

fn check_colorings(n: usize, colors: usize) -> Result<()> {
    let total = (colors as u64).checked_pow(n as u32);
    match total {
        Some(t) if t <= MAX_COLORINGS => Ok(()),
        _ => Err(Error::guard(
            "colorings",
            format!("{colors}^{n} colorings exceed {MAX_COLORINGS}"),
        )),
    }
}

/// Calls `f` with every assignment `V → 0..colors` (odometer order) and
/// stops early when `f` returns false.
pub(crate) fn for_each_coloring(n: usize, colors: usize, mut f: impl FnMut(&[usize]) -> bool) {
    if colors == 0 && n > 0 {
        return;
    }
    let mut digits = vec![0usize; n];
    loop {
        if !f(&digits) {
            return;
        }
        let mut i = 0;
        loop {
            if i == n {
                return;
            }
            digits[i] += 1;
            if digits[i] < colors {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

fn bad_count(ends: &[(usize, usize)], digits: &[usize]) -> usize {
    ends.iter().filter(|&&(u, v)| digits[u] == digits[v]).count()
}

/// Entry k counts the λ-colorings with exactly k bad edges (k = 0..m).
pub fn brute_force_vector(g: &Graph, lambda: usize) -> Result<Vec<u64>> {
    check_colorings(g.n(), lambda)?;
    let mut counts = vec![0u64; g.m() + 1];
    for_each_coloring(g.n(), lambda, |digits| {
        counts[bad_count(g.endpoints(), digits)] += 1;
        true
    });
    Ok(counts)
}

/// Fewest bad edges over all t-colorings.
pub fn min_bad_edges(g: &Graph, colors: usize) -> Result<usize> {
    if colors == 0 {
        return Err(Error::OutOfRange("at least one color is required".into()));
    }
    check_colorings(g.n(), colors)?;
    let mut best = usize::MAX;
    for_each_coloring(g.n(), colors, |digits| {
        best = best.min(bad_count(g.endpoints(), digits));
        best > 0
    });
    Ok(best)
}

/// Bad-edge counts achieved by some coloring with at most `colors` colors.
pub fn bad_edge_spectrum(g: &Graph, colors: usize) -> Result<std::collections::BTreeSet<usize>> {
    check_colorings(g.n(), colors)?;
    let mut seen = std::collections::BTreeSet::new();
    for_each_coloring(g.n(), colors, |digits| {
        seen.insert(bad_count(g.endpoints(), digits));
        true
    });
    Ok(seen)
}

/// A coloring with exactly k bad edges using φ_k(G) colors, or `None` when
/// φ_k(G) = 0.
pub fn witness_coloring(g: &Graph, k: usize) -> Result<Option<Coloring>> {
    let t = defect_number(g, k)?;
    if t == 0 {
        return Ok(None);
    }
    check_colorings(g.n(), t)?;
    let mut found = None;
    for_each_coloring(g.n(), t, |digits| {
        if bad_count(g.endpoints(), digits) == k {
            found = Some(digits.iter().map(|&c| c + 1).collect::<Vec<_>>());
        }
        found.is_none()
    });
    match found {
        Some(assignment) => Ok(Some(Coloring {
            colors: t,
            assignment,
        })),
        None => Err(Error::EngineDisagreement {
            left: EngineKind::Dc.name(),
            right: EngineKind::Brute.name(),
            k,
            left_value: format!("defect number {t}"),
            right_value: format!("no {t}-coloring with {k} bad edges"),
        }),
    }
}
