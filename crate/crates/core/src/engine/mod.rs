//! Engines computing k-defect polynomials and k-defect numbers.
//!
//! Four independent routes:
//!
//! * [`dc`]: bivariate deletion–contraction, all k at once, memoized on
//!   canonical keys;
//! * [`flats`]: summing chromatic polynomials of G/X over the flats X of
//!   the cycle matroid;
//! * [`subset`]: expansion over all edge subsets,
//!   `Σ_A (t−1)^|A| λ^c(A)`;
//! * [`oracle`]: exhaustive enumeration of colorings at a fixed λ.
//!
//! [`table`] assembles them into a cross-checked [`DefectTable`].

pub mod chromatic;
pub mod dc;
pub mod flats;
pub mod oracle;
pub mod subset;
pub mod table;

use serde::{Deserialize, Serialize};

use crate::poly::Poly;

pub use chromatic::chromatic_poly;
pub use dc::{defect_vector_dc, CacheStats, DcEngine};
pub use flats::{
    defect_poly_flats, feasible_k, flats_of_size, is_closed, min_flat_chromatic_number, Flat,
};
pub use oracle::{bad_edge_spectrum, bad_edges, brute_force_vector, min_bad_edges, witness_coloring, Coloring};
pub use subset::defect_vector_subset;
pub use table::{defect_number, defect_table, defect_table_with, DefectRow, DefectTable, TableOptions};

/// Largest n accepted by [`chromatic_poly`].
pub const MAX_CHROMATIC_VERTICES: usize = 14;
/// Largest m accepted by the deletion–contraction engine.
pub const MAX_DC_EDGES: usize = 30;
/// Largest m accepted by the subset expansion.
pub const MAX_SUBSET_EDGES: usize = 22;
/// Upper bound on the number of colorings any oracle call may enumerate.
pub const MAX_COLORINGS: u64 = 10_000_000;
/// Upper bound on C(m, k) for a flat scan at one size.
pub const MAX_FLAT_SCAN: u128 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EngineKind {
    Dc,
    Subset,
    Flats,
    Brute,
}

impl EngineKind {
    pub const ALL: [EngineKind; 4] = [
        EngineKind::Dc,
        EngineKind::Subset,
        EngineKind::Flats,
        EngineKind::Brute,
    ];

    pub fn name(self) -> &'static str {
        match self {
            EngineKind::Dc => "dc",
            EngineKind::Subset => "subset",
            EngineKind::Flats => "flats",
            EngineKind::Brute => "brute",
        }
    }
}

impl std::str::FromStr for EngineKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        EngineKind::ALL
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| format!("unknown engine `{s}` (expected dc, subset, flats or brute)"))
    }
}

// Bivariate helpers: a `Vec<Poly>` indexed by the power of t.

pub(crate) fn bi_add(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let len = a.len().max(b.len());
    (0..len)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x + y,
            (Some(x), None) | (None, Some(x)) => x.clone(),
            (None, None) => unreachable!(),
        })
        .collect()
}

pub(crate) fn bi_mul(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Poly::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

/// Multiplies by t^s.
pub(crate) fn bi_shift(a: &[Poly], s: usize) -> Vec<Poly> {
    let mut out = vec![Poly::zero(); s];
    out.extend_from_slice(a);
    out
}

/// Multiplies by (t − 1).
pub(crate) fn bi_times_t_minus_one(a: &[Poly]) -> Vec<Poly> {
    let shifted = bi_shift(a, 1);
    let neg: Vec<Poly> = a.iter().map(|p| -p).collect();
    bi_add(&shifted, &neg)
}

/// Pads or trims (zero entries only) to exactly `m + 1` rows.
pub(crate) fn normalize_vector(mut v: Vec<Poly>, m: usize) -> Vec<Poly> {
    while v.len() > m + 1 && v.last().is_some_and(Poly::is_zero) {
        v.pop();
    }
    assert!(v.len() <= m + 1, "defect vector longer than m + 1");
    v.resize(m + 1, Poly::zero());
    v
}
