//! Full defect tables, cross-checked across engines.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::engine::{
    brute_force_vector, defect_poly_flats, defect_vector_subset, min_flat_chromatic_number,
    DcEngine, EngineKind, MAX_CHROMATIC_VERTICES, MAX_DC_EDGES,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::{Coeff, Poly};

/// Colorings the oracle may enumerate per λ while building a table.
const BRUTE_TABLE_BUDGET: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefectRow {
    pub k: usize,
    pub poly: Poly,
    pub number: usize,
    pub feasible: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefectTable {
    pub n: usize,
    pub m: usize,
    pub rows: Vec<DefectRow>,
    /// Engines whose results were compared while building the table.
    #[serde(default)]
    pub engines: Vec<EngineKind>,
}

impl DefectTable {
    pub fn numbers(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.number).collect()
    }

    pub fn polys(&self) -> Vec<Poly> {
        self.rows.iter().map(|r| r.poly.clone()).collect()
    }

    pub fn feasible_set(&self) -> BTreeSet<usize> {
        self.rows.iter().filter(|r| r.feasible).map(|r| r.k).collect()
    }

    /// Σ_k φ_k(G; λ) == λ^n, coefficientwise.
    pub fn is_normalized(&self) -> bool {
        let sum = self.rows.iter().fold(Poly::zero(), |acc, r| &acc + &r.poly);
        sum == Poly::monomial(self.n)
    }
}

#[derive(Clone, Debug)]
pub struct TableOptions {
    /// `None` picks every engine whose size guards admit the graph.
    pub engines: Option<Vec<EngineKind>>,
    /// Memoize the recursion engine.
    pub cache: bool,
    /// The brute-force oracle is evaluated at λ = 1..=brute_max_lambda.
    pub brute_max_lambda: usize,
}

impl Default for TableOptions {
    fn default() -> Self {
        Self {
            engines: None,
            cache: true,
            brute_max_lambda: 4,
        }
    }
}

impl TableOptions {
    pub fn engines(engines: &[EngineKind]) -> Self {
        Self {
            engines: Some(engines.to_vec()),
            ..Self::default()
        }
    }

    /// Only the recursion engine.
    pub fn fast() -> Self {
        Self::engines(&[EngineKind::Dc])
    }

    fn selected(&self, g: &Graph) -> Vec<EngineKind> {
        let mut picked = match &self.engines {
            Some(list) => list.clone(),
            None => {
                let mut auto = vec![EngineKind::Dc];
                if g.m() <= 20 {
                    auto.push(EngineKind::Subset);
                }
                if g.m() <= 16 && g.n() <= MAX_CHROMATIC_VERTICES {
                    auto.push(EngineKind::Flats);
                }
                if 2u64.checked_pow(g.n() as u32).is_some_and(|c| c <= BRUTE_TABLE_BUDGET) {
                    auto.push(EngineKind::Brute);
                }
                auto
            }
        };
        if !picked.contains(&EngineKind::Dc) {
            picked.insert(0, EngineKind::Dc);
        }
        picked.sort();
        picked.dedup();
        picked
    }
}

/// φ_k(G) from an already computed φ_k(G; λ).
pub(crate) fn number_from_poly(g: &Graph, k: usize, poly: &Poly) -> usize {
    if k > g.m() {
        0
    } else if k == g.m() && g.m() >= 1 {
        1
    } else {
        poly.smallest_positive_support(g.n().max(1))
    }
}

/// φ_k(G): the least number of colors giving exactly k bad edges, 0 if no
/// coloring does.
pub fn defect_number(g: &Graph, k: usize) -> Result<usize> {
    if k > g.m() {
        return Ok(0);
    }
    let vector = DcEngine::new().defect_vector(g)?;
    Ok(number_from_poly(g, k, &vector[k]))
}

fn disagreement(left: EngineKind, right: EngineKind, k: usize, l: impl ToString, r: impl ToString) -> Error {
    Error::EngineDisagreement {
        left: left.name(),
        right: right.name(),
        k,
        left_value: l.to_string(),
        right_value: r.to_string(),
    }
}

/// Builds the table with a fresh recursion engine.
pub fn defect_table(g: &Graph, opts: &TableOptions) -> Result<DefectTable> {
    defect_table_with(&mut DcEngine::with_cache(opts.cache), g, opts)
}

/// Builds the table reusing `engine`'s memo table. Any disagreement
/// between engines is returned as [`Error::EngineDisagreement`].
pub fn defect_table_with(engine: &mut DcEngine, g: &Graph, opts: &TableOptions) -> Result<DefectTable> {
    if g.m() > MAX_DC_EDGES {
        return Err(Error::guard("dc-edges", format!("m = {} > {MAX_DC_EDGES}", g.m())));
    }
    let engines = opts.selected(g);
    let polys = engine.defect_vector(g)?;

    for &kind in &engines {
        match kind {
            EngineKind::Dc => {}
            EngineKind::Subset => {
                let other = defect_vector_subset(g)?;
                if let Some(k) = (0..polys.len()).find(|&k| polys[k] != other[k]) {
                    return Err(disagreement(EngineKind::Dc, kind, k, &polys[k], &other[k]));
                }
            }
            EngineKind::Flats => {
                for (k, p) in polys.iter().enumerate() {
                    let other = defect_poly_flats(g, k)?;
                    if *p != other {
                        return Err(disagreement(EngineKind::Dc, kind, k, p, other));
                    }
                    let via_flats = min_flat_chromatic_number(g, k)?;
                    let number = number_from_poly(g, k, p);
                    if number != via_flats {
                        return Err(disagreement(
                            EngineKind::Dc,
                            kind,
                            k,
                            format!("defect number {number}"),
                            format!("min flat chromatic number {via_flats}"),
                        ));
                    }
                }
            }
            EngineKind::Brute => {
                let affordable = |l: usize| {
                    (l as u64).checked_pow(g.n() as u32).is_some_and(|c| c <= BRUTE_TABLE_BUDGET)
                };
                for lambda in (1..=opts.brute_max_lambda).take_while(|&l| affordable(l)) {
                    let counts = brute_force_vector(g, lambda)?;
                    for (k, p) in polys.iter().enumerate() {
                        let value = p.eval(lambda as Coeff);
                        if value != counts[k] as Coeff {
                            return Err(disagreement(
                                EngineKind::Dc,
                                kind,
                                k,
                                format!("{value} at λ = {lambda}"),
                                format!("{} at λ = {lambda}", counts[k]),
                            ));
                        }
                    }
                }
            }
        }
    }

    let rows = polys
        .into_iter()
        .enumerate()
        .map(|(k, poly)| DefectRow {
            k,
            number: number_from_poly(g, k, &poly),
            feasible: !poly.is_zero(),
            poly,
        })
        .collect();
    Ok(DefectTable {
        n: g.n(),
        m: g.m(),
        rows,
        engines,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

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
    fn k2_table() {
        let t = defect_table(&Graph::new(2, [(0, 1)]).unwrap(), &TableOptions::default()).unwrap();
        assert_eq!(t.rows[0].poly, Poly::from_coeffs(vec![0, -1, 1]));
        assert_eq!(t.numbers(), vec![2, 1]);
        assert_eq!(t.engines, EngineKind::ALL.to_vec());
    }

    #[test]
    fn cycle_and_wheel_numbers() {
        let opts = TableOptions::default();
        assert_eq!(defect_table(&cycle(4), &opts).unwrap().numbers(), vec![2, 3, 2, 0, 1]);
        assert_eq!(
            defect_table(&wheel(5), &opts).unwrap().numbers(),
            vec![3, 3, 2, 2, 2, 2, 0, 0, 1]
        );
    }

    #[test]
    fn defect_numbers() {
        let c5 = cycle(5);
        assert_eq!(defect_number(&c5, 1).unwrap(), 2);
        assert_eq!(defect_number(&c5, 2).unwrap(), 3);
        assert_eq!(defect_number(&c5, 4).unwrap(), 0);
        assert_eq!(defect_number(&c5, 9).unwrap(), 0);
        assert_eq!(defect_number(&wheel(5), 6).unwrap(), 0);
        assert_eq!(defect_number(&Graph::empty(3), 0).unwrap(), 1);
    }

    #[test]
    fn row_invariants() {
        let g = Graph::new(5, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 4)]).unwrap();
        let t = defect_table(&g, &TableOptions::default()).unwrap();
        assert!(t.is_normalized());
        for row in &t.rows {
            assert_eq!(row.feasible, row.number >= 1);
        }
        // top row: every component monochromatic
        assert_eq!(t.rows[t.m].poly, Poly::monomial(2));
        assert!(!t.rows[0].feasible);
    }

    #[test]
    fn json_round_trip() {
        let t = defect_table(&cycle(5), &TableOptions::default()).unwrap();
        let text = serde_json::to_string(&t).unwrap();
        assert!(text.starts_with("{\"n\":5,\"m\":5,\"rows\":[{\"k\":0,\"poly\":["));
        let back: DefectTable = serde_json::from_str(&text).unwrap();
        assert_eq!(back, t);
    }
}
