//! Replays the published k-defect claims over explicit corpora.
//!
//! Each claim is checked graph by graph. A graph outside the claim's
//! hypothesis is skipped and counted separately. Failures are recorded as
//! counterexamples carrying the graph as an edge list plus `k`, so feeding
//! them back through the engine reproduces `actual`.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::engine::{
    chromatic_poly, defect_table_with, feasible_k, flats_of_size, min_bad_edges, DcEngine,
    DefectTable, TableOptions, MAX_CHROMATIC_VERTICES,
};
use crate::error::{Error, Result};
use crate::families::{
    self, cycle_defect_number, cycle_defect_poly, independent_degree_sums, kn_infeasible_set,
    tree_defect_number, tree_defect_poly, wheel_defect_number, wheel_defect_number_as_printed,
    wheel_min_bad_2col, FamilySpec,
};
use crate::graph::Graph;
use crate::poly::Poly;

/// Largest m for which the subgraph-monotonicity claim walks all edge
/// subsets.
pub const MAX_SUBGRAPH_EDGES: usize = 12;

#[derive(Clone, Copy, Debug)]
pub struct ClaimInfo {
    pub id: &'static str,
    pub title: &'static str,
    pub check: &'static str,
    pub default_corpus: &'static [&'static str],
}

const CATALOG: [ClaimInfo; 14] = [
    ClaimInfo {
        id: "C1",
        title: "partition identity",
        check: "sum over k of phi_k(G; lambda) equals lambda^n coefficientwise",
        default_corpus: &["allgraphs:5"],
    },
    ClaimInfo {
        id: "C2",
        title: "zero-defect slice is the chromatic polynomial",
        check: "phi_0(G; lambda) equals an independently computed chromatic polynomial",
        default_corpus: &["allgraphs:5"],
    },
    ClaimInfo {
        id: "C3",
        title: "monotonicity under subgraphs",
        check: "phi_k(H) <= phi_k(G) for every spanning and induced subgraph H and 0 <= k <= m(G), infeasible counted as 0",
        default_corpus: &["allgraphs:4"],
    },
    ClaimInfo {
        id: "C4",
        title: "all edges bad needs one color",
        check: "phi_m(G) = 1",
        default_corpus: &["allgraphs:5", "wheel:4..8"],
    },
    ClaimInfo {
        id: "C5",
        title: "one color exactly at k = m",
        check: "phi_k(G) = 1 iff k = m",
        default_corpus: &["allgraphs:5"],
    },
    ClaimInfo {
        id: "C6",
        title: "defect number via contracted flats",
        check: "phi_k(G) equals the least chromatic number of G/X over flats X of size k",
        default_corpus: &["allgraphs:5"],
    },
    ClaimInfo {
        id: "C7",
        title: "defect number via clique numbers of contracted flats",
        check: "phi_k(G) against min chi(G/X) and against min omega(G/X) over flats X of size k, both reported",
        default_corpus: &["allgraphs:5"],
    },
    ClaimInfo {
        id: "C8",
        title: "infeasible window below m",
        check: "phi_k(G) = 0 for m - edge_connectivity < k < m on connected G",
        default_corpus: &["allgraphs:5", "wheel:4..8", "complete:4..6"],
    },
    ClaimInfo {
        id: "C9",
        title: "closed forms for trees, cycles and wheels",
        check: "engine polynomials and numbers equal the family formulas; wheels use the zero set {2n-4, 2n-3}",
        default_corpus: &["wheel:4..8", "cycle:3..10", "alltrees:2..7"],
    },
    ClaimInfo {
        id: "C10",
        title: "feasibility equals flat existence",
        check: "phi_k(G; lambda) is nonzero iff G has a flat of size k",
        default_corpus: &["allgraphs:5"],
    },
    ClaimInfo {
        id: "C11",
        title: "chromatic versus clique number on contracted flats",
        check: "chi(G/X) >= omega(G/X), and chi(G/X) = 2 iff G/X is bipartite with an edge",
        default_corpus: &["allgraphs:5"],
    },
    ClaimInfo {
        id: "C12",
        title: "complete-graph infeasible intervals",
        check: "the interval formula equals the complement of the flat sizes of K_n",
        default_corpus: &["complete:4..7"],
    },
    ClaimInfo {
        id: "C13",
        title: "two colors on bipartite graphs",
        check: "for connected bipartite G and 1 <= k <= m-1: phi_k(G) = 2 iff k is a degree sum of an independent set",
        default_corpus: &["allgraphs:2..6"],
    },
    ClaimInfo {
        id: "C14",
        title: "root-free quotient of the chromatic polynomial",
        check: "after dividing out lambda(lambda-1)...(lambda-r), the quotient has no root in 1..=n",
        default_corpus: &["alltrees:3..6", "allgraphs:5"],
    },
];

pub fn list_claims() -> &'static [ClaimInfo] {
    &CATALOG
}

pub fn claim_info(id: &str) -> Result<&'static ClaimInfo> {
    CATALOG
        .iter()
        .find(|c| c.id.eq_ignore_ascii_case(id.trim()))
        .ok_or_else(|| Error::UnknownClaim(id.to_string()))
}

pub fn default_corpus(id: &str) -> Result<Vec<FamilySpec>> {
    let mut out = Vec::new();
    for s in claim_info(id)?.default_corpus {
        out.extend(families::parse_corpus(s)?);
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Counterexamples,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    /// Edge-list text accepted by the parser.
    pub graph: String,
    pub k: Option<usize>,
    pub expected: String,
    pub actual: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub claim: String,
    pub corpus: Vec<String>,
    pub checked: usize,
    pub skipped: usize,
    pub outcome: Outcome,
    /// Total failures; `counterexamples` may be truncated.
    pub failures: usize,
    pub counterexamples: Vec<Counterexample>,
    pub notes: Vec<String>,
    pub ms: u64,
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Counterexamples kept in the report, smallest graphs first.
    pub max_counterexamples: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            max_counterexamples: 25,
        }
    }
}

#[derive(Default)]
struct Checked {
    counterexamples: Vec<Counterexample>,
    notes: Vec<String>,
}

impl Checked {
    fn fail(&mut self, g: &Graph, k: Option<usize>, expected: impl ToString, actual: impl ToString) {
        self.counterexamples.push(Counterexample {
            graph: g.to_edge_list(),
            k,
            expected: expected.to_string(),
            actual: actual.to_string(),
            label: None,
        });
    }

    fn fail_labeled(
        &mut self,
        label: &str,
        g: &Graph,
        k: Option<usize>,
        expected: impl ToString,
        actual: impl ToString,
    ) {
        self.fail(g, k, expected, actual);
        self.counterexamples.last_mut().unwrap().label = Some(label.to_string());
    }
}

/// Runs the claim over the corpus. Corpus items are checked in parallel and
/// merged in (n, m, edge list) order, so reports are deterministic apart
/// from `ms`.
pub fn run_claim(id: &str, corpus: &[FamilySpec], opts: &VerifyOptions) -> Result<ClaimReport> {
    let info = claim_info(id)?;
    let start = Instant::now();

    let mut items: Vec<(Graph, FamilySpec)> = Vec::new();
    for spec in corpus {
        items.extend(spec.generate()?.into_iter().map(|g| (g, *spec)));
    }
    items.sort_by(|a, b| {
        (a.0.order_key(), a.1.to_string()).cmp(&(b.0.order_key(), b.1.to_string()))
    });

    let results: Vec<Result<Option<Checked>>> = items
        .par_iter()
        .map_init(DcEngine::new, |eng, (g, spec)| check(info.id, g, spec, eng))
        .collect();

    let mut checked = 0;
    let mut skipped = 0;
    let mut all = Vec::new();
    let mut notes = static_notes(info.id);
    for r in results {
        match r? {
            None => skipped += 1,
            Some(c) => {
                checked += 1;
                all.extend(c.counterexamples);
                for note in c.notes {
                    if !notes.contains(&note) {
                        notes.push(note);
                    }
                }
            }
        }
    }

    let mut tally: BTreeMap<&str, usize> = BTreeMap::new();
    for c in &all {
        if let Some(label) = &c.label {
            *tally.entry(label.as_str()).or_default() += 1;
        }
    }
    for (label, count) in tally {
        notes.push(format!("{label}: {count} failure(s)"));
    }
    if skipped > 0 {
        notes.push(format!("{skipped} corpus graph(s) outside the claim's hypothesis were skipped"));
    }

    let failures = all.len();
    all.truncate(opts.max_counterexamples);
    Ok(ClaimReport {
        claim: info.id.to_string(),
        corpus: corpus.iter().map(ToString::to_string).collect(),
        checked,
        skipped,
        outcome: if failures == 0 && checked > 0 {
            Outcome::Pass
        } else {
            Outcome::Counterexamples
        },
        failures,
        counterexamples: all,
        notes,
        ms: start.elapsed().as_millis() as u64,
    })
}

/// [`run_claim`] over the claim's default corpus.
pub fn run_claim_default(id: &str, opts: &VerifyOptions) -> Result<ClaimReport> {
    run_claim(id, &default_corpus(id)?, opts)
}

fn static_notes(id: &str) -> Vec<String> {
    match id {
        "C3" => vec!["literal reading: an infeasible k in G counts as 0, so any feasible k in H with m(H) >= k but infeasible in G fails".into()],
        "C7" => vec!["the statement mixes chi and omega; both readings are checked and labeled".into()],
        "C9" => vec![
            "the printed wheel zero interval 2n-3 <= k <= 2n-4 contains no integer as written".into(),
            "corrected reading: the zero set {2n-4, 2n-3}, i.e. m-3 < k < m with m = 2n-2; this is what is checked".into(),
        ],
        "C12" => vec!["checked as equality with the flat-size complement; the one-way statement (every k in the intervals is infeasible) fails only under the first label".into()],
        "C13" => vec!["per-k reading of the equivalence; both directions are reported and labeled".into()],
        "C14" => vec!["the quotient keeps every repeated root, e.g. lambda(lambda-1)^2 leaves lambda-1 with root 1".into()],
        _ => Vec::new(),
    }
}

fn table(eng: &mut DcEngine, g: &Graph) -> Result<DefectTable> {
    defect_table_with(eng, g, &TableOptions::fast())
}

fn chromatic_number(p: &Poly, n: usize) -> usize {
    p.smallest_positive_support(n.max(1))
}

fn show_set(s: &std::collections::BTreeSet<usize>) -> String {
    format!("{s:?}")
}

fn check(id: &str, g: &Graph, spec: &FamilySpec, eng: &mut DcEngine) -> Result<Option<Checked>> {
    let mut out = Checked::default();
    match id {
        "C1" => {
            let t = table(eng, g)?;
            if !t.is_normalized() {
                let sum = t.polys().iter().fold(Poly::zero(), |a, p| &a + p);
                out.fail(g, None, Poly::monomial(g.n()), sum);
            }
        }
        "C2" => {
            if g.n() > MAX_CHROMATIC_VERTICES {
                return Ok(None);
            }
            let t = table(eng, g)?;
            let chi = chromatic_poly(g)?;
            if t.rows[0].poly != chi {
                out.fail(g, Some(0), chi, &t.rows[0].poly);
            }
        }
        "C3" => {
            if g.m() > MAX_SUBGRAPH_EDGES {
                return Err(Error::guard(
                    "subgraph-pairs",
                    format!("m = {} > {MAX_SUBGRAPH_EDGES}", g.m()),
                ));
            }
            let base = table(eng, g)?.numbers();
            let mut subgraphs = Vec::new();
            for mask in 0u32..(1 << g.m()) {
                let ids: Vec<usize> = (0..g.m()).filter(|i| mask >> i & 1 == 1).collect();
                subgraphs.push(("spanning", g.edge_subgraph(&ids)?));
            }
            for mask in 1u32..(1 << g.n()) {
                let vs: Vec<usize> = (0..g.n()).filter(|i| mask >> i & 1 == 1).collect();
                if vs.len() < g.n() {
                    subgraphs.push(("induced", g.induced_subgraph(&vs)?));
                }
            }
            for (kind, h) in subgraphs {
                let hn = table(eng, &h)?.numbers();
                for (k, &gk) in base.iter().enumerate() {
                    let hk = hn.get(k).copied().unwrap_or(0);
                    if hk > gk {
                        let label = if gk == 0 {
                            format!("{kind} subgraph, k infeasible in G")
                        } else {
                            format!("{kind} subgraph, k feasible in G")
                        };
                        out.fail_labeled(
                            &label,
                            g,
                            Some(k),
                            format!("phi_k(H) <= {gk}"),
                            format!("phi_k(H) = {hk} for H = {}", h.compact()),
                        );
                    }
                }
            }
        }
        "C4" => {
            let t = table(eng, g)?;
            let last = t.rows[g.m()].number;
            if last != 1 {
                out.fail(g, Some(g.m()), 1, last);
            }
        }
        "C5" => {
            let t = table(eng, g)?;
            for row in &t.rows {
                if (row.number == 1) != (row.k == g.m()) {
                    let expected = if row.k == g.m() { "1" } else { "not 1" };
                    out.fail(g, Some(row.k), expected, row.number);
                }
            }
        }
        "C6" | "C7" | "C11" => {
            if g.n() > MAX_CHROMATIC_VERTICES {
                return Ok(None);
            }
            let t = table(eng, g)?;
            for row in &t.rows {
                let mut min_chi: Option<usize> = None;
                let mut min_omega: Option<usize> = None;
                for flat in flats_of_size(g, row.k)? {
                    let q = g.quotient(&flat.parts);
                    let chi = chromatic_number(&chromatic_poly(&q)?, q.n());
                    let omega = q.clique_number();
                    min_chi = Some(min_chi.map_or(chi, |c| c.min(chi)));
                    min_omega = Some(min_omega.map_or(omega, |c| c.min(omega)));
                    if id == "C11" {
                        if chi < omega {
                            out.fail_labeled("chi >= omega", &q, None, format!("chi >= {omega}"), chi);
                        }
                        let bip = q.is_bipartite() && q.m() > 0;
                        if (chi == 2) != bip {
                            out.fail_labeled(
                                "chi = 2 iff bipartite",
                                &q,
                                None,
                                format!("bipartite with an edge: {bip}"),
                                format!("chi = {chi}"),
                            );
                        }
                    }
                }
                let (chi, omega) = (min_chi.unwrap_or(0), min_omega.unwrap_or(0));
                match id {
                    "C6" if chi != row.number => {
                        out.fail(g, Some(row.k), format!("min chi(G/X) = {chi}"), row.number)
                    }
                    "C7" => {
                        if chi != row.number {
                            out.fail_labeled("chi reading", g, Some(row.k), format!("min chi(G/X) = {chi}"), row.number);
                        }
                        if omega != row.number {
                            out.fail_labeled(
                                "omega reading",
                                g,
                                Some(row.k),
                                format!("min omega(G/X) = {omega}"),
                                row.number,
                            );
                        }
                    }
                    _ => {}
                }
            }
        }
        "C8" => {
            if !g.is_connected() || g.n() < 2 {
                return Ok(None);
            }
            let t = table(eng, g)?;
            let lam = g.edge_connectivity();
            for k in (g.m() + 1).saturating_sub(lam)..g.m() {
                if t.rows[k].number != 0 {
                    out.fail(g, Some(k), 0, t.rows[k].number);
                }
            }
        }
        "C9" => return check_closed_forms(g, spec, eng),
        "C10" => {
            let t = table(eng, g)?;
            let via_flats = feasible_k(g)?;
            if t.feasible_set() != via_flats {
                out.fail(g, None, show_set(&via_flats), show_set(&t.feasible_set()));
            }
        }
        "C12" => {
            let FamilySpec::Complete(n) = *spec else {
                return Ok(None);
            };
            if n < 3 {
                return Ok(None);
            }
            let formula = kn_infeasible_set(n);
            let feasible = feasible_k(g)?;
            for k in 0..=g.m() {
                let by_formula = formula.contains(&k);
                let by_flats = !feasible.contains(&k);
                if by_formula != by_flats {
                    let word = |b: bool| if b { "infeasible" } else { "feasible" };
                    let label = if by_formula {
                        "formula marks a feasible k"
                    } else {
                        "infeasible k outside the intervals"
                    };
                    out.fail_labeled(label, g, Some(k), word(by_formula), word(by_flats));
                }
            }
        }
        "C13" => {
            if !g.is_connected() || !g.is_bipartite() || g.m() < 2 {
                return Ok(None);
            }
            let t = table(eng, g)?;
            let sums = independent_degree_sums(g)?;
            for k in 1..g.m() {
                let two = t.rows[k].number == 2;
                let sum = sums.contains(&k);
                if sum && !two {
                    out.fail_labeled(
                        "degree sum without phi_k = 2",
                        g,
                        Some(k),
                        "phi_k = 2",
                        t.rows[k].number,
                    );
                }
                if two && !sum {
                    out.fail_labeled(
                        "phi_k = 2 without degree sum",
                        g,
                        Some(k),
                        format!("phi_k != 2 (degree sums {})", show_set(&sums)),
                        2,
                    );
                }
            }
        }
        "C14" => {
            if g.has_loops() || g.n() > MAX_CHROMATIC_VERTICES || g.n() == 0 {
                return Ok(None);
            }
            let p = chromatic_poly(g)?;
            let fp = p.falling_prefix()?;
            if fp.expand() != p {
                out.fail_labeled("inexact division", g, None, &p, fp.expand());
            }
            let roots = fp.quotient.positive_integer_roots(g.n());
            if !roots.is_empty() {
                out.fail(
                    g,
                    None,
                    "quotient without roots in 1..=n",
                    format!("r = {}, Q = {}, roots {roots:?}", fp.r, fp.quotient),
                );
            }
        }
        other => return Err(Error::UnknownClaim(other.to_string())),
    }
    Ok(Some(out))
}

fn is_tree(g: &Graph) -> bool {
    g.n() >= 1 && g.m() + 1 == g.n() && g.is_connected()
}

fn is_cycle(g: &Graph) -> bool {
    g.n() >= 3 && g.m() == g.n() && g.is_connected() && (0..g.n()).all(|v| g.degree(v) == 2)
}

fn check_closed_forms(g: &Graph, spec: &FamilySpec, eng: &mut DcEngine) -> Result<Option<Checked>> {
    let mut out = Checked::default();
    let n = g.n();
    if let FamilySpec::Wheel(_) = spec {
        let t = table(eng, g)?;
        for k in 0..=g.m() + 1 {
            let expected = wheel_defect_number(n, k)?;
            let actual = t.rows.get(k).map_or(0, |r| r.number);
            if expected != actual {
                out.fail_labeled("wheel number", g, Some(k), expected, actual);
            }
        }
        let two = min_bad_edges(g, 2)?;
        let expected = wheel_min_bad_2col(n)?;
        if two != expected {
            out.fail_labeled("wheel 2-coloring minimum", g, None, expected, two);
        }
        let gaps: Vec<usize> = (0..=g.m())
            .filter(|&k| matches!(wheel_defect_number_as_printed(n, k), Ok(None)))
            .collect();
        out.notes.push(format!(
            "W_{n}: literal reading leaves k in {gaps:?} without a value; engine gives {:?}",
            gaps.iter().map(|&k| t.rows[k].number).collect::<Vec<_>>()
        ));
        return Ok(Some(out));
    }
    if is_tree(g) {
        let t = table(eng, g)?;
        for row in &t.rows {
            let p = tree_defect_poly(n, row.k)?;
            if p != row.poly {
                out.fail_labeled("tree polynomial", g, Some(row.k), p, &row.poly);
            }
            if row.k + 2 <= n || row.k + 1 == n {
                let expected = tree_defect_number(n, row.k);
                if expected != row.number {
                    out.fail_labeled("tree number", g, Some(row.k), expected, row.number);
                }
            }
        }
        return Ok(Some(out));
    }
    if is_cycle(g) {
        let t = table(eng, g)?;
        for row in &t.rows {
            let p = cycle_defect_poly(n, row.k)?;
            if p != row.poly {
                out.fail_labeled("cycle polynomial", g, Some(row.k), p, &row.poly);
            }
            let expected = cycle_defect_number(n, row.k);
            if expected != row.number {
                out.fail_labeled("cycle number", g, Some(row.k), expected, row.number);
            }
        }
        return Ok(Some(out));
    }
    Ok(None)
}
