use std::collections::BTreeSet;

use proptest::prelude::*;
use proptest::sample::subsequence;

use kdefect::engine::{
    bad_edges, brute_force_vector, chromatic_poly, defect_poly_flats, defect_vector_dc,
    defect_vector_subset, is_closed, DcEngine,
};
use kdefect::{canonical_key, Graph, Poly};

fn multigraph(max_n: usize, max_m: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n), 0..=max_m)
            .prop_map(move |pairs| Graph::new(n, pairs).unwrap())
    })
}

fn loopless(max_n: usize, max_m: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n).prop_filter("loop", |(u, v)| u != v), 0..=max_m)
            .prop_map(move |pairs| Graph::new(n, pairs).unwrap())
    })
}

fn with_permutation(max_n: usize, max_m: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    multigraph(max_n, max_m).prop_flat_map(|g| {
        let perm = Just((0..g.n()).collect::<Vec<_>>()).prop_shuffle();
        (Just(g), perm)
    })
}

/// Isomorphism by trying every vertex bijection.
fn isomorphic(a: &Graph, b: &Graph) -> bool {
    fn multiset(g: &Graph, perm: &[usize]) -> Vec<(usize, usize)> {
        let mut e: Vec<(usize, usize)> = g
            .endpoints()
            .iter()
            .map(|&(u, v)| (perm[u].min(perm[v]), perm[u].max(perm[v])))
            .collect();
        e.sort();
        e
    }
    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..=p.len() {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }
    if a.n() != b.n() || a.m() != b.m() {
        return false;
    }
    let target = multiset(b, &(0..b.n()).collect::<Vec<_>>());
    permutations(a.n()).iter().any(|p| multiset(a, p) == target)
}

fn bivariate_eq(a: &[Poly], b: &[Poly]) -> bool {
    let len = a.len().max(b.len());
    (0..len).all(|i| a.get(i).cloned().unwrap_or_else(Poly::zero) == b.get(i).cloned().unwrap_or_else(Poly::zero))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn canonical_key_ignores_labels((g, perm) in with_permutation(8, 14)) {
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(canonical_key(&g), canonical_key(&h));
    }

    #[test]
    fn canonical_key_matches_isomorphism(a in multigraph(5, 7), b in multigraph(5, 7)) {
        prop_assert_eq!(canonical_key(&a) == canonical_key(&b), isomorphic(&a, &b));
    }

    #[test]
    fn delete_and_contract_commute(g in multigraph(5, 8), e in any::<prop::sample::Index>(), f in any::<prop::sample::Index>()) {
        prop_assume!(g.m() >= 2);
        let e = e.index(g.m());
        let f = f.index(g.m());
        prop_assume!(e != f);
        let (d, map) = g.delete_edge(e).unwrap();
        let (left, _) = d.contract_edge(map.get(f).unwrap()).unwrap();
        let (c, map) = g.contract_edge(f).unwrap();
        // contracting f may have turned e into a loop that was dropped
        let right = match map.get(e) {
            Some(e2) => c.delete_edge(e2).unwrap().0,
            None => c,
        };
        prop_assert_eq!(canonical_key(&left), canonical_key(&right));
    }

    #[test]
    fn engines_agree_with_brute_force(g in multigraph(5, 8)) {
        let dc = defect_vector_dc(&g).unwrap();
        let subset = defect_vector_subset(&g).unwrap();
        prop_assert_eq!(&dc, &subset);
        for (k, p) in dc.iter().enumerate() {
            prop_assert_eq!(&defect_poly_flats(&g, k).unwrap(), p);
        }
        for lambda in 0..=3 {
            let counts = brute_force_vector(&g, lambda).unwrap();
            for (k, p) in dc.iter().enumerate() {
                prop_assert_eq!(p.eval(lambda as i128), counts[k] as i128);
            }
        }
    }

    #[test]
    fn cache_does_not_change_results(g in multigraph(7, 12)) {
        let on = DcEngine::new().defect_vector(&g).unwrap();
        let off = DcEngine::without_cache().defect_vector(&g).unwrap();
        prop_assert_eq!(on, off);
    }

    #[test]
    fn deletion_contraction_identity(g in loopless(6, 10), e in any::<prop::sample::Index>()) {
        prop_assume!(g.m() >= 1);
        let e = e.index(g.m());
        let whole = defect_vector_dc(&g).unwrap();
        let del = defect_vector_dc(&g.delete_edge(e).unwrap().0).unwrap();
        let con = defect_vector_dc(&g.contract_edge(e).unwrap().0).unwrap();
        // B(G) = B(G\e) + (t - 1) B(G/e)
        let mut rhs: Vec<Poly> = del.clone();
        rhs.resize(whole.len().max(con.len() + 1), Poly::zero());
        for (i, p) in con.iter().enumerate() {
            rhs[i + 1] = &rhs[i + 1] + p;
            rhs[i] = &rhs[i] - p;
        }
        prop_assert!(bivariate_eq(&whole, &rhs));
        if g.is_bridge(e).unwrap() {
            // bridge: B(G\e) = λ B(G/e)
            let scaled: Vec<Poly> = con.iter().map(|p| p * &Poly::lambda()).collect();
            prop_assert!(bivariate_eq(&del, &scaled));
        }
    }

    #[test]
    fn loop_shifts_the_vector(g in multigraph(5, 6), v in any::<prop::sample::Index>()) {
        let v = v.index(g.n());
        let mut ends = g.endpoints().to_vec();
        ends.push((v, v));
        let looped = Graph::new(g.n(), ends).unwrap();
        let base = defect_vector_dc(&g).unwrap();
        let shifted = defect_vector_dc(&looped).unwrap();
        prop_assert!(shifted[0].is_zero());
        prop_assert_eq!(&shifted[1..], &base[..]);
    }

    #[test]
    fn bad_edge_sets_are_flats(g in multigraph(6, 10), seed in prop::collection::vec(0usize..4, 6)) {
        let assignment: Vec<usize> = (0..g.n()).map(|v| seed[v]).collect();
        let bad = bad_edges(&g, &assignment);
        prop_assert!(is_closed(&g, &bad).unwrap());
    }

    #[test]
    fn partition_identity_and_chromatic_slice(g in multigraph(6, 10)) {
        let v = defect_vector_dc(&g).unwrap();
        let sum = v.iter().fold(Poly::zero(), |a, p| &a + p);
        prop_assert_eq!(sum, Poly::monomial(g.n()));
        prop_assert_eq!(&v[0], &chromatic_poly(&g).unwrap());
    }

    #[test]
    fn window_below_m_is_infeasible(g in loopless(6, 11)) {
        prop_assume!(g.is_connected());
        let v = defect_vector_dc(&g).unwrap();
        let lam = g.edge_connectivity();
        for k in (g.m() + 1).saturating_sub(lam)..g.m() {
            prop_assert!(v[k].is_zero(), "k = {}", k);
        }
    }

    #[test]
    fn spanning_subgraph_feasibility_is_consistent(g in loopless(5, 8), keep in subsequence((0..8).collect::<Vec<usize>>(), 0..=8)) {
        let ids: Vec<usize> = keep.into_iter().filter(|&i| i < g.m()).collect();
        let h = g.edge_subgraph(&ids).unwrap();
        let feasible: BTreeSet<usize> = defect_vector_dc(&h)
            .unwrap()
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_zero())
            .map(|(k, _)| k)
            .collect();
        // k = 0 and k = m(H) are always reachable
        prop_assert!(feasible.contains(&0) && feasible.contains(&h.m()));
    }
}
