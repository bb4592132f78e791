use corona_core::coronal::{coronal_auto, coronal_generic, coronal_schur_reduction, IndexSet};
use corona_core::corona::{spec_from_json, spec_to_json, CopySpec, CoronaSpec};
use corona_core::graph::Graph;
use corona_core::spectra::{oracle_charpoly, theorem_charpoly, theorem_charpoly_with, SpectralKind};
use corona_core::Strategy as Exec;
use proptest::prelude::*;

fn graph(max: usize) -> impl Strategy<Value = Graph> {
    (1..=max).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        prop::collection::vec(any::<bool>(), pairs.len()).prop_map(move |keep| {
            let edges: Vec<(usize, usize)> =
                pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&e, _)| e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn copy(max: usize) -> impl Strategy<Value = CopySpec> {
    graph(max).prop_flat_map(|g| {
        let n = g.n();
        prop::collection::vec(any::<bool>(), n).prop_map(move |bits| {
            let t: Vec<usize> = (0..n).filter(|&i| bits[i]).collect();
            CopySpec::from_indices(g.clone(), t).unwrap()
        })
    })
}

/// Base on at most 4 vertices with copies on at most 4: at most 20 vertices.
fn spec() -> impl Strategy<Value = CoronaSpec> {
    graph(4).prop_flat_map(|base| {
        let n = base.n();
        prop::collection::vec(copy(4), n).prop_map(move |copies| CoronaSpec::new(base.clone(), copies).unwrap())
    })
}

fn subset_of(g: Graph) -> impl Strategy<Value = (Graph, IndexSet)> {
    let n = g.n();
    prop::collection::vec(any::<bool>(), n).prop_map(move |bits| {
        let t: Vec<usize> = (0..n).filter(|&i| bits[i]).collect();
        let s = IndexSet::new(t, n).unwrap();
        (g.clone(), s)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn theorem_matches_oracle(s in spec()) {
        prop_assert!(s.total_vertices() <= 20);
        for kind in SpectralKind::ALL {
            let theorem = theorem_charpoly(&s, kind).unwrap();
            prop_assert_eq!(&theorem, &oracle_charpoly(&s, kind, 20).unwrap(), "{}", kind);
        }
    }

    #[test]
    fn strategies_agree(s in spec()) {
        let kind = SpectralKind::Laplacian;
        prop_assert_eq!(
            theorem_charpoly_with(&s, kind, Exec::Sequential).unwrap(),
            theorem_charpoly_with(&s, kind, Exec::Parallel).unwrap()
        );
    }

    #[test]
    fn laplacian_coefficients(s in spec()) {
        let p = theorem_charpoly(&s, SpectralKind::Laplacian).unwrap();
        let n = s.total_vertices();
        prop_assert!(p.coeff(0) == corona_core::polyrat::rational(0));
        prop_assert_eq!(p.coeff(n - 1), corona_core::polyrat::rational(-2 * s.total_edges() as i64));
    }

    #[test]
    fn coronal_invariant_under_relabeling(
        (g, alpha) in graph(6).prop_flat_map(subset_of),
        seed in any::<u64>(),
    ) {
        let n = g.n();
        let mut order: Vec<usize> = (0..n).collect();
        // deterministic shuffle from the seed
        let mut state = seed | 1;
        for i in (1..n).rev() {
            state ^= state << 13; state ^= state >> 7; state ^= state << 17;
            order.swap(i, (state % (i as u64 + 1)) as usize);
        }
        let mut inv = vec![0; n];
        for (k, &v) in order.iter().enumerate() { inv[v] = k; }
        let a = g.adjacency();
        let before = coronal_generic(&a, &alpha).unwrap();
        let after = coronal_generic(&g.permuted(&order).adjacency(), &alpha.mapped(&inv).unwrap()).unwrap();
        prop_assert_eq!(&before, &after);
        if !alpha.is_empty() && alpha.len() < n {
            prop_assert_eq!(&coronal_schur_reduction(&a, &alpha).unwrap(), &before);
        }
        prop_assert_eq!(&coronal_auto(&a, &alpha).unwrap().0, &before);
    }

    #[test]
    fn spec_json_round_trip(s in spec()) {
        let back = spec_from_json(&spec_to_json(&s)).unwrap();
        prop_assert_eq!(back, s);
    }
}
