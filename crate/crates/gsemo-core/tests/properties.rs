//! Randomized invariants checked with proptest.

use gsemo_core::archive::ParetoArchive;
use gsemo_core::engines::mutate;
use gsemo_core::objectives::{CutFunction, WeightedGraph};
use gsemo_core::{SetFunction, SubsetSolution};

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

fn solutions(n: usize) -> impl Strategy<Value = Vec<(u64, f64)>> {
    prop::collection::vec(
        (0u64..(1 << n), -10.0f64..10.0),
        1..40,
    )
}

proptest! {
    /// After any update sequence the archive stays pairwise incomparable,
    /// within capacity, and each stored solution sits in the slot of its size.
    #[test]
    fn archive_invariants(updates in solutions(6)) {
        let n = 6;
        let mut p = ParetoArchive::new(n);
        for (mask, value) in updates {
            let mut x = SubsetSolution::from_mask(n, mask);
            x.set_value(value);
            p.update(x);
            prop_assert!(p.is_pairwise_incomparable());
            prop_assert!(p.occupancy() <= n + 1);
            for s in 0..=n {
                if let Some(x) = p.slot(s) {
                    prop_assert_eq!(x.size(), s);
                }
            }
        }
    }

    /// Once the empty set enters the archive nothing can ever displace it:
    /// it is the unique solution of size 0 and no other size weakly
    /// dominates objective (f(∅), 0) in the size coordinate.
    #[test]
    fn empty_set_is_permanent(updates in solutions(5), empty_value in 0.0f64..5.0) {
        let n = 5;
        let mut p = ParetoArchive::new(n);
        let mut e = SubsetSolution::empty(n);
        e.set_value(empty_value);
        p.update(e);
        for (mask, value) in updates {
            if mask == 0 {
                continue;
            }
            let mut x = SubsetSolution::from_mask(n, mask);
            x.set_value(value);
            p.update(x);
            prop_assert!(p.slot(0).is_some());
        }
    }

    #[test]
    fn complement_is_an_involution(n in 1usize..20, mask in any::<u64>()) {
        let mask = mask & ((1u64 << n) - 1);
        let x = SubsetSolution::from_mask(n, mask);
        let c = x.complemented();
        prop_assert_eq!(x.size() + c.size(), n);
        prop_assert_eq!(c.complemented().mask(), mask);
        prop_assert_eq!(x.mask() & c.mask(), 0);
    }

    /// A cut value never changes when the side set is complemented.
    #[test]
    fn cut_is_symmetric(
        edges in prop::collection::vec((0usize..6, 0usize..6, 0.0f64..5.0), 0..12),
        mask in 0u64..64,
    ) {
        let mut dedup: Vec<(usize, usize, f64)> = Vec::new();
        for (a, b, w) in edges {
            if a != b && !dedup.iter().any(|&(p, q, _)| (p, q) == (a.min(b), a.max(b))) {
                dedup.push((a.min(b), a.max(b), w));
            }
        }
        let f = CutFunction::new(WeightedGraph::new(6, &dedup).unwrap());
        let x = SubsetSolution::from_mask(6, mask);
        let fx = f.evaluate(&x);
        let fc = f.evaluate(&x.complemented());
        prop_assert!((fx - fc).abs() < 1e-12);
    }

    /// Mutation leaves the parent bit-for-bit intact and produces offspring
    /// over the same ground set without a cached value.
    #[test]
    fn mutation_preserves_parent(n in 1usize..30, mask in any::<u64>(), seed in any::<u64>()) {
        let mask = mask & ((1u64 << n) - 1);
        let mut parent = SubsetSolution::from_mask(n, mask);
        parent.set_value(1.25);
        let before = parent.clone();
        let mut rng = ChaCha12Rng::seed_from_u64(seed);
        let child = mutate(&parent, &mut rng);
        prop_assert_eq!(parent, before);
        prop_assert_eq!(child.n(), n);
        prop_assert_eq!(child.value(), None);
    }
}
