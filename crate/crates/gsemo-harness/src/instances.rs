//! Built-in benchmark instances with fixed generator seeds, so the
//! verification suites are reproducible without shipped data files.

use gsemo_core::objectives::{
    CoverageInstance, CutFunction, FacilityLocationInstance, RegressionInstance, WeightedGraph,
};
use gsemo_core::SetFunction;

/// Minimal deterministic generator for instance data; kept separate from the
/// optimizer RNG so instance identity never depends on the rand crate.
#[derive(Clone)]
pub struct InstanceRng(u64);

impl InstanceRng {
    pub fn new(seed: u64) -> Self {
        InstanceRng(seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) | 1)
    }

    fn next_u64(&mut self) -> u64 {
        // splitmix64 step.
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.unit()
    }
}

/// Erdős–Rényi max-cut instance: each vertex pair is an edge with probability
/// 1/2; `unit_weights` toggles unit vs random weights in [0.5, 1.5].
pub fn random_cut(n: usize, unit_weights: bool, seed: u64) -> CutFunction {
    let mut rng = InstanceRng::new(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.unit() < 0.5 {
                let w = if unit_weights { 1.0 } else { rng.range(0.5, 1.5) };
                edges.push((u, v, w));
            }
        }
    }
    if edges.is_empty() && n >= 2 {
        edges.push((0, 1, 1.0));
    }
    CutFunction::new(WeightedGraph::new(n, &edges).expect("generated edges are valid"))
}

/// The fixed graph family for the unconstrained max-cut verification suite:
/// three unit-weight and two random-weight graphs on 12 vertices.
pub fn theorem1_graphs() -> Vec<(String, CutFunction)> {
    let mut out = Vec::new();
    for (i, seed) in [101u64, 102, 103].iter().enumerate() {
        out.push((format!("er12-unit-{}", i + 1), random_cut(12, true, *seed)));
    }
    for (i, seed) in [201u64, 202].iter().enumerate() {
        out.push((format!("er12-weighted-{}", i + 1), random_cut(12, false, *seed)));
    }
    out
}

/// Random coverage instance where every element covers one unique item of
/// weight >= 1 plus a few shared items. The unique item keeps every marginal
/// at least 1, so small additive perturbations cannot break monotonicity.
pub fn random_coverage(n: usize, seed: u64) -> CoverageInstance {
    let mut rng = InstanceRng::new(seed);
    let shared = n; // shared items come after the n unique ones
    let universe = n + shared;
    let mut covered_by = Vec::with_capacity(n);
    for e in 0..n {
        let mut items = vec![e as u32];
        for s in 0..shared {
            if rng.unit() < 0.35 {
                items.push((n + s) as u32);
            }
        }
        covered_by.push(items);
    }
    let mut weights = Vec::with_capacity(universe);
    for _ in 0..n {
        weights.push(rng.range(1.0, 3.0));
    }
    for _ in 0..shared {
        weights.push(rng.range(0.5, 2.0));
    }
    CoverageInstance::new(n, universe, covered_by, weights).expect("generated instance is valid")
}

/// Coverage with pairwise disjoint unit items: a modular function.
pub fn disjoint_coverage(weights: &[f64]) -> CoverageInstance {
    let n = weights.len();
    CoverageInstance::new(
        n,
        n,
        (0..n).map(|i| vec![i as u32]).collect(),
        weights.to_vec(),
    )
    .expect("disjoint coverage is valid")
}

/// Cost-free facility location (monotone submodular) with random benefits.
pub fn random_facility(facilities: usize, customers: usize, seed: u64) -> FacilityLocationInstance {
    let mut rng = InstanceRng::new(seed);
    let benefits = (0..customers)
        .map(|_| (0..facilities).map(|_| rng.range(0.0, 4.0)).collect())
        .collect();
    FacilityLocationInstance::new(benefits, vec![0.0; facilities])
        .expect("generated instance is valid")
}

/// Random regression instance: the target is a sparse combination of a few
/// columns plus noise, so R-squared is non-trivial and non-submodular.
pub fn random_regression(n: usize, rows: usize, seed: u64) -> RegressionInstance {
    let mut rng = InstanceRng::new(seed);
    let columns: Vec<Vec<f64>> = (0..n)
        .map(|_| (0..rows).map(|_| rng.range(-1.0, 1.0)).collect())
        .collect();
    let support = [(0usize, 1.5), (1, -1.0), (2, 0.75)];
    let target = (0..rows)
        .map(|r| {
            let mut y = 0.2 * rng.range(-1.0, 1.0);
            for &(c, coef) in support.iter() {
                if c < n {
                    y += coef * columns[c][r];
                }
            }
            y
        })
        .collect();
    RegressionInstance::new(columns, target).expect("generated instance is valid")
}

pub fn triangle() -> CutFunction {
    CutFunction::new(
        WeightedGraph::new(3, &[(0, 1, 1.0), (0, 2, 1.0), (1, 2, 1.0)]).unwrap(),
    )
}

/// The fixed regression instance of the ratio-regime suite.
pub fn theorem3_regression() -> RegressionInstance {
    random_regression(10, 30, 4242)
}

/// The coverage base of the perturbed-regime suites.
pub fn perturbation_base() -> CoverageInstance {
    random_coverage(12, 777)
}

pub struct NamedInstance {
    pub name: &'static str,
    pub oracle: Box<dyn SetFunction + Send + Sync>,
}

/// The built-in instance registry used by the deterministic verification
/// criteria. All ground sets are <= 12.
pub fn built_ins() -> Vec<NamedInstance> {
    vec![
        NamedInstance {
            name: "triangle",
            oracle: Box::new(triangle()),
        },
        NamedInstance {
            name: "er8-unit",
            oracle: Box::new(random_cut(8, true, 11)),
        },
        NamedInstance {
            name: "er10-weighted",
            oracle: Box::new(random_cut(10, false, 12)),
        },
        NamedInstance {
            name: "er12-unit-1",
            oracle: Box::new(random_cut(12, true, 101)),
        },
        NamedInstance {
            name: "cover8",
            oracle: Box::new(random_coverage(8, 21)),
        },
        NamedInstance {
            name: "cover12",
            oracle: Box::new(perturbation_base()),
        },
        NamedInstance {
            name: "disjoint5",
            oracle: Box::new(disjoint_coverage(&[5.0, 3.0, 2.0, 2.0, 1.0])),
        },
        NamedInstance {
            name: "facility6",
            oracle: Box::new(random_facility(6, 8, 31)),
        },
        NamedInstance {
            name: "facility10",
            oracle: Box::new(random_facility(10, 12, 32)),
        },
        NamedInstance {
            name: "regress6",
            oracle: Box::new(random_regression(6, 20, 41)),
        },
        NamedInstance {
            name: "regress10",
            oracle: Box::new(theorem3_regression()),
        },
    ]
}
