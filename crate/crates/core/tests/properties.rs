use gpce::pce::{Method, OutputFunction};
use gpce::{
    build_basis, build_pce, count_degree, count_total, enumerate_degree, enumerate_total,
    gram_matrix, grlex_compare, GaussianMeasure, MultiIndex, PceModel, SparsePolynomial,
};
use proptest::prelude::*;
use std::cmp::Ordering;

/// Covariance `B Bᵀ + 0.3 I` from a flattened `B`.
fn spd(n: usize, b: &[f64]) -> GaussianMeasure {
    let rows: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let s: f64 = (0..n).map(|k| b[i * n + k] * b[j * n + k]).sum();
                    s + if i == j { 0.3 } else { 0.0 }
                })
                .collect()
        })
        .collect();
    GaussianMeasure::from_rows(&rows).unwrap()
}

fn measure_strategy() -> impl Strategy<Value = GaussianMeasure> {
    (1usize..=3).prop_flat_map(|n| {
        prop::collection::vec(-1.0f64..1.0, n * n).prop_map(move |b| spd(n, &b))
    })
}

fn polynomial(dim: usize, degree: u32, coeffs: &[f64]) -> SparsePolynomial {
    let idx = enumerate_total(dim, degree).unwrap();
    SparsePolynomial::from_terms(dim, idx.into_iter().zip(coeffs.iter().copied())).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 32,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn enumeration_counts_and_order(dim in 1usize..=5, degree in 0u32..=5) {
        let level = enumerate_degree(dim, degree).unwrap();
        prop_assert_eq!(level.len() as u64, count_degree(dim, degree).unwrap());
        prop_assert_eq!(enumerate_total(dim, degree).unwrap().len() as u64, count_total(dim, degree).unwrap());
        for w in level.windows(2) {
            prop_assert_eq!(grlex_compare(&w[0], &w[1]).unwrap(), Ordering::Greater);
            prop_assert!(w[0] < w[1]);
        }
    }

    #[test]
    fn multi_index_labels_round_trip(entries in prop::collection::vec(0u32..7, 1..6)) {
        let j = MultiIndex::new(entries).unwrap();
        prop_assert_eq!(j.label().parse::<MultiIndex>().unwrap(), j);
    }

    #[test]
    fn gram_matrices_have_unit_diagonal_and_factor(m in measure_strategy(), l in 0u32..=3) {
        let g = gram_matrix(&m, l).unwrap();
        let a = g.entries();
        for p in 0..g.order() {
            prop_assert_eq!(a[(p, p)], 1.0);
            for q in 0..g.order() {
                prop_assert_eq!(a[(p, q)], a[(q, p)]);
                prop_assert!(a[(p, q)].abs() <= 1.0 + 1e-12);
            }
        }
    }

    #[test]
    fn different_degrees_are_orthogonal(m in measure_strategy()) {
        let basis = build_basis(&m, 3).unwrap();
        let entries: Vec<_> = basis.entries().collect();
        for a in &entries {
            for b in &entries {
                if a.index.degree() != b.index.degree() {
                    let e = m.polynomial_expectation(&a.standardized.mul(&b.standardized).unwrap()).unwrap();
                    prop_assert!(e.abs() < 1e-9, "{} {} {e}", a.index, b.index);
                }
            }
        }
    }

    #[test]
    fn polynomials_are_reproduced_and_survive_a_file_round_trip(
        m in measure_strategy(),
        degree in 1u32..=3,
        coeffs in prop::collection::vec(-2.0f64..2.0, 20),
    ) {
        let n = m.dimension();
        let y = polynomial(n, degree, &coeffs);
        let model = build_pce(&m, &OutputFunction::from(y.clone()), degree, &Method::Exact).unwrap();
        prop_assert!(model.expand().max_coeff_diff(&y).unwrap() < 1e-8);
        let x: Vec<f64> = (0..n).map(|i| 0.3 * i as f64 - 0.4).collect();
        prop_assert!((model.eval(&x).unwrap() - y.evaluate(&x).unwrap()).abs() < 1e-8);

        let back = PceModel::from_json(&model.to_json()).unwrap();
        prop_assert_eq!(back.coefficients(), model.coefficients());
        prop_assert_eq!(back.to_json(), model.to_json());
    }

    #[test]
    fn surrogate_sampling_is_seeded(seed in any::<u64>()) {
        let m = GaussianMeasure::equicorrelated(2, 0.4).unwrap();
        let y = polynomial(2, 2, &[1.0, 0.5, -0.5, 0.2, 0.1, 0.3]);
        let model = build_pce(&m, &OutputFunction::from(y), 2, &Method::Exact).unwrap();
        let a = model.sample_surrogate(200, seed);
        prop_assert_eq!(&a.values, &model.sample_surrogate(200, seed).values);
        prop_assert_eq!(a.histogram.bins.iter().map(|b| b.count).sum::<usize>(), 200);
    }
}
