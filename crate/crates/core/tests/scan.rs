// SPDX-License-Identifier: MIT OR Apache-2.0

use gini_core::sampling::SampleShape;
use gini_core::{check_theorem, scan_monotonicity, ExponentPair, ParameterOrder, PositiveSample};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn chain(points: &[(f64, f64)]) -> Vec<ExponentPair> {
    points
        .iter()
        .map(|&(p, q)| ExponentPair::new(p, q).unwrap())
        .collect()
}

#[test]
fn parallel_scan_matches_sequential_checks() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let grid: Vec<_> = chain(
        &(0..200)
            .map(|i| (0.1 * i as f64 - 9.0, -10.0 + 0.05 * i as f64))
            .collect::<Vec<_>>(),
    );
    for _ in 0..20 {
        let s = SampleShape::AUDIT.draw(&mut rng);
        let scanned = scan_monotonicity(&s, &grid).unwrap();
        assert_eq!(scanned.len(), grid.len() - 1);
        for (w, v) in grid.windows(2).zip(&scanned) {
            let seq = check_theorem(&s, &ParameterOrder::new(w[0], w[1]).unwrap());
            assert_eq!(&seq, v);
            assert!(v.holds);
        }
    }
}

#[test]
fn scan_rejects_a_chain_that_is_not_ordered() {
    let s = PositiveSample::new(vec![1.0, 2.0]).unwrap();
    assert!(scan_monotonicity(&s, &chain(&[(2.0, 0.0), (1.0, 0.0)])).is_err());
    assert!(scan_monotonicity(
        &s,
        &chain(&[(1.0, 0.0), (2.0, 0.0), (2.0, 1.0), (3.0, 2.0)])
    )
    .unwrap()
    .iter()
    .all(|v| v.holds));
}

#[test]
fn uniform_sample_is_degenerate_everywhere() {
    let s = PositiveSample::new(vec![4.0; 6]).unwrap();
    for v in scan_monotonicity(&s, &chain(&[(1.0, 0.0), (2.0, 0.0), (2.0, 1.0)])).unwrap() {
        assert!(v.degenerate && !v.holds && v.passed());
    }
}
