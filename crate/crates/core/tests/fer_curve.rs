//! Frame error rate on the GF(16) triple as the error weight grows.

use std::sync::Arc;

use rs_plotkin::channel::ChannelModel;
use rs_plotkin::sim::{self, mds_reference};
use rs_plotkin::{Execution, GaloisField, NestedTriple};

const TRIALS: u64 = 100_000;
// Sampling noise allowance between neighbouring weights.
const MONOTONE_SLACK: f64 = 0.005;

#[test]
fn zero_plateau_then_nondecreasing() {
    let f = Arc::new(GaloisField::new(4, None).unwrap());
    let t = NestedTriple::new(f, 15, 11, 9, 5, None).unwrap();
    let p = t.params();
    let mut prev = 0.0;
    for tau in 0..=12 {
        let r = sim::run_simulation(&t, ChannelModel::FixedWeight(tau), TRIALS, 99, Execution::Parallel)
            .unwrap();
        let fer = r.fer();
        if tau <= p.correction_radius() {
            assert_eq!(fer, 0.0, "tau={tau}");
        }
        assert!(fer + MONOTONE_SLACK >= prev, "tau={tau}: {fer} after {prev}");
        // the reference MDS code of the same length and dimension decodes up to 10
        assert_eq!(mds_reference(p.n0, p.k0, tau), tau <= 10);
        prev = fer;
    }
    assert!(prev > 0.9);
}

#[test]
fn sequential_and_parallel_agree() {
    let f = Arc::new(GaloisField::new(4, None).unwrap());
    let t = NestedTriple::new(f, 15, 11, 9, 5, None).unwrap();
    let m = ChannelModel::QSymmetric(0.15);
    let a = sim::run_simulation(&t, m, 3000, 1, Execution::Sequential).unwrap();
    let b = sim::run_simulation(&t, m, 3000, 1, Execution::Parallel).unwrap();
    assert_eq!(
        (a.successes, a.miscorrections, a.failures),
        (b.successes, b.miscorrections, b.failures)
    );
}
