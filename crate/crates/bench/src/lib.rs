//! Fixtures shared by the criterion benches.

use vanish_core::gen::random_points_prime;
use vanish_core::{PointSet, PrimeField};

/// `n` random points of `𝔽_p²` drawn with `seed`.
pub fn instance(p: u64, n: usize, seed: u64) -> PointSet<PrimeField> {
    let f = PrimeField::new(p).expect("benchmark moduli are prime");
    random_points_prime(&f, n, seed).expect("n ≤ p²")
}
