//! Seeded generation of distinct random point sets.
//!
//! Output depends only on `(field, n, seed)`: the generator is SplitMix64 and
//! all ranges are drawn as `u64`.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec, PrimeField, Rationals};
use crate::geometry::{Point, PointSet};

/// Bound on numerators and denominators of generated rationals.
pub const RATIONAL_BOUND: i64 = 100;

/// `n` distinct points of `𝔽_p²`: a partial Fisher–Yates shuffle of
/// `[0, p²)` mapped by `k ↦ (k mod p, k div p)`.
pub fn random_points_prime(field: &PrimeField, n: usize, seed: u64) -> Result<PointSet<PrimeField>> {
    let p = field.modulus();
    let total = p * p;
    if n as u64 > total {
        return Err(Error::TooManyPoints {
            requested: n as u64,
            available: total,
        });
    }
    let mut rng = SplitMix64::seed_from_u64(seed);
    // slots of the virtual array [0, total) that have been swapped
    let mut moved: HashMap<u64, u64> = HashMap::with_capacity(2 * n);
    let mut pts = Vec::with_capacity(n);
    for k in 0..n as u64 {
        let j = rng.random_range(k..total);
        let at_j = moved.get(&j).copied().unwrap_or(j);
        let at_k = moved.get(&k).copied().unwrap_or(k);
        moved.insert(j, at_k);
        pts.push(Point::new(at_j % p, at_j / p));
    }
    PointSet::new(field, pts)
}

/// `n` distinct points with coordinates `a/b`, `|a| ≤ 100`, `1 ≤ b ≤ 100`.
pub fn random_points_rational(n: usize, seed: u64) -> Result<PointSet<Rationals>> {
    let f = Rationals;
    let mut rng = SplitMix64::seed_from_u64(seed);
    let mut coord = || {
        let a = rng.random_range(-RATIONAL_BOUND..=RATIONAL_BOUND);
        let b = rng.random_range(1..=RATIONAL_BOUND);
        f.from_ratio(&BigInt::from(a), &BigInt::from(b)).expect("positive denominator")
    };
    let mut seen = HashSet::with_capacity(n);
    let mut pts = Vec::with_capacity(n);
    while pts.len() < n {
        let p = Point::new(coord(), coord());
        if seen.insert(p.clone()) {
            pts.push(p);
        }
    }
    PointSet::new(&f, pts)
}

/// Random points over the field named by `spec`, written as `x,y` lines.
pub fn random_points_text(spec: &FieldSpec, n: usize, seed: u64) -> Result<String> {
    Ok(match spec {
        FieldSpec::Prime(f) => crate::io::write_points(&random_points_prime(f, n, seed)?),
        FieldSpec::Rational => crate::io::write_points(&random_points_rational(n, seed)?),
    })
}
