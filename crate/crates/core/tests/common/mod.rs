#![allow(dead_code)]

use cevian_core::triangle::{build_config, TriangleConfig};
use cevian_core::{PPoint, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn scalar(lit: &str) -> Scalar {
    lit.parse().unwrap()
}

/// `(-4 + sqrt 19, -1, 3)`, a point of the half-turn locus.
pub fn sqrt19_point() -> PPoint {
    PPoint::new([scalar("-4+sqrt(19)"), Scalar::from_int(-1), Scalar::from_int(3)]).unwrap()
}

pub fn random_rational_point(rng: &mut ChaCha8Rng, bound: i64) -> PPoint {
    loop {
        let v: [i64; 3] = std::array::from_fn(|_| rng.gen_range(-bound..=bound));
        if v != [0, 0, 0] {
            return PPoint::from_ints(v[0], v[1], v[2]);
        }
    }
}

/// Configurations for `n` random rational points satisfying every
/// hypothesis of the half-turn equivalences.
pub fn admissible_configs(seed: u64, n: usize) -> Vec<TriangleConfig> {
    let mut rng = rng(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let p = random_rational_point(&mut rng, 12);
        if let Ok(cfg) = build_config(&p) {
            if cfg.flags.violations().is_empty() {
                out.push(cfg);
            }
        }
    }
    out
}
