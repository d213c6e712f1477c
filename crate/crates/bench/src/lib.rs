//! Fixed inputs shared by the benchmarks.

use cevian_core::{CurvePoint, PPoint};

/// `(-4 + sqrt 19, -1, 3)`, a point where the cevian map is a half-turn.
pub fn witness() -> PPoint {
    "-4+1*sqrt(19),-1,3".parse().expect("valid literal")
}

pub fn witness_on_curve() -> CurvePoint {
    CurvePoint::new(witness()).expect("witness lies on the curve")
}

#[cfg(test)]
mod tests {
    #[test]
    fn fixtures_are_valid() {
        assert!(super::witness().disc() == 19);
        super::witness_on_curve();
    }
}
