//! Built-in invariant suite behind `bellphase verify`.
//!
//! Each check re-derives one of the load-bearing identities of the library at
//! runtime: the Cl(3,0) structure constants, the pseudoscalar square, rotor
//! composition, agreement of the rotor-product and cos² routes to the joint
//! probability, the many-rotator reduction, and shift invariance of the joint
//! probability under a common angle offset. Randomized checks use a fixed
//! ChaCha stream so the suite is reproducible.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::ga3::{pseudoscalar, rotor_exp, Bivector, Multivector};
use crate::model::{joint_probability, joint_probability_multi, PairSourceSpec, RotatorStation};

/// Result of one invariant check.
#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn pass(name: &'static str, detail: impl Into<String>) -> Self {
        Self { name, passed: true, detail: detail.into() }
    }

    fn fail(name: &'static str, detail: impl Into<String>) -> Self {
        Self { name, passed: false, detail: detail.into() }
    }
}

const CHECK_SEED: u64 = 0x5eed_c0de;

/// Run the whole suite.
pub fn run_all() -> Vec<CheckOutcome> {
    vec![
        structure_constants(),
        pseudoscalar_square(),
        rotor_composition(),
        rotor_magnitude(),
        mechanism_equality(),
        multi_rotator_reduction(),
        shift_invariance(),
    ]
}

/// e_i e_j = δ_ij + ε_ijk i e_k for all nine (i, j), exact.
fn structure_constants() -> CheckOutcome {
    const NAME: &str = "ga3-structure-constants";
    let eps = |i: usize, j: usize, k: usize| -> f64 {
        match (i, j, k) {
            (1, 2, 3) | (2, 3, 1) | (3, 1, 2) => 1.0,
            (3, 2, 1) | (2, 1, 3) | (1, 3, 2) => -1.0,
            _ => 0.0,
        }
    };
    let i_unit = pseudoscalar();
    for i in 1..=3 {
        for j in 1..=3 {
            let lhs = Multivector::e(i) * Multivector::e(j);
            let mut rhs = Multivector::scalar(if i == j { 1.0 } else { 0.0 });
            for k in 1..=3 {
                rhs = rhs + i_unit * Multivector::e(k) * eps(i, j, k);
            }
            if lhs != rhs {
                return CheckOutcome::fail(NAME, format!("e{i}·e{j} = {lhs}, expected {rhs}"));
            }
        }
    }
    CheckOutcome::pass(NAME, "all 9 products exact")
}

fn pseudoscalar_square() -> CheckOutcome {
    const NAME: &str = "ga3-pseudoscalar-square";
    let sq = pseudoscalar() * pseudoscalar();
    if sq == Multivector::scalar(-1.0) {
        CheckOutcome::pass(NAME, "(e1e2e3)^2 = -1 exact")
    } else {
        CheckOutcome::fail(NAME, format!("(e1e2e3)^2 = {sq}"))
    }
}

/// exp(Bα)·exp(Bβ) = exp(B(α+β)) over 1000 random cases, 1e-12.
fn rotor_composition() -> CheckOutcome {
    const NAME: &str = "ga3-rotor-composition";
    let mut rng = ChaCha8Rng::seed_from_u64(CHECK_SEED);
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let a = rng.random_range(-6.0..6.0);
        let b = rng.random_range(-6.0..6.0);
        let plane = random_plane(&mut rng);
        let lhs = rotor_exp(plane, a).unwrap() * rotor_exp(plane, b).unwrap();
        let rhs = rotor_exp(plane, a + b).unwrap();
        worst = worst.max(lhs.max_coeff_distance(&rhs));
    }
    bounded(NAME, worst, 1e-12)
}

/// scalar² + bivector² of a rotor stays 1 to 1e-12.
fn rotor_magnitude() -> CheckOutcome {
    const NAME: &str = "ga3-rotor-magnitude";
    let mut rng = ChaCha8Rng::seed_from_u64(CHECK_SEED ^ 1);
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let r = rotor_exp(random_plane(&mut rng), rng.random_range(-10.0..10.0)).unwrap();
        let norm2: f64 = r.coeffs().iter().map(|c| c * c).sum();
        worst = worst.max((norm2 - 1.0).abs());
    }
    bounded(NAME, worst, 1e-12)
}

/// Rotor-product route vs the cos²(φ₁−φ₂−Δ) shortcut, 1000 random triples.
fn mechanism_equality() -> CheckOutcome {
    const NAME: &str = "model-mechanism-equality";
    let mut rng = ChaCha8Rng::seed_from_u64(CHECK_SEED ^ 2);
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let phi1 = rng.random_range(-10.0..10.0);
        let phi2 = rng.random_range(-10.0..10.0);
        let delta = rng.random_range(-10.0..10.0);
        let via_rotors = joint_probability(phi1, phi2, &PairSourceSpec::new(delta));
        let shortcut = (phi1 - phi2 - delta).cos().powi(2);
        worst = worst.max((via_rotors - shortcut).abs());
    }
    bounded(NAME, worst, 1e-12)
}

/// Many-rotator probability with one angle per side equals the pairwise one.
fn multi_rotator_reduction() -> CheckOutcome {
    const NAME: &str = "model-multi-rotator-reduction";
    let mut rng = ChaCha8Rng::seed_from_u64(CHECK_SEED ^ 3);
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let a = rng.random_range(-6.0..6.0);
        let b = rng.random_range(-6.0..6.0);
        let src = PairSourceSpec::new(rng.random_range(-3.0..3.0));
        let station = RotatorStation::new(vec![a], vec![b]);
        worst = worst
            .max((joint_probability_multi(&station, &src) - joint_probability(a, b, &src)).abs());
    }
    // Cancellation case on top of the random reduction.
    let station = RotatorStation::new(vec![0.9, -0.9], vec![]);
    let cancel = joint_probability_multi(&station, &PairSourceSpec::default());
    worst = worst.max((cancel - 1.0).abs());
    bounded(NAME, worst, 1e-12)
}

/// Joint probability unchanged by a common shift of both angles (the φ₀
/// claim stated at the level where it is literally true).
fn shift_invariance() -> CheckOutcome {
    const NAME: &str = "model-shift-invariance";
    let mut rng = ChaCha8Rng::seed_from_u64(CHECK_SEED ^ 4);
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let phi1 = rng.random_range(-10.0..10.0);
        let phi2 = rng.random_range(-10.0..10.0);
        let shift = rng.random_range(-10.0..10.0);
        let src = PairSourceSpec::new(rng.random_range(-3.0..3.0));
        let base = joint_probability(phi1, phi2, &src);
        let shifted = joint_probability(phi1 + shift, phi2 + shift, &src);
        worst = worst.max((base - shifted).abs());
    }
    bounded(NAME, worst, 1e-12)
}

fn random_plane(rng: &mut ChaCha8Rng) -> Bivector {
    loop {
        let plane = Bivector::new(
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
        );
        if plane.magnitude() > 1e-3 {
            return plane;
        }
    }
}

fn bounded(name: &'static str, worst: f64, tol: f64) -> CheckOutcome {
    if worst <= tol {
        CheckOutcome::pass(name, format!("max deviation {worst:.3e} <= {tol:.0e}"))
    } else {
        CheckOutcome::fail(name, format!("max deviation {worst:.3e} > {tol:.0e}"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes_on_fresh_build() {
        let outcomes = run_all();
        assert_eq!(outcomes.len(), 7);
        for o in &outcomes {
            assert!(o.passed, "{}: {}", o.name, o.detail);
        }
    }
}
