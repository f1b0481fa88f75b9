//! Closed-form probabilities and correlations of the phase-rotation model.
//!
//! Each measurement rotates a photon field by an angle φ; detection after the
//! filter happens with probability equal to the squared real part of the
//! rotor. For a pair emitted with phase difference Δ, the joint detection
//! probability is the squared real part of the *product* of the two rotors,
//! cos²(φ₁ − φ₂ − Δ), which does not factorize into the two single-side
//! probabilities. From the four coincidence channels follows the correlation
//! E(φ₁,φ₂) = cos 2(φ₁ − φ₂) and the CHSH sum, which reaches 2√2 at the
//! settings (0°, 45°, 22.5°, 67.5°).

use std::f64::consts::TAU;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ModelError {
    /// A wavelength fraction outside [0, 1].
    #[error("wavelength fraction {0} outside [0, 1]")]
    FractionOutOfRange(f64),
    /// NaN or infinite angle.
    #[error("non-finite angle")]
    NonFiniteAngle,
}

/// Unit complex phase e^{iφ}: the scalar + pseudoscalar part of a rotor.
///
/// Stores the accumulated signed angle together with its (re, im) value;
/// composition multiplies the complex values, so probabilities derived from a
/// composed rotor really flow through the rotor product rather than through a
/// trig shortcut on the summed angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseRotor {
    angle: f64,
    re: f64,
    im: f64,
}

impl PhaseRotor {
    pub fn from_angle(angle: f64) -> Self {
        let (im, re) = angle.sin_cos();
        Self { angle, re, im }
    }

    pub fn angle(&self) -> f64 {
        self.angle
    }

    /// Real part of the phase.
    pub fn re(&self) -> f64 {
        self.re
    }

    /// Imaginary part: present in the rotation, invisible in any local count.
    pub fn im(&self) -> f64 {
        self.im
    }

    /// Rotor product e^{iα}·e^{iβ}, carried out as a complex multiplication.
    pub fn compose(&self, other: &PhaseRotor) -> PhaseRotor {
        PhaseRotor {
            angle: self.angle + other.angle,
            re: self.re * other.re - self.im * other.im,
            im: self.re * other.im + self.im * other.re,
        }
    }
}

/// Source preparation of one photon pair: the phase difference Δ imprinted at
/// emission, plus a common initial phase φ₀.
///
/// φ₀ cancels out of every probability (single and joint) and is kept only so
/// configurations can state it explicitly; no formula below reads it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PairSourceSpec {
    /// Phase difference Δ between the two photons, radians.
    pub delta: f64,
    /// Common initial phase φ₀ at the origin, radians.
    pub phi0: f64,
}

impl PairSourceSpec {
    pub fn new(delta: f64) -> Self {
        Self { delta, phi0: 0.0 }
    }

    pub fn with_phi0(delta: f64, phi0: f64) -> Self {
        Self { delta, phi0 }
    }
}

impl Default for PairSourceSpec {
    fn default() -> Self {
        Self { delta: 0.0, phi0: 0.0 }
    }
}

/// Rotator angles on the two arms. Stations sit at integer multiples of the
/// wavelength, so positions add no phase of their own; only the rotator
/// angles enter.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct RotatorStation {
    /// Rotators on the +z side, radians.
    pub angles_forward: Vec<f64>,
    /// Rotators on the −z side, radians.
    pub angles_backward: Vec<f64>,
}

impl RotatorStation {
    pub fn new(angles_forward: Vec<f64>, angles_backward: Vec<f64>) -> Self {
        Self { angles_forward, angles_backward }
    }
}

/// Probabilities of the four coincidence channels for one pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OutcomeDistribution {
    pub pp: f64,
    pub mm: f64,
    pub pm: f64,
    pub mp: f64,
}

impl OutcomeDistribution {
    pub fn as_array(&self) -> [f64; 4] {
        [self.pp, self.mm, self.pm, self.mp]
    }

    pub fn total(&self) -> f64 {
        self.pp + self.mm + self.pm + self.mp
    }
}

/// Rotation on the +z arm after traveling `z1_frac` of a wavelength past the
/// station: R(φ₁) = e^{iφ₁} with φ₁ = 2π·z₁/λ.
pub fn rotation_forward(z1_frac: f64) -> Result<PhaseRotor, ModelError> {
    check_fraction(z1_frac)?;
    Ok(PhaseRotor::from_angle(TAU * z1_frac))
}

/// Rotation on the −z arm: R(φ₂) = e^{−i(φ₂ + Δ)} with φ₂ = 2π·z₂/λ.
pub fn rotation_backward(z2_frac: f64, source: &PairSourceSpec) -> Result<PhaseRotor, ModelError> {
    check_fraction(z2_frac)?;
    Ok(PhaseRotor::from_angle(-(TAU * z2_frac + source.delta)))
}

fn check_fraction(frac: f64) -> Result<(), ModelError> {
    if !frac.is_finite() {
        return Err(ModelError::NonFiniteAngle);
    }
    if !(0.0..=1.0).contains(&frac) {
        return Err(ModelError::FractionOutOfRange(frac));
    }
    Ok(())
}

/// Detection probability after a rotation: the squared real part of the
/// rotor, cos²φ.
pub fn detection_probability(r: &PhaseRotor) -> f64 {
    r.re() * r.re()
}

/// Joint detection probability cos²(φ₁ − φ₂ − Δ).
///
/// Computed by multiplying the two phase rotors e^{iφ₁} and e^{−i(φ₂+Δ)} and
/// squaring the real part of the product, the mechanism that makes the joint
/// statistics irreducible to a product of the single-side probabilities.
pub fn joint_probability(phi1: f64, phi2: f64, source: &PairSourceSpec) -> f64 {
    let r1 = PhaseRotor::from_angle(phi1);
    let r2 = PhaseRotor::from_angle(-(phi2 + source.delta));
    detection_probability(&r1.compose(&r2))
}

/// Joint probability for any number of rotators on each arm:
/// cos²(Σ forward − Σ backward − Δ). With one rotator per side this reduces
/// exactly to [`joint_probability`].
pub fn joint_probability_multi(station: &RotatorStation, source: &PairSourceSpec) -> f64 {
    let forward = station
        .angles_forward
        .iter()
        .map(|&a| PhaseRotor::from_angle(a))
        .fold(PhaseRotor::from_angle(0.0), |acc, r| acc.compose(&r));
    let backward = station
        .angles_backward
        .iter()
        .map(|&a| PhaseRotor::from_angle(-a))
        .fold(PhaseRotor::from_angle(-source.delta), |acc, r| acc.compose(&r));
    detection_probability(&forward.compose(&backward))
}

/// Four-channel coincidence distribution at Δ = 0:
/// p(++) = p(−−) = cos²(φ₁−φ₂)/2 and p(+−) = p(−+) = sin²(φ₁−φ₂)/2.
///
/// The paper's rates C^{++} = C^{--} = cos²(φ₁−φ₂) sum to 2 over the four
/// channels; halving them is the unique normalization that makes the channels
/// an exhaustive, mutually exclusive distribution per pair (each side's
/// marginal is then 1/2).
pub fn coincidence_probabilities(phi1: f64, phi2: f64) -> OutcomeDistribution {
    coincidence_probabilities_with_source(phi1, phi2, &PairSourceSpec::default())
}

/// Δ-generalized coincidence distribution built on cos²(φ₁ − φ₂ − Δ), so
/// Δ = 0 recovers [`coincidence_probabilities`] exactly.
pub fn coincidence_probabilities_with_source(
    phi1: f64,
    phi2: f64,
    source: &PairSourceSpec,
) -> OutcomeDistribution {
    let c = joint_probability(phi1, phi2, source);
    let equal = c / 2.0;
    let unequal = (1.0 - c) / 2.0;
    OutcomeDistribution { pp: equal, mm: equal, pm: unequal, mp: unequal }
}

/// Correlation of the ±1 outcomes: E(φ₁,φ₂) = 2cos²(φ₁−φ₂) − 1 = cos 2(φ₁−φ₂).
pub fn correlation(phi1: f64, phi2: f64) -> f64 {
    (2.0 * (phi1 - phi2)).cos()
}

/// CHSH sum S = E(φ₁,φ₂) − E(φ₁,φ₂′) + E(φ₁′,φ₂) + E(φ₁′,φ₂′).
pub fn chsh(phi1: f64, phi1p: f64, phi2: f64, phi2p: f64) -> f64 {
    correlation(phi1, phi2) - correlation(phi1, phi2p)
        + correlation(phi1p, phi2)
        + correlation(phi1p, phi2p)
}
