//! Local phase-rotation model of entangled photon pairs.
//!
//! Two photons leave a common source with a fixed phase difference Δ. Each is
//! later rotated in the plane perpendicular to its propagation axis and passed
//! through a filter; the detection probability is the squared real part of the
//! accumulated rotor. The joint statistics of the pair then reproduce the
//! cos 2θ correlation curve and the CHSH value S = 2√2 at the standard
//! settings (0°, 45°, 22.5°, 67.5°), while Bell-local baselines built from
//! factorized per-side probabilities stay at or below S = 2.
//!
//! The crate is organized as:
//!
//! * [`ga3`] — the geometric algebra of 3-space Cl(3,0): multivectors, the
//!   geometric product, bivector exponentials (rotors), the pseudoscalar.
//! * [`model`] — closed-form probabilities and correlations: phase rotors,
//!   joint detection probability, coincidence channels, E(φ₁,φ₂) and the
//!   CHSH sum.
//! * [`sim`] — seeded, partitioned Monte Carlo sampling of per-pair outcomes
//!   for the phase model and two Bell-local baselines, with correlation and
//!   CHSH estimates carrying standard errors.
//! * [`checks`] — the built-in invariant suite behind `bellphase verify`.
//! * [`cli`] — the command-line front end (`single`, `sweep`, `chsh`,
//!   `scan`, `verify`) with CSV and JSON output.
//!
//! Start with the runnable examples: `cargo run --example chsh_violation`.

pub mod checks;
pub mod cli;
pub mod ga3;
pub mod model;
pub mod sim;
