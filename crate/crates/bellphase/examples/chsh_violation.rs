//! The headline number: the CHSH sum of the phase-rotation model at the
//! standard settings (0°, 45°, 22.5°, 67.5°) is exactly 2√2 ≈ 2.828, past
//! the classical bound of 2.
//!
//! Run with `cargo run --example chsh_violation`.

use std::f64::consts::PI;

use bellphase::model::{chsh, correlation};

fn main() {
    let deg = PI / 180.0;
    let (phi1, phi1p, phi2, phi2p) = (0.0, 45.0 * deg, 22.5 * deg, 67.5 * deg);

    println!("settings: phi1 = 0, phi1' = 45, phi2 = 22.5, phi2' = 67.5 (degrees)");
    for (label, a, b) in [
        ("E(phi1 , phi2 )", phi1, phi2),
        ("E(phi1 , phi2')", phi1, phi2p),
        ("E(phi1', phi2 )", phi1p, phi2),
        ("E(phi1', phi2')", phi1p, phi2p),
    ] {
        println!("  {label} = {:+.9}", correlation(a, b));
    }

    let s = chsh(phi1, phi1p, phi2, phi2p);
    println!("S = E1 - E2 + E3 + E4 = {s:.9}");
    println!("2*sqrt(2)             = {:.9}", 2.0 * std::f64::consts::SQRT_2);
    println!("classical bound       = 2");
}
