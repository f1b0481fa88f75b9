//! A tour of the Cl(3,0) layer underneath the model: the multiplication
//! table of the frame vectors, the pseudoscalar acting as the imaginary
//! unit, rotors as bivector exponentials, and the built-in invariant suite.
//!
//! Run with `cargo run --example rotor_algebra`.

use std::f64::consts::FRAC_PI_3;

use bellphase::checks;
use bellphase::ga3::{pseudoscalar, rotor_exp, scalar_part, Bivector, Multivector};

fn main() {
    println!("frame vector products e_i * e_j:");
    for i in 1..=3 {
        for j in 1..=3 {
            let p = Multivector::e(i) * Multivector::e(j);
            println!("  e{i} * e{j} = {p}");
        }
    }

    let i = pseudoscalar();
    println!("\npseudoscalar i = e1e2e3:");
    println!("  i * i = {}", i * i);
    println!("  i * e3 = {}", i * Multivector::e(3));

    let r = rotor_exp(Bivector::E12, FRAC_PI_3).expect("valid plane");
    println!("\nrotor exp(e1e2 * pi/3) = {r}");
    println!("  scalar part (detection amplitude) = {:.6}", scalar_part(&r));
    println!("  squared real part (probability)   = {:.6}", scalar_part(&r).powi(2));

    println!("\ninvariant suite:");
    let mut all_ok = true;
    for outcome in checks::run_all() {
        println!(
            "  [{}] {}: {}",
            if outcome.passed { "ok" } else { "FAIL" },
            outcome.name,
            outcome.detail
        );
        all_ok &= outcome.passed;
    }
    std::process::exit(if all_ok { 0 } else { 1 });
}
