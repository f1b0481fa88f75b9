//! The correlation-versus-angle curve: exact cos 2θ next to a Monte Carlo
//! estimate at every grid point, printed as plot-ready CSV.
//!
//! Run with `cargo run --release --example correlation_sweep > sweep.csv`.

use std::f64::consts::PI;

use bellphase::model::PairSourceSpec;
use bellphase::sim::{
    estimate_correlation, run_experiment_tagged, ExperimentConfig, ModelKind,
};

fn main() {
    let deg = PI / 180.0;
    println!("angle_deg,e_analytic,e_hat,std_err");
    for k in 0..=36 {
        let angle_deg = k as f64 * 5.0;
        let config = ExperimentConfig {
            model: ModelKind::Phase,
            phi1: angle_deg * deg,
            phi2: 0.0,
            source: PairSourceSpec::default(),
            trials: 100_000,
            seed: 42,
            partitions: 4,
        };
        let counts = run_experiment_tagged(&config, k).expect("valid config");
        let est = estimate_correlation(&counts).expect("non-empty counts");
        let exact = (2.0 * angle_deg * deg).cos();
        println!("{angle_deg},{exact:.9},{:.9},{:.9}", est.e_hat, est.std_err);
    }
}
