//! Distribution-level checks that need more samples than the unit tests:
//! the Bell-local baselines never beat the classical CHSH bound anywhere on
//! a fine settings grid.

use std::f64::consts::PI;

use bellphase::model::PairSourceSpec;
use bellphase::sim::{pair_grid_estimates, ModelKind};

const DEG: f64 = PI / 180.0;

fn bell_local_bound_on_grid(model: ModelKind) {
    let grid: Vec<f64> = (0..36).map(|k| k as f64 * 5.0 * DEG).collect();
    let estimates =
        pair_grid_estimates(model, &grid, &PairSourceSpec::default(), 10_000, 42, 4).unwrap();
    let n = grid.len();
    let mut worst_margin = f64::NEG_INFINITY;
    for i1 in 0..n {
        for i1p in 0..n {
            for i2 in 0..n {
                for i2p in 0..n {
                    let picks =
                        [(i1, i2), (i1, i2p), (i1p, i2), (i1p, i2p)].map(|(a, b)| estimates[a][b]);
                    let s = picks[0].e_hat - picks[1].e_hat + picks[2].e_hat + picks[3].e_hat;
                    let std_err =
                        picks.iter().map(|e| e.std_err * e.std_err).sum::<f64>().sqrt();
                    let margin = s.abs() - (2.0 + 5.0 * std_err);
                    if margin > worst_margin {
                        worst_margin = margin;
                    }
                }
            }
        }
    }
    assert!(worst_margin <= 0.0, "{model}: |s_hat| beats 2 + 5 std_err by {worst_margin}");
}

#[test]
fn bell_local_deterministic_never_beats_classical_bound() {
    bell_local_bound_on_grid(ModelKind::BellLocalDeterministic);
}

#[test]
fn bell_local_stochastic_never_beats_classical_bound() {
    bell_local_bound_on_grid(ModelKind::BellLocalStochastic);
}
