//! Geometric algebra of three-dimensional Euclidean space, Cl(3,0).
//!
//! The algebra is spanned by eight basis blades in the fixed order
//!
//! ```text
//! index:  0    1    2    3    4      5      6      7
//! blade:  1    e1   e2   e3   e1e2   e1e3   e2e3   e1e2e3
//! ```
//!
//! with e_i e_j = δ_ij + ε_ijk (e1e2e3) e_k, the same structure relations as
//! the Pauli matrices. The trivector e1e2e3 squares to −1 and commutes with
//! everything, so scalar + pseudoscalar pairs behave exactly like complex
//! numbers; rotors here are exponentials of unit bivectors.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

/// Errors from algebra operations.
#[derive(Debug, Error, PartialEq)]
pub enum Ga3Error {
    /// An operand carried a NaN or infinite coefficient.
    #[error("non-finite operand in geometric algebra operation")]
    NonFiniteOperand,
    /// The rotation plane has zero magnitude, so no rotor is defined.
    #[error("degenerate rotation plane: zero bivector")]
    DegeneratePlane,
}

/// Number of basis blades in Cl(3,0).
pub const BASIS_SIZE: usize = 8;

/// Basis-blade names in canonical coefficient order.
pub const BASIS_NAMES: [&str; BASIS_SIZE] =
    ["1", "e1", "e2", "e3", "e1e2", "e1e3", "e2e3", "e1e2e3"];

// Blade index <-> generator bitmask (bit k set means e_{k+1} present).
const BLADE_MASK: [u8; BASIS_SIZE] = [0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111];
const MASK_INDEX: [usize; BASIS_SIZE] = [0, 1, 2, 4, 3, 5, 6, 7];

/// Dense element of Cl(3,0): eight real coefficients in canonical blade order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Multivector {
    coeffs: [f64; BASIS_SIZE],
}

/// Pure bivector: coefficients over {e1e2, e1e3, e2e3}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bivector {
    pub e12: f64,
    pub e13: f64,
    pub e23: f64,
}

impl Bivector {
    pub const fn new(e12: f64, e13: f64, e23: f64) -> Self {
        Self { e12, e13, e23 }
    }

    /// The e1e2 plane, the rotation plane perpendicular to e3.
    pub const E12: Bivector = Bivector::new(1.0, 0.0, 0.0);

    pub fn magnitude(&self) -> f64 {
        (self.e12 * self.e12 + self.e13 * self.e13 + self.e23 * self.e23).sqrt()
    }

    /// Embed into a full multivector; every non-bivector coefficient is zero.
    pub fn to_multivector(&self) -> Multivector {
        let mut c = [0.0; BASIS_SIZE];
        c[4] = self.e12;
        c[5] = self.e13;
        c[6] = self.e23;
        Multivector { coeffs: c }
    }
}

impl Multivector {
    pub const fn zero() -> Self {
        Self { coeffs: [0.0; BASIS_SIZE] }
    }

    pub const fn from_coeffs(coeffs: [f64; BASIS_SIZE]) -> Self {
        Self { coeffs }
    }

    pub fn scalar(value: f64) -> Self {
        let mut c = [0.0; BASIS_SIZE];
        c[0] = value;
        Self { coeffs: c }
    }

    /// Basis blade by canonical index (0 = scalar unit, 7 = pseudoscalar).
    pub fn basis(index: usize) -> Self {
        assert!(index < BASIS_SIZE, "blade index out of range");
        let mut c = [0.0; BASIS_SIZE];
        c[index] = 1.0;
        Self { coeffs: c }
    }

    /// Frame vector e1, e2 or e3 (1-based, matching the usual notation).
    pub fn e(i: usize) -> Self {
        assert!((1..=3).contains(&i), "frame vector index must be 1..=3");
        Self::basis(i)
    }

    pub fn coeffs(&self) -> &[f64; BASIS_SIZE] {
        &self.coeffs
    }

    pub fn coeff(&self, index: usize) -> f64 {
        self.coeffs[index]
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_finite())
    }

    /// Coefficient of the unit scalar blade, the "real part" of a rotor.
    pub fn scalar_part(&self) -> f64 {
        self.coeffs[0]
    }

    /// Largest absolute coefficient difference to `other`.
    pub fn max_coeff_distance(&self, other: &Multivector) -> f64 {
        self.coeffs
            .iter()
            .zip(other.coeffs.iter())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

// Sign of reordering the generators of blade `a` past those of blade `b`.
fn reorder_sign(a: u8, b: u8) -> f64 {
    let mut a = a >> 1;
    let mut swaps = 0u32;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

fn raw_product(a: &[f64; BASIS_SIZE], b: &[f64; BASIS_SIZE]) -> [f64; BASIS_SIZE] {
    let mut out = [0.0; BASIS_SIZE];
    for (i, &ca) in a.iter().enumerate() {
        if ca == 0.0 {
            continue;
        }
        for (j, &cb) in b.iter().enumerate() {
            if cb == 0.0 {
                continue;
            }
            let ma = BLADE_MASK[i];
            let mb = BLADE_MASK[j];
            let sign = reorder_sign(ma, mb);
            out[MASK_INDEX[(ma ^ mb) as usize]] += sign * ca * cb;
        }
    }
    out
}

/// Geometric product of two multivectors.
///
/// Exact bilinear product under the Cl(3,0) multiplication table; associative
/// and distributive over addition. Rejects non-finite operands.
pub fn geometric_product(a: &Multivector, b: &Multivector) -> Result<Multivector, Ga3Error> {
    if !a.is_finite() || !b.is_finite() {
        return Err(Ga3Error::NonFiniteOperand);
    }
    Ok(Multivector { coeffs: raw_product(&a.coeffs, &b.coeffs) })
}

/// The unit pseudoscalar i = e1e2e3.
pub fn pseudoscalar() -> Multivector {
    Multivector::basis(7)
}

/// Rotor exp(B·angle) for the unit bivector B of `plane`.
///
/// Since B² = −1 the exponential closes as cos(angle)·1 + sin(angle)·B.
/// The plane is normalized internally; a zero plane is rejected.
pub fn rotor_exp(plane: Bivector, angle: f64) -> Result<Multivector, Ga3Error> {
    if !angle.is_finite() || !plane.magnitude().is_finite() {
        return Err(Ga3Error::NonFiniteOperand);
    }
    let mag = plane.magnitude();
    if mag == 0.0 {
        return Err(Ga3Error::DegeneratePlane);
    }
    let (s, c) = angle.sin_cos();
    let mut out = [0.0; BASIS_SIZE];
    out[0] = c;
    out[4] = s * plane.e12 / mag;
    out[5] = s * plane.e13 / mag;
    out[6] = s * plane.e23 / mag;
    Ok(Multivector { coeffs: out })
}

/// Scalar (real) part of a multivector.
pub fn scalar_part(m: &Multivector) -> f64 {
    m.scalar_part()
}

/// "Complex" exponential exp(i·angle) with i the pseudoscalar: the rotor of
/// the paperlike scalar + trivector form. Numerically identical in scalar
/// part to `rotor_exp` in any plane since both generators square to −1.
pub fn phase_exp(angle: f64) -> Result<Multivector, Ga3Error> {
    if !angle.is_finite() {
        return Err(Ga3Error::NonFiniteOperand);
    }
    let (s, c) = angle.sin_cos();
    let mut out = [0.0; BASIS_SIZE];
    out[0] = c;
    out[7] = s;
    Ok(Multivector { coeffs: out })
}

impl Add for Multivector {
    type Output = Multivector;
    fn add(self, rhs: Multivector) -> Multivector {
        let mut out = self.coeffs;
        for (o, r) in out.iter_mut().zip(rhs.coeffs.iter()) {
            *o += r;
        }
        Multivector { coeffs: out }
    }
}

impl Sub for Multivector {
    type Output = Multivector;
    fn sub(self, rhs: Multivector) -> Multivector {
        let mut out = self.coeffs;
        for (o, r) in out.iter_mut().zip(rhs.coeffs.iter()) {
            *o -= r;
        }
        Multivector { coeffs: out }
    }
}

impl Neg for Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        let mut out = self.coeffs;
        for o in out.iter_mut() {
            *o = -*o;
        }
        Multivector { coeffs: out }
    }
}

// Unchecked geometric product for finite operands.
impl Mul for Multivector {
    type Output = Multivector;
    fn mul(self, rhs: Multivector) -> Multivector {
        Multivector { coeffs: raw_product(&self.coeffs, &rhs.coeffs) }
    }
}

impl Mul<f64> for Multivector {
    type Output = Multivector;
    fn mul(self, rhs: f64) -> Multivector {
        let mut out = self.coeffs;
        for o in out.iter_mut() {
            *o *= rhs;
        }
        Multivector { coeffs: out }
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (c, name) in self.coeffs.iter().zip(BASIS_NAMES.iter()) {
            if *c == 0.0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            if *name == "1" {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}·{name}")?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_mv(rng: &mut ChaCha8Rng) -> Multivector {
        let mut c = [0.0; BASIS_SIZE];
        for x in c.iter_mut() {
            *x = rng.random_range(-1.0..1.0);
        }
        Multivector::from_coeffs(c)
    }

    // Series-summed exponential of a bivector, the independent route for
    // checking the closed-form rotor.
    fn rotor_exp_taylor(plane: Bivector, angle: f64) -> Multivector {
        let mag = plane.magnitude();
        let b = plane.to_multivector() * (angle / mag);
        let mut term = Multivector::scalar(1.0);
        let mut sum = term;
        for k in 1..60 {
            term = term * b * (1.0 / k as f64);
            sum = sum + term;
        }
        sum
    }

    #[test]
    fn frame_vectors_square_to_one() {
        for i in 1..=3 {
            let e = Multivector::e(i);
            assert_eq!(e * e, Multivector::scalar(1.0));
        }
    }

    #[test]
    fn antisymmetry_of_distinct_vectors() {
        let e1 = Multivector::e(1);
        let e2 = Multivector::e(2);
        assert_eq!(e1 * e2, Multivector::basis(4));
        assert_eq!(e2 * e1, -Multivector::basis(4));
    }

    #[test]
    fn structure_constants_all_nine_cases() {
        // e_i e_j = δ_ij + ε_ijk i e_k, exact.
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
                assert_eq!(lhs, rhs, "e{i}·e{j}");
            }
        }
    }

    #[test]
    fn identity_element() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let one = Multivector::scalar(1.0);
        for _ in 0..20 {
            let m = random_mv(&mut rng);
            assert_eq!(one * m, m);
            assert_eq!(m * one, m);
        }
    }

    #[test]
    fn pseudoscalar_squares_to_minus_one() {
        let i = pseudoscalar();
        assert_eq!(i * i, Multivector::scalar(-1.0));
    }

    #[test]
    fn pseudoscalar_times_e3_is_e12() {
        assert_eq!(pseudoscalar() * Multivector::e(3), Multivector::basis(4));
    }

    #[test]
    fn pseudoscalar_commutes_with_frame_vectors() {
        let i = pseudoscalar();
        for k in 1..=3 {
            let e = Multivector::e(k);
            assert_eq!(i * e, e * i);
        }
    }

    #[test]
    fn pseudoscalar_central_for_random_elements() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let i = pseudoscalar();
        for _ in 0..100 {
            let m = random_mv(&mut rng);
            assert!((i * m).max_coeff_distance(&(m * i)) <= 1e-14);
        }
    }

    #[test]
    fn associativity_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..100 {
            let a = random_mv(&mut rng);
            let b = random_mv(&mut rng);
            let c = random_mv(&mut rng);
            assert!(((a * b) * c).max_coeff_distance(&(a * (b * c))) <= 1e-12);
        }
    }

    #[test]
    fn distributivity_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        for _ in 0..100 {
            let a = random_mv(&mut rng);
            let b = random_mv(&mut rng);
            let c = random_mv(&mut rng);
            assert!((a * (b + c)).max_coeff_distance(&(a * b + a * c)) <= 1e-12);
        }
    }

    #[test]
    fn rotor_special_angles() {
        let r0 = rotor_exp(Bivector::E12, 0.0).unwrap();
        assert_eq!(r0, Multivector::scalar(1.0));

        let rq = rotor_exp(Bivector::E12, std::f64::consts::FRAC_PI_2).unwrap();
        assert!(rq.max_coeff_distance(&Multivector::basis(4)) <= 1e-15);

        let rh = rotor_exp(Bivector::E12, std::f64::consts::PI).unwrap();
        assert!(rh.max_coeff_distance(&Multivector::scalar(-1.0)) <= 1e-15);
    }

    #[test]
    fn rotor_matches_series_exponential() {
        let mut rng = ChaCha8Rng::seed_from_u64(15);
        for _ in 0..50 {
            let plane = Bivector::new(
                rng.random_range(-1.0..1.0),
                rng.random_range(-1.0..1.0),
                rng.random_range(-1.0..1.0),
            );
            if plane.magnitude() < 1e-3 {
                continue;
            }
            let angle = rng.random_range(-3.0..3.0);
            let closed = rotor_exp(plane, angle).unwrap();
            let series = rotor_exp_taylor(plane, angle);
            assert!(closed.max_coeff_distance(&series) <= 1e-12);
        }
    }

    #[test]
    fn rotor_composition_law() {
        let mut rng = ChaCha8Rng::seed_from_u64(16);
        for _ in 0..100 {
            let a = rng.random_range(-6.0..6.0);
            let b = rng.random_range(-6.0..6.0);
            let plane = Bivector::new(
                rng.random_range(-1.0..1.0),
                rng.random_range(-1.0..1.0),
                rng.random_range(-1.0..1.0),
            );
            if plane.magnitude() < 1e-3 {
                continue;
            }
            let lhs = rotor_exp(plane, a).unwrap() * rotor_exp(plane, b).unwrap();
            let rhs = rotor_exp(plane, a + b).unwrap();
            assert!(lhs.max_coeff_distance(&rhs) <= 1e-12);
        }
    }

    #[test]
    fn rotor_unit_magnitude() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..100 {
            let angle = rng.random_range(-10.0..10.0);
            let r = rotor_exp(Bivector::E12, angle).unwrap();
            let norm2: f64 = r.coeffs().iter().map(|c| c * c).sum();
            assert!((norm2 - 1.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn scalar_part_of_rotors() {
        assert_eq!(scalar_part(&rotor_exp(Bivector::E12, 0.0).unwrap()), 1.0);
        let half = scalar_part(&rotor_exp(Bivector::E12, std::f64::consts::FRAC_PI_3).unwrap());
        assert!((half - 0.5).abs() <= 1e-15);
        let quarter = scalar_part(&rotor_exp(Bivector::E12, std::f64::consts::FRAC_PI_2).unwrap());
        assert!(quarter.abs() <= 1e-15);
    }

    #[test]
    fn bivector_and_trivector_exponentials_agree_in_scalar_part() {
        // Both generators square to -1, so the two readings of the rotor
        // exponent give the same real part at every angle.
        let mut rng = ChaCha8Rng::seed_from_u64(18);
        for _ in 0..200 {
            let angle = rng.random_range(-10.0..10.0);
            let bv = rotor_exp(Bivector::E12, angle).unwrap();
            let tv = phase_exp(angle).unwrap();
            assert!((bv.scalar_part() - tv.scalar_part()).abs() <= 1e-15);
        }
    }

    #[test]
    fn degenerate_plane_rejected() {
        let err = rotor_exp(Bivector::new(0.0, 0.0, 0.0), 1.0).unwrap_err();
        assert_eq!(err, Ga3Error::DegeneratePlane);
    }

    #[test]
    fn non_finite_operands_rejected() {
        let bad = Multivector::scalar(f64::NAN);
        let good = Multivector::scalar(1.0);
        assert_eq!(geometric_product(&bad, &good).unwrap_err(), Ga3Error::NonFiniteOperand);
        assert_eq!(geometric_product(&good, &bad).unwrap_err(), Ga3Error::NonFiniteOperand);
        assert_eq!(rotor_exp(Bivector::E12, f64::INFINITY).unwrap_err(), Ga3Error::NonFiniteOperand);
    }

    #[test]
    fn normalizes_non_unit_planes() {
        let r1 = rotor_exp(Bivector::new(3.0, 0.0, 0.0), 1.25).unwrap();
        let r2 = rotor_exp(Bivector::E12, 1.25).unwrap();
        assert!(r1.max_coeff_distance(&r2) <= 1e-15);
    }
}
