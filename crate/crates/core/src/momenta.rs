//! Seeded generator of exact on-shell momenta.
//!
//! A rational unit direction comes from a Pythagorean quadruple
//! `(a²+b²−c²−d², 2(ad+bc), 2(bd−ac), a²+b²+c²+d²)`, and the magnitude from a
//! Pythagorean triple `(u²−v², 2uv, u²+v²)` scaled by the mass, so that
//! `p² + m²` is always a rational square.

use rand::Rng;

use crate::scalar::{q, Rational, Scalar};

/// Rational momenta with `|p| ∈ {3/4, 5/12, 8/15}` at `m = 1`, along the 3-axis.
pub fn axial_reference_momenta() -> Vec<([Rational; 3], Rational)> {
    [q(3, 4), q(5, 12), q(8, 15)]
        .into_iter()
        .map(|p3| ([q(0, 1), q(0, 1), p3], q(1, 1)))
        .collect()
}

/// `p = (1/4, 1/2, 1/2)`, `m = 1`, `E = 5/4`: every component nonzero.
pub fn reference_momentum() -> ([Rational; 3], Rational) {
    ([q(1, 4), q(1, 2), q(1, 2)], q(1, 1))
}

pub fn rest_frame() -> ([Rational; 3], Rational) {
    ([q(0, 1), q(0, 1), q(0, 1)], q(1, 1))
}

/// Integer quadruple `(x, y, z, w)` with `x² + y² + z² = w²`, `w > 0`.
pub fn random_quadruple<R: Rng>(rng: &mut R, bound: i64) -> [i64; 4] {
    loop {
        let [a, b, c, d] = [(); 4].map(|_| rng.gen_range(-bound..=bound));
        let w = a * a + b * b + c * c + d * d;
        if w == 0 {
            continue;
        }
        return [
            a * a + b * b - c * c - d * d,
            2 * (a * d + b * c),
            2 * (b * d - a * c),
            w,
        ];
    }
}

/// Random exact momentum and positive mass on the rational mass shell.
pub fn random_exact_momentum<R: Rng>(rng: &mut R) -> ([Rational; 3], Rational) {
    let [x, y, z, w] = random_quadruple(rng, 3);
    let u = rng.gen_range(2..=5i64);
    let v = rng.gen_range(1..u);
    let (leg_a, leg_b) = if rng.gen_bool(0.5) {
        (u * u - v * v, 2 * u * v)
    } else {
        (2 * u * v, u * u - v * v)
    };
    let mass = q(rng.gen_range(1..=3), rng.gen_range(1..=3));
    let magnitude = mass.clone() * q(leg_a, leg_b);
    let p = [x, y, z].map(|c| magnitude.clone() * q(c, w));
    (p, mass)
}

/// Random exact momentum along the 3-axis.
pub fn random_axial_momentum<R: Rng>(rng: &mut R) -> ([Rational; 3], Rational) {
    let (p, mass) = random_exact_momentum(rng);
    let magnitude = p.iter().fold(q(0, 1), |acc, c| acc + c.clone() * c.clone());
    let magnitude = magnitude
        .checked_sqrt()
        .expect("generator yields rational magnitudes");
    let sign = if rng.gen_bool(0.5) { q(1, 1) } else { q(-1, 1) };
    ([q(0, 1), q(0, 1), sign * magnitude], mass)
}

/// Random double-precision momentum; no rationality requirement.
pub fn random_float_momentum<R: Rng>(rng: &mut R) -> ([f64; 3], f64) {
    let p = [(); 3].map(|_| rng.gen_range(-3.0..3.0));
    (p, rng.gen_range(0.1..3.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn quadruples_are_pythagorean() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let [x, y, z, w] = random_quadruple(&mut rng, 4);
            assert_eq!(x * x + y * y + z * z, w * w);
        }
    }

    #[test]
    fn momenta_sit_on_rational_shell() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let (p, m) = random_exact_momentum(&mut rng);
            let e2 = p
                .iter()
                .fold(m.clone() * m.clone(), |acc, c| acc + c.clone() * c.clone());
            assert!(e2.checked_sqrt().is_some());
            assert!(m > q(0, 1));
            let (p, m) = random_axial_momentum(&mut rng);
            assert_eq!(p[0], q(0, 1));
            let e2 = m.clone() * m + p[2].clone() * p[2].clone();
            assert!(e2.checked_sqrt().is_some());
        }
    }
}
