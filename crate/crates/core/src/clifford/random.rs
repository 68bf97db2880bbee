//! Seeded random expression trees for oracle comparisons.

use num_complex::Complex;
use rand::Rng;

use super::expr::GammaExpr;
use crate::scalar::{Rational, Scalar};

/// Shape limits for generated trees.
#[derive(Clone, Copy, Debug)]
pub struct ExprShape {
    pub max_depth: usize,
    pub max_product_len: usize,
    pub max_sum_len: usize,
    /// Numerators and denominators are drawn from `1..=scalar_bound`.
    pub scalar_bound: i64,
}

impl Default for ExprShape {
    fn default() -> Self {
        ExprShape {
            max_depth: 4,
            max_product_len: 8,
            max_sum_len: 3,
            scalar_bound: 5,
        }
    }
}

fn small_rational<R: Rng>(rng: &mut R, bound: i64) -> Rational {
    let n = rng.gen_range(-bound..=bound);
    let d = rng.gen_range(1..=bound);
    Rational::from_ratio(n, d)
}

fn leaf<R: Rng>(rng: &mut R, shape: &ExprShape) -> GammaExpr<Rational> {
    match rng.gen_range(0..10) {
        0..=5 => GammaExpr::Generator(rng.gen_range(0..4)),
        6 => GammaExpr::Gamma5,
        7 => GammaExpr::Identity,
        _ => GammaExpr::Scalar(Complex::new(
            small_rational(rng, shape.scalar_bound),
            small_rational(rng, shape.scalar_bound),
        )),
    }
}

/// A random tree of depth at most `shape.max_depth`.
pub fn random_expr<R: Rng>(rng: &mut R, shape: &ExprShape) -> GammaExpr<Rational> {
    fn go<R: Rng>(rng: &mut R, shape: &ExprShape, depth: usize) -> GammaExpr<Rational> {
        if depth == 0 || rng.gen_bool(0.3) {
            return leaf(rng, shape);
        }
        match rng.gen_range(0..5) {
            0..=2 => {
                let n = rng.gen_range(1..=shape.max_product_len);
                GammaExpr::Product((0..n).map(|_| go(rng, shape, depth - 1)).collect())
            }
            3 => {
                let n = rng.gen_range(1..=shape.max_sum_len);
                GammaExpr::Sum((0..n).map(|_| go(rng, shape, depth - 1)).collect())
            }
            _ => GammaExpr::Negate(Box::new(go(rng, shape, depth - 1))),
        }
    }
    go(rng, shape, shape.max_depth)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn respects_shape_and_seed() {
        let shape = ExprShape::default();
        let mut a = ChaCha8Rng::seed_from_u64(3);
        let mut b = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let e = random_expr(&mut a, &shape);
            assert!(e.depth() <= shape.max_depth);
            assert_eq!(e, random_expr(&mut b, &shape));
        }
    }
}
