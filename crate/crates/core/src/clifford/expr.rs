use std::fmt;

use num_complex::Complex;

use crate::gamma::GammaRepresentation;
use crate::matrix::{imag_unit, Matrix4};
use crate::scalar::Scalar;

/// Expression over the gamma generators.
#[derive(Clone, Debug, PartialEq)]
pub enum GammaExpr<T: Scalar> {
    /// `γ^μ`, μ ∈ {0, 1, 2, 3}.
    Generator(u8),
    /// Alias for `i γ⁰γ¹γ²γ³`, expanded before canonicalization.
    Gamma5,
    Identity,
    Scalar(Complex<T>),
    Product(Vec<GammaExpr<T>>),
    Sum(Vec<GammaExpr<T>>),
    Negate(Box<GammaExpr<T>>),
}

impl<T: Scalar> GammaExpr<T> {
    pub fn gen(mu: u8) -> Self {
        assert!(mu < 4, "generator index {mu} out of range");
        GammaExpr::Generator(mu)
    }

    pub fn scalar(c: Complex<T>) -> Self {
        GammaExpr::Scalar(c)
    }

    pub fn i() -> Self {
        GammaExpr::Scalar(imag_unit())
    }

    /// Product of generators in the given order.
    pub fn word(indices: &[u8]) -> Self {
        GammaExpr::Product(indices.iter().map(|&mu| Self::gen(mu)).collect())
    }

    pub fn times(self, rhs: Self) -> Self {
        GammaExpr::Product(vec![self, rhs])
    }

    pub fn plus(self, rhs: Self) -> Self {
        GammaExpr::Sum(vec![self, rhs])
    }

    pub fn minus(self, rhs: Self) -> Self {
        GammaExpr::Sum(vec![self, GammaExpr::Negate(Box::new(rhs))])
    }

    /// Replaces every `Gamma5` node by `i γ⁰γ¹γ²γ³`.
    pub fn expand_gamma5(&self) -> Self {
        match self {
            GammaExpr::Gamma5 => GammaExpr::Product(vec![
                Self::i(),
                Self::gen(0),
                Self::gen(1),
                Self::gen(2),
                Self::gen(3),
            ]),
            GammaExpr::Product(xs) => {
                GammaExpr::Product(xs.iter().map(Self::expand_gamma5).collect())
            }
            GammaExpr::Sum(xs) => GammaExpr::Sum(xs.iter().map(Self::expand_gamma5).collect()),
            GammaExpr::Negate(x) => GammaExpr::Negate(Box::new(x.expand_gamma5())),
            leaf => leaf.clone(),
        }
    }

    /// Direct matrix evaluation in `rep`, with no algebraic rewriting.
    pub fn evaluate(&self, rep: &GammaRepresentation<T>) -> Matrix4<T> {
        match self {
            GammaExpr::Generator(mu) => rep.gamma(*mu as usize).clone(),
            GammaExpr::Gamma5 => rep.product(&[0, 1, 2, 3]).scale(&imag_unit()),
            GammaExpr::Identity => Matrix4::identity(),
            GammaExpr::Scalar(c) => Matrix4::identity().scale(c),
            GammaExpr::Product(xs) => xs
                .iter()
                .fold(Matrix4::identity(), |acc, x| &acc * &x.evaluate(rep)),
            GammaExpr::Sum(xs) => xs
                .iter()
                .fold(Matrix4::zero(), |acc, x| &acc + &x.evaluate(rep)),
            GammaExpr::Negate(x) => -&x.evaluate(rep),
        }
    }

    /// Nesting depth; leaves have depth 0.
    pub fn depth(&self) -> usize {
        match self {
            GammaExpr::Product(xs) | GammaExpr::Sum(xs) => {
                1 + xs.iter().map(Self::depth).max().unwrap_or(0)
            }
            GammaExpr::Negate(x) => 1 + x.depth(),
            _ => 0,
        }
    }
}

fn fmt_real<T: Scalar>(f: &mut fmt::Formatter<'_>, x: &T) -> fmt::Result {
    if x.is_negative() {
        write!(f, "-{}", -x.clone())
    } else {
        write!(f, "{x}")
    }
}

/// Prints in the input grammar, so `parse(e.to_string())` evaluates to `e`.
impl<T: Scalar> fmt::Display for GammaExpr<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GammaExpr::Generator(mu) => write!(f, "g{mu}"),
            GammaExpr::Gamma5 => f.write_str("g5"),
            GammaExpr::Identity => f.write_str("I"),
            GammaExpr::Scalar(c) => {
                if c.im.is_zero() {
                    fmt_real(f, &c.re)
                } else if c.re.is_zero() && c.im.is_one() {
                    f.write_str("i")
                } else {
                    f.write_str("(")?;
                    fmt_real(f, &c.re)?;
                    f.write_str("+")?;
                    fmt_real(f, &c.im)?;
                    f.write_str("*i)")
                }
            }
            GammaExpr::Product(xs) => {
                if xs.is_empty() {
                    return f.write_str("I");
                }
                f.write_str("(")?;
                for (k, x) in xs.iter().enumerate() {
                    if k > 0 {
                        f.write_str("*")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str(")")
            }
            GammaExpr::Sum(xs) => {
                if xs.is_empty() {
                    return f.write_str("0");
                }
                f.write_str("(")?;
                for (k, x) in xs.iter().enumerate() {
                    if k > 0 {
                        f.write_str("+")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str(")")
            }
            GammaExpr::Negate(x) => write!(f, "-({x})"),
        }
    }
}
