//! Exact Dirac-algebra toolkit: gamma representations, a symbolic Clifford
//! canonicalizer, free plane-wave solutions, discrete symmetry operators and
//! Lorentz-group bookkeeping.
//!
//! Everything numeric is generic over [`Scalar`]; the aliases below pick the
//! exact rational or double-precision instantiation.

pub mod clifford;
pub mod error;
pub mod gamma;
pub mod lorentz;
pub mod matrix;
pub mod momenta;
pub mod planewave;
pub mod report;
pub mod residual;
pub mod scalar;
pub mod symmetry;

pub use error::{Error, ParseError, Result};
pub use scalar::{Rational, Scalar, Sign};

pub type ComplexRational = num_complex::Complex<Rational>;
pub type MatrixQ = matrix::Matrix4<Rational>;
pub type MatrixF = matrix::Matrix4<f64>;
pub type SpinorQ = matrix::Spinor<Rational>;
pub type CanonicalFormQ = clifford::CanonicalForm<Rational>;
pub type GammaExprQ = clifford::GammaExpr<Rational>;
pub type StateQ = planewave::PlaneWaveState<Rational>;
pub type StateF = planewave::PlaneWaveState<f64>;
pub type OperatorQ = symmetry::DiscreteOperator<Rational>;
