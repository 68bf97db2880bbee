//! Reduction of gamma expressions onto the 16-monomial Clifford basis.
//!
//! A basis monomial is identified by the set of generator indices it
//! contains, stored as a 4-bit mask; the monomial itself is the product of
//! those generators in ascending order.
//!
//! [`canonicalize`] works on words: it concatenates generator words and
//! rewrites them with `γ^ν γ^μ → −γ^μ γ^ν` (μ ≠ ν) and `γ^μ γ^μ → g^{μμ}`
//! until the indices are strictly ascending. [`CanonicalForm`]'s own
//! multiplication uses the closed-form sign of a blade product instead, so
//! the two can be checked against each other.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::{One, Zero};

use super::expr::GammaExpr;
use crate::gamma::{metric_scalar, GammaRepresentation};
use crate::matrix::{complex_approx_eq, format_complex, re, Matrix4};
use crate::scalar::Scalar;

/// Ordered subset of `{0, 1, 2, 3}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct IndexSubset(u8);

impl IndexSubset {
    pub const EMPTY: IndexSubset = IndexSubset(0);
    pub const FULL: IndexSubset = IndexSubset(0b1111);

    pub fn from_mask(mask: u8) -> Self {
        assert!(mask < 16, "mask {mask} out of range");
        IndexSubset(mask)
    }

    pub fn from_indices(indices: &[u8]) -> Self {
        IndexSubset(indices.iter().fold(0, |m, &mu| {
            assert!(mu < 4, "generator index {mu} out of range");
            m | (1 << mu)
        }))
    }

    pub fn mask(self) -> u8 {
        self.0
    }

    pub fn contains(self, mu: u8) -> bool {
        self.0 & (1 << mu) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn indices(self) -> Vec<u8> {
        (0..4).filter(|&mu| self.contains(mu)).collect()
    }

    /// All 16 subsets, by size then lexicographically.
    pub fn all() -> Vec<IndexSubset> {
        let mut v: Vec<IndexSubset> = (0..16).map(IndexSubset).collect();
        v.sort_by_key(|s| (s.len(), s.indices()));
        v
    }

    /// `g1*g2*g3` style label; the empty set is `I`.
    pub fn monomial_label(self) -> String {
        if self.is_empty() {
            return "I".into();
        }
        self.indices()
            .iter()
            .map(|mu| format!("g{mu}"))
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl fmt::Display for IndexSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices().iter().map(|mu| mu.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Sign of `Γ_a Γ_b = sign · Γ_{a△b}` for ascending basis monomials.
pub fn blade_product_sign<T: Scalar>(a: u8, b: u8) -> T {
    let mut swaps = 0;
    for j in 0..4 {
        if b & (1 << j) != 0 {
            swaps += (a >> (j + 1)).count_ones();
        }
    }
    let mut sign = if swaps % 2 == 0 { T::one() } else { -T::one() };
    for mu in 0..4 {
        if a & b & (1 << mu) != 0 {
            sign = sign * metric_scalar::<T>(mu);
        }
    }
    sign
}

/// Rewrites a generator word into `coefficient · Γ_S` with ascending `S`.
pub fn reduce_word<T: Scalar>(word: &[u8]) -> (T, IndexSubset) {
    let mut w = word.to_vec();
    let mut sign = T::one();
    let mut k = 0;
    while k + 1 < w.len() {
        if w[k] > w[k + 1] {
            w.swap(k, k + 1);
            sign = -sign;
            k = k.saturating_sub(1);
        } else if w[k] == w[k + 1] {
            sign = sign * metric_scalar::<T>(w[k] as usize);
            w.drain(k..k + 2);
            k = k.saturating_sub(1);
        } else {
            k += 1;
        }
    }
    (sign, IndexSubset::from_indices(&w))
}

/// Coefficients of an element in the Clifford basis, indexed by mask.
#[derive(Clone, Debug, PartialEq)]
pub struct CanonicalForm<T: Scalar> {
    coeffs: [Complex<T>; 16],
}

impl<T: Scalar> CanonicalForm<T> {
    pub fn zero() -> Self {
        CanonicalForm {
            coeffs: std::array::from_fn(|_| Complex::zero()),
        }
    }

    pub fn scalar(c: Complex<T>) -> Self {
        Self::term(IndexSubset::EMPTY, c)
    }

    pub fn identity() -> Self {
        Self::scalar(Complex::one())
    }

    pub fn basis(s: IndexSubset) -> Self {
        Self::term(s, Complex::one())
    }

    pub fn term(s: IndexSubset, c: Complex<T>) -> Self {
        let mut f = Self::zero();
        f.coeffs[s.mask() as usize] = c;
        f
    }

    pub fn coefficient(&self, s: IndexSubset) -> &Complex<T> {
        &self.coeffs[s.mask() as usize]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .all(|(a, b)| complex_approx_eq(a, b, tol))
    }

    pub fn scale(&self, k: &Complex<T>) -> Self {
        CanonicalForm {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] * k),
        }
    }

    /// Nonzero terms, ordered by subset size then lexicographically.
    pub fn terms(&self) -> Vec<(IndexSubset, Complex<T>)> {
        IndexSubset::all()
            .into_iter()
            .filter(|s| !self.coefficient(*s).is_zero())
            .map(|s| (s, self.coefficient(s).clone()))
            .collect()
    }

    /// The unique subset carrying a nonzero coefficient, if there is exactly one.
    pub fn as_monomial(&self) -> Option<(IndexSubset, Complex<T>)> {
        let terms = self.terms();
        (terms.len() == 1).then(|| terms.into_iter().next().unwrap())
    }

    /// Evaluates in a concrete representation.
    pub fn to_matrix(&self, rep: &GammaRepresentation<T>) -> Matrix4<T> {
        let mut acc = Matrix4::zero();
        for (s, c) in self.terms() {
            let idx: Vec<usize> = s.indices().iter().map(|&mu| mu as usize).collect();
            acc = &acc + &rep.product(&idx).scale(&c);
        }
        acc
    }

    /// Expands a matrix in the basis of `rep`: `c_S = tr(Γ_S⁻¹ M) / 4`.
    pub fn from_matrix(m: &Matrix4<T>, rep: &GammaRepresentation<T>) -> Self {
        let quarter = re(T::from_ratio(1, 4));
        let mut f = Self::zero();
        for s in IndexSubset::all() {
            let inv = s
                .indices()
                .iter()
                .rev()
                .fold(Matrix4::identity(), |acc, &mu| {
                    &acc * &rep
                        .gamma(mu as usize)
                        .scale(&re(metric_scalar::<T>(mu as usize)))
                });
            f.coeffs[s.mask() as usize] = (&inv * m).trace() * &quarter;
        }
        f
    }

    /// Conjugates coefficients only (not representation aware).
    pub fn conj_coefficients(&self) -> Self {
        CanonicalForm {
            coeffs: std::array::from_fn(|i| self.coeffs[i].conj()),
        }
    }

    /// Inverse when the element is a single monomial.
    pub fn monomial_inverse(&self) -> Option<Self> {
        let (s, c) = self.as_monomial()?;
        let k = Complex::<T>::one() / (&c * re(blade_product_sign::<T>(s.mask(), s.mask())));
        Some(Self::term(s, k))
    }
}

impl<T: Scalar> Add for &CanonicalForm<T> {
    type Output = CanonicalForm<T>;

    fn add(self, rhs: &CanonicalForm<T>) -> CanonicalForm<T> {
        CanonicalForm {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] + &rhs.coeffs[i]),
        }
    }
}

impl<T: Scalar> Sub for &CanonicalForm<T> {
    type Output = CanonicalForm<T>;

    fn sub(self, rhs: &CanonicalForm<T>) -> CanonicalForm<T> {
        CanonicalForm {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] - &rhs.coeffs[i]),
        }
    }
}

impl<T: Scalar> Neg for &CanonicalForm<T> {
    type Output = CanonicalForm<T>;

    fn neg(self) -> CanonicalForm<T> {
        CanonicalForm {
            coeffs: std::array::from_fn(|i| -self.coeffs[i].clone()),
        }
    }
}

/// Clifford product via the closed-form blade sign.
impl<T: Scalar> Mul for &CanonicalForm<T> {
    type Output = CanonicalForm<T>;

    fn mul(self, rhs: &CanonicalForm<T>) -> CanonicalForm<T> {
        let mut out = CanonicalForm::zero();
        for a in 0..16u8 {
            let ca = &self.coeffs[a as usize];
            if ca.is_zero() {
                continue;
            }
            for b in 0..16u8 {
                let cb = &rhs.coeffs[b as usize];
                if cb.is_zero() {
                    continue;
                }
                let sign = re(blade_product_sign::<T>(a, b));
                let slot = &mut out.coeffs[(a ^ b) as usize];
                *slot = &*slot + ca * cb * sign;
            }
        }
        out
    }
}

/// Product of two canonical forms through word rewriting.
fn rewrite_product<T: Scalar>(a: &CanonicalForm<T>, b: &CanonicalForm<T>) -> CanonicalForm<T> {
    let mut out = CanonicalForm::zero();
    for (sa, ca) in a.terms() {
        for (sb, cb) in b.terms() {
            let mut word = sa.indices();
            word.extend(sb.indices());
            let (sign, s) = reduce_word::<T>(&word);
            let slot = &mut out.coeffs[s.mask() as usize];
            *slot = &*slot + &ca * &cb * re(sign);
        }
    }
    out
}

/// Reduces an expression to its unique canonical form.
pub fn canonicalize<T: Scalar>(e: &GammaExpr<T>) -> CanonicalForm<T> {
    fn go<T: Scalar>(e: &GammaExpr<T>) -> CanonicalForm<T> {
        match e {
            GammaExpr::Generator(mu) => CanonicalForm::basis(IndexSubset::from_indices(&[*mu])),
            GammaExpr::Gamma5 => unreachable!("gamma5 is expanded first"),
            GammaExpr::Identity => CanonicalForm::identity(),
            GammaExpr::Scalar(c) => CanonicalForm::scalar(c.clone()),
            GammaExpr::Product(xs) => xs.iter().fold(CanonicalForm::identity(), |acc, x| {
                rewrite_product(&acc, &go(x))
            }),
            GammaExpr::Sum(xs) => xs
                .iter()
                .fold(CanonicalForm::zero(), |acc, x| &acc + &go(x)),
            GammaExpr::Negate(x) => -&go(x),
        }
    }
    go(&e.expand_gamma5())
}

/// Turns a canonical form back into an expression tree.
pub fn to_expr<T: Scalar>(f: &CanonicalForm<T>) -> GammaExpr<T> {
    GammaExpr::Sum(
        f.terms()
            .into_iter()
            .map(|(s, c)| {
                let mut factors = vec![GammaExpr::Scalar(c)];
                factors.extend(s.indices().into_iter().map(GammaExpr::Generator));
                GammaExpr::Product(factors)
            })
            .collect(),
    )
}

impl<T: Scalar> fmt::Display for CanonicalForm<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (s, c)) in terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({})*{}", format_complex(c), s.monomial_label())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::parse::parse;
    use crate::gamma::{build_representation, gamma5, Representation};
    use crate::matrix::imag_unit;
    use crate::scalar::{q, Rational};

    fn canon(s: &str) -> CanonicalForm<Rational> {
        canonicalize(&parse::<Rational>(s).unwrap())
    }

    fn coeff(f: &CanonicalForm<Rational>, idx: &[u8]) -> Complex<Rational> {
        f.coefficient(IndexSubset::from_indices(idx)).clone()
    }

    #[test]
    fn swapped_pair_picks_up_a_sign() {
        let f = canon("g2*g1");
        assert_eq!(coeff(&f, &[1, 2]), re(q(-1, 1)));
        assert_eq!(f.terms().len(), 1);
    }

    #[test]
    fn squares_reduce_by_the_metric() {
        assert_eq!(canon("g0*g0"), CanonicalForm::identity());
        assert_eq!(canon("g3*g3"), CanonicalForm::scalar(re(q(-1, 1))));
    }

    #[test]
    fn gamma5_anticommutes_with_gamma0() {
        assert!(canon("g5*g0 + g0*g5").is_zero());
        assert_eq!(canon("g5*g5"), CanonicalForm::identity());
    }

    #[test]
    fn gamma5_expands_with_factor_i() {
        let f = canon("g5");
        assert_eq!(f, CanonicalForm::term(IndexSubset::FULL, imag_unit()));
    }

    #[test]
    fn word_rewriting_matches_blade_sign() {
        for a in 0..16u8 {
            for b in 0..16u8 {
                let mut w = IndexSubset::from_mask(a).indices();
                w.extend(IndexSubset::from_mask(b).indices());
                let (sign, s) = reduce_word::<Rational>(&w);
                assert_eq!(s.mask(), a ^ b);
                assert_eq!(sign, blade_product_sign::<Rational>(a, b), "{a} {b}");
            }
        }
    }

    #[test]
    fn evaluation_in_dirac() {
        let d = build_representation::<Rational>(Representation::Dirac);
        let g5 = CanonicalForm::term(IndexSubset::FULL, imag_unit()).to_matrix(&d);
        assert_eq!(g5, gamma5(&d));
        assert_eq!(
            CanonicalForm::<Rational>::identity().to_matrix(&d),
            Matrix4::identity()
        );
        let t = CanonicalForm::basis(IndexSubset::from_indices(&[1, 2, 3])).to_matrix(&d);
        assert_eq!(t, &(d.gamma(1) * d.gamma(2)) * d.gamma(3));
    }

    #[test]
    fn matrix_expansion_inverts_evaluation() {
        for name in Representation::ALL {
            let rep = build_representation::<Rational>(name);
            let f = canon("3/2 - i*g0*g2 + 2*g1*g2*g3 + (1/3+2*i)*g5");
            assert_eq!(
                CanonicalForm::from_matrix(&f.to_matrix(&rep), &rep),
                f,
                "{name}"
            );
        }
    }

    #[test]
    fn round_trip_through_expression() {
        let f = canon("g3*g1*g0 - 2*g2 + i");
        assert_eq!(canonicalize(&to_expr(&f)), f);
    }

    #[test]
    fn monomial_inverse() {
        let f = canon("i*g1*g3");
        let inv = f.monomial_inverse().unwrap();
        assert_eq!(&f * &inv, CanonicalForm::identity());
        assert!(canon("g1+g2").monomial_inverse().is_none());
    }

    #[test]
    fn display_is_stable() {
        assert_eq!(canon("g2*g1 + 1/2").to_string(), "(1/2)*I + (-1)*g1*g2");
        assert_eq!(IndexSubset::from_indices(&[3, 1]).to_string(), "{1,3}");
    }
}
