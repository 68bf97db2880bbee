//! Complex scalars, bispinors and 4×4 complex matrices over a [`Scalar`] field.

use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Value};

use crate::scalar::Scalar;

pub fn c<T: Scalar>(re: T, im: T) -> Complex<T> {
    Complex::new(re, im)
}

pub fn re<T: Scalar>(re: T) -> Complex<T> {
    Complex::new(re, T::zero())
}

pub fn imag_unit<T: Scalar>() -> Complex<T> {
    Complex::new(T::zero(), T::one())
}

pub fn complex_approx_eq<T: Scalar>(a: &Complex<T>, b: &Complex<T>, tol: f64) -> bool {
    a.re.approx_eq(&b.re, tol) && a.im.approx_eq(&b.im, tol)
}

pub fn complex_is_negligible<T: Scalar>(a: &Complex<T>, tol: f64) -> bool {
    a.re.is_negligible(tol) && a.im.is_negligible(tol)
}

/// Modulus as a float, for reporting.
pub fn modulus_f64<T: Scalar>(a: &Complex<T>) -> f64 {
    a.re.to_f64().hypot(a.im.to_f64())
}

/// `|a|² == 1`, exactly or within `tol`.
pub fn is_unit_modulus<T: Scalar>(a: &Complex<T>, tol: f64) -> bool {
    a.norm_sqr().approx_eq(&T::one(), tol)
}

pub fn complex_to_json<T: Scalar>(a: &Complex<T>) -> Value {
    json!({ "re": a.re.to_json(), "im": a.im.to_json() })
}

pub fn complex_from_json<T: Scalar>(v: &Value) -> Option<Complex<T>> {
    Some(Complex::new(
        T::from_json(v.get("re")?)?,
        T::from_json(v.get("im")?)?,
    ))
}

/// Human-readable complex number: `1/3`, `-i`, `1/2+3/4i`.
pub fn format_complex<T: Scalar>(a: &Complex<T>) -> String {
    let im_part = |im: &T| -> String {
        if im.is_one() {
            "i".to_owned()
        } else if (-im.clone()).is_one() {
            "-i".to_owned()
        } else {
            format!("{im}i")
        }
    };
    match (a.re.is_zero(), a.im.is_zero()) {
        (true, true) => "0".to_owned(),
        (false, true) => a.re.to_string(),
        (true, false) => im_part(&a.im),
        (false, false) => {
            let im = im_part(&a.im);
            if im.starts_with('-') {
                format!("{}{}", a.re, im)
            } else {
                format!("{}+{}", a.re, im)
            }
        }
    }
}

/// Four complex amplitudes acted on by gamma matrices.
#[derive(Clone, Debug, PartialEq)]
pub struct Spinor<T: Scalar>(pub [Complex<T>; 4]);

impl<T: Scalar> Spinor<T> {
    pub fn zero() -> Self {
        Spinor(std::array::from_fn(|_| Complex::zero()))
    }

    pub fn from_real(v: [T; 4]) -> Self {
        Spinor(v.map(re))
    }

    pub fn components(&self) -> &[Complex<T>; 4] {
        &self.0
    }

    pub fn conj(&self) -> Self {
        Spinor(std::array::from_fn(|i| self.0[i].conj()))
    }

    pub fn scale(&self, k: &Complex<T>) -> Self {
        Spinor(std::array::from_fn(|i| &self.0[i] * k))
    }

    /// `⟨self|other⟩ = Σ conj(self_i) other_i`.
    pub fn inner(&self, other: &Self) -> Complex<T> {
        self.0
            .iter()
            .zip(&other.0)
            .fold(Complex::zero(), |acc, (a, b)| acc + a.conj() * b)
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.0.iter().all(|a| complex_is_negligible(a, tol))
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.0
            .iter()
            .zip(&other.0)
            .all(|(a, b)| complex_approx_eq(a, b, tol))
    }

    /// Largest component modulus.
    pub fn max_abs(&self) -> f64 {
        self.0.iter().map(modulus_f64).fold(0.0, f64::max)
    }

    /// The scalar `k` with `other = k · self`, if one exists.
    pub fn ratio_to(&self, other: &Self, tol: f64) -> Option<Complex<T>> {
        let pivot = (0..4)
            .filter(|&i| !complex_is_negligible(&self.0[i], tol))
            .max_by(|&a, &b| modulus_f64(&self.0[a]).total_cmp(&modulus_f64(&self.0[b])))?;
        let k = &other.0[pivot] / &self.0[pivot];
        self.scale(&k).approx_eq(other, tol).then_some(k)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.0.iter().map(complex_to_json).collect())
    }
}

impl<T: Scalar> Add for &Spinor<T> {
    type Output = Spinor<T>;

    fn add(self, rhs: &Spinor<T>) -> Spinor<T> {
        Spinor(std::array::from_fn(|i| &self.0[i] + &rhs.0[i]))
    }
}

impl<T: Scalar> Sub for &Spinor<T> {
    type Output = Spinor<T>;

    fn sub(self, rhs: &Spinor<T>) -> Spinor<T> {
        Spinor(std::array::from_fn(|i| &self.0[i] - &rhs.0[i]))
    }
}

impl<T: Scalar> Index<usize> for Spinor<T> {
    type Output = Complex<T>;

    fn index(&self, i: usize) -> &Complex<T> {
        &self.0[i]
    }
}

impl<T: Scalar> fmt::Display for Spinor<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(format_complex).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// A 2×2 complex block.
pub type Block2<T> = [[Complex<T>; 2]; 2];

/// Pauli matrix σ^k for k = 1, 2, 3.
pub fn pauli<T: Scalar>(k: usize) -> Block2<T> {
    let z = Complex::zero;
    let one = || re(T::one());
    let i = imag_unit::<T>;
    match k {
        1 => [[z(), one()], [one(), z()]],
        2 => [[z(), -i()], [i(), z()]],
        3 => [[one(), z()], [z(), -one()]],
        _ => panic!("Pauli index must be 1, 2 or 3, got {k}"),
    }
}

pub fn block_identity<T: Scalar>() -> Block2<T> {
    [
        [re(T::one()), Complex::zero()],
        [Complex::zero(), re(T::one())],
    ]
}

pub fn block_zero<T: Scalar>() -> Block2<T> {
    std::array::from_fn(|_| std::array::from_fn(|_| Complex::zero()))
}

pub fn block_scale<T: Scalar>(b: &Block2<T>, k: &Complex<T>) -> Block2<T> {
    std::array::from_fn(|r| std::array::from_fn(|c| &b[r][c] * k))
}

/// Dense 4×4 complex matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix4<T: Scalar> {
    entries: [[Complex<T>; 4]; 4],
}

impl<T: Scalar> Matrix4<T> {
    pub fn new(entries: [[Complex<T>; 4]; 4]) -> Self {
        Matrix4 { entries }
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> Complex<T>) -> Self {
        Matrix4 {
            entries: std::array::from_fn(|r| std::array::from_fn(|c| f(r, c))),
        }
    }

    pub fn from_real(rows: [[i64; 4]; 4]) -> Self {
        Self::from_fn(|r, c| re(T::from_ratio(rows[r][c], 1)))
    }

    /// Assembles `[[a, b], [c, d]]` from 2×2 blocks.
    pub fn from_blocks(a: &Block2<T>, b: &Block2<T>, c: &Block2<T>, d: &Block2<T>) -> Self {
        Self::from_fn(|r, col| {
            let block = match (r < 2, col < 2) {
                (true, true) => a,
                (true, false) => b,
                (false, true) => c,
                (false, false) => d,
            };
            block[r % 2][col % 2].clone()
        })
    }

    pub fn zero() -> Self {
        Self::from_fn(|_, _| Complex::zero())
    }

    pub fn identity() -> Self {
        Self::from_fn(|r, c| {
            if r == c {
                Complex::one()
            } else {
                Complex::zero()
            }
        })
    }

    pub fn diag(d: [Complex<T>; 4]) -> Self {
        Self::from_fn(|r, c| {
            if r == c {
                d[r].clone()
            } else {
                Complex::zero()
            }
        })
    }

    pub fn entry(&self, r: usize, c: usize) -> &Complex<T> {
        &self.entries[r][c]
    }

    pub fn entries(&self) -> &[[Complex<T>; 4]; 4] {
        &self.entries
    }

    pub fn scale(&self, k: &Complex<T>) -> Self {
        Self::from_fn(|r, c| &self.entries[r][c] * k)
    }

    pub fn conj(&self) -> Self {
        Self::from_fn(|r, c| self.entries[r][c].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|r, c| self.entries[c][r].clone())
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(|r, c| self.entries[c][r].conj())
    }

    pub fn trace(&self) -> Complex<T> {
        (0..4).fold(Complex::zero(), |acc, i| acc + &self.entries[i][i])
    }

    pub fn apply(&self, v: &Spinor<T>) -> Spinor<T> {
        Spinor(std::array::from_fn(|r| {
            (0..4).fold(Complex::zero(), |acc, c| {
                acc + &self.entries[r][c] * &v.0[c]
            })
        }))
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.entries
            .iter()
            .flatten()
            .all(|a| complex_is_negligible(a, tol))
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.entries
            .iter()
            .flatten()
            .zip(other.entries.iter().flatten())
            .all(|(a, b)| complex_approx_eq(a, b, tol))
    }

    /// Every entry has zero real part.
    pub fn is_purely_imaginary(&self) -> bool {
        self.entries.iter().flatten().all(|a| a.re.is_zero())
    }

    /// `m · m† = I`, exactly for rational scalars.
    pub fn is_unitary(&self, tol: f64) -> bool {
        (self * &self.adjoint()).approx_eq(&Self::identity(), tol)
    }

    /// Index of the pivot row for column `col`, searching from `start`.
    fn pivot_row(rows: &[[Complex<T>; 4]; 4], col: usize, start: usize) -> Option<usize> {
        (start..4)
            .filter(|&r| !rows[r][col].is_zero())
            .max_by(|&a, &b| modulus_f64(&rows[a][col]).total_cmp(&modulus_f64(&rows[b][col])))
    }

    /// Determinant by Gaussian elimination (exact over rationals).
    pub fn determinant(&self) -> Complex<T> {
        let mut rows = self.entries.clone();
        let mut det = Complex::<T>::one();
        for col in 0..4 {
            let Some(p) = Self::pivot_row(&rows, col, col) else {
                return Complex::zero();
            };
            if p != col {
                rows.swap(p, col);
                det = -det;
            }
            let pivot = rows[col][col].clone();
            det = det * &pivot;
            let pivot_row = rows[col].clone();
            for row in rows.iter_mut().skip(col + 1) {
                let factor = &row[col] / &pivot;
                if factor.is_zero() {
                    continue;
                }
                for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                    *x = &*x - &factor * p;
                }
            }
        }
        det
    }

    /// Inverse by Gauss–Jordan elimination; `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        let mut a = self.entries.clone();
        let mut inv = Self::identity().entries;
        for col in 0..4 {
            let p = Self::pivot_row(&a, col, col)?;
            a.swap(p, col);
            inv.swap(p, col);
            let pivot_inv = Complex::<T>::one() / &a[col][col];
            for k in 0..4 {
                a[col][k] = &a[col][k] * &pivot_inv;
                inv[col][k] = &inv[col][k] * &pivot_inv;
            }
            for r in 0..4 {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let factor = a[r][col].clone();
                for k in 0..4 {
                    let da = &factor * &a[col][k];
                    let di = &factor * &inv[col][k];
                    a[r][k] = &a[r][k] - da;
                    inv[r][k] = &inv[r][k] - di;
                }
            }
        }
        Some(Matrix4 { entries: inv })
    }

    /// Converts between scalar fields through exact rationals where possible.
    pub fn map_scalar<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix4<U> {
        Matrix4::from_fn(|r, col| {
            Complex::new(f(&self.entries[r][col].re), f(&self.entries[r][col].im))
        })
    }

    /// Row-major list of 16 `{re, im}` objects.
    pub fn to_json(&self) -> Value {
        Value::Array(self.entries.iter().flatten().map(complex_to_json).collect())
    }

    pub fn from_json(v: &Value) -> Option<Self> {
        let items = v.as_array()?;
        if items.len() != 16 {
            return None;
        }
        let parsed: Option<Vec<Complex<T>>> = items.iter().map(complex_from_json).collect();
        let parsed = parsed?;
        Some(Self::from_fn(|r, col| parsed[4 * r + col].clone()))
    }
}

impl<T: Scalar> Serialize for Matrix4<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de, T: Scalar> Deserialize<'de> for Matrix4<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        Matrix4::from_json(&v).ok_or_else(|| D::Error::custom("expected 16 {re, im} objects"))
    }
}

impl<T: Scalar> Mul for &Matrix4<T> {
    type Output = Matrix4<T>;

    fn mul(self, rhs: &Matrix4<T>) -> Matrix4<T> {
        // skip zero entries
        Matrix4::from_fn(|r, c| {
            (0..4)
                .filter(|&k| !self.entries[r][k].is_zero() && !rhs.entries[k][c].is_zero())
                .fold(Complex::zero(), |acc, k| {
                    acc + &self.entries[r][k] * &rhs.entries[k][c]
                })
        })
    }
}

impl<T: Scalar> Mul for Matrix4<T> {
    type Output = Matrix4<T>;

    fn mul(self, rhs: Matrix4<T>) -> Matrix4<T> {
        &self * &rhs
    }
}

impl<T: Scalar> Add for &Matrix4<T> {
    type Output = Matrix4<T>;

    fn add(self, rhs: &Matrix4<T>) -> Matrix4<T> {
        Matrix4::from_fn(|r, c| &self.entries[r][c] + &rhs.entries[r][c])
    }
}

impl<T: Scalar> Sub for &Matrix4<T> {
    type Output = Matrix4<T>;

    fn sub(self, rhs: &Matrix4<T>) -> Matrix4<T> {
        Matrix4::from_fn(|r, c| &self.entries[r][c] - &rhs.entries[r][c])
    }
}

impl<T: Scalar> Neg for &Matrix4<T> {
    type Output = Matrix4<T>;

    fn neg(self) -> Matrix4<T> {
        Matrix4::from_fn(|r, c| -self.entries[r][c].clone())
    }
}

impl<T: Scalar> fmt::Display for Matrix4<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(format_complex).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// `ab − ba`.
pub fn commutator<T: Scalar>(a: &Matrix4<T>, b: &Matrix4<T>) -> Matrix4<T> {
    &(a * b) - &(b * a)
}

/// `ab + ba`.
pub fn anticommutator<T: Scalar>(a: &Matrix4<T>, b: &Matrix4<T>) -> Matrix4<T> {
    &(a * b) + &(b * a)
}
