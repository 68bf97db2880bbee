//! Free plane-wave solutions of the Dirac equation.
//!
//! A state is `√N · e^{s·i(p·x − E t)} · u` with `N = (E + εm) / 2E`, an
//! exponent sign `s` and an unnormalized bispinor `u`. Six families are
//! supported, all in the Dirac representation:
//!
//! | family | `s`  | energy | `u` (with `d = E ± m`)                          |
//! |--------|------|--------|-------------------------------------------------|
//! | ψ₁⁺    | `+1` | `+E_p` | `(1, 0, p₃/d, (p₁+ip₂)/d)`,  `d = E+m`         |
//! | ψ₂⁺    | `+1` | `+E_p` | `(0, 1, (p₁−ip₂)/d, −p₃/d)`, `d = E+m`         |
//! | ψ₁⁻    | `+1` | `−E_p` | `(p₃/d, (p₁+ip₂)/d, 1, 0)`,  `d = E−m`         |
//! | ψ₂⁻    | `+1` | `−E_p` | `((p₁−ip₂)/d, −p₃/d, 0, 1)`, `d = E−m`         |
//! | χ₁⁺    | `−1` | `+E_p` | `(p₃/d, (p₁+ip₂)/d, 1, 0)`,  `d = E+m`         |
//! | χ₂⁺    | `−1` | `+E_p` | `((p₁−ip₂)/d, −p₃/d, 0, 1)`, `d = E+m`         |
//!
//! At rest the ψ⁻ denominator is `E − m = −2m`, so no limit is needed there
//! and the norm factor is exactly 1.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::matrix::{c, re, Matrix4, Spinor};
use crate::scalar::{Scalar, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "psi1+")]
    PsiPlus1,
    #[serde(rename = "psi2+")]
    PsiPlus2,
    #[serde(rename = "psi1-")]
    PsiMinus1,
    #[serde(rename = "psi2-")]
    PsiMinus2,
    #[serde(rename = "chi1+")]
    ChiPlus1,
    #[serde(rename = "chi2+")]
    ChiPlus2,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::PsiPlus1,
        Family::PsiPlus2,
        Family::PsiMinus1,
        Family::PsiMinus2,
        Family::ChiPlus1,
        Family::ChiPlus2,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Family::PsiPlus1 => "psi1+",
            Family::PsiPlus2 => "psi2+",
            Family::PsiMinus1 => "psi1-",
            Family::PsiMinus2 => "psi2-",
            Family::ChiPlus1 => "chi1+",
            Family::ChiPlus2 => "chi2+",
        }
    }

    pub fn is_chi(self) -> bool {
        matches!(self, Family::ChiPlus1 | Family::ChiPlus2)
    }

    /// Spin sector index, 1 or 2.
    pub fn sector(self) -> u8 {
        match self {
            Family::PsiPlus1 | Family::PsiMinus1 | Family::ChiPlus1 => 1,
            _ => 2,
        }
    }

    pub fn exponent_sign(self) -> Sign {
        if self.is_chi() {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    /// Sign of the recorded energy at construction.
    pub fn energy_sign(self) -> Sign {
        match self {
            Family::PsiMinus1 | Family::PsiMinus2 => Sign::Minus,
            _ => Sign::Plus,
        }
    }

    /// `ε` in the norm factor `(E + εm) / 2E`.
    pub fn mass_epsilon(self) -> Sign {
        self.energy_sign()
    }

    /// Families sharing an exponent sign and recorded energy sign.
    pub fn in_class(exponent: Sign, energy: Sign) -> &'static [Family] {
        match (exponent, energy) {
            (Sign::Plus, Sign::Plus) => &[Family::PsiPlus1, Family::PsiPlus2],
            (Sign::Plus, Sign::Minus) => &[Family::PsiMinus1, Family::PsiMinus2],
            (Sign::Minus, Sign::Plus) => &[Family::ChiPlus1, Family::ChiPlus2],
            (Sign::Minus, Sign::Minus) => &[],
        }
    }

    /// Interpretation attached at construction: χ defaults to the
    /// Feynman–Stueckelberg reading (positive energy and mass).
    pub fn default_interpretation(self) -> Interpretation {
        Interpretation {
            energy_sign: self.energy_sign(),
            mass_sign: Sign::Plus,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Family::ALL
            .into_iter()
            .find(|f| f.label() == s.to_ascii_lowercase())
            .ok_or_else(|| format!("unknown family `{s}` (expected one of psi1+, psi2+, psi1-, psi2-, chi1+, chi2+)"))
    }
}

/// Energy and mass signs a reading attributes to a state.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Interpretation {
    pub energy_sign: Sign,
    pub mass_sign: Sign,
}

impl Interpretation {
    pub fn signs_agree(self) -> bool {
        self.energy_sign == self.mass_sign
    }
}

/// Momentum record `(E, p, m)` of a plane wave.
#[derive(Clone, Debug, PartialEq)]
pub struct OnShellMomentum<T: Scalar> {
    p: [T; 3],
    mass: T,
    energy: T,
}

impl<T: Scalar> OnShellMomentum<T> {
    /// Solves `E² = p² + m²` for the requested energy sign.
    pub fn new(p: [T; 3], mass: T, energy_sign: Sign) -> Result<Self> {
        if mass.is_zero() {
            return Err(Error::ZeroMass);
        }
        let e2 = sum_of_squares(&p) + mass.clone() * mass.clone();
        let e = e2
            .checked_sqrt()
            .ok_or_else(|| Error::OffShellUnrepresentable(e2.to_string()))?;
        Ok(OnShellMomentum {
            p,
            mass,
            energy: energy_sign.apply(e),
        })
    }

    /// A record with an explicit energy; the mass shell is not enforced.
    pub fn fabricated(p: [T; 3], mass: T, energy: T) -> Self {
        OnShellMomentum { p, mass, energy }
    }

    pub fn p(&self) -> &[T; 3] {
        &self.p
    }

    pub fn mass(&self) -> &T {
        &self.mass
    }

    pub fn energy(&self) -> &T {
        &self.energy
    }

    pub fn energy_sign(&self) -> Option<Sign> {
        Sign::of(&self.energy)
    }

    pub fn is_exact(&self) -> bool {
        T::EXACT
    }

    pub fn p_squared(&self) -> T {
        sum_of_squares(&self.p)
    }

    /// `|E² − p² − m²| ≤ tol · (p² + m²)`; exact for rationals.
    pub fn is_on_shell(&self, tol: f64) -> bool {
        let scale = self.p_squared() + self.mass.clone() * self.mass.clone();
        let lhs = self.energy.clone() * self.energy.clone();
        let gap = (lhs - scale.clone()).to_f64().abs();
        if T::EXACT {
            gap == 0.0 && self.energy.clone() * self.energy.clone() == scale
        } else {
            gap <= tol * scale.to_f64()
        }
    }

    /// Every component of the record negated: `E → −E`, `p → −p`, `m → −m`.
    pub fn negated(&self) -> Self {
        OnShellMomentum {
            p: self.p.clone().map(|x| -x),
            mass: -self.mass.clone(),
            energy: -self.energy.clone(),
        }
    }

    pub(crate) fn with(&self, sign_e: Sign, p_sign: Sign) -> Self {
        OnShellMomentum {
            p: self.p.clone().map(|x| p_sign.apply(x)),
            mass: self.mass.clone(),
            energy: sign_e.apply(self.energy.clone()),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "p": self.p.iter().map(Scalar::to_json).collect::<Vec<_>>(),
            "m": self.mass.to_json(),
            "E": energy_json(&self.energy),
        })
    }
}

fn energy_json<T: Scalar>(e: &T) -> Value {
    if T::EXACT {
        json!({ "exact": e.to_json() })
    } else {
        json!({ "float": e.to_json() })
    }
}

fn sum_of_squares<T: Scalar>(p: &[T; 3]) -> T {
    p.iter()
        .fold(T::zero(), |acc, x| acc + x.clone() * x.clone())
}

/// Bispinor and norm factor squared for a family at a given record.
pub fn family_amplitudes<T: Scalar>(
    family: Family,
    k: &OnShellMomentum<T>,
) -> Result<(Spinor<T>, T)> {
    let [p1, p2, p3] = k.p.clone();
    let e = k.energy.clone();
    let m = k.mass.clone();
    let eps = family.mass_epsilon();
    let denom = e.clone() + eps.apply(m.clone());
    if denom.is_zero() || e.is_zero() {
        let sign = if eps == Sign::Plus { '+' } else { '-' };
        return Err(Error::DegenerateSpinor { family, sign });
    }
    let norm = denom.clone() / (e.clone() + e);
    let d = re(denom);
    let zero = Complex::zero;
    let one = || Complex::<T>::one();
    let p_plus = c(p1.clone(), p2.clone()) / &d;
    let p_minus = c(p1, -p2) / &d;
    let p3d = re(p3) / &d;
    let u = match family {
        Family::PsiPlus1 => [one(), zero(), p3d, p_plus],
        Family::PsiPlus2 => [zero(), one(), p_minus, -p3d],
        Family::PsiMinus1 | Family::ChiPlus1 => [p3d, p_plus, one(), zero()],
        Family::PsiMinus2 | Family::ChiPlus2 => [p_minus, -p3d, zero(), one()],
    };
    Ok((Spinor(u), norm))
}

/// Third spin component eigenvalue.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SpinLabel {
    #[serde(rename = "+1/2")]
    Up,
    #[serde(rename = "-1/2")]
    Down,
}

impl SpinLabel {
    pub fn s3(self) -> f64 {
        match self {
            SpinLabel::Up => 0.5,
            SpinLabel::Down => -0.5,
        }
    }
}

/// `S₃ = ½ diag(1, −1, 1, −1)`.
pub fn spin_s3<T: Scalar>() -> Matrix4<T> {
    let h = T::from_ratio(1, 2);
    Matrix4::diag([re(h.clone()), re(-h.clone()), re(h.clone()), re(-h)])
}

#[derive(Clone, Debug, PartialEq)]
pub struct PlaneWaveState<T: Scalar> {
    family: Family,
    momentum: OnShellMomentum<T>,
    bispinor: Spinor<T>,
    norm_factor_squared: T,
    exponent_sign: Sign,
    interpretation: Interpretation,
}

impl<T: Scalar> PlaneWaveState<T> {
    /// Assembles a state without any validation (for probing classifiers).
    pub fn fabricated(
        family: Family,
        momentum: OnShellMomentum<T>,
        bispinor: Spinor<T>,
        norm_factor_squared: T,
        exponent_sign: Sign,
        interpretation: Interpretation,
    ) -> Self {
        PlaneWaveState {
            family,
            momentum,
            bispinor,
            norm_factor_squared,
            exponent_sign,
            interpretation,
        }
    }

    /// The family's canonical state at an existing momentum record.
    pub fn from_record(family: Family, momentum: OnShellMomentum<T>) -> Result<Self> {
        let (bispinor, norm_factor_squared) = family_amplitudes(family, &momentum)?;
        Ok(PlaneWaveState {
            family,
            momentum,
            bispinor,
            norm_factor_squared,
            exponent_sign: family.exponent_sign(),
            interpretation: family.default_interpretation(),
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn momentum(&self) -> &OnShellMomentum<T> {
        &self.momentum
    }

    pub fn bispinor(&self) -> &Spinor<T> {
        &self.bispinor
    }

    pub fn norm_factor_squared(&self) -> &T {
        &self.norm_factor_squared
    }

    pub fn exponent_sign(&self) -> Sign {
        self.exponent_sign
    }

    pub fn interpretation(&self) -> Interpretation {
        self.interpretation
    }

    pub(crate) fn with_parts(
        mut self,
        bispinor: Spinor<T>,
        interpretation: Interpretation,
    ) -> Self {
        self.bispinor = bispinor;
        self.interpretation = interpretation;
        self
    }

    pub fn with_interpretation(mut self, interpretation: Interpretation) -> Self {
        self.interpretation = interpretation;
        self
    }

    /// Multiplies the bispinor by a scalar, leaving everything else alone.
    pub fn rescaled(mut self, k: &Complex<T>) -> Self {
        self.bispinor = self.bispinor.scale(k);
        self
    }

    /// Unit phase `k` with `other = k · self` as functions of `(t, x)`.
    ///
    /// Compares effective eigenvalues `(s·E, s·p)`, so a ψ⁻ wave at `p` and
    /// a χ⁺ wave at `−p` count as the same wave.
    pub fn same_wave_as(&self, other: &Self, tol: f64) -> Option<Complex<T>> {
        let eff = |st: &Self| {
            let s = st.exponent_sign;
            let k = &st.momentum;
            (s.apply(k.energy.clone()), k.p.clone().map(|x| s.apply(x)))
        };
        let close = |a: &T, b: &T| {
            if T::EXACT {
                a == b
            } else {
                a.approx_eq(b, tol)
            }
        };
        let ((e1, p1), (e2, p2)) = (eff(self), eff(other));
        let same_record = close(&e1, &e2)
            && p1.iter().zip(&p2).all(|(a, b)| close(a, b))
            && close(&self.momentum.mass, &other.momentum.mass)
            && close(&self.norm_factor_squared, &other.norm_factor_squared);
        if !same_record {
            return None;
        }
        self.bispinor
            .ratio_to(&other.bispinor, tol)
            .filter(|k| crate::matrix::is_unit_modulus(k, tol))
    }

    /// `√N · e^{s·i(p·x − E t)} · u` in double precision.
    pub fn evaluate(&self, t: f64, x: [f64; 3]) -> [Complex<f64>; 4] {
        let p = self.momentum.p.clone().map(|v| v.to_f64());
        let phase = p[0] * x[0] + p[1] * x[1] + p[2] * x[2] - self.momentum.energy.to_f64() * t;
        let s = f64::from(self.exponent_sign.as_i8());
        let wave = Complex::from_polar(self.norm_factor_squared.to_f64().sqrt(), s * phase);
        self.bispinor
            .0
            .clone()
            .map(|a| wave * Complex::new(a.re.to_f64(), a.im.to_f64()))
    }

    /// S₃ eigenvalue of the bispinor, when it is an eigenvector.
    ///
    /// Only defined for momentum along the 3-axis (or at rest).
    pub fn s3_check(&self, tol: f64) -> Result<Option<SpinLabel>> {
        let [p1, p2, _] = &self.momentum.p;
        if !p1.is_negligible(tol) || !p2.is_negligible(tol) {
            return Err(Error::TransverseMomentum);
        }
        let image = spin_s3::<T>().apply(&self.bispinor);
        let Some(lambda) = self.bispinor.ratio_to(&image, tol) else {
            return Ok(None);
        };
        let half = T::from_ratio(1, 2);
        Ok(
            if lambda.im.is_negligible(tol) && lambda.re.approx_eq(&half, tol) {
                Some(SpinLabel::Up)
            } else if lambda.im.is_negligible(tol) && lambda.re.approx_eq(&-half, tol) {
                Some(SpinLabel::Down)
            } else {
                None
            },
        )
    }

    /// Reads a χ state with the simultaneous flip `E → −E`, `m → −m`,
    /// `p → −p` (coordinates `x_μ → −x_μ` alongside).
    ///
    /// The bispinor and norm factor are recomputed from the flipped record
    /// and must come out bit-identical; only the record and interpretation
    /// change.
    pub fn reinterpret_flip(&self) -> Result<Self> {
        if !self.family.is_chi() {
            return Err(Error::NotChiFamily(self.family));
        }
        let flipped = self.momentum.negated();
        let (canonical_before, norm_before) = family_amplitudes(self.family, &self.momentum)?;
        let (canonical_after, norm_after) = family_amplitudes(self.family, &flipped)?;
        if canonical_after != canonical_before {
            return Err(Error::FlipNotInvariant("the bispinor"));
        }
        if norm_after != norm_before || norm_after != self.norm_factor_squared {
            return Err(Error::FlipNotInvariant("the norm factor"));
        }
        Ok(PlaneWaveState {
            family: self.family,
            momentum: flipped,
            bispinor: self.bispinor.clone(),
            norm_factor_squared: norm_after,
            exponent_sign: self.exponent_sign,
            interpretation: Interpretation {
                energy_sign: -self.interpretation.energy_sign,
                mass_sign: -self.interpretation.mass_sign,
            },
        })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "family": self.family.label(),
            "p": self.momentum.p.iter().map(Scalar::to_json).collect::<Vec<_>>(),
            "m": self.momentum.mass.to_json(),
            "E": energy_json(&self.momentum.energy),
            "bispinor": self.bispinor.to_json(),
            "norm_factor_squared": self.norm_factor_squared.to_json(),
            "exponent_sign": self.exponent_sign.as_i8(),
            "interpretation": {
                "energy_sign": self.interpretation.energy_sign.as_i8(),
                "mass_sign": self.interpretation.mass_sign.as_i8(),
            },
        })
    }
}

/// Builds a family's state at momentum `p` and mass `m`.
pub fn make_state<T: Scalar>(family: Family, p: [T; 3], m: T) -> Result<PlaneWaveState<T>> {
    let momentum = OnShellMomentum::new(p, m, family.energy_sign())?;
    PlaneWaveState::from_record(family, momentum)
}
