//! Lorentz matrices, their four connected components and the light cone.
//!
//! Conventions: `g = diag(1, −1, −1, −1)`, row index is the upper index, so
//! `Λ⁰₀ = entries[0][0]`.

use std::fmt;
use std::ops::Mul;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gamma::METRIC;
use crate::scalar::{Scalar, Sign};

/// Componentwise tolerance for float Lorentz checks.
pub const FLOAT_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ComponentLabel {
    pub det_sign: Sign,
    pub time_sign: Sign,
}

impl ComponentLabel {
    /// L₊↑, the identity component.
    pub const RESTRICTED: ComponentLabel = ComponentLabel {
        det_sign: Sign::Plus,
        time_sign: Sign::Plus,
    };
    /// L₋↑, containing parity.
    pub const PARITY: ComponentLabel = ComponentLabel {
        det_sign: Sign::Minus,
        time_sign: Sign::Plus,
    };
    /// L₋↓, containing time reversal.
    pub const TIME: ComponentLabel = ComponentLabel {
        det_sign: Sign::Minus,
        time_sign: Sign::Minus,
    };
    /// L₊↓, containing `−I`.
    pub const PARITY_TIME: ComponentLabel = ComponentLabel {
        det_sign: Sign::Plus,
        time_sign: Sign::Minus,
    };

    pub const ALL: [ComponentLabel; 4] = [
        Self::RESTRICTED,
        Self::PARITY,
        Self::TIME,
        Self::PARITY_TIME,
    ];

    pub fn compose(self, other: ComponentLabel) -> ComponentLabel {
        ComponentLabel {
            det_sign: self.det_sign * other.det_sign,
            time_sign: self.time_sign * other.time_sign,
        }
    }

    pub fn is_orthochronous(self) -> bool {
        self.time_sign == Sign::Plus
    }

    pub fn name(self) -> &'static str {
        match (self.det_sign, self.time_sign) {
            (Sign::Plus, Sign::Plus) => "L+↑",
            (Sign::Minus, Sign::Plus) => "L-↑",
            (Sign::Minus, Sign::Minus) => "L-↓",
            (Sign::Plus, Sign::Minus) => "L+↓",
        }
    }

    fn bit(self) -> u8 {
        match (self.det_sign, self.time_sign) {
            (Sign::Plus, Sign::Plus) => 1,
            (Sign::Minus, Sign::Plus) => 2,
            (Sign::Minus, Sign::Minus) => 4,
            (Sign::Plus, Sign::Minus) => 8,
        }
    }
}

impl fmt::Display for ComponentLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn component_composition(a: ComponentLabel, b: ComponentLabel) -> ComponentLabel {
    a.compose(b)
}

/// A set of components, one bit each in [`ComponentLabel::ALL`] order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ComponentSet(u8);

impl ComponentSet {
    pub fn from_mask(mask: u8) -> Self {
        ComponentSet(mask & 0b1111)
    }

    pub fn from_labels(labels: &[ComponentLabel]) -> Self {
        ComponentSet(labels.iter().fold(0, |m, l| m | l.bit()))
    }

    pub fn contains(self, l: ComponentLabel) -> bool {
        self.0 & l.bit() != 0
    }

    pub fn labels(self) -> Vec<ComponentLabel> {
        ComponentLabel::ALL
            .into_iter()
            .filter(|l| self.contains(*l))
            .collect()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// The 15 nonempty subsets.
    pub fn nonempty() -> impl Iterator<Item = ComponentSet> {
        (1..16u8).map(ComponentSet)
    }
}

impl fmt::Display for ComponentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<_> = self.labels().iter().map(|l| l.name()).collect();
        write!(f, "{{{}}}", names.join(", "))
    }
}

/// Contains L₊↑ and is closed under composition.
pub fn union_is_group(set: ComponentSet) -> bool {
    let labels = set.labels();
    set.contains(ComponentLabel::RESTRICTED)
        && labels
            .iter()
            .all(|a| labels.iter().all(|b| set.contains(a.compose(*b))))
}

/// `(subset, is_group)` for all 15 nonempty subsets.
pub fn group_scan() -> Vec<(ComponentSet, bool)> {
    ComponentSet::nonempty()
        .map(|s| (s, union_is_group(s)))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CausalClass {
    TimelikeFuture,
    TimelikePast,
    Spacelike,
    Lightlike,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FourVector<T: Scalar>(pub [T; 4]);

impl<T: Scalar> FourVector<T> {
    pub fn minkowski_square(&self) -> T {
        (0..4).fold(T::zero(), |acc, mu| {
            let v2 = self.0[mu].clone() * self.0[mu].clone();
            if METRIC[mu] > 0 {
                acc + v2
            } else {
                acc - v2
            }
        })
    }

    /// Exact for rationals; floats treat `|v·v| ≤ tol · Σ vᵢ²` as lightlike.
    pub fn causal_class(&self, tol: f64) -> CausalClass {
        let s = self.minkowski_square();
        let scale: f64 = self.0.iter().map(|x| x.to_f64() * x.to_f64()).sum();
        let null = if T::EXACT {
            s.is_zero()
        } else {
            s.to_f64().abs() <= tol * scale
        };
        if null {
            CausalClass::Lightlike
        } else if s.is_negative() {
            CausalClass::Spacelike
        } else if self.0[0].is_positive() {
            CausalClass::TimelikeFuture
        } else {
            CausalClass::TimelikePast
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LorentzMatrix<T: Scalar> {
    entries: [[T; 4]; 4],
    label: ComponentLabel,
}

fn close<T: Scalar>(a: &T, b: &T, tol: f64) -> bool {
    if T::EXACT {
        a == b
    } else {
        a.approx_eq(b, tol)
    }
}

fn metric<T: Scalar>(mu: usize) -> T {
    T::from_ratio(METRIC[mu], 1)
}

/// `ΛᵀgΛ = g`, exactly or within `tol` per component.
pub fn is_lorentz<T: Scalar>(m: &[[T; 4]; 4], tol: f64) -> bool {
    (0..4).all(|a| {
        (0..4).all(|b| {
            let lhs = (0..4).fold(T::zero(), |acc, mu| {
                acc + m[mu][a].clone() * metric::<T>(mu) * m[mu][b].clone()
            });
            let rhs = if a == b { metric::<T>(a) } else { T::zero() };
            close(&lhs, &rhs, tol)
        })
    })
}

/// Determinant by Gaussian elimination.
pub fn determinant<T: Scalar>(m: &[[T; 4]; 4]) -> T {
    let mut a = m.clone();
    let mut det = T::one();
    for col in 0..4 {
        let Some(pivot) = (col..4).max_by(|&x, &y| {
            a[x][col]
                .abs()
                .to_f64()
                .total_cmp(&a[y][col].abs().to_f64())
        }) else {
            return T::zero();
        };
        if a[pivot][col].is_zero() {
            return T::zero();
        }
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        det = det * a[col][col].clone();
        let pivot_row = a[col].clone();
        for row in a.iter_mut().skip(col + 1) {
            let f = row[col].clone() / pivot_row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x = x.clone() - p.clone() * f.clone();
            }
        }
    }
    det
}

/// `(sign det Λ, sign Λ⁰₀)`; `Λ⁰₀ ≥ 1` counts as orthochronous.
pub fn classify<T: Scalar>(m: &[[T; 4]; 4], tol: f64) -> Result<ComponentLabel> {
    if !is_lorentz(m, tol) {
        return Err(Error::NotLorentz);
    }
    let det = determinant(m);
    Ok(ComponentLabel {
        det_sign: if det.is_negative() {
            Sign::Minus
        } else {
            Sign::Plus
        },
        time_sign: if m[0][0].is_negative() {
            Sign::Minus
        } else {
            Sign::Plus
        },
    })
}

impl<T: Scalar> LorentzMatrix<T> {
    /// Validates with the default tolerance ([`FLOAT_TOL`] for floats).
    pub fn new(entries: [[T; 4]; 4]) -> Result<Self> {
        Self::with_tol(entries, FLOAT_TOL)
    }

    pub fn with_tol(entries: [[T; 4]; 4], tol: f64) -> Result<Self> {
        let label = classify(&entries, tol)?;
        Ok(LorentzMatrix { entries, label })
    }

    pub fn from_i64(rows: [[i64; 4]; 4]) -> Result<Self> {
        Self::new(rows.map(|r| r.map(|v| T::from_ratio(v, 1))))
    }

    pub fn identity() -> Self {
        Self::diagonal([1, 1, 1, 1])
    }

    /// `P = diag(1, −1, −1, −1)`.
    pub fn parity() -> Self {
        Self::diagonal([1, -1, -1, -1])
    }

    /// `T = diag(−1, 1, 1, 1)`.
    pub fn time_reversal() -> Self {
        Self::diagonal([-1, 1, 1, 1])
    }

    /// `PT = −I`.
    pub fn parity_time() -> Self {
        Self::diagonal([-1, -1, -1, -1])
    }

    fn diagonal(d: [i64; 4]) -> Self {
        let entries = std::array::from_fn(|r| {
            std::array::from_fn(|c| T::from_ratio(if r == c { d[r] } else { 0 }, 1))
        });
        let label = classify(&entries, 0.0).expect("diagonal sign matrices are Lorentz");
        LorentzMatrix { entries, label }
    }

    pub fn entries(&self) -> &[[T; 4]; 4] {
        &self.entries
    }

    pub fn label(&self) -> ComponentLabel {
        self.label
    }

    pub fn act(&self, v: &FourVector<T>) -> FourVector<T> {
        FourVector(std::array::from_fn(|r| {
            (0..4).fold(T::zero(), |acc, c| {
                acc + self.entries[r][c].clone() * v.0[c].clone()
            })
        }))
    }

    /// Product without revalidation; the label composes.
    pub fn compose(&self, rhs: &Self) -> Self {
        let entries = std::array::from_fn(|r| {
            std::array::from_fn(|c| {
                (0..4).fold(T::zero(), |acc, k| {
                    acc + self.entries[r][k].clone() * rhs.entries[k][c].clone()
                })
            })
        });
        LorentzMatrix {
            entries,
            label: self.label.compose(rhs.label),
        }
    }

    pub fn to_f64(&self) -> LorentzMatrix<f64> {
        LorentzMatrix {
            entries: self.entries.clone().map(|r| r.map(|v| v.to_f64())),
            label: self.label,
        }
    }
}

impl<T: Scalar> Mul for &LorentzMatrix<T> {
    type Output = LorentzMatrix<T>;

    fn mul(self, rhs: Self) -> LorentzMatrix<T> {
        self.compose(rhs)
    }
}

fn check_axis(axis: usize) -> Result<()> {
    if (1..=3).contains(&axis) {
        Ok(())
    } else {
        Err(Error::BadAxis(axis))
    }
}

/// Pure boost along `axis` with velocity `beta`.
///
/// Exact types need `1 − β²` to be a rational square (β = 3/5, 5/13, ...).
pub fn boost<T: Scalar>(axis: usize, beta: T) -> Result<LorentzMatrix<T>> {
    check_axis(axis)?;
    if beta.abs() >= T::one() {
        return Err(Error::Superluminal(beta.to_string()));
    }
    let root = (T::one() - beta.clone() * beta.clone())
        .checked_sqrt()
        .ok_or_else(|| Error::IrrationalBoost(beta.to_string()))?;
    let gamma = T::one() / root;
    let mut e: [[T; 4]; 4] = LorentzMatrix::<T>::identity().entries;
    e[0][0] = gamma.clone();
    e[axis][axis] = gamma.clone();
    e[0][axis] = -(gamma.clone() * beta.clone());
    e[axis][0] = -(gamma * beta);
    LorentzMatrix::new(e)
}

/// Rotation about `axis` with the given cosine and sine.
pub fn rotation<T: Scalar>(axis: usize, cos: T, sin: T) -> Result<LorentzMatrix<T>> {
    check_axis(axis)?;
    let tol = if T::EXACT { 0.0 } else { FLOAT_TOL };
    if !close(
        &(cos.clone() * cos.clone() + sin.clone() * sin.clone()),
        &T::one(),
        tol,
    ) {
        return Err(Error::NotARotation);
    }
    let (a, b) = match axis {
        1 => (2, 3),
        2 => (3, 1),
        _ => (1, 2),
    };
    let mut e: [[T; 4]; 4] = LorentzMatrix::<T>::identity().entries;
    e[a][a] = cos.clone();
    e[b][b] = cos;
    e[a][b] = -sin.clone();
    e[b][a] = sin;
    LorentzMatrix::new(e)
}

/// Product of a few random boosts and rotations, all in L₊↑.
pub fn random_restricted<R: Rng>(rng: &mut R) -> LorentzMatrix<f64> {
    let factors = rng.gen_range(1..=4);
    (0..factors).fold(LorentzMatrix::identity(), |acc, _| {
        let axis = rng.gen_range(1..=3);
        let step = if rng.gen_bool(0.5) {
            boost(axis, rng.gen_range(-0.95..0.95)).expect("subluminal")
        } else {
            let angle: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
            rotation(axis, angle.cos(), angle.sin()).expect("unit circle")
        };
        &acc * &step
    })
}

/// Random future-pointing timelike vector.
pub fn random_future_timelike<R: Rng>(rng: &mut R) -> FourVector<f64> {
    let v: [f64; 3] = std::array::from_fn(|_| rng.gen_range(-2.0..2.0));
    let m = rng.gen_range(0.1..2.0);
    let e = (m * m + v.iter().map(|x| x * x).sum::<f64>()).sqrt();
    FourVector([e, v[0], v[1], v[2]])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, Rational};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    type L = LorentzMatrix<Rational>;

    #[test]
    fn membership() {
        assert!(is_lorentz(L::identity().entries(), 0.0));
        assert!(is_lorentz(L::parity().entries(), 0.0));
        let stretched =
            [[2, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]].map(|r| r.map(|v| q(v, 1)));
        assert!(!is_lorentz(&stretched, 0.0));
        assert_eq!(classify(&stretched, 0.0).unwrap_err(), Error::NotLorentz);
    }

    #[test]
    fn discrete_components() {
        assert_eq!(L::parity().label(), ComponentLabel::PARITY);
        assert_eq!(L::time_reversal().label(), ComponentLabel::TIME);
        assert_eq!(L::parity_time().label(), ComponentLabel::PARITY_TIME);
        assert_eq!(L::identity().label(), ComponentLabel::RESTRICTED);
    }

    #[test]
    fn rational_boosts() {
        assert_eq!(boost(3, q(0, 1)).unwrap(), L::identity());
        let b = boost(3, q(3, 5)).unwrap();
        assert_eq!(b.entries()[0][0], q(5, 4));
        assert_eq!(b.entries()[0][3], q(-3, 4));
        assert_eq!(b.label(), ComponentLabel::RESTRICTED);
        assert_eq!(&b * &boost(3, q(-3, 5)).unwrap(), L::identity());
        assert!(matches!(boost(1, q(1, 1)), Err(Error::Superluminal(_))));
        assert!(matches!(boost(1, q(1, 2)), Err(Error::IrrationalBoost(_))));
        assert_eq!(boost(4, q(1, 2)).unwrap_err(), Error::BadAxis(4));
        let r = rotation(2, q(3, 5), q(4, 5)).unwrap();
        assert_eq!(r.label(), ComponentLabel::RESTRICTED);
        assert_eq!(
            rotation(2, q(1, 2), q(1, 2)).unwrap_err(),
            Error::NotARotation
        );
    }

    #[test]
    fn composition_table() {
        use ComponentLabel as C;
        assert_eq!(component_composition(C::PARITY, C::PARITY), C::RESTRICTED);
        assert_eq!(
            component_composition(C::PARITY_TIME, C::PARITY_TIME),
            C::RESTRICTED
        );
        assert_eq!(component_composition(C::PARITY, C::PARITY_TIME), C::TIME);
    }

    #[test]
    fn exactly_five_groups() {
        use ComponentLabel as C;
        let groups: Vec<_> = group_scan()
            .into_iter()
            .filter(|(_, g)| *g)
            .map(|(s, _)| s)
            .collect();
        assert_eq!(groups.len(), 5);
        for expected in [
            vec![C::RESTRICTED],
            vec![C::RESTRICTED, C::PARITY],
            vec![C::RESTRICTED, C::PARITY_TIME],
            vec![C::RESTRICTED, C::TIME],
            C::ALL.to_vec(),
        ] {
            assert!(groups.contains(&ComponentSet::from_labels(&expected)));
        }
        assert!(!union_is_group(ComponentSet::from_labels(&[C::PARITY])));
        assert!(!union_is_group(ComponentSet::from_labels(&[
            C::RESTRICTED,
            C::PARITY,
            C::TIME
        ])));
    }

    #[test]
    fn light_cone_halves() {
        let rest = FourVector([q(2, 1), q(0, 1), q(0, 1), q(0, 1)]);
        let b = boost(1, q(5, 13)).unwrap();
        assert_eq!(b.act(&rest).causal_class(0.0), CausalClass::TimelikeFuture);
        let flipped = L::parity_time().act(&rest);
        assert_eq!(flipped.0[0], q(-2, 1));
        assert_eq!(flipped.causal_class(0.0), CausalClass::TimelikePast);
        let light = FourVector([q(1, 1), q(1, 1), q(0, 1), q(0, 1)]);
        assert_eq!(b.act(&light).causal_class(0.0), CausalClass::Lightlike);
        assert_eq!(b.act(&light).minkowski_square(), q(0, 1));
        let space = FourVector([q(0, 1), q(1, 1), q(0, 1), q(0, 1)]);
        assert_eq!(space.causal_class(0.0), CausalClass::Spacelike);
    }

    #[test]
    fn random_float_maps() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let l = random_restricted(&mut rng);
            assert!(is_lorentz(l.entries(), FLOAT_TOL));
            assert_eq!(
                classify(l.entries(), FLOAT_TOL).unwrap(),
                ComponentLabel::RESTRICTED
            );
        }
    }

    #[test]
    fn determinant_sign() {
        assert_eq!(determinant(L::parity().entries()), q(-1, 1));
        assert_eq!(determinant(boost(2, q(3, 5)).unwrap().entries()), q(1, 1));
    }
}
