//! Momentum-space Dirac operator and the sign-variant classifier.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::matrix::{block_identity, block_scale, pauli, re, Block2, Matrix4, Spinor};
use crate::planewave::PlaneWaveState;
use crate::scalar::{Scalar, Sign};

/// `γ^μ p_μ − s·m` in the Dirac representation:
/// `[[E − s·m, −σ·p], [σ·p, −E − s·m]]`.
#[derive(Clone, Debug, PartialEq)]
pub struct DiracOperatorMomSpace<T: Scalar> {
    pub energy: T,
    pub p: [T; 3],
    pub mass: T,
    pub mass_sign: Sign,
    matrix: Matrix4<T>,
}

impl<T: Scalar> DiracOperatorMomSpace<T> {
    pub fn matrix(&self) -> &Matrix4<T> {
        &self.matrix
    }

    pub fn determinant(&self) -> T {
        self.matrix.determinant().re
    }

    /// `(E² − p² − m²)²`.
    pub fn expected_determinant(&self) -> T {
        let p2 = self
            .p
            .iter()
            .fold(T::zero(), |acc, x| acc + x.clone() * x.clone());
        let shell =
            self.energy.clone() * self.energy.clone() - p2 - self.mass.clone() * self.mass.clone();
        shell.clone() * shell
    }

    pub fn apply(&self, u: &Spinor<T>) -> Spinor<T> {
        self.matrix.apply(u)
    }
}

fn sigma_dot<T: Scalar>(p: &[T; 3]) -> Block2<T> {
    let mut out = block_scale(&pauli::<T>(1), &re(p[0].clone()));
    for (k, pk) in p.iter().enumerate().skip(1) {
        let term = block_scale(&pauli::<T>(k + 1), &re(pk.clone()));
        for r in 0..2 {
            for c in 0..2 {
                out[r][c] = out[r][c].clone() + term[r][c].clone();
            }
        }
    }
    out
}

pub fn assemble<T: Scalar>(
    energy: T,
    p: [T; 3],
    mass: T,
    mass_sign: Sign,
) -> DiracOperatorMomSpace<T> {
    let sm = mass_sign.apply(mass.clone());
    let sp = sigma_dot(&p);
    let neg_one = re(-T::one());
    let upper = block_scale(&block_identity(), &re(energy.clone() - sm.clone()));
    let lower = block_scale(&block_identity(), &re(-energy.clone() - sm));
    let matrix = Matrix4::from_blocks(&upper, &block_scale(&sp, &neg_one), &sp, &lower);
    DiracOperatorMomSpace {
        energy,
        p,
        mass,
        mass_sign,
        matrix,
    }
}

/// Applies the operator built from the state's effective eigenvalues
/// `(s·E, s·p)`, with `s` the exponent sign, to its bispinor.
pub fn residual<T: Scalar>(state: &PlaneWaveState<T>, mass_sign: Sign) -> Spinor<T> {
    let s = state.exponent_sign();
    let k = state.momentum();
    let op = assemble(
        s.apply(k.energy().clone()),
        k.p().clone().map(|x| s.apply(x)),
        k.mass().clone(),
        mass_sign,
    );
    op.apply(state.bispinor())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EquationTag {
    /// `(γ^μ p_μ − m) u = 0`
    GammaPMinusM,
    /// `(γ^μ p_μ + m) u = 0`
    GammaPPlusM,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Reading {
    FeynmanStueckelberg,
    NegativeMassEnergy,
}

/// One reading of a state.
///
/// `equation_tag` is written in the recorded momentum `p` and the mass the
/// reading attributes: the Feynman–Stueckelberg reading keeps the recorded
/// mass, the negative reading attributes its negative.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Classification {
    pub satisfied: bool,
    pub equation_tag: EquationTag,
    pub reading: Reading,
    pub residual_norm: f64,
    pub attributed_energy_sign: Sign,
    pub attributed_mass_sign: Sign,
}

impl Classification {
    pub fn to_json(&self) -> Value {
        json!({
            "satisfied": self.satisfied,
            "equation_tag": self.equation_tag,
            "reading": self.reading,
            "residual_norm": self.residual_norm,
            "attributed_energy_sign": self.attributed_energy_sign.as_i8(),
            "attributed_mass_sign": self.attributed_mass_sign.as_i8(),
        })
    }
}

fn is_zero_residual<T: Scalar>(r: &Spinor<T>, tol: f64) -> bool {
    if T::EXACT {
        r.is_zero(0.0)
    } else {
        r.max_abs() <= tol
    }
}

/// Both readings with their residuals, satisfied or not.
pub fn evaluate_readings<T: Scalar>(state: &PlaneWaveState<T>, tol: f64) -> [Classification; 2] {
    let s = state.exponent_sign();
    let k = state.momentum();
    let e_sign = Sign::of(k.energy()).unwrap_or(Sign::Plus);
    let m_sign = Sign::of(k.mass()).unwrap_or(Sign::Plus);

    let fs = residual(state, Sign::Plus);
    let neg = assemble(
        k.energy().clone(),
        k.p().clone(),
        k.mass().clone(),
        Sign::Minus,
    )
    .apply(state.bispinor());
    [
        Classification {
            satisfied: is_zero_residual(&fs, tol),
            equation_tag: if s == Sign::Plus {
                EquationTag::GammaPMinusM
            } else {
                EquationTag::GammaPPlusM
            },
            reading: Reading::FeynmanStueckelberg,
            residual_norm: fs.max_abs(),
            attributed_energy_sign: e_sign,
            attributed_mass_sign: m_sign,
        },
        Classification {
            satisfied: is_zero_residual(&neg, tol),
            equation_tag: EquationTag::GammaPMinusM,
            reading: Reading::NegativeMassEnergy,
            residual_norm: neg.max_abs(),
            attributed_energy_sign: -e_sign,
            attributed_mass_sign: -m_sign,
        },
    ]
}

/// Every reading under which the state has zero residual.
///
/// Exact types ignore `tol`; floats use it as the max-component bound.
pub fn classify<T: Scalar>(state: &PlaneWaveState<T>, tol: f64) -> Vec<Classification> {
    evaluate_readings(state, tol)
        .into_iter()
        .filter(|c| c.satisfied)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::c;
    use crate::planewave::{make_state, Family, Interpretation, OnShellMomentum};
    use crate::scalar::{q, Rational};

    fn axial(p3: Rational) -> [Rational; 3] {
        [q(0, 1), q(0, 1), p3]
    }

    #[test]
    fn assembled_blocks() {
        let op = assemble(q(5, 4), axial(q(3, 4)), q(1, 1), Sign::Plus);
        let m = op.matrix();
        assert_eq!(*m.entry(0, 0), re(q(1, 4)));
        assert_eq!(*m.entry(0, 2), re(q(-3, 4)));
        assert_eq!(*m.entry(1, 3), re(q(3, 4)));
        assert_eq!(*m.entry(2, 0), re(q(3, 4)));
        assert_eq!(*m.entry(3, 3), re(q(-9, 4)));
        assert_eq!(op.determinant(), q(0, 1));

        let rest = assemble(q(2, 1), axial(q(0, 1)), q(2, 1), Sign::Plus);
        let two = re(q(-4, 1));
        let z = re(q(0, 1));
        assert_eq!(
            *rest.matrix(),
            Matrix4::diag([z.clone(), z, two.clone(), two])
        );

        let off = assemble(q(1, 1), axial(q(0, 1)), q(2, 1), Sign::Plus);
        assert_eq!(off.determinant(), q(9, 1));
        assert!(off.matrix().inverse().is_some());
    }

    #[test]
    fn transverse_sigma_terms() {
        let op = assemble(q(0, 1), [q(1, 1), q(2, 1), q(0, 1)], q(0, 1), Sign::Plus);
        // σ·p upper-right row 0 col 1: p1 − i p2
        assert_eq!(*op.matrix().entry(2, 1), c(q(1, 1), q(-2, 1)));
        assert_eq!(*op.matrix().entry(0, 3), c(q(-1, 1), q(2, 1)));
        assert_eq!(op.determinant(), op.expected_determinant());
    }

    #[test]
    fn residual_examples() {
        let psi = make_state(Family::PsiPlus1, axial(q(3, 4)), q(1, 1)).unwrap();
        assert!(residual(&psi, Sign::Plus).is_zero(0.0));
        let rest = make_state(Family::PsiPlus1, axial(q(0, 1)), q(1, 1)).unwrap();
        let r = residual(&rest, Sign::Minus);
        assert_eq!(r, Spinor::from_real([q(2, 1), q(0, 1), q(0, 1), q(0, 1)]));
    }

    #[test]
    fn psi_classifies_once() {
        let psi = make_state(Family::PsiPlus1, axial(q(3, 4)), q(1, 1)).unwrap();
        let found = classify(&psi, 0.0);
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].equation_tag, EquationTag::GammaPMinusM);
        assert_eq!(found[0].reading, Reading::FeynmanStueckelberg);
    }

    #[test]
    fn chi_classifies_under_both_readings() {
        let chi = make_state(Family::ChiPlus1, axial(q(3, 4)), q(1, 1)).unwrap();
        let found = classify(&chi, 0.0);
        assert_eq!(found.len(), 2);
        assert_eq!(
            (found[0].equation_tag, found[0].reading),
            (EquationTag::GammaPPlusM, Reading::FeynmanStueckelberg)
        );
        assert_eq!(
            (found[1].equation_tag, found[1].reading),
            (EquationTag::GammaPMinusM, Reading::NegativeMassEnergy)
        );
        assert_eq!(
            (
                found[1].attributed_energy_sign,
                found[1].attributed_mass_sign
            ),
            (Sign::Minus, Sign::Minus)
        );
    }

    #[test]
    fn readings_are_negatives() {
        let (e, p, m) = (q(5, 4), [q(1, 4), q(1, 2), q(1, 2)], q(1, 1));
        let fs = assemble(-e.clone(), p.clone().map(|x| -x), m.clone(), Sign::Plus);
        let neg = assemble(e, p, m, Sign::Minus);
        assert_eq!(*fs.matrix(), -neg.matrix());
    }

    #[test]
    fn off_shell_state_matches_nothing() {
        let k = OnShellMomentum::fabricated(axial(q(0, 1)), q(2, 1), q(1, 1));
        let s = PlaneWaveState::fabricated(
            Family::PsiPlus1,
            k,
            Spinor::from_real([q(1, 1), q(0, 1), q(0, 1), q(0, 1)]),
            q(1, 1),
            Sign::Plus,
            Interpretation {
                energy_sign: Sign::Plus,
                mass_sign: Sign::Plus,
            },
        );
        assert!(classify(&s, 0.0).is_empty());
    }

    #[test]
    fn float_mode_tolerance() {
        let s = make_state(Family::ChiPlus2, [0.3, -0.4, 1.2], 0.7f64).unwrap();
        assert_eq!(classify(&s, 1e-12).len(), 2);
    }
}
