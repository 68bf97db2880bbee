//! Discrete symmetry operators and their action on plane-wave states.
//!
//! An operator acts as `ψ(t, x) ↦ phase · M · ψ^{(*)}(τ·t, ξ·x)`, with `τ`
//! and `ξ` the time and space signs and `*` present for anti-unitary
//! operators. `M` is stored as a canonical form in the operator's own
//! representation; states always live in the Dirac representation.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex;
use num_traits::One;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::clifford::search::satisfies;
use crate::clifford::{CanonicalForm, CommutationConstraint, IndexSubset, Relation};
use crate::error::{Error, Result};
use crate::gamma::{build_representation, conjugation_signs, GammaRepresentation, Representation};
use crate::matrix::{format_complex, imag_unit, is_unit_modulus, Matrix4, Spinor};
use crate::planewave::{make_state, Family, Interpretation, OnShellMomentum, PlaneWaveState};
use crate::scalar::{Scalar, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum OperatorName {
    P,
    #[serde(rename = "T_U")]
    TU,
    #[serde(rename = "PT_U")]
    PTU,
    #[serde(rename = "T_AU")]
    TAU,
    #[serde(rename = "PT_AU")]
    PTAU,
    C,
    M,
    /// Anything built with [`DiscreteOperator::custom`].
    #[serde(rename = "custom")]
    Custom,
}

impl OperatorName {
    pub const CATALOG: [OperatorName; 7] = [
        OperatorName::P,
        OperatorName::TU,
        OperatorName::PTU,
        OperatorName::TAU,
        OperatorName::PTAU,
        OperatorName::C,
        OperatorName::M,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            OperatorName::P => "P",
            OperatorName::TU => "T_U",
            OperatorName::PTU => "PT_U",
            OperatorName::TAU => "T_AU",
            OperatorName::PTAU => "PT_AU",
            OperatorName::C => "C",
            OperatorName::M => "M",
            OperatorName::Custom => "custom",
        }
    }
}

impl fmt::Display for OperatorName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for OperatorName {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        OperatorName::CATALOG
            .into_iter()
            .find(|n| n.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown operator `{s}`"))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DiscreteOperator<T: Scalar> {
    pub name: OperatorName,
    pub rep: Representation,
    pub matrix_part: CanonicalForm<T>,
    pub conjugates: bool,
    pub time_sign: Sign,
    pub space_sign: Sign,
    pub phase: Complex<T>,
    pub mass_action: Sign,
}

struct Entry {
    subset: &'static [u8],
    times_i: bool,
    conjugates: bool,
    time_sign: Sign,
    space_sign: Sign,
    mass_action: Sign,
}

fn catalog_entry(name: OperatorName) -> Entry {
    use Sign::{Minus as N, Plus as Y};
    let e = |subset, times_i, conjugates, time_sign, space_sign, mass_action| Entry {
        subset,
        times_i,
        conjugates,
        time_sign,
        space_sign,
        mass_action,
    };
    match name {
        OperatorName::P => e(&[0], false, false, Y, N, Y),
        OperatorName::TU => e(&[1, 2, 3], false, false, N, Y, Y),
        OperatorName::PTU => e(&[0, 1, 2, 3], true, false, N, N, N),
        OperatorName::TAU => e(&[1, 3], true, true, N, Y, Y),
        OperatorName::PTAU => e(&[0, 1, 3], true, true, N, N, Y),
        OperatorName::C => e(&[2], true, true, Y, Y, Y),
        OperatorName::M => e(&[], false, false, Y, Y, N),
        OperatorName::Custom => e(&[], false, false, Y, Y, Y),
    }
}

/// Catalog operator in the Dirac representation.
pub fn make_operator<T: Scalar>(name: OperatorName) -> DiscreteOperator<T> {
    make_operator_in(name, Representation::Dirac)
}

/// Catalog operator carried into another representation.
///
/// Unitary parts transform as `S M S⁻¹`, anti-unitary ones as
/// `S M conj(S⁻¹)`. `Custom` yields the identity with trivial signs.
pub fn make_operator_in<T: Scalar>(name: OperatorName, rep: Representation) -> DiscreteOperator<T> {
    let entry = catalog_entry(name);
    let coeff = if entry.times_i {
        imag_unit()
    } else {
        Complex::one()
    };
    let dirac_form = CanonicalForm::term(IndexSubset::from_indices(entry.subset), coeff);
    let matrix_part = if rep == Representation::Dirac {
        dirac_form
    } else {
        let dirac = build_representation::<T>(Representation::Dirac);
        let target = build_representation::<T>(rep);
        let m = dirac_form.to_matrix(&dirac);
        let right = if entry.conjugates {
            target.to_dirac().conj()
        } else {
            target.to_dirac().clone()
        };
        let moved = &(target.from_dirac() * &m) * &right;
        CanonicalForm::from_matrix(&moved, &target)
    };
    DiscreteOperator {
        name,
        rep,
        matrix_part,
        conjugates: entry.conjugates,
        time_sign: entry.time_sign,
        space_sign: entry.space_sign,
        phase: Complex::one(),
        mass_action: entry.mass_action,
    }
}

impl<T: Scalar> DiscreteOperator<T> {
    pub fn custom(
        rep: Representation,
        matrix_part: CanonicalForm<T>,
        conjugates: bool,
        time_sign: Sign,
        space_sign: Sign,
        mass_action: Sign,
    ) -> Self {
        DiscreteOperator {
            name: OperatorName::Custom,
            rep,
            matrix_part,
            conjugates,
            time_sign,
            space_sign,
            phase: Complex::one(),
            mass_action,
        }
    }

    pub fn with_phase(mut self, phase: Complex<T>) -> Self {
        self.phase = phase;
        self
    }

    pub fn representation(&self) -> GammaRepresentation<T> {
        build_representation(self.rep)
    }

    /// `phase · M` in the operator's representation.
    pub fn matrix(&self) -> Matrix4<T> {
        self.matrix_part
            .to_matrix(&self.representation())
            .scale(&self.phase)
    }

    /// Acts on a Dirac-representation bispinor.
    pub fn transform_spinor(&self, u: &Spinor<T>) -> Spinor<T> {
        let rep = self.representation();
        let mut v = rep.from_dirac().apply(u);
        if self.conjugates {
            v = v.conj();
        }
        rep.to_dirac().apply(&self.matrix().apply(&v))
    }

    /// Exponent sign after the operator: conjugation and time reversal each
    /// flip it.
    pub fn exponent_after(&self, s: Sign) -> Sign {
        let c = if self.conjugates {
            Sign::Minus
        } else {
            Sign::Plus
        };
        s * c * self.time_sign
    }

    /// Interpretation after the operator: energy flips under a unitary time
    /// reversal, mass follows `mass_action`.
    pub fn interpretation_after(&self, i: Interpretation) -> Interpretation {
        let energy = if self.time_sign == Sign::Minus && !self.conjugates {
            -i.energy_sign
        } else {
            i.energy_sign
        };
        Interpretation {
            energy_sign: energy,
            mass_sign: i.mass_sign * self.mass_action,
        }
    }

    pub fn label(&self) -> String {
        match self.name {
            OperatorName::Custom => {
                let k = if self.conjugates { " K" } else { "" };
                format!("{}{k}", self.matrix_part)
            }
            n => n.to_string(),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.label(),
            "rep": self.rep,
            "matrix_part": self.matrix_part.to_string(),
            "conjugates": self.conjugates,
            "time_sign": self.time_sign.as_i8(),
            "space_sign": self.space_sign.as_i8(),
            "phase": format_complex(&self.phase),
            "mass_action": self.mass_action.as_i8(),
        })
    }
}

/// Canonical records the transformed wave can be written in: the direct one
/// first, then the same wave with `(s, E, p)` all negated. A ψ⁻ wave at `p`
/// and a χ⁺ wave at `−p` are the same function, so the direct record wins.
fn candidate_records<T: Scalar>(
    op: &DiscreteOperator<T>,
    state: &PlaneWaveState<T>,
) -> Vec<(Sign, OnShellMomentum<T>)> {
    let s = op.exponent_after(state.exponent_sign());
    let direct = state
        .momentum()
        .with(Sign::Plus, op.space_sign * op.time_sign);
    let mirrored = state
        .momentum()
        .with(Sign::Minus, -(op.space_sign * op.time_sign));
    vec![(s, direct), (-s, mirrored)]
}

fn norms_agree<T: Scalar>(a: &T, b: &T, tol: f64) -> bool {
    if T::EXACT {
        a == b
    } else {
        a.approx_eq(b, tol)
    }
}

fn unit_phase<T: Scalar>(canonical: &Spinor<T>, image: &Spinor<T>, tol: f64) -> Option<Complex<T>> {
    canonical
        .ratio_to(image, tol)
        .filter(|k| is_unit_modulus(k, tol))
}

/// Applies `op` and rewrites the result as a canonical family state.
///
/// The returned bispinor is the transformed one, so it may differ from the
/// family's canonical bispinor by a unit phase.
pub fn apply<T: Scalar>(
    op: &DiscreteOperator<T>,
    state: &PlaneWaveState<T>,
) -> Result<PlaneWaveState<T>> {
    apply_with_tol(op, state, 1e-12)
}

pub fn apply_with_tol<T: Scalar>(
    op: &DiscreteOperator<T>,
    state: &PlaneWaveState<T>,
    tol: f64,
) -> Result<PlaneWaveState<T>> {
    let image = op.transform_spinor(state.bispinor());
    for (s, k) in candidate_records(op, state) {
        let Some(e) = k.energy_sign() else { continue };
        for &family in Family::in_class(s, e) {
            let Ok(target) = PlaneWaveState::from_record(family, k.clone()) else {
                continue;
            };
            if norms_agree(
                target.norm_factor_squared(),
                state.norm_factor_squared(),
                tol,
            ) && unit_phase(target.bispinor(), &image, tol).is_some()
            {
                let interpretation = op.interpretation_after(state.interpretation());
                return Ok(target.with_parts(image, interpretation));
            }
        }
    }
    Err(Error::UnsupportedFamily {
        operator: op.name,
        input: state.family(),
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct MappingReport<T: Scalar> {
    pub operator: String,
    pub input: Family,
    pub output: Family,
    /// `k` with `op(input) = k · output`; `None` when not proportional.
    pub phase_found: Option<Complex<T>>,
    pub amplitudes_matched: bool,
}

impl<T: Scalar> MappingReport<T> {
    pub fn phase_label(&self) -> String {
        self.phase_found
            .as_ref()
            .map_or_else(|| "mismatch".to_string(), format_complex)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "operator": self.operator,
            "input": self.input.label(),
            "output": self.output.label(),
            "phase_found": self.phase_label(),
            "amplitudes_matched": self.amplitudes_matched,
        })
    }
}

/// Compares `op(input)` with the `expected` family state at the matching
/// transformed record.
pub fn verify_mapping<T: Scalar>(
    op: &DiscreteOperator<T>,
    input: Family,
    expected: Family,
    p: [T; 3],
    m: T,
) -> Result<MappingReport<T>> {
    let state = make_state(input, p.clone(), m.clone())?;
    make_state(expected, p, m)?;
    Ok(mapping_against(op, &state, expected, 1e-12))
}

fn mapping_against<T: Scalar>(
    op: &DiscreteOperator<T>,
    state: &PlaneWaveState<T>,
    expected: Family,
    tol: f64,
) -> MappingReport<T> {
    let image = op.transform_spinor(state.bispinor());
    let mut report = MappingReport {
        operator: op.label(),
        input: state.family(),
        output: expected,
        phase_found: None,
        amplitudes_matched: false,
    };
    for (s, k) in candidate_records(op, state) {
        let Some(e) = k.energy_sign() else { continue };
        if !Family::in_class(s, e).contains(&expected) {
            continue;
        }
        let Ok(target) = PlaneWaveState::from_record(expected, k) else {
            continue;
        };
        if let Some(phase) = unit_phase(target.bispinor(), &image, tol) {
            report.amplitudes_matched = norms_agree(
                target.norm_factor_squared(),
                state.norm_factor_squared(),
                tol,
            );
            report.phase_found = Some(phase);
            break;
        }
    }
    report
}

/// Partner of every family under `op`, one report per input family.
pub fn pairing_table<T: Scalar>(
    op: &DiscreteOperator<T>,
    p: [T; 3],
    m: T,
) -> Result<Vec<MappingReport<T>>> {
    Family::ALL
        .into_iter()
        .map(|input| {
            let state = make_state(input, p.clone(), m.clone())?;
            let output = apply(op, &state)?.family();
            Ok(mapping_against(op, &state, output, 1e-12))
        })
        .collect()
}

/// Required relation of `M` with each `γ^μ` for `op` to map solutions of
/// the `+m` equation to solutions with mass `mass_sign · m`.
///
/// Unitary: `M γ^μ M⁻¹ = λ σ_μ γ^μ`. Anti-unitary:
/// `M conj(γ^μ) M⁻¹ = −λ σ_μ γ^μ`, where `σ₀` is the time sign and `σⱼ` the
/// space sign.
pub fn contract<T: Scalar>(
    op: &DiscreteOperator<T>,
    mass_sign: Sign,
) -> Vec<CommutationConstraint> {
    let conj = conjugation_signs(&op.representation()).unwrap_or([1; 4]);
    (0..4u8)
        .map(|mu| {
            let sigma = if mu == 0 { op.time_sign } else { op.space_sign };
            let mut eta = mass_sign * sigma;
            if op.conjugates {
                eta = -eta * Sign::from_i8(conj[mu as usize]).unwrap_or(Sign::Plus);
            }
            CommutationConstraint {
                index: mu,
                relation: if eta == Sign::Plus {
                    Relation::Commute
                } else {
                    Relation::Anticommute
                },
            }
        })
        .collect()
}

pub fn intertwine_check<T: Scalar>(op: &DiscreteOperator<T>, mass_sign: Sign) -> bool {
    satisfies(&op.matrix_part, &contract(op, mass_sign))
}

/// The γ⁰γ¹γ³ ∘ K form (anti-unitary PT without the factor `i`).
pub fn bare_pt_au<T: Scalar>() -> DiscreteOperator<T> {
    make_operator(OperatorName::PTAU).with_phase(-imag_unit::<T>())
}

/// γ⁵ with no coordinate change: the mass-flip symmetry.
pub fn chirality_mass_flip<T: Scalar>() -> DiscreteOperator<T> {
    DiscreteOperator::custom(
        Representation::Dirac,
        CanonicalForm::term(IndexSubset::FULL, imag_unit()),
        false,
        Sign::Plus,
        Sign::Plus,
        Sign::Minus,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::monomial_search;
    use crate::matrix::{c, re};
    use crate::momenta::reference_momentum;
    use crate::residual::classify;
    use crate::scalar::{q, Rational};

    type Op = DiscreteOperator<Rational>;

    fn axial(p3: Rational) -> [Rational; 3] {
        [q(0, 1), q(0, 1), p3]
    }

    fn st(f: Family) -> PlaneWaveState<Rational> {
        make_state(f, axial(q(3, 4)), q(1, 1)).unwrap()
    }

    fn real(v: [(i64, i64); 4]) -> Spinor<Rational> {
        Spinor::from_real(v.map(|(n, d)| q(n, d)))
    }

    fn op(name: OperatorName) -> Op {
        make_operator(name)
    }

    fn phase(op: &Op, a: Family, b: Family) -> Option<Complex<Rational>> {
        let (p, m) = reference_momentum();
        let r = verify_mapping(op, a, b, p, m).unwrap();
        assert_eq!(r.amplitudes_matched, r.phase_found.is_some());
        r.phase_found
    }

    #[test]
    fn catalog_flags() {
        for name in OperatorName::CATALOG {
            for rep in Representation::ALL {
                let o: Op = make_operator_in(name, rep);
                assert!(o.matrix().is_unitary(0.0), "{name} in {rep}");
                assert_eq!(
                    o.conjugates,
                    matches!(
                        name,
                        OperatorName::TAU | OperatorName::PTAU | OperatorName::C
                    )
                );
                assert_eq!(
                    o.mass_action == Sign::Minus,
                    matches!(name, OperatorName::PTU | OperatorName::M)
                );
            }
        }
        let g5 = crate::gamma::gamma5(&build_representation::<Rational>(Representation::Dirac));
        assert_eq!(op(OperatorName::PTU).matrix(), g5);
    }

    #[test]
    fn chirality_maps_psi_to_chi() {
        let out = apply(&op(OperatorName::PTU), &st(Family::PsiPlus1)).unwrap();
        assert_eq!(out.family(), Family::ChiPlus1);
        assert_eq!(*out.bispinor(), real([(1, 3), (0, 1), (1, 1), (0, 1)]));
        assert_eq!(out.exponent_sign(), Sign::Minus);
        assert_eq!(
            out.interpretation(),
            Interpretation {
                energy_sign: Sign::Minus,
                mass_sign: Sign::Minus
            }
        );
    }

    #[test]
    fn charge_conjugation_witness() {
        let out = apply(&op(OperatorName::C), &st(Family::PsiPlus1)).unwrap();
        assert_eq!(out.family(), Family::ChiPlus2);
        assert_eq!(*out.bispinor(), real([(0, 1), (-1, 3), (0, 1), (1, 1)]));
        assert_eq!(
            out.interpretation(),
            Interpretation {
                energy_sign: Sign::Plus,
                mass_sign: Sign::Plus
            }
        );
    }

    #[test]
    fn mass_flip_keeps_amplitudes() {
        for f in Family::ALL {
            let s = st(f);
            let out = apply(&op(OperatorName::M), &s).unwrap();
            assert_eq!(out.bispinor(), s.bispinor());
            assert_eq!(out.family(), f);
            assert_eq!(
                out.interpretation().mass_sign,
                -s.interpretation().mass_sign
            );
        }
    }

    #[test]
    fn measured_phases() {
        use Family::*;
        let one = Some(re(q(1, 1)));
        let minus = Some(re(q(-1, 1)));
        let c_op = op(OperatorName::C);
        assert_eq!(phase(&c_op, PsiPlus1, ChiPlus2), one);
        assert_eq!(phase(&c_op, PsiPlus2, ChiPlus1), minus);
        assert_eq!(phase(&c_op, PsiPlus1, ChiPlus1), None);
        let bare = bare_pt_au::<Rational>();
        assert_eq!(phase(&bare, PsiPlus1, PsiPlus2), minus);
        assert_eq!(phase(&bare, PsiPlus2, PsiPlus1), one);
        let pt = op(OperatorName::PTAU);
        assert_eq!(phase(&pt, PsiPlus1, PsiPlus2), Some(c(q(0, 1), q(-1, 1))));
        assert_eq!(phase(&pt, PsiPlus2, PsiPlus1), Some(c(q(0, 1), q(1, 1))));
        let g5 = op(OperatorName::PTU);
        assert_eq!(phase(&g5, PsiPlus1, ChiPlus1), one);
        assert_eq!(phase(&g5, PsiPlus2, ChiPlus2), one);
    }

    #[test]
    fn pairing_tables() {
        use Family::*;
        let (p, m) = reference_momentum();
        let pairs = |name| -> Vec<(Family, Family)> {
            pairing_table(&op(name), p.clone(), m.clone())
                .unwrap()
                .into_iter()
                .map(|r| (r.input, r.output))
                .collect()
        };
        let cp = pairs(OperatorName::C);
        assert!(cp.contains(&(PsiPlus1, ChiPlus2)) && cp.contains(&(PsiPlus2, ChiPlus1)));
        let g5 = pairs(OperatorName::PTU);
        assert!(g5.contains(&(PsiPlus1, ChiPlus1)) && g5.contains(&(PsiPlus2, ChiPlus2)));
        let id = pairs(OperatorName::M);
        assert_eq!(id.len(), 6);
        assert!(id.iter().all(|(a, b)| a == b));
        for name in OperatorName::CATALOG {
            assert_eq!(pairs(name).len(), 6, "{name}");
        }
    }

    #[test]
    fn unitary_time_reversal_reverses_momentum() {
        let out = apply(&op(OperatorName::TU), &st(Family::PsiPlus1)).unwrap();
        assert_eq!(out.family(), Family::ChiPlus1);
        assert_eq!(out.momentum().p()[2], q(-3, 4));
        assert_eq!(out.interpretation().energy_sign, Sign::Minus);
    }

    #[test]
    fn results_stay_solutions() {
        let (p, m) = reference_momentum();
        for name in OperatorName::CATALOG {
            for f in Family::ALL {
                let s = make_state(f, p.clone(), m.clone()).unwrap();
                let out = apply(&op(name), &s).unwrap();
                assert!(!classify(&out, 0.0).is_empty(), "{name} on {f}");
            }
        }
    }

    #[test]
    fn contracts() {
        assert!(intertwine_check(&op(OperatorName::TU), Sign::Plus));
        assert!(intertwine_check(&op(OperatorName::TAU), Sign::Plus));
        let gamma1 = Op::custom(
            Representation::Dirac,
            CanonicalForm::basis(IndexSubset::from_indices(&[1])),
            false,
            Sign::Minus,
            Sign::Plus,
            Sign::Plus,
        );
        assert!(!intertwine_check(&gamma1, Sign::Plus));
        assert!(intertwine_check(
            &chirality_mass_flip::<Rational>(),
            Sign::Minus
        ));
        assert!(!intertwine_check(
            &chirality_mass_flip::<Rational>(),
            Sign::Plus
        ));
    }

    #[test]
    fn catalog_matches_solver() {
        for rep in Representation::ALL {
            for name in OperatorName::CATALOG {
                let o: Op = make_operator_in(name, rep);
                let (subset, _) = o.matrix_part.as_monomial().expect("monomial");
                assert_eq!(
                    monomial_search(&contract(&o, Sign::Plus)),
                    vec![subset],
                    "{name} in {rep}"
                );
            }
        }
        let c_maj: Op = make_operator_in(OperatorName::C, Representation::Majorana);
        assert_eq!(
            c_maj.matrix_part.as_monomial().unwrap().0,
            IndexSubset::EMPTY
        );
    }

    #[test]
    fn non_dirac_operators_act_identically() {
        let (p, m) = reference_momentum();
        for rep in [Representation::Majorana, Representation::Weyl] {
            for name in OperatorName::CATALOG {
                let a: Op = make_operator_in(name, rep);
                let d = op(name);
                for f in Family::ALL {
                    let s = make_state(f, p.clone(), m.clone()).unwrap();
                    let x = apply(&a, &s).unwrap();
                    let y = apply(&d, &s).unwrap();
                    assert_eq!(x.family(), y.family());
                    let k = y.bispinor().ratio_to(x.bispinor(), 0.0).unwrap();
                    assert!(is_unit_modulus(&k, 0.0));
                }
            }
        }
    }

    #[test]
    fn names_parse() {
        for n in OperatorName::CATALOG {
            assert_eq!(n.as_str().parse::<OperatorName>().unwrap(), n);
        }
    }
}
