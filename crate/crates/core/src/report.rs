//! Verification suites and their JSON / markdown reports.
//!
//! Reports carry no timestamps, so a `(suite, seed, rep)` triple always
//! yields byte-identical output.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use num_complex::Complex;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::clifford::random::{random_expr, ExprShape};
use crate::clifford::{
    canonicalize, monomial_search, to_expr, CommutationConstraint as Cc, IndexSubset,
};
use crate::gamma::{build_representation, check_clifford, gamma5, Representation};
use crate::lorentz::{
    self, group_scan, random_future_timelike, random_restricted, CausalClass, ComponentLabel,
    LorentzMatrix,
};
use crate::matrix::{anticommutator, c, format_complex, Matrix4};
use crate::momenta::{axial_reference_momenta, random_exact_momentum, rest_frame};
use crate::planewave::{make_state, Family, SpinLabel};
use crate::residual::{classify, Reading};
use crate::scalar::{q, Rational, Sign};
use crate::symmetry::{
    apply, chirality_mass_flip, contract, intertwine_check, make_operator_in, pairing_table,
    verify_mapping, DiscreteOperator, OperatorName,
};

type Q = Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Clifford,
    Solutions,
    Symmetries,
    Lorentz,
    All,
}

impl Suite {
    pub const PARTS: [Suite; 4] = [
        Suite::Clifford,
        Suite::Solutions,
        Suite::Symmetries,
        Suite::Lorentz,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Clifford => "clifford",
            Suite::Solutions => "solutions",
            Suite::Symmetries => "symmetries",
            Suite::Lorentz => "lorentz",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::PARTS
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.as_str() == s)
            .ok_or_else(|| format!("unknown suite `{s}` (expected clifford, solutions, symmetries, lorentz or all)"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Markdown,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(Format::Json),
            "md" | "markdown" => Ok(Format::Markdown),
            other => Err(format!("unknown format `{other}` (expected json or md)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub version: String,
    pub seed: u64,
    pub representation: Representation,
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
}

impl SuiteReport {
    pub fn new(
        suite: Suite,
        seed: u64,
        representation: Representation,
        checks: Vec<CheckRecord>,
    ) -> Self {
        let passed = checks.iter().filter(|c| c.status == Status::Pass).count();
        SuiteReport {
            suite,
            version: env!("CARGO_PKG_VERSION").to_string(),
            seed,
            representation,
            summary: Summary {
                total: checks.len(),
                passed,
                failed: checks.len() - passed,
            },
            checks,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

fn check(id: impl Into<String>, anchor: &str, ok: bool, detail: impl Into<String>) -> CheckRecord {
    CheckRecord {
        id: id.into(),
        anchor: anchor.to_string(),
        status: if ok { Status::Pass } else { Status::Fail },
        detail: detail.into(),
    }
}

pub fn run_suite(suite: Suite, seed: u64, rep: Representation) -> SuiteReport {
    let parts: &[Suite] = if suite == Suite::All {
        &Suite::PARTS
    } else {
        std::slice::from_ref(&suite)
    };
    let mut checks = Vec::new();
    for part in parts {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        match part {
            Suite::Clifford => clifford_checks(&mut rng, &mut checks),
            Suite::Solutions => solution_checks(&mut rng, &mut checks),
            Suite::Symmetries => symmetry_checks(&mut rng, rep, &mut checks),
            Suite::Lorentz => lorentz_checks(&mut rng, &mut checks),
            Suite::All => unreachable!(),
        }
    }
    SuiteReport::new(suite, seed, rep, checks)
}

pub fn emit(report: &SuiteReport, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Markdown => markdown(report),
    }
}

fn markdown(r: &SuiteReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# Suite `{}`\n", r.suite);
    let _ = writeln!(
        out,
        "version {}, seed {}, representation {}\n",
        r.version, r.seed, r.representation
    );
    let _ = writeln!(out, "| check | anchor | status | detail |");
    let _ = writeln!(out, "|---|---|---|---|");
    for c in &r.checks {
        let status = if c.status == Status::Pass {
            "pass"
        } else {
            "FAIL"
        };
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} |",
            c.id,
            c.anchor,
            status,
            c.detail.replace('|', "\\|")
        );
    }
    let _ = writeln!(
        out,
        "\n{} checks, {} passed, {} failed",
        r.summary.total, r.summary.passed, r.summary.failed
    );
    out
}

const CLIFFORD_SAMPLES: usize = 200;
const SOLUTION_SAMPLES: usize = 20;
const MAPPING_SAMPLES: usize = 20;
const LORENTZ_SAMPLES: usize = 200;

fn clifford_checks(rng: &mut ChaCha8Rng, out: &mut Vec<CheckRecord>) {
    for name in Representation::ALL {
        let rep = build_representation::<Q>(name);
        out.push(check(
            format!("clifford.anticommutators.{name}"),
            "clifford-relations",
            check_clifford(&rep),
            "10 pairs, exact",
        ));
        let g5 = gamma5(&rep);
        let ok = (0..4).all(|mu| anticommutator(&g5, rep.gamma(mu)).is_zero(0.0))
            && &g5 * &g5 == Matrix4::identity();
        out.push(check(
            format!("clifford.chirality.{name}"),
            "chirality-matrix",
            ok,
            "anticommutes with all generators, squares to I",
        ));
    }

    let dirac = build_representation::<Q>(Representation::Dirac);
    let shape = ExprShape::default();
    let mut mismatches = 0;
    let mut unstable = 0;
    for _ in 0..CLIFFORD_SAMPLES {
        let e = random_expr(rng, &shape);
        let f = canonicalize(&e);
        if f.to_matrix(&dirac) != e.evaluate(&dirac) {
            mismatches += 1;
        }
        if canonicalize(&to_expr(&f)) != f {
            unstable += 1;
        }
    }
    out.push(check(
        "clifford.canonical-vs-matrix",
        "plumbing",
        mismatches == 0,
        format!("{CLIFFORD_SAMPLES} random expressions, {mismatches} mismatches"),
    ));
    out.push(check(
        "clifford.canonical-idempotent",
        "plumbing",
        unstable == 0,
        format!("{CLIFFORD_SAMPLES} random expressions, {unstable} unstable"),
    ));

    let searches: [(&str, &str, Vec<Cc>, IndexSubset); 3] = [
        (
            "clifford.solver.unitary-time-reversal",
            "unitary-time-reversal-contract",
            vec![
                Cc::anticommute(0),
                Cc::commute(1),
                Cc::commute(2),
                Cc::commute(3),
            ],
            IndexSubset::from_indices(&[1, 2, 3]),
        ),
        (
            "clifford.solver.antiunitary-time-reversal",
            "antiunitary-time-reversal-contract",
            vec![
                Cc::commute(0),
                Cc::anticommute(1),
                Cc::commute(2),
                Cc::anticommute(3),
            ],
            IndexSubset::from_indices(&[1, 3]),
        ),
        (
            "clifford.solver.chirality",
            "chirality-matrix",
            (0..4).map(Cc::anticommute).collect(),
            IndexSubset::FULL,
        ),
    ];
    for (id, anchor, constraints, expected) in searches {
        let found = monomial_search(&constraints);
        let labels: Vec<_> = found.iter().map(|s| s.monomial_label()).collect();
        out.push(check(
            id,
            anchor,
            found == vec![expected],
            format!("found [{}]", labels.join(", ")),
        ));
    }
}

fn sample_momenta(rng: &mut ChaCha8Rng, n: usize) -> Vec<([Q; 3], Q)> {
    let mut v = vec![rest_frame()];
    v.extend((0..n).map(|_| random_exact_momentum(rng)));
    v
}

fn solution_checks(rng: &mut ChaCha8Rng, out: &mut Vec<CheckRecord>) {
    let momenta = sample_momenta(rng, SOLUTION_SAMPLES);
    let (mut residual_fail, mut chi_fail, mut flip_fail, mut norm_fail) = (0, 0, 0, 0);
    for (p, m) in &momenta {
        for f in Family::ALL {
            let Ok(s) = make_state(f, p.clone(), m.clone()) else {
                residual_fail += 1;
                continue;
            };
            let found = classify(&s, 0.0);
            if !found
                .iter()
                .any(|c| c.reading == Reading::FeynmanStueckelberg)
            {
                residual_fail += 1;
            }
            if f.is_chi() {
                if found.len() != 2 {
                    chi_fail += 1;
                }
                match s.reinterpret_flip() {
                    Ok(t)
                        if t.bispinor() == s.bispinor()
                            && t.norm_factor_squared() == s.norm_factor_squared()
                            && t.interpretation().energy_sign
                                == -s.interpretation().energy_sign
                            && t.interpretation().mass_sign == -s.interpretation().mass_sign => {}
                    _ => flip_fail += 1,
                }
                if *s.norm_factor_squared() <= q(0, 1) {
                    norm_fail += 1;
                }
            }
        }
    }
    let n = momenta.len();
    out.push(check(
        "solutions.residuals",
        "plane-wave-solutions",
        residual_fail == 0,
        format!("{} states over {n} momenta, {residual_fail} nonzero", n * 6),
    ));
    out.push(check(
        "solutions.chi-two-readings",
        "two-readings",
        chi_fail == 0,
        format!("{} chi states, {chi_fail} missing a reading", n * 2),
    ));
    out.push(check(
        "solutions.flip-invariance",
        "simultaneous-sign-flip",
        flip_fail == 0 && norm_fail == 0,
        format!(
            "{} chi states, {flip_fail} changed, {norm_fail} nonpositive norms",
            n * 2
        ),
    ));

    let expected = [
        (Family::PsiPlus1, SpinLabel::Up),
        (Family::PsiPlus2, SpinLabel::Down),
        (Family::ChiPlus1, SpinLabel::Up),
        (Family::ChiPlus2, SpinLabel::Down),
    ];
    let mut spin_ok = true;
    for (p, m) in axial_reference_momenta() {
        for (f, label) in expected {
            let got = make_state(f, p.clone(), m.clone()).and_then(|s| s.s3_check(0.0));
            spin_ok &= got == Ok(Some(label));
        }
    }
    out.push(check(
        "solutions.spin-projection",
        "spin-labels",
        spin_ok,
        "psi1+ +1/2, psi2+ -1/2, chi1+ +1/2, chi2+ -1/2 (measured)",
    ));
}

struct Relation {
    id: &'static str,
    anchor: &'static str,
    op: DiscreteOperator<Q>,
    input: Family,
    output: Family,
    expected: Complex<Q>,
}

fn relations(rep: Representation) -> Vec<Relation> {
    let one = c(q(1, 1), q(0, 1));
    let minus = c(q(-1, 1), q(0, 1));
    let i = c(q(0, 1), q(1, 1));
    let op = |n| make_operator_in::<Q>(n, rep);
    let bare = op(OperatorName::PTAU).with_phase(-i.clone());
    let r = |id, anchor, op, input, output, expected| Relation {
        id,
        anchor,
        op,
        input,
        output,
        expected,
    };
    use Family::*;
    vec![
        r(
            "symmetries.charge-conjugation.psi1",
            "charge-conjugation-mapping",
            op(OperatorName::C),
            PsiPlus1,
            ChiPlus2,
            one.clone(),
        ),
        r(
            "symmetries.charge-conjugation.psi2",
            "charge-conjugation-mapping",
            op(OperatorName::C),
            PsiPlus2,
            ChiPlus1,
            minus.clone(),
        ),
        r(
            "symmetries.antiunitary-pt-bare.psi1",
            "antiunitary-pt-mapping",
            bare.clone(),
            PsiPlus1,
            PsiPlus2,
            minus.clone(),
        ),
        r(
            "symmetries.antiunitary-pt-bare.psi2",
            "antiunitary-pt-mapping",
            bare,
            PsiPlus2,
            PsiPlus1,
            one.clone(),
        ),
        r(
            "symmetries.antiunitary-pt.psi1",
            "antiunitary-pt-mapping",
            op(OperatorName::PTAU),
            PsiPlus1,
            PsiPlus2,
            -i.clone(),
        ),
        r(
            "symmetries.antiunitary-pt.psi2",
            "antiunitary-pt-mapping",
            op(OperatorName::PTAU),
            PsiPlus2,
            PsiPlus1,
            i,
        ),
        r(
            "symmetries.chirality.psi1",
            "unitary-pt-mapping",
            op(OperatorName::PTU),
            PsiPlus1,
            ChiPlus1,
            one.clone(),
        ),
        r(
            "symmetries.chirality.psi2",
            "unitary-pt-mapping",
            op(OperatorName::PTU),
            PsiPlus2,
            ChiPlus2,
            one,
        ),
    ]
}

fn symmetry_checks(rng: &mut ChaCha8Rng, rep: Representation, out: &mut Vec<CheckRecord>) {
    let momenta = sample_momenta(rng, MAPPING_SAMPLES);
    for rel in relations(rep) {
        let mut phases = Vec::new();
        let mut matched = true;
        for (p, m) in &momenta {
            match verify_mapping(&rel.op, rel.input, rel.output, p.clone(), m.clone()) {
                Ok(r) if r.amplitudes_matched => {
                    phases.push(r.phase_found.expect("matched implies phase"))
                }
                _ => matched = false,
            }
        }
        let constant = phases.windows(2).all(|w| w[0] == w[1]);
        let measured = phases
            .first()
            .map_or_else(|| "mismatch".to_string(), format_complex);
        let as_expected = rep != Representation::Dirac || phases.first() == Some(&rel.expected);
        out.push(check(
            rel.id,
            rel.anchor,
            matched && constant && as_expected,
            format!(
                "{} -> {} phase {measured} over {} momenta",
                rel.input,
                rel.output,
                momenta.len()
            ),
        ));
    }

    for name in OperatorName::CATALOG {
        let o = make_operator_in::<Q>(name, rep);
        let unitary = o.matrix().is_unitary(0.0);
        let contract_ok = intertwine_check(&o, Sign::Plus);
        let derived = monomial_search(&contract(&o, Sign::Plus));
        let solver_ok = o
            .matrix_part
            .as_monomial()
            .is_some_and(|(s, _)| derived == vec![s]);
        out.push(check(
            format!("symmetries.catalog.{name}"),
            "operator-catalog",
            unitary && contract_ok && solver_ok,
            format!(
                "matrix part {}, solver found {}",
                o.matrix_part,
                derived
                    .iter()
                    .map(|s| s.monomial_label())
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
        ));
    }
    out.push(check(
        "symmetries.mass-flip",
        "mass-flip-symmetry",
        intertwine_check(&chirality_mass_flip::<Q>(), Sign::Minus),
        "chirality matrix maps the +m equation to the -m equation",
    ));

    let (p, m) = momenta.last().cloned().expect("nonempty");
    let pairs = |name| -> Vec<(Family, Family)> {
        pairing_table(&make_operator_in::<Q>(name, rep), p.clone(), m.clone())
            .map(|t| t.into_iter().map(|r| (r.input, r.output)).collect())
            .unwrap_or_default()
    };
    let cp = pairs(OperatorName::C);
    let crosses = [
        (Family::PsiPlus1, Family::ChiPlus2),
        (Family::PsiPlus2, Family::ChiPlus1),
    ];
    out.push(check(
        "symmetries.pairing.charge-conjugation",
        "spin-sector-crossing",
        crosses.iter().all(|x| cp.contains(x)) && cp.iter().all(|(a, b)| a.sector() != b.sector()),
        "psi1+ -> chi2+, psi2+ -> chi1+",
    ));
    let gp = pairs(OperatorName::PTU);
    let keeps = [
        (Family::PsiPlus1, Family::ChiPlus1),
        (Family::PsiPlus2, Family::ChiPlus2),
    ];
    out.push(check(
        "symmetries.pairing.chirality",
        "spin-sector-preserving",
        keeps.iter().all(|x| gp.contains(x)) && gp.iter().all(|(a, b)| a.sector() == b.sector()),
        "psi1+ -> chi1+, psi2+ -> chi2+",
    ));

    let (parity, tu, ptu, cc) = (
        make_operator_in::<Q>(OperatorName::P, rep),
        make_operator_in::<Q>(OperatorName::TU, rep),
        make_operator_in::<Q>(OperatorName::PTU, rep),
        make_operator_in::<Q>(OperatorName::C, rep),
    );
    let mut phases = Vec::new();
    let mut composed_ok = true;
    let mut involution_ok = true;
    for (p, m) in &momenta {
        for f in Family::ALL {
            let s = make_state(f, p.clone(), m.clone()).expect("constructible");
            match (
                apply(&tu, &s).and_then(|t| apply(&parity, &t)),
                apply(&ptu, &s),
            ) {
                (Ok(a), Ok(b)) => match b.same_wave_as(&a, 0.0) {
                    Some(k) => phases.push(k),
                    None => composed_ok = false,
                },
                _ => composed_ok = false,
            }
            for o in [&parity, &ptu, &cc] {
                let twice = apply(o, &s).and_then(|t| apply(o, &t));
                involution_ok &= twice.is_ok_and(|t| s.same_wave_as(&t, 0.0).is_some());
            }
        }
    }
    let constant = phases.windows(2).all(|w| w[0] == w[1]);
    out.push(check(
        "symmetries.composition",
        "unitary-pt-composition",
        composed_ok && constant,
        format!(
            "P after T_U = ({}) PT_U on all families",
            phases.first().map_or("?".into(), format_complex)
        ),
    ));
    out.push(check(
        "symmetries.involutions",
        "plumbing",
        involution_ok,
        "P, PT_U and C applied twice return the input up to a unit phase",
    ));
}

fn lorentz_checks(rng: &mut ChaCha8Rng, out: &mut Vec<CheckRecord>) {
    type L = LorentzMatrix<Q>;
    let discrete = [
        ("lorentz.parity", L::parity(), ComponentLabel::PARITY),
        (
            "lorentz.time-reversal",
            L::time_reversal(),
            ComponentLabel::TIME,
        ),
        (
            "lorentz.parity-time",
            L::parity_time(),
            ComponentLabel::PARITY_TIME,
        ),
    ];
    for (id, m, expected) in discrete {
        let got = lorentz::classify(m.entries(), 0.0);
        out.push(check(
            id,
            "lorentz-components",
            got == Ok(expected),
            format!("{}", m.label()),
        ));
    }

    let groups: Vec<String> = group_scan()
        .into_iter()
        .filter(|(_, g)| *g)
        .map(|(s, _)| s.to_string())
        .collect();
    out.push(check(
        "lorentz.group-scan",
        "component-groups",
        groups.len() == 5,
        format!(
            "{} of 15 subsets are groups: {}",
            groups.len(),
            groups.join(" ")
        ),
    ));

    let exact = lorentz::boost(3, q(3, 5));
    let boost_ok = exact
        .as_ref()
        .is_ok_and(|b| b.entries()[0][0] == q(5, 4) && b.label() == ComponentLabel::RESTRICTED);
    out.push(check(
        "lorentz.rational-boost",
        "plumbing",
        boost_ok,
        "beta 3/5 gives gamma 5/4",
    ));

    let t = LorentzMatrix::<f64>::time_reversal();
    let pt = LorentzMatrix::<f64>::parity_time();
    let (mut kept, mut flipped, mut invariant) = (0, 0, 0);
    for _ in 0..LORENTZ_SAMPLES {
        let l = random_restricted(rng);
        let v = random_future_timelike(rng);
        let ok_label =
            lorentz::classify(l.entries(), lorentz::FLOAT_TOL) == Ok(ComponentLabel::RESTRICTED);
        let image = l.act(&v);
        if ok_label && image.causal_class(lorentz::FLOAT_TOL) == CausalClass::TimelikeFuture {
            kept += 1;
        }
        let rel = |a: f64, b: f64| (a - b).abs() <= lorentz::FLOAT_TOL * a.abs().max(1.0);
        if rel(v.minkowski_square(), image.minkowski_square()) {
            invariant += 1;
        }
        let mut all_flip = true;
        for d in [&t, &pt] {
            let anti = &l * d;
            all_flip &= anti.label().time_sign == Sign::Minus
                && anti.act(&v).causal_class(lorentz::FLOAT_TOL) == CausalClass::TimelikePast;
        }
        if all_flip {
            flipped += 1;
        }
    }
    out.push(check(
        "lorentz.orthochronous-preserves-cone",
        "light-cone-halves",
        kept == LORENTZ_SAMPLES && invariant == LORENTZ_SAMPLES,
        format!(
            "{kept}/{LORENTZ_SAMPLES} kept the future half, {invariant}/{LORENTZ_SAMPLES} kept v.v"
        ),
    ));
    out.push(check(
        "lorentz.antichronous-flips-cone",
        "light-cone-halves",
        flipped == LORENTZ_SAMPLES,
        format!("{flipped}/{LORENTZ_SAMPLES} moved to the past half"),
    ));
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report_round_trips() {
        let r = SuiteReport::new(Suite::Clifford, 0, Representation::Dirac, vec![]);
        let text = emit(&r, Format::Json);
        assert_eq!(SuiteReport::from_json(&text).unwrap(), r);
        assert!(emit(&r, Format::Markdown).contains("0 checks"));
    }

    #[test]
    fn names_parse() {
        for s in Suite::PARTS {
            assert_eq!(s.as_str().parse::<Suite>().unwrap(), s);
        }
        assert_eq!("md".parse::<Format>().unwrap(), Format::Markdown);
        assert!("xml".parse::<Format>().is_err());
    }

    #[test]
    fn lorentz_suite_passes() {
        let r = run_suite(Suite::Lorentz, 3, Representation::Dirac);
        assert!(r.all_passed(), "{}", emit(&r, Format::Markdown));
    }
}
