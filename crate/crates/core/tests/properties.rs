use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use gammakit::clifford::random::{random_expr, ExprShape};
use gammakit::clifford::{canonicalize, parse, to_expr, GammaExpr};
use gammakit::gamma::{build_representation, Representation};
use gammakit::lorentz::{boost, rotation, FourVector, LorentzMatrix};
use gammakit::matrix::c;
use gammakit::momenta::{random_axial_momentum, random_exact_momentum};
use gammakit::planewave::{make_state, Family};
use gammakit::residual::{assemble, classify};
use gammakit::scalar::{q, Rational, Sign};
use gammakit::symmetry::{apply, make_operator, OperatorName};

type Q = Rational;

fn small_shape() -> ExprShape {
    ExprShape {
        max_depth: 3,
        max_product_len: 5,
        max_sum_len: 3,
        scalar_bound: 4,
    }
}

fn expr(seed: u64) -> GammaExpr<Q> {
    random_expr(&mut ChaCha8Rng::seed_from_u64(seed), &small_shape())
}

fn rational() -> impl Strategy<Value = Q> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| q(n, d))
}

fn family() -> impl Strategy<Value = Family> {
    prop::sample::select(Family::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_form_is_a_homomorphism(a in any::<u64>(), b in any::<u64>()) {
        let (x, y) = (expr(a), expr(b));
        let (fx, fy) = (canonicalize(&x), canonicalize(&y));
        prop_assert_eq!(canonicalize(&x.clone().times(y.clone())), &fx * &fy);
        prop_assert_eq!(canonicalize(&x.plus(y)), &fx + &fy);
    }

    #[test]
    fn canonicalize_is_idempotent(seed in any::<u64>()) {
        let f = canonicalize(&expr(seed));
        prop_assert_eq!(canonicalize(&to_expr(&f)), f);
    }

    #[test]
    fn printed_expressions_parse_back(seed in any::<u64>()) {
        let e = expr(seed);
        let back = parse::<Q>(&e.to_string()).unwrap();
        prop_assert_eq!(canonicalize(&back), canonicalize(&e));
    }

    #[test]
    fn canonical_matrix_round_trip(seed in any::<u64>()) {
        let f = canonicalize(&expr(seed));
        for name in Representation::ALL {
            let rep = build_representation::<Q>(name);
            prop_assert_eq!(gammakit::clifford::CanonicalForm::from_matrix(&f.to_matrix(&rep), &rep), f.clone());
        }
    }

    #[test]
    fn determinant_is_shell_squared(e in rational(), p in [rational(), rational(), rational()], m in rational(), minus in any::<bool>()) {
        let s = if minus { Sign::Minus } else { Sign::Plus };
        let op = assemble(e, p, m, s);
        prop_assert_eq!(op.determinant(), op.expected_determinant());
    }

    #[test]
    fn classification_ignores_rescaling(seed in any::<u64>(), f in family(), re in -5i64..=5, im in -5i64..=5) {
        prop_assume!(re != 0 || im != 0);
        let (p, m) = random_exact_momentum(&mut ChaCha8Rng::seed_from_u64(seed));
        let s = make_state(f, p, m).unwrap();
        let scaled = s.clone().rescaled(&c(q(re, 1), q(im, 1)));
        let tags = |st| classify(st, 0.0).into_iter().map(|c| (c.equation_tag, c.reading)).collect::<Vec<_>>();
        prop_assert_eq!(tags(&s), tags(&scaled));
    }

    #[test]
    fn families_are_orthogonal_within_a_sign(seed in any::<u64>()) {
        let (p, m) = random_exact_momentum(&mut ChaCha8Rng::seed_from_u64(seed));
        for (a, b) in [(Family::PsiPlus1, Family::PsiPlus2), (Family::ChiPlus1, Family::ChiPlus2)] {
            let x = make_state(a, p.clone(), m.clone()).unwrap();
            let y = make_state(b, p.clone(), m.clone()).unwrap();
            prop_assert!(x.bispinor().inner(y.bispinor()).re == q(0, 1) && x.bispinor().inner(y.bispinor()).im == q(0, 1));
        }
    }

    #[test]
    fn spin_projection_is_measured_on_axis(seed in any::<u64>()) {
        let (p, m) = random_axial_momentum(&mut ChaCha8Rng::seed_from_u64(seed));
        for f in Family::ALL {
            let s = make_state(f, p.clone(), m.clone()).unwrap();
            prop_assert!(s.s3_check(0.0).unwrap().is_some());
        }
    }

    #[test]
    fn parity_after_time_reversal_is_chirality(seed in any::<u64>()) {
        let (p, m) = random_exact_momentum(&mut ChaCha8Rng::seed_from_u64(seed));
        let (pa, tu, g5) = (
            make_operator::<Q>(OperatorName::P),
            make_operator::<Q>(OperatorName::TU),
            make_operator::<Q>(OperatorName::PTU),
        );
        let mut phases = Vec::new();
        for f in Family::ALL {
            let s = make_state(f, p.clone(), m.clone()).unwrap();
            let a = apply(&pa, &apply(&tu, &s).unwrap()).unwrap();
            let b = apply(&g5, &s).unwrap();
            phases.push(b.same_wave_as(&a, 0.0).expect("same wave"));
        }
        prop_assert!(phases.windows(2).all(|w| w[0] == w[1]));
        prop_assert_eq!(&phases[0], &c(q(0, 1), q(-1, 1)));
    }

    #[test]
    fn exact_maps_keep_the_interval(num in 1i64..=6, axis in 1usize..=3, v in [rational(), rational(), rational(), rational()]) {
        // (u²−v²)/(u²+v²) with v = 1 is a velocity with a rational Lorentz factor
        let beta = q(num * num - 1, num * num + 1);
        let l: LorentzMatrix<Q> = &boost(axis, beta).unwrap() * &rotation(axis % 3 + 1, q(3, 5), q(-4, 5)).unwrap();
        let x = FourVector(v);
        prop_assert_eq!(l.act(&x).minkowski_square(), x.minkowski_square());
        prop_assert_eq!(LorentzMatrix::<Q>::with_tol(l.entries().clone(), 0.0).unwrap().label(), l.label());
    }
}
