use liecurv::catalog::{self, g1, g2, nikonorov4, nikonorov5};
use liecurv::complex::{
    adapted_check, adapted_sampling_integrability, compatibility_check, integrability_check, nijenhuis,
    superminimal_check, AlmostComplexStructure, CompatibilityCheck,
};
use liecurv::curvature::{einstein_check, ricci, EinsteinVerdict};
use liecurv::foliation::{
    classify, coordinate_subalgebra_scan, oneill_a, oneill_identity_check, ricci_condition_check,
    second_fundamental_form, subalgebra_check, FoliationSplit, SubalgebraCheck,
};
use liecurv::linalg::basis_vector;
use liecurv::obstruction::{paired_eigenvalue_test, ObstructionVerdict, SpectralData};
use liecurv::poly::ExactPolynomial;
use liecurv::roots::SpectrumEntry;
use liecurv::wedge::{
    block_split, curvature_operator, hermitian_w_check, mixed_block, theta_independence_check, HermitianCheck,
    ThetaCheck, ThetaIdentity, WedgeBasis,
};
use liecurv::Scalar;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn s(t: &str) -> Scalar {
    t.parse().unwrap()
}

fn split(alg: &liecurv::MetricLieAlgebra, list: &str) -> FoliationSplit {
    FoliationSplit::parse(alg, list).unwrap()
}

#[test]
fn nikonorov5_is_einstein_and_obstructed() {
    let alg = nikonorov5();
    assert_eq!(
        einstein_check(&alg).unwrap(),
        EinsteinVerdict::Einstein { constant: s("-1") }
    );
    let report = paired_eigenvalue_test(&alg).unwrap();
    assert_eq!(report.verdict, ObstructionVerdict::Obstructed);
    assert_eq!(report.full_operator.gcd, ExactPolynomial::linear(&s("4/15")));
    assert_eq!(report.full_operator.gcd.to_string(), "x-4/15");
    let repeated: Vec<&SpectrumEntry> = report
        .full_operator
        .spectrum
        .iter()
        .filter(|e| e.multiplicity > 1)
        .collect();
    assert_eq!(repeated.len(), 1);
    assert!((repeated[0].value - 4.0 / 15.0).abs() < 1e-10);
    assert!(report.full_operator.spectrum_complete());
    assert!(report.w_blocks.is_empty());
}

#[test]
fn nikonorov5_subalgebras() {
    let alg = nikonorov5();
    assert!(subalgebra_check(&alg, &split(&alg, "A,X2,X4")).is_closed());
    assert!(subalgebra_check(&alg, &split(&alg, "X2,X3,X4")).is_closed());
    match subalgebra_check(&alg, &split(&alg, "X1,X2,A")) {
        SubalgebraCheck::NotClosed {
            u: 1,
            v: 2,
            k: 3,
            coeff,
        } => assert_eq!(coeff, s("1/3*sqrt(6)")),
        other => panic!("{other:?}"),
    }
}

#[test]
fn nikonorov5_scan_narrative() {
    let alg = nikonorov5();
    let scan = coordinate_subalgebra_scan(&alg).unwrap();
    assert_eq!(scan.len(), 10);
    let find = |v: &[usize]| scan.iter().find(|e| e.vertical == v).unwrap().flags.clone();
    let tg = find(&[0, 2, 4]);
    assert!(tg.subalgebra && tg.totally_geodesic && !tg.is_conformal());
    let conf = find(&[2, 3, 4]);
    assert!(conf.subalgebra && conf.is_conformal() && !conf.minimal && !conf.totally_geodesic);
    // No coordinate split is both conformal and totally geodesic.
    assert!(!scan
        .iter()
        .any(|e| e.flags.subalgebra && e.flags.totally_geodesic && e.flags.is_conformal()));
}

#[test]
fn nikonorov5_theta_witness() {
    let alg = nikonorov5();
    let q = curvature_operator(&alg, &WedgeBasis::lexicographic(5)).unwrap();
    assert!(block_split(&q, &[2, 3, 4]).unwrap().is_invariant());
    match theta_independence_check(&q, &[2, 3, 4]).unwrap() {
        ThetaCheck::Fails {
            u: 2,
            v: 2,
            identity: ThetaIdentity::EqualDiagonal,
            lhs,
            rhs,
        } => {
            assert_eq!(lhs, s("4/30"));
            assert_eq!(rhs, s("17/30"));
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn nikonorov4_pipeline() {
    let alg = nikonorov4();
    assert_eq!(
        einstein_check(&alg).unwrap(),
        EinsteinVerdict::Einstein { constant: s("-1") }
    );
    let sp = split(&alg, "A,X3,X4");
    let flags = classify(&alg, &sp).unwrap();
    assert!(flags.subalgebra && flags.totally_geodesic && flags.minimal && !flags.riemannian);
    let nu = flags.conformal.unwrap().nu;
    assert_eq!(nu, vec![s("-4/33*sqrt(33)"), s("0"), s("0")]);

    let a = oneill_a(&alg, &sp).unwrap();
    assert!(a.first_identity_holds && a.antisymmetry_holds);
    let mut expected = basis_vector(5, 0);
    expected[0] = s("2/33*sqrt(33)");
    assert_eq!(a.grad_ln_lambda, expected);
    let mut a12 = vec![Scalar::zero(); 5];
    a12[3] = s("1/6*sqrt(6)");
    assert_eq!(a.get(1, 2), &a12);
    // ν(V) = −2 V(ln λ)
    assert_eq!(
        nu[0],
        a.grad_ln_lambda[0].scale(&num_rational::BigRational::from_integer((-2).into()))
    );

    let q = curvature_operator(&alg, &WedgeBasis::lexicographic(5)).unwrap();
    assert!(theta_independence_check(&q, &[0, 3, 4]).unwrap().holds());
    assert!(block_split(&q, &[0, 3, 4]).unwrap().is_invariant());

    let block = mixed_block(&q, &[0, 3, 4]).unwrap();
    let spec = SpectralData::of(&block.restriction, 1e-12).unwrap();
    let vals: Vec<(f64, usize)> = spec.spectrum.iter().map(|e| (e.value, e.multiplicity)).collect();
    let want = [(-3.0 / 66.0, 2), (12.0 / 66.0, 2), (16.0 / 66.0, 2)];
    assert_eq!(vals.len(), 3);
    for ((v, m), (w, k)) in vals.iter().zip(want) {
        assert!((v - w).abs() < 1e-10);
        assert_eq!(*m, k);
    }

    match hermitian_w_check(&q, &[0, 3, 4]).unwrap() {
        HermitianCheck::Commutes(data) => {
            assert!(data.determinants_agree());
            assert_eq!(data.hermitian_char_poly.pow(2), spec.charpoly);
        }
        other => panic!("{other:?}"),
    }

    let report = paired_eigenvalue_test(&alg).unwrap();
    assert_eq!(report.verdict, ObstructionVerdict::Passes);
    assert_eq!(report.full_operator.gcd_degree, 3);
    let repeats: usize = report.full_operator.spectrum.iter().map(|e| e.multiplicity - 1).sum();
    assert_eq!(repeats, 3);
    assert_eq!(report.full_operator.spectrum.len(), 7);
    assert_eq!(report.w_blocks.len(), 1);
    assert_eq!(report.w_blocks[0].vertical, vec![0, 3, 4]);

    let rc = ricci_condition_check(&alg, &sp).unwrap();
    assert!(rc.holds());
    let ids = oneill_identity_check(&alg, &sp).unwrap();
    assert!(ids.second_fundamental_form_identity.holds());
    let third = ids.integrability_tensor_identity.unwrap();
    assert!(third.holds());
    assert_eq!(third.checked, 3 * 3 * 2 * 2);
}

#[test]
fn nikonorov5_tg_split_second_identity() {
    let alg = nikonorov5();
    let ids = oneill_identity_check(&alg, &split(&alg, "A,X2,X4")).unwrap();
    assert!(ids.second_fundamental_form_identity.holds());
    assert!(ids.integrability_tensor_identity.is_none());
}

#[test]
fn g1_family() {
    for n in 2..=5 {
        let alg = g1(n).unwrap();
        let ric = ricci(&alg).unwrap();
        assert_eq!(ric.get(0, 0) - ric.get(1, 1), Scalar::ratio(1 - n as i64, 2), "n = {n}");
        let sp = FoliationSplit::new(n + 2, &(2..n + 2).collect::<Vec<_>>()).unwrap();
        let b = second_fundamental_form(&alg, &sp).unwrap();
        assert_eq!(b.component(2, 3, 0), &s("1/2"));
        assert_eq!(b.component(3, 2, 0), &s("1/2"));
        assert!(!ricci_condition_check(&alg, &sp).unwrap().holds());
        assert!(!classify(&alg, &sp).unwrap().totally_geodesic);
    }
}

#[test]
fn g1_bracket_shortcut_has_opposite_sign() {
    let alg = g1(2).unwrap();
    assert_eq!(liecurv::foliation::b_bracket_shortcut(&alg, 2, 3, 0), s("-1/2"));
}

fn random_alpha(rng: &mut ChaCha8Rng, n: usize, tail_zero: bool) -> Vec<Scalar> {
    (0..n)
        .map(|k| {
            if tail_zero && k > 0 {
                Scalar::zero()
            } else {
                Scalar::ratio(rng.gen_range(-9..=9), rng.gen_range(1..=7))
            }
        })
        .collect()
}

#[test]
fn g2_family() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for trial in 0..24 {
        let n = 2 + trial % 4;
        let alpha = random_alpha(&mut rng, n, trial % 3 == 0);
        let alg = g2(&alpha).unwrap();
        let ric = ricci(&alg).unwrap();
        let sum: Scalar = alpha.iter().cloned().sum();
        let sq: Scalar = alpha.iter().map(Scalar::square).sum();
        assert_eq!(ric.get(1, 1), &-(&alpha[0] * &sum));
        assert_eq!(ric.get(0, 0), &-sq);
        assert!(ric.get(0, 1).is_zero());
        let sp = FoliationSplit::new(n + 1, &(2..=n).collect::<Vec<_>>()).unwrap();
        let tg = second_fundamental_form(&alg, &sp).unwrap().is_zero();
        assert_eq!(tg, alpha[1..].iter().all(Scalar::is_zero));
        if tg {
            assert!(ricci_condition_check(&alg, &sp).unwrap().holds());
            let q = curvature_operator(&alg, &WedgeBasis::lexicographic(n + 1)).unwrap();
            assert!(theta_independence_check(&q, sp.vertical()).unwrap().holds());
        }
    }
}

#[test]
fn g1_adapted_structure() {
    let alg = g1(2).unwrap();
    let sp = split(&alg, "X2,X3");
    let j = AlmostComplexStructure::from_images(4, &[(0, 1, 1), (2, 3, 1)]).unwrap();
    assert!(adapted_check(&j, &sp).unwrap().is_adapted());
    let nw = nijenhuis(&alg, &j, &basis_vector(4, 0), &basis_vector(4, 3));
    assert_eq!(nw, basis_vector(4, 2));
    let nj = nijenhuis(&alg, &j.negated(), &basis_vector(4, 0), &basis_vector(4, 3));
    // N_J is quadratic in J.
    assert_eq!(nj, nw);
    let check = integrability_check(&alg, &j).unwrap();
    assert!(!check.is_integrable());
    assert!(check.fails_on(0, 3));
    assert!(matches!(
        compatibility_check(&alg, &j, &sp).unwrap(),
        CompatibilityCheck::Fails { .. }
    ));
    assert!(!superminimal_check(&alg, &j, &sp).unwrap().is_superminimal());
}

#[test]
fn g1_sampling_finds_no_integrable_structure() {
    for (n, seed) in [(2, 7), (4, 99)] {
        let alg = g1(n).unwrap();
        let sp = FoliationSplit::new(n + 2, &(2..n + 2).collect::<Vec<_>>()).unwrap();
        let report = adapted_sampling_integrability(&alg, &sp, 100, seed).unwrap();
        assert_eq!(report.integrable, 0);
        assert_eq!(report.target, n + 1);
        assert!(report.certificates.iter().all(|c| c.reduction_holds && c.nonzero));
    }
}

#[test]
fn abelian_sampling_all_integrable() {
    let alg = catalog::build(
        "abelian",
        &catalog::CatalogParams {
            dim: Some(6),
            ..Default::default()
        },
    )
    .unwrap();
    let sp = FoliationSplit::new(6, &[2, 3, 4, 5]).unwrap();
    let report = adapted_sampling_integrability(&alg, &sp, 20, 1).unwrap();
    assert_eq!(report.integrable, 20);
}

#[test]
fn g1_not_applicable_for_obstruction() {
    let report = paired_eigenvalue_test(&g1(2).unwrap()).unwrap();
    assert!(matches!(report.verdict, ObstructionVerdict::NotApplicable { .. }));
}
