use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use spintor_core::clifford::Spinor;
use spintor_core::connections::*;
use spintor_core::forms::AltForm;
use spintor_core::invariants::{delta_omega, exterior_derivative, nabla_spinor_form, SpinorForm};
use spintor_core::linalg::Matrix;
use spintor_core::scalar::{rat, Rational};
use spintor_core::structure::{G2Structure, SpinorDirection, Su3Structure};
use spintor_core::torsion::samples::{g2_pair, su3_pair};
use spintor_core::torsion::*;

type Q = Rational;

fn direction(rng: &mut StdRng) -> SpinorDirection<Q> {
    loop {
        let v: [i64; 8] = std::array::from_fn(|_| rng.random_range(-3..=3));
        if v.iter().any(|&x| x != 0) {
            return SpinorDirection::new(Spinor::from_i64(v)).unwrap();
        }
    }
}

fn zero6() -> Vec<Q> {
    vec![rat(0, 1); 6]
}

/// A jet of class inside χ₁₁̄₃₄₅ with `4η = δω`.
fn characteristic_jet(rng: &mut StdRng) -> (SpinorJet<Q>, Su3Structure<Q>) {
    let dir = direction(rng);
    let su3 = Su3Structure::from_direction(dir.clone()).unwrap();
    let class = ClassSet::of(&[
        Component::Chi1,
        Component::Chi1Bar,
        Component::Chi3,
        Component::Chi4,
    ]);
    let s = su3_pair(class, su3.j(), &mut || rng.random_range(-3..=3))
        .unwrap()
        .s;
    let eta = characteristic_eta(&dir, &s).unwrap();
    (
        SpinorJet::from_pair(dir, &IntrinsicPair::su3(s, eta)).unwrap(),
        su3,
    )
}

#[test]
fn characteristic_connection_annihilates_on_su3_jets() {
    let mut rng = StdRng::seed_from_u64(1);
    for _ in 0..20 {
        let (jet, _) = characteristic_jet(&mut rng);
        let dw = delta_omega(&jet).unwrap();
        let eta = extract_intrinsic(&jet).unwrap().eta_or_zero();
        assert!(dw
            .iter()
            .zip(&eta)
            .all(|(d, e)| *d == rat(4, 1) * e.clone()));
        let report = characteristic_su3(&jet, 0.0).unwrap();
        assert!(report.exists(), "{:?}", report.obstructions);
        assert!(annihilates(&jet, &report.torsion).unwrap());
    }
}

#[test]
fn wrong_eta_is_an_obstruction() {
    let mut rng = StdRng::seed_from_u64(2);
    let dir = direction(&mut rng);
    let pair = IntrinsicPair::su3(
        Matrix::identity(6),
        vec![
            rat(1, 1),
            rat(0, 1),
            rat(0, 1),
            rat(0, 1),
            rat(0, 1),
            rat(0, 1),
        ],
    );
    let jet = SpinorJet::from_pair(dir, &pair).unwrap();
    let report = characteristic_su3(&jet, 0.0).unwrap();
    assert!(report.class_ok && !report.eta_ok && !report.exists());
    assert_eq!(report.obstructions.len(), 1);
}

#[test]
fn chi2_is_an_obstruction() {
    let mut rng = StdRng::seed_from_u64(3);
    let dir = direction(&mut rng);
    let su3 = Su3Structure::from_direction(dir.clone()).unwrap();
    let pair = su3_pair(ClassSet::of(&[Component::Chi2Bar]), su3.j(), &mut || {
        rng.random_range(-3..=3)
    })
    .unwrap();
    let report = characteristic_su3(&SpinorJet::from_pair(dir, &pair).unwrap(), 0.0).unwrap();
    assert!(!report.class_ok && !report.exists());
}

#[test]
fn su3_torsion_examples() {
    let mut rng = StdRng::seed_from_u64(4);
    let dir = direction(&mut rng);
    let su3 = Su3Structure::from_direction(dir.clone()).unwrap();
    let lambda = rat(3, 2);
    let nk = IntrinsicPair::su3(su3.j().scale(&lambda), zero6());
    let dec = decompose_su3(&nk, su3.j()).unwrap();
    assert_eq!(
        characteristic_torsion_su3(&dec, &su3),
        su3.psi_minus().scale(&(rat(2, 1) * lambda))
    );
    let jet = SpinorJet::from_pair(dir.clone(), &nk).unwrap();
    assert!(characteristic_exists_su3(&jet, 0.0).unwrap());

    let mu = rat(-1, 3);
    let killing = IntrinsicPair::su3(Matrix::identity(6).scale(&mu), zero6());
    let dec = decompose_su3(&killing, su3.j()).unwrap();
    assert_eq!(
        characteristic_torsion_su3(&dec, &su3),
        su3.psi_plus().scale(&(rat(-2, 1) * mu))
    );

    let zero = SpinorJet::parallel(6, dir).unwrap();
    let report = characteristic_su3(&zero, 0.0).unwrap();
    assert!(report.exists() && report.torsion.is_zero());
}

#[test]
fn dirac_kernel_equivalences_on_characteristic_jets() {
    let mut rng = StdRng::seed_from_u64(5);
    let chi3 = ClassSet::of(&[Component::Chi3]);
    let mut jets: Vec<(SpinorJet<Q>, Su3Structure<Q>)> =
        (0..10).map(|_| characteristic_jet(&mut rng)).collect();
    for _ in 0..5 {
        let dir = direction(&mut rng);
        let su3 = Su3Structure::from_direction(dir.clone()).unwrap();
        let pair = su3_pair(chi3, su3.j(), &mut || rng.random_range(-3..=3)).unwrap();
        jets.push((SpinorJet::from_pair(dir, &pair).unwrap(), su3));
    }
    let mut saw_kernel = false;
    for (jet, _) in &jets {
        let report = characteristic_su3(jet, 0.0).unwrap();
        assert!(report.exists());
        let dirac_zero = jet.dirac().is_zero();
        let t_phi_zero = jet
            .gamma()
            .form_apply(&report.torsion, jet.phi())
            .unwrap()
            .is_zero();
        let in_chi3 = classify_jet(jet, 0.0).unwrap().is_subset(chi3);
        assert_eq!(dirac_zero, t_phi_zero);
        assert_eq!(dirac_zero, in_chi3);
        saw_kernel |= dirac_zero;
    }
    assert!(saw_kernel);
}

#[test]
fn g2_characteristic_torsion_annihilates() {
    let class = ClassSet::of(&[Component::W1, Component::W3, Component::W4]);
    let mut rng = StdRng::seed_from_u64(6);
    for _ in 0..10 {
        let dir = direction(&mut rng);
        let g2 = G2Structure::from_direction(dir.clone()).unwrap();
        let pair = g2_pair(class, &g2, &mut || rng.random_range(-3..=3)).unwrap();
        let jet = SpinorJet::from_pair(dir, &pair).unwrap();
        let dec = decompose_g2(&pair.s, &g2).unwrap();
        let t = characteristic_torsion_g2(&dec, &g2).unwrap();
        assert!(annihilates(&jet, &t).unwrap());
        // the customary −1/3 prefactor does not annihilate
        assert!(!annihilates(&jet, &t.scale(&rat(-3, 2))).unwrap());
    }
}

#[test]
fn g2_examples_and_w2_rejection() {
    let mut rng = StdRng::seed_from_u64(7);
    let dir = direction(&mut rng);
    let g2 = G2Structure::from_direction(dir.clone()).unwrap();
    let lambda = rat(1, 2);
    let dec = decompose_g2(&Matrix::identity(7).scale(&lambda), &g2).unwrap();
    // cyclic sum of a 3-form triples it: (2/9)·3·2λ·Ψ
    assert_eq!(
        characteristic_torsion_g2(&dec, &g2).unwrap(),
        g2.psi().scale(&(rat(4, 3) * lambda))
    );
    let zero = decompose_g2(&Matrix::zeros(7, 7), &g2).unwrap();
    assert!(characteristic_torsion_g2(&zero, &g2).unwrap().is_zero());
    let w2 = g2_pair(ClassSet::of(&[Component::W2]), &g2, &mut || {
        rng.random_range(-3..=3)
    })
    .unwrap();
    let dec = decompose_g2(&w2.s, &g2).unwrap();
    assert!(characteristic_torsion_g2(&dec, &g2).is_err());
}

#[test]
fn sigma_t_is_eight_times_star_omega_and_half_dt() {
    let mut rng = StdRng::seed_from_u64(8);
    for _ in 0..10 {
        let dir = direction(&mut rng);
        let su3 = Su3Structure::from_direction(dir.clone()).unwrap();
        let lambda = rat(rng.random_range(-4..=4), rng.random_range(1..=3));
        let mu = rat(rng.random_range(-4..=4), rng.random_range(1..=3));
        let t = &su3.psi_minus().scale(&(rat(2, 1) * lambda.clone()))
            - &su3.psi_plus().scale(&(rat(2, 1) * mu.clone()));
        let sigma = sigma_t(&t).unwrap();
        let norm = lambda.clone() * lambda.clone() + mu.clone() * mu.clone();
        assert_eq!(sigma, su3.star_omega().scale(&(rat(8, 1) * norm)));

        let s = &su3.j().scale(&lambda) + &Matrix::identity(6).scale(&mu);
        let jet = SpinorJet::from_pair(dir, &IntrinsicPair::su3(s, zero6())).unwrap();
        let d_minus = exterior_derivative(&nabla_spinor_form(&jet, SpinorForm::PsiMinus)).unwrap();
        let d_plus = exterior_derivative(&nabla_spinor_form(&jet, SpinorForm::PsiPlus)).unwrap();
        let dt = &d_minus.scale(&(rat(2, 1) * lambda)) - &d_plus.scale(&(rat(2, 1) * mu));
        assert_eq!(sigma, dt.scale(&rat(1, 2)));
    }
}

#[test]
fn sigma_t_of_zero_and_degree_guard() {
    assert!(sigma_t(&AltForm::<Q>::zero(3, 6)).unwrap().is_zero());
    assert!(sigma_t(&AltForm::<Q>::zero(2, 6)).is_err());
}

#[test]
fn nabla_s_family_and_gkst() {
    let mut rng = StdRng::seed_from_u64(9);
    let dir = direction(&mut rng);
    let su3 = Su3Structure::from_direction(dir.clone()).unwrap();
    let mu = rat(-2, 3);
    let pair = IntrinsicPair::su3(Matrix::identity(6).scale(&mu), zero6());
    let jet = SpinorJet::from_pair(dir.clone(), &pair).unwrap();
    let t = su3.psi_plus().scale(&(rat(-2, 1) * mu.clone()));

    assert_eq!(nabla_s_family(&jet, &t, &rat(0, 1)).unwrap(), jet);
    assert_eq!(
        nabla_s_family(&jet, &AltForm::zero(3, 6), &rat(1, 2)).unwrap(),
        jet
    );
    assert!(nabla_s_family(&jet, &t, &rat(1, 4))
        .unwrap()
        .dphi()
        .iter()
        .all(Spinor::is_zero));

    for s in [rat(0, 1), rat(1, 8), rat(1, 4), rat(3, 5)] {
        let report = gkst_check(&jet, &t, &s).unwrap();
        assert!(report.is_gkst);
        let factor = mu.clone() * (rat(1, 1) - rat(4, 1) * s);
        assert_eq!(report.a.unwrap(), Matrix::identity(6).scale(&factor));
    }

    let nk =
        SpinorJet::from_pair(dir.clone(), &IntrinsicPair::su3(su3.j().clone(), zero6())).unwrap();
    assert!(
        !gkst_check(&nk, &AltForm::zero(3, 6), &rat(0, 1))
            .unwrap()
            .is_gkst
    );

    let s3 = su3_pair(ClassSet::of(&[Component::Chi3]), su3.j(), &mut || {
        rng.random_range(-3..=3)
    })
    .unwrap();
    let report = gkst_check(
        &SpinorJet::from_pair(dir, &s3).unwrap(),
        &AltForm::zero(3, 6),
        &rat(0, 1),
    )
    .unwrap();
    assert!(report.is_gkst);
    assert_eq!(report.a.unwrap(), s3.s);
}

#[test]
fn l_form_identity_for_random_weingarten_maps() {
    let mut rng = StdRng::seed_from_u64(10);
    for k in 0..20 {
        let dir = direction(&mut rng);
        let su3 = Su3Structure::from_direction(dir).unwrap();
        let class = if k % 2 == 0 {
            ClassSet::of(&[Component::Chi1Bar])
        } else {
            ClassSet::of(&[Component::Chi1Bar, Component::Chi3])
        };
        let w = su3_pair(class, su3.j(), &mut || rng.random_range(-3..=3))
            .unwrap()
            .s;
        hypersurface_l_form(&w, &su3).unwrap();
    }
    let mut rng = StdRng::seed_from_u64(11);
    let su3 = Su3Structure::from_direction(direction(&mut rng)).unwrap();
    let mu = rat(5, 2);
    assert_eq!(
        hypersurface_l_form(&Matrix::identity(6).scale(&mu), &su3).unwrap(),
        su3.psi_plus().scale(&-mu)
    );
    assert!(hypersurface_l_form(&Matrix::zeros(6, 6), &su3)
        .unwrap()
        .is_zero());
    let w2bar = su3_pair(ClassSet::of(&[Component::Chi2Bar]), su3.j(), &mut || {
        rng.random_range(-3..=3)
    })
    .unwrap()
    .s;
    assert!(hypersurface_l_form(&w2bar, &su3).is_err());
}

#[test]
fn torsion_type_examples() {
    let mut rng = StdRng::seed_from_u64(12);
    let dir = direction(&mut rng);
    let su3 = Su3Structure::from_direction(dir.clone()).unwrap();
    let nk = IntrinsicPair::su3(su3.j().scale(&rat(2, 1)), zero6());
    let report = torsion_type(&xi_map(&nk, &su3).unwrap()).unwrap();
    assert!(report.skew_norm > rat(0, 1));
    assert_eq!(
        (report.vectorial_norm, report.cyclic_traceless_norm),
        (rat(0, 1), rat(0, 1))
    );

    let chi4 = su3_pair(ClassSet::of(&[Component::Chi4]), su3.j(), &mut || {
        rng.random_range(-3..=3)
    })
    .unwrap();
    let report = torsion_type(&xi_map(&chi4, &su3).unwrap()).unwrap();
    assert!(
        report.vectorial_norm > rat(0, 1)
            && report.skew_norm > rat(0, 1)
            && report.cyclic_traceless_norm > rat(0, 1)
    );

    let zero = torsion_type(&xi_map(&IntrinsicPair::zero(6), &su3).unwrap()).unwrap();
    assert_eq!(
        zero.vectorial_norm + zero.skew_norm + zero.cyclic_traceless_norm,
        rat(0, 1)
    );

    assert!(TorsionTensor::<Q>::from_fn(6, |x, y, z| rat((x + y + z) as i64, 1)).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn canonical_connection_annihilates_every_jet(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let dir = direction(&mut rng);
        let su3 = Su3Structure::from_direction(dir).unwrap();
        let pair = su3_pair(ClassSet::of(&Component::SU3), su3.j(), &mut || rng.random_range(-3..=3)).unwrap();
        prop_assert!(xi_map(&pair, &su3).is_ok());
    }

    #[test]
    fn torsion_split_is_orthogonal(values in proptest::collection::vec(-3i64..=3, 6 * 15)) {
        // one 2-form per slot, entries over the 15 pairs
        let pairs = spintor_core::forms::combinations(6, 2);
        let a = TorsionTensor::from_fn(6, |x, y, z| {
            if y == z { return rat(0, 1); }
            let (lo, hi, sign) = if y < z { (y, z, 1) } else { (z, y, -1) };
            let k = pairs.iter().position(|p| p[0] == lo && p[1] == hi).unwrap();
            rat(sign * values[x * 15 + k], 1)
        }).unwrap();
        let split = torsion_split(&a);
        let report = torsion_type(&a).unwrap();
        prop_assert_eq!(report, split.report());
        // the cyclic traceless part is traceless and has no skew part
        let rest = &split.cyclic_traceless;
        for z in 0..6 {
            let trace = (0..6).fold(rat(0, 1), |acc, i| acc + rest.get(i, i, z).clone());
            prop_assert_eq!(trace, rat(0, 1));
        }
        prop_assert!(torsion_split(rest).skew.is_zero());
    }
}
