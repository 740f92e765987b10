use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use spintor_core::clifford::Spinor;
use spintor_core::forms::AltForm;
use spintor_core::invariants::*;
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

fn su3_setup(seed: u64, class: ClassSet) -> (SpinorJet<Q>, Su3Structure<Q>, IntrinsicPair<Q>) {
    let mut rng = StdRng::seed_from_u64(seed);
    let dir = direction(&mut rng);
    let su3 = Su3Structure::from_direction(dir.clone()).unwrap();
    let pair = su3_pair(class, su3.j(), &mut || rng.random_range(-3..=3)).unwrap();
    (SpinorJet::from_pair(dir, &pair).unwrap(), su3, pair)
}

fn g2_setup(seed: u64, class: ClassSet) -> (SpinorJet<Q>, G2Structure<Q>, IntrinsicPair<Q>) {
    let mut rng = StdRng::seed_from_u64(seed);
    let dir = direction(&mut rng);
    let g2 = G2Structure::from_direction(dir.clone()).unwrap();
    let pair = g2_pair(class, &g2, &mut || rng.random_range(-3..=3)).unwrap();
    (SpinorJet::from_pair(dir, &pair).unwrap(), g2, pair)
}

fn all_su3() -> ClassSet {
    ClassSet::of(&Component::SU3)
}

fn unit(n: usize, i: usize) -> Vec<Q> {
    (0..n)
        .map(|k| if k == i { rat(1, 1) } else { rat(0, 1) })
        .collect()
}

#[test]
fn parallel_jet_has_vanishing_invariants() {
    let mut rng = StdRng::seed_from_u64(1);
    let dir = direction(&mut rng);
    let jet = SpinorJet::parallel(6, dir).unwrap();
    assert!(dirac(&jet).is_zero());
    assert!(delta_omega(&jet).unwrap().iter().all(|v| *v == rat(0, 1)));
    assert!(lee_form(&jet).unwrap().iter().all(|v| *v == rat(0, 1)));
}

#[test]
fn nearly_kahler_dirac_and_d_omega() {
    let mut rng = StdRng::seed_from_u64(2);
    let dir = direction(&mut rng);
    let su3 = Su3Structure::from_direction(dir.clone()).unwrap();
    let lambda = rat(2, 3);
    let pair = IntrinsicPair::su3(su3.j().scale(&lambda), vec![rat(0, 1); 6]);
    let jet = SpinorJet::from_pair(dir, &pair).unwrap();
    // Dφ = 6λjφ
    assert_eq!(
        dirac(&jet),
        spintor_core::j(jet.phi()).scale(&(rat(6, 1) * lambda.clone()))
    );
    let dec = decompose_su3(&pair, su3.j()).unwrap();
    assert_eq!(
        d_omega(&dec, &su3).unwrap(),
        su3.psi_plus().scale(&(rat(6, 1) * lambda))
    );
}

#[test]
fn nijenhuis_matches_the_nabla_j_oracle() {
    for seed in 0..8 {
        let (jet, su3, pair) = su3_setup(100 + seed, all_su3());
        let nabla = nabla_spinor_form(&jet, SpinorForm::Omega);
        let jm = su3.j();
        // g((∇_XJ)Y, Z) = (∇_Xω)(Z, Y)
        let nabla_j = |x: &[Q], y: usize| -> Vec<Q> {
            (0..6)
                .map(|z| {
                    (0..6).fold(rat(0, 1), |acc, a| {
                        acc + x[a].clone() * nabla[a].on_basis(&[z, y])
                    })
                })
                .collect()
        };
        let n = nijenhuis(&pair, &su3);
        assert!(n.is_antisymmetric_in_first_pair());
        for x in 0..6 {
            for y in 0..6 {
                let jx = jm.column(x);
                let jy = jm.column(y);
                let inner: Vec<Q> = nabla_j(&unit(6, x), y)
                    .iter()
                    .zip(nabla_j(&unit(6, y), x))
                    .map(|(a, b)| a.clone() - b)
                    .collect();
                let j_inner = jm.apply(&inner);
                let first: Vec<Q> = nabla_j(&jx, y)
                    .iter()
                    .zip(nabla_j(&jy, x))
                    .map(|(a, b)| a.clone() - b)
                    .collect();
                for z in 0..6 {
                    assert_eq!(
                        *n.get(x, y, z),
                        first[z].clone() - j_inner[z].clone(),
                        "N({x},{y}) at e{z}"
                    );
                }
            }
        }
    }
}

#[test]
fn nijenhuis_without_chi2_is_a_three_form() {
    let class = ClassSet::of(&[
        Component::Chi1,
        Component::Chi1Bar,
        Component::Chi3,
        Component::Chi4,
        Component::Chi5,
    ]);
    for seed in 0..6 {
        let (_, su3, pair) = su3_setup(200 + seed, class);
        let dec = decompose_su3(&pair, su3.j()).unwrap();
        let expected = &su3.psi_minus().scale(&(rat(8, 1) * dec.lambda.clone()))
            - &su3.psi_plus().scale(&(rat(8, 1) * dec.mu.clone()));
        assert_eq!(nijenhuis(&pair, &su3).to_form().unwrap(), expected);
    }
}

#[test]
fn chi2_makes_nijenhuis_non_skew() {
    let (_, su3, pair) = su3_setup(300, ClassSet::of(&[Component::Chi2]));
    assert!(nijenhuis(&pair, &su3).to_form().is_err());
}

#[test]
fn harmonic_criterion_on_projected_jets() {
    let mut rng = StdRng::seed_from_u64(400);
    for _ in 0..50 {
        let dir = direction(&mut rng);
        let su3 = Su3Structure::from_direction(dir.clone()).unwrap();
        let generic = su3_pair(all_su3(), su3.j(), &mut || rng.random_range(-3..=3)).unwrap();
        let pair = harmonic_projection(&dir, &generic).unwrap();
        let jet = SpinorJet::from_pair(dir, &pair).unwrap();
        let report = harmonic_su3(&jet, 0.0).unwrap();
        assert!(report.dirac_zero);
        assert!(
            !report.class.contains(Component::Chi1) && !report.class.contains(Component::Chi1Bar)
        );
        assert!(report
            .delta_omega_plus_two_eta
            .iter()
            .all(|v| *v == rat(0, 1)));
        assert!(report.consistent());
    }
}

#[test]
fn harmonic_g2_criterion() {
    let class = ClassSet::of(&[Component::W2, Component::W3]);
    for seed in 0..5 {
        let (jet, _, _) = g2_setup(500 + seed, class);
        let report = harmonic_g2(&jet, 0.0).unwrap();
        assert!(report.dirac_zero && report.consistent());
    }
    let (jet, _, _) = g2_setup(510, ClassSet::of(&[Component::W1]));
    assert!(!harmonic_g2(&jet, 0.0).unwrap().dirac_zero);
}

#[test]
fn nabla_psi_matches_the_product_rule() {
    for seed in 0..6 {
        let (jet, g2, pair) = g2_setup(600 + seed, ClassSet::of(&Component::G2));
        let oracle = nabla_spinor_form(&jet, SpinorForm::Psi);
        for (v, expected) in oracle.iter().enumerate() {
            assert_eq!(nabla_psi_g2(&pair, &g2, &unit(7, v)), *expected);
        }
        delta_psi_g2(&jet).unwrap();
    }
}

#[test]
fn dimension_guards() {
    let (jet7, _, _) = g2_setup(700, ClassSet::of(&[Component::W1]));
    assert!(delta_omega(&jet7).is_err());
    let (jet6, _, _) = su3_setup(701, all_su3());
    assert!(delta_psi_g2(&jet6).is_err());
    assert!(harmonic_g2(&jet6, 0.0).is_err());
}

#[test]
fn cyclic_form_of_identity_is_three_times_the_form() {
    let mut rng = StdRng::seed_from_u64(800);
    let su3 = Su3Structure::from_direction(direction(&mut rng)).unwrap();
    let f: &AltForm<Q> = su3.psi_plus();
    assert_eq!(cyclic_form(f, &Matrix::identity(6)), f.scale(&rat(3, 1)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn nabla_omega_matches_the_product_rule(seed in any::<u64>()) {
        let (jet, su3, pair) = su3_setup(seed, all_su3());
        prop_assert_eq!(nabla_omega(&pair, &su3), nabla_spinor_form(&jet, SpinorForm::Omega));
    }

    #[test]
    fn dirac_expansion_holds(seed in any::<u64>()) {
        let (jet, _, _) = su3_setup(seed, all_su3());
        prop_assert_eq!(dirac_expansion(&jet).unwrap(), dirac(&jet));
    }

    #[test]
    fn closed_formulas_pass_their_oracles(seed in any::<u64>()) {
        let (jet, su3, pair) = su3_setup(seed, all_su3());
        let dec = decompose_su3(&pair, su3.j()).unwrap();
        prop_assert!(d_omega(&dec, &su3).is_ok());
        prop_assert!(lee_form(&jet).is_ok());
    }

    #[test]
    fn projection_is_idempotent(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let dir = direction(&mut rng);
        let su3 = Su3Structure::from_direction(dir.clone()).unwrap();
        let pair = su3_pair(all_su3(), su3.j(), &mut || rng.random_range(-3..=3)).unwrap();
        let once = harmonic_projection(&dir, &pair).unwrap();
        prop_assert_eq!(harmonic_projection(&dir, &once).unwrap(), once);
    }
}
