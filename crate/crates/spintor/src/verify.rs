//! Named verification suites. Every check is exact unless it concerns a cone,
//! where samples are transcendental and a `1e-9` tolerance applies.

use std::path::PathBuf;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::Value;
use spintor_core::clifford::{GammaBasis, Spinor};
use spintor_core::connections::{
    annihilates, characteristic_eta, characteristic_su3, characteristic_torsion_g2, gkst_check,
    hypersurface_l_form, nabla_s_family, sigma_t,
};
use spintor_core::forms::AltForm;
use spintor_core::hypersurface::{
    clifford_restriction_check, restrict_pair, sbar_embed, spin_cone_sbar, twisted_cone_residuals,
    twisted_cone_torsion, ConeSpec, PhaseFn, ScaleFn, WeingartenSpec, WeingartenType, EMBED_TABLE,
    RESTRICT_TABLE,
};
use spintor_core::identities::{g2_identities, su3_identities, IdentityCheck};
use spintor_core::invariants::{
    delta_omega, exterior_derivative, harmonic_projection, harmonic_su3, nabla_spinor_form,
    SpinorForm,
};
use spintor_core::scalar::FLOAT_TOLERANCE;
use spintor_core::structure::{G2Structure, SpinorDirection, Su3Structure};
use spintor_core::torsion::samples::{g2_component, g2_pair, su3_component, su3_pair};
use spintor_core::torsion::{
    decompose_g2, decompose_su3, extract_intrinsic, g2_projectors, su3_projectors, ClassSet,
    Component, IntrinsicPair, SpinorJet,
};
use spintor_core::{rat, Matrix, Rational, Scalar};

use crate::cone::{sweep, ConeInput};
use crate::error::{CliError, Result};
use crate::input::StructureInput;
use crate::value::{parse_form, parse_matrix, parse_vector};

type Q = Rational;

/// Suites in the order `verify` runs them.
pub const SUITES: [&str; 12] = [
    "clifford",
    "identities-su3",
    "identities-g2",
    "example-u8",
    "nilmanifold-anchor",
    "decomposition",
    "harmonic",
    "characteristic",
    "sigma",
    "tables",
    "cone",
    "gkst",
];

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub passed: bool,
    pub detail: Option<String>,
}

impl std::fmt::Display for Check {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}:{}", self.suite, self.name)?;
        if let Some(d) = &self.detail {
            write!(f, " ({d})")?;
        }
        Ok(())
    }
}

/// Golden data: compiled in, or read from a directory when overridden.
#[derive(Clone, Debug, Default)]
pub struct Fixtures {
    pub dir: Option<PathBuf>,
}

impl Fixtures {
    pub fn from_dir(dir: impl Into<PathBuf>) -> Self {
        Self {
            dir: Some(dir.into()),
        }
    }

    fn embedded(name: &str) -> Option<&'static str> {
        Some(match name {
            "psi_plus_u8.json" => include_str!("../fixtures/psi_plus_u8.json"),
            "psi_u8.json" => include_str!("../fixtures/psi_u8.json"),
            "star_psi_u8.json" => include_str!("../fixtures/star_psi_u8.json"),
            "nilmanifold.json" => include_str!("../fixtures/nilmanifold.json"),
            "nilmanifold_expected.json" => include_str!("../fixtures/nilmanifold_expected.json"),
            "sine_cone.json" => include_str!("../fixtures/sine_cone.json"),
            "case_c_cone.json" => include_str!("../fixtures/case_c_cone.json"),
            _ => return None,
        })
    }

    pub fn text(&self, name: &str) -> Result<String> {
        match &self.dir {
            Some(dir) => {
                let path = dir.join(name);
                std::fs::read_to_string(&path).map_err(|source| CliError::Read { path, source })
            }
            None => Self::embedded(name)
                .map(str::to_owned)
                .ok_or_else(|| CliError::input(format!("no fixture {name}"))),
        }
    }

    fn json<T: for<'de> serde::Deserialize<'de>>(&self, name: &str) -> Result<T> {
        serde_json::from_str(&self.text(name)?)
            .map_err(|e| CliError::input(format!("fixture {name}: {e}")))
    }
}

struct Suite {
    name: &'static str,
    checks: Vec<Check>,
}

impl Suite {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            checks: Vec::new(),
        }
    }

    fn check(&mut self, name: &str, passed: bool) {
        self.checks.push(Check {
            suite: self.name,
            name: name.into(),
            passed,
            detail: None,
        });
    }

    fn check_with(&mut self, name: &str, passed: bool, detail: String) {
        let detail = (!passed).then_some(detail);
        self.checks.push(Check {
            suite: self.name,
            name: name.into(),
            passed,
            detail,
        });
    }
}

/// Runs one suite, or all of them. An unknown name is an input error. A core
/// failure inside a suite is recorded as a failed check.
pub fn run(selection: Option<&str>, fixtures: &Fixtures) -> Result<Vec<Check>> {
    let names: Vec<&'static str> = match selection {
        None => SUITES.to_vec(),
        Some(s) => vec![*SUITES.iter().find(|n| **n == s).ok_or_else(|| {
            CliError::input(format!("unknown suite {s:?}; known: {}", SUITES.join(", ")))
        })?],
    };
    let mut out = Vec::new();
    for name in names {
        out.extend(run_suite(name, fixtures)?);
    }
    Ok(out)
}

pub fn run_suite(name: &'static str, fixtures: &Fixtures) -> Result<Vec<Check>> {
    let mut suite = Suite::new(name);
    let outcome = match name {
        "clifford" => clifford(&mut suite),
        "identities-su3" => identities(&mut suite, true),
        "identities-g2" => identities(&mut suite, false),
        "example-u8" => example_u8(&mut suite, fixtures),
        "nilmanifold-anchor" => nilmanifold(&mut suite, fixtures),
        "decomposition" => decomposition(&mut suite),
        "harmonic" => harmonic(&mut suite),
        "characteristic" => characteristic(&mut suite),
        "sigma" => sigma(&mut suite),
        "tables" => tables(&mut suite),
        "cone" => cone(&mut suite, fixtures),
        "gkst" => gkst(&mut suite),
        other => return Err(CliError::input(format!("unknown suite {other:?}"))),
    };
    match outcome {
        Ok(()) => {}
        Err(CliError::Core(e)) => suite.check_with("error", false, e.to_string()),
        Err(e) => return Err(e),
    }
    Ok(suite.checks)
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}

fn direction(rng: &mut StdRng) -> SpinorDirection<Q> {
    loop {
        let v: [i64; 8] = std::array::from_fn(|_| rng.random_range(-3..=3));
        if v.iter().any(|&x| x != 0) {
            return SpinorDirection::new(Spinor::from_i64(v)).expect("nonzero spinor");
        }
    }
}

fn u8_direction() -> SpinorDirection<Q> {
    SpinorDirection::new(Spinor::basis(8)).expect("u8 is a unit spinor")
}

fn small(rng: &mut StdRng) -> i64 {
    rng.random_range(-3..=3)
}

// wide draws keep table representatives away from accidental zeros
fn wide(rng: &mut StdRng) -> i64 {
    rng.random_range(-40..=40)
}

fn unit(n: usize, i: usize) -> Vec<Q> {
    (0..n)
        .map(|k| if k == i { rat(1, 1) } else { rat(0, 1) })
        .collect()
}

fn clifford(suite: &mut Suite) -> Result<()> {
    for gamma in [GammaBasis::six(), GammaBasis::seven()] {
        let n = gamma.dim();
        let id = Matrix::<Q>::identity(8);
        let mut ok = true;
        for a in 1..=n {
            for b in 1..=n {
                let (ea, eb) = (gamma.matrix::<Q>(a)?, gamma.matrix::<Q>(b)?);
                let anti = &(&ea * &eb) + &(&eb * &ea);
                let want = if a == b {
                    id.scale(&rat(-2, 1))
                } else {
                    Matrix::zeros(8, 8)
                };
                ok &= anti == want;
            }
        }
        suite.check(&format!("anticommutation-{n}"), ok);
    }
    let seven = GammaBasis::seven();
    suite.check(
        "volume-7",
        (1..=8).all(|k| seven.volume_apply(&Spinor::<Q>::basis(k)) == Spinor::basis(k)),
    );
    suite.check(
        "hypersurface-restriction",
        clifford_restriction_check(&Spinor::<Q>::basis(8))?.passed(),
    );
    Ok(())
}

/// Identities on `u₈` and 100 seeded random spinors, aggregated per name.
fn identities(suite: &mut Suite, six: bool) -> Result<()> {
    let mut rng = StdRng::seed_from_u64(if six { 21 } else { 22 });
    let mut spinors = vec![Spinor::<Q>::basis(8)];
    spinors.extend((0..100).map(|_| direction(&mut rng).spinor().clone()));
    let mut tally: Vec<(&'static str, bool)> = Vec::new();
    for phi in &spinors {
        let checks: Vec<IdentityCheck> = if six {
            su3_identities(phi)?
        } else {
            g2_identities(phi)?
        };
        for c in checks {
            match tally.iter_mut().find(|(n, _)| *n == c.name) {
                Some(entry) => entry.1 &= c.passed,
                None => tally.push((c.name, c.passed)),
            }
        }
    }
    for (name, passed) in tally {
        suite.check(name, passed);
    }
    Ok(())
}

fn example_u8(suite: &mut Suite, fixtures: &Fixtures) -> Result<()> {
    let dir = u8_direction();
    let su3 = Su3Structure::from_direction(dir.clone())?;
    let g2 = G2Structure::from_direction(dir)?;
    let j = su3.j();
    let neg = |v: Vec<Q>| v.into_iter().map(|x| -x).collect::<Vec<_>>();
    suite.check("j-e1", j.column(0) == neg(unit(6, 1)));
    suite.check("j-e3", j.column(2) == unit(6, 3));
    suite.check("j-e5", j.column(4) == unit(6, 5));
    let golden = |name: &str, degree, dim| -> Result<AltForm<Q>> {
        parse_form(&fixtures.json(name)?, degree, dim)
    };
    suite.check(
        "psi-plus",
        *su3.psi_plus() == golden("psi_plus_u8.json", 3, 6)?,
    );
    suite.check("psi", *g2.psi() == golden("psi_u8.json", 3, 7)?);
    suite.check(
        "star-psi",
        *g2.star_psi() == golden("star_psi_u8.json", 4, 7)?,
    );
    Ok(())
}

fn nilmanifold(suite: &mut Suite, fixtures: &Fixtures) -> Result<()> {
    let input: StructureInput = fixtures.json("nilmanifold.json")?;
    let expected: Value = fixtures.json("nilmanifold_expected.json")?;
    let field = |k: &str| {
        expected
            .get(k)
            .ok_or_else(|| CliError::input(format!("expected-value fixture lacks {k:?}")))
    };
    let as_rows = |v: &Value| -> Result<Vec<Vec<Value>>> { Ok(serde_json::from_value(v.clone())?) };
    let as_list = |v: &Value| -> Result<Vec<Value>> { Ok(serde_json::from_value(v.clone())?) };

    let jet = input.jet()?;
    let pair = extract_intrinsic(&jet)?;
    let eta = pair.eta_or_zero();
    suite.check("s", pair.s == parse_matrix(&as_rows(field("s")?)?, 6, "s")?);
    suite.check(
        "eta",
        eta == parse_vector(&as_list(field("eta")?)?, 6, "eta")?,
    );
    let dirac_zero = jet.dirac().is_zero();
    suite.check(
        "dirac-zero",
        Some(dirac_zero) == field("dirac_zero")?.as_bool(),
    );
    let class = spintor_core::torsion::classify_jet(&jet, 0.0)?;
    let tokens: Vec<String> = serde_json::from_value(field("class")?.clone())?;
    suite.check(
        "class",
        ClassSet::from_tokens(&tokens).is_ok_and(|c| c == class),
    );
    let dw = delta_omega(&jet)?;
    let minus_two_eta: Vec<Q> = eta.iter().map(|e| rat(-2, 1) * e.clone()).collect();
    suite.check(
        "delta-omega",
        dw == parse_vector(&as_list(field("delta_omega")?)?, 6, "delta_omega")?,
    );
    suite.check("delta-omega-is-minus-two-eta", dw == minus_two_eta);
    suite.check("harmonic-consistent", harmonic_su3(&jet, 0.0)?.consistent());
    let exists = characteristic_su3(&jet, 0.0)?.exists();
    suite.check(
        "characteristic",
        Some(exists) == field("characteristic_exists")?.as_bool(),
    );
    Ok(())
}

fn decomposition(suite: &mut Suite) -> Result<()> {
    let dir = u8_direction();
    let su3 = Su3Structure::from_direction(dir.clone())?;
    let g2 = G2Structure::from_direction(dir)?;
    let su3_ranks: Vec<usize> = su3_projectors(su3.j())?
        .iter()
        .map(|(_, p)| p.rank())
        .collect();
    suite.check_with(
        "su3-ranks",
        su3_ranks == [1, 1, 8, 8, 12, 6],
        format!("{su3_ranks:?}"),
    );
    let g2_ranks: Vec<usize> = g2_projectors(&g2)?.iter().map(|(_, p)| p.rank()).collect();
    suite.check_with(
        "g2-ranks",
        g2_ranks == [1, 14, 27, 7],
        format!("{g2_ranks:?}"),
    );

    let mut rng = StdRng::seed_from_u64(23);
    let (mut su3_ok, mut g2_ok) = (true, true);
    for _ in 0..10 {
        let dir = direction(&mut rng);
        let su3 = Su3Structure::from_direction(dir.clone())?;
        let pair = su3_pair(ClassSet::of(&Component::SU3), su3.j(), &mut || {
            small(&mut rng)
        })?;
        su3_ok &= decompose_su3(&pair, su3.j())?.compose() == pair;
        let g2 = G2Structure::from_direction(dir)?;
        let s = g2_pair(ClassSet::of(&Component::G2), &g2, &mut || small(&mut rng))?.s;
        g2_ok &= decompose_g2(&s, &g2)?.compose().s == s;
    }
    suite.check("su3-reassembles", su3_ok);
    suite.check("g2-reassembles", g2_ok);
    Ok(())
}

fn harmonic(suite: &mut Suite) -> Result<()> {
    let mut rng = StdRng::seed_from_u64(24);
    let (mut kernel, mut no_chi1, mut identity) = (true, true, true);
    for _ in 0..50 {
        let dir = direction(&mut rng);
        let su3 = Su3Structure::from_direction(dir.clone())?;
        let generic = su3_pair(ClassSet::of(&Component::SU3), su3.j(), &mut || {
            small(&mut rng)
        })?;
        let jet = SpinorJet::from_pair(dir.clone(), &harmonic_projection(&dir, &generic)?)?;
        let report = harmonic_su3(&jet, 0.0)?;
        kernel &= report.dirac_zero;
        no_chi1 &=
            !report.class.contains(Component::Chi1) && !report.class.contains(Component::Chi1Bar);
        identity &= report
            .delta_omega_plus_two_eta
            .iter()
            .all(Scalar::is_near_zero);
    }
    suite.check("projected-dirac-zero", kernel);
    suite.check("no-chi1-components", no_chi1);
    suite.check("delta-omega-plus-two-eta", identity);
    Ok(())
}

fn characteristic(suite: &mut Suite) -> Result<()> {
    let mut rng = StdRng::seed_from_u64(25);
    let class = ClassSet::of(&[
        Component::Chi1,
        Component::Chi1Bar,
        Component::Chi3,
        Component::Chi4,
    ]);
    let mut ok = true;
    for _ in 0..20 {
        let dir = direction(&mut rng);
        let su3 = Su3Structure::from_direction(dir.clone())?;
        let s = su3_pair(class, su3.j(), &mut || small(&mut rng))?.s;
        let eta = characteristic_eta(&dir, &s)?;
        let jet = SpinorJet::from_pair(dir, &IntrinsicPair::su3(s, eta))?;
        let report = characteristic_su3(&jet, 0.0)?;
        ok &= report.exists() && annihilates(&jet, &report.torsion)?;
    }
    suite.check("su3-annihilation", ok);

    let class = ClassSet::of(&[Component::W1, Component::W3, Component::W4]);
    let mut ok = true;
    for _ in 0..10 {
        let dir = direction(&mut rng);
        let g2 = G2Structure::from_direction(dir.clone())?;
        let pair = g2_pair(class, &g2, &mut || small(&mut rng))?;
        let jet = SpinorJet::from_pair(dir, &pair)?;
        let t = characteristic_torsion_g2(&decompose_g2(&pair.s, &g2)?, &g2)?;
        ok &= annihilates(&jet, &t)?;
    }
    suite.check("g2-annihilation", ok);
    Ok(())
}

/// `T = 2λψ⁻ − 2μψ⁺`: `σ_T = 8(λ² + μ²)·*ω`, and `σ_T = ½dT` on the jet.
fn sigma(suite: &mut Suite) -> Result<()> {
    let mut rng = StdRng::seed_from_u64(26);
    let (mut star, mut half_dt) = (true, true);
    for _ in 0..10 {
        let dir = direction(&mut rng);
        let su3 = Su3Structure::from_direction(dir.clone())?;
        let lambda = rat(rng.random_range(-4..=4), rng.random_range(1..=3));
        let mu = rat(rng.random_range(-4..=4), rng.random_range(1..=3));
        let t = &su3.psi_minus().scale(&(rat(2, 1) * lambda.clone()))
            - &su3.psi_plus().scale(&(rat(2, 1) * mu.clone()));
        let sigma = sigma_t(&t)?;
        let norm = lambda.clone() * lambda.clone() + mu.clone() * mu.clone();
        star &= sigma == su3.star_omega().scale(&(rat(8, 1) * norm));
        let s = &su3.j().scale(&lambda) + &Matrix::identity(6).scale(&mu);
        let jet = SpinorJet::from_pair(dir, &IntrinsicPair::su3(s, vec![rat(0, 1); 6]))?;
        let d_minus = exterior_derivative(&nabla_spinor_form(&jet, SpinorForm::PsiMinus))?;
        let d_plus = exterior_derivative(&nabla_spinor_form(&jet, SpinorForm::PsiPlus))?;
        let dt = &d_minus.scale(&(rat(2, 1) * lambda)) - &d_plus.scale(&(rat(2, 1) * mu));
        half_dt &= sigma == dt.scale(&rat(1, 2));
    }
    suite.check("eight-star-omega", star);
    suite.check("half-dt", half_dt);
    Ok(())
}

fn weingarten(kind: WeingartenType, j: &Matrix<Q>, rng: &mut StdRng) -> Result<WeingartenSpec<Q>> {
    let c = match kind {
        WeingartenType::Zero => return Ok(WeingartenSpec::zero()),
        WeingartenType::I => Component::Chi1Bar,
        WeingartenType::II => Component::Chi2Bar,
        WeingartenType::III => Component::Chi3,
    };
    let w = su3_component(c, j, &mut || wide(rng))?.s;
    Ok(WeingartenSpec::new(w, kind, j)?)
}

/// Five representatives per cell of both transfer tables.
fn tables(suite: &mut Suite) -> Result<()> {
    let mut rng = StdRng::seed_from_u64(27);
    let mut embed_bad = Vec::new();
    let mut restrict_bad = Vec::new();
    for (row, kind) in WeingartenType::ALL.into_iter().enumerate() {
        for (col, c) in Component::SU3.into_iter().enumerate() {
            for _ in 0..5 {
                let dir = direction(&mut rng);
                let su3 = Su3Structure::from_direction(dir.clone())?;
                let g2 = G2Structure::from_direction(dir)?;
                let w = weingarten(kind, su3.j(), &mut rng)?;
                let pair = su3_component(c, su3.j(), &mut || wide(&mut rng))?;
                let sbar = sbar_embed(&pair, w.matrix(), su3.j())?;
                if decompose_g2(&sbar, &g2)?.classify(0.0) != EMBED_TABLE[row][col] {
                    embed_bad.push(format!("{}/{}", kind.token(), c.token()));
                }
            }
        }
        for (col, c) in Component::G2.into_iter().enumerate() {
            for _ in 0..5 {
                let dir = direction(&mut rng);
                let su3 = Su3Structure::from_direction(dir.clone())?;
                let g2 = G2Structure::from_direction(dir)?;
                let w = weingarten(kind, su3.j(), &mut rng)?;
                let sbar = g2_component(c, &g2, &mut || wide(&mut rng))?;
                let pair = restrict_pair(&sbar, w.matrix(), su3.j());
                if decompose_su3(&pair, su3.j())?.classify(0.0) != RESTRICT_TABLE[row][col] {
                    restrict_bad.push(format!("{}/{}", kind.token(), c.token()));
                }
            }
        }
    }
    suite.check_with("embed", embed_bad.is_empty(), embed_bad.join(", "));
    suite.check_with("restrict", restrict_bad.is_empty(), restrict_bad.join(", "));
    Ok(())
}

fn distance(a: &Matrix<f64>, b: &Matrix<f64>) -> f64 {
    (a - b).norm_sq().sqrt()
}

fn cone(suite: &mut Suite, fixtures: &Fixtures) -> Result<()> {
    let w1 = ClassSet::of(&[Component::W1]);
    let half = Matrix::identity(7).scale(&0.5);
    let sine = sweep(&fixtures.json::<ConeInput>("sine_cone.json")?)?;
    let worst = sine
        .iter()
        .map(|s| distance(&s.sbar, &half))
        .fold(0.0, f64::max);
    suite.check_with(
        "sine-cone",
        sine.len() == 50 && worst < FLOAT_TOLERANCE && sine.iter().all(|s| s.class == w1),
        format!("max |S̄ - Id/2| = {worst:e}"),
    );

    let case_c = sweep(&fixtures.json::<ConeInput>("case_c_cone.json")?)?;
    let worst = case_c
        .iter()
        .map(|s| s.sbar.norm_sq().sqrt())
        .fold(0.0, f64::max);
    suite.check_with(
        "case-c",
        worst < FLOAT_TOLERANCE && case_c.iter().all(|s| s.class.is_empty()),
        format!("max |S̄| = {worst:e}"),
    );

    // case (a): S = μId + R with R in χ₂̄ and f = −2μt
    let mut rng = StdRng::seed_from_u64(28);
    let dir = direction(&mut rng);
    let su3 = Su3Structure::from_direction(dir.clone())?;
    let jm = su3.j().map(Scalar::to_f64);
    let mu = -0.5;
    let r = su3_component(Component::Chi2Bar, su3.j(), &mut || small(&mut rng))?
        .s
        .map(Scalar::to_f64);
    let s = &Matrix::identity(6).scale(&mu) + &r;
    let dec = decompose_su3(&IntrinsicPair::su3(s, vec![0.0; 6]), &jm)?;
    let g2 = G2Structure::from_direction(SpinorDirection::new(dir.spinor().map(Scalar::to_f64))?)?;
    let spec = ConeSpec {
        f: ScaleFn::Affine {
            slope: -2.0 * mu,
            intercept: 0.0,
        },
        h: PhaseFn::Constant,
        samples: (1..=20).map(|k| 0.2 * k as f64).collect(),
    };
    let mut ok = true;
    for &t in &spec.samples {
        let sbar = spin_cone_sbar(&dec, &spec, t)?;
        let expected = (&jm * &r).scale(&(-1.0 / (2.0 * mu * t)));
        let upper = Matrix::from_fn(6, 6, |a, b| *sbar.get(a, b));
        ok &= distance(&upper, &expected) < FLOAT_TOLERANCE;
        ok &= decompose_g2(&sbar, &g2)?.classify(FLOAT_TOLERANCE) == ClassSet::of(&[Component::W2]);
    }
    suite.check("case-a", ok);

    // nearly Kähler data with T = 2λψ⁻: T̄ = a²t²(T − aψ⁺) is parallel on the cone
    let mut ok = true;
    for _ in 0..3 {
        let dir = direction(&mut rng);
        let su3 = Su3Structure::from_direction(dir.clone())?;
        let lambda = rat(rng.random_range(1..=4), rng.random_range(1..=3));
        let a = rat(rng.random_range(1..=4), rng.random_range(1..=3));
        let jet = SpinorJet::from_pair(
            dir,
            &IntrinsicPair::su3(su3.j().scale(&lambda), vec![rat(0, 1); 6]),
        )?;
        let t_form = su3.psi_minus().scale(&(rat(2, 1) * lambda));
        for t in [rat(1, 2), rat(2, 1)] {
            let t_bar = twisted_cone_torsion(&t_form, su3.psi_plus(), &a, &t)?;
            ok &= twisted_cone_residuals(&jet, &t_bar, &a, &t)?
                .iter()
                .all(Spinor::is_zero);
        }
    }
    suite.check("twisted-cone", ok);
    Ok(())
}

fn gkst(suite: &mut Suite) -> Result<()> {
    let mut rng = StdRng::seed_from_u64(29);
    let quarter = rat(1, 4);
    let class = ClassSet::of(&[
        Component::Chi1,
        Component::Chi1Bar,
        Component::Chi3,
        Component::Chi4,
    ]);
    let mut ok = true;
    for _ in 0..10 {
        let dir = direction(&mut rng);
        let su3 = Su3Structure::from_direction(dir.clone())?;
        let s = su3_pair(class, su3.j(), &mut || small(&mut rng))?.s;
        let eta = characteristic_eta(&dir, &s)?;
        let jet = SpinorJet::from_pair(dir, &IntrinsicPair::su3(s, eta))?;
        let t = characteristic_su3(&jet, 0.0)?.torsion;
        ok &= nabla_s_family(&jet, &t, &quarter)?
            .dphi()
            .iter()
            .all(Spinor::is_zero);
    }
    suite.check("quarter-parallel", ok);

    // S = μId, T = −2μψ⁺: ∇ˢφ = μ(1 − 4s)·Xφ
    let dir = direction(&mut rng);
    let su3 = Su3Structure::from_direction(dir.clone())?;
    let mu = rat(-2, 3);
    let jet = SpinorJet::from_pair(
        dir,
        &IntrinsicPair::su3(Matrix::identity(6).scale(&mu), vec![rat(0, 1); 6]),
    )?;
    let t = su3.psi_plus().scale(&(rat(-2, 1) * mu.clone()));
    let mut ok = true;
    for s in [rat(0, 1), rat(1, 8), rat(1, 4), rat(3, 5)] {
        let report = gkst_check(&jet, &t, &s)?;
        let factor = mu.clone() * (rat(1, 1) - rat(4, 1) * s);
        ok &= report.is_gkst && report.a == Some(Matrix::identity(6).scale(&factor));
    }
    suite.check("killing-family", ok);

    // hypersurface_l_form errors unless (X⌟L)φ = −2W(X)φ holds
    let mut passed = 0;
    for k in 0..20 {
        let su3 = Su3Structure::from_direction(direction(&mut rng))?;
        let class = if k % 2 == 0 {
            ClassSet::of(&[Component::Chi1Bar])
        } else {
            ClassSet::of(&[Component::Chi1Bar, Component::Chi3])
        };
        let w = su3_pair(class, su3.j(), &mut || small(&mut rng))?.s;
        passed += usize::from(hypersurface_l_form(&w, &su3).is_ok());
    }
    suite.check_with("l-form", passed == 20, format!("{passed}/20"));
    Ok(())
}
