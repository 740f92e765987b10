//! Mixed-class characterizations by spinorial field equations.
//!
//! Each row pairs a class with equations on the jet. The equations are
//! evaluated literally on the jet; the tests cross-check every row against
//! [`super::decompose`] on jets with prescribed components.

use alloc::vec::Vec;

use crate::clifford::{j, GammaBasis, Spinor};
use crate::error::Result;
use crate::linalg::Matrix;
use crate::scalar::Scalar;
use crate::structure::{cross, G2Structure, Su3Structure};

use super::classes::{ClassSet, Component::*};
use super::jet::{extract_intrinsic, SpinorJet};

/// A class together with the equations characterizing it. The row holds when
/// any one alternative has all of its conditions satisfied.
#[derive(Clone, Copy, Debug)]
pub struct TableRow<C: 'static> {
    pub class: ClassSet,
    pub equations: &'static str,
    pub alternatives: &'static [&'static [C]],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Su3Condition {
    /// `∇_Xφ = λ X jφ` for some constant `λ`.
    KillingJ,
    /// `∇_Xφ = μ Xφ` for some constant `μ`.
    KillingId,
    /// `∇_Xφ = λ X jφ + μ Xφ` for some constants.
    KillingBoth,
    /// `(JY ∇_Xφ, φ) = −(Y ∇_{JX}φ, φ)`.
    JCommuting,
    /// `(JY ∇_Xφ, φ) = +(Y ∇_{JX}φ, φ)`.
    JAnticommuting,
    /// `(Y ∇_Xφ, jφ) = +(X ∇_Yφ, jφ)`.
    JPairingSymmetric,
    /// `(Y ∇_Xφ, jφ) = −(X ∇_Yφ, jφ)`.
    JPairingSkew,
    LambdaZero,
    MuZero,
    EtaZero,
    /// `∇_Xφ = (∇_Xφ, jφ) jφ`.
    PureEta,
    DiracZero,
    /// `(Dφ, Xφ) = 0`.
    DiracPerpVectors,
    /// `(Dφ, X jφ) = η(X)`.
    DiracMatchesEta,
    /// `(X ∇_Yφ, φ) = (Y ∇_Xφ, φ)`.
    Symmetric,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum G2Condition {
    /// `∇_Xφ = λ Xφ` for some constant `λ`.
    KillingId,
    /// `∇_{X×Y}φ = Y∇_Xφ − X∇_Yφ + 2g(Y,S(X))φ`.
    CrossEquation,
    /// `∇_{X×Y}φ = Y∇_Xφ − X∇_Yφ + g(Y,S(X))φ − g(X,S(Y))φ − λ(X×Y)φ`.
    CrossEquationTwisted,
    /// `(X ∇_Yφ, φ) = (Y ∇_Xφ, φ)`.
    Symmetric,
    /// `(X ∇_Yφ, φ) = −(Y ∇_Xφ, φ)`.
    SkewSymmetric,
    LambdaZero,
    /// `∇_Xφ = XVφ + g(V,X)φ` for some vector `V`.
    VectorType,
    /// `∇_Xφ = XVWφ − (XVWφ, φ)φ` for some vectors `V, W`.
    BivectorType,
    /// `Sφ := Σ g(e_i, S e_j) e_i e_j φ = 0`.
    SphiZero,
    DiracZero,
    /// `(Sφ, Xφ) = 0`.
    SphiPerpVectors,
    /// `Dφ = −7λφ`.
    DiracKilling,
    /// `3(Xφ, ∇_Yφ) − 3(Yφ, ∇_Xφ) = (Sφ, XYφ)`.
    ContractionEquation,
    /// `(Y ∇_Xφ, φ) + (X ∇_Yφ, φ) = −2λ g(X,Y)`.
    SymmetrizedTrace,
    /// `3(Xφ, ∇_Yφ) − 3(Yφ, ∇_Xφ) = (Sφ, XYφ) − 7λ g(X,Y)`.
    ContractionEquationTraced,
}

use G2Condition as G;
use Su3Condition as U;

pub const SU3_TABLE: [TableRow<Su3Condition>; 21] = [
    TableRow {
        class: ClassSet::of(&[Chi1]),
        equations: "∇_Xφ = λ X jφ for λ ∈ ℝ",
        alternatives: &[&[U::KillingJ]],
    },
    TableRow {
        class: ClassSet::of(&[Chi1Bar]),
        equations: "∇_Xφ = μ Xφ for μ ∈ ℝ",
        alternatives: &[&[U::KillingId]],
    },
    TableRow {
        class: ClassSet::of(&[Chi2]),
        equations: "(JY∇_Xφ,φ) = −(Y∇_{JX}φ,φ), (Y∇_Xφ,jφ) = +(X∇_Yφ,jφ), λ = η = 0",
        alternatives: &[&[
            U::JCommuting,
            U::JPairingSymmetric,
            U::LambdaZero,
            U::EtaZero,
        ]],
    },
    TableRow {
        class: ClassSet::of(&[Chi2Bar]),
        equations: "(JY∇_Xφ,φ) = −(Y∇_{JX}φ,φ), (Y∇_Xφ,jφ) = −(X∇_Yφ,jφ), μ = η = 0",
        alternatives: &[&[U::JCommuting, U::JPairingSkew, U::MuZero, U::EtaZero]],
    },
    TableRow {
        class: ClassSet::of(&[Chi3]),
        equations: "(JY∇_Xφ,φ) = +(Y∇_{JX}φ,φ), (Y∇_Xφ,jφ) = +(X∇_Yφ,jφ), η = 0",
        alternatives: &[&[U::JAnticommuting, U::JPairingSymmetric, U::EtaZero]],
    },
    TableRow {
        class: ClassSet::of(&[Chi4]),
        equations: "(JY∇_Xφ,φ) = +(Y∇_{JX}φ,φ), (Y∇_Xφ,jφ) = −(X∇_Yφ,jφ), η = 0",
        alternatives: &[&[U::JAnticommuting, U::JPairingSkew, U::EtaZero]],
    },
    TableRow {
        class: ClassSet::of(&[Chi5]),
        equations: "∇_Xφ = (∇_Xφ,jφ) jφ",
        alternatives: &[&[U::PureEta]],
    },
    TableRow {
        class: ClassSet::of(&[Chi1, Chi1Bar]),
        equations: "∇_Xφ = λ X jφ + μ Xφ",
        alternatives: &[&[U::KillingBoth]],
    },
    TableRow {
        class: ClassSet::of(&[Chi2, Chi2Bar]),
        equations: "(JY∇_Xφ,φ) = −(Y∇_{JX}φ,φ), λ = μ = 0, η = 0",
        alternatives: &[&[U::JCommuting, U::LambdaZero, U::MuZero, U::EtaZero]],
    },
    TableRow {
        class: ClassSet::of(&[Chi2, Chi2Bar, Chi5]),
        equations: "(JY∇_Xφ,φ) = −(Y∇_{JX}φ,φ), λ = μ = 0",
        alternatives: &[&[U::JCommuting, U::LambdaZero, U::MuZero]],
    },
    TableRow {
        class: ClassSet::of(&[Chi1, Chi1Bar, Chi2, Chi2Bar]),
        equations: "(JY∇_Xφ,φ) = −(Y∇_{JX}φ,φ), η = 0",
        alternatives: &[&[U::JCommuting, U::EtaZero]],
    },
    TableRow {
        class: ClassSet::of(&[Chi1, Chi1Bar, Chi2, Chi2Bar, Chi5]),
        equations: "(JY∇_Xφ,φ) = −(Y∇_{JX}φ,φ)",
        alternatives: &[&[U::JCommuting]],
    },
    TableRow {
        class: ClassSet::of(&[Chi2, Chi2Bar, Chi3]),
        equations: "Dφ = 0, η = 0",
        alternatives: &[&[U::DiracZero, U::EtaZero]],
    },
    TableRow {
        class: ClassSet::of(&[Chi1, Chi1Bar, Chi2, Chi2Bar, Chi3]),
        equations: "(Dφ,Xφ) = 0, η = 0",
        alternatives: &[&[U::DiracPerpVectors, U::EtaZero]],
    },
    TableRow {
        class: ClassSet::of(&[Chi1, Chi1Bar, Chi2, Chi2Bar, Chi3, Chi4]),
        equations: "(∇_Xφ,jφ) = 0",
        alternatives: &[&[U::EtaZero]],
    },
    TableRow {
        class: ClassSet::of(&[Chi2, Chi2Bar, Chi3, Chi5]),
        equations: "(Dφ,X jφ) = η(X), λ = μ = 0",
        alternatives: &[&[U::DiracMatchesEta, U::LambdaZero, U::MuZero]],
    },
    TableRow {
        class: ClassSet::of(&[Chi1, Chi1Bar, Chi2, Chi2Bar, Chi3, Chi5]),
        equations: "(Dφ,X jφ) = η(X)",
        alternatives: &[&[U::DiracMatchesEta]],
    },
    TableRow {
        class: ClassSet::of(&[Chi3, Chi4]),
        equations: "(JY∇_Xφ,φ) = (Y∇_{JX}φ,φ), η = 0",
        alternatives: &[&[U::JAnticommuting, U::EtaZero]],
    },
    TableRow {
        class: ClassSet::of(&[Chi3, Chi4, Chi5]),
        equations: "(JY∇_Xφ,φ) = (Y∇_{JX}φ,φ)",
        alternatives: &[&[U::JAnticommuting]],
    },
    TableRow {
        class: ClassSet::of(&[Chi2, Chi2Bar, Chi3, Chi4, Chi5]),
        equations: "λ = μ = 0",
        alternatives: &[&[U::LambdaZero, U::MuZero]],
    },
    TableRow {
        class: ClassSet::of(&[Chi1Bar, Chi2Bar, Chi3]),
        equations: "(X∇_Yφ,φ) = (Y∇_Xφ,φ), η = 0",
        alternatives: &[&[U::Symmetric, U::EtaZero]],
    },
];

pub const G2_TABLE: [TableRow<G2Condition>; 14] = [
    TableRow {
        class: ClassSet::of(&[W1]),
        equations: "∇_Xφ = λ Xφ",
        alternatives: &[&[G::KillingId]],
    },
    TableRow {
        class: ClassSet::of(&[W2]),
        equations: "∇_{X×Y}φ = Y∇_Xφ − X∇_Yφ + 2g(Y,S(X))φ",
        alternatives: &[&[G::CrossEquation]],
    },
    TableRow {
        class: ClassSet::of(&[W3]),
        equations: "(X∇_Yφ,φ) = (Y∇_Xφ,φ), λ = 0",
        alternatives: &[&[G::Symmetric, G::LambdaZero]],
    },
    TableRow {
        class: ClassSet::of(&[W4]),
        equations: "∇_Xφ = XVφ + g(V,X)φ for some V",
        alternatives: &[&[G::VectorType]],
    },
    TableRow {
        class: ClassSet::of(&[W1, W2]),
        equations: "∇_{X×Y}φ = Y∇_Xφ − X∇_Yφ + g(Y,S(X))φ − g(X,S(Y))φ − λ(X×Y)φ",
        alternatives: &[&[G::CrossEquationTwisted]],
    },
    TableRow {
        class: ClassSet::of(&[W1, W3]),
        equations: "(X∇_Yφ,φ) = (Y∇_Xφ,φ)",
        alternatives: &[&[G::Symmetric]],
    },
    TableRow {
        class: ClassSet::of(&[W1, W4]),
        equations: "∇_Xφ = XVWφ − (XVWφ,φ)φ for some V, W",
        alternatives: &[&[G::BivectorType]],
    },
    TableRow {
        class: ClassSet::of(&[W2, W3]),
        equations: "Sφ = 0 and λ = 0, or Dφ = 0",
        alternatives: &[&[G::SphiZero, G::LambdaZero], &[G::DiracZero]],
    },
    TableRow {
        class: ClassSet::of(&[W2, W4]),
        equations: "(X∇_Yφ,φ) = −(Y∇_Xφ,φ)",
        alternatives: &[&[G::SkewSymmetric]],
    },
    TableRow {
        class: ClassSet::of(&[W3, W4]),
        equations: "3(Xφ,∇_Yφ) − 3(Yφ,∇_Xφ) = (Sφ,XYφ), λ = 0",
        alternatives: &[&[G::ContractionEquation, G::LambdaZero]],
    },
    TableRow {
        class: ClassSet::of(&[W1, W2, W3]),
        equations: "(Sφ,Xφ) = 0, or Dφ = −7λφ",
        alternatives: &[&[G::SphiPerpVectors], &[G::DiracKilling]],
    },
    TableRow {
        class: ClassSet::of(&[W1, W2, W4]),
        equations: "(Y∇_Xφ,φ) + (X∇_Yφ,φ) = −2λ g(X,Y)",
        alternatives: &[&[G::SymmetrizedTrace]],
    },
    TableRow {
        class: ClassSet::of(&[W1, W3, W4]),
        equations: "3(Xφ,∇_Yφ) − 3(Yφ,∇_Xφ) = (Sφ,XYφ) − 7λ g(X,Y)",
        alternatives: &[&[G::ContractionEquationTraced]],
    },
    TableRow {
        class: ClassSet::of(&[W2, W3, W4]),
        equations: "λ = 0",
        alternatives: &[&[G::LambdaZero]],
    },
];

fn unit<T: Scalar>(n: usize, i: usize) -> Vec<T> {
    (0..n)
        .map(|k| if k == i { T::one() } else { T::zero() })
        .collect()
}

/// `true` when the jet is a constant combination of the generator jets.
fn spans<T: Scalar>(jet: &SpinorJet<T>, generators: &[Vec<Spinor<T>>]) -> bool {
    let cols: Vec<Vec<T>> = generators
        .iter()
        .map(|g| g.iter().flat_map(|s| s.0.iter().cloned()).collect())
        .collect();
    let target: Vec<T> = jet
        .dphi()
        .iter()
        .flat_map(|s| s.0.iter().cloned())
        .collect();
    Matrix::from_columns(&cols).spans(&target)
}

fn all_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |a| (0..n).map(move |b| (a, b)))
}

/// Precomputed quantities of a six-dimensional jet.
pub struct Su3Context<'a, T> {
    jet: &'a SpinorJet<T>,
    gamma: GammaBasis,
    j_matrix: Matrix<T>,
    jphi: Spinor<T>,
    dirac: Spinor<T>,
    lambda: T,
    mu: T,
    eta: Vec<T>,
}

impl<'a, T: Scalar> Su3Context<'a, T> {
    pub fn new(jet: &'a SpinorJet<T>) -> Result<Self> {
        let su3 = Su3Structure::from_direction(jet.direction().clone())?;
        let dir = jet.direction();
        let jphi = j(jet.phi());
        let dirac = jet.dirac();
        let six = T::from_i64(6);
        let lambda = dir.pair(&dirac, &jphi) / six.clone();
        let mu = -dir.pair(&dirac, jet.phi()) / six;
        let eta = jet.dphi().iter().map(|d| dir.pair(d, &jphi)).collect();
        Ok(Self {
            jet,
            gamma: jet.gamma(),
            j_matrix: su3.j().clone(),
            jphi,
            dirac,
            lambda,
            mu,
            eta,
        })
    }

    /// `λ = (Dφ, jφ)/6`.
    pub fn lambda(&self) -> &T {
        &self.lambda
    }

    /// `μ = −(Dφ, φ)/6`.
    pub fn mu(&self) -> &T {
        &self.mu
    }

    fn pair(&self, a: &Spinor<T>, b: &Spinor<T>) -> T {
        self.jet.direction().pair(a, b)
    }

    fn j_commutation(&self, sign: i64) -> bool {
        let s = T::from_i64(sign);
        all_pairs(6).all(|(x, y)| {
            let jy = self.j_matrix.column(y);
            let jx = self.j_matrix.column(x);
            let lhs = self.pair(
                &self
                    .gamma
                    .vector_apply(&jy, &self.jet.dphi()[x])
                    .expect("dim 6"),
                self.jet.phi(),
            );
            let rhs = self.pair(&self.gamma.e(y, &self.jet.nabla(&jx)), self.jet.phi());
            lhs.approx_eq(&(s.clone() * rhs))
        })
    }

    fn j_pairing(&self, sign: i64) -> bool {
        let s = T::from_i64(sign);
        let d = self.jet.dphi();
        all_pairs(6).all(|(x, y)| {
            let lhs = self.pair(&self.gamma.e(y, &d[x]), &self.jphi);
            let rhs = self.pair(&self.gamma.e(x, &d[y]), &self.jphi);
            lhs.approx_eq(&(s.clone() * rhs))
        })
    }

    pub fn holds(&self, c: Su3Condition) -> bool {
        let phi = self.jet.phi();
        let d = self.jet.dphi();
        let gen = |f: &dyn Fn(usize) -> Spinor<T>| -> Vec<Spinor<T>> { (0..6).map(f).collect() };
        match c {
            U::KillingJ => spans(self.jet, &[gen(&|i| self.gamma.e(i, &self.jphi))]),
            U::KillingId => spans(self.jet, &[gen(&|i| self.gamma.e(i, phi))]),
            U::KillingBoth => spans(
                self.jet,
                &[
                    gen(&|i| self.gamma.e(i, &self.jphi)),
                    gen(&|i| self.gamma.e(i, phi)),
                ],
            ),
            U::JCommuting => self.j_commutation(-1),
            U::JAnticommuting => self.j_commutation(1),
            U::JPairingSymmetric => self.j_pairing(1),
            U::JPairingSkew => self.j_pairing(-1),
            U::LambdaZero => self.lambda.is_near_zero(),
            U::MuZero => self.mu.is_near_zero(),
            U::EtaZero => self.eta.iter().all(Scalar::is_near_zero),
            U::PureEta => d
                .iter()
                .zip(&self.eta)
                .all(|(v, e)| v.approx_eq(&self.jphi.scale(e))),
            U::DiracZero => self.dirac.is_zero(),
            U::DiracPerpVectors => {
                (0..6).all(|x| self.pair(&self.dirac, &self.gamma.e(x, phi)).is_near_zero())
            }
            U::DiracMatchesEta => (0..6).all(|x| {
                self.pair(&self.dirac, &self.gamma.e(x, &self.jphi))
                    .approx_eq(&self.eta[x])
            }),
            U::Symmetric => all_pairs(6).all(|(x, y)| {
                self.pair(&self.gamma.e(x, &d[y]), phi)
                    .approx_eq(&self.pair(&self.gamma.e(y, &d[x]), phi))
            }),
        }
    }

    pub fn row_holds(&self, row: &TableRow<Su3Condition>) -> bool {
        row.alternatives
            .iter()
            .any(|alt| alt.iter().all(|&c| self.holds(c)))
    }
}

/// Precomputed quantities of a seven-dimensional jet.
pub struct G2Context<'a, T> {
    jet: &'a SpinorJet<T>,
    gamma: GammaBasis,
    g2: G2Structure<T>,
    s: Matrix<T>,
    s_phi: Spinor<T>,
    dirac: Spinor<T>,
    lambda: T,
}

impl<'a, T: Scalar> G2Context<'a, T> {
    pub fn new(jet: &'a SpinorJet<T>) -> Result<Self> {
        let g2 = G2Structure::from_direction(jet.direction().clone())?;
        let gamma = jet.gamma();
        let s = extract_intrinsic(jet)?.s;
        let phi = jet.phi();
        let mut s_phi = Spinor::zero();
        for (a, b) in all_pairs(7) {
            let c = s.get(a, b);
            if !c.is_zero() {
                s_phi = &s_phi + &gamma.e(a, &gamma.e(b, phi)).scale(c);
            }
        }
        let dirac = jet.dirac();
        let lambda = -jet.direction().pair(&dirac, phi) / T::from_i64(7);
        Ok(Self {
            jet,
            gamma,
            g2,
            s,
            s_phi,
            dirac,
            lambda,
        })
    }

    /// `λ = −(Dφ, φ)/7`.
    pub fn lambda(&self) -> &T {
        &self.lambda
    }

    fn pair(&self, a: &Spinor<T>, b: &Spinor<T>) -> T {
        self.jet.direction().pair(a, b)
    }

    fn s_entry(&self, y: usize, x: usize) -> T {
        // g(Y, S(X))
        self.s.get(y, x).clone()
    }

    fn cross_equation(&self, twisted: bool) -> bool {
        let phi = self.jet.phi();
        let d = self.jet.dphi();
        all_pairs(7).all(|(x, y)| {
            let ex = unit::<T>(7, x);
            let ey = unit::<T>(7, y);
            let xy = cross(self.g2.psi(), &ex, &ey);
            let lhs = self.jet.nabla(&xy);
            let mut rhs = &self.gamma.e(y, &d[x]) - &self.gamma.e(x, &d[y]);
            if twisted {
                let c = self.s_entry(y, x) - self.s_entry(x, y);
                rhs = &rhs + &phi.scale(&c);
                let t = self
                    .gamma
                    .vector_apply(&xy, phi)
                    .expect("dim 7")
                    .scale(&self.lambda);
                rhs = &rhs - &t;
            } else {
                rhs = &rhs + &phi.scale(&(T::from_i64(2) * self.s_entry(y, x)));
            }
            lhs.approx_eq(&rhs)
        })
    }

    fn contraction_equation(&self, trace_coeff: i64) -> bool {
        let phi = self.jet.phi();
        let d = self.jet.dphi();
        let three = T::from_i64(3);
        all_pairs(7).all(|(x, y)| {
            let lhs = three.clone() * self.pair(&self.gamma.e(x, phi), &d[y])
                - three.clone() * self.pair(&self.gamma.e(y, phi), &d[x]);
            let mut rhs = self.pair(&self.s_phi, &self.gamma.e(x, &self.gamma.e(y, phi)));
            if x == y {
                rhs = rhs - T::from_i64(trace_coeff) * self.lambda.clone();
            }
            lhs.approx_eq(&rhs)
        })
    }

    pub fn holds(&self, c: G2Condition) -> bool {
        let phi = self.jet.phi();
        let d = self.jet.dphi();
        let sym_pair = |x: usize, y: usize| self.pair(&self.gamma.e(x, &d[y]), phi);
        match c {
            G::KillingId => spans(self.jet, &[(0..7).map(|i| self.gamma.e(i, phi)).collect()]),
            G::CrossEquation => self.cross_equation(false),
            G::CrossEquationTwisted => self.cross_equation(true),
            G::Symmetric => all_pairs(7).all(|(x, y)| sym_pair(x, y).approx_eq(&sym_pair(y, x))),
            G::SkewSymmetric => {
                all_pairs(7).all(|(x, y)| sym_pair(x, y).approx_eq(&-sym_pair(y, x)))
            }
            G::LambdaZero => self.lambda.is_near_zero(),
            G::VectorType => {
                let gens: Vec<Vec<Spinor<T>>> = (0..7)
                    .map(|a| {
                        (0..7)
                            .map(|i| {
                                let v = self.gamma.e(i, &self.gamma.e(a, phi));
                                if i == a {
                                    &v + phi
                                } else {
                                    v
                                }
                            })
                            .collect()
                    })
                    .collect();
                spans(self.jet, &gens)
            }
            G::BivectorType => {
                // XVWφ − (XVWφ,φ)φ = −g(V,W)Xφ + (X×(V×W))φ, and (g(V,W), V×W)
                // ranges over all of ℝ × ℝ⁷, so the family is linear in (c, U).
                let mut gens: Vec<Vec<Spinor<T>>> =
                    alloc::vec![(0..7).map(|i| self.gamma.e(i, phi)).collect()];
                for a in 0..7 {
                    let ea = unit::<T>(7, a);
                    gens.push(
                        (0..7)
                            .map(|i| {
                                let xu = cross(self.g2.psi(), &unit::<T>(7, i), &ea);
                                self.gamma.vector_apply(&xu, phi).expect("dim 7")
                            })
                            .collect(),
                    );
                }
                spans(self.jet, &gens)
            }
            G::SphiZero => self.s_phi.is_zero(),
            G::DiracZero => self.dirac.is_zero(),
            G::SphiPerpVectors => {
                (0..7).all(|x| self.pair(&self.s_phi, &self.gamma.e(x, phi)).is_near_zero())
            }
            G::DiracKilling => self
                .dirac
                .approx_eq(&phi.scale(&(T::from_i64(-7) * self.lambda.clone()))),
            G::ContractionEquation => self.contraction_equation(0),
            G::SymmetrizedTrace => all_pairs(7).all(|(x, y)| {
                let lhs = sym_pair(y, x) + sym_pair(x, y);
                let rhs = if x == y {
                    T::from_i64(-2) * self.lambda.clone()
                } else {
                    T::zero()
                };
                lhs.approx_eq(&rhs)
            }),
            G::ContractionEquationTraced => self.contraction_equation(7),
        }
    }

    pub fn row_holds(&self, row: &TableRow<G2Condition>) -> bool {
        row.alternatives
            .iter()
            .any(|alt| alt.iter().all(|&c| self.holds(c)))
    }

    /// Truth value of each alternative separately.
    pub fn alternatives_hold(&self, row: &TableRow<G2Condition>) -> Vec<bool> {
        row.alternatives
            .iter()
            .map(|alt| alt.iter().all(|&c| self.holds(c)))
            .collect()
    }
}
