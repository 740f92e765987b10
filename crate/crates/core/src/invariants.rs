//! Derived differential quantities of a frame-constant jet.
//!
//! Every quantity is computed algebraically from the jet and the induced
//! structure, never by numerical differentiation. The closed formulas are each
//! paired with an independent route (product rule on the spinor bilinears, or a
//! codifferential contraction) and disagreement is reported as an error.

use alloc::vec::Vec;

use crate::clifford::{j, Spinor};
use crate::error::{Error, Result};
use crate::forms::AltForm;
use crate::linalg::Matrix;
use crate::scalar::Scalar;
use crate::structure::{G2Structure, Su3Structure};
use crate::torsion::{
    classify_jet, decompose_g2, decompose_su3, extract_intrinsic, ClassSet, Component,
    IntrinsicPair, SpinorJet, Su3Decomposition,
};

/// The forms built from spinor bilinears, with the sign that relates each to
/// `⟨e_{a₁}…e_{a_k}φ, Bφ⟩` (`B = Id` or `j`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpinorForm {
    /// `ω = −⟨XYφ, jφ⟩`
    Omega,
    /// `ψ⁺ = −⟨XYZφ, φ⟩`
    PsiPlus,
    /// `ψ⁻ = −⟨XYZφ, jφ⟩`
    PsiMinus,
    /// `Ψ = ⟨XYZφ, φ⟩`
    Psi,
}

impl SpinorForm {
    fn shape(self) -> (usize, bool, i64) {
        match self {
            SpinorForm::Omega => (2, true, -1),
            SpinorForm::PsiPlus => (3, false, -1),
            SpinorForm::PsiMinus => (3, true, -1),
            SpinorForm::Psi => (3, false, 1),
        }
    }
}

/// `∇_{e_v}` of a spinor form by the product rule, one form per frame vector.
pub fn nabla_spinor_form<T: Scalar>(jet: &SpinorJet<T>, form: SpinorForm) -> Vec<AltForm<T>> {
    let (degree, twisted, sign) = form.shape();
    let gamma = jet.gamma();
    let dir = jet.direction();
    let b = |s: &Spinor<T>| if twisted { j(s) } else { s.clone() };
    let phi = jet.phi();
    let b_phi = b(phi);
    let sign = T::from_i64(sign);
    jet.dphi()
        .iter()
        .map(|d| {
            let b_d = b(d);
            AltForm::from_fn(degree, jet.dim(), |ix| {
                let act =
                    |s: &Spinor<T>| ix.iter().rev().fold(s.clone(), |acc, &a| gamma.e(a, &acc));
                sign.clone() * (dir.pair(&act(d), &b_phi) + dir.pair(&act(phi), &b_d))
            })
        })
        .collect()
}

fn su3_of<T: Scalar>(jet: &SpinorJet<T>) -> Result<Su3Structure<T>> {
    if jet.dim() != 6 {
        return Err(Error::Dimension {
            expected: 6,
            found: jet.dim(),
        });
    }
    Su3Structure::from_direction(jet.direction().clone())
}

/// `(∇_Xω)(Y,Z) = 2ψ⁻(S(X),Y,Z)`, one 2-form per frame vector.
pub fn nabla_omega<T: Scalar>(pair: &IntrinsicPair<T>, su3: &Su3Structure<T>) -> Vec<AltForm<T>> {
    let two = T::from_i64(2);
    (0..6)
        .map(|i| su3.psi_minus().interior(&pair.s.column(i)).scale(&two))
        .collect()
}

/// The Dirac operator `Dφ = Σ e_i·∇_{e_i}φ`.
pub fn dirac<T: Scalar>(jet: &SpinorJet<T>) -> Spinor<T> {
    jet.dirac()
}

/// `δω(X) = 2[⟨Dφ, Xjφ⟩ − η(X)]`, checked against `−Σ(∇_{e_i}ω)(e_i,X)`.
pub fn delta_omega<T: Scalar>(jet: &SpinorJet<T>) -> Result<Vec<T>> {
    let su3 = su3_of(jet)?;
    let pair = extract_intrinsic(jet)?;
    let eta = pair.eta_or_zero();
    let gamma = jet.gamma();
    let dir = jet.direction();
    let d = jet.dirac();
    let jp = j(jet.phi());
    let two = T::from_i64(2);
    let value: Vec<T> = (0..6)
        .map(|x| two.clone() * (dir.pair(&d, &gamma.e(x, &jp)) - eta[x].clone()))
        .collect();
    let nabla = nabla_omega(&pair, &su3);
    for (x, v) in value.iter().enumerate() {
        let oracle = (0..6).fold(T::zero(), |acc, i| acc - nabla[i].on_basis(&[i, x]));
        if !oracle.approx_eq(v) {
            return Err(Error::Consistency(alloc::format!(
                "δω(e{}) disagrees with the codifferential",
                x + 1
            )));
        }
    }
    Ok(value)
}

/// The Lee form `θ = δω∘J`, checked against `2⟨Dφ, Xφ⟩ − 2η(JX)`.
pub fn lee_form<T: Scalar>(jet: &SpinorJet<T>) -> Result<Vec<T>> {
    let su3 = su3_of(jet)?;
    let dw = delta_omega(jet)?;
    let pair = extract_intrinsic(jet)?;
    let eta = pair.eta_or_zero();
    let jm = su3.j();
    let gamma = jet.gamma();
    let d = jet.dirac();
    let two = T::from_i64(2);
    let mut theta = Vec::with_capacity(6);
    for x in 0..6 {
        let jx = jm.column(x);
        let value = crate::scalar::dot(&dw, &jx);
        let other = two.clone() * jet.direction().pair(&d, &gamma.e(x, jet.phi()))
            - two.clone() * crate::scalar::dot(&eta, &jx);
        if !value.approx_eq(&other) {
            return Err(Error::Consistency(alloc::format!(
                "the two Lee form expressions differ at e{}",
                x + 1
            )));
        }
        theta.push(value);
    }
    Ok(theta)
}

/// `(½δω + η)·jφ + 6λjφ − 6μφ`, which equals `Dφ` on every jet (for `φ`
/// of the jet's length).
pub fn dirac_expansion<T: Scalar>(jet: &SpinorJet<T>) -> Result<Spinor<T>> {
    let su3 = su3_of(jet)?;
    let pair = extract_intrinsic(jet)?;
    let dec = decompose_su3(&pair, su3.j())?;
    let dw = delta_omega(jet)?;
    let half = T::ratio(1, 2);
    let v: Vec<T> = dw
        .iter()
        .zip(&dec.eta)
        .map(|(a, b)| half.clone() * a.clone() + b.clone())
        .collect();
    let gamma = jet.gamma();
    let phi = jet.phi();
    let jp = j(phi);
    let six = T::from_i64(6);
    let out = &gamma.vector_apply(&v, &jp)? + &jp.scale(&(six.clone() * dec.lambda.clone()));
    Ok(&out - &phi.scale(&(six * dec.mu.clone())))
}

/// A (2,1)-tensor antisymmetric in its first two slots, such as the
/// Nijenhuis tensor `N(X,Y,Z) = g(N(X,Y),Z)`.
#[derive(Clone, Debug, PartialEq)]
pub struct PairTensor<T> {
    dim: usize,
    values: Vec<T>,
}

impl<T: Scalar> PairTensor<T> {
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize, usize) -> T) -> Self {
        let mut values = Vec::with_capacity(dim * dim * dim);
        for x in 0..dim {
            for y in 0..dim {
                for z in 0..dim {
                    values.push(f(x, y, z));
                }
            }
        }
        Self { dim, values }
    }

    pub fn from_form(form: &AltForm<T>) -> Self {
        Self::from_fn(form.dim(), |x, y, z| form.on_basis(&[x, y, z]))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, x: usize, y: usize, z: usize) -> &T {
        &self.values[(x * self.dim + y) * self.dim + z]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.dim == other.dim
            && self
                .values
                .iter()
                .zip(&other.values)
                .all(|(a, b)| a.approx_eq(b))
    }

    pub fn is_antisymmetric_in_first_pair(&self) -> bool {
        let n = self.dim;
        (0..n).all(|x| {
            (0..n).all(|y| {
                (0..n).all(|z| (self.get(x, y, z).clone() + self.get(y, x, z).clone()).is_zero())
            })
        })
    }

    /// Totally antisymmetric tensors convert back to forms.
    pub fn to_form(&self) -> Result<AltForm<T>> {
        AltForm::from_tensor_checked(3, self.dim, |ix| self.get(ix[0], ix[1], ix[2]).clone())
    }
}

/// `N(X,Y,Z) = −2[ψ⁻(KX,Y,Z) − ψ⁻(KY,X,Z)]` with `K = JS + SJ`.
pub fn nijenhuis<T: Scalar>(pair: &IntrinsicPair<T>, su3: &Su3Structure<T>) -> PairTensor<T> {
    let jm = su3.j();
    let k = &(jm * &pair.s) + &(&pair.s * jm);
    let contracted: Vec<AltForm<T>> = (0..6)
        .map(|x| su3.psi_minus().interior(&k.column(x)))
        .collect();
    let minus_two = T::from_i64(-2);
    PairTensor::from_fn(6, |x, y, z| {
        minus_two.clone() * (contracted[x].on_basis(&[y, z]) - contracted[y].on_basis(&[x, z]))
    })
}

/// `Σ_cyclic f(K(X),Y,Z)` for a 3-form `f`.
pub fn cyclic_form<T: Scalar>(form: &AltForm<T>, k: &Matrix<T>) -> AltForm<T> {
    let n = form.dim();
    let c: Vec<AltForm<T>> = (0..n).map(|x| form.interior(&k.column(x))).collect();
    AltForm::from_fn(3, n, |ix| {
        let (x, y, z) = (ix[0], ix[1], ix[2]);
        c[x].on_basis(&[y, z]) + c[y].on_basis(&[z, x]) + c[z].on_basis(&[x, y])
    })
}

/// `dω = 6λψ⁺ + 6μψ⁻ + 2 cyclic ψ⁻(S₃₄X,Y,Z)`, checked against
/// `Σ_cyclic (∇_Xω)(Y,Z)`.
pub fn d_omega<T: Scalar>(dec: &Su3Decomposition<T>, su3: &Su3Structure<T>) -> Result<AltForm<T>> {
    let six = T::from_i64(6);
    let value = &(&su3.psi_plus().scale(&(six.clone() * dec.lambda.clone()))
        + &su3.psi_minus().scale(&(six * dec.mu.clone())))
        + &cyclic_form(su3.psi_minus(), &dec.s34()).scale(&T::from_i64(2));
    let nabla = nabla_omega(&dec.compose(), su3);
    let oracle = AltForm::from_fn(3, 6, |ix| {
        let (x, y, z) = (ix[0], ix[1], ix[2]);
        nabla[x].on_basis(&[y, z]) + nabla[y].on_basis(&[z, x]) + nabla[z].on_basis(&[x, y])
    });
    if !oracle.approx_eq(&value) {
        return Err(Error::Consistency(
            "dω disagrees with the cyclic sum of ∇ω".into(),
        ));
    }
    Ok(value)
}

/// `(∇_VΨ)(X,Y,Z) = 2 *Ψ(S(V),X,Y,Z)` as the 3-form in `(X,Y,Z)`.
pub fn nabla_psi_g2<T: Scalar>(
    pair: &IntrinsicPair<T>,
    g2: &G2Structure<T>,
    v: &[T],
) -> AltForm<T> {
    g2.star_psi()
        .interior(&pair.s.apply(v))
        .scale(&T::from_i64(2))
}

/// `½δΨ(X,Y) = ⟨Xφ,∇_Yφ⟩ − ⟨Yφ,∇_Xφ⟩ + ⟨Dφ,XYφ⟩ + g(X,Y)⟨Dφ,φ⟩`, checked
/// against `−Σ(∇_{e_i}Ψ)(e_i,X,Y)`.
pub fn delta_psi_g2<T: Scalar>(jet: &SpinorJet<T>) -> Result<AltForm<T>> {
    if jet.dim() != 7 {
        return Err(Error::Dimension {
            expected: 7,
            found: jet.dim(),
        });
    }
    let g2 = G2Structure::from_direction(jet.direction().clone())?;
    let pair = extract_intrinsic(jet)?;
    let gamma = jet.gamma();
    let dir = jet.direction();
    let phi = jet.phi();
    let d = jet.dirac();
    let images = gamma.frame_images(phi);
    let two = T::from_i64(2);
    let bracket = |x: usize, y: usize| {
        let mut v = dir.pair(&images[x], &jet.dphi()[y]) - dir.pair(&images[y], &jet.dphi()[x])
            + dir.pair(&d, &gamma.e(x, &images[y]));
        if x == y {
            v = v + dir.pair(&d, phi);
        }
        v
    };
    for x in 0..7 {
        if !bracket(x, x).is_near_zero() {
            return Err(Error::Consistency("diagonal of δΨ does not cancel".into()));
        }
    }
    let value = AltForm::from_fn(2, 7, |ix| two.clone() * bracket(ix[0], ix[1]));
    let nabla: Vec<AltForm<T>> = (0..7)
        .map(|i| {
            let e: Vec<T> = (0..7)
                .map(|k| if k == i { T::one() } else { T::zero() })
                .collect();
            nabla_psi_g2(&pair, &g2, &e)
        })
        .collect();
    let oracle = AltForm::from_fn(2, 7, |ix| {
        (0..7).fold(T::zero(), |acc, i| {
            acc - nabla[i].on_basis(&[i, ix[0], ix[1]])
        })
    });
    if !oracle.approx_eq(&value) {
        return Err(Error::Consistency(
            "δΨ disagrees with the codifferential of ∇Ψ".into(),
        ));
    }
    Ok(value)
}

/// Outcome of the harmonic-spinor criterion in dimension 6.
#[derive(Clone, Debug, PartialEq)]
pub struct HarmonicSu3Report<T> {
    pub dirac_zero: bool,
    pub class: ClassSet,
    pub lambda: T,
    pub mu: T,
    /// `δω + 2η`.
    pub delta_omega_plus_two_eta: Vec<T>,
}

impl<T: Scalar> HarmonicSu3Report<T> {
    /// When `Dφ = 0`: `λ = μ = 0`, no χ₁ or χ₁̄, and `δω = −2η`.
    pub fn consistent(&self) -> bool {
        if !self.dirac_zero {
            return true;
        }
        let allowed = ClassSet::of(&[
            Component::Chi2,
            Component::Chi2Bar,
            Component::Chi3,
            Component::Chi4,
            Component::Chi5,
        ]);
        self.lambda.is_near_zero()
            && self.mu.is_near_zero()
            && self.class.is_subset(allowed)
            && self
                .delta_omega_plus_two_eta
                .iter()
                .all(|v| v.is_near_zero())
    }
}

pub fn harmonic_su3<T: Scalar>(jet: &SpinorJet<T>, eps: f64) -> Result<HarmonicSu3Report<T>> {
    let su3 = su3_of(jet)?;
    let pair = extract_intrinsic(jet)?;
    let dec = decompose_su3(&pair, su3.j())?;
    let dw = delta_omega(jet)?;
    let two = T::from_i64(2);
    Ok(HarmonicSu3Report {
        dirac_zero: jet.dirac().approx_eq(&Spinor::zero()),
        class: classify_jet(jet, eps)?,
        delta_omega_plus_two_eta: dw
            .iter()
            .zip(&dec.eta)
            .map(|(a, b)| a.clone() + two.clone() * b.clone())
            .collect(),
        lambda: dec.lambda,
        mu: dec.mu,
    })
}

/// Outcome of the harmonic-spinor criterion in dimension 7.
#[derive(Clone, Debug, PartialEq)]
pub struct HarmonicG2Report<T> {
    pub dirac_zero: bool,
    pub class: ClassSet,
    pub lambda: T,
    pub v: Vec<T>,
}

impl<T: Scalar> HarmonicG2Report<T> {
    /// `Dφ = 0` forces class W₂₃, i.e. `λ = 0` and `V = 0`.
    pub fn consistent(&self) -> bool {
        !self.dirac_zero
            || (self.lambda.is_near_zero()
                && self.v.iter().all(|x| x.is_near_zero())
                && self
                    .class
                    .is_subset(ClassSet::of(&[Component::W2, Component::W3])))
    }
}

pub fn harmonic_g2<T: Scalar>(jet: &SpinorJet<T>, eps: f64) -> Result<HarmonicG2Report<T>> {
    if jet.dim() != 7 {
        return Err(Error::Dimension {
            expected: 7,
            found: jet.dim(),
        });
    }
    let g2 = G2Structure::from_direction(jet.direction().clone())?;
    let dec = decompose_g2(&extract_intrinsic(jet)?.s, &g2)?;
    Ok(HarmonicG2Report {
        dirac_zero: jet.dirac().approx_eq(&Spinor::zero()),
        class: dec.classify(eps),
        lambda: dec.lambda,
        v: dec.v,
    })
}

/// Orthogonal projection of `(S, η)` onto the kernel of the linear map
/// `(S, η) ↦ Dφ`, so the returned pair has a harmonic spinor. Exact over
/// rationals.
pub fn harmonic_projection<T: Scalar>(
    dir: &crate::structure::SpinorDirection<T>,
    pair: &IntrinsicPair<T>,
) -> Result<IntrinsicPair<T>> {
    if pair.dim() != 6 {
        return Err(Error::Dimension {
            expected: 6,
            found: pair.dim(),
        });
    }
    let flatten = |p: &IntrinsicPair<T>| -> Vec<T> {
        let mut v: Vec<T> = p.s.entries().to_vec();
        v.extend(p.eta_or_zero());
        v
    };
    let unflatten = |v: &[T]| {
        IntrinsicPair::su3(
            Matrix::from_fn(6, 6, |r, c| v[r * 6 + c].clone()),
            v[36..].to_vec(),
        )
    };
    let dirac_of = |v: &[T]| -> Result<Spinor<T>> {
        Ok(SpinorJet::from_pair(dir.clone(), &unflatten(v))?.dirac())
    };
    // columns of the transpose are the images of the 42 coordinate pairs
    let mut rows = Vec::with_capacity(42);
    for k in 0..42 {
        let e: Vec<T> = (0..42)
            .map(|i| if i == k { T::one() } else { T::zero() })
            .collect();
        rows.push(dirac_of(&e)?.coeffs().to_vec());
    }
    let lt = Matrix::from_rows(rows);
    let x = flatten(pair);
    let (y, _) = lt.least_squares(&x);
    let fitted = lt.apply(&y);
    let projected: Vec<T> = x
        .iter()
        .zip(&fitted)
        .map(|(a, b)| a.clone() - b.clone())
        .collect();
    let out = unflatten(&projected);
    if !dirac_of(&projected)?.approx_eq(&Spinor::zero()) {
        return Err(Error::Consistency(
            "projection left a nonzero Dirac image".into(),
        ));
    }
    Ok(out)
}

/// `dα = Σ eⁱ ∧ ∇_{e_i}α` from the covariant derivatives of a form.
pub fn exterior_derivative<T: Scalar>(nabla: &[AltForm<T>]) -> Result<AltForm<T>> {
    let n = nabla.len();
    let degree = nabla
        .first()
        .map(AltForm::degree)
        .ok_or_else(|| Error::Invalid("empty derivative list".into()))?;
    let mut out = AltForm::zero(degree + 1, n);
    for (i, f) in nabla.iter().enumerate() {
        out = &out + &AltForm::basis(n, &[i + 1]).wedge(f)?;
    }
    Ok(out)
}
