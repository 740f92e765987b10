//! Metric connections adapted to a spinor: the canonical connection, the
//! characteristic connection with skew torsion, and the `∇ˢ` family.
//!
//! A metric connection `∇ + A` acts on spinors by `½A(X)·φ`, reading `A(X,·,·)`
//! as a 2-form. A skew torsion `T` enters as `∇ᶜ_Xφ = ∇_Xφ + ¼(X⌟T)·φ`, and every
//! torsion constant below is confirmed against that annihilation.

use alloc::string::String;
use alloc::vec::Vec;

use crate::clifford::{j, Spinor};
use crate::error::{Error, Result};
use crate::forms::AltForm;
use crate::invariants::{cyclic_form, delta_omega};
use crate::linalg::Matrix;
use crate::scalar::Scalar;
use crate::structure::{G2Structure, SpinorDirection, Su3Structure};
use crate::torsion::{
    decompose_su3, extract_intrinsic, ClassSet, Component, G2Decomposition, IntrinsicPair,
    SpinorJet, Su3Decomposition,
};

/// A (2,1)-tensor `A(X,Y,Z)`, antisymmetric in `(Y,Z)`: the difference between
/// a metric connection and the Levi-Civita connection.
#[derive(Clone, Debug, PartialEq)]
pub struct TorsionTensor<T> {
    dim: usize,
    values: Vec<T>,
}

impl<T: Scalar> TorsionTensor<T> {
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize, usize) -> T) -> Result<Self> {
        let mut values = Vec::with_capacity(dim * dim * dim);
        for x in 0..dim {
            for y in 0..dim {
                for z in 0..dim {
                    values.push(f(x, y, z));
                }
            }
        }
        let t = Self { dim, values };
        for x in 0..dim {
            for y in 0..dim {
                for z in 0..dim {
                    if !(t.get(x, y, z).clone() + t.get(x, z, y).clone()).is_near_zero() {
                        return Err(Error::NotAntisymmetric);
                    }
                }
            }
        }
        Ok(t)
    }

    /// The tensor `X ↦ X⌟T` of a 3-form.
    pub fn from_three_form(t: &AltForm<T>) -> Self {
        Self::from_fn(t.dim(), |x, y, z| t.on_basis(&[x, y, z])).expect("forms are antisymmetric")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, x: usize, y: usize, z: usize) -> &T {
        &self.values[(x * self.dim + y) * self.dim + z]
    }

    pub fn norm_sq(&self) -> T {
        crate::scalar::norm_sq(&self.values)
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_near_zero())
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.dim == other.dim
            && self
                .values
                .iter()
                .zip(&other.values)
                .all(|(a, b)| a.approx_eq(b))
    }

    /// `A(e_x,·,·)` as a 2-form.
    pub fn slot(&self, x: usize) -> AltForm<T> {
        AltForm::from_fn(2, self.dim, |ix| self.get(x, ix[0], ix[1]).clone())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&T, &T) -> T) -> Self {
        Self {
            dim: self.dim,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }
}

/// `Ξ(η,S)(X) = −S(X)⌟ψ⁺ + ⅔η(X)ω`; the canonical connection `∇ + Ξ`
/// annihilates `φ`, which is checked.
pub fn xi_map<T: Scalar>(
    pair: &IntrinsicPair<T>,
    su3: &Su3Structure<T>,
) -> Result<TorsionTensor<T>> {
    let eta = pair
        .eta
        .as_ref()
        .ok_or_else(|| Error::Invalid("Ξ needs η".into()))?;
    let two_thirds = T::ratio(2, 3);
    let slots: Vec<AltForm<T>> = (0..6)
        .map(|x| {
            &su3.omega().scale(&(two_thirds.clone() * eta[x].clone()))
                - &su3.psi_plus().interior(&pair.s.column(x))
        })
        .collect();
    let xi = TorsionTensor::from_fn(6, |x, y, z| slots[x].on_basis(&[y, z]))?;
    let jet = SpinorJet::from_pair(su3.spinor().clone(), pair)?;
    let gamma = jet.gamma();
    let half = T::ratio(1, 2);
    for (x, slot) in slots.iter().enumerate() {
        let v = &jet.dphi()[x] + &gamma.form_apply(slot, jet.phi())?.scale(&half);
        if !v.approx_eq(&Spinor::zero()) {
            return Err(Error::Consistency(alloc::format!(
                "∇ⁿ does not annihilate φ along e{}",
                x + 1
            )));
        }
    }
    Ok(xi)
}

/// Squared norms of the three orthogonal parts of a connection tensor.
#[derive(Clone, Debug, PartialEq)]
pub struct ConnectionTypeReport<T> {
    pub vectorial_norm: T,
    pub skew_norm: T,
    pub cyclic_traceless_norm: T,
}

/// The split `TM ⊕ Λ³ ⊕ T` of a connection tensor.
#[derive(Clone, Debug, PartialEq)]
pub struct TorsionSplit<T> {
    /// `g(X,Y)V(Z) − g(X,Z)V(Y)`.
    pub vectorial: TorsionTensor<T>,
    pub vector: Vec<T>,
    /// Full antisymmetrization.
    pub skew: TorsionTensor<T>,
    pub cyclic_traceless: TorsionTensor<T>,
}

impl<T: Scalar> TorsionSplit<T> {
    pub fn report(&self) -> ConnectionTypeReport<T> {
        ConnectionTypeReport {
            vectorial_norm: self.vectorial.norm_sq(),
            skew_norm: self.skew.norm_sq(),
            cyclic_traceless_norm: self.cyclic_traceless.norm_sq(),
        }
    }
}

pub fn torsion_split<T: Scalar>(a: &TorsionTensor<T>) -> TorsionSplit<T> {
    let n = a.dim();
    let third = T::ratio(1, 3);
    let skew = TorsionTensor::from_fn(n, |x, y, z| {
        third.clone() * (a.get(x, y, z).clone() + a.get(y, z, x).clone() + a.get(z, x, y).clone())
    })
    .expect("cyclic average of a tensor skew in the last pair is skew");
    let denom = T::from_i64(n as i64 - 1);
    let vector: Vec<T> = (0..n)
        .map(|z| (0..n).fold(T::zero(), |acc, i| acc + a.get(i, i, z).clone()) / denom.clone())
        .collect();
    let delta = |p: usize, q: usize| if p == q { T::one() } else { T::zero() };
    let vectorial = TorsionTensor::from_fn(n, |x, y, z| {
        delta(x, y) * vector[z].clone() - delta(x, z) * vector[y].clone()
    })
    .expect("vectorial part is skew");
    let cyclic_traceless = a
        .zip_with(&skew, |p, q| p.clone() - q.clone())
        .zip_with(&vectorial, |p, q| p.clone() - q.clone());
    TorsionSplit {
        vectorial,
        vector,
        skew,
        cyclic_traceless,
    }
}

/// Orthogonal decomposition of a connection tensor; Pythagoras is checked.
pub fn torsion_type<T: Scalar>(a: &TorsionTensor<T>) -> Result<ConnectionTypeReport<T>> {
    let report = torsion_split(a).report();
    let total = report.vectorial_norm.clone()
        + report.skew_norm.clone()
        + report.cyclic_traceless_norm.clone();
    if !total.approx_eq(&a.norm_sq()) {
        return Err(Error::Consistency(
            "torsion parts are not orthogonal".into(),
        ));
    }
    Ok(report)
}

/// `∇_Xφ + s(X⌟T)·φ` for each frame vector.
pub fn torsion_residuals<T: Scalar>(
    jet: &SpinorJet<T>,
    t: &AltForm<T>,
    s: &T,
) -> Result<Vec<Spinor<T>>> {
    let gamma = jet.gamma();
    (0..jet.dim())
        .map(|x| {
            // a 6-dimensional T seen on a 7-frame has no e₇ slot
            let slot = if x < t.dim() {
                t.interior_basis(x).extend_dim(jet.dim())
            } else {
                AltForm::zero(2, jet.dim())
            };
            Ok(&jet.dphi()[x] + &gamma.form_apply(&slot, jet.phi())?.scale(s))
        })
        .collect()
}

/// `∇_Xφ + ¼(X⌟T)·φ = 0` for every frame vector.
pub fn annihilates<T: Scalar>(jet: &SpinorJet<T>, t: &AltForm<T>) -> Result<bool> {
    Ok(torsion_residuals(jet, t, &T::ratio(1, 4))?
        .iter()
        .all(|r| r.approx_eq(&Spinor::zero())))
}

/// The `η` that satisfies `4η = δω` for a given `S`.
///
/// `δω(X) = 2⟨Σe_iS(e_i)φ, Xjφ⟩` does not depend on `η`, so the condition
/// fixes `η(X) = ½⟨Σe_iS(e_i)φ, Xjφ⟩`.
pub fn characteristic_eta<T: Scalar>(dir: &SpinorDirection<T>, s: &Matrix<T>) -> Result<Vec<T>> {
    let jet = SpinorJet::from_pair(
        dir.clone(),
        &IntrinsicPair::su3(s.clone(), alloc::vec![T::zero(); 6]),
    )?;
    let d = jet.dirac();
    let gamma = jet.gamma();
    let jp = j(jet.phi());
    let half = T::ratio(1, 2);
    Ok((0..6)
        .map(|x| half.clone() * dir.pair(&d, &gamma.e(x, &jp)))
        .collect())
}

/// `T = 2λψ⁻ − 2μψ⁺ − 2 cyclic ψ⁺(S₃₄X,Y,Z)`.
///
/// This is the torsion of the U(3)-level characteristic connection; it is
/// characteristic for the SU(3)-structure only when also `4η = δω`.
pub fn characteristic_torsion_su3<T: Scalar>(
    dec: &Su3Decomposition<T>,
    su3: &Su3Structure<T>,
) -> AltForm<T> {
    let two = T::from_i64(2);
    let base = &su3.psi_minus().scale(&(two.clone() * dec.lambda.clone()))
        - &su3.psi_plus().scale(&(two.clone() * dec.mu.clone()));
    &base - &cyclic_form(su3.psi_plus(), &dec.s34()).scale(&two)
}

/// Existence and torsion of the SU(3) characteristic connection.
#[derive(Clone, Debug, PartialEq)]
pub struct CharacteristicSu3<T> {
    /// Class inside χ₁₁̄₃₄₅.
    pub class_ok: bool,
    /// `4η = δω`.
    pub eta_ok: bool,
    pub torsion: AltForm<T>,
    pub obstructions: Vec<String>,
}

impl<T> CharacteristicSu3<T> {
    pub fn exists(&self) -> bool {
        self.class_ok && self.eta_ok
    }
}

/// When the connection exists, the annihilation `∇_Xφ + ¼(X⌟T)φ = 0` is
/// checked and a failure is an error.
pub fn characteristic_su3<T: Scalar>(jet: &SpinorJet<T>, eps: f64) -> Result<CharacteristicSu3<T>> {
    let su3 = Su3Structure::from_direction(jet.direction().clone())?;
    let pair = extract_intrinsic(jet)?;
    let dec = decompose_su3(&pair, su3.j())?;
    let class = dec.classify(eps);
    let mut obstructions = Vec::new();
    let class_ok = class.is_subset(CHARACTERISTIC_SU3_CLASSES);
    if !class_ok {
        obstructions.push(alloc::format!("class {class} has a χ₂ or χ₂̄ component"));
    }
    let dw = delta_omega(jet)?;
    let four = T::from_i64(4);
    let eta_ok = dw
        .iter()
        .zip(&dec.eta)
        .all(|(d, e)| (four.clone() * e.clone()).approx_eq(d));
    if !eta_ok {
        obstructions.push("4η ≠ δω".into());
    }
    let torsion = characteristic_torsion_su3(&dec, &su3);
    let report = CharacteristicSu3 {
        class_ok,
        eta_ok,
        torsion,
        obstructions,
    };
    if report.exists() && !annihilates(jet, &report.torsion)? {
        return Err(Error::Consistency(
            "characteristic torsion does not annihilate φ".into(),
        ));
    }
    Ok(report)
}

pub fn characteristic_exists_su3<T: Scalar>(jet: &SpinorJet<T>, eps: f64) -> Result<bool> {
    Ok(characteristic_su3(jet, eps)?.exists())
}

/// `Tᶜ = (2/9) cyclic Ψ((2λId + 9S₃ + 3S₄)X,Y,Z)` for class W₁₃₄.
pub fn characteristic_torsion_g2<T: Scalar>(
    dec: &G2Decomposition<T>,
    g2: &G2Structure<T>,
) -> Result<AltForm<T>> {
    if !dec.s2.norm_sq().is_near_zero() {
        return Err(Error::Precondition(
            "a W₂ component admits no characteristic connection".into(),
        ));
    }
    let k = &(&Matrix::identity(7).scale(&(T::from_i64(2) * dec.lambda.clone()))
        + &dec.s3.scale(&T::from_i64(9)))
        + &dec.s4.scale(&T::from_i64(3));
    Ok(cyclic_form(g2.psi(), &k).scale(&T::ratio(2, 9)))
}

/// `σ_T = ½ Σ (e_i⌟T) ∧ (e_i⌟T)`.
pub fn sigma_t<T: Scalar>(t: &AltForm<T>) -> Result<AltForm<T>> {
    if t.degree() != 3 {
        return Err(Error::Degree {
            expected: 3,
            found: t.degree(),
        });
    }
    let mut out = AltForm::zero(4, t.dim());
    for i in 0..t.dim() {
        let c = t.interior_basis(i);
        out = &out + &c.wedge(&c)?;
    }
    Ok(out.scale(&T::ratio(1, 2)))
}

/// The jet of `∇ˢ = ∇ + 2sT`, acting on spinors as `∇ˢ_Xφ = ∇_Xφ + s(X⌟T)·φ`.
pub fn nabla_s_family<T: Scalar>(
    jet: &SpinorJet<T>,
    t: &AltForm<T>,
    s: &T,
) -> Result<SpinorJet<T>> {
    let residuals = torsion_residuals(jet, t, s)?;
    jet.map_derivatives(|i, _| residuals[i].clone())
}

/// Outcome of the generalised-Killing-with-torsion test.
#[derive(Clone, Debug, PartialEq)]
pub struct GkstReport<T> {
    pub is_gkst: bool,
    /// `A` with `∇ˢ_Xφ = A(X)φ`, present when no `jφ` component occurs.
    pub a: Option<Matrix<T>>,
}

pub fn gkst_check<T: Scalar>(jet: &SpinorJet<T>, t: &AltForm<T>, s: &T) -> Result<GkstReport<T>> {
    let modified = nabla_s_family(jet, t, s)?;
    let pair = extract_intrinsic(&modified)?;
    if pair
        .eta
        .as_ref()
        .is_some_and(|e| e.iter().any(|x| !x.is_near_zero()))
    {
        return Ok(GkstReport {
            is_gkst: false,
            a: None,
        });
    }
    let symmetric = pair.s.approx_eq(&pair.s.transpose());
    Ok(GkstReport {
        is_gkst: symmetric,
        a: Some(pair.s),
    })
}

/// `L = −cyclic ψ⁺(W₃X,Y,Z) − μψ⁺` for a Weingarten map `W = μId + W₃` with
/// `W₃` symmetric and anticommuting with `J`; `(X⌟L)φ = −2W(X)φ` is checked.
pub fn hypersurface_l_form<T: Scalar>(w: &Matrix<T>, su3: &Su3Structure<T>) -> Result<AltForm<T>> {
    if !w.approx_eq(&w.transpose()) {
        return Err(Error::Precondition(
            "Weingarten map must be symmetric".into(),
        ));
    }
    let mu = w.trace() / T::from_i64(6);
    let w3 = w - &Matrix::identity(6).scale(&mu);
    let jm = su3.j();
    if !(&(jm * &w3) + &(&w3 * jm)).approx_eq(&Matrix::zeros(6, 6)) {
        return Err(Error::Precondition(
            "W − μId must anticommute with J".into(),
        ));
    }
    let l = &(-&cyclic_form(su3.psi_plus(), &w3)) - &su3.psi_plus().scale(&mu);
    let gamma = crate::clifford::GammaBasis::six();
    let phi = su3.spinor().spinor();
    let minus_two = T::from_i64(-2);
    for x in 0..6 {
        let lhs = gamma.form_apply(&l.interior_basis(x), phi)?;
        let rhs = gamma.vector_apply(&w.column(x), phi)?.scale(&minus_two);
        if !lhs.approx_eq(&rhs) {
            return Err(Error::Consistency(alloc::format!(
                "(e{}⌟L)φ ≠ −2W(e{})φ",
                x + 1,
                x + 1
            )));
        }
    }
    Ok(l)
}

/// Classes admitting an SU(3) characteristic connection (together with `4η = δω`).
pub const CHARACTERISTIC_SU3_CLASSES: ClassSet = ClassSet::of(&[
    Component::Chi1,
    Component::Chi1Bar,
    Component::Chi3,
    Component::Chi4,
    Component::Chi5,
]);
