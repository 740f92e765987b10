//! Irreducible splitting of the intrinsic endomorphism and class assignment.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::forms::AltForm;
use crate::linalg::Matrix;
use crate::scalar::{norm_sq, Scalar};
use crate::structure::{G2Structure, Su3Structure};

use super::classes::{ClassSet, Component};
use super::jet::IntrinsicPair;

/// `S = λJ + μId + S₂ + S₂̄ + S₃ + S₄`, together with `η`.
#[derive(Clone, Debug, PartialEq)]
pub struct Su3Decomposition<T> {
    pub lambda: T,
    pub mu: T,
    /// χ₂: skew, commutes with `J`, `tr(JS₂) = 0` (the algebra su(3)).
    pub s2: Matrix<T>,
    /// χ₂̄: symmetric, traceless, commutes with `J`.
    pub s2_bar: Matrix<T>,
    /// χ₃: symmetric, anticommutes with `J`.
    pub s3: Matrix<T>,
    /// χ₄: skew, anticommutes with `J`.
    pub s4: Matrix<T>,
    /// χ₅.
    pub eta: Vec<T>,
    j: Matrix<T>,
}

impl<T: Scalar> Su3Decomposition<T> {
    pub fn j(&self) -> &Matrix<T> {
        &self.j
    }

    /// `S₃ + S₄`, the `J`-anticommuting part.
    pub fn s34(&self) -> Matrix<T> {
        &self.s3 + &self.s4
    }

    pub fn compose(&self) -> IntrinsicPair<T> {
        let n = 6;
        let mut s = &self.j.scale(&self.lambda) + &Matrix::identity(n).scale(&self.mu);
        for part in [&self.s2, &self.s2_bar, &self.s3, &self.s4] {
            s = &s + part;
        }
        IntrinsicPair::su3(s, self.eta.clone())
    }

    /// Squared norm of each component, in [`Component::SU3`] order.
    pub fn component_norms(&self) -> [T; 7] {
        [
            self.lambda.clone() * self.lambda.clone(),
            self.mu.clone() * self.mu.clone(),
            self.s2.norm_sq(),
            self.s2_bar.norm_sq(),
            self.s3.norm_sq(),
            self.s4.norm_sq(),
            norm_sq(&self.eta),
        ]
    }

    /// A component is present when its norm exceeds `eps` (`eps = 0`: nonzero).
    pub fn classify(&self, eps: f64) -> ClassSet {
        Component::SU3
            .into_iter()
            .zip(self.component_norms())
            .filter(|(_, n)| n.sq_exceeds(eps))
            .map(|(c, _)| c)
            .collect()
    }
}

/// Splits an SU(3) intrinsic pair relative to `J`.
pub fn decompose_su3<T: Scalar>(
    pair: &IntrinsicPair<T>,
    j: &Matrix<T>,
) -> Result<Su3Decomposition<T>> {
    let Some(eta) = &pair.eta else {
        return Err(Error::Invalid("SU(3) decomposition needs η".into()));
    };
    if pair.dim() != 6 || j.rows() != 6 {
        return Err(Error::Dimension {
            expected: 6,
            found: pair.dim(),
        });
    }
    if !(j * j).approx_eq(&Matrix::identity(6).scale(&-T::one())) {
        return Err(Error::Precondition("J² ≠ −Id".into()));
    }
    let s = &pair.s;
    let six = T::from_i64(6);
    let lambda = -(j * s).trace() / six.clone();
    let mu = s.trace() / six;
    let jsj = &(j * s) * j;
    let half = T::ratio(1, 2);
    let commuting = (s - &jsj).scale(&half);
    let anti = (s + &jsj).scale(&half);
    let s2 = &commuting.skew_part() - &j.scale(&lambda);
    let s2_bar = &commuting.symmetric_part() - &Matrix::identity(6).scale(&mu);
    Ok(Su3Decomposition {
        lambda,
        mu,
        s2,
        s2_bar,
        s3: anti.symmetric_part(),
        s4: anti.skew_part(),
        eta: eta.clone(),
        j: j.clone(),
    })
}

/// `S = λId + S₂ + S₃ + V⌟Ψ`.
#[derive(Clone, Debug, PartialEq)]
pub struct G2Decomposition<T> {
    pub lambda: T,
    /// W₂: the component in g₂.
    pub s2: Matrix<T>,
    /// W₃: symmetric traceless.
    pub s3: Matrix<T>,
    /// W₄ is `S₄ = V⌟Ψ`.
    pub v: Vec<T>,
    pub s4: Matrix<T>,
}

impl<T: Scalar> G2Decomposition<T> {
    pub fn compose(&self) -> IntrinsicPair<T> {
        let s = &(&(&Matrix::identity(7).scale(&self.lambda) + &self.s2) + &self.s3) + &self.s4;
        IntrinsicPair::g2(s)
    }

    /// Squared norms in [`Component::G2`] order; W₄ uses `‖V⌟Ψ‖²`.
    pub fn component_norms(&self) -> [T; 4] {
        [
            self.lambda.clone() * self.lambda.clone(),
            self.s2.norm_sq(),
            self.s3.norm_sq(),
            self.s4.norm_sq(),
        ]
    }

    pub fn classify(&self, eps: f64) -> ClassSet {
        Component::G2
            .into_iter()
            .zip(self.component_norms())
            .filter(|(_, n)| n.sq_exceeds(eps))
            .map(|(c, _)| c)
            .collect()
    }
}

/// The seven endomorphisms `e_a⌟Ψ` spanning Λ²₇.
pub fn lambda27_basis<T: Scalar>(g2: &G2Structure<T>) -> Vec<Matrix<T>> {
    (0..7)
        .map(|a| {
            let e: Vec<T> = (0..7)
                .map(|k| if k == a { T::one() } else { T::zero() })
                .collect();
            g2.contraction_endomorphism(&e)
        })
        .collect()
}

/// Splits a G₂ intrinsic endomorphism. The Λ²₇ coefficients solve the normal
/// equations against the measured Gram matrix of `e_a⌟Ψ`.
pub fn decompose_g2<T: Scalar>(s: &Matrix<T>, g2: &G2Structure<T>) -> Result<G2Decomposition<T>> {
    if s.rows() != 7 || s.cols() != 7 {
        return Err(Error::Dimension {
            expected: 7,
            found: s.rows(),
        });
    }
    let lambda = s.trace() / T::from_i64(7);
    let sym = s.symmetric_part();
    let s3 = &sym - &Matrix::identity(7).scale(&lambda);
    let skew = s.skew_part();
    let basis = lambda27_basis(g2);
    let gram = Matrix::from_fn(7, 7, |a, b| basis[a].frobenius(&basis[b]));
    let rhs: Vec<T> = basis.iter().map(|e| e.frobenius(&skew)).collect();
    let v = gram
        .solve(&rhs)
        .ok_or_else(|| Error::Consistency("Λ²₇ Gram matrix is singular".into()))?;
    let s4 = g2.contraction_endomorphism(&v);
    let s2 = &skew - &s4;
    if !basis.iter().all(|e| e.frobenius(&s2).is_near_zero()) {
        return Err(Error::Consistency(
            "g₂ residual is not orthogonal to Λ²₇".into(),
        ));
    }
    Ok(G2Decomposition {
        lambda,
        s2,
        s3,
        v,
        s4,
    })
}

/// The intrinsic torsion `Γ(e_i)` as 2-forms, verified by `∇_Xφ = ½Γ(X)·φ`.
///
/// Dimension 6: `Γ(X) = S(X)⌟ψ⁺ − ⅔η(X)ω`, each value orthogonal to su(3).
pub fn intrinsic_torsion_form_su3<T: Scalar>(
    pair: &IntrinsicPair<T>,
    su3: &Su3Structure<T>,
) -> Result<Vec<AltForm<T>>> {
    let eta = pair
        .eta
        .as_ref()
        .ok_or_else(|| Error::Invalid("SU(3) torsion needs η".into()))?;
    let two_thirds = T::ratio(2, 3);
    let gamma: Vec<AltForm<T>> = (0..6)
        .map(|i| {
            let a = su3.psi_plus().interior(&pair.s.column(i));
            &a - &su3.omega().scale(&(two_thirds.clone() * eta[i].clone()))
        })
        .collect();
    check_torsion_form(&gamma, pair, su3.spinor())?;
    Ok(gamma)
}

/// Dimension 7: `Γ(X) = −⅔ S(X)⌟Ψ`, each value orthogonal to g₂.
pub fn intrinsic_torsion_form_g2<T: Scalar>(
    pair: &IntrinsicPair<T>,
    g2: &G2Structure<T>,
) -> Result<Vec<AltForm<T>>> {
    let c = T::ratio(-2, 3);
    let gamma: Vec<AltForm<T>> = (0..7)
        .map(|i| g2.psi().interior(&pair.s.column(i)).scale(&c))
        .collect();
    check_torsion_form(&gamma, pair, g2.spinor())?;
    Ok(gamma)
}

fn check_torsion_form<T: Scalar>(
    gamma: &[AltForm<T>],
    pair: &IntrinsicPair<T>,
    dir: &crate::structure::SpinorDirection<T>,
) -> Result<()> {
    let n = pair.dim();
    let basis = crate::clifford::GammaBasis::new(n)?;
    let jet = super::jet::SpinorJet::from_pair(dir.clone(), pair)?;
    let half = T::ratio(1, 2);
    for (i, g) in gamma.iter().enumerate() {
        if !basis
            .form_apply(g, dir.spinor())?
            .scale(&half)
            .approx_eq(&jet.dphi()[i])
        {
            return Err(Error::Consistency(alloc::format!(
                "½Γ(e{})φ ≠ ∇_(e{})φ",
                i + 1,
                i + 1
            )));
        }
    }
    let stabilizer = stabilizer_algebra(dir, n)?;
    for g in gamma {
        if stabilizer.iter().any(|a| !a.inner(g).is_near_zero()) {
            return Err(Error::Consistency(
                "Γ has a component in the stabilizer algebra".into(),
            ));
        }
    }
    Ok(())
}

/// The 2-forms annihilating `φ` under Clifford action: su(3) in dimension 6,
/// g₂ in dimension 7.
pub fn stabilizer_algebra<T: Scalar>(
    dir: &crate::structure::SpinorDirection<T>,
    n: usize,
) -> Result<Vec<AltForm<T>>> {
    let basis = crate::clifford::GammaBasis::new(n)?;
    let pairs = crate::forms::combinations(n, 2);
    let cols: Vec<Vec<T>> = pairs
        .iter()
        .map(|p| basis.e(p[0], &basis.e(p[1], dir.spinor())).0.to_vec())
        .collect();
    let m = Matrix::from_columns(&cols);
    Ok(m.nullspace()
        .into_iter()
        .map(|v| {
            let mut form = AltForm::zero(2, n);
            for (p, c) in pairs.iter().zip(v) {
                form.add_term(&[p[0] + 1, p[1] + 1], c).expect("valid pair");
            }
            form
        })
        .collect())
}

/// Rotation of the defining spinor by a constant angle `α`:
/// `S ↦ cos(2α)S + sin(2α)JS`, `η` unchanged.
///
/// Takes `(cos 2α, sin 2α)` so that rational points on the circle stay exact.
pub fn su3_rotation<T: Scalar>(
    pair: &IntrinsicPair<T>,
    j: &Matrix<T>,
    cos_2a: &T,
    sin_2a: &T,
) -> Result<IntrinsicPair<T>> {
    let r = cos_2a.clone() * cos_2a.clone() + sin_2a.clone() * sin_2a.clone();
    if !r.approx_eq(&T::one()) {
        return Err(Error::Precondition("cos²2α + sin²2α ≠ 1".into()));
    }
    let eta = pair
        .eta
        .clone()
        .ok_or_else(|| Error::Invalid("SU(3) rotation needs η".into()))?;
    let s = &pair.s.scale(cos_2a) + &(j * &pair.s).scale(sin_2a);
    Ok(IntrinsicPair::su3(s, eta))
}

/// Projectors onto the irreducible components of End(ℝⁿ), as `n² × n²`
/// matrices acting on row-major vectorized endomorphisms.
pub fn su3_projectors<T: Scalar>(j: &Matrix<T>) -> Result<Vec<(Component, Matrix<T>)>> {
    let zero_eta = alloc::vec![T::zero(); 6];
    let parts = |m: &Matrix<T>| -> Result<[Matrix<T>; 6]> {
        let d = decompose_su3(&IntrinsicPair::su3(m.clone(), zero_eta.clone()), j)?;
        Ok([
            j.scale(&d.lambda),
            Matrix::identity(6).scale(&d.mu),
            d.s2,
            d.s2_bar,
            d.s3,
            d.s4,
        ])
    };
    let mut cols: [Vec<Vec<T>>; 6] = Default::default();
    for k in 0..36 {
        let e = Matrix::from_fn(
            6,
            6,
            |r, c| if r * 6 + c == k { T::one() } else { T::zero() },
        );
        for (slot, p) in cols.iter_mut().zip(parts(&e)?) {
            slot.push(p.entries().to_vec());
        }
    }
    Ok(Component::SU3[..6]
        .iter()
        .copied()
        .zip(cols.iter().map(|c| Matrix::from_columns(c)))
        .collect())
}

pub fn g2_projectors<T: Scalar>(g2: &G2Structure<T>) -> Result<Vec<(Component, Matrix<T>)>> {
    let mut cols: [Vec<Vec<T>>; 4] = Default::default();
    for k in 0..49 {
        let e = Matrix::from_fn(
            7,
            7,
            |r, c| if r * 7 + c == k { T::one() } else { T::zero() },
        );
        let d = decompose_g2(&e, g2)?;
        let parts = [Matrix::identity(7).scale(&d.lambda), d.s2, d.s3, d.s4];
        for (slot, p) in cols.iter_mut().zip(parts) {
            slot.push(p.entries().to_vec());
        }
    }
    Ok(Component::G2
        .iter()
        .copied()
        .zip(cols.iter().map(|c| Matrix::from_columns(c)))
        .collect())
}
