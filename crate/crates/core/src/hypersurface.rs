//! Hypersurfaces `M⁶ ⊂ M̄⁷` and spin cones over SU(3)-structures.
//!
//! The 7-frame is `e₁…e₆` tangent to `M⁶` and `e₇` along the normal line. The
//! intrinsic endomorphism of the ambient G₂-structure is assembled as
//!
//! ```text
//!       ⎡ JS − ½JW   0 ⎤
//!  S̄ =  ⎣    η       ∗ ⎦
//! ```
//!
//! with the bottom row in the normal coordinate and `∗ = 0` when `∇_Vφ = 0`.

use alloc::string::String;
use alloc::vec::Vec;

use crate::clifford::{j, GammaBasis, Spinor};
use crate::error::{Error, Result};
use crate::forms::AltForm;
use crate::linalg::Matrix;
use crate::scalar::Scalar;
use crate::torsion::{decompose_su3, ClassSet, Component, IntrinsicPair, Su3Decomposition};

use Component::*;

/// Weingarten types, named by the class of `W` as an SU(3) endomorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WeingartenType {
    /// `W = 0`.
    Zero,
    /// `W = μId`, class χ₁̄.
    I,
    /// Symmetric, traceless, commuting with `J`: class χ₂̄.
    II,
    /// Symmetric, anticommuting with `J`: class χ₃.
    III,
}

impl WeingartenType {
    pub const ALL: [WeingartenType; 4] = [
        WeingartenType::Zero,
        WeingartenType::I,
        WeingartenType::II,
        WeingartenType::III,
    ];

    pub fn token(self) -> &'static str {
        match self {
            WeingartenType::Zero => "0",
            WeingartenType::I => "I",
            WeingartenType::II => "II",
            WeingartenType::III => "III",
        }
    }

    pub fn from_token(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|t| t.token() == s)
            .ok_or_else(|| Error::Invalid(alloc::format!("unknown Weingarten type {s:?}")))
    }

    /// The SU(3) class a Weingarten map of this type carries.
    pub fn class(self) -> ClassSet {
        match self {
            WeingartenType::Zero => ClassSet::EMPTY,
            WeingartenType::I => ClassSet::of(&[Chi1Bar]),
            WeingartenType::II => ClassSet::of(&[Chi2Bar]),
            WeingartenType::III => ClassSet::of(&[Chi3]),
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

/// A symmetric Weingarten map with a validated type.
#[derive(Clone, Debug, PartialEq)]
pub struct WeingartenSpec<T> {
    w: Matrix<T>,
    kind: WeingartenType,
}

impl<T: Scalar> WeingartenSpec<T> {
    pub fn new(w: Matrix<T>, kind: WeingartenType, j: &Matrix<T>) -> Result<Self> {
        if !w.approx_eq(&w.transpose()) {
            return Err(Error::Precondition(
                "Weingarten map must be symmetric".into(),
            ));
        }
        let dec = decompose_su3(&IntrinsicPair::su3(w.clone(), alloc::vec![T::zero(); 6]), j)?;
        if dec.classify(0.0) != kind.class() {
            return Err(Error::Precondition(alloc::format!(
                "W of class {} is not of type {}",
                dec.classify(0.0),
                kind.token()
            )));
        }
        Ok(Self { w, kind })
    }

    pub fn zero() -> Self {
        Self {
            w: Matrix::zeros(6, 6),
            kind: WeingartenType::Zero,
        }
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.w
    }

    pub fn kind(&self) -> WeingartenType {
        self.kind
    }
}

/// `S̄` from the hypersurface data, assuming `∇_Vφ = 0`.
pub fn sbar_embed<T: Scalar>(
    pair: &IntrinsicPair<T>,
    w: &Matrix<T>,
    j: &Matrix<T>,
) -> Result<Matrix<T>> {
    let eta = pair
        .eta
        .as_ref()
        .ok_or_else(|| Error::Invalid("embedding needs η".into()))?;
    let upper = &(j * &pair.s) - &(j * w).scale(&T::ratio(1, 2));
    Ok(Matrix::from_fn(7, 7, |r, c| match (r, c) {
        (6, 6) => T::zero(),
        (6, c) => eta[c].clone(),
        (_, 6) => T::zero(),
        (r, c) => upper.get(r, c).clone(),
    }))
}

/// Inverse of [`sbar_embed`] on `TM⁶`: `S = −JS̄|_{TM} + ½W`, `η = S̄`'s normal row.
pub fn restrict_pair<T: Scalar>(
    sbar: &Matrix<T>,
    w: &Matrix<T>,
    j: &Matrix<T>,
) -> IntrinsicPair<T> {
    let block = Matrix::from_fn(6, 6, |r, c| sbar.get(r, c).clone());
    let s = &(-&(j * &block)) + &w.scale(&T::ratio(1, 2));
    IntrinsicPair::su3(s, (0..6).map(|c| sbar.get(6, c).clone()).collect())
}

const fn cs(c: &[Component]) -> ClassSet {
    ClassSet::of(c)
}

/// Rows: Weingarten type 0, I, II, III. Columns: χ₁, χ₁̄, χ₂, χ₂̄, χ₃, χ₄, χ₅.
pub const EMBED_TABLE: [[ClassSet; 7]; 4] = [
    [
        cs(&[W1, W3]),
        cs(&[W4]),
        cs(&[W3]),
        cs(&[W2]),
        cs(&[W3]),
        cs(&[W2, W4]),
        cs(&[W2, W3, W4]),
    ],
    [
        cs(&[W1, W3, W4]),
        cs(&[W4]),
        cs(&[W3, W4]),
        cs(&[W2, W4]),
        cs(&[W3, W4]),
        cs(&[W2, W4]),
        cs(&[W2, W3, W4]),
    ],
    [
        cs(&[W1, W2, W3]),
        cs(&[W2, W4]),
        cs(&[W2, W3]),
        cs(&[W2]),
        cs(&[W2, W3]),
        cs(&[W2, W4]),
        cs(&[W2, W3, W4]),
    ],
    [
        cs(&[W1, W3]),
        cs(&[W3, W4]),
        cs(&[W3]),
        cs(&[W2, W3]),
        cs(&[W3]),
        cs(&[W2, W3, W4]),
        cs(&[W2, W3, W4]),
    ],
];

/// Rows: Weingarten type. Columns: W₁…W₄. Each cell is the exact class of the
/// induced structure for a generic ambient endomorphism of that pure class.
pub const RESTRICT_TABLE: [[ClassSet; 4]; 4] = [
    [
        cs(&[Chi1]),
        cs(&[Chi2Bar, Chi4, Chi5]),
        cs(&[Chi1, Chi2, Chi3, Chi5]),
        cs(&[Chi1Bar, Chi4, Chi5]),
    ],
    [
        cs(&[Chi1, Chi1Bar]),
        cs(&[Chi1Bar, Chi2Bar, Chi4, Chi5]),
        cs(&[Chi1, Chi1Bar, Chi2, Chi3, Chi5]),
        cs(&[Chi1Bar, Chi4, Chi5]),
    ],
    [
        cs(&[Chi1, Chi2Bar]),
        cs(&[Chi2Bar, Chi4, Chi5]),
        cs(&[Chi1, Chi2, Chi2Bar, Chi3, Chi5]),
        cs(&[Chi1Bar, Chi2Bar, Chi4, Chi5]),
    ],
    [
        cs(&[Chi1, Chi3]),
        cs(&[Chi2Bar, Chi3, Chi4, Chi5]),
        cs(&[Chi1, Chi2, Chi3, Chi5]),
        cs(&[Chi1Bar, Chi3, Chi4, Chi5]),
    ],
];

/// The restriction table in its customary form, where the W₂ column also
/// lists χ₁̄ for every type. Each cell contains the sharp one.
pub const RESTRICT_TABLE_BOUNDS: [[ClassSet; 4]; 4] = [
    [
        cs(&[Chi1]),
        cs(&[Chi1Bar, Chi2Bar, Chi4, Chi5]),
        cs(&[Chi1, Chi2, Chi3, Chi5]),
        cs(&[Chi1Bar, Chi4, Chi5]),
    ],
    [
        cs(&[Chi1, Chi1Bar]),
        cs(&[Chi1Bar, Chi2Bar, Chi4, Chi5]),
        cs(&[Chi1, Chi1Bar, Chi2, Chi3, Chi5]),
        cs(&[Chi1Bar, Chi4, Chi5]),
    ],
    [
        cs(&[Chi1, Chi2Bar]),
        cs(&[Chi1Bar, Chi2Bar, Chi4, Chi5]),
        cs(&[Chi1, Chi2, Chi2Bar, Chi3, Chi5]),
        cs(&[Chi1Bar, Chi2Bar, Chi4, Chi5]),
    ],
    [
        cs(&[Chi1, Chi3]),
        cs(&[Chi1Bar, Chi2Bar, Chi3, Chi4, Chi5]),
        cs(&[Chi1, Chi2, Chi3, Chi5]),
        cs(&[Chi1Bar, Chi3, Chi4, Chi5]),
    ],
];

/// G₂ class of the ambient structure. Mixed classes take the union of the
/// pure-class cells, an upper bound.
pub fn embed_class_table(class: ClassSet, kind: WeingartenType) -> ClassSet {
    let row = &EMBED_TABLE[kind.index()];
    let mut out = ClassSet::EMPTY;
    for (k, c) in Component::SU3.iter().enumerate() {
        if class.contains(*c) {
            out = out.union(row[k]);
        }
    }
    // the Weingarten map alone already contributes through −½JW
    if class.is_empty() {
        out = embed_weingarten_only(kind);
    }
    out
}

fn embed_weingarten_only(kind: WeingartenType) -> ClassSet {
    match kind {
        WeingartenType::Zero => ClassSet::EMPTY,
        WeingartenType::I => ClassSet::of(&[W4]),
        WeingartenType::II => ClassSet::of(&[W2]),
        WeingartenType::III => ClassSet::of(&[W3]),
    }
}

/// SU(3) class of the hypersurface, union over the pure components of `class`.
pub fn restrict_class_table(class: ClassSet, kind: WeingartenType) -> ClassSet {
    let row = &RESTRICT_TABLE[kind.index()];
    let mut out = ClassSet::EMPTY;
    for (k, c) in Component::G2.iter().enumerate() {
        if class.contains(*c) {
            out = out.union(row[k]);
        }
    }
    if class.is_empty() {
        out = kind.class();
    }
    out
}

/// Identities relating Clifford multiplication on `M⁶` and on `M̄⁷` for the
/// normal `V = −e₇`.
#[derive(Clone, Debug, PartialEq)]
pub struct CliffordRestrictionReport {
    /// `Vφ = jφ`.
    pub normal_is_j: bool,
    /// `VXφ = (JX)φ` for every frame vector.
    pub normal_twists_by_j: bool,
    /// `e₁⋯e₇ = +Id` on Δ.
    pub volume_is_identity: bool,
}

impl CliffordRestrictionReport {
    pub fn passed(&self) -> bool {
        self.normal_is_j && self.normal_twists_by_j && self.volume_is_identity
    }
}

pub fn clifford_restriction_check<T: Scalar>(phi: &Spinor<T>) -> Result<CliffordRestrictionReport> {
    let su3 = crate::structure::Su3Structure::from_direction(
        crate::structure::SpinorDirection::new(phi.clone())?,
    )?;
    let g7 = GammaBasis::seven();
    let g6 = GammaBasis::six();
    let v = |s: &Spinor<T>| -&g7.e(6, s);
    let normal_is_j = v(phi).approx_eq(&j(phi));
    let normal_twists_by_j = (0..6).all(|x| {
        let jx = g6
            .vector_apply(&su3.j().column(x), phi)
            .expect("six-vector");
        v(&g6.e(x, phi)).approx_eq(&jx)
    });
    let volume_is_identity = g7.volume_apply(phi).approx_eq(phi);
    Ok(CliffordRestrictionReport {
        normal_is_j,
        normal_twists_by_j,
        volume_is_identity,
    })
}

/// The cone's scale function `f`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ScaleFn {
    /// `f(t) = slope·t + intercept`.
    Affine { slope: f64, intercept: f64 },
    /// `f(t) = sin t`.
    Sine,
}

impl ScaleFn {
    pub fn value(self, t: f64) -> f64 {
        match self {
            ScaleFn::Affine { slope, intercept } => slope * t + intercept,
            ScaleFn::Sine => libm::sin(t),
        }
    }

    pub fn derivative(self, t: f64) -> f64 {
        match self {
            ScaleFn::Affine { slope, .. } => slope,
            ScaleFn::Sine => libm::cos(t),
        }
    }
}

/// The unit-complex phase `h`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PhaseFn {
    /// `h = 1`.
    Constant,
    /// `h(t) = exp(i(ct + d))`.
    Exp { c: f64, d: f64 },
}

impl PhaseFn {
    fn angle(self, t: f64) -> f64 {
        match self {
            PhaseFn::Constant => 0.0,
            PhaseFn::Exp { c, d } => c * t + d,
        }
    }

    /// `(Re h², Im h²)`.
    pub fn square(self, t: f64) -> (f64, f64) {
        let a = 2.0 * self.angle(t);
        (libm::cos(a), libm::sin(a))
    }

    /// `−i h′/h`, real because `|h| = 1`.
    pub fn log_derivative(self) -> f64 {
        match self {
            PhaseFn::Constant => 0.0,
            PhaseFn::Exp { c, .. } => c,
        }
    }
}

/// A spin cone `(M⁶ × I, f(t)²g + dt², h(t)φ)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConeSpec {
    pub f: ScaleFn,
    pub h: PhaseFn,
    pub samples: Vec<f64>,
}

impl ConeSpec {
    pub fn validate(&self) -> Result<()> {
        for &t in &self.samples {
            if !t.is_finite()
                || self.f.value(t).partial_cmp(&0.0) != Some(core::cmp::Ordering::Greater)
            {
                return Err(Error::Precondition(alloc::format!(
                    "f({t}) must be positive"
                )));
            }
        }
        Ok(())
    }
}

/// `aA = (Re a)A + (Im a)JA` for `a = h²` given as `(Re, Im)`, divided by `f`:
/// the intrinsic pair `((h²/f)S, η)` of `(M⁶, f²g, hφ)`.
pub fn rotated_pair<T: Scalar>(
    pair: &IntrinsicPair<T>,
    j: &Matrix<T>,
    h2: (&T, &T),
    f: &T,
) -> Result<IntrinsicPair<T>> {
    if f.is_zero() {
        return Err(Error::Precondition("f must be nonzero".into()));
    }
    let eta = pair
        .eta
        .clone()
        .ok_or_else(|| Error::Invalid("rotation needs η".into()))?;
    let s = &pair.s.scale(h2.0) + &(j * &pair.s).scale(h2.1);
    Ok(IntrinsicPair::su3(s.scale(&(T::one() / f.clone())), eta))
}

/// `S̄(t)` of a spin cone, from the matrix form
/// `[(h²/f)JS + (f′/2f)J, 0; η, −ih′/h]` and checked against the expansion in
/// `λ, μ` and `R = S − λJ − μId`.
pub fn spin_cone_sbar(dec: &Su3Decomposition<f64>, cone: &ConeSpec, t: f64) -> Result<Matrix<f64>> {
    let f = cone.f.value(t);
    if f.partial_cmp(&0.0) != Some(core::cmp::Ordering::Greater) {
        return Err(Error::Precondition(alloc::format!(
            "f({t}) must be positive"
        )));
    }
    let fp = cone.f.derivative(t);
    let (re, im) = cone.h.square(t);
    let jm = dec.j();
    let s = dec.compose().s;
    let js = jm * &s;
    // h²(JS) = Re h²·JS + Im h²·J(JS)
    let upper =
        &(&js.scale(&re) + &(jm * &js).scale(&im)).scale(&(1.0 / f)) + &jm.scale(&(fp / (2.0 * f)));

    let r = &(&s - &jm.scale(&dec.lambda)) - &Matrix::identity(6).scale(&dec.mu);
    let expanded = &(&(&jm.scale(&((-dec.lambda * im + dec.mu * re + fp / 2.0) / f))
        - &Matrix::identity(6).scale(&((dec.lambda * re + dec.mu * im) / f)))
        + &(jm * &r).scale(&(re / f)))
        - &r.scale(&(im / f));
    if !upper.approx_eq(&expanded) {
        return Err(Error::Consistency(alloc::format!(
            "cone matrix and expanded forms differ at t = {t}"
        )));
    }
    let corner = cone.h.log_derivative();
    Ok(Matrix::from_fn(7, 7, |r, c| match (r, c) {
        (6, 6) => corner,
        (6, c) => dec.eta[c],
        (_, 6) => 0.0,
        (r, c) => *upper.get(r, c),
    }))
}

/// `T̄ = a²t²(T − aψ)` as a 3-form on the 7-frame with no normal component.
pub fn twisted_cone_torsion<T: Scalar>(
    t_form: &AltForm<T>,
    psi: &AltForm<T>,
    a: &T,
    t: &T,
) -> Result<AltForm<T>> {
    if t_form.degree() != 3 || psi.degree() != 3 {
        return Err(Error::Degree {
            expected: 3,
            found: if t_form.degree() != 3 {
                t_form.degree()
            } else {
                psi.degree()
            },
        });
    }
    let scale = a.clone() * a.clone() * t.clone() * t.clone();
    Ok((t_form - &psi.scale(a)).scale(&scale).extend_dim(7))
}

/// `∇_Xφ + (a/2)Xφ + (a t)⁻²·¼(X⌟T̄)φ` on `M⁶` for `X = e₁…e₆`.
///
/// This is `∇̄ᶜ_Xφ` written with the Clifford multiplication of `M⁶`, where a
/// 2-form on the cone acts with the extra factor `(at)⁻²`.
pub fn twisted_cone_residuals<T: Scalar>(
    jet: &crate::torsion::SpinorJet<T>,
    t_bar: &AltForm<T>,
    a: &T,
    t: &T,
) -> Result<Vec<Spinor<T>>> {
    twisted_residuals(jet, t_bar, None, a, t, &T::ratio(1, 4))
}

/// `∇̄ˢ_Xφ + (s/t)(X⌟ψ̄)φ` for a Killing spinor with torsion on the twisted cone,
/// in the same Clifford normalization as [`twisted_cone_residuals`].
pub fn twisted_cone_killing_residuals<T: Scalar>(
    jet: &crate::torsion::SpinorJet<T>,
    t_bar: &AltForm<T>,
    psi_bar: &AltForm<T>,
    a: &T,
    t: &T,
    s: &T,
) -> Result<Vec<Spinor<T>>> {
    twisted_residuals(jet, t_bar, Some((psi_bar, s.clone() / t.clone())), a, t, s)
}

fn twisted_residuals<T: Scalar>(
    jet: &crate::torsion::SpinorJet<T>,
    t_bar: &AltForm<T>,
    extra: Option<(&AltForm<T>, T)>,
    a: &T,
    t: &T,
    s: &T,
) -> Result<Vec<Spinor<T>>> {
    if jet.dim() != 6 {
        return Err(Error::Dimension {
            expected: 6,
            found: jet.dim(),
        });
    }
    let gamma = jet.gamma();
    let phi = jet.phi();
    let at = a.clone() * t.clone();
    let cone = T::one() / (at.clone() * at);
    let half_a = a.clone() / T::from_i64(2);
    let restrict = |form: &AltForm<T>, x: usize| -> AltForm<T> {
        AltForm::from_fn(2, 6, |ix| form.on_basis(&[x, ix[0], ix[1]]))
    };
    (0..6)
        .map(|x| {
            let mut r = &jet.dphi()[x] + &gamma.e(x, phi).scale(&half_a);
            r = &r
                + &gamma
                    .form_apply(&restrict(t_bar, x), phi)?
                    .scale(&(s.clone() * cone.clone()));
            if let Some((psi_bar, c)) = &extra {
                r = &r
                    + &gamma
                        .form_apply(&restrict(psi_bar, x), phi)?
                        .scale(&(c.clone() * cone.clone()));
            }
            Ok(r)
        })
        .collect()
}

/// Class label for cone reports: `"parallel"` for the empty class.
pub fn cone_class_label(class: ClassSet) -> String {
    if class.is_empty() {
        "parallel".into()
    } else {
        class.tokens().join("+")
    }
}
