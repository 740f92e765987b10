//! Spinor jets and their intrinsic tensors.

use alloc::vec::Vec;

use crate::clifford::{j, GammaBasis, Spinor};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;
use crate::structure::SpinorDirection;

/// A spinor `φ` with its frame derivatives `∇_{e_i}φ`.
///
/// `φ` need not be unit: the jet of `φ/|φ|` is `dphi/|φ|`, and every quantity
/// derived here is invariant under that common scaling.
#[derive(Clone, Debug, PartialEq)]
pub struct SpinorJet<T> {
    dim: usize,
    phi: SpinorDirection<T>,
    dphi: Vec<Spinor<T>>,
}

impl<T: Scalar> SpinorJet<T> {
    /// Fails unless `⟨∇_{e_i}φ, φ⟩ = 0` for every `i`.
    pub fn new(dim: usize, phi: Spinor<T>, dphi: Vec<Spinor<T>>) -> Result<Self> {
        Self::from_direction(dim, SpinorDirection::new(phi)?, dphi)
    }

    pub fn from_direction(
        dim: usize,
        phi: SpinorDirection<T>,
        dphi: Vec<Spinor<T>>,
    ) -> Result<Self> {
        GammaBasis::new(dim)?;
        if dphi.len() != dim {
            return Err(Error::Dimension {
                expected: dim,
                found: dphi.len(),
            });
        }
        for (i, d) in dphi.iter().enumerate() {
            if !d.dot(phi.spinor()).is_near_zero() {
                return Err(Error::JetNotOrthogonal(i + 1));
            }
        }
        Ok(Self { dim, phi, dphi })
    }

    /// The parallel jet `∇φ = 0`.
    pub fn parallel(dim: usize, phi: SpinorDirection<T>) -> Result<Self> {
        Self::from_direction(dim, phi, (0..dim).map(|_| Spinor::zero()).collect())
    }

    /// Rebuilds `∇_{e_i}φ = η(e_i) jφ + S(e_i)φ` from an intrinsic pair.
    pub fn from_pair(phi: SpinorDirection<T>, pair: &IntrinsicPair<T>) -> Result<Self> {
        let dim = pair.dim();
        let gamma = GammaBasis::new(dim)?;
        if pair.eta.is_some() != (dim == 6) {
            return Err(Error::Invalid("η is present exactly in dimension 6".into()));
        }
        let p = phi.spinor();
        let jp = j(p);
        let dphi = (0..dim)
            .map(|i| {
                let mut v = gamma.vector_apply(&pair.s.column(i), p)?;
                if let Some(eta) = &pair.eta {
                    v = &v + &jp.scale(&eta[i]);
                }
                Ok(v)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_direction(dim, phi, dphi)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn direction(&self) -> &SpinorDirection<T> {
        &self.phi
    }

    pub fn phi(&self) -> &Spinor<T> {
        self.phi.spinor()
    }

    pub fn dphi(&self) -> &[Spinor<T>] {
        &self.dphi
    }

    pub fn gamma(&self) -> GammaBasis {
        GammaBasis::new(self.dim).expect("validated on construction")
    }

    /// `∇_X φ` for a vector in the frame.
    pub fn nabla(&self, x: &[T]) -> Spinor<T> {
        assert_eq!(x.len(), self.dim);
        x.iter()
            .zip(&self.dphi)
            .filter(|(c, _)| !c.is_zero())
            .fold(Spinor::zero(), |acc, (c, d)| &acc + &d.scale(c))
    }

    /// Dirac operator `Dφ = Σ e_i · ∇_{e_i}φ`.
    pub fn dirac(&self) -> Spinor<T> {
        let gamma = self.gamma();
        self.dphi
            .iter()
            .enumerate()
            .fold(Spinor::zero(), |acc, (i, d)| &acc + &gamma.e(i, d))
    }

    /// The jet with every derivative replaced by `f(i, ∇_{e_i}φ)`.
    pub fn map_derivatives(
        &self,
        mut f: impl FnMut(usize, &Spinor<T>) -> Spinor<T>,
    ) -> Result<Self> {
        let dphi = self.dphi.iter().enumerate().map(|(i, d)| f(i, d)).collect();
        Self::from_direction(self.dim, self.phi.clone(), dphi)
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.dim == other.dim
            && self.phi.spinor().approx_eq(other.phi.spinor())
            && self
                .dphi
                .iter()
                .zip(&other.dphi)
                .all(|(a, b)| a.approx_eq(b))
    }
}

/// Intrinsic endomorphism `S` (column `i` is `S(e_i)`) and, in dimension 6,
/// the intrinsic 1-form `η`.
#[derive(Clone, Debug, PartialEq)]
pub struct IntrinsicPair<T> {
    pub s: Matrix<T>,
    pub eta: Option<Vec<T>>,
}

impl<T: Scalar> IntrinsicPair<T> {
    pub fn zero(dim: usize) -> Self {
        Self {
            s: Matrix::zeros(dim, dim),
            eta: (dim == 6).then(|| alloc::vec![T::zero(); 6]),
        }
    }

    pub fn su3(s: Matrix<T>, eta: Vec<T>) -> Self {
        assert_eq!((s.rows(), s.cols(), eta.len()), (6, 6, 6));
        Self { s, eta: Some(eta) }
    }

    pub fn g2(s: Matrix<T>) -> Self {
        assert_eq!((s.rows(), s.cols()), (7, 7));
        Self { s, eta: None }
    }

    pub fn dim(&self) -> usize {
        self.s.rows()
    }

    /// `η`, or the zero form in dimension 7.
    pub fn eta_or_zero(&self) -> Vec<T> {
        self.eta
            .clone()
            .unwrap_or_else(|| alloc::vec![T::zero(); self.dim()])
    }

    pub fn scale(&self, c: &T) -> Self {
        Self {
            s: self.s.scale(c),
            eta: self
                .eta
                .as_ref()
                .map(|e| e.iter().map(|x| x.clone() * c.clone()).collect()),
        }
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.s.approx_eq(&other.s)
            && match (&self.eta, &other.eta) {
                (None, None) => true,
                (Some(a), Some(b)) => a.iter().zip(b).all(|(x, y)| x.approx_eq(y)),
                _ => false,
            }
    }
}

/// `g(S(X),Y) = ⟨∇_Xφ, Yφ⟩` and `η(X) = ⟨∇_Xφ, jφ⟩`, normalized by `|φ|²`.
///
/// The reconstruction `∇_{e_i}φ = η(e_i) jφ + S(e_i)φ` is verified.
pub fn extract_intrinsic<T: Scalar>(jet: &SpinorJet<T>) -> Result<IntrinsicPair<T>> {
    let dir = jet.direction();
    let gamma = jet.gamma();
    let n = jet.dim();
    let images = gamma.frame_images(jet.phi());
    let s = Matrix::from_fn(n, n, |k, i| dir.pair(&jet.dphi()[i], &images[k]));
    let eta = (n == 6).then(|| {
        let jp = j(jet.phi());
        jet.dphi()
            .iter()
            .map(|d| dir.pair(d, &jp))
            .collect::<Vec<_>>()
    });
    let pair = IntrinsicPair { s, eta };
    let rebuilt = SpinorJet::from_pair(dir.clone(), &pair)?;
    if !rebuilt.approx_eq(jet) {
        return Err(Error::Consistency(
            "jet is not of the form η jφ + S(X)φ".into(),
        ));
    }
    Ok(pair)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Rational};

    type Q = Rational;

    fn u8dir() -> SpinorDirection<Q> {
        SpinorDirection::new(Spinor::basis(8)).unwrap()
    }

    #[test]
    fn zero_jet_gives_zero_pair() {
        let jet = SpinorJet::parallel(6, u8dir()).unwrap();
        assert_eq!(extract_intrinsic(&jet).unwrap(), IntrinsicPair::zero(6));
        let jet = SpinorJet::parallel(7, u8dir()).unwrap();
        assert_eq!(extract_intrinsic(&jet).unwrap(), IntrinsicPair::zero(7));
    }

    #[test]
    fn killing_jet_gives_multiple_of_identity() {
        let phi = Spinor::<Q>::from_i64([1, 2, 0, -1, 0, 0, 3, 1]);
        let gamma = GammaBasis::six();
        let mu = rat(-3, 7);
        let dphi = (0..6).map(|i| gamma.e(i, &phi).scale(&mu)).collect();
        let jet = SpinorJet::new(6, phi, dphi).unwrap();
        let pair = extract_intrinsic(&jet).unwrap();
        assert_eq!(pair.s, Matrix::identity(6).scale(&mu));
        assert!(pair.eta.unwrap().iter().all(|x| *x == rat(0, 1)));
    }

    #[test]
    fn non_orthogonal_jet_rejected() {
        let phi = Spinor::<Q>::basis(8);
        let mut dphi: Vec<Spinor<Q>> = (0..6).map(|_| Spinor::zero()).collect();
        dphi[2] = Spinor::basis(8);
        assert_eq!(
            SpinorJet::new(6, phi, dphi).unwrap_err(),
            Error::JetNotOrthogonal(3)
        );
    }
}
