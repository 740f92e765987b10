//! Job files: a Lie algebra given by structure equations, or a prescribed
//! intrinsic pair, together with a spinor.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;
use serde_json::Value;
use spintor_core::frame::{spin_lift_jet, BracketConvention, LieAlgebraSpec};
use spintor_core::structure::SpinorDirection;
use spintor_core::torsion::{IntrinsicPair, SpinorJet};
use spintor_core::Rational;

use crate::error::{CliError, Result};
use crate::value::{parse_matrix, parse_rational, parse_spinor, parse_vector};

/// One term `coef · e^{ab}` of a differential `de^k`.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    pub idx: [usize; 2],
    pub coef: Value,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairInput {
    pub s: Vec<Vec<Value>>,
    #[serde(default)]
    pub eta: Option<Vec<Value>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureInput {
    pub dim: usize,
    #[serde(default)]
    pub d: Option<BTreeMap<String, Vec<Term>>>,
    #[serde(default)]
    pub pair: Option<PairInput>,
    pub spinor: Vec<Value>,
    /// `"reversed"` (default) or `"direct"`.
    #[serde(default)]
    pub convention: Option<String>,
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.into(),
        source,
    })?;
    Ok(serde_json::from_str(&text)?)
}

fn convention(name: Option<&str>) -> Result<BracketConvention> {
    match name {
        None | Some("reversed") => Ok(BracketConvention::Reversed),
        Some("direct") => Ok(BracketConvention::Direct),
        Some(other) => Err(CliError::input(format!(
            "unknown bracket convention {other:?}"
        ))),
    }
}

impl StructureInput {
    pub fn from_path(path: &Path) -> Result<Self> {
        read_json(path)
    }

    pub fn lie_algebra(&self) -> Result<LieAlgebraSpec<Rational>> {
        let d = self
            .d
            .as_ref()
            .ok_or_else(|| CliError::input("no structure equations \"d\""))?;
        let mut terms = Vec::new();
        for (k, list) in d {
            let k: usize = k
                .trim()
                .parse()
                .map_err(|_| CliError::input(format!("bad differential key {k:?}")))?;
            for t in list {
                terms.push((k, t.idx[0], t.idx[1], parse_rational(&t.coef)?));
            }
        }
        Ok(LieAlgebraSpec::from_differentials(
            self.dim,
            terms,
            convention(self.convention.as_deref())?,
        )?)
    }

    pub fn pair(&self) -> Result<IntrinsicPair<Rational>> {
        let p = self
            .pair
            .as_ref()
            .ok_or_else(|| CliError::input("no intrinsic pair \"pair\""))?;
        let s = parse_matrix(&p.s, self.dim, "s")?;
        match (self.dim, &p.eta) {
            (6, Some(eta)) => Ok(IntrinsicPair::su3(s, parse_vector(eta, 6, "eta")?)),
            (6, None) => Ok(IntrinsicPair::su3(s, vec![Rational::default(); 6])),
            (7, None) => Ok(IntrinsicPair::g2(s)),
            (7, Some(_)) => Err(CliError::input("eta is only meaningful in dimension 6")),
            (n, _) => Err(spintor_core::Error::UnsupportedDimension(n).into()),
        }
    }

    /// The exact jet described by the file.
    pub fn jet(&self) -> Result<SpinorJet<Rational>> {
        let dir = SpinorDirection::new(parse_spinor(&self.spinor)?)?;
        match (&self.d, &self.pair) {
            (Some(_), None) => Ok(spin_lift_jet(&self.lie_algebra()?, dir)?),
            (None, Some(_)) => Ok(SpinorJet::from_pair(dir, &self.pair()?)?),
            (None, None) if self.dim == 6 || self.dim == 7 => {
                Ok(SpinorJet::parallel(self.dim, dir)?)
            }
            (None, None) => Err(spintor_core::Error::UnsupportedDimension(self.dim).into()),
            (Some(_), Some(_)) => Err(CliError::input("give either \"d\" or \"pair\", not both")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> Result<StructureInput> {
        Ok(serde_json::from_str(text)?)
    }

    #[test]
    fn unknown_fields_and_bad_keys_are_rejected() {
        assert!(parse(r#"{"dim":6,"spinor":[],"extra":1}"#).is_err());
        let bad_key =
            parse(r#"{"dim":6,"d":{"x":[]},"spinor":["1","0","0","0","0","0","0","0"]}"#).unwrap();
        assert!(bad_key.jet().is_err());
        let conv = parse(
            r#"{"dim":6,"d":{},"spinor":["1","0","0","0","0","0","0","0"],"convention":"odd"}"#,
        )
        .unwrap();
        assert!(conv.jet().is_err());
    }

    #[test]
    fn empty_differentials_give_a_parallel_spinor() {
        let input =
            parse(r#"{"dim":6,"d":{},"spinor":["0","0","0","0","0","0","0","2"]}"#).unwrap();
        assert!(input.jet().unwrap().dphi().iter().all(|d| d.is_zero()));
    }

    #[test]
    fn pair_dimension_is_checked() {
        let input =
            parse(r#"{"dim":6,"pair":{"s":[["1"]]},"spinor":["1","0","0","0","0","0","0","0"]}"#)
                .unwrap();
        assert!(input.jet().is_err());
    }
}
