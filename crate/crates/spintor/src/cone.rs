//! Spin cone sweeps: `S̄(t)` and its G₂ class at each sample.

use serde::Deserialize;
use serde_json::{json, Value};
use spintor_core::hypersurface::{cone_class_label, spin_cone_sbar, ConeSpec, PhaseFn, ScaleFn};
use spintor_core::scalar::FLOAT_TOLERANCE;
use spintor_core::structure::{G2Structure, SpinorDirection, Su3Structure};
use spintor_core::torsion::{decompose_g2, decompose_su3, ClassSet, IntrinsicPair};
use spintor_core::{Matrix, Scalar};

use crate::error::{CliError, Result};
use crate::value::{matrix_json, parse_matrix, parse_spinor, parse_vector};

#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase", deny_unknown_fields)]
pub enum ScaleInput {
    Affine { slope: f64, intercept: f64 },
    Sine,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase", deny_unknown_fields)]
pub enum PhaseInput {
    Constant,
    Exp { c: f64, d: f64 },
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SampleRange {
    pub from: f64,
    pub to: f64,
    pub count: usize,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum Samples {
    List(Vec<f64>),
    Range(SampleRange),
}

impl Samples {
    pub fn points(&self) -> Result<Vec<f64>> {
        match self {
            Samples::List(v) if v.is_empty() => Err(CliError::input("no samples")),
            Samples::List(v) => Ok(v.clone()),
            Samples::Range(r) if r.count == 0 => {
                Err(CliError::input("sample count must be positive"))
            }
            Samples::Range(r) if r.count == 1 => Ok(vec![r.from]),
            Samples::Range(r) => Ok((0..r.count)
                .map(|k| r.from + (r.to - r.from) * k as f64 / (r.count - 1) as f64)
                .collect()),
        }
    }
}

/// A cone job: the SU(3) data `(S, η)` on `M⁶`, the spinor, `f`, `h` and samples.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConeInput {
    pub spinor: Vec<Value>,
    pub s: Vec<Vec<Value>>,
    #[serde(default)]
    pub eta: Option<Vec<Value>>,
    pub f: ScaleInput,
    pub h: PhaseInput,
    pub samples: Samples,
}

impl ConeInput {
    pub fn spec(&self) -> Result<ConeSpec> {
        let f = match self.f {
            ScaleInput::Affine { slope, intercept } => ScaleFn::Affine { slope, intercept },
            ScaleInput::Sine => ScaleFn::Sine,
        };
        let h = match self.h {
            PhaseInput::Constant => PhaseFn::Constant,
            PhaseInput::Exp { c, d } => PhaseFn::Exp { c, d },
        };
        let spec = ConeSpec {
            f,
            h,
            samples: self.samples.points()?,
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// One sample of a sweep.
#[derive(Clone, Debug, PartialEq)]
pub struct ConeSample {
    pub t: f64,
    pub sbar: Matrix<f64>,
    pub class: ClassSet,
}

pub fn sweep(input: &ConeInput) -> Result<Vec<ConeSample>> {
    let spec = input.spec()?;
    let phi = parse_spinor(&input.spinor)?;
    let su3 = Su3Structure::from_direction(SpinorDirection::new(phi.clone())?)?;
    let s = parse_matrix(&input.s, 6, "s")?.map(Scalar::to_f64);
    let eta = match &input.eta {
        Some(e) => parse_vector(e, 6, "eta")?
            .iter()
            .map(Scalar::to_f64)
            .collect(),
        None => vec![0.0; 6],
    };
    let dec = decompose_su3(&IntrinsicPair::su3(s, eta), &su3.j().map(Scalar::to_f64))?;
    let g2 = G2Structure::from_direction(SpinorDirection::new(phi.map(Scalar::to_f64))?)?;
    spec.samples
        .iter()
        .map(|&t| {
            let sbar = spin_cone_sbar(&dec, &spec, t)?;
            let class = decompose_g2(&sbar, &g2)?.classify(FLOAT_TOLERANCE);
            Ok(ConeSample { t, sbar, class })
        })
        .collect()
}

/// The class shared by every sample, if there is one.
pub fn constant_class(samples: &[ConeSample]) -> Option<ClassSet> {
    let first = samples.first()?.class;
    samples.iter().all(|s| s.class == first).then_some(first)
}

pub fn report(samples: &[ConeSample]) -> Value {
    let rows: Vec<Value> = samples
        .iter()
        .map(|s| json!({"t": s.t, "sbar": matrix_json(&s.sbar), "class": s.class.tokens(), "label": cone_class_label(s.class)}))
        .collect();
    json!({
        "constant_class": constant_class(samples).map(cone_class_label),
        "samples": rows,
    })
}
