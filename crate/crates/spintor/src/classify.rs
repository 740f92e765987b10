//! The `classify` report: intrinsic torsion, class, derived invariants and the
//! characteristic connection of one jet.

use serde_json::{json, Map, Value};
use spintor_core::connections::{characteristic_su3, characteristic_torsion_g2};
use spintor_core::invariants::{delta_omega, delta_psi_g2, lee_form};
use spintor_core::structure::{G2Structure, Su3Structure};
use spintor_core::torsion::{
    decompose_g2, decompose_su3, extract_intrinsic, ClassSet, Component, SpinorJet,
};
use spintor_core::{Rational, Spinor};

use crate::error::Result;
use crate::value::{form_json, matrix_json, vector_json, JsonScalar};

/// How numbers are carried through the computation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Arithmetic {
    Exact,
    /// Floating point; components with norm below `eps` count as zero.
    Float {
        eps: f64,
    },
}

pub fn to_float_jet(jet: &SpinorJet<Rational>) -> Result<SpinorJet<f64>> {
    let conv = |s: &Spinor<Rational>| s.map(JsonScalar::from_rational);
    Ok(SpinorJet::new(
        jet.dim(),
        conv(jet.phi()),
        jet.dphi().iter().map(conv).collect(),
    )?)
}

pub fn classify(jet: &SpinorJet<Rational>, arithmetic: Arithmetic) -> Result<Value> {
    match arithmetic {
        Arithmetic::Exact => report(jet, 0.0, "exact"),
        Arithmetic::Float { eps } => report(&to_float_jet(jet)?, eps, "float"),
    }
}

fn class_json(class: ClassSet) -> Value {
    json!(class.tokens())
}

fn report<T: JsonScalar>(jet: &SpinorJet<T>, eps: f64, arithmetic: &str) -> Result<Value> {
    let mut out = match jet.dim() {
        6 => su3_report(jet, eps)?,
        _ => g2_report(jet, eps)?,
    };
    let dirac = jet.dirac();
    out.insert("arithmetic".into(), json!(arithmetic));
    out.insert("dim".into(), json!(jet.dim()));
    out.insert("dirac_zero".into(), json!(dirac.approx_eq(&Spinor::zero())));
    out.insert("dirac".into(), vector_json(dirac.coeffs()));
    Ok(Value::Object(out))
}

fn su3_report<T: JsonScalar>(jet: &SpinorJet<T>, eps: f64) -> Result<Map<String, Value>> {
    let su3 = Su3Structure::from_direction(jet.direction().clone())?;
    let pair = extract_intrinsic(jet)?;
    let dec = decompose_su3(&pair, su3.j())?;
    let class = dec.classify(eps);
    let ch = characteristic_su3(jet, eps)?;
    let mut characteristic = Map::new();
    characteristic.insert("exists".into(), json!(ch.exists()));
    characteristic.insert("obstructions".into(), json!(ch.obstructions));
    if ch.exists() {
        characteristic.insert("torsion".into(), form_json(&ch.torsion));
    }
    let mut out = Map::new();
    out.insert("class".into(), class_json(class));
    out.insert("class_label".into(), json!(class.label()));
    out.insert("s".into(), matrix_json(&pair.s));
    out.insert("eta".into(), vector_json(&pair.eta_or_zero()));
    out.insert("lambda".into(), dec.lambda.to_json());
    out.insert("mu".into(), dec.mu.to_json());
    out.insert("delta_omega".into(), vector_json(&delta_omega(jet)?));
    out.insert("lee_form".into(), vector_json(&lee_form(jet)?));
    out.insert("characteristic".into(), Value::Object(characteristic));
    Ok(out)
}

fn g2_report<T: JsonScalar>(jet: &SpinorJet<T>, eps: f64) -> Result<Map<String, Value>> {
    let g2 = G2Structure::from_direction(jet.direction().clone())?;
    let pair = extract_intrinsic(jet)?;
    let dec = decompose_g2(&pair.s, &g2)?;
    let class = dec.classify(eps);
    let mut characteristic = Map::new();
    let exists = !class.contains(Component::W2);
    characteristic.insert("exists".into(), json!(exists));
    if exists {
        characteristic.insert(
            "torsion".into(),
            form_json(&characteristic_torsion_g2(&dec, &g2)?),
        );
    } else {
        characteristic.insert("obstructions".into(), json!(["class has a W2 component"]));
    }
    let mut out = Map::new();
    out.insert("class".into(), class_json(class));
    out.insert("class_label".into(), json!(class.label()));
    out.insert("s".into(), matrix_json(&pair.s));
    out.insert("lambda".into(), dec.lambda.to_json());
    out.insert("v".into(), vector_json(&dec.v));
    out.insert("delta_psi".into(), form_json(&delta_psi_g2(jet)?));
    out.insert("characteristic".into(), Value::Object(characteristic));
    Ok(out)
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("a JSON value always serializes");
    s.push('\n');
    s
}
