use proptest::prelude::*;
use spintor::value::{form_json, parse_form, parse_rational, JsonScalar};
use spintor_core::forms::AltForm;
use spintor_core::{rat, Rational};

proptest! {
    #[test]
    fn rationals_survive_json(p in -10_000i64..10_000, q in 1i64..10_000) {
        let r = rat(p, q);
        prop_assert_eq!(parse_rational(&r.to_json()).unwrap(), r);
    }

    #[test]
    fn decimal_strings_are_exact(int in 0u32..100_000, frac in 0u32..1000) {
        let text = format!("-{int}.{frac:03}");
        let want = -(rat(int as i64, 1) + rat(frac as i64, 1000));
        prop_assert_eq!(parse_rational(&serde_json::json!(text)).unwrap(), want);
    }

    #[test]
    fn three_forms_survive_json(coefs in proptest::collection::vec(-5i64..=5, 20)) {
        let mut f = AltForm::<Rational>::zero(3, 6);
        let mut k = 0;
        for a in 1..=6 {
            for b in a + 1..=6 {
                for c in b + 1..=6 {
                    f.add_term(&[c, a, b], rat(coefs[k], 3)).unwrap();
                    k += 1;
                }
            }
        }
        prop_assert_eq!(parse_form(&form_json(&f), 3, 6).unwrap(), f);
    }
}
