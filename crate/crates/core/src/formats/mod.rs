//! JSON documents and CSV exports.
//!
//! Rationals are written as strings in lowest terms (`"-3/4"`, `"2"`).
//! Bivariate polynomials are maps `{"i,j": "p/q"}` keyed by the exponents of
//! `x` and `y`; univariate ones are maps `{"k": "p/q"}`.

mod csv_out;
mod document;
mod polys;
mod text;

pub use csv_out::{write_levels_csv, write_trajectory_csv};
pub use document::{
    decode, encode, ArtifactDocument, CertificateDocument, CurveDocument, DriftDocument, Payload, SystemDocument, FORMAT_VERSION,
};
pub use text::{render_ambiguity, render_audit, render_darboux_set, render_drift};

pub mod rational_str {
    use serde::{de, Deserialize, Deserializer, Serializer};

    use crate::algebra::rational::{format_rational, parse_rational, Rational};

    pub fn serialize<S: Serializer>(value: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(value))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(de::Error::custom)
    }
}

pub mod rational_vec {
    use serde::ser::SerializeSeq;
    use serde::{de, Deserialize, Deserializer, Serializer};

    use crate::algebra::rational::{format_rational, parse_rational, Rational};

    pub fn serialize<S: Serializer>(values: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(values.len()))?;
        for v in values {
            seq.serialize_element(&format_rational(v))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|t| parse_rational(t).map_err(de::Error::custom))
            .collect()
    }
}

/// `{"a": .., "b": .., "c": ..}` for Gauss hypergeometric parameters.
pub mod hyp_params {
    use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

    use crate::algebra::Rational;
    use crate::operators::Hyp2F1;

    #[derive(Serialize, Deserialize)]
    struct Params {
        #[serde(with = "super::rational_str")]
        a: Rational,
        #[serde(with = "super::rational_str")]
        b: Rational,
        #[serde(with = "super::rational_str")]
        c: Rational,
    }

    pub fn serialize<S: Serializer>(h: &Hyp2F1, s: S) -> Result<S::Ok, S::Error> {
        Params {
            a: h.a.clone(),
            b: h.b.clone(),
            c: h.c.clone(),
        }
        .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Hyp2F1, D::Error> {
        let p = Params::deserialize(d)?;
        Hyp2F1::new(p.a, p.b, p.c).map_err(de::Error::custom)
    }
}
