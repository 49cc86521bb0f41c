use serde::{Deserialize, Serialize};

use crate::algebra::{BiPoly, UniPoly};
use crate::darboux::{AuditReport, DarbouxSystemSet, InvarianceCertificate};
use crate::error::{Error, Result};
use crate::factory::{QuadraticSystem, VectorField};
use crate::numeric::{AmbiguityReport, DriftReport};
use crate::operators::FamilySpec;

pub const FORMAT_VERSION: u32 = 1;

/// A vector field, with the family member it came from when known.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilySpec>,
    /// Built from the displayed formula instead of the derivation.
    #[serde(default)]
    pub literal: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub system: Option<QuadraticSystem>,
    pub field: VectorField,
}

impl SystemDocument {
    pub fn from_system(system: QuadraticSystem, family: Option<FamilySpec>, literal: bool) -> Self {
        SystemDocument {
            family,
            literal,
            field: system.field(),
            system: Some(system),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveDocument {
    pub g: BiPoly,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a0: Option<UniPoly>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cofactor: Option<BiPoly>,
}

/// A certificate together with the construction that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub system: Option<SystemDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub curve: Option<CurveDocument>,
    pub certificate: InvarianceCertificate,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "report", rename_all = "kebab-case")]
pub enum DriftDocument {
    Single(DriftReport),
    Ambiguity(AmbiguityReport),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "payload", rename_all = "kebab-case")]
pub enum Payload {
    System(SystemDocument),
    Curve(CurveDocument),
    Certificate(CertificateDocument),
    DarbouxSet(DarbouxSystemSet),
    Audit(Vec<AuditReport>),
    Drift(DriftDocument),
}

impl Payload {
    pub fn kind(&self) -> &'static str {
        match self {
            Payload::System(_) => "system",
            Payload::Curve(_) => "curve",
            Payload::Certificate(_) => "certificate",
            Payload::DarbouxSet(_) => "darboux-set",
            Payload::Audit(_) => "audit",
            Payload::Drift(_) => "drift",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ArtifactDocument {
    pub format_version: u32,
    #[serde(flatten)]
    pub payload: Payload,
}

impl ArtifactDocument {
    pub fn new(payload: Payload) -> Self {
        ArtifactDocument {
            format_version: FORMAT_VERSION,
            payload,
        }
    }
}

/// Pretty-printed JSON with a trailing newline.
pub fn encode(doc: &ArtifactDocument) -> Result<String> {
    let mut text = serde_json::to_string_pretty(doc).map_err(|e| Error::Io(e.to_string()))?;
    text.push('\n');
    Ok(text)
}

pub fn decode(text: &str) -> Result<ArtifactDocument> {
    let doc: ArtifactDocument = serde_json::from_str(text)
        .map_err(|e| Error::parse(format!("line {} column {}", e.line(), e.column()), e.to_string()))?;
    if doc.format_version != FORMAT_VERSION {
        return Err(Error::parse(
            "format_version",
            format!("unsupported version {}, expected {FORMAT_VERSION}", doc.format_version),
        ));
    }
    Ok(doc)
}
