//! The theory description file: a strict JSON subset with scalar strings in
//! canonical form.
//!
//! ```text
//! {
//!   "kind": "hermitian-super",          optional for plain algebra files
//!   "dim": 4,
//!   "parity": [0, 1, 1, 0],
//!   "structure": [[["1", "0", ...], ...], ...],   structure[i][j] = e_i e_j
//!   "unit": ["1", "0", "0", "0"],
//!   "trace": [...],                     Frobenius kinds
//!   "symmetry": "symmetric-super",      optional, with "trace"
//!   "star": {"matrix": [[...]], "flavor": "ordinary"},
//!   "phi": [[...]],                     spin kinds, dim x quotient-dim
//!   "Phi": [[...]],                     spin-statistics kinds, dim x dim
//!   "reality": "real"                   spin and spin-statistics kinds
//! }
//! ```

use serde_json::{Map, Value};
use thiserror::Error;

use crate::frobenius::{FrobeniusAlgebra, Symmetry};
use crate::scalars::{GMatrix, GaussianRational, ScalarFormatError, Vector};
use crate::superalg::{StarFlavor, StarStructure, SuperAlgebra, TraceFunctional};
use crate::theories::{
    build_bimodule_quotient, build_theory, Kind, Payload, Reality, SpinStatTrivialization, SpinTrivialization,
    TheoryError, TheorySpec,
};

/// Largest algebra dimension accepted from a file.
pub const MAX_DIM: usize = 64;
/// Longest scalar literal accepted from a file.
pub const MAX_SCALAR_LEN: usize = 512;

const KEYS: &[&str] = &[
    "kind", "dim", "parity", "structure", "unit", "trace", "symmetry", "star", "phi", "Phi", "reality",
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("schema error in field {field:?}: {message}")]
    Schema { field: String, message: String },
    #[error("bad scalar in field {field:?}: {source}")]
    Scalar {
        field: String,
        #[source]
        source: ScalarFormatError,
    },
}

fn schema(field: impl Into<String>, message: impl Into<String>) -> ParseError {
    ParseError::Schema {
        field: field.into(),
        message: message.into(),
    }
}

/// The parsed contents of a description file, before any validation.
#[derive(Debug, Clone)]
pub struct Document {
    pub kind: Option<Kind>,
    pub algebra: SuperAlgebra,
    pub trace: Option<Vector>,
    pub symmetry: Option<Symmetry>,
    pub star: Option<StarStructure>,
    pub phi: Option<GMatrix>,
    pub big_phi: Option<GMatrix>,
    pub reality: Option<Reality>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("file has no \"kind\" field")]
    MissingKind,
    #[error("kind {kind} needs the field {field:?}")]
    MissingField { kind: Kind, field: &'static str },
    #[error("kind {kind} does not use the field {field:?}")]
    UnexpectedField { kind: Kind, field: &'static str },
    #[error(transparent)]
    Theory(#[from] TheoryError),
}

fn scalar(v: &Value, field: &str) -> Result<GaussianRational, ParseError> {
    let s = v
        .as_str()
        .ok_or_else(|| schema(field, "expected a scalar string such as \"1/2+-1/3*i\""))?;
    if s.len() > MAX_SCALAR_LEN {
        return Err(schema(field, format!("scalar literal longer than {MAX_SCALAR_LEN} bytes")));
    }
    s.parse().map_err(|source| ParseError::Scalar {
        field: field.to_string(),
        source,
    })
}

fn array<'a>(v: &'a Value, field: &str, len: Option<usize>) -> Result<&'a Vec<Value>, ParseError> {
    let a = v.as_array().ok_or_else(|| schema(field, "expected an array"))?;
    if let Some(n) = len {
        if a.len() != n {
            return Err(schema(field, format!("expected {n} entries, found {}", a.len())));
        }
    }
    Ok(a)
}

fn vector(v: &Value, field: &str, len: usize) -> Result<Vector, ParseError> {
    array(v, field, Some(len))?.iter().map(|x| scalar(x, field)).collect()
}

fn matrix(v: &Value, field: &str, rows: usize, cols: Option<usize>) -> Result<GMatrix, ParseError> {
    let rs = array(v, field, Some(rows))?;
    let cols = match cols {
        Some(c) => c,
        None => match rs.first() {
            Some(r) => array(r, field, None)?.len(),
            None => 0,
        },
    };
    let data: Vec<Vector> = rs.iter().map(|r| vector(r, field, cols)).collect::<Result<_, _>>()?;
    if data.is_empty() {
        return Ok(GMatrix::zeros(0, cols));
    }
    GMatrix::from_rows(data).map_err(|e| schema(field, e.to_string()))
}

fn string<'a>(v: &'a Value, field: &str) -> Result<&'a str, ParseError> {
    v.as_str().ok_or_else(|| schema(field, "expected a string"))
}

/// Parses a description file without validating the algebraic data beyond
/// shapes.
pub fn parse_document(text: &str) -> Result<Document, ParseError> {
    let value: Value = serde_json::from_str(text).map_err(|e| ParseError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let obj = value.as_object().ok_or_else(|| schema("", "top level must be an object"))?;
    if let Some(k) = obj.keys().find(|k| !KEYS.contains(&k.as_str())) {
        return Err(schema(k.clone(), "unknown field"));
    }
    let field = |name: &str| obj.get(name);
    let required = |name: &str| field(name).ok_or_else(|| schema(name, "missing field"));

    let kind = field("kind")
        .map(|v| string(v, "kind")?.parse::<Kind>().map_err(|m| schema("kind", m)))
        .transpose()?;
    let dim = required("dim")?
        .as_u64()
        .ok_or_else(|| schema("dim", "expected a non-negative integer"))?;
    if dim > MAX_DIM as u64 {
        return Err(schema("dim", format!("dimension above {MAX_DIM}")));
    }
    let n = dim as usize;
    let parity: Vec<u8> = array(required("parity")?, "parity", Some(n))?
        .iter()
        .map(|p| match p.as_u64() {
            Some(0) => Ok(0),
            Some(1) => Ok(1),
            _ => Err(schema("parity", "entries must be 0 or 1")),
        })
        .collect::<Result<_, _>>()?;
    let structure: Vec<Vec<Vector>> = array(required("structure")?, "structure", Some(n))?
        .iter()
        .map(|row| {
            array(row, "structure", Some(n))?
                .iter()
                .map(|cell| vector(cell, "structure", n))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<_, _>>()?;
    let unit = vector(required("unit")?, "unit", n)?;
    let algebra = SuperAlgebra::from_dense(parity, &structure, unit).map_err(|e| schema("structure", e.to_string()))?;

    let trace = field("trace").map(|v| vector(v, "trace", n)).transpose()?;
    let symmetry = field("symmetry")
        .map(|v| match string(v, "symmetry")? {
            "symmetric-super" => Ok(Symmetry::SymmetricSuper),
            "twisted-symmetric" => Ok(Symmetry::TwistedSymmetric),
            other => Err(schema("symmetry", format!("unknown symmetry {other:?}"))),
        })
        .transpose()?;
    let star = field("star").map(|v| parse_star(v, n)).transpose()?;
    let phi = field("phi").map(|v| matrix(v, "phi", n, None)).transpose()?;
    let big_phi = field("Phi").map(|v| matrix(v, "Phi", n, Some(n))).transpose()?;
    let reality = field("reality")
        .map(|v| string(v, "reality")?.parse::<Reality>().map_err(|m| schema("reality", m)))
        .transpose()?;
    Ok(Document {
        kind,
        algebra,
        trace,
        symmetry,
        star,
        phi,
        big_phi,
        reality,
    })
}

fn parse_star(v: &Value, n: usize) -> Result<StarStructure, ParseError> {
    let obj = v.as_object().ok_or_else(|| schema("star", "expected an object"))?;
    if let Some(k) = obj.keys().find(|k| !["matrix", "flavor"].contains(&k.as_str())) {
        return Err(schema(format!("star.{k}"), "unknown field"));
    }
    let m = matrix(
        obj.get("matrix").ok_or_else(|| schema("star.matrix", "missing field"))?,
        "star.matrix",
        n,
        Some(n),
    )?;
    let flavor = match string(obj.get("flavor").ok_or_else(|| schema("star.flavor", "missing field"))?, "star.flavor")? {
        "ordinary" => StarFlavor::Ordinary,
        "twisted" => StarFlavor::Twisted,
        other => return Err(schema("star.flavor", format!("unknown flavor {other:?}"))),
    };
    Ok(StarStructure::new(m, flavor))
}

impl Document {
    /// Assembles and validates the theory the document describes.
    pub fn into_theory(self) -> Result<TheorySpec, DocumentError> {
        let kind = self.kind.ok_or(DocumentError::MissingKind)?;
        let reject = |present: bool, field: &'static str| {
            if present {
                Err(DocumentError::UnexpectedField { kind, field })
            } else {
                Ok(())
            }
        };
        let payload = match kind {
            Kind::OrientedSpin | Kind::HermitianSpin | Kind::TwistedHermitianSpin => {
                reject(self.trace.is_some(), "trace")?;
                reject(self.symmetry.is_some(), "symmetry")?;
                reject(self.big_phi.is_some(), "Phi")?;
                let phi = self.phi.ok_or(DocumentError::MissingField { kind, field: "phi" })?;
                let q = build_bimodule_quotient(&self.algebra).map_err(TheoryError::from)?;
                Payload::Spin {
                    trivialization: SpinTrivialization::new(q, phi)?,
                    star: self.star,
                    reality: self.reality.unwrap_or(Reality::None),
                }
            }
            Kind::RealSpinStatistics | Kind::HermitianSpinStatistics | Kind::TwistedHermitianSpinStatistics => {
                reject(self.trace.is_some(), "trace")?;
                reject(self.symmetry.is_some(), "symmetry")?;
                reject(self.phi.is_some(), "phi")?;
                let phi = self.big_phi.ok_or(DocumentError::MissingField { kind, field: "Phi" })?;
                Payload::SpinStat {
                    trivialization: SpinStatTrivialization::new(self.algebra, phi)?,
                    star: self.star,
                    reality: self.reality.unwrap_or(Reality::None),
                }
            }
            _ => {
                reject(self.phi.is_some(), "phi")?;
                reject(self.big_phi.is_some(), "Phi")?;
                reject(self.reality.is_some(), "reality")?;
                let trace = self.trace.ok_or(DocumentError::MissingField { kind, field: "trace" })?;
                let symmetry = self.symmetry.unwrap_or(Symmetry::SymmetricSuper);
                let frobenius = FrobeniusAlgebra::new(self.algebra, TraceFunctional::new(trace), symmetry)
                    .expect("trace length checked by the parser");
                Payload::Frobenius {
                    frobenius,
                    star: self.star,
                }
            }
        };
        Ok(build_theory(kind, payload)?)
    }
}

fn scalar_value(x: &GaussianRational) -> Value {
    Value::String(x.to_string())
}

fn vector_value(v: &[GaussianRational]) -> Value {
    Value::Array(v.iter().map(scalar_value).collect())
}

fn matrix_value(m: &GMatrix) -> Value {
    Value::Array((0..m.rows()).map(|r| vector_value(m.row(r))).collect())
}

fn algebra_fields(a: &SuperAlgebra, obj: &mut Map<String, Value>) {
    obj.insert("dim".into(), Value::from(a.dim()));
    obj.insert("parity".into(), Value::Array(a.parities().iter().map(|&p| Value::from(p)).collect()));
    let structure = a
        .structure()
        .iter()
        .map(|row| Value::Array(row.iter().map(|v| vector_value(v)).collect()))
        .collect();
    obj.insert("structure".into(), Value::Array(structure));
    obj.insert("unit".into(), vector_value(a.unit()));
}

fn star_value(s: &StarStructure) -> Value {
    let mut obj = Map::new();
    obj.insert("matrix".into(), matrix_value(s.matrix()));
    let flavor = match s.flavor() {
        StarFlavor::Ordinary => "ordinary",
        StarFlavor::Twisted => "twisted",
    };
    obj.insert("flavor".into(), Value::from(flavor));
    Value::Object(obj)
}

/// Renders a theory as a description file with sorted keys.
pub fn print_theory(t: &TheorySpec) -> String {
    let mut obj = Map::new();
    obj.insert("kind".into(), Value::from(t.kind().name()));
    algebra_fields(t.algebra(), &mut obj);
    if let Some(s) = t.star() {
        obj.insert("star".into(), star_value(s));
    }
    match t.payload() {
        Payload::Frobenius { frobenius, .. } => {
            obj.insert("trace".into(), vector_value(frobenius.trace().covector()));
            obj.insert("symmetry".into(), Value::from(frobenius.symmetry().to_string()));
        }
        Payload::Spin {
            trivialization, reality, ..
        } => {
            obj.insert("phi".into(), matrix_value(trivialization.phi()));
            obj.insert("reality".into(), Value::from(reality.to_string()));
        }
        Payload::SpinStat {
            trivialization, reality, ..
        } => {
            obj.insert("Phi".into(), matrix_value(trivialization.phi()));
            obj.insert("reality".into(), Value::from(reality.to_string()));
        }
    }
    let mut text = serde_json::to_string_pretty(&Value::Object(obj)).expect("JSON values serialize");
    text.push('\n');
    text
}

/// Parses and validates a theory file.
pub fn parse_theory_file(text: &str) -> Result<TheorySpec, FileError> {
    Ok(parse_document(text)?.into_theory()?)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FileError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Document(#[from] DocumentError),
}
