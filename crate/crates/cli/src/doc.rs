//! The JSON interchange format: one document per domain object, rationals
//! written as exact "p/q" strings, unknown fields and kinds rejected.

use anyhow::{anyhow, bail, Context, Result};
use serde::{Deserialize, Serialize};

use lexcredal::{
    rational_from_str, rational_to_string, CredalPolytope, EventSubset, Gamble, GeneratorCone,
    HalfspaceCone, RMatrix, Rational, SemispaceFamily,
};

/// Schema version accepted and emitted by this build.
pub const SCHEMA: u32 = 1;

/// A parsed input document.
#[derive(Clone, Debug)]
pub enum Document {
    Gamble(Gamble),
    Matrix(RMatrix),
    GeneratorCone(GeneratorCone),
    HalfspaceCone(HalfspaceCone),
    SemispaceFamily(SemispaceFamily),
    CredalPolytope(CredalPolytope),
    Event(EventSubset),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Gamble(_) => "gamble",
            Document::Matrix(_) => "matrix",
            Document::GeneratorCone(_) => "generator-cone",
            Document::HalfspaceCone(_) => "halfspace-cone",
            Document::SemispaceFamily(_) => "semispace-family",
            Document::CredalPolytope(_) => "credal-polytope",
            Document::Event(_) => "event",
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GambleDoc {
    schema: u32,
    kind: String,
    coords: Vec<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixDoc {
    schema: u32,
    kind: String,
    rows: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GeneratorConeDoc {
    schema: u32,
    kind: String,
    dim: usize,
    generators: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HalfspaceConeDoc {
    schema: u32,
    kind: String,
    dim: usize,
    normals: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SemispaceFamilyDoc {
    schema: u32,
    kind: String,
    dim: usize,
    matrices: Vec<Vec<Vec<String>>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CredalPolytopeDoc {
    schema: u32,
    kind: String,
    dim: usize,
    vertices: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EventDoc {
    schema: u32,
    kind: String,
    ambient: usize,
    outcomes: Vec<usize>,
}

fn rationals(raw: &[String]) -> Result<Vec<Rational>> {
    raw.iter()
        .map(|s| rational_from_str(s).map_err(|e| anyhow!(e)))
        .collect()
}

fn gamble(raw: &[String]) -> Result<Gamble> {
    if raw.is_empty() {
        bail!("a coordinate vector must have at least one entry");
    }
    Ok(Gamble::new(rationals(raw)?))
}

fn gambles(raw: &[Vec<String>]) -> Result<Vec<Gamble>> {
    raw.iter().map(|r| gamble(r)).collect()
}

fn matrix(raw: &[Vec<String>]) -> Result<RMatrix> {
    RMatrix::from_rows(gambles(raw)?).map_err(|e| anyhow!(e))
}

pub(crate) fn strings(g: &Gamble) -> Vec<String> {
    g.coords().iter().map(rational_to_string).collect()
}

pub(crate) fn string_rows(rows: &[Gamble]) -> Vec<Vec<String>> {
    rows.iter().map(strings).collect()
}

/// Parses one JSON document, validating schema version, kind, field names,
/// rationals, and dimensional consistency.
pub fn parse_document(text: &str) -> Result<Document> {
    let value: serde_json::Value =
        serde_json::from_str(text).context("document is not valid JSON")?;
    let schema = value
        .get("schema")
        .and_then(serde_json::Value::as_u64)
        .ok_or_else(|| anyhow!("document is missing the numeric \"schema\" field"))?;
    if schema != u64::from(SCHEMA) {
        bail!("unsupported schema version {schema}; this build reads schema {SCHEMA}");
    }
    let kind = value
        .get("kind")
        .and_then(serde_json::Value::as_str)
        .ok_or_else(|| anyhow!("document is missing the string \"kind\" field"))?
        .to_owned();
    match kind.as_str() {
        "gamble" => {
            let d: GambleDoc = serde_json::from_value(value)?;
            Ok(Document::Gamble(gamble(&d.coords)?))
        }
        "matrix" => {
            let d: MatrixDoc = serde_json::from_value(value)?;
            Ok(Document::Matrix(matrix(&d.rows)?))
        }
        "generator-cone" => {
            let d: GeneratorConeDoc = serde_json::from_value(value)?;
            Ok(Document::GeneratorCone(
                GeneratorCone::new(d.dim, gambles(&d.generators)?).map_err(|e| anyhow!(e))?,
            ))
        }
        "halfspace-cone" => {
            let d: HalfspaceConeDoc = serde_json::from_value(value)?;
            Ok(Document::HalfspaceCone(
                HalfspaceCone::new(d.dim, gambles(&d.normals)?).map_err(|e| anyhow!(e))?,
            ))
        }
        "semispace-family" => {
            let d: SemispaceFamilyDoc = serde_json::from_value(value)?;
            let matrices = d
                .matrices
                .iter()
                .map(|rows| matrix(rows))
                .collect::<Result<Vec<_>>>()?;
            Ok(Document::SemispaceFamily(
                SemispaceFamily::new(d.dim, matrices).map_err(|e| anyhow!(e))?,
            ))
        }
        "credal-polytope" => {
            let d: CredalPolytopeDoc = serde_json::from_value(value)?;
            Ok(Document::CredalPolytope(
                CredalPolytope::new(d.dim, gambles(&d.vertices)?).map_err(|e| anyhow!(e))?,
            ))
        }
        "event" => {
            let d: EventDoc = serde_json::from_value(value)?;
            Ok(Document::Event(
                EventSubset::from_one_based(d.ambient, &d.outcomes).map_err(|e| anyhow!(e))?,
            ))
        }
        other => bail!("unknown document kind {other:?}"),
    }
}

/// Serializes a document as one JSON line with a fixed field order.
pub fn serialize_document(doc: &Document) -> String {
    let json = match doc {
        Document::Gamble(g) => serde_json::to_string(&GambleDoc {
            schema: SCHEMA,
            kind: "gamble".into(),
            coords: strings(g),
        }),
        Document::Matrix(m) => serde_json::to_string(&MatrixDoc {
            schema: SCHEMA,
            kind: "matrix".into(),
            rows: string_rows(m.rows()),
        }),
        Document::GeneratorCone(k) => serde_json::to_string(&GeneratorConeDoc {
            schema: SCHEMA,
            kind: "generator-cone".into(),
            dim: k.dim(),
            generators: string_rows(k.generators()),
        }),
        Document::HalfspaceCone(k) => serde_json::to_string(&HalfspaceConeDoc {
            schema: SCHEMA,
            kind: "halfspace-cone".into(),
            dim: k.dim(),
            normals: string_rows(k.normals()),
        }),
        Document::SemispaceFamily(f) => serde_json::to_string(&SemispaceFamilyDoc {
            schema: SCHEMA,
            kind: "semispace-family".into(),
            dim: f.dim(),
            matrices: f.matrices().iter().map(|m| string_rows(m.rows())).collect(),
        }),
        Document::CredalPolytope(p) => serde_json::to_string(&CredalPolytopeDoc {
            schema: SCHEMA,
            kind: "credal-polytope".into(),
            dim: p.dim(),
            vertices: string_rows(p.vertices()),
        }),
        Document::Event(e) => serde_json::to_string(&EventDoc {
            schema: SCHEMA,
            kind: "event".into(),
            ambient: e.ambient(),
            outcomes: e.one_based(),
        }),
    };
    json.expect("document structs serialize without error")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn round_trip(text: &str) -> String {
        serialize_document(&parse_document(text).unwrap())
    }

    #[test]
    fn documents_round_trip_exactly() {
        let cases = [
            r#"{"schema":1,"kind":"gamble","coords":["1","0","0"]}"#,
            r#"{"schema":1,"kind":"gamble","coords":["1/3","-2/5"]}"#,
            r#"{"schema":1,"kind":"matrix","rows":[["0","1","1"],["0","-1","1"],["1","0","0"]]}"#,
            r#"{"schema":1,"kind":"generator-cone","dim":2,"generators":[["2","-1"],["1","0"],["0","1"]]}"#,
            r#"{"schema":1,"kind":"halfspace-cone","dim":2,"normals":[["1","0"]]}"#,
            r#"{"schema":1,"kind":"halfspace-cone","dim":2,"normals":[]}"#,
            r#"{"schema":1,"kind":"semispace-family","dim":2,"matrices":[[["1","0"],["0","1"]]]}"#,
            r#"{"schema":1,"kind":"credal-polytope","dim":3,"vertices":[["1/2","1/4","1/4"]]}"#,
            r#"{"schema":1,"kind":"event","ambient":3,"outcomes":[2,3]}"#,
        ];
        for case in cases {
            assert_eq!(round_trip(case), case, "case {case}");
        }
    }

    #[test]
    fn malformed_documents_are_rejected() {
        let bad = [
            r#"{"kind":"gamble","coords":["1"]}"#,
            r#"{"schema":2,"kind":"gamble","coords":["1"]}"#,
            r#"{"schema":1,"kind":"pmf","coords":["1"]}"#,
            r#"{"schema":1,"kind":"gamble","coords":["1/0"]}"#,
            r#"{"schema":1,"kind":"gamble","coords":["0.5"]}"#,
            r#"{"schema":1,"kind":"gamble","coords":[]}"#,
            r#"{"schema":1,"kind":"gamble","coords":["1"],"extra":0}"#,
            r#"{"schema":1,"kind":"matrix","rows":[["1","0"],["1"]]}"#,
            r#"{"schema":1,"kind":"generator-cone","dim":2,"generators":[["0","0"]]}"#,
            r#"{"schema":1,"kind":"event","ambient":3,"outcomes":[1,2,3]}"#,
            r#"{"schema":1,"kind":"event","ambient":3,"outcomes":[0]}"#,
            r#"not json"#,
        ];
        for case in bad {
            assert!(parse_document(case).is_err(), "case {case}");
        }
    }

    #[test]
    fn third_based_fractions_keep_exact_values() {
        let doc = parse_document(r#"{"schema":1,"kind":"gamble","coords":["1/3"]}"#).unwrap();
        match doc {
            Document::Gamble(g) => {
                assert_eq!(&g[0] + &g[0] + &g[0], lexcredal::int(1));
            }
            _ => panic!("expected a gamble"),
        }
    }
}
