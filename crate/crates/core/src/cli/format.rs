//! The structure file format: UTF-8 JSON, one object with `format_version`,
//! `kind`, `field`, `dim` and one nested array of scalar strings per tensor.

use serde::Deserialize;
use serde_json::Value;

use crate::catalog::{Kind, NamedTensor, Structure, TENSOR_NAMES};
use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, Scalar};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawStructure {
    format_version: u32,
    kind: String,
    field: String,
    dim: usize,
    mul: Option<Value>,
    unit: Option<Value>,
    comul: Option<Value>,
    counit: Option<Value>,
    antipode: Option<Value>,
    alpha: Option<Value>,
    mu: Option<Value>,
    action_left: Option<Value>,
    action_right: Option<Value>,
    coaction_left: Option<Value>,
    coaction_right: Option<Value>,
}

impl RawStructure {
    fn tensor(&self, name: &str) -> Option<&Value> {
        match name {
            "mul" => self.mul.as_ref(),
            "unit" => self.unit.as_ref(),
            "comul" => self.comul.as_ref(),
            "counit" => self.counit.as_ref(),
            "antipode" => self.antipode.as_ref(),
            "alpha" => self.alpha.as_ref(),
            "mu" => self.mu.as_ref(),
            "action_left" => self.action_left.as_ref(),
            "action_right" => self.action_right.as_ref(),
            "coaction_left" => self.coaction_left.as_ref(),
            "coaction_right" => self.coaction_right.as_ref(),
            _ => None,
        }
    }
}

fn rank(name: &str) -> usize {
    match name {
        "unit" | "counit" => 1,
        "antipode" | "alpha" | "mu" => 2,
        _ => 3,
    }
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse(format!("line {} column {}: {e}", e.line(), e.column()))
}

/// Walks a nested array of the given rank, checking it is rectangular and
/// that every leaf is a string.
fn flatten(name: &str, v: &Value, rank: usize, field: Field) -> Result<(Vec<usize>, Vec<Scalar>)> {
    let mut shape: Vec<Option<usize>> = vec![None; rank];
    let mut entries = Vec::new();
    walk(name, v, 0, &mut shape, &mut entries, field)?;
    Ok((shape.into_iter().map(|s| s.unwrap_or(0)).collect(), entries))
}

fn walk(
    name: &str,
    v: &Value,
    depth: usize,
    shape: &mut [Option<usize>],
    out: &mut Vec<Scalar>,
    field: Field,
) -> Result<()> {
    if depth == shape.len() {
        let s = v.as_str().ok_or_else(|| Error::Parse(format!("{name}: scalars must be strings, got {v}")))?;
        out.push(field.parse_scalar(s).map_err(|e| Error::Parse(format!("{name}: {e}")))?);
        return Ok(());
    }
    let items = v.as_array().ok_or_else(|| Error::Parse(format!("{name}: expected a nested array of depth {}", shape.len())))?;
    match shape[depth] {
        None => shape[depth] = Some(items.len()),
        Some(n) if n != items.len() => return Err(Error::Shape(format!("{name}: ragged array at depth {depth}"))),
        Some(_) => {}
    }
    for it in items {
        walk(name, it, depth + 1, shape, out, field)?;
    }
    Ok(())
}

/// Parses a structure file. Shapes, field and kind are validated; nothing
/// is verified.
pub fn parse_structure(text: &str) -> Result<Structure> {
    let raw: RawStructure = serde_json::from_str(text).map_err(json_error)?;
    if raw.format_version != FORMAT_VERSION {
        return Err(Error::Parse(format!("unsupported format_version {}", raw.format_version)));
    }
    let kind: Kind = raw.kind.parse()?;
    let field = Field::parse_spec(&raw.field)?;
    if raw.field != field.to_string() {
        return Err(Error::Parse(format!("field must be written {:?}", field.to_string())));
    }
    let mut tensors = Vec::new();
    for name in TENSOR_NAMES {
        if let Some(v) = raw.tensor(name) {
            let (shape, entries) = flatten(name, v, rank(name), field)?;
            tensors.push(NamedTensor { name, shape, entries });
        }
    }
    Structure::from_tensors(kind, field, raw.dim, &tensors)
}

fn scalar_json(s: &Scalar) -> String {
    let text = match s {
        Scalar::Q(q) => q.to_string(),
        Scalar::P(v, _) => v.to_string(),
    };
    serde_json::to_string(&text).expect("string serialization")
}

fn inline(entries: &[Scalar], shape: &[usize]) -> String {
    match shape {
        [] => scalar_json(&entries[0]),
        [n, rest @ ..] => {
            let stride: usize = rest.iter().product();
            let parts: Vec<String> =
                (0..*n).map(|i| inline(&entries[i * stride..(i + 1) * stride], rest)).collect();
            format!("[{}]", parts.join(", "))
        }
    }
}

/// Rank 1 on one line; higher ranks with one line per leading index.
fn tensor_text(t: &NamedTensor) -> String {
    if t.shape.len() <= 1 || t.shape[0] == 0 {
        return inline(&t.entries, &t.shape);
    }
    let stride: usize = t.shape[1..].iter().product();
    let rows: Vec<String> = (0..t.shape[0])
        .map(|i| format!("    {}", inline(&t.entries[i * stride..(i + 1) * stride], &t.shape[1..])))
        .collect();
    format!("[\n{}\n  ]", rows.join(",\n"))
}

/// Canonical text of a structure; `parse_structure` followed by
/// `emit_structure` reproduces it byte for byte.
pub fn emit_structure(s: &Structure) -> String {
    let mut fields = vec![
        format!("  \"format_version\": {FORMAT_VERSION}"),
        format!("  \"kind\": \"{}\"", s.kind()),
        format!("  \"field\": \"{}\"", s.field()),
        format!("  \"dim\": {}", s.dim()),
    ];
    for t in s.tensors() {
        fields.push(format!("  \"{}\": {}", t.name, tensor_text(&t)));
    }
    format!("{{\n{}\n}}\n", fields.join(",\n"))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMatrix {
    format_version: u32,
    field: String,
    dim: usize,
    matrix: Value,
}

/// A square matrix file `{format_version, field, dim, matrix}`; `matrix[i][j]`
/// is the coefficient of `e_j` in the image of `e_i`.
pub fn parse_matrix_file(text: &str) -> Result<(Field, Matrix)> {
    let raw: RawMatrix = serde_json::from_str(text).map_err(json_error)?;
    if raw.format_version != FORMAT_VERSION {
        return Err(Error::Parse(format!("unsupported format_version {}", raw.format_version)));
    }
    let field = Field::parse_spec(&raw.field)?;
    let (shape, entries) = flatten("matrix", &raw.matrix, 2, field)?;
    let d = raw.dim;
    if shape != [d, d] && !(d == 0 && entries.is_empty()) {
        return Err(Error::Shape(format!("matrix has shape {shape:?}, expected [{d}, {d}]")));
    }
    Ok((field, Matrix::from_entries(field, d, d, entries).transpose()))
}

pub fn emit_matrix_file(m: &Matrix) -> String {
    let t = NamedTensor { name: "matrix", shape: vec![m.cols(), m.rows()], entries: m.transpose().entries().to_vec() };
    format!(
        "{{\n  \"format_version\": {FORMAT_VERSION},\n  \"field\": \"{}\",\n  \"dim\": {},\n  \"matrix\": {}\n}}\n",
        m.field(),
        m.rows(),
        tensor_text(&t)
    )
}
