//! File formats: generator JSON for complexes, edge lists and graph6 for
//! graphs, and JSON encodings of exact values.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::complex::{Complex, Graph};
use crate::error::{Error, Result};
use crate::genfun::FVector;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GeneratorFile {
    generators: Vec<Vec<u32>>,
}

/// Parses `{ "generators": [[int, ...], ...] }` and closes it downward.
pub fn parse_generators_json(text: &str) -> Result<Complex> {
    let file: GeneratorFile = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        message: e.to_string(),
    })?;
    Complex::generate(file.generators)
}

/// `{ "faces": [[...], ...], "f_vector": [...] }` in canonical face order.
pub fn complex_to_json(g: &Complex) -> Value {
    let faces: Vec<&[u32]> = g.faces().iter().map(|f| f.vertices()).collect();
    json!({
        "faces": faces,
        "f_vector": fvector_to_json(&FVector::of(g)),
    })
}

/// Counts as JSON numbers when they fit in u64, as decimal strings otherwise.
pub fn fvector_to_json(fv: &FVector) -> Value {
    Value::Array(fv.counts().iter().map(biguint_to_json).collect())
}

pub fn biguint_to_json(n: &BigUint) -> Value {
    match n.to_u64() {
        Some(v) => json!(v),
        None => Value::String(n.to_string()),
    }
}

/// Rationals serialize as the string "p/q", or "p" when q = 1.
pub fn rational_to_json(x: &BigRational) -> Value {
    Value::String(x.to_string())
}

/// One `u v` pair per line; blank lines and `#` comments are skipped. The
/// vertex count is one more than the largest label seen.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let parse_err = |message: String| Error::Parse {
            line: i + 1,
            message,
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(parse_err(format!("expected two labels, found '{line}'")));
        }
        let label = |s: &str| {
            s.parse::<u32>()
                .map_err(|_| parse_err(format!("'{s}' is not a non-negative integer label")))
        };
        let (u, v) = (label(fields[0])?, label(fields[1])?);
        if u == v {
            return Err(parse_err(format!("self-loop at {u}")));
        }
        edges.push((u.min(v), u.max(v)));
    }
    edges.sort_unstable();
    edges.dedup();
    let n = edges
        .iter()
        .map(|&(_, v)| v as usize + 1)
        .max()
        .unwrap_or(0);
    Graph::new(n, edges)
}

/// Decodes one graph6 string (optionally prefixed by `>>graph6<<`).
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bad = |message: &str| Error::Parse {
        line: 1,
        message: message.to_string(),
    };
    let bytes = s.as_bytes();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(bad("graph6 bytes must lie in 63..=126"));
    }
    let (n, body) = match bytes {
        [] => return Err(bad("empty graph6 string")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(bad("truncated graph6 size"));
            }
            let n = rest[..6]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(bad("truncated graph6 size"));
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, &rest[3..])
        }
        [first, rest @ ..] => ((first - 63) as usize, rest),
    };
    let pairs = n * n.saturating_sub(1) / 2;
    if body.len() != pairs.div_ceil(6) {
        return Err(bad("graph6 body length does not match vertex count"));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    // column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                edges.push((u as u32, v as u32));
            }
            k += 1;
        }
    }
    Graph::new(n, edges)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    }
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for v in 1..n {
        for u in 0..v {
            bits.push(g.has_edge(u, v));
        }
    }
    for chunk in bits.chunks(6) {
        let mut byte = 0u8;
        for (i, &b) in chunk.iter().enumerate() {
            if b {
                byte |= 1 << (5 - i);
            }
        }
        out.push(byte + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}
