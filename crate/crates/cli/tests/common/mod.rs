//! Random documents in deliberately non-canonical spelling.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

fn coefficient(rng: &mut ChaCha8Rng) -> String {
    let num: i64 = rng.gen_range(-2..=2);
    let den: i64 = *[1, 1, 2, 3].choose(rng).unwrap();
    let scale: i64 = rng.gen_range(1..=2);
    if den == 1 && scale == 1 {
        num.to_string()
    } else {
        format!("{}/{}", num * scale, den * scale)
    }
}

fn grid(rng: &mut ChaCha8Rng, n: usize) -> Value {
    Value::Array(
        (0..n)
            .map(|_| Value::Array((0..n).map(|_| json!(coefficient(rng))).collect()))
            .collect(),
    )
}

fn symmetric(rng: &mut ChaCha8Rng, n: usize, sign: i64) -> Value {
    let mut m = vec![vec!["0".to_string(); n]; n];
    for i in 0..n {
        for j in i..n {
            let c = if i == j && sign < 0 {
                "0".to_string()
            } else {
                coefficient(rng)
            };
            m[i][j] = c.clone();
            m[j][i] = if sign < 0 && i != j {
                if let Some(stripped) = c.strip_prefix('-') {
                    stripped.to_string()
                } else {
                    format!("-{c}")
                }
            } else {
                c
            };
        }
    }
    json!(m)
}

fn triples(rng: &mut ChaCha8Rng, n: usize, antisymmetric: bool) -> Value {
    let mut seen = Vec::new();
    let mut out = Vec::new();
    for _ in 0..rng.gen_range(0..=6) {
        let (i, j, k) = (rng.gen_range(1..=n), rng.gen_range(1..=n), rng.gen_range(1..=n));
        let key = if antisymmetric {
            (i.min(j), i.max(j), k)
        } else {
            (i, j, k)
        };
        if (antisymmetric && i == j) || seen.contains(&key) {
            continue;
        }
        seen.push(key);
        out.push(json!([i, j, k, coefficient(rng)]));
    }
    Value::Array(out)
}

/// A valid document text with random optional keys, spacing and
/// unreduced fractions.
pub fn random_document(rng: &mut ChaCha8Rng) -> String {
    let n = rng.gen_range(2..=4);
    let mut doc = serde_json::Map::new();
    doc.insert("name".into(), json!(format!("random algebra {}", rng.gen::<u16>())));
    doc.insert("dimension".into(), json!(n));
    doc.insert(
        "basis".into(),
        json!((1..=n).map(|i| format!("x{i}")).collect::<Vec<_>>()),
    );
    if rng.gen_bool(0.7) {
        doc.insert("bracket".into(), triples(rng, n, true));
    }
    if rng.gen_bool(0.5) {
        doc.insert("product".into(), triples(rng, n, false));
    }
    doc.insert("phi".into(), grid(rng, n));
    if rng.gen_bool(0.5) {
        doc.insert("metric".into(), symmetric(rng, n, 1));
    }
    if rng.gen_bool(0.5) {
        doc.insert("omega".into(), symmetric(rng, n, -1));
    }
    if rng.gen_bool(0.5) {
        doc.insert("K".into(), grid(rng, n));
    }
    let value = Value::Object(doc);
    if rng.gen_bool(0.5) {
        serde_json::to_string(&value).unwrap()
    } else {
        serde_json::to_string_pretty(&value).unwrap()
    }
}
