//! Versioned JSON and CSV formats for geometries, energies and matrices.

use std::fs;
use std::path::Path;

use serde_json::{json, Map, Value};

use crate::complex::{parse_geometry, Geometry, Simplex};
use crate::error::{Error, Result};
use crate::matrices::Matrix;
use crate::rings::parse::parse_complex;
use crate::rings::sample::EnergyAssignment;
use crate::rings::{RingTag, RingValue, Symbols, Tagged};

pub const SCHEMA: &str = "energeia/1";

/// Pretty JSON with a trailing newline; key order is insertion order.
pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

pub fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// Parses JSON text, reporting syntax errors as `source:line:column: message`.
pub fn parse_json(text: &str, source: &str) -> Result<Value> {
    serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("{source}:{}:{}: {e}", e.line(), e.column())))
}

/// Line of the first occurrence of `needle`, for diagnostics.
fn line_of(text: &str, needle: &str) -> usize {
    text.find(needle)
        .map_or(1, |i| text[..i].matches('\n').count() + 1)
}

fn located(text: &str, source: &str, needle: &str, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("{source}:{}: {msg}", line_of(text, needle)))
}

fn check_schema(v: &Value, text: &str, source: &str) -> Result<()> {
    match v.get("schema") {
        None => Ok(()),
        Some(Value::String(s)) if s == SCHEMA => Ok(()),
        Some(other) => Err(located(
            text,
            source,
            "\"schema\"",
            format!("unsupported schema {other}"),
        )),
    }
}

pub fn geometry_to_json(g: &Geometry) -> Value {
    json!({"schema": SCHEMA, "sets": g.to_sets()})
}

pub fn geometry_from_str(text: &str, source: &str) -> Result<Geometry> {
    let v = parse_json(text, source)?;
    check_schema(&v, text, source)?;
    let sets = v
        .get("sets")
        .and_then(Value::as_array)
        .ok_or_else(|| located(text, source, "{", "expected an array field \"sets\""))?;
    let mut lists = Vec::with_capacity(sets.len());
    for (i, s) in sets.iter().enumerate() {
        let labels = s
            .as_array()
            .and_then(|a| a.iter().map(Value::as_i64).collect::<Option<Vec<_>>>())
            .ok_or_else(|| {
                located(
                    text,
                    source,
                    "\"sets\"",
                    format!("sets[{i}] is not a list of integers"),
                )
            })?;
        lists.push(labels);
    }
    parse_geometry(&lists).map_err(|e| located(text, source, "\"sets\"", e))
}

pub fn read_geometry(path: &Path) -> Result<Geometry> {
    geometry_from_str(&read_text(path)?, &path.display().to_string())
}

/// `{"schema", "ring", "vars"?, "h": {"[1,2]": value, ...}}` in canonical order.
pub fn energy_to_json(g: &Geometry, h: &EnergyAssignment) -> Value {
    let mut values = Map::new();
    for (x, v) in g.simplices().iter().zip(h.values()) {
        values.insert(x.to_string(), v.to_json(h.symbols()));
    }
    let mut doc = Map::new();
    doc.insert("schema".into(), json!(SCHEMA));
    doc.insert("ring".into(), json!(h.tag().as_str()));
    if !h.symbols().is_empty() {
        doc.insert("vars".into(), json!(h.symbols().names()));
    }
    doc.insert("h".into(), Value::Object(values));
    Value::Object(doc)
}

pub fn energy_from_str(g: &Geometry, text: &str, source: &str) -> Result<EnergyAssignment> {
    let v = parse_json(text, source)?;
    check_schema(&v, text, source)?;
    let tag: RingTag = v
        .get("ring")
        .and_then(Value::as_str)
        .ok_or_else(|| located(text, source, "{", "expected a string field \"ring\""))?
        .parse()
        .map_err(|e| located(text, source, "\"ring\"", e))?;
    let mut symbols = match v.get("vars") {
        None => Symbols::default(),
        Some(names) => Symbols::new(
            names
                .as_array()
                .and_then(|a| a.iter().map(Value::as_str).collect::<Option<Vec<_>>>())
                .ok_or_else(|| {
                    located(text, source, "\"vars\"", "\"vars\" must be a list of names")
                })?,
        ),
    };
    let map = v
        .get("h")
        .and_then(Value::as_object)
        .ok_or_else(|| located(text, source, "{", "expected an object field \"h\""))?;
    let mut slots: Vec<Option<RingValue>> = vec![None; g.len()];
    for (key, raw) in map {
        let needle = format!("\"{key}\"");
        let labels: Vec<i64> = serde_json::from_str(key).map_err(|_| {
            located(
                text,
                source,
                &needle,
                format!("key {key} is not a vertex list"),
            )
        })?;
        let x = Simplex::new(labels).map_err(|e| located(text, source, &needle, e))?;
        let i = g
            .require(&x)
            .map_err(|e| located(text, source, &needle, e))?;
        slots[i] = Some(
            RingValue::from_json(tag, raw, &mut symbols)
                .map_err(|e| located(text, source, &needle, e))?,
        );
    }
    let values = slots
        .into_iter()
        .zip(g.simplices())
        .map(|(v, x)| {
            v.ok_or_else(|| located(text, source, "\"h\"", format!("no value for simplex {x}")))
        })
        .collect::<Result<Vec<_>>>()?;
    EnergyAssignment::new(tag, values, symbols)
}

pub fn read_energy(g: &Geometry, path: &Path) -> Result<EnergyAssignment> {
    energy_from_str(g, &read_text(path)?, &path.display().to_string())
}

/// `{"schema", "name", "ring", "index", "vars"?, "entries"}`.
pub fn matrix_to_json<R: Tagged>(
    name: &str,
    m: &Matrix<R>,
    g: &Geometry,
    symbols: &Symbols,
) -> Value {
    let entries: Vec<Vec<Value>> = (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .map(|v| v.clone().into_value().to_json(symbols))
                .collect()
        })
        .collect();
    let mut doc = Map::new();
    doc.insert("schema".into(), json!(SCHEMA));
    doc.insert("name".into(), json!(name));
    doc.insert("ring".into(), json!(R::TAG.as_str()));
    doc.insert(
        "index".into(),
        json!(g
            .simplices()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()),
    );
    if !symbols.is_empty() {
        doc.insert("vars".into(), json!(symbols.names()));
    }
    doc.insert("entries".into(), json!(entries));
    Value::Object(doc)
}

/// CSV with the simplex index as header row and first column. Only for
/// rational and complex double entries.
pub fn matrix_to_csv<R: Tagged>(m: &Matrix<R>, g: &Geometry) -> Result<String> {
    if !matches!(R::TAG, RingTag::Rational | RingTag::Complex64) {
        return Err(Error::UnsupportedRing(format!(
            "{} (CSV needs a numeric ring)",
            R::TAG
        )));
    }
    let index: Vec<String> = g.simplices().iter().map(|x| format!("\"{x}\"")).collect();
    let mut out = format!("simplex,{}\n", index.join(","));
    for (i, label) in index.iter().enumerate() {
        let cells: Vec<String> = m
            .row(i)
            .iter()
            .map(|v| match v.clone().into_value() {
                RingValue::Complex64(c) => format!("{}{:+}i", c.re, c.im),
                other => other.render(&Symbols::default()),
            })
            .collect();
        out.push_str(&format!("{label},{}\n", cells.join(",")));
    }
    Ok(out)
}

/// Reads a comma separated list of complex numbers such as `0,1,0.5+2i`.
pub fn parse_complex_list(s: &str) -> Result<Vec<num_complex::Complex64>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(parse_complex)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::complete;
    use crate::rings::sample::{sample_units, symbolic_generators, SymbolicRing, UnitFamily};

    #[test]
    fn geometry_round_trip() {
        let g = complete(3);
        let text = to_pretty(&geometry_to_json(&g));
        assert_eq!(geometry_from_str(&text, "g.json").unwrap(), g);
    }

    #[test]
    fn energy_round_trip_symbolic_and_units() {
        let g = complete(2);
        for h in [
            symbolic_generators(&g, SymbolicRing::Poly, None),
            symbolic_generators(&g, SymbolicRing::Free, None),
            sample_units(&g, UnitFamily::U1Exact, 3),
            sample_units(&g, UnitFamily::UnitQuaternionExact, 3),
        ] {
            let text = to_pretty(&energy_to_json(&g, &h));
            assert_eq!(energy_from_str(&g, &text, "h.json").unwrap(), h);
        }
    }

    #[test]
    fn diagnostics_carry_location() {
        let err = geometry_from_str("{\n  \"sets\": [[1], [0]]\n}", "bad.json").unwrap_err();
        assert_eq!(
            err,
            Error::Parse("bad.json:2: vertex labels must be positive integers, got 0".into())
        );
        let err = geometry_from_str("{\n  \"sets\": [[1],\n", "cut.json").unwrap_err();
        assert!(err.to_string().contains("cut.json:3:"), "{err}");
        let g = complete(1);
        let text = "{\"ring\": \"rational\",\n \"h\": {\n  \"[2]\": \"1\"}}";
        let err = energy_from_str(&g, text, "h.json").unwrap_err();
        assert!(err.to_string().contains("h.json:3:"), "{err}");
    }

    #[test]
    fn complex_lists() {
        let z = parse_complex_list("0,1,0.5+2i").unwrap();
        assert_eq!(z.len(), 3);
        assert_eq!(z[2], num_complex::Complex64::new(0.5, 2.0));
    }
}
