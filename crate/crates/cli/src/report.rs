//! JSON and CSV rendering.
//!
//! Floats are written with 12 significant digits and a signed exponent
//! (`2.26618007091e+0`, the form serde_json re-emits for a parsed literal)
//! and big integers as bare decimal literals, both through `RawValue` so
//! serde_json does not reformat them.

use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

/// A float that serializes with fixed formatting; non-finite values become `null`.
#[derive(Debug, Clone, Copy)]
pub struct Fixed(pub f64);

/// `d.ddddddddddde±x`; the exponent always carries a sign.
pub fn fixed(x: f64) -> String {
    let s = format!("{x:.11e}");
    match s.split_once('e') {
        Some((mant, exp)) if !exp.starts_with('-') => format!("{mant}e+{exp}"),
        _ => s,
    }
}

impl Serialize for Fixed {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return s.serialize_none();
        }
        raw(fixed(self.0)).serialize(s)
    }
}

/// An integer of any size, given as its decimal digits.
#[derive(Debug, Clone)]
pub struct BigNum(pub String);

impl Serialize for BigNum {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        raw(self.0.clone()).serialize(s)
    }
}

fn raw(text: String) -> Box<RawValue> {
    RawValue::from_string(text).expect("numeric literal is valid JSON")
}

#[derive(Debug, Serialize)]
pub struct Report<P, R> {
    pub command: &'static str,
    pub params: P,
    pub results: Vec<R>,
    pub pass: bool,
    pub wall_ms: u64,
}

impl<P: Serialize, R: Serialize> Report<P, R> {
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }
}

/// CSV text for a header and rows of already formatted fields.
pub fn csv_table(header: Option<&[&str]>, rows: &[Vec<String>]) -> String {
    let mut w = csv::WriterBuilder::new()
        .flexible(true)
        .from_writer(Vec::new());
    if let Some(h) = header {
        w.write_record(h).expect("write to memory");
    }
    for row in rows {
        w.write_record(row).expect("write to memory");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("csv is utf-8")
}
