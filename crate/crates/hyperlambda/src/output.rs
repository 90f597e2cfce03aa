//! Number formatting, JSON and CSV emission.
//!
//! Every float is written with 17 significant digits in the style of C's
//! `%.17g` (trailing zeros dropped, `.0` kept on integral values), which is
//! enough to read back the exact `f64`.

use std::io;

use serde::Serialize;
use serde_json::ser::{Formatter, PrettyFormatter};

use crate::error::CliError;

/// Version of every JSON document and CSV header this crate emits.
pub const SCHEMA_VERSION: u32 = 1;

pub fn fmt_f64(v: f64) -> String {
    if v.is_nan() {
        return "NaN".into();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if v == 0.0 {
        return if v.is_sign_negative() { "-0.0".into() } else { "0.0".into() };
    }
    let sci = format!("{:.16e}", v.abs());
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("exponent");
    let all: String = mantissa.chars().filter(char::is_ascii_digit).collect();
    let digits = all.trim_end_matches('0');
    let sign = if v < 0.0 { "-" } else { "" };
    let body = if (-4..17).contains(&exp) {
        if exp >= 0 {
            let int_len = exp as usize + 1;
            if digits.len() <= int_len {
                format!("{digits}{}.0", "0".repeat(int_len - digits.len()))
            } else {
                format!("{}.{}", &digits[..int_len], &digits[int_len..])
            }
        } else {
            format!("0.{}{digits}", "0".repeat((-exp - 1) as usize))
        }
    } else {
        let rest = if digits.len() > 1 { &digits[1..] } else { "0" };
        format!("{}.{rest}e{exp}", &digits[..1])
    };
    format!("{sign}{body}")
}

/// Pretty JSON with [`fmt_f64`] floats. Non-finite floats become `null`.
struct Sig17 {
    inner: PrettyFormatter<'static>,
}

impl Formatter for Sig17 {
    fn write_f64<W: ?Sized + io::Write>(&mut self, w: &mut W, v: f64) -> io::Result<()> {
        w.write_all(fmt_f64(v).as_bytes())
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, w: &mut W, v: f32) -> io::Result<()> {
        self.write_f64(w, f64::from(v))
    }

    fn begin_array<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.inner.begin_array(w)
    }

    fn end_array<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.inner.end_array(w)
    }

    fn begin_array_value<W: ?Sized + io::Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.inner.begin_array_value(w, first)
    }

    fn end_array_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.inner.end_array_value(w)
    }

    fn begin_object<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.inner.begin_object(w)
    }

    fn end_object<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.inner.end_object(w)
    }

    fn begin_object_key<W: ?Sized + io::Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.inner.begin_object_key(w, first)
    }

    fn begin_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.inner.begin_object_value(w)
    }

    fn end_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.inner.end_object_value(w)
    }
}

/// `value` as pretty JSON followed by a newline.
pub fn to_json<T: Serialize + ?Sized>(value: &T) -> Result<String, CliError> {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, Sig17 { inner: PrettyFormatter::new() });
    value.serialize(&mut ser)?;
    buf.push(b'\n');
    Ok(String::from_utf8(buf).expect("serde_json writes UTF-8"))
}

/// One CSV cell.
pub trait Cell {
    fn cell(&self) -> String;
}

impl Cell for f64 {
    fn cell(&self) -> String {
        fmt_f64(*self)
    }
}

impl Cell for usize {
    fn cell(&self) -> String {
        self.to_string()
    }
}

impl Cell for u64 {
    fn cell(&self) -> String {
        self.to_string()
    }
}

impl Cell for u128 {
    fn cell(&self) -> String {
        self.to_string()
    }
}

impl Cell for bool {
    fn cell(&self) -> String {
        self.to_string()
    }
}

impl Cell for str {
    fn cell(&self) -> String {
        self.to_string()
    }
}

impl Cell for String {
    fn cell(&self) -> String {
        self.clone()
    }
}

impl<T: Cell> Cell for Option<T> {
    fn cell(&self) -> String {
        self.as_ref().map(Cell::cell).unwrap_or_default()
    }
}

/// Semicolon-joined list in one cell.
pub fn list_cell<T: Cell>(items: &[T]) -> String {
    items.iter().map(Cell::cell).collect::<Vec<_>>().join(";")
}

/// A CSV table whose first column is always `schema_version`.
pub struct Table {
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(columns: &[&'static str]) -> Self {
        let mut header = vec!["schema_version"];
        header.extend_from_slice(columns);
        Table { header, rows: Vec::new() }
    }

    pub fn push(&mut self, cells: Vec<String>) {
        assert_eq!(cells.len() + 1, self.header.len(), "row width");
        let mut row = vec![SCHEMA_VERSION.to_string()];
        row.extend(cells);
        self.rows.push(row);
    }

    pub fn render(&self) -> Result<String, CliError> {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
        w.write_record(&self.header)?;
        for row in &self.rows {
            w.write_record(row)?;
        }
        let bytes = w.into_inner().map_err(|e| CliError::Input(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("cells are UTF-8"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn significant_digits() {
        assert_eq!(fmt_f64(12.0), "12.0");
        assert_eq!(fmt_f64(0.1), "0.10000000000000001");
        assert_eq!(fmt_f64(2.0 / 3.0), "0.66666666666666663");
        assert_eq!(fmt_f64(-0.5), "-0.5");
        assert_eq!(fmt_f64(1e-10), "1.0e-10");
        assert_eq!(fmt_f64(1.0 / 3.0), "0.33333333333333331");
        assert_eq!(fmt_f64(2.5e-8), "2.4999999999999999e-8");
        assert_eq!(fmt_f64(1e20), "1.0e20");
        assert_eq!(fmt_f64(123456.0), "123456.0");
        assert_eq!(fmt_f64(0.0), "0.0");
        assert_eq!(fmt_f64(1.5e-5), "1.5e-5");
        assert_eq!(fmt_f64(0.00012), "0.00012");
    }

    #[test]
    fn json_floats() {
        let v = serde_json::json!({"a": [1.0, 0.1], "b": f64::NAN, "c": 3});
        let s = to_json(&v).unwrap();
        assert!(s.contains("1.0"));
        assert!(s.contains("0.10000000000000001"));
        assert!(s.contains("\"b\": null"));
        assert!(s.ends_with("}\n"));
    }

    #[test]
    fn table_header() {
        let mut t = Table::new(&["x", "y"]);
        t.push(vec![0.5.cell(), Some(3usize).cell()]);
        t.push(vec![1.0.cell(), None::<usize>.cell()]);
        assert_eq!(t.render().unwrap(), "schema_version,x,y\n1,0.5,3\n1,1.0,\n");
    }

    proptest! {
        #[test]
        fn round_trips(v in proptest::num::f64::NORMAL | proptest::num::f64::SUBNORMAL | proptest::num::f64::ZERO) {
            let s = fmt_f64(v);
            let back: f64 = s.parse().unwrap();
            prop_assert_eq!(back.to_bits(), v.to_bits());
            let j: f64 = serde_json::from_str(&s).unwrap();
            prop_assert_eq!(j.to_bits(), v.to_bits());
        }
    }
}
