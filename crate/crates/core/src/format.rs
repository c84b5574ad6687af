//! Locale-independent numeric formatting for text records and CSV.

use std::fmt;

/// Significant digits used by every emitter.
pub const SIG_DIGITS: usize = 9;

/// Formats `v` with nine significant digits, trimming trailing zeros.
///
/// Plain notation for exponents in `[-5, 9)`, scientific otherwise.
pub fn sig9(v: f64) -> String {
    sig(v, SIG_DIGITS)
}

pub fn sig(v: f64, digits: usize) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return format!("{v}");
    }
    let digits = digits.max(1);
    // Round first so the exponent reflects carries like 9.9999999996 -> 10.
    let sci = format!("{:.*e}", digits - 1, v);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("exponent");
    if (-5..(digits as i32)).contains(&exp) {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim(format!("{:.*}", decimals, v))
    } else {
        format!("{}e{}", trim(mantissa.to_string()), exp)
    }
}

fn trim(s: String) -> String {
    if !s.contains('.') {
        return s;
    }
    let t = s.trim_end_matches('0').trim_end_matches('.');
    if t == "-0" {
        "0".to_string()
    } else {
        t.to_string()
    }
}

/// `[a,b,c]` with each entry in [`sig9`] form.
pub fn list(values: &[f64]) -> String {
    let inner: Vec<String> = values.iter().map(|&v| sig9(v)).collect();
    format!("[{}]", inner.join(","))
}

/// One line of space-separated `key=value` pairs.
///
/// Values containing spaces, quotes or `=` are double-quoted with `\"` and
/// `\\` escapes.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Record {
    fields: Vec<(String, String)>,
}

impl Record {
    pub fn new() -> Self {
        Record::default()
    }

    /// Starts a record whose first field is `record=<kind>`.
    pub fn kind(kind: &str) -> Self {
        Record::new().field("record", kind)
    }

    pub fn field(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.fields.push((key.to_string(), value.to_string()));
        self
    }

    pub fn num(self, key: &str, value: f64) -> Self {
        self.field(key, sig9(value))
    }

    pub fn nums(self, key: &str, values: &[f64]) -> Self {
        self.field(key, list(values))
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.fields
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn fields(&self) -> &[(String, String)] {
        &self.fields
    }
}

impl fmt::Display for Record {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, (key, value)) in self.fields.iter().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{key}=")?;
            if value.is_empty() || value.contains([' ', '"', '=', '\\']) {
                let escaped = value.replace('\\', "\\\\").replace('"', "\\\"");
                write!(f, "\"{escaped}\"")?;
            } else {
                f.write_str(value)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nine_significant_digits() {
        assert_eq!(sig9(0.0), "0");
        assert_eq!(sig9(1.0), "1");
        assert_eq!(sig9(4.0), "4");
        assert_eq!(sig9(7.0 / 6.0), "1.16666667");
        assert_eq!(sig9(2.0 / 3.0), "0.666666667");
        assert_eq!(sig9(-0.5), "-0.5");
        assert_eq!(sig9(123456789.0), "123456789");
        assert_eq!(sig9(1234567890.0), "1.23456789e9");
        assert_eq!(sig9(1.5e-7), "1.5e-7");
        assert_eq!(sig9(0.99999999996), "1");
        assert_eq!(sig9(1e-5), "0.00001");
    }

    #[test]
    fn list_format() {
        assert_eq!(list(&[0.0, 1.0, 1.0, 4.0]), "[0,1,1,4]");
        assert_eq!(list(&[]), "[]");
    }

    #[test]
    fn records_quote_when_needed() {
        let r = Record::new()
            .field("realizable", false)
            .field("certificate", "max < half-sum (3 < 4)")
            .nums("spectrum", &[0.0, 1.0, 1.0, 4.0]);
        assert_eq!(
            r.to_string(),
            "realizable=false certificate=\"max < half-sum (3 < 4)\" spectrum=[0,1,1,4]"
        );
        assert_eq!(Record::new().field("a", "x\"y").to_string(), "a=\"x\\\"y\"");
        assert_eq!(r.get("spectrum"), Some("[0,1,1,4]"));
    }
}
