//! Plain comma-separated output with C-style scientific numbers.

use std::io::{self, Write};

/// `x` with 17 significant digits and a signed, at least two-digit exponent,
/// like C's `%.16e`: `6.0000000000000000e+04`.
pub fn sci(x: f64) -> String {
    let s = format!("{x:.16e}");
    match s.split_once('e') {
        Some((mantissa, exp)) => {
            let exp: i32 = exp.parse().expect("exponent of a formatted float");
            let sign = if exp < 0 { '-' } else { '+' };
            format!("{mantissa}e{sign}{:02}", exp.unsigned_abs())
        }
        None => s,
    }
}

pub fn write_row<W: Write>(out: &mut W, fields: &[&str]) -> io::Result<()> {
    writeln!(out, "{}", fields.join(","))
}
