//! Scalar literals that may carry a `pi` suffix.
//!
//! Angles show up everywhere as fractions of pi, so any numeric field that can
//! hold an angle accepts both plain radians (`1.5707963267948966`) and
//! pi-multiples (`0.5pi`, `pi`, `-0.25pi`). The multiple form is evaluated as
//! `literal * PI`, which is also exactly how the figure presets build their
//! angles, so the two spellings of the same angle produce identical bits.

use std::f64::consts::PI;

use serde::{Deserialize, Deserializer};

/// Parses `"0.5pi"`, `"pi"`, `"-pi"`, or a plain decimal number.
pub fn parse_scalar(s: &str) -> Result<f64, String> {
    let t = s.trim();
    if let Some(prefix) = t.strip_suffix("pi") {
        let factor = match prefix.trim() {
            "" => 1.0,
            "-" => -1.0,
            "+" => 1.0,
            p => p
                .parse::<f64>()
                .map_err(|_| format!("invalid pi-multiple `{s}`"))?,
        };
        Ok(factor * PI)
    } else {
        t.parse::<f64>().map_err(|_| format!("invalid number `{s}`"))
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum NumberOrLiteral {
    Number(f64),
    Literal(String),
}

/// Serde helper: a JSON number, or a string holding a pi-literal.
pub fn deserialize_scalar<'de, D>(deserializer: D) -> Result<f64, D::Error>
where
    D: Deserializer<'de>,
{
    match NumberOrLiteral::deserialize(deserializer)? {
        NumberOrLiteral::Number(x) => Ok(x),
        NumberOrLiteral::Literal(s) => parse_scalar(&s).map_err(serde::de::Error::custom),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_plain_numbers_and_pi_multiples() {
        assert_eq!(parse_scalar("1.5").unwrap(), 1.5);
        assert_eq!(parse_scalar("0.5pi").unwrap(), 0.5 * PI);
        assert_eq!(parse_scalar("pi").unwrap(), PI);
        assert_eq!(parse_scalar("-pi").unwrap(), -PI);
        assert_eq!(parse_scalar("-0.25pi").unwrap(), -0.25 * PI);
        assert_eq!(parse_scalar(" 2pi ").unwrap(), 2.0 * PI);
        assert!(parse_scalar("halfpi").is_err());
        assert!(parse_scalar("").is_err());
    }

    #[test]
    fn radian_spelling_reproduces_pi_multiple_bits() {
        // shortest round-trip decimal of 0.5 * PI parses back to the same f64
        let a = parse_scalar("0.5pi").unwrap();
        let b = parse_scalar(&format!("{a}")).unwrap();
        assert_eq!(a.to_bits(), b.to_bits());
    }
}
