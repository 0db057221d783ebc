//! Exact angle representation.
//!
//! The canonical test points are rational multiples of π, and the prolate
//! matrix entries `sin(kθ/2)/(πk)` must be evaluated at working precision
//! well beyond `f64`. An [`Angle`] therefore keeps the symbolic form
//! `(num/den)·π` when the input was given that way, and only falls back to a
//! literal `f64` for decimal input.

use crate::{Error, Result};
use rug::Float;
use std::fmt;

/// An angle in radians, kept exact when expressed as a rational multiple of π.
#[derive(Debug, Clone, PartialEq)]
pub enum Angle {
    /// `(num/den)·π`.
    PiRational { num: u32, den: u32 },
    /// Plain radians.
    Radians(f64),
}

impl Angle {
    pub fn pi() -> Self {
        Angle::PiRational { num: 1, den: 1 }
    }

    /// Parses decimal radians or the exact tokens `pi`, `pi/2`, `2pi/3`, ….
    pub fn parse(s: &str) -> Result<Angle> {
        let t = s.trim();
        if let Some(idx) = t.find("pi") {
            let (num_s, rest) = (&t[..idx], &t[idx + 2..]);
            let num = if num_s.is_empty() {
                1
            } else {
                num_s
                    .parse::<u32>()
                    .map_err(|_| Error::Usage(format!("bad angle literal `{s}`")))?
            };
            let den = if rest.is_empty() {
                1
            } else {
                let d = rest
                    .strip_prefix('/')
                    .ok_or_else(|| Error::Usage(format!("bad angle literal `{s}`")))?;
                d.parse::<u32>()
                    .map_err(|_| Error::Usage(format!("bad angle literal `{s}`")))?
            };
            if den == 0 {
                return Err(Error::Usage(format!("zero denominator in `{s}`")));
            }
            Ok(Angle::PiRational { num, den })
        } else {
            let v = t
                .parse::<f64>()
                .map_err(|_| Error::Usage(format!("bad angle literal `{s}`")))?;
            Ok(Angle::Radians(v))
        }
    }

    pub fn to_f64(&self) -> f64 {
        match *self {
            Angle::PiRational { num, den } => std::f64::consts::PI * num as f64 / den as f64,
            Angle::Radians(v) => v,
        }
    }

    /// The angle at `prec` bits.
    pub fn to_big(&self, prec: u32) -> Float {
        match *self {
            Angle::PiRational { num, den } => {
                let pi = Float::with_val(prec, rug::float::Constant::Pi);
                Float::with_val(prec, num * &pi) / den
            }
            Angle::Radians(v) => Float::with_val(prec, v),
        }
    }

    /// Canonical token used for cache keys and metadata.
    pub fn canonical(&self) -> String {
        match *self {
            Angle::PiRational { num: 1, den: 1 } => "pi".to_string(),
            Angle::PiRational { num: 1, den } => format!("pi/{den}"),
            Angle::PiRational { num, den: 1 } => format!("{num}pi"),
            Angle::PiRational { num, den } => format!("{num}pi/{den}"),
            Angle::Radians(v) => format!("{v:.17e}"),
        }
    }

    /// Validates θ ∈ (0, 2π).
    pub fn require_open_circle(&self) -> Result<f64> {
        let v = self.to_f64();
        if v > 0.0 && v < 2.0 * std::f64::consts::PI {
            Ok(v)
        } else {
            Err(Error::Domain(format!(
                "theta = {v} is outside (0, 2*pi)"
            )))
        }
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_pi_tokens() {
        assert_eq!(Angle::parse("pi").unwrap(), Angle::PiRational { num: 1, den: 1 });
        assert_eq!(Angle::parse("pi/2").unwrap(), Angle::PiRational { num: 1, den: 2 });
        assert_eq!(Angle::parse("2pi/3").unwrap(), Angle::PiRational { num: 2, den: 3 });
        assert_eq!(Angle::parse("0.75").unwrap(), Angle::Radians(0.75));
        assert!(Angle::parse("pi/0").is_err());
        assert!(Angle::parse("xpi").is_err());
    }

    #[test]
    fn exact_value_at_high_precision() {
        let a = Angle::parse("pi/2").unwrap();
        let v = a.to_big(256);
        let pi = Float::with_val(256, rug::float::Constant::Pi);
        let diff = Float::with_val(256, &v - &(pi / 2u32));
        assert_eq!(diff, 0);
    }

    #[test]
    fn range_check() {
        assert!(Angle::Radians(0.0).require_open_circle().is_err());
        assert!(Angle::parse("2pi").unwrap().require_open_circle().is_err());
        assert!(Angle::pi().require_open_circle().is_ok());
    }
}
