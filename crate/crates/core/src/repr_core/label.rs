use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Group {
    SU2,
    SU3,
}

impl Group {
    pub fn algebra_dim(self) -> usize {
        match self {
            Group::SU2 => 3,
            Group::SU3 => 8,
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Group::SU2 => write!(f, "SU(2)"),
            Group::SU3 => write!(f, "SU(3)"),
        }
    }
}

/// Label of an irreducible representation. SU(2) spins are stored doubled so
/// that half-integers stay exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum IrrepLabel {
    SU2 { twice_j: u32 },
    SU3 { p: u32, q: u32 },
}

impl IrrepLabel {
    pub fn su2(twice_j: u32) -> Self {
        IrrepLabel::SU2 { twice_j }
    }

    pub fn su3(p: u32, q: u32) -> Self {
        IrrepLabel::SU3 { p, q }
    }

    pub fn group(&self) -> Group {
        match self {
            IrrepLabel::SU2 { .. } => Group::SU2,
            IrrepLabel::SU3 { .. } => Group::SU3,
        }
    }

    pub fn dimension(&self) -> usize {
        match *self {
            IrrepLabel::SU2 { twice_j } => twice_j as usize + 1,
            IrrepLabel::SU3 { p, q } => {
                let (p, q) = (p as usize, q as usize);
                (p + 1) * (q + 1) * (p + q + 2) / 2
            }
        }
    }

    /// Eigenvalue of `sum_a T_a^2` with the generator normalization used by
    /// [`super::realize_irrep`].
    pub fn casimir(&self) -> f64 {
        match *self {
            IrrepLabel::SU2 { twice_j } => {
                let j = twice_j as f64 / 2.0;
                j * (j + 1.0)
            }
            IrrepLabel::SU3 { p, q } => {
                let (p, q) = (p as f64, q as f64);
                (p * p + q * q + p * q + 3.0 * p + 3.0 * q) / 3.0
            }
        }
    }

    /// Label of the complex-conjugate representation.
    pub fn conjugate(&self) -> Self {
        match *self {
            IrrepLabel::SU2 { .. } => *self,
            IrrepLabel::SU3 { p, q } => IrrepLabel::SU3 { p: q, q: p },
        }
    }

    pub fn is_trivial(&self) -> bool {
        match *self {
            IrrepLabel::SU2 { twice_j } => twice_j == 0,
            IrrepLabel::SU3 { p, q } => p == 0 && q == 0,
        }
    }

    /// Parses a spin such as `1`, `0.5`, `3/2` into an SU(2) label.
    pub fn parse_su2(s: &str) -> Result<Self> {
        parse_twice(s).map(IrrepLabel::su2)
    }

    /// Parses `p,q` or `(p,q)` into an SU(3) label.
    pub fn parse_su3(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut it = t.split(',');
        let (a, b) = match (it.next(), it.next(), it.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => return Err(Error::InvalidLabel(format!("expected p,q, got {s:?}"))),
        };
        let p = a.trim().parse::<u32>();
        let q = b.trim().parse::<u32>();
        match (p, q) {
            (Ok(p), Ok(q)) => Ok(IrrepLabel::su3(p, q)),
            _ => Err(Error::InvalidLabel(format!("expected nonnegative integers, got {s:?}"))),
        }
    }
}

/// Parses a nonnegative half-integer and returns twice its value.
pub fn parse_twice(s: &str) -> Result<u32> {
    let signed = parse_twice_signed(s)?;
    u32::try_from(signed).map_err(|_| Error::InvalidLabel(format!("{s:?} is negative")))
}

/// Parses a (possibly negative) half-integer, written as a decimal or as a
/// fraction with denominator 1 or 2, and returns twice its value.
pub fn parse_twice_signed(s: &str) -> Result<i32> {
    let bad = || Error::InvalidLabel(format!("{s:?} is not a half-integer"));
    let t = s.trim();
    if let Some((num, den)) = t.split_once('/') {
        let num: i32 = num.trim().parse().map_err(|_| bad())?;
        match den.trim() {
            "1" => Ok(2 * num),
            "2" => Ok(num),
            _ => Err(bad()),
        }
    } else {
        let v: f64 = t.parse().map_err(|_| bad())?;
        let twice = (2.0 * v).round();
        if !v.is_finite() || (2.0 * v - twice).abs() > 1e-12 {
            return Err(bad());
        }
        Ok(twice as i32)
    }
}

/// Formats a doubled value as an integer or `n/2`.
pub fn fmt_half(twice: i64) -> String {
    if twice % 2 == 0 {
        format!("{}", twice / 2)
    } else {
        format!("{twice}/2")
    }
}

/// Formats a tripled value as an integer or `n/3`.
pub fn fmt_third(thrice: i64) -> String {
    if thrice % 3 == 0 {
        format!("{}", thrice / 3)
    } else {
        format!("{thrice}/3")
    }
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            IrrepLabel::SU2 { twice_j } => write!(f, "{}", fmt_half(twice_j as i64)),
            IrrepLabel::SU3 { p, q } => write!(f, "({p},{q})"),
        }
    }
}

impl FromStr for IrrepLabel {
    type Err = Error;

    /// Accepts `(p,q)`/`p,q` for SU(3) and a half-integer for SU(2).
    fn from_str(s: &str) -> Result<Self> {
        if s.contains(',') {
            IrrepLabel::parse_su3(s)
        } else {
            IrrepLabel::parse_su2(s)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        assert_eq!(IrrepLabel::su2(1).dimension(), 2);
        assert_eq!(IrrepLabel::su3(1, 1).dimension(), 8);
        assert_eq!(IrrepLabel::su3(2, 2).dimension(), 27);
        assert_eq!(IrrepLabel::su3(3, 0).dimension(), 10);
    }

    #[test]
    fn casimirs() {
        assert!((IrrepLabel::su2(1).casimir() - 0.75).abs() < 1e-15);
        assert!((IrrepLabel::su3(1, 1).casimir() - 3.0).abs() < 1e-15);
        assert!((IrrepLabel::su3(1, 0).casimir() - 4.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn parsing() {
        assert_eq!(IrrepLabel::parse_su2("0.5").unwrap(), IrrepLabel::su2(1));
        assert_eq!(IrrepLabel::parse_su2("1/2").unwrap(), IrrepLabel::su2(1));
        assert_eq!(IrrepLabel::parse_su2("3").unwrap(), IrrepLabel::su2(6));
        assert!(IrrepLabel::parse_su2("0.3").is_err());
        assert!(IrrepLabel::parse_su2("-1").is_err());
        assert_eq!(parse_twice_signed("-1/2").unwrap(), -1);
        assert_eq!("(1,1)".parse::<IrrepLabel>().unwrap(), IrrepLabel::su3(1, 1));
        assert_eq!("2, 0".parse::<IrrepLabel>().unwrap(), IrrepLabel::su3(2, 0));
    }

    #[test]
    fn display() {
        assert_eq!(IrrepLabel::su2(3).to_string(), "3/2");
        assert_eq!(IrrepLabel::su2(4).to_string(), "2");
        assert_eq!(IrrepLabel::su3(3, 0).to_string(), "(3,0)");
    }
}
