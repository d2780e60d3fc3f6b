use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A real number `sign * sqrt(radicand)` with rational radicand.
///
/// Products stay exact; sums of such numbers are not closed and fall back to
/// `f64` through [`ExactCG::value`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactCG {
    pub sign: i8,
    pub radicand: BigRational,
}

impl ExactCG {
    pub fn zero() -> Self {
        ExactCG { sign: 0, radicand: BigRational::zero() }
    }

    pub fn one() -> Self {
        ExactCG { sign: 1, radicand: BigRational::one() }
    }

    /// `sign * sqrt(num/den)`.
    pub fn from_parts(sign: i8, num: i64, den: i64) -> Self {
        let r = BigRational::new(BigInt::from(num), BigInt::from(den));
        if sign == 0 || r.is_zero() {
            ExactCG::zero()
        } else {
            ExactCG { sign: sign.signum(), radicand: r }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    /// The exact square `sign^2 * radicand`.
    pub fn square(&self) -> BigRational {
        if self.is_zero() {
            BigRational::zero()
        } else {
            self.radicand.clone()
        }
    }

    pub fn value(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        self.sign as f64 * self.radicand.to_f64().unwrap_or(f64::NAN).sqrt()
    }

    pub fn mul(&self, other: &ExactCG) -> ExactCG {
        if self.is_zero() || other.is_zero() {
            return ExactCG::zero();
        }
        ExactCG { sign: self.sign * other.sign, radicand: &self.radicand * &other.radicand }
    }
}

impl fmt::Display for ExactCG {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            0 => f.write_str("0"),
            s => write!(f, "{}sqrt({})", if s < 0 { "-" } else { "" }, self.radicand),
        }
    }
}

fn factorial(n: i64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Clebsch–Gordan coefficient `<j1 m1; j2 m2 | j3 m3>` in the Condon–Shortley
/// convention, from the Racah sum. Arguments are doubled angular momenta.
/// Returns exact zero for violated selection rules.
pub fn racah_cg(tj1: i64, tm1: i64, tj2: i64, tm2: i64, tj3: i64, tm3: i64) -> ExactCG {
    let valid_pair = |tj: i64, tm: i64| tj >= 0 && tm.abs() <= tj && (tj + tm) % 2 == 0;
    if !valid_pair(tj1, tm1) || !valid_pair(tj2, tm2) || !valid_pair(tj3, tm3) {
        return ExactCG::zero();
    }
    if tm1 + tm2 != tm3 {
        return ExactCG::zero();
    }
    if tj3 > tj1 + tj2 || tj3 < (tj1 - tj2).abs() || (tj1 + tj2 + tj3) % 2 != 0 {
        return ExactCG::zero();
    }
    // Integer combinations below are exact halves of even sums.
    let h = |x: i64| x / 2;
    let a = h(tj1 + tj2 - tj3);
    let b = h(tj1 - tm1);
    let cc = h(tj2 + tm2);
    let d = h(tj3 - tj2 + tm1);
    let e = h(tj3 - tj1 - tm2);
    let prefactor_num = BigInt::from(tj3 + 1)
        * factorial(h(tj3 + tj1 - tj2))
        * factorial(h(tj3 - tj1 + tj2))
        * factorial(a)
        * factorial(h(tj3 + tm3))
        * factorial(h(tj3 - tm3))
        * factorial(h(tj1 - tm1))
        * factorial(h(tj1 + tm1))
        * factorial(h(tj2 - tm2))
        * factorial(h(tj2 + tm2));
    let prefactor = BigRational::new(prefactor_num, factorial(h(tj1 + tj2 + tj3) + 1));

    let kmin = 0.max(-d).max(-e);
    let kmax = a.min(b).min(cc);
    let mut sum = BigRational::zero();
    for k in kmin..=kmax {
        let den = factorial(k) * factorial(a - k) * factorial(b - k) * factorial(cc - k) * factorial(d + k) * factorial(e + k);
        let term = BigRational::new(BigInt::one(), den);
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    if sum.is_zero() {
        return ExactCG::zero();
    }
    let sign = if sum.is_negative() { -1 } else { 1 };
    ExactCG { sign, radicand: &sum * &sum * prefactor }
}

/// Floating-point isometry `(N1 N2) x N3` of Racah coefficients, with product
/// index `i1 N2 + i2` and canonical ordering `m = j, j-1, ..., -j`.
pub fn racah_block(tj1: i64, tj2: i64, tj3: i64) -> crate::linalg::CMat {
    let (n1, n2, n3) = ((tj1 + 1) as usize, (tj2 + 1) as usize, (tj3 + 1) as usize);
    crate::linalg::CMat::from_fn(n1 * n2, n3, |row, col| {
        let (i1, i2) = (row / n2, row % n2);
        let tm1 = tj1 - 2 * i1 as i64;
        let tm2 = tj2 - 2 * i2 as i64;
        let tm3 = tj3 - 2 * col as i64;
        crate::linalg::real(racah_cg(tj1, tm1, tj2, tm2, tj3, tm3).value())
    })
}
