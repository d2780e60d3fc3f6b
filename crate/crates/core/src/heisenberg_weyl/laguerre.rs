//! Laguerre polynomials and their zeros.

use crate::error::{Error, Result};

/// `L_n(x)` by the three-term recurrence.
pub fn laguerre(n: usize, x: f64) -> f64 {
    generalized_laguerre(n, 0, x)
}

/// `L_n^{(k)}(x)` by the three-term recurrence.
pub fn generalized_laguerre(n: usize, k: usize, x: f64) -> f64 {
    let k = k as f64;
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 1.0 + k - x;
    for m in 1..n {
        let m = m as f64;
        let next = ((2.0 * m + 1.0 + k - x) * cur - (m + k) * prev) / (m + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Radial window `[min, max]` in the `(q0, p0)` plane.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RadialWindow {
    pub min: f64,
    pub max: f64,
}

impl RadialWindow {
    pub fn new(min: f64, max: f64) -> Self {
        RadialWindow { min, max }
    }

    /// Every radius.
    pub fn all() -> Self {
        RadialWindow { min: 0.0, max: f64::INFINITY }
    }
}

fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let mut flo = f(lo);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm < 0.0) == (flo < 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Zeros of `L_n` inside `[x_lo, x_hi]`, found by scanning for sign changes and
/// bisecting. All zeros lie below `4n + 2`.
pub fn laguerre_zeros_in(n: usize, x_lo: f64, x_hi: f64) -> Vec<f64> {
    if n == 0 {
        return Vec::new();
    }
    let top = (4 * n + 2) as f64;
    let lo = x_lo.max(0.0);
    let hi = x_hi.min(top);
    if lo >= hi {
        return Vec::new();
    }
    // The smallest gap between consecutive zeros exceeds 1/(n+1)^2.
    let steps = ((hi - lo) * 8.0 * ((n + 1) * (n + 1)) as f64).ceil().max(16.0) as usize;
    let h = (hi - lo) / steps as f64;
    let f = |x: f64| laguerre(n, x);
    let mut out = Vec::new();
    let mut x0 = lo;
    let mut f0 = f(x0);
    for s in 1..=steps {
        let x1 = lo + s as f64 * h;
        let f1 = f(x1);
        if f0 == 0.0 {
            out.push(x0);
        } else if (f0 < 0.0) != (f1 < 0.0) && f1 != 0.0 {
            out.push(bisect(f, x0, x1));
        }
        x0 = x1;
        f0 = f1;
    }
    if f0 == 0.0 {
        out.push(x0);
    }
    out
}

/// Radii `sqrt(2 c x_k)` of the circles on which the characteristic function
/// of the number state `|n>` vanishes, restricted to `window`.
pub fn zero_radii_in(n: usize, window: RadialWindow, c: f64) -> Vec<f64> {
    let to_x = |r: f64| r * r / (2.0 * c);
    laguerre_zeros_in(n, to_x(window.min), to_x(window.max)).into_iter().map(|x| (2.0 * c * x).sqrt()).collect()
}

/// All `n` zero-circle radii of the number state `|n>` inside `window`;
/// fails when the window does not contain all of them.
pub fn zero_locus(n: usize, window: RadialWindow, c: f64) -> Result<Vec<f64>> {
    let radii = zero_radii_in(n, window, c);
    if radii.len() != n {
        return Err(Error::ZeroCountMismatch { expected: n, found: radii.len() });
    }
    Ok(radii)
}
