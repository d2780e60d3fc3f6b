//! The three SU(2) fiducial choices: a generic vector, `|J0, 0>`, and
//! `|J0, M0>` with `M0 != 0`.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};
use crate::linalg::{c, complete_basis, real, CMat, CVec};

use super::exact::{racah_block, racah_cg, ExactCG};

/// One `pi^{(J)}` scalar.
#[derive(Clone, Debug, PartialEq)]
pub struct PiScalar {
    pub twice_j: u32,
    pub value: ExactCG,
}

/// One `pi^{(J)}` column, rows indexed by the canonical basis of `J`.
#[derive(Clone, Debug)]
pub struct PiColumn {
    pub twice_j: u32,
    pub column: CVec,
}

/// `sqrt(2J+1)/(2J0+1) * C^{J0 J J0}_{M0 0 M0}` for `J = 0, 1, ..., 2 J0`.
fn pi_scalars(twice_j0: u32, twice_m0: i64) -> Vec<PiScalar> {
    let tj0 = twice_j0 as i64;
    (0..=twice_j0)
        .map(|j| {
            let tj = 2 * j as i64;
            let cg = racah_cg(tj0, twice_m0, tj, 0, tj0, twice_m0);
            let pref = ExactCG {
                sign: 1,
                radicand: BigRational::new(BigInt::from(tj + 1), BigInt::from((tj0 + 1) * (tj0 + 1))),
            };
            PiScalar { twice_j: 2 * j, value: pref.mul(&cg) }
        })
        .collect()
}

/// Scalars for the fiducial `|J0, 0>` (integer `J0 >= 1`).
pub fn pi_matrix_example2(twice_j0: u32) -> Result<Vec<PiScalar>> {
    if twice_j0 == 0 || !twice_j0.is_multiple_of(2) {
        return Err(Error::InvalidLabel(format!("J0 must be a positive integer, got {twice_j0}/2")));
    }
    Ok(pi_scalars(twice_j0, 0))
}

/// Scalars for the fiducial `|J0, M0>`; at `M0 = 0` this is
/// [`pi_matrix_example2`].
pub fn pi_matrix_example3(twice_j0: u32, twice_m0: i64) -> Result<Vec<PiScalar>> {
    let tj0 = twice_j0 as i64;
    if twice_m0.abs() > tj0 || (tj0 + twice_m0) % 2 != 0 {
        return Err(Error::InvalidLabel(format!("m={twice_m0}/2 is not a state of j={twice_j0}/2")));
    }
    Ok(pi_scalars(twice_j0, twice_m0))
}

/// Columns for an arbitrary unit fiducial with trivial stabilizer.
///
/// The basis of `H^{J0}` is completed with `psi0` first and the Racah
/// couplings `J0 (x) J -> J0` are rotated into it; the column is the slice
/// with both `J0` indices on `psi0`, scaled by `sqrt(2J+1)/(2J0+1)`.
pub fn pi_matrix_example1(twice_j0: u32, psi0: &CVec) -> Result<Vec<PiColumn>> {
    let n0 = twice_j0 as usize + 1;
    if psi0.len() != n0 {
        return Err(Error::DimensionMismatch { expected: n0, found: psi0.len() });
    }
    let norm = psi0.norm();
    if (norm - 1.0).abs() > 1e-10 {
        return Err(Error::NotUnitNorm(norm));
    }
    let v = complete_basis(psi0);
    let tj0 = twice_j0 as i64;
    let mut out = Vec::new();
    for j in 0..=twice_j0 {
        let tj = 2 * j as i64;
        let nj = (tj + 1) as usize;
        let b = racah_block(tj0, tj, tj0);
        let big_v = crate::linalg::kron(&v, &CMat::identity(nj, nj));
        let rotated = big_v.adjoint() * b * &v;
        let scale = ((tj + 1) as f64).sqrt() / n0 as f64;
        let column = CVec::from_fn(nj, |lam, _| rotated[(lam, 0)] * real(scale));
        out.push(PiColumn { twice_j: 2 * j, column });
    }
    Ok(out)
}

/// Seeded complex Gaussian unit vector, used as the default generic fiducial.
pub fn generic_fiducial(dim: usize, seed: u64) -> CVec {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let v = CVec::from_fn(dim, |_, _| {
        let re: f64 = StandardNormal.sample(&mut rng);
        let im: f64 = StandardNormal.sample(&mut rng);
        c(re, im)
    });
    let n = v.norm();
    v / real(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example2_spin_one() {
        let p = pi_matrix_example2(2).unwrap();
        assert_eq!(p[0].value, ExactCG::from_parts(1, 1, 9));
        assert!(p[1].value.is_zero());
        assert!(p[2].value.sign != 0);
    }

    #[test]
    fn example2_odd_j_vanish() {
        let p = pi_matrix_example2(4).unwrap();
        assert!(p[1].value.is_zero());
        assert!(p[3].value.is_zero());
        assert!(!p[2].value.is_zero() && !p[4].value.is_zero());
    }

    #[test]
    fn example3_nonzero() {
        for s in pi_matrix_example3(1, 1).unwrap() {
            assert!(!s.value.is_zero());
        }
        for s in pi_matrix_example3(2, 2).unwrap() {
            assert!(!s.value.is_zero());
        }
        assert!(pi_matrix_example3(2, 0).unwrap()[1].value.is_zero());
    }

    #[test]
    fn example1_on_canonical_state_matches_example3() {
        let mut psi = CVec::zeros(3);
        psi[0] = real(1.0);
        let cols = pi_matrix_example1(2, &psi).unwrap();
        let scalars = pi_matrix_example3(2, 2).unwrap();
        for (col, s) in cols.iter().zip(&scalars) {
            let j = col.twice_j as usize / 2;
            // the T3 = 0 row of the J column
            assert!((col.column[j].re - s.value.value()).abs() < 1e-14);
            for (k, z) in col.column.iter().enumerate() {
                if k != j {
                    assert!(z.norm() < 1e-14);
                }
            }
        }
    }

    #[test]
    fn example1_rejects_non_unit() {
        let psi = CVec::from_element(3, real(1.0));
        assert!(matches!(pi_matrix_example1(2, &psi), Err(Error::NotUnitNorm(_))));
    }
}
