//! Lie-algebra data for su(2) and su(3): defining generators, Cartan
//! operators, ladder operators and weight bookkeeping.

use crate::error::{Error, Result};
use crate::linalg::{c, real, CMat, C64};

use super::label::{Group, IrrepLabel};

/// Integer weight key: `(2 T3, 0)` for SU(2) and `(2 I3, 3 Y)` for SU(3).
pub type WeightKey = (i64, i64);

/// Hermitian generators of the defining representation, normalized to
/// `Tr(T_a T_b) = delta_ab / 2`.
pub fn defining_generators(group: Group) -> Vec<CMat> {
    let z = real(0.0);
    let o = real(1.0);
    let i = c(0.0, 1.0);
    let half = real(0.5);
    match group {
        Group::SU2 => {
            let s1 = CMat::from_row_slice(2, 2, &[z, o, o, z]);
            let s2 = CMat::from_row_slice(2, 2, &[z, -i, i, z]);
            let s3 = CMat::from_row_slice(2, 2, &[o, z, z, -o]);
            vec![s1 * half, s2 * half, s3 * half]
        }
        Group::SU3 => {
            let r3 = 1.0 / 3f64.sqrt();
            let m = |entries: [C64; 9]| CMat::from_row_slice(3, 3, &entries) * half;
            vec![
                m([z, o, z, o, z, z, z, z, z]),
                m([z, -i, z, i, z, z, z, z, z]),
                m([o, z, z, z, -o, z, z, z, z]),
                m([z, z, o, z, z, z, o, z, z]),
                m([z, z, -i, z, z, z, i, z, z]),
                m([z, z, z, z, z, o, z, o, z]),
                m([z, z, z, z, z, -i, z, i, z]),
                m([real(r3), z, z, z, real(r3), z, z, z, real(-2.0 * r3)]),
            ]
        }
    }
}

/// Structure constants `f_abc` with `[T_a, T_b] = i f_abc T_c`.
pub fn structure_constants(group: Group) -> Vec<Vec<Vec<f64>>> {
    let t = defining_generators(group);
    let n = t.len();
    let mut f = vec![vec![vec![0.0; n]; n]; n];
    for a in 0..n {
        for b in 0..n {
            let comm = &t[a] * &t[b] - &t[b] * &t[a];
            for cc in 0..n {
                // Tr([Ta,Tb] Tc) = i f_abc / 2
                let tr = (&comm * &t[cc]).trace();
                f[a][b][cc] = (tr * c(0.0, -2.0)).re;
            }
        }
    }
    f
}

/// Largest Frobenius residual of the commutation relations.
pub fn commutation_residual(group: Group, gens: &[CMat]) -> f64 {
    let f = structure_constants(group);
    let n = gens.len();
    let mut worst: f64 = 0.0;
    for a in 0..n {
        for b in 0..n {
            let comm = &gens[a] * &gens[b] - &gens[b] * &gens[a];
            let mut rhs = CMat::zeros(gens[0].nrows(), gens[0].ncols());
            for cc in 0..n {
                if f[a][b][cc] != 0.0 {
                    rhs += &gens[cc] * c(0.0, f[a][b][cc]);
                }
            }
            worst = worst.max((comm - rhs).norm());
        }
    }
    worst
}

/// `sum_a x_a T_a`.
pub fn combine(gens: &[CMat], coords: &[f64]) -> CMat {
    let mut out = CMat::zeros(gens[0].nrows(), gens[0].ncols());
    for (g, &x) in gens.iter().zip(coords) {
        if x != 0.0 {
            out += g * real(x);
        }
    }
    out
}

pub fn casimir(gens: &[CMat]) -> CMat {
    gens.iter().map(|g| g * g).fold(CMat::zeros(gens[0].nrows(), gens[0].ncols()), |a, b| a + b)
}

/// Diagonal Cartan operators: `[T3]` for SU(2), `[I3, Y]` for SU(3) with
/// `Y = (2/sqrt 3) T8`.
pub fn cartan(group: Group, gens: &[CMat]) -> Vec<CMat> {
    match group {
        Group::SU2 => vec![gens[2].clone()],
        Group::SU3 => vec![gens[2].clone(), &gens[7] * real(2.0 / 3f64.sqrt())],
    }
}

/// Positive-root ladder operators: `T+` for SU(2); `I+, V+, U+` for SU(3).
pub fn raising(group: Group, gens: &[CMat]) -> Vec<CMat> {
    let i = c(0.0, 1.0);
    match group {
        Group::SU2 => vec![&gens[0] + &gens[1] * i],
        Group::SU3 => vec![
            &gens[0] + &gens[1] * i,
            &gens[3] + &gens[4] * i,
            &gens[5] + &gens[6] * i,
        ],
    }
}

pub fn lowering(group: Group, gens: &[CMat]) -> Vec<CMat> {
    raising(group, gens).iter().map(|r| r.adjoint()).collect()
}

/// Isospin Casimir `T1^2 + T2^2 + T3^2` (the full Casimir for SU(2)).
pub fn isospin_squared(gens: &[CMat]) -> CMat {
    casimir(&gens[..3])
}

/// Converts Cartan eigenvalues to an integer key, failing if they are not on
/// the weight lattice.
pub fn weight_key(group: Group, values: &[f64]) -> Result<WeightKey> {
    let snap = |x: f64, scale: f64| -> Result<i64> {
        let y = x * scale;
        let r = y.round();
        if (y - r).abs() > 1e-6 {
            return Err(Error::Numerical(format!("Cartan eigenvalue {x} is off the weight lattice")));
        }
        Ok(r as i64)
    };
    match group {
        Group::SU2 => Ok((snap(values[0], 2.0)?, 0)),
        Group::SU3 => Ok((snap(values[0], 2.0)?, snap(values[1], 3.0)?)),
    }
}

/// Weight key of every basis vector, assuming diagonal Cartan operators.
pub fn diagonal_weights(group: Group, gens: &[CMat]) -> Result<Vec<WeightKey>> {
    let h = cartan(group, gens);
    for m in &h {
        if !crate::linalg::is_diagonal(m, 1e-10) {
            return Err(Error::Numerical("Cartan operators are not diagonal in this basis".into()));
        }
    }
    let n = gens[0].nrows();
    (0..n)
        .map(|k| {
            let vals: Vec<f64> = h.iter().map(|m| m[(k, k)].re).collect();
            weight_key(group, &vals)
        })
        .collect()
}

/// Irrep label whose highest weight is `key`.
pub fn label_from_highest_weight(group: Group, key: WeightKey) -> Result<IrrepLabel> {
    match group {
        Group::SU2 => {
            if key.0 < 0 {
                return Err(Error::Numerical(format!("negative highest weight {}", key.0)));
            }
            Ok(IrrepLabel::su2(key.0 as u32))
        }
        Group::SU3 => {
            // p = 2 I3, q = 3Y/2 - I3
            let p = key.0;
            let twice_q = key.1 - key.0;
            if p < 0 || twice_q < 0 || twice_q % 2 != 0 {
                return Err(Error::Numerical(format!("{key:?} is not a dominant weight")));
            }
            Ok(IrrepLabel::su3(p as u32, (twice_q / 2) as u32))
        }
    }
}

/// Highest-weight key of `label`.
pub fn highest_weight(label: &IrrepLabel) -> WeightKey {
    match *label {
        IrrepLabel::SU2 { twice_j } => (twice_j as i64, 0),
        IrrepLabel::SU3 { p, q } => (p as i64, p as i64 + 2 * q as i64),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn su2_structure_constants_are_levi_civita() {
        let f = structure_constants(Group::SU2);
        assert!((f[0][1][2] - 1.0).abs() < 1e-14);
        assert!((f[1][0][2] + 1.0).abs() < 1e-14);
        assert!(f[0][0][2].abs() < 1e-14);
    }

    #[test]
    fn su3_known_constants() {
        let f = structure_constants(Group::SU3);
        assert!((f[0][1][2] - 1.0).abs() < 1e-14);
        assert!((f[3][4][7] - 3f64.sqrt() / 2.0).abs() < 1e-14);
        assert!((f[0][3][6] - 0.5).abs() < 1e-14);
    }

    #[test]
    fn fundamental_weights() {
        let g = defining_generators(Group::SU3);
        let w = diagonal_weights(Group::SU3, &g).unwrap();
        assert_eq!(w, vec![(1, 1), (-1, 1), (0, -2)]);
        assert_eq!(label_from_highest_weight(Group::SU3, (1, 1)).unwrap(), IrrepLabel::su3(1, 0));
        assert_eq!(label_from_highest_weight(Group::SU3, (0, 2)).unwrap(), IrrepLabel::su3(0, 1));
        assert_eq!(label_from_highest_weight(Group::SU3, (1, 3)).unwrap(), IrrepLabel::su3(1, 1));
        for l in [IrrepLabel::su3(2, 1), IrrepLabel::su3(0, 3)] {
            assert_eq!(label_from_highest_weight(Group::SU3, highest_weight(&l)).unwrap(), l);
        }
    }

    #[test]
    fn defining_reps_close() {
        for g in [Group::SU2, Group::SU3] {
            assert!(commutation_residual(g, &defining_generators(g)) < 1e-14);
        }
    }
}
