use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, canonical_basis, cluster_sorted, hermitian_eigen, null_space, real, CMat, CVec};

use super::algebra;
use super::irrep::{isospin_frame, BasisTag, RealizedIrrep, StateLabel};
use super::label::{fmt_half, fmt_third, Group};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Subgroup {
    Trivial,
    /// U(1) generated by `T3`, or by `n.T` for a unit axis `n`.
    U1T3,
    /// Maximal torus of SU(3), generated by `I3` and `Y`.
    U1xU1,
    /// Isospin U(2) of SU(3), generated by `I1, I2, I3, Y`.
    U2InSU3,
    /// Centre of the Heisenberg–Weyl group.
    U1CenterHW,
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Subgroup::Trivial => "trivial",
            Subgroup::U1T3 => "U1_T3",
            Subgroup::U1xU1 => "U1xU1",
            Subgroup::U2InSU3 => "U2_in_SU3",
            Subgroup::U1CenterHW => "U1_center_HW",
        };
        f.write_str(s)
    }
}

/// Whether `psi0` is fixed by the whole stabilizer (`A`) or only up to a phase
/// along one U(1) direction (`B`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CaseTag {
    A,
    B,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseTag::A => "a",
            CaseTag::B => "b",
        })
    }
}

/// A stabilizer subgroup, described by algebra coordinates of a basis of its
/// Lie algebra (`algebra`) and of the strict stabilizer's Lie algebra
/// (`strict`).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StabilizerSpec {
    pub subgroup: Subgroup,
    pub case_tag: CaseTag,
    pub algebra: Vec<Vec<f64>>,
    pub strict: Vec<Vec<f64>>,
}

fn unit(n: usize, k: usize) -> Vec<f64> {
    let mut v = vec![0.0; n];
    v[k] = 1.0;
    v
}

/// Algebra coordinates of the standard embedding of a subgroup.
pub fn standard_coordinates(group: Group, subgroup: Subgroup) -> Result<Vec<Vec<f64>>> {
    let n = group.algebra_dim();
    let unsupported = || Error::UnsupportedSubgroup { subgroup: subgroup.to_string(), group: group.to_string() };
    match (group, subgroup) {
        (_, Subgroup::Trivial) => Ok(Vec::new()),
        (Group::SU2, Subgroup::U1T3) => Ok(vec![unit(n, 2)]),
        (Group::SU3, Subgroup::U1xU1) => Ok(vec![unit(n, 2), unit(n, 7)]),
        (Group::SU3, Subgroup::U2InSU3) => Ok(vec![unit(n, 0), unit(n, 1), unit(n, 2), unit(n, 7)]),
        _ => Err(unsupported()),
    }
}

impl StabilizerSpec {
    /// Standard embedding with `H0 = H` for case a, or `H0` trivial for case b.
    pub fn standard(group: Group, subgroup: Subgroup, case_tag: CaseTag) -> Result<Self> {
        let algebra = standard_coordinates(group, subgroup)?;
        let strict = match case_tag {
            CaseTag::A => algebra.clone(),
            CaseTag::B => Vec::new(),
        };
        Ok(StabilizerSpec { subgroup, case_tag, algebra, strict })
    }

    pub fn dim(&self) -> usize {
        self.algebra.len()
    }

    /// Whether the algebra spans the same subspace as the standard embedding.
    pub fn is_standard(&self, group: Group) -> bool {
        let Ok(std) = standard_coordinates(group, self.subgroup) else {
            return false;
        };
        projector(&std, group.algebra_dim()).map(|p| (p - projector(&self.algebra, group.algebra_dim()).unwrap_or_default()).norm())
            .is_some_and(|d| d < 1e-8)
    }
}

fn projector(rows: &[Vec<f64>], n: usize) -> Option<nalgebra::DMatrix<f64>> {
    if rows.is_empty() {
        return Some(nalgebra::DMatrix::zeros(n, n));
    }
    let m = nalgebra::DMatrix::from_fn(n, rows.len(), |i, k| rows[k][i]);
    let q = m.qr().q();
    Some(&q * q.transpose())
}

/// An irrep of one of the supported subgroups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SubIrrep {
    Trivial,
    /// U(1) charge `m` (doubled).
    U1 { twice_m: i64 },
    /// Torus charges `(I3, Y)`.
    Torus { twice_i3: i64, three_y: i64 },
    /// U(2) irrep with isospin `I` and hypercharge `Y`.
    U2 { twice_i: i64, three_y: i64 },
}

impl fmt::Display for SubIrrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SubIrrep::Trivial => f.write_str("0"),
            SubIrrep::U1 { twice_m } => write!(f, "m={}", fmt_half(twice_m)),
            SubIrrep::Torus { twice_i3, three_y } => write!(f, "I3={},Y={}", fmt_half(twice_i3), fmt_third(three_y)),
            SubIrrep::U2 { twice_i, three_y } => write!(f, "I={},Y={}", fmt_half(twice_i), fmt_third(three_y)),
        }
    }
}

/// Basis label `(mu, j, m)` in a subgroup-adapted basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdaptedIndex {
    /// 1-based multiplicity of `j` inside the irrep.
    pub mu: usize,
    pub j: SubIrrep,
    /// Doubled magnetic label inside `j` (`2 I3` for U(2), zero otherwise).
    pub m: i64,
}

#[derive(Clone, Debug)]
pub struct AdaptedBasis {
    pub irrep: RealizedIrrep,
    pub indices: Vec<AdaptedIndex>,
    /// Columns are the adapted basis vectors in the original basis.
    pub change: CMat,
}

fn stacked_kernel(ops: &[CMat], n: usize) -> CMat {
    if ops.is_empty() {
        return CMat::identity(n, n);
    }
    let mut stacked = CMat::zeros(ops.len() * n, n);
    for (k, op) in ops.iter().enumerate() {
        stacked.view_mut((k * n, 0), (n, n)).copy_from(op);
    }
    null_space(&stacked, 1e-8)
}

/// Orthonormal basis of the states of `irrep` annihilated by every generator
/// of the subgroup (the subgroup scalars), made deterministic with
/// [`canonical_basis`].
pub fn scalar_subspace(irrep: &RealizedIrrep, spec: &StabilizerSpec) -> CMat {
    let ops: Vec<CMat> = spec.algebra.iter().map(|x| irrep.algebra_element(x)).collect();
    canonical_basis(&stacked_kernel(&ops, irrep.dim()))
}

fn require_standard(irrep: &RealizedIrrep, spec: &StabilizerSpec) -> Result<()> {
    if !spec.is_standard(irrep.group()) {
        return Err(Error::UnsupportedSubgroup {
            subgroup: format!("{} (non-standard embedding)", spec.subgroup),
            group: irrep.group().to_string(),
        });
    }
    Ok(())
}

fn shifted(op: &CMat, value: f64) -> CMat {
    op - CMat::identity(op.nrows(), op.ncols()) * real(value)
}

/// Multiplicity of `sub` in the restriction of `irrep` to the subgroup, which
/// by reciprocity equals the multiplicity of `irrep` in the representation
/// induced from `sub`.
pub fn branching_multiplicity(irrep: &RealizedIrrep, spec: &StabilizerSpec, sub: SubIrrep) -> Result<usize> {
    let n = irrep.dim();
    let group = irrep.group();
    let mismatch = || Error::UnsupportedSubgroup {
        subgroup: format!("{} with irrep {sub}", spec.subgroup),
        group: group.to_string(),
    };
    let gens = &irrep.generators;
    match (spec.subgroup, sub) {
        (Subgroup::U1CenterHW, _) => Err(mismatch()),
        (Subgroup::Trivial, SubIrrep::Trivial) => Ok(n),
        (_, SubIrrep::Trivial) => Ok(scalar_subspace(irrep, spec).ncols()),
        (Subgroup::U1T3, SubIrrep::U1 { twice_m }) => {
            let x = unit_axis(&spec.algebra[0]);
            let op = shifted(&irrep.algebra_element(&x), twice_m as f64 / 2.0);
            Ok(stacked_kernel(&[op], n).ncols())
        }
        (Subgroup::U1xU1, SubIrrep::Torus { twice_i3, three_y }) => {
            require_standard(irrep, spec)?;
            let h = algebra::cartan(group, gens);
            let ops = [shifted(&h[0], twice_i3 as f64 / 2.0), shifted(&h[1], three_y as f64 / 3.0)];
            Ok(stacked_kernel(&ops, n).ncols())
        }
        (Subgroup::U2InSU3, SubIrrep::U2 { twice_i, three_y }) => {
            require_standard(irrep, spec)?;
            let h = algebra::cartan(group, gens);
            let i = twice_i as f64 / 2.0;
            let ops = [
                shifted(&algebra::isospin_squared(gens), i * (i + 1.0)),
                shifted(&h[0], i),
                shifted(&h[1], three_y as f64 / 3.0),
            ];
            Ok(stacked_kernel(&ops, n).ncols())
        }
        _ => Err(mismatch()),
    }
}

fn unit_axis(x: &[f64]) -> Vec<f64> {
    let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    x.iter().map(|v| v / norm).collect()
}

/// Splits `basis` into joint eigenspaces of commuting Hermitian `ops`,
/// returning `(eigenvalues, subspace)` pairs with eigenvalues descending.
fn joint_split(ops: &[CMat], basis: CMat) -> Vec<(Vec<f64>, CMat)> {
    let Some((first, rest)) = ops.split_first() else {
        return vec![(Vec::new(), basis)];
    };
    let (vals, vecs) = hermitian_eigen(&linalg::restrict(first, &basis));
    let mut out = Vec::new();
    for range in cluster_sorted(&vals, 1e-8).into_iter().rev() {
        let value = vals[range.clone()].iter().sum::<f64>() / range.len() as f64;
        let cols: Vec<CVec> = range.clone().map(|k| &basis * vecs.column(k)).collect();
        let sub = canonical_basis(&CMat::from_columns(&cols));
        for (mut charges, space) in joint_split(rest, sub) {
            charges.insert(0, value);
            out.push((charges, space));
        }
    }
    out
}

/// Unitary change of basis making the subgroup generators block diagonal,
/// with blocks labelled by `(mu, j)`.
///
/// Abelian subgroups are split into joint charge sectors (charges descending,
/// `Y` before `I3` for the torus); U(2) uses the isospin/hypercharge frame.
/// Within a sector the basis is fixed by [`canonical_basis`].
pub fn adapt_basis(irrep: &RealizedIrrep, spec: &StabilizerSpec) -> Result<AdaptedBasis> {
    let n = irrep.dim();
    let group = irrep.group();
    let (change, indices): (CMat, Vec<AdaptedIndex>) = match spec.subgroup {
        Subgroup::Trivial => (
            CMat::identity(n, n),
            (0..n).map(|k| AdaptedIndex { mu: k + 1, j: SubIrrep::Trivial, m: 0 }).collect(),
        ),
        Subgroup::U1T3 => {
            let op = irrep.algebra_element(&unit_axis(&spec.algebra[0]));
            let sectors = joint_split(&[op], CMat::identity(n, n));
            collect_sectors(sectors, |c| SubIrrep::U1 { twice_m: (2.0 * c[0]).round() as i64 })
        }
        Subgroup::U1xU1 => {
            require_standard(irrep, spec)?;
            let h = algebra::cartan(group, &irrep.generators);
            let sectors = joint_split(&[h[1].clone(), h[0].clone()], CMat::identity(n, n));
            collect_sectors(sectors, |c| SubIrrep::Torus {
                twice_i3: (2.0 * c[1]).round() as i64,
                three_y: (3.0 * c[0]).round() as i64,
            })
        }
        Subgroup::U2InSU3 => {
            require_standard(irrep, spec)?;
            let (frame, labels) = isospin_frame(&irrep.generators, &CMat::identity(n, n))?;
            let indices = labels
                .iter()
                .map(|l| AdaptedIndex { mu: 1, j: SubIrrep::U2 { twice_i: l.twice_i, three_y: l.three_y }, m: l.twice_i3 })
                .collect();
            (frame, indices)
        }
        Subgroup::U1CenterHW => {
            return Err(Error::UnsupportedSubgroup { subgroup: spec.subgroup.to_string(), group: group.to_string() })
        }
    };
    let generators = irrep.generators.iter().map(|g| change.adjoint() * g * &change).collect();
    let states = (0..n)
        .map(|col| {
            let v = change.column(col);
            (0..n)
                .find(|&k| (v[k].norm() - 1.0).abs() < 1e-9)
                .map(|k| irrep.states[k])
                .unwrap_or(StateLabel::Index(col))
        })
        .collect();
    Ok(AdaptedBasis {
        irrep: RealizedIrrep { label: irrep.label, generators, basis: BasisTag::Adapted, states },
        indices,
        change,
    })
}

fn collect_sectors(sectors: Vec<(Vec<f64>, CMat)>, label: impl Fn(&[f64]) -> SubIrrep) -> (CMat, Vec<AdaptedIndex>) {
    let mut cols = Vec::new();
    let mut indices = Vec::new();
    for (charges, space) in sectors {
        let j = label(&charges);
        for (k, col) in space.column_iter().enumerate() {
            cols.push(col.into_owned());
            indices.push(AdaptedIndex { mu: k + 1, j, m: 0 });
        }
    }
    (CMat::from_columns(&cols), indices)
}
