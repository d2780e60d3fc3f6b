use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, c, cluster_sorted, fix_phase, hermitian_eigen, real, CMat, CVec};

use super::algebra::{self, casimir, defining_generators};
use super::label::{fmt_half, fmt_third, Group, IrrepLabel};

pub const DEFAULT_DIMENSION_CAP: usize = 300;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BasisTag {
    /// `|j m>` with m descending for SU(2); isospin/hypercharge states for SU(3).
    Canonical,
    /// Basis adapted to a subgroup chain.
    Adapted,
    /// Generators `-conj(T_a)` of a canonical realization.
    Conjugate,
}

/// Isospin/hypercharge quantum numbers, stored as `2I`, `2 I3`, `3Y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IIYLabel {
    pub twice_i: i64,
    pub twice_i3: i64,
    pub three_y: i64,
}

impl IIYLabel {
    pub fn new(twice_i: i64, twice_i3: i64, three_y: i64) -> Self {
        IIYLabel { twice_i, twice_i3, three_y }
    }

    pub fn i(&self) -> f64 {
        self.twice_i as f64 / 2.0
    }

    pub fn i3(&self) -> f64 {
        self.twice_i3 as f64 / 2.0
    }

    pub fn y(&self) -> f64 {
        self.three_y as f64 / 3.0
    }
}

impl fmt::Display for IIYLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "I={},I3={},Y={}",
            fmt_half(self.twice_i),
            fmt_half(self.twice_i3),
            fmt_third(self.three_y)
        )
    }
}

/// Quantum numbers attached to a basis vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum StateLabel {
    M { twice_m: i64 },
    IIY(IIYLabel),
    Index(usize),
}

impl fmt::Display for StateLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StateLabel::M { twice_m } => write!(f, "m={}", fmt_half(*twice_m)),
            StateLabel::IIY(l) => write!(f, "{l}"),
            StateLabel::Index(k) => write!(f, "#{k}"),
        }
    }
}

/// An irrep together with explicit Hermitian generator matrices.
#[derive(Clone, Debug)]
pub struct RealizedIrrep {
    pub label: IrrepLabel,
    pub generators: Vec<CMat>,
    pub basis: BasisTag,
    pub states: Vec<StateLabel>,
}

impl RealizedIrrep {
    pub fn group(&self) -> Group {
        self.label.group()
    }

    pub fn dim(&self) -> usize {
        self.generators[0].nrows()
    }

    pub fn casimir_matrix(&self) -> CMat {
        casimir(&self.generators)
    }

    /// `sum_a x_a T_a`.
    pub fn algebra_element(&self, coords: &[f64]) -> CMat {
        algebra::combine(&self.generators, coords)
    }

    /// `exp(-i sum_a theta_a T_a)`.
    pub fn group_element(&self, theta: &[f64]) -> CMat {
        (self.algebra_element(theta) * c(0.0, -1.0)).exp()
    }

    /// Realization of the complex-conjugate irrep. For SU(2) the conjugate is
    /// mapped back to the canonical basis through `(-1)^(j-m)` on the
    /// anti-diagonal, so the result equals the canonical realization.
    pub fn conjugate(&self) -> RealizedIrrep {
        let conj: Vec<CMat> = self.generators.iter().map(|g| -g.map(|z| z.conj())).collect();
        match self.group() {
            Group::SU2 => {
                let n = self.dim();
                let mut w = CMat::zeros(n, n);
                for k in 0..n {
                    w[(n - 1 - k, k)] = real(if k % 2 == 0 { 1.0 } else { -1.0 });
                }
                let gens = conj.iter().map(|g| w.adjoint() * g * &w).collect();
                RealizedIrrep {
                    label: self.label,
                    generators: gens,
                    basis: self.basis,
                    states: self.states.clone(),
                }
            }
            Group::SU3 => RealizedIrrep {
                label: self.label.conjugate(),
                generators: conj,
                basis: BasisTag::Conjugate,
                states: (0..self.dim()).map(StateLabel::Index).collect(),
            },
        }
    }

    /// Frobenius residual of the commutation relations.
    pub fn commutation_residual(&self) -> f64 {
        algebra::commutation_residual(self.group(), &self.generators)
    }

    /// Frobenius distance of the Casimir from its closed-form scalar.
    pub fn casimir_residual(&self) -> f64 {
        let n = self.dim();
        (self.casimir_matrix() - CMat::identity(n, n) * real(self.label.casimir())).norm()
    }
}

pub fn realize_irrep(label: IrrepLabel) -> Result<RealizedIrrep> {
    realize_irrep_with_cap(label, DEFAULT_DIMENSION_CAP)
}

pub fn realize_irrep_with_cap(label: IrrepLabel, cap: usize) -> Result<RealizedIrrep> {
    let dimension = label.dimension();
    if dimension > cap {
        return Err(Error::DimensionCap { label, dimension, cap });
    }
    match label {
        IrrepLabel::SU2 { twice_j } => Ok(realize_su2(twice_j)),
        IrrepLabel::SU3 { p, q } => realize_su3(p as usize, q as usize),
    }
}

fn realize_su2(twice_j: u32) -> RealizedIrrep {
    let n = twice_j as usize + 1;
    let j = twice_j as f64 / 2.0;
    let mut t3 = CMat::zeros(n, n);
    let mut tp = CMat::zeros(n, n);
    for k in 0..n {
        let m = j - k as f64;
        t3[(k, k)] = real(m);
        if k > 0 {
            tp[(k - 1, k)] = real((j * (j + 1.0) - m * (m + 1.0)).sqrt());
        }
    }
    let tm = tp.adjoint();
    let t1 = (&tp + &tm) * real(0.5);
    let t2 = (&tp - &tm) * c(0.0, -0.5);
    RealizedIrrep {
        label: IrrepLabel::su2(twice_j),
        generators: vec![t1, t2, t3],
        basis: BasisTag::Canonical,
        states: (0..n).map(|k| StateLabel::M { twice_m: twice_j as i64 - 2 * k as i64 }).collect(),
    }
}

/// Occupation-number basis of the symmetric power `Sym^p(C^3)`.
fn occupations(p: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for n1 in (0..=p).rev() {
        for n2 in (0..=p - n1).rev() {
            out.push([n1, n2, p - n1 - n2]);
        }
    }
    out
}

/// Second-quantized image `sum_ij X_ij a_i^dagger a_j` of a one-body operator
/// on `Sym^p(C^3)`.
fn one_body(x: &CMat, basis: &[[usize; 3]]) -> CMat {
    let index: HashMap<[usize; 3], usize> = basis.iter().enumerate().map(|(k, n)| (*n, k)).collect();
    let mut out = CMat::zeros(basis.len(), basis.len());
    for (col, n) in basis.iter().enumerate() {
        for j in 0..3 {
            if n[j] == 0 {
                continue;
            }
            let mut lowered = *n;
            lowered[j] -= 1;
            let a = (n[j] as f64).sqrt();
            for i in 0..3 {
                if x[(i, j)] == real(0.0) {
                    continue;
                }
                let mut raised = lowered;
                raised[i] += 1;
                let amp = a * (raised[i] as f64).sqrt();
                out[(index[&raised], col)] += x[(i, j)] * amp;
            }
        }
    }
    out
}

/// Realizes (p,q) inside `Sym^p(3) (x) Sym^q(3bar)` by projecting onto the
/// Casimir eigenspace weight sector by weight sector, then fixes the
/// isospin/hypercharge basis.
fn realize_su3(p: usize, q: usize) -> Result<RealizedIrrep> {
    let label = IrrepLabel::su3(p as u32, q as u32);
    let fund = defining_generators(Group::SU3);
    let bp = occupations(p);
    let bq = occupations(q);
    let (np, nq) = (bp.len(), bq.len());
    let gens: Vec<CMat> = fund
        .iter()
        .map(|f| {
            let a = one_body(f, &bp);
            let b = one_body(&(-f.map(|z| z.conj())), &bq);
            linalg::kron(&a, &CMat::identity(nq, nq)) + linalg::kron(&CMat::identity(np, np), &b)
        })
        .collect();
    let weights = algebra::diagonal_weights(Group::SU3, &gens)?;
    let cas = casimir(&gens);
    let target = label.casimir();

    let mut sectors: BTreeMap<(i64, i64), Vec<usize>> = BTreeMap::new();
    for (k, w) in weights.iter().enumerate() {
        sectors.entry(*w).or_default().push(k);
    }
    let n = gens[0].nrows();
    let mut span_cols: Vec<CVec> = Vec::new();
    for idx in sectors.values() {
        let sub = CMat::from_fn(idx.len(), idx.len(), |r, s| cas[(idx[r], idx[s])]);
        let (vals, vecs) = hermitian_eigen(&sub);
        for (k, v) in vals.iter().enumerate() {
            if (v - target).abs() <= 1e-8 * target.max(1.0) {
                let mut full = CVec::zeros(n);
                for (r, &i) in idx.iter().enumerate() {
                    full[i] = vecs[(r, k)];
                }
                span_cols.push(full);
            }
        }
    }
    if span_cols.len() != label.dimension() {
        return Err(Error::Degeneracy {
            eigenvalue: target,
            expected: label.dimension(),
            found: span_cols.len(),
        });
    }
    let span = CMat::from_columns(&span_cols);
    let (frame, labels) = isospin_frame(&gens, &span)?;
    let generators = gens.iter().map(|g| frame.adjoint() * g * &frame).collect();
    Ok(RealizedIrrep {
        label,
        generators,
        basis: BasisTag::Canonical,
        states: labels.into_iter().map(StateLabel::IIY).collect(),
    })
}

/// Builds the isospin/hypercharge basis of an SU(3)-invariant subspace.
///
/// `gens` act on an ambient space and `span` has orthonormal columns spanning
/// an invariant subspace. The subspace is split by `Y`, then `I3`, and `I^2`
/// is diagonalized in each charge sector. Every multiplet top (`I3 = I`) is
/// phase fixed by [`fix_phase`] in ambient coordinates and the rest of the
/// multiplet is generated with the normalized isospin lowering operator.
/// States are ordered by Y descending, then I descending, then I3 descending.
pub fn isospin_frame(gens: &[CMat], span: &CMat) -> Result<(CMat, Vec<IIYLabel>)> {
    let h = algebra::cartan(Group::SU3, gens);
    let i2 = algebra::isospin_squared(gens);
    let i_minus = algebra::lowering(Group::SU3, gens).swap_remove(0);

    let split = |op: &CMat, basis: &CMat, scale: f64| -> Result<BTreeMap<i64, CMat>> {
        let (vals, vecs) = hermitian_eigen(&linalg::restrict(op, basis));
        let mut groups: BTreeMap<i64, Vec<CVec>> = BTreeMap::new();
        for (k, v) in vals.iter().enumerate() {
            let key = (v * scale).round();
            if (v * scale - key).abs() > 1e-6 {
                return Err(Error::Numerical(format!("charge {v} is off the lattice")));
            }
            groups.entry(key as i64).or_default().push(basis * vecs.column(k));
        }
        Ok(groups.into_iter().map(|(k, cols)| (k, CMat::from_columns(&cols))).collect())
    };

    let mut states: Vec<(IIYLabel, CVec)> = Vec::new();
    for (three_y, y_space) in split(&h[1], span, 3.0)? {
        for (twice_i3, w) in split(&h[0], &y_space, 2.0)? {
            if twice_i3 < 0 {
                continue;
            }
            let (vals, vecs) = hermitian_eigen(&linalg::restrict(&i2, &w));
            for range in cluster_sorted(&vals, 1e-6) {
                let value = vals[range.start];
                if range.len() != 1 {
                    return Err(Error::Degeneracy {
                        eigenvalue: value,
                        expected: 1,
                        found: range.len(),
                    });
                }
                // I(I+1) = value; the multiplet top has I = I3.
                let twice_i = ((4.0 * value + 1.0).sqrt() - 1.0).round() as i64;
                if twice_i != twice_i3 {
                    continue;
                }
                let mut v: CVec = &w * vecs.column(range.start);
                fix_phase(&mut v);
                let mut current = v;
                for step in 0..=twice_i {
                    let label = IIYLabel::new(twice_i, twice_i3 - 2 * step, three_y);
                    states.push((label, current.clone()));
                    if step < twice_i {
                        let next = &i_minus * &current;
                        let norm = next.norm();
                        if norm < 1e-9 {
                            return Err(Error::Numerical("isospin lowering vanished early".into()));
                        }
                        current = next / real(norm);
                    }
                }
            }
        }
    }
    if states.len() != span.ncols() {
        return Err(Error::Numerical(format!(
            "isospin decomposition found {} states for a {}-dimensional space",
            states.len(),
            span.ncols()
        )));
    }
    states.sort_by(|a, b| {
        (-a.0.three_y, -a.0.twice_i, -a.0.twice_i3).cmp(&(-b.0.three_y, -b.0.twice_i, -b.0.twice_i3))
    });
    let frame = CMat::from_columns(&states.iter().map(|s| s.1.clone()).collect::<Vec<_>>());
    Ok((frame, states.into_iter().map(|s| s.0).collect()))
}
