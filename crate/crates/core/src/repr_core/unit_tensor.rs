use crate::error::{Error, Result};
use crate::linalg::{real, CMat, C64};

use super::irrep::{realize_irrep, RealizedIrrep};
use super::label::IrrepLabel;
use super::tensor::{couple_into, CGDecomposition};

/// One unit tensor component `U^{J Lambda}_M`.
#[derive(Clone, Debug)]
pub struct UnitTensor {
    pub label: IrrepLabel,
    /// 1-based multiplicity index.
    pub lambda: usize,
    /// Basis index of `M` in the canonical basis of `J`.
    pub m: usize,
    pub matrix: CMat,
}

#[derive(Clone, Debug)]
pub struct UnitTensorSet {
    pub base: IrrepLabel,
    pub entries: Vec<UnitTensor>,
}

/// Coefficients `a^{J Lambda}_M`, in the order of [`UnitTensorSet::entries`].
#[derive(Clone, Debug)]
pub struct Expansion {
    pub coefficients: Vec<C64>,
}

impl UnitTensorSet {
    pub fn get(&self, label: &IrrepLabel, lambda: usize, m: usize) -> Option<&UnitTensor> {
        self.entries.iter().find(|e| e.label == *label && e.lambda == lambda && e.m == m)
    }

    /// Largest deviation of `Tr(U'^dagger U)` from `(N_J0/N_J) delta`.
    pub fn gram_residual(&self) -> f64 {
        let n0 = self.base.dimension() as f64;
        let mut worst: f64 = 0.0;
        for (i, a) in self.entries.iter().enumerate() {
            for (j, b) in self.entries.iter().enumerate() {
                let g = (a.matrix.adjoint() * &b.matrix).trace();
                let expected = if i == j { n0 / a.label.dimension() as f64 } else { 0.0 };
                worst = worst.max((g - real(expected)).norm());
            }
        }
        worst
    }

    /// Largest Frobenius residual of `D U_M D^dagger = sum_M' D^J_{M'M} U_M'`
    /// for the group element with algebra coordinates `theta`.
    pub fn covariance_residual(&self, j0: &RealizedIrrep, theta: &[f64]) -> Result<f64> {
        let d0 = j0.group_element(theta);
        let mut worst: f64 = 0.0;
        let mut labels: Vec<IrrepLabel> = self.entries.iter().map(|e| e.label).collect();
        labels.dedup();
        for label in labels {
            let dj = realize_irrep(label)?.group_element(theta);
            let comps: Vec<&UnitTensor> = self.entries.iter().filter(|e| e.label == label).collect();
            for e in &comps {
                let lhs = &d0 * &e.matrix * d0.adjoint();
                let mut rhs = CMat::zeros(lhs.nrows(), lhs.ncols());
                for f in comps.iter().filter(|f| f.lambda == e.lambda) {
                    rhs += &f.matrix * dj[(f.m, e.m)];
                }
                worst = worst.max((lhs - rhs).norm());
            }
        }
        Ok(worst)
    }
}

/// Unit tensors on `H^{J0}` for every `J` in the spectrum of `J0 (x) J0*`.
///
/// For each such `J` the couplings `J0 (x) J -> J0` supply an isometry `B`
/// per multiplicity copy, and `U^{J Lambda}_M |x> = B^dagger (x (x) e_M)`,
/// i.e. `<M0'|U_M|M0> = conj(C^{J0 J J0 Lambda}_{M0 M M0'})`.
pub fn unit_tensors(j0: &RealizedIrrep, decomp: &CGDecomposition) -> Result<UnitTensorSet> {
    if decomp.factors.0 != j0.label || decomp.factors.1 != j0.label.conjugate() {
        return Err(Error::InvalidLabel(format!(
            "expected the decomposition of {0} x {0}*, got {1} x {2}",
            j0.label, decomp.factors.0, decomp.factors.1
        )));
    }
    let n0 = j0.dim();
    let mut entries = Vec::new();
    for (label, mult) in decomp.spectrum() {
        let target = realize_irrep(label)?;
        let nj = target.dim();
        let blocks = couple_into(j0, &target, j0)?;
        if blocks.len() != mult {
            return Err(Error::Numerical(format!(
                "{label} occurs {mult} times in {0} x {0}* but {0} occurs {1} times in {0} x {label}",
                j0.label,
                blocks.len()
            )));
        }
        for block in blocks {
            for m in 0..nj {
                let u = CMat::from_fn(n0, n0, |out, inp| block.matrix[(inp * nj + m, out)].conj());
                entries.push(UnitTensor { label, lambda: block.lambda, m, matrix: u });
            }
        }
    }
    Ok(UnitTensorSet { base: j0.label, entries })
}

/// `a^{J Lambda}_M = (N_J / N_J0) Tr(U^dagger A)`.
pub fn expand_operator(a: &CMat, tensors: &UnitTensorSet) -> Result<Expansion> {
    let n0 = tensors.base.dimension();
    if a.nrows() != n0 || a.ncols() != n0 {
        return Err(Error::DimensionMismatch { expected: n0, found: a.nrows() });
    }
    let coefficients = tensors
        .entries
        .iter()
        .map(|e| (e.matrix.adjoint() * a).trace() * real(e.label.dimension() as f64 / n0 as f64))
        .collect();
    Ok(Expansion { coefficients })
}

/// `sum a^{J Lambda}_M U^{J Lambda}_M`.
pub fn resynthesize(expansion: &Expansion, tensors: &UnitTensorSet) -> CMat {
    let n0 = tensors.base.dimension();
    let mut out = CMat::zeros(n0, n0);
    for (a, e) in expansion.coefficients.iter().zip(&tensors.entries) {
        out += &e.matrix * *a;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repr_core::tensor_decompose;

    fn set(label: IrrepLabel) -> (RealizedIrrep, UnitTensorSet) {
        let j0 = realize_irrep(label).unwrap();
        let d = tensor_decompose(&j0, &j0.conjugate()).unwrap();
        let u = unit_tensors(&j0, &d).unwrap();
        (j0, u)
    }

    #[test]
    fn scalar_tensor_is_identity() {
        let (_, u) = set(IrrepLabel::su2(2));
        let u0 = u.get(&IrrepLabel::su2(0), 1, 0).unwrap();
        assert!((&u0.matrix - CMat::identity(3, 3)).norm() < 1e-12);
    }

    #[test]
    fn spin_one_spectrum_and_gram() {
        let (_, u) = set(IrrepLabel::su2(2));
        assert_eq!(u.entries.len(), 9);
        assert!(u.gram_residual() < 1e-10);
    }

    #[test]
    fn identity_expands_to_scalar_only() {
        let (_, u) = set(IrrepLabel::su2(3));
        let e = expand_operator(&CMat::identity(4, 4), &u).unwrap();
        for (c, t) in e.coefficients.iter().zip(&u.entries) {
            let expected = if t.label == IrrepLabel::su2(0) { 1.0 } else { 0.0 };
            assert!((c - real(expected)).norm() < 1e-12);
        }
    }

    #[test]
    fn unit_tensor_expands_to_indicator() {
        let (_, u) = set(IrrepLabel::su2(2));
        let k = 5;
        let e = expand_operator(&u.entries[k].matrix, &u).unwrap();
        for (i, c) in e.coefficients.iter().enumerate() {
            let expected = if i == k { 1.0 } else { 0.0 };
            assert!((c - real(expected)).norm() < 1e-12);
        }
    }

    #[test]
    fn covariance_for_octet() {
        let (j0, u) = set(IrrepLabel::su3(1, 1));
        assert_eq!(u.entries.len(), 64);
        let r = u.covariance_residual(&j0, &[0.1, 0.4, -0.3, 0.2, 0.0, 0.5, -0.6, 0.3]).unwrap();
        assert!(r < 1e-9, "{r}");
    }
}
