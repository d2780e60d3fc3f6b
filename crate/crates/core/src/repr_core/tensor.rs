use std::cmp::Reverse;
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::{self, canonical_basis, cluster_sorted, hermitian_eigen, null_space, real, CMat, CVec};

use super::algebra::{self, WeightKey};
use super::irrep::{realize_irrep, RealizedIrrep};
use super::label::{Group, IrrepLabel};

/// One multiplicity copy of an irrep inside a tensor product: an isometry of
/// shape `(N1 N2) x N3` whose entry `[(i1 N2 + i2), i3]` is the
/// Clebsch–Gordan coefficient `C^{J1 J2 J3 Lambda}_{M1 M2 M3}`.
#[derive(Clone, Debug)]
pub struct CgBlock {
    pub label: IrrepLabel,
    /// 1-based multiplicity index.
    pub lambda: usize,
    pub matrix: CMat,
}

impl CgBlock {
    pub fn coefficient(&self, n2: usize, i1: usize, i2: usize, i3: usize) -> crate::linalg::C64 {
        self.matrix[(i1 * n2 + i2, i3)]
    }
}

#[derive(Clone, Debug)]
pub struct CGDecomposition {
    pub factors: (IrrepLabel, IrrepLabel),
    pub blocks: Vec<CgBlock>,
    /// Canonical realizations of every irrep in the product.
    pub targets: BTreeMap<IrrepLabel, RealizedIrrep>,
}

impl CGDecomposition {
    /// Irreps with their multiplicities, in block order.
    pub fn spectrum(&self) -> Vec<(IrrepLabel, usize)> {
        let mut out: Vec<(IrrepLabel, usize)> = Vec::new();
        for b in &self.blocks {
            match out.last_mut() {
                Some((l, m)) if *l == b.label => *m += 1,
                _ => out.push((b.label, 1)),
            }
        }
        out
    }

    pub fn multiplicity(&self, label: &IrrepLabel) -> usize {
        self.blocks.iter().filter(|b| b.label == *label).count()
    }

    pub fn blocks_of(&self, label: &IrrepLabel) -> Vec<&CgBlock> {
        self.blocks.iter().filter(|b| b.label == *label).collect()
    }

    /// All blocks side by side; unitary when the decomposition is complete.
    pub fn stacked(&self) -> CMat {
        let cols: Vec<CVec> = self
            .blocks
            .iter()
            .flat_map(|b| b.matrix.column_iter().map(|c| c.into_owned()).collect::<Vec<_>>())
            .collect();
        CMat::from_columns(&cols)
    }

    /// `|| S^dagger S - 1 ||_F` and `|| S S^dagger - 1 ||_F` for the stacked matrix.
    pub fn unitarity_defect(&self) -> f64 {
        let s = self.stacked();
        if s.nrows() != s.ncols() {
            return f64::INFINITY;
        }
        let n = s.nrows();
        let a = (s.adjoint() * &s - CMat::identity(n, n)).norm();
        let b = (&s * s.adjoint() - CMat::identity(n, n)).norm();
        a.max(b)
    }

    /// Largest `|| G_a B - B T_a ||_F` over generators and blocks.
    pub fn intertwining_residual(&self, a: &RealizedIrrep, b: &RealizedIrrep) -> f64 {
        let gens = product_generators(a, b);
        let mut worst: f64 = 0.0;
        for block in &self.blocks {
            let target = &self.targets[&block.label];
            for (g, t) in gens.iter().zip(&target.generators) {
                worst = worst.max((g * &block.matrix - &block.matrix * t).norm());
            }
        }
        worst
    }
}

/// Generators `A_a (x) 1 + 1 (x) B_a` on the product space.
pub fn product_generators(a: &RealizedIrrep, b: &RealizedIrrep) -> Vec<CMat> {
    let (na, nb) = (a.dim(), b.dim());
    let ia = CMat::identity(na, na);
    let ib = CMat::identity(nb, nb);
    a.generators
        .iter()
        .zip(&b.generators)
        .map(|(x, y)| linalg::kron(x, &ib) + linalg::kron(&ia, y))
        .collect()
}

fn check_same_group(a: &RealizedIrrep, b: &RealizedIrrep) -> Result<()> {
    if a.group() != b.group() {
        return Err(Error::GroupMismatch(a.label, b.label));
    }
    Ok(())
}

fn weight_sectors(group: Group, gens: &[CMat]) -> Result<BTreeMap<WeightKey, Vec<usize>>> {
    let weights = algebra::diagonal_weights(group, gens)?;
    let mut sectors: BTreeMap<WeightKey, Vec<usize>> = BTreeMap::new();
    for (k, w) in weights.into_iter().enumerate() {
        sectors.entry(w).or_default().push(k);
    }
    Ok(sectors)
}

/// Orthonormal highest-weight vectors of weight `idx` (the indices of one
/// weight sector): the common kernel of all raising operators there. The
/// basis is made deterministic with [`canonical_basis`].
fn highest_weight_vectors(raise: &[CMat], idx: &[usize], n: usize) -> CMat {
    let k = idx.len();
    let mut stacked = CMat::zeros(raise.len() * n, k);
    for (r, op) in raise.iter().enumerate() {
        for (col, &i) in idx.iter().enumerate() {
            for row in 0..n {
                stacked[(r * n + row, col)] = op[(row, i)];
            }
        }
    }
    let kernel = null_space(&stacked, 1e-7);
    let mut full = CMat::zeros(n, kernel.ncols());
    for (r, &i) in idx.iter().enumerate() {
        for col in 0..kernel.ncols() {
            full[(i, col)] = kernel[(r, col)];
        }
    }
    canonical_basis(&full)
}

/// Unit highest-weight vector of a realized irrep, phase fixed.
fn irrep_highest_weight(irrep: &RealizedIrrep) -> Result<CVec> {
    let group = irrep.group();
    let sectors = weight_sectors(group, &irrep.generators)?;
    let key = algebra::highest_weight(&irrep.label);
    let idx = sectors
        .get(&key)
        .ok_or_else(|| Error::Numerical(format!("{} has no highest-weight sector", irrep.label)))?;
    let raise = algebra::raising(group, &irrep.generators);
    let hw = highest_weight_vectors(&raise, idx, irrep.dim());
    if hw.ncols() != 1 {
        return Err(Error::Degeneracy {
            eigenvalue: irrep.label.casimir(),
            expected: 1,
            found: hw.ncols(),
        });
    }
    Ok(hw.column(0).into_owned())
}

/// Builds the intertwiner that maps `target`'s canonical basis onto the copy of
/// `target` generated from the product highest-weight vector `hw_p`.
///
/// Lowering words are applied breadth first to both highest-weight vectors;
/// the target-side images are Gram–Schmidt orthonormalized and the identical
/// linear combinations are applied on the product side, so that
/// `B = W_P W_T^dagger` with `W_T` unitary.
fn build_block(group: Group, lower_p: &[CMat], hw_p: &CVec, target: &RealizedIrrep) -> Result<CMat> {
    let lower_t = algebra::lowering(group, &target.generators);
    let hw_t = irrep_highest_weight(target)?;
    let n_t = target.dim();
    let mut kept_t: Vec<CVec> = vec![hw_t];
    let mut kept_p: Vec<CVec> = vec![hw_p.clone()];
    let mut frontier = vec![0usize];
    while !frontier.is_empty() && kept_t.len() < n_t {
        let mut next = Vec::new();
        for &k in &frontier {
            for (lt, lp) in lower_t.iter().zip(lower_p) {
                let mut vt = lt * &kept_t[k];
                let mut vp = lp * &kept_p[k];
                let scale = vt.norm();
                if scale < 1e-10 {
                    continue;
                }
                for _ in 0..2 {
                    for (ut, up) in kept_t.iter().zip(&kept_p) {
                        let proj = ut.dotc(&vt);
                        vt -= ut * proj;
                        vp -= up * proj;
                    }
                }
                let norm = vt.norm();
                if norm > 1e-8 * scale.max(1.0) {
                    kept_t.push(vt / real(norm));
                    kept_p.push(vp / real(norm));
                    next.push(kept_t.len() - 1);
                }
            }
        }
        frontier = next;
    }
    if kept_t.len() != n_t {
        return Err(Error::Numerical(format!(
            "lowering from the highest weight of {} reached {} of {} states",
            target.label,
            kept_t.len(),
            n_t
        )));
    }
    let wt = CMat::from_columns(&kept_t);
    let wp = CMat::from_columns(&kept_p);
    let block = wp * wt.adjoint();
    let defect = linalg::isometry_defect(&block);
    if defect > 1e-8 {
        return Err(Error::Numerical(format!(
            "block for {} is not an isometry (defect {defect:.3e})",
            target.label
        )));
    }
    Ok(block)
}

/// Decomposes `a (x) b` into irreducible blocks.
///
/// Highest-weight vectors are found weight sector by weight sector as the
/// common kernel of the raising operators; each copy is then completed by
/// lowering. The multiplicities are cross-checked against the clustered
/// spectrum of the product Casimir.
pub fn tensor_decompose(a: &RealizedIrrep, b: &RealizedIrrep) -> Result<CGDecomposition> {
    check_same_group(a, b)?;
    let group = a.group();
    let gens = product_generators(a, b);
    let n = gens[0].nrows();
    let raise = algebra::raising(group, &gens);
    let lower = algebra::lowering(group, &gens);
    let sectors = weight_sectors(group, &gens)?;

    let mut targets: BTreeMap<IrrepLabel, RealizedIrrep> = BTreeMap::new();
    let mut blocks = Vec::new();
    for (key, idx) in &sectors {
        let hw = highest_weight_vectors(&raise, idx, n);
        if hw.ncols() == 0 {
            continue;
        }
        let label = algebra::label_from_highest_weight(group, *key)?;
        if let std::collections::btree_map::Entry::Vacant(e) = targets.entry(label) {
            e.insert(realize_irrep(label)?);
        }
        let target = &targets[&label];
        for (k, col) in hw.column_iter().enumerate() {
            let matrix = build_block(group, &lower, &col.into_owned(), target)?;
            blocks.push(CgBlock { label, lambda: k + 1, matrix });
        }
    }
    blocks.sort_by_key(|b| (b.label.dimension(), Reverse(b.label), b.lambda));

    let total: usize = blocks.iter().map(|b| b.label.dimension()).sum();
    if total != n {
        return Err(Error::Numerical(format!("blocks cover {total} of {n} product states")));
    }
    casimir_cross_check(&gens, &blocks)?;
    Ok(CGDecomposition { factors: (a.label, b.label), blocks, targets })
}

fn casimir_cross_check(gens: &[CMat], blocks: &[CgBlock]) -> Result<()> {
    let (vals, _) = hermitian_eigen(&algebra::casimir(gens));
    for range in cluster_sorted(&vals, 1e-6) {
        let value = vals[range.start];
        let scale = value.abs().max(1.0);
        let expected: usize = blocks
            .iter()
            .filter(|b| (b.label.casimir() - value).abs() <= 1e-6 * scale)
            .map(|b| b.label.dimension())
            .sum();
        if expected != range.len() {
            return Err(Error::Degeneracy { eigenvalue: value, expected, found: range.len() });
        }
    }
    Ok(())
}

/// Only the blocks of `a (x) b` that carry `target`, ordered by multiplicity
/// index with the same conventions as [`tensor_decompose`].
pub fn couple_into(a: &RealizedIrrep, b: &RealizedIrrep, target: &RealizedIrrep) -> Result<Vec<CgBlock>> {
    check_same_group(a, b)?;
    check_same_group(a, target)?;
    let group = a.group();
    let gens = product_generators(a, b);
    let n = gens[0].nrows();
    let sectors = weight_sectors(group, &gens)?;
    let key = algebra::highest_weight(&target.label);
    let Some(idx) = sectors.get(&key) else {
        return Ok(Vec::new());
    };
    let raise = algebra::raising(group, &gens);
    let lower = algebra::lowering(group, &gens);
    let hw = highest_weight_vectors(&raise, idx, n);
    hw.column_iter()
        .enumerate()
        .map(|(k, col)| {
            let matrix = build_block(group, &lower, &col.into_owned(), target)?;
            Ok(CgBlock { label: target.label, lambda: k + 1, matrix })
        })
        .collect()
}
