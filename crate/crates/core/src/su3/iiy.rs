use crate::error::{Error, Result};
use crate::linalg::CMat;
use crate::repr_core::{isospin_frame, BasisTag, Group, IIYLabel, RealizedIrrep, StateLabel};

#[derive(Clone, Debug)]
pub struct IIYBasis {
    pub irrep: RealizedIrrep,
    pub labels: Vec<IIYLabel>,
    /// Columns are the new basis vectors in the input basis.
    pub change: CMat,
}

/// Isospin/hypercharge basis of an SU(3) irrep given in any basis.
///
/// `Y` and `I3` are diagonalized jointly, then `I^2` in each charge sector;
/// multiplets are completed with the isospin lowering operator. States come
/// out ordered by Y descending, I descending, I3 descending. For a canonical
/// realization the change of basis is the identity.
pub fn iiy_basis(irrep: &RealizedIrrep) -> Result<IIYBasis> {
    if irrep.group() != Group::SU3 {
        return Err(Error::UnsupportedSubgroup { subgroup: "isospin/hypercharge".into(), group: irrep.group().to_string() });
    }
    let n = irrep.dim();
    let (change, labels) = isospin_frame(&irrep.generators, &CMat::identity(n, n))?;
    let generators = irrep.generators.iter().map(|g| change.adjoint() * g * &change).collect();
    Ok(IIYBasis {
        irrep: RealizedIrrep {
            label: irrep.label,
            generators,
            basis: BasisTag::Adapted,
            states: labels.iter().map(|l| StateLabel::IIY(*l)).collect(),
        },
        labels,
        change,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repr_core::{realize_irrep, IrrepLabel};
    use std::collections::BTreeMap;

    fn multiplets(labels: &[IIYLabel]) -> BTreeMap<(i64, i64), usize> {
        let mut m = BTreeMap::new();
        for l in labels {
            *m.entry((l.twice_i, l.three_y)).or_insert(0) += 1;
        }
        m
    }

    #[test]
    fn octet_content() {
        let b = iiy_basis(&realize_irrep(IrrepLabel::su3(1, 1)).unwrap()).unwrap();
        let m = multiplets(&b.labels);
        let expected: BTreeMap<(i64, i64), usize> =
            [((1, 3), 2), ((1, -3), 2), ((2, 0), 3), ((0, 0), 1)].into_iter().collect();
        assert_eq!(m, expected);
        assert!((&b.change - CMat::identity(8, 8)).norm() < 1e-10);
    }

    #[test]
    fn decuplet_has_quartet() {
        let b = iiy_basis(&realize_irrep(IrrepLabel::su3(3, 0)).unwrap()).unwrap();
        assert_eq!(multiplets(&b.labels).get(&(3, 3)), Some(&4));
    }

    #[test]
    fn singlet() {
        let b = iiy_basis(&realize_irrep(IrrepLabel::su3(0, 0)).unwrap()).unwrap();
        assert_eq!(b.labels, vec![IIYLabel::new(0, 0, 0)]);
    }

    #[test]
    fn conjugate_realization_is_canonicalized() {
        let oct = realize_irrep(IrrepLabel::su3(2, 1)).unwrap().conjugate();
        let b = iiy_basis(&oct).unwrap();
        let canon = realize_irrep(IrrepLabel::su3(1, 2)).unwrap();
        let canon_labels: Vec<StateLabel> = canon.states.clone();
        assert_eq!(b.irrep.states, canon_labels);
    }
}
