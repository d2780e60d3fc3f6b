use serde::Serialize;

/// Subgroups whose trivial-irrep induced representations are tabulated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum InducedSubgroup {
    U1xU1,
    U2,
}

/// Multiplicity of each SU(3) irrep `(p,q)` in the representation induced
/// from the trivial irrep of the subgroup.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct InducedContent {
    pub subgroup: InducedSubgroup,
}

impl InducedContent {
    pub fn multiplicity(&self, p: u32, q: u32) -> usize {
        match self.subgroup {
            // number of zero weights: min(p+1, q+1) on the root lattice
            InducedSubgroup::U1xU1 => {
                if (p + 2 * q).is_multiple_of(3) {
                    (p.min(q) + 1) as usize
                } else {
                    0
                }
            }
            InducedSubgroup::U2 => usize::from(p == q),
        }
    }
}

pub fn induced_content(subgroup: InducedSubgroup) -> InducedContent {
    InducedContent { subgroup }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_values() {
        let t = induced_content(InducedSubgroup::U1xU1);
        assert_eq!(t.multiplicity(1, 1), 2);
        assert_eq!(t.multiplicity(2, 2), 3);
        assert_eq!(t.multiplicity(3, 0), 1);
        assert_eq!(t.multiplicity(1, 0), 0);
        let u = induced_content(InducedSubgroup::U2);
        assert_eq!(u.multiplicity(3, 0), 0);
        assert_eq!(u.multiplicity(1, 1), 1);
    }
}
