//! Quadrature on the sphere `SU(2)/U(1)` and a direct numerical evaluation of
//! the Fourier coefficients of the coherent-state projector.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::num::NonZeroUsize;

use gauss_quad::legendre::GaussLegendre;

use crate::error::{Error, Result};
use crate::linalg::{c, real, CMat, CVec};
use crate::repr_core::{realize_irrep, IrrepLabel, RealizedIrrep};

pub const DEFAULT_ORDER: usize = 32;

#[derive(Clone, Copy, Debug)]
pub struct SphereNode {
    pub theta: f64,
    pub phi: f64,
    pub weight: f64,
}

/// Gauss–Legendre nodes in `cos(theta)` times `2L` equally spaced azimuths,
/// with weights normalized to total measure one.
#[derive(Clone, Debug)]
pub struct SphereGrid {
    pub order: usize,
    pub thetas: Vec<(f64, f64)>,
    pub phis: Vec<f64>,
}

impl SphereGrid {
    pub fn new(order: usize) -> Result<Self> {
        let nz = NonZeroUsize::new(order).ok_or_else(|| Error::InvalidGrid("order must be positive".into()))?;
        let gl = GaussLegendre::new(nz);
        let thetas = gl.as_node_weight_pairs().iter().map(|&(x, w)| (x.acos(), w / 2.0)).collect();
        let phis = (0..2 * order).map(|k| 2.0 * PI * k as f64 / (2 * order) as f64).collect();
        Ok(SphereGrid { order, thetas, phis })
    }

    pub fn nodes(&self) -> impl Iterator<Item = SphereNode> + '_ {
        let wphi = 1.0 / self.phis.len() as f64;
        self.thetas.iter().flat_map(move |&(theta, wt)| {
            self.phis.iter().map(move |&phi| SphereNode { theta, phi, weight: wt * wphi })
        })
    }

    pub fn total_weight(&self) -> f64 {
        self.nodes().map(|n| n.weight).sum()
    }
}

/// Representation matrix of the section `l(theta, phi) = exp(-i phi T3) exp(-i theta T2)`.
pub fn section(irrep: &RealizedIrrep, theta: f64, phi: f64) -> CMat {
    let rot = (&irrep.generators[1] * c(0.0, -theta)).exp();
    let n = irrep.dim();
    CMat::from_fn(n, n, |r, s| rot[(r, s)] * (c(0.0, -phi) * irrep.generators[2][(r, r)]).exp())
}

/// Harmonics `Y^{(J)}_m(q) = sqrt(2J+1) D^J_{m0}(l(q))` for integer `J`,
/// indexed by the canonical basis of `J`.
pub fn harmonics(irrep: &RealizedIrrep, theta: f64, phi: f64) -> CVec {
    let n = irrep.dim();
    let d = section(irrep, theta, phi);
    let mid = (n - 1) / 2;
    CVec::from_fn(n, |m, _| d[(m, mid)] * real((n as f64).sqrt()))
}

/// `rho^J_m = int dmu(q) Y^J_m(q)^* D(l(q)) rho0 D(l(q))^dagger` for the
/// fiducial `|J0, 0>` and integer `J = 0..=j_max`. Keys are doubled `J`.
pub fn fourier_oracle_rho(twice_j0: u32, grid: &SphereGrid, j_max: u32) -> Result<BTreeMap<u32, Vec<CMat>>> {
    if !twice_j0.is_multiple_of(2) {
        return Err(Error::InvalidLabel("the oracle needs an integer J0 so that |J0,0> exists".into()));
    }
    let required = twice_j0 as usize + 1;
    if grid.order < required {
        return Err(Error::GridTooCoarse { order: grid.order, required });
    }
    let j0 = realize_irrep(IrrepLabel::su2(twice_j0))?;
    let n0 = j0.dim();
    let mut psi0 = CVec::zeros(n0);
    psi0[(n0 - 1) / 2] = real(1.0);
    let irreps: Vec<RealizedIrrep> =
        (0..=j_max).map(|j| realize_irrep(IrrepLabel::su2(2 * j))).collect::<Result<_>>()?;
    let mut acc: Vec<Vec<CMat>> = irreps.iter().map(|r| vec![CMat::zeros(n0, n0); r.dim()]).collect();
    for node in grid.nodes() {
        let psi = section(&j0, node.theta, node.phi) * &psi0;
        let rho = &psi * psi.adjoint();
        for (irrep, slot) in irreps.iter().zip(acc.iter_mut()) {
            let y = harmonics(irrep, node.theta, node.phi);
            for (m, op) in slot.iter_mut().enumerate() {
                *op += &rho * (y[m].conj() * node.weight);
            }
        }
    }
    Ok(acc.into_iter().enumerate().map(|(j, ops)| (2 * j as u32, ops)).collect())
}

/// `sum_{J,m} Y^J_m(q) rho^J_m` at one point.
pub fn resynthesize_rho(rho: &BTreeMap<u32, Vec<CMat>>, theta: f64, phi: f64) -> Result<CMat> {
    let mut out: Option<CMat> = None;
    for (&twice_j, ops) in rho {
        let y = harmonics(&realize_irrep(IrrepLabel::su2(twice_j))?, theta, phi);
        for (m, op) in ops.iter().enumerate() {
            let term = op * y[m];
            out = Some(match out {
                Some(acc) => acc + term,
                None => term,
            });
        }
    }
    out.ok_or_else(|| Error::InvalidGrid("no coefficients".into()))
}
