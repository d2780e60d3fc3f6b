use crate::error::{Error, Result};
use crate::linalg::C64;

/// Square, symmetric phase-space grid `[-R, R]^2` with an odd number of
/// points per axis, so the origin is a node. Values are stored with `q0`
/// (or `alpha_1`) as the outer index.
#[derive(Clone, Debug, PartialEq)]
pub struct PhaseGrid {
    pub extent: f64,
    pub resolution: usize,
    pub values: Vec<C64>,
}

impl PhaseGrid {
    pub fn zeros(extent: f64, resolution: usize) -> Result<Self> {
        if !(extent > 0.0 && extent.is_finite()) {
            return Err(Error::InvalidGrid(format!("extent must be positive, got {extent}")));
        }
        if resolution < 3 || resolution.is_multiple_of(2) {
            return Err(Error::InvalidGrid(format!("resolution must be odd and at least 3, got {resolution}")));
        }
        Ok(PhaseGrid { extent, resolution, values: vec![C64::new(0.0, 0.0); resolution * resolution] })
    }

    pub fn spacing(&self) -> f64 {
        2.0 * self.extent / (self.resolution - 1) as f64
    }

    pub fn coord(&self, i: usize) -> f64 {
        -self.extent + i as f64 * self.spacing()
    }

    pub fn coords(&self) -> Vec<f64> {
        (0..self.resolution).map(|i| self.coord(i)).collect()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn index(&self, i: usize, j: usize) -> usize {
        i * self.resolution + j
    }

    pub fn point(&self, i: usize, j: usize) -> (f64, f64) {
        (self.coord(i), self.coord(j))
    }

    pub fn at(&self, i: usize, j: usize) -> C64 {
        self.values[self.index(i, j)]
    }

    /// Points `(x, y, value)` in storage order.
    pub fn samples(&self) -> impl Iterator<Item = (f64, f64, C64)> + '_ {
        let n = self.resolution;
        (0..n * n).map(move |k| {
            let (x, y) = self.point(k / n, k % n);
            (x, y, self.values[k])
        })
    }

    /// Fills every node with `f(x, y)`.
    pub fn fill(&mut self, mut f: impl FnMut(f64, f64) -> C64) {
        let n = self.resolution;
        for i in 0..n {
            for j in 0..n {
                let (x, y) = self.point(i, j);
                self.values[i * n + j] = f(x, y);
            }
        }
    }

    /// Largest radius reached by the grid, at its corners.
    pub fn corner_radius(&self) -> f64 {
        self.extent * std::f64::consts::SQRT_2
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn origin_is_a_node() {
        let g = PhaseGrid::zeros(8.0, 129).unwrap();
        assert_eq!(g.coord(64), 0.0);
        assert!((g.spacing() - 0.125).abs() < 1e-15);
    }

    #[test]
    fn rejects_even_resolution() {
        assert!(PhaseGrid::zeros(1.0, 4).is_err());
        assert!(PhaseGrid::zeros(0.0, 5).is_err());
    }
}
