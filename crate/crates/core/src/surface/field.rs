// SPDX-License-Identifier: Apache-2.0

use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::lie::AlgebraBasis;
use crate::scalar::{coeff_norm, Scalar};

use super::grid::Grid;

/// Algebra-valued samples on a uniform grid.
///
/// Storage covers the whole grid, row-major with `y` outer and `x` inner, but
/// only points at least `margin` samples away from every edge hold values.
/// Each central difference widens the margin by one.
#[derive(Debug, Clone)]
pub struct Field<T> {
    basis: Arc<AlgebraBasis>,
    grid: Grid,
    margin: usize,
    data: Vec<T>,
}

/// Real coefficient field (`delta alpha`, residuals, ...).
pub type GValuedField = Field<f64>;

impl<T: Scalar> Field<T> {
    pub fn zeros(basis: Arc<AlgebraBasis>, grid: Grid, margin: usize) -> Self {
        let len = grid.len() * basis.dim();
        Self {
            basis,
            grid,
            margin,
            data: vec![T::zero(); len],
        }
    }

    /// Field with value `f(i, j)` at every point of the interior of width `margin`.
    pub fn from_fn(
        basis: Arc<AlgebraBasis>,
        grid: Grid,
        margin: usize,
        mut f: impl FnMut(usize, usize) -> Vec<T>,
    ) -> Result<Self> {
        let mut out = Self::zeros(basis, grid, margin);
        out.check_nonempty(margin)?;
        let points: Vec<_> = out.interior_points().collect();
        for (i, j) in points {
            let v = f(i, j);
            if v.len() != out.dim() {
                return Err(Error::InvalidInput(format!(
                    "{} coefficients supplied for dimension {}",
                    v.len(),
                    out.dim()
                )));
            }
            out.at_mut(i, j).copy_from_slice(&v);
        }
        Ok(out)
    }

    pub fn basis(&self) -> &Arc<AlgebraBasis> {
        &self.basis
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn margin(&self) -> usize {
        self.margin
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn at(&self, i: usize, j: usize) -> &[T] {
        let n = self.dim();
        let k = self.grid.index(i, j) * n;
        &self.data[k..k + n]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut [T] {
        let n = self.dim();
        let k = self.grid.index(i, j) * n;
        &mut self.data[k..k + n]
    }

    /// Points carrying values, `y` outer, `x` inner.
    pub fn interior_points(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let m = self.margin;
        let (nx, ny) = (self.grid.nx, self.grid.ny);
        (m..ny.saturating_sub(m)).flat_map(move |j| (m..nx.saturating_sub(m)).map(move |i| (i, j)))
    }

    fn check_nonempty(&self, margin: usize) -> Result<()> {
        if self.grid.nx < 2 * margin + 1 || self.grid.ny < 2 * margin + 1 {
            return Err(Error::InsufficientMargin {
                needed: margin,
                nx: self.grid.nx,
                ny: self.grid.ny,
            });
        }
        Ok(())
    }

    pub(crate) fn check_compatible<U>(&self, other: &Field<U>) -> Result<()> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch(format!("{:?} vs {:?}", self.grid, other.grid)));
        }
        if *self.basis != *other.basis {
            return Err(Error::BasisMismatch {
                left: self.basis.name().to_string(),
                right: other.basis.name().to_string(),
            });
        }
        Ok(())
    }

    /// Central difference in `x`.
    pub fn d_x(&self) -> Result<Self> {
        self.central_difference(1, 0, self.grid.hx)
    }

    /// Central difference in `y`.
    pub fn d_y(&self) -> Result<Self> {
        self.central_difference(0, 1, self.grid.hy)
    }

    fn central_difference(&self, di: usize, dj: usize, h: f64) -> Result<Self> {
        let m = self.margin + 1;
        let mut out = Self::zeros(self.basis.clone(), self.grid, m);
        out.check_nonempty(m)?;
        let inv = 1.0 / (2.0 * h);
        let n = self.dim();
        let points: Vec<_> = out.interior_points().collect();
        for (i, j) in points {
            let (p, q) = (self.at(i + di, j + dj), self.at(i - di, j - dj));
            let dst = out.at_mut(i, j);
            for s in 0..n {
                dst[s] = (p[s] - q[s]) * inv;
            }
        }
        Ok(out)
    }

    /// Pointwise `f(a, b)` on the common interior.
    pub fn zip_with(&self, other: &Self, mut f: impl FnMut(&[T], &[T], &mut [T])) -> Result<Self> {
        self.check_compatible(other)?;
        let m = self.margin.max(other.margin);
        let mut out = Self::zeros(self.basis.clone(), self.grid, m);
        out.check_nonempty(m)?;
        let points: Vec<_> = out.interior_points().collect();
        for (i, j) in points {
            f(self.at(i, j), other.at(i, j), out.at_mut(i, j));
        }
        Ok(out)
    }

    pub fn map(&self, mut f: impl FnMut(usize, usize, &[T], &mut [T])) -> Self {
        let mut out = Self::zeros(self.basis.clone(), self.grid, self.margin);
        let points: Vec<_> = self.interior_points().collect();
        for (i, j) in points {
            f(i, j, self.at(i, j), out.at_mut(i, j));
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b, o| {
            for s in 0..o.len() {
                o[s] = a[s] + b[s];
            }
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b, o| {
            for s in 0..o.len() {
                o[s] = a[s] - b[s];
            }
        })
    }

    pub fn scale(&self, k: T) -> Self {
        self.map(|_, _, a, o| {
            for s in 0..o.len() {
                o[s] = a[s] * k;
            }
        })
    }

    /// Pointwise bracket `[self, other]`.
    pub fn bracket(&self, other: &Self) -> Result<Self> {
        let basis = self.basis.clone();
        self.zip_with(other, |a, b, o| basis.bracket_into(a, b, o))
    }

    /// Multiplies each point by the real weight `w[grid index]`.
    pub fn weighted(&self, w: &[f64]) -> Result<Self> {
        if w.len() != self.grid.len() {
            return Err(Error::GridMismatch(format!(
                "weight field has {} samples, grid has {}",
                w.len(),
                self.grid.len()
            )));
        }
        let grid = self.grid;
        Ok(self.map(|i, j, a, o| {
            let k = w[grid.index(i, j)];
            for s in 0..o.len() {
                o[s] = a[s] * k;
            }
        }))
    }

    /// Same values viewed on a wider margin.
    pub fn with_margin(mut self, margin: usize) -> Self {
        if margin > self.margin {
            let n = self.dim();
            let (nx, ny) = (self.grid.nx, self.grid.ny);
            for j in 0..ny {
                for i in 0..nx {
                    if i < margin || j < margin || i + margin >= nx || j + margin >= ny {
                        let k = self.grid.index(i, j) * n;
                        self.data[k..k + n].iter_mut().for_each(|v| *v = T::zero());
                    }
                }
            }
            self.margin = margin;
        }
        self
    }

    pub fn norm_at(&self, i: usize, j: usize) -> f64 {
        coeff_norm(self.at(i, j))
    }

    /// Largest pointwise coefficient norm over the interior.
    pub fn sup_norm(&self) -> f64 {
        self.interior_points()
            .map(|(i, j)| self.norm_at(i, j))
            .fold(0.0, f64::max)
    }

    /// Sup norm restricted to points at least `margin` from every edge.
    pub fn sup_norm_within(&self, margin: usize) -> f64 {
        let m = margin.max(self.margin);
        let (nx, ny) = (self.grid.nx, self.grid.ny);
        self.interior_points()
            .filter(|&(i, j)| i >= m && j >= m && i + m < nx && j + m < ny)
            .map(|(i, j)| self.norm_at(i, j))
            .fold(0.0, f64::max)
    }

    /// Sup norm of `self - other` on the common interior.
    pub fn max_difference(&self, other: &Self) -> Result<f64> {
        Ok(self.sub(other)?.sup_norm())
    }

    pub fn is_finite(&self) -> bool {
        self.interior_points()
            .all(|(i, j)| self.at(i, j).iter().all(|v| v.is_finite_value()))
    }
}

impl Field<f64> {
    /// Same field with complex coefficients.
    pub fn to_complex(&self) -> Field<Complex64> {
        Field {
            basis: self.basis.clone(),
            grid: self.grid,
            margin: self.margin,
            data: self.data.iter().map(|&v| Complex64::new(v, 0.0)).collect(),
        }
    }
}

impl Field<Complex64> {
    pub fn re(&self) -> Field<f64> {
        self.component(|c| c.re)
    }

    pub fn im(&self) -> Field<f64> {
        self.component(|c| c.im)
    }

    fn component(&self, f: impl Fn(&Complex64) -> f64) -> Field<f64> {
        Field {
            basis: self.basis.clone(),
            grid: self.grid,
            margin: self.margin,
            data: self.data.iter().map(f).collect(),
        }
    }
}

/// An algebra-valued 1-form `P dx + Q dy` sampled on a grid.
#[derive(Debug, Clone)]
pub struct OneForm<T> {
    pub dx: Field<T>,
    pub dy: Field<T>,
}

/// Real 1-form, e.g. the pulled-back Maurer-Cartan form `A_x dx + A_y dy`.
pub type GValuedOneForm = OneForm<f64>;

impl<T: Scalar> OneForm<T> {
    pub fn new(dx: Field<T>, dy: Field<T>) -> Result<Self> {
        dx.check_compatible(&dy)?;
        let m = dx.margin.max(dy.margin);
        Ok(Self {
            dx: dx.with_margin(m),
            dy: dy.with_margin(m),
        })
    }

    pub fn basis(&self) -> &Arc<AlgebraBasis> {
        self.dx.basis()
    }

    pub fn grid(&self) -> &Grid {
        self.dx.grid()
    }

    pub fn margin(&self) -> usize {
        self.dx.margin()
    }

    pub fn sup_norm(&self) -> f64 {
        self.dx.sup_norm().max(self.dy.sup_norm())
    }

    pub fn max_difference(&self, other: &Self) -> Result<f64> {
        Ok(self.dx.max_difference(&other.dx)?.max(self.dy.max_difference(&other.dy)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::su2;

    fn grid() -> Grid {
        Grid::new(9, 7, 0.1, 0.2, 0.0, 0.0).unwrap()
    }

    #[test]
    fn differences_widen_margin_and_are_exact_on_linear_data() {
        let b = Arc::new(su2());
        let g = grid();
        let f = Field::from_fn(b, g, 0, |i, j| vec![g.x(i) * 3.0 + g.y(j), g.y(j) * g.y(j), 1.0]).unwrap();
        let dx = f.d_x().unwrap();
        assert_eq!(dx.margin(), 1);
        let dy = f.d_y().unwrap();
        for (i, j) in dx.interior_points() {
            assert!((dx.at(i, j)[0] - 3.0).abs() < 1e-13);
            assert!((dy.at(i, j)[0] - 1.0).abs() < 1e-13);
            assert!((dy.at(i, j)[1] - 2.0 * g.y(j)).abs() < 1e-13);
            assert_eq!(dx.at(i, j)[2], 0.0);
        }
        // 7 rows allow margin 3 but not 4.
        let m3 = f.d_y().unwrap().d_y().unwrap().d_y().unwrap();
        assert_eq!(m3.interior_points().count(), 3);
        assert!(matches!(m3.d_x(), Err(Error::InsufficientMargin { needed: 4, .. })));
    }

    #[test]
    fn mismatched_grids_rejected() {
        let b = Arc::new(su2());
        let f = Field::<f64>::zeros(b.clone(), grid(), 0);
        let other = Field::<f64>::zeros(b, Grid::new(9, 9, 0.1, 0.2, 0.0, 0.0).unwrap(), 0);
        assert!(matches!(f.add(&other), Err(Error::GridMismatch(_))));
    }

    #[test]
    fn combining_takes_the_wider_margin() {
        let b = Arc::new(su2());
        let f = Field::from_fn(b.clone(), grid(), 0, |_, _| vec![1.0, 0.0, 0.0]).unwrap();
        let g = Field::from_fn(b, grid(), 2, |_, _| vec![0.0, 1.0, 0.0]).unwrap();
        let s = f.bracket(&g).unwrap();
        assert_eq!(s.margin(), 2);
        assert_eq!(s.at(4, 3), &[0.0, 0.0, 1.0]);
        assert_eq!(s.sup_norm(), 1.0);
    }
}
