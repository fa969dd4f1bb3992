// SPDX-License-Identifier: Apache-2.0

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::io::{exact_vec, Exact};
use crate::lie::{
    builtin_algebra, matrix_from_rows, matrix_rows, AlgebraBasis, GroupElement, UNITARY_TOL,
};

/// Smallest grid accepted for a [`GridMap`] in each direction.
pub const MIN_GRID_POINTS: usize = 7;

/// Uniform rectangular grid; point `(i, j)` sits at `(x0 + i hx, y0 + j hy)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub nx: usize,
    pub ny: usize,
    pub hx: f64,
    pub hy: f64,
    pub x0: f64,
    pub y0: f64,
}

impl Grid {
    pub fn new(nx: usize, ny: usize, hx: f64, hy: f64, x0: f64, y0: f64) -> Result<Self> {
        if nx == 0 || ny == 0 {
            return Err(Error::InvalidParameter("grid must have points".into()));
        }
        if !(hx > 0.0 && hy > 0.0 && hx.is_finite() && hy.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "grid spacing must be positive, got hx={hx}, hy={hy}"
            )));
        }
        if !(x0.is_finite() && y0.is_finite()) {
            return Err(Error::InvalidParameter("grid origin must be finite".into()));
        }
        Ok(Self { nx, ny, hx, hy, x0, y0 })
    }

    /// Grid with `nx x ny` points spanning `[x0, x1] x [y0, y1]`.
    pub fn spanning(nx: usize, ny: usize, (x0, x1): (f64, f64), (y0, y1): (f64, f64)) -> Result<Self> {
        if nx < 2 || ny < 2 {
            return Err(Error::InvalidParameter("need two points per direction".into()));
        }
        Self::new(nx, ny, (x1 - x0) / (nx - 1) as f64, (y1 - y0) / (ny - 1) as f64, x0, y0)
    }

    pub fn len(&self) -> usize {
        self.nx * self.ny
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn index(&self, i: usize, j: usize) -> usize {
        j * self.nx + i
    }

    pub fn x(&self, i: usize) -> f64 {
        self.x0 + i as f64 * self.hx
    }

    pub fn y(&self, j: usize) -> f64 {
        self.y0 + j as f64 * self.hy
    }
}

/// A group-valued map sampled on a grid, with the conformal factor `mu` of
/// the domain metric `mu^2 (dx^2 + dy^2)`.
#[derive(Debug, Clone)]
pub struct GridMap {
    basis: Arc<AlgebraBasis>,
    grid: Grid,
    mu: Vec<f64>,
    psi: Vec<GroupElement>,
}

impl GridMap {
    pub fn new(
        basis: Arc<AlgebraBasis>,
        grid: Grid,
        mu: Vec<f64>,
        psi: Vec<GroupElement>,
    ) -> Result<Self> {
        if grid.nx < MIN_GRID_POINTS || grid.ny < MIN_GRID_POINTS {
            return Err(Error::InsufficientMargin {
                needed: 3,
                nx: grid.nx,
                ny: grid.ny,
            });
        }
        if mu.len() != grid.len() || psi.len() != grid.len() {
            return Err(Error::GridMismatch(format!(
                "{} mu and {} psi samples for a {}x{} grid",
                mu.len(),
                psi.len(),
                grid.nx,
                grid.ny
            )));
        }
        if let Some(k) = mu.iter().position(|m| !(*m > 0.0 && m.is_finite())) {
            return Err(Error::InvalidInput(format!(
                "conformal factor must be positive, got {} at sample {k}",
                mu[k]
            )));
        }
        for (k, g) in psi.iter().enumerate() {
            if g.size() != basis.matrix_size() {
                return Err(Error::InvalidInput(format!(
                    "sample {k} has size {}, algebra {} needs {}",
                    g.size(),
                    basis.name(),
                    basis.matrix_size()
                )));
            }
            let defect = g.unitarity_defect();
            if !(defect <= UNITARY_TOL) {
                return Err(Error::InvalidInput(format!(
                    "sample {k} is not unitary (defect {defect:.3e})"
                )));
            }
        }
        Ok(Self { basis, grid, mu, psi })
    }

    /// Samples `psi(x, y)` and `mu(x, y)` at every grid point.
    pub fn from_fn(
        basis: Arc<AlgebraBasis>,
        grid: Grid,
        mu: impl Fn(f64, f64) -> f64,
        psi: impl Fn(f64, f64) -> Result<GroupElement>,
    ) -> Result<Self> {
        let mut mus = Vec::with_capacity(grid.len());
        let mut psis = Vec::with_capacity(grid.len());
        for j in 0..grid.ny {
            for i in 0..grid.nx {
                let (x, y) = (grid.x(i), grid.y(j));
                mus.push(mu(x, y));
                psis.push(psi(x, y)?);
            }
        }
        Self::new(basis, grid, mus, psis)
    }

    pub fn basis(&self) -> &Arc<AlgebraBasis> {
        &self.basis
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn mu(&self) -> &[f64] {
        &self.mu
    }

    pub fn psi(&self) -> &[GroupElement] {
        &self.psi
    }

    pub fn psi_at(&self, i: usize, j: usize) -> &GroupElement {
        &self.psi[self.grid.index(i, j)]
    }

    /// Same map with `mu` replaced.
    pub fn with_mu(&self, mu: Vec<f64>) -> Result<Self> {
        Self::new(self.basis.clone(), self.grid, mu, self.psi.clone())
    }

    /// `mu^-2` at every grid point.
    pub fn inv_mu2(&self) -> Vec<f64> {
        inv_mu2(&self.mu)
    }

    pub fn to_json(&self) -> Result<String> {
        let g = &self.grid;
        let dto = GridMapJsonOut {
            algebra: self.basis.name(),
            nx: g.nx,
            ny: g.ny,
            hx: Exact(g.hx),
            hy: Exact(g.hy),
            x0: Exact(g.x0),
            y0: Exact(g.y0),
            mu: self.mu.chunks(g.nx).map(exact_vec).collect(),
            psi: self.psi.iter().map(|p| matrix_rows(p.matrix())).collect(),
        };
        Ok(serde_json::to_string(&dto)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let dto: GridMapJsonIn = serde_json::from_str(text)?;
        let basis = builtin_algebra(&dto.algebra)?;
        let grid = Grid::new(dto.nx, dto.ny, dto.hx, dto.hy, dto.x0, dto.y0)?;
        let mu = match dto.mu {
            Some(rows) => {
                if rows.len() != grid.ny || rows.iter().any(|r| r.len() != grid.nx) {
                    return Err(Error::Parse(format!(
                        "mu must be {} rows of {} values",
                        grid.ny, grid.nx
                    )));
                }
                rows.into_iter().flatten().collect()
            }
            None => vec![1.0; grid.len()],
        };
        if dto.psi.len() != grid.len() {
            return Err(Error::Parse(format!(
                "psi has {} samples, expected {}",
                dto.psi.len(),
                grid.len()
            )));
        }
        let psi = dto
            .psi
            .iter()
            .map(|rows| GroupElement::from_matrix(matrix_from_rows(rows)?, UNITARY_TOL))
            .collect::<Result<Vec<_>>>()?;
        Self::new(basis, grid, mu, psi)
    }
}

pub fn inv_mu2(mu: &[f64]) -> Vec<f64> {
    mu.iter().map(|m| 1.0 / (m * m)).collect()
}

#[derive(Serialize)]
struct GridMapJsonOut<'a> {
    algebra: &'a str,
    nx: usize,
    ny: usize,
    hx: Exact,
    hy: Exact,
    x0: Exact,
    y0: Exact,
    mu: Vec<Vec<Exact>>,
    psi: Vec<Vec<Vec<[Exact; 2]>>>,
}

#[derive(Deserialize)]
struct GridMapJsonIn {
    algebra: String,
    nx: usize,
    ny: usize,
    hx: f64,
    hy: f64,
    #[serde(default)]
    x0: f64,
    #[serde(default)]
    y0: f64,
    #[serde(default)]
    mu: Option<Vec<Vec<f64>>>,
    psi: Vec<Vec<Vec<[f64; 2]>>>,
}
