// SPDX-License-Identifier: Apache-2.0

#![allow(dead_code)]

use std::sync::Arc;

use bhg_core::lie::{builtin_algebra, AlgebraBasis, AlgebraElement, GroupElement};
use bhg_core::surface::{Grid, GridMap};
use bhg_core::Result;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `psi = exp(p(x, y) G) exp(q(x, y) H)` with random generators and smooth
/// phases `p, q` of bounded slope, so the pullback stays tangent on coarse grids.
#[derive(Debug, Clone)]
pub struct RandomMap {
    basis: Arc<AlgebraBasis>,
    g: AlgebraElement,
    h: AlgebraElement,
    p: [f64; 4],
    q: [f64; 4],
    mu: [f64; 3],
}

impl RandomMap {
    pub fn new(rng: &mut ChaCha8Rng, algebra: &str, varying_mu: bool) -> Self {
        let basis = builtin_algebra(algebra).unwrap();
        let gen = |rng: &mut ChaCha8Rng| {
            let c: Vec<f64> = (0..basis.dim()).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let e = AlgebraElement::new(basis.clone(), c).unwrap();
            let n = e.norm();
            e.scaled(0.4 / n)
        };
        let g = gen(rng);
        let h = gen(rng);
        let coeffs = |rng: &mut ChaCha8Rng| [0; 4].map(|_| rng.gen_range(-1.0..1.0));
        let p = coeffs(rng);
        let q = coeffs(rng);
        let mu = if varying_mu {
            [0; 3].map(|_| rng.gen_range(-0.2..0.2))
        } else {
            [0.0; 3]
        };
        Self { basis, g, h, p, q, mu }
    }

    fn phase(c: &[f64; 4], x: f64, y: f64) -> f64 {
        c[0] * x + c[1] * y + c[2] * (1.5 * x + y).sin() + c[3] * x * y
    }

    pub fn psi(&self, x: f64, y: f64) -> Result<GroupElement> {
        Ok(self
            .g
            .exp(Self::phase(&self.p, x, y))?
            .mul(&self.h.exp(Self::phase(&self.q, x, y))?))
    }

    pub fn mu(&self, x: f64, y: f64) -> f64 {
        1.0 + self.mu[0] * x + self.mu[1] * (2.0 * y).cos() + self.mu[2] * x * y
    }

    pub fn sample(&self, nx: usize, ny: usize) -> GridMap {
        let grid = Grid::spanning(nx, ny, (0.0, 1.0), (0.0, 1.0)).unwrap();
        GridMap::from_fn(self.basis.clone(), grid, |x, y| self.mu(x, y), |x, y| self.psi(x, y)).unwrap()
    }
}

/// `psi = exp(f(x) X1)` in su(2) on `[0, 1]^2`.
pub fn x1_phase_map(n: usize, f: impl Fn(f64) -> f64) -> GridMap {
    let basis = builtin_algebra("su2").unwrap();
    let x1 = AlgebraElement::basis_vector(basis.clone(), 0);
    let grid = Grid::spanning(n, n, (0.0, 1.0), (0.0, 1.0)).unwrap();
    GridMap::from_fn(basis, grid, |_, _| 1.0, |x, _| x1.exp(f(x))).unwrap()
}
