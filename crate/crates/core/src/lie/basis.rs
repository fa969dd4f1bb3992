// SPDX-License-Identifier: Apache-2.0

use std::fmt;
use std::sync::Arc;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub type CMatrix = DMatrix<Complex64>;

/// Tolerance for construction invariants of a basis.
pub const CONSTRUCTION_TOL: f64 = 1e-12;

/// Default scale `c` of the inner product `<X, Y> = -c Tr(XY)`.
pub const DEFAULT_INNER_SCALE: f64 = 2.0;

/// Largest `n` accepted by [`builtin_algebra`] for `su<n>`.
pub const DEFAULT_MAX_SU_DEGREE: usize = 8;

const STRUCTURE_ZERO: f64 = 1e-14;

/// Orthonormal basis `X_1..X_n` of a compact matrix Lie algebra together with
/// its structure constants `[X_t, X_s] = sum_l C^l_ts X_l`.
#[derive(Clone)]
pub struct AlgebraBasis {
    name: String,
    matrices: Vec<CMatrix>,
    inner_scale: f64,
    // dense C^l_ts stored at (t * n + s) * n + l
    structure: Vec<f64>,
    // nonzero entries (t, s, l, C^l_ts)
    nonzero: Vec<(usize, usize, usize, f64)>,
}

impl fmt::Debug for AlgebraBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AlgebraBasis")
            .field("name", &self.name)
            .field("dim", &self.dim())
            .field("matrix_size", &self.matrix_size())
            .field("inner_scale", &self.inner_scale)
            .finish()
    }
}

impl AlgebraBasis {
    /// Builds a basis from matrices assumed orthonormal for `-c Tr(XY)` and
    /// derives the structure constants from matrix commutators.
    pub fn from_matrices(name: &str, matrices: Vec<CMatrix>, inner_scale: f64) -> Result<Self> {
        if matrices.is_empty() {
            return Err(Error::InvalidInput("empty basis".into()));
        }
        if !(inner_scale > 0.0 && inner_scale.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "inner scale must be positive, got {inner_scale}"
            )));
        }
        let size = matrices[0].nrows();
        if matrices.iter().any(|m| m.nrows() != size || m.ncols() != size) {
            return Err(Error::InvalidInput("basis matrices differ in shape".into()));
        }
        let n = matrices.len();
        let mut structure = vec![0.0; n * n * n];
        let mut nonzero = Vec::new();
        for t in 0..n {
            for s in 0..n {
                let comm = commutator(&matrices[t], &matrices[s]);
                for l in 0..n {
                    let v = trace_inner(inner_scale, &comm, &matrices[l]);
                    if v.abs() > STRUCTURE_ZERO {
                        structure[(t * n + s) * n + l] = v;
                        nonzero.push((t, s, l, v));
                    }
                }
            }
        }
        Ok(Self {
            name: name.to_string(),
            matrices,
            inner_scale,
            structure,
            nonzero,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.matrices.len()
    }

    /// Size `N` of the `N x N` matrix realization.
    pub fn matrix_size(&self) -> usize {
        self.matrices[0].nrows()
    }

    pub fn inner_scale(&self) -> f64 {
        self.inner_scale
    }

    pub fn matrices(&self) -> &[CMatrix] {
        &self.matrices
    }

    /// `C^l_ts`, the `X_l` coefficient of `[X_t, X_s]` (zero-based indices).
    pub fn structure_constant(&self, l: usize, t: usize, s: usize) -> f64 {
        let n = self.dim();
        self.structure[(t * n + s) * n + l]
    }

    /// Nonzero structure constants as `(t, s, l, C^l_ts)`.
    pub fn nonzero_structure_constants(&self) -> &[(usize, usize, usize, f64)] {
        &self.nonzero
    }

    /// Coefficients of `[x, y]`, written into `out`.
    pub fn bracket_into<T: Scalar>(&self, x: &[T], y: &[T], out: &mut [T]) {
        debug_assert_eq!(x.len(), self.dim());
        debug_assert_eq!(y.len(), self.dim());
        out.iter_mut().for_each(|v| *v = T::zero());
        for &(t, s, l, c) in &self.nonzero {
            out[l] = out[l] + x[t] * y[s] * c;
        }
    }

    pub fn bracket_coeffs<T: Scalar>(&self, x: &[T], y: &[T]) -> Vec<T> {
        let mut out = vec![T::zero(); self.dim()];
        self.bracket_into(x, y, &mut out);
        out
    }

    /// Matrix realization `sum_s coeffs_s X_s`.
    pub fn to_matrix(&self, coeffs: &[f64]) -> CMatrix {
        let size = self.matrix_size();
        let mut m = CMatrix::zeros(size, size);
        for (c, x) in coeffs.iter().zip(&self.matrices) {
            if *c != 0.0 {
                m += x * Complex64::new(*c, 0.0);
            }
        }
        m
    }

    /// Orthogonal projection of an arbitrary `N x N` matrix onto the real span
    /// of the basis. Returns the coefficients and the Frobenius norm of the
    /// rejected part.
    pub fn project(&self, m: &CMatrix) -> (Vec<f64>, f64) {
        // c Re Tr(M^dagger X_s) is orthonormal-coordinate extraction because
        // -c Tr(X Y) = c Tr(X^dagger Y) on skew-Hermitian matrices.
        let coeffs: Vec<f64> = self
            .matrices
            .iter()
            .map(|x| self.inner_scale * (m.adjoint() * x).trace().re)
            .collect();
        let defect = (m - self.to_matrix(&coeffs)).norm();
        (coeffs, defect)
    }

    /// `-c Re Tr(AB)`.
    pub fn trace_inner(&self, a: &CMatrix, b: &CMatrix) -> f64 {
        trace_inner(self.inner_scale, a, b)
    }

    /// Evaluates every construction invariant numerically.
    pub fn check_invariants(&self) -> InvariantReport {
        let n = self.dim();
        let mut r = InvariantReport::default();
        for (s, xs) in self.matrices.iter().enumerate() {
            r.skew_hermitian = r.skew_hermitian.max((xs + xs.adjoint()).norm());
            r.traceless = r.traceless.max(xs.trace().norm());
            for (t, xt) in self.matrices.iter().enumerate() {
                let delta = if s == t { 1.0 } else { 0.0 };
                r.orthonormality = r
                    .orthonormality
                    .max((self.trace_inner(xs, xt) - delta).abs());
            }
        }
        for t in 0..n {
            for s in 0..n {
                let via_c = self.to_matrix(
                    &(0..n)
                        .map(|l| self.structure_constant(l, t, s))
                        .collect::<Vec<_>>(),
                );
                let direct = commutator(&self.matrices[t], &self.matrices[s]);
                r.commutator = r.commutator.max((via_c - direct).norm());
                for l in 0..n {
                    let c = self.structure_constant(l, t, s);
                    r.antisymmetry = r
                        .antisymmetry
                        .max((c + self.structure_constant(l, s, t)).abs());
                    r.ad_invariance = r
                        .ad_invariance
                        .max((c + self.structure_constant(s, t, l)).abs());
                }
            }
        }
        // Jacobi on basis triples, evaluated through C only.
        let mut by_pair: Vec<Vec<(usize, f64)>> = vec![Vec::new(); n * n];
        for &(t, s, l, v) in &self.nonzero {
            by_pair[t * n + s].push((l, v));
        }
        // [e_a, [e_b, e_c]] accumulated into acc
        let nested = |a: usize, b: usize, c: usize, acc: &mut [f64]| {
            for &(m, v1) in &by_pair[b * n + c] {
                for &(k, v2) in &by_pair[a * n + m] {
                    acc[k] += v1 * v2;
                }
            }
        };
        let mut acc = vec![0.0; n];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    acc.iter_mut().for_each(|v| *v = 0.0);
                    nested(a, b, c, &mut acc);
                    nested(b, c, a, &mut acc);
                    nested(c, a, b, &mut acc);
                    r.jacobi = acc.iter().fold(r.jacobi, |w, v| w.max(v.abs()));
                }
            }
        }
        r
    }
}

impl PartialEq for AlgebraBasis {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.dim() == other.dim()
            && self.matrix_size() == other.matrix_size()
            && self.inner_scale == other.inner_scale
    }
}

/// Maximum violations of each basis invariant.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct InvariantReport {
    pub skew_hermitian: f64,
    pub traceless: f64,
    pub orthonormality: f64,
    pub antisymmetry: f64,
    pub ad_invariance: f64,
    pub jacobi: f64,
    pub commutator: f64,
}

impl InvariantReport {
    pub fn entries(&self) -> [(&'static str, f64); 7] {
        [
            ("skew-hermitian", self.skew_hermitian),
            ("traceless", self.traceless),
            ("orthonormality", self.orthonormality),
            ("antisymmetry", self.antisymmetry),
            ("ad-invariance", self.ad_invariance),
            ("jacobi", self.jacobi),
            ("bracket-vs-commutator", self.commutator),
        ]
    }

    pub fn worst(&self) -> f64 {
        self.entries().iter().map(|e| e.1).fold(0.0, f64::max)
    }

    pub fn passes(&self, tol: f64) -> bool {
        self.worst() <= tol
    }
}

pub(crate) fn commutator(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a * b - b * a
}

fn trace_inner(scale: f64, a: &CMatrix, b: &CMatrix) -> f64 {
    -scale * (a * b).trace().re
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// The su(2) basis with `<X, Y> = -2 Tr(XY)`:
/// `X1 = diag(i/2, -i/2)`, `X2 = [[0, 1/2], [-1/2, 0]]`, `X3 = [[0, i/2], [i/2, 0]]`,
/// satisfying `[X1, X2] = X3`, `[X2, X3] = X1`, `[X3, X1] = X2`.
pub fn su2() -> AlgebraBasis {
    let x1 = CMatrix::from_row_slice(2, 2, &[c(0.0, 0.5), c(0.0, 0.0), c(0.0, 0.0), c(0.0, -0.5)]);
    let x2 = CMatrix::from_row_slice(2, 2, &[c(0.0, 0.0), c(0.5, 0.0), c(-0.5, 0.0), c(0.0, 0.0)]);
    let x3 = CMatrix::from_row_slice(2, 2, &[c(0.0, 0.0), c(0.0, 0.5), c(0.0, 0.5), c(0.0, 0.0)]);
    AlgebraBasis::from_matrices("su2", vec![x1, x2, x3], DEFAULT_INNER_SCALE)
        .expect("su2 basis is well formed")
}

/// Generalized Gell-Mann generators of su(n), Gram-Schmidt orthonormalized
/// against `-c Tr(XY)`.
pub fn su_n(n: usize, inner_scale: f64) -> Result<AlgebraBasis> {
    if n < 2 {
        return Err(Error::UnknownAlgebra(format!("su{n}")));
    }
    let mut raw = Vec::with_capacity(n * n - 1);
    for j in 0..n {
        for k in (j + 1)..n {
            let mut a = CMatrix::zeros(n, n);
            a[(j, k)] = c(1.0, 0.0);
            a[(k, j)] = c(-1.0, 0.0);
            raw.push(a);
            let mut b = CMatrix::zeros(n, n);
            b[(j, k)] = c(0.0, 1.0);
            b[(k, j)] = c(0.0, 1.0);
            raw.push(b);
        }
    }
    for d in 1..n {
        let mut m = CMatrix::zeros(n, n);
        for i in 0..d {
            m[(i, i)] = c(0.0, 1.0);
        }
        m[(d, d)] = c(0.0, -(d as f64));
        raw.push(m);
    }

    let mut ortho: Vec<CMatrix> = Vec::with_capacity(raw.len());
    for mut v in raw {
        for u in &ortho {
            let p = trace_inner(inner_scale, &v, u);
            v -= u * c(p, 0.0);
        }
        let norm = trace_inner(inner_scale, &v, &v).sqrt();
        ortho.push(v / c(norm, 0.0));
    }
    AlgebraBasis::from_matrices(&format!("su{n}"), ortho, inner_scale)
}

/// Looks up a builtin algebra by name (`su2`, `su3`, ..., `su8`).
pub fn builtin_algebra(name: &str) -> Result<Arc<AlgebraBasis>> {
    builtin_algebra_with_limit(name, DEFAULT_MAX_SU_DEGREE)
}

/// Like [`builtin_algebra`] with a caller-chosen bound on `n` for `su<n>`.
pub fn builtin_algebra_with_limit(name: &str, max_degree: usize) -> Result<Arc<AlgebraBasis>> {
    let unknown = || Error::UnknownAlgebra(name.to_string());
    let degree: usize = name
        .strip_prefix("su")
        .filter(|d| !d.is_empty() && d.chars().all(|ch| ch.is_ascii_digit()))
        .and_then(|d| d.parse().ok())
        .ok_or_else(unknown)?;
    match degree {
        2 => Ok(Arc::new(su2())),
        d if (3..=max_degree).contains(&d) => Ok(Arc::new(su_n(d, DEFAULT_INNER_SCALE)?)),
        _ => Err(unknown()),
    }
}
