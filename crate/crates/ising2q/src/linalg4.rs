//! Exact-size real linear algebra for the two-qubit problem.
//!
//! Everything in this crate lives in the natural product basis
//! {|00>, |01>, |10>, |11>} with qubit 1 as the left tensor factor, so every
//! operator of interest is a real 4x4 matrix. This module provides the small
//! set of kernels the rest of the crate needs: a cyclic Jacobi
//! eigendecomposition for symmetric matrices, a spectral positive-semidefinite
//! square root, Kronecker products of 2x2 blocks, and a Hessenberg-QR
//! eigenvalue solver for real-spectrum non-symmetric matrices (used only for
//! cross-validation).

use crate::error::Error;

/// Plain 2x2 real matrix.
pub type Mat2 = [[f64; 2]; 2];
/// Plain 4x4 real matrix, row major.
pub type Mat4 = [[f64; 4]; 4];

/// Pauli matrices (real ones) and friends, as plain 2x2 arrays.
pub mod pauli {
    use super::Mat2;

    pub const ID2: Mat2 = [[1.0, 0.0], [0.0, 1.0]];
    pub const SIGMA_X: Mat2 = [[0.0, 1.0], [1.0, 0.0]];
    pub const SIGMA_Z: Mat2 = [[1.0, 0.0], [0.0, -1.0]];
    /// sigma_y divided by i: the real antisymmetric matrix [[0,-1],[1,0]].
    /// Useful because sigma_y (x) sigma_y = -(SIGMA_Y_OVER_I (x) SIGMA_Y_OVER_I)
    /// is real even though sigma_y itself is not.
    pub const SIGMA_Y_OVER_I: Mat2 = [[0.0, -1.0], [1.0, 0.0]];
}

/// Relative asymmetry accepted by [`SymMatrix4::new`] before rejecting.
const SYM_TOL: f64 = 1e-12;
/// Jacobi convergence: off-diagonal Frobenius norm relative to the full norm.
const JACOBI_TOL: f64 = 1e-14;
/// Hard cap on Jacobi sweeps; never reached for finite input.
const JACOBI_MAX_SWEEPS: usize = 100;

/// Real symmetric 4x4 matrix. The constructor symmetrizes its input, so the
/// stored entries satisfy `m[i][j] == m[j][i]` exactly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymMatrix4 {
    m: [[f64; 4]; 4],
}

impl SymMatrix4 {
    /// Builds a symmetric matrix, rejecting entries whose asymmetry exceeds
    /// `1e-12` relative to the largest magnitude present. Smaller asymmetry is
    /// averaged away so the invariant holds bit-exactly.
    pub fn new(entries: Mat4) -> Result<Self, Error> {
        let mut scale: f64 = 0.0;
        for row in &entries {
            for &x in row {
                if !x.is_finite() {
                    return Err(Error::NonFinite);
                }
                scale = scale.max(x.abs());
            }
        }
        let mut worst: f64 = 0.0;
        for i in 0..4 {
            for j in (i + 1)..4 {
                worst = worst.max((entries[i][j] - entries[j][i]).abs());
            }
        }
        if worst > SYM_TOL * scale.max(f64::MIN_POSITIVE) && worst > 0.0 {
            return Err(Error::NotSymmetric(worst));
        }
        let mut m = entries;
        for i in 0..4 {
            for j in (i + 1)..4 {
                let avg = 0.5 * (m[i][j] + m[j][i]);
                m[i][j] = avg;
                m[j][i] = avg;
            }
        }
        Ok(SymMatrix4 { m })
    }

    pub fn zero() -> Self {
        SymMatrix4 { m: [[0.0; 4]; 4] }
    }

    pub fn identity() -> Self {
        Self::diagonal([1.0; 4])
    }

    pub fn diagonal(d: [f64; 4]) -> Self {
        let mut m = [[0.0; 4]; 4];
        for i in 0..4 {
            m[i][i] = d[i];
        }
        SymMatrix4 { m }
    }

    /// Outer product v v^T (symmetric by construction).
    pub fn outer(v: &[f64; 4]) -> Self {
        let mut m = [[0.0; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                m[i][j] = v[i] * v[j];
            }
        }
        // enforce bit-exact symmetry against multiplication order
        for i in 0..4 {
            for j in (i + 1)..4 {
                m[j][i] = m[i][j];
            }
        }
        SymMatrix4 { m }
    }

    /// Entry access; symmetric so the argument order does not matter.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.m[i][j]
    }

    pub fn entries(&self) -> &Mat4 {
        &self.m
    }

    pub fn to_array(&self) -> Mat4 {
        self.m
    }

    pub fn trace(&self) -> f64 {
        self.m[0][0] + self.m[1][1] + self.m[2][2] + self.m[3][3]
    }

    /// Max row sum norm.
    pub fn norm_inf(&self) -> f64 {
        mat_norm_inf(&self.m)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.m
            .iter()
            .flatten()
            .map(|x| x * x)
            .sum::<f64>()
            .sqrt()
    }

    pub fn mul_vec(&self, v: &[f64; 4]) -> [f64; 4] {
        mat_mul_vec(&self.m, v)
    }

    /// Sum of two symmetric matrices; exact symmetry is preserved.
    pub fn add(&self, other: &SymMatrix4) -> SymMatrix4 {
        let mut m = [[0.0; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                m[i][j] = self.m[i][j] + other.m[i][j];
            }
        }
        SymMatrix4 { m }
    }

    pub fn scale(&self, f: f64) -> SymMatrix4 {
        let mut m = self.m;
        for row in &mut m {
            for x in row {
                *x *= f;
            }
        }
        SymMatrix4 { m }
    }

    /// Symmetrizes a general matrix by averaging with its transpose. Meant for
    /// products that are symmetric in exact arithmetic up to rounding.
    pub fn symmetrize(a: &Mat4) -> SymMatrix4 {
        let mut m = [[0.0; 4]; 4];
        for i in 0..4 {
            m[i][i] = a[i][i];
            for j in (i + 1)..4 {
                let avg = 0.5 * (a[i][j] + a[j][i]);
                m[i][j] = avg;
                m[j][i] = avg;
            }
        }
        SymMatrix4 { m }
    }
}

/// Eigendecomposition of a symmetric 4x4 matrix: `values` ascending with the
/// matching orthonormal eigenvectors stored as the columns of `vectors`.
#[derive(Debug, Clone, Copy)]
pub struct Spectrum4 {
    pub values: [f64; 4],
    pub vectors: Mat4,
}

impl Spectrum4 {
    /// Column `k` as an owned vector.
    pub fn vector(&self, k: usize) -> [f64; 4] {
        [
            self.vectors[0][k],
            self.vectors[1][k],
            self.vectors[2][k],
            self.vectors[3][k],
        ]
    }

    /// V diag(values) V^T, for reconstruction checks.
    pub fn reconstruct(&self) -> Mat4 {
        let mut vd = [[0.0; 4]; 4];
        for i in 0..4 {
            for k in 0..4 {
                vd[i][k] = self.vectors[i][k] * self.values[k];
            }
        }
        let mut out = [[0.0; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                let mut s = 0.0;
                for k in 0..4 {
                    s += vd[i][k] * self.vectors[j][k];
                }
                out[i][j] = s;
            }
        }
        out
    }
}

fn off_diag_frobenius(a: &Mat4) -> f64 {
    let mut s = 0.0;
    for i in 0..4 {
        for j in 0..4 {
            if i != j {
                s += a[i][j] * a[i][j];
            }
        }
    }
    s.sqrt()
}

/// Symmetric eigendecomposition by cyclic Jacobi rotations.
///
/// Converges when the off-diagonal Frobenius norm drops below
/// `1e-14 * ||m||_F`, with a hard cap of 100 sweeps. Output is deterministic
/// for identical input bits: the rotation order is fixed and the final sort is
/// stable, so ties keep the order the rotations produced.
pub fn eigh(m: &SymMatrix4) -> Result<Spectrum4, Error> {
    let mut a = m.m;
    let mut v = [[0.0; 4]; 4];
    for i in 0..4 {
        v[i][i] = 1.0;
    }
    let norm = m.frobenius_norm();
    let threshold = JACOBI_TOL * norm;

    let mut converged = norm == 0.0;
    for _ in 0..JACOBI_MAX_SWEEPS {
        if off_diag_frobenius(&a) <= threshold {
            converged = true;
            break;
        }
        for p in 0..3 {
            for q in (p + 1)..4 {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                // rotation angle that annihilates a[p][q]
                let tau = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                for k in 0..4 {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..4 {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                a[p][q] = 0.0;
                a[q][p] = 0.0;
                for k in 0..4 {
                    let vkp = v[k][p];
                    let vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }
    if !converged && off_diag_frobenius(&a) > threshold {
        return Err(Error::NoConvergence(JACOBI_MAX_SWEEPS));
    }

    // stable ascending sort of (value, column) pairs
    let mut order = [0usize, 1, 2, 3];
    let diag = [a[0][0], a[1][1], a[2][2], a[3][3]];
    order.sort_by(|&i, &j| diag[i].partial_cmp(&diag[j]).expect("finite eigenvalues"));

    let mut values = [0.0; 4];
    let mut vectors = [[0.0; 4]; 4];
    for (dst, &src) in order.iter().enumerate() {
        values[dst] = diag[src];
        for r in 0..4 {
            vectors[r][dst] = v[r][src];
        }
    }
    Ok(Spectrum4 { values, vectors })
}

/// Eigenvalue below which a matrix handed to [`sqrt_psd`] is rejected as not
/// positive semidefinite; negatives above it are clamped to zero.
pub const PSD_EIG_TOL: f64 = 1e-12;

/// Spectral square root of a positive semidefinite symmetric matrix.
///
/// Eigenvalues in `[-1e-12, 0)` are treated as rounding noise and clamped to
/// zero; anything more negative is an error.
pub fn sqrt_psd(m: &SymMatrix4) -> Result<SymMatrix4, Error> {
    let spec = eigh(m)?;
    let mut roots = [0.0; 4];
    for (r, &lambda) in roots.iter_mut().zip(spec.values.iter()) {
        if lambda < -PSD_EIG_TOL {
            return Err(Error::NotPositiveSemidefinite(lambda));
        }
        *r = lambda.max(0.0).sqrt();
    }
    let mut out = [[0.0; 4]; 4];
    for k in 0..4 {
        let v = spec.vector(k);
        for i in 0..4 {
            for j in 0..4 {
                out[i][j] += roots[k] * v[i] * v[j];
            }
        }
    }
    Ok(SymMatrix4::symmetrize(&out))
}

/// Kronecker product of two 2x2 blocks in the {|00>,|01>,|10>,|11>} ordering,
/// with the first factor acting on qubit 1.
pub fn kron2(a: &Mat2, b: &Mat2) -> Mat4 {
    let mut out = [[0.0; 4]; 4];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    out[2 * i + k][2 * j + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    out
}

pub fn mat_mul(a: &Mat4, b: &Mat4) -> Mat4 {
    let mut out = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            let mut s = 0.0;
            for k in 0..4 {
                s += a[i][k] * b[k][j];
            }
            out[i][j] = s;
        }
    }
    out
}

pub fn mat_mul_vec(a: &Mat4, v: &[f64; 4]) -> [f64; 4] {
    let mut out = [0.0; 4];
    for i in 0..4 {
        for k in 0..4 {
            out[i] += a[i][k] * v[k];
        }
    }
    out
}

pub fn mat_sub(a: &Mat4, b: &Mat4) -> Mat4 {
    let mut out = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = a[i][j] - b[i][j];
        }
    }
    out
}

pub fn mat_transpose(a: &Mat4) -> Mat4 {
    let mut out = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = a[j][i];
        }
    }
    out
}

pub fn mat_norm_inf(a: &Mat4) -> f64 {
    a.iter()
        .map(|row| row.iter().map(|x| x.abs()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// Largest absolute entry, handy for element-wise comparisons.
pub fn mat_max_abs(a: &Mat4) -> f64 {
    a.iter()
        .flatten()
        .map(|x| x.abs())
        .fold(0.0, f64::max)
}

/// Imaginary parts larger than this make [`eig_real4`] report an
/// internal-consistency error instead of rounding them away.
pub const COMPLEX_EIG_TOL: f64 = 1e-8;

const QR_MAX_ITERS: usize = 200;

/// Eigenvalues (ascending) of a general real 4x4 matrix whose spectrum is
/// known to be real, via balancing, Householder reduction to Hessenberg form,
/// and explicitly shifted QR iteration with deflation.
///
/// The matrices this crate feeds in (products of a density matrix with the
/// spin-flip operator) are similar to symmetric ones, so a genuinely complex
/// pair signals corrupted input; it is reported as an error when the
/// imaginary part exceeds `1e-8`.
pub fn eig_real4(a: &Mat4) -> Result<[f64; 4], Error> {
    for row in a {
        for &x in row {
            if !x.is_finite() {
                return Err(Error::NonFinite);
            }
        }
    }
    let mut h = *a;
    balance(&mut h);
    hessenberg(&mut h);
    let mut eigs = qr_eigenvalues(&mut h)?;
    eigs.sort_by(|x, y| x.partial_cmp(y).expect("finite eigenvalues"));
    Ok(eigs)
}

/// Parlett-Reinsch balancing with radix-2 scaling (exact similarity).
fn balance(a: &mut Mat4) {
    loop {
        let mut done = true;
        for i in 0..4 {
            let mut c: f64 = 0.0;
            let mut r: f64 = 0.0;
            for j in 0..4 {
                if j != i {
                    c += a[j][i].abs();
                    r += a[i][j].abs();
                }
            }
            if c == 0.0 || r == 0.0 {
                continue;
            }
            let s = c + r;
            let mut f = 1.0;
            while c < r / 2.0 {
                c *= 2.0;
                r /= 2.0;
                f *= 2.0;
            }
            while c >= r * 2.0 {
                c /= 2.0;
                r *= 2.0;
                f /= 2.0;
            }
            if c + r < 0.95 * s {
                done = false;
                // column i scaled by f, row i by 1/f
                for j in 0..4 {
                    a[j][i] *= f;
                }
                for j in 0..4 {
                    a[i][j] /= f;
                }
            }
        }
        if done {
            break;
        }
    }
}

/// Householder reduction to upper Hessenberg form (eigenvalues preserved).
fn hessenberg(a: &mut Mat4) {
    for col in 0..2 {
        let lead = col + 1;
        let mut x = [0.0; 4];
        let mut norm2 = 0.0;
        for i in lead..4 {
            x[i] = a[i][col];
            norm2 += x[i] * x[i];
        }
        let below2 = norm2 - x[lead] * x[lead];
        if below2 <= 0.0 {
            continue;
        }
        let alpha = -x[lead].signum() * norm2.sqrt();
        if alpha == 0.0 {
            continue;
        }
        let mut v = [0.0; 4];
        v[lead] = x[lead] - alpha;
        for i in (lead + 1)..4 {
            v[i] = x[i];
        }
        let vnorm2: f64 = v.iter().map(|t| t * t).sum();
        if vnorm2 == 0.0 {
            continue;
        }
        let beta = 2.0 / vnorm2;
        // A <- P A, P = I - beta v v^T
        for j in 0..4 {
            let mut dot = 0.0;
            for i in lead..4 {
                dot += v[i] * a[i][j];
            }
            let dot = beta * dot;
            for i in lead..4 {
                a[i][j] -= dot * v[i];
            }
        }
        // A <- A P
        for i in 0..4 {
            let mut dot = 0.0;
            for j in lead..4 {
                dot += a[i][j] * v[j];
            }
            let dot = beta * dot;
            for j in lead..4 {
                a[i][j] -= dot * v[j];
            }
        }
    }
}

/// Solves a 2x2 block with a real spectrum; `tol_scale` guards the complex
/// branch.
fn solve_block2(a: f64, b: f64, c: f64, d: f64) -> Result<(f64, f64), Error> {
    let mean = 0.5 * (a + d);
    let half_diff = 0.5 * (a - d);
    let disc = half_diff * half_diff + b * c;
    if disc >= 0.0 {
        let r = disc.sqrt();
        Ok((mean - r, mean + r))
    } else {
        let imag = (-disc).sqrt();
        if imag > COMPLEX_EIG_TOL {
            Err(Error::ComplexEigenvalue(imag))
        } else {
            Ok((mean, mean))
        }
    }
}

fn qr_eigenvalues(h: &mut Mat4) -> Result<[f64; 4], Error> {
    let mut eigs = [0.0; 4];
    let mut hi: usize = 3;
    let mut iters = 0usize;
    let mut since_deflation = 0usize;
    // Absolute deflation floor. The relative-to-neighbors criterion alone
    // stalls on rank-deficient input (near-zero diagonals make it
    // unreachable); an eps * norm floor costs at most O(eps * ||H||) per
    // eigenvalue, which is what a backward-stable solver loses anyway.
    let hnorm = mat_max_abs(h).max(f64::MIN_POSITIVE);
    loop {
        // deflate trailing 1x1 / split the active window
        let mut lo = hi;
        while lo > 0 {
            let small = f64::EPSILON
                * (h[lo - 1][lo - 1].abs() + h[lo][lo].abs()).max(hnorm);
            if h[lo][lo - 1].abs() <= small {
                h[lo][lo - 1] = 0.0;
                break;
            }
            lo -= 1;
        }

        if lo == hi {
            eigs[hi] = h[hi][hi];
            since_deflation = 0;
            if hi == 0 {
                return Ok(eigs);
            }
            hi -= 1;
            continue;
        }
        if hi - lo == 1 {
            let (e1, e2) = solve_block2(h[lo][lo], h[lo][hi], h[hi][lo], h[hi][hi])?;
            eigs[lo] = e1;
            eigs[hi] = e2;
            since_deflation = 0;
            if lo == 0 {
                return Ok(eigs);
            }
            hi = lo - 1;
            continue;
        }

        iters += 1;
        since_deflation += 1;
        if iters > QR_MAX_ITERS {
            return Err(Error::NoConvergence(QR_MAX_ITERS));
        }

        // Wilkinson-style shift from the trailing 2x2; exceptional shift if
        // the iteration stalls.
        let a = h[hi - 1][hi - 1];
        let b = h[hi - 1][hi];
        let c = h[hi][hi - 1];
        let d = h[hi][hi];
        let mean = 0.5 * (a + d);
        let half_diff = 0.5 * (a - d);
        let disc = half_diff * half_diff + b * c;
        let mut shift = if disc >= 0.0 {
            let r = disc.sqrt();
            if (mean - r - d).abs() < (mean + r - d).abs() {
                mean - r
            } else {
                mean + r
            }
        } else {
            mean
        };
        if since_deflation % 12 == 0 {
            shift = d + 0.75 * c.abs();
        }

        // explicit shifted QR step restricted to the active window
        for i in lo..=hi {
            h[i][i] -= shift;
        }
        let mut rots = [(1.0f64, 0.0f64); 3];
        for k in lo..hi {
            let x = h[k][k];
            let y = h[k + 1][k];
            let (cos, sin) = if y == 0.0 {
                (1.0, 0.0)
            } else {
                let r = x.hypot(y);
                (x / r, y / r)
            };
            rots[k - lo] = (cos, sin);
            for j in lo..=hi {
                let u = h[k][j];
                let w = h[k + 1][j];
                h[k][j] = cos * u + sin * w;
                h[k + 1][j] = -sin * u + cos * w;
            }
            h[k + 1][k] = 0.0;
        }
        for k in lo..hi {
            let (cos, sin) = rots[k - lo];
            for i in lo..=hi {
                let u = h[i][k];
                let w = h[i][k + 1];
                h[i][k] = cos * u + sin * w;
                h[i][k + 1] = -sin * u + cos * w;
            }
        }
        for i in lo..=hi {
            h[i][i] += shift;
        }
    }
}
