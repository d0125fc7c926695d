//! Real symmetric band matrices and a deterministic symmetric eigensolver.

use crate::error::{Error, Result};

/// Symmetric matrix with entries only on |i − j| ≤ `half_bandwidth`.
///
/// Only the lower band is stored, so symmetry holds by construction and
/// entries outside the band read back as exact zeros.
#[derive(Debug, Clone, PartialEq)]
pub struct BandMatrix {
    dim: usize,
    half_bandwidth: usize,
    // row-major, row i holds (i, i), (i, i-1), ..., (i, i-hb)
    lower: Vec<f64>,
}

impl BandMatrix {
    pub fn zeros(dim: usize, half_bandwidth: usize) -> Self {
        BandMatrix {
            dim,
            half_bandwidth,
            lower: vec![0.0; dim * (half_bandwidth + 1)],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn half_bandwidth(&self) -> usize {
        self.half_bandwidth
    }

    fn slot(&self, i: usize, j: usize) -> Option<usize> {
        let (hi, lo) = if i >= j { (i, j) } else { (j, i) };
        let off = hi - lo;
        (hi < self.dim && off <= self.half_bandwidth).then(|| hi * (self.half_bandwidth + 1) + off)
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.slot(i, j).map_or(0.0, |s| self.lower[s])
    }

    /// Sets both (i, j) and (j, i).
    ///
    /// # Panics
    /// If the position lies outside the matrix or outside the band.
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        let s = self
            .slot(i, j)
            .unwrap_or_else(|| panic!("({i}, {j}) outside band of width {}", self.half_bandwidth));
        self.lower[s] = value;
    }

    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j)).collect())
            .collect()
    }

    /// All eigenvalues, ascending.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        let mut a = self.to_dense();
        let (mut d, mut e) = tridiagonalize(&mut a);
        tridiagonal_ql(&mut d, &mut e)?;
        d.sort_by(f64::total_cmp);
        Ok(d)
    }
}

/// Householder reduction of a dense symmetric matrix to tridiagonal form.
/// Returns (diagonal, subdiagonal) with the subdiagonal in e[1..].
fn tridiagonalize(a: &mut [Vec<f64>]) -> (Vec<f64>, Vec<f64>) {
    let n = a.len();
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = 0.0;
        if l > 0 {
            let scale: f64 = a[i][..=l].iter().map(|x| x.abs()).sum();
            if scale == 0.0 {
                e[i] = a[i][l];
            } else {
                for k in 0..=l {
                    a[i][k] /= scale;
                    h += a[i][k] * a[i][k];
                }
                let mut f = a[i][l];
                let g = if f >= 0.0 { -h.sqrt() } else { h.sqrt() };
                e[i] = scale * g;
                h -= f * g;
                a[i][l] = f - g;
                f = 0.0;
                for j in 0..=l {
                    let mut g = 0.0;
                    for k in 0..=j {
                        g += a[j][k] * a[i][k];
                    }
                    for k in j + 1..=l {
                        g += a[k][j] * a[i][k];
                    }
                    e[j] = g / h;
                    f += e[j] * a[i][j];
                }
                let hh = f / (h + h);
                for j in 0..=l {
                    let f = a[i][j];
                    let g = e[j] - hh * f;
                    e[j] = g;
                    for k in 0..=j {
                        a[j][k] -= f * e[k] + g * a[i][k];
                    }
                }
            }
        } else {
            e[i] = a[i][l];
        }
        d[i] = h;
    }
    for (i, di) in d.iter_mut().enumerate() {
        *di = a[i][i];
    }
    (d, e)
}

/// Implicit-shift QL on a symmetric tridiagonal matrix. Eigenvalues are left in `d`.
fn tridiagonal_ql(d: &mut [f64], e: &mut [f64]) -> Result<()> {
    const MAX_SWEEPS: usize = 60;
    let n = d.len();
    if n == 0 {
        return Ok(());
    }
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    for l in 0..n {
        let mut sweeps = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            sweeps += 1;
            if sweeps > MAX_SWEEPS {
                return Err(Error::convergence(
                    "tridiagonal QL",
                    format!("eigenvalue {l} not isolated after {MAX_SWEEPS} sweeps"),
                ));
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}
