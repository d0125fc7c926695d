//! Runge–Kutta–Fehlberg 4(5) with adaptive step size.

use crate::error::{Error, Result};

const C: [f64; 6] = [0.0, 1.0 / 4.0, 3.0 / 8.0, 12.0 / 13.0, 1.0, 1.0 / 2.0];
const A: [[f64; 5]; 6] = [
    [0.0, 0.0, 0.0, 0.0, 0.0],
    [1.0 / 4.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 32.0, 9.0 / 32.0, 0.0, 0.0, 0.0],
    [1932.0 / 2197.0, -7200.0 / 2197.0, 7296.0 / 2197.0, 0.0, 0.0],
    [439.0 / 216.0, -8.0, 3680.0 / 513.0, -845.0 / 4104.0, 0.0],
    [-8.0 / 27.0, 2.0, -3544.0 / 2565.0, 1859.0 / 4104.0, -11.0 / 40.0],
];
const B4: [f64; 6] = [25.0 / 216.0, 0.0, 1408.0 / 2565.0, 2197.0 / 4104.0, -1.0 / 5.0, 0.0];
const B5: [f64; 6] = [
    16.0 / 135.0,
    0.0,
    6656.0 / 12825.0,
    28561.0 / 56430.0,
    -9.0 / 50.0,
    2.0 / 55.0,
];

const SAFETY: f64 = 0.9;
const MAX_GROWTH: f64 = 5.0;
const MAX_SHRINK: f64 = 0.2;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rkf45 {
    /// Per-step error bound, scaled by (1 + |y|) per component.
    pub tol: f64,
    pub h_max: f64,
    pub max_steps: usize,
}

impl Rkf45 {
    pub fn new(tol: f64, h_max: f64) -> Self {
        Rkf45 {
            tol,
            h_max,
            max_steps: 1_000_000,
        }
    }

    /// One trial step. Returns the fifth-order solution and the scaled error norm.
    fn step<const N: usize>(
        &self,
        f: &impl Fn(f64, &[f64; N]) -> [f64; N],
        x: f64,
        y: &[f64; N],
        h: f64,
    ) -> ([f64; N], f64) {
        let mut k = [[0.0; N]; 6];
        for s in 0..6 {
            let mut ys = *y;
            for (j, kj) in k.iter().enumerate().take(s) {
                for i in 0..N {
                    ys[i] += h * A[s][j] * kj[i];
                }
            }
            k[s] = f(x + C[s] * h, &ys);
        }
        let mut y5 = *y;
        let mut err: f64 = 0.0;
        for i in 0..N {
            let mut d4 = 0.0;
            let mut d5 = 0.0;
            for s in 0..6 {
                d4 += B4[s] * k[s][i];
                d5 += B5[s] * k[s][i];
            }
            y5[i] += h * d5;
            let e = (h * (d5 - d4)).abs() / (self.tol * (1.0 + y[i].abs().max(y5[i].abs())));
            err = err.max(e);
        }
        (y5, err)
    }

    /// Integrates y′ = f(x, y) from `x0` to `x1` (x1 > x0), calling `observe`
    /// after every accepted step. Propagates the fifth-order solution.
    pub fn integrate<const N: usize>(
        &self,
        f: impl Fn(f64, &[f64; N]) -> [f64; N],
        x0: f64,
        y0: [f64; N],
        x1: f64,
        mut observe: impl FnMut(f64, &[f64; N]),
    ) -> Result<[f64; N]> {
        let mut x = x0;
        let mut y = y0;
        let mut h = self.h_max.min(x1 - x0);
        let h_floor = 1e-14 * (x1 - x0).abs().max(1.0);
        let mut steps = 0;
        while x < x1 {
            steps += 1;
            if steps > self.max_steps {
                return Err(Error::convergence("RKF45", format!("step budget exhausted at x = {x}")));
            }
            h = h.min(x1 - x);
            let (y_new, err) = self.step(&f, x, &y, h);
            if !err.is_finite() {
                return Err(Error::convergence("RKF45", format!("non-finite state at x = {x}")));
            }
            if err <= 1.0 {
                x = if x1 - x <= h { x1 } else { x + h };
                y = y_new;
                observe(x, &y);
            } else if h <= h_floor {
                return Err(Error::convergence("RKF45", format!("step underflow at x = {x}")));
            }
            let factor = if err == 0.0 {
                MAX_GROWTH
            } else {
                (SAFETY * err.powf(-0.2)).clamp(MAX_SHRINK, MAX_GROWTH)
            };
            h = (h * factor).min(self.h_max);
        }
        Ok(y)
    }
}
