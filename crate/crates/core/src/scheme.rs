//! The generic two-step scheme: fix the parent-Hamiltonian parameter of a
//! level by making its energy expectation stationary, then add the
//! second-order correction evaluated in that optimized basis.
//!
//! Concrete problems provide closed forms where they exist; this module is
//! the problem-agnostic route and doubles as a numeric check on them.

/// A one-parameter family of exactly solvable parent Hamiltonians for one level.
pub trait ParentFamily {
    /// ⟨Ψₙ(λ)|H|Ψₙ(λ)⟩.
    fn expectation(&self, lambda: f64) -> f64;

    /// Σₖ |⟨Ψₖ(λ)|H′|Ψₙ(λ)⟩|² / (Eₙ⁰(λ) − Eₖ⁰(λ)).
    fn second_order(&self, lambda: f64) -> f64;

    /// An interval known to contain the minimizing λ.
    fn search_interval(&self) -> (f64, f64);
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub lambda: f64,
    pub first_order: f64,
    pub second_order: f64,
}

impl Estimate {
    pub fn total(&self) -> f64 {
        self.first_order + self.second_order
    }
}

/// Minimizes a unimodal function on [a, b] to an interval width of `tol`.
pub fn golden_section_min(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> f64 {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    while (b - a).abs() > tol {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    0.5 * (a + b)
}

/// One parabolic step through x − h, x, x + h. Function values near a
/// minimum only resolve x to about √ε; a parabola fitted over a wider
/// stencil does not share that limit.
pub fn polish_minimum(f: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
    let (fl, f0, fr) = (f(x - h), f(x), f(x + h));
    let curvature = fl - 2.0 * f0 + fr;
    if curvature <= 0.0 {
        return x;
    }
    x + 0.5 * h * (fl - fr) / curvature
}

/// Numerically optimizes λ and evaluates both orders there.
pub fn optimize<F: ParentFamily + ?Sized>(family: &F, tol: f64) -> Estimate {
    let (a, b) = family.search_interval();
    let lambda = golden_section_min(|x| family.expectation(x), a, b, tol);
    Estimate {
        lambda,
        first_order: family.expectation(lambda),
        second_order: family.second_order(lambda),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    struct Parabola;

    impl ParentFamily for Parabola {
        fn expectation(&self, x: f64) -> f64 {
            (x - 1.25).powi(2) + 3.0
        }
        fn second_order(&self, x: f64) -> f64 {
            -x
        }
        fn search_interval(&self) -> (f64, f64) {
            (0.0, 10.0)
        }
    }

    #[test]
    fn golden_section_finds_vertex() {
        let x = golden_section_min(|x| (x - 0.3).powi(2), -2.0, 5.0, 1e-12);
        assert!((x - 0.3).abs() < 1e-10);
    }

    #[test]
    fn polish_lands_on_quadratic_vertex() {
        let f = |x: f64| 4.0 * (x - 0.7).powi(2) - 5.0;
        assert!((polish_minimum(f, 0.7 + 3e-8, 1e-2) - 0.7).abs() < 1e-12);
        // concave stencil leaves the point alone
        assert_eq!(polish_minimum(|x: f64| -x * x, 0.2, 0.1), 0.2);
    }

    #[test]
    fn optimize_combines_orders() {
        // a flat minimum only pins λ to about √ε
        let est = optimize(&Parabola, 1e-12);
        assert!((est.lambda - 1.25).abs() < 1e-7);
        assert!((est.first_order - 3.0).abs() < 1e-14);
        assert!((est.total() - 1.75).abs() < 1e-7);
    }
}
