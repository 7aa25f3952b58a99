//! Simultaneous complex root refinement (Aberth–Ehrlich). Used only to
//! produce witness points and for cross-validation; every decision that
//! matters is made by exact arithmetic elsewhere.

use crate::polyring::UnivariatePoly;
use num::complex::Complex64;

/// Approximates all complex roots of `p` (with multiplicity). Accurate to
/// roughly 1e-12 relative for the well-separated roots that arise here.
pub fn complex_roots(p: &UnivariatePoly) -> Vec<Complex64> {
    let coeffs: Vec<f64> = p.coeffs().iter().map(crate::polyring::rational_to_f64).collect();
    if coeffs.len() <= 1 {
        return Vec::new();
    }
    // strip roots at the origin first (they are exact)
    let zeros = coeffs.iter().take_while(|c| **c == 0.0).count();
    let mut roots = vec![Complex64::new(0.0, 0.0); zeros];
    let body = &coeffs[zeros..];
    let n = body.len() - 1;
    if n == 0 {
        return roots;
    }
    let lead = body[n];
    let radius = 1.0
        + body[..n]
            .iter()
            .map(|c| (c / lead).abs())
            .fold(0.0f64, f64::max);
    let mut zs: Vec<Complex64> = (0..n)
        .map(|k| {
            // spiral start, off the real axis
            let angle = 2.0 * std::f64::consts::PI * (k as f64) / (n as f64) + 0.4;
            Complex64::from_polar(radius * (0.5 + 0.5 * (k as f64 + 1.0) / n as f64), angle)
        })
        .collect();
    let eval = |x: Complex64| -> (Complex64, Complex64) {
        let mut v = Complex64::new(0.0, 0.0);
        let mut d = Complex64::new(0.0, 0.0);
        for &c in body.iter().rev() {
            d = d * x + v;
            v = v * x + c;
        }
        (v, d)
    };
    for _ in 0..200 {
        let mut moved: f64 = 0.0;
        let snapshot = zs.clone();
        for i in 0..n {
            let (v, d) = eval(zs[i]);
            if v.norm() == 0.0 {
                continue;
            }
            let newton = v / d;
            let mut repulse = Complex64::new(0.0, 0.0);
            for (j, &zj) in snapshot.iter().enumerate() {
                if j != i {
                    repulse += (zs[i] - zj).finv();
                }
            }
            let denom = Complex64::new(1.0, 0.0) - newton * repulse;
            let step = if denom.norm() > 1e-12 { newton / denom } else { newton };
            zs[i] -= step;
            moved = moved.max(step.norm());
        }
        if moved < 1e-14 * radius {
            break;
        }
    }
    roots.extend(zs);
    roots
}
