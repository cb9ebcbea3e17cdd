//! Shared numerical substrate: bracketed root finding (Brent), adaptive
//! Gauss–Legendre quadrature, and finite-difference derivatives.

use crate::{Error, Result};
use std::sync::OnceLock;

/// Brent's method on a bracketing interval [a, b] with f(a)·f(b) <= 0.
/// Returns the root to within `xtol` (absolute, plus a machine-precision
/// term scaled to the iterate).
pub(crate) fn brent<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, xtol: f64) -> Option<f64> {
    let (mut a, mut b) = (a, b);
    let mut fa = f(a);
    let mut fb = f(b);
    if fa == 0.0 {
        return Some(a);
    }
    if fb == 0.0 {
        return Some(b);
    }
    if fa.signum() == fb.signum() {
        return None;
    }
    let mut c = a;
    let mut fc = fa;
    let mut d = b - a;
    let mut e = d;
    for _ in 0..200 {
        if fb.signum() == fc.signum() {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol1 = 2.0 * f64::EPSILON * b.abs() + 0.5 * xtol;
        let xm = 0.5 * (c - b);
        if xm.abs() <= tol1 || fb == 0.0 {
            return Some(b);
        }
        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            // inverse quadratic / secant step
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                let q0 = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * xm * q0 * (q0 - r) - (b - a) * (r - 1.0));
                q = (q0 - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            }
            p = p.abs();
            let min1 = 3.0 * xm * q - (tol1 * q).abs();
            let min2 = (e * q).abs();
            if 2.0 * p < min1.min(min2) {
                // accept interpolation
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        if d.abs() > tol1 {
            b += d;
        } else {
            b += tol1.copysign(xm);
        }
        fb = f(b);
    }
    Some(b)
}

/// 20-point Gauss–Legendre nodes/weights on [-1, 1], computed once by
/// Newton iteration on the Legendre recurrence.
fn gl20() -> &'static ([f64; 20], [f64; 20]) {
    static TABLE: OnceLock<([f64; 20], [f64; 20])> = OnceLock::new();
    TABLE.get_or_init(|| {
        const N: usize = 20;
        let mut xs = [0.0; N];
        let mut ws = [0.0; N];
        for i in 0..N {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (N as f64 + 0.5)).cos();
            for _ in 0..100 {
                // Legendre P_N(x) and its derivative via the three-term recurrence.
                let (mut p0, mut p1) = (1.0, x);
                for k in 2..=N {
                    let kf = k as f64;
                    let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                    p0 = p1;
                    p1 = p2;
                }
                let dp = N as f64 * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=N {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            let dp = N as f64 * (x * p1 - p0) / (x * x - 1.0);
            xs[i] = x;
            ws[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
        (xs, ws)
    })
}

fn gl_panel<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> f64 {
    let (xs, ws) = gl20();
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut acc = 0.0;
    for i in 0..20 {
        acc += ws[i] * f(mid + half * xs[i]);
    }
    acc * half
}

/// Adaptive Gauss–Legendre integration of `f` over [a, b] to relative
/// tolerance `rel_tol` (with an absolute floor for integrals near zero).
/// Interval endpoints are never evaluated, so integrable endpoint behavior
/// (after substitution) is safe.
pub(crate) fn integrate<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    rel_tol: f64,
    op: &'static str,
) -> Result<f64> {
    if a == b {
        return Ok(0.0);
    }
    let rough = gl_panel(f, a, b).abs();
    let floor = 1e-300;
    let tol = rel_tol * rough.max(floor);
    let mut acc = 0.0;
    // explicit stack of (a, b, whole, tol, depth)
    let whole = gl_panel(f, a, b);
    let mut stack = vec![(a, b, whole, tol, 0u32)];
    while let Some((a, b, whole, tol, depth)) = stack.pop() {
        let m = 0.5 * (a + b);
        let left = gl_panel(f, a, m);
        let right = gl_panel(f, m, b);
        let err = (left + right - whole).abs();
        if err <= tol || depth >= 40 {
            if depth >= 40 && err > tol.max(1e-250) {
                return Err(Error::QuadratureFailure { op, a, b });
            }
            acc += left + right;
        } else {
            stack.push((a, m, left, 0.5 * tol, depth + 1));
            stack.push((m, b, right, 0.5 * tol, depth + 1));
        }
    }
    Ok(acc)
}

/// Centered first derivative with step h.
pub(crate) fn derivative_centered<F: FnMut(f64) -> Result<f64>>(
    f: &mut F,
    x: f64,
    h: f64,
) -> Result<f64> {
    Ok((f(x + h)? - f(x - h)?) / (2.0 * h))
}

/// One-sided three-point first derivative at x, stepping in `dir` (+1/-1).
pub(crate) fn derivative_one_sided<F: FnMut(f64) -> Result<f64>>(
    f: &mut F,
    x: f64,
    h: f64,
    dir: f64,
) -> Result<f64> {
    let s = h * dir.signum();
    Ok((-3.0 * f(x)? + 4.0 * f(x + s)? - f(x + 2.0 * s)?) / (2.0 * s))
}

/// Trapezoid integral of tabulated values on an arbitrary strictly
/// increasing grid.
pub(crate) fn trapezoid(xs: &[f64], ys: &[f64]) -> f64 {
    let mut acc = 0.0;
    for i in 1..xs.len() {
        acc += 0.5 * (ys[i] + ys[i - 1]) * (xs[i] - xs[i - 1]);
    }
    acc
}
