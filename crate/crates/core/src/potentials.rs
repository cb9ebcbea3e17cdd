//! Potential models and the classical-orbit quantities every density formula
//! is built from: turning points, momentum, action, orbit frequency, and
//! traversal time.
//!
//! All built-in wells are smooth single-minimum potentials. Actions and times
//! are integrated with the √-singularity at each turning point removed by the
//! substitution x = x_t ± u², splitting the orbit at its geometric midpoint so
//! both endpoints are regular.

use std::f64::consts::PI;

use crate::numerics::integrate;
use crate::{Error, Result};

/// Classification of a position relative to the classical orbit at some E.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    /// E > v(x): real momentum.
    Allowed,
    /// E < v(x): evanescent, imaginary momentum.
    Forbidden,
    /// |E − v(x)| below tolerance.
    Turning,
}

/// Which turning point an action or time is anchored to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// The classical orbit geometry at one energy.
#[derive(Debug, Clone, PartialEq)]
pub struct TurningGeometry {
    pub energy: f64,
    pub x_minus: f64,
    pub x_plus: f64,
    /// Equal-action point: S(x_match, x₋) = S(x₊, x_match). Filled in by
    /// [`crate::langer::matching_point`] / the system builder, not by
    /// [`turning_points`].
    pub x_match: Option<f64>,
}

/// A smooth single-well binding potential.
#[derive(Debug, Clone, PartialEq)]
pub struct PotentialModel {
    kind: Kind,
}

#[derive(Debug, Clone, PartialEq)]
enum Kind {
    /// v(x) = x²/2.
    Harmonic,
    /// v(x) = d·(1 − e^{−ax})².
    Morse { d: f64, a: f64 },
    /// v(x) = x⁴/4 + x²/2.
    Quartic,
    /// v(x) = d·tanh²(ax): the sech² well shifted so its minimum is 0.
    PoschlTeller { d: f64, a: f64 },
}

impl PotentialModel {
    pub fn harmonic() -> Self {
        Self { kind: Kind::Harmonic }
    }

    pub fn morse(d: f64, a: f64) -> Self {
        assert!(d > 0.0 && a > 0.0, "morse requires d > 0 and a > 0");
        Self { kind: Kind::Morse { d, a } }
    }

    pub fn quartic() -> Self {
        Self { kind: Kind::Quartic }
    }

    pub fn poschl_teller(d: f64, a: f64) -> Self {
        assert!(d > 0.0 && a > 0.0, "poschl_teller requires d > 0 and a > 0");
        Self { kind: Kind::PoschlTeller { d, a } }
    }

    pub fn name(&self) -> &'static str {
        match self.kind {
            Kind::Harmonic => "harmonic",
            Kind::Morse { .. } => "morse",
            Kind::Quartic => "quartic",
            Kind::PoschlTeller { .. } => "poschl_teller",
        }
    }

    /// Named parameters, in a fixed order suitable for config echoing.
    pub fn params(&self) -> Vec<(&'static str, f64)> {
        match self.kind {
            Kind::Harmonic | Kind::Quartic => Vec::new(),
            Kind::Morse { d, a } | Kind::PoschlTeller { d, a } => vec![("d", d), ("a", a)],
        }
    }

    pub fn v(&self, x: f64) -> f64 {
        match self.kind {
            Kind::Harmonic => 0.5 * x * x,
            Kind::Morse { d, a } => {
                let u = 1.0 - (-a * x).exp();
                d * u * u
            }
            Kind::Quartic => 0.25 * x * x * x * x + 0.5 * x * x,
            Kind::PoschlTeller { d, a } => {
                let t = (a * x).tanh();
                d * t * t
            }
        }
    }

    pub fn v_prime(&self, x: f64) -> f64 {
        match self.kind {
            Kind::Harmonic => x,
            Kind::Morse { d, a } => {
                let e = (-a * x).exp();
                2.0 * d * a * e * (1.0 - e)
            }
            Kind::Quartic => x * x * x + x,
            Kind::PoschlTeller { d, a } => {
                let t = (a * x).tanh();
                let sech2 = 1.0 - t * t;
                2.0 * d * a * t * sech2
            }
        }
    }

    pub fn vmin_location(&self) -> f64 {
        0.0
    }

    pub fn vmin_value(&self) -> f64 {
        0.0
    }

    /// Supremum of v over the escape direction; bound orbits need E below it.
    pub fn sup_value(&self) -> f64 {
        match self.kind {
            Kind::Harmonic | Kind::Quartic => f64::INFINITY,
            Kind::Morse { d, .. } | Kind::PoschlTeller { d, .. } => d,
        }
    }

    pub fn domain(&self) -> (f64, f64) {
        (f64::NEG_INFINITY, f64::INFINITY)
    }
}

/// Absolute x tolerance for turning-point roots.
const ROOT_XTOL: f64 = 1e-13;
/// |v′| below this at a root means the zero of p² is not simple.
const DEGENERATE_SLOPE: f64 = 1e-10;
/// Default relative tolerance for action/time quadrature.
const ACTION_REL_TOL: f64 = 1e-11;
/// Tight tolerance for the two evaluations inside the dI/dE difference,
/// where quadrature noise is amplified by 1/(2h).
const FREQUENCY_REL_TOL: f64 = 1e-13;

/// Locates the two simple roots of v(x) = E bracketing the well.
///
/// `x_match` is left unset; it is the quantization layer's job to fill it.
pub fn turning_points(pot: &PotentialModel, e: f64) -> Result<TurningGeometry> {
    let vmin = pot.vmin_value();
    let sup = pot.sup_value();
    if e <= vmin || e >= sup {
        return Err(Error::NoBoundOrbit { energy: e, vmin, sup });
    }
    let x0 = pot.vmin_location();
    let x_minus = scan_root(pot, e, x0, -1.0)?;
    let x_plus = scan_root(pot, e, x0, 1.0)?;
    for x in [x_minus, x_plus] {
        let slope = pot.v_prime(x);
        if slope.abs() < DEGENERATE_SLOPE {
            return Err(Error::DegenerateTurningPoint { x, slope });
        }
    }
    debug_assert!(pot.v_prime(x_minus) < 0.0 && pot.v_prime(x_plus) > 0.0);
    Ok(TurningGeometry { energy: e, x_minus, x_plus, x_match: None })
}

/// Geometric outward scan from the minimum until v crosses E, then a
/// bracketed root solve.
fn scan_root(pot: &PotentialModel, e: f64, x0: f64, dir: f64) -> Result<f64> {
    let mut step = 0.25;
    let mut prev = x0;
    for _ in 0..80 {
        let x = x0 + dir * step;
        if pot.v(x) >= e {
            return crate::numerics::brent(|t| pot.v(t) - e, prev.min(x), prev.max(x), ROOT_XTOL)
                .ok_or(Error::NoBoundOrbit { energy: e, vmin: pot.vmin_value(), sup: pot.sup_value() });
        }
        prev = x;
        step *= 1.6;
    }
    // v never reached E in this direction (asymptotically bounded well).
    Err(Error::NoBoundOrbit { energy: e, vmin: pot.vmin_value(), sup: pot.sup_value() })
}

/// |p(x, E)| = √(2m|E − v|) plus the region classification.
///
/// In the forbidden region the caller applies the e^{iπ/2} branch; only the
/// magnitude is returned.
pub fn momentum(pot: &PotentialModel, x: f64, e: f64, mass: f64) -> (f64, Region) {
    let dv = e - pot.v(x);
    let tol = 1e-12 * e.abs().max(1.0);
    if dv.abs() <= tol {
        return (0.0, Region::Turning);
    }
    let p = (2.0 * mass * dv.abs()).sqrt();
    (p, if dv > 0.0 { Region::Allowed } else { Region::Forbidden })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Kernel {
    /// |p|: integrates to an action.
    Momentum,
    /// m/|p|: integrates to a traversal time.
    InverseMomentum,
}

fn kernel_value(pot: &PotentialModel, e: f64, mass: f64, x: f64, kernel: Kernel) -> f64 {
    let dv = (e - pot.v(x)).abs();
    let p = (2.0 * mass * dv).sqrt();
    match kernel {
        Kernel::Momentum => p,
        Kernel::InverseMomentum => mass / p,
    }
}

/// ∫ of the kernel between a turning point `x_t` and `x` (either side), with
/// the substitution x′ = x_t ± u² flattening the √ behavior at `x_t`.
fn endpoint_integral(
    pot: &PotentialModel,
    e: f64,
    mass: f64,
    kernel: Kernel,
    x_t: f64,
    x: f64,
    rel_tol: f64,
    op: &'static str,
) -> Result<f64> {
    let span = x - x_t;
    if span == 0.0 {
        return Ok(0.0);
    }
    let s = span.signum();
    let u_max = span.abs().sqrt();
    let f = move |u: f64| 2.0 * u * kernel_value(pot, e, mass, x_t + s * u * u, kernel);
    integrate(&f, 0.0, u_max, rel_tol, op)
}

/// Kernel integral between the `side` turning point and `x`, valid for `x`
/// anywhere on that side: in the forbidden region beyond the turning point,
/// or anywhere in the allowed region up to the far turning point (where the
/// far endpoint's own substitution takes over past the midpoint).
pub(crate) fn one_sided(
    pot: &PotentialModel,
    geom: &TurningGeometry,
    side: Side,
    kernel: Kernel,
    x: f64,
    mass: f64,
    rel_tol: f64,
    op: &'static str,
) -> Result<f64> {
    let e = geom.energy;
    let (near, far) = match side {
        Side::Left => (geom.x_minus, geom.x_plus),
        Side::Right => (geom.x_plus, geom.x_minus),
    };
    let inward = (far - near).signum();
    let depth = (x - near) * inward;
    let xc = 0.5 * (geom.x_minus + geom.x_plus);
    if depth <= 0.0 || (x - xc) * inward <= 0.0 {
        // Forbidden side of `near`, or allowed but not past the midpoint.
        endpoint_integral(pot, e, mass, kernel, near, x, rel_tol, op)
    } else {
        debug_assert!(
            (x - far) * inward <= 1e-12 * (1.0 + far.abs()),
            "one_sided evaluated across the far turning point"
        );
        let near_half = endpoint_integral(pot, e, mass, kernel, near, xc, rel_tol, op)?;
        let far_half = endpoint_integral(pot, e, mass, kernel, far, xc, rel_tol, op)?;
        let far_part = endpoint_integral(pot, e, mass, kernel, far, x, rel_tol, op)?;
        Ok(near_half + far_half - far_part)
    }
}

/// Equal-action point: the unique x with S(x, x₋) = S(x₊, x), found by
/// Newton steps on the monotone action (dS/dx = |p|) with a bisection
/// safeguard. Mass-independent, since mass scales the action uniformly.
pub(crate) fn equal_action_point(pot: &PotentialModel, geom: &TurningGeometry) -> Result<f64> {
    const OP: &str = "equal_action_point";
    let e = geom.energy;
    let xc = 0.5 * (geom.x_minus + geom.x_plus);
    let left = endpoint_integral(pot, e, 1.0, Kernel::Momentum, geom.x_minus, xc, ACTION_REL_TOL, OP)?;
    let right = endpoint_integral(pot, e, 1.0, Kernel::Momentum, geom.x_plus, xc, ACTION_REL_TOL, OP)?;
    let half = 0.5 * (left + right);
    let mut lo = geom.x_minus;
    let mut hi = geom.x_plus;
    let mut x = xc;
    for _ in 0..100 {
        let s = one_sided(pot, geom, Side::Left, Kernel::Momentum, x, 1.0, ACTION_REL_TOL, OP)?;
        let residual = s - half;
        if residual.abs() <= 5e-11 * half {
            return Ok(x);
        }
        if residual > 0.0 {
            hi = x;
        } else {
            lo = x;
        }
        let (p, _) = momentum(pot, x, e, 1.0);
        let mut next = if p > 0.0 { x - residual / p } else { 0.5 * (lo + hi) };
        if !(next > lo && next < hi) {
            next = 0.5 * (lo + hi);
        }
        x = next;
    }
    Err(Error::QuadratureFailure { op: OP, a: geom.x_minus, b: geom.x_plus })
}

/// Action magnitude |S| between `x` and the turning point on its side of the
/// equal-action point x_m: measured from x₋ for x ≤ x_m, and to x₊ beyond.
/// Forbidden-region x yields the evanescent action from the adjacent turning
/// point (the caller applies the complex branch).
pub fn action(pot: &PotentialModel, x: f64, e: f64, mass: f64) -> Result<(f64, Region)> {
    let mut geom = turning_points(pot, e)?;
    let x_match = equal_action_point(pot, &geom)?;
    geom.x_match = Some(x_match);
    let side = if x <= x_match { Side::Left } else { Side::Right };
    let (_, region) = momentum(pot, x, e, mass);
    let s = one_sided(pot, &geom, side, Kernel::Momentum, x, mass, ACTION_REL_TOL, "action")?;
    Ok((s, region))
}

/// I(E) = ∮ p dx = 2·S(x₊, x₋, E).
pub fn full_action(pot: &PotentialModel, e: f64, mass: f64) -> Result<f64> {
    full_action_tol(pot, e, mass, ACTION_REL_TOL)
}

fn full_action_tol(pot: &PotentialModel, e: f64, mass: f64, rel_tol: f64) -> Result<f64> {
    const OP: &str = "full_action";
    let geom = turning_points(pot, e)?;
    let xc = 0.5 * (geom.x_minus + geom.x_plus);
    let left = endpoint_integral(pot, e, mass, Kernel::Momentum, geom.x_minus, xc, rel_tol, OP)?;
    let right = endpoint_integral(pot, e, mass, Kernel::Momentum, geom.x_plus, xc, rel_tol, OP)?;
    Ok(2.0 * (left + right))
}

/// Classical orbit frequency ω(E) = 2π/(dI/dE), with dI/dE by centered
/// difference at step h = 1e−5·max(1, |E|).
pub fn frequency(pot: &PotentialModel, e: f64, mass: f64) -> Result<f64> {
    let h = 1e-5 * e.abs().max(1.0);
    let plus = full_action_tol(pot, e + h, mass, FREQUENCY_REL_TOL)?;
    let minus = full_action_tol(pot, e - h, mass, FREQUENCY_REL_TOL)?;
    Ok(4.0 * PI * h / (plus - minus))
}

/// τ(x, E) = ∫ₓ₋ˣ m dx′/|p|: time to traverse from the left turning point,
/// in [0, half-period] across the allowed region. Forbidden-region x returns
/// the analogous imaginary-time magnitude from the adjacent turning point.
pub fn traversal_time(pot: &PotentialModel, x: f64, e: f64, mass: f64) -> Result<f64> {
    const OP: &str = "traversal_time";
    let geom = turning_points(pot, e)?;
    if x < geom.x_minus {
        endpoint_integral(pot, e, mass, Kernel::InverseMomentum, geom.x_minus, x, ACTION_REL_TOL, OP)
    } else if x > geom.x_plus {
        endpoint_integral(pot, e, mass, Kernel::InverseMomentum, geom.x_plus, x, ACTION_REL_TOL, OP)
    } else {
        one_sided(pot, &geom, Side::Left, Kernel::InverseMomentum, x, mass, ACTION_REL_TOL, OP)
    }
}

/// Side-anchored traversal time used by the uniform formulas: measured
/// from the `side` turning point toward (or beyond) it.
pub(crate) fn time_from(
    pot: &PotentialModel,
    geom: &TurningGeometry,
    side: Side,
    x: f64,
    mass: f64,
) -> Result<f64> {
    one_sided(pot, geom, side, Kernel::InverseMomentum, x, mass, ACTION_REL_TOL, "time_from")
}

/// Side-anchored action magnitude used by the uniform formulas.
pub(crate) fn action_from(
    pot: &PotentialModel,
    geom: &TurningGeometry,
    side: Side,
    x: f64,
    mass: f64,
) -> Result<f64> {
    one_sided(pot, geom, side, Kernel::Momentum, x, mass, ACTION_REL_TOL, "action_from")
}
