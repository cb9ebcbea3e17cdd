//! Semiclassical particle and kinetic-energy densities for N noninteracting
//! 1-D fermions in a smooth single-well potential.
//!
//! The library is organized bottom-up:
//!
//! * [`potentials`] — potential models and classical-orbit quantities
//!   (turning points, momentum, action, frequency, traversal time);
//! * [`airy`] — Airy functions, Bernoulli numbers, and the ξ series;
//! * [`quantize`] — WKB spectrum, Fermi-level construction, γ scaling;
//! * [`langer`] — the uniform single-orbital wavefunction and its z variable;
//! * [`uniform`] — the headline density and kinetic-energy-density formulas,
//!   Thomas-Fermi baselines, and regional asymptotic estimates;
//! * [`reference`] — independent oracles (grid eigensolver, closed forms).

pub mod airy;
mod dd;
mod numerics;
pub mod potentials;
pub mod quantize;
pub mod langer;
pub mod reference;
pub mod uniform;

/// Errors shared by every module.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// The energy does not support a classical bound orbit in this well.
    #[error("no bound orbit: E = {energy:.6e} outside ({vmin:.6e}, {sup:.6e})")]
    NoBoundOrbit { energy: f64, vmin: f64, sup: f64 },
    /// A turning point failed the simple-zero check.
    #[error("degenerate turning point at x = {x:.6e}: |v'| = {slope:.3e}")]
    DegenerateTurningPoint { x: f64, slope: f64 },
    /// Adaptive quadrature could not reach its tolerance.
    #[error("quadrature failure in {op} on [{a:.6e}, {b:.6e}]")]
    QuadratureFailure { op: &'static str, a: f64, b: f64 },
    /// The potential cannot hold the requested quantum number at this ħ.
    #[error("spectrum overflow: no level at lambda = {lambda} for hbar = {hbar} (bound range tops out at {sup:.6e})")]
    SpectrumOverflow { lambda: f64, hbar: f64, sup: f64 },
    /// γ scaling would produce a non-integer particle number.
    #[error("gamma scaling: N = {n} / gamma = {gamma} is not an integer")]
    NonIntegerParticleNumber { n: u32, gamma: f64 },
    /// ξ₀ was evaluated too close to a csc pole.
    #[error("xi0 pole: alpha = {alpha:.9e} within {threshold:.1e} of {n}·pi")]
    PoleAtResonance { alpha: f64, n: i64, threshold: f64 },
    /// A branch-continued evaluation came back with a non-negligible
    /// imaginary part; this flags a bug, not a data problem.
    #[error("complex residual in {op}: imag {imag:.3e} vs real {real:.3e}")]
    ComplexResidual { op: &'static str, real: f64, imag: f64 },
    /// The eigensolver grid does not contain the requested orbitals.
    #[error("grid too small: boundary amplitude {amplitude:.3e} of max {max:.3e}")]
    GridTooSmall { amplitude: f64, max: f64 },
    /// A requested level sits at or above the binding range.
    #[error("continuum reached: level {level} at E = {energy:.6e} vs binding limit {sup:.6e}")]
    ContinuumReached { level: usize, energy: f64, sup: f64 },
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Γ(1/3), used by the turning-point density law.
pub const GAMMA_ONE_THIRD: f64 = 2.678_938_534_707_747_6;
/// Γ(2/3), used by the turning-point kinetic-energy law.
pub const GAMMA_TWO_THIRDS: f64 = 1.354_117_939_426_400_4;
