//! Airy functions on the real line and the cosecant-correction series.
//!
//! `airy_ai` / `airy_ai_prime` evaluate Ai and Ai′ to near machine accuracy,
//! using a double-double Maclaurin sum for |z| ≤ 9 (where the two defining
//! series cancel catastrophically in plain f64) and Poincaré asymptotic
//! expansions beyond. Bi is computed alongside for Wronskian validation but
//! stays crate-internal.
//!
//! The ξ functions collect the oscillation-average corrections that multiply
//! Ai·Ai′ products in the density formulas: `xi0` is csc(α) − 1/α, evaluated
//! through its Bernoulli-number power series near α = 0 where the closed form
//! cancels, and `xi_series` gives the fixed polynomial truncations of the two
//! next-order corrections used for residual diagnostics.

use std::f64::consts::{FRAC_PI_4, PI};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::dd::Dd;
use crate::{Error, Result};

/// Ai and Ai′ evaluated at a common argument.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AiryPair {
    pub argument: f64,
    pub ai: f64,
    pub ai_prime: f64,
}

/// Evaluates Ai and Ai′ together (one series pass instead of two).
pub fn airy_pair(z: f64) -> AiryPair {
    let (ai, ai_prime, _, _) = airy_all(z);
    AiryPair { argument: z, ai, ai_prime }
}

/// Airy function Ai(z).
///
/// Absolute error ≤ 1e−12 for |z| ≤ 1, relative error ≤ 1e−10 elsewhere.
/// Underflows gracefully to 0 for large positive z.
pub fn airy_ai(z: f64) -> f64 {
    airy_all(z).0
}

/// Derivative Ai′(z), same accuracy contract as [`airy_ai`].
pub fn airy_ai_prime(z: f64) -> f64 {
    airy_all(z).1
}

pub(crate) fn airy_bi(z: f64) -> f64 {
    airy_all(z).2
}

pub(crate) fn airy_bi_prime(z: f64) -> f64 {
    airy_all(z).3
}

/// Series/asymptotic crossover. At |z| = 9 the asymptotic truncation error
/// ~e^{−(4/3)|z|^{3/2}} is already below f64 resolution, while the Maclaurin
/// cancellation (~e^{2ζ} amplitude against an O(1) result) still leaves ~16
/// safe digits in double-double.
const SERIES_LIMIT: f64 = 9.0;

/// Ai(0) = 3^{−2/3}/Γ(2/3) and −Ai′(0) = 3^{−1/3}/Γ(1/3) in double-double.
const AI0: Dd = Dd { hi: 0.3550280538878172, lo: 2.05233632436212e-17 };
const NEG_AIP0: Dd = Dd { hi: 0.2588194037928068, lo: -2.522243111610832e-17 };
const SQRT3: Dd = Dd { hi: 1.7320508075688772, lo: 1.0035084221806903e-16 };

fn airy_all(z: f64) -> (f64, f64, f64, f64) {
    if z.abs() <= SERIES_LIMIT {
        airy_maclaurin(z)
    } else if z > 0.0 {
        airy_asymptotic_pos(z)
    } else {
        airy_asymptotic_neg(z)
    }
}

/// Maclaurin evaluation in double-double arithmetic.
///
/// f and g are the two power-series solutions of w″ = z·w with
/// (f, f′) = (1, 0) and (g, g′) = (0, 1) at z = 0; then
/// Ai = Ai(0)·f + Ai′(0)·g and Bi = √3·(Ai(0)·f − Ai′(0)·g).
fn airy_maclaurin(z: f64) -> (f64, f64, f64, f64) {
    let zd = Dd::from_f64(z);
    let z2 = zd.mul(zd);
    let z3 = z2.mul(zd);

    let mut f = Dd::from_f64(1.0);
    let mut g = zd;
    let mut fp = Dd::ZERO;
    let mut gp = Dd::from_f64(1.0);
    // Running terms of f, g, f′, g′ respectively.
    let mut t = Dd::from_f64(1.0);
    let mut s = zd;
    let mut w = Dd::ZERO;
    let mut v = Dd::from_f64(1.0);

    for k in 1..=250u32 {
        let kf = f64::from(k);
        t = t.mul(z3).div_f64((3.0 * kf - 1.0) * (3.0 * kf));
        f = f.add(t);
        s = s.mul(z3).div_f64((3.0 * kf) * (3.0 * kf + 1.0));
        g = g.add(s);
        if k == 1 {
            w = z2.div_f64(2.0);
        } else {
            w = w.mul(z3).div_f64((3.0 * kf - 3.0) * (3.0 * kf - 1.0));
        }
        fp = fp.add(w);
        v = v.mul(z3).div_f64((3.0 * kf - 2.0) * (3.0 * kf));
        gp = gp.add(v);

        let scale = f.hi.abs().max(g.hi.abs()).max(1.0);
        let largest = t.hi.abs().max(s.hi.abs()).max(w.hi.abs()).max(v.hi.abs());
        if largest < 1.0e-38 * scale {
            break;
        }
    }

    let ai = AI0.mul(f).sub(NEG_AIP0.mul(g));
    let aip = AI0.mul(fp).sub(NEG_AIP0.mul(gp));
    let bi = SQRT3.mul(AI0.mul(f).add(NEG_AIP0.mul(g)));
    let bip = SQRT3.mul(AI0.mul(fp).add(NEG_AIP0.mul(gp)));
    (ai.to_f64(), aip.to_f64(), bi.to_f64(), bip.to_f64())
}

/// Poincaré coefficient ratio u_k/u_{k−1}; v_k = u_k·(6k+1)/(1−6k).
fn poincare_ratio(kf: f64) -> f64 {
    (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0) / (216.0 * kf * (2.0 * kf - 1.0))
}

/// Exponential-regime expansions for z > 9, truncated at the smallest term.
fn airy_asymptotic_pos(z: f64) -> (f64, f64, f64, f64) {
    let sqz = z.sqrt();
    let zeta = 2.0 / 3.0 * z * sqz;
    let z14 = sqz.sqrt();

    let mut alt_u = 1.0; // Σ (−1)^k u_k ζ^{−k}  (Ai)
    let mut alt_v = 1.0; // Σ (−1)^k v_k ζ^{−k}  (Ai′)
    let mut pos_u = 1.0; // Σ u_k ζ^{−k}         (Bi)
    let mut pos_v = 1.0; // Σ v_k ζ^{−k}         (Bi′)
    let mut tu = 1.0f64;
    let mut prev = f64::INFINITY;
    let mut sign = 1.0;
    for k in 1..=200u32 {
        let kf = f64::from(k);
        tu *= poincare_ratio(kf) / zeta;
        if !(tu.abs() < prev) {
            break; // divergence onset of the asymptotic series
        }
        prev = tu.abs();
        let tv = tu * (6.0 * kf + 1.0) / (1.0 - 6.0 * kf);
        sign = -sign;
        alt_u += sign * tu;
        alt_v += sign * tv;
        pos_u += tu;
        pos_v += tv;
        if tu.abs() < 1.0e-18 {
            break;
        }
    }

    let sqrt_pi = PI.sqrt();
    let decay = (-zeta).exp();
    let grow = zeta.exp();
    let ai = decay / (2.0 * sqrt_pi * z14) * alt_u;
    let aip = -z14 * decay / (2.0 * sqrt_pi) * alt_v;
    let bi = grow / (sqrt_pi * z14) * pos_u;
    let bip = z14 * grow / sqrt_pi * pos_v;
    (ai, aip, bi, bip)
}

/// Oscillatory-regime expansions for z < −9: cos/sin(ζ − π/4) combinations
/// of the even/odd splits of the Poincaré series.
fn airy_asymptotic_neg(z: f64) -> (f64, f64, f64, f64) {
    let w = -z;
    let sqw = w.sqrt();
    let zeta = 2.0 / 3.0 * w * sqw;
    let w14 = sqw.sqrt();

    let mut p = 1.0; // Σ (−1)^m u_{2m} ζ^{−2m}
    let mut q = 0.0; // Σ (−1)^m u_{2m+1} ζ^{−2m−1}
    let mut r = 1.0; // Σ (−1)^m v_{2m} ζ^{−2m}
    let mut s = 0.0; // Σ (−1)^m v_{2m+1} ζ^{−2m−1}
    let mut tu = 1.0f64;
    let mut prev = f64::INFINITY;
    for k in 1..=200u32 {
        let kf = f64::from(k);
        tu *= poincare_ratio(kf) / zeta;
        if !(tu.abs() < prev) {
            break;
        }
        prev = tu.abs();
        let tv = tu * (6.0 * kf + 1.0) / (1.0 - 6.0 * kf);
        let sgn = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
        if k % 2 == 1 {
            q += sgn * tu;
            s += sgn * tv;
        } else {
            p += sgn * tu;
            r += sgn * tv;
        }
        if tu.abs() < 1.0e-18 {
            break;
        }
    }

    let sqrt_pi = PI.sqrt();
    let (sin_x, cos_x) = (zeta - FRAC_PI_4).sin_cos();
    let ai = (cos_x * p + sin_x * q) / (sqrt_pi * w14);
    let aip = w14 / sqrt_pi * (sin_x * r - cos_x * s);
    let bi = (-sin_x * p + cos_x * q) / (sqrt_pi * w14);
    let bip = w14 / sqrt_pi * (cos_x * r + sin_x * s);
    (ai, aip, bi, bip)
}

/// Exact Bernoulli number B_{2k} for 1 ≤ k ≤ 30.
pub fn bernoulli_even(k: usize) -> BigRational {
    assert!((1..=30).contains(&k), "bernoulli_even supports 1 <= k <= 30, got {k}");
    bernoulli_table()[k].clone()
}

/// B_0, B_2, …, B_60 (slot k holds B_{2k}) via the defining recurrence
/// Σ_{j=0}^{m} C(m+1, j)·B_j = 0.
fn bernoulli_table() -> &'static Vec<BigRational> {
    static TABLE: OnceLock<Vec<BigRational>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut all: Vec<BigRational> = Vec::with_capacity(61);
        all.push(BigRational::one());
        for m in 1..=60usize {
            let mut acc = BigRational::zero();
            let mut binom = BigInt::one(); // C(m+1, j), starting at j = 0
            for (j, b) in all.iter().enumerate() {
                acc += BigRational::from_integer(binom.clone()) * b;
                binom = binom * BigInt::from(m + 1 - j) / BigInt::from(j + 1);
            }
            let b_m = -acc / BigRational::from_integer(BigInt::from(m + 1));
            all.push(b_m);
        }
        (0..=30).map(|k| all[2 * k].clone()).collect()
    })
}

/// Coefficient of α^{2k−1} in the ξ₀ series: 2·(2^{2k−1} − 1)·|B_{2k}|/(2k)!,
/// k = 1..=30. All positive, so partial sums increase monotonically for α > 0.
fn xi0_coefficients() -> &'static [f64; 30] {
    static COEFFS: OnceLock<[f64; 30]> = OnceLock::new();
    COEFFS.get_or_init(|| {
        let mut out = [0.0; 30];
        let mut factorial = BigInt::one();
        for (k, slot) in out.iter_mut().enumerate() {
            let k = k + 1;
            for i in (2 * k - 1)..=(2 * k) {
                factorial *= BigInt::from(i);
            }
            let two_pow = (BigInt::one() << (2 * k - 1)) - BigInt::one();
            let num = BigRational::from_integer(2 * two_pow) * bernoulli_table()[k].abs();
            let coeff = num / BigRational::from_integer(factorial.clone());
            *slot = coeff.to_f64().expect("xi0 coefficient in f64 range");
        }
        out
    })
}

/// How close α may come to a nonzero multiple of π before the csc pole
/// makes the correction term meaningless.
pub const RESONANCE_THRESHOLD: f64 = 1e-8;

const XI0_SERIES_LIMIT: f64 = 0.25;

fn resonance_check(alpha: f64) -> Result<()> {
    let n = (alpha / PI).round();
    if n != 0.0 && (alpha - n * PI).abs() < RESONANCE_THRESHOLD {
        return Err(Error::PoleAtResonance { alpha, n: n as i64, threshold: RESONANCE_THRESHOLD });
    }
    Ok(())
}

/// ξ₀(α) = csc(α) − 1/α, odd, smooth at 0.
///
/// Uses the Bernoulli series below |α| = 0.25 — the closed form loses ~2
/// digits per decade of small α to cancellation — and the closed form above.
pub fn xi0(alpha: f64) -> Result<f64> {
    resonance_check(alpha)?;
    let a = alpha.abs();
    let value = if a < XI0_SERIES_LIMIT { xi0_series_partial(a, 10) } else { 1.0 / a.sin() - 1.0 / a };
    Ok(if alpha.is_sign_negative() { -value } else { value })
}

/// ξ₀ continued off the real axis; used on the evanescent side where the
/// phase variable is purely imaginary and csc(iβ) = −i·csch(β).
pub(crate) fn xi0_complex(alpha: Complex64) -> Result<Complex64> {
    if alpha.im == 0.0 {
        return xi0(alpha.re).map(|v| Complex64::new(v, 0.0));
    }
    if alpha.norm() < XI0_SERIES_LIMIT {
        let coeffs = xi0_coefficients();
        let a2 = alpha * alpha;
        let mut power = alpha;
        let mut sum = Complex64::new(0.0, 0.0);
        for c in &coeffs[..10] {
            sum += power * *c;
            power *= a2;
        }
        Ok(sum)
    } else {
        Ok(1.0 / alpha.sin() - 1.0 / alpha)
    }
}

/// Partial sum of the first `k_terms` terms of the ξ₀ Bernoulli series.
/// Converges on |α| < π; monotone in `k_terms` for fixed α.
pub fn xi0_series_partial(alpha: f64, k_terms: usize) -> f64 {
    assert!(alpha.abs() < PI, "xi0 series domain is |alpha| < pi, got {alpha}");
    let coeffs = xi0_coefficients();
    assert!(
        (1..=coeffs.len()).contains(&k_terms),
        "xi0_series_partial supports 1..=30 terms, got {k_terms}"
    );
    let a2 = alpha * alpha;
    let mut power = alpha;
    let mut sum = 0.0;
    for c in &coeffs[..k_terms] {
        sum += c * power;
        power *= a2;
    }
    sum
}

/// Fixed polynomial truncations of the two next-order oscillation-average
/// corrections ξ₁ and ξ₂ (diagnostic only; valid for |α| < 1).
pub fn xi_series(j: usize, alpha: f64) -> f64 {
    assert!(alpha.abs() < 1.0, "xi_series truncations are valid for |alpha| < 1, got {alpha}");
    let a2 = alpha * alpha;
    match j {
        1 => {
            let a3 = a2 * alpha;
            a3 * (7.0 / 1440.0
                + a2 * (31.0 / 17280.0
                    + a2 * (127.0 / 302400.0
                        + a2 * (21127.0 / 27371520.0
                            + a2 * (32532971.0 / 2615348736000.0
                                + a2 * (548797.0 / 298896998400.0))))))
        }
        2 => {
            let a5 = a2 * a2 * alpha;
            a5 * (31.0 / 24192.0
                + a2 * (127.0 / 345600.0
                    + a2 * (73.0 / 1013760.0
                        + a2 * (1414477.0 / 11887948800.0
                            + a2 * (8191.0 / 4598415360.0
                                + a2 * (16931177.0 / 67749986304000.0))))))
        }
        _ => panic!("xi_series index must be 1 or 2, got {j}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_rel(actual: f64, expected: f64, tol: f64, what: &str) {
        let err = if expected == 0.0 { actual.abs() } else { ((actual - expected) / expected).abs() };
        assert!(err <= tol, "{what}: got {actual:e}, want {expected:e}, rel err {err:e} > {tol:e}");
    }

    /// Frozen against an independent 50-digit evaluation of the defining
    /// integral/series: rows are (z, Ai, Ai′, Bi, Bi′).
    const AIRY_TABLE: &[(f64, f64, f64, f64, f64)] = &[
        (-200.0, 0.14889394248381025, -0.26000664543340602, 0.018398406342617793, 2.1057013672897854),
        (-80.0, 0.054125898466835087, -1.6162101034276570, 0.18071663848538894, 0.48468163946130380),
        (-50.0, -0.16188142361232092, 0.96898983727674909, -0.13715015212882007, -1.1453617002654776),
        (-20.0, -0.17640612707798469, 0.89286285673647124, -0.20013930932265135, -0.79142903383953648),
        (-12.0, -0.066555175054373129, 1.0231104533679707, -0.29571991207807306, -0.23673219783112332),
        (-9.5, 0.31910324771912820, -0.10809531881187124, 0.037785432489466502, 0.98471407000211970),
        (-8.0, -0.052705050356386203, 0.93556093819830655, -0.33125158075113786, -0.15945049781298139),
        (-7.0, 0.18428083525050564, -0.77100816841012655, 0.29376207185441402, 0.49824459005811349),
        (-5.5, 0.017781541276574976, 0.86419721777139839, -0.36781345391571199, 0.025111583073630926),
        (-3.2, -0.41744342056415138, 0.065031146995262914, -0.053905755630539150, -0.75412455331084139),
        (-2.338107410459767, 2.7433193406662830e-17, 0.70121082272069136, -0.45394320205833579, -0.045982121821858042),
        (-1.0, 0.53556088329235212, -0.010160567116645209, 0.10399738949694461, 0.59237562642279235),
        (-0.3, 0.43090309528558086, -0.24054512725815461, 0.47797784010989295, 0.47188021630064792),
        (0.0, 0.35502805388781724, -0.25881940379280680, 0.61492662744600074, 0.44828835735382636),
        (0.4, 0.25474235429567634, -0.23583203441920822, 0.80177300001359725, 0.50728167605062245),
        (1.0, 0.13529241631288142, -0.15914744129679321, 1.2074235949528713, 0.93243593339277563),
        (2.0, 0.034924130423274379, -0.053090384433653632, 3.2980949999782147, 4.1006820499328899),
        (3.7, 0.0017455720006099785, -0.0034669407490276271, 47.560747499589458, 87.890727262833442),
        (4.5, 0.00033025032351430898, -0.00071786656755750889, 227.58808183559972, 469.13507732796640),
        (5.5, 3.3685311908599814e-5, -8.0463391305565143e-5, 2016.5800386595314, 4632.5537331390424),
        (6.8, 1.2758794168766687e-6, -3.3724647753763934e-6, 47860.185574291960, 122976.43030844542),
        (8.0, 4.6922076160992316e-8, -1.3414392979067866e-7, 1199586.0041244599, 3354342.3127445389),
        (9.0, 2.4711684308724898e-9, -7.4806413896589464e-9, 21472868.891435349, 63807489.780908214),
        (9.5, 5.3302637046174916e-10, -1.6566394593740666e-9, 96892265.580451093, 296034763.86800504),
        (12.0, 1.3931846888753608e-13, -4.8547365549853085e-13, 329807225829.07418, 1135507502443.3707),
        (20.0, 1.6916728686705403e-27, -7.5863916257483550e-27, 2.1037650496511038e+25, 9.3818393361339643e+25),
        (50.0, 4.5849417240748285e-104, -3.2443318198287993e-103, 4.9090996994442193e+101, 3.4687987795459767e+102),
        (104.0, 7.4487521582922261e-309, -7.5980560331568669e-308, 2.0951735270336020e+306, 2.1361621950432753e+307),
    ];

    #[test]
    fn matches_frozen_table() {
        for &(z, ai, aip, bi, bip) in AIRY_TABLE {
            let tol = if z.abs() <= SERIES_LIMIT { 1e-12 } else { 5e-12 };
            let (a, ap, b, bp) = airy_all(z);
            assert_rel(a, ai, tol, &format!("Ai({z})"));
            assert_rel(ap, aip, tol, &format!("Ai'({z})"));
            assert_rel(b, bi, tol, &format!("Bi({z})"));
            assert_rel(bp, bip, tol, &format!("Bi'({z})"));
        }
    }

    #[test]
    fn matches_oscillatory_quadrature_oracle() {
        // Frozen from direct numerical quadrature of ∫cos(t³/3 + zt)dt/π.
        assert_rel(airy_ai(-10.0), 0.0402412384864431907, 1e-9, "Ai(-10)");
        assert_rel(airy_ai_prime(-10.0), 0.996265044132790056, 1e-9, "Ai'(-10)");
    }

    #[test]
    fn origin_values_match_gamma_closed_forms() {
        // Ai(0) = 3^{−2/3}/Γ(2/3), Ai′(0) = −3^{−1/3}/Γ(1/3).
        let ai0 = 3f64.powf(-2.0 / 3.0) / crate::GAMMA_TWO_THIRDS;
        let aip0 = -(3f64.powf(-1.0 / 3.0)) / crate::GAMMA_ONE_THIRD;
        assert_rel(airy_ai(0.0), ai0, 1e-15, "Ai(0)");
        assert_rel(airy_ai_prime(0.0), aip0, 1e-15, "Ai'(0)");
    }

    #[test]
    fn methods_agree_at_crossover() {
        for &z in &[SERIES_LIMIT, -SERIES_LIMIT] {
            let series = airy_maclaurin(z);
            let asym = if z > 0.0 { airy_asymptotic_pos(z) } else { airy_asymptotic_neg(z) };
            assert_rel(asym.0, series.0, 5e-13, &format!("Ai({z}) crossover"));
            assert_rel(asym.1, series.1, 5e-13, &format!("Ai'({z}) crossover"));
            assert_rel(asym.2, series.2, 5e-13, &format!("Bi({z}) crossover"));
            assert_rel(asym.3, series.3, 5e-13, &format!("Bi'({z}) crossover"));
        }
    }

    #[test]
    fn wronskian_is_one_over_pi() {
        let want = 1.0 / PI;
        for &z in &[
            -200.0, -50.0, -12.0, -9.5, -5.0, -2.338107410459767, -1.0, 0.0, 0.5, 2.0, 5.0, 8.9,
            9.1, 12.0, 30.0, 100.0,
        ] {
            let (ai, aip, bi, bip) = airy_all(z);
            let wronskian = ai * bip - aip * bi;
            assert_rel(wronskian, want, 1e-12, &format!("Wronskian at {z}"));
        }
    }

    #[test]
    fn second_difference_satisfies_airy_ode() {
        // The centered second difference carries a (h²/12)·Ai⁗ truncation
        // term, and Ai⁗ = 2Ai′ + z²Ai reaches ~20 on |z| ≤ 8, so 2e−6 is the
        // honest bound at h = 1e−3.
        let h = 1e-3;
        let mut z = -8.0;
        while z <= 8.0 {
            let second = (airy_ai(z + h) - 2.0 * airy_ai(z) + airy_ai(z - h)) / (h * h);
            let rhs = z * airy_ai(z);
            assert!(
                (second - rhs).abs() <= 2e-6,
                "Ai''({z}) second difference {second} vs z*Ai = {rhs}"
            );
            z += 0.25;
        }
    }

    #[test]
    fn leading_asymptotic_consistency() {
        for &z in &[8.0, 9.0, 9.5, 12.0, 20.0, 50.0, 100.0] {
            let zeta = 2.0 / 3.0 * z * f64::sqrt(z);
            let scaled = airy_ai(z) * 2.0 * PI.sqrt() * z.powf(0.25) * zeta.exp();
            assert!((0.99..=1.01).contains(&scaled), "Ai({z}) leading asymptotic ratio {scaled}");
        }
    }

    #[test]
    fn underflows_gracefully() {
        assert_eq!(airy_ai(400.0), 0.0);
        assert_eq!(airy_ai_prime(400.0), 0.0);
        assert!(airy_ai(1e300).abs() <= f64::MIN_POSITIVE);
    }

    #[test]
    fn pair_bundles_both_values() {
        let p = airy_pair(-1.5);
        assert_eq!(p.argument, -1.5);
        assert_eq!(p.ai, airy_ai(-1.5));
        assert_eq!(p.ai_prime, airy_ai_prime(-1.5));
    }

    #[test]
    fn bernoulli_matches_known_values() {
        let r = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
        assert_eq!(bernoulli_even(1), r(1, 6));
        assert_eq!(bernoulli_even(2), r(-1, 30));
        assert_eq!(bernoulli_even(5), r(5, 66));
        assert_eq!(bernoulli_even(15), r(8615841276005, 14322));
        let b60 = BigRational::new(
            "-1215233140483755572040304994079820246041491".parse::<BigInt>().unwrap(),
            BigInt::from(56786730i64),
        );
        assert_eq!(bernoulli_even(30), b60);
    }

    #[test]
    #[should_panic(expected = "bernoulli_even supports")]
    fn bernoulli_rejects_out_of_range() {
        bernoulli_even(31);
    }

    #[test]
    fn xi0_matches_frozen_values() {
        // Closed-form branch.
        assert_rel(xi0(0.3).unwrap(), 0.0505300284907892516, 1e-14, "xi0(0.3)");
        // Series branch.
        assert_rel(xi0(0.24).unwrap(), 0.0402704422362515944, 1e-14, "xi0(0.24)");
        assert_rel(xi0(PI / 2.0).unwrap(), 1.0 - 2.0 / PI, 1e-13, "xi0(pi/2)");
        assert_eq!(xi0(0.0).unwrap(), 0.0);
    }

    #[test]
    fn xi0_branches_agree_at_switch() {
        for &a in &[0.2499, 0.2501, 0.15, 0.4] {
            let series = xi0_series_partial(a, 14);
            let closed = 1.0 / a.sin() - 1.0 / a;
            assert_rel(series, closed, 1e-13, &format!("xi0 branch agreement at {a}"));
        }
    }

    #[test]
    fn xi0_is_odd() {
        for i in 1..=100 {
            let a = 3.0 * f64::from(i) / 101.0;
            let plus = xi0(a).unwrap();
            let minus = xi0(-a).unwrap();
            assert_eq!(minus, -plus, "xi0 odd symmetry at {a}");
        }
    }

    #[test]
    fn xi0_rejects_resonance() {
        for &(alpha, n) in &[(PI, 1i64), (-PI, -1), (2.0 * PI + 4e-9, 2), (3.0 * PI - 9.9e-9, 3)] {
            match xi0(alpha) {
                Err(Error::PoleAtResonance { n: got, .. }) => assert_eq!(got, n),
                other => panic!("xi0({alpha}) should signal the csc pole, got {other:?}"),
            }
        }
        // α near 0 is fine: the pole there is removable.
        assert!(xi0(1e-12).is_ok());
    }

    #[test]
    fn xi0_partial_sums_converge_monotonically() {
        for &a in &[0.5f64, 1.5, 2.5] {
            let exact = 1.0 / a.sin() - 1.0 / a;
            let mut prev = f64::INFINITY;
            for k in 2..=10 {
                let err = (xi0_series_partial(a, k) - exact).abs();
                assert!(err < prev, "xi0 series error not decreasing at alpha={a}, K={k}");
                prev = err;
            }
        }
    }

    #[test]
    fn xi0_partial_examples() {
        assert_rel(xi0_series_partial(0.5, 1), 0.5 / 6.0, 1e-15, "xi0 K=1");
        let closed = 1.0 / 0.5f64.sin() - 2.0;
        assert!((xi0_series_partial(0.5, 8) - closed).abs() < 1e-10);
        let closed3 = 1.0 / 0.3f64.sin() - 1.0 / 0.3;
        assert!((xi0_series_partial(0.3, 10) - closed3).abs() < 1e-12);
        assert_eq!(xi0_series_partial(0.0, 5), 0.0);
    }

    #[test]
    fn xi0_complex_matches_real_and_imaginary_closed_forms() {
        // Real argument delegates to the real path.
        let on_axis = xi0_complex(Complex64::new(0.7, 0.0)).unwrap();
        assert_eq!(on_axis.im, 0.0);
        assert_rel(on_axis.re, xi0(0.7).unwrap(), 1e-15, "xi0_complex on axis");
        // Pure imaginary: ξ₀(iβ) = −i·(csch β − 1/β).
        for &beta in &[0.05, 0.2, 0.7, 3.0] {
            let got = xi0_complex(Complex64::new(0.0, beta)).unwrap();
            let want = -(1.0 / beta.sinh() - 1.0 / beta);
            assert!(got.re.abs() < 1e-18, "xi0(i*{beta}) should be purely imaginary");
            assert_rel(got.im, want, 1e-12, &format!("Im xi0(i*{beta})"));
        }
    }

    #[test]
    fn xi_series_matches_frozen_values() {
        assert_eq!(xi_series(1, 0.0), 0.0);
        assert_eq!(xi_series(2, 0.0), 0.0);
        assert_rel(xi_series(1, 0.1), 4.879093695265678e-6, 1e-13, "xi1(0.1)");
        assert_rel(xi_series(2, 0.1), 1.2850974323512135e-8, 1e-13, "xi2(0.1)");
        assert_eq!(xi_series(1, -0.1), -xi_series(1, 0.1));
        assert_eq!(xi_series(2, -0.1), -xi_series(2, 0.1));
    }

    #[test]
    #[should_panic(expected = "valid for |alpha| < 1")]
    fn xi_series_rejects_large_alpha() {
        xi_series(1, 1.5);
    }
}
