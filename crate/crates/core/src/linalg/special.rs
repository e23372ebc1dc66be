//! Tail probabilities for the Student t, F and chi-square distributions via
//! the regularized incomplete beta and gamma functions.
//!
//! Continued fractions are evaluated with the modified Lentz method and the
//! log-gamma with a Lanczos approximation (g = 7, 9 terms), which keeps the
//! absolute error of the survival functions comfortably below 1e-12.

use crate::math;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_7;
const EPS: f64 = 1e-16;
const TINY: f64 = 1e-300;
const MAX_ITER: usize = 400;

/// Natural log of the gamma function for x > 0.
pub fn ln_gamma(x: f64) -> f64 {
    if x < 0.5 {
        // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
        let pi = core::f64::consts::PI;
        return math::ln(pi / math::sin(pi * x)) - ln_gamma(1.0 - x);
    }
    let x = x - 1.0;
    let mut acc = LANCZOS[0];
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (x + i as f64);
    }
    let t = x + LANCZOS_G + 0.5;
    LN_SQRT_2PI + (x + 0.5) * math::ln(t) - t + math::ln(acc)
}

/// Regularized incomplete beta function I_x(a, b) for a, b > 0 and x in [0, 1].
pub fn reg_inc_beta(a: f64, b: f64, x: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    if x >= 1.0 {
        return 1.0;
    }
    let front = math::exp(
        ln_gamma(a + b) - ln_gamma(a) - ln_gamma(b) + a * math::ln(x) + b * math::ln(1.0 - x),
    );
    // The continued fraction converges fast for x < (a+1)/(a+b+2); otherwise
    // use the symmetry I_x(a,b) = 1 - I_{1-x}(b,a).
    if x < (a + 1.0) / (a + b + 2.0) {
        front * beta_cf(a, b, x) / a
    } else {
        1.0 - math::exp(
            ln_gamma(a + b) - ln_gamma(a) - ln_gamma(b)
                + b * math::ln(1.0 - x)
                + a * math::ln(x),
        ) * beta_cf(b, a, 1.0 - x)
            / b
    }
}

fn beta_cf(a: f64, b: f64, x: f64) -> f64 {
    let qab = a + b;
    let qap = a + 1.0;
    let qam = a - 1.0;
    let mut c = 1.0;
    let mut d = 1.0 - qab * x / qap;
    if math::abs(d) < TINY {
        d = TINY;
    }
    d = 1.0 / d;
    let mut h = d;
    for m in 1..=MAX_ITER {
        let m = m as f64;
        let m2 = 2.0 * m;
        let aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if math::abs(d) < TINY {
            d = TINY;
        }
        c = 1.0 + aa / c;
        if math::abs(c) < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        h *= d * c;
        let aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if math::abs(d) < TINY {
            d = TINY;
        }
        c = 1.0 + aa / c;
        if math::abs(c) < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let del = d * c;
        h *= del;
        if math::abs(del - 1.0) < EPS {
            break;
        }
    }
    h
}

/// Regularized upper incomplete gamma function Q(a, x) = Gamma(a,x)/Gamma(a).
pub fn reg_upper_gamma(a: f64, x: f64) -> f64 {
    if x <= 0.0 {
        return 1.0;
    }
    if x < a + 1.0 {
        1.0 - lower_gamma_series(a, x)
    } else {
        upper_gamma_cf(a, x)
    }
}

fn lower_gamma_series(a: f64, x: f64) -> f64 {
    let mut ap = a;
    let mut sum = 1.0 / a;
    let mut del = sum;
    for _ in 0..MAX_ITER {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if math::abs(del) < math::abs(sum) * EPS {
            break;
        }
    }
    sum * math::exp(-x + a * math::ln(x) - ln_gamma(a))
}

fn upper_gamma_cf(a: f64, x: f64) -> f64 {
    let mut b = x + 1.0 - a;
    let mut c = 1.0 / TINY;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..=MAX_ITER {
        let an = -(i as f64) * (i as f64 - a);
        b += 2.0;
        d = an * d + b;
        if math::abs(d) < TINY {
            d = TINY;
        }
        c = b + an / c;
        if math::abs(c) < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let del = d * c;
        h *= del;
        if math::abs(del - 1.0) < EPS {
            break;
        }
    }
    h * math::exp(-x + a * math::ln(x) - ln_gamma(a))
}

/// Two-sided Student-t survival probability `P(|T_df| > |t|)`.
pub fn student_t_sf(t: f64, df: u32) -> f64 {
    assert!(df >= 1, "degrees of freedom must be positive");
    let t2 = t * t;
    if t2 == 0.0 {
        return 1.0;
    }
    let df = df as f64;
    // The complementary form avoids evaluating I at an argument that rounds
    // to 1 when |t| is small.
    if t2 < df {
        1.0 - reg_inc_beta(0.5, df / 2.0, t2 / (df + t2))
    } else {
        reg_inc_beta(df / 2.0, 0.5, df / (df + t2))
    }
}

/// Upper-tail probability `P(F(df1, df2) > f)`.
pub fn f_sf(f: f64, df1: u32, df2: u32) -> f64 {
    assert!(df1 >= 1 && df2 >= 1, "degrees of freedom must be positive");
    if f <= 0.0 {
        return 1.0;
    }
    let d1 = df1 as f64;
    let d2 = df2 as f64;
    let d1f = d1 * f;
    if d1f < d2 {
        1.0 - reg_inc_beta(d1 / 2.0, d2 / 2.0, d1f / (d2 + d1f))
    } else {
        reg_inc_beta(d2 / 2.0, d1 / 2.0, d2 / (d2 + d1f))
    }
}

/// Upper-tail probability `P(chi2(df) > x)`.
pub fn chisq_sf(x: f64, df: u32) -> f64 {
    assert!(df >= 1, "degrees of freedom must be positive");
    if x <= 0.0 {
        return 1.0;
    }
    reg_upper_gamma(df as f64 / 2.0, x / 2.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    // Reference values computed with mpmath at 40 decimal digits.
    const T_SF_REFS: &[(f64, u32, f64)] = &[
        (0.9345, 31, 0.35726869200445183),
        (11.15, 30, 3.4187035116607945e-12),
        (0.0, 5, 1.0),
        (0.5, 1, 0.70483276469913345),
        (1.0, 1, 0.5),
        (2.042272456301238, 30, 0.050000000000000010),
        (3.0, 7, 0.019942126131992538),
        (2.228, 10, 0.050011771817111365),
        (1e-8, 5, 0.99999999240786620),
        (25.0, 2, 0.0015961702114103339),
        (4.0, 100, 0.00012152364430076168),
        (0.2, 500, 0.84156189702557682),
        (1.96, 1000, 0.050273184955748718),
        (6.0, 3, 0.0092727148922846674),
        (0.75, 12, 0.46770511441414827),
    ];

    const F_SF_REFS: &[(f64, u32, u32, f64)] = &[
        (1.60024, 1, 29, 0.21594020628881409),
        (0.946019, 2, 28, 0.40034561802150616),
        (930.3962, 1, 31, 1.0978834810018695e-24),
        (124.4063, 1, 30, 3.3907724333875524e-12),
        (56.3124, 2, 28, 1.5393791135300415e-10),
        (3.0, 5, 20, 0.035201337452666634),
        (0.5, 10, 10, 0.85515419397449576),
        (38.59088, 3, 27, 6.6532350835141961e-10),
        (0.0, 4, 9, 1.0),
        (1.0, 1, 1, 0.5),
        (2.5, 7, 3, 0.24249752824470017),
        (12.0, 2, 40, 8.2718061255302767e-5),
        (0.873370, 1, 31, 0.35724704001456588),
    ];

    const CHISQ_SF_REFS: &[(f64, u32, f64)] = &[
        (1.67344, 1, 0.19579840766317252),
        (2.025463, 2, 0.36322547292824212),
        (2.30358, 2, 0.31607049652726660),
        (1.703, 1, 0.19189610943298030),
        (0.5, 4, 0.97350097883925609),
        (10.0, 3, 0.018566135463043233),
        (30.0, 30, 0.46565370894400963),
        (0.0559567, 1, 0.81300460563834755),
        (0.945019, 1, 0.33099041707714274),
        (70.0, 50, 0.032374109773535949),
        (1.270087, 1, 0.25975035939487101),
        (1.716418, 1, 0.19015478070293868),
        (0.0, 3, 1.0),
        (55.0, 1, 1.2052982584446394e-13),
        (3.841458820694124, 1, 0.050000000000000057),
    ];

    const LN_GAMMA_REFS: &[(f64, f64)] = &[
        (0.5, 0.57236494292470009),
        (1.0, 0.0),
        (1.5, -0.12078223763524522),
        (2.0, 0.0),
        (3.7, 1.4280723266653881),
        (10.0, 12.801827480081470),
        (15.5, 26.536914491115614),
        (0.1, 2.2527126517342059),
        (100.0, 359.13420536957540),
        (500.5, 2608.2229044109867),
        (0.001, 6.9071788853838537),
    ];

    #[test]
    fn ln_gamma_reference_values() {
        for &(x, want) in LN_GAMMA_REFS {
            let got = ln_gamma(x);
            let tol = 1e-12 * want.abs().max(1.0);
            assert!((got - want).abs() < tol, "ln_gamma({x}) = {got}, want {want}");
        }
    }

    #[test]
    fn student_t_reference_values() {
        for &(t, df, want) in T_SF_REFS {
            let got = student_t_sf(t, df);
            assert!(
                (got - want).abs() < 1e-10,
                "t_sf({t}, {df}) = {got}, want {want}"
            );
        }
    }

    #[test]
    fn f_reference_values() {
        for &(f, d1, d2, want) in F_SF_REFS {
            let got = f_sf(f, d1, d2);
            assert!(
                (got - want).abs() < 1e-10,
                "f_sf({f}, {d1}, {d2}) = {got}, want {want}"
            );
        }
    }

    #[test]
    fn chisq_reference_values() {
        for &(x, df, want) in CHISQ_SF_REFS {
            let got = chisq_sf(x, df);
            assert!(
                (got - want).abs() < 1e-10,
                "chisq_sf({x}, {df}) = {got}, want {want}"
            );
        }
    }

    #[test]
    fn t_sf_symmetric_in_sign() {
        for &(t, df, _) in T_SF_REFS {
            assert_eq!(student_t_sf(t, df), student_t_sf(-t, df));
        }
    }

    #[test]
    fn survival_functions_monotone() {
        let mut prev = f64::INFINITY;
        for i in 0..200 {
            let t = i as f64 * 0.05;
            let p = student_t_sf(t, 13);
            assert!(p <= prev + 1e-15);
            prev = p;
        }
        let mut prev = f64::INFINITY;
        for i in 0..200 {
            let p = chisq_sf(i as f64 * 0.3, 4);
            assert!(p <= prev + 1e-15);
            prev = p;
        }
        let mut prev = f64::INFINITY;
        for i in 0..200 {
            let p = f_sf(i as f64 * 0.1, 3, 17);
            assert!(p <= prev + 1e-15);
            prev = p;
        }
    }
}
