//! Complex log-gamma and digamma by upward recurrence and the Stirling
//! series.

use num_complex::Complex64;

use super::SpecfunError;

/// Euler's constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;

// B_{2k} for k = 1..=10.
const BERNOULLI: [f64; 10] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
];

// Shift target for the asymptotic series.
const SHIFT_RE: f64 = 16.0;

pub fn is_pole(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round()
}

fn shift_count(z: Complex64) -> usize {
    if z.re >= SHIFT_RE {
        0
    } else {
        (SHIFT_RE - z.re).ceil() as usize
    }
}

/// Principal branch of `log Gamma(z)`, continuous off the negative real axis.
pub fn log_gamma(z: Complex64) -> Result<Complex64, SpecfunError> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(SpecfunError::Domain(format!("non-finite argument {z}")));
    }
    if is_pole(z) {
        return Err(SpecfunError::Pole(z));
    }
    let n = shift_count(z);
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 0..n {
        acc += (z + k as f64).ln();
    }
    let w = z + n as f64;
    let w2 = w * w;
    let mut series = Complex64::new(0.0, 0.0);
    let mut wp = w;
    for (k, b) in BERNOULLI.iter().enumerate() {
        let m = 2.0 * (k + 1) as f64;
        series += b / (m * (m - 1.0)) / wp;
        wp *= w2;
    }
    Ok((w - 0.5) * w.ln() - w + HALF_LN_2PI + series - acc)
}

/// `psi(z) = Gamma'(z) / Gamma(z)`.
pub fn digamma(z: Complex64) -> Result<Complex64, SpecfunError> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(SpecfunError::Domain(format!("non-finite argument {z}")));
    }
    if is_pole(z) {
        return Err(SpecfunError::Pole(z));
    }
    let n = shift_count(z);
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 0..n {
        acc += (z + k as f64).inv();
    }
    let w = z + n as f64;
    let w2 = w * w;
    let mut series = Complex64::new(0.0, 0.0);
    let mut wp = w2;
    for (k, b) in BERNOULLI.iter().enumerate() {
        let m = 2.0 * (k + 1) as f64;
        series += b / m / wp;
        wp *= w2;
    }
    Ok(w.ln() - 0.5 / w - series - acc)
}

pub fn gamma(z: Complex64) -> Result<Complex64, SpecfunError> {
    Ok(log_gamma(z)?.exp())
}

#[cfg(test)]
mod tests {
    use super::*;

    // (re z, im z, log Gamma, psi) at 30 digits, rounded to f64.
    const ORACLE: [(f64, f64, f64, f64, f64, f64); 11] = [
        (0.5, 0.0, 0.5723649429247001, 0.0, -1.9635100260214235, 0.0),
        (1.0, 0.0, 0.0, 0.0, -0.5772156649015329, 0.0),
        (3.7, 2.1, 0.7853469580738224, 2.5830129251152623, 1.3433740763984103, 0.5781722556465365),
        (-2.5, 0.3, -0.43208889261320194, -9.093345421289742, 1.1080030134754655, 2.2145460646932182),
        (0.1, -7.0, -10.854877044420903, -5.987570153301441, 1.9466951169236457, -1.6279743534887792),
        (40.0, 60.0, 70.94113078652404, 235.51180766831632, 4.27436696192966, 0.9885777471347873),
        (-60.3, 20.0, -247.62117713201326, -108.50728712870313, 4.158969386864616, 2.8238006854151263),
        (0.001, 0.001, 6.560604473837553, -0.7859737349296534, -500.5755707329952, 500.00164253211767),
        (-0.5, 0.0, 1.2655121234846454, -3.141592653589793, 0.03648997397857652, 0.0),
        (95.0, -30.0, 331.57624202587857, -136.94748304415162, 4.596613285049994, -0.3073950283975573),
        (-99.5, 0.5, -361.2095159977827, -311.85667609942277, 4.605186852113129, 2.8763191232841963),
    ];

    #[test]
    fn matches_high_precision_values() {
        for &(x, y, lr, li, dr, di) in &ORACLE {
            let z = Complex64::new(x, y);
            let lg = log_gamma(z).unwrap();
            let dg = digamma(z).unwrap();
            assert!((lg - Complex64::new(lr, li)).norm() < 1e-12, "log_gamma({z}) = {lg}");
            assert!((dg - Complex64::new(dr, di)).norm() < 1e-12 * (1.0 + dr.hypot(di)), "digamma({z}) = {dg}");
        }
    }

    #[test]
    fn digamma_half_closed_form() {
        let v = digamma(Complex64::new(0.5, 0.0)).unwrap();
        assert!((v.re + EULER_GAMMA + 2.0 * 2f64.ln()).abs() < 1e-14);
    }

    #[test]
    fn poles_are_errors() {
        for x in [0.0, -1.0, -7.0] {
            assert!(matches!(log_gamma(Complex64::new(x, 0.0)), Err(SpecfunError::Pole(_))));
            assert!(matches!(digamma(Complex64::new(x, 0.0)), Err(SpecfunError::Pole(_))));
        }
        assert!(digamma(Complex64::new(-1.0, 1e-9)).is_ok());
    }

    #[test]
    fn recurrences() {
        for &(x, y) in &[(0.3, 0.4), (-3.2, 1.5), (12.0, -20.0), (-40.5, 0.1)] {
            let z = Complex64::new(x, y);
            let d = digamma(z + 1.0).unwrap() - digamma(z).unwrap() - z.inv();
            assert!(d.norm() < 1e-12);
            let g = gamma(z + 1.0).unwrap() / (gamma(z).unwrap() * z);
            assert!((g - 1.0).norm() < 1e-11);
        }
    }
}
