use num_complex::Complex64;

/// `%g`-style rendering with `digits` significant digits.
pub fn real(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return if x.is_nan() { "nan".into() } else if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let digits = digits.max(1);
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -5 || exp >= digits as i32 {
        format!("{}e{}{:02}", trim(mantissa), if exp < 0 { '-' } else { '+' }, exp.abs())
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn complex(z: Complex64, digits: usize) -> String {
    if z.im == 0.0 {
        return real(z.re, digits);
    }
    let im = real(z.im.abs(), digits);
    let sign = if z.im < 0.0 { '-' } else { '+' };
    if z.re == 0.0 {
        return format!("{}{im}i", if z.im < 0.0 { "-" } else { "" });
    }
    format!("{}{sign}{im}i", real(z.re, digits))
}
