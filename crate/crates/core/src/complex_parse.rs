//! Parsing of complex literals such as `2`, `5+2i`, `-1.5e-3-4i` or `1+2*I`.

use num_complex::Complex64;

pub fn parse_complex(s: &str) -> Option<Complex64> {
    let t: String = s.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
    if t.is_empty() {
        return None;
    }
    let imag_unit = |c: char| matches!(c, 'i' | 'I' | 'j' | 'J');
    let last = t.chars().last()?;
    if !imag_unit(last) {
        return t.parse().ok().map(|re| Complex64::new(re, 0.0));
    }
    let body = &t[..t.len() - 1];
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(i) => (&body[..i], &body[i..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        x => x.parse().ok()?,
    };
    Some(Complex64::new(re.parse().ok()?, im))
}
