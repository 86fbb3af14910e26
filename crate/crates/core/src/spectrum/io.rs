//! JSONL and CSV spectrum files. Floats are written in shortest
//! round-trip form, so `parse(write(s)) == s` bit for bit.

use std::io::{BufRead, Write};

use serde_json::{json, Value};

use super::{LengthSpectrum, PrimeGeodesic, SpectrumError};
use crate::complex_parse::parse_complex;

pub const FORMAT_NAME: &str = "geoflow-spectrum";
pub const FORMAT_VERSION: u64 = 1;

fn io_err(e: std::io::Error) -> SpectrumError {
    SpectrumError::Io(e.to_string())
}

fn malformed(line: usize, msg: impl Into<String>) -> SpectrumError {
    SpectrumError::Malformed { line, msg: msg.into() }
}

fn cutoff_json(c: f64) -> Value {
    if c.is_finite() {
        json!(c)
    } else {
        json!("inf")
    }
}

fn cutoff_from_json(v: &Value, line: usize) -> Result<f64, SpectrumError> {
    match v {
        Value::Number(x) => x.as_f64().ok_or_else(|| malformed(line, "bad cutoff")),
        Value::String(s) if s == "inf" => Ok(f64::INFINITY),
        _ => Err(malformed(line, "cutoff must be a number or \"inf\"")),
    }
}

pub fn write_jsonl<W: Write>(spec: &LengthSpectrum, mut out: W) -> Result<(), SpectrumError> {
    let mut header = format!(
        "{{\"format\":\"{FORMAT_NAME}\",\"version\":{FORMAT_VERSION},\"n\":{},\"cutoff\":{}",
        spec.n,
        cutoff_json(spec.completeness_cutoff)
    );
    if let Some(c) = spec.growth_constant {
        header.push_str(&format!(",\"growth_constant\":{}", json!(c)));
    }
    writeln!(out, "{header}}}").map_err(io_err)?;
    for e in &spec.entries {
        writeln!(out, "{{\"length\":{},\"angles\":{},\"mult\":{}}}", json!(e.length), json!(e.angles), e.mult)
            .map_err(io_err)?;
    }
    Ok(())
}

pub fn parse_jsonl<R: BufRead>(input: R) -> Result<LengthSpectrum, SpectrumError> {
    let mut header: Option<(usize, f64, Option<f64>)> = None;
    let mut entries = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line_no = i + 1;
        let line = line.map_err(io_err)?;
        let t = line.trim();
        if t.is_empty() {
            continue;
        }
        let v: Value = serde_json::from_str(t).map_err(|e| malformed(line_no, e.to_string()))?;
        match header {
            None => {
                if v.get("format").and_then(Value::as_str) != Some(FORMAT_NAME) {
                    return Err(malformed(line_no, format!("missing \"format\":\"{FORMAT_NAME}\" header")));
                }
                let version = v.get("version").and_then(Value::as_u64);
                if version != Some(FORMAT_VERSION) {
                    return Err(malformed(line_no, format!("unsupported version {version:?}")));
                }
                let n = v.get("n").and_then(Value::as_u64).ok_or_else(|| malformed(line_no, "missing n"))? as usize;
                let cutoff = cutoff_from_json(v.get("cutoff").unwrap_or(&Value::Null), line_no)?;
                let growth = v.get("growth_constant").and_then(Value::as_f64);
                header = Some((n, cutoff, growth));
            }
            Some((n, _, _)) => {
                let length = v.get("length").and_then(Value::as_f64).ok_or_else(|| malformed(line_no, "missing length"))?;
                let angles = v
                    .get("angles")
                    .and_then(Value::as_array)
                    .ok_or_else(|| malformed(line_no, "missing angles"))?
                    .iter()
                    .map(|a| a.as_f64().ok_or_else(|| malformed(line_no, "angle is not a number")))
                    .collect::<Result<Vec<_>, _>>()?;
                let mult = match v.get("mult") {
                    None => 1,
                    Some(m) => m.as_u64().filter(|&m| m <= u32::MAX as u64).ok_or_else(|| malformed(line_no, "bad mult"))? as u32,
                };
                let e = PrimeGeodesic { length, angles, mult };
                e.check(n, line_no)?;
                entries.push(e);
            }
        }
    }
    let (n, cutoff, growth) = header.ok_or_else(|| malformed(0, "empty input"))?;
    let mut s = LengthSpectrum::new(n, Vec::new(), cutoff)?;
    s.entries = entries;
    s.growth_constant = growth;
    Ok(s)
}

pub fn write_csv<W: Write>(spec: &LengthSpectrum, mut out: W) -> Result<(), SpectrumError> {
    writeln!(out, "# format={FORMAT_NAME}").map_err(io_err)?;
    writeln!(out, "# version={FORMAT_VERSION}").map_err(io_err)?;
    writeln!(out, "# n={}", spec.n).map_err(io_err)?;
    writeln!(out, "# cutoff={:?}", spec.completeness_cutoff).map_err(io_err)?;
    if let Some(c) = spec.growth_constant {
        writeln!(out, "# growth_constant={c:?}").map_err(io_err)?;
    }
    let angles: Vec<String> = (2..=spec.n + 1).map(|j| format!("angle_{j}")).collect();
    writeln!(out, "length,{},mult", angles.join(",")).map_err(io_err)?;
    for e in &spec.entries {
        let a: Vec<String> = e.angles.iter().map(|x| format!("{x:?}")).collect();
        writeln!(out, "{:?},{},{}", e.length, a.join(","), e.mult).map_err(io_err)?;
    }
    Ok(())
}

pub fn parse_csv<R: BufRead>(input: R) -> Result<LengthSpectrum, SpectrumError> {
    let mut n: Option<usize> = None;
    let mut cutoff: Option<f64> = None;
    let mut growth = None;
    let mut header_seen = false;
    let mut entries = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line_no = i + 1;
        let line = line.map_err(io_err)?;
        let t = line.trim();
        if t.is_empty() {
            continue;
        }
        if let Some(meta) = t.strip_prefix('#') {
            if let Some((k, v)) = meta.split_once('=') {
                let v = v.trim();
                let num = || v.parse::<f64>().map_err(|_| malformed(line_no, format!("bad value {v:?}")));
                match k.trim() {
                    "format" if v != FORMAT_NAME => return Err(malformed(line_no, format!("unknown format {v:?}"))),
                    "version" if v != FORMAT_VERSION.to_string() => {
                        return Err(malformed(line_no, format!("unsupported version {v:?}")))
                    }
                    "n" => n = Some(v.parse().map_err(|_| malformed(line_no, "bad n"))?),
                    "cutoff" => cutoff = Some(num()?),
                    "growth_constant" => growth = Some(num()?),
                    _ => {}
                }
            }
            continue;
        }
        let fields: Vec<&str> = t.split(',').map(str::trim).collect();
        if !header_seen {
            if fields.first() != Some(&"length") || fields.last() != Some(&"mult") {
                return Err(malformed(line_no, "expected header length,angle_2,...,mult"));
            }
            let cols = fields.len() - 2;
            match n {
                Some(k) if k != cols => return Err(SpectrumError::Dimension { line: line_no, expected: k, got: cols }),
                _ => n = Some(cols),
            }
            header_seen = true;
            continue;
        }
        let nn = n.expect("set with header");
        if fields.len() != nn + 2 {
            return Err(SpectrumError::Dimension { line: line_no, expected: nn, got: fields.len().saturating_sub(2) });
        }
        let num = |s: &str| s.parse::<f64>().map_err(|_| malformed(line_no, format!("bad number {s:?}")));
        let length = num(fields[0])?;
        let angles = fields[1..=nn].iter().map(|s| num(s)).collect::<Result<Vec<_>, _>>()?;
        let mult = fields[nn + 1].parse().map_err(|_| malformed(line_no, "bad mult"))?;
        let e = PrimeGeodesic { length, angles, mult };
        e.check(nn, line_no)?;
        entries.push(e);
    }
    let n = n.ok_or_else(|| malformed(0, "missing header"))?;
    let cutoff = cutoff.unwrap_or_else(|| entries.iter().map(|e| e.length).fold(0.0, f64::max));
    let mut s = LengthSpectrum::new(n, Vec::new(), cutoff)?;
    s.entries = entries;
    s.growth_constant = growth;
    Ok(s)
}

/// Parse either format, chosen by the first non-blank character.
pub fn parse(text: &str) -> Result<LengthSpectrum, SpectrumError> {
    if text.trim_start().starts_with('{') {
        parse_jsonl(text.as_bytes())
    } else {
        parse_csv(text.as_bytes())
    }
}

/// Import complex lengths `l + i theta` of a 3-manifold (`n = 1`), one per
/// line, optionally followed by a multiplicity. Lines starting with `#`
/// are skipped.
pub fn import_complex_lengths<R: BufRead>(input: R, cutoff: f64) -> Result<LengthSpectrum, SpectrumError> {
    let mut entries = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line_no = i + 1;
        let line = line.map_err(io_err)?;
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let (z, mult) = match t.rsplit_once([',', '\t', ' ']) {
            Some((a, b)) if !b.is_empty() && b.chars().all(|c| c.is_ascii_digit()) => {
                (a.trim(), b.parse::<u32>().map_err(|_| malformed(line_no, "bad mult"))?)
            }
            _ => (t, 1),
        };
        let z = parse_complex(z).ok_or_else(|| malformed(line_no, format!("bad complex length {z:?}")))?;
        let e = PrimeGeodesic { length: z.re, angles: vec![z.im.rem_euclid(std::f64::consts::TAU)], mult };
        e.check(1, line_no)?;
        entries.push(e);
    }
    let mut s = LengthSpectrum::new(1, Vec::new(), cutoff)?;
    s.entries = entries;
    Ok(s.sorted())
}
