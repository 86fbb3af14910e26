//! `key = value` configuration files. Blank lines and `#` comments are
//! ignored. Recognised keys: `n`, `vol`, `p`, `C_Gamma`, `alpha_n`,
//! `c_norm`, `tail_target`, `digits`.

use std::path::Path;

use geoflow::parse_complex;
use num_complex::Complex64;

use crate::CliError;

#[derive(Clone, Debug, PartialEq)]
pub struct Config {
    pub n: Option<usize>,
    pub vol: f64,
    pub p: u32,
    pub c_gamma: f64,
    pub alpha_n: Complex64,
    pub c_norm: f64,
    pub tail_target: f64,
    pub digits: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            n: None,
            vol: 1.0,
            p: 1,
            c_gamma: 0.0,
            alpha_n: Complex64::new(1.0, 0.0),
            c_norm: 1.0,
            tail_target: 1e-12,
            digits: 12,
        }
    }
}

fn bad(line: usize, msg: String) -> CliError {
    CliError::Input(format!("config line {line}: {msg}"))
}

impl Config {
    pub fn parse(text: &str) -> Result<Config, CliError> {
        let mut c = Config::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| bad(i + 1, format!("expected key = value, got {line:?}")))?;
            let (key, value) = (key.trim(), value.trim());
            let num = |v: &str| v.parse::<f64>().map_err(|_| bad(i + 1, format!("{key}: not a number: {v:?}")));
            let int = |v: &str| v.parse::<u64>().map_err(|_| bad(i + 1, format!("{key}: not an integer: {v:?}")));
            match key {
                "n" => c.n = Some(int(value)? as usize),
                "vol" => c.vol = num(value)?,
                "p" => c.p = int(value)? as u32,
                "C_Gamma" | "c_gamma" => c.c_gamma = num(value)?,
                "alpha_n" => c.alpha_n = parse_complex(value).ok_or_else(|| bad(i + 1, format!("alpha_n: bad complex {value:?}")))?,
                "c_norm" => c.c_norm = num(value)?,
                "tail_target" => c.tail_target = num(value)?,
                "digits" => c.digits = int(value)? as usize,
                _ => return Err(bad(i + 1, format!("unknown key {key:?}"))),
            }
        }
        c.check()?;
        Ok(c)
    }

    pub fn load(path: Option<&Path>) -> Result<Config, CliError> {
        match path {
            None => Ok(Config::default()),
            Some(p) => Config::parse(&std::fs::read_to_string(p).map_err(|e| CliError::Input(format!("{}: {e}", p.display())))?),
        }
    }

    pub fn check(&self) -> Result<(), CliError> {
        if self.n == Some(0) {
            return Err(CliError::Input("n must be at least 1".into()));
        }
        if !(self.tail_target > 0.0) {
            return Err(CliError::Input(format!("tail_target must be positive, got {}", self.tail_target)));
        }
        if !(self.vol > 0.0) {
            return Err(CliError::Input(format!("vol must be positive, got {}", self.vol)));
        }
        if self.digits == 0 || self.digits > 17 {
            return Err(CliError::Input(format!("digits must lie in 1..=17, got {}", self.digits)));
        }
        Ok(())
    }
}
