//! Flat `key = value` configuration files.
//!
//! Keys: `density`, `alpha`, `r_d`, `n_rx`, `p_dbm`, `sigma2_dbm` (`-inf` for
//! interference-limited), `pathloss` (`unbounded` | `bounded`), `r_sim`
//! (defaults to `10 * r_d`), `far_field` (`mean_field` | `truncate`).
//! Blank lines and `#` comments are ignored.

use std::path::Path;

use densecap_core::config::dbm_to_mw;
use densecap_core::{FarField, NetworkConfig, PathLoss};

use crate::error::{CliError, Result};

pub const KEYS: [&str; 9] = [
    "density",
    "alpha",
    "r_d",
    "n_rx",
    "p_dbm",
    "sigma2_dbm",
    "pathloss",
    "r_sim",
    "far_field",
];

fn usage(msg: String) -> CliError {
    CliError::Usage(msg)
}

/// Splits `key=value`, trimming both sides.
pub fn split_pair(text: &str) -> Result<(String, String)> {
    let (k, v) = text
        .split_once('=')
        .ok_or_else(|| usage(format!("expected key=value, got '{text}'")))?;
    let (k, v) = (k.trim(), v.trim());
    if !KEYS.contains(&k) {
        return Err(usage(format!("unknown config key '{k}' (known: {})", KEYS.join(", "))));
    }
    Ok((k.to_string(), v.to_string()))
}

pub fn parse_pairs(text: &str) -> Result<Vec<(String, String)>> {
    let mut pairs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        pairs.push(split_pair(line).map_err(|e| usage(format!("line {}: {e}", i + 1)))?);
    }
    Ok(pairs)
}

fn number(key: &str, value: &str) -> Result<f64> {
    value
        .parse::<f64>()
        .map_err(|_| usage(format!("{key}: '{value}' is not a number")))
}

/// Applies `pairs` in order on top of the default configuration; later pairs win.
pub fn resolve(pairs: &[(String, String)]) -> Result<NetworkConfig> {
    let mut cfg = NetworkConfig::default();
    let mut r_sim = None;
    for (k, v) in pairs {
        match k.as_str() {
            "density" => cfg.density = number(k, v)?,
            "alpha" => cfg.alpha = number(k, v)?,
            "r_d" => cfg.comm_range = number(k, v)?,
            "n_rx" => {
                cfg.n_rx = v
                    .parse()
                    .map_err(|_| usage(format!("n_rx: '{v}' is not a positive integer")))?
            }
            "p_dbm" => cfg.tx_power_mw = dbm_to_mw(number(k, v)?),
            "sigma2_dbm" => cfg.noise_power_mw = dbm_to_mw(number(k, v)?),
            "pathloss" => {
                cfg.pathloss = match v.as_str() {
                    "unbounded" => PathLoss::Unbounded,
                    "bounded" => PathLoss::Bounded,
                    _ => return Err(usage(format!("pathloss: expected unbounded|bounded, got '{v}'"))),
                }
            }
            "r_sim" => r_sim = Some(number(k, v)?),
            "far_field" => {
                cfg.far_field = match v.as_str() {
                    "mean_field" => FarField::MeanField,
                    "truncate" => FarField::Truncate,
                    _ => return Err(usage(format!("far_field: expected mean_field|truncate, got '{v}'"))),
                }
            }
            _ => unreachable!("keys are checked when parsed"),
        }
    }
    cfg.sim_radius = r_sim.unwrap_or(10.0 * cfg.comm_range);
    cfg.validate()?;
    Ok(cfg)
}

/// Reads the optional file and applies `--set` overrides after it.
pub fn load(path: Option<&Path>, overrides: &[String]) -> Result<NetworkConfig> {
    let mut pairs = match path {
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| usage(format!("{}: {e}", p.display())))?;
            parse_pairs(&text)?
        }
        None => Vec::new(),
    };
    for o in overrides {
        pairs.push(split_pair(o)?);
    }
    resolve(&pairs)
}
