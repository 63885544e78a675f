//! Line-oriented `key = value` run configuration.

use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

use crate::error::CliError;

/// Value type a key must parse as.
#[derive(Clone, Copy)]
enum Kind {
    Num,
    Int,
    Text,
}

/// Every accepted key with its default. `None` means the key has no default and is
/// only read by commands that need it.
const KEYS: &[(&str, Kind, Option<&str>)] = &[
    // physics
    ("m_i", Kind::Num, Some("1")),
    ("m_g", Kind::Num, Some("1")),
    ("g", Kind::Num, Some("0")),
    ("gamma", Kind::Num, Some("0")),
    ("hbar", Kind::Num, Some("1")),
    ("k", Kind::Num, Some("1")),
    // pulse sequence
    ("T", Kind::Num, Some("1")),
    ("phi0", Kind::Num, Some("0")),
    ("phi_T", Kind::Num, Some("0")),
    ("phi_2T", Kind::Num, Some("0")),
    ("delta_phi", Kind::Num, None),
    // phase-space grid
    ("z_min", Kind::Num, Some("-10")),
    ("z_max", Kind::Num, Some("10")),
    ("n_z", Kind::Int, Some("128")),
    ("p_min", Kind::Num, Some("-10")),
    ("p_max", Kind::Num, Some("10")),
    ("n_p", Kind::Int, Some("128")),
    // initial state
    ("state", Kind::Text, Some("gaussian")),
    ("z0", Kind::Num, Some("0")),
    ("p0", Kind::Num, Some("0")),
    ("sigma", Kind::Num, Some("1")),
    ("level", Kind::Int, Some("0")),
    ("omega", Kind::Num, Some("1")),
    // sampled wavefunction axis
    ("psi_min", Kind::Num, Some("-32")),
    ("psi_max", Kind::Num, Some("32")),
    ("psi_n", Kind::Int, Some("1024")),
    // propagate
    ("path", Kind::Text, Some("interference")),
    ("flow_time", Kind::Num, None),
    // ifm / ifm-sweep
    ("method", Kind::Text, Some("exact")),
    ("endpoints_csv", Kind::Text, None),
    ("sweep_points", Kind::Int, Some("64")),
    ("threads", Kind::Int, Some("0")),
    // eigen
    ("spectrum", Kind::Text, Some("bouncer")),
    ("n_max", Kind::Int, Some("10")),
    ("source_mass", Kind::Num, Some("1")),
    ("G", Kind::Num, Some("1")),
    ("m_g_scale", Kind::Num, Some("1")),
    ("m_i_scale", Kind::Num, Some("1")),
    // oracle
    ("oracle_half_width", Kind::Num, Some("40")),
    ("oracle_n", Kind::Int, Some("2048")),
    ("oracle_steps", Kind::Int, Some("512")),
];

fn lookup(key: &str) -> Option<&'static (&'static str, Kind, Option<&'static str>)> {
    KEYS.iter().find(|(k, _, _)| *k == key)
}

/// Resolved configuration: file keys, then overrides, then defaults.
#[derive(Debug, Clone, Default)]
pub struct RunConfig {
    values: BTreeMap<String, String>,
}

impl RunConfig {
    pub fn parse(text: &str, origin: &str) -> Result<Self, CliError> {
        let mut cfg = Self::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((k, v)) = line.split_once('=') else {
                return Err(CliError::Config(format!("{origin}:{}: expected `key = value`, got `{line}`", i + 1)));
            };
            cfg.set(k.trim(), v.trim())?;
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read config {}: {e}", path.display())))?;
        Self::parse(&text, &path.display().to_string())
    }

    pub fn set(&mut self, key: &str, value: &str) -> Result<(), CliError> {
        let Some((_, kind, _)) = lookup(key) else {
            return Err(CliError::Config(format!("unknown key `{key}`")));
        };
        if value.is_empty() {
            return Err(CliError::Config(format!("key `{key}` has an empty value")));
        }
        let well_typed = match kind {
            Kind::Num => value.parse::<f64>().is_ok_and(f64::is_finite),
            Kind::Int => value.parse::<usize>().is_ok(),
            Kind::Text => true,
        };
        if !well_typed {
            return Err(CliError::Config(format!("key `{key}`: cannot parse `{value}`")));
        }
        self.values.insert(key.to_string(), value.to_string());
        Ok(())
    }

    /// `key=value` from the command line.
    pub fn set_pair(&mut self, pair: &str) -> Result<(), CliError> {
        let (k, v) = pair
            .split_once('=')
            .ok_or_else(|| CliError::Config(format!("override `{pair}` is not of the form key=value")))?;
        self.set(k.trim(), v.trim())
    }

    fn raw(&self, key: &str) -> Option<&str> {
        debug_assert!(lookup(key).is_some(), "unregistered key {key}");
        self.values.get(key).map(String::as_str).or_else(|| lookup(key).and_then(|(_, _, d)| *d))
    }

    pub fn get<T: FromStr>(&self, key: &str) -> Result<T, CliError> {
        let raw = self.raw(key).ok_or_else(|| CliError::Config(format!("missing required key `{key}`")))?;
        raw.parse()
            .map_err(|_| CliError::Config(format!("key `{key}`: cannot parse `{raw}`")))
    }

    pub fn get_opt<T: FromStr>(&self, key: &str) -> Result<Option<T>, CliError> {
        match self.raw(key) {
            None => Ok(None),
            Some(_) => self.get(key).map(Some),
        }
    }

    /// All resolved keys in sorted order, for output headers.
    pub fn provenance(&self) -> Vec<(String, String)> {
        let mut out: Vec<(String, String)> = KEYS
            .iter()
            .filter_map(|(k, _, _)| self.raw(k).map(|v| (k.to_string(), v.to_string())))
            .collect();
        out.sort();
        out
    }
}
