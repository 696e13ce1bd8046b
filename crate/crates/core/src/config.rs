//! Search bounds and output settings, loadable from JSON and overridable through
//! `NNPOLY_*` environment variables.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::zx::KroneckerLimits;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::Parse(format!("unknown output format {other:?}"))),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Text => "text",
            OutputFormat::Json => "json",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub e_degree_bound: usize,
    pub root_closure_n_max: u32,
    pub a_lambda_k_max: u32,
    pub kronecker_deg_cap: usize,
    pub factorization_cache_size: usize,
    pub output: OutputFormat,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            e_degree_bound: 6,
            root_closure_n_max: 8,
            a_lambda_k_max: 12,
            kronecker_deg_cap: 16,
            factorization_cache_size: 100_000,
            output: OutputFormat::Text,
        }
    }
}

const ENV_PREFIX: &str = "NNPOLY_";

impl Config {
    pub fn from_json(text: &str) -> Result<Self> {
        let c: Config =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("config: {e}")))?;
        c.validate()?;
        Ok(c)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::domain(format!("reading {}: {e}", path.display())))?;
        Config::from_json(&text)
    }

    pub fn validate(&self) -> Result<()> {
        let bounds = [
            ("e_degree_bound", self.e_degree_bound),
            ("root_closure_n_max", self.root_closure_n_max as usize),
            ("a_lambda_k_max", self.a_lambda_k_max as usize),
            ("kronecker_deg_cap", self.kronecker_deg_cap),
            ("factorization_cache_size", self.factorization_cache_size),
        ];
        for (name, v) in bounds {
            if v == 0 {
                return Err(Error::domain(format!("{name} must be at least 1")));
            }
        }
        Ok(())
    }

    /// Applies `NNPOLY_<FIELD>` overrides from the process environment.
    pub fn apply_env(&mut self) -> Result<()> {
        self.apply_vars(std::env::vars())
    }

    pub fn apply_vars(&mut self, vars: impl IntoIterator<Item = (String, String)>) -> Result<()> {
        fn num<T: FromStr>(key: &str, v: &str) -> Result<T> {
            v.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("{key}: expected a number, got {v:?}")))
        }
        for (key, v) in vars {
            let Some(field) = key.strip_prefix(ENV_PREFIX) else {
                continue;
            };
            match field.to_ascii_lowercase().as_str() {
                "e_degree_bound" => self.e_degree_bound = num(&key, &v)?,
                "root_closure_n_max" => self.root_closure_n_max = num(&key, &v)?,
                "a_lambda_k_max" => self.a_lambda_k_max = num(&key, &v)?,
                "kronecker_deg_cap" => self.kronecker_deg_cap = num(&key, &v)?,
                "factorization_cache_size" => self.factorization_cache_size = num(&key, &v)?,
                "output" => self.output = v.parse()?,
                _ => {}
            }
        }
        self.validate()
    }

    pub fn kronecker_limits(&self) -> KroneckerLimits {
        KroneckerLimits {
            max_degree: self.kronecker_deg_cap,
            ..KroneckerLimits::default()
        }
    }
}
