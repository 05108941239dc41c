//! The one place where runtime defaults live. A TOML file can override any
//! subset of them, command-line flags override both, and environment
//! variables are deliberately not consulted: a command plus its config file
//! always reproduces the same run.

use std::path::Path;

use anyhow::Context;
use serde::Deserialize;

#[derive(Debug, Clone, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Defaults {
    /// Grid points for sampling, field construction, and comparisons.
    pub grid: usize,
    /// Headline tolerance handed to the similarity and certification checks.
    pub tol: f64,
    /// Fraction of the half-period kept away from the salkowski domain ends,
    /// where the torsion diverges.
    pub margin: f64,
    /// Finite-difference step for curves without attached derivatives;
    /// unset means each curve picks a step from its own domain span.
    pub fd_step: Option<f64>,
}

impl Default for Defaults {
    fn default() -> Defaults {
        Defaults {
            grid: 2001,
            tol: 1e-4,
            margin: 0.05,
            fd_step: None,
        }
    }
}

pub fn load(path: Option<&Path>) -> anyhow::Result<Defaults> {
    let Some(path) = path else {
        return Ok(Defaults::default());
    };
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading config {}", path.display()))?;
    let defaults: Defaults = toml::from_str(&text).map_err(|e| {
        quatcurve::Error::InvalidParameter(format!("config {}: {e}", path.display()))
    })?;
    Ok(defaults)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overrides_are_partial() {
        let d: Defaults = toml::from_str("grid = 101").unwrap();
        assert_eq!(d.grid, 101);
        assert_eq!(d.tol, 1e-4);
        assert!(d.fd_step.is_none());
    }

    #[test]
    fn unknown_keys_are_rejected() {
        assert!(toml::from_str::<Defaults>("grd = 101").is_err());
    }
}
