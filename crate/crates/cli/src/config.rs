//! Option resolution: command-line flag, then `--config` file, then
//! environment (`JP_EXACT_CAP`, `JP_RESTARTS`), then the built-in default.

use std::collections::BTreeMap;
use std::str::FromStr;

use crate::CliError;

pub const KEYS: &[&str] = &["seed", "restarts", "exact-cap", "epsilon", "mode", "n", "m", "count", "out"];

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConfigFile {
    values: BTreeMap<String, (usize, String)>,
}

impl ConfigFile {
    /// `key = value` lines; `_` and `-` are interchangeable in keys.
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut values = BTreeMap::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| CliError::Input(format!("config line {}: expected `key = value`", i + 1)))?;
            let key = key.trim().replace('_', "-");
            if !KEYS.contains(&key.as_str()) {
                return Err(CliError::Input(format!("config line {}: unknown key `{key}`", i + 1)));
            }
            values.insert(key, (i + 1, value.trim().to_string()));
        }
        Ok(Self { values })
    }

    pub fn load(path: Option<&std::path::Path>) -> Result<Self, CliError> {
        match path {
            None => Ok(Self::default()),
            Some(p) => Self::parse(&crate::read_input(p)?),
        }
    }

    fn get<T: FromStr>(&self, key: &str) -> Result<Option<T>, CliError> {
        self.values
            .get(key)
            .map(|(line, raw)| {
                raw.parse()
                    .map_err(|_| CliError::Input(format!("config line {line}: invalid {key} `{raw}`")))
            })
            .transpose()
    }

    /// Flag, else config value, else `env` (if named and set), else `default`.
    pub fn resolve<T: FromStr>(
        &self,
        key: &str,
        flag: Option<T>,
        env: Option<&str>,
        default: T,
    ) -> Result<T, CliError> {
        if let Some(v) = flag {
            return Ok(v);
        }
        if let Some(v) = self.get(key)? {
            return Ok(v);
        }
        if let Some(var) = env {
            if let Ok(raw) = std::env::var(var) {
                return raw
                    .trim()
                    .parse()
                    .map_err(|_| CliError::Input(format!("environment {var}: invalid value `{raw}`")));
            }
        }
        Ok(default)
    }

    pub fn resolve_opt<T: FromStr>(&self, key: &str, flag: Option<T>) -> Result<Option<T>, CliError> {
        match flag {
            Some(v) => Ok(Some(v)),
            None => self.get(key),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        let cfg = ConfigFile::parse("# caps\nexact_cap = 500\nseed=9\n").unwrap();
        assert_eq!(cfg.resolve("exact-cap", Some(7u64), None, 1).unwrap(), 7);
        assert_eq!(cfg.resolve("exact-cap", None::<u64>, None, 1).unwrap(), 500);
        assert_eq!(cfg.resolve("restarts", None::<usize>, None, 32).unwrap(), 32);
        assert_eq!(cfg.resolve_opt::<u64>("seed", None).unwrap(), Some(9));
    }

    #[test]
    fn rejects_bad_lines() {
        assert!(ConfigFile::parse("seed 3").is_err());
        assert!(ConfigFile::parse("colour = red").is_err());
        let cfg = ConfigFile::parse("restarts = lots").unwrap();
        assert!(cfg.resolve("restarts", None::<usize>, None, 1).is_err());
    }
}
