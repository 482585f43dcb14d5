//! Flat `key = value` fixture files; `#` starts a comment line.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use crate::CliError;

#[derive(Debug, Default)]
pub struct Conf {
    entries: BTreeMap<String, String>,
}

impl Conf {
    pub fn load(path: Option<&Path>, known: &[&str]) -> Result<Self, CliError> {
        let Some(path) = path else { return Ok(Conf::default()) };
        let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        Conf::parse(&text, known).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
    }

    pub fn parse(text: &str, known: &[&str]) -> Result<Self, String> {
        let mut entries = BTreeMap::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((k, v)) = line.split_once('=') else {
                return Err(format!("line {}: expected key = value", n + 1));
            };
            let k = k.trim();
            if !known.contains(&k) {
                return Err(format!("line {}: unknown key {k:?}", n + 1));
            }
            entries.insert(k.to_string(), v.trim().to_string());
        }
        Ok(Conf { entries })
    }

    /// The flag if given, else the file entry, else `default`.
    pub fn pick<T: FromStr>(&self, flag: Option<T>, key: &str, default: T) -> Result<T, CliError> {
        if let Some(v) = flag {
            return Ok(v);
        }
        match self.entries.get(key) {
            Some(s) => s.parse().map_err(|_| CliError::Input(format!("config key {key}: cannot parse {s:?}"))),
            None => Ok(default),
        }
    }
}
