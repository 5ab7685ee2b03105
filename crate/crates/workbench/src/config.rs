//! Suite configuration. The JSON file form mirrors the command-line flags.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::RunError;
use crate::registry;

/// Parameters of one named check. Unset fields fall back to the suite
/// defaults or to the check's own sweep.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckParams {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    /// `identity`, `symplectic` or a matrix file.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<String>,
    #[serde(default, rename = "K", skip_serializing_if = "Option::is_none")]
    pub order: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kmax: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub level: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub i: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckSpec {
    pub name: String,
    #[serde(default)]
    pub params: CheckParams,
}

impl CheckSpec {
    pub fn new(name: &str, params: CheckParams) -> Self {
        CheckSpec { name: name.into(), params }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Defaults {
    #[serde(rename = "K")]
    pub order: u32,
    pub kmax: usize,
    pub level: u32,
}

impl Default for Defaults {
    fn default() -> Self {
        Defaults { order: 8, kmax: 3, level: 2 }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Inputs {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteConfig {
    pub checks: Vec<CheckSpec>,
    #[serde(default)]
    pub inputs: Inputs,
    #[serde(default)]
    pub defaults: Defaults,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parallelism: Option<usize>,
    /// Directory that relative input paths resolve against; not part of
    /// the file form.
    #[serde(skip)]
    pub base_dir: Option<PathBuf>,
}

pub const MAX_N: usize = 6;
pub const MAX_ORDER: u32 = 16;
pub const MAX_KMAX: usize = 4;
pub const MAX_LEVEL: u32 = 4;

impl SuiteConfig {
    pub fn from_json(text: &str, origin: &Path) -> Result<Self, RunError> {
        let mut cfg: SuiteConfig = serde_json::from_str(text)
            .map_err(|e| RunError::Parse { path: origin.to_path_buf(), message: e.to_string() })?;
        cfg.base_dir = origin.parent().map(Path::to_path_buf);
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, RunError> {
        let text =
            std::fs::read_to_string(path).map_err(|source| RunError::Read { path: path.to_path_buf(), source })?;
        Self::from_json(&text, path)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    /// Every check exists and every parameter is within its bound.
    pub fn validate(&self) -> Result<(), RunError> {
        let d = &self.defaults;
        bound("defaults", "K", d.order as usize, MAX_ORDER as usize)?;
        bound("defaults", "kmax", d.kmax, MAX_KMAX)?;
        bound("defaults", "level", d.level as usize, MAX_LEVEL as usize)?;
        if self.parallelism == Some(0) {
            return Err(RunError::param("suite", "parallelism must be at least 1"));
        }
        for c in &self.checks {
            if registry::lookup(&c.name).is_none() {
                return Err(RunError::UnknownCheck(c.name.clone()));
            }
            let p = &c.params;
            if let Some(n) = p.n {
                if n == 0 || n > MAX_N {
                    return Err(RunError::param(&c.name, format!("n = {n} outside 1..={MAX_N}")));
                }
            }
            if let Some(v) = p.order {
                bound(&c.name, "K", v as usize, MAX_ORDER as usize)?;
            }
            if let Some(v) = p.kmax {
                bound(&c.name, "kmax", v, MAX_KMAX)?;
            }
            if let Some(v) = p.level {
                bound(&c.name, "level", v as usize, MAX_LEVEL as usize)?;
            }
            for (key, v) in [("k", p.k), ("m", p.m), ("i", p.i)] {
                if let Some(v) = v {
                    bound(&c.name, key, v, MAX_KMAX)?;
                }
            }
        }
        Ok(())
    }

    /// The suite behind the acceptance criteria.
    pub fn acceptance() -> Self {
        let mut checks = Vec::new();
        let mut add = |name: &str, p: CheckParams| checks.push(CheckSpec::new(name, p));
        let with = |n: usize, g: &str, x: &str| CheckParams {
            n: Some(n),
            g: Some(g.into()),
            x: Some(x.into()),
            ..CheckParams::default()
        };
        for n in 2..=4 {
            add("ybe", CheckParams { n: Some(n), ..CheckParams::default() });
            add("quasi_inverse", CheckParams { n: Some(n), ..CheckParams::default() });
        }
        for (n, g) in [(2, "identity"), (3, "identity"), (2, "symplectic"), (4, "symplectic")] {
            add("tau_symmetry", CheckParams { n: Some(n), g: Some(g.into()), ..CheckParams::default() });
        }
        for (n, x) in [(2, "identity"), (3, "identity"), (2, "symplectic"), (4, "symplectic")] {
            let p = with(n, "identity", x);
            add("re_components", CheckParams { kmax: Some(2), ..p.clone() });
            add("membership", CheckParams { kmax: Some(3), ..p.clone() });
            add("characteristic", CheckParams { kmax: Some(3), ..p });
        }
        for (n, g) in [(2, "identity"), (3, "identity"), (2, "symplectic")] {
            add("twisted_eval", CheckParams { n: Some(n), g: Some(g.into()), ..CheckParams::default() });
        }
        for n in 2..=3 {
            add("double_yangian", CheckParams { n: Some(n), ..CheckParams::default() });
        }
        add("pairing", CheckParams { n: Some(2), order: Some(10), ..CheckParams::default() });
        add("gl_bracket", CheckParams { n: Some(2), level: Some(2), ..CheckParams::default() });
        for g in ["identity", "symplectic"] {
            for d in 1..=2 {
                add(
                    "twisted_embedding",
                    CheckParams { n: Some(2), g: Some(g.into()), level: Some(d), ..CheckParams::default() },
                );
            }
        }
        for x in ["identity", "symplectic"] {
            add("intertwiner", CheckParams { order: Some(4), k: Some(1), m: Some(1), ..with(2, "identity", x) });
        }
        SuiteConfig { checks, ..SuiteConfig::default() }
    }

    /// The acceptance suite plus the remaining checks, including the
    /// negative controls that are expected to fail.
    pub fn full() -> Self {
        let mut cfg = Self::acceptance();
        let p = |n: usize, g: &str, x: &str| CheckParams {
            n: Some(n),
            g: Some(g.into()),
            x: Some(x.into()),
            ..CheckParams::default()
        };
        for n in 2..=3 {
            cfg.checks.push(CheckSpec::new("rtt_eval", CheckParams { n: Some(n), ..CheckParams::default() }));
        }
        for (g, x) in [("identity", "identity"), ("identity", "symplectic"), ("symplectic", "identity")] {
            cfg.checks.push(CheckSpec::new("re_constant", p(2, g, x)));
            cfg.checks.push(CheckSpec::new("conjugate_re", p(2, g, x)));
        }
        for x in ["identity", "symplectic"] {
            cfg.checks.push(CheckSpec::new("character_modes", CheckParams { level: Some(2), ..p(2, "identity", x) }));
        }
        cfg.checks.push(CheckSpec::new("characteristic_unprimed", p(2, "identity", "symplectic")));
        cfg.checks
            .push(CheckSpec::new("double_yangian_perturbed", CheckParams { n: Some(2), ..CheckParams::default() }));
        cfg
    }
}

fn bound(check: &str, key: &str, v: usize, max: usize) -> Result<(), RunError> {
    if v > max {
        return Err(RunError::param(check, format!("{key} = {v} exceeds {max}")));
    }
    Ok(())
}
