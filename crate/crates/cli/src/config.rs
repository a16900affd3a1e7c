//! TOML run configuration.

use std::path::Path;

use ellgcd_core::{ArConfig, FFPoint, Poly, SectionPair, SurfaceModel};
use serde::{Deserialize, Serialize};

use crate::corpus;

/// A schema problem; always reported before any computation runs.
#[derive(Debug)]
pub struct SchemaError(pub String);

impl std::fmt::Display for SchemaError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub independence_asserted: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q1: Option<FFPoint>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q2: Option<FFPoint>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e1: Option<SurfaceModel>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p1: Option<FFPoint>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e2: Option<SurfaceModel>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p2: Option<FFPoint>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ar: Option<ArSection>,
    #[serde(default)]
    pub params: Params,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArSection {
    pub a: Poly,
    pub b: Poly,
}

/// Command parameters; command-line flags take precedence.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Params {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_max: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_min: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prime_max: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diagonal: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub depth: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fiber_depth: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t_height_cap: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub side: Option<u8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub workers: Option<usize>,
}

impl RunConfig {
    pub fn parse(text: &str) -> Result<Self, SchemaError> {
        let cfg: RunConfig = toml::from_str(text).map_err(|e| SchemaError(format!("config: {e}")))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, SchemaError> {
        let text = std::fs::read_to_string(path).map_err(|e| SchemaError(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn builtin(name: &str) -> Result<Self, SchemaError> {
        let text = corpus::get(name).ok_or_else(|| {
            SchemaError(format!("unknown built-in config {name:?}; known: {}", corpus::names().join(", ")))
        })?;
        Self::parse(text)
    }

    /// Checks everything that can be checked without running a command.
    fn validate(&self) -> Result<(), SchemaError> {
        for side in [1u8, 2] {
            let (e, p, q) = self.raw_side(side);
            match (e, p) {
                (Some(e), Some(p)) => {
                    for pt in [Some(p), q].into_iter().flatten() {
                        e.check(pt)
                            .map_err(|_| SchemaError(format!("a section on side {side} does not lie on e{side}")))?;
                    }
                }
                (None, None) if q.is_none() => {}
                _ => return Err(SchemaError(format!("e{side} and p{side} must be given together"))),
            }
        }
        if let Some(ar) = &self.ar {
            ArConfig::new(ar.a.clone(), ar.b.clone()).map_err(|e| SchemaError(format!("ar: {e}")))?;
        }
        if let Some(s) = self.params.side {
            if s != 1 && s != 2 {
                return Err(SchemaError("params.side must be 1 or 2".into()));
            }
        }
        Ok(())
    }

    fn raw_side(&self, side: u8) -> (Option<&SurfaceModel>, Option<&FFPoint>, Option<&FFPoint>) {
        if side == 1 {
            (self.e1.as_ref(), self.p1.as_ref(), self.q1.as_ref())
        } else {
            (self.e2.as_ref(), self.p2.as_ref(), self.q2.as_ref())
        }
    }

    /// Surface, section and translate on one side.
    pub fn side(&self, side: u8) -> Result<(SurfaceModel, FFPoint, FFPoint), SchemaError> {
        match self.raw_side(side) {
            (Some(e), Some(p), q) => Ok((e.clone(), p.clone(), q.cloned().unwrap_or(FFPoint::Identity))),
            _ => Err(SchemaError(format!("config has no e{side}/p{side}"))),
        }
    }

    pub fn pair(&self) -> Result<SectionPair, SchemaError> {
        let (e1, p1, q1) = self.side(1)?;
        let (e2, p2, q2) = self.side(2)?;
        SectionPair::new(e1, p1, q1, e2, p2, q2, self.independence_asserted.unwrap_or(true))
            .map_err(|e| SchemaError(e.to_string()))
    }

    pub fn ar_config(&self) -> Result<ArConfig, SchemaError> {
        let ar = self.ar.as_ref().ok_or_else(|| SchemaError("config has no [ar] section".into()))?;
        ArConfig::new(ar.a.clone(), ar.b.clone()).map_err(|e| SchemaError(e.to_string()))
    }
}
