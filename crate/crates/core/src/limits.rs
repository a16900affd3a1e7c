//! Resource caps shared by the height and scan routines.

use serde::{Deserialize, Serialize};

pub const DEFAULT_DEGREE_CAP: u64 = 5000;
pub const DEFAULT_BITS_CAP: u64 = 1_000_000;
pub const TORSION_CAP: u32 = 12;
pub const DEGREE_CAP_ENV: &str = "ELLGCD_DEGREE_CAP";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Largest admissible max(deg num, deg den) of an intermediate x-coordinate.
    pub degree_cap: u64,
    /// Largest admissible bit size of an intermediate rational coordinate.
    pub bits_cap: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            degree_cap: DEFAULT_DEGREE_CAP,
            bits_cap: DEFAULT_BITS_CAP,
        }
    }
}

impl Limits {
    /// Defaults, with the degree cap overridden by `ELLGCD_DEGREE_CAP` when set.
    pub fn from_env() -> Self {
        let mut l = Self::default();
        if let Some(cap) = std::env::var(DEGREE_CAP_ENV).ok().and_then(|v| v.trim().parse().ok()) {
            l.degree_cap = cap;
        }
        l
    }

    pub fn check_degree(&self, observed: u64) -> crate::Result<()> {
        if observed > self.degree_cap {
            Err(crate::Error::ResourceCap {
                what: "intermediate degree",
                limit: self.degree_cap,
                observed,
            })
        } else {
            Ok(())
        }
    }

    pub fn check_bits(&self, observed: u64) -> crate::Result<()> {
        if observed > self.bits_cap {
            Err(crate::Error::ResourceCap {
                what: "integer bit size",
                limit: self.bits_cap,
                observed,
            })
        } else {
            Ok(())
        }
    }
}
