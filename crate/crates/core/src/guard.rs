//! Resource guards. Enumeration-heavy operations refuse inputs past these
//! bounds instead of silently truncating.

use crate::error::{Error, Result};

pub const GUARD_ENV: &str = "HWMLAB_GUARD_OVERRIDE";

/// Largest rank for full dot-orbit enumeration.
pub const ORBIT_RANK: usize = 8;
/// Largest rank accepted by the PBW engine.
pub const PBW_RANK: usize = 3;
/// Largest rank for building and certifying central generators.
pub const GENERATOR_RANK: usize = 2;
/// Largest word length `2r` enumerated for generators.
pub const WORD_LENGTH: usize = 12;
/// Largest depth for the SL2 module probe.
pub const PROBE_DEPTH: usize = 8;

/// Multiplier applied to every bound when the override variable is set to a
/// positive integer (`1` is treated as `2`).
fn override_factor() -> usize {
    match std::env::var(GUARD_ENV) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(0) => 1,
            Ok(1) => 2,
            Ok(k) => k,
            Err(_) => 2,
        },
        Err(_) => 1,
    }
}

pub fn limit(base: usize) -> usize {
    base.saturating_mul(override_factor())
}

pub fn check(what: &'static str, value: usize, base: usize) -> Result<()> {
    let limit = limit(base);
    if value > limit {
        return Err(Error::Guard { what, value, limit });
    }
    Ok(())
}
