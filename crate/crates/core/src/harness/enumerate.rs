//! Materialized enumeration of `F`.

use crate::error::HarnessError;
use crate::events::Event;
use crate::measure::ExtendedSpace;

/// Largest `|Ω⁺|` for which `F` is enumerated (up to `3^8` events).
pub const ENUMERATION_CEILING: usize = 8;

pub fn check_ceiling(space: &ExtendedSpace) -> Result<(), HarnessError> {
    let atoms = space.ground().len();
    if atoms > ENUMERATION_CEILING {
        Err(HarnessError::CeilingExceeded {
            atoms,
            ceiling: ENUMERATION_CEILING,
        })
    } else {
        Ok(())
    }
}

/// Every member of `F` once, by size and then lexicographically.
pub fn enumerate_events(space: &ExtendedSpace) -> Result<Vec<Event>, HarnessError> {
    check_ceiling(space)?;
    Ok(space.f().iter().cloned().collect())
}
