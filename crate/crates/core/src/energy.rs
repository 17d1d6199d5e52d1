//! Energy values and the clamped accumulation used to track battery depletion.
//!
//! A depletion is `B` minus the current charge. Walking an arc of cost `c`
//! from depletion `x` lands at `[x + c]` clamped into `[0, B]`: anything
//! below zero means the battery topped out at full, anything above `B`
//! means the arc could not be driven and maps to [`Energy::PosInf`].
//! The operation is not associative, so every fold in this crate fixes its
//! direction explicitly.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An extended integer: a finite number of energy units or one of two
/// sentinels.
///
/// Variant order gives the natural ordering `NegInf < Finite(_) < PosInf`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Energy {
    /// "Unreachable" marker for maximum final charges. Never fed to `oplus`.
    NegInf,
    Finite(i64),
    /// Not traversable / unreachable depletion.
    PosInf,
}

impl Energy {
    pub const ZERO: Energy = Energy::Finite(0);

    pub fn is_finite(self) -> bool {
        matches!(self, Energy::Finite(_))
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            Energy::Finite(k) => Some(k),
            _ => None,
        }
    }

    /// Adds a finite offset, leaving sentinels untouched.
    pub fn shift(self, by: i64) -> Energy {
        match self {
            Energy::Finite(k) => Energy::Finite(k + by),
            other => other,
        }
    }
}

impl From<i64> for Energy {
    fn from(k: i64) -> Self {
        Energy::Finite(k)
    }
}

impl PartialEq<i64> for Energy {
    fn eq(&self, other: &i64) -> bool {
        *self == Energy::Finite(*other)
    }
}

impl PartialOrd<i64> for Energy {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        Some(self.cmp(&Energy::Finite(*other)))
    }
}

impl FromStr for Energy {
    type Err = std::num::ParseIntError;

    /// Accepts `inf`, `-inf` or a decimal integer.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "inf" => Ok(Energy::PosInf),
            "-inf" => Ok(Energy::NegInf),
            _ => s.parse().map(Energy::Finite),
        }
    }
}

impl fmt::Display for Energy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Energy::NegInf => f.write_str("-inf"),
            Energy::Finite(k) => write!(f, "{k}"),
            Energy::PosInf => f.write_str("inf"),
        }
    }
}

/// Battery capacity `B`.
///
/// Bounded by [`Capacity::MAX`] so that `x + y` for any two in-range values
/// (at most `2B` in magnitude) never overflows an `i64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Capacity(i64);

impl Capacity {
    pub const MAX: i64 = 1 << 61;

    pub fn new(units: i64) -> Result<Self> {
        if (0..=Self::MAX).contains(&units) {
            Ok(Capacity(units))
        } else {
            Err(Error::InvalidCapacity(units))
        }
    }

    pub fn get(self) -> i64 {
        self.0
    }

    /// `[z]` clamped into `[0, B]`: negative values become 0, values above
    /// `B` become `PosInf`.
    pub fn clamp(self, z: Energy) -> Energy {
        match z {
            Energy::Finite(k) if k < 0 => Energy::ZERO,
            Energy::Finite(k) if k <= self.0 => Energy::Finite(k),
            Energy::Finite(_) | Energy::PosInf => Energy::PosInf,
            Energy::NegInf => {
                debug_assert!(false, "NegInf is not a depletion");
                Energy::ZERO
            }
        }
    }

    /// `x ⊕ y = [x + y]`, with `PosInf` absorbing.
    ///
    /// Operands are `PosInf` or finite; in-range values are `[-B, B]`, but
    /// any finite operand is summed exactly.
    #[inline]
    pub fn oplus(self, x: Energy, y: Energy) -> Energy {
        match (x, y) {
            (Energy::Finite(a), Energy::Finite(b)) => {
                // exact for any i64 operands, not just [-B, B]
                let z = a as i128 + b as i128;
                if z < 0 {
                    Energy::ZERO
                } else if z <= self.0 as i128 {
                    Energy::Finite(z as i64)
                } else {
                    Energy::PosInf
                }
            }
            (Energy::NegInf, _) | (_, Energy::NegInf) => {
                debug_assert!(false, "NegInf never enters oplus");
                Energy::PosInf
            }
            _ => Energy::PosInf,
        }
    }

    /// Depletion after driving an arc of cost `cost` from depletion `from`.
    #[inline]
    pub fn step(self, from: Energy, cost: i64) -> Energy {
        self.oplus(from, Energy::Finite(cost))
    }

    /// Whether `cost` lies in `[-B, B]`.
    pub fn admits(self, cost: i64) -> bool {
        cost >= -self.0 && cost <= self.0
    }
}

impl fmt::Display for Capacity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Capacity `B` and initial charge `b`, with `0 <= b <= B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BatteryConfig {
    capacity: Capacity,
    initial: i64,
}

impl BatteryConfig {
    pub fn new(capacity: i64, initial: i64) -> Result<Self> {
        let capacity = Capacity::new(capacity)?;
        if !(0..=capacity.get()).contains(&initial) {
            return Err(Error::InvalidInitialCharge {
                capacity: capacity.get(),
                initial,
            });
        }
        Ok(BatteryConfig { capacity, initial })
    }

    pub fn full(capacity: Capacity) -> Self {
        BatteryConfig {
            capacity,
            initial: capacity.get(),
        }
    }

    pub fn capacity(&self) -> Capacity {
        self.capacity
    }

    pub fn initial(&self) -> i64 {
        self.initial
    }

    /// `B - b`: the depletion the battery starts with.
    pub fn initial_depletion(&self) -> i64 {
        self.capacity.get() - self.initial
    }
}
