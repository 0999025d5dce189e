use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A possibly primed entry, stored doubled: `2k` is `k` and `2k − 1` is `k′`.
/// The derived order is the order `1′ < 1 < 2′ < 2 < ⋯`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Entry(pub i32);

impl Entry {
    pub fn unprimed(k: i32) -> Self {
        Entry(2 * k)
    }

    pub fn primed(k: i32) -> Self {
        Entry(2 * k - 1)
    }

    /// The underlying integer `k` of `k` or `k′`.
    pub fn value(self) -> i32 {
        (self.0 + 1).div_euclid(2)
    }

    pub fn is_primed(self) -> bool {
        self.0.rem_euclid(2) == 1
    }

    pub fn toggle_prime(self) -> Self {
        if self.is_primed() {
            Entry(self.0 + 1)
        } else {
            Entry(self.0 - 1)
        }
    }

    pub fn unprime(self) -> Self {
        Entry::unprimed(self.value())
    }

    pub fn with_value(self, k: i32) -> Self {
        if self.is_primed() {
            Entry::primed(k)
        } else {
            Entry::unprimed(k)
        }
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_primed() {
            write!(f, "{}'", self.value())
        } else {
            write!(f, "{}", self.value())
        }
    }
}

impl FromStr for Entry {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (body, primed) = match s.strip_suffix('\'') {
            Some(b) => (b, true),
            None => (s, false),
        };
        let k: i32 = body.parse().map_err(|_| Error::InvalidInput(format!("bad tableau entry {s:?}")))?;
        Ok(if primed { Entry::primed(k) } else { Entry::unprimed(k) })
    }
}

impl Serialize for Entry {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Entry {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
