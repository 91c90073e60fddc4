use std::fmt;
use std::ops::Add;

use serde::{Serialize, Serializer};

/// A move count in `ℕ ∪ {∞}`. `Infinite` means the player in question has
/// no winning strategy; it is the top of the order and absorbs addition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GameValue {
    Finite(u32),
    Infinite,
}

impl GameValue {
    pub const ZERO: GameValue = GameValue::Finite(0);

    pub fn is_finite(self) -> bool {
        matches!(self, GameValue::Finite(_))
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            GameValue::Finite(m) => Some(m),
            GameValue::Infinite => None,
        }
    }

    /// Unpacks a search byte, `u8::MAX` standing for `Infinite`.
    pub(crate) fn from_byte(b: u8) -> Self {
        if b == u8::MAX {
            GameValue::Infinite
        } else {
            GameValue::Finite(b as u32)
        }
    }
}

impl Add<u32> for GameValue {
    type Output = GameValue;

    fn add(self, rhs: u32) -> GameValue {
        match self {
            GameValue::Finite(m) => GameValue::Finite(m + rhs),
            GameValue::Infinite => GameValue::Infinite,
        }
    }
}

impl From<u32> for GameValue {
    fn from(m: u32) -> Self {
        GameValue::Finite(m)
    }
}

impl fmt::Display for GameValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GameValue::Finite(m) => write!(f, "{m}"),
            GameValue::Infinite => write!(f, "infinity"),
        }
    }
}

/// Finite values serialize as integers, `Infinite` as the string `"infinity"`.
impl Serialize for GameValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            GameValue::Finite(m) => serializer.serialize_u32(*m),
            GameValue::Infinite => serializer.serialize_str("infinity"),
        }
    }
}
