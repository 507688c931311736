use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul};

use serde::{Serialize, Serializer};

/// An exact angle counted in units of π/30, so a full turn is 60 units.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AngleWeight(u32);

impl AngleWeight {
    pub const ZERO: Self = Self(0);
    /// Corner of a subdivided pentagon at a rim vertex, 3π/10.
    pub const WHEEL_RIM: Self = Self(9);
    /// Corner of an equilateral triangle, π/3.
    pub const EQUILATERAL: Self = Self(10);
    /// Corner of a subdivided pentagon at its center, 2π/5.
    pub const WHEEL_APEX: Self = Self(12);
    /// Interior corner of a regular pentagon, 3π/5.
    pub const PENTAGON: Self = Self(18);
    pub const FULL_TURN: Self = Self(60);

    pub const fn from_units(units: u32) -> Self {
        Self(units)
    }

    pub const fn units(self) -> u32 {
        self.0
    }

    /// `num·π/den`, if that is a whole number of units.
    pub fn from_pi_fraction(num: u32, den: u32) -> Option<Self> {
        if den == 0 || !(num * 30).is_multiple_of(den) {
            return None;
        }
        Some(Self(num * 30 / den))
    }

    /// The angle as a reduced fraction `(num, den)` of π.
    pub fn pi_fraction(self) -> (u32, u32) {
        let g = gcd(self.0, 30);
        if g == 0 {
            return (0, 1);
        }
        (self.0 / g, 30 / g)
    }

    /// Display form `k·π/30`.
    pub fn display_units(self) -> String {
        format!("{}·π/30", self.0)
    }
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl fmt::Display for AngleWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.pi_fraction() {
            (0, _) => write!(f, "0"),
            (1, 1) => write!(f, "π"),
            (n, 1) => write!(f, "{n}π"),
            (1, d) => write!(f, "π/{d}"),
            (n, d) => write!(f, "{n}π/{d}"),
        }
    }
}

impl Add for AngleWeight {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self(self.0 + rhs.0)
    }
}

impl AddAssign for AngleWeight {
    fn add_assign(&mut self, rhs: Self) {
        self.0 += rhs.0;
    }
}

impl Mul<AngleWeight> for u32 {
    type Output = AngleWeight;
    fn mul(self, rhs: AngleWeight) -> AngleWeight {
        AngleWeight(self * rhs.0)
    }
}

impl Sum for AngleWeight {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::ZERO, Add::add)
    }
}

/// Serialized as `{"units": k, "display": "k·π/30"}`.
impl Serialize for AngleWeight {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("AngleWeight", 2)?;
        st.serialize_field("units", &self.0)?;
        st.serialize_field("display", &self.display_units())?;
        st.end()
    }
}
