//! Deterministic builders: the named configurations, tiling patches, and a seeded
//! random grower of CAT(0) discs.

mod presets;
mod random;
mod tiling;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::complex::TPComplex;
use crate::error::TopologyError;

pub use presets::{
    gen_fan1_pentagon_5triangles, gen_fan2_pentagons_3triangles, gen_fan3_pentagons_triangle, gen_star4_pentagons, HUB,
};
pub use random::{can_close, gen_random_cat0_disc, DEFAULT_BUDGET};
pub use tiling::{gen_pentagon_tiling, gen_triangle_tiling, MAX_PENTAGON_RADIUS, MAX_TRIANGLE_RADIUS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("unknown preset `{0}` (expected one of: star4, fan3, fan2, fan1, pent4-tiling, tri-tiling, random)")]
    UnknownPreset(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("radius {radius} exceeds the supported maximum {max}")]
    RadiusTooLarge { radius: usize, max: usize },
    #[error(
        "generation budget of {budget} attempts exhausted with {cells} cells, {vertex_count} vertices, boundary length {boundary_length}"
    )]
    GenerationBudgetExceeded { budget: usize, cells: usize, vertex_count: usize, boundary_length: usize },
    #[error("generated complex is invalid: {0}")]
    Invalid(TopologyError),
    #[error("generated complex fails the disc check: {0}")]
    Postcondition(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Preset {
    Star4,
    Fan3,
    Fan2,
    Fan1,
    Pent4Tiling,
    TriTiling,
    Random,
}

impl Preset {
    pub const ALL: [Preset; 7] =
        [Preset::Star4, Preset::Fan3, Preset::Fan2, Preset::Fan1, Preset::Pent4Tiling, Preset::TriTiling, Preset::Random];

    pub fn name(self) -> &'static str {
        match self {
            Preset::Star4 => "star4",
            Preset::Fan3 => "fan3",
            Preset::Fan2 => "fan2",
            Preset::Fan1 => "fan1",
            Preset::Pent4Tiling => "pent4-tiling",
            Preset::TriTiling => "tri-tiling",
            Preset::Random => "random",
        }
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Preset {
    type Err = GenerateError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Preset::ALL.into_iter().find(|p| p.name() == s).ok_or_else(|| GenerateError::UnknownPreset(s.to_string()))
    }
}

/// Probability in `[0, 1]` as a reduced fraction `num/den`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Bias {
    num: u32,
    den: u32,
}

impl Bias {
    pub const ZERO: Bias = Bias { num: 0, den: 1 };
    pub const HALF: Bias = Bias { num: 1, den: 2 };
    pub const ONE: Bias = Bias { num: 1, den: 1 };

    pub fn new(num: u32, den: u32) -> Result<Self, GenerateError> {
        if den == 0 || num > den {
            return Err(GenerateError::InvalidParameter(format!("bias {num}/{den} is not in [0, 1]")));
        }
        let g = gcd(num, den);
        Ok(Bias { num: num / g, den: den / g })
    }

    pub fn numerator(self) -> u32 {
        self.num
    }

    pub fn denominator(self) -> u32 {
        self.den
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a.max(1)
    } else {
        gcd(b, a % b)
    }
}

impl fmt::Display for Bias {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl Serialize for Bias {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Accepts `p/q` or a decimal such as `0.25`.
impl FromStr for Bias {
    type Err = GenerateError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GenerateError::InvalidParameter(format!("cannot read `{s}` as a probability"));
        let digits = |t: &str| !t.is_empty() && t.len() <= 9 && t.bytes().all(|b| b.is_ascii_digit());
        if let Some((n, d)) = s.split_once('/') {
            if !digits(n) || !digits(d) {
                return Err(bad());
            }
            return Bias::new(n.parse().map_err(|_| bad())?, d.parse().map_err(|_| bad())?);
        }
        let (int, frac) = s.split_once('.').unwrap_or((s, ""));
        let frac_ok = frac.is_empty() && !s.contains('.') || digits(frac);
        if !digits(int) || !frac_ok || int.len() + frac.len() > 9 {
            return Err(bad());
        }
        let den = 10u32.pow(frac.len() as u32);
        let num: u32 = format!("{int}{frac}").parse().map_err(|_| bad())?;
        Bias::new(num, den)
    }
}

/// Everything needed to reproduce one generated complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorSpec {
    pub preset: Preset,
    pub seed: u64,
    pub target_cells: usize,
    pub pentagon_bias: Bias,
    pub radius: usize,
    /// Attempted moves allowed before giving up.
    pub budget: usize,
}

impl GeneratorSpec {
    pub fn new(preset: Preset) -> Self {
        GeneratorSpec { preset, seed: 0, target_cells: 60, pentagon_bias: Bias::HALF, radius: 2, budget: DEFAULT_BUDGET }
    }

    pub fn random(seed: u64, target_cells: usize, pentagon_bias: Bias) -> Self {
        GeneratorSpec { seed, target_cells, pentagon_bias, ..GeneratorSpec::new(Preset::Random) }
    }
}

pub fn generate(spec: &GeneratorSpec) -> Result<TPComplex, GenerateError> {
    match spec.preset {
        Preset::Star4 => Ok(gen_star4_pentagons()),
        Preset::Fan3 => Ok(gen_fan3_pentagons_triangle()),
        Preset::Fan2 => Ok(gen_fan2_pentagons_3triangles()),
        Preset::Fan1 => Ok(gen_fan1_pentagon_5triangles()),
        Preset::Pent4Tiling => gen_pentagon_tiling(spec.radius),
        Preset::TriTiling => gen_triangle_tiling(spec.radius),
        Preset::Random => gen_random_cat0_disc(spec),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bias_parsing() {
        assert_eq!("1/2".parse::<Bias>().unwrap(), Bias::HALF);
        assert_eq!("0.5".parse::<Bias>().unwrap(), Bias::HALF);
        assert_eq!("2/4".parse::<Bias>().unwrap(), Bias::HALF);
        assert_eq!("0".parse::<Bias>().unwrap(), Bias::ZERO);
        assert_eq!("1.0".parse::<Bias>().unwrap(), Bias::ONE);
        assert_eq!("0.125".parse::<Bias>().unwrap(), Bias::new(1, 8).unwrap());
        for bad in ["", "1.5", "3/2", "1/0", "-0.5", "a", "0.", ".5", "1e-3"] {
            assert!(bad.parse::<Bias>().is_err(), "{bad}");
        }
    }

    #[test]
    fn preset_names_round_trip() {
        for p in Preset::ALL {
            assert_eq!(p.name().parse::<Preset>().unwrap(), p);
        }
        assert!(matches!("star5".parse::<Preset>(), Err(GenerateError::UnknownPreset(_))));
    }
}
