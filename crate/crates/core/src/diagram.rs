//! Persistence pairs and diagrams.
//!
//! Diagrams are multisets of `(dimension, birth, death)` records. Births and
//! deaths are always present as combinatorial step indices; function-time
//! values are attached only in modes that define them. Death at infinity is
//! an explicit sentinel, serialized as the string `"inf"`, never a large
//! finite stand-in.

use crate::error::{Error, Result};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;

/// Diagram computation mode, as it appears in serialized output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Forward,
    Backward,
    Fb,
    Fg,
    SigmaTau,
    Extended,
    Hourglass,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Forward => "forward",
            Mode::Backward => "backward",
            Mode::Fb => "fb",
            Mode::Fg => "fg",
            Mode::SigmaTau => "sigma_tau",
            Mode::Extended => "extended",
            Mode::Hourglass => "hourglass",
        }
    }

    pub fn parse(s: &str) -> Option<Mode> {
        Some(match s {
            "forward" => Mode::Forward,
            "backward" => Mode::Backward,
            "fb" => Mode::Fb,
            "fg" => Mode::Fg,
            "sigma_tau" => Mode::SigmaTau,
            "extended" => Mode::Extended,
            "hourglass" => Mode::Hourglass,
            _ => return None,
        })
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A death coordinate: finite, or the infinity sentinel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Death<T> {
    At(T),
    Never,
}

impl<T: Copy> Death<T> {
    pub fn is_infinite(&self) -> bool {
        matches!(self, Death::Never)
    }

    pub fn finite(&self) -> Option<T> {
        match self {
            Death::At(t) => Some(*t),
            Death::Never => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PersistencePair {
    pub dim: u8,
    pub birth_step: usize,
    pub death_step: Death<usize>,
    pub birth_value: Option<f64>,
    pub death_value: Option<Death<f64>>,
}

impl PersistencePair {
    pub fn is_zero_length(&self) -> bool {
        self.death_step == Death::At(self.birth_step)
    }

    /// Sort key: dimension, then birth, then death with infinity last.
    fn key(&self) -> (u8, usize, usize) {
        let death = match self.death_step {
            Death::At(d) => d,
            Death::Never => usize::MAX,
        };
        (self.dim, self.birth_step, death)
    }

    fn cmp_canonical(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PersistenceDiagram {
    pub mode: Mode,
    pub pairs: Vec<PersistencePair>,
    /// Constant added to a negative contraction schedule to make its values
    /// positive before forming function times. Contraction order is
    /// unaffected; recorded so function times can be traced back.
    pub shift: Option<f64>,
}

impl PersistenceDiagram {
    pub fn new(mode: Mode, pairs: Vec<PersistencePair>) -> Self {
        PersistenceDiagram {
            mode,
            pairs,
            shift: None,
        }
    }

    pub fn dim(&self, d: u8) -> impl Iterator<Item = &PersistencePair> {
        self.pairs.iter().filter(move |p| p.dim == d)
    }

    pub fn essential_count(&self, d: u8) -> usize {
        self.dim(d).filter(|p| p.death_step.is_infinite()).count()
    }

    /// Removes zero-persistence pairs (`birth_step == death_step`).
    pub fn drop_zero_length(&mut self) {
        self.pairs.retain(|p| !p.is_zero_length());
    }

    /// Pairs sorted by `(dim, birth_step, death_step)`.
    pub fn sorted_pairs(&self) -> Vec<PersistencePair> {
        let mut pairs = self.pairs.clone();
        pairs.sort_by(|a, b| a.cmp_canonical(b));
        pairs
    }

    /// Multiset equality in combinatorial (step) time.
    pub fn step_multiset_eq(&self, other: &Self) -> bool {
        let key = |d: &Self| {
            let mut v: Vec<(u8, usize, usize)> = d.pairs.iter().map(|p| p.key()).collect();
            v.sort_unstable();
            v
        };
        key(self) == key(other)
    }

    /// Multiset equality in function time. Requires values on both sides.
    pub fn value_multiset_eq(&self, other: &Self) -> Result<bool> {
        let key = |d: &Self| -> Result<Vec<(u8, f64, f64)>> {
            let mut v = Vec::with_capacity(d.pairs.len());
            for p in &d.pairs {
                let b = p.birth_value.ok_or(Error::MissingFunctionTime)?;
                let dv = match p.death_value.ok_or(Error::MissingFunctionTime)? {
                    Death::At(x) => x,
                    Death::Never => f64::INFINITY,
                };
                v.push((p.dim, b, dv));
            }
            v.sort_by(|a, b| a.partial_cmp(b).unwrap());
            Ok(v)
        };
        Ok(key(self)? == key(other)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.as_file()).expect("diagram serialization cannot fail")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&self.as_file()).expect("diagram serialization cannot fail")
    }

    fn as_file(&self) -> DiagramFile {
        let pairs = self
            .sorted_pairs()
            .into_iter()
            .map(|p| PairFile {
                dim: p.dim,
                birth_step: p.birth_step,
                death_step: StepDeath(p.death_step),
                birth_value: p.birth_value,
                death_value: p.death_value.map(ValueDeath),
            })
            .collect();
        DiagramFile {
            mode: self.mode.as_str().to_string(),
            pairs,
            shift: self.shift,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: DiagramFile = serde_json::from_str(text)?;
        let mode = Mode::parse(&file.mode)
            .ok_or_else(|| Error::Json(format!("unknown mode {:?}", file.mode)))?;
        let pairs = file
            .pairs
            .into_iter()
            .map(|p| PersistencePair {
                dim: p.dim,
                birth_step: p.birth_step,
                death_step: p.death_step.0,
                birth_value: p.birth_value,
                death_value: p.death_value.map(|v| v.0),
            })
            .collect();
        Ok(PersistenceDiagram {
            mode,
            pairs,
            shift: file.shift,
        })
    }
}

#[derive(Serialize, Deserialize)]
struct DiagramFile {
    mode: String,
    pairs: Vec<PairFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    shift: Option<f64>,
}

#[derive(Serialize, Deserialize)]
struct PairFile {
    dim: u8,
    birth_step: usize,
    death_step: StepDeath,
    birth_value: Option<f64>,
    death_value: Option<ValueDeath>,
}

struct StepDeath(Death<usize>);

impl Serialize for StepDeath {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0 {
            Death::At(v) => s.serialize_u64(v as u64),
            Death::Never => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for StepDeath {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        match v {
            serde_json::Value::Number(n) => n
                .as_u64()
                .map(|x| StepDeath(Death::At(x as usize)))
                .ok_or_else(|| D::Error::custom("death_step must be a non-negative integer")),
            serde_json::Value::String(s) if s == "inf" => Ok(StepDeath(Death::Never)),
            _ => Err(D::Error::custom("death_step must be an integer or \"inf\"")),
        }
    }
}

struct ValueDeath(Death<f64>);

impl Serialize for ValueDeath {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0 {
            Death::At(v) => s.serialize_f64(v),
            Death::Never => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for ValueDeath {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        match v {
            serde_json::Value::Number(n) => n
                .as_f64()
                .map(|x| ValueDeath(Death::At(x)))
                .ok_or_else(|| D::Error::custom("death_value must be a number")),
            serde_json::Value::String(s) if s == "inf" => Ok(ValueDeath(Death::Never)),
            _ => Err(D::Error::custom("death_value must be a number or \"inf\"")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(dim: u8, b: usize, d: Option<usize>) -> PersistencePair {
        PersistencePair {
            dim,
            birth_step: b,
            death_step: d.map(Death::At).unwrap_or(Death::Never),
            birth_value: Some(b as f64),
            death_value: Some(d.map(|x| Death::At(x as f64)).unwrap_or(Death::Never)),
        }
    }

    #[test]
    fn multiset_equality_ignores_order() {
        let a = PersistenceDiagram::new(Mode::Forward, vec![pair(0, 0, Some(1)), pair(1, 2, None)]);
        let b = PersistenceDiagram::new(Mode::Forward, vec![pair(1, 2, None), pair(0, 0, Some(1))]);
        assert!(a.step_multiset_eq(&b));
        assert!(a.value_multiset_eq(&b).unwrap());
    }

    #[test]
    fn infinity_serialized_as_sentinel() {
        let d = PersistenceDiagram::new(Mode::Fb, vec![pair(0, 0, None)]);
        let text = d.to_json();
        assert!(text.contains("\"death_step\":\"inf\""));
        assert!(text.contains("\"death_value\":\"inf\""));
        let back = PersistenceDiagram::from_json(&text).unwrap();
        assert!(back.step_multiset_eq(&d));
    }

    #[test]
    fn drop_zero_length_keeps_finite_pairs() {
        let mut d = PersistenceDiagram::new(
            Mode::Fb,
            vec![pair(0, 1, Some(1)), pair(0, 1, Some(2)), pair(1, 3, None)],
        );
        d.drop_zero_length();
        assert_eq!(d.pairs.len(), 2);
    }

    #[test]
    fn json_round_trip_preserves_multiset() {
        let d = PersistenceDiagram::new(
            Mode::SigmaTau,
            vec![pair(0, 0, Some(3)), pair(0, 2, Some(2)), pair(1, 1, None)],
        );
        let back = PersistenceDiagram::from_json(&d.to_json()).unwrap();
        assert!(d.step_multiset_eq(&back));
        assert_eq!(back.mode, Mode::SigmaTau);
    }
}
