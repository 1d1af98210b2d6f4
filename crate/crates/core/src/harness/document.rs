//! JSON space documents.
//!
//! ```json
//! {
//!   "omega_plus": ["a", "b", "c"],
//!   "weights": {"a": "1/2", "b": "0.3", "c": "1/5"},
//!   "algebra": "powerset"
//! }
//! ```
//!
//! `algebra` is either the token `"powerset"` or
//! `{"generators": [["a"], ["b", "c"]]}`, in which case `F⁺` is the least
//! algebra over `omega_plus` containing the generators. Weights are strings
//! holding `p/q` or decimal literals, converted exactly.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use serde::de::{self, MapAccess, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{HarnessError, SpaceError};
use crate::events::{Event, Label, Sign};
use crate::measure::{make_space, ExtendedSpace, WeightMap};
use crate::rational::{format_rational, parse_rational};
use crate::structures::{generate_algebra, EventFamily, GroundSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceDocument {
    pub omega_plus: Vec<String>,
    pub weights: BTreeMap<String, String>,
    pub algebra: AlgebraSpec,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraSpec {
    Powerset,
    Generated { generators: Vec<Vec<String>> },
}

impl Serialize for AlgebraSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Generated<'a> {
            generators: &'a [Vec<String>],
        }
        match self {
            AlgebraSpec::Powerset => serializer.serialize_str("powerset"),
            AlgebraSpec::Generated { generators } => Generated { generators }.serialize(serializer),
        }
    }
}

impl<'de> Deserialize<'de> for AlgebraSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct SpecVisitor;

        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Generated {
            generators: Vec<Vec<String>>,
        }

        impl<'de> Visitor<'de> for SpecVisitor {
            type Value = AlgebraSpec;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("\"powerset\" or an object {\"generators\": [[labels]]}")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<AlgebraSpec, E> {
                if v == "powerset" {
                    Ok(AlgebraSpec::Powerset)
                } else {
                    Err(E::invalid_value(de::Unexpected::Str(v), &self))
                }
            }

            fn visit_map<M: MapAccess<'de>>(self, map: M) -> Result<AlgebraSpec, M::Error> {
                let g = Generated::deserialize(de::value::MapAccessDeserializer::new(map))?;
                Ok(AlgebraSpec::Generated {
                    generators: g.generators,
                })
            }
        }

        deserializer.deserialize_any(SpecVisitor)
    }
}

impl SpaceDocument {
    pub fn from_json(text: &str) -> Result<Self, HarnessError> {
        serde_json::from_str(text).map_err(|e| HarnessError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    /// Builds and validates the space this document describes.
    pub fn build(&self) -> Result<ExtendedSpace, HarnessError> {
        let labels = self
            .omega_plus
            .iter()
            .map(|l| Label::new(l))
            .collect::<Result<Vec<_>, _>>()?;
        let ground = GroundSet::new(labels)?;

        for key in self.weights.keys() {
            if !self.omega_plus.contains(key) {
                return Err(
                    SpaceError::Schema(format!("weight given for unknown label `{key}`")).into(),
                );
            }
        }
        let mut weights = BTreeMap::new();
        for label in ground.labels() {
            let literal = self
                .weights
                .get(label.as_str())
                .ok_or_else(|| SpaceError::Schema(format!("no weight for label `{label}`")))?;
            let value =
                parse_rational(literal).ok_or_else(|| HarnessError::Literal(literal.clone()))?;
            weights.insert(label.clone(), value);
        }
        let weights = WeightMap::new(weights)?;

        let fplus = match &self.algebra {
            AlgebraSpec::Powerset => EventFamily::powerset(&ground)?,
            AlgebraSpec::Generated { generators } => {
                let mut events = Vec::with_capacity(generators.len());
                for generator in generators {
                    let mut labels = Vec::with_capacity(generator.len());
                    for l in generator {
                        let label = Label::new(l)?;
                        if !ground.contains(&label) {
                            return Err(SpaceError::Schema(format!(
                                "generator mentions unknown label `{label}`"
                            ))
                            .into());
                        }
                        labels.push(label);
                    }
                    events.push(Event::from_labels(Sign::Positive, &labels));
                }
                generate_algebra(&EventFamily::collection(events), &ground.positive())?
            }
        };
        Ok(make_space(ground, weights, fplus)?)
    }

    /// Document form of a space. Powerset algebras serialize as the token;
    /// any other algebra lists its non-empty members as generators.
    pub fn from_space(space: &ExtendedSpace) -> Self {
        let omega_plus: Vec<String> = space
            .ground()
            .labels()
            .iter()
            .map(|l| l.to_string())
            .collect();
        let weights = space
            .weights()
            .map(|(l, w): (&Label, &BigRational)| (l.to_string(), format_rational(w)))
            .collect();
        let is_powerset = EventFamily::powerset(space.ground())
            .map(|ps| ps.members() == space.fplus().members())
            .unwrap_or(false);
        let algebra = if is_powerset {
            AlgebraSpec::Powerset
        } else {
            AlgebraSpec::Generated {
                generators: space
                    .fplus()
                    .iter()
                    .filter(|e| !e.is_empty())
                    .map(|e| e.labels().map(|l| l.to_string()).collect())
                    .collect(),
            }
        };
        SpaceDocument {
            omega_plus,
            weights,
            algebra,
        }
    }
}

/// Parses a JSON document and builds the space.
pub fn parse_space(document: &str) -> Result<ExtendedSpace, HarnessError> {
    SpaceDocument::from_json(document)?.build()
}
