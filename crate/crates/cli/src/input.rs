//! Reading input files, with errors that name the first offending field.

use std::fmt;
use std::path::Path;

use gradering_core::{
    ClassifyError, ConstructionError, GradingError, GroupError, RingError, RingSpec,
};
use gradering_harness::{HarnessError, Recipe};
use serde::de::DeserializeOwned;
use serde_json::Value;

/// A usage or validation failure; `field` is a JSON path into the input.
#[derive(Debug)]
pub struct InputError {
    pub field: String,
    pub message: String,
}

impl InputError {
    pub fn new(field: impl Into<String>, message: impl fmt::Display) -> Self {
        Self {
            field: field.into(),
            message: message.to_string(),
        }
    }
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.is_empty() {
            write!(f, "{}", self.message)
        } else {
            write!(f, "{}: {}", self.field, self.message)
        }
    }
}

pub fn read_json(path: &Path) -> Result<Value, InputError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| InputError::new("", format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| InputError::new("", format!("{}: {e}", path.display())))
}

/// Deserializes `value`, reporting the path of the first field that fails.
pub fn decode<T: DeserializeOwned>(value: Value, prefix: &str) -> Result<T, InputError> {
    serde_path_to_error::deserialize(value).map_err(|e| {
        let path = e.path().to_string();
        let field = match (prefix.is_empty(), path.as_str()) {
            (_, ".") => prefix.to_string(),
            (true, p) => p.to_string(),
            (false, p) => format!("{prefix}.{p}"),
        };
        InputError::new(field, e.into_inner())
    })
}

/// What a graded-ring argument turned out to be.
pub enum GradedInput {
    Recipe(Recipe),
    /// A bare ring with no grading: trivially graded over the trivial group.
    Ring(RingSpec),
}

/// Accepts a recipe (`"construct"`), a graded ring (`"ring"` and `"grading"`),
/// the output of `construct` (`"graded_ring"`), or a bare ring.
pub fn graded_input(value: Value) -> Result<GradedInput, InputError> {
    let Value::Object(map) = &value else {
        return Err(InputError::new("", "expected a JSON object"));
    };
    if map.contains_key("construct") {
        return decode(value, "").map(GradedInput::Recipe);
    }
    if let Some(inner) = map.get("graded_ring") {
        return graded_spec_recipe(inner.clone(), "graded_ring");
    }
    if map.contains_key("recipe") && !map.contains_key("grading") {
        return decode(map["recipe"].clone(), "recipe").map(GradedInput::Recipe);
    }
    if map.contains_key("grading") {
        return graded_spec_recipe(value, "");
    }
    decode(value, "").map(GradedInput::Ring)
}

fn graded_spec_recipe(value: Value, prefix: &str) -> Result<GradedInput, InputError> {
    let spec: gradering_core::GradedRingSpec = decode(value, prefix)?;
    Ok(GradedInput::Recipe(Recipe::Graded {
        ring: spec.ring,
        grading: spec.grading,
    }))
}

fn join(prefix: &str, field: &str) -> String {
    match (prefix.is_empty(), field.is_empty()) {
        (true, _) => field.to_string(),
        (false, true) => prefix.to_string(),
        (false, false) => format!("{prefix}.{field}"),
    }
}

/// Field of a ring spec that a ring error points at.
pub fn ring_field(e: &RingError) -> String {
    match e {
        RingError::EmptyOrders
        | RingError::TooManyGenerators { .. }
        | RingError::OrderCapExceeded { .. } => "additive_orders".into(),
        RingError::BadModulus { index, .. } => format!("additive_orders[{index}]"),
        RingError::DimensionMismatch { what, .. } | RingError::ResidueOutOfRange { what, .. } => {
            if what == "unity" {
                "unity".into()
            } else if let Some(rest) = what.strip_prefix("mul row ") {
                format!("mul[{rest}]")
            } else if what.starts_with("mul") && what.contains('[') {
                what.clone()
            } else if what.starts_with("mul") {
                "mul".into()
            } else {
                String::new()
            }
        }
        RingError::IllDefinedBilinearMap { i, j } => format!("mul[{i}][{j}]"),
        RingError::BadUnity { .. } => "unity".into(),
        RingError::NonAssociative { i, j, .. } => format!("mul[{i}][{j}]"),
        RingError::EmptyList | RingError::NotASubring => String::new(),
    }
}

fn group_field(e: &GroupError) -> String {
    match e {
        GroupError::UnknownName(_) => "name".into(),
        GroupError::NotAGroup(_) => "cayley".into(),
        _ => String::new(),
    }
}

/// Field of a graded-ring spec that a grading error points at.
pub fn grading_field(e: &GradingError) -> String {
    match e {
        GradingError::Ring(r) => join("ring", &ring_field(r)),
        GradingError::Group(g) => join("grading.group", &group_field(g)),
        GradingError::UnknownGroupElement(key) => format!("grading.components.{key}"),
        GradingError::BadGenerator { degree, .. } => format!("grading.components.{degree}"),
        GradingError::NotMultiplicative { g, .. } => format!("grading.components.{g}"),
        GradingError::UnityNotInIdentityComponent => "grading.components".into(),
        _ => "grading".into(),
    }
}

/// Best field name for an error raised while building a recipe.
pub fn recipe_field(e: &HarnessError) -> String {
    match e {
        HarnessError::Ring(r) => join("ring", &ring_field(r)),
        HarnessError::Group(g) => join("group", &group_field(g)),
        HarnessError::Grading(g) => grading_field(g),
        HarnessError::Construction(c) => match c {
            ConstructionError::SigmaLength { .. } => "sigma".into(),
            ConstructionError::UnsupportedSize(_) => "n".into(),
            ConstructionError::BadBimodule(_) | ConstructionError::ActionAxiomViolation(_) => {
                "module".into()
            }
            ConstructionError::Ring(r) => join("ring", &ring_field(r)),
            ConstructionError::Grading(g) => grading_field(g),
            _ => "construct".into(),
        },
        HarnessError::Classify(ClassifyError::IdealLatticeCap { .. }) => "ideal".into(),
        HarnessError::UnknownRingName(_) => "name".into(),
        HarnessError::BadRecipe(_) => "construct".into(),
        HarnessError::SymbolicRecipe => "construct".into(),
        HarnessError::UnknownTheoremId(_) => "id".into(),
        HarnessError::UnknownPredicate(_) => "implication".into(),
        _ => String::new(),
    }
}
