use std::fs;
use std::path::Path;

use serde::Deserialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::permgroup::{group_from_generators_capped, FiniteGroup, Permutation, PLocalSystem};
use crate::tsr::{ClassFunction, CyclotomicInt, SpeciesTuple};

/// Contents of a `--group` file.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpecFile {
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
    #[serde(default)]
    pub name: Option<String>,
}

/// Failure to read or interpret an input file. Always a validation error.
#[derive(Debug, thiserror::Error)]
#[error("{path}: {message}")]
pub struct InputError {
    pub path: String,
    pub message: String,
}

fn input_error(path: &Path, message: impl Into<String>) -> InputError {
    InputError {
        path: path.display().to_string(),
        message: message.into(),
    }
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> std::result::Result<T, InputError> {
    let text = fs::read_to_string(path).map_err(|e| input_error(path, e.to_string()))?;
    serde_json::from_str(&text).map_err(|e| {
        input_error(
            path,
            format!("line {}, column {}: {}", e.line(), e.column(), e),
        )
    })
}

pub fn read_group_spec(path: &Path) -> std::result::Result<GroupSpecFile, InputError> {
    let spec: GroupSpecFile = read_json(path)?;
    if spec.degree == 0 {
        return Err(input_error(path, "field `degree`: must be positive"));
    }
    for (i, images) in spec.generators.iter().enumerate() {
        if images.len() != spec.degree {
            return Err(input_error(
                path,
                format!(
                    "field `generators[{i}]`: {} images for degree {}",
                    images.len(),
                    spec.degree
                ),
            ));
        }
        if let Err(e) = Permutation::new(images.clone()) {
            return Err(input_error(path, format!("field `generators[{i}]`: {e}")));
        }
    }
    Ok(spec)
}

/// Builds the group, the only step that can hit the order cap.
pub fn build_group(spec: &GroupSpecFile, cap: usize) -> Result<FiniteGroup> {
    let gens = spec
        .generators
        .iter()
        .map(|g| Permutation::new(g.clone()))
        .collect::<Result<Vec<_>>>()?;
    group_from_generators_capped(spec.degree, &gens, cap)
}

fn parse_value(v: &Value, m: u64, what: &str) -> Result<CyclotomicInt> {
    if let Some(n) = v.as_i64() {
        return Ok(CyclotomicInt::from_int(m, n));
    }
    #[derive(Deserialize)]
    #[serde(deny_unknown_fields)]
    struct Cyc {
        conductor: u64,
        coeffs: Vec<i64>,
    }
    let c: Cyc = serde_json::from_value(v.clone()).map_err(|e| {
        Error::DimensionMismatch(format!("{what}: expected an integer or {{conductor, coeffs}}: {e}"))
    })?;
    if c.conductor != m {
        return Err(Error::DimensionMismatch(format!(
            "{what}: conductor {} differs from the fixed conductor {m}",
            c.conductor
        )));
    }
    CyclotomicInt::from_coeffs(m, c.coeffs)
        .ok_or_else(|| Error::DimensionMismatch(format!("{what}: wrong number of coefficients")))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TupleFile {
    components: Vec<Component>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Component {
    #[serde(default)]
    subgroup: Option<Vec<usize>>,
    #[serde(default)]
    class: Option<usize>,
    values: Vec<Value>,
}

/// Reads a class-function tuple; components are addressed by canonical
/// subgroup key or by class index, and missing ones are zero.
pub fn read_class_function_tuple(
    path: &Path,
    local: &PLocalSystem,
    m: u64,
) -> std::result::Result<Vec<ClassFunction>, InputError> {
    let file: TupleFile = read_json(path)?;
    let mut tuple: Vec<ClassFunction> = local
        .locals()
        .iter()
        .map(|l| ClassFunction::zero(&l.quotient, m))
        .collect();
    for (i, comp) in file.components.iter().enumerate() {
        let c = match (&comp.subgroup, comp.class) {
            (Some(key), None) => {
                let mut key = key.clone();
                key.sort_unstable();
                local
                    .classes()
                    .classes()
                    .iter()
                    .position(|cl| cl.rep.key() == key.as_slice())
                    .ok_or_else(|| {
                        input_error(
                            path,
                            format!("field `components[{i}].subgroup`: not a p-subgroup class representative"),
                        )
                    })?
            }
            (None, Some(c)) if c < local.len() => c,
            (None, Some(c)) => {
                return Err(input_error(path, format!("field `components[{i}].class`: no class {c}")))
            }
            _ => {
                return Err(input_error(
                    path,
                    format!("field `components[{i}]`: give exactly one of `subgroup` or `class`"),
                ))
            }
        };
        let expected = local.local(c).quotient.classes().len();
        if comp.values.len() != expected {
            return Err(input_error(
                path,
                format!(
                    "field `components[{i}].values`: {} values for {expected} conjugacy classes",
                    comp.values.len()
                ),
            ));
        }
        tuple[c].values = comp
            .values
            .iter()
            .enumerate()
            .map(|(j, v)| parse_value(v, m, &format!("components[{i}].values[{j}]")))
            .collect::<Result<_>>()
            .map_err(|e| input_error(path, e.to_string()))?;
    }
    Ok(tuple)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SpeciesFile {
    values: Vec<Value>,
}

/// Reads a species tuple, one value per pair in report order.
pub fn read_species_tuple(path: &Path, pairs: usize, m: u64) -> std::result::Result<SpeciesTuple, InputError> {
    let file: SpeciesFile = read_json(path)?;
    if file.values.len() != pairs {
        return Err(input_error(
            path,
            format!("field `values`: {} values for {pairs} pairs", file.values.len()),
        ));
    }
    let values = file
        .values
        .iter()
        .enumerate()
        .map(|(j, v)| parse_value(v, m, &format!("values[{j}]")))
        .collect::<Result<_>>()
        .map_err(|e| input_error(path, e.to_string()))?;
    Ok(SpeciesTuple { values })
}
