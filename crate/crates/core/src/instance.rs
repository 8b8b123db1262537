//! JSON instance files: two matroid descriptions and optional exact weights.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::MatroidError;
use crate::gadgets::GadgetInstance;
use crate::matroid::{Matroid, RationalMatrix, Violation};
use crate::set::ElementSet;
use crate::weight::{format_rational, parse_rational, WeightFn};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum InstanceError {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unsupported schema version {0} (expected {SCHEMA_VERSION})")]
    Schema(u32),
    #[error("field `{field}`: {message}")]
    Field { field: String, message: String },
    #[error("matroid `{which}`: {source}")]
    Matroid {
        which: &'static str,
        source: MatroidError,
    },
    #[error("matroid `{which}` is invalid: {violation}")]
    Invalid {
        which: &'static str,
        violation: Violation,
    },
}

impl From<serde_json::Error> for InstanceError {
    fn from(e: serde_json::Error) -> Self {
        InstanceError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

/// One matroid, tagged by `kind`. Sets are lists of element ids; rationals are
/// strings such as `"3"` or `"-2/5"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum MatroidSpec {
    Uniform {
        rank: usize,
    },
    Partition {
        blocks: Vec<Vec<usize>>,
        capacities: Vec<usize>,
    },
    Graphic {
        vertices: usize,
        edges: Vec<(usize, usize)>,
    },
    Linear {
        rows: Vec<Vec<String>>,
    },
    /// The full family of independent sets.
    Explicit {
        independent: Vec<Vec<usize>>,
    },
    /// Independent sets generated downward from the listed sets.
    Bases {
        bases: Vec<Vec<usize>>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub schema: u32,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<String>>,
    pub first: MatroidSpec,
    pub second: MatroidSpec,
}

/// A loaded, validated instance.
#[derive(Clone, Debug)]
pub struct Instance {
    pub names: Vec<String>,
    pub first: Matroid,
    pub second: Matroid,
    pub weights: WeightFn,
}

fn to_set(field: &str, elements: &[usize]) -> Result<ElementSet, InstanceError> {
    if let Some(&e) = elements.iter().find(|&&e| e >= crate::set::MAX_ELEMENTS) {
        return Err(InstanceError::Field {
            field: field.to_string(),
            message: format!("element {e} exceeds the supported width"),
        });
    }
    Ok(ElementSet::from_elements(elements.iter().copied()))
}

fn rational(field: &str, text: &str) -> Result<BigRational, InstanceError> {
    parse_rational(text).ok_or_else(|| InstanceError::Field {
        field: field.to_string(),
        message: format!("`{text}` is not a rational number"),
    })
}

impl MatroidSpec {
    pub fn build(&self, n: usize, which: &'static str) -> Result<Matroid, InstanceError> {
        let wrap = |source| InstanceError::Matroid { which, source };
        let sets = |field: &str, lists: &[Vec<usize>]| -> Result<Vec<ElementSet>, InstanceError> {
            lists
                .iter()
                .map(|l| to_set(&format!("{which}.{field}"), l))
                .collect()
        };
        match self {
            MatroidSpec::Uniform { rank } => Matroid::uniform(*rank, n).map_err(wrap),
            MatroidSpec::Partition { blocks, capacities } => {
                Matroid::partition(n, sets("blocks", blocks)?, capacities.clone()).map_err(wrap)
            }
            MatroidSpec::Graphic { vertices, edges } => {
                if edges.len() != n {
                    return Err(InstanceError::Field {
                        field: format!("{which}.edges"),
                        message: format!("{} edges for {n} elements", edges.len()),
                    });
                }
                Matroid::graphic(*vertices, edges.clone()).map_err(wrap)
            }
            MatroidSpec::Linear { rows } => {
                let field = format!("{which}.rows");
                let parsed = rows
                    .iter()
                    .map(|r| r.iter().map(|q| rational(&field, q)).collect())
                    .collect::<Result<Vec<Vec<BigRational>>, _>>()?;
                let matrix = RationalMatrix::from_rows(parsed, n).ok_or(InstanceError::Field {
                    field,
                    message: format!("every row needs {n} entries"),
                })?;
                Matroid::linear(matrix).map_err(wrap)
            }
            MatroidSpec::Explicit { independent } => {
                Matroid::from_family(n, sets("independent", independent)?).map_err(wrap)
            }
            MatroidSpec::Bases { bases } => {
                Matroid::from_bases(n, sets("bases", bases)?).map_err(wrap)
            }
        }
    }

    /// Description of an existing matroid. Explicit matroids are written as
    /// their full family.
    pub fn describe(m: &Matroid) -> Self {
        let list = |s: ElementSet| s.to_vec();
        match m {
            Matroid::Uniform { rank, .. } => MatroidSpec::Uniform { rank: *rank },
            Matroid::Partition(p) => MatroidSpec::Partition {
                blocks: p.blocks().iter().map(|&b| list(b)).collect(),
                capacities: p.capacities().to_vec(),
            },
            Matroid::Graphic(g) => MatroidSpec::Graphic {
                vertices: g.vertices,
                edges: g.edges.clone(),
            },
            Matroid::Linear(z) => MatroidSpec::Linear {
                rows: z
                    .rows()
                    .iter()
                    .map(|r| r.iter().map(format_rational).collect())
                    .collect(),
            },
            Matroid::Explicit(x) => MatroidSpec::Explicit {
                independent: x.family().iter().map(|&s| list(s)).collect(),
            },
        }
    }
}

impl InstanceFile {
    pub fn parse(text: &str) -> Result<Self, InstanceError> {
        let file: InstanceFile = serde_json::from_str(text)?;
        if file.schema != SCHEMA_VERSION {
            return Err(InstanceError::Schema(file.schema));
        }
        Ok(file)
    }

    pub fn emit(&self) -> String {
        serde_json::to_string_pretty(self).expect("instance files always serialize")
    }

    pub fn from_instance(instance: &Instance) -> Self {
        let ones = instance.weights == WeightFn::ones(instance.first.ground_size());
        InstanceFile {
            schema: SCHEMA_VERSION,
            n: instance.first.ground_size(),
            names: Some(instance.names.clone()),
            weights: (!ones).then(|| {
                instance
                    .weights
                    .values()
                    .iter()
                    .map(format_rational)
                    .collect()
            }),
            first: MatroidSpec::describe(&instance.first),
            second: MatroidSpec::describe(&instance.second),
        }
    }

    /// The reduction instance with both matrices and element names.
    pub fn from_gadget(gi: &GadgetInstance) -> Self {
        let layout = gi.spec().layout();
        let describe = |z: &RationalMatrix| MatroidSpec::Linear {
            rows: z
                .rows()
                .iter()
                .map(|r| r.iter().map(format_rational).collect())
                .collect(),
        };
        InstanceFile {
            schema: SCHEMA_VERSION,
            n: layout.ground_size(),
            names: Some(layout.names()),
            weights: None,
            first: describe(gi.first_matrix()),
            second: describe(gi.second_matrix()),
        }
    }

    /// Builds both matroids and weights without checking the matroid axioms.
    pub fn build(&self) -> Result<Instance, InstanceError> {
        let n = self.n;
        let first = self.first.build(n, "first")?;
        let second = self.second.build(n, "second")?;
        let names = match &self.names {
            Some(names) if names.len() != n => {
                return Err(InstanceError::Field {
                    field: "names".into(),
                    message: format!("{} names for {n} elements", names.len()),
                })
            }
            Some(names) => names.clone(),
            None => (0..n).map(|e| e.to_string()).collect(),
        };
        let weights = match &self.weights {
            Some(w) if w.len() != n => {
                return Err(InstanceError::Field {
                    field: "weights".into(),
                    message: format!("{} weights for {n} elements", w.len()),
                })
            }
            Some(w) => WeightFn::new(
                w.iter()
                    .map(|q| rational("weights", q))
                    .collect::<Result<_, _>>()?,
            ),
            None => WeightFn::ones(n),
        };
        Ok(Instance {
            names,
            first,
            second,
            weights,
        })
    }

    /// [`InstanceFile::build`] followed by validation of both matroids,
    /// looplessness included.
    pub fn load(&self) -> Result<Instance, InstanceError> {
        let instance = self.build()?;
        for (which, m) in [("first", &instance.first), ("second", &instance.second)] {
            m.validate()
                .map_err(|violation| InstanceError::Invalid { which, violation })?;
        }
        Ok(instance)
    }
}

/// Parses and validates instance text.
pub fn load_str(text: &str) -> Result<Instance, InstanceError> {
    InstanceFile::parse(text)?.load()
}

#[cfg(test)]
mod tests {
    use super::*;

    const CROSSED: &str = r#"{
        "schema": 1,
        "n": 4,
        "weights": ["5", "4", "4", "1"],
        "first": {"kind": "partition", "blocks": [[0, 1], [2, 3]], "capacities": [1, 1]},
        "second": {"kind": "partition", "blocks": [[0, 2], [1, 3]], "capacities": [1, 1]}
    }"#;

    #[test]
    fn crossed_partition_loads() {
        let inst = load_str(CROSSED).unwrap();
        assert_eq!(inst.first.ground_size(), 4);
        assert_eq!(inst.weights, WeightFn::from_integers(&[5, 4, 4, 1]));
        assert_eq!(inst.names, vec!["0", "1", "2", "3"]);
    }

    #[test]
    fn round_trip() {
        let file = InstanceFile::parse(CROSSED).unwrap();
        assert_eq!(InstanceFile::parse(&file.emit()).unwrap(), file);
        let rebuilt = InstanceFile::from_instance(&file.load().unwrap());
        assert_eq!(rebuilt.first, file.first);
        assert_eq!(rebuilt.weights, file.weights);
    }

    #[test]
    fn loop_is_rejected_with_witness() {
        let text = r#"{"schema": 1, "n": 3,
            "first": {"kind": "explicit", "independent": [[], [0], [1]]},
            "second": {"kind": "uniform", "rank": 1}}"#;
        match load_str(text) {
            Err(InstanceError::Invalid { which, violation }) => {
                assert_eq!(which, "first");
                assert_eq!(violation, Violation::Loop(2));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn linear_entries_stay_exact() {
        let text = r#"{"schema": 1, "n": 2,
            "first": {"kind": "linear", "rows": [["1/3", "7"], ["1/7", "3"]]},
            "second": {"kind": "uniform", "rank": 2}}"#;
        let file = InstanceFile::parse(text).unwrap();
        let inst = file.build().unwrap();
        assert_eq!(inst.first.rank(ElementSet::full(2)), Ok(1));
        assert_eq!(InstanceFile::from_instance(&inst).first, file.first);
    }

    #[test]
    fn errors_carry_positions_and_fields() {
        match InstanceFile::parse("{\n \"schema\": 1,\n \"n\": x }") {
            Err(InstanceError::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
        let bad_weight = CROSSED.replace("\"5\"", "\"five\"");
        assert!(matches!(
            load_str(&bad_weight),
            Err(InstanceError::Field { field, .. }) if field == "weights"
        ));
        assert!(matches!(
            load_str(&CROSSED.replace("\"schema\": 1", "\"schema\": 9")),
            Err(InstanceError::Schema(9))
        ));
    }
}
