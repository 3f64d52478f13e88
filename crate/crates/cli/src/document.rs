//! Space and map documents: JSON objects naming points by index or label.
//!
//! ```json
//! {"points": 4, "labels": ["i","j","k","l"], "opens": [[], ["j","l"], ["i","j","k","l"]]}
//! ```

use std::collections::BTreeSet;
use std::fmt;

use scstar::{FiniteSpace, PointSet};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("{what}: parse error at line {line}, column {column}: {message}")]
    Parse {
        what: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("labels lists {found} names for {points} points")]
    LabelCount { points: usize, found: usize },
    #[error("label {0:?} is declared twice")]
    DuplicateLabel(String),
    #[error("label {0:?} is a plain index; labels must not be numerals")]
    NumericLabel(String),
    #[error("unknown point {0:?}")]
    UnknownPoint(String),
    #[error("map assignment has {found} entries but the domain has {expected} points")]
    AssignmentLength { expected: usize, found: usize },
    #[error("invalid topology: {0}")]
    Topology(#[from] scstar::Error),
}

/// A point written either as its index or as its label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PointRef {
    Index(usize),
    Name(String),
}

impl fmt::Display for PointRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointRef::Index(i) => write!(f, "{i}"),
            PointRef::Name(s) => f.write_str(s),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceDocument {
    pub points: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub opens: Vec<Vec<PointRef>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDocument {
    pub domain: SpaceDocument,
    pub codomain: SpaceDocument,
    pub assignment: Vec<PointRef>,
}

fn parse_json<T: for<'de> Deserialize<'de>>(what: &str, text: &str) -> Result<T, InputError> {
    serde_json::from_str(text).map_err(|e| InputError::Parse {
        what: what.to_string(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

fn resolve(labels: Option<&[String]>, p: &PointRef, size: usize) -> Result<usize, InputError> {
    match p {
        PointRef::Index(i) if *i < size => Ok(*i),
        PointRef::Index(i) => Err(scstar::Error::PointOutOfRange { point: *i, size }.into()),
        PointRef::Name(name) => labels
            .into_iter()
            .flatten()
            .position(|l| l == name)
            .ok_or_else(|| InputError::UnknownPoint(name.clone())),
    }
}

/// A validated space together with the names used to print its points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledSpace {
    pub space: FiniteSpace,
    pub labels: Option<Vec<String>>,
}

impl LabeledSpace {
    pub fn unlabeled(space: FiniteSpace) -> Self {
        LabeledSpace { space, labels: None }
    }

    pub fn from_document(doc: &SpaceDocument) -> Result<Self, InputError> {
        if let Some(labels) = &doc.labels {
            if labels.len() != doc.points {
                return Err(InputError::LabelCount {
                    points: doc.points,
                    found: labels.len(),
                });
            }
            let mut seen = BTreeSet::new();
            for l in labels {
                if l.parse::<usize>().is_ok() {
                    return Err(InputError::NumericLabel(l.clone()));
                }
                if !seen.insert(l) {
                    return Err(InputError::DuplicateLabel(l.clone()));
                }
            }
        }
        let mut opens = Vec::with_capacity(doc.opens.len());
        for open in &doc.opens {
            let points = open
                .iter()
                .map(|p| resolve(doc.labels.as_deref(), p, doc.points))
                .collect::<Result<Vec<_>, _>>()?;
            opens.push(PointSet::from_points(points, doc.points)?);
        }
        Ok(LabeledSpace {
            space: FiniteSpace::new(doc.points, opens)?,
            labels: doc.labels.clone(),
        })
    }

    pub fn parse(text: &str) -> Result<Self, InputError> {
        Self::from_document(&parse_json("space document", text)?)
    }

    pub fn point_name(&self, p: usize) -> String {
        match &self.labels {
            Some(labels) => labels[p].clone(),
            None => p.to_string(),
        }
    }

    pub fn render(&self, a: &PointSet) -> String {
        let names: Vec<String> = a.points().map(|p| self.point_name(p)).collect();
        format!("{{{}}}", names.join(","))
    }

    /// Parses a comma list of labels or indices; the empty string is ∅.
    pub fn parse_subset(&self, spec: &str) -> Result<PointSet, InputError> {
        let n = self.space.size();
        let trimmed = spec.trim().trim_start_matches('{').trim_end_matches('}');
        let mut points = Vec::new();
        for token in trimmed.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let by_name = self.labels.iter().flatten().position(|l| l == token);
            let p = match (by_name, token.parse::<usize>()) {
                (Some(p), _) => p,
                (None, Ok(i)) if i < n => i,
                (None, Ok(i)) => return Err(scstar::Error::PointOutOfRange { point: i, size: n }.into()),
                (None, Err(_)) => return Err(InputError::UnknownPoint(token.to_string())),
            };
            points.push(p);
        }
        Ok(PointSet::from_points(points, n)?)
    }

    /// Canonical document: opens in canonical order, points by label when labeled.
    pub fn to_document(&self) -> SpaceDocument {
        let point = |p: usize| match &self.labels {
            Some(labels) => PointRef::Name(labels[p].clone()),
            None => PointRef::Index(p),
        };
        SpaceDocument {
            points: self.space.size(),
            labels: self.labels.clone(),
            opens: self
                .space
                .opens()
                .iter()
                .map(|o| o.points().map(point).collect())
                .collect(),
        }
    }
}

pub fn serialize_space(space: &LabeledSpace) -> String {
    serde_json::to_string(&space.to_document()).expect("documents always serialize")
}

/// A validated map with labeled domain and codomain.
#[derive(Debug, Clone)]
pub struct LabeledMap {
    pub domain: LabeledSpace,
    pub codomain: LabeledSpace,
    pub assignment: Vec<usize>,
}

impl LabeledMap {
    pub fn parse(text: &str) -> Result<Self, InputError> {
        let doc: MapDocument = parse_json("map document", text)?;
        let domain = LabeledSpace::from_document(&doc.domain)?;
        let codomain = LabeledSpace::from_document(&doc.codomain)?;
        if doc.assignment.len() != domain.space.size() {
            return Err(InputError::AssignmentLength {
                expected: domain.space.size(),
                found: doc.assignment.len(),
            });
        }
        let assignment = doc
            .assignment
            .iter()
            .map(|p| resolve(codomain.labels.as_deref(), p, codomain.space.size()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(LabeledMap {
            domain,
            codomain,
            assignment,
        })
    }
}

pub fn read_file(path: &str) -> Result<String, InputError> {
    std::fs::read_to_string(path).map_err(|e| InputError::Io {
        path: path.to_string(),
        message: e.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIVE_OPEN: &str =
        r#"{"points":4,"labels":["i","j","k","l"],"opens":[[],["j","l"],["i","j","l"],["j","k","l"],["i","j","k","l"]]}"#;

    #[test]
    fn parses_labeled_document() {
        let x = LabeledSpace::parse(FIVE_OPEN).unwrap();
        assert_eq!(x.space.opens().len(), 5);
        assert_eq!(x.render(&x.parse_subset("l,j").unwrap()), "{j,l}");
        assert_eq!(x.parse_subset("1,3").unwrap(), x.parse_subset("j,l").unwrap());
        assert!(x.parse_subset("").unwrap().is_empty());
    }

    #[test]
    fn one_point_space() {
        let x = LabeledSpace::parse(r#"{"points":1,"opens":[[],[0]]}"#).unwrap();
        assert_eq!(x.space.size(), 1);
    }

    #[test]
    fn validation_errors_pass_through() {
        let err = LabeledSpace::parse(r#"{"points":2,"opens":[[0]]}"#).unwrap_err();
        assert!(matches!(err, InputError::Topology(scstar::Error::MissingEmptyOrFull)));
    }

    #[test]
    fn parse_errors_carry_position() {
        let err = LabeledSpace::parse("{\"points\": 2,\n \"opens\": [[0],]}").unwrap_err();
        match err {
            InputError::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn bad_points_are_rejected() {
        let x = LabeledSpace::parse(FIVE_OPEN).unwrap();
        assert!(matches!(x.parse_subset("q"), Err(InputError::UnknownPoint(_))));
        assert!(x.parse_subset("7").is_err());
        assert!(LabeledSpace::parse(r#"{"points":2,"opens":[[],[0,5],[0,1]]}"#).is_err());
        assert!(LabeledSpace::parse(r#"{"points":2,"labels":["a"],"opens":[[],["a"]]}"#).is_err());
        assert!(LabeledSpace::parse(r#"{"points":2,"labels":["a","a"],"opens":[]}"#).is_err());
        assert!(LabeledSpace::parse(r#"{"points":2,"opens":[],"extra":1}"#).is_err());
    }

    #[test]
    fn canonical_round_trip() {
        let x = LabeledSpace::parse(FIVE_OPEN).unwrap();
        let text = serialize_space(&x);
        assert_eq!(LabeledSpace::parse(&text).unwrap(), x);
        assert_eq!(serialize_space(&LabeledSpace::parse(&text).unwrap()), text);
    }

    #[test]
    fn map_documents() {
        let text = format!(r#"{{"domain":{FIVE_OPEN},"codomain":{FIVE_OPEN},"assignment":["i",1,"k",3]}}"#);
        let f = LabeledMap::parse(&text).unwrap();
        assert_eq!(f.assignment, vec![0, 1, 2, 3]);
        let short = format!(r#"{{"domain":{FIVE_OPEN},"codomain":{FIVE_OPEN},"assignment":[0]}}"#);
        assert!(matches!(LabeledMap::parse(&short), Err(InputError::AssignmentLength { .. })));
    }
}
