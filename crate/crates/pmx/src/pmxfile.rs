//! The PMX file format: a single JSON document per object.
//!
//! All three object kinds share one schema.  Adjacency rows are the color
//! involutions; operator voltages are integer letter arrays, finite voltages
//! are permutation image arrays.  Everything is 0-based.  Parsing re-runs
//! full validation, so a loaded object is always structurally sound.

use crate::premaniplex::Premaniplex;
use crate::voltage::{FinVoltagePremaniplex, VoltageOperator};
use crate::words::GroupWord;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Serialize, Deserialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum PmxKind {
    Premaniplex,
    Operator,
    VoltagePremaniplex,
}

/// The on-disk document.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct PmxDocument {
    pub format_version: u32,
    pub kind: PmxKind,
    pub rank: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub in_rank: Option<usize>,
    pub vertex_count: usize,
    pub adjacency: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub voltages: Option<Vec<Vec<Vec<usize>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

/// A parsed PMX object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PmxObject {
    Premaniplex(Premaniplex),
    Operator(VoltageOperator),
    VoltagePremaniplex(FinVoltagePremaniplex),
}

impl PmxObject {
    pub fn kind(&self) -> PmxKind {
        match self {
            PmxObject::Premaniplex(_) => PmxKind::Premaniplex,
            PmxObject::Operator(_) => PmxKind::Operator,
            PmxObject::VoltagePremaniplex(_) => PmxKind::VoltagePremaniplex,
        }
    }

    pub fn graph(&self) -> &Premaniplex {
        match self {
            PmxObject::Premaniplex(x) => x,
            PmxObject::Operator(op) => op.graph(),
            PmxObject::VoltagePremaniplex(vp) => vp.graph(),
        }
    }
}

pub fn document_of(object: &PmxObject) -> PmxDocument {
    match object {
        PmxObject::Premaniplex(x) => PmxDocument {
            format_version: FORMAT_VERSION,
            kind: PmxKind::Premaniplex,
            rank: x.rank(),
            in_rank: None,
            vertex_count: x.vertex_count(),
            adjacency: x.adjacency().to_vec(),
            degree: None,
            voltages: None,
            labels: x.labels().map(|l| l.to_vec()),
        },
        PmxObject::Operator(op) => PmxDocument {
            format_version: FORMAT_VERSION,
            kind: PmxKind::Operator,
            rank: op.out_rank(),
            in_rank: Some(op.in_rank()),
            vertex_count: op.graph().vertex_count(),
            adjacency: op.graph().adjacency().to_vec(),
            degree: None,
            voltages: Some(
                op.voltages()
                    .iter()
                    .map(|row| row.iter().map(|w| w.letters().to_vec()).collect())
                    .collect(),
            ),
            labels: op.graph().labels().map(|l| l.to_vec()),
        },
        PmxObject::VoltagePremaniplex(vp) => PmxDocument {
            format_version: FORMAT_VERSION,
            kind: PmxKind::VoltagePremaniplex,
            rank: vp.graph().rank(),
            in_rank: None,
            vertex_count: vp.graph().vertex_count(),
            adjacency: vp.graph().adjacency().to_vec(),
            degree: Some(vp.degree()),
            voltages: Some(vp.voltages().to_vec()),
            labels: vp.graph().labels().map(|l| l.to_vec()),
        },
    }
}

/// Serializes an object; output is deterministic.
pub fn write_pmx(object: &PmxObject) -> String {
    let mut text = serde_json::to_string_pretty(&document_of(object)).expect("serializable");
    text.push('\n');
    text
}

/// Parses and fully validates a PMX document.
pub fn parse_pmx(text: &str) -> Result<PmxObject> {
    let doc: PmxDocument = serde_json::from_str(text)
        .map_err(|e| Error::BadShape(format!("pmx parse error: {}", e)))?;
    if doc.format_version != FORMAT_VERSION {
        return Err(Error::BadShape(format!(
            "unsupported format version {}",
            doc.format_version
        )));
    }
    if doc.adjacency.first().map_or(0, |row| row.len()) != doc.vertex_count {
        return Err(Error::BadShape(format!(
            "vertex_count {} does not match adjacency rows",
            doc.vertex_count
        )));
    }
    let mut graph = Premaniplex::new(doc.rank, doc.adjacency.clone())?;
    if let Some(labels) = doc.labels.clone() {
        graph = graph.with_labels(labels)?;
    }
    match doc.kind {
        PmxKind::Premaniplex => {
            graph.validate().map_err(Error::InvalidPremaniplex)?;
            Ok(PmxObject::Premaniplex(graph))
        }
        PmxKind::Operator => {
            let in_rank = doc
                .in_rank
                .ok_or_else(|| Error::BadShape("operator document needs in_rank".into()))?;
            let letters = doc
                .voltages
                .ok_or_else(|| Error::BadShape("operator document needs voltages".into()))?;
            let volt = letters
                .into_iter()
                .map(|row| {
                    row.into_iter()
                        .map(|w| GroupWord::new(in_rank, w))
                        .collect()
                })
                .collect::<Result<Vec<Vec<GroupWord>>>>()?;
            Ok(PmxObject::Operator(VoltageOperator::new(
                in_rank, graph, volt,
            )?))
        }
        PmxKind::VoltagePremaniplex => {
            let degree = doc.degree.ok_or_else(|| {
                Error::BadShape("voltage_premaniplex document needs degree".into())
            })?;
            let volt = doc.voltages.ok_or_else(|| {
                Error::BadShape("voltage_premaniplex document needs voltages".into())
            })?;
            Ok(PmxObject::VoltagePremaniplex(FinVoltagePremaniplex::new(
                graph, degree, volt, None,
            )?))
        }
    }
}
