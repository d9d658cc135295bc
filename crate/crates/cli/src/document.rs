//! The on-disk quiver format.
//!
//! A quiver file is a JSON object with a list of vertex labels and a list of
//! arrows referring to them by label:
//!
//! ```json
//! {
//!   "vertices": ["0", "1"],
//!   "arrows": [
//!     { "id": "alpha", "from": "0", "to": "1" }
//!   ]
//! }
//! ```
//!
//! Vertex and arrow positions follow the order of the lists.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thinquiv::quiver::{Arrow, Quiver};
use thinquiv::QuiverError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowEntry {
    pub id: String,
    pub from: String,
    pub to: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverDocument {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowEntry>,
}

#[derive(Debug)]
pub enum DocumentError {
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    UnknownLabel {
        arrow: String,
        label: String,
    },
    Quiver(QuiverError),
}

impl fmt::Display for DocumentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Syntax {
                line,
                column,
                message,
            } => {
                write!(f, "line {line}, column {column}: {message}")
            }
            Self::UnknownLabel { arrow, label } => {
                write!(f, "arrow `{arrow}` refers to unknown vertex `{label}`")
            }
            Self::Quiver(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for DocumentError {}

impl QuiverDocument {
    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        serde_json::from_str(text).map_err(|e| {
            let message = e.to_string();
            let message = match message.rfind(" at line ") {
                Some(i) => message[..i].to_string(),
                None => message,
            };
            DocumentError::Syntax {
                line: e.line(),
                column: e.column(),
                message,
            }
        })
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_text(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    pub fn from_quiver(quiver: &Quiver) -> Self {
        let labels = quiver.vertex_labels();
        Self {
            vertices: labels.to_vec(),
            arrows: quiver
                .arrows()
                .iter()
                .map(|a| ArrowEntry {
                    id: a.label.clone(),
                    from: labels[a.source].clone(),
                    to: labels[a.target].clone(),
                })
                .collect(),
        }
    }

    pub fn to_quiver(&self) -> Result<Quiver, DocumentError> {
        let mut index = HashMap::new();
        for (i, v) in self.vertices.iter().enumerate() {
            index.entry(v.as_str()).or_insert(i);
        }
        let resolve = |arrow: &str, label: &str| {
            index
                .get(label)
                .copied()
                .ok_or_else(|| DocumentError::UnknownLabel {
                    arrow: arrow.to_string(),
                    label: label.to_string(),
                })
        };
        let arrows = self
            .arrows
            .iter()
            .map(|a| {
                Ok(Arrow::new(
                    a.id.clone(),
                    resolve(&a.id, &a.from)?,
                    resolve(&a.id, &a.to)?,
                ))
            })
            .collect::<Result<Vec<_>, DocumentError>>()?;
        Quiver::new(self.vertices.clone(), arrows).map_err(DocumentError::Quiver)
    }
}
