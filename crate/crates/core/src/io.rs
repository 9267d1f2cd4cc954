//! JSON triangulation documents and OFF export.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::builders::{Tag, Triangulation};
use crate::error::{Error, Result};
use crate::geometry::{BinarySimplex, VertexMask};

/// On-disk form of a triangulation. Vertices are strings over `{0, 1}` with
/// `x_1` first; simplices are written in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TriangulationDocument {
    pub dim: usize,
    pub simplices: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tags: Option<Vec<String>>,
}

impl TriangulationDocument {
    pub fn from_triangulation(t: &Triangulation) -> Self {
        Self {
            dim: t.dim(),
            simplices: t.simplices().iter().map(|s| s.vertices().iter().map(VertexMask::to_string).collect()).collect(),
            tags: t.tags().map(|tags| tags.iter().map(Tag::to_string).collect()),
        }
    }

    pub fn to_triangulation(&self) -> Result<Triangulation> {
        let simplices = self
            .simplices
            .iter()
            .map(|vertices| {
                let masks = vertices.iter().map(|v| VertexMask::parse(v)).collect::<Result<Vec<_>>>()?;
                if let Some(bad) = masks.iter().find(|v| v.dim() != self.dim) {
                    return Err(Error::DimensionMismatch { expected: self.dim, found: bad.dim() });
                }
                BinarySimplex::new(masks)
            })
            .collect::<Result<Vec<_>>>()?;
        match &self.tags {
            Some(tags) => {
                let tags = tags.iter().map(|t| t.parse()).collect::<Result<Vec<Tag>>>()?;
                Triangulation::with_tags(self.dim, simplices, tags)
            }
            None => Triangulation::new(self.dim, simplices),
        }
    }
}

pub fn to_json(t: &Triangulation) -> String {
    let mut text = serde_json::to_string_pretty(&TriangulationDocument::from_triangulation(t)).expect("document serializes");
    text.push('\n');
    text
}

pub fn from_json(text: &str) -> Result<Triangulation> {
    let doc: TriangulationDocument = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    doc.to_triangulation()
}

/// OFF mesh of a 3-dimensional triangulation: the eight cube vertices, indexed
/// by their bit masks, and four triangles per tetrahedron. Shared triangles
/// are repeated so each tetrahedron stays a closed surface.
pub fn to_off(t: &Triangulation) -> Result<String> {
    if t.dim() != 3 {
        return Err(Error::DimensionOutOfRange { dim: t.dim(), min: 3, max: 3 });
    }
    let mut out = String::new();
    writeln!(out, "OFF").unwrap();
    writeln!(out, "8 {} 0", 4 * t.len()).unwrap();
    for bits in 0..8u16 {
        let v = VertexMask::from_raw(bits, 3);
        writeln!(out, "{} {} {}", v.coord(1), v.coord(2), v.coord(3)).unwrap();
    }
    for s in t.simplices() {
        for k in 0..4 {
            let face: Vec<String> = s.facet_vertices(k).iter().map(|v| v.bits().to_string()).collect();
            writeln!(out, "3 {}", face.join(" ")).unwrap();
        }
    }
    Ok(out)
}
