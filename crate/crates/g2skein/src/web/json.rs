//! JSON serialization of webs.
//!
//! Half-edge ids are 3*vertex + port; `next` is the counterclockwise
//! successor around the vertex. Vertexless arcs are listed as boundary
//! position pairs and vertexless circles under "free_loops", since they have
//! no half-edges. The boundary is listed clockwise starting at the base
//! point, so "base_point" is 0 for every web this library emits; on input a
//! nonzero base point rotates the listing.

use serde::{Deserialize, Serialize};

use super::map::{End, Label, VertexKind, Web};
use super::WebError;

#[derive(Serialize, Deserialize)]
struct JVertex {
    kind: String,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum JTwin {
    Half(u32),
    Boundary { boundary: u32 },
}

#[derive(Serialize, Deserialize)]
struct JHalfEdge {
    twin: JTwin,
    next: u32,
    vertex: u32,
}

#[derive(Serialize, Deserialize)]
struct JWeb {
    vertices: Vec<JVertex>,
    half_edges: Vec<JHalfEdge>,
    edge_labels: Vec<String>,
    #[serde(default)]
    boundary: Vec<String>,
    #[serde(default)]
    arcs: Vec<(u32, u32)>,
    #[serde(default)]
    free_loops: Vec<String>,
    #[serde(default)]
    base_point: u32,
}

fn label_str(l: Label) -> String {
    match l {
        Label::Single => "single".into(),
        Label::Double => "double".into(),
    }
}

fn parse_label(s: &str) -> Result<Label, WebError> {
    match s {
        "single" | "1" => Ok(Label::Single),
        "double" | "2" => Ok(Label::Double),
        _ => Err(WebError::Json(format!("bad label {s:?}"))),
    }
}

pub fn to_json(w: &Web) -> String {
    let vertices = w
        .verts
        .iter()
        .map(|k| JVertex { kind: format!("{k:?}") })
        .collect();
    let mut half_edges = Vec::new();
    let mut edge_labels = Vec::new();
    for v in 0..w.verts.len() as u32 {
        for p in 0..3u8 {
            let e = End::P { v, p };
            let twin = match w.partner(e) {
                End::P { v: v2, p: p2 } => JTwin::Half(3 * v2 + p2 as u32),
                End::B(i) => JTwin::Boundary { boundary: i },
            };
            half_edges.push(JHalfEdge {
                twin,
                next: 3 * v + ((p + 1) % 3) as u32,
                vertex: v,
            });
            edge_labels.push(label_str(w.end_label(e)));
        }
    }
    let mut arcs = Vec::new();
    for (x, y) in w.edges() {
        if let (End::B(i), End::B(j)) = (x, y) {
            arcs.push((i, j));
        }
    }
    let mut free_loops = Vec::new();
    let (l1, l2) = w.free_loops();
    free_loops.extend(std::iter::repeat_n(label_str(Label::Single), l1 as usize));
    free_loops.extend(std::iter::repeat_n(label_str(Label::Double), l2 as usize));
    let j = JWeb {
        vertices,
        half_edges,
        edge_labels,
        boundary: w.bnd.iter().map(|l| label_str(*l)).collect(),
        arcs,
        free_loops,
        base_point: 0,
    };
    serde_json::to_string_pretty(&j).expect("serializable")
}

pub fn from_json(s: &str) -> Result<Web, WebError> {
    let j: JWeb = serde_json::from_str(s).map_err(|e| WebError::Json(e.to_string()))?;
    let mut verts = Vec::new();
    for v in &j.vertices {
        verts.push(match v.kind.as_str() {
            "V111" => VertexKind::V111,
            "V211" => VertexKind::V211,
            "V222" => VertexKind::V222,
            k => return Err(WebError::Json(format!("bad vertex kind {k:?}"))),
        });
    }
    let mut bnd = Vec::new();
    for l in &j.boundary {
        bnd.push(parse_label(l)?);
    }
    if j.half_edges.len() != 3 * verts.len() {
        return Err(WebError::Json(format!(
            "expected {} half-edges, got {}",
            3 * verts.len(),
            j.half_edges.len()
        )));
    }
    let end_of = |id: u32| -> Result<End, WebError> {
        if id as usize >= j.half_edges.len() {
            return Err(WebError::Json(format!("half-edge id {id} out of range")));
        }
        Ok(End::P { v: id / 3, p: (id % 3) as u8 })
    };
    let mut pair = std::collections::BTreeMap::new();
    for (id, he) in j.half_edges.iter().enumerate() {
        let id = id as u32;
        if he.vertex != id / 3 || he.next != 3 * (id / 3) + ((id % 3 + 1) % 3) {
            return Err(WebError::Json(format!(
                "half-edge {id} does not follow the 3*vertex+port layout"
            )));
        }
        let here = end_of(id)?;
        let there = match he.twin {
            JTwin::Half(t) => end_of(t)?,
            JTwin::Boundary { boundary } => {
                if boundary as usize >= bnd.len() {
                    return Err(WebError::Json(format!("boundary index {boundary} out of range")));
                }
                End::B(boundary)
            }
        };
        pair.insert(here, there);
        pair.insert(there, here);
    }
    for (i, jj) in &j.arcs {
        pair.insert(End::B(*i), End::B(*jj));
        pair.insert(End::B(*jj), End::B(*i));
    }
    let (mut l1, mut l2) = (0u32, 0u32);
    for l in &j.free_loops {
        match parse_label(l)? {
            Label::Single => l1 += 1,
            Label::Double => l2 += 1,
        }
    }
    let mut w = Web { verts, bnd, pair, loops1: l1, loops2: l2 };
    if j.base_point != 0 {
        w = super::ops::rotate(&w, j.base_point as i64);
    }
    w.validate()?;
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::super::key::canonical_key;
    use super::super::ops::{arc, glue, rotate, vertex111, vertex211};
    use super::*;
    use crate::web::Label::Single;

    #[test]
    fn roundtrip_on_keys() {
        let h = glue(&rotate(&vertex111(), 1), &vertex111(), 1).unwrap();
        let webs = [
            vertex211(),
            h,
            glue(&arc(Single), &arc(Single), 2).unwrap(),
            arc(Single),
        ];
        for w in &webs {
            let s = to_json(w);
            let w2 = from_json(&s).unwrap();
            assert_eq!(canonical_key(w), canonical_key(&w2), "{s}");
        }
    }
}
