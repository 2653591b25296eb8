//! Local rewrite sites and the splice surgery that applies a rule.
//!
//! A site is a set of vertices together with its interface legs listed in
//! planar cyclic order. Faces give sites whose legs hang off the corners,
//! a double edge gives the four legs of its two mixed vertices, and a
//! vertex-site exposes the three ports of one vertex. The same walk code
//! extracts this data from rule patterns and from host webs, so orientation
//! conventions cancel.

use std::collections::{BTreeMap, BTreeSet};

use crate::web::{End, Label, VertexKind, Web, WebError};

use super::SkeinError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SiteKind {
    Face,
    DoubleEdge,
    Vertex,
}

/// One occurrence of a local pattern in a web.
#[derive(Debug, Clone)]
pub struct Site {
    pub kind: SiteKind,
    /// vertices consumed by the rewrite
    pub verts: Vec<u32>,
    /// interface leg ends (ports on site vertices) in planar cyclic order
    pub legs: Vec<End>,
    /// per-position signature for cyclic matching
    pub sig: Vec<SigItem>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SigItem {
    /// first-occurrence index of the corner at this position
    pub corner: u8,
    pub corner_kind: VertexKind,
    pub leg_label: Label,
    /// label of the face side leaving this position (Double for edge sites,
    /// the leg label again for vertex sites)
    pub side_label: Label,
}

fn first_occurrence_pattern(corner_of: &[u32]) -> Vec<u8> {
    let mut seen: Vec<u32> = Vec::new();
    corner_of
        .iter()
        .map(|v| {
            if let Some(i) = seen.iter().position(|x| x == v) {
                i as u8
            } else {
                seen.push(*v);
                (seen.len() - 1) as u8
            }
        })
        .collect()
}

impl Site {
    /// Build a face site from a face orbit (darts along the walk). Returns
    /// None if the face touches the boundary or repeats a vertex or an edge.
    pub fn from_face(w: &Web, orbit: &[End]) -> Option<Site> {
        let n = orbit.len();
        if n == 0 || n > 5 {
            return None;
        }
        let mut corners = Vec::with_capacity(n);
        let mut legs = Vec::with_capacity(n);
        let mut sides = Vec::with_capacity(n);
        let mut edges_seen: BTreeSet<(End, End)> = BTreeSet::new();
        for d in orbit {
            if matches!(d, End::B(_)) {
                return None;
            }
            let to = w.partner(*d);
            let End::P { v, p } = to else { return None };
            // normalized edge id
            let e = if *d < to { (*d, to) } else { (to, *d) };
            if !edges_seen.insert(e) {
                return None;
            }
            corners.push(v);
            legs.push(End::P { v, p: (p + 2) % 3 });
            sides.push(w.end_label(*d));
        }
        // self-loop monogon: the one corner appears once in the walk; larger
        // faces must have all corners distinct
        let distinct: BTreeSet<u32> = corners.iter().copied().collect();
        if distinct.len() != n {
            return None;
        }
        let occ = first_occurrence_pattern(&corners);
        let sig = (0..n)
            .map(|i| SigItem {
                corner: occ[i],
                corner_kind: w.vertex_kind(corners[i]),
                leg_label: w.end_label(legs[i]),
                side_label: sides[i],
            })
            .collect();
        let mut verts: Vec<u32> = distinct.into_iter().collect();
        verts.sort_unstable();
        Some(Site { kind: SiteKind::Face, verts, legs, sig })
    }

    /// Site of an interior double edge joining two distinct mixed vertices.
    pub fn from_double_edge(w: &Web, x: End, y: End) -> Option<Site> {
        let (End::P { v: v1, p: p1 }, End::P { v: v2, p: p2 }) = (x, y) else {
            return None;
        };
        if v1 == v2
            || w.vertex_kind(v1) != VertexKind::V211
            || w.vertex_kind(v2) != VertexKind::V211
        {
            return None;
        }
        debug_assert_eq!((p1, p2), (0, 0), "double port of V211 is port 0");
        let legs = vec![
            End::P { v: v1, p: 1 },
            End::P { v: v1, p: 2 },
            End::P { v: v2, p: 1 },
            End::P { v: v2, p: 2 },
        ];
        let corners = [v1, v1, v2, v2];
        let occ = first_occurrence_pattern(&corners);
        let sig = (0..4)
            .map(|i| SigItem {
                corner: occ[i],
                corner_kind: VertexKind::V211,
                leg_label: w.end_label(legs[i]),
                side_label: Label::Double,
            })
            .collect();
        Some(Site { kind: SiteKind::DoubleEdge, verts: vec![v1.min(v2), v1.max(v2)], legs, sig })
    }

    /// Site of a single vertex (used by the V222 expansion).
    pub fn from_vertex(w: &Web, v: u32) -> Site {
        let legs: Vec<End> = (0..3u8).map(|p| End::P { v, p }).collect();
        let sig = legs
            .iter()
            .map(|l| SigItem {
                corner: 0,
                corner_kind: w.vertex_kind(v),
                leg_label: w.end_label(*l),
                side_label: w.end_label(*l),
            })
            .collect();
        Site { kind: SiteKind::Vertex, verts: vec![v], legs, sig }
    }

    /// Cyclic offsets r with host_sig[i] == pat_sig[(i - r) mod n] for all i.
    pub fn match_offsets(&self, pattern: &Site) -> Vec<usize> {
        let n = self.sig.len();
        if self.kind != pattern.kind || n != pattern.sig.len() {
            return Vec::new();
        }
        (0..n)
            .filter(|r| (0..n).all(|i| self.sig[i] == pattern.sig[(i + n - r) % n]))
            .collect()
    }
}

/// Replace `site` in `host` by `rhs`. `leg_to_rhs_bnd[i]` names the rhs
/// boundary position spliced onto host leg i.
pub fn splice_replace(
    host: &Web,
    site: &Site,
    rhs: &Web,
    leg_to_rhs_bnd: &[u32],
) -> Result<Web, SkeinError> {
    use crate::web::{smooth_joints, SEnd};
    let site_verts: BTreeSet<u32> = site.verts.iter().copied().collect();
    let nlegs = site.legs.len();
    let leg_index: BTreeMap<End, u32> = site
        .legs
        .iter()
        .enumerate()
        .map(|(i, e)| (*e, i as u32))
        .collect();
    let voff = host.num_vertices() as u32;

    let classify_host = |e: End| -> Option<SEnd> {
        if let Some(i) = leg_index.get(&e) {
            return Some(SEnd::Joint(*i, false));
        }
        match e {
            End::P { v, .. } if site_verts.contains(&v) => None, // interior to site
            other => Some(SEnd::Real(other)),
        }
    };

    let mut m: BTreeMap<SEnd, SEnd> = BTreeMap::new();
    for (x, y) in host.edges() {
        match (classify_host(x), classify_host(y)) {
            (Some(a), Some(b)) => {
                m.insert(a, b);
                m.insert(b, a);
            }
            (None, None) => {} // site-interior edge, dropped
            _ => {
                return Err(SkeinError::Web(WebError::Corrupt(
                    "edge from site interior to exterior".into(),
                )))
            }
        }
    }
    // rhs ends: boundary positions become the joints' other side
    let bnd_to_leg: BTreeMap<u32, u32> = leg_to_rhs_bnd
        .iter()
        .enumerate()
        .map(|(i, b)| (*b, i as u32))
        .collect();
    if bnd_to_leg.len() != nlegs {
        return Err(SkeinError::Web(WebError::Corrupt("rhs leg map not bijective".into())));
    }
    let classify_rhs = |e: End| -> Result<SEnd, SkeinError> {
        match e {
            End::P { v, p } => Ok(SEnd::Real(End::P { v: v + voff, p })),
            End::B(i) => {
                let leg = bnd_to_leg.get(&i).ok_or_else(|| {
                    SkeinError::Web(WebError::Corrupt("rhs boundary not mapped".into()))
                })?;
                Ok(SEnd::Joint(*leg, true))
            }
        }
    };
    for (x, y) in rhs.edges() {
        let (a, b) = (classify_rhs(x)?, classify_rhs(y)?);
        m.insert(a, b);
        m.insert(b, a);
    }
    let joint_labels: Vec<Label> = site.legs.iter().map(|l| host.end_label(*l)).collect();
    let (pair, l1, l2) = smooth_joints(&m, &joint_labels).map_err(SkeinError::Web)?;

    // compact vertex ids: host vertices minus the site, then rhs vertices
    let mut newid: BTreeMap<u32, u32> = BTreeMap::new();
    let mut verts: Vec<VertexKind> = Vec::new();
    for v in 0..host.num_vertices() as u32 {
        if !site_verts.contains(&v) {
            newid.insert(v, verts.len() as u32);
            verts.push(host.vertex_kind(v));
        }
    }
    for v in 0..rhs.num_vertices() as u32 {
        newid.insert(v + voff, verts.len() as u32);
        verts.push(rhs.vertex_kind(v));
    }
    let remap = |e: End| match e {
        End::P { v, p } => End::P { v: newid[&v], p },
        b => b,
    };
    let pair = pair
        .iter()
        .map(|(x, y)| (remap(*x), remap(*y)))
        .collect::<BTreeMap<_, _>>();
    let (h1, h2) = host.free_loops();
    let (r1, r2) = rhs.free_loops();
    let out = Web::from_parts(verts, host.coloring(), pair, h1 + r1 + l1, h2 + r2 + l2);
    debug_assert!(out.validate().is_ok(), "splice produced invalid web");
    Ok(out)
}
