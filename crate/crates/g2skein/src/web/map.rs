//! Planar web diagrams as combinatorial maps.
//!
//! A web is a trivalent graph with a rotation system, labelled edges and an
//! ordered disk boundary. Vertices carry exactly three ports in
//! counterclockwise cyclic order; the port pattern is fixed by the vertex
//! kind (the double port of a mixed vertex is always port 0). Every port and
//! every boundary position is an edge endpoint, and the edge set is a perfect
//! matching on endpoints. Circle components with no vertex are counted
//! separately per label.

use std::collections::BTreeMap;
use std::fmt;

use super::WebError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Single,
    Double,
}

impl Label {
    pub fn as_color(self) -> u8 {
        match self {
            Label::Single => 1,
            Label::Double => 2,
        }
    }

    pub fn from_color(c: u8) -> Result<Label, WebError> {
        match c {
            1 => Ok(Label::Single),
            2 => Ok(Label::Double),
            _ => Err(WebError::BadColor(c)),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_color())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexKind {
    /// Three single edges.
    V111,
    /// One double (port 0) and two single edges.
    V211,
    /// Three double edges.
    V222,
}

impl VertexKind {
    pub fn port_label(self, port: u8) -> Label {
        match (self, port) {
            (VertexKind::V111, _) => Label::Single,
            (VertexKind::V211, 0) => Label::Double,
            (VertexKind::V211, _) => Label::Single,
            (VertexKind::V222, _) => Label::Double,
        }
    }
}

/// An edge endpoint: a vertex port or a boundary position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum End {
    P { v: u32, p: u8 },
    B(u32),
}

impl End {
    pub fn port(v: u32, p: u8) -> End {
        End::P { v, p }
    }
}

/// Coloring: boundary labels read clockwise from the base point.
pub type Coloring = Vec<Label>;

#[derive(Clone, Debug, Default)]
pub struct Web {
    pub(crate) verts: Vec<VertexKind>,
    pub(crate) bnd: Vec<Label>,
    pub(crate) pair: BTreeMap<End, End>,
    pub(crate) loops1: u32,
    pub(crate) loops2: u32,
}

impl Web {
    pub fn empty() -> Web {
        Web::default()
    }

    pub(crate) fn from_parts(
        verts: Vec<VertexKind>,
        bnd: Vec<Label>,
        pair: BTreeMap<End, End>,
        loops1: u32,
        loops2: u32,
    ) -> Web {
        Web { verts, bnd, pair, loops1, loops2 }
    }

    pub(crate) fn set_loops(&mut self, l1: u32, l2: u32) {
        self.loops1 = l1;
        self.loops2 = l2;
    }

    pub(crate) fn push_vertex(&mut self, kind: VertexKind) -> u32 {
        self.verts.push(kind);
        (self.verts.len() - 1) as u32
    }

    pub(crate) fn link(&mut self, x: End, y: End) {
        debug_assert_eq!(self.end_label(x), self.end_label(y));
        self.pair.insert(x, y);
        self.pair.insert(y, x);
    }

    pub(crate) fn unlink(&mut self, x: End, y: End) {
        debug_assert_eq!(self.pair.get(&x), Some(&y));
        self.pair.remove(&x);
        self.pair.remove(&y);
    }

    pub fn num_vertices(&self) -> usize {
        self.verts.len()
    }

    pub fn vertex_kind(&self, v: u32) -> VertexKind {
        self.verts[v as usize]
    }

    pub fn num_edges(&self) -> usize {
        self.pair.len() / 2
    }

    pub fn free_loops(&self) -> (u32, u32) {
        (self.loops1, self.loops2)
    }

    pub fn boundary_len(&self) -> usize {
        self.bnd.len()
    }

    pub fn coloring(&self) -> Coloring {
        self.bnd.clone()
    }

    pub fn is_closed(&self) -> bool {
        self.bnd.is_empty()
    }

    pub fn partner(&self, e: End) -> End {
        self.pair[&e]
    }

    pub fn end_label(&self, e: End) -> Label {
        match e {
            End::P { v, p } => self.verts[v as usize].port_label(p),
            End::B(i) => self.bnd[i as usize],
        }
    }

    /// Count of double edges, counting free double loops.
    pub fn double_edge_count(&self) -> usize {
        let mut n = self.loops2 as usize;
        for (x, y) in self.pair.iter() {
            if x < y && self.end_label(*x) == Label::Double {
                n += 1;
            }
        }
        n
    }

    pub fn v222_count(&self) -> usize {
        self.verts.iter().filter(|k| **k == VertexKind::V222).count()
    }

    /// All endpoint pairs, each edge listed once.
    pub fn edges(&self) -> impl Iterator<Item = (End, End)> + '_ {
        self.pair.iter().filter(|(x, y)| x < y).map(|(x, y)| (*x, *y))
    }

    /// Face successor of a dart. A dart is named by the endpoint it leaves
    /// from; the involution sends it across its edge, then the rotation steps
    /// one port counterclockwise (one boundary position forward at the disk).
    pub(crate) fn face_next(&self, d: End) -> End {
        match self.pair[&d] {
            End::P { v, p } => End::P { v, p: (p + 1) % 3 },
            End::B(i) => End::B((i + 1) % self.bnd.len() as u32),
        }
    }

    fn all_ends(&self) -> Vec<End> {
        let mut v = Vec::with_capacity(self.verts.len() * 3 + self.bnd.len());
        for (vi, _) in self.verts.iter().enumerate() {
            for p in 0..3u8 {
                v.push(End::P { v: vi as u32, p });
            }
        }
        for i in 0..self.bnd.len() {
            v.push(End::B(i as u32));
        }
        v
    }

    /// Face orbits of the rotation system (the disk boundary acts as one
    /// extra node). Each face is the list of darts along its walk.
    pub(crate) fn face_orbits(&self) -> Vec<Vec<End>> {
        let mut seen: BTreeMap<End, bool> = BTreeMap::new();
        let mut orbits = Vec::new();
        for start in self.all_ends() {
            if seen.contains_key(&start) {
                continue;
            }
            let mut orbit = Vec::new();
            let mut d = start;
            loop {
                seen.insert(d, true);
                orbit.push(d);
                d = self.face_next(d);
                if d == start {
                    break;
                }
            }
            orbits.push(orbit);
        }
        orbits
    }

    /// Connected components over nodes (vertices plus, if the boundary is
    /// nonempty, the disk). Returns (component id per vertex, id of the disk
    /// component if any, component count).
    pub(crate) fn components(&self) -> (Vec<usize>, Option<usize>, usize) {
        let nv = self.verts.len();
        let disk = if self.bnd.is_empty() { None } else { Some(nv) };
        let n_nodes = nv + disk.map_or(0, |_| 1);
        let mut uf: Vec<usize> = (0..n_nodes).collect();
        fn find(uf: &mut Vec<usize>, x: usize) -> usize {
            if uf[x] != x {
                let r = find(uf, uf[x]);
                uf[x] = r;
            }
            uf[x]
        }
        let node = |e: End| match e {
            End::P { v, .. } => v as usize,
            End::B(_) => nv,
        };
        for (x, y) in self.edges() {
            let (a, b) = (find(&mut uf, node(x)), find(&mut uf, node(y)));
            if a != b {
                uf[a] = b;
            }
        }
        let mut reps = Vec::new();
        let mut comp = vec![0usize; n_nodes];
        for i in 0..n_nodes {
            let r = find(&mut uf, i);
            let id = match reps.iter().position(|&x| x == r) {
                Some(id) => id,
                None => {
                    reps.push(r);
                    reps.len() - 1
                }
            };
            comp[i] = id;
        }
        let disk_comp = disk.map(|d| comp[d]);
        (comp[..nv].to_vec(), disk_comp, reps.len())
    }

    /// Structural invariants: total involutive matching without fixed points,
    /// matching endpoint labels, and genus zero for every component.
    pub fn validate(&self) -> Result<(), WebError> {
        let ends = self.all_ends();
        if self.pair.len() != ends.len() {
            return Err(WebError::Corrupt("matching is not total".into()));
        }
        for e in &ends {
            let f = *self
                .pair
                .get(e)
                .ok_or_else(|| WebError::Corrupt(format!("unmatched end {e:?}")))?;
            if f == *e {
                return Err(WebError::Corrupt(format!("fixed point at {e:?}")));
            }
            if self.pair.get(&f) != Some(e) {
                return Err(WebError::Corrupt(format!("matching not involutive at {e:?}")));
            }
            if self.end_label(*e) != self.end_label(f) {
                return Err(WebError::Corrupt(format!(
                    "label mismatch on edge {e:?} - {f:?}"
                )));
            }
        }
        // Euler check per component of the combined map.
        let nv = self.verts.len();
        let (vcomp, disk_comp, ncomp) = self.components();
        let node_comp = |e: End| match e {
            End::P { v, .. } => vcomp[v as usize],
            End::B(_) => disk_comp.expect("boundary end without disk"),
        };
        let mut v_cnt = vec![0i64; ncomp];
        let mut e_cnt = vec![0i64; ncomp];
        let mut f_cnt = vec![0i64; ncomp];
        for v in 0..nv {
            v_cnt[vcomp[v]] += 1;
        }
        if let Some(d) = disk_comp {
            v_cnt[d] += 1;
        }
        for (x, _) in self.edges() {
            e_cnt[node_comp(x)] += 1;
        }
        for orbit in self.face_orbits() {
            f_cnt[node_comp(orbit[0])] += 1;
        }
        for c in 0..ncomp {
            if v_cnt[c] - e_cnt[c] + f_cnt[c] != 2 {
                return Err(WebError::NotPlanar);
            }
        }
        Ok(())
    }
}

/// One face of a web, as reported by [`crate::web::faces`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceInfo {
    pub sides: usize,
    /// (edge label, kind of the vertex the walk arrives at) along the walk.
    /// Boundary arcs contribute no entries; a zero-vertex circle reports one
    /// entry with its own label.
    pub walk: Vec<(Label, Option<VertexKind>)>,
    /// Touches the disk boundary.
    pub outer: bool,
}

/// Enumerate faces. Free loops report as 1-sided faces on zero-vertex
/// components.
pub fn faces(w: &Web) -> Vec<FaceInfo> {
    let mut out = Vec::new();
    for orbit in w.face_orbits() {
        let outer = orbit.iter().any(|d| matches!(d, End::B(_)));
        let mut walk = Vec::new();
        let mut sides = 0;
        for d in &orbit {
            // each dart traverses one edge of the face boundary; boundary
            // arcs of the disk itself are not web edges
            sides += 1;
            let arrive = w.pair[d];
            match arrive {
                End::P { v, .. } => walk.push((w.end_label(*d), Some(w.vertex_kind(v)))),
                End::B(_) => walk.push((w.end_label(*d), None)),
            }
        }
        out.push(FaceInfo { sides, walk, outer });
    }
    let (l1, l2) = w.free_loops();
    for _ in 0..l1 {
        out.push(FaceInfo { sides: 1, walk: vec![(Label::Single, None)], outer: false });
    }
    for _ in 0..l2 {
        out.push(FaceInfo { sides: 1, walk: vec![(Label::Double, None)], outer: false });
    }
    out
}
