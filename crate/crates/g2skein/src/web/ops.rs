//! Elementary webs and the spider operations: tensor, glue, rotate, mirror.

use std::collections::BTreeMap;

use super::map::{End, Label, VertexKind, Web};
use super::WebError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Elementary {
    SingleStrand,
    DoubleStrand,
    Vertex111,
    Vertex211,
    Vertex222,
    CupSingle,
    CupDouble,
    CapSingle,
    CapDouble,
}

/// A vertexless arc between two boundary points.
pub fn arc(label: Label) -> Web {
    let mut pair = BTreeMap::new();
    pair.insert(End::B(0), End::B(1));
    pair.insert(End::B(1), End::B(0));
    Web { verts: vec![], bnd: vec![label, label], pair, loops1: 0, loops2: 0 }
}

/// A vertexless circle.
pub fn circle(label: Label) -> Web {
    match label {
        Label::Single => Web { loops1: 1, ..Web::default() },
        Label::Double => Web { loops2: 1, ..Web::default() },
    }
}

fn one_vertex(kind: VertexKind, bnd: Vec<Label>, attach: [(u32, u8); 3]) -> Web {
    let mut pair = BTreeMap::new();
    for (b, p) in attach {
        pair.insert(End::B(b), End::port(0, p));
        pair.insert(End::port(0, p), End::B(b));
    }
    Web { verts: vec![kind], bnd, pair, loops1: 0, loops2: 0 }
}

/// The trivalent vertex with three single legs; coloring (1,1,1).
pub fn vertex111() -> Web {
    use Label::Single as S;
    one_vertex(VertexKind::V111, vec![S, S, S], [(0, 1), (1, 0), (2, 2)])
}

/// The mixed vertex; coloring (2,1,1) with the double leg first.
pub fn vertex211() -> Web {
    use Label::{Double as D, Single as S};
    one_vertex(VertexKind::V211, vec![D, S, S], [(0, 0), (1, 2), (2, 1)])
}

/// The vertex with three double legs; coloring (2,2,2).
pub fn vertex222() -> Web {
    use Label::Double as D;
    one_vertex(VertexKind::V222, vec![D, D, D], [(0, 0), (1, 2), (2, 1)])
}

pub fn elementary(kind: Elementary) -> Web {
    match kind {
        Elementary::SingleStrand | Elementary::CupSingle | Elementary::CapSingle => {
            arc(Label::Single)
        }
        Elementary::DoubleStrand | Elementary::CupDouble | Elementary::CapDouble => {
            arc(Label::Double)
        }
        Elementary::Vertex111 => vertex111(),
        Elementary::Vertex211 => vertex211(),
        Elementary::Vertex222 => vertex222(),
    }
}

/// Side-by-side juxtaposition; coloring concatenates.
pub fn tensor(a: &Web, b: &Web) -> Web {
    let nv = a.verts.len() as u32;
    let nb = a.bnd.len() as u32;
    let shift = |e: End| match e {
        End::P { v, p } => End::P { v: v + nv, p },
        End::B(i) => End::B(i + nb),
    };
    let mut pair = a.pair.clone();
    for (x, y) in b.pair.iter() {
        pair.insert(shift(*x), shift(*y));
    }
    let mut verts = a.verts.clone();
    verts.extend_from_slice(&b.verts);
    let mut bnd = a.bnd.clone();
    bnd.extend_from_slice(&b.bnd);
    Web {
        verts,
        bnd,
        pair,
        loops1: a.loops1 + b.loops1,
        loops2: a.loops2 + b.loops2,
    }
}

/// Move the base point k positions clockwise (coloring shifts cyclically).
pub fn rotate(a: &Web, k: i64) -> Web {
    let n = a.bnd.len() as i64;
    if n == 0 {
        return a.clone();
    }
    let k = k.rem_euclid(n);
    let remap = |e: End| match e {
        End::B(i) => End::B(((i as i64 - k).rem_euclid(n)) as u32),
        p => p,
    };
    let pair = a.pair.iter().map(|(x, y)| (remap(*x), remap(*y))).collect();
    let bnd = (0..n).map(|i| a.bnd[((i + k) % n) as usize]).collect();
    Web { verts: a.verts.clone(), bnd, pair, loops1: a.loops1, loops2: a.loops2 }
}

/// Reflect the diagram: vertex rotations reverse, boundary order reverses
/// around the fixed base point.
pub fn mirror(a: &Web) -> Web {
    let n = a.bnd.len() as u32;
    let remap = |e: End| match e {
        End::P { v, p } => End::P { v, p: if p == 0 { 0 } else { 3 - p } },
        End::B(i) => End::B(n - 1 - i),
    };
    let pair = a.pair.iter().map(|(x, y)| (remap(*x), remap(*y))).collect();
    let bnd = a.bnd.iter().rev().copied().collect();
    Web { verts: a.verts.clone(), bnd, pair, loops1: a.loops1, loops2: a.loops2 }
}

/// Working endpoint space for splicing: real ends of the result plus joints
/// that will be smoothed away.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) enum SEnd {
    Real(End),
    Joint(u32, bool),
}

/// Resolve a matching over `SEnd` into a matching over real ends.
/// `Joint(j, false)` and `Joint(j, true)` are the two sides of joint j; a
/// strand entering one side continues out of the other. Chains of joints with
/// no real end form closed loops, counted by label.
pub(crate) fn smooth_joints(
    m: &BTreeMap<SEnd, SEnd>,
    joint_labels: &[Label],
) -> Result<(BTreeMap<End, End>, u32, u32), WebError> {
    let mut pair = BTreeMap::new();
    let mut seen_joint = vec![false; joint_labels.len()];
    for (s, t) in m.iter() {
        let SEnd::Real(start) = *s else { continue };
        let mut cur = *t;
        loop {
            match cur {
                SEnd::Real(e) => {
                    pair.insert(start, e);
                    break;
                }
                SEnd::Joint(j, side) => {
                    seen_joint[j as usize] = true;
                    let other = SEnd::Joint(j, !side);
                    cur = *m
                        .get(&other)
                        .ok_or_else(|| WebError::Corrupt("dangling joint".into()))?;
                }
            }
        }
    }
    // joints never reached from a real end: closed loops
    let (mut l1, mut l2) = (0u32, 0u32);
    for j in 0..joint_labels.len() {
        if seen_joint[j] {
            continue;
        }
        // walk the closed chain: entering joint side s, a strand exits via !s
        let mut cur = (j as u32, false);
        loop {
            seen_joint[cur.0 as usize] = true;
            let exit = SEnd::Joint(cur.0, !cur.1);
            match m.get(&exit) {
                Some(SEnd::Joint(j2, s2)) => cur = (*j2, *s2),
                Some(SEnd::Real(_)) | None => {
                    return Err(WebError::Corrupt("broken joint cycle".into()))
                }
            }
            if cur == (j as u32, false) {
                break;
            }
        }
        match joint_labels[j] {
            Label::Single => l1 += 1,
            Label::Double => l2 += 1,
        }
    }
    Ok((pair, l1, l2))
}

/// Glue the last k boundary points of `a` (clockwise) to the first k of `b`
/// in reverse, pairwise. Labels must match.
pub fn glue(a: &Web, b: &Web, k: usize) -> Result<Web, WebError> {
    let n = a.bnd.len();
    let m = b.bnd.len();
    if k > n || k > m {
        return Err(WebError::GlueArity { have: n.min(m), want: k });
    }
    for j in 0..k {
        let la = a.bnd[n - k + j];
        let lb = b.bnd[k - 1 - j];
        if la != lb {
            return Err(WebError::GlueLabelMismatch { a: la, b: lb });
        }
    }
    let nv = a.verts.len() as u32;
    // result boundary: a[0 .. n-k] then b[k .. m]
    let map_a = |e: End| match e {
        End::P { v, p } => SEnd::Real(End::P { v, p }),
        End::B(i) => {
            if (i as usize) < n - k {
                SEnd::Real(End::B(i))
            } else {
                SEnd::Joint(i - (n - k) as u32, false)
            }
        }
    };
    let map_b = |e: End| match e {
        End::P { v, p } => SEnd::Real(End::P { v: v + nv, p }),
        End::B(i) => {
            if (i as usize) < k {
                SEnd::Joint((k - 1 - i as usize) as u32, true)
            } else {
                SEnd::Real(End::B((n - k + i as usize - k) as u32))
            }
        }
    };
    let mut m2: BTreeMap<SEnd, SEnd> = BTreeMap::new();
    for (x, y) in a.pair.iter() {
        m2.insert(map_a(*x), map_a(*y));
    }
    for (x, y) in b.pair.iter() {
        m2.insert(map_b(*x), map_b(*y));
    }
    let joint_labels: Vec<Label> = (0..k).map(|j| a.bnd[n - k + j]).collect();
    let (pair, l1, l2) = smooth_joints(&m2, &joint_labels)?;
    let mut verts = a.verts.clone();
    verts.extend_from_slice(&b.verts);
    let mut bnd: Vec<Label> = a.bnd[..n - k].to_vec();
    bnd.extend_from_slice(&b.bnd[k..]);
    let w = Web {
        verts,
        bnd,
        pair,
        loops1: a.loops1 + b.loops1 + l1,
        loops2: a.loops2 + b.loops2 + l2,
    };
    debug_assert!(w.validate().is_ok(), "glue produced invalid web");
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn elementary_colorings() {
        assert_eq!(arc(Label::Single).coloring(), vec![Label::Single; 2]);
        assert_eq!(
            vertex211().coloring(),
            vec![Label::Double, Label::Single, Label::Single]
        );
        assert_eq!(vertex222().coloring(), vec![Label::Double; 3]);
        for w in [arc(Label::Single), vertex111(), vertex211(), vertex222()] {
            w.validate().unwrap();
        }
    }

    #[test]
    fn cup_cap_glue_makes_circle() {
        let c = glue(&arc(Label::Single), &arc(Label::Single), 2).unwrap();
        assert!(c.is_closed());
        assert_eq!(c.free_loops(), (1, 0));
        c.validate().unwrap();
        let d = glue(&arc(Label::Double), &arc(Label::Double), 2).unwrap();
        assert_eq!(d.free_loops(), (0, 1));
    }

    #[test]
    fn monogon_from_vertex_and_cap() {
        // glue a single cap onto the two single legs of the mixed vertex:
        // rotate so the single legs are the last two positions
        let v = vertex211();
        let w = glue(&v, &arc(Label::Single), 2).unwrap();
        assert_eq!(w.coloring(), vec![Label::Double]);
        assert_eq!(w.num_vertices(), 1);
        assert_eq!(w.num_edges(), 2); // self-loop and the double leg
        w.validate().unwrap();
    }

    #[test]
    fn tensor_concatenates() {
        let t = tensor(&arc(Label::Single), &vertex222());
        assert_eq!(
            t.coloring(),
            vec![
                Label::Single,
                Label::Single,
                Label::Double,
                Label::Double,
                Label::Double
            ]
        );
        t.validate().unwrap();
        // unit
        let u = tensor(&Web::empty(), &vertex111());
        assert_eq!(u.coloring(), vertex111().coloring());
    }

    #[test]
    fn rotate_full_cycle_is_identity_on_coloring() {
        let v = vertex211();
        assert_eq!(rotate(&v, 1).coloring(), vec![Label::Single, Label::Single, Label::Double]);
        assert_eq!(rotate(&v, 3).coloring(), v.coloring());
        rotate(&v, 1).validate().unwrap();
    }

    #[test]
    fn mirror_involution_and_reversal() {
        let v = vertex211();
        let m = mirror(&v);
        assert_eq!(m.coloring(), vec![Label::Single, Label::Single, Label::Double]);
        m.validate().unwrap();
        let mm = mirror(&m);
        assert_eq!(mm.coloring(), v.coloring());
    }

    #[test]
    fn glue_label_mismatch_rejected() {
        assert!(glue(&arc(Label::Single), &arc(Label::Double), 2).is_err());
    }

    #[test]
    fn digon_web_faces() {
        // two mixed vertices joined along both single legs: rotate one so its
        // single legs lead, then glue pairwise
        let top = vertex211(); // (2,1,1)
        let bot = vertex211();
        let w = glue(&top, &rotate(&bot, 1), 2).unwrap();
        assert_eq!(w.coloring(), vec![Label::Double, Label::Double]);
        assert_eq!(w.num_vertices(), 2);
        w.validate().unwrap();
        let f = super::super::map::faces(&w);
        assert!(f.iter().any(|fi| fi.sides == 2 && !fi.outer), "inner digon face: {f:?}");
    }
}
