//! Catalog of the web diagrams used by relations, crossings and projectors.
//!
//! Tangle convention: a diagram with n bottom legs b1..bn (left to right) and
//! m top legs t1..tm lives in a disk with the base point at the bottom-left
//! corner, so its boundary reads clockwise as [t1..tm, bn..b1]. Everything
//! here is assembled from the elementary webs by glue/rotate/tensor.

use crate::web::{arc, glue, rotate, tensor, vertex111, vertex211, vertex222, Label, Web};
use Label::{Double as D, Single as S};

/// n parallel strands: bottom [l1..ln], top the same.
pub fn tangle_id(labels: &[Label]) -> Web {
    let n = labels.len();
    let mut pair = std::collections::BTreeMap::new();
    let mut bnd = vec![S; 2 * n];
    for (i, &l) in labels.iter().enumerate() {
        let t = i as u32;
        let b = (2 * n - 1 - i) as u32;
        bnd[t as usize] = l;
        bnd[b as usize] = l;
        pair.insert(crate::web::End::B(t), crate::web::End::B(b));
        pair.insert(crate::web::End::B(b), crate::web::End::B(t));
    }
    let w = Web::from_parts(vec![], bnd, pair, 0, 0);
    debug_assert!(w.validate().is_ok());
    w
}

/// Stack `upper` on top of `lower`, gluing `n_mid` middle points.
pub fn stack(lower: &Web, upper: &Web, n_mid: usize) -> Web {
    glue(upper, lower, n_mid).expect("stack label mismatch")
}

/// Side-by-side juxtaposition of tangles: bottom rows and top rows
/// concatenate left-to-right. `a` has shape (na bottom, ma top).
pub fn hcat(a: &Web, na: usize, ma: usize, b: &Web) -> Web {
    let x = rotate(a, -(na as i64));
    let t = tensor(b, &x);
    rotate(&t, -(ma as i64))
}

/// Connect adjacent boundary positions i and i+1 by an arc.
pub fn plug_adjacent(x: &Web, i: usize) -> Web {
    let n = x.boundary_len();
    let l = x.coloring()[i];
    let r = rotate(x, (i + 2) as i64);
    let g = glue(&r, &arc(l), 2).expect("plug label mismatch");
    let back = (n - i - 2) % (n - 2).max(1);
    rotate(&g, back as i64)
}

/// Trivalent merge: bottom (x, y), top z. Returned as a 2-in 1-out tangle.
pub fn merge2(x: Label, y: Label, z: Label) -> Web {
    match (x, y, z) {
        (S, S, S) => rotate(&vertex111(), 1),
        (S, S, D) => vertex211(),
        (S, D, S) => rotate(&vertex211(), 2),
        (D, S, S) => rotate(&vertex211(), 1),
        (D, D, D) => vertex222(),
        _ => panic!("no trivalent vertex merges ({x},{y}) into {z}"),
    }
}

/// Trivalent split: bottom z, top (x, y). A 1-in 2-out tangle.
pub fn split2(z: Label, x: Label, y: Label) -> Web {
    match (z, x, y) {
        (S, S, S) => rotate(&vertex111(), 2),
        (D, S, S) => rotate(&vertex211(), 1),
        (S, D, S) => vertex211(),
        (S, S, D) => rotate(&vertex211(), 2),
        (D, D, D) => rotate(&vertex222(), 1),
        _ => panic!("no trivalent vertex splits {z} into ({x},{y})"),
    }
}

/// H with a vertical trunk: bottom pair merges, trunk, splits to the top pair.
pub fn vert_h(bot: (Label, Label), rung: Label, top: (Label, Label)) -> Web {
    stack(&merge2(bot.0, bot.1, rung), &split2(rung, top.0, top.1), 1)
}

/// H with a horizontal rung: left vertex joins b1 and t1, right vertex b2, t2.
pub fn horiz_h(bot: (Label, Label), rung: Label, top: (Label, Label)) -> Web {
    rotate(&vert_h((bot.1, top.1), rung, (bot.0, top.0)), 1)
}

/// Two nested arcs: cap at the bottom (label `bot`), cup at the top.
pub fn arcs(bot: Label, top: Label) -> Web {
    tensor(&arc(top), &arc(bot))
}

/// Square of four single edges with a leg at each corner.
pub fn square4(bot: (Label, Label), top: (Label, Label)) -> Web {
    let lower = horiz_h(bot, S, (S, S));
    let upper = horiz_h((S, S), S, top);
    stack(&lower, &upper, 2)
}

/// Triangle with bottom legs (a, b) and top leg c; `sides` is
/// (left, right, bottom).
pub fn triangle(a: Label, b: Label, c: Label, sides: (Label, Label, Label)) -> Web {
    let lower = horiz_h((a, b), sides.2, (sides.0, sides.1));
    stack(&lower, &merge2(sides.0, sides.1, c), 2)
}

/// Digon: bottom leg, two parallel edges (`sides`), top leg.
pub fn digon(bot: Label, sides: (Label, Label), top: Label) -> Web {
    stack(&split2(bot, sides.0, sides.1), &merge2(sides.0, sides.1, top), 2)
}

/// Monogon: a self-loop of label `lp` on the vertex of a `stem` leg.
pub fn monogon(lp: Label, stem: Label) -> Web {
    let v = match (lp, stem) {
        (S, S) => vertex111(),
        (S, D) => vertex211(),
        (D, D) => vertex222(),
        _ => panic!("no monogon with loop {lp} on stem {stem}"),
    };
    // the two non-stem legs are the last two boundary positions
    glue(&v, &arc(lp), 2).expect("monogon closure")
}

/// The two-single-edge bubble on a double strand (1-in 1-out).
pub fn bubble() -> Web {
    stack(&split2(D, S, S), &merge2(S, S, D), 2)
}

/// Path of k trivalent vertices, each with a single leg down, joined by
/// single edges; the two path ends exit at the top: (k bottom, 2 top).
pub fn caterpillar(k: usize) -> Web {
    assert!(k >= 2);
    let mut w = horiz_h((S, S), S, (S, S));
    let mut bot = 2;
    while bot < k {
        // append one more vertex on the right and join the arms
        let x = hcat(&w, bot, 2, &split2(S, S, S));
        // top row is [L, R, l', r']; join R with l'
        w = plug_adjacent(&x, 1);
        bot += 1;
    }
    w
}

/// Pentagon: five single sides, five V111 corners, five single legs.
pub fn pentagon() -> Web {
    plug_adjacent(&caterpillar(5), 0)
}

/// Named basis and relation webs (boundary read [t1..tm, bn..b1]).
pub mod named {
    use super::*;

    pub fn w11_id() -> Web {
        tangle_id(&[S, S])
    }
    pub fn w11_arcs() -> Web {
        arcs(S, S)
    }
    pub fn w11_tate() -> Web {
        vert_h((S, S), S, (S, S))
    }
    pub fn w11_yoko() -> Web {
        horiz_h((S, S), S, (S, S))
    }
    pub fn w11_rung() -> Web {
        vert_h((S, S), D, (S, S))
    }
    pub fn w22_id() -> Web {
        tangle_id(&[D, D])
    }
    pub fn w22_arcs() -> Web {
        arcs(D, D)
    }
    pub fn w22_tate() -> Web {
        vert_h((D, D), D, (D, D))
    }
    pub fn w22_yoko() -> Web {
        horiz_h((D, D), D, (D, D))
    }
    pub fn w22_square() -> Web {
        square4((D, D), (D, D))
    }
    /// Mixed-space webs for bottom (1,2), top (2,1).
    pub fn w12_tate() -> Web {
        vert_h((S, D), S, (D, S))
    }
    pub fn w12_yoko() -> Web {
        horiz_h((S, D), S, (D, S))
    }
    pub fn w12_square() -> Web {
        square4((S, D), (D, S))
    }
    /// Mixed-space webs for bottom (2,1), top (1,2).
    pub fn w21_tate() -> Web {
        vert_h((D, S), S, (S, D))
    }
    pub fn w21_yoko() -> Web {
        horiz_h((D, S), S, (S, D))
    }
    pub fn w21_square() -> Web {
        square4((D, S), (S, D))
    }
    /// Webs for bottom (1,1), top (2,2).
    pub fn w1122_arcs() -> Web {
        arcs(S, D)
    }
    pub fn w1122_rung() -> Web {
        vert_h((S, S), D, (D, D))
    }
    pub fn w1122_yoko() -> Web {
        horiz_h((S, S), S, (D, D))
    }
    /// Webs for bottom (1,1), top (1,2).
    pub fn w1112_tate() -> Web {
        vert_h((S, S), S, (S, D))
    }
    pub fn w1112_yoko() -> Web {
        horiz_h((S, S), S, (S, D))
    }
    /// Tripod next to a double arc, coloring (1,2,2,1,1).
    pub fn tripod_with_double_arc() -> Web {
        rotate(&tensor(&vertex111(), &arc(D)), 2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::web::{canonical_key, faces};

    #[test]
    fn tangles_are_valid_webs() {
        for w in [
            tangle_id(&[S, D, S]),
            named::w11_tate(),
            named::w11_yoko(),
            named::w11_rung(),
            named::w12_tate(),
            named::w12_yoko(),
            named::w12_square(),
            named::w22_square(),
            named::w1122_rung(),
            named::w1122_yoko(),
            bubble(),
            digon(S, (S, S), S),
            digon(D, (S, S), D),
            triangle(S, S, S, (S, S, S)),
            triangle(D, D, D, (S, S, S)),
            monogon(S, S),
            monogon(S, D),
            monogon(D, D),
            caterpillar(3),
            pentagon(),
            named::tripod_with_double_arc(),
        ] {
            w.validate().unwrap();
        }
    }

    #[test]
    fn pentagon_has_five_sided_inner_face() {
        let p = pentagon();
        assert_eq!(p.num_vertices(), 5);
        assert_eq!(p.coloring(), vec![S; 5]);
        let f = faces(&p);
        assert!(
            f.iter()
                .any(|fi| fi.sides == 5 && !fi.outer && fi.walk.iter().all(|(l, v)| *l == S
                    && *v == Some(crate::web::VertexKind::V111))),
            "faces: {f:?}"
        );
    }

    #[test]
    fn tate_yoko_are_quarter_turns() {
        let t = named::w11_tate();
        let y = named::w11_yoko();
        assert_eq!(canonical_key(&rotate(&t, 1)), canonical_key(&y));
        assert_eq!(canonical_key(&rotate(&y, 1)), canonical_key(&t));
        assert_ne!(canonical_key(&t), canonical_key(&y));
    }

    #[test]
    fn square_has_four_sided_inner_face() {
        let sq = named::w22_square();
        let f = faces(&sq);
        assert!(f.iter().any(|fi| fi.sides == 4 && !fi.outer), "{f:?}");
        assert_eq!(sq.coloring(), vec![D, D, D, D]);
    }

    #[test]
    fn digon_pattern_shapes() {
        let dg = digon(D, (S, S), D);
        assert_eq!(dg.coloring(), vec![D, D]);
        assert_eq!(dg.num_vertices(), 2);
        let f = faces(&dg);
        assert!(f.iter().any(|fi| fi.sides == 2 && !fi.outer));
    }

    #[test]
    fn w4_coloring() {
        let w4 = named::tripod_with_double_arc();
        assert_eq!(w4.coloring(), vec![S, D, D, S, S]);
    }

    #[test]
    fn mixed_h_webs_distinct() {
        let t = named::w12_tate();
        let y = named::w12_yoko();
        assert_eq!(t.coloring(), y.coloring());
        assert_ne!(canonical_key(&t), canonical_key(&y));
        // a half turn is an isotopy of both
        assert_eq!(canonical_key(&rotate(&t, 2)), canonical_key(&t));
        assert_eq!(canonical_key(&rotate(&y, 2)), canonical_key(&y));
    }
}
