//! The relation engine: rewrite rules for every defining and derived
//! relation, closed-web evaluation, reduction to registered bases, and the
//! closure pairing.

pub mod diagrams;
mod engine;
mod pairing;
mod rewrite;
mod rules;

pub use engine::{Engine, EngineConfig, ReduceOutcome, Strategy};
pub use pairing::{equal, expand_in_basis, gram_matrix, invertible, pair, solve};
pub use rewrite::{Site, SiteKind};
pub use rules::{
    measure, rule_table, rule_table_defining, RewriteRule, RuleBody, LOOP_DOUBLE, LOOP_SINGLE,
};

use crate::web::{BasisRegistry, Label, SetKind, WebError};
use Label::{Double as D, Single as S};

#[derive(Debug, thiserror::Error)]
pub enum SkeinError {
    #[error("web error: {0}")]
    Web(#[from] WebError),
    #[error("webs are not closed")]
    NotClosed,
    #[error("step cap {0} exceeded")]
    StepCapExceeded(u64),
    #[error("reduction stuck on an irreducible closed web")]
    Stuck(Box<crate::web::Web>),
    #[error("reduction revisited a web inside its own evaluation")]
    Cycle(Box<crate::web::Web>),
    #[error("coloring {0} has no registered basis or spanning set")]
    UnregisteredColoring(String),
    #[error("pairing requires the reversed coloring")]
    PairingColoring,
    #[error("equality undecided: reduction stalled and no invertible Gram pairing")]
    Undecided,
}

/// An engine over the full rule table.
pub fn engine() -> Engine {
    Engine::with_table(rule_table())
}

/// An engine over the defining relations plus expansions only.
pub fn engine_defining() -> Engine {
    Engine::with_table(rule_table_defining())
}

/// The standard registry: the three web bases (sizes 4, 3, 5), the spaces
/// with at most one vertex, the mixed four-point colorings obtained by
/// rotation, and the ten-element five-point basis. Colorings whose web space
/// is zero register empty bases.
pub fn standard_registry() -> BasisRegistry {
    use crate::web::{rotate, Web};
    use diagrams::named;
    let mut reg = BasisRegistry::new();
    let mut put = |webs: Vec<Web>| {
        let coloring = webs[0].coloring();
        reg.register(coloring, SetKind::Basis, webs).expect("registry");
    };
    put(vec![crate::web::arc(S)]);
    put(vec![crate::web::arc(D)]);
    put(vec![named::w11_id(), named::w11_arcs(), named::w11_tate(), named::w11_yoko()]);
    put(vec![
        named::w22_id(),
        named::w22_arcs(),
        named::w22_tate(),
        named::w22_yoko(),
        named::w22_square(),
    ]);
    // mixed alternating colorings: 1212 and 2121
    put(vec![named::w21_tate(), named::w21_yoko(), named::w21_square()]);
    put(vec![named::w12_tate(), named::w12_yoko(), named::w12_square()]);
    // colorings 2211, 1122, 2112, 1221 by rotating the (1,1)->(2,2) basis
    for k in 0..4 {
        put([named::w1122_arcs(), named::w1122_rung(), named::w1122_yoko()]
            .iter()
            .map(|w| rotate(w, k))
            .collect());
    }
    // one-vertex三-point spaces and the rotations of the mixed one
    put(vec![crate::web::vertex111()]);
    put(vec![crate::web::vertex222()]);
    for k in 0..3 {
        put(vec![rotate(&crate::web::vertex211(), k)]);
    }
    // two-dimensional spaces with three single legs and one double leg
    for k in 0..4 {
        put([
            diagrams::vert_h((S, S), S, (S, D)),
            diagrams::horiz_h((S, S), S, (S, D)),
        ]
        .iter()
        .map(|w| rotate(w, k))
        .collect());
    }
    // the five-point single space: three-vertex paths and tripods beside arcs
    let cat = diagrams::caterpillar(3);
    let tri_arc = crate::web::tensor(&crate::web::vertex111(), &crate::web::arc(S));
    let mut five = Vec::new();
    for k in 0..5 {
        five.push(rotate(&cat, k));
    }
    for k in 0..5 {
        five.push(rotate(&tri_arc, k));
    }
    put(five);
    // zero-dimensional spaces
    for c in [
        vec![S],
        vec![D],
        vec![S, D],
        vec![D, S],
        vec![S, D, D],
        vec![D, D, S],
        vec![D, S, D],
    ] {
        reg.register(c, SetKind::Basis, vec![]).expect("registry");
    }
    reg
}
