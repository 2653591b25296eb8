//! Projector systems, spectral decompositions of the crossings, fast
//! crossing powers, and the doubled-strand cabled crossing.

mod tables;

pub use tables::{
    entry_strings, spectral_strings, weights_of, Space, TwoW2Reading, Weight,
    P22_2W2_TATE_INTEGER, P22_2W2_TATE_QUANTUM,
};

use crate::braid::{crossing, trace_close};
use crate::qalg::{parse_ratfunc, RatFunc};
use crate::skein::{diagrams, equal, expand_in_basis, ReduceOutcome};
use crate::skein::{Engine, SkeinError};
use crate::web::{BasisRegistry, Label, Web, WebSum};

#[derive(Debug, thiserror::Error)]
pub enum RepError {
    #[error("skein: {0}")]
    Skein(#[from] SkeinError),
    #[error("web: {0}")]
    Web(#[from] crate::web::WebError),
    #[error("no projector {1} in {0}")]
    UnknownProjector(Space, Weight),
    #[error("odd crossing power {0} does not land in an endomorphism space")]
    OddMixedPower(i64),
    #[error("reduction stalled while composing projectors")]
    Stalled,
    #[error("neither reading of the smudged 2w2 coefficient satisfies idempotency")]
    AmbiguityUnresolved,
}

/// Compose tangles: `x` then `y` (y stacked on top of x), reduced to the
/// registered basis of the combined space.
pub fn compose(
    eng: &mut Engine,
    reg: &BasisRegistry,
    x: &WebSum,
    y: &WebSum,
) -> Result<WebSum, RepError> {
    let stacked = y.glue(x, 2)?;
    Ok(expand_in_basis(eng, &stacked, reg)?)
}

/// Projector store with the smudged-coefficient reading resolved once.
pub struct Projectors {
    reading: TwoW2Reading,
}

impl Projectors {
    /// Resolve the ambiguous reading by idempotency of the 2w2 projector.
    pub fn resolve(eng: &mut Engine, reg: &BasisRegistry) -> Result<Projectors, RepError> {
        let mut winner = None;
        for reading in [TwoW2Reading::QuantumSeven, TwoW2Reading::IntegerSeven] {
            let p = tables::projector_sum(Space::End22, Weight::TwoW2, reading).unwrap();
            let pp = compose(eng, reg, &p, &p)?;
            if equal(eng, &pp, &p, reg)? {
                if winner.is_some() {
                    return Err(RepError::AmbiguityUnresolved);
                }
                winner = Some(reading);
            }
        }
        winner
            .map(|reading| Projectors { reading })
            .ok_or(RepError::AmbiguityUnresolved)
    }

    pub fn reading(&self) -> TwoW2Reading {
        self.reading
    }

    /// The transcribed (or, for Hom21, conjugated) projector.
    pub fn projector(
        &self,
        eng: &mut Engine,
        reg: &BasisRegistry,
        space: Space,
        w: Weight,
    ) -> Result<WebSum, RepError> {
        if space == Space::Hom21 {
            if !tables::weights_of(Space::Hom21).contains(&w) {
                return Err(RepError::UnknownProjector(space, w));
            }
            // conjugate the tabulated projector by the crossings:
            // input (2,1) -> inverse crossing -> (1,2) -> P12 -> (2,1) ->
            // positive crossing -> (1,2)
            let p12 = self.projector(eng, reg, Space::Hom12, w)?;
            let r12_inv = eng.simplify_open(&crossing(2, 1, -1))?;
            let r21 = eng.simplify_open(&crossing(2, 1, 1))?;
            let a = compose(eng, reg, &r12_inv, &p12)?;
            return compose(eng, reg, &a, &r21);
        }
        tables::projector_sum(space, w, self.reading)
            .ok_or(RepError::UnknownProjector(space, w))
    }

    /// Identity element of an endomorphism space.
    pub fn identity(space: Space) -> Option<WebSum> {
        match space {
            Space::End11 => Some(WebSum::from_web(&diagrams::named::w11_id())),
            Space::End22 => Some(WebSum::from_web(&diagrams::named::w22_id())),
            _ => None,
        }
    }
}

/// Spectral decomposition with parsed eigenvalues.
pub fn spectral(space: Space) -> Vec<(RatFunc, Weight)> {
    spectral_strings(space)
        .into_iter()
        .map(|(s, w)| (parse_ratfunc(s).expect("eigenvalue"), w))
        .collect()
}

#[derive(Debug, Clone)]
pub struct CheckReport {
    pub cases: Vec<(String, bool)>,
}

impl CheckReport {
    pub fn all_pass(&self) -> bool {
        self.cases.iter().all(|(_, ok)| *ok)
    }
}

/// Idempotency, orthogonality, completeness, and the 12/21 sandwich
/// structure, all via exact equality in the web space.
pub fn verify_projectors(
    eng: &mut Engine,
    reg: &BasisRegistry,
    ps: &Projectors,
) -> Result<CheckReport, RepError> {
    let mut cases = Vec::new();
    for space in [Space::End11, Space::End22] {
        let ws = weights_of(space);
        let projs: Vec<(Weight, WebSum)> = ws
            .iter()
            .map(|w| Ok((*w, ps.projector(eng, reg, space, *w)?)))
            .collect::<Result<_, RepError>>()?;
        for (wi, pi) in &projs {
            for (wj, pj) in &projs {
                let prod = compose(eng, reg, pi, pj)?;
                let expect = if wi == wj { pi.clone() } else { WebSum::zero(pi.coloring().clone()) };
                let ok = equal(eng, &prod, &expect, reg)?;
                cases.push((format!("{space}: P[{wi}] P[{wj}]"), ok));
            }
        }
        let mut total = WebSum::zero(projs[0].1.coloring().clone());
        for (_, p) in &projs {
            total = total.add(p);
        }
        let ok = equal(eng, &total, &Projectors::identity(space).unwrap(), reg)?;
        cases.push((format!("{space}: completeness"), ok));
    }
    // 12/21 sandwich identities
    let ws = weights_of(Space::Hom12);
    let p12: Vec<(Weight, WebSum)> = ws
        .iter()
        .map(|w| Ok((*w, ps.projector(eng, reg, Space::Hom12, *w)?)))
        .collect::<Result<_, RepError>>()?;
    let p21: Vec<(Weight, WebSum)> = ws
        .iter()
        .map(|w| Ok((*w, ps.projector(eng, reg, Space::Hom21, *w)?)))
        .collect::<Result<_, RepError>>()?;
    for (wi, pi) in &p12 {
        for (wj, qj) in &p21 {
            let inner = compose(eng, reg, pi, qj)?;
            let prod = compose(eng, reg, &inner, pi)?;
            let expect = if wi == wj { pi.clone() } else { WebSum::zero(pi.coloring().clone()) };
            let ok = equal(eng, &prod, &expect, reg)?;
            cases.push((format!("P12[{wi}] P21[{wj}] P12[{wi}] sandwich"), ok));
        }
    }
    // resolution of the identity through the mixed space
    let mut tot = None;
    for ((w, a), (_, b)) in p12.iter().zip(p21.iter()) {
        let e = compose(eng, reg, a, b)?;
        let _ = w;
        tot = Some(match tot {
            None => e,
            Some(t) => e.add(&t),
        });
    }
    let id12 = WebSum::from_web(&diagrams::tangle_id(&[Label::Single, Label::Double]));
    let ok = equal(eng, &tot.unwrap(), &id12, reg)?;
    cases.push(("sum P21[w] P12[w] = identity".into(), ok));
    Ok(CheckReport { cases })
}

/// Spectral sums reproduce the crossing expansions coefficientwise.
pub fn verify_spectral_vs_crossing(
    eng: &mut Engine,
    reg: &BasisRegistry,
    ps: &Projectors,
) -> Result<CheckReport, RepError> {
    let mut cases = Vec::new();
    for (space, (c1, c2)) in [
        (Space::End11, (1u8, 1u8)),
        (Space::Hom12, (1, 2)),
        (Space::Hom21, (2, 1)),
        (Space::End22, (2, 2)),
    ] {
        let mut sum: Option<WebSum> = None;
        for (lambda, w) in spectral(space) {
            let p = ps.projector(eng, reg, space, w)?;
            let t = p.scale(&lambda);
            sum = Some(match sum {
                None => t,
                Some(s) => s.add(&t),
            });
        }
        let spectral_side = expand_in_basis(eng, &sum.unwrap(), reg)?;
        let cross = match eng.reduce_to_basis(&crossing(c1, c2, 1), reg)? {
            ReduceOutcome::Reduced(r) => r,
            ReduceOutcome::Stalled(_) => return Err(RepError::Stalled),
        };
        cases.push((
            format!("{space}: sum of eigenvalue * projector = crossing ({c1},{c2})"),
            spectral_side.same_terms(&cross),
        ));
    }
    Ok(CheckReport { cases })
}

/// Crossing powers via the spectral form: sum of lambda^n P[lambda],
/// expressed in the registered basis. Mixed spaces need even n and return
/// endomorphisms of the (1,2) strand pair.
pub fn cr_power(
    eng: &mut Engine,
    reg: &BasisRegistry,
    ps: &Projectors,
    space: Space,
    n: i64,
) -> Result<WebSum, RepError> {
    match space {
        Space::End11 | Space::End22 => {
            let mut sum: Option<WebSum> = None;
            for (lambda, w) in spectral(space) {
                let p = ps.projector(eng, reg, space, w)?;
                let t = p.scale(&lambda.pow(n).expect("eigenvalue power"));
                sum = Some(match sum {
                    None => t,
                    Some(s) => s.add(&t),
                });
            }
            Ok(expand_in_basis(eng, &sum.unwrap(), reg)?)
        }
        Space::Hom12 | Space::Hom21 => {
            if n % 2 != 0 {
                return Err(RepError::OddMixedPower(n));
            }
            let (a, b) = if space == Space::Hom12 {
                (Space::Hom12, Space::Hom21)
            } else {
                (Space::Hom21, Space::Hom12)
            };
            let mut sum: Option<WebSum> = None;
            for (lambda, w) in spectral(space) {
                let pa = ps.projector(eng, reg, a, w)?;
                let pb = ps.projector(eng, reg, b, w)?;
                let e = compose(eng, reg, &pa, &pb)?;
                let t = e.scale(&lambda.pow(n).expect("eigenvalue power"));
                sum = Some(match sum {
                    None => t,
                    Some(s) => s.add(&t),
                });
            }
            Ok(sum.unwrap())
        }
    }
}

/// Trace closure of a two-strand tangle element.
pub fn trace(eng: &mut Engine, x: &WebSum) -> Result<RatFunc, RepError> {
    let closed = trace_close(eng, x, 2).map_err(|e| match e {
        crate::braid::BraidError::Skein(s) => RepError::Skein(s),
        crate::braid::BraidError::Web(w) => RepError::Web(w),
        other => panic!("trace: {other}"),
    })?;
    Ok(eng.evaluate_closed(&closed)?)
}

/// The doubled-strand crossing with the 2w1 projector inserted on one cable:
/// the four-term combination and its full expansion.
pub struct CabledCrossing {
    /// (inserted-web name, coefficient, composite) in display order.
    pub terms: Vec<(&'static str, RatFunc, WebSum)>,
    pub total: WebSum,
}

/// Build the 2-cabled positive crossing on four single strands.
pub fn doubled_crossing(eng: &mut Engine) -> Result<WebSum, RepError> {
    use crate::braid::act;
    let s = Label::Single;
    let mut cur = WebSum::from_web(&diagrams::tangle_id(&[s, s, s, s]));
    for pos in [1usize, 0, 2, 1] {
        cur = act(eng, &cur, pos, 1).map_err(|e| match e {
            crate::braid::BraidError::Skein(er) => RepError::Skein(er),
            crate::braid::BraidError::Web(w) => RepError::Web(w),
            other => panic!("cabling: {other}"),
        })?;
    }
    Ok(cur)
}

pub fn cabled_crossing_2w1(
    eng: &mut Engine,
    _reg: &BasisRegistry,
    ps: &Projectors,
) -> Result<CabledCrossing, RepError> {
    let _ = ps;
    let cc = doubled_crossing(eng)?;
    let id2 = diagrams::tangle_id(&[Label::Single, Label::Single]);
    // display order and coefficients of the inserted projector components
    let inserted: Vec<(&'static str, &'static str, Web)> = vec![
        ("doubled crossing", "1", diagrams::named::w11_id()),
        ("cup-cap", "-[4][6]/([2][7][12])", diagrams::named::w11_arcs()),
        ("single edge", "[4]/([3][8])", diagrams::named::w11_tate()),
        ("double edge", "1/([2][3])", diagrams::named::w11_rung()),
    ];
    let mut terms = Vec::new();
    let mut total: Option<WebSum> = None;
    for (name, coeff, w) in inserted {
        let lower = WebSum::from_web(&diagrams::hcat(&w, 2, 2, &id2));
        let composite = eng.simplify_open(&cc.glue(&lower, 4)?)?;
        let c = crate::qalg::rf(coeff);
        let scaled = composite.scale(&c);
        total = Some(match total {
            None => scaled.clone(),
            Some(t) => t.add(&scaled),
        });
        terms.push((name, c, composite));
    }
    Ok(CabledCrossing { terms, total: total.unwrap() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::context;
    use crate::qalg::{rf, Rat};
    use num::One;

    #[test]
    fn ambiguity_resolves_to_one_reading() {
        let (mut e, reg) = context();
        let ps = Projectors::resolve(&mut e, &reg).unwrap();
        // record which reading wins; the other must fail idempotency
        let loser = match ps.reading() {
            TwoW2Reading::QuantumSeven => TwoW2Reading::IntegerSeven,
            TwoW2Reading::IntegerSeven => TwoW2Reading::QuantumSeven,
        };
        let p = tables::projector_sum(Space::End22, Weight::TwoW2, loser).unwrap();
        let pp = compose(&mut e, &reg, &p, &p).unwrap();
        assert!(!equal(&mut e, &pp, &p, &reg).unwrap());
    }

    #[test]
    fn end11_idempotents_and_completeness() {
        let (mut e, reg) = context();
        let ps = Projectors::resolve(&mut e, &reg).unwrap();
        let p0 = ps.projector(&mut e, &reg, Space::End11, Weight::Triv).unwrap();
        let sq = compose(&mut e, &reg, &p0, &p0).unwrap();
        assert!(equal(&mut e, &sq, &p0, &reg).unwrap());
        let p1 = ps.projector(&mut e, &reg, Space::End11, Weight::W1).unwrap();
        let z = compose(&mut e, &reg, &p1, &p0).unwrap();
        assert!(z.is_zero());
        let mut total = WebSum::zero(p0.coloring().clone());
        for w in weights_of(Space::End11) {
            total = total.add(&ps.projector(&mut e, &reg, Space::End11, *w).unwrap());
        }
        assert!(equal(&mut e, &total, &Projectors::identity(Space::End11).unwrap(), &reg).unwrap());
    }

    #[test]
    fn spectral_matches_crossings() {
        let (mut e, reg) = context();
        let ps = Projectors::resolve(&mut e, &reg).unwrap();
        let rep = verify_spectral_vs_crossing(&mut e, &reg, &ps).unwrap();
        for (name, ok) in &rep.cases {
            assert!(ok, "{name}");
        }
    }

    #[test]
    fn quantum_dimensions_at_one() {
        let (mut e, reg) = context();
        let ps = Projectors::resolve(&mut e, &reg).unwrap();
        let one = Rat::one();
        let expect11 = [
            (Weight::TwoW1, 27),
            (Weight::W1, 7),
            (Weight::W2, 14),
            (Weight::Triv, 1),
        ];
        for (w, d) in expect11 {
            let p = ps.projector(&mut e, &reg, Space::End11, w).unwrap();
            let t = trace(&mut e, &p).unwrap();
            assert_eq!(t.eval_at(&one).unwrap(), Rat::from_integer(d.into()), "{w}");
        }
        let expect22 = [
            (Weight::TwoW2, 77),
            (Weight::ThreeW1, 77),
            (Weight::TwoW1, 27),
            (Weight::W2, 14),
            (Weight::Triv, 1),
        ];
        for (w, d) in expect22 {
            let p = ps.projector(&mut e, &reg, Space::End22, w).unwrap();
            let t = trace(&mut e, &p).unwrap();
            assert_eq!(t.eval_at(&one).unwrap(), Rat::from_integer(d.into()), "{w}");
        }
    }

    #[test]
    fn cr_power_matches_crossings_and_composes() {
        let (mut e, reg) = context();
        let ps = Projectors::resolve(&mut e, &reg).unwrap();
        let c1 = cr_power(&mut e, &reg, &ps, Space::End11, 1).unwrap();
        let ReduceOutcome::Reduced(cross) =
            e.reduce_to_basis(&crossing(1, 1, 1), &reg).unwrap()
        else {
            panic!()
        };
        assert!(c1.same_terms(&cross));
        let cm1 = cr_power(&mut e, &reg, &ps, Space::End11, -1).unwrap();
        let ReduceOutcome::Reduced(crossm) =
            e.reduce_to_basis(&crossing(1, 1, -1), &reg).unwrap()
        else {
            panic!()
        };
        assert!(cm1.same_terms(&crossm));
        // additivity of powers
        let a = cr_power(&mut e, &reg, &ps, Space::End11, 2).unwrap();
        let b = cr_power(&mut e, &reg, &ps, Space::End11, 3).unwrap();
        let ab = compose(&mut e, &reg, &a, &b).unwrap();
        let c5 = cr_power(&mut e, &reg, &ps, Space::End11, 5).unwrap();
        assert!(equal(&mut e, &ab, &c5, &reg).unwrap());
        // zeroth power is the identity
        let c0 = cr_power(&mut e, &reg, &ps, Space::End11, 0).unwrap();
        assert!(c0.same_terms(&Projectors::identity(Space::End11).unwrap()));
        assert!(cr_power(&mut e, &reg, &ps, Space::Hom12, 1).is_err());
    }

    #[test]
    fn cabled_crossing_absorbs_projector() {
        let (mut e, reg) = context();
        let ps = Projectors::resolve(&mut e, &reg).unwrap();
        let cabled = cabled_crossing_2w1(&mut e, &reg, &ps).unwrap();
        assert_eq!(cabled.terms[0].1, rf("1"));
        assert_eq!(cabled.terms[1].1, rf("-[4][6]/([2][7][12])"));
        // composing with the projector on the emerging cable fixes the sum
        let id2 = diagrams::tangle_id(&[Label::Single, Label::Single]);
        let p = ps.projector(&mut e, &reg, Space::End11, Weight::TwoW1).unwrap();
        let mut upper: Option<WebSum> = None;
        for (w, c) in p.iter() {
            let h = WebSum::term(&diagrams::hcat(&id2, 2, 2, w), c.clone());
            upper = Some(match upper {
                None => h,
                Some(u) => u.add(&h),
            });
        }
        let lhs = e.simplify_open(&upper.unwrap().glue(&cabled.total, 4).unwrap()).unwrap();
        let rhs = &cabled.total;
        assert!(lhs.same_terms(rhs), "absorption failed");
    }
}
