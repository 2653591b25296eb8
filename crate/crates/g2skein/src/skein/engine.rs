//! The reduction engine: evaluates closed webs to scalars and reduces open
//! webs toward registered bases.

use std::collections::HashMap;

use crate::qalg::RatFunc;
use crate::web::{
    canonical_key, canonicalize, BasisRegistry, End, Label, VertexKind, Web, WebSum,
};

use super::rewrite::{splice_replace, Site};
use super::rules::{RewriteRule, RuleBody};
use super::SkeinError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Highest-priority rule, first site in canonical order.
    First,
    /// Among all reducing matches, the last in canonical order.
    Last,
}

#[derive(Debug, Clone)]
pub struct EngineConfig {
    pub step_cap: u64,
    pub strategy: Strategy,
}

impl Default for EngineConfig {
    fn default() -> Self {
        let step_cap = std::env::var("G2SKEIN_TERM_CAP")
            .ok()
            .and_then(|s| s.parse().ok())
            .unwrap_or(2_000_000);
        EngineConfig { step_cap, strategy: Strategy::First }
    }
}

pub struct Engine {
    rules: Vec<RewriteRule>,
    cfg: EngineConfig,
    memo: HashMap<Vec<u8>, RatFunc>,
    pub(crate) gram_cache: HashMap<crate::web::Coloring, Vec<Vec<RatFunc>>>,
    in_progress: std::collections::HashSet<Vec<u8>>,
    steps: u64,
}

/// One applicable rewrite.
struct Application<'a> {
    rule: &'a RewriteRule,
    site: Site,
    offset: usize,
}

struct SiteIndex {
    faces: Vec<Site>,
    dedges: Vec<Site>,
    verts: Vec<Site>,
}

impl Engine {
    pub fn new(rules: Vec<RewriteRule>, cfg: EngineConfig) -> Engine {
        let mut rules = rules;
        rules.sort_by_key(|r| r.priority);
        Engine {
            rules,
            cfg,
            memo: HashMap::new(),
            gram_cache: HashMap::new(),
            in_progress: std::collections::HashSet::new(),
            steps: 0,
        }
    }

    pub fn with_table(rules: Vec<RewriteRule>) -> Engine {
        Engine::new(rules, EngineConfig::default())
    }

    fn bump(&mut self) -> Result<(), SkeinError> {
        self.steps += 1;
        if self.steps > self.cfg.step_cap {
            return Err(SkeinError::StepCapExceeded(self.cfg.step_cap));
        }
        Ok(())
    }

    fn loop_value(&self, label: Label) -> Option<&RatFunc> {
        self.rules.iter().find_map(|r| match &r.body {
            RuleBody::FreeLoop { label: l, value, .. } if *l == label => Some(value),
            _ => None,
        })
    }

    /// Candidate sites of each kind, computed once per web.
    fn collect_sites(&self, w: &Web) -> SiteIndex {
        let mut faces = Vec::new();
        for orbit in w.face_orbits() {
            if let Some(site) = Site::from_face(w, &orbit) {
                faces.push(site);
            }
        }
        let mut dedges = Vec::new();
        let mut verts = Vec::new();
        for (x, y) in w.edges() {
            if w.end_label(x) == Label::Double {
                if let Some(site) = Site::from_double_edge(w, x, y) {
                    dedges.push(site);
                }
            }
        }
        for v in 0..w.num_vertices() as u32 {
            if w.vertex_kind(v) == VertexKind::V222 {
                verts.push(Site::from_vertex(w, v));
            }
        }
        SiteIndex { faces, dedges, verts }
    }

    /// Sites matched against one rule's pattern.
    fn rule_matches<'a>(
        &'a self,
        sites: &SiteIndex,
        rule: &'a RewriteRule,
    ) -> Vec<Application<'a>> {
        let RuleBody::Local { pattern, .. } = &rule.body else {
            return Vec::new();
        };
        let pool = match pattern.kind {
            super::rewrite::SiteKind::Face => &sites.faces,
            super::rewrite::SiteKind::DoubleEdge => &sites.dedges,
            super::rewrite::SiteKind::Vertex => &sites.verts,
        };
        let mut out = Vec::new();
        for site in pool {
            for offset in site.match_offsets(pattern) {
                out.push(Application { rule, site: site.clone(), offset });
            }
        }
        out
    }

    /// Apply one application; returns the rewritten terms.
    fn apply(&self, w: &Web, app: &Application) -> Result<Vec<(Web, RatFunc)>, SkeinError> {
        let RuleBody::Local { leg_bnd, rhs, .. } = &app.rule.body else {
            unreachable!("apply on non-local rule");
        };
        let n = app.site.legs.len();
        let leg_map: Vec<u32> = (0..n)
            .map(|i| leg_bnd[(i + n - app.offset) % n])
            .collect();
        let mut out = Vec::with_capacity(rhs.len());
        for (rw, c) in rhs {
            out.push((splice_replace(w, &app.site, rw, &leg_map)?, c.clone()));
        }
        Ok(out)
    }

    /// Pick a reducing application per the configured strategy.
    fn choose_reducing<'a>(&'a self, w: &Web, eval_mode: bool) -> Option<Application<'a>> {
        let sites = self.collect_sites(w);
        let mut picked: Option<Application> = None;
        for rule in &self.rules {
            if !rule.reducing || (eval_mode && !rule.eval_auto) {
                continue;
            }
            let mut apps = self.rule_matches(&sites, rule);
            if apps.is_empty() {
                continue;
            }
            match self.cfg.strategy {
                Strategy::First => return apps.into_iter().next(),
                Strategy::Last => picked = apps.pop(),
            }
        }
        picked
    }

    /// Exact scalar of a closed web.
    pub fn eval_web(&mut self, w: &Web) -> Result<RatFunc, SkeinError> {
        if !w.is_closed() {
            return Err(SkeinError::NotClosed);
        }
        let w = canonicalize(w);
        let key = canonical_key(&w);
        if let Some(v) = self.memo.get(&key) {
            return Ok(v.clone());
        }
        if !self.in_progress.insert(key.clone()) {
            return Err(SkeinError::Cycle(Box::new(w.clone())));
        }
        self.bump()?;
        let value = self.eval_web_inner(&w);
        self.in_progress.remove(&key);
        let value = value?;
        self.memo.insert(key, value.clone());
        Ok(value)
    }

    fn trace_step(&self, what: &str, w: &Web) {
        if std::env::var("G2SKEIN_TRACE").is_ok() {
            let (l1, l2) = w.free_loops();
            eprintln!(
                "  [{}] v={} e={} v222={} dbl={} loops=({},{})",
                what,
                w.num_vertices(),
                w.num_edges(),
                w.v222_count(),
                w.double_edge_count(),
                l1,
                l2
            );
        }
    }

    fn eval_web_inner(&mut self, w: &Web) -> Result<RatFunc, SkeinError> {
        // strip free loops the table knows how to price
        let (l1, l2) = w.free_loops();
        if l1 > 0 || l2 > 0 {
            let mut scalar = RatFunc::one();
            let mut keep2 = l2;
            if l1 > 0 {
                let v = self
                    .loop_value(Label::Single)
                    .cloned()
                    .ok_or_else(|| SkeinError::Stuck(Box::new(w.clone())))?;
                scalar = &scalar * &v.pow(l1 as i64).expect("loop power");
            }
            if l2 > 0 {
                if let Some(v) = self.loop_value(Label::Double).cloned() {
                    scalar = &scalar * &v.pow(l2 as i64).expect("loop power");
                    keep2 = 0;
                }
            }
            if l1 > 0 || keep2 != l2 {
                let rest = w.clone_without_loops(0, keep2);
                return Ok(&scalar * &self.eval_web(&rest)?);
            }
            // free double loops with no loop rule: expand one into a bubble
            let (coeff, expanded) = self.expand_double_loop(w)?;
            return Ok(&coeff * &self.eval_web(&expanded)?);
        }
        if w.num_vertices() == 0 && w.num_edges() == 0 {
            return Ok(RatFunc::one());
        }
        if let Some(app) = self.choose_reducing(w, true) {
            self.trace_step(app.rule.name, w);
            let terms = self.apply(w, &app)?;
            let mut acc = RatFunc::zero();
            for (tw, c) in terms {
                if c.is_zero() {
                    continue;
                }
                acc = &acc + &(&c * &self.eval_web(&tw)?);
            }
            return Ok(acc);
        }
        // expansions: split a triple-double vertex first, else bubble an edge
        if let Some(app) = self.choose_expanding(w) {
            self.trace_step(app.rule.name, w);
            let terms = self.apply(w, &app)?;
            let mut acc = RatFunc::zero();
            for (tw, c) in terms {
                acc = &acc + &(&c * &self.eval_web(&tw)?);
            }
            return Ok(acc);
        }
        if let Some((coeff, expanded)) = self.try_bubble_edge(w)? {
            return Ok(&coeff * &self.eval_web(&expanded)?);
        }
        Err(SkeinError::Stuck(Box::new(w.clone())))
    }

    fn choose_expanding<'a>(&'a self, w: &Web) -> Option<Application<'a>> {
        let sites = self.collect_sites(w);
        for rule in &self.rules {
            if rule.reducing {
                continue;
            }
            if let RuleBody::Local { .. } = rule.body {
                if let Some(app) = self.rule_matches(&sites, rule).into_iter().next() {
                    return Some(app);
                }
            }
        }
        None
    }

    fn bubble_rule(&self) -> Option<(&RatFunc, &Web)> {
        self.rules.iter().find_map(|r| match &r.body {
            RuleBody::DoubleStrandSplit { coeff, bubble, .. } => Some((coeff, bubble)),
            _ => None,
        })
    }

    /// Replace one free double loop by the bubble with its ends joined.
    fn expand_double_loop(&self, w: &Web) -> Result<(RatFunc, Web), SkeinError> {
        let (coeff, _) = self
            .bubble_rule()
            .ok_or_else(|| SkeinError::Stuck(Box::new(w.clone())))?;
        let (l1, l2) = w.free_loops();
        debug_assert!(l2 > 0);
        let mut out = w.clone_without_loops(l1, l2 - 1);
        out.push_bubble_theta();
        Ok((coeff.clone(), out))
    }

    /// Insert the bubble into some interior double edge.
    fn try_bubble_edge(&self, w: &Web) -> Result<Option<(RatFunc, Web)>, SkeinError> {
        let Some((coeff, _)) = self.bubble_rule() else { return Ok(None) };
        let Some((x, y)) = w
            .edges()
            .find(|(x, _)| w.end_label(*x) == Label::Double)
        else {
            return Ok(None);
        };
        Ok(Some((coeff.clone(), w.with_bubble_on_edge(x, y))))
    }

    /// Sum of scalars over a closed WebSum.
    pub fn evaluate_closed(&mut self, x: &WebSum) -> Result<RatFunc, SkeinError> {
        if !x.coloring().is_empty() {
            return Err(SkeinError::NotClosed);
        }
        let mut acc = RatFunc::zero();
        for (w, c) in x.iter() {
            acc = &acc + &(c * &self.eval_web(w)?);
        }
        Ok(acc)
    }

    /// Apply reducing rules everywhere on open terms (interior sites only;
    /// legs are untouched), extracting closed-loop scalars. Terminates since
    /// every step shrinks the weighted size.
    pub fn simplify_open(&mut self, x: &WebSum) -> Result<WebSum, SkeinError> {
        self.simplify_mode(x, false)
    }

    fn simplify_mode(&mut self, x: &WebSum, eval_mode: bool) -> Result<WebSum, SkeinError> {
        let mut acc = WebSum::zero(x.coloring().clone());
        for (w, c) in x.iter() {
            self.simplify_term(w, c.clone(), eval_mode, &mut acc)?;
        }
        Ok(acc)
    }

    fn simplify_term(
        &mut self,
        w: &Web,
        c: RatFunc,
        eval_mode: bool,
        acc: &mut WebSum,
    ) -> Result<(), SkeinError> {
        self.bump()?;
        if c.is_zero() {
            return Ok(());
        }
        let w = canonicalize(w);
        // price out closed circles where the table has a loop value
        let (l1, l2) = w.free_loops();
        let strip1 = l1 > 0 && self.loop_value(Label::Single).is_some();
        let strip2 = l2 > 0 && self.loop_value(Label::Double).is_some();
        if strip1 || strip2 {
            let mut scalar = c.clone();
            if strip1 {
                let v = self.loop_value(Label::Single).unwrap().clone();
                scalar = &scalar * &v.pow(l1 as i64).expect("loop power");
            }
            if strip2 {
                let v = self.loop_value(Label::Double).unwrap().clone();
                scalar = &scalar * &v.pow(l2 as i64).expect("loop power");
            }
            let rest = w.clone_without_loops(
                if strip1 { 0 } else { l1 },
                if strip2 { 0 } else { l2 },
            );
            return self.simplify_term(&rest, scalar, eval_mode, acc);
        }
        if let Some(app) = self.choose_reducing(&w, eval_mode) {
            let terms = self.apply(&w, &app)?;
            for (tw, tc) in terms {
                self.simplify_term(&tw, &c * &tc, eval_mode, acc)?;
            }
            return Ok(());
        }
        acc.add_term(&w, c);
        Ok(())
    }

    /// Normal form of an open element under reducing rules plus interior
    /// vertex expansion: whenever a term is irreducible but still contains a
    /// triple-double vertex, the vertex is split and reduction continues.
    /// Terminates because the expansion strictly decreases the vertex count
    /// of that kind and no rule in this table recreates it.
    pub fn normalize_open(&mut self, x: &WebSum) -> Result<WebSum, SkeinError> {
        // eval-mode reducing here: the rule that rebuilds a triple-double
        // vertex must not undo the expansions
        let mut cur = self.simplify_mode(x, true)?;
        loop {
            let mut again = WebSum::zero(cur.coloring().clone());
            let mut changed = false;
            for (w, c) in cur.iter() {
                if w.v222_count() > 0 {
                    if let Some(app) = self.choose_expanding(w) {
                        changed = true;
                        for (tw, tc) in self.apply(w, &app)? {
                            again.add_term(&tw, &(c * &tc) * &RatFunc::one());
                        }
                        continue;
                    }
                }
                again.add_term(w, c.clone());
            }
            cur = self.simplify_mode(&again, true)?;
            if !changed {
                return Ok(cur);
            }
        }
    }

    /// Reduce toward a registered basis; Stalled carries an irreducible
    /// non-basis term.
    pub fn reduce_to_basis(
        &mut self,
        x: &WebSum,
        reg: &BasisRegistry,
    ) -> Result<ReduceOutcome, SkeinError> {
        let coloring = x.coloring().clone();
        if reg.lookup(&coloring).is_none() {
            return Err(SkeinError::UnregisteredColoring(crate::web::coloring_string(&coloring)));
        }
        let reduced = self.simplify_open(x)?;
        for (w, _) in reduced.iter() {
            if !reg.contains_web(&coloring, &canonical_key(w)) {
                return Ok(ReduceOutcome::Stalled(Box::new(w.clone())));
            }
        }
        Ok(ReduceOutcome::Reduced(reduced))
    }

    pub fn steps_taken(&self) -> u64 {
        self.steps
    }

    /// The terms the evaluator would branch into on this closed web, with
    /// the rule name; used by diagnostics.
    pub fn debug_children(&mut self, w: &Web) -> Option<(String, Vec<(Web, RatFunc)>)> {
        let w = canonicalize(w);
        let (l1, l2) = w.free_loops();
        if l1 > 0 || l2 > 0 {
            return None;
        }
        if let Some(app) = self.choose_reducing(&w, true) {
            let name = app.rule.name.to_string();
            let terms = self.apply(&w, &app).ok()?;
            return Some((name, terms));
        }
        if let Some(app) = self.choose_expanding(&w) {
            let name = app.rule.name.to_string();
            let terms = self.apply(&w, &app).ok()?;
            return Some((name, terms));
        }
        None
    }
}

#[derive(Debug, Clone)]
pub enum ReduceOutcome {
    Reduced(WebSum),
    Stalled(Box<Web>),
}

#[cfg(test)]
mod tests {
    use super::super::diagrams::{self, named};
    use super::super::{engine, engine_defining, standard_registry};
    use super::*;
    use crate::qalg::{rf, Rat};
    use crate::web::{arc, circle, glue, tensor, Label::Double as D, Label::Single as S};
    use num::One;

    #[test]
    fn loop_values() {
        let mut e = engine();
        let l1 = e.eval_web(&circle(S)).unwrap();
        assert_eq!(l1, rf("[2][7][12]/([4][6])"));
        assert_eq!(l1.eval_at(&Rat::one()).unwrap(), Rat::from_integer(7.into()));
        let l2 = e.eval_web(&circle(D)).unwrap();
        assert_eq!(l2, rf("[7][8][15]/([3][4][5])"));
        assert_eq!(l2.eval_at(&Rat::one()).unwrap(), Rat::from_integer(14.into()));
    }

    #[test]
    fn double_loop_derivable_from_defining_rules() {
        let mut e = engine_defining();
        let l2 = e.eval_web(&circle(D)).unwrap();
        assert_eq!(l2, rf("[7][8][15]/([3][4][5])"));
    }

    #[test]
    fn disjoint_union_multiplies() {
        let mut e = engine();
        let w = tensor(&circle(S), &circle(D));
        let v = e.eval_web(&w).unwrap();
        assert_eq!(v, &rf("[2][7][12]/([4][6])") * &rf("[7][8][15]/([3][4][5])"));
    }

    #[test]
    fn closed_monogon_vanishes() {
        // single monogon with its stem capped off by a loop back: glue the
        // monogon web's one leg... a 1-point web cannot close; instead close
        // the vertex web with a cap and a loop through the stem
        let mono = diagrams::monogon(S, S); // coloring (1)
        let closed = glue(&mono, &diagrams::monogon(S, S), 1).unwrap();
        let mut e = engine();
        assert!(e.eval_web(&closed).unwrap().is_zero());
    }

    #[test]
    fn theta_is_digon_times_loop() {
        // close the single digon: theta = -[3][8]/[4] * loop
        let digon = diagrams::digon(S, (S, S), S); // coloring (1,1)
        let theta = glue(&digon, &arc(S), 2).unwrap();
        let mut e = engine();
        let v = e.eval_web(&theta).unwrap();
        assert_eq!(v, &rf("-[3][8]/[4]") * &rf("[2][7][12]/([4][6])"));
    }

    #[test]
    fn rung_reduces_to_four_basis_terms() {
        let reg = standard_registry();
        let mut e = engine();
        let x = WebSum::from_web(&named::w11_rung());
        let ReduceOutcome::Reduced(r) = e.reduce_to_basis(&x, &reg).unwrap() else {
            panic!("stalled");
        };
        assert_eq!(r.num_terms(), 4);
        assert_eq!(r.coeff_of(&named::w11_id()), rf("-[3]/[2]"));
        assert_eq!(r.coeff_of(&named::w11_arcs()), rf("[3][4][6]/([2]^2[12])"));
        assert_eq!(r.coeff_of(&named::w11_tate()), rf("1/[2]"));
        assert_eq!(r.coeff_of(&named::w11_yoko()), rf("[3]/[2]"));
    }

    #[test]
    fn stacked_h_contracts_by_digon() {
        // vertical H composed with itself: digon in the middle
        let t = named::w11_tate();
        let stacked = diagrams::stack(&t, &t, 2);
        let reg = standard_registry();
        let mut e = engine();
        let ReduceOutcome::Reduced(r) =
            e.reduce_to_basis(&WebSum::from_web(&stacked), &reg).unwrap()
        else {
            panic!("stalled");
        };
        assert_eq!(r.num_terms(), 1);
        assert_eq!(r.coeff_of(&named::w11_tate()), rf("-[3][8]/[4]"));
    }

    #[test]
    fn basis_webs_are_irreducible() {
        let reg = standard_registry();
        let mut e = engine();
        for w in [
            named::w11_id(),
            named::w11_arcs(),
            named::w11_tate(),
            named::w11_yoko(),
            named::w22_tate(),
            named::w22_square(),
            named::w21_square(),
        ] {
            let ReduceOutcome::Reduced(r) =
                e.reduce_to_basis(&WebSum::from_web(&w), &reg).unwrap()
            else {
                panic!("stalled");
            };
            assert_eq!(r.num_terms(), 1);
            assert!(r.coeff_of(&w).is_one());
        }
    }

    #[test]
    fn mixed_digon_closure_vanishes() {
        // digon with a single leg and a double leg, closed through a mixed
        // path: pair it against its mirror
        let dg = diagrams::digon(D, (S, S), S); // coloring (1, 2)
        let m = crate::web::mirror(&dg); // coloring (2, 1)
        let closed = glue(&dg, &m, 2).unwrap();
        let mut e = engine();
        assert!(e.eval_web(&closed).unwrap().is_zero());
        let mut ed = engine_defining();
        assert!(ed.eval_web(&closed).unwrap().is_zero());
    }

    #[test]
    fn evaluation_deterministic_across_strategies() {
        let w = {
            // a small closed web: theta tensor double loop
            let digon = diagrams::digon(S, (S, S), S);
            let theta = glue(&digon, &arc(S), 2).unwrap();
            tensor(&theta, &circle(D))
        };
        let mut e1 = Engine::new(
            super::super::rule_table(),
            EngineConfig { strategy: Strategy::First, ..Default::default() },
        );
        let mut e2 = Engine::new(
            super::super::rule_table(),
            EngineConfig { strategy: Strategy::Last, ..Default::default() },
        );
        assert_eq!(e1.eval_web(&w).unwrap(), e2.eval_web(&w).unwrap());
    }
}

impl Web {
    /// Copy with the free-loop counters replaced.
    pub(crate) fn clone_without_loops(&self, l1: u32, l2: u32) -> Web {
        let mut w = self.clone();
        w.set_loops(l1, l2);
        w
    }

    /// Add two mixed vertices joined by a double edge and a two-edge digon
    /// (a bubble with its double ends tied together).
    pub(crate) fn push_bubble_theta(&mut self) {
        let a = self.push_vertex(VertexKind::V211);
        let b = self.push_vertex(VertexKind::V211);
        self.link(End::P { v: a, p: 0 }, End::P { v: b, p: 0 });
        self.link(End::P { v: a, p: 1 }, End::P { v: b, p: 2 });
        self.link(End::P { v: a, p: 2 }, End::P { v: b, p: 1 });
    }

    /// Insert the bubble into the double edge (x, y).
    pub(crate) fn with_bubble_on_edge(&self, x: End, y: End) -> Web {
        let mut w = self.clone();
        w.unlink(x, y);
        let a = w.push_vertex(VertexKind::V211);
        let b = w.push_vertex(VertexKind::V211);
        w.link(x, End::P { v: a, p: 0 });
        w.link(y, End::P { v: b, p: 0 });
        w.link(End::P { v: a, p: 1 }, End::P { v: b, p: 2 });
        w.link(End::P { v: a, p: 2 }, End::P { v: b, p: 1 });
        debug_assert!(w.validate().is_ok());
        w
    }
}
