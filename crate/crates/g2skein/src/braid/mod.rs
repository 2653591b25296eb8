//! Crossing expansions, the braid action on web spaces, trace closures,
//! writhe normalization and the link-invariant pipeline.

use crate::qalg::{rf, RatFunc};
use crate::skein::{diagrams, engine, pair, standard_registry, Engine, SkeinError};
use crate::web::{
    coloring_string, mirror, BasisRegistry, Coloring, Label, Web, WebError, WebSum,
};

#[derive(Debug, thiserror::Error)]
pub enum BraidError {
    #[error("skein: {0}")]
    Skein(#[from] SkeinError),
    #[error("web: {0}")]
    Web(#[from] WebError),
    #[error("braid letter index {0} out of range for {1} strands")]
    LetterOutOfRange(usize, usize),
    #[error("colors must be 1 or 2")]
    BadColor,
    #[error("torus reference with mixed colors needs an even crossing count, got {0}")]
    OddMixed(i64),
    #[error("trace closure needs matching strand colors at position {0}")]
    ClosureMismatch(usize),
    #[error("invariant is not a Laurent polynomial: {0}")]
    NotPolynomial(RatFunc),
    #[error("parse: {0}")]
    Parse(String),
}

/// A braid word: strand count, per-strand colors at the bottom, and signed
/// generator letters (1-based index, sign).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidWord {
    pub strands: usize,
    pub colors: Vec<u8>,
    pub letters: Vec<(usize, i8)>,
}

impl BraidWord {
    pub fn new(colors: Vec<u8>, letters: Vec<(usize, i8)>) -> Result<BraidWord, BraidError> {
        let strands = colors.len();
        if strands == 0 || colors.iter().any(|c| *c != 1 && *c != 2) {
            return Err(BraidError::BadColor);
        }
        for (i, _) in &letters {
            if *i < 1 || *i >= strands {
                return Err(BraidError::LetterOutOfRange(*i, strands));
            }
        }
        Ok(BraidWord { strands, colors, letters })
    }

    /// Whitespace-separated signed integers, e.g. "1 1 1" or "-2 1".
    pub fn parse(word: &str, colors: &[u8]) -> Result<BraidWord, BraidError> {
        let mut letters = Vec::new();
        for tok in word.split_whitespace() {
            let v: i64 = tok
                .parse()
                .map_err(|_| BraidError::Parse(format!("bad letter {tok:?}")))?;
            if v == 0 {
                return Err(BraidError::Parse("letter 0 is not a generator".into()));
            }
            letters.push((v.unsigned_abs() as usize, if v > 0 { 1 } else { -1 }));
        }
        BraidWord::new(colors.to_vec(), letters)
    }
}

/// Signed same-color crossing counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct WritheCounts {
    pub w11: i64,
    pub w22: i64,
}

pub fn writhe(b: &BraidWord) -> WritheCounts {
    let mut cur = b.colors.clone();
    let mut out = WritheCounts::default();
    for (i, sign) in &b.letters {
        let (a, c) = (cur[i - 1], cur[*i]);
        if a == 1 && c == 1 {
            out.w11 += *sign as i64;
        } else if a == 2 && c == 2 {
            out.w22 += *sign as i64;
        }
        cur.swap(i - 1, *i);
    }
    out
}

/// Crossing expansion: bottom colors (c1, c2), top (c2, c1). A negative
/// crossing carries the bar involution of the positive coefficients on the
/// same webs.
pub fn crossing(c1: u8, c2: u8, sign: i8) -> WebSum {
    use diagrams::named;
    let terms: Vec<(Web, RatFunc)> = match (c1, c2) {
        (1, 1) => vec![
            (named::w11_id(), rf("q^3/[2]")),
            (named::w11_arcs(), rf("q^-3/[2]")),
            (named::w11_tate(), rf("q^-1/[2]")),
            (named::w11_yoko(), rf("q/[2]")),
        ],
        (2, 2) => vec![
            (named::w22_id(), rf("(q^10-q^6-q^4)[4][6]/([2][12])")),
            (named::w22_arcs(), rf("(q^-10-q^-6-q^-4)[4][6]/([2][12])")),
            (named::w22_tate(), rf("q^-3[3][4]^2[6]^2/([2]^2[12]^2)")),
            (named::w22_yoko(), rf("q^3[3][4]^2[6]^2/([2]^2[12]^2)")),
            (named::w22_square(), rf("1/[3]")),
        ],
        (1, 2) => vec![
            (named::w12_yoko(), rf("q^3/[3]")),
            (named::w12_tate(), rf("q^-3/[3]")),
            (named::w12_square(), rf("1/([2][3])")),
        ],
        (2, 1) => vec![
            (named::w21_yoko(), rf("q^3/[3]")),
            (named::w21_tate(), rf("q^-3/[3]")),
            (named::w21_square(), rf("1/([2][3])")),
        ],
        _ => panic!("colors must be 1 or 2"),
    };
    let mut s = WebSum::zero(terms[0].0.coloring());
    for (w, c) in terms {
        s.add_term(&w, if sign >= 0 { c } else { c.bar() });
    }
    s
}

/// Act with one braid letter on a web-space element at boundary positions
/// (pos, pos+1), 0-based; colors are read off the element's coloring. Terms
/// are reduced after gluing; where the coloring has a registered basis the
/// result is expressed in it, bounding term growth by the space dimension.
pub fn act(eng: &mut Engine, x: &WebSum, pos: usize, sign: i8) -> Result<WebSum, BraidError> {
    act_in(eng, None, x, pos, sign)
}

pub fn act_in(
    eng: &mut Engine,
    reg: Option<&BasisRegistry>,
    x: &WebSum,
    pos: usize,
    sign: i8,
) -> Result<WebSum, BraidError> {
    let col = x.coloring();
    let n = col.len();
    assert!(pos + 1 < n, "positions out of range");
    let (c1, c2) = (col[pos].as_color(), col[pos + 1].as_color());
    let cross = crossing(c1, c2, sign).rotate(2);
    let shifted = x.rotate(pos as i64 + 2);
    let glued = shifted.glue(&cross, 2)?;
    let back = glued.rotate(-(pos as i64 + 2));
    let simplified = eng.simplify_open(&back)?;
    if let Some(reg) = reg {
        if reg.lookup(simplified.coloring()).is_some() {
            return Ok(crate::skein::expand_in_basis(eng, &simplified, reg)?);
        }
    }
    Ok(simplified)
}

/// Close a tangle with n strands per row by nested arcs joining top j to
/// bottom j, innermost first.
pub fn trace_close(eng: &mut Engine, x: &WebSum, n: usize) -> Result<WebSum, BraidError> {
    let mut cur = x.clone();
    for step in 0..n {
        let m = n - step; // strands remaining
        let col = cur.coloring();
        if col[m - 1] != col[m] {
            return Err(BraidError::ClosureMismatch(m - 1));
        }
        let l = col[m - 1];
        let arc = WebSum::from_web(&crate::web::arc(l));
        // positions m-1 (innermost top) and m (innermost bottom) are
        // adjacent; bring them to the tail and cap them
        let rotated = cur.rotate(m as i64 + 1);
        let glued = rotated.glue(&arc, 2)?;
        cur = glued.rotate(-(m as i64 - 1));
    }
    Ok(eng.simplify_open(&cur)?)
}

/// Expand all letters of a braid word and close the result.
pub fn close_trace(eng: &mut Engine, b: &BraidWord) -> Result<WebSum, BraidError> {
    close_trace_in(eng, None, b)
}

pub fn close_trace_in(
    eng: &mut Engine,
    reg: Option<&BasisRegistry>,
    b: &BraidWord,
) -> Result<WebSum, BraidError> {
    let labels: Coloring = b
        .colors
        .iter()
        .map(|c| Label::from_color(*c))
        .collect::<Result<_, _>>()?;
    let mut cur = WebSum::from_web(&diagrams::tangle_id(&labels));
    for (i, sign) in &b.letters {
        cur = act_in(eng, reg, &cur, i - 1, *sign)?;
    }
    trace_close(eng, &cur, b.strands)
}

/// The normalized link invariant of a colored braid closure.
pub fn invariant(eng: &mut Engine, b: &BraidWord) -> Result<RatFunc, BraidError> {
    invariant_in(eng, None, b)
}

pub fn invariant_in(
    eng: &mut Engine,
    reg: Option<&BasisRegistry>,
    b: &BraidWord,
) -> Result<RatFunc, BraidError> {
    let closed = close_trace_in(eng, reg, b)?;
    let value = eng.evaluate_closed(&closed)?;
    let w = writhe(b);
    let norm = RatFunc::qpow(-12 * w.w11 - 24 * w.w22);
    let out = &norm * &value;
    if !out.is_poly() {
        return Err(BraidError::NotPolynomial(out));
    }
    Ok(out)
}

/// Closed forms for the invariant of the two-strand torus link with n
/// crossings, per coloring.
pub fn torus_reference(n: i64, colors: (u8, u8)) -> Result<RatFunc, BraidError> {
    let q = RatFunc::qpow(1);
    let pw = |e: i64| q.pow(e).expect("power");
    let alt = |base: i64| {
        let p = pw(base * n);
        if n % 2 == 0 {
            p
        } else {
            -&p
        }
    };
    let val = match colors {
        (1, 1) => {
            let t1 = &pw(-10 * n) * &rf("[3][6][12][15]/([4][5][6])");
            let t2 = &alt(-12) * &rf("[7][8][15]/([3][4][5])");
            let t3 = &alt(-18) * &rf("[2][7][12]/([4][6])");
            let t4 = pw(-24 * n);
            &(&(&t1 + &t2) + &t3) + &t4
        }
        (2, 2) => {
            let t1 = &pw(-18 * n) * &rf("[10][11][12][21]/([3][4][5][6])");
            let t2 = &alt(-24) * &rf("[7][11][15][18]/([5][6][9])");
            let t3 = &pw(-34 * n) * &rf("[3][12][15]/([4][5])");
            let t4 = &alt(-36) * &rf("[7][8][15]/([3][4][5])");
            let t5 = pw(-48 * n);
            &(&(&(&t1 + &t2) + &t3) + &t4) + &t5
        }
        (1, 2) | (2, 1) => {
            if n % 2 != 0 {
                return Err(BraidError::OddMixed(n));
            }
            let t1 = &pw(3 * n) * &rf("[2][8][10][12][18]/([3][4][5][9])");
            let t2 = &pw(-4 * n) * &rf("[3][12][15]/([4][5])");
            let t3 = &alt(-12) * &rf("[2][7][12]/([4][6])");
            &(&t1 + &t2) + &t3
        }
        _ => return Err(BraidError::BadColor),
    };
    Ok(val)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseResult {
    Pass,
    Fail,
    Undecided,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub cases: Vec<(String, CaseResult)>,
}

impl SuiteReport {
    pub fn all_pass(&self) -> bool {
        self.cases.iter().all(|(_, r)| *r == CaseResult::Pass)
    }
    pub fn undecided(&self) -> usize {
        self.cases.iter().filter(|(_, r)| *r == CaseResult::Undecided).count()
    }
}

fn eq_case(eng: &mut Engine, reg: &BasisRegistry, x: &WebSum, y: &WebSum) -> CaseResult {
    match crate::skein::equal(eng, x, y, reg) {
        Ok(true) => CaseResult::Pass,
        Ok(false) => CaseResult::Fail,
        Err(SkeinError::Undecided) => CaseResult::Undecided,
        Err(_) => CaseResult::Fail,
    }
}

/// Verify the second and third Reidemeister moves on every registered
/// four-point basis, at every position.
pub fn reidemeister_suite(
    eng: &mut Engine,
    reg: &BasisRegistry,
) -> Result<SuiteReport, BraidError> {
    let mut cases = Vec::new();
    let colorings: Vec<Coloring> = reg.colorings().filter(|c| c.len() == 4).cloned().collect();
    for coloring in &colorings {
        let Some((_, webs)) = reg.lookup(coloring) else { continue };
        let webs = webs.to_vec();
        let cname = coloring_string(coloring);
        for pos in 0..3usize {
            let pair_name = format!(
                "R2 colors ({},{}) on {} at position {}",
                coloring[pos].as_color(),
                coloring[pos + 1].as_color(),
                cname,
                pos + 1
            );
            let mut result = CaseResult::Pass;
            for w in &webs {
                let x = WebSum::from_web(w);
                let up = act(eng, &x, pos, 1)?;
                let down = act(eng, &up, pos, -1)?;
                match eq_case(eng, reg, &down, &x) {
                    CaseResult::Pass => {}
                    r => {
                        result = r;
                        break;
                    }
                }
            }
            cases.push((pair_name, result));
        }
        for pos in 0..2usize {
            let triple = format!(
                "R3 colors ({},{},{}) on {}",
                coloring[pos].as_color(),
                coloring[pos + 1].as_color(),
                coloring[pos + 2].as_color(),
                cname
            );
            let mut result = CaseResult::Pass;
            for w in &webs {
                let x = WebSum::from_web(w);
                let aba = {
                    let a = act(eng, &x, pos, 1)?;
                    let b = act(eng, &a, pos + 1, 1)?;
                    act(eng, &b, pos, 1)?
                };
                let bab = {
                    let a = act(eng, &x, pos + 1, 1)?;
                    let b = act(eng, &a, pos, 1)?;
                    act(eng, &b, pos + 1, 1)?
                };
                match eq_case(eng, reg, &aba, &bab) {
                    CaseResult::Pass => {}
                    r => {
                        result = r;
                        break;
                    }
                }
            }
            cases.push((triple, result));
        }
    }
    Ok(SuiteReport { cases })
}

/// Pairing against the mirror of a fixed web.
pub fn pair_with_mirror(eng: &mut Engine, x: &WebSum, v: &Web) -> Result<RatFunc, BraidError> {
    Ok(pair(eng, x, &mirror(v))?)
}

/// Convenience: engine plus registry.
pub fn context() -> (Engine, BasisRegistry) {
    (engine(), standard_registry())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalg::Rat;
    use crate::web::Label::{Double as D, Single as S};
    use num::One;

    fn braid(word: &str, colors: &[u8]) -> BraidWord {
        BraidWord::parse(word, colors).unwrap()
    }

    #[test]
    fn writhe_counts() {
        assert_eq!(writhe(&braid("1 1 1", &[1, 1])), WritheCounts { w11: 3, w22: 0 });
        assert_eq!(writhe(&braid("1 1", &[1, 2])), WritheCounts { w11: 0, w22: 0 });
        assert_eq!(writhe(&braid("-1 -1", &[2, 2])), WritheCounts { w11: 0, w22: -2 });
    }

    #[test]
    fn unknot_values() {
        let (mut e, _) = context();
        let u1 = invariant(&mut e, &braid("", &[1])).unwrap();
        assert_eq!(u1, rf("[2][7][12]/([4][6])"));
        let u2 = invariant(&mut e, &braid("", &[2])).unwrap();
        assert_eq!(u2, rf("[7][8][15]/([3][4][5])"));
    }

    #[test]
    fn positive_kink_gives_q12() {
        let (mut e, _) = context();
        let closed = close_trace(&mut e, &braid("1", &[1, 1])).unwrap();
        let v = e.evaluate_closed(&closed).unwrap();
        assert_eq!(v, &rf("q^12") * &rf("[2][7][12]/([4][6])"));
        let closed = close_trace(&mut e, &braid("-1", &[1, 1])).unwrap();
        let v = e.evaluate_closed(&closed).unwrap();
        assert_eq!(v, &rf("q^-12") * &rf("[2][7][12]/([4][6])"));
    }

    #[test]
    fn double_kink_gives_q24() {
        let (mut e, _) = context();
        let closed = close_trace(&mut e, &braid("1", &[2, 2])).unwrap();
        let v = e.evaluate_closed(&closed).unwrap();
        assert_eq!(v, &rf("q^24") * &rf("[7][8][15]/([3][4][5])"));
    }

    #[test]
    fn stabilized_unknot_is_unknot() {
        let (mut e, _) = context();
        let v = invariant(&mut e, &braid("1", &[1, 1])).unwrap();
        assert_eq!(v, rf("[2][7][12]/([4][6])"));
    }

    #[test]
    fn braid_action_on_example_diagram() {
        // the tripod-plus-double-arc diagram: crossing its two adjacent
        // single legs multiplies it by -q^-6; the inverse crossing by -q^6
        let (mut e, _) = context();
        let w4 = diagrams::named::tripod_with_double_arc();
        let x = WebSum::from_web(&w4);
        let plus = act(&mut e, &x, 3, 1).unwrap();
        assert_eq!(plus.num_terms(), 1, "{plus:?}");
        assert_eq!(plus.coeff_of(&w4), rf("-q^-6"));
        let minus = act(&mut e, &x, 3, -1).unwrap();
        assert_eq!(minus.coeff_of(&w4), rf("-q^6"));
    }

    #[test]
    fn torus_reference_dimensions_at_one() {
        let one = Rat::one();
        let t = torus_reference(0, (1, 1)).unwrap();
        assert_eq!(t.eval_at(&one).unwrap(), Rat::from_integer(49.into()));
        let t = torus_reference(0, (2, 2)).unwrap();
        assert_eq!(t.eval_at(&one).unwrap(), Rat::from_integer(196.into()));
        let t = torus_reference(0, (1, 2)).unwrap();
        assert_eq!(t.eval_at(&one).unwrap(), Rat::from_integer(98.into()));
        assert!(torus_reference(1, (1, 2)).is_err());
    }

    #[test]
    fn trefoil_matches_reference() {
        let (mut e, _) = context();
        let v = invariant(&mut e, &braid("1 1 1", &[1, 1])).unwrap();
        assert_eq!(v, torus_reference(3, (1, 1)).unwrap());
    }

    #[test]
    fn crossing_negative_is_bar() {
        for (a, b) in [(1u8, 1u8), (1, 2), (2, 1), (2, 2)] {
            let p = crossing(a, b, 1);
            let m = crossing(a, b, -1);
            for (w, c) in p.iter() {
                assert_eq!(m.coeff_of(w), c.bar());
            }
        }
    }

    #[test]
    fn act_transposes_coloring() {
        let (mut e, _) = context();
        let x = WebSum::from_web(&diagrams::tangle_id(&[S, D]));
        assert_eq!(coloring_string(x.coloring()), "1221");
        let y = act(&mut e, &x, 0, 1).unwrap();
        assert_eq!(coloring_string(y.coloring()), "2121");
    }
}
