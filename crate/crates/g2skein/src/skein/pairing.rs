//! Closure pairing, Gram matrices, and equality of web-space elements.

use crate::qalg::RatFunc;
use crate::web::{mirror, BasisRegistry, Coloring, SetKind, Web, WebSum};

use super::engine::{Engine, ReduceOutcome};
use super::SkeinError;

/// Glue `c` (reversed coloring) onto the whole boundary of `x` and evaluate.
pub fn pair(engine: &mut Engine, x: &WebSum, c: &Web) -> Result<RatFunc, SkeinError> {
    let n = x.coloring().len();
    let expect: Coloring = x.coloring().iter().rev().copied().collect();
    if c.coloring() != expect {
        return Err(SkeinError::PairingColoring);
    }
    let glued = x
        .glue(&WebSum::from_web(c), n)
        .map_err(SkeinError::Web)?;
    engine.evaluate_closed(&glued)
}

/// Gram matrix of a registered set under the closure pairing against its
/// mirrors.
pub fn gram_matrix(
    engine: &mut Engine,
    webs: &[Web],
) -> Result<Vec<Vec<RatFunc>>, SkeinError> {
    let mut g = Vec::with_capacity(webs.len());
    for wi in webs {
        let xi = WebSum::from_web(wi);
        let mut row = Vec::with_capacity(webs.len());
        for wj in webs {
            row.push(pair(engine, &xi, &mirror(wj))?);
        }
        g.push(row);
    }
    Ok(g)
}

/// Gram matrix of the registered set for a coloring, cached on the engine.
fn gram_cached(
    engine: &mut Engine,
    reg: &BasisRegistry,
    coloring: &Coloring,
) -> Result<Vec<Vec<RatFunc>>, SkeinError> {
    if let Some(g) = engine.gram_cache.get(coloring) {
        return Ok(g.clone());
    }
    let webs = reg
        .lookup(coloring)
        .map(|(_, ws)| ws.to_vec())
        .ok_or_else(|| {
            SkeinError::UnregisteredColoring(crate::web::coloring_string(coloring))
        })?;
    let g = gram_matrix(engine, &webs)?;
    engine.gram_cache.insert(coloring.clone(), g.clone());
    Ok(g)
}

/// Exact invertibility over the rational-function field.
pub fn invertible(m: &[Vec<RatFunc>]) -> bool {
    let n = m.len();
    let mut a: Vec<Vec<RatFunc>> = m.to_vec();
    for col in 0..n {
        let Some(p) = (col..n).find(|r| !a[*r][col].is_zero()) else {
            return false;
        };
        a.swap(col, p);
        let inv = a[col][col].inv().expect("nonzero pivot");
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] * &inv;
            for cc in col..n {
                let t = &f * &a[col][cc];
                a[r][cc] = &a[r][cc] - &t;
            }
        }
    }
    true
}

/// Solve m x = v exactly; None when singular.
pub fn solve(m: &[Vec<RatFunc>], v: &[RatFunc]) -> Option<Vec<RatFunc>> {
    let n = m.len();
    let mut a: Vec<Vec<RatFunc>> = m.to_vec();
    let mut b: Vec<RatFunc> = v.to_vec();
    for col in 0..n {
        let p = (col..n).find(|r| !a[*r][col].is_zero())?;
        a.swap(col, p);
        b.swap(col, p);
        let inv = a[col][col].inv().expect("nonzero pivot");
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] * &inv;
            for cc in col..n {
                let t = &f * &a[col][cc];
                a[r][cc] = &a[r][cc] - &t;
            }
            let t = &f * &b[col];
            b[r] = &b[r] - &t;
        }
    }
    Some(
        (0..n)
            .map(|i| &b[i] * &a[i][i].inv().expect("pivot"))
            .collect(),
    )
}

/// Coordinates of x in a registered basis: by reduction when it completes,
/// else by solving the Gram system of closure pairings. The Gram route
/// requires a Basis-kind set with an invertible Gram matrix.
pub fn expand_in_basis(
    engine: &mut Engine,
    x: &WebSum,
    reg: &BasisRegistry,
) -> Result<WebSum, SkeinError> {
    match engine.reduce_to_basis(x, reg)? {
        ReduceOutcome::Reduced(r) => Ok(r),
        ReduceOutcome::Stalled(_) => {
            let coloring = x.coloring().clone();
            let Some((SetKind::Basis, webs)) = reg.lookup(&coloring) else {
                return Err(SkeinError::Undecided);
            };
            let webs = webs.to_vec();
            let g = gram_cached(engine, reg, &coloring)?;
            let mut v = Vec::with_capacity(webs.len());
            for t in &webs {
                v.push(pair(engine, x, &mirror(t))?);
            }
            // v_j = sum_i a_i G_ij: solve the transposed system
            let n = webs.len();
            let gt: Vec<Vec<RatFunc>> = (0..n)
                .map(|i| (0..n).map(|j| g[j][i].clone()).collect())
                .collect();
            let a = solve(&gt, &v).ok_or(SkeinError::Undecided)?;
            let mut out = WebSum::zero(coloring);
            for (t, c) in webs.iter().zip(a) {
                out.add_term(t, c);
            }
            Ok(out)
        }
    }
}

/// Decide x = y in the web space. Reduction to a registered basis decides
/// directly; otherwise the difference is paired against the mirrored
/// registered set, whose Gram matrix must be invertible.
pub fn equal(
    engine: &mut Engine,
    x: &WebSum,
    y: &WebSum,
    reg: &BasisRegistry,
) -> Result<bool, SkeinError> {
    if x.coloring() != y.coloring() {
        return Err(SkeinError::PairingColoring);
    }
    let d = x.sub(y);
    if d.is_zero() {
        return Ok(true);
    }
    let coloring = d.coloring().clone();
    let set = reg.lookup(&coloring).map(|(k, ws)| (*k, ws.to_vec()));
    if set.is_some() {
        match engine.reduce_to_basis(&d, reg)? {
            ReduceOutcome::Reduced(r) => {
                if r.is_zero() {
                    return Ok(true);
                }
                // nonzero coordinates in an independent set decide inequality
                if matches!(set.as_ref().unwrap().0, SetKind::Basis) {
                    return Ok(false);
                }
            }
            ReduceOutcome::Stalled(_) => {}
        }
    }
    let Some((_, webs)) = set else {
        return Err(SkeinError::Undecided);
    };
    let mut any_nonzero = false;
    for t in &webs {
        let v = pair(engine, &d, &mirror(t))?;
        if !v.is_zero() {
            any_nonzero = true;
            break;
        }
    }
    if any_nonzero {
        return Ok(false);
    }
    let g = gram_cached(engine, reg, &coloring)?;
    if invertible(&g) {
        Ok(true)
    } else {
        Err(SkeinError::Undecided)
    }
}
