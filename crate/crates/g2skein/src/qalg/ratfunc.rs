//! Canonical quotients of Laurent polynomials: the coefficient field.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::{Integer, One, Zero};

use super::poly::{LaurentPoly, Rat};
use super::QalgError;

/// num/den with den nonzero, gcd(num, den) = 1 after shifting both to lowest
/// exponent 0, den's lowest exponent 0 and den monic. Equal values have
/// identical representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

/// Gcd of two polynomials given as dense rational coefficient vectors
/// (constant terms nonzero). Returned monic. Uses a primitive pseudo-remainder
/// sequence over the integers to keep coefficients bounded.
fn poly_gcd(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    fn to_primitive(v: &[Rat]) -> Vec<BigInt> {
        let lcm = v
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = v.iter().map(|c| c.numer() * &lcm / c.denom()).collect();
        let content = ints
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if content.is_zero() {
            ints
        } else {
            ints.iter().map(|c| c / &content).collect()
        }
    }
    fn deg(v: &[BigInt]) -> Option<usize> {
        v.iter().rposition(|c| !c.is_zero())
    }
    // primitive part of the pseudo-remainder of a by b
    fn prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let db = deg(b).unwrap();
        let lb = b[db].clone();
        let mut r = a.to_vec();
        while let Some(dr) = deg(&r) {
            if dr < db {
                break;
            }
            let lr = r[dr].clone();
            for c in r.iter_mut() {
                *c = &*c * &lb;
            }
            for i in 0..=db {
                r[dr - db + i] -= &lr * &b[i];
            }
        }
        let content = r.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if !content.is_zero() {
            for c in r.iter_mut() {
                *c = &*c / &content;
            }
        }
        r
    }

    let mut r0 = to_primitive(a);
    let mut r1 = to_primitive(b);
    if deg(&r0).is_none() {
        r0 = r1.clone();
        r1 = Vec::new();
    }
    while deg(&r1).is_some() {
        if deg(&r0).unwrap_or(0) < deg(&r1).unwrap() {
            std::mem::swap(&mut r0, &mut r1);
            continue;
        }
        let r2 = prem(&r0, &r1);
        r0 = r1;
        r1 = r2;
    }
    // monic over Q
    let d = deg(&r0).expect("gcd of nonzero polynomials is nonzero");
    let lead = r0[d].clone();
    (0..=d)
        .map(|i| Rat::new(r0[i].clone(), lead.clone()))
        .collect()
}

/// Exact division of dense polynomials; panics if not divisible (callers
/// divide by a gcd, which always is).
fn poly_div_exact(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let db = b.iter().rposition(|c| !c.is_zero()).expect("nonzero divisor");
    let mut r = a.to_vec();
    let da = match r.iter().rposition(|c| !c.is_zero()) {
        Some(d) => d,
        None => return vec![],
    };
    assert!(da >= db, "exact division degree mismatch");
    let mut q = vec![Rat::zero(); da - db + 1];
    let mut dr = da;
    loop {
        if r.iter().all(|c| c.is_zero()) {
            break;
        }
        dr = r[..=dr].iter().rposition(|c| !c.is_zero()).unwrap();
        if dr < db {
            panic!("inexact polynomial division");
        }
        let f = &r[dr] / &b[db];
        q[dr - db] = f.clone();
        for i in 0..=db {
            let t = &f * &b[i];
            r[dr - db + i] -= t;
        }
    }
    q
}

impl RatFunc {
    /// Canonicalizing constructor.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, QalgError> {
        if den.is_zero() {
            return Err(QalgError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc { num: LaurentPoly::zero(), den: LaurentPoly::one() });
        }
        let (nv, nlo) = num.shifted_dense();
        let (dv, dlo) = den.shifted_dense();
        let g = poly_gcd(&nv, &dv);
        let (nv, dv) = if g.len() > 1 || !g[0].is_one() {
            (poly_div_exact(&nv, &g), poly_div_exact(&dv, &g))
        } else {
            (nv, dv)
        };
        // make den monic, fold the scalar into num
        let dlead = dv.iter().rev().find(|c| !c.is_zero()).unwrap().clone();
        let nv: Vec<Rat> = nv.iter().map(|c| c / &dlead).collect();
        let dv: Vec<Rat> = dv.iter().map(|c| c / &dlead).collect();
        Ok(RatFunc {
            num: LaurentPoly::from_dense(&nv, nlo - dlo),
            den: LaurentPoly::from_dense(&dv, 0),
        })
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RatFunc { num: p, den: LaurentPoly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(LaurentPoly::from_int(n))
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn monomial(exp: i64, coeff: Rat) -> Self {
        Self::from_poly(LaurentPoly::monomial(exp, coeff))
    }

    /// q^e.
    pub fn qpow(exp: i64) -> Self {
        Self::monomial(exp, Rat::one())
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The underlying Laurent polynomial when the denominator is 1.
    pub fn into_poly(self) -> Option<LaurentPoly> {
        if self.den.is_one() {
            Some(self.num)
        } else {
            None
        }
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    pub fn inv(&self) -> Result<RatFunc, QalgError> {
        if self.is_zero() {
            return Err(QalgError::DivisionByZero);
        }
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    /// q -> 1/q; an involution.
    pub fn bar(&self) -> RatFunc {
        RatFunc::new(self.num.bar(), self.den.bar()).expect("nonzero denominator")
    }

    /// Exact value at q = q0; poles and q0 = 0 are errors.
    pub fn eval_at(&self, q0: &Rat) -> Result<Rat, QalgError> {
        if q0.is_zero() {
            return Err(QalgError::EvalAtZero);
        }
        let d = self.den.eval(q0)?;
        if d.is_zero() {
            return Err(QalgError::Pole);
        }
        Ok(self.num.eval(q0)? / d)
    }

    /// Integer power, negative exponents via inv.
    pub fn pow(&self, n: i64) -> Result<RatFunc, QalgError> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut acc = RatFunc::one();
        for _ in 0..n.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFunc::new(num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        RatFunc::new(num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        assert!(!rhs.is_zero(), "division by zero RatFunc");
        RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num).expect("nonzero denominator")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
