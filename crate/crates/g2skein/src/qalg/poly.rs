//! Laurent polynomials in q with arbitrary-precision rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use super::QalgError;

pub type Rat = BigRational;

/// Exact Laurent polynomial: map from exponent to nonzero rational coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rat>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, Rat::one())
    }

    /// c * q^e, dropped if c = 0.
    pub fn monomial(exp: i64, coeff: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        LaurentPoly { terms }
    }

    pub fn from_int(n: i64) -> Self {
        Self::monomial(0, Rat::from_integer(BigInt::from(n)))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, exp: i64) -> Rat {
        self.terms.get(&exp).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rat)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Smallest exponent with nonzero coefficient; None for the zero polynomial.
    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Coefficient of the highest-exponent term.
    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.terms.values().next_back()
    }

    fn insert_add(&mut self, exp: i64, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// Multiply by c * q^e.
    pub fn mul_monomial(&self, exp: i64, coeff: &Rat) -> Self {
        if coeff.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e + exp, c * coeff))
                .collect(),
        }
    }

    /// q -> 1/q.
    pub fn bar(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Exact value at q = q0 (q0 must be nonzero for negative exponents).
    pub fn eval(&self, q0: &Rat) -> Result<Rat, QalgError> {
        if q0.is_zero() && self.min_exp().is_some_and(|e| e < 0) {
            return Err(QalgError::EvalAtZero);
        }
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let p = if *e >= 0 {
                num::pow::pow(q0.clone(), *e as usize)
            } else {
                num::pow::pow(q0.recip(), (-*e) as usize)
            };
            acc += c * p;
        }
        Ok(acc)
    }

    /// Dense coefficient vector after shifting the lowest exponent to 0,
    /// together with that shift. Zero polynomial gives (vec![], 0).
    pub fn shifted_dense(&self) -> (Vec<Rat>, i64) {
        let Some(lo) = self.min_exp() else {
            return (Vec::new(), 0);
        };
        let hi = self.max_exp().unwrap();
        let mut v = vec![Rat::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            v[(e - lo) as usize] = c.clone();
        }
        (v, lo)
    }

    pub fn from_dense(v: &[Rat], shift: i64) -> Self {
        let mut terms = BTreeMap::new();
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                terms.insert(shift + i as i64, c.clone());
            }
        }
        LaurentPoly { terms }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_add(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_add(*e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.insert_add(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

fn fmt_rat(c: &Rat) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for LaurentPoly {
    /// Strictly decreasing exponent order: `q^3 + 2 - q^-1`, `3/2*q^2 - q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let qpart = match *e {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{}", e),
            };
            if qpart.is_empty() {
                write!(f, "{}", fmt_rat(&mag))?;
            } else if mag.is_one() {
                write!(f, "{}", qpart)?;
            } else {
                write!(f, "{}*{}", fmt_rat(&mag), qpart)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// The q-integer: sum of q^(n-1-2k) for k in 0..n.
pub fn qint(n: i64) -> Result<LaurentPoly, QalgError> {
    if n < 0 {
        return Err(QalgError::NegativeArgument(n));
    }
    let mut p = LaurentPoly::zero();
    for k in 0..n {
        p.insert_add(n - 1 - 2 * k, Rat::one());
    }
    Ok(p)
}

/// [n]! = [n][n-1]...[1].
pub fn qfact(n: i64) -> Result<LaurentPoly, QalgError> {
    if n < 0 {
        return Err(QalgError::NegativeArgument(n));
    }
    let mut p = LaurentPoly::one();
    for k in 1..=n {
        p = &p * &qint(k)?;
    }
    Ok(p)
}

/// Gaussian binomial [m]!/([n]![m-n]!); the division is exact.
pub fn qbinom(m: i64, n: i64) -> Result<LaurentPoly, QalgError> {
    if m < 0 || n < 0 {
        return Err(QalgError::NegativeArgument(m.min(n)));
    }
    if n > m {
        return Err(QalgError::BinomOutOfRange { m, n });
    }
    let num = qfact(m)?;
    let den = &qfact(n)? * &qfact(m - n)?;
    let f = super::RatFunc::new(num, den)?;
    f.into_poly().ok_or(QalgError::InexactDivision)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qi(n: i64) -> LaurentPoly {
        qint(n).unwrap()
    }

    #[test]
    fn qint_small() {
        assert!(qi(0).is_zero());
        assert!(qi(1).is_one());
        // [2] = q + q^-1
        let two = qi(2);
        assert_eq!(two.coeff(1), Rat::one());
        assert_eq!(two.coeff(-1), Rat::one());
        assert_eq!(two.num_terms(), 2);
        assert!(qint(-1).is_err());
    }

    #[test]
    fn qfact_three_matches_hand_product() {
        // [3]! = [2][3] = (q + q^-1)(q^2 + 1 + q^-2), multiplied out by hand:
        // q^3 + 2q + 2q^-1 + q^-3
        let f = qfact(3).unwrap();
        let mut expect = LaurentPoly::zero();
        for (e, c) in [(3, 1), (1, 2), (-1, 2), (-3, 1)] {
            expect = &expect + &LaurentPoly::monomial(e, Rat::from_integer(c.into()));
        }
        assert_eq!(f, expect);
        assert_eq!(f, &qi(2) * &qi(3));
    }

    #[test]
    fn qbinom_values() {
        assert!(qbinom(5, 0).unwrap().is_one());
        assert!(qbinom(5, 5).unwrap().is_one());
        // [4 choose 2] = [4][3]/[2] = q^4 + q^2 + 2 + q^-2 + q^-4 (hand oracle)
        let b = qbinom(4, 2).unwrap();
        let mut expect = LaurentPoly::zero();
        for (e, c) in [(4, 1), (2, 1), (0, 2), (-2, 1), (-4, 1)] {
            expect = &expect + &LaurentPoly::monomial(e, Rat::from_integer(c.into()));
        }
        assert_eq!(b, expect);
        assert!(qbinom(3, 4).is_err());
    }

    #[test]
    fn qbinom_factorial_identity_up_to_12() {
        for m in 1..=12i64 {
            for n in 1..=m {
                let lhs = &(&qbinom(m, n).unwrap() * &qfact(n).unwrap()) * &qfact(m - n).unwrap();
                assert_eq!(lhs, qfact(m).unwrap(), "m={m} n={n}");
            }
        }
    }

    #[test]
    fn display_format() {
        let mut p = LaurentPoly::monomial(3, Rat::one());
        p = &p + &LaurentPoly::from_int(2);
        p = &p - &LaurentPoly::monomial(-1, Rat::one());
        assert_eq!(p.to_string(), "q^3 + 2 - q^-1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        let h = LaurentPoly::monomial(2, Rat::new(3.into(), 2.into()));
        assert_eq!(h.to_string(), "3/2*q^2");
    }

    #[test]
    fn qint_bar_invariant() {
        for n in 0..8 {
            assert_eq!(qi(n).bar(), qi(n));
        }
    }

    #[test]
    fn eval_qint_at_one() {
        let one = Rat::one();
        assert_eq!(qi(5).eval(&one).unwrap(), Rat::from_integer(5.into()));
    }
}
