//! Formal linear combinations of webs with rational-function coefficients.

use std::collections::BTreeMap;

use crate::qalg::RatFunc;

use super::key::{canonical_form, canonical_key};
use super::map::{Coloring, Web};
use super::ops;
use super::WebError;

/// Element of a web space: canonically keyed terms with a common coloring.
#[derive(Clone, Debug)]
pub struct WebSum {
    coloring: Coloring,
    terms: BTreeMap<Vec<u8>, (Web, RatFunc)>,
}

impl WebSum {
    pub fn zero(coloring: Coloring) -> WebSum {
        WebSum { coloring, terms: BTreeMap::new() }
    }

    pub fn from_web(w: &Web) -> WebSum {
        WebSum::term(w, RatFunc::one())
    }

    pub fn term(w: &Web, c: RatFunc) -> WebSum {
        let mut s = WebSum::zero(w.coloring());
        s.add_term(w, c);
        s
    }

    pub fn coloring(&self) -> &Coloring {
        &self.coloring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Web, &RatFunc)> {
        self.terms.values().map(|(w, c)| (w, c))
    }

    pub fn coeff_of(&self, w: &Web) -> RatFunc {
        self.terms
            .get(&canonical_key(w))
            .map(|(_, c)| c.clone())
            .unwrap_or_else(RatFunc::zero)
    }

    /// Add c * w, collecting like terms by canonical key and dropping zeros.
    pub fn add_term(&mut self, w: &Web, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(w.coloring(), self.coloring, "coloring mismatch in WebSum");
        let (key, canon) = canonical_form(w);
        let drop_it = if let Some(entry) = self.terms.get_mut(&key) {
            entry.1 = &entry.1 + &c;
            entry.1.is_zero()
        } else {
            self.terms.insert(key, (canon, c));
            return;
        };
        if drop_it {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &WebSum) -> WebSum {
        let mut out = self.clone();
        for (w, c) in other.iter() {
            out.add_term(w, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &WebSum) -> WebSum {
        let mut out = self.clone();
        for (w, c) in other.iter() {
            out.add_term(w, -c);
        }
        out
    }

    pub fn scale(&self, c: &RatFunc) -> WebSum {
        let mut out = WebSum::zero(self.coloring.clone());
        for (w, a) in self.iter() {
            out.add_term(w, a * c);
        }
        out
    }

    /// Map each term through a web operation, keeping coefficients.
    pub fn map_webs(&self, coloring: Coloring, f: impl Fn(&Web) -> Web) -> WebSum {
        let mut out = WebSum::zero(coloring);
        for (w, c) in self.iter() {
            out.add_term(&f(w), c.clone());
        }
        out
    }

    pub fn rotate(&self, k: i64) -> WebSum {
        let n = self.coloring.len() as i64;
        let mut col = self.coloring.clone();
        if n > 0 {
            let k0 = k.rem_euclid(n);
            col.rotate_left(k0 as usize);
        }
        self.map_webs(col, |w| ops::rotate(w, k))
    }

    pub fn tensor(&self, other: &WebSum) -> WebSum {
        let mut col = self.coloring.clone();
        col.extend_from_slice(&other.coloring);
        let mut out = WebSum::zero(col);
        for (w1, c1) in self.iter() {
            for (w2, c2) in other.iter() {
                out.add_term(&ops::tensor(w1, w2), c1 * c2);
            }
        }
        out
    }

    pub fn glue(&self, other: &WebSum, k: usize) -> Result<WebSum, WebError> {
        let n = self.coloring.len();
        let mut col: Vec<_> = self.coloring[..n - k].to_vec();
        col.extend_from_slice(&other.coloring[k..]);
        let mut out = WebSum::zero(col);
        for (w1, c1) in self.iter() {
            for (w2, c2) in other.iter() {
                out.add_term(&ops::glue(w1, w2, k)?, c1 * c2);
            }
        }
        Ok(out)
    }

    /// Structural equality of collected canonical forms.
    pub fn same_terms(&self, other: &WebSum) -> bool {
        if self.coloring != other.coloring || self.terms.len() != other.terms.len() {
            return false;
        }
        self.terms
            .iter()
            .zip(other.terms.iter())
            .all(|((k1, (_, c1)), (k2, (_, c2)))| k1 == k2 && c1 == c2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalg::rf;
    use crate::web::Label::Single;

    #[test]
    fn like_terms_collect_and_zeros_drop() {
        let a = ops::arc(Single);
        let mut s = WebSum::term(&a, rf("[2]"));
        s.add_term(&ops::rotate(&a, 1), rf("-[2]"));
        assert!(s.is_zero());
    }

    #[test]
    fn tensor_bilinear() {
        let a = WebSum::term(&ops::arc(Single), rf("[2]"));
        let b = WebSum::from_web(&ops::arc(Single)).add(&WebSum::term(&ops::arc(Single), rf("[3]-1")));
        // b collapsed to a single term with coefficient [3]
        assert_eq!(b.num_terms(), 1);
        let lhs = a.tensor(&b);
        assert_eq!(lhs.num_terms(), 1);
        assert_eq!(lhs.coloring().len(), 4);
        let (_, c) = lhs.iter().map(|(w, c)| (w.clone(), c.clone())).next().unwrap();
        assert_eq!(c, rf("[2][3]"));
    }
}
