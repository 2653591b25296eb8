//! Registry of web bases and spanning sets per boundary coloring.

use std::collections::BTreeMap;

use super::key::canonical_key;
use super::map::{Coloring, Web};
use super::WebError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetKind {
    /// Linearly independent (Gram matrix checked invertible by the caller).
    Basis,
    /// Spans the space but independence is not claimed.
    Spanning,
}

#[derive(Debug, Clone, Default)]
pub struct BasisRegistry {
    sets: BTreeMap<Coloring, (SetKind, Vec<Web>, Vec<Vec<u8>>)>,
}

impl BasisRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn register(&mut self, coloring: Coloring, kind: SetKind, webs: Vec<Web>) -> Result<(), WebError> {
        let mut keys = Vec::with_capacity(webs.len());
        for w in &webs {
            if w.coloring() != coloring {
                return Err(WebError::Corrupt(format!(
                    "basis web coloring {:?} does not match registered coloring {:?}",
                    w.coloring(),
                    coloring
                )));
            }
            let k = canonical_key(w);
            if keys.contains(&k) {
                return Err(WebError::Corrupt("duplicate web in registered set".into()));
            }
            keys.push(k);
        }
        self.sets.insert(coloring, (kind, webs, keys));
        Ok(())
    }

    pub fn lookup(&self, coloring: &Coloring) -> Option<(&SetKind, &[Web])> {
        self.sets.get(coloring).map(|(k, ws, _)| (k, ws.as_slice()))
    }

    pub fn keys_of(&self, coloring: &Coloring) -> Option<&[Vec<u8>]> {
        self.sets.get(coloring).map(|(_, _, ks)| ks.as_slice())
    }

    pub fn contains_web(&self, coloring: &Coloring, key: &[u8]) -> bool {
        self.keys_of(coloring)
            .is_some_and(|ks| ks.iter().any(|k| k == key))
    }

    pub fn colorings(&self) -> impl Iterator<Item = &Coloring> {
        self.sets.keys()
    }
}
