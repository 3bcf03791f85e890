//! The Wiener index: the sum of distances over all unordered vertex pairs.
//!
//! Two independent algorithms are kept side by side. `wiener_edges` is the
//! fast one (a single rooting, summing `s * (n - s)` over edges, where `s`
//! is the subtree size under the edge). `wiener_pairwise` is the direct
//! one (a breadth-first search per vertex). Agreement between the two is
//! asserted throughout the test suite; production callers should prefer
//! `wiener_edges`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::tree::Tree;

/// A Wiener index value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct WienerValue(u64);

impl WienerValue {
    pub fn value(self) -> u64 {
        self.0
    }

    /// Applies a signed index change, failing on wraparound.
    pub fn offset(self, delta: i64) -> Result<WienerValue> {
        self.0
            .checked_add_signed(delta)
            .map(WienerValue)
            .ok_or(Error::Overflow)
    }
}

impl fmt::Display for WienerValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<u64> for WienerValue {
    fn from(v: u64) -> Self {
        WienerValue(v)
    }
}

/// Sums distance sums over all vertices and halves. O(n^2).
pub fn wiener_pairwise(t: &Tree) -> Result<WienerValue> {
    let adj = t.adjacency();
    let mut total: u64 = 0;
    for v in 0..t.n() {
        let (dist, _) = t.bfs_with(&adj, v);
        for d in dist {
            total = total.checked_add(d as u64).ok_or(Error::Overflow)?;
        }
    }
    debug_assert_eq!(total % 2, 0);
    Ok(WienerValue(total / 2))
}

/// Sums `s * (n - s)` over edges, `s` being the subtree size on one side.
/// Each unordered pair is counted once per edge on its connecting path. O(n).
pub fn wiener_edges(t: &Tree) -> Result<WienerValue> {
    let root = t.rooted_at(0)?;
    let n = t.n() as u64;
    let mut total: u64 = 0;
    for v in 1..t.n() {
        let s = root.subtree_size(v) as u64;
        let through = s.checked_mul(n - s).ok_or(Error::Overflow)?;
        total = total.checked_add(through).ok_or(Error::Overflow)?;
    }
    Ok(WienerValue(total))
}

/// `n (n^2 - 1) / 6`: the index of the path on `n` vertices.
pub fn closed_form_path(n: usize) -> Result<WienerValue> {
    if n == 0 {
        return Ok(WienerValue(0));
    }
    let n = n as u128;
    let value = n
        .checked_mul(n)
        .and_then(|sq| (sq - 1).checked_mul(n))
        .ok_or(Error::Overflow)?
        / 6;
    u64::try_from(value)
        .map(WienerValue)
        .map_err(|_| Error::Overflow)
}

/// `(n - 1)^2`: the index of the star on `n` vertices.
pub fn closed_form_star(n: usize) -> Result<WienerValue> {
    let m = (n as u128).saturating_sub(1);
    u64::try_from(m * m)
        .map(WienerValue)
        .map_err(|_| Error::Overflow)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Tree {
        Tree::from_edges(n, (1..n).map(|v| (v - 1, v))).unwrap()
    }

    fn star(n: usize) -> Tree {
        Tree::from_edges(n, (1..n).map(|v| (0, v))).unwrap()
    }

    #[test]
    fn hand_computed_values() {
        assert_eq!(wiener_pairwise(&path(4)).unwrap().value(), 10);
        assert_eq!(wiener_pairwise(&star(4)).unwrap().value(), 9);
        assert_eq!(wiener_pairwise(&path(5)).unwrap().value(), 20);
        assert_eq!(wiener_pairwise(&star(5)).unwrap().value(), 16);
        // Double star on {3,3}: 4 pendant edges cut 1*5, the center edge 3*3.
        let ds = Tree::from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap();
        assert_eq!(wiener_pairwise(&ds).unwrap().value(), 29);
        assert_eq!(wiener_edges(&ds).unwrap().value(), 29);
    }

    #[test]
    fn degenerate_sizes() {
        let p1 = Tree::from_edges(1, []).unwrap();
        let p2 = path(2);
        for t in [&p1, &p2] {
            assert_eq!(wiener_pairwise(t).unwrap(), wiener_edges(t).unwrap());
        }
        assert_eq!(wiener_edges(&p1).unwrap().value(), 0);
        assert_eq!(wiener_edges(&p2).unwrap().value(), 1);
    }

    #[test]
    fn closed_forms_match_direct_computation() {
        for n in 1..=40 {
            assert_eq!(
                closed_form_path(n).unwrap(),
                wiener_edges(&path(n.max(1))).unwrap()
            );
            if n >= 2 {
                assert_eq!(
                    closed_form_star(n).unwrap(),
                    wiener_edges(&star(n)).unwrap()
                );
            }
        }
    }

    #[test]
    fn closed_forms_overflow_gracefully() {
        assert_eq!(closed_form_path(usize::MAX / 2), Err(Error::Overflow));
    }

    #[test]
    fn offset_applies_deltas() {
        let w = WienerValue::from(10);
        assert_eq!(w.offset(-4).unwrap().value(), 6);
        assert_eq!(w.offset(5).unwrap().value(), 15);
        assert_eq!(w.offset(-11), Err(Error::Overflow));
    }
}
