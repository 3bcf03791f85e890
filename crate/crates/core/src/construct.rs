//! The two extremal constructions for a degree sequence.
//!
//! `build_greedy_tree` produces the balanced, level-by-level tree that
//! minimizes the Wiener index over all trees realizing the sequence:
//! the root takes the largest degree, each level is filled with the
//! largest remaining degrees, and parents hand out children in
//! first-created-first-served order (which within a level coincides with
//! non-increasing degree order).
//!
//! `build_greedy_caterpillar` produces the maximizer: all internal
//! vertices on one spine, degrees placed largest at the two ends and
//! shrinking toward the middle, alternating left end, right end, left, ..

use std::collections::VecDeque;

use crate::degree::DegreeSequence;
use crate::tree::{RootedTree, Tree, Vertex};

/// Per-level vertex degrees of a rooted tree, in id order within a level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelProfile {
    pub levels: Vec<Vec<usize>>,
}

impl LevelProfile {
    pub fn of(rt: &RootedTree) -> Self {
        let deg = rt.tree().degrees();
        let levels = rt
            .levels()
            .into_iter()
            .map(|level| level.into_iter().map(|v| deg[v]).collect())
            .collect();
        LevelProfile { levels }
    }

    /// Whether each level lists its degrees in non-increasing order.
    pub fn is_layered(&self) -> bool {
        self.levels
            .iter()
            .all(|level| level.windows(2).all(|w| w[0] >= w[1]))
    }
}

/// Builds the Wiener-minimal tree for the sequence, rooted at vertex 0.
/// Vertex ids follow creation order, so each level occupies a contiguous
/// id range in assignment order.
pub fn build_greedy_tree(ds: &DegreeSequence) -> RootedTree {
    let n = ds.n();
    let degrees = ds.degrees();
    if degrees.is_empty() {
        let t = Tree::from_edges(n, (1..n).map(|v| (0, v))).expect("n is 1 or 2");
        return t.rooted_at(0).expect("vertex 0 exists");
    }
    let mut pool = degrees.iter().copied().skip(1);
    let mut edges = Vec::with_capacity(n - 1);
    let mut queue: VecDeque<(Vertex, usize)> = VecDeque::new();
    queue.push_back((0, degrees[0]));
    let mut next_id: Vertex = 1;
    while let Some((parent, slots)) = queue.pop_front() {
        for _ in 0..slots {
            let d = pool.next().unwrap_or(1);
            let child = next_id;
            next_id += 1;
            edges.push((parent, child));
            if d >= 2 {
                queue.push_back((child, d - 1));
            }
        }
    }
    debug_assert_eq!(next_id, n);
    let t = Tree::from_edges(n, edges).expect("construction yields a tree");
    t.rooted_at(0).expect("vertex 0 exists")
}

/// A failed structural condition of [`is_greedy_tree`], 1-based, with the
/// vertex pair witnessing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreedyViolation {
    pub condition: usize,
    pub witness: (Vertex, Vertex),
}

/// Whether the rooted tree is greedy: the root carries the maximum
/// degree, leaves sit on at most two heights, degrees never increase
/// with height, and between same-height vertices the one with larger
/// degree dominates the other's successors and, when differently
/// parented, its sibling group.
pub fn is_greedy_tree(rt: &RootedTree) -> bool {
    greedy_violation(rt).is_none()
}

/// The first violated greedy condition, if any.
pub fn greedy_violation(rt: &RootedTree) -> Option<GreedyViolation> {
    let t = rt.tree();
    let n = t.n();
    if n <= 2 {
        return None;
    }
    let deg = t.degrees();
    let root = rt.root();

    // 1: the root has the largest degree.
    if let Some(v) = (0..n).find(|&v| deg[v] > deg[root]) {
        return Some(GreedyViolation {
            condition: 1,
            witness: (root, v),
        });
    }

    // 2: all leaves within one height of each other.
    let leaves = t.leaves();
    let lo = *leaves.iter().min_by_key(|&&v| rt.height(v)).expect("n > 1");
    let hi = *leaves.iter().max_by_key(|&&v| rt.height(v)).expect("n > 1");
    if rt.height(hi) - rt.height(lo) > 1 {
        return Some(GreedyViolation {
            condition: 2,
            witness: (lo, hi),
        });
    }

    // 3: degrees never increase from one level to the next (hence, by
    // chaining, between any two levels).
    let levels = rt.levels();
    for pair in levels.windows(2) {
        let &shallow_min = pair[0].iter().min_by_key(|&&v| deg[v]).expect("nonempty");
        let &deep_max = pair[1].iter().max_by_key(|&&v| deg[v]).expect("nonempty");
        if deg[shallow_min] < deg[deep_max] {
            return Some(GreedyViolation {
                condition: 3,
                witness: (shallow_min, deep_max),
            });
        }
    }

    // Successor degree range per height, per vertex: summaries[v][h] is
    // the (min, max) degree with witnesses among strict successors of v
    // at absolute height h.
    let depth = levels.len();
    let mut summaries: Vec<Vec<Option<MinMax>>> = vec![vec![None; depth]; n];
    for &v in rt.bfs_order().iter().rev() {
        let mut own: Vec<Option<MinMax>> = vec![None; depth];
        for &c in rt.children(v) {
            merge_entry(&mut own[rt.height(c)], deg[c], c);
            for (h, entry) in summaries[c].clone().into_iter().enumerate() {
                if let Some(e) = entry {
                    merge_minmax(&mut own[h], e);
                }
            }
        }
        summaries[v] = own;
    }

    // 4: between same-height u, w with deg(u) > deg(w), every successor
    // of u dominates every same-height successor of w.
    for level in &levels {
        for &u in level {
            for &w in level {
                if deg[u] <= deg[w] {
                    continue;
                }
                for (us, ws) in summaries[u].iter().zip(&summaries[w]) {
                    if let (Some(us), Some(ws)) = (us, ws) {
                        if us.min < ws.max {
                            return Some(GreedyViolation {
                                condition: 4,
                                witness: (us.min_witness, ws.max_witness),
                            });
                        }
                    }
                }
            }
        }
    }

    // 5: for same-height u, w with deg(u) > deg(w) and different parents,
    // every sibling of u dominates every sibling of w, and the same-height
    // successors of those sibling groups dominate likewise.
    for level in &levels {
        for &u in level {
            for &w in level {
                if deg[u] <= deg[w] {
                    continue;
                }
                let (Some(pu), Some(pw)) = (rt.parent(u), rt.parent(w)) else {
                    continue;
                };
                if pu == pw {
                    continue;
                }
                let sibs = |p: Vertex, skip: Vertex| {
                    rt.children(p).iter().copied().filter(move |&c| c != skip)
                };
                let mut u_side: Vec<Option<MinMax>> = vec![None; depth];
                for s in sibs(pu, u) {
                    merge_entry(&mut u_side[rt.height(s)], deg[s], s);
                    for h in 0..depth {
                        if let Some(e) = &summaries[s][h] {
                            merge_minmax(&mut u_side[h], e.clone());
                        }
                    }
                }
                let mut w_side: Vec<Option<MinMax>> = vec![None; depth];
                for s in sibs(pw, w) {
                    merge_entry(&mut w_side[rt.height(s)], deg[s], s);
                    for h in 0..depth {
                        if let Some(e) = &summaries[s][h] {
                            merge_minmax(&mut w_side[h], e.clone());
                        }
                    }
                }
                for h in 0..depth {
                    if let (Some(us), Some(ws)) = (&u_side[h], &w_side[h]) {
                        if us.min < ws.max {
                            return Some(GreedyViolation {
                                condition: 5,
                                witness: (us.min_witness, ws.max_witness),
                            });
                        }
                    }
                }
            }
        }
    }
    None
}

#[derive(Clone, Debug)]
struct MinMax {
    min: usize,
    max: usize,
    min_witness: Vertex,
    max_witness: Vertex,
}

fn merge_entry(slot: &mut Option<MinMax>, degree: usize, v: Vertex) {
    merge_minmax(
        slot,
        MinMax {
            min: degree,
            max: degree,
            min_witness: v,
            max_witness: v,
        },
    );
}

fn merge_minmax(slot: &mut Option<MinMax>, e: MinMax) {
    match slot {
        None => *slot = Some(e),
        Some(cur) => {
            if e.min < cur.min {
                cur.min = e.min;
                cur.min_witness = e.min_witness;
            }
            if e.max > cur.max {
                cur.max = e.max;
                cur.max_witness = e.max_witness;
            }
        }
    }
}

/// Spine degree placement of the Wiener-maximal caterpillar: sorted
/// degrees alternate between the leftmost and rightmost open spine slot.
pub fn greedy_caterpillar_spine(ds: &DegreeSequence) -> Vec<usize> {
    let degrees = ds.degrees();
    let k = degrees.len();
    let mut spine = vec![0usize; k];
    let (mut lo, mut hi) = (0usize, k);
    for (i, &d) in degrees.iter().enumerate() {
        if i % 2 == 0 {
            spine[lo] = d;
            lo += 1;
        } else {
            hi -= 1;
            spine[hi] = d;
        }
    }
    spine
}

/// Builds the Wiener-maximal caterpillar: spine vertices `0..k` in spine
/// order, pendant leaves filling each spine vertex up to its degree.
pub fn build_greedy_caterpillar(ds: &DegreeSequence) -> Tree {
    let n = ds.n();
    let spine = greedy_caterpillar_spine(ds);
    let k = spine.len();
    if k == 0 {
        return Tree::from_edges(n, (1..n).map(|v| (0, v))).expect("n is 1 or 2");
    }
    let mut edges = Vec::with_capacity(n - 1);
    for v in 1..k {
        edges.push((v - 1, v));
    }
    let mut next_leaf = k;
    for (v, &d) in spine.iter().enumerate() {
        let spine_neighbors = if k == 1 {
            0
        } else if v == 0 || v == k - 1 {
            1
        } else {
            2
        };
        for _ in 0..(d - spine_neighbors) {
            edges.push((v, next_leaf));
            next_leaf += 1;
        }
    }
    debug_assert_eq!(next_leaf, n);
    Tree::from_edges(n, edges).expect("construction yields a tree")
}

/// Whether the tree is a caterpillar whose spine degrees follow the
/// greedy placement (in either direction).
pub fn is_greedy_caterpillar(t: &Tree) -> bool {
    match caterpillar_spine_degrees(t) {
        None => false,
        Some(spine) => {
            let ds = t.degree_sequence();
            let expected = greedy_caterpillar_spine(&ds);
            let mut reversed = spine.clone();
            reversed.reverse();
            spine == expected || reversed == expected
        }
    }
}

/// Spine degrees of a caterpillar in spine order, or None when the
/// internal vertices do not form a path.
fn caterpillar_spine_degrees(t: &Tree) -> Option<Vec<usize>> {
    let deg = t.degrees();
    let internal: Vec<Vertex> = (0..t.n()).filter(|&v| deg[v] >= 2).collect();
    if internal.len() <= 1 {
        return Some(internal.iter().map(|&v| deg[v]).collect());
    }
    let adj = t.adjacency();
    let internal_neighbors = |v: Vertex| adj[v].iter().filter(|&&w| deg[w] >= 2).count();
    if internal.iter().any(|&v| internal_neighbors(v) > 2) {
        return None;
    }
    // Internal vertices of a tree induce a subtree; with max internal
    // degree 2 that subtree is a path. Walk it from one end.
    let start = *internal
        .iter()
        .find(|&&v| internal_neighbors(v) == 1)
        .expect("a path has ends");
    let mut order = vec![start];
    let mut prev = None;
    let mut cur = start;
    loop {
        let next = adj[cur]
            .iter()
            .copied()
            .find(|&w| deg[w] >= 2 && Some(w) != prev);
        match next {
            Some(w) => {
                order.push(w);
                prev = Some(cur);
                cur = w;
            }
            None => break,
        }
    }
    debug_assert_eq!(order.len(), internal.len());
    Some(order.into_iter().map(|v| deg[v]).collect())
}
