//! Degree-preserving exchange moves on a path decomposition, with exact
//! closed-form predictions of the Wiener index change.
//!
//! Throughout, `k` is 1-based, sides have equal length `m`, component
//! sizes are `|X_i|`/`|Y_i|`, tails `|X_{>k}|` sum the sizes beyond
//! position `k`, and the position weight is `2i` when a middle vertex is
//! present and `2i - 1` otherwise.
//!
//! Three moves:
//! - tail swap at `k`: exchange everything beyond `x_k` with everything
//!   beyond `y_k`;
//! - component swap at `k`: exchange the components of `x_k` and `y_k`
//!   (anchors move with their components);
//! - branch move at `k`: detach chosen branches at `y_k` and reattach
//!   them at `x_k`; degree-preserving exactly when the number of moved
//!   branches equals `deg(y_k) - deg(x_k)`.

use crate::decompose::PathDecomposition;
use crate::error::{Error, Result};
use crate::tree::{Tree, Vertex};

/// Optimization sense for searches and interleaving checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Min,
    Max,
}

fn weight(d: &PathDecomposition, i: usize) -> i128 {
    if d.z().is_some() {
        2 * i as i128
    } else {
        2 * i as i128 - 1
    }
}

fn check_position(d: &PathDecomposition, k: usize) -> Result<()> {
    let (q, p) = (d.x_len(), d.y_len());
    if k == 0 || k > q.min(p) {
        return Err(Error::IndexOutOfRange { k, q, p });
    }
    Ok(())
}

fn to_delta(value: i128) -> Result<i64> {
    i64::try_from(value).map_err(|_| Error::Overflow)
}

/// Index change of the tail swap at `k`:
/// `sum_{i<=k} w_i (|X_i| - |Y_i|) * (|X_{>k}| - |Y_{>k}|)`.
pub fn predict_tail_swap_delta(d: &PathDecomposition, k: usize) -> Result<i64> {
    check_position(d, k)?;
    let mut inner: i128 = 0;
    for i in 1..=k {
        inner += weight(d, i) * (d.x_size(i) as i128 - d.y_size(i) as i128);
    }
    let tails = d.x_tail_size(k) as i128 - d.y_tail_size(k) as i128;
    to_delta(inner * tails)
}

/// Index change of the component swap at `k`:
/// `[sum_{i<k} w_i (|X_i| - |Y_i|) + w_k (|X_{>k}| - |Y_{>k}|)] * (|X_k| - |Y_k|)`.
pub fn predict_component_swap_delta(d: &PathDecomposition, k: usize) -> Result<i64> {
    check_position(d, k)?;
    let mut inner: i128 = 0;
    for i in 1..k {
        inner += weight(d, i) * (d.x_size(i) as i128 - d.y_size(i) as i128);
    }
    inner += weight(d, k) * (d.x_tail_size(k) as i128 - d.y_tail_size(k) as i128);
    to_delta(inner * (d.x_size(k) as i128 - d.y_size(k) as i128))
}

/// Index change of moving branches of the given sizes from `y_k` over to
/// `x_k`:
/// `[sum_{i<k} w_i (|Y_i| - |X_i|) + w_k (|Y_{>k-1}| - |B| - |X_{>k-1}|)] * |B|`.
pub fn predict_branch_move_delta(
    d: &PathDecomposition,
    k: usize,
    branch_sizes: &[usize],
) -> Result<i64> {
    check_position(d, k)?;
    if branch_sizes.contains(&0) {
        return Err(Error::InvalidBranchSelection(
            "branch sizes must be positive".into(),
        ));
    }
    let moved: usize = branch_sizes.iter().sum();
    if moved + 1 > d.y_size(k) {
        return Err(Error::InvalidBranchSelection(format!(
            "cannot move {moved} vertices out of a component of size {}",
            d.y_size(k)
        )));
    }
    let moved = moved as i128;
    let mut inner: i128 = 0;
    for i in 1..k {
        inner += weight(d, i) * (d.y_size(i) as i128 - d.x_size(i) as i128);
    }
    inner += weight(d, k) * (d.y_tail_size(k - 1) as i128 - moved - d.x_tail_size(k - 1) as i128);
    to_delta(inner * moved)
}

/// The concrete rewiring of an [`ExchangeMove`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MoveKind {
    TailSwap { k: usize },
    ComponentSwap { k: usize },
    BranchMove { k: usize, branch_roots: Vec<Vertex> },
}

/// A degree-preserving move bound to the decomposition it came from,
/// with its predicted Wiener index change.
#[derive(Clone, Debug)]
pub struct ExchangeMove {
    pub kind: MoveKind,
    pub decomposition: PathDecomposition,
    pub predicted_delta: i64,
}

impl ExchangeMove {
    /// Tail swap at `k`: needs nonempty tails on both sides.
    pub fn tail_swap(d: &PathDecomposition, k: usize) -> Result<Self> {
        check_position(d, k)?;
        if k >= d.x_len() || k >= d.y_len() {
            return Err(Error::InvalidMove(
                "tail swap needs components beyond k on both sides".into(),
            ));
        }
        Ok(ExchangeMove {
            kind: MoveKind::TailSwap { k },
            predicted_delta: predict_tail_swap_delta(d, k)?,
            decomposition: d.clone(),
        })
    }

    /// Component swap at `k`: either both sides continue past `k` or
    /// both end at `k`.
    pub fn component_swap(d: &PathDecomposition, k: usize) -> Result<Self> {
        check_position(d, k)?;
        let (q, p) = (d.x_len(), d.y_len());
        let interior = k < q && k < p;
        let both_ends = k == q && k == p;
        if !interior && !both_ends {
            return Err(Error::InvalidMove(
                "component swap needs both sides to continue, or both to end, at k".into(),
            ));
        }
        Ok(ExchangeMove {
            kind: MoveKind::ComponentSwap { k },
            predicted_delta: predict_component_swap_delta(d, k)?,
            decomposition: d.clone(),
        })
    }

    /// Branch move at `k`: `branch_roots` must be branch roots at `y_k`
    /// and exactly `deg(y_k) - deg(x_k)` many, so degrees are preserved.
    pub fn branch_move(
        tree: &Tree,
        d: &PathDecomposition,
        k: usize,
        branch_roots: Vec<Vertex>,
    ) -> Result<Self> {
        check_position(d, k)?;
        let (dy, dx) = (d.y_degree(k), d.x_degree(k));
        if dy <= dx || branch_roots.len() != dy - dx {
            return Err(Error::InvalidMove(format!(
                "branch move needs exactly deg(y_k) - deg(x_k) = {} roots, got {}",
                dy as i64 - dx as i64,
                branch_roots.len()
            )));
        }
        let branches = d.y_branches(tree, k);
        let mut sizes = Vec::with_capacity(branch_roots.len());
        for &root in &branch_roots {
            if branch_roots.iter().filter(|&&r| r == root).count() > 1 {
                return Err(Error::InvalidBranchSelection(format!(
                    "duplicate branch root {root}"
                )));
            }
            match branches.iter().find(|&&(r, _)| r == root) {
                Some(&(_, size)) => sizes.push(size),
                None => {
                    return Err(Error::InvalidBranchSelection(format!(
                        "{root} is not a branch root at y_{k}"
                    )))
                }
            }
        }
        Ok(ExchangeMove {
            kind: MoveKind::BranchMove { k, branch_roots },
            predicted_delta: predict_branch_move_delta(d, k, &sizes)?,
            decomposition: d.clone(),
        })
    }
}

/// Applies a move to the tree it was derived from, returning the rewired
/// tree. The degree multiset is unchanged.
pub fn apply_move(t: &Tree, m: &ExchangeMove) -> Result<Tree> {
    let d = &m.decomposition;
    if d.n() != t.n() {
        return Err(Error::InvalidMove(
            "decomposition does not match the tree".into(),
        ));
    }
    let mut edges: Vec<(Vertex, Vertex)> = t.edges().to_vec();
    let remove = |edges: &mut Vec<(Vertex, Vertex)>, u: Vertex, v: Vertex| -> Result<()> {
        let key = (u.min(v), u.max(v));
        match edges.iter().position(|&e| e == key) {
            Some(i) => {
                edges.swap_remove(i);
                Ok(())
            }
            None => Err(Error::InvalidMove(format!(
                "edge {} -- {} is not in the tree",
                key.0, key.1
            ))),
        }
    };
    match &m.kind {
        MoveKind::TailSwap { k } => {
            let k = *k;
            if k >= d.x_len() || k >= d.y_len() {
                return Err(Error::InvalidMove("tail swap needs both tails".into()));
            }
            let (xk, xn) = (d.x_anchor(k), d.x_anchor(k + 1));
            let (yk, yn) = (d.y_anchor(k), d.y_anchor(k + 1));
            remove(&mut edges, xk, xn)?;
            remove(&mut edges, yk, yn)?;
            edges.push((xk.min(yn), xk.max(yn)));
            edges.push((yk.min(xn), yk.max(xn)));
        }
        MoveKind::ComponentSwap { k } => {
            let k = *k;
            let (q, p) = (d.x_len(), d.y_len());
            let interior = k < q && k < p;
            if !interior && !(k == q && k == p) {
                return Err(Error::InvalidMove("component swap out of position".into()));
            }
            let (xk, yk) = (d.x_anchor(k), d.y_anchor(k));
            if k >= 2 {
                let (xi, yi) = (d.x_anchor(k - 1), d.y_anchor(k - 1));
                remove(&mut edges, xi, xk)?;
                remove(&mut edges, yi, yk)?;
                edges.push((xi.min(yk), xi.max(yk)));
                edges.push((yi.min(xk), yi.max(xk)));
            }
            // At k = 1 the inner connection is the middle vertex or the
            // opposite anchor itself; swapping there rewires nothing.
            if interior {
                let (xn, yn) = (d.x_anchor(k + 1), d.y_anchor(k + 1));
                remove(&mut edges, xk, xn)?;
                remove(&mut edges, yk, yn)?;
                edges.push((xk.min(yn), xk.max(yn)));
                edges.push((yk.min(xn), yk.max(xn)));
            }
        }
        MoveKind::BranchMove { k, branch_roots } => {
            let k = *k;
            let (dy, dx) = (d.y_degree(k), d.x_degree(k));
            if dy <= dx || branch_roots.len() != dy - dx {
                return Err(Error::InvalidMove(
                    "branch move must close the degree gap exactly".into(),
                ));
            }
            let (xk, yk) = (d.x_anchor(k), d.y_anchor(k));
            for &root in branch_roots {
                if d.y_component(k).binary_search(&root).is_err() || root == yk {
                    return Err(Error::InvalidBranchSelection(format!(
                        "{root} is not inside the component of y_{k}"
                    )));
                }
                remove(&mut edges, yk, root)?;
                edges.push((xk.min(root), xk.max(root)));
            }
        }
    }
    Tree::from_edges(t.n(), edges)
}

/// Every degree-preserving move available on the given path of `t`,
/// positions ascending, tail swap before component swap before branch
/// moves at equal `k`. Branch subsets come ordered by total moved size;
/// when a position offers more than `MAX_BRANCH_SUBSETS` subsets, only
/// the smallest and largest selections are emitted.
pub fn enumerate_moves(t: &Tree, path: &[Vertex]) -> Result<Vec<ExchangeMove>> {
    let z_mode = path.len() % 2 == 1;
    let d = t.path_decompose(path, z_mode)?;
    let mirrored = d.mirrored();
    let m = d.x_len().min(d.y_len());
    let mut moves = Vec::new();
    for k in 1..=m {
        if k < m {
            moves.push(ExchangeMove::tail_swap(&d, k)?);
        }
        moves.push(ExchangeMove::component_swap(&d, k)?);
        for side in [&d, &mirrored] {
            let (dy, dx) = (side.y_degree(k), side.x_degree(k));
            if dy > dx {
                let branches = side.y_branches(t, k);
                for subset in branch_subsets(&branches, dy - dx) {
                    moves.push(ExchangeMove::branch_move(t, side, k, subset)?);
                }
            }
        }
    }
    Ok(moves)
}

const MAX_BRANCH_SUBSETS: u128 = 64;

/// Subsets of exactly `b` branch roots, ordered by (total size, roots).
/// Falls back to the extreme selections when there are too many.
fn branch_subsets(branches: &[(Vertex, usize)], b: usize) -> Vec<Vec<Vertex>> {
    let len = branches.len();
    if b == 0 || b > len {
        return Vec::new();
    }
    if combinations(len, b) > MAX_BRANCH_SUBSETS {
        // branches are sorted by size: the b smallest and the b largest.
        let small: Vec<Vertex> = branches[..b].iter().map(|&(r, _)| r).collect();
        let large: Vec<Vertex> = branches[len - b..].iter().map(|&(r, _)| r).collect();
        return vec![small, large];
    }
    let mut subsets: Vec<(usize, Vec<Vertex>)> = Vec::new();
    let mut idx: Vec<usize> = (0..b).collect();
    loop {
        let total: usize = idx.iter().map(|&i| branches[i].1).sum();
        subsets.push((total, idx.iter().map(|&i| branches[i].0).collect()));
        // Advance to the next index combination in lexicographic order.
        let Some(i) = (0..b).rev().find(|&i| idx[i] != i + len - b) else {
            break;
        };
        idx[i] += 1;
        for j in i + 1..b {
            idx[j] = idx[j - 1] + 1;
        }
    }
    subsets.sort();
    subsets.into_iter().map(|(_, roots)| roots).collect()
}

fn combinations(n: usize, k: usize) -> u128 {
    let k = k.min(n - k);
    let mut c: u128 = 1;
    for j in 1..=k {
        c = c.saturating_mul((n - k + j) as u128) / j as u128;
    }
    c
}

/// Whether the component sizes along the path interleave as they must in
/// an extremal tree: walking the chain that alternates sides outward from
/// the middle, sizes never increase toward the ends (`Min`), or never
/// decrease once the two outermost components are set aside (`Max`).
/// Both side orientations are tried.
pub fn check_size_interleaving(d: &PathDecomposition, direction: Direction) -> bool {
    let m = d.x_len();
    if m != d.y_len() {
        return false;
    }
    let (a, b) = (d.x_sizes(), d.y_sizes());
    for (near, far) in [(&a, &b), (&b, &a)] {
        let chain = interleaved_chain(d, near, far, direction);
        let ok = match direction {
            Direction::Min => {
                chain.windows(2).all(|w| w[0] >= w[1])
                    && (m == 0 || (near[m - 1] == 1 && far[m - 1] == 1))
            }
            Direction::Max => chain.windows(2).all(|w| w[0] <= w[1]),
        };
        if ok {
            return true;
        }
    }
    false
}

/// The alternating size chain outward from the middle. For `Min` every
/// component participates; for `Max` the outermost component of each side
/// is excluded. The middle component, when present, leads the chain.
fn interleaved_chain(
    d: &PathDecomposition,
    near: &[usize],
    far: &[usize],
    direction: Direction,
) -> Vec<usize> {
    let m = near.len();
    let upto = match direction {
        Direction::Min => m,
        Direction::Max => m.saturating_sub(1),
    };
    let mut chain = Vec::with_capacity(2 * upto + 1);
    if d.z().is_some() {
        chain.push(d.z_size());
        for i in 0..upto {
            chain.push(far[i]);
            chain.push(near[i]);
        }
    } else {
        for i in 0..upto {
            chain.push(near[i]);
            chain.push(far[i]);
        }
    }
    chain
}

/// Whether anchor degrees can be made non-increasing along the minimizing
/// size chain by reordering anchors within runs of equal component size
/// (the freedom the size chain leaves open). The size chain itself must
/// pass in the same orientation.
pub fn check_degree_interleaving(d: &PathDecomposition) -> bool {
    let m = d.x_len();
    if m != d.y_len() {
        return false;
    }
    let sides = [
        (d.x_sizes(), d.y_sizes(), true),
        (d.y_sizes(), d.x_sizes(), false),
    ];
    for (near, far, x_near) in sides {
        if m > 0 && (near[m - 1] != 1 || far[m - 1] != 1) {
            continue;
        }
        let mut entries: Vec<(usize, usize)> = Vec::with_capacity(2 * m + 1);
        if d.z().is_some() {
            entries.push((d.z_size(), d.z_degree()));
        }
        for i in 1..=m {
            let (near_deg, far_deg) = if x_near {
                (d.x_degree(i), d.y_degree(i))
            } else {
                (d.y_degree(i), d.x_degree(i))
            };
            if d.z().is_some() {
                entries.push((far[i - 1], far_deg));
                entries.push((near[i - 1], near_deg));
            } else {
                entries.push((near[i - 1], near_deg));
                entries.push((far[i - 1], far_deg));
            }
        }
        if entries.windows(2).any(|w| w[0].0 < w[1].0) {
            continue;
        }
        // Within each run of equal sizes the anchors may be reordered
        // freely; sort each run's degrees descending and demand a
        // globally non-increasing degree chain.
        let mut degrees: Vec<usize> = Vec::with_capacity(entries.len());
        let mut i = 0;
        while i < entries.len() {
            let mut j = i;
            while j < entries.len() && entries[j].0 == entries[i].0 {
                j += 1;
            }
            let mut run: Vec<usize> = entries[i..j].iter().map(|&(_, deg)| deg).collect();
            run.sort_unstable_by(|a, b| b.cmp(a));
            degrees.extend(run);
            i = j;
        }
        if degrees.windows(2).all(|w| w[0] >= w[1]) {
            return true;
        }
    }
    false
}
