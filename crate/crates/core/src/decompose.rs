//! Decomposition of a tree along a simple path.
//!
//! Removing the edges of a path `w_1 .. w_L` splits the tree into one
//! hanging component per path vertex (the vertex itself plus everything
//! still attached to it). The decomposition names the two halves of the
//! path outward from its middle: anchors `x_1, x_2, ..` on one side and
//! `y_1, y_2, ..` on the other, with `x_1`/`y_1` innermost. For odd `L`
//! the middle vertex `z` sits between the sides and owns its own
//! component; `z_mode` must match the parity of `L`.
//!
//! Orientation is normalized: the side whose innermost component is
//! larger becomes the `x` side, ties going to the smaller innermost
//! anchor id.

use crate::error::{Error, Result};
use crate::tree::{Tree, Vertex};

/// A tree split along a simple path. Components partition the vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathDecomposition {
    n: usize,
    z: Option<Vertex>,
    z_component: Vec<Vertex>,
    z_degree: usize,
    x_anchors: Vec<Vertex>,
    y_anchors: Vec<Vertex>,
    x_components: Vec<Vec<Vertex>>,
    y_components: Vec<Vec<Vertex>>,
    x_degrees: Vec<usize>,
    y_degrees: Vec<usize>,
}

impl PathDecomposition {
    /// Number of vertices of the underlying tree.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The middle vertex, when the path has odd length.
    pub fn z(&self) -> Option<Vertex> {
        self.z
    }

    /// Vertices hanging off `z`, including `z`; empty without a middle.
    pub fn z_component(&self) -> &[Vertex] {
        &self.z_component
    }

    pub fn z_size(&self) -> usize {
        self.z_component.len()
    }

    /// Degree of `z` in the whole tree; 0 without a middle.
    pub fn z_degree(&self) -> usize {
        self.z_degree
    }

    /// Length of the x side (written `q`).
    pub fn x_len(&self) -> usize {
        self.x_anchors.len()
    }

    /// Length of the y side (written `p`).
    pub fn y_len(&self) -> usize {
        self.y_anchors.len()
    }

    /// `x_k`, innermost first; `k` is 1-based throughout.
    pub fn x_anchor(&self, k: usize) -> Vertex {
        self.x_anchors[k - 1]
    }

    pub fn y_anchor(&self, k: usize) -> Vertex {
        self.y_anchors[k - 1]
    }

    pub fn x_anchors(&self) -> &[Vertex] {
        &self.x_anchors
    }

    pub fn y_anchors(&self) -> &[Vertex] {
        &self.y_anchors
    }

    /// Component hanging at `x_k` (contains `x_k`), sorted by vertex id.
    pub fn x_component(&self, k: usize) -> &[Vertex] {
        &self.x_components[k - 1]
    }

    pub fn y_component(&self, k: usize) -> &[Vertex] {
        &self.y_components[k - 1]
    }

    pub fn x_size(&self, k: usize) -> usize {
        self.x_components[k - 1].len()
    }

    pub fn y_size(&self, k: usize) -> usize {
        self.y_components[k - 1].len()
    }

    /// Degree of `x_k` in the whole tree.
    pub fn x_degree(&self, k: usize) -> usize {
        self.x_degrees[k - 1]
    }

    pub fn y_degree(&self, k: usize) -> usize {
        self.y_degrees[k - 1]
    }

    /// Total size of components strictly beyond `x_k` on the x side.
    pub fn x_tail_size(&self, k: usize) -> usize {
        self.x_components[k..].iter().map(Vec::len).sum()
    }

    pub fn y_tail_size(&self, k: usize) -> usize {
        self.y_components[k..].iter().map(Vec::len).sum()
    }

    /// Component sizes along the x side, innermost first.
    pub fn x_sizes(&self) -> Vec<usize> {
        self.x_components.iter().map(Vec::len).collect()
    }

    pub fn y_sizes(&self) -> Vec<usize> {
        self.y_components.iter().map(Vec::len).collect()
    }

    /// The same split with the side roles exchanged.
    pub fn mirrored(&self) -> Self {
        PathDecomposition {
            n: self.n,
            z: self.z,
            z_component: self.z_component.clone(),
            z_degree: self.z_degree,
            x_anchors: self.y_anchors.clone(),
            y_anchors: self.x_anchors.clone(),
            x_components: self.y_components.clone(),
            y_components: self.x_components.clone(),
            x_degrees: self.y_degrees.clone(),
            y_degrees: self.x_degrees.clone(),
        }
    }

    /// Branches hanging at `x_k`: for each neighbor of the anchor inside
    /// its own component, the branch root and branch size. Sorted by
    /// (size, root id).
    pub fn x_branches(&self, tree: &Tree, k: usize) -> Vec<(Vertex, usize)> {
        branches_of(tree, self.x_anchors[k - 1], &self.x_components[k - 1])
    }

    pub fn y_branches(&self, tree: &Tree, k: usize) -> Vec<(Vertex, usize)> {
        branches_of(tree, self.y_anchors[k - 1], &self.y_components[k - 1])
    }
}

fn branches_of(tree: &Tree, anchor: Vertex, component: &[Vertex]) -> Vec<(Vertex, usize)> {
    let adj = tree.adjacency();
    let in_component = |v: Vertex| component.binary_search(&v).is_ok();
    let mut out = Vec::new();
    for &root in &adj[anchor] {
        if !in_component(root) {
            continue;
        }
        // Flood the branch without crossing back through the anchor.
        let mut stack = vec![root];
        let mut seen = vec![root];
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if w != anchor && !seen.contains(&w) {
                    seen.push(w);
                    stack.push(w);
                }
            }
        }
        out.push((root, seen.len()));
    }
    out.sort_unstable_by_key(|&(root, size)| (size, root));
    out
}

impl Tree {
    /// Splits the tree along `path`, which must be a simple path listed in
    /// order. `z_mode` selects the odd-length layout with a middle vertex
    /// and must match the parity of the path.
    pub fn path_decompose(&self, path: &[Vertex], z_mode: bool) -> Result<PathDecomposition> {
        let n = self.n();
        if path.is_empty() {
            return Err(Error::NotAPath);
        }
        let mut on_path = vec![false; n];
        for &v in path {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if on_path[v] {
                return Err(Error::NotAPath);
            }
            on_path[v] = true;
        }
        let adj = self.adjacency();
        for w in path.windows(2) {
            if !adj[w[0]].contains(&w[1]) {
                return Err(Error::NotAPath);
            }
        }
        if z_mode != (path.len() % 2 == 1) {
            return Err(Error::BadParity);
        }

        // Component of an anchor: flood without stepping onto other path
        // vertices. The only tree edges between path vertices are the path
        // edges themselves, so this equals cutting the path edges.
        let component_of = |anchor: Vertex| -> Vec<Vertex> {
            let mut seen = vec![false; n];
            seen[anchor] = true;
            let mut stack = vec![anchor];
            let mut comp = vec![anchor];
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if !seen[w] && !on_path[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comp
        };

        let mid = path.len() / 2;
        let (z, right, left): (Option<Vertex>, Vec<Vertex>, Vec<Vertex>) = if z_mode {
            (
                Some(path[mid]),
                path[mid + 1..].to_vec(),
                path[..mid].iter().rev().copied().collect(),
            )
        } else {
            (
                None,
                path[mid..].to_vec(),
                path[..mid].iter().rev().copied().collect(),
            )
        };

        let right_components: Vec<Vec<Vertex>> = right.iter().map(|&a| component_of(a)).collect();
        let left_components: Vec<Vec<Vertex>> = left.iter().map(|&a| component_of(a)).collect();

        // The x side has the larger innermost component; ties go to the
        // smaller innermost anchor id.
        let right_first = match (right.first(), left.first()) {
            (Some(&r), Some(&l)) => {
                let (rs, ls) = (right_components[0].len(), left_components[0].len());
                rs > ls || (rs == ls && r < l)
            }
            _ => true,
        };
        let (x_anchors, x_components, y_anchors, y_components) = if right_first {
            (right, right_components, left, left_components)
        } else {
            (left, left_components, right, right_components)
        };

        let deg = |v: Vertex| adj[v].len();
        let decomposition = PathDecomposition {
            n,
            z,
            z_component: z.map(component_of).unwrap_or_default(),
            z_degree: z.map(deg).unwrap_or(0),
            x_degrees: x_anchors.iter().map(|&a| deg(a)).collect(),
            y_degrees: y_anchors.iter().map(|&a| deg(a)).collect(),
            x_anchors,
            y_anchors,
            x_components,
            y_components,
        };
        debug_assert_eq!(
            decomposition.z_size() + decomposition.x_tail_size(0) + decomposition.y_tail_size(0),
            n,
            "components must partition the vertex set"
        );
        Ok(decomposition)
    }
}
