use std::collections::VecDeque;

use crate::degree::DegreeSequence;
use crate::error::{Error, Result};

/// Vertices are dense indices `0..n`.
pub type Vertex = usize;

/// Hard cap on the number of vertices. Keeps every distance sum and Wiener
/// value comfortably inside `u64` (the index of a path on `n` vertices is
/// `n(n^2 - 1)/6`, about `1.3e15` at the cap).
pub const MAX_VERTICES: usize = 200_000;

/// An unrooted tree on vertices `0..n`.
///
/// The edge list is kept normalized: every edge is stored as `(u, v)` with
/// `u < v` and the list is sorted lexicographically, so two equal trees
/// compare equal structurally and serialize identically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tree {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
}

impl Tree {
    /// Builds a tree from an edge list, validating that it is one.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyTree);
        }
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n, MAX_VERTICES));
        }
        let mut normalized = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        for w in normalized.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateEdge(w[0].0, w[0].1));
            }
        }
        if normalized.len() + 1 < n {
            return Err(Error::Disconnected(n));
        }
        if normalized.len() + 1 > n {
            return Err(Error::CycleDetected);
        }
        let tree = Tree {
            n,
            edges: normalized,
        };
        // n - 1 distinct edges: connectivity now implies acyclicity.
        let (dist, _) = tree.bfs(0);
        if dist.contains(&usize::MAX) {
            return Err(Error::Disconnected(n));
        }
        Ok(tree)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn adjacency(&self) -> Vec<Vec<Vertex>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Vertices of degree exactly one.
    pub fn leaves(&self) -> Vec<Vertex> {
        self.degrees()
            .iter()
            .enumerate()
            .filter(|&(_, &d)| d == 1)
            .map(|(v, _)| v)
            .collect()
    }

    /// The multiset of internal (degree >= 2) vertex degrees.
    pub fn degree_sequence(&self) -> DegreeSequence {
        if self.n == 1 {
            return DegreeSequence::singleton();
        }
        let internal: Vec<usize> = self.degrees().into_iter().filter(|&d| d >= 2).collect();
        let ds = DegreeSequence::new(internal).expect("degrees of a tree are always consistent");
        debug_assert_eq!(ds.n(), self.n);
        ds
    }

    /// BFS from `from`: distances (usize::MAX if unreachable) and parents.
    pub(crate) fn bfs(&self, from: Vertex) -> (Vec<usize>, Vec<Option<Vertex>>) {
        let adj = self.adjacency();
        self.bfs_with(&adj, from)
    }

    pub(crate) fn bfs_with(
        &self,
        adj: &[Vec<Vertex>],
        from: Vertex,
    ) -> (Vec<usize>, Vec<Option<Vertex>>) {
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[from] = 0;
        queue.push_back(from);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = Some(v);
                    queue.push_back(w);
                }
            }
        }
        (dist, parent)
    }

    /// Distances from one vertex to every other.
    pub fn bfs_distances(&self, from: Vertex) -> Result<Vec<usize>> {
        self.check_vertex(from)?;
        Ok(self.bfs(from).0)
    }

    /// The unique simple path from `u` to `v`, inclusive.
    pub fn path_between(&self, u: Vertex, v: Vertex) -> Result<Vec<Vertex>> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let (_, parent) = self.bfs(u);
        let mut path = vec![v];
        let mut cur = v;
        while cur != u {
            cur = parent[cur].expect("tree is connected");
            path.push(cur);
        }
        path.reverse();
        Ok(path)
    }

    /// Sum of distances from `v` to all vertices, by breadth-first traversal.
    pub fn distance_sum(&self, v: Vertex) -> Result<u64> {
        self.check_vertex(v)?;
        let (dist, _) = self.bfs(v);
        let mut total: u64 = 0;
        for d in dist {
            total = total.checked_add(d as u64).ok_or(Error::Overflow)?;
        }
        Ok(total)
    }

    /// Distance sums of every vertex in O(n), by rerooting: moving the root
    /// across an edge changes the sum by `n - 2 * subtree_size`.
    pub fn distance_sums(&self) -> Result<Vec<u64>> {
        let root = self.rooted_at(0)?;
        let base = self.distance_sum(0)? as i128;
        let mut sums = vec![0i128; self.n];
        sums[0] = base;
        for &v in &root.order[1..] {
            let p = root.parent[v].expect("non-root has a parent");
            sums[v] = sums[p] + self.n as i128 - 2 * root.subtree_size[v] as i128;
        }
        sums.into_iter()
            .map(|s| u64::try_from(s).map_err(|_| Error::Overflow))
            .collect()
    }

    /// The one or two adjacent vertices minimizing the distance sum,
    /// in increasing id order.
    pub fn centroid(&self) -> Vec<Vertex> {
        let sums = self.distance_sums().expect("tree size is capped");
        let best = *sums.iter().min().expect("tree is nonempty");
        let centroids: Vec<Vertex> = (0..self.n).filter(|&v| sums[v] == best).collect();
        debug_assert!(centroids.len() <= 2);
        centroids
    }

    /// Roots the tree, precomputing parents, heights, subtree sizes and a
    /// breadth-first vertex order.
    pub fn rooted_at(&self, root: Vertex) -> Result<RootedTree> {
        self.check_vertex(root)?;
        let (dist, parent) = self.bfs(root);
        let mut order: Vec<Vertex> = (0..self.n).collect();
        order.sort_by_key(|&v| (dist[v], v));
        let mut subtree_size = vec![1usize; self.n];
        for &v in order.iter().rev() {
            if let Some(p) = parent[v] {
                subtree_size[p] += subtree_size[v];
            }
        }
        let mut children = vec![Vec::new(); self.n];
        for &v in &order {
            if let Some(p) = parent[v] {
                children[p].push(v);
            }
        }
        Ok(RootedTree {
            tree: self.clone(),
            root,
            parent,
            height: dist,
            subtree_size,
            order,
            children,
        })
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        Ok(())
    }
}

/// A tree with a distinguished root and derived per-vertex data.
#[derive(Clone, Debug)]
pub struct RootedTree {
    tree: Tree,
    root: Vertex,
    parent: Vec<Option<Vertex>>,
    height: Vec<usize>,
    subtree_size: Vec<usize>,
    /// Breadth-first order from the root; ties broken by vertex id.
    order: Vec<Vertex>,
    children: Vec<Vec<Vertex>>,
}

impl RootedTree {
    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    pub fn root(&self) -> Vertex {
        self.root
    }

    pub fn parent(&self, v: Vertex) -> Option<Vertex> {
        self.parent[v]
    }

    /// Distance from the root.
    pub fn height(&self, v: Vertex) -> usize {
        self.height[v]
    }

    pub fn subtree_size(&self, v: Vertex) -> usize {
        self.subtree_size[v]
    }

    pub fn children(&self, v: Vertex) -> &[Vertex] {
        &self.children[v]
    }

    pub fn bfs_order(&self) -> &[Vertex] {
        &self.order
    }

    /// Vertices grouped by height; entry `h` lists level `h` in id order.
    pub fn levels(&self) -> Vec<Vec<Vertex>> {
        let depth = self.height.iter().copied().max().unwrap_or(0);
        let mut levels = vec![Vec::new(); depth + 1];
        for &v in &self.order {
            levels[self.height[v]].push(v);
        }
        levels
    }
}
