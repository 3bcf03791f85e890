//! Canonical form for unlabeled trees.
//!
//! The code of a rooted tree is `(` followed by the sorted codes of its
//! child subtrees followed by `)`. Rooting at the centroid (taking the
//! lexicographically smaller code when the centroid is an edge) makes the
//! code a complete isomorphism invariant: two trees are isomorphic exactly
//! when their codes are byte-equal. Cost grows with depth, so this is
//! intended for the small trees the enumeration machinery deals in.

use crate::tree::{Tree, Vertex};

impl Tree {
    /// Canonical byte string; equal for exactly the isomorphic trees.
    pub fn canonical_code(&self) -> Vec<u8> {
        self.centroid()
            .iter()
            .map(|&c| self.rooted_code(c))
            .min()
            .expect("tree has a centroid")
    }

    fn rooted_code(&self, root: Vertex) -> Vec<u8> {
        let rt = self.rooted_at(root).expect("root is in range");
        let mut codes: Vec<Vec<u8>> = vec![Vec::new(); self.n()];
        for &v in rt.bfs_order().iter().rev() {
            let mut parts: Vec<Vec<u8>> = rt
                .children(v)
                .iter()
                .map(|&c| std::mem::take(&mut codes[c]))
                .collect();
            parts.sort_unstable();
            let mut code = Vec::with_capacity(2 + parts.iter().map(Vec::len).sum::<usize>());
            code.push(b'(');
            for p in parts {
                code.extend_from_slice(&p);
            }
            code.push(b')');
            codes[v] = code;
        }
        std::mem::take(&mut codes[root])
    }
}
