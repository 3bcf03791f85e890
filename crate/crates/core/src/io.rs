//! Tree serialization: a bit-exact JSON edge-list format and DOT export.
//!
//! JSON shape: `{"n":4,"edges":[[0,1],[1,2],[2,3]]}` with each pair
//! `u < v` and the list sorted lexicographically (the in-memory edge
//! order, so output is deterministic).

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::tree::{Tree, Vertex};

impl Serialize for Tree {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut state = serializer.serialize_struct("Tree", 2)?;
        state.serialize_field("n", &self.n())?;
        state.serialize_field("edges", self.edges())?;
        state.end()
    }
}

#[derive(Deserialize)]
struct TreeRepr {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
}

impl Tree {
    /// Compact JSON edge list.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tree serialization is infallible")
    }

    /// Parses and fully revalidates a JSON edge list.
    pub fn from_json(text: &str) -> Result<Tree> {
        let repr: TreeRepr =
            serde_json::from_str(text).map_err(|e| Error::InvalidJson(e.to_string()))?;
        Tree::from_edges(repr.n, repr.edges)
    }

    /// Undirected DOT graph, one edge per line.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph {\n");
        if self.n() == 1 {
            out.push_str("  0;\n");
        }
        for &(u, v) in self.edges() {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_is_bit_exact() {
        let p4 = Tree::from_edges(4, [(2, 3), (1, 2), (0, 1)]).unwrap();
        assert_eq!(p4.to_json(), r#"{"n":4,"edges":[[0,1],[1,2],[2,3]]}"#);
        let single = Tree::from_edges(1, []).unwrap();
        assert_eq!(single.to_json(), r#"{"n":1,"edges":[]}"#);
    }

    #[test]
    fn json_round_trips() {
        let star = Tree::from_edges(5, [(0, 4), (0, 3), (0, 2), (0, 1)]).unwrap();
        assert_eq!(Tree::from_json(&star.to_json()).unwrap(), star);
    }

    #[test]
    fn bad_json_is_rejected() {
        assert!(matches!(Tree::from_json("{"), Err(Error::InvalidJson(_))));
        assert!(matches!(
            Tree::from_json(r#"{"n":4,"edges":[[0,1]]}"#),
            Err(Error::Disconnected(4))
        ));
        assert!(matches!(
            Tree::from_json(r#"{"n":2,"edges":[[0,7]]}"#),
            Err(Error::VertexOutOfRange { vertex: 7, n: 2 })
        ));
        assert!(matches!(
            Tree::from_json(r#"{"n":3,"edges":[[0,1],[1,2],"x"]}"#),
            Err(Error::InvalidJson(_))
        ));
    }

    #[test]
    fn dot_layout() {
        let p3 = Tree::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.to_dot(), "graph {\n  0 -- 1;\n  1 -- 2;\n}\n");
        let single = Tree::from_edges(1, []).unwrap();
        assert_eq!(single.to_dot(), "graph {\n  0;\n}\n");
    }
}
