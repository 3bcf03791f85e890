//! Local search over the exchange neighborhood: repeatedly sample a
//! maximal path, apply a strictly improving move if one exists, and stop
//! once a full scan over all leaf-to-leaf paths finds nothing better.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::exchange::{apply_move, enumerate_moves, Direction, ExchangeMove};
use crate::tree::{Tree, Vertex};
use crate::wiener::{wiener_edges, WienerValue};

/// Paths sampled per round before falling back to the exhaustive scan.
const SAMPLE_ROUNDS: usize = 8;

/// Result of a [`local_search`] run. The trajectory starts at the input
/// tree's Wiener index and records one strictly improved value per move.
#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub tree: Tree,
    pub trajectory: Vec<WienerValue>,
    pub moves: usize,
}

impl SearchOutcome {
    pub fn start_sigma(&self) -> WienerValue {
        self.trajectory[0]
    }

    pub fn end_sigma(&self) -> WienerValue {
        *self.trajectory.last().expect("trajectory is never empty")
    }
}

fn improves(direction: Direction, delta: i64) -> bool {
    match direction {
        Direction::Min => delta < 0,
        Direction::Max => delta > 0,
    }
}

/// A maximal path from a uniformly random leaf to a farthest leaf,
/// ties broken uniformly.
fn sample_maximal_path(t: &Tree, rng: &mut impl Rng) -> Result<Vec<Vertex>> {
    let leaves = t.leaves();
    let from = leaves[rng.gen_range(0..leaves.len())];
    let dist = t.bfs_distances(from)?;
    let far = leaves.iter().map(|&v| dist[v]).max().unwrap();
    let candidates: Vec<Vertex> = leaves.iter().copied().filter(|&v| dist[v] == far).collect();
    let to = candidates[rng.gen_range(0..candidates.len())];
    t.path_between(from, to)
}

fn best_on_path(t: &Tree, path: &[Vertex], direction: Direction) -> Result<Option<ExchangeMove>> {
    let moves = enumerate_moves(t, path)?;
    let best = moves
        .into_iter()
        .filter(|m| improves(direction, m.predicted_delta))
        .min_by_key(|m| match direction {
            Direction::Min => m.predicted_delta,
            Direction::Max => -m.predicted_delta,
        });
    Ok(best)
}

/// Finds the first improving move over all leaf-to-leaf paths, in
/// lexicographic leaf-pair order.
fn scan_all_paths(t: &Tree, direction: Direction) -> Result<Option<ExchangeMove>> {
    let leaves = t.leaves();
    for (i, &u) in leaves.iter().enumerate() {
        for &v in &leaves[i + 1..] {
            let path = t.path_between(u, v)?;
            if let Some(mv) = best_on_path(t, &path, direction)? {
                return Ok(Some(mv));
            }
        }
    }
    Ok(None)
}

/// Strictly monotone descent (or ascent) of the Wiener index over the
/// exchange moves available on maximal paths. Terminates when no
/// leaf-to-leaf path offers an improving move; since every applied move
/// changes an integer-valued σ in the right direction, termination is
/// guaranteed.
pub fn local_search(t: &Tree, direction: Direction, seed: u64) -> Result<SearchOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut current = t.clone();
    let mut sigma = wiener_edges(&current)?;
    let mut trajectory = vec![sigma];
    if t.n() > 2 {
        loop {
            let mut chosen = None;
            for _ in 0..SAMPLE_ROUNDS {
                let path = sample_maximal_path(&current, &mut rng)?;
                if let Some(mv) = best_on_path(&current, &path, direction)? {
                    chosen = Some(mv);
                    break;
                }
            }
            if chosen.is_none() {
                chosen = scan_all_paths(&current, direction)?;
            }
            let Some(mv) = chosen else { break };
            current = apply_move(&current, &mv)?;
            sigma = sigma.offset(mv.predicted_delta)?;
            debug_assert_eq!(wiener_edges(&current).unwrap(), sigma);
            trajectory.push(sigma);
        }
    }
    Ok(SearchOutcome {
        tree: current,
        moves: trajectory.len() - 1,
        trajectory,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::build_greedy_tree;
    use crate::degree::DegreeSequence;

    fn seq(degrees: &[usize]) -> DegreeSequence {
        DegreeSequence::new(degrees.iter().copied()).unwrap()
    }

    #[test]
    fn unique_tree_has_no_moves() {
        let p5 = Tree::from_edges(5, (1..5).map(|v| (v - 1, v))).unwrap();
        for direction in [Direction::Min, Direction::Max] {
            let out = local_search(&p5, direction, 1).unwrap();
            assert_eq!(out.moves, 0);
            assert_eq!(out.trajectory, vec![WienerValue::from(20)]);
            assert_eq!(out.tree, p5);
        }
    }

    #[test]
    fn tiny_trees_return_immediately() {
        let p1 = Tree::from_edges(1, []).unwrap();
        let p2 = Tree::from_edges(2, [(0, 1)]).unwrap();
        for t in [p1, p2] {
            let out = local_search(&t, Direction::Min, 0).unwrap();
            assert_eq!(out.moves, 0);
            assert_eq!(out.tree, t);
        }
    }

    #[test]
    fn greedy_start_cannot_improve() {
        let rt = build_greedy_tree(&seq(&[3, 3, 2]));
        let out = local_search(rt.tree(), Direction::Min, 7).unwrap();
        assert_eq!(out.moves, 0);
        assert_eq!(out.end_sigma().value(), 46);
    }

    #[test]
    fn descent_is_strictly_monotone() {
        // A lopsided double broom: improvable along its long maximal path.
        let t =
            Tree::from_edges(8, [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (4, 6), (6, 7)]).unwrap();
        let out = local_search(&t, Direction::Min, 42).unwrap();
        assert_eq!(out.start_sigma().value(), 71);
        assert!(out.moves >= 1);
        assert!(out.end_sigma().value() < 71);
        assert!(out.end_sigma().value() >= 67);
        assert!(out.trajectory.windows(2).all(|w| w[0] > w[1]));
        assert_eq!(out.tree.degree_sequence(), t.degree_sequence());
    }

    #[test]
    fn ascent_stops_at_local_maximum() {
        let t =
            Tree::from_edges(8, [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (4, 6), (6, 7)]).unwrap();
        let out = local_search(&t, Direction::Max, 3).unwrap();
        assert!(out.trajectory.windows(2).all(|w| w[0] < w[1]));
        assert!(out.end_sigma().value() >= 71);
        assert_eq!(out.tree.degree_sequence(), t.degree_sequence());
    }

    #[test]
    fn fixed_seed_is_reproducible() {
        let t =
            Tree::from_edges(8, [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (4, 6), (6, 7)]).unwrap();
        let a = local_search(&t, Direction::Min, 1234).unwrap();
        let b = local_search(&t, Direction::Min, 1234).unwrap();
        assert_eq!(a.tree, b.tree);
        assert_eq!(a.trajectory, b.trajectory);
    }
}
