//! Built-in graph zoo (JSON fixtures baked into the binary) and a seeded
//! generator of random negative-definite rational trees for property suites.

use crate::graph::{parse_graph, GraphClass, ResolutionGraph, Vertex};
use crate::lattice::check_negative_definite;
use rand::Rng;

/// Fixture names paired with their JSON sources.
pub const FIXTURES: &[(&str, &str)] = &[
    ("a2", include_str!("../fixtures/a2.json")),
    ("a5", include_str!("../fixtures/a5.json")),
    ("e8", include_str!("../fixtures/e8.json")),
    ("d4", include_str!("../fixtures/d4.json")),
    ("star3", include_str!("../fixtures/star3.json")),
    ("cusp1", include_str!("../fixtures/cusp1.json")),
    ("cusp2", include_str!("../fixtures/cusp2.json")),
    ("cusp3", include_str!("../fixtures/cusp3.json")),
    ("cusp5", include_str!("../fixtures/cusp5.json")),
];

pub fn fixture(name: &str) -> Option<ResolutionGraph> {
    FIXTURES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| parse_graph(text).expect("built-in fixture is valid"))
}

/// Every zoo graph with its name.
pub fn zoo() -> Vec<(&'static str, ResolutionGraph)> {
    FIXTURES
        .iter()
        .map(|(n, text)| (*n, parse_graph(text).expect("built-in fixture is valid")))
        .collect()
}

pub fn zoo_trees() -> Vec<(&'static str, ResolutionGraph)> {
    zoo().into_iter().filter(|(_, g)| g.classify() == GraphClass::TreeRational).collect()
}

pub fn zoo_cusps() -> Vec<(&'static str, ResolutionGraph)> {
    zoo().into_iter().filter(|(_, g)| g.classify() == GraphClass::CuspCycle).collect()
}

/// A random negative-definite rational tree with 2..=max_vertices vertices:
/// random attachment tree, Euler numbers in [-6, -2], resampled until the
/// intersection form is negative definite (all-(-2) chains always succeed, so
/// the loop terminates quickly in practice).
pub fn random_nd_tree<R: Rng>(rng: &mut R, max_vertices: usize) -> ResolutionGraph {
    loop {
        let n = rng.gen_range(2..=max_vertices);
        let vertices: Vec<Vertex> = (0..n)
            .map(|i| Vertex {
                id: format!("v{i}"),
                euler: -rng.gen_range(2..=6i64),
                genus: 0,
            })
            .collect();
        let edges: Vec<(String, String)> = (1..n)
            .map(|i| {
                let parent = rng.gen_range(0..i);
                (format!("v{parent}"), format!("v{i}"))
            })
            .collect();
        let g = ResolutionGraph::new(vertices, &edges).expect("attachment tree is connected");
        if check_negative_definite(&g.intersection_matrix()).unwrap_or(false) {
            return g;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::LatticeContext;
    use num_bigint::BigInt;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn all_fixtures_parse_and_are_definite() {
        for (name, g) in zoo() {
            let ctx = LatticeContext::build(g).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert!(ctx.det_abs > BigInt::from(0));
        }
    }

    #[test]
    fn zoo_classes() {
        assert_eq!(zoo_trees().len(), 5);
        assert_eq!(zoo_cusps().len(), 4);
        for (name, g) in zoo_cusps() {
            assert_eq!(g.classify(), GraphClass::CuspCycle, "{name}");
        }
    }

    #[test]
    fn e8_is_unimodular() {
        let ctx = LatticeContext::build(fixture("e8").unwrap()).unwrap();
        assert_eq!(ctx.det_abs, BigInt::from(1));
        assert_eq!(ctx.n, 8);
    }

    #[test]
    fn a2_and_d4_determinants() {
        let a2 = LatticeContext::build(fixture("a2").unwrap()).unwrap();
        assert_eq!(a2.det_abs, BigInt::from(3));
        let d4 = LatticeContext::build(fixture("d4").unwrap()).unwrap();
        assert_eq!(d4.det_abs, BigInt::from(4));
    }

    #[test]
    fn cusp_fixtures_have_zk_equal_e() {
        for (name, g) in zoo_cusps() {
            let ctx = LatticeContext::build(g).unwrap();
            assert!(ctx.zk_is_e(), "{name}");
        }
    }

    #[test]
    fn random_trees_are_definite_and_deterministic() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let trees: Vec<ResolutionGraph> = (0..20).map(|_| random_nd_tree(&mut rng, 8)).collect();
        for t in &trees {
            assert_eq!(t.classify(), GraphClass::TreeRational);
            assert!(t.vertex_count() <= 8);
            LatticeContext::build(t.clone()).unwrap();
        }
        let mut rng2 = ChaCha8Rng::seed_from_u64(42);
        let again: Vec<ResolutionGraph> = (0..20).map(|_| random_nd_tree(&mut rng2, 8)).collect();
        assert_eq!(trees, again);
    }
}
