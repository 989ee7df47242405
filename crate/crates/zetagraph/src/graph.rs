//! Resolution (plumbing) graphs: parsing, validation and basic combinatorial
//! invariants. Loops and multi-edges are first-class citizens; the cusp family
//! needs the 1-vertex loop and the 2-vertex double edge.

use serde::Deserialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("duplicate vertex id `{0}`")]
    DuplicateVertex(String),
    #[error("edge endpoint `{0}` does not name a vertex")]
    UnknownVertex(String),
    #[error("graph has no vertices")]
    Empty,
    #[error("graph is not connected")]
    Disconnected,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub id: String,
    pub euler: i64,
    pub genus: u32,
}

/// A resolution graph: decorated multigraph, loops allowed.
///
/// Edges are stored as index pairs `(u, v)` with `u <= v`, sorted, so that
/// permuting the edge input order yields an identical graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolutionGraph {
    vertices: Vec<Vertex>,
    edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphClass {
    TreeRational,
    CuspCycle,
    Other,
}

impl std::fmt::Display for GraphClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            GraphClass::TreeRational => "TreeRational",
            GraphClass::CuspCycle => "CuspCycle",
            GraphClass::Other => "Other",
        };
        f.write_str(s)
    }
}

#[derive(Deserialize)]
struct RawVertex {
    id: String,
    euler: i64,
    #[serde(default)]
    genus: u32,
}

#[derive(Deserialize)]
struct RawGraph {
    vertices: Vec<RawVertex>,
    edges: Vec<(String, String)>,
}

/// Parse a graph from the external JSON format:
/// `{ "vertices": [ { "id", "euler", "genus"? } ], "edges": [ ["u","v"] ] }`.
pub fn parse_graph(text: &str) -> Result<ResolutionGraph, GraphError> {
    let raw: RawGraph = serde_json::from_str(text)?;
    let vertices: Vec<Vertex> = raw
        .vertices
        .into_iter()
        .map(|v| Vertex { id: v.id, euler: v.euler, genus: v.genus })
        .collect();
    let edges: Vec<(String, String)> = raw.edges;
    ResolutionGraph::new(vertices, &edges)
}

impl ResolutionGraph {
    pub fn new(vertices: Vec<Vertex>, edges: &[(String, String)]) -> Result<Self, GraphError> {
        if vertices.is_empty() {
            return Err(GraphError::Empty);
        }
        let mut index = std::collections::HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.id.clone(), i).is_some() {
                return Err(GraphError::DuplicateVertex(v.id.clone()));
            }
        }
        let mut es = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            let ia = *index.get(a).ok_or_else(|| GraphError::UnknownVertex(a.clone()))?;
            let ib = *index.get(b).ok_or_else(|| GraphError::UnknownVertex(b.clone()))?;
            es.push((ia.min(ib), ia.max(ib)));
        }
        es.sort_unstable();
        let g = ResolutionGraph { vertices, edges: es };
        if !g.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(g)
    }

    /// Convenience constructor from `(euler, genus)` pairs and index edges.
    pub fn from_parts(data: &[(i64, u32)], edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let vertices: Vec<Vertex> = data
            .iter()
            .enumerate()
            .map(|(i, &(e, g))| Vertex { id: format!("v{i}"), euler: e, genus: g })
            .collect();
        let named: Vec<(String, String)> = edges
            .iter()
            .map(|&(a, b)| (format!("v{a}"), format!("v{b}")))
            .collect();
        Self::new(vertices, &named)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertex_index(&self, id: &str) -> Result<usize, GraphError> {
        self.vertices
            .iter()
            .position(|v| v.id == id)
            .ok_or_else(|| GraphError::UnknownVertex(id.to_string()))
    }

    fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(a, b) in &self.edges {
                for (x, y) in [(a, b), (b, a)] {
                    if x == v && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Number of edge endpoints at `v`; a loop contributes 2.
    pub fn valency(&self, v: usize) -> u32 {
        let mut k = 0;
        for &(a, b) in &self.edges {
            if a == v {
                k += 1;
            }
            if b == v {
                k += 1;
            }
        }
        k
    }

    /// Loops attached at `v`.
    pub fn loops_at(&self, v: usize) -> u32 {
        self.edges.iter().filter(|&&(a, b)| a == v && b == v).count() as u32
    }

    /// c(Gamma) = |E| - |V| + 1 for a connected graph.
    pub fn cycle_count(&self) -> usize {
        self.edges.len() + 1 - self.vertices.len()
    }

    /// b_1(M) = 2 * sum(g_v) + c(Gamma).
    pub fn first_betti(&self) -> u32 {
        2 * self.vertices.iter().map(|v| v.genus).sum::<u32>() + self.cycle_count() as u32
    }

    pub fn classify(&self) -> GraphClass {
        let all_rational = self.vertices.iter().all(|v| v.genus == 0);
        if !all_rational {
            return GraphClass::Other;
        }
        if self.cycle_count() == 0 {
            return GraphClass::TreeRational;
        }
        if self.cycle_count() == 1 && (0..self.vertices.len()).all(|v| self.valency(v) == 2) {
            return GraphClass::CuspCycle;
        }
        GraphClass::Other
    }

    /// Intersection matrix: diagonal = Euler numbers, off-diagonal = edge
    /// multiplicities. A loop is a node of the curve, not a change of
    /// self-intersection, so loops do not alter any entry.
    pub fn intersection_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.vertices.len();
        let mut m = vec![vec![0i64; n]; n];
        for (i, v) in self.vertices.iter().enumerate() {
            m[i][i] = v.euler;
        }
        for &(a, b) in &self.edges {
            if a != b {
                m[a][b] += 1;
                m[b][a] += 1;
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn loop1() -> ResolutionGraph {
        ResolutionGraph::from_parts(&[(-5, 0)], &[(0, 0)]).unwrap()
    }

    #[test]
    fn parse_one_vertex_loop() {
        let g = parse_graph(
            r#"{"vertices":[{"id":"v","euler":-5}],"edges":[["v","v"]]}"#,
        )
        .unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.classify(), GraphClass::CuspCycle);
    }

    #[test]
    fn parse_smallest_tree() {
        let g = parse_graph(r#"{"vertices":[{"id":"a","euler":-2}],"edges":[]}"#).unwrap();
        assert_eq!(g.classify(), GraphClass::TreeRational);
        assert_eq!(g.valency(0), 0);
    }

    #[test]
    fn dangling_edge_is_rejected() {
        let err = parse_graph(
            r#"{"vertices":[{"id":"a","euler":-2}],"edges":[["a","b"]]}"#,
        )
        .unwrap_err();
        assert!(matches!(err, GraphError::UnknownVertex(_)));
    }

    #[test]
    fn duplicate_vertex_is_rejected() {
        let err = parse_graph(
            r#"{"vertices":[{"id":"a","euler":-2},{"id":"a","euler":-3}],"edges":[]}"#,
        )
        .unwrap_err();
        assert!(matches!(err, GraphError::DuplicateVertex(_)));
    }

    #[test]
    fn disconnected_is_rejected() {
        let err = parse_graph(
            r#"{"vertices":[{"id":"a","euler":-2},{"id":"b","euler":-2}],"edges":[]}"#,
        )
        .unwrap_err();
        assert!(matches!(err, GraphError::Disconnected));
    }

    #[test]
    fn valency_counts_loops_twice() {
        assert_eq!(loop1().valency(0), 2);
        let double = ResolutionGraph::from_parts(&[(-2, 0), (-3, 0)], &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(double.valency(0), 2);
        assert_eq!(double.valency(1), 2);
    }

    #[test]
    fn valency_sum_is_twice_edges() {
        let g = ResolutionGraph::from_parts(
            &[(-2, 0), (-2, 0), (-3, 0)],
            &[(0, 1), (1, 2), (0, 2)],
        )
        .unwrap();
        let total: u32 = (0..3).map(|v| g.valency(v)).sum();
        assert_eq!(total as usize, 2 * g.edges().len());
    }

    #[test]
    fn cycle_counts() {
        let path = ResolutionGraph::from_parts(&[(-2, 0), (-2, 0)], &[(0, 1)]).unwrap();
        assert_eq!(path.cycle_count(), 0);
        let cyc = ResolutionGraph::from_parts(
            &[(-2, 0), (-2, 0), (-3, 0)],
            &[(0, 1), (1, 2), (0, 2)],
        )
        .unwrap();
        assert_eq!(cyc.cycle_count(), 1);
        assert_eq!(loop1().cycle_count(), 1);
    }

    #[test]
    fn betti_numbers() {
        let cyc = ResolutionGraph::from_parts(
            &[(-2, 0), (-2, 0), (-3, 0)],
            &[(0, 1), (1, 2), (0, 2)],
        )
        .unwrap();
        assert_eq!(cyc.first_betti(), 1);
        let path = ResolutionGraph::from_parts(&[(-2, 0), (-2, 0)], &[(0, 1)]).unwrap();
        assert_eq!(path.first_betti(), 0);
        let g1 = ResolutionGraph::from_parts(&[(-3, 1), (-2, 0)], &[(0, 1)]).unwrap();
        assert_eq!(g1.first_betti(), 2);
        assert_eq!(g1.classify(), GraphClass::Other);
    }

    #[test]
    fn classify_cases() {
        let cyc = ResolutionGraph::from_parts(
            &[(-2, 0), (-2, 0), (-3, 0)],
            &[(0, 1), (1, 2), (0, 2)],
        )
        .unwrap();
        assert_eq!(cyc.classify(), GraphClass::CuspCycle);
        let double = ResolutionGraph::from_parts(&[(-2, 0), (-3, 0)], &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(double.classify(), GraphClass::CuspCycle);
        assert_eq!(loop1().classify(), GraphClass::CuspCycle);
    }

    #[test]
    fn classify_is_relabel_invariant() {
        let a = ResolutionGraph::new(
            vec![
                Vertex { id: "x".into(), euler: -2, genus: 0 },
                Vertex { id: "y".into(), euler: -3, genus: 0 },
            ],
            &[("y".into(), "x".into()), ("x".into(), "y".into())],
        )
        .unwrap();
        let b = ResolutionGraph::from_parts(&[(-2, 0), (-3, 0)], &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(a.classify(), b.classify());
        assert_eq!(a.intersection_matrix(), b.intersection_matrix());
    }

    #[test]
    fn intersection_matrix_examples() {
        let double = ResolutionGraph::from_parts(&[(-2, 0), (-3, 0)], &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(double.intersection_matrix(), vec![vec![-2, 2], vec![2, -3]]);
        assert_eq!(loop1().intersection_matrix(), vec![vec![-5]]);
        let path = ResolutionGraph::from_parts(&[(-2, 0), (-2, 0)], &[(0, 1)]).unwrap();
        assert_eq!(path.intersection_matrix(), vec![vec![-2, 1], vec![1, -2]]);
    }
}
