//! Hypergraph data model: construction, structural validation, neighborhoods,
//! and the JSON document format.
//!
//! Vertices are contiguous ids `0..n`. Edges are canonicalized on construction
//! (each edge sorted ascending, edge list sorted lexicographically) so that
//! structurally equal hypergraphs compare equal and hash identically.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HypergraphError {
    #[error("edge {edge} is empty")]
    EmptyEdge { edge: usize },
    #[error("edge {edge} repeats vertex {vertex}")]
    RepeatedVertex { edge: usize, vertex: usize },
    #[error("edge {edge} contains vertex {vertex}, out of range for n={n}")]
    VertexOutOfRange { edge: usize, vertex: usize, n: usize },
    #[error("edges {first} and {second} are identical as sets")]
    DuplicateEdge { first: usize, second: usize },
    #[error("vertex {vertex} out of range for n={n}")]
    BadVertex { vertex: usize, n: usize },
    #[error("parse error: {0}")]
    Parse(#[from] serde_json::Error),
}

/// A simple hypergraph on vertex ids `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
}

/// On-disk document. `meta` carries optional family information written by
/// the constructions module; `load` accepts edges in any order.
#[derive(Debug, Serialize, Deserialize)]
struct Document {
    n: usize,
    edges: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    meta: Option<serde_json::Value>,
}

impl Hypergraph {
    /// Builds a hypergraph, checking all structural invariants.
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Self, HypergraphError> {
        let mut canon: Vec<Vec<usize>> = Vec::with_capacity(edges.len());
        for (idx, edge) in edges.into_iter().enumerate() {
            if edge.is_empty() {
                return Err(HypergraphError::EmptyEdge { edge: idx });
            }
            let mut sorted = edge;
            sorted.sort_unstable();
            for pair in sorted.windows(2) {
                if pair[0] == pair[1] {
                    return Err(HypergraphError::RepeatedVertex { edge: idx, vertex: pair[0] });
                }
            }
            if let Some(&max) = sorted.last() {
                if max >= n {
                    return Err(HypergraphError::VertexOutOfRange { edge: idx, vertex: max, n });
                }
            }
            canon.push(sorted);
        }
        let mut seen: BTreeMap<&[usize], usize> = BTreeMap::new();
        for (idx, edge) in canon.iter().enumerate() {
            if let Some(&first) = seen.get(edge.as_slice()) {
                return Err(HypergraphError::DuplicateEdge { first, second: idx });
            }
            seen.insert(edge, idx);
        }
        canon.sort_unstable();
        Ok(Hypergraph { n, edges: canon })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted id lists, lexicographically ordered.
    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// Number of edges containing each vertex.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for edge in &self.edges {
            for &v in edge {
                deg[v] += 1;
            }
        }
        deg
    }

    pub fn degree(&self, v: usize) -> Result<usize, HypergraphError> {
        if v >= self.n {
            return Err(HypergraphError::BadVertex { vertex: v, n: self.n });
        }
        Ok(self.edges.iter().filter(|e| e.contains(&v)).count())
    }

    /// All vertices sharing at least one edge with `v`, excluding `v` itself.
    pub fn neighborhood(&self, v: usize) -> Result<BTreeSet<usize>, HypergraphError> {
        if v >= self.n {
            return Err(HypergraphError::BadVertex { vertex: v, n: self.n });
        }
        let mut out = BTreeSet::new();
        for edge in &self.edges {
            if edge.contains(&v) {
                out.extend(edge.iter().copied().filter(|&u| u != v));
            }
        }
        Ok(out)
    }

    /// Parses the JSON document format and validates invariants.
    pub fn load(bytes: &[u8]) -> Result<Self, HypergraphError> {
        let doc: Document = serde_json::from_slice(bytes)?;
        Hypergraph::new(doc.n, doc.edges)
    }

    pub fn load_with_meta(bytes: &[u8]) -> Result<(Self, Option<serde_json::Value>), HypergraphError> {
        let doc: Document = serde_json::from_slice(bytes)?;
        Ok((Hypergraph::new(doc.n, doc.edges)?, doc.meta))
    }

    pub fn save(&self) -> Vec<u8> {
        self.save_with_meta(None)
    }

    pub fn save_with_meta(&self, meta: Option<serde_json::Value>) -> Vec<u8> {
        let doc = Document { n: self.n, edges: self.edges.clone(), meta };
        let mut out = serde_json::to_vec_pretty(&doc).expect("document serialization cannot fail");
        out.push(b'\n');
        out
    }
}

/// One concrete counterexample per failed structural property.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Witnesses {
    /// Two edge ids with different sizes.
    pub nonuniform: Option<(usize, usize)>,
    /// Two vertex ids with different degrees.
    pub irregular: Option<(usize, usize)>,
    /// A vertex pair lying in two distinct edges: (u, v, edge, edge).
    pub nonlinear: Option<(usize, usize, usize, usize)>,
    /// An edge containing two neighbors of a vertex not in the edge: (vertex, edge).
    pub cross_edge: Option<(usize, usize)>,
}

/// Structural report produced by [`validate`].
///
/// `uniform_r`/`regular_d` are `None` for edgeless hypergraphs (undefined)
/// and whenever the property fails, in which case the witness is set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub uniform_r: Option<usize>,
    pub regular_d: Option<usize>,
    pub is_linear: bool,
    pub is_cross_edge_free: bool,
    pub witnesses: Witnesses,
}

/// Checks uniformity, regularity, linearity and cross-edge-freeness.
///
/// Deterministic and side-effect free; the pair-to-edge map built for the
/// linearity check is reused for cross-edge detection.
pub fn validate(h: &Hypergraph) -> ValidationReport {
    let mut witnesses = Witnesses::default();

    let uniform_r = if h.edges.is_empty() {
        None
    } else {
        let r = h.edges[0].len();
        match h.edges.iter().position(|e| e.len() != r) {
            Some(bad) => {
                witnesses.nonuniform = Some((0, bad));
                None
            }
            None => Some(r),
        }
    };

    let regular_d = if h.edges.is_empty() {
        None
    } else {
        let deg = h.degrees();
        let d = deg[0];
        match deg.iter().position(|&x| x != d) {
            Some(bad) => {
                witnesses.irregular = Some((0, bad));
                None
            }
            None => Some(d),
        }
    };

    // pair -> id of the first edge containing it
    let mut pair_edge: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut is_linear = true;
    for (idx, edge) in h.edges.iter().enumerate() {
        for a in 0..edge.len() {
            for b in a + 1..edge.len() {
                let key = (edge[a], edge[b]);
                if let Some(&prev) = pair_edge.get(&key) {
                    if is_linear {
                        witnesses.nonlinear = Some((key.0, key.1, prev, idx));
                        is_linear = false;
                    }
                } else {
                    pair_edge.insert(key, idx);
                }
            }
        }
    }

    // cross edge: an edge containing >= 2 neighbors of some v, with v outside it
    let mut is_cross_edge_free = true;
    'outer: for v in 0..h.n {
        let nbrs = h.neighborhood(v).expect("v in range");
        if nbrs.len() < 2 {
            continue;
        }
        for (idx, edge) in h.edges.iter().enumerate() {
            if edge.contains(&v) {
                continue;
            }
            let hits = edge.iter().filter(|u| nbrs.contains(u)).count();
            if hits >= 2 {
                witnesses.cross_edge = Some((v, idx));
                is_cross_edge_free = false;
                break 'outer;
            }
        }
    }

    ValidationReport { uniform_r, regular_d, is_linear, is_cross_edge_free, witnesses }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn four_cycle() -> Hypergraph {
        Hypergraph::new(4, vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]]).unwrap()
    }

    #[test]
    fn four_cycle_report() {
        let rep = validate(&four_cycle());
        assert_eq!(rep.uniform_r, Some(2));
        assert_eq!(rep.regular_d, Some(2));
        assert!(rep.is_linear);
        assert!(rep.is_cross_edge_free);
        assert_eq!(rep.witnesses, Witnesses::default());
    }

    #[test]
    fn neighborhoods() {
        let h = four_cycle();
        assert_eq!(h.neighborhood(0).unwrap(), BTreeSet::from([1, 3]));
        let single = Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(single.neighborhood(0).unwrap(), BTreeSet::from([1, 2]));
        assert!(single.neighborhood(3).is_err());
    }

    #[test]
    fn degree_sum_identity() {
        // sum of degrees = r * |E| for uniform hypergraphs
        let h = four_cycle();
        let total: usize = h.degrees().iter().sum();
        assert_eq!(total, 2 * h.edge_count());
    }

    #[test]
    fn rejects_repeated_vertex() {
        let err = Hypergraph::new(2, vec![vec![0, 0]]).unwrap_err();
        assert!(matches!(err, HypergraphError::RepeatedVertex { edge: 0, vertex: 0 }));
    }

    #[test]
    fn rejects_out_of_range() {
        let err = Hypergraph::new(2, vec![vec![0, 5]]).unwrap_err();
        assert!(matches!(err, HypergraphError::VertexOutOfRange { vertex: 5, .. }));
    }

    #[test]
    fn rejects_duplicate_edges() {
        let err = Hypergraph::new(3, vec![vec![0, 1], vec![1, 0]]).unwrap_err();
        assert!(matches!(err, HypergraphError::DuplicateEdge { first: 0, second: 1 }));
    }

    #[test]
    fn rejects_empty_edge() {
        let err = Hypergraph::new(3, vec![vec![]]).unwrap_err();
        assert!(matches!(err, HypergraphError::EmptyEdge { edge: 0 }));
    }

    #[test]
    fn edgeless_is_valid_with_undefined_uniformity() {
        let h = Hypergraph::new(5, vec![]).unwrap();
        let rep = validate(&h);
        assert_eq!(rep.uniform_r, None);
        assert_eq!(rep.regular_d, None);
        assert!(rep.is_linear && rep.is_cross_edge_free);
        assert_eq!(rep.witnesses, Witnesses::default());
        let empty = Hypergraph::new(0, vec![]).unwrap();
        assert_eq!(validate(&empty).uniform_r, None);
    }

    #[test]
    fn nonlinear_witness() {
        // two edges sharing the pair {0,1}
        let h = Hypergraph::new(4, vec![vec![0, 1, 2], vec![0, 1, 3]]).unwrap();
        let rep = validate(&h);
        assert!(!rep.is_linear);
        let (u, v, e1, e2) = rep.witnesses.nonlinear.unwrap();
        assert_eq!((u, v), (0, 1));
        assert_ne!(e1, e2);
    }

    #[test]
    fn cross_edge_witness() {
        // triangle as a 2-uniform hypergraph: edge {1,2} is a cross edge for v=0
        let h = Hypergraph::new(3, vec![vec![0, 1], vec![0, 2], vec![1, 2]]).unwrap();
        let rep = validate(&h);
        assert!(!rep.is_cross_edge_free);
        let (v, e) = rep.witnesses.cross_edge.unwrap();
        assert!(!h.edges()[e].contains(&v));
    }

    #[test]
    fn load_save_round_trip() {
        let h = Hypergraph::load(br#"{"n":3,"edges":[[2,1,0]]}"#).unwrap();
        assert_eq!(h.edges(), &[vec![0, 1, 2]]);
        let again = Hypergraph::load(&h.save()).unwrap();
        assert_eq!(h, again);
    }

    #[test]
    fn load_rejects_repeated_vertex() {
        let err = Hypergraph::load(br#"{"n":2,"edges":[[0,0]]}"#).unwrap_err();
        assert!(matches!(err, HypergraphError::RepeatedVertex { .. }));
    }

    #[test]
    fn load_reports_parse_locus() {
        let err = Hypergraph::load(b"{\"n\":2,\n\"edges\":[[0,]]}").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("line"), "parse error should name the locus: {msg}");
    }

    #[test]
    fn canonical_edge_order() {
        let a = Hypergraph::new(4, vec![vec![3, 2], vec![1, 0]]).unwrap();
        let b = Hypergraph::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(a, b);
    }
}
