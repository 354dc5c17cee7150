//! Partitioning a graph relative to {∅}: possible exactly when no connected
//! component is a tree. Per component, a spanning tree is rooted at a vertex
//! lying on a non-tree edge; every other vertex pairs with the first edge on
//! its way up, the root pairs with a non-tree edge at it, and the remaining
//! non-tree edges stand alone.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::complex::Complex;
use crate::face::Face;
use crate::label::Label;
use crate::relative::RelComplex;
use crate::scheme::{verify_partitioning, Interval, PartitionScheme, PartitionViolation};

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("not a graph: {0}")]
    NotAGraph(String),
    #[error("scheme failed verification: {0}")]
    Verification(#[from] PartitionViolation),
}

#[derive(Debug, Clone)]
pub enum GraphDecision {
    Found(PartitionScheme),
    /// A component on which vertices outnumber edges, so no vertex–edge
    /// matching can exist.
    TreeComponent(Complex),
}

/// Decide (g, {∅}) constructively for a pure 1-dimensional complex.
pub fn partition_graph_rel_empty(g: &Complex) -> Result<GraphDecision, GraphError> {
    if g.dim() != Some(1) || !g.is_pure() {
        return Err(GraphError::NotAGraph(
            "expected a pure 1-dimensional complex".into(),
        ));
    }

    let mut intervals: Vec<Interval> = Vec::new();
    for comp in g.vertex_components() {
        let vertices: BTreeSet<Label> = comp.vertices();
        let edges: Vec<Face> = comp.faces_of_dim(1);
        if edges.len() < vertices.len() {
            return Ok(GraphDecision::TreeComponent(comp));
        }

        // Spanning tree by breadth-first search from the smallest vertex.
        let mut adj: BTreeMap<Label, Vec<(Label, Face)>> = BTreeMap::new();
        for e in &edges {
            let vs = e.vertices();
            adj.entry(vs[0].clone())
                .or_default()
                .push((vs[1].clone(), e.clone()));
            adj.entry(vs[1].clone())
                .or_default()
                .push((vs[0].clone(), e.clone()));
        }
        let start = vertices.iter().next().unwrap().clone();
        let mut tree_edges: BTreeSet<Face> = BTreeSet::new();
        let mut seen: BTreeSet<Label> = BTreeSet::new();
        let mut queue = std::collections::VecDeque::from([start]);
        seen.insert(queue[0].clone());
        while let Some(v) = queue.pop_front() {
            for (w, e) in &adj[&v] {
                if seen.insert(w.clone()) {
                    tree_edges.insert(e.clone());
                    queue.push_back(w.clone());
                }
            }
        }
        let extras: Vec<Face> = edges
            .iter()
            .filter(|e| !tree_edges.contains(e))
            .cloned()
            .collect();

        // Root the tree at the smallest vertex on a non-tree edge and walk
        // it once to record each vertex's parent edge.
        let root = extras
            .iter()
            .flat_map(|e| e.vertices().iter().cloned())
            .min()
            .expect("a component with edges ≥ vertices has a non-tree edge");
        let mut parent_edge: BTreeMap<Label, Face> = BTreeMap::new();
        let mut queue = std::collections::VecDeque::from([root.clone()]);
        let mut seen: BTreeSet<Label> = BTreeSet::from([root.clone()]);
        while let Some(v) = queue.pop_front() {
            for (w, e) in &adj[&v] {
                if tree_edges.contains(e) && seen.insert(w.clone()) {
                    parent_edge.insert(w.clone(), e.clone());
                    queue.push_back(w.clone());
                }
            }
        }

        for v in &vertices {
            if *v != root {
                intervals.push(Interval::new(
                    Face::singleton(v.clone()),
                    parent_edge[v].clone(),
                ));
            }
        }
        let root_extra = extras
            .iter()
            .find(|e| e.contains(&root))
            .expect("root lies on a non-tree edge")
            .clone();
        intervals.push(Interval::new(Face::singleton(root), root_extra.clone()));
        for e in extras {
            if e != root_extra {
                intervals.push(Interval::new(e.clone(), e));
            }
        }
    }

    let scheme = PartitionScheme::new(intervals);
    verify_partitioning(&RelComplex::rel_empty_face(g.clone()), &scheme)?;
    Ok(GraphDecision::Found(scheme))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn found(g: &Complex) -> PartitionScheme {
        match partition_graph_rel_empty(g).unwrap() {
            GraphDecision::Found(s) => s,
            GraphDecision::TreeComponent(c) => panic!("unexpected tree component {c}"),
        }
    }

    #[test]
    fn cycles_match_each_vertex_to_an_incident_edge() {
        for n in 3..=6 {
            let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
            let edges: Vec<String> = (0..n)
                .map(|i| format!("{}{}", labels[i], labels[(i + 1) % n]))
                .collect();
            let g = Complex::from_strs(&edges.iter().map(|s| s.as_str()).collect::<Vec<_>>());
            let scheme = found(&g);
            assert_eq!(scheme.len(), n);
            for iv in &scheme.intervals {
                assert_eq!(iv.min.dim(), 0);
                assert_eq!(iv.max.dim(), 1);
                assert!(iv.min.is_subset_of(&iv.max));
            }
        }
    }

    #[test]
    fn trees_are_rejected_with_a_witness() {
        let g = Complex::from_strs(&["12", "23", "24", "45"]);
        match partition_graph_rel_empty(&g).unwrap() {
            GraphDecision::TreeComponent(c) => assert_eq!(c, g),
            GraphDecision::Found(_) => panic!("a tree is not partitionable relative to {{∅}}"),
        }
    }

    #[test]
    fn theta_graph_needs_one_self_matched_edge() {
        let g = Complex::from_strs(&["12", "25", "13", "35", "14", "45"]);
        let scheme = found(&g);
        assert_eq!(scheme.len(), 6);
        let self_matched = scheme
            .intervals
            .iter()
            .filter(|iv| iv.min == iv.max)
            .count();
        assert_eq!(self_matched, 1);
    }

    #[test]
    fn mixed_forest_reports_the_tree_part() {
        let g = Complex::from_strs(&["12", "23", "13", "45", "56"]);
        match partition_graph_rel_empty(&g).unwrap() {
            GraphDecision::TreeComponent(c) => {
                assert_eq!(c, Complex::from_strs(&["45", "56"]));
            }
            GraphDecision::Found(_) => panic!("the path component blocks partitioning"),
        }
    }

    #[test]
    fn rejects_non_graphs() {
        let err = partition_graph_rel_empty(&Complex::from_strs(&["abc"])).unwrap_err();
        assert!(matches!(err, GraphError::NotAGraph(_)));
        let err = partition_graph_rel_empty(&Complex::from_strs(&["12", "3"])).unwrap_err();
        assert!(matches!(err, GraphError::NotAGraph(_)));
    }
}
