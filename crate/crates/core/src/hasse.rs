//! The Schur-positivity order on a finite set of diagrams: Schur-equal
//! diagrams merged into one node, strict domination between nodes, and its
//! Hasse diagram.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::schur::{SchurCache, Verdict};
use crate::shapes::SkewShape;

/// A class of Schur-equal diagrams.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HasseNode {
    pub labels: Vec<String>,
    pub shapes: Vec<SkewShape>,
}

impl HasseNode {
    /// All labels of the class joined with ` = `.
    pub fn label(&self) -> String {
        self.labels.join(" = ")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HasseGraph {
    nodes: Vec<HasseNode>,
    /// `dominance[i][j]`: node `i` strictly dominates node `j`.
    dominance: Vec<Vec<bool>>,
    /// Cover relations, `(dominating, dominated)`, sorted.
    edges: Vec<(usize, usize)>,
}

impl HasseGraph {
    /// A graph over `nodes` with the given strict domination matrix and no
    /// edges yet; see [`transitive_reduction`].
    pub fn from_dominance(nodes: Vec<HasseNode>, dominance: Vec<Vec<bool>>) -> Result<Self> {
        let n = nodes.len();
        if dominance.len() != n || dominance.iter().any(|row| row.len() != n) {
            return Err(Error::Precondition(format!(
                "dominance matrix must be {n}x{n}"
            )));
        }
        Ok(HasseGraph {
            nodes,
            dominance,
            edges: Vec::new(),
        })
    }

    pub fn nodes(&self) -> &[HasseNode] {
        &self.nodes
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn dominates(&self, i: usize, j: usize) -> bool {
        self.dominance[i][j]
    }

    /// Every strict domination `(i, j)`, in index order.
    pub fn dominance_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.nodes.len();
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.dominance[i][j])
            .collect()
    }

    /// Index of the node holding `label`.
    pub fn node_of(&self, label: &str) -> Option<usize> {
        self.nodes.iter().position(|node| node.labels.iter().any(|l| l == label))
    }

    /// Checks that strict domination is irreflexive, antisymmetric and
    /// transitive.
    pub fn check_partial_order(&self) -> Result<()> {
        let n = self.nodes.len();
        let name = |i: usize| self.nodes[i].label();
        for i in 0..n {
            if self.dominance[i][i] {
                return Err(Error::NotPartialOrder(format!("{} dominates itself", name(i))));
            }
            for j in 0..n {
                if !self.dominance[i][j] {
                    continue;
                }
                if self.dominance[j][i] {
                    return Err(Error::NotPartialOrder(format!(
                        "{} and {} dominate each other",
                        name(i),
                        name(j)
                    )));
                }
                for l in 0..n {
                    if self.dominance[j][l] && !self.dominance[i][l] {
                        return Err(Error::NotPartialOrder(format!(
                            "{} > {} > {} but not {} > {}",
                            name(i),
                            name(j),
                            name(l),
                            name(i),
                            name(l)
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Compares every pair of diagrams, merges Schur-equal ones and returns the
/// Hasse diagram of strict domination between the classes. Nodes keep the
/// order in which their first diagram appears.
pub fn build_order(diagrams: &[(String, SkewShape)], cache: &SchurCache) -> Result<HasseGraph> {
    if let Some((_, first)) = diagrams.first() {
        if let Some((_, other)) = diagrams.iter().find(|(_, d)| d.size() != first.size()) {
            return Err(Error::SizeMismatch(first.size(), other.size()));
        }
    }
    let shapes: Vec<SkewShape> = diagrams.iter().map(|(_, d)| d.clone()).collect();
    let expansions = cache.expand_all(&shapes)?;

    let mut nodes: Vec<HasseNode> = Vec::new();
    let mut reps = Vec::new();
    for ((label, shape), e) in diagrams.iter().zip(&expansions) {
        match reps.iter().position(|r| *r == e) {
            Some(i) => {
                nodes[i].labels.push(label.clone());
                nodes[i].shapes.push(shape.clone());
            }
            None => {
                reps.push(e);
                nodes.push(HasseNode {
                    labels: vec![label.clone()],
                    shapes: vec![shape.clone()],
                });
            }
        }
    }

    let n = nodes.len();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|(i, j)| i < j)
        .collect();
    let verdicts: Vec<Verdict> = pairs
        .par_iter()
        .map(|&(i, j)| {
            crate::schur::compare_expansions(reps[i], reps[j]).map(|r| r.verdict)
        })
        .collect::<Result<_>>()?;
    let mut dominance = vec![vec![false; n]; n];
    for (&(i, j), verdict) in pairs.iter().zip(verdicts) {
        match verdict {
            Verdict::FirstDominates => dominance[i][j] = true,
            Verdict::SecondDominates => dominance[j][i] = true,
            Verdict::Incomparable => {}
            Verdict::Equal => unreachable!("equal expansions were merged"),
        }
    }
    let g = HasseGraph::from_dominance(nodes, dominance)?;
    g.check_partial_order()?;
    Ok(transitive_reduction(&g))
}

/// Keeps exactly the cover relations: `i > j` with no `m` in between.
pub fn transitive_reduction(g: &HasseGraph) -> HasseGraph {
    let n = g.nodes.len();
    let edges = g
        .dominance_pairs()
        .into_iter()
        .filter(|&(i, j)| !(0..n).any(|m| g.dominance[i][m] && g.dominance[m][j]))
        .collect();
    HasseGraph {
        nodes: g.nodes.clone(),
        dominance: g.dominance.clone(),
        edges,
    }
}

/// Reachability through one or more edges.
pub fn transitive_closure(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut reach = vec![vec![false; n]; n];
    for &(i, j) in edges {
        reach[i][j] = true;
    }
    for m in 0..n {
        let via = reach[m].clone();
        for row in reach.iter_mut().filter(|row| row[m]) {
            for (r, &v) in row.iter_mut().zip(&via) {
                *r |= v;
            }
        }
    }
    reach
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Node indices ordered by label.
fn label_order(g: &HasseGraph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.nodes.len()).collect();
    order.sort_by_key(|&i| g.nodes[i].label());
    order
}

/// Graphviz text for the Hasse diagram. Nodes are numbered in label order and
/// edges run from the dominating class to the dominated one.
pub fn emit_dot(g: &HasseGraph) -> String {
    let order = label_order(g);
    let mut id = vec![0; order.len()];
    for (pos, &i) in order.iter().enumerate() {
        id[i] = pos;
    }
    let mut out = String::from("digraph hasse {\n");
    if !order.is_empty() {
        out.push_str("  // edges point from the dominating diagram to the dominated one\n");
        out.push_str("  rankdir=TB;\n");
    }
    for (pos, &i) in order.iter().enumerate() {
        let node = &g.nodes[i];
        let shapes: Vec<String> = node.shapes.iter().map(SkewShape::to_string).collect();
        let _ = writeln!(
            out,
            "  n{pos} [label=\"{}\", tooltip=\"{}\"];",
            dot_escape(&node.label()),
            dot_escape(&shapes.join(" = "))
        );
    }
    let mut edges: Vec<(usize, usize)> = g.edges.iter().map(|&(a, b)| (id[a], id[b])).collect();
    edges.sort_unstable();
    for (a, b) in edges {
        let _ = writeln!(out, "  n{a} -> n{b};");
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
struct JsonNode<'a> {
    id: usize,
    labels: &'a [String],
    shapes: &'a [SkewShape],
}

#[derive(Serialize)]
struct JsonGraph<'a> {
    nodes: Vec<JsonNode<'a>>,
    /// Cover relations as `[dominating, dominated]`.
    edges: Vec<(usize, usize)>,
    /// Every strict domination as `[dominating, dominated]`.
    dominance: Vec<(usize, usize)>,
}

/// Adjacency as JSON, with nodes numbered in label order like [`emit_dot`].
pub fn emit_json(g: &HasseGraph) -> serde_json::Value {
    let order = label_order(g);
    let mut id = vec![0; order.len()];
    for (pos, &i) in order.iter().enumerate() {
        id[i] = pos;
    }
    let renumber = |pairs: Vec<(usize, usize)>| {
        let mut v: Vec<(usize, usize)> = pairs.into_iter().map(|(a, b)| (id[a], id[b])).collect();
        v.sort_unstable();
        v
    };
    let graph = JsonGraph {
        nodes: order
            .iter()
            .enumerate()
            .map(|(pos, &i)| JsonNode {
                id: pos,
                labels: &g.nodes[i].labels,
                shapes: &g.nodes[i].shapes,
            })
            .collect(),
        edges: renumber(g.edges.clone()),
        dominance: renumber(g.dominance_pairs()),
    };
    serde_json::to_value(graph).expect("graph serializes")
}
