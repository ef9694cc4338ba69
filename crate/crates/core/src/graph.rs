//! Undirected multigraphs with stable edge indices.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// A finite loopless multigraph on vertices `0..n`.
///
/// Edge `i` is the `i`-th pair given at construction and keeps that index
/// for the lifetime of the value. Parallel edges are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    incidence: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut incidence = vec![Vec::new(); n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::argument(format!(
                    "edge {i} = ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::argument(format!("edge {i} is a self-loop at {u}")));
            }
            incidence[u].push(i);
            incidence[v].push(i);
        }
        Ok(Graph {
            n,
            edges,
            incidence,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> (usize, usize) {
        self.edges[i]
    }

    /// Edge indices incident to `v`, ascending.
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.incidence.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.incidence.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// `Some(d)` when every vertex has degree `d`.
    pub fn regular_degree(&self) -> Option<usize> {
        if self.n == 0 {
            return Some(0);
        }
        let d = self.degree(0);
        self.incidence.iter().all(|inc| inc.len() == d).then_some(d)
    }

    /// Connected components, each sorted ascending, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut label = vec![usize::MAX; self.n];
        let mut components = Vec::new();
        for start in 0..self.n {
            if label[start] != usize::MAX {
                continue;
            }
            let id = components.len();
            let mut members = vec![start];
            label[start] = id;
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &e in &self.incidence[u] {
                    let (a, b) = self.edges[e];
                    let w = if a == u { b } else { a };
                    if label[w] == usize::MAX {
                        label[w] = id;
                        members.push(w);
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            components.push(members);
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// The subgraph induced by `vertices`, relabelled `0..|s|` by ascending
    /// original id. The second value maps new ids back to original ids.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let set: BTreeSet<usize> = vertices.iter().copied().collect();
        if let Some(&bad) = set.iter().find(|&&v| v >= self.n) {
            return Err(Error::argument(format!(
                "vertex {bad} is not in a graph with {} vertices",
                self.n
            )));
        }
        let back: Vec<usize> = set.into_iter().collect();
        let mut forward = vec![usize::MAX; self.n];
        for (new, &old) in back.iter().enumerate() {
            forward[old] = new;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| forward[u] != usize::MAX && forward[v] != usize::MAX)
            .map(|&(u, v)| (forward[u], forward[v]))
            .collect();
        Ok((Graph::new(back.len(), edges)?, back))
    }

    /// Parses the edge-list format: a header `n m`, then `m` lines `u v`.
    /// Lines whose first non-blank character is `#` are skipped, as are
    /// blank lines.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (header_line, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "missing header line `n m`"))?;
        let (n, m) = parse_pair(header_line, header)?;

        let mut edges = Vec::with_capacity(m);
        for (line_no, line) in lines.by_ref() {
            if edges.len() == m {
                return Err(Error::parse(
                    line_no,
                    format!("more edge lines than the {m} declared in the header"),
                ));
            }
            let (u, v) = parse_pair(line_no, line)?;
            if u >= n || v >= n {
                return Err(Error::parse(
                    line_no,
                    format!("endpoint out of range: `{line}` with n = {n}"),
                ));
            }
            if u == v {
                return Err(Error::parse(line_no, format!("self-loop at vertex {u}")));
            }
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(Error::parse(
                text.lines().count().max(1),
                format!("header declares {m} edges but {} were given", edges.len()),
            ));
        }
        Graph::new(n, edges)
    }

    /// Canonical edge-list text; `Graph::parse` inverts it.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

fn parse_pair(line_no: usize, line: &str) -> Result<(usize, usize)> {
    let mut fields = line.split_whitespace();
    let mut next = |name: &str| -> Result<usize> {
        let raw = fields
            .next()
            .ok_or_else(|| Error::parse(line_no, format!("expected two integers, missing {name}")))?;
        raw.parse::<usize>()
            .map_err(|_| Error::parse(line_no, format!("`{raw}` is not a non-negative integer")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if let Some(extra) = fields.next() {
        return Err(Error::parse(line_no, format!("unexpected trailing field `{extra}`")));
    }
    Ok((a, b))
}

/// A split of the vertex set into `part1` (Eulerian constraint) and
/// `part2` (even constraint).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPartition {
    part1: Vec<usize>,
    part2: Vec<usize>,
}

impl VertexPartition {
    /// Builds a partition of `0..n` from the members of the first part.
    pub fn from_part1(n: usize, part1: &[usize]) -> Result<Self> {
        let mut in_first = vec![false; n];
        for &v in part1 {
            if v >= n {
                return Err(Error::argument(format!("vertex {v} out of range 0..{n}")));
            }
            if in_first[v] {
                return Err(Error::argument(format!("vertex {v} listed twice")));
            }
            in_first[v] = true;
        }
        let (a, b): (Vec<usize>, Vec<usize>) = (0..n).partition(|&v| in_first[v]);
        Ok(VertexPartition { part1: a, part2: b })
    }

    /// Parses `v1=0,3,5`; vertices not listed form the second part.
    /// `v1=` (empty list) puts every vertex in the second part.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        let list = text
            .strip_prefix("v1=")
            .ok_or_else(|| Error::parse(1, format!("partition must start with `v1=`, got `{text}`")))?;
        let mut members = Vec::new();
        for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let v = item
                .parse::<usize>()
                .map_err(|_| Error::parse(1, format!("`{item}` is not a vertex id")))?;
            members.push(v);
        }
        Self::from_part1(n, &members)
    }

    pub fn part1(&self) -> &[usize] {
        &self.part1
    }

    pub fn part2(&self) -> &[usize] {
        &self.part2
    }

    pub fn vertex_count(&self) -> usize {
        self.part1.len() + self.part2.len()
    }

    pub fn contains_part1(&self, v: usize) -> bool {
        self.part1.binary_search(&v).is_ok()
    }
}
