use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

/// Square bit matrix with `u64` rows.
#[derive(Debug, Clone, PartialEq, Eq)]
struct BitMatrix {
    v: usize,
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    fn new(v: usize) -> Self {
        let words = v.div_ceil(64);
        BitMatrix {
            v,
            words,
            bits: vec![0; v * words],
        }
    }

    #[inline]
    fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    #[inline]
    fn set(&mut self, i: usize, j: usize, on: bool) {
        let w = &mut self.bits[i * self.words + j / 64];
        if on {
            *w |= 1 << (j % 64);
        } else {
            *w &= !(1 << (j % 64));
        }
    }

    #[inline]
    fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }

    fn row_count(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }
}

/// An undirected loop-free graph on `0..v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: BitMatrix,
}

impl Graph {
    pub fn empty(v: usize) -> Self {
        Graph {
            adj: BitMatrix::new(v),
        }
    }

    pub fn from_edges(v: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(v);
        for &(a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        let v = self.vertex_count();
        if a >= v || b >= v {
            return Err(invalid(format!(
                "edge ({a}, {b}) out of range for {v} vertices"
            )));
        }
        if a == b {
            return Err(invalid(format!("loop at vertex {a}")));
        }
        self.adj.set(a, b, true);
        self.adj.set(b, a, true);
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.v
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj.get(a, b)
    }

    pub fn degree(&self, a: usize) -> usize {
        self.adj.row_count(a)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.vertex_count())
            .map(|a| self.degree(a))
            .sum::<usize>()
            / 2
    }

    pub fn neighbors(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.vertex_count()).filter(move |&b| self.has_edge(a, b))
    }

    /// Edges `(a, b)` with `a < b` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let v = self.vertex_count();
        (0..v)
            .flat_map(|a| {
                (a + 1..v)
                    .filter(move |&b| self.has_edge(a, b))
                    .map(move |b| (a, b))
            })
            .collect()
    }

    /// Number of common neighbours of `a` and `b`.
    #[inline]
    pub fn common_neighbors(&self, a: usize, b: usize) -> usize {
        self.adj
            .row(a)
            .iter()
            .zip(self.adj.row(b))
            .map(|(x, y)| (x & y).count_ones() as usize)
            .sum()
    }

    pub fn complement(&self) -> Graph {
        let v = self.vertex_count();
        let mut g = Graph::empty(v);
        for a in 0..v {
            for b in 0..v {
                if a != b && !self.has_edge(a, b) {
                    g.adj.set(a, b, true);
                }
            }
        }
        g
    }

    pub fn to_json(&self) -> String {
        let wire = GraphWire {
            format: GRAPH_FORMAT.into(),
            v: self.vertex_count(),
            edges: self.edges().into_iter().map(|(a, b)| [a, b]).collect(),
        };
        serde_json::to_string(&wire).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let wire: GraphWire =
            serde_json::from_str(text).map_err(|e| invalid(format!("{GRAPH_FORMAT}: {e}")))?;
        if wire.format != GRAPH_FORMAT {
            return Err(invalid(format!(
                "expected format {GRAPH_FORMAT:?}, got {:?}",
                wire.format
            )));
        }
        let edges: Vec<_> = wire.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::from_edges(wire.v, &edges)
    }

    /// Plain-text edge list: one `a b` pair per line, `#` starts a comment.
    /// A first data line holding a single integer fixes the vertex count;
    /// otherwise it is one more than the largest index seen.
    pub fn from_edge_list(text: &str) -> Result<Self> {
        let mut declared = None;
        let mut edges = Vec::new();
        let mut first = true;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let nums = line
                .split_whitespace()
                .map(|t| t.parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| invalid(format!("line {}: {e}", lineno + 1)))?;
            match nums.as_slice() {
                [v] if first => declared = Some(*v),
                [a, b] => edges.push((*a, *b)),
                _ => return Err(invalid(format!("line {}: expected `a b`", lineno + 1))),
            }
            first = false;
        }
        let v =
            declared.unwrap_or_else(|| edges.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(0));
        Graph::from_edges(v, &edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.vertex_count());
        for (a, b) in self.edges() {
            writeln!(out, "{a} {b}").unwrap();
        }
        out
    }
}

/// Loop-free directed graph; tournaments have exactly one arc per pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedGraph {
    adj: BitMatrix,
}

impl DirectedGraph {
    pub fn empty(v: usize) -> Self {
        DirectedGraph {
            adj: BitMatrix::new(v),
        }
    }

    pub fn add_arc(&mut self, a: usize, b: usize) -> Result<()> {
        let v = self.vertex_count();
        if a >= v || b >= v || a == b {
            return Err(invalid(format!("bad arc ({a}, {b})")));
        }
        self.adj.set(a, b, true);
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.v
    }

    pub fn has_arc(&self, a: usize, b: usize) -> bool {
        self.adj.get(a, b)
    }

    pub fn out_degree(&self, a: usize) -> usize {
        self.adj.row_count(a)
    }

    pub fn is_tournament(&self) -> bool {
        let v = self.vertex_count();
        (0..v).all(|a| (a + 1..v).all(|b| self.has_arc(a, b) != self.has_arc(b, a)))
    }

    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let v = self.vertex_count();
        (0..v)
            .flat_map(|a| {
                (0..v)
                    .filter(move |&b| self.has_arc(a, b))
                    .map(move |b| (a, b))
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        let wire = DigraphWire {
            format: DIGRAPH_FORMAT.into(),
            v: self.vertex_count(),
            arcs: self.arcs().into_iter().map(|(a, b)| [a, b]).collect(),
        };
        serde_json::to_string(&wire).expect("plain data serializes")
    }
}

pub const GRAPH_FORMAT: &str = "graph-v1";
pub const DIGRAPH_FORMAT: &str = "digraph-v1";

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphWire {
    format: String,
    v: usize,
    edges: Vec<[usize; 2]>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DigraphWire {
    format: String,
    v: usize,
    arcs: Vec<[usize; 2]>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn basics() {
        let c5 = cycle(5);
        assert_eq!(c5.edge_count(), 5);
        assert_eq!(c5.degree(0), 2);
        assert_eq!(c5.common_neighbors(0, 2), 1);
        assert_eq!(c5.neighbors(0).collect::<Vec<_>>(), vec![1, 4]);
        assert!(Graph::from_edges(3, &[(1, 1)]).is_err());
        assert!(Graph::from_edges(3, &[(1, 3)]).is_err());
    }

    #[test]
    fn complement_twice() {
        let g = cycle(7);
        assert_eq!(g.complement().complement(), g);
        assert_eq!(g.complement().edge_count(), 21 - 7);
    }

    #[test]
    fn wide_graph_crosses_word_boundary() {
        let g = cycle(130);
        assert!(g.has_edge(63, 64) && g.has_edge(127, 128) && g.has_edge(129, 0));
        assert_eq!(g.common_neighbors(63, 65), 1);
    }

    #[test]
    fn json_and_edge_list() {
        let g = cycle(5);
        let text = g.to_json();
        assert_eq!(
            text,
            r#"{"format":"graph-v1","v":5,"edges":[[0,1],[0,4],[1,2],[2,3],[3,4]]}"#
        );
        assert_eq!(Graph::from_json(&text).unwrap(), g);
        assert_eq!(Graph::from_edge_list(&g.to_edge_list()).unwrap(), g);
        let listed =
            Graph::from_edge_list("# pentagon\n0 1\n1 2\n2 3\n3 4 # closing\n4 0\n").unwrap();
        assert_eq!(listed, g);
        assert!(Graph::from_edge_list("0 1 2\n").is_err());
        assert!(Graph::from_json(r#"{"format":"graph-v1","v":2,"edges":[[0,0]]}"#).is_err());
    }

    #[test]
    fn tournament_flag() {
        let mut d = DirectedGraph::empty(3);
        d.add_arc(0, 1).unwrap();
        d.add_arc(1, 2).unwrap();
        assert!(!d.is_tournament());
        d.add_arc(2, 0).unwrap();
        assert!(d.is_tournament());
        assert_eq!(d.out_degree(0), 1);
    }
}
