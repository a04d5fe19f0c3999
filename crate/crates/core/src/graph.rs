//! Weighted dual graphs of exceptional divisors.
//!
//! Vertices are exceptional curves carrying a self-intersection number and a
//! genus; edges are transverse intersection points. Generators cover the ADE
//! configurations and Hirzebruch–Jung chains of cyclic quotients.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Vertex {
    #[serde(rename = "e")]
    pub self_intersection: i64,
    #[serde(rename = "g", default)]
    pub genus: u32,
}

impl Vertex {
    pub fn rational(self_intersection: i64) -> Self {
        Vertex {
            self_intersection,
            genus: 0,
        }
    }
}

/// Connected weighted graph; multi-edges allowed, self-loops not.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GraphData", into = "GraphData")]
pub struct ResolutionGraph {
    vertices: Vec<Vertex>,
    edges: Vec<(usize, usize)>,
}

impl ResolutionGraph {
    pub fn new(vertices: Vec<Vertex>, edges: Vec<(usize, usize)>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::invalid("vertices", "graph has no vertices"));
        }
        let n = vertices.len();
        for &(a, b) in &edges {
            if a >= n || b >= n {
                return Err(Error::invalid(
                    "edges",
                    format!("edge ({a}, {b}) refers to a missing vertex (have {n})"),
                ));
            }
            if a == b {
                return Err(Error::invalid("edges", format!("self-loop at vertex {a}")));
            }
        }
        let graph = ResolutionGraph { vertices, edges };
        if !graph.is_connected() {
            return Err(Error::invalid("edges", "graph is not connected"));
        }
        Ok(graph)
    }

    /// A chain E₁ - E₂ - ⋯ of rational curves with the given self-intersections.
    pub fn chain(self_intersections: &[i64]) -> Result<Self> {
        let vertices = self_intersections
            .iter()
            .map(|&e| Vertex::rational(e))
            .collect();
        let edges = (1..self_intersections.len()).map(|i| (i - 1, i)).collect();
        ResolutionGraph::new(vertices, edges)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        let mut adjacency = vec![Vec::new(); n];
        for &(a, b) in &self.edges {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// First Betti number of the graph, |E| − |V| + 1 for a connected graph.
    pub fn cycle_rank(&self) -> usize {
        self.edges.len() + 1 - self.vertices.len()
    }

    pub fn total_genus(&self) -> u64 {
        self.vertices.iter().map(|v| u64::from(v.genus)).sum()
    }

    /// Eᵢ·Eⱼ: self-intersections on the diagonal, edge multiplicities off it.
    pub fn intersection_matrix(&self) -> IntMatrix {
        let n = self.vertices.len();
        let mut m = IntMatrix::zeros(n, n);
        for (i, v) in self.vertices.iter().enumerate() {
            m[(i, i)] = BigInt::from(v.self_intersection);
        }
        for &(a, b) in &self.edges {
            m[(a, b)] += 1;
            m[(b, a)] += 1;
        }
        m
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphData {
    vertices: Vec<Vertex>,
    #[serde(default)]
    edges: Vec<(usize, usize)>,
}

impl TryFrom<GraphData> for ResolutionGraph {
    type Error = Error;

    fn try_from(data: GraphData) -> Result<Self> {
        ResolutionGraph::new(data.vertices, data.edges)
    }
}

impl From<ResolutionGraph> for GraphData {
    fn from(g: ResolutionGraph) -> Self {
        GraphData {
            vertices: g.vertices,
            edges: g.edges,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AdeKind {
    A,
    D,
    E,
}

impl fmt::Display for AdeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AdeKind::A => "A",
            AdeKind::D => "D",
            AdeKind::E => "E",
        })
    }
}

/// Checks the rank range of a Dynkin type: A_n (n ≥ 1), D_n (n ≥ 4), E_6..E_8.
pub fn validate_ade_rank(kind: AdeKind, n: u32) -> Result<()> {
    let ok = match kind {
        AdeKind::A => n >= 1,
        AdeKind::D => n >= 4,
        AdeKind::E => (6..=8).contains(&n),
    };
    if ok {
        Ok(())
    } else {
        let rule = match kind {
            AdeKind::A => "A requires n ≥ 1",
            AdeKind::D => "D requires n ≥ 4",
            AdeKind::E => "E requires n ∈ {6, 7, 8}",
        };
        Err(Error::invalid("n", format!("{rule}, got {n}")))
    }
}

/// Edges of the Dynkin diagram in the fixed vertex order (0-based):
/// A_n a chain; D_n a chain 0..n−2 with vertices n−2 and n−1 both hanging
/// off vertex n−3; E_n a chain 0..n−2 with vertex n−1 attached to vertex 2.
pub fn dynkin_edges(kind: AdeKind, n: u32) -> Result<Vec<(usize, usize)>> {
    validate_ade_rank(kind, n)?;
    let n = n as usize;
    let edges = match kind {
        AdeKind::A => (1..n).map(|i| (i - 1, i)).collect(),
        AdeKind::D => {
            let mut e: Vec<_> = (1..n - 1).map(|i| (i - 1, i)).collect();
            e.push((n - 3, n - 1));
            e
        }
        AdeKind::E => {
            let mut e: Vec<_> = (1..n - 1).map(|i| (i - 1, i)).collect();
            e.push((2, n - 1));
            e
        }
    };
    Ok(edges)
}

/// Minimal resolution graph of the rational double point of the given type:
/// all curves rational with self-intersection −2.
pub fn ade_graph(kind: AdeKind, n: u32) -> Result<ResolutionGraph> {
    let edges = dynkin_edges(kind, n)?;
    ResolutionGraph::new(vec![Vertex::rational(-2); n as usize], edges)
}

/// Hirzebruch–Jung expansion n/q = b₁ − 1/(b₂ − 1/(⋯ − 1/b_s)), all bᵢ ≥ 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ContinuedFraction {
    pub n: u64,
    pub q: u64,
    pub terms: Vec<u64>,
}

impl ContinuedFraction {
    /// Evaluates the terms back to a reduced fraction (numerator, denominator).
    pub fn evaluate(&self) -> (BigInt, BigInt) {
        evaluate_terms(&self.terms)
    }
}

/// Evaluates b₁ − 1/(b₂ − ⋯) from the innermost term outwards. Each step is a
/// unimodular transformation of (p, q), so the result is already reduced.
pub fn evaluate_terms(terms: &[u64]) -> (BigInt, BigInt) {
    let Some((&last, rest)) = terms.split_last() else {
        return (BigInt::one(), BigInt::from(0));
    };
    let (mut p, mut q) = (BigInt::from(last), BigInt::one());
    for &b in rest.iter().rev() {
        let next = BigInt::from(b) * &p - &q;
        q = std::mem::replace(&mut p, next);
    }
    (p, q)
}

/// Continued fraction and resolution chain of the cyclic quotient 1/n(1, q).
pub fn hirzebruch_jung(n: u64, q: u64) -> Result<(ContinuedFraction, ResolutionGraph)> {
    if n < 2 {
        return Err(Error::invalid(
            "n",
            format!("n must be at least 2, got {n}"),
        ));
    }
    if q < 1 || q >= n {
        return Err(Error::invalid(
            "q",
            format!("q must satisfy 1 ≤ q < {n}, got {q}"),
        ));
    }
    if n.gcd(&q) != 1 {
        return Err(Error::invalid("q", format!("gcd({n}, {q}) ≠ 1")));
    }
    let mut terms = Vec::new();
    let (mut num, mut den) = (n, q);
    loop {
        let b = num.div_ceil(den);
        terms.push(b);
        let rem = b * den - num;
        if rem == 0 {
            break;
        }
        (num, den) = (den, rem);
    }
    let weights: Vec<i64> = terms.iter().map(|&b| -(b as i64)).collect();
    let graph = ResolutionGraph::chain(&weights)?;
    Ok((ContinuedFraction { n, q, terms }, graph))
}
