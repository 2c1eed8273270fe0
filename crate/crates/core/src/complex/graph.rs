use crate::bitset::Bitset;
use crate::error::{Error, Result};

use super::{Complex, PreComplex, Simplex};

/// Simple undirected graph on the labels `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Bitset>,
}

impl Graph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        let mut g = Graph::edgeless(n);
        for (u, v) in edges {
            if u == v || u as usize >= n || v as usize >= n {
                return Err(Error::InvalidEdge(u, v));
            }
            g.adj[u as usize].insert(v as usize);
            g.adj[v as usize].insert(u as usize);
        }
        Ok(g)
    }

    pub fn edgeless(n: usize) -> Self {
        Graph {
            n,
            adj: vec![Bitset::new(n); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::edgeless(n);
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    g.adj[u].insert(v);
                }
            }
        }
        g
    }

    /// 1-skeleton of a complex; labels are compressed to `0..n` in increasing order.
    pub fn from_skeleton(g: &PreComplex) -> Self {
        let labels = g.vertices();
        let pos = |v: u32| labels.binary_search(&v).unwrap() as u32;
        let edges = g
            .faces()
            .iter()
            .filter(|f| f.cardinality() == 2)
            .map(|f| (pos(f[0]), pos(f[1])));
        Graph::new(labels.len(), edges).expect("skeleton edges are valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Bitset::count).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|row| row.contains(v))
    }

    pub fn neighbors(&self, v: usize) -> &Bitset {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        (0..self.n)
            .flat_map(|u| {
                self.adj[u]
                    .iter()
                    .filter(move |&v| v > u)
                    .map(move |v| (u as u32, v as u32))
            })
            .collect()
    }

    /// Zykov join: disjoint union plus every edge between the two parts.
    pub fn join(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let offset = self.n as u32;
        let mut edges = self.edges();
        edges.extend(
            other
                .edges()
                .into_iter()
                .map(|(u, v)| (u + offset, v + offset)),
        );
        for u in 0..self.n as u32 {
            for v in 0..other.n as u32 {
                edges.push((u, v + offset));
            }
        }
        Graph::new(n, edges).expect("join edges are valid")
    }

    /// Whitney (clique) complex: every vertex set of a complete subgraph.
    pub fn whitney_complex(&self) -> Complex {
        let mut faces = Vec::new();
        let mut stack = Vec::new();
        for v in 0..self.n {
            let mut higher = self.adj[v].clone();
            for u in 0..=v {
                higher.remove(u);
            }
            stack.push(v as u32);
            self.extend_cliques(&mut stack, &higher, &mut faces);
            stack.pop();
        }
        faces.sort_unstable();
        Complex::from_closed(PreComplex::from_canonical(faces))
    }

    fn extend_cliques(&self, clique: &mut Vec<u32>, candidates: &Bitset, out: &mut Vec<Simplex>) {
        out.push(Simplex::from_sorted(clique.clone()));
        for w in candidates.iter() {
            let mut next = candidates.intersection(&self.adj[w]);
            for u in candidates.iter().take_while(|&u| u <= w) {
                next.remove(u);
            }
            clique.push(w as u32);
            self.extend_cliques(clique, &next, out);
            clique.pop();
        }
    }
}
