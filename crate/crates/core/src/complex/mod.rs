//! Simplicial complexes, pre-complexes and graphs, with the set-level
//! dimension functionals: maximal dimension, inductive dimension, Euler
//! characteristic and the unit-sphere genus sum.

mod family;
mod graph;
mod simplex;

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::bitset::Bitset;
use crate::error::{Error, Result};

pub use family::Family;
pub use graph::Graph;
pub use simplex::{Complex, PreComplex, Simplex};

/// Unit sphere S(x): faces strictly contained in or strictly containing `x`.
pub fn unit_sphere(g: &PreComplex, x: &Simplex) -> Result<PreComplex> {
    if !g.contains(x) {
        return Err(Error::FaceNotFound(x.vertices().to_vec()));
    }
    let faces = g
        .faces()
        .iter()
        .filter(|y| y.is_comparable(x))
        .cloned()
        .collect();
    Ok(PreComplex::from_canonical(faces))
}

/// Unit ball B(x) = S(x) together with `x` itself.
pub fn unit_ball(g: &PreComplex, x: &Simplex) -> Result<PreComplex> {
    if !g.contains(x) {
        return Err(Error::FaceNotFound(x.vertices().to_vec()));
    }
    let faces = g
        .faces()
        .iter()
        .filter(|y| *y == x || y.is_comparable(x))
        .cloned()
        .collect();
    Ok(PreComplex::from_canonical(faces))
}

/// Join G ⊕ H. The labels of `h` are shifted past the largest label of `g`.
pub fn join(g: &Complex, h: &Complex) -> Complex {
    let offset = g.max_label().map_or(0, |m| m + 1);
    let shifted: Vec<Simplex> = h.faces().iter().map(|y| y.shifted(offset)).collect();
    let mut faces = Vec::with_capacity(g.len() + h.len() + g.len() * h.len());
    faces.extend(g.faces().iter().cloned());
    faces.extend(shifted.iter().cloned());
    for x in g.faces() {
        for y in &shifted {
            faces.push(x.union(y));
        }
    }
    Complex::from_closed(PreComplex::new(faces))
}

/// Largest face dimension, or -1 for the empty set of faces.
pub fn dim_max(g: &PreComplex) -> i64 {
    g.faces()
        .iter()
        .map(|f| f.dimension() as i64)
        .max()
        .unwrap_or(-1)
}

/// Inductive dimension of a pre-complex: -1 when empty, otherwise one plus
/// the mean inductive dimension of the unit spheres.
///
/// Evaluated on open intervals (a, b) of the face poset with a bottom and a
/// top adjoined. Inside such an interval the unit sphere of y is the graph
/// join of (a, y) and (y, b), and dim⁺ adds under joins, so
/// dim⁺(a, b) = 1 + mean_y [dim⁺(a, y) + dim⁺(y, b)] and the memo only needs
/// one entry per comparable pair.
pub fn dim_inductive(g: &PreComplex) -> BigRational {
    FacePoset::new(g).dim_plus_whole() - BigRational::one()
}

struct FacePoset {
    n: usize,
    cardinality: Vec<usize>,
    above: Vec<Bitset>,
    below: Vec<Bitset>,
    all: Bitset,
    memo: HashMap<(usize, usize), BigRational>,
    // full Boolean intervals depend only on their rank
    boolean: HashMap<usize, BigRational>,
}

impl FacePoset {
    fn new(g: &PreComplex) -> Self {
        let faces = g.faces();
        let n = faces.len();
        let mut above = vec![Bitset::new(n); n];
        let mut below = vec![Bitset::new(n); n];
        for j in 0..n {
            // canonical order puts every proper subset before its superset
            for i in 0..j {
                if faces[i].is_proper_subset_of(&faces[j]) {
                    above[i].insert(j);
                    below[j].insert(i);
                }
            }
        }
        FacePoset {
            n,
            cardinality: faces.iter().map(Simplex::cardinality).collect(),
            above,
            below,
            all: Bitset::full(n),
            memo: HashMap::new(),
            boolean: HashMap::new(),
        }
    }

    // `a == n` stands for the adjoined bottom, `b == n + 1` for the top.
    fn interval(&self, a: usize, b: usize) -> Bitset {
        let lower = if a == self.n {
            &self.all
        } else {
            &self.above[a]
        };
        let upper = if b == self.n + 1 {
            &self.all
        } else {
            &self.below[b]
        };
        lower.intersection(upper)
    }

    /// Rank of (a, b) if every set strictly between a and b is present.
    fn boolean_rank(&self, a: usize, b: usize, size: usize) -> Option<usize> {
        if b == self.n + 1 {
            return None;
        }
        let low = if a == self.n { 0 } else { self.cardinality[a] };
        let rank = self.cardinality[b] - low;
        let full = 1usize.checked_shl(rank as u32)?.checked_sub(2)?;
        (size == full).then_some(rank)
    }

    fn dim_plus(&mut self, a: usize, b: usize) -> BigRational {
        if let Some(v) = self.memo.get(&(a, b)) {
            return v.clone();
        }
        let members = self.interval(a, b);
        let size = members.count();
        let rank = self.boolean_rank(a, b, size);
        if let Some(v) = rank.and_then(|r| self.boolean.get(&r)) {
            return v.clone();
        }
        let value = if size == 0 {
            BigRational::zero()
        } else {
            let mut total = BigRational::zero();
            for y in members.iter() {
                total += self.dim_plus(a, y) + self.dim_plus(y, b);
            }
            BigRational::one() + total / BigInt::from(size)
        };
        match rank {
            Some(r) => self.boolean.insert(r, value.clone()),
            None => self.memo.insert((a, b), value.clone()),
        };
        value
    }

    fn dim_plus_whole(&mut self) -> BigRational {
        self.dim_plus(self.n, self.n + 1)
    }
}

/// Inductive dimension of a graph, recursing on induced neighbourhoods.
pub fn dim_inductive_graph(g: &Graph) -> BigRational {
    let adj: Vec<Bitset> = (0..g.vertex_count())
        .map(|v| g.neighbors(v).clone())
        .collect();
    inductive_dimension(&adj)
}

/// Recursion on induced subgraphs: `adj[i]` is the unit sphere of `i`.
/// Memoized on the vertex subset.
fn inductive_dimension(adj: &[Bitset]) -> BigRational {
    fn go(set: &Bitset, adj: &[Bitset], memo: &mut HashMap<Bitset, BigRational>) -> BigRational {
        let size = set.count();
        if size == 0 {
            return -BigRational::one();
        }
        if let Some(v) = memo.get(set) {
            return v.clone();
        }
        let mut total = BigRational::zero();
        for x in set.iter() {
            total += go(&set.intersection(&adj[x]), adj, memo);
        }
        let value = BigRational::one() + total / BigInt::from(size);
        memo.insert(set.clone(), value.clone());
        value
    }
    let mut memo = HashMap::new();
    go(&Bitset::full(adj.len()), adj, &mut memo)
}

/// χ(G) = Σ (-1)^dim(x).
pub fn euler_characteristic(g: &PreComplex) -> i64 {
    g.faces()
        .iter()
        .map(|f| if f.dimension() % 2 == 0 { 1 } else { -1 })
        .sum()
}

/// Euler characteristic of the order complex of a face set: the alternating
/// count of chains under strict inclusion. Agrees with `euler_characteristic`
/// on complexes, and is the right notion for unit spheres, which are not closed.
pub fn order_complex_euler(g: &PreComplex) -> i64 {
    // chains[i]: signed count of chains whose top element is face i
    let faces = g.faces();
    let mut chains = vec![0i64; faces.len()];
    for i in 0..faces.len() {
        let below: i64 = (0..i)
            .filter(|&j| faces[j].is_proper_subset_of(&faces[i]))
            .map(|j| chains[j])
            .sum();
        chains[i] = 1 - below;
    }
    chains.iter().sum()
}

/// Both sides of Σ_x ω(x)(1 − χ(S(x))) = χ(G), with ω(x) = (-1)^dim(x).
pub fn sphere_genus_sum(g: &PreComplex) -> (i64, i64) {
    let lhs = g
        .faces()
        .iter()
        .map(|x| {
            let omega = if x.dimension() % 2 == 0 { 1 } else { -1 };
            let sphere = unit_sphere(g, x).expect("x is a face of g");
            omega * (1 - order_complex_euler(&sphere))
        })
        .sum();
    (lhs, order_complex_euler(g))
}
