use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::complex::{dim_inductive, Complex, Graph};
use crate::error::{Error, Result};
use crate::genfun::{dim_avg_plus, FVector};

/// Largest vertex count accepted by the exhaustive routines (2¹⁵ graphs).
pub const MAX_ENUMERATION_VERTICES: usize = 6;

fn check_size(n: usize) -> Result<()> {
    if n > MAX_ENUMERATION_VERTICES {
        return Err(Error::InvalidParameter(format!(
            "exhaustive enumeration supports n <= {MAX_ENUMERATION_VERTICES}, got {n}"
        )));
    }
    Ok(())
}

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Graph whose edges are the set bits of `mask`, bit e standing for the e-th
/// pair (u, v), u < v, in lexicographic order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut e = 0;
    for u in 0..n as u32 {
        for v in (u + 1)..n as u32 {
            if mask & (1 << e) != 0 {
                edges.push((u, v));
            }
            e += 1;
        }
    }
    Graph::new(n, edges).expect("mask edges are valid")
}

/// All 2^C(n,2) labeled graphs on n vertices, in edge-bitmask order.
pub fn enumerate_labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    check_size(n)?;
    let total = 1u64 << pair_count(n);
    Ok((0..total).map(move |mask| graph_from_mask(n, mask)))
}

/// δ(G) = Dim⁺(G) − dim⁺(G)/2, non-negative for every complex.
pub fn delta(g: &Complex) -> BigRational {
    let dim_plus = dim_inductive(g) + BigRational::one();
    dim_avg_plus(&FVector::of(g)) - dim_plus / BigInt::from(2)
}

/// Exact E_p[Dim⁺] over all labeled graphs on n vertices, each weighted by
/// p^e (1 − p)^(C(n,2) − e).
pub fn er_dim_avg_expectation(n: usize, p: &BigRational) -> Result<BigRational> {
    check_size(n)?;
    let pairs = pair_count(n);
    let q = BigRational::one() - p;
    let weights: Vec<BigRational> = (0..=pairs)
        .map(|e| num_traits::pow(p.clone(), e) * num_traits::pow(q.clone(), pairs - e))
        .collect();
    let total = (0..1u64 << pairs)
        .into_par_iter()
        .map(|mask| {
            let g = graph_from_mask(n, mask);
            let fv = FVector::of(&g.whitney_complex());
            dim_avg_plus(&fv) * &weights[mask.count_ones() as usize]
        })
        .reduce(BigRational::zero, |a, b| a + b);
    Ok(total)
}

/// A graph on n vertices maximizing δ of its Whitney complex, with the
/// maximum. Ties go to the smallest edge bitmask.
pub fn delta_max(n: usize) -> Result<(Graph, BigRational)> {
    check_size(n)?;
    let (mask, value) = (0..1u64 << pair_count(n))
        .into_par_iter()
        .map(|mask| (mask, delta(&graph_from_mask(n, mask).whitney_complex())))
        .reduce_with(|a, b| {
            if b.1 > a.1 || (b.1 == a.1 && b.0 < a.0) {
                b
            } else {
                a
            }
        })
        .expect("at least one graph");
    Ok((graph_from_mask(n, mask), value))
}

/// Every labeled graph on n vertices attaining the maximal δ.
pub fn delta_maximizers(n: usize) -> Result<(Vec<Graph>, BigRational)> {
    let (_, best) = delta_max(n)?;
    let graphs = (0..1u64 << pair_count(n))
        .into_par_iter()
        .filter(|&mask| delta(&graph_from_mask(n, mask).whitney_complex()) == best)
        .map(|mask| graph_from_mask(n, mask))
        .collect();
    Ok((graphs, best))
}

/// Distinct f-vectors of Whitney complexes on at most `max_n` vertices whose
/// Dim⁺ equals `target`, each with one witness graph.
pub fn dim_avg_level_set(target: &BigRational, max_n: usize) -> Result<Vec<(FVector, Graph)>> {
    check_size(max_n)?;
    let mut found: Vec<(FVector, Graph)> = Vec::new();
    for n in 1..=max_n {
        for g in enumerate_labeled_graphs(n)? {
            let fv = FVector::of(&g.whitney_complex());
            if dim_avg_plus(&fv) == *target && !found.iter().any(|(f, _)| *f == fv) {
                found.push((fv, g));
            }
        }
    }
    Ok(found)
}
