//! Independent checks of Kruskal–Katona realizability: exhaustive
//! enumeration of small complexes and explicit colex-compressed complexes.

use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;

use super::kruskal_katona::kruskal_katona_valid;
use crate::complex::{Complex, Simplex};
use crate::error::{Error, Result};
use crate::genfun::FVector;

/// Largest vertex count for [`all_complexes`]; six vertices already give
/// 7.8 million complexes.
pub const MAX_COMPLEX_ENUMERATION_VERTICES: u32 = 5;

fn popcount_order(n: u32) -> Vec<u32> {
    let mut masks: Vec<u32> = (1..(1u32 << n)).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    masks
}

/// Every simplicial complex on a vertex set contained in {0, …, n−1},
/// the empty complex included, each as a bitmask of chosen subsets.
fn down_sets(n: u32) -> Vec<Vec<u32>> {
    fn go(
        order: &[u32],
        i: usize,
        chosen: &mut Vec<u32>,
        present: &mut Vec<bool>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if i == order.len() {
            out.push(chosen.clone());
            return;
        }
        go(order, i + 1, chosen, present, out);
        let m = order[i];
        let closed = m.count_ones() == 1
            || (0..32)
                .filter(|b| m & (1 << b) != 0)
                .all(|b| present[(m ^ (1 << b)) as usize]);
        if closed {
            present[m as usize] = true;
            chosen.push(m);
            go(order, i + 1, chosen, present, out);
            chosen.pop();
            present[m as usize] = false;
        }
    }
    let order = popcount_order(n);
    let mut out = Vec::new();
    let mut present = vec![false; 1 << n];
    go(&order, 0, &mut Vec::new(), &mut present, &mut out);
    out
}

fn mask_to_simplex(m: u32) -> Simplex {
    Simplex::new((0..32).filter(|b| m & (1 << b) != 0).collect()).expect("non-empty mask")
}

/// All simplicial complexes whose vertices lie in {0, …, n−1}, the empty
/// complex included (7580 of them for n = 5).
pub fn all_complexes(n: u32) -> Result<Vec<Complex>> {
    if n > MAX_COMPLEX_ENUMERATION_VERTICES {
        return Err(Error::InvalidParameter(format!(
            "complex enumeration supports n <= {MAX_COMPLEX_ENUMERATION_VERTICES}, got {n}"
        )));
    }
    down_sets(n)
        .into_iter()
        .map(|faces| Complex::from_faces(faces.into_iter().map(mask_to_simplex).collect()))
        .collect()
}

fn fvector_of_masks(faces: &[u32]) -> Vec<u64> {
    let mut counts = Vec::new();
    for m in faces {
        let k = m.count_ones() as usize - 1;
        if counts.len() <= k {
            counts.resize(k + 1, 0);
        }
        counts[k] += 1;
    }
    counts
}

/// The f-vectors realized by complexes on at most n vertices.
pub fn realized_fvectors(n: u32) -> Result<BTreeSet<Vec<u64>>> {
    if n > MAX_COMPLEX_ENUMERATION_VERTICES {
        return Err(Error::InvalidParameter(format!(
            "complex enumeration supports n <= {MAX_COMPLEX_ENUMERATION_VERTICES}, got {n}"
        )));
    }
    Ok(down_sets(n).iter().map(|f| fvector_of_masks(f)).collect())
}

fn next_same_popcount(x: u64) -> u64 {
    let c = x & x.wrapping_neg();
    let r = x + c;
    (((r ^ x) >> 2) / c) | r
}

/// Size of the shadow of the first m r-subsets of ℕ in colex order. Colex
/// order on r-subsets is numeric order on their bitmasks.
fn colex_shadow_size(r: u32, m: u64) -> usize {
    let mut shadow = HashSet::new();
    let mut x = (1u64 << r) - 1;
    for _ in 0..m {
        let mut bits = x;
        while bits != 0 {
            let b = bits & bits.wrapping_neg();
            shadow.insert(x ^ b);
            bits ^= b;
        }
        x = next_same_popcount(x);
    }
    shadow.len()
}

/// Realizability by explicit construction: the complex whose k-faces are
/// the first v_k k-faces in colex order is closed iff each shadow fits.
/// Counts above 4096 are rejected as out of range for this check.
pub fn compressed_valid(counts: &[u64]) -> Result<bool> {
    if counts.iter().any(|&v| v > 4096) || counts.len() > 60 {
        return Err(Error::InvalidParameter(
            "compression check supports counts <= 4096".into(),
        ));
    }
    for (k, pair) in counts.windows(2).enumerate() {
        if pair[1] == 0 {
            continue;
        }
        if pair[0] == 0 {
            return Ok(false);
        }
        if colex_shadow_size(k as u32 + 2, pair[1]) as u64 > pair[0] {
            return Ok(false);
        }
    }
    Ok(true)
}

fn binomial_u64(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Every vector (v₀, …, v_d) of positive integers with v_k ≤ C(v₀, k+1) + 1
/// and 1 + Σ v_k ≤ `max_augmented`. The slack of one keeps vectors just past
/// the trivial bound in the domain.
pub fn candidate_fvectors(max_augmented: u64) -> Vec<Vec<u64>> {
    fn go(seq: &mut Vec<u64>, rem: u64, out: &mut Vec<Vec<u64>>) {
        if !seq.is_empty() {
            out.push(seq.clone());
        }
        let hi = match seq.first() {
            None => rem,
            Some(&v0) => rem.min(binomial_u64(v0, seq.len() as u64 + 1) + 1),
        };
        for v in 1..=hi {
            seq.push(v);
            go(seq, rem - v, out);
            seq.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), max_augmented.saturating_sub(1), &mut out);
    out
}

/// Outcome of comparing the cascade test with an oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub checked: usize,
    pub realizable: usize,
    pub mismatches: Vec<Vec<u64>>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares the cascade test with exhaustive enumeration over every
/// candidate f-vector with at most `n` vertices.
pub fn check_against_enumeration(n: u32) -> Result<OracleReport> {
    let realized = realized_fvectors(n)?;
    let max_augmented = 1u64 << n;
    let candidates: Vec<Vec<u64>> = candidate_fvectors(max_augmented)
        .into_iter()
        .filter(|c| c[0] <= n as u64)
        .collect();
    let mismatches: Vec<Vec<u64>> = candidates
        .par_iter()
        .filter(|c| {
            kruskal_katona_valid(&FVector::from_counts(c.iter().copied())) != realized.contains(*c)
        })
        .cloned()
        .collect();
    let realizable = candidates.iter().filter(|c| realized.contains(*c)).count();
    Ok(OracleReport {
        checked: candidates.len(),
        realizable,
        mismatches,
    })
}

/// Compares the cascade test with colex compression on every candidate
/// f-vector with f(1) ≤ `max_augmented`.
pub fn check_against_compression(max_augmented: u64) -> Result<OracleReport> {
    let candidates = candidate_fvectors(max_augmented);
    let verdicts: Vec<(bool, bool)> = candidates
        .par_iter()
        .map(|c| {
            let oracle = compressed_valid(c)?;
            Ok((
                oracle,
                kruskal_katona_valid(&FVector::from_counts(c.iter().copied())),
            ))
        })
        .collect::<Result<_>>()?;
    let mismatches = candidates
        .iter()
        .zip(&verdicts)
        .filter(|(_, (a, b))| a != b)
        .map(|(c, _)| c.clone())
        .collect();
    let realizable = verdicts.iter().filter(|(a, _)| *a).count();
    Ok(OracleReport {
        checked: candidates.len(),
        realizable,
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_counts() {
        // Down-sets of the Boolean lattice containing the empty set.
        let counts: Vec<usize> = (0..=4).map(|n| down_sets(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 19, 167]);
        assert_eq!(all_complexes(5).unwrap().len(), 7580);
        assert!(all_complexes(6).is_err());
    }

    #[test]
    fn colex_shadows() {
        // First three 2-sets {0,1},{0,2},{1,2} span three vertices.
        assert_eq!(colex_shadow_size(2, 3), 3);
        assert_eq!(colex_shadow_size(2, 4), 4);
        assert_eq!(colex_shadow_size(3, 1), 3);
        assert_eq!(colex_shadow_size(3, 4), 6);
    }

    #[test]
    fn compression_examples() {
        assert!(compressed_valid(&[3, 3, 1]).unwrap());
        assert!(!compressed_valid(&[4, 5, 4]).unwrap());
        assert!(compressed_valid(&[15, 36, 16, 1]).unwrap());
    }

    #[test]
    fn candidates_small() {
        let c = candidate_fvectors(4);
        assert_eq!(
            c,
            vec![
                vec![1],
                vec![1, 1],
                vec![1, 1, 1],
                vec![2],
                vec![2, 1],
                vec![3]
            ]
        );
    }

    #[test]
    fn cascade_matches_enumeration() {
        for n in 0..=4 {
            let report = check_against_enumeration(n).unwrap();
            assert!(report.passed(), "{:?}", report.mismatches);
        }
    }

    #[test]
    fn cascade_matches_compression() {
        let report = check_against_compression(16).unwrap();
        assert!(report.passed(), "{:?}", report.mismatches);
        assert!(report.realizable > 0 && report.realizable < report.checked);
    }
}
