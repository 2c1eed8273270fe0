use num_bigint::BigUint;
use rayon::prelude::*;

use crate::complex::{Complex, PreComplex, Simplex};
use crate::error::{Error, Result};
use crate::genfun::FVector;

use super::refine_fvector;

pub const DEFAULT_FACE_CAP: usize = 5_000_000;

/// Face cap for explicit refinement: `SIMPDIM_FACE_CAP` if set and valid,
/// otherwise [`DEFAULT_FACE_CAP`].
pub fn face_cap_from_env() -> usize {
    std::env::var("SIMPDIM_FACE_CAP")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_FACE_CAP)
}

/// Barycentric refinement with the face cap taken from the environment.
pub fn refine(g: &Complex) -> Result<Complex> {
    refine_with_cap(g, face_cap_from_env())
}

/// Order complex of `g`: one vertex per face (labelled by its index in
/// canonical order) and one face per chain x₀ ⊊ x₁ ⊊ … of faces.
pub fn refine_with_cap(g: &Complex, cap: usize) -> Result<Complex> {
    let predicted = refine_fvector(&FVector::of(g)).face_count();
    if predicted > BigUint::from(cap) {
        return Err(Error::FaceCapExceeded {
            predicted: predicted.to_string(),
            cap,
        });
    }
    let faces = g.faces();
    let below: Vec<Vec<u32>> = faces
        .par_iter()
        .map(|x| {
            let mut subs: Vec<u32> = x
                .subfaces()
                .filter(|y| y.cardinality() < x.cardinality())
                .map(|y| g.index_of(&y).expect("complex is closed") as u32)
                .collect();
            subs.sort_unstable();
            subs
        })
        .collect();

    let mut chains: Vec<Simplex> = (0..faces.len() as u32)
        .into_par_iter()
        .flat_map_iter(|top| {
            let mut out = Vec::new();
            let mut chain = vec![top];
            descend(&below, &mut chain, &mut out);
            out
        })
        .collect();
    chains.par_sort_unstable();
    Ok(Complex::from_closed(PreComplex::from_canonical(chains)))
}

// `chain` is strictly decreasing; every extension by a proper subface of its
// last element is again a chain.
fn descend(below: &[Vec<u32>], chain: &mut Vec<u32>, out: &mut Vec<Simplex>) {
    let mut sorted = chain.clone();
    sorted.reverse();
    out.push(Simplex::from_sorted(sorted));
    let last = *chain.last().unwrap() as usize;
    for &y in &below[last] {
        chain.push(y);
        descend(below, chain, out);
        chain.pop();
    }
}
