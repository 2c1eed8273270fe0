use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::genfun::FVector;

fn binomial(n: &BigUint, k: usize) -> BigUint {
    if *n < BigUint::from(k) {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Largest a with C(a, k) ≤ v (k ≥ 1).
fn largest_top(v: &BigUint, k: usize) -> BigUint {
    let mut lo = BigUint::from(k);
    let mut hi = lo.clone() + 1u32;
    while binomial(&hi, k) <= *v {
        lo = hi.clone();
        hi *= 2u32;
    }
    // C(lo, k) ≤ v < C(hi, k)
    while &hi - &lo > BigUint::one() {
        let mid = (&lo + &hi) / 2u32;
        if binomial(&mid, k) <= *v {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// The k-cascade v = C(a_k, k) + C(a_{k−1}, k−1) + … + C(a_j, j) with
/// a_k > a_{k−1} > … > a_j ≥ j ≥ 1, returned as (a_i, i) pairs from the top.
pub fn cascade(v: &BigUint, k: usize) -> Vec<(BigUint, usize)> {
    let mut out = Vec::new();
    let mut rest = v.clone();
    let mut i = k;
    while !rest.is_zero() && i >= 1 {
        let a = largest_top(&rest, i);
        rest -= binomial(&a, i);
        out.push((a, i));
        i -= 1;
    }
    out
}

/// True iff `fv` is the f-vector of some simplicial complex: for every k the
/// number of (k+1)-sets is bounded by the Kruskal–Katona upper bound
/// computed from the cascade of the number of k-sets.
pub fn kruskal_katona_valid(fv: &FVector) -> bool {
    let counts = fv.counts();
    counts.windows(2).enumerate().all(|(dim, pair)| {
        let size = dim + 1;
        let bound: BigUint = cascade(&pair[0], size)
            .iter()
            .map(|(a, i)| binomial(a, i + 1))
            .sum();
        pair[1] <= bound
    })
}
