use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Signed};
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{Complex, Graph};
use crate::error::{Error, Result};

/// Parameters of the Erdős–Rényi space G(n, p).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ErParams {
    pub n: usize,
    pub p: BigRational,
    pub seed: u64,
}

impl ErParams {
    pub fn new(n: usize, p: BigRational, seed: u64) -> Result<Self> {
        if p.is_negative() || p > BigRational::one() {
            return Err(Error::InvalidParameter(format!(
                "probability {p} outside [0, 1]"
            )));
        }
        Ok(ErParams { n, p, seed })
    }
}

/// Random stream for one sample: ChaCha8 seeded with `seed` (via
/// `seed_from_u64`), stream number `sample`. Edge `e` (in lexicographic pair
/// order) consumes the `e`-th 64-bit output, i.e. word position 2e.
fn sample_stream(seed: u64, sample: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(sample);
    rng
}

/// Sample 0 of G(n, p) for these parameters.
pub fn sample_er(params: &ErParams) -> Graph {
    sample_er_indexed(params, 0)
}

/// Sample number `sample` of G(n, p). Edge {u, v} is present iff its 64-bit
/// draw x satisfies x < p·2⁶⁴, compared exactly.
pub fn sample_er_indexed(params: &ErParams, sample: u64) -> Graph {
    let mut rng = sample_stream(params.seed, sample);
    let num = params.p.numer().magnitude() << 64;
    let den = params.p.denom().magnitude();
    let mut edges = Vec::new();
    for u in 0..params.n as u32 {
        for v in (u + 1)..params.n as u32 {
            let draw = BigUint::from(rng.next_u64());
            if draw * den < num {
                edges.push((u, v));
            }
        }
    }
    Graph::new(params.n, edges).expect("sampled edges are valid")
}

/// Random complex on labels 1..=n: `m` generators, each a set of
/// 1 + U{0..n−1} labels drawn with replacement, then closed downward.
pub fn random_complex(n: u32, m: usize, rng: &mut impl Rng) -> Complex {
    assert!(n >= 1);
    let generators: Vec<Vec<u32>> = (0..m)
        .map(|_| {
            let k = 1 + rng.gen_range(0..n);
            (0..k).map(|_| rng.gen_range(1..=n)).collect()
        })
        .collect();
    Complex::generate(generators).expect("generators are non-empty")
}

/// Seeded convenience wrapper around [`random_complex`].
pub fn random_complex_seeded(n: u32, m: usize, seed: u64) -> Complex {
    random_complex(n, m, &mut ChaCha8Rng::seed_from_u64(seed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn extreme_probabilities() {
        let empty = sample_er(&ErParams::new(8, ratio(0, 1), 3).unwrap());
        assert_eq!(empty.edge_count(), 0);
        let full = sample_er(&ErParams::new(8, ratio(1, 1), 3).unwrap());
        assert_eq!(full.edge_count(), 28);
        assert!(ErParams::new(3, ratio(3, 2), 0).is_err());
        assert!(ErParams::new(3, ratio(-1, 2), 0).is_err());
    }

    #[test]
    fn deterministic_for_fixed_seed() {
        let params = ErParams::new(10, ratio(1, 2), 42).unwrap();
        assert_eq!(sample_er(&params), sample_er(&params));
        assert_eq!(sample_er_indexed(&params, 7), sample_er_indexed(&params, 7));
        let others: Vec<_> = (0..8).map(|s| sample_er_indexed(&params, s)).collect();
        assert!(others.iter().any(|g| *g != others[0]));
    }

    #[test]
    fn edge_frequency_tracks_p() {
        let params = ErParams::new(30, ratio(1, 3), 5).unwrap();
        let edges: usize = (0..40)
            .map(|s| sample_er_indexed(&params, s).edge_count())
            .sum();
        let expected = 40.0 * 435.0 / 3.0;
        assert!((edges as f64 - expected).abs() < 0.05 * expected, "{edges}");
    }

    #[test]
    fn random_complexes_are_closed_and_bounded() {
        for seed in 0..50 {
            let g = random_complex_seeded(6, 6, seed);
            assert!(g.is_closed());
            assert!(g.vertices().iter().all(|&v| (1..=6).contains(&v)));
            assert_eq!(random_complex_seeded(6, 6, seed), g);
        }
    }
}
