use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::genfun::{dim_avg_plus, FVector};

/// Stirling numbers of the second kind S₂(j, i) for 0 ≤ i ≤ j ≤ `max`,
/// indexed `[j][i]`.
pub fn stirling2_table(max: usize) -> Vec<Vec<BigUint>> {
    let mut table: Vec<Vec<BigUint>> = Vec::with_capacity(max + 1);
    table.push(vec![BigUint::one()]);
    for j in 1..=max {
        let prev = &table[j - 1];
        let row = (0..=j)
            .map(|i| {
                let stay = if i < j { &prev[i] * i } else { BigUint::zero() };
                let grow = if i > 0 {
                    prev[i - 1].clone()
                } else {
                    BigUint::zero()
                };
                stay + grow
            })
            .collect();
        table.push(row);
    }
    table
}

/// S₂(j, i), zero when i > j.
pub fn stirling2(j: usize, i: usize) -> BigUint {
    if i > j {
        return BigUint::zero();
    }
    stirling2_table(j).swap_remove(j).swap_remove(i)
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// Upper-triangular (d+1)×(d+1) matrix A with A[i][j] = S₂(j, i)·i!
/// (1-indexed), mapping the f-vector of a complex to that of its Barycentric
/// refinement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinementOperator {
    d: usize,
    rows: Vec<Vec<BigUint>>,
}

impl RefinementOperator {
    pub fn new(d: usize) -> Self {
        let s2 = stirling2_table(d + 1);
        let mut fact = BigUint::one();
        let rows = (1..=d + 1)
            .map(|i| {
                fact *= i;
                (1..=d + 1)
                    .map(|j| {
                        if i > j {
                            BigUint::zero()
                        } else {
                            &s2[j][i] * &fact
                        }
                    })
                    .collect()
            })
            .collect();
        RefinementOperator { d, rows }
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn size(&self) -> usize {
        self.d + 1
    }

    /// Entry A[i][j], 1-indexed.
    pub fn entry(&self, i: usize, j: usize) -> &BigUint {
        &self.rows[i - 1][j - 1]
    }

    pub fn rows(&self) -> &[Vec<BigUint>] {
        &self.rows
    }

    /// A·v for a vector of length d+1.
    pub fn apply(&self, v: &[BigUint]) -> Vec<BigUint> {
        assert_eq!(v.len(), self.size(), "vector length must be d+1");
        self.rows
            .iter()
            .enumerate()
            .map(|(i, row)| row[i..].iter().zip(&v[i..]).map(|(a, x)| a * x).sum())
            .collect()
    }

    /// The Perron–Frobenius eigenvalue (d+1)!.
    pub fn leading_eigenvalue(&self) -> BigUint {
        self.rows[self.d][self.d].clone()
    }
}

pub fn operator_matrix(d: usize) -> RefinementOperator {
    RefinementOperator::new(d)
}

/// f-vector of the Barycentric refinement, computed as A_d·fv.
pub fn refine_fvector(fv: &FVector) -> FVector {
    if fv.is_empty() {
        return FVector::default();
    }
    let op = RefinementOperator::new(fv.dim() as usize);
    FVector::new(op.apply(fv.counts()))
}

/// Dim⁺(A·fv) − Dim⁺(fv): the one-step change of average cardinality.
pub fn conjecture_a_delta(fv: &FVector) -> BigRational {
    dim_avg_plus(&refine_fvector(fv)) - dim_avg_plus(fv)
}

/// Positive probability eigenvector of A_d for the eigenvalue (d+1)!.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PfVector {
    direction: Vec<BigUint>,
    total: BigUint,
}

impl PfVector {
    /// The eigenvector scaled to coprime positive integers.
    pub fn direction(&self) -> &[BigUint] {
        &self.direction
    }

    /// |direction|₁, the common denominator of the probabilities.
    pub fn total(&self) -> &BigUint {
        &self.total
    }

    /// Entries as exact probabilities summing to 1.
    pub fn entries(&self) -> Vec<BigRational> {
        let total = BigInt::from(self.total.clone());
        self.direction
            .iter()
            .map(|x| BigRational::new(BigInt::from(x.clone()), total.clone()))
            .collect()
    }

    /// Entries as floating-point probabilities, for plotting.
    pub fn probabilities_f64(&self) -> Vec<f64> {
        // scale both sides down to ~60 significant bits before converting
        let shift = self.total.bits().saturating_sub(60);
        let total = (&self.total >> shift).to_f64().unwrap_or(f64::NAN);
        self.direction
            .iter()
            .map(|x| (x >> shift).to_f64().unwrap_or(f64::NAN) / total)
            .collect()
    }

    /// Unreduced numerator Σ (k+1)·direction_k of the mean.
    pub fn weighted_total(&self) -> BigUint {
        self.direction
            .iter()
            .enumerate()
            .map(|(k, w)| w * (k + 1))
            .sum()
    }

    /// f·(1, 2, …, d+1): the mean face cardinality under this distribution.
    pub fn mean(&self) -> BigRational {
        BigRational::new(self.weighted_total().into(), self.total.clone().into())
    }
}

/// gcd(a, b) for b much smaller than a, reducing a mod b first.
fn gcd_small(a: &BigUint, b: &BigUint) -> BigUint {
    if b.is_zero() {
        return a.clone();
    }
    (a % b).gcd(b)
}

/// Solves (A − (d+1)!·I)v = 0 by back substitution over the integers. The
/// running vector is rescaled at each row so it stays integral, with the
/// common factor removed by a gcd.
pub fn pf_eigenvector(d: usize) -> PfVector {
    let op = RefinementOperator::new(d);
    let lambda = op.leading_eigenvalue();
    let mut w: Vec<BigUint> = vec![BigUint::zero(); d + 1];
    w[d] = BigUint::one();
    for i in (0..d).rev() {
        let row = &op.rows[i];
        let sum: BigUint = (i + 1..=d).into_par_iter().map(|j| &row[j] * &w[j]).sum();
        let den = &lambda - &row[i];
        let g = gcd_small(&sum, &den);
        let scale = &den / &g;
        w[i] = sum / &g;
        if !scale.is_one() {
            w[i + 1..].par_iter_mut().for_each(|x| *x *= &scale);
        }
    }
    let smallest = w.iter().min().cloned().unwrap_or_default();
    let g = w.iter().fold(smallest, |acc, x| gcd_small(x, &acc));
    if !g.is_one() {
        w.par_iter_mut().for_each(|x| *x /= &g);
    }
    let total = w.iter().sum();
    PfVector {
        direction: w,
        total,
    }
}

/// C_d = lim Dim⁺(G_n) for a complex of top dimension d under iterated
/// refinement. For d = 0 this returns 1 by the same formula, although
/// refinement fixes 0-dimensional complexes (whose Dim⁺ is n/(n+1)).
pub fn limit_constant(d: usize) -> BigRational {
    pf_eigenvector(d).mean()
}
