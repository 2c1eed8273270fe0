//! f-vectors, the simplex generating function f(t) and the functionals read
//! off from it: average simplex cardinality f'(1)/f(1), the log-derivative,
//! genus f(-1) and central moments of the face cardinality.

mod poly;

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::complex::PreComplex;
use crate::error::{Error, Result};

pub use poly::{GenPoly, IntPoly};

/// Face counts by dimension, (v₀, …, v_d). Trailing zeros are trimmed, so
/// the empty complex has the empty vector.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FVector {
    counts: Vec<BigUint>,
}

impl FVector {
    pub fn new(mut counts: Vec<BigUint>) -> Self {
        while counts.last().is_some_and(Zero::is_zero) {
            counts.pop();
        }
        FVector { counts }
    }

    pub fn from_counts<I: IntoIterator<Item = u64>>(counts: I) -> Self {
        FVector::new(counts.into_iter().map(BigUint::from).collect())
    }

    pub fn of(g: &PreComplex) -> Self {
        let top = g.faces().iter().map(|f| f.cardinality()).max().unwrap_or(0);
        let mut counts = vec![0u64; top];
        for f in g.faces() {
            counts[f.dimension()] += 1;
        }
        FVector::from_counts(counts)
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Top dimension d, or -1 for the empty vector.
    pub fn dim(&self) -> i64 {
        self.counts.len() as i64 - 1
    }

    /// Number of faces |G|.
    pub fn face_count(&self) -> BigUint {
        self.counts.iter().sum()
    }

    /// f(1) = |G| + 1.
    pub fn augmented_count(&self) -> BigUint {
        self.face_count() + 1u32
    }

    /// Σ_x |x| = f'(1).
    pub fn cardinality_sum(&self) -> BigUint {
        self.counts
            .iter()
            .enumerate()
            .map(|(k, v)| v * (k + 1))
            .sum()
    }

    pub fn gen_poly(&self) -> GenPoly {
        GenPoly::from_fvector(self)
    }

    /// Pads with zeros to length `len` (no-op if already longer).
    pub fn padded(&self, len: usize) -> Vec<BigUint> {
        let mut v = self.counts.clone();
        v.resize(len.max(v.len()), BigUint::zero());
        v
    }
}

impl From<Vec<BigUint>> for FVector {
    fn from(v: Vec<BigUint>) -> Self {
        FVector::new(v)
    }
}

impl From<FVector> for Vec<BigUint> {
    fn from(f: FVector) -> Self {
        f.counts
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.counts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

fn rat(n: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(n.clone()))
}

/// Dim⁺ = f'(1)/f(1) = Σ|x| / (|G|+1). Zero for the empty complex.
pub fn dim_avg_plus(fv: &FVector) -> BigRational {
    rat(&fv.cardinality_sum()) / rat(&fv.augmented_count())
}

/// Dim = Dim⁺ − 1.
pub fn dim_avg(fv: &FVector) -> BigRational {
    dim_avg_plus(fv) - BigRational::one()
}

/// f'(t)/f(t). Fails where f vanishes, which can only happen for t ≤ 0.
pub fn log_derivative(fv: &FVector, t: &BigRational) -> Result<BigRational> {
    let f = fv.gen_poly();
    let value = f.eval(t);
    if value.is_zero() {
        return Err(Error::Pole(t.to_string()));
    }
    Ok(f.derivative().eval(t) / value)
}

/// f(−1) = 1 − χ(G).
pub fn genus(fv: &FVector) -> BigInt {
    let value = fv.gen_poly().eval(&-BigRational::one());
    debug_assert!(value.is_integer());
    value.to_integer()
}

/// Σ_{x∈G} (|x| − m)^k / (|G|+1) with m = Dim⁺(G). The empty set is absent
/// from the sum but counted in the denominator, so the first moment is
/// m/(|G|+1) rather than zero.
pub fn cardinality_moment(fv: &FVector, k: u32) -> BigRational {
    let m = dim_avg_plus(fv);
    let sum = fv
        .counts()
        .iter()
        .enumerate()
        .fold(BigRational::zero(), |acc, (dim, v)| {
            let dev = BigRational::from_integer(BigInt::from(dim + 1)) - &m;
            acc + num_traits::pow(dev, k as usize) * rat(v)
        });
    sum / rat(&fv.augmented_count())
}

/// Var⁺(G), the second central moment.
pub fn variance_plus(fv: &FVector) -> BigRational {
    cardinality_moment(fv, 2)
}
