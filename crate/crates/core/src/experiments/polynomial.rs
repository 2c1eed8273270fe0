use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Polynomial in p with exact rational coefficients, constant term first.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DimPolynomial {
    coeffs: Vec<BigRational>,
}

impl DimPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        DimPolynomial { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        DimPolynomial::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn constant(c: BigRational) -> Self {
        DimPolynomial::new(vec![c])
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, p: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * p + c)
    }

    fn pow(&self, k: usize) -> DimPolynomial {
        (0..k).fold(DimPolynomial::constant(BigRational::one()), |acc, _| {
            &acc * self
        })
    }
}

impl Add for &DimPolynomial {
    type Output = DimPolynomial;
    fn add(self, rhs: &DimPolynomial) -> DimPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigRational::zero();
        DimPolynomial::new(
            (0..len)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Mul for &DimPolynomial {
    type Output = DimPolynomial;
    fn mul(self, rhs: &DimPolynomial) -> DimPolynomial {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return DimPolynomial::default();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        DimPolynomial::new(out)
    }
}

impl fmt::Display for DimPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let negative = c < &BigRational::zero();
            match (first, negative) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            first = false;
            let mag = if negative { -c } else { c.clone() };
            let unit = mag.is_one();
            match k {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "p")?,
                1 => write!(f, "{mag}p")?,
                _ if unit => write!(f, "p^{k}")?,
                _ => write!(f, "{mag}p^{k}")?,
            }
        }
        Ok(())
    }
}

/// d_n(p) = E_p[dim] on G(n, p), from
/// d_{n+1} = 1 + Σ_{k=0}^{n} C(n,k) p^k (1−p)^{n−k} d_k with d₀ = −1.
pub fn inductive_dim_polynomial(n: usize) -> DimPolynomial {
    inductive_dim_polynomials(n)
        .pop()
        .expect("d_0 is always present")
}

/// d₀, …, d_n.
pub fn inductive_dim_polynomials(n: usize) -> Vec<DimPolynomial> {
    let p = DimPolynomial::from_integers(&[0, 1]);
    let q = DimPolynomial::from_integers(&[1, -1]);
    let one = DimPolynomial::from_integers(&[1]);
    let mut ds = vec![DimPolynomial::from_integers(&[-1])];
    for m in 0..n {
        let mut next = one.clone();
        let mut binom = BigInt::one();
        for (k, dk) in ds.iter().enumerate() {
            let weight = &(&p.pow(k) * &q.pow(m - k))
                * &DimPolynomial::constant(BigRational::from_integer(binom.clone()));
            next = &next + &(&weight * dk);
            binom = binom * (m - k) / (k + 1);
        }
        ds.push(next);
    }
    ds
}
