use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::FVector;

/// Integer polynomial, coefficients stored constant term first, no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, t: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| {
                acc * t + BigRational::from_integer(c.clone())
            })
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return IntPoly::default();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (first, sign) {
                (true, "-") => write!(f, "-")?,
                (true, _) => {}
                (false, s) => write!(f, " {s} ")?,
            }
            first = false;
            let m = c.abs();
            let coeff = if m.is_one() && k > 0 {
                String::new()
            } else {
                m.to_string()
            };
            match k {
                0 => write!(f, "{coeff}")?,
                1 => write!(f, "{coeff}t")?,
                _ => write!(f, "{coeff}t^{k}")?,
            }
        }
        Ok(())
    }
}

/// Simplex generating function f(t) = 1 + v₀t + … + v_d t^{d+1}.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GenPoly(IntPoly);

impl GenPoly {
    pub fn from_fvector(fv: &FVector) -> Self {
        let mut coeffs = vec![BigInt::one()];
        coeffs.extend(fv.counts().iter().map(|v| BigInt::from(v.clone())));
        GenPoly(IntPoly::new(coeffs))
    }

    /// Inverse of `from_fvector`. Returns `None` unless the constant term is 1
    /// and all other coefficients are non-negative.
    pub fn to_fvector(&self) -> Option<FVector> {
        let (c0, rest) = self.0.coeffs.split_first()?;
        if !c0.is_one() {
            return None;
        }
        let counts = rest
            .iter()
            .map(|c| c.to_biguint())
            .collect::<Option<Vec<_>>>()?;
        Some(FVector::new(counts))
    }

    pub fn as_poly(&self) -> &IntPoly {
        &self.0
    }

    pub fn eval(&self, t: &BigRational) -> BigRational {
        self.0.eval(t)
    }

    pub fn derivative(&self) -> IntPoly {
        self.0.derivative()
    }
}

impl Mul for &GenPoly {
    type Output = GenPoly;

    fn mul(self, rhs: &GenPoly) -> GenPoly {
        GenPoly(&self.0 * &rhs.0)
    }
}

impl fmt::Display for GenPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
