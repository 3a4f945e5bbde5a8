//! Dense univariate polynomials over the rationals.
//!
//! `UniPoly` stores coefficients in ascending degree order. The
//! representation is canonical: the coefficient vector is empty for the zero
//! polynomial and otherwise ends in a nonzero leading coefficient. Exact
//! Lagrange interpolation on integer nodes is provided for reconstructing
//! polynomials whose degree bound is known a priori.

use crate::rational::{rat, Rational};
use num_traits::Zero;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Dense univariate polynomial with rational coefficients, index = degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    /// Constant polynomial.
    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial `c * x^deg`.
    pub fn monomial(c: Rational, deg: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); deg + 1];
        coeffs[deg] = c;
        Self::from_coeffs(coeffs)
    }

    /// Build from ascending coefficients, stripping trailing zeros.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut p = UniPoly { coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Leading coefficient, or `None` for the zero polynomial.
    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Ascending coefficient slice.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Evaluate at a rational point (Horner).
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Evaluate at an integer point.
    pub fn eval_int(&self, x: i64) -> Rational {
        self.eval(&rat(x))
    }

    /// Scale by a rational constant.
    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Compose with the shift `x -> x + c`.
    pub fn shift(&self, c: &Rational) -> Self {
        // Horner on polynomial coefficients: p(x+c) built from the top down.
        let mut acc = UniPoly::zero();
        let x_plus_c = UniPoly::from_coeffs(vec![c.clone(), rat(1)]);
        for a in self.coeffs.iter().rev() {
            acc = &(&acc * &x_plus_c) + &UniPoly::constant(a.clone());
        }
        acc
    }

    /// The falling-factorial polynomial `binom(x, k) = x(x-1)...(x-k+1)/k!`.
    pub fn binom_poly(k: u64) -> Self {
        let mut p = UniPoly::constant(rat(1));
        for t in 0..k {
            let factor = UniPoly::from_coeffs(vec![rat(-(t as i64)), rat(1)]);
            p = &p * &factor;
        }
        p.scale(&rat(crate::rational::factorial(k)).recip())
    }

    /// Unique polynomial of degree `< nodes.len()` through the given
    /// `(x, y)` pairs, by exact Lagrange interpolation. Nodes must be
    /// pairwise distinct.
    pub fn interpolate(nodes: &[(Rational, Rational)]) -> Self {
        let mut result = UniPoly::zero();
        for (i, (xi, yi)) in nodes.iter().enumerate() {
            if yi.is_zero() {
                continue;
            }
            let mut basis = UniPoly::constant(rat(1));
            let mut denom = Rational::from_integer(1.into());
            for (j, (xj, _)) in nodes.iter().enumerate() {
                if i == j {
                    continue;
                }
                basis = &basis * &UniPoly::from_coeffs(vec![-xj.clone(), rat(1)]);
                denom *= xi - xj;
            }
            result = &result + &basis.scale(&(yi / denom));
        }
        result
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        UniPoly::from_coeffs(coeffs)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        UniPoly::from_coeffs(coeffs)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(coeffs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "({})*m", c)?,
                _ => write!(f, "({})*m^{}", c, i)?,
            }
        }
        Ok(())
    }
}
