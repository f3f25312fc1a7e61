use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Dense univariate polynomial, `coeffs[j]` multiplies `x^j`.
#[derive(Debug, Clone, PartialEq, Default, serde::Serialize, serde::Deserialize)]
pub struct UniPoly {
    coeffs: Vec<f64>,
}

impl UniPoly {
    /// Builds a polynomial and trims trailing zeros.
    pub fn new(coeffs: Vec<f64>) -> Self {
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: f64) -> Self {
        UniPoly::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        UniPoly::new(vec![0.0, 1.0])
    }

    /// `a x + b`.
    pub fn linear(a: f64, b: f64) -> Self {
        UniPoly::new(vec![b, a])
    }

    /// `x^k`.
    pub fn monomial(k: usize, c: f64) -> Self {
        let mut coeffs = vec![0.0; k + 1];
        coeffs[k] = c;
        UniPoly::new(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0.0) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Coefficient of `x^j` (zero past the degree).
    pub fn coeff(&self, j: usize) -> f64 {
        self.coeffs.get(j).copied().unwrap_or(0.0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> f64 {
        self.coeffs.last().copied().unwrap_or(0.0)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, c)| c * j as f64)
                .collect(),
        )
    }

    pub fn scale(&self, s: f64) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![0.0; k];
        coeffs.extend_from_slice(&self.coeffs);
        UniPoly::new(coeffs)
    }

    /// `f(a x)`.
    pub fn dilate(&self, a: f64) -> UniPoly {
        let mut s = 1.0;
        UniPoly::new(
            self.coeffs
                .iter()
                .map(|c| {
                    let v = c * s;
                    s *= a;
                    v
                })
                .collect(),
        )
    }

    /// Divides by `x^k`; errors if a coefficient below `x^k` is nonzero.
    pub fn unshift(&self, k: usize) -> Option<UniPoly> {
        if self.coeffs.iter().take(k).any(|c| *c != 0.0) {
            return None;
        }
        Some(UniPoly::new(self.coeffs.iter().skip(k).copied().collect()))
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// Renders with the given variable name, highest power first.
    pub fn render(&self, var: &str) -> String {
        let terms: Vec<(f64, String)> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| **c != 0.0)
            .map(|(j, c)| {
                let mono = match j {
                    0 => String::new(),
                    1 => var.to_string(),
                    _ => format!("{var}^{j}"),
                };
                (*c, mono)
            })
            .collect();
        crate::polyalg::render_terms(&terms)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("x"))
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|j| self.coeff(j) + rhs.coeff(j)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|j| self.coeff(j) - rhs.coeff(j)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![0.0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        self.scale(-1.0)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for UniPoly {
            type Output = UniPoly;
            fn $m(self, rhs: UniPoly) -> UniPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Largest coefficient magnitude of `residual` relative to that of `reference`.
///
/// The zero reference is treated as having unit scale.
pub fn relative_residual(residual: &UniPoly, reference: &UniPoly) -> f64 {
    let scale = reference.max_abs_coeff();
    let scale = if scale > 0.0 { scale } else { 1.0 };
    residual.max_abs_coeff() / scale
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_calculus() {
        let p = UniPoly::new(vec![1.0, -2.0, 3.0]);
        let q = UniPoly::linear(1.0, 1.0);
        assert_eq!((&p * &q).coeffs(), &[1.0, -1.0, 1.0, 3.0]);
        assert_eq!(p.derivative().coeffs(), &[-2.0, 6.0]);
        assert_eq!(p.eval(2.0), 9.0);
        assert!((&p - &p).is_zero());
        assert_eq!(p.shift(2).unshift(2).unwrap(), p);
        assert_eq!(p.dilate(2.0).coeffs(), &[1.0, -4.0, 12.0]);
    }

    #[test]
    fn rendering() {
        assert_eq!(
            UniPoly::new(vec![1.0, -14.0, 42.0]).render("t"),
            "42*t^2 - 14*t + 1"
        );
        assert_eq!(UniPoly::new(vec![-1.0, 8.0]).render("t"), "8*t - 1");
        assert_eq!(UniPoly::zero().render("t"), "0");
    }
}
