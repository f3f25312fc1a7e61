//! Sparse polynomials in `(x_1, ..., x_d, t)` and linear differential
//! operators acting on them.
//!
//! Exponent vectors have length `d + 1`; the last slot is the power of `t`.
//! Terms are kept in graded-lexicographic order and exact zeros are never
//! stored.

use crate::error::{Error, Result};
use crate::scalars::binomial;
use crate::univariate::UniPoly;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exponent vector under graded-lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Exponents(pub Vec<u32>);

impl Exponents {
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Exponents {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total()
            .cmp(&other.total())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exponents {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A variable of the ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    /// `x_i`, zero-based.
    X(usize),
    T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MultiPoly {
    dim_x: usize,
    terms: BTreeMap<Exponents, f64>,
}

impl MultiPoly {
    pub fn zero(dim_x: usize) -> Self {
        MultiPoly {
            dim_x,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(dim_x: usize, c: f64) -> Self {
        Self::monomial(dim_x, vec![0; dim_x + 1], c)
    }

    /// `c · x^e` for an exponent vector of length `dim_x + 1`.
    pub fn monomial(dim_x: usize, exps: Vec<u32>, c: f64) -> Self {
        assert_eq!(
            exps.len(),
            dim_x + 1,
            "exponent vector length must be d + 1"
        );
        let mut p = Self::zero(dim_x);
        p.add_term(Exponents(exps), c);
        p
    }

    pub fn var(dim_x: usize, v: Var) -> Self {
        let mut e = vec![0; dim_x + 1];
        e[Self::slot(dim_x, v)] = 1;
        Self::monomial(dim_x, e, 1.0)
    }

    pub fn x(dim_x: usize, i: usize) -> Self {
        Self::var(dim_x, Var::X(i))
    }

    pub fn t(dim_x: usize) -> Self {
        Self::var(dim_x, Var::T)
    }

    /// `‖x‖² = Σ x_i²`.
    pub fn norm_sq_x(dim_x: usize) -> Self {
        let mut p = Self::zero(dim_x);
        for i in 0..dim_x {
            let mut e = vec![0; dim_x + 1];
            e[i] = 2;
            p.add_term(Exponents(e), 1.0);
        }
        p
    }

    /// Builds from `(exponents, coefficient)` pairs, summing duplicates.
    pub fn from_terms<I: IntoIterator<Item = (Vec<u32>, f64)>>(dim_x: usize, terms: I) -> Self {
        let mut p = Self::zero(dim_x);
        for (e, c) in terms {
            assert_eq!(e.len(), dim_x + 1, "exponent vector length must be d + 1");
            p.add_term(Exponents(e), c);
        }
        p
    }

    /// A univariate polynomial placed in variable `v`.
    pub fn from_uni(dim_x: usize, poly: &UniPoly, v: Var) -> Self {
        let slot = Self::slot(dim_x, v);
        Self::from_terms(
            dim_x,
            poly.coeffs().iter().enumerate().map(|(j, c)| {
                let mut e = vec![0; dim_x + 1];
                e[slot] = j as u32;
                (e, *c)
            }),
        )
    }

    /// `f(P)` for a univariate `f`, by Horner's scheme.
    pub fn compose_uni(poly: &UniPoly, inner: &MultiPoly) -> Self {
        let d = inner.dim_x;
        poly.coeffs().iter().rev().fold(Self::zero(d), |acc, c| {
            &(&acc * inner) + &Self::constant(d, *c)
        })
    }

    fn slot(dim_x: usize, v: Var) -> usize {
        match v {
            Var::X(i) => {
                assert!(i < dim_x, "x index {i} out of range for d = {dim_x}");
                i
            }
            Var::T => dim_x,
        }
    }

    fn add_term(&mut self, e: Exponents, c: f64) {
        if c == 0.0 {
            return;
        }
        let entry = self.terms.entry(e);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = *o.get() + c;
                if s == 0.0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn dim_x(&self) -> usize {
        self.dim_x
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], f64)> + '_ {
        self.terms.iter().map(|(e, c)| (e.0.as_slice(), *c))
    }

    pub fn coeff(&self, exps: &[u32]) -> f64 {
        self.terms
            .get(&Exponents(exps.to_vec()))
            .copied()
            .unwrap_or(0.0)
    }

    /// Maximum total degree; 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.terms
            .keys()
            .map(|e| e.total() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.terms.values().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// True when every term has total degree `m`.
    pub fn is_homogeneous(&self, m: usize) -> bool {
        self.terms.keys().all(|e| e.total() as usize == m)
    }

    fn check_dim(&self, other: &MultiPoly) -> Result<()> {
        if self.dim_x == other.dim_x {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.dim_x,
                right: other.dim_x,
            })
        }
    }

    pub fn try_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), *c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.try_add(&other.scale(-1.0))
    }

    pub fn try_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_dim(other)?;
        let mut out = MultiPoly::zero(self.dim_x);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.0.iter().zip(&eb.0).map(|(a, b)| a + b).collect();
                out.add_term(Exponents(e), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: f64) -> MultiPoly {
        let mut out = MultiPoly::zero(self.dim_x);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c * s);
        }
        out
    }

    pub fn pow(&self, k: usize) -> MultiPoly {
        (0..k).fold(MultiPoly::constant(self.dim_x, 1.0), |acc, _| &acc * self)
    }

    /// Formal partial derivative.
    pub fn partial(&self, v: Var) -> MultiPoly {
        let slot = Self::slot(self.dim_x, v);
        let mut out = MultiPoly::zero(self.dim_x);
        for (e, c) in &self.terms {
            let k = e.0[slot];
            if k > 0 {
                let mut ne = e.0.clone();
                ne[slot] = k - 1;
                out.add_term(Exponents(ne), c * k as f64);
            }
        }
        out
    }

    /// Mixed partial `∂^α` for a multi-index of length `d + 1`.
    pub fn partial_multi(&self, alpha: &[u32]) -> MultiPoly {
        let mut out = MultiPoly::zero(self.dim_x);
        for (e, c) in &self.terms {
            if e.0.iter().zip(alpha).any(|(k, a)| k < a) {
                continue;
            }
            let factor: f64 =
                e.0.iter()
                    .zip(alpha)
                    .map(|(&k, &a)| (0..a).map(|j| (k - j) as f64).product::<f64>())
                    .product();
            let ne: Vec<u32> = e.0.iter().zip(alpha).map(|(k, a)| k - a).collect();
            out.add_term(Exponents(ne), c * factor);
        }
        out
    }

    /// Value at `point = (x_1, ..., x_d, t)`.
    pub fn evaluate(&self, point: &[f64]) -> Result<f64> {
        if point.len() != self.dim_x + 1 {
            return Err(Error::DimensionMismatch {
                left: self.dim_x + 1,
                right: point.len(),
            });
        }
        Ok(self.eval_unchecked(point))
    }

    pub(crate) fn eval_unchecked(&self, point: &[f64]) -> f64 {
        let max_pow = self
            .terms
            .keys()
            .flat_map(|e| e.0.iter().copied())
            .max()
            .unwrap_or(0) as usize;
        // power table per variable, so each term costs d+1 lookups
        let table: Vec<Vec<f64>> = point
            .iter()
            .map(|&v| {
                let mut row = Vec::with_capacity(max_pow + 1);
                let mut acc = 1.0;
                for _ in 0..=max_pow {
                    row.push(acc);
                    acc *= v;
                }
                row
            })
            .collect();
        let mut sum = 0.0;
        for (e, c) in &self.terms {
            let mut term = *c;
            for (slot, &k) in e.0.iter().enumerate() {
                term *= table[slot][k as usize];
            }
            sum += term;
        }
        sum
    }

    /// `t^m P(x/t)` for a polynomial `P` in `x` alone of degree at most `m`.
    pub fn homogenize(&self, m: usize) -> Result<MultiPoly> {
        let d = self.dim_x;
        let mut out = MultiPoly::zero(d);
        for (e, c) in &self.terms {
            if e.0[d] != 0 {
                return Err(Error::Domain(
                    "homogenize expects a polynomial in x alone".into(),
                ));
            }
            let j = e.total() as usize;
            if j > m {
                return Err(Error::Parity {
                    degree: j,
                    target: m,
                });
            }
            let mut ne = e.0.clone();
            ne[d] = (m - j) as u32;
            out.add_term(Exponents(ne), *c);
        }
        Ok(out)
    }

    /// Multiplies by `t^k`.
    pub fn mul_t_pow(&self, k: u32) -> MultiPoly {
        let d = self.dim_x;
        let mut out = MultiPoly::zero(d);
        for (e, c) in &self.terms {
            let mut ne = e.0.clone();
            ne[d] += k;
            out.add_term(Exponents(ne), *c);
        }
        out
    }

    fn var_names(&self) -> Vec<String> {
        let mut names: Vec<String> = if self.dim_x == 1 {
            vec!["x".to_string()]
        } else {
            (1..=self.dim_x).map(|i| format!("x{i}")).collect()
        };
        names.push("t".to_string());
        names
    }

    /// Text form, highest graded-lex monomial first.
    pub fn render(&self) -> String {
        let names = self.var_names();
        let terms: Vec<(f64, String)> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let mono: Vec<String> =
                    e.0.iter()
                        .zip(&names)
                        .filter(|(k, _)| **k > 0)
                        .map(|(k, name)| {
                            if *k == 1 {
                                name.clone()
                            } else {
                                format!("{name}^{k}")
                            }
                        })
                        .collect();
                (*c, mono.join("*"))
            })
            .collect();
        render_terms(&terms)
    }
}

/// Largest coefficient of `residual` relative to that of `reference`.
pub fn relative_residual(residual: &MultiPoly, reference: &MultiPoly) -> f64 {
    let scale = reference.max_abs_coeff();
    residual.max_abs_coeff() / if scale > 0.0 { scale } else { 1.0 }
}

fn format_coeff(c: f64) -> String {
    if c == c.trunc() && c.abs() < 1e15 {
        format!("{}", c as i64)
    } else {
        format!("{c}")
    }
}

/// Joins `(coefficient, monomial)` pairs as `3*x^2 - x + 1`.
pub fn render_terms(terms: &[(f64, String)]) -> String {
    let mut out = String::new();
    for (i, (c, mono)) in terms.iter().filter(|(c, _)| *c != 0.0).enumerate() {
        let neg = *c < 0.0;
        let mag = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mono.is_empty() {
            out.push_str(&format_coeff(mag));
        } else if mag == 1.0 {
            out.push_str(mono);
        } else {
            out.push_str(&format_coeff(mag));
            out.push('*');
            out.push_str(mono);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

// Operator forms panic on a dimension mismatch; use the `try_` methods to
// get an error instead.
impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_add(rhs)
            .expect("dimension mismatch in MultiPoly addition")
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_sub(rhs)
            .expect("dimension mismatch in MultiPoly subtraction")
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_mul(rhs)
            .expect("dimension mismatch in MultiPoly product")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(-1.0)
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: MultiPoly) -> MultiPoly {
        &self + &rhs
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        &self - &rhs
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

/// One factor of an operator word, applied right to left.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Factor {
    D(Var),
    /// `⟨x, ∇_x⟩ = Σ x_i ∂_{x_i}`.
    Euler,
    /// `Δ_x = Σ ∂²_{x_i}`.
    LaplacianX,
}

/// `coeff · F_1 F_2 ... F_k`, with `F_k` acting first.
#[derive(Debug, Clone, PartialEq)]
pub struct OpTerm {
    pub coeff: MultiPoly,
    pub factors: Vec<Factor>,
}

/// A linear differential operator with polynomial coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorSpec {
    dim_x: usize,
    terms: Vec<OpTerm>,
}

/// Elementary form `Σ_α c_α(x,t) ∂^α`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpandedOperator {
    dim_x: usize,
    terms: BTreeMap<Vec<u32>, MultiPoly>,
}

impl OperatorSpec {
    pub fn new(dim_x: usize) -> Self {
        OperatorSpec {
            dim_x,
            terms: Vec::new(),
        }
    }

    pub fn dim_x(&self) -> usize {
        self.dim_x
    }

    pub fn terms(&self) -> &[OpTerm] {
        &self.terms
    }

    /// Appends `coeff · factors`.
    pub fn term(mut self, coeff: MultiPoly, factors: &[Factor]) -> Self {
        assert_eq!(coeff.dim_x(), self.dim_x, "coefficient dimension mismatch");
        self.terms.push(OpTerm {
            coeff,
            factors: factors.to_vec(),
        });
        self
    }

    /// Appends `c · factors` with a constant coefficient.
    pub fn scalar_term(self, c: f64, factors: &[Factor]) -> Self {
        let d = self.dim_x;
        self.term(MultiPoly::constant(d, c), factors)
    }

    /// The operator `t ∂_t + ⟨x, ∇_x⟩`.
    pub fn euler_xt(dim_x: usize) -> Self {
        OperatorSpec::new(dim_x)
            .term(MultiPoly::t(dim_x), &[Factor::D(Var::T)])
            .scalar_term(1.0, &[Factor::Euler])
    }

    fn apply_factor(f: Factor, p: &MultiPoly) -> MultiPoly {
        let d = p.dim_x();
        match f {
            Factor::D(v) => p.partial(v),
            Factor::Euler => {
                // Σ x_i ∂_i multiplies each term by its x-degree
                let mut out = MultiPoly::zero(d);
                for (e, c) in &p.terms {
                    let deg: u32 = e.0[..d].iter().sum();
                    out.add_term(e.clone(), c * deg as f64);
                }
                out
            }
            Factor::LaplacianX => (0..d).fold(MultiPoly::zero(d), |acc, i| {
                &acc + &p.partial(Var::X(i)).partial(Var::X(i))
            }),
        }
    }

    /// Applies the operator factor by factor.
    pub fn apply(&self, p: &MultiPoly) -> Result<MultiPoly> {
        if p.dim_x() != self.dim_x {
            return Err(Error::DimensionMismatch {
                left: self.dim_x,
                right: p.dim_x(),
            });
        }
        let mut out = MultiPoly::zero(self.dim_x);
        for term in &self.terms {
            let inner = term
                .factors
                .iter()
                .rev()
                .fold(p.clone(), |acc, f| Self::apply_factor(*f, &acc));
            out = &out + &(&term.coeff * &inner);
        }
        Ok(out)
    }

    /// Symbolic expansion into elementary `c_α ∂^α` terms.
    pub fn expand(&self) -> ExpandedOperator {
        let d = self.dim_x;
        let mut total = ExpandedOperator::zero(d);
        for term in &self.terms {
            let mut acc = ExpandedOperator::identity(d);
            for f in term.factors.iter().rev() {
                acc = ExpandedOperator::of_factor(d, *f).compose(&acc);
            }
            total = total.add(&acc.left_multiply(&term.coeff));
        }
        total
    }
}

impl ExpandedOperator {
    fn zero(dim_x: usize) -> Self {
        ExpandedOperator {
            dim_x,
            terms: BTreeMap::new(),
        }
    }

    fn identity(dim_x: usize) -> Self {
        let mut op = Self::zero(dim_x);
        op.push(vec![0; dim_x + 1], MultiPoly::constant(dim_x, 1.0));
        op
    }

    fn push(&mut self, alpha: Vec<u32>, c: MultiPoly) {
        let slot = self
            .terms
            .entry(alpha)
            .or_insert_with(|| MultiPoly::zero(c.dim_x()));
        *slot = &*slot + &c;
    }

    fn of_factor(d: usize, f: Factor) -> Self {
        let mut op = Self::zero(d);
        match f {
            Factor::D(v) => {
                let mut a = vec![0; d + 1];
                a[MultiPoly::slot(d, v)] = 1;
                op.push(a, MultiPoly::constant(d, 1.0));
            }
            Factor::Euler => {
                for i in 0..d {
                    let mut a = vec![0; d + 1];
                    a[i] = 1;
                    op.push(a, MultiPoly::x(d, i));
                }
            }
            Factor::LaplacianX => {
                for i in 0..d {
                    let mut a = vec![0; d + 1];
                    a[i] = 2;
                    op.push(a, MultiPoly::constant(d, 1.0));
                }
            }
        }
        op
    }

    fn add(mut self, other: &ExpandedOperator) -> Self {
        for (a, c) in &other.terms {
            self.push(a.clone(), c.clone());
        }
        self
    }

    fn left_multiply(&self, c: &MultiPoly) -> Self {
        let mut op = Self::zero(self.dim_x);
        for (a, k) in &self.terms {
            op.push(a.clone(), c * k);
        }
        op
    }

    /// `self ∘ inner` through the general Leibniz rule
    /// `∂^α (c ∂^β) = Σ_{γ≤α} C(α,γ) (∂^{α-γ} c) ∂^{β+γ}`.
    fn compose(&self, inner: &ExpandedOperator) -> Self {
        let mut op = Self::zero(self.dim_x);
        for (alpha, ca) in &self.terms {
            for (beta, cb) in &inner.terms {
                for gamma in sub_indices(alpha) {
                    let weight: f64 = alpha
                        .iter()
                        .zip(&gamma)
                        .map(|(&a, &g)| binomial(a as usize, g as usize))
                        .product();
                    let rest: Vec<u32> = alpha.iter().zip(&gamma).map(|(a, g)| a - g).collect();
                    let dc = cb.partial_multi(&rest);
                    if dc.is_zero() {
                        continue;
                    }
                    let idx: Vec<u32> = beta.iter().zip(&gamma).map(|(b, g)| b + g).collect();
                    op.push(idx, (ca * &dc).scale(weight));
                }
            }
        }
        op.terms.retain(|_, c| !c.is_zero());
        op
    }

    /// Elementary terms `(α, c_α)`.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &MultiPoly)> + '_ {
        self.terms.iter().map(|(a, c)| (a.as_slice(), c))
    }

    pub fn apply(&self, p: &MultiPoly) -> Result<MultiPoly> {
        if p.dim_x() != self.dim_x {
            return Err(Error::DimensionMismatch {
                left: self.dim_x,
                right: p.dim_x(),
            });
        }
        Ok(self
            .terms
            .iter()
            .fold(MultiPoly::zero(self.dim_x), |acc, (a, c)| {
                &acc + &(c * &p.partial_multi(a))
            }))
    }
}

fn sub_indices(alpha: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::with_capacity(alpha.len())];
    for &a in alpha {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..=a).map(move |g| {
                    let mut v = prefix.clone();
                    v.push(g);
                    v
                })
            })
            .collect();
    }
    out
}

/// Short form of [`OperatorSpec::apply`].
pub fn apply_operator(op: &OperatorSpec, p: &MultiPoly) -> Result<MultiPoly> {
    op.apply(p)
}
