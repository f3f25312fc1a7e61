//! Jacobi, Laguerre and Gegenbauer polynomials.

use super::poly::UniPoly;
use crate::error::{Error, Result};
use crate::scalars::{
    binomial, factorial, falling_factorial, gamma_fn, hyper_terminating, pochhammer,
};

fn check_gt_minus_one(name: &str, value: f64) -> Result<()> {
    if value > -1.0 {
        Ok(())
    } else {
        Err(Error::validity(
            format!("{name} > -1"),
            format!("{name} = {value}"),
        ))
    }
}

/// Polynomial `Σ_k a_k u^k` with `u = (1-t)/2`, expanded in powers of `t`.
fn series_in_half_one_minus_t(terms: &[f64]) -> UniPoly {
    let u = UniPoly::linear(-0.5, 0.5);
    terms.iter().rev().fold(UniPoly::zero(), |acc, a| {
        &(&acc * &u) + &UniPoly::constant(*a)
    })
}

/// Terms `(-n)_k (b)_k / ((c)_k k!)` of a terminating 2F1.
fn two_f_one_terms(n: usize, b: f64, c: f64) -> Vec<f64> {
    let mut terms = Vec::with_capacity(n + 1);
    let mut term = 1.0;
    terms.push(term);
    for k in 0..n {
        let kf = k as f64;
        term *= (kf - n as f64) * (b + kf) / ((c + kf) * (kf + 1.0));
        terms.push(term);
    }
    terms
}

/// `P_n^{(α,β)}` as a polynomial, from its terminating 2F1 form.
pub fn jacobi_poly(n: usize, alpha: f64, beta: f64) -> Result<UniPoly> {
    check_gt_minus_one("alpha", alpha)?;
    check_gt_minus_one("beta", beta)?;
    let pref = pochhammer(alpha + 1.0, n) / factorial(n);
    let terms = two_f_one_terms(n, n as f64 + alpha + beta + 1.0, alpha + 1.0);
    Ok(series_in_half_one_minus_t(&terms).scale(pref))
}

/// `P_n^{(α,β)}(t)`.
pub fn eval_jacobi(n: usize, alpha: f64, beta: f64, t: f64) -> Result<f64> {
    check_gt_minus_one("alpha", alpha)?;
    check_gt_minus_one("beta", beta)?;
    let pref = pochhammer(alpha + 1.0, n) / factorial(n);
    let f = hyper_terminating(
        &[-(n as f64), n as f64 + alpha + beta + 1.0],
        &[alpha + 1.0],
        (1.0 - t) / 2.0,
    )?;
    Ok(pref * f)
}

/// Jacobi normalization `c_{α,β} = Γ(α+β+2) / (Γ(α+1) Γ(β+1))`.
pub fn jacobi_normalization(alpha: f64, beta: f64) -> Result<f64> {
    check_gt_minus_one("alpha", alpha)?;
    check_gt_minus_one("beta", beta)?;
    Ok(gamma_fn(alpha + beta + 2.0)? / (gamma_fn(alpha + 1.0)? * gamma_fn(beta + 1.0)?))
}

/// Norm square of `P_n^{(α,β)}` for the measure
/// `c_{α,β} 2^{-α-β-1} (1-t)^α (1+t)^β dt` on `[-1,1]`.
///
/// `h_0 = 1` always; the general formula is `0/0` there when `α+β = -1`.
pub fn norm_jacobi(n: usize, alpha: f64, beta: f64) -> Result<f64> {
    check_gt_minus_one("alpha", alpha)?;
    check_gt_minus_one("beta", beta)?;
    if n == 0 {
        return Ok(1.0);
    }
    let nf = n as f64;
    let s = alpha + beta;
    Ok(
        pochhammer(alpha + 1.0, n) * pochhammer(beta + 1.0, n) * (s + nf + 1.0)
            / (factorial(n) * pochhammer(s + 2.0, n) * (s + 2.0 * nf + 1.0)),
    )
}

/// `L_n^{α}` as a polynomial, by the three-term recurrence
/// `(k+1) L_{k+1} = (2k+1+α-t) L_k - (k+α) L_{k-1}`.
pub fn laguerre_poly(n: usize, alpha: f64) -> Result<UniPoly> {
    check_gt_minus_one("alpha", alpha)?;
    let mut prev = UniPoly::constant(1.0);
    if n == 0 {
        return Ok(prev);
    }
    let mut cur = UniPoly::linear(-1.0, alpha + 1.0);
    for k in 1..n {
        let kf = k as f64;
        let next = (&(&UniPoly::linear(-1.0, 2.0 * kf + 1.0 + alpha) * &cur)
            - &prev.scale(kf + alpha))
            .scale(1.0 / (kf + 1.0));
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(cur)
}

/// `L_n^{α}` from the Leibniz expansion of
/// `(1/n!) t^{-α} e^t d^n[t^{n+α} e^{-t}]`; the coefficient of `t^{n-k}`
/// is `C(n,k) (n+α)^{\underline k} (-1)^{n-k} / n!`.
pub fn laguerre_rodrigues(n: usize, alpha: f64) -> UniPoly {
    let mut coeffs = vec![0.0; n + 1];
    for k in 0..=n {
        let sign = if (n - k).is_multiple_of(2) { 1.0 } else { -1.0 };
        coeffs[n - k] =
            sign * binomial(n, k) * falling_factorial(n as f64 + alpha, k) / factorial(n);
    }
    UniPoly::new(coeffs)
}

/// `L_n^{α}(t)` by recurrence.
pub fn eval_laguerre(n: usize, alpha: f64, t: f64) -> Result<f64> {
    check_gt_minus_one("alpha", alpha)?;
    let (mut prev, mut cur) = (1.0, alpha + 1.0 - t);
    if n == 0 {
        return Ok(prev);
    }
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + alpha - t) * cur - (kf + alpha) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// `(α+1)_n / n!`, the norm square under `t^α e^{-t} dt / Γ(α+1)`.
pub fn norm_laguerre(n: usize, alpha: f64) -> Result<f64> {
    check_gt_minus_one("alpha", alpha)?;
    Ok(pochhammer(alpha + 1.0, n) / factorial(n))
}

fn check_gegenbauer(m: usize, mu: f64) -> Result<()> {
    if !(mu > -0.5) {
        return Err(Error::validity("mu > -1/2", format!("mu = {mu}")));
    }
    if mu == 0.0 && m >= 1 {
        return Err(Error::DegenerateParam(
            "C_m^(0) vanishes identically for m >= 1 under the 2F1 definition; \
             use mu != 0 or the orthonormal convention"
                .into(),
        ));
    }
    Ok(())
}

/// `C_m^{(μ)}` as a polynomial.
pub fn gegenbauer_poly(m: usize, mu: f64) -> Result<UniPoly> {
    check_gegenbauer(m, mu)?;
    let pref = pochhammer(2.0 * mu, m) / factorial(m);
    let terms = two_f_one_terms(m, m as f64 + 2.0 * mu, mu + 0.5);
    Ok(series_in_half_one_minus_t(&terms).scale(pref))
}

/// `C_m^{(μ)}(x) = (2μ)_m/m! · 2F1(-m, m+2μ; μ+1/2; (1-x)/2)`.
pub fn eval_gegenbauer(m: usize, mu: f64, x: f64) -> Result<f64> {
    check_gegenbauer(m, mu)?;
    let pref = pochhammer(2.0 * mu, m) / factorial(m);
    Ok(pref
        * hyper_terminating(
            &[-(m as f64), m as f64 + 2.0 * mu],
            &[mu + 0.5],
            (1.0 - x) / 2.0,
        )?)
}

/// `∫_{-1}^{1} (C_m^{(μ)})^2 (1-x^2)^{μ-1/2} dx`.
pub fn norm_gegenbauer(m: usize, mu: f64) -> Result<f64> {
    check_gegenbauer(m, mu)?;
    let sqrt_pi = std::f64::consts::PI.sqrt();
    if m == 0 {
        // (2μ)_0 / (μ Γ(μ)) = 1 / Γ(μ+1), finite at μ = 0
        return Ok(gamma_fn(mu + 0.5)? * sqrt_pi / gamma_fn(mu + 1.0)?);
    }
    let mf = m as f64;
    Ok(pochhammer(2.0 * mu, m) * gamma_fn(mu + 0.5)? * sqrt_pi
        / (factorial(m) * (mf + mu) * gamma_fn(mu)?))
}
