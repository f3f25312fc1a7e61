//! The two finite classes on `[0, ∞)`.
//!
//! * `M_n^{(p,q)}` with weight `x^q / (1+x)^{p+q}`, orthogonal only while
//!   `p > 2N + 1`, `q > -1`.
//! * `N_n^{(p)}` with weight `x^{-p} e^{-1/x}`, orthogonal only while
//!   `p > 2N + 1`.
//!
//! Evaluation runs the three-term recurrences; the Rodrigues formulas,
//! expanded with the Leibniz rule, give an independent coefficient route.

use super::classical::laguerre_poly;
use super::poly::{relative_residual, UniPoly};
use crate::error::{Error, Result};
use crate::scalars::{
    binomial, compensated_sum, factorial, falling_factorial, gamma_fn, gamma_ratio, ln_gamma,
    pochhammer, CompensatedSum,
};
use serde::{Deserialize, Serialize};

/// Parameters of the first finite class `M_n^{(p,q)}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MParams {
    pub p: f64,
    pub q: f64,
}

/// Parameter of the second finite class `N_n^{(p)}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NParams {
    pub p: f64,
}

impl MParams {
    pub fn new(p: f64, q: f64) -> Self {
        MParams { p, q }
    }

    /// Finite-orthogonality window up to degree `n_max`: `p > 2N+1`, `q > -1`.
    pub fn check_window(&self, n_max: usize) -> Result<()> {
        let bound = 2.0 * n_max as f64 + 1.0;
        if !(self.p > bound) {
            return Err(Error::validity(
                "p > 2N+1",
                format!("p = {}, N = {n_max}, 2N+1 = {bound}", self.p),
            ));
        }
        if !(self.q > -1.0) {
            return Err(Error::validity("q > -1", format!("q = {}", self.q)));
        }
        Ok(())
    }

    /// `x^q / (1+x)^{p+q}`.
    pub fn weight(&self, x: f64) -> f64 {
        x.powf(self.q) / (1.0 + x).powf(self.p + self.q)
    }
}

impl NParams {
    pub fn new(p: f64) -> Self {
        NParams { p }
    }

    /// Finite-orthogonality window up to degree `n_max`: `p > 2N+1`.
    pub fn check_window(&self, n_max: usize) -> Result<()> {
        let bound = 2.0 * n_max as f64 + 1.0;
        if !(self.p > bound) {
            return Err(Error::validity(
                "p > 2N+1",
                format!("p = {}, N = {n_max}, 2N+1 = {bound}", self.p),
            ));
        }
        Ok(())
    }

    /// `x^{-p} e^{-1/x}`.
    pub fn weight(&self, x: f64) -> f64 {
        if x <= 0.0 {
            return 0.0;
        }
        x.powf(-self.p) * (-1.0 / x).exp()
    }
}

/// Which finite class.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum FiniteFamily {
    M(MParams),
    N(NParams),
}

fn nonzero_denominator(value: f64, what: &str) -> Result<f64> {
    if value.abs() <= 1e-12 * value.abs().max(1.0) || value == 0.0 {
        Err(Error::DegenerateParam(format!(
            "recurrence denominator {what} vanishes"
        )))
    } else {
        Ok(value)
    }
}

/// Coefficients `(A, B, C)` with `M_{n+1} = (A x + B) M_n - C M_{n-1}`, `n >= 1`.
pub fn m_recurrence_coeffs(n: usize, params: MParams) -> Result<(f64, f64, f64)> {
    let MParams { p, q } = params;
    let nf = n as f64;
    let d1 = nonzero_denominator(p - (nf + 1.0), "p-(n+1)")?;
    let d2 = nonzero_denominator(p - 2.0 * nf, "p-2n")?;
    let a = (p - (2.0 * nf + 1.0)) * (p - (2.0 * nf + 2.0)) / d1;
    let b = (p - (2.0 * nf + 1.0)) * (2.0 * nf * (nf + 1.0) - p * (q + 2.0 * nf + 1.0)) / (d1 * d2);
    let c = nf * (p - (2.0 * nf + 2.0)) * (p + q - nf) * (q + nf) / (d1 * d2);
    Ok((a, b, c))
}

/// Coefficients `(A, B, C)` with `N_{n+1} = (A x + B) N_n - C N_{n-1}`, `n >= 1`.
pub fn n_recurrence_coeffs(n: usize, params: NParams) -> Result<(f64, f64, f64)> {
    let p = params.p;
    let nf = n as f64;
    let d1 = nonzero_denominator(p - (nf + 1.0), "p-(n+1)")?;
    let d2 = nonzero_denominator(p - 2.0 * nf, "p-2n")?;
    let a = (p - (2.0 * nf + 2.0)) * (p - (2.0 * nf + 1.0)) / d1;
    let b = -p * (p - (2.0 * nf + 1.0)) / (d1 * d2);
    let c = nf * (p - (2.0 * nf + 2.0)) / (d1 * d2);
    Ok((a, b, c))
}

fn run_recurrence<T, F>(n: usize, seed0: T, seed1: T, mut step: F) -> Result<T>
where
    T: Clone,
    F: FnMut(usize, &T, &T) -> Result<T>,
{
    if n == 0 {
        return Ok(seed0);
    }
    let (mut prev, mut cur) = (seed0, seed1);
    for k in 1..n {
        let next = step(k, &cur, &prev)?;
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(cur)
}

/// `M_n^{(p,q)}(x)` by forward recurrence from `M_0 = 1`, `M_1 = (p-2)x - (q+1)`.
pub fn eval_m(n: usize, params: MParams, x: f64) -> Result<f64> {
    let MParams { p, q } = params;
    run_recurrence(n, 1.0, (p - 2.0) * x - (q + 1.0), |k, cur, prev| {
        let (a, b, c) = m_recurrence_coeffs(k, params)?;
        Ok((a * x + b) * cur - c * prev)
    })
}

/// `N_n^{(p)}(x)` by forward recurrence from `N_0 = 1`, `N_1 = (p-2)x - 1`.
pub fn eval_n(n: usize, params: NParams, x: f64) -> Result<f64> {
    let p = params.p;
    run_recurrence(n, 1.0, (p - 2.0) * x - 1.0, |k, cur, prev| {
        let (a, b, c) = n_recurrence_coeffs(k, params)?;
        Ok((a * x + b) * cur - c * prev)
    })
}

/// Coefficients of `M_n^{(p,q)}` by running the recurrence on polynomials.
pub fn coeffs_m_recurrence(n: usize, params: MParams) -> Result<UniPoly> {
    let MParams { p, q } = params;
    run_recurrence(
        n,
        UniPoly::constant(1.0),
        UniPoly::linear(p - 2.0, -(q + 1.0)),
        |k, cur, prev| {
            let (a, b, c) = m_recurrence_coeffs(k, params)?;
            Ok(&(&UniPoly::linear(a, b) * cur) - &prev.scale(c))
        },
    )
}

/// Coefficients of `N_n^{(p)}` by running the recurrence on polynomials.
pub fn coeffs_n_recurrence(n: usize, params: NParams) -> Result<UniPoly> {
    let p = params.p;
    run_recurrence(
        n,
        UniPoly::constant(1.0),
        UniPoly::linear(p - 2.0, -1.0),
        |k, cur, prev| {
            let (a, b, c) = n_recurrence_coeffs(k, params)?;
            Ok(&(&UniPoly::linear(a, b) * cur) - &prev.scale(c))
        },
    )
}

/// Leibniz expansion of the Rodrigues formula for `M_n^{(p,q)}`.
///
/// `d^n[x^{n+q}(1+x)^{n-p-q}] = Σ_k C(n,k) (n+q)^{\underline k} (n-p-q)^{\underline{n-k}}
/// x^{n+q-k} (1+x)^{k-p-q}`, so after the prefactor each term is
/// `x^{n-k}(1+x)^k`.
pub fn coeffs_m_rodrigues(n: usize, params: MParams) -> UniPoly {
    let MParams { p, q } = params;
    let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    let mut acc = vec![CompensatedSum::new(); n + 1];
    for k in 0..=n {
        let outer = binomial(n, k)
            * falling_factorial(n as f64 + q, k)
            * falling_factorial(n as f64 - p - q, n - k);
        for i in 0..=k {
            // x^{n-k} * C(k,i) x^i
            acc[n - k + i].add(sign * outer * binomial(k, i));
        }
    }
    UniPoly::new(acc.iter().map(CompensatedSum::value).collect())
}

/// Unsigned Lah number `L(i, k)`.
fn lah(i: usize, k: usize) -> f64 {
    match (i, k) {
        (0, 0) => 1.0,
        (_, 0) => 0.0,
        _ if k > i => 0.0,
        _ => binomial(i - 1, k - 1) * factorial(i) / factorial(k),
    }
}

/// Leibniz expansion of the Rodrigues formula for `N_n^{(p)}`.
///
/// Uses `d^i e^{-1/x} = (-1)^i Σ_k L(i,k) (-1)^k x^{-i-k} e^{-1/x}` with Lah
/// numbers `L(i,k)`; the coefficient of `x^{n-k}` is
/// `(-1)^n Σ_{i>=k} C(n,i) (2n-p)^{\underline{n-i}} (-1)^{i+k} L(i,k)`.
pub fn coeffs_n_rodrigues(n: usize, params: NParams) -> UniPoly {
    let p = params.p;
    let sign_n = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    let coeffs: Vec<f64> = (0..=n)
        .map(|power| {
            let k = n - power;
            sign_n
                * compensated_sum((k..=n).map(|i| {
                    let s = if (i + k).is_multiple_of(2) { 1.0 } else { -1.0 };
                    binomial(n, i) * falling_factorial(2.0 * n as f64 - p, n - i) * s * lah(i, k)
                }))
        })
        .collect();
    UniPoly::new(coeffs)
}

/// `M_n^{(p,q)}` as a polynomial: recurrence path, Rodrigues when a
/// recurrence denominator vanishes.
pub fn m_poly(n: usize, params: MParams) -> UniPoly {
    coeffs_m_recurrence(n, params).unwrap_or_else(|_| coeffs_m_rodrigues(n, params))
}

/// `N_n^{(p)}` as a polynomial: recurrence path, Rodrigues on degeneracy.
pub fn n_poly(n: usize, params: NParams) -> UniPoly {
    coeffs_n_recurrence(n, params).unwrap_or_else(|_| coeffs_n_rodrigues(n, params))
}

/// Normalization constant `c_{p,q} = Γ(p+q) / (Γ(p-1) Γ(q+1))`.
pub fn normalization_m(params: MParams) -> Result<f64> {
    let MParams { p, q } = params;
    if !(p > 1.0) || !(q > -1.0) {
        return Err(Error::validity(
            "p > 1, q > -1",
            format!("p = {p}, q = {q}"),
        ));
    }
    Ok(gamma_ratio(p + q, p - 1.0)? / gamma_fn(q + 1.0)?)
}

/// `ln c_{p,q}`.
pub fn ln_normalization_m(params: MParams) -> Result<f64> {
    let MParams { p, q } = params;
    if !(p > 1.0) || !(q > -1.0) {
        return Err(Error::validity(
            "p > 1, q > -1",
            format!("p = {p}, q = {q}"),
        ));
    }
    Ok(ln_gamma(p + q)? - ln_gamma(p - 1.0)? - ln_gamma(q + 1.0)?)
}

/// Normalization constant `c_p = 1 / Γ(p-1)`.
pub fn normalization_n(params: NParams) -> Result<f64> {
    let p = params.p;
    if !(p > 1.0) {
        return Err(Error::validity("p > 1", format!("p = {p}")));
    }
    Ok((-ln_gamma(p - 1.0)?).exp())
}

/// Dispatching form of [`normalization_m`] / [`normalization_n`].
pub fn normalization_constant(family: FiniteFamily) -> Result<f64> {
    match family {
        FiniteFamily::M(params) => normalization_m(params),
        FiniteFamily::N(params) => normalization_n(params),
    }
}

/// Norm square `h_n^{(p,q)} = c_{p,q} ∫ M_n^2 w_{p,q}`, real factorials as Gamma.
pub fn norm_m(n: usize, params: MParams) -> Result<f64> {
    params.check_window(n)?;
    let MParams { p, q } = params;
    let nf = n as f64;
    Ok(factorial(n)
        * pochhammer(q + 1.0, n)
        * gamma_ratio(p - nf, p - 1.0)?
        * gamma_ratio(p + q, p + q - nf)?
        / (p - 2.0 * nf - 1.0))
}

/// Norm square `h_n^{(p)} = n! (p-n-1)! / ((p-2n-1) Γ(p-1))`.
pub fn norm_n(n: usize, params: NParams) -> Result<f64> {
    params.check_window(n)?;
    let p = params.p;
    let nf = n as f64;
    Ok(factorial(n) * gamma_ratio(p - nf, p - 1.0)? / (p - 2.0 * nf - 1.0))
}

/// Residual of `x(1+x)y'' + ((2-p)x + 1+q) y' - n(n+1-p) y` for `y = M_n^{(p,q)}`.
pub fn ode_residual_m(n: usize, params: MParams) -> (UniPoly, f64) {
    let MParams { p, q } = params;
    let y = m_poly(n, params);
    let nf = n as f64;
    let res = &(&(&UniPoly::new(vec![0.0, 1.0, 1.0]) * &y.derivative().derivative())
        + &(&UniPoly::linear(2.0 - p, 1.0 + q) * &y.derivative()))
        - &y.scale(nf * (nf + 1.0 - p));
    let rel = relative_residual(&res, &y);
    (res, rel)
}

/// Residual of `x^2 y'' + ((2-p)x + 1) y' - n(n+1-p) y` for `y = N_n^{(p)}`.
pub fn ode_residual_n(n: usize, params: NParams) -> (UniPoly, f64) {
    let p = params.p;
    let y = n_poly(n, params);
    let nf = n as f64;
    let res = &(&(&UniPoly::monomial(2, 1.0) * &y.derivative().derivative())
        + &(&UniPoly::linear(2.0 - p, 1.0) * &y.derivative()))
        - &y.scale(nf * (nf + 1.0 - p));
    let rel = relative_residual(&res, &y);
    (res, rel)
}

/// Residual of `d/dx Y_n - n(p-(n+1)) Y_{n-1}^{shifted}` where the shift is
/// `(p-2, q+1)` for `M` and `p-2` for `N`.
pub fn derivative_relation_residual(family: FiniteFamily, n: usize) -> Result<(UniPoly, f64)> {
    if n == 0 {
        return Err(Error::Domain("derivative relation needs n >= 1".into()));
    }
    let nf = n as f64;
    let (lhs, rhs) = match family {
        FiniteFamily::M(params) => {
            let shifted = MParams::new(params.p - 2.0, params.q + 1.0);
            (
                m_poly(n, params).derivative(),
                m_poly(n - 1, shifted).scale(nf * (params.p - (nf + 1.0))),
            )
        }
        FiniteFamily::N(params) => {
            let shifted = NParams::new(params.p - 2.0);
            (
                n_poly(n, params).derivative(),
                n_poly(n - 1, shifted).scale(nf * (params.p - (nf + 1.0))),
            )
        }
    };
    let res = &lhs - &rhs;
    let rel = relative_residual(&res, &lhs);
    Ok((res, rel))
}

/// `|M_n^{(p,q)}(x/p) - (-1)^n n! L_n^{(q)}(x)|` for every `p` in the grid.
pub fn laguerre_limit_error_m(n: usize, q: f64, x: f64, p_grid: &[f64]) -> Result<Vec<f64>> {
    let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    let target = sign * factorial(n) * laguerre_poly(n, q)?.eval(x);
    p_grid
        .iter()
        .map(|&p| {
            let params = MParams::new(p, q);
            params.check_window(n)?;
            Ok((m_poly(n, params).eval(x / p) - target).abs())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        let scale = b.iter().fold(1.0f64, |m, v| m.max(v.abs()));
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol * scale)
    }

    #[test]
    fn eval_m_samples() {
        assert_eq!(eval_m(0, MParams::new(7.3, 0.4), 3.1).unwrap(), 1.0);
        assert!((eval_m(1, MParams::new(10.0, 0.0), 1.0).unwrap() - 7.0).abs() < 1e-14);
        assert!((eval_m(2, MParams::new(10.0, 1.0), 2.0).unwrap() - 90.0).abs() < 1e-12);
    }

    #[test]
    fn eval_n_samples() {
        assert_eq!(eval_n(0, NParams::new(4.2), 0.3).unwrap(), 1.0);
        assert!((eval_n(1, NParams::new(10.0), 2.0).unwrap() - 15.0).abs() < 1e-14);
        assert!((eval_n(2, NParams::new(10.0), 1.0).unwrap() - 29.0).abs() < 1e-12);
    }

    #[test]
    fn degenerate_recurrence_denominator() {
        // n = 2 step uses p - 2; p = 2 kills it
        assert!(matches!(
            eval_m(3, MParams::new(2.0, 0.0), 0.5),
            Err(Error::DegenerateParam(_))
        ));
        assert!(matches!(
            eval_n(3, NParams::new(3.0), 0.5),
            Err(Error::DegenerateParam(_))
        ));
    }

    #[test]
    fn rodrigues_samples() {
        assert_eq!(
            coeffs_m_rodrigues(0, MParams::new(5.0, 1.0)).coeffs(),
            &[1.0]
        );
        assert!(close(
            coeffs_m_rodrigues(1, MParams::new(10.0, 0.0)).coeffs(),
            &[-1.0, 8.0],
            1e-15
        ));
        let m3 = coeffs_m_rodrigues(3, MParams::new(12.0, 0.0));
        assert!((m3.leading() - 336.0).abs() < 1e-12);
        assert!(close(
            coeffs_n_rodrigues(2, NParams::new(10.0)).coeffs(),
            &[1.0, -14.0, 42.0],
            1e-15
        ));
        assert!(close(
            coeffs_n_rodrigues(3, NParams::new(10.0)).coeffs(),
            &[-1.0, 18.0, -90.0, 120.0],
            1e-15
        ));
    }

    #[test]
    fn norms() {
        let p = MParams::new(10.0, 0.0);
        assert!((norm_m(0, MParams::new(6.5, 0.3)).unwrap() - 1.0).abs() < 1e-14);
        assert!((norm_m(1, p).unwrap() - 9.0 / 7.0).abs() < 1e-14);
        assert!(matches!(
            norm_m(2, MParams::new(5.0, 0.0)),
            Err(Error::Validity { .. })
        ));
        assert!((norm_n(0, NParams::new(4.5)).unwrap() - 1.0).abs() < 1e-14);
        assert!((norm_n(1, NParams::new(10.0)).unwrap() - 1.0 / 7.0).abs() < 1e-15);
        assert!(matches!(
            norm_n(3, NParams::new(7.0)),
            Err(Error::Validity { .. })
        ));
    }

    #[test]
    fn normalization() {
        assert!((normalization_m(MParams::new(2.0, 0.0)).unwrap() - 1.0).abs() < 1e-15);
        assert!((normalization_m(MParams::new(3.0, 0.0)).unwrap() - 2.0).abs() < 1e-15);
        assert!((normalization_n(NParams::new(3.0)).unwrap() - 1.0).abs() < 1e-15);
        assert!(normalization_m(MParams::new(1.0, 0.0)).is_err());
        assert!(normalization_m(MParams::new(3.0, -1.0)).is_err());
        assert!(normalization_n(NParams::new(0.5)).is_err());
        let ln = ln_normalization_m(MParams::new(7.5, 1.25)).unwrap();
        assert!((ln.exp() - normalization_m(MParams::new(7.5, 1.25)).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn ode_residuals_vanish() {
        for (n, p, q) in [(0, 10.0, 0.0), (2, 10.0, 0.0), (5, 20.0, 1.0)] {
            let (_, rel) = ode_residual_m(n, MParams::new(p, q));
            assert!(rel <= 1e-9, "M n={n}: {rel}");
        }
        for (n, p) in [(0, 10.0), (2, 10.0), (4, 15.0)] {
            let (_, rel) = ode_residual_n(n, NParams::new(p));
            assert!(rel <= 1e-9, "N n={n}: {rel}");
        }
        assert!(ode_residual_m(0, MParams::new(3.0, 0.0)).0.is_zero());
    }

    #[test]
    fn derivative_relations() {
        let (res, _) =
            derivative_relation_residual(FiniteFamily::M(MParams::new(10.0, 0.0)), 1).unwrap();
        assert!(res.is_zero());
        let (res, _) =
            derivative_relation_residual(FiniteFamily::N(NParams::new(10.0)), 1).unwrap();
        assert!(res.is_zero());
        let (_, rel) =
            derivative_relation_residual(FiniteFamily::M(MParams::new(20.0, 2.0)), 3).unwrap();
        assert!(rel < 1e-10);
        assert!(derivative_relation_residual(FiniteFamily::N(NParams::new(9.0)), 0).is_err());
    }

    #[test]
    fn laguerre_limit_examples() {
        let e = laguerre_limit_error_m(1, 0.0, 1.0, &[100.0]).unwrap();
        assert!((e[0] - 0.02).abs() < 1e-14);
        let e = laguerre_limit_error_m(0, 0.5, 1.3, &[10.0, 100.0, 1000.0]).unwrap();
        assert!(e.iter().all(|v| *v == 0.0));
        let e = laguerre_limit_error_m(2, 0.0, 1.0, &[1e2, 1e3, 1e4]).unwrap();
        for w in e.windows(2) {
            let ratio = w[0] / w[1];
            assert!((ratio - 10.0).abs() < 0.5, "ratio {ratio}");
        }
        assert!(laguerre_limit_error_m(2, 0.0, 1.0, &[4.0]).is_err());
    }
}
