//! Orthogonal families on the solid cone `V^{d+1} = {(x,t) : ‖x‖ ≤ t}`.
//!
//! Every element is `R(t) · t^m P(x/t)`, where `P` runs over a basis of
//! `V_m(B^d, w_μ)` and `R` is a one-variable polynomial of degree `n - m`
//! with parameters shifted by `α = μ + (d-1)/2`:
//!
//! | family | weight in `t` | radial factor |
//! |---|---|---|
//! | `M{p,q}` | `t^q (1+t)^{-p-q}` | `M_{n-m}^{(p-2α-2m, q+2α+2m)}` |
//! | `N{p}` | `t^{-p} e^{-1/t}` | `N_{n-m}^{(p-2α-2m)}` |
//! | `Laguerre{β}` | `t^β e^{-t}` | `L_{n-m}^{(β+2α+2m)}` |
//!
//! and the full weight carries the extra factor `(t² - ‖x‖²)^{μ-1/2}`.

use crate::ball::{ball_basis, Convention};
use crate::error::{Error, Result};
use crate::gram::GramReport;
use crate::polyalg::{relative_residual, Factor, MultiPoly, OperatorSpec, Var};
use crate::quadrature::{cone_rule, RadialWeight};
use crate::scalars::{factorial, gamma_ratio, ln_gamma};
use crate::univariate::{
    coeffs_m_rodrigues, coeffs_n_rodrigues, laguerre_poly, laguerre_rodrigues, ln_normalization_m,
    m_poly, n_poly, norm_m, norm_n, MParams, NParams, UniPoly,
};
use crate::verifier::{convergence_fit, ConvergenceFit};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "family")]
pub enum ConeFamily {
    M { p: f64, q: f64 },
    N { p: f64 },
    Laguerre { beta: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConeFamilyParams {
    pub d: usize,
    pub mu: f64,
    pub family: ConeFamily,
    pub convention: Convention,
}

/// The radial factor's own family and parameters after the shift.
#[derive(Debug, Clone, Copy, PartialEq)]
enum Radial {
    M(MParams),
    N(NParams),
    Laguerre(f64),
}

impl ConeFamilyParams {
    /// Orthonormal angular convention.
    pub fn new(d: usize, mu: f64, family: ConeFamily) -> Self {
        ConeFamilyParams {
            d,
            mu,
            family,
            convention: Convention::Orthonormal,
        }
    }

    pub fn with_convention(mut self, convention: Convention) -> Self {
        self.convention = convention;
        self
    }

    /// Same family with `p` replaced (`M` and `N` only).
    pub fn with_p(mut self, new_p: f64) -> Self {
        match &mut self.family {
            ConeFamily::M { p, .. } | ConeFamily::N { p } => *p = new_p,
            ConeFamily::Laguerre { .. } => {}
        }
        self
    }

    /// `α = μ + (d-1)/2`.
    pub fn alpha(&self) -> f64 {
        self.mu + (self.d as f64 - 1.0) / 2.0
    }

    /// Orthogonality window up to degree `n_max`.
    pub fn check_window(&self, n_max: usize) -> Result<()> {
        if !(1..=3).contains(&self.d) {
            return Err(Error::UnsupportedDimension(self.d));
        }
        let (mu, d) = (self.mu, self.d as f64);
        if !(mu > -0.5) {
            return Err(Error::validity("μ > -1/2", format!("μ = {mu}")));
        }
        let bound = 2.0 * n_max as f64 + 2.0 * mu + d;
        match self.family {
            ConeFamily::M { p, q } => {
                if !(p > bound) {
                    return Err(Error::validity(
                        "p > 2N+2μ+d",
                        format!("p = {p}, N = {n_max}, 2N+2μ+d = {bound}"),
                    ));
                }
                if !(q > -2.0 * mu - d) {
                    return Err(Error::validity(
                        "q > -2μ-d",
                        format!("q = {q}, -2μ-d = {}", -2.0 * mu - d),
                    ));
                }
            }
            ConeFamily::N { p } => {
                if !(p > bound) {
                    return Err(Error::validity(
                        "p > 2N+2μ+d",
                        format!("p = {p}, N = {n_max}, 2N+2μ+d = {bound}"),
                    ));
                }
            }
            ConeFamily::Laguerre { beta } => {
                if !(beta > -d) {
                    return Err(Error::validity("β > -d", format!("β = {beta}, d = {d}")));
                }
            }
        }
        Ok(())
    }

    /// The weight in `t` before the cone's angular factor.
    pub fn radial_weight(&self) -> RadialWeight {
        match self.family {
            ConeFamily::M { p, q } => RadialWeight::M { p, q },
            ConeFamily::N { p } => RadialWeight::N { p },
            ConeFamily::Laguerre { beta } => RadialWeight::Laguerre { alpha: beta },
        }
    }

    fn radial(&self, m: usize) -> Radial {
        let shift = 2.0 * self.alpha() + 2.0 * m as f64;
        match self.family {
            ConeFamily::M { p, q } => Radial::M(MParams::new(p - shift, q + shift)),
            ConeFamily::N { p } => Radial::N(NParams::new(p - shift)),
            ConeFamily::Laguerre { beta } => Radial::Laguerre(beta + shift),
        }
    }

    /// Radial factor of the `(n, m)` elements.
    pub fn radial_poly(&self, n: usize, m: usize) -> Result<UniPoly> {
        let k = n - m;
        Ok(match self.radial(m) {
            Radial::M(pq) => m_poly(k, pq),
            Radial::N(pp) => n_poly(k, pp),
            Radial::Laguerre(a) => laguerre_poly(k, a)?,
        })
    }

    /// Radial factor built from the Rodrigues formula instead of the recurrence.
    pub fn radial_poly_rodrigues(&self, n: usize, m: usize) -> UniPoly {
        let k = n - m;
        match self.radial(m) {
            Radial::M(pq) => coeffs_m_rodrigues(k, pq),
            Radial::N(pp) => coeffs_n_rodrigues(k, pp),
            Radial::Laguerre(a) => laguerre_rodrigues(k, a),
        }
    }
}

/// One basis element, kept in factorized and in expanded form.
#[derive(Debug, Clone, PartialEq)]
pub struct ConeBasisElement {
    pub n: usize,
    pub m: usize,
    /// Index into the ball basis of degree `m`, zero-based.
    pub index: usize,
    pub radial: UniPoly,
    /// `t^m P(x/t)`, homogeneous of degree `m`.
    pub angular: MultiPoly,
    pub materialized: MultiPoly,
    /// `b ∫ element² W`.
    pub norm_sq: f64,
}

impl ConeBasisElement {
    pub fn label(&self) -> String {
        format!("(n={}, m={}, k={})", self.n, self.m, self.index)
    }

    /// Value at `(x, t)` given as one slice; rejects points outside the cone.
    pub fn eval(&self, point: &[f64]) -> Result<f64> {
        check_in_cone(point, self.angular.dim_x())?;
        Ok(self.eval_factorized(point))
    }

    pub(crate) fn eval_factorized(&self, point: &[f64]) -> f64 {
        let t = *point.last().expect("point has a t coordinate");
        self.radial.eval(t) * self.angular.eval_unchecked(point)
    }
}

pub(crate) fn check_in_cone(point: &[f64], d: usize) -> Result<()> {
    if point.len() != d + 1 {
        return Err(Error::DimensionMismatch {
            left: d + 1,
            right: point.len(),
        });
    }
    let t = point[d];
    let r = point[..d].iter().map(|v| v * v).sum::<f64>().sqrt();
    if !(t >= 0.0) || r > t * (1.0 + 1e-12) + 1e-12 {
        return Err(Error::Domain(format!(
            "point outside the cone: ‖x‖ = {r}, t = {t}"
        )));
    }
    Ok(())
}

/// Homogenized ball polynomials of degree `m` with their ball norm squares.
fn angular_factors(params: &ConeFamilyParams, m: usize) -> Result<Vec<(MultiPoly, f64)>> {
    ball_basis(params.d, params.mu, m, params.convention)?
        .elements
        .into_iter()
        .map(|e| Ok((e.poly.homogenize(m)?, e.norm_sq)))
        .collect()
}

fn assemble(
    n: usize,
    m: usize,
    index: usize,
    radial: UniPoly,
    angular: MultiPoly,
    norm_sq: f64,
) -> ConeBasisElement {
    let d = angular.dim_x();
    let materialized = &MultiPoly::from_uni(d, &radial, Var::T) * &angular;
    ConeBasisElement {
        n,
        m,
        index,
        radial,
        angular,
        materialized,
        norm_sq,
    }
}

/// All elements of degree exactly `n`, ordered by `m` then angular index.
pub fn cone_basis(params: &ConeFamilyParams, n: usize) -> Result<Vec<ConeBasisElement>> {
    params.check_window(n)?;
    let mut out = Vec::new();
    for m in 0..=n {
        let radial = params.radial_poly(n, m)?;
        let h = cone_norm(params, m, n)?;
        for (index, (angular, ball_norm)) in angular_factors(params, m)?.into_iter().enumerate() {
            out.push(assemble(
                n,
                m,
                index,
                radial.clone(),
                angular,
                h * ball_norm,
            ));
        }
    }
    Ok(out)
}

/// The element `(n, m, index)` alone.
pub fn cone_element(
    params: &ConeFamilyParams,
    n: usize,
    m: usize,
    index: usize,
) -> Result<ConeBasisElement> {
    params.check_window(n)?;
    if m > n {
        return Err(Error::Domain(format!("need m <= n, got m = {m}, n = {n}")));
    }
    let factors = angular_factors(params, m)?;
    let count = factors.len();
    let (angular, ball_norm) = factors.into_iter().nth(index).ok_or_else(|| {
        Error::Domain(format!(
            "angular index {index} out of range (dimension {count})"
        ))
    })?;
    let h = cone_norm(params, m, n)?;
    Ok(assemble(
        n,
        m,
        index,
        params.radial_poly(n, m)?,
        angular,
        h * ball_norm,
    ))
}

/// `dim V_n(V^{d+1}) = C(n+d, n)`.
pub fn dim_cone(d: usize, n: usize) -> usize {
    crate::scalars::binomial(n + d, n) as usize
}

/// Norm square of an element with orthonormal angular part.
pub fn cone_norm(params: &ConeFamilyParams, m: usize, n: usize) -> Result<f64> {
    params.check_window(n)?;
    let a2 = 2.0 * params.alpha();
    let k = n - m;
    match (params.family, params.radial(m)) {
        (ConeFamily::M { p, q }, Radial::M(shifted)) => {
            let ratio =
                ln_normalization_m(MParams::new(p - a2, q + a2))? - ln_normalization_m(shifted)?;
            Ok(ratio.exp() * norm_m(k, shifted)?)
        }
        (ConeFamily::N { p }, Radial::N(shifted)) => {
            let ratio = gamma_ratio(shifted.p - 1.0, p - a2 - 1.0)?;
            Ok(ratio * norm_n(k, shifted)?)
        }
        (ConeFamily::Laguerre { beta }, Radial::Laguerre(am)) => {
            let a0 = beta + a2;
            Ok((ln_gamma(am + k as f64 + 1.0)? - ln_gamma(a0 + 1.0)?).exp() / factorial(k))
        }
        _ => unreachable!("radial family follows the cone family"),
    }
}

/// Gram matrix of every element of degree `<= n_max` under the normalized
/// cone measure, by separated Gauss quadrature on `(t, x/t)`.
pub fn cone_gram(params: &ConeFamilyParams, n_max: usize) -> Result<GramReport> {
    params.check_window(n_max)?;
    let rule = cone_rule(params.d, params.mu, params.radial_weight(), 2 * n_max)?;
    let elements: Vec<ConeBasisElement> = (0..=n_max)
        .map(|n| cone_basis(params, n))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let values: Vec<Vec<f64>> = elements
        .iter()
        .map(|e| rule.points.iter().map(|pt| e.eval_factorized(pt)).collect())
        .collect();
    Ok(GramReport::from_samples(
        elements.iter().map(ConeBasisElement::label).collect(),
        &values,
        &rule.weights,
        elements.iter().map(|e| e.norm_sq).collect(),
    ))
}

/// The second-order operator whose eigenfunctions are the `M` elements
/// when `q = 0`.
pub fn operator_m(d: usize, mu: f64, p: f64) -> OperatorSpec {
    let one = MultiPoly::constant(d, 1.0);
    let t = MultiPoly::t(d);
    let t_t2 = &t + &t.pow(2);
    let df = d as f64;
    OperatorSpec::new(d)
        .term(t_t2, &[Factor::D(Var::T), Factor::D(Var::T)])
        .term((&one + &t).scale(2.0), &[Factor::Euler, Factor::D(Var::T)])
        .term(
            &MultiPoly::constant(d, df + 2.0 * mu) + &t.scale(-p + 2.0 * mu + df + 1.0),
            &[Factor::D(Var::T)],
        )
        .term(t, &[Factor::LaplacianX])
        .scalar_term(1.0, &[Factor::Euler, Factor::Euler])
        .scalar_term(2.0 * mu + df - p, &[Factor::Euler])
}

/// `operator_m(element) - n(n-p+2μ+d) element` and its relative size.
pub fn operator_residual_m(
    params: &ConeFamilyParams,
    element: &ConeBasisElement,
) -> Result<(MultiPoly, f64)> {
    let ConeFamily::M { p, q } = params.family else {
        return Err(Error::Domain(
            "this operator belongs to the M family".into(),
        ));
    };
    if q != 0.0 {
        return Err(Error::QNotZero(q));
    }
    let nf = element.n as f64;
    let eig = nf * (nf - p + 2.0 * params.mu + params.d as f64);
    let v = &element.materialized;
    let res = &operator_m(params.d, params.mu, p).apply(v)? - &v.scale(eig);
    let rel = relative_residual(&res, v);
    Ok((res, rel))
}

/// `t²∂t² + (2t⟨x,∇⟩ + (1+2μ+d-p)t)∂t + (2μ+d-p)⟨x,∇⟩ + ⟨x,∇⟩²`.
pub fn operator_n(d: usize, mu: f64, p: f64) -> OperatorSpec {
    let t = MultiPoly::t(d);
    let df = d as f64;
    OperatorSpec::new(d)
        .term(t.pow(2), &[Factor::D(Var::T), Factor::D(Var::T)])
        .term(t.scale(2.0), &[Factor::Euler, Factor::D(Var::T)])
        .term(t.scale(1.0 + 2.0 * mu + df - p), &[Factor::D(Var::T)])
        .scalar_term(2.0 * mu + df - p, &[Factor::Euler])
        .scalar_term(1.0, &[Factor::Euler, Factor::Euler])
}

/// Residual of the difference-differential identity
/// `L v = n(n+2μ+d-p) v - (n-m)(p-2μ-m-n-d) v_c`, with `v_c` the element of
/// degree `n-1` and the same angular part at parameter `p-2`.
pub fn diffdiff_residual_n(
    params: &ConeFamilyParams,
    element: &ConeBasisElement,
) -> Result<(MultiPoly, f64)> {
    let ConeFamily::N { p } = params.family else {
        return Err(Error::Domain(
            "this identity belongs to the N family".into(),
        ));
    };
    let (n, m) = (element.n, element.m);
    let (nf, mf) = (n as f64, m as f64);
    let (d, mu) = (params.d as f64, params.mu);
    let v = &element.materialized;
    let mut res = &operator_n(params.d, mu, p).apply(v)? - &v.scale(nf * (nf + 2.0 * mu + d - p));
    if n > m {
        let companion = cone_element(&params.with_p(p - 2.0), n - 1, m, element.index)?;
        let c = (nf - mf) * (p - 2.0 * mu - mf - nf - d);
        res = &res + &companion.materialized.scale(c);
    }
    let rel = relative_residual(&res, v);
    Ok((res, rel))
}

/// Which coefficient set to use for the `M` recurrence on the cone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RecurrenceForm {
    /// The uncorrected coefficients.
    Uncorrected,
    /// The coefficients implied by the univariate recurrence (see [`crate::errata`]).
    Corrected,
}

fn nonzero(value: f64, what: &str) -> Result<f64> {
    if value == 0.0 || value.abs() <= 1e-12 {
        Err(Error::DegenerateParam(format!(
            "recurrence denominator {what} vanishes"
        )))
    } else {
        Ok(value)
    }
}

/// `(A, B, C)` with `E_{n+1} = (A t + B) E_n - C E_{n-1}` for fixed `(m, k)`.
pub fn cone_recurrence_coeffs(
    params: &ConeFamilyParams,
    n: usize,
    m: usize,
    form: RecurrenceForm,
) -> Result<(f64, f64, f64)> {
    let (nf, mf) = (n as f64, m as f64);
    let (d, mu) = (params.d as f64, params.mu);
    match params.family {
        ConeFamily::M { p, q } => {
            let s = p - 2.0 * mu - d;
            let den_a = nonzero(s - mf - nf, "p-m-n-2μ-d")?;
            let den_b = nonzero(s - 2.0 * nf + 1.0, "p-2μ-d-2n+1")?;
            let a = (s - 2.0 * nf) * (s - 2.0 * nf - 1.0) / den_a;
            let mut b = (2.0 * (nf - mf) * (nf - mf + 1.0)
                - (s - 2.0 * mf + 1.0) * (d + q + 2.0 * mu + 2.0 * nf))
                / den_b;
            if form == RecurrenceForm::Corrected {
                b *= (s - 2.0 * nf) / den_a;
            }
            let c = (nf - mf)
                * (s - 2.0 * nf - 1.0)
                * (p + q - nf + mf)
                * (d + q + 2.0 * mu + mf + nf - 1.0)
                / (den_a * den_b);
            Ok((a, b, c))
        }
        ConeFamily::N { p } => {
            let s = p - 2.0 * mu - d;
            let den_a = nonzero(s - mf - nf, "p-2μ-m-n-d")?;
            let den_b = nonzero(s - 2.0 * nf + 1.0, "p-2μ-2n-d+1")?;
            let a = (s - 2.0 * nf - 1.0) * (s - 2.0 * nf) / den_a;
            let b = -(s - 2.0 * mf + 1.0) * (s - 2.0 * nf) / (den_a * den_b);
            let c = (nf - mf) * (s - 2.0 * nf - 1.0) / (den_a * den_b);
            Ok((a, b, c))
        }
        ConeFamily::Laguerre { beta } => {
            // (n-m+1) L_{n+1} = (d+β+2μ+2n-t) L_n - (d+β+2μ+m+n-1) L_{n-1}
            let lead = nf - mf + 1.0;
            Ok((
                -1.0 / lead,
                (d + beta + 2.0 * mu + 2.0 * nf) / lead,
                (d + beta + 2.0 * mu + mf + nf - 1.0) / lead,
            ))
        }
    }
}

/// Relative size of `E_{n+1} - (A t + B) E_n + C E_{n-1}` for elements built
/// from the Rodrigues formulas; `E_{n-1}` is absent when `n = m`.
pub fn recurrence_residual(
    params: &ConeFamilyParams,
    n: usize,
    m: usize,
    index: usize,
    form: RecurrenceForm,
) -> Result<f64> {
    if m > n {
        return Err(Error::Domain(format!("need m <= n, got m = {m}, n = {n}")));
    }
    params.check_window(n + 1)?;
    let (a, b, c) = cone_recurrence_coeffs(params, n, m, form)?;
    let angular = angular_factors(params, m)?
        .into_iter()
        .nth(index)
        .ok_or_else(|| Error::Domain(format!("angular index {index} out of range")))?
        .0;
    let d = params.d;
    let lift = |deg: usize| {
        &MultiPoly::from_uni(d, &params.radial_poly_rodrigues(deg, m), Var::T) * &angular
    };
    let next = lift(n + 1);
    let step = &MultiPoly::from_uni(d, &UniPoly::linear(a, b), Var::T) * &lift(n);
    let mut res = &next - &step;
    if n > m {
        res = &res + &lift(n - 1).scale(c);
    }
    Ok(relative_residual(&res, &next))
}

/// Deviation of a scaled `M` element from its Laguerre limit over a grid of `p`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LimitReport {
    pub n: usize,
    pub m: usize,
    pub index: usize,
    pub p_grid: Vec<f64>,
    /// Max over the sample grid, one entry per `p`.
    pub deviations: Vec<f64>,
    pub fit: ConvergenceFit,
}

/// Unit directions used by the limit checks (both points of `S^0` when `d = 1`).
pub fn sample_directions(d: usize) -> Vec<Vec<f64>> {
    match d {
        1 => vec![vec![1.0], vec![-1.0]],
        2 => (0..5)
            .map(|j| {
                let phi = 0.3 + 2.0 * std::f64::consts::PI * j as f64 / 5.0;
                vec![phi.cos(), phi.sin()]
            })
            .collect(),
        _ => [
            [1.0, 0.0, 0.0],
            [0.0, 1.0, 0.0],
            [0.0, 0.0, 1.0],
            [1.0, 1.0, 1.0],
            [1.0, -2.0, 0.5],
        ]
        .iter()
        .map(|v| {
            let r = v.iter().map(|c| c * c).sum::<f64>().sqrt();
            v.iter().map(|c| c / r).collect()
        })
        .collect(),
    }
}

/// Points `(s t ξ, t)` for five `t` in `(0, 2]`, the sample directions `ξ`
/// and `s ∈ {0.3, 0.9}`.
pub fn limit_sample_grid(d: usize) -> Vec<Vec<f64>> {
    let mut pts = Vec::new();
    for i in 1..=5 {
        let t = 0.4 * i as f64;
        for dir in sample_directions(d) {
            for s in [0.3, 0.9] {
                let mut pt: Vec<f64> = dir.iter().map(|c| s * t * c).collect();
                pt.push(t);
                pts.push(pt);
            }
        }
    }
    pts
}

/// `p^m M_{k,n}(x/p, t/p)` against `(-1)^{n-m} (n-m)! L_{k,n}^{q,μ}(x, t)`.
///
/// Both sides share `t^m P(x/t)`, so the comparison is made on the radial
/// factors times that common value.
pub fn limit_to_laguerre(
    params: &ConeFamilyParams,
    n: usize,
    m: usize,
    index: usize,
    p_grid: &[f64],
) -> Result<LimitReport> {
    let ConeFamily::M { q, .. } = params.family else {
        return Err(Error::Domain(
            "the Laguerre limit is stated for the M family".into(),
        ));
    };
    let lag = ConeFamilyParams {
        family: ConeFamily::Laguerre { beta: q },
        ..*params
    };
    let target = cone_element(&lag, n, m, index)?;
    let k = n - m;
    let sign = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
    let scale = sign * factorial(k);
    let grid = limit_sample_grid(params.d);
    let deviations = p_grid
        .iter()
        .map(|&p| {
            let at_p = params.with_p(p);
            at_p.check_window(n)?;
            let radial = at_p.radial_poly(n, m)?;
            Ok(grid
                .iter()
                .map(|pt| {
                    let t = pt[params.d];
                    let h = target.angular.eval_unchecked(pt);
                    ((radial.eval(t / p) - scale * target.radial.eval(t)) * h).abs()
                })
                .fold(0.0, f64::max))
        })
        .collect::<Result<Vec<f64>>>()?;
    let pairs: Vec<(f64, f64)> = p_grid
        .iter()
        .copied()
        .zip(deviations.iter().copied())
        .collect();
    Ok(LimitReport {
        n,
        m,
        index,
        p_grid: p_grid.to_vec(),
        deviations,
        fit: convergence_fit(&pairs)?,
    })
}

/// `t(Δ_x + ∂t²) + 2⟨x,∇⟩∂t - ⟨x,∇⟩ + (2μ+d-t)∂t`, with eigenvalue `-n` on
/// the Laguerre elements at `β = 0`.
pub fn operator_laguerre(d: usize, mu: f64) -> OperatorSpec {
    let t = MultiPoly::t(d);
    OperatorSpec::new(d)
        .term(t.clone(), &[Factor::LaplacianX])
        .term(t.clone(), &[Factor::D(Var::T), Factor::D(Var::T)])
        .scalar_term(2.0, &[Factor::Euler, Factor::D(Var::T)])
        .scalar_term(-1.0, &[Factor::Euler])
        .term(
            &MultiPoly::constant(d, 2.0 * mu + d as f64) - &t,
            &[Factor::D(Var::T)],
        )
}

/// Worst residuals of the Laguerre cone family at `β = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LaguerreConeReport {
    pub d: usize,
    pub mu: f64,
    pub n_max: usize,
    pub elements_checked: usize,
    pub max_pde_residual: f64,
    pub max_recurrence_residual: f64,
}

/// Eigen-equation for every element of degree `<= n_max` and the
/// three-term recurrence for every step landing at degree `<= n_max`.
pub fn laguerre_cone_checks(d: usize, mu: f64, n_max: usize) -> Result<LaguerreConeReport> {
    let params = ConeFamilyParams::new(d, mu, ConeFamily::Laguerre { beta: 0.0 });
    let op = operator_laguerre(d, mu);
    let mut report = LaguerreConeReport {
        d,
        mu,
        n_max,
        elements_checked: 0,
        max_pde_residual: 0.0,
        max_recurrence_residual: 0.0,
    };
    for n in 0..=n_max {
        for e in cone_basis(&params, n)? {
            let v = &e.materialized;
            let res = &op.apply(v)? + &v.scale(n as f64);
            report.max_pde_residual = report.max_pde_residual.max(relative_residual(&res, v));
            report.elements_checked += 1;
            if n < n_max {
                let r = recurrence_residual(&params, n, e.m, e.index, RecurrenceForm::Uncorrected)?;
                report.max_recurrence_residual = report.max_recurrence_residual.max(r);
            }
        }
    }
    Ok(report)
}
