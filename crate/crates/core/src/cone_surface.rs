//! Orthogonal families on the conic surface `V_0^{d+1} = {‖x‖ = t}`.
//!
//! Elements are `R(t) Y(x)` with `Y` a spherical harmonic of degree `m`.
//! Polynomials are understood modulo `‖x‖² - t²`, so every identity here is
//! reduced to the profile `g(t) = R(t) t^m` along a ray, with the angular
//! Laplace–Beltrami operator replaced by its eigenvalue `-m(m+d-2)`.

use crate::cone_solid::{sample_directions, ConeFamily, LimitReport};
use crate::error::{Error, Result};
use crate::gram::GramReport;
use crate::harmonics::{dim_harmonic, harmonic_basis, sphere_area};
use crate::polyalg::{MultiPoly, Var};
use crate::quadrature::{surface_radial_weight, surface_rule, RadialWeight};
use crate::scalars::{binomial, factorial, gamma_ratio, ln_gamma};
use crate::univariate::{
    laguerre_poly, ln_normalization_m, m_poly, n_poly, norm_m, relative_residual, MParams, NParams,
    UniPoly,
};
use crate::verifier::convergence_fit;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SurfaceParams {
    pub d: usize,
    pub family: ConeFamily,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SurfaceElement {
    pub n: usize,
    pub m: usize,
    /// Index into the harmonic basis of degree `m`, zero-based.
    pub index: usize,
    pub radial: UniPoly,
    pub harmonic: MultiPoly,
    /// `R(t) Y(x)`, one representative of its class modulo `‖x‖² - t²`.
    pub materialized: MultiPoly,
    /// `b ∫ element² w dσ`.
    pub norm_sq: f64,
}

impl SurfaceElement {
    pub fn label(&self) -> String {
        format!("(n={}, m={}, l={})", self.n, self.m, self.index)
    }

    /// Value at a point of the surface (`‖x‖ = t` to within 1e-12).
    pub fn eval(&self, point: &[f64]) -> Result<f64> {
        let d = self.harmonic.dim_x();
        if point.len() != d + 1 {
            return Err(Error::DimensionMismatch {
                left: d + 1,
                right: point.len(),
            });
        }
        let t = point[d];
        let r = point[..d].iter().map(|v| v * v).sum::<f64>().sqrt();
        if !(t >= 0.0) || (r - t).abs() > 1e-12 * t.max(1.0) {
            return Err(Error::Domain(format!(
                "point off the conic surface: ‖x‖ = {r}, t = {t}"
            )));
        }
        Ok(self.eval_unchecked(point))
    }

    fn eval_unchecked(&self, point: &[f64]) -> f64 {
        let t = point[self.harmonic.dim_x()];
        self.radial.eval(t) * self.harmonic.eval_unchecked(point)
    }

    /// `g(t) = R(t) t^m`: the element along the ray through a unit `ξ`,
    /// divided by `Y(ξ)`.
    pub fn profile(&self) -> UniPoly {
        self.radial.shift(self.m)
    }
}

impl SurfaceParams {
    pub fn new(d: usize, family: ConeFamily) -> Self {
        SurfaceParams { d, family }
    }

    pub fn with_p(mut self, new_p: f64) -> Self {
        match &mut self.family {
            ConeFamily::M { p, .. } | ConeFamily::N { p } => *p = new_p,
            ConeFamily::Laguerre { .. } => {}
        }
        self
    }

    /// Orthogonality window up to degree `n_max`.
    pub fn check_window(&self, n_max: usize) -> Result<()> {
        if !(1..=3).contains(&self.d) {
            return Err(Error::UnsupportedDimension(self.d));
        }
        let d = self.d as f64;
        let bound = 2.0 * n_max as f64 + d;
        let p_check = |p: f64| {
            if p > bound {
                Ok(())
            } else {
                Err(Error::validity(
                    "p > 2N+d",
                    format!("p = {p}, N = {n_max}, 2N+d = {bound}"),
                ))
            }
        };
        match self.family {
            ConeFamily::M { p, q } => {
                p_check(p)?;
                if !(q > -d) {
                    return Err(Error::validity("q > -d", format!("q = {q}, d = {d}")));
                }
            }
            ConeFamily::N { p } => p_check(p)?,
            ConeFamily::Laguerre { beta } => {
                if !(beta > -d) {
                    return Err(Error::validity("β > -d", format!("β = {beta}, d = {d}")));
                }
            }
        }
        Ok(())
    }

    pub fn radial_weight(&self) -> RadialWeight {
        match self.family {
            ConeFamily::M { p, q } => RadialWeight::M { p, q },
            ConeFamily::N { p } => RadialWeight::N { p },
            ConeFamily::Laguerre { beta } => RadialWeight::Laguerre { alpha: beta },
        }
    }

    /// `b` with `b ∫ w dσ = 1`.
    pub fn normalization(&self) -> Result<f64> {
        let shifted = surface_radial_weight(self.d, self.radial_weight());
        Ok((-shifted.ln_mass()?).exp() / sphere_area(self.d))
    }

    fn shift(&self, m: usize) -> f64 {
        (2 * m + self.d - 1) as f64
    }

    /// Radial factor of the `(n, m)` elements.
    pub fn radial_poly(&self, n: usize, m: usize) -> Result<UniPoly> {
        let (k, s) = (n - m, self.shift(m));
        Ok(match self.family {
            ConeFamily::M { p, q } => m_poly(k, MParams::new(p - s, q + s)),
            ConeFamily::N { p } => n_poly(k, NParams::new(p - s)),
            ConeFamily::Laguerre { beta } => laguerre_poly(k, beta + s)?,
        })
    }
}

/// `Σ_{m<=n} dim H_m^d`.
pub fn dim_surface(d: usize, n: usize) -> usize {
    (0..=n).map(|m| dim_harmonic(d, m)).sum()
}

/// `C(n+d-1, n) + C(n+d-2, n-1)`, the closed form of [`dim_surface`].
pub fn dim_surface_closed(d: usize, n: usize) -> usize {
    let first = binomial(n + d - 1, n) as usize;
    if n == 0 {
        first
    } else {
        first + binomial(n + d - 2, n - 1) as usize
    }
}

/// Norm square of an element; the same for every `l`.
pub fn surface_norm(params: &SurfaceParams, m: usize, n: usize) -> Result<f64> {
    params.check_window(n)?;
    let d1 = params.d as f64 - 1.0;
    let (k, s) = (n - m, params.shift(m));
    match params.family {
        ConeFamily::M { p, q } => {
            let shifted = MParams::new(p - s, q + s);
            let ratio =
                ln_normalization_m(MParams::new(p - d1, q + d1))? - ln_normalization_m(shifted)?;
            Ok(ratio.exp() * norm_m(k, shifted)?)
        }
        ConeFamily::N { p } => {
            // (n-m)! (p-n-m-d)! / ((p-2n-d) Γ(p-d))
            let (nf, mf, d) = (n as f64, m as f64, params.d as f64);
            Ok(factorial(k) * gamma_ratio(p - nf - mf - d + 1.0, p - d)? / (p - 2.0 * nf - d))
        }
        ConeFamily::Laguerre { beta } => {
            let am = beta + s;
            Ok((ln_gamma(am + k as f64 + 1.0)? - ln_gamma(beta + d1 + 1.0)?).exp() / factorial(k))
        }
    }
}

fn harmonics(d: usize, m: usize) -> Result<Vec<MultiPoly>> {
    Ok(harmonic_basis(d, m)?.elements)
}

fn assemble(
    n: usize,
    m: usize,
    index: usize,
    radial: UniPoly,
    y: MultiPoly,
    h: f64,
) -> SurfaceElement {
    let materialized = &MultiPoly::from_uni(y.dim_x(), &radial, Var::T) * &y;
    SurfaceElement {
        n,
        m,
        index,
        radial,
        harmonic: y,
        materialized,
        norm_sq: h,
    }
}

/// All elements of degree `n`, ordered by `m` then harmonic index.
pub fn surface_basis(params: &SurfaceParams, n: usize) -> Result<Vec<SurfaceElement>> {
    params.check_window(n)?;
    let mut out = Vec::with_capacity(dim_surface(params.d, n));
    for m in 0..=n {
        let radial = params.radial_poly(n, m)?;
        let h = surface_norm(params, m, n)?;
        for (index, y) in harmonics(params.d, m)?.into_iter().enumerate() {
            out.push(assemble(n, m, index, radial.clone(), y, h));
        }
    }
    Ok(out)
}

/// The single element `(n, m, index)`.
pub fn surface_element(
    params: &SurfaceParams,
    n: usize,
    m: usize,
    index: usize,
) -> Result<SurfaceElement> {
    params.check_window(n)?;
    if m > n {
        return Err(Error::Domain(format!("need m <= n, got m = {m}, n = {n}")));
    }
    let ys = harmonics(params.d, m)?;
    let count = ys.len();
    let y = ys.into_iter().nth(index).ok_or_else(|| {
        Error::Domain(format!(
            "harmonic index {index} out of range (dimension {count})"
        ))
    })?;
    let h = surface_norm(params, m, n)?;
    Ok(assemble(n, m, index, params.radial_poly(n, m)?, y, h))
}

/// Gram matrix of every element of degree `<= n_max` under the normalized
/// surface measure.
pub fn surface_gram(params: &SurfaceParams, n_max: usize) -> Result<GramReport> {
    params.check_window(n_max)?;
    let rule = surface_rule(params.d, params.radial_weight(), 2 * n_max)?;
    let elements: Vec<SurfaceElement> = (0..=n_max)
        .map(|n| surface_basis(params, n))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let values: Vec<Vec<f64>> = elements
        .iter()
        .map(|e| rule.points.iter().map(|pt| e.eval_unchecked(pt)).collect())
        .collect();
    Ok(GramReport::from_samples(
        elements.iter().map(SurfaceElement::label).collect(),
        &values,
        &rule.weights,
        elements.iter().map(|e| e.norm_sq).collect(),
    ))
}

fn require_d_at_least_2(d: usize) -> Result<()> {
    if d >= 2 {
        Ok(())
    } else {
        Err(Error::UnsupportedDimension(d))
    }
}

/// At `q = -1`:
/// `t[t(1+t)g'' + (d-1+(d+1-p)t)g' - n(n-p+d)g] - m(m+d-2)g`, which vanishes
/// exactly when the element is an eigenfunction with eigenvalue `n(n-p+d)`.
pub fn surface_ode_residual_m(
    params: &SurfaceParams,
    element: &SurfaceElement,
) -> Result<(UniPoly, f64)> {
    require_d_at_least_2(params.d)?;
    let ConeFamily::M { p, q } = params.family else {
        return Err(Error::Domain(
            "this equation belongs to the M family".into(),
        ));
    };
    if q != -1.0 {
        return Err(Error::QNotMinusOne(q));
    }
    let d = params.d as f64;
    let (nf, mf) = (element.n as f64, element.m as f64);
    let g = element.profile();
    let inner = &(&(&UniPoly::new(vec![0.0, 1.0, 1.0]) * &g.derivative().derivative())
        + &(&UniPoly::linear(d + 1.0 - p, d - 1.0) * &g.derivative()))
        - &g.scale(nf * (nf - p + d));
    let res = &inner.shift(1) - &g.scale(mf * (mf + d - 2.0));
    let rel = relative_residual(&res, &g.shift(1));
    Ok((res, rel))
}

/// `t²g'' + (1-p+d)t g' - n(n-p+d)g - (m-n)(p-n-m-d) g_c`, where `g_c` is
/// the profile of `S_{n-1,m,l}` at parameter `p-2`.
pub fn surface_diffdiff_residual_n(
    params: &SurfaceParams,
    element: &SurfaceElement,
) -> Result<(UniPoly, f64)> {
    require_d_at_least_2(params.d)?;
    let ConeFamily::N { p } = params.family else {
        return Err(Error::Domain(
            "this identity belongs to the N family".into(),
        ));
    };
    let d = params.d as f64;
    let (n, m) = (element.n, element.m);
    let (nf, mf) = (n as f64, m as f64);
    let g = element.profile();
    let mut res = &(&(&UniPoly::monomial(2, 1.0) * &g.derivative().derivative())
        + &g.derivative().shift(1).scale(1.0 - p + d))
        - &g.scale(nf * (nf - p + d));
    if n > m {
        let companion = surface_element(&params.with_p(p - 2.0), n - 1, m, element.index)?;
        res = &res - &companion.profile().scale((mf - nf) * (p - nf - mf - d));
    }
    let rel = relative_residual(&res, &g);
    Ok((res, rel))
}

/// At `β = -1`: `t[t g'' + (d-1-t) g' + n g] - m(m+d-2) g` for a Laguerre
/// surface element.
pub fn surface_laguerre_ode_residual(
    params: &SurfaceParams,
    element: &SurfaceElement,
) -> Result<(UniPoly, f64)> {
    require_d_at_least_2(params.d)?;
    let ConeFamily::Laguerre { beta } = params.family else {
        return Err(Error::Domain(
            "this equation belongs to the Laguerre family".into(),
        ));
    };
    if beta != -1.0 {
        return Err(Error::QNotMinusOne(beta));
    }
    let d = params.d as f64;
    let (nf, mf) = (element.n as f64, element.m as f64);
    let g = element.profile();
    let inner = &(&g.derivative().derivative().shift(1)
        + &(&UniPoly::linear(-1.0, d - 1.0) * &g.derivative()))
        + &g.scale(nf);
    let res = &inner.shift(1) - &g.scale(mf * (mf + d - 2.0));
    let rel = relative_residual(&res, &g.shift(1));
    Ok((res, rel))
}

/// Points `(t ξ, t)` for five `t` in `(0, 2]` and the sample directions `ξ`.
pub fn surface_sample_grid(d: usize) -> Vec<Vec<f64>> {
    let mut pts = Vec::new();
    for i in 1..=5 {
        let t = 0.4 * i as f64;
        for dir in sample_directions(d) {
            let mut pt: Vec<f64> = dir.iter().map(|c| t * c).collect();
            pt.push(t);
            pts.push(pt);
        }
    }
    pts
}

/// `S^{p,q,M}(x, t/p)` against `(-1)^{n-m}(n-m)! S^{q,L}(x, t)` on the
/// surface sample grid, one maximum per `p`.
pub fn surface_limit_m(
    params: &SurfaceParams,
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
    let lag = SurfaceParams::new(params.d, ConeFamily::Laguerre { beta: q });
    let target = surface_element(&lag, n, m, index)?;
    let k = n - m;
    let scale = if k.is_multiple_of(2) { 1.0 } else { -1.0 } * factorial(k);
    let grid = surface_sample_grid(params.d);
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
                    let y = target.harmonic.eval_unchecked(pt);
                    ((radial.eval(t / p) - scale * target.radial.eval(t)) * y).abs()
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
