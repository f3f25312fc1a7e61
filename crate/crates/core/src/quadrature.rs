//! Gauss rules and exact integration against every weight used by the
//! cone and surface families.
//!
//! Nodes come from the Jacobi matrix of the weight's recurrence
//! coefficients (implicit QL with a Sturm bisection fallback, then Newton
//! polishing); weights from the Christoffel function, which keeps small
//! weights accurate to full relative precision.
//!
//! The two finite weights on `[0, ∞)` are mapped to classical ones:
//!
//! * `t^q (1+t)^{-p-q}` via `t = u/(1-u)` becomes the Jacobi weight
//!   `u^q (1-u)^{p-2-D}` on `[0, 1]` for an integrand of degree `D`;
//! * `t^{-p} e^{-1/t}` via `s = 1/t` becomes the Laguerre weight
//!   `s^{p-2-D} e^{-s}`.
//!
//! A degree-`D` polynomial is integrable exactly when the transformed
//! exponent exceeds `-1`, which is where finite orthogonality comes from.

use crate::error::{Error, Result};
use crate::harmonics::sphere_rule;
use crate::polyalg::MultiPoly;
use crate::scalars::{gamma_ratio, ln_beta, ln_gamma};
use crate::univariate::UniPoly;
use serde::{Deserialize, Serialize};

/// Classical weight families for [`gauss_rule`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum GaussKind {
    /// `1` on `[-1, 1]`.
    Legendre,
    /// `(1-x)^α (1+x)^β` on `[-1, 1]`.
    Jacobi { alpha: f64, beta: f64 },
    /// `x^α e^{-x}` on `[0, ∞)`.
    Laguerre { alpha: f64 },
}

/// A one-dimensional rule: `Σ w_i f(x_i) = ∫ f w` for `deg f ≤ exactness_degree`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuadRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub exactness_degree: usize,
    pub kind: GaussKind,
}

impl QuadRule {
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(x, w)| w * f(*x))
            .sum()
    }

    pub fn total_weight(&self) -> f64 {
        self.weights.iter().sum()
    }
}

/// Monic recurrence coefficients `(a_k, b_k)` and `ln` of the total mass.
fn recurrence(kind: GaussKind, n: usize) -> Result<(Vec<f64>, Vec<f64>, f64)> {
    match kind {
        GaussKind::Legendre => recurrence(
            GaussKind::Jacobi {
                alpha: 0.0,
                beta: 0.0,
            },
            n,
        ),
        GaussKind::Jacobi { alpha, beta } => {
            if !(alpha > -1.0) || !(beta > -1.0) {
                return Err(Error::validity(
                    "alpha > -1, beta > -1",
                    format!("alpha = {alpha}, beta = {beta}"),
                ));
            }
            let s = alpha + beta;
            let mut a = Vec::with_capacity(n);
            let mut b = vec![0.0; n];
            for k in 0..n {
                let kf = k as f64;
                a.push(if k == 0 {
                    (beta - alpha) / (s + 2.0)
                } else {
                    (beta * beta - alpha * alpha) / ((2.0 * kf + s) * (2.0 * kf + s + 2.0))
                });
                if k == 1 {
                    b[1] = 4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + s).powi(2) * (3.0 + s));
                } else if k > 1 {
                    let c = 2.0 * kf + s;
                    b[k] = 4.0 * kf * (kf + alpha) * (kf + beta) * (kf + s)
                        / (c * c * (c + 1.0) * (c - 1.0));
                }
            }
            let ln_mass = (s + 1.0) * std::f64::consts::LN_2 + ln_beta(alpha + 1.0, beta + 1.0)?;
            Ok((a, b, ln_mass))
        }
        GaussKind::Laguerre { alpha } => {
            if !(alpha > -1.0) {
                return Err(Error::validity("alpha > -1", format!("alpha = {alpha}")));
            }
            let a = (0..n).map(|k| 2.0 * k as f64 + alpha + 1.0).collect();
            let b = (0..n).map(|k| k as f64 * (k as f64 + alpha)).collect();
            Ok((a, b, ln_gamma(alpha + 1.0)?))
        }
    }
}

/// Eigenvalues of the symmetric tridiagonal matrix by implicit QL.
fn ql_eigenvalues(diag: &[f64], off: &[f64]) -> Option<Vec<f64>> {
    let n = diag.len();
    let mut d = diag.to_vec();
    let mut e: Vec<f64> = off.to_vec();
    e.push(0.0);
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 60 {
                return None;
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    if d.iter().all(|v| v.is_finite()) {
        d.sort_by(|a, b| a.partial_cmp(b).unwrap());
        Some(d)
    } else {
        None
    }
}

/// Eigenvalues by Sturm-sequence bisection.
fn bisection_eigenvalues(diag: &[f64], off: &[f64]) -> Vec<f64> {
    let n = diag.len();
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for i in 0..n {
        let r = if i > 0 { off[i - 1].abs() } else { 0.0 } + off.get(i).map_or(0.0, |v| v.abs());
        lo = lo.min(diag[i] - r);
        hi = hi.max(diag[i] + r);
    }
    let count_below = |x: f64| {
        let mut count = 0;
        let mut q = diag[0] - x;
        if q < 0.0 {
            count += 1;
        }
        for i in 1..n {
            let qq = if q == 0.0 {
                f64::EPSILON * (off[i - 1].abs() + 1.0)
            } else {
                q
            };
            q = diag[i] - x - off[i - 1] * off[i - 1] / qq;
            if q < 0.0 {
                count += 1;
            }
        }
        count
    };
    (0..n)
        .map(|k| {
            let (mut a, mut b) = (lo, hi);
            for _ in 0..200 {
                let mid = 0.5 * (a + b);
                if mid == a || mid == b {
                    break;
                }
                if count_below(mid) > k {
                    b = mid;
                } else {
                    a = mid;
                }
            }
            0.5 * (a + b)
        })
        .collect()
}

/// Orthonormal polynomials `p̂_0..p̂_n` and `p̂_n'` at `x`.
fn orthonormal_values(a: &[f64], sb: &[f64], x: f64) -> (Vec<f64>, f64) {
    let n = a.len();
    let mut vals = Vec::with_capacity(n + 1);
    let (mut prev, mut cur) = (0.0, 1.0);
    let (mut dprev, mut dcur) = (0.0, 0.0);
    vals.push(cur);
    for k in 0..n {
        let next_b = if k + 1 < n { sb[k + 1] } else { 1.0 };
        let next = ((x - a[k]) * cur - sb[k] * prev) / next_b;
        let dnext = (cur + (x - a[k]) * dcur - sb[k] * dprev) / next_b;
        prev = cur;
        cur = next;
        dprev = dcur;
        dcur = dnext;
        vals.push(cur);
    }
    (vals, dcur)
}

/// Nodes and probability weights (summing to one) plus `ln` of the mass.
pub(crate) fn gauss_probability(kind: GaussKind, n: usize) -> Result<(Vec<f64>, Vec<f64>, f64)> {
    if n == 0 {
        return Err(Error::Domain(
            "a Gauss rule needs at least one point".into(),
        ));
    }
    let (a, b, ln_mass) = recurrence(kind, n)?;
    let sb: Vec<f64> = b.iter().map(|v| v.sqrt()).collect();
    let off = &sb[1..];
    let mut nodes = ql_eigenvalues(&a, off).unwrap_or_else(|| bisection_eigenvalues(&a, off));
    for x in nodes.iter_mut() {
        for _ in 0..3 {
            let (vals, dp) = orthonormal_values(&a, &sb, *x);
            let pn = vals[n];
            if dp == 0.0 || pn == 0.0 {
                break;
            }
            let cand = *x - pn / dp;
            let (cv, _) = orthonormal_values(&a, &sb, cand);
            if cv[n].abs() < pn.abs() {
                *x = cand;
            } else {
                break;
            }
        }
    }
    let weights: Vec<f64> = nodes
        .iter()
        .map(|&x| {
            let (vals, _) = orthonormal_values(&a, &sb, x);
            1.0 / vals[..n].iter().map(|v| v * v).sum::<f64>()
        })
        .collect();
    let total: f64 = weights.iter().sum();
    let weights = weights.into_iter().map(|w| w / total).collect();
    Ok((nodes, weights, ln_mass))
}

/// `npoints`-point Gauss rule exact to degree `2 npoints - 1`.
pub fn gauss_rule(kind: GaussKind, npoints: usize) -> Result<QuadRule> {
    let (nodes, probs, ln_mass) = gauss_probability(kind, npoints)?;
    let mass = ln_mass.exp();
    if !mass.is_finite() {
        return Err(Error::Overflow(ln_mass));
    }
    Ok(QuadRule {
        nodes,
        weights: probs.into_iter().map(|w| w * mass).collect(),
        exactness_degree: 2 * npoints - 1,
        kind,
    })
}

/// Points needed for exactness up to `degree`.
pub fn points_for_degree(degree: usize) -> usize {
    degree / 2 + 1
}

/// Weights on `[0, ∞)` used as the `t`-factor of cone and surface measures.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum RadialWeight {
    /// `t^q (1+t)^{-p-q}`.
    M { p: f64, q: f64 },
    /// `t^{-p} e^{-1/t}`.
    N { p: f64 },
    /// `t^α e^{-t}`.
    Laguerre { alpha: f64 },
}

/// A rule in `t` normalized by the weight's mass:
/// `Σ W_i f(t_i) = ∫ f w / ∫ w` for `deg f ≤ exactness_degree`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadialRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub exactness_degree: usize,
    pub weight: RadialWeight,
}

impl RadialRule {
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(t, w)| w * f(*t))
            .sum()
    }
}

impl RadialWeight {
    pub fn eval(&self, t: f64) -> f64 {
        match *self {
            RadialWeight::M { p, q } => t.powf(q) / (1.0 + t).powf(p + q),
            RadialWeight::N { p } => {
                if t <= 0.0 {
                    0.0
                } else {
                    t.powf(-p) * (-1.0 / t).exp()
                }
            }
            RadialWeight::Laguerre { alpha } => t.powf(alpha) * (-t).exp(),
        }
    }

    /// Whether every polynomial of degree `degree` is integrable.
    pub fn check_integrable(&self, degree: usize) -> Result<()> {
        let dg = degree as f64;
        match *self {
            RadialWeight::M { p, q } => {
                if !(q > -1.0) {
                    return Err(Error::integrability("q > -1", format!("q = {q}")));
                }
                if !(p > dg + 1.0) {
                    return Err(Error::integrability(
                        "p > deg + 1",
                        format!("p = {p}, deg = {degree}"),
                    ));
                }
            }
            RadialWeight::N { p } => {
                if !(p > dg + 1.0) {
                    return Err(Error::integrability(
                        "p > deg + 1",
                        format!("p = {p}, deg = {degree}"),
                    ));
                }
            }
            RadialWeight::Laguerre { alpha } => {
                if !(alpha > -1.0) {
                    return Err(Error::integrability(
                        "alpha > -1",
                        format!("alpha = {alpha}"),
                    ));
                }
            }
        }
        Ok(())
    }

    /// `ln ∫_0^∞ w`.
    pub fn ln_mass(&self) -> Result<f64> {
        self.check_integrable(0)?;
        match *self {
            RadialWeight::M { p, q } => ln_beta(q + 1.0, p - 1.0),
            RadialWeight::N { p } => ln_gamma(p - 1.0),
            RadialWeight::Laguerre { alpha } => ln_gamma(alpha + 1.0),
        }
    }

    /// Mass-normalized rule exact for polynomials of degree `degree`.
    pub fn rule(&self, degree: usize) -> Result<RadialRule> {
        self.check_integrable(degree)?;
        let n = points_for_degree(degree);
        let dg = degree as f64;
        let (nodes, weights) = match *self {
            RadialWeight::M { p, q } => {
                let a = p - 2.0 - dg;
                // Jacobi on [-1,1] with (1-x)^a (1+x)^q, then u = (1+x)/2
                let (xs, probs, _) = gauss_probability(GaussKind::Jacobi { alpha: a, beta: q }, n)?;
                let scale = gamma_ratio(p + q, p + q - dg)? * gamma_ratio(p - 1.0 - dg, p - 1.0)?;
                xs.iter()
                    .zip(&probs)
                    .map(|(x, w)| {
                        let u = 0.5 * (1.0 + x);
                        let one_minus = 0.5 * (1.0 - x);
                        (u / one_minus, scale * w * one_minus.powi(degree as i32))
                    })
                    .unzip()
            }
            RadialWeight::N { p } => {
                let a = p - 2.0 - dg;
                let (ss, probs, _) = gauss_probability(GaussKind::Laguerre { alpha: a }, n)?;
                let scale = gamma_ratio(p - 1.0 - dg, p - 1.0)?;
                ss.iter()
                    .zip(&probs)
                    .map(|(s, w)| (1.0 / s, scale * w * s.powi(degree as i32)))
                    .unzip()
            }
            RadialWeight::Laguerre { alpha } => {
                let (ts, probs, _) = gauss_probability(GaussKind::Laguerre { alpha }, n)?;
                (ts, probs)
            }
        };
        Ok(RadialRule {
            nodes,
            weights,
            exactness_degree: degree,
            weight: *self,
        })
    }
}

fn lowest_power(f: &UniPoly) -> usize {
    f.coeffs().iter().position(|c| *c != 0.0).unwrap_or(0)
}

/// `∫_0^∞ f(t) t^q (1+t)^{-p-q} dt`, exact for polynomial `f`.
pub fn integrate_wpq(f: &UniPoly, p: f64, q: f64) -> Result<f64> {
    if f.is_zero() {
        return Ok(0.0);
    }
    // t^k factors move into the weight exponent
    let k = lowest_power(f);
    let h = f.unshift(k).expect("lowest power is exact");
    let (p, q) = (p - k as f64, q + k as f64);
    let deg = h.degree();
    let dg = deg as f64;
    RadialWeight::M { p, q }.check_integrable(deg)?;
    let a = p - 2.0 - dg;
    let (xs, probs, _) = gauss_probability(
        GaussKind::Jacobi { alpha: a, beta: q },
        points_for_degree(deg),
    )?;
    let reversed: Vec<f64> = h.coeffs().iter().rev().copied().collect();
    let sum: f64 = xs
        .iter()
        .zip(&probs)
        .map(|(x, w)| {
            let u = 0.5 * (1.0 + x);
            let v = 0.5 * (1.0 - x);
            // g(u) = Σ h_j u^j (1-u)^{D-j}
            let g = if u < 0.5 {
                h.eval(u / v) * v.powi(deg as i32)
            } else {
                UniPoly::new(reversed.clone()).eval(v / u) * u.powi(deg as i32)
            };
            w * g
        })
        .sum();
    Ok(sum * ln_beta(q + 1.0, a + 1.0)?.exp())
}

/// `∫_0^∞ f(t) t^{-p} e^{-1/t} dt`, exact for polynomial `f`.
pub fn integrate_wp_invexp(f: &UniPoly, p: f64) -> Result<f64> {
    if f.is_zero() {
        return Ok(0.0);
    }
    let deg = f.degree();
    RadialWeight::N { p }.check_integrable(deg)?;
    let a = p - 2.0 - deg as f64;
    let (ss, probs, ln_mass) =
        gauss_probability(GaussKind::Laguerre { alpha: a }, points_for_degree(deg))?;
    let reversed = UniPoly::new(f.coeffs().iter().rev().copied().collect());
    let sum: f64 = ss
        .iter()
        .zip(&probs)
        .map(|(s, w)| w * reversed.eval(*s))
        .sum();
    Ok(sum * ln_mass.exp())
}

/// A rule on a product domain with mass-normalized weights.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointRule {
    pub points: Vec<Vec<f64>>,
    pub weights: Vec<f64>,
    pub exactness_degree: usize,
}

impl PointRule {
    pub fn integrate<F: Fn(&[f64]) -> f64>(&self, f: F) -> f64 {
        self.points
            .iter()
            .zip(&self.weights)
            .map(|(x, w)| w * f(x))
            .sum()
    }

    pub fn integrate_poly(&self, f: &MultiPoly) -> f64 {
        self.integrate(|pt| f.eval_unchecked(pt))
    }
}

/// Ball rule `Σ w_k f(x_k) = b_μ^B ∫_B f (1-‖x‖²)^{μ-1/2} dx`, exact to `degree`.
pub fn ball_rule(d: usize, mu: f64, degree: usize) -> Result<PointRule> {
    if !(mu > -0.5) {
        return Err(Error::validity("mu > -1/2", format!("mu = {mu}")));
    }
    let sphere = sphere_rule(d, degree)?;
    // s = r², weight s^{(d-2)/2} (1-s)^{μ-1/2} on [0,1]
    let n = points_for_degree(degree / 2);
    let (xs, probs, _) = gauss_probability(
        GaussKind::Jacobi {
            alpha: mu - 0.5,
            beta: (d as f64 - 2.0) / 2.0,
        },
        n,
    )?;
    let mut points = Vec::with_capacity(n * sphere.points.len());
    let mut weights = Vec::with_capacity(points.capacity());
    for (x, w) in xs.iter().zip(&probs) {
        let r = (0.5 * (1.0 + x)).sqrt();
        for (xi, v) in sphere.points.iter().zip(&sphere.weights) {
            points.push(xi.iter().map(|c| r * c).collect());
            weights.push(w * v);
        }
    }
    Ok(PointRule {
        points,
        weights,
        exactness_degree: degree,
    })
}

/// `∫_B f (1-‖x‖²)^{μ-1/2} dx`, unnormalized.
pub fn integrate_ball(d: usize, mu: f64, f: &MultiPoly) -> Result<f64> {
    if f.dim_x() != d {
        return Err(Error::DimensionMismatch {
            left: d,
            right: f.dim_x(),
        });
    }
    let rule = ball_rule(d, mu, f.degree())?;
    let val = rule.integrate(|x| {
        let mut pt = x.to_vec();
        pt.push(0.0);
        f.eval_unchecked(&pt)
    });
    Ok(val / crate::ball::ball_normalization(d, mu)?)
}

/// Radial weight seen by `t` after `x = t y` on the solid cone.
pub fn cone_radial_weight(d: usize, mu: f64, weight: RadialWeight) -> RadialWeight {
    let shift = 2.0 * mu + d as f64 - 1.0;
    match weight {
        RadialWeight::M { p, q } => RadialWeight::M {
            p: p - shift,
            q: q + shift,
        },
        RadialWeight::N { p } => RadialWeight::N { p: p - shift },
        RadialWeight::Laguerre { alpha } => RadialWeight::Laguerre {
            alpha: alpha + shift,
        },
    }
}

/// Radial weight seen by `t` after `x = t ξ` on the conic surface.
pub fn surface_radial_weight(d: usize, weight: RadialWeight) -> RadialWeight {
    let shift = d as f64 - 1.0;
    match weight {
        RadialWeight::M { p, q } => RadialWeight::M {
            p: p - shift,
            q: q + shift,
        },
        RadialWeight::N { p } => RadialWeight::N { p: p - shift },
        RadialWeight::Laguerre { alpha } => RadialWeight::Laguerre {
            alpha: alpha + shift,
        },
    }
}

/// Normalized solid-cone rule: `Σ w_k f(x_k, t_k) = ∫ f W / ∫ W` with
/// `W = (t² - ‖x‖²)^{μ-1/2} w(t)`, exact for total degree `degree`.
pub fn cone_rule(d: usize, mu: f64, weight: RadialWeight, degree: usize) -> Result<PointRule> {
    let radial = cone_radial_weight(d, mu, weight).rule(degree)?;
    let ball = ball_rule(d, mu, degree)?;
    Ok(product_rule(&radial, &ball))
}

/// Normalized surface rule: `Σ w_k f(x_k, t_k) = ∫ f w dσ / ∫ w dσ`.
pub fn surface_rule(d: usize, weight: RadialWeight, degree: usize) -> Result<PointRule> {
    let radial = surface_radial_weight(d, weight).rule(degree)?;
    let sphere = sphere_rule(d, degree)?;
    Ok(product_rule(&radial, &sphere))
}

fn product_rule(radial: &RadialRule, angular: &PointRule) -> PointRule {
    let mut points = Vec::with_capacity(radial.nodes.len() * angular.points.len());
    let mut weights = Vec::with_capacity(points.capacity());
    for (t, w) in radial.nodes.iter().zip(&radial.weights) {
        for (y, v) in angular.points.iter().zip(&angular.weights) {
            let mut pt: Vec<f64> = y.iter().map(|c| t * c).collect();
            pt.push(*t);
            points.push(pt);
            weights.push(w * v);
        }
    }
    PointRule {
        points,
        weights,
        exactness_degree: radial.exactness_degree.min(angular.exactness_degree),
    }
}

/// `∫_{V^{d+1}} f(x,t) (t²-‖x‖²)^{μ-1/2} w(t) dx dt`, unnormalized.
pub fn integrate_cone(d: usize, mu: f64, weight: RadialWeight, f: &MultiPoly) -> Result<f64> {
    if f.dim_x() != d {
        return Err(Error::DimensionMismatch {
            left: d,
            right: f.dim_x(),
        });
    }
    let shifted = cone_radial_weight(d, mu, weight);
    let rule = cone_rule(d, mu, weight, f.degree())?;
    let mass = shifted.ln_mass()?.exp() / crate::ball::ball_normalization(d, mu)?;
    Ok(rule.integrate_poly(f) * mass)
}

/// `∫_{V_0^{d+1}} f(x,t) w(t) dσ(x,t)`, unnormalized.
pub fn integrate_surface(d: usize, weight: RadialWeight, f: &MultiPoly) -> Result<f64> {
    if f.dim_x() != d {
        return Err(Error::DimensionMismatch {
            left: d,
            right: f.dim_x(),
        });
    }
    let shifted = surface_radial_weight(d, weight);
    let rule = surface_rule(d, weight, f.degree())?;
    let mass = shifted.ln_mass()?.exp() * crate::harmonics::sphere_area(d);
    Ok(rule.integrate_poly(f) * mass)
}
