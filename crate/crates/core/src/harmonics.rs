//! Real solid spherical harmonics for `d ∈ {1, 2, 3}` and rules on the
//! sphere `S^{d-1}`.
//!
//! All bases are orthonormal for the normalized surface measure
//! `dσ / ω_d`. On `d = 1` the "sphere" is `{-1, 1}`.

use crate::error::{Error, Result};
use crate::polyalg::{Factor, MultiPoly, OperatorSpec};
use crate::quadrature::{gauss_probability, GaussKind, PointRule};
use crate::scalars::{binomial, factorial, falling_factorial, gamma_fn};

/// Homogeneous harmonic polynomials of one degree, orthonormal on the sphere.
#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicBasis {
    pub d: usize,
    pub m: usize,
    pub elements: Vec<MultiPoly>,
    /// Unnormalized forms with dyadic coefficients; `elements[i] = scales[i] * raw[i]`.
    pub raw: Vec<MultiPoly>,
    pub scales: Vec<f64>,
}

/// `dim H_m^d = C(m+d-1, m) - C(m+d-3, m-2)`, for `d >= 1`.
pub fn dim_harmonic(d: usize, m: usize) -> usize {
    let full = binomial(m + d - 1, m) as usize;
    let lower = if m >= 2 {
        binomial(m + d - 3, m - 2) as usize
    } else {
        0
    };
    full - lower
}

/// `ω_d = 2 π^{d/2} / Γ(d/2)`.
pub fn sphere_area(d: usize) -> f64 {
    let half = d as f64 / 2.0;
    2.0 * std::f64::consts::PI.powf(half) / gamma_fn(half).expect("d >= 1")
}

fn check_dim(d: usize) -> Result<()> {
    if (1..=3).contains(&d) {
        Ok(())
    } else {
        Err(Error::UnsupportedDimension(d))
    }
}

/// Real and imaginary parts of `(x_a + i x_b)^k` in a `dim`-variable ring.
fn complex_power(dim: usize, a: usize, b: usize, k: usize) -> (MultiPoly, MultiPoly) {
    let mut re = Vec::new();
    let mut im = Vec::new();
    for j in 0..=k {
        let c = binomial(k, j);
        let mut e = vec![0u32; dim + 1];
        e[a] = (k - j) as u32;
        e[b] = j as u32;
        // i^j
        match j % 4 {
            0 => re.push((e, c)),
            1 => im.push((e, c)),
            2 => re.push((e, -c)),
            _ => im.push((e, -c)),
        }
    }
    (
        MultiPoly::from_terms(dim, re),
        MultiPoly::from_terms(dim, im),
    )
}

/// `Σ_j c_j z^{m-k-2j} r^{2j}`: the homogenized `k`-th derivative of `P_m`.
fn legendre_derivative_solid(m: usize, k: usize) -> MultiPoly {
    let r2 = MultiPoly::norm_sq_x(3);
    let mut out = MultiPoly::zero(3);
    let mut j = 0;
    while 2 * j + k <= m {
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        let c = sign * binomial(m, j) * binomial(2 * m - 2 * j, m) / 2f64.powi(m as i32)
            * falling_factorial((m - 2 * j) as f64, k);
        let mut e = vec![0u32; 4];
        e[2] = (m - k - 2 * j) as u32;
        out = &out + &(&MultiPoly::monomial(3, e, c) * &r2.pow(j));
        j += 1;
    }
    out
}

/// Orthonormal basis of `H_m^d`.
pub fn harmonic_basis(d: usize, m: usize) -> Result<HarmonicBasis> {
    check_dim(d)?;
    let (raw, scales): (Vec<MultiPoly>, Vec<f64>) = match d {
        1 => match m {
            0 => (vec![MultiPoly::constant(1, 1.0)], vec![1.0]),
            1 => (vec![MultiPoly::x(1, 0)], vec![1.0]),
            _ => (Vec::new(), Vec::new()),
        },
        2 => {
            if m == 0 {
                (vec![MultiPoly::constant(2, 1.0)], vec![1.0])
            } else {
                let (re, im) = complex_power(2, 0, 1, m);
                let s = std::f64::consts::SQRT_2;
                (vec![re, im], vec![s, s])
            }
        }
        _ => {
            let mut raw = Vec::with_capacity(2 * m + 1);
            let mut scales = Vec::with_capacity(2 * m + 1);
            for k in 0..=m {
                let radial = legendre_derivative_solid(m, k);
                let norm2 = (2 * m + 1) as f64 * factorial(m - k) / factorial(m + k);
                if k == 0 {
                    raw.push(radial);
                    scales.push(norm2.sqrt());
                } else {
                    let (re, im) = complex_power(3, 0, 1, k);
                    raw.push(&re * &radial);
                    raw.push(&im * &radial);
                    scales.push((2.0 * norm2).sqrt());
                    scales.push((2.0 * norm2).sqrt());
                }
            }
            (raw, scales)
        }
    };
    let elements = raw.iter().zip(&scales).map(|(p, s)| p.scale(*s)).collect();
    Ok(HarmonicBasis {
        d,
        m,
        elements,
        raw,
        scales,
    })
}

/// True when `Δ_x p` is the zero polynomial.
pub fn is_harmonic(p: &MultiPoly) -> bool {
    OperatorSpec::new(p.dim_x())
        .scalar_term(1.0, &[Factor::LaplacianX])
        .apply(p)
        .map(|r| r.is_zero())
        .unwrap_or(false)
}

/// Rule with `Σ w_k f(ξ_k) = (1/ω_d) ∫_{S^{d-1}} f dσ`, exact to `max_degree`.
///
/// `d = 2` uses `max_degree + 1` equispaced angles: the trapezoid rule
/// with `N` points integrates trigonometric polynomials of degree below `N`.
pub fn sphere_rule(d: usize, max_degree: usize) -> Result<PointRule> {
    check_dim(d)?;
    let two_pi = 2.0 * std::f64::consts::PI;
    let (points, weights) = match d {
        1 => (vec![vec![-1.0], vec![1.0]], vec![0.5, 0.5]),
        2 => {
            let n = max_degree + 1;
            (0..n)
                .map(|j| {
                    let phi = two_pi * j as f64 / n as f64;
                    (vec![phi.cos(), phi.sin()], 1.0 / n as f64)
                })
                .unzip()
        }
        _ => {
            let nz = (max_degree + 2) / 2;
            let nphi = max_degree + 1;
            let (zs, zw, _) = gauss_probability(GaussKind::Legendre, nz)?;
            let mut pts = Vec::with_capacity(nz * nphi);
            let mut ws = Vec::with_capacity(nz * nphi);
            for (z, w) in zs.iter().zip(&zw) {
                let rho = (1.0 - z * z).max(0.0).sqrt();
                for j in 0..nphi {
                    let phi = two_pi * j as f64 / nphi as f64;
                    pts.push(vec![rho * phi.cos(), rho * phi.sin(), *z]);
                    ws.push(w / nphi as f64);
                }
            }
            (pts, ws)
        }
    };
    Ok(PointRule {
        points,
        weights,
        exactness_degree: max_degree,
    })
}

#[cfg(test)]
mod tests {
    /// Restriction of a polynomial in `x` (no `t`) to a point of `R^d`.
    fn eval_x(p: &MultiPoly, x: &[f64]) -> f64 {
        let mut pt = x.to_vec();
        pt.push(0.0);
        p.eval_unchecked(&pt)
    }
    use super::*;

    #[test]
    fn dimensions() {
        assert_eq!(dim_harmonic(1, 0), 1);
        assert_eq!(dim_harmonic(2, 0), 1);
        assert_eq!(dim_harmonic(3, 0), 1);
        assert_eq!(dim_harmonic(3, 2), 5);
        assert_eq!(dim_harmonic(1, 2), 0);
        assert_eq!(dim_harmonic(1, 1), 1);
        assert_eq!(dim_harmonic(2, 5), 2);
        assert_eq!(dim_harmonic(3, 4), 9);
        for d in 1..=3 {
            for m in 0..=8 {
                assert_eq!(
                    harmonic_basis(d, m).unwrap().elements.len(),
                    dim_harmonic(d, m)
                );
            }
        }
    }

    #[test]
    fn basis_examples() {
        let b = harmonic_basis(2, 1).unwrap();
        let s = std::f64::consts::SQRT_2;
        assert_eq!(
            b.elements,
            vec![MultiPoly::x(2, 0).scale(s), MultiPoly::x(2, 1).scale(s)]
        );
        assert_eq!(
            harmonic_basis(1, 1).unwrap().elements,
            vec![MultiPoly::x(1, 0)]
        );
        assert_eq!(
            harmonic_basis(3, 0).unwrap().elements,
            vec![MultiPoly::constant(3, 1.0)]
        );
        assert_eq!(harmonic_basis(4, 1), Err(Error::UnsupportedDimension(4)));
    }

    #[test]
    fn harmonic_and_homogeneous() {
        for d in 1..=3 {
            for m in 0..=6 {
                let b = harmonic_basis(d, m).unwrap();
                for (raw, y) in b.raw.iter().zip(&b.elements) {
                    assert!(is_harmonic(raw), "d={d} m={m}");
                    assert!(y.is_homogeneous(m));
                }
            }
        }
    }

    #[test]
    fn sphere_rule_examples() {
        let r1 = sphere_rule(1, 2).unwrap();
        assert!((r1.integrate(|x| x[0] * x[0]) - 1.0).abs() < 1e-15);
        let r2 = sphere_rule(2, 4).unwrap();
        assert!((r2.integrate(|x| x[0] * x[0]) - 0.5).abs() < 1e-15);
        let r3 = sphere_rule(3, 4).unwrap();
        assert!((r3.integrate(|x| x[2] * x[2]) - 1.0 / 3.0).abs() < 1e-15);
        assert!(sphere_rule(5, 2).is_err());
    }

    #[test]
    fn orthonormal_on_sphere() {
        for d in 1..=3 {
            let all: Vec<(usize, MultiPoly)> = (0..=6)
                .flat_map(|m| {
                    harmonic_basis(d, m)
                        .unwrap()
                        .elements
                        .into_iter()
                        .map(move |y| (m, y))
                })
                .collect();
            let rule = sphere_rule(d, 12).unwrap();
            for (i, (_, a)) in all.iter().enumerate() {
                for (j, (_, b)) in all.iter().enumerate() {
                    let g = rule.integrate(|x| eval_x(a, x) * eval_x(b, x));
                    let want = if i == j { 1.0 } else { 0.0 };
                    assert!((g - want).abs() < 1e-12, "d={d} ({i},{j}) = {g}");
                }
            }
        }
    }

    #[test]
    fn areas() {
        assert_eq!(sphere_area(1), 2.0);
        assert!((sphere_area(2) - 2.0 * std::f64::consts::PI).abs() < 1e-14);
        assert!((sphere_area(3) - 4.0 * std::f64::consts::PI).abs() < 1e-14);
    }
}
