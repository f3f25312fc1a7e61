//! Orthogonal bases on the unit ball for `(1 - ‖x‖²)^{μ-1/2}`.

use crate::error::{Error, Result};
use crate::harmonics::{harmonic_basis, sphere_area};
use crate::polyalg::{relative_residual, Factor, MultiPoly, OperatorSpec};
use crate::scalars::{binomial, gamma_fn};
use crate::univariate::{
    gegenbauer_poly, jacobi_normalization, jacobi_poly, norm_gegenbauer, norm_jacobi,
};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Normalization of the ball (and cone angular) bases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Convention {
    /// Unit norm under `b_μ^B ∫ f g w_μ`.
    Orthonormal,
    /// `d = 1` only: the unnormalized Gegenbauer polynomial `C_n^{(μ)}`.
    PaperGegenbauer,
}

/// One basis element of `V_n^d(w_μ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct BallElement {
    /// Jacobi degree; the harmonic has degree `n - 2m`.
    pub m: usize,
    /// Harmonic index within `H_{n-2m}^d`, zero-based.
    pub l: usize,
    pub poly: MultiPoly,
    /// `b_μ^B ∫ poly² w_μ`.
    pub norm_sq: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BallBasis {
    pub d: usize,
    pub mu: f64,
    pub n: usize,
    pub convention: Convention,
    pub elements: Vec<BallElement>,
}

/// `b_μ^B = Γ(μ + (d+1)/2) / (π^{d/2} Γ(μ + 1/2))`.
pub fn ball_normalization(d: usize, mu: f64) -> Result<f64> {
    if !(mu > -0.5) {
        return Err(Error::validity("mu > -1/2", format!("mu = {mu}")));
    }
    Ok(gamma_fn(mu + (d as f64 + 1.0) / 2.0)? / (PI.powf(d as f64 / 2.0) * gamma_fn(mu + 0.5)?))
}

/// `dim V_n^d = C(n+d-1, n)`.
pub fn dim_ball(d: usize, n: usize) -> usize {
    binomial(n + d - 1, n) as usize
}

/// Basis of `V_n^d(w_μ)` as `P_m^{(μ-1/2, n-2m+(d-2)/2)}(2‖x‖²-1) Y(x)`.
pub fn ball_basis(d: usize, mu: f64, n: usize, convention: Convention) -> Result<BallBasis> {
    let b = ball_normalization(d, mu)?;
    if !(1..=3).contains(&d) {
        return Err(Error::UnsupportedDimension(d));
    }
    let elements = match convention {
        Convention::PaperGegenbauer => {
            if d != 1 {
                return Err(Error::UnsupportedDimension(d));
            }
            let c = gegenbauer_poly(n, mu)?;
            vec![BallElement {
                m: 0,
                l: 0,
                poly: MultiPoly::from_uni(1, &c, crate::polyalg::Var::X(0)),
                norm_sq: b * norm_gegenbauer(n, mu)?,
            }]
        }
        Convention::Orthonormal => {
            let arg = &MultiPoly::norm_sq_x(d).scale(2.0) - &MultiPoly::constant(d, 1.0);
            let alpha = mu - 0.5;
            let mut out = Vec::with_capacity(dim_ball(d, n));
            for m in 0..=n / 2 {
                let j = n - 2 * m;
                let beta = j as f64 + (d as f64 - 2.0) / 2.0;
                let radial = MultiPoly::compose_uni(&jacobi_poly(m, alpha, beta)?, &arg);
                let norm_sq = b * sphere_area(d) * norm_jacobi(m, alpha, beta)?
                    / (2.0 * jacobi_normalization(alpha, beta)?);
                let scale = 1.0 / norm_sq.sqrt();
                for (l, y) in harmonic_basis(d, j)?.elements.iter().enumerate() {
                    out.push(BallElement {
                        m,
                        l,
                        poly: (&radial * y).scale(scale),
                        norm_sq: 1.0,
                    });
                }
            }
            out
        }
    };
    Ok(BallBasis {
        d,
        mu,
        n,
        convention,
        elements,
    })
}

/// `Δ - ⟨x,∇⟩² - (2μ+d-1)⟨x,∇⟩`.
pub fn ball_operator(d: usize, mu: f64) -> OperatorSpec {
    OperatorSpec::new(d)
        .scalar_term(1.0, &[Factor::LaplacianX])
        .scalar_term(-1.0, &[Factor::Euler, Factor::Euler])
        .scalar_term(-(2.0 * mu + d as f64 - 1.0), &[Factor::Euler])
}

/// Residual of the ball eigen-equation with eigenvalue `-n(n+2μ+d-1)`,
/// and its size relative to the element.
pub fn ball_operator_residual(
    d: usize,
    mu: f64,
    n: usize,
    element: &MultiPoly,
) -> Result<(MultiPoly, f64)> {
    let nf = n as f64;
    let lhs = ball_operator(d, mu).apply(element)?;
    let res = &lhs + &element.scale(nf * (nf + 2.0 * mu + d as f64 - 1.0));
    let rel = relative_residual(&res, element);
    Ok((res, rel))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::ball_rule;

    #[test]
    fn normalization_examples() {
        assert!((ball_normalization(1, 0.5).unwrap() - 0.5).abs() < 1e-15);
        assert!((ball_normalization(2, 0.5).unwrap() - 1.0 / PI).abs() < 1e-15);
        assert!(matches!(
            ball_normalization(1, -0.6),
            Err(Error::Validity { .. })
        ));
    }

    #[test]
    fn basis_examples() {
        let mu = 0.8;
        let b = ball_basis(1, mu, 1, Convention::PaperGegenbauer).unwrap();
        assert_eq!(b.elements[0].poly, MultiPoly::x(1, 0).scale(2.0 * mu));
        let b = ball_basis(2, 0.3, 0, Convention::Orthonormal).unwrap();
        assert_eq!(b.elements.len(), 1);
        assert!((b.elements[0].poly.coeff(&[0, 0, 0]) - 1.0).abs() < 1e-14);
        assert!(matches!(
            ball_basis(1, 0.0, 2, Convention::PaperGegenbauer),
            Err(Error::DegenerateParam(_))
        ));
        assert!(ball_basis(2, 0.5, 1, Convention::PaperGegenbauer).is_err());
        assert!(ball_basis(4, 0.5, 1, Convention::Orthonormal).is_err());
    }

    #[test]
    fn counts_and_gram() {
        for d in 1..=3 {
            for &mu in &[0.0, 0.5, 1.75] {
                let all: Vec<MultiPoly> = (0..=5)
                    .flat_map(|n| {
                        let b = ball_basis(d, mu, n, Convention::Orthonormal).unwrap();
                        assert_eq!(b.elements.len(), dim_ball(d, n));
                        b.elements.into_iter().map(|e| e.poly)
                    })
                    .collect();
                let rule = ball_rule(d, mu, 10).unwrap();
                for (i, a) in all.iter().enumerate() {
                    for (j, c) in all.iter().enumerate() {
                        let g = rule.integrate(|x| {
                            let mut pt = x.to_vec();
                            pt.push(0.0);
                            a.eval_unchecked(&pt) * c.eval_unchecked(&pt)
                        });
                        let want = if i == j { 1.0 } else { 0.0 };
                        assert!((g - want).abs() < 1e-11, "d={d} mu={mu} ({i},{j}) {g}");
                    }
                }
            }
        }
    }

    #[test]
    fn gegenbauer_gram_diagonal() {
        let mu = 0.5;
        let rule = ball_rule(1, mu, 8).unwrap();
        for n in 0..=4 {
            let e = &ball_basis(1, mu, n, Convention::PaperGegenbauer)
                .unwrap()
                .elements[0];
            let g = rule.integrate(|x| e.poly.eval_unchecked(&[x[0], 0.0]).powi(2));
            assert!((g - e.norm_sq).abs() < 1e-12 * e.norm_sq);
        }
    }

    #[test]
    fn operator_residuals() {
        let (r, _) = ball_operator_residual(2, 0.5, 0, &MultiPoly::constant(2, 1.0)).unwrap();
        assert!(r.is_zero());
        let c1 = &ball_basis(1, 0.5, 1, Convention::PaperGegenbauer)
            .unwrap()
            .elements[0];
        let (_, rel) = ball_operator_residual(1, 0.5, 1, &c1.poly).unwrap();
        assert!(rel <= 1e-9);
        for d in 1..=3 {
            for n in 0..=4 {
                for e in ball_basis(d, 0.5, n, Convention::Orthonormal)
                    .unwrap()
                    .elements
                {
                    let (_, rel) = ball_operator_residual(d, 0.5, n, &e.poly).unwrap();
                    assert!(rel <= 1e-9, "d={d} n={n}: {rel}");
                }
            }
        }
    }
}
