//! Gram matrices from sampled basis values and a mass-normalized rule.

use crate::error::Result;
use crate::quadrature::RadialWeight;
use crate::univariate::{m_poly, n_poly, norm_m, norm_n, FiniteFamily};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// A Gram matrix against its predicted diagonal.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GramReport {
    /// One label per basis element, in matrix order.
    pub labels: Vec<String>,
    pub matrix: Vec<Vec<f64>>,
    pub expected_diagonal: Vec<f64>,
    /// `max |G_ij| / sqrt(G_ii G_jj)` over `i != j`.
    pub max_offdiag: f64,
    /// `max |G_ii - H_i| / |H_i|`.
    pub max_diag_rel: f64,
}

impl GramReport {
    /// Assembles `G_ij = Σ_k w_k v_i(k) v_j(k)`, where `values[i][k]` is element
    /// `i` at node `k`.
    pub fn from_samples(
        labels: Vec<String>,
        values: &[Vec<f64>],
        weights: &[f64],
        expected_diagonal: Vec<f64>,
    ) -> Self {
        let n = values.len();
        let matrix: Vec<Vec<f64>> = (0..n)
            .into_par_iter()
            .map(|i| {
                (0..n)
                    .map(|j| {
                        values[i]
                            .iter()
                            .zip(&values[j])
                            .zip(weights)
                            .map(|((a, b), w)| w * a * b)
                            .sum()
                    })
                    .collect()
            })
            .collect();
        let mut max_offdiag = 0.0f64;
        let mut max_diag_rel = 0.0f64;
        for i in 0..n {
            let h = expected_diagonal[i];
            max_diag_rel = max_diag_rel.max((matrix[i][i] - h).abs() / h.abs());
            for j in 0..n {
                if i != j {
                    let scale = (matrix[i][i] * matrix[j][j]).abs().sqrt();
                    max_offdiag = max_offdiag.max(matrix[i][j].abs() / scale);
                }
            }
        }
        GramReport {
            labels,
            matrix,
            expected_diagonal,
            max_offdiag,
            max_diag_rel,
        }
    }
}

/// Gram of `{Y_0, ..., Y_{n_max}}` for one finite class under its normalized
/// weight, with `h_n` as the predicted diagonal.
pub fn univariate_gram(family: FiniteFamily, n_max: usize) -> Result<GramReport> {
    let (weight, polys, norms) = match family {
        FiniteFamily::M(params) => {
            params.check_window(n_max)?;
            let polys: Vec<_> = (0..=n_max).map(|n| m_poly(n, params)).collect();
            let norms = (0..=n_max)
                .map(|n| norm_m(n, params))
                .collect::<Result<_>>()?;
            (
                RadialWeight::M {
                    p: params.p,
                    q: params.q,
                },
                polys,
                norms,
            )
        }
        FiniteFamily::N(params) => {
            params.check_window(n_max)?;
            let polys: Vec<_> = (0..=n_max).map(|n| n_poly(n, params)).collect();
            let norms = (0..=n_max)
                .map(|n| norm_n(n, params))
                .collect::<Result<_>>()?;
            (RadialWeight::N { p: params.p }, polys, norms)
        }
    };
    let rule = weight.rule(2 * n_max)?;
    let values: Vec<Vec<f64>> = polys
        .iter()
        .map(|y| rule.nodes.iter().map(|t| y.eval(*t)).collect())
        .collect();
    let labels = (0..=n_max).map(|n| format!("n={n}")).collect();
    Ok(GramReport::from_samples(
        labels,
        &values,
        &rule.weights,
        norms,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::univariate::{MParams, NParams};

    #[test]
    fn window_for_p12() {
        let g = univariate_gram(FiniteFamily::M(MParams::new(12.0, 0.0)), 5).unwrap();
        assert!(g.max_offdiag < 1e-10 && g.max_diag_rel < 1e-10, "{g:?}");
        let g = univariate_gram(FiniteFamily::N(NParams::new(12.0)), 5).unwrap();
        assert!(g.max_offdiag < 1e-10 && g.max_diag_rel < 1e-10, "{g:?}");
        assert!(matches!(
            univariate_gram(FiniteFamily::M(MParams::new(12.0, 0.0)), 6),
            Err(Error::Validity { .. })
        ));
    }
}
