//! One-variable families: the finite classes `M_n^{(p,q)}` and `N_n^{(p)}`,
//! plus the classical Jacobi, Laguerre and Gegenbauer polynomials that the
//! ball and cone constructions are built from.

mod classical;
mod finite;
mod poly;

pub use classical::{
    eval_gegenbauer, eval_jacobi, eval_laguerre, gegenbauer_poly, jacobi_normalization,
    jacobi_poly, laguerre_poly, laguerre_rodrigues, norm_gegenbauer, norm_jacobi, norm_laguerre,
};
pub use finite::{
    coeffs_m_recurrence, coeffs_m_rodrigues, coeffs_n_recurrence, coeffs_n_rodrigues,
    derivative_relation_residual, eval_m, eval_n, laguerre_limit_error_m, ln_normalization_m,
    m_poly, m_recurrence_coeffs, n_poly, n_recurrence_coeffs, norm_m, norm_n,
    normalization_constant, normalization_m, normalization_n, ode_residual_m, ode_residual_n,
    FiniteFamily, MParams, NParams,
};
pub use poly::{relative_residual, UniPoly};
