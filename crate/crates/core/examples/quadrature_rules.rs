// Gauss rules, the transformed radial rules and product rules on the ball,
// the cone and the conic surface.

use finite_cone::polyalg::MultiPoly;
use finite_cone::quadrature::{
    gauss_rule, integrate_ball, integrate_cone, integrate_surface, integrate_wpq, GaussKind,
    RadialWeight,
};
use finite_cone::univariate::UniPoly;

pub struct QuadratureValues {
    pub legendre_x4: f64,
    pub wpq_t: f64,
    pub ball_length: f64,
    pub cone_mass: f64,
    pub surface_mass: f64,
    pub divergent_rejected: bool,
}

pub fn run_example() -> Result<QuadratureValues, Box<dyn std::error::Error>> {
    let rule = gauss_rule(GaussKind::Legendre, 3)?;
    let legendre_x4 = rule.integrate(|x| x.powi(4));
    println!(
        "3-point Legendre, ∫x^4 = {legendre_x4} (2/5), exact to degree {}",
        rule.exactness_degree
    );

    let lag = gauss_rule(GaussKind::Laguerre { alpha: 0.5 }, 6)?;
    println!(
        "6-point Laguerre(α=1/2), ∫ x^{{1/2}} e^{{-x}} x^3 = {}",
        lag.integrate(|x| x.powi(3))
    );

    // ∫_0^∞ t (1+t)^{-4} dt = B(2, 2) = 1/6.
    let wpq_t = integrate_wpq(&UniPoly::x(), 4.0, 0.0)?;
    println!("∫ t (1+t)^-4 dt = {wpq_t}");
    let divergent_rejected = integrate_wpq(&UniPoly::monomial(2, 1.0), 3.0, 0.0).is_err();
    println!("∫ t^2 (1+t)^-3 dt rejected as divergent: {divergent_rejected}");

    let one1 = MultiPoly::constant(1, 1.0);
    let one2 = MultiPoly::constant(2, 1.0);
    let ball_length = integrate_ball(1, 0.5, &one1)?;
    let cone_mass = integrate_cone(1, 0.5, RadialWeight::M { p: 4.0, q: 0.0 }, &one1)?;
    let surface_mass = integrate_surface(2, RadialWeight::N { p: 4.0 }, &one2)?;
    println!("ball [-1,1] length = {ball_length}");
    println!("cone, d=1, M(p=4,q=0), ∫1 = {cone_mass}");
    println!("surface, d=2, N(p=4), ∫1 = {surface_mass} (2π)");

    Ok(QuadratureValues {
        legendre_x4,
        wpq_t,
        ball_length,
        cone_mass,
        surface_mass,
        divergent_rejected,
    })
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example().map(|_| ())
}
