// Gamma-type functions and terminating hypergeometric sums.
//
// Run with `cargo run --example special_functions`.

use finite_cone::scalars::{
    binomial, gamma_fn, gamma_ratio, hyper_terminating, ln_beta, ln_gamma, pochhammer,
};

pub struct SpecialValues {
    pub gamma_half: f64,
    pub ln_gamma_200: f64,
    pub ratio: f64,
    pub beta_3_1: f64,
    pub chu_vandermonde: f64,
    pub pole_rejected: bool,
}

pub fn run_example() -> Result<SpecialValues, Box<dyn std::error::Error>> {
    let gamma_half = gamma_fn(0.5)?;
    println!(
        "Γ(1/2)         = {gamma_half:.15} (√π = {:.15})",
        std::f64::consts::PI.sqrt()
    );

    // Far beyond the f64 range of Γ itself.
    let ln_gamma_200 = ln_gamma(200.0)?;
    println!("ln Γ(200)      = {ln_gamma_200:.10}");

    let ratio = gamma_ratio(10.5, 7.5)?;
    println!(
        "Γ(10.5)/Γ(7.5) = {ratio} = (7.5)_3 = {}",
        pochhammer(7.5, 3)
    );

    let beta_3_1 = ln_beta(3.0, 1.0)?.exp();
    println!("B(3, 1)        = {beta_3_1}");

    // 2F1(-n, b; c; 1) = (c-b)_n / (c)_n.
    let (n, b, c) = (4.0, 1.5, 3.25);
    let chu_vandermonde = hyper_terminating(&[-n, b], &[c], 1.0)?;
    println!(
        "2F1(-4, 1.5; 3.25; 1) = {chu_vandermonde} vs {}",
        pochhammer(c - b, 4) / pochhammer(c, 4)
    );
    println!("C(10, 4)       = {}", binomial(10, 4));

    let pole_rejected = gamma_fn(-3.0).is_err();
    println!("Γ(-3) rejected: {pole_rejected}");

    Ok(SpecialValues {
        gamma_half,
        ln_gamma_200,
        ratio,
        beta_3_1,
        chu_vandermonde,
        pole_rejected,
    })
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example().map(|_| ())
}
