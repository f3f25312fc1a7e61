// Orthonormal bases on the unit ball and their eigenvalue equation.

use finite_cone::ball::{
    ball_basis, ball_normalization, ball_operator_residual, dim_ball, Convention,
};
use finite_cone::quadrature::ball_rule;

pub struct BallSummary {
    pub normalization_d2: f64,
    pub max_gram_error: f64,
    pub max_operator_residual: f64,
    pub degenerate_mu_message: String,
}

pub fn run_example() -> Result<BallSummary, Box<dyn std::error::Error>> {
    let (d, mu, n_max) = (2, 0.5, 4);
    let normalization_d2 = ball_normalization(d, mu)?;
    println!(
        "b_μ on the disk, μ = 1/2: {normalization_d2} (1/π = {})",
        1.0 / std::f64::consts::PI
    );

    let elements: Vec<_> = (0..=n_max)
        .map(|n| ball_basis(d, mu, n, Convention::Orthonormal).map(|b| (n, b.elements)))
        .collect::<Result<_, _>>()?;
    let rule = ball_rule(d, mu, 2 * n_max)?;
    let flat: Vec<_> = elements.iter().flat_map(|(_, e)| e.iter()).collect();
    let mut max_gram_error = 0.0f64;
    for (i, a) in flat.iter().enumerate() {
        for (j, b) in flat.iter().enumerate() {
            let g = rule.integrate(|x| {
                let mut pt = x.to_vec();
                pt.push(0.0);
                a.poly.evaluate(&pt).unwrap_or(f64::NAN) * b.poly.evaluate(&pt).unwrap_or(f64::NAN)
            });
            let want = if i == j { a.norm_sq } else { 0.0 };
            max_gram_error = max_gram_error.max((g - want).abs());
        }
    }

    let mut max_operator_residual = 0.0f64;
    for (n, els) in &elements {
        println!(
            "degree {n}: {} elements (dim formula {})",
            els.len(),
            dim_ball(d, *n)
        );
        for e in els {
            max_operator_residual =
                max_operator_residual.max(ball_operator_residual(d, mu, *n, &e.poly)?.1);
        }
    }
    println!("Gram error {max_gram_error:.2e}, operator residual {max_operator_residual:.2e}");

    let degenerate_mu_message = match ball_basis(1, 0.0, 2, Convention::PaperGegenbauer) {
        Err(e) => e.to_string(),
        Ok(_) => return Err("μ = 0 must be rejected for unnormalized Gegenbauer factors".into()),
    };
    println!("μ = 0 with Gegenbauer factors: {degenerate_mu_message}");

    Ok(BallSummary {
        normalization_d2,
        max_gram_error,
        max_operator_residual,
        degenerate_mu_message,
    })
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example().map(|_| ())
}
