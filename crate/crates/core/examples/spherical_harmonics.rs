// Real solid harmonics in dimensions 1 to 3 and their orthonormality on
// the sphere.

use finite_cone::harmonics::{dim_harmonic, harmonic_basis, is_harmonic, sphere_area, sphere_rule};

pub struct HarmonicSummary {
    /// `(d, m, count)` for every basis built.
    pub counts: Vec<(usize, usize, usize)>,
    /// Largest deviation from the identity Gram matrix under `(1/ω_d) dσ`.
    pub max_gram_error: f64,
    pub all_harmonic: bool,
}

pub fn run_example() -> Result<HarmonicSummary, Box<dyn std::error::Error>> {
    let mut counts = Vec::new();
    let mut max_gram_error = 0.0f64;
    let mut all_harmonic = true;
    for d in 1..=3 {
        for m in 0..=4 {
            let basis = harmonic_basis(d, m)?;
            counts.push((d, m, basis.elements.len()));
            // The raw forms have dyadic coefficients, so their Laplacian vanishes exactly.
            all_harmonic &= basis.raw.iter().all(is_harmonic);
            let rule = sphere_rule(d, 2 * m)?;
            for (i, a) in basis.elements.iter().enumerate() {
                for (j, b) in basis.elements.iter().enumerate() {
                    let g = rule.integrate(|x| {
                        let mut pt = x.to_vec();
                        pt.push(0.0);
                        a.evaluate(&pt).unwrap_or(f64::NAN) * b.evaluate(&pt).unwrap_or(f64::NAN)
                    });
                    let want = if i == j { 1.0 } else { 0.0 };
                    max_gram_error = max_gram_error.max((g - want).abs());
                }
            }
        }
        let row: Vec<String> = (0..=4).map(|m| dim_harmonic(d, m).to_string()).collect();
        println!(
            "d={d}: ω_d = {:.6}, dim H_m for m=0..4 = {}",
            sphere_area(d),
            row.join(", ")
        );
    }
    println!("d=3, m=2 basis:");
    for y in &harmonic_basis(3, 2)?.elements {
        println!("  {y}");
    }
    println!("max deviation from orthonormality: {max_gram_error:.2e}");
    Ok(HarmonicSummary {
        counts,
        max_gram_error,
        all_harmonic,
    })
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example().map(|_| ())
}
