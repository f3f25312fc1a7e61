// The finite one-variable classes: explicit polynomials, norms and the
// recurrences that generate them.

use finite_cone::univariate::{
    coeffs_m_rodrigues, coeffs_n_rodrigues, m_poly, m_recurrence_coeffs, n_poly, norm_m, norm_n,
    MParams, NParams,
};

pub struct UnivariateSamples {
    /// `N_0..N_2` at `p = 10`, rendered in `t`.
    pub n_samples: Vec<String>,
    /// `M_1^{(10,0)}`, rendered in `t`.
    pub m1: String,
    /// Largest coefficient gap between the recurrence and Rodrigues forms.
    pub max_path_gap: f64,
}

pub fn run_example() -> Result<UnivariateSamples, Box<dyn std::error::Error>> {
    let pn = NParams::new(10.0);
    let n_samples: Vec<String> = (0..=2).map(|n| n_poly(n, pn).render("t")).collect();
    for (n, s) in n_samples.iter().enumerate() {
        println!("N_{n}^(10)(t)   = {s}    h_{n} = {}", norm_n(n, pn)?);
    }

    let pm = MParams::new(10.0, 0.0);
    for n in 0..=3 {
        println!(
            "M_{n}^(10,0)(t) = {}    h_{n} = {}",
            m_poly(n, pm).render("t"),
            norm_m(n, pm)?
        );
    }
    let (a, b, c) = m_recurrence_coeffs(2, pm)?;
    println!("M_3 = (A t + B) M_2 - C M_1 with A = {a}, B = {b}, C = {c}");

    let mut max_path_gap = 0.0f64;
    for n in 0..=4 {
        let gaps = [
            (&m_poly(n, pm) - &coeffs_m_rodrigues(n, pm)).max_abs_coeff(),
            (&n_poly(n, pn) - &coeffs_n_rodrigues(n, pn)).max_abs_coeff(),
        ];
        max_path_gap = gaps.iter().fold(max_path_gap, |g, x| g.max(*x));
    }
    println!("recurrence vs Rodrigues, n <= 4: max gap {max_path_gap:e}");

    Ok(UnivariateSamples {
        n_samples,
        m1: m_poly(1, pm).render("t"),
        max_path_gap,
    })
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example().map(|_| ())
}
