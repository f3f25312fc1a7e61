// The second-order equation of the M family at q = 0 and the
// difference-differential identity of the N family.

use finite_cone::cone_solid::{
    cone_basis, diffdiff_residual_n, operator_residual_m, ConeFamily, ConeFamilyParams,
};

pub struct EquationSummary {
    /// `(d, max relative residual)` for the M equation.
    pub m_residuals: Vec<(usize, f64)>,
    /// `(d, max relative residual)` for the N identity.
    pub n_residuals: Vec<(usize, f64)>,
}

pub fn run_example() -> Result<EquationSummary, Box<dyn std::error::Error>> {
    let (mu, p) = (0.5, 30.0);
    let mut m_residuals = Vec::new();
    let mut n_residuals = Vec::new();
    for d in 1..=3 {
        let pm = ConeFamilyParams::new(d, mu, ConeFamily::M { p, q: 0.0 });
        let pn = ConeFamilyParams::new(d, mu, ConeFamily::N { p });
        let (mut worst_m, mut worst_n) = (0.0f64, 0.0f64);
        for n in 0..=4 {
            for e in cone_basis(&pm, n)? {
                worst_m = worst_m.max(operator_residual_m(&pm, &e)?.1);
            }
            for e in cone_basis(&pn, n)? {
                worst_n = worst_n.max(diffdiff_residual_n(&pn, &e)?.1);
            }
            let nf = n as f64;
            if d == 1 {
                println!(
                    "n={n}: eigenvalue n(n-p+2μ+d) = {}",
                    nf * (nf - p + 2.0 * mu + d as f64)
                );
            }
        }
        println!("d={d}: M equation residual {worst_m:.2e}, N identity residual {worst_n:.2e}");
        m_residuals.push((d, worst_m));
        n_residuals.push((d, worst_n));
    }
    let q_one = ConeFamilyParams::new(1, mu, ConeFamily::M { p, q: 1.0 });
    let e = cone_basis(&q_one, 1)?.remove(0);
    println!("q = 1: {}", operator_residual_m(&q_one, &e).unwrap_err());
    Ok(EquationSummary {
        m_residuals,
        n_residuals,
    })
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example().map(|_| ())
}
