// A one-dimensional cone with a large parameter: M family at d = 1,
// p = 202, q = 0, μ = 1/2, checked for all degrees up to 8.

use finite_cone::ball::Convention;
use finite_cone::cone_solid::{cone_basis, cone_gram, ConeFamily, ConeFamilyParams};

pub struct WorkedExample {
    pub elements: usize,
    pub max_offdiag: f64,
    pub max_diag_rel: f64,
    pub mu_zero_message: String,
}

pub fn run_example() -> Result<WorkedExample, Box<dyn std::error::Error>> {
    let family = ConeFamily::M { p: 202.0, q: 0.0 };
    let params = ConeFamilyParams::new(1, 0.5, family).with_convention(Convention::PaperGegenbauer);
    let g = cone_gram(&params, 8)?;
    println!(
        "{} elements, off-diagonal {:.2e}, diagonal rel. {:.2e}",
        g.labels.len(),
        g.max_offdiag,
        g.max_diag_rel
    );
    for (i, label) in g.labels.iter().enumerate().filter(|(i, _)| i % 9 == 0) {
        println!(
            "  {label}: G = {:.12e}, H = {:.12e}",
            g.matrix[i][i], g.expected_diagonal[i]
        );
    }
    let degenerate =
        ConeFamilyParams::new(1, 0.0, family).with_convention(Convention::PaperGegenbauer);
    let mu_zero_message = match cone_basis(&degenerate, 1) {
        Err(e) => e.to_string(),
        Ok(_) => return Err("μ = 0 should be rejected with Gegenbauer factors".into()),
    };
    println!("μ = 0: {mu_zero_message}");
    Ok(WorkedExample {
        elements: g.labels.len(),
        max_offdiag: g.max_offdiag,
        max_diag_rel: g.max_diag_rel,
        mu_zero_message,
    })
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example().map(|_| ())
}
