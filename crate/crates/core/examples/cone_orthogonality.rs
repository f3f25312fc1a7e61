// Gram matrices of the solid-cone families against their norm formulas.

use finite_cone::ball::Convention;
use finite_cone::cone_solid::{cone_gram, cone_norm, ConeFamily, ConeFamilyParams};

pub struct ConeGramSummary {
    /// `(family, d, max normalized off-diagonal, max relative diagonal error)`.
    pub rows: Vec<(String, usize, f64, f64)>,
    /// `H_{1,1}` at `d = 1, μ = 1/2, p = 10, q = 0`.
    pub h11: f64,
}

pub fn run_example() -> Result<ConeGramSummary, Box<dyn std::error::Error>> {
    let mut rows = Vec::new();
    for (name, family) in [
        ("M(p=30, q=0)", ConeFamily::M { p: 30.0, q: 0.0 }),
        ("N(p=25)", ConeFamily::N { p: 25.0 }),
        ("Laguerre(β=0)", ConeFamily::Laguerre { beta: 0.0 }),
    ] {
        for d in [1, 2] {
            let g = cone_gram(&ConeFamilyParams::new(d, 0.5, family), 4)?;
            println!(
                "{name:<14} d={d}: {} elements, off-diagonal {:.2e}, diagonal rel. {:.2e}",
                g.labels.len(),
                g.max_offdiag,
                g.max_diag_rel
            );
            rows.push((name.to_string(), d, g.max_offdiag, g.max_diag_rel));
        }
    }
    let spot = ConeFamilyParams::new(1, 0.5, ConeFamily::M { p: 10.0, q: 0.0 })
        .with_convention(Convention::PaperGegenbauer);
    let h11 = cone_norm(&spot, 1, 1)?;
    println!(
        "H_(1,1) at d=1, μ=1/2, p=10, q=0: {h11} (1/7 = {})",
        1.0 / 7.0
    );
    Ok(ConeGramSummary { rows, h11 })
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example().map(|_| ())
}
