// Orthogonality holds only for finitely many degrees: at `p = 12` the
// classes are orthogonal up to degree 5, and degree 6 is rejected.

use finite_cone::gram::univariate_gram;
use finite_cone::univariate::{FiniteFamily, MParams, NParams};
use finite_cone::Error;

pub struct WindowOutcome {
    pub m_offdiag: f64,
    pub m_diag_rel: f64,
    pub n_offdiag: f64,
    pub n_diag_rel: f64,
    /// Messages of the degree-6 rejections, M then N.
    pub rejections: Vec<String>,
}

pub fn run_example() -> Result<WindowOutcome, Box<dyn std::error::Error>> {
    let m = FiniteFamily::M(MParams::new(12.0, 0.0));
    let n = FiniteFamily::N(NParams::new(12.0));

    let gm = univariate_gram(m, 5)?;
    let gn = univariate_gram(n, 5)?;
    println!(
        "M, p=12, q=0, n<=5: off-diagonal {:.2e}, diagonal rel. {:.2e}",
        gm.max_offdiag, gm.max_diag_rel
    );
    println!(
        "N, p=12,      n<=5: off-diagonal {:.2e}, diagonal rel. {:.2e}",
        gn.max_offdiag, gn.max_diag_rel
    );

    let mut rejections = Vec::new();
    for family in [m, n] {
        match univariate_gram(family, 6) {
            Err(e @ (Error::Validity { .. } | Error::Integrability { .. })) => {
                println!("n<=6 rejected: {e}");
                rejections.push(e.to_string());
            }
            Err(e) => return Err(e.into()),
            Ok(_) => return Err("degree 6 at p = 12 should be rejected".into()),
        }
    }

    Ok(WindowOutcome {
        m_offdiag: gm.max_offdiag,
        m_diag_rel: gm.max_diag_rel,
        n_offdiag: gn.max_offdiag,
        n_diag_rel: gn.max_diag_rel,
        rejections,
    })
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example().map(|_| ())
}
