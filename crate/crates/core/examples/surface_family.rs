// Bases on the conic surface: counts, Gram matrices and the surface
// equations at q = -1 and β = -1.

use finite_cone::cone_solid::ConeFamily;
use finite_cone::cone_surface::{
    dim_surface_closed, surface_basis, surface_gram, surface_laguerre_ode_residual,
    surface_ode_residual_m, SurfaceParams,
};

pub struct SurfaceSummary {
    /// `(d, max normalized off-diagonal, max relative diagonal error)` for M at p = 30, q = 0.
    pub gram: Vec<(usize, f64, f64)>,
    pub m_ode_residual: f64,
    pub laguerre_ode_residual: f64,
    /// `(d, n, count, closed-form count)`.
    pub counts: Vec<(usize, usize, usize, usize)>,
}

pub fn run_example() -> Result<SurfaceSummary, Box<dyn std::error::Error>> {
    let mut gram = Vec::new();
    let mut counts = Vec::new();
    let mut m_ode_residual = 0.0f64;
    let mut laguerre_ode_residual = 0.0f64;
    for d in [2, 3] {
        let g = surface_gram(&SurfaceParams::new(d, ConeFamily::M { p: 30.0, q: 0.0 }), 4)?;
        println!(
            "M(p=30,q=0) d={d}: off-diagonal {:.2e}, diagonal rel. {:.2e}",
            g.max_offdiag, g.max_diag_rel
        );
        gram.push((d, g.max_offdiag, g.max_diag_rel));

        let m = SurfaceParams::new(d, ConeFamily::M { p: 30.0, q: -1.0 });
        let l = SurfaceParams::new(d, ConeFamily::Laguerre { beta: -1.0 });
        for n in 0..=4 {
            for e in surface_basis(&m, n)? {
                m_ode_residual = m_ode_residual.max(surface_ode_residual_m(&m, &e)?.1);
            }
            for e in surface_basis(&l, n)? {
                laguerre_ode_residual =
                    laguerre_ode_residual.max(surface_laguerre_ode_residual(&l, &e)?.1);
            }
        }
        let big = SurfaceParams::new(d, ConeFamily::M { p: 40.0, q: 0.0 });
        for n in 0..=6 {
            counts.push((
                d,
                n,
                surface_basis(&big, n)?.len(),
                dim_surface_closed(d, n),
            ));
        }
    }
    println!("q = -1 equation residual {m_ode_residual:.2e}; β = -1 Laguerre residual {laguerre_ode_residual:.2e}");
    let shown: Vec<String> = counts
        .iter()
        .map(|(d, n, c, _)| format!("d{d}n{n}:{c}"))
        .collect();
    println!("counts {}", shown.join(" "));
    Ok(SurfaceSummary {
        gram,
        m_ode_residual,
        laguerre_ode_residual,
        counts,
    })
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example().map(|_| ())
}
