// As `p → ∞` with `t` rescaled by `1/p`, the M families tend to Laguerre
// families at rate `1/p`; elements with `n = m` match exactly.

use finite_cone::cone_solid::{cone_basis, limit_to_laguerre, ConeFamily, ConeFamilyParams};
use finite_cone::cone_surface::{surface_basis, surface_limit_m, SurfaceParams};
use finite_cone::verifier::ConvergenceFit;

pub struct LimitSummary {
    /// `(label, n, m, fit)` on the solid cone.
    pub cone: Vec<(String, usize, usize, ConvergenceFit)>,
    /// `(label, n, m, fit)` on the surface.
    pub surface: Vec<(String, usize, usize, ConvergenceFit)>,
}

pub fn run_example() -> Result<LimitSummary, Box<dyn std::error::Error>> {
    let grid = [1e2, 1e3, 1e4];
    let cone_params = ConeFamilyParams::new(2, 0.5, ConeFamily::M { p: 30.0, q: 0.0 });
    let surf_params = SurfaceParams::new(2, ConeFamily::M { p: 30.0, q: 0.0 });
    let mut cone = Vec::new();
    let mut surface = Vec::new();
    for n in 0..=3 {
        for e in cone_basis(&cone_params, n)? {
            let r = limit_to_laguerre(&cone_params, e.n, e.m, e.index, &grid)?;
            cone.push((e.label(), e.n, e.m, r.fit));
        }
        for e in surface_basis(&surf_params, n)? {
            let r = surface_limit_m(&surf_params, e.n, e.m, e.index, &grid)?;
            surface.push((e.label(), e.n, e.m, r.fit));
        }
    }
    for (what, rows) in [("cone", &cone), ("surface", &surface)] {
        for (label, _, _, fit) in rows.iter() {
            match fit {
                ConvergenceFit::Exact => println!("{what:<8} {label:<20} exact"),
                ConvergenceFit::Exponent(k) => println!("{what:<8} {label:<20} exponent {k:.4}"),
            }
        }
    }
    Ok(LimitSummary { cone, surface })
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example().map(|_| ())
}
