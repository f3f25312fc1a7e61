// Three-term recurrences in `n` at fixed `(m, k)` on the solid cone.
//
// The M-family middle coefficient in its uncorrected form misses a factor; both
// forms are evaluated so the discrepancy and its correction are visible.

use finite_cone::cone_solid::{
    cone_basis, recurrence_residual, ConeFamily, ConeFamilyParams, RecurrenceForm,
};
use finite_cone::errata;

pub struct RecurrenceSummary {
    pub m_uncorrected: f64,
    pub m_corrected: f64,
    pub n_family: f64,
    pub laguerre: f64,
}

fn worst(params: &ConeFamilyParams, form: RecurrenceForm) -> Result<f64, finite_cone::Error> {
    let mut worst = 0.0f64;
    for n in 0..4 {
        for e in cone_basis(params, n)? {
            worst = worst.max(recurrence_residual(params, e.n, e.m, e.index, form)?);
        }
    }
    Ok(worst)
}

pub fn run_example() -> Result<RecurrenceSummary, Box<dyn std::error::Error>> {
    let m = ConeFamilyParams::new(2, 0.5, ConeFamily::M { p: 30.0, q: 0.0 });
    let n = ConeFamilyParams::new(2, 0.5, ConeFamily::N { p: 30.0 });
    let l = ConeFamilyParams::new(2, 0.5, ConeFamily::Laguerre { beta: 0.0 });

    let m_uncorrected = worst(&m, RecurrenceForm::Uncorrected)?;
    let m_corrected = worst(&m, RecurrenceForm::Corrected)?;
    let n_family = worst(&n, RecurrenceForm::Uncorrected)?;
    let laguerre = worst(&l, RecurrenceForm::Uncorrected)?;
    println!("M, uncorrected:   {m_uncorrected:.3e}");
    println!("M, corrected:     {m_corrected:.3e}");
    println!("N:                {n_family:.3e}");
    println!("Laguerre:         {laguerre:.3e}");
    if let Some(e) = errata::lookup("cone.m.recurrence") {
        println!("known erratum: {}\n  fix: {}", e.summary, e.correction);
    }
    Ok(RecurrenceSummary {
        m_uncorrected,
        m_corrected,
        n_family,
        laguerre,
    })
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example().map(|_| ())
}
