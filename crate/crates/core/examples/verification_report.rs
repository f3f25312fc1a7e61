// Runs verification suites programmatically and emits JSON and CSV reports.

use finite_cone::verifier::{
    run_suite, Descriptor, FamilySelector, Report, Suite, Thresholds, Verdict,
};

pub struct ReportSummary {
    pub full: Report,
    pub probe: Report,
    pub csv: String,
}

pub fn run_example() -> Result<ReportSummary, Box<dyn std::error::Error>> {
    let th = Thresholds::default();
    let desc = Descriptor {
        p: Some(30.0),
        q: Some(0.0),
        ..Descriptor::new(FamilySelector::ConeM, 4)
    };
    let full = run_suite(Suite::All, &desc, &th)?;
    println!(
        "cone-M all: {} checks, {} pass, {} documented discrepancies, {} skipped, passed = {}",
        full.checks.len(),
        full.count(Verdict::Pass),
        full.count(Verdict::DocumentedDiscrepancy),
        full.count(Verdict::Skipped),
        full.passed()
    );

    // p = 2N + 2μ + d sits on the boundary of the window.
    let edge = Descriptor {
        p: Some(10.0),
        ..desc.clone()
    };
    let probe = run_suite(Suite::Gram, &edge, &th)?;
    println!(
        "boundary probe: {:?} {}",
        probe.checks[0].verdict, probe.checks[0].detail
    );

    let surf = Descriptor {
        d: 2,
        p: Some(25.0),
        ..Descriptor::new(FamilySelector::SurfN, 3)
    };
    let csv = run_suite(Suite::Gram, &surf, &th)?.to_csv();
    print!(
        "{}",
        csv.lines()
            .take(4)
            .map(|l| format!("{l}\n"))
            .collect::<String>()
    );

    let json = full.to_json();
    println!(
        "JSON report: {} bytes, schema {}",
        json.len(),
        full.schema_version
    );
    Ok(ReportSummary { full, probe, csv })
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example().map(|_| ())
}
