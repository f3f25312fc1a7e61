//! Acceptance criteria 1 to 10. Each test writes one `criterion N: PASS|FAIL`
//! line straight to stderr so the summary survives output capture.

use finite_cone::ball::{ball_basis, Convention};
use finite_cone::cone_solid::{
    cone_basis, cone_gram, cone_norm, diffdiff_residual_n, laguerre_cone_checks, limit_to_laguerre,
    operator_m, operator_residual_m, recurrence_residual, ConeFamily, ConeFamilyParams,
    RecurrenceForm,
};
use finite_cone::cone_surface::{
    surface_basis, surface_diffdiff_residual_n, surface_gram, surface_laguerre_ode_residual,
    surface_limit_m, surface_ode_residual_m, SurfaceParams,
};
use finite_cone::gram::univariate_gram;
use finite_cone::univariate::{
    coeffs_m_rodrigues, coeffs_n_rodrigues, FiniteFamily, MParams, NParams, UniPoly,
};
use finite_cone::verifier::{
    run_suite, ConvergenceFit, Descriptor, FamilySelector, Suite, Thresholds, Verdict,
};
use finite_cone::Error;
use rand::{rngs::StdRng, Rng, SeedableRng};
use std::io::Write;

// Pinned tolerances.
const COEFF_REL: f64 = 1e-12;
const UNI_GRAM: f64 = 1e-10;
const OFFDIAG: f64 = 1e-10;
const DIAG_REL: f64 = 1e-9;
const IDENTITY: f64 = 1e-9;
const EXPONENT_WINDOW: (f64, f64) = (0.8, 1.2);
const SPOT: f64 = 1e-12;

type Outcome = std::result::Result<String, String>;

fn record(criterion: u32, outcome: Outcome) {
    let line = match &outcome {
        Ok(msg) => format!("criterion {criterion}: PASS {msg}\n"),
        Err(msg) => format!("criterion {criterion}: FAIL {msg}\n"),
    };
    let _ = std::io::stderr().lock().write_all(line.as_bytes());
    if let Err(msg) = outcome {
        panic!("criterion {criterion} failed: {msg}");
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: finite_cone::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// Coefficient-wise relative comparison, lowest degree first.
fn same_coeffs(got: &UniPoly, want: &[f64]) -> bool {
    got.degree() + 1 == want.len()
        && want.iter().enumerate().all(|(j, w)| {
            let g = got.coeff(j);
            (g - w).abs() <= COEFF_REL * w.abs().max(f64::MIN_POSITIVE)
        })
}

fn explicit_m(n: usize, p: f64, q: f64) -> Vec<f64> {
    match n {
        0 => vec![1.0],
        1 => vec![-(q + 1.0), p - 2.0],
        2 => vec![
            (q + 2.0) * (q + 1.0),
            -2.0 * (p - 3.0) * (q + 2.0),
            (p - 4.0) * (p - 3.0),
        ],
        3 => vec![
            -(q + 3.0) * (q + 2.0) * (q + 1.0),
            3.0 * (p - 4.0) * (q + 3.0) * (q + 2.0),
            -3.0 * (p - 5.0) * (p - 4.0) * (q + 3.0),
            (p - 6.0) * (p - 5.0) * (p - 4.0),
        ],
        _ => unreachable!(),
    }
}

fn explicit_n(n: usize, p: f64) -> Vec<f64> {
    match n {
        0 => vec![1.0],
        1 => vec![-1.0, p - 2.0],
        2 => vec![1.0, -2.0 * (p - 3.0), (p - 4.0) * (p - 3.0)],
        3 => vec![
            -1.0,
            3.0 * (p - 4.0),
            -3.0 * (p - 5.0) * (p - 4.0),
            (p - 6.0) * (p - 5.0) * (p - 4.0),
        ],
        _ => unreachable!(),
    }
}

fn criterion_1() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_c0de);
    for _ in 0..10 {
        let p: f64 = rng.gen_range(8.5..60.0);
        let q: f64 = rng.gen_range(-0.9..12.0);
        for n in 0..=3 {
            let m = coeffs_m_rodrigues(n, MParams::new(p, q));
            ensure(same_coeffs(&m, &explicit_m(n, p, q)), || {
                format!("M_{n} at p={p}, q={q}: {m}")
            })?;
            let nn = coeffs_n_rodrigues(n, NParams::new(p));
            ensure(same_coeffs(&nn, &explicit_n(n, p)), || {
                format!("N_{n} at p={p}: {nn}")
            })?;
        }
    }
    Ok(format!(
        "M_n, N_n for n<=3 match the explicit lists at 10 random (p,q) to {COEFF_REL:e}"
    ))
}

fn criterion_2() -> Outcome {
    let families = [
        ("M", FiniteFamily::M(MParams::new(12.0, 0.0))),
        ("N", FiniteFamily::N(NParams::new(12.0))),
    ];
    for (name, fam) in families {
        let g = lib(univariate_gram(fam, 5))?;
        ensure(
            g.max_offdiag < UNI_GRAM && g.max_diag_rel < UNI_GRAM,
            || {
                format!(
                    "{name}: offdiag {:e}, diag {:e}",
                    g.max_offdiag, g.max_diag_rel
                )
            },
        )?;
        match univariate_gram(fam, 6) {
            Err(e @ (Error::Validity { .. } | Error::Integrability { .. })) => {
                ensure(e.requirement() == Some("p > 2N+1"), || {
                    format!("{name}: message {e}")
                })?
            }
            other => return Err(format!("{name} at n_max=6 not rejected: {other:?}")),
        }
    }
    Ok(format!(
        "p=12 Gram diagonal to {UNI_GRAM:e} for n<=5, n_max=6 rejected with p > 2N+1"
    ))
}

fn criterion_3() -> Outcome {
    for (name, family) in [
        ("M", ConeFamily::M { p: 30.0, q: 0.0 }),
        ("N", ConeFamily::N { p: 25.0 }),
    ] {
        for d in [1, 2] {
            let g = lib(cone_gram(&ConeFamilyParams::new(d, 0.5, family), 4))?;
            ensure(g.max_offdiag < OFFDIAG && g.max_diag_rel < DIAG_REL, || {
                format!(
                    "{name} d={d}: offdiag {:e}, diag {:e}",
                    g.max_offdiag, g.max_diag_rel
                )
            })?;
        }
    }
    // H_{1,1} at d=1, μ=1/2, p=10, q=0: formula and quadrature.
    let spot = ConeFamilyParams::new(1, 0.5, ConeFamily::M { p: 10.0, q: 0.0 })
        .with_convention(Convention::PaperGegenbauer);
    let h = lib(cone_norm(&spot, 1, 1))?;
    ensure((h - 1.0 / 7.0).abs() < SPOT, || {
        format!("H_11 formula = {h}")
    })?;
    let g = lib(cone_gram(&spot, 1))?;
    let i = g
        .labels
        .iter()
        .position(|l| l == "(n=1, m=1, k=0)")
        .ok_or("label missing")?;
    let ball = lib(ball_basis(1, 0.5, 1, Convention::PaperGegenbauer))?.elements[0].norm_sq;
    let h_quad = g.matrix[i][i] / ball;
    ensure((h_quad - 1.0 / 7.0).abs() < SPOT, || {
        format!("H_11 by quadrature = {h_quad}")
    })?;
    Ok(format!(
        "M (p=30) and N (p=25), d in {{1,2}}: offdiag < {OFFDIAG:e}, diag < {DIAG_REL:e}; H_11 = 1/7 by formula and quadrature"
    ))
}

fn criterion_4() -> Outcome {
    let (mu, p) = (0.5, 30.0);
    let mut checked = 0;
    for d in 1..=3 {
        let params = ConeFamilyParams::new(d, mu, ConeFamily::M { p, q: 0.0 });
        let op = operator_m(d, mu, p);
        for n in 0..=4 {
            let predicted = n as f64 * (n as f64 - p + 2.0 * mu + d as f64);
            for e in lib(cone_basis(&params, n))? {
                let (_, rel) = lib(operator_residual_m(&params, &e))?;
                ensure(rel <= IDENTITY, || {
                    format!("d={d} {}: residual {rel:e}", e.label())
                })?;
                // Eigenvalue read off the dominant coefficient, independently of m.
                let image = lib(op.apply(&e.materialized))?;
                let (mono, c) = e
                    .materialized
                    .terms()
                    .max_by(|a, b| a.1.abs().total_cmp(&b.1.abs()))
                    .ok_or("zero element")?;
                let eig = image.coeff(mono) / c;
                ensure(
                    (eig - predicted).abs() <= IDENTITY * predicted.abs().max(1.0),
                    || format!("d={d} {}: eigenvalue {eig} vs {predicted}", e.label()),
                )?;
                checked += 1;
            }
        }
    }
    Ok(format!(
        "{checked} M elements (q=0, n<=4, d=1..3) are eigenfunctions with eigenvalue n(n-p+2μ+d)"
    ))
}

fn criterion_5() -> Outcome {
    let p = 30.0;
    let mut checked = 0;
    for d in 1..=3 {
        let params = ConeFamilyParams::new(d, 0.5, ConeFamily::N { p });
        for n in 0..=4 {
            for e in lib(cone_basis(&params, n))? {
                let (_, rel) = lib(diffdiff_residual_n(&params, &e))?;
                ensure(rel <= IDENTITY, || {
                    format!("cone d={d} {}: {rel:e}", e.label())
                })?;
                checked += 1;
            }
        }
    }
    for d in [2, 3] {
        let params = SurfaceParams::new(d, ConeFamily::N { p });
        for n in 0..=4 {
            for e in lib(surface_basis(&params, n))? {
                let (_, rel) = lib(surface_diffdiff_residual_n(&params, &e))?;
                ensure(rel <= IDENTITY, || {
                    format!("surface d={d} {}: {rel:e}", e.label())
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!(
        "{checked} cone and surface N elements satisfy the identity with the p-2 companion"
    ))
}

fn criterion_6() -> Outcome {
    let mut checked = 0;
    for d in [1, 2] {
        for (family, form) in [
            (ConeFamily::M { p: 30.0, q: 0.0 }, RecurrenceForm::Corrected),
            (ConeFamily::N { p: 30.0 }, RecurrenceForm::Uncorrected),
        ] {
            let params = ConeFamilyParams::new(d, 0.5, family);
            for n in 0..=4 {
                for e in lib(cone_basis(&params, n))? {
                    let rel = lib(recurrence_residual(&params, e.n, e.m, e.index, form))?;
                    ensure(rel <= IDENTITY, || {
                        format!("{family:?} d={d} {}: {rel:e}", e.label())
                    })?;
                    checked += 1;
                }
            }
        }
    }
    // The uncorrected M coefficients must surface as a named, registered entry.
    let desc = Descriptor {
        d: 2,
        p: Some(30.0),
        q: Some(0.0),
        ..Descriptor::new(FamilySelector::ConeM, 4)
    };
    let report = lib(run_suite(Suite::Recurrence, &desc, &Thresholds::default()))?;
    ensure(report.passed(), || {
        "recurrence report has undocumented failures".into()
    })?;
    let documented = report.count(Verdict::DocumentedDiscrepancy);
    ensure(documented > 0, || {
        "uncorrected-form discrepancy not surfaced".into()
    })?;
    ensure(
        report
            .checks
            .iter()
            .filter(|c| c.verdict == Verdict::DocumentedDiscrepancy)
            .all(|c| c.anchor == "cone.m.recurrence" && !c.detail.is_empty()),
        || "discrepancy entries lack anchor or explanation".into(),
    )?;
    Ok(format!(
        "{checked} recurrence steps within {IDENTITY:e}; {documented} documented discrepancies for the uncorrected M middle coefficient"
    ))
}

fn fit_ok(fit: &ConvergenceFit, deviations: &[f64], exact_expected: bool) -> bool {
    match fit {
        ConvergenceFit::Exact => deviations.iter().all(|e| *e == 0.0),
        ConvergenceFit::Exponent(_) if exact_expected => false,
        ConvergenceFit::Exponent(_) => fit.within(EXPONENT_WINDOW.0, EXPONENT_WINDOW.1),
    }
}

fn criterion_7() -> Outcome {
    let grid = [1e2, 1e3, 1e4];
    let mut count = 0;
    for d in [1, 2] {
        let params = ConeFamilyParams::new(d, 0.5, ConeFamily::M { p: 30.0, q: 0.0 });
        for n in 0..=3 {
            for e in lib(cone_basis(&params, n))? {
                let r = lib(limit_to_laguerre(&params, e.n, e.m, e.index, &grid))?;
                ensure(fit_ok(&r.fit, &r.deviations, e.n == e.m), || {
                    format!("cone d={d} {}: {:?} {:?}", e.label(), r.fit, r.deviations)
                })?;
                count += 1;
            }
        }
    }
    for d in [2, 3] {
        let params = SurfaceParams::new(d, ConeFamily::M { p: 30.0, q: 0.0 });
        for n in 0..=3 {
            for e in lib(surface_basis(&params, n))? {
                let r = lib(surface_limit_m(&params, e.n, e.m, e.index, &grid))?;
                ensure(fit_ok(&r.fit, &r.deviations, e.n == e.m), || {
                    format!(
                        "surface d={d} {}: {:?} {:?}",
                        e.label(),
                        r.fit,
                        r.deviations
                    )
                })?;
                count += 1;
            }
        }
    }
    for d in 1..=3 {
        let r = lib(laguerre_cone_checks(d, 0.5, 4))?;
        ensure(
            r.max_pde_residual <= IDENTITY && r.max_recurrence_residual <= IDENTITY,
            || format!("Laguerre cone d={d}: {r:?}"),
        )?;
    }
    for d in [2, 3] {
        let params = SurfaceParams::new(d, ConeFamily::Laguerre { beta: -1.0 });
        for n in 0..=4 {
            for e in lib(surface_basis(&params, n))? {
                let (_, rel) = lib(surface_laguerre_ode_residual(&params, &e))?;
                ensure(rel <= IDENTITY, || {
                    format!("surface Laguerre d={d} {}: {rel:e}", e.label())
                })?;
            }
        }
    }
    Ok(format!(
        "{count} limits decay with exponent in [{}, {}] or are exact at n=m; Laguerre equations and recurrence within {IDENTITY:e}",
        EXPONENT_WINDOW.0, EXPONENT_WINDOW.1
    ))
}

fn criterion_8() -> Outcome {
    for d in [2, 3] {
        let g = lib(surface_gram(
            &SurfaceParams::new(d, ConeFamily::M { p: 30.0, q: 0.0 }),
            4,
        ))?;
        ensure(g.max_offdiag < OFFDIAG && g.max_diag_rel < DIAG_REL, || {
            format!(
                "d={d}: offdiag {:e}, diag {:e}",
                g.max_offdiag, g.max_diag_rel
            )
        })?;
        let params = SurfaceParams::new(d, ConeFamily::M { p: 30.0, q: -1.0 });
        for n in 0..=4 {
            for e in lib(surface_basis(&params, n))? {
                let (_, rel) = lib(surface_ode_residual_m(&params, &e))?;
                ensure(rel <= IDENTITY, || {
                    format!("q=-1 d={d} {}: {rel:e}", e.label())
                })?;
            }
        }
    }
    Ok(format!("surface M Gram (d=2,3, p=30) diag within {DIAG_REL:e}; q=-1 equation with eigenvalue n(n-p+d) holds"))
}

/// `C(n, k)` by exact integer arithmetic.
fn choose(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn criterion_9() -> Outcome {
    for d in [2usize, 3] {
        let cone = ConeFamilyParams::new(d, 0.5, ConeFamily::M { p: 40.0, q: 0.0 });
        let surf = SurfaceParams::new(d, ConeFamily::M { p: 40.0, q: 0.0 });
        for n in 0..=6usize {
            let (ni, di) = (n as i64, d as i64);
            let c = lib(cone_basis(&cone, n))?.len() as i64;
            ensure(c == choose(ni + di, ni), || {
                format!("cone d={d} n={n}: {c}")
            })?;
            let s = lib(surface_basis(&surf, n))?.len() as i64;
            let want = choose(ni + di - 1, ni) + choose(ni + di - 2, ni - 1);
            ensure(s == want, || format!("surface d={d} n={n}: {s} vs {want}"))?;
        }
    }
    Ok("basis counts match the binomial formulas for n<=6, d=2,3".into())
}

fn criterion_10() -> Outcome {
    let family = ConeFamily::M { p: 202.0, q: 0.0 };
    let params = ConeFamilyParams::new(1, 0.5, family).with_convention(Convention::PaperGegenbauer);
    let g = lib(cone_gram(&params, 8))?;
    ensure(g.labels.len() == 45, || {
        format!("{} elements", g.labels.len())
    })?;
    ensure(g.max_diag_rel < DIAG_REL && g.max_offdiag < OFFDIAG, || {
        format!("diag {:e}, offdiag {:e}", g.max_diag_rel, g.max_offdiag)
    })?;
    let degenerate =
        ConeFamilyParams::new(1, 0.0, family).with_convention(Convention::PaperGegenbauer);
    match cone_basis(&degenerate, 1) {
        Err(Error::DegenerateParam(msg)) => {
            ensure(msg.contains("C_m^(0)"), || format!("message {msg}"))?
        }
        other => return Err(format!("μ = 0 not rejected: {other:?}")),
    }
    Ok(format!(
        "d=1, p=202, q=0, μ=1/2, n<=8: diagonal within {DIAG_REL:e}; μ=0 rejected as degenerate"
    ))
}

#[test]
fn criterion_01_univariate_golden_values() {
    record(1, criterion_1());
}

#[test]
fn criterion_02_univariate_window() {
    record(2, criterion_2());
}

#[test]
fn criterion_03_cone_orthogonality() {
    record(3, criterion_3());
}

#[test]
fn criterion_04_cone_eigenfunctions() {
    record(4, criterion_4());
}

#[test]
fn criterion_05_difference_differential() {
    record(5, criterion_5());
}

#[test]
fn criterion_06_recurrences() {
    record(6, criterion_6());
}

#[test]
fn criterion_07_limits() {
    record(7, criterion_7());
}

#[test]
fn criterion_08_surface() {
    record(8, criterion_8());
}

#[test]
fn criterion_09_dimensions() {
    record(9, criterion_9());
}

#[test]
fn criterion_10_large_parameter_example() {
    record(10, criterion_10());
}
