//! Every example runs, and what it computes matches closed-form values.

use std::f64::consts::PI;

macro_rules! example {
    ($name:ident) => {
        mod $name {
            include!(concat!(
                env!("CARGO_MANIFEST_DIR"),
                "/examples/",
                stringify!($name),
                ".rs"
            ));
        }
    };
}

example!(special_functions);
example!(univariate_families);
example!(finite_window);
example!(quadrature_rules);
example!(spherical_harmonics);
example!(ball_basis);
example!(cone_orthogonality);
example!(cone_equations);
example!(cone_recurrence);
example!(laguerre_limits);
example!(surface_family);
example!(verification_report);
example!(command_line);
example!(worked_example);

fn close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * b.abs().max(1e-300)
}

#[test]
fn special_functions_example() {
    let v = special_functions::run_example().unwrap();
    assert!(close(v.gamma_half, PI.sqrt(), 1e-14));
    // ln 199! summed directly.
    let ln_fact: f64 = (1..200).map(|k| (k as f64).ln()).sum();
    assert!(close(v.ln_gamma_200, ln_fact, 1e-13));
    assert!(close(v.ratio, 7.5 * 8.5 * 9.5, 1e-14));
    assert!(close(v.beta_3_1, 1.0 / 3.0, 1e-14));
    // (c-b)_4/(c)_4 with c-b = 1.75, c = 3.25.
    let want = (1.75 * 2.75 * 3.75 * 4.75) / (3.25 * 4.25 * 5.25 * 6.25);
    assert!(close(v.chu_vandermonde, want, 1e-13));
    assert!(v.pole_rejected);
}

#[test]
fn univariate_families_example() {
    let v = univariate_families::run_example().unwrap();
    assert_eq!(v.n_samples, ["1", "8*t - 1", "42*t^2 - 14*t + 1"]);
    assert_eq!(v.m1, "8*t - 1");
    assert!(v.max_path_gap < 1e-9);
}

#[test]
fn finite_window_example() {
    let v = finite_window::run_example().unwrap();
    for x in [v.m_offdiag, v.m_diag_rel, v.n_offdiag, v.n_diag_rel] {
        assert!(x < 1e-10, "{x}");
    }
    assert_eq!(v.rejections.len(), 2);
    assert!(v.rejections.iter().all(|m| m.contains("p > 2N+1")));
}

#[test]
fn quadrature_rules_example() {
    let v = quadrature_rules::run_example().unwrap();
    assert!(close(v.legendre_x4, 0.4, 1e-14));
    assert!(close(v.wpq_t, 1.0 / 6.0, 1e-14));
    assert!(close(v.ball_length, 2.0, 1e-14));
    // ∫_{-1}^{1} dy · ∫ t^{d+2μ-1} (1+t)^{-4} dt = 2 · B(2, 2) = 1/3 at d = 1, μ = 1/2.
    assert!(close(v.cone_mass, 1.0 / 3.0, 1e-13));
    assert!(close(v.surface_mass, 2.0 * PI, 1e-13));
    assert!(v.divergent_rejected);
}

#[test]
fn spherical_harmonics_example() {
    let v = spherical_harmonics::run_example().unwrap();
    for (d, m, count) in v.counts {
        let want = match d {
            1 => usize::from(m < 2),
            2 => {
                if m == 0 {
                    1
                } else {
                    2
                }
            }
            _ => 2 * m + 1,
        };
        assert_eq!(count, want, "d={d} m={m}");
    }
    assert!(v.max_gram_error < 1e-12);
    assert!(v.all_harmonic);
}

#[test]
fn ball_basis_example() {
    let v = ball_basis::run_example().unwrap();
    assert!(close(v.normalization_d2, 1.0 / PI, 1e-14));
    assert!(v.max_gram_error < 1e-12);
    assert!(v.max_operator_residual < 1e-12);
    assert!(v.degenerate_mu_message.starts_with("degenerate parameters"));
}

#[test]
fn cone_orthogonality_example() {
    let v = cone_orthogonality::run_example().unwrap();
    assert_eq!(v.rows.len(), 6);
    for (name, d, off, diag) in &v.rows {
        assert!(*off < 1e-10 && *diag < 1e-9, "{name} d={d}");
    }
    assert!(close(v.h11, 1.0 / 7.0, 1e-13));
}

#[test]
fn cone_equations_example() {
    let v = cone_equations::run_example().unwrap();
    for (d, r) in v.m_residuals.iter().chain(&v.n_residuals) {
        assert!(*r <= 1e-9, "d={d}: {r}");
    }
}

#[test]
fn cone_recurrence_example() {
    let v = cone_recurrence::run_example().unwrap();
    assert!(v.m_uncorrected > 1e-3);
    assert!(v.m_corrected <= 1e-9);
    assert!(v.n_family <= 1e-9);
    assert!(v.laguerre <= 1e-9);
}

#[test]
fn laguerre_limits_example() {
    use finite_cone::verifier::ConvergenceFit;
    let v = laguerre_limits::run_example().unwrap();
    for (label, n, m, fit) in v.cone.iter().chain(&v.surface) {
        if n == m {
            assert_eq!(*fit, ConvergenceFit::Exact, "{label}");
        } else {
            assert!(fit.within(0.8, 1.2), "{label}: {fit:?}");
        }
    }
}

#[test]
fn surface_family_example() {
    let v = surface_family::run_example().unwrap();
    for (d, off, diag) in &v.gram {
        assert!(*off < 1e-10 && *diag < 1e-9, "d={d}");
    }
    assert!(v.m_ode_residual <= 1e-9);
    assert!(v.laguerre_ode_residual <= 1e-9);
    for (d, n, count, closed) in v.counts {
        // d=2: 2n+1 by hand; d=3: (n+1)^2.
        let by_hand = if d == 2 { 2 * n + 1 } else { (n + 1) * (n + 1) };
        assert_eq!(count, closed);
        assert_eq!(count, by_hand, "d={d} n={n}");
    }
}

#[test]
fn verification_report_example() {
    use finite_cone::verifier::Verdict;
    let v = verification_report::run_example().unwrap();
    assert!(v.full.passed());
    assert!(v.full.count(Verdict::DocumentedDiscrepancy) > 0);
    assert_eq!(v.probe.checks[0].verdict, Verdict::ExpectedFailure);
    assert!(v.probe.checks[0].detail.contains("p > 2N+2μ+d"));
    // Surface N at d=2, p=25, (n,m)=(1,0): (n-m)! Γ(p-n-m-d+1) / ((p-2n-d) Γ(p-d)) = 1/21.
    let mut reader = csv::Reader::from_reader(v.csv.as_bytes());
    let headers = reader.headers().unwrap().clone();
    let col = |name: &str| headers.iter().position(|h| h == name).unwrap();
    let (element, expected_col) = (col("element"), col("expected"));
    let row = reader
        .records()
        .map(Result::unwrap)
        .find(|r| &r[element] == "(n=1, m=0, l=0)")
        .expect("row for (1,0)");
    let expected: f64 = row[expected_col].parse().unwrap();
    assert!(close(expected, 1.0 / 21.0, 1e-13));
}

#[test]
fn command_line_example() {
    let v = command_line::run_example().unwrap();
    let codes: Vec<u8> = v.runs.iter().map(|r| r.1).collect();
    assert_eq!(codes, [0, 0, 2, 0, 0, 2]);
    let lines: Vec<&str> = v.runs[1]
        .2
        .lines()
        .map(|l| l.split('\t').nth(1).unwrap())
        .collect();
    assert_eq!(lines, ["1", "7*t - 2", "x"]);
    assert!(v.runs[2].3.contains("requires p > 2N+2μ+d"));
    assert!(v.runs[4].2.trim_end().ends_with("\t0.5"));
    assert!(v.runs[5].3.contains("domain error"));
}

#[test]
fn worked_example_example() {
    let v = worked_example::run_example().unwrap();
    assert_eq!(v.elements, 45);
    assert!(v.max_offdiag < 1e-10);
    assert!(v.max_diag_rel < 1e-9);
    assert!(v.mu_zero_message.contains("degenerate"));
}
