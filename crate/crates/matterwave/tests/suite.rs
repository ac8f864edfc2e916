//! End-to-end runs of the full residual suite on whole sampled lattices.

use matterwave::{
    make_constants, make_electron, make_photon, run_suite, whole_period_offset, ConstantsF64,
    ConstantsOverrides, GridGeometryF64, Identity, Method, ParticleSpecF64, StencilOrder,
    SuiteConfigF64, UnitSystem, Vec3, WavePacket,
};

fn constants10() -> ConstantsF64 {
    make_constants(
        UnitSystem::Natural,
        ConstantsOverrides {
            c0: Some(10.0),
            ..ConstantsOverrides::default()
        },
    )
    .unwrap()
}

/// A direction with no axis alignment, so truncation error is visible on the
/// lattice and refinement ratios are measurable.
fn oblique() -> Vec3<f64> {
    Vec3::new(1.0, 2.0, -0.5)
}

fn oblique_electron() -> ParticleSpecF64 {
    let u = oblique().normalized().unwrap() * 0.8;
    make_electron(&constants10(), 1.3, u, 1.0).unwrap()
}

fn oblique_photon() -> ParticleSpecF64 {
    make_photon(&constants10(), 0.7, oblique(), 4.0).unwrap()
}

fn grid_for(spec: &ParticleSpecF64) -> GridGeometryF64 {
    GridGeometryF64::for_spec(spec, 16, [8, 8, 8, 8]).unwrap()
}

fn assert_all_pass(reports: &[matterwave::ResidualReport<f64>]) {
    for r in reports {
        assert!(
            r.passed,
            "{} [{}] failed: max={:.3e} tol={:.3e}",
            r.identity.name(),
            r.method.name(),
            r.max_residual,
            r.tolerance
        );
    }
}

#[test]
fn full_suite_passes_for_an_oblique_electron() {
    let spec = oblique_electron();
    let reports = run_suite(&spec, &grid_for(&spec), &SuiteConfigF64::default()).unwrap();
    assert_eq!(reports.len(), 20);
    assert_all_pass(&reports);

    // Oblique propagation leaves real truncation error, so the numerical
    // wave-equation rows must show a near-quadruple refinement gain.
    for r in &reports {
        if r.method == Method::FiniteDifference && r.identity == Identity::WaveEqRho {
            let ratio = r.convergence_ratio.expect("measurable ratio");
            assert!((3.3..4.8).contains(&ratio), "ratio {ratio}");
        }
    }
}

#[test]
fn full_suite_passes_for_an_oblique_photon() {
    let spec = oblique_photon();
    let reports = run_suite(&spec, &grid_for(&spec), &SuiteConfigF64::default()).unwrap();
    assert_eq!(reports.len(), 20);
    assert_all_pass(&reports);
}

#[test]
fn full_suite_passes_for_a_two_component_packet() {
    let c = constants10();
    let a = make_photon(&c, 0.7, oblique(), 4.0).unwrap();
    let b = make_photon(&c, 0.3, oblique(), 8.0).unwrap();
    let packet = WavePacket::new(vec![a, b]).unwrap();
    let geom = GridGeometryF64::for_spec(&a, 16, [7, 7, 7, 7]).unwrap();
    let reports = run_suite(&packet, &geom, &SuiteConfigF64::default()).unwrap();
    assert_all_pass(&reports);
}

/// Detuning the frequency off the dispersion line must break exactly the
/// identities that depend on it and leave the rest closed.
fn detuned_pattern(spec: ParticleSpecF64) {
    let rho0 = spec.rho0;
    let omega_valid = spec.omega;
    let detuned = spec.detuned_omega(1.1);
    let geom = grid_for(&detuned);
    let reports = run_suite(&detuned, &geom, &SuiteConfigF64::default()).unwrap();

    let must_fail = [
        Identity::WaveEqPsi,
        Identity::WaveEqRho,
        Identity::WaveEqP,
        Identity::Continuity,
        Identity::AmpereSubluminal,
        Identity::AmpereInhomogeneous,
        Identity::LorentzCondition,
    ];
    let must_pass = [Identity::Faraday, Identity::DivB, Identity::GaussD];

    for r in &reports {
        if must_fail.contains(&r.identity) {
            assert!(!r.passed, "{} [{}] unexpectedly passed", r.identity.name(), r.method.name());
        }
        if must_pass.contains(&r.identity) {
            assert!(r.passed, "{} [{}] unexpectedly failed", r.identity.name(), r.method.name());
        }
        // The broken mass balance has a closed form: the largest pointwise
        // defect is ρ₀·|k·u − ω′| = 0.1·ρ₀·ω.
        if r.identity == Identity::Continuity && r.method == Method::Analytic {
            let expected = 0.1 * rho0 * omega_valid;
            assert!((r.max_residual - expected).abs() <= 1e-9 * expected);
        }
    }
}

#[test]
fn detuned_electron_fails_exactly_the_dispersion_identities() {
    detuned_pattern(oblique_electron());
}

#[test]
fn detuned_photon_fails_exactly_the_dispersion_identities() {
    detuned_pattern(oblique_photon());
}

#[test]
fn shifting_the_window_by_whole_periods_changes_nothing() {
    let spec = oblique_electron();
    let config = SuiteConfigF64::default();
    let base = grid_for(&spec);

    let mut shifted = base;
    shifted.origin = shifted.origin + whole_period_offset(&spec, 5);
    shifted.t0 += 3.0 * spec.period();

    let a = run_suite(&spec, &base, &config).unwrap();
    let b = run_suite(&spec, &shifted, &config).unwrap();
    assert_eq!(a.len(), b.len());
    for (ra, rb) in a.iter().zip(&b) {
        assert_eq!(ra.identity, rb.identity);
        assert_eq!(ra.method, rb.method);
        assert_eq!(ra.passed, rb.passed);
        assert!(rb.passed);
    }
}

#[test]
fn fourth_order_stencils_gain_sixteenfold_under_refinement() {
    let spec = oblique_photon();
    let config = SuiteConfigF64 {
        stencil_order: StencilOrder::Four,
        ..SuiteConfigF64::default()
    };
    let geom = GridGeometryF64::for_spec(&spec, 16, [10, 10, 10, 10]).unwrap();
    let report = matterwave::check_identity(
        &spec,
        &geom,
        Method::FiniteDifference,
        &config,
        Identity::WaveEqRho,
    )
    .unwrap();
    assert!(report.passed);
    let ratio = report.convergence_ratio.expect("measurable ratio");
    assert!((11.0..21.0).contains(&ratio), "ratio {ratio}");
}

#[test]
fn gauge_condition_closes_for_light_in_both_unit_forms() {
    // For light the velocity-built gauge condition and its classical-unit
    // form coincide; the check folds both residual groups into one row.
    let spec = oblique_photon();
    let geom = grid_for(&spec);
    let report = matterwave::check_lorentz_condition(
        &spec,
        &geom,
        Method::Analytic,
        &SuiteConfigF64::default(),
    )
    .unwrap();
    assert!(report.passed);
    assert!(report.max_residual <= 1e-10);
}
