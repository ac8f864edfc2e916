//! The three subcommands: verify, fields, boost.

use std::path::Path;

use anyhow::{Context, Result};
use matterwave::{
    aspect_resolution_check, boost_frame_quantities, boost_wave_equation, boosted_spec,
    energy_breakdown, hamiltonian_balance, kinetic_operator_check, make_boost,
    mass_matched_volume, photon_energy_check, run_suite, sample_grid, spin_electron, spin_photon,
    transfer_quantum, transfer_rate, uncertainty_product, FrameQuantities, ParticleKind,
    ParticleSpecF64, ResolutionVerdict, TransferSpec, Vec3, BOOST_RESIDUAL_NOTE,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::config::RunConfig;
use crate::report::{CheckRow, Report};

const EXACT_TOL: f64 = 1e-12;

/// Runs every residual check plus the scalar invariants and writes the report.
pub fn cmd_verify(
    config: RunConfig,
    seed: u64,
    order_flag: Option<u32>,
    out_dir: Option<&Path>,
) -> Result<u8> {
    let spec = config.build_spec()?;
    let geom = config.build_grid(&spec)?;
    let suite = config.build_suite(order_flag)?;

    let mut report = Report::new("verify", seed, config);
    report.note(format!(
        "model: {} wave, |u| = {:.6e}, omega = {:.6e}, wavelength = {:.6e}",
        spec.kind.name(),
        spec.speed(),
        spec.omega,
        spec.wavelength(),
    ));
    report.note(
        "differential identities are checked twice: in closed form from the mode calculus, \
         and numerically with central stencils under grid refinement",
    );

    for r in run_suite(&spec, &geom, &suite)? {
        report.push(CheckRow::from_residual(&r));
    }
    scalar_invariant_rows(&mut report, &spec, seed)?;

    report.finalize();
    report.emit(out_dir, "report.json")?;
    Ok(if report.all_passed() { 0 } else { 1 })
}

/// Appends the closed-form and randomized scalar invariants to the report.
fn scalar_invariant_rows(report: &mut Report, spec: &ParticleSpecF64, seed: u64) -> Result<()> {
    let c = spec.constants;

    // Period-averaged energy bookkeeping.
    let e = energy_breakdown(spec, 256)?;
    report.push(CheckRow::scalar(
        "energy_split",
        "quadrature",
        (e.w_kinetic - e.w_potential).abs() / e.w_total,
        EXACT_TOL,
        "kinetic and potential energy contribute equal halves of the period average",
    ));
    let matched_volume = match spec.kind {
        ParticleKind::Electron => mass_matched_volume(&c, spec.rho0),
        ParticleKind::Photon => 2.0 * (c.hbar * spec.omega / (c.c0 * c.c0)) / spec.rho0,
    };
    let matched = (*spec).with_volume(matched_volume)?;
    let em = energy_breakdown(&matched, 256)?;
    report.push(CheckRow::scalar(
        "energy_total_mass",
        "quadrature",
        (em.planck_ratio - 1.0).abs(),
        EXACT_TOL,
        "at the volume whose average density carries the particle mass, the total energy \
         is one frequency quantum",
    ));
    report.extra(
        "energy_breakdown",
        json!({
            "rho_mean": e.rho_mean,
            "phi_mean": e.phi_mean,
            "w_kinetic": e.w_kinetic,
            "w_potential": e.w_potential,
            "w_total": e.w_total,
            "m_eff": e.m_eff,
            "omega_check": e.omega_check,
            "planck_ratio": e.planck_ratio,
            "mass_matched_volume": matched_volume,
        }),
    );

    match spec.kind {
        ParticleKind::Electron => {
            let residual = kinetic_operator_check(spec)?;
            report.push(CheckRow::scalar(
                "kinetic_operator",
                "analytic",
                residual / (c.hbar * spec.omega * spec.psi0),
                EXACT_TOL,
                "the curvature operator applied to the wave function reproduces half a \
                 frequency quantum per unit amplitude",
            ));
        }
        ParticleKind::Photon => {
            let p = photon_energy_check(spec)?;
            let residual = (p.energy_momentum_residual / (spec.rho0 * spec.omega))
                .max(p.potential_residual / p.phi0);
            report.push(CheckRow::scalar(
                "photon_einstein",
                "analytic",
                residual,
                1e-14,
                "the light wave's momentum and potential amplitudes satisfy the \
                 energy-momentum and mass-energy relations",
            ));
            report.extra(
                "photon_energy",
                json!({ "phi0": p.phi0, "p0": p.p0 }),
            );
        }
    }

    // Uncertainty product and the resolution window it forbids.
    let u = uncertainty_product(&c, spec.speed())?;
    report.push(CheckRow::scalar(
        "uncertainty_saturation",
        "analytic",
        (u.product_xp - u.bound).abs() / u.bound,
        EXACT_TOL,
        "the position-momentum spread product sits exactly on its lower bound",
    ));
    report.extra(
        "uncertainty",
        json!({
            "delta_v": u.delta_v,
            "delta_k": u.delta_k,
            "delta_x": u.delta_x,
            "product_xp": u.product_xp,
            "bound": u.bound,
            "bound_canonical": u.bound_canonical,
        }),
    );
    let aspect = aspect_resolution_check(&c, spec.wavelength())?;
    let mut aspect_row = CheckRow::scalar(
        "aspect_resolution",
        "analytic",
        (aspect.window_dx - aspect.required_dx).abs() / aspect.required_dx,
        1e-15,
        "resolving structure inside one density period needs exactly the window the \
         spread product forbids, so the interior stays unobservable",
    );
    aspect_row.passed =
        aspect_row.passed && aspect.verdict == ResolutionVerdict::ViolatesUncertaintyWindow;
    report.push(aspect_row);
    report.extra(
        "aspect_resolution",
        json!({
            "wavelength": aspect.wavelength,
            "required_dx": aspect.required_dx,
            "required_dt": aspect.required_dt,
            "window_dx": aspect.window_dx,
            "window_dt": aspect.window_dt,
            "violates_window": aspect.verdict == ResolutionVerdict::ViolatesUncertaintyWindow,
        }),
    );

    // Intrinsic angular momentum for both wave kinds at this frequency.
    for (name, spin) in [
        ("spin_product_photon", spin_photon(&c, spec.omega)?),
        ("spin_product_electron", spin_electron(&c, spec.omega)?),
    ] {
        let residual = ((spin.product_gs - c.hbar).abs() / c.hbar)
            .max((spin.energy - spin.energy_expected).abs() / spin.energy_expected);
        report.push(CheckRow::scalar(
            name,
            "analytic",
            residual,
            EXACT_TOL,
            "the g-factor times the spin magnitude equals the angular-momentum quantum, \
             and the magnetic energy it implies matches the frequency quantum",
        ));
        report.extra(
            name,
            json!({
                "s": spin.s,
                "g_factor": spin.g_factor,
                "product_gs": spin.product_gs,
                "b_used": spin.b_used,
                "energy": spin.energy,
                "energy_expected": spin.energy_expected,
            }),
        );
    }

    // Energy bookkeeping of an absorption or emission event.
    let xdot = match spec.kind {
        ParticleKind::Electron => spec.speed(),
        ParticleKind::Photon => c.c0 / 2.0,
    };
    let state = hamiltonian_balance(spec.rho0, xdot, c.sigma_bar, spec.phi_amplitude(), &c)?;
    let balance = (state.balance_residual(&c) + state.split_residual())
        / (state.rho_el0 * state.xdot * state.xdot);
    report.push(CheckRow::scalar(
        "interaction_balance",
        "analytic",
        balance,
        EXACT_TOL,
        "the energy density leaving the charge wave equals the energy density of the \
         emitted light, and the bookkeeping splits without loss",
    ));
    report.extra(
        "interaction",
        json!({
            "rho_el0": state.rho_el0,
            "xdot": state.xdot,
            "h0": state.h0,
            "h": state.h,
            "h_w": state.h_w,
            "rho_ph0": state.rho_ph0,
        }),
    );
    let nu = spec.omega / std::f64::consts::TAU;
    let tspec = TransferSpec::new(1.0, nu, spec.wavelength(), 0.5)?;
    let rate = transfer_rate(&c, nu)?;
    report.push(CheckRow::scalar(
        "transfer_per_period",
        "analytic",
        (rate * tspec.tau - c.h * nu).abs() / (c.h * nu),
        EXACT_TOL,
        "energy transferred at the characteristic rate over one period is one \
         frequency quantum",
    ));
    let quantum = transfer_quantum(&tspec, state.rho_ph0, &c)?;
    report.extra(
        "transfer",
        json!({
            "nu": nu,
            "rate": rate,
            "tau": tspec.tau,
            "quantum_energy": quantum.energy,
            "alpha_quantum": quantum.alpha_quantum,
        }),
    );

    // Pointwise amplitude relations at seeded random sample points.
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let span_x = 2.0 * spec.wavelength();
    let span_t = 2.0 * spec.period();
    let amp = spec.em_amplitude();
    let cap = spec.phi_amplitude();
    let mut closure = 0.0f64;
    let mut transversal = 0.0f64;
    let mut magnitude = 0.0f64;
    let mut density = 0.0f64;
    for _ in 0..64 {
        let x = Vec3::new(
            rng.gen_range(-span_x..span_x),
            rng.gen_range(-span_x..span_x),
            rng.gen_range(-span_x..span_x),
        );
        let t = rng.gen_range(-span_t..span_t);
        closure = closure.max((spec.potential_total(x, t) - cap).abs() / cap);
        let (ef, bf) = spec.em_fields(x, t);
        transversal = transversal
            .max(ef.dot(spec.e_k).abs() / amp)
            .max(bf.dot(spec.e_k).abs() / amp)
            .max(ef.dot(bf).abs() / (amp * amp));
        magnitude = magnitude.max((ef.norm() - bf.norm()).abs() / amp);
        let w = (ef.norm_squared() + bf.norm_squared()) / (8.0 * std::f64::consts::PI);
        density = density.max((w - spec.potential(x, t)).abs() / cap);
    }
    report.push(CheckRow::scalar(
        "energy_closure_random_points",
        "sampled",
        closure,
        EXACT_TOL,
        "kinetic plus potential energy density is the same constant at every point",
    ));
    report.push(CheckRow::scalar(
        "transversality_random_points",
        "sampled",
        transversal,
        EXACT_TOL,
        "both transversal fields stay orthogonal to the travel direction and to \
         each other at every point",
    ));
    report.push(CheckRow::scalar(
        "field_magnitude_pair",
        "sampled",
        magnitude,
        EXACT_TOL,
        "the two transversal field magnitudes coincide at every point",
    ));
    report.push(CheckRow::scalar(
        "em_energy_density",
        "sampled",
        density,
        EXACT_TOL,
        "the transversal field energy density reproduces the intrinsic potential \
         at every point",
    ));
    Ok(())
}

/// Samples every channel on the configured lattice and writes CSV.
pub fn cmd_fields(config: RunConfig, out_dir: Option<&Path>) -> Result<u8> {
    let spec = config.build_spec()?;
    let geom = config.build_grid(&spec)?;
    let grid = sample_grid(&spec, &geom)?;
    match out_dir {
        Some(dir) => {
            std::fs::create_dir_all(dir)
                .with_context(|| format!("creating output directory {}", dir.display()))?;
            let path = dir.join("fields.csv");
            let file = std::fs::File::create(&path)
                .with_context(|| format!("writing {}", path.display()))?;
            grid.write_csv(std::io::BufWriter::new(file))?;
            let [nx, ny, nz, nt] = geom.dims;
            println!("wrote {} ({} samples)", path.display(), nx * ny * nz * nt);
        }
        None => {
            let stdout = std::io::stdout();
            grid.write_csv(std::io::BufWriter::new(stdout.lock()))?;
        }
    }
    Ok(0)
}

/// Checks frame invariants across a sweep of boosts along x.
pub fn cmd_boost(config: RunConfig, seed: u64, out_dir: Option<&Path>) -> Result<u8> {
    let spec = config.build_spec()?;
    let betas = config
        .boost
        .as_ref()
        .context("config has no \"boost\" section")?
        .betas()?;
    let suite = config.build_suite(None)?;

    let mut report = Report::new("boost", seed, config.clone());
    report.note(BOOST_RESIDUAL_NOTE);

    let c = spec.constants;
    let u_x = match spec.kind {
        ParticleKind::Electron => spec.u.x,
        ParticleKind::Photon => c.c0 * spec.e_k.x.signum(),
    };
    let before = FrameQuantities::new(spec.rho0, spec.phi_amplitude(), spec.v_p, u_x);

    for (i, &beta) in betas.iter().enumerate() {
        let boost = make_boost(&c, beta * c.c0)
            .with_context(|| format!("building boost for beta = {beta}"))?;
        let after = boost_frame_quantities(&before, &boost);
        report.push(CheckRow::scalar(
            format!("energy_invariance_beta_{beta}"),
            "analytic",
            (after.e0 - before.e0).abs() / before.e0,
            1e-9,
            "the intrinsic energy density times the particle volume is the same in \
             the moving frame",
        ));

        let boosted = boosted_spec(&spec, &boost)
            .with_context(|| format!("rebuilding the model for beta = {beta}"))?;
        let geom = config.build_grid(&boosted)?;
        let wave = boost_wave_equation(&spec, &boost, &geom, matterwave::Method::Analytic, &suite)?;
        let mut row = CheckRow::from_residual(&wave.report);
        row.name = format!("boosted_wave_equation_beta_{beta}");
        report.push(row);

        report.extra(
            format!("boost_{i:02}"),
            json!({
                "beta": beta,
                "gamma": boost.gamma,
                "before": { "rho": before.rho, "phi0": before.phi0, "v_p": before.v_p,
                            "u_x": before.u_x, "e0": before.e0 },
                "after": { "rho": after.rho, "phi0": after.phi0, "v_p": after.v_p,
                           "u_x": after.u_x, "e0": after.e0 },
                "boosted_speed": wave.boosted_speed,
                "c_phase_sq": wave.c_phase_sq,
            }),
        );
    }

    report.finalize();
    if report.all_passed() {
        report.note("verdict: the intrinsic energy is frame-invariant across the sweep");
    } else {
        report.note("verdict: at least one frame check failed");
    }
    report.emit(out_dir, "boost.json")?;
    Ok(if report.all_passed() { 0 } else { 1 })
}
