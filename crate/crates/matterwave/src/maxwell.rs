//! Residual checks for the differential identities the model satisfies.
//!
//! Every identity is verified two independent ways: analytically, by
//! assembling the residual from closed-form mode derivatives and evaluating it
//! on a lattice, and numerically, by sampling the raw channels and applying
//! finite-difference stencils. The numerical path must also shrink at the
//! stencil's nominal convergence rate under lattice refinement, which guards
//! against residuals that are merely small instead of genuinely zero.

use crate::diffops::{
    curl, d2_dt2, d_dt, div, laplacian, StencilConfig, StencilOrder,
};
use crate::error::Result;
use crate::fields::{
    sample_scalar_modes, sample_vector_modes, Field4, FieldModel, GridGeometry, ScalarChannel,
    ScalarMode, VectorChannel, VectorMode,
};
use crate::model::ParticleKind;
use crate::real::{lit, Real};
use crate::util::{max_and_rms, parallel_enabled};
use rayon::prelude::*;

/// The differential identities under test, in report order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Identity {
    /// Δψ = (1/|u|²)·∂²ψ/∂t² on the wave function.
    WaveEqPsi,
    /// The same wave equation on the mass density.
    WaveEqRho,
    /// The same wave equation on each momentum-density component.
    WaveEqP,
    /// ∂ρ/∂t + ∇·p = 0.
    Continuity,
    /// ∇×E + ∂B/∂t = 0.
    Faraday,
    /// (1/|u|²)·∂E/∂t − ∇×B = 0.
    AmpereSubluminal,
    /// ∂D/∂t − ∇×H + J = 0 with D = ε·E, H = B/μ, J = 0.
    AmpereInhomogeneous,
    /// ∇·B = 0.
    DivB,
    /// ∇·D = σ.
    GaussD,
    /// ∇·A + (c₀/|u|²)·∂φ/∂t = 0 (the gauge condition on the potentials).
    LorentzCondition,
}

impl Identity {
    /// All identities in report order.
    pub const ALL: [Identity; 10] = [
        Identity::WaveEqPsi,
        Identity::WaveEqRho,
        Identity::WaveEqP,
        Identity::Continuity,
        Identity::Faraday,
        Identity::AmpereSubluminal,
        Identity::AmpereInhomogeneous,
        Identity::DivB,
        Identity::GaussD,
        Identity::LorentzCondition,
    ];

    /// Stable machine-readable name.
    pub fn name(self) -> &'static str {
        match self {
            Identity::WaveEqPsi => "wave_equation_psi",
            Identity::WaveEqRho => "wave_equation_rho",
            Identity::WaveEqP => "wave_equation_momentum",
            Identity::Continuity => "continuity",
            Identity::Faraday => "faraday",
            Identity::AmpereSubluminal => "ampere_subluminal",
            Identity::AmpereInhomogeneous => "ampere_inhomogeneous",
            Identity::DivB => "div_b",
            Identity::GaussD => "gauss_d",
            Identity::LorentzCondition => "lorentz_condition",
        }
    }

    /// One-line statement of the identity being checked.
    pub fn description(self) -> &'static str {
        match self {
            Identity::WaveEqPsi => "wave equation on the wave function",
            Identity::WaveEqRho => "wave equation on the mass density",
            Identity::WaveEqP => "wave equation on the momentum density",
            Identity::Continuity => "mass continuity between density and momentum flow",
            Identity::Faraday => "induction law coupling the transversal fields",
            Identity::AmpereSubluminal => "circulation law at the mechanical wave speed",
            Identity::AmpereInhomogeneous => {
                "circulation law in medium form with micro-volume permittivity"
            }
            Identity::DivB => "solenoidality of the magnetic field",
            Identity::GaussD => "source equation of the displacement field",
            Identity::LorentzCondition => "gauge condition on the scalar and vector potentials",
        }
    }
}

/// How a residual was computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Method {
    /// Closed-form mode derivatives evaluated on the lattice.
    Analytic,
    /// Central stencils applied to sampled channel values.
    FiniteDifference,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Analytic => "analytic",
            Method::FiniteDifference => "finite_difference",
        }
    }
}

/// Outcome of one identity check by one method.
#[derive(Clone, Copy, Debug)]
pub struct ResidualReport<T> {
    pub identity: Identity,
    pub method: Method,
    /// Largest pointwise |residual| on the evaluation lattice.
    pub max_residual: T,
    /// Root-mean-square residual on the evaluation lattice.
    pub l2_residual: T,
    /// Coarse/fine RMS ratio under refinement (numerical method only; absent
    /// when the fine residual sits at rounding level).
    pub convergence_ratio: Option<T>,
    /// Threshold `max_residual` was compared against.
    pub tolerance: T,
    pub passed: bool,
}

/// Pass thresholds for both methods.
#[derive(Clone, Debug)]
pub struct Tolerances<T> {
    /// Absolute cap on analytic residuals.
    pub analytic: T,
    /// Safety factor on the ideal refinement gain of the numerical method.
    pub fd_slack: T,
    /// Below this, a numerical residual counts as exactly zero.
    pub fd_floor: T,
    /// Per-identity overrides of the analytic cap.
    pub overrides: Vec<(Identity, T)>,
}

impl<T: Real> Default for Tolerances<T> {
    fn default() -> Self {
        Self {
            analytic: lit(1e-10),
            fd_slack: lit(1.25),
            fd_floor: lit(1e-12),
            overrides: Vec::new(),
        }
    }
}

impl<T: Real> Tolerances<T> {
    fn analytic_for(&self, identity: Identity) -> T {
        self.overrides
            .iter()
            .find(|(id, _)| *id == identity)
            .map_or(self.analytic, |&(_, tol)| tol)
    }
}

/// Configuration of a residual run.
#[derive(Clone, Debug)]
pub struct SuiteConfig<T> {
    pub tolerances: Tolerances<T>,
    pub stencil_order: StencilOrder,
    /// Charge density σ on the right-hand side of the source equation.
    pub charge_density: T,
}

impl<T: Real> Default for SuiteConfig<T> {
    fn default() -> Self {
        Self {
            tolerances: Tolerances::default(),
            stencil_order: StencilOrder::Two,
            charge_density: T::zero(),
        }
    }
}

/// Combines per-group (max, rms, count) norms into overall (max, rms).
struct NormAccumulator<T> {
    max: T,
    sumsq: T,
    count: usize,
}

impl<T: Real> NormAccumulator<T> {
    fn new() -> Self {
        Self {
            max: T::zero(),
            sumsq: T::zero(),
            count: 0,
        }
    }

    fn add_slice(&mut self, values: &[T]) {
        let (max, rms) = max_and_rms(values);
        self.max = self.max.max(max);
        self.sumsq = self.sumsq + rms * rms * T::from_usize(values.len()).unwrap();
        self.count += values.len();
    }

    fn finish(self) -> (T, T) {
        let rms = if self.count == 0 {
            T::zero()
        } else {
            (self.sumsq / T::from_usize(self.count).unwrap()).sqrt()
        };
        (self.max, rms)
    }
}

/// One scalar residual expression: a sum of modes plus a constant offset.
struct ResidualGroup<T> {
    modes: Vec<ScalarMode<T>>,
    offset: T,
}

impl<T: Real> ResidualGroup<T> {
    fn of(modes: Vec<ScalarMode<T>>) -> Self {
        Self {
            modes,
            offset: T::zero(),
        }
    }
}

fn components<T: Real>(modes: &[VectorMode<T>], axis: usize) -> Vec<ScalarMode<T>> {
    modes.iter().map(|m| m.component(axis)).collect()
}

/// Micro-volume permittivity 1/(μ·|u|²): the value that makes the medium-form
/// circulation law equal the mechanical one divided by μ.
fn micro_permittivity<T: Real, M: FieldModel<T> + ?Sized>(model: &M) -> Result<T> {
    let u = model.mechanical_speed()?;
    Ok((model.constants().mu_perm * u * u).recip())
}

/// Closed-form residual expressions for one identity.
fn analytic_groups<T: Real, M: FieldModel<T> + ?Sized>(
    model: &M,
    config: &SuiteConfig<T>,
    identity: Identity,
) -> Result<Vec<ResidualGroup<T>>> {
    let wave_eq_scalar = |modes: Vec<ScalarMode<T>>| -> Result<Vec<ResidualGroup<T>>> {
        let u = model.mechanical_speed()?;
        let inv_u2 = (u * u).recip();
        let mut out = Vec::with_capacity(2 * modes.len());
        for m in &modes {
            out.push(m.laplacian());
            out.push(m.d2dt2().scaled(-inv_u2));
        }
        Ok(vec![ResidualGroup::of(out)])
    };

    match identity {
        Identity::WaveEqPsi => wave_eq_scalar(model.scalar_modes(ScalarChannel::Psi)),
        Identity::WaveEqRho => wave_eq_scalar(model.scalar_modes(ScalarChannel::Rho)),
        Identity::WaveEqP => {
            let u = model.mechanical_speed()?;
            let inv_u2 = (u * u).recip();
            let p = model.vector_modes(VectorChannel::Momentum);
            let groups = (0..3)
                .map(|axis| {
                    let mut out = Vec::with_capacity(2 * p.len());
                    for m in &components(&p, axis) {
                        out.push(m.laplacian());
                        out.push(m.d2dt2().scaled(-inv_u2));
                    }
                    ResidualGroup::of(out)
                })
                .collect();
            Ok(groups)
        }
        Identity::Continuity => {
            let rho = model.scalar_modes(ScalarChannel::Rho);
            let p = model.vector_modes(VectorChannel::Momentum);
            let mut out: Vec<ScalarMode<T>> = rho.iter().map(ScalarMode::ddt).collect();
            out.extend(p.iter().map(VectorMode::div));
            Ok(vec![ResidualGroup::of(out)])
        }
        Identity::Faraday => {
            let e = model.vector_modes(VectorChannel::Electric);
            let b = model.vector_modes(VectorChannel::MagneticClassical);
            let groups = (0..3)
                .map(|axis| {
                    let mut out: Vec<ScalarMode<T>> =
                        e.iter().map(|m| m.curl().component(axis)).collect();
                    out.extend(b.iter().map(|m| m.ddt().component(axis)));
                    ResidualGroup::of(out)
                })
                .collect();
            Ok(groups)
        }
        Identity::AmpereSubluminal | Identity::AmpereInhomogeneous => {
            let (e_scale, curl_scale) = if identity == Identity::AmpereSubluminal {
                let u = model.mechanical_speed()?;
                ((u * u).recip(), -T::one())
            } else {
                (
                    micro_permittivity(model)?,
                    -model.constants().mu_perm.recip(),
                )
            };
            let e = model.vector_modes(VectorChannel::Electric);
            let b = model.vector_modes(VectorChannel::MagneticClassical);
            let groups = (0..3)
                .map(|axis| {
                    let mut out: Vec<ScalarMode<T>> = e
                        .iter()
                        .map(|m| m.ddt().scaled(e_scale).component(axis))
                        .collect();
                    out.extend(b.iter().map(|m| m.curl().scaled(curl_scale).component(axis)));
                    ResidualGroup::of(out)
                })
                .collect();
            Ok(groups)
        }
        Identity::DivB => {
            let b = model.vector_modes(VectorChannel::MagneticClassical);
            Ok(vec![ResidualGroup::of(
                b.iter().map(VectorMode::div).collect(),
            )])
        }
        Identity::GaussD => {
            let eps = micro_permittivity(model)?;
            let e = model.vector_modes(VectorChannel::Electric);
            let modes = e.iter().map(|m| m.div().scaled(eps)).collect();
            Ok(vec![ResidualGroup {
                modes,
                offset: -config.charge_density,
            }])
        }
        Identity::LorentzCondition => {
            let u = model.mechanical_speed()?;
            let c0 = model.constants().c0;
            let a = model.vector_modes(VectorChannel::VectorPotential);
            let phi = model.scalar_modes(ScalarChannel::Phi);
            let build = |scale: T| {
                let mut out: Vec<ScalarMode<T>> = a.iter().map(VectorMode::div).collect();
                out.extend(phi.iter().map(|m| m.ddt().scaled(scale)));
                ResidualGroup::of(out)
            };
            let mut groups = vec![build(c0 / (u * u))];
            if model.kind() == ParticleKind::Photon {
                // For light both potentials also satisfy the classical form
                // of the gauge condition; fold it into the same check.
                groups.push(build(c0.recip()));
            }
            Ok(groups)
        }
    }
}

/// Sampled residual lattices for one identity at one lattice resolution.
fn fd_groups<T: Real, M: FieldModel<T> + ?Sized>(
    model: &M,
    geom: &GridGeometry<T>,
    config: &SuiteConfig<T>,
    identity: Identity,
) -> Result<Vec<Field4<T>>> {
    let cfg = StencilConfig::new(config.stencil_order, geom.h, geom.dt)?;
    let scalar = |ch| sample_scalar_modes(&model.scalar_modes(ch), geom);
    let vector = |ch| sample_vector_modes(&model.vector_modes(ch), geom);

    let wave_eq = |sampled: &Field4<T>| -> Result<Field4<T>> {
        let u = model.mechanical_speed()?;
        let inv_u2 = (u * u).recip();
        let lap = laplacian(sampled, &cfg)?;
        let tt = d2_dt2(sampled, &cfg)?;
        Ok(lap.zip_with(&tt, |a, b| a - inv_u2 * b))
    };

    match identity {
        Identity::WaveEqPsi => Ok(vec![wave_eq(&scalar(ScalarChannel::Psi))?]),
        Identity::WaveEqRho => Ok(vec![wave_eq(&scalar(ScalarChannel::Rho))?]),
        Identity::WaveEqP => {
            let p = vector(VectorChannel::Momentum);
            (0..3).map(|axis| wave_eq(p.component(axis))).collect()
        }
        Identity::Continuity => {
            let rho_t = d_dt(&scalar(ScalarChannel::Rho), &cfg)?;
            let p_div = div(&vector(VectorChannel::Momentum), &cfg)?;
            Ok(vec![rho_t.zip_with(&p_div, |a, b| a + b)])
        }
        Identity::Faraday => {
            let e_curl = curl(&vector(VectorChannel::Electric), &cfg)?;
            let b = vector(VectorChannel::MagneticClassical);
            (0..3)
                .map(|axis| {
                    let b_t = d_dt(b.component(axis), &cfg)?;
                    Ok(e_curl.component(axis).zip_with(&b_t, |a, b| a + b))
                })
                .collect()
        }
        Identity::AmpereSubluminal | Identity::AmpereInhomogeneous => {
            let (e_scale, curl_scale) = if identity == Identity::AmpereSubluminal {
                let u = model.mechanical_speed()?;
                ((u * u).recip(), T::one())
            } else {
                (micro_permittivity(model)?, model.constants().mu_perm.recip())
            };
            let b_curl = curl(&vector(VectorChannel::MagneticClassical), &cfg)?;
            let e = vector(VectorChannel::Electric);
            (0..3)
                .map(|axis| {
                    let e_t = d_dt(e.component(axis), &cfg)?;
                    Ok(e_t.zip_with(b_curl.component(axis), |a, b| {
                        e_scale * a - curl_scale * b
                    }))
                })
                .collect()
        }
        Identity::DivB => Ok(vec![div(&vector(VectorChannel::MagneticClassical), &cfg)?]),
        Identity::GaussD => {
            let eps = micro_permittivity(model)?;
            let sigma = config.charge_density;
            let e_div = div(&vector(VectorChannel::Electric), &cfg)?;
            Ok(vec![e_div.map(|v| eps * v - sigma)])
        }
        Identity::LorentzCondition => {
            let u = model.mechanical_speed()?;
            let c0 = model.constants().c0;
            let a_div = div(&vector(VectorChannel::VectorPotential), &cfg)?;
            let phi_t = d_dt(&scalar(ScalarChannel::Phi), &cfg)?;
            let mut groups = vec![a_div.zip_with(&phi_t, |a, b| a + c0 / (u * u) * b)];
            if model.kind() == ParticleKind::Photon {
                groups.push(a_div.zip_with(&phi_t, |a, b| a + b / c0));
            }
            Ok(groups)
        }
    }
}

fn norms_of_fd_groups<T: Real>(groups: &[Field4<T>]) -> (T, T) {
    let mut acc = NormAccumulator::new();
    for g in groups {
        acc.add_slice(g.as_slice());
    }
    acc.finish()
}

/// Checks one identity by one method.
pub fn check_identity<T: Real, M: FieldModel<T> + ?Sized>(
    model: &M,
    geom: &GridGeometry<T>,
    method: Method,
    config: &SuiteConfig<T>,
    identity: Identity,
) -> Result<ResidualReport<T>> {
    geom.validate()?;
    match method {
        Method::Analytic => {
            let groups = analytic_groups(model, config, identity)?;
            let mut acc = NormAccumulator::new();
            for g in &groups {
                let lattice = Field4::from_fn(geom.dims, |ix, iy, iz, it| {
                    let (x, t) = geom.point(ix, iy, iz, it);
                    g.modes
                        .iter()
                        .fold(g.offset, |sum, m| sum + m.value(x, t))
                });
                acc.add_slice(lattice.as_slice());
            }
            let (max, rms) = acc.finish();
            let tolerance = config.tolerances.analytic_for(identity);
            Ok(ResidualReport {
                identity,
                method,
                max_residual: max,
                l2_residual: rms,
                convergence_ratio: None,
                tolerance,
                passed: max <= tolerance,
            })
        }
        Method::FiniteDifference => {
            let coarse = fd_groups(model, geom, config, identity)?;
            let fine = fd_groups(model, &geom.refined(), config, identity)?;
            let (max_c, rms_c) = norms_of_fd_groups(&coarse);
            let (max_f, rms_f) = norms_of_fd_groups(&fine);
            let floor = config.tolerances.fd_floor;
            // Refinement divides the truncation error by 2^accuracy; allow
            // fd_slack times that ideal bound.
            let gain = lit::<T>(f64::from(1u32 << config.stencil_order.accuracy()));
            let tolerance = (config.tolerances.fd_slack * max_c / gain).max(floor);
            let convergence_ratio = if rms_f > floor {
                Some(rms_c / rms_f)
            } else {
                None
            };
            Ok(ResidualReport {
                identity,
                method,
                max_residual: max_f,
                l2_residual: rms_f,
                convergence_ratio,
                tolerance,
                passed: max_f <= tolerance,
            })
        }
    }
}

/// The three wave-equation rows (wave function, density, momentum).
pub fn check_wave_equation<T: Real, M: FieldModel<T> + ?Sized>(
    model: &M,
    geom: &GridGeometry<T>,
    method: Method,
    config: &SuiteConfig<T>,
) -> Result<Vec<ResidualReport<T>>> {
    [Identity::WaveEqPsi, Identity::WaveEqRho, Identity::WaveEqP]
        .into_iter()
        .map(|id| check_identity(model, geom, method, config, id))
        .collect()
}

/// Mass continuity.
pub fn check_continuity<T: Real, M: FieldModel<T> + ?Sized>(
    model: &M,
    geom: &GridGeometry<T>,
    method: Method,
    config: &SuiteConfig<T>,
) -> Result<ResidualReport<T>> {
    check_identity(model, geom, method, config, Identity::Continuity)
}

/// Induction law on the transversal pair.
pub fn check_faraday<T: Real, M: FieldModel<T> + ?Sized>(
    model: &M,
    geom: &GridGeometry<T>,
    method: Method,
    config: &SuiteConfig<T>,
) -> Result<ResidualReport<T>> {
    check_identity(model, geom, method, config, Identity::Faraday)
}

/// Circulation law at the mechanical speed.
pub fn check_ampere_subluminal<T: Real, M: FieldModel<T> + ?Sized>(
    model: &M,
    geom: &GridGeometry<T>,
    method: Method,
    config: &SuiteConfig<T>,
) -> Result<ResidualReport<T>> {
    check_identity(model, geom, method, config, Identity::AmpereSubluminal)
}

/// Circulation law in medium form.
pub fn check_ampere_inhomogeneous<T: Real, M: FieldModel<T> + ?Sized>(
    model: &M,
    geom: &GridGeometry<T>,
    method: Method,
    config: &SuiteConfig<T>,
) -> Result<ResidualReport<T>> {
    check_identity(model, geom, method, config, Identity::AmpereInhomogeneous)
}

/// The two source rows: solenoidality and the displacement source equation.
pub fn check_sources<T: Real, M: FieldModel<T> + ?Sized>(
    model: &M,
    geom: &GridGeometry<T>,
    method: Method,
    config: &SuiteConfig<T>,
) -> Result<Vec<ResidualReport<T>>> {
    [Identity::DivB, Identity::GaussD]
        .into_iter()
        .map(|id| check_identity(model, geom, method, config, id))
        .collect()
}

/// Gauge condition on the potentials.
pub fn check_lorentz_condition<T: Real, M: FieldModel<T> + ?Sized>(
    model: &M,
    geom: &GridGeometry<T>,
    method: Method,
    config: &SuiteConfig<T>,
) -> Result<ResidualReport<T>> {
    check_identity(model, geom, method, config, Identity::LorentzCondition)
}

/// Runs every identity by both methods; rows come back sorted by
/// (identity, method) and are bit-identical across reruns.
pub fn run_suite<T: Real, M: FieldModel<T> + ?Sized>(
    model: &M,
    geom: &GridGeometry<T>,
    config: &SuiteConfig<T>,
) -> Result<Vec<ResidualReport<T>>> {
    let jobs: Vec<(Identity, Method)> = Identity::ALL
        .into_iter()
        .flat_map(|id| [(id, Method::Analytic), (id, Method::FiniteDifference)])
        .collect();
    let run = |&(id, method): &(Identity, Method)| check_identity(model, geom, method, config, id);
    let mut reports: Vec<ResidualReport<T>> = if parallel_enabled() {
        jobs.par_iter().map(run).collect::<Result<_>>()?
    } else {
        jobs.iter().map(run).collect::<Result<_>>()?
    };
    reports.sort_by_key(|r| (r.identity, r.method));
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::Constants;
    use crate::model::{make_electron, make_photon};
    use crate::vec3::Vec3;
    use approx::assert_relative_eq;

    fn suite_geom(spec: &crate::model::ParticleSpec<f64>) -> GridGeometry<f64> {
        GridGeometry::for_spec(spec, 16, [6, 6, 6, 6]).unwrap()
    }

    #[test]
    fn analytic_residuals_vanish_for_valid_specs() {
        let c = Constants::natural();
        let config = SuiteConfig::default();
        for spec in [
            make_photon(&c, 1.0, Vec3::new(1.0, 2.0, -0.5), 1.3).unwrap(),
            make_electron(&c, 2.0, Vec3::new(0.3, -0.1, 0.2), 1.0).unwrap(),
        ] {
            let geom = suite_geom(&spec);
            for id in Identity::ALL {
                let r = check_identity(&spec, &geom, Method::Analytic, &config, id).unwrap();
                assert!(
                    r.passed && r.max_residual <= 1e-10,
                    "{}: max {}",
                    id.name(),
                    r.max_residual
                );
            }
        }
    }

    #[test]
    fn detuning_breaks_exactly_the_dispersion_bound_identities() {
        let c = Constants::natural();
        let spec = make_electron(&c, 2.0, Vec3::new(0.5, 0.0, 0.0), 1.0)
            .unwrap()
            .detuned_omega(1.1);
        let geom = suite_geom(&spec);
        let config = SuiteConfig::default();
        let fails = [
            Identity::WaveEqPsi,
            Identity::WaveEqRho,
            Identity::WaveEqP,
            Identity::Continuity,
            Identity::AmpereSubluminal,
            Identity::AmpereInhomogeneous,
            Identity::LorentzCondition,
        ];
        let passes = [Identity::Faraday, Identity::DivB, Identity::GaussD];
        for id in fails {
            let r = check_identity(&spec, &geom, Method::Analytic, &config, id).unwrap();
            assert!(!r.passed, "{} unexpectedly passed detuned", id.name());
        }
        for id in passes {
            let r = check_identity(&spec, &geom, Method::Analytic, &config, id).unwrap();
            assert!(r.passed, "{} unexpectedly failed detuned", id.name());
        }
        // The continuity residual is ρ₀·sin(2θ)·(k·u − ω′), so its maximum is
        // ρ₀·|ω − ω′| = 0.1·ρ₀·ω.
        let r = check_continuity(&spec, &geom, Method::Analytic, &config).unwrap();
        let omega_valid = spec.omega / 1.1;
        assert_relative_eq!(
            r.max_residual,
            0.1 * spec.rho0 * omega_valid,
            max_relative = 1e-3
        );
    }

    #[test]
    fn fd_wave_equation_converges_at_second_order() {
        // Oblique direction: an axis-aligned wave sampled at period-matched
        // spacings is an exact discrete solution, leaving no truncation error
        // to measure a ratio on.
        let c = Constants::natural();
        let spec = make_photon(&c, 1.0, Vec3::new(1.0, 2.0, -0.5), 1.0).unwrap();
        let geom = GridGeometry::for_spec(&spec, 16, [9, 9, 9, 9]).unwrap();
        let config = SuiteConfig::default();
        let r =
            check_identity(&spec, &geom, Method::FiniteDifference, &config, Identity::WaveEqRho)
                .unwrap();
        assert!(r.passed, "max {} tol {}", r.max_residual, r.tolerance);
        let ratio = r.convergence_ratio.expect("ratio");
        assert!((3.4..4.7).contains(&ratio), "ratio {ratio}");
    }

    #[test]
    fn fd_solenoidality_sits_at_rounding_level_for_axis_aligned_waves() {
        let c = Constants::natural();
        let spec = make_photon(&c, 1.0, Vec3::unit_x(), 1.0).unwrap();
        let geom = GridGeometry::for_spec(&spec, 16, [7, 7, 7, 7]).unwrap();
        let config = SuiteConfig::default();
        let r = check_identity(&spec, &geom, Method::FiniteDifference, &config, Identity::DivB)
            .unwrap();
        assert!(r.passed);
        assert!(r.max_residual < 1e-12);
        assert!(r.convergence_ratio.is_none());
    }

    #[test]
    fn nonzero_charge_density_shows_up_as_a_source_mismatch() {
        let c = Constants::natural();
        let spec = make_photon(&c, 1.0, Vec3::unit_x(), 1.0).unwrap();
        let geom = suite_geom(&spec);
        let config = SuiteConfig {
            charge_density: 0.5,
            ..SuiteConfig::default()
        };
        let r = check_identity(&spec, &geom, Method::Analytic, &config, Identity::GaussD).unwrap();
        assert!(!r.passed);
        assert_relative_eq!(r.max_residual, 0.5, max_relative = 1e-9);
    }

    #[test]
    fn suite_is_ordered_and_deterministic() {
        let c = Constants::natural();
        let spec = make_electron(&c, 1.5, Vec3::new(0.4, 0.1, 0.0), 2.0).unwrap();
        let geom = suite_geom(&spec);
        let config = SuiteConfig::default();
        let a = run_suite(&spec, &geom, &config).unwrap();
        let b = run_suite(&spec, &geom, &config).unwrap();
        assert_eq!(a.len(), 20);
        for (id, chunk) in Identity::ALL.iter().zip(a.chunks(2)) {
            assert_eq!(chunk[0].identity, *id);
            assert_eq!(chunk[0].method, Method::Analytic);
            assert_eq!(chunk[1].method, Method::FiniteDifference);
        }
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.max_residual.to_bits(), y.max_residual.to_bits());
            assert_eq!(x.l2_residual.to_bits(), y.l2_residual.to_bits());
        }
        assert!(a.iter().all(|r| r.passed));
    }

    #[test]
    fn packet_of_copropagating_waves_passes_the_suite() {
        let c = Constants::natural();
        let a = make_photon(&c, 1.0, Vec3::unit_x(), 1.0).unwrap();
        let b = make_photon(&c, 0.5, Vec3::unit_x(), 2.0).unwrap();
        let packet = crate::model::WavePacket::new(vec![a, b]).unwrap();
        let geom = GridGeometry::for_spec(&a, 16, [6, 6, 6, 6]).unwrap();
        let config = SuiteConfig::default();
        for id in [Identity::WaveEqRho, Identity::Continuity, Identity::Faraday] {
            let r = check_identity(&packet, &geom, Method::Analytic, &config, id).unwrap();
            assert!(r.passed, "{} failed for packet", id.name());
        }
    }
}
