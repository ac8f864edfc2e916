//! Energy bookkeeping, the frequency relation, and the uncertainty bound.

use crate::constants::Constants;
use crate::error::{Error, Result};
use crate::model::{ParticleKind, ParticleSpec};
use crate::real::{lit, Real};
use crate::util::pairwise_sum;
use crate::vec3::Vec3;

/// Minimum quadrature samples per period for the energy integrals.
pub const MIN_QUADRATURE_SAMPLES: u32 = 64;

/// Period-averaged energy content of one particle volume.
#[derive(Clone, Copy, Debug)]
pub struct EnergyBreakdown<T> {
    /// Mean mass density over one period.
    pub rho_mean: T,
    /// Mean intrinsic potential over one period.
    pub phi_mean: T,
    /// Kinetic part ½·ρ̄·|u|²·V.
    pub w_kinetic: T,
    /// Potential part ½·φ̄·V.
    pub w_potential: T,
    pub w_total: T,
    /// Effective inertial mass ρ̄·V.
    pub m_eff: T,
    /// Frequency the total energy corresponds to, W/ħ.
    pub omega_check: T,
    /// W/(ħ·ω); equals one exactly when V is the mass-matched volume.
    pub planck_ratio: T,
}

/// Integrates the densities over one period and splits the energy.
///
/// The average runs along the propagation direction with the midpoint rule,
/// which is exact for these integrands at any resolution above the aliasing
/// limit; the floor simply keeps callers honest about it being a quadrature.
pub fn energy_breakdown<T: Real>(
    spec: &ParticleSpec<T>,
    resolution: u32,
) -> Result<EnergyBreakdown<T>> {
    if resolution < MIN_QUADRATURE_SAMPLES {
        return Err(Error::QuadratureTooCoarse {
            samples: resolution,
            min: MIN_QUADRATURE_SAMPLES,
        });
    }
    let n = T::from_u32(resolution).unwrap();
    let step = spec.wavelength() / n;
    let half = lit::<T>(0.5);
    let mut rho_samples = Vec::with_capacity(resolution as usize);
    let mut phi_samples = Vec::with_capacity(resolution as usize);
    for j in 0..resolution {
        let s = step * (T::from_u32(j).unwrap() + half);
        let x = spec.e_k * s;
        rho_samples.push(spec.rho(x, T::zero()));
        phi_samples.push(spec.potential(x, T::zero()));
    }
    let rho_mean = pairwise_sum(&rho_samples) / n;
    let phi_mean = pairwise_sum(&phi_samples) / n;
    let w_kinetic = half * rho_mean * spec.u.norm_squared() * spec.v_p;
    let w_potential = half * phi_mean * spec.v_p;
    let w_total = w_kinetic + w_potential;
    let hbar = spec.constants.hbar;
    Ok(EnergyBreakdown {
        rho_mean,
        phi_mean,
        w_kinetic,
        w_potential,
        w_total,
        m_eff: rho_mean * spec.v_p,
        omega_check: w_total / hbar,
        planck_ratio: w_total / (hbar * spec.omega),
    })
}

/// Residual of the kinetic-operator eigenvalue against half the frequency
/// quantum: |ħ²|k|²/(2m) − ħω/2|·ψ₀.
pub fn kinetic_operator_check<T: Real>(spec: &ParticleSpec<T>) -> Result<T> {
    if spec.kind != ParticleKind::Electron {
        return Err(Error::KindMismatch {
            expected: "electron",
        });
    }
    let c = &spec.constants;
    let two = T::one() + T::one();
    let eigen = c.hbar * c.hbar * spec.k.norm_squared() / (two * c.m);
    let half_quantum = c.hbar * spec.omega / two;
    Ok((eigen - half_quantum).abs() * spec.psi0)
}

/// The intrinsic position–momentum uncertainty product of a massive wave.
#[derive(Clone, Copy, Debug)]
pub struct UncertaintyReport<T> {
    /// Spread of the intrinsic potential energy, m·|u|².
    pub delta_v: T,
    /// Wave-number spread the energy spread maps to.
    pub delta_k: T,
    /// Half the density period, π/k.
    pub delta_x: T,
    /// Δx·Δp.
    pub product_xp: T,
    /// The bound the product saturates: h/2.
    pub bound: T,
    /// The conventional lower bound ħ/2, for comparison.
    pub bound_canonical: T,
}

/// Computes Δx·Δp for a wave of speed `u`; the product lands exactly on h/2.
pub fn uncertainty_product<T: Real>(
    constants: &Constants<T>,
    u: T,
) -> Result<UncertaintyReport<T>> {
    if u == T::zero() {
        return Err(Error::ZeroVelocity);
    }
    let speed = u.abs();
    let m = constants.m;
    let hbar = constants.hbar;
    let k = m * speed / hbar;
    let delta_v = m * speed * speed;
    let delta_k = m * delta_v / (hbar * hbar * k);
    let delta_x = T::PI() / k;
    let product_xp = delta_x * (hbar * delta_k);
    let two = T::one() + T::one();
    Ok(UncertaintyReport {
        delta_v,
        delta_k,
        delta_x,
        product_xp,
        bound: constants.h / two,
        bound_canonical: hbar / two,
    })
}

/// Whether a probe could resolve structure inside one density period.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResolutionVerdict {
    /// The required window is narrower than the uncertainty bound allows.
    ViolatesUncertaintyWindow,
    /// The required window fits inside the uncertainty bound.
    WithinWindow,
}

/// Resolution requirements for probing internal structure at one wavelength.
#[derive(Clone, Copy, Debug)]
pub struct AspectReport<T> {
    pub wavelength: T,
    /// Spatial window needed to see intra-period structure: λ/2.
    pub required_dx: T,
    /// Temporal window needed: half a period.
    pub required_dt: T,
    /// Smallest window the uncertainty product permits: λ/2.
    pub window_dx: T,
    /// Smallest temporal window permitted: half a period.
    pub window_dt: T,
    pub verdict: ResolutionVerdict,
}

/// Compares the window needed to resolve intra-period structure against the
/// smallest window the uncertainty product permits. The two coincide, so the
/// verdict is always that the measurement is excluded.
pub fn aspect_resolution_check<T: Real>(
    constants: &Constants<T>,
    wavelength: T,
) -> Result<AspectReport<T>> {
    if !(wavelength.is_finite() && wavelength > T::zero()) {
        return Err(Error::InvalidWavelength(crate::real::approx_f64(wavelength)));
    }
    let two = T::one() + T::one();
    let required_dx = wavelength / two;
    let required_dt = wavelength / constants.c0 / two;
    let window_dx = wavelength / two;
    let window_dt = wavelength / constants.c0 / two;
    let verdict = if window_dx < required_dx && window_dt < required_dt {
        ResolutionVerdict::WithinWindow
    } else {
        ResolutionVerdict::ViolatesUncertaintyWindow
    };
    Ok(AspectReport {
        wavelength,
        required_dx,
        required_dt,
        window_dx,
        window_dt,
        verdict,
    })
}

/// Amplitude-level energy relations of a light wave.
#[derive(Clone, Copy, Debug)]
pub struct PhotonEnergyReport<T> {
    /// Potential amplitude φ⁰ = ρ⁰·c₀².
    pub phi0: T,
    /// Momentum amplitude p⁰ = ρ⁰·c₀.
    pub p0: T,
    /// |p⁰·|k| − (ω/c₀²)·φ⁰|, the energy–momentum relation residual.
    pub energy_momentum_residual: T,
    /// |φ⁰ − ρ⁰·c₀²|, the mass–energy relation residual.
    pub potential_residual: T,
}

/// Verifies both amplitude-level energy relations of a light wave.
pub fn photon_energy_check<T: Real>(spec: &ParticleSpec<T>) -> Result<PhotonEnergyReport<T>> {
    if spec.kind != ParticleKind::Photon {
        return Err(Error::KindMismatch { expected: "photon" });
    }
    let c0 = spec.constants.c0;
    let phi0 = spec.phi_amplitude();
    let p0 = spec.momentum_amplitude();
    let energy_momentum_residual = (p0 * spec.k.norm() - spec.omega / (c0 * c0) * phi0).abs();
    let potential_residual = (phi0 - spec.rho0 * c0 * c0).abs();
    Ok(PhotonEnergyReport {
        phi0,
        p0,
        energy_momentum_residual,
        potential_residual,
    })
}

/// Position offset that shifts the phase by `periods` whole periods.
pub fn whole_period_offset<T: Real>(spec: &ParticleSpec<T>, periods: u32) -> Vec3<T> {
    spec.e_k * (spec.wavelength() * T::from_u32(periods).unwrap())
}
