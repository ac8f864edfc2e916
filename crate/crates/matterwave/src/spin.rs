//! Intrinsic angular momentum and its magnetic-energy bookkeeping.

use crate::constants::Constants;
use crate::error::{Error, Result};
use crate::model::{ParticleKind, ParticleSpec};
use crate::real::Real;
use crate::vec3::Vec3;

/// Spin magnitude, g-factor, and the magnetic-energy chain for one particle.
#[derive(Clone, Copy, Debug)]
pub struct SpinReport<T> {
    pub kind: ParticleKind,
    /// Spin magnitude: ħ for light, ħ/2 for an electron.
    pub s: T,
    /// Dimensionless g-factor: 1 for light, 2 for an electron.
    pub g_factor: T,
    /// g·s — equal to ħ for both kinds.
    pub product_gs: T,
    /// Field strength that makes the magnetic energy a whole/half quantum.
    pub b_used: T,
    /// Conversion applied to express that field in dynamical units.
    pub b_unit_scale: T,
    /// Magnetic energy (g·e/(2m·c₀))·s·B.
    pub energy: T,
    /// The quantum that energy must reproduce: ħω or ħω/2.
    pub energy_expected: T,
    /// Spin direction; the rotation axis when derived from a model.
    pub direction: Vec3<T>,
}

fn spin_report<T: Real>(
    kind: ParticleKind,
    constants: &Constants<T>,
    omega: T,
    direction: Vec3<T>,
) -> Result<SpinReport<T>> {
    if !(omega.is_finite() && omega > T::zero()) {
        return Err(Error::InvalidFrequency(crate::real::approx_f64(omega)));
    }
    let two = T::one() + T::one();
    let hbar = constants.hbar;
    let (s, g_factor, factor, energy_expected) = match kind {
        ParticleKind::Photon => (hbar, T::one(), two, hbar * omega),
        ParticleKind::Electron => (hbar / two, two, T::one(), hbar * omega / two),
    };
    // The field that stores one energy quantum in the spin moment, expressed
    // in the same dynamical units as the transversal fields (hence the c₀).
    let b_unit_scale = constants.c0;
    let b_used = b_unit_scale * (factor * constants.m / constants.e) * omega;
    let gyromagnetic = g_factor * constants.e / (two * constants.m * constants.c0);
    let energy = gyromagnetic * s * b_used;
    Ok(SpinReport {
        kind,
        s,
        g_factor,
        product_gs: g_factor * s,
        b_used,
        b_unit_scale,
        energy,
        energy_expected,
        direction,
    })
}

/// Spin report for a light wave: s = ħ, g = 1.
pub fn spin_photon<T: Real>(constants: &Constants<T>, omega: T) -> Result<SpinReport<T>> {
    spin_report(ParticleKind::Photon, constants, omega, Vec3::unit_z())
}

/// Spin report for an electron wave: s = ħ/2, g = 2.
pub fn spin_electron<T: Real>(constants: &Constants<T>, omega: T) -> Result<SpinReport<T>> {
    spin_report(ParticleKind::Electron, constants, omega, Vec3::unit_z())
}

/// Spin report aligned with a model's transversal rotation axis.
pub fn spin_for_spec<T: Real>(spec: &ParticleSpec<T>) -> Result<SpinReport<T>> {
    spin_report(
        spec.kind,
        &spec.constants,
        spec.omega,
        spec.rotation_axis(),
    )
}

/// Momentum-density fields whose curl has a closed form.
#[derive(Clone, Copy, Debug)]
pub enum MomentumField<T> {
    /// The longitudinal momentum density of a plane wave (curl-free).
    PlaneWave(ParticleSpec<T>),
    /// A rigidly rotating density, p = ρ̄·(ω⃗ × x).
    RigidRotor { rho_bar: T, omega: Vec3<T> },
}

impl<T: Real> MomentumField<T> {
    /// Momentum density at a point.
    pub fn value(&self, x: Vec3<T>, t: T) -> Vec3<T> {
        match self {
            MomentumField::PlaneWave(spec) => spec.momentum(x, t),
            MomentumField::RigidRotor { rho_bar, omega } => omega.cross(x) * *rho_bar,
        }
    }

    /// Closed-form curl of the momentum density.
    pub fn curl(&self, x: Vec3<T>, t: T) -> Vec3<T> {
        match self {
            MomentumField::PlaneWave(spec) => {
                // ∇×(ρ₀·u·sin²θ) = (k × u)·ρ₀·sin 2θ; k ∥ u, so this is the
                // rounding noise of the cross product.
                let theta = spec.phase(x, t);
                spec.k.cross(spec.u) * (spec.rho0 * (theta + theta).sin())
            }
            MomentumField::RigidRotor { rho_bar, omega } => {
                let two = T::one() + T::one();
                *omega * (two * *rho_bar)
            }
        }
    }
}

/// Magnetic field recovered from the curl of a momentum density,
/// B = −∇×p / (factor·σ̄).
#[derive(Clone, Copy, Debug)]
pub struct CurlMagneticField<T> {
    field: MomentumField<T>,
    scale: T,
}

impl<T: Real> CurlMagneticField<T> {
    pub fn eval(&self, x: Vec3<T>, t: T) -> Vec3<T> {
        self.field.curl(x, t) * self.scale
    }
}

/// Builds the magnetic field −∇×p/(factor·σ̄); `factor` is 1 for a half
/// quantum and 2 for a whole quantum.
pub fn magnetic_field_from_curl<T: Real>(
    field: &MomentumField<T>,
    factor: u32,
    constants: &Constants<T>,
) -> Result<CurlMagneticField<T>> {
    if !(factor == 1 || factor == 2) {
        return Err(Error::InvalidFactor(factor));
    }
    let scale = -(T::from_u32(factor).unwrap() * constants.sigma_bar).recip();
    Ok(CurlMagneticField {
        field: *field,
        scale,
    })
}
