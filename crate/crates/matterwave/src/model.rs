//! Plane-wave particle models: single electron/photon specs and wave packets.

use crate::constants::Constants;
use crate::error::{Error, Result};
use crate::real::{approx_f64, lit, Real};
use crate::vec3::Vec3;

/// The two supported particle kinds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParticleKind {
    Electron,
    Photon,
}

impl ParticleKind {
    pub fn name(self) -> &'static str {
        match self {
            ParticleKind::Electron => "electron",
            ParticleKind::Photon => "photon",
        }
    }
}

/// One plane-wave particle: amplitudes, wave vector, frequency and frame data.
///
/// The wave function is ψ = ψ₀·sin(k·x − ωt) and the mass density
/// ρ = ρ₀·sin²(k·x − ωt) with ρ₀ = C·ψ₀². Valid specs satisfy ω = |k|·|u|.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ParticleSpec<T> {
    pub kind: ParticleKind,
    pub constants: Constants<T>,
    /// Density amplitude ρ₀.
    pub rho0: T,
    /// Mechanical velocity; photons move at the limit speed along `e_k`.
    pub u: Vec3<T>,
    /// Wave vector.
    pub k: Vec3<T>,
    /// Angular frequency.
    pub omega: T,
    /// Propagation direction (unit).
    pub e_k: Vec3<T>,
    /// Transversal polarization direction (unit, orthogonal to `e_k`).
    pub e_t: Vec3<T>,
    /// Particle volume used by energy integrals.
    pub v_p: T,
    /// Wave-function amplitude, ψ₀ = sqrt(ρ₀ / C).
    pub psi0: T,
    /// Density normalization constant C in ρ₀ = C·ψ₀².
    pub c_amp: T,
}

/// First standard basis vector not parallel to `e_k`, Gram-Schmidt projected
/// onto the plane orthogonal to `e_k` and normalized.
fn transversal_direction<T: Real>(e_k: Vec3<T>) -> Vec3<T> {
    let near_one = T::one() - lit::<T>(1e-12);
    let candidates = [Vec3::unit_x(), Vec3::unit_y(), Vec3::unit_z()];
    for c in candidates {
        if c.dot(e_k).abs() < near_one {
            let proj = c - e_k * c.dot(e_k);
            return proj.normalized().expect("non-parallel candidate projects to non-zero");
        }
    }
    unreachable!("a unit vector cannot be parallel to all three axes");
}

fn check_density<T: Real>(rho0: T) -> Result<()> {
    if rho0.is_finite() && rho0 > T::zero() {
        Ok(())
    } else {
        Err(Error::InvalidDensity(approx_f64(rho0)))
    }
}

/// Builds an electron spec from its mechanical velocity.
///
/// The wave number follows |k| = m·|u|/ħ and the frequency ω = m·|u|²/ħ, so
/// the phase speed ω/|k| equals the mechanical speed |u|.
pub fn make_electron<T: Real>(
    constants: &Constants<T>,
    rho0: T,
    u: Vec3<T>,
    v_p: T,
) -> Result<ParticleSpec<T>> {
    check_density(rho0)?;
    if !(v_p.is_finite() && v_p > T::zero()) {
        return Err(Error::InvalidVolume(approx_f64(v_p)));
    }
    let speed = u.norm();
    if speed == T::zero() {
        return Err(Error::ZeroVelocity);
    }
    if !speed.is_finite() || speed >= constants.c0 {
        return Err(Error::SuperluminalElectron {
            speed: approx_f64(speed),
            c0: approx_f64(constants.c0),
        });
    }
    let e_k = u.normalized().expect("speed checked non-zero");
    let k_mag = constants.m * speed / constants.hbar;
    let omega = constants.m * speed * speed / constants.hbar;
    Ok(ParticleSpec {
        kind: ParticleKind::Electron,
        constants: *constants,
        rho0,
        u,
        k: e_k * k_mag,
        omega,
        e_k,
        e_t: transversal_direction(e_k),
        v_p,
        psi0: rho0.sqrt(),
        c_amp: T::one(),
    })
}

/// Builds a photon spec moving at the limit speed along `e_k`.
///
/// |k| = ω/c₀; the particle volume defaults to one cubic wavelength.
pub fn make_photon<T: Real>(
    constants: &Constants<T>,
    rho0: T,
    e_k: Vec3<T>,
    omega: T,
) -> Result<ParticleSpec<T>> {
    check_density(rho0)?;
    if !(omega.is_finite() && omega > T::zero()) {
        return Err(Error::InvalidFrequency(approx_f64(omega)));
    }
    let e_k = e_k.normalized().ok_or(Error::InvalidDirection)?;
    let k_mag = omega / constants.c0;
    let wavelength = (T::PI() + T::PI()) / k_mag;
    Ok(ParticleSpec {
        kind: ParticleKind::Photon,
        constants: *constants,
        rho0,
        u: e_k * constants.c0,
        k: e_k * k_mag,
        omega,
        e_k,
        e_t: transversal_direction(e_k),
        v_p: wavelength * wavelength * wavelength,
        psi0: rho0.sqrt(),
        c_amp: T::one(),
    })
}

impl<T: Real> ParticleSpec<T> {
    /// Mechanical speed |u|.
    #[inline]
    pub fn speed(&self) -> T {
        self.u.norm()
    }

    /// Phase speed ω/|k|; equals |u| for valid (undetuned) specs.
    #[inline]
    pub fn c_phase(&self) -> T {
        self.omega / self.k.norm()
    }

    /// Wavelength 2π/|k|.
    #[inline]
    pub fn wavelength(&self) -> T {
        (T::PI() + T::PI()) / self.k.norm()
    }

    /// Oscillation period 2π/ω.
    #[inline]
    pub fn period(&self) -> T {
        (T::PI() + T::PI()) / self.omega
    }

    /// Intrinsic potential amplitude φ⁰ = ρ₀·|u|².
    #[inline]
    pub fn phi_amplitude(&self) -> T {
        self.rho0 * self.u.norm_squared()
    }

    /// Longitudinal momentum amplitude p⁰ = ρ₀·|u|.
    #[inline]
    pub fn momentum_amplitude(&self) -> T {
        self.rho0 * self.speed()
    }

    /// Rotation axis of the transversal polarization, e_k × e_t.
    #[inline]
    pub fn rotation_axis(&self) -> Vec3<T> {
        self.e_k.cross(self.e_t)
    }

    /// Replaces ψ₀/C with a different normalization keeping ρ₀ = C·ψ₀².
    pub fn with_amplitude_constant(mut self, c_amp: T) -> Result<Self> {
        if !(c_amp.is_finite() && c_amp > T::zero()) {
            return Err(Error::InvalidInput {
                name: "c_amp",
                value: approx_f64(c_amp),
            });
        }
        self.c_amp = c_amp;
        self.psi0 = (self.rho0 / c_amp).sqrt();
        Ok(self)
    }

    /// Replaces the particle volume.
    pub fn with_volume(mut self, v_p: T) -> Result<Self> {
        if !(v_p.is_finite() && v_p > T::zero()) {
            return Err(Error::InvalidVolume(approx_f64(v_p)));
        }
        self.v_p = v_p;
        Ok(self)
    }

    /// Verification helper: scales ω by `factor`, breaking ω = |k|·|u| on purpose.
    #[must_use]
    pub fn detuned_omega(mut self, factor: T) -> Self {
        self.omega = self.omega * factor;
        self
    }

    /// Verification helper: replaces ω outright, breaking the dispersion relation.
    #[must_use]
    pub fn with_omega(mut self, omega: T) -> Self {
        self.omega = omega;
        self
    }

    /// Verification helper: scales |k| by `factor`, breaking ω = |k|·|u| on purpose.
    #[must_use]
    pub fn detuned_wave_number(mut self, factor: T) -> Self {
        self.k = self.k * factor;
        self
    }
}

/// Volume for which the integrated mean density equals the inertial mass,
/// V = 2m/ρ₀ (the mean of ρ₀·sin² is ρ₀/2).
#[inline]
pub fn mass_matched_volume<T: Real>(constants: &Constants<T>, rho0: T) -> T {
    (T::one() + T::one()) * constants.m / rho0
}

/// Superposition of plane-wave components sharing one particle kind.
#[derive(Clone, Debug)]
pub struct WavePacket<T> {
    components: Vec<ParticleSpec<T>>,
}

impl<T: Real> WavePacket<T> {
    /// Validates that the components agree on kind and constants.
    pub fn new(components: Vec<ParticleSpec<T>>) -> Result<Self> {
        let first = components.first().ok_or(Error::EmptyPacket)?;
        if components.iter().any(|c| c.kind != first.kind) {
            return Err(Error::MixedPacketKinds);
        }
        if components.iter().any(|c| c.constants != first.constants) {
            return Err(Error::MixedPacketKinds);
        }
        Ok(Self { components })
    }

    #[inline]
    pub fn components(&self) -> &[ParticleSpec<T>] {
        &self.components
    }

    #[inline]
    pub fn kind(&self) -> ParticleKind {
        self.components[0].kind
    }

    #[inline]
    pub fn constants(&self) -> &Constants<T> {
        &self.components[0].constants
    }

    /// Longitudinal momentum amplitudes p_i⁰ = ρ_i⁰·|u_i| per component.
    pub fn momentum_amplitudes(&self) -> Vec<T> {
        self.components.iter().map(|c| c.momentum_amplitude()).collect()
    }

    /// Intrinsic potential amplitudes φ_i⁰ = ρ_i⁰·|u_i|² per component.
    pub fn phi_amplitudes(&self) -> Vec<T> {
        self.components.iter().map(|c| c.phi_amplitude()).collect()
    }

    /// Per-component residuals of p_i⁰·|k_i| − (ω_i/c₀²)·φ_i⁰.
    ///
    /// Zero for photons, where φ_i⁰ = ρ_i⁰·c₀² ties energy to frequency.
    pub fn component_energy_residuals(&self) -> Vec<T> {
        self.components
            .iter()
            .map(|c| {
                let c0 = c.constants.c0;
                c.momentum_amplitude() * c.k.norm() - c.omega / (c0 * c0) * c.phi_amplitude()
            })
            .collect()
    }

    /// The shared mechanical speed, or an error when components disagree.
    pub fn common_speed(&self) -> Result<T> {
        let s0 = self.components[0].speed();
        let tol = lit::<T>(1e-12) * s0.max(T::one());
        if self.components.iter().any(|c| (c.speed() - s0).abs() > tol) {
            return Err(Error::PacketSpeedMismatch);
        }
        Ok(s0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::{make_constants, ConstantsOverrides, UnitSystem};
    use approx::assert_relative_eq;

    fn natural() -> Constants<f64> {
        Constants::natural()
    }

    #[test]
    fn electron_wave_data_follows_its_velocity() {
        // c0 raised so a unit-speed electron stays subluminal.
        let c = make_constants::<f64>(
            UnitSystem::Natural,
            ConstantsOverrides {
                c0: Some(10.0),
                ..Default::default()
            },
        )
        .unwrap();
        let s = make_electron(&c, 2.0, Vec3::new(1.0, 0.0, 0.0), 1.0).unwrap();
        assert_relative_eq!(s.k.norm(), 1.0, max_relative = 1e-15);
        assert_relative_eq!(s.omega, 1.0, max_relative = 1e-15);
        assert_relative_eq!(s.c_phase(), 1.0, max_relative = 1e-15);
        assert_relative_eq!(s.psi0, 2.0_f64.sqrt(), max_relative = 1e-15);
    }

    #[test]
    fn electron_rejects_superluminal_and_zero_velocity() {
        let c = natural();
        let sup = make_electron(&c, 1.0, Vec3::new(1.5, 0.0, 0.0), 1.0);
        assert!(matches!(sup, Err(Error::SuperluminalElectron { .. })));
        let still = make_electron(&c, 1.0, Vec3::zero(), 1.0);
        assert!(matches!(still, Err(Error::ZeroVelocity)));
        // The limit speed itself is rejected too.
        let at_c = make_electron(&c, 1.0, Vec3::new(1.0, 0.0, 0.0), 1.0);
        assert!(matches!(at_c, Err(Error::SuperluminalElectron { .. })));
    }

    #[test]
    fn photon_ties_wave_number_and_potential_to_frequency() {
        let c = natural();
        let p = make_photon(&c, 1.0, Vec3::unit_x(), 1.0).unwrap();
        assert_relative_eq!(p.k.norm(), 1.0, max_relative = 1e-15);
        assert_relative_eq!(p.phi_amplitude(), 1.0, max_relative = 1e-15);

        let p = make_photon(&c, 3.0, Vec3::unit_x(), 2.0).unwrap();
        assert_relative_eq!(p.k.norm(), 2.0, max_relative = 1e-15);
        assert_relative_eq!(p.phi_amplitude(), 3.0, max_relative = 1e-15);
        assert_relative_eq!(p.speed(), c.c0, max_relative = 1e-15);
    }

    #[test]
    fn photon_rejects_bad_inputs() {
        let c = natural();
        assert!(matches!(
            make_photon(&c, 1.0, Vec3::unit_x(), 0.0),
            Err(Error::InvalidFrequency(_))
        ));
        assert!(matches!(
            make_photon(&c, 0.0, Vec3::unit_x(), 1.0),
            Err(Error::InvalidDensity(_))
        ));
        assert!(matches!(
            make_photon(&c, 1.0, Vec3::zero(), 1.0),
            Err(Error::InvalidDirection)
        ));
    }

    #[test]
    fn transversal_direction_is_orthonormal_and_deterministic() {
        let c = natural();
        for dir in [
            Vec3::new(1.0, 0.0, 0.0),
            Vec3::new(0.0, 1.0, 0.0),
            Vec3::new(0.0, 0.0, 1.0),
            Vec3::new(1.0, 1.0, 1.0),
            Vec3::new(-0.3, 0.9, 0.1),
        ] {
            let p = make_photon(&c, 1.0, dir, 1.0).unwrap();
            assert!(p.e_t.dot(p.e_k).abs() < 1e-14);
            assert_relative_eq!(p.e_t.norm(), 1.0, max_relative = 1e-14);
            // Rebuilding yields bit-identical frame vectors.
            let q = make_photon(&c, 1.0, dir, 1.0).unwrap();
            assert_eq!(p.e_t, q.e_t);
        }
        // Along x the first non-parallel candidate is the y axis.
        let p = make_photon(&c, 1.0, Vec3::unit_x(), 1.0).unwrap();
        assert_eq!(p.e_t, Vec3::unit_y());
        assert_eq!(p.rotation_axis(), Vec3::unit_z());
    }

    #[test]
    fn photon_volume_defaults_to_one_cubic_wavelength() {
        let c = natural();
        let p = make_photon(&c, 1.0, Vec3::unit_x(), 2.0).unwrap();
        let lambda = core::f64::consts::TAU / 2.0;
        assert_relative_eq!(p.v_p, lambda.powi(3), max_relative = 1e-15);
    }

    #[test]
    fn detune_helpers_break_dispersion_on_purpose() {
        let c = natural();
        let p = make_photon(&c, 1.0, Vec3::unit_x(), 1.0).unwrap();
        let d = p.detuned_omega(1.1);
        assert_relative_eq!(d.omega, 1.1, max_relative = 1e-15);
        assert_eq!(d.k, p.k);
        let d = p.detuned_wave_number(1.1);
        assert_relative_eq!(d.k.norm(), 1.1, max_relative = 1e-15);
        assert_eq!(d.omega, p.omega);
    }

    #[test]
    fn mass_matched_volume_doubles_inverse_density() {
        let c = natural();
        assert_relative_eq!(mass_matched_volume(&c, 2.0), 1.0, max_relative = 1e-15);
        assert_relative_eq!(mass_matched_volume(&c, 0.5), 4.0, max_relative = 1e-15);
    }

    #[test]
    fn packet_construction_rules() {
        let c = natural();
        let ph = make_photon(&c, 1.0, Vec3::unit_x(), 1.0).unwrap();
        let el = make_electron(&c, 1.0, Vec3::new(0.5, 0.0, 0.0), 1.0).unwrap();
        assert!(matches!(WavePacket::<f64>::new(vec![]), Err(Error::EmptyPacket)));
        assert!(matches!(
            WavePacket::new(vec![ph, el]),
            Err(Error::MixedPacketKinds)
        ));
        let packet = WavePacket::new(vec![ph, ph]).unwrap();
        assert_eq!(packet.components().len(), 2);
        assert_relative_eq!(packet.common_speed().unwrap(), 1.0, max_relative = 1e-15);
    }

    #[test]
    fn photon_packet_components_tie_momentum_to_potential() {
        let c = natural();
        let a = make_photon(&c, 1.0, Vec3::unit_x(), 1.0).unwrap();
        let b = make_photon(&c, 2.0, Vec3::new(1.0, 1.0, 0.0), 3.0).unwrap();
        let packet = WavePacket::new(vec![a, b]).unwrap();
        for r in packet.component_energy_residuals() {
            assert!(r.abs() < 1e-14, "residual {r}");
        }
    }

    #[test]
    fn electron_packet_speed_mismatch_is_reported() {
        let c = natural();
        let a = make_electron(&c, 1.0, Vec3::new(0.5, 0.0, 0.0), 1.0).unwrap();
        let b = make_electron(&c, 1.0, Vec3::new(0.7, 0.0, 0.0), 1.0).unwrap();
        let packet = WavePacket::new(vec![a, b]).unwrap();
        assert!(matches!(packet.common_speed(), Err(Error::PacketSpeedMismatch)));
    }

    #[test]
    fn amplitude_constant_rescales_psi0() {
        let c = natural();
        let p = make_photon(&c, 8.0, Vec3::unit_x(), 1.0)
            .unwrap()
            .with_amplitude_constant(2.0)
            .unwrap();
        assert_relative_eq!(p.c_amp * p.psi0 * p.psi0, p.rho0, max_relative = 1e-15);
    }
}
