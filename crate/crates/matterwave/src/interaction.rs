//! Energy bookkeeping of an electron interacting with an external potential.

use crate::constants::Constants;
use crate::error::{Error, Result};
use crate::real::{approx_f64, Real};

/// Energy accounts of an electron wave in an external potential.
///
/// The total splits into a field part σ·φ and a wave part; what the wave
/// hands over to the radiation field appears as a photon density ρ_ph⁰, and
/// that density times c₀² equals the kinetic term ρ_el⁰·ẋ² exactly.
#[derive(Clone, Copy, Debug)]
pub struct InteractionState<T> {
    pub rho_el0: T,
    pub xdot: T,
    pub phi_ext: T,
    pub sigma_el0: T,
    /// Total energy density ρ_el⁰·ẋ² + σ·φ.
    pub h0: T,
    /// Field part σ·φ.
    pub h: T,
    /// Wave part −ρ_el⁰·ẋ² (the sign records the direction of transfer).
    pub h_w: T,
    /// Photon density the wave part corresponds to, ρ_el⁰·ẋ²/c₀².
    pub rho_ph0: T,
}

/// Splits the interaction energy of an electron wave moving at `xdot`
/// through an external potential `phi_ext`.
pub fn hamiltonian_balance<T: Real>(
    rho_el0: T,
    xdot: T,
    sigma_el0: T,
    phi_ext: T,
    constants: &Constants<T>,
) -> Result<InteractionState<T>> {
    if !(rho_el0.is_finite() && rho_el0 > T::zero()) {
        return Err(Error::InvalidDensity(approx_f64(rho_el0)));
    }
    if xdot.abs() >= constants.c0 {
        return Err(Error::SuperluminalElectron {
            speed: approx_f64(xdot.abs()),
            c0: approx_f64(constants.c0),
        });
    }
    for (name, v) in [("sigma_el0", sigma_el0), ("phi_ext", phi_ext)] {
        if !v.is_finite() {
            return Err(Error::InvalidInput {
                name,
                value: approx_f64(v),
            });
        }
    }
    let kinetic = rho_el0 * xdot * xdot;
    let field = sigma_el0 * phi_ext;
    Ok(InteractionState {
        rho_el0,
        xdot,
        phi_ext,
        sigma_el0,
        h0: kinetic + field,
        h: field,
        h_w: -kinetic,
        rho_ph0: kinetic / (constants.c0 * constants.c0),
    })
}

impl<T: Real> InteractionState<T> {
    /// |ρ_ph⁰·c₀² − ρ_el⁰·ẋ²|: the density-transfer balance residual.
    pub fn balance_residual(&self, constants: &Constants<T>) -> T {
        (self.rho_ph0 * constants.c0 * constants.c0 - self.rho_el0 * self.xdot * self.xdot).abs()
    }

    /// |h0 − (h − h_w)|: the split must reassemble the total.
    pub fn split_residual(&self) -> T {
        (self.h0 - (self.h - self.h_w)).abs()
    }
}

/// Energy transferred per unit time at frequency ν: h·ν².
pub fn transfer_rate<T: Real>(constants: &Constants<T>, nu: T) -> Result<T> {
    if !(nu.is_finite() && nu > T::zero()) {
        return Err(Error::InvalidFrequency(approx_f64(nu)));
    }
    Ok(constants.h * nu * nu)
}

/// Geometry and duration of one emission or absorption event.
#[derive(Clone, Copy, Debug)]
pub struct TransferSpec<T> {
    /// Cross-section of the interaction region.
    pub a_cross: T,
    /// Frequency of the transferred wave.
    pub nu: T,
    /// Duration of the event, one period: 1/ν.
    pub tau: T,
    /// Wavelength of the transferred wave.
    pub lambda: T,
    /// Fraction of the full quantum actually exchanged.
    pub alpha_frac: T,
}

impl<T: Real> TransferSpec<T> {
    pub fn new(a_cross: T, nu: T, lambda: T, alpha_frac: T) -> Result<Self> {
        for (name, v) in [
            ("a_cross", a_cross),
            ("nu", nu),
            ("lambda", lambda),
            ("alpha_frac", alpha_frac),
        ] {
            if !(v.is_finite() && v > T::zero()) {
                return Err(Error::InvalidInput {
                    name,
                    value: approx_f64(v),
                });
            }
        }
        Ok(Self {
            a_cross,
            nu,
            tau: nu.recip(),
            lambda,
            alpha_frac,
        })
    }
}

/// Energy content of one transfer event.
#[derive(Clone, Copy, Debug)]
pub struct TransferQuantum<T> {
    /// Energy in the swept volume: A·λ·ρ_ph⁰·c₀².
    pub energy: T,
    /// The partial quantum α·h·ν it corresponds to.
    pub alpha_quantum: T,
}

/// Energy of the photon density swept through the cross-section in one event.
pub fn transfer_quantum<T: Real>(
    spec: &TransferSpec<T>,
    rho_ph0: T,
    constants: &Constants<T>,
) -> Result<TransferQuantum<T>> {
    if !rho_ph0.is_finite() || rho_ph0 < T::zero() {
        return Err(Error::InvalidDensity(approx_f64(rho_ph0)));
    }
    Ok(TransferQuantum {
        energy: spec.a_cross * spec.lambda * rho_ph0 * constants.c0 * constants.c0,
        alpha_quantum: spec.alpha_frac * constants.h * spec.nu,
    })
}
