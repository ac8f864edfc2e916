//! Physical constants in natural or SI magnitudes, with per-constant overrides.

use crate::error::{Error, Result};
use crate::real::{approx_f64, lit, Real};

/// Base magnitudes used when building a [`Constants`] set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnitSystem {
    /// c0 = ħ = m = e = σ̄ = ε = μ = 1.
    Natural,
    /// CODATA-style SI magnitudes for the electron.
    Si,
}

/// The constant set every model carries.
///
/// `h` is always recomputed as 2π·ħ and cannot be set independently.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Constants<T> {
    /// Limit speed (speed of light).
    pub c0: T,
    /// Reduced action quantum ħ.
    pub hbar: T,
    /// Action quantum h = 2π·ħ, derived.
    pub h: T,
    /// Inertial mass of the modelled particle.
    pub m: T,
    /// Elementary charge magnitude.
    pub e: T,
    /// Mean charge density amplitude σ̄ pairing with the mean mass density.
    pub sigma_bar: T,
    /// Dielectric constant of the background medium.
    pub epsilon: T,
    /// Magnetic permeability of the background medium.
    pub mu_perm: T,
}

/// Partial overrides applied on top of a [`UnitSystem`]'s defaults.
#[derive(Clone, Copy, Debug)]
pub struct ConstantsOverrides<T> {
    pub c0: Option<T>,
    pub hbar: Option<T>,
    pub m: Option<T>,
    pub e: Option<T>,
    pub sigma_bar: Option<T>,
    pub epsilon: Option<T>,
    pub mu_perm: Option<T>,
}

impl<T> Default for ConstantsOverrides<T> {
    fn default() -> Self {
        Self {
            c0: None,
            hbar: None,
            m: None,
            e: None,
            sigma_bar: None,
            epsilon: None,
            mu_perm: None,
        }
    }
}

/// Builds a validated constant set; every value must be finite and positive.
pub fn make_constants<T: Real>(
    system: UnitSystem,
    overrides: ConstantsOverrides<T>,
) -> Result<Constants<T>> {
    let one = T::one();
    let (c0, hbar, m, e, sigma_bar, epsilon, mu_perm) = match system {
        UnitSystem::Natural => (one, one, one, one, one, one, one),
        UnitSystem::Si => (
            lit(299_792_458.0),
            lit(1.054_571_817e-34),
            lit(9.109_383_701_5e-31),
            lit(1.602_176_634e-19),
            one,
            lit(8.854_187_812_8e-12),
            lit(1.256_637_062_12e-6),
        ),
    };

    let pick = |name: &'static str, base: T, over: Option<T>| -> Result<T> {
        let v = over.unwrap_or(base);
        if v.is_finite() && v > T::zero() {
            Ok(v)
        } else {
            Err(Error::InvalidConstant {
                name,
                value: approx_f64(v),
            })
        }
    };

    let hbar = pick("hbar", hbar, overrides.hbar)?;
    Ok(Constants {
        c0: pick("c0", c0, overrides.c0)?,
        hbar,
        h: (T::PI() + T::PI()) * hbar,
        m: pick("m", m, overrides.m)?,
        e: pick("e", e, overrides.e)?,
        sigma_bar: pick("sigma_bar", sigma_bar, overrides.sigma_bar)?,
        epsilon: pick("epsilon", epsilon, overrides.epsilon)?,
        mu_perm: pick("mu_perm", mu_perm, overrides.mu_perm)?,
    })
}

impl<T: Real> Constants<T> {
    /// Natural-unit constants with no overrides.
    pub fn natural() -> Self {
        make_constants(UnitSystem::Natural, ConstantsOverrides::default())
            .expect("natural defaults are valid")
    }

    /// Ratio of mean mass density to mean charge density, m/e.
    #[inline]
    pub fn density_charge_ratio(&self) -> T {
        self.m / self.e
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    #[allow(clippy::approx_constant)] // the literal is a frozen numeric oracle, not a stand-in for TAU
    fn natural_defaults() {
        let c = Constants::<f64>::natural();
        assert_eq!(c.c0, 1.0);
        assert_relative_eq!(c.h, 6.283185307179586, max_relative = 1e-15);
    }

    #[test]
    fn h_follows_an_hbar_override() {
        let c = make_constants::<f64>(
            UnitSystem::Natural,
            ConstantsOverrides {
                hbar: Some(2.0),
                ..Default::default()
            },
        )
        .unwrap();
        assert_relative_eq!(c.h, 4.0 * core::f64::consts::PI, max_relative = 1e-15);
    }

    #[test]
    fn h_is_two_pi_hbar_in_si_too() {
        let c = make_constants::<f64>(UnitSystem::Si, ConstantsOverrides::default()).unwrap();
        assert_relative_eq!(c.h / c.hbar, core::f64::consts::TAU, max_relative = 1e-15);
        assert!(c.c0 == 299_792_458.0);
    }

    #[test]
    fn negative_override_is_rejected() {
        let err = make_constants::<f64>(
            UnitSystem::Natural,
            ConstantsOverrides {
                m: Some(-1.0),
                ..Default::default()
            },
        )
        .unwrap_err();
        assert!(matches!(err, Error::InvalidConstant { name: "m", .. }));
    }

    #[test]
    fn zero_and_nan_are_rejected() {
        for bad in [0.0, f64::NAN] {
            let err = make_constants::<f64>(
                UnitSystem::Natural,
                ConstantsOverrides {
                    c0: Some(bad),
                    ..Default::default()
                },
            )
            .unwrap_err();
            assert!(matches!(err, Error::InvalidConstant { name: "c0", .. }));
        }
    }

    #[test]
    fn density_charge_ratio_is_m_over_e() {
        let c = make_constants::<f64>(
            UnitSystem::Natural,
            ConstantsOverrides {
                m: Some(3.0),
                e: Some(4.0),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(c.density_charge_ratio(), 0.75);
    }
}
