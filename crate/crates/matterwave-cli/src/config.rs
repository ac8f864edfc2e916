//! Run configuration: JSON schema, validation, and model construction.

use std::collections::BTreeMap;
use std::path::Path;

use anyhow::{bail, Context, Result};
use matterwave::{
    make_constants, make_electron, make_photon, ConstantsF64, ConstantsOverrides, GridGeometryF64,
    Identity, ParticleSpecF64, StencilOrder, SuiteConfigF64, Tolerances, UnitSystem, Vec3,
};
use serde::{Deserialize, Serialize};

/// The one config-file layout this binary understands.
pub const CONFIG_VERSION: u32 = 1;

/// Top-level run configuration, echoed verbatim into every report.
#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub version: u32,
    pub particle: ParticleConfig,
    #[serde(default = "default_unit_system")]
    pub unit_system: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub constants: Option<ConstantsConfig>,
    #[serde(default)]
    pub grid: GridConfig,
    #[serde(default)]
    pub tolerances: ToleranceConfig,
    /// Per-identity overrides of the closed-form tolerance, keyed by row name.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub tolerance_overrides: BTreeMap<String, f64>,
    /// Free charge density on the source side of the divergence law.
    #[serde(default)]
    pub charge_density: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Stencil order of the numerical method: 2 or 4.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stencil_order: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub boost: Option<BoostConfig>,
}

fn default_unit_system() -> String {
    "natural".to_string()
}

/// Which wave to build and with what parameters.
#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct ParticleConfig {
    /// "electron" or "photon".
    pub kind: String,
    /// Density amplitude ρ₀.
    pub rho0: f64,
    /// Electron velocity vector (electron only).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub velocity: Option<[f64; 3]>,
    /// Propagation direction (photon only).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub direction: Option<[f64; 3]>,
    /// Angular frequency (photon only).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega: Option<f64>,
    /// Particle volume; defaults to 1 for electrons, λ³ for photons.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub volume: Option<f64>,
    /// Multiplies ω off the dispersion line to demonstrate failure detection.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detune_omega: Option<f64>,
}

/// Optional overrides of the physical constants.
#[derive(Clone, Debug, Default, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct ConstantsConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c0: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hbar: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma_bar: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu_perm: Option<f64>,
}

/// Sampling lattice: points per wavelength and per-axis counts.
#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    #[serde(default = "default_per_wavelength")]
    pub points_per_wavelength: usize,
    #[serde(default = "default_dims")]
    pub dims: [usize; 4],
}

fn default_per_wavelength() -> usize {
    16
}

fn default_dims() -> [usize; 4] {
    [8, 8, 8, 8]
}

impl Default for GridConfig {
    fn default() -> Self {
        Self {
            points_per_wavelength: default_per_wavelength(),
            dims: default_dims(),
        }
    }
}

/// Residual tolerances.
#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct ToleranceConfig {
    #[serde(default = "default_analytic")]
    pub analytic: f64,
    #[serde(default = "default_fd_slack")]
    pub fd_slack: f64,
    #[serde(default = "default_fd_floor")]
    pub fd_floor: f64,
}

fn default_analytic() -> f64 {
    1e-10
}

fn default_fd_slack() -> f64 {
    1.25
}

fn default_fd_floor() -> f64 {
    1e-12
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        Self {
            analytic: default_analytic(),
            fd_slack: default_fd_slack(),
            fd_floor: default_fd_floor(),
        }
    }
}

/// Frame-invariance sweep for the boost command.
#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct BoostConfig {
    /// Single boost speed as a fraction of c₀.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<f64>,
    /// Several boost speeds, checked in order.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta_sweep: Option<Vec<f64>>,
}

impl BoostConfig {
    /// The sweep to run, merging the single value and the list.
    pub fn betas(&self) -> Result<Vec<f64>> {
        let mut betas = Vec::new();
        if let Some(b) = self.beta {
            betas.push(b);
        }
        if let Some(sweep) = &self.beta_sweep {
            betas.extend_from_slice(sweep);
        }
        if betas.is_empty() {
            bail!("boost section needs \"beta\" or \"beta_sweep\"");
        }
        Ok(betas)
    }
}

/// Reads and validates a config file.
pub fn load_config(path: &Path) -> Result<RunConfig> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading config {}", path.display()))?;
    let config: RunConfig = serde_json::from_str(&text)
        .with_context(|| format!("parsing config {}", path.display()))?;
    config.validate()?;
    Ok(config)
}

impl RunConfig {
    /// Cross-field checks serde cannot express.
    pub fn validate(&self) -> Result<()> {
        if self.version != CONFIG_VERSION {
            bail!(
                "unsupported config version {} (this binary reads version {})",
                self.version,
                CONFIG_VERSION
            );
        }
        match self.unit_system.as_str() {
            "natural" | "si" => {}
            other => bail!("unknown unit_system {other:?} (use \"natural\" or \"si\")"),
        }
        let p = &self.particle;
        match p.kind.as_str() {
            "electron" => {
                if p.velocity.is_none() {
                    bail!("an electron config needs \"velocity\"");
                }
                if p.direction.is_some() || p.omega.is_some() {
                    bail!("\"direction\" and \"omega\" apply to photons only");
                }
            }
            "photon" => {
                if p.direction.is_none() || p.omega.is_none() {
                    bail!("a photon config needs \"direction\" and \"omega\"");
                }
                if p.velocity.is_some() {
                    bail!("\"velocity\" applies to electrons only");
                }
            }
            other => bail!("unknown particle kind {other:?} (use \"electron\" or \"photon\")"),
        }
        for (name, id) in self.tolerance_overrides.keys().map(|k| (k, identity_from_name(k))) {
            if id.is_none() {
                bail!("unknown identity {name:?} in tolerance_overrides");
            }
        }
        Ok(())
    }

    /// The constants table this run uses.
    pub fn build_constants(&self) -> Result<ConstantsF64> {
        let system = match self.unit_system.as_str() {
            "si" => UnitSystem::Si,
            _ => UnitSystem::Natural,
        };
        let c = self.constants.clone().unwrap_or_default();
        Ok(make_constants(
            system,
            ConstantsOverrides {
                c0: c.c0,
                hbar: c.hbar,
                m: c.m,
                e: c.e,
                sigma_bar: c.sigma_bar,
                epsilon: c.epsilon,
                mu_perm: c.mu_perm,
            },
        )?)
    }

    /// The particle model this run verifies.
    pub fn build_spec(&self) -> Result<ParticleSpecF64> {
        let constants = self.build_constants()?;
        let p = &self.particle;
        let mut spec = match p.kind.as_str() {
            "electron" => {
                let u = Vec3::from_array(p.velocity.expect("validated"));
                make_electron(&constants, p.rho0, u, p.volume.unwrap_or(1.0))?
            }
            _ => {
                let dir = Vec3::from_array(p.direction.expect("validated"));
                let spec = make_photon(&constants, p.rho0, dir, p.omega.expect("validated"))?;
                match p.volume {
                    Some(v) => spec.with_volume(v)?,
                    None => spec,
                }
            }
        };
        if let Some(factor) = p.detune_omega {
            if !(factor.is_finite() && factor > 0.0) {
                bail!("detune_omega must be a positive finite factor, got {factor}");
            }
            spec = spec.detuned_omega(factor);
        }
        Ok(spec)
    }

    /// The sampling lattice, sized from the model's wavelength and period.
    pub fn build_grid(&self, spec: &ParticleSpecF64) -> Result<GridGeometryF64> {
        Ok(GridGeometryF64::for_spec(
            spec,
            self.grid.points_per_wavelength,
            self.grid.dims,
        )?)
    }

    /// The residual-suite configuration; a CLI flag overrides the file.
    pub fn build_suite(&self, order_flag: Option<u32>) -> Result<SuiteConfigF64> {
        let order = match order_flag.or(self.stencil_order).unwrap_or(2) {
            2 => StencilOrder::Two,
            4 => StencilOrder::Four,
            other => bail!("stencil order must be 2 or 4, got {other}"),
        };
        let mut overrides = Vec::new();
        for (name, &value) in &self.tolerance_overrides {
            let id = identity_from_name(name).expect("validated");
            overrides.push((id, value));
        }
        Ok(SuiteConfigF64 {
            tolerances: Tolerances {
                analytic: self.tolerances.analytic,
                fd_slack: self.tolerances.fd_slack,
                fd_floor: self.tolerances.fd_floor,
                overrides,
            },
            stencil_order: order,
            charge_density: self.charge_density,
        })
    }
}

/// Looks an identity up by its report row name.
pub fn identity_from_name(name: &str) -> Option<Identity> {
    Identity::ALL.into_iter().find(|id| id.name() == name)
}
