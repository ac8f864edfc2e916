//! Analytic plane-wave particle models — an electron as a subluminal density
//! wave, light as the luminal limit — together with machinery that verifies
//! every differential identity, energy relation, uncertainty bound, spin
//! product, interaction balance, and frame invariant the models claim, both
//! in closed form and against independent finite-difference oracles.

pub mod constants;
pub mod diffops;
pub mod energetics;
pub mod error;
pub mod fields;
pub mod interaction;
pub mod maxwell;
pub mod model;
pub mod real;
pub mod relativity;
pub mod spin;
pub mod util;
pub mod vec3;

pub use constants::{make_constants, Constants, ConstantsOverrides, UnitSystem};
pub use diffops::{StencilConfig, StencilOrder};
pub use energetics::{
    aspect_resolution_check, energy_breakdown, kinetic_operator_check, photon_energy_check,
    uncertainty_product, whole_period_offset, AspectReport, EnergyBreakdown, PhotonEnergyReport,
    ResolutionVerdict, UncertaintyReport, MIN_QUADRATURE_SAMPLES,
};
pub use error::{Error, Result};
pub use fields::{
    sample_grid, FieldGrid, FieldModel, FieldSample, GridGeometry, ScalarChannel, VectorChannel,
    CSV_HEADER, MIN_GRID_POINTS,
};
pub use interaction::{
    hamiltonian_balance, transfer_quantum, transfer_rate, InteractionState, TransferQuantum,
    TransferSpec,
};
pub use maxwell::{
    check_ampere_inhomogeneous, check_ampere_subluminal, check_continuity, check_faraday,
    check_identity, check_lorentz_condition, check_sources, check_wave_equation, run_suite,
    Identity, Method, ResidualReport, SuiteConfig, Tolerances,
};
pub use model::{
    make_electron, make_photon, mass_matched_volume, ParticleKind, ParticleSpec, WavePacket,
};
pub use real::Real;
pub use relativity::{
    boost_frame_quantities, boost_wave_equation, boosted_spec, compose_velocity, make_boost,
    mat_mul, scaled_frame_quantities, Boost, BoostWaveCheck, FrameQuantities,
    BOOST_RESIDUAL_NOTE,
};
pub use spin::{
    magnetic_field_from_curl, spin_electron, spin_for_spec, spin_photon, CurlMagneticField,
    MomentumField, SpinReport,
};
pub use vec3::Vec3;

/// Double-precision vector.
pub type Vec3F64 = Vec3<f64>;
/// Double-precision constants table.
pub type ConstantsF64 = Constants<f64>;
/// Double-precision particle model.
pub type ParticleSpecF64 = ParticleSpec<f64>;
/// Double-precision superposition.
pub type WavePacketF64 = WavePacket<f64>;
/// Double-precision lattice geometry.
pub type GridGeometryF64 = GridGeometry<f64>;
/// Double-precision sampled grid.
pub type FieldGridF64 = FieldGrid<f64>;
/// Double-precision residual-suite configuration.
pub type SuiteConfigF64 = SuiteConfig<f64>;
/// Double-precision boost.
pub type BoostF64 = Boost<f64>;
