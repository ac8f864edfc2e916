//! Error type shared by every module of the crate.

/// Failure modes of model construction, grid operations and checks.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A physical constant was given a non-positive or non-finite value.
    #[error("invalid constant {name} = {value}; constants must be finite and positive")]
    InvalidConstant { name: &'static str, value: f64 },

    /// An electron model was requested at or above the limit speed.
    #[error("electron speed {speed} is not below the limit speed {c0}")]
    SuperluminalElectron { speed: f64, c0: f64 },

    /// An operation that divides by the mechanical speed received |u| = 0.
    #[error("mechanical speed must be non-zero")]
    ZeroVelocity,

    /// A direction vector had zero length.
    #[error("direction vector must have non-zero length")]
    InvalidDirection,

    /// A density amplitude was non-positive.
    #[error("density amplitude {0} must be positive")]
    InvalidDensity(f64),

    /// An oscillation frequency was non-positive.
    #[error("frequency {0} must be positive")]
    InvalidFrequency(f64),

    /// A wavelength was non-positive.
    #[error("wavelength {0} must be positive")]
    InvalidWavelength(f64),

    /// A particle volume was non-positive.
    #[error("particle volume {0} must be positive")]
    InvalidVolume(f64),

    /// A quantity that must be positive (cross-section, period, fraction) was not.
    #[error("{name} = {value} must be positive")]
    InvalidInput { name: &'static str, value: f64 },

    /// A wave packet was constructed with no components.
    #[error("wave packet needs at least one component")]
    EmptyPacket,

    /// A wave packet mixed electron and photon components.
    #[error("wave packet components must share one particle kind")]
    MixedPacketKinds,

    /// A speed-uniform check was applied to a packet with differing component speeds.
    #[error("check requires all packet components to share one mechanical speed")]
    PacketSpeedMismatch,

    /// A grid had fewer points along some axis than the operation needs.
    #[error("grid dims {dims:?} too small; every axis needs at least {min} points")]
    GridTooSmall { dims: [usize; 4], min: usize },

    /// A field channel name was not recognised.
    #[error("unknown field channel \"{0}\"")]
    UnknownChannel(String),

    /// An energy quadrature was requested below the supported resolution.
    #[error("quadrature resolution {samples} below the minimum of {min} samples per wavelength")]
    QuadratureTooCoarse { samples: u32, min: u32 },

    /// A curl-based field was requested with a divisor outside {1, 2}.
    #[error("curl divisor {0} must be 1 or 2")]
    InvalidFactor(u32),

    /// A frame boost was requested at or above the limit speed.
    #[error("boost speed {speed} is not below the limit speed {c0}")]
    SuperluminalBoost { speed: f64, c0: f64 },

    /// A kind-specific check received the other particle kind.
    #[error("operation requires a {expected} model")]
    KindMismatch { expected: &'static str },

    /// Boost checks only cover waves propagating along the x axis.
    #[error("boost checks require propagation along the x axis")]
    BoostRequiresXAxis,

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
