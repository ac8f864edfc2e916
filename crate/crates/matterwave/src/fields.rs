//! Field evaluators and sampled grids.
//!
//! Every channel of a model is a sum of modes `amp·f(k·x − ωt)` with `f` drawn
//! from a small closed family of waveforms. Differentiation maps that family
//! into itself, so closed-form derivatives of any channel fall out of a tiny
//! mode calculus; the residual checks build on exactly that.

use crate::constants::Constants;
use crate::error::{Error, Result};
use crate::model::{ParticleKind, ParticleSpec, WavePacket};
use crate::real::{lit, Real};
use crate::util::parallel_enabled;
use crate::vec3::Vec3;
use rayon::prelude::*;

/// Waveforms closed under differentiation with respect to the phase.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Waveform {
    Sin,
    Cos,
    /// sin(2θ)
    SinTwo,
    /// cos(2θ)
    CosTwo,
    /// sin²(θ)
    SinSq,
    /// cos²(θ)
    CosSq,
}

impl Waveform {
    /// Evaluates the waveform at phase `theta`.
    #[inline]
    pub fn value<T: Real>(self, theta: T) -> T {
        match self {
            Waveform::Sin => theta.sin(),
            Waveform::Cos => theta.cos(),
            Waveform::SinTwo => (theta + theta).sin(),
            Waveform::CosTwo => (theta + theta).cos(),
            Waveform::SinSq => {
                let s = theta.sin();
                s * s
            }
            Waveform::CosSq => {
                let c = theta.cos();
                c * c
            }
        }
    }

    /// Derivative with respect to the phase, as `(coefficient, waveform)`.
    #[inline]
    pub fn d_theta(self) -> (f64, Waveform) {
        match self {
            Waveform::Sin => (1.0, Waveform::Cos),
            Waveform::Cos => (-1.0, Waveform::Sin),
            Waveform::SinTwo => (2.0, Waveform::CosTwo),
            Waveform::CosTwo => (-2.0, Waveform::SinTwo),
            // (sin²)' = sin 2θ, (cos²)' = −sin 2θ
            Waveform::SinSq => (1.0, Waveform::SinTwo),
            Waveform::CosSq => (-1.0, Waveform::SinTwo),
        }
    }
}

/// One scalar mode `amp · f(k·x − ω t)`.
#[derive(Clone, Copy, Debug)]
pub struct ScalarMode<T> {
    pub amp: T,
    pub k: Vec3<T>,
    pub omega: T,
    pub form: Waveform,
}

/// One vector mode `amp · f(k·x − ω t)` with a constant amplitude vector.
#[derive(Clone, Copy, Debug)]
pub struct VectorMode<T> {
    pub amp: Vec3<T>,
    pub k: Vec3<T>,
    pub omega: T,
    pub form: Waveform,
}

impl<T: Real> ScalarMode<T> {
    #[inline]
    pub fn value(&self, x: Vec3<T>, t: T) -> T {
        self.amp * self.form.value(self.k.dot(x) - self.omega * t)
    }

    /// ∂/∂t
    pub fn ddt(&self) -> ScalarMode<T> {
        let (c, form) = self.form.d_theta();
        ScalarMode {
            amp: -self.omega * self.amp * lit(c),
            form,
            ..*self
        }
    }

    /// ∂²/∂t²
    pub fn d2dt2(&self) -> ScalarMode<T> {
        self.ddt().ddt()
    }

    /// ∇
    pub fn grad(&self) -> VectorMode<T> {
        let (c, form) = self.form.d_theta();
        VectorMode {
            amp: self.k * (self.amp * lit(c)),
            k: self.k,
            omega: self.omega,
            form,
        }
    }

    /// Δ (sum of the three second spatial derivatives)
    pub fn laplacian(&self) -> ScalarMode<T> {
        let (c1, f1) = self.form.d_theta();
        let (c2, f2) = f1.d_theta();
        ScalarMode {
            amp: self.amp * lit(c1 * c2) * self.k.norm_squared(),
            form: f2,
            ..*self
        }
    }

    #[inline]
    pub fn scaled(&self, s: T) -> ScalarMode<T> {
        ScalarMode {
            amp: self.amp * s,
            ..*self
        }
    }
}

impl<T: Real> VectorMode<T> {
    #[inline]
    pub fn value(&self, x: Vec3<T>, t: T) -> Vec3<T> {
        self.amp * self.form.value(self.k.dot(x) - self.omega * t)
    }

    #[inline]
    pub fn component(&self, axis: usize) -> ScalarMode<T> {
        ScalarMode {
            amp: self.amp.to_array()[axis],
            k: self.k,
            omega: self.omega,
            form: self.form,
        }
    }

    /// ∂/∂t
    pub fn ddt(&self) -> VectorMode<T> {
        let (c, form) = self.form.d_theta();
        VectorMode {
            amp: self.amp * (-self.omega * lit(c)),
            form,
            ..*self
        }
    }

    /// ∂²/∂t²
    pub fn d2dt2(&self) -> VectorMode<T> {
        self.ddt().ddt()
    }

    /// ∇· (scalar result)
    pub fn div(&self) -> ScalarMode<T> {
        let (c, form) = self.form.d_theta();
        ScalarMode {
            amp: self.k.dot(self.amp) * lit(c),
            k: self.k,
            omega: self.omega,
            form,
        }
    }

    /// ∇× (vector result)
    pub fn curl(&self) -> VectorMode<T> {
        let (c, form) = self.form.d_theta();
        VectorMode {
            amp: self.k.cross(self.amp) * lit(c),
            form,
            ..*self
        }
    }

    /// Component-wise Δ
    pub fn laplacian(&self) -> VectorMode<T> {
        let (c1, f1) = self.form.d_theta();
        let (c2, f2) = f1.d_theta();
        VectorMode {
            amp: self.amp * (lit::<T>(c1 * c2) * self.k.norm_squared()),
            form: f2,
            ..*self
        }
    }

    #[inline]
    pub fn scaled(&self, s: T) -> VectorMode<T> {
        VectorMode {
            amp: self.amp * s,
            ..*self
        }
    }
}

/// Sum of scalar modes at a point.
pub fn eval_scalar_modes<T: Real>(modes: &[ScalarMode<T>], x: Vec3<T>, t: T) -> T {
    modes.iter().fold(T::zero(), |acc, m| acc + m.value(x, t))
}

/// Sum of vector modes at a point.
pub fn eval_vector_modes<T: Real>(modes: &[VectorMode<T>], x: Vec3<T>, t: T) -> Vec3<T> {
    modes
        .iter()
        .fold(Vec3::zero(), |acc, m| acc + m.value(x, t))
}

/// Scalar-valued channels of a model.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScalarChannel {
    /// Wave function ψ.
    Psi,
    /// Mass density ρ.
    Rho,
    /// Intrinsic potential φ (the cos² part).
    Phi,
}

/// Vector-valued channels of a model.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VectorChannel {
    /// Longitudinal momentum density p = ρ·u.
    Momentum,
    /// Transversal electric field.
    Electric,
    /// Transversal magnetic field in dynamical units (|B| = |E| pointwise).
    Magnetic,
    /// Magnetic field in classical units, B = (k × E)/ω; the differential
    /// identity checks close in this convention.
    MagneticClassical,
    /// Vector potential A = −c₀·p.
    VectorPotential,
}

/// Anything whose channels decompose into plane-wave modes.
pub trait FieldModel<T: Real>: Sync {
    fn constants(&self) -> &Constants<T>;

    /// Which particle family the model belongs to.
    fn kind(&self) -> ParticleKind;

    /// Modes of a scalar channel.
    fn scalar_modes(&self, channel: ScalarChannel) -> Vec<ScalarMode<T>>;

    /// Modes of a vector channel.
    fn vector_modes(&self, channel: VectorChannel) -> Vec<VectorMode<T>>;

    /// The mechanical speed shared by all modes.
    fn mechanical_speed(&self) -> Result<T>;

    /// Phase speed ω/|k| shared by all modes (equals the mechanical speed for
    /// valid models, differs for detuned ones).
    fn phase_speed(&self) -> Result<T>;

    /// All channels at one point.
    fn eval(&self, x: Vec3<T>, t: T) -> FieldSample<T> {
        FieldSample {
            x,
            t,
            psi: eval_scalar_modes(&self.scalar_modes(ScalarChannel::Psi), x, t),
            rho: eval_scalar_modes(&self.scalar_modes(ScalarChannel::Rho), x, t),
            phi: eval_scalar_modes(&self.scalar_modes(ScalarChannel::Phi), x, t),
            p: eval_vector_modes(&self.vector_modes(VectorChannel::Momentum), x, t),
            e: eval_vector_modes(&self.vector_modes(VectorChannel::Electric), x, t),
            b: eval_vector_modes(&self.vector_modes(VectorChannel::Magnetic), x, t),
            a: eval_vector_modes(&self.vector_modes(VectorChannel::VectorPotential), x, t),
        }
    }
}

impl<T: Real> ParticleSpec<T> {
    /// Phase k·x − ωt.
    #[inline]
    pub fn phase(&self, x: Vec3<T>, t: T) -> T {
        self.k.dot(x) - self.omega * t
    }

    /// Transversal field strength |u|·sqrt(4π·ρ₀).
    #[inline]
    pub fn em_amplitude(&self) -> T {
        self.speed() * (lit::<T>(4.0) * T::PI() * self.rho0).sqrt()
    }

    /// Wave function ψ₀·sin(k·x − ωt).
    #[inline]
    pub fn psi(&self, x: Vec3<T>, t: T) -> T {
        self.psi0 * self.phase(x, t).sin()
    }

    /// Mass density ρ₀·sin²(k·x − ωt).
    #[inline]
    pub fn rho(&self, x: Vec3<T>, t: T) -> T {
        let s = self.phase(x, t).sin();
        self.rho0 * s * s
    }

    /// Longitudinal momentum density ρ(x,t)·u.
    #[inline]
    pub fn momentum(&self, x: Vec3<T>, t: T) -> Vec3<T> {
        self.u * self.rho(x, t)
    }

    /// Intrinsic potential ρ₀·|u|²·cos²(k·x − ωt).
    #[inline]
    pub fn potential(&self, x: Vec3<T>, t: T) -> T {
        let c = self.phase(x, t).cos();
        self.phi_amplitude() * c * c
    }

    /// Total potential ρ·|u|² + φ; constant ρ₀·|u|² for valid specs.
    #[inline]
    pub fn potential_total(&self, x: Vec3<T>, t: T) -> T {
        self.rho(x, t) * self.u.norm_squared() + self.potential(x, t)
    }

    /// Transversal (E, B) pair in dynamical units: equal amplitudes, mutually
    /// orthogonal, both orthogonal to the propagation direction.
    #[inline]
    pub fn em_fields(&self, x: Vec3<T>, t: T) -> (Vec3<T>, Vec3<T>) {
        let c = self.phase(x, t).cos();
        let amp = self.em_amplitude();
        let e = self.e_t * (amp * c);
        let b = self.rotation_axis() * (amp * c);
        (e, b)
    }

    /// Vector potential A = −c₀·p.
    #[inline]
    pub fn vector_potential(&self, x: Vec3<T>, t: T) -> Vec3<T> {
        self.momentum(x, t) * -self.constants.c0
    }
}

impl<T: Real> FieldModel<T> for ParticleSpec<T> {
    fn constants(&self) -> &Constants<T> {
        &self.constants
    }

    fn kind(&self) -> ParticleKind {
        self.kind
    }

    fn scalar_modes(&self, channel: ScalarChannel) -> Vec<ScalarMode<T>> {
        let m = match channel {
            ScalarChannel::Psi => ScalarMode {
                amp: self.psi0,
                k: self.k,
                omega: self.omega,
                form: Waveform::Sin,
            },
            ScalarChannel::Rho => ScalarMode {
                amp: self.rho0,
                k: self.k,
                omega: self.omega,
                form: Waveform::SinSq,
            },
            ScalarChannel::Phi => ScalarMode {
                amp: self.phi_amplitude(),
                k: self.k,
                omega: self.omega,
                form: Waveform::CosSq,
            },
        };
        vec![m]
    }

    fn vector_modes(&self, channel: VectorChannel) -> Vec<VectorMode<T>> {
        let amp = match channel {
            VectorChannel::Momentum => self.u * self.rho0,
            VectorChannel::Electric => self.e_t * self.em_amplitude(),
            VectorChannel::Magnetic => self.rotation_axis() * self.em_amplitude(),
            // B = (k × E)/ω: the amplitude picks up |k|/ω relative to E.
            VectorChannel::MagneticClassical => {
                self.rotation_axis() * (self.em_amplitude() * self.k.norm() / self.omega)
            }
            VectorChannel::VectorPotential => self.u * (-self.constants.c0 * self.rho0),
        };
        let form = match channel {
            VectorChannel::Momentum | VectorChannel::VectorPotential => Waveform::SinSq,
            _ => Waveform::Cos,
        };
        vec![VectorMode {
            amp,
            k: self.k,
            omega: self.omega,
            form,
        }]
    }

    fn mechanical_speed(&self) -> Result<T> {
        let s = self.speed();
        if s == T::zero() {
            Err(Error::ZeroVelocity)
        } else {
            Ok(s)
        }
    }

    fn phase_speed(&self) -> Result<T> {
        Ok(self.c_phase())
    }
}

impl<T: Real> WavePacket<T> {
    /// All channels at one point (component-wise sums).
    pub fn eval(&self, x: Vec3<T>, t: T) -> FieldSample<T> {
        FieldModel::eval(self, x, t)
    }
}

impl<T: Real> FieldModel<T> for WavePacket<T> {
    fn constants(&self) -> &Constants<T> {
        WavePacket::constants(self)
    }

    fn kind(&self) -> ParticleKind {
        WavePacket::kind(self)
    }

    fn scalar_modes(&self, channel: ScalarChannel) -> Vec<ScalarMode<T>> {
        self.components()
            .iter()
            .flat_map(|c| c.scalar_modes(channel))
            .collect()
    }

    fn vector_modes(&self, channel: VectorChannel) -> Vec<VectorMode<T>> {
        self.components()
            .iter()
            .flat_map(|c| c.vector_modes(channel))
            .collect()
    }

    fn mechanical_speed(&self) -> Result<T> {
        self.common_speed()
    }

    fn phase_speed(&self) -> Result<T> {
        let c0 = self.components()[0].c_phase();
        let tol = lit::<T>(1e-12) * c0.abs().max(T::one());
        for c in self.components() {
            if (c.c_phase() - c0).abs() > tol {
                return Err(Error::PacketSpeedMismatch);
            }
        }
        Ok(c0)
    }
}

/// Every channel of a model at one spacetime point.
#[derive(Clone, Copy, Debug)]
pub struct FieldSample<T> {
    pub x: Vec3<T>,
    pub t: T,
    pub psi: T,
    pub rho: T,
    pub phi: T,
    pub p: Vec3<T>,
    pub e: Vec3<T>,
    pub b: Vec3<T>,
    pub a: Vec3<T>,
}

/// Uniform 4-D sampling lattice: spatial spacing `h`, temporal spacing `dt`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridGeometry<T> {
    pub origin: Vec3<T>,
    pub t0: T,
    pub h: T,
    pub dt: T,
    /// Point counts as [nx, ny, nz, nt].
    pub dims: [usize; 4],
}

/// Minimum points per axis for a sampled field grid.
pub const MIN_GRID_POINTS: usize = 5;

impl<T: Real> GridGeometry<T> {
    pub fn new(origin: Vec3<T>, t0: T, h: T, dt: T, dims: [usize; 4]) -> Result<Self> {
        let g = Self {
            origin,
            t0,
            h,
            dt,
            dims,
        };
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<()> {
        if self.dims.iter().any(|&n| n < MIN_GRID_POINTS) {
            return Err(Error::GridTooSmall {
                dims: self.dims,
                min: MIN_GRID_POINTS,
            });
        }
        for (name, v) in [("h", self.h), ("dt", self.dt)] {
            if !(v.is_finite() && v > T::zero()) {
                return Err(Error::InvalidInput {
                    name,
                    value: crate::real::approx_f64(v),
                });
            }
        }
        Ok(())
    }

    /// Total number of lattice points.
    #[inline]
    pub fn len(&self) -> usize {
        self.dims.iter().product()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Spacetime coordinates of the lattice point `(ix, iy, iz, it)`.
    #[inline]
    pub fn point(&self, ix: usize, iy: usize, iz: usize, it: usize) -> (Vec3<T>, T) {
        let x = Vec3::new(
            self.origin.x + self.h * T::from_usize(ix).unwrap(),
            self.origin.y + self.h * T::from_usize(iy).unwrap(),
            self.origin.z + self.h * T::from_usize(iz).unwrap(),
        );
        (x, self.t0 + self.dt * T::from_usize(it).unwrap())
    }

    /// Same extent at half the spacing: dims become 2n−1 per axis, so the
    /// coarse points coincide with the even refined points.
    pub fn refined(&self) -> Self {
        let two = T::one() + T::one();
        Self {
            origin: self.origin,
            t0: self.t0,
            h: self.h / two,
            dt: self.dt / two,
            dims: self.dims.map(|n| 2 * n - 1),
        }
    }

    /// Geometry matched to a spec: `per_wavelength` points per wavelength and
    /// per period, with the given dims.
    pub fn for_spec(spec: &ParticleSpec<T>, per_wavelength: usize, dims: [usize; 4]) -> Result<Self> {
        let n = T::from_usize(per_wavelength).unwrap();
        Self::new(
            Vec3::zero(),
            T::zero(),
            spec.wavelength() / n,
            spec.period() / n,
            dims,
        )
    }
}

/// One scalar sampled on a 4-D lattice, row-major in (x, y, z, t).
#[derive(Clone, Debug)]
pub struct Field4<T> {
    dims: [usize; 4],
    data: Vec<T>,
}

impl<T: Real> Field4<T> {
    pub fn from_fn(dims: [usize; 4], f: impl Fn(usize, usize, usize, usize) -> T + Sync) -> Self {
        let [nx, ny, nz, nt] = dims;
        let stride = ny * nz * nt;
        let mut data = vec![T::zero(); nx * stride];
        let fill = |(ix, slab): (usize, &mut [T])| {
            let mut idx = 0;
            for iy in 0..ny {
                for iz in 0..nz {
                    for it in 0..nt {
                        slab[idx] = f(ix, iy, iz, it);
                        idx += 1;
                    }
                }
            }
        };
        if parallel_enabled() {
            data.par_chunks_mut(stride).enumerate().for_each(fill);
        } else {
            data.chunks_mut(stride).enumerate().for_each(fill);
        }
        Self { dims, data }
    }

    pub fn from_vec(dims: [usize; 4], data: Vec<T>) -> Self {
        assert_eq!(dims.iter().product::<usize>(), data.len());
        Self { dims, data }
    }

    #[inline]
    pub fn dims(&self) -> [usize; 4] {
        self.dims
    }

    #[inline]
    pub fn index(&self, ix: usize, iy: usize, iz: usize, it: usize) -> usize {
        let [_, ny, nz, nt] = self.dims;
        ((ix * ny + iy) * nz + iz) * nt + it
    }

    #[inline]
    pub fn get(&self, ix: usize, iy: usize, iz: usize, it: usize) -> T {
        self.data[self.index(ix, iy, iz, it)]
    }

    #[inline]
    pub fn as_slice(&self) -> &[T] {
        &self.data
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.data.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }
}

/// Three scalar lattices forming a sampled vector field.
#[derive(Clone, Debug)]
pub struct VectorField4<T> {
    pub x: Field4<T>,
    pub y: Field4<T>,
    pub z: Field4<T>,
}

impl<T: Real> VectorField4<T> {
    #[inline]
    pub fn dims(&self) -> [usize; 4] {
        self.x.dims()
    }

    #[inline]
    pub fn component(&self, axis: usize) -> &Field4<T> {
        match axis {
            0 => &self.x,
            1 => &self.y,
            _ => &self.z,
        }
    }
}

/// Samples a sum of scalar modes on a lattice.
pub fn sample_scalar_modes<T: Real>(modes: &[ScalarMode<T>], geom: &GridGeometry<T>) -> Field4<T> {
    Field4::from_fn(geom.dims, |ix, iy, iz, it| {
        let (x, t) = geom.point(ix, iy, iz, it);
        eval_scalar_modes(modes, x, t)
    })
}

/// Samples a sum of vector modes on a lattice (three scalar passes).
pub fn sample_vector_modes<T: Real>(
    modes: &[VectorMode<T>],
    geom: &GridGeometry<T>,
) -> VectorField4<T> {
    let comp = |axis: usize| {
        let comps: Vec<ScalarMode<T>> = modes.iter().map(|m| m.component(axis)).collect();
        sample_scalar_modes(&comps, geom)
    };
    VectorField4 {
        x: comp(0),
        y: comp(1),
        z: comp(2),
    }
}

/// All channels of a model sampled on a lattice.
#[derive(Clone, Debug)]
pub struct FieldGrid<T> {
    geom: GridGeometry<T>,
    psi: Field4<T>,
    rho: Field4<T>,
    phi: Field4<T>,
    p: VectorField4<T>,
    e: VectorField4<T>,
    b: VectorField4<T>,
    a: VectorField4<T>,
}

/// Column order of the CSV serialization.
pub const CSV_HEADER: &str = "x,y,z,t,psi,rho,px,py,pz,phi,Ex,Ey,Ez,Bx,By,Bz,Ax,Ay,Az";

/// Samples every channel of a model on the given lattice.
pub fn sample_grid<T: Real, M: FieldModel<T>>(
    model: &M,
    geom: &GridGeometry<T>,
) -> Result<FieldGrid<T>> {
    geom.validate()?;
    Ok(FieldGrid {
        geom: *geom,
        psi: sample_scalar_modes(&model.scalar_modes(ScalarChannel::Psi), geom),
        rho: sample_scalar_modes(&model.scalar_modes(ScalarChannel::Rho), geom),
        phi: sample_scalar_modes(&model.scalar_modes(ScalarChannel::Phi), geom),
        p: sample_vector_modes(&model.vector_modes(VectorChannel::Momentum), geom),
        e: sample_vector_modes(&model.vector_modes(VectorChannel::Electric), geom),
        b: sample_vector_modes(&model.vector_modes(VectorChannel::Magnetic), geom),
        a: sample_vector_modes(&model.vector_modes(VectorChannel::VectorPotential), geom),
    })
}

impl<T: Real> FieldGrid<T> {
    #[inline]
    pub fn geometry(&self) -> &GridGeometry<T> {
        &self.geom
    }

    /// The full sample at one lattice point.
    pub fn sample(&self, ix: usize, iy: usize, iz: usize, it: usize) -> FieldSample<T> {
        let (x, t) = self.geom.point(ix, iy, iz, it);
        let vec_at = |f: &VectorField4<T>| {
            Vec3::new(
                f.x.get(ix, iy, iz, it),
                f.y.get(ix, iy, iz, it),
                f.z.get(ix, iy, iz, it),
            )
        };
        FieldSample {
            x,
            t,
            psi: self.psi.get(ix, iy, iz, it),
            rho: self.rho.get(ix, iy, iz, it),
            phi: self.phi.get(ix, iy, iz, it),
            p: vec_at(&self.p),
            e: vec_at(&self.e),
            b: vec_at(&self.b),
            a: vec_at(&self.a),
        }
    }

    /// A scalar channel addressed by its CSV column name.
    pub fn scalar_channel(&self, name: &str) -> Result<&Field4<T>> {
        let f = match name {
            "psi" => &self.psi,
            "rho" => &self.rho,
            "phi" => &self.phi,
            "px" => &self.p.x,
            "py" => &self.p.y,
            "pz" => &self.p.z,
            "Ex" => &self.e.x,
            "Ey" => &self.e.y,
            "Ez" => &self.e.z,
            "Bx" => &self.b.x,
            "By" => &self.b.y,
            "Bz" => &self.b.z,
            "Ax" => &self.a.x,
            "Ay" => &self.a.y,
            "Az" => &self.a.z,
            other => return Err(Error::UnknownChannel(other.to_owned())),
        };
        Ok(f)
    }

    /// A vector channel addressed by name: "p", "E", "B" or "A".
    pub fn vector_channel(&self, name: &str) -> Result<&VectorField4<T>> {
        match name {
            "p" => Ok(&self.p),
            "E" => Ok(&self.e),
            "B" => Ok(&self.b),
            "A" => Ok(&self.a),
            other => Err(Error::UnknownChannel(other.to_owned())),
        }
    }

    /// Writes the grid as CSV, row-major in (x, y, z, t), one point per row.
    ///
    /// Values use the shortest decimal form that parses back to the same
    /// floating-point number.
    pub fn write_csv<W: std::io::Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "{CSV_HEADER}")?;
        let [nx, ny, nz, nt] = self.geom.dims;
        for ix in 0..nx {
            for iy in 0..ny {
                for iz in 0..nz {
                    for it in 0..nt {
                        let s = self.sample(ix, iy, iz, it);
                        writeln!(
                            w,
                            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
                            s.x.x, s.x.y, s.x.z, s.t, s.psi, s.rho, s.p.x, s.p.y, s.p.z, s.phi,
                            s.e.x, s.e.y, s.e.z, s.b.x, s.b.y, s.b.z, s.a.x, s.a.y, s.a.z
                        )?;
                    }
                }
            }
        }
        Ok(())
    }
}
