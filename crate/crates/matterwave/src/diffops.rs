//! Central finite-difference operators on sampled 4-D lattices.
//!
//! These are the independent numerical oracle for the closed-form mode
//! calculus: they know nothing about waveforms and act purely on sampled
//! values. Every operator shrinks the lattice by the same margin on all four
//! axes, so any combination of operators applied to the same input stays
//! aligned point-for-point.

use crate::error::{Error, Result};
use crate::fields::{Field4, VectorField4};
use crate::real::{lit, Real};
use crate::util::parallel_enabled;
use rayon::prelude::*;

/// Accuracy order of the central stencils.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StencilOrder {
    Two,
    Four,
}

impl StencilOrder {
    /// Points dropped on each side of every axis.
    #[inline]
    pub fn margin(self) -> usize {
        match self {
            StencilOrder::Two => 1,
            StencilOrder::Four => 2,
        }
    }

    /// Formal order of accuracy.
    #[inline]
    pub fn accuracy(self) -> u32 {
        match self {
            StencilOrder::Two => 2,
            StencilOrder::Four => 4,
        }
    }
}

/// Spacings and stencil order for the difference operators.
#[derive(Clone, Copy, Debug)]
pub struct StencilConfig<T> {
    pub order: StencilOrder,
    /// Spatial spacing (all three axes).
    pub h: T,
    /// Temporal spacing.
    pub dt: T,
}

impl<T: Real> StencilConfig<T> {
    pub fn new(order: StencilOrder, h: T, dt: T) -> Result<Self> {
        for (name, v) in [("h", h), ("dt", dt)] {
            if !(v.is_finite() && v > T::zero()) {
                return Err(Error::InvalidInput {
                    name,
                    value: crate::real::approx_f64(v),
                });
            }
        }
        Ok(Self { order, h, dt })
    }

    #[inline]
    fn spacing(&self, axis: usize) -> T {
        if axis == 3 {
            self.dt
        } else {
            self.h
        }
    }
}

fn interior_dims(dims: [usize; 4], margin: usize) -> Result<[usize; 4]> {
    let min = 2 * margin + 1;
    if dims.iter().any(|&n| n < min) {
        return Err(Error::GridTooSmall { dims, min });
    }
    Ok(dims.map(|n| n - 2 * margin))
}

/// Applies a 1-D stencil along `axis`, shrinking all four axes by the margin.
fn apply_stencil<T: Real>(
    field: &Field4<T>,
    axis: usize,
    taps: &[(isize, T)],
    scale: T,
    margin: usize,
) -> Result<Field4<T>> {
    let dims = field.dims();
    let out_dims = interior_dims(dims, margin)?;
    let [_, ny, nz, nt] = dims;
    let [mx, my, mz, mt] = out_dims;
    let strides = [ny * nz * nt, nz * nt, nt, 1];
    let axis_stride = strides[axis] as isize;
    let data = field.as_slice();
    let out_stride = my * mz * mt;
    let mut out = vec![T::zero(); mx * out_stride];

    let fill = |(ox, slab): (usize, &mut [T])| {
        let ix = ox + margin;
        let mut oidx = 0;
        for oy in 0..my {
            let iy = oy + margin;
            for oz in 0..mz {
                let iz = oz + margin;
                let base = ((ix * ny + iy) * nz + iz) * nt + margin;
                for ot in 0..mt {
                    let center = (base + ot) as isize;
                    let mut acc = T::zero();
                    for &(offset, w) in taps {
                        acc = acc + data[(center + offset * axis_stride) as usize] * w;
                    }
                    slab[oidx] = acc * scale;
                    oidx += 1;
                }
            }
        }
    };

    if parallel_enabled() {
        out.par_chunks_mut(out_stride).enumerate().for_each(fill);
    } else {
        out.chunks_mut(out_stride).enumerate().for_each(fill);
    }
    Ok(Field4::from_vec(out_dims, out))
}

/// First derivative along one axis (0–2 spatial, 3 temporal).
pub fn d_axis<T: Real>(
    field: &Field4<T>,
    axis: usize,
    cfg: &StencilConfig<T>,
) -> Result<Field4<T>> {
    let s = cfg.spacing(axis);
    match cfg.order {
        StencilOrder::Two => {
            let taps = [(-1, -T::one()), (1, T::one())];
            apply_stencil(field, axis, &taps, (s + s).recip(), 1)
        }
        StencilOrder::Four => {
            let taps = [
                (-2, T::one()),
                (-1, lit(-8.0)),
                (1, lit(8.0)),
                (2, -T::one()),
            ];
            apply_stencil(field, axis, &taps, (lit::<T>(12.0) * s).recip(), 2)
        }
    }
}

/// Second derivative along one axis (0–2 spatial, 3 temporal).
pub fn d2_axis<T: Real>(
    field: &Field4<T>,
    axis: usize,
    cfg: &StencilConfig<T>,
) -> Result<Field4<T>> {
    let s = cfg.spacing(axis);
    match cfg.order {
        StencilOrder::Two => {
            let taps = [(-1, T::one()), (0, lit(-2.0)), (1, T::one())];
            apply_stencil(field, axis, &taps, (s * s).recip(), 1)
        }
        StencilOrder::Four => {
            let taps = [
                (-2, -T::one()),
                (-1, lit(16.0)),
                (0, lit(-30.0)),
                (1, lit(16.0)),
                (2, -T::one()),
            ];
            apply_stencil(field, axis, &taps, (lit::<T>(12.0) * s * s).recip(), 2)
        }
    }
}

/// ∂/∂t.
pub fn d_dt<T: Real>(field: &Field4<T>, cfg: &StencilConfig<T>) -> Result<Field4<T>> {
    d_axis(field, 3, cfg)
}

/// ∂²/∂t².
pub fn d2_dt2<T: Real>(field: &Field4<T>, cfg: &StencilConfig<T>) -> Result<Field4<T>> {
    d2_axis(field, 3, cfg)
}

/// Spatial gradient.
pub fn grad<T: Real>(field: &Field4<T>, cfg: &StencilConfig<T>) -> Result<VectorField4<T>> {
    Ok(VectorField4 {
        x: d_axis(field, 0, cfg)?,
        y: d_axis(field, 1, cfg)?,
        z: d_axis(field, 2, cfg)?,
    })
}

/// Spatial Laplacian.
pub fn laplacian<T: Real>(field: &Field4<T>, cfg: &StencilConfig<T>) -> Result<Field4<T>> {
    let xx = d2_axis(field, 0, cfg)?;
    let yy = d2_axis(field, 1, cfg)?;
    let zz = d2_axis(field, 2, cfg)?;
    Ok(xx.zip_with(&yy, |a, b| a + b).zip_with(&zz, |a, b| a + b))
}

/// Divergence of a sampled vector field.
pub fn div<T: Real>(v: &VectorField4<T>, cfg: &StencilConfig<T>) -> Result<Field4<T>> {
    let dx = d_axis(&v.x, 0, cfg)?;
    let dy = d_axis(&v.y, 1, cfg)?;
    let dz = d_axis(&v.z, 2, cfg)?;
    Ok(dx.zip_with(&dy, |a, b| a + b).zip_with(&dz, |a, b| a + b))
}

/// Curl of a sampled vector field.
pub fn curl<T: Real>(v: &VectorField4<T>, cfg: &StencilConfig<T>) -> Result<VectorField4<T>> {
    let dzy = d_axis(&v.z, 1, cfg)?;
    let dyz = d_axis(&v.y, 2, cfg)?;
    let dxz = d_axis(&v.x, 2, cfg)?;
    let dzx = d_axis(&v.z, 0, cfg)?;
    let dyx = d_axis(&v.y, 0, cfg)?;
    let dxy = d_axis(&v.x, 1, cfg)?;
    Ok(VectorField4 {
        x: dzy.zip_with(&dyz, |a, b| a - b),
        y: dxz.zip_with(&dzx, |a, b| a - b),
        z: dyx.zip_with(&dxy, |a, b| a - b),
    })
}

impl<T: Real> Field4<T> {
    /// Element-wise combination of two aligned lattices.
    pub fn zip_with(&self, other: &Field4<T>, f: impl Fn(T, T) -> T) -> Field4<T> {
        assert_eq!(self.dims(), other.dims());
        let data = self
            .as_slice()
            .iter()
            .zip(other.as_slice())
            .map(|(&a, &b)| f(a, b))
            .collect();
        Field4::from_vec(self.dims(), data)
    }

    /// Element-wise map.
    pub fn map(&self, f: impl Fn(T) -> T) -> Field4<T> {
        let data = self.as_slice().iter().map(|&v| f(v)).collect();
        Field4::from_vec(self.dims(), data)
    }
}
