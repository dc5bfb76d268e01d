//! Simulated display glare and per-method visibility scoring.
//!
//! Glare is a convex blend toward white, `out = in + g * (255 - in)` with
//! `g = strength * mask(x, y)`. The blend is written in that form so the
//! output is monotone in `g` even under floating-point rounding.

use alloc::vec::Vec;
use core::fmt;

use crate::enhance::enhance;
use crate::frame::{Frame, FrameError, GrayFrame, Roi};
use crate::gray::to_gray;
use crate::method::{EnhanceParams, Method, ParamError};
use crate::metrics::{distinct_colors, rms_contrast};

/// Default Sobel magnitude threshold for [`edge_survival`].
pub const DEFAULT_EDGE_TAU: f64 = 32.0;

#[derive(Debug, Clone, PartialEq)]
pub enum GlareError {
    Strength(f64),
    Sigma(f64),
    Center(f64, f64),
    Tau(f64),
    Frame(FrameError),
    Params(ParamError),
}

impl fmt::Display for GlareError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GlareError::Strength(s) => write!(f, "glare strength {s} outside [0, 1]"),
            GlareError::Sigma(s) => write!(f, "radial glare sigma {s} must be > 0"),
            GlareError::Center(x, y) => write!(f, "radial glare centre ({x}, {y}) is not finite"),
            GlareError::Tau(t) => write!(f, "edge threshold {t} must be > 0"),
            GlareError::Frame(e) => e.fmt(f),
            GlareError::Params(e) => e.fmt(f),
        }
    }
}

impl core::error::Error for GlareError {}

impl From<FrameError> for GlareError {
    fn from(e: FrameError) -> Self {
        GlareError::Frame(e)
    }
}

impl From<ParamError> for GlareError {
    fn from(e: ParamError) -> Self {
        GlareError::Params(e)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GlareMask {
    Uniform,
    /// Gaussian spot centred at pixel coordinates `(cx, cy)`.
    Radial {
        cx: f64,
        cy: f64,
        sigma: f64,
    },
}

/// Validated glare parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GlareSpec {
    strength: f64,
    mask: GlareMask,
}

impl GlareSpec {
    pub fn new(strength: f64, mask: GlareMask) -> Result<Self, GlareError> {
        if !(0.0..=1.0).contains(&strength) {
            return Err(GlareError::Strength(strength));
        }
        if let GlareMask::Radial { cx, cy, sigma } = mask {
            if !(sigma > 0.0 && sigma.is_finite()) {
                return Err(GlareError::Sigma(sigma));
            }
            if !(cx.is_finite() && cy.is_finite()) {
                return Err(GlareError::Center(cx, cy));
            }
        }
        Ok(GlareSpec { strength, mask })
    }

    pub fn uniform(strength: f64) -> Result<Self, GlareError> {
        GlareSpec::new(strength, GlareMask::Uniform)
    }

    pub fn radial(strength: f64, cx: f64, cy: f64, sigma: f64) -> Result<Self, GlareError> {
        GlareSpec::new(strength, GlareMask::Radial { cx, cy, sigma })
    }

    pub fn strength(&self) -> f64 {
        self.strength
    }

    pub fn mask(&self) -> GlareMask {
        self.mask
    }

    /// Blend weight toward white at pixel `(x, y)`.
    pub fn weight(&self, x: u32, y: u32) -> f64 {
        match self.mask {
            GlareMask::Uniform => self.strength,
            GlareMask::Radial { cx, cy, sigma } => {
                let dx = f64::from(x) - cx;
                let dy = f64::from(y) - cy;
                self.strength * libm::exp(-(dx * dx + dy * dy) / (2.0 * sigma * sigma))
            }
        }
    }
}

#[inline]
fn blend(c: u8, g: f64) -> u8 {
    let c = f64::from(c);
    libm::round(c + g * (255.0 - c)).clamp(0.0, 255.0) as u8
}

pub fn apply_glare(frame: &Frame, spec: &GlareSpec) -> Frame {
    let mut out = frame.clone();
    for y in 0..frame.height() {
        for x in 0..frame.width() {
            let g = spec.weight(x, y);
            out.set_pixel(x, y, frame.pixel(x, y).map(|c| blend(c, g)));
        }
    }
    out
}

/// Squared Sobel gradient magnitude of each luma pixel, replicating the border.
pub fn sobel_magnitude_sq(gray: &GrayFrame) -> Vec<u32> {
    let (w, h) = (gray.width() as i64, gray.height() as i64);
    let at = |x: i64, y: i64| -> i32 {
        i32::from(gray.get(x.clamp(0, w - 1) as u32, y.clamp(0, h - 1) as u32))
    };
    let mut out = Vec::with_capacity((w * h) as usize);
    for y in 0..h {
        for x in 0..w {
            let gx = at(x + 1, y - 1) + 2 * at(x + 1, y) + at(x + 1, y + 1)
                - at(x - 1, y - 1)
                - 2 * at(x - 1, y)
                - at(x - 1, y + 1);
            let gy = at(x - 1, y + 1) + 2 * at(x, y + 1) + at(x + 1, y + 1)
                - at(x - 1, y - 1)
                - 2 * at(x, y - 1)
                - at(x + 1, y - 1);
            out.push((gx * gx + gy * gy) as u32);
        }
    }
    out
}

/// Fraction of the reference's strong-edge pixels that remain strong in `degraded`.
///
/// A pixel is strong when its Sobel magnitude on luma is at least `tau`.
/// Returns 1.0 when the reference has no strong edges.
pub fn edge_survival(reference: &Frame, degraded: &Frame, tau: f64) -> Result<f64, GlareError> {
    if reference.dimensions() != degraded.dimensions() {
        return Err(FrameError::DimensionMismatch {
            left: reference.dimensions(),
            right: degraded.dimensions(),
        }
        .into());
    }
    if !(tau > 0.0 && tau.is_finite()) {
        return Err(GlareError::Tau(tau));
    }
    let tau_sq = tau * tau;
    let strong = |m: u32| f64::from(m) >= tau_sq;
    let reference = sobel_magnitude_sq(&to_gray(reference));
    let degraded = sobel_magnitude_sq(&to_gray(degraded));
    let mut edges = 0u64;
    let mut kept = 0u64;
    for (&r, &d) in reference.iter().zip(&degraded) {
        if strong(r) {
            edges += 1;
            if strong(d) {
                kept += 1;
            }
        }
    }
    Ok(if edges == 0 {
        1.0
    } else {
        kept as f64 / edges as f64
    })
}

/// Visibility of one enhanced frame after glare.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MethodVisibility {
    pub method: Method,
    /// RMS luma contrast inside the roi, after glare.
    pub rms: f64,
    pub edge_survival: f64,
    /// Distinct colors inside the roi, after glare.
    pub colors: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VisibilityReport {
    pub roi: Roi,
    pub glare: GlareSpec,
    /// One entry per method, in wire-id order.
    pub methods: Vec<MethodVisibility>,
}

/// Scores every method's output on `frame` under `glare`.
pub fn evaluate_methods(
    frame: &Frame,
    roi: Roi,
    glare: &GlareSpec,
    params: &EnhanceParams,
) -> Result<VisibilityReport, GlareError> {
    roi.check(frame.width(), frame.height())?;
    let methods = Method::ALL
        .iter()
        .map(|&method| {
            let enhanced = enhance(frame, method, params)?;
            let glared = apply_glare(&enhanced, glare);
            Ok(MethodVisibility {
                method,
                rms: rms_contrast(&to_gray(&glared), roi)?,
                edge_survival: edge_survival(&enhanced, &glared, DEFAULT_EDGE_TAU)?,
                colors: distinct_colors(&glared, roi)?,
            })
        })
        .collect::<Result<Vec<_>, GlareError>>()?;
    Ok(VisibilityReport {
        roi,
        glare: *glare,
        methods,
    })
}
