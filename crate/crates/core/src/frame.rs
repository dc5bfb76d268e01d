//! Raster types shared by every operation.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Errors raised when constructing rasters or regions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FrameError {
    /// Width or height is zero.
    ZeroArea,
    /// Pixel buffer does not hold exactly `expected` bytes.
    BufferLength { expected: usize, actual: usize },
    /// Region of interest is empty or extends past the frame.
    RoiOutOfBounds { roi: Roi, width: u32, height: u32 },
    /// Two frames that must agree in size do not.
    DimensionMismatch { left: (u32, u32), right: (u32, u32) },
}

impl fmt::Display for FrameError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FrameError::ZeroArea => write!(f, "frame has zero area"),
            FrameError::BufferLength { expected, actual } => {
                write!(f, "pixel buffer holds {actual} bytes, expected {expected}")
            }
            FrameError::RoiOutOfBounds { roi, width, height } => write!(
                f,
                "roi {},{},{},{} does not fit a {width}x{height} frame",
                roi.x, roi.y, roi.w, roi.h
            ),
            FrameError::DimensionMismatch { left, right } => write!(
                f,
                "dimension mismatch: {}x{} vs {}x{}",
                left.0, left.1, right.0, right.1
            ),
        }
    }
}

impl core::error::Error for FrameError {}

fn pixel_count(width: u32, height: u32) -> Result<usize, FrameError> {
    if width == 0 || height == 0 {
        return Err(FrameError::ZeroArea);
    }
    Ok(width as usize * height as usize)
}

/// Row-major interleaved RGB8 raster.
#[derive(Clone, PartialEq, Eq)]
pub struct Frame {
    width: u32,
    height: u32,
    pixels: Vec<u8>,
}

impl fmt::Debug for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Frame")
            .field("width", &self.width)
            .field("height", &self.height)
            .finish_non_exhaustive()
    }
}

impl Frame {
    /// Wraps an existing RGB8 buffer of exactly `3 * width * height` bytes.
    pub fn from_raw(width: u32, height: u32, pixels: Vec<u8>) -> Result<Self, FrameError> {
        let expected = pixel_count(width, height)? * 3;
        if pixels.len() != expected {
            return Err(FrameError::BufferLength {
                expected,
                actual: pixels.len(),
            });
        }
        Ok(Frame {
            width,
            height,
            pixels,
        })
    }

    /// A frame filled with one color.
    pub fn filled(width: u32, height: u32, rgb: [u8; 3]) -> Result<Self, FrameError> {
        let n = pixel_count(width, height)?;
        let mut pixels = Vec::with_capacity(n * 3);
        for _ in 0..n {
            pixels.extend_from_slice(&rgb);
        }
        Ok(Frame {
            width,
            height,
            pixels,
        })
    }

    /// Builds a frame from one RGB triple per pixel, row-major.
    pub fn from_rgb(width: u32, height: u32, rgb: &[[u8; 3]]) -> Result<Self, FrameError> {
        let n = pixel_count(width, height)?;
        if rgb.len() != n {
            return Err(FrameError::BufferLength {
                expected: n * 3,
                actual: rgb.len() * 3,
            });
        }
        Ok(Frame {
            width,
            height,
            pixels: rgb.iter().flatten().copied().collect(),
        })
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn dimensions(&self) -> (u32, u32) {
        (self.width, self.height)
    }

    pub fn pixel_count(&self) -> usize {
        self.width as usize * self.height as usize
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.pixels
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.pixels
    }

    pub fn pixel(&self, x: u32, y: u32) -> [u8; 3] {
        let i = (y as usize * self.width as usize + x as usize) * 3;
        [self.pixels[i], self.pixels[i + 1], self.pixels[i + 2]]
    }

    pub fn set_pixel(&mut self, x: u32, y: u32, rgb: [u8; 3]) {
        let i = (y as usize * self.width as usize + x as usize) * 3;
        self.pixels[i..i + 3].copy_from_slice(&rgb);
    }

    /// Iterates pixels in row-major order.
    pub fn pixels(&self) -> impl ExactSizeIterator<Item = [u8; 3]> + '_ {
        self.pixels.chunks_exact(3).map(|p| [p[0], p[1], p[2]])
    }

    /// Applies `f` to every pixel, producing a frame of the same size.
    pub fn map_pixels(&self, mut f: impl FnMut([u8; 3]) -> [u8; 3]) -> Frame {
        let mut out = vec![0u8; self.pixels.len()];
        for (dst, src) in out.chunks_exact_mut(3).zip(self.pixels.chunks_exact(3)) {
            dst.copy_from_slice(&f([src[0], src[1], src[2]]));
        }
        Frame {
            width: self.width,
            height: self.height,
            pixels: out,
        }
    }

    /// Copies out the pixels of `roi`.
    pub fn crop(&self, roi: Roi) -> Result<Frame, FrameError> {
        roi.check(self.width, self.height)?;
        let mut pixels = Vec::with_capacity(roi.w as usize * roi.h as usize * 3);
        let stride = self.width as usize * 3;
        for y in roi.y..roi.y + roi.h {
            let start = y as usize * stride + roi.x as usize * 3;
            pixels.extend_from_slice(&self.pixels[start..start + roi.w as usize * 3]);
        }
        Ok(Frame {
            width: roi.w,
            height: roi.h,
            pixels,
        })
    }

    pub fn full_roi(&self) -> Roi {
        Roi {
            x: 0,
            y: 0,
            w: self.width,
            h: self.height,
        }
    }
}

/// Row-major 8-bit luma raster.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrayFrame {
    width: u32,
    height: u32,
    pixels: Vec<u8>,
}

impl GrayFrame {
    pub fn from_raw(width: u32, height: u32, pixels: Vec<u8>) -> Result<Self, FrameError> {
        let expected = pixel_count(width, height)?;
        if pixels.len() != expected {
            return Err(FrameError::BufferLength {
                expected,
                actual: pixels.len(),
            });
        }
        Ok(GrayFrame {
            width,
            height,
            pixels,
        })
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.pixels
    }

    pub fn get(&self, x: u32, y: u32) -> u8 {
        self.pixels[y as usize * self.width as usize + x as usize]
    }

    /// Luma values of `roi`, row-major.
    pub fn roi_values(&self, roi: Roi) -> Result<impl Iterator<Item = u8> + '_, FrameError> {
        roi.check(self.width, self.height)?;
        let w = self.width as usize;
        Ok((roi.y..roi.y + roi.h).flat_map(move |y| {
            let start = y as usize * w + roi.x as usize;
            self.pixels[start..start + roi.w as usize].iter().copied()
        }))
    }
}

/// Rectangular region of interest, zero-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Roi {
    pub x: u32,
    pub y: u32,
    pub w: u32,
    pub h: u32,
}

impl Roi {
    pub fn new(x: u32, y: u32, w: u32, h: u32) -> Self {
        Roi { x, y, w, h }
    }

    /// Verifies that the region is non-empty and lies inside a `width`x`height` frame.
    pub fn check(&self, width: u32, height: u32) -> Result<(), FrameError> {
        let fits = self.w >= 1
            && self.h >= 1
            && u64::from(self.x) + u64::from(self.w) <= u64::from(width)
            && u64::from(self.y) + u64::from(self.h) <= u64::from(height);
        if fits {
            Ok(())
        } else {
            Err(FrameError::RoiOutOfBounds {
                roi: *self,
                width,
                height,
            })
        }
    }
}
