//! Pointwise fixed-level posterizations.

use crate::frame::Frame;
use crate::gray::luma;
use crate::method::EnhanceParams;

const BLACK: [u8; 3] = [0, 0, 0];
const WHITE: [u8; 3] = [255, 255, 255];

#[inline]
fn high(value: u8, midpoint: u16) -> u8 {
    if u16::from(value) >= midpoint {
        255
    } else {
        0
    }
}

/// Black or white by comparing luma against `params.midpoint`.
pub fn gray_threshold(frame: &Frame, params: &EnhanceParams) -> Frame {
    let mid = params.midpoint;
    frame.map_pixels(|p| {
        if u16::from(luma(p)) >= mid {
            WHITE
        } else {
            BLACK
        }
    })
}

/// Thresholds each channel independently, yielding a color-cube corner.
pub fn rgb_threshold(frame: &Frame, params: &EnhanceParams) -> Frame {
    let mid = params.midpoint;
    frame.map_pixels(|[r, g, b]| [high(r, mid), high(g, mid), high(b, mid)])
}

/// Saturates the largest channel and zeroes the other two. Ties go to R, then G.
pub fn rgb_max(frame: &Frame, _params: &EnhanceParams) -> Frame {
    frame.map_pixels(|[r, g, b]| {
        if r >= g && r >= b {
            [255, 0, 0]
        } else if g >= b {
            [0, 255, 0]
        } else {
            [0, 0, 255]
        }
    })
}
